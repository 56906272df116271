use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fano42::export::{self, Format};
use fano42::generalized::{generalized_build, DEFAULT_COMPONENT_CAP};
use fano42::graph::Permutation;
use fano42::report::verify_all;
use fano42::{construct, query, symmetry, Error};

#[derive(Parser)]
#[command(name = "fano42", version, about = "The 42 ordered pencils of the Fano plane and their graph")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check and print one line per check
    Verify {
        /// Also write the JSON report here (`-` for stdout only)
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Write a named graph, e.g. `g`, `levi-42-4`, `torus 5 c`, `star 123`, `lq 4`
    Export {
        #[arg(required = true, num_args = 1..)]
        name: Vec<String>,
        #[arg(long, default_value = "adj")]
        format: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Answer a single lookup: neighbors, strong, weak, copies-at,
    /// fastened-pair, hole-label, stabilizer-order
    Query { kind: String, args: Vec<String> },
    /// Explore the pencil graph over P(r-1, 2)
    Generalize {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        sigma: usize,
        #[arg(long, default_value_t = DEFAULT_COMPONENT_CAP)]
        cap: usize,
    },
    /// Look for a subgroup of Aut(G) acting regularly on the vertices
    CayleySearch {
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
}

enum Failure {
    Usage(Error),
    Verification(String),
    Internal(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::InvalidPoint(_)
            | Error::InvalidLine(_)
            | Error::InvalidPencil(_)
            | Error::NotAdjacent(..)
            | Error::Unsupported(_) => Failure::Usage(e),
            _ => Failure::Internal(e),
        }
    }
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Internal(e.into()))
}

/// Runs one command, appending its standard output to `out`.
fn run(cli: Cli, out: &mut String) -> Result<(), Failure> {
    match cli.command {
        Command::Verify { json } => {
            let report = verify_all()?;
            for c in &report.checks {
                writeln!(out, "{:<18} {}: {}", c.verdict.as_str(), c.id, c.computed).unwrap();
            }
            let s = &report.summary;
            writeln!(out, "{} pass, {} fail, {} discrepancy-noted", s.pass, s.fail, s.discrepancy_noted).unwrap();
            if let Some(p) = json {
                if p.as_os_str() == "-" {
                    out.push_str(&report.to_json());
                } else {
                    write_file(&p, &report.to_json())?;
                }
            }
            let failed: Vec<&str> = report.failed().map(|c| c.id.as_str()).collect();
            if !failed.is_empty() {
                return Err(Failure::Verification(failed.join(", ")));
            }
        }
        Command::Export { name, format, output } => {
            let format: Format = format.parse()?;
            let ng = export::named_graph(&name.join("-").to_lowercase())?;
            let text = export::render(&ng, format);
            match output {
                Some(p) if p.as_os_str() != "-" => write_file(&p, &text)?,
                _ => out.push_str(&text),
            }
        }
        Command::Query { kind, args } => {
            writeln!(out, "{}", query::run(construct::g(), &kind, &args)?).unwrap();
        }
        Command::Generalize { r, sigma, cap } => {
            let built = generalized_build(r, sigma, cap)?;
            let s = serde_json::to_string_pretty(&built.report).map_err(|e| Failure::Internal(e.into()))?;
            writeln!(out, "{s}").unwrap();
        }
        Command::CayleySearch { budget } => {
            let g = construct::g();
            let sym = symmetry::group(g)?;
            let c = symmetry::cayley_search(&sym.table, budget);
            writeln!(out, "{}", c.verdict()).unwrap();
            writeln!(out, "candidates {}, cyclic subgroups {}, subsets closed {}", c.candidates, c.cyclic_subgroups, c.subsets_closed).unwrap();
            if let Some(s) = &c.witness_structure {
                writeln!(out, "structure {s}").unwrap();
            }
            if let Some(orders) = &c.witness_element_orders {
                let o: Vec<String> = orders.iter().map(|(k, v)| format!("{k}:{v}")).collect();
                writeln!(out, "element orders {}", o.join(" ")).unwrap();
            }
            for images in c.witness_generators.iter().flatten() {
                let p = Permutation::from_images(images.clone())?;
                let cycles: Vec<String> = p
                    .cycles()
                    .iter()
                    .filter(|c| c.len() > 1)
                    .map(|c| format!("({})", c.iter().map(|&v| g.name(v)).collect::<Vec<_>>().join(" ")))
                    .collect();
                writeln!(out, "generator {}", cycles.join("")).unwrap();
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut out = String::new();
    let result = run(cli, &mut out);
    print!("{out}");
    ExitCode::from(exit_code(result))
}

fn exit_code(result: Result<(), Failure>) -> u8 {
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            2
        }
        Err(Failure::Verification(ids)) => {
            eprintln!("failed checks: {ids}");
            1
        }
        Err(Failure::Internal(e)) => {
            eprintln!("error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (u8, String) {
        let cli = match Cli::try_parse_from(std::iter::once("fano42").chain(args.iter().copied())) {
            Ok(cli) => cli,
            Err(_) => return (2, String::new()),
        };
        let mut out = String::new();
        let code = exit_code(run(cli, &mut out));
        (code, out)
    }

    #[test]
    fn query_examples() {
        assert_eq!(call(&["query", "weak", "1^a", "2^a"]), (0, "3_a\n".into()));
        assert_eq!(call(&["query", "fastened-pair", "7^f", "5^a"]), (0, "[257]_b, ⟨426⟩\n".into()));
        let (code, out) = call(&["query", "copies-at", "7^f"]);
        assert_eq!(code, 0);
        assert!(out.ends_with("/ [347]_a [257]_b [167]_c\n"));
    }

    #[test]
    fn export_examples() {
        let (code, adj) = call(&["export", "G", "--format", "adj"]);
        assert_eq!(code, 0);
        assert_eq!(adj.lines().count(), 42);
        assert!(adj.lines().all(|l| l.split(' ').count() == 13));
        let (_, levi) = call(&["export", "levi-42-4", "--format", "adj"]);
        assert_eq!(levi.lines().count(), 84);
        assert!(levi.lines().all(|l| l.rsplit(": ").next().unwrap().split(' ').count() == 4));
        let (_, dot) = call(&["export", "torus", "5", "c", "--format", "dot"]);
        for v in ["1^b", "2^a", "3^a"] {
            assert!(dot.contains(&format!("\"{v}\"")));
        }
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["export", "nope"]).0, 2);
        assert_eq!(call(&["export", "g", "--format", "xml"]).0, 2);
        assert_eq!(call(&["query", "neighbors", "8^a"]).0, 2);
        assert_eq!(call(&["query", "weak", "1^a", "1^b"]).0, 2);
        assert_eq!(call(&["generalize", "--r", "6", "--sigma", "1"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
    }

    #[test]
    fn generalize_fano_case() {
        let (code, out) = call(&["generalize", "--r", "3", "--sigma", "1"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!((v["component_order"].as_u64(), v["component_size"].as_u64()), (Some(42), Some(252)));
    }

    #[test]
    fn cayley_search_reports_witness() {
        let (code, out) = call(&["cayley-search"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("regular subgroup of order 42 found"));
        assert_eq!(out.lines().filter(|l| l.starts_with("generator ")).count(), 2);
    }

    #[test]
    fn verify_exit_code_tracks_failures() {
        let (code, out) = call(&["verify"]);
        let summary = out.lines().last().unwrap();
        let failed = !summary.contains(" 0 fail");
        assert_eq!(code, if failed { 1 } else { 0 });
    }
}
