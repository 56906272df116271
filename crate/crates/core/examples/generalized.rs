//! The pencil construction over P(r-1, 2). Usage: `generalized [r] [sigma]`.

use fano42::generalized::{generalized_build, DEFAULT_COMPONENT_CAP};

fn main() -> fano42::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (r, sigma) = (args.first().copied().unwrap_or(4), args.get(1).copied().unwrap_or(1));
    let out = generalized_build(r, sigma, DEFAULT_COMPONENT_CAP)?;
    println!("{}", serde_json::to_string_pretty(&out.report)?);
    for name in out.names.iter().take(3) {
        println!("{name}");
    }
    Ok(())
}
