//! Single lookups in the notation of ordered pencils and lines.

use crate::census::{self, Census};
use crate::construct::ColoredGraph;
use crate::error::{Error, Result};
use crate::fano::{Line, OrderedLine, Point, Position};
use crate::holes_tori::{self, SixHoleLabel};
use crate::symmetry;

pub const KINDS: &[&str] = &[
    "neighbors",
    "strong",
    "weak",
    "copies-at",
    "fastened-pair",
    "hole-label",
    "stabilizer-order",
];

/// Labels of the tetrahedra (sorted) and octahedra (by position) at `v`.
pub fn copies_at(g: &ColoredGraph, census: &Census, v: usize) -> Result<(Vec<String>, Vec<String>)> {
    let c = census::incident_copies(g, census, v)?;
    let tets = c.tetrahedra.iter().map(|&t| census.tetrahedron(t).label()).collect();
    let octs = c.octahedra.iter().map(|&(l, j)| census.octahedron(l, j).label()).collect();
    Ok((tets, octs))
}

/// The K222 and K4 containing the edge `uv`.
pub fn fastened_pair(g: &ColoredGraph, census: &Census, u: usize, v: usize) -> Result<(String, String)> {
    g.edge(u, v)?;
    let missing = |what: &str| Error::verification("fastened_pair", format!("no {what} on edge {}-{}", g.name(u), g.name(v)));
    let o = census.octahedron_of_edge(g.graph(), u, v).ok_or_else(|| missing("octahedron"))?;
    let t = census.tetrahedron_of_edge(u, v).ok_or_else(|| missing("tetrahedron"))?;
    Ok((census.octahedra[o].label(), census.tetrahedra[t].label()))
}

/// Parses `xyz_d^w`.
pub fn parse_hole_label(s: &str) -> Result<SixHoleLabel> {
    let err = || Error::Parse {
        kind: "six-hole label",
        input: s.to_string(),
    };
    let (line, rest) = s.split_once('_').ok_or_else(err)?;
    let (d, w) = rest.split_once('^').ok_or_else(err)?;
    let line: Line = line.parse()?;
    let position: Position = d.parse()?;
    let center = Point::new(w.parse().map_err(|_| err())?)?;
    if line.contains(center) {
        return Err(err());
    }
    Ok(SixHoleLabel {
        line,
        position,
        center,
    })
}

/// Expands a vertex name, `⟨xyz⟩` / `<xyz>` or `[xyz]_d` into vertex ids.
pub fn parse_object(g: &ColoredGraph, census: &Census, s: &str) -> Result<Vec<usize>> {
    if let Some(inner) = s
        .strip_prefix('⟨')
        .and_then(|r| r.strip_suffix('⟩'))
        .or_else(|| s.strip_prefix('<').and_then(|r| r.strip_suffix('>')))
    {
        let o: OrderedLine = inner.parse()?;
        return Ok(census.tetrahedron(o).vertices.to_vec());
    }
    if let Some(rest) = s.strip_prefix('[') {
        let (line, d) = rest.split_once("]_").ok_or_else(|| Error::Parse {
            kind: "octahedron",
            input: s.to_string(),
        })?;
        return Ok(census.octahedron(line.parse()?, d.parse()?).vertices.to_vec());
    }
    Ok(vec![g.parse_vertex(s)?])
}

fn arity(kind: &str, args: &[String], n: usize) -> Result<()> {
    if args.len() == n {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("{kind} takes {n} argument(s), got {}", args.len())))
    }
}

/// Answers one query; the result is a single line of text.
pub fn run(g: &ColoredGraph, kind: &str, args: &[String]) -> Result<String> {
    match kind {
        "neighbors" => {
            arity(kind, args, 1)?;
            let v = g.parse_vertex(&args[0])?;
            Ok(g.neighbors(v).iter().map(|&w| g.name(w)).collect::<Vec<_>>().join(" "))
        }
        "strong" => {
            arity(kind, args, 2)?;
            let (u, v) = (g.parse_vertex(&args[0])?, g.parse_vertex(&args[1])?);
            Ok(g.strong(u, v)?.to_string())
        }
        "weak" => {
            arity(kind, args, 2)?;
            let (u, v) = (g.parse_vertex(&args[0])?, g.parse_vertex(&args[1])?);
            Ok(g.weak(u, v)?.to_string())
        }
        "copies-at" => {
            arity(kind, args, 1)?;
            let census = Census::build(g)?;
            let (t, o) = copies_at(g, &census, g.parse_vertex(&args[0])?)?;
            Ok(format!("{} / {}", t.join(" "), o.join(" ")))
        }
        "fastened-pair" => {
            arity(kind, args, 2)?;
            let census = Census::build(g)?;
            let (u, v) = (g.parse_vertex(&args[0])?, g.parse_vertex(&args[1])?);
            let (o, t) = fastened_pair(g, &census, u, v)?;
            Ok(format!("{o}, {t}"))
        }
        "hole-label" => {
            arity(kind, args, 1)?;
            let label = parse_hole_label(&args[0])?;
            let census = Census::build(g)?;
            let six = holes_tori::label_six_holes(g, &census)?;
            let h = six.get(label);
            let verts: Vec<String> = h.hole.vertices().iter().map(|&v| g.name(v)).collect();
            let weak: Vec<String> = h.weak_cycle.iter().map(|c| c.to_string()).collect();
            Ok(format!("{} / {}", verts.join(" "), weak.join(" ")))
        }
        "stabilizer-order" => {
            if args.is_empty() {
                return Err(Error::Unsupported("stabilizer-order needs at least one object".into()));
            }
            let census = Census::build(g)?;
            let mut set = Vec::new();
            for a in args {
                set.extend(parse_object(g, &census, a)?);
            }
            set.sort_unstable();
            set.dedup();
            let sym = symmetry::group(g)?;
            Ok(sym.table.setwise_stabilizer(&set).len().to_string())
        }
        _ => Err(Error::Unsupported(format!(
            "unknown query {kind:?}; known: {}",
            KINDS.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    fn q(kind: &str, args: &[&str]) -> Result<String> {
        let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        run(construct::g(), kind, &args)
    }

    #[test]
    fn printed_examples() {
        assert_eq!(q("weak", &["1^a", "2^a"]).unwrap(), "3_a");
        assert_eq!(q("fastened-pair", &["7^f", "5^a"]).unwrap(), "[257]_b, ⟨426⟩");
        let c = q("copies-at", &["7^f"]).unwrap();
        let (t, o) = c.split_once(" / ").unwrap();
        let mut t: Vec<&str> = t.split(' ').collect();
        t.sort_unstable();
        assert_eq!(t, ["⟨321⟩", "⟨356⟩", "⟨426⟩", "⟨451⟩"]);
        assert_eq!(o, "[347]_a [257]_b [167]_c");
    }

    #[test]
    fn stabilizers() {
        assert_eq!(q("stabilizer-order", &["1^a"]).unwrap(), "24");
        assert_eq!(q("stabilizer-order", &["1^a", "2^a"]).unwrap(), "4");
        assert_eq!(q("stabilizer-order", &["[123]_a"]).unwrap(), "48");
        assert_eq!(q("stabilizer-order", &["<347>"]).unwrap(), "24");
    }

    #[test]
    fn holes_by_label() {
        let out = q("hole-label", &["123_c^5"]).unwrap();
        assert_eq!(out.split(" / ").next().unwrap().split(' ').count(), 6);
        assert!(parse_hole_label("123_c^1").is_err());
        assert!(parse_hole_label("124_c^5").is_err());
    }

    #[test]
    fn malformed_input_is_rejected() {
        assert!(q("weak", &["1^a", "1^b"]).is_err());
        assert!(q("neighbors", &["8^a"]).is_err());
        assert!(q("neighbors", &[]).is_err());
        assert!(q("bogus", &[]).is_err());
    }
}
