//! The 42 tetrahedra and 21 octahedra of G and how they fasten each edge.

use fano42::census::{self, Census};
use fano42::construct;
use fano42::query;

fn main() -> fano42::Result<()> {
    let g = construct::g();
    let census = Census::build(g)?;
    println!("{} tetrahedra, {} octahedra", census.tetrahedra.len(), census.octahedra.len());

    let v = g.parse_vertex("7^f")?;
    let (tets, octs) = query::copies_at(g, &census, v)?;
    println!("at 7^f: {} / {}", tets.join(" "), octs.join(" "));

    let pairs = census::fastened_certificate(g, &census)?;
    println!("{} edges, each in exactly one tetrahedron and one octahedron", pairs.len());
    let u = g.parse_vertex("5^a")?;
    let (o, t) = query::fastened_pair(g, &census, v, u)?;
    println!("edge 7^f 5^a lies in {o} and {t}");
    Ok(())
}
