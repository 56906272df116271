//! Fano-labelled six-holes, the tori [w]_d and the stars [xyz].

use fano42::census::Census;
use fano42::construct;
use fano42::fano::{Point, Position};
use fano42::holes_tori;

fn main() -> fano42::Result<()> {
    let g = construct::g();
    let census = Census::build(g)?;
    let six = holes_tori::label_six_holes(g, &census)?;
    println!("{} six-holes in all, {} labelled by a line, a position and a centre", six.total_six_holes, six.len());

    let t = holes_tori::torus(g, &census, &six, Point::new(5)?, Position::C)?;
    let holes: Vec<String> = t.holes.iter().map(|h| h.to_string()).collect();
    println!("{}: holes {}", t.name(), holes.join(" "));
    println!("  {} vertices, {} edges, {} triangles", t.vertices.len(), t.edges.len(), t.triangles.len());
    let c = holes_tori::torus_closure(g, &census, &t);
    println!("  closure adds {} tetrahedra, {} edges induced", c.tetrahedra.len(), c.induced_edges);

    for s in holes_tori::all_stars(&six)? {
        println!("{}: {} vertices, {} edges", s.name(), s.vertices.len(), s.edges.len());
    }
    Ok(())
}
