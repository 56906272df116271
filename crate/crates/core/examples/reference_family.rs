//! Line graphs of cubes as the textbook {Kd, K22}-ultrahomogeneous family.

use fano42::graph::{automorphism_group, reference, SearchOptions, DEFAULT_ELEMENT_CAP};
use fano42::symmetry;

fn main() -> fano42::Result<()> {
    for d in 2..=5 {
        let l = reference::line_graph_of_cube(d);
        let kd = symmetry::h_n_m_certify(&l, &reference::complete(d), "Kd");
        let sq = symmetry::h_n_m_certify(&l, &reference::k22(), "K22");
        println!(
            "L(Q{d}): {} vertices; K{d}: n = {}, m = {:?}; K22: n = {}, m = {:?}",
            l.order(),
            kd.n,
            kd.m,
            sq.n,
            sq.m
        );
    }

    let co = reference::line_graph_of_cube(3);
    let perms = automorphism_group(&co, &SearchOptions::default())?
        .elements(DEFAULT_ELEMENT_CAP)
        .unwrap_or_default();
    let all = symmetry::uh_certify(&co, &reference::cycle(6), "C6", &perms)?;
    println!("cuboctahedron: {} induced 6-cycles, {} of {} isomorphisms fail to extend", all.copies, all.failures, all.isomorphisms_checked);
    let great = symmetry::uh_certify_family(&co, &reference::cycle(6), "C6", &reference::cuboctahedron_great_hexagons(), &perms)?;
    println!("the {} great hexagons alone: {} failures", great.copies, great.failures);
    Ok(())
}
