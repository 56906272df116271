//! Configurations built from G, with their Levi and Menger graphs.

use fano42::census::Census;
use fano42::construct;
use fano42::graph::SearchOptions;
use fano42::incidence::{self, ConfigurationReport};

fn show(r: &ConfigurationReport) {
    let l = &r.levi;
    println!(
        "{}: {} points, {} blocks, degrees {:?}/{:?}",
        r.name, r.points, r.blocks, r.point_degree, r.block_degree
    );
    println!(
        "  Levi: diameter {:?}, girth {:?}, |Aut| {}, 2-arc-transitive {}, semisymmetric {}",
        l.diameter, l.girth, l.automorphism_order, l.two_arc_transitive, l.semisymmetric
    );
    for d in &l.distributions {
        println!("  distance distribution {:?} ({} points, {} blocks)", d.counts, d.points, d.blocks);
    }
    println!("  Menger |Aut| {}, dual Menger |Aut| {}, self-dual {}", r.menger.automorphism_order, r.dual_menger.automorphism_order, r.self_dual);
}

fn main() -> fano42::Result<()> {
    let g = construct::g();
    let census = Census::build(g)?;
    let opts = SearchOptions::default();

    let r = incidence::report_42_4(g, &census, &opts)?;
    show(&r.report);
    println!("  Menger graph isomorphic to G: {}", r.menger_isomorphic_to_g);
    for p in &r.diameter_paths {
        println!("  {}", p.join(" "));
    }

    show(&incidence::configuration_report(&incidence::config_168_6(g, &census), &opts)?);
    show(&incidence::configuration_report(&incidence::config_tetra_octa(g, &census), &opts)?);
    Ok(())
}
