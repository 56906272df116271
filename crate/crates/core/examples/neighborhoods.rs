//! Every open neighbourhood of G is the hemi-rhombicuboctahedron graph.

use fano42::census;
use fano42::construct;
use fano42::graph::reference;

fn main() -> fano42::Result<()> {
    let g = construct::g();
    let labels = reference::lambda_labels();
    let r = census::neighborhood_analysis(g, g.parse_vertex("1^a")?)?;
    println!("N(1^a): {} vertices, |Aut| = {}", r.neighbors.len(), r.automorphism_order);
    for (label, &w) in labels.iter().zip(&r.iso_to_lambda) {
        println!("  {label} -> {}", g.name(w));
    }
    let tri: Vec<String> = r
        .triangles
        .iter()
        .map(|t| t.iter().map(|&i| g.name(r.neighbors[i])).collect::<Vec<_>>().join(","))
        .collect();
    println!("triangles: {}", tri.join("  "));
    println!("4-holes: {} touching the triangles, {} apart", r.four_holes_touching.len(), r.four_holes_apart.len());

    let all = (0..g.order()).all(|v| {
        census::neighborhood_analysis(g, v).is_ok_and(|r| r.automorphism_order == 24)
    });
    println!("all 42 neighbourhoods isomorphic to it: {all}");
    Ok(())
}
