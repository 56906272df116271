//! Certify that every isomorphism between copies of K4 or K222 extends to
//! an automorphism, and show the certifier rejects a smaller group.

use fano42::construct;
use fano42::graph::{reference, Permutation};
use fano42::symmetry;

fn main() -> fano42::Result<()> {
    let g = construct::g();
    let sym = symmetry::group(g)?;
    let perms: Vec<Permutation> = sym.table.perms().cloned().collect();
    for (t, name) in [(reference::k4(), "K4"), (reference::k222(), "K222")] {
        let c = symmetry::uh_certify(g.graph(), &t, name, &perms)?;
        println!("{name}: {} copies, {} isomorphisms checked, {} fail", c.copies, c.isomorphisms_checked, c.failures);
    }

    let smaller = symmetry::mutated_group(g, &[15, 16])?;
    let perms: Vec<Permutation> = smaller.perms().cloned().collect();
    let c = symmetry::uh_certify(g.graph(), &reference::k4(), "K4", &perms)?;
    println!("without τ15, τ16: group of order {}, {} failures", smaller.order(), c.failures);
    if let Some((from, to, map)) = c.counterexamples.first() {
        println!("  e.g. {from:?} -> {to:?} via {map:?} does not extend");
    }

    let k4 = symmetry::h_n_m_certify(g.graph(), &reference::k4(), "K4");
    let oct = symmetry::h_n_m_certify(g.graph(), &reference::k222(), "K222");
    println!("{{K4}}: n = {}, m = {:?}; {{K222}}: n = {}, m = {:?}", k4.n, k4.m, oct.n, oct.m);
    Ok(())
}
