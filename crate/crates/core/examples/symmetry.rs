//! Aut(G) from the sixteen generators, checked against an independent search.

use fano42::census::Census;
use fano42::construct;
use fano42::symmetry;

fn main() -> fano42::Result<()> {
    let g = construct::g();
    let sym = symmetry::group(g)?;
    println!("|Aut(G)| by search: {}", sym.searched.order());
    println!("closure of the generators: {} (equal: {})", sym.table.order(), sym.matches_search);
    for (i, e) in sym.generators.iter().enumerate() {
        if let Some(d) = e.decomposition {
            println!("  τ{:<2} {d}", i + 1);
        }
    }

    let census = Census::build(g)?;
    for r in symmetry::printed_stabilizers(g, &census, &sym.table, &sym.generators)? {
        println!(
            "stabilizer of {}: order {}, {} cosets, printed generators give order {}",
            r.name, r.order, r.cosets, r.printed_generated_order
        );
    }
    Ok(())
}
