//! Search Aut(G) for a subgroup of order 42 acting regularly on vertices.

use fano42::construct;
use fano42::symmetry;

fn main() -> fano42::Result<()> {
    let sym = symmetry::group(construct::g())?;
    let c = symmetry::cayley_search(&sym.table, 1_000_000);
    println!("{}", c.verdict());
    println!("{} semiregular candidates in {} cyclic subgroups", c.candidates, c.cyclic_subgroups);
    if let (Some(s), Some(o)) = (&c.witness_structure, &c.witness_element_orders) {
        println!("witness {s}, element orders {o:?}, abelian {:?}", c.witness_abelian);
    }
    Ok(())
}
