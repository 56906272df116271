//! Projecting G onto base points gives a 6-fold cover of 2K7.

use fano42::construct;

fn main() -> fano42::Result<()> {
    let g = construct::g();
    let q = construct::quotient_unordered(g)?;
    for (p, fiber) in q.fibers.iter().enumerate() {
        let names: Vec<String> = fiber.iter().map(|&v| g.name(v)).collect();
        println!("over {}: {}", p + 1, names.join(" "));
    }
    println!("quotient is 2K7: {}", q.is_two_k7);
    println!("edge ends biject at every vertex: {}", q.local_bijection);
    Ok(())
}
