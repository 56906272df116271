//! Build G from ordered Fano pencils and look at one vertex.

use fano42::construct;
use fano42::graph::{diameter, girth};

fn main() -> fano42::Result<()> {
    let g = construct::g();
    let gr = g.graph();
    println!("order {}, size {}, degree {:?}", gr.order(), gr.size(), gr.regular_degree());
    println!("diameter {}, girth {}", diameter(gr)?, girth(gr)?);

    let v = g.parse_vertex("1^a")?;
    println!("neighbours of {} = {}:", g.name(v), g.vertex(v));
    for &w in g.neighbors(v) {
        println!("  {:<4} {}  strong {}  weak {}", g.name(w), g.vertex(w), g.strong(v, w)?, g.weak(v, w)?);
    }

    let path: Vec<String> = construct::diameter_witness(g)?.iter().map(|&v| g.name(v)).collect();
    println!("a diameter path: {}", path.join(" "));
    Ok(())
}
