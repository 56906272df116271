//! Write named graphs in every format. Usage: `export [name] [format]`.

use fano42::export::{named_graph, render, Format};

fn main() -> fano42::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let name = args.first().map_or("torus-5-c", String::as_str);
    let format: Format = args.get(1).map_or("dot", String::as_str).parse()?;
    print!("{}", render(&named_graph(name)?, format));
    Ok(())
}
