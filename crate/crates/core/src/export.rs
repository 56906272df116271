//! Named graphs and their serialization as DOT, GraphML, adjacency lists
//! and JSON.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::census::Census;
use crate::construct::{self, ColoredGraph};
use crate::error::{Error, Result};
use crate::fano::{Line, Point, Position};
use crate::graph::{reference, Graph};
use crate::holes_tori;
use crate::incidence;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Dot,
    Graphml,
    Adj,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(Format::Dot),
            "graphml" => Ok(Format::Graphml),
            "adj" => Ok(Format::Adj),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse {
                kind: "export format",
                input: s.to_string(),
            }),
        }
    }
}

/// Edge attributes, as ordered key/value pairs.
pub type Attrs = Vec<(String, String)>;

/// A graph with vertex labels and optional per-edge attributes.
#[derive(Clone, Debug)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
    pub labels: Vec<String>,
    /// Parallel to `graph.edges()` when present.
    pub edge_attrs: Option<Vec<Attrs>>,
}

impl NamedGraph {
    fn plain(name: impl Into<String>, graph: Graph, labels: Vec<String>) -> Self {
        NamedGraph {
            name: name.into(),
            graph,
            labels,
            edge_attrs: None,
        }
    }

    fn numbered(name: impl Into<String>, graph: Graph) -> Self {
        let labels = (0..graph.order()).map(|i| i.to_string()).collect();
        Self::plain(name, graph, labels)
    }

    fn sub(name: String, g: &ColoredGraph, vertices: &[usize], edges: &[(usize, usize)]) -> Result<Self> {
        let graph = Graph::edge_subgraph(vertices, edges)?;
        let labels = vertices.iter().map(|&v| g.name(v)).collect();
        Ok(Self::plain(name, graph, labels))
    }
}

/// Names accepted by [`named_graph`].
pub const NAMES: &[&str] = &[
    "g",
    "g-dual",
    "quotient",
    "levi-42-4",
    "levi-168-6",
    "menger-42-4",
    "menger-168-6",
    "dual-menger-168-6",
    "torus-<w>-<d>",
    "star-<xyz>",
    "lambda",
    "st4",
    "lq-<d>",
];

fn colored_g(g: &ColoredGraph) -> NamedGraph {
    let attrs = g
        .graph()
        .edges()
        .map(|(u, v)| {
            let e = g.edge(u, v).expect("edge of G");
            vec![
                ("strong".to_string(), e.strong.to_string()),
                ("weak".to_string(), e.weak.to_string()),
            ]
        })
        .collect();
    NamedGraph {
        name: "g".into(),
        graph: g.graph().clone(),
        labels: g.names(),
        edge_attrs: Some(attrs),
    }
}

fn unknown(name: &str) -> Error {
    Error::Unsupported(format!("unknown graph {name:?}; known: {}", NAMES.join(", ")))
}

/// Builds a graph by name, e.g. `g`, `torus-5-c`, `star-123`, `lq-4`.
pub fn named_graph(name: &str) -> Result<NamedGraph> {
    let g = construct::g();
    let census = || Census::build(g);
    let out = match name {
        "g" => colored_g(g),
        "g-dual" => {
            let d = construct::build_g_dual(g)?;
            let labels = crate::fano::OrderedLine::all().iter().map(|o| o.to_string()).collect();
            NamedGraph::plain(name, d.graph, labels)
        }
        "quotient" => {
            let q = construct::quotient_unordered(g)?;
            let graph = q.multigraph.support();
            let attrs = graph
                .edges()
                .map(|(u, v)| vec![("multiplicity".to_string(), q.multigraph.multiplicity(u, v).to_string())])
                .collect();
            NamedGraph {
                name: name.into(),
                labels: Point::all().map(|p| p.to_string()).collect(),
                graph,
                edge_attrs: Some(attrs),
            }
        }
        "levi-42-4" | "menger-42-4" | "levi-168-6" | "menger-168-6" | "dual-menger-168-6" => {
            let census = census()?;
            let c = if name.ends_with("42-4") {
                incidence::config_42_4(g, &census)
            } else {
                incidence::config_168_6(g, &census)
            };
            if name.starts_with("levi") {
                NamedGraph::plain(name, c.levi(), c.levi_names())
            } else if name.starts_with("dual") {
                NamedGraph::plain(name, c.dual_menger(), c.blocks.clone())
            } else {
                NamedGraph::plain(name, c.menger(), c.points.clone())
            }
        }
        "lambda" => NamedGraph::plain(name, reference::lambda_hemi(), reference::lambda_labels()),
        "st4" => NamedGraph::plain(name, reference::st4(), reference::st4_labels()),
        _ => {
            let parts: Vec<&str> = name.split('-').collect();
            match parts.as_slice() {
                ["torus", w, d] => {
                    let census = census()?;
                    let six = holes_tori::label_six_holes(g, &census)?;
                    let w = Point::new(w.parse().map_err(|_| unknown(name))?)?;
                    let d: Position = d.parse()?;
                    let t = holes_tori::torus(g, &census, &six, w, d)?;
                    NamedGraph::sub(name.into(), g, &t.vertices, &t.edges)?
                }
                ["star", xyz] => {
                    let census = census()?;
                    let six = holes_tori::label_six_holes(g, &census)?;
                    let line: Line = xyz.parse()?;
                    let s = holes_tori::star(&six, line)?;
                    NamedGraph::sub(name.into(), g, &s.vertices, &s.edges)?
                }
                ["lq", d] => {
                    let d: usize = d.parse().map_err(|_| unknown(name))?;
                    if !(2..=6).contains(&d) {
                        return Err(Error::Unsupported(format!("lq-{d}: cube dimension must be 2..=6")));
                    }
                    NamedGraph::plain(
                        name,
                        reference::line_graph_of_cube(d),
                        reference::line_graph_of_cube_labels(d),
                    )
                }
                _ => return Err(unknown(name)),
            }
        }
    };
    Ok(out)
}

/// Any graph, labelled by vertex index.
pub fn from_graph(name: &str, graph: Graph) -> NamedGraph {
    NamedGraph::numbered(name, graph)
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

#[derive(Serialize)]
struct JsonEdge<'a> {
    source: &'a str,
    target: &'a str,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    attributes: Vec<(&'a str, &'a str)>,
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    name: &'a str,
    order: usize,
    size: usize,
    vertices: &'a [String],
    edges: Vec<JsonEdge<'a>>,
}

pub fn render(ng: &NamedGraph, format: Format) -> String {
    let edges: Vec<(usize, usize)> = ng.graph.edges().collect();
    let attrs = |i: usize| -> &[(String, String)] {
        ng.edge_attrs.as_ref().map(|a| a[i].as_slice()).unwrap_or(&[])
    };
    let mut s = String::new();
    match format {
        Format::Dot => {
            writeln!(s, "graph \"{}\" {{", dot_escape(&ng.name)).unwrap();
            for (i, l) in ng.labels.iter().enumerate() {
                writeln!(s, "  {i} [label=\"{}\"];", dot_escape(l)).unwrap();
            }
            for (i, &(u, v)) in edges.iter().enumerate() {
                let a: Vec<String> = attrs(i)
                    .iter()
                    .map(|(k, x)| format!("{k}=\"{}\"", dot_escape(x)))
                    .collect();
                if a.is_empty() {
                    writeln!(s, "  {u} -- {v};").unwrap();
                } else {
                    writeln!(s, "  {u} -- {v} [{}];", a.join(", ")).unwrap();
                }
            }
            s.push_str("}\n");
        }
        Format::Graphml => {
            s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
            s.push_str("<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n");
            s.push_str("  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n");
            let keys: Vec<&str> = ng
                .edge_attrs
                .as_ref()
                .and_then(|a| a.first())
                .map(|a| a.iter().map(|(k, _)| k.as_str()).collect())
                .unwrap_or_default();
            for k in &keys {
                writeln!(s, "  <key id=\"{k}\" for=\"edge\" attr.name=\"{k}\" attr.type=\"string\"/>").unwrap();
            }
            writeln!(s, "  <graph id=\"{}\" edgedefault=\"undirected\">", xml_escape(&ng.name)).unwrap();
            for (i, l) in ng.labels.iter().enumerate() {
                writeln!(s, "    <node id=\"n{i}\"><data key=\"label\">{}</data></node>", xml_escape(l)).unwrap();
            }
            for (i, &(u, v)) in edges.iter().enumerate() {
                let a = attrs(i);
                if a.is_empty() {
                    writeln!(s, "    <edge source=\"n{u}\" target=\"n{v}\"/>").unwrap();
                } else {
                    writeln!(s, "    <edge source=\"n{u}\" target=\"n{v}\">").unwrap();
                    for (k, x) in a {
                        writeln!(s, "      <data key=\"{k}\">{}</data>", xml_escape(x)).unwrap();
                    }
                    s.push_str("    </edge>\n");
                }
            }
            s.push_str("  </graph>\n</graphml>\n");
        }
        Format::Adj => {
            for v in 0..ng.graph.order() {
                let nb: Vec<&str> = ng.graph.neighbors(v).iter().map(|&w| ng.labels[w].as_str()).collect();
                writeln!(s, "{}: {}", ng.labels[v], nb.join(" ")).unwrap();
            }
        }
        Format::Json => {
            let j = JsonGraph {
                name: &ng.name,
                order: ng.graph.order(),
                size: ng.graph.size(),
                vertices: &ng.labels,
                edges: edges
                    .iter()
                    .enumerate()
                    .map(|(i, &(u, v))| JsonEdge {
                        source: &ng.labels[u],
                        target: &ng.labels[v],
                        attributes: attrs(i).iter().map(|(k, x)| (k.as_str(), x.as_str())).collect(),
                    })
                    .collect(),
            };
            s = serde_json::to_string_pretty(&j).expect("graph serializes");
            s.push('\n');
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_dot_carries_colours() {
        let ng = named_graph("g").unwrap();
        let dot = render(&ng, Format::Dot);
        assert_eq!(dot.matches(" -- ").count(), 252);
        assert!(dot.contains("strong=\"") && dot.contains("weak=\""));
    }

    #[test]
    fn adjacency_lines() {
        let ng = named_graph("g").unwrap();
        let adj = render(&ng, Format::Adj);
        let first = adj.lines().next().unwrap();
        assert!(first.starts_with("1^a: 2^a 2^b"));
        assert_eq!(adj.lines().count(), 42);
    }

    #[test]
    fn named_subgraphs() {
        let t = named_graph("torus-5-c").unwrap();
        assert_eq!((t.graph.order(), t.graph.size()), (12, 24));
        let s = named_graph("star-123").unwrap();
        assert_eq!((s.graph.order(), s.graph.size()), (24, 36));
        let q = named_graph("quotient").unwrap();
        assert_eq!(q.graph.order(), 7);
        let l = named_graph("lq-4").unwrap();
        assert_eq!(l.graph.order(), 32);
        assert!(named_graph("torus-9-c").is_err());
        assert!(named_graph("nope").is_err());
    }

    #[test]
    fn json_and_graphml_parse_shape() {
        let ng = named_graph("levi-42-4").unwrap();
        let j: serde_json::Value = serde_json::from_str(&render(&ng, Format::Json)).unwrap();
        assert_eq!(j["order"], 84);
        assert_eq!(j["edges"].as_array().unwrap().len(), 168);
        let x = render(&ng, Format::Graphml);
        assert_eq!(x.matches("<node ").count(), 84);
        assert_eq!(x.matches("<edge ").count(), 168);
    }
}
