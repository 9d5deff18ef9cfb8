//! Parse a graph from DIMACS or a whitespace edge list and print basic
//! statistics.
//!
//!     cargo run --example parse_and_stats [-- PATH {dimacs|edgelist}]
//!
//! Without arguments, a small built-in DIMACS instance is used.

use std::fs::File;
use std::io::{BufReader, Cursor};

use coverkit::graph::{is_vertex_cover, parse_dimacs, parse_edge_list, Graph};
use coverkit::VertexSet;

const SAMPLE: &str = "\
c tiny sample: a square with one diagonal
p edge 4 5
e 1 2
e 2 3
e 3 4
e 4 1
e 1 3
";

fn stats(g: &Graph) {
    println!("vertices: {}", g.n());
    println!("edges:    {}", g.m());
    let max_deg = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0);
    println!("max degree: {max_deg}");
    println!("isolated:   {}", g.isolated_vertices().card());
    let all = VertexSet::full(g.n());
    println!("V is a cover: {}", is_vertex_cover(g, &all));
}

fn main() {
    let mut args = std::env::args().skip(1);
    match (args.next(), args.next().as_deref()) {
        (Some(path), format) => {
            let reader = BufReader::new(File::open(&path).expect("cannot open instance"));
            match format.unwrap_or("dimacs") {
                "edgelist" => {
                    let (g, ids, dropped) = parse_edge_list(reader).expect("parse error");
                    println!("parsed edge list {path} ({dropped} duplicate/self-loop edges dropped)");
                    println!("first ids: {:?}", &ids[..ids.len().min(5)]);
                    stats(&g);
                }
                _ => {
                    let (g, dropped) = parse_dimacs(reader).expect("parse error");
                    println!("parsed DIMACS {path} ({dropped} duplicate/self-loop edges dropped)");
                    stats(&g);
                }
            }
        }
        (None, _) => {
            let (g, _) = parse_dimacs(Cursor::new(SAMPLE)).unwrap();
            println!("parsed built-in sample");
            stats(&g);
            println!("round-trip:\n{}", g.to_dimacs());
        }
    }
}
