//! One graph to host them all: the labels realized by every connected graph
//! on up to 4 vertices form a single host graph in which each of the 44
//! graphs sits as an isometric subgraph — distances included, verified
//! against BFS on both sides.
//!
//!     cargo run --release --example realized_universal

use isolabel::cli::connected_class;
use isolabel::universal::{build_realized_universal, verify_isometric, Scheme};

fn main() {
    let class = connected_class(4).unwrap();
    println!("class: {} labelled connected graphs on 1..=4 vertices", class.len());

    for scheme in [Scheme::Dv, Scheme::Hdv] {
        let host = build_realized_universal(&class, scheme).unwrap();
        println!(
            "{scheme}: host has {} label-vertices and {} edges",
            host.order(),
            host.graph.edge_count()
        );
        let mut pairs = 0;
        for (i, g) in class.iter().enumerate() {
            let report = verify_isometric(g, &host, &host.embeddings[i], i).unwrap();
            assert!(report.pass, "graph {i}: {:?}", report.worst_pair);
            pairs += report.pairs_checked;
        }
        println!("{scheme}: all {} graphs isometric ({pairs} pairs checked)", class.len());
    }

    // The host only ever grows: embeddings recorded against the ≤3 class
    // stay isometric inside the ≤4 host.
    let small = connected_class(3).unwrap();
    let host = build_realized_universal(&class, Scheme::Hdv).unwrap();
    for (i, g) in small.iter().enumerate() {
        assert!(verify_isometric(g, &host, &host.embeddings[i], i).unwrap().pass);
    }
    println!("monotonicity: the ≤3 class still embeds isometrically in the ≤4 host");
}
