//! The host graph taken literally: every bit string up to a length budget
//! that decodes as a label becomes a vertex, adjacency is decided purely on
//! decoded content, and small graphs embed isometrically by encoding them
//! and looking their labels up.
//!
//!     cargo run --release --example tiny_full_universal

use isolabel::graph::Graph;
use isolabel::universal::{build_full_universal, encode_labels, verify_isometric, Scheme};

fn main() {
    for budget in [6usize, 10, 14] {
        let host = build_full_universal(budget, Scheme::Dv).unwrap();
        println!(
            "budget {budget:>2} bits: {:>4} of {:>5} strings decode into vertices, {} edges",
            host.order(),
            (1u32 << (budget + 1)) - 1,
            host.graph.edge_count()
        );
        assert!(host.order() <= (1 << (budget + 1)) - 1);
    }

    let host = build_full_universal(14, Scheme::Dv).unwrap();
    for (name, g) in [
        ("K1", Graph::empty(1)),
        ("K2", Graph::from_edges(2, &[(0, 1)]).unwrap()),
        ("P3", Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()),
    ] {
        let labels = encode_labels(&g, Scheme::Dv).unwrap();
        match labels
            .iter()
            .map(|b| host.vertex_by_bits(b))
            .collect::<Option<Vec<u32>>>()
        {
            Some(embedding) => {
                let report = verify_isometric(&g, &host, &embedding, 0).unwrap();
                assert!(report.pass);
                println!("{name}: labels {:?} → isometric at {:?}",
                    labels.iter().map(|b| b.to_string()).collect::<Vec<_>>(), embedding);
            }
            None => println!("{name}: labels exceed the 14-bit budget, not embedded"),
        }
    }
}
