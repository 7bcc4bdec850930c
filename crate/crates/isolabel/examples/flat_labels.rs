//! Flat distance-vector labels end to end: encode a small graph, decode one
//! label back into a full distance vector, and answer pairwise queries from
//! two labels alone — checked against BFS.
//!
//!     cargo run --release --example flat_labels

use isolabel::dv::{dv_decode, dv_encode, dv_pairwise_distance, label_bound_bits};
use isolabel::graph::{random_connected_graph, Graph};

fn main() {
    // A 4-cycle with a chord.
    let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3), (3, 4)]).unwrap();
    let (codebook, labels) = dv_encode(&g).unwrap();

    println!("tour ordering: {:?}", codebook.ordering.order());
    println!("tour cost {} (budget 2n = {})", codebook.tour_cost, 2 * g.order());
    for (v, label) in labels.iter().enumerate() {
        let vector = dv_decode(label).unwrap();
        println!(
            "vertex {v}: {:>3} bits  {}  decodes to {vector:?}",
            label.len_bits(),
            label.bits()
        );
    }

    // Distance queries use only the two labels.
    for (u, v) in [(0u32, 4u32), (2, 4), (0, 2)] {
        let d = dv_pairwise_distance(&labels[u as usize], &labels[v as usize]).unwrap();
        let bfs = g.bfs_distances(u).unwrap().get(v as usize);
        assert_eq!(d, bfs);
        println!("d({u},{v}) = {d} (matches BFS)");
    }

    // Every label of a larger random graph stays within the explicit bound.
    let n = 500;
    let g = random_connected_graph(n, 0.05, 7).unwrap();
    let (_, labels) = dv_encode(&g).unwrap();
    let max = labels.iter().map(|l| l.len_bits()).max().unwrap();
    println!(
        "n = {n}: max label {max} bits, bound {} bits",
        label_bound_bits(n)
    );
    assert!(max <= label_bound_bits(n));
}
