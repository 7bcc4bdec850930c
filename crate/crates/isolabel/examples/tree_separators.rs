//! Separator-based labels on trees: recursive centroid decomposition, the
//! logarithmic depth it guarantees, explicit (index, distance) labels, and
//! exact hub queries. Also shows plugging in a custom separator oracle.
//!
//!     cargo run --release --example tree_separators

use isolabel::graph::{random_connected_graph, random_tree, VertexOrdering};
use isolabel::hdv::hub_distance;
use isolabel::separator::{
    build_separator_decomposition, depth_bound, sep_decode, sep_encode, tree_label_bound_bits,
    BfsLayerOracle, TreeCentroidOracle,
};

fn main() {
    let n = 4096;
    let g = random_tree(n, 9).unwrap();
    let decomp = build_separator_decomposition(&g, &TreeCentroidOracle).unwrap();
    decomp.validate_for(&g).unwrap();
    println!(
        "tree n = {n}: {} bags, depth {} (bound {})",
        decomp.bag_count(),
        decomp.depth(),
        depth_bound(n)
    );
    assert!(decomp.depth() <= depth_bound(n));

    let ordering = VertexOrdering::identity(n);
    let labels = sep_encode(&g, &decomp, &ordering).unwrap();
    let max = labels.iter().map(|l| l.len_bits()).max().unwrap();
    println!(
        "max label {max} bits vs tree bound {} bits",
        tree_label_bound_bits(n)
    );
    assert!(max <= tree_label_bound_bits(n));

    let decoded: Vec<_> = labels.iter().map(|l| sep_decode(l).unwrap()).collect();
    let mut checked = 0;
    for u in (0..n as u32).step_by(401) {
        let bfs = g.bfs_distances(u).unwrap();
        for v in (0..n as u32).step_by(397) {
            assert_eq!(
                hub_distance(&decoded[u as usize], &decoded[v as usize]).unwrap(),
                bfs.get(v as usize)
            );
            checked += 1;
        }
    }
    println!("{checked} hub queries over separator labels matched BFS");

    // Any graph works through the generic BFS-layer oracle; no size
    // guarantee, but the decomposition is valid and queries stay exact.
    let g = random_connected_graph(300, 0.03, 4).unwrap();
    let decomp = build_separator_decomposition(&g, &BfsLayerOracle).unwrap();
    decomp.validate_for(&g).unwrap();
    let labels = sep_encode(&g, &decomp, &VertexOrdering::identity(300)).unwrap();
    let d0 = sep_decode(&labels[0]).unwrap();
    let d9 = sep_decode(&labels[9]).unwrap();
    println!(
        "general graph via BFS-layer oracle: depth {}, d(0,9) = {}",
        decomp.depth(),
        hub_distance(&d0, &d9).unwrap()
    );
}
