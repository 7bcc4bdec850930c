//! Hierarchical labels over a DFS tree: the heavy-path coloring that keeps
//! every root path in O(log n) runs, the trit-packed distance deltas, and
//! exact hub-style distance queries.
//!
//!     cargo run --release --example hierarchical_labels

use isolabel::graph::{dfs_spanning_tree, random_connected_graph};
use isolabel::hdv::{
    heavy_coloring, hdv_decode, hdv_encode, hub_distance, label_bound_bits, max_blue_ancestors,
    Color,
};

fn main() {
    let n = 400;
    let g = random_connected_graph(n, 0.02, 42).unwrap();

    // The coloring behind the ordering: heavy children are red and sit right
    // after their parents, so ancestor indices form few consecutive runs.
    let tree = dfs_spanning_tree(&g, 0).unwrap();
    let coloring = heavy_coloring(&tree);
    let blues = coloring
        .colors
        .iter()
        .filter(|&&c| c == Color::Blue)
        .count();
    println!(
        "{n} vertices: {blues} blue (path heads), budget per root path = {}",
        max_blue_ancestors(n)
    );

    let (_, labels) = hdv_encode(&g).unwrap();
    let max = labels.iter().map(|l| l.len_bits()).max().unwrap();
    println!(
        "max label {max} bits vs bound {} bits (≈ {:.3} bits/vertex, log₂3 ≈ 1.585)",
        label_bound_bits(n),
        max as f64 / n as f64
    );
    assert!(max <= label_bound_bits(n));

    // One decoded label: ancestors root-down and the distances to them.
    let sample = hdv_decode(&labels[n - 1]).unwrap();
    println!(
        "vertex {}: {} ancestors, first five indices {:?}, distances {:?}",
        n - 1,
        sample.indices.len(),
        &sample.indices[..sample.indices.len().min(5)],
        &sample.distances[..sample.distances.len().min(5)],
    );

    // Hub queries meet BFS on every sampled pair.
    let decoded: Vec<_> = labels.iter().map(|l| hdv_decode(l).unwrap()).collect();
    let mut checked = 0;
    for u in (0..n as u32).step_by(37) {
        let bfs = g.bfs_distances(u).unwrap();
        for v in (0..n as u32).step_by(29) {
            assert_eq!(
                hub_distance(&decoded[u as usize], &decoded[v as usize]).unwrap(),
                bfs.get(v as usize)
            );
            checked += 1;
        }
    }
    println!("{checked} hub queries matched BFS exactly");
}
