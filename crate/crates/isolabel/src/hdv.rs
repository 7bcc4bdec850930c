//! Hierarchical distance-vector labels over a DFS spanning tree with
//! singleton bags. A label decodes to the pair (p, x): the V(G)-indices of
//! the vertex's tree ancestors in root-down order and the graph distances to
//! them. Labels take at most ⌈n·log₂3⌉ + 8⌈log₂(n+1)⌉² bits.
//!
//! The ordering comes from a heavy-path 2-coloring of the tree: the root and
//! every light child are blue, every heavy child is red and placed directly
//! after its parent. Root paths then split into at most ⌊log₂ n⌋ + 1 maximal
//! runs of consecutive indices, so p is stored as (first, last) index pairs.
//! Ancestors are tree-adjacent, so consecutive distances differ by at most 1
//! and x is stored as d(v, root) plus one trit per step.
//!
//! Layout (MSB-first):
//!   gamma(n) ‖ run count s in ⌈log₂(n+1)⌉ bits
//!   ‖ s × (first−1, last−1, each in max(⌈log₂ n⌉,1) bits)
//!   ‖ d(v, root) in max(⌈log₂ n⌉,1) bits ‖ trits δ₂+1 … δ_k+1

use rayon::prelude::*;

use crate::bits::{ceil_log2, floor_log2, index_width, pack_trits, trit_width, BitString};
use crate::decomp::HierarchicalDecomposition;
use crate::error::{Error, Result};
use crate::graph::{dfs_spanning_tree, AllSourceBfs, Graph, RootedTree, VertexOrdering};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Color {
    Red,
    Blue,
}

/// Heavy-path 2-coloring and the DFS ordering that visits heavy children
/// first (remaining children in ascending id).
#[derive(Clone, Debug)]
pub struct HeavyColoring {
    pub colors: Vec<Color>,
    pub ordering: VertexOrdering,
}

/// Pinned constant behind the coloring's O(log n) guarantees: no vertex has
/// more than ⌊log₂ n⌋ + 1 blue ancestors, and no root path splits into more
/// than that many runs.
pub fn max_blue_ancestors(n: usize) -> usize {
    floor_log2(n) as usize + 1
}

/// Hard ceiling on every label this module produces for an n-vertex graph.
pub fn label_bound_bits(n: usize) -> usize {
    trit_width(n) + 8 * (ceil_log2(n + 1) as usize).pow(2)
}

pub fn heavy_coloring(t: &RootedTree) -> HeavyColoring {
    let n = t.order();
    let size = t.subtree_sizes();
    // Heavy child: largest subtree, ties to the smallest id. Children lists
    // are ascending, so a strict comparison keeps the first maximum.
    let mut heavy = vec![u32::MAX; n];
    for v in 0..n as u32 {
        let mut best: Option<u32> = None;
        for &c in t.children(v) {
            if best.is_none() || size[c as usize] > size[best.unwrap() as usize] {
                best = Some(c);
            }
        }
        if let Some(b) = best {
            heavy[v as usize] = b;
        }
    }

    let mut colors = vec![Color::Blue; n];
    let mut order = Vec::with_capacity(n);
    // Preorder that takes the heavy child before the other children.
    let mut stack = vec![t.root()];
    while let Some(u) = stack.pop() {
        order.push(u);
        let h = heavy[u as usize];
        for &c in t.children(u).iter().rev() {
            if c != h {
                stack.push(c);
            }
        }
        if h != u32::MAX {
            colors[h as usize] = Color::Red;
            stack.push(h);
        }
    }
    colors[t.root() as usize] = Color::Blue;
    let ordering = VertexOrdering::from_order(order).expect("preorder is a permutation");
    HeavyColoring { colors, ordering }
}

/// DFS spanning tree with singleton bags. Every graph edge joins a vertex to
/// a tree ancestor, which is exactly the hierarchical property.
pub fn dfs_hierarchical_decomposition(g: &Graph) -> Result<HierarchicalDecomposition> {
    let tree = dfs_spanning_tree(g, 0)?;
    Ok(HierarchicalDecomposition::singleton(&tree))
}

/// Label of one vertex under the hierarchical scheme.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HdvLabel {
    bits: BitString,
}

impl HdvLabel {
    pub fn from_bits(bits: BitString) -> Self {
        HdvLabel { bits }
    }

    pub fn bits(&self) -> &BitString {
        &self.bits
    }

    pub fn len_bits(&self) -> usize {
        self.bits.len()
    }
}

/// Decoded content of a hierarchical label: ancestor V(G)-indices (1-based,
/// root-down, ending at the vertex itself) and distances to those ancestors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HierLabelDecoded {
    pub indices: Vec<u32>,
    pub distances: Vec<u32>,
}

impl HierLabelDecoded {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// Label every vertex of a connected graph. Returns the heavy ordering the
/// V(G)-indices refer to.
pub fn hdv_encode(g: &Graph) -> Result<(VertexOrdering, Vec<HdvLabel>)> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let tree = dfs_spanning_tree(g, 0)?;
    let coloring = heavy_coloring(&tree);
    let ordering = coloring.ordering;
    let engine = AllSourceBfs::new(g);
    let w1 = ceil_log2(n + 1);
    let w = index_width(n);
    let max_runs = max_blue_ancestors(n);

    let labels: Vec<HdvLabel> = (0..n as u32)
        .into_par_iter()
        .map_init(
            || (engine.scratch(), Vec::new()),
            |(scratch, dist), v| {
                engine.distances_into(v, dist, scratch);
                let path = tree.root_path(v);
                let indices: Vec<u32> = path.iter().map(|&t| ordering.index_of(t)).collect();
                assert!(
                    indices.windows(2).all(|p| p[0] < p[1]),
                    "preorder places ancestors before descendants"
                );
                let runs = index_runs(&indices);
                assert!(
                    runs.len() <= max_runs,
                    "run count {} exceeds the heavy-path budget {max_runs}",
                    runs.len()
                );
                let mut trits = Vec::with_capacity(path.len().saturating_sub(1));
                for i in 1..path.len() {
                    let delta = dist[path[i] as usize] as i64 - dist[path[i - 1] as usize] as i64;
                    assert!(
                        (-1..=1).contains(&delta),
                        "tree-adjacent ancestors differ by more than one step"
                    );
                    trits.push((delta + 1) as u8);
                }

                let mut bits = BitString::new();
                bits.write_gamma(n as u64).expect("n >= 1");
                bits.write_fixed(runs.len() as u64, w1).expect("s <= n");
                for &(first, last) in &runs {
                    bits.write_fixed(first as u64 - 1, w).expect("index below n");
                    bits.write_fixed(last as u64 - 1, w).expect("index below n");
                }
                bits.write_fixed(dist[tree.root() as usize] as u64, w)
                    .expect("distance below n");
                bits.append(&pack_trits(&trits).expect("deltas map into trits"));
                debug_assert!(bits.len() <= label_bound_bits(n));
                HdvLabel { bits }
            },
        )
        .collect();
    Ok((ordering, labels))
}

/// Maximal runs of consecutive values in a strictly increasing sequence,
/// as inclusive (first, last) pairs.
fn index_runs(indices: &[u32]) -> Vec<(u32, u32)> {
    let mut runs: Vec<(u32, u32)> = Vec::new();
    for &ix in indices {
        match runs.last_mut() {
            Some((_, last)) if *last + 1 == ix => *last = ix,
            _ => runs.push((ix, ix)),
        }
    }
    runs
}

/// Decode a label. Strict: rejects trailing bits, non-increasing or
/// overlapping runs, out-of-range indices, negative distances, and a nonzero
/// final distance entry (the entry for the vertex itself).
pub fn hdv_decode(label: &HdvLabel) -> Result<HierLabelDecoded> {
    hdv_decode_bits(label.bits())
}

pub(crate) fn hdv_decode_bits(bits: &BitString) -> Result<HierLabelDecoded> {
    let mut cursor = bits.cursor();
    let n = cursor.read_gamma()? as usize;
    let w1 = ceil_log2(n.saturating_add(1));
    let w = index_width(n);
    let s = cursor.read_fixed(w1)? as usize;
    if s == 0 {
        return Err(Error::Malformed("label carries no ancestor runs".into()));
    }
    if s > n {
        return Err(Error::Malformed(format!(
            "{s} runs cannot fit {n} ancestors"
        )));
    }
    let mut indices = Vec::new();
    let mut prev_last = 0u64; // indices are 1-based, so 0 is below all of them
    let mut k = 0usize;
    for _ in 0..s {
        let first = cursor.read_fixed(w)? + 1;
        let last = cursor.read_fixed(w)? + 1;
        if first <= prev_last {
            return Err(Error::Malformed("runs overlap or decrease".into()));
        }
        if last < first {
            return Err(Error::Malformed("run ends before it starts".into()));
        }
        if last > n as u64 {
            return Err(Error::Malformed(format!(
                "index {last} exceeds vertex count {n}"
            )));
        }
        k += (last - first + 1) as usize;
        indices.extend((first..=last).map(|i| i as u32));
        prev_last = last;
    }
    let root_dist = cursor.read_fixed(w)? as i64;
    let trits = cursor.read_trits(k - 1)?;
    if !cursor.is_exhausted() {
        return Err(Error::Malformed("trailing bits after trit block".into()));
    }

    let mut distances = Vec::with_capacity(k);
    let mut current = root_dist;
    distances.push(current);
    for &t in &trits {
        current += t as i64 - 1;
        if current < 0 {
            return Err(Error::Malformed(
                "ancestor distance decodes negative".into(),
            ));
        }
        distances.push(current);
    }
    let last = *distances.last().expect("k >= 1");
    if last != 0 {
        return Err(Error::Malformed(format!(
            "final distance entry is {last}, expected 0 for the vertex itself"
        )));
    }
    let distances: Vec<u32> = distances
        .into_iter()
        .map(|d| u32::try_from(d).map_err(|_| Error::Malformed("distance out of range".into())))
        .collect::<Result<_>>()?;
    Ok(HierLabelDecoded { indices, distances })
}

/// Distance between two vertices from their decoded labels: minimize
/// x_a[i] + x_b[i] over the common prefix of the ancestor lists. Exact for
/// labels of one encoding because every path between the two vertices passes
/// through a common ancestor.
pub fn hub_distance(a: &HierLabelDecoded, b: &HierLabelDecoded) -> Result<u32> {
    let common = a
        .indices
        .iter()
        .zip(&b.indices)
        .take_while(|(x, y)| x == y)
        .count();
    if common == 0 {
        return Err(Error::LabelMismatch(
            "ancestor lists share no common prefix",
        ));
    }
    Ok((0..common)
        .map(|i| a.distances[i] + b.distances[i])
        .min()
        .expect("common prefix is non-empty"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_connected_graphs, random_connected_graph, random_tree};
    use proptest::prelude::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<(u32, u32)> = (1..n as u32).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn star() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    /// All three coloring conditions, checked directly on the tree.
    fn check_coloring(t: &RootedTree, hc: &HeavyColoring) {
        let n = t.order();
        assert_eq!(hc.ordering.vertex_at(0), t.root());
        assert_eq!(hc.colors[t.root() as usize], Color::Blue);
        for v in 0..n as u32 {
            if hc.colors[v as usize] == Color::Red {
                let p = t.parent(v).expect("red vertices have parents");
                assert_eq!(
                    hc.ordering.position_of(v),
                    hc.ordering.position_of(p) + 1,
                    "red vertex {v} does not directly follow its parent"
                );
            }
            let blues = t
                .root_path(v)
                .iter()
                .filter(|&&a| hc.colors[a as usize] == Color::Blue)
                .count();
            assert!(
                blues <= max_blue_ancestors(n),
                "vertex {v} has {blues} blue ancestors"
            );
        }
    }

    #[test]
    fn coloring_path_and_star() {
        let t = dfs_spanning_tree(&path(6), 0).unwrap();
        let hc = heavy_coloring(&t);
        check_coloring(&t, &hc);
        assert_eq!(hc.ordering.order(), &[0, 1, 2, 3, 4, 5]);
        assert!(hc.colors[1..].iter().all(|&c| c == Color::Red));

        let t = dfs_spanning_tree(&star(), 0).unwrap();
        let hc = heavy_coloring(&t);
        check_coloring(&t, &hc);
        assert_eq!(hc.colors[0], Color::Blue);
        assert_eq!(hc.colors[1], Color::Red, "heavy child is the smallest leaf");
        assert_eq!(hc.colors[2], Color::Blue);
        assert_eq!(hc.colors[3], Color::Blue);
        assert_eq!(hc.ordering.order(), &[0, 1, 2, 3]);

        let single = Graph::empty(1);
        let t = dfs_spanning_tree(&single, 0).unwrap();
        let hc = heavy_coloring(&t);
        assert_eq!(hc.colors, vec![Color::Blue]);
        assert_eq!(hc.ordering.order(), &[0]);
    }

    #[test]
    fn decomposition_covers_every_edge() {
        for g in [
            path(4),
            star(),
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap(),
            Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap(),
        ] {
            let d = dfs_hierarchical_decomposition(&g).unwrap();
            d.validate_for(&g).unwrap();
        }
    }

    #[test]
    fn p4_vertex3_example() {
        let (ordering, labels) = hdv_encode(&path(4)).unwrap();
        assert_eq!(ordering.order(), &[0, 1, 2, 3]);
        let d = hdv_decode(&labels[3]).unwrap();
        assert_eq!(d.indices, vec![1, 2, 3, 4]);
        assert_eq!(d.distances, vec![3, 2, 1, 0]);
        // Single run (1,4); three −1 steps, i.e. trit value 0 packed thrice.
        assert_eq!(index_runs(&d.indices), vec![(1, 4)]);
    }

    #[test]
    fn star_leaf_example() {
        let (ordering, labels) = hdv_encode(&star()).unwrap();
        for leaf in [1u32, 2, 3] {
            let d = hdv_decode(&labels[leaf as usize]).unwrap();
            assert_eq!(d.indices, vec![1, ordering.index_of(leaf)]);
            assert_eq!(d.distances, vec![1, 0]);
        }
    }

    #[test]
    fn root_label_decodes_to_itself() {
        for g in [path(5), star()] {
            let (ordering, labels) = hdv_encode(&g).unwrap();
            let d = hdv_decode(&labels[0]).unwrap();
            assert_eq!(d.indices, vec![ordering.index_of(0)]);
            assert_eq!(d.distances, vec![0]);
        }
        let (_, labels) = hdv_encode(&Graph::empty(1)).unwrap();
        let d = hdv_decode(&labels[0]).unwrap();
        assert_eq!((d.indices, d.distances), (vec![1], vec![0]));
    }

    #[test]
    fn hub_examples() {
        let (_, labels) = hdv_encode(&star()).unwrap();
        let d1 = hdv_decode(&labels[1]).unwrap();
        let d3 = hdv_decode(&labels[3]).unwrap();
        assert_eq!(hub_distance(&d1, &d3).unwrap(), 2);

        let (_, labels) = hdv_encode(&path(4)).unwrap();
        let d0 = hdv_decode(&labels[0]).unwrap();
        let d3 = hdv_decode(&labels[3]).unwrap();
        assert_eq!(hub_distance(&d0, &d3).unwrap(), 3, "ancestor pair");
        assert_eq!(hub_distance(&d3, &d0).unwrap(), 3);
        assert_eq!(hub_distance(&d0, &d0).unwrap(), 0);
    }

    #[test]
    fn hub_rejects_foreign_labels() {
        // Ancestor lists that disagree already at the root index.
        let a = HierLabelDecoded {
            indices: vec![1],
            distances: vec![0],
        };
        let b = HierLabelDecoded {
            indices: vec![3],
            distances: vec![0],
        };
        assert!(matches!(hub_distance(&a, &b), Err(Error::LabelMismatch(_))));
    }

    #[test]
    fn decoder_is_strict() {
        let (_, labels) = hdv_encode(&path(4)).unwrap();
        let good = labels[3].bits().clone();
        let mut trailing = good.clone();
        trailing.push(false);
        assert!(hdv_decode(&HdvLabel::from_bits(trailing)).is_err());

        // Rebuild the vertex-3 label with its middle trit bumped from 0 to 1:
        // the decoded prefix sums then end at 1, not 0.
        let corrupted = rebuild_label(4, &[(1, 4)], 3, &[0, 1, 0]);
        let err = hdv_decode(&HdvLabel::from_bits(corrupted)).unwrap_err();
        assert!(
            err.to_string().contains("final distance entry is 1"),
            "witness missing: {err}"
        );

        // Overlapping runs.
        let bad_runs = rebuild_label(4, &[(1, 2), (2, 3)], 1, &[1, 1]);
        assert!(hdv_decode(&HdvLabel::from_bits(bad_runs)).is_err());

        // Run beyond n: for n = 5 the 3-bit index field holds values up to 8.
        let oob = rebuild_label(5, &[(6, 6)], 0, &[]);
        assert!(hdv_decode(&HdvLabel::from_bits(oob)).is_err());
    }

    /// Assemble label bits from parts (tests need full layout control).
    fn rebuild_label(n: usize, runs: &[(u64, u64)], root_dist: u64, trits: &[u8]) -> BitString {
        let w1 = ceil_log2(n + 1);
        let w = index_width(n);
        let mut bits = BitString::new();
        bits.write_gamma(n as u64).unwrap();
        bits.write_fixed(runs.len() as u64, w1).unwrap();
        for &(f, l) in runs {
            bits.write_fixed(f - 1, w).unwrap();
            bits.write_fixed(l - 1, w).unwrap();
        }
        bits.write_fixed(root_dist, w).unwrap();
        bits.append(&pack_trits(trits).unwrap());
        bits
    }

    fn expected_decoded(g: &Graph, ordering: &VertexOrdering, v: u32) -> HierLabelDecoded {
        let tree = dfs_spanning_tree(g, 0).unwrap();
        let bfs = g.bfs_distances(v).unwrap();
        let path = tree.root_path(v);
        HierLabelDecoded {
            indices: path.iter().map(|&t| ordering.index_of(t)).collect(),
            distances: path.iter().map(|&t| bfs.get(t as usize)).collect(),
        }
    }

    #[test]
    fn exhaustive_roundtrip_small() {
        for n in 1..=4 {
            for g in enumerate_connected_graphs(n).unwrap() {
                let (ordering, labels) = hdv_encode(&g).unwrap();
                for v in 0..n as u32 {
                    assert_eq!(
                        hdv_decode(&labels[v as usize]).unwrap(),
                        expected_decoded(&g, &ordering, v)
                    );
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn coloring_conditions_on_random_trees(n in 1usize..200, seed in 0u64..1000) {
            let g = random_tree(n, seed).unwrap();
            let t = dfs_spanning_tree(&g, 0).unwrap();
            check_coloring(&t, &heavy_coloring(&t));
        }

        #[test]
        fn roundtrip_matches_oracle(n in 1usize..35, seed in 0u64..1000, p in 0u32..=50) {
            let g = random_connected_graph(n, p as f64 / 100.0, seed).unwrap();
            let (ordering, labels) = hdv_encode(&g).unwrap();
            for v in 0..n as u32 {
                let d = hdv_decode(&labels[v as usize]).unwrap();
                prop_assert_eq!(&d, &expected_decoded(&g, &ordering, v));
                prop_assert_eq!(d.indices.len(), d.distances.len());
                prop_assert!(labels[v as usize].len_bits() <= label_bound_bits(n));
            }
        }

        #[test]
        fn hub_distance_equals_bfs(n in 2usize..30, seed in 0u64..1000, p in 0u32..=40) {
            let g = random_connected_graph(n, p as f64 / 100.0, seed).unwrap();
            let (_, labels) = hdv_encode(&g).unwrap();
            let decoded: Vec<_> = labels.iter().map(|l| hdv_decode(l).unwrap()).collect();
            for u in 0..n as u32 {
                let bfs = g.bfs_distances(u).unwrap();
                for v in 0..n as u32 {
                    prop_assert_eq!(
                        hub_distance(&decoded[u as usize], &decoded[v as usize]).unwrap(),
                        bfs.get(v as usize)
                    );
                }
            }
        }
    }
}
