//! Separator-based hierarchical labels: recursively split the graph with
//! balanced separators, then store every vertex's natural ancestor list —
//! the separator bags above it, root-down, sorted by V(G)-index inside each
//! bag and truncated at the vertex itself — as explicit (index, distance)
//! pairs. For a class with separators of size f(n) the decomposition has
//! ≤ ⌈log_{3/2} n⌉ + 1 levels, so labels take O(f(n)·log² n) bits; trees
//! (f = 1, centroid separators) fit in
//! 2(⌈log_{3/2} n⌉+1)⌈log₂ n⌉ + 3⌈log₂(n+1)⌉ + 3 bits.
//!
//! Pairwise distances reuse [`crate::hdv::hub_distance`]: the splitting bag
//! separates the two vertices, so the minimum over common ancestors is exact.
//!
//! Layout (MSB-first):
//!   gamma(n) ‖ ancestor count a in ⌈log₂(n+1)⌉ bits
//!   ‖ a × (index−1, distance, each in max(⌈log₂ n⌉,1) bits)

use rayon::prelude::*;

use crate::bits::{ceil_log2, index_width, BitString};
use crate::decomp::HierarchicalDecomposition;
use crate::error::{Error, Result};
use crate::graph::{tree_centroid, AllSourceBfs, Graph, RootedTree, VertexOrdering};
use crate::hdv::HierLabelDecoded;

/// A balanced split of a graph's vertex set: removing `separator` leaves
/// `side_x` and `side_y` (each at most 2n/3 vertices) with no edges between.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorParts {
    pub separator: Vec<u32>,
    pub side_x: Vec<u32>,
    pub side_y: Vec<u32>,
}

/// Supplier of balanced separators for induced subgraphs (vertices relabelled
/// to 0..k−1). `size_bound` declares the nondecreasing f(n) the returned
/// separators must respect; the decomposition builder re-validates the whole
/// contract on every call.
pub trait SeparatorOracle {
    fn size_bound(&self, n: usize) -> usize;
    fn separate(&self, g: &Graph) -> Result<SeparatorParts>;
}

/// Single-vertex separators for trees and forests: the centroid of the
/// largest component, remaining pieces distributed greedily by size.
pub struct TreeCentroidOracle;

/// Fallback for arbitrary graphs: a middle BFS layer of the largest
/// component. Valid decompositions, but no size guarantee below n, so it is
/// excluded from label-size bound claims.
pub struct BfsLayerOracle;

/// Levels of any decomposition this module builds: parts shrink by 2/3 per
/// level, so depth ≤ ⌈log_{3/2} n⌉ + 1.
pub fn depth_bound(n: usize) -> usize {
    ceil_log_3_2(n) + 1
}

/// Hard ceiling on tree labels (centroid oracle, f = 1).
pub fn tree_label_bound_bits(n: usize) -> usize {
    2 * depth_bound(n) * ceil_log2(n) as usize + 3 * ceil_log2(n + 1) as usize + 3
}

/// Smallest j with (3/2)^j ≥ n, in exact integer arithmetic.
fn ceil_log_3_2(n: usize) -> usize {
    let mut j = 0usize;
    let mut pow3: u128 = 1;
    let mut pow2: u128 = 1;
    while pow3 < n as u128 * pow2 {
        j += 1;
        pow3 *= 3;
        pow2 *= 2;
    }
    j
}

impl SeparatorOracle for TreeCentroidOracle {
    fn size_bound(&self, _n: usize) -> usize {
        1
    }

    fn separate(&self, g: &Graph) -> Result<SeparatorParts> {
        if g.order() == 0 {
            return Err(Error::EmptyGraph);
        }
        let comps = g.components();
        if g.edge_count() != g.order() - comps.len() {
            return Err(Error::NotATree);
        }
        let largest = largest_component(&comps);
        let tree = g.induced(largest)?;
        let centroid = largest[tree_centroid(&tree)? as usize];

        let mut pieces: Vec<Vec<u32>> = comps
            .iter()
            .filter(|c| !std::ptr::eq(*c, largest))
            .cloned()
            .collect();
        let rest: Vec<u32> = largest.iter().copied().filter(|&v| v != centroid).collect();
        if !rest.is_empty() {
            pieces.extend(g.induced(&rest)?.components().into_iter().map(|comp| {
                comp.into_iter()
                    .map(|i| rest[i as usize])
                    .collect::<Vec<u32>>()
            }));
        }
        let (side_x, side_y) = distribute(pieces);
        Ok(SeparatorParts {
            separator: vec![centroid],
            side_x,
            side_y,
        })
    }
}

impl SeparatorOracle for BfsLayerOracle {
    fn size_bound(&self, n: usize) -> usize {
        n
    }

    fn separate(&self, g: &Graph) -> Result<SeparatorParts> {
        if g.order() == 0 {
            return Err(Error::EmptyGraph);
        }
        let comps = g.components();
        let largest = largest_component(&comps);
        let dist = g.bfs_distances(largest[0])?;
        let max_layer = largest
            .iter()
            .map(|&v| dist.get(v as usize))
            .max()
            .expect("component is non-empty") as usize;
        let mut layers: Vec<Vec<u32>> = vec![Vec::new(); max_layer + 1];
        for &v in largest {
            layers[dist.get(v as usize) as usize].push(v);
        }
        // First layer where the prefix reaches half the component: everything
        // before it and everything after it are each at most half.
        let mut split = 0;
        let mut prefix = 0;
        for (i, layer) in layers.iter().enumerate() {
            prefix += layer.len();
            if 2 * prefix >= largest.len() {
                split = i;
                break;
            }
        }
        let separator = layers[split].clone();
        let before: Vec<u32> = layers[..split].iter().flatten().copied().collect();
        let after: Vec<u32> = layers[split + 1..].iter().flatten().copied().collect();

        let mut pieces: Vec<Vec<u32>> = comps
            .iter()
            .filter(|c| !std::ptr::eq(*c, largest))
            .cloned()
            .collect();
        for piece in [before, after] {
            if !piece.is_empty() {
                pieces.push(piece);
            }
        }
        let (side_x, side_y) = distribute(pieces);
        Ok(SeparatorParts {
            separator,
            side_x,
            side_y,
        })
    }
}

fn largest_component(comps: &[Vec<u32>]) -> &Vec<u32> {
    let mut best = &comps[0];
    for c in &comps[1..] {
        if c.len() > best.len() {
            best = c;
        }
    }
    best
}

/// Greedy bin packing, largest piece first into the lighter side. With every
/// piece at most half the total this keeps both sides within 2n/3.
fn distribute(mut pieces: Vec<Vec<u32>>) -> (Vec<u32>, Vec<u32>) {
    pieces.sort_by(|a, b| b.len().cmp(&a.len()).then(a.first().cmp(&b.first())));
    let (mut x, mut y) = (Vec::new(), Vec::new());
    for piece in pieces {
        if x.len() <= y.len() {
            x.extend(piece);
        } else {
            y.extend(piece);
        }
    }
    x.sort_unstable();
    y.sort_unstable();
    (x, y)
}

/// Recursively split `g` with the oracle into a binary bag tree: the root bag
/// is the separator, children are built on the induced sides (absent when a
/// side is empty). The oracle's contract is re-validated on every call.
pub fn build_separator_decomposition(
    g: &Graph,
    oracle: &dyn SeparatorOracle,
) -> Result<HierarchicalDecomposition> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut bags = Vec::new();
    let mut parents = Vec::new();
    let all: Vec<u32> = (0..n as u32).collect();
    build_rec(g, oracle, all, None, &mut bags, &mut parents)?;
    let tree = RootedTree::from_parents(0, &parents)?;
    HierarchicalDecomposition::new(tree, bags, n)
}

fn build_rec(
    g: &Graph,
    oracle: &dyn SeparatorOracle,
    verts: Vec<u32>,
    parent: Option<u32>,
    bags: &mut Vec<Vec<u32>>,
    parents: &mut Vec<Option<u32>>,
) -> Result<()> {
    let sub = g.induced(&verts)?;
    let mut parts = oracle.separate(&sub)?;
    parts.separator.sort_unstable();
    parts.side_x.sort_unstable();
    parts.side_y.sort_unstable();
    if parts.separator.is_empty() {
        // An empty balanced separator of a non-empty graph converts to a
        // non-empty one: move the smallest vertex of the larger side over.
        let side = if parts.side_x.len() >= parts.side_y.len() {
            &mut parts.side_x
        } else {
            &mut parts.side_y
        };
        if side.is_empty() {
            return Err(violation(&verts, "separator and both sides empty"));
        }
        parts.separator.push(side.remove(0));
    }
    validate_parts(&sub, &parts, oracle.size_bound(sub.order()), &verts)?;

    let node = bags.len() as u32;
    bags.push(
        parts
            .separator
            .iter()
            .map(|&i| verts[i as usize])
            .collect(),
    );
    parents.push(parent);
    for side in [&parts.side_x, &parts.side_y] {
        if !side.is_empty() {
            let sub_verts: Vec<u32> = side.iter().map(|&i| verts[i as usize]).collect();
            build_rec(g, oracle, sub_verts, Some(node), bags, parents)?;
        }
    }
    Ok(())
}

fn violation(verts: &[u32], reason: impl Into<String>) -> Error {
    Error::OracleViolation {
        size: verts.len(),
        reason: reason.into(),
        vertices: verts.to_vec(),
    }
}

fn validate_parts(
    sub: &Graph,
    parts: &SeparatorParts,
    size_bound: usize,
    verts: &[u32],
) -> Result<()> {
    let k = sub.order();
    if parts.separator.len() > size_bound {
        return Err(violation(
            verts,
            format!(
                "separator of {} vertices exceeds the declared bound {size_bound}",
                parts.separator.len()
            ),
        ));
    }
    for (side, name) in [(&parts.side_x, "X"), (&parts.side_y, "Y")] {
        if 3 * side.len() > 2 * k {
            return Err(violation(
                verts,
                format!("side {name} has {} of {k} vertices", side.len()),
            ));
        }
    }
    // 0 = separator, 1 = X, 2 = Y; every vertex exactly once.
    let mut membership = vec![u8::MAX; k];
    for (vs, tag) in [
        (&parts.separator, 0u8),
        (&parts.side_x, 1),
        (&parts.side_y, 2),
    ] {
        for &v in vs.iter() {
            if v as usize >= k || membership[v as usize] != u8::MAX {
                return Err(violation(
                    verts,
                    format!("vertex {v} out of range or assigned twice"),
                ));
            }
            membership[v as usize] = tag;
        }
    }
    if membership.contains(&u8::MAX) {
        return Err(violation(verts, "parts do not cover the subgraph"));
    }
    for (u, v) in sub.edges() {
        let (mu, mv) = (membership[u as usize], membership[v as usize]);
        if (mu == 1 && mv == 2) || (mu == 2 && mv == 1) {
            return Err(violation(verts, format!("edge {u}-{v} joins X and Y")));
        }
    }
    Ok(())
}

/// Label of one vertex under the separator scheme.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SepLabel {
    bits: BitString,
}

impl SepLabel {
    pub fn from_bits(bits: BitString) -> Self {
        SepLabel { bits }
    }

    pub fn bits(&self) -> &BitString {
        &self.bits
    }

    pub fn len_bits(&self) -> usize {
        self.bits.len()
    }
}

/// Label every vertex: the natural ancestor list (root-down bags, sorted by
/// V(G)-index within each bag, own bag truncated at the vertex) with global
/// BFS distances.
pub fn sep_encode(
    g: &Graph,
    decomp: &HierarchicalDecomposition,
    ordering: &VertexOrdering,
) -> Result<Vec<SepLabel>> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if ordering.len() != n {
        return Err(Error::InvalidOrdering("ordering covers a different order"));
    }
    decomp.validate_for(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let engine = AllSourceBfs::new(g);
    let w1 = ceil_log2(n + 1);
    let w = index_width(n);

    let labels: Vec<SepLabel> = (0..n as u32)
        .into_par_iter()
        .map_init(
            || (engine.scratch(), Vec::new()),
            |(scratch, dist), v| {
                engine.distances_into(v, dist, scratch);
                let ancestors = natural_ancestors(decomp, ordering, v);
                let mut bits = BitString::new();
                bits.write_gamma(n as u64).expect("n >= 1");
                bits.write_fixed(ancestors.len() as u64, w1)
                    .expect("at most n ancestors");
                for &u in &ancestors {
                    bits.write_fixed(ordering.index_of(u) as u64 - 1, w)
                        .expect("index below n");
                    bits.write_fixed(dist[u as usize] as u64, w)
                        .expect("distance below n");
                }
                SepLabel { bits }
            },
        )
        .collect();
    Ok(labels)
}

/// The natural ancestor list of `v`: vertices of each ancestor bag root-down,
/// sorted by V(G)-index within the bag; in v's own bag only indices up to
/// v's. The vertex itself is always last.
pub(crate) fn natural_ancestors(
    decomp: &HierarchicalDecomposition,
    ordering: &VertexOrdering,
    v: u32,
) -> Vec<u32> {
    let nodes = decomp.ancestor_nodes_of(v);
    let own = *nodes.last().expect("every vertex has a bag");
    let mut out = Vec::new();
    for node in nodes {
        let mut bag: Vec<u32> = decomp.bag(node).to_vec();
        bag.sort_unstable_by_key(|&u| ordering.position_of(u));
        if node == own {
            bag.retain(|&u| ordering.position_of(u) <= ordering.position_of(v));
        }
        out.extend(bag);
    }
    debug_assert_eq!(out.last(), Some(&v));
    out
}

/// Decode a label. Strict: full consumption, indices within range, and the
/// final distance entry must be 0.
pub fn sep_decode(label: &SepLabel) -> Result<HierLabelDecoded> {
    sep_decode_bits(label.bits())
}

pub(crate) fn sep_decode_bits(bits: &BitString) -> Result<HierLabelDecoded> {
    let mut cursor = bits.cursor();
    let n = cursor.read_gamma()? as usize;
    let w1 = ceil_log2(n.saturating_add(1));
    let w = index_width(n);
    let a = cursor.read_fixed(w1)? as usize;
    if a == 0 {
        return Err(Error::Malformed("label carries no ancestors".into()));
    }
    if a > n {
        return Err(Error::Malformed(format!(
            "{a} ancestors exceed vertex count {n}"
        )));
    }
    let mut indices = Vec::with_capacity(a);
    let mut distances = Vec::with_capacity(a);
    for _ in 0..a {
        let ix = cursor.read_fixed(w)? + 1;
        if ix > n as u64 {
            return Err(Error::Malformed(format!(
                "index {ix} exceeds vertex count {n}"
            )));
        }
        indices.push(ix as u32);
        distances.push(cursor.read_fixed(w)? as u32);
    }
    if !cursor.is_exhausted() {
        return Err(Error::Malformed("trailing bits after ancestor list".into()));
    }
    let last = *distances.last().expect("a >= 1");
    if last != 0 {
        return Err(Error::Malformed(format!(
            "final distance entry is {last}, expected 0 for the vertex itself"
        )));
    }
    Ok(HierLabelDecoded { indices, distances })
}
