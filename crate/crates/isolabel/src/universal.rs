//! Universal host graphs built from labels. Adjacency between two label
//! strings is decided from their decoded content alone, so the set of labels
//! realized by a class of graphs — or every decodable string up to a length
//! budget — forms a host graph containing each encoded graph as an isometric
//! subgraph. This module materializes those hosts, embeds source graphs, and
//! verifies the isometry claim pair-by-pair against BFS ground truth.

use std::collections::HashMap;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bits::BitString;
use crate::dv::{self, dv_encode};
use crate::error::{Error, Result};
use crate::graph::{DistanceVector, Graph, VertexOrdering, INF};
use crate::hdv::{self, hdv_encode, HierLabelDecoded};
use crate::separator::{
    build_separator_decomposition, sep_encode, BfsLayerOracle, TreeCentroidOracle,
};

/// Which labelling scheme a label file or universal graph was built with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scheme {
    Dv,
    Hdv,
    Sep,
}

impl Scheme {
    pub const ALL: [Scheme; 3] = [Scheme::Dv, Scheme::Hdv, Scheme::Sep];

    pub fn tag(self) -> &'static str {
        match self {
            Scheme::Dv => "dv",
            Scheme::Hdv => "hdv",
            Scheme::Sep => "sep",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dv" => Ok(Scheme::Dv),
            "hdv" => Ok(Scheme::Hdv),
            "sep" => Ok(Scheme::Sep),
            other => Err(Error::UnknownScheme(other.to_string())),
        }
    }
}

/// Decoded content of a label under some scheme.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecodedLabel {
    Flat(DistanceVector),
    Hier(HierLabelDecoded),
}

/// One vertex of a universal graph: the label bits that name it and their
/// decoded content.
#[derive(Clone, Debug)]
pub struct VertexPayload {
    pub bits: BitString,
    pub decoded: DecodedLabel,
}

/// A materialized host graph: label-vertices, content-driven adjacency, and
/// one embedding per source graph it was built from.
#[derive(Clone)]
pub struct UniversalGraph {
    pub graph: Graph,
    pub payloads: Vec<VertexPayload>,
    pub embeddings: Vec<Vec<u32>>,
    index: HashMap<BitString, u32>,
}

impl UniversalGraph {
    /// Reassemble a host graph from parsed files; embeddings start empty.
    pub fn from_parts(graph: Graph, payloads: Vec<VertexPayload>) -> Result<UniversalGraph> {
        if graph.order() != payloads.len() {
            return Err(Error::LabelMismatch("graph order and payload count differ"));
        }
        let mut index = HashMap::with_capacity(payloads.len());
        for (id, p) in payloads.iter().enumerate() {
            if index.insert(p.bits.clone(), id as u32).is_some() {
                return Err(Error::LabelMismatch("duplicate label among vertices"));
            }
        }
        Ok(UniversalGraph {
            graph,
            payloads,
            embeddings: Vec::new(),
            index,
        })
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn vertex_by_bits(&self, bits: &BitString) -> Option<u32> {
        self.index.get(bits).copied()
    }

    /// Sidecar mapping: one line per vertex, "id bit-length hex".
    pub fn write_mapping(&self, w: &mut impl Write) -> std::io::Result<()> {
        for (id, payload) in self.payloads.iter().enumerate() {
            writeln!(
                w,
                "{id} {} {}",
                payload.bits.len(),
                if payload.bits.is_empty() {
                    "-".to_string()
                } else {
                    payload.bits.to_hex()
                }
            )?;
        }
        Ok(())
    }
}

/// L∞ distance over the common-length prefix of two vectors, with the
/// conventions ∞ − ∞ = 0 and |∞ − t| = ∞. Empty prefix gives 0.
pub fn linf_pseudodistance(x: &DistanceVector, y: &DistanceVector) -> u32 {
    let mut max = 0u32;
    for (&a, &b) in x.entries().iter().zip(y.entries()) {
        let diff = match (a == INF, b == INF) {
            (true, true) => 0,
            (false, false) => a.abs_diff(b),
            _ => INF,
        };
        max = max.max(diff);
    }
    max
}

/// Flat-scheme adjacency: equal length and L∞ distance exactly 1.
pub fn dv_adjacent(a: &DistanceVector, b: &DistanceVector) -> bool {
    a.len() == b.len() && linf_pseudodistance(a, b) == 1
}

/// A decoded pair (p, x) names a host vertex only if the lists match in
/// length, are non-empty, and x ends with the vertex's own 0 entry.
pub fn hdv_vertex_valid(d: &HierLabelDecoded) -> bool {
    !d.indices.is_empty()
        && d.indices.len() == d.distances.len()
        && *d.distances.last().expect("non-empty") == 0
}

/// Hierarchical adjacency: one ancestor list is a prefix of the other and
/// the distance lists are at L∞-pseudodistance exactly 1.
pub fn hdv_adjacent(a: &HierLabelDecoded, b: &HierLabelDecoded) -> bool {
    let (short, long) = if a.indices.len() <= b.indices.len() {
        (a, b)
    } else {
        (b, a)
    };
    if long.indices[..short.indices.len()] != short.indices[..] {
        return false;
    }
    let mut max = 0u32;
    for (&x, &y) in short.distances.iter().zip(&long.distances) {
        max = max.max(x.abs_diff(y));
    }
    max == 1
}

fn adjacent(a: &DecodedLabel, b: &DecodedLabel) -> bool {
    match (a, b) {
        (DecodedLabel::Flat(x), DecodedLabel::Flat(y)) => dv_adjacent(x, y),
        (DecodedLabel::Hier(x), DecodedLabel::Hier(y)) => hdv_adjacent(x, y),
        _ => false,
    }
}

/// Per-vertex label bits of a connected graph under the chosen scheme,
/// together with the ordering the V(G)-indices refer to. The separator
/// scheme uses centroid separators on trees and BFS-layer separators
/// otherwise, with the identity ordering.
pub fn encode_labels_with_ordering(
    g: &Graph,
    scheme: Scheme,
) -> Result<(VertexOrdering, Vec<BitString>)> {
    match scheme {
        Scheme::Dv => {
            let (cb, labels) = dv_encode(g)?;
            Ok((
                cb.ordering,
                labels.into_iter().map(|l| l.bits().clone()).collect(),
            ))
        }
        Scheme::Hdv => {
            let (ordering, labels) = hdv_encode(g)?;
            Ok((
                ordering,
                labels.into_iter().map(|l| l.bits().clone()).collect(),
            ))
        }
        Scheme::Sep => {
            let decomp = if g.is_tree() {
                build_separator_decomposition(g, &TreeCentroidOracle)?
            } else {
                build_separator_decomposition(g, &BfsLayerOracle)?
            };
            let ordering = VertexOrdering::identity(g.order());
            let labels = sep_encode(g, &decomp, &ordering)?;
            Ok((
                ordering,
                labels.into_iter().map(|l| l.bits().clone()).collect(),
            ))
        }
    }
}

/// Per-vertex label bits of a connected graph under the chosen scheme.
pub fn encode_labels(g: &Graph, scheme: Scheme) -> Result<Vec<BitString>> {
    encode_labels_with_ordering(g, scheme).map(|(_, labels)| labels)
}

/// Decode a label string under the chosen scheme.
pub fn decode_label(scheme: Scheme, bits: &BitString) -> Result<DecodedLabel> {
    match scheme {
        Scheme::Dv => Ok(DecodedLabel::Flat(dv::dv_decode_bits(bits)?)),
        Scheme::Hdv => Ok(DecodedLabel::Hier(hdv::hdv_decode_bits(bits)?)),
        Scheme::Sep => Ok(DecodedLabel::Hier(crate::separator::sep_decode_bits(
            bits,
        )?)),
    }
}

/// Host graph on the labels realized by a class of connected graphs:
/// vertices are the de-duplicated label strings, edges follow the scheme's
/// adjacency rule, and each input graph's embedding is recorded.
pub fn build_realized_universal(graphs: &[Graph], scheme: Scheme) -> Result<UniversalGraph> {
    let mut payloads: Vec<VertexPayload> = Vec::new();
    let mut index: HashMap<BitString, u32> = HashMap::new();
    let mut embeddings = Vec::with_capacity(graphs.len());
    for g in graphs {
        let labels = encode_labels(g, scheme)?;
        let mut image = Vec::with_capacity(labels.len());
        for bits in labels {
            let id = match index.get(&bits) {
                Some(&id) => id,
                None => {
                    let id = payloads.len() as u32;
                    let decoded = decode_label(scheme, &bits)?;
                    if let DecodedLabel::Hier(h) = &decoded {
                        debug_assert!(hdv_vertex_valid(h));
                    }
                    payloads.push(VertexPayload {
                        bits: bits.clone(),
                        decoded,
                    });
                    index.insert(bits, id);
                    id
                }
            };
            image.push(id);
        }
        embeddings.push(image);
    }
    let graph = adjacency_graph(&payloads)?;
    Ok(UniversalGraph {
        graph,
        payloads,
        embeddings,
        index,
    })
}

/// The verbatim construction at tiny scale: vertices are all bit strings of
/// length ≤ `max_bits` whose decode succeeds (for hierarchical schemes the
/// decoder already enforces the final-0 vertex condition), edges follow the
/// scheme's adjacency rule. No embeddings are pre-recorded.
pub fn build_full_universal(max_bits: usize, scheme: Scheme) -> Result<UniversalGraph> {
    const MAX_BUDGET: usize = 14;
    if max_bits > MAX_BUDGET {
        return Err(Error::Guard {
            name: "label bit budget",
            value: max_bits,
            max: MAX_BUDGET,
        });
    }
    let mut payloads = Vec::new();
    let mut index = HashMap::new();
    for len in 0..=max_bits {
        for value in 0u64..(1u64 << len) {
            let mut bits = BitString::new();
            bits.write_fixed(value, len as u32).expect("value < 2^len");
            if let Ok(decoded) = decode_label(scheme, &bits) {
                let valid = match &decoded {
                    DecodedLabel::Flat(_) => true,
                    DecodedLabel::Hier(h) => hdv_vertex_valid(h),
                };
                if valid {
                    index.insert(bits.clone(), payloads.len() as u32);
                    payloads.push(VertexPayload { bits, decoded });
                }
            }
        }
    }
    let graph = adjacency_graph(&payloads)?;
    Ok(UniversalGraph {
        graph,
        payloads,
        embeddings: Vec::new(),
        index,
    })
}

fn adjacency_graph(payloads: &[VertexPayload]) -> Result<Graph> {
    let n = payloads.len();
    let edges: Vec<(u32, u32)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            (i + 1..n)
                .filter(move |&j| adjacent(&payloads[i].decoded, &payloads[j].decoded))
                .map(move |j| (i as u32, j as u32))
        })
        .collect();
    Graph::from_edges(n, &edges)
}

/// Worst offending pair of an isometry check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WorstPair {
    pub graph_id: usize,
    pub u: u32,
    pub v: u32,
    pub d_source: u32,
    pub d_universal: u32,
}

/// Outcome of verifying one embedding.
#[derive(Clone, Debug)]
pub struct IsometryReport {
    pub pass: bool,
    pub worst_pair: Option<WorstPair>,
    pub pairs_checked: u64,
}

/// Check that `embedding` maps `g` onto an isometric copy inside `h`:
/// adjacency is preserved in both directions and every pairwise distance in
/// the host (by BFS) equals the distance in the source, ∞ included.
pub fn verify_isometric(
    g: &Graph,
    h: &UniversalGraph,
    embedding: &[u32],
    graph_id: usize,
) -> Result<IsometryReport> {
    let n = g.order();
    if embedding.len() != n {
        return Err(Error::BadEmbedding(format!(
            "{} images for {n} vertices",
            embedding.len()
        )));
    }
    let mut seen = std::collections::HashSet::new();
    for &img in embedding {
        if img as usize >= h.order() {
            return Err(Error::BadEmbedding(format!("image {img} out of range")));
        }
        if !seen.insert(img) {
            return Err(Error::BadEmbedding(format!("image {img} used twice")));
        }
    }

    let mut pairs_checked = 0u64;
    let mut worst: Option<WorstPair> = None;
    let mut worst_gap = 0u64;
    let gap = |a: u32, b: u32| -> u64 {
        match (a == INF, b == INF) {
            (true, true) => 0,
            (false, false) => a.abs_diff(b) as u64,
            _ => u64::MAX,
        }
    };
    for u in 0..n as u32 {
        let dg = g.bfs_distances(u)?;
        let dh = h.graph.bfs_distances(embedding[u as usize])?;
        for v in u + 1..n as u32 {
            pairs_checked += 1;
            let (ds, du) = (dg.get(v as usize), dh.get(embedding[v as usize] as usize));
            // Induced-copy check is the distance-1 case of the comparison,
            // asserted directly on the adjacency structures.
            let adjacency_ok = g.has_edge(u, v)
                == h.graph
                    .has_edge(embedding[u as usize], embedding[v as usize]);
            let delta = gap(ds, du);
            if (delta > 0 || !adjacency_ok) && delta >= worst_gap {
                worst_gap = delta.max(1);
                worst = Some(WorstPair {
                    graph_id,
                    u,
                    v,
                    d_source: ds,
                    d_universal: du,
                });
            }
        }
    }
    Ok(IsometryReport {
        pass: worst.is_none(),
        worst_pair: worst,
        pairs_checked,
    })
}

/// Disjoint union of universal graphs with copy bookkeeping, so a graph with
/// up to `copies()` components embeds with each component in its own copy.
pub struct UnionUniversal {
    pub universal: UniversalGraph,
    offsets: Vec<u32>,
    copy_indexes: Vec<HashMap<BitString, u32>>,
}

/// Disjoint union of the given universal graphs; component i of an embedded
/// graph lands in copy i.
pub fn disjoint_union_universal(parts: &[UniversalGraph]) -> UnionUniversal {
    let mut offsets = Vec::with_capacity(parts.len());
    let mut payloads = Vec::new();
    let mut edges = Vec::new();
    let mut index = HashMap::new();
    let mut copy_indexes = Vec::with_capacity(parts.len());
    let mut offset = 0u32;
    for part in parts {
        offsets.push(offset);
        for (u, v) in part.graph.edges() {
            edges.push((u + offset, v + offset));
        }
        for payload in &part.payloads {
            // First copy wins in the combined index; copy_indexes keeps the
            // per-copy lookup embedding needs.
            index
                .entry(payload.bits.clone())
                .or_insert(payloads.len() as u32);
            payloads.push(payload.clone());
        }
        copy_indexes.push(part.index.clone());
        offset += part.order() as u32;
    }
    let graph = Graph::from_edges(payloads.len(), &edges).expect("shifted edges stay simple");
    UnionUniversal {
        universal: UniversalGraph {
            graph,
            payloads,
            embeddings: Vec::new(),
            index,
        },
        offsets,
        copy_indexes,
    }
}

impl UnionUniversal {
    pub fn copies(&self) -> usize {
        self.offsets.len()
    }

    /// Embed a possibly disconnected graph: component i (ordered by smallest
    /// vertex) is relabelled to 0..|C|−1, encoded, and looked up in copy i.
    pub fn embed_graph(&self, g: &Graph, scheme: Scheme) -> Result<Vec<u32>> {
        let comps = g.components();
        if comps.len() > self.copies() {
            return Err(Error::TooManyComponents {
                components: comps.len(),
                copies: self.copies(),
            });
        }
        let mut embedding = vec![0u32; g.order()];
        for (copy, comp) in comps.iter().enumerate() {
            let sub = g.induced(comp)?;
            let labels = encode_labels(&sub, scheme)?;
            for (local, bits) in labels.iter().enumerate() {
                let id = self.copy_indexes[copy].get(bits).ok_or({
                    Error::ComponentNotCovered { size: comp.len() }
                })?;
                embedding[comp[local] as usize] = id + self.offsets[copy];
            }
        }
        Ok(embedding)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_connected_graphs;

    fn dvec(entries: &[u32]) -> DistanceVector {
        DistanceVector(entries.to_vec())
    }

    fn hier(p: &[u32], x: &[u32]) -> HierLabelDecoded {
        HierLabelDecoded {
            indices: p.to_vec(),
            distances: x.to_vec(),
        }
    }

    #[test]
    fn linf_examples() {
        assert_eq!(linf_pseudodistance(&dvec(&[0, 1, 2]), &dvec(&[0, 1])), 0);
        assert_eq!(linf_pseudodistance(&dvec(&[3, 1]), &dvec(&[0, 1, 5])), 3);
        assert_eq!(linf_pseudodistance(&dvec(&[INF, 2]), &dvec(&[INF, 1])), 1);
        assert_eq!(linf_pseudodistance(&dvec(&[INF]), &dvec(&[2])), INF);
        assert_eq!(linf_pseudodistance(&dvec(&[]), &dvec(&[1, 2])), 0);
    }

    #[test]
    fn dv_adjacency_examples() {
        assert!(dv_adjacent(&dvec(&[0, 1]), &dvec(&[1, 0])));
        assert!(!dv_adjacent(&dvec(&[0, 1]), &dvec(&[0, 1, 2])));
        assert!(!dv_adjacent(&dvec(&[0, 3]), &dvec(&[0, 1])));
        assert!(!dv_adjacent(&dvec(&[0, 1]), &dvec(&[0, 1])));
    }

    #[test]
    fn hdv_validity_examples() {
        assert!(hdv_vertex_valid(&hier(&[1], &[0])));
        assert!(!hdv_vertex_valid(&hier(&[1, 2], &[1, 1])));
        assert!(!hdv_vertex_valid(&hier(&[1, 2], &[1])));
        assert!(!hdv_vertex_valid(&hier(&[], &[])));
    }

    #[test]
    fn hdv_adjacency_examples() {
        assert!(hdv_adjacent(&hier(&[1], &[0]), &hier(&[1, 2], &[1, 0])));
        assert!(!hdv_adjacent(&hier(&[1], &[0]), &hier(&[3], &[0])));
        assert!(!hdv_adjacent(
            &hier(&[1, 2], &[1, 0]),
            &hier(&[1, 2], &[3, 0])
        ));
        // Same list at pseudodistance 0.
        assert!(!hdv_adjacent(&hier(&[1], &[0]), &hier(&[1], &[0])));
    }

    #[test]
    fn realized_k1_and_k2() {
        let k1 = Graph::empty(1);
        let h = build_realized_universal(std::slice::from_ref(&k1), Scheme::Dv).unwrap();
        assert_eq!(h.order(), 1);
        assert_eq!(h.graph.edge_count(), 0);

        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let h = build_realized_universal(std::slice::from_ref(&k2), Scheme::Dv).unwrap();
        assert_eq!(h.order(), 2);
        assert_eq!(h.graph.edge_count(), 1);
        match &h.payloads[h.embeddings[0][0] as usize].decoded {
            DecodedLabel::Flat(v) => assert_eq!(v.entries(), &[0, 1]),
            _ => panic!("flat payload expected"),
        }
    }

    #[test]
    fn verify_detects_swapped_images() {
        let graphs: Vec<Graph> = enumerate_connected_graphs(3).unwrap().collect();
        let h = build_realized_universal(&graphs, Scheme::Hdv).unwrap();
        for (i, g) in graphs.iter().enumerate() {
            let report = verify_isometric(g, &h, &h.embeddings[i], i).unwrap();
            assert!(report.pass, "graph {i} should embed isometrically");
            assert_eq!(report.pairs_checked, 3);
        }
        // Corrupt one embedding by swapping two images.
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let idx = graphs.iter().position(|g| *g == p3).unwrap();
        let mut emb = h.embeddings[idx].clone();
        emb.swap(0, 1);
        let report = verify_isometric(&p3, &h, &emb, idx).unwrap();
        assert!(!report.pass);
        let worst = report.worst_pair.expect("witness pair");
        assert_eq!(worst.graph_id, idx);
        assert_ne!(worst.d_source, worst.d_universal);
    }

    #[test]
    fn verify_rejects_broken_embeddings() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let h = build_realized_universal(std::slice::from_ref(&k2), Scheme::Dv).unwrap();
        assert!(verify_isometric(&k2, &h, &[0, 0], 0).is_err());
        assert!(verify_isometric(&k2, &h, &[0, 9], 0).is_err());
        assert!(verify_isometric(&k2, &h, &[0], 0).is_err());
    }

    #[test]
    fn full_universal_tiny_budgets() {
        // A decoder that rejects the empty string gives an empty host at k=0.
        let h = build_full_universal(0, Scheme::Dv).unwrap();
        assert_eq!(h.order(), 0);
        for k in [4usize, 8] {
            for scheme in [Scheme::Dv, Scheme::Hdv] {
                let h = build_full_universal(k, scheme).unwrap();
                assert!(h.order() <= (1 << (k + 1)) - 1);
            }
        }
        assert!(build_full_universal(15, Scheme::Dv).is_err());
    }

    #[test]
    fn full_universal_contains_k2_isometrically() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let labels = encode_labels(&k2, Scheme::Dv).unwrap();
        let h = build_full_universal(8, Scheme::Dv).unwrap();
        let embedding: Vec<u32> = labels
            .iter()
            .map(|b| h.vertex_by_bits(b).expect("label within budget"))
            .collect();
        let report = verify_isometric(&k2, &h, &embedding, 0).unwrap();
        assert!(report.pass);
    }

    #[test]
    fn union_embeds_disconnected_graphs() {
        let class: Vec<Graph> = (1..=2)
            .flat_map(|n| enumerate_connected_graphs(n).unwrap())
            .collect();
        let part = build_realized_universal(&class, Scheme::Dv).unwrap();
        let parts = vec![
            build_realized_universal(&class, Scheme::Dv).unwrap(),
            part,
        ];
        let union = disjoint_union_universal(&parts);
        assert_eq!(union.universal.order(), 6);

        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let emb = union.embed_graph(&g, Scheme::Dv).unwrap();
        let report = verify_isometric(&g, &union.universal, &emb, 0).unwrap();
        assert!(report.pass, "cross-component pairs must be INF on both sides");

        let three = Graph::from_edges(3, &[]).unwrap();
        assert!(matches!(
            union.embed_graph(&three, Scheme::Dv),
            Err(Error::TooManyComponents { .. })
        ));
    }

    #[test]
    fn realized_monotonicity() {
        // Embeddings recorded against the small class still verify inside
        // the host built from the larger class.
        let small: Vec<Graph> = (1..=3)
            .flat_map(|n| enumerate_connected_graphs(n).unwrap())
            .collect();
        let large: Vec<Graph> = (1..=4)
            .flat_map(|n| enumerate_connected_graphs(n).unwrap())
            .collect();
        for scheme in [Scheme::Dv, Scheme::Hdv] {
            let big = build_realized_universal(&large, scheme).unwrap();
            for (i, g) in small.iter().enumerate() {
                let emb = &big.embeddings[i];
                assert!(verify_isometric(g, &big, emb, i).unwrap().pass);
            }
        }
    }
}
