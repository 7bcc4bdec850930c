//! Flat distance-vector labels. One label per vertex decodes, with no other
//! input, to the vertex's full vector of distances to all n vertices in a
//! fixed tour ordering; two labels of the same graph give the pairwise
//! distance. Labels take at most 4n + 3⌈log₂(n+1)⌉ + 3 bits.
//!
//! Layout (MSB-first):
//!   gamma(n) ‖ d(v,v₁) in max(⌈log₂ n⌉,1) bits ‖ n−1 sign bits for δ₂..δₙ
//!   ‖ n−1 runs encoding |δ₂|..|δₙ| (a 1 then |δᵢ| zeros)
//!
//! where δᵢ = d(v,vᵢ) − d(v,vᵢ₋₁). The tour ordering visits vertices by first
//! appearance on the doubled spanning-tree walk, so Σ|δᵢ| ≤ 2n and the run
//! block fits in 3n − 1 bits.

use rayon::prelude::*;

use crate::bits::{ceil_log2, index_width, BitString, DeltaSeq};
use crate::error::{Error, Result};
use crate::graph::{
    dfs_spanning_tree, tour_ordering, AllSourceBfs, DistanceVector, Graph, VertexOrdering,
};

/// Self-delimiting label of one vertex under the flat scheme.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DvLabel {
    bits: BitString,
}

impl DvLabel {
    pub fn from_bits(bits: BitString) -> Self {
        DvLabel { bits }
    }

    pub fn bits(&self) -> &BitString {
        &self.bits
    }

    pub fn len_bits(&self) -> usize {
        self.bits.len()
    }
}

/// Encode-time sidecar: the tour ordering the vectors are indexed by, plus
/// the tour's consecutive-distance sum (at most 2n).
#[derive(Clone, Debug)]
pub struct DvCodebook {
    pub ordering: VertexOrdering,
    pub tour_cost: u64,
}

/// Hard ceiling on every label this module produces for an n-vertex graph.
pub fn label_bound_bits(n: usize) -> usize {
    4 * n + 3 * ceil_log2(n + 1) as usize + 3
}

/// Label every vertex of a connected graph.
pub fn dv_encode(g: &Graph) -> Result<(DvCodebook, Vec<DvLabel>)> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let tree = dfs_spanning_tree(g, 0)?;
    let ordering = tour_ordering(g, &tree)?;
    let engine = AllSourceBfs::new(g);
    let width = index_width(n);

    let per_vertex: Vec<(DvLabel, u64)> = (0..n as u32)
        .into_par_iter()
        .map_init(
            || (engine.scratch(), Vec::new()),
            |(scratch, dist), v| {
                engine.distances_into(v, dist, scratch);
                let pos = ordering.position_of(v);
                // Distance from v to its tour successor, for the tour-cost sum.
                let next_dist = if pos + 1 < n {
                    dist[ordering.vertex_at(pos + 1) as usize] as u64
                } else {
                    0
                };

                let mut bits = BitString::new();
                bits.write_gamma(n as u64).expect("n >= 1");
                bits.write_fixed(dist[ordering.vertex_at(0) as usize] as u64, width)
                    .expect("distance below n fits the field");
                let steps: Vec<i64> = (1..n)
                    .map(|i| {
                        dist[ordering.vertex_at(i) as usize] as i64
                            - dist[ordering.vertex_at(i - 1) as usize] as i64
                    })
                    .collect();
                let deltas = DeltaSeq::from_steps(&steps);
                for i in 0..deltas.len() {
                    bits.push(deltas.step(i) < 0);
                }
                bits.write_runs(deltas.magnitudes());
                debug_assert!(bits.len() <= label_bound_bits(n));
                (DvLabel { bits }, next_dist)
            },
        )
        .collect();

    let tour_cost = per_vertex.iter().map(|(_, d)| d).sum();
    let labels = per_vertex.into_iter().map(|(l, _)| l).collect();
    Ok((
        DvCodebook {
            ordering,
            tour_cost,
        },
        labels,
    ))
}

/// Decode a label back to its distance vector. Strict: the whole bit string
/// must be consumed, zero deltas must carry a zero sign bit, and every
/// reconstructed entry must be a natural number.
pub fn dv_decode(label: &DvLabel) -> Result<DistanceVector> {
    dv_decode_bits(label.bits())
}

pub(crate) fn dv_decode_bits(bits: &BitString) -> Result<DistanceVector> {
    let mut cursor = bits.cursor();
    let n = cursor.read_gamma()? as usize;
    // A label for n vertices carries at least n−1 sign bits and n−1 run bits.
    if n > 1 && (cursor.remaining() as u128) < 2 * (n as u128 - 1) {
        return Err(Error::Malformed(format!(
            "label too short for {n} vertices"
        )));
    }
    let width = index_width(n);
    let first = cursor.read_fixed(width)? as i64;
    let mut negative = Vec::with_capacity(n - 1);
    for _ in 1..n {
        negative.push(cursor.read_bit()?);
    }
    let mags = cursor.read_runs(n - 1)?;
    if !cursor.is_exhausted() {
        return Err(Error::Malformed("trailing bits after run block".into()));
    }
    let mut signs = Vec::with_capacity(mags.len());
    for (&neg, &m) in negative.iter().zip(&mags) {
        if m == 0 {
            if neg {
                return Err(Error::Malformed("negative sign on zero delta".into()));
            }
            signs.push(0i8);
        } else {
            signs.push(if neg { -1 } else { 1 });
        }
    }
    let deltas = DeltaSeq::from_parts(signs, mags)?;

    let mut entries = Vec::with_capacity(n);
    let mut current = first;
    entries.push(current);
    for i in 0..deltas.len() {
        current += deltas.step(i);
        if current < 0 {
            return Err(Error::Malformed(format!(
                "entry {} decodes to negative distance {current}",
                i + 2
            )));
        }
        entries.push(current);
    }
    let entries: Vec<u32> = entries
        .into_iter()
        .map(|e| u32::try_from(e).map_err(|_| Error::Malformed("entry out of range".into())))
        .collect::<Result<_>>()?;
    Ok(DistanceVector(entries))
}

/// Distance between two vertices from their labels alone: locate the unique
/// zero entry of the first vector and read that coordinate of the second.
pub fn dv_pairwise_distance(a: &DvLabel, b: &DvLabel) -> Result<u32> {
    let da = dv_decode(a)?;
    let db = dv_decode(b)?;
    if da.len() != db.len() {
        return Err(Error::LabelMismatch("labels decode to different lengths"));
    }
    let i = da
        .entries()
        .iter()
        .position(|&d| d == 0)
        .ok_or(Error::Malformed("vector has no zero entry".into()))?;
    Ok(db.get(i))
}
