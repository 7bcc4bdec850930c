//! Seeded random graph and tree generators. Every generator is a pure
//! function of (parameters, seed).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

/// Erdős–Rényi G(n, p): each of the n(n−1)/2 pairs, visited lexicographically,
/// becomes an edge with probability p. May be disconnected.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = bernoulli_pairs(n, p, &mut rng);
    Graph::from_edges(n, &edges)
}

/// Random tree by uniform attachment: vertex i ≥ 1 picks a parent uniformly
/// among 0..i.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = attachment_tree(n, &mut rng);
    Graph::from_edges(n, &edges)
}

/// Connected random graph: the G(n, p) edge set of [`random_graph`] (same
/// seed, same pairs) plus the edges of a uniform-attachment tree drawn from
/// the continuation of the same stream. Always connected.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = bernoulli_pairs(n, p, &mut rng);
    // Tree edges already satisfy parent < child.
    edges.extend(attachment_tree(n, &mut rng));
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, &edges)
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    Ok(())
}

fn bernoulli_pairs(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Vec<(u32, u32)> {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}

fn attachment_tree(n: usize, rng: &mut ChaCha8Rng) -> Vec<(u32, u32)> {
    (1..n as u32)
        .map(|i| (rng.gen_range(0..i), i))
        .collect::<Vec<_>>()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremes() {
        let k5 = random_graph(5, 1.0, 42).unwrap();
        assert_eq!(k5.edge_count(), 10);
        let empty = random_graph(5, 0.0, 42).unwrap();
        assert_eq!(empty.edge_count(), 0);
    }

    #[test]
    fn deterministic_per_seed() {
        for seed in 0..5u64 {
            assert_eq!(
                random_graph(12, 0.3, seed).unwrap(),
                random_graph(12, 0.3, seed).unwrap()
            );
            assert_eq!(
                random_tree(12, seed).unwrap(),
                random_tree(12, seed).unwrap()
            );
            assert_eq!(
                random_connected_graph(12, 0.3, seed).unwrap(),
                random_connected_graph(12, 0.3, seed).unwrap()
            );
        }
        assert_ne!(
            random_graph(12, 0.3, 1).unwrap(),
            random_graph(12, 0.3, 2).unwrap()
        );
    }

    #[test]
    fn trees_are_trees_and_connected_is_connected() {
        for seed in 0..20u64 {
            assert!(random_tree(17, seed).unwrap().is_tree());
            assert!(random_connected_graph(17, 0.05, seed).unwrap().is_connected());
            assert!(random_connected_graph(2, 0.0, seed).unwrap().is_connected());
        }
    }

    #[test]
    fn probability_validated() {
        assert!(matches!(
            random_graph(5, 1.5, 0),
            Err(Error::InvalidProbability(_))
        ));
        assert!(matches!(
            random_graph(5, -0.1, 0),
            Err(Error::InvalidProbability(_))
        ));
    }
}
