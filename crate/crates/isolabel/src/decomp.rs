//! Hierarchical decompositions: a rooted tree of non-empty bags partitioning
//! the vertex set so that every edge joins a vertex to one in an ancestor bag.
//! Shared by the DFS-tree scheme (singleton bags) and the separator scheme.

use crate::error::{Error, Result};
use crate::graph::{Graph, RootedTree};

#[derive(Clone, Debug)]
pub struct HierarchicalDecomposition {
    tree: RootedTree,
    bags: Vec<Vec<u32>>,
    node_of: Vec<u32>,
}

impl HierarchicalDecomposition {
    /// Build from a bag tree and per-node bags over `n` graph vertices.
    /// Validates that bags are non-empty, sorted, and partition 0..n−1.
    pub fn new(tree: RootedTree, bags: Vec<Vec<u32>>, n: usize) -> Result<Self> {
        if bags.len() != tree.order() {
            return Err(Error::InvalidDecomposition(
                "one bag required per tree node".into(),
            ));
        }
        let mut node_of = vec![u32::MAX; n];
        for (node, bag) in bags.iter().enumerate() {
            if bag.is_empty() {
                return Err(Error::InvalidDecomposition(format!("bag {node} is empty")));
            }
            if bag.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidDecomposition(format!(
                    "bag {node} is not sorted"
                )));
            }
            for &v in bag {
                if v as usize >= n || node_of[v as usize] != u32::MAX {
                    return Err(Error::InvalidDecomposition(format!(
                        "vertex {v} missing from range or covered twice"
                    )));
                }
                node_of[v as usize] = node as u32;
            }
        }
        if node_of.iter().any(|&x| x == u32::MAX) {
            return Err(Error::InvalidDecomposition(
                "bags do not cover every vertex".into(),
            ));
        }
        Ok(HierarchicalDecomposition {
            tree,
            bags,
            node_of,
        })
    }

    /// Singleton-bag decomposition: bag node v carries exactly {v}.
    pub fn singleton(tree: &RootedTree) -> Self {
        let n = tree.order();
        HierarchicalDecomposition {
            tree: tree.clone(),
            bags: (0..n as u32).map(|v| vec![v]).collect(),
            node_of: (0..n as u32).collect(),
        }
    }

    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    pub fn bag(&self, node: u32) -> &[u32] {
        &self.bags[node as usize]
    }

    pub fn bag_count(&self) -> usize {
        self.bags.len()
    }

    pub fn node_of(&self, v: u32) -> u32 {
        self.node_of[v as usize]
    }

    /// Number of bag levels (max node depth + 1).
    pub fn depth(&self) -> usize {
        (0..self.tree.order() as u32)
            .map(|t| self.tree.depth(t) as usize)
            .max()
            .map_or(0, |d| d + 1)
    }

    /// Bag nodes on the path root → bag of v, inclusive.
    pub fn ancestor_nodes_of(&self, v: u32) -> Vec<u32> {
        self.tree.root_path(self.node_of(v))
    }

    /// Check the defining property against a graph: bags partition V(G)
    /// (guaranteed by construction) and every edge joins a vertex to one in
    /// an ancestor bag of the other.
    pub fn validate_for(&self, g: &Graph) -> Result<()> {
        if g.order() != self.node_of.len() {
            return Err(Error::InvalidDecomposition(
                "decomposition covers a different vertex count".into(),
            ));
        }
        let (tin, tout) = self.tree.preorder_intervals();
        let anc = |a: u32, b: u32| {
            tin[a as usize] <= tin[b as usize] && tout[b as usize] <= tout[a as usize]
        };
        for (u, v) in g.edges() {
            let (bu, bv) = (self.node_of(u), self.node_of(v));
            if !(anc(bu, bv) || anc(bv, bu)) {
                return Err(Error::InvalidDecomposition(format!(
                    "edge {u}-{v} joins unrelated bags {bu} and {bv}"
                )));
            }
        }
        Ok(())
    }
}
