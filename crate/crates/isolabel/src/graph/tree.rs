//! Rooted trees, DFS spanning trees, the doubled-tree tour ordering, and
//! tree centroids.

use super::{Graph, VertexOrdering};
use crate::error::{Error, Result};

const UNSET: u32 = u32::MAX;

/// Rooted tree on vertices 0..n−1, stored as a parent array with derived
/// children lists (sorted ascending) and depths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    root: u32,
    parent: Vec<u32>,
    children: Vec<Vec<u32>>,
    depth: Vec<u32>,
}

impl RootedTree {
    pub fn from_parents(root: u32, parents: &[Option<u32>]) -> Result<RootedTree> {
        let n = parents.len();
        if n == 0 || root as usize >= n {
            return Err(Error::VertexOutOfRange {
                vertex: root,
                order: n,
            });
        }
        let mut parent = vec![UNSET; n];
        let mut children = vec![Vec::new(); n];
        for (v, p) in parents.iter().enumerate() {
            match p {
                None => {
                    if v as u32 != root {
                        return Err(Error::NotATree);
                    }
                }
                Some(p) => {
                    if *p as usize >= n || *p as usize == v {
                        return Err(Error::NotATree);
                    }
                    parent[v] = *p;
                    children[*p as usize].push(v as u32);
                }
            }
        }
        if parent[root as usize] != UNSET {
            return Err(Error::NotATree);
        }
        for c in &mut children {
            c.sort_unstable();
        }
        // Depths by top-down sweep; if not all vertices are reached the
        // parent array contains a cycle or a second component.
        let mut depth = vec![UNSET; n];
        depth[root as usize] = 0;
        let mut queue = vec![root];
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &c in &children[u as usize] {
                depth[c as usize] = depth[u as usize] + 1;
                queue.push(c);
            }
        }
        if queue.len() != n {
            return Err(Error::NotATree);
        }
        Ok(RootedTree {
            root,
            parent,
            children,
            depth,
        })
    }

    pub fn order(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> u32 {
        self.root
    }

    pub fn parent(&self, v: u32) -> Option<u32> {
        let p = self.parent[v as usize];
        (p != UNSET).then_some(p)
    }

    pub fn children(&self, v: u32) -> &[u32] {
        &self.children[v as usize]
    }

    pub fn depth(&self, v: u32) -> u32 {
        self.depth[v as usize]
    }

    /// Vertices on the unique path root → v, inclusive.
    pub fn root_path(&self, v: u32) -> Vec<u32> {
        let mut path = Vec::with_capacity(self.depth(v) as usize + 1);
        let mut u = v;
        loop {
            path.push(u);
            match self.parent(u) {
                Some(p) => u = p,
                None => break,
            }
        }
        path.reverse();
        path
    }

    pub fn subtree_sizes(&self) -> Vec<u32> {
        let order = self.preorder();
        let mut size = vec![1u32; self.order()];
        for &v in order.iter().rev() {
            if let Some(p) = self.parent(v) {
                size[p as usize] += size[v as usize];
            }
        }
        size
    }

    /// Preorder with children visited in ascending id.
    pub fn preorder(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.order());
        let mut stack = vec![self.root];
        while let Some(u) = stack.pop() {
            out.push(u);
            for &c in self.children[u as usize].iter().rev() {
                stack.push(c);
            }
        }
        out
    }

    /// Preorder entry/exit times; u is an ancestor of v (inclusive) iff
    /// tin[u] <= tin[v] and tout[v] <= tout[u].
    pub fn preorder_intervals(&self) -> (Vec<u32>, Vec<u32>) {
        let n = self.order();
        let mut tin = vec![0u32; n];
        let mut tout = vec![0u32; n];
        let mut timer = 0u32;
        // (vertex, child index); mirrors recursive DFS without the call stack.
        let mut stack: Vec<(u32, usize)> = vec![(self.root, 0)];
        tin[self.root as usize] = timer;
        timer += 1;
        while let Some((u, i)) = stack.last_mut() {
            let u = *u;
            if *i < self.children[u as usize].len() {
                let c = self.children[u as usize][*i];
                *i += 1;
                tin[c as usize] = timer;
                timer += 1;
                stack.push((c, 0));
            } else {
                tout[u as usize] = timer;
                timer += 1;
                stack.pop();
            }
        }
        (tin, tout)
    }

    pub fn to_graph(&self) -> Graph {
        let edges: Vec<(u32, u32)> = (0..self.order() as u32)
            .filter_map(|v| self.parent(v).map(|p| (p, v)))
            .collect();
        Graph::from_edges(self.order(), &edges).expect("tree edges are simple")
    }
}

/// Depth-first-search spanning tree rooted at `root`, exploring neighbors in
/// ascending id. Every non-tree edge of a connected graph then joins a vertex
/// to one of its tree ancestors.
pub fn dfs_spanning_tree(g: &Graph, root: u32) -> Result<RootedTree> {
    g.check_vertex(root)?;
    let n = g.order();
    let mut parents: Vec<Option<u32>> = vec![None; n];
    let mut visited = vec![false; n];
    visited[root as usize] = true;
    let mut reached = 1usize;
    // (vertex, next neighbor index) — byte-for-byte the recursive visit order.
    let mut stack: Vec<(u32, usize)> = vec![(root, 0)];
    while let Some((u, i)) = stack.last_mut() {
        let u = *u;
        let neighbors = g.neighbors(u);
        if *i < neighbors.len() {
            let w = neighbors[*i];
            *i += 1;
            if !visited[w as usize] {
                visited[w as usize] = true;
                parents[w as usize] = Some(u);
                reached += 1;
                stack.push((w, 0));
            }
        } else {
            stack.pop();
        }
    }
    if reached != n {
        return Err(Error::Disconnected);
    }
    RootedTree::from_parents(root, &parents)
}

/// Vertex ordering by first appearance on the Eulerian walk of the doubled
/// tree (children in ascending id), which is exactly the tree's preorder.
/// Consecutive vertices are then at total graph distance at most 2n, because
/// the walk uses each tree edge twice.
pub fn tour_ordering(g: &Graph, t: &RootedTree) -> Result<VertexOrdering> {
    if t.order() != g.order() {
        return Err(Error::InvalidOrdering("tree does not span the graph"));
    }
    for v in 0..t.order() as u32 {
        if let Some(p) = t.parent(v) {
            if !g.has_edge(p, v) {
                return Err(Error::InvalidOrdering("tree edge missing from graph"));
            }
        }
    }
    VertexOrdering::from_order(t.preorder())
}

/// A centroid of a tree: removing it leaves components of size at most n/2
/// (hence at most 2n/3). Ties broken toward the smallest id.
pub fn tree_centroid(g: &Graph) -> Result<u32> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let n = g.order();
    let t = dfs_spanning_tree(g, 0)?;
    let size = t.subtree_sizes();
    for v in 0..n as u32 {
        let mut max_comp = n as u32 - size[v as usize];
        for &c in t.children(v) {
            max_comp = max_comp.max(size[c as usize]);
        }
        if 2 * max_comp as usize <= n {
            return Ok(v);
        }
    }
    unreachable!("every tree has a centroid")
}
