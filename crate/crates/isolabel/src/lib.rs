//! Compact distance labels for graphs and the universal graphs they induce.
//!
//! Three labelling schemes share one idea: give every vertex a short
//! bit string from which distances can be recovered without the graph.
//!
//! - [`dv`]: flat distance-vector labels of at most 4n + O(log n) bits.
//!   One label decodes to the full vector of distances to every vertex in a
//!   fixed tour ordering; two labels give the pairwise distance.
//! - [`hdv`]: hierarchical labels of at most n·log₂3 + O(log² n) bits over a
//!   DFS-tree decomposition with a heavy-path coloring; a label decodes to
//!   the vertex's ancestors and its distances to them.
//! - [`separator`]: labels of O(f(n)·log² n) bits for graphs admitting
//!   balanced separators of size f(n), with a centroid oracle for trees.
//!
//! Because adjacency between *labels* can be decided from decoded content
//! alone, the set of all labels forms a graph that contains every encoded
//! graph as an isometric subgraph. [`universal`] materializes those host
//! graphs and verifies the isometry claim against BFS ground truth.
//!
//! Start with the runnable examples (`cargo run --release --example …`), or
//! the `isolabel` binary for the file-based workflow.

pub mod bits;
pub mod cli;
pub mod decomp;
pub mod dv;
mod error;
pub mod graph;
pub mod hdv;
pub mod labelfile;
pub mod separator;
pub mod universal;

pub use error::{Error, Result};
