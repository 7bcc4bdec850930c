//! The file-based workflow, as the `isolabel` binary drives it: graph text
//! files in, bit-exact label files out, distance queries answered from the
//! files alone.
//!
//!     cargo run --release --example label_files

use isolabel::cli::{cmd_decode, cmd_dist, cmd_encode, cmd_gen, GenFamily};
use isolabel::universal::Scheme;

fn main() {
    let dir = std::env::temp_dir().join("isolabel-example");
    std::fs::create_dir_all(&dir).unwrap();
    let graph_path = dir.join("demo.graph");
    let labels_path = dir.join("demo.labels");

    cmd_gen(GenFamily::Connected, 12, 0.2, 5, &graph_path).unwrap();
    println!("graph file:\n{}", std::fs::read_to_string(&graph_path).unwrap());

    cmd_encode(&graph_path, Scheme::Sep, &labels_path).unwrap();
    println!("label file:\n{}", std::fs::read_to_string(&labels_path).unwrap());

    println!("decoded:\n{}", cmd_decode(&labels_path).unwrap());
    for (u, v) in [(0, 11), (3, 7)] {
        println!("dist {u} {v} -> {}", cmd_dist(&labels_path, u, v).unwrap());
    }
}
