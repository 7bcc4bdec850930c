//! Command implementations behind the `isolabel` binary: generate graphs,
//! encode/decode label files, answer distance queries from labels alone,
//! build and verify universal graphs, and benchmark label sizes against the
//! schemes' explicit bounds.
//!
//! Every command is a deterministic function of its arguments and seed.
//! Exit codes: 0 success, 2 input error, 3 verification failure (including
//! disconnected inputs to connected-only commands, so they stay
//! distinguishable from parse failures).

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::bits::BitString;
use crate::dv::{self, dv_pairwise_distance, DvLabel};
use crate::error::{Error, Result};
use crate::graph::{random_connected_graph, random_graph, random_tree, enumerate_connected_graphs, Graph};
use crate::hdv::{self, hub_distance};
use crate::labelfile::LabelFile;
use crate::separator;
use crate::universal::{
    build_realized_universal, decode_label, encode_labels, encode_labels_with_ordering,
    verify_isometric, DecodedLabel, Scheme, UniversalGraph, VertexPayload,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_VERIFY_FAILURE: i32 = 3;

/// Map an error to the process exit code. Disconnected inputs count as a
/// failed connectivity check (3); everything else is an input error (2).
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Disconnected => EXIT_VERIFY_FAILURE,
        _ => EXIT_INPUT_ERROR,
    }
}

/// Families the `gen` command can emit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenFamily {
    /// G(n, p); may be disconnected.
    Random,
    /// Uniform-attachment tree.
    Tree,
    /// Uniform-attachment tree plus G(n, p) edges; always connected.
    Connected,
}

/// Families the `bench` command sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchFamily {
    /// Connected random graphs (tree ∪ G(n, p)).
    Random,
    /// Uniform-attachment trees.
    Tree,
}

pub fn cmd_gen(family: GenFamily, n: usize, p: f64, seed: u64, out: &Path) -> Result<()> {
    let g = match family {
        GenFamily::Random => random_graph(n, p, seed)?,
        GenFamily::Tree => random_tree(n, seed)?,
        GenFamily::Connected => random_connected_graph(n, p, seed)?,
    };
    fs::write(out, g.to_text())?;
    Ok(())
}

pub fn cmd_encode(input: &Path, scheme: Scheme, out: &Path) -> Result<()> {
    let text = fs::read_to_string(input)?;
    let g = Graph::parse_text(&text)?;
    let (ordering, labels) = encode_labels_with_ordering(&g, scheme)?;
    let file = LabelFile::new(scheme, ordering, labels)?;
    fs::write(out, file.render())?;
    Ok(())
}

/// Human-readable dump of a label file: the distance vector per vertex for
/// the flat scheme, the (p, x) pair per vertex for hierarchical schemes.
pub fn cmd_decode(labels_path: &Path) -> Result<String> {
    let file = LabelFile::parse(&fs::read_to_string(labels_path)?)?;
    let mut out = String::new();
    for (v, bits) in file.labels.iter().enumerate() {
        match decode_label(file.scheme, bits)? {
            DecodedLabel::Flat(vec) => {
                let _ = write!(out, "{v}:");
                for &d in vec.entries() {
                    let _ = write!(out, " {d}");
                }
            }
            DecodedLabel::Hier(h) => {
                let _ = write!(out, "{v}: p={} x={}", join(&h.indices), join(&h.distances));
            }
        }
        let _ = writeln!(out);
    }
    Ok(out)
}

fn join(xs: &[u32]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Distance between u and v computed from their two labels only.
pub fn cmd_dist(labels_path: &Path, u: u32, v: u32) -> Result<u32> {
    let file = LabelFile::parse(&fs::read_to_string(labels_path)?)?;
    let n = file.vertex_count();
    for w in [u, v] {
        if w as usize >= n {
            return Err(Error::UnknownVertex(w));
        }
    }
    match file.scheme {
        Scheme::Dv => dv_pairwise_distance(
            &DvLabel::from_bits(file.labels[u as usize].clone()),
            &DvLabel::from_bits(file.labels[v as usize].clone()),
        ),
        Scheme::Hdv | Scheme::Sep => {
            let a = match decode_label(file.scheme, &file.labels[u as usize])? {
                DecodedLabel::Hier(h) => h,
                DecodedLabel::Flat(_) => unreachable!("hierarchical scheme"),
            };
            let b = match decode_label(file.scheme, &file.labels[v as usize])? {
                DecodedLabel::Hier(h) => h,
                DecodedLabel::Flat(_) => unreachable!("hierarchical scheme"),
            };
            hub_distance(&a, &b)
        }
    }
}

/// Largest class size `universal` and `verify` accept; the class of all
/// connected graphs up to 6 vertices already has 27478 members.
pub const MAX_CLASS_ORDER: usize = 6;

#[derive(Clone, Debug)]
pub struct UniversalReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub lines: Vec<String>,
    pub all_pass: bool,
    pub graph_path: PathBuf,
    pub map_path: PathBuf,
}

/// Build the realized universal graph of all labelled connected graphs on
/// 1..=class_max_n vertices, verify every embedding, and write the host
/// graph plus its vertex-to-label mapping.
pub fn cmd_universal(
    scheme: Scheme,
    class_max_n: usize,
    out_prefix: &Path,
) -> Result<UniversalReport> {
    if class_max_n < 1 || class_max_n > MAX_CLASS_ORDER {
        return Err(Error::Guard {
            name: "class-max-n",
            value: class_max_n,
            max: MAX_CLASS_ORDER,
        });
    }
    let class = connected_class(class_max_n)?;
    let h = build_realized_universal(&class, scheme)?;
    let mut lines = Vec::with_capacity(class.len());
    let mut all_pass = true;
    for (i, g) in class.iter().enumerate() {
        let report = verify_isometric(g, &h, &h.embeddings[i], i)?;
        if report.pass {
            lines.push(format!(
                "graph {i} n={}: isometric ({} pairs)",
                g.order(),
                report.pairs_checked
            ));
        } else {
            all_pass = false;
            let w = report.worst_pair.expect("failing report carries a witness");
            lines.push(format!(
                "graph {i} n={}: FAIL u={} v={} d_source={} d_universal={}",
                g.order(),
                w.u,
                w.v,
                w.d_source,
                w.d_universal
            ));
        }
    }
    let graph_path = suffixed(out_prefix, ".graph");
    let map_path = suffixed(out_prefix, ".map");
    fs::write(&graph_path, h.graph.to_text())?;
    let mut map = Vec::new();
    h.write_mapping(&mut map)?;
    fs::write(&map_path, map)?;
    Ok(UniversalReport {
        vertex_count: h.order(),
        edge_count: h.graph.edge_count(),
        lines,
        all_pass,
        graph_path,
        map_path,
    })
}

fn suffixed(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_os_string();
    s.push(suffix);
    PathBuf::from(s)
}

/// Every labelled connected graph on 1..=max_n vertices.
pub fn connected_class(max_n: usize) -> Result<Vec<Graph>> {
    let mut class = Vec::new();
    for n in 1..=max_n {
        class.extend(enumerate_connected_graphs(n)?);
    }
    Ok(class)
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub lines: Vec<String>,
    pub all_pass: bool,
}

/// Re-verify universal-graph files on disk: decode every mapped label,
/// recompute the adjacency rule and compare with the stored edges, then
/// re-embed the whole class and check isometry inside the stored host.
pub fn cmd_verify(
    scheme: Scheme,
    class_max_n: usize,
    graph_path: &Path,
    map_path: &Path,
) -> Result<VerifyReport> {
    if class_max_n < 1 || class_max_n > MAX_CLASS_ORDER {
        return Err(Error::Guard {
            name: "class-max-n",
            value: class_max_n,
            max: MAX_CLASS_ORDER,
        });
    }
    let stored = Graph::parse_text(&fs::read_to_string(graph_path)?)?;
    let payloads = parse_mapping(&fs::read_to_string(map_path)?, stored.order(), scheme)?;
    let mut lines = Vec::new();
    let mut all_pass = true;

    // The stored edge set must match the adjacency rule on decoded labels.
    let rebuilt = build_adjacency_comparison(&stored, &payloads);
    match rebuilt {
        None => lines.push("adjacency: stored edges match the decoded labels".into()),
        Some(msg) => {
            all_pass = false;
            lines.push(format!("adjacency: FAIL {msg}"));
        }
    }

    let host = UniversalGraph::from_parts(stored, payloads)?;
    for (i, g) in connected_class(class_max_n)?.iter().enumerate() {
        let labels = encode_labels(g, scheme)?;
        let mut embedding = Vec::with_capacity(labels.len());
        let mut missing = false;
        for bits in &labels {
            match host.vertex_by_bits(bits) {
                Some(id) => embedding.push(id),
                None => {
                    missing = true;
                    break;
                }
            }
        }
        if missing {
            all_pass = false;
            lines.push(format!("graph {i} n={}: FAIL label not in mapping", g.order()));
            continue;
        }
        let report = verify_isometric(g, &host, &embedding, i)?;
        if report.pass {
            lines.push(format!(
                "graph {i} n={}: isometric ({} pairs)",
                g.order(),
                report.pairs_checked
            ));
        } else {
            all_pass = false;
            let w = report.worst_pair.expect("failing report carries a witness");
            lines.push(format!(
                "graph {i} n={}: FAIL u={} v={} d_source={} d_universal={}",
                g.order(),
                w.u,
                w.v,
                w.d_source,
                w.d_universal
            ));
        }
    }
    Ok(VerifyReport { lines, all_pass })
}

fn parse_mapping(input: &str, n: usize, scheme: Scheme) -> Result<Vec<VertexPayload>> {
    let mut slots: Vec<Option<BitString>> = vec![None; n];
    for (lineno, line) in input.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let bad = |msg: &str| Error::Parse {
            line: lineno + 1,
            msg: msg.to_string(),
        };
        let id: usize = fields
            .next()
            .ok_or_else(|| bad("missing vertex id"))?
            .parse()
            .map_err(|_| bad("bad vertex id"))?;
        let len: usize = fields
            .next()
            .ok_or_else(|| bad("missing bit length"))?
            .parse()
            .map_err(|_| bad("bad bit length"))?;
        let hex = fields.next().ok_or_else(|| bad("missing hex label"))?;
        if id >= n {
            return Err(bad("vertex id out of range"));
        }
        let bits = if hex == "-" && len == 0 {
            BitString::new()
        } else {
            BitString::from_hex(hex, len).map_err(|e| bad(&e.to_string()))?
        };
        if slots[id].replace(bits).is_some() {
            return Err(bad("duplicate vertex id"));
        }
    }
    slots
        .into_iter()
        .enumerate()
        .map(|(id, slot)| {
            let bits = slot.ok_or(Error::Parse {
                line: 0,
                msg: format!("missing mapping line for vertex {id}"),
            })?;
            let decoded = decode_label(scheme, &bits)?;
            Ok(VertexPayload { bits, decoded })
        })
        .collect()
}

/// Some edge mismatch between the stored host and the adjacency rule, if any.
fn build_adjacency_comparison(stored: &Graph, payloads: &[VertexPayload]) -> Option<String> {
    use crate::universal::{dv_adjacent, hdv_adjacent};
    let n = payloads.len();
    for i in 0..n {
        for j in i + 1..n {
            let expected = match (&payloads[i].decoded, &payloads[j].decoded) {
                (DecodedLabel::Flat(a), DecodedLabel::Flat(b)) => dv_adjacent(a, b),
                (DecodedLabel::Hier(a), DecodedLabel::Hier(b)) => hdv_adjacent(a, b),
                _ => false,
            };
            if expected != stored.has_edge(i as u32, j as u32) {
                return Some(format!(
                    "vertices {i} and {j}: rule says {expected}, file says {}",
                    !expected
                ));
            }
        }
    }
    None
}

/// Largest graph order `bench` accepts.
pub const MAX_BENCH_ORDER: usize = 100_000;

#[derive(Clone, Debug)]
pub struct BenchReport {
    pub csv: String,
    pub all_within_bound: bool,
}

/// Sweep label sizes over random families and compare the max against the
/// scheme's explicit bound. One CSV row per (n, p) configuration; hard
/// assertion `max ≤ bound` reflected in `all_within_bound`.
pub fn cmd_bench(
    scheme: Scheme,
    family: BenchFamily,
    ns: &[usize],
    ps: &[f64],
    seeds: usize,
) -> Result<BenchReport> {
    if scheme == Scheme::Sep && family != BenchFamily::Tree {
        return Err(Error::Unsupported(
            "the separator bound is pinned for trees only; use --family tree".into(),
        ));
    }
    if seeds == 0 {
        return Err(Error::Unsupported("--seeds must be at least 1".into()));
    }
    for &n in ns {
        if n < 1 || n > MAX_BENCH_ORDER {
            return Err(Error::Guard {
                name: "bench n",
                value: n,
                max: MAX_BENCH_ORDER,
            });
        }
    }
    let ps_used: &[f64] = match family {
        BenchFamily::Tree => &[0.0],
        BenchFamily::Random => ps,
    };
    let mut csv = String::from("scheme,family,n,p,seeds,max_label_bits,bound_bits,ratio\n");
    let mut all_within = true;
    for &n in ns {
        for &p in ps_used {
            let mut max_bits = 0usize;
            for seed in 0..seeds as u64 {
                let g = match family {
                    BenchFamily::Random => random_connected_graph(n, p, seed)?,
                    BenchFamily::Tree => random_tree(n, seed)?,
                };
                let labels = encode_labels(&g, scheme)?;
                max_bits = max_bits.max(labels.iter().map(|b| b.len()).max().unwrap_or(0));
            }
            let bound = match scheme {
                Scheme::Dv => dv::label_bound_bits(n),
                Scheme::Hdv => hdv::label_bound_bits(n),
                Scheme::Sep => separator::tree_label_bound_bits(n),
            };
            if max_bits > bound {
                all_within = false;
            }
            let family_tag = match family {
                BenchFamily::Random => "random",
                BenchFamily::Tree => "tree",
            };
            let p_field = match family {
                BenchFamily::Random => format!("{p}"),
                BenchFamily::Tree => "-".to_string(),
            };
            let _ = writeln!(
                csv,
                "{scheme},{family_tag},{n},{p_field},{seeds},{max_bits},{bound},{:.4}",
                max_bits as f64 / bound as f64
            );
        }
    }
    Ok(BenchReport {
        csv,
        all_within_bound: all_within,
    })
}
