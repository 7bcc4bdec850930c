//! Label file format, shared by all schemes and bit-exact:
//!
//! ```text
//! <n> <scheme-tag>
//! order: i1 i2 … in
//! <vertex-id> <bit-length> <hex of the bits, MSB-first, zero-padded to full bytes>
//! ```
//!
//! The `order:` header records the encode-time ordering so distance and
//! universal-graph commands are self-contained. Vertex lines appear for
//! every vertex 0..n−1 in ascending order.

use std::fmt::Write as _;

use crate::bits::BitString;
use crate::error::{Error, Result};
use crate::graph::VertexOrdering;
use crate::universal::Scheme;

#[derive(Clone, Debug)]
pub struct LabelFile {
    pub scheme: Scheme,
    pub ordering: VertexOrdering,
    pub labels: Vec<BitString>,
}

impl LabelFile {
    pub fn new(scheme: Scheme, ordering: VertexOrdering, labels: Vec<BitString>) -> Result<Self> {
        if ordering.len() != labels.len() {
            return Err(Error::LabelMismatch("ordering and label count differ"));
        }
        Ok(LabelFile {
            scheme,
            ordering,
            labels,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.vertex_count(), self.scheme);
        let _ = write!(out, "order:");
        for &v in self.ordering.order() {
            let _ = write!(out, " {v}");
        }
        let _ = writeln!(out);
        for (v, bits) in self.labels.iter().enumerate() {
            let hex = if bits.is_empty() {
                "-".to_string()
            } else {
                bits.to_hex()
            };
            let _ = writeln!(out, "{v} {} {hex}", bits.len());
        }
        out
    }

    pub fn parse(input: &str) -> Result<LabelFile> {
        let mut lines = input.lines().enumerate();
        let (lineno, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "empty label file".into(),
        })?;
        let mut fields = header.split_whitespace();
        let n: usize = next_field(&mut fields, lineno, "vertex count")?
            .parse()
            .map_err(|_| parse_err(lineno, "bad vertex count"))?;
        let scheme: Scheme = next_field(&mut fields, lineno, "scheme tag")?.parse()?;

        let (lineno, order_line) = lines.next().ok_or(parse_err(1, "missing order line"))?;
        let rest = order_line
            .strip_prefix("order:")
            .ok_or(parse_err(lineno, "expected `order:` header"))?;
        let order: Vec<u32> = rest
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| parse_err(lineno, "bad order entry")))
            .collect::<Result<_>>()?;
        if order.len() != n {
            return Err(parse_err(lineno, "order length does not match header"));
        }
        let ordering =
            VertexOrdering::from_order(order).map_err(|e| parse_err(lineno, &e.to_string()))?;

        let mut labels: Vec<Option<BitString>> = vec![None; n];
        for (lineno, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            let id: usize = next_field(&mut fields, lineno, "vertex id")?
                .parse()
                .map_err(|_| parse_err(lineno, "bad vertex id"))?;
            if id >= n {
                return Err(parse_err(lineno, "vertex id out of range"));
            }
            let len: usize = next_field(&mut fields, lineno, "bit length")?
                .parse()
                .map_err(|_| parse_err(lineno, "bad bit length"))?;
            let hex = next_field(&mut fields, lineno, "hex label")?;
            let bits = if hex == "-" && len == 0 {
                BitString::new()
            } else {
                BitString::from_hex(hex, len).map_err(|e| parse_err(lineno, &e.to_string()))?
            };
            if labels[id].replace(bits).is_some() {
                return Err(parse_err(lineno, "duplicate vertex line"));
            }
        }
        let labels: Vec<BitString> = labels
            .into_iter()
            .enumerate()
            .map(|(v, l)| l.ok_or(parse_err(0, &format!("missing label for vertex {v}"))))
            .collect::<Result<_>>()?;
        LabelFile::new(scheme, ordering, labels)
    }
}

fn next_field<'a>(
    fields: &mut impl Iterator<Item = &'a str>,
    lineno: usize,
    what: &str,
) -> Result<&'a str> {
    fields
        .next()
        .ok_or_else(|| parse_err(lineno, &format!("missing {what}")))
}

fn parse_err(lineno: usize, msg: &str) -> Error {
    Error::Parse {
        line: lineno + 1,
        msg: msg.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dv::dv_encode;
    use crate::graph::Graph;
    use proptest::prelude::*;

    fn sample() -> LabelFile {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let (cb, labels) = dv_encode(&g).unwrap();
        LabelFile::new(
            Scheme::Dv,
            cb.ordering,
            labels.into_iter().map(|l| l.bits().clone()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn roundtrip_bit_exact() {
        let file = sample();
        let text = file.render();
        let back = LabelFile::parse(&text).unwrap();
        assert_eq!(back.scheme, file.scheme);
        assert_eq!(back.ordering, file.ordering);
        assert_eq!(back.labels, file.labels);
        assert_eq!(back.render(), text);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(LabelFile::parse("").is_err());
        assert!(LabelFile::parse("2 dv\norder: 0 1\n0 4 70\n").is_err());
        assert!(LabelFile::parse("1 nope\norder: 0\n0 2 80\n").is_err());
        assert!(LabelFile::parse("1 dv\norder: 0 1\n0 2 80\n").is_err());
        assert!(LabelFile::parse("1 dv\norder: 0\n0 2 80\n0 2 80\n").is_err());
        // Bad padding: 5 bits but low bit of the byte set.
        assert!(LabelFile::parse("1 dv\norder: 0\n0 5 81\n").is_err());
    }

    proptest! {
        #[test]
        fn roundtrip_random_bitstrings(
            lens in proptest::collection::vec(0usize..40, 1..8),
            seed in 0u64..1000,
        ) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let labels: Vec<BitString> = lens
                .iter()
                .map(|&l| {
                    let mut bs = BitString::new();
                    for _ in 0..l {
                        bs.push(rng.gen_bool(0.5));
                    }
                    bs
                })
                .collect();
            let n = labels.len();
            let file = LabelFile::new(Scheme::Hdv, VertexOrdering::identity(n), labels).unwrap();
            let back = LabelFile::parse(&file.render()).unwrap();
            prop_assert_eq!(back.labels, file.labels);
        }
    }
}
