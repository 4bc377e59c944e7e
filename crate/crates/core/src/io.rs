//! Hypergraph file formats.
//!
//! JSON: `{"n":7,"r":3,"edges":[[0,1,2],...]}` (one line, trailing newline).
//! Text: a `n r` header line followed by one space-separated edge per line.
//! Readers accept edges in any order; writers always emit canonical order.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Serialize, Deserialize)]
struct HypergraphRepr {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

impl Serialize for Hypergraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HypergraphRepr {
            n: self.n(),
            r: self.r(),
            edges: self.edge_lists(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Hypergraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = HypergraphRepr::deserialize(d)?;
        Hypergraph::new(repr.n, repr.r, repr.edges).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl Format {
    /// Guess from a file extension; anything but `.txt`/`.hg` is JSON.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("txt") | Some("hg") => Format::Text,
            _ => Format::Json,
        }
    }
}

pub fn to_json(h: &Hypergraph) -> String {
    let mut s = serde_json::to_string(h).expect("hypergraph serialization is infallible");
    s.push('\n');
    s
}

pub fn from_json(s: &str) -> Result<Hypergraph> {
    Ok(serde_json::from_str(s)?)
}

pub fn to_text(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.n(), h.r());
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

pub fn from_text(s: &str) -> Result<Hypergraph> {
    let mut lines = s
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let (_, header) = lines.next().ok_or(Error::Parse {
        pos: 0,
        msg: "missing `n r` header".into(),
    })?;
    let header = parse_numbers(header, 0)?;
    let [n, r] = header[..] else {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("header must hold exactly two integers, found {}", header.len()),
        });
    };
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        edges.push(parse_numbers(line, lineno)?);
    }
    Hypergraph::new(n, r, edges)
}

fn parse_numbers(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                pos: lineno + 1,
                msg: format!("line {}: `{tok}` is not a vertex index", lineno + 1),
            })
        })
        .collect()
}

pub fn to_string(h: &Hypergraph, format: Format) -> String {
    match format {
        Format::Json => to_json(h),
        Format::Text => to_text(h),
    }
}

pub fn from_str(s: &str, format: Format) -> Result<Hypergraph> {
    match format {
        Format::Json => from_json(s),
        Format::Text => from_text(s),
    }
}

pub fn read_file(path: &Path) -> Result<Hypergraph> {
    let s = std::fs::read_to_string(path)?;
    from_str(&s, Format::from_path(path))
}

pub fn write_file(h: &Hypergraph, path: &Path, format: Format) -> Result<()> {
    std::fs::write(path, to_string(h, format))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vset::VertexSet;
    use proptest::prelude::*;

    #[test]
    fn json_layout() {
        let h = Hypergraph::new(4, 3, [[1, 2, 3], [0, 1, 2]]).unwrap();
        assert_eq!(to_json(&h), "{\"n\":4,\"r\":3,\"edges\":[[0,1,2],[1,2,3]]}\n");
        assert_eq!(to_text(&h), "4 3\n0 1 2\n1 2 3\n");
    }

    #[test]
    fn text_reader_canonicalizes_and_reports_lines() {
        let h = from_text("5 3\n# comment\n4 3 2\n\n0 1 2\n").unwrap();
        assert_eq!(to_text(&h), "5 3\n0 1 2\n2 3 4\n");
        let err = from_text("5 3\n0 1 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { pos: 2, .. }), "{err}");
        assert!(from_text("").is_err());
        assert!(from_text("5\n").is_err());
    }

    #[test]
    fn json_reader_rejects_invalid_edges() {
        assert!(from_json("{\"n\":3,\"r\":3,\"edges\":[[0,1,3]]}").is_err());
        assert!(from_json("{\"n\":3,\"r\":3,\"edges\":[[0,1,2],[2,1,0]]}").is_err());
    }

    proptest! {
        #[test]
        fn round_trips_are_byte_identical(
            n in 3usize..9,
            picks in proptest::collection::vec(any::<bool>(), 84),
        ) {
            let all = VertexSet::full(n).subsets(3);
            let h = Hypergraph::from_sets(
                n, 3,
                all.into_iter().zip(picks).filter(|(_, p)| *p).map(|(e, _)| e),
            ).unwrap();
            for f in [Format::Json, Format::Text] {
                let s = to_string(&h, f);
                let back = from_str(&s, f).unwrap();
                prop_assert_eq!(&back, &h);
                prop_assert_eq!(to_string(&back, f), s);
            }
        }
    }
}
