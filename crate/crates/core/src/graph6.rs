//! graph6 short form (`n <= 62`).
//!
//! One header byte `63 + n`, then the upper triangle in column-major order
//! (`j = 1..n`, `i = 0..j`) packed six bits per byte, most significant bit
//! first, each byte offset by 63. The final byte is zero-padded.

use std::path::Path;

use crate::graph::Graph;
use crate::{Error, Result};

const OFFSET: u8 = 63;
const MAX_SHORT_N: usize = 62;

fn bit_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Parses one graph6 line. Surrounding whitespace is ignored, and so are
/// the padding bits in the last byte.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let start = text.len() - text.trim_start().len();
    let bytes = text.trim().as_bytes();
    let err = |at: usize, message: String| Error::Graph6 {
        offset: start + at,
        message,
    };

    let &header = bytes.first().ok_or_else(|| err(0, "empty input".into()))?;
    if !(OFFSET..=126).contains(&header) {
        return Err(err(0, format!("header byte {header} outside [63, 126]")));
    }
    if header == 126 {
        return Err(err(0, "long-form header (n > 62) is not supported".into()));
    }
    let n = (header - OFFSET) as usize;

    let body = &bytes[1..];
    let expected = bit_count(n).div_ceil(6);
    if let Some(pos) = body.iter().position(|b| !(OFFSET..=126).contains(b)) {
        return Err(err(
            1 + pos,
            format!("byte {} outside [63, 126]", body[pos]),
        ));
    }
    if body.len() < expected {
        return Err(err(
            bytes.len(),
            format!(
                "truncated: n = {n} needs {expected} data bytes, found {}",
                body.len()
            ),
        ));
    }
    if body.len() > expected {
        return Err(err(
            1 + expected,
            format!(
                "{} trailing bytes after the adjacency data",
                body.len() - expected
            ),
        ));
    }

    let mut bits = body
        .iter()
        .flat_map(|&b| (0..6).rev().map(move |k| ((b - OFFSET) >> k) & 1 == 1));
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if bits.next().expect("length checked above") {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Canonical graph6 encoding of `g`.
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_SHORT_N {
        return Err(Error::UnsupportedSize(n));
    }
    let mut out = Vec::with_capacity(1 + bit_count(n).div_ceil(6));
    out.push(OFFSET + n as u8);

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Reads every non-blank line of a graph6 file.
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(parse_graph6)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn hand_encoded_examples() {
        // K2: header 63+2 = 'A'; one bit (0,1)=1 -> 0b100000 = 32 -> '_'
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2, Graph::star(2).unwrap());
        assert_eq!(emit_graph6(&k2).unwrap(), "A_");

        // edgeless n=3: 'B', three zero bits -> one byte 63 = '?'
        let e3 = parse_graph6("B?").unwrap();
        assert_eq!(e3, Graph::empty(3));
        assert_eq!(emit_graph6(&Graph::empty(3)).unwrap(), "B?");

        // n=1 has no data bytes; n=0 is the bare header
        assert_eq!(emit_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(emit_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
    }

    #[test]
    fn known_reference_string() {
        // 5 vertices, edges a-c, a-e, b-d, d-e; column-major bits
        // (0,1)0 (0,2)1 (1,2)0 (0,3)0 (1,3)1 (2,3)0 | (0,4)1 (1,4)0 (2,4)0 (3,4)1
        // = 010010 -> 18+63 = 'Q', 1001 00 -> 36+63 = 'c'
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g).unwrap(), "DQc");
        assert_eq!(parse_graph6("DQc\n").unwrap(), g);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        assert!(matches!(
            parse_graph6(""),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        assert!(matches!(
            parse_graph6("~"),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        assert!(matches!(
            parse_graph6(" A"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        assert!(matches!(parse_graph6("DQ"), Err(Error::Graph6 { .. })));
        assert!(matches!(
            parse_graph6("DQ c"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        assert!(matches!(
            parse_graph6("A_?"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        assert!(matches!(
            parse_graph6("\x10"),
            Err(Error::Graph6 { offset: 0, .. })
        ));
    }

    #[test]
    fn short_form_size_limit() {
        assert!(emit_graph6(&Graph::empty(62)).is_ok());
        assert!(matches!(
            emit_graph6(&Graph::empty(63)),
            Err(Error::UnsupportedSize(63))
        ));
    }

    proptest! {
        #[test]
        fn emit_then_parse_is_identity(n in 0usize..=62, p in 0.0f64..=1.0, seed: u64) {
            let g = Graph::random(n, p, seed).unwrap();
            let s = emit_graph6(&g).unwrap();
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
            prop_assert_eq!(emit_graph6(&parse_graph6(&s).unwrap()).unwrap(), s);
        }
    }
}
