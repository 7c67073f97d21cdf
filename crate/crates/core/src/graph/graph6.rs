//! graph6 encoding: a size prefix followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte.

use super::Graph;
use crate::error::{Error, Result};

const BIAS: u8 = 63;
const LONG_MARK: u8 = 126;

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = *bytes.first().ok_or_else(|| err(0, "empty input"))?;
    if first != LONG_MARK {
        return Ok(((first - BIAS) as usize, 1));
    }
    let (start, width) = if bytes.get(1) == Some(&LONG_MARK) {
        (2, 6)
    } else {
        (1, 3)
    };
    if bytes.len() < start + width {
        return Err(err(bytes.len(), "truncated long-form vertex count"));
    }
    let n = bytes[start..start + width]
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
    Ok((n, start + width))
}

/// Parses one graph6 line. A trailing newline (or CRLF) is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(pos) = bytes.iter().position(|&b| !(BIAS..=126).contains(&b)) {
        return Err(err(pos, format!("invalid character 0x{:02x}", bytes[pos])));
    }
    let (n, header) = decode_size(bytes)?;
    if n == 0 {
        return Err(err(0, "graph6 encodes zero vertices"));
    }
    let bits = n * (n - 1) / 2;
    let body = &bytes[header..];
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(err(
            header + body.len().min(expected),
            format!("expected {expected} data bytes for n={n}, found {}", body.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - BIAS;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[body.len() - 1] - BIAS;
        let pad_mask = (1u8 << (6 - bits % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(err(header + body.len() - 1, "nonzero padding bits"));
        }
    }
    Graph::new(n, edges)
}

/// Encodes `g` as a graph6 line without the trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(LONG_MARK);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + BIAS));
    } else {
        out.extend([LONG_MARK, LONG_MARK]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + BIAS));
    }
    let bits = n * (n - 1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                data[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    out.extend(data.into_iter().map(|b| b + BIAS));
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn smallest_encodings() {
        let g = parse_graph6("@").unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
        assert_eq!(write_graph6(&g), "@");

        let k2 = parse_graph6("A_\n").unwrap();
        assert_eq!(k2.edges(), &[(0, 1)]);
        assert_eq!(write_graph6(&k2), "A_");

        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4.m(), 6);
        assert_eq!(write_graph6(&k4), "C~");
    }

    #[test]
    fn known_five_vertex_graph() {
        // edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        // 'A' declares n=2 and needs one data byte
        assert!(matches!(parse_graph6("A"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("A__"), Err(Error::Graph6 { .. })));
        // '`' = 96 -> 33 = 100001: padding bit set
        assert!(matches!(parse_graph6("A`"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("C\u{7f}"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("C ~"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
    }

    #[test]
    fn long_form_round_trip() {
        let n = 70;
        let g = Graph::new(n, (0..n - 1).map(|v| (v, v + 1))).unwrap();
        let s = write_graph6(&g);
        assert_eq!(s.as_bytes()[0], LONG_MARK);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..=62, seed in any::<u64>()) {
            let mut state = seed | 1;
            let mut edges = Vec::new();
            for v in 1..n {
                for u in 0..v {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state % 3 == 0 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, edges).unwrap();
            prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
        }
    }
}
