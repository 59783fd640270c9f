//! graph6 codec.
//!
//! Bytes are `63 + x` for 6-bit groups `x`. The vertex count is one byte for
//! `n <= 62`, otherwise `126` followed by 18 bits in three bytes. Adjacency
//! bits follow the upper triangle column by column: `x(0,1), x(0,2), x(1,2),
//! x(0,3), ...`, packed big-endian and zero-padded to a multiple of six.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count representable with the 4-byte size header.
pub const MAX_VERTICES: usize = 258_047;

const HEADER: &[u8] = b">>graph6<<";

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedGraph6(msg.into())
}

/// Parses one graph6 record. A trailing newline and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(input: &[u8]) -> Result<Graph> {
    let mut bytes = input;
    while let Some((&last, rest)) = bytes.split_last() {
        if last == b'\n' || last == b'\r' {
            bytes = rest;
        } else {
            break;
        }
    }
    if let Some(rest) = bytes.strip_prefix(HEADER) {
        bytes = rest;
    }
    if bytes.is_empty() {
        return Err(malformed("empty record"));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(malformed(format!(
            "byte {} at offset {pos} outside 63..=126",
            bytes[pos]
        )));
    }

    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 {
            return Err(malformed("truncated vertex count"));
        }
        if bytes[1] == 126 {
            return Err(malformed(format!(
                "vertex counts above {MAX_VERTICES} are not supported"
            )));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    };

    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "expected {expected} adjacency bytes for n = {n}, found {}",
            body.len()
        )));
    }

    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Encodes `g` without header or trailing newline.
///
/// Panics if `g` has more than [`MAX_VERTICES`] vertices.
pub fn write_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    assert!(n <= MAX_VERTICES, "graph6 supports at most {MAX_VERTICES} vertices");
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(4 + nbits.div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    out
}

/// [`write_graph6`] as a `String`.
pub fn to_graph6_string(g: &Graph) -> String {
    // graph6 output is printable ASCII
    String::from_utf8(write_graph6(g)).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_records() {
        assert_eq!(parse_graph6(b"@").unwrap(), Graph::empty(1));
        assert_eq!(parse_graph6(b"A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6(b"Bw").unwrap(), Graph::complete(3));
        assert_eq!(write_graph6(&Graph::complete(3)), b"Bw");
        assert_eq!(write_graph6(&Graph::empty(1)), b"@");
        assert_eq!(write_graph6(&Graph::complete(2)), b"A_");
        assert_eq!(write_graph6(&Graph::empty(0)), b"?");
    }

    #[test]
    fn header_and_newline() {
        assert_eq!(parse_graph6(b">>graph6<<Bw\n").unwrap(), Graph::complete(3));
        assert_eq!(parse_graph6(b"Bw\r\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn petersen_known_encoding() {
        // the standard nauty encoding of the Petersen graph
        let g = parse_graph6(b"IheA@GUAo").unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.srg_params(), Some((10, 3, 0, 1)));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_graph6(b""), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6(b"B"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6(b"Bww"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6(b"B "), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6(b"~?"), Err(Error::MalformedGraph6(_))));
        // K_3 with a stray padding bit
        assert!(matches!(parse_graph6(b"Bx"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6(b"~~??????"), Err(Error::MalformedGraph6(_))));
    }

    #[test]
    fn long_header() {
        let g = Graph::cycle(100);
        let enc = write_graph6(&g);
        assert_eq!(&enc[..4], &[126, 63, 63 + 1, 63 + 36]);
        assert_eq!(parse_graph6(&enc).unwrap(), g);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=64).prop_flat_map(|n| {
            let m = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| {
                let mut it = bits.into_iter();
                Graph::from_fn(n, |_, _| it.next().unwrap_or(false))
            })
        })
    }

    proptest! {
        #[test]
        fn roundtrip(g in arb_graph()) {
            prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
        }

        #[test]
        fn complement_involution(g in arb_graph()) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn distance_two_disjoint_from_edges(g in arb_graph()) {
            let d2 = g.distance_two_graph();
            for e in d2.edges() {
                prop_assert!(!g.has_edge(e.i, e.j));
            }
        }

        #[test]
        fn srg_implies_regular(g in arb_graph()) {
            if let Some((v, k, _, _)) = g.srg_params() {
                prop_assert_eq!(v, g.n());
                prop_assert_eq!(g.regular_degree(), Some(k));
            }
        }
    }
}
