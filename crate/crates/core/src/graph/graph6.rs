//! graph6 codec restricted to the single-byte size prefix (n <= 62).
//!
//! Bits of the upper triangle are read in column order: `(0,1), (0,2),
//! (1,2), (0,3), ...`, packed big-endian into 6-bit chunks, each chunk
//! offset by 63. The final chunk is zero-padded.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const OFFSET: u8 = 63;

pub fn graph6_decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&size, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Malformed("empty graph6 string".into()))?;
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Malformed(format!(
                "byte {b:#04x} at position {pos} outside [63, 126]"
            )));
        }
    }
    if size == 126 {
        return Err(Error::UnsupportedSize {
            n: MAX_VERTICES + 1,
            max: MAX_VERTICES,
        });
    }
    let n = (size - OFFSET) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Malformed(format!(
            "n = {n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }

    let bit = |k: usize| (body[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    for pad in nbits..expected * 6 {
        if bit(pad) {
            return Err(Error::Malformed("nonzero padding bits".into()));
        }
    }
    Ok(Graph::from_adjacency(n, adj))
}

pub fn graph6_encode(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Error::UnsupportedSize { n, max: MAX_VERTICES });
    }
    let mut out = vec![n as u8 + OFFSET];
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + OFFSET);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const GM_A: &str = "Ir_GYkuy?";
    const GM_B: &str = "I]HTOYRRO";

    #[test]
    fn decodes_regular_pair() {
        for s in [GM_A, GM_B] {
            let g = graph6_decode(s).unwrap();
            assert_eq!((g.n(), g.m()), (10, 20));
            assert_eq!(g.regular_degree(), Some(4));
        }
    }

    #[test]
    fn small_cases() {
        let g = graph6_decode("?").unwrap();
        assert_eq!((g.n(), g.m()), (0, 0));
        assert_eq!(graph6_encode(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(graph6_encode(&Graph::path(2)).unwrap(), "A_");
        assert_eq!(graph6_encode(&graph6_decode(GM_A).unwrap()).unwrap(), GM_A);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(graph6_decode(""), Err(Error::Malformed(_))));
        assert!(matches!(graph6_decode("A\x7f"), Err(Error::Malformed(_))));
        assert!(matches!(graph6_decode("A "), Err(Error::Malformed(_))));
        assert!(matches!(graph6_decode("I??"), Err(Error::Malformed(_))));
        assert!(matches!(graph6_decode("A_?"), Err(Error::Malformed(_))));
        // "B" has 3 data bits; 'A' (65-63=2) sets a padding bit.
        assert!(matches!(graph6_decode("BA"), Err(Error::Malformed(_))));
        assert!(matches!(
            graph6_decode("~?@?"),
            Err(Error::UnsupportedSize { .. })
        ));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=MAX_VERTICES).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut k = 0;
                let mut edges = Vec::new();
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph()) {
            let s = graph6_encode(&g).unwrap();
            let back = graph6_decode(&s).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(graph6_encode(&back).unwrap(), s);
        }
    }
}
