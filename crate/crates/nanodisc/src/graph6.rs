//! The graph6 interchange format: a simple undirected graph packed as its
//! upper-triangle adjacency bits, six bits per printable byte.
//!
//! Layout: a size prefix `N(n)` (one byte `n+63` for `n ≤ 62`, `'~'` plus
//! three bytes for `n ≤ 258047`, `'~~'` plus six bytes below `2³⁶`),
//! followed by the bits `x(i,j)` for `i < j` ordered by `j` then `i`,
//! packed most-significant-first and offset by 63. Padding bits are zero.

use std::collections::HashSet;

use crate::{Error, Graph, Result, VertexId};

/// A plain simple graph, the decoding target. Neighbor lists are sorted;
/// no embedding is implied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    pub adjacency: Vec<Vec<VertexId>>,
}

impl Graph for SimpleGraph {
    fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v as usize]
    }
}

impl SimpleGraph {
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in edges {
            adjacency[a as usize].push(b);
            adjacency[b as usize].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        SimpleGraph { adjacency }
    }

    /// Adjacency as a set of normalized pairs.
    pub fn edge_set(&self) -> HashSet<(VertexId, VertexId)> {
        let mut set = HashSet::new();
        for v in 0..self.vertex_count() as VertexId {
            for &w in self.neighbors(v) {
                set.insert((v.min(w), v.max(w)));
            }
        }
        set
    }
}

fn encode_size(n: u64, out: &mut Vec<u8>) -> Result<()> {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    } else if n < (1 << 36) {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        return Err(Error::Graph6TooLarge(n));
    }
    Ok(())
}

/// Encode a simple undirected graph as header-free graph6 bytes.
pub fn encode_graph6<G: Graph + ?Sized>(g: &G) -> Result<Vec<u8>> {
    let n = g.vertex_count();
    let mut edges = HashSet::new();
    for v in 0..n as VertexId {
        let mut seen = HashSet::new();
        for &w in g.neighbors(v) {
            if w == v || !seen.insert(w) {
                return Err(Error::Graph6NotSimple);
            }
            edges.insert((v.min(w), v.max(w)));
        }
    }

    let mut out = Vec::new();
    encode_size(n as u64, &mut out)?;

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n as VertexId {
        for i in 0..j {
            acc = (acc << 1) | u8::from(edges.contains(&(i, j)));
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
    Ok(out)
}

fn decode_size(bytes: &[u8]) -> Result<(u64, usize)> {
    match bytes {
        [] => Err(Error::Graph6BadHeader),
        [b, ..] if *b != 126 => Ok((u64::from(b - 63), 1)),
        [_, b, rest @ ..] if *b != 126 => {
            if rest.len() < 2 {
                return Err(Error::Graph6BadHeader);
            }
            let n = [bytes[1], bytes[2], bytes[3]]
                .iter()
                .fold(0u64, |acc, &x| (acc << 6) | u64::from(x - 63));
            Ok((n, 4))
        }
        [_, _, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6BadHeader);
            }
            let n = rest[..6]
                .iter()
                .fold(0u64, |acc, &x| (acc << 6) | u64::from(x - 63));
            Ok((n, 8))
        }
        _ => Err(Error::Graph6BadHeader),
    }
}

/// Decode graph6 bytes; the inverse of [`encode_graph6`] on its image.
pub fn decode_graph6(bytes: &[u8]) -> Result<SimpleGraph> {
    for (offset, &value) in bytes.iter().enumerate() {
        if !(63..=126).contains(&value) {
            return Err(Error::Graph6NonPrintable { offset, value });
        }
    }
    let (n64, header_len) = decode_size(bytes)?;
    let n = usize::try_from(n64).map_err(|_| Error::Graph6TooLarge(n64))?;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() < expected {
        return Err(Error::Graph6Truncated {
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Error::Graph6TrailingGarbage {
            extra: data.len() - expected,
        });
    }

    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    'outer: for j in 1..n as VertexId {
        for i in 0..j {
            let byte = data[bit_index / 6] - 63;
            let bit = (byte >> (5 - bit_index % 6)) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
            if bit_index == bit_count {
                break 'outer;
            }
        }
    }
    if bit_count > 0 {
        let last = data[expected - 1] - 63;
        let pad = expected * 6 - bit_count;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6BadPadding);
        }
    }
    Ok(SimpleGraph::from_edges(n, &edges))
}
