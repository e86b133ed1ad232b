//! graph6 text format (as used by nauty's `geng` and most graph corpora).

use thiserror::Error;

use super::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {0:#x} at offset {1} is outside the graph6 range")]
    BadByte(u8, usize),
    #[error("graph6 string too short for {0} vertices")]
    Truncated(usize),
    #[error("vertex count {0} not supported")]
    TooLarge(usize),
}

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for s in [12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for s in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    encode_n(n, &mut out);
    let mut acc = 0u8;
    let mut k = 0;
    // upper triangle column by column: (0,1), (0,2), (1,2), (0,3), ...
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn from_graph6(s: &str) -> Result<Graph, Graph6Error> {
    let b = s.trim_end().as_bytes();
    let b = b.strip_prefix(b">>graph6<<").unwrap_or(b);
    if b.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (i, &c) in b.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(Graph6Error::BadByte(c, i));
        }
    }
    let (n, rest) = if b[0] != 126 {
        ((b[0] - 63) as usize, &b[1..])
    } else if b.len() >= 2 && b[1] != 126 {
        if b.len() < 4 {
            return Err(Graph6Error::Truncated(0));
        }
        let n = b[1..4].iter().fold(0usize, |a, &c| (a << 6) | (c - 63) as usize);
        (n, &b[4..])
    } else {
        if b.len() < 8 {
            return Err(Graph6Error::Truncated(0));
        }
        let n = b[2..8].iter().fold(0usize, |a, &c| (a << 6) | (c - 63) as usize);
        (n, &b[8..])
    };
    if n > 1 << 20 {
        return Err(Graph6Error::TooLarge(n));
    }
    let need = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if rest.len() < need {
        return Err(Graph6Error::Truncated(n));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[bit / 6] - 63;
            if (byte >> (5 - bit % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    Ok(g)
}
