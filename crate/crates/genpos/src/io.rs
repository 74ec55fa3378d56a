//! Text formats: graph6 (short form, bit-exact) and the plain edge list
//! ("n m" header line followed by one "u v" pair per line).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Writes the graph6 short form: one header byte n+63, then the upper
/// triangle in column order, six bits per byte, each byte offset by 63.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 62 {
        return Err(Error::UnsupportedSize(n));
    }
    let mut out = vec![(n + 63) as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.adjacent(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("bytes stay in 63..=126"))
}

/// Parses the graph6 short form; the optional `>>graph6<<` prefix is
/// accepted. Strict about length and zero padding so that
/// `write(parse(s)) == s` on every accepted string.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedInput("empty graph6 string".into()));
    }
    if bytes[0] == 126 {
        // 63 <= n is encoded with a multi-byte header
        return Err(Error::UnsupportedSize(63));
    }
    if !(63..=125).contains(&bytes[0]) {
        return Err(Error::MalformedInput(format!(
            "bad graph6 header byte {}",
            bytes[0]
        )));
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 {
        return Err(Error::MalformedInput("graph6 with zero vertices".into()));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != 1 + nbytes {
        return Err(Error::MalformedInput(format!(
            "expected {} data bytes for n = {n}, got {}",
            nbytes,
            bytes.len() - 1
        )));
    }
    let mut bits = Vec::with_capacity(nbytes * 6);
    for &b in &bytes[1..] {
        if !(63..=126).contains(&b) {
            return Err(Error::MalformedInput(format!("bad graph6 data byte {b}")));
        }
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push((v >> k) & 1 == 1);
        }
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(Error::MalformedInput("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[pos] {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    Graph::new(n, &edges)
}

/// Writes the edge list: "n m" then one "u v" line per edge, LF endings.
pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut numbers = Vec::new();
    for tok in text.split_whitespace() {
        let v: usize = tok
            .parse()
            .map_err(|_| Error::MalformedInput(format!("not a number: {tok:?}")))?;
        numbers.push(v);
    }
    if numbers.len() < 2 {
        return Err(Error::MalformedInput("missing 'n m' header".into()));
    }
    let (n, m) = (numbers[0], numbers[1]);
    if numbers.len() != 2 + 2 * m {
        return Err(Error::MalformedInput(format!(
            "expected {m} edges, found {} numbers after the header",
            numbers.len() - 2
        )));
    }
    let edges: Vec<(usize, usize)> = numbers[2..].chunks_exact(2).map(|c| (c[0], c[1])).collect();
    Graph::new(n, &edges)
}

/// Dispatches on the first byte: digits start an edge list, anything in the
/// graph6 range (or the `>>` prefix) is graph6.
pub fn parse_auto(text: &str) -> Result<Graph> {
    match text.trim_start().bytes().next() {
        Some(b'0'..=b'9') => parse_edge_list(text),
        Some(_) => parse_graph6(text),
        None => Err(Error::MalformedInput("empty input".into())),
    }
}
