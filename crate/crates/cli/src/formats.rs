//! Graph and partition text formats.

use bkcolor::transversal::VertexPartition;
use bkcolor::{Graph, GraphError, VertexSet, MAX_ORDER};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("graph6: {0}")]
    Graph6(&'static str),
    #[error("dimacs line {line}: {msg}")]
    Dimacs { line: usize, msg: &'static str },
    #[error("edge list line {line}: {msg}")]
    Edges { line: usize, msg: &'static str },
    #[error("partition: {0}")]
    Partition(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Graph6,
    Dimacs,
    Edges,
}

const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 string. The optional `>>graph6<<` header is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let s = text.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(HEADER).unwrap_or(s).as_bytes();
    if s.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(FormatError::Graph6("character out of range"));
    }
    let (n, rest) = match s {
        [] => return Err(FormatError::Graph6("empty input")),
        [126, 126, ..] => return Err(FormatError::Graph6("order too large")),
        [126, a, b, c, rest @ ..] => {
            (((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63), rest)
        }
        [126, ..] => return Err(FormatError::Graph6("malformed length prefix")),
        [a, rest @ ..] => (*a as usize - 63, rest),
    };
    if n > MAX_ORDER {
        return Err(GraphError::TooLarge { order: n, max: MAX_ORDER }.into());
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if rest.len() < need {
        return Err(FormatError::Graph6("truncated adjacency data"));
    }
    if rest.len() > need {
        return Err(FormatError::Graph6("trailing garbage"));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 && (rest[need - 1] - 63) & ((1 << (6 - bits % 6)) - 1) != 0 {
        return Err(FormatError::Graph6("nonzero padding bits"));
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.extend([126, (n >> 12) as u8 + 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63]);
    }
    let mut byte = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            byte = byte << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(byte + 63);
                byte = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((byte << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// DIMACS edge format: `p edge n m`, then `e u v` with 1-based vertices.
/// Lines starting with `c` are comments.
pub fn parse_dimacs(text: &str) -> Result<Graph, FormatError> {
    let mut g: Option<Graph> = None;
    for (i, line) in text.lines().enumerate() {
        let err = |msg| FormatError::Dimacs { line: i + 1, msg };
        let mut it = line.split_whitespace();
        match it.next() {
            None | Some("c") => {}
            Some("p") => {
                if g.is_some() {
                    return Err(err("second problem line"));
                }
                let _kind = it.next().ok_or(err("missing format"))?;
                let n = it.next().and_then(|x| x.parse().ok()).ok_or(err("bad vertex count"))?;
                g = Some(Graph::try_new(n)?);
            }
            Some("e") => {
                let g = g.as_mut().ok_or(err("edge before problem line"))?;
                let mut end = || it.next().and_then(|x| x.parse::<usize>().ok()).filter(|&v| v >= 1).ok_or(err("bad endpoint"));
                let (u, v) = (end()? - 1, end()? - 1);
                if u >= g.order() || v >= g.order() {
                    return Err(err("endpoint out of range"));
                }
                if u == v {
                    return Err(err("loop"));
                }
                // repeated edges are common in DIMACS files
                if !g.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
            Some(_) => return Err(err("unknown line type")),
        }
    }
    g.ok_or(FormatError::Dimacs { line: 0, msg: "missing problem line" })
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        s += &format!("e {} {}\n", u + 1, v + 1);
    }
    s
}

/// Edge list: the first line is the vertex count, then one `u v` pair
/// (0-based) per line. `#` starts a comment.
pub fn parse_edges(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, first) = lines.next().ok_or(FormatError::Edges { line: 0, msg: "empty input" })?;
    let n = first.parse().map_err(|_| FormatError::Edges { line, msg: "bad vertex count" })?;
    let mut pairs = Vec::new();
    for (line, l) in lines {
        let err = FormatError::Edges { line, msg: "expected two vertex indices" };
        let mut it = l.split_whitespace().map(|x| x.parse::<usize>());
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => pairs.push((u, v)),
            _ => return Err(err),
        }
    }
    Ok(Graph::from_edges(n, &pairs)?)
}

pub fn to_edges(g: &Graph) -> String {
    let mut s = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        s += &format!("{u} {v}\n");
    }
    s
}

pub fn parse(format: Format, text: &str) -> Result<Graph, FormatError> {
    match format {
        Format::Graph6 => parse_graph6(text.trim()),
        Format::Dimacs => parse_dimacs(text),
        Format::Edges => parse_edges(text),
    }
}

pub fn serialize(format: Format, g: &Graph) -> String {
    match format {
        Format::Graph6 => to_graph6(g) + "\n",
        Format::Dimacs => to_dimacs(g),
        Format::Edges => to_edges(g),
    }
}

/// A graph6 stream: one graph per nonempty line.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>, (usize, FormatError)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l.trim()).map_err(|e| (i + 1, e)))
        .collect()
}

/// Blocks separated by `|` or newlines, vertices by spaces or commas.
pub fn parse_partition(n: usize, text: &str) -> Result<VertexPartition, FormatError> {
    let mut blocks = Vec::new();
    for part in text.split(['|', '\n']).map(str::trim).filter(|p| !p.is_empty()) {
        let mut b = VertexSet::EMPTY;
        for tok in part.split([' ', ',']).filter(|t| !t.is_empty()) {
            let v: usize = tok.parse().map_err(|_| FormatError::Partition("bad vertex index"))?;
            if v >= MAX_ORDER {
                return Err(FormatError::Partition("vertex index too large"));
            }
            b.insert(v);
        }
        blocks.push(b);
    }
    Ok(VertexPartition::new(n, blocks)?)
}

pub fn parse_vertex_set(text: &str) -> Result<VertexSet, FormatError> {
    let mut s = VertexSet::EMPTY;
    for tok in text.split([' ', ',']).filter(|t| !t.is_empty()) {
        let v: usize = tok.parse().map_err(|_| FormatError::Partition("bad vertex index"))?;
        if v >= MAX_ORDER {
            return Err(FormatError::Partition("vertex index too large"));
        }
        s.insert(v);
    }
    Ok(s)
}

pub fn partition_to_string(p: &VertexPartition) -> String {
    p.blocks()
        .iter()
        .map(|b| b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" | ")
}
