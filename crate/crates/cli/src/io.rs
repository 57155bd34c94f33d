//! Graph input and output: edge lists and graph6.

use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::Path;

use laperm_core::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InputError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("empty input: expected the vertex count on the first line")]
    Empty,
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    Edgelist,
    Graph6,
}

fn at(line: usize, message: impl Into<String>) -> InputError {
    InputError::Line {
        line,
        message: message.into(),
    }
}

/// Parses `n` on the first line, then one `u v` pair per line. `#` starts a
/// comment; blank lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, InputError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, header) = lines.next().ok_or(InputError::Empty)?;
    let n: usize = header
        .parse()
        .map_err(|_| at(first, format!("expected the vertex count, found `{header}`")))?;
    let mut g = Graph::empty(n);
    for (line, body) in lines {
        let fields: Vec<&str> = body.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(at(
                line,
                format!("expected two vertex labels, found {} fields", fields.len()),
            ));
        };
        let label = |s: &str| -> Result<usize, InputError> {
            s.parse().map_err(|_| at(line, format!("`{s}` is not a vertex label")))
        };
        let (u, v) = (label(a)?, label(b)?);
        if u >= n || v >= n {
            return Err(at(line, format!("label out of range 0..{n}")));
        }
        if u == v {
            return Err(at(line, format!("loop at vertex {u}")));
        }
        if g.has_edge(u, v) {
            return Err(at(line, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v).map_err(|e| at(line, e.to_string()))?;
    }
    Ok(g)
}

/// Decodes the first graph of a graph6 stream.
pub fn parse_graph6(text: &str) -> Result<Graph, InputError> {
    let line = text
        .lines()
        .map(|l| l.trim())
        .find(|l| !l.is_empty())
        .ok_or_else(|| InputError::Graph6("empty input".into()))?;
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes: Vec<u8> = line
        .bytes()
        .map(|b| {
            if (63..=126).contains(&b) {
                Ok(b - 63)
            } else {
                Err(InputError::Graph6(format!("byte {b} outside 63..=126")))
            }
        })
        .collect::<Result<_, _>>()?;
    let short = |what| InputError::Graph6(format!("truncated {what}"));
    let (n, header) = match bytes.first() {
        None => return Err(short("header")),
        Some(&b) if b < 63 => (b as usize, 1),
        Some(_) if bytes.get(1) != Some(&63) => {
            let h = bytes.get(1..4).ok_or_else(|| short("header"))?;
            (h.iter().fold(0usize, |acc, &x| (acc << 6) | x as usize), 4)
        }
        Some(_) => {
            let h = bytes.get(2..8).ok_or_else(|| short("header"))?;
            (h.iter().fold(0usize, |acc, &x| (acc << 6) | x as usize), 8)
        }
    };
    let body = &bytes[header..];
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() * 6 < bits {
        return Err(short("adjacency data"));
    }
    let mut g = Graph::empty(n);
    let mut pos = 0;
    for v in 1..n {
        for u in 0..v {
            if (body[pos / 6] >> (5 - pos % 6)) & 1 == 1 {
                g.add_edge(u, v).map_err(|e| InputError::Graph6(e.to_string()))?;
            }
            pos += 1;
        }
    }
    Ok(g)
}

pub fn parse_graph(text: &str, format: InputFormat) -> Result<Graph, InputError> {
    match format {
        InputFormat::Edgelist => parse_edge_list(text),
        InputFormat::Graph6 => parse_graph6(text),
    }
}

/// Reads a file, or `stdin` when `path` is absent or `-`.
pub fn read_text(path: Option<&Path>, stdin: &mut dyn Read) -> Result<String, InputError> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).map_err(|e| InputError::Io {
            path: p.display().to_string(),
            message: e.to_string(),
        }),
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| InputError::Io {
                path: "<stdin>".into(),
                message: e.to_string(),
            })?;
            Ok(s)
        }
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
