//! Plain-text file formats for graphs and colorings.
//!
//! Graph files:
//!
//! ```text
//! # comment
//! p um <n> <m>
//! e <u> <v>
//! l <v> <key>=<value>
//! ```
//!
//! with 0-based vertex ids, one `e` line per edge (`m` of them), and
//! optional label lines. Coloring files:
//!
//! ```text
//! p col <n> <k>
//! v <vertex> <color>
//! m <key>=<value>
//! ```
//!
//! with one `v` line per vertex (colors are 1-based, `k` is the maximum
//! color used) and optional metadata lines. Serializers emit canonical
//! order (sorted edges, ascending vertices), and parsing a serialized
//! document reproduces it byte for byte.

use std::collections::BTreeSet;

use umcf::coloring::{Coloring, ColoringError};
use umcf::graph::{Graph, GraphError};

/// Refuse headers that would make the parser allocate absurd buffers.
const MAX_DECLARED: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("input is not valid UTF-8")]
    InvalidUtf8,
    #[error("missing `p` header line")]
    MissingHeader,
    #[error("line {line}: malformed header")]
    MalformedHeader { line: usize },
    #[error("line {line}: second header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: unknown directive `{directive}`")]
    UnknownDirective { line: usize, directive: String },
    #[error("line {line}: malformed {what} line")]
    Malformed { line: usize, what: &'static str },
    #[error("line {line}: id {id} out of range (n = {n})")]
    IdOutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("line {line}: declared size {value} is over the limit of {limit}")]
    TooLarge {
        line: usize,
        value: usize,
        limit: usize,
    },
    #[error("line {line}: color must be positive")]
    NonPositiveColor { line: usize },
    #[error("line {line}: vertex {vertex} colored twice")]
    DuplicateColor { line: usize, vertex: usize },
    #[error("{missing} vertices were never colored")]
    MissingColors { missing: usize },
    #[error("header declares k = {declared} but the maximum color used is {max}")]
    ColorCountMismatch { declared: usize, max: usize },
}

// Construction errors are all pre-checked line by line; these conversions
// only keep the parsers total.
impl From<GraphError> for FormatError {
    fn from(e: GraphError) -> FormatError {
        match e {
            GraphError::VertexOutOfRange(id, n) => FormatError::IdOutOfRange { line: 0, id, n },
            GraphError::SelfLoop(vertex) => FormatError::SelfLoop { line: 0, vertex },
            GraphError::DuplicateEdge(u, v) => FormatError::DuplicateEdge { line: 0, u, v },
            _ => FormatError::Malformed {
                line: 0,
                what: "graph",
            },
        }
    }
}

impl From<ColoringError> for FormatError {
    fn from(_: ColoringError) -> FormatError {
        FormatError::NonPositiveColor { line: 0 }
    }
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Lines<'a> {
        Lines {
            inner: text.lines().enumerate(),
        }
    }
}

impl<'a> Iterator for Lines<'a> {
    /// (1-based line number, significant line)
    type Item = (usize, &'a str);

    fn next(&mut self) -> Option<Self::Item> {
        for (idx, raw) in self.inner.by_ref() {
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            return Some((idx + 1, trimmed));
        }
        None
    }
}

fn parse_int(token: &str, line: usize, what: &'static str) -> Result<usize, FormatError> {
    token
        .parse::<usize>()
        .map_err(|_| FormatError::Malformed { line, what })
}

fn check_limit(value: usize, line: usize) -> Result<usize, FormatError> {
    if value > MAX_DECLARED {
        Err(FormatError::TooLarge {
            line,
            value,
            limit: MAX_DECLARED,
        })
    } else {
        Ok(value)
    }
}

pub fn parse_graph(bytes: &[u8]) -> Result<Graph, FormatError> {
    let text = std::str::from_utf8(bytes).map_err(|_| FormatError::InvalidUtf8)?;
    let mut lines = Lines::new(text);

    let (header_line, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 4 || tokens[0] != "p" || tokens[1] != "um" {
        return Err(if tokens[0] == "p" {
            FormatError::MalformedHeader { line: header_line }
        } else {
            FormatError::MissingHeader
        });
    }
    let n = check_limit(parse_int(tokens[2], header_line, "header")?, header_line)?;
    let declared_edges = check_limit(parse_int(tokens[3], header_line, "header")?, header_line)?;

    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut labels: Vec<(usize, String, String)> = Vec::new();
    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens[0] {
            "p" => return Err(FormatError::DuplicateHeader { line }),
            "e" => {
                if tokens.len() != 3 {
                    return Err(FormatError::Malformed { line, what: "edge" });
                }
                let u = parse_int(tokens[1], line, "edge")?;
                let v = parse_int(tokens[2], line, "edge")?;
                for id in [u, v] {
                    if id >= n {
                        return Err(FormatError::IdOutOfRange { line, id, n });
                    }
                }
                if u == v {
                    return Err(FormatError::SelfLoop { line, vertex: u });
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(FormatError::DuplicateEdge {
                        line,
                        u: u.min(v),
                        v: u.max(v),
                    });
                }
                edges.push((u, v));
            }
            "l" => {
                if tokens.len() != 3 {
                    return Err(FormatError::Malformed {
                        line,
                        what: "label",
                    });
                }
                let v = parse_int(tokens[1], line, "label")?;
                if v >= n {
                    return Err(FormatError::IdOutOfRange { line, id: v, n });
                }
                let (key, value) = tokens[2].split_once('=').ok_or(FormatError::Malformed {
                    line,
                    what: "label",
                })?;
                if key.is_empty() {
                    return Err(FormatError::Malformed {
                        line,
                        what: "label",
                    });
                }
                labels.push((v, key.to_string(), value.to_string()));
            }
            directive => {
                return Err(FormatError::UnknownDirective {
                    line,
                    directive: directive.to_string(),
                })
            }
        }
    }
    if edges.len() != declared_edges {
        return Err(FormatError::EdgeCountMismatch {
            declared: declared_edges,
            found: edges.len(),
        });
    }
    let mut g = Graph::new(n, &edges)?;
    for (v, key, value) in labels {
        g.add_label(v, &key, &value);
    }
    Ok(g)
}

pub fn serialize_graph(g: &Graph) -> Vec<u8> {
    let mut out = String::new();
    out.push_str(&format!("p um {} {}\n", g.vertex_count(), g.edge_count()));
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    for v in g.vertices() {
        for (key, value) in g.labels(v) {
            out.push_str(&format!("l {v} {key}={value}\n"));
        }
    }
    out.into_bytes()
}

/// A coloring plus free-form metadata from `m` lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringDoc {
    pub coloring: Coloring,
    pub meta: Vec<(String, String)>,
}

impl ColoringDoc {
    pub fn new(coloring: Coloring) -> ColoringDoc {
        ColoringDoc {
            coloring,
            meta: Vec::new(),
        }
    }

    pub fn with_meta(mut self, key: &str, value: &str) -> ColoringDoc {
        self.meta.push((key.to_string(), value.to_string()));
        self
    }
}

pub fn parse_coloring(bytes: &[u8]) -> Result<ColoringDoc, FormatError> {
    let text = std::str::from_utf8(bytes).map_err(|_| FormatError::InvalidUtf8)?;
    let mut lines = Lines::new(text);

    let (header_line, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 4 || tokens[0] != "p" || tokens[1] != "col" {
        return Err(if tokens[0] == "p" {
            FormatError::MalformedHeader { line: header_line }
        } else {
            FormatError::MissingHeader
        });
    }
    let n = check_limit(parse_int(tokens[2], header_line, "header")?, header_line)?;
    let declared_k = check_limit(parse_int(tokens[3], header_line, "header")?, header_line)?;

    let mut colors: Vec<Option<usize>> = vec![None; n];
    let mut meta = Vec::new();
    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens[0] {
            "p" => return Err(FormatError::DuplicateHeader { line }),
            "v" => {
                if tokens.len() != 3 {
                    return Err(FormatError::Malformed {
                        line,
                        what: "vertex",
                    });
                }
                let v = parse_int(tokens[1], line, "vertex")?;
                let color = parse_int(tokens[2], line, "vertex")?;
                if v >= n {
                    return Err(FormatError::IdOutOfRange { line, id: v, n });
                }
                if color == 0 {
                    return Err(FormatError::NonPositiveColor { line });
                }
                check_limit(color, line)?;
                if colors[v].is_some() {
                    return Err(FormatError::DuplicateColor { line, vertex: v });
                }
                colors[v] = Some(color);
            }
            "m" => {
                if tokens.len() != 2 {
                    return Err(FormatError::Malformed { line, what: "meta" });
                }
                let (key, value) = tokens[1]
                    .split_once('=')
                    .ok_or(FormatError::Malformed { line, what: "meta" })?;
                if key.is_empty() {
                    return Err(FormatError::Malformed { line, what: "meta" });
                }
                meta.push((key.to_string(), value.to_string()));
            }
            directive => {
                return Err(FormatError::UnknownDirective {
                    line,
                    directive: directive.to_string(),
                })
            }
        }
    }
    let missing = colors.iter().filter(|c| c.is_none()).count();
    if missing > 0 {
        return Err(FormatError::MissingColors { missing });
    }
    let coloring = Coloring::new(colors.into_iter().map(Option::unwrap).collect())?;
    if coloring.k() != declared_k {
        return Err(FormatError::ColorCountMismatch {
            declared: declared_k,
            max: coloring.k(),
        });
    }
    Ok(ColoringDoc { coloring, meta })
}

pub fn serialize_coloring(doc: &ColoringDoc) -> Vec<u8> {
    let mut out = String::new();
    out.push_str(&format!(
        "p col {} {}\n",
        doc.coloring.len(),
        doc.coloring.k()
    ));
    for v in 0..doc.coloring.len() {
        out.push_str(&format!("v {v} {}\n", doc.coloring.color(v)));
    }
    for (key, value) in &doc.meta {
        out.push_str(&format!("m {key}={value}\n"));
    }
    out.into_bytes()
}
