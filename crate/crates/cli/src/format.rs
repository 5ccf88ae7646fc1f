//! Edge-list graph files.
//!
//! ```text
//! # names
//! # 0 s
//! # 1 a
//! 3 2
//! s a
//! 1 2
//! ```
//!
//! The first data line is `n m`, followed by exactly `m` edge lines. Lines
//! starting with `#` are comments, except that a `# names` line opens a block
//! of `# <id> <name>` lines giving vertices symbolic names. Edge endpoints
//! and command-line vertex arguments may use either form.

use std::collections::HashMap;
use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use endvertex::Graph;

/// A parsed graph plus its vertex labels.
#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub graph: Graph,
    /// `Some` when the file had a names block; every vertex then has a name.
    pub names: Option<Vec<String>>,
    lookup: HashMap<String, usize>,
}

impl NamedGraph {
    pub fn new(graph: Graph, names: Option<Vec<String>>) -> Result<Self> {
        let mut lookup = HashMap::new();
        if let Some(names) = &names {
            if names.len() != graph.vertex_count() {
                bail!(
                    "{} names for {} vertices",
                    names.len(),
                    graph.vertex_count()
                );
            }
            for (v, name) in names.iter().enumerate() {
                if lookup.insert(name.clone(), v).is_some() {
                    bail!("duplicate vertex name `{name}`");
                }
            }
        }
        Ok(NamedGraph {
            graph,
            names,
            lookup,
        })
    }

    pub fn label(&self, v: usize) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn labels(&self, vs: impl IntoIterator<Item = usize>) -> Vec<String> {
        vs.into_iter().map(|v| self.label(v)).collect()
    }

    /// Resolves a name first, then a numeric id.
    pub fn resolve(&self, token: &str) -> Result<usize> {
        if let Some(&v) = self.lookup.get(token) {
            return Ok(v);
        }
        let v: usize = token
            .parse()
            .map_err(|_| anyhow!("unknown vertex `{token}`"))?;
        if v >= self.graph.vertex_count() {
            bail!(
                "vertex {v} out of range for a graph with {} vertices",
                self.graph.vertex_count()
            );
        }
        Ok(v)
    }

    /// Resolves a comma- or whitespace-separated vertex list.
    pub fn resolve_list(&self, list: &str) -> Result<Vec<usize>> {
        list.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| self.resolve(s))
            .collect()
    }
}

fn parse_count(token: &str, line: usize, what: &str) -> Result<usize> {
    token
        .parse()
        .with_context(|| format!("line {line}: bad {what} `{token}`"))
}

pub fn parse_graph(text: &str) -> Result<NamedGraph> {
    let mut names: Option<Vec<(usize, String, usize)>> = None;
    let mut in_names = false;
    let mut data = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if comment == "names" {
                if names.is_some() {
                    bail!("line {line_no}: second names block");
                }
                names = Some(Vec::new());
                in_names = true;
            } else if in_names {
                let mut parts = comment.split_whitespace();
                let (Some(id), Some(name), None) = (parts.next(), parts.next(), parts.next())
                else {
                    bail!("line {line_no}: expected `# <id> <name>` in names block");
                };
                let id = parse_count(id, line_no, "vertex id")?;
                names
                    .as_mut()
                    .unwrap()
                    .push((id, name.to_string(), line_no));
            }
            continue;
        }
        in_names = false;
        if !line.is_empty() {
            data.push((line_no, line));
        }
    }

    let Some(&(header_line, header)) = data.first() else {
        bail!("empty graph file: expected a `n m` line");
    };
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 2 {
        bail!("line {header_line}: expected `n m`");
    }
    let n = parse_count(parts[0], header_line, "vertex count")?;
    let m = parse_count(parts[1], header_line, "edge count")?;

    let names = match names {
        None => None,
        Some(entries) => {
            let mut table: Vec<Option<String>> = vec![None; n];
            for (id, name, line) in entries {
                if id >= n {
                    bail!("line {line}: vertex {id} out of range for {n} vertices");
                }
                if name.parse::<usize>().is_ok() {
                    bail!("line {line}: vertex name `{name}` must not be a number");
                }
                if table[id].replace(name).is_some() {
                    bail!("line {line}: vertex {id} named twice");
                }
            }
            Some(
                table
                    .into_iter()
                    .enumerate()
                    .map(|(v, name)| name.ok_or_else(|| anyhow!("vertex {v} has no name")))
                    .collect::<Result<Vec<_>>>()?,
            )
        }
    };
    let partial = NamedGraph::new(Graph::empty(n), names.clone())?;

    let edge_lines = &data[1..];
    if edge_lines.len() != m {
        bail!(
            "line {header_line}: header declares {m} edges, found {} edge lines",
            edge_lines.len()
        );
    }
    let mut edges = Vec::with_capacity(m);
    for &(line_no, line) in edge_lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 2 {
            bail!("line {line_no}: expected `u v`");
        }
        let u = partial
            .resolve(parts[0])
            .with_context(|| format!("line {line_no}"))?;
        let v = partial
            .resolve(parts[1])
            .with_context(|| format!("line {line_no}"))?;
        if u == v {
            bail!("line {line_no}: self-loop on vertex {}", parts[0]);
        }
        edges.push((u, v));
    }
    NamedGraph::new(Graph::from_edges(n, edges)?, names)
}

pub fn read_graph(path: &std::path::Path) -> Result<NamedGraph> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("in {}", path.display()))
}

/// Serializes in the format [`parse_graph`] reads, edges by numeric id.
pub fn write_graph(graph: &Graph, names: Option<&[String]>) -> String {
    let mut out = String::new();
    if let Some(names) = names {
        out.push_str("# names\n");
        for (v, name) in names.iter().enumerate() {
            let _ = writeln!(out, "# {v} {name}");
        }
    }
    let _ = writeln!(out, "{} {}", graph.vertex_count(), graph.edge_count());
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
