//! Reading graphs from files, standard input or inline strings.

use std::io::Read;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use distspec::{graph6, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One graph6 string per line.
    Graph6,
    /// A vertex count on the first line, then one `u v` pair per line.
    Edges,
}

/// Reads `path` (`-` for standard input) to a string.
pub fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

pub fn parse_graphs(text: &str, format: Format) -> Result<Vec<Graph>> {
    let graphs = match format {
        Format::Graph6 => graph6::decode_lines(text)?,
        Format::Edges => vec![parse_edge_list(text)?],
    };
    if graphs.is_empty() {
        bail!("no graph in input");
    }
    Ok(graphs)
}

/// Blank lines and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .enumerate()
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines.next().context("edge list is empty")?;
    let n: usize = header
        .parse()
        .with_context(|| format!("expected a vertex count, found {header:?}"))?;
    let mut edges = Vec::new();
    for (i, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = fields[..] else {
            bail!("line {}: expected `u v`, found {line:?}", i + 1);
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .with_context(|| format!("line {}: bad vertex {s:?}", i + 1))
        };
        edges.push((parse(a)?, parse(b)?));
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    graph6::decode(text.trim()).with_context(|| format!("decoding graph6 {text:?}"))
}
