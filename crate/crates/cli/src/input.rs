//! Graph file loading shared by the subcommands.

use std::path::Path;

use anyhow::{bail, Context, Result};
use census_core::{decode_graph6, parse_edgelist, Graph};

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    /// Pick by extension: `.g6` is graph6, anything else is an edgelist.
    Auto,
    G6,
    Edgelist,
}

fn resolve(path: &Path, format: InputFormat) -> InputFormat {
    match format {
        InputFormat::Auto => {
            if path.extension().is_some_and(|ext| ext == "g6") {
                InputFormat::G6
            } else {
                InputFormat::Edgelist
            }
        }
        other => other,
    }
}

/// Loads every graph in the file: one per line for graph6, the whole file
/// for an edgelist.
pub fn load_graphs(path: &Path, format: InputFormat) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    match resolve(path, format) {
        InputFormat::G6 => {
            let mut graphs = Vec::new();
            for (idx, line) in text.lines().enumerate() {
                let trimmed = line.trim_end();
                if trimmed.is_empty() {
                    continue;
                }
                let g = decode_graph6(trimmed)
                    .with_context(|| format!("{}:{}", path.display(), idx + 1))?;
                graphs.push(g);
            }
            Ok(graphs)
        }
        _ => {
            let g = parse_edgelist(&text, None)
                .with_context(|| format!("parsing {}", path.display()))?;
            if g.node_count() == 0 {
                return Ok(Vec::new());
            }
            Ok(vec![g])
        }
    }
}

/// Loads a file expected to hold exactly one graph.
pub fn load_single_graph(path: &Path, format: InputFormat) -> Result<Graph> {
    let mut graphs = load_graphs(path, format)?;
    match graphs.len() {
        0 => bail!("{}: no graphs found", path.display()),
        1 => Ok(graphs.pop().unwrap()),
        n => bail!("{}: expected one graph, found {n}", path.display()),
    }
}
