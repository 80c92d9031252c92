//! Resolving CLI graph arguments: family spec text or `@file` inputs.

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use misnormal_core::families::{generate, FamilySpec};
use misnormal_core::Graph;

use crate::{edgelist, graph6};

/// Loads a graph from a CLI argument: either family-spec syntax
/// (`cycle:5`, `kneser:5,2`, ...) or `@path` where the file is graph6
/// (`.g6`) or an edge list (anything else).
pub fn load(arg: &str) -> Result<Graph> {
    if let Some(path) = arg.strip_prefix('@') {
        return load_file(Path::new(path));
    }
    let spec = FamilySpec::parse(arg).map_err(|e| anyhow::anyhow!("{e}"))?;
    generate(&spec).map_err(|e| anyhow::anyhow!("{e}"))
}

fn load_file(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let is_g6 = path.extension().is_some_and(|e| e == "g6");
    let g = if is_g6 {
        let line = text.lines().next().context("empty graph6 file")?;
        graph6::decode(line)?
    } else {
        edgelist::parse(&text)?
    };
    Ok(g.with_label(path.display().to_string()))
}

/// A display name for a loaded input.
pub fn describe(arg: &str, g: &Graph) -> String {
    g.label().map(str::to_owned).unwrap_or_else(|| arg.to_owned())
}
