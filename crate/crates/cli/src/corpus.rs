//! Corpus files: one graph6 word per line.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::Context;
use parakit_core::graphlab::{canonical_form, corpus, corpus_range, decode_graph6, encode_graph6, Graph};
use parakit_core::kernel::Truncation;

/// All graphs of order `1..=max_n` up to isomorphism.
pub fn generate(max_n: usize) -> anyhow::Result<Truncation<Graph>> {
    Ok(corpus(max_n)?)
}

/// All graphs with `min_n ≤ order ≤ max_n` up to isomorphism.
pub fn generate_range(min_n: usize, max_n: usize) -> anyhow::Result<Truncation<Graph>> {
    Ok(corpus_range(min_n.max(1), max_n)?)
}

/// `(order, count)` for every order present.
pub fn order_counts(graphs: &Truncation<Graph>) -> Vec<(usize, usize)> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for g in graphs {
        *counts.entry(g.order()).or_default() += 1;
    }
    counts.into_iter().collect()
}

pub fn write(graphs: &Truncation<Graph>, mut out: impl Write) -> anyhow::Result<()> {
    for g in graphs {
        writeln!(out, "{}", encode_graph6(g))?;
    }
    out.flush()?;
    Ok(())
}

/// A parsed corpus file and the number of lines dropped as isomorphic
/// duplicates.
#[derive(Debug)]
pub struct Loaded {
    pub graphs: Truncation<Graph>,
    pub duplicates: usize,
}

/// Reads graph6 lines, skipping blanks and an optional `>>graph6<<` header.
/// Graphs are replaced by canonical forms and ordered like [`generate`].
pub fn read(path: &Path) -> anyhow::Result<Loaded> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read corpus {}", path.display()))?;
    parse(&text).with_context(|| format!("in corpus {}", path.display()))
}

pub fn parse(text: &str) -> anyhow::Result<Loaded> {
    let mut layers: BTreeMap<usize, BTreeMap<String, Graph>> = BTreeMap::new();
    let mut duplicates = 0;
    for (line, raw) in (1..).zip(text.lines()) {
        let word = raw.trim().trim_start_matches(">>graph6<<");
        if word.is_empty() {
            continue;
        }
        let g = decode_graph6(word).with_context(|| format!("line {line}"))?;
        let c = canonical_form(&g).with_context(|| format!("line {line}"))?;
        if layers.entry(c.order()).or_default().insert(encode_graph6(&c), c).is_some() {
            duplicates += 1;
        }
    }
    let layers = layers.into_values().map(|l| l.into_values().collect()).collect();
    Ok(Loaded {
        graphs: Truncation::from_layers("corpus", layers),
        duplicates,
    })
}

/// The graphs of order at most `max_n`.
pub fn restrict(graphs: &Truncation<Graph>, max_n: usize) -> Truncation<Graph> {
    graphs.filter(|g| g.order() <= max_n)
}
