//! Canonical labelling by individualization-refinement, and exhaustive
//! enumeration of graphs up to isomorphism.

use std::collections::HashSet;
use std::sync::OnceLock;

use rayon::prelude::*;

use super::graph::Graph;
use crate::error::{Error, Result};
use crate::kernel::Truncation;

/// Largest order with a 128-bit canonical code.
pub const CANON_CAP: usize = 16;

/// Largest order the enumeration cache serves.
pub const ENUM_CAP: usize = 9;

type Partition = Vec<Vec<usize>>;

/// Splits cells by neighbour counts into every cell until stable.
fn refine(g: &Graph, cells: &mut Partition) {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter: u64 = cells[s].iter().fold(0, |m, &v| m | 1 << v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell.iter().map(|&v| ((g.row(v) & splitter).count_ones(), v)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if next.len() != cells.len() {
                *cells = next;
                continue 'outer;
            }
        }
        return;
    }
}

/// Code of `g` under the ordering `order` (position `p` holds vertex
/// `order[p]`). Bits follow graph6 column order, first bit most significant.
fn code_of(g: &Graph, order: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        let row = g.row(order[j]);
        for &oi in &order[..j] {
            code = code << 1 | (row >> oi & 1) as u128;
        }
    }
    code
}

fn search(g: &Graph, cells: Partition, best: &mut Option<(u128, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_of(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    for &v in &cells[target] {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(vec![v]);
        next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        refine(g, &mut next);
        search(g, next, best);
    }
}

/// Canonical code and the ordering realizing it. Isomorphic graphs of the
/// same order get the same code.
pub fn canonical_code(g: &Graph) -> Result<(u128, Vec<usize>)> {
    let n = g.order();
    if n > CANON_CAP {
        return Err(Error::CapExceeded {
            what: "canonical form",
            n,
            cap: CANON_CAP,
        });
    }
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    refine(g, &mut cells);
    let mut best = None;
    search(g, cells, &mut best);
    Ok(best.expect("search reaches at least one leaf"))
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    canonical(g).map(|(_, c)| c)
}

fn canonical(g: &Graph) -> Result<(u128, Graph)> {
    let (code, order) = canonical_code(g)?;
    let mut perm = vec![0; order.len()];
    for (p, &v) in order.iter().enumerate() {
        perm[v] = p;
    }
    Ok((code, g.permute(&perm)))
}

pub fn is_isomorphic_canon(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(g.order() == h.order() && canonical_code(g)?.0 == canonical_code(h)?.0)
}

static LAYERS: [OnceLock<Vec<(u128, Graph)>>; ENUM_CAP + 1] = [const { OnceLock::new() }; ENUM_CAP + 1];

fn layer(n: usize) -> &'static [(u128, Graph)] {
    LAYERS[n].get_or_init(|| {
        if n == 0 {
            return vec![(0, Graph::empty(0))];
        }
        let prev = layer(n - 1);
        let mut found: Vec<(u128, Graph)> = prev
            .par_iter()
            .flat_map_iter(|(_, g)| {
                (0..1u64 << (n - 1)).map(move |mask| {
                    canonical(&g.extend_with(mask)).expect("within cap")
                })
            })
            .collect();
        found.sort_unstable_by_key(|(c, _)| *c);
        let mut seen = HashSet::new();
        found.retain(|(c, _)| seen.insert(*c));
        found
    })
}

/// All graphs of order `n` up to isomorphism, as canonical forms sorted by
/// graph6 word.
pub fn graphs_of_order(n: usize) -> Result<Vec<Graph>> {
    if n > ENUM_CAP {
        return Err(Error::CapExceeded {
            what: "enumeration",
            n,
            cap: ENUM_CAP,
        });
    }
    Ok(layer(n).iter().map(|(_, g)| g.clone()).collect())
}

/// Position of `g`'s class within [`graphs_of_order`].
pub fn position_in_order(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > ENUM_CAP {
        return Err(Error::CapExceeded {
            what: "enumeration",
            n,
            cap: ENUM_CAP,
        });
    }
    let code = canonical_code(g)?.0;
    Ok(layer(n)
        .binary_search_by_key(&code, |(c, _)| *c)
        .expect("every graph appears in its layer"))
}

/// Number of graphs of order `n` up to isomorphism.
pub fn count_of_order(n: usize) -> Result<usize> {
    graphs_of_order(n).map(|v| v.len())
}

/// All graphs with `min_n ≤ order ≤ max_n`, one stage per order.
pub fn corpus_range(min_n: usize, max_n: usize) -> Result<Truncation<Graph>> {
    let layers = (min_n..=max_n).map(graphs_of_order).collect::<Result<Vec<_>>>()?;
    Ok(Truncation::from_layers(format!("graphs[{min_n}..={max_n}]"), layers))
}

/// All graphs with `1 ≤ order ≤ max_n`.
pub fn corpus(max_n: usize) -> Result<Truncation<Graph>> {
    corpus_range(1, max_n)
}
