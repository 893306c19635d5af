//! Weisfeiler-Lehman refinement.
//!
//! `W_1` is colour refinement on vertices; `W_k` for `k ≥ 2` is the
//! `k`-dimensional folklore variant on `k`-tuples. Colours are 128-bit hashes
//! of the full refinement history, so runs on different graphs are directly
//! comparable and isomorphic graphs always receive equal colours.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::graph::Graph;
use super::problems::GraphPair;
use crate::error::{Error, Result};
use crate::families::AlgorithmFamily;
use crate::meter::Meter;
use crate::promise::Solver;

/// Largest supported dimension.
pub const WL_MAX: usize = 3;

type Color = u128;

fn hash128(parts: impl Hash) -> Color {
    let mut lo = DefaultHasher::new();
    0u8.hash(&mut lo);
    parts.hash(&mut lo);
    let mut hi = DefaultHasher::new();
    1u8.hash(&mut hi);
    parts.hash(&mut hi);
    (hi.finish() as u128) << 64 | lo.finish() as u128
}

/// Stable round count and final colour histogram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WlSignature {
    pub order: usize,
    pub rounds: usize,
    pub histogram: Vec<(Color, usize)>,
}

/// Result of one refinement run.
#[derive(Debug, Clone)]
pub struct WlRun {
    pub signature: WlSignature,
    /// Stable colour of each vertex (of its diagonal tuple for `k ≥ 2`).
    pub vertex_colors: Vec<Color>,
}

impl WlRun {
    /// Vertex classes numbered by first occurrence.
    pub fn vertex_partition(&self) -> Vec<usize> {
        let mut ids: Vec<Color> = Vec::new();
        self.vertex_colors
            .iter()
            .map(|c| {
                ids.iter().position(|d| d == c).unwrap_or_else(|| {
                    ids.push(*c);
                    ids.len() - 1
                })
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WlOutcome {
    /// Different stable colourings: the graphs are not isomorphic.
    Distinguished,
    /// Equal stable colourings: inconclusive.
    SameColors,
}

fn check_dim(k: usize) -> Result<()> {
    if !(1..=WL_MAX).contains(&k) {
        return Err(Error::OutOfRange {
            what: "WL dimension",
            value: k,
            range: "1..=3",
        });
    }
    Ok(())
}

fn class_count(colors: &[Color]) -> usize {
    let mut v = colors.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn histogram(colors: &[Color]) -> Vec<(Color, usize)> {
    let mut v = colors.to_vec();
    v.sort_unstable();
    let mut out: Vec<(Color, usize)> = Vec::new();
    for c in v {
        match out.last_mut() {
            Some((d, n)) if *d == c => *n += 1,
            _ => out.push((c, 1)),
        }
    }
    out
}

/// Refines until the number of classes stops growing.
fn stabilize(mut colors: Vec<Color>, mut step: impl FnMut(&[Color]) -> Vec<Color>) -> (usize, Vec<Color>) {
    let mut classes = class_count(&colors);
    let mut rounds = 0;
    loop {
        let next = step(&colors);
        let c = class_count(&next);
        if c == classes {
            return (rounds, colors);
        }
        colors = next;
        classes = c;
        rounds += 1;
    }
}

fn color_refinement(g: &Graph, meter: &mut Meter) -> (usize, Vec<Color>) {
    let n = g.order();
    let init = vec![hash128(("cr", n)); n];
    stabilize(init, |old| {
        (0..n)
            .map(|v| {
                let row = g.row_metered(v, meter);
                let mut nb: Vec<Color> = super::graph::iter_bits(row).map(|w| old[w]).collect();
                meter.charge(nb.len() as u64);
                nb.sort_unstable();
                hash128((old[v], nb))
            })
            .collect()
    })
}

fn tuple_of(mut t: usize, n: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in out.iter_mut().rev() {
        *slot = t % n;
        t /= n;
    }
    out
}

fn folklore(g: &Graph, k: usize, meter: &mut Meter) -> (usize, Vec<Color>) {
    let n = g.order();
    let total = n.pow(k as u32);
    let pow: Vec<usize> = (0..k).map(|i| n.pow((k - 1 - i) as u32)).collect();
    let init: Vec<Color> = (0..total)
        .map(|t| {
            let tup = tuple_of(t, n, k);
            let mut atoms = Vec::with_capacity(k * k);
            for a in 0..k {
                for b in 0..k {
                    meter.tick();
                    atoms.push((tup[a] == tup[b], g.has_edge(tup[a], tup[b])));
                }
            }
            hash128(("fwl", k, atoms))
        })
        .collect();
    stabilize(init, |old| {
        (0..total)
            .map(|t| {
                let tup = tuple_of(t, n, k);
                let mut ms: Vec<Vec<Color>> = (0..n)
                    .map(|w| {
                        meter.charge(k as u64);
                        (0..k).map(|i| old[t - tup[i] * pow[i] + w * pow[i]]).collect()
                    })
                    .collect();
                ms.sort_unstable();
                hash128((old[t], ms))
            })
            .collect()
    })
}

/// Runs `W_k` on one graph.
pub fn refine(k: usize, g: &Graph, meter: &mut Meter) -> Result<WlRun> {
    check_dim(k)?;
    let n = g.order();
    let (rounds, colors) = if k == 1 { color_refinement(g, meter) } else { folklore(g, k, meter) };
    let vertex_colors = if k == 1 {
        colors.clone()
    } else {
        let diag: usize = (0..k).map(|i| n.pow(i as u32)).sum();
        (0..n).map(|v| colors[v * diag]).collect()
    };
    Ok(WlRun {
        signature: WlSignature {
            order: n,
            rounds,
            histogram: histogram(&colors),
        },
        vertex_colors,
    })
}

/// Compares the stable `W_k` colourings of `g` and `h`.
pub fn wl(k: usize, g: &Graph, h: &Graph) -> Result<WlOutcome> {
    wl_metered(k, g, h, &mut Meter::new())
}

pub fn wl_metered(k: usize, g: &Graph, h: &Graph, meter: &mut Meter) -> Result<WlOutcome> {
    let a = refine(k, g, meter)?;
    let b = refine(k, h, meter)?;
    Ok(if a.signature == b.signature {
        WlOutcome::SameColors
    } else {
        WlOutcome::Distinguished
    })
}

/// Whether every class of `fine` lies inside a class of `coarse`.
pub fn refines(fine: &[usize], coarse: &[usize]) -> bool {
    fine.len() == coarse.len()
        && (0..fine.len()).all(|a| (a + 1..fine.len()).all(|b| fine[a] != fine[b] || coarse[a] == coarse[b]))
}

/// `M_k` answers yes ("possibly isomorphic") iff `W_k` does not distinguish
/// the pair. Indices above 3 are clamped to 3.
pub fn wl_family() -> AlgorithmFamily<GraphPair> {
    AlgorithmFamily::new("wl", |k| {
        let dim = (k as usize).clamp(1, WL_MAX);
        Solver::new(format!("wl_{dim}"), move |x: &GraphPair, m| {
            wl_metered(dim, &x.left, &x.right, m).expect("dimension in range") == WlOutcome::SameColors
        })
    })
}
