//! The concrete algorithm families and reductions.

use super::graph::{iter_bits, Graph};
use super::params::degeneracy_metered;
use super::problems::{all_x_fin, GraphNatPair};
use crate::families::AlgorithmFamily;
use crate::meter::{bound_fn, Meter};
use crate::promise::{PromiseReductionFn, Solver};
use crate::reductions::UniformReduction;

/// Label of the `𝒢 × ℕ` universe in reductions.
pub const PAIRS: &str = "GraphNatPair";

/// Some edge inside `alive`, charging one unit per row inspected.
fn some_edge(g: &Graph, alive: u64, meter: &mut Meter) -> Option<(usize, usize)> {
    iter_bits(alive).find_map(|u| {
        let r = g.row_metered(u, meter) & alive;
        (r != 0).then(|| (u, r.trailing_zeros() as usize))
    })
}

/// Exact bounded-depth branching: does `G[alive]` have a cover of size `≤ k`?
pub fn vc_branch(g: &Graph, alive: u64, k: u64, meter: &mut Meter) -> bool {
    let Some((u, v)) = some_edge(g, alive, meter) else {
        return true;
    };
    if k == 0 {
        return false;
    }
    vc_branch(g, alive & !(1 << u), k - 1, meter) || vc_branch(g, alive & !(1 << v), k - 1, meter)
}

/// Exact vertex-cover solver on `(G, k′)` by branching to depth `k′`.
pub fn vc_exact() -> Solver<GraphNatPair> {
    Solver::new("vc-branch", |x: &GraphNatPair, m| {
        m.tick();
        vc_branch(&x.graph, x.graph.vertex_mask(), x.k, m)
    })
}

/// `A_k`: exact branching when `k′ ≤ k`, "no" otherwise.
pub fn vc_family() -> AlgorithmFamily<GraphNatPair> {
    AlgorithmFamily::new("vc", vc_solver)
}

pub fn vc_solver(k: u64) -> Solver<GraphNatPair> {
    Solver::new(format!("vc_{k}"), move |x: &GraphNatPair, m| {
        m.tick();
        x.k <= k && vc_branch(&x.graph, x.graph.vertex_mask(), x.k, m)
    })
}

/// Can the vertices of `white` be dominated by `k` more vertices?
fn ds_search(g: &Graph, white: u64, k: u64, meter: &mut Meter) -> bool {
    if white == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let closed: Vec<u64> = (0..g.order()).map(|v| g.row_metered(v, meter) | 1 << v).collect();
    let cover: Vec<u32> = closed.iter().map(|c| (c & white).count_ones()).collect();
    // any solution holds a vertex covering at least |white|/k white vertices
    let need = white.count_ones().div_ceil(k as u32);
    let heavy: u64 = (0..g.order()).filter(|&v| cover[v] >= need).fold(0, |m, v| m | 1 << v);
    // ... and a vertex of N[u] for the white vertex u with fewest choices
    let u = iter_bits(white)
        .min_by_key(|&u| closed[u].count_ones())
        .expect("white is non-empty");
    let local = closed[u];
    if heavy == 0 {
        return false;
    }
    let branch = if heavy.count_ones() < local.count_ones() { heavy } else { local };
    iter_bits(branch).any(|v| {
        meter.tick();
        ds_search(g, white & !closed[v], k - 1, meter)
    })
}

/// `A_{j,j}`: degeneracy-guided search, correct when `degeneracy(G) ≤ j` and
/// `k′ ≤ j`; answers no otherwise.
pub fn ds_family() -> AlgorithmFamily<GraphNatPair> {
    AlgorithmFamily::new("ds", ds_solver)
}

pub fn ds_solver(j: u64) -> Solver<GraphNatPair> {
    Solver::new(format!("ds_{j}"), move |x: &GraphNatPair, m| {
        m.tick();
        if x.k > j {
            return false;
        }
        if degeneracy_metered(&x.graph, m) as u64 > j {
            return false;
        }
        ds_search(&x.graph, x.graph.vertex_mask(), x.k, m)
    })
}

/// Independent set of size `≥ k` in `G[alive]`, branching on the closed
/// neighbourhood of a minimum-degree vertex.
fn is_branch(g: &Graph, alive: u64, k: u64, meter: &mut Meter) -> bool {
    if k == 0 {
        return true;
    }
    if (alive.count_ones() as u64) < k {
        return false;
    }
    let rows: Vec<(usize, u64)> = iter_bits(alive).map(|v| (v, g.row_metered(v, meter) & alive)).collect();
    let &(v, nv) = rows.iter().min_by_key(|(_, r)| r.count_ones()).expect("alive is non-empty");
    iter_bits(nv | 1 << v).any(|w| {
        meter.tick();
        is_branch(g, alive & !(g.row(w) | 1 << w), k - 1, meter)
    })
}

/// `M_k`: exact branching when `k′ ≤ k`, "no" otherwise.
pub fn is_family() -> AlgorithmFamily<GraphNatPair> {
    AlgorithmFamily::new("is", |k| {
        Solver::new(format!("is_{k}"), move |x: &GraphNatPair, m| {
            m.tick();
            x.k <= k && is_branch(&x.graph, x.graph.vertex_mask(), x.k, m)
        })
    })
}

/// `(G, k′) ↦ (co-G, k′)`, one unit per vertex pair.
pub fn complement_translation() -> PromiseReductionFn<GraphNatPair, GraphNatPair> {
    PromiseReductionFn::new("complement", |x: &GraphNatPair, m| {
        GraphNatPair::new(x.graph.complement_metered(m), x.k)
    })
}

/// The complement reduction as a uniform reduction with selector `k′ + 1`,
/// bound `f ≡ 1` and exponent 2.
pub fn complement_reduction(name: &str) -> UniformReduction<GraphNatPair, GraphNatPair> {
    UniformReduction::constant(name, PAIRS, PAIRS, all_x_fin().representative().clone(), complement_translation())
        .with_budget(bound_fn(|_| 1), 2, 1)
}
