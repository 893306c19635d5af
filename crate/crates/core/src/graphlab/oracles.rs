//! Exact reference answers by exhaustive search.

use super::graph::{iter_bits, Graph};
use crate::error::{Error, Result};

/// Vertex cap of the oracles.
pub const ORACLE_CAP: usize = 16;

fn check(what: &'static str, n: usize) -> Result<()> {
    if n > ORACLE_CAP {
        return Err(Error::CapExceeded { what, n, cap: ORACLE_CAP });
    }
    Ok(())
}

/// Isomorphism by degree-pruned backtracking.
pub fn oracle_iso(g: &Graph, h: &Graph) -> Result<bool> {
    check("isomorphism oracle", g.order().max(h.order()))?;
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    let mut map = vec![usize::MAX; n];
    Ok(extend(g, h, 0, &mut map, 0))
}

fn extend(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: u64) -> bool {
    if v == g.order() {
        return true;
    }
    for w in iter_bits(h.vertex_mask() & !used) {
        if h.degree(w) != g.degree(v) {
            continue;
        }
        if (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w)) {
            map[v] = w;
            if extend(g, h, v + 1, map, used | 1 << w) {
                return true;
            }
        }
    }
    false
}

/// Hamiltonian cycle by dynamic programming over vertex subsets. Graphs with
/// fewer than three vertices have none.
pub fn oracle_hamiltonian(g: &Graph) -> Result<bool> {
    let n = g.order();
    check("hamiltonian oracle", n)?;
    if n < 3 {
        return Ok(false);
    }
    // ends[S]: vertices v such that a path from 0 through exactly S ends in v
    let mut ends = vec![0u64; 1 << n];
    ends[1] = 1;
    for s in 1..1usize << n {
        if s & 1 == 0 || ends[s] == 0 {
            continue;
        }
        for v in iter_bits(ends[s] as u64) {
            for w in iter_bits(g.row(v) & !(s as u64)) {
                ends[s | 1 << w] |= 1 << w;
            }
        }
    }
    Ok(ends[(1 << n) - 1] & g.row(0) != 0)
}
