//! Exact graph parameters at desk scale.

use super::graph::{full_mask, iter_bits, Graph};
use crate::error::{Error, Result};
use crate::meter::Meter;

/// Default vertex cap of the exponential parameters.
pub const PARAM_CAP: usize = 12;

fn check_cap(what: &'static str, g: &Graph, cap: usize) -> Result<()> {
    if g.order() > cap {
        return Err(Error::CapExceeded { what, n: g.order(), cap });
    }
    Ok(())
}

/// Least `k` such that every subgraph has a vertex of degree `≤ k`, by
/// minimum-degree peeling.
pub fn degeneracy(g: &Graph) -> usize {
    degeneracy_metered(g, &mut Meter::new())
}

/// [`degeneracy`] charging one unit per adjacency-row query.
pub fn degeneracy_metered(g: &Graph, meter: &mut Meter) -> usize {
    let mut alive = g.vertex_mask();
    let mut deg: Vec<u32> = (0..g.order()).map(|v| g.row_metered(v, meter).count_ones()).collect();
    let mut best = 0;
    while alive != 0 {
        let v = iter_bits(alive).min_by_key(|&v| deg[v]).expect("alive is non-empty");
        best = best.max(deg[v] as usize);
        alive &= !(1 << v);
        for w in iter_bits(g.row_metered(v, meter) & alive) {
            deg[w] -= 1;
        }
    }
    best
}

/// Degeneracy order: repeatedly removes a minimum-degree vertex.
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let mut alive = g.vertex_mask();
    let mut out = Vec::with_capacity(g.order());
    while alive != 0 {
        let v = iter_bits(alive)
            .min_by_key(|&v| (g.row(v) & alive).count_ones())
            .expect("alive is non-empty");
        out.push(v);
        alive &= !(1 << v);
    }
    out
}

/// Nash-Williams: `max ⌈|E(G[S])| / (|S| − 1)⌉` over `|S| ≥ 2`.
pub fn arboricity(g: &Graph) -> Result<usize> {
    check_cap("arboricity", g, 20)?;
    let n = g.order();
    let mut best = 0;
    for s in 1..=full_mask(n) {
        let size = s.count_ones() as usize;
        if size >= 2 {
            best = best.max(g.edges_within(s).div_ceil(size - 1));
        }
    }
    Ok(best)
}

/// Minimum number of forests covering the edges, by explicit search.
pub fn arboricity_by_partition(g: &Graph) -> Result<usize> {
    check_cap("forest partition", g, 8)?;
    let edges = g.edges();
    let n = g.order();
    (0..=edges.len())
        .find(|&k| {
            let mut forests = vec![Forests::new(n); k];
            partition(&edges, 0, &mut forests, 0, n)
        })
        .ok_or(Error::CapExceeded {
            what: "forest partition",
            n,
            cap: 8,
        })
}

#[derive(Clone)]
struct Forests {
    parent: Vec<usize>,
    size: usize,
}

impl Forests {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: 0,
        }
    }

    fn root(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }
}

fn partition(edges: &[(usize, usize)], next: usize, forests: &mut [Forests], used: usize, n: usize) -> bool {
    if next == edges.len() {
        return true;
    }
    let capacity: usize = forests.iter().map(|f| n - 1 - f.size).sum();
    if capacity < edges.len() - next {
        return false;
    }
    let (u, v) = edges[next];
    // colours beyond the first unused one are symmetric
    for c in 0..forests.len().min(used + 1) {
        let (ru, rv) = (forests[c].root(u), forests[c].root(v));
        if ru == rv {
            continue;
        }
        forests[c].parent[ru] = rv;
        forests[c].size += 1;
        if partition(edges, next + 1, forests, used.max(c + 1), n) {
            return true;
        }
        forests[c].parent[ru] = ru;
        forests[c].size -= 1;
    }
    false
}

/// Exact treewidth by dynamic programming over vertex subsets: `TW(S)` is the
/// best width of eliminating `S` first.
pub fn treewidth(g: &Graph) -> Result<usize> {
    treewidth_capped(g, PARAM_CAP)
}

pub fn treewidth_capped(g: &Graph, cap: usize) -> Result<usize> {
    check_cap("treewidth", g, cap)?;
    let n = g.order();
    if n == 0 {
        return Ok(0);
    }
    let all = full_mask(n);
    let mut tw = vec![usize::MAX; 1 << n];
    tw[0] = 0;
    for s in 1..=all {
        let mut best = usize::MAX;
        for v in iter_bits(s) {
            let rest = s & !(1 << v);
            let q = eliminated_neighbours(g, rest, v);
            best = best.min(tw[rest as usize].max(q));
        }
        tw[s as usize] = best;
    }
    Ok(tw[all as usize])
}

/// `|Q(S, v)|`: vertices outside `S ∪ {v}` reachable from `v` through `S`.
fn eliminated_neighbours(g: &Graph, s: u64, v: usize) -> usize {
    let inside = g.component_within(v, s | 1 << v);
    let mut reach = 0u64;
    for w in iter_bits(inside) {
        reach |= g.row(w);
    }
    (reach & !s & !(1 << v)).count_ones() as usize
}

fn min_subset_size(n: usize, ok: impl Fn(u64) -> bool) -> usize {
    let mut best = n;
    for s in 0..=full_mask(n) {
        let size = s.count_ones() as usize;
        if size < best && ok(s) {
            best = size;
        }
    }
    best
}

/// Minimum vertex cover size.
pub fn vc_number(g: &Graph) -> Result<usize> {
    check_cap("vertex cover", g, 20)?;
    let edges = g.edges();
    Ok(min_subset_size(g.order(), |s| edges.iter().all(|&(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1)))
}

/// Minimum dominating set size.
pub fn ds_number(g: &Graph) -> Result<usize> {
    check_cap("dominating set", g, 20)?;
    let all = g.vertex_mask();
    Ok(min_subset_size(g.order(), |s| {
        let mut dom = s;
        for v in iter_bits(s) {
            dom |= g.row(v);
        }
        dom == all
    }))
}

/// Largest clique size.
pub fn clique_number(g: &Graph) -> Result<usize> {
    check_cap("clique", g, 20)?;
    let mut best = 0;
    for s in 0..=g.vertex_mask() {
        let size = s.count_ones() as usize;
        if size > best && iter_bits(s).all(|v| (g.row(v) | 1 << v) & s == s) {
            best = size;
        }
    }
    Ok(best)
}

/// Largest independent set size.
pub fn independence_number(g: &Graph) -> Result<usize> {
    clique_number(&g.complement())
}

/// Largest `t` with a `K_t` minor, by search over partitions of a vertex
/// subset into connected, pairwise adjacent branch sets.
pub fn hadwiger(g: &Graph) -> Result<usize> {
    check_cap("hadwiger", g, 10)?;
    let mut best = 0;
    for_each_branch_partition(g, &mut |sets: &[u64]| {
        if sets.len() > best && pairwise_adjacent(g, sets) {
            best = sets.len();
        }
    });
    Ok(best)
}

fn pairwise_adjacent(g: &Graph, sets: &[u64]) -> bool {
    let nbr: Vec<u64> = sets.iter().map(|&s| iter_bits(s).fold(0, |m, v| m | g.row(v))).collect();
    (0..sets.len()).all(|a| (a + 1..sets.len()).all(|b| nbr[a] & sets[b] != 0))
}

/// Calls `visit` with every family of disjoint, non-empty, connected vertex
/// sets (vertices may be left out), each family once.
fn for_each_branch_partition(g: &Graph, visit: &mut impl FnMut(&[u64])) {
    fn go(g: &Graph, v: usize, sets: &mut Vec<u64>, visit: &mut impl FnMut(&[u64])) {
        if v == g.order() {
            if sets.iter().all(|&s| g.is_connected_within(s)) {
                visit(sets);
            }
            return;
        }
        go(g, v + 1, sets, visit);
        for i in 0..sets.len() {
            sets[i] |= 1 << v;
            go(g, v + 1, sets, visit);
            sets[i] &= !(1 << v);
        }
        sets.push(1 << v);
        go(g, v + 1, sets, visit);
        sets.pop();
    }
    go(g, 0, &mut Vec::new(), visit);
}

/// Whether `h` is a minor of `g`: some family of `|V(h)|` connected branch
/// sets whose quotient contains `h` as a subgraph.
pub fn has_minor(g: &Graph, h: &Graph) -> Result<bool> {
    check_cap("minor test", g, 10)?;
    let k = h.order();
    if k == 0 {
        return Ok(true);
    }
    if k > g.order() || h.edge_count() > g.edge_count() {
        return Ok(false);
    }
    let h_edges = h.edges();
    let mut found = false;
    for_each_branch_partition(g, &mut |sets: &[u64]| {
        if found || sets.len() != k {
            return;
        }
        let nbr: Vec<u64> = sets.iter().map(|&s| iter_bits(s).fold(0, |m, v| m | g.row(v))).collect();
        let adj = |a: usize, b: usize| nbr[a] & sets[b] != 0;
        let mut perm: Vec<usize> = (0..k).collect();
        found = permutations(&mut perm, 0, &mut |p| h_edges.iter().all(|&(u, v)| adj(p[u], p[v])));
    });
    Ok(found)
}

fn permutations(p: &mut Vec<usize>, i: usize, ok: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if i == p.len() {
        return ok(p);
    }
    for j in i..p.len() {
        p.swap(i, j);
        if permutations(p, i + 1, ok) {
            p.swap(i, j);
            return true;
        }
        p.swap(i, j);
    }
    false
}

/// Planarity by Wagner's theorem: no `K_5` and no `K_{3,3}` minor.
pub fn is_planar(g: &Graph) -> Result<bool> {
    check_cap("planarity", g, 9)?;
    if g.order() <= 4 {
        return Ok(true);
    }
    if g.order() >= 3 && g.edge_count() > 3 * g.order() - 6 {
        return Ok(false);
    }
    Ok(!has_minor(g, &Graph::complete(5))? && !has_minor(g, &Graph::complete_bipartite(3, 3))?)
}

/// Whether `g` has a `K_{t,t}` subgraph.
pub fn has_biclique(g: &Graph, t: usize) -> bool {
    if t == 0 {
        return true;
    }
    let n = g.order();
    if 2 * t > n {
        return false;
    }
    (0..=g.vertex_mask())
        .filter(|a: &u64| a.count_ones() as usize == t)
        .any(|a| {
            let common = iter_bits(a).fold(g.vertex_mask(), |m, v| m & g.row(v)) & !a;
            common.count_ones() as usize >= t
        })
}

/// Least `t ≥ 1` such that `g` has no `K_{t,t}` subgraph.
pub fn kij_index(g: &Graph) -> Result<usize> {
    check_cap("biclique index", g, 20)?;
    Ok((1..).find(|&t| !has_biclique(g, t)).expect("t > n/2 always works"))
}
