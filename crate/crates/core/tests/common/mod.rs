//! Reference implementations written directly from the definitions. They
//! share no code with the library beyond the `Graph` accessors.

#![allow(dead_code)]

use parakit_core::graphlab::Graph;

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

fn edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Max over non-empty vertex sets of the minimum degree inside the set.
pub fn degeneracy(g: &Graph) -> u64 {
    subsets(g.order())
        .filter(|s| !s.is_empty())
        .map(|s| s.iter().map(|&v| s.iter().filter(|&&w| g.has_edge(v, w)).count()).min().unwrap() as u64)
        .max()
        .unwrap_or(0)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Min over elimination orders of the largest neighbourhood at elimination.
pub fn treewidth(g: &Graph) -> u64 {
    let n = g.order();
    let mut best = u64::MAX;
    for order in permutations(n) {
        let mut adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
        let mut gone = vec![false; n];
        let mut width = 0;
        for &v in &order {
            let nb: Vec<usize> = (0..n).filter(|&w| !gone[w] && adj[v][w]).collect();
            width = width.max(nb.len() as u64);
            for &a in &nb {
                for &b in &nb {
                    if a != b {
                        adj[a][b] = true;
                    }
                }
            }
            gone[v] = true;
        }
        best = best.min(width);
    }
    if n == 0 {
        0
    } else {
        best
    }
}

fn acyclic(n: usize, es: &[(usize, usize)]) -> bool {
    let mut comp: Vec<usize> = (0..n).collect();
    for &(u, v) in es {
        let (a, b) = (comp[u], comp[v]);
        if a == b {
            return false;
        }
        for c in comp.iter_mut() {
            if *c == b {
                *c = a;
            }
        }
    }
    true
}

fn colourable(n: usize, es: &[(usize, usize)], k: usize, colour: &mut Vec<usize>) -> bool {
    if colour.len() == es.len() {
        return (0..k).all(|c| {
            let class: Vec<_> = es.iter().zip(colour.iter()).filter(|(_, &x)| x == c).map(|(e, _)| *e).collect();
            acyclic(n, &class)
        });
    }
    let limit = colour.iter().max().map_or(1, |m| m + 2).min(k);
    for c in 0..limit {
        colour.push(c);
        let class: Vec<_> = es.iter().zip(colour.iter()).filter(|(_, &x)| x == c).map(|(e, _)| *e).collect();
        if acyclic(n, &class) && colourable(n, es, k, colour) {
            colour.pop();
            return true;
        }
        colour.pop();
    }
    false
}

/// Fewest forests covering all edges.
pub fn arboricity(g: &Graph) -> u64 {
    let es = edges(g);
    (0..=es.len()).find(|&k| colourable(g.order(), &es, k, &mut Vec::new())).unwrap() as u64
}

/// Least `t ≥ 1` without disjoint `t`-sets completely joined to each other.
pub fn kij_index(g: &Graph) -> u64 {
    let n = g.order();
    let all: Vec<Vec<usize>> = subsets(n).collect();
    let has = |t: usize| {
        all.iter().filter(|a| a.len() == t).any(|a| {
            all.iter()
                .filter(|b| b.len() == t && b.iter().all(|v| !a.contains(v)))
                .any(|b| a.iter().all(|&u| b.iter().all(|&v| g.has_edge(u, v))))
        })
    };
    (1..).find(|&t| !has(t)).unwrap() as u64
}

pub fn vc_number(g: &Graph) -> u64 {
    let es = edges(g);
    subsets(g.order())
        .filter(|s| es.iter().all(|(u, v)| s.contains(u) || s.contains(v)))
        .map(|s| s.len() as u64)
        .min()
        .unwrap()
}

pub fn ds_number(g: &Graph) -> u64 {
    let n = g.order();
    subsets(n)
        .filter(|s| (0..n).all(|v| s.contains(&v) || s.iter().any(|&u| g.has_edge(u, v))))
        .map(|s| s.len() as u64)
        .min()
        .unwrap()
}

pub fn clique_number(g: &Graph) -> u64 {
    subsets(g.order())
        .filter(|s| s.iter().all(|&u| s.iter().all(|&v| u == v || g.has_edge(u, v))))
        .map(|s| s.len() as u64)
        .max()
        .unwrap()
}

pub fn independence_number(g: &Graph) -> u64 {
    subsets(g.order())
        .filter(|s| s.iter().all(|&u| s.iter().all(|&v| !g.has_edge(u, v))))
        .map(|s| s.len() as u64)
        .max()
        .unwrap()
}

/// Isomorphism by trying every bijection.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || edges(g).len() != edges(h).len() {
        return false;
    }
    permutations(n)
        .iter()
        .any(|p| (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(p[u], p[v]))))
}

/// `f(i) = max{ κ(x) : τ(x) ≤ i }` for `i = 1..=cap`, `None` when empty.
pub fn bound_table(kv: &[u64], tv: &[u64], cap: u64) -> Vec<Option<u64>> {
    (1..=cap)
        .map(|i| kv.iter().zip(tv).filter(|(_, &t)| t <= i).map(|(&k, _)| k).max())
        .collect()
}

/// graph6 straight from the format description: `n + 63`, then the upper
/// triangle column by column in groups of six bits, each group plus 63.
pub fn graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= 62);
    let mut bits = Vec::new();
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    let mut out = vec![n as u8 + 63];
    for chunk in bits.chunks(6) {
        let mut b = 0u8;
        for (i, &x) in chunk.iter().enumerate() {
            if x {
                b |= 1 << (5 - i);
            }
        }
        out.push(b + 63);
    }
    String::from_utf8(out).unwrap()
}

/// Number of unlabelled graphs of order `n` by Burnside's lemma.
pub fn unlabelled_count(n: usize) -> u128 {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let perms = permutations(n);
    let total: u128 = perms
        .iter()
        .map(|p| {
            let mut seen = vec![false; pairs.len()];
            let mut orbits = 0;
            for s in 0..pairs.len() {
                if seen[s] {
                    continue;
                }
                orbits += 1;
                let mut cur = s;
                while !seen[cur] {
                    seen[cur] = true;
                    let (a, b) = pairs[cur];
                    let (x, y) = (p[a].min(p[b]), p[a].max(p[b]));
                    cur = pairs.iter().position(|&q| q == (x, y)).unwrap();
                }
            }
            1u128 << orbits
        })
        .sum();
    total / perms.len() as u128
}

/// Largest complete minor, by exploring every sequence of vertex deletions and
/// edge contractions on adjacency matrices.
pub fn hadwiger(g: &Graph) -> u64 {
    use std::collections::HashSet;
    let start: Vec<Vec<bool>> = (0..g.order()).map(|u| (0..g.order()).map(|v| g.has_edge(u, v)).collect()).collect();
    let mut seen = HashSet::new();
    let mut stack = vec![start];
    let mut best = 0;
    while let Some(m) = stack.pop() {
        if !seen.insert(m.clone()) {
            continue;
        }
        let n = m.len();
        if (0..n).all(|u| (0..n).all(|v| u == v || m[u][v])) {
            best = best.max(n as u64);
        }
        if n as u64 <= best {
            continue;
        }
        for v in 0..n {
            let keep: Vec<usize> = (0..n).filter(|&w| w != v).collect();
            stack.push(keep.iter().map(|&a| keep.iter().map(|&b| m[a][b]).collect()).collect());
        }
        for u in 0..n {
            for v in u + 1..n {
                if !m[u][v] {
                    continue;
                }
                // merge v into u
                let keep: Vec<usize> = (0..n).filter(|&w| w != v).collect();
                let adj = |x: usize, y: usize| m[x][y] || (x == u && m[v][y]) || (y == u && m[x][v]);
                let merged = keep.iter().map(|&a| keep.iter().map(|&b| a != b && adj(a, b)).collect()).collect();
                stack.push(merged);
            }
        }
    }
    best
}
