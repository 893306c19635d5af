use std::fmt;

use crate::meter::Meter;

/// Largest vertex count representable with row bitmasks.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph on vertices `0..n`, stored as adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Self { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        Self { n: adj.len(), adj }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 0..n {
            g.adj[v] = full_mask(n) & !(1 << v);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut g = Self::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Self {
        Self::complete_bipartite(1, k)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "invalid edge {u}-{v}");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// [`Graph::row`], charging one unit.
    #[inline]
    pub fn row_metered(&self, v: usize, meter: &mut Meter) -> u64 {
        meter.tick();
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut later = self.adj[u] & !full_mask(u + 1);
            while later != 0 {
                out.push((u, later.trailing_zeros() as usize));
                later &= later - 1;
            }
        }
        out
    }

    /// Sorted degree sequence, largest first.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Edges within the vertex set `mask`.
    pub fn edges_within(&self, mask: u64) -> usize {
        iter_bits(mask).map(|v| (self.adj[v] & mask).count_ones() as usize).sum::<usize>() / 2
    }

    pub fn complement(&self) -> Self {
        let all = self.vertex_mask();
        Self::from_rows((0..self.n).map(|v| all & !self.adj[v] & !(1 << v)).collect())
    }

    /// Complement charging one unit per vertex pair.
    pub fn complement_metered(&self, meter: &mut Meter) -> Self {
        let pairs = self.n * self.n.saturating_sub(1) / 2;
        meter.charge(pairs as u64);
        self.complement()
    }

    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let shift = self.n;
        assert!(shift + other.n <= MAX_VERTICES);
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << shift));
        Self::from_rows(adj)
    }

    /// The subgraph induced by `mask`, vertices renumbered in increasing order.
    pub fn induced(&self, mask: u64) -> Self {
        let keep: Vec<usize> = iter_bits(mask & self.vertex_mask()).collect();
        let mut g = Self::empty(keep.len());
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut g = Self::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Adds a vertex adjacent to `mask`.
    pub fn extend_with(&self, mask: u64) -> Self {
        let v = self.n;
        assert!(v < MAX_VERTICES);
        let mut adj = self.adj.clone();
        for u in iter_bits(mask) {
            adj[u] |= 1 << v;
        }
        adj.push(mask);
        Self::from_rows(adj)
    }

    /// Vertices reachable from `start` inside `mask`.
    pub fn component_within(&self, start: usize, mask: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in iter_bits(frontier) {
                next |= self.adj[v];
            }
            next &= mask & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected_within(&self, mask: u64) -> bool {
        mask == 0 || self.component_within(mask.trailing_zeros() as usize, mask) == mask
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertex_mask())
    }

    pub fn is_forest(&self) -> bool {
        let mut components = 0;
        let mut left = self.vertex_mask();
        while left != 0 {
            let c = self.component_within(left.trailing_zeros() as usize, left);
            left &= !c;
            components += 1;
        }
        self.edge_count() + components == self.n
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", super::graph6::encode_graph6(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::graph6::encode_graph6(self))
    }
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Indices of the set bits of `mask`, ascending.
#[inline]
pub fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}
