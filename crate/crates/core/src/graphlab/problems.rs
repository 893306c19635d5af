//! Graph instance types, universes, languages and parameterizations.

use std::sync::Arc;

use super::canon::{graphs_of_order, position_in_order, ENUM_CAP};
use super::graph::Graph;
use super::graph6::{decode_graph6, encode_graph6};
use super::params;
use crate::kernel::{
    canonical_all, canonical_fin, product, Decode, Instance, Language, Nat, Naturals, Paired, Parameter, Parameterization,
    Truncation, Universe,
};

impl Instance for Graph {
    fn encode(&self) -> String {
        encode_graph6(self)
    }
}

impl Decode for Graph {
    fn decode(word: &str) -> Option<Self> {
        decode_graph6(word).ok()
    }
}

/// `(G, k)` encoded as `graph6(G)#1^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GraphNatPair {
    pub graph: Graph,
    pub k: u64,
}

impl GraphNatPair {
    pub fn new(graph: Graph, k: u64) -> Self {
        Self { graph, k }
    }
}

impl Instance for GraphNatPair {
    fn encode(&self) -> String {
        let mut s = encode_graph6(&self.graph);
        s.push('#');
        s.extend(std::iter::repeat_n('1', self.k as usize));
        s
    }
}

impl Decode for GraphNatPair {
    fn decode(word: &str) -> Option<Self> {
        let (head, tail) = word.rsplit_once('#')?;
        if !tail.bytes().all(|b| b == b'1') {
            return None;
        }
        Some(Self::new(Graph::decode(head)?, tail.len() as u64))
    }
}

impl Paired for GraphNatPair {
    type Left = Graph;
    type Right = Nat;

    fn split(&self) -> (Graph, Nat) {
        (self.graph.clone(), Nat(self.k))
    }
}

/// `(G, H)` encoded as `graph6(G),graph6(H)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GraphPair {
    pub left: Graph,
    pub right: Graph,
}

impl GraphPair {
    pub fn new(left: Graph, right: Graph) -> Self {
        Self { left, right }
    }
}

impl Instance for GraphPair {
    fn encode(&self) -> String {
        format!("{},{}", encode_graph6(&self.left), encode_graph6(&self.right))
    }
}

impl Decode for GraphPair {
    fn decode(word: &str) -> Option<Self> {
        let (a, b) = word.split_once(',')?;
        Some(Self::new(Graph::decode(a)?, Graph::decode(b)?))
    }
}

/// Unlabelled graphs of order `1..=9`, by order and then graph6 word.
#[derive(Debug, Clone, Copy, Default)]
pub struct Graphs;

impl Graphs {
    fn layer_len(n: usize) -> usize {
        graphs_of_order(n).map_or(0, |v| v.len())
    }
}

impl Universe<Graph> for Graphs {
    fn name(&self) -> String {
        "graphs".into()
    }

    fn nth(&self, index: usize) -> Option<Graph> {
        let mut rest = index.checked_sub(1)?;
        for n in 1..=ENUM_CAP {
            let layer = graphs_of_order(n).ok()?;
            if rest < layer.len() {
                return Some(layer[rest].clone());
            }
            rest -= layer.len();
        }
        None
    }

    fn index_of(&self, g: &Graph) -> Option<usize> {
        let n = g.order();
        if n == 0 || n > ENUM_CAP {
            return None;
        }
        let before: usize = (1..n).map(Self::layer_len).sum();
        Some(before + position_in_order(g).ok()? + 1)
    }

    fn truncation(&self, cap: usize) -> Truncation<Graph> {
        let mut layers = Vec::new();
        let mut left = cap;
        for n in 1..=ENUM_CAP {
            if left == 0 {
                break;
            }
            let mut layer = graphs_of_order(n).unwrap_or_default();
            layer.truncate(left);
            left -= layer.len();
            layers.push(layer);
        }
        Truncation::from_layers(format!("graphs[..={cap}]"), layers)
    }
}

/// `𝒢 × ℕ` enumerated along Cantor's pairing of graph index and `k + 1`.
#[derive(Debug, Clone, Copy, Default)]
pub struct GraphNatPairs;

impl Universe<GraphNatPair> for GraphNatPairs {
    fn name(&self) -> String {
        "graphs x N".into()
    }

    fn nth(&self, index: usize) -> Option<GraphNatPair> {
        let z = index.checked_sub(1)?;
        let w = (((8 * z + 1) as f64).sqrt() as usize - 1) / 2;
        let w = (w.saturating_sub(1)..=w + 1).rev().find(|&w| w * (w + 1) / 2 <= z)?;
        let b = z - w * (w + 1) / 2;
        let a = w - b;
        Some(GraphNatPair::new(Graphs.nth(a + 1)?, b as u64))
    }

    fn index_of(&self, x: &GraphNatPair) -> Option<usize> {
        let a = Graphs.index_of(&x.graph)? - 1;
        let b = usize::try_from(x.k).ok()?;
        let w = a + b;
        Some(w * (w + 1) / 2 + b + 1)
    }
}

/// Every `(G, k′)` with `G ∈ graphs` and `k′ ≤ max_k`, by graph then `k′`;
/// stages follow those of `graphs`.
pub fn pairs(graphs: &Truncation<Graph>, max_k: u64) -> Truncation<GraphNatPair> {
    let per = max_k as usize + 1;
    let items = graphs
        .iter()
        .flat_map(|g| (0..=max_k).map(move |k| GraphNatPair::new(g.clone(), k)))
        .collect();
    let ends = graphs.stage_ends().iter().map(|e| e * per).collect();
    Truncation::staged(format!("{}x[0..={max_k}]", graphs.name()), items, ends)
}

/// All ordered pairs of graphs in `graphs` with equal degree sequences,
/// `left` before `right` in enumeration order.
pub fn degree_matched_pairs(graphs: &Truncation<Graph>) -> Vec<(usize, usize)> {
    let seqs: Vec<_> = graphs.iter().map(|g| (g.order(), g.degree_sequence())).collect();
    let mut out = Vec::new();
    for a in 0..seqs.len() {
        for b in a + 1..seqs.len() {
            if seqs[a] == seqs[b] {
                out.push((a, b));
            }
        }
    }
    out
}

fn pair_language(name: &str, holds: impl Fn(&Graph, u64) -> bool + Send + Sync + 'static) -> Language<GraphNatPair> {
    Language::brute_force(name, move |x: &GraphNatPair| holds(&x.graph, x.k))
}

/// `{(G, k) : G has a vertex cover of size ≤ k}`.
pub fn vc_language() -> Language<GraphNatPair> {
    pair_language("VC", |g, k| params::vc_number(g).expect("desk-scale graph") as u64 <= k)
}

/// `{(G, k) : G has a dominating set of size ≤ k}`.
pub fn ds_language() -> Language<GraphNatPair> {
    pair_language("DS", |g, k| params::ds_number(g).expect("desk-scale graph") as u64 <= k)
}

/// `{(G, k) : G has a clique of size ≥ k}`.
pub fn clique_language() -> Language<GraphNatPair> {
    pair_language("Clique", |g, k| params::clique_number(g).expect("desk-scale graph") as u64 >= k)
}

/// `{(G, k) : G has an independent set of size ≥ k}`.
pub fn is_language() -> Language<GraphNatPair> {
    pair_language("IS", |g, k| params::independence_number(g).expect("desk-scale graph") as u64 >= k)
}

/// `𝕡_all × 𝕡_fin` on `𝒢 × ℕ`; its representative is `k + 1`.
pub fn all_x_fin() -> Parameterization<GraphNatPair> {
    product(&canonical_all::<Graph>(), &canonical_fin::<Nat>(Arc::new(Naturals)))
}

/// `max(1, k)`, charging one unit per padding symbol.
pub fn solution_size() -> Parameter<GraphNatPair> {
    Parameter::new("k", |x: &GraphNatPair, m| {
        m.charge(x.k + 1);
        x.k.max(1)
    })
}

fn graph_param(name: &str, f: impl Fn(&Graph) -> usize + Send + Sync + 'static) -> Parameter<Graph> {
    Parameter::unmetered(name, move |g| f(g) as u64)
}

pub fn degeneracy_param() -> Parameter<Graph> {
    Parameter::new("degeneracy", |g: &Graph, m| params::degeneracy_metered(g, m) as u64)
}

pub fn treewidth_param() -> Parameter<Graph> {
    graph_param("treewidth", |g| params::treewidth(g).expect("desk-scale graph"))
}

pub fn arboricity_param() -> Parameter<Graph> {
    graph_param("arboricity", |g| params::arboricity(g).expect("desk-scale graph"))
}

pub fn kij_param() -> Parameter<Graph> {
    graph_param("kij_index", |g| params::kij_index(g).expect("desk-scale graph"))
}

pub fn hadwiger_param() -> Parameter<Graph> {
    graph_param("hadwiger", |g| params::hadwiger(g).expect("desk-scale graph"))
}
