//! The verification suites behind `parakit verify`.
//!
//! Every suite caps the graph order at its own ceiling (below) and at the
//! configured `n`, whichever is smaller. Checks inside a suite run
//! concurrently; reports come back in a fixed order.

use std::sync::Arc;
use std::time::Instant;

use clap::ValueEnum;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use parakit_core::families::{
    check_strong_monotone, lemma1_selector, selector, verify_strongly_uniform, verify_uniform, Caps, UniformWitness,
};
use parakit_core::graphlab::algorithms::{complement_reduction, complement_translation, is_family, vc_family, PAIRS};
use parakit_core::graphlab::oracles::oracle_iso;
use parakit_core::graphlab::params::is_planar;
use parakit_core::graphlab::problems::{
    all_x_fin, arboricity_param, clique_language, degeneracy_param, degree_matched_pairs, hadwiger_param, is_language,
    kij_param, pairs, solution_size, treewidth_param, vc_language, Graphs,
};
use parakit_core::graphlab::wl::{refine, refines, WlRun, WL_MAX};
use parakit_core::graphlab::{Graph, GraphNatPair};
use parakit_core::kernel::{
    canonical_all, canonical_fin, check_lattice_laws, combine, param_leq, CombineMode, Instance, Naturals, Parameter,
    Parameterization, Truncation, Universe,
};
use parakit_core::meter::{bound_fn, Meter};
use parakit_core::promise::PromiseReductionFn;
use parakit_core::reductions::toy::random_chain;
use parakit_core::reductions::{compose, pullback_solver, verify_uniform_reduction, Side, UniformReduction};
use parakit_core::{Cell, StepBudget, Table, VerificationReport, Witness};

use crate::config::RunConfig;
use crate::corpus::restrict;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Lemma1,
    Lemma2,
    Closure,
    Facts,
    Lattice,
    GraphChain,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Facts,
        Suite::Lemma1,
        Suite::Lemma2,
        Suite::Closure,
        Suite::Lattice,
        Suite::GraphChain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma1 => "lemma1",
            Suite::Lemma2 => "lemma2",
            Suite::Closure => "closure",
            Suite::Facts => "facts",
            Suite::Lattice => "lattice",
            Suite::GraphChain => "graph-chain",
            Suite::All => "all",
        }
    }

    /// Largest graph order the suite will look at.
    pub fn ceiling(self) -> usize {
        match self {
            Suite::Facts | Suite::Lemma1 => 6,
            Suite::Lemma2 | Suite::Closure | Suite::Lattice => 5,
            Suite::GraphChain => 7,
            Suite::All => 7,
        }
    }
}

/// Deliberately broken objects for exercising the failure path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Fixture {
    /// An IS→Clique reduction whose second member disagrees with the others.
    CoherenceBreak,
}

/// Runs `suite` on `graphs` and returns its reports in a fixed order.
pub fn run(suite: Suite, graphs: &Truncation<Graph>, cfg: &RunConfig, fixture: Option<Fixture>) -> Vec<VerificationReport> {
    if suite == Suite::All {
        return Suite::EACH.iter().flat_map(|&s| run(s, graphs, cfg, fixture)).collect();
    }
    let u = restrict(graphs, suite.ceiling().min(cfg.caps.n));
    let checks: Vec<Check> = match suite {
        Suite::Facts => facts(&u, cfg),
        Suite::Lemma1 => lemma1(&u, cfg),
        Suite::Lemma2 => lemma2(&u, cfg, fixture),
        Suite::Closure => closure(&u, cfg),
        Suite::Lattice => lattice(&u),
        Suite::GraphChain => graph_chain(&u, cfg),
        Suite::All => unreachable!(),
    };
    checks
        .into_par_iter()
        .map(|(id, check)| {
            let start = Instant::now();
            let mut r = check();
            r.id = format!("{}/{id}", suite.name());
            if cfg.timing {
                r.millis = start.elapsed().as_millis() as u64;
            }
            r
        })
        .collect()
}

type Check = (String, Box<dyn FnOnce() -> VerificationReport + Send>);

fn check(id: impl Into<String>, f: impl FnOnce() -> VerificationReport + Send + 'static) -> Check {
    (id.into(), Box::new(f))
}

fn leq_check(id: String, k: Parameter<Graph>, t: Parameter<Graph>, u: &Truncation<Graph>, cap: u64) -> Check {
    let u = u.clone();
    check(id.clone(), move || param_leq(&k, &t, &u, cap).to_report(id))
}

fn facts(u: &Truncation<Graph>, cfg: &RunConfig) -> Vec<Check> {
    let cap = cfg.caps.param;
    let mut out = vec![
        leq_check("degeneracy<=treewidth".into(), degeneracy_param(), treewidth_param(), u, cap),
        leq_check("kij<=degeneracy".into(), kij_param(), degeneracy_param(), u, cap),
        leq_check("arboricity<=degeneracy".into(), arboricity_param(), degeneracy_param(), u, cap),
    ];
    let small = restrict(u, 5);
    for a in CombineMode::ALL {
        for b in CombineMode::ALL {
            if a == b {
                continue;
            }
            let id = format!("{}<={}", a.as_str(), b.as_str());
            let small = small.clone();
            out.push(check(id.clone(), move || combination(a, b, &small, 2 * cap, id)));
        }
    }
    out
}

/// Claimed bound of `a` in terms of `b` for the degeneracy/treewidth pair.
pub fn combination_bound(a: CombineMode, b: CombineMode, i: u64) -> u64 {
    match (a, b) {
        (CombineMode::Sum, _) => 2 * i,
        (CombineMode::Product, _) => i * i,
        _ => i,
    }
}

fn combination(a: CombineMode, b: CombineMode, u: &Truncation<Graph>, cap: u64, id: String) -> VerificationReport {
    let (d, t) = (degeneracy_param(), treewidth_param());
    let leq = param_leq(&combine(&d, &t, a), &combine(&d, &t, b), u, cap);
    let mut r = leq.to_report(id);
    if let Some(i) = leq.table.first_excess(|i| combination_bound(a, b, i)) {
        r.fail(Witness::new(
            "bound-exceeded",
            format!("slice {i}"),
            format!("f({i}) = {:?} exceeds {}", leq.table.value(i), combination_bound(a, b, i)),
        ));
    }
    r
}

fn lemma1(u: &Truncation<Graph>, cfg: &RunConfig) -> Vec<Check> {
    let (cap, index) = (cfg.caps.param, cfg.caps.index);
    let x = Arc::new(pairs(u, cap));
    let (x1, x2, x3) = (x.clone(), x.clone(), x);
    vec![
        check("selector", move || {
            let t = selector(&vc_family(), &vc_language(), &x1, index + 1);
            let mut r = VerificationReport::new("selector");
            if let Some(&p) = t.unresolved().first() {
                r.fail(Witness::new("unresolved", x1.items()[p].encode(), format!("no member up to {}", index + 1)));
            }
            r.add_table(t.histogram());
            r
        }),
        check("uniform", move || {
            let w = UniformWitness::new(vc_family(), lemma1_selector(&vc_family(), &vc_language(), index + 1));
            verify_uniform(&vc_language(), &all_x_fin(), &w, &x2, Caps::new(index, index + 2, cap + 2))
        }),
        check("strong-monotone", move || check_strong_monotone(&vc_family(), &vc_language(), &x3, index + 1)),
    ]
}

/// `r_i = complement` except `r_2`, which also appends an isolated vertex.
/// Every member is a correct IS→Clique translation; the family is not coherent.
pub fn coherence_break() -> UniformReduction<GraphNatPair, GraphNatPair> {
    let sel = all_x_fin().representative().clone();
    UniformReduction::new("coherence-break", PAIRS, PAIRS, sel, |i| {
        let base = complement_translation();
        PromiseReductionFn::new(format!("coherence-break_{i}"), move |x: &GraphNatPair, m| {
            let y = base.apply_with(x, m);
            if i == 2 {
                GraphNatPair::new(y.graph.disjoint_union(&Graph::empty(1)), y.k)
            } else {
                y
            }
        })
    })
}

fn lemma2(u: &Truncation<Graph>, cfg: &RunConfig, fixture: Option<Fixture>) -> Vec<Check> {
    let x = Arc::new(pairs(u, cfg.caps.param + 1));
    let caps = Caps::uniform(cfg.caps.param + 2);
    let back = match fixture {
        Some(Fixture::CoherenceBreak) => coherence_break(),
        None => complement_reduction("is->clique"),
    };
    let there = complement_reduction("clique->is");
    let (x1, x2, x3) = (x.clone(), x.clone(), x);
    let (b1, t3, b3) = (back.clone(), there.clone(), back);
    let seed = cfg.seed;
    vec![
        check("clique->is", move || {
            let (p, c, i) = (all_x_fin(), clique_language(), is_language());
            verify_uniform_reduction(&there, Side::new(&c, &p), Side::new(&i, &p), &x1, caps)
        }),
        check("is->clique", move || {
            let (p, c, i) = (all_x_fin(), clique_language(), is_language());
            verify_uniform_reduction(&b1, Side::new(&i, &p), Side::new(&c, &p), &x2, caps)
        }),
        check("round-trip", move || {
            let (p, c) = (all_x_fin(), clique_language());
            match compose(&t3, &b3) {
                Ok(round) => verify_uniform_reduction(&round, Side::new(&c, &p), Side::new(&c, &p), &x3, caps),
                Err(e) => {
                    let mut r = VerificationReport::new("round-trip");
                    r.fail(Witness::new("compose", "", e.to_string()));
                    r
                }
            }
        }),
        check("toy-chains", move || toy_chains(seed, 100)),
    ]
}

fn toy_chains(seed: u64, count: u64) -> VerificationReport {
    let u = Naturals.truncation(60);
    let caps = Caps::new(3, 3, 9);
    let mut r = VerificationReport::new("toy-chains");
    let results: Vec<(u64, VerificationReport)> = (seed..seed + count)
        .into_par_iter()
        .map(|s| {
            let ch = random_chain(s);
            let [a, b, c] = &ch.problems;
            let mut one = verify_uniform_reduction(&ch.first, Side::new(&a.language, &a.param), Side::new(&b.language, &b.param), &u, caps);
            one.absorb(verify_uniform_reduction(&ch.second, Side::new(&b.language, &b.param), Side::new(&c.language, &c.param), &u, caps));
            match compose(&ch.first, &ch.second) {
                Ok(comp) => one.absorb(verify_uniform_reduction(&comp, Side::new(&a.language, &a.param), Side::new(&c.language, &c.param), &u, caps)),
                Err(e) => one.fail(Witness::new("compose", "", e.to_string())),
            }
            (s, one)
        })
        .collect();
    let mut t = Table::new("chains", &["seed", "status"]);
    for (s, one) in results {
        t.push(vec![Cell::from(s), Cell::from(one.status.as_str())]);
        for w in one.witnesses {
            r.fail(Witness::new(w.kind, w.instance, format!("seed {s}: {}", w.detail)));
        }
    }
    r.add_table(t);
    r
}

fn closure(u: &Truncation<Graph>, cfg: &RunConfig) -> Vec<Check> {
    let x = Arc::new(pairs(u, cfg.caps.param + 1));
    let caps = Caps::uniform(cfg.caps.param + 2);
    let slack = cfg.slack;
    let witness = move || {
        UniformWitness::new(is_family(), solution_size())
            .with_bound(bound_fn(|k| 1u64 << k.min(62)), 1)
            .with_budget(StepBudget::linear(slack))
    };
    let (x1, x2, x3) = (x.clone(), x.clone(), x);
    vec![
        check("is-strongly-uniform", move || {
            let w = witness();
            verify_strongly_uniform(&is_language(), &all_x_fin(), &w, w.budget.as_ref().unwrap(), &x1, caps)
        }),
        check("pullback-uniform", move || {
            let pulled = pullback_solver(&complement_reduction("clique->is"), &witness());
            verify_uniform(&clique_language(), &all_x_fin(), &pulled, &x2, caps)
        }),
        check("pullback-strongly-uniform", move || {
            let r = complement_reduction("clique->is");
            let w = witness();
            let pulled = pullback_solver(&r, &w);
            let budget = pulled.budget.clone().expect("both sides carry budgets");
            let mut rep = verify_strongly_uniform(&clique_language(), &all_x_fin(), &pulled, &budget, &x3, caps);
            let mut t = Table::new("pullback", &["exponent", "slack"]);
            t.push(vec![Cell::from(u64::from(pulled.exponent.unwrap_or(0))), Cell::from(budget.slack())]);
            rep.add_table(t);
            rep
        }),
    ]
}

fn lattice(u: &Truncation<Graph>) -> Vec<Check> {
    let u = u.clone();
    vec![check("laws", move || {
        let mut ps: Vec<Parameterization<Graph>> =
            [degeneracy_param(), treewidth_param(), arboricity_param(), kij_param(), hadwiger_param()]
                .into_iter()
                .map(Parameterization::new)
                .collect();
        ps.push(canonical_all());
        ps.push(canonical_fin(Arc::new(Graphs)));
        check_lattice_laws(&ps, &u, u.len() as u64 + 1, 3)
    })]
}

fn graph_chain(u: &Truncation<Graph>, cfg: &RunConfig) -> Vec<Check> {
    let cap = cfg.caps.param;
    let mut out = vec![
        leq_check("degeneracy<=hadwiger".into(), degeneracy_param(), hadwiger_param(), u, cap),
        leq_check("kij<=degeneracy".into(), kij_param(), degeneracy_param(), u, cap),
        leq_check("degeneracy<=treewidth".into(), degeneracy_param(), treewidth_param(), u, cap),
        leq_check("arboricity<=degeneracy".into(), arboricity_param(), degeneracy_param(), u, cap),
        leq_check("degeneracy<=arboricity".into(), degeneracy_param(), arboricity_param(), u, cap),
    ];
    let (u, seed) = (u.clone(), cfg.seed);
    out.push(check("wl", move || wl_chain(&u, seed)));
    out
}

fn wl_runs(g: &Graph) -> [WlRun; WL_MAX] {
    [1, 2, 3].map(|k| refine(k, g, &mut Meter::new()).expect("order within the refinement cap"))
}

/// Refinement monotonicity, invariance under a seeded relabelling, soundness
/// against the isomorphism oracle on degree-matched pairs, and the minimal
/// separating level on planar pairs.
fn wl_chain(u: &Truncation<Graph>, seed: u64) -> VerificationReport {
    let mut r = VerificationReport::new("wl");
    let runs: Vec<_> = u.items().par_iter().map(wl_runs).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (g, run) in u.iter().zip(&runs) {
        for k in 1..WL_MAX {
            if !refines(&run[k].vertex_partition(), &run[k - 1].vertex_partition()) {
                r.fail(Witness::new("monotonicity", g.encode(), format!("W_{} does not refine W_{k}", k + 1)));
            }
        }
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rng);
        let copy = wl_runs(&g.permute(&perm));
        if let Some(k) = (0..WL_MAX).find(|&k| copy[k].signature != run[k].signature) {
            r.fail(Witness::new("soundness", g.encode(), format!("W_{} separates a relabelling", k + 1)));
        }
    }
    let planar: Vec<bool> = u.items().par_iter().map(|g| is_planar(g).unwrap_or(false)).collect();
    let matched = degree_matched_pairs(u);
    let dist: Vec<[bool; WL_MAX]> =
        matched.iter().map(|&(a, b)| [0, 1, 2].map(|k| runs[a][k].signature != runs[b][k].signature)).collect();
    let iso: Vec<bool> = matched
        .par_iter()
        .zip(&dist)
        .map(|(&(a, b), d)| d.iter().any(|&x| x) && oracle_iso(&u.items()[a], &u.items()[b]).unwrap_or(false))
        .collect();
    let mut levels = [0u64; WL_MAX + 1];
    for ((&(a, b), d), iso) in matched.iter().zip(&dist).zip(iso) {
        let who = format!("{},{}", u.items()[a].encode(), u.items()[b].encode());
        if iso {
            r.fail(Witness::new("soundness", who.clone(), "isomorphic pair distinguished"));
        }
        if (1..WL_MAX).any(|k| d[k - 1] && !d[k]) {
            r.fail(Witness::new("monotonicity", who.clone(), "a lower level separates, a higher one does not"));
        }
        if planar[a] && planar[b] {
            let level = d.iter().position(|&x| x).unwrap_or(WL_MAX);
            if level == WL_MAX {
                r.fail(Witness::new("planar-level", who, "no level up to 3 separates the pair"));
            }
            levels[level] += 1;
        }
    }
    let mut t = Table::new("planar-minimal-level", &["level", "pairs"]);
    for (k, n) in (1u64..).zip(&levels[..WL_MAX]) {
        t.push(vec![Cell::from(k), Cell::from(*n)]);
    }
    r.add_table(t);
    r
}
