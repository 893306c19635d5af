//! Measured cost maxima against the fitted budgets, per `(k, n)`.
//!
//! For `vc` and `ds` the size `n` is the encoded length of `(G, k′)`; for `wl`
//! it is the graph order, and runs are measured on self-pairs `(G, G)`, which
//! force every refinement to its stable colouring.

use std::collections::BTreeMap;

use clap::ValueEnum;
use rayon::prelude::*;
use serde_json::json;

use parakit_core::bridge::fpt_to_fptprime;
use parakit_core::families::measure_family;
use parakit_core::graphlab::algorithms::{ds_family, vc_exact};
use parakit_core::graphlab::problems::{pairs, solution_size, GraphPair};
use parakit_core::graphlab::wl::{wl_family, WL_MAX};
use parakit_core::graphlab::Graph;
use parakit_core::kernel::Truncation;
use parakit_core::meter::{bound_fn, calibrate, BudgetSample};

use crate::config::RunConfig;
use crate::corpus::restrict;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Vc,
    Ds,
    Wl,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Vc => "vc",
            Family::Ds => "ds",
            Family::Wl => "wl",
        }
    }
}

pub const COLUMNS: [&str; 6] = ["family", "k", "n", "measured_max", "allowed", "pass"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub family: &'static str,
    pub k: u64,
    pub n: u64,
    pub measured_max: u64,
    pub allowed: u64,
    pub pass: bool,
}

impl Row {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "family": self.family,
            "k": self.k,
            "n": self.n,
            "measured_max": self.measured_max,
            "allowed": self.allowed,
            "pass": self.pass,
        })
    }

    pub fn fields(&self) -> [String; 6] {
        [
            self.family.to_string(),
            self.k.to_string(),
            self.n.to_string(),
            self.measured_max.to_string(),
            self.allowed.to_string(),
            self.pass.to_string(),
        ]
    }
}

/// Builds the table for `family` on the graphs of order at most `caps.n`.
pub fn table(family: Family, graphs: &Truncation<Graph>, cfg: &RunConfig) -> Vec<Row> {
    let u = restrict(graphs, cfg.caps.n);
    match family {
        Family::Vc => {
            let f = |k: u64| 1u64 << (k + 1).min(62);
            let w = fpt_to_fptprime(&vc_exact(), &solution_size(), bound_fn(f), 1, 1);
            let budget = w.budget.expect("gated witnesses carry a budget").with_slack(cfg.slack);
            let samples = measure_family(&w.family, &pairs(&u, cfg.caps.param), cfg.caps.index);
            rows(family, &samples, |k, n| budget.allowed(f(k), n))
        }
        Family::Ds => {
            let j = cfg.caps.index.min(cfg.caps.param);
            let f = |c: u32, j: u64| j.saturating_pow((u64::from(c) * j * j).min(u64::from(u32::MAX)) as u32);
            let samples = measure_family(&ds_family(), &pairs(&u, j), j);
            let cal = calibrate(&samples, cfg.slack, 1..=3, |c, j, n| f(c, j).saturating_mul(n));
            rows(family, &samples, |j, n| cal.slack.saturating_mul(f(cal.exponent, j).saturating_mul(n)))
        }
        Family::Wl => {
            let k = cfg.caps.index.min(WL_MAX as u64);
            let members = wl_family().members(k);
            let runs: Vec<BudgetSample> = u
                .items()
                .par_iter()
                .flat_map_iter(|g| {
                    let x = GraphPair::new(g.clone(), g.clone());
                    let n = g.order() as u64;
                    members.iter().zip(1..).map(move |(m, index)| BudgetSample {
                        index,
                        len: n,
                        measured: m.run(&x).1.units(),
                    })
                })
                .collect();
            let pow = |c: u32, k: u64, n: u64| n.saturating_pow((u64::from(c) * k).min(u64::from(u32::MAX)) as u32);
            let cal = calibrate(&runs, cfg.slack, 1..=3, pow);
            rows(family, &runs, |k, n| cal.slack.saturating_mul(pow(cal.exponent, k, n)))
        }
    }
}

fn rows(family: Family, samples: &[BudgetSample], allowed: impl Fn(u64, u64) -> u64) -> Vec<Row> {
    let mut max: BTreeMap<(u64, u64), u64> = BTreeMap::new();
    for s in samples {
        let m = max.entry((s.index, s.len)).or_default();
        *m = (*m).max(s.measured);
    }
    max.into_iter()
        .map(|((k, n), measured_max)| {
            let allowed = allowed(k, n);
            Row {
                family: family.name(),
                k,
                n,
                measured_max,
                allowed,
                pass: measured_max <= allowed,
            }
        })
        .collect()
}
