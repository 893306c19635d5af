//! Translations between the pair-based, function-based and promise-based
//! views of a parameterized problem.

use std::sync::Arc;

use crate::families::{AlgorithmFamily, UniformWitness};
use crate::kernel::{param_leq, Decode, Instance, Language, OracleTag, Parameter, Truncation, Word};
use crate::meter::{bound_fn, BoundFn, StepBudget};
use crate::promise::{PromiseReductionFn, Solver};
use crate::reductions::UniformReduction;
use crate::report::VerificationReport;

type PairFn<X> = dyn Fn(&X, u64) -> bool + Send + Sync;

/// A set of pairs `(x, k)`.
#[derive(Clone)]
pub struct DFProblem<X> {
    pub name: String,
    pairs: Arc<PairFn<X>>,
}

impl<X> std::fmt::Debug for DFProblem<X> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DFProblem({})", self.name)
    }
}

impl<X: Instance> DFProblem<X> {
    pub fn new(name: impl Into<String>, pairs: impl Fn(&X, u64) -> bool + Send + Sync + 'static) -> Self {
        Self {
            name: name.into(),
            pairs: Arc::new(pairs),
        }
    }

    pub fn contains(&self, x: &X, k: u64) -> bool {
        (self.pairs)(x, k)
    }
}

/// A language with a parameter.
#[derive(Debug, Clone)]
pub struct FGProblem<X> {
    pub language: Language<X>,
    pub kappa: Parameter<X>,
}

/// `x#1^k`.
pub fn pad<X: Instance>(x: &X, k: u64) -> Word {
    let mut s = x.encode();
    s.push('#');
    s.extend(std::iter::repeat_n('1', k as usize));
    Word(s)
}

/// Splits at the last `#`; the tail must be unary and the head decodable.
pub fn unpad<X: Decode>(w: &Word) -> Option<(X, u64)> {
    let (head, tail) = w.0.rsplit_once('#')?;
    if !tail.bytes().all(|b| b == b'1') {
        return None;
    }
    Some((X::decode(head)?, tail.len() as u64))
}

/// `L′ = { x#1^k : (x, k) ∈ D }` with `κ′` read from the padding; malformed
/// words are non-members with `κ′ = 1`.
pub fn df_to_fg<X: Decode>(d: &DFProblem<X>) -> FGProblem<Word> {
    let dd = d.clone();
    let language = Language::new(format!("pad[{}]", d.name), OracleTag::Constructed, move |w: &Word| {
        unpad::<X>(w).is_some_and(|(x, k)| dd.contains(&x, k))
    });
    let kappa = Parameter::new(format!("pad-k[{}]", d.name), |w: &Word, m| {
        m.charge(w.0.len() as u64);
        unpad::<X>(w).map_or(1, |(_, k)| k)
    });
    FGProblem { language, kappa }
}

/// `{ (x, k) : x ∈ L, k = κ(x) }`.
pub fn fg_to_df<X: Instance>(f: &FGProblem<X>) -> DFProblem<X> {
    let ff = f.clone();
    DFProblem::new(format!("pairs[{},{}]", f.language.name(), f.kappa.name()), move |x, k| {
        ff.language.contains(x) && ff.kappa.eval(x) == k
    })
}

/// Accepts iff one of the slice solvers `1..=c` accepts.
pub fn slice_union<X: Instance>(f: &FGProblem<X>, c: u64, slice_solvers: impl Fn(u64) -> Solver<X>) -> Solver<X> {
    let members: Vec<_> = (1..=c).map(slice_solvers).collect();
    Solver::new(format!("union[{},{}]_{c}", f.language.name(), f.kappa.name()), move |x, m| {
        members.iter().any(|s| {
            m.tick();
            s.decide_with(x, m)
        })
    })
}

/// The exact solver of the slice `{ x ∈ L : κ(x) = i }` as a plain language.
pub fn exact_slice_solver<X: Instance>(f: &FGProblem<X>, i: u64) -> Solver<X> {
    let ff = f.clone();
    Solver::new(format!("slice[{}]_{i}", f.language.name()), move |x, m| {
        ff.kappa.eval_with(x, m) == i && ff.language.contains(x)
    })
}

/// `M_i(x)`: run `M` if `κ(x) ≤ i`, reject otherwise. The budget rule is
/// `n^d + f · n^c` with slack 1.
pub fn fpt_to_fptprime<X: Instance>(m: &Solver<X>, kappa: &Parameter<X>, f: BoundFn, c: u32, d: u32) -> UniformWitness<X> {
    let (solver, sel) = (m.clone(), kappa.clone());
    let family = AlgorithmFamily::new(format!("gate[{}]", m.name()), move |i| {
        let (solver, sel) = (solver.clone(), sel.clone());
        Solver::new(format!("gate[{}]_{i}", solver.name()), move |x, meter| {
            sel.eval_with(x, meter) <= i && solver.decide_with(x, meter)
        })
    });
    UniformWitness::new(family, kappa.clone())
        .with_bound(f, c)
        .with_budget(StepBudget::selector_then_poly(d, c, 1))
}

pub(crate) fn type_label<X>() -> String {
    std::any::type_name::<X>().rsplit("::").next().unwrap_or("?").to_string()
}

/// `r_i(x)`: `M(x)` if `κ(x) ≤ i`, the default (empty) instance otherwise.
/// Budget `(f(k) + 1) · n^c`; the image of `κ_i` must lie in target slice
/// `g(i)`.
pub fn fptred_to_su<X: Instance, Y: Instance + Default>(
    m: &PromiseReductionFn<X, Y>,
    kappa: &Parameter<X>,
    f: BoundFn,
    g: BoundFn,
    c: u32,
) -> UniformReduction<X, Y> {
    let (red, sel) = (m.clone(), kappa.clone());
    UniformReduction::new(format!("gate[{}]", m.name()), type_label::<X>(), type_label::<Y>(), kappa.clone(), move |i| {
        let (red, sel) = (red.clone(), sel.clone());
        PromiseReductionFn::new(format!("gate[{}]_{i}", red.name()), move |x, meter| {
            if sel.eval_with(x, meter) <= i {
                red.apply_with(x, meter)
            } else {
                Y::default()
            }
        })
    })
    .with_budget(bound_fn(move |k| f(k).saturating_add(1)), c, 1)
    .with_image_bound(g)
}

/// `κ ≼ τ` and `τ ≼ κ`, both tables recorded. A trend in either direction is
/// inconclusive.
pub fn param_equiv<X: Instance>(kappa: &Parameter<X>, tau: &Parameter<X>, u: &Truncation<X>, cap: u64) -> VerificationReport {
    let mut r = VerificationReport::new(format!("equiv:{}:{}", kappa.name(), tau.name()));
    r.absorb(param_leq(kappa, tau, u, cap).to_report("forward"));
    r.absorb(param_leq(tau, kappa, u, cap).to_report("backward"));
    r
}
