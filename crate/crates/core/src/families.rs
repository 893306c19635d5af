//! Indexed algorithm families and uniform membership.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::kernel::{param_leq, Instance, Language, Parameter, Parameterization, Truncation};
use crate::meter::{BoundFn, BudgetSample, StepBudget};
use crate::promise::{yes_no, Solver};
use crate::report::{Cell, Table, VerificationReport, Witness};

type GeneratorFn<X> = dyn Fn(u64) -> Solver<X> + Send + Sync;

/// `(M_k)_{k ≥ 1}`: a computable index-to-solver mapping.
pub struct AlgorithmFamily<X> {
    name: Arc<str>,
    generator: Arc<GeneratorFn<X>>,
}

impl<X> Clone for AlgorithmFamily<X> {
    fn clone(&self) -> Self {
        Self {
            name: self.name.clone(),
            generator: self.generator.clone(),
        }
    }
}

impl<X> fmt::Debug for AlgorithmFamily<X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgorithmFamily({})", self.name)
    }
}

impl<X: Instance> AlgorithmFamily<X> {
    pub fn new(name: impl AsRef<str>, generator: impl Fn(u64) -> Solver<X> + Send + Sync + 'static) -> Self {
        Self {
            name: Arc::from(name.as_ref()),
            generator: Arc::new(generator),
        }
    }

    /// Every member is the same solver.
    pub fn constant(solver: Solver<X>) -> Self {
        Self::new(format!("const[{}]", solver.name()), move |_| solver.clone())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// `M_k`. Indices start at 1.
    pub fn member(&self, k: u64) -> Solver<X> {
        debug_assert!(k >= 1, "family indices start at 1");
        (self.generator)(k)
    }

    pub fn members(&self, cap: u64) -> Vec<Solver<X>> {
        (1..=cap).map(|k| self.member(k)).collect()
    }
}

/// A family with its selector and optional resource data.
#[derive(Clone)]
pub struct UniformWitness<X> {
    pub family: AlgorithmFamily<X>,
    pub selector: Parameter<X>,
    pub bound: Option<BoundFn>,
    /// Exponent `c` of a `f(k)·|x|^c` rule, when known.
    pub exponent: Option<u32>,
    pub budget: Option<StepBudget>,
}

impl<X> fmt::Debug for UniformWitness<X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("UniformWitness")
            .field("family", &self.family)
            .field("selector", &self.selector)
            .field("exponent", &self.exponent)
            .field("budget", &self.budget)
            .finish()
    }
}

impl<X: Instance> UniformWitness<X> {
    pub fn new(family: AlgorithmFamily<X>, selector: Parameter<X>) -> Self {
        Self {
            family,
            selector,
            bound: None,
            exponent: None,
            budget: None,
        }
    }

    pub fn with_bound(mut self, bound: BoundFn, exponent: u32) -> Self {
        self.bound = Some(bound);
        self.exponent = Some(exponent);
        self
    }

    pub fn with_budget(mut self, budget: StepBudget) -> Self {
        self.budget = Some(budget);
        self
    }
}

/// Truncation caps of a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest family index tried.
    pub index: u64,
    /// Largest parameter value tabulated.
    pub param: u64,
    /// Largest target slice searched for images.
    pub image: u64,
}

impl Caps {
    pub fn new(index: u64, param: u64, image: u64) -> Self {
        Self { index, param, image }
    }

    pub fn uniform(cap: u64) -> Self {
        Self::new(cap, cap, cap)
    }
}

/// Selector values on a truncation; `None` marks an unresolved instance.
#[derive(Debug, Clone)]
pub struct SelectorTable {
    pub cap: u64,
    pub values: Vec<Option<u64>>,
}

impl SelectorTable {
    /// Positions with no correct index `≤ cap`.
    pub fn unresolved(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&p| self.values[p].is_none()).collect()
    }

    /// Number of instances per selector value.
    pub fn histogram(&self) -> Table {
        let mut t = Table::new("selector", &["kappa", "count"]);
        for k in 1..=self.cap {
            let n = self.values.iter().filter(|v| **v == Some(k)).count();
            t.push(vec![Cell::from(k), Cell::from(n)]);
        }
        t.push(vec![
            Cell::from("unresolved"),
            Cell::from(self.values.iter().filter(|v| v.is_none()).count()),
        ]);
        t
    }
}

/// `κ(x) = min{ k ≤ cap : M_k(x) = L(x) }` on every item of `u`.
pub fn selector<X: Instance>(family: &AlgorithmFamily<X>, lang: &Language<X>, u: &Truncation<X>, cap: u64) -> SelectorTable {
    let members = family.members(cap);
    let values = u
        .items()
        .par_iter()
        .map(|x| {
            let truth = lang.contains(x);
            (1..=cap).find(|&k| members[k as usize - 1].decide(x) == truth)
        })
        .collect();
    SelectorTable { cap, values }
}

/// The minimal-index selector as a parameter; unresolved instances get
/// `cap + 1`.
pub fn lemma1_selector<X: Instance>(family: &AlgorithmFamily<X>, lang: &Language<X>, cap: u64) -> Parameter<X> {
    let members = family.members(cap);
    let lang = lang.clone();
    Parameter::new(format!("sel[{}]", family.name()), move |x, m| {
        let truth = lang.contains(x);
        for (k, solver) in (1..).zip(&members) {
            if solver.decide_with(x, m) == truth {
                return k;
            }
        }
        cap + 1
    })
}

/// `M_{i-1}(x) = L(x) ⟹ M_i(x) = L(x)` for all `x ∈ u`, `2 ≤ i ≤ cap`.
pub fn check_strong_monotone<X: Instance>(family: &AlgorithmFamily<X>, lang: &Language<X>, u: &Truncation<X>, cap: u64) -> VerificationReport {
    let mut r = VerificationReport::new(format!("strong-monotone:{}:{}", family.name(), lang.name()));
    let members = family.members(cap);
    let broken = u.items().par_iter().find_map_first(|x| {
        let truth = lang.contains(x);
        let mut prev = members.first()?.decide(x) == truth;
        for i in 2..=cap {
            let now = members[i as usize - 1].decide(x) == truth;
            if prev && !now {
                return Some((x.clone(), i));
            }
            prev = now;
        }
        None
    });
    if let Some((x, i)) = broken {
        r.fail(Witness::new(
            "not-monotone",
            x.encode(),
            format!("M_{} correct, M_{} wrong", i - 1, i),
        ));
    }
    r
}

/// `M′_k` accepts iff some `M_i`, `i ≤ k`, accepts. One unit of overhead is
/// charged per simulated member.
pub fn or_combine<X: Instance>(family: &AlgorithmFamily<X>) -> AlgorithmFamily<X> {
    let inner = family.clone();
    AlgorithmFamily::new(format!("or[{}]", family.name()), move |k| {
        let members = inner.members(k);
        Solver::new(format!("or[{}]_{k}", inner.name()), move |x, m| {
            for s in &members {
                m.tick();
                if s.decide_with(x, m) {
                    return true;
                }
            }
            false
        })
    })
}

/// No member answers yes on a non-member of `L`.
pub fn check_one_sided<X: Instance>(family: &AlgorithmFamily<X>, lang: &Language<X>, u: &Truncation<X>, cap: u64) -> VerificationReport {
    let mut r = VerificationReport::new(format!("one-sided:{}:{}", family.name(), lang.name()));
    let members = family.members(cap);
    let bad = u.items().par_iter().find_map_first(|x| {
        if lang.contains(x) {
            return None;
        }
        (1..=cap)
            .find(|&k| members[k as usize - 1].decide(x))
            .map(|k| (x.clone(), k))
    });
    if let Some((x, k)) = bad {
        r.fail(Witness::new("false-yes", x.encode(), format!("M_{k} accepts a non-member")));
    }
    r
}

/// Checks `𝕡 ⊆ 𝕂(κ)` and `L ∩ κ_i = L(M_i) ∩ κ_i` for `i ≤ caps.index`.
///
/// A growth trend in the first part makes the report inconclusive.
pub fn verify_uniform<X: Instance>(
    lang: &Language<X>,
    param: &Parameterization<X>,
    w: &UniformWitness<X>,
    u: &Truncation<X>,
    caps: Caps,
) -> VerificationReport {
    let mut r = VerificationReport::new(format!("uniform:{}:{}:{}", lang.name(), param.name(), w.family.name()));
    let leq = param_leq(&w.selector, param.representative(), u, caps.param);
    r.absorb(leq.to_report("selector-bound"));

    let kappa = w.selector.values(u);
    let truth: Vec<bool> = u.items().par_iter().map(|x| lang.contains(x)).collect();
    let mut t = Table::new("slices", &["i", "size"]);
    for i in 1..=caps.index {
        let solver = w.family.member(i);
        let members: Vec<usize> = (0..u.len()).filter(|&p| kappa[p] <= i).collect();
        t.push(vec![Cell::from(i), Cell::from(members.len())]);
        let miss = members
            .par_iter()
            .find_first(|&&p| solver.decide(&u.items()[p]) != truth[p])
            .copied();
        if let Some(p) = miss {
            r.fail(Witness::new(
                "slice-mismatch",
                u.items()[p].encode(),
                format!("i={i}, kappa={}, truth {}, M_{i} disagrees", kappa[p], yes_no(truth[p])),
            ));
        }
    }
    r.add_table(t);
    r
}

/// Every `(k, x)` run of `M_k`, `k ≤ cap`, ordered by `x` then `k`.
pub fn measure_family<X: Instance>(family: &AlgorithmFamily<X>, u: &Truncation<X>, cap: u64) -> Vec<BudgetSample> {
    let members = family.members(cap);
    u.items()
        .par_iter()
        .flat_map_iter(|x| {
            let len = x.encoded_len() as u64;
            members.iter().zip(1..).map(move |(s, k)| BudgetSample {
                index: k,
                len,
                measured: s.run(x).1.units(),
            })
        })
        .collect()
}

/// Checks `budget` against every `(k, x)` run, `k ≤ cap`, with `f` applied to
/// the index. Returns the first violation as a witness.
pub fn check_budget<X: Instance>(
    family: &AlgorithmFamily<X>,
    f: &BoundFn,
    budget: &StepBudget,
    u: &Truncation<X>,
    cap: u64,
) -> VerificationReport {
    let mut r = VerificationReport::new(format!("budget:{}:{}", family.name(), budget.label()));
    let samples = measure_family(family, u, cap);
    let mut t = Table::new("budget", &["k", "runs", "measured_max", "violations"]);
    for k in 1..=cap {
        let of_k = samples.iter().filter(|s| s.index == k);
        let (mut runs, mut worst, mut bad) = (0u64, 0u64, 0u64);
        for s in of_k {
            runs += 1;
            worst = worst.max(s.measured);
            if s.measured > budget.allowed(f(k), s.len) {
                bad += 1;
            }
        }
        t.push(vec![Cell::from(k), Cell::from(runs), Cell::from(worst), Cell::from(bad)]);
    }
    let first = samples
        .iter()
        .position(|s| s.measured > budget.allowed(f(s.index), s.len));
    if let Some(p) = first {
        let s = samples[p];
        let x = &u.items()[p / cap as usize];
        r.fail(Witness::new(
            "budget",
            x.encode(),
            format!(
                "k={}, measured {}, allowed {}",
                s.index,
                s.measured,
                budget.allowed(f(s.index), s.len)
            ),
        ));
    }
    r.add_table(t);
    r
}

/// [`verify_uniform`] plus `meter(M_k on x) ≤ slack · r(f(k), |x|)` for all
/// `k ≤ caps.index`, `x ∈ u`.
pub fn verify_strongly_uniform<X: Instance>(
    lang: &Language<X>,
    param: &Parameterization<X>,
    w: &UniformWitness<X>,
    budget: &StepBudget,
    u: &Truncation<X>,
    caps: Caps,
) -> VerificationReport {
    let mut r = verify_uniform(lang, param, w, u, caps);
    r.id = format!("strongly-{}", r.id);
    match &w.bound {
        Some(f) => r.absorb(check_budget(&w.family, f, budget, u, caps.index)),
        None => r.fail(Witness::new("missing-bound", w.family.name(), "witness carries no bound function")),
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{canonical_all, Nat, Naturals, Universe};
    use crate::meter::bound_fn;

    fn lookup_family() -> AlgorithmFamily<Nat> {
        AlgorithmFamily::new("lookup", |k| Solver::from_fn(format!("idx<={k}"), move |x: &Nat| x.0 < k))
    }

    #[test]
    fn lookup_family_selector_is_the_index() {
        let u = Naturals.truncation(10);
        let all = Language::everything("all");
        let t = selector(&lookup_family(), &all, &u, 10);
        let expect: Vec<_> = (1..=10).map(Some).collect();
        assert_eq!(t.values, expect);
        assert!(check_strong_monotone(&lookup_family(), &all, &u, 10).passed());
        let p = lemma1_selector(&lookup_family(), &all, 10);
        assert_eq!(p.eval(&Nat(3)), 4);
        assert_eq!(p.eval(&Nat(30)), 11);
    }

    #[test]
    fn alternating_family_is_not_monotone() {
        let u = Naturals.truncation(5);
        let alt = AlgorithmFamily::new("even", |k| Solver::from_fn("even", move |_: &Nat| k % 2 == 0));
        let r = check_strong_monotone(&alt, &Language::everything("all"), &u, 4);
        assert!(r.failed());
        assert!(r.witnesses[0].detail.contains("M_2 correct, M_3 wrong"));
    }

    #[test]
    fn or_combination_of_nested_family_is_unchanged() {
        let u = Naturals.truncation(12);
        let f = lookup_family();
        let g = or_combine(&f);
        for k in 1..=6 {
            for x in &u {
                assert_eq!(f.member(k).decide(x), g.member(k).decide(x));
            }
        }
    }

    #[test]
    fn zero_budget_fails_on_first_instance() {
        let u = Naturals.truncation(6);
        let all = Language::everything("all");
        let w = UniformWitness::new(lookup_family(), lemma1_selector(&lookup_family(), &all, 6))
            .with_bound(bound_fn(|k| k), 1);
        let zero = StepBudget::new("zero", 1, |_, _| 0);
        let p = canonical_all::<Nat>();
        let r = verify_strongly_uniform(&all, &p, &w, &zero, &u, Caps::uniform(6));
        assert!(r.failed());
        let b = r.witnesses_of("budget").next().unwrap();
        assert_eq!(b.instance, "0");
    }

    #[test]
    fn single_algorithm_embedding() {
        let u = Naturals.truncation(20);
        let lang = Language::brute_force("odd", |x: &Nat| x.0 % 2 == 1);
        let exact = Solver::from_language(&lang);
        let w = UniformWitness::new(AlgorithmFamily::constant(exact), Parameter::constant("one", 1));
        assert!(verify_uniform(&lang, &canonical_all(), &w, &u, Caps::uniform(3)).passed());
        let wrong = UniformWitness::new(
            AlgorithmFamily::constant(Solver::reject_all("no")),
            Parameter::constant("one", 1),
        );
        let r = verify_uniform(&lang, &canonical_all(), &wrong, &u, Caps::uniform(3));
        assert!(r.failed());
        assert_eq!(r.witnesses_of("slice-mismatch").next().unwrap().instance, "1");
    }
}
