//! Promise problems, solvers and promise reductions.
//!
//! Class membership is always relative to an explicit solver or a finite
//! solver catalog; nothing here searches a complexity class.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kernel::{Instance, Language, Parameterization, Truncation};
use crate::meter::Meter;
use crate::report::{Cell, Table, VerificationReport, Witness};

type DecideFn<X> = dyn Fn(&X, &mut Meter) -> bool + Send + Sync;

/// A deterministic, metered decision procedure.
pub struct Solver<X> {
    name: Arc<str>,
    decide: Arc<DecideFn<X>>,
}

impl<X> Clone for Solver<X> {
    fn clone(&self) -> Self {
        Self {
            name: self.name.clone(),
            decide: self.decide.clone(),
        }
    }
}

impl<X> fmt::Debug for Solver<X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Solver({})", self.name)
    }
}

impl<X: Instance> Solver<X> {
    pub fn new(name: impl AsRef<str>, decide: impl Fn(&X, &mut Meter) -> bool + Send + Sync + 'static) -> Self {
        Self {
            name: Arc::from(name.as_ref()),
            decide: Arc::new(decide),
        }
    }

    /// A solver that charges one unit per run.
    pub fn from_fn(name: impl AsRef<str>, decide: impl Fn(&X) -> bool + Send + Sync + 'static) -> Self {
        Self::new(name, move |x, m| {
            m.tick();
            decide(x)
        })
    }

    /// Decides a language exactly through its membership predicate.
    pub fn from_language(lang: &Language<X>) -> Self {
        let l = lang.clone();
        Self::from_fn(format!("oracle[{}]", lang.name()), move |x| l.contains(x))
    }

    /// Accepts exactly the listed instances.
    pub fn lookup(name: impl AsRef<str>, members: Vec<X>) -> Self {
        Self::new(name, move |x, m| {
            for y in &members {
                m.tick();
                if y == x {
                    return true;
                }
            }
            false
        })
    }

    pub fn reject_all(name: impl AsRef<str>) -> Self {
        Self::from_fn(name, |_| false)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(&self, name: impl AsRef<str>) -> Self {
        Self {
            name: Arc::from(name.as_ref()),
            decide: self.decide.clone(),
        }
    }

    #[inline]
    pub fn decide(&self, x: &X) -> bool {
        (self.decide)(x, &mut Meter::new())
    }

    /// Runs with a fresh meter.
    pub fn run(&self, x: &X) -> (bool, Meter) {
        let mut m = Meter::new();
        let v = (self.decide)(x, &mut m);
        (v, m)
    }

    #[inline]
    pub fn decide_with(&self, x: &X, meter: &mut Meter) -> bool {
        (self.decide)(x, meter)
    }
}

/// `(L, P)`: decide `L` on inputs from `P`.
#[derive(Debug, Clone)]
pub struct PromiseProblem<X> {
    pub language: Language<X>,
    pub promise: Language<X>,
    /// Well-formed instances of the universe; translations landing outside
    /// it are errors rather than failures.
    pub domain: Option<Language<X>>,
}

impl<X: Instance> PromiseProblem<X> {
    pub fn new(language: Language<X>, promise: Language<X>) -> Self {
        Self {
            language,
            promise,
            domain: None,
        }
    }

    /// `(L, Σ*)`.
    pub fn full(language: Language<X>) -> Self {
        Self::new(language, Language::everything("all"))
    }

    pub fn with_domain(mut self, domain: Language<X>) -> Self {
        self.domain = Some(domain);
        self
    }

    pub fn name(&self) -> String {
        format!("({},{})", self.language.name(), self.promise.name())
    }
}

type TranslateFn<X, Y> = dyn Fn(&X, &mut Meter) -> Y + Send + Sync;

/// A total, metered translation `r: X → Y`.
pub struct PromiseReductionFn<X, Y> {
    name: Arc<str>,
    translate: Arc<TranslateFn<X, Y>>,
}

impl<X, Y> Clone for PromiseReductionFn<X, Y> {
    fn clone(&self) -> Self {
        Self {
            name: self.name.clone(),
            translate: self.translate.clone(),
        }
    }
}

impl<X, Y> fmt::Debug for PromiseReductionFn<X, Y> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PromiseReductionFn({})", self.name)
    }
}

impl<X: Instance, Y: Instance> PromiseReductionFn<X, Y> {
    pub fn new(name: impl AsRef<str>, translate: impl Fn(&X, &mut Meter) -> Y + Send + Sync + 'static) -> Self {
        Self {
            name: Arc::from(name.as_ref()),
            translate: Arc::new(translate),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn apply(&self, x: &X) -> Y {
        (self.translate)(x, &mut Meter::new())
    }

    pub fn apply_metered(&self, x: &X) -> (Y, Meter) {
        let mut m = Meter::new();
        let y = (self.translate)(x, &mut m);
        (y, m)
    }

    #[inline]
    pub fn apply_with(&self, x: &X, meter: &mut Meter) -> Y {
        (self.translate)(x, meter)
    }

    /// `next ∘ self`.
    pub fn then<Z: Instance>(&self, next: &PromiseReductionFn<Y, Z>) -> PromiseReductionFn<X, Z> {
        let (a, b) = (self.translate.clone(), next.translate.clone());
        PromiseReductionFn::new(format!("{}.{}", next.name, self.name), move |x, m| {
            let y = a(x, m);
            b(&y, m)
        })
    }
}

impl<X: Instance> PromiseReductionFn<X, X> {
    pub fn identity() -> Self {
        Self::new("id", |x: &X, m| {
            m.tick();
            x.clone()
        })
    }
}

/// Checks `L ∩ P = L(S) ∩ P` on `u`; reports the first counterexample.
pub fn check_solves<X: Instance>(solver: &Solver<X>, problem: &PromiseProblem<X>, u: &Truncation<X>) -> VerificationReport {
    let mut r = VerificationReport::new(format!("solves:{}:{}", solver.name(), problem.name()));
    let outcome: Vec<Option<(bool, bool)>> = u
        .items()
        .par_iter()
        .map(|x| {
            problem
                .promise
                .contains(x)
                .then(|| (problem.language.contains(x), solver.decide(x)))
        })
        .collect();
    let checked = outcome.iter().flatten().count();
    if let Some((p, (truth, got))) = outcome
        .iter()
        .enumerate()
        .find_map(|(p, o)| o.filter(|(t, g)| t != g).map(|o| (p, o)))
    {
        r.fail(Witness::new(
            "mismatch",
            u.items()[p].encode(),
            format!("truth {}, solver answers {}", yes_no(truth), yes_no(got)),
        ));
    }
    let mut t = Table::new("coverage", &["truncation", "promise"]);
    t.push(vec![Cell::from(u.len()), Cell::from(checked)]);
    r.add_table(t);
    r
}

pub(crate) fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Checks that `r` is a promise reduction from `Π` to `Π′` on `u`.
///
/// Condition 1 is `x ∈ L ⟺ r(x) ∈ L′`, condition 2 is `r(x) ∈ P′`; both are
/// required for every `x ∈ P ∩ u`. A translation leaving the target domain is
/// an error.
pub fn check_promise_reduction<X: Instance, Y: Instance>(
    r: &PromiseReductionFn<X, Y>,
    source: &PromiseProblem<X>,
    target: &PromiseProblem<Y>,
    u: &Truncation<X>,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(format!("promise-reduction:{}:{}->{}", r.name(), source.name(), target.name()));
    let images: Vec<Option<Y>> = u
        .items()
        .par_iter()
        .map(|x| source.promise.contains(x).then(|| r.apply(x)))
        .collect();
    if let Some(domain) = &target.domain {
        if let Some(y) = images.iter().flatten().find(|y| !domain.contains(y)) {
            return Err(Error::OutOfUniverse {
                instance: y.encode(),
                universe: domain.name().to_string(),
            });
        }
    }
    let mut first = [None, None];
    for (x, y) in u.items().iter().zip(&images) {
        let Some(y) = y else { continue };
        if first[0].is_none() && source.language.contains(x) != target.language.contains(y) {
            first[0] = Some(Witness::new(
                "condition-1",
                x.encode(),
                format!(
                    "source {}, image {} is {}",
                    yes_no(source.language.contains(x)),
                    y.encode(),
                    yes_no(target.language.contains(y))
                ),
            ));
        }
        if first[1].is_none() && !target.promise.contains(y) {
            first[1] = Some(Witness::new("condition-2", x.encode(), format!("image {} outside the target promise", y.encode())));
        }
        if first.iter().all(Option::is_some) {
            break;
        }
    }
    for w in first.into_iter().flatten() {
        report.fail(w);
    }
    Ok(report)
}

/// Result of [`in_class_nonuniform`].
#[derive(Debug, Clone)]
pub struct NonUniformOutcome {
    pub report: VerificationReport,
    /// `assignment[i-1]`: catalog position covering slice `i`.
    pub assignment: Vec<Option<usize>>,
}

/// Finds, for each slice `κ_i` (`i ≤ cap`), a catalog solver agreeing with
/// `L` on `κ_i ∩ u`. Catalog entry `i` is tried first, then the catalog in
/// order.
pub fn in_class_nonuniform<X: Instance>(
    language: &Language<X>,
    param: &Parameterization<X>,
    catalog: &[Solver<X>],
    u: &Truncation<X>,
    cap: u64,
) -> NonUniformOutcome {
    let mut report = VerificationReport::new(format!("nonuniform:{}:{}", language.name(), param.name()));
    let values = param.representative().values(u);
    let truth: Vec<bool> = u.items().par_iter().map(|x| language.contains(x)).collect();
    let mut table = Table::new("assignment", &["slice", "solver"]);
    let mut assignment = Vec::new();
    for i in 1..=cap {
        let members: Vec<usize> = (0..u.len()).filter(|&p| values[p] <= i).collect();
        let diagonal = usize::try_from(i - 1).ok().filter(|&d| d < catalog.len());
        let order = diagonal.into_iter().chain((0..catalog.len()).filter(|&s| Some(s) != diagonal));
        let mut first_miss = None;
        let mut found = None;
        for s in order {
            let miss = members
                .par_iter()
                .find_first(|&&p| catalog[s].decide(&u.items()[p]) != truth[p])
                .copied();
            match miss {
                None => {
                    found = Some(s);
                    break;
                }
                Some(p) => {
                    first_miss.get_or_insert((s, p));
                }
            }
        }
        match found {
            Some(s) => table.push(vec![Cell::from(i), Cell::from(catalog[s].name())]),
            None => {
                table.push(vec![Cell::from(i), Cell::from("-")]);
                let (instance, detail) = match first_miss {
                    Some((s, p)) => (
                        u.items()[p].encode(),
                        format!("slice {i} uncovered; {} answers {} against truth {}", catalog[s].name(), yes_no(!truth[p]), yes_no(truth[p])),
                    ),
                    None => (String::new(), format!("slice {i} uncovered; empty catalog")),
                };
                report.fail(Witness::new("uncovered-slice", instance, detail));
            }
        }
        assignment.push(found);
    }
    report.add_table(table);
    NonUniformOutcome { report, assignment }
}
