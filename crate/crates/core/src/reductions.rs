//! Uniform and strongly uniform parameterized reductions.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::{AlgorithmFamily, Caps, UniformWitness};
use crate::kernel::{param_leq, Instance, Language, Parameter, Parameterization, Truncation};
use crate::meter::{bound_fn, BoundFn, StepBudget};
use crate::promise::{yes_no, PromiseReductionFn, Solver};
use crate::report::{Cell, Table, VerificationReport, Witness};

type ReductionGen<X, Y> = dyn Fn(u64) -> PromiseReductionFn<X, Y> + Send + Sync;

/// `((r_k)_k, κ)` from a source universe to a target universe.
pub struct UniformReduction<X, Y> {
    pub name: String,
    pub source: String,
    pub target: String,
    family: Arc<ReductionGen<X, Y>>,
    pub selector: Parameter<X>,
    pub bound: Option<BoundFn>,
    pub exponent: Option<u32>,
    /// Multiplicative slack for the `f(k)·|x|^c` budget.
    pub slack: u64,
    /// Promised target slice `g(i)` of the image of `κ_i`, checked when set.
    pub image_bound: Option<BoundFn>,
}

impl<X, Y> Clone for UniformReduction<X, Y> {
    fn clone(&self) -> Self {
        Self {
            name: self.name.clone(),
            source: self.source.clone(),
            target: self.target.clone(),
            family: self.family.clone(),
            selector: self.selector.clone(),
            bound: self.bound.clone(),
            exponent: self.exponent,
            slack: self.slack,
            image_bound: self.image_bound.clone(),
        }
    }
}

impl<X, Y> fmt::Debug for UniformReduction<X, Y> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniformReduction({}: {} -> {})", self.name, self.source, self.target)
    }
}

impl<X: Instance, Y: Instance> UniformReduction<X, Y> {
    pub fn new(
        name: impl Into<String>,
        source: impl Into<String>,
        target: impl Into<String>,
        selector: Parameter<X>,
        family: impl Fn(u64) -> PromiseReductionFn<X, Y> + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            source: source.into(),
            target: target.into(),
            family: Arc::new(family),
            selector,
            bound: None,
            exponent: None,
            slack: 1,
            image_bound: None,
        }
    }

    /// Uses the same translation at every index.
    pub fn constant(
        name: impl Into<String>,
        source: impl Into<String>,
        target: impl Into<String>,
        selector: Parameter<X>,
        r: PromiseReductionFn<X, Y>,
    ) -> Self {
        Self::new(name, source, target, selector, move |_| r.clone())
    }

    pub fn with_budget(mut self, bound: BoundFn, exponent: u32, slack: u64) -> Self {
        self.bound = Some(bound);
        self.exponent = Some(exponent);
        self.slack = slack.max(1);
        self
    }

    pub fn with_image_bound(mut self, g: BoundFn) -> Self {
        self.image_bound = Some(g);
        self
    }

    /// `r_k`. Indices start at 1.
    pub fn member(&self, k: u64) -> PromiseReductionFn<X, Y> {
        (self.family)(k.max(1))
    }

    /// `r_{κ(x)}(x)`.
    pub fn guaranteed_image(&self, x: &X) -> Y {
        self.member(self.selector.eval(x)).apply(x)
    }

    /// The rule `slack · f(k) · n^c`, if a bound is attached.
    pub fn budget(&self) -> Option<StepBudget> {
        self.exponent.map(|c| StepBudget::poly(c, self.slack))
    }
}

/// A source or target side: a language with its parameterization.
pub struct Side<'a, X> {
    pub language: &'a Language<X>,
    pub param: &'a Parameterization<X>,
}

impl<'a, X> Side<'a, X> {
    pub fn new(language: &'a Language<X>, param: &'a Parameterization<X>) -> Self {
        Self { language, param }
    }
}

/// Checks the three conditions of a uniform reduction on `u`.
///
/// 1. `𝕡 ⊆ 𝕂(κ)` as a bounded table (a trend is inconclusive);
/// 2. for `x ∈ κ_i`: `x ∈ L ⟺ r_i(x) ∈ L′`, and `r_i(κ_i ∩ u)` lies in the
///    target slice `j ≤ caps.image`, recorded as `i ↦ max(i, j)`;
/// 3. coherence: `r_{κ(x)}(x) = r_i(x)` whenever `κ(x) ≤ i`.
///
/// With an image bound attached, `j ≤ g(i)` is required as well.
pub fn verify_uniform_reduction<X: Instance, Y: Instance>(
    r: &UniformReduction<X, Y>,
    src: Side<'_, X>,
    tgt: Side<'_, Y>,
    u: &Truncation<X>,
    caps: Caps,
) -> VerificationReport {
    let mut rep = VerificationReport::new(format!("uniform-reduction:{}", r.name));
    rep.absorb(param_leq(&r.selector, src.param.representative(), u, caps.param).to_report("selector-bound"));

    let cap = caps.index;
    let members: Vec<_> = (1..=cap).map(|k| r.member(k)).collect();
    let tgt_rep = tgt.param.representative();
    struct Row<Y> {
        kappa: u64,
        truth: bool,
        // (image, target membership, target parameter) for i = κ..=cap
        images: Vec<(Y, bool, u64)>,
    }
    let rows: Vec<Row<Y>> = u
        .items()
        .par_iter()
        .map(|x| {
            let kappa = r.selector.eval(x);
            let images = (kappa.max(1)..=cap)
                .map(|i| {
                    let y = members[i as usize - 1].apply(x);
                    let (m, v) = (tgt.language.contains(&y), tgt_rep.eval(&y));
                    (y, m, v)
                })
                .collect();
            Row {
                kappa,
                truth: src.language.contains(x),
                images,
            }
        })
        .collect();

    let mut g = Table::new("image-slices", &["i", "found", "j"]);
    let (mut c2, mut c2img, mut c3) = (None, None, None);
    for i in 1..=cap {
        let mut found = 0u64;
        for (p, row) in rows.iter().enumerate() {
            if row.kappa > i {
                continue;
            }
            let off = (i - row.kappa.max(1)) as usize;
            let (y, member, v) = &row.images[off];
            found = found.max(*v);
            if c2.is_none() && *member != row.truth {
                c2 = Some(Witness::new(
                    "condition-2",
                    u.items()[p].encode(),
                    format!("i={i}: source {}, image {} is {}", yes_no(row.truth), y.encode(), yes_no(*member)),
                ));
            }
            if c3.is_none() && *y != row.images[0].0 {
                c3 = Some(Witness::new(
                    "condition-3",
                    u.items()[p].encode(),
                    format!("r_{}(x) = {} but r_{i}(x) = {}", row.kappa.max(1), row.images[0].0.encode(), y.encode()),
                ));
            }
        }
        if found > caps.image && c2img.is_none() {
            c2img = Some(Witness::new(
                "condition-2-image",
                format!("slice {i}"),
                format!("image needs target slice {found} > image cap {}", caps.image),
            ));
        }
        if let Some(gb) = &r.image_bound {
            if found > gb(i) && c2img.is_none() {
                c2img = Some(Witness::new(
                    "condition-2-image",
                    format!("slice {i}"),
                    format!("image needs target slice {found} > g({i}) = {}", gb(i)),
                ));
            }
        }
        g.push(vec![Cell::from(i), Cell::from(found), Cell::from(found.max(i))]);
    }
    for w in [c2, c2img, c3].into_iter().flatten() {
        rep.fail(w);
    }
    rep.add_table(g);
    rep
}

/// The `f(k) · |x|^c` budget on every `r_k`, `k ≤ caps.index`, after the
/// three conditions.
pub fn verify_su_reduction<X: Instance, Y: Instance>(
    r: &UniformReduction<X, Y>,
    src: Side<'_, X>,
    tgt: Side<'_, Y>,
    u: &Truncation<X>,
    caps: Caps,
) -> VerificationReport {
    let mut rep = verify_uniform_reduction(r, src, tgt, u, caps);
    rep.id = format!("strongly-{}", rep.id);
    let (Some(f), Some(budget)) = (&r.bound, r.budget()) else {
        rep.fail(Witness::new("missing-bound", r.name.clone(), "reduction carries no bound"));
        return rep;
    };
    let members: Vec<_> = (1..=caps.index).map(|k| r.member(k)).collect();
    let violation = u.items().par_iter().find_map_first(|x| {
        let len = x.encoded_len() as u64;
        members.iter().zip(1u64..).find_map(|(m, k)| {
            let units = m.apply_metered(x).1.units();
            let allowed = budget.allowed(f(k), len);
            (units > allowed).then(|| (x.clone(), k, units, allowed))
        })
    });
    if let Some((x, k, units, allowed)) = violation {
        rep.fail(Witness::new("budget", x.encode(), format!("k={k}, measured {units}, allowed {allowed}")));
    }
    rep
}

/// `κ″(x) = max{ κ(x), κ′(r_{κ(x)}(x)) }`.
fn composite_selector<X: Instance, Y: Instance>(r1: &UniformReduction<X, Y>, kappa2: &Parameter<Y>, name: String) -> Parameter<X> {
    let r1 = r1.clone();
    let kappa2 = kappa2.clone();
    Parameter::new(name, move |x, m| {
        let k = r1.selector.eval_with(x, m);
        let y = r1.member(k).apply_with(x, m);
        k.max(kappa2.eval_with(&y, m))
    })
}

/// `r″_i = r′_i ∘ r_i` with selector `max{ κ(x), κ′(r_{κ(x)}(x)) }`.
pub fn compose<X: Instance, Y: Instance, Z: Instance>(
    r1: &UniformReduction<X, Y>,
    r2: &UniformReduction<Y, Z>,
) -> Result<UniformReduction<X, Z>> {
    if r1.target != r2.source {
        return Err(Error::UniverseMismatch {
            left: r1.target.clone(),
            right: r2.source.clone(),
        });
    }
    let name = format!("{}.{}", r2.name, r1.name);
    let selector = composite_selector(r1, &r2.selector, format!("sel[{name}]"));
    let (a, b) = (r1.clone(), r2.clone());
    Ok(UniformReduction::new(name, r1.source.clone(), r2.target.clone(), selector, move |i| {
        a.member(i).then(&b.member(i))
    }))
}

/// `M*_k(x) = M′_k(r_k(x))` with selector `max{ κ(x), κ′(r_{κ(x)}(x)) }`.
///
/// One unit of overhead is charged per run. When both parts carry bounds the
/// result carries `f · f′` with exponent `c + d`.
pub fn pullback_solver<X: Instance, Y: Instance>(r: &UniformReduction<X, Y>, w: &UniformWitness<Y>) -> UniformWitness<X> {
    let name = format!("{}*{}", w.family.name(), r.name);
    let (red, fam) = (r.clone(), w.family.clone());
    let family = AlgorithmFamily::new(&name, move |k| {
        let (rk, mk) = (red.member(k), fam.member(k));
        Solver::new(format!("{}*{}_{k}", fam.name(), red.name), move |x, m| {
            let y = rk.apply_with(x, m);
            m.tick();
            mk.decide_with(&y, m)
        })
    });
    let mut out = UniformWitness::new(family, composite_selector(r, &w.selector, format!("sel[{name}]")));
    if let (Some(f), Some(c), Some(g), Some(d)) = (&r.bound, r.exponent, &w.bound, w.exponent) {
        let (f, g) = (f.clone(), g.clone());
        out = out.with_bound(bound_fn(move |k| f(k).saturating_mul(g(k))), c + d);
        let slack = r.slack + w.budget.as_ref().map_or(1, StepBudget::slack) + 1;
        out = out.with_budget(StepBudget::poly(c + d, slack));
    }
    out
}

/// Small synthetic reductions for property trials.
pub mod toy {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::kernel::{Nat, Word};

    /// A language with a parameterization on the naturals.
    #[derive(Debug, Clone)]
    pub struct ToyProblem {
        pub language: Language<Nat>,
        pub param: Parameterization<Nat>,
    }

    /// Three problems `A, B, C` with reductions `A → B → C`.
    #[derive(Debug, Clone)]
    pub struct ToyChain {
        pub seed: u64,
        pub problems: [ToyProblem; 3],
        pub first: UniformReduction<Nat, Nat>,
        pub second: UniformReduction<Nat, Nat>,
    }

    fn periodic(table: Vec<u64>) -> impl Fn(&Nat) -> u64 + Send + Sync + 'static {
        move |x| table[(x.0 % table.len() as u64) as usize]
    }

    fn problem(rng: &mut ChaCha8Rng, label: &str, period: u64) -> ToyProblem {
        let mut bits: Vec<bool> = (0..period).map(|_| rng.gen_bool(0.5)).collect();
        // both answers must occur so that reductions exist
        bits[0] = true;
        bits[1] = false;
        let values: Vec<u64> = (0..period).map(|_| rng.gen_range(1..=3)).collect();
        let b = bits.clone();
        ToyProblem {
            language: Language::brute_force(format!("L{label}"), move |x: &Nat| b[(x.0 % period) as usize]),
            param: Parameterization::new(Parameter::unmetered(format!("p{label}"), periodic(values))),
        }
    }

    fn reduction(
        rng: &mut ChaCha8Rng,
        name: &str,
        (src, tgt): (&ToyProblem, &ToyProblem),
        (src_label, tgt_label): (&str, &str),
        period: u64,
    ) -> UniformReduction<Nat, Nat> {
        // residues of the target on each side of the language
        let yes: Vec<u64> = (0..period).filter(|&t| tgt.language.contains(&Nat(t))).collect();
        let no: Vec<u64> = (0..period).filter(|&t| !tgt.language.contains(&Nat(t))).collect();
        let choice: Vec<u64> = (0..period)
            .map(|t| {
                let pool = if src.language.contains(&Nat(t)) { &yes } else { &no };
                pool[rng.gen_range(0..pool.len())]
            })
            .collect();
        let kappa: Vec<u64> = (0..period).map(|_| rng.gen_range(1..=3)).collect();
        let junk: u64 = rng.gen_range(1..1000);
        let selector = Parameter::unmetered(format!("k[{name}]"), periodic(kappa));
        let sel = selector.clone();
        let label = name.to_string();
        UniformReduction::new(name, src_label, tgt_label, selector, move |i| {
            let (choice, sel, name) = (choice.clone(), sel.clone(), &label);
            PromiseReductionFn::new(format!("{name}_{i}"), move |x: &Nat, m| {
                m.tick();
                if sel.eval(x) <= i {
                    Nat(choice[(x.0 % period) as usize] + period * (x.0 / period))
                } else {
                    Nat(junk * i + x.0)
                }
            })
        })
    }

    /// A seeded chain of periodic toy problems; both reductions are correct
    /// by construction.
    pub fn random_chain(seed: u64) -> ToyChain {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let period = rng.gen_range(3..=8);
        let problems = [problem(&mut rng, "a", period), problem(&mut rng, "b", period), problem(&mut rng, "c", period)];
        let first = reduction(&mut rng, &format!("r{seed}"), (&problems[0], &problems[1]), ("A", "B"), period);
        let second = reduction(&mut rng, &format!("s{seed}"), (&problems[1], &problems[2]), ("B", "C"), period);
        ToyChain {
            seed,
            problems,
            first,
            second,
        }
    }

    /// `max(1, #a)`, reading every symbol.
    pub fn a_count() -> Parameter<Word> {
        Parameter::new("max(1,#a)", |x: &Word, m| {
            m.charge(x.0.len() as u64);
            (x.0.bytes().filter(|&b| b == b'a').count() as u64).max(1)
        })
    }

    pub fn contains_a() -> Language<Word> {
        Language::brute_force("contains-a", |x: &Word| x.0.contains('a'))
    }

    /// `r_k(x) = x^{min(k, κ(x))}` with `κ = max(1, #a)`; bound `f(k) = k`,
    /// exponent 1, slack 2.
    pub fn padded() -> UniformReduction<Word, Word> {
        let kappa = a_count();
        let sel = kappa.clone();
        UniformReduction::new("pad", "{a,b}*", "{a,b}*", kappa, move |k| {
            let sel = sel.clone();
            PromiseReductionFn::new(format!("pad_{k}"), move |x: &Word, m| {
                let copies = sel.eval_with(x, m).min(k);
                m.charge(copies * x.0.len() as u64);
                Word(x.0.repeat(copies as usize))
            })
        })
        .with_budget(bound_fn(|k| k), 1, 2)
    }
}
