use std::sync::Arc;

use rayon::prelude::*;

use super::{combine, param_leq, slice_positions, CombineMode, Instance, Parameter, Truncation, Universe};
use crate::report::{Cell, Table, VerificationReport, Witness};

/// How a parameterization was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    CanonicalAll,
    CanonicalFin,
    Constructed(String),
}

/// `𝕂(κ)` for a representative parameter `κ`.
#[derive(Debug, Clone)]
pub struct Parameterization<X> {
    representative: Parameter<X>,
    provenance: Provenance,
}

impl<X: Instance> Parameterization<X> {
    pub fn new(representative: Parameter<X>) -> Self {
        let note = representative.name().to_string();
        Self {
            representative,
            provenance: Provenance::Constructed(note),
        }
    }

    pub fn with_provenance(representative: Parameter<X>, provenance: Provenance) -> Self {
        Self {
            representative,
            provenance,
        }
    }

    pub fn representative(&self) -> &Parameter<X> {
        &self.representative
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn name(&self) -> &str {
        self.representative.name()
    }

    /// Least slice index of the representative containing every member of a
    /// finite language (0 for the empty language).
    pub fn bound_of(&self, members: &[X]) -> u64 {
        bounding_slice(&self.representative, members)
    }
}

/// `max κ` over a finite language: the least `c` with `A ⊆ κ_c`.
pub fn bounding_slice<X: Instance>(kappa: &Parameter<X>, members: &[X]) -> u64 {
    members.iter().map(|x| kappa.eval(x)).max().unwrap_or(0)
}

/// `P ⊓ Q = P ∩ Q`, represented by `max(κ, τ)`.
pub fn meet<X: Instance>(p: &Parameterization<X>, q: &Parameterization<X>) -> Parameterization<X> {
    let rep = combine(&p.representative, &q.representative, CombineMode::Max);
    let note = format!("meet({},{})", p.name(), q.name());
    Parameterization::with_provenance(rep.renamed(&note), Provenance::Constructed(note))
}

/// `P ⊔ Q`, represented by `min(κ, τ)`.
pub fn join<X: Instance>(p: &Parameterization<X>, q: &Parameterization<X>) -> Parameterization<X> {
    let (a, b) = (p.representative.clone(), q.representative.clone());
    let note = format!("join({},{})", p.name(), q.name());
    let rep = Parameter::new(&note, move |x, m| a.eval_with(x, m).min(b.eval_with(x, m)));
    Parameterization::with_provenance(rep, Provenance::Constructed(note))
}

/// The top element: every language, represented by `κ ≡ 1`.
pub fn canonical_all<X: Instance>() -> Parameterization<X> {
    Parameterization::with_provenance(Parameter::constant("all", 1), Provenance::CanonicalAll)
}

/// The bottom element: finite languages, represented by the enumeration index.
///
/// Instances outside the universe get `u64::MAX`.
pub fn canonical_fin<X: Instance>(universe: Arc<dyn Universe<X>>) -> Parameterization<X> {
    let rep = Parameter::new("fin", move |x: &X, m| {
        m.charge(x.encoded_len() as u64);
        universe.index_of(x).map_or(u64::MAX, |i| i as u64)
    });
    Parameterization::with_provenance(rep, Provenance::CanonicalFin)
}

/// Instances that are pairs of instances of two universes.
pub trait Paired: Instance {
    type Left: Instance;
    type Right: Instance;

    fn split(&self) -> (Self::Left, Self::Right);
}

/// `P × Q` on the pair universe, represented by the max of the components.
pub fn product<X: Paired>(p: &Parameterization<X::Left>, q: &Parameterization<X::Right>) -> Parameterization<X> {
    let (a, b) = (p.representative.clone(), q.representative.clone());
    let note = format!("{}x{}", p.name(), q.name());
    let rep = Parameter::new(&note, move |x: &X, m| {
        let (l, r) = x.split();
        a.eval_with(&l, m).max(b.eval_with(&r, m))
    });
    Parameterization::with_provenance(rep, Provenance::Constructed(note))
}

/// Lattice laws over `u`, with equality read as mutual `≼`-boundedness up to
/// `cap`: idempotence, commutativity, absorption, slice monotonicity, and the
/// set view of meet (intersection) and join (pairwise unions) on every
/// sublanguage of `u` with at most `max_set` members.
pub fn check_lattice_laws<X: Instance>(
    ps: &[Parameterization<X>],
    u: &Truncation<X>,
    cap: u64,
    max_set: usize,
) -> VerificationReport {
    let mut r = VerificationReport::new("lattice-laws");
    let equiv = |a: &Parameterization<X>, b: &Parameterization<X>| {
        param_leq(a.representative(), b.representative(), u, cap).is_bounded()
            && param_leq(b.representative(), a.representative(), u, cap).is_bounded()
    };
    let mut counts = [0u64; 5];
    let broken = |r: &mut VerificationReport, law: &str, who: String| {
        r.fail(Witness::new(law, who, "sides are not mutually bounded"));
    };
    for p in ps {
        counts[0] += 1;
        if !(equiv(&meet(p, p), p) && equiv(&join(p, p), p)) {
            broken(&mut r, "idempotence", p.name().to_string());
        }
        counts[1] += 1;
        for c in 0..cap {
            let (lo, hi) = (slice_positions(&p.representative, c, u), slice_positions(&p.representative, c + 1, u));
            if let Some(&x) = lo.iter().find(|x| !hi.contains(x)) {
                let detail = format!("in slice {c} of {} but not in slice {}", p.name(), c + 1);
                r.fail(Witness::new("slice-monotonicity", u.items()[x].encode(), detail));
            }
        }
    }
    let values: Vec<Vec<u64>> = ps.iter().map(|p| p.representative.values(u)).collect();
    let sets = small_subsets(u.len(), max_set);
    for (i, p) in ps.iter().enumerate() {
        for (j, q) in ps.iter().enumerate() {
            let who = format!("{}, {}", p.name(), q.name());
            counts[2] += 1;
            if !(equiv(&meet(p, q), &meet(q, p)) && equiv(&join(p, q), &join(q, p))) {
                broken(&mut r, "commutativity", who.clone());
            }
            counts[3] += 1;
            if !(equiv(&meet(p, &join(p, q)), p) && equiv(&join(p, &meet(p, q)), p)) {
                broken(&mut r, "absorption", who.clone());
            }
            if j <= i {
                continue;
            }
            counts[4] += 1;
            let mv = meet(p, q).representative.values(u);
            let jv = join(p, q).representative.values(u);
            let (pv, qv) = (&values[i], &values[j]);
            let bad = sets.par_iter().find_map_first(|s| {
                (1..=cap).find(|&c| !set_view_holds(s, c, pv, qv, &mv, &jv)).map(|c| (s.clone(), c))
            });
            if let Some((s, c)) = bad {
                let members: Vec<String> = s.iter().map(|&x| u.items()[x].encode()).collect();
                r.fail(Witness::new("set-view", format!("{{{}}}", members.join(",")), format!("{who} at slice {c}")));
            }
        }
    }
    let mut t = Table::new("laws", &["law", "checked"]);
    for (law, n) in ["idempotence", "slice-monotonicity", "commutativity", "absorption", "set-view"].iter().zip(counts) {
        t.push(vec![Cell::from(*law), Cell::from(n)]);
    }
    r.add_table(t);
    r
}

fn small_subsets(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..max {
        let mut next = Vec::new();
        for s in &frontier {
            let from = s.last().map_or(0, |&l: &usize| l + 1);
            for x in from..n {
                let mut t: Vec<usize> = s.clone();
                t.push(x);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// `A ⊆ (P ⊓ Q)_c ⟺ A ⊆ P_c ∧ A ⊆ Q_c`, and `A ⊆ (P ⊔ Q)_c` iff `A` splits
/// into a part inside `P_c` and a part inside `Q_c`.
fn set_view_holds(s: &[usize], c: u64, pv: &[u64], qv: &[u64], mv: &[u64], jv: &[u64]) -> bool {
    let inside = |v: &[u64]| s.iter().all(|&x| v[x] <= c);
    let meet_ok = inside(mv) == (inside(pv) && inside(qv));
    let split = (0u32..1 << s.len()).any(|mask| {
        s.iter().enumerate().all(|(b, &x)| if mask >> b & 1 == 1 { pv[x] <= c } else { qv[x] <= c })
    });
    meet_ok && inside(jv) == split
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{param_leq, Nat, Naturals};

    #[test]
    fn fin_slice_is_an_index_prefix() {
        let fin = canonical_fin::<Nat>(Arc::new(Naturals));
        let lang = [Nat(0), Nat(4), Nat(2)];
        assert_eq!(fin.bound_of(&lang), 5);
        assert_eq!(fin.bound_of(&[]), 0);
    }

    #[test]
    fn top_and_bottom_are_neutral() {
        let u = Naturals.truncation(30);
        let p = Parameterization::new(Parameter::unmetered("x mod 4 + 1", |x: &Nat| x.0 % 4 + 1));
        let top = canonical_all::<Nat>();
        let bottom = canonical_fin::<Nat>(Arc::new(Naturals));
        let m = meet(&top, &p);
        let j = join(&bottom, &p);
        for q in [&m, &j] {
            assert!(param_leq(q.representative(), p.representative(), &u, 4).is_bounded());
            assert!(param_leq(p.representative(), q.representative(), &u, 4).is_bounded());
        }
    }

    #[test]
    fn laws_hold_on_residues() {
        let u = Naturals.truncation(12);
        let ps: Vec<_> = [2, 3]
            .map(|m| Parameterization::new(Parameter::unmetered(format!("x mod {m} + 1"), move |x: &Nat| x.0 % m + 1)))
            .into_iter()
            .chain([canonical_all()])
            .collect();
        let r = check_lattice_laws(&ps, &u, 4, 3);
        assert!(r.passed(), "{:?}", r.witnesses);
        assert_eq!(small_subsets(4, 2).len(), 1 + 4 + 6);
    }

    #[test]
    fn a_wrong_join_breaks_the_set_view() {
        let pv = [1, 3];
        let qv = [3, 1];
        // min would be [1, 1]; pretend the join were the max instead
        assert!(!set_view_holds(&[0, 1], 1, &pv, &qv, &[3, 3], &[3, 3]));
        assert!(set_view_holds(&[0, 1], 1, &pv, &qv, &[3, 3], &[1, 1]));
    }
}
