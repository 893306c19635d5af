use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use super::{Instance, Truncation};
use crate::meter::Meter;

type EvalFn<X> = dyn Fn(&X, &mut Meter) -> u64 + Send + Sync;

/// A total, deterministic, metered function from instances to naturals.
pub struct Parameter<X> {
    name: Arc<str>,
    eval: Arc<EvalFn<X>>,
}

impl<X> Clone for Parameter<X> {
    fn clone(&self) -> Self {
        Self {
            name: self.name.clone(),
            eval: self.eval.clone(),
        }
    }
}

impl<X> fmt::Debug for Parameter<X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Parameter({})", self.name)
    }
}

impl<X: Instance> Parameter<X> {
    pub fn new(name: impl AsRef<str>, eval: impl Fn(&X, &mut Meter) -> u64 + Send + Sync + 'static) -> Self {
        Self {
            name: Arc::from(name.as_ref()),
            eval: Arc::new(eval),
        }
    }

    /// A parameter whose evaluation is not instrumented.
    pub fn unmetered(name: impl AsRef<str>, eval: impl Fn(&X) -> u64 + Send + Sync + 'static) -> Self {
        Self::new(name, move |x, _| eval(x))
    }

    pub fn constant(name: impl AsRef<str>, value: u64) -> Self {
        Self::new(name, move |_, m| {
            m.tick();
            value
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn eval(&self, x: &X) -> u64 {
        (self.eval)(x, &mut Meter::new())
    }

    /// Evaluates with a fresh meter and returns it.
    pub fn eval_metered(&self, x: &X) -> (u64, Meter) {
        let mut meter = Meter::new();
        let v = (self.eval)(x, &mut meter);
        (v, meter)
    }

    /// Evaluates while charging an outer meter.
    #[inline]
    pub fn eval_with(&self, x: &X, meter: &mut Meter) -> u64 {
        (self.eval)(x, meter)
    }

    /// Values on every item of `u`, in enumeration order.
    pub fn values(&self, u: &Truncation<X>) -> Vec<u64> {
        u.items().par_iter().map(|x| self.eval(x)).collect()
    }

    /// Post-composition `g ∘ κ`.
    pub fn map(&self, name: impl AsRef<str>, g: impl Fn(u64) -> u64 + Send + Sync + 'static) -> Self {
        let inner = self.eval.clone();
        Self::new(name, move |x, m| g(inner(x, m)))
    }

    pub fn renamed(&self, name: impl AsRef<str>) -> Self {
        Self {
            name: Arc::from(name.as_ref()),
            eval: self.eval.clone(),
        }
    }
}

/// Pointwise arithmetic used by [`combine`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineMode {
    Sum,
    Product,
    Max,
}

impl CombineMode {
    pub const ALL: [CombineMode; 3] = [CombineMode::Sum, CombineMode::Product, CombineMode::Max];

    pub fn apply(self, a: u64, b: u64) -> u64 {
        match self {
            CombineMode::Sum => a.saturating_add(b),
            CombineMode::Product => a.saturating_mul(b),
            CombineMode::Max => a.max(b),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CombineMode::Sum => "sum",
            CombineMode::Product => "product",
            CombineMode::Max => "max",
        }
    }
}

pub fn combine<X: Instance>(kappa: &Parameter<X>, tau: &Parameter<X>, mode: CombineMode) -> Parameter<X> {
    let (a, b) = (kappa.eval.clone(), tau.eval.clone());
    Parameter::new(
        format!("{}({},{})", mode.as_str(), kappa.name, tau.name),
        move |x, m| mode.apply(a(x, m), b(x, m)),
    )
}

/// `κ_c ∩ U` in enumeration order.
pub fn slice<X: Instance>(kappa: &Parameter<X>, c: u64, u: &Truncation<X>) -> Vec<X> {
    slice_positions(kappa, c, u)
        .into_iter()
        .map(|p| u.items()[p].clone())
        .collect()
}

/// Positions in `u` of the members of `κ_c`.
pub fn slice_positions<X: Instance>(kappa: &Parameter<X>, c: u64, u: &Truncation<X>) -> Vec<usize> {
    kappa
        .values(u)
        .into_iter()
        .enumerate()
        .filter(|&(_, v)| v <= c)
        .map(|(p, _)| p)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{Nat, Naturals, Universe};

    #[test]
    fn combination_arithmetic() {
        let three = Parameter::<Nat>::constant("three", 3);
        let two = Parameter::<Nat>::constant("two", 2);
        let x = Nat(7);
        assert_eq!(combine(&three, &two, CombineMode::Sum).eval(&x), 5);
        assert_eq!(combine(&three, &two, CombineMode::Product).eval(&x), 6);
        assert_eq!(combine(&three, &two, CombineMode::Max).eval(&x), 3);
    }

    #[test]
    fn slices_are_monotone_in_c() {
        let u = Naturals.truncation(40);
        let k = Parameter::unmetered("x mod 7 + 1", |x: &Nat| x.0 % 7 + 1);
        for c in 0..9 {
            let a = slice_positions(&k, c, &u);
            let b = slice_positions(&k, c + 1, &u);
            assert!(a.iter().all(|p| b.contains(p)));
        }
        assert_eq!(slice(&k, 1, &u).len(), 6);
    }

    #[test]
    fn constant_one_slice_is_everything() {
        let u = Naturals.truncation(25);
        let one = Parameter::constant("one", 1);
        assert_eq!(slice(&one, 1, &u), u.items());
    }

    #[test]
    fn metered_evaluation_is_per_run() {
        let k = Parameter::new("digits", |x: &Nat, m| {
            m.charge(x.encoded_len() as u64);
            1
        });
        let (_, m1) = k.eval_metered(&Nat(12345));
        let (_, m2) = k.eval_metered(&Nat(12345));
        assert_eq!(m1.units(), 5);
        assert_eq!(m1, m2);
    }
}
