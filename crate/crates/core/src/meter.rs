//! Step accounting and budget rules.
//!
//! One abstract cost unit is charged per basic operation (an adjacency-row
//! query, a set insertion, a symbol read). Meters are created per run and are
//! never shared between runs.

use std::fmt;
use std::sync::Arc;

/// Cost-unit counter for a single evaluation.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Meter {
    units: u64,
}

impl Meter {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn tick(&mut self) {
        self.units = self.units.saturating_add(1);
    }

    #[inline]
    pub fn charge(&mut self, units: u64) {
        self.units = self.units.saturating_add(units);
    }

    pub fn units(&self) -> u64 {
        self.units
    }
}

/// A computable bound function `f: ℕ → ℕ`.
pub type BoundFn = Arc<dyn Fn(u64) -> u64 + Send + Sync>;

pub fn bound_fn(f: impl Fn(u64) -> u64 + Send + Sync + 'static) -> BoundFn {
    Arc::new(f)
}

type RuleFn = dyn Fn(u64, u64) -> u64 + Send + Sync;

/// Resource rule `r(f(k), |x|)` together with a multiplicative slack.
///
/// Rules must be monotone in both arguments. All arithmetic saturates.
#[derive(Clone)]
pub struct StepBudget {
    label: String,
    rule: Arc<RuleFn>,
    slack: u64,
}

impl fmt::Debug for StepBudget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StepBudget")
            .field("label", &self.label)
            .field("slack", &self.slack)
            .finish()
    }
}

impl StepBudget {
    pub fn new(
        label: impl Into<String>,
        slack: u64,
        rule: impl Fn(u64, u64) -> u64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            label: label.into(),
            rule: Arc::new(rule),
            slack: slack.max(1),
        }
    }

    /// `(f, n) ↦ f · n^c`, the rule of `TIME(n^c)`.
    pub fn poly(c: u32, slack: u64) -> Self {
        Self::new(format!("f*n^{c}"), slack, move |f, n| {
            f.saturating_mul(n.saturating_pow(c))
        })
    }

    /// `(f, n) ↦ f · n`.
    pub fn linear(slack: u64) -> Self {
        Self::poly(1, slack)
    }

    /// `(f, n) ↦ n^f`, the rule of `XP`.
    pub fn xp(slack: u64) -> Self {
        Self::new("n^f", slack, |f, n| n.saturating_pow(f.min(u32::MAX as u64) as u32))
    }

    /// `(f, n) ↦ n^d + f · n^c`: selector evaluation followed by the solver.
    pub fn selector_then_poly(d: u32, c: u32, slack: u64) -> Self {
        Self::new(format!("n^{d}+f*n^{c}"), slack, move |f, n| {
            n.saturating_pow(d)
                .saturating_add(f.saturating_mul(n.saturating_pow(c)))
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn slack(&self) -> u64 {
        self.slack
    }

    pub fn with_slack(mut self, slack: u64) -> Self {
        self.slack = slack.max(1);
        self
    }

    /// Raw rule value without slack.
    pub fn rule(&self, f_value: u64, len: u64) -> u64 {
        (self.rule)(f_value, len)
    }

    /// `slack · r(f, n)`.
    pub fn allowed(&self, f_value: u64, len: u64) -> u64 {
        self.slack.saturating_mul(self.rule(f_value, len))
    }
}

/// One measured run: family index `k`, input length and cost units.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BudgetSample {
    pub index: u64,
    pub len: u64,
    pub measured: u64,
}

/// Length of the calibration prefix: 20% of the samples, rounded up.
pub fn calibration_prefix_len(total: usize) -> usize {
    total.div_ceil(5)
}

/// Result of fitting an exponent and slack on a calibration prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Calibration {
    pub exponent: u32,
    pub slack: u64,
    pub prefix_len: usize,
}

/// Fits `(c, slack)` on the enumeration-order prefix of `samples`.
///
/// For each candidate exponent the slack is the smallest integer `≥ floor`
/// covering every prefix sample; the exponent with the smallest slack wins,
/// ties going to the smaller exponent. `rule(c, k, len)` is the raw allowance
/// before slack.
pub fn calibrate(
    samples: &[BudgetSample],
    floor: u64,
    exponents: std::ops::RangeInclusive<u32>,
    rule: impl Fn(u32, u64, u64) -> u64,
) -> Calibration {
    let prefix_len = calibration_prefix_len(samples.len());
    let prefix = &samples[..prefix_len];
    let mut best: Option<Calibration> = None;
    for c in exponents {
        let mut slack = floor.max(1);
        for s in prefix {
            let raw = rule(c, s.index, s.len).max(1);
            slack = slack.max(s.measured.div_ceil(raw));
        }
        if best.is_none_or(|b| slack < b.slack) {
            best = Some(Calibration {
                exponent: c,
                slack,
                prefix_len,
            });
        }
    }
    best.unwrap_or(Calibration {
        exponent: 1,
        slack: floor.max(1),
        prefix_len,
    })
}
