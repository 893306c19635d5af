use super::{Instance, Parameter, Truncation};
use crate::report::{Cell, Table, VerificationReport, Witness};

/// One entry `f(i)` of a bound table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableEntry {
    Value(u64),
    /// No instance of the truncation has `τ ≤ i`.
    Vacuous,
}

/// `f(i) = max{ κ(x) : τ(x) ≤ i }` for `i = 1..=cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundTable {
    entries: Vec<TableEntry>,
}

impl BoundTable {
    pub fn cap(&self) -> u64 {
        self.entries.len() as u64
    }

    pub fn entries(&self) -> &[TableEntry] {
        &self.entries
    }

    /// `f(i)`, or `None` for a vacuous or out-of-range entry.
    pub fn value(&self, i: u64) -> Option<u64> {
        match self.entries.get(usize::try_from(i).ok()?.checked_sub(1)?) {
            Some(TableEntry::Value(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn is_vacuous(&self, i: u64) -> bool {
        matches!(
            i.checked_sub(1).and_then(|j| self.entries.get(j as usize)),
            Some(TableEntry::Vacuous)
        )
    }

    /// First `i` whose non-vacuous entry exceeds `bound(i)`.
    pub fn first_excess(&self, bound: impl Fn(u64) -> u64) -> Option<u64> {
        (1..=self.cap()).find(|&i| self.value(i).is_some_and(|v| v > bound(i)))
    }

    pub fn to_table(&self, name: impl Into<String>) -> Table {
        let mut t = Table::new(name, &["i", "f"]);
        for (j, e) in self.entries.iter().enumerate() {
            let f = match e {
                TableEntry::Value(v) => Cell::Int(*v),
                TableEntry::Vacuous => Cell::from("vacuous"),
            };
            t.push(vec![Cell::from(j + 1), f]);
        }
        t
    }
}

/// Outcome of a finite `≼` check. There is no negative verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeqVerdict {
    Bounded,
    /// Entries whose value kept increasing over the last stages.
    GrowthTrend { entries: Vec<u64> },
}

#[derive(Debug, Clone)]
pub struct LeqReport {
    pub left: String,
    pub right: String,
    pub table: BoundTable,
    pub verdict: LeqVerdict,
}

impl LeqReport {
    pub fn is_bounded(&self) -> bool {
        self.verdict == LeqVerdict::Bounded
    }

    /// `κ ≼ τ` as a report: pass when bounded, inconclusive on a trend.
    pub fn to_report(&self, id: impl Into<String>) -> VerificationReport {
        let mut r = VerificationReport::new(id);
        if let LeqVerdict::GrowthTrend { entries } = &self.verdict {
            r.inconclusive(Witness::new(
                "growth-trend",
                format!("{} vs {}", self.left, self.right),
                format!("entries {entries:?} increase with the truncation"),
            ));
        }
        r.add_table(self.table.to_table(format!("{}<={}", self.left, self.right)));
        r
    }
}

/// Computes the bound table of `κ` against `τ` on `u` up to `cap`.
///
/// Entry `i` is *reached* at a stage if some instance of that stage's prefix
/// has `τ ≥ i`. A growth trend is flagged for `i` when the entry is defined at
/// three or more reached stages and strictly increased over the last two.
pub fn param_leq<X: Instance>(kappa: &Parameter<X>, tau: &Parameter<X>, u: &Truncation<X>, cap: u64) -> LeqReport {
    let kv = kappa.values(u);
    let tv = tau.values(u);
    let (table, verdict) = param_leq_values(&kv, &tv, u.stage_ends(), cap);
    LeqReport {
        left: kappa.name().to_string(),
        right: tau.name().to_string(),
        table,
        verdict,
    }
}

/// [`param_leq`] on precomputed value vectors.
pub fn param_leq_values(kv: &[u64], tv: &[u64], stage_ends: &[usize], cap: u64) -> (BoundTable, LeqVerdict) {
    assert_eq!(kv.len(), tv.len());
    let cap_us = cap as usize;
    // history[s][i-1]: f(i) on the prefix of stage s, if reached and defined
    let mut history: Vec<Vec<Option<u64>>> = Vec::with_capacity(stage_ends.len());
    let mut best = vec![None::<u64>; cap_us + 1];
    let mut max_tau = 0u64;
    let mut start = 0;
    let mut last = vec![TableEntry::Vacuous; cap_us];
    for &end in stage_ends {
        for p in start..end.min(kv.len()) {
            max_tau = max_tau.max(tv[p]);
            // τ = 0 lies in every slice i ≥ 1
            let t = tv[p].max(1);
            if t <= cap {
                let slot = &mut best[t as usize];
                *slot = Some(slot.map_or(kv[p], |b| b.max(kv[p])));
            }
        }
        start = end;
        let mut running: Option<u64> = None;
        let mut row = Vec::with_capacity(cap_us);
        for i in 1..=cap_us {
            if let Some(b) = best[i] {
                running = Some(running.map_or(b, |r| r.max(b)));
            }
            last[i - 1] = running.map_or(TableEntry::Vacuous, TableEntry::Value);
            row.push(if max_tau >= i as u64 { running } else { None });
        }
        history.push(row);
    }
    let mut trending = Vec::new();
    for i in 0..cap_us {
        let seen: Vec<u64> = history.iter().filter_map(|row| row[i]).collect();
        if let [.., a, b, c] = seen[..] {
            if a < b && b < c {
                trending.push(i as u64 + 1);
            }
        }
    }
    let verdict = if trending.is_empty() {
        LeqVerdict::Bounded
    } else {
        LeqVerdict::GrowthTrend { entries: trending }
    };
    (BoundTable { entries: last }, verdict)
}
