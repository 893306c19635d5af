//! Verification reports.
//!
//! Field order of [`VerificationReport`] is the serialization order:
//! `id, status, witnesses, tables, millis`.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Inconclusive,
    Fail,
}

impl Status {
    /// Fail dominates inconclusive, which dominates pass.
    pub fn combine(self, other: Status) -> Status {
        self.max(other)
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Inconclusive => "inconclusive",
            Status::Fail => "fail",
        }
    }
}

/// A counterexample or piece of evidence attached to a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: String,
    pub instance: String,
    pub detail: String,
}

impl Witness {
    pub fn new(kind: impl Into<String>, instance: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            kind: kind.into(),
            instance: instance.into(),
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Int(u64),
    Bool(bool),
    Text(String),
}

impl std::fmt::Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Cell::Int(v) => write!(f, "{v}"),
            Cell::Bool(b) => write!(f, "{b}"),
            Cell::Text(s) => f.write_str(s),
        }
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u64)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

/// A measured table; rows are kept sorted by their first column.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: impl Into<String>, columns: &[&str]) -> Self {
        Self {
            name: name.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub tables: Vec<Table>,
    pub millis: u64,
}

impl VerificationReport {
    pub fn new(id: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            status: Status::Pass,
            witnesses: Vec::new(),
            tables: Vec::new(),
            millis: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    /// Records a failure with its witness.
    pub fn fail(&mut self, witness: Witness) {
        self.status = Status::Fail;
        self.witnesses.push(witness);
    }

    /// Records an inconclusive finding. Never downgrades a failure.
    pub fn inconclusive(&mut self, witness: Witness) {
        self.status = self.status.combine(Status::Inconclusive);
        self.witnesses.push(witness);
    }

    pub fn note(&mut self, witness: Witness) {
        self.witnesses.push(witness);
    }

    pub fn add_table(&mut self, table: Table) {
        self.tables.push(table);
    }

    /// Folds a sub-check into this report.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.status = self.status.combine(other.status);
        self.witnesses.extend(other.witnesses);
        self.tables.extend(other.tables);
    }

    pub fn table(&self, name: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.name == name)
    }

    pub fn witnesses_of(&self, kind: &str) -> impl Iterator<Item = &Witness> {
        let kind = kind.to_string();
        self.witnesses.iter().filter(move |w| w.kind == kind)
    }
}
