use std::sync::Arc;

use super::{Decode, Instance};

/// A finite, enumeration-ordered subset of a universe.
///
/// Items are partitioned into nested stages (prefixes). For graph universes
/// a stage is one vertex count; growth-trend detection compares stages.
#[derive(Debug, Clone)]
pub struct Truncation<X> {
    name: String,
    items: Vec<X>,
    stage_ends: Vec<usize>,
}

impl<X: Clone> Truncation<X> {
    /// A truncation with a single stage.
    pub fn new(name: impl Into<String>, items: Vec<X>) -> Self {
        let len = items.len();
        Self {
            name: name.into(),
            items,
            stage_ends: vec![len],
        }
    }

    /// Items with explicit stage boundaries. Boundaries are sorted, deduplicated
    /// and completed with `items.len()`.
    pub fn staged(name: impl Into<String>, items: Vec<X>, mut stage_ends: Vec<usize>) -> Self {
        let len = items.len();
        stage_ends.retain(|&e| e > 0 && e <= len);
        stage_ends.push(len);
        stage_ends.sort_unstable();
        stage_ends.dedup();
        Self {
            name: name.into(),
            items,
            stage_ends,
        }
    }

    /// Concatenates layers, one stage per non-empty layer.
    pub fn from_layers(name: impl Into<String>, layers: Vec<Vec<X>>) -> Self {
        let mut items = Vec::new();
        let mut ends = Vec::new();
        for layer in layers {
            if layer.is_empty() {
                continue;
            }
            items.extend(layer);
            ends.push(items.len());
        }
        Self::staged(name, items, ends)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn items(&self) -> &[X] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, X> {
        self.items.iter()
    }

    pub fn stage_ends(&self) -> &[usize] {
        &self.stage_ends
    }

    /// Items of the first `stage + 1` stages.
    pub fn prefix(&self, stage: usize) -> &[X] {
        &self.items[..self.stage_ends[stage]]
    }

    /// Sub-truncation keeping enumeration order and the stage structure.
    pub fn filter(&self, mut keep: impl FnMut(&X) -> bool) -> Self {
        let mut items = Vec::new();
        let mut ends = Vec::new();
        let mut start = 0;
        for &end in &self.stage_ends {
            items.extend(self.items[start..end].iter().filter(|x| keep(x)).cloned());
            ends.push(items.len());
            start = end;
        }
        Self::staged(self.name.clone(), items, ends)
    }

    /// Splits into the first `n` items and the rest.
    pub fn split_at(&self, n: usize) -> (Self, Self) {
        let n = n.min(self.len());
        let head_ends = self.stage_ends.iter().map(|&e| e.min(n)).collect();
        let tail_ends = self
            .stage_ends
            .iter()
            .filter(|&&e| e > n)
            .map(|&e| e - n)
            .collect();
        (
            Self::staged(format!("{}[..{n}]", self.name), self.items[..n].to_vec(), head_ends),
            Self::staged(format!("{}[{n}..]", self.name), self.items[n..].to_vec(), tail_ends),
        )
    }
}

impl<'a, X> IntoIterator for &'a Truncation<X> {
    type Item = &'a X;
    type IntoIter = std::slice::Iter<'a, X>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

/// A countable universe with an injective enumeration starting at index 1.
pub trait Universe<X: Instance>: Send + Sync {
    fn name(&self) -> String;

    /// The instance with enumeration index `index` (1-based).
    fn nth(&self, index: usize) -> Option<X>;

    fn index_of(&self, x: &X) -> Option<usize>;

    /// All instances with index `≤ cap`, staged at the quarter points.
    fn truncation(&self, cap: usize) -> Truncation<X> {
        let items: Vec<X> = (1..=cap).map_while(|i| self.nth(i)).collect();
        let len = items.len();
        let ends = (1..=4).map(|q| (len * q).div_ceil(4)).collect();
        Truncation::staged(format!("{}[..={cap}]", self.name()), items, ends)
    }
}

/// A natural number as an instance (decimal encoding).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Nat(pub u64);

impl Instance for Nat {
    fn encode(&self) -> String {
        self.0.to_string()
    }
}

impl Decode for Nat {
    fn decode(word: &str) -> Option<Self> {
        if word.is_empty() || !word.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        if word.len() > 1 && word.starts_with('0') {
            return None;
        }
        word.parse().ok().map(Nat)
    }
}

/// `ℕ = {0, 1, 2, …}` enumerated as `k ↦ k + 1`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Naturals;

impl Universe<Nat> for Naturals {
    fn name(&self) -> String {
        "N".into()
    }

    fn nth(&self, index: usize) -> Option<Nat> {
        index.checked_sub(1).map(|k| Nat(k as u64))
    }

    fn index_of(&self, x: &Nat) -> Option<usize> {
        usize::try_from(x.0).ok()?.checked_add(1)
    }
}

/// A raw word over some alphabet.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub String);

impl Word {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word(s.to_string())
    }
}

impl Instance for Word {
    fn encode(&self) -> String {
        self.0.clone()
    }
}

impl Decode for Word {
    fn decode(word: &str) -> Option<Self> {
        Some(Word(word.to_string()))
    }
}

/// `Σ*` in shortlex order; index 1 is the empty word.
#[derive(Debug, Clone)]
pub struct Words {
    alphabet: Arc<[char]>,
}

impl Words {
    pub fn new(alphabet: &[char]) -> Self {
        assert!(!alphabet.is_empty(), "alphabet must be non-empty");
        Self {
            alphabet: Arc::from(alphabet),
        }
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    /// All words of length `≤ max_len`, one stage per length.
    pub fn up_to_length(&self, max_len: usize) -> Truncation<Word> {
        let b = self.alphabet.len();
        let mut layers: Vec<Vec<Word>> = vec![vec![Word::default()]];
        for len in 1..=max_len {
            let prev = &layers[len - 1];
            let mut next = Vec::with_capacity(prev.len() * b);
            for w in prev {
                for &c in self.alphabet.iter() {
                    let mut s = w.0.clone();
                    s.push(c);
                    next.push(Word(s));
                }
            }
            layers.push(next);
        }
        Truncation::from_layers(format!("words<={max_len}"), layers)
    }
}

impl Universe<Word> for Words {
    fn name(&self) -> String {
        format!("{{{}}}*", self.alphabet.iter().collect::<String>())
    }

    fn nth(&self, index: usize) -> Option<Word> {
        // bijective base-b numeration of index - 1
        let mut m = index.checked_sub(1)?;
        let b = self.alphabet.len();
        let mut out = Vec::new();
        while m > 0 {
            m -= 1;
            out.push(self.alphabet[m % b]);
            m /= b;
        }
        out.reverse();
        Some(Word(out.into_iter().collect()))
    }

    fn index_of(&self, x: &Word) -> Option<usize> {
        let b = self.alphabet.len();
        let mut m: usize = 0;
        for c in x.0.chars() {
            let d = self.alphabet.iter().position(|&a| a == c)?;
            m = m.checked_mul(b)?.checked_add(d + 1)?;
        }
        m.checked_add(1)
    }
}
