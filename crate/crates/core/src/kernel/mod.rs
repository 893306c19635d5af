//! Core semantic objects: instances, universes and their truncations,
//! languages, parameters, slices, the `≼` preorder on parameters and the
//! lattice of parameterizations.
//!
//! A parameterization is always carried by one representative [`Parameter`]:
//! it denotes the set of languages bounded by that parameter. Everything the
//! kernel checks is therefore a statement about parameter values over a finite
//! [`Truncation`].

mod lattice;
mod order;
mod parameter;
mod universe;

use std::fmt;
use std::sync::Arc;

pub use lattice::{
    bounding_slice, canonical_all, check_lattice_laws, canonical_fin, join, meet, product, Paired, Parameterization,
    Provenance,
};
pub use order::{param_leq, param_leq_values, BoundTable, LeqReport, LeqVerdict, TableEntry};
pub use parameter::{combine, slice, slice_positions, CombineMode, Parameter};
pub use universe::{Nat, Naturals, Truncation, Universe, Word, Words};

/// An element of a universe, with its word encoding.
pub trait Instance: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    /// Encoding as a word over the universe's alphabet.
    fn encode(&self) -> String;

    /// `|x|`: number of symbols in the encoding.
    fn encoded_len(&self) -> usize {
        self.encode().chars().count()
    }
}

/// Instances that can be recovered from their encoding.
pub trait Decode: Instance {
    fn decode(word: &str) -> Option<Self>;
}

/// Where a membership predicate comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleTag {
    /// Exhaustive reference implementation.
    BruteForce,
    /// Fast implementation checked against a brute-force oracle.
    Fast,
    /// Assembled from other objects (complements, translations, tables).
    Constructed,
}

type MemberFn<X> = dyn Fn(&X) -> bool + Send + Sync;

/// A total decision predicate on a universe.
pub struct Language<X> {
    name: Arc<str>,
    tag: OracleTag,
    member: Arc<MemberFn<X>>,
}

impl<X> Clone for Language<X> {
    fn clone(&self) -> Self {
        Self {
            name: self.name.clone(),
            tag: self.tag,
            member: self.member.clone(),
        }
    }
}

impl<X> fmt::Debug for Language<X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Language")
            .field("name", &self.name)
            .field("tag", &self.tag)
            .finish()
    }
}

impl<X: 'static> Language<X> {
    pub fn new(
        name: impl AsRef<str>,
        tag: OracleTag,
        member: impl Fn(&X) -> bool + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: Arc::from(name.as_ref()),
            tag,
            member: Arc::new(member),
        }
    }

    pub fn brute_force(name: impl AsRef<str>, member: impl Fn(&X) -> bool + Send + Sync + 'static) -> Self {
        Self::new(name, OracleTag::BruteForce, member)
    }

    /// The whole universe.
    pub fn everything(name: impl AsRef<str>) -> Self {
        Self::new(name, OracleTag::Constructed, |_| true)
    }

    pub fn nothing(name: impl AsRef<str>) -> Self {
        Self::new(name, OracleTag::Constructed, |_| false)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn tag(&self) -> OracleTag {
        self.tag
    }

    #[inline]
    pub fn contains(&self, x: &X) -> bool {
        (self.member)(x)
    }

    pub fn complement(&self) -> Self {
        let inner = self.member.clone();
        Self {
            name: Arc::from(format!("co-{}", self.name)),
            tag: OracleTag::Constructed,
            member: Arc::new(move |x| !inner(x)),
        }
    }

    pub fn intersect(&self, other: &Language<X>) -> Self {
        let (a, b) = (self.member.clone(), other.member.clone());
        Self {
            name: Arc::from(format!("{}&{}", self.name, other.name)),
            tag: OracleTag::Constructed,
            member: Arc::new(move |x| a(x) && b(x)),
        }
    }
}
