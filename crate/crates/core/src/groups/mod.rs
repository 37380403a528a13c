//! Concrete finite groups and element arithmetic.
//!
//! Each representation implements [`Group`]. Generic algorithms (powers,
//! element orders, budgeted enumeration) are provided methods on the trait,
//! so spectra can be computed without dynamic dispatch. [`FiniteGroup`]
//! wraps every representation behind one type for the CLI and FFI layers.

mod cyclic;
mod direct;
mod dynamic;
mod permutation;
mod twisted;

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::numtheory::Factorization;

pub use cyclic::CyclicGroup;
pub use direct::DirectProduct;
pub use dynamic::{FiniteGroup, GroupElement};
pub use permutation::{close_generators, Permutation, PermutationGroup};
pub use twisted::{make_metacyclic, make_twisted, TwistedProduct};

/// Default cap on the number of elements a group may have to be enumerated.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Maximum number of elements an enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_elements: u64,
}

impl EnumerationBudget {
    pub fn new(max_elements: u64) -> Self {
        Self { max_elements }
    }

    /// Fails unless a group of the given cardinality fits in the budget.
    pub fn admit(&self, cardinality: &BigUint) -> Result<u64> {
        match cardinality.to_u64() {
            Some(n) if n <= self.max_elements => Ok(n),
            _ => Err(Error::BudgetExceeded {
                order: cardinality.to_string(),
                cap: self.max_elements,
            }),
        }
    }
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self::new(DEFAULT_BUDGET)
    }
}

pub type Elements<'a, E> = Box<dyn Iterator<Item = E> + 'a>;

/// A finite group with enumerable, canonically represented elements.
pub trait Group {
    type Element: Clone + Eq + Hash + Ord + Debug;

    fn identity(&self) -> Self::Element;

    /// Product of two members. Callers must pass members; see [`Group::multiply`].
    fn op(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    fn inverse(&self, a: &Self::Element) -> Self::Element;

    /// Structural membership test.
    fn contains(&self, a: &Self::Element) -> bool;

    fn cardinality(&self) -> BigUint;

    /// Prime factorization of the cardinality.
    fn order_factorization(&self) -> Factorization;

    /// All elements in canonical (lexicographic) order, ignoring any budget.
    fn elements_unchecked(&self) -> Elements<'_, Self::Element>;

    /// A generating set.
    fn generators(&self) -> Vec<Self::Element>;

    /// Short descriptor, e.g. `TwistedProduct(6, 7, 2)`.
    fn describe(&self) -> String;

    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Result<Self::Element> {
        if self.contains(a) && self.contains(b) {
            Ok(self.op(a, b))
        } else {
            Err(Error::NotAMember)
        }
    }

    fn pow(&self, a: &Self::Element, mut exp: u64) -> Self::Element {
        let mut result = self.identity();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.op(&result, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.op(&base, &base);
            }
        }
        result
    }

    fn is_identity(&self, a: &Self::Element) -> bool {
        *a == self.identity()
    }

    /// Order of `a`, found by stripping prime factors off `|G|` while the
    /// power stays trivial.
    fn element_order(&self, a: &Self::Element) -> u64 {
        let factors = self.order_factorization();
        if let Some(mut t) = factors.value() {
            for &(p, e) in factors.pairs() {
                for _ in 0..e {
                    if self.is_identity(&self.pow(a, t / p)) {
                        t /= p;
                    } else {
                        break;
                    }
                }
            }
            return t;
        }
        // |G| overflows u64: treat one prime at a time. Killing every other
        // prime part leaves an element whose order is the p-part of o(a).
        let mut order = 1u64;
        for &(p, e) in factors.pairs() {
            let mut h = a.clone();
            for &(q, f) in factors.pairs() {
                if q != p {
                    for _ in 0..f {
                        h = self.pow(&h, q);
                    }
                }
            }
            for _ in 0..e {
                if self.is_identity(&h) {
                    break;
                }
                h = self.pow(&h, p);
                order *= p;
            }
        }
        order
    }

    /// Checked variant of [`Group::element_order`].
    fn checked_element_order(&self, a: &Self::Element) -> Result<u64> {
        if self.contains(a) {
            Ok(self.element_order(a))
        } else {
            Err(Error::NotAMember)
        }
    }

    /// Every element exactly once, refusing groups larger than the budget.
    fn enumerate(&self, budget: EnumerationBudget) -> Result<Elements<'_, Self::Element>> {
        budget.admit(&self.cardinality())?;
        Ok(self.elements_unchecked())
    }

    /// A pair of non-commuting generators, if any.
    fn noncommuting_pair(&self) -> Option<(Self::Element, Self::Element)> {
        let gens = self.generators();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                if self.op(a, b) != self.op(b, a) {
                    return Some((a.clone(), b.clone()));
                }
            }
        }
        None
    }

    fn is_abelian(&self) -> bool {
        self.noncommuting_pair().is_none()
    }
}
