use num_bigint::BigUint;

use super::{Elements, Group};
use crate::numtheory::Factorization;

/// `G × H` with componentwise product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectProduct<G, H> {
    left: G,
    right: H,
}

impl<G: Group, H: Group> DirectProduct<G, H> {
    pub fn new(left: G, right: H) -> Self {
        Self { left, right }
    }

    pub fn left(&self) -> &G {
        &self.left
    }

    pub fn right(&self) -> &H {
        &self.right
    }
}

impl<G: Group, H: Group> Group for DirectProduct<G, H> {
    type Element = (G::Element, H::Element);

    fn identity(&self) -> Self::Element {
        (self.left.identity(), self.right.identity())
    }

    fn op(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        (self.left.op(&a.0, &b.0), self.right.op(&a.1, &b.1))
    }

    fn inverse(&self, a: &Self::Element) -> Self::Element {
        (self.left.inverse(&a.0), self.right.inverse(&a.1))
    }

    fn contains(&self, a: &Self::Element) -> bool {
        self.left.contains(&a.0) && self.right.contains(&a.1)
    }

    fn cardinality(&self) -> BigUint {
        self.left.cardinality() * self.right.cardinality()
    }

    fn order_factorization(&self) -> Factorization {
        self.left
            .order_factorization()
            .mul(&self.right.order_factorization())
    }

    fn elements_unchecked(&self) -> Elements<'_, Self::Element> {
        let right: Vec<H::Element> = self.right.elements_unchecked().collect();
        Box::new(
            self.left
                .elements_unchecked()
                .flat_map(move |a| right.clone().into_iter().map(move |b| (a.clone(), b))),
        )
    }

    fn generators(&self) -> Vec<Self::Element> {
        let e_left = self.left.identity();
        let e_right = self.right.identity();
        self.left
            .generators()
            .into_iter()
            .map(|g| (g, e_right.clone()))
            .chain(
                self.right
                    .generators()
                    .into_iter()
                    .map(|h| (e_left.clone(), h)),
            )
            .collect()
    }

    fn describe(&self) -> String {
        format!(
            "DirectProduct({}, {})",
            self.left.describe(),
            self.right.describe()
        )
    }

    fn pow(&self, a: &Self::Element, exp: u64) -> Self::Element {
        (self.left.pow(&a.0, exp), self.right.pow(&a.1, exp))
    }
}
