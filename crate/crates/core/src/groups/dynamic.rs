use num_bigint::BigUint;

use super::{CyclicGroup, DirectProduct, Elements, Group, PermutationGroup, TwistedProduct};
use crate::numtheory::Factorization;

/// Any group this crate can build, behind one type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiniteGroup {
    Cyclic(CyclicGroup),
    Twisted(TwistedProduct),
    Direct(Box<DirectProduct<FiniteGroup, FiniteGroup>>),
    Permutation(PermutationGroup),
}

/// Element of a [`FiniteGroup`]; the payload shape follows the variant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Residue(u64),
    Pair(u64, u64),
    Product(Box<GroupElement>, Box<GroupElement>),
    Perm(super::Permutation),
}

impl From<CyclicGroup> for FiniteGroup {
    fn from(g: CyclicGroup) -> Self {
        FiniteGroup::Cyclic(g)
    }
}

impl From<TwistedProduct> for FiniteGroup {
    fn from(g: TwistedProduct) -> Self {
        FiniteGroup::Twisted(g)
    }
}

impl From<PermutationGroup> for FiniteGroup {
    fn from(g: PermutationGroup) -> Self {
        FiniteGroup::Permutation(g)
    }
}

impl From<DirectProduct<FiniteGroup, FiniteGroup>> for FiniteGroup {
    fn from(g: DirectProduct<FiniteGroup, FiniteGroup>) -> Self {
        FiniteGroup::Direct(Box::new(g))
    }
}

fn mismatch() -> ! {
    panic!("element payload does not match the group representation")
}

impl Group for FiniteGroup {
    type Element = GroupElement;

    fn identity(&self) -> GroupElement {
        match self {
            FiniteGroup::Cyclic(g) => GroupElement::Residue(g.identity()),
            FiniteGroup::Twisted(g) => {
                let (x, y) = g.identity();
                GroupElement::Pair(x, y)
            }
            FiniteGroup::Direct(g) => {
                let (a, b) = g.identity();
                GroupElement::Product(Box::new(a), Box::new(b))
            }
            FiniteGroup::Permutation(g) => GroupElement::Perm(g.identity()),
        }
    }

    fn op(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        use GroupElement as E;
        match (self, a, b) {
            (FiniteGroup::Cyclic(g), E::Residue(a), E::Residue(b)) => E::Residue(g.op(a, b)),
            (FiniteGroup::Twisted(g), E::Pair(x1, y1), E::Pair(x2, y2)) => {
                let (x, y) = g.op(&(*x1, *y1), &(*x2, *y2));
                E::Pair(x, y)
            }
            (FiniteGroup::Direct(g), E::Product(a1, a2), E::Product(b1, b2)) => E::Product(
                Box::new(g.left().op(a1, b1)),
                Box::new(g.right().op(a2, b2)),
            ),
            (FiniteGroup::Permutation(g), E::Perm(a), E::Perm(b)) => E::Perm(g.op(a, b)),
            _ => mismatch(),
        }
    }

    fn inverse(&self, a: &GroupElement) -> GroupElement {
        use GroupElement as E;
        match (self, a) {
            (FiniteGroup::Cyclic(g), E::Residue(a)) => E::Residue(g.inverse(a)),
            (FiniteGroup::Twisted(g), E::Pair(x, y)) => {
                let (x, y) = g.inverse(&(*x, *y));
                E::Pair(x, y)
            }
            (FiniteGroup::Direct(g), E::Product(a, b)) => E::Product(
                Box::new(g.left().inverse(a)),
                Box::new(g.right().inverse(b)),
            ),
            (FiniteGroup::Permutation(g), E::Perm(a)) => E::Perm(g.inverse(a)),
            _ => mismatch(),
        }
    }

    fn contains(&self, a: &GroupElement) -> bool {
        use GroupElement as E;
        match (self, a) {
            (FiniteGroup::Cyclic(g), E::Residue(a)) => g.contains(a),
            (FiniteGroup::Twisted(g), E::Pair(x, y)) => g.contains(&(*x, *y)),
            (FiniteGroup::Direct(g), E::Product(a, b)) => {
                g.left().contains(a) && g.right().contains(b)
            }
            (FiniteGroup::Permutation(g), E::Perm(a)) => g.contains(a),
            _ => false,
        }
    }

    fn cardinality(&self) -> BigUint {
        match self {
            FiniteGroup::Cyclic(g) => g.cardinality(),
            FiniteGroup::Twisted(g) => g.cardinality(),
            FiniteGroup::Direct(g) => g.cardinality(),
            FiniteGroup::Permutation(g) => g.cardinality(),
        }
    }

    fn order_factorization(&self) -> Factorization {
        match self {
            FiniteGroup::Cyclic(g) => g.order_factorization(),
            FiniteGroup::Twisted(g) => g.order_factorization(),
            FiniteGroup::Direct(g) => g.order_factorization(),
            FiniteGroup::Permutation(g) => g.order_factorization(),
        }
    }

    fn elements_unchecked(&self) -> Elements<'_, GroupElement> {
        use GroupElement as E;
        match self {
            FiniteGroup::Cyclic(g) => Box::new(g.elements_unchecked().map(E::Residue)),
            FiniteGroup::Twisted(g) => Box::new(g.elements_unchecked().map(|(x, y)| E::Pair(x, y))),
            FiniteGroup::Direct(g) => Box::new(
                g.elements_unchecked()
                    .map(|(a, b)| E::Product(Box::new(a), Box::new(b))),
            ),
            FiniteGroup::Permutation(g) => Box::new(g.elements_unchecked().map(E::Perm)),
        }
    }

    fn generators(&self) -> Vec<GroupElement> {
        use GroupElement as E;
        match self {
            FiniteGroup::Cyclic(g) => g.generators().into_iter().map(E::Residue).collect(),
            FiniteGroup::Twisted(g) => g
                .generators()
                .into_iter()
                .map(|(x, y)| E::Pair(x, y))
                .collect(),
            FiniteGroup::Direct(g) => g
                .generators()
                .into_iter()
                .map(|(a, b)| E::Product(Box::new(a), Box::new(b)))
                .collect(),
            FiniteGroup::Permutation(g) => g.generators().into_iter().map(E::Perm).collect(),
        }
    }

    fn describe(&self) -> String {
        match self {
            FiniteGroup::Cyclic(g) => g.describe(),
            FiniteGroup::Twisted(g) => g.describe(),
            FiniteGroup::Direct(g) => g.describe(),
            FiniteGroup::Permutation(g) => g.describe(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::groups::{make_metacyclic, make_twisted, EnumerationBudget};

    #[test]
    fn wrapper_agrees_with_concrete_groups() {
        let concrete = make_twisted(6, 7, 2).unwrap();
        let wrapped = FiniteGroup::from(concrete.clone());
        let orders: Vec<u64> = wrapped
            .enumerate(EnumerationBudget::default())
            .unwrap()
            .map(|e| wrapped.element_order(&e))
            .collect();
        let expected: Vec<u64> = concrete
            .elements_unchecked()
            .map(|e| concrete.element_order(&e))
            .collect();
        assert_eq!(orders, expected);
    }

    #[test]
    fn nested_direct_product() {
        let g = FiniteGroup::from(DirectProduct::new(
            FiniteGroup::from(CyclicGroup::new(2).unwrap()),
            FiniteGroup::from(make_metacyclic(3, 7, 2).unwrap()),
        ));
        assert_eq!(g.cardinality(), BigUint::from(42u32));
        assert!(!g.is_abelian());
        let x = GroupElement::Product(
            Box::new(GroupElement::Residue(1)),
            Box::new(GroupElement::Pair(1, 0)),
        );
        assert_eq!(g.element_order(&x), 6);
    }

    #[test]
    fn mismatched_payload_is_rejected() {
        let g = FiniteGroup::from(CyclicGroup::new(5).unwrap());
        assert_eq!(
            g.multiply(&GroupElement::Residue(1), &GroupElement::Pair(0, 0)),
            Err(Error::NotAMember)
        );
        assert_eq!(
            g.multiply(&GroupElement::Residue(7), &GroupElement::Residue(0)),
            Err(Error::NotAMember)
        );
    }
}
