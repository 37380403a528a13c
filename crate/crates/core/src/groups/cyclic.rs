use num_bigint::BigUint;

use super::{Elements, Group};
use crate::error::{Error, Result};
use crate::numtheory::{factorize, Factorization};

/// `Z/n` under addition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicGroup {
    n: u64,
    factors: Factorization,
}

impl CyclicGroup {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Zero);
        }
        Ok(Self {
            n,
            factors: factorize(n)?,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }
}

impl Group for CyclicGroup {
    type Element = u64;

    fn identity(&self) -> u64 {
        0
    }

    fn op(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.n as u128) as u64
    }

    fn inverse(&self, a: &u64) -> u64 {
        (self.n - a) % self.n
    }

    fn contains(&self, a: &u64) -> bool {
        *a < self.n
    }

    fn cardinality(&self) -> BigUint {
        BigUint::from(self.n)
    }

    fn order_factorization(&self) -> Factorization {
        self.factors.clone()
    }

    fn elements_unchecked(&self) -> Elements<'_, u64> {
        Box::new(0..self.n)
    }

    fn generators(&self) -> Vec<u64> {
        if self.n == 1 {
            Vec::new()
        } else {
            vec![1]
        }
    }

    fn describe(&self) -> String {
        format!("Cyclic({})", self.n)
    }

    // Additive: a^e is e·a.
    fn pow(&self, a: &u64, exp: u64) -> u64 {
        crate::numtheory::mul_mod(*a, exp % self.n, self.n)
    }
}
