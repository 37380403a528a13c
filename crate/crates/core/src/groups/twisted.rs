use num_bigint::BigUint;
use num_integer::Integer;

use super::{Elements, Group};
use crate::error::{Error, Result};
use crate::numtheory::{factorize, mul_mod, pow_mod, Factorization};

/// Semidirect product `C_M ⋉ C_N` with `a` acting on `b` by `b -> b^z`.
///
/// Elements are exponent pairs `(x, y)` standing for `(a^x, b^y)`, and
///
/// ```text
/// (x1, y1) * (x2, y2) = (x1 + x2 mod M, y1 * z^x2 + y2 mod N)
/// ```
///
/// which is the rule `(h1, k1)(h2, k2) = (h1 h2, θ(h2)(k1) k2)` with
/// `θ(a^x)(b^y) = b^(y z^x)` written additively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedProduct {
    m: u64,
    n: u64,
    z: u64,
    factors: Factorization,
}

/// Builds `C_M ⋉ C_N` twisted by `z`. Requires `gcd(z, N) = 1` and
/// `z^M = 1 (mod N)`, i.e. `a -> (b -> b^z)` is a homomorphism into `Aut(C_N)`.
pub fn make_twisted(m: u64, n: u64, z: u64) -> Result<TwistedProduct> {
    if m == 0 || n == 0 {
        return Err(Error::Zero);
    }
    let z = z % n;
    if n > 1 && z.gcd(&n) != 1 {
        return Err(Error::NotCoprime { z, m: n });
    }
    if pow_mod(z, m, n) != 1 % n {
        return Err(Error::InvalidTwist { m, n, z });
    }
    let factors = factorize(m)?.mul(&factorize(n)?);
    Ok(TwistedProduct { m, n, z, factors })
}

/// The metacyclic group `<x, y | x^m = y^n = 1, x y x^-1 = y^r>`, realized
/// as `make_twisted(m, n, r)`. See [`TwistedProduct::presentation_generators`]
/// for the images of `x` and `y`.
pub fn make_metacyclic(m: u64, n: u64, r: u64) -> Result<TwistedProduct> {
    make_twisted(m, n, r)
}

impl TwistedProduct {
    pub fn params(&self) -> (u64, u64, u64) {
        (self.m, self.n, self.z)
    }

    /// Elements `(x, y)` satisfying `x^M = y^N = 1` and `x y x^-1 = y^z`.
    ///
    /// With the product above, `a^-1 b a = b^z`, so the conjugating generator
    /// is `a^-1 = (M - 1, 0)` rather than `a`.
    pub fn presentation_generators(&self) -> ((u64, u64), (u64, u64)) {
        ((self.m - 1, 0), (0, 1 % self.n))
    }

    fn twist_pow(&self, x: u64) -> u64 {
        pow_mod(self.z, x, self.n)
    }
}

impl Group for TwistedProduct {
    type Element = (u64, u64);

    fn identity(&self) -> (u64, u64) {
        (0, 0)
    }

    fn op(&self, a: &(u64, u64), b: &(u64, u64)) -> (u64, u64) {
        let x = (a.0 + b.0) % self.m;
        let y = (mul_mod(a.1, self.twist_pow(b.0), self.n) + b.1) % self.n;
        (x, y)
    }

    fn inverse(&self, a: &(u64, u64)) -> (u64, u64) {
        let x = (self.m - a.0) % self.m;
        let y = mul_mod(a.1, self.twist_pow(x), self.n);
        (x, (self.n - y) % self.n)
    }

    fn contains(&self, a: &(u64, u64)) -> bool {
        a.0 < self.m && a.1 < self.n
    }

    fn cardinality(&self) -> BigUint {
        BigUint::from(self.m) * self.n
    }

    fn order_factorization(&self) -> Factorization {
        self.factors.clone()
    }

    fn elements_unchecked(&self) -> Elements<'_, (u64, u64)> {
        let n = self.n;
        Box::new((0..self.m).flat_map(move |x| (0..n).map(move |y| (x, y))))
    }

    fn generators(&self) -> Vec<(u64, u64)> {
        let mut gens = Vec::new();
        if self.m > 1 {
            gens.push((1, 0));
        }
        if self.n > 1 {
            gens.push((0, 1));
        }
        gens
    }

    fn describe(&self) -> String {
        format!("TwistedProduct({}, {}, {})", self.m, self.n, self.z)
    }
}
