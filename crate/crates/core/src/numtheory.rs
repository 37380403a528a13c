//! Integer arithmetic used throughout the crate.
//!
//! Everything here works on `u64` with `u128` widening for modular products.
//! Factorization and primality are plain trial division, which is adequate
//! for the desk-scale integers the group constructions need.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest input accepted by [`factorize`].
pub const FACTORIZE_LIMIT: u64 = 1_000_000_000_000;

/// Largest input accepted by [`distinct_odd_prime_sum`].
pub const PRIME_SUM_LIMIT: u64 = 20_000;

/// Largest modulus `p^(beta+1)` accepted by [`find_twist`].
pub const TWIST_MODULUS_LIMIT: u64 = 1 << 63;

/// Prime-power decomposition of a positive integer, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    /// The factorization of 1.
    pub fn one() -> Self {
        Self::default()
    }

    /// Builds a factorization from `(prime, exponent)` pairs in any order.
    /// Repeated primes are merged and zero exponents dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u32)>) -> Self {
        let mut pairs: Vec<(u64, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        pairs.sort_unstable();
        let mut merged: Vec<(u64, u32)> = Vec::with_capacity(pairs.len());
        for (p, e) in pairs {
            match merged.last_mut() {
                Some((q, f)) if *q == p => *f += e,
                _ => merged.push((p, e)),
            }
        }
        Self { pairs: merged }
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.pairs
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn is_one(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Factorization of the product of `self` and `other`.
    pub fn mul(&self, other: &Factorization) -> Factorization {
        Factorization::from_pairs(self.pairs.iter().chain(other.pairs.iter()).copied())
    }

    /// The represented integer, if it fits in `u64`.
    pub fn value(&self) -> Option<u64> {
        self.pairs.iter().try_fold(1u64, |acc, &(p, e)| {
            p.checked_pow(e).and_then(|pe| acc.checked_mul(pe))
        })
    }

    pub fn to_biguint(&self) -> BigUint {
        self.pairs.iter().fold(BigUint::from(1u32), |acc, &(p, e)| {
            acc * BigUint::from(p).pow(e)
        })
    }

    /// All positive divisors in ascending order. Requires the value to fit in `u64`.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.pairs {
            let current = divs.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..current {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Candidate divisors 2, 3, 5 and then the 2·3·5 wheel.
fn trial_divisors() -> impl Iterator<Item = u64> {
    const GAPS: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];
    let mut next = 7u64;
    let wheel = (0..).map(move |i| {
        let d = next;
        next += GAPS[i % GAPS.len()];
        d
    });
    [2u64, 3, 5].into_iter().chain(wheel)
}

/// Deterministic primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for d in trial_divisors() {
        if d.saturating_mul(d) > n {
            return true;
        }
        if n.is_multiple_of(d) {
            return n == d;
        }
    }
    unreachable!("trial divisor stream is infinite")
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Zero);
    }
    if n > FACTORIZE_LIMIT {
        return Err(Error::TooLarge {
            value: n,
            limit: FACTORIZE_LIMIT,
        });
    }
    let mut rest = n;
    let mut pairs = Vec::new();
    for d in trial_divisors() {
        if d * d > rest {
            break;
        }
        let mut e = 0;
        while rest.is_multiple_of(d) {
            rest /= d;
            e += 1;
        }
        if e > 0 {
            pairs.push((d, e));
        }
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    Ok(Factorization { pairs })
}

pub fn euler_phi(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(phi_of(&f))
}

/// Totient from an existing factorization.
pub fn phi_of(f: &Factorization) -> u64 {
    f.pairs()
        .iter()
        .fold(1u64, |acc, &(p, e)| acc * (p - 1) * p.pow(e - 1))
}

/// Exponent of the prime `p` in `n`.
pub fn padic_valuation(n: u64, p: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::Zero);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut rest = n;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    Ok(k)
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    result
}

/// Smallest `t >= 1` with `z^t = 1 (mod m)`.
pub fn multiplicative_order(z: u64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::BadModulus(m));
    }
    let z = z % m;
    if z.gcd(&m) != 1 {
        return Err(Error::NotCoprime { z, m });
    }
    let phi = factorize(euler_phi(m)?)?;
    let mut t = phi.value().expect("totient fits in u64");
    for &(p, e) in phi.pairs() {
        for _ in 0..e {
            if pow_mod(z, t / p, m) == 1 {
                t /= p;
            } else {
                break;
            }
        }
    }
    Ok(t)
}

/// A prime of the form `2^(2^k) + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FermatPrimeWitness {
    pub p: u64,
    pub k: u32,
}

impl FermatPrimeWitness {
    /// `2^k`, the exponent with `p - 1 = 2^(2^k)`.
    pub fn two_exponent(&self) -> u32 {
        1 << self.k
    }
}

pub fn fermat_prime_check(p: u64) -> Option<FermatPrimeWitness> {
    if p < 3 {
        return None;
    }
    let m = p - 1;
    if !m.is_power_of_two() {
        return None;
    }
    let e = m.trailing_zeros();
    if !e.is_power_of_two() || !is_prime(p) {
        return None;
    }
    Some(FermatPrimeWitness {
        p,
        k: e.trailing_zeros(),
    })
}

/// Primes `<= n`, ascending, by the sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// Fixed-width bitset of reachable sums `0..=n`.
#[derive(Clone)]
struct SumSet {
    words: Vec<u64>,
}

impl SumSet {
    fn with_zero(n: usize) -> Self {
        let mut words = vec![0u64; n / 64 + 1];
        words[0] = 1;
        Self { words }
    }

    fn contains(&self, s: usize) -> bool {
        self.words
            .get(s / 64)
            .is_some_and(|w| (w >> (s % 64)) & 1 == 1)
    }

    /// `self | (self << shift)`, truncated to the original width.
    fn or_shifted(&self, shift: usize) -> Self {
        let mut out = self.clone();
        let (word_shift, bit_shift) = (shift / 64, shift % 64);
        let len = self.words.len();
        for i in (word_shift..len).rev() {
            let src = i - word_shift;
            let mut v = self.words[src] << bit_shift;
            if bit_shift > 0 && src > 0 {
                v |= self.words[src - 1] >> (64 - bit_shift);
            }
            out.words[i] |= v;
        }
        out
    }
}

/// Writes `n` as a sum of distinct odd primes, returned ascending.
///
/// Returns `None` exactly for `n` in `{1, 2, 4, 6, 9}`. When several
/// decompositions exist the largest usable prime is always taken first.
pub fn distinct_odd_prime_sum(n: u64) -> Result<Option<Vec<u64>>> {
    if n == 0 {
        return Err(Error::Zero);
    }
    if n > PRIME_SUM_LIMIT {
        return Err(Error::TooLarge {
            value: n,
            limit: PRIME_SUM_LIMIT,
        });
    }
    let odd: Vec<u64> = primes_up_to(n).into_iter().filter(|&p| p > 2).collect();
    let target = n as usize;
    // reach[i]: sums attainable with distinct primes from odd[..i]
    let mut reach = Vec::with_capacity(odd.len() + 1);
    reach.push(SumSet::with_zero(target));
    for &p in &odd {
        let next = reach.last().unwrap().or_shifted(p as usize);
        reach.push(next);
    }
    if !reach[odd.len()].contains(target) {
        return Ok(None);
    }
    let mut rest = target;
    let mut limit = odd.len();
    let mut chosen = Vec::new();
    while rest > 0 {
        let j = (0..limit)
            .rev()
            .find(|&j| {
                let p = odd[j] as usize;
                p <= rest && reach[j].contains(rest - p)
            })
            .expect("reachable sum has a last prime");
        chosen.push(odd[j]);
        rest -= odd[j] as usize;
        limit = j;
    }
    chosen.reverse();
    Ok(Some(chosen))
}

/// Smallest `z >= 2` whose action `b -> b^z` drives the Fermat-prime
/// semidirect-product construction modulo `p^beta`.
///
/// With `p = 2^(2^k) + 1` and `e = 2^(2^k)`, `z` satisfies
/// `z^e = 1 (mod p^beta)`, `z^(e/2) = -1 (mod p^beta)` and
/// `z^e != 1 (mod p^(beta+1))`.
pub fn find_twist(p: u64, beta: u32) -> Result<u64> {
    let witness = fermat_prime_check(p).ok_or(Error::NotFermatPrime(p))?;
    if beta == 0 {
        return Err(Error::InvalidArgument("beta must be at least 1".into()));
    }
    let modulus = p
        .checked_pow(beta)
        .filter(|_| {
            p.checked_pow(beta + 1)
                .is_some_and(|m| m <= TWIST_MODULUS_LIMIT)
        })
        .ok_or(Error::TooLarge {
            value: p,
            limit: TWIST_MODULUS_LIMIT,
        })?;
    let lifted = modulus * p;
    let e = 1u64 << witness.two_exponent();
    // The units of Z/p^beta form a cyclic group, and its elements of order
    // dividing p - 1 are the p^(beta-1)-th powers. Raising a primitive root
    // mod p to that power gives a generator g of this subgroup, and the
    // residues of order exactly e = p - 1 are g^j for odd j.
    let root = (2..p)
        .find(|&r| pow_mod(r, e / 2, p) != 1)
        .expect("every odd prime has a primitive root");
    let g = pow_mod(root, modulus / p, modulus);
    let step = mul_mod(g, g, modulus);
    let mut residues = Vec::with_capacity((e / 2) as usize);
    let mut c = g;
    for _ in 0..e / 2 {
        residues.push(c);
        c = mul_mod(c, step, modulus);
    }
    residues.sort_unstable();
    for t in 0.. {
        let offset = t * modulus;
        let hit = residues
            .iter()
            .map(|&c| c + offset)
            .find(|&z| z >= 2 && pow_mod(z, e, lifted) != 1);
        if let Some(z) = hit {
            return Ok(z);
        }
        if offset > lifted {
            break;
        }
    }
    Err(Error::Hypothesis(format!(
        "no twist found for p = {p}, beta = {beta}"
    )))
}

pub fn divisors(n: u64) -> Result<Vec<u64>> {
    Ok(factorize(n)?.divisors())
}

/// Factorization of `n!` by Legendre's formula.
pub fn factorial_factorization(n: u64) -> Factorization {
    Factorization::from_pairs(primes_up_to(n).into_iter().map(|p| {
        let mut e = 0u32;
        let mut q = n / p;
        while q > 0 {
            e += q as u32;
            q /= p;
        }
        (p, e)
    }))
}

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::from(1u32), |acc, k| acc * k)
}
