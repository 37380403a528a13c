//! Order spectra of `S_n` and `A_n` from cycle types, without enumerating
//! permutations, and the witness showing `A_n` is not a POS-group.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numtheory::{distinct_odd_prime_sum, factorial};
use crate::spectra::OrderSpectrum;

/// Largest `n` accepted by [`partitions`] and [`symmetric_spectrum`].
pub const PARTITION_CAP: u32 = 60;

/// A partition of `n`, read as the cycle lengths of a permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleType {
    parts: Vec<u32>,
    multiplicities: Vec<(u32, u32)>,
}

impl CycleType {
    /// Parts may be given in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(
                "cycle lengths must be positive".into(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut multiplicities: Vec<(u32, u32)> = Vec::new();
        for &p in &parts {
            match multiplicities.last_mut() {
                Some((len, m)) if *len == p => *m += 1,
                _ => multiplicities.push((p, 1)),
            }
        }
        Ok(Self {
            parts,
            multiplicities,
        })
    }

    /// Parts in descending order.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `(part length, multiplicity)`, lengths descending.
    pub fn multiplicities(&self) -> &[(u32, u32)] {
        &self.multiplicities
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Restrict {
    All,
    EvenOnly,
}

/// Partitions of `n` in reverse lexicographic order, `(n)` first.
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = CycleType;

    fn next(&mut self) -> Option<CycleType> {
        let parts = self.current.take()?;
        self.current = successor(&parts);
        Some(CycleType::new(parts).expect("generated parts are positive"))
    }
}

fn successor(parts: &[u32]) -> Option<Vec<u32>> {
    let ones = parts.iter().rev().take_while(|&&p| p == 1).count();
    let mut next = parts[..parts.len() - ones].to_vec();
    let k = next.pop()?;
    let mut rest = ones as u32 + k;
    let cap = k - 1;
    while rest >= cap {
        next.push(cap);
        rest -= cap;
    }
    if rest > 0 {
        next.push(rest);
    }
    Some(next)
}

pub fn partitions(n: u32) -> Result<Partitions> {
    if n == 0 {
        return Err(Error::Zero);
    }
    if n > PARTITION_CAP {
        return Err(Error::TooLarge {
            value: n as u64,
            limit: PARTITION_CAP as u64,
        });
    }
    Ok(Partitions {
        current: Some(vec![n]),
    })
}

/// `∏ ℓ^m_ℓ · m_ℓ!`, the centralizer order of the class.
fn centralizer_order(ct: &CycleType) -> BigUint {
    ct.multiplicities()
        .iter()
        .fold(BigUint::from(1u32), |acc, &(len, m)| {
            acc * BigUint::from(len).pow(m) * factorial(m as u64)
        })
}

/// Number of permutations of `S_n` with this cycle type.
pub fn cycle_type_count(ct: &CycleType) -> BigUint {
    factorial(ct.n() as u64) / centralizer_order(ct)
}

pub fn cycle_type_order_and_parity(ct: &CycleType) -> (u64, Parity) {
    let order = ct.parts().iter().fold(1u64, |acc, &p| acc.lcm(&(p as u64)));
    let parity = if (ct.n() as usize - ct.parts().len()).is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    };
    (order, parity)
}

/// Spectrum of `S_n` (or `A_n` with [`Restrict::EvenOnly`]) summed over classes.
pub fn symmetric_spectrum(n: u32, restrict: Restrict) -> Result<OrderSpectrum> {
    let n_factorial = factorial(n as u64);
    let mut spectrum = OrderSpectrum::new();
    for ct in partitions(n)? {
        let (order, parity) = cycle_type_order_and_parity(&ct);
        if restrict == Restrict::EvenOnly && parity == Parity::Odd {
            continue;
        }
        spectrum.add(order, &n_factorial / centralizer_order(&ct));
    }
    Ok(spectrum)
}

/// An order class of `A_n` whose size does not divide `|A_n|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub n: u64,
    /// `n` or `n - 1`, whichever was written as a sum of distinct odd primes.
    pub decomposition_target: u64,
    pub primes: Vec<u64>,
    pub witness_order: BigUint,
    /// `n! / ∏ primes`, the number of elements of `A_n` of that order.
    pub witness_count: BigUint,
    pub group_order: BigUint,
    pub divides: bool,
}

pub fn an_pos_witness(n: u64) -> Result<WitnessReport> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "A_n witness needs n >= 3, got {n}"
        )));
    }
    let (target, primes) = match distinct_odd_prime_sum(n)? {
        Some(ps) => (n, ps),
        None => {
            let ps = distinct_odd_prime_sum(n - 1)?
                .expect("n and n - 1 are never both exceptional for n >= 3");
            (n - 1, ps)
        }
    };
    let witness_order: BigUint = primes.iter().map(|&p| BigUint::from(p)).product();
    let n_factorial = factorial(n);
    let witness_count = &n_factorial / &witness_order;
    let group_order = n_factorial / 2u32;
    let divides = (&group_order % &witness_count).is_zero();
    Ok(WitnessReport {
        n,
        decomposition_target: target,
        primes,
        witness_order,
        witness_count,
        group_order,
        divides,
    })
}
