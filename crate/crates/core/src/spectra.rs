//! Order spectra, the POS verdict, and necessary-condition diagnostics.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::groups::{EnumerationBudget, Group};
use crate::numtheory::{divisors, euler_phi, factorize, padic_valuation};

/// Map from element order to the number of elements of that order.
///
/// Entries are kept sorted by order. Construction does not require the
/// entries to come from a group, so synthetic spectra can be fed to the checks.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrderSpectrum {
    entries: BTreeMap<u64, BigUint>,
}

impl OrderSpectrum {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a spectrum, adding counts of repeated orders and dropping zeros.
    pub fn from_entries<C: Into<BigUint>>(entries: impl IntoIterator<Item = (u64, C)>) -> Self {
        let mut s = Self::new();
        for (order, count) in entries {
            s.add(order, count.into());
        }
        s
    }

    pub fn add(&mut self, order: u64, count: BigUint) {
        if count.is_zero() {
            return;
        }
        *self.entries.entry(order).or_default() += count;
    }

    /// Adds every count of `other` into `self`.
    pub fn merge(&mut self, other: &OrderSpectrum) {
        for (&order, count) in &other.entries {
            self.add(order, count.clone());
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &BigUint)> + '_ {
        self.entries.iter().map(|(&o, c)| (o, c))
    }

    pub fn orders(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.keys().copied()
    }

    pub fn count(&self, order: u64) -> Option<&BigUint> {
        self.entries.get(&order)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    /// Entries as `(order, count)` with counts that fit in `u64`.
    pub fn to_u64_pairs(&self) -> Option<Vec<(u64, u64)>> {
        self.iter()
            .map(|(o, c)| c.to_u64().map(|c| (o, c)))
            .collect()
    }

    /// Checks the invariants every group-derived spectrum satisfies: one
    /// element of order 1 and counts summing to the group order.
    pub fn is_consistent_with(&self, group_order: &BigUint) -> bool {
        self.count(1).is_some_and(One::is_one) && self.total() == *group_order
    }
}

/// Outcome of the POS test for one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosReport {
    pub group_label: String,
    pub group_order: BigUint,
    pub spectrum: OrderSpectrum,
    pub is_pos: bool,
    /// Entries whose count does not divide the group order.
    pub violations: Vec<(u64, BigUint)>,
}

/// Tallies element orders over the whole group.
pub fn order_spectrum<G: Group>(group: &G, budget: EnumerationBudget) -> Result<OrderSpectrum> {
    let mut tally: BTreeMap<u64, u64> = BTreeMap::new();
    for g in group.enumerate(budget)? {
        *tally.entry(group.element_order(&g)).or_default() += 1;
    }
    Ok(OrderSpectrum::from_entries(tally))
}

/// Spectrum of `C_n` in closed form: `phi(d)` elements of each order `d | n`.
pub fn cyclic_spectrum(n: u64) -> Result<OrderSpectrum> {
    let divs = divisors(n)?;
    let mut s = OrderSpectrum::new();
    for d in divs {
        s.add(d, BigUint::from(euler_phi(d)?));
    }
    Ok(s)
}

pub fn pos_verdict(
    label: impl Into<String>,
    spectrum: &OrderSpectrum,
    group_order: &BigUint,
) -> PosReport {
    let violations: Vec<(u64, BigUint)> = spectrum
        .iter()
        .filter(|(_, c)| !(group_order % *c).is_zero())
        .map(|(o, c)| (o, c.clone()))
        .collect();
    PosReport {
        group_label: label.into(),
        group_order: group_order.clone(),
        spectrum: spectrum.clone(),
        is_pos: violations.is_empty(),
        violations,
    }
}

/// Entries whose count is not a multiple of `phi(order)`.
pub fn phi_divisibility_check(spectrum: &OrderSpectrum) -> Vec<(u64, BigUint)> {
    spectrum
        .iter()
        .filter(|&(o, c)| {
            let phi = BigUint::from(euler_phi(o).expect("orders are positive"));
            !(c % phi).is_zero()
        })
        .map(|(o, c)| (o, c.clone()))
        .collect()
}

/// A divisor `n` of `|G|` for which `n` does not divide `#{g : g^n = 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusViolation {
    pub divisor: u64,
    pub solutions: BigUint,
}

/// Frobenius' divisibility test read off an existing spectrum: the solutions
/// of `g^n = 1` are the elements whose order divides `n`.
pub fn frobenius_from_spectrum(
    spectrum: &OrderSpectrum,
    group_order: u64,
) -> Result<Vec<FrobeniusViolation>> {
    let mut out = Vec::new();
    for n in divisors(group_order)? {
        let solutions: BigUint = spectrum
            .iter()
            .filter(|&(o, _)| n % o == 0)
            .map(|(_, c)| c)
            .sum();
        if !(&solutions % n).is_zero() {
            out.push(FrobeniusViolation {
                divisor: n,
                solutions,
            });
        }
    }
    Ok(out)
}

pub fn frobenius_check<G: Group>(
    group: &G,
    budget: EnumerationBudget,
) -> Result<Vec<FrobeniusViolation>> {
    let order = budget.admit(&group.cardinality())?;
    let spectrum = order_spectrum(group, budget)?;
    frobenius_from_spectrum(&spectrum, order)
}

/// Orders whose number `r` of distinct odd prime factors exceeds
/// `alpha - max(k - 1, 0)`, where `k` is the 2-adic valuation of the order
/// and `alpha` that of the group order.
pub fn odd_prime_bound_check(spectrum: &OrderSpectrum, alpha: u32) -> Vec<u64> {
    spectrum
        .orders()
        .filter(|&d| {
            let f = factorize(d).expect("element orders are small");
            let r = f.primes().filter(|&p| p != 2).count() as i64;
            let k = f.exponent_of(2) as i64;
            r > alpha as i64 - (k - 1).max(0)
        })
        .collect()
}

/// `odd_prime_bound_check` with `alpha` taken from the group order.
pub fn odd_prime_bound_for_order(
    spectrum: &OrderSpectrum,
    group_order: &BigUint,
) -> Result<Vec<u64>> {
    let alpha = two_adic_valuation(group_order)?;
    Ok(odd_prime_bound_check(spectrum, alpha))
}

fn two_adic_valuation(n: &BigUint) -> Result<u32> {
    if n.is_zero() {
        return Err(Error::Zero);
    }
    if let Some(small) = n.to_u64() {
        return padic_valuation(small, 2);
    }
    Ok(n.trailing_zeros().unwrap_or(0) as u32)
}

/// True when some element has order `|G|`.
pub fn spectrum_is_cyclic(spectrum: &OrderSpectrum, group_order: &BigUint) -> bool {
    group_order
        .to_u64()
        .is_some_and(|n| spectrum.count(n).is_some())
}

/// `d` divides `n`, both arbitrary precision.
pub fn divides(d: &BigUint, n: &BigUint) -> bool {
    !d.is_zero() && n.is_multiple_of(d)
}
