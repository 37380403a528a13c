//! Nonabelian POS-group families and their closed-form spectra.
//!
//! The predicted tables are computed from the row formulas alone and never
//! touch a group object, so comparing them with an enumerated spectrum is a
//! genuine two-sided check.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::groups::{make_metacyclic, make_twisted, CyclicGroup, DirectProduct, TwistedProduct};
use crate::numtheory::{fermat_prime_check, find_twist};
use crate::spectra::OrderSpectrum;

/// Parameters of `C_{2^alpha} ⋉ C_{p^beta}` for a Fermat prime `p = 2^(2^k) + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Theorem32Params {
    p: u64,
    k: u32,
    alpha: u32,
    beta: u32,
    z: u64,
}

impl Theorem32Params {
    /// Validates `p` Fermat, `beta >= 1` and `2^alpha >= p - 1`, then picks the twist.
    pub fn new(p: u64, alpha: u32, beta: u32) -> Result<Self> {
        let witness = fermat_prime_check(p).ok_or(Error::NotFermatPrime(p))?;
        if beta == 0 {
            return Err(Error::Hypothesis("beta must be at least 1".into()));
        }
        if alpha < witness.two_exponent() {
            return Err(Error::Hypothesis(format!(
                "2^{alpha} < p - 1 = {} (need 2^alpha >= p - 1)",
                p - 1
            )));
        }
        group_order_u64(alpha, p, beta)?;
        let z = find_twist(p, beta)?;
        Ok(Self {
            p,
            k: witness.k,
            alpha,
            beta,
            z,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn beta(&self) -> u32 {
        self.beta
    }

    pub fn z(&self) -> u64 {
        self.z
    }

    /// `2^k`: below this 2-adic valuation of `x` the odd part never shows up.
    fn threshold(&self) -> u32 {
        1 << self.k
    }

    pub fn group_order(&self) -> u64 {
        (1u64 << self.alpha) * self.p.pow(self.beta)
    }
}

fn group_order_u64(alpha: u32, p: u64, beta: u32) -> Result<u64> {
    1u64.checked_shl(alpha)
        .filter(|_| alpha < 64)
        .and_then(|two| p.checked_pow(beta).and_then(|pb| two.checked_mul(pb)))
        .ok_or_else(|| Error::Hypothesis(format!("2^{alpha} * {p}^{beta} does not fit in 64 bits")))
}

/// Valuation of `v` at `q`, with the zero residue assigned `at_zero`.
fn valuation_or(v: u64, q: u64, at_zero: u32) -> u32 {
    if v == 0 {
        return at_zero;
    }
    let mut v = v;
    let mut e = 0;
    while v.is_multiple_of(q) {
        v /= q;
        e += 1;
    }
    e
}

/// Closed-form order of `(a^x, b^y)`.
///
/// With `r = ord_2(x)` and `s = ord_p(y)` (taking `r = alpha` at `x = 0`
/// and `s = beta` at `y = 0`), the order is `2^(alpha-r)` when `r < 2^k`
/// and `2^(alpha-r) p^(beta-s)` otherwise.
pub fn predicted_order(x: u64, y: u64, params: &Theorem32Params) -> u64 {
    let r = valuation_or(x, 2, params.alpha);
    let s = valuation_or(y, params.p, params.beta);
    let two_part = 1u64 << (params.alpha - r);
    if r < params.threshold() {
        two_part
    } else {
        two_part * params.p.pow(params.beta - s)
    }
}

/// Rows of a closed-form spectrum, strictly increasing in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictedTable {
    rows: Vec<(u64, BigUint)>,
}

impl PredictedTable {
    /// Merges rows sharing an order.
    fn from_rows(rows: impl IntoIterator<Item = (u64, BigUint)>) -> Self {
        let mut rows: Vec<(u64, BigUint)> = rows.into_iter().collect();
        rows.sort_by_key(|(o, _)| *o);
        let mut merged: Vec<(u64, BigUint)> = Vec::with_capacity(rows.len());
        for (order, count) in rows {
            match merged.last_mut() {
                Some((o, c)) if *o == order => *c += count,
                _ => merged.push((order, count)),
            }
        }
        debug_assert!(merged.windows(2).all(|w| w[0].0 < w[1].0));
        Self { rows: merged }
    }

    pub fn rows(&self) -> &[(u64, BigUint)] {
        &self.rows
    }

    pub fn total(&self) -> BigUint {
        self.rows.iter().map(|(_, c)| c).sum()
    }

    pub fn to_spectrum(&self) -> OrderSpectrum {
        OrderSpectrum::from_entries(self.rows.iter().cloned())
    }

    /// Exact equality with an enumerated spectrum.
    pub fn matches(&self, spectrum: &OrderSpectrum) -> bool {
        self.to_spectrum() == *spectrum
    }
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn pow2(e: u32) -> BigUint {
    BigUint::from(1u32) << e
}

pub fn predicted_table(params: &Theorem32Params) -> PredictedTable {
    let (p, alpha, beta, t) = (params.p, params.alpha, params.beta, params.threshold());
    let pb = |e: u32| big(p).pow(e);
    let mut rows = vec![(1u64, big(1))];
    // x with r < 2^k: the odd coordinate never contributes.
    for r in 0..t.min(alpha) {
        rows.push((1 << (alpha - r), pow2(alpha - r - 1) * pb(beta)));
    }
    // Pure 2-power orders with r >= 2^k: y must be 0.
    for r in t..alpha {
        rows.push((1 << (alpha - r), pow2(alpha - r - 1)));
    }
    // x = 0.
    for s in 0..beta {
        rows.push((p.pow(beta - s), pb(beta - s - 1) * (p - 1)));
    }
    for r in t..alpha {
        for s in 0..beta {
            rows.push((
                (1 << (alpha - r)) * p.pow(beta - s),
                pow2(alpha - r - 1) * pb(beta - s - 1) * (p - 1),
            ));
        }
    }
    PredictedTable::from_rows(rows)
}

pub fn build_theorem32(p: u64, alpha: u32, beta: u32) -> Result<(TwistedProduct, PredictedTable)> {
    let params = Theorem32Params::new(p, alpha, beta)?;
    let group = make_twisted(1 << alpha, p.pow(beta), params.z)?;
    Ok((group, predicted_table(&params)))
}

/// Spectrum of `C_{2^alpha} ⋉ C_{5^beta}` with `b -> b^-1`.
pub fn remark_p5_table(alpha: u32, beta: u32) -> Result<PredictedTable> {
    check_p5_params(alpha, beta)?;
    let fives = |e: u32| big(5).pow(e);
    let mut rows = vec![(1u64, big(1)), (1 << alpha, pow2(alpha - 1) * fives(beta))];
    for r in 1..alpha {
        rows.push((1 << (alpha - r), pow2(alpha - r - 1)));
    }
    for s in 0..beta {
        rows.push((5u64.pow(beta - s), big(4) * fives(beta - s - 1)));
    }
    for r in 1..alpha {
        for s in 0..beta {
            rows.push((
                (1 << (alpha - r)) * 5u64.pow(beta - s),
                pow2(alpha - r + 1) * fives(beta - s - 1),
            ));
        }
    }
    Ok(PredictedTable::from_rows(rows))
}

fn check_p5_params(alpha: u32, beta: u32) -> Result<()> {
    if alpha < 2 {
        return Err(Error::Hypothesis(format!(
            "alpha >= 2 required, got {alpha}"
        )));
    }
    if beta < 1 {
        return Err(Error::Hypothesis("beta >= 1 required".into()));
    }
    group_order_u64(alpha, 5, beta).map(|_| ())
}

pub fn build_remark_p5(alpha: u32, beta: u32) -> Result<(TwistedProduct, PredictedTable)> {
    let table = remark_p5_table(alpha, beta)?;
    let n = 5u64.pow(beta);
    // z = -1, stored as its canonical residue.
    let group = make_twisted(1 << alpha, n, n - 1)?;
    Ok((group, table))
}

/// `C_6 ⋉ C_7` with `b -> b^2`.
pub fn build_c6_c7() -> (TwistedProduct, PredictedTable) {
    let group = make_twisted(6, 7, 2).expect("2^6 = 1 mod 7");
    let table = PredictedTable::from_rows(
        [(1u64, 1u64), (2, 1), (3, 14), (6, 14), (7, 6), (14, 6)]
            .into_iter()
            .map(|(o, c)| (o, big(c))),
    );
    (group, table)
}

/// `C_{2^a} × M` with `M` the nonabelian group of order 21.
pub fn build_c2a_m21(a: u32) -> Result<DirectProduct<CyclicGroup, TwistedProduct>> {
    if a == 0 || a > 40 {
        return Err(Error::Hypothesis(format!("a must lie in 1..=40, got {a}")));
    }
    let m = make_metacyclic(3, 7, 2)?;
    Ok(DirectProduct::new(CyclicGroup::new(1 << a)?, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{EnumerationBudget, Group};
    use crate::spectra::{order_spectrum, pos_verdict};

    fn rows(t: &PredictedTable) -> Vec<(u64, u64)> {
        t.to_spectrum().to_u64_pairs().unwrap()
    }

    #[test]
    fn parameter_validation() {
        assert!(Theorem32Params::new(3, 1, 1).is_ok());
        assert!(matches!(
            Theorem32Params::new(5, 1, 1),
            Err(Error::Hypothesis(_))
        ));
        assert_eq!(Theorem32Params::new(7, 3, 1), Err(Error::NotFermatPrime(7)));
        assert!(matches!(
            Theorem32Params::new(3, 1, 0),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            Theorem32Params::new(3, 70, 1),
            Err(Error::Hypothesis(_))
        ));
        let p = Theorem32Params::new(17, 4, 1).unwrap();
        assert_eq!((p.k(), p.group_order()), (2, 272));
    }

    #[test]
    fn order_formula_examples() {
        let params = Theorem32Params::new(5, 2, 1).unwrap();
        assert_eq!(predicted_order(0, 0, &params), 1);
        for y in 0..5 {
            assert_eq!(predicted_order(1, y, &params), 4);
        }
        assert_eq!(predicted_order(0, 1, &params), 5);
    }

    #[test]
    fn table_examples() {
        let t = predicted_table(&Theorem32Params::new(3, 1, 1).unwrap());
        assert_eq!(rows(&t), vec![(1, 1), (2, 3), (3, 2)]);
        let t = predicted_table(&Theorem32Params::new(5, 2, 1).unwrap());
        assert_eq!(rows(&t), vec![(1, 1), (2, 5), (4, 10), (5, 4)]);
        let t = predicted_table(&Theorem32Params::new(5, 3, 1).unwrap());
        assert_eq!(
            rows(&t),
            vec![(1, 1), (2, 1), (4, 10), (5, 4), (8, 20), (10, 4)]
        );
    }

    #[test]
    fn tables_sum_to_group_order() {
        for (p, alphas, betas) in [(3u64, 1..8u32, 1..6u32), (5, 2..8, 1..5), (17, 4..9, 1..3)] {
            for alpha in alphas.clone() {
                for beta in betas.clone() {
                    let params = Theorem32Params::new(p, alpha, beta).unwrap();
                    let t = predicted_table(&params);
                    assert_eq!(t.total(), big(params.group_order()));
                }
            }
        }
    }

    #[test]
    fn fermat_family_groups_match_their_tables() {
        let budget = EnumerationBudget::default();
        for (p, alpha, beta) in [
            (3u64, 1u32, 1u32),
            (3, 3, 2),
            (5, 2, 1),
            (5, 3, 2),
            (17, 4, 1),
        ] {
            let (g, t) = build_theorem32(p, alpha, beta).unwrap();
            let s = order_spectrum(&g, budget).unwrap();
            assert!(t.matches(&s), "p={p} alpha={alpha} beta={beta}");
            assert!(!g.is_abelian());
        }
        assert!(matches!(
            build_theorem32(5, 1, 1),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn p5_family() {
        let (g, t) = build_remark_p5(2, 1).unwrap();
        assert_eq!(rows(&t), vec![(1, 1), (2, 1), (4, 10), (5, 4), (10, 4)]);
        let budget = EnumerationBudget::default();
        assert!(t.matches(&order_spectrum(&g, budget).unwrap()));
        let (g3, t3) = build_remark_p5(3, 1).unwrap();
        assert_eq!(t3.total(), big(40));
        let s3 = order_spectrum(&g3, budget).unwrap();
        assert!(t3.matches(&s3));
        assert!(pos_verdict("remark5:3,1", &s3, &big(40)).is_pos);
        assert!(matches!(build_remark_p5(1, 1), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn c6_c7_and_c2_times_m() {
        let budget = EnumerationBudget::default();
        let (g, t) = build_c6_c7();
        let s = order_spectrum(&g, budget).unwrap();
        assert!(t.matches(&s));
        assert!(pos_verdict("c6c7", &s, &big(42)).is_pos);
        let c2m = build_c2a_m21(1).unwrap();
        assert_eq!(order_spectrum(&c2m, budget).unwrap(), s);
        for a in 2..=4 {
            let g = build_c2a_m21(a).unwrap();
            let order = g.cardinality();
            let s = order_spectrum(&g, budget).unwrap();
            assert!(pos_verdict("c2am21", &s, &order).is_pos, "a = {a}");
            assert!(!g.is_abelian());
        }
        assert!(build_c2a_m21(0).is_err());
    }
}
