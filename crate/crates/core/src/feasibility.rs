//! Necessary conditions on the order of a POS-group.
//!
//! Each rule is an independent named check so a report shows exactly which
//! condition excludes a given order. Passing every rule does not imply that
//! a POS-group of that order exists.

use crate::error::{Error, Result};
use crate::numtheory::{factorize, fermat_prime_check, primes_up_to, Factorization};

/// Largest `hi` accepted by [`scan`].
pub const SCAN_LIMIT: u64 = 10_000_000;

/// Largest bound accepted by [`conjecture_probe`].
pub const PROBE_LIMIT: u64 = 1_000_000_000;

/// Smallest prime allowed by the third cascade rule.
pub const CASCADE_PRIME: u64 = 77_659;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    /// Nontrivial POS-groups have even order.
    EvenOrder,
    /// `p - 1` divides `n` for every prime `p | n`.
    PredecessorDivides,
    /// Smallest odd prime factor is a Fermat prime, and `ord_2(p-1) <= ord_2(n)`.
    FermatSmallest,
    /// The 2 → 3 → 7 → 43² cascade on orders with `ord_2 n = 1`.
    Cascade,
}

impl Rule {
    pub fn id(&self) -> &'static str {
        match self {
            Rule::EvenOrder => "even-order",
            Rule::PredecessorDivides => "pm1-divides",
            Rule::FermatSmallest => "fermat-smallest",
            Rule::Cascade => "cascade",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub rule: Rule,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(rule: Rule, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            rule,
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub n: u64,
    pub checks: Vec<CheckResult>,
    pub feasible: bool,
    /// Group spec of a known POS-group of order `n`, if one is built here.
    pub realized_by: Option<String>,
}

impl FeasibilityReport {
    pub fn failed_rules(&self) -> impl Iterator<Item = Rule> + '_ {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.rule)
    }
}

pub fn check_even(n: u64) -> CheckResult {
    let passed = n == 1 || n.is_multiple_of(2);
    let detail = if n == 1 {
        "trivial order".to_string()
    } else if passed {
        format!("{n} is even")
    } else {
        format!("{n} is odd")
    };
    CheckResult::new(Rule::EvenOrder, passed, detail)
}

fn pm1_with(n: u64, f: &Factorization) -> CheckResult {
    match f.primes().find(|&p| !n.is_multiple_of(p - 1)) {
        None => CheckResult::new(
            Rule::PredecessorDivides,
            true,
            "p - 1 divides n for every prime p | n",
        ),
        Some(p) => CheckResult::new(
            Rule::PredecessorDivides,
            false,
            format!("{p} | {n} but {} does not divide {n}", p - 1),
        ),
    }
}

pub fn check_pm1_divides(n: u64) -> Result<CheckResult> {
    Ok(pm1_with(n, &factorize(n)?))
}

fn fermat_with(n: u64, f: &Factorization) -> CheckResult {
    let rule = Rule::FermatSmallest;
    let Some(q) = f.primes().find(|&p| p != 2) else {
        return CheckResult::new(rule, true, "no odd prime factor");
    };
    if fermat_prime_check(q).is_none() {
        return CheckResult::new(
            rule,
            false,
            format!("smallest odd prime factor {q} is not a Fermat prime"),
        );
    }
    let alpha = f.exponent_of(2);
    for p in f.primes().filter(|&p| p != 2) {
        let k = (p - 1).trailing_zeros();
        if k > alpha {
            return CheckResult::new(
                rule,
                false,
                format!("ord_2({}) = {k} exceeds ord_2({n}) = {alpha}", p - 1),
            );
        }
    }
    CheckResult::new(
        rule,
        true,
        format!("smallest odd prime factor {q} is a Fermat prime"),
    )
}

pub fn check_fermat_smallest(n: u64) -> Result<CheckResult> {
    Ok(fermat_with(n, &factorize(n)?))
}

fn cascade_with(n: u64, f: &Factorization) -> CheckResult {
    let rule = Rule::Cascade;
    if n % 2 == 1 {
        return CheckResult::new(rule, true, "not applicable to odd orders");
    }
    let (v2, v3, v7) = (f.exponent_of(2), f.exponent_of(3), f.exponent_of(7));
    if v2 != 1 {
        return CheckResult::new(rule, true, format!("ord_2 = {v2}, cascade not triggered"));
    }
    if n == 2 {
        return CheckResult::new(rule, true, "rule 1 exemption (n = 2)");
    }
    if v3 == 0 {
        return CheckResult::new(rule, false, "rule 1: ord_2 = 1 requires 3 | n");
    }
    if v3 != 1 {
        return CheckResult::new(rule, true, "rule 1 satisfied, ord_3 > 1");
    }
    if n == 6 {
        return CheckResult::new(rule, true, "rule 2 exemption (n = 6)");
    }
    if v7 == 0 {
        return CheckResult::new(rule, false, "rule 2: ord_2 = ord_3 = 1 requires 7 | n");
    }
    if v7 != 1 {
        return CheckResult::new(rule, true, "rule 2 satisfied, ord_7 > 1");
    }
    if n == 42 {
        return CheckResult::new(rule, true, "rule 3 exemption (n = 42)");
    }
    if f.exponent_of(43) < 2 {
        return CheckResult::new(
            rule,
            false,
            "rule 3: ord_2 = ord_3 = ord_7 = 1 requires 43^2 | n",
        );
    }
    // Combined with the p - 1 | n condition.
    match f
        .primes()
        .find(|&p| p >= CASCADE_PRIME && n.is_multiple_of(p - 1))
    {
        Some(p) => {
            let mut detail = format!("rule 3 satisfied by 43^2 * {p} with {} | n", p - 1);
            if is_open_cascade_case(n) {
                detail.push_str(
                    "; orders 42 * 43^r * 77659 with r <= 3 are believed excluded by a separate counting argument that is not encoded here",
                );
            }
            CheckResult::new(rule, true, detail)
        }
        None => CheckResult::new(
            rule,
            false,
            format!(
                "rule 3 (combined): needs a prime p >= {CASCADE_PRIME} with p | n and p - 1 | n"
            ),
        ),
    }
}

fn is_open_cascade_case(n: u64) -> bool {
    let base = 42 * CASCADE_PRIME;
    (0..=3u32).any(|r| 43u64.checked_pow(r).and_then(|q| q.checked_mul(base)) == Some(n))
}

pub fn check_cascade(n: u64) -> Result<CheckResult> {
    Ok(cascade_with(n, &factorize(n)?))
}

/// Spec string of a POS-group of order `n` built by this crate.
fn realization(n: u64, f: &Factorization) -> Option<String> {
    if n == 1 {
        return Some("cyclic:1".into());
    }
    let alpha = f.exponent_of(2);
    let odd: Vec<(u64, u32)> = f.pairs().iter().copied().filter(|&(p, _)| p != 2).collect();
    if alpha >= 1 && odd.iter().all(|&(p, _)| p == 3) {
        return Some(format!("cyclic:{n}"));
    }
    if let [(p, beta)] = odd[..] {
        if let Some(w) = fermat_prime_check(p) {
            if alpha >= w.two_exponent() {
                return Some(format!("thm32:{p},{alpha},{beta}"));
            }
        }
    }
    if alpha >= 1 && odd == [(3, 1), (7, 1)] {
        return Some(if alpha == 1 {
            "c6c7".into()
        } else {
            format!("c2am21:{alpha}")
        });
    }
    None
}

fn report_with(n: u64, f: &Factorization) -> FeasibilityReport {
    let checks = vec![
        check_even(n),
        pm1_with(n, f),
        fermat_with(n, f),
        cascade_with(n, f),
    ];
    let feasible = checks.iter().all(|c| c.passed);
    let realized_by = if feasible { realization(n, f) } else { None };
    FeasibilityReport {
        n,
        checks,
        feasible,
        realized_by,
    }
}

pub fn feasibility_report(n: u64) -> Result<FeasibilityReport> {
    Ok(report_with(n, &factorize(n)?))
}

/// Reports for every feasible `n` in `lo..=hi`, ascending.
pub fn scan(lo: u64, hi: u64) -> Result<Vec<FeasibilityReport>> {
    if lo == 0 {
        return Err(Error::Zero);
    }
    if lo > hi {
        return Err(Error::InvalidArgument(format!("empty range {lo}..={hi}")));
    }
    if hi > SCAN_LIMIT {
        return Err(Error::TooLarge {
            value: hi,
            limit: SCAN_LIMIT,
        });
    }
    let spf = smallest_prime_factors(hi);
    let mut out = Vec::new();
    for n in lo..=hi {
        if n != 1 && n % 2 == 1 {
            continue;
        }
        let report = report_with(n, &factor_with(&spf, n));
        if report.feasible {
            out.push(report);
        }
    }
    Ok(out)
}

fn smallest_prime_factors(hi: u64) -> Vec<u32> {
    let hi = hi as usize;
    let mut spf = vec![0u32; hi + 1];
    for i in 2..=hi {
        if spf[i] != 0 {
            continue;
        }
        let mut j = i;
        while j <= hi {
            if spf[j] == 0 {
                spf[j] = i as u32;
            }
            j += i;
        }
    }
    spf
}

fn factor_with(spf: &[u32], n: u64) -> Factorization {
    let mut rest = n as usize;
    let mut pairs = Vec::new();
    while rest > 1 {
        let p = spf[rest] as usize;
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        pairs.push((p as u64, e));
    }
    Factorization::from_pairs(pairs)
}

/// Orders `n <= bound` with `ord_2 = ord_3 = ord_7 = 1` and `n != 42` that
/// pass every rule (`p - 1 | n` for each prime `p | n`, and the cascade):
/// candidate counterexamples to the conjecture that such a POS-group has
/// order 42.
pub fn conjecture_probe(bound: u64) -> Result<Vec<u64>> {
    if bound > PROBE_LIMIT {
        return Err(Error::TooLarge {
            value: bound,
            limit: PROBE_LIMIT,
        });
    }
    let mut out = closed_multiples(bound, &[2, 3, 7]);
    out.retain(|&n| n != 42 && report_with(n, &factorize(n).expect("n <= 10^9")).feasible);
    Ok(out)
}

/// All `n = base * m <= bound`, where `base` is the product of the given
/// primes, `m` is coprime to `base`, and `p - 1 | n` for every prime `p | n`.
fn closed_multiples(bound: u64, base_primes: &[u64]) -> Vec<u64> {
    let base: u64 = base_primes.iter().product();
    if base_primes.iter().any(|&p| !base.is_multiple_of(p - 1)) {
        return Vec::new();
    }
    // Sieve m in blocks, dividing out every prime up to sqrt(max m); a
    // leftover cofactor above 1 is then prime.
    let max_m = bound / base;
    if max_m == 0 {
        return Vec::new();
    }
    let small = primes_up_to((max_m as f64).sqrt() as u64 + 1);
    const BLOCK: u64 = 1 << 16;
    let mut out = Vec::new();
    let mut start = 1u64;
    while start <= max_m {
        let end = (start + BLOCK - 1).min(max_m);
        let len = (end - start + 1) as usize;
        let mut rest: Vec<u64> = (start..=end).collect();
        let mut ok = vec![true; len];
        for &p in &small {
            let mut m = start.div_ceil(p) * p;
            while m <= end {
                let i = (m - start) as usize;
                if base_primes.contains(&p) || !(base * m).is_multiple_of(p - 1) {
                    ok[i] = false;
                }
                while rest[i].is_multiple_of(p) {
                    rest[i] /= p;
                }
                m += p;
            }
        }
        for (i, m) in (start..=end).enumerate() {
            if !ok[i] || base_primes.iter().any(|&p| m % p == 0) {
                continue;
            }
            let n = base * m;
            let q = rest[i];
            if q > 1 && !n.is_multiple_of(q - 1) {
                continue;
            }
            out.push(n);
        }
        start = end + 1;
    }
    out
}
