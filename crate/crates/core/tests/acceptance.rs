//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails. `UPDATE_GOLDEN=1` rewrites the scan golden file.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use pos_groups::cli::{self, Format};
use pos_groups::constructions::{
    build_c2a_m21, build_c6_c7, build_remark_p5, build_theorem32, predicted_order, Theorem32Params,
};
use pos_groups::feasibility::{
    check_cascade, conjecture_probe, feasibility_report, scan, Rule, CASCADE_PRIME,
};
use pos_groups::groups::{
    close_generators, CyclicGroup, DirectProduct, EnumerationBudget, FiniteGroup, Group,
    Permutation, PermutationGroup,
};
use pos_groups::numtheory::{
    factorial, factorize, fermat_prime_check, find_twist, is_prime, pow_mod,
};
use pos_groups::spectra::{
    cyclic_spectrum, frobenius_check, odd_prime_bound_for_order, order_spectrum,
    phi_divisibility_check, pos_verdict, spectrum_is_cyclic, OrderSpectrum,
};
use pos_groups::symmetric::{an_pos_witness, symmetric_spectrum, Restrict};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

const BUDGET: EnumerationBudget = EnumerationBudget {
    max_elements: 1_000_000,
};

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn is_2a3b(n: u64) -> bool {
    if !n.is_multiple_of(2) {
        return false;
    }
    let mut m = n;
    for p in [2, 3] {
        while m.is_multiple_of(p) {
            m /= p;
        }
    }
    m == 1
}

fn spectrum_of<G: Group>(g: &G) -> Result<OrderSpectrum, String> {
    order_spectrum(g, BUDGET).map_err(|e| e.to_string())
}

fn is_pos_spectrum(spectrum: &OrderSpectrum, order: &BigUint) -> bool {
    pos_verdict("", spectrum, order).is_pos
}

/// Parameter grid shared by the table and formula criteria.
fn fermat_family_grid() -> Vec<(u64, u32, u32)> {
    let mut grid = Vec::new();
    let ranges: [(
        u64,
        std::ops::RangeInclusive<u32>,
        std::ops::RangeInclusive<u32>,
    ); 4] = [
        (3, 1..=6, 1..=4),
        (5, 2..=6, 1..=3),
        (17, 4..=6, 1..=1),
        (257, 8..=9, 1..=1),
    ];
    for (p, alphas, betas) in ranges {
        for alpha in alphas {
            for beta in betas.clone() {
                if (1u64 << alpha) * p.pow(beta) <= 1_000_000 {
                    grid.push((p, alpha, beta));
                }
            }
        }
    }
    grid
}

fn p5_family_grid() -> Vec<(u32, u32)> {
    let mut grid = Vec::new();
    for alpha in 2..=6 {
        for beta in 1..=3 {
            if (1u64 << alpha) * 5u64.pow(beta) <= 1_000_000 {
                grid.push((alpha, beta));
            }
        }
    }
    grid
}

fn quaternion() -> PermutationGroup {
    // Left-regular action on {1, i, j, k, -1, -i, -j, -k} indexed 0..8.
    let i = Permutation::new(vec![1, 4, 3, 6, 5, 0, 7, 2]).unwrap();
    let j = Permutation::new(vec![2, 7, 4, 1, 6, 3, 0, 5]).unwrap();
    close_generators(8, vec![i, j], BUDGET).unwrap()
}

fn dihedral4() -> PermutationGroup {
    let r = Permutation::new(vec![1, 2, 3, 0]).unwrap();
    let s = Permutation::new(vec![0, 3, 2, 1]).unwrap();
    close_generators(4, vec![r, s], BUDGET).unwrap()
}

fn klein() -> FiniteGroup {
    DirectProduct::new(
        FiniteGroup::from(CyclicGroup::new(2).unwrap()),
        FiniteGroup::from(CyclicGroup::new(2).unwrap()),
    )
    .into()
}

fn c1_cyclic_classification() -> Outcome {
    for n in 1..=100_000u64 {
        let s = cyclic_spectrum(n).map_err(|e| e.to_string())?;
        let pos = is_pos_spectrum(&s, &big(n));
        let expected = n == 1 || is_2a3b(n);
        ensure!(
            pos == expected,
            "cyclic_spectrum({n}): verdict {pos}, expected {expected}"
        );
        if n <= 2000 {
            let enumerated = spectrum_of(&CyclicGroup::new(n).unwrap())?;
            ensure!(
                enumerated == s,
                "C_{n}: enumeration disagrees with closed form"
            );
        }
    }
    Ok(())
}

fn c2_fermat_family_tables() -> Outcome {
    for (p, alpha, beta) in fermat_family_grid() {
        let (g, table) = build_theorem32(p, alpha, beta).map_err(|e| e.to_string())?;
        let s = spectrum_of(&g)?;
        ensure!(
            table.matches(&s),
            "({p},{alpha},{beta}): enumerated spectrum differs from table"
        );
        ensure!(
            is_pos_spectrum(&s, &g.cardinality()),
            "({p},{alpha},{beta}): not POS"
        );
        ensure!(!g.is_abelian(), "({p},{alpha},{beta}): abelian");
    }
    Ok(())
}

fn c3_p5_family() -> Outcome {
    for (alpha, beta) in p5_family_grid() {
        let (g, table) = build_remark_p5(alpha, beta).map_err(|e| e.to_string())?;
        let s = spectrum_of(&g)?;
        ensure!(
            table.matches(&s),
            "({alpha},{beta}): enumerated spectrum differs from table"
        );
        ensure!(
            is_pos_spectrum(&s, &g.cardinality()),
            "({alpha},{beta}): not POS"
        );
    }
    Ok(())
}

const C6C7_SPECTRUM: [(u64, u64); 6] = [(1, 1), (2, 1), (3, 14), (6, 14), (7, 6), (14, 6)];

fn c4_c6_c7() -> Outcome {
    let (g, table) = build_c6_c7();
    let s = spectrum_of(&g)?;
    ensure!(
        s == OrderSpectrum::from_entries(C6C7_SPECTRUM),
        "spectrum {:?}",
        s.to_u64_pairs()
    );
    ensure!(table.matches(&s), "table disagrees");
    ensure!(is_pos_spectrum(&s, &big(42)), "not POS");
    Ok(())
}

fn c5_c2a_times_m21() -> Outcome {
    for a in 1..=4 {
        let g = build_c2a_m21(a).map_err(|e| e.to_string())?;
        let s = spectrum_of(&g)?;
        ensure!(is_pos_spectrum(&s, &g.cardinality()), "a = {a}: not POS");
        if a == 1 {
            ensure!(
                s == OrderSpectrum::from_entries(C6C7_SPECTRUM),
                "a = 1 spectrum {:?}",
                s.to_u64_pairs()
            );
        }
    }
    Ok(())
}

fn c6_alternating_groups() -> Outcome {
    for n in 3..=30u32 {
        let order = factorial(n as u64) / 2u32;
        let s = symmetric_spectrum(n, Restrict::EvenOnly).map_err(|e| e.to_string())?;
        ensure!(s.total() == order, "A_{n}: class sizes do not sum to n!/2");
        ensure!(
            !is_pos_spectrum(&s, &order),
            "A_{n}: partition spectrum is POS"
        );
        let w = an_pos_witness(n as u64).map_err(|e| e.to_string())?;
        let product: u64 = w.primes.iter().product();
        let expected = factorial(n as u64) / product;
        ensure!(
            w.witness_count == expected,
            "A_{n}: witness count {}",
            w.witness_count
        );
        ensure!(
            s.count(product) == Some(&expected),
            "A_{n}: spectrum count at order {product} is {:?}",
            s.count(product)
        );
        ensure!(
            !w.divides && (&order % &expected) != big(0),
            "A_{n}: witness class divides |A_n|"
        );
        if n <= 8 {
            let enumerated = spectrum_of(&PermutationGroup::alternating(n as usize))?;
            ensure!(
                enumerated == s,
                "A_{n}: partition spectrum differs from enumeration"
            );
        }
    }
    Ok(())
}

fn two_groups() -> Vec<(String, FiniteGroup)> {
    let mut groups: Vec<(String, FiniteGroup)> = (0..=10)
        .map(|m| {
            (
                format!("C_{}", 1u64 << m),
                CyclicGroup::new(1 << m).unwrap().into(),
            )
        })
        .collect();
    groups.push(("Klein four".into(), klein()));
    groups.push(("D_4".into(), dihedral4().into()));
    groups.push(("Q_8".into(), quaternion().into()));
    groups
}

fn c7_two_groups() -> Outcome {
    let expected_spectra: [(&str, &[(u64, u64)]); 3] = [
        ("Klein four", &[(1, 1), (2, 3)]),
        ("D_4", &[(1, 1), (2, 5), (4, 2)]),
        ("Q_8", &[(1, 1), (2, 1), (4, 6)]),
    ];
    for (name, g) in two_groups() {
        let s = spectrum_of(&g)?;
        let order = g.cardinality();
        let pos = is_pos_spectrum(&s, &order);
        let cyclic = spectrum_is_cyclic(&s, &order);
        ensure!(pos == cyclic, "{name}: POS {pos} but cyclic {cyclic}");
        if name.starts_with("C_") {
            ensure!(pos, "{name}: not POS");
        } else {
            ensure!(!pos, "{name}: POS");
        }
        if let Some((_, want)) = expected_spectra.iter().find(|(n, _)| *n == name) {
            ensure!(
                s == OrderSpectrum::from_entries(want.iter().copied()),
                "{name}: spectrum {:?}",
                s.to_u64_pairs()
            );
        }
    }
    Ok(())
}

fn c8_universal_invariants() -> Outcome {
    let mut groups: Vec<(String, FiniteGroup)> = Vec::new();
    for (p, alpha, beta) in fermat_family_grid() {
        groups.push((
            format!("Fermat family ({p},{alpha},{beta})"),
            build_theorem32(p, alpha, beta).unwrap().0.into(),
        ));
    }
    for (alpha, beta) in p5_family_grid() {
        groups.push((
            format!("p = 5 family ({alpha},{beta})"),
            build_remark_p5(alpha, beta).unwrap().0.into(),
        ));
    }
    groups.push(("C6 x| C7".into(), build_c6_c7().0.into()));
    for a in 1..=4 {
        let d = build_c2a_m21(a).unwrap();
        let g = DirectProduct::new(
            FiniteGroup::from(d.left().clone()),
            FiniteGroup::from(d.right().clone()),
        );
        groups.push((format!("C_2^{a} x M21"), g.into()));
    }
    for n in 3..=8 {
        groups.push((format!("A_{n}"), PermutationGroup::alternating(n).into()));
    }
    groups.extend(two_groups());
    let cap = big(10_000);
    let mut checked = 0;
    for (name, g) in groups.iter().filter(|(_, g)| g.cardinality() <= cap) {
        let s = spectrum_of(g)?;
        let order = g.cardinality();
        let phi = phi_divisibility_check(&s);
        ensure!(phi.is_empty(), "{name}: phi check {phi:?}");
        let frob = frobenius_check(g, BUDGET).map_err(|e| e.to_string())?;
        ensure!(frob.is_empty(), "{name}: Frobenius {frob:?}");
        if is_pos_spectrum(&s, &order) {
            let bound = odd_prime_bound_for_order(&s, &order).map_err(|e| e.to_string())?;
            ensure!(bound.is_empty(), "{name}: odd prime bound {bound:?}");
        }
        checked += 1;
    }
    ensure!(checked >= 50, "only {checked} groups checked");
    Ok(())
}

/// Order of `x` by repeated multiplication.
fn iterated_order<G: Group>(g: &G, x: &G::Element) -> u64 {
    let mut acc = x.clone();
    let mut k = 1;
    while !g.is_identity(&acc) {
        acc = g.op(&acc, x);
        k += 1;
    }
    k
}

fn c9_order_formula() -> Outcome {
    let mut elements = 0u64;
    for (p, alpha, beta) in fermat_family_grid() {
        if (1u64 << alpha) * p.pow(beta) > 100_000 {
            continue;
        }
        let params = Theorem32Params::new(p, alpha, beta).map_err(|e| e.to_string())?;
        let (g, _) = build_theorem32(p, alpha, beta).map_err(|e| e.to_string())?;
        for e in g.enumerate(BUDGET).map_err(|e| e.to_string())? {
            let want = predicted_order(e.0, e.1, &params);
            let got = iterated_order(&g, &e);
            ensure!(
                want == got,
                "({p},{alpha},{beta}) element {e:?}: formula {want}, actual {got}"
            );
            elements += 1;
        }
    }
    ensure!(elements > 0, "no elements checked");
    Ok(())
}

fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/scan_1_10000.csv")
}

fn c10_feasibility() -> Outcome {
    let doc = cli::scan_document(1, 10_000).map_err(|e| e.to_string())?;
    let csv = cli::render(&doc, Format::Csv);
    let path = golden_path();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &csv).map_err(|e| e.to_string())?;
    }
    let golden = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    ensure!(
        csv == golden,
        "scan(1, 10^4) differs from {}",
        path.display()
    );
    ensure!(
        csv == cli::render(&cli::scan_document(1, 10_000).unwrap(), Format::Csv),
        "scan is not stable"
    );

    let feasible: Vec<u64> = scan(1, 10_000)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|r| r.n)
        .collect();
    for n in [10, 22] {
        ensure!(!feasible.contains(&n), "{n} should be excluded");
    }
    for n in [20, 24, 42, 272] {
        ensure!(feasible.contains(&n), "{n} should be feasible");
    }
    let r = feasibility_report(1806).map_err(|e| e.to_string())?;
    let failed: Vec<Rule> = r.failed_rules().collect();
    ensure!(
        !r.feasible && failed == [Rule::Cascade],
        "1806 failed rules {failed:?}"
    );
    ensure!(!check_cascade(1806).unwrap().passed, "cascade passes 1806");

    let probe = conjecture_probe(1_000_000).map_err(|e| e.to_string())?;
    ensure!(probe.is_empty(), "conjecture_probe(10^6) = {probe:?}");

    ensure!(
        CASCADE_PRIME == 77659 && is_prime(77659),
        "77659 is not prime"
    );
    let f = factorize(77658).map_err(|e| e.to_string())?;
    ensure!(
        f.pairs() == [(2, 1), (3, 1), (7, 1), (43, 2)],
        "77658 = {f}"
    );
    Ok(())
}

fn c11_twist_search() -> Outcome {
    let cases: [(u64, u32); 5] = [(3, 4), (5, 3), (17, 2), (257, 1), (65537, 1)];
    for (p, max_beta) in cases {
        let k = fermat_prime_check(p)
            .ok_or(format!("{p} not a Fermat prime"))?
            .k;
        let e = 1u64 << (1u32 << k);
        for beta in 1..=max_beta {
            let z = find_twist(p, beta).map_err(|e| e.to_string())?;
            let m = p.pow(beta);
            let m1 = m.checked_mul(p).ok_or("p^(beta+1) overflows")?;
            ensure!(
                pow_mod(z, e, m) == 1,
                "({p},{beta}): z^(2^(2^k)) != 1 mod p^beta"
            );
            ensure!(
                pow_mod(z, e / 2, m) == m - 1,
                "({p},{beta}): z^(2^(2^k-1)) != -1 mod p^beta"
            );
            ensure!(
                pow_mod(z, e, m1) != 1,
                "({p},{beta}): z^(2^(2^k)) == 1 mod p^(beta+1)"
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (
            "cyclic classification for n <= 10^5",
            c1_cyclic_classification,
        ),
        ("Fermat-prime family tables", c2_fermat_family_tables),
        ("p = 5, z = -1 family tables", c3_p5_family),
        ("C6 x| C7 spectrum", c4_c6_c7),
        ("C_2^a x M21 is POS", c5_c2a_times_m21),
        ("A_n is not POS for 3 <= n <= 30", c6_alternating_groups),
        ("2-groups are POS exactly when cyclic", c7_two_groups),
        (
            "phi, Frobenius and odd-prime invariants",
            c8_universal_invariants,
        ),
        ("closed-form element orders", c9_order_formula),
        ("feasibility scan, cascade and probe", c10_feasibility),
        ("twist congruences", c11_twist_search),
    ];
    let mut failures = 0;
    let mut stderr = std::io::stderr();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let line = match &outcome {
            Ok(()) => format!("PASS {:>2} {name} ({})", i + 1, secs(took)),
            Err(why) => {
                failures += 1;
                format!("FAIL {:>2} {name} ({}): {why}", i + 1, secs(took))
            }
        };
        let _ = writeln!(stderr, "{line}");
    }
    let _ = writeln!(
        stderr,
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}
