//! Command-line surface: argument parsing, group construction from specs,
//! and rendering of documents as JSON, CSV, or plain text.
//!
//! [`run`] is the whole binary; `main` only forwards process arguments and
//! exits with its return value.

pub mod document;
pub mod spec;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::constructions::{
    build_c2a_m21, build_c6_c7, build_remark_p5, build_theorem32, PredictedTable,
};
use crate::error::{Error, Result};
use crate::feasibility::{conjecture_probe, feasibility_report, scan};
use crate::groups::{
    close_generators, make_metacyclic, make_twisted, CyclicGroup, DirectProduct, EnumerationBudget,
    FiniteGroup, Group, PermutationGroup, DEFAULT_BUDGET,
};
use crate::spectra::{cyclic_spectrum, order_spectrum, pos_verdict, OrderSpectrum};
use crate::symmetric::{an_pos_witness, symmetric_spectrum, Restrict};

pub use document::{Method, OutputDocument};
pub use spec::GroupSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Parser)]
#[command(
    name = "pos-groups",
    version,
    about = "Order spectra and POS checks for finite groups"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Largest group the commands will enumerate element by element.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Reserved. Nothing here is randomized, so this changes nothing.
    #[arg(long, global = true)]
    seed_free: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the order spectrum and decide POS.
    Check { group: String },
    /// Print the order spectrum only.
    Spectrum { group: String },
    /// Compare a family's closed-form table with enumeration.
    Table { family: String },
    /// Non-POS witness for the alternating group A_n.
    Witness { n: u64 },
    /// List feasible group orders in a range.
    Scan {
        #[arg(long, default_value_t = 1)]
        min: u64,
        #[arg(long)]
        max: u64,
    },
    /// Orders exactly divisible by 2, 3 and 7, other than 42, that pass every rule.
    Probe {
        #[arg(long, default_value_t = 1_000_000)]
        bound: u64,
    },
}

/// Process exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded { .. } | Error::TooLarge { .. } => 3,
        Error::Hypothesis(_)
        | Error::NotFermatPrime(_)
        | Error::InvalidTwist { .. }
        | Error::NotCoprime { .. } => 4,
        _ => 2,
    }
}

/// A group built from a spec, plus the closed-form table when the family has one.
#[derive(Debug, Clone)]
pub struct Built {
    pub label: String,
    pub group: FiniteGroup,
    pub predicted: Option<PredictedTable>,
}

pub fn build(spec: &GroupSpec, budget: EnumerationBudget) -> Result<Built> {
    let mut predicted = None;
    let group: FiniteGroup = match spec {
        GroupSpec::Cyclic(n) => CyclicGroup::new(*n)?.into(),
        GroupSpec::Twisted { m, n, z } => make_twisted(*m, *n, *z)?.into(),
        GroupSpec::Metacyclic { m, n, r } => make_metacyclic(*m, *n, *r)?.into(),
        GroupSpec::Thm32 { p, alpha, beta } => {
            let (g, t) = build_theorem32(*p, *alpha, *beta)?;
            predicted = Some(t);
            g.into()
        }
        GroupSpec::Remark5 { alpha, beta } => {
            let (g, t) = build_remark_p5(*alpha, *beta)?;
            predicted = Some(t);
            g.into()
        }
        GroupSpec::C6C7 => {
            let (g, t) = build_c6_c7();
            predicted = Some(t);
            g.into()
        }
        GroupSpec::C2aM21(a) => {
            let d = build_c2a_m21(*a)?;
            DirectProduct::new(
                FiniteGroup::from(d.left().clone()),
                FiniteGroup::from(d.right().clone()),
            )
            .into()
        }
        GroupSpec::Symmetric(n) | GroupSpec::Alternating(n) => {
            if *n == 0 {
                return Err(Error::InvalidArgument("degree must be at least 1".into()));
            }
            let degree = *n as usize;
            if matches!(spec, GroupSpec::Symmetric(_)) {
                PermutationGroup::symmetric(degree).into()
            } else {
                PermutationGroup::alternating(degree).into()
            }
        }
        GroupSpec::Perm { degree, generators } => {
            close_generators(*degree, generators.clone(), budget)?.into()
        }
    };
    Ok(Built {
        label: spec.to_string(),
        group,
        predicted,
    })
}

/// Spectrum by enumeration when the group fits the budget, otherwise by
/// partitions (`sn`, `an`) or the closed form (`cyclic`).
pub fn spectrum_for(
    spec: &GroupSpec,
    built: &Built,
    budget: EnumerationBudget,
) -> Result<(OrderSpectrum, Method)> {
    let fits = built.group.cardinality() <= BigUint::from(budget.max_elements);
    match spec {
        GroupSpec::Symmetric(n) if !fits => {
            Ok((symmetric_spectrum(*n, Restrict::All)?, Method::Partitions))
        }
        GroupSpec::Alternating(n) if !fits => Ok((
            symmetric_spectrum(*n, Restrict::EvenOnly)?,
            Method::Partitions,
        )),
        GroupSpec::Cyclic(n) if !fits => Ok((cyclic_spectrum(*n)?, Method::ClosedForm)),
        _ => Ok((order_spectrum(&built.group, budget)?, Method::Enumeration)),
    }
}

fn parse_spec(text: &str) -> Result<GroupSpec> {
    text.parse()
}

pub fn check_document(spec_text: &str, budget: EnumerationBudget) -> Result<OutputDocument> {
    let spec = parse_spec(spec_text)?;
    let built = build(&spec, budget)?;
    pos_report_document(&spec, &built, budget)
}

/// POS report for an already built group.
pub fn pos_report_document(
    spec: &GroupSpec,
    built: &Built,
    budget: EnumerationBudget,
) -> Result<OutputDocument> {
    let (spectrum, method) = spectrum_for(spec, built, budget)?;
    let report = pos_verdict(&built.label, &spectrum, &built.group.cardinality());
    Ok(OutputDocument::PosReport(document::PosReportDoc::new(
        &report, method,
    )))
}

pub fn spectrum_document(spec_text: &str, budget: EnumerationBudget) -> Result<OutputDocument> {
    let spec = parse_spec(spec_text)?;
    let built = build(&spec, budget)?;
    built_spectrum_document(&spec, &built, budget)
}

/// Spectrum document for an already built group.
pub fn built_spectrum_document(
    spec: &GroupSpec,
    built: &Built,
    budget: EnumerationBudget,
) -> Result<OutputDocument> {
    let (spectrum, method) = spectrum_for(spec, built, budget)?;
    Ok(OutputDocument::Spectrum(document::SpectrumDoc::new(
        &built.label,
        &built.group.cardinality(),
        method,
        &spectrum,
    )))
}

pub fn table_document(spec_text: &str, budget: EnumerationBudget) -> Result<OutputDocument> {
    let spec = parse_spec(spec_text)?;
    if !matches!(
        spec,
        GroupSpec::Thm32 { .. } | GroupSpec::Remark5 { .. } | GroupSpec::C6C7
    ) {
        return Err(Error::Parse(format!(
            "table needs thm32:P,ALPHA,BETA, remark5:ALPHA,BETA or c6c7, got {spec_text:?}"
        )));
    }
    let built = build(&spec, budget)?;
    let predicted = built
        .predicted
        .as_ref()
        .expect("table families carry a prediction");
    let order = built.group.cardinality();
    let enumerated = if order <= BigUint::from(budget.max_elements) {
        Some(order_spectrum(&built.group, budget)?)
    } else {
        None
    };
    Ok(OutputDocument::TableComparison(
        document::TableComparisonDoc::new(&built.label, &order, predicted, enumerated.as_ref()),
    ))
}

pub fn witness_document(n: u64) -> Result<OutputDocument> {
    Ok(OutputDocument::Witness((&an_pos_witness(n)?).into()))
}

pub fn scan_document(min: u64, max: u64) -> Result<OutputDocument> {
    if max == 0 {
        return Err(Error::InvalidArgument("--max must be at least 1".into()));
    }
    let reports = scan(min, max)?;
    Ok(OutputDocument::Feasibility(document::FeasibilityDoc::new(
        min, max, &reports,
    )))
}

/// Report for a single order, feasible or not.
pub fn feasibility_document(n: u64) -> Result<OutputDocument> {
    let report = feasibility_report(n)?;
    Ok(OutputDocument::Feasibility(document::FeasibilityDoc::new(
        n,
        n,
        &[report],
    )))
}

pub fn probe_document(bound: u64) -> Result<OutputDocument> {
    Ok(OutputDocument::Probe(document::ProbeDoc::new(
        bound,
        conjecture_probe(bound)?,
    )))
}

/// Exit status implied by a successful document.
pub fn document_status(doc: &OutputDocument) -> i32 {
    match doc {
        OutputDocument::PosReport(r) if !r.is_pos => 1,
        OutputDocument::TableComparison(t) if t.matches == Some(false) => 1,
        _ => 0,
    }
}

pub fn render(doc: &OutputDocument, format: Format) -> String {
    match format {
        Format::Json => doc.to_json(),
        Format::Csv => render_csv(doc),
        Format::Pretty => render_pretty(doc),
    }
}

fn render_csv(doc: &OutputDocument) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let mut row = |fields: &[&str]| w.write_record(fields).expect("writing to a Vec");
    match doc {
        OutputDocument::Spectrum(s) => {
            row(&["order", "count"]);
            for e in &s.spectrum {
                row(&[&e.order.to_string(), &e.count]);
            }
        }
        OutputDocument::PosReport(r) => {
            row(&["order", "count", "divides_order"]);
            for e in &r.spectrum {
                let ok = !r.violations.iter().any(|v| v.order == e.order);
                row(&[&e.order.to_string(), &e.count, &ok.to_string()]);
            }
        }
        OutputDocument::Witness(x) => {
            row(&[
                "n",
                "decomposition_target",
                "primes",
                "witness_order",
                "witness_count",
                "group_order",
                "divides",
            ]);
            let primes: Vec<String> = x.primes.iter().map(u64::to_string).collect();
            row(&[
                &x.n.to_string(),
                &x.decomposition_target.to_string(),
                &primes.join(" "),
                &x.witness_order,
                &x.witness_count,
                &x.group_order,
                &x.divides.to_string(),
            ]);
        }
        OutputDocument::Feasibility(f) => {
            row(&["n", "feasible", "realized_by", "failed_rules"]);
            for r in &f.records {
                row(&[
                    &r.n.to_string(),
                    &r.feasible.to_string(),
                    r.realized_by.as_deref().unwrap_or(""),
                    &r.failed_rules.join(";"),
                ]);
            }
        }
        OutputDocument::Probe(p) => {
            row(&["n"]);
            for n in &p.survivors {
                row(&[&n.to_string()]);
            }
        }
        OutputDocument::TableComparison(t) => {
            row(&["order", "predicted", "enumerated"]);
            for r in &t.rows {
                row(&[
                    &r.order.to_string(),
                    &r.predicted,
                    r.enumerated.as_deref().unwrap_or(""),
                ]);
            }
        }
    }
    String::from_utf8(w.into_inner().expect("flushing a Vec")).expect("fields are UTF-8")
}

fn render_pretty(doc: &OutputDocument) -> String {
    use std::fmt::Write as _;
    let mut s = String::new();
    match doc {
        OutputDocument::Spectrum(d) => {
            let _ = writeln!(s, "group {} of order {} ({:?})", d.group, d.order, d.method);
            for e in &d.spectrum {
                let _ = writeln!(s, "  order {:>6}: {}", e.order, e.count);
            }
        }
        OutputDocument::PosReport(r) => {
            let _ = writeln!(s, "group {} of order {}", r.group, r.order);
            for e in &r.spectrum {
                let bad = r.violations.iter().any(|v| v.order == e.order);
                let mark = if bad { "  does not divide" } else { "" };
                let _ = writeln!(s, "  order {:>6}: {}{mark}", e.order, e.count);
            }
            let verdict = if r.is_pos { "POS" } else { "not POS" };
            let _ = writeln!(s, "verdict: {verdict}");
        }
        OutputDocument::Witness(w) => {
            let primes: Vec<String> = w.primes.iter().map(u64::to_string).collect();
            let _ = writeln!(
                s,
                "A_{}: {} = {}",
                w.n,
                w.decomposition_target,
                primes.join(" + ")
            );
            let _ = writeln!(
                s,
                "  elements of order {}: {}",
                w.witness_order, w.witness_count
            );
            let _ = writeln!(
                s,
                "  |A_{}| = {}, divides: {}",
                w.n, w.group_order, w.divides
            );
        }
        OutputDocument::Feasibility(f) => {
            let _ = writeln!(
                s,
                "feasible orders in {}..={}: {}",
                f.min,
                f.max,
                f.records.len()
            );
            for r in &f.records {
                let _ = writeln!(
                    s,
                    "  {:>8}  {}",
                    r.n,
                    r.realized_by.as_deref().unwrap_or("-")
                );
            }
        }
        OutputDocument::Probe(p) => {
            let _ = writeln!(s, "survivors up to {}: {}", p.bound, p.survivors.len());
            for n in &p.survivors {
                let _ = writeln!(s, "  {n}");
            }
        }
        OutputDocument::TableComparison(t) => {
            let _ = writeln!(s, "{} of order {}", t.family, t.order);
            let _ = writeln!(
                s,
                "  {:>8} {:>20} {:>20}",
                "order", "predicted", "enumerated"
            );
            for r in &t.rows {
                let e = r.enumerated.as_deref().unwrap_or("skipped");
                let _ = writeln!(s, "  {:>8} {:>20} {:>20}", r.order, r.predicted, e);
            }
            let verdict = match t.matches {
                Some(true) => "match",
                Some(false) => "MISMATCH",
                None => "enumeration skipped",
            };
            let _ = writeln!(s, "{verdict}");
        }
    }
    s
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let budget = EnumerationBudget::new(cli.budget);
    let doc = match &cli.command {
        Command::Check { group } => check_document(group, budget),
        Command::Spectrum { group } => spectrum_document(group, budget),
        Command::Table { family } => table_document(family, budget),
        Command::Witness { n } => witness_document(*n),
        Command::Scan { min, max } => scan_document(*min, *max),
        Command::Probe { bound } => probe_document(*bound),
    };
    match doc {
        Ok(doc) => {
            if out.write_all(render(&doc, cli.format).as_bytes()).is_err() {
                return 2;
            }
            document_status(&doc)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
