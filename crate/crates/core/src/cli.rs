//! Command-line front end. Each command produces a [`Report`]; `main` prints
//! it and maps the outcome to an exit code.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::digroup::{
    backtrack_digroups, decompose, enumerate_digroups, induced_rack_suite, right_group_suite, DigroupAxiom,
    FiniteDigroup, IdentityReport, BACKTRACK_CAP,
};
use crate::error::{Error, Result};
use crate::exactla::{format_rational, Rational, Subspace};
use crate::io::{self, AlgebraFile, DialgebraFile, DigroupFile, ModelFile, RackFile, SubspaceFile};
use crate::leibniz::{check_dialgebra, find_splitting, Dialgebra, DialgebraAxiom, LeibnizAlgebra, Splitting};
use crate::lierack::{
    builtin_model, differentiate, differentiate_exp_ad, DiffOptions, LinearLieGroupModel, BUILTIN_MODELS, TOL_BRACKET,
    TOL_CONJ, TOL_PHI,
};
use crate::numeric::DEFAULT_SEED;
use crate::rack::{FiniteRack, FloatLeibniz, RackAxiom, RackReport, TOL_AXIOM, TOL_RACK};
use crate::report::{Check, Report};
use crate::fixtures;

#[derive(Debug, Parser)]
#[command(name = "leibkit", version, about = "Leibniz algebras, pointed racks and digroups")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Finite-difference step for the second derivative.
    #[arg(long, global = true)]
    pub step: Option<f64>,
    /// Tolerance for the recovered bracket.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Extra candidate ideal for `analyze`.
    #[arg(long, global = true, value_name = "SUBSPACE_FILE")]
    pub ideal: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms of a structure.
    Check {
        #[arg(long, value_enum)]
        kind: Kind,
        /// File path or built-in name.
        source: String,
    },
    /// Squares ideal, ker(ad) and splitting attempts for a Leibniz algebra.
    Analyze { source: String },
    /// Digroup tools.
    Digroup {
        #[arg(value_enum)]
        action: DigroupAction,
        source: String,
        /// Where `rack` writes the induced rack.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Differentiate a linear Lie rack model.
    Diff { source: String },
    /// Count digroups of a given order.
    Enumerate { order: usize },
    /// Differentiate the exp(ad) rack of a Leibniz algebra.
    Expad { source: String },
    /// List built-in names.
    List,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Leibniz,
    Rack,
    Digroup,
    Dialgebra,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DigroupAction {
    Decompose,
    Rack,
    Suite,
}

/// 2 for input problems, 1 for everything else.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Parse(_) | Error::Io(_) | Error::Json(_) | Error::UnknownBuiltin(_) | Error::Dimension(_) | Error::Cap(_) => 2,
        _ => 1,
    }
}

pub fn exit_code(report: &Report) -> i32 {
    if report.passed() {
        0
    } else {
        1
    }
}

fn load<T: serde::de::DeserializeOwned, U>(
    source: &str,
    builtin: impl Fn(&str) -> Option<U>,
    convert: impl Fn(T) -> Result<U>,
) -> Result<U> {
    let path = Path::new(source);
    if path.is_file() {
        return convert(io::read(path)?);
    }
    builtin(source).ok_or_else(|| Error::UnknownBuiltin(source.to_string()))
}

pub fn load_leibniz(source: &str) -> Result<LeibnizAlgebra> {
    load(source, fixtures::leibniz, |f: AlgebraFile| f.to_algebra())
}

pub fn load_dialgebra(source: &str) -> Result<Dialgebra> {
    load(source, fixtures::dialgebra, |f: DialgebraFile| f.to_dialgebra())
}

pub fn load_rack(source: &str) -> Result<FiniteRack> {
    load(source, fixtures::rack, |f: RackFile| f.to_rack())
}

pub fn load_digroup(source: &str) -> Result<FiniteDigroup> {
    load(source, fixtures::digroup, |f: DigroupFile| f.to_digroup())
}

pub fn load_model(source: &str) -> Result<LinearLieGroupModel> {
    let path = Path::new(source);
    if path.is_file() {
        return io::read::<ModelFile>(path)?.to_model();
    }
    builtin_model(source)
}

/// `2 e1 - 1/2 e3`, or `0`.
pub fn format_combination(names: &[String], v: &[Rational]) -> String {
    let mut out = String::new();
    for (name, c) in names.iter().zip(v) {
        if c == &Rational::from_integer(0.into()) {
            continue;
        }
        let neg = c < &Rational::from_integer(0.into());
        let mag = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            out.push_str(if neg { "-" } else { "" });
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag != Rational::from_integer(1.into()) {
            out.push_str(&format_rational(&mag));
            out.push(' ');
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn format_basis(names: &[String], s: &Subspace) -> String {
    let parts: Vec<String> = s.basis().iter().map(|v| format_combination(names, v)).collect();
    format!("{{{}}}", parts.join(", "))
}

fn format_float_constants(g: &FloatLeibniz, names: &[String], cutoff: f64) -> String {
    let n = g.dim();
    let mut parts = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut terms = Vec::new();
            for k in 0..n {
                let c = g.constant(i, j, k);
                if c.abs() > cutoff {
                    terms.push(format!("{c} {}", names[k]));
                }
            }
            if !terms.is_empty() {
                parts.push(format!("[{}, {}] = {}", names[i], names[j], terms.join(" + ")));
            }
        }
    }
    if parts.is_empty() {
        "all zero".into()
    } else {
        parts.join("; ")
    }
}

fn leibniz_check(g: &LeibnizAlgebra) -> Check {
    let names = g.names();
    let report = g.check_leibniz();
    let witnesses = report
        .violations
        .iter()
        .map(|v| {
            format!("({}, {}, {}): residual {}", names[v.i], names[v.j], names[v.k], format_combination(names, &v.residual))
        })
        .collect();
    Check::from_witnesses("Leibniz identity [x,[y,z]] = [[x,y],z] + [y,[x,z]]", witnesses)
}

pub fn cmd_check_leibniz(subject: &str, g: &LeibnizAlgebra) -> Report {
    let mut r = Report::new(format!("check leibniz: {subject}"));
    r.info("dim", g.dim());
    r.info("skew-symmetric", if g.is_skew() { "yes" } else { "no" });
    r.push(leibniz_check(g));
    r
}

pub fn rack_checks(r: &mut Report, report: &RackReport) {
    for axiom in RackAxiom::ALL {
        let w = report.of(axiom).map(|v| format!("{:?}", v.witness)).collect();
        r.push(Check::from_witnesses(axiom.label(), w));
    }
}

pub fn cmd_check_rack(subject: &str, q: &FiniteRack) -> Result<Report> {
    let mut r = Report::new(format!("check rack: {subject}"));
    r.info("size", q.size()).info("point", q.point());
    rack_checks(&mut r, &q.check_with_cap(crate::rack::DEFAULT_SIZE_CAP)?);
    Ok(r)
}

pub fn cmd_check_digroup(subject: &str, g: &FiniteDigroup) -> Report {
    let mut r = Report::new(format!("check digroup: {subject}"));
    let report = g.check();
    r.info("size", g.size()).info("unit", g.unit());
    r.info("group (⊢ = ⊣)", if report.is_group { "yes" } else { "no" });
    if !report.ambiguous_inverses.is_empty() {
        r.info("elements with several G6 inverses", format!("{:?}", report.ambiguous_inverses));
    }
    for axiom in DigroupAxiom::ALL {
        let w = report.of(axiom).map(|v| format!("{:?}", v.witness)).collect();
        r.push(Check::from_witnesses(axiom.label(), w));
    }
    r
}

pub fn cmd_check_dialgebra(subject: &str, d: &Dialgebra) -> Report {
    let mut r = Report::new(format!("check dialgebra: {subject}"));
    r.info("dim", d.dim());
    let report = check_dialgebra(d);
    let names = d.names();
    let labels = |a: DialgebraAxiom| match a {
        DialgebraAxiom::AssocVdash => "⊢ associative",
        DialgebraAxiom::AssocDashv => "⊣ associative",
        DialgebraAxiom::D1 => "D1 x⊢(y⊣z) = (x⊢y)⊣z",
        DialgebraAxiom::D2 => "D2 x⊣(y⊢z) = x⊣(y⊣z)",
        DialgebraAxiom::D3 => "D3 (x⊣y)⊢z = (x⊢y)⊢z",
    };
    for axiom in DialgebraAxiom::ALL {
        let w = report
            .violations
            .iter()
            .filter(|v| v.axiom == axiom)
            .map(|v| format!("({}, {}, {}): residual {}", names[v.i], names[v.j], names[v.k], format_combination(names, &v.residual)))
            .collect();
        r.push(Check::from_witnesses(labels(axiom), w));
    }
    r
}

fn split_outcome(r: &mut Report, g: &LeibnizAlgebra, label: &str, e: &Subspace) -> Result<()> {
    let names = g.names();
    match find_splitting(g, e) {
        Ok(Some(h)) => {
            r.info(format!("split over {label}"), format!("yes, complement {}", format_basis(names, &h)));
            let split = Splitting::new(g, e.clone(), h)?;
            r.push(Check::new(format!("rebuilt demisemidirect product equals input ({label})"), split.rebuild_matches(g)?));
        }
        Ok(None) => {
            r.info(format!("split over {label}"), "no splitting");
        }
        Err(Error::SplitPrecondition(why)) => {
            r.info(format!("split over {label}"), format!("not attempted, {why}"));
        }
        Err(e) => return Err(e),
    }
    Ok(())
}

pub fn cmd_analyze(subject: &str, g: &LeibnizAlgebra, ideal: Option<&Subspace>) -> Result<Report> {
    let mut r = Report::new(format!("analyze: {subject}"));
    r.info("dim", g.dim());
    let check = leibniz_check(g);
    let ok = check.passed;
    r.push(check);
    if !ok {
        return Ok(r);
    }
    let names = g.names();
    let s = g.squares_ideal()?;
    let k = g.ker_ad();
    r.info("dim S", s.dim()).info("S", format_basis(names, &s));
    r.info("dim ker(ad)", k.dim()).info("ker(ad)", format_basis(names, &k));
    split_outcome(&mut r, g, "S", &s)?;
    split_outcome(&mut r, g, "ker(ad)", &k)?;
    if let Some(e) = ideal {
        if e.ambient_dim() != g.dim() {
            return Err(Error::Dimension(format!("ideal lives in dimension {}, algebra has {}", e.ambient_dim(), g.dim())));
        }
        r.info("ideal", format_basis(names, e));
        r.info(
            "ideal sandwich",
            format!(
                "is ideal: {}, S ⊆ E: {}, E ⊆ ker(ad): {}",
                yes_no(g.is_ideal(e)?),
                yes_no(s.is_subspace_of(e)),
                yes_no(e.is_subspace_of(&k))
            ),
        );
        split_outcome(&mut r, g, "ideal", e)?;
    }
    Ok(r)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn identity_checks(r: &mut Report, report: &IdentityReport) {
    for c in &report.checks {
        let w = c.witnesses.iter().map(|w| format!("{w:?}")).collect::<Vec<_>>();
        let mut check = Check::new(c.name.clone(), c.passed());
        check.witnesses = w;
        r.push(check);
    }
}

/// Fails with the digroup report when `g` is not a digroup.
fn require(subject: &str, g: &FiniteDigroup) -> std::result::Result<(), Report> {
    let report = cmd_check_digroup(subject, g);
    if report.passed() {
        Ok(())
    } else {
        Err(report)
    }
}

pub fn cmd_decompose(subject: &str, g: &FiniteDigroup) -> Result<Report> {
    if let Err(r) = require(subject, g) {
        return Ok(r);
    }
    let mut r = Report::new(format!("digroup decompose: {subject}"));
    r.push(Check::new("G1–G6", true));
    let d = decompose(g)?;
    let j = &d.inverse_group;
    r.info("|G|", g.size()).info("|E|", d.bar_units.len()).info("|J|", j.elements.len());
    r.info("E", format!("{:?}", d.bar_units)).info("J", format!("{:?}", j.elements));
    r.info("J abelian", yes_no(j.group.is_abelian()));
    r.info("projections onto E differ", yes_no(d.projections_differ()));
    let table: Vec<String> =
        (0..g.size()).map(|x| d.coordinates(x).map_or(format!("{x} ↦ ?"), |(a, b)| format!("{x} ↦ ({}, {})", d.bar_units[a], j.elements[b]))).collect();
    r.info("isomorphism G → E × J", table.join(", "));
    r.push(Check::new(format!("θ(u,h) = u⊣h intertwines ⊢ and ⊣ on all {} pairs", d.pairs_checked), true));
    Ok(r)
}

pub fn cmd_digroup_suite(subject: &str, g: &FiniteDigroup) -> Result<Report> {
    if let Err(r) = require(subject, g) {
        return Ok(r);
    }
    let mut r = Report::new(format!("digroup suite: {subject}"));
    r.push(Check::new("G1–G6", true));
    identity_checks(&mut r, &right_group_suite(g)?);
    let (q, rack_report, ids) = induced_rack_suite(g)?;
    r.info("induced rack size", q.size());
    rack_checks(&mut r, &rack_report);
    identity_checks(&mut r, &ids);
    Ok(r)
}

pub fn cmd_digroup_rack(subject: &str, g: &FiniteDigroup, out: Option<&Path>) -> Result<Report> {
    if let Err(r) = require(subject, g) {
        return Ok(r);
    }
    let mut r = Report::new(format!("digroup rack: {subject}"));
    let (q, rack_report, _) = induced_rack_suite(g)?;
    r.info("rack", serde_json::to_string(&RackFile::from_rack(&q))?);
    if let Some(path) = out {
        std::fs::write(path, io::to_json(&RackFile::from_rack(&q))?)?;
        r.info("written to", path.display());
    }
    rack_checks(&mut r, &rack_report);
    Ok(r)
}

pub fn diff_options(cli_seed: u64, step: Option<f64>) -> DiffOptions {
    let mut o = DiffOptions { seed: cli_seed, ..DiffOptions::default() };
    if let Some(s) = step {
        o.step_bracket = s;
    }
    o
}

fn lie_names(d: usize, k: usize) -> Vec<String> {
    (0..d).map(|i| format!("v{}", i + 1)).chain((0..k).map(|i| format!("X{}", i + 1))).collect()
}

pub fn cmd_diff(subject: &str, m: &LinearLieGroupModel, opts: &DiffOptions, tol: f64) -> Result<Report> {
    let mut r = Report::new(format!("diff: {subject}"));
    r.info("module dim", m.module_dim()).info("lie dim", m.lie_dim()).info("ambient", m.ambient());
    r.info("seed", opts.seed).info("step (Φ)", opts.step_phi).info("step (bracket)", opts.step_bracket);
    r.info("samples", opts.samples);
    let s = differentiate(m, opts)?;
    let names = lie_names(m.module_dim(), m.lie_dim());
    r.info("estimated bracket", format_float_constants(&s.estimated.constants, &names, tol));
    r.push(Check::residual("bracket against Xv + [X,Y]", s.bracket_deviation, tol));
    r.push(Check::residual("Leibniz residual of estimate", s.leibniz_residual, tol));
    r.push(Check::residual("Φ finite difference against closed form", s.phi_residual, TOL_PHI));
    r.push(Check::residual("Φ(x) preserves the bracket", s.phi_aut_residual, TOL_PHI));
    r.push(Check::residual("x⊢y⊣x⁻¹ = x∘y", s.conjugation_residual, TOL_CONJ));
    r.push(Check::residual("left distributivity", s.distributivity_residual, TOL_RACK));
    r.push(Check::residual("Φ((0, exp X)) restricts to Ad(exp X)", s.subrack_phi_residual, TOL_PHI));
    Ok(r)
}

pub fn cmd_expad(subject: &str, g: &LeibnizAlgebra, opts: &DiffOptions, tol: f64) -> Result<Report> {
    let mut r = Report::new(format!("expad: {subject}"));
    let check = leibniz_check(g);
    let ok = check.passed;
    r.push(check);
    if !ok {
        return Ok(r);
    }
    r.info("dim", g.dim()).info("seed", opts.seed).info("step (bracket)", opts.step_bracket);
    let s = differentiate_exp_ad(g, opts)?;
    r.info("estimated bracket", format_float_constants(&s.estimated.constants, g.names(), tol));
    r.push(Check::residual("recovered bracket against input", s.bracket_deviation, tol));
    r.push(Check::residual("Leibniz residual of estimate", s.leibniz_residual, tol));
    r.push(Check::residual("left distributivity, 100 seeded triples", s.distributivity_residual, TOL_RACK));
    r.push(Check::residual("exp(ad(X∘Y)) = exp(ad X) exp(ad Y) exp(-ad X)", s.chain_residual, TOL_AXIOM));
    Ok(r)
}

fn format_counts(m: &std::collections::BTreeMap<(usize, usize), usize>) -> String {
    let parts: Vec<String> = m.iter().map(|((e, j), c)| format!("|E|={e},|J|={j}: {c}")).collect();
    parts.join("; ")
}

pub fn cmd_enumerate(order: usize) -> Result<Report> {
    let mut r = Report::new(format!("enumerate: order {order}"));
    let st = enumerate_digroups(order)?;
    r.info("classes (structure theorem)", st.classes.len());
    r.info("by factorization", format_counts(&st.by_factorization));
    if order <= BACKTRACK_CAP {
        let bt = backtrack_digroups(order)?;
        r.info("⊢ tables", bt.vdash_tables).info("labeled {G1,G2,G5,G6} tables", bt.labeled);
        r.info("classes (backtracking)", bt.classes.len());
        let mut c = Check::new("every {G1,G2,G5,G6} table satisfies G3 and G4", bt.g3_g4_failures == 0);
        if bt.g3_g4_failures > 0 {
            c = c.with_witness(format!("{} failing tables", bt.g3_g4_failures));
        }
        r.push(c);
        let agree = bt.classes == st.classes;
        let mut c = Check::new("backtracking and structure-theorem classes agree", agree);
        if !agree {
            c = c.with_witness(format!("{} vs {}", format_counts(&bt.by_factorization), format_counts(&st.by_factorization)));
        }
        r.push(c);
    } else {
        r.info("backtracking", format!("skipped above order {BACKTRACK_CAP}"));
    }
    Ok(r)
}

pub fn cmd_list() -> Report {
    let mut r = Report::new("built-in names");
    r.info("leibniz", fixtures::LEIBNIZ.join(", "));
    r.info("dialgebra", fixtures::DIALGEBRA.join(", "));
    r.info("rack", fixtures::RACK.join(", "));
    r.info("digroup", fixtures::DIGROUP.join(", "));
    r.info("model", BUILTIN_MODELS.join(", "));
    r
}

pub fn run(cli: &Cli) -> Result<Report> {
    let tol = cli.tol.unwrap_or(TOL_BRACKET);
    if let Some(s) = cli.step {
        if !(s.is_finite() && s > 0.0) {
            return Err(Error::Parse(format!("--step must be positive, got {s}")));
        }
    }
    match &cli.command {
        Command::Check { kind, source } => match kind {
            Kind::Leibniz => Ok(cmd_check_leibniz(source, &load_leibniz(source)?)),
            Kind::Rack => cmd_check_rack(source, &load_rack(source)?),
            Kind::Digroup => Ok(cmd_check_digroup(source, &load_digroup(source)?)),
            Kind::Dialgebra => Ok(cmd_check_dialgebra(source, &load_dialgebra(source)?)),
        },
        Command::Analyze { source } => {
            let g = load_leibniz(source)?;
            let ideal = cli.ideal.as_deref().map(|p| io::read::<SubspaceFile>(p)?.to_subspace()).transpose()?;
            cmd_analyze(source, &g, ideal.as_ref())
        }
        Command::Digroup { action, source, out } => {
            let g = load_digroup(source)?;
            match action {
                DigroupAction::Decompose => cmd_decompose(source, &g),
                DigroupAction::Rack => cmd_digroup_rack(source, &g, out.as_deref()),
                DigroupAction::Suite => cmd_digroup_suite(source, &g),
            }
        }
        Command::Diff { source } => cmd_diff(source, &load_model(source)?, &diff_options(cli.seed, cli.step), tol),
        Command::Enumerate { order } => cmd_enumerate(*order),
        Command::Expad { source } => cmd_expad(source, &load_leibniz(source)?, &diff_options(cli.seed, cli.step), tol),
        Command::List => Ok(cmd_list()),
    }
}

/// Runs the command line and returns the process exit code.
pub fn main_with(cli: &Cli) -> i32 {
    match run(cli) {
        Ok(report) => {
            let text = if cli.json {
                match report.to_json() {
                    Ok(s) => s,
                    Err(e) => {
                        eprintln!("error: {e}");
                        return 1;
                    }
                }
            } else {
                report.to_string()
            };
            // A closed pipe is not an error for the verdict.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            exit_code(&report)
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::frac;

    fn cli(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("leibkit").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn combinations_print_compactly() {
        let names: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        assert_eq!(format_combination(&names, &[frac(2, 1), frac(0, 1), frac(-1, 2)]), "2 a - 1/2 c");
        assert_eq!(format_combination(&names, &[frac(-1, 1), frac(1, 1), frac(0, 1)]), "-a + b");
        assert_eq!(format_combination(&names, &[frac(0, 1), frac(0, 1), frac(0, 1)]), "0");
    }

    #[test]
    fn analyze_example_2_2() {
        let r = run(&cli(&["analyze", "ex2.2"])).unwrap();
        assert!(r.passed());
        assert_eq!(r.info_value("dim S"), Some("1"));
        assert_eq!(r.info_value("S"), Some("{v1}"));
        assert_eq!(r.info_value("dim ker(ad)"), Some("2"));
        assert_eq!(r.info_value("split over S"), Some("no splitting"));
        assert!(r.info_value("split over ker(ad)").unwrap().starts_with("yes"));
    }

    #[test]
    fn analyze_heisenberg_twist_has_no_splitting() {
        let r = run(&cli(&["analyze", "heisenberg-dtwist"])).unwrap();
        assert!(r.passed());
        assert_eq!(r.info_value("split over S"), Some("no splitting"));
        assert_eq!(r.info_value("split over ker(ad)"), Some("no splitting"));
    }

    #[test]
    fn unknown_builtin_is_a_parse_failure() {
        let e = run(&cli(&["check", "--kind", "rack", "no-such-rack"])).unwrap_err();
        assert_eq!(exit_code_for(&e), 2);
        assert_eq!(exit_code_for(&Error::Cap("9".into())), 2);
        assert_eq!(exit_code_for(&Error::Singular), 1);
    }

    #[test]
    fn decompose_order6() {
        let r = run(&cli(&["digroup", "decompose", "order6-standard"])).unwrap();
        assert!(r.passed());
        assert_eq!(r.info_value("|E|"), Some("3"));
        assert_eq!(r.info_value("|J|"), Some("2"));
        let r = run(&cli(&["digroup", "decompose", "s3-group"])).unwrap();
        assert_eq!(r.info_value("|E|"), Some("1"));
    }

    #[test]
    fn mutated_digroup_fails_with_witness() {
        let r = run(&cli(&["check", "--kind", "digroup", "order6-mutated"])).unwrap();
        assert!(!r.passed());
        assert!(r.checks.iter().any(|c| !c.passed && !c.witnesses.is_empty()));
        let r = run(&cli(&["digroup", "suite", "order6-mutated"])).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn enumerate_small() {
        let r = run(&cli(&["enumerate", "2"])).unwrap();
        assert!(r.passed());
        assert_eq!(r.info_value("classes (structure theorem)"), Some("2"));
        assert!(run(&cli(&["enumerate", "9"])).is_err());
    }

    #[test]
    fn diff_abelian_is_zero() {
        let r = run(&cli(&["diff", "abelian-trivial"])).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.info_value("estimated bracket"), Some("all zero"));
    }

    #[test]
    fn bad_step_rejected() {
        assert!(run(&cli(&["--step=-1", "diff", "so3-standard"])).is_err());
    }
}
