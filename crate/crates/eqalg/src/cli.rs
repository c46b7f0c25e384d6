//! Command-line surface.
//!
//! Exit codes: 0 all checks passed, 1 a check failed, 2 input or usage
//! error, 3 resource budget exceeded.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_rational::BigRational;

use crate::algebra::{Flag, FiniteEqAlgebra};
use crate::cones;
use crate::dedsys::{self, ElementSet};
use crate::error::{Error, Result};
use crate::fileformat::{parse_algebra, serialize_algebra, serialize_bck};
use crate::report::{AxiomReport, Report};
use crate::search;
use crate::states;
use crate::translate;

#[derive(Parser)]
#[command(
    name = "eqalg",
    version,
    about = "Finite-model workbench for pseudo equality algebras"
)]
struct Cli {
    /// Emit the machine-readable SECTION.KEY=VALUE dump instead of human text.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the defining axioms and the derived-identity suite.
    Check { file: PathBuf },
    /// Classify order, lattice, invariance, commutativity, symmetry, simplicity.
    Analyze { file: PathBuf },
    /// Translate to the pseudo BCK-meet-semilattice and optionally round-trip.
    Translate {
        file: PathBuf,
        /// Also check the round-trip identities and the invariance criterion.
        #[arg(long)]
        roundtrip: bool,
    },
    /// Enumerate deductive systems. Filters are conjunctive.
    Ds {
        file: PathBuf,
        #[arg(long)]
        normal: bool,
        #[arg(long)]
        commutative: bool,
        #[arg(long)]
        closed: bool,
    },
    /// Quotient by a normal deductive system.
    Quotient {
        file: PathBuf,
        /// Elements of the deductive system, comma separated.
        #[arg(long, value_name = "e1,e2,...")]
        ds: String,
    },
    /// Exact cone of measures.
    Measures {
        file: PathBuf,
        /// Also test each cone generator for the measure-morphism property.
        #[arg(long)]
        morphisms: bool,
    },
    /// Exact cone of pseudo-valuations.
    Valuations {
        file: PathBuf,
        /// Use the commutative pseudo-valuation constraints.
        #[arg(long)]
        commutative: bool,
    },
    /// Enumerate internal state operators.
    States {
        file: PathBuf,
        #[arg(long)]
        type1: bool,
        #[arg(long)]
        type2: bool,
        #[arg(long)]
        morphism: bool,
    },
    /// Stream every algebra of a given size, up to isomorphism.
    Search {
        #[arg(long)]
        size: usize,
        /// Keep only algebras satisfying all of these predicates.
        #[arg(long, value_delimiter = ',')]
        require: Vec<String>,
        /// Drop algebras satisfying any of these predicates.
        #[arg(long, value_delimiter = ',')]
        forbid: Vec<String>,
    },
    /// Run every theorem suite applicable to an instance and print a
    /// law-by-law pass/fail table.
    #[command(name = "verify-paper")]
    VerifyPaper { file: PathBuf },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Resource(_) => 3,
        Error::CongruenceFailure(_) => 1,
        _ => 2,
    }
}

fn load(path: &Path) -> Result<FiniteEqAlgebra> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Error::InvalidInput(format!("cannot read {}: {e}", path.display()))
    })?;
    parse_algebra(&text)
}

fn witness_names(alg: &FiniteEqAlgebra, witness: &[usize]) -> String {
    let names: Vec<&str> = witness.iter().map(|&i| alg.name(i)).collect();
    format!("({})", names.join(", "))
}

fn put_violations(rep: &mut Report, section: &str, alg: &FiniteEqAlgebra, r: &AxiomReport) {
    rep.put(section, "passed", r.passed());
    for v in &r.violations {
        let mut line = witness_names(alg, &v.witness);
        if !v.detail.is_empty() {
            line = format!("{line} {}", v.detail);
        }
        rep.put(section, &v.label, line);
    }
}

fn put_flag(rep: &mut Report, section: &str, key: &str, alg: &FiniteEqAlgebra, flag: &Flag) {
    let value = match (&flag.holds, &flag.witness) {
        (false, Some(w)) if !w.is_empty() => {
            format!("false, witness {}", witness_names(alg, w))
        }
        _ => flag.holds.to_string(),
    };
    rep.put(section, key, value);
}

fn ray_display(v: &[BigRational]) -> String {
    let cells: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", cells.join(", "))
}

fn cmd_check(file: &Path) -> Result<(i32, Report)> {
    let alg = load(file)?;
    let mut rep = Report::new();
    let axioms = alg.verify_axioms()?;
    put_violations(&mut rep, "axioms", &alg, &axioms);
    if !axioms.passed() {
        return Ok((1, rep));
    }
    let identities = alg.identity_suite()?;
    put_violations(&mut rep, "identities", &alg, &identities);
    Ok((if identities.passed() { 0 } else { 1 }, rep))
}

fn cmd_analyze(file: &Path) -> Result<(i32, Report)> {
    let alg = load(file)?;
    let mut rep = Report::new();
    let axioms = alg.verify_axioms()?;
    if !axioms.passed() {
        put_violations(&mut rep, "axioms", &alg, &axioms);
        return Ok((1, rep));
    }
    let c = alg.classify()?;
    // Cross-check the equational criterion against the round-trip comparison.
    let invariant = translate::check_invariant(&alg)?;
    put_flag(&mut rep, "classification", "bounded", &alg, &c.is_bounded);
    put_flag(&mut rep, "classification", "lattice", &alg, &c.is_lattice);
    put_flag(
        &mut rep,
        "classification",
        "distributive_lattice",
        &alg,
        &c.is_distributive_lattice,
    );
    put_flag(&mut rep, "classification", "linear", &alg, &c.is_linear);
    put_flag(&mut rep, "classification", "invariant", &alg, &invariant);
    put_flag(&mut rep, "classification", "commutative", &alg, &c.is_commutative);
    put_flag(&mut rep, "classification", "symmetric", &alg, &c.is_symmetric);
    rep.put("classification", "simple", dedsys::is_simple(&alg)?);
    Ok((0, rep))
}

fn cmd_translate(file: &Path, roundtrip: bool) -> Result<(i32, Report)> {
    let alg = load(file)?;
    let b = translate::psi(&alg)?;
    let mut rep = Report::new();
    rep.put("bck", "tables", serialize_bck(&b));
    put_flag(&mut rep, "bck", "pC", &alg, &b.check_pc()?);
    put_flag(&mut rep, "bck", "pD", &alg, &b.check_pd()?);
    put_flag(&mut rep, "bck", "commutative", &alg, &b.check_bck_commutative()?);
    rep.put("bck", "linear", b.is_linear());
    if !roundtrip {
        return Ok((0, rep));
    }
    let suite = translate::roundtrip_suite(&alg)?;
    put_violations(&mut rep, "roundtrip", &alg, &suite);
    put_flag(&mut rep, "roundtrip", "invariant", &alg, &translate::check_invariant(&alg)?);
    Ok((if suite.passed() { 0 } else { 1 }, rep))
}

fn cmd_ds(file: &Path, normal: bool, commutative: bool, closed: bool) -> Result<(i32, Report)> {
    let alg = load(file)?;
    let mut rep = Report::new();
    let mut count = 0usize;
    for rec in dedsys::enumerate_ds(&alg)? {
        if (normal && !rec.is_normal)
            || (commutative && !rec.is_commutative)
            || (closed && !rec.is_closed)
        {
            continue;
        }
        let mut flags = Vec::new();
        for (on, name) in [
            (rec.is_closed, "closed"),
            (rec.is_normal, "normal"),
            (rec.is_commutative, "commutative"),
            (rec.is_proper, "proper"),
            (rec.is_maximal, "maximal"),
        ] {
            if on {
                flags.push(name);
            }
        }
        rep.put("ds", &rec.set.render(&alg), flags.join(" "));
        count += 1;
    }
    rep.put("ds", "count", count);
    Ok((0, rep))
}

fn cmd_quotient(file: &Path, ds: &str) -> Result<(i32, Report)> {
    let alg = load(file)?;
    let mut elems = Vec::new();
    for name in ds.split(',').filter(|s| !s.is_empty()) {
        let idx = alg
            .names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::InvalidInput(format!("unknown element `{name}`")))?;
        elems.push(idx);
    }
    let h = ElementSet::from_elems(alg.n, &elems);
    let q = dedsys::congruence_of(&alg, &h)?;
    let mut rep = Report::new();
    for (i, class) in q.classes.iter().enumerate() {
        rep.put(
            "classes",
            &format!("class.{i}"),
            ElementSet::from_elems(alg.n, class).render(&alg),
        );
    }
    rep.put("quotient", "tables", serialize_algebra(&q.algebra));
    put_flag(&mut rep, "quotient", "commutative", &q.algebra, &q.algebra.commutativity_flag());
    Ok((0, rep))
}

fn put_cone(rep: &mut Report, section: &str, cone: &crate::dd::RationalCone) {
    rep.put(section, "dim", cone.dim);
    rep.put(section, "lineality_dim", cone.lineality.len());
    for (i, v) in cone.lineality.iter().enumerate() {
        rep.put(section, &format!("lineality.{i}"), ray_display(v));
    }
    rep.put(section, "ray_count", cone.rays.len());
    for (i, r) in cone.rays.iter().enumerate() {
        rep.put(section, &format!("ray.{i}"), ray_display(r));
    }
}

fn cmd_measures(file: &Path, morphisms: bool) -> Result<(i32, Report)> {
    let alg = load(file)?;
    require_valid(&alg)?;
    let cone = cones::measure_cone(&alg);
    let mut rep = Report::new();
    put_cone(&mut rep, "measures", &cone);
    if morphisms {
        for (i, f) in cones::generator_fns(&cone).iter().enumerate() {
            rep.put(
                "morphisms",
                &format!("generator.{i}"),
                format!(
                    "{} morphism={}",
                    ray_display(&f.values),
                    cones::is_measure_morphism(&alg, f)
                ),
            );
        }
    }
    Ok((0, rep))
}

fn cmd_valuations(file: &Path, commutative: bool) -> Result<(i32, Report)> {
    let alg = load(file)?;
    require_valid(&alg)?;
    let cone = cones::valuation_cone(&alg, commutative);
    let mut rep = Report::new();
    put_cone(
        &mut rep,
        if commutative { "commutative_valuations" } else { "valuations" },
        &cone,
    );
    Ok((0, rep))
}

fn cmd_states(file: &Path, type1: bool, type2: bool, morphism: bool) -> Result<(i32, Report)> {
    let alg = load(file)?;
    let mut rep = Report::new();
    let mut count = 0usize;
    for op in states::enumerate_states(&alg)? {
        if (type1 && !op.type_one) || (type2 && !op.type_two) || (morphism && !op.morphism) {
            continue;
        }
        let mut flags = Vec::new();
        for (on, name) in [
            (op.type_one, "type1"),
            (op.type_two, "type2"),
            (op.morphism, "morphism"),
            (op.faithful, "faithful"),
        ] {
            if on {
                flags.push(name);
            }
        }
        rep.put(
            "states",
            &format!("state.{count}"),
            format!("[{}] {}", op.render(&alg), flags.join(" ")),
        );
        count += 1;
    }
    rep.put("states", "count", count);
    Ok((0, rep))
}

fn cmd_search(size: usize, require: &[String], forbid: &[String]) -> Result<String> {
    for name in require.iter().chain(forbid) {
        if !search::PREDICATE_NAMES.contains(&name.as_str()) {
            return Err(Error::InvalidInput(format!(
                "unknown predicate `{name}`; known: {}",
                search::PREDICATE_NAMES.join(", ")
            )));
        }
    }
    let mut out = String::new();
    let mut first = true;
    for alg in search::enumerate_algebras(size)? {
        let mut keep = true;
        for name in require {
            keep &= search::eval_predicate(name, &alg)?;
        }
        for name in forbid {
            keep &= !search::eval_predicate(name, &alg)?;
        }
        if !keep {
            continue;
        }
        if !first {
            out.push_str("---\n");
        }
        first = false;
        out.push_str(&serialize_algebra(&alg));
    }
    Ok(out)
}

fn require_valid(alg: &FiniteEqAlgebra) -> Result<()> {
    let r = alg.verify_axioms()?;
    if !r.passed() {
        return Err(Error::InvalidInput(format!(
            "not a pseudo equality algebra: {} fails",
            r.violations[0].label
        )));
    }
    Ok(())
}

/// Every law label printed by `verify-paper`, in paper order.
const PAPER_LAWS: &[&str] = &[
    "A1", "A2", "A3", "A4", "A5", "A6", "A7",
    "Prop 2.2(1)", "Prop 2.2(2)",
    "Prop 2.3(1)", "Prop 2.3(2)", "Prop 2.3(3)", "Prop 2.3(4)", "Prop 2.3(5)",
    "Prop 2.3(6)", "Prop 2.3(7)", "Prop 2.3(8)", "Prop 2.3(9)", "Prop 2.3(10)",
    "Prop 2.3(11)", "Prop 2.3(12)", "Prop 2.3(13)", "Prop 2.3(14)", "Prop 2.3(15)",
    "Prop 2.3(16)",
    "Prop 2.4(1)", "Prop 2.4(2)", "Prop 2.4(3)", "Prop 2.4(4)", "Prop 2.4(5)",
    "Prop 2.5(1)", "Prop 2.5(2)",
    "Prop 2.6(1)", "Prop 2.6(2)",
    "Prop 2.7(1)", "Prop 2.7(2)", "Prop 2.7(3)", "Prop 2.7(4)",
    "Prop 2.8(1)", "Prop 2.8(2)", "Prop 2.8(3)", "Prop 2.8(4)", "Prop 2.8(5)",
    "Prop 2.8(6)",
    "Lemma 2.9", "Prop 2.10", "Theorem 2.11",
    "Theorem 2.12(1)", "Theorem 2.12(2)", "Theorem 2.12(3)", "Prop 2.13",
    "Lemma 2.14",
    "Theorem 3.7", "Prop 3.2", "Cor 3.3", "Prop 3.5", "Prop 3.8(1)", "Prop 3.8(2)",
    "Rem 3.6",
    "Prop 4.2", "Theorem 4.3", "Prop 4.4", "Cor 4.5", "Theorem 4.6",
    "Prop 4.7(1)", "Prop 4.7(2)", "Cor 4.8", "Cor 4.9", "Cor 4.10",
    "Prop 5.2(1)", "Prop 5.2(2)", "Prop 5.2(3)", "Prop 5.2(4)", "Prop 5.2(5)",
    "Prop 5.3(1)", "Prop 5.3(2)", "Prop 5.3(3)",
    "Prop 5.6", "Theorem 5.7", "Prop 5.10",
    "Theorem 5.11(1)", "Theorem 5.11(2)", "Cor 5.12",
    "Theorem 5.13(1)", "Theorem 5.13(2)", "Cor 5.14",
    "Prop 5.15(1)", "Prop 5.15(2)", "Prop 5.15(3)", "Prop 5.15(4)", "Prop 5.15(5)",
    "Prop 5.15(6)", "Prop 5.15(7)",
    "Prop 5.16", "Prop 5.17(1)", "Prop 5.17(2)", "Theorem 5.18",
    "Prop 6.2(1)", "Prop 6.2(2)", "Prop 6.2(3)",
    "Prop 6.4", "Prop 6.7", "Prop 6.8", "Rem 6.9",
];

fn cmd_verify_paper(file: &Path) -> Result<(i32, Report)> {
    let alg = load(file)?;
    let mut rep = Report::new();
    let axioms = alg.verify_axioms()?;
    if !axioms.passed() {
        put_violations(&mut rep, "axioms", &alg, &axioms);
        return Ok((1, rep));
    }

    let mut combined = AxiomReport::new();
    combined.absorb(axioms);
    combined.absorb(alg.identity_suite()?);
    combined.absorb(translate::roundtrip_suite(&alg)?);
    combined.absorb(translate::commutativity_suite(&alg)?);
    combined.absorb(dedsys::commutative_ds_suite(&alg)?);
    combined.absorb(dedsys::check_quotient_commutativity_theorem(&alg)?);
    combined.absorb(dedsys::ds_consequences_suite(&alg)?);
    combined.absorb(cones::measure_suite(&alg)?);
    combined.absorb(cones::valuation_suite(&alg)?);
    combined.absorb(cones::translation_suite(&alg)?);
    combined.absorb(states::state_properties_suite(&alg)?);

    let mut failing = 0usize;
    for &law in PAPER_LAWS {
        let bad: Vec<_> =
            combined.violations.iter().filter(|v| v.label == law).collect();
        if bad.is_empty() {
            rep.put("laws", law, "pass");
        } else {
            failing += 1;
            rep.put(
                "laws",
                law,
                format!("FAIL at {}", witness_names(&alg, &bad[0].witness)),
            );
        }
    }
    // Labels outside the printed table (engine additions) still count.
    for v in &combined.violations {
        if !PAPER_LAWS.contains(&v.label.as_str()) {
            failing += 1;
            rep.put("laws", &v.label, format!("FAIL at {}", witness_names(&alg, &v.witness)));
        }
    }
    rep.put("laws", "failing", failing);
    Ok((if failing == 0 { 0 } else { 1 }, rep))
}

/// Run a full command line; returns the exit code and the complete output.
pub fn execute(argv: &[String]) -> (i32, String) {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let result: Result<(i32, String)> = match &cli.command {
        Command::Check { file } => cmd_check(file).map(|(c, r)| (c, render(&r, cli.machine))),
        Command::Analyze { file } => cmd_analyze(file).map(|(c, r)| (c, render(&r, cli.machine))),
        Command::Translate { file, roundtrip } => {
            cmd_translate(file, *roundtrip).map(|(c, r)| (c, render(&r, cli.machine)))
        }
        Command::Ds { file, normal, commutative, closed } => {
            cmd_ds(file, *normal, *commutative, *closed)
                .map(|(c, r)| (c, render(&r, cli.machine)))
        }
        Command::Quotient { file, ds } => {
            cmd_quotient(file, ds).map(|(c, r)| (c, render(&r, cli.machine)))
        }
        Command::Measures { file, morphisms } => {
            cmd_measures(file, *morphisms).map(|(c, r)| (c, render(&r, cli.machine)))
        }
        Command::Valuations { file, commutative } => {
            cmd_valuations(file, *commutative).map(|(c, r)| (c, render(&r, cli.machine)))
        }
        Command::States { file, type1, type2, morphism } => {
            cmd_states(file, *type1, *type2, *morphism)
                .map(|(c, r)| (c, render(&r, cli.machine)))
        }
        Command::Search { size, require, forbid } => {
            cmd_search(*size, require, forbid).map(|s| (0, s))
        }
        Command::VerifyPaper { file } => {
            cmd_verify_paper(file).map(|(c, r)| (c, render(&r, cli.machine)))
        }
    };
    match result {
        Ok((code, out)) => (code, out),
        Err(e) => (exit_code(&e), format!("error: {e}\n")),
    }
}

fn render(rep: &Report, machine: bool) -> String {
    if machine {
        rep.render_machine()
    } else {
        rep.render_human()
    }
}

/// Entry point used by the binary.
pub fn run() -> i32 {
    let argv: Vec<String> = std::env::args().collect();
    let (code, out) = execute(&argv);
    print!("{out}");
    code
}
