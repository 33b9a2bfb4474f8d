use std::fmt::Write as _;

use anyhow::{bail, Result};
use serde_json::{json, Value};
use sqfree_core::checks::{check_corpus, CheckOptions};
use sqfree_core::clutter::{
    cover_number, matching_number, mfmc_check, MfmcOptions, DEFAULT_SWEEP_BUDGET, MAX_VERTICES,
};
use sqfree_core::corpus::{generate, with_planted, CorpusSpec};
use sqfree_core::equality::equal_all_powers;
use sqfree_core::homology::{
    betti_numbers, limit_experiment, summary_with_table, FieldChar, DEFAULT_GENERATOR_BUDGET,
};
use sqfree_core::symbolic::symbolic_power;
use sqfree_core::Error;

use crate::input::load;
use crate::{Cli, Command, Format, InputArgs, EXIT_BUDGET, EXIT_DEFECT, EXIT_ERROR};

/// What the binary prints and returns.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

struct Report {
    table: String,
    csv: String,
    json: Value,
    /// Contradictions with proved statements.
    defects: Vec<String>,
    notices: Vec<String>,
}

impl Report {
    fn new(table: String, csv: String, json: Value) -> Self {
        Report {
            table,
            csv,
            json,
            defects: Vec::new(),
            notices: Vec::new(),
        }
    }
}

fn chars(cli: &Cli) -> Result<Vec<FieldChar>> {
    if cli.global.chars.is_empty() {
        bail!("--chars needs at least one characteristic");
    }
    Ok(cli
        .global
        .chars
        .iter()
        .map(|&p| FieldChar::new(p))
        .collect::<std::result::Result<_, _>>()?)
}

fn budget(cli: &Cli, default: u128) -> Result<u128> {
    match cli.global.budget {
        Some(0) => bail!("--budget must be positive"),
        Some(b) => Ok(b),
        None => Ok(default),
    }
}

fn load_input(input: &InputArgs) -> Result<crate::input::Input> {
    load(input.fixture.as_deref(), input.file.as_deref())
}

fn cmd_symbolic(input: &InputArgs, n: u32) -> Result<Report> {
    let ideal = load_input(input)?.into_ideal();
    let power = symbolic_power(&ideal, n)?;
    let mut table = format!("I^({n}) has {} minimal generators\n", power.mu());
    let mut csv = String::from("generator\n");
    for g in power.generators() {
        writeln!(table, "  {g}")?;
        writeln!(csv, "{g}")?;
    }
    let json = json!({ "n": n, "mu": power.mu(), "ideal": power, "display": power.to_string() });
    Ok(Report::new(table, csv, json))
}

fn cmd_equality(cli: &Cli, input: &InputArgs) -> Result<Report> {
    let ideal = load_input(input)?.into_ideal();
    let report = equal_all_powers(&ideal, cli.global.extended)?;
    let mut table = format!(
        "I = {ideal}\nmu = {}, criterion checks n <= {}\n",
        report.mu, report.checked_up_to
    );
    let mut csv = String::from("n,equal,witness,range\n");
    let rows = report
        .per_n
        .iter()
        .map(|c| (c, "criterion"))
        .chain(report.extended.iter().map(|c| (c, "extended")));
    for (c, range) in rows {
        let witness = c.witness.as_ref().map(ToString::to_string).unwrap_or_default();
        let status = if c.equal { "equal".to_string() } else { format!("unequal, witness {witness}") };
        writeln!(table, "n={} {status}{}", c.n, if range == "extended" { " (extended)" } else { "" })?;
        writeln!(csv, "{},{},{witness},{range}", c.n, c.equal)?;
    }
    match &report.first_failure {
        None => writeln!(table, "verdict: I^n = I^(n) for all n")?,
        Some(f) => writeln!(table, "verdict: I^n != I^(n) from n={} on", f.n)?,
    }
    let mut out = Report::new(table, csv, serde_json::to_value(&report)?);
    if report.verdict_all_n {
        if let Some(c) = report.extended.iter().find(|c| !c.equal) {
            out.defects
                .push(format!("the finite criterion says equal for all n, but n={} is unequal", c.n));
        }
    }
    Ok(out)
}

fn cmd_packed(cli: &Cli, input: &InputArgs) -> Result<Report> {
    let clutter = load_input(input)?.into_clutter()?;
    let ideal = clutter.to_ideal();
    let sweep_budget = budget(cli, DEFAULT_SWEEP_BUDGET)?;
    // 3^n minors must fit the budget.
    let max_vertices = (0..=MAX_VERTICES)
        .take_while(|&n| 3u128.checked_pow(n as u32).is_some_and(|t| t <= sweep_budget))
        .last()
        .unwrap_or(0);
    let failing_minor = clutter.is_packed(max_vertices)?;
    let konig = clutter.is_konig();
    let (tau, nu) = (cover_number(&clutter), matching_number(&clutter));
    let mfmc = if clutter.is_unit() {
        None
    } else {
        match mfmc_check(&clutter, MfmcOptions { budget: sweep_budget, symmetry: false }) {
            Ok(r) => Some(r.holds),
            Err(Error::Budget { .. }) => None,
            Err(e) => return Err(e.into()),
        }
    };
    let equal_all = if ideal.is_zero() || ideal.is_unit() {
        None
    } else {
        Some(equal_all_powers(&ideal, None)?.verdict_all_n)
    };
    let show = |v: Option<bool>| v.map_or("n/a".to_string(), |b| b.to_string());
    let mut table = format!("clutter: {clutter}\n");
    writeln!(table, "cover number: {tau}\nmatching number: {nu}\nkonig: {konig}")?;
    match failing_minor {
        None => writeln!(table, "packed: true")?,
        Some(spec) => writeln!(table, "packed: false (non-König minor {spec})")?,
    }
    writeln!(table, "mfmc: {}\nall powers equal: {}", show(mfmc), show(equal_all))?;
    let packed = failing_minor.is_none();
    let csv = format!(
        "konig,packed,cover_number,matching_number,mfmc,equal_all_powers\n{konig},{packed},{tau},{nu},{},{}\n",
        show(mfmc),
        show(equal_all)
    );
    let json = json!({
        "clutter": clutter,
        "konig": konig,
        "packed": packed,
        "failing_minor": failing_minor.map(|s| s.to_string()),
        "cover_number": tau,
        "matching_number": nu,
        "mfmc": mfmc,
        "equal_all_powers": equal_all,
    });
    let mut out = Report::new(table, csv, json);
    if packed && mfmc == Some(false) {
        out.table.push_str("*** packed but MFMC fails: a counterexample to the packing conjecture ***\n");
        out.notices.push("packed clutter without the MFMC property".into());
    }
    if equal_all == Some(true) && !packed {
        out.defects.push("all powers are equal but the clutter is not packed".into());
    }
    Ok(out)
}

fn cmd_mfmc(cli: &Cli, input: &InputArgs, symmetry: bool) -> Result<Report> {
    let clutter = load_input(input)?.into_clutter()?;
    let options = MfmcOptions {
        budget: budget(cli, DEFAULT_SWEEP_BUDGET)?,
        symmetry,
    };
    let report = mfmc_check(&clutter, options)?;
    let equal_all = equal_all_powers(&clutter.to_ideal(), None)?.verdict_all_n;
    let mut table = format!(
        "clutter: {clutter}\nsweep: c in {{0..{}}}^{} ({} vectors)\nmfmc: {}\n",
        report.bound,
        clutter.vertices(),
        report.box_size,
        report.holds
    );
    let mut csv = String::from("mfmc,failing_c,gamma,sigma,equal_all_powers\n");
    match &report.failing {
        Some(f) => {
            writeln!(table, "failing c = {:?}: gamma = {}, sigma = {}", f.c, f.gamma, f.sigma)?;
            let c: Vec<String> = f.c.iter().map(u64::to_string).collect();
            writeln!(csv, "false,{},{},{},{equal_all}", c.join(" "), f.gamma, f.sigma)?;
        }
        None => writeln!(csv, "true,,,,{equal_all}")?,
    }
    writeln!(table, "all powers equal: {equal_all}")?;
    let json = json!({ "clutter": clutter, "report": report, "equal_all_powers": equal_all });
    let mut out = Report::new(table, csv, json);
    if report.holds != equal_all {
        out.defects.push(format!(
            "MFMC is {} but equality of all powers is {equal_all}",
            report.holds
        ));
    }
    Ok(out)
}

fn cmd_limits(cli: &Cli, input: &InputArgs, n_max: u32) -> Result<Report> {
    let ideal = load_input(input)?.into_ideal();
    let generator_budget = budget(cli, DEFAULT_GENERATOR_BUDGET as u128)?;
    let generator_budget = usize::try_from(generator_budget).unwrap_or(usize::MAX);
    let mut out = Report::new(String::new(), String::new(), Value::Null);
    let mut reports = Vec::new();
    for ch in chars(cli)? {
        let report = limit_experiment(&ideal, n_max, ch, generator_budget)?;
        // The library CSV plus a per-row verdict over the inequalities with lhs n.
        let mut lines = report.to_csv().lines().map(str::to_string).collect::<Vec<_>>();
        lines[0].push_str(",checks");
        for (line, row) in lines.iter_mut().skip(1).zip(&report.rows) {
            let ok = report.checks.iter().filter(|c| c.n == row.n).all(|c| c.holds);
            line.push_str(match (&row.summary, ok) {
                (None, _) => ",skipped",
                (Some(_), true) => ",ok",
                (Some(_), false) => ",violated",
            });
        }
        let csv = lines.join("\n") + "\n";
        writeln!(out.table, "field characteristic {ch}")?;
        out.table.push_str(&align(&csv));
        let skipped = report.skipped();
        if !skipped.is_empty() {
            writeln!(
                out.table,
                "truncated: rows {skipped:?} exceed the generator budget {generator_budget}"
            )?;
            out.notices.push(format!("limits rows {skipped:?} skipped by budget"));
        }
        if cli.global.chars.len() > 1 {
            writeln!(out.csv, "# field characteristic {ch}")?;
        }
        out.csv.push_str(&csv);
        for c in report.checks.iter().filter(|c| !c.holds) {
            out.defects.push(format!(
                "{:?} inequality fails at n={} m={} i={:?}: {} vs {}",
                c.kind, c.n, c.m, c.i, c.lhs, c.rhs
            ));
        }
        reports.push(report);
    }
    out.json = json!({ "ideal": ideal, "reports": reports });
    Ok(out)
}

/// Pads CSV columns to equal width.
fn align(csv: &str) -> String {
    let rows: Vec<Vec<&str>> = csv.lines().map(|l| l.split(',').collect()).collect();
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().enumerate().map(|(c, s)| format!("{s:>w$}", w = widths[c])).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn cmd_homology(cli: &Cli, input: &InputArgs) -> Result<Report> {
    let ideal = load_input(input)?.into_ideal();
    let mut out = Report::new(String::new(), String::from("char,i,multidegree,rank\n"), Value::Null);
    let mut sections = Vec::new();
    for ch in chars(cli)? {
        let table = betti_numbers(&ideal, ch)?;
        let summary = summary_with_table(&ideal, ch, &table)?;
        writeln!(out.table, "field characteristic {ch}\ngraded Betti numbers of R/I (i, j: rank)")?;
        for ((i, j), r) in table.quotient_graded() {
            writeln!(out.table, "  {i}, {j}: {r}")?;
        }
        let a: Vec<String> = summary.a_invariants.iter().map(ToString::to_string).collect();
        writeln!(
            out.table,
            "dim {}  pd {}  depth {}  reg {}  alpha {}\na-invariants: [{}]",
            summary.dim,
            summary.pd,
            summary.depth,
            summary.reg,
            summary.alpha,
            a.join(", ")
        )?;
        for ((i, b), r) in table.quotient_entries() {
            let exps: Vec<String> = b.exponents().iter().map(u32::to_string).collect();
            writeln!(out.csv, "{ch},{i},{},{r}", exps.join(" "))?;
        }
        if !summary.is_consistent() {
            out.defects.push(format!(
                "characteristic {ch}: Betti regularity {} differs from max(a_i + i) = {}",
                summary.reg,
                summary.reg_from_a_invariants()
            ));
        }
        sections.push(json!({ "betti": table.to_json(), "summary": summary }));
    }
    out.json = json!({ "ideal": ideal, "fields": sections });
    Ok(out)
}

fn cmd_corpus(cli: &Cli, vars: usize, max_gens: usize, count: usize, plant: &[String]) -> Result<Report> {
    let spec = CorpusSpec {
        vars,
        max_gens,
        count,
        seed: cli.global.seed,
    };
    let entries = with_planted(plant, generate(spec)?)?;
    let options = CheckOptions {
        mfmc_budget: budget(cli, DEFAULT_SWEEP_BUDGET)?,
        field_char: chars(cli)?[0],
        ..CheckOptions::default()
    };
    let report = check_corpus(&entries, options)?;
    let mut table = String::new();
    let mut csv = String::from("label,vars,mu,ideal,equal_all_powers,first_failure,splitting,packed,mfmc,reg,violations\n");
    for row in &report.rows {
        let mfmc = row.mfmc.map_or("n/a".to_string(), |b| b.to_string());
        let first = row.first_failure.map_or(String::new(), |n| n.to_string());
        let reg: Vec<String> = row.reg.iter().map(i64::to_string).collect();
        writeln!(
            table,
            "{:<10} {:<44} equal={:<5} first_failure={:<2} packed={:<5} mfmc={:<5} reg=[{}]{}",
            row.label,
            row.ideal.to_string(),
            row.verdict_all_n,
            first,
            row.packed,
            mfmc,
            reg.join(" "),
            if row.violations.is_empty() { "" } else { "  VIOLATION" }
        )?;
        writeln!(
            csv,
            "{},{},{},\"{}\",{},{first},{},{},{mfmc},{},{}",
            row.label,
            row.ideal.vars(),
            row.mu,
            row.ideal,
            row.verdict_all_n,
            row.splitting_condition,
            row.packed,
            reg.join(" "),
            row.violations.len()
        )?;
    }
    writeln!(
        table,
        "{} ideals, {} with all powers equal, {} violations",
        report.rows.len(),
        report.rows.iter().filter(|r| r.verdict_all_n).count(),
        report.violation_count
    )?;
    let mut out = Report::new(table, csv, serde_json::to_value(&report)?);
    for (row, v) in report.violations() {
        out.defects.push(format!("{} {}: {} ({})", row.label, row.ideal, v.check, v.detail));
    }
    for row in &report.rows {
        out.notices.extend(row.notes.iter().map(|n| format!("{}: {n}", row.label)));
    }
    Ok(out)
}

fn execute(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Symbolic { input, n } => cmd_symbolic(input, *n),
        Command::Equality { input } => cmd_equality(cli, input),
        Command::Packed { input } => cmd_packed(cli, input),
        Command::Mfmc { input, symmetry } => cmd_mfmc(cli, input, *symmetry),
        Command::Limits { input, n_max } => cmd_limits(cli, input, *n_max),
        Command::Homology { input } => cmd_homology(cli, input),
        Command::Corpus {
            vars,
            max_gens,
            count,
            plant,
        } => cmd_corpus(cli, *vars, *max_gens, *count, plant),
    }
}

/// Runs one command and renders its output without touching the process.
pub fn run(cli: &Cli) -> Outcome {
    let report = match execute(cli) {
        Ok(r) => r,
        Err(e) => {
            let budget = e.chain().any(|c| matches!(c.downcast_ref::<Error>(), Some(Error::Budget { .. })));
            return Outcome {
                stdout: String::new(),
                stderr: format!("{}: {e:#}\n", if budget { "refused" } else { "error" }),
                code: if budget { EXIT_BUDGET } else { EXIT_ERROR },
            };
        }
    };
    let mut outcome = Outcome {
        stdout: match cli.global.format {
            Format::Table => report.table,
            Format::Csv => report.csv,
            Format::Json => serde_json::to_string_pretty(&report.json).expect("reports serialize") + "\n",
        },
        ..Outcome::default()
    };
    for n in &report.notices {
        writeln!(outcome.stderr, "note: {n}").expect("writing to a String");
    }
    if !report.defects.is_empty() {
        outcome.stderr.push_str("=== DEFECT: a cross-check contradicts a proved result; this is a bug ===\n");
        for d in &report.defects {
            writeln!(outcome.stderr, "defect: {d}").expect("writing to a String");
        }
        outcome.code = EXIT_DEFECT;
    }
    if let Some(path) = &cli.global.dump {
        let text = serde_json::to_string_pretty(&report.json).expect("reports serialize") + "\n";
        if let Err(e) = std::fs::write(path, text) {
            writeln!(outcome.stderr, "error: writing {}: {e}", path.display()).expect("writing to a String");
            outcome.code = outcome.code.max(EXIT_ERROR);
        }
    }
    outcome
}
