//! Batch-oriented command line front end.
//!
//! Exit codes: 0 = all checks pass, 1 = law violations or failed
//! identities, 2 = structural or usage errors (bad files, bad flags,
//! flags that do not apply to the input kind). Reports are deterministic:
//! identical inputs render byte-identical output in both formats.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::effect::detect_lattice_effect;
use crate::enumerate::{
    catalog, catalog_lookup, enumerate_models, is_good_lattice_pseudo, EnumerationTask,
    ModelKind,
};
use crate::finite::BoundedPoset;
use crate::model::Algebra;
use crate::pseudoeffect::{check_goodness, derive_induced_order_pseudo};
use crate::quasires::{
    check_cqrl_axioms, check_cqrl_divisibility, check_qrl_axioms, check_qrl_divisibility,
    check_remark_equivalences,
};
use crate::report::{CheckReport, ReportFormat, DEFAULT_WITNESS_CAP};
use crate::textfmt::{parse_algebra, serialize_algebra};
use crate::transform::{
    cqrl_of_effect, effect_of_cqrl, probe_cqrl_image, probe_qrl_image, pseudoeffect_of_qrl,
    qrl_of_pseudoeffect, roundtrip_effect, roundtrip_pseudoeffect, ProbeReport,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_STRUCTURAL: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> ReportFormat {
        match f {
            Format::Text => ReportFormat::Text,
            Format::Machine => ReportFormat::Machine,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "qrlab", version, about = "Finite-structure laboratory for effect algebras and quasiresiduated lattices", disable_help_subcommand = true)]
struct Cli {
    /// Report rendering.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the axiom system of the algebra in FILE.
    Check {
        file: PathBuf,
        /// Also check the derived-property suites (requires the lattice /
        /// goodness structure the suites are stated for).
        #[arg(long)]
        lemmas: bool,
        /// Also check divisibility (cqrl and qrl inputs only).
        #[arg(long)]
        divisibility: bool,
    },
    /// Print the (induced or stored) order relation, one `x <= y` per line.
    Order { file: PathBuf },
    /// Apply one of the four constructions and print the result.
    Transform {
        #[arg(long, value_enum)]
        to: Target,
        file: PathBuf,
    },
    /// Rebuild the algebra through its assigned structure and back, then
    /// compare tables exactly.
    Roundtrip { file: PathBuf },
    /// Exhaustively generate models of a kind and size.
    Enumerate {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long)]
        limit: Option<usize>,
        /// Write each model to DIR as `<kind>-<size>-<ordinal>.alg`.
        #[arg(long, value_name = "DIR")]
        emit: Option<PathBuf>,
    },
    /// Gather evidence for a composition with no verified identity.
    Probe {
        #[arg(long, value_enum)]
        name: ProbeName,
        #[arg(long)]
        size: usize,
    },
    /// List the built-in algebras, or print one by name.
    Catalog { name: Option<String> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Cqrl,
    Effect,
    Qrl,
    Pseudo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProbeName {
    CqrlImage,
    QrlImage,
}

/// Run the CLI against explicit argument and stream handles; returns the
/// process exit code. `argv[0]` is the program name, as in `std::env::args`.
pub fn run_cli(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{rendered}");
                EXIT_PASS
            } else {
                let _ = write!(err, "{rendered}");
                EXIT_STRUCTURAL
            };
        }
    };
    let format = cli.format.into();
    match cli.command {
        Command::Check { file, lemmas, divisibility } => match load_algebra(&file, err) {
            Ok(a) => cmd_check(a, lemmas, divisibility, format, out, err),
            Err(code) => code,
        },
        Command::Order { file } => match load_algebra(&file, err) {
            Ok(a) => cmd_order(a, out),
            Err(code) => code,
        },
        Command::Transform { to, file } => match load_algebra(&file, err) {
            Ok(a) => cmd_transform(a, to, out, err),
            Err(code) => code,
        },
        Command::Roundtrip { file } => match load_algebra(&file, err) {
            Ok(a) => cmd_roundtrip(a, format, out, err),
            Err(code) => code,
        },
        Command::Enumerate { kind, size, up_to_iso, limit, emit } => {
            cmd_enumerate(&kind, size, up_to_iso, limit, emit.as_deref(), out, err)
        }
        Command::Probe { name, size } => cmd_probe(name, size, out, err),
        Command::Catalog { name } => cmd_catalog(name.as_deref(), out, err),
    }
}

fn load_algebra(file: &std::path::Path, err: &mut dyn Write) -> Result<Algebra, i32> {
    let text = std::fs::read_to_string(file).map_err(|e| {
        let _ = writeln!(err, "error: cannot read {}: {e}", file.display());
        EXIT_STRUCTURAL
    })?;
    parse_algebra(&text).map_err(|e| {
        let _ = writeln!(err, "error: {}: {e}", file.display());
        EXIT_STRUCTURAL
    })
}

fn render_verdict(report: &CheckReport, a: &Algebra, format: ReportFormat, out: &mut dyn Write) -> i32 {
    let _ = write!(out, "{}", report.render(a.carrier(), format));
    if report.all_pass() {
        EXIT_PASS
    } else {
        EXIT_VIOLATIONS
    }
}

fn cmd_check(
    a: Algebra,
    lemmas: bool,
    divisibility: bool,
    format: ReportFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let cap = DEFAULT_WITNESS_CAP;
    if divisibility && !matches!(a, Algebra::Cqrl(_) | Algebra::Qrl(_)) {
        let _ = writeln!(err, "error: --divisibility applies to cqrl and qrl inputs only");
        return EXIT_STRUCTURAL;
    }
    if lemmas && matches!(a, Algebra::Qrl(_)) {
        let _ = writeln!(err, "error: --lemmas applies to effect, pseudoeffect, and cqrl inputs");
        return EXIT_STRUCTURAL;
    }
    let report = match &a {
        Algebra::Effect(e) => {
            let mut report = match crate::effect::check_effect_axioms(e, cap) {
                Ok(r) => r,
                Err(se) => {
                    let _ = writeln!(err, "error: {se}");
                    return EXIT_STRUCTURAL;
                }
            };
            if lemmas {
                if !report.all_pass() {
                    return render_verdict(&report, &a, format, out);
                }
                match detect_lattice_effect(e) {
                    Ok(le) => {
                        report = report.merge(crate::effect::check_effect_lemma_properties(&le, cap));
                    }
                    Err(le_err) => {
                        let _ = write!(out, "{}", report.render(a.carrier(), format));
                        let _ = writeln!(out, "lemma suite not applicable: {le_err}");
                        return EXIT_VIOLATIONS;
                    }
                }
            }
            report
        }
        Algebra::Pseudo(p) => {
            let mut report = match crate::pseudoeffect::check_pseudoeffect_axioms(p, cap) {
                Ok(r) => r,
                Err(se) => {
                    let _ = writeln!(err, "error: {se}");
                    return EXIT_STRUCTURAL;
                }
            };
            if report.all_pass() {
                match derive_induced_order_pseudo(p) {
                    Ok(order) => report = report.merge(check_goodness(p, &order, cap)),
                    Err(oe) => {
                        let _ = write!(out, "{}", report.render(a.carrier(), format));
                        let _ = writeln!(out, "goodness not checkable: {oe}");
                        return EXIT_VIOLATIONS;
                    }
                }
            }
            if lemmas {
                if !report.all_pass() {
                    return render_verdict(&report, &a, format, out);
                }
                match is_good_lattice_pseudo(p) {
                    Some(gp) => {
                        report = report
                            .merge(crate::pseudoeffect::check_pseudo_lemma_properties(&gp, cap));
                    }
                    None => {
                        let _ = write!(out, "{}", report.render(a.carrier(), format));
                        let _ = writeln!(out, "lemma suite not applicable: induced order is not a lattice");
                        return EXIT_VIOLATIONS;
                    }
                }
            }
            report
        }
        Algebra::Cqrl(c) => {
            let mut report = match check_cqrl_axioms(c, cap) {
                Ok(r) => r,
                Err(se) => {
                    let _ = writeln!(err, "error: {se}");
                    return EXIT_STRUCTURAL;
                }
            };
            if divisibility {
                report = report.merge(check_cqrl_divisibility(c, cap));
            }
            if lemmas {
                report = report.merge(check_remark_equivalences(c, cap));
            }
            report
        }
        Algebra::Qrl(q) => {
            let mut report = match check_qrl_axioms(q, cap) {
                Ok(r) => r,
                Err(se) => {
                    let _ = writeln!(err, "error: {se}");
                    return EXIT_STRUCTURAL;
                }
            };
            if divisibility {
                report = report.merge(check_qrl_divisibility(q, cap));
            }
            report
        }
    };
    render_verdict(&report, &a, format, out)
}

fn cmd_order(a: Algebra, out: &mut dyn Write) -> i32 {
    let order: BoundedPoset = match &a {
        Algebra::Effect(e) => match crate::effect::derive_induced_order(e) {
            Ok(o) => o,
            Err(oe) => {
                let _ = writeln!(out, "induced relation is not a bounded poset: {oe}");
                return EXIT_VIOLATIONS;
            }
        },
        Algebra::Pseudo(p) => match derive_induced_order_pseudo(p) {
            Ok(o) => o,
            Err(oe) => {
                let _ = writeln!(out, "induced relation is not a bounded poset: {oe}");
                return EXIT_VIOLATIONS;
            }
        },
        Algebra::Cqrl(c) => c.lattice.order.clone(),
        Algebra::Qrl(q) => q.lattice.order.clone(),
    };
    let c = a.carrier();
    for x in 0..order.size() {
        for y in 0..order.size() {
            if order.leq(x, y) {
                let _ = writeln!(out, "{} <= {}", c.label(x), c.label(y));
            }
        }
    }
    EXIT_PASS
}

fn cmd_transform(a: Algebra, to: Target, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result: Result<Algebra, String> = match (to, &a) {
        (Target::Cqrl, Algebra::Effect(e)) => detect_lattice_effect(e)
            .map_err(|le| le.to_string())
            .and_then(|le| cqrl_of_effect(&le).map_err(|te| te.to_string()))
            .map(Algebra::Cqrl),
        (Target::Effect, Algebra::Cqrl(c)) => effect_of_cqrl(c)
            .map(|le| Algebra::Effect(le.base))
            .map_err(|te| te.to_string()),
        (Target::Qrl, Algebra::Pseudo(p)) => is_good_lattice_pseudo(p)
            .ok_or_else(|| "input is not a good lattice pseudoeffect algebra".to_string())
            .and_then(|gp| qrl_of_pseudoeffect(&gp).map_err(|te| te.to_string()))
            .map(Algebra::Qrl),
        (Target::Pseudo, Algebra::Qrl(q)) => pseudoeffect_of_qrl(q)
            .map(|gp| Algebra::Pseudo(gp.base))
            .map_err(|te| te.to_string()),
        _ => {
            let _ = writeln!(
                err,
                "error: --to {} does not accept kind {}",
                match to {
                    Target::Cqrl => "cqrl",
                    Target::Effect => "effect",
                    Target::Qrl => "qrl",
                    Target::Pseudo => "pseudo",
                },
                a.kind_token()
            );
            return EXIT_STRUCTURAL;
        }
    };
    match result {
        Ok(b) => {
            let _ = write!(out, "{}", serialize_algebra(&b));
            EXIT_PASS
        }
        Err(msg) => {
            let _ = writeln!(out, "transform failed: {msg}");
            EXIT_VIOLATIONS
        }
    }
}

fn cmd_roundtrip(a: Algebra, format: ReportFormat, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let report: Result<CheckReport, String> = match &a {
        Algebra::Effect(e) => detect_lattice_effect(e)
            .map_err(|le| le.to_string())
            .and_then(|le| roundtrip_effect(&le).map_err(|te| te.to_string())),
        Algebra::Pseudo(p) => is_good_lattice_pseudo(p)
            .ok_or_else(|| "input is not a good lattice pseudoeffect algebra".to_string())
            .and_then(|gp| roundtrip_pseudoeffect(&gp).map_err(|te| te.to_string())),
        _ => {
            let _ = writeln!(
                err,
                "error: roundtrip applies to effect and pseudoeffect inputs; use `probe` for the reverse compositions"
            );
            return EXIT_STRUCTURAL;
        }
    };
    match report {
        Ok(r) => {
            let _ = write!(out, "{}", r.render(a.carrier(), format));
            if r.all_pass() {
                let _ = writeln!(out, "IDENTICAL");
                EXIT_PASS
            } else {
                let _ = writeln!(out, "DIFFERENT");
                EXIT_VIOLATIONS
            }
        }
        Err(msg) => {
            let _ = writeln!(out, "roundtrip failed: {msg}");
            EXIT_VIOLATIONS
        }
    }
}

fn cmd_enumerate(
    kind: &str,
    size: usize,
    up_to_iso: bool,
    limit: Option<usize>,
    emit: Option<&std::path::Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let Some(kind) = ModelKind::parse(kind) else {
        let _ = writeln!(err, "error: unknown kind `{kind}`");
        return EXIT_STRUCTURAL;
    };
    let task = EnumerationTask { kind, size, up_to_iso, limit };
    let result = match enumerate_models(&task) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_STRUCTURAL;
        }
    };
    if let Some(dir) = emit {
        if let Err(e) = std::fs::create_dir_all(dir) {
            let _ = writeln!(err, "error: cannot create {}: {e}", dir.display());
            return EXIT_STRUCTURAL;
        }
        for (i, m) in result.models.iter().enumerate() {
            let path = dir.join(format!("{}-{}-{}.alg", kind.token(), size, i));
            if let Err(e) = std::fs::write(&path, serialize_algebra(m)) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return EXIT_STRUCTURAL;
            }
        }
    }
    let _ = writeln!(out, "kind {}", kind.token());
    let _ = writeln!(out, "size {size}");
    let _ = writeln!(out, "models {}", result.models.len());
    let _ = writeln!(out, "raw {}", result.raw_count);
    let _ = writeln!(out, "truncated {}", if result.truncated { "yes" } else { "no" });
    EXIT_PASS
}

fn cmd_probe(name: ProbeName, size: usize, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let kind = match name {
        ProbeName::CqrlImage => ModelKind::Cqrl,
        ProbeName::QrlImage => ModelKind::Qrl,
    };
    let task = EnumerationTask { kind, size, up_to_iso: false, limit: None };
    let result = match enumerate_models(&task) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_STRUCTURAL;
        }
    };
    let _ = writeln!(out, "{}", crate::transform::PROBE_CLAIM);
    for (i, m) in result.models.iter().enumerate() {
        let probe: Result<ProbeReport, _> = match m {
            Algebra::Cqrl(c) => probe_cqrl_image(c),
            Algebra::Qrl(q) => probe_qrl_image(q),
            _ => unreachable!("probe kinds are cqrl and qrl"),
        };
        match probe {
            Ok(p) if p.matches => {
                let _ = writeln!(out, "model {i} MATCH");
            }
            Ok(p) => {
                let d = p.first_diff.expect("mismatch carries a diff");
                let c = m.carrier();
                let _ = writeln!(
                    out,
                    "model {i} DIFF table={} x={} y={}",
                    d.table,
                    c.label(d.x),
                    c.label(d.y)
                );
            }
            Err(te) => {
                let _ = writeln!(out, "model {i} ERROR {te}");
            }
        }
    }
    // a probe reports evidence; counterexamples are findings, not failures
    EXIT_PASS
}

fn cmd_catalog(name: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match name {
        None => {
            for entry in catalog() {
                let _ = writeln!(
                    out,
                    "{} {} size {} -- {}",
                    entry.name,
                    entry.algebra.kind_token(),
                    entry.algebra.size(),
                    entry.notes
                );
            }
            EXIT_PASS
        }
        Some(name) => match catalog_lookup(name) {
            Some(entry) => {
                let _ = write!(out, "{}", serialize_algebra(&entry.algebra));
                EXIT_PASS
            }
            None => {
                let _ = writeln!(err, "error: no catalog entry named `{name}`");
                EXIT_STRUCTURAL
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let argv: Vec<String> =
            std::iter::once("qrlab".to_string()).chain(args.iter().map(|s| s.to_string())).collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_cli(&argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn catalog_listing_and_lookup() {
        let (code, out, _) = run(&["catalog"]);
        assert_eq!(code, EXIT_PASS);
        assert!(out.contains("mv3 effect size 3"));
        let (code, out, _) = run(&["catalog", "mv3"]);
        assert_eq!(code, EXIT_PASS);
        assert!(out.starts_with("kind effect\nsize 3\n"));
        let (code, _, err) = run(&["catalog", "nope"]);
        assert_eq!(code, EXIT_STRUCTURAL);
        assert!(err.contains("no catalog entry"));
    }

    #[test]
    fn enumerate_summary_lines() {
        let (code, out, _) = run(&["enumerate", "--kind", "effect", "--size", "3"]);
        assert_eq!(code, EXIT_PASS);
        assert_eq!(out, "kind effect\nsize 3\nmodels 1\nraw 1\ntruncated no\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        let (code, _, _) = run(&["enumerate", "--kind", "ring", "--size", "3"]);
        assert_eq!(code, EXIT_STRUCTURAL);
        let (code, _, _) = run(&["no-such-command"]);
        assert_eq!(code, EXIT_STRUCTURAL);
    }
}
