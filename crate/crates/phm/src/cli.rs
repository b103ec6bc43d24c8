//! `phm` subcommands. Records go to `out`, the human summary to `err`.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use phm_core::checks::{certify_iso, coinvariant_summary, lemma_suite, validate};
use phm_core::coinvariants::{
    acoinvariants, base_algebra_space, coinvariants, poisson_annihilator,
};
use phm_core::fixtures::{fixture, verify_expected, FIXTURES, MUTANTS};
use phm_core::{Instance, Report};

use crate::bundle::{parse_bundle, to_json, Bundle};
use crate::records;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CERTIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "phm",
    version,
    about = "Certify Poisson Hopf module structures in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every axiom of every declared structure
    Validate { bundle: PathBuf },
    /// Print coinvariants, annihilators and the base algebra with bases
    Coinvariants { bundle: PathBuf },
    /// Build and certify the multiplication map and its inverse
    Fundamental { bundle: PathBuf },
    /// Run the constructive checks around the multiplication map
    Lemmas { bundle: PathBuf },
    /// Built-in example bundles
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
}

#[derive(Subcommand)]
enum FixtureAction {
    /// List fixture and mutant names
    List,
    /// Write a fixture bundle as JSON
    Export {
        name: String,
        /// Output file (default: standard output)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "phm: {e}");
            EXIT_CERTIFICATION
        }
    }
}

fn load(path: &Path, err: &mut impl Write) -> Result<Bundle, i32> {
    parse_bundle(path).map_err(|e| {
        let _ = writeln!(err, "phm: {e}");
        EXIT_PARSE
    })
}

fn label(b: &Bundle, path: &Path) -> String {
    b.name.clone().unwrap_or_else(|| path.display().to_string())
}

/// Validation with expected values checked once the axioms hold.
pub fn validation_report(b: &Bundle) -> Result<Report, phm_core::Error> {
    let mut r = validate(&b.instance)?;
    if r.passed() && !b.expected.is_empty() {
        r.extend(verify_expected(&b.expected, &b.instance)?);
    }
    Ok(r)
}

/// Prints the validation report and stops unless it passed.
fn require_valid(
    b: &Bundle,
    name: &str,
    out: &mut impl Write,
    err: &mut impl Write,
) -> std::io::Result<Option<i32>> {
    let r = match validate(&b.instance) {
        Ok(r) => r,
        Err(e) => {
            out.write_all(records::error_line("validate", &e).as_bytes())?;
            writeln!(err, "{name}: {e}")?;
            return Ok(Some(EXIT_CERTIFICATION));
        }
    };
    if r.passed() {
        return Ok(None);
    }
    out.write_all(records::report_lines(&r).as_bytes())?;
    writeln!(err, "{name}: validation failed ({})", records::tally(&r))?;
    Ok(Some(EXIT_CERTIFICATION))
}

fn certification_error(
    stage: &str,
    name: &str,
    e: &phm_core::Error,
    out: &mut impl Write,
    err: &mut impl Write,
) -> std::io::Result<i32> {
    out.write_all(records::error_line(stage, e).as_bytes())?;
    writeln!(err, "{name}: {stage}: {e}")?;
    Ok(EXIT_CERTIFICATION)
}

fn dispatch(cmd: Command, out: &mut impl Write, err: &mut impl Write) -> std::io::Result<i32> {
    match cmd {
        Command::Validate { bundle } => {
            let b = match load(&bundle, err) {
                Ok(b) => b,
                Err(code) => return Ok(code),
            };
            let name = label(&b, &bundle);
            match validation_report(&b) {
                Ok(r) => {
                    out.write_all(records::report_lines(&r).as_bytes())?;
                    writeln!(err, "{name}: {}", records::tally(&r))?;
                    Ok(if r.passed() {
                        EXIT_OK
                    } else {
                        EXIT_CERTIFICATION
                    })
                }
                Err(e) => certification_error("validate", &name, &e, out, err),
            }
        }
        Command::Coinvariants { bundle } => {
            let b = match load(&bundle, err) {
                Ok(b) => b,
                Err(code) => return Ok(code),
            };
            let name = label(&b, &bundle);
            if let Some(code) = require_valid(&b, &name, out, err)? {
                return Ok(code);
            }
            match coinvariant_text(&b.instance) {
                Ok((text, summary)) => {
                    out.write_all(text.as_bytes())?;
                    writeln!(err, "{name}: {summary}")?;
                    Ok(EXIT_OK)
                }
                Err(e) => certification_error("coinvariants", &name, &e, out, err),
            }
        }
        Command::Fundamental { bundle } => {
            let b = match load(&bundle, err) {
                Ok(b) => b,
                Err(code) => return Ok(code),
            };
            let name = label(&b, &bundle);
            if let Some(code) = require_valid(&b, &name, out, err)? {
                return Ok(code);
            }
            match certify_iso(&b.instance) {
                Ok(c) => {
                    out.write_all(records::certificate_lines(&c).as_bytes())?;
                    writeln!(
                        err,
                        "{name}: hypotheses: {}; isomorphism: {} ({})",
                        records::hypotheses_text(&c),
                        records::isomorphism_text(&c),
                        records::tally(&c.report)
                    )?;
                    let ok = c.report.passed() && c.iso_holds && c.morphism;
                    Ok(if ok { EXIT_OK } else { EXIT_CERTIFICATION })
                }
                Err(e) => certification_error("fundamental", &name, &e, out, err),
            }
        }
        Command::Lemmas { bundle } => {
            let b = match load(&bundle, err) {
                Ok(b) => b,
                Err(code) => return Ok(code),
            };
            let name = label(&b, &bundle);
            if let Some(code) = require_valid(&b, &name, out, err)? {
                return Ok(code);
            }
            match lemma_suite(&b.instance) {
                Ok(r) => {
                    out.write_all(records::report_lines(&r).as_bytes())?;
                    writeln!(err, "{name}: {}", records::tally(&r))?;
                    Ok(if r.passed() {
                        EXIT_OK
                    } else {
                        EXIT_CERTIFICATION
                    })
                }
                Err(e) => certification_error("lemmas", &name, &e, out, err),
            }
        }
        Command::Fixtures {
            action: FixtureAction::List,
        } => {
            for name in FIXTURES.iter().chain(MUTANTS.iter()) {
                writeln!(out, "{name}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Fixtures {
            action: FixtureAction::Export { name, output },
        } => {
            let f = match fixture(&name) {
                Ok(f) => f,
                Err(e) => {
                    writeln!(err, "phm: {e}")?;
                    return Ok(EXIT_USAGE);
                }
            };
            let text = to_json(&Bundle::from(f));
            match output {
                Some(path) => std::fs::write(&path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
    }
}

/// Subspace records for `coinvariants`, and a one-line dimension summary.
pub fn coinvariant_text(inst: &Instance) -> Result<(String, String), phm_core::Error> {
    let h = &inst.hopf;
    let (Some(a), Some(m)) = (&inst.algebra, &inst.module) else {
        return Err(phm_core::Error::InvalidArgument(
            "the instance needs an algebra and a module",
        ));
    };
    let co = coinvariants(&m.coaction, &m.dims, h)?;
    let ann = poisson_annihilator(&m.dims, &m.lie, a.dims());
    let w = acoinvariants(m, a, h)?;
    let base = base_algebra_space(a, h)?;
    let mut text = String::new();
    for (label, family) in [
        ("module.coinvariants", &co.per_degree),
        ("module.annihilator", &ann),
        ("module.acoinvariants", &w),
        ("algebra.base", &base),
    ] {
        let spaces: Vec<_> = h.group().elements().map(|al| family.get(al)).collect();
        text.push_str(&records::subspace_lines(label, &spaces));
    }
    let s = coinvariant_summary(inst)?;
    text.push_str(&records::summary_lines(&s));
    let summary = format!(
        "coinvariants {:?}, annihilator {:?}, acoinvariants {:?}, base {:?}",
        s.module_coinvariants, s.module_annihilator, s.module_acoinvariants, s.algebra_base
    );
    Ok((text, summary))
}
