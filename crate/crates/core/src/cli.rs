//! Command-line front end. [`run`] returns the process exit code:
//! 0 success (or a finite classification), 1 input error, 2 not finite,
//! 3 unsupported type or size guard, 4 a verification check failed.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classify::{classify, ComponentKind, TypeLabel};
use crate::coxeter::CoxeterGraph;
use crate::error::Error;
use crate::family::{character_table, dihedral_irreducibles, dn_irreducibles, hyperoctahedral_dimensions};
use crate::group::{compute_base, enumerate_group, root_system, DEFAULT_MAX_ORDER};
use crate::rep::format_value;
use crate::symmetric::{hook_dimension, partitions_of};
use crate::verify::verify_type;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NOT_FINITE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_VERIFY_FAILED: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "coxeterkit", version, about = "Exact computations with finite Coxeter groups")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    /// Print character values as floating point with 12 significant digits.
    #[arg(long, global = true)]
    pub float: bool,
    /// Largest group order that may be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: u128,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the Coxeter graph in a JSON file.
    Classify { path: PathBuf },
    /// Print the character table of a type such as A4, B3, D4 or I2(7).
    Chartable {
        #[arg(value_name = "TYPE")]
        ty: String,
    },
    /// List the irreducible representations with their degrees.
    Irreps {
        #[arg(value_name = "TYPE")]
        ty: String,
    },
    /// Describe the concrete group: generators, classes, simple roots.
    Realize {
        #[arg(value_name = "TYPE")]
        ty: String,
    },
    /// Run the invariant suite.
    Verify {
        #[arg(value_name = "TYPE")]
        ty: String,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnsupportedType(_) | Error::OrderTooLarge { .. } | Error::OutOfRange { .. } => EXIT_UNSUPPORTED,
        _ => EXIT_INPUT,
    }
}

struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(exit_code(&e), e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{text}");
                EXIT_OK
            } else {
                let _ = write!(err, "{text}");
                EXIT_INPUT
            };
        }
    };
    match execute(&cfg) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn parse_type(s: &str) -> Result<TypeLabel, Failure> {
    s.parse::<TypeLabel>().map_err(|e| Failure(EXIT_INPUT, e.to_string()))
}

fn json_text(v: Value) -> String {
    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
}

fn execute(cfg: &CliConfig) -> Result<(String, i32), Failure> {
    match &cfg.command {
        Command::Classify { path } => cmd_classify(cfg, path),
        Command::Chartable { ty } => {
            let table = character_table(parse_type(ty)?)?;
            let text = match cfg.format {
                Format::Tsv => table.to_tsv(cfg.float),
                Format::Json => table.to_json(cfg.float),
            };
            Ok((text, EXIT_OK))
        }
        Command::Irreps { ty } => cmd_irreps(cfg, parse_type(ty)?),
        Command::Realize { ty } => cmd_realize(cfg, parse_type(ty)?),
        Command::Verify { ty } => {
            let report = verify_type(parse_type(ty)?, cfg.max_order)?;
            let code = if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED };
            let text = match cfg.format {
                Format::Tsv => report.checks.iter().map(|c| format!("{c}\n")).collect(),
                Format::Json => json_text(json!({
                    "type": report.label.to_string(),
                    "passed": report.passed(),
                    "checks": report.checks.iter().map(|c| json!({
                        "name": c.name, "passed": c.passed, "detail": c.detail,
                    })).collect::<Vec<_>>(),
                })),
            };
            Ok((text, code))
        }
    }
}

fn cmd_classify(cfg: &CliConfig, path: &PathBuf) -> Result<(String, i32), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure(EXIT_INPUT, format!("cannot read {}: {e}", path.display())))?;
    let graph = CoxeterGraph::from_json(&text)?;
    let result = classify(&graph)?;
    let code = if result.is_finite() { EXIT_OK } else { EXIT_NOT_FINITE };
    let out = match cfg.format {
        Format::Tsv => format!("{result}\n"),
        Format::Json => json_text(json!({
            "finite": result.is_finite(),
            "summary": result.to_string(),
            "components": result.components.iter().map(|c| match &c.kind {
                ComponentKind::Finite(t) => json!({"vertices": c.vertices, "type": t.to_string()}),
                ComponentKind::NotFinite(w) => json!({"vertices": c.vertices, "not_finite": w.to_string()}),
            }).collect::<Vec<_>>(),
        })),
    };
    Ok((out, code))
}

fn cmd_irreps(cfg: &CliConfig, t: TypeLabel) -> Result<(String, i32), Failure> {
    let rows: Vec<(String, String)> = match t {
        TypeLabel::A(n) => {
            if n + 1 > 12 {
                return Err(Error::OutOfRange { value: n, range: "A_n with n <= 11" }.into());
            }
            partitions_of(n + 1)?.iter().map(|p| (p.to_string(), hook_dimension(p).to_string())).collect()
        }
        TypeLabel::B(n) => hyperoctahedral_dimensions(n)?
            .into_iter()
            .map(|(b, d)| (b.label(), d.to_string()))
            .collect(),
        TypeLabel::D(n) => dn_irreducibles(n)?.into_iter().map(|i| (i.label.to_string(), i.dim.to_string())).collect(),
        TypeLabel::I2(m) => dihedral_irreducibles(m)?.into_iter().map(|i| (i.label, i.dim.to_string())).collect(),
        other => return Err(Error::UnsupportedType(other.to_string()).into()),
    };
    let text = match cfg.format {
        Format::Tsv => {
            let mut s = String::from("label\tdim\n");
            for (l, d) in &rows {
                s.push_str(&format!("{l}\t{d}\n"));
            }
            s
        }
        Format::Json => json_text(json!({
            "type": t.to_string(),
            "irreducibles": rows.iter().map(|(l, d)| json!({"label": l, "dim": d})).collect::<Vec<_>>(),
        })),
    };
    Ok((text, EXIT_OK))
}

fn cmd_realize(cfg: &CliConfig, t: TypeLabel) -> Result<(String, i32), Failure> {
    let g = enumerate_group(t, cfg.max_order)?;
    let cd = g.classes();
    let base = if t.rank() <= 8 { Some(compute_base(&root_system(t)?)?) } else { None };
    let vector = |v: &Vec<crate::arith::Cyclotomic>| {
        let parts: Vec<String> = v.iter().map(|x| format_value(x, cfg.float)).collect();
        format!("({})", parts.join(","))
    };
    let generators: Vec<String> = g.generators().iter().map(|&s| g.element(s).to_string()).collect();
    let text = match cfg.format {
        Format::Tsv => {
            let mut s = format!("type\t{t}\ngroup\t{}\norder\t{}\n", g.name(), g.order());
            for (i, x) in generators.iter().enumerate() {
                s.push_str(&format!("generator\t{i}\t{x}\n"));
            }
            for c in 0..cd.count() {
                s.push_str(&format!("class\t{}\t{}\n", g.element(cd.representative(c)), cd.size(c)));
            }
            for (i, r) in base.iter().flatten().enumerate() {
                s.push_str(&format!("simple_root\t{i}\t{}\n", vector(r)));
            }
            s
        }
        Format::Json => json_text(json!({
            "type": t.to_string(),
            "group": g.name(),
            "order": g.order(),
            "generators": generators,
            "classes": (0..cd.count()).map(|c| json!({
                "representative": g.element(cd.representative(c)).to_string(),
                "size": cd.size(c),
            })).collect::<Vec<_>>(),
            "simple_roots": base.iter().flatten().map(vector).collect::<Vec<_>>(),
        })),
    };
    Ok((text, EXIT_OK))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("coxeterkit").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn chartable_a2() {
        let (code, out, _) = run_args(&["chartable", "A2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "class\t()\t(2,3)\t(1,2,3)\nsize\t1\t3\t2\n3\t1\t1\t1\n2+1\t2\t0\t-1\n1+1+1\t1\t-1\t1\n");
    }

    #[test]
    fn unsupported_and_bad_input() {
        assert_eq!(run_args(&["chartable", "E6"]).0, 3);
        assert_eq!(run_args(&["chartable", "X9"]).0, 1);
        assert_eq!(run_args(&["chartable", "A9"]).0, 3);
        assert_eq!(run_args(&["frobnicate"]).0, 1);
        assert_eq!(run_args(&["--help"]).0, 0);
    }

    #[test]
    fn irreps_and_realize() {
        let (code, out, _) = run_args(&["irreps", "I2(5)"]);
        assert_eq!(code, 0);
        assert_eq!(out, "label\tdim\ntriv\t1\nsgn\t1\nrho_1\t2\nrho_2\t2\n");
        let (code, out, _) = run_args(&["realize", "B2"]);
        assert_eq!(code, 0);
        assert!(out.contains("order\t8\n"));
        assert!(out.contains("generator\t0\t[-1,+1] ()\n"));
    }
}
