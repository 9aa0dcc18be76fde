//! Command-line front end: `eval`, `table`, `coeffs` and `check`.
//!
//! Exit codes: 0 success, 1 failed check, 2 bad arguments, 3 unsupported
//! evaluation.

use crate::bigfloat::DEFAULT_PREC;
use crate::dispatch::{evaluate, EvalOptions};
use crate::elem::Truncation;
use crate::error::Error;
use crate::exactpoly::{family_json, fk_over_rho_poly, generate_phi, pn_polynomials, CoeffTables};
use crate::poly::rational_to_f64;
use crate::quad::FunctionQuad;
use crate::scaled::ScaledValue;
use crate::verify::{compare_with_published, delta_grid, parse_decimal, run_checks, TableId};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::io::Write;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

/// Environment variable that replaces the default BigFloat precision.
pub const PRECISION_ENV: &str = "PCF_PRECISION_BITS";
pub const PRECISIONS: [u32; 4] = [64, 128, 256, 320];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Phi,
    Psi,
    U,
    V,
    F,
    #[value(name = "P")]
    P,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Phi => "phi",
            Family::Psi => "psi",
            Family::U => "u",
            Family::V => "v",
            Family::F => "f",
            Family::P => "P",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "pcf",
    version,
    about = "Parabolic cylinder functions U(a,z), V(a,z) for real arguments"
)]
pub struct CliConfig {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// BigFloat precision in bits (64, 128, 256 or 320).
    #[arg(long = "precision-bits", global = true)]
    pub precision_bits: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate U, U', V, V' at (a, z).
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        /// Print mantissa and log-scale instead of plain values.
        #[arg(long)]
        scaled: bool,
        /// Fixed number of terms in the asymptotic sums (default: adaptive).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=12))]
        terms: Option<u32>,
    },
    /// Reproduce one of the accuracy tables and compare with the printed values.
    Table {
        #[arg(long, value_parser = ["5.1", "5.2", "5.3"])]
        which: String,
        /// Terms per series (default: as printed, 3 for 5.1 and 5 otherwise).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=12))]
        terms: Option<u32>,
    },
    /// Dump an exact coefficient polynomial as JSON.
    Coeffs {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, value_parser = clap::value_parser!(u32).range(0..=12))]
        order: u32,
    },
    /// Run the identity suite, the table reproductions and the Wronskian scan.
    Check,
}

fn usage_error(err: &mut dyn Write, msg: &str) -> i32 {
    let _ = writeln!(err, "error: {msg}\n\nUsage: pcf [OPTIONS] <eval|table|coeffs|check>\nFor more information, try '--help'.");
    EXIT_USAGE
}

fn precision(flag: Option<u32>) -> std::result::Result<u32, String> {
    let p = match flag {
        Some(p) => p,
        None => match std::env::var(PRECISION_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| format!("{PRECISION_ENV}={v:?} is not an integer"))?,
            Err(_) => DEFAULT_PREC,
        },
    };
    if PRECISIONS.contains(&p) {
        Ok(p)
    } else {
        Err(format!("precision must be one of {PRECISIONS:?}, got {p}"))
    }
}

/// Parses argv (including the program name) and runs the subcommand.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match CliConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let prec = match precision(cfg.precision_bits) {
        Ok(p) => p,
        Err(m) => return usage_error(err, &m),
    };
    match &cfg.command {
        Command::Eval {
            a,
            z,
            scaled,
            terms,
        } => {
            let (Some(ar), Some(zr)) = (parse_decimal(a), parse_decimal(z)) else {
                return usage_error(
                    err,
                    &format!("--a and --z must be decimal numbers, got {a:?}, {z:?}"),
                );
            };
            let opts = EvalOptions {
                truncation: terms.map_or(Truncation::Auto, |s| Truncation::Fixed(s as usize)),
                ..EvalOptions::default()
            };
            let (af, zf) = (rational_to_f64(&ar), rational_to_f64(&zr));
            match evaluate(af, zf, &opts) {
                Ok(q) => {
                    let _ = write!(out, "{}", format_eval(af, zf, &q, *scaled, cfg.format));
                    EXIT_OK
                }
                Err(e @ Error::Unsupported { .. }) => {
                    let _ = writeln!(err, "unsupported evaluation: {e}");
                    EXIT_UNSUPPORTED
                }
                Err(e) => {
                    let _ = writeln!(err, "evaluation failed: {e}");
                    EXIT_FAILED
                }
            }
        }
        Command::Table { which, terms } => {
            let which: TableId = which.parse().expect("validated by clap");
            let terms = terms.map_or(which.default_terms(), |t| t as usize);
            let (mu, t, _) = which.published();
            let grid = match delta_grid(which, mu, t, terms, prec) {
                Ok(g) => g,
                Err(e) => {
                    let _ = writeln!(err, "table failed: {e}");
                    return EXIT_FAILED;
                }
            };
            let cmp = compare_with_published(&grid).expect("printed grid");
            let body = match cfg.format {
                Format::Csv => grid.to_csv(),
                Format::Text => format!("{}\n{}", grid.to_text(), cmp.report()),
                Format::Json => {
                    let cells: Vec<_> = cmp
                        .cells
                        .iter()
                        .zip(grid.delta.iter().flatten())
                        .map(|(c, d)| {
                            json!({"mu": c.mu, "t": c.t, "delta": d.to_sci_string(6), "published": c.published, "ratio": c.ratio, "pass": c.pass})
                        })
                        .collect();
                    let v = json!({"schemaVersion": 1, "table": which.label(), "terms": terms, "precisionBits": prec, "verdict": if cmp.pass() { "PASS" } else { "FAIL" }, "cells": cells});
                    format!("{v}\n")
                }
            };
            let _ = write!(out, "{body}");
            if cmp.pass() {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Command::Coeffs { family, order } => {
            let k = *order as usize;
            let coeffs = match family {
                Family::Phi => Ok(generate_phi(k)[k].coeffs().to_vec()),
                Family::P => Ok(pn_polynomials(k)[k].coeffs().to_vec()),
                Family::F => fk_over_rho_poly(k).map(|p| p.coeffs().to_vec()),
                Family::Psi | Family::U | Family::V => CoeffTables::build(k).map(|t| {
                    let p = match family {
                        Family::Psi => &t.psi[k],
                        Family::U => &t.u[k],
                        _ => &t.v[k],
                    };
                    p.coeffs().to_vec()
                }),
            };
            match coeffs {
                Ok(c) => {
                    let _ = writeln!(out, "{}", family_json(family.name(), k, &c));
                    EXIT_OK
                }
                Err(e) => {
                    let _ = writeln!(err, "coefficient generation failed: {e}");
                    EXIT_FAILED
                }
            }
        }
        Command::Check => {
            let results = run_checks(prec);
            for r in &results {
                let _ = writeln!(
                    out,
                    "{} {}: {}",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.name,
                    r.detail
                );
            }
            if results.iter().all(|r| r.pass) {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
    }
}

fn plain(v: &ScaledValue) -> String {
    let u = v.unscaled();
    // outside the normal f64 range: print the decimal exponent directly
    if u.overflow || (!v.is_zero() && u.value.abs() < f64::MIN_POSITIVE) {
        format!("{v:.15}")
    } else {
        format!("{:.15e}", u.value)
    }
}

fn format_eval(a: f64, z: f64, q: &FunctionQuad, scaled: bool, format: Format) -> String {
    let vals = [("U", &q.u), ("U'", &q.du), ("V", &q.v), ("V'", &q.dv)];
    match format {
        Format::Text => {
            let mut s = format!("a = {a}\nz = {z}\nregion = {}\n", q.region);
            for (n, v) in vals {
                if scaled {
                    s.push_str(&format!(
                        "{n:<2} = {:.15e} * exp({})\n",
                        v.mantissa, v.log_scale
                    ));
                } else {
                    s.push_str(&format!("{n:<2} = {}\n", plain(v)));
                }
            }
            s.push_str(&format!("errEstimate = {:.3e}\n", q.err_estimate));
            s
        }
        Format::Csv => {
            let cells: Vec<String> = vals
                .iter()
                .map(|(_, v)| {
                    if scaled {
                        format!("{:e};{}", v.mantissa, v.log_scale)
                    } else {
                        plain(v)
                    }
                })
                .collect();
            format!(
                "a,z,region,U,dU,V,dV,errEstimate\n{a},{z},{},{},{:e}\n",
                q.region,
                cells.join(","),
                q.err_estimate
            )
        }
        Format::Json => {
            let val = |v: &ScaledValue| {
                if scaled {
                    json!({"mantissa": v.mantissa, "logScale": v.log_scale})
                } else {
                    json!(plain(v))
                }
            };
            let o = json!({
                "schemaVersion": 1,
                "a": a,
                "z": z,
                "region": q.region.name(),
                "U": val(&q.u),
                "dU": val(&q.du),
                "V": val(&q.v),
                "dV": val(&q.dv),
                "errEstimate": q.err_estimate,
            });
            format!("{o}\n")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut o = Vec::new();
        let mut e = Vec::new();
        let code = run(
            std::iter::once("pcf").chain(args.iter().copied()),
            &mut o,
            &mut e,
        );
        (
            code,
            String::from_utf8(o).unwrap(),
            String::from_utf8(e).unwrap(),
        )
    }

    #[test]
    fn eval_negative_arguments() {
        let (code, out, _) = run_str(&["eval", "--a", "-12.5", "--z", "0"]);
        assert_eq!(code, 0);
        assert!(out.contains("region = ELEM_23"), "{out}");
        assert!(out.lines().any(|l| l.starts_with("U  = ")));
        assert!(out.contains("errEstimate"));
    }

    #[test]
    fn coeffs_phi_one() {
        let (code, out, _) = run_str(&["coeffs", "--family", "phi", "--order", "1"]);
        assert_eq!(code, 0);
        assert_eq!(
            out.trim(),
            r#"{"schemaVersion":1,"family":"phi","order":1,"coeffs":["0","-3/4","-5/2","-5/3"]}"#
        );
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&[]).0, EXIT_USAGE);
        assert_eq!(run_str(&["eval", "--a", "1"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["eval", "--a", "x", "--z", "1"]).0, EXIT_USAGE);
        assert_eq!(
            run_str(&["eval", "--a", "1", "--z", "1", "--terms", "13"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_str(&["table", "--which", "5.4"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--precision-bits", "100", "check"]).0, EXIT_USAGE);
        let (code, _, err) = run_str(&["bogus"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("Usage"));
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("eval"));
    }
}
