//! The `threelimit` command line.
//!
//! ```text
//! threelimit compute   --poly R --k 2 [--format text|json]
//! threelimit enumerate --family U --k 5
//! threelimit verify    --identity all --kmax default
//! threelimit sequence  --sequence r --nmax 14
//! threelimit report    [--nmax 14]
//! ```
//!
//! Every verb takes `--format` and `--out <path>`. Exit status is 0 on
//! success, 1 when a verification fails, 2 on a usage or validation error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use crate::combinatorics::{enumerate_family, enumerate_seq_family, Family, SeqFamily};
use crate::continuants::{em_denominator, em_numerator, k_denominator, k_numerator, r_poly};
use crate::error::{Error, Result};
use crate::identities::{sequence, verify, Identity, SequenceName, VerificationReport};
use crate::monoid_ring::substitution::{kill_a_and_b0, kill_b};
use crate::monoid_ring::Polynomial;

#[derive(Parser, Debug)]
#[command(name = "threelimit", version, about = "Continuants of K in noncommuting indeterminates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print one polynomial built by its recurrence.
    Compute {
        /// A, B (general continued fraction), P, Q, R (K), C, D, G, H (specializations).
        #[arg(long)]
        poly: PolyName,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[command(flatten)]
        output: Output,
    },
    /// List the members of a monomial or sequence family.
    Enumerate {
        /// A, R, U, V (monomials) or C, D (sequences).
        #[arg(long)]
        family: String,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[command(flatten)]
        output: Output,
    },
    /// Check identities for every k up to kmax.
    Verify {
        /// An identity name, or `all`.
        #[arg(long)]
        identity: String,
        /// An integer, or `default`.
        #[arg(long, default_value = "default")]
        kmax: String,
        #[command(flatten)]
        output: Output,
    },
    /// Print a counting sequence.
    Sequence {
        #[arg(long)]
        sequence: String,
        #[arg(long, default_value_t = 14)]
        nmax: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Verify everything at default ranges and print every sequence table.
    Report {
        #[arg(long, default_value_t = 14)]
        nmax: usize,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PolyName {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
    #[value(name = "R")]
    R,
    #[value(name = "C")]
    C,
    #[value(name = "D")]
    D,
    #[value(name = "G")]
    G,
    #[value(name = "H")]
    H,
}

fn compute(poly: PolyName, k: i64) -> Result<Polynomial> {
    let p = match poly {
        PolyName::A => (*em_numerator(k)?).clone(),
        PolyName::B => (*em_denominator(k)?).clone(),
        PolyName::P => (*k_numerator(k)?).clone(),
        PolyName::Q => (*k_denominator(k)?).clone(),
        PolyName::R => (*r_poly(k)?).clone(),
        PolyName::C => k_numerator(k)?.substitute(kill_b),
        PolyName::D => k_denominator(k)?.substitute(kill_b),
        PolyName::G => k_numerator(k)?.substitute(kill_a_and_b0),
        PolyName::H => k_denominator(k)?.substitute(kill_a_and_b0),
    };
    Ok(p)
}

fn check_k(k: i64) -> Result<()> {
    if k < 0 {
        return Err(Error::IndexBelowStart { k, first: 0 });
    }
    Ok(())
}

fn enumerate(family: &str, k: i64, format: Format) -> Result<String> {
    check_k(k)?;
    if let Ok(fam) = family.parse::<Family>() {
        let members = enumerate_family(fam, k);
        return Ok(match format {
            Format::Text => members.iter().map(|m| format!("{m}\n")).collect(),
            Format::Json => {
                let rows: Vec<_> =
                    members.iter().map(|m| json!({ "word": m, "index": m.index() })).collect();
                to_json(&rows)
            }
        });
    }
    let fam: SeqFamily = family
        .parse()
        .map_err(|_| Error::UnknownName { kind: "family", name: family.to_string() })?;
    let members = enumerate_seq_family(fam, k);
    Ok(match format {
        Format::Text => members
            .iter()
            .map(|s| s.iter().map(u32::to_string).collect::<Vec<_>>().join(" ") + "\n")
            .collect(),
        Format::Json => to_json(&members),
    })
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn report_line(r: &VerificationReport) -> String {
    let [lo, hi] = r.k_checked;
    match &r.first_failure {
        None => format!("{:<16} k = {lo}..{hi}  verified\n", r.identity),
        Some(f) => format!(
            "{:<16} k = {lo}..{hi}  FAILED at k = {}\n  lhs: {}\n  rhs: {}\n",
            r.identity, f.k, f.lhs, f.rhs
        ),
    }
}

fn run_verify(identity: &str, kmax: &str) -> Result<Vec<VerificationReport>> {
    let identities: Vec<Identity> = if identity == "all" {
        Identity::ALL.to_vec()
    } else {
        vec![identity.parse()?]
    };
    let kmax: Option<i64> = match kmax {
        "default" => None,
        s => Some(s.parse().map_err(|_| Error::Parse(format!("--kmax expects an integer or `default`, got `{s}`")))?),
    };
    // validate every range before starting any work
    for &i in &identities {
        let k = kmax.unwrap_or(i.default_kmax());
        if k < 0 {
            return Err(Error::IndexBelowStart { k, first: 0 });
        }
        if k > i.max_kmax() {
            return Err(Error::AboveCap { k, cap: i.max_kmax() });
        }
    }
    use rayon::prelude::*;
    identities.par_iter().map(|&i| verify(i, kmax.unwrap_or(i.default_kmax()))).collect()
}

fn strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(BigInt::to_string).collect()
}

fn sequence_json(name: SequenceName, nmax: usize) -> serde_json::Value {
    let t = name.table();
    json!({
        "name": name.name(),
        "initial": t.initial,
        "recurrence": t.recurrence,
        "gf_numerator": t.gf_numerator,
        "gf_denominator": t.gf_denominator,
        "values": strings(&sequence(name, nmax)),
    })
}

fn sequence_text(name: SequenceName, nmax: usize) -> String {
    format!("{}: {}\n", name, strings(&sequence(name, nmax)).join(", "))
}

/// Output text and whether every check passed.
fn execute(command: &Command) -> Result<(String, bool)> {
    match command {
        Command::Compute { poly, k, output } => {
            check_k(*k)?;
            let p = compute(*poly, *k)?;
            let text = match output.format {
                Format::Text => format!("{p}\n"),
                Format::Json => to_json(&p),
            };
            Ok((text, true))
        }
        Command::Enumerate { family, k, output } => Ok((enumerate(family, *k, output.format)?, true)),
        Command::Verify { identity, kmax, output } => {
            let reports = run_verify(identity, kmax)?;
            let ok = reports.iter().all(VerificationReport::is_verified);
            let text = match output.format {
                Format::Text => reports.iter().map(report_line).collect(),
                Format::Json => to_json(&reports),
            };
            Ok((text, ok))
        }
        Command::Sequence { sequence: name, nmax, output } => {
            let name: SequenceName = name.parse()?;
            let text = match output.format {
                Format::Text => sequence_text(name, *nmax),
                Format::Json => to_json(&sequence_json(name, *nmax)),
            };
            Ok((text, true))
        }
        Command::Report { nmax, output } => {
            let reports = run_verify("all", "default")?;
            let ok = reports.iter().all(VerificationReport::is_verified);
            let text = match output.format {
                Format::Text => {
                    let mut s = String::from("identities\n");
                    s.extend(reports.iter().map(report_line));
                    s.push_str("\nsequences\n");
                    s.extend(SequenceName::ALL.iter().map(|&n| sequence_text(n, *nmax)));
                    s
                }
                Format::Json => {
                    let seqs: Vec<_> = SequenceName::ALL.iter().map(|&n| sequence_json(n, *nmax)).collect();
                    to_json(&json!({ "verification": reports, "sequences": seqs }))
                }
            };
            Ok((text, ok))
        }
    }
}

fn output_of(command: &Command) -> &Output {
    match command {
        Command::Compute { output, .. }
        | Command::Enumerate { output, .. }
        | Command::Verify { output, .. }
        | Command::Sequence { output, .. }
        | Command::Report { output, .. } => output,
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// status.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                2
            } else {
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };
    let (text, ok) = match execute(&cli.command) {
        Ok(v) => v,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let written = match &output_of(&cli.command).out {
        Some(path) => std::fs::write(path, &text),
        None => out.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return 2;
    }
    if ok {
        0
    } else {
        1
    }
}
