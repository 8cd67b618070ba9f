//! Command-line front end. Every subcommand parses its arguments, calls into
//! the library and renders the result as a table, CSV or JSON.
//!
//! Exit codes: 0 on success (audit mismatches included), 1 on domain
//! errors, 2 on usage errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use serde::Serialize;
use serde_json::json;

use crate::error::Error;
use crate::fibrations::{
    check_word_against_x_family, knot_surgered_fibration, x_family, FibrationDescriptor,
};
use crate::meyer::{meyer_tau, signature_from_word, word_product, SympMatrix, TwistWord};
use crate::search::{
    audit_corollary, geography_csv, geography_emit, nonzero_signature_filter, solutions_csv,
    solve_params, Fraction, GeographyRecord, SolutionRow, GEOGRAPHY_COLUMNS, SOLUTION_COLUMNS,
};

pub const FORMAT_ENV: &str = "LF_FORGE_FORMAT";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Table,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "lf-forge",
    version,
    about = "Surface bundles over surfaces from equivalent Lefschetz fibrations"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, env = FORMAT_ENV)]
    format: Option<OutputFormat>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate parameter solutions (h, k, n, g) and their surface bundles
    Search {
        #[arg(long)]
        h_max: i64,
        #[arg(long)]
        k_max: i64,
        /// Only keep bundles with non-zero signature
        #[arg(long)]
        nonzero_only: bool,
    },
    /// Describe one Lefschetz fibration
    Family {
        #[command(subcommand)]
        which: FamilyKind,
    },
    /// Recompute the numbers stated for a worked example (4.2 or 4.3)
    Verify { corollary: String },
    /// Symplectic monodromy and Meyer-cocycle signatures of twist words
    Meyer {
        #[command(subcommand)]
        sub: MeyerCommand,
    },
    /// Emit geography points and lines as CSV
    Geography {
        #[arg(long)]
        h: i64,
        #[arg(long)]
        k: i64,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        chi_min: Rational64,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        chi_max: Rational64,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        step: Rational64,
        /// Write CSV here instead of printing
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum FamilyKind {
    /// X(h, k)
    X {
        #[arg(long, allow_hyphen_values = true)]
        h: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// E(n)_K for a fibered knot of genus g
    Enk {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        g: i64,
    },
}

#[derive(Debug, Subcommand)]
enum MeyerCommand {
    /// Signature of the fibration with this monodromy word
    Sig { word_file: PathBuf },
    /// Total monodromy matrix of the word
    Product { word_file: PathBuf },
    /// Meyer cocycle of two symplectic matrices, rows separated by ';'
    Tau {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Compare a word with the genus, length and signature expected of X(h, k)
    Audit {
        #[arg(long)]
        h: i64,
        #[arg(long)]
        k: i64,
        word_file: PathBuf,
    },
}

/// Accepts `p`, `p/q` and finite decimals such as `-1.25`.
pub fn parse_rational(s: &str) -> Result<Rational64, String> {
    let s = s.trim();
    let bad = || format!("not a rational number: {s:?}");
    if s.contains('/') {
        return s.parse::<Rational64>().map_err(|_| bad());
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) || frac.len() > 18 {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int_part: i64 = match int.trim_start_matches(['-', '+']) {
            "" => 0,
            digits => digits.parse().map_err(|_| bad())?,
        };
        let den = 10i64.checked_pow(frac.len() as u32).ok_or_else(bad)?;
        let frac_part: i64 = frac.parse().map_err(|_| bad())?;
        let magnitude = Rational64::from_integer(int_part) + Rational64::new(frac_part, den);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    s.parse::<i64>()
        .map(Rational64::from_integer)
        .map_err(|_| bad())
}

/// Parses `"1,-1;0,1"` (entries split on commas or whitespace).
fn parse_matrix(s: &str) -> Result<SympMatrix, Failure> {
    let rows = s
        .split(';')
        .map(|row| {
            row.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|_| Failure::Usage(format!("bad matrix entry {t:?}")))
                })
                .collect::<Result<Vec<i64>, Failure>>()
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    SympMatrix::from_rows(&rows).map_err(|e| match e {
        Error::DimensionMismatch { .. } => Failure::Usage(format!("matrix {s:?}: {e}")),
        other => Failure::Domain(other.to_string()),
    })
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::RangeTooSmall { .. } | Error::UnknownCorollary(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Domain(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{e}");
            return code;
        }
    };
    let format = cli.format.unwrap_or_default();
    match dispatch(cli.command, format, out) {
        Ok(()) => 0,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command, format: OutputFormat, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Search {
            h_max,
            k_max,
            nonzero_only,
        } => cmd_search(h_max, k_max, nonzero_only, format, out),
        Command::Family { which } => {
            let descriptor = match which {
                FamilyKind::X { h, k } => x_family(h, k)?,
                FamilyKind::Enk { n, g } => knot_surgered_fibration(n, g)?,
            };
            cmd_family(&descriptor, format, out)
        }
        Command::Verify { corollary } => cmd_verify(&corollary, format, out),
        Command::Meyer { sub } => cmd_meyer(sub, format, out),
        Command::Geography {
            h,
            k,
            chi_min,
            chi_max,
            step,
            out: path,
        } => cmd_geography(h, k, chi_min, chi_max, step, path, format, out),
    }
}

fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = headers
        .iter()
        .enumerate()
        .map(|(i, h)| {
            rows.iter()
                .map(|r| r[i].len())
                .chain([h.len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut text = line(headers.to_vec());
    for row in rows {
        text.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    text
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn cmd_search(
    h_max: i64,
    k_max: i64,
    nonzero_only: bool,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let mut sols = solve_params(h_max, k_max)?;
    if nonzero_only {
        sols = nonzero_signature_filter(&sols)
            .into_iter()
            .map(|s| s.solution)
            .collect();
    }
    let rows = sols
        .iter()
        .map(SolutionRow::build)
        .collect::<Result<Vec<_>, _>>()?;
    let text = match format {
        OutputFormat::Csv => solutions_csv(&rows),
        OutputFormat::Json => to_json(&rows),
        OutputFormat::Table => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| r.cells().iter().map(i64::to_string).collect())
                .collect();
            let mut t = render_table(&SOLUTION_COLUMNS, &cells);
            t.push_str(&format!("{} solution(s)\n", rows.len()));
            t
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

const FAMILY_COLUMNS: [&str; 10] = [
    "label",
    "fiber_genus",
    "base",
    "singular_fibers",
    "all_nonseparating",
    "e",
    "sigma",
    "chi_num",
    "chi_den",
    "c1_sq",
];

fn cmd_family(
    f: &FibrationDescriptor,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let chi = f.total.chi_h();
    let values = [
        f.label.clone(),
        f.fiber_genus.to_string(),
        f.base.to_string(),
        f.singular_fibers.to_string(),
        f.all_nonseparating.to_string(),
        f.total.e().to_string(),
        f.total.sigma().to_string(),
        chi.numer().to_string(),
        chi.denom().to_string(),
        f.total.c1_sq().to_string(),
    ];
    let text = match format {
        OutputFormat::Csv => format!("{}\n{}\n", FAMILY_COLUMNS.join(","), values.join(",")),
        OutputFormat::Json => to_json(&json!({
            "label": f.label,
            "fiber_genus": f.fiber_genus,
            "base": f.base.to_string(),
            "singular_fibers": f.singular_fibers,
            "all_nonseparating": f.all_nonseparating,
            "e": f.total.e(),
            "sigma": f.total.sigma(),
            "chi_h": Fraction::from(chi),
            "c1_sq": f.total.c1_sq(),
        })),
        OutputFormat::Table => {
            let lines = [
                ("fibration", f.label.clone()),
                ("fiber genus", values[1].clone()),
                ("base", values[2].clone()),
                ("singular fibers (s)", values[3].clone()),
                ("all nonseparating", values[4].clone()),
                ("e", values[5].clone()),
                ("sigma", values[6].clone()),
                ("chi_h", chi.to_string()),
                ("c1^2", values[9].clone()),
            ];
            lines
                .iter()
                .map(|(k, v)| format!("{k:<20} {v}\n"))
                .collect()
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn status(matches: bool) -> &'static str {
    if matches {
        "MATCH"
    } else {
        "MISMATCH"
    }
}

fn cmd_verify(id: &str, format: OutputFormat, out: &mut dyn Write) -> Result<(), Failure> {
    let audit = audit_corollary(id)?;
    let text = match format {
        OutputFormat::Csv => {
            let mut t = String::from("corollary,claim,claimed,computed,status\n");
            for c in &audit.claims {
                t.push_str(&format!(
                    "{},\"{}\",\"{}\",\"{}\",{}\n",
                    audit.corollary,
                    c.claim,
                    c.claimed,
                    c.computed,
                    status(c.matches)
                ));
            }
            t
        }
        OutputFormat::Json => {
            let claims: Vec<_> = audit
                .claims
                .iter()
                .map(|c| {
                    json!({
                        "claim": c.claim,
                        "claimed": c.claimed,
                        "computed": c.computed,
                        "status": status(c.matches),
                    })
                })
                .collect();
            to_json(&json!({
                "corollary": audit.corollary,
                "h": audit.h,
                "k": audit.k,
                "claims": claims,
            }))
        }
        OutputFormat::Table => {
            let rows: Vec<Vec<String>> = audit
                .claims
                .iter()
                .map(|c| {
                    vec![
                        status(c.matches).to_string(),
                        c.claim.clone(),
                        c.claimed.clone(),
                        c.computed.clone(),
                    ]
                })
                .collect();
            let mut t = format!(
                "corollary {} (h = {}, k = {})\n",
                audit.corollary, audit.h, audit.k
            );
            t.push_str(&render_table(
                &["status", "claim", "claimed", "computed"],
                &rows,
            ));
            t.push_str(&format!(
                "{} claim(s), {} mismatch(es)\n",
                audit.claims.len(),
                audit.mismatches().count()
            ));
            t
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn read_word(path: &PathBuf) -> Result<TwistWord, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    text.parse::<TwistWord>()
        .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn matrix_text(m: &SympMatrix, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => format!("{m}\n"),
        OutputFormat::Csv => m
            .rows()
            .iter()
            .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(",") + "\n")
            .collect(),
        OutputFormat::Json => to_json(&json!({ "genus": m.genus(), "rows": m.rows() })),
    }
}

fn scalar_text(name: &str, value: i64, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => format!("{value}\n"),
        OutputFormat::Csv => format!("{name}\n{value}\n"),
        OutputFormat::Json => to_json(&json!({ name: value })),
    }
}

fn cmd_meyer(sub: MeyerCommand, format: OutputFormat, out: &mut dyn Write) -> Result<(), Failure> {
    let text = match sub {
        MeyerCommand::Sig { word_file } => {
            let word = read_word(&word_file)?;
            scalar_text("signature", signature_from_word(&word)?, format)
        }
        MeyerCommand::Product { word_file } => {
            let word = read_word(&word_file)?;
            matrix_text(&word_product(&word)?, format)
        }
        MeyerCommand::Tau { a, b } => {
            let (a, b) = (parse_matrix(&a)?, parse_matrix(&b)?);
            scalar_text("tau", meyer_tau(&a, &b)?, format)
        }
        MeyerCommand::Audit { h, k, word_file } => {
            let word = read_word(&word_file)?;
            let check = check_word_against_x_family(&word, h, k)?;
            let rows = [
                ("genus", check.word_genus, check.expected_genus),
                ("twists", check.twist_count, check.expected_twists),
                ("signature", check.signature, check.expected_signature),
            ];
            match format {
                OutputFormat::Json => {
                    let items: Vec<_> = rows
                        .iter()
                        .map(|(name, got, want)| {
                            json!({ "quantity": name, "word": got, "expected": want, "status": status(got == want) })
                        })
                        .collect();
                    to_json(&json!({ "h": h, "k": k, "checks": items }))
                }
                OutputFormat::Csv => {
                    let mut t = String::from("quantity,word,expected,status\n");
                    for (name, got, want) in rows {
                        t.push_str(&format!("{name},{got},{want},{}\n", status(got == want)));
                    }
                    t
                }
                OutputFormat::Table => {
                    let cells: Vec<Vec<String>> = rows
                        .iter()
                        .map(|(name, got, want)| {
                            vec![
                                status(got == want).to_string(),
                                name.to_string(),
                                got.to_string(),
                                want.to_string(),
                            ]
                        })
                        .collect();
                    let mut t = format!("word vs X({h},{k})\n");
                    t.push_str(&render_table(
                        &["status", "quantity", "word", "expected"],
                        &cells,
                    ));
                    t
                }
            }
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_geography(
    h: i64,
    k: i64,
    chi_min: Rational64,
    chi_max: Rational64,
    step: Rational64,
    path: Option<PathBuf>,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let points = geography_emit(h, k, chi_min, chi_max, step)?;
    if let Some(path) = path {
        fs::write(&path, geography_csv(&points))
            .map_err(|e| Failure::Domain(format!("cannot write {}: {e}", path.display())))?;
        writeln!(out, "wrote {} rows to {}", points.len(), path.display())?;
        return Ok(());
    }
    let text = match format {
        OutputFormat::Csv => geography_csv(&points),
        OutputFormat::Json => {
            let records: Vec<GeographyRecord> = points.iter().map(GeographyRecord::from).collect();
            to_json(&records)
        }
        OutputFormat::Table => {
            let rows: Vec<Vec<String>> = points
                .iter()
                .map(|p| {
                    let r = GeographyRecord::from(p);
                    vec![
                        p.tag.as_str().to_string(),
                        r.chi.num.to_string(),
                        r.chi.den.to_string(),
                        r.c1sq.num.to_string(),
                        r.c1sq.den.to_string(),
                        r.chi_dec,
                        r.c1sq_dec,
                    ]
                })
                .collect();
            render_table(&GEOGRAPHY_COLUMNS, &rows) + &format!("{} row(s)\n", points.len())
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("lf-forge").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3"), Ok(Rational64::from_integer(3)));
        assert_eq!(parse_rational("-3/6"), Ok(Rational64::new(-1, 2)));
        assert_eq!(parse_rational("1.25"), Ok(Rational64::new(5, 4)));
        assert_eq!(parse_rational("-0.5"), Ok(Rational64::new(-1, 2)));
        assert_eq!(parse_rational(".5"), Ok(Rational64::new(1, 2)));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.").is_err());
    }

    #[test]
    fn matrix_parsing() {
        let m = parse_matrix("1,-1; 0,1").ok().unwrap();
        assert_eq!(m.rows(), vec![vec![1, -1], vec![0, 1]]);
        assert!(matches!(parse_matrix("1,2;3"), Err(Failure::Usage(_))));
        assert!(matches!(parse_matrix("2,0;0,1"), Err(Failure::Domain(_))));
        assert!(matches!(parse_matrix("1,x;0,1"), Err(Failure::Usage(_))));
    }

    #[test]
    fn search_table_and_exit_codes() {
        let (code, out, _) = run_args(&["search", "--h-max", "10", "--k-max", "10"]);
        assert_eq!(code, 0);
        assert!(out.lines().any(|l| l.split_whitespace().collect::<Vec<_>>()
            == ["5", "2", "2", "3", "7", "47", "-8", "8", "48"]));
        assert_eq!(run_args(&["search", "--h-max", "0", "--k-max", "4"]).0, 2);
        assert_eq!(run_args(&["search", "--h-max", "x", "--k-max", "4"]).0, 2);
    }

    #[test]
    fn tau_subcommand() {
        let (code, out, _) = run_args(&["meyer", "tau", "--a", "1,0;0,1", "--b", "1,-1;0,1"]);
        assert_eq!((code, out.as_str()), (0, "0\n"));
        let (code, _, err) = run_args(&["meyer", "tau", "--a", "2,0;0,1", "--b", "1,0;0,1"]);
        assert_eq!(code, 1, "{err}");
        let (code, _, _) = run_args(&[
            "meyer",
            "tau",
            "--a",
            "1,0;0,1",
            "--b",
            "1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1",
        ]);
        assert_eq!(code, 1);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("search"));
    }
}
