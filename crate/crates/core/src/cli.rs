//! The `matcanon` command line.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::determinant::det;
use crate::domain::{Elem, Polynomial};
use crate::error::Error;
use crate::hermite::{hermite_canonical, hermite_form, is_hermite_canonical, solve, HermiteResult};
use crate::invariants::invariant_report;
use crate::matrix::Matrix;
use crate::perm::Permutation;
use crate::similarity::{char_poly, eval_poly, jordan, minimal_poly, rcf, similar, SimilarityCertificate};
use crate::smith::{smith, SmithResult};

#[derive(Debug, Parser)]
#[command(name = "matcanon", version, about = "Exact canonical forms of matrices over Z, Q and Q[x]")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit a JSON report.
    #[arg(long, global = true)]
    pub json: bool,
    /// Replay every certificate and fail unless it checks out.
    #[arg(long, global = true)]
    pub verify: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Determinant.
    Det { file: PathBuf },
    /// Row Hermite form `Q*A = H`.
    Hermite {
        file: PathBuf,
        /// Normalize to the unique canonical form.
        #[arg(long)]
        canonical: bool,
        /// Write `Q`, `H`, rank and primary columns as JSON.
        #[arg(long, value_name = "PATH")]
        transforms: Option<PathBuf>,
    },
    /// Smith form `P*A*Q = D`.
    Smith {
        file: PathBuf,
        /// Write `P`, `Q`, `D` and the diagonal as JSON.
        #[arg(long, value_name = "PATH")]
        transforms: Option<PathBuf>,
    },
    /// Determinantal divisors, invariant factors and elementary divisors.
    Invariants { file: PathBuf },
    /// Rational canonical form. Companion blocks carry `a_0..a_{k-1}` in
    /// their bottom row, where `q(x) = x^k - sum a_j x^j`.
    Rcf { file: PathBuf },
    /// Jordan canonical form, with ones on the superdiagonal.
    Jordan { file: PathBuf },
    /// Decide similarity and print a conjugator `S` with `S^-1*A*S = B`.
    Similar { a: PathBuf, b: PathBuf },
    /// Solve `A*x = y` over the fraction field.
    Solve { matrix: PathBuf, vector: PathBuf },
    /// Minimal polynomial.
    Minpoly { file: PathBuf },
    /// Characteristic polynomial `det(xI - A)`.
    Charpoly { file: PathBuf },
    /// Cycles, sign, index and inversions of a permutation in one-line
    /// notation, e.g. `4,2,1,3`.
    Perm {
        perm: String,
        /// Also print the composition `perm * other`.
        #[arg(long, value_name = "PERM")]
        compose: Option<String>,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

struct Report {
    text: String,
    json: Map<String, Value>,
}

impl Report {
    fn new() -> Self {
        let mut json = Map::new();
        for key in ["form", "rank", "diag", "transforms", "verified"] {
            json.insert(key.into(), Value::Null);
        }
        Report { text: String::new(), json }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn set(&mut self, key: &str, v: Value) {
        self.json.insert(key.into(), v);
    }
}

fn scalars(v: &[Elem]) -> Value {
    Value::Array(v.iter().map(|e| Value::String(e.to_string())).collect())
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| scalars(r)).collect())
}

fn joined(v: &[Elem]) -> String {
    v.iter().map(Elem::to_string).collect::<Vec<_>>().join(" ")
}

fn read_matrix(path: &Path) -> Result<Matrix, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Matrix::parse(&text).map_err(|e| match e {
        Error::Parse { .. } => Failure::Usage(format!("{}: {e}", path.display())),
        other => Failure::Domain(format!("{}: {other}", path.display())),
    })
}

fn write_json(path: &Path, v: &Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(v).expect("serializable");
    fs::write(path, text + "\n").map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn check(verify: bool, ok: bool, what: &str) -> Result<Value, Failure> {
    if !verify {
        return Ok(Value::Null);
    }
    if ok {
        Ok(Value::Bool(true))
    } else {
        Err(Failure::Domain(format!("verification failed: {what}")))
    }
}

fn hermite_ok(a: &Matrix, res: &HermiteResult, canonical: bool) -> bool {
    res.q.multiply(a).is_ok_and(|m| m == res.h)
        && det(&res.q).is_ok_and(|d| d.is_unit())
        && (!canonical || is_hermite_canonical(&res.h).is_ok_and(|(r, cols)| r == res.rank && cols == res.primary_cols))
}

fn smith_ok(a: &Matrix, res: &SmithResult) -> bool {
    res.p.multiply(a).and_then(|m| m.multiply(&res.q)).is_ok_and(|m| m == res.d)
        && det(&res.p).is_ok_and(|d| d.is_unit())
        && det(&res.q).is_ok_and(|d| d.is_unit())
        && res.d.is_diagonal()
        && res.diag.windows(2).all(|w| w[0].divides(&w[1]))
}

fn certificate(rep: &mut Report, a: &Matrix, cert: &SimilarityCertificate, verify: bool) -> Result<(), Failure> {
    let ok = cert.verify(a);
    if verify && !ok {
        return Err(Failure::Domain("verification failed: S^-1*A*S".into()));
    }
    rep.set("transforms", json!({ "S": matrix_json(&cert.s), "S_inv": matrix_json(&cert.s_inv) }));
    rep.set("verified", Value::Bool(ok));
    Ok(())
}

fn execute(cli: &Cli) -> Result<Report, Failure> {
    let mut rep = Report::new();
    let verify = cli.verify;
    match &cli.command {
        Command::Det { file } => {
            let a = read_matrix(file)?;
            let d = det(&a)?;
            rep.line(d.to_string());
            rep.set("value", Value::String(d.to_string()));
        }
        Command::Hermite { file, canonical, transforms } => {
            let a = read_matrix(file)?;
            let res = if *canonical { hermite_canonical(&a) } else { hermite_form(&a) };
            let verified = check(verify, hermite_ok(&a, &res, *canonical), "Q*A = H")?;
            rep.line(res.h.to_string().trim_end());
            rep.line(format!("rank {}", res.rank));
            rep.line(format!(
                "primary columns {}",
                res.primary_cols.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
            ));
            let t = json!({
                "Q": matrix_json(&res.q),
                "H": matrix_json(&res.h),
                "rank": res.rank,
                "primary_cols": res.primary_cols,
            });
            if let Some(path) = transforms {
                write_json(path, &t)?;
            }
            rep.set("form", matrix_json(&res.h));
            rep.set("rank", json!(res.rank));
            rep.set("primary_cols", json!(res.primary_cols));
            rep.set("transforms", t);
            rep.set("verified", verified);
        }
        Command::Smith { file, transforms } => {
            let a = read_matrix(file)?;
            let res = smith(&a);
            let verified = check(verify, smith_ok(&a, &res), "P*A*Q = D")?;
            rep.line(format!("diag {}", joined(&res.diag)).trim_end());
            rep.line(format!("rank {}", res.rank));
            let t = json!({
                "P": matrix_json(&res.p),
                "Q": matrix_json(&res.q),
                "D": matrix_json(&res.d),
                "diag": scalars(&res.diag),
                "rank": res.rank,
            });
            if let Some(path) = transforms {
                write_json(path, &t)?;
            }
            rep.set("form", matrix_json(&res.d));
            rep.set("rank", json!(res.rank));
            rep.set("diag", scalars(&res.diag));
            rep.set("transforms", t);
            rep.set("verified", verified);
        }
        Command::Invariants { file } => {
            let a = read_matrix(file)?;
            let r = invariant_report(&a)?;
            let eds: Vec<String> = r
                .elementary_divisors
                .iter()
                .map(|(p, e)| if *e == 1 { format!("({p})") } else { format!("({p})^{e}") })
                .collect();
            rep.line(format!("rank {}", r.rank));
            rep.line(format!("determinantal divisors {}", joined(&r.det_divisors)));
            rep.line(format!("invariant factors {}", joined(&r.invariant_factors)).trim_end());
            rep.line(format!("elementary divisors {}", eds.join(" ")).trim_end());
            rep.set("rank", json!(r.rank));
            rep.set("diag", scalars(&r.invariant_factors));
            rep.set("det_divisors", scalars(&r.det_divisors));
            rep.set("invariant_factors", scalars(&r.invariant_factors));
            rep.set(
                "elementary_divisors",
                Value::Array(
                    r.elementary_divisors
                        .iter()
                        .map(|(p, e)| json!({ "prime": p.to_string(), "exponent": e }))
                        .collect(),
                ),
            );
        }
        Command::Rcf { file } | Command::Jordan { file } => {
            let a = read_matrix(file)?;
            let (cert, form) = if matches!(cli.command, Command::Rcf { .. }) { rcf(&a)? } else { jordan(&a)? };
            certificate(&mut rep, &a, &cert, verify)?;
            rep.line(form.to_string().trim_end());
            rep.line("S =");
            rep.line(cert.s.to_string().trim_end());
            rep.set("form", matrix_json(&form));
        }
        Command::Similar { a, b } => {
            let (a, b) = (read_matrix(a)?, read_matrix(b)?);
            match similar(&a, &b)? {
                None => {
                    rep.line("not similar");
                    rep.set("similar", Value::Bool(false));
                }
                Some(cert) => {
                    certificate(&mut rep, &a, &cert, verify)?;
                    rep.line("similar");
                    rep.line("S =");
                    rep.line(cert.s.to_string().trim_end());
                    rep.set("similar", Value::Bool(true));
                    rep.set("form", matrix_json(&cert.target));
                }
            }
        }
        Command::Solve { matrix, vector } => {
            let a = read_matrix(matrix)?;
            let y = read_matrix(vector)?;
            match solve(&a, &y)? {
                None => {
                    rep.line("inconsistent");
                    rep.set("consistent", Value::Bool(false));
                }
                Some((x, null)) => {
                    let lifted = a.lift(x.ring())?;
                    let ok = lifted.multiply(&x).is_ok_and(|v| Ok(v) == y.lift(x.ring()))
                        && null.iter().all(|v| lifted.multiply(v).is_ok_and(|w| w.is_zero()));
                    let verified = check(verify, ok, "A*x = y")?;
                    let rank = a.cols() - null.len();
                    rep.line(format!("particular {}", joined(x.entries())));
                    rep.line(format!("rank {rank}"));
                    rep.line(format!("nullity {}", null.len()));
                    for v in &null {
                        rep.line(format!("null {}", joined(v.entries())));
                    }
                    rep.set("consistent", Value::Bool(true));
                    rep.set("rank", json!(rank));
                    rep.set("particular", scalars(x.entries()));
                    rep.set("null_basis", Value::Array(null.iter().map(|v| scalars(v.entries())).collect()));
                    rep.set("verified", verified);
                }
            }
        }
        Command::Minpoly { file } | Command::Charpoly { file } => {
            let a = read_matrix(file)?;
            let minimal = matches!(cli.command, Command::Minpoly { .. });
            let p: Polynomial = if minimal { minimal_poly(&a)? } else { char_poly(&a)? };
            let verified = check(verify, eval_poly(&p, &a).is_ok_and(|m| m.is_zero()), "q(A) = 0")?;
            rep.line(p.to_string());
            rep.set("value", Value::String(p.to_string()));
            rep.set("verified", verified);
        }
        Command::Perm { perm, compose } => {
            let f = Permutation::parse(perm).map_err(|e| Failure::Usage(e.to_string()))?;
            rep.line(format!("cycles {f}"));
            rep.line(format!("inverse {}", one_line(&f.inverse())));
            rep.line(format!("sign {}", f.sign()));
            rep.line(format!("index {}", f.index()));
            rep.line(format!("inversions {}", f.inversions().len()));
            rep.set("value", Value::String(f.to_string()));
            rep.set("inverse", Value::String(one_line(&f.inverse())));
            rep.set("sign", json!(f.sign()));
            rep.set("index", json!(f.index()));
            rep.set("inversions", json!(f.inversions().len()));
            if let Some(g) = compose {
                let g = Permutation::parse(g).map_err(|e| Failure::Usage(e.to_string()))?;
                let fg = f.compose(&g)?;
                rep.line(format!("composition {}", one_line(&fg)));
                rep.set("composition", Value::String(one_line(&fg)));
            }
        }
    }
    Ok(rep)
}

fn one_line(p: &Permutation) -> String {
    p.images().iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

/// Runs the command line `args` (program name first), writing to `out` and
/// `err`. Returns the exit code: 0 on success, 1 on domain errors, 2 on
/// usage and parse errors.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok(rep) => {
            let _ = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&Value::Object(rep.json)).expect("serializable"))
            } else {
                write!(out, "{}", rep.text)
            };
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}
