//! The `hirota` command line.
//!
//! [`run`] parses arguments, writes the rendered result to `out` (or the
//! `--out` file) and diagnostics to `err`, and returns the process exit
//! code: 0 on success, 1 for a negative answer (`check` with a nonzero
//! residual, `rational` at a degree without solutions, a failed sweep), 2
//! for usage and input errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::dop::BilinearOp;
use crate::exactpoly::{parse_rational, rational_to_string, MultiPoly, PolyError};
use crate::fundsol::build_q;
use crate::kdvlike;
use crate::leading::{nonexistence_certificate, z_poly, Certificate};
use crate::solutions::{classify, log_derivative, verify_kdvlike, Classification, SolutionFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Parser)]
#[command(name = "hirota", version, about = "Exact polynomial solutions of the p=3 KdV-like bilinear equation")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for parallel commands.
    #[arg(long, env = "HIROTA_JOBS", global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solution family of x-degree m, or a nonexistence certificate.
    Fundamental {
        #[arg(short)]
        m: usize,
        /// Bindings for free constants, e.g. `c2=1/2,c0=3`.
        #[arg(long)]
        constants: Option<String>,
    },
    /// Apply a bilinear operator `D(p;var^pow,...)` to f.g (g defaults to f).
    Apply { opspec: String, f: PathBuf, g: Option<PathBuf> },
    /// Print T(f) and the bilinear residual; exit 1 unless both vanish.
    Check { f: PathBuf },
    /// The universal polynomial Q_k in m, t and c1..ck.
    Qpoly {
        #[arg(short)]
        k: usize,
    },
    /// The leading polynomial z_q in m.
    Zpoly {
        #[arg(short)]
        q: usize,
    },
    /// Nonexistence certificates for every degree in FROM..=TO (FROM >= 5).
    Sweep {
        from: usize,
        to: usize,
        /// Also recompute the leading coefficients from the Q polynomials.
        #[arg(long)]
        direct: bool,
    },
    /// Rational solution u = 2 (ln f)_x for degree m with its PDE residual.
    Rational {
        #[arg(short)]
        m: usize,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<PolyError> for Failure {
    fn from(e: PolyError) -> Self {
        Failure::usage(e.to_string())
    }
}

/// Rendered output plus exit code.
struct Output {
    body: String,
    code: i32,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, code: 0 }
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = execute(&cli);
    match result {
        Ok(output) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &output.body).map_err(|e| format!("{}: {e}", path.display())),
                None => out.write_all(output.body.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
            output.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Fundamental { m, constants } => cmd_fundamental(*m, constants.as_deref(), fmt),
        Command::Apply { opspec, f, g } => cmd_apply(opspec, f, g.as_ref(), fmt),
        Command::Check { f } => cmd_check(f, fmt),
        Command::Qpoly { k } => Ok(Output::ok(render_poly(&build_q(*k).value, fmt))),
        Command::Zpoly { q } => Ok(Output::ok(render_poly(&z_poly(*q), fmt))),
        Command::Sweep { from, to, direct } => cmd_sweep(*from, *to, *direct, jobs(cli), fmt),
        Command::Rational { m } => cmd_rational(*m, fmt),
    }
}

fn jobs(cli: &Cli) -> usize {
    cli.jobs
        .map(|j| j as usize)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

fn render_poly(p: &MultiPoly, fmt: Format) -> String {
    match fmt {
        Format::Text => format!("{p}\n"),
        Format::Json => format!("{}\n", p.to_json()),
        Format::Latex => format!("{}\n", p.to_latex()),
    }
}

fn read_poly(path: &PathBuf) -> Result<MultiPoly, Failure> {
    let s = fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    MultiPoly::from_json(&s).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

/// Parses `name=value[,name=value]*` with rational values.
pub fn parse_bindings(s: &str) -> Result<BTreeMap<String, crate::exactpoly::Rational>, String> {
    let mut out = BTreeMap::new();
    for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
        let (name, value) = item.split_once('=').ok_or_else(|| format!("malformed binding `{item}`"))?;
        let name = name.trim();
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(format!("malformed constant name in `{item}`"));
        }
        let value = parse_rational(value).map_err(|e| e.to_string())?;
        if out.insert(name.to_string(), value).is_some() {
            return Err(format!("constant `{name}` bound twice"));
        }
    }
    Ok(out)
}

fn render_family(fam: &SolutionFamily, fmt: Format) -> String {
    match fmt {
        Format::Json => format!("{}\n", serde_json::to_string(fam).unwrap()),
        Format::Text => {
            let mut s = format!("m = {}\nf = {}\n", fam.m, fam.f);
            for c in &fam.constraints {
                let _ = writeln!(s, "constraint: {} = {}", c.constant, c.value);
            }
            s
        }
        Format::Latex => format!("f(x,t)={}\n", fam.f.to_latex()),
    }
}

fn certificate_text(c: &Certificate) -> String {
    let mut s = format!("m = {}: not_exists", c.m);
    if let Some(w) = &c.witness {
        let _ = write!(s, ", witness {} = {}", w.poly, rational_to_string(&w.value));
    }
    if let Some(d) = &c.deciding {
        let _ = write!(s, ", Y{} = {}", d.k / 3, rational_to_string(&d.value));
    }
    if !c.leading_y.is_empty() {
        let vals: Vec<String> =
            c.leading_y.iter().map(|l| format!("k={}: {}", l.k, rational_to_string(&l.value))).collect();
        let _ = write!(s, ", leading_y [{}]", vals.join(", "));
    }
    s
}

fn render_certificate(c: &Certificate, fmt: Format) -> String {
    match fmt {
        Format::Json => format!("{}\n", serde_json::to_string(c).unwrap()),
        Format::Text => format!("{}\n", certificate_text(c)),
        Format::Latex => {
            let w = c.witness.as_ref().map(|w| {
                format!("{}={}\\neq 0", crate::exactpoly::latex_var(&w.poly), latex_rational(&w.value))
            });
            format!("m={}:\\ \\text{{no solution}},\\ {}\n", c.m, w.unwrap_or_default())
        }
    }
}

fn latex_rational(r: &crate::exactpoly::Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        let sign = if r.numer() < &num_bigint::BigInt::from(0) { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", r.numer().magnitude(), r.denom())
    }
}

fn cmd_fundamental(m: usize, constants: Option<&str>, fmt: Format) -> Result<Output, Failure> {
    let bindings = match constants {
        Some(s) => parse_bindings(s).map_err(Failure::usage)?,
        None => BTreeMap::new(),
    };
    let cls = classify(m).map_err(|e| Failure { code: 1, message: e.to_string() })?;
    match cls {
        Classification::Family(mut fam) => {
            let free = fam.free_constants();
            for (name, value) in &bindings {
                if !free.contains(name) {
                    return Err(Failure::usage(format!("`{name}` is not a free constant of the degree-{m} family")));
                }
                fam.f = fam.f.substitute_value(name, value)?;
            }
            Ok(Output::ok(render_family(&fam, fmt)))
        }
        Classification::NotExists(c) => Ok(Output::ok(render_certificate(&c, fmt))),
    }
}

fn cmd_apply(opspec: &str, f: &PathBuf, g: Option<&PathBuf>, fmt: Format) -> Result<Output, Failure> {
    let op: BilinearOp = opspec.parse().map_err(|e: crate::dop::OpError| Failure::usage(e.to_string()))?;
    let fp = read_poly(f)?;
    let gp = match g {
        Some(p) => read_poly(p)?,
        None => fp.clone(),
    };
    let r = op.apply(&fp, &gp).map_err(|e| Failure::usage(e.to_string()))?;
    Ok(Output::ok(render_poly(&r, fmt)))
}

fn cmd_check(f: &PathBuf, fmt: Format) -> Result<Output, Failure> {
    let p = read_poly(f)?;
    let t = kdvlike::t_operator(&p);
    let res = kdvlike::bilinear_residual(&p);
    let zero = t.is_zero() && res.is_zero();
    let body = match fmt {
        Format::Text => format!("T(f) = {t}\nresidual = {res}\n{}\n", if zero { "solution" } else { "not a solution" }),
        Format::Json => format!("{}\n", json!({ "t": t, "residual": res, "zero": zero })),
        Format::Latex => format!("Tf={}\\\\\n(D_{{3,x}}D_{{3,t}}+D_{{3,x}}^{{4}})f\\cdot f={}\n", t.to_latex(), res.to_latex()),
    };
    Ok(Output { body, code: if zero { 0 } else { 1 } })
}

fn cmd_sweep(from: usize, to: usize, direct: bool, jobs: usize, fmt: Format) -> Result<Output, Failure> {
    if from < 5 {
        return Err(Failure::usage(format!("sweep starts at degree 5; degree {from} is handled by `fundamental`")));
    }
    if from > to {
        return Err(Failure::usage(format!("empty range {from}..={to}")));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure::usage(e.to_string()))?;
    let results: Vec<_> = pool.install(|| (from..=to).into_par_iter().map(|m| (m, nonexistence_certificate(m, direct))).collect());
    let mut body = String::new();
    let mut code = 0;
    for (m, r) in results {
        match r {
            Ok(c) => body.push_str(&render_certificate(&c, fmt)),
            Err(e) => {
                code = 1;
                match fmt {
                    Format::Json => {
                        let _ = writeln!(body, "{}", json!({ "m": m, "error": e.to_string() }));
                    }
                    _ => {
                        let _ = writeln!(body, "m = {m}: inconclusive ({e})");
                    }
                }
            }
        }
    }
    Ok(Output { body, code })
}

fn cmd_rational(m: usize, fmt: Format) -> Result<Output, Failure> {
    let fam = match classify(m).map_err(|e| Failure { code: 1, message: e.to_string() })? {
        Classification::Family(f) => f,
        Classification::NotExists(c) => {
            return Err(Failure { code: 1, message: format!("no solution of x-degree {m}: {}", certificate_text(&c)) })
        }
    };
    let u = log_derivative(&fam.f).map_err(|e| Failure { code: 1, message: e.to_string() })?;
    let res = verify_kdvlike(&u);
    let zero = res.is_zero();
    let n = u.normalized();
    let body = match fmt {
        Format::Text => format!("u = {}\nresidual = {res}\n", u.to_text()),
        Format::Json => format!("{}\n", json!({ "m": m, "u": n, "residual": res, "zero": zero })),
        Format::Latex => format!("u(x,t)={}\n", u.to_latex()),
    };
    Ok(Output { body, code: if zero { 0 } else { 1 } })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("hirota").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn bindings() {
        let b = parse_bindings("c2=1/2, c0=-3").unwrap();
        assert_eq!(b.len(), 2);
        assert!(parse_bindings("c2").is_err());
        assert!(parse_bindings("c2=x").is_err());
        assert!(parse_bindings("c2=1,c2=2").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["fundamental", "-m", "0"]).0, 0);
        assert_eq!(run_args(&["fundamental", "-m", "2"]).0, 0);
        assert_eq!(run_args(&["fundamental", "-m", "3", "--constants", "c9=1"]).0, 2);
        assert_eq!(run_args(&["fundamental", "-m", "3", "--constants", "c2"]).0, 2);
        assert_eq!(run_args(&["rational", "-m", "2"]).0, 1);
        assert_eq!(run_args(&["rational", "-m", "5"]).0, 1);
        assert_eq!(run_args(&["sweep", "4", "6"]).0, 2);
        assert_eq!(run_args(&["bogus"]).0, 2);
        assert_eq!(run_args(&["--help"]).0, 0);
    }

    #[test]
    fn fundamental_text() {
        let (code, out, _) = run_args(&["fundamental", "-m", "3", "--constants", "c2=0"]);
        assert_eq!(code, 0);
        assert!(out.contains("f = x^3 + 36*t + c0"), "{out}");
    }
}
