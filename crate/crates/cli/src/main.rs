use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use glrep::djkm::{fermion_boson, fock_elementary, gamma_operator, thm_b_series, thm_b_slice, FockElement};
use glrep::gl_finite::{gs_closed_form, gs_coeffs, star_oracle_coeffs, thm_a_series, thm_a_slice};
use glrep::laurent::Window;
use glrep::lemmas::{run_all, structural_suite, supplementary_suite, Check};
use glrep::partition::Partition;
use glrep::poly::MultiPoly;
use glrep::rational::Rational;
use glrep::sweep::{self, Exec, FiniteCutoffs, FockCutoffs, SweepReport};
use glrep::{br, Error};

const MISMATCH: u8 = 1;
const USAGE: u8 = 2;
const INFEASIBLE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "glrep", version, about = "Structural series of gl(V) and gl_inf on polynomial rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Image of one basis element under one elementary matrix.
    Act(ActArgs),
    /// Coefficient table of a structural series on a window.
    Series(SeriesArgs),
    /// Runs verification suites.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Serialize)]
struct ActArgs {
    /// `X^i (x) d^j` acting on `B_r`.
    #[arg(long, conflicts_with = "djkm", required_unless_present = "djkm")]
    finite: bool,
    /// `E_ij` acting on `B = Q[x]`.
    #[arg(long)]
    djkm: bool,
    #[arg(long, default_value_t = 2)]
    r: usize,
    #[arg(long, value_parser = parse_partition, default_value = "-")]
    lambda: Partition,
    #[arg(long, allow_negative_numbers = true)]
    i: i32,
    #[arg(long, allow_negative_numbers = true)]
    j: i32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Kind {
    /// Structural series of gl(V), split by s_lambda(t).
    #[value(name = "thmA")]
    #[serde(rename = "thmA")]
    ThmA,
    /// Two-row determinant closed form for one lambda.
    Gs,
    /// Brute-force star action for one lambda.
    Oracle,
    /// Structural series of gl_inf, split by s_lambda(t).
    #[value(name = "thmB")]
    #[serde(rename = "thmB")]
    ThmB,
    /// Vertex-operator pipeline for one lambda.
    Gamma,
}

#[derive(Args, Debug, Serialize)]
struct SeriesArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, default_value_t = 2)]
    r: usize,
    /// Restricts rows to one partition; required by gs, oracle and gamma.
    #[arg(long, value_parser = parse_partition)]
    lambda: Option<Partition>,
    /// Rows are the coefficients of z^i w^-j with z_min <= i <= z_max.
    #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
    z_min: i32,
    #[arg(long, allow_negative_numbers = true, default_value_t = 2)]
    z_max: i32,
    /// Bounds on j.
    #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
    w_min: i32,
    #[arg(long, allow_negative_numbers = true, default_value_t = 2)]
    w_max: i32,
    /// Largest t-degree kept, hence largest |lambda| reported.
    #[arg(long, default_value_t = 2)]
    t_degree: u32,
    /// Quotient x_n = 0 for n above this.
    #[arg(long, default_value_t = 8)]
    x_truncation: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Suite {
    Finite,
    Gs,
    Djkm,
    Bracket,
    Lemmas,
    Kernel,
    All,
}

#[derive(Args, Debug, Serialize)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; 1 runs sequentially, omitted uses every core.
    #[arg(long)]
    threads: Option<usize>,
    /// Extra randomly drawn bracket cases.
    #[arg(long, default_value_t = 0)]
    extra: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.command {
        Command::Act(a) => act(a),
        Command::Series(a) => series(a),
        Command::Verify(a) => verify(a),
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err((code, msg)) => {
            eprintln!("glrep: {msg}");
            ExitCode::from(code)
        }
    }
}

type Outcome = Result<u8, (u8, String)>;

fn usage(msg: impl Into<String>) -> (u8, String) {
    (USAGE, msg.into())
}

fn classify(e: Error) -> (u8, String) {
    match e {
        Error::Window(_) | Error::OutOfWindow { .. } | Error::Truncation(_) => (INFEASIBLE, e.to_string()),
        Error::Parse(_) | Error::Invalid(_) => (USAGE, e.to_string()),
        _ => (MISMATCH, e.to_string()),
    }
}

/// `D_(k)` is `h_k`; longer partitions print as `D(2,1)`.
fn basis_name(prefix: &str, mu: &Partition) -> String {
    match mu.len() {
        0 => "1".into(),
        1 if prefix == "D" => format!("h{}", mu.part(1)),
        _ => format!("{prefix}({mu})"),
    }
}

fn combination(prefix: &str, c: &BTreeMap<Partition, Rational>) -> String {
    if c.is_empty() {
        return "0".into();
    }
    // reuse the polynomial printer for signs and coefficients
    let mut out = String::new();
    for (k, (mu, q)) in c.iter().rev().enumerate() {
        let name = basis_name(prefix, mu);
        let neg = q.is_negative();
        let a = q.abs();
        if k == 0 {
            out.push_str(if neg { "-" } else { "" });
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        match (a.is_one(), name == "1") {
            (true, _) => out.push_str(&name),
            (false, true) => out.push_str(&a.to_string()),
            (false, false) => out.push_str(&format!("{a}*{name}")),
        }
    }
    out
}

#[derive(Serialize)]
struct ActOut<'a> {
    meta: &'a ActArgs,
    basis: BTreeMap<String, String>,
    polynomial: String,
}

fn act(a: &ActArgs) -> Outcome {
    let (basis, poly, prefix) = if a.finite {
        if a.i < 0 || a.j < 0 {
            return Err(usage("finite mode needs i, j >= 0"));
        }
        if a.r == 0 || a.lambda.len() > a.r {
            return Err(usage(format!("({}) is not a partition with at most r = {} parts", a.lambda, a.r)));
        }
        let c = star_oracle_coeffs(a.i as u32, a.j as u32, &a.lambda, a.r);
        let p = br::from_delta_basis(&c, a.r);
        (c, p, "D")
    } else {
        let u: FockElement = fock_elementary(a.i, a.j, &a.lambda);
        let trunc = u.keys().map(|mu| mu.weight()).max().unwrap_or(0).max(1);
        let p = fermion_boson(&u, trunc).map_err(classify)?;
        (u, p, "S")
    };
    match a.format {
        Format::Text => println!("{} = {}", combination(prefix, &basis), poly.to_text()),
        Format::Json => {
            let out = ActOut {
                meta: a,
                basis: basis.iter().map(|(mu, q)| (mu.to_string(), q.to_string())).collect(),
                polynomial: poly.to_text(),
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        }
    }
    Ok(0)
}

#[derive(Serialize, PartialEq, Eq, PartialOrd, Ord)]
struct Row {
    i: i32,
    j: i32,
    lambda: Partition,
    coefficient: String,
}

#[derive(Serialize)]
struct SeriesOut<'a> {
    meta: &'a SeriesArgs,
    rows: Vec<Row>,
}

fn series(a: &SeriesArgs) -> Outcome {
    if a.r == 0 {
        return Err(usage("r must be positive"));
    }
    let finite = matches!(a.kind, Kind::ThmA | Kind::Gs | Kind::Oracle);
    if finite && a.z_min.min(a.w_min) < 0 && a.kind != Kind::ThmA {
        return Err(usage("finite series have i, j >= 0"));
    }
    if finite && a.w_min < 0 {
        return Err(usage("the structural series of gl(V) has j >= 0"));
    }
    let need_lambda = matches!(a.kind, Kind::Gs | Kind::Oracle | Kind::Gamma);
    if need_lambda && a.lambda.is_none() {
        return Err(usage(format!("--kind {:?} needs --lambda", a.kind).to_lowercase()));
    }
    if let Some(l) = &a.lambda {
        if finite && l.len() > a.r {
            return Err(usage(format!("({l}) has more than r = {} parts", a.r)));
        }
    }
    let mut rows = Vec::new();
    if a.z_min <= a.z_max && a.w_min <= a.w_max {
        let cells: Vec<(i32, i32)> = (a.z_min..=a.z_max).flat_map(|i| (a.w_min..=a.w_max).map(move |j| (i, j))).collect();
        let window = Window::new(a.z_min, a.z_max, -a.w_max, -a.w_min, Some(a.t_degree));
        let keep = |mu: &Partition| a.lambda.as_ref().is_none_or(|l| l == mu);
        let mut push = |i: i32, j: i32, mu: &Partition, p: &MultiPoly| {
            rows.push(Row { i, j, lambda: mu.clone(), coefficient: p.to_text() });
        };
        match a.kind {
            Kind::ThmA | Kind::ThmB => {
                let s = if a.kind == Kind::ThmA {
                    thm_a_series(a.r, window)
                } else {
                    thm_b_series(a.r, a.x_truncation, window)
                }
                .map_err(classify)?;
                for &(i, j) in &cells {
                    let slice = if a.kind == Kind::ThmA {
                        thm_a_slice(&s, i as u32, j as u32, a.r)
                    } else {
                        thm_b_slice(&s, i, j, a.r)
                    }
                    .map_err(classify)?;
                    for (mu, p) in slice.iter().filter(|(mu, _)| keep(mu)) {
                        push(i, j, mu, p);
                    }
                }
            }
            Kind::Gs | Kind::Oracle => {
                let l = a.lambda.as_ref().expect("checked");
                let gs = if a.kind == Kind::Gs { Some(gs_closed_form(l, a.r, a.z_max).map_err(classify)?) } else { None };
                for &(i, j) in &cells {
                    let (i, j) = (i as u32, j as u32);
                    let c = match &gs {
                        Some(s) => gs_coeffs(s, i, j, a.r).map_err(classify)?,
                        None => star_oracle_coeffs(i, j, l, a.r),
                    };
                    let p = br::from_delta_basis(&c, a.r);
                    if !p.is_zero() {
                        push(i as i32, j as i32, l, &p);
                    }
                }
            }
            Kind::Gamma => {
                let l = a.lambda.as_ref().expect("checked");
                let g = gamma_operator(l, a.x_truncation, window).map_err(classify)?;
                for &(i, j) in &cells {
                    let p = g.coefficient(i, -j).map_err(classify)?;
                    if !p.is_zero() {
                        push(i, j, l, &p);
                    }
                }
            }
        }
    }
    rows.sort();
    match a.format {
        Format::Text => {
            for r in &rows {
                println!("{}\t{}\t{}\t{}", r.i, r.j, r.lambda, r.coefficient);
            }
        }
        Format::Json => println!("{}", serde_json::to_string_pretty(&SeriesOut { meta: a, rows }).expect("serializable")),
    }
    Ok(0)
}

#[derive(Serialize)]
struct VerifyOut<'a> {
    meta: &'a VerifyArgs,
    passed: bool,
    sweeps: Vec<SweepReport>,
    checks: Vec<Check>,
    /// Reported, never counted towards `passed`.
    measured: Vec<SweepReport>,
}

fn verify(a: &VerifyArgs) -> Outcome {
    let exec = match a.threads {
        Some(0) => return Err(usage("--threads must be positive")),
        Some(n) => Exec::with_threads(n),
        None => Exec::default(),
    };
    let fin = FiniteCutoffs::default();
    let fock = FockCutoffs::default();
    let has = |s: Suite| a.suite == s || a.suite == Suite::All;
    let mut sweeps = Vec::new();
    let mut checks = Vec::new();
    let mut measured = Vec::new();
    if has(Suite::Finite) {
        sweeps.push(sweep::thm_a_sweep(&fin, exec));
        sweeps.push(sweep::negative_power_sweep(&fin, exec));
        measured.push(sweep::thm_a_rank_one(&fin, exec));
    }
    if has(Suite::Gs) {
        sweeps.push(sweep::gs_sweep(&fin, exec));
    }
    if has(Suite::Djkm) {
        sweeps.push(sweep::thm_b_sweep(&fock, exec));
        sweeps.push(sweep::gamma_sweep(&fock, exec));
    }
    if has(Suite::Bracket) {
        sweeps.push(sweep::bracket_sweep(a.seed, a.extra, exec));
    }
    if has(Suite::Lemmas) {
        checks.extend(exec.install(|| run_all(&structural_suite())));
        checks.extend(exec.install(|| run_all(&supplementary_suite())));
    }
    if has(Suite::Kernel) {
        checks.extend(sweep::kernel_suite(a.seed));
    }
    let passed = sweeps.iter().all(SweepReport::passed) && checks.iter().all(Check::passed);
    match a.format {
        Format::Json => {
            let out = VerifyOut { meta: a, passed, sweeps, checks, measured };
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        }
        Format::Text => {
            for s in &sweeps {
                println!("{} [{}]", s.summary(), if s.passed() { "pass" } else { "FAIL" });
                if let Some(c) = s.mismatches().next() {
                    let r = c.r.map(|r| format!("r={r} ")).unwrap_or_default();
                    println!("  first mismatch: {r}i={} j={} lambda={} oracle {} formula {}", c.i, c.j, c.lambda, c.oracle, c.formula);
                }
                if let Some(e) = s.errors.first() {
                    println!("  first error: {e}");
                }
            }
            for c in &checks {
                println!("{}: {} cases, {} failed [{}]", c.name, c.cases, c.failed, if c.passed() { "pass" } else { "FAIL" });
                if let Some(f) = c.failures.first() {
                    println!("  first failure: {f}");
                }
            }
            for s in &measured {
                println!("{} [measured]", s.summary());
            }
            println!("{}", if passed { "PASS" } else { "FAIL" });
        }
    }
    Ok(if passed { 0 } else { MISMATCH })
}
