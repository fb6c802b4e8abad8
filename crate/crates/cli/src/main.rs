//! Command-line surface: crystal graph construction and export, R-matrix
//! solving with denominator tables, and the verification drivers.

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use qaffine::crystal::CrystalGraph;
use qaffine::fund_a::build_crystal_a;
use qaffine::fund_c::build_crystal_c;
use qaffine::rmatrix::{
    closed_form_roots, difference_identity, duality_identity, equal_up_to_unit,
    fundamental_module, poly_from_roots, solve_rnor, yang_baxter_at, Unit,
};
use qaffine::root::{AffineType, Family};
use qaffine::verify::{
    check_conj1, check_filtration, check_kernel_intersection_c, check_pole_reducibility,
    check_unique_extremal, pole_table, reducibility_witnesses_c, Report,
};
use serde::Serialize;
use serde_json::json;
use std::process::ExitCode;

/// Hard caps; overridable only with `--unsafe-budget`.
const CAP_N_A: usize = 5;
const CAP_N_C: usize = 3;
const CAP_FACTORS: usize = 3;
const CAP_ORDER: usize = 10;

const EXIT_VERIFY: u8 = 1;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "qaffine", version, about = "Exact R-matrices and crystals for quantum affine algebras of types A and C")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    #[value(alias = "A")]
    A,
    #[value(alias = "C")]
    C,
}

impl FamilyArg {
    fn family(self) -> Family {
        match self {
            FamilyArg::A => Family::A,
            FamilyArg::C => Family::C,
        }
    }
}

#[derive(Args)]
struct TypeArgs {
    /// Family of the affine type.
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Rank parameter n (type A: gl_n conventions, fundamentals 1..n-1;
    /// type C: fundamentals 1..n).
    #[arg(long)]
    n: usize,
    /// Lift the hard budget caps (may be very slow).
    #[arg(long, default_value_t = false)]
    unsafe_budget: bool,
}

impl TypeArgs {
    fn affine(&self) -> Result<AffineType, u8> {
        let cap = match self.family {
            FamilyArg::A => CAP_N_A,
            FamilyArg::C => CAP_N_C,
        };
        if self.n < 2 {
            eprintln!("usage: n must be at least 2");
            return Err(2);
        }
        if self.n > cap && !self.unsafe_budget {
            eprintln!("budget: n={} exceeds the cap {cap}; pass --unsafe-budget to override", self.n);
            return Err(EXIT_BUDGET);
        }
        Ok(AffineType::new(self.family.family(), self.n))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a fundamental crystal (optionally a tensor product) and export
    /// it as DOT or JSON.
    Crystal {
        #[command(flatten)]
        ty: TypeArgs,
        /// Fundamental index.
        #[arg(long)]
        k: usize,
        /// Tensor with a second fundamental crystal.
        #[arg(long)]
        tensor: Option<usize>,
        /// Write a DOT file to this path.
        #[arg(long)]
        dot: Option<std::path::PathBuf>,
        /// Print the graph as JSON (default when no --dot is given).
        #[arg(long, default_value_t = false)]
        json: bool,
    },
    /// Solve the normalized R-matrix of a pair of fundamentals and print it
    /// with its denominator and poles.
    Rmatrix {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        /// Also compare the denominator against the closed-form product.
        #[arg(long, default_value_t = false)]
        check_closed_form: bool,
    },
    /// Verification drivers; exit code 1 when any asserted item fails.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Cyclicity/cocyclicity of a twisted tensor chain on the extremal
    /// tensor.
    Conj1 {
        #[command(flatten)]
        ty: TypeArgs,
        /// Factors as index:exponent pairs, e.g. "1:4,1:0"; the twist of a
        /// factor is (-s)^exponent.
        #[arg(long)]
        factors: String,
    },
    /// The kernel-filtration conditions on one fundamental module.
    Conj2 {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        i: usize,
    },
    /// Denominator tables with closed-form and pole-range checks.
    Poles {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// Defining relations on all fundamental modules of a type.
    Relations {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// Yang-Baxter identity on the vector-module triple.
    Ybe {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// The full bounded invariant suite across both families.
    Selftest {
        /// Budget label (only "small" is defined).
        #[arg(long, default_value = "small")]
        budget: String,
    },
}

/// Fixed conventions and budgets embedded in every output for reproducibility.
fn manifest() -> serde_json::Value {
    json!({
        "version": env!("CARGO_PKG_VERSION"),
        "scalars": "exact rationals in s with q = s^2; canonical term order (z-degree desc, s-degree asc)",
        "tensor_rule": "first-factor-priority signature rule, matching the coproduct e -> e(x)t^-1 + 1(x)e",
        "ordering_convention": "decreasing-twist-exponents-cyclic (spectral variable reciprocal to twist order)",
        "caps": {"n_a": CAP_N_A, "n_c": CAP_N_C, "factors": CAP_FACTORS, "series_order": CAP_ORDER},
    })
}

fn crystal_graph(t: AffineType, k: usize) -> Result<CrystalGraph, u8> {
    let ok = match t.family {
        Family::A => (1..t.n).contains(&k),
        Family::C => (1..=t.n).contains(&k),
    };
    if !ok {
        eprintln!("usage: fundamental index k={k} out of range for {:?}", t);
        return Err(2);
    }
    Ok(match t.family {
        Family::A => build_crystal_a(t.n, k),
        Family::C => build_crystal_c(t.n, k),
    })
}

fn crystal_json(b: &CrystalGraph) -> serde_json::Value {
    let mut arrows = Vec::new();
    for i in b.t.indices() {
        for x in 0..b.len() {
            if let Some(y) = b.f(i, x) {
                arrows.push(json!({"i": i, "from": x, "to": y}));
            }
        }
    }
    json!({
        "manifest": manifest(),
        "nodes": b.labels.clone(),
        "weights": b.wt.clone(),
        "arrows": arrows,
    })
}

#[derive(Serialize)]
struct ReportOut {
    manifest: serde_json::Value,
    report: Report,
}

fn emit_report(name: &str, rep: Report) -> ExitCode {
    let out = ReportOut { manifest: manifest(), report: rep };
    println!("{}", serde_json::to_string_pretty(&out).unwrap());
    if out.report.ok() {
        ExitCode::SUCCESS
    } else {
        eprintln!("{name}: verification failed");
        ExitCode::from(EXIT_VERIFY)
    }
}

fn parse_factors(s: &str) -> Result<Vec<(usize, i64)>> {
    let mut out = Vec::new();
    for part in s.split(',') {
        let (k, e) = part
            .split_once(':')
            .ok_or_else(|| anyhow::anyhow!("factor must look like index:exponent, got {part:?}"))?;
        out.push((k.trim().parse()?, e.trim().parse()?));
    }
    Ok(out)
}

fn run() -> Result<ExitCode, u8> {
    let cli = Cli::parse();
    match cli.command {
        Command::Crystal { ty, k, tensor, dot, json: as_json } => {
            let t = ty.affine()?;
            let mut b = crystal_graph(t, k)?;
            let mut name = format!("{:?}{}_w{k}", t.family, t.n);
            if let Some(k2) = tensor {
                let b2 = crystal_graph(t, k2)?;
                b = b.tensor(&b2);
                name = format!("{name}_x_w{k2}");
            }
            let wrote_dot = dot.is_some();
            if let Some(path) = dot {
                std::fs::write(&path, b.to_dot(&name)).map_err(|e| {
                    eprintln!("cannot write {}: {e}", path.display());
                    2u8
                })?;
            }
            if as_json || !wrote_dot {
                println!("{}", serde_json::to_string_pretty(&crystal_json(&b)).unwrap());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Rmatrix { ty, i, j, check_closed_form } => {
            let t = ty.affine()?;
            for k in [i, j] {
                if !t.fundamental_indices().contains(&k) {
                    eprintln!("usage: index {k} out of range for {:?}", t);
                    return Err(2);
                }
            }
            let r = solve_rnor(t, i, j);
            let mut entries = Vec::new();
            for (c, col) in r.mat.cols.iter().enumerate() {
                for (row, v) in col {
                    entries.push(json!({
                        "from": r.src.labels[c],
                        "to": r.tgt.labels[*row],
                        "value": format!("{v}"),
                    }));
                }
            }
            let mut out = json!({
                "manifest": manifest(),
                "type": format!("{:?}", t),
                "pair": [i, j],
                "source": r.src.labels,
                "target": r.tgt.labels,
                "intertwining_verified": r.verify_intertwining(),
                "denominator": format!("{}", r.denominator),
                "denominator_factored": if r.unfactored.is_one() {
                    r.poles
                        .iter()
                        .map(|u| format!("(z - {u})"))
                        .collect::<Vec<_>>()
                        .join("*")
                } else {
                    format!("{}", r.denominator)
                },
                "poles": r.poles.iter().map(|u| format!("{u}")).collect::<Vec<_>>(),
                "entries": entries,
            });
            if check_closed_form {
                let verdict = r.unfactored.is_one()
                    && equal_up_to_unit(&r.denominator, &poly_from_roots(&closed_form_roots(t, i, j)));
                out["closed_form"] = json!(if verdict { "match" } else { "MISMATCH" });
            }
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { what } => Ok(run_verify(what)?),
    }
}

fn run_verify(what: VerifyCommand) -> Result<ExitCode, u8> {
    match what {
        VerifyCommand::Conj1 { ty, factors } => {
            let t = ty.affine()?;
            let factors = parse_factors(&factors).map_err(|e| {
                eprintln!("usage: {e}");
                2u8
            })?;
            if factors.len() > CAP_FACTORS && !ty.unsafe_budget {
                eprintln!("budget: at most {CAP_FACTORS} factors");
                return Err(EXIT_BUDGET);
            }
            for (k, _) in &factors {
                if !t.fundamental_indices().contains(k) {
                    eprintln!("usage: index {k} out of range for {:?}", t);
                    return Err(2);
                }
            }
            Ok(emit_report("conj1", check_conj1(t, &factors)))
        }
        VerifyCommand::Conj2 { ty, i } => {
            let t = ty.affine()?;
            if !t.fundamental_indices().contains(&i) {
                eprintln!("usage: index {i} out of range for {:?}", t);
                return Err(2);
            }
            let fr = check_filtration(t, i);
            let mut rep = fr.report;
            if t.family == Family::C {
                let c = check_kernel_intersection_c(t.n, i);
                rep.items.push(c);
            }
            Ok(emit_report("conj2", rep))
        }
        VerifyCommand::Poles { ty } => {
            let t = ty.affine()?;
            let rows = pole_table(t);
            let ok = rows.iter().all(|r| r.matches_closed_form && r.roots_in_range);
            let out = json!({
                "manifest": manifest(),
                "type": format!("{:?}", t),
                "table": rows,
                "pass": ok,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            if ok {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("poles: table mismatch");
                Ok(ExitCode::from(EXIT_VERIFY))
            }
        }
        VerifyCommand::Relations { ty } => {
            let t = ty.affine()?;
            let mut rep = Report::new();
            for k in t.fundamental_indices() {
                let m = fundamental_module(t, k);
                let rel = m.check_relations();
                rep.push(
                    format!("relations {:?} w{k}", t),
                    rel.ok(),
                    rel.failures.join("; "),
                );
            }
            Ok(emit_report("relations", rep))
        }
        VerifyCommand::Ybe { ty } => {
            let t = ty.affine()?;
            let mut rep = Report::new();
            for w in [2i64, 3, 5, 7, 11] {
                rep.push(
                    format!("yang-baxter {:?} vector triple at {w}", t),
                    yang_baxter_at(t, 1, 1, 1, w),
                    String::new(),
                );
            }
            Ok(emit_report("ybe", rep))
        }
        VerifyCommand::Selftest { budget } => {
            if budget != "small" {
                eprintln!("usage: unknown budget {budget:?}");
                return Err(2);
            }
            Ok(emit_report("selftest", selftest()))
        }
    }
}

/// The bounded cross-family invariant suite.
fn selftest() -> Report {
    let mut rep = Report::new();
    let a3 = AffineType::new(Family::A, 3);
    let c2 = AffineType::new(Family::C, 2);

    for (t, pairs) in [(a3, vec![(1, 1), (1, 2), (2, 2)]), (c2, vec![(1, 1), (1, 2), (2, 2)])] {
        for (i, j) in pairs {
            let r = solve_rnor(t, i, j);
            let ok = r.verify_intertwining()
                && r.unfactored.is_one()
                && r.poles == closed_form_roots(t, i, j);
            rep.push(
                format!("selftest denominator {:?} ({i},{j})", t),
                ok,
                format!("{}", r.denominator),
            );
        }
    }
    for t in [a3, c2] {
        for k in t.fundamental_indices() {
            let rel = fundamental_module(t, k).check_relations();
            rep.push(format!("selftest relations {:?} w{k}", t), rel.ok(), String::new());
        }
        rep.push(
            format!("selftest yang-baxter {:?}", t),
            yang_baxter_at(t, 1, 1, 1, 3),
            String::new(),
        );
        rep.push(
            format!("selftest functional identities {:?}", t),
            duality_identity(t, 1, 1, 6).is_some() && difference_identity(t, 1, 1, 6).is_some(),
            String::new(),
        );
        let inv = {
            let rkl = solve_rnor(t, 1, 2);
            let rlk = solve_rnor(t, 2, 1);
            rlk.substitute_inverse(Unit::one()).compose(&rkl.mat)
                == qaffine::linalg::Op::identity(rkl.src.dim())
        };
        rep.push(format!("selftest inversion {:?} (1,2)", t), inv, String::new());
        rep.merge(check_conj1(t, &[(1, 4), (1, 0)]));
        rep.merge(check_conj1(t, &[(1, 0), (1, 4)]));
        let item = check_unique_extremal(t, &[1, 1]);
        rep.items.push(item);
        rep.merge(check_filtration(t, 1).report);
        rep.merge(check_pole_reducibility(t, 1, 1, 2 * (t.n as i64 + 2)));
    }
    rep.items.push(check_kernel_intersection_c(2, 2));
    rep.merge(reducibility_witnesses_c(2, 2, 1));
    rep
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(code) => ExitCode::from(code),
    }
}
