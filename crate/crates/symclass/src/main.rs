//! Command-line front end: tables, class products, JM expansions, operator
//! dumps, and verification suites.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use symclass::classexp::{a_structure, jm_in_a, ARow};
use symclass::diffop::{PolyDiffOp, EXACT};
use symclass::oracle::{class_sum, jm_power_sum, GAElem};
use symclass::partition::Partition;
use symclass::qlaurent::QLaurent;
use symclass::scalar::{rat_string, Rat};
use symclass::verify::{run_suite, VerificationReport, SUITE_NAMES};
use symclass::vertex::{d_operator, t_operator, vertex_mode};
use symclass::wick::gps_operator;

#[derive(Parser)]
#[command(name = "symclass", version, about = "Exact arithmetic in centers of symmetric group algebras", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Power sum of the Jucys-Murphy elements, p_m(Xi_n), as a central element.
    Powersum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// The table of n-independent expansions of ch(p_m(Xi_n)) in the a-basis.
    Table {
        #[arg(long = "max-m", default_value_t = 6)]
        max_m: usize,
    },
    /// Product of two classes: with --n, the oracle class product in S_n;
    /// without, the n-independent structure constants in the a-basis.
    Classprod {
        #[arg(long, value_parser = parse_partition)]
        alpha: Partition,
        #[arg(long, value_parser = parse_partition)]
        beta: Partition,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Dump a differential operator in the normal-ordered (mu, nu) format.
    Operator(OperatorArgs),
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long = "max-n", default_value_t = 7)]
        max_n: usize,
    },
}

#[derive(Args)]
struct OperatorArgs {
    /// Operator family.
    #[arg(long, value_enum)]
    kind: OpKind,
    /// Index k (mode index; order for --kind d).
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    k: i64,
    /// Truncation: operator terms are kept up to this degree.
    #[arg(long, default_value_t = 8)]
    trunc: usize,
    /// Reduced partition rho (for --kind gps).
    #[arg(long, value_parser = parse_partition)]
    rho: Option<Partition>,
}

#[derive(Copy, Clone, ValueEnum)]
enum OpKind {
    /// D_k, multiplication by ch(p_k(Xi_n)) on every degree n.
    D,
    /// T_k(q), the q-deformed mode (Laurent coefficients).
    T,
    /// V_m, a mode of the vertex operator (Laurent coefficients).
    Vertex,
    /// H_rho, multiplication by a padded class.
    Gps,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    if s.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for tok in s.split(',') {
        let v: u32 = tok
            .trim()
            .parse()
            .map_err(|_| format!("invalid partition part '{}'", tok))?;
        if v == 0 {
            return Err("partition parts must be positive".into());
        }
        parts.push(v);
    }
    let sorted = {
        let mut q = parts.clone();
        q.sort_unstable_by(|a, b| b.cmp(a));
        q
    };
    if parts != sorted {
        return Err("partition parts must be weakly decreasing".into());
    }
    Ok(Partition::new(parts))
}

fn part_json(p: &Partition) -> Value {
    Value::Array(p.parts().iter().map(|&x| json!(x)).collect())
}

fn ga_json(u: &GAElem) -> Value {
    let terms: Vec<Value> = u
        .terms()
        .iter()
        .map(|(p, c)| {
            json!({
                "perm": p.one_line(),
                "coeff": rat_string(c),
            })
        })
        .collect();
    json!({ "n": u.n(), "terms": terms })
}

fn classes_json(dec: &std::collections::BTreeMap<Partition, Rat>) -> Value {
    Value::Array(
        dec.iter()
            .map(|(p, c)| json!({ "class": part_json(p), "coeff": rat_string(c) }))
            .collect(),
    )
}

fn classes_text(dec: &std::collections::BTreeMap<Partition, Rat>) -> String {
    if dec.is_empty() {
        return "0".to_string();
    }
    dec.iter()
        .map(|(p, c)| format!("{} C[{}]", rat_string(c), p))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn arow_json(row: &ARow) -> Value {
    Value::Array(
        row.iter()
            .map(|(p, c)| json!({ "kappa": part_json(p), "coeff": rat_string(c) }))
            .collect(),
    )
}

fn arow_text(row: &ARow) -> String {
    if row.is_empty() {
        return "0".to_string();
    }
    row.iter()
        .map(|(p, c)| format!("{} a[{}]", rat_string(c), p))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn qlaurent_json(c: &QLaurent) -> Value {
    Value::Array(
        c.terms()
            .iter()
            .map(|(e, v)| json!([e, rat_string(v)]))
            .collect(),
    )
}

fn op_json<S, F: Fn(&S) -> Value>(op: &PolyDiffOp<S>, ring: &str, f: F) -> Value
where
    S: symclass::scalar::Scalar,
{
    let terms: Vec<Value> = op
        .terms()
        .iter()
        .map(|((mu, nu), c)| {
            json!({ "mu": part_json(mu), "nu": part_json(nu), "coeff": f(c) })
        })
        .collect();
    let exact = if op.exact_degree() == EXACT {
        Value::Null
    } else {
        json!(op.exact_degree())
    };
    json!({ "ring": ring, "exact_degree": exact, "terms": terms })
}

fn op_text<S, F: Fn(&S) -> String>(op: &PolyDiffOp<S>, f: F) -> String
where
    S: symclass::scalar::Scalar,
{
    let mut out = String::new();
    for ((mu, nu), c) in op.terms() {
        out.push_str(&format!("p[{}] D[{}] : {}\n", mu, nu, f(c)));
    }
    if op.exact_degree() != EXACT {
        out.push_str(&format!("exact on degree <= {}\n", op.exact_degree()));
    }
    out
}

fn report_json(rep: &VerificationReport) -> Value {
    let checks: Vec<Value> = rep
        .checks
        .iter()
        .map(|c| {
            json!({
                "id": c.id,
                "pass": c.pass,
                "witness": c.witness.clone().map(Value::String).unwrap_or(Value::Null),
            })
        })
        .collect();
    json!({ "suite": rep.suite, "checks": checks, "notes": rep.notes })
}

fn report_text(rep: &VerificationReport) -> String {
    let mut out = String::new();
    for c in &rep.checks {
        out.push_str(&format!(
            "[{}] {}: {}{}\n",
            rep.suite,
            c.id,
            if c.pass { "pass" } else { "FAIL" },
            c.witness
                .as_ref()
                .map(|w| format!(" ({})", w))
                .unwrap_or_default()
        ));
    }
    for n in &rep.notes {
        out.push_str(&format!("[{}] note: {}\n", rep.suite, n));
    }
    out.push_str(&format!(
        "[{}] {} checks, {}\n",
        rep.suite,
        rep.checks.len(),
        if rep.passed() { "all passed" } else { "FAILURES" }
    ));
    out
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {}", msg);
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Powersum { n, m } => {
            if n == 0 || n > 8 {
                return usage_error("--n must be in 1..=8");
            }
            if m == 0 || m > 8 {
                return usage_error("--m must be in 1..=8");
            }
            let u = jm_power_sum(n, m);
            let dec = u.decompose_central().expect("power sum must be central");
            match cli.format {
                Format::Json => {
                    let doc = json!({
                        "n": n,
                        "m": m,
                        "classes": classes_json(&dec),
                        "element": ga_json(&u),
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                Format::Text => println!("p_{}(Xi_{}) = {}", m, n, classes_text(&dec)),
            }
        }
        Command::Table { max_m } => {
            if max_m == 0 || max_m > 8 {
                return usage_error("--max-m must be in 1..=8");
            }
            let rows: Vec<ARow> = (1..=max_m).map(jm_in_a).collect();
            match cli.format {
                Format::Json => {
                    let doc: Vec<Value> = rows
                        .iter()
                        .enumerate()
                        .map(|(i, r)| json!({ "m": i + 1, "entries": arow_json(r) }))
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                Format::Text => {
                    for (i, r) in rows.iter().enumerate() {
                        println!("p_{} = {}", i + 1, arow_text(r));
                    }
                }
            }
        }
        Command::Classprod { alpha, beta, n } => match n {
            Some(n) => {
                if n > 7 {
                    return usage_error("--n must be at most 7");
                }
                if alpha.weight() != n || beta.weight() != n {
                    return usage_error("--alpha and --beta must be partitions of n");
                }
                let prod = class_sum(n, &alpha).mul(&class_sum(n, &beta));
                let dec = match prod.decompose_central() {
                    Some(d) => d,
                    None => return usage_error("product is not central (internal bug)"),
                };
                match cli.format {
                    Format::Json => {
                        let doc = json!({ "n": n, "classes": classes_json(&dec) });
                        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                    }
                    Format::Text => {
                        println!("C[{}] C[{}] = {}", alpha, beta, classes_text(&dec))
                    }
                }
            }
            None => {
                if alpha.weight() + beta.weight() > 7 {
                    return usage_error("|alpha| + |beta| must be at most 7 for the n-independent product");
                }
                let g = a_structure(&alpha, &beta);
                match cli.format {
                    Format::Json => {
                        let doc = json!({ "entries": arow_json(&g) });
                        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                    }
                    Format::Text => println!("a[{}] x a[{}] = {}", alpha, beta, arow_text(&g)),
                }
            }
        },
        Command::Operator(args) => {
            if args.trunc > 16 {
                return usage_error("--trunc must be at most 16");
            }
            let (rational_op, laurent_op): (Option<PolyDiffOp<Rat>>, Option<PolyDiffOp<QLaurent>>) =
                match args.kind {
                    OpKind::D => {
                        if args.k < 0 || args.k > 8 {
                            return usage_error("--k must be in 0..=8 for kind d");
                        }
                        (Some(d_operator(args.k as usize, args.trunc)), None)
                    }
                    OpKind::T => {
                        if args.k.unsigned_abs() as usize > args.trunc {
                            return usage_error("--k out of range for kind t");
                        }
                        (None, Some(t_operator(args.k, args.trunc)))
                    }
                    OpKind::Vertex => {
                        if args.k.unsigned_abs() as usize > args.trunc {
                            return usage_error("--k out of range for kind vertex");
                        }
                        (None, Some(vertex_mode(args.k, args.trunc)))
                    }
                    OpKind::Gps => {
                        let rho = match &args.rho {
                            Some(r) if r.is_reduced() && !r.is_empty() && r.weight() <= 6 => r,
                            Some(_) => {
                                return usage_error(
                                    "--rho must be a nonempty reduced partition of weight <= 6",
                                )
                            }
                            None => return usage_error("--rho is required for kind gps"),
                        };
                        (Some(gps_operator(rho, args.trunc)), None)
                    }
                };
            match (cli.format, rational_op, laurent_op) {
                (Format::Json, Some(op), _) => println!(
                    "{}",
                    serde_json::to_string_pretty(&op_json(&op, "rational", |c| json!(
                        rat_string(c)
                    )))
                    .unwrap()
                ),
                (Format::Json, _, Some(op)) => println!(
                    "{}",
                    serde_json::to_string_pretty(&op_json(&op, "q-laurent", qlaurent_json))
                        .unwrap()
                ),
                (Format::Text, Some(op), _) => print!("{}", op_text(&op, rat_string)),
                (Format::Text, _, Some(op)) => print!("{}", op_text(&op, laurent_text)),
                _ => unreachable!(),
            }
        }
        Command::Verify { suite, max_n } => {
            if max_n == 0 || max_n > 8 {
                return usage_error("--max-n must be in 1..=8");
            }
            let names: Vec<&str> = if suite == "all" {
                SUITE_NAMES.to_vec()
            } else if SUITE_NAMES.contains(&suite.as_str()) {
                vec![suite.as_str()]
            } else {
                return usage_error(&format!(
                    "unknown suite '{}' (expected one of {} or all)",
                    suite,
                    SUITE_NAMES.join(", ")
                ));
            };
            let reports: Vec<VerificationReport> = names
                .iter()
                .map(|n| run_suite(n, max_n).expect("known suite"))
                .collect();
            let ok = reports.iter().all(|r| r.passed());
            match cli.format {
                Format::Json => {
                    let doc: Vec<Value> = reports.iter().map(report_json).collect();
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                Format::Text => {
                    for r in &reports {
                        print!("{}", report_text(r));
                    }
                }
            }
            if !ok {
                return ExitCode::from(1);
            }
        }
    }
    ExitCode::SUCCESS
}

fn laurent_text(c: &QLaurent) -> String {
    if c.is_zero() {
        return "0".to_string();
    }
    c.terms()
        .iter()
        .map(|(e, v)| match e {
            0 => rat_string(v),
            1 => format!("{}*q", rat_string(v)),
            _ => format!("{}*q^{}", rat_string(v), e),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}
