//! Batch front door: evaluate any implemented quantity at given
//! parameters (`eval`) or run named verification suites over parameter
//! grids (`verify`). Exit codes: 0 success / all pass, 1 domain error or
//! verification failure, 2 usage error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use qident::format::{bivar_to_json, poly_to_json};
use qident::gauss::{
    b_ratio, c_ratio, f_poly_closed, f_poly_rec, gauss_eval, rs_direct, theorem2_even,
    theorem2_odd,
};
use qident::pentagon::{
    binomial_class_sums, f_lower, g_extended, h_closed_with, h_direct, h_limit, qfib_f, w_seq,
    WVariant,
};
use qident::poly::{BivarPoly, LaurentPoly, Monomial};
use qident::qcomb::{gauss_binomial, gauss_binomial_base, pochhammer_general, pochhammer_qq};
use qident::series::pentagonal_theta;
use qident::verify::{run_suite, Suite, SuiteConfig};

#[derive(Parser)]
#[command(name = "qident", version, about = "Exact q-identity evaluation and verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum, Default)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum, Default)]
enum WVariantArg {
    #[default]
    Reciprocal,
    AsPrinted,
}

impl From<WVariantArg> for WVariant {
    fn from(v: WVariantArg) -> WVariant {
        match v {
            WVariantArg::Reciprocal => WVariant::Reciprocal,
            WVariantArg::AsPrinted => WVariant::AsPrinted,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a quantity at integer parameters and print it exactly.
    ///
    /// Families and arities:
    ///   h_direct L k; h_closed L k; h_limit m; w n; G L i;
    ///   f_lower n; qfib_F n; rs n sign_x exp_x sign_a exp_a;
    ///   gauss_eval n; b n k; c n k; f_rec k; f_closed k;
    ///   theorem2_odd n k; theorem2_even n k; binomial n k [base];
    ///   pochhammer n | pochhammer start step n; pentagonal_theta N;
    ///   class_sums n
    #[command(verbatim_doc_comment)]
    Eval {
        /// Quantity family name.
        family: String,
        /// Integer parameters, arity per family.
        #[arg(allow_negative_numbers = true)]
        params: Vec<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Which w-sequence variant the closed forms use.
        #[arg(long = "w-variant", value_enum, default_value_t = WVariantArg::Reciprocal)]
        w_variant: WVariantArg,
    },
    /// Run a named verification suite over a parameter grid.
    Verify {
        /// One of: berkovich_garvan, theorem1, pentagon_recurrences,
        /// limits, triple_product, gauss_theorem, eq2_6, theorem2,
        /// gauss_recurrences, qcomb_identities, all.
        suite: Suite,
        #[arg(long = "L-max")]
        l_max: Option<i64>,
        #[arg(long = "k-max")]
        k_max: Option<i64>,
        #[arg(long = "n-max")]
        n_max: Option<i64>,
        #[arg(long = "m-max")]
        m_max: Option<i64>,
        /// Series truncation order.
        #[arg(long = "order-N", env = "QIDENT_ORDER_N", default_value_t = 200)]
        order_n: usize,
        #[arg(long = "w-variant", value_enum, default_value_t = WVariantArg::Reciprocal)]
        w_variant: WVariantArg,
        /// Worker threads for grid verification (default: all cores).
        #[arg(long, env = "QIDENT_JOBS")]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

enum Value {
    Poly(LaurentPoly),
    Bivar(BivarPoly),
    ClassSums(BigInt, BigInt, BigInt),
}

fn eval_family(family: &str, p: &[i64], variant: WVariant) -> Result<Value, (u8, String)> {
    let usage = |arity: &str| (2u8, format!("family {family} expects parameters: {arity}"));
    let domain = |e: qident::Error| (1u8, e.to_string());
    let nonneg = |v: i64, name: &str| {
        if v < 0 {
            Err((1u8, format!("{name} must be >= 0, got {v}")))
        } else {
            Ok(v)
        }
    };
    let val = match (family, p) {
        ("h_direct", [l, k]) => Value::Poly(h_direct(nonneg(*l, "L")?, nonneg(*k, "k")?)),
        ("h_direct", _) => return Err(usage("L k")),
        ("h_closed", [l, k]) => {
            Value::Poly(h_closed_with(nonneg(*l, "L")?, nonneg(*k, "k")?, variant))
        }
        ("h_closed", _) => return Err(usage("L k")),
        ("h_limit", [m]) => Value::Poly(h_limit(nonneg(*m, "m")?)),
        ("h_limit", _) => return Err(usage("m")),
        ("w", [n]) => Value::Poly(w_seq(*n, variant)),
        ("w", _) => return Err(usage("n")),
        ("G", [l, i]) => Value::Bivar(g_extended(nonneg(*l, "L")?, *i)),
        ("G", _) => return Err(usage("L i")),
        ("f_lower", [n]) => Value::Bivar(f_lower(*n)),
        ("f_lower", _) => return Err(usage("n")),
        ("qfib_F", [n]) => Value::Bivar(qfib_f(*n)),
        ("qfib_F", _) => return Err(usage("n")),
        ("rs", [n, sx, ex, sa, ea]) => {
            if (sx.abs(), sa.abs()) != (1, 1) {
                return Err((1, "monomial signs must be +1 or -1".to_string()));
            }
            Value::Poly(rs_direct(
                nonneg(*n, "n")?,
                Monomial::new(*sx as i8, *ex),
                Monomial::new(*sa as i8, *ea),
            ))
        }
        ("rs", _) => return Err(usage("n sign_x exp_x sign_a exp_a")),
        ("gauss_eval", [n]) => Value::Poly(gauss_eval(nonneg(*n, "n")?)),
        ("gauss_eval", _) => return Err(usage("n")),
        ("b", [n, k]) => {
            if *n < 1 {
                return Err((1, "b(n, k) requires n >= 1".to_string()));
            }
            Value::Poly(b_ratio(*n, nonneg(*k, "k")?).map_err(domain)?)
        }
        ("b", _) => return Err(usage("n k")),
        ("c", [n, k]) => Value::Poly(c_ratio(nonneg(*n, "n")?, nonneg(*k, "k")?).map_err(domain)?),
        ("c", _) => return Err(usage("n k")),
        ("f_rec", [k]) => Value::Bivar(f_poly_rec(nonneg(*k, "k")?)),
        ("f_rec", _) => return Err(usage("k")),
        ("f_closed", [k]) => Value::Bivar(f_poly_closed(nonneg(*k, "k")?)),
        ("f_closed", _) => return Err(usage("k")),
        ("theorem2_odd", [n, k]) => {
            if *n < 1 {
                return Err((1, "theorem2_odd requires n >= 1".to_string()));
            }
            Value::Poly(theorem2_odd(*n, nonneg(*k, "k")?))
        }
        ("theorem2_odd", _) => return Err(usage("n k")),
        ("theorem2_even", [n, k]) => {
            Value::Poly(theorem2_even(nonneg(*n, "n")?, nonneg(*k, "k")?).map_err(domain)?)
        }
        ("theorem2_even", _) => return Err(usage("n k")),
        ("binomial", [n, k]) => Value::Poly(gauss_binomial(*n, *k).map_err(domain)?),
        ("binomial", [n, k, m]) => {
            if *m == 0 {
                return Err((1, "base exponent must be nonzero".to_string()));
            }
            Value::Poly(gauss_binomial_base(*n, *k, *m).map_err(domain)?)
        }
        ("binomial", _) => return Err(usage("n k [base]")),
        ("pochhammer", [n]) => Value::Poly(pochhammer_qq(nonneg(*n, "n")?)),
        ("pochhammer", [start, step, n]) => {
            Value::Poly(pochhammer_general(*start, *step, nonneg(*n, "n")?))
        }
        ("pochhammer", _) => return Err(usage("n | start step n")),
        ("pentagonal_theta", [n]) => {
            Value::Poly(pentagonal_theta(nonneg(*n, "N")? as usize).to_poly())
        }
        ("pentagonal_theta", _) => return Err(usage("N")),
        ("class_sums", [n]) => {
            let (a0, a1, a2) = binomial_class_sums(nonneg(*n, "n")?);
            Value::ClassSums(a0, a1, a2)
        }
        ("class_sums", _) => return Err(usage("n")),
        _ => return Err((2, format!("unknown family {family:?}"))),
    };
    Ok(val)
}

fn print_value(value: &Value, format: Format) {
    match (value, format) {
        (Value::Poly(p), Format::Text) => println!("{p}"),
        (Value::Poly(p), Format::Json) => {
            println!("{}", serde_json::to_string(&poly_to_json(p)).unwrap())
        }
        (Value::Poly(p), Format::Csv) => {
            println!("exponent,coefficient");
            for (e, c) in p.terms() {
                println!("{e},{c}");
            }
        }
        (Value::Bivar(p), Format::Text) => println!("{p}"),
        (Value::Bivar(p), Format::Json) => {
            println!("{}", serde_json::to_string(&bivar_to_json(p)).unwrap())
        }
        (Value::Bivar(p), Format::Csv) => {
            println!("s_exponent,q_exponent,coefficient");
            for (k, c) in p.terms() {
                for (e, coeff) in c.terms() {
                    println!("{k},{e},{coeff}");
                }
            }
        }
        (Value::ClassSums(a0, a1, a2), Format::Text) => {
            println!("A0 = {a0}, A1 = {a1}, A2 = {a2}")
        }
        (Value::ClassSums(a0, a1, a2), Format::Json) => println!(
            "{}",
            serde_json::json!({"A0": a0.to_string(), "A1": a1.to_string(), "A2": a2.to_string()})
        ),
        (Value::ClassSums(a0, a1, a2), Format::Csv) => {
            println!("class,sum");
            println!("0,{a0}");
            println!("1,{a1}");
            println!("2,{a2}");
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval {
            family,
            params,
            format,
            w_variant,
        } => match eval_family(&family, &params, w_variant.into()) {
            Ok(value) => {
                print_value(&value, format);
                ExitCode::SUCCESS
            }
            Err((code, msg)) => {
                eprintln!("error: {msg}");
                ExitCode::from(code)
            }
        },
        Command::Verify {
            suite,
            l_max,
            k_max,
            n_max,
            m_max,
            order_n,
            w_variant,
            jobs,
            format,
        } => {
            if let Some(jobs) = jobs {
                if let Err(e) = rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build_global()
                {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            }
            let cfg = SuiteConfig {
                l_max,
                k_max,
                n_max,
                m_max,
                order_n,
                w_variant: w_variant.into(),
            };
            let report = run_suite(suite, &cfg);
            match format {
                Format::Text => {
                    for case in &report.cases {
                        let params: Vec<String> =
                            case.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                        let params = params.join(" ");
                        if case.pass {
                            println!("PASS {} {params}", case.id);
                        } else {
                            println!(
                                "FAIL {} {params} lhs={} rhs={}",
                                case.id,
                                case.lhs.as_deref().unwrap_or("-"),
                                case.rhs.as_deref().unwrap_or("-"),
                            );
                        }
                    }
                    println!(
                        "suite {}: {} cases, {} failures",
                        report.suite,
                        report.cases.len(),
                        report.failures
                    );
                }
                Format::Json => println!("{}", serde_json::to_string(&report).unwrap()),
                Format::Csv => {
                    println!("id,params,pass,lhs,rhs");
                    for case in &report.cases {
                        let params: Vec<String> =
                            case.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                        println!(
                            "{},{},{},{},{}",
                            case.id,
                            params.join(";"),
                            case.pass,
                            case.lhs.as_deref().unwrap_or(""),
                            case.rhs.as_deref().unwrap_or(""),
                        );
                    }
                }
            }
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
