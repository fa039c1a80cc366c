//! `goto`: Goto numbers of parameter ideals from the command line.

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use goto_core::bounds::BoundReport;
use goto_core::explorer::{monomial_table, search, PositionPolicy, SearchConfig};
use goto_core::expr::parse_ideal;
use goto_core::golden::run_corpus;
use goto_core::regular_local::goto_ratios;
use goto_core::scalar::parse_scalar;
use goto_core::{
    dual_goto, goto_monomial, goto_number, CanonicalIdeal, Error, Field, NumericalSemigroup,
};

#[derive(Parser)]
#[command(name = "goto", version, about = "Goto numbers of parameter ideals")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads for searches and tables; 1 runs sequentially.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Human,
}

#[derive(Args)]
struct Generators {
    /// Semigroup generators.
    #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
    generators: Vec<i64>,
}

#[derive(Subcommand)]
enum Command {
    /// Semigroup invariants.
    Info(Generators),
    /// Goto number of one parameter ideal.
    Goto {
        #[command(flatten)]
        gens: Generators,
        /// Generator of the ideal, e.g. "x^40 + x^44".
        #[arg(
            long,
            conflicts_with = "monomial",
            required_unless_present = "monomial"
        )]
        ideal: Option<String>,
        /// Exponent `b` of the monomial ideal `x^b R`.
        #[arg(long)]
        monomial: Option<usize>,
        /// Also evaluate the dual formula (symmetric semigroups only).
        #[arg(long)]
        dual: bool,
        /// `q` or `fp:P`.
        #[arg(long, default_value = "q")]
        field: Field,
    },
    /// Goto numbers of all monomial ideals `x^e R`, `e <= max`.
    Table {
        #[command(flatten)]
        gens: Generators,
        #[arg(long)]
        max: usize,
    },
    /// Exhaustive search over canonical forms.
    Search {
        #[command(flatten)]
        gens: Generators,
        /// Coefficient set; zero is always included.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "0,1",
            allow_hyphen_values = true
        )]
        coeffs: Vec<String>,
        #[arg(long, default_value = "q")]
        field: Field,
        #[arg(long)]
        b_min: Option<usize>,
        #[arg(long)]
        b_max: Option<usize>,
        /// Restrict unit coefficients to these positions.
        #[arg(long, value_delimiter = ',', conflicts_with = "max_nonzero")]
        positions: Option<Vec<usize>>,
        /// At most this many nonzero unit coefficients.
        #[arg(long)]
        max_nonzero: Option<usize>,
        /// Refuse searches larger than this.
        #[arg(long)]
        cap: Option<u128>,
        /// Stop after this many ideals.
        #[arg(long)]
        stop_after: Option<u64>,
    },
    /// Bounds and closed forms against engine values.
    Bounds(Generators),
    /// Pure-power ideals in a regular local ring.
    Rlr {
        /// Exponents `n_1,...,n_d`.
        #[arg(long, value_delimiter = ',', required = true)]
        pure_power: Vec<u32>,
    },
    /// Recomputes every known example value.
    VerifyPaper,
}

/// A finished command: rendered output and whether its checks held.
struct Outcome {
    text: String,
    ok: bool,
}

fn semigroup(g: &Generators) -> Result<Arc<NumericalSemigroup>, Error> {
    Ok(Arc::new(NumericalSemigroup::new(&g.generators)?))
}

fn render_json(value: &impl Serialize) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable output");
    text.push('\n');
    text
}

fn with_schema(value: &impl Serialize) -> Value {
    let mut v = serde_json::to_value(value).expect("serializable output");
    if let Value::Object(map) = &mut v {
        map.insert("schema".into(), json!(1));
    }
    v
}

fn kv_lines(rows: &[(&str, String)], sep: &str, width: usize) -> String {
    rows.iter().fold(String::new(), |mut out, (k, v)| {
        if sep == "\t" {
            let _ = writeln!(out, "{k}\t{v}");
        } else {
            let _ = writeln!(out, "{k:<width$}{sep}{v}");
        }
        out
    })
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn opt_str<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or("-".into(), ToString::to_string)
}

fn table(format: Format, rows: &[(&str, String)]) -> String {
    match format {
        Format::Tsv => kv_lines(rows, "\t", 0),
        _ => kv_lines(
            rows,
            "  ",
            rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0),
        ),
    }
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let format = cli.format;
    let threads = cli.threads.map(|n| n as usize);
    let ok = |text| Ok(Outcome { text, ok: true });
    match cli.command {
        Command::Info(g) => {
            let s = semigroup(&g)?;
            let info = s.info();
            match format {
                Format::Json => ok(render_json(&with_schema(&info))),
                _ => ok(table(
                    format,
                    &[
                        ("generators", join(&info.generators)),
                        ("dropped_generators", join(&info.dropped_generators)),
                        ("frobenius", info.frobenius.to_string()),
                        ("gaps", join(&info.gaps)),
                        ("conductor_generators", join(&info.conductor_generators)),
                        ("symmetric", info.symmetric.to_string()),
                        ("stable_goto", info.stable_goto.to_string()),
                        ("conductor_order", info.conductor_order.to_string()),
                    ],
                )),
            }
        }
        Command::Goto {
            gens,
            ideal,
            monomial,
            dual,
            field,
        } => {
            let s = semigroup(&gens)?;
            let q = match (ideal, monomial) {
                (Some(text), _) => parse_ideal(&s, field, &text)?,
                (None, Some(b)) => CanonicalIdeal::monomial(s.clone(), field, b)?,
                (None, None) => unreachable!("clap requires one of --ideal, --monomial"),
            };
            let g = goto_number(&q)?;
            let combinatorial = if q.is_monomial() {
                Some(goto_monomial(&s, q.b())?)
            } else {
                None
            };
            let dual_value = if dual { Some(dual_goto(&q)?) } else { None };
            let agree = combinatorial.is_none_or(|c| c == g) && dual_value.is_none_or(|d| d == g);
            let text = match format {
                Format::Json => render_json(&json!({
                    "schema": 1,
                    "generators": s.generators(),
                    "field": field,
                    "ideal": q.to_string(),
                    "b": q.b(),
                    "goto": g,
                    "monomial_formula": combinatorial,
                    "dual": dual_value,
                })),
                Format::Tsv => {
                    let opt = |x: Option<u32>| x.map_or("-".into(), |v| v.to_string());
                    format!(
                        "ideal\tb\tgoto\tmonomial_formula\tdual\n{}\t{}\t{}\t{}\t{}\n",
                        q,
                        q.b(),
                        g,
                        opt(combinatorial),
                        opt(dual_value)
                    )
                }
                Format::Human => {
                    let mut t = format!("g({q}) = {g}\n");
                    if let Some(d) = dual_value {
                        let _ = writeln!(t, "dual formula: {d}");
                    }
                    t
                }
            };
            Ok(Outcome { text, ok: agree })
        }
        Command::Table { gens, max } => {
            let s = semigroup(&gens)?;
            let rows = monomial_table(&s, max, threads)?;
            let text = match format {
                Format::Json => {
                    let entries: Vec<Value> = rows
                        .iter()
                        .map(|(e, g)| json!({"e": e, "goto": g}))
                        .collect();
                    render_json(
                        &json!({"schema": 1, "generators": s.generators(), "max": max, "entries": entries}),
                    )
                }
                Format::Tsv => rows
                    .iter()
                    .fold(String::from("e\tgoto\n"), |mut t, (e, g)| {
                        let _ = writeln!(t, "{e}\t{g}");
                        t
                    }),
                Format::Human => rows.iter().fold(String::new(), |mut t, (e, g)| {
                    let _ = writeln!(t, "g(x^{e}) = {g}");
                    t
                }),
            };
            ok(text)
        }
        Command::Search {
            gens,
            coeffs,
            field,
            b_min,
            b_max,
            positions,
            max_nonzero,
            cap,
            stop_after,
        } => {
            let s = semigroup(&gens)?;
            let mut config = SearchConfig::new(s.clone());
            config.field = field;
            let mut set = vec![field.zero()];
            for text in &coeffs {
                let c = parse_scalar(field, text.trim())?;
                if !set.contains(&c) {
                    set.push(c);
                }
            }
            config.coefficients = set;
            if b_min.is_some() || b_max.is_some() {
                let (lo, hi) = config.b_bounds();
                config.b_range = Some((b_min.unwrap_or(lo), b_max.unwrap_or(hi)));
            }
            config.positions = match (positions, max_nonzero) {
                (Some(p), _) => PositionPolicy::Positions(p),
                (None, Some(k)) => PositionPolicy::MaxNonzero(k),
                (None, None) => PositionPolicy::All,
            };
            config.threads = threads;
            if let Some(cap) = cap {
                config.cap = cap;
            }
            config.stop_after = stop_after;
            let result = search(&config)?;
            let text = match format {
                Format::Json => render_json(&result),
                Format::Tsv => result.to_tsv(),
                Format::Human => {
                    let opt = |x: Option<u32>| x.map_or("-".into(), |v| v.to_string());
                    let mut t = table(
                        format,
                        &[
                            ("ideals", result.count.to_string()),
                            ("complete", result.complete.to_string()),
                            ("min goto", opt(result.min)),
                            ("max goto", opt(result.max)),
                        ],
                    );
                    for w in &result.witnesses {
                        let _ = writeln!(t, "witness g = {}: {}", w.goto, w.ideal);
                    }
                    t
                }
            };
            ok(text)
        }
        Command::Bounds(g) => {
            let s = semigroup(&g)?;
            let report = BoundReport::new(&s)?;
            let consistent = report.consistent();
            let text = match format {
                Format::Json => render_json(&report),
                _ => {
                    let mut rows = vec![
                        (
                            "global bound / rho",
                            format!(
                                "{} / {}",
                                report.global_bound.bound, report.global_bound.truth
                            ),
                        ),
                        (
                            "first generator bound / g",
                            format!(
                                "{} / {}",
                                report.first_generator_bound.bound,
                                report.first_generator_bound.truth
                            ),
                        ),
                    ];
                    let gen_rows: Vec<(String, String)> = report
                        .generator_bounds
                        .iter()
                        .map(|b| {
                            (
                                format!("generator {} bound / g", b.generator),
                                format!("{} / {}", b.check.bound, b.check.truth),
                            )
                        })
                        .collect();
                    rows.extend(gen_rows.iter().map(|(k, v)| (k.as_str(), v.clone())));
                    if let Some(c) = &report.two_generated_closed_form {
                        rows.push((
                            "closed form / engine",
                            format!("{:?} / {:?}", c.formula, c.engine),
                        ));
                    }
                    rows.push(("stable goto", report.stable_goto.to_string()));
                    rows.push(("rho", report.rho.to_string()));
                    rows.push(("conductor order", report.conductor_order.to_string()));
                    rows.push((
                        "monomial bound maximum / rho",
                        format!(
                            "{} / {}",
                            report.monomial_sup_bound.bound, report.monomial_sup_bound.truth
                        ),
                    ));
                    table(format, &rows)
                }
            };
            Ok(Outcome {
                text,
                ok: consistent,
            })
        }
        Command::Rlr { pure_power } => {
            let ratios = goto_ratios(&pure_power)?;
            let text = match format {
                Format::Json => render_json(&with_schema(&ratios)),
                _ => table(
                    format,
                    &[
                        ("exponents", join(&ratios.exponents)),
                        ("goto", ratios.goto.to_string()),
                        ("ord Q", ratios.ord_q.to_string()),
                        ("ord Q:m", ratios.ord_colon_m.to_string()),
                        ("ord Q:m^g", ratios.ord_colon_g.to_string()),
                        ("ratio Q", opt_str(&ratios.ratio_q)),
                        ("ratio Q:m", opt_str(&ratios.ratio_colon_m)),
                        ("ratio Q:m^g", opt_str(&ratios.ratio_colon_g)),
                    ],
                ),
            };
            ok(text)
        }
        Command::VerifyPaper => {
            let checks = run_corpus();
            let passed = checks.iter().filter(|c| c.pass).count();
            let all = passed == checks.len();
            let text = match format {
                Format::Json => render_json(&json!({
                    "schema": 1,
                    "passed": passed,
                    "failed": checks.len() - passed,
                    "checks": checks,
                })),
                Format::Tsv => checks.iter().fold(
                    String::from("status\tlabel\texpected\tactual\n"),
                    |mut t, c| {
                        let status = if c.pass { "PASS" } else { "FAIL" };
                        let _ = writeln!(t, "{status}\t{}\t{}\t{}", c.label, c.expected, c.actual);
                        t
                    },
                ),
                Format::Human => {
                    let mut t = checks.iter().fold(String::new(), |mut t, c| {
                        let _ = writeln!(t, "{}", c.line());
                        t
                    });
                    let _ = writeln!(t, "{passed}/{} passed", checks.len());
                    t
                }
            };
            Ok(Outcome { text, ok: all })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            // A closed pipe downstream is not an error of ours.
            let _ = std::io::stdout().lock().write_all(outcome.text.as_bytes());
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
