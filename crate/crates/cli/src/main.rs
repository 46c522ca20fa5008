use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use momentum_atlas::geomkernel::{self, HPolyhedron, Sense};
use momentum_atlas::rational::{self, Q};
use momentum_atlas::{catalog, kirwan, polytope, qubits, weights, Budgets, Error, RootSystem, WeightVec};

/// Exact momentum polytopes, Kirwan candidates and invariant-theory tables for
/// compact semisimple groups.
#[derive(Parser)]
#[command(name = "momentum-atlas", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(flatten)]
    budgets: BudgetArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct BudgetArgs {
    /// Largest Weyl orbit generated.
    #[arg(long, global = true)]
    budget_orbit: Option<usize>,
    /// Largest weight set of a representation.
    #[arg(long, global = true)]
    budget_weights: Option<usize>,
    /// Subsets scanned by the candidate and witness searches.
    #[arg(long, global = true)]
    budget_subsets: Option<u64>,
    /// Largest stabilizer orbit used for fences.
    #[arg(long, global = true)]
    budget_stabilizer: Option<usize>,
    /// Largest intermediate ray list in double description.
    #[arg(long, global = true)]
    budget_dd_rays: Option<usize>,
    /// Global cap applied on top of every other budget.
    #[arg(long = "budget-cap", env = "MOMENTUM_ATLAS_BUDGET", global = true)]
    budget_cap: Option<u64>,
}

impl BudgetArgs {
    fn resolve(&self) -> Result<Budgets, Error> {
        let mut b = Budgets::default();
        let set = |slot: &mut usize, v: Option<usize>| v.map(|v| *slot = v);
        set(&mut b.orbit, self.budget_orbit);
        set(&mut b.weights, self.budget_weights);
        set(&mut b.stabilizer, self.budget_stabilizer);
        set(&mut b.dd_rays, self.budget_dd_rays);
        if let Some(s) = self.budget_subsets {
            b.subsets = s;
        }
        if let Some(cap) = self.budget_cap {
            b = b.capped(cap);
        }
        if b.orbit == 0 || b.weights == 0 || b.subsets == 0 || b.stabilizer == 0 || b.dd_rays == 0 {
            return Err(Error::Invalid("budgets must be positive".into()));
        }
        Ok(b)
    }
}

#[derive(Args)]
struct SystemArg {
    /// Root system such as `C2`, `A1xA4` or `E6`.
    #[arg(long)]
    system: String,
    /// Per-component positive multipliers of the invariant form.
    #[arg(long, allow_hyphen_values = true)]
    scale: Option<String>,
}

#[derive(Args)]
struct WeightArgs {
    #[command(flatten)]
    system: SystemArg,
    /// Highest weight in fundamental coordinates, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
}

#[derive(Args)]
struct PlotArgs {
    /// Emit CSV vertices of the slice of Υ⁺ spanned by two fundamental directions (1-based).
    #[arg(long)]
    plot: Option<String>,
}

#[derive(Args)]
struct RepArgs {
    #[command(flatten)]
    system: SystemArg,
    /// Highest weight of an irreducible summand; shorthand for one `--summand`.
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    /// Highest weight of a summand; repeat for reducible representations.
    #[arg(long, allow_hyphen_values = true)]
    summand: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Split the simple roots by the coefficients of λ.
    Partition(WeightArgs),
    /// Root data and the Weyl orbit of a weight.
    Weyl {
        #[command(flatten)]
        system: SystemArg,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// The fence, Υ_λ and the zero test.
    Upsilon {
        #[command(flatten)]
        args: WeightArgs,
        #[command(flatten)]
        plot: PlotArgs,
    },
    /// The momentum polytope of the projective orbit of the highest weight vector.
    Momentum {
        #[command(flatten)]
        args: WeightArgs,
        #[command(flatten)]
        plot: PlotArgs,
    },
    /// Candidate critical values of ‖μ‖² with their criticality verdicts.
    Kirwan(RepArgs),
    /// Search for zero as a root-distinct convex combination of weights.
    ZeroWitness(RepArgs),
    /// The qubit wall criterion and an explicit critical state.
    Qubits {
        #[arg(long)]
        n: usize,
        /// Wall element in fundamental coordinates.
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
    },
    /// Table lookups for an irreducible representation, or the tables themselves.
    Catalog {
        #[arg(long, visible_alias = "group")]
        system: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        scale: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        /// Known minimal invariant degree, when not read from the tables.
        #[arg(long)]
        d1: Option<i64>,
    },
}

enum Output {
    Json(Value),
    Csv(String),
}

fn system(arg: &SystemArg) -> Result<RootSystem, Error> {
    let sys = RootSystem::parse(&arg.system)?;
    match &arg.scale {
        Some(s) => sys.with_scale(rational::parse_q_list(s)?),
        None => Ok(sys),
    }
}

fn weight(sys: &RootSystem, s: &str) -> Result<WeightVec, Error> {
    sys.weight(rational::parse_q_list(s)?)
}

fn q_matrix(m: &[Vec<Q>]) -> Value {
    json!(m.iter().map(|r| rational::fmt_vec(r)).collect::<Vec<_>>())
}

fn envelope(command: &str, sys: Option<&RootSystem>, result: Value) -> Value {
    json!({
        "command": command,
        "system": sys.map(RootSystem::name),
        "scale": sys.map(|s| rational::fmt_vec(s.scale())),
        "result": result,
    })
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn parse_plot(spec: &str, rank: usize) -> Result<(usize, usize), Error> {
    let bad = || Error::Parse(format!("--plot expects two distinct directions in 1..={rank}, got {spec:?}"));
    let (x, y) = spec.split_once(',').ok_or_else(bad)?;
    let x: usize = x.trim().parse().map_err(|_| bad())?;
    let y: usize = y.trim().parse().map_err(|_| bad())?;
    if x == y || !(1..=rank).contains(&x) || !(1..=rank).contains(&y) {
        return Err(bad());
    }
    Ok((x - 1, y - 1))
}

/// Vertices of `Υ⁺ ∩ span(ω_x, ω_y)` as CSV, in counterclockwise order.
fn plot_slice(sys: &RootSystem, lambda: &WeightVec, spec: &str, budgets: &Budgets) -> Result<String, Error> {
    let rank = sys.rank();
    let (x, y) = parse_plot(spec, rank)?;
    let mut h: HPolyhedron = polytope::with_chamber(&polytope::upsilon_h(sys, lambda, budgets)?.h);
    for k in (0..rank).filter(|&k| k != x && k != y) {
        let mut e = vec![Q::from_integer(0.into()); rank];
        e[k] = rational::one();
        h.push(e, rational::zero(), Sense::Eq)?;
    }
    let v = geomkernel::dd_convert(&h, budgets)?;
    let mut pts: Vec<(Q, Q)> = v.vertices.iter().map(|p| (p[x].clone(), p[y].clone())).collect();
    pts.sort();
    pts.dedup();
    let f: Vec<(f64, f64)> = pts.iter().map(|(a, b)| (rational::to_f64(a), rational::to_f64(b))).collect();
    let n = f.len().max(1) as f64;
    let (cx, cy) = f.iter().fold((0.0, 0.0), |(sx, sy), (a, b)| (sx + a / n, sy + b / n));
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&i, &j| (f[i].1 - cy).atan2(f[i].0 - cx).total_cmp(&(f[j].1 - cy).atan2(f[j].0 - cx)));
    let mut out = format!("omega{},omega{}\n", x + 1, y + 1);
    for i in order {
        out.push_str(&format!("{},{}\n", pts[i].0, pts[i].1));
    }
    Ok(out)
}

fn representation(sys: &RootSystem, args: &RepArgs, budgets: &Budgets) -> Result<weights::WeightSystem, Error> {
    let mut hw = Vec::new();
    for s in args.weight.iter().chain(&args.summand) {
        hw.push(weight(sys, s)?);
    }
    if hw.is_empty() {
        return Err(Error::Invalid("give --weight or at least one --summand".into()));
    }
    weights::weight_system(sys, &hw, budgets)
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let budgets = cli.budgets.resolve()?;
    let b = &budgets;
    let out = match &cli.command {
        Command::Partition(a) => {
            let sys = system(&a.system)?;
            let lambda = weight(&sys, &a.weight)?;
            let p = weights::partition_simple_roots(&sys, &lambda)?;
            let convexity = weights::convexity_verdict(&sys, &lambda)?;
            envelope("partition", Some(&sys), json!({"lambda": lambda, "partition": p, "convexity": convexity}))
        }
        Command::Weyl { system: s, weight: w } => {
            let sys = system(s)?;
            let mut r = json!({
                "rank": sys.rank(),
                "cartan": sys.cartan(),
                "gram": q_matrix(sys.gram()),
                "fundamental_gram": q_matrix(sys.fund_gram()),
                "positive_roots": sys.positive_roots(),
            });
            if let Some(w) = w {
                let lambda = weight(&sys, w)?;
                let (dominant, word) = sys.dominant_representative(&lambda);
                r["weight"] = to_value(&lambda);
                r["dominant"] = to_value(&dominant);
                r["word"] = json!(word.iter().map(|i| i + 1).collect::<Vec<_>>());
                r["orbit"] = to_value(&sys.weyl_orbit(&lambda, b.orbit)?);
                if lambda.is_dominant() && lambda.is_integral() {
                    r["dimension"] = json!(sys.weyl_dimension(&lambda)?);
                }
            }
            envelope("weyl", Some(&sys), r)
        }
        Command::Upsilon { args, plot } => {
            let sys = system(&args.system)?;
            let lambda = weight(&sys, &args.weight)?;
            if let Some(p) = &plot.plot {
                return Ok(Output::Csv(plot_slice(&sys, &lambda, p, b)?));
            }
            let fence = polytope::fence(&sys, &lambda, b)?;
            let u = polytope::upsilon_h(&sys, &lambda, b)?;
            let plus = polytope::upsilon_plus(&sys, &lambda, b)?;
            let zero = polytope::zero_in_upsilon(&sys, &lambda, b)?;
            envelope("upsilon", Some(&sys), json!({"fence": fence, "upsilon": u.h, "upsilon_plus": plus, "zero_in_upsilon": zero}))
        }
        Command::Momentum { args, plot } => {
            let sys = system(&args.system)?;
            let lambda = weight(&sys, &args.weight)?;
            if let Some(p) = &plot.plot {
                return Ok(Output::Csv(plot_slice(&sys, &lambda, p, b)?));
            }
            envelope("momentum", Some(&sys), to_value(&polytope::report(&sys, &lambda, b)?))
        }
        Command::Kirwan(a) => {
            let sys = system(&a.system)?;
            let ws = representation(&sys, a, b)?;
            envelope("kirwan", Some(&sys), to_value(&kirwan::analyze(&ws, b)?))
        }
        Command::ZeroWitness(a) => {
            let sys = system(&a.system)?;
            let ws = representation(&sys, a, b)?;
            let search = weights::zero_witness(&ws, b)?;
            let verified = search.witness.as_ref().map(|w| w.verify(&sys));
            envelope("zero-witness", Some(&sys), json!({"summands": ws.summands, "search": search, "verified": verified}))
        }
        Command::Qubits { n, xi } => {
            let sys = qubits::qubit_system(*n)?;
            let xi = weight(&sys, xi)?;
            envelope("qubits", Some(&sys), to_value(&qubits::report(&xi)?))
        }
        Command::Catalog { system: s, scale, weight: w, d1 } => match s {
            None => envelope("catalog", None, to_value(catalog::Catalog::get())),
            Some(s) => {
                let sys = system(&SystemArg { system: s.clone(), scale: scale.clone() })?;
                let w = w.as_ref().ok_or_else(|| Error::Invalid("--weight is required with --system".into()))?;
                let lambda = weight(&sys, w)?;
                let unstable = catalog::match_unstable(&sys, &lambda)?;
                let rs = catalog::match_rs_continuous(&sys, &lambda)?;
                let rss = match catalog::rss_verdict(&sys, &lambda, *d1) {
                    Ok(r) => to_value(&r),
                    Err(Error::Unstable(m)) => json!({"unstable": m}),
                    Err(e) => return Err(e),
                };
                envelope("catalog", Some(&sys), json!({"lambda": lambda, "unstable": unstable, "rs_continuous": rs, "rank_of_semistability": rss}))
            }
        },
    };
    Ok(Output::Json(round_floats(out)))
}

/// Floats are printed with 12 significant digits; exact data is already stringly typed.
fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().expect("f64");
            let r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
            json!(if r == 0.0 { 0.0 } else { r })
        }
        Value::Array(a) => Value::Array(a.into_iter().map(round_floats).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, round_floats(v))).collect()),
        other => other,
    }
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                match x {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(x, indent + 1, out);
                    }
                    Value::Array(a) if a.iter().any(|e| e.is_object()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for e in a {
                            out.push_str(&format!("{pad}  -\n"));
                            render_text(e, indent + 2, out);
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", inline(x))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other))),
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => format!("[{}]", a.iter().map(inline).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn code(e: &Error) -> &'static str {
    match e {
        Error::Parse(_) => "parse",
        Error::RankOutOfRange { .. } => "rank_out_of_range",
        Error::Dimension { .. } => "dimension",
        Error::NotDominant(_) => "not_dominant",
        Error::NotIntegral(_) => "not_integral",
        Error::NotSimple(_) => "not_simple",
        Error::NotARoot(_) => "not_a_root",
        Error::Unfaithful(_) => "unfaithful",
        Error::Budget { .. } => "budget",
        Error::Invalid(_) => "invalid",
        Error::Unstable(_) => "unstable",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if e.use_stderr() => {
            let message = e.render().to_string();
            eprintln!("{}", json!({"error": "usage", "message": message.trim_end()}));
            return ExitCode::from(1);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(&cli) {
        Ok(out) => {
            let text = match out {
                Output::Csv(s) => s,
                Output::Json(v) if cli.format == Format::Text => {
                    let mut s = String::new();
                    render_text(&v, 0, &mut s);
                    s
                }
                Output::Json(v) => serde_json::to_string_pretty(&v).expect("json") + "\n",
            };
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", json!({"error": code(&e), "message": e.to_string()}));
            ExitCode::from(if e.is_budget() { 2 } else { 1 })
        }
    }
}
