//! `fusion-descent`: command-line front end to the decision procedures.
//!
//! Exit codes: 0 on a computed result (including "no" verdicts and invalid
//! rings), 2 on input errors, 3 on unsupported field classes, 4 when the
//! cohomology size cap is exceeded.

mod render;

use std::io::{self, BufRead, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use fusion_descent::based_ring::{self as br, BasedRing, Strength};
use fusion_descent::brauer::{self, parse_rational, Place, QuaternionSymbol};
use fusion_descent::categorify;
use fusion_descent::cohomology::{self as co, Cochain, FiniteAbelianGroup, GModule};
use fusion_descent::descent;
use fusion_descent::field::FieldClass;
use fusion_descent::Error;

#[derive(Parser, Debug)]
#[command(name = "fusion-descent", version, about = "Exact computations for forms of pointed fusion categories")]
struct Cli {
    /// Output rendering.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Largest bar-complex row count `|G|^(k+1) * dim M` allowed.
    #[arg(long, env = "FUSION_DESCENT_MAX_ENTRIES", default_value_t = co::DEFAULT_SIZE_CAP, global = true)]
    max_entries: u128,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the weak (or strict) unital based ring axioms.
    VerifyRing {
        /// Ring JSON: a file path, `-` for stdin, or inline JSON.
        #[arg(long)]
        ring: String,
        #[arg(long, value_enum, default_value_t = StrengthArg::Weak)]
        strength: StrengthArg,
    },
    /// Build one of the rank-2/3 families or R_{p,r}.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Frobenius–Perron dimension of a basis element.
    FpDim {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        index: usize,
    },
    /// Ring of orbit sums of a subgroup H of (Z/n)^x acting on Z/n.
    OrbitRing {
        #[arg(long)]
        n: u64,
        /// All elements of H, comma separated.
        #[arg(long, value_delimiter = ',', conflicts_with = "generators")]
        subgroup: Vec<u64>,
        /// Generators of H, comma separated.
        #[arg(long, value_delimiter = ',')]
        generators: Vec<u64>,
    },
    /// Categorifiability verdicts.
    Categorify {
        #[command(subcommand)]
        family: CategorifyFamily,
    },
    /// Minimal field of definition of Vec_{Z/n}^ω.
    MinField {
        #[arg(long)]
        n: u64,
        /// The braided Vec_{Z/p} with a non-degenerate quadratic form.
        #[arg(long)]
        braided: bool,
    },
    /// Existence of a real form of Vec_{Z/p}^ω.
    RealForm {
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value_t = Omega::Nontrivial)]
        omega: Omega,
    },
    /// Forms of Vec_{Z/2}^(ω) over a field class.
    Forms {
        #[arg(long)]
        field: String,
        #[arg(long, value_enum, default_value_t = Omega::Trivial)]
        omega: Omega,
    },
    /// H^k(G, M) for finite abelian G and M.
    Cohomology {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long)]
        degree: u32,
    },
    /// Whether a cochain is a cocycle.
    CocycleCheck {
        /// Cochain JSON: a file path, `-` for stdin, or inline JSON.
        #[arg(long)]
        cochain: String,
        /// Action matrices of the group generators as JSON; trivial if omitted.
        #[arg(long)]
        action: Option<String>,
    },
    /// Class of a pulled-back carry cocycle, or whether two cocycles are cohomologous.
    CocycleClass {
        #[arg(long, requires_all = ["a", "s"], conflicts_with_all = ["c1", "c2"])]
        n: Option<u64>,
        #[arg(long)]
        a: Option<u64>,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long, requires = "c2")]
        c1: Option<String>,
        #[arg(long, requires = "c1")]
        c2: Option<String>,
        #[arg(long)]
        action: Option<String>,
    },
    /// Hilbert symbol (a, b)_v.
    Hilbert {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// `real` or a prime.
        #[arg(long)]
        place: String,
    },
    /// Ramified places of the quaternion algebra Q_{a,b} over Q.
    Ramified {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Br_n(K), or the sum over a grading group's cyclic factors.
    BrN {
        #[arg(long)]
        field: String,
        #[arg(long, required_unless_present = "grading", conflicts_with = "grading")]
        n: Option<u64>,
        /// Cyclic factor orders of the universal grading group, comma separated.
        #[arg(long, value_delimiter = ',')]
        grading: Vec<u64>,
    },
    /// Read JSON-lines requests from stdin, write one JSON response per line.
    Batch,
}

#[derive(Subcommand, Debug)]
enum Family {
    #[command(name = "r-m")]
    RM {
        #[arg(long)]
        m: u64,
    },
    #[command(name = "r-pr")]
    RPr {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u64,
    },
    #[command(name = "s-k")]
    SK {
        #[arg(long)]
        k: u64,
    },
    #[command(name = "t-k")]
    TK {
        #[arg(long)]
        k: u64,
    },
    #[command(name = "s-ab")]
    SAb {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
}

#[derive(Subcommand, Debug)]
enum CategorifyFamily {
    #[command(name = "r-m")]
    RM {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        field: String,
    },
    #[command(name = "r-pr")]
    RPr {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        field: String,
    },
    #[command(name = "s-k")]
    SK {
        #[arg(long)]
        k: u64,
    },
    #[command(name = "t-k")]
    TK {
        #[arg(long)]
        k: u64,
    },
    #[command(name = "s-ab")]
    SAb {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
}

#[derive(Args, Debug)]
struct ModuleArgs {
    /// Cyclic factor orders of G, comma separated; empty for the trivial group.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    group: Vec<u64>,
    /// Cyclic factor orders of M, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    module: Vec<u64>,
    /// Action matrices of the group generators as JSON; trivial if omitted.
    #[arg(long)]
    action: Option<String>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum StrengthArg {
    Weak,
    Strict,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Omega {
    Trivial,
    Nontrivial,
}

/// A failed request: exit code and message.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidInput(_) | Error::Structure(_) => 2,
            Error::Unsupported(_) => 3,
            Error::SizeCap { .. } => 4,
        };
        Failure { code, message: e.to_string() }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("result types serialize")
}

fn field(s: &str) -> Result<FieldClass, Failure> {
    Ok(s.parse::<FieldClass>()?)
}

/// Reads a JSON document given inline, as a path, or as `-` for stdin.
fn load_json<T: serde::de::DeserializeOwned>(source: &str, what: &str) -> Result<T, Failure> {
    let text = if source.trim_start().starts_with(['{', '[']) {
        source.to_string()
    } else if source == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).map_err(|e| input_error(format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(source).map_err(|e| input_error(format!("reading {source}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| input_error(format!("invalid {what} JSON: {e}")))
}

fn build_module(group: &FiniteAbelianGroup, orders: Vec<u64>, action: Option<&str>) -> Result<GModule, Failure> {
    Ok(match action {
        Some(src) => GModule::new(group, orders, load_json(src, "action")?)?,
        None => GModule::trivial(group, orders)?,
    })
}

/// Group and module of a cochain, with an optional action.
fn cochain_context(c: &Cochain, action: Option<&str>) -> Result<(FiniteAbelianGroup, GModule), Failure> {
    let group = FiniteAbelianGroup::new(c.group_orders().to_vec())?;
    let module = build_module(&group, c.module_orders().to_vec(), action)?;
    Ok((group, module))
}

fn construct(family: &Family) -> Result<BasedRing, Error> {
    match *family {
        Family::RM { m } => br::construct_r_m(m),
        Family::RPr { p, r } => br::construct_r_pr(p, r),
        Family::SK { k } => br::construct_s_k(k),
        Family::TK { k } => br::construct_t_k(k),
        Family::SAb { a, b } => br::construct_s_ab(a, b),
    }
}

fn execute(cli: &Cli) -> Result<Value, Failure> {
    let cap = cli.max_entries;
    match &cli.command {
        Command::VerifyRing { ring, strength } => {
            let ring: BasedRing = load_json(ring, "ring")?;
            let strength = match strength {
                StrengthArg::Weak => Strength::Weak,
                StrengthArg::Strict => Strength::Strict,
            };
            Ok(to_value(&br::verify_based_ring(&ring, strength)))
        }
        Command::Construct { family } => Ok(to_value(&construct(family)?)),
        Command::FpDim { ring, index } => {
            let ring: BasedRing = load_json(ring, "ring")?;
            let dim = br::fp_dim(&ring, *index)?;
            Ok(json!({ "index": index, "label": ring.label(*index), "fp_dim": dim }))
        }
        Command::OrbitRing { n, subgroup, generators } => {
            let h = if subgroup.is_empty() {
                br::unit_subgroup_generated_by(*n, generators)?
            } else {
                subgroup.clone()
            };
            Ok(to_value(&br::orbit_ring(*n, &h)?))
        }
        Command::Categorify { family } => {
            let verdict = match family {
                CategorifyFamily::RM { m, field: f } => categorify::categorify_r_m(*m, &field(f)?)?,
                CategorifyFamily::RPr { p, r, field: f } => categorify::categorify_r_pr(*p, *r, &field(f)?)?,
                CategorifyFamily::SK { k } => categorify::categorify_s_k(*k)?,
                CategorifyFamily::TK { k } => categorify::categorify_t_k(*k)?,
                CategorifyFamily::SAb { a, b } => categorify::categorify_s_ab(*a, *b)?,
            };
            Ok(to_value(&verdict))
        }
        Command::MinField { n, braided } => {
            let report = if *braided { descent::braided_minimal_field(*n)? } else { descent::minimal_field(*n)? };
            Ok(to_value(&report))
        }
        Command::RealForm { p, omega } => Ok(to_value(&descent::real_form_exists(*p, *omega == Omega::Nontrivial)?)),
        Command::Forms { field: f, omega } => {
            Ok(to_value(&descent::forms_of_pointed_rank2(&field(f)?, *omega == Omega::Nontrivial)?))
        }
        Command::Cohomology { module, degree } => {
            let group = FiniteAbelianGroup::new(module.group.clone())?;
            let m = build_module(&group, module.module.clone(), module.action.as_deref())?;
            let h = co::cohomology_group_capped(&group, &m, *degree, cap)?;
            Ok(json!({
                "group": group.orders(),
                "module": m.orders(),
                "degree": degree,
                "invariant_factors": h.invariant_factors,
                "order": h.order().to_string(),
                "description": h.to_string(),
            }))
        }
        Command::CocycleCheck { cochain, action } => {
            let c: Cochain = load_json(cochain, "cochain")?;
            let (group, module) = cochain_context(&c, action.as_deref())?;
            let ok = co::is_cocycle_capped(&group, &module, &c, cap)?;
            Ok(json!({ "degree": c.degree(), "is_cocycle": ok }))
        }
        Command::CocycleClass { n, a, s, c1, c2, action } => match (n, a, s, c1, c2) {
            (Some(n), Some(a), Some(s), None, None) => Ok(to_value(&co::pullback_class_capped(*n, *a, *s, cap)?)),
            (None, _, _, Some(c1), Some(c2)) => {
                let c1: Cochain = load_json(c1, "cochain")?;
                let c2: Cochain = load_json(c2, "cochain")?;
                let (group, module) = cochain_context(&c1, action.as_deref())?;
                let b = co::cohomologous_capped(&group, &module, &c1, &c2, cap)?;
                Ok(json!({ "cohomologous": b.is_some(), "coboundary": b }))
            }
            _ => Err(input_error("cocycle-class needs either --n, --a, --s or --c1, --c2")),
        },
        Command::Hilbert { a, b, place } => {
            let (x, y) = (parse_rational(a)?, parse_rational(b)?);
            let v: Place = place.parse()?;
            let symbol = brauer::hilbert_symbol(x, y, v)?;
            Ok(json!({ "a": a, "b": b, "place": v, "symbol": symbol }))
        }
        Command::Ramified { a, b } => {
            let q = QuaternionSymbol::new(parse_rational(a)?, parse_rational(b)?)?;
            let places = brauer::ramified_places(&q)?;
            Ok(json!({ "algebra": q, "ramified": places, "is_division": !places.is_empty() }))
        }
        Command::BrN { field: f, n, grading } => {
            let k = field(f)?;
            let descriptor = match n {
                Some(n) => brauer::br_n(&k, *n)?,
                None => brauer::quasi_trivial_forms_group(grading, &k)?,
            };
            Ok(to_value(&descriptor))
        }
        Command::Batch => Err(input_error("batch requests cannot nest")),
    }
}

/// Output text for a successful result.
fn render(value: &Value, format: Format, compact: bool) -> String {
    match format {
        Format::Json if compact => value.to_string(),
        Format::Json => serde_json::to_string_pretty(value).expect("JSON values serialize"),
        Format::Table => render::table(value),
    }
}

/// One batch request: an argument vector, either bare or as `{"argv": [...]}`.
fn batch_line(line: &str) -> Value {
    let argv: Result<Vec<String>, String> = serde_json::from_str::<Value>(line)
        .map_err(|e| e.to_string())
        .and_then(|v| {
            let list = match v {
                Value::Object(mut o) => o.remove("argv").unwrap_or(Value::Null),
                other => other,
            };
            serde_json::from_value(list).map_err(|_| "a request is a JSON array of arguments or {\"argv\": [...]}".to_string())
        });
    let argv = match argv {
        Ok(a) => a,
        Err(e) => return json!({ "exit": 2, "error": format!("invalid request: {e}") }),
    };
    let cli = match Cli::try_parse_from(std::iter::once("fusion-descent".to_string()).chain(argv)) {
        Ok(cli) => cli,
        Err(e) => return json!({ "exit": 2, "error": e.to_string().trim_end() }),
    };
    match execute(&cli) {
        Ok(result) => json!({ "exit": 0, "result": result }),
        Err(f) => json!({ "exit": f.code, "error": f.message }),
    }
}

fn run_batch() -> ExitCode {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for line in stdin.lock().lines() {
        let line = match line {
            Ok(l) => l,
            Err(e) => {
                eprintln!("error: reading stdin: {e}");
                return ExitCode::from(2);
            }
        };
        // Blank lines still get a response so line numbers stay aligned.
        let response = if line.trim().is_empty() {
            json!({ "exit": 2, "error": "invalid request: empty line" })
        } else {
            batch_line(&line)
        };
        if writeln!(out, "{response}").is_err() {
            return ExitCode::from(2);
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if matches!(cli.command, Command::Batch) {
        return run_batch();
    }
    match execute(&cli) {
        Ok(value) => {
            // A closed pipe downstream is not an error of ours.
            let _ = writeln!(std::io::stdout().lock(), "{}", render(&value, cli.format, false));
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
