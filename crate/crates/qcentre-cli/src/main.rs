//! Command-line interface: construct central elements of the quantized
//! enveloping algebra, verify them on module batteries, compute their images
//! in the torus subalgebra, decompose the images into fundamental
//! characters, and export modules, pairings and Gram matrices.
//!
//! All output is JSON with a `"format": "qcentre/1"` tag and deterministic
//! key and term order, so repeated runs with the same arguments produce
//! byte-identical files.  Exit codes: 0 success, 2 bad usage or input,
//! 3 a verification check failed, 4 a domain precondition failed.

use clap::{Args, Parser, Subcommand};
use qcentre::battery::{battery, default_battery_name, Battery};
use qcentre::harishchandra::{
    chi_eval, decompose_in_fundamentals, hc_image, is_even, is_w_invariant,
};
use qcentre::jsonio::{
    self, char_poly_to_json, element_from_json, element_to_json, module_to_json, pretty,
    scalar_to_json, u0_to_json,
};
use qcentre::repbuilder::highest_weight_module;
use qcentre::rmatrix::central_element;
use qcentre::rootdata::{CartanDatum, Weight};
use qcentre::uqalg::{Algebra, AlgebraElement};
use serde_json::{json, Map, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qcentre", version, about = "Central elements of quantized enveloping algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct TypeArgs {
    /// Cartan type: a combined name like "A2", or a letter with --rank.
    #[arg(long = "type")]
    type_name: String,

    /// Rank, when --type is a bare letter.
    #[arg(long)]
    rank: Option<usize>,
}

impl TypeArgs {
    fn datum(&self) -> Result<CartanDatum, Failure> {
        let name = match self.rank {
            Some(r) => format!("{}{}", self.type_name, r),
            None => self.type_name.clone(),
        };
        CartanDatum::from_name(&name).map_err(usage)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct a central element, verify it on a battery, and emit it with
    /// its torus image.
    Central {
        #[command(flatten)]
        ty: TypeArgs,
        /// Dominant weight in fundamental coordinates, e.g. "1,0".
        #[arg(long)]
        weight: String,
        /// Power of the transfer operator inside the trace.
        #[arg(long, default_value_t = 1)]
        power: u32,
        /// Override the canonical reduced word (1-based indices, e.g. "1,2,1").
        #[arg(long)]
        reduced_word: Option<String>,
        /// Battery preset name; defaults to the type's standard preset.
        #[arg(long)]
        battery: Option<String>,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-run the battery checks against an element file.
    Verify {
        /// Element file produced by `central`, or any JSON with "type" and
        /// "element" (or bare {"terms": ...} plus --type).
        #[arg(long = "in")]
        input: PathBuf,
        /// Cartan type override when the file does not carry one.
        #[arg(long = "type")]
        type_name: Option<String>,
        #[arg(long)]
        battery: Option<String>,
    },
    /// Project an element file to its torus image.
    Hc {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a torus image as a polynomial in the fundamental characters.
    Decompose {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construct a simple highest-weight module and export its matrices.
    Module {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        weight: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the half-pairing on two element files.
    Pairing {
        #[command(flatten)]
        ty: TypeArgs,
        /// Element of the lower subalgebra (words in F and K).
        #[arg(long)]
        x: PathBuf,
        /// Element of the upper subalgebra (words in E and K).
        #[arg(long)]
        y: PathBuf,
    },
    /// Gram matrix of the half-pairing on a graded piece, or a sweep of
    /// graded pieces up to a height bound.
    Gram {
        #[command(flatten)]
        ty: TypeArgs,
        /// Root coordinates of one graded piece, e.g. "1,1".
        #[arg(long)]
        weight: Option<String>,
        /// Sweep all graded pieces of height up to this bound.
        #[arg(long)]
        max_height: Option<usize>,
        #[arg(long)]
        reduced_word: Option<String>,
    },
}

/// Failure modes with their process exit codes.
enum Failure {
    Usage(String),
    Check(String),
    Domain(String),
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

/// Map library errors onto exit codes: unmet decomposition preconditions are
/// domain failures, a stuck verification is a check failure, everything else
/// is bad input.
fn lib_err(e: qcentre::Error) -> Failure {
    use qcentre::Error::*;
    match e {
        NotWInvariant | NotEven | GradingNotZero => Failure::Domain(e.to_string()),
        DecompositionStuck => Failure::Check(e.to_string()),
        other => Failure::Usage(other.to_string()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Check(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("domain error: {m}");
            ExitCode::from(4)
        }
    }
}

fn parse_coords(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(|c| {
            c.trim()
                .parse::<i64>()
                .map_err(|e| usage(format!("bad coordinate {c:?}: {e}")))
        })
        .collect()
}

/// Reduced words are given 1-based on the command line.
fn parse_reduced_word(s: &str, rank: usize) -> Result<Vec<usize>, Failure> {
    let mut out = Vec::new();
    for c in s.split(',') {
        let n: usize = c
            .trim()
            .parse()
            .map_err(|e| usage(format!("bad reduced-word entry {c:?}: {e}")))?;
        if n == 0 || n > rank {
            return Err(usage(format!("reduced-word index {n} out of range 1..={rank}")));
        }
        out.push(n - 1);
    }
    Ok(out)
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, value: &Value) -> Result<(), Failure> {
    let text = pretty(value);
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn resolve_battery(alg: &Algebra, name: Option<&str>) -> Result<Battery, Failure> {
    let name = name
        .map(str::to_string)
        .unwrap_or_else(|| default_battery_name(alg.datum()).to_string());
    let b = battery(alg, &name).map_err(lib_err)?;
    if b.is_empty() {
        return Err(usage(qcentre::Error::EmptyBattery));
    }
    Ok(b)
}

/// Evaluation checks for a candidate central element: commutation with every
/// generator on every battery module; scalar action on the simple modules;
/// agreement of each scalar with the character of the torus image evaluated
/// at the shifted highest weight.
fn battery_checks(alg: &Algebra, elem: &AlgebraElement, bat: &Battery) -> (Vec<Value>, bool) {
    let datum = alg.datum();
    let rank = datum.rank();
    let mut checks = Vec::new();
    let mut all = true;
    let mut push = |name: &str, module: &str, pass: bool, all: &mut bool| {
        *all &= pass;
        checks.push(json!({"check": name, "module": module, "pass": pass}));
    };

    let image = hc_image(datum, elem).ok();

    for (idx, m) in bat.modules().iter().enumerate() {
        let label = bat.label(idx);
        let em = m.evaluate(elem);
        let mut central = true;
        for i in 0..rank {
            for gen in [alg.e(i), alg.f(i), alg.k(&Weight::fundamental(rank, i))] {
                let gm = m.evaluate(&gen);
                if !em.mul(&gm).sub(&gm.mul(&em)).is_zero() {
                    central = false;
                }
            }
        }
        push("centrality", label, central, &mut all);

        // Tensor probes are not simple, so no scalar claim is made there.
        if label.contains("(x)") {
            continue;
        }
        let scalar = em.as_scalar_multiple_of_identity();
        push("scalar-action", label, scalar.is_some(), &mut all);
        let eig = match (&scalar, &image) {
            (Some(s), Some(h)) => {
                let shifted = m.weight(0) + datum.rho();
                *s == chi_eval(datum, &shifted, h)
            }
            _ => false,
        };
        push("eigenvalue", label, eig, &mut all);
    }

    let inv = image
        .as_ref()
        .map(|h| is_w_invariant(datum, h))
        .unwrap_or(false);
    let even = image.as_ref().map(is_even).unwrap_or(false);
    checks.push(json!({"check": "image-w-invariant", "pass": inv}));
    checks.push(json!({"check": "image-even", "pass": even}));
    all &= inv && even;

    (checks, all)
}

fn weight_string(w: &Weight) -> String {
    w.to_string()
}

fn cmd_central(
    ty: &TypeArgs,
    weight: &str,
    power: u32,
    reduced_word: Option<&str>,
    battery_name: Option<&str>,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let datum = ty.datum()?;
    let rank = datum.rank();
    let lambda = Weight::new(parse_coords(weight)?);
    if lambda.rank() != rank {
        return Err(usage(qcentre::Error::RankMismatch(lambda.to_string())));
    }
    if !lambda.is_dominant() {
        return Err(usage(qcentre::Error::NonDominantWeight(lambda.to_string())));
    }
    let alg = Algebra::new(datum.clone());
    let word = reduced_word
        .map(|s| parse_reduced_word(s, rank))
        .transpose()?;
    let elem = central_element(&alg, &lambda, power, word.as_deref()).map_err(lib_err)?;
    let bat = resolve_battery(&alg, battery_name)?;
    let (checks, pass) = battery_checks(&alg, &elem, &bat);
    if !pass {
        let report = pretty(&Value::Array(checks));
        eprint!("{report}");
        return Err(Failure::Check(format!(
            "central element failed the {} battery",
            bat.name()
        )));
    }
    let image = hc_image(&datum, &elem).map_err(lib_err)?;
    let word_repr: Vec<usize> = word
        .unwrap_or_else(|| datum.canonical_reduced_word())
        .iter()
        .map(|i| i + 1)
        .collect();
    let value = json!({
        "format": jsonio::FORMAT,
        "type": datum.name(),
        "lambda": weight_string(&lambda),
        "power": power,
        "reduced_word": word_repr,
        "battery": {
            "name": bat.name(),
            "version": bat.version(),
            "checks": checks,
        },
        "hc_image": u0_to_json(&image),
        "element": element_to_json(&elem),
    });
    emit(out, &value)
}

/// Pull the Cartan type and the element out of a file, with optional
/// command-line override for the type.
fn load_element(
    v: &Value,
    type_override: Option<&str>,
) -> Result<(CartanDatum, Algebra, AlgebraElement), Failure> {
    let type_name = type_override
        .map(str::to_string)
        .or_else(|| v.get("type").and_then(|t| t.as_str()).map(str::to_string))
        .ok_or_else(|| usage("no Cartan type: pass --type or use a file with a \"type\" field"))?;
    let datum = CartanDatum::from_name(&type_name).map_err(lib_err)?;
    let alg = Algebra::new(datum.clone());
    let body = v.get("element").unwrap_or(v);
    let elem = element_from_json(&alg, body).map_err(lib_err)?;
    Ok((datum, alg, elem))
}

fn cmd_verify(
    input: &Path,
    type_override: Option<&str>,
    battery_name: Option<&str>,
) -> Result<(), Failure> {
    let v = read_json(input)?;
    let (datum, alg, elem) = load_element(&v, type_override)?;
    let file_battery = v
        .pointer("/battery/name")
        .and_then(|b| b.as_str())
        .map(str::to_string);
    let bat = resolve_battery(&alg, battery_name.or(file_battery.as_deref()))?;
    let (checks, pass) = battery_checks(&alg, &elem, &bat);
    let report = json!({
        "format": jsonio::FORMAT,
        "type": datum.name(),
        "battery": {"name": bat.name(), "version": bat.version()},
        "checks": checks,
        "pass": pass,
    });
    print!("{}", pretty(&report));
    if pass {
        Ok(())
    } else {
        Err(Failure::Check("one or more checks failed".into()))
    }
}

fn cmd_hc(input: &Path, out: Option<&Path>) -> Result<(), Failure> {
    let v = read_json(input)?;
    let (datum, _alg, elem) = load_element(&v, None)?;
    let image = hc_image(&datum, &elem).map_err(lib_err)?;
    let mut obj = Map::new();
    obj.insert("format".into(), json!(jsonio::FORMAT));
    obj.insert("type".into(), json!(datum.name()));
    if let Some(l) = v.get("lambda") {
        obj.insert("lambda".into(), l.clone());
    }
    obj.insert("image".into(), u0_to_json(&image));
    emit(out, &Value::Object(obj))
}

fn cmd_decompose(input: &Path, out: Option<&Path>) -> Result<(), Failure> {
    let v = read_json(input)?;
    let type_name = v
        .get("type")
        .and_then(|t| t.as_str())
        .ok_or_else(|| usage("input file has no \"type\" field"))?;
    let datum = CartanDatum::from_name(type_name).map_err(lib_err)?;
    let image = match v.get("image") {
        Some(img) => jsonio::u0_from_json(img, datum.rank()).map_err(lib_err)?,
        None => {
            let alg = Algebra::new(datum.clone());
            let body = v.get("element").unwrap_or(&v);
            let elem = element_from_json(&alg, body).map_err(lib_err)?;
            hc_image(&datum, &elem).map_err(lib_err)?
        }
    };
    let poly = decompose_in_fundamentals(&datum, &image).map_err(lib_err)?;
    let value = json!({
        "format": jsonio::FORMAT,
        "type": datum.name(),
        "polynomial": char_poly_to_json(&poly),
    });
    emit(out, &value)
}

fn cmd_module(ty: &TypeArgs, weight: &str, out: Option<&Path>) -> Result<(), Failure> {
    let datum = ty.datum()?;
    let lambda = Weight::new(parse_coords(weight)?);
    if lambda.rank() != datum.rank() {
        return Err(usage(qcentre::Error::RankMismatch(lambda.to_string())));
    }
    let alg = Algebra::new(datum);
    let m = highest_weight_module(&alg, &lambda).map_err(lib_err)?;
    let mut obj = match module_to_json(&m) {
        Value::Object(o) => o,
        _ => unreachable!("module encoding is an object"),
    };
    obj.insert("format".into(), json!(jsonio::FORMAT));
    obj.insert("weight".into(), json!(weight_string(&lambda)));
    emit(out, &Value::Object(obj))
}

fn cmd_pairing(ty: &TypeArgs, x: &Path, y: &Path) -> Result<(), Failure> {
    let datum = ty.datum()?;
    let alg = Algebra::new(datum);
    let vx = read_json(x)?;
    let vy = read_json(y)?;
    let ex = element_from_json(&alg, vx.get("element").unwrap_or(&vx)).map_err(lib_err)?;
    let ey = element_from_json(&alg, vy.get("element").unwrap_or(&vy)).map_err(lib_err)?;
    let value = qcentre::pairing::rosso_form(&alg, &ex, &ey).map_err(lib_err)?;
    print!("{}", pretty(&scalar_to_json(&value)));
    Ok(())
}

fn grade_report(
    alg: &Algebra,
    coords: &[i64],
    word: Option<&[usize]>,
) -> Result<(Value, bool), Failure> {
    let datum = alg.datum();
    let nu = datum.from_root_coords(coords);
    let (g, rank) = qcentre::pairing::gram_rank(alg, &nu, word).map_err(lib_err)?;
    let full = rank == g.rows();
    let mut matrix = Vec::new();
    for i in 0..g.rows() {
        let mut row = Vec::new();
        for j in 0..g.ncols() {
            row.push(scalar_to_json(&g.entry(i, j)));
        }
        matrix.push(Value::Array(row));
    }
    let report = json!({
        "root_coords": coords,
        "size": g.rows(),
        "rank": rank,
        "full_rank": full,
        "matrix": matrix,
    });
    Ok((report, full))
}

fn cmd_gram(
    ty: &TypeArgs,
    weight: Option<&str>,
    max_height: Option<usize>,
    reduced_word: Option<&str>,
) -> Result<(), Failure> {
    let datum = ty.datum()?;
    let rank = datum.rank();
    let alg = Algebra::new(datum.clone());
    let word = reduced_word
        .map(|s| parse_reduced_word(s, rank))
        .transpose()?;

    match (weight, max_height) {
        (Some(w), None) => {
            let coords = parse_coords(w)?;
            if coords.len() != rank || coords.iter().any(|c| *c < 0) {
                return Err(usage("--weight wants nonnegative root coordinates"));
            }
            let (report, full) = grade_report(&alg, &coords, word.as_deref())?;
            let value = json!({
                "format": jsonio::FORMAT,
                "type": datum.name(),
                "piece": report,
            });
            emit(None, &value)?;
            if full {
                Ok(())
            } else {
                Err(Failure::Check("Gram matrix is rank deficient".into()))
            }
        }
        (None, Some(h)) => {
            let mut pieces = Vec::new();
            let mut all = true;
            let mut coords = vec![0i64; rank];
            loop {
                let ht: i64 = coords.iter().sum();
                if ht >= 1 && ht as usize <= h {
                    let (mut report, full) = grade_report(&alg, &coords, word.as_deref())?;
                    // The sweep drops the matrices to keep the report small.
                    report.as_object_mut().unwrap().remove("matrix");
                    pieces.push(report);
                    all &= full;
                }
                // Advance the odometer over all coordinate vectors bounded
                // by the height.
                let mut i = 0;
                loop {
                    if i == rank {
                        break;
                    }
                    coords[i] += 1;
                    if coords.iter().sum::<i64>() as usize <= h {
                        break;
                    }
                    coords[i] = 0;
                    i += 1;
                }
                if i == rank {
                    break;
                }
            }
            let value = json!({
                "format": jsonio::FORMAT,
                "type": datum.name(),
                "max_height": h,
                "pieces": pieces,
                "pass": all,
            });
            emit(None, &value)?;
            if all {
                Ok(())
            } else {
                Err(Failure::Check("a Gram matrix is rank deficient".into()))
            }
        }
        _ => Err(usage("pass exactly one of --weight or --max-height")),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.cmd {
        Cmd::Central {
            ty,
            weight,
            power,
            reduced_word,
            battery,
            out,
        } => cmd_central(
            ty,
            weight,
            *power,
            reduced_word.as_deref(),
            battery.as_deref(),
            out.as_deref(),
        ),
        Cmd::Verify {
            input,
            type_name,
            battery,
        } => cmd_verify(input, type_name.as_deref(), battery.as_deref()),
        Cmd::Hc { input, out } => cmd_hc(input, out.as_deref()),
        Cmd::Decompose { input, out } => cmd_decompose(input, out.as_deref()),
        Cmd::Module { ty, weight, out } => cmd_module(ty, weight, out.as_deref()),
        Cmd::Pairing { ty, x, y } => cmd_pairing(ty, x, y),
        Cmd::Gram {
            ty,
            weight,
            max_height,
            reduced_word,
        } => cmd_gram(
            ty,
            weight.as_deref(),
            *max_height,
            reduced_word.as_deref(),
        ),
    }
}
