//! The `origami-lab` command line.
//!
//! Exit codes: 0 success, 1 input error, 2 a verification failed.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::Value;

use crate::autos::{self, affine_autos, fixed_points, order_histogram, plus_minus_autos, Derivative, FixedPointReport};
use crate::curves::{q_sigma_order, theorem_for_order, verify_identities, CurveParams, DEFAULT_TOL, THEOREM_TOL};
use crate::elliptic::{lambda_from_torsion, torsion_points_up_to, DEFAULT_NMAX};
use crate::error::Error;
use crate::format::{builtin, parse_complex, parse_origami, ComplexJson, OrigamiJson};
use crate::intersect::{construct_d, pipeline, sweep, GridPoint};
use crate::origami::{quaternion_origami, torus_grid, Cylinder, Origami};
use crate::quaternion::QuaternionElement;
use crate::veech::{veech_group, verify_characteristic_w, WordEntry};

#[derive(Parser, Debug)]
#[command(name = "origami-lab", version, about = "Origamis, Veech groups and the quaternion origami family")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Genus, vertices, stratum and cylinders of an origami.
    Info(OrigamiInput),
    /// Veech group index, cusps and generators.
    Veech {
        #[command(flatten)]
        input: OrigamiInput,
        /// Also print the SL2(Z)-orbit.
        #[arg(long)]
        orbit: bool,
    },
    /// Affine automorphisms with derivative I, -I, S or S^-1 and their fixed points.
    Autos {
        #[command(flatten)]
        input: OrigamiInput,
        /// Only this derivative (I, -I, S, S^-1).
        #[arg(long)]
        derivative: Option<Derivative>,
    },
    /// Full check suite for the quaternion origami W.
    Wms,
    /// Points of exact order n on y^2 = x^3 - x.
    Torsion {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_NMAX)]
        nmax: usize,
    },
    /// Checks the closed-form identities on W_lambda at seeded sample points.
    Verify {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Torsion criterion for all points of order n, or the order of Q_sigma at a given lambda.
    Theorem {
        #[arg(long, conflicts_with = "lambda", required_unless_present = "lambda")]
        n: Option<usize>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, default_value_t = DEFAULT_NMAX)]
        nmax: usize,
        #[arg(long, default_value_t = THEOREM_TOL)]
        tol: f64,
    },
    /// The double cover D branched over the rotation orbit of (a, b) in the n x n grid.
    Intersect {
        #[arg(long)]
        n: usize,
        #[arg(long, required_unless_present = "sweep")]
        a: Option<i64>,
        #[arg(long, required_unless_present = "sweep")]
        b: Option<i64>,
        #[arg(long, value_enum, default_value_t = Emit::Certificate)]
        emit: Emit,
        /// Run the construction for every admissible point of the grid.
        #[arg(long, conflicts_with_all = ["a", "b"])]
        sweep: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Emit {
    Origami,
    Certificate,
}

#[derive(Args, Debug)]
struct OrigamiInput {
    /// `W` or `torus:<n>`.
    #[arg(long, conflicts_with_all = ["file", "origami"])]
    builtin: Option<String>,
    /// File in the JSON or text format.
    #[arg(long, conflicts_with = "origami")]
    file: Option<std::path::PathBuf>,
    /// Inline origami, e.g. "h=(1,2); v=(1,3)".
    #[arg(long)]
    origami: Option<String>,
}

impl OrigamiInput {
    fn load(&self) -> Result<Origami, Error> {
        if let Some(name) = &self.builtin {
            return Ok(builtin(name)?);
        }
        if let Some(path) = &self.file {
            return Ok(parse_origami(&std::fs::read_to_string(path)?)?);
        }
        if let Some(text) = &self.origami {
            return Ok(parse_origami(text)?);
        }
        Ok(quaternion_origami())
    }
}

struct Outcome {
    value: Value,
    pass: bool,
}

fn ok<T: Serialize>(t: &T) -> Result<Outcome, Error> {
    Ok(Outcome {
        value: serde_json::to_value(t)?,
        pass: true,
    })
}

fn judged<T: Serialize>(t: &T, pass: bool) -> Result<Outcome, Error> {
    Ok(Outcome {
        value: serde_json::to_value(t)?,
        pass,
    })
}

#[derive(Serialize)]
struct InfoOut {
    name: Option<String>,
    n: usize,
    genus: usize,
    vertices: usize,
    stratum: Vec<usize>,
    cone_orders: Vec<usize>,
    horizontal_cylinders: Vec<Cylinder>,
    vertical_cylinders: Vec<Cylinder>,
    origami: OrigamiJson,
}

fn info(o: &Origami) -> InfoOut {
    let profile = o.singularity_profile();
    InfoOut {
        name: o.name().map(str::to_owned),
        n: o.n_squares(),
        genus: o.genus(),
        vertices: profile.vertex_count,
        stratum: profile.stratum(),
        cone_orders: profile.cone_orders,
        horizontal_cylinders: o.horizontal_cylinders().cylinders,
        vertical_cylinders: o.vertical_cylinders().cylinders,
        origami: OrigamiJson::from(o),
    }
}

#[derive(Serialize)]
struct VeechOut {
    index: usize,
    cusps: usize,
    cusp_widths: Vec<usize>,
    generators: Vec<WordEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    orbit: Option<Vec<OrigamiJson>>,
}

#[derive(Serialize)]
struct AutoOut {
    derivative: String,
    pi: Vec<usize>,
    order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<&'static str>,
    fixed: FixedPointReport,
}

#[derive(Serialize)]
struct AutosOut {
    counts: BTreeMap<String, usize>,
    /// Element orders of the group of autos with derivative ±I.
    plus_minus_histogram: Option<BTreeMap<usize, usize>>,
    autos: Vec<AutoOut>,
}

fn autos_report(o: &Origami, only: Option<Derivative>) -> Result<AutosOut, Error> {
    let w = quaternion_origami();
    // names only make sense in W's own labelling
    let is_w = o.h() == w.h() && o.v() == w.v();
    let mut counts = BTreeMap::new();
    let mut list = Vec::new();
    for d in [Derivative::I, Derivative::MinusI, Derivative::S, Derivative::SInv] {
        let found = affine_autos(o, d);
        counts.insert(d.to_string(), found.len());
        if only.is_some_and(|x| x != d) {
            continue;
        }
        for a in found {
            list.push(AutoOut {
                derivative: d.to_string(),
                pi: a.pi.images().to_vec(),
                order: a.order(),
                name: if is_w { autos::w::name_of(&a) } else { None },
                fixed: fixed_points(o, &a)?,
            });
        }
    }
    Ok(AutosOut {
        counts,
        plus_minus_histogram: order_histogram(&plus_minus_autos(o)).ok(),
        autos: list,
    })
}

#[derive(Serialize)]
struct Item {
    name: &'static str,
    pass: bool,
    detail: String,
}

#[derive(Serialize)]
struct SuiteOut {
    pass: bool,
    items: Vec<Item>,
    fixed_points: Vec<autos::w::FixedPointRow>,
}

fn wms() -> Result<SuiteOut, Error> {
    let w = quaternion_origami();
    let profile = w.singularity_profile();
    let cyl = w.horizontal_cylinders().cylinders;
    let veech = veech_group(&w);
    let ch = verify_characteristic_w();
    let t = autos::translations(&w);
    let minus = affine_autos(&w, Derivative::MinusI);
    let all = plus_minus_autos(&w);
    let hist = order_histogram(&all)?;
    let pm1 = vec![
        autos::w::translation(QuaternionElement::ONE),
        autos::w::translation(QuaternionElement::MINUS_ONE),
    ];
    let q_pm = autos::quotient_by_translations(&w, &pm1)?;
    let q_all = autos::quotient_by_translations(&w, &t)?;
    let table = autos::w::fixed_point_table();
    let two = torus_grid(2)?;
    let one = torus_grid(1)?;
    let items = vec![
        Item {
            name: "genus",
            pass: w.genus() == 3,
            detail: format!("{}", w.genus()),
        },
        Item {
            name: "stratum",
            pass: profile.vertex_count == 4 && profile.stratum() == [1, 1, 1, 1],
            detail: format!("{} vertices, {:?}", profile.vertex_count, profile.stratum()),
        },
        Item {
            name: "horizontal_cylinders",
            pass: cyl == [Cylinder { circumference: 4, height: 1 }; 2],
            detail: format!("{cyl:?}"),
        },
        Item {
            name: "veech_index",
            pass: veech.index == 1 && veech.cusp_widths.len() == 1,
            detail: format!("index {}, cusps {}", veech.index, veech.cusp_widths.len()),
        },
        Item {
            name: "characteristic",
            pass: ch.epimorphism_count == 24 && ch.all_kernels_equal,
            detail: format!("{} epimorphisms, all covers W: {}", ch.epimorphism_count, ch.all_kernels_equal),
        },
        Item {
            name: "automorphisms",
            pass: t.len() == 8 && minus.len() == 8 && hist == BTreeMap::from([(1, 1), (2, 7), (4, 8)]),
            detail: format!("{} translations, {} with -I, orders {hist:?}", t.len(), minus.len()),
        },
        Item {
            name: "quotients",
            pass: q_pm.genus() == 1 && q_pm.is_isomorphic(&two) && q_all.is_isomorphic(&one),
            detail: format!("W/±1 has {} squares, genus {}; W/Q has {}", q_pm.n_squares(), q_pm.genus(), q_all.n_squares()),
        },
        Item {
            name: "fixed_points",
            pass: table.iter().all(autos::w::row_matches),
            detail: format!("{} named autos", table.len()),
        },
    ];
    Ok(SuiteOut {
        pass: items.iter().all(|i| i.pass),
        items,
        fixed_points: table,
    })
}

#[derive(Serialize)]
struct TorsionEntry {
    x: ComplexJson,
    y: ComplexJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<ComplexJson>,
}

#[derive(Serialize)]
struct TorsionOut {
    n: usize,
    count: usize,
    points: Vec<TorsionEntry>,
}

#[derive(Serialize)]
struct ControlOut {
    lambda: ComplexJson,
    nmax: usize,
    q_sigma_order: Option<usize>,
    message: String,
}

#[derive(Serialize)]
struct TheoremOut {
    n: usize,
    count: usize,
    pass: bool,
    reports: Vec<crate::curves::TheoremReport>,
}

fn parse_lambda(s: &str) -> Result<Complex64, Error> {
    parse_complex(s).map_err(Error::Input)
}

fn dispatch(command: &Command) -> Result<Outcome, Error> {
    match command {
        Command::Info(input) => ok(&info(&input.load()?)),
        Command::Veech { input, orbit } => {
            let o = input.load()?;
            let v = veech_group(&o);
            ok(&VeechOut {
                index: v.index,
                cusps: v.cusp_widths.len(),
                cusp_widths: v.cusp_widths.clone(),
                generators: v.generator_entries(),
                orbit: orbit.then(|| v.orbit.iter().map(OrigamiJson::from).collect()),
            })
        }
        Command::Autos { input, derivative } => ok(&autos_report(&input.load()?, *derivative)?),
        Command::Wms => {
            let s = wms()?;
            let pass = s.pass;
            judged(&s, pass)
        }
        Command::Torsion { n, nmax } => {
            let pts = torsion_points_up_to(*n, *nmax)?;
            let points = pts
                .iter()
                .map(|t| TorsionEntry {
                    x: t.x().into(),
                    y: t.y().into(),
                    lambda: lambda_from_torsion(t).ok().map(|l| l.lambda.into()),
                })
                .collect();
            ok(&TorsionOut {
                n: *n,
                count: pts.len(),
                points,
            })
        }
        Command::Verify { lambda, seed, tol } => {
            let r = verify_identities(parse_lambda(lambda)?, *seed, *tol)?;
            let pass = r.all_pass();
            judged(&r, pass)
        }
        Command::Theorem { n, lambda, nmax, tol } => {
            if let Some(l) = lambda {
                let l = parse_lambda(l)?;
                let order = q_sigma_order(&CurveParams::new(l)?, *nmax, *tol)?;
                let message = match order {
                    Some(k) => format!("Q_sigma has order {k}"),
                    None => format!("no torsion order <= {nmax}"),
                };
                return ok(&ControlOut {
                    lambda: l.into(),
                    nmax: *nmax,
                    q_sigma_order: order,
                    message,
                });
            }
            let n = n.expect("clap requires n without lambda");
            let reports = theorem_for_order(n, *tol)?;
            let pass = reports.iter().all(|r| r.pass);
            judged(
                &TheoremOut {
                    n,
                    count: reports.len(),
                    pass,
                    reports,
                },
                pass,
            )
        }
        Command::Intersect { n, a, b, emit, sweep: all } => {
            if *all {
                let entries = sweep(*n);
                let pass = entries.iter().all(|e| e.ok());
                return judged(&entries, pass);
            }
            let p = GridPoint::reduced(a.expect("clap requires a"), b.expect("clap requires b"), *n);
            match emit {
                Emit::Origami => ok(&OrigamiJson::from(&construct_d(p)?.origami)),
                Emit::Certificate => {
                    let c = pipeline(p)?;
                    let pass = c.pass;
                    judged(&c, pass)
                }
            }
        }
    }
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    let scalar = |v: &Value| match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Object(_) | Value::Array(_) if !is_flat(x) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(x, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", flat(x, &scalar))),
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                if is_flat(x) {
                    out.push_str(&format!("{pad}- {}\n", flat(x, &scalar)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render_text(x, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_object() && !x.is_array()),
        Value::Object(m) => m.keys().all(|k| k == "re" || k == "im"),
        _ => true,
    }
}

fn flat(v: &Value, scalar: &dyn Fn(&Value) -> String) -> String {
    match v {
        Value::Array(a) => format!("[{}]", a.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        Value::Object(m) => {
            let re = m.get("re").and_then(Value::as_f64).unwrap_or(0.0);
            let im = m.get("im").and_then(Value::as_f64).unwrap_or(0.0);
            format!("{re}{im:+}i")
        }
        other => scalar(other),
    }
}

fn configure_threads() {
    if let Some(k) = std::env::var("ORIGAMI_LAB_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&k| k > 0)
    {
        // a second call in the same process finds the pool already built
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
}

/// Runs the command line `args` (program name first), writing to `out` and `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    1
                }
            };
        }
    };
    configure_threads();
    let outcome = match dispatch(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    };
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&outcome.value).expect("values serialize") + "\n",
        Format::Text => {
            let mut s = String::new();
            render_text(&outcome.value, 0, &mut s);
            s
        }
    };
    if out.write_all(text.as_bytes()).is_err() {
        return 1;
    }
    if outcome.pass {
        0
    } else {
        let _ = writeln!(err, "FAIL");
        2
    }
}
