//! Command-line interface over JSON files: frieze construction,
//! propagation, verification, rendering, Laurent expansion and polygon
//! recovery. Exit code 0 on success, 1 with a structured error JSON on
//! domain errors, 2 on usage errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use frieze::frieze::{
    cmfrieze_from_measurements, cmfrieze_from_polygon, extend, frieze_from_polygon, propagate_cm,
    propagate_heronian, restrict, verify_cm, verify_coherence, verify_heronian, CMFrieze, CMPath,
    HTraversingPath, HeronianFrieze, PathJson, Window,
};
use frieze::geometry::{polygon_from_measurements, polygon_from_measurements_f64};
use frieze::laurent::{expand, LaurentPoly, MeasSym};
use frieze::render::{render_cm, render_heronian};
use frieze::{Error, MeasurementSet, Polygon, Pos, Rat, TriCycle};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "frieze", version, about = "Exact friezes of polygon measurements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for the primary payload.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct WindowArg {
    /// Column window, two integers LO HI (inclusive).
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
    window: Vec<i64>,
}

impl WindowArg {
    fn get(&self, n: u32) -> Result<Window, Error> {
        if self.window.is_empty() {
            return Ok(Window::default_for(n));
        }
        Window::new(self.window[0], self.window[1])
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build the Heronian frieze of a polygon.
    #[command(name = "frieze-from-polygon")]
    FriezeFromPolygon {
        #[arg(long)]
        polygon: PathBuf,
        #[command(flatten)]
        window: WindowArg,
    },
    /// Propagate a Heronian frieze from traversing-path data.
    #[command(name = "frieze-propagate")]
    FriezePropagate {
        #[arg(long)]
        order: u32,
        #[arg(long)]
        path: PathBuf,
        #[command(flatten)]
        window: WindowArg,
    },
    /// Report every violated diamond, boundary or line identity.
    #[command(name = "frieze-verify")]
    FriezeVerify {
        #[arg(long)]
        frieze: Option<PathBuf>,
    },
    /// Check glide symmetry and periodicity of a frieze window.
    #[command(name = "frieze-glide-check")]
    FriezeGlideCheck {
        #[arg(long)]
        frieze: Option<PathBuf>,
    },
    /// Render a frieze window as an ASCII grid.
    #[command(name = "frieze-render")]
    FriezeRender {
        #[arg(long)]
        frieze: Option<PathBuf>,
    },
    /// Build the Cayley-Menger frieze of a polygon or of a full
    /// squared-distance measurement set.
    #[command(name = "cm-from-polygon")]
    CmFromPolygon {
        #[arg(long)]
        polygon: Option<PathBuf>,
        #[arg(long)]
        measurements: Option<PathBuf>,
        #[command(flatten)]
        window: WindowArg,
    },
    /// Propagate a coherent Cayley-Menger frieze from thickened-path data.
    #[command(name = "cm-propagate")]
    CmPropagate {
        #[arg(long)]
        order: u32,
        #[arg(long)]
        path: PathBuf,
        #[command(flatten)]
        window: WindowArg,
    },
    /// Report the positions where the coherence condition fails.
    #[command(name = "cm-verify-coherence")]
    CmVerifyCoherence {
        #[arg(long)]
        frieze: Option<PathBuf>,
    },
    /// Lift a coherent Cayley-Menger frieze to a Heronian frieze.
    #[command(name = "cm-extend")]
    CmExtend {
        #[arg(long)]
        frieze: Option<PathBuf>,
        /// JSON file {"values": [...]} fixing signed square roots.
        #[arg(long)]
        seed: Option<PathBuf>,
    },
    /// Drop the signed-area entries of a Heronian frieze.
    #[command(name = "cm-restrict")]
    CmRestrict {
        #[arg(long)]
        frieze: Option<PathBuf>,
    },
    /// Laurent expansion of a measurement over a triangulation.
    #[command(name = "laurent-expand")]
    LaurentExpand {
        #[arg(long)]
        triangulation: PathBuf,
        /// Target measurement, `x:i-j` or `s:i-j-k`.
        #[arg(long)]
        target: String,
    },
    /// Evaluate a Laurent expansion on a measurement set.
    #[command(name = "laurent-eval")]
    LaurentEval {
        #[arg(long)]
        laurent: Option<PathBuf>,
        #[arg(long)]
        measurements: PathBuf,
    },
    /// Rebuild a polygon from triangulated measurements.
    #[command(name = "polygon-recover")]
    PolygonRecover {
        #[arg(long)]
        triangulation: PathBuf,
        #[arg(long)]
        measurements: PathBuf,
        /// Float reconstruction (non-exact, self-checked to 1e-9).
        #[arg(long)]
        float: bool,
    },
}

#[derive(Serialize)]
struct ErrorJson {
    error: &'static str,
    message: String,
    position: Option<String>,
}

#[derive(Deserialize)]
struct SeedJson {
    values: Vec<Rat>,
}

fn read_input<T: DeserializeOwned>(path: &Option<PathBuf>) -> Result<T, Error> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Error::MalformedInput(format!("{}: {e}", p.display())))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::MalformedInput(format!("stdin: {e}")))?;
            buf
        }
    };
    serde_json::from_str(&text).map_err(|e| {
        let msg = e.to_string();
        let msg = msg.strip_prefix("malformed input: ").unwrap_or(&msg);
        Error::MalformedInput(msg.to_string())
    })
}

fn read_file<T: DeserializeOwned>(path: &PathBuf) -> Result<T, Error> {
    read_input(&Some(path.clone()))
}

fn emit<T: Serialize>(format: Format, value: &T) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(value).expect("serializable")),
        Format::Text => {
            println!("{}", serde_json::to_string_pretty(value).expect("serializable"))
        }
    }
}

#[derive(Serialize)]
struct ViolationJson {
    kind: String,
    node: String,
}

#[derive(Serialize)]
struct ReportJson {
    violations: Vec<ViolationJson>,
}

#[derive(Serialize)]
struct CenterJson {
    i: i64,
    j: i64,
}

#[derive(Serialize)]
struct CoherenceReportJson {
    violations: Vec<CenterJson>,
}

#[derive(Serialize)]
struct GlideJson {
    glide: bool,
    period: bool,
}

/// A frieze of either kind, sniffed from the `kind` field.
enum AnyFrieze {
    Heronian(Box<HeronianFrieze>),
    Cm(Box<CMFrieze>),
}

fn read_any_frieze(path: &Option<PathBuf>) -> Result<AnyFrieze, Error> {
    let value: serde_json::Value = read_input(path)?;
    let kind = value
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| Error::MalformedInput("frieze JSON needs a \"kind\" field".into()))?;
    match kind {
        "heronian" => Ok(AnyFrieze::Heronian(Box::new(
            serde_json::from_value(value).map_err(|e| Error::MalformedInput(e.to_string()))?,
        ))),
        "cm" => Ok(AnyFrieze::Cm(Box::new(
            serde_json::from_value(value).map_err(|e| Error::MalformedInput(e.to_string()))?,
        ))),
        other => Err(Error::MalformedInput(format!("unknown frieze kind {other:?}"))),
    }
}

fn run(cli: &Cli) -> Result<(), Error> {
    let format = cli.format;
    match &cli.command {
        Command::FriezeFromPolygon { polygon, window } => {
            let p: Polygon = read_file(polygon)?;
            let z = frieze_from_polygon(&p, window.get(p.n())?)?;
            emit(format, &z);
        }
        Command::FriezePropagate { order, path, window } => {
            let raw: PathJson = read_file(path)?;
            let (path, values) = HTraversingPath::from_json(*order, &raw)?;
            let z = propagate_heronian(&path, &values, window.get(*order)?)?;
            emit(format, &z);
        }
        Command::FriezeVerify { frieze } => {
            let violations = match read_any_frieze(frieze)? {
                AnyFrieze::Heronian(z) => verify_heronian(&z)
                    .into_iter()
                    .map(|v| ViolationJson {
                        kind: format!("{:?}", v.kind),
                        node: v.node.to_string(),
                    })
                    .collect(),
                AnyFrieze::Cm(z) => verify_cm(&z)
                    .into_iter()
                    .map(|v| ViolationJson {
                        kind: format!("{:?}", v.kind),
                        node: v.node.to_string(),
                    })
                    .collect(),
            };
            emit(format, &ReportJson { violations });
        }
        Command::FriezeGlideCheck { frieze } => {
            let (glide, period) = match read_any_frieze(frieze)? {
                AnyFrieze::Heronian(z) => (z.check_glide()?, z.check_period()?),
                AnyFrieze::Cm(z) => (z.check_glide()?, z.check_period()?),
            };
            emit(format, &GlideJson { glide, period });
        }
        Command::FriezeRender { frieze } => {
            let text = match read_any_frieze(frieze)? {
                AnyFrieze::Heronian(z) => render_heronian(&z),
                AnyFrieze::Cm(z) => render_cm(&z),
            };
            print!("{text}");
        }
        Command::CmFromPolygon { polygon, measurements, window } => {
            let z = match (polygon, measurements) {
                (Some(p), None) => {
                    let p: Polygon = read_file(p)?;
                    cmfrieze_from_polygon(&p, window.get(p.n())?)?
                }
                (None, Some(m)) => {
                    let m: MeasurementSet = read_file(m)?;
                    cmfrieze_from_measurements(&m, window.get(m.n())?)?
                }
                _ => {
                    return Err(Error::MalformedInput(
                        "pass exactly one of --polygon or --measurements".into(),
                    ))
                }
            };
            emit(format, &z);
        }
        Command::CmPropagate { order, path, window } => {
            let raw: PathJson = read_file(path)?;
            let (path, values) = CMPath::from_json(*order, &raw)?;
            let z = propagate_cm(&path, &values, window.get(*order)?)?;
            emit(format, &z);
        }
        Command::CmVerifyCoherence { frieze } => {
            let z: CMFrieze = match read_any_frieze(frieze)? {
                AnyFrieze::Cm(z) => *z,
                AnyFrieze::Heronian(_) => {
                    return Err(Error::MalformedInput(
                        "coherence applies to Cayley-Menger friezes".into(),
                    ))
                }
            };
            let violations = verify_coherence(&z)
                .into_iter()
                .map(|(i, j)| CenterJson { i, j })
                .collect();
            emit(format, &CoherenceReportJson { violations });
        }
        Command::CmExtend { frieze, seed } => {
            let z: CMFrieze = match read_any_frieze(frieze)? {
                AnyFrieze::Cm(z) => *z,
                AnyFrieze::Heronian(_) => {
                    return Err(Error::MalformedInput("cm-extend expects a cm frieze".into()))
                }
            };
            let seed_values = match seed {
                Some(p) => Some(read_file::<SeedJson>(p)?.values),
                None => None,
            };
            let lifted = extend(&z, seed_values.as_deref())?;
            emit(format, &lifted);
        }
        Command::CmRestrict { frieze } => {
            let z: HeronianFrieze = match read_any_frieze(frieze)? {
                AnyFrieze::Heronian(z) => *z,
                AnyFrieze::Cm(_) => {
                    return Err(Error::MalformedInput(
                        "cm-restrict expects a heronian frieze".into(),
                    ))
                }
            };
            emit(format, &restrict(&z)?);
        }
        Command::LaurentExpand { triangulation, target } => {
            let g: TriCycle = read_file(triangulation)?;
            let sym: MeasSym = target.parse()?;
            emit(format, &expand(&g, sym)?);
        }
        Command::LaurentEval { laurent, measurements } => {
            let p: LaurentPoly = read_input(laurent)?;
            let m: MeasurementSet = read_file(measurements)?;
            let value = p.evaluate(&m)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string(&value).unwrap()),
                Format::Text => println!("{value}"),
            }
        }
        Command::PolygonRecover { triangulation, measurements, float } => {
            let g: TriCycle = read_file(triangulation)?;
            let m: MeasurementSet = read_file(measurements)?;
            if *float {
                let coords = polygon_from_measurements_f64(&g, &m)?;
                #[derive(Serialize)]
                struct FloatPolygon {
                    vertices: Vec<(f64, f64)>,
                }
                emit(format, &FloatPolygon { vertices: coords });
            } else {
                emit(format, &polygon_from_measurements(&g, &m)?);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let payload = ErrorJson {
                error: err.kind(),
                message: err.to_string(),
                position: err.position().map(|p| match p {
                    Pos::Node(n) => n.to_string(),
                    Pos::Path(k) => format!("path:{k}"),
                }),
            };
            println!("{}", serde_json::to_string(&payload).expect("serializable"));
            ExitCode::FAILURE
        }
    }
}
