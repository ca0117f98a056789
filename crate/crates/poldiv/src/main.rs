//! Command-line front end. Every subcommand reads JSON, computes with exact
//! rationals and writes a deterministic report to stdout. Exit codes: 0 on
//! success, 1 on malformed input, 2 on validation failure.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use poldiv::arith::{format_int_vec, format_rat_vec, Int};
use poldiv::divisor::{Base, PolyhedralDivisor, ProperReport};
use poldiv::error::Error;
use poldiv::io::{self, LoadError};
use poldiv::orbits::{
    classify_k_star_surface, fiber_components, fiber_orbits, fiber_polyhedron, git_quasifan,
    is_fiber_reduced, FiberPoint,
};
use poldiv::polyhedron::TailedPolyhedron;
use poldiv::sections::hilbert_table;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Parser)]
#[command(
    name = "poldiv",
    version,
    about = "exact calculus of polyhedral divisors for torus actions",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format; csv falls back to text for non-tabular reports
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the properness conditions and report every test
    Validate {
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    /// Evaluate the divisor at an integral weight
    Eval {
        #[arg(default_value = "-")]
        input: PathBuf,
        /// Weight vector, comma-separated integers
        #[arg(short = 'u', value_name = "a,b,...")]
        weight: String,
    },
    /// Degree polyhedron of a divisor on the projective line
    Degree {
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    /// Chamber quasifan of GIT weights
    Gitfan {
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    /// Fiber polyhedron over a point of the base curve
    Fiber {
        #[arg(default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        point: String,
    },
    /// Orbit report of the fiber over a point
    Orbits {
        #[arg(default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        point: String,
    },
    /// Irreducible components of the fiber over a point
    Components {
        #[arg(default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        point: String,
    },
    /// Whether the fiber over a point is reduced
    Reduced {
        #[arg(default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        point: String,
    },
    /// Downgrade a toric variety along a saturated subtorus embedding
    Downgrade {
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    /// Restrict a downgraded divisor to a curve via a pullback map
    Restrict {
        #[arg(default_value = "-")]
        input: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Weight-space dimensions over a lattice box
    Hilbert {
        #[arg(default_value = "-")]
        input: PathBuf,
        /// Inclusive bounds per coordinate
        #[arg(long = "box", value_name = "lo:hi,lo:hi,...")]
        bounds: String,
    },
    /// Linear equivalence of two divisors on the projective line
    Equiv { input: PathBuf, other: PathBuf },
    /// Classify the K*-surface of a proper rank-one divisor on a curve
    Classify {
        #[arg(default_value = "-")]
        input: PathBuf,
    },
}

enum Failure {
    Parse(String),
    Validation(String),
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        match e {
            LoadError::Malformed(m) => Failure::Parse(m),
            LoadError::Domain(d) => Failure::Validation(d.to_string()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Validation(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut buf = String::new();
        use std::io::Read;
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Parse(format!("cannot read stdin: {}", e)))?;
        return Ok(buf);
    }
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Parse(format!("cannot read {}: {}", path.display(), e)))
}

fn load_divisor(path: &Path) -> Result<PolyhedralDivisor, Failure> {
    Ok(io::parse_divisor(&read(path)?)?)
}

fn parse_weight(s: &str) -> Result<Vec<Int>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<Int>()
                .map_err(|_| Failure::Parse(format!("bad weight coordinate {:?}", t)))
        })
        .collect()
}

fn parse_box(s: &str) -> Result<Vec<(Int, Int)>, Failure> {
    s.split(',')
        .map(|pair| {
            let (lo, hi) = pair
                .split_once(':')
                .ok_or_else(|| Failure::Parse(format!("bad box range {:?}", pair)))?;
            let lo = lo
                .trim()
                .parse::<Int>()
                .map_err(|_| Failure::Parse(format!("bad box bound {:?}", lo)))?;
            let hi = hi
                .trim()
                .parse::<Int>()
                .map_err(|_| Failure::Parse(format!("bad box bound {:?}", hi)))?;
            Ok((lo, hi))
        })
        .collect()
}

#[derive(Serialize)]
struct DegreeOut {
    degree_polyhedron: io::PolyhedronJson,
}

#[derive(Serialize)]
struct FiberOut {
    point: String,
    fiber_polyhedron: io::PolyhedronJson,
}

#[derive(Serialize)]
struct ComponentsOut {
    point: String,
    components: Vec<io::ComponentJson>,
}

#[derive(Serialize)]
struct ReducedOut {
    point: String,
    reduced: bool,
}

#[derive(Serialize)]
struct HilbertEntry {
    u: Vec<i64>,
    dim: i64,
}

#[derive(Serialize)]
struct HilbertOut {
    #[serde(rename = "box")]
    bounds: Vec<[i64; 2]>,
    entries: Vec<HilbertEntry>,
}

#[derive(Serialize)]
struct EquivOut {
    equivalent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    shifts: Option<BTreeMap<String, Vec<i64>>>,
}

#[derive(Serialize)]
struct ErrorOut {
    error: &'static str,
    reason: String,
}

fn text_polyhedron(p: &TailedPolyhedron) -> String {
    let mut out = String::new();
    let verts: Vec<String> = p.vertices().iter().map(|v| format_rat_vec(v)).collect();
    out.push_str(&format!("vertices: {}\n", verts.join(" ")));
    let rays: Vec<String> = p.tail().rays().iter().map(|r| format_int_vec(r)).collect();
    out.push_str(&format!("tail_rays: {}\n", rays.join(" ")));
    out
}

fn text_validate(report: &ProperReport, degree: Option<&TailedPolyhedron>) -> String {
    let mut out = format!("proper: {}\n", report.proper);
    if let Some(p) = degree {
        let verts: Vec<String> = p.vertices().iter().map(|v| format_rat_vec(v)).collect();
        out.push_str(&format!("degree_vertices: {}\n", verts.join(" ")));
    }
    for c in &report.checks {
        out.push_str(&format!(
            "{}: {} ({})\n",
            c.name,
            if c.passed { "pass" } else { "fail" },
            c.detail
        ));
    }
    out
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    let format = cli.format;
    match cli.cmd {
        Cmd::Validate { input } => {
            let d = load_divisor(&input)?;
            let report = d.is_proper()?;
            let degree = match d.base() {
                Base::P1 => Some(d.polyhedral_degree()?),
                _ => None,
            };
            let code = if report.proper { 0 } else { 2 };
            let out = match format {
                Format::Json => io::emit(&io::validate_to_json(&report, degree.as_ref())?),
                _ => text_validate(&report, degree.as_ref()),
            };
            Ok((out, code))
        }
        Cmd::Eval { input, weight } => {
            let d = load_divisor(&input)?;
            let u = parse_weight(&weight)?;
            let e = d.evaluate_int(&u)?;
            let j = io::eval_to_json(&e);
            let out = match format {
                Format::Json => io::emit(&j),
                Format::Csv => {
                    let mut s = String::from("site,value\n");
                    for (site, value) in &j.divisor {
                        s.push_str(&format!("{},{}\n", site, value));
                    }
                    s
                }
                Format::Text => {
                    let mut s = String::new();
                    for (site, value) in &j.divisor {
                        s.push_str(&format!("{}: {}\n", site, value));
                    }
                    s
                }
            };
            Ok((out, 0))
        }
        Cmd::Degree { input } => {
            let d = load_divisor(&input)?;
            let p = d.polyhedral_degree()?;
            let out = match format {
                Format::Json => io::emit(&DegreeOut {
                    degree_polyhedron: io::polyhedron_to_json(&p)?,
                }),
                _ => text_polyhedron(&p),
            };
            Ok((out, 0))
        }
        Cmd::Gitfan { input } => {
            let d = load_divisor(&input)?;
            let fan = git_quasifan(&d);
            let out = match format {
                Format::Json => io::emit(&io::quasifan_to_json(&fan)?),
                _ => {
                    let mut s = String::new();
                    for cone in fan.max_cones() {
                        let rays: Vec<String> =
                            cone.rays().iter().map(|r| format_int_vec(r)).collect();
                        let mut line = format!("cone: {}", rays.join(" "));
                        if !cone.lineality().is_empty() {
                            let lines: Vec<String> = cone
                                .lineality()
                                .iter()
                                .map(|r| format_int_vec(r))
                                .collect();
                            line.push_str(&format!(" lineality {}", lines.join(" ")));
                        }
                        line.push('\n');
                        s.push_str(&line);
                    }
                    s
                }
            };
            Ok((out, 0))
        }
        Cmd::Fiber { input, point } => {
            let d = load_divisor(&input)?;
            let p = fiber_polyhedron(&d, &FiberPoint::Point(point.clone()))?;
            let out = match format {
                Format::Json => io::emit(&FiberOut {
                    point,
                    fiber_polyhedron: io::polyhedron_to_json(&p)?,
                }),
                _ => text_polyhedron(&p),
            };
            Ok((out, 0))
        }
        Cmd::Orbits { input, point } => {
            let d = load_divisor(&input)?;
            let report = fiber_orbits(&d, &point)?;
            let out = match format {
                Format::Json => io::emit(&io::fiber_report_to_json(&report)?),
                _ => {
                    let mut s = format!("point: {}\nreduced: {}\n", report.point, report.reduced);
                    for o in &report.orbits {
                        let rays: Vec<String> =
                            o.orbit_cone.rays().iter().map(|r| format_int_vec(r)).collect();
                        let inv: Vec<String> =
                            o.isotropy_invariants.iter().map(|x| x.to_string()).collect();
                        s.push_str(&format!(
                            "orbit: dimension {} cone {} isotropy [{}]\n",
                            o.dimension,
                            rays.join(" "),
                            inv.join(", ")
                        ));
                    }
                    s
                }
            };
            Ok((out, 0))
        }
        Cmd::Components { input, point } => {
            let d = load_divisor(&input)?;
            let comps = fiber_components(&d, &point)?;
            let out = match format {
                Format::Json => io::emit(&ComponentsOut {
                    point,
                    components: io::components_to_json(&comps)?,
                }),
                _ => {
                    let mut s = String::new();
                    for c in &comps {
                        let rays: Vec<String> =
                            c.cone_rays.iter().map(|r| format_int_vec(r)).collect();
                        s.push_str(&format!(
                            "component: vertex {} cone {}\n",
                            format_rat_vec(&c.vertex),
                            rays.join(" ")
                        ));
                    }
                    s
                }
            };
            Ok((out, 0))
        }
        Cmd::Reduced { input, point } => {
            let d = load_divisor(&input)?;
            let reduced = is_fiber_reduced(&d, &point)?;
            let out = match format {
                Format::Json => io::emit(&ReducedOut { point, reduced }),
                _ => format!("reduced: {}\n", reduced),
            };
            Ok((out, 0))
        }
        Cmd::Downgrade { input } => {
            let di = io::parse_downgrade_input(&read(&input)?)?;
            let result = poldiv::downgrade::downgrade(&di)?;
            let j = io::downgrade_result_to_json(&result)?;
            let out = match format {
                Format::Json => io::emit(&j),
                _ => {
                    let mut s = String::new();
                    let rays: Vec<String> =
                        result.sigma.rays().iter().map(|r| format_int_vec(r)).collect();
                    s.push_str(&format!("sigma_rays: {}\n", rays.join(" ")));
                    for (site, poly) in result.divisor.coefficients() {
                        let verts: Vec<String> =
                            poly.vertices().iter().map(|v| format_rat_vec(v)).collect();
                        s.push_str(&format!("{}: {}\n", io::site_key(site), verts.join(" ")));
                    }
                    s
                }
            };
            Ok((out, 0))
        }
        Cmd::Restrict { input, map } => {
            let divisor = io::parse_restrict_input(&read(&input)?)?;
            let rmap = io::parse_restrict_map(&read(&map)?)?;
            let restricted =
                poldiv::downgrade::restrict_to_curve(&divisor, &rmap.pullbacks, &rmap.target)?;
            let j = io::divisor_to_json(&restricted)?;
            let out = match format {
                Format::Json => io::emit(&j),
                _ => {
                    let mut s = String::new();
                    for (site, poly) in restricted.coefficients() {
                        let verts: Vec<String> =
                            poly.vertices().iter().map(|v| format_rat_vec(v)).collect();
                        s.push_str(&format!("{}: {}\n", io::site_key(site), verts.join(" ")));
                    }
                    s
                }
            };
            Ok((out, 0))
        }
        Cmd::Hilbert { input, bounds } => {
            let d = load_divisor(&input)?;
            let b = parse_box(&bounds)?;
            let table = hilbert_table(&d, &b)?;
            let out = match format {
                Format::Json => {
                    let bounds_j: Vec<[i64; 2]> = b
                        .iter()
                        .map(|(lo, hi)| Ok([io::int_to_i64(lo)?, io::int_to_i64(hi)?]))
                        .collect::<Result<_, Error>>()?;
                    let entries = table
                        .iter()
                        .map(|(u, dim)| {
                            Ok(HilbertEntry {
                                u: u.iter().map(io::int_to_i64).collect::<Result<_, Error>>()?,
                                dim: io::int_to_i64(dim)?,
                            })
                        })
                        .collect::<Result<_, Error>>()?;
                    io::emit(&HilbertOut {
                        bounds: bounds_j,
                        entries,
                    })
                }
                _ => {
                    let mut s = String::new();
                    for (u, dim) in &table {
                        let coords: Vec<String> = u.iter().map(|x| x.to_string()).collect();
                        s.push_str(&format!("{},{}\n", coords.join(","), dim));
                    }
                    s
                }
            };
            Ok((out, 0))
        }
        Cmd::Equiv { input, other } => {
            let a = load_divisor(&input)?;
            let b = load_divisor(&other)?;
            let witness = a.linear_equivalent_p1(&b)?;
            let j = match &witness {
                Some(f) => EquivOut {
                    equivalent: true,
                    shifts: Some(
                        f.shifts()
                            .iter()
                            .map(|(label, v)| {
                                Ok((
                                    label.clone(),
                                    v.iter().map(io::int_to_i64).collect::<Result<_, Error>>()?,
                                ))
                            })
                            .collect::<Result<_, Error>>()?,
                    ),
                },
                None => EquivOut {
                    equivalent: false,
                    shifts: None,
                },
            };
            let out = match format {
                Format::Json => io::emit(&j),
                _ => {
                    let mut s = format!("equivalent: {}\n", j.equivalent);
                    if let Some(f) = &witness {
                        for (label, v) in f.shifts() {
                            s.push_str(&format!("shift {}: {}\n", label, format_int_vec(v)));
                        }
                    }
                    s
                }
            };
            Ok((out, 0))
        }
        Cmd::Classify { input } => {
            let d = load_divisor(&input)?;
            let class = classify_k_star_surface(&d)?;
            let out = match format {
                Format::Json => io::emit(&io::classify_to_json(class)),
                _ => format!("class: {}\n", class.as_str()),
            };
            Ok((out, 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((out, code)) => {
            print!("{}", out);
            ExitCode::from(code)
        }
        Err(Failure::Parse(reason)) => {
            print!(
                "{}",
                io::emit(&ErrorOut {
                    error: "parse",
                    reason,
                })
            );
            ExitCode::from(1)
        }
        Err(Failure::Validation(reason)) => {
            print!(
                "{}",
                io::emit(&ErrorOut {
                    error: "validation",
                    reason,
                })
            );
            ExitCode::from(2)
        }
    }
}
