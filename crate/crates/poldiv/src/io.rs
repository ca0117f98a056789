//! JSON input and output. Parsing is liberal about coefficient order and
//! unreduced fractions; emission is canonical, so equal objects always
//! serialize to identical bytes. Rationals travel as "p/q" strings, lattice
//! vectors as plain integer arrays.

use std::collections::BTreeMap;

use num::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::arith::{format_rat, parse_rat, Int, Rat};
use crate::cone::Cone;
use crate::divisor::{Base, DivisorSite, PolyhedralDivisor, ProperReport, RationalDivisor};
use crate::downgrade::{DowngradeInput, DowngradeResult};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::orbits::{FiberComponent, FiberReport, SurfaceClass};
use crate::polyhedron::TailedPolyhedron;
use crate::quasifan::QuasiFan;

/// Errors from loading JSON inputs, split by exit-code class: malformed
/// text or numbers versus semantically invalid data.
#[derive(Debug)]
pub enum LoadError {
    Malformed(String),
    Domain(Error),
}

impl std::fmt::Display for LoadError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LoadError::Malformed(m) => write!(f, "{}", m),
            LoadError::Domain(e) => write!(f, "{}", e),
        }
    }
}

impl From<Error> for LoadError {
    fn from(e: Error) -> Self {
        LoadError::Domain(e)
    }
}

pub type LoadResult<T> = std::result::Result<T, LoadError>;

fn malformed<T>(msg: impl Into<String>) -> LoadResult<T> {
    Err(LoadError::Malformed(msg.into()))
}

pub fn int_to_i64(x: &Int) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::Invalid("integer exceeds the JSON output range".into()))
}

fn ivec(v: &[Int]) -> Result<Vec<i64>> {
    v.iter().map(int_to_i64).collect()
}

fn ivecs(vs: &[Vec<Int>]) -> Result<Vec<Vec<i64>>> {
    vs.iter().map(|v| ivec(v)).collect()
}

fn int_vec_of(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

fn int_vecs_of(vs: &[Vec<i64>]) -> Vec<Vec<Int>> {
    vs.iter().map(|v| int_vec_of(v)).collect()
}

fn rat_strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(format_rat).collect()
}

fn parse_rat_vec(strings: &[String]) -> LoadResult<Vec<Rat>> {
    strings
        .iter()
        .map(|s| parse_rat(s).map_err(LoadError::Malformed))
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyhedronJson {
    pub vertices: Vec<Vec<String>>,
    pub tail_rays: Vec<Vec<i64>>,
}

pub fn polyhedron_to_json(p: &TailedPolyhedron) -> Result<PolyhedronJson> {
    Ok(PolyhedronJson {
        vertices: p.vertices().iter().map(|v| rat_strings(v)).collect(),
        tail_rays: ivecs(p.tail().rays())?,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConeJson {
    pub rays: Vec<Vec<i64>>,
    pub lineality: Vec<Vec<i64>>,
}

pub fn cone_to_json(c: &Cone) -> Result<ConeJson> {
    Ok(ConeJson {
        rays: ivecs(c.rays())?,
        lineality: ivecs(c.lineality())?,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuasiFanJson {
    pub ambient_rank: usize,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<ConeJson>,
}

pub fn quasifan_to_json(f: &QuasiFan) -> Result<QuasiFanJson> {
    Ok(QuasiFanJson {
        ambient_rank: f.ambient_rank(),
        rays: ivecs(&f.rays())?,
        max_cones: f
            .max_cones()
            .iter()
            .map(cone_to_json)
            .collect::<Result<_>>()?,
    })
}

/// Site reference in the input: a curve point label, a ray index into the
/// base fan's ray list, or a ray written out as a lattice vector.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AtJson {
    Index(u64),
    Label(String),
    Ray(Vec<i64>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoefficientJson {
    pub at: AtJson,
    pub vertices: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BaseJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fan_rays: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fan_max_cones: Option<Vec<Vec<usize>>>,
    /// Lineality generators per maximal cone, for quotient fans whose cells
    /// contain lines. Omitted when every cell is pointed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fan_lineality: Option<Vec<Vec<Vec<i64>>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DivisorJson {
    pub lattice_rank: usize,
    pub tail_rays: Vec<Vec<i64>>,
    pub base: BaseJson,
    pub coefficients: Vec<CoefficientJson>,
}

fn base_to_json(base: &Base) -> Result<BaseJson> {
    Ok(match base {
        Base::P1 => BaseJson {
            kind: "P1".into(),
            fan_rays: None,
            fan_max_cones: None,
            fan_lineality: None,
        },
        Base::AffineCurve => BaseJson {
            kind: "affine_curve".into(),
            fan_rays: None,
            fan_max_cones: None,
            fan_lineality: None,
        },
        Base::Toric(fan) => {
            let rays = fan.rays();
            let mut max_cones = Vec::new();
            let mut lineality = Vec::new();
            let mut any_lines = false;
            for cone in fan.max_cones() {
                let idx: Vec<usize> = cone
                    .rays()
                    .iter()
                    .map(|r| {
                        rays.iter()
                            .position(|s| s == r)
                            .expect("cone ray is a fan ray")
                    })
                    .collect();
                max_cones.push(idx);
                if !cone.lineality().is_empty() {
                    any_lines = true;
                }
                lineality.push(ivecs(cone.lineality())?);
            }
            BaseJson {
                kind: "toric".into(),
                fan_rays: Some(ivecs(&rays)?),
                fan_max_cones: Some(max_cones),
                fan_lineality: if any_lines { Some(lineality) } else { None },
            }
        }
    })
}

fn base_from_json(j: &BaseJson) -> LoadResult<Base> {
    match j.kind.as_str() {
        "P1" => Ok(Base::P1),
        "affine_curve" => Ok(Base::AffineCurve),
        "toric" => {
            let rays = match &j.fan_rays {
                Some(r) => int_vecs_of(r),
                None => return malformed("toric base needs fan_rays"),
            };
            let cones_idx = match &j.fan_max_cones {
                Some(c) => c.clone(),
                None => return malformed("toric base needs fan_max_cones"),
            };
            let ambient = rays.first().map_or(0, |r| r.len());
            let mut cones = Vec::new();
            for (c, idx) in cones_idx.iter().enumerate() {
                let mut gens = Vec::new();
                for &i in idx {
                    match rays.get(i) {
                        Some(r) => gens.push(r.clone()),
                        None => return malformed(format!("fan cone uses unknown ray {}", i)),
                    }
                }
                let lines = j
                    .fan_lineality
                    .as_ref()
                    .and_then(|l| l.get(c))
                    .map(|l| int_vecs_of(l))
                    .unwrap_or_default();
                cones.push(Cone::from_generators(ambient, &gens, &lines));
            }
            let fan = QuasiFan::from_cones(ambient, cones);
            Ok(Base::Toric(fan))
        }
        other => malformed(format!("unknown base kind {:?}", other)),
    }
}

fn site_from_at(at: &AtJson, base: &Base) -> LoadResult<DivisorSite> {
    match at {
        AtJson::Label(l) => Ok(DivisorSite::Point(l.clone())),
        AtJson::Index(i) => {
            let i = *i as usize;
            match base {
                Base::Toric(fan) => {
                    if i < fan.rays().len() {
                        Ok(DivisorSite::Ray(i))
                    } else {
                        Err(Error::UnknownRay(i.to_string()).into())
                    }
                }
                _ => Ok(DivisorSite::Ray(i)),
            }
        }
        AtJson::Ray(v) => match base {
            Base::Toric(fan) => {
                let target = int_vec_of(v);
                match fan.rays().iter().position(|r| r == &target) {
                    Some(i) => Ok(DivisorSite::Ray(i)),
                    None => Err(Error::UnknownRay(format!("{:?}", v)).into()),
                }
            }
            _ => Err(Error::UnknownRay(format!("{:?}", v)).into()),
        },
    }
}

/// For toric bases, indices in the input refer to the input's fan_rays
/// list; they are remapped onto the canonical sorted ray order here.
fn remap_input_ray_index(
    at: &AtJson,
    input_rays: Option<&Vec<Vec<i64>>>,
    base: &Base,
) -> LoadResult<AtJson> {
    if let (AtJson::Index(i), Some(rays), Base::Toric(_)) = (at, input_rays, base) {
        match rays.get(*i as usize) {
            Some(v) => Ok(AtJson::Ray(v.clone())),
            None => Err(Error::UnknownRay(i.to_string()).into()),
        }
    } else {
        Ok(at.clone())
    }
}

pub fn divisor_from_json(j: &DivisorJson) -> LoadResult<PolyhedralDivisor> {
    let base = base_from_json(&j.base)?;
    let tail = Cone::from_rays(j.lattice_rank, &int_vecs_of(&j.tail_rays));
    let mut entries = Vec::new();
    for coeff in &j.coefficients {
        let at = remap_input_ray_index(&coeff.at, j.base.fan_rays.as_ref(), &base)?;
        let site = site_from_at(&at, &base)?;
        let vertices: Vec<Vec<Rat>> = coeff
            .vertices
            .iter()
            .map(|v| parse_rat_vec(v))
            .collect::<LoadResult<_>>()?;
        let poly = TailedPolyhedron::new(&vertices, tail.clone()).map_err(LoadError::Domain)?;
        entries.push((site, poly));
    }
    PolyhedralDivisor::new(base, tail, entries).map_err(LoadError::Domain)
}

pub fn divisor_to_json(d: &PolyhedralDivisor) -> Result<DivisorJson> {
    let mut coefficients = Vec::new();
    for (site, poly) in d.coefficients() {
        let at = match site {
            DivisorSite::Point(l) => AtJson::Label(l.clone()),
            DivisorSite::Ray(i) => AtJson::Index(*i as u64),
        };
        coefficients.push(CoefficientJson {
            at,
            vertices: poly.vertices().iter().map(|v| rat_strings(v)).collect(),
        });
    }
    Ok(DivisorJson {
        lattice_rank: d.lattice_rank(),
        tail_rays: ivecs(d.tail().rays())?,
        base: base_to_json(d.base())?,
        coefficients,
    })
}

pub fn parse_divisor(text: &str) -> LoadResult<PolyhedralDivisor> {
    let j: DivisorJson =
        serde_json::from_str(text).map_err(|e| LoadError::Malformed(e.to_string()))?;
    divisor_from_json(&j)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DowngradeInputJson {
    pub delta_rays: Vec<Vec<i64>>,
    #[serde(rename = "F")]
    pub f: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<Vec<i64>>>,
    #[serde(default, rename = "P", skip_serializing_if = "Option::is_none")]
    pub p: Option<Vec<Vec<i64>>>,
}

pub fn downgrade_input_from_json(j: &DowngradeInputJson) -> LoadResult<DowngradeInput> {
    if j.f.is_empty() {
        return malformed("embedding F needs at least one row");
    }
    let ambient = j.f.len();
    let delta = Cone::from_rays(ambient, &int_vecs_of(&j.delta_rays));
    Ok(DowngradeInput {
        delta,
        f: IntMatrix::from_rows(int_vecs_of(&j.f)),
        s: j.s.as_ref().map(|m| IntMatrix::from_rows(int_vecs_of(m))),
        p: j.p.as_ref().map(|m| IntMatrix::from_rows(int_vecs_of(m))),
    })
}

pub fn parse_downgrade_input(text: &str) -> LoadResult<DowngradeInput> {
    let j: DowngradeInputJson =
        serde_json::from_str(text).map_err(|e| LoadError::Malformed(e.to_string()))?;
    downgrade_input_from_json(&j)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DowngradeResultJson {
    pub divisor: DivisorJson,
    pub s_used: Vec<Vec<i64>>,
}

pub fn downgrade_result_to_json(r: &DowngradeResult) -> Result<DowngradeResultJson> {
    Ok(DowngradeResultJson {
        divisor: divisor_to_json(&r.divisor)?,
        s_used: ivecs(&r.s_used.row_vecs())?,
    })
}

/// Restrict input: either a downgrade result or a bare toric divisor.
pub fn parse_restrict_input(text: &str) -> LoadResult<PolyhedralDivisor> {
    if let Ok(j) = serde_json::from_str::<DowngradeResultJson>(text) {
        return divisor_from_json(&j.divisor);
    }
    parse_divisor(text)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PullbackJson {
    pub ray: u64,
    pub point: String,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RestrictMapJson {
    pub target: BaseJson,
    /// Optional whitelist of target points; pullbacks naming other points
    /// are rejected.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<String>>,
    pub pullbacks: Vec<PullbackJson>,
}

pub struct RestrictMap {
    pub target: Base,
    pub pullbacks: BTreeMap<usize, Vec<(String, u64)>>,
}

pub fn restrict_map_from_json(j: &RestrictMapJson) -> LoadResult<RestrictMap> {
    let target = base_from_json(&j.target)?;
    let mut pullbacks: BTreeMap<usize, Vec<(String, u64)>> = BTreeMap::new();
    for pb in &j.pullbacks {
        if let Some(points) = &j.points {
            if !points.contains(&pb.point) {
                return Err(Error::UnknownPoint(pb.point.clone()).into());
            }
        }
        pullbacks
            .entry(pb.ray as usize)
            .or_default()
            .push((pb.point.clone(), pb.multiplicity));
    }
    Ok(RestrictMap { target, pullbacks })
}

pub fn parse_restrict_map(text: &str) -> LoadResult<RestrictMap> {
    let j: RestrictMapJson =
        serde_json::from_str(text).map_err(|e| LoadError::Malformed(e.to_string()))?;
    restrict_map_from_json(&j)
}

/// Stable text key for a site: the point label, or ray_<index>.
pub fn site_key(site: &DivisorSite) -> String {
    site.to_string()
}

#[derive(Debug, Clone, Serialize)]
pub struct EvalJson {
    pub divisor: BTreeMap<String, String>,
}

pub fn eval_to_json(e: &RationalDivisor) -> EvalJson {
    EvalJson {
        divisor: e
            .coefficients()
            .iter()
            .map(|(site, c)| (site_key(site), format_rat(c)))
            .collect(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckJson {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidateJson {
    pub proper: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_polyhedron: Option<PolyhedronJson>,
    pub checks: Vec<CheckJson>,
}

pub fn validate_to_json(
    report: &ProperReport,
    degree: Option<&TailedPolyhedron>,
) -> Result<ValidateJson> {
    Ok(ValidateJson {
        proper: report.proper,
        degree_polyhedron: match degree {
            Some(p) => Some(polyhedron_to_json(p)?),
            None => None,
        },
        checks: report
            .checks
            .iter()
            .map(|c| CheckJson {
                name: c.name,
                passed: c.passed,
                detail: c.detail.clone(),
            })
            .collect(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ConeLatticeJson {
    pub cone: ConeJson,
    pub lattice_basis: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitJson {
    pub face_vertices: Vec<usize>,
    pub orbit_cone: ConeJson,
    pub orbit_lattice_basis: Vec<Vec<i64>>,
    pub isotropy_invariants: Vec<i64>,
    pub dimension: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct FiberReportJson {
    pub point: String,
    pub fiber_polyhedron: PolyhedronJson,
    pub normal_quasifan: QuasiFanJson,
    pub cone_lattices: Vec<ConeLatticeJson>,
    pub orbits: Vec<OrbitJson>,
    pub reduced: bool,
}

pub fn fiber_report_to_json(r: &FiberReport) -> Result<FiberReportJson> {
    Ok(FiberReportJson {
        point: r.point.clone(),
        fiber_polyhedron: polyhedron_to_json(&r.fiber)?,
        normal_quasifan: quasifan_to_json(&r.normal_quasifan)?,
        cone_lattices: r
            .cone_lattices
            .iter()
            .map(|(cone, basis)| {
                Ok(ConeLatticeJson {
                    cone: cone_to_json(cone)?,
                    lattice_basis: ivecs(basis)?,
                })
            })
            .collect::<Result<_>>()?,
        orbits: r
            .orbits
            .iter()
            .map(|o| {
                Ok(OrbitJson {
                    face_vertices: o.face_vertices.clone(),
                    orbit_cone: cone_to_json(&o.orbit_cone)?,
                    orbit_lattice_basis: ivecs(&o.orbit_lattice_basis)?,
                    isotropy_invariants: ivec(&o.isotropy_invariants)?,
                    dimension: o.dimension,
                })
            })
            .collect::<Result<_>>()?,
        reduced: r.reduced,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentJson {
    pub vertex: Vec<String>,
    pub cone_rays: Vec<Vec<i64>>,
    pub lattice_basis: Vec<Vec<i64>>,
}

pub fn components_to_json(comps: &[FiberComponent]) -> Result<Vec<ComponentJson>> {
    comps
        .iter()
        .map(|c| {
            Ok(ComponentJson {
                vertex: rat_strings(&c.vertex),
                cone_rays: ivecs(&c.cone_rays)?,
                lattice_basis: ivecs(&c.lattice_basis)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyJson {
    pub class: &'static str,
}

pub fn classify_to_json(class: SurfaceClass) -> ClassifyJson {
    ClassifyJson {
        class: class.as_str(),
    }
}

/// Canonical one-line JSON with a trailing newline.
pub fn emit<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serialization cannot fail");
    s.push('\n');
    s
}
