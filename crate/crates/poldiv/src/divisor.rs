//! Polyhedral divisors on curves and complete toric bases: evaluation to
//! rational divisors, polyhedral degree, properness checks, principal
//! shifts and linear equivalence over the projective line.

use std::collections::BTreeMap;

use num::{Signed, Zero};

use crate::arith::{dot_int_rat, is_zero_vec, rat_vec_is_integer, rat_vec_to_int, sub_rat, Int, Rat};
use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::linalg::{rank_rat, solve_rat};
use crate::polyhedron::{polyhedron_generators, TailedPolyhedron};
use crate::quasifan::QuasiFan;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Base {
    /// The projective line; point labels are opaque, "inf" is conventional.
    P1,
    /// An abstract smooth affine curve with labeled points.
    AffineCurve,
    /// A complete toric surface/variety base given by its fan; prime
    /// divisors are the rays, referenced by index into fan.rays().
    Toric(QuasiFan),
}

impl Base {
    pub fn is_curve(&self) -> bool {
        matches!(self, Base::P1 | Base::AffineCurve)
    }
}

/// A prime divisor on the base: a labeled point of a curve or a ray of a
/// toric fan, indexed into the sorted ray list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum DivisorSite {
    Point(String),
    Ray(usize),
}

impl std::fmt::Display for DivisorSite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DivisorSite::Point(l) => write!(f, "{}", l),
            DivisorSite::Ray(i) => write!(f, "ray_{}", i),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalDivisor {
    base: Base,
    coefficients: BTreeMap<DivisorSite, Rat>,
}

impl RationalDivisor {
    pub fn new(base: Base, coefficients: BTreeMap<DivisorSite, Rat>) -> Self {
        let coefficients = coefficients
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        RationalDivisor { base, coefficients }
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn coefficients(&self) -> &BTreeMap<DivisorSite, Rat> {
        &self.coefficients
    }

    pub fn coefficient(&self, site: &DivisorSite) -> Rat {
        self.coefficients.get(site).cloned().unwrap_or_else(Rat::zero)
    }

    /// Total degree on a curve where every point has degree one.
    pub fn degree(&self) -> Rat {
        self.coefficients.values().fold(Rat::zero(), |a, c| a + c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyhedralDivisor {
    base: Base,
    tail: Cone,
    coefficients: BTreeMap<DivisorSite, TailedPolyhedron>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperReport {
    pub proper: bool,
    pub checks: Vec<ProperCheck>,
}

/// A principal polyhedral divisor on the projective line: lattice shifts
/// v_y per point with total degree zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plurifunction {
    shifts: BTreeMap<String, Vec<Int>>,
}

impl Plurifunction {
    pub fn new(shifts: BTreeMap<String, Vec<Int>>) -> Result<Self> {
        let rank = shifts.values().map(|v| v.len()).max().unwrap_or(0);
        let mut total = vec![Int::zero(); rank];
        for v in shifts.values() {
            assert_eq!(v.len(), rank, "shift vectors have mixed ranks");
            for (t, x) in total.iter_mut().zip(v) {
                *t += x;
            }
        }
        if !total.iter().all(|x| x.is_zero()) {
            return Err(Error::DegreeNotZero);
        }
        let shifts = shifts
            .into_iter()
            .filter(|(_, v)| !v.iter().all(|x| x.is_zero()))
            .collect();
        Ok(Plurifunction { shifts })
    }

    pub fn identity() -> Self {
        Plurifunction {
            shifts: BTreeMap::new(),
        }
    }

    pub fn shifts(&self) -> &BTreeMap<String, Vec<Int>> {
        &self.shifts
    }
}

impl PolyhedralDivisor {
    pub fn new(
        base: Base,
        tail: Cone,
        coefficients: Vec<(DivisorSite, TailedPolyhedron)>,
    ) -> Result<PolyhedralDivisor> {
        if !tail.is_pointed() {
            return Err(Error::NotPointed);
        }
        if let Base::Toric(fan) = &base {
            if fan.ambient_rank() == 0 && !fan.max_cones().is_empty() {
                // point base, no rays: fine
            }
            if !fan.validate() || fan.max_cones().iter().any(|c| !c.is_pointed()) {
                return Err(Error::Invalid("toric base fan is not a valid fan".into()));
            }
        }
        let mut map = BTreeMap::new();
        for (site, poly) in coefficients {
            match (&base, &site) {
                (Base::Toric(fan), DivisorSite::Ray(i)) => {
                    if *i >= fan.rays().len() {
                        return Err(Error::UnknownRay(i.to_string()));
                    }
                }
                (Base::Toric(_), DivisorSite::Point(l)) => {
                    return Err(Error::UnknownPoint(l.clone()));
                }
                (_, DivisorSite::Ray(i)) => {
                    return Err(Error::UnknownRay(i.to_string()));
                }
                (_, DivisorSite::Point(_)) => {}
            }
            if poly.tail() != &tail {
                return Err(Error::TailMismatch);
            }
            if poly.is_neutral() {
                continue;
            }
            if map.insert(site.clone(), poly).is_some() {
                return Err(Error::Invalid(format!("duplicate coefficient at {}", site)));
            }
        }
        Ok(PolyhedralDivisor {
            base,
            tail,
            coefficients: map,
        })
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn tail(&self) -> &Cone {
        &self.tail
    }

    pub fn lattice_rank(&self) -> usize {
        self.tail.ambient_rank()
    }

    pub fn weight_cone(&self) -> Cone {
        self.tail.dual()
    }

    pub fn coefficients(&self) -> &BTreeMap<DivisorSite, TailedPolyhedron> {
        &self.coefficients
    }

    /// Coefficient at a site, the neutral polyhedron when unlisted.
    pub fn coefficient(&self, site: &DivisorSite) -> TailedPolyhedron {
        self.coefficients
            .get(site)
            .cloned()
            .unwrap_or_else(|| TailedPolyhedron::neutral(self.tail.clone()))
    }

    pub fn in_weight_cone(&self, u: &[Rat]) -> bool {
        self.tail
            .generating_set()
            .iter()
            .all(|g| !dot_int_rat(g, u).is_negative())
    }

    pub fn evaluate(&self, u: &[Rat]) -> Result<RationalDivisor> {
        if !self.in_weight_cone(u) {
            return Err(Error::OutsideWeightCone);
        }
        let mut coefficients = BTreeMap::new();
        for (site, poly) in &self.coefficients {
            coefficients.insert(site.clone(), poly.eval(u)?);
        }
        Ok(RationalDivisor::new(self.base.clone(), coefficients))
    }

    pub fn evaluate_int(&self, u: &[Int]) -> Result<RationalDivisor> {
        let ur: Vec<Rat> = u.iter().map(|x| Rat::from_integer(x.clone())).collect();
        self.evaluate(&ur)
    }

    /// Minkowski sum of all coefficients over the tail cone.
    pub fn coefficient_sum(&self) -> TailedPolyhedron {
        let mut acc = TailedPolyhedron::neutral(self.tail.clone());
        for poly in self.coefficients.values() {
            acc = acc
                .minkowski_sum(poly)
                .expect("coefficients share the tail cone");
        }
        acc
    }

    /// The coarsest quasifan on the weight cone on whose cells evaluation
    /// is linear: the normal quasifan of the coefficient sum.
    pub fn evaluation_quasifan(&self) -> QuasiFan {
        self.coefficient_sum().normal_quasifan()
    }

    pub fn polyhedral_degree(&self) -> Result<TailedPolyhedron> {
        if self.base != Base::P1 {
            return Err(Error::NotProjectiveCurve);
        }
        Ok(self.coefficient_sum())
    }

    pub fn is_integral_divisor(&self) -> bool {
        self.coefficients.values().all(|p| p.is_integral())
    }

    pub fn add(&self, other: &PolyhedralDivisor) -> Result<PolyhedralDivisor> {
        if self.base != other.base {
            return Err(Error::Mismatch("bases differ".into()));
        }
        if self.tail != other.tail {
            return Err(Error::Mismatch("tail cones differ".into()));
        }
        let mut entries: Vec<(DivisorSite, TailedPolyhedron)> = Vec::new();
        let sites: std::collections::BTreeSet<DivisorSite> = self
            .coefficients
            .keys()
            .chain(other.coefficients.keys())
            .cloned()
            .collect();
        for site in sites {
            let sum = self.coefficient(&site).minkowski_sum(&other.coefficient(&site))?;
            entries.push((site, sum));
        }
        PolyhedralDivisor::new(self.base.clone(), self.tail.clone(), entries)
    }

    /// Translate coefficients by the lattice shifts of a plurifunction.
    pub fn add_principal(&self, f: &Plurifunction) -> Result<PolyhedralDivisor> {
        if self.base != Base::P1 {
            return Err(Error::NotP1);
        }
        let mut entries: Vec<(DivisorSite, TailedPolyhedron)> = Vec::new();
        let mut touched: std::collections::BTreeSet<DivisorSite> =
            std::collections::BTreeSet::new();
        for (label, v) in f.shifts() {
            assert_eq!(v.len(), self.lattice_rank(), "shift has wrong rank");
            let site = DivisorSite::Point(label.clone());
            let vr: Vec<Rat> = v.iter().map(|x| Rat::from_integer(x.clone())).collect();
            entries.push((site.clone(), self.coefficient(&site).translate(&vr)));
            touched.insert(site);
        }
        for (site, poly) in &self.coefficients {
            if !touched.contains(site) {
                entries.push((site.clone(), poly.clone()));
            }
        }
        PolyhedralDivisor::new(self.base.clone(), self.tail.clone(), entries)
    }

    /// Plurifunction carrying self onto other, when the two divisors differ
    /// by lattice translations of total degree zero.
    pub fn linear_equivalent_p1(
        &self,
        other: &PolyhedralDivisor,
    ) -> Result<Option<Plurifunction>> {
        if self.base != Base::P1 || other.base != Base::P1 {
            return Err(Error::NotP1);
        }
        if self.tail != other.tail {
            return Err(Error::Mismatch("tail cones differ".into()));
        }
        let sites: std::collections::BTreeSet<DivisorSite> = self
            .coefficients
            .keys()
            .chain(other.coefficients.keys())
            .cloned()
            .collect();
        let mut shifts = BTreeMap::new();
        for site in sites {
            let a = self.coefficient(&site);
            let b = other.coefficient(&site);
            // a translation matches lexicographic minima of vertex sets
            let v = sub_rat(&b.vertices()[0], &a.vertices()[0]);
            if !rat_vec_is_integer(&v) {
                return Ok(None);
            }
            if a.translate(&v) != b {
                return Ok(None);
            }
            if let DivisorSite::Point(label) = site {
                let vi = rat_vec_to_int(&v).expect("translation is integral");
                if !is_zero_vec(&vi) {
                    shifts.insert(label, vi);
                }
            }
        }
        match Plurifunction::new(shifts) {
            Ok(f) => Ok(Some(f)),
            Err(Error::DegreeNotZero) => Ok(None),
            Err(e) => Err(e),
        }
    }

    pub fn is_proper(&self) -> Result<ProperReport> {
        match &self.base {
            Base::AffineCurve => Ok(self.proper_report_affine()),
            Base::P1 => Ok(self.proper_report_p1()),
            Base::Toric(fan) => self.proper_report_toric(fan),
        }
    }

    fn proper_report_affine(&self) -> ProperReport {
        let checks = vec![ProperCheck {
            name: "distinct sigma-polyhedra",
            passed: true,
            detail: "coefficients are tailed polyhedra at distinct points by construction".into(),
        }, ProperCheck {
            name: "affine base",
            passed: true,
            detail: "every divisor on a smooth affine curve is semiample and big".into(),
        }];
        ProperReport {
            proper: true,
            checks,
        }
    }

    fn proper_report_p1(&self) -> ProperReport {
        let mut checks = vec![ProperCheck {
            name: "distinct sigma-polyhedra",
            passed: true,
            detail: "coefficients are tailed polyhedra at distinct points by construction".into(),
        }];
        let deg = self.coefficient_sum();
        let inside = deg
            .vertices()
            .iter()
            .all(|v| self.tail.contains(v));
        let strict = !deg.is_neutral();
        checks.push(ProperCheck {
            name: "degree inside tail cone",
            passed: inside,
            detail: if inside {
                "all degree vertices lie in the tail cone".into()
            } else {
                "a degree vertex leaves the tail cone".into()
            },
        });
        checks.push(ProperCheck {
            name: "degree differs from tail cone",
            passed: strict,
            detail: if strict {
                "the degree polyhedron is a proper subset".into()
            } else {
                "the degree polyhedron equals the tail cone".into()
            },
        });
        // cells of the degree quasifan where the support function vanishes
        // must lie in the boundary of the weight cone, that is pair to zero
        // with some ray of the tail cone
        let mut zero_cells_ok = true;
        let mut detail = String::from("zero locus cells on the boundary: ");
        let mut first = true;
        if inside {
            for cell in deg.normal_quasifan().all_cones() {
                let gens = cell.generating_set();
                let vanishes = gens
                    .iter()
                    .all(|g| deg.eval_int(g).map(|h| h.is_zero()).unwrap_or(false));
                if !vanishes {
                    continue;
                }
                let on_boundary = self.tail.rays().iter().any(|r| {
                    gens.iter().all(|g| {
                        g.iter()
                            .zip(r)
                            .map(|(a, b)| a * b)
                            .fold(Int::zero(), |acc, x| acc + x)
                            .is_zero()
                    })
                });
                if !first {
                    detail.push_str(", ");
                }
                first = false;
                detail.push_str(&format!("dim {} cell {}", cell.dim(), if on_boundary { "ok" } else { "interior" }));
                if !on_boundary {
                    zero_cells_ok = false;
                }
            }
        } else {
            zero_cells_ok = false;
            detail = "skipped: degree leaves the tail cone".into();
        }
        checks.push(ProperCheck {
            name: "zero locus on boundary",
            passed: zero_cells_ok,
            detail,
        });
        checks.push(ProperCheck {
            name: "principal multiples",
            passed: true,
            detail: "degree zero rational divisors on the projective line have principal multiples"
                .into(),
        });
        let proper = checks.iter().all(|c| c.passed);
        ProperReport { proper, checks }
    }

    fn proper_report_toric(&self, fan: &QuasiFan) -> Result<ProperReport> {
        if !fan.is_complete() {
            return Err(Error::IncompleteToricFan);
        }
        let rays = fan.rays();
        let n = fan.ambient_rank();
        let mut checks = vec![ProperCheck {
            name: "complete base fan",
            passed: true,
            detail: format!("{} maximal cones, every wall shared", fan.max_cones().len()),
        }];
        // test weights: cell generators and one interior point per cell of
        // the evaluation quasifan
        let weight_cone = self.weight_cone();
        let mut weights: std::collections::BTreeSet<Vec<Int>> = std::collections::BTreeSet::new();
        for cell in self.evaluation_quasifan().max_cones() {
            for g in cell.generating_set() {
                weights.insert(g);
            }
            weights.insert(cell.relint_point());
        }
        let mut cartier_ok = true;
        let mut semiample_ok = true;
        let mut big_ok = true;
        for u in &weights {
            let div = self.evaluate_int(u)?;
            let a: Vec<Rat> = (0..rays.len())
                .map(|i| div.coefficient(&DivisorSite::Ray(i)))
                .collect();
            // per maximal cone: a linear function m with <m, v_rho> = -a_rho
            let mut functions: Vec<Vec<Rat>> = Vec::new();
            for gamma in fan.max_cones() {
                if gamma.rays().is_empty() {
                    functions.push(vec![Rat::zero(); n]);
                    continue;
                }
                let rows: Vec<Vec<Rat>> = gamma
                    .rays()
                    .iter()
                    .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
                    .collect();
                let rhs: Vec<Rat> = gamma
                    .rays()
                    .iter()
                    .map(|r| {
                        let i = rays.iter().position(|s| s == r).expect("fan ray");
                        -a[i].clone()
                    })
                    .collect();
                match solve_rat(&rows, &rhs) {
                    Some(m) => functions.push(m),
                    None => {
                        cartier_ok = false;
                    }
                }
            }
            for m in &functions {
                for (i, r) in rays.iter().enumerate() {
                    if dot_int_rat(r, m) < -a[i].clone() {
                        semiample_ok = false;
                    }
                }
            }
            if weight_cone.relint_contains_int(u) {
                // section polytope must be full dimensional
                let rows: Vec<(Vec<Int>, Rat)> = rays
                    .iter()
                    .enumerate()
                    .map(|(i, r)| (r.clone(), -a[i].clone()))
                    .collect();
                let full = match polyhedron_generators(n, &rows) {
                    Some((points, _rec)) => {
                        let diffs: Vec<Vec<Rat>> = points[1..]
                            .iter()
                            .map(|p| sub_rat(p, &points[0]))
                            .collect();
                        rank_rat(&diffs) == n
                    }
                    None => false,
                };
                if !full {
                    big_ok = false;
                }
            }
        }
        checks.push(ProperCheck {
            name: "cartier evaluations",
            passed: cartier_ok,
            detail: format!("checked {} weights", weights.len()),
        });
        checks.push(ProperCheck {
            name: "semiample evaluations",
            passed: semiample_ok,
            detail: "support functions convex across all walls".into(),
        });
        checks.push(ProperCheck {
            name: "big on interior weights",
            passed: big_ok,
            detail: "section polytopes full dimensional at interior weights".into(),
        });
        let proper = checks.iter().all(|c| c.passed);
        Ok(ProperReport { proper, checks })
    }
}
