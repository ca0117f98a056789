//! Orbit structure of fibers: every face F of a fiber polyhedron carries an
//! orbit whose cone is the normal cell lambda(F), whose character lattice is
//! the group of integrally-evaluating weights on lambda(F), and whose
//! isotropy is the quotient of the ambient weight lattice by that group.

use num::{Integer, Zero};

use crate::arith::{dot_int_rat, to_rat_vec, Int, Rat};
use crate::cone::Cone;
use crate::divisor::{Base, DivisorSite, PolyhedralDivisor};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, lattice_basis, quotient_invariants, saturated_span_basis, IntMatrix};
use crate::polyhedron::TailedPolyhedron;
use crate::quasifan::QuasiFan;

/// A point of the base: a closed point of a curve, or a torus-fixed stratum
/// of a toric base named by the rays whose orbit closures cut it out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiberPoint {
    Point(String),
    ToricStratum(Vec<usize>),
}

/// Fiber polyhedron over a point: the coefficient for curve points, the
/// Minkowski sum of the ray coefficients for a toric stratum.
pub fn fiber_polyhedron(d: &PolyhedralDivisor, y: &FiberPoint) -> Result<TailedPolyhedron> {
    match (d.base(), y) {
        (Base::P1, FiberPoint::Point(label)) | (Base::AffineCurve, FiberPoint::Point(label)) => {
            Ok(d.coefficient(&DivisorSite::Point(label.clone())))
        }
        (Base::Toric(fan), FiberPoint::ToricStratum(rays)) => {
            let count = fan.rays().len();
            let mut seen: Vec<usize> = Vec::new();
            let mut acc = TailedPolyhedron::neutral(d.tail().clone());
            for &i in rays {
                if i >= count {
                    return Err(Error::UnknownRay(i.to_string()));
                }
                if seen.contains(&i) {
                    continue;
                }
                seen.push(i);
                acc = acc.minkowski_sum(&d.coefficient(&DivisorSite::Ray(i)))?;
            }
            Ok(acc)
        }
        (_, FiberPoint::Point(label)) => Err(Error::UnknownPoint(label.clone())),
        (_, FiberPoint::ToricStratum(_)) => Err(Error::Invalid(
            "toric strata only exist over toric bases".into(),
        )),
    }
}

/// Basis of the weight group M(F) = {u in M ∩ lin(lambda) : <u, v> in Z}
/// where v is any vertex of the face attached to the cell lambda. The
/// support function is linear with slope v on lambda, so integrality of
/// <u, v> is integrality of the evaluation.
fn orbit_lattice(n: usize, lambda: &Cone, vertex: &[Rat]) -> Vec<Vec<Int>> {
    let span = saturated_span_basis(n, &lambda.generating_set());
    if span.is_empty() {
        return Vec::new();
    }
    let r = span.len();
    let pairings: Vec<Rat> = span.iter().map(|p| dot_int_rat(p, vertex)).collect();
    let mut q = Int::from(1);
    for c in &pairings {
        q = q.lcm(c.denom());
    }
    let mut row: Vec<Int> = pairings
        .iter()
        .map(|c| (c * Rat::from_integer(q.clone())).to_integer())
        .collect();
    row.push(q);
    // kernel of (a_1 .. a_r q): combinations with integral pairing
    let ker = kernel_basis(&IntMatrix::from_rows(vec![row]));
    let gens: Vec<Vec<Int>> = ker
        .iter()
        .map(|c| {
            let mut g = vec![Int::zero(); n];
            for (ci, p) in c[..r].iter().zip(&span) {
                for (gj, pj) in g.iter_mut().zip(p) {
                    *gj += ci * pj;
                }
            }
            g
        })
        .collect();
    lattice_basis(n, &gens)
}

fn curve_fiber(d: &PolyhedralDivisor, y: &str) -> Result<TailedPolyhedron> {
    if !d.base().is_curve() {
        return Err(Error::UnsupportedBase);
    }
    Ok(d.coefficient(&DivisorSite::Point(y.to_string())))
}

/// Weight groups of the maximal normal cells of the fiber over y.
pub fn fiber_lattices(d: &PolyhedralDivisor, y: &str) -> Result<Vec<(Cone, Vec<Vec<Int>>)>> {
    let fiber = curve_fiber(d, y)?;
    let n = fiber.ambient_rank();
    let mut out = Vec::new();
    for lambda in fiber.normal_quasifan().max_cones() {
        let face = fiber.face_at(&to_rat_vec(&lambda.relint_point()))?;
        let basis = orbit_lattice(n, lambda, &face.vertices()[0]);
        out.push((lambda.clone(), basis));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRecord {
    /// Indices into the vertex list of the fiber polyhedron.
    pub face_vertices: Vec<usize>,
    pub face: TailedPolyhedron,
    pub orbit_cone: Cone,
    pub orbit_lattice_basis: Vec<Vec<Int>>,
    pub isotropy_invariants: Vec<Int>,
    /// Orbit dimension equals the dimension of the normal cell.
    pub dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberReport {
    pub point: String,
    pub fiber: TailedPolyhedron,
    pub normal_quasifan: QuasiFan,
    pub cone_lattices: Vec<(Cone, Vec<Vec<Int>>)>,
    pub orbits: Vec<OrbitRecord>,
    pub reduced: bool,
}

/// One orbit record per face of the fiber polyhedron over a curve point.
pub fn fiber_orbits(d: &PolyhedralDivisor, y: &str) -> Result<FiberReport> {
    let fiber = curve_fiber(d, y)?;
    let n = fiber.ambient_rank();
    let quasifan = fiber.normal_quasifan();
    let mut orbits = Vec::new();
    for lambda in quasifan.all_cones() {
        let face = fiber.face_at(&to_rat_vec(&lambda.relint_point()))?;
        let basis = orbit_lattice(n, &lambda, &face.vertices()[0]);
        let invariants = quotient_invariants(n, &basis);
        let face_vertices: Vec<usize> = face
            .vertices()
            .iter()
            .map(|v| {
                fiber
                    .vertices()
                    .iter()
                    .position(|w| w == v)
                    .expect("face vertex belongs to the fiber")
            })
            .collect();
        orbits.push(OrbitRecord {
            face_vertices,
            face,
            dimension: lambda.dim(),
            orbit_cone: lambda,
            orbit_lattice_basis: basis,
            isotropy_invariants: invariants,
        });
    }
    orbits.sort_by(|a, b| {
        (a.dimension, &a.orbit_cone).cmp(&(b.dimension, &b.orbit_cone))
    });
    Ok(FiberReport {
        point: y.to_string(),
        reduced: is_fiber_reduced(d, y)?,
        cone_lattices: fiber_lattices(d, y)?,
        normal_quasifan: quasifan,
        fiber,
        orbits,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberComponent {
    pub vertex: Vec<Rat>,
    /// Rays of the component's toric cone, written in the coordinates of
    /// the weight-group basis.
    pub cone_rays: Vec<Vec<Int>>,
    pub lattice_basis: Vec<Vec<Int>>,
}

/// Irreducible components of the fiber over a curve point, one per vertex.
pub fn fiber_components(d: &PolyhedralDivisor, y: &str) -> Result<Vec<FiberComponent>> {
    let fiber = curve_fiber(d, y)?;
    let n = fiber.ambient_rank();
    let mut out = Vec::new();
    for lambda in fiber.normal_quasifan().max_cones() {
        let face = fiber.face_at(&to_rat_vec(&lambda.relint_point()))?;
        debug_assert_eq!(face.vertices().len(), 1);
        let vertex = face.vertices()[0].clone();
        let basis = orbit_lattice(n, lambda, &vertex);
        // recession cone of the component: dual cell in basis coordinates
        let dual = lambda.dual();
        let coords: Vec<Vec<Int>> = dual
            .rays()
            .iter()
            .map(|g| {
                basis
                    .iter()
                    .map(|b| {
                        let p = dot_int_rat(b, &to_rat_vec(g));
                        debug_assert!(p.is_integer());
                        p.to_integer()
                    })
                    .collect()
            })
            .collect();
        let cone = Cone::from_rays(basis.len(), &coords);
        out.push(FiberComponent {
            vertex,
            cone_rays: cone.rays().to_vec(),
            lattice_basis: basis,
        });
    }
    Ok(out)
}

/// A fiber over a curve point is reduced exactly when its coefficient is an
/// integral polyhedron.
pub fn is_fiber_reduced(d: &PolyhedralDivisor, y: &str) -> Result<bool> {
    Ok(curve_fiber(d, y)?.is_integral())
}

/// Chamber structure of weights: the coarsest quasifan on which every
/// evaluation is linear. Weights in a common cell give the same GIT quotient.
pub fn git_quasifan(d: &PolyhedralDivisor) -> QuasiFan {
    d.evaluation_quasifan()
}

fn cell_of_face(
    fiber: &TailedPolyhedron,
    face: &TailedPolyhedron,
) -> Result<Cone> {
    for lambda in fiber.normal_quasifan().all_cones() {
        if &fiber.face_at(&to_rat_vec(&lambda.relint_point()))? == face {
            return Ok(lambda);
        }
    }
    Err(Error::FaceNotInFiber)
}

/// Whether the orbits attached to faces of two fibers are glued to the same
/// orbit in the contracted variety. Requires equal normal cells; distinct
/// points glue on P1 exactly when the degree evaluation vanishes on the cell.
pub fn orbit_identification(
    d: &PolyhedralDivisor,
    y1: &str,
    face1: &TailedPolyhedron,
    y2: &str,
    face2: &TailedPolyhedron,
) -> Result<bool> {
    if !d.base().is_curve() {
        return Err(Error::UnsupportedBase);
    }
    let lambda1 = cell_of_face(&curve_fiber(d, y1)?, face1)?;
    let lambda2 = cell_of_face(&curve_fiber(d, y2)?, face2)?;
    if lambda1 != lambda2 {
        return Ok(false);
    }
    if y1 == y2 {
        return Ok(true);
    }
    match d.base() {
        Base::P1 => {
            // the degree support function is nonnegative and superadditive
            // for proper divisors, so vanishing at one interior point is
            // vanishing on the whole cell
            let deg = d.polyhedral_degree()?;
            Ok(deg.eval_int(&lambda1.relint_point())?.is_zero())
        }
        Base::AffineCurve => Ok(false),
        Base::Toric(_) => Err(Error::UnsupportedBase),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceClass {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

impl SurfaceClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            SurfaceClass::Elliptic => "elliptic",
            SurfaceClass::Parabolic => "parabolic",
            SurfaceClass::Hyperbolic => "hyperbolic",
        }
    }
}

/// Classification of the K*-surface defined by a proper rank-one divisor on
/// a curve: projective base gives elliptic fixed points, affine base gives
/// a parabolic or hyperbolic surface depending on the tail.
pub fn classify_k_star_surface(d: &PolyhedralDivisor) -> Result<SurfaceClass> {
    if d.lattice_rank() != 1 || !d.base().is_curve() {
        return Err(Error::NotASurfaceDatum);
    }
    if !d.is_proper()?.proper {
        return Err(Error::NotASurfaceDatum);
    }
    Ok(match d.base() {
        Base::P1 => SurfaceClass::Elliptic,
        Base::AffineCurve => {
            if d.tail().is_zero() {
                SurfaceClass::Hyperbolic
            } else {
                SurfaceClass::Parabolic
            }
        }
        Base::Toric(_) => unreachable!("toric bases are rejected above"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int_vec, rat, rat_vec};

    fn interval_divisor() -> PolyhedralDivisor {
        // coefficient [1/3, 1/2] at the origin of the affine line
        let tail = Cone::zero(1);
        let coeff = TailedPolyhedron::new(
            &[vec![rat(1, 3)], vec![rat(1, 2)]],
            tail.clone(),
        )
        .unwrap();
        PolyhedralDivisor::new(
            Base::AffineCurve,
            tail,
            vec![(DivisorSite::Point("0".into()), coeff)],
        )
        .unwrap()
    }

    fn e6_divisor() -> PolyhedralDivisor {
        let sigma = Cone::from_rays(2, &[int_vec(&[1, 0]), int_vec(&[1, 12])]);
        let p = |pts: &[Vec<(i64, i64)>]| {
            let v: Vec<Vec<Rat>> = pts.iter().map(|q| rat_vec(q)).collect();
            TailedPolyhedron::new(&v, sigma.clone()).unwrap()
        };
        PolyhedralDivisor::new(
            Base::P1,
            sigma.clone(),
            vec![
                (DivisorSite::Point("0".into()), p(&[vec![(1, 3), (0, 1)]])),
                (DivisorSite::Point("1".into()), p(&[vec![(-1, 4), (0, 1)]])),
                (
                    DivisorSite::Point("inf".into()),
                    p(&[vec![(0, 1), (0, 1)], vec![(0, 1), (1, 1)]]),
                ),
            ],
        )
        .unwrap()
    }

    #[test]
    fn interval_fiber_orbit_structure() {
        let d = interval_divisor();
        let report = fiber_orbits(&d, "0").unwrap();
        assert_eq!(report.orbits.len(), 3);
        assert!(!report.reduced);
        // fixed point from the edge, then one orbit per vertex
        assert_eq!(report.orbits[0].dimension, 0);
        assert_eq!(report.orbits[0].orbit_cone, Cone::zero(1));
        assert_eq!(report.orbits[0].isotropy_invariants, vec![Int::zero()]);
        assert_eq!(report.orbits[0].face_vertices, vec![0, 1]);
        let neg = Cone::from_rays(1, &[int_vec(&[-1])]);
        let pos = Cone::from_rays(1, &[int_vec(&[1])]);
        assert_eq!(report.orbits[1].orbit_cone, neg);
        assert_eq!(report.orbits[1].dimension, 1);
        assert_eq!(report.orbits[1].isotropy_invariants, vec![Int::from(2)]);
        assert_eq!(report.orbits[1].orbit_lattice_basis, vec![int_vec(&[2])]);
        assert_eq!(report.orbits[2].orbit_cone, pos);
        assert_eq!(report.orbits[2].isotropy_invariants, vec![Int::from(3)]);
        assert_eq!(report.orbits[2].orbit_lattice_basis, vec![int_vec(&[3])]);
        // maximal-cell lattices in cone order
        assert_eq!(
            report.cone_lattices,
            vec![
                (neg, vec![int_vec(&[2])]),
                (pos, vec![int_vec(&[3])]),
            ]
        );
    }

    #[test]
    fn interval_fiber_components() {
        let d = interval_divisor();
        let comps = fiber_components(&d, "0").unwrap();
        assert_eq!(comps.len(), 2);
        // cells sorted: (-1) then (1), so vertex 1/2 comes first; its
        // component cone points away from the other vertex
        assert_eq!(comps[0].vertex, vec![rat(1, 2)]);
        assert_eq!(comps[0].lattice_basis, vec![int_vec(&[2])]);
        assert_eq!(comps[0].cone_rays, vec![int_vec(&[-1])]);
        assert_eq!(comps[1].vertex, vec![rat(1, 3)]);
        assert_eq!(comps[1].lattice_basis, vec![int_vec(&[3])]);
        assert_eq!(comps[1].cone_rays, vec![int_vec(&[1])]);
        // generic fiber: a single torus orbit
        let generic = fiber_components(&d, "5").unwrap();
        assert_eq!(generic.len(), 1);
        assert_eq!(generic[0].vertex, vec![rat(0, 1)]);
        assert_eq!(generic[0].lattice_basis, vec![int_vec(&[1])]);
        assert!(generic[0].cone_rays.is_empty());
        assert!(is_fiber_reduced(&d, "5").unwrap());
        assert_eq!(fiber_orbits(&d, "5").unwrap().orbits.len(), 1);
    }

    #[test]
    fn threefold_fibers() {
        let d = e6_divisor();
        // generic fiber is the toric surface of sigma: four orbits
        let generic = fiber_orbits(&d, "generic").unwrap();
        assert_eq!(generic.orbits.len(), 4);
        assert!(generic.reduced);
        assert_eq!(fiber_components(&d, "generic").unwrap().len(), 1);
        // fiber over inf has two components meeting along the edge
        let at_inf = fiber_orbits(&d, "inf").unwrap();
        assert_eq!(fiber_components(&d, "inf").unwrap().len(), 2);
        assert!(at_inf.reduced);
        for (_, basis) in &at_inf.cone_lattices {
            assert_eq!(
                basis,
                &vec![int_vec(&[1, 0]), int_vec(&[0, 1])],
                "integral coefficient gives the full weight lattice"
            );
        }
        // fiber over 0 is irreducible and non-reduced
        assert_eq!(fiber_components(&d, "0").unwrap().len(), 1);
        assert!(!is_fiber_reduced(&d, "0").unwrap());
        let at_zero = fiber_lattices(&d, "0").unwrap();
        assert_eq!(at_zero.len(), 1);
        assert_eq!(
            at_zero[0].1,
            vec![int_vec(&[3, 0]), int_vec(&[0, 1])],
            "weights pair integrally with (1/3, 0) exactly when 3 | u_1"
        );
    }

    #[test]
    fn fiber_polyhedron_sites() {
        let d = e6_divisor();
        let at_zero =
            fiber_polyhedron(&d, &FiberPoint::Point("0".into())).unwrap();
        assert_eq!(at_zero.vertices(), &[rat_vec(&[(1, 3), (0, 1)])]);
        let generic =
            fiber_polyhedron(&d, &FiberPoint::Point("other".into())).unwrap();
        assert!(generic.is_neutral());
        assert!(matches!(
            fiber_polyhedron(&d, &FiberPoint::ToricStratum(vec![0])),
            Err(Error::Invalid(_))
        ));
        // toric base: stratum fibers are Minkowski sums of ray coefficients
        let input = crate::downgrade::DowngradeInput {
            delta: Cone::from_rays(
                4,
                &[
                    int_vec(&[1, 0, 0, 0]),
                    int_vec(&[0, 1, 0, 0]),
                    int_vec(&[0, 0, 1, 0]),
                    int_vec(&[0, 0, 0, 1]),
                ],
            ),
            f: IntMatrix::from_i64(&[vec![4, 0], vec![3, 0], vec![0, 1], vec![12, -1]]),
            s: Some(IntMatrix::from_i64(&[vec![1, -1, 0, 0], vec![0, 0, 1, 0]])),
            p: Some(IntMatrix::from_i64(&[vec![3, 0, -1, -1], vec![0, 4, -1, -1]])),
        };
        let down = crate::downgrade::downgrade(&input).unwrap();
        let single =
            fiber_polyhedron(&down.divisor, &FiberPoint::ToricStratum(vec![2])).unwrap();
        assert_eq!(single, down.divisor.coefficient(&DivisorSite::Ray(2)));
        let pair =
            fiber_polyhedron(&down.divisor, &FiberPoint::ToricStratum(vec![2, 1])).unwrap();
        assert_eq!(
            pair,
            single
                .minkowski_sum(&down.divisor.coefficient(&DivisorSite::Ray(1)))
                .unwrap()
        );
        assert!(matches!(
            fiber_polyhedron(&down.divisor, &FiberPoint::ToricStratum(vec![7])),
            Err(Error::UnknownRay(_))
        ));
        assert!(matches!(
            fiber_polyhedron(&down.divisor, &FiberPoint::Point("0".into())),
            Err(Error::UnknownPoint(_))
        ));
    }

    #[test]
    fn git_chambers_match_evaluation_quasifan() {
        let d = e6_divisor();
        let fan = git_quasifan(&d);
        assert_eq!(fan, d.evaluation_quasifan());
        assert_eq!(fan.max_cones().len(), 2);
    }

    #[test]
    fn orbit_identification_on_p1() {
        let d = e6_divisor();
        let fiber_a = d.coefficient(&DivisorSite::Point("a".into()));
        let fiber_b = d.coefficient(&DivisorSite::Point("b".into()));
        // boundary cell: the degree evaluates to zero there, orbits glue
        let ray_face_a = fiber_a.face_at(&rat_vec(&[(12, 1), (-1, 1)])).unwrap();
        let ray_face_b = fiber_b.face_at(&rat_vec(&[(12, 1), (-1, 1)])).unwrap();
        assert!(orbit_identification(&d, "a", &ray_face_a, "b", &ray_face_b).unwrap());
        // interior cell: positive degree, distinct points stay distinct
        let vertex_a = fiber_a.face_at(&rat_vec(&[(12, 1), (0, 1)])).unwrap();
        let vertex_b = fiber_b.face_at(&rat_vec(&[(12, 1), (0, 1)])).unwrap();
        assert!(!orbit_identification(&d, "a", &vertex_a, "b", &vertex_b).unwrap());
        assert!(orbit_identification(&d, "a", &vertex_a, "a", &vertex_a).unwrap());
        // mismatched cells never glue
        assert!(!orbit_identification(&d, "a", &ray_face_a, "b", &vertex_b).unwrap());
        // a face of some other polyhedron is rejected
        let alien = TailedPolyhedron::new(
            &[vec![rat(7, 1), rat(7, 1)]],
            d.tail().clone(),
        )
        .unwrap();
        assert_eq!(
            orbit_identification(&d, "a", &alien, "b", &ray_face_b).unwrap_err(),
            Error::FaceNotInFiber
        );
        // affine bases never glue distinct points
        let interval = interval_divisor();
        let f0 = interval.coefficient(&DivisorSite::Point("8".into()));
        let face = f0.face_at(&rat_vec(&[(0, 1)])).unwrap();
        assert!(!orbit_identification(&interval, "8", &face, "9", &face).unwrap());
    }

    #[test]
    fn surface_classification() {
        // elliptic: proper on P1
        let pos = Cone::from_rays(1, &[int_vec(&[1])]);
        let shifted = |a: (i64, i64)| {
            TailedPolyhedron::new(&[vec![rat(a.0, a.1)]], pos.clone()).unwrap()
        };
        let elliptic = PolyhedralDivisor::new(
            Base::P1,
            pos.clone(),
            vec![
                (DivisorSite::Point("0".into()), shifted((1, 1))),
                (DivisorSite::Point("1".into()), shifted((1, 1))),
            ],
        )
        .unwrap();
        assert_eq!(
            classify_k_star_surface(&elliptic).unwrap(),
            SurfaceClass::Elliptic
        );
        // parabolic: affine base with a ray tail
        let parabolic = PolyhedralDivisor::new(
            Base::AffineCurve,
            pos.clone(),
            vec![(DivisorSite::Point("0".into()), shifted((-1, 1)))],
        )
        .unwrap();
        assert_eq!(
            classify_k_star_surface(&parabolic).unwrap(),
            SurfaceClass::Parabolic
        );
        // hyperbolic: affine base with trivial tail
        assert_eq!(
            classify_k_star_surface(&interval_divisor()).unwrap(),
            SurfaceClass::Hyperbolic
        );
        // wrong rank
        assert_eq!(
            classify_k_star_surface(&e6_divisor()).unwrap_err(),
            Error::NotASurfaceDatum
        );
        // improper divisor on P1
        let improper = PolyhedralDivisor::new(
            Base::P1,
            Cone::zero(1),
            vec![(
                DivisorSite::Point("0".into()),
                TailedPolyhedron::new(
                    &[vec![rat(0, 1)], vec![rat(1, 1)]],
                    Cone::zero(1),
                )
                .unwrap(),
            )],
        )
        .unwrap();
        assert_eq!(
            classify_k_star_surface(&improper).unwrap_err(),
            Error::NotASurfaceDatum
        );
    }
}
