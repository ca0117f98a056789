//! Downgrading a toric variety along a subtorus: from a cone delta and a
//! saturated embedding F of cocharacter lattices, compute the tail cone
//! sigma = F^{-1}(delta), the quotient fan, and the polyhedral divisor with
//! one coefficient per quotient ray. Restriction to curves applies
//! user-supplied pullback data.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::arith::{Int, Rat};
use crate::cone::Cone;
use crate::divisor::{Base, DivisorSite, PolyhedralDivisor};
use crate::error::{Error, Result};
use crate::linalg::{section_of_embedding, smith_normal_form, IntMatrix};
use crate::polyhedron::{polyhedron_generators, TailedPolyhedron};
use crate::quasifan::{projected_face_fan, QuasiFan};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DowngradeInput {
    /// Cone of the ambient toric variety.
    pub delta: Cone,
    /// Embedding of the acting subtorus cocharacters, rows index the
    /// ambient lattice.
    pub f: IntMatrix,
    /// Optional section with s * f = identity; computed when omitted.
    pub s: Option<IntMatrix>,
    /// Optional cokernel projection override; the Smith normal form of f
    /// supplies one when omitted.
    pub p: Option<IntMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DowngradeResult {
    pub sigma: Cone,
    pub fan_y: QuasiFan,
    pub divisor: PolyhedralDivisor,
    pub s_used: IntMatrix,
    pub p_used: IntMatrix,
}

fn is_identity(m: &IntMatrix) -> bool {
    if m.rows() != m.cols() {
        return false;
    }
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let want = if i == j { Int::one() } else { Int::zero() };
            if m.get(i, j) != &want {
                return false;
            }
        }
    }
    true
}

fn is_zero(m: &IntMatrix) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| m.get(i, j).is_zero()))
}

pub fn downgrade(input: &DowngradeInput) -> Result<DowngradeResult> {
    let n = input.f.rows();
    let k = input.f.cols();
    if input.delta.ambient_rank() != n {
        return Err(Error::Invalid(
            "cone and embedding have different ambient ranks".into(),
        ));
    }
    if k > n {
        return Err(Error::NotSaturated);
    }
    let (u, smat, _v) = smith_normal_form(&input.f);
    for i in 0..k {
        if smat.get(i, i) != &Int::one() {
            return Err(Error::NotSaturated);
        }
    }
    let s_used = match &input.s {
        Some(s) => {
            if s.rows() != k || s.cols() != n || !is_identity(&s.mul(&input.f)) {
                return Err(Error::SectionInvalid);
            }
            s.clone()
        }
        None => section_of_embedding(&input.f).map_err(|_| Error::NotSaturated)?,
    };
    let p_used = match &input.p {
        Some(p) => {
            if p.rows() != n - k || p.cols() != n || !is_zero(&p.mul(&input.f)) {
                return Err(Error::Invalid("cokernel override is not a cokernel".into()));
            }
            let (_, psm, _) = smith_normal_form(p);
            if (0..n - k).any(|i| psm.get(i, i) != &Int::one()) {
                return Err(Error::Invalid("cokernel override is not surjective".into()));
            }
            p.clone()
        }
        None => {
            let rows: Vec<Vec<Int>> = (k..n).map(|i| u.row(i).to_vec()).collect();
            if rows.is_empty() {
                IntMatrix::zero(0, n)
            } else {
                IntMatrix::from_rows(rows)
            }
        }
    };
    let sigma = input.delta.preimage(&input.f);
    if !sigma.is_pointed() {
        return Err(Error::NotPointed);
    }
    let fan_y = projected_face_fan(&input.delta, &p_used);
    debug_assert!(fan_y.validate());
    let mut entries: Vec<(DivisorSite, TailedPolyhedron)> = Vec::new();
    for (i, v_rho) in fan_y.rays().iter().enumerate() {
        // slice: delta intersected with P(x) = v_rho, pushed down by s
        let mut rows: Vec<(Vec<Int>, Rat)> = input
            .delta
            .halfspaces()
            .iter()
            .map(|h| (h.clone(), Rat::zero()))
            .collect();
        for j in 0..p_used.rows() {
            let pr = p_used.row(j);
            let b = Rat::from_integer(v_rho[j].clone());
            rows.push((pr.to_vec(), b.clone()));
            rows.push((pr.iter().map(|x| -x).collect(), -b));
        }
        let (points, recession) = polyhedron_generators(n, &rows)
            .ok_or_else(|| Error::Invalid("empty slice at a quotient ray".into()))?;
        debug_assert_eq!(recession.image(&s_used), sigma);
        let images: Vec<Vec<Rat>> = points.iter().map(|x| s_used.apply_rat(x)).collect();
        entries.push((
            DivisorSite::Ray(i),
            TailedPolyhedron::new(&images, sigma.clone())?,
        ));
    }
    let divisor = PolyhedralDivisor::new(Base::Toric(fan_y.clone()), sigma.clone(), entries)?;
    Ok(DowngradeResult {
        sigma,
        fan_y,
        divisor,
        s_used,
        p_used,
    })
}

/// Pull a toric polyhedral divisor back to a curve: the coefficient at a
/// point y is the Minkowski sum of m * Delta_rho over all pullback entries
/// (y, m) of rays rho.
pub fn restrict_to_curve(
    divisor: &PolyhedralDivisor,
    pullbacks: &BTreeMap<usize, Vec<(String, u64)>>,
    target: &Base,
) -> Result<PolyhedralDivisor> {
    let ray_count = match divisor.base() {
        Base::Toric(fan) => fan.rays().len(),
        _ => return Err(Error::UnsupportedBase),
    };
    if !target.is_curve() {
        return Err(Error::UnsupportedBase);
    }
    let sigma = divisor.tail().clone();
    let mut acc: BTreeMap<String, TailedPolyhedron> = BTreeMap::new();
    for (&ray, hits) in pullbacks {
        if ray >= ray_count {
            return Err(Error::UnknownRay(ray.to_string()));
        }
        let coefficient = divisor.coefficient(&DivisorSite::Ray(ray));
        for (label, multiplicity) in hits {
            if *multiplicity == 0 {
                return Err(Error::Invalid("pullback multiplicity must be positive".into()));
            }
            let scaled = coefficient.scale(&Rat::from_integer(Int::from(*multiplicity)))?;
            let entry = acc
                .remove(label)
                .unwrap_or_else(|| TailedPolyhedron::neutral(sigma.clone()));
            acc.insert(label.clone(), entry.minkowski_sum(&scaled)?);
        }
    }
    let entries: Vec<(DivisorSite, TailedPolyhedron)> = acc
        .into_iter()
        .map(|(label, poly)| (DivisorSite::Point(label), poly))
        .collect();
    PolyhedralDivisor::new(target.clone(), sigma, entries)
}
