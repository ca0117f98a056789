//! Quasifans: finite families of cones closed under taking faces whose
//! members meet in common faces. Stored by their maximal cones; faces are
//! derived on demand.

use std::collections::BTreeSet;

use crate::arith::{Int, Rat};
use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuasiFan {
    ambient: usize,
    max_cones: Vec<Cone>,
}

impl QuasiFan {
    /// Normalizes to maximal cones; face compatibility is checked separately
    /// by validate so that defective inputs can be diagnosed.
    pub fn from_cones(ambient: usize, cones: Vec<Cone>) -> QuasiFan {
        for c in &cones {
            assert_eq!(c.ambient_rank(), ambient, "cone has wrong ambient rank");
        }
        let distinct: BTreeSet<Cone> = cones.into_iter().collect();
        let max_cones: Vec<Cone> = distinct
            .iter()
            .filter(|c| !distinct.iter().any(|d| d != *c && d.contains_cone(c)))
            .cloned()
            .collect();
        QuasiFan { ambient, max_cones }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn max_cones(&self) -> &[Cone] {
        &self.max_cones
    }

    /// All faces of all maximal cones.
    pub fn all_cones(&self) -> Vec<Cone> {
        let mut out: BTreeSet<Cone> = BTreeSet::new();
        for c in &self.max_cones {
            out.extend(c.faces());
        }
        out.into_iter().collect()
    }

    /// Distinct extreme rays over all cones, sorted.
    pub fn rays(&self) -> Vec<Vec<Int>> {
        let mut out: BTreeSet<Vec<Int>> = BTreeSet::new();
        for c in &self.max_cones {
            out.extend(c.rays().iter().cloned());
        }
        out.into_iter().collect()
    }

    pub fn validate(&self) -> bool {
        for (i, a) in self.max_cones.iter().enumerate() {
            for b in &self.max_cones[i + 1..] {
                let m = a.intersect(b);
                if !m.is_face_of(a) || !m.is_face_of(b) {
                    return false;
                }
            }
        }
        true
    }

    /// Convex hull cone of the support.
    pub fn support_hull(&self) -> Cone {
        let mut rays = Vec::new();
        let mut lines = Vec::new();
        for c in &self.max_cones {
            rays.extend(c.rays().iter().cloned());
            lines.extend(c.lineality().iter().cloned());
        }
        Cone::from_generators(self.ambient, &rays, &lines)
    }

    pub fn contains(&self, u: &[Rat]) -> bool {
        self.max_cones.iter().any(|c| c.contains(u))
    }

    /// The unique minimal cone containing u.
    pub fn locate(&self, u: &[Rat]) -> Result<Cone> {
        for c in &self.max_cones {
            if c.contains(u) {
                return c.minimal_face_containing(u);
            }
        }
        Err(Error::OutsideSupport)
    }

    /// Coarsest quasifan refining both inputs; supports must agree.
    pub fn common_refinement(&self, other: &QuasiFan) -> Result<QuasiFan> {
        if self.ambient != other.ambient || self.support_hull() != other.support_hull() {
            return Err(Error::SupportMismatch);
        }
        let mut cells = Vec::new();
        for a in &self.max_cones {
            for b in &other.max_cones {
                cells.push(a.intersect(b));
            }
        }
        Ok(QuasiFan::from_cones(self.ambient, cells))
    }

    /// A fan is complete when its maximal cones are full dimensional and
    /// every facet of a maximal cone is shared with exactly one neighbour.
    pub fn is_complete(&self) -> bool {
        if self.max_cones.is_empty() {
            return false;
        }
        if self
            .max_cones
            .iter()
            .any(|c| c.dim() != self.ambient)
        {
            return false;
        }
        for c in &self.max_cones {
            for facet in c.facets() {
                let count = self
                    .max_cones
                    .iter()
                    .filter(|d| facet.is_face_of(d))
                    .count();
                if count != 2 {
                    return false;
                }
            }
        }
        true
    }
}

/// The coarsest quasifan supported on the image of delta that refines all
/// images of faces of delta. Cells are intersections of face images; an
/// intersection qualifies as a cell exactly when it equals the meet of all
/// face images containing its relative interior.
pub fn projected_face_fan(delta: &Cone, p: &IntMatrix) -> QuasiFan {
    assert_eq!(p.cols(), delta.ambient_rank(), "map domain mismatch");
    let ambient = p.rows();
    let images: BTreeSet<Cone> = delta.faces().iter().map(|f| f.image(p)).collect();
    let mut closure: BTreeSet<Cone> = images.clone();
    loop {
        let mut added: Vec<Cone> = Vec::new();
        for a in &closure {
            for b in &closure {
                let m = a.intersect(b);
                if !closure.contains(&m) {
                    added.push(m);
                }
            }
        }
        if added.is_empty() {
            break;
        }
        closure.extend(added);
    }
    let mut cells = Vec::new();
    for c in &closure {
        let x = c.relint_point();
        let mut meet: Option<Cone> = None;
        for img in &images {
            if img.contains_int(&x) {
                meet = Some(match meet {
                    None => img.clone(),
                    Some(m) => m.intersect(img),
                });
            }
        }
        if meet.as_ref() == Some(c) {
            cells.push(c.clone());
        }
    }
    QuasiFan::from_cones(ambient, cells)
}
