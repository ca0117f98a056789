//! Convex rational polyhedral cones with exact arithmetic.
//!
//! A cone is stored canonically: extreme rays as primitive integer vectors
//! (reduced orthogonally modulo the lineality space and sorted), a Hermite
//! basis of the lineality lattice, and the dual description as a sorted list
//! of primitive halfspace normals. Equations are encoded as pairs of opposite
//! halfspaces. Two cones are equal as sets if and only if the structs are
//! equal, so the derived equality and ordering are meaningful.

use std::collections::BTreeSet;

use num::{Signed, Zero};

use crate::arith::{
    add_int, dot_int, dot_int_rat, int, neg_int, primitive, primitive_from_rat, sub_int, Int, Rat,
};
use crate::error::{Error, Result};
use crate::linalg::{
    rank_int, saturated_span_basis, smith_normal_form, solve_rat, IntMatrix,
};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cone {
    ambient: usize,
    rays: Vec<Vec<Int>>,
    lineality: Vec<Vec<Int>>,
    halfspaces: Vec<Vec<Int>>,
}

/// Raw double description step: generators of {x : <c, x> >= 0 for all c}.
/// Returns extreme rays (not yet reduced modulo lineality) and a spanning set
/// of the lineality space {x : <c, x> = 0 for all c}.
fn dd_generators(ambient: usize, constraints: &[Vec<Int>]) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
    let mut lin: Vec<Vec<Int>> = (0..ambient)
        .map(|i| {
            let mut e = vec![Int::zero(); ambient];
            e[i] = int(1);
            e
        })
        .collect();
    let mut rays: Vec<Vec<Int>> = Vec::new();
    let mut processed: Vec<Vec<Int>> = Vec::new();

    let cons: BTreeSet<Vec<Int>> = constraints
        .iter()
        .filter(|c| !c.iter().all(|x| x.is_zero()))
        .map(|c| primitive(c))
        .collect();

    for a in cons {
        let lin_pairings: Vec<Int> = lin.iter().map(|l| dot_int(&a, l)).collect();
        if let Some(i0) = lin_pairings.iter().position(|p| !p.is_zero()) {
            // the constraint cuts the lineality space: split off one
            // direction as a new ray, keep the rest orthogonal to it
            let mut l0 = lin.remove(i0);
            let mut d0 = lin_pairings[i0].clone();
            if d0.is_negative() {
                l0 = neg_int(&l0);
                d0 = -d0;
            }
            lin = lin
                .iter()
                .map(|l| {
                    let e = dot_int(&a, l);
                    primitive(&sub_int(&scale(&d0, l), &scale(&e, &l0)))
                })
                .collect();
            rays = rays
                .iter()
                .map(|r| {
                    let e = dot_int(&a, r);
                    primitive(&sub_int(&scale(&d0, r), &scale(&e, &l0)))
                })
                .collect();
            rays.push(l0);
            processed.push(a);
            continue;
        }

        let evals: Vec<Int> = rays.iter().map(|r| dot_int(&a, r)).collect();
        let has_neg = evals.iter().any(|e| e.is_negative());
        if !has_neg {
            processed.push(a);
            continue;
        }
        let actives: Vec<Vec<usize>> = rays
            .iter()
            .map(|r| {
                processed
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| dot_int(c, r).is_zero())
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        let ell = lin.len();
        let quotient_dim = ambient - ell;
        let mut new_rays: Vec<Vec<Int>> = Vec::new();
        for (r, e) in rays.iter().zip(&evals) {
            if !e.is_negative() {
                new_rays.push(r.clone());
            }
        }
        for (pi, ep) in evals.iter().enumerate() {
            if !ep.is_positive() {
                continue;
            }
            for (ni, en) in evals.iter().enumerate() {
                if !en.is_negative() {
                    continue;
                }
                if quotient_dim >= 2 {
                    let common: Vec<Vec<Int>> = actives[pi]
                        .iter()
                        .filter(|j| actives[ni].contains(j))
                        .map(|&j| processed[j].clone())
                        .collect();
                    if rank_int(&common) != quotient_dim - 2 {
                        continue;
                    }
                }
                let w = primitive(&sub_int(
                    &scale(ep, &rays[ni]),
                    &scale(en, &rays[pi]),
                ));
                if w.iter().all(|x| x.is_zero()) {
                    continue;
                }
                if !lin.is_empty() {
                    let mut with = lin.clone();
                    with.push(w.clone());
                    if rank_int(&with) == rank_int(&lin) {
                        continue;
                    }
                }
                new_rays.push(w);
            }
        }
        let mut seen = BTreeSet::new();
        new_rays.retain(|r| seen.insert(r.clone()));
        rays = new_rays;
        processed.push(a);
    }

    // keep only extreme rays: the active constraints must cut down to a
    // one-dimensional face over the lineality space
    let ell = lin.len();
    let rank_all = ambient - ell;
    rays.retain(|r| {
        if rank_all == 0 {
            return false;
        }
        let active: Vec<Vec<Int>> = processed
            .iter()
            .filter(|c| dot_int(c, r).is_zero())
            .cloned()
            .collect();
        rank_int(&active) == rank_all - 1
    });
    (rays, lin)
}

fn scale(k: &Int, v: &[Int]) -> Vec<Int> {
    v.iter().map(|x| k * x).collect()
}

/// Canonical double description: extreme rays reduced orthogonally modulo
/// the lineality space, sorted; lineality as a Hermite basis of its lattice.
fn dd_canonical(ambient: usize, constraints: &[Vec<Int>]) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
    let (rays, lin_raw) = dd_generators(ambient, constraints);
    let lineality = saturated_span_basis(ambient, &lin_raw);
    let mut out: Vec<Vec<Int>> = rays
        .iter()
        .map(|r| project_off(r, &lineality))
        .collect();
    let mut seen = BTreeSet::new();
    out.retain(|r| seen.insert(r.clone()));
    out.sort();
    (out, lineality)
}

/// Primitive representative of r orthogonal to the span of the given rows.
fn project_off(r: &[Int], lin: &[Vec<Int>]) -> Vec<Int> {
    if lin.is_empty() {
        return primitive(r);
    }
    // solve (L L^T) c = L r, subtract L^T c
    let gram: Vec<Vec<Rat>> = lin
        .iter()
        .map(|a| {
            lin.iter()
                .map(|b| Rat::from_integer(dot_int(a, b)))
                .collect()
        })
        .collect();
    let rhs: Vec<Rat> = lin.iter().map(|a| Rat::from_integer(dot_int(a, r))).collect();
    let c = solve_rat(&gram, &rhs).expect("gram matrix of independent rows is invertible");
    let mut out: Vec<Rat> = r.iter().map(|x| Rat::from_integer(x.clone())).collect();
    for (ci, l) in c.iter().zip(lin) {
        for (o, li) in out.iter_mut().zip(l) {
            *o -= ci * Rat::from_integer(li.clone());
        }
    }
    primitive_from_rat(&out)
}

impl Cone {
    /// Cone generated by the given rays and lines.
    pub fn from_generators(ambient: usize, rays: &[Vec<Int>], lines: &[Vec<Int>]) -> Cone {
        for v in rays.iter().chain(lines) {
            assert_eq!(v.len(), ambient, "generator has wrong dimension");
        }
        let mut cons: Vec<Vec<Int>> = rays.to_vec();
        for l in lines {
            cons.push(l.clone());
            cons.push(neg_int(l));
        }
        let (dual_rays, dual_lin) = dd_canonical(ambient, &cons);
        let halfspaces = assemble_halfspaces(dual_rays, dual_lin);
        let (rays, lineality) = dd_canonical(ambient, &halfspaces);
        Cone {
            ambient,
            rays,
            lineality,
            halfspaces,
        }
    }

    pub fn from_rays(ambient: usize, rays: &[Vec<Int>]) -> Cone {
        Self::from_generators(ambient, rays, &[])
    }

    pub fn from_halfspaces(ambient: usize, normals: &[Vec<Int>]) -> Cone {
        for v in normals {
            assert_eq!(v.len(), ambient, "normal has wrong dimension");
        }
        let (rays, lin) = dd_canonical(ambient, normals);
        Self::from_generators(ambient, &rays, &lin)
    }

    pub fn zero(ambient: usize) -> Cone {
        Self::from_rays(ambient, &[])
    }

    pub fn full_space(ambient: usize) -> Cone {
        Self::from_halfspaces(ambient, &[])
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    pub fn lineality(&self) -> &[Vec<Int>] {
        &self.lineality
    }

    pub fn halfspaces(&self) -> &[Vec<Int>] {
        &self.halfspaces
    }

    /// Rays, lines and their negatives: a generating set of the cone.
    pub fn generating_set(&self) -> Vec<Vec<Int>> {
        let mut gens = self.rays.clone();
        for l in &self.lineality {
            gens.push(l.clone());
            gens.push(neg_int(l));
        }
        gens
    }

    pub fn dim(&self) -> usize {
        let mut gens = self.rays.clone();
        gens.extend(self.lineality.iter().cloned());
        rank_int(&gens)
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.halfspaces
            .iter()
            .all(|h| !dot_int_rat(h, v).is_negative())
    }

    pub fn contains_int(&self, v: &[Int]) -> bool {
        self.halfspaces.iter().all(|h| !dot_int(h, v).is_negative())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other
            .generating_set()
            .iter()
            .all(|g| self.contains_int(g))
    }

    /// True when v lies in the relative interior.
    pub fn relint_contains_int(&self, v: &[Int]) -> bool {
        if !self.contains_int(v) {
            return false;
        }
        self.halfspaces.iter().all(|h| {
            let is_equation = self.halfspaces.binary_search(&neg_int(h)).is_ok();
            is_equation || dot_int(h, v).is_positive()
        })
    }

    /// An integral point in the relative interior: the sum of the rays.
    pub fn relint_point(&self) -> Vec<Int> {
        let mut p = vec![Int::zero(); self.ambient];
        for r in &self.rays {
            p = add_int(&p, r);
        }
        p
    }

    pub fn dual(&self) -> Cone {
        Cone::from_rays(self.ambient, &self.halfspaces)
    }

    pub fn intersect(&self, other: &Cone) -> Cone {
        assert_eq!(self.ambient, other.ambient, "ambient rank mismatch");
        let mut normals = self.halfspaces.clone();
        normals.extend(other.halfspaces.iter().cloned());
        Cone::from_halfspaces(self.ambient, &normals)
    }

    /// The smallest face containing a point of the cone.
    pub fn minimal_face_containing(&self, v: &[Rat]) -> Result<Cone> {
        if !self.contains(v) {
            return Err(Error::OutsideSupport);
        }
        let mut normals = self.halfspaces.clone();
        for h in &self.halfspaces {
            if dot_int_rat(h, v).is_zero() {
                normals.push(neg_int(h));
            }
        }
        Ok(Cone::from_halfspaces(self.ambient, &normals))
    }

    /// All faces, the cone itself and its minimal face included.
    pub fn faces(&self) -> Vec<Cone> {
        let mut seen: BTreeSet<Cone> = BTreeSet::new();
        let mut queue = vec![self.clone()];
        seen.insert(self.clone());
        while let Some(c) = queue.pop() {
            for h in &self.halfspaces {
                let vanishes = c.generating_set().iter().all(|g| dot_int(h, g).is_zero());
                if vanishes {
                    continue;
                }
                let mut normals = c.halfspaces.clone();
                normals.push(h.clone());
                normals.push(neg_int(h));
                let f = Cone::from_halfspaces(self.ambient, &normals);
                if seen.insert(f.clone()) {
                    queue.push(f);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn facets(&self) -> Vec<Cone> {
        let d = self.dim();
        if d == 0 {
            return Vec::new();
        }
        let mut seen: BTreeSet<Cone> = BTreeSet::new();
        for h in &self.halfspaces {
            let vanishes = self.generating_set().iter().all(|g| dot_int(h, g).is_zero());
            if vanishes {
                continue;
            }
            let mut normals = self.halfspaces.clone();
            normals.push(neg_int(h));
            let f = Cone::from_halfspaces(self.ambient, &normals);
            if f.dim() + 1 == d {
                seen.insert(f);
            }
        }
        seen.into_iter().collect()
    }

    pub fn is_face_of(&self, other: &Cone) -> bool {
        if self.ambient != other.ambient || !other.contains_cone(self) {
            return false;
        }
        let mut normals = other.halfspaces.clone();
        for h in &other.halfspaces {
            let vanishes = self.generating_set().iter().all(|g| dot_int(h, g).is_zero());
            if vanishes {
                normals.push(neg_int(h));
            }
        }
        Cone::from_halfspaces(self.ambient, &normals) == *self
    }

    /// Image under an integer linear map.
    pub fn image(&self, map: &IntMatrix) -> Cone {
        assert_eq!(map.cols(), self.ambient, "map domain mismatch");
        let rays: Vec<Vec<Int>> = self.rays.iter().map(|r| map.apply(r)).collect();
        let lines: Vec<Vec<Int>> = self.lineality.iter().map(|l| map.apply(l)).collect();
        Cone::from_generators(map.rows(), &rays, &lines)
    }

    /// Preimage under an integer linear map.
    pub fn preimage(&self, map: &IntMatrix) -> Cone {
        assert_eq!(map.rows(), self.ambient, "map codomain mismatch");
        let mt = map.transpose();
        let normals: Vec<Vec<Int>> = self.halfspaces.iter().map(|h| mt.apply(h)).collect();
        Cone::from_halfspaces(map.cols(), &normals)
    }
}

fn assemble_halfspaces(dual_rays: Vec<Vec<Int>>, dual_lin: Vec<Vec<Int>>) -> Vec<Vec<Int>> {
    let mut hs: BTreeSet<Vec<Int>> = dual_rays.into_iter().collect();
    for l in dual_lin {
        hs.insert(neg_int(&l));
        hs.insert(l);
    }
    hs.into_iter().collect()
}

/// Minimal generating set of the semigroup of lattice points of a pointed
/// cone. Computed by triangulating the cone, enumerating the fundamental
/// parallelepiped of every simplicial piece, and discarding reducible
/// elements.
pub fn hilbert_basis(cone: &Cone) -> Result<Vec<Vec<Int>>> {
    if !cone.is_pointed() {
        return Err(Error::NotPointed);
    }
    if cone.dim() == 0 {
        return Ok(Vec::new());
    }
    let mut candidates: BTreeSet<Vec<Int>> = cone.rays.iter().cloned().collect();
    for simplex in triangulate(cone) {
        let rays: Vec<Vec<Int>> = simplex.iter().map(|&i| cone.rays[i].clone()).collect();
        for p in parallelepiped_points(cone.ambient, &rays) {
            if !p.iter().all(|x| x.is_zero()) {
                candidates.insert(p);
            }
        }
    }
    // grade by a functional strictly positive on the cone minus the origin
    let mut weight = vec![Int::zero(); cone.ambient];
    for h in &cone.halfspaces {
        weight = add_int(&weight, h);
    }
    let mut graded: Vec<(Int, Vec<Int>)> = candidates
        .into_iter()
        .map(|c| (dot_int(&weight, &c), c))
        .collect();
    graded.sort();
    let mut kept: Vec<Vec<Int>> = Vec::new();
    for (_w, c) in graded {
        if !in_monoid(&c, &kept, cone) {
            kept.push(c);
        }
    }
    kept.sort();
    Ok(kept)
}

fn in_monoid(x: &[Int], gens: &[Vec<Int>], cone: &Cone) -> bool {
    if x.iter().all(|v| v.is_zero()) {
        return true;
    }
    let mut memo: BTreeSet<Vec<Int>> = BTreeSet::new();
    fn go(x: &[Int], gens: &[Vec<Int>], cone: &Cone, memo: &mut BTreeSet<Vec<Int>>) -> bool {
        for g in gens {
            let y = sub_int(x, g);
            if y.iter().all(|v| v.is_zero()) {
                return true;
            }
            if !cone.contains_int(&y) || memo.contains(&y) {
                continue;
            }
            if go(&y, gens, cone, memo) {
                return true;
            }
            memo.insert(y);
        }
        false
    }
    go(x, gens, cone, &mut memo)
}

/// Triangulation of a pointed cone into simplicial subcones, as index sets
/// into its ray list.
fn triangulate(cone: &Cone) -> Vec<Vec<usize>> {
    let d = cone.dim();
    if cone.rays.len() == d {
        return vec![(0..d).collect()];
    }
    let apex = &cone.rays[0];
    let mut simplices = Vec::new();
    for facet in cone.facets() {
        if facet.contains_int(apex) {
            continue;
        }
        let index_of = |v: &Vec<Int>| {
            cone.rays
                .iter()
                .position(|r| r == v)
                .expect("facet ray must be a ray of the cone")
        };
        for sub in triangulate(&facet) {
            let mut s: Vec<usize> = sub.iter().map(|&i| index_of(&facet.rays[i])).collect();
            s.push(0);
            s.sort();
            simplices.push(s);
        }
    }
    simplices
}

/// Lattice points {sum t_i r_i : t in [0,1)^d} for independent integer rays.
fn parallelepiped_points(ambient: usize, rays: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let d = rays.len();
    let mut mat = IntMatrix::zero(ambient, d);
    for (j, r) in rays.iter().enumerate() {
        for (i, x) in r.iter().enumerate() {
            mat.set(i, j, x.clone());
        }
    }
    let (_u, s, v) = smith_normal_form(&mat);
    let diag: Vec<Int> = (0..d).map(|i| s.get(i, i).clone()).collect();
    assert!(
        diag.iter().all(|x| x.is_positive()),
        "parallelepiped rays must be linearly independent"
    );
    let mut points = Vec::new();
    let mut y = vec![Int::zero(); d];
    loop {
        // t = V * (y_i / d_i), folded into [0,1)^d
        let t: Vec<Rat> = (0..d)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..d {
                    acc += Rat::new(v.get(i, j) * &y[j], diag[j].clone());
                }
                let f = acc.floor();
                acc - f
            })
            .collect();
        let x: Vec<Int> = (0..ambient)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..d {
                    acc += Rat::from_integer(mat.get(i, j).clone()) * &t[j];
                }
                assert!(acc.denom() == &int(1), "parallelepiped point not integral");
                acc.numer().clone()
            })
            .collect();
        points.push(x);
        // odometer over 0 <= y_i < d_i
        let mut k = 0;
        loop {
            if k == d {
                points.sort();
                points.dedup();
                return points;
            }
            y[k] += 1;
            if y[k] < diag[k] {
                break;
            }
            y[k] = Int::zero();
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int_vec, rat_vec};

    fn c2(rays: &[Vec<i64>]) -> Cone {
        Cone::from_rays(2, &rays.iter().map(|r| int_vec(r)).collect::<Vec<_>>())
    }

    #[test]
    fn quadrant_is_self_dual() {
        let q = c2(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(q.dual(), q);
        assert!(q.is_pointed());
        assert_eq!(q.dim(), 2);
    }

    #[test]
    fn dual_of_narrow_cone() {
        // dual of cone((1,0),(1,12)) is cone((0,1),(12,-1))
        let sigma = c2(&[vec![1, 0], vec![1, 12]]);
        let dual = sigma.dual();
        assert_eq!(dual.rays(), &[int_vec(&[0, 1]), int_vec(&[12, -1])]);
        // oracle: every dual ray pairs nonnegatively with every primal ray
        for u in dual.rays() {
            for r in sigma.rays() {
                assert!(!dot_int(u, r).is_negative());
            }
        }
        assert_eq!(dual.dual(), sigma, "double dual returns the cone");
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let c = c2(&[vec![1, 0], vec![1, 1], vec![0, 1]]);
        assert_eq!(c.rays(), &[int_vec(&[0, 1]), int_vec(&[1, 0])]);
    }

    #[test]
    fn halfplane_has_lineality() {
        let h = Cone::from_halfspaces(2, &[int_vec(&[0, 1])]);
        assert_eq!(h.lineality(), &[int_vec(&[1, 0])]);
        assert_eq!(h.rays(), &[int_vec(&[0, 1])]);
        assert!(!h.is_pointed());
        assert_eq!(h.dim(), 2);
    }

    #[test]
    fn full_space_and_zero_cone() {
        let f = Cone::full_space(2);
        assert_eq!(f.rays().len(), 0);
        assert_eq!(f.lineality().len(), 2);
        assert_eq!(f.dim(), 2);
        let z = Cone::zero(2);
        assert!(z.is_zero());
        assert_eq!(z.dim(), 0);
        assert_eq!(z.dual(), f);
        assert_eq!(f.dual(), z);
        // rank zero world
        let z0 = Cone::zero(0);
        assert_eq!(z0.dim(), 0);
        assert!(z0.is_pointed());
    }

    #[test]
    fn containment_and_relative_interior() {
        let sigma = c2(&[vec![1, 0], vec![1, 12]]);
        assert!(sigma.contains(&rat_vec(&[(1, 12), (0, 1)])));
        assert!(sigma.contains(&rat_vec(&[(1, 12), (1, 1)])));
        assert!(!sigma.contains(&rat_vec(&[(0, 1), (1, 1)])));
        assert!(sigma.relint_contains_int(&int_vec(&[1, 5])));
        assert!(!sigma.relint_contains_int(&int_vec(&[1, 0])));
        assert!(!sigma.relint_contains_int(&int_vec(&[0, 0])));
    }

    #[test]
    fn face_lattice_of_quadrant() {
        let q = c2(&[vec![1, 0], vec![0, 1]]);
        let faces = q.faces();
        assert_eq!(faces.len(), 4, "quadrant has 4 faces");
        for f in &faces {
            assert!(f.is_face_of(&q));
        }
        let facets = q.facets();
        assert_eq!(facets.len(), 2);
    }

    #[test]
    fn face_test_rejects_crossing_intersections() {
        let c1 = c2(&[vec![1, 0], vec![1, 1]]);
        let c2_ = c2(&[vec![2, 1], vec![0, 1]]);
        let i = c1.intersect(&c2_);
        assert_eq!(i.dim(), 2);
        assert!(!i.is_face_of(&c1));
        assert!(!i.is_face_of(&c2_));
        // a genuine face passes
        let ray = c2(&[vec![1, 1]]);
        assert!(ray.is_face_of(&c1));
        assert!(!ray.is_face_of(&c2_));
    }

    #[test]
    fn minimal_face_of_point() {
        let q = c2(&[vec![1, 0], vec![0, 1]]);
        let f = q.minimal_face_containing(&rat_vec(&[(1, 1), (0, 1)])).unwrap();
        assert_eq!(f, c2(&[vec![1, 0]]));
        let f = q.minimal_face_containing(&rat_vec(&[(0, 1), (0, 1)])).unwrap();
        assert!(f.is_zero());
        assert_eq!(
            q.minimal_face_containing(&rat_vec(&[(-1, 1), (0, 1)])),
            Err(Error::OutsideSupport)
        );
    }

    #[test]
    fn image_and_preimage() {
        // weights (2,3): preimage of the quadrant under t -> (2t, 3t)
        let f = IntMatrix::from_i64(&[vec![2], vec![3]]);
        let quadrant = c2(&[vec![1, 0], vec![0, 1]]);
        let sigma = quadrant.preimage(&f);
        assert_eq!(sigma, Cone::from_rays(1, &[int_vec(&[1])]));
        let p = IntMatrix::from_i64(&[vec![3, -2]]);
        let img = quadrant.image(&p);
        assert_eq!(img, Cone::full_space(1));
    }

    #[test]
    fn hilbert_basis_examples() {
        let q = c2(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(
            hilbert_basis(&q).unwrap(),
            vec![int_vec(&[0, 1]), int_vec(&[1, 0])]
        );
        let c = c2(&[vec![1, 0], vec![1, 2]]);
        assert_eq!(
            hilbert_basis(&c).unwrap(),
            vec![int_vec(&[1, 0]), int_vec(&[1, 1]), int_vec(&[1, 2])]
        );
        let halfplane = Cone::from_halfspaces(2, &[int_vec(&[0, 1])]);
        assert_eq!(hilbert_basis(&halfplane), Err(Error::NotPointed));
    }

    #[test]
    fn hilbert_basis_of_wide_cone() {
        // cone((1,0),(1,12)): the dual of the weight cone in the threefold
        // fixture; its Hilbert basis is (1,k) for k = 0..12
        let c = c2(&[vec![1, 0], vec![1, 12]]);
        let hb = hilbert_basis(&c).unwrap();
        let expect: Vec<Vec<Int>> = (0..=12).map(|k| int_vec(&[1, k])).collect();
        assert_eq!(hb, expect);
    }

    #[test]
    fn hilbert_basis_in_dimension_three() {
        let c = Cone::from_rays(
            3,
            &[
                int_vec(&[1, 0, 0]),
                int_vec(&[0, 1, 0]),
                int_vec(&[1, 0, 2]),
                int_vec(&[0, 1, 2]),
            ],
        );
        let hb = hilbert_basis(&c).unwrap();
        assert!(hb.contains(&int_vec(&[1, 0, 1])) || hb.contains(&int_vec(&[0, 1, 1])));
        for x in &hb {
            assert!(c.contains_int(x));
        }
        // every parallelepiped point must be reachable from the basis
        assert!(in_monoid(&int_vec(&[1, 1, 2]), &hb, &c));
    }

    #[test]
    fn intersection_of_adjacent_chambers_is_shared_wall() {
        let a = c2(&[vec![1, 0], vec![0, 1]]);
        let b = c2(&[vec![1, 0], vec![12, -1]]);
        let w = a.intersect(&b);
        assert_eq!(w, c2(&[vec![1, 0]]));
        assert!(w.is_face_of(&a) && w.is_face_of(&b));
    }
}
