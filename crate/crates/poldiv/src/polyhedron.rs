//! Tailed polyhedra: convex hulls of finitely many rational points plus a
//! pointed recession cone, with the Minkowski semigroup structure, support
//! function evaluation and normal quasifans.

use num::{One, Signed, Zero};

use crate::arith::{
    add_rat, dot_int_rat, int, primitive_from_rat, rat_vec_is_integer, scale_rat, sub_rat, Int,
    Rat,
};
use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::quasifan::QuasiFan;

/// conv(vertices) + tail with pointed tail cone. The stored vertex list is
/// exactly the vertex set of the polyhedron, sorted, so derived equality is
/// set equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TailedPolyhedron {
    ambient: usize,
    vertices: Vec<Vec<Rat>>,
    tail: Cone,
}

impl TailedPolyhedron {
    pub fn new(points: &[Vec<Rat>], tail: Cone) -> Result<TailedPolyhedron> {
        if points.is_empty() {
            return Err(Error::EmptyPolyhedron);
        }
        if !tail.is_pointed() {
            return Err(Error::NotPointed);
        }
        let n = tail.ambient_rank();
        for p in points {
            assert_eq!(p.len(), n, "point has wrong dimension");
        }
        // homogenize: points at height 1, tail rays at height 0; the
        // vertices are the extreme rays of positive height
        let mut gens: Vec<Vec<Int>> = Vec::new();
        for p in points {
            let mut hp = p.to_vec();
            hp.push(Rat::one());
            gens.push(primitive_from_rat(&hp));
        }
        for r in tail.rays() {
            let mut hr = r.clone();
            hr.push(Int::zero());
            gens.push(hr);
        }
        let hom = Cone::from_generators(n + 1, &gens, &[]);
        let mut vertices: Vec<Vec<Rat>> = Vec::new();
        for r in hom.rays() {
            let t = &r[n];
            if t.is_positive() {
                vertices.push(
                    r[..n]
                        .iter()
                        .map(|x| Rat::new(x.clone(), t.clone()))
                        .collect(),
                );
            }
        }
        vertices.sort();
        debug_assert!(!vertices.is_empty());
        Ok(TailedPolyhedron {
            ambient: n,
            vertices,
            tail,
        })
    }

    /// The neutral element of the Minkowski semigroup: 0 + tail.
    pub fn neutral(tail: Cone) -> TailedPolyhedron {
        let n = tail.ambient_rank();
        TailedPolyhedron::new(&[vec![Rat::zero(); n]], tail).expect("tail cone must be pointed")
    }

    fn from_canonical_parts(ambient: usize, vertices: Vec<Vec<Rat>>, tail: Cone) -> Self {
        TailedPolyhedron {
            ambient,
            vertices,
            tail,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.vertices
    }

    pub fn tail(&self) -> &Cone {
        &self.tail
    }

    pub fn is_integral(&self) -> bool {
        self.vertices.iter().all(|v| rat_vec_is_integer(v))
    }

    pub fn is_neutral(&self) -> bool {
        self.vertices.len() == 1 && self.vertices[0].iter().all(|x| x.is_zero())
    }

    /// True when u has a finite minimum on the polyhedron, that is when u
    /// pairs nonnegatively with the tail cone.
    pub fn admits(&self, u: &[Rat]) -> bool {
        self.tail
            .generating_set()
            .iter()
            .all(|g| !dot_int_rat(g, u).is_negative())
    }

    /// Support value min over the polyhedron of <u, .>, attained at a vertex.
    pub fn eval(&self, u: &[Rat]) -> Result<Rat> {
        if !self.admits(u) {
            return Err(Error::OutsideDomain);
        }
        Ok(self
            .vertices
            .iter()
            .map(|v| {
                v.iter()
                    .zip(u)
                    .map(|(a, b)| a * b)
                    .fold(Rat::zero(), |acc, x| acc + x)
            })
            .min()
            .expect("vertex list is nonempty"))
    }

    pub fn eval_int(&self, u: &[Int]) -> Result<Rat> {
        let ur: Vec<Rat> = u.iter().map(|x| Rat::from_integer(x.clone())).collect();
        self.eval(&ur)
    }

    pub fn minkowski_sum(&self, other: &TailedPolyhedron) -> Result<TailedPolyhedron> {
        if self.tail != other.tail {
            return Err(Error::TailMismatch);
        }
        let mut sums = Vec::new();
        for a in &self.vertices {
            for b in &other.vertices {
                sums.push(add_rat(a, b));
            }
        }
        TailedPolyhedron::new(&sums, self.tail.clone())
    }

    pub fn scale(&self, alpha: &Rat) -> Result<TailedPolyhedron> {
        if !alpha.is_positive() {
            return Err(Error::NonPositiveScalar);
        }
        let vertices: Vec<Vec<Rat>> = self.vertices.iter().map(|v| scale_rat(alpha, v)).collect();
        Ok(TailedPolyhedron::from_canonical_parts(
            self.ambient,
            vertices,
            self.tail.clone(),
        ))
    }

    pub fn translate(&self, t: &[Rat]) -> TailedPolyhedron {
        let mut vertices: Vec<Vec<Rat>> = self.vertices.iter().map(|v| add_rat(v, t)).collect();
        vertices.sort();
        TailedPolyhedron::from_canonical_parts(self.ambient, vertices, self.tail.clone())
    }

    /// The face on which u attains its minimum.
    pub fn face_at(&self, u: &[Rat]) -> Result<TailedPolyhedron> {
        if !self.admits(u) {
            return Err(Error::OutsideDomain);
        }
        let h = self.eval(u)?;
        let vertices: Vec<Vec<Rat>> = self
            .vertices
            .iter()
            .filter(|v| {
                v.iter()
                    .zip(u)
                    .map(|(a, b)| a * b)
                    .fold(Rat::zero(), |acc, x| acc + x)
                    == h
            })
            .cloned()
            .collect();
        let un = primitive_from_rat(u);
        let mut normals = self.tail.halfspaces().to_vec();
        normals.push(un.clone());
        normals.push(un.iter().map(|x| -x).collect());
        let tail_face = Cone::from_halfspaces(self.ambient, &normals);
        Ok(TailedPolyhedron::from_canonical_parts(
            self.ambient,
            vertices,
            tail_face,
        ))
    }

    /// Normal quasifan: one maximal cone per vertex, consisting of the
    /// weights minimized at that vertex; supported on the dual of the tail.
    pub fn normal_quasifan(&self) -> QuasiFan {
        let mut cones = Vec::new();
        for v in &self.vertices {
            let mut normals: Vec<Vec<Int>> = self.tail.rays().to_vec();
            for w in &self.vertices {
                if w != v {
                    normals.push(primitive_from_rat(&sub_rat(w, v)));
                }
            }
            cones.push(Cone::from_halfspaces(self.ambient, &normals));
        }
        QuasiFan::from_cones(self.ambient, cones)
    }

    /// All faces, one per cone of the normal quasifan, the polyhedron itself
    /// included.
    pub fn faces(&self) -> Vec<TailedPolyhedron> {
        let mut out: Vec<TailedPolyhedron> = self
            .normal_quasifan()
            .all_cones()
            .iter()
            .map(|lambda| {
                let u: Vec<Rat> = lambda
                    .relint_point()
                    .iter()
                    .map(|x| Rat::from_integer(x.clone()))
                    .collect();
                self.face_at(&u).expect("cell lies in the weight cone")
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Rebuild the polyhedron from its support function, sampled at the
    /// generators of the normal quasifan cells.
    pub fn support_function_roundtrip(&self) -> Result<TailedPolyhedron> {
        let mut rows: Vec<(Vec<Int>, Rat)> = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for cell in self.normal_quasifan().max_cones() {
            for g in cell.generating_set() {
                if seen.insert(g.clone()) {
                    let h = self.eval_int(&g)?;
                    rows.push((g, h));
                }
            }
        }
        let (points, recession) =
            polyhedron_generators(self.ambient, &rows).ok_or(Error::EmptyPolyhedron)?;
        TailedPolyhedron::new(&points, recession)
    }
}

/// V-representation of {x : <a_i, x> >= b_i}: generator points and the
/// recession cone, or None when the system is infeasible.
pub fn polyhedron_generators(
    ambient: usize,
    rows: &[(Vec<Int>, Rat)],
) -> Option<(Vec<Vec<Rat>>, Cone)> {
    let mut normals: Vec<Vec<Int>> = Vec::new();
    for (a, b) in rows {
        assert_eq!(a.len(), ambient, "inequality has wrong dimension");
        // <a, x> - b t >= 0, cleared of denominators
        let d = b.denom();
        let mut row: Vec<Int> = a.iter().map(|x| x * d).collect();
        row.push(-b.numer().clone());
        normals.push(row);
    }
    let mut t_row = vec![Int::zero(); ambient];
    t_row.push(int(1));
    normals.push(t_row);
    let hom = Cone::from_halfspaces(ambient + 1, &normals);
    let mut points = Vec::new();
    let mut recession_rays = Vec::new();
    for r in hom.rays() {
        let t = &r[ambient];
        if t.is_positive() {
            points.push(
                r[..ambient]
                    .iter()
                    .map(|x| Rat::new(x.clone(), t.clone()))
                    .collect::<Vec<Rat>>(),
            );
        } else {
            recession_rays.push(r[..ambient].to_vec());
        }
    }
    if points.is_empty() {
        return None;
    }
    let lines: Vec<Vec<Int>> = hom
        .lineality()
        .iter()
        .map(|l| l[..ambient].to_vec())
        .collect();
    let recession = Cone::from_generators(ambient, &recession_rays, &lines);
    Some((points, recession))
}

/// Formal difference of two tailed polyhedra with the same tail cone, the
/// Grothendieck group element plus - minus. Two differences are equivalent
/// exactly when all support evaluations agree, which by cancellation is the
/// cross sum test below.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FormalTailedDifference {
    plus: TailedPolyhedron,
    minus: TailedPolyhedron,
}

impl FormalTailedDifference {
    pub fn new(plus: TailedPolyhedron, minus: TailedPolyhedron) -> Result<Self> {
        if plus.tail() != minus.tail() {
            return Err(Error::TailMismatch);
        }
        Ok(FormalTailedDifference { plus, minus })
    }

    pub fn plus(&self) -> &TailedPolyhedron {
        &self.plus
    }

    pub fn minus(&self) -> &TailedPolyhedron {
        &self.minus
    }

    pub fn eval(&self, u: &[Rat]) -> Result<Rat> {
        Ok(self.plus.eval(u)? - self.minus.eval(u)?)
    }

    pub fn equivalent(&self, other: &FormalTailedDifference) -> Result<bool> {
        let lhs = self.plus.minkowski_sum(&other.minus)?;
        let rhs = other.plus.minkowski_sum(&self.minus)?;
        Ok(lhs == rhs)
    }
}
