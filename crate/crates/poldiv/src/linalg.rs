//! Exact integer and rational linear algebra: Smith normal form, saturated
//! kernels, sections of split embeddings, invariant factors, Hermite bases.
//!
//! Everything here is deterministic. Pivot choices are by minimal absolute
//! value with first-position tie break, so equal inputs give equal outputs.

use num::{Integer, One, Signed, Zero};

use crate::arith::{dot_int, Int, Rat};
use crate::error::{Error, Result};

/// Dense row-major integer matrix. Also serves as a map of lattices
/// (columns = domain rank, rows = codomain rank).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for row in &rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
        }
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Int::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Int::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// Applies the matrix to a column vector of matching length.
    pub fn apply(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(v.len(), self.cols, "matrix apply shape mismatch");
        (0..self.rows).map(|i| dot_int(self.row(i), v)).collect()
    }

    pub fn apply_rat(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "matrix apply shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, x)| Rat::from_integer(a.clone()) * x)
                    .sum()
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }

    /// row_i -= q * row_k
    fn row_sub_mul(&mut self, i: usize, k: usize, q: &Int) {
        for j in 0..self.cols {
            let v = self.get(i, j) - q * self.get(k, j);
            self.set(i, j, v);
        }
    }

    /// col_j -= q * col_k
    fn col_sub_mul(&mut self, j: usize, k: usize, q: &Int) {
        for i in 0..self.rows {
            let v = self.get(i, j) - q * self.get(i, k);
            self.set(i, j, v);
        }
    }

    /// row_k += row_i
    fn row_add(&mut self, k: usize, i: usize) {
        for j in 0..self.cols {
            let v = self.get(k, j) + self.get(i, j);
            self.set(k, j, v);
        }
    }

    pub fn to_rat_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| Rat::from_integer(x.clone()))
                    .collect()
            })
            .collect()
    }
}

/// Smith normal form. Returns (U, S, V) with U * A * V = S, U and V
/// unimodular, S diagonal with nonnegative entries d_1 | d_2 | ... .
pub fn smith_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let m = a.rows();
    let n = a.cols();
    let mut s = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for k in 0..m.min(n) {
        'pivot: loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..m {
                for j in k..n {
                    let x = s.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    match &pivot {
                        None => pivot = Some((i, j)),
                        Some((pi, pj)) => {
                            if x.abs() < s.get(*pi, *pj).abs() {
                                pivot = Some((i, j));
                            }
                        }
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return (u, s, v);
            };
            s.swap_rows(k, pi);
            u.swap_rows(k, pi);
            s.swap_cols(k, pj);
            v.swap_cols(k, pj);
            if s.get(k, k).is_negative() {
                s.negate_row(k);
                u.negate_row(k);
            }
            let d = s.get(k, k).clone();
            let mut dirty = false;
            for i in k + 1..m {
                let q = s.get(i, k).div_floor(&d);
                if !q.is_zero() {
                    s.row_sub_mul(i, k, &q);
                    u.row_sub_mul(i, k, &q);
                }
                if !s.get(i, k).is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..n {
                let q = s.get(k, j).div_floor(&d);
                if !q.is_zero() {
                    s.col_sub_mul(j, k, &q);
                    v.col_sub_mul(j, k, &q);
                }
                if !s.get(k, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }
            // pivot must divide the rest of the block
            for i in k + 1..m {
                for j in k + 1..n {
                    if !(s.get(i, j) % &d).is_zero() {
                        s.row_add(k, i);
                        u.row_add(k, i);
                        continue 'pivot;
                    }
                }
            }
            break;
        }
    }
    (u, s, v)
}

fn snf_diagonal(s: &IntMatrix) -> Vec<Int> {
    (0..s.rows().min(s.cols()))
        .map(|i| s.get(i, i).clone())
        .collect()
}

fn snf_rank(s: &IntMatrix) -> usize {
    snf_diagonal(s).iter().filter(|d| !d.is_zero()).count()
}

/// Basis of the saturated kernel ker(A) ∩ Z^cols, in Hermite normal form.
/// Empty when A is injective.
pub fn kernel_basis(a: &IntMatrix) -> Vec<Vec<Int>> {
    let (_u, s, v) = smith_normal_form(a);
    let rank = snf_rank(&s);
    let gens: Vec<Vec<Int>> = (rank..a.cols()).map(|j| v.col(j)).collect();
    hermite_basis(a.cols(), &gens)
}

/// Left inverse s of an injective matrix F with torsion-free cokernel, so
/// that s * F is the identity on the domain. Derived from the Smith normal
/// form transforms, hence deterministic.
pub fn section_of_embedding(f: &IntMatrix) -> Result<IntMatrix> {
    let k = f.cols();
    if f.rows() < k {
        return Err(Error::NotSplit);
    }
    let (u, s, v) = smith_normal_form(f);
    for i in 0..k {
        if !s.get(i, i).is_one() {
            return Err(Error::NotSplit);
        }
    }
    let u_top = IntMatrix::from_rows((0..k).map(|i| u.row(i).to_vec()).collect());
    let sec = v.mul(&u_top);
    debug_assert_eq!(sec.mul(f), IntMatrix::identity(k));
    Ok(sec)
}

/// Invariant factors of Z^rank / <gens>, padded with zeros for free summands.
/// Entries follow the Smith normal form convention: d_1 | d_2 | ..., each
/// nonnegative, zeros encoding free summands.
pub fn quotient_invariants(rank: usize, gens: &[Vec<Int>]) -> Vec<Int> {
    for g in gens {
        assert_eq!(g.len(), rank, "generator has wrong length");
    }
    if gens.is_empty() {
        return vec![Int::zero(); rank];
    }
    // generators as columns: the quotient is the cokernel of Z^g -> Z^rank
    let mut m = IntMatrix::zero(rank, gens.len());
    for (j, g) in gens.iter().enumerate() {
        for (i, x) in g.iter().enumerate() {
            m.set(i, j, x.clone());
        }
    }
    let (_u, s, _v) = smith_normal_form(&m);
    let diag = snf_diagonal(&s);
    (0..rank)
        .map(|i| diag.get(i).cloned().unwrap_or_else(Int::zero))
        .collect()
}

/// Unique Hermite-normal-form basis of the subgroup of Z^n generated by the
/// given vectors. Rows are echelonized with positive pivots and the entries
/// above each pivot reduced into [0, pivot).
pub fn hermite_basis(n: usize, gens: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let mut work: Vec<Vec<Int>> = gens
        .iter()
        .filter(|g| !g.iter().all(|x| x.is_zero()))
        .cloned()
        .collect();
    for g in &work {
        assert_eq!(g.len(), n, "generator has wrong length");
    }
    let mut pivots: Vec<(usize, Vec<Int>)> = Vec::new();
    for col in 0..n {
        loop {
            let mut best: Option<usize> = None;
            for (idx, row) in work.iter().enumerate() {
                if row[col].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(idx),
                    Some(b) => {
                        if row[col].abs() < work[b][col].abs() {
                            best = Some(idx);
                        }
                    }
                }
            }
            let Some(b) = best else { break };
            let mut piv = work.swap_remove(b);
            if piv[col].is_negative() {
                piv = piv.iter().map(|x| -x).collect();
            }
            let mut done = true;
            for row in work.iter_mut() {
                if row[col].is_zero() {
                    continue;
                }
                let q = row[col].div_floor(&piv[col]);
                for (x, p) in row.iter_mut().zip(&piv) {
                    *x -= &q * p;
                }
                if !row[col].is_zero() {
                    done = false;
                }
            }
            work.retain(|row| !row.iter().all(|x| x.is_zero()));
            if done {
                pivots.push((col, piv));
                break;
            }
            work.push(piv);
        }
    }
    debug_assert!(work.is_empty());
    // reduce entries above each pivot
    let cols_pivots: Vec<(usize, usize)> = pivots
        .iter()
        .enumerate()
        .map(|(i, (c, _))| (i, *c))
        .collect();
    for &(i, _c) in &cols_pivots {
        for &(j, cj) in &cols_pivots[i + 1..] {
            let q = pivots[i].1[cj].div_floor(&pivots[j].1[cj]);
            if q.is_zero() {
                continue;
            }
            let lower = pivots[j].1.clone();
            for (x, p) in pivots[i].1.iter_mut().zip(&lower) {
                *x -= &q * p;
            }
        }
    }
    pivots.into_iter().map(|(_, r)| r).collect()
}

/// Basis of the saturation span_Q(vecs) ∩ Z^n, in Hermite normal form.
pub fn saturated_span_basis(n: usize, vecs: &[Vec<Int>]) -> Vec<Vec<Int>> {
    if vecs.is_empty() {
        return Vec::new();
    }
    let a = IntMatrix::from_rows(vecs.to_vec());
    let (_u, s, v) = smith_normal_form(&a);
    let rank = snf_rank(&s);
    let v_inv = inverse_unimodular(&v);
    let gens: Vec<Vec<Int>> = (0..rank).map(|i| v_inv.row(i).to_vec()).collect();
    hermite_basis(n, &gens)
}

/// Basis (not necessarily saturated) of the subgroup generated by the rows.
pub fn lattice_basis(n: usize, gens: &[Vec<Int>]) -> Vec<Vec<Int>> {
    hermite_basis(n, gens)
}

/// Inverse of a unimodular integer matrix.
pub fn inverse_unimodular(m: &IntMatrix) -> IntMatrix {
    let n = m.rows();
    assert_eq!(n, m.cols(), "only square matrices invert");
    let mut a = m.to_rat_rows();
    let mut inv: Vec<Vec<Rat>> = IntMatrix::identity(n).to_rat_rows();
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&i| !a[i][col].is_zero())
            .expect("matrix is singular");
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for j in 0..n {
                let x = &a[col][j] * &f;
                a[i][j] -= x;
                let y = &inv[col][j] * &f;
                inv[i][j] -= y;
            }
        }
    }
    let rows: Vec<Vec<Int>> = inv
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| {
                    assert!(x.denom().is_one(), "matrix was not unimodular");
                    x.numer().clone()
                })
                .collect()
        })
        .collect();
    IntMatrix::from_rows(rows)
}

/// Rank of a family of integer vectors (over Q).
pub fn rank_int(vecs: &[Vec<Int>]) -> usize {
    let rows: Vec<Vec<Rat>> = vecs
        .iter()
        .map(|v| v.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    rank_rat(&rows)
}

pub fn rank_rat(vecs: &[Vec<Rat>]) -> usize {
    let mut rows: Vec<Vec<Rat>> = vecs.to_vec();
    let n = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let piv = rows[rank][col].clone();
        for i in 0..rows.len() {
            if i == rank || rows[i][col].is_zero() {
                continue;
            }
            let f = &rows[i][col] / &piv;
            let ref_row = rows[rank].clone();
            for (x, r) in rows[i].iter_mut().zip(&ref_row) {
                *x -= &f * r;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// One rational solution of A x = b, or None when inconsistent. Free
/// variables are set to zero, so the answer is deterministic.
pub fn solve_rat(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let m = a.len();
    assert_eq!(b.len(), m, "system shape mismatch");
    let n = a.first().map_or(0, |r| r.len());
    let mut rows: Vec<(Vec<Rat>, Rat)> = a.iter().cloned().zip(b.iter().cloned()).collect();
    let mut pivot_cols: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..m).find(|&i| !rows[i].0[col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let piv = rows[r].0[col].clone();
        for i in 0..m {
            if i == r || rows[i].0[col].is_zero() {
                continue;
            }
            let f = &rows[i].0[col] / &piv;
            let (ref_row, ref_rhs) = rows[r].clone();
            for (x, y) in rows[i].0.iter_mut().zip(&ref_row) {
                *x -= &f * y;
            }
            let adj = &f * &ref_rhs;
            rows[i].1 -= adj;
        }
        pivot_cols.push((r, col));
        r += 1;
        if r == m {
            break;
        }
    }
    for i in r..m {
        if !rows[i].1.is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); n];
    for &(row, col) in &pivot_cols {
        x[col] = &rows[row].1 / &rows[row].0[col];
    }
    Some(x)
}

/// Determinant of a square integer matrix, via exact rational elimination.
pub fn det_int(m: &IntMatrix) -> Int {
    let n = m.rows();
    assert_eq!(n, m.cols(), "determinant needs a square matrix");
    let mut rows = m.to_rat_rows();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !rows[i][col].is_zero()) else {
            return Int::zero();
        };
        if p != col {
            rows.swap(col, p);
            det = -det;
        }
        let piv = rows[col][col].clone();
        det *= &piv;
        for i in col + 1..n {
            if rows[i][col].is_zero() {
                continue;
            }
            let f = &rows[i][col] / &piv;
            let ref_row = rows[col].clone();
            for (x, y) in rows[i].iter_mut().zip(&ref_row) {
                *x -= &f * y;
            }
        }
    }
    assert!(det.denom().is_one());
    det.numer().clone()
}
