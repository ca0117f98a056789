//! Dimensions of global sections. On P1 a rational divisor E with
//! deg(floor(E)) >= 0 has h0 = deg(floor(E)) + 1, and the weight space of a
//! polyhedral divisor at u is the section space of the evaluated divisor.

use num::{One, Signed, Zero};

use crate::arith::{floor_rat, to_rat_vec, Int};
use crate::divisor::{Base, PolyhedralDivisor, RationalDivisor};
use crate::error::{Error, Result};

/// h0 of the rounded-down divisor on the projective line.
pub fn h0_p1(e: &RationalDivisor) -> Result<Int> {
    if e.base() != &Base::P1 {
        return Err(Error::NotP1);
    }
    let mut deg = Int::zero();
    for c in e.coefficients().values() {
        deg += floor_rat(c);
    }
    deg += Int::one();
    if deg.is_negative() {
        deg = Int::zero();
    }
    Ok(deg)
}

/// Dimension of the weight-u space of sections; zero outside the weight cone.
pub fn weight_dimension(d: &PolyhedralDivisor, u: &[Int]) -> Result<Int> {
    if d.base() != &Base::P1 {
        return Err(Error::NotP1);
    }
    if !d.in_weight_cone(&to_rat_vec(u)) {
        return Ok(Int::zero());
    }
    h0_p1(&d.evaluate_int(u)?)
}

/// Weight-space dimensions for every lattice point of a coordinate box,
/// in lexicographic order. Bounds are inclusive on both ends.
pub fn hilbert_table(
    d: &PolyhedralDivisor,
    bounds: &[(Int, Int)],
) -> Result<Vec<(Vec<Int>, Int)>> {
    if bounds.len() != d.lattice_rank() {
        return Err(Error::Invalid(
            "box rank differs from the lattice rank".into(),
        ));
    }
    if bounds.iter().any(|(lo, hi)| lo > hi) {
        return Ok(Vec::new());
    }
    let mut u: Vec<Int> = bounds.iter().map(|(lo, _)| lo.clone()).collect();
    let mut out = Vec::new();
    loop {
        out.push((u.clone(), weight_dimension(d, &u)?));
        // odometer step, last coordinate fastest
        let mut pos = bounds.len();
        while pos > 0 {
            pos -= 1;
            if u[pos] < bounds[pos].1 {
                u[pos] += Int::one();
                break;
            }
            u[pos] = bounds[pos].0.clone();
            if pos == 0 {
                return Ok(out);
            }
        }
        if bounds.is_empty() {
            return Ok(out);
        }
    }
}
