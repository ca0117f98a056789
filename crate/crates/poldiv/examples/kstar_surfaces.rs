//! Classifying surfaces with a one-dimensional torus action from their
//! divisor data: the base curve and the tail cone decide the geometry.

use poldiv::arith::rat_vec;
use poldiv::divisor::{Base, DivisorSite, PolyhedralDivisor};
use poldiv::orbits::classify_k_star_surface;
use poldiv::{Cone, TailedPolyhedron};

fn divisor(
    base: Base,
    tail: Cone,
    coeffs: &[(&str, &[(i64, i64)])],
) -> PolyhedralDivisor {
    let cs = coeffs
        .iter()
        .map(|(label, vs)| {
            let points: Vec<Vec<poldiv::Rat>> =
                vs.iter().map(|v| rat_vec(&[*v])).collect();
            (
                DivisorSite::Point(label.to_string()),
                TailedPolyhedron::new(&points, tail.clone()).unwrap(),
            )
        })
        .collect();
    PolyhedralDivisor::new(base, tail, cs).unwrap()
}

fn main() {
    let ray = Cone::from_rays(1, &[vec![poldiv::arith::int(1)]]);

    // projective base: the action has an attractive and a repulsive fixed
    // point, the surface is a cone over a curve
    let elliptic = divisor(Base::P1, ray.clone(), &[("0", &[(1, 1)]), ("1", &[(1, 1)])]);
    println!("projective base, ray tail: {}", classify_k_star_surface(&elliptic).unwrap().as_str());

    // affine base with a ray tail: fixed points form a curve
    let parabolic = divisor(Base::AffineCurve, ray, &[("0", &[(-1, 1)])]);
    println!("affine base, ray tail: {}", classify_k_star_surface(&parabolic).unwrap().as_str());

    // affine base with trivial tail: generic orbits close up in both
    // directions
    let hyperbolic = divisor(
        Base::AffineCurve,
        Cone::zero(1),
        &[("0", &[(1, 3), (1, 2)]), ("1", &[(-1, 2)])],
    );
    println!("affine base, trivial tail: {}", classify_k_star_surface(&hyperbolic).unwrap().as_str());
}
