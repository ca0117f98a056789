//! Orbit structure of the fibers of the divisor [1/3,1/2] over the origin of
//! an affine curve: three orbits, two non-reduced components, and a reduced
//! generic fiber.

use poldiv::arith::{format_int_vec, format_rat_vec, rat_vec};
use poldiv::divisor::{Base, DivisorSite, PolyhedralDivisor};
use poldiv::orbits::{fiber_components, fiber_orbits};
use poldiv::polyhedron::TailedPolyhedron;
use poldiv::Cone;

fn main() {
    let tail = Cone::zero(1);
    let interval = TailedPolyhedron::new(
        &[rat_vec(&[(1, 3)]), rat_vec(&[(1, 2)])],
        tail.clone(),
    )
    .unwrap();
    let d = PolyhedralDivisor::new(
        Base::AffineCurve,
        tail,
        vec![(DivisorSite::Point("0".to_string()), interval)],
    )
    .unwrap();

    let report = fiber_orbits(&d, "0").unwrap();
    println!("fiber over 0: {} orbits, reduced: {}", report.orbits.len(), report.reduced);
    for o in &report.orbits {
        println!(
            "  orbit of dimension {} with isotropy invariants [{}] over face {{{}}}",
            o.dimension,
            format_int_vec(&o.isotropy_invariants),
            o.face
                .vertices()
                .iter()
                .map(|v| format_rat_vec(v))
                .collect::<Vec<_>>()
                .join("}, {"),
        );
    }

    println!("irreducible components over 0:");
    for c in fiber_components(&d, "0").unwrap() {
        println!(
            "  vertex ({}) with weight lattice {}Z",
            format_rat_vec(&c.vertex),
            format_int_vec(&c.lattice_basis[0]),
        );
    }

    let generic = fiber_orbits(&d, "elsewhere").unwrap();
    println!(
        "generic fiber: {} orbit, reduced: {}",
        generic.orbits.len(),
        generic.reduced
    );
}
