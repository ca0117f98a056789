//! Arithmetic of tailed polyhedra: Minkowski sums, support functions and
//! normal quasifans, all in exact rational arithmetic.

use poldiv::arith::{format_int_vec, format_rat, int_vec, rat, rat_vec};
use poldiv::{Cone, TailedPolyhedron};

fn show(name: &str, p: &TailedPolyhedron) {
    let vs: Vec<String> = p.vertices().iter().map(|v| poldiv::arith::format_rat_vec(v)).collect();
    let rs: Vec<String> = p.tail().rays().iter().map(|r| format_int_vec(r)).collect();
    println!("{}: vertices {} tail rays {}", name, vs.join(" "), rs.join(" "));
}

fn main() {
    // a quadrant shifted to (1/2, -1/3) and a segment with the same tail
    let tail = Cone::from_rays(2, &[int_vec(&[1, 0]), int_vec(&[0, 1])]);
    let a = TailedPolyhedron::new(&[rat_vec(&[(1, 2), (-1, 3)])], tail.clone()).unwrap();
    // the second generator points out of the tail, so the segment survives
    let b = TailedPolyhedron::new(
        &[rat_vec(&[(0, 1), (0, 1)]), rat_vec(&[(2, 1), (-1, 1)])],
        tail.clone(),
    )
    .unwrap();
    show("A", &a);
    show("B", &b);

    let s = a.minkowski_sum(&b).unwrap();
    show("A+B", &s);

    // support functions evaluate to the minimum over the polyhedron and add
    // under Minkowski sums
    let u = rat_vec(&[(1, 1), (3, 1)]);
    println!(
        "h_A(1,3) = {}   h_B(1,3) = {}   h_(A+B)(1,3) = {}",
        format_rat(&a.eval(&u).unwrap()),
        format_rat(&b.eval(&u).unwrap()),
        format_rat(&s.eval(&u).unwrap()),
    );

    // the normal quasifan records where the support function is linear
    println!("normal quasifan of A+B:");
    for cell in s.normal_quasifan().max_cones() {
        let rs: Vec<String> = cell.rays().iter().map(|r| format_int_vec(r)).collect();
        println!("  cell with rays {}", rs.join(" "));
    }

    // integrality means all vertices are lattice points
    println!("A integral: {}", a.is_integral());
    println!("B integral: {}", b.is_integral());

    // scaling by 6 clears the denominators of A
    let scaled = a.scale(&rat(6, 1)).unwrap();
    show("6A", &scaled);
    println!("6A integral: {}", scaled.is_integral());
}
