//! Dimensions of the graded pieces of the section ring of the E6 divisor.
//! The table reproduces the monomial count of the coordinate ring of the
//! singular cubic threefold.

use poldiv::arith::int;
use poldiv::io::parse_divisor;
use poldiv::sections::hilbert_table;

const E6: &str = r#"{"lattice_rank":2,"tail_rays":[[1,0],[1,12]],"base":{"kind":"P1"},
"coefficients":[{"at":"0","vertices":[["1/3","0"]]},{"at":"1","vertices":[["-1/4","0"]]},
{"at":"inf","vertices":[["0","0"],["0","1"]]}]}"#;

fn main() {
    let d = parse_divisor(E6).unwrap();

    // generator weights of the section ring sit at dimension one
    println!("u2\\u1   0  1  2  3  4  5  6  7  8  9 10 11 12");
    let table = hilbert_table(&d, &[(int(0), int(12)), (int(-1), int(1))]).unwrap();
    for row in (-1..=1).rev() {
        let mut line = format!("{:>5}  ", row);
        for (u, dim) in &table {
            if u[1] == int(row) {
                line.push_str(&format!("{:>2} ", dim));
            }
        }
        println!("{}", line);
    }

    // the first weights with nontrivial sections generate the ring: (3,0),
    // (4,0), (0,1) and (12,-1); the relation appears in weight (12,0)
    for u in [[3, 0], [4, 0], [0, 1], [12, -1], [12, 0], [24, 0]] {
        let dim = poldiv::sections::weight_dimension(&d, &[int(u[0]), int(u[1])]).unwrap();
        println!("dim S_({},{}) = {}", u[0], u[1], dim);
    }
}
