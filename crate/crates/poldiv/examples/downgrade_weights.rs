//! Downgrading the affine plane along the one-parameter subgroup with
//! weights (2,3): the quotient is a line, and the divisor lives on it with
//! two fractional coefficients.

use std::collections::BTreeMap;

use poldiv::arith::{format_rat_vec, int_vec};
use poldiv::divisor::Base;
use poldiv::downgrade::{downgrade, restrict_to_curve, DowngradeInput};
use poldiv::linalg::IntMatrix;
use poldiv::sections::weight_dimension;
use poldiv::Cone;

fn main() {
    let input = DowngradeInput {
        delta: Cone::from_rays(2, &[int_vec(&[1, 0]), int_vec(&[0, 1])]),
        f: IntMatrix::from_rows(vec![int_vec(&[2]), int_vec(&[3])]),
        s: Some(IntMatrix::from_rows(vec![int_vec(&[-1, 1])])),
        p: Some(IntMatrix::from_rows(vec![int_vec(&[3, -2])])),
    };
    let result = downgrade(&input).unwrap();
    println!("coefficients over the quotient fan:");
    for (site, poly) in result.divisor.coefficients() {
        println!(
            "  {}: [{}, inf)",
            site,
            format_rat_vec(&poly.vertices()[0])
        );
    }

    // the two fan rays become the two special points of the quotient line
    let mut pullbacks: BTreeMap<usize, Vec<(String, u64)>> = BTreeMap::new();
    pullbacks.insert(1, vec![("p+".to_string(), 1)]);
    pullbacks.insert(0, vec![("p-".to_string(), 1)]);
    let d = restrict_to_curve(&result.divisor, &pullbacks, &Base::P1).unwrap();

    for (site, poly) in d.coefficients() {
        println!("  {}: [{}, inf)", site, format_rat_vec(&poly.vertices()[0]));
    }
    let degree = d.polyhedral_degree().unwrap();
    println!("degree polyhedron: [{}, inf)", format_rat_vec(&degree.vertices()[0]));
    println!("proper: {}", d.is_proper().unwrap().proper);

    // weight dimensions recover the monomial count of the graded piece
    for w in 0..=6 {
        let dim = weight_dimension(&d, &int_vec(&[w])).unwrap();
        println!("dim of weight {} piece: {}", w, dim);
    }
}
