//! The full pipeline on the E6 singular cubic threefold: downgrade the
//! ambient toric variety along the rank-two subtorus, restrict the result to
//! a line in the quotient plane, then validate and evaluate the divisor.

use std::collections::BTreeMap;

use poldiv::arith::{format_int_vec, format_rat, format_rat_vec, int_vec};
use poldiv::divisor::Base;
use poldiv::downgrade::{downgrade, restrict_to_curve, DowngradeInput};
use poldiv::linalg::IntMatrix;
use poldiv::Cone;

fn main() {
    // the orthant in rank four, the subtorus embedding and a chosen
    // section/cokernel pair
    let input = DowngradeInput {
        delta: Cone::from_rays(
            4,
            &[
                int_vec(&[1, 0, 0, 0]),
                int_vec(&[0, 1, 0, 0]),
                int_vec(&[0, 0, 1, 0]),
                int_vec(&[0, 0, 0, 1]),
            ],
        ),
        f: IntMatrix::from_rows(vec![
            int_vec(&[4, 0]),
            int_vec(&[3, 0]),
            int_vec(&[0, 1]),
            int_vec(&[12, -1]),
        ]),
        s: Some(IntMatrix::from_rows(vec![
            int_vec(&[1, -1, 0, 0]),
            int_vec(&[0, 0, 1, 0]),
        ])),
        p: Some(IntMatrix::from_rows(vec![
            int_vec(&[3, 0, -1, -1]),
            int_vec(&[0, 4, -1, -1]),
        ])),
    };
    let result = downgrade(&input).unwrap();

    println!("tail cone rays:");
    for r in result.sigma.rays() {
        println!("  {}", format_int_vec(r));
    }
    println!("quotient fan rays:");
    for r in &result.fan_y.rays() {
        println!("  {}", format_int_vec(r));
    }
    println!("coefficients over the quotient fan:");
    for (site, poly) in result.divisor.coefficients() {
        let vs: Vec<String> = poly
            .vertices()
            .iter()
            .map(|v| format_rat_vec(v))
            .collect();
        println!("  {}: conv{{{}}} + tail", site, vs.join(", "));
    }

    // pull the three marked rays back to points of a line in the plane
    let mut pullbacks: BTreeMap<usize, Vec<(String, u64)>> = BTreeMap::new();
    pullbacks.insert(2, vec![("0".to_string(), 1)]);
    pullbacks.insert(1, vec![("1".to_string(), 1)]);
    pullbacks.insert(0, vec![("inf".to_string(), 1)]);
    let on_line = restrict_to_curve(&result.divisor, &pullbacks, &Base::P1).unwrap();

    println!("restricted to the line:");
    for (site, poly) in on_line.coefficients() {
        let vs: Vec<String> = poly
            .vertices()
            .iter()
            .map(|v| format_rat_vec(v))
            .collect();
        println!("  {}: conv{{{}}} + tail", site, vs.join(", "));
    }

    let report = on_line.is_proper().unwrap();
    println!("proper: {}", report.proper);

    let value = on_line.evaluate_int(&int_vec(&[12, -1])).unwrap();
    println!("evaluation at weight (12,-1):");
    for (site, c) in value.coefficients() {
        println!("  {}: {}", site, format_rat(c));
    }
}
