//! Randomized invariant checks over small pointed cones. Each suite draws
//! 1024 cases; any counterexample is a bug in the calculus, not in the data.

mod common;

#[test]
fn support_functions_add_under_minkowski_sums() {
    common::suite_support_additivity(1024).unwrap();
}

#[test]
fn support_functions_are_superadditive_with_equality_on_shared_cells() {
    common::suite_superadditivity_cells(1024).unwrap();
}

#[test]
fn normal_quasifan_of_sum_is_common_refinement() {
    common::suite_refinement(1024).unwrap();
}

#[test]
fn integrality_matches_lattice_support_values() {
    common::suite_integrality(1024).unwrap();
}

#[test]
fn support_data_determines_the_polyhedron() {
    common::suite_roundtrip(1024).unwrap();
}

#[test]
fn divisor_evaluation_is_superadditive() {
    common::suite_divisor_superadditive(1024).unwrap();
}

#[test]
fn degree_commutes_with_evaluation() {
    common::suite_degree_commutes(1024).unwrap();
}
