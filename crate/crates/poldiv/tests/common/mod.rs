//! Shared helpers for the integration tests: fixture paths, a wrapper around
//! the compiled binary, and randomized property suites over small pointed
//! cones (rank at most 3, vertex denominators at most 12). The suites are
//! plain functions returning Err on the first counterexample so that both the
//! property tests and the acceptance report can run them.
#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Stdio};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use poldiv::arith::{add_int, dot_int_rat, int, rat, rat_is_integer, scale_int, to_rat_vec};
use poldiv::cone::hilbert_basis;
use poldiv::divisor::{Base, DivisorSite, PolyhedralDivisor};
use poldiv::polyhedron::TailedPolyhedron;
use poldiv::{Cone, Int, Rat};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).expect("fixture exists")
}

pub struct CliOut {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_cli(args: &[&str]) -> CliOut {
    run_cli_stdin(args, None)
}

pub fn run_cli_stdin(args: &[&str], stdin: Option<&str>) -> CliOut {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_poldiv"));
    cmd.args(args);
    if stdin.is_some() {
        cmd.stdin(Stdio::piped());
    }
    cmd.stdout(Stdio::piped()).stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary runs");
    if let Some(text) = stdin {
        use std::io::Write;
        child
            .stdin
            .take()
            .expect("stdin piped")
            .write_all(text.as_bytes())
            .expect("stdin accepts input");
    }
    let out = child.wait_with_output().expect("binary exits");
    CliOut {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("stdout is utf8"),
        stderr: String::from_utf8(out.stderr).expect("stderr is utf8"),
    }
}

// ---------- strategies ----------

fn rat_small() -> impl Strategy<Value = Rat> {
    (-18i64..=18, 1i64..=12).prop_map(|(p, q)| rat(p, q))
}

fn rat_point(rank: usize) -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec(rat_small(), rank)
}

/// Pointed full-dimensional cone: a strictly diagonally dominant nonnegative
/// ray matrix sits inside the positive orthant, and unimodular shears keep
/// pointedness while moving the cone off the orthant. Entries stay small so
/// that dual Hilbert bases remain cheap to enumerate.
fn pointed_cone(rank: usize) -> BoxedStrategy<Cone> {
    let diag = prop::collection::vec(2i64..=3, rank);
    let off = prop::collection::vec(prop::collection::vec(0i64..=1, rank), rank);
    let shears = prop::collection::vec(
        (0..rank.max(1), 0..rank.max(1), -1i64..=1),
        0..=2,
    );
    (diag, off, shears, any::<bool>())
        .prop_map(move |(d, o, sh, extra)| {
            let mut rays: Vec<Vec<Int>> = (0..rank)
                .map(|i| {
                    (0..rank)
                        .map(|j| int(if i == j { d[i] } else { o[i][j] }))
                        .collect()
                })
                .collect();
            if extra && rank >= 2 {
                let s = add_int(&rays[0], &rays[1]);
                rays.push(s);
            }
            for &(a, b, c) in &sh {
                if a != b {
                    for r in rays.iter_mut() {
                        let t = int(c) * &r[b];
                        r[a] = &r[a] + t;
                    }
                }
            }
            Cone::from_rays(rank, &rays)
        })
        .boxed()
}

fn polyhedron(rank: usize) -> BoxedStrategy<TailedPolyhedron> {
    (pointed_cone(rank), prop::collection::vec(rat_point(rank), 1..=3))
        .prop_map(|(tail, pts)| TailedPolyhedron::new(&pts, tail).expect("pointed tail"))
        .boxed()
}

fn polyhedron_pair(rank: usize) -> BoxedStrategy<(TailedPolyhedron, TailedPolyhedron)> {
    (
        pointed_cone(rank),
        prop::collection::vec(rat_point(rank), 1..=3),
        prop::collection::vec(rat_point(rank), 1..=3),
    )
        .prop_map(|(tail, a, b)| {
            (
                TailedPolyhedron::new(&a, tail.clone()).expect("pointed tail"),
                TailedPolyhedron::new(&b, tail).expect("pointed tail"),
            )
        })
        .boxed()
}

fn divisor_p1(rank: usize) -> BoxedStrategy<PolyhedralDivisor> {
    (
        pointed_cone(rank),
        prop::sample::subsequence(vec!["0", "1", "inf"], 1..=3),
        prop::collection::vec(prop::collection::vec(rat_point(rank), 1..=3), 3),
    )
        .prop_map(|(tail, labels, pts)| {
            let coefficients = labels
                .iter()
                .zip(&pts)
                .map(|(l, p)| {
                    (
                        DivisorSite::Point(l.to_string()),
                        TailedPolyhedron::new(p, tail.clone()).expect("pointed tail"),
                    )
                })
                .collect();
            PolyhedralDivisor::new(Base::P1, tail, coefficients).expect("valid divisor")
        })
        .boxed()
}

/// Lattice point of the dual cone: a small nonnegative combination of the
/// primitive dual rays, driven by a fixed-length coefficient pattern.
fn dual_point(tail: &Cone, coeffs: &[i64]) -> Vec<Int> {
    let gens = tail.dual().generating_set();
    let rank = tail.ambient_rank();
    let mut u = vec![int(0); rank];
    for (h, &c) in gens.iter().zip(coeffs.iter().cycle()) {
        u = add_int(&u, &scale_int(&int(c), h));
    }
    u
}

fn coeff_pattern() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0i64..=3, 8)
}

fn config(cases: u32) -> Config {
    Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    }
}

type SuiteResult = Result<(), String>;

fn run_suite<S, F>(cases: u32, strategy: S, check: F) -> SuiteResult
where
    S: Strategy,
    S::Value: std::fmt::Debug,
    F: Fn(S::Value) -> Result<(), TestCaseError>,
{
    let mut runner = TestRunner::new(config(cases));
    runner
        .run(&strategy, check)
        .map_err(|e| e.to_string())
}

fn ranked<T, F>(f: F) -> BoxedStrategy<T>
where
    T: std::fmt::Debug + 'static,
    F: Fn(usize) -> BoxedStrategy<T> + 'static,
{
    (1usize..=3).prop_flat_map(f).boxed()
}

// ---------- the seven property suites ----------

/// Support functions add under Minkowski sums at every Hilbert basis point
/// of the common weight cone.
pub fn suite_support_additivity(cases: u32) -> SuiteResult {
    run_suite(cases, ranked(polyhedron_pair), |(a, b)| {
        let s = a.minkowski_sum(&b).expect("same tail");
        for u in hilbert_basis(&a.tail().dual()).expect("pointed dual") {
            let lhs = s.eval_int(&u).expect("weight admitted");
            let rhs = a.eval_int(&u).expect("weight admitted")
                + b.eval_int(&u).expect("weight admitted");
            prop_assert_eq!(&lhs, &rhs, "additivity fails at {:?}", u);
        }
        Ok(())
    })
}

/// The support function is superadditive on the weight cone and additivity
/// holds exactly when both weights lie in one maximal cell of the normal
/// quasifan.
pub fn suite_superadditivity_cells(cases: u32) -> SuiteResult {
    let strat = ranked(|r| {
        (polyhedron(r), coeff_pattern(), coeff_pattern()).boxed()
    });
    run_suite(cases, strat, |(p, c1, c2)| {
        let u1 = dual_point(p.tail(), &c1);
        let u2 = dual_point(p.tail(), &c2);
        let sum = add_int(&u1, &u2);
        let h1 = p.eval_int(&u1).expect("in weight cone");
        let h2 = p.eval_int(&u2).expect("in weight cone");
        let hs = p.eval_int(&sum).expect("in weight cone");
        prop_assert!(hs >= &h1 + &h2, "superadditivity fails");
        let shared = p.normal_quasifan().max_cones().iter().any(|c| {
            c.contains(&to_rat_vec(&u1)) && c.contains(&to_rat_vec(&u2))
        });
        prop_assert_eq!(
            hs == h1 + h2,
            shared,
            "additivity must match a shared maximal cell"
        );
        Ok(())
    })
}

/// The normal quasifan of a Minkowski sum is the common refinement of the
/// summands' normal quasifans.
pub fn suite_refinement(cases: u32) -> SuiteResult {
    run_suite(cases, ranked(polyhedron_pair), |(a, b)| {
        let s = a.minkowski_sum(&b).expect("same tail");
        let refined = a
            .normal_quasifan()
            .common_refinement(&b.normal_quasifan())
            .expect("same support");
        let of_sum = s.normal_quasifan();
        prop_assert_eq!(
            of_sum.max_cones(),
            refined.max_cones(),
            "normal quasifan of a sum must be the common refinement"
        );
        Ok(())
    })
}

/// Integral polyhedra have integer support values on lattice weights, and a
/// non-integral polyhedron always yields an explicit lattice witness with a
/// fractional support value.
pub fn suite_integrality(cases: u32) -> SuiteResult {
    run_suite(cases, ranked(polyhedron), |p| {
        if p.is_integral() {
            let hb = hilbert_basis(&p.tail().dual()).expect("pointed dual");
            for u in &hb {
                let v = p.eval_int(u).expect("in weight cone");
                prop_assert!(rat_is_integer(&v), "integral polyhedron, fractional value");
            }
            for u1 in &hb {
                for u2 in &hb {
                    let v = p.eval_int(&add_int(u1, u2)).expect("in weight cone");
                    prop_assert!(rat_is_integer(&v), "integral polyhedron, fractional value");
                }
            }
        } else {
            let witness = non_integral_witness(&p);
            match witness {
                Some((u, val)) => {
                    prop_assert!(
                        !rat_is_integer(&val),
                        "witness value must be fractional at {:?}",
                        u
                    );
                }
                None => prop_assert!(false, "no fractional witness found"),
            }
        }
        Ok(())
    })
}

/// Searches for a lattice weight with fractional support value: pick a
/// non-integral vertex, find the maximal normal cell attaining exactly that
/// vertex, and probe k*relint_point + e_j for the fractional coordinate j.
fn non_integral_witness(p: &TailedPolyhedron) -> Option<(Vec<Int>, Rat)> {
    let rank = p.ambient_rank();
    let cells = p.normal_quasifan();
    for v in p.vertices() {
        let frac: Vec<usize> = (0..rank).filter(|&j| !rat_is_integer(&v[j])).collect();
        if frac.is_empty() {
            continue;
        }
        for cell in cells.max_cones() {
            let rp = cell.relint_point();
            let face = p.face_at(&to_rat_vec(&rp)).expect("interior weight");
            if face.vertices() != std::slice::from_ref(v) || !face.tail().is_zero() {
                continue;
            }
            let base_val = p.eval_int(&rp).expect("in weight cone");
            if !rat_is_integer(&base_val) {
                return Some((rp, base_val));
            }
            for &j in &frac {
                for k in 1..=64i64 {
                    let mut u = scale_int(&int(k), &rp);
                    u[j] = &u[j] + int(1);
                    if !cell.relint_contains_int(&u) {
                        continue;
                    }
                    let val = p.eval_int(&u).expect("in weight cone");
                    if !rat_is_integer(&val) {
                        return Some((u, val));
                    }
                    break;
                }
            }
        }
    }
    None
}

/// Rebuilding a polyhedron from its support data is the identity.
pub fn suite_roundtrip(cases: u32) -> SuiteResult {
    run_suite(cases, ranked(polyhedron), |p| {
        let back = p.support_function_roundtrip().expect("roundtrip runs");
        prop_assert_eq!(&back, &p, "support data must determine the polyhedron");
        Ok(())
    })
}

/// Divisor evaluation is superadditive in the weight, site by site.
pub fn suite_divisor_superadditive(cases: u32) -> SuiteResult {
    let strat = ranked(|r| {
        (divisor_p1(r), coeff_pattern(), coeff_pattern()).boxed()
    });
    run_suite(cases, strat, |(d, c1, c2)| {
        let u1 = dual_point(d.tail(), &c1);
        let u2 = dual_point(d.tail(), &c2);
        let sum = add_int(&u1, &u2);
        let e1 = d.evaluate_int(&u1).expect("in weight cone");
        let e2 = d.evaluate_int(&u2).expect("in weight cone");
        let es = d.evaluate_int(&sum).expect("in weight cone");
        for site in d.coefficients().keys() {
            let lhs = es.coefficient(site);
            let rhs = e1.coefficient(site) + e2.coefficient(site);
            prop_assert!(lhs >= rhs, "site {} breaks superadditivity", site);
        }
        Ok(())
    })
}

/// Taking degrees commutes with evaluation: the degree polyhedron's support
/// value equals the total degree of the evaluated divisor.
pub fn suite_degree_commutes(cases: u32) -> SuiteResult {
    let strat = ranked(|r| (divisor_p1(r), coeff_pattern()).boxed());
    run_suite(cases, strat, |(d, c)| {
        let u = dual_point(d.tail(), &c);
        let deg = d.polyhedral_degree().expect("projective line base");
        let lhs = deg.eval_int(&u).expect("in weight cone");
        let rhs = d.evaluate_int(&u).expect("in weight cone").degree();
        prop_assert_eq!(&lhs, &rhs, "degree and evaluation must commute at {:?}", u);
        Ok(())
    })
}

/// Pairing each vertex from the hypothesis side: direct dot product against
/// the rational vertex coordinates.
pub fn pair(u: &[Int], v: &[Rat]) -> Rat {
    dot_int_rat(u, v)
}
