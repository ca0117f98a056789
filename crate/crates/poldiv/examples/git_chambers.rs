//! GIT chambers of the E6 divisor: the weight cone splits into two maximal
//! cells on which all evaluations vary linearly, so each cell corresponds to
//! one quotient.

use poldiv::arith::{format_int_vec, format_rat, to_rat_vec};
use poldiv::io::parse_divisor;
use poldiv::orbits::git_quasifan;

const E6: &str = r#"{"lattice_rank":2,"tail_rays":[[1,0],[1,12]],"base":{"kind":"P1"},
"coefficients":[{"at":"0","vertices":[["1/3","0"]]},{"at":"1","vertices":[["-1/4","0"]]},
{"at":"inf","vertices":[["0","0"],["0","1"]]}]}"#;

fn main() {
    let d = parse_divisor(E6).unwrap();

    let weight_cone = d.weight_cone();
    println!("weight cone rays:");
    for r in weight_cone.rays() {
        println!("  {}", format_int_vec(r));
    }

    let chambers = git_quasifan(&d);
    println!("{} GIT chambers:", chambers.max_cones().len());
    for cell in chambers.max_cones() {
        let rays: Vec<String> = cell
            .rays()
            .iter()
            .map(|r| format_int_vec(r).to_string())
            .collect();
        println!("  chamber spanned by {}", rays.join(" "));

        // inside a chamber every evaluation is a fixed linear form; sample it
        // at the relative interior point
        let probe = cell.relint_point();
        let value = d.evaluate(&to_rat_vec(&probe)).unwrap();
        let per_site: Vec<String> = value
            .coefficients()
            .iter()
            .map(|(site, c)| format!("{}: {}", site, format_rat(c)))
            .collect();
        println!(
            "    sample weight ({}) evaluates to {}",
            format_int_vec(&probe),
            per_site.join(", ")
        );
    }
}
