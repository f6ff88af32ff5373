//! One line per acceptance criterion; detail lines follow when `-v` is
//! passed or the criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use pseudoshape::verify::{self, Check, Tolerances};

const TITLES: [&str; 8] = [
    "growth-rate tables reproduced",
    "determinant = chamber walk",
    "structure GFs = brute force",
    "shape GFs = brute force",
    "1-arc recursion",
    "closed-form singular points",
    "normalized-ratio convergence",
    "core and shape maps consistent",
];

fn tolerances() -> Tolerances {
    Tolerances {
        table_abs: BigRational::new(BigInt::from(5), BigInt::from(1_000_000)),
        bisection: BigRational::new(BigInt::from(1), BigInt::from(1_000_000_000)),
        diagnostic_root: BigRational::new(BigInt::from(1), BigInt::from(10).pow(30)),
        convergence_order: 60,
        convergence_band: 0.10,
        convergence_terms: 10,
        monotone_points: 5,
    }
}

fn run(criterion: u8, tol: &Tolerances) -> Vec<Check> {
    match criterion {
        1 => {
            let mut v = verify::growth_tables(tol);
            v.extend(verify::rate_ordering(tol));
            v
        }
        2 => verify::determinant_vs_walk(25),
        3 => verify::structures(),
        4 => verify::shapes(),
        5 => verify::lemma1(8, 20),
        6 => verify::singularities(tol),
        7 => verify::convergence(tol),
        8 => verify::maps(verify::ORACLE_MAX_N),
        _ => unreachable!(),
    }
}

fn main() -> ExitCode {
    let verbose = std::env::args().any(|a| a == "-v" || a == "--verbose");
    let tol = tolerances();
    let mut failed = BTreeMap::new();
    for criterion in 1..=8u8 {
        let start = Instant::now();
        let checks = run(criterion, &tol);
        let passed = verify::all_passed(&checks);
        let counted = checks.iter().filter(|c| !c.informational).count();
        let ok = checks.iter().filter(|c| !c.informational && c.passed).count();
        println!(
            "criterion {criterion}: {} - {} ({ok}/{counted} checks, {:.1}s)",
            if passed { "PASS" } else { "FAIL" },
            TITLES[criterion as usize - 1],
            start.elapsed().as_secs_f64()
        );
        if verbose || !passed {
            for c in checks.iter().filter(|c| verbose || !c.passed || c.informational) {
                println!("    {c}");
            }
        }
        if !passed {
            failed.insert(criterion, counted - ok);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 8 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {:?}", failed.keys().collect::<Vec<_>>());
        ExitCode::FAILURE
    }
}
