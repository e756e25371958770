//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use lambda_operad::verify::oracle::{self, OracleTree};
use lambda_operad::verify::{Check, CheckReport, Universe};
use lambda_operad::{LambdaPoly, Operad, WeightedTree};

struct Outcome {
    passed: bool,
    lines: Vec<String>,
}

impl Outcome {
    fn from_reports(reports: Vec<CheckReport>) -> Outcome {
        Outcome {
            passed: reports.iter().all(CheckReport::passed),
            lines: reports.iter().map(|r| r.to_string()).collect(),
        }
    }
}

fn run(checks: &[(Check, Universe)]) -> Outcome {
    let op = Operad::new();
    Outcome::from_reports(checks.iter().map(|(c, u)| c.run(&op, u)).collect())
}

fn operad_axioms() -> Outcome {
    let u = Universe::labeled(3, 3);
    run(&[
        (Check::Nested, u),
        (Check::Disjoint, u),
        (Check::Units, u),
        (Check::Equivariance, u),
    ])
}

fn epsilon_formula() -> Outcome {
    run(&[(Check::Epsilon, Universe::labeled(3, 3))])
}

fn specializations() -> Outcome {
    run(&[(Check::Specializations, Universe::labeled(4, 2))])
}

fn deformed_identity() -> Outcome {
    run(&[(Check::Deformed, Universe::unlabeled(3, 2))])
}

fn isomorphism() -> Outcome {
    run(&[
        (Check::RoundTrip, Universe::unlabeled(5, 2)),
        (Check::RoundTrip, Universe::labeled(5, 2)),
        (Check::Relation, Universe::unlabeled(1, 3)),
    ])
}

fn morphisms() -> Outcome {
    run(&[(Check::Morphisms, Universe::labeled(3, 5))])
}

fn counts_and_worked_example() -> Outcome {
    let mut out = run(&[(Check::Counts, Universe::labeled(6, 1))]);

    let s: WeightedTree = "a:1[b:3[c:2,d:1]]".parse().expect("valid tree");
    let t: WeightedTree = "e:2[h:1]".parse().expect("valid tree");
    let c = Operad::new().compose_at(&s, "b", &t).expect("composable");
    let mut coefficients: Vec<String> = c.iter().map(|(_, p)| p.to_string()).collect();
    coefficients.sort();
    let expected_coefficients = ["1", "L", "L^2", "L^3"];

    let os = OracleTree::from_tree(&s);
    let ot = OracleTree::from_tree(&t);
    let mut brute = oracle::Multiset::new();
    oracle::multiset(&oracle::prelie_compose(&os, os.index_of("b"), &ot), 1, &mut brute);
    let lib: oracle::Multiset = c.keys().map(|k| (OracleTree::from_tree(k).encode(), 1)).collect();

    let ok = coefficients == expected_coefficients && lib == brute;
    out.passed &= ok;
    out.lines.push(format!(
        "{} worked example coefficients {{{}}}, trees match brute force: {}",
        if ok { "PASS" } else { "FAIL" },
        coefficients.join(", "),
        lib == brute
    ));
    out
}

fn fault_injection() -> Outcome {
    let mut passed = true;
    let mut lines = Vec::new();
    for check in Check::ALL {
        let Some(fault) = check.sanity_fault() else {
            continue;
        };
        let r = check.run(&Operad::with_fault(fault), &check.default_universe());
        let detected = r.failure_count > 0;
        passed &= detected;
        let example = r.failures.first().map_or(String::new(), |c| format!("; e.g. {}", c.minimized));
        lines.push(format!(
            "{} {check} detects {fault:?}: {} counterexamples{example}",
            if detected { "PASS" } else { "FAIL" },
            r.failure_count
        ));
    }
    Outcome { passed, lines }
}

fn main() -> ExitCode {
    // sanity: the polynomial printer used in the example line
    assert_eq!(LambdaPoly::lambda_pow(2).to_string(), "L^2");

    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("operad axioms (labeled, <= 3 vertices, weights <= 3)", operad_axioms),
        ("epsilon formula equivalence", epsilon_formula),
        ("lambda = 0 / lambda = 1 specializations (<= 4 vertices)", specializations),
        ("deformed identity (unlabeled, <= 3 vertices, weights <= 2)", deformed_identity),
        ("isomorphism consequences (<= 5 vertices, weights <= 2)", isomorphism),
        ("morphism truncations (<= 3 vertices, total weight <= 5)", morphisms),
        ("combinatorial counts and worked example", counts_and_worked_example),
        ("fault injection", fault_injection),
    ];
    let mut results = BTreeMap::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!("criterion {}: {status} - {name} [{:.1}s]", k + 1, start.elapsed().as_secs_f64());
        for line in &outcome.lines {
            for l in line.lines() {
                println!("    {l}");
            }
        }
        results.insert(k + 1, outcome.passed);
    }
    let failed: Vec<usize> = results.iter().filter(|(_, ok)| !**ok).map(|(k, _)| *k).collect();
    if failed.is_empty() {
        println!("acceptance: all 8 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
