//! End-to-end acceptance checks. Each numbered criterion prints exactly one
//! pass/fail line; the test fails if any criterion fails.

use symclass::verify::{run_suite, CheckResult};

struct Outcome {
    label: &'static str,
    pass: bool,
}

fn gate(label: &'static str, checks: &[&CheckResult], outcomes: &mut Vec<Outcome>) {
    assert!(!checks.is_empty(), "no checks matched for {}", label);
    let pass = checks.iter().all(|c| c.pass);
    println!(
        "criterion {}: {} ({} checks)",
        label,
        if pass { "PASS" } else { "FAIL" },
        checks.len()
    );
    if !pass {
        for c in checks.iter().filter(|c| !c.pass).take(3) {
            println!("    failed: {} {:?}", c.id, c.witness);
        }
    }
    outcomes.push(Outcome { label, pass });
}

fn by_prefix<'a>(checks: &'a [CheckResult], prefix: &str) -> Vec<&'a CheckResult> {
    checks.iter().filter(|c| c.id.starts_with(prefix)).collect()
}

#[test]
fn acceptance() {
    let mut out = Vec::new();

    // 1. Table reproduction, m = 1..6.
    let table = run_suite("table", 7).unwrap();
    gate("1 (table m=1..6)", &table.checks.iter().collect::<Vec<_>>(), &mut out);

    // 2 & 3. D_k oracle law (n <= 7, k <= 6) and content eigenvalue law
    // (|lambda| <= 7, k <= 5).
    let eigen = run_suite("eigen", 7).unwrap();
    gate("2 (D_k oracle law)", &by_prefix(&eigen.checks, "oracle-law"), &mut out);
    gate("3 (content eigenvalues)", &by_prefix(&eigen.checks, "eigen"), &mut out);

    // 4. Jucys' theorem, n <= 7.
    let jucys = run_suite("jucys", 7).unwrap();
    gate("4 (Jucys)", &jucys.checks.iter().collect::<Vec<_>>(), &mut out);

    // 5. GPS operators against the oracle, n <= 6.
    let gps = run_suite("gps", 6).unwrap();
    gate("5 (H_rho vs oracle)", &gps.checks.iter().collect::<Vec<_>>(), &mut out);

    // 6 & 12. Bracket law at three rational points (|k|,|l| <= 3, degree <= 6,
    // central term included) and the Bernoulli cross-check (k <= 5, degree <= 7,
    // plus D_1 = -(1/2)(T_{0,2} + T_{0,1})).
    let w1inf = run_suite("w1inf", 7).unwrap();
    gate("6 (bracket law)", &by_prefix(&w1inf.checks, "bracket"), &mut out);

    // 7 & 8. HSS identity (lambda |- n <= 4, M = n) and the closed-form Wick
    // proposition (|rho| <= 3, M = 3, cap 8).
    let wick = run_suite("wick", 4).unwrap();
    gate("7 (HSS identity)", &by_prefix(&wick.checks, "hss"), &mut out);
    gate("8 (closed-form Wick)", &by_prefix(&wick.checks, "closed-form"), &mut out);

    // 9. n-independence of products and structure constants.
    let astr = run_suite("a-structure", 7).unwrap();
    gate("9 (n-independence)", &astr.checks.iter().collect::<Vec<_>>(), &mut out);

    // 10. Shifted power-sum relation, |lambda| <= 8, n <= 5.
    let pn = run_suite("pn", 7).unwrap();
    gate("10 (P_n relation)", &pn.checks.iter().collect::<Vec<_>>(), &mut out);

    // 11. Virasoro/Witt relations (degree <= 10, j,k <= 4) and the erasure
    // correspondence at support level (ratios are informational).
    let vira = run_suite("virasoro", 6).unwrap();
    gate("11 (Virasoro/erasure)", &vira.checks.iter().collect::<Vec<_>>(), &mut out);
    for note in vira.notes.iter().take(4) {
        println!("    info: {}", note);
    }

    gate("12 (Bernoulli assembly)", &by_prefix(&w1inf.checks, "bernoulli"), &mut out);
    gate(
        "12b (D_1 from T_{0,j})",
        &by_prefix(&w1inf.checks, "d1"),
        &mut out,
    );

    // The span checks from the same suite guard the W-algebra closure claim.
    let span = by_prefix(&w1inf.checks, "span");
    assert!(span.iter().all(|c| c.pass), "span checks failed");

    let failed: Vec<&'static str> = out.iter().filter(|o| !o.pass).map(|o| o.label).collect();
    assert!(failed.is_empty(), "failed criteria: {:?}", failed);
}
