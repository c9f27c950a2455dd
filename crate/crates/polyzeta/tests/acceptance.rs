//! Acceptance gate: runs every verification suite at its pinned tolerance
//! and prints one pass/fail line per criterion (run with `-- --nocapture`
//! to see them). Suites are grouped onto the criteria they gate.

use polyzeta::verify::{run_suite, SuiteResult, VerifyOptions};

/// criterion number, description with pinned tolerance, suites gating it
const CRITERIA: &[(u32, &str, &[&str])] = &[
    (1, "surjection lemma: <(x1^+)^sh m|x1^n> = m!S2(n,m), n,m <= 8 exact; EGF to order 20", &["surjection-lemma"]),
    (2, "quasi-shuffle morphism: H(u st v)(N) = H(u)(N)H(v)(N), weight <= 6 x N <= 40 exhaustive + 200 heavier, exact", &["quasi-shuffle"]),
    (3, "shuffle morphism on Taylor data and Hadamard identity, order 20, exact, 10 random pairs each", &["shuffle-li", "hadamard-eq3"]),
    (4, "WI closed form = recursive star stuffle; (z^k yk)* = exp_st of the zeta-tail exponent, weight 8, k in {1,2,3}, exact", &["wi-star", "wik-exp"]),
    (5, "one-parameter group law G(1/3) st G(1/5) = G(8/15), weight 6, exact rationals", &["group-law"]),
    (6, "preimage: Li(preimage(T,12)) = T to order 10, 10 random degree-10 polynomials, exact", &["preimage"]),
    (7, "zeta({2}^k)/pi^{2k} = 1/(2k+1)! for k = 1..6 at 50 digits, tol 1e-30", &["zeta-2k"]),
    (8, "zeta(3,1) = pi^4/360 within 1e-6, and the 4^{+-k} sign resolution", &["zeta-31"]),
    (9, "sup |exp(l_2(ix)) - sin(pi x)/(pi x)| < 1e-20 on a 50-point grid |x| <= 0.9, 50 digits", &["sin-formula"]),
    (10, "generalized reflection |LHS-RHS| < 1e-15 at 20 points |z| < 0.8, r in {1,2,3}; r=1 classical", &["reflection"]),
    (11, "zero sets: |invGamma_{y_r}(1+p)| < 1e-20 at predicted zeros |p| <= 3.2, >= 0.01 at controls", &["zeros"]),
    (12, "regularization is a stuffle morphism (weight <= 5, exact); gamma(y1y1) vs H_{1,1} asymptotic fit within 1e-8", &["regularization"]),
    (13, "dom witness: Li(S(t)) = (1-z)/(1-(t+1)z) to order 12 exactly, t in {1/2, 1, 2}", &["dom-witness"]),
];

#[test]
fn acceptance_criteria() {
    let opts = VerifyOptions::default();
    let mut all_passed = true;
    let mut lines = Vec::new();
    for (num, what, suites) in CRITERIA {
        let results: Vec<SuiteResult> =
            suites.iter().map(|s| run_suite(s, &opts).expect("suite runs")).collect();
        let passed = results.iter().all(SuiteResult::passed);
        let ms: u128 = results.iter().map(|r| r.elapsed_ms).sum();
        let status = if passed { "PASS" } else { "FAIL" };
        lines.push(format!("[{status}] criterion {num:>2}: {what} ({ms} ms)"));
        if !passed {
            for r in &results {
                for c in r.checks.iter().filter(|c| !c.passed) {
                    lines.push(format!("         {} failed: {} - {}", r.name, c.label, c.detail));
                }
            }
            all_passed = false;
        }
    }
    for l in &lines {
        println!("{l}");
    }
    assert!(all_passed, "acceptance criteria failed:\n{}", lines.join("\n"));
}
