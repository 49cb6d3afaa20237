//! Run the built-in verification suites end to end and require every check
//! to pass.

use period_hecke::verify::{run_suite, Suite, VerifyOptions};

#[test]
fn all_suites_pass() {
    let opts = VerifyOptions::default();
    let checks = run_suite(Suite::All, &opts);
    assert!(!checks.is_empty());
    for check in &checks {
        println!(
            "[{}] {} — {}",
            if check.passed { "PASS" } else { "FAIL" },
            check.id,
            check.description
        );
    }
    let failed: Vec<&str> = checks.iter().filter(|c| !c.passed).map(|c| c.id.as_str()).collect();
    assert!(failed.is_empty(), "failing checks: {failed:?}");
}
