//! End-to-end acceptance suite. Each test checks one shipping criterion at
//! its stated tolerance and prints a single pass/fail line.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use period_hecke::verify::{run_suite, Suite, VerifyOptions};
use period_hecke::{
    cosets, h_tilde, h_tilde_level1, lns, m_of, phi, rho, s_m_oracle, sigma, ExtRational,
    FormalSum, HeckeRep, Mat2,
};

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_period-hecke"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
    )
}

fn criterion(n: u32, summary: &str, body: impl FnOnce() -> Result<String, String>) {
    match body() {
        Ok(detail) => println!("criterion {n}: PASS — {summary} ({detail})"),
        Err(msg) => {
            println!("criterion {n}: FAIL — {summary}: {msg}");
            panic!("criterion {n} failed: {msg}");
        }
    }
}

fn fs(mats: &[Mat2]) -> FormalSum {
    FormalSum::from_terms(mats.iter().map(|&m| (1, m)))
}

fn rat(num: i64, den: i64) -> ExtRational {
    ExtRational::new(num, den)
}

const A1: Mat2 = Mat2::new(1, 0, 0, 2);
const A2: Mat2 = Mat2::new(1, 1, 0, 2);
const A3: Mat2 = Mat2::new(2, 0, 0, 1);
const W: Mat2 = Mat2::new(2, 0, 1, 1);

#[test]
fn criterion_1_level1_degree2_golden() {
    criterion(1, "level-1 degree-2 operator is exact and fast", || {
        let golden = fs(&[A1, A2, W, A3]);
        // warm up, then time the construction itself
        let _ = h_tilde_level1(3).map_err(|e| e.to_string())?;
        let start = Instant::now();
        let sum = h_tilde_level1(2).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        if sum != golden {
            return Err(format!("got {sum}"));
        }
        if elapsed >= Duration::from_millis(10) {
            return Err(format!("construction took {elapsed:?}, budget 10 ms"));
        }
        let (code, stdout) = run_cli(&["hecke", "1", "2", "--format", "json"]);
        let expected = r#"[{"coeff":1,"mat":[[1,0],[0,2]]},{"coeff":1,"mat":[[1,1],[0,2]]},{"coeff":1,"mat":[[2,0],[0,1]]},{"coeff":1,"mat":[[2,0],[1,1]]}]"#;
        if code != 0 || stdout.trim() != expected {
            return Err(format!("cli output mismatch: exit {code}, stdout {stdout:?}"));
        }
        Ok(format!("construction {elapsed:?}"))
    });
}

#[test]
fn criterion_2_level2_degree2_grid_golden() {
    criterion(2, "level-2 degree-2 grid reproduces all three components", || {
        let table = cosets(2).map_err(|e| e.to_string())?;
        let _ = h_tilde(2, 3, &table).map_err(|e| e.to_string())?; // warm up
        let start = Instant::now();
        let rep = h_tilde(2, 2, &table).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();

        let cells: [(usize, usize, FormalSum); 6] = [
            (1, 1, fs(&[A1, A2])),
            (1, 2, fs(&[W])),
            (2, 1, fs(&[A2])),
            (2, 2, fs(&[A3, W])),
            (3, 1, fs(&[A1])),
            (3, 2, fs(&[A3])),
        ];
        for (j, k, want) in &cells {
            if rep.cell(*j, *k) != want {
                return Err(format!("cell ({j},{k}) is {}", rep.cell(*j, *k)));
            }
        }
        for j in 1..=3 {
            if !rep.cell(j, 3).is_empty() {
                return Err(format!("column 3 used in row {j}"));
            }
        }
        if rep.row_term_count(3) != 2 || rep.row_term_count(1) != 3 || rep.row_term_count(2) != 3 {
            return Err("row term counts off".into());
        }
        if elapsed >= Duration::from_millis(50) {
            return Err(format!("construction took {elapsed:?}, budget 50 ms"));
        }
        let (code, stdout) = run_cli(&["hecke", "2", "2", "--format", "json"]);
        let parsed: HeckeRep = serde_json::from_str(stdout.trim())
            .map_err(|e| format!("cli json does not parse: {e}"))?;
        if code != 0 || parsed != rep {
            return Err("cli grid differs from library grid".into());
        }
        Ok(format!("construction {elapsed:?}"))
    });
}

#[test]
fn criterion_3_sigma_phi_table_golden() {
    criterion(3, "phi and sigma tables at level 2, degree 2", || {
        let table = cosets(2).map_err(|e| e.to_string())?;
        let a = [A1, A2, A3];
        let phis: Vec<Vec<usize>> = a.iter().map(|ai| phi(ai, &table)).collect();
        if phis != vec![vec![1, 2, 2], vec![1, 1, 1], vec![1, 2, 2]] {
            return Err(format!("phi = {phis:?}"));
        }
        let want_sigma = [
            [A1, A2, A3], // alpha_1 = I
            [A3, A2, A1], // alpha_2 = S
            [A3, A1, A2], // alpha_3 = ST
        ];
        for (j, row) in want_sigma.iter().enumerate() {
            for (i, want) in row.iter().enumerate() {
                let got = sigma(table.rep(j + 1), &a[i]);
                if got != *want {
                    return Err(format!("sigma_alpha_{}(A_{}) = {got}", j + 1, i + 1));
                }
            }
        }
        Ok("9 sigma values, 3 phi rows".into())
    });
}

#[test]
fn criterion_4_rho_golden() {
    criterion(4, "induced permutations of I and the marked inverse", || {
        let table = cosets(2).map_err(|e| e.to_string())?;
        let id = rho(&Mat2::I, &table);
        if !id.is_identity() {
            return Err(format!("rho(I) = {id}"));
        }
        let g = Mat2::new(2, -1, 1, 0).inv_unimodular().map_err(|e| e.to_string())?;
        let swap = rho(&g, &table);
        if swap.mapping() != [2, 1, 3] {
            return Err(format!("rho = {swap}"));
        }
        Ok("identity and transposition (1 2)".into())
    });
}

#[test]
fn criterion_5_oracle_equivalence_to_30() {
    criterion(5, "level-1 support equals the enumerated region for all degrees <= 30", || {
        let start = Instant::now();
        for m in 1..=30 {
            let sum = h_tilde_level1(m).map_err(|e| e.to_string())?;
            if !sum.terms().iter().all(|&(c, _)| c == 1) {
                return Err(format!("degree {m} has a non-unit coefficient"));
            }
            let support: BTreeSet<Mat2> = sum.support().collect();
            if support != s_m_oracle(m) {
                return Err(format!("degree {m} support mismatch"));
            }
        }
        let elapsed = start.elapsed();
        if elapsed >= Duration::from_secs(5) {
            return Err(format!("took {elapsed:?}, budget 5 s"));
        }
        Ok(format!("30 degrees in {elapsed:?}"))
    });
}

#[test]
fn criterion_6_farey_goldens() {
    criterion(6, "left neighbor chains and path sums at 0 and 1/2", || {
        let zero_chain = lns(ExtRational::ZERO).map_err(|e| e.to_string())?;
        if zero_chain.chain() != [ExtRational::NEG_INFINITY, ExtRational::ZERO] {
            return Err(format!("lns(0) = {:?}", zero_chain.chain()));
        }
        let half_chain = lns(rat(1, 2)).map_err(|e| e.to_string())?;
        if half_chain.chain() != [ExtRational::NEG_INFINITY, ExtRational::ZERO, rat(1, 2)] {
            return Err(format!("lns(1/2) = {:?}", half_chain.chain()));
        }
        if m_of(ExtRational::ZERO).map_err(|e| e.to_string())? != FormalSum::identity() {
            return Err("M(0) is not the identity".into());
        }
        let want = fs(&[Mat2::I, Mat2::new(2, -1, 1, 0)]);
        if m_of(rat(1, 2)).map_err(|e| e.to_string())? != want {
            return Err("M(1/2) mismatch".into());
        }
        let (code, stdout) = run_cli(&["lns", "1/2"]);
        if code != 0 || !stdout.contains("-inf -> 0 -> 1/2") {
            return Err(format!("cli lns output {stdout:?}"));
        }
        let (code, stdout) = run_cli(&["mq", "0", "--format", "json"]);
        if code != 0 || stdout.trim() != r#"[{"coeff":1,"mat":[[1,0],[0,1]]}]"# {
            return Err(format!("cli mq output {stdout:?}"));
        }
        Ok("chains, sums and cli output match".into())
    });
}

#[test]
fn criterion_7_property_suites() {
    criterion(7, "exact-layer property suites run clean", || {
        let opts = VerifyOptions::default();
        let start = Instant::now();
        let mut checks = run_suite(Suite::Farey, &opts);
        checks.extend(run_suite(Suite::Cosets, &opts));
        checks.extend(run_suite(Suite::Hecke, &opts));
        let elapsed = start.elapsed();
        let failed: Vec<&str> =
            checks.iter().filter(|c| !c.passed).map(|c| c.id.as_str()).collect();
        if !failed.is_empty() {
            return Err(format!("failing checks {failed:?}"));
        }
        if elapsed >= Duration::from_secs(60) {
            return Err(format!("took {elapsed:?}, budget 60 s"));
        }
        Ok(format!("{} checks in {elapsed:?}", checks.len()))
    });
}

#[test]
fn criterion_8_numeric_suite() {
    criterion(8, "numeric suite holds at its pinned tolerances", || {
        let opts = VerifyOptions::default();
        let start = Instant::now();
        let checks = run_suite(Suite::Numeric, &opts);
        let elapsed = start.elapsed();
        let failed: Vec<&str> =
            checks.iter().filter(|c| !c.passed).map(|c| c.id.as_str()).collect();
        if !failed.is_empty() {
            return Err(format!("failing checks {failed:?}"));
        }
        if elapsed >= Duration::from_secs(30) {
            return Err(format!("took {elapsed:?}, budget 30 s"));
        }
        Ok(format!("{} checks in {elapsed:?}", checks.len()))
    });
}

#[test]
fn criterion_9_level1_reduction() {
    criterion(9, "grids at level 1 collapse to the scalar operator", || {
        let table = cosets(1).map_err(|e| e.to_string())?;
        for m in [2i64, 3, 5, 7, 11, 13] {
            let rep = h_tilde(1, m, &table).map_err(|e| e.to_string())?;
            if rep.mu() != 1 {
                return Err(format!("mu = {} at degree {m}", rep.mu()));
            }
            if rep.cell(1, 1) != &h_tilde_level1(m).map_err(|e| e.to_string())? {
                return Err(format!("degree {m} differs"));
            }
        }
        Ok("primes 2..=13".into())
    });
}
