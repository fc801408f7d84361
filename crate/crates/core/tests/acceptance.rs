mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};

use fliplab::checks::{self, CheckReport};
use fliplab::signotope::binomial;
use serde_json::Value;

const SEED: u64 = 2024;

fn rows(r: &CheckReport, key: &str) -> Vec<Value> {
    r.details[key].as_array().cloned().unwrap_or_default()
}

fn num(v: &Value, key: &str) -> usize {
    v[key].as_u64().unwrap_or_else(|| panic!("missing {key} in {v}")) as usize
}

/// Compares the measured values of a report with values computed here.
fn cross_check(r: &CheckReport) -> Result<(), String> {
    let fail = |m: String| Err(m);
    match r.criterion {
        1 => {
            for row in rows(r, "rows") {
                let n = num(&row, "n");
                if n <= 6 && num(&row, "vertices") != common::backtracking_count(n) {
                    return fail(format!("n={n}: vertices differ from the backtracking count"));
                }
            }
        }
        2 => {
            for row in rows(r, "rows") {
                let n = num(&row, "n");
                if num(&row, "min") != n - 2 || 3 * num(&row, "max") > n * (n - 2) {
                    return fail(format!("n={n}: degree range"));
                }
            }
        }
        3 => {
            for row in rows(r, "rows") {
                let n = num(&row, "n");
                if n <= 5 && num(&row, "value") != n - 2 {
                    return fail(format!("n={n}: connectivity"));
                }
            }
        }
        4 => {
            if num(&r.details, "feasible") != common::backtracking_count(5) {
                return fail("fixed slopes do not keep every five-line signotope".into());
            }
        }
        9 => {
            if num(&r.details, "classes") != 4 || num(&r.details, "distance") != 2 {
                return fail("three-circle classes".into());
            }
        }
        11 => {
            for row in rows(r, "canonical_distance") {
                let n = num(&row, "n");
                if num(&row, "distance") != 2 * binomial(n, 3) {
                    return fail(format!("n={n}: canonical distance"));
                }
            }
        }
        13 => {
            for row in rows(r, "rows") {
                let k = num(&row, "k");
                if num(&row, "interior") != k * k.saturating_sub(1) / 2 || num(&row, "left_after_replay") != 0 {
                    return fail(format!("k={k}: lens interior"));
                }
            }
        }
        _ => {}
    }
    Ok(())
}

fn main() {
    let mut failed = Vec::new();
    for id in 1..=13 {
        let title = checks::CRITERIA[id - 1];
        let outcome = catch_unwind(AssertUnwindSafe(|| checks::run(id, SEED)));
        let verdict = match outcome {
            Ok(Ok(r)) if r.pass => cross_check(&r),
            Ok(Ok(r)) => Err(format!("details {}", r.details)),
            Ok(Err(e)) => Err(format!("error {e}")),
            Err(_) => Err("panicked".into()),
        };
        match verdict {
            Ok(()) => println!("[PASS] {id} {title}"),
            Err(why) => {
                println!("[FAIL] {id} {title}: {why}");
                failed.push(id);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: 13 of 13 passed");
    } else {
        println!("acceptance: failed {failed:?}");
        std::process::exit(1);
    }
}
