//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line. The two slow-tier criteria are `#[ignore]`d by default;
//! run them with `cargo test -- --ignored` or `kittab selftest --slow`.

use kittab::acceptance;

fn gate(name: &str, f: fn() -> Result<String, String>) {
    match f() {
        Ok(msg) => println!("criterion {}: pass — {}", name, msg),
        Err(msg) => {
            println!("criterion {}: FAIL — {}", name, msg);
            panic!("criterion {} failed: {}", name, msg);
        }
    }
}

#[test]
fn criterion_1_generic_kitt_examples() {
    gate("1: generic Kitt examples", acceptance::criterion1);
}

#[test]
fn criterion_2_colon_example() {
    gate("2: colon example over QQ", acceptance::criterion2);
}

#[test]
#[ignore = "slow tier"]
fn criterion_3_height_gap() {
    gate("3: height gap over F_32003", acceptance::criterion3);
}

#[test]
#[ignore = "slow tier"]
fn criterion_4_strict_containment() {
    gate("4: strict containment over F_32003", acceptance::criterion4);
}

#[test]
fn criterion_5_specialization_collapse() {
    gate("5: specialization collapse", acceptance::criterion5);
}

#[test]
fn criterion_6_identity_suite() {
    gate("6: identity suite", acceptance::criterion6);
}

#[test]
fn criterion_7_deformation_verification() {
    gate("7: deformation verification", acceptance::criterion7);
}

#[test]
fn criterion_8_kernel_correctness() {
    gate("8: kernel correctness", acceptance::criterion8);
}
