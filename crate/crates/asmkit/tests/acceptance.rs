//! The ten acceptance checks, one test each, in the order `asmkit selftest`
//! prints them. Every test prints its pass line; a failure panics with the
//! check's own description.

use asmkit::cli::selftest::run_all;

fn run(index: usize) {
    let outcome = run_all(Some(index))
        .pop()
        .expect("every index in 1..=10 names a check");
    match outcome.result {
        Ok(detail) => println!("criterion {:>2} {:<20} pass: {detail}", outcome.index, outcome.name),
        Err(detail) => panic!(
            "criterion {:>2} {:<20} FAIL: {detail}",
            outcome.index, outcome.name
        ),
    }
}

#[test]
fn criterion_01_counting_agreement() {
    run(1);
}

#[test]
fn criterion_02_order3_atlas() {
    run(2);
}

#[test]
fn criterion_03_round_trips() {
    run(3);
}

#[test]
fn criterion_04_weighted_identities() {
    run(4);
}

#[test]
fn criterion_05_hybrid_factorization() {
    run(5);
}

#[test]
fn criterion_06_half_boards() {
    run(6);
}

#[test]
fn criterion_07_loop_statistics() {
    run(7);
}

#[test]
fn criterion_08_hankel_identity() {
    run(8);
}

#[test]
fn criterion_09_sampler() {
    run(9);
}

#[test]
fn criterion_10_recurrences() {
    run(10);
}
