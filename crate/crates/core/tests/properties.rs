use homoggb_core::properties::{lemma_suite, theorem_suite, TheoremSizes};
use homoggb_core::random::seed_from_env;

#[test]
fn lemma_identities_hold_on_random_samples() {
    let seed = seed_from_env();
    let outcomes = lemma_suite(seed, 1000);
    for o in &outcomes {
        println!("{}", o.line());
    }
    assert!(outcomes.iter().all(|o| o.passed()), "seed {seed}");
}

#[test]
fn transfers_hold_on_random_ideals() {
    let seed = seed_from_env();
    let outcomes = theorem_suite(seed, TheoremSizes::default());
    for o in &outcomes {
        println!("{}", o.line());
    }
    assert!(outcomes.iter().all(|o| o.passed()), "seed {seed}");
}
