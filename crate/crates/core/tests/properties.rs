mod common;

use common::Outcome;

fn assert_holds(o: Outcome) {
    assert!(o.cases >= 100);
    if let Some(f) = o.failure {
        panic!("{}: {f}", o.name);
    }
}

#[test]
fn scalar_ring_axioms() {
    assert_holds(common::scalar_ring_axioms());
}

#[test]
fn scalar_involution() {
    assert_holds(common::scalar_involution());
}

#[test]
fn rewriting_terminates_by_decrease() {
    assert_holds(common::rewriting_terminates_by_decrease());
}

#[test]
fn normalization_is_idempotent() {
    assert_holds(common::normalization_is_idempotent());
}

#[test]
fn adjoint_is_anti_involution() {
    assert_holds(common::adjoint_is_anti_involution());
}

#[test]
fn adjoint_respects_relations() {
    assert_holds(common::adjoint_respects_relations());
}

#[test]
fn equality_is_a_congruence() {
    assert_holds(common::equality_is_a_congruence());
}
