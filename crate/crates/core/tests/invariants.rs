use qcoact::coaction::families;
use qcoact::invariants::{
    canonical_map_witnesses, equivalent_x0_forms, verify_appendix, verify_s4, verify_x_coinvariance,
    verify_y_coinvariance, y0_forms, y0_under_bl_a, y_relation_probe, Decider,
};
use qcoact::{Element, Rational, Status};

fn assert_passes(r: &qcoact::Report) {
    let failed: Vec<&str> = r.failures().map(|c| c.id.as_str()).collect();
    assert!(failed.is_empty(), "{}: {failed:?}", r.suite);
}

#[test]
fn four_sphere_generators_are_coinvariant_under_the_first_family() {
    let r = verify_x_coinvariance(&families::bl_a()).unwrap();
    assert_eq!(r.checks.len(), 6);
    assert_passes(&r);
}

#[test]
fn y_generators_are_coinvariant_under_the_second_family() {
    let r = verify_y_coinvariance(&families::bl_b()).unwrap();
    assert_eq!(r.checks.len(), 6);
    assert_passes(&r);
}

#[test]
fn x0_forms_agree() {
    let r = equivalent_x0_forms().unwrap();
    assert_eq!(r.checks.len(), 7);
    assert_passes(&r);
}

#[test]
fn four_sphere_relations_hold() {
    let r = verify_s4().unwrap();
    assert_eq!(r.checks.len(), 10);
    assert_passes(&r);
}

#[test]
fn appendix_identities_hold() {
    let r = verify_appendix().unwrap();
    let count = |part: &str| r.checks.iter().filter(|c| c.id.contains(part)).count();
    assert_eq!(count("/cubic-simple/"), 6);
    assert_eq!(count("/cubic-tricky/"), 5);
    assert_eq!(count("/quartic/"), 26);
    assert_eq!(count("/final"), 7);
    assert_passes(&r);
}

#[test]
fn canonical_witnesses_hold() {
    let r = canonical_map_witnesses(&families::bl_a()).unwrap();
    assert_passes(&r);
}

#[test]
fn second_display_of_y0_is_not_implied_by_the_relations() {
    let r = y0_forms().unwrap();
    let status = |id: &str| r.checks.iter().find(|c| c.id == id).unwrap().status;
    assert_eq!(status("forms/Y0/self-adjoint"), Status::Pass);
    assert_eq!(status("forms/Y0/second-form"), Status::Fail);
}

#[test]
fn one_is_not_in_the_ideal() {
    let d = Decider::new().unwrap();
    assert_eq!(d.residual_terms(&Element::one()).unwrap(), 1);
}

#[test]
fn y0_under_the_first_family_is_reported() {
    let (r, shown) = y0_under_bl_a().unwrap();
    assert_eq!(r.is_zero(), shown == "0");
}

#[test]
fn y_probe_runs() {
    let deps = y_relation_probe(&Rational::new(3.into(), 4.into())).unwrap();
    for d in &deps {
        assert!(d.ends_with("= 0"));
    }
}
