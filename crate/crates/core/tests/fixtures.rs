use std::path::PathBuf;

use qcoact::presentation::{parse_presentation_unchecked, preset_vs_misoriented};
use qcoact::{parse_presentation, preset_bl, preset_suq2, preset_vs, Presentation};

fn read(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    std::fs::read_to_string(&path).unwrap()
}

fn fixture(name: &str) -> Presentation {
    parse_presentation(&read(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn sorted_rules(p: &Presentation) -> Vec<String> {
    let mut v: Vec<String> = p.rules().iter().map(|r| format!("{:?} -> {}", r.lhs, p.display(&r.rhs))).collect();
    v.sort();
    v
}

fn assert_same(file: &Presentation, built_in: &Presentation) {
    assert_eq!(file.name, built_in.name);
    assert_eq!(file.generator_names, built_in.generator_names);
    assert_eq!(sorted_rules(file), sorted_rules(built_in));
    for (l, r) in file.displayed_relations() {
        assert!(file.equal(&l, &r).unwrap(), "{}: {} = {}", file.name, file.display(&l), file.display(&r));
    }
}

#[test]
fn fixtures_match_the_built_in_presets() {
    assert_same(&fixture("suq2.qalg"), &preset_suq2());
    assert_same(&fixture("vs3.qalg"), &preset_vs(1).unwrap());
    assert_same(&fixture("vs5.qalg"), &preset_vs(2).unwrap());
    assert_same(&fixture("vs7.qalg"), &preset_vs(3).unwrap());
    assert_same(&fixture("bl7.qalg"), &preset_bl());
}

#[test]
fn misoriented_fixture_matches_and_is_not_confluent() {
    let text = read("vs3-misoriented.qalg");
    assert!(matches!(parse_presentation(&text), Err(qcoact::Error::NotOrientable(_))));
    let p = parse_presentation_unchecked(&text).unwrap();
    assert_eq!(p.name, "VS3-misoriented");
    assert_eq!(sorted_rules(&p), sorted_rules(&preset_vs_misoriented(1).unwrap()));
    assert!(!p.nonconfluent_pairs(5).unwrap().is_empty());
}

#[test]
fn printed_form_round_trips() {
    for name in ["suq2.qalg", "vs3.qalg", "vs5.qalg", "vs7.qalg", "bl7.qalg"] {
        let p = fixture(name);
        let again = parse_presentation(&p.to_dsl()).unwrap();
        assert_eq!(again.to_dsl(), p.to_dsl(), "{name}");
    }
}
