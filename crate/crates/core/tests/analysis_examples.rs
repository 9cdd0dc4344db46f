use std::sync::Arc;

use gvz_core::analysis::{analyze, GroupAnalysis, LemmaStatus, OracleReport};
use gvz_core::group::{direct_product, Family, Group, Limits};

fn fam(s: &str) -> Arc<Group> {
    Arc::new(s.parse::<Family>().unwrap().build(&Limits::default()).unwrap())
}

fn product(a: &str, b: &str) -> Arc<Group> {
    Arc::new(direct_product(&fam(a), &fam(b), &Limits::default()).unwrap())
}

fn report(g: Arc<Group>) -> OracleReport {
    let r = analyze(g).unwrap();
    assert!(r.agreement, "{:?}", r.failures());
    assert!(r.failures().is_empty(), "{:?}", r.failures());
    r
}

fn verdicts(r: &OracleReport) -> [bool; 4] {
    [
        r.verdict_definition.holds,
        r.verdict_flat.holds,
        r.verdict_thm2.holds,
        r.verdict_thm3.holds,
    ]
}

#[test]
fn quaternion_is_gvz() {
    let r = report(fam("quaternion:8"));
    assert_eq!(verdicts(&r), [true; 4]);
    assert!(r.lemma_checks.iter().all(|c| c.status != LemmaStatus::Fail));
    let chi = r.characters.iter().find(|c| c.degree == 2).unwrap();
    assert!(chi.central_type);
    assert!(chi.sub_verdicts.definition && chi.sub_verdicts.degree && chi.sub_verdicts.commutator);
}

#[test]
fn dihedral_16_is_not_gvz() {
    let r = report(fam("dihedral:16"));
    assert_eq!(verdicts(&r), [false; 4]);
    let faithful = r
        .characters
        .iter()
        .find(|c| c.degree == 2 && c.kernel.is_trivial())
        .unwrap();
    assert!(!faithful.central_type);
    assert!(!faithful.sub_verdicts.definition && !faithful.sub_verdicts.degree && !faithful.sub_verdicts.commutator);
    let w = r.verdict_thm2.witness.as_ref().unwrap();
    assert_eq!(w.element, Some(1));
    assert!(r.characters[w.character.unwrap()].kernel.is_trivial());
}

#[test]
fn symmetric_3_is_not_gvz_and_not_nilpotent() {
    let r = report(fam("symmetric:3"));
    assert_eq!(verdicts(&r), [false; 4]);
    assert_eq!(r.verdict_thm3.witness.as_ref().unwrap().note, "not nilpotent");
    let mono = r.check("mono_nilp").unwrap();
    assert_eq!(mono.status, LemmaStatus::Pass);
    assert_eq!(mono.detail.as_deref(), Some("nilpotent: false"));
}

#[test]
fn linear_characters_are_central_type() {
    for s in ["symmetric:4", "dihedral:16", "abelian:2,6"] {
        let r = report(fam(s));
        for c in r.characters.iter().filter(|c| c.degree == 1) {
            assert!(c.central_type);
            assert_eq!(c.center.order(), r.order);
        }
    }
}

#[test]
fn known_classifications() {
    for s in [
        "extraspecial:3,1,1",
        "extraspecial:3,1,2",
        "heisenberg:3",
        "dihedral:8",
        "quaternion:8",
    ] {
        assert_eq!(verdicts(&report(fam(s))), [true; 4], "{s}");
    }
    for s in [
        "dihedral:16",
        "symmetric:3",
        "alternating:4",
        "quaternion:16",
        "semidihedral:16",
    ] {
        assert_eq!(verdicts(&report(fam(s))), [false; 4], "{s}");
    }
    for s in ["cyclic:12", "abelian:2,2,2"] {
        let r = report(fam(s));
        assert_eq!(verdicts(&r), [true; 4], "{s}");
        assert!(r.abelian_convention());
    }
}

#[test]
fn c2_times_d16_is_not_gvz() {
    let r = report(product("cyclic:2", "dihedral:16"));
    assert!(!r.verdict_definition.holds);
}

#[test]
fn fr1_examples() {
    let r = report(fam("quaternion:8"));
    assert_eq!(
        r.check("fr1_count").unwrap().detail.as_deref(),
        Some("constituents 1, coset classes 1")
    );
    let r = report(fam("dihedral:16"));
    assert_eq!(
        r.check("fr1_count").unwrap().detail.as_deref(),
        Some("constituents 2, coset classes 2")
    );
    let r = report(product("quaternion:8", "cyclic:2"));
    assert_eq!(r.check("fr1_count").unwrap().status, LemmaStatus::Skipped);
    assert_eq!(r.check("fr1_equivalence").unwrap().status, LemmaStatus::Skipped);
    assert_eq!(r.skipped_checks(), 3);
}

#[test]
fn fullyram_examples() {
    let r = report(fam("quaternion:8"));
    assert_eq!(
        r.check("fullyram").unwrap().detail.as_deref(),
        Some("1 of 2 central characters fully ramified")
    );
    let r = report(fam("abelian:3,3"));
    assert_eq!(
        r.check("fullyram").unwrap().detail.as_deref(),
        Some("9 of 9 central characters fully ramified")
    );
    let r = report(fam("dihedral:16"));
    assert_eq!(
        r.check("fullyram").unwrap().detail.as_deref(),
        Some("0 of 2 central characters fully ramified")
    );
}

#[test]
fn abelian_quotient_remark() {
    let r = report(fam("quaternion:8"));
    assert_eq!(
        r.check("abelian_quotient_remark").unwrap().detail.as_deref(),
        Some("5 of 5 characters applicable")
    );
    let g = fam("dihedral:16");
    let a = GroupAnalysis::new(g.clone()).unwrap();
    let faithful = a.characters().iter().find(|c| c.kernel.is_trivial()).unwrap();
    assert!(!g.derived_subgroup().is_subgroup_of(&faithful.center));
}

#[test]
fn sylow_reduction() {
    for (a, b) in [("quaternion:8", "cyclic:3"), ("dihedral:16", "cyclic:3")] {
        let r = report(product(a, b));
        assert_eq!(r.check("sylow_reduction").unwrap().status, LemmaStatus::Pass);
    }
    assert_eq!(
        report(fam("cyclic:12")).check("sylow_reduction").unwrap().status,
        LemmaStatus::Pass
    );
    assert_eq!(
        report(fam("dihedral:16")).check("sylow_reduction").unwrap().status,
        LemmaStatus::Skipped
    );
    assert_eq!(
        report(fam("symmetric:3")).check("sylow_reduction").unwrap().status,
        LemmaStatus::Skipped
    );
}

#[test]
fn products_inherit_the_verdict() {
    for (a, b, gvz) in [
        ("quaternion:8", "cyclic:3", true),
        ("dihedral:8", "dihedral:8", true),
        ("quaternion:8", "heisenberg:3", true),
        ("dihedral:16", "cyclic:3", false),
        ("cyclic:2", "symmetric:3", false),
    ] {
        let g = product(a, b);
        assert_eq!(g.is_nilpotent(), a != "cyclic:2", "{a} x {b}");
        let r = report(g);
        assert_eq!(verdicts(&r), [gvz; 4], "{a} x {b}");
    }
}

#[test]
fn product_tables_are_outer_products() {
    let (a, b) = (fam("quaternion:8"), fam("cyclic:3"));
    let g = product("quaternion:8", "cyclic:3");
    let (ta, tb) = (
        gvz_core::character::CharacterTable::compute(a.clone()).unwrap(),
        gvz_core::character::CharacterTable::compute(b.clone()).unwrap(),
    );
    let t = gvz_core::character::CharacterTable::compute(g.clone()).unwrap();
    assert_eq!(t.len(), ta.len() * tb.len());
    // Element x·|B| + y is (x, y); each χ of G is some ν × μ.
    for chi in 0..t.len() {
        let found = (0..ta.len()).any(|i| {
            (0..tb.len()).any(|j| {
                g.elements().all(|e| {
                    let (x, y) = (e / b.order(), e % b.order());
                    t.value(chi, e) == &(ta.value(i, x) * tb.value(j, y))
                })
            })
        });
        assert!(found, "χ{chi}");
    }
}
