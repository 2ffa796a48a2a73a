mod common;

use common::{brute_functors, gamoid, game, iso, strategy};
use gamoid::corpus::fixture_gamoids;
use gamoid::formers::universe::invertible_morphisms;
use gamoid::gamoid::{
    check_equality_preserving, check_groupoid_laws, compose_morphisms, enumerate_morphisms,
    explicit, identity_morphism, is_subgamoid, Object,
};

const SMALL: [&str; 7] = ["1", "BPT", "BPT2", "N2C", "D2", "N2A", "BTF"];

#[test]
fn fixture_gamoids_satisfy_groupoid_laws() {
    for g in fixture_gamoids() {
        let r = check_groupoid_laws(&g);
        assert!(r.passed(), "{}: {r}", g.name());
    }
}

#[test]
fn boolean_gamoid_shape() {
    let g = gamoid("BOOLG");
    assert_eq!(g.objects().len(), 4);
    let b = Object::Strategy(strategy("bullet"));
    assert_eq!(g.hom(&b, &b).len(), 2);
    let (t, f) = (Object::Strategy(strategy("tt_only")), Object::Strategy(strategy("ff_only")));
    assert_eq!(g.hom(&t, &f).len(), 1);
    assert!(g.hom(&t, &b).is_empty());
    assert_eq!(g.components().len(), 3);
}

#[test]
fn morphism_search_matches_brute_force() {
    for a in SMALL {
        for b in SMALL {
            let (ga, gb) = (gamoid(a), gamoid(b));
            let (all, inv) = brute_functors(&ga, &gb);
            let found = enumerate_morphisms(&ga, &gb, None).unwrap();
            assert_eq!(found.len(), all, "{a} → {b}");
            assert_eq!(invertible_morphisms(&ga, &gb).unwrap().len(), inv, "{a} → {b}");
            for f in &found {
                assert!(check_equality_preserving(f).passed(), "{a} → {b}");
            }
        }
    }
}

#[test]
fn morphisms_form_a_category() {
    let (x, y, z) = (gamoid("N2C"), gamoid("BPT"), gamoid("N2A"));
    let fs = enumerate_morphisms(&x, &y, None).unwrap();
    let gs = enumerate_morphisms(&y, &z, None).unwrap();
    let hs = enumerate_morphisms(&z, &x, None).unwrap();
    assert!(!fs.is_empty() && !gs.is_empty() && !hs.is_empty());
    for f in &fs {
        let l = compose_morphisms(&identity_morphism(&x), f).unwrap();
        let r = compose_morphisms(f, &identity_morphism(&y)).unwrap();
        assert_eq!(l.map(), f.map());
        assert_eq!(r.map(), f.map());
        for g in &gs {
            for h in &hs {
                let a = compose_morphisms(&compose_morphisms(f, g).unwrap(), h).unwrap();
                let b = compose_morphisms(f, &compose_morphisms(g, h).unwrap()).unwrap();
                assert_eq!(a.map(), b.map());
            }
        }
    }
}

#[test]
fn explicit_gamoids_are_checked_not_completed() {
    let b = game("BOOL");
    let bullet = strategy("bullet");
    let only_rv = explicit("R", &b, std::slice::from_ref(&bullet), &[iso("rv")]).unwrap();
    let r = check_groupoid_laws(&only_rv);
    assert!(!r.passed());
    assert_eq!(r.first_failure().unwrap().0, "identities");
    let both = explicit("B", &b, &[bullet], &[iso("cp"), iso("rv")]).unwrap();
    assert!(check_groupoid_laws(&both).passed());
    assert!(is_subgamoid(&both, &gamoid("BOOLG")));
    assert!(!is_subgamoid(&only_rv, &gamoid("BOOLG")));
}
