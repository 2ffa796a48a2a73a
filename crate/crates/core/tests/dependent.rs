mod common;

use common::{brute_functors, gamoid};
use gamoid::corpus::{all_small_families, families_over, pool, small_bases};
use gamoid::dependent::{
    check_constructions, check_dependent, dep_fun_space, dependent_union, ev_functor,
    id_gamoid, DependentGamoid,
};
use gamoid::formers::universe_gamoid;

#[test]
fn family_generation_is_exhaustive() {
    let pool = pool();
    let u = universe_gamoid(&pool, 0).unwrap();
    for base in small_bases() {
        let fams = families_over(&pool, &base).unwrap();
        assert_eq!(fams.len(), brute_functors(&base, &u).0, "{}", base.name());
    }
}

#[test]
fn every_small_family_passes_construction_laws() {
    let fams = all_small_families().unwrap();
    assert!(fams.len() >= 50);
    for b in &fams {
        let r = check_dependent(b);
        assert!(r.passed(), "{b:?}: {r}");
        let r = check_constructions(b);
        assert!(r.passed(), "{b:?}: {r}");
    }
}

/// `|hom(σ&τ, σ′&τ′)| = Σ_{p : σ → σ′} |hom_{Bσ′}(Bp(τ), τ′)|`.
#[test]
fn union_hom_sets_have_the_tagged_size() {
    for b in all_small_families().unwrap() {
        let u = dependent_union(&b).unwrap();
        for x in u.objects() {
            for y in u.objects() {
                let (s, t) = x.as_pair().unwrap();
                let (s2, t2) = y.as_pair().unwrap();
                let expected: usize = b
                    .base()
                    .hom(s, s2)
                    .iter()
                    .map(|p| b.fiber(s2).unwrap().hom(&b.tr_obj(p, t).unwrap(), t2).len())
                    .sum();
                assert_eq!(u.hom(x, y).len(), expected, "{b:?}");
            }
        }
    }
}

#[test]
fn constant_families_have_functor_sections() {
    for base in small_bases() {
        for fib in ["BPT", "N2C", "D2"] {
            let f = gamoid(fib);
            let b = DependentGamoid::constant(fib, &base, &f);
            let pi = dep_fun_space(&b).unwrap();
            assert_eq!(pi.objects().len(), brute_functors(&base, &f).0, "{} {fib}", base.name());
        }
    }
}

/// `ev_{x;y} = B(y)(ev_x) ; ev_y` for every composable pair of the domain.
#[test]
fn evaluation_is_functorial_exhaustively() {
    let mut pairs = 0;
    for b in all_small_families().unwrap() {
        let pi = dep_fun_space(&b).unwrap();
        let ev = ev_functor(&b, &pi).unwrap();
        let d = &ev.domain;
        for x in d.arrows() {
            for y in d.arrows_from(x.target()) {
                let xy = d.then(x, y).unwrap();
                let fiber = ev.family.fiber(y.target()).unwrap();
                let moved = ev.family.tr_arr(y, &ev.section.arrows[x]).unwrap();
                let rhs = fiber.then(&moved, &ev.section.arrows[y]).unwrap();
                assert!(ev.section.arrows[&xy] == rhs, "{b:?} at {x}, {y}");
                pairs += 1;
            }
        }
    }
    assert!(pairs > 0);
}

#[test]
fn bullet_identity_gamoid_separates_cp_and_rv() {
    let g = gamoid("BPT");
    let o = g.objects().first().unwrap().clone();
    let idg = id_gamoid(&g, &o, &o).unwrap();
    assert_eq!(idg.objects().len(), 2);
    for x in idg.objects() {
        for y in idg.objects() {
            assert_eq!(idg.hom(x, y).len(), usize::from(x == y));
        }
    }
}
