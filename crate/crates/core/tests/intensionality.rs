mod common;

use common::{brute_functors, gamoid};
use gamoid::corpus::{all_small_families, fixture_gamoids};
use gamoid::dependent::{dep_fun_space, sections, DependentGamoid};
use gamoid::gamoid::{Identification, Mapping, Object};
use gamoid::intensionality::{
    check_criteria, check_eqrefl_refuted, check_funext, check_uip_refuted, check_univalence,
    default_registry, funext, pointwise_id,
};
use gamoid::laws::Status;

#[test]
fn uip_fails_on_the_bullet() {
    let f = check_uip_refuted();
    assert_eq!(f.status, Status::Refuted);
    assert_eq!((f.witness["first"].as_str(), f.witness["second"].as_str()), ("cp", "rv"));
    assert_eq!(f.counts["|hom(•,•)|"], 2);
    assert_eq!(f.counts["|Id objects|"], 2);
    assert_eq!(f.counts["|hom(cp,rv)|"], 0);
}

#[test]
fn equality_reflection_fails_on_n2c() {
    let f = check_eqrefl_refuted(&fixture_gamoids());
    assert_eq!(f.status, Status::Refuted);
    assert_ne!(f.witness["left"], f.witness["right"]);
}

/// Natural families `q_σ : φσ → ψσ`, counted by trying every choice.
fn brute_natural(b: &DependentGamoid, phi: &Mapping, psi: &Mapping) -> usize {
    let base = b.base();
    let mut acc: Vec<Vec<(Object, Identification)>> = vec![Vec::new()];
    for s in base.objects() {
        let f = b.fiber(s).unwrap();
        let cands = f.hom(&phi.objects[s], &psi.objects[s]);
        acc = acc
            .into_iter()
            .flat_map(|m| {
                cands.iter().map(move |q| {
                    let mut m = m.clone();
                    m.push((s.clone(), q.clone()));
                    m
                })
            })
            .collect();
    }
    acc.into_iter()
        .filter(|choice| {
            let q = |o: &Object| &choice.iter().find(|(s, _)| s == o).unwrap().1;
            base.arrows().all(|p| {
                let f = b.fiber(p.target()).unwrap();
                let left = f.then(&b.tr_arr(p, q(p.source())).unwrap(), &psi.arrows[p]).unwrap();
                let right = f.then(&phi.arrows[p], q(p.target())).unwrap();
                left == right
            })
        })
        .count()
}

#[test]
fn funext_is_a_bijection_onto_hom_sets() {
    let fams = all_small_families().unwrap();
    let mut pairs = 0;
    for b in fams.iter().step_by(3) {
        let pi = dep_fun_space(b).unwrap();
        let secs = sections(b, None).unwrap();
        for phi in &secs {
            for psi in &secs {
                let fam = pointwise_id(b, phi, psi).unwrap();
                let taus = sections(&fam, None).unwrap();
                let hom = pi.hom(&Object::Section(phi.clone().into()), &Object::Section(psi.clone().into()));
                assert_eq!(taus.len(), brute_natural(b, phi, psi), "{b:?}");
                assert_eq!(taus.len(), hom.len(), "{b:?}");
                let images: std::collections::BTreeSet<Identification> =
                    taus.iter().map(|t| funext(b, phi, psi, t).unwrap()).collect();
                assert_eq!(images.len(), taus.len());
                assert!(images.iter().all(|q| hom.contains(q)));
                pairs += 1;
            }
        }
    }
    assert!(pairs > 50);
    assert_eq!(check_funext(&fams).status, Status::Holds);
}

#[test]
fn univalence_counts_match_brute_force() {
    let reg = default_registry();
    let f = check_univalence(&reg);
    assert_eq!(f.status, Status::Holds);
    for (ca, a) in reg.codes(reg.max_level()) {
        for (cb, b) in reg.codes(reg.max_level()) {
            assert_eq!(f.counts[&format!("{ca}→{cb}")] as usize, brute_functors(a, b).1);
        }
    }
    assert_eq!(brute_functors(&gamoid("BOOLG"), &gamoid("BOOLG")).1, 2);
}

#[test]
fn criteria_one_and_two_hold_three_fails() {
    let c = check_criteria();
    let ids: Vec<&str> = c.iter().map(|f| f.id.as_str()).collect();
    assert_eq!(ids, ["Criterion I", "Criterion II", "Criterion III"]);
    assert_eq!(c[0].status, Status::Holds);
    assert_eq!(c[1].status, Status::Holds);
    assert_ne!(c[1].witness["left fiber"], c[1].witness["right fiber"]);
    assert_eq!(c[2].status, Status::Refuted);
    assert_eq!(c[2].counts["closed terms"], 2);
}
