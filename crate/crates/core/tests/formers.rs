mod common;

use common::{brute_functors, gamoid};
use gamoid::corpus::{all_small_families, id_corpus, pi_corpus, pool, sigma_corpus};
use gamoid::cwf::terminal;
use gamoid::dependent::DependentGamoid;
use gamoid::formers::{
    check_cumulativity, check_id, check_pi, check_sigma, check_universe, code_of, el, id_former,
    sigma_former, universe_gamoid, ID_LAWS, PI_LAWS, SIGMA_LAWS,
};
use gamoid::gamoid::Object;
use gamoid::intensionality::default_registry;
use gamoid::laws::LawReport;

fn all_pass<T>(corpus: &[T], laws: &[&str], check: impl Fn(&T, &str) -> LawReport) {
    let mut r = LawReport::new();
    for (k, i) in corpus.iter().enumerate() {
        r.merge(check(i, &format!("instance {k}")));
    }
    assert!(r.passed(), "{r}");
    for law in laws {
        assert!(r.entry(law).unwrap().instances >= corpus.len(), "{law}");
    }
}

#[test]
fn pi_sigma_id_corpora_pass() {
    for seed in [1, 7] {
        let pi = pi_corpus(seed, 6).unwrap();
        let sigma = sigma_corpus(seed, 6).unwrap();
        let id = id_corpus(seed, 6).unwrap();
        assert!(pi.len() >= 20 && sigma.len() >= 20 && id.len() >= 20);
        all_pass(&pi, &PI_LAWS, check_pi);
        all_pass(&sigma, &SIGMA_LAWS, check_sigma);
        all_pass(&id, &ID_LAWS, check_id);
    }
}

/// `|Σ(A,B)(γ)| = Σ_{a ∈ A(γ)} |B(γ,a)|`.
#[test]
fn sigma_fibers_count_pairs() {
    for i in sigma_corpus(3, 6).unwrap() {
        let s = sigma_former(&i.a, &i.b).unwrap();
        for (g, fib) in s.ty.fibers() {
            let expected: usize = i
                .a
                .fiber(g)
                .unwrap()
                .objects()
                .iter()
                .map(|a| i.b.fiber(&Object::pair(g.clone(), a.clone())).unwrap().objects().len())
                .sum();
            assert_eq!(fib.objects().len(), expected);
        }
    }
}

/// The fiber of `Id_A` over `(γ, a, a′)` is the hom-set `A(γ)(a, a′)`, discretely.
#[test]
fn identity_fibers_are_discrete_hom_sets() {
    for a in all_small_families().unwrap().iter().step_by(5) {
        let idt = id_former(a).unwrap();
        for (o, fib) in idt.ty.fibers() {
            let (ga, a2) = o.as_pair().unwrap();
            let (g, a1) = ga.as_pair().unwrap();
            let hom = a.fiber(g).unwrap().hom(a1, a2).len();
            assert_eq!(fib.objects().len(), hom);
            assert_eq!(fib.arrow_count(), hom);
        }
    }
}

#[test]
fn pool_universe_codes_every_small_family() {
    let fams = all_small_families().unwrap();
    let r = check_universe(&pool(), &fams);
    assert!(r.passed(), "{r}");
    assert_eq!(r.entry("U-Comp").unwrap().instances, fams.len());
}

#[test]
fn default_registry_is_cumulative_and_decodes() {
    let reg = default_registry();
    assert!(check_cumulativity(&reg).passed());
    let (u0, u1) = (universe_gamoid(&reg, 0).unwrap(), universe_gamoid(&reg, 1).unwrap());
    assert_eq!((u0.objects().len(), u1.objects().len()), (3, 5));
    let fam = DependentGamoid::constant("K", &gamoid("N2C"), &gamoid("BPT"));
    assert!(code_of(&reg, 0, &fam).is_err());
    let c = code_of(&reg, 1, &fam).unwrap();
    assert_eq!(el(&reg, &c).unwrap(), fam);
}

/// `hom_U(A, B)` counts the invertible functors found by brute force.
#[test]
fn universe_hom_sets_count_equivalences() {
    let reg = default_registry();
    let u = universe_gamoid(&reg, 1).unwrap();
    for (ca, a) in reg.codes(1) {
        for (cb, b) in reg.codes(1) {
            let hom = u.hom(&Object::code(ca), &Object::code(cb)).len();
            assert_eq!(hom, brute_functors(a, b).1, "{ca} → {cb}");
        }
    }
    let t = terminal();
    assert_eq!(brute_functors(&t, &t), (1, 1));
}
