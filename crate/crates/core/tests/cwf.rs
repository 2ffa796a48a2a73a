use gamoid::corpus::{cwf_corpus, pi_corpus};
use gamoid::cwf::{check_cwf_instance, check_cwf_laws, weaken, Term, CWF_LAWS};
use gamoid::formers::{check_pi_subst, pi_former};
use gamoid::gamoid::{GamoidMorphism, Mapping};

#[test]
fn seeded_corpora_satisfy_every_equation() {
    for seed in [1, 2, 3] {
        let corpus = cwf_corpus(seed).unwrap();
        assert!(corpus.len() >= 50, "seed {seed}: {} instances", corpus.len());
        let r = check_cwf_laws(&corpus);
        assert!(r.passed(), "seed {seed}: {r}");
        for law in CWF_LAWS {
            assert_eq!(r.entry(law).unwrap().instances, corpus.len());
        }
    }
}

#[test]
fn corrupted_term_arrow_map_is_reported() {
    let corpus = cwf_corpus(1).unwrap();
    let mut hits = 0;
    for (k, i) in corpus.iter().enumerate() {
        let base = i.a.base();
        for p in base.arrows() {
            let image = i.tau.arr(p).unwrap();
            let fiber = i.a.fiber(p.target()).unwrap();
            let Some(other) = fiber
                .hom(image.source(), image.target())
                .iter()
                .find(|q| *q != image)
            else {
                continue;
            };
            let mut m: Mapping = i.tau.map().as_ref().clone();
            m.arrows.insert(p.clone(), other.clone());
            let mut bad = i.clone();
            bad.tau = Term::unchecked(i.tau.ty(), m);
            let r = check_cwf_instance(&bad, &format!("instance {k}"));
            let (law, witness) = r.first_failure().expect("corruption detected");
            assert_eq!(law, "well-formed");
            assert!(witness.contains("τ"), "{witness}");
            hits += 1;
            break;
        }
    }
    assert!(hits > 0);
}

#[test]
fn corrupted_weakening_breaks_pi_substitution() {
    let corpus = pi_corpus(1, 6).unwrap();
    let mut broken = 0;
    for i in &corpus {
        let pi = pi_former(&i.a, &i.b).unwrap();
        let plus = weaken(&i.phi, &i.a).unwrap();
        assert!(check_pi_subst(&pi, &i.phi, &plus, &i.iota, "φ⁺").passed());
        let (src, dst) = (plus.source(), plus.target());
        for x in src.arrows() {
            let image = plus.arr(x).unwrap();
            for y in dst.hom(image.source(), image.target()) {
                if y == image {
                    continue;
                }
                let mut m: Mapping = plus.map().as_ref().clone();
                m.arrows.insert(x.clone(), y.clone());
                let bad = GamoidMorphism::unchecked(src, dst, m);
                if !check_pi_subst(&pi, &i.phi, &bad, &i.iota, "corrupted φ⁺").passed() {
                    broken += 1;
                }
            }
        }
    }
    assert!(broken > 0, "no corruption of φ⁺ was detected");
}
