//! Named fixture gamoids and seeded instance corpora.
//!
//! Families are generated as functors from a base into a small pool
//! universe, so every dependent gamoid over a base with at most three
//! objects is reachable.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cwf::{comprehension, subst_ty, CwfInstance, Term};
use crate::dependent::{sections, DependentGamoid};
use crate::error::{Error, Result};
use crate::formers::{
    id_former, sigma_former, universe_gamoid, IdInstance, PiInstance, Registry, SigmaInstance,
};
use crate::formers::pi::{lambda, pi_former};
use crate::games::{enumerate_strategies, fixture, pair_strategies, with_game, SizeGuard, Strategy};
use crate::gamoid::{FunctorSearch, PlainTarget};
use crate::gamoid::{canonical, discrete, Gamoid, GamoidMorphism, Mapping};

fn st(n: &str) -> Strategy {
    fixture(n)
        .and_then(|f| f.strategy().ok_or_else(|| Error::UnknownFixture(n.into())))
        .expect("builtin strategy")
}

fn game(n: &str) -> crate::games::Game {
    fixture(n)
        .and_then(|f| f.game().ok_or_else(|| Error::UnknownFixture(n.into())))
        .expect("builtin game")
}

/// A named builtin gamoid.
pub fn named_gamoid(name: &str) -> Result<Gamoid> {
    let guard = SizeGuard::default();
    match name {
        "BOOLG" => {
            let b = game("BOOL");
            canonical("BOOLG", &b, &enumerate_strategies(&b, &guard)?, &guard)
        }
        "BPT" => canonical("BPT", &game("BOOL"), &[st("bullet")], &guard),
        "BPT2" => {
            let g = with_game(&[("b".to_string(), game("BOOL"))])?.renamed("BOOL2");
            let s = pair_strategies(&[("b".to_string(), st("bullet"))])?;
            let s = crate::games::Strategy::new("bullet2", &g, s.positions().clone())?;
            canonical("BPT2", &g, &[s], &guard)
        }
        "BTF" => canonical(
            "BTF",
            &game("BOOL"),
            &[st("tt_only"), st("ff_only"), st("bullet")],
            &guard,
        ),
        "DBOOL" => {
            let b = game("BOOL");
            discrete("DBOOL", &b, &enumerate_strategies(&b, &guard)?)
        }
        "N2C" => canonical("N2C", &game("N2"), &[st("zero"), st("one")], &guard),
        "N2A" => canonical(
            "N2A",
            &game("N2"),
            &[st("n2_empty"), st("zero"), st("one")],
            &guard,
        ),
        "D2" => discrete("D2", &game("N2"), &[st("zero"), st("one")]),
        "1" | "terminal" => Ok(crate::cwf::terminal()),
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

pub const FIXTURE_GAMOIDS: [&str; 9] = ["N2C", "BOOLG", "BPT", "BPT2", "BTF", "DBOOL", "N2A", "D2", "1"];

/// Bases with at most three objects and at most two arrows per hom-set.
pub const SMALL_BASES: [&str; 6] = ["1", "BPT", "N2C", "D2", "N2A", "BTF"];

pub fn fixture_gamoids() -> Vec<Gamoid> {
    FIXTURE_GAMOIDS
        .iter()
        .map(|n| named_gamoid(n).expect("builtin gamoid"))
        .collect()
}

pub fn small_bases() -> Vec<Gamoid> {
    SMALL_BASES
        .iter()
        .map(|n| named_gamoid(n).expect("builtin gamoid"))
        .collect()
}

/// The fiber pool: every generated family takes values among these.
pub fn pool() -> Registry {
    let mut r = Registry::new("pool");
    for n in ["1", "BPT", "BPT2", "N2C", "D2"] {
        r.declare(0, n, &named_gamoid(n).expect("builtin gamoid"))
            .expect("distinct pool codes");
    }
    r
}

/// The family decoded from a functor into the pool universe.
pub fn decode(pool: &Registry, base: &Gamoid, m: &Mapping, name: &str) -> Result<DependentGamoid> {
    let mut fibers = BTreeMap::new();
    for (o, c) in &m.objects {
        let code = c
            .as_code()
            .ok_or_else(|| Error::Typing(format!("{c} is not a code")))?;
        fibers.insert(o.clone(), pool.gamoid_of(code)?.clone());
    }
    let mut transport = BTreeMap::new();
    for (p, x) in &m.arrows {
        let f = x
            .as_functor()
            .ok_or_else(|| Error::Typing(format!("{x} is not a coded functor")))?;
        transport.insert(p.clone(), f.clone());
    }
    Ok(DependentGamoid::unchecked(name, base, fibers, transport))
}

/// Every family over `base` with fibers in the pool.
pub fn families_over(pool: &Registry, base: &Gamoid) -> Result<Vec<DependentGamoid>> {
    let u = universe_gamoid(pool, 0)?;
    let t = PlainTarget(&u);
    FunctorSearch::new(base, &t)
        .all(None)?
        .iter()
        .enumerate()
        .map(|(k, m)| decode(pool, base, m, &format!("F{k}")))
        .collect()
}

/// Up to `k` families over `base`, chosen with `rng`.
pub fn sample_families(pool: &Registry, base: &Gamoid, rng: &mut ChaCha8Rng, k: usize) -> Result<Vec<DependentGamoid>> {
    let u = universe_gamoid(pool, 0)?;
    let t = PlainTarget(&u);
    FunctorSearch::new(base, &t)
        .sample(rng, k)?
        .iter()
        .enumerate()
        .map(|(i, m)| decode(pool, base, m, &format!("F{i}")))
        .collect()
}

fn pick_morphism(a: &Gamoid, b: &Gamoid, rng: &mut ChaCha8Rng) -> Result<Option<GamoidMorphism>> {
    let t = PlainTarget(b);
    let ms = FunctorSearch::new(a, &t).sample(rng, 1)?;
    Ok(ms
        .into_iter()
        .next()
        .map(|m| GamoidMorphism::unchecked(a, b, m)))
}

fn pick_term(ty: &DependentGamoid, rng: &mut ChaCha8Rng) -> Result<Option<Term>> {
    let t = crate::dependent::SectionTarget(ty);
    let ms = FunctorSearch::new(ty.base(), &t).sample(rng, 1)?;
    Ok(ms.into_iter().next().map(|m| Term::unchecked(ty, m)))
}

fn pick_family(pool: &Registry, base: &Gamoid, rng: &mut ChaCha8Rng) -> Result<Option<DependentGamoid>> {
    Ok(sample_families(pool, base, rng, 1)?.into_iter().next())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One CwF instance per family over each small base, with random
/// substitutions and terms. Families without sections are skipped.
pub fn cwf_corpus(seed: u64) -> Result<Vec<CwfInstance>> {
    cwf_corpus_over(&small_bases(), &[], seed, 1)
}

/// `per_family` CwF instances for every pool family over each base and for
/// each of the `extra` families.
pub fn cwf_corpus_over(
    bases: &[Gamoid],
    extra: &[DependentGamoid],
    seed: u64,
    per_family: usize,
) -> Result<Vec<CwfInstance>> {
    let pool = pool();
    let mut rng = rng(seed);
    let mut out = Vec::new();
    let mut types = Vec::new();
    for gamma in bases {
        types.extend(families_over(&pool, gamma)?);
    }
    types.extend(extra.iter().cloned());
    let mut sources = bases.to_vec();
    for a in &types {
        if !sources.contains(a.base()) {
            sources.push(a.base().clone());
        }
    }
    for a in types {
        let gamma = a.base().clone();
        for _ in 0..per_family {
            let a = a.clone();
            let delta = sources.choose(&mut rng).expect("bases").clone();
            let theta = sources.choose(&mut rng).expect("bases").clone();
            let (Some(phi), Some(psi)) = (
                pick_morphism(&delta, &gamma, &mut rng)?,
                pick_morphism(&theta, &delta, &mut rng)?,
            ) else {
                continue;
            };
            let a_phi = subst_ty(&a, &phi)?;
            let (Some(tau), Some(kappa)) = (pick_term(&a, &mut rng)?, pick_term(&a_phi, &mut rng)?) else {
                continue;
            };
            out.push(CwfInstance {
                a,
                phi,
                psi,
                tau,
                kappa,
            });
        }
    }
    Ok(out)
}

/// Bases and first families used by the former corpora.
fn former_seeds(
    pool: &Registry,
    bases: &[Gamoid],
    rng: &mut ChaCha8Rng,
    per_base: usize,
) -> Result<Vec<DependentGamoid>> {
    let mut out = Vec::new();
    for gamma in bases {
        out.extend(sample_families(pool, gamma, rng, per_base)?);
    }
    Ok(out)
}

pub fn pi_corpus(seed: u64, per_base: usize) -> Result<Vec<PiInstance>> {
    pi_corpus_over(&small_bases(), seed, per_base)
}

pub fn pi_corpus_over(bases: &[Gamoid], seed: u64, per_base: usize) -> Result<Vec<PiInstance>> {
    let pool = pool();
    let mut rng = rng(seed);
    let mut out = Vec::new();
    for a in former_seeds(&pool, bases, &mut rng, per_base)? {
        let gamma = a.base().clone();
        let ga = comprehension(&a)?;
        let Some(b) = pick_family(&pool, &ga, &mut rng)? else {
            continue;
        };
        let delta = bases.choose(&mut rng).expect("bases").clone();
        let Some(phi) = pick_morphism(&delta, &gamma, &mut rng)? else {
            continue;
        };
        let (Some(iota), Some(tau)) = (pick_term(&b, &mut rng)?, pick_term(&a, &mut rng)?) else {
            continue;
        };
        let pi = pi_former(&a, &b)?;
        let kappa = match pick_term(&pi.ty, &mut rng)? {
            Some(k) => k,
            None => lambda(&pi, &iota)?,
        };
        out.push(PiInstance {
            a,
            b,
            phi,
            iota,
            tau,
            kappa,
        });
    }
    Ok(out)
}

pub fn sigma_corpus(seed: u64, per_base: usize) -> Result<Vec<SigmaInstance>> {
    sigma_corpus_over(&small_bases(), seed, per_base)
}

pub fn sigma_corpus_over(bases: &[Gamoid], seed: u64, per_base: usize) -> Result<Vec<SigmaInstance>> {
    let pool = pool();
    let mut rng = rng(seed ^ 0x5167);
    let mut out = Vec::new();
    for a in former_seeds(&pool, bases, &mut rng, per_base)? {
        let gamma = a.base().clone();
        let Some(b) = pick_family(&pool, &comprehension(&a)?, &mut rng)? else {
            continue;
        };
        let sig = sigma_former(&a, &b)?;
        let Some(motive) = pick_family(&pool, sig.pair.target(), &mut rng)? else {
            continue;
        };
        let delta = bases.choose(&mut rng).expect("bases").clone();
        let Some(phi) = pick_morphism(&delta, &gamma, &mut rng)? else {
            continue;
        };
        let Some(psi) = pick_term(&subst_ty(&motive, &sig.pair)?, &mut rng)? else {
            continue;
        };
        out.push(SigmaInstance {
            a,
            b,
            phi,
            motive,
            psi,
        });
    }
    Ok(out)
}

pub fn id_corpus(seed: u64, per_base: usize) -> Result<Vec<IdInstance>> {
    id_corpus_over(&small_bases(), seed, per_base)
}

pub fn id_corpus_over(bases: &[Gamoid], seed: u64, per_base: usize) -> Result<Vec<IdInstance>> {
    let pool = pool();
    let mut rng = rng(seed ^ 0x1d);
    let mut out = Vec::new();
    for a in former_seeds(&pool, bases, &mut rng, per_base)? {
        let gamma = a.base().clone();
        let idt = id_former(&a)?;
        let Some(motive) = pick_family(&pool, idt.refl.target(), &mut rng)? else {
            continue;
        };
        let delta = bases.choose(&mut rng).expect("bases").clone();
        let Some(phi) = pick_morphism(&delta, &gamma, &mut rng)? else {
            continue;
        };
        let Some(tau) = pick_term(&subst_ty(&motive, &idt.refl)?, &mut rng)? else {
            continue;
        };
        out.push(IdInstance {
            a,
            phi,
            motive,
            tau,
        });
    }
    Ok(out)
}

/// Every family over every small base, with its sections, for the
/// function-space checks.
pub fn all_small_families() -> Result<Vec<DependentGamoid>> {
    let pool = pool();
    let mut out = Vec::new();
    for b in small_bases() {
        out.extend(families_over(&pool, &b)?);
    }
    Ok(out)
}

/// Terms of `ty`, at most `limit`.
pub fn terms(ty: &DependentGamoid, limit: Option<usize>) -> Result<Vec<Term>> {
    Ok(sections(ty, limit)?
        .into_iter()
        .map(|m| Term::unchecked(ty, m))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dependent::check_dependent;
    use crate::gamoid::check_groupoid_laws;

    #[test]
    fn fixtures_are_groupoids() {
        for g in fixture_gamoids() {
            assert!(check_groupoid_laws(&g).passed(), "{}", g.name());
        }
        for b in small_bases() {
            assert!(b.objects().len() <= 3);
            assert!(b.hom_sets().all(|(_, h)| h.len() <= 2));
        }
    }

    #[test]
    fn generated_families_are_functors() {
        let pool = pool();
        let n2c = named_gamoid("N2C").unwrap();
        let fams = families_over(&pool, &n2c).unwrap();
        // Codes 1, BPT, N2C, D2 give one or two choices for the swap; BPT
        // and BPT2 are isomorphic, which adds the two mixed families.
        assert!(fams.len() >= 6);
        for f in &fams {
            assert!(check_dependent(f).passed(), "{f:?}");
        }
    }

    #[test]
    fn corpora_are_deterministic() {
        let a = cwf_corpus(7).unwrap();
        let b = cwf_corpus(7).unwrap();
        assert!(a.len() >= 50, "{}", a.len());
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.phi.map(), y.phi.map());
            assert_eq!(x.tau, y.tau);
        }
    }
}
