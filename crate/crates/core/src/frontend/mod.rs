//! The model language and the check suites run over a model.
//!
//! Corpora are drawn over the model's small gamoids: those with at most three
//! objects and at most two arrows per hom-set. Fibers of generated families
//! come from the builtin pool in [`crate::corpus`].

pub mod model;
pub mod report;
pub mod syntax;

use std::time::Instant;

pub use model::{build, load, Model};
pub use report::{Check, Report};
pub use syntax::{
    parse, Decl, Diagnostic, Homs, Kind, ModelFile, MoveDecl, OccDecl, PlayDecl, Pointer, Polarity,
};

use crate::corpus::{
    cwf_corpus_over, families_over, fixture_gamoids, id_corpus_over, pi_corpus_over, pool,
    sigma_corpus_over,
};
use crate::cwf::check_cwf_laws;
use crate::dependent::{check_constructions, check_dependent, DependentGamoid};
use crate::error::{Error, Result};
use crate::formers::{check_id, check_pi, check_sigma, check_universe, Registry, ID_LAWS, PI_LAWS, SIGMA_LAWS};
use crate::games::SizeGuard;
use crate::gamoid::{
    check_equality_preserving, check_groupoid_laws, enumerate_morphisms, Gamoid, GamoidMorphism,
};
use crate::intensionality::{
    check_criteria, check_eqrefl_refuted, check_funext, check_uip_refuted, check_univalence,
    default_registry,
};
use crate::laws::LawReport;

/// The builtin model: two games, three strategies and two gamoids.
pub const BUILTIN_MODEL: &str = include_str!("builtin.gm");

pub const SUITES: [&str; 9] = [
    "gamoid",
    "dependent",
    "cwf",
    "pi",
    "sigma",
    "id",
    "universe",
    "intensionality",
    "all",
];

pub fn builtin_model() -> Model {
    load(BUILTIN_MODEL, &SizeGuard::default()).expect("builtin model resolves")
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub seed: u64,
    pub timings: bool,
    /// CwF instances drawn per family.
    pub per_family: usize,
    /// First families sampled per base for the Π, Σ and Id corpora.
    pub per_base: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            seed: 1,
            timings: false,
            per_family: 4,
            per_base: 6,
        }
    }
}

fn is_small(g: &Gamoid) -> bool {
    g.objects().len() <= 3
        && g.hom_sets().all(|(_, h)| h.len() <= 2)
        && check_groupoid_laws(g).passed()
}

/// The model's gamoids usable as bases of generated corpora.
pub fn model_bases(m: &Model) -> Vec<Gamoid> {
    m.gamoids
        .iter()
        .map(|(_, g)| g.clone())
        .filter(is_small)
        .collect()
}

/// Declared families followed by every pool family over each model base.
pub fn model_families(m: &Model) -> Result<Vec<DependentGamoid>> {
    let mut out: Vec<DependentGamoid> = m.families.iter().map(|(_, f)| f.clone()).collect();
    let pool = pool();
    for b in model_bases(m) {
        for f in families_over(&pool, &b)? {
            out.push(f.renamed(&format!("{}:{}", b.name(), f.name())));
        }
    }
    Ok(out)
}

/// Adds every entry of `r` to `into`, prefixing witnesses with `ctx`.
fn absorb(into: &mut LawReport, ctx: &str, r: LawReport) {
    for e in r.entries {
        into.touch(&e.law);
        let n = e.instances;
        if n == 0 {
            continue;
        }
        match e.failure {
            Some(w) => {
                into.record(&e.law, false, || {
                    if ctx.is_empty() {
                        w
                    } else {
                        format!("{ctx}: {w}")
                    }
                });
                for _ in 1..n {
                    into.record(&e.law, true, String::new);
                }
            }
            None => {
                for _ in 0..n {
                    into.record(&e.law, true, String::new);
                }
            }
        }
    }
}

/// The suites named by `name`: a builtin suite, `all`, or a suite declared
/// in the model.
pub fn expand_suite(m: &Model, name: &str) -> Result<Vec<&'static str>> {
    let mut out = Vec::new();
    let mut push = |s: &str| -> Result<()> {
        let list: Vec<&'static str> = match s {
            "all" => SUITES[..8].to_vec(),
            _ => match SUITES.iter().find(|x| **x == s) {
                Some(x) => vec![*x],
                None => return Err(Error::UnknownSuite(s.to_string())),
            },
        };
        for x in list {
            if !out.contains(&x) {
                out.push(x);
            }
        }
        Ok(())
    };
    if SUITES.contains(&name) {
        push(name)?;
    } else if let Some(run) = m.suite(name) {
        for s in run {
            push(s)?;
        }
    } else {
        return Err(Error::UnknownSuite(name.to_string()));
    }
    Ok(out)
}

fn registries(m: &Model) -> Vec<Registry> {
    if m.registries.is_empty() {
        vec![default_registry()]
    } else {
        m.registries.clone()
    }
}

fn run_one(m: &Model, suite: &str, o: &RunOptions) -> Result<Vec<Check>> {
    let bases = model_bases(m);
    let declared: Vec<DependentGamoid> = m.families.iter().map(|(_, f)| f.clone()).collect();
    Ok(match suite {
        "gamoid" => {
            let mut r = LawReport::new();
            for law in ["endpoints", "identities", "closure", "unit", "associativity", "inverses"] {
                r.touch(law);
            }
            let mut lawful = Vec::new();
            for (n, g) in &m.gamoids {
                let laws = check_groupoid_laws(g);
                if laws.passed() {
                    lawful.push((n, g));
                }
                absorb(&mut r, n, laws);
            }
            r.touch("equality-preserving");
            let mut maps: Vec<(String, GamoidMorphism)> = m.morphisms.clone();
            for (a, g) in &lawful {
                for (b, h) in &lawful {
                    for (k, f) in enumerate_morphisms(g, h, Some(16))?.into_iter().enumerate() {
                        maps.push((format!("{a}→{b} #{k}"), f));
                    }
                }
            }
            for (n, f) in &maps {
                let e = check_equality_preserving(f);
                r.record("equality-preserving", e.passed(), || {
                    format!("{n}: {}", e.first_failure().map(|x| x.1).unwrap_or(""))
                });
            }
            Check::from_laws("gamoid", &r)
        }
        "dependent" => {
            let mut r = LawReport::new();
            for f in model_families(m)? {
                absorb(&mut r, f.name(), check_dependent(&f));
                absorb(&mut r, f.name(), check_constructions(&f));
            }
            if r.entries.is_empty() {
                r.touch("functor laws");
            }
            Check::from_laws("dependent", &r)
        }
        "cwf" => {
            let corpus = cwf_corpus_over(&bases, &declared, o.seed, o.per_family)?;
            let mut checks = Check::from_laws("cwf", &check_cwf_laws(&corpus));
            for c in &mut checks {
                c.counts.insert("corpus".into(), corpus.len() as u64);
            }
            checks
        }
        "pi" => {
            let corpus = pi_corpus_over(&bases, o.seed, o.per_base)?;
            let mut r = LawReport::new();
            PI_LAWS.iter().for_each(|l| r.touch(l));
            for (k, i) in corpus.iter().enumerate() {
                let ctx = format!("instance {k}");
                absorb(&mut r, "", check_pi(i, &ctx));
            }
            Check::from_laws("pi", &r)
        }
        "sigma" => {
            let corpus = sigma_corpus_over(&bases, o.seed, o.per_base)?;
            let mut r = LawReport::new();
            SIGMA_LAWS.iter().for_each(|l| r.touch(l));
            for (k, i) in corpus.iter().enumerate() {
                let ctx = format!("instance {k}");
                absorb(&mut r, "", check_sigma(i, &ctx));
            }
            Check::from_laws("sigma", &r)
        }
        "id" => {
            let corpus = id_corpus_over(&bases, o.seed, o.per_base)?;
            let mut r = LawReport::new();
            ID_LAWS.iter().for_each(|l| r.touch(l));
            for (k, i) in corpus.iter().enumerate() {
                let ctx = format!("instance {k}");
                absorb(&mut r, "", check_id(i, &ctx));
            }
            Check::from_laws("id", &r)
        }
        "universe" => {
            let mut r = LawReport::new();
            let fams = model_families(m)?;
            for reg in registries(m) {
                let top = reg.max_level();
                let coded: Vec<DependentGamoid> = fams
                    .iter()
                    .filter(|f| f.fibers().values().all(|g| reg.code_for(g, top).is_some()))
                    .cloned()
                    .collect();
                absorb(&mut r, reg.name(), check_universe(&reg, &coded));
            }
            Check::from_laws("universe", &r)
        }
        "intensionality" => {
            let mut carriers: Vec<Gamoid> = m.gamoids.iter().map(|(_, g)| g.clone()).collect();
            carriers.extend(fixture_gamoids());
            let mut out = vec![
                Check::from_finding("intensionality", check_uip_refuted()),
                Check::from_finding("intensionality", check_funext(&model_families(m)?)),
            ];
            for reg in registries(m) {
                let mut c = Check::from_finding("intensionality", check_univalence(&reg));
                if m.registries.len() > 1 {
                    c.id = format!("{}/{}", c.id, reg.name());
                }
                out.push(c);
            }
            out.push(Check::from_finding("intensionality", check_eqrefl_refuted(&carriers)));
            for f in check_criteria() {
                out.push(Check::from_finding("intensionality", f));
            }
            out
        }
        _ => return Err(Error::UnknownSuite(suite.to_string())),
    })
}

/// Runs a suite over a model. Timings are recorded only when asked, so that
/// reports are byte-identical across runs with the same seed.
pub fn run_suite(m: &Model, name: &str, o: &RunOptions) -> Result<Report> {
    let mut rep = Report::new(name, o.seed);
    for s in expand_suite(m, name)? {
        let t = Instant::now();
        let mut checks = run_one(m, s, o)?;
        if o.timings {
            let ms = t.elapsed().as_millis() as u64;
            for c in &mut checks {
                c.ms = Some(ms);
            }
        }
        rep.checks.extend(checks);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::Status;

    #[test]
    fn builtin_model_has_seven_declarations() {
        let f = parse(BUILTIN_MODEL).unwrap();
        assert_eq!(f.decls.len(), 7);
        assert_eq!(parse(&f.to_string()).unwrap(), f);
        let m = builtin_model();
        assert_eq!(model_bases(&m).len(), 2);
    }

    #[test]
    fn empty_model_cwf_is_vacuous() {
        let rep = run_suite(&Model::default(), "cwf", &RunOptions::default()).unwrap();
        assert!(!rep.checks.is_empty());
        assert!(rep.checks.iter().all(|c| c.status == Status::Warn));
        assert!(!rep.has_failure());
    }

    #[test]
    fn declared_suites_expand() {
        let m = load("suite quick { run gamoid, all; }", &SizeGuard::default()).unwrap();
        assert_eq!(expand_suite(&m, "quick").unwrap().len(), 8);
        assert!(matches!(expand_suite(&m, "nope"), Err(Error::UnknownSuite(_))));
    }
}
