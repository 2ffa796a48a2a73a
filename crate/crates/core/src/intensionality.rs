//! Intensionality results: equality reflection and UIP fail, function
//! extensionality and univalence hold, and the three criteria of
//! intensionality come out as I and II holding, III failing.

use std::collections::{BTreeMap, BTreeSet};

use crate::corpus::named_gamoid;
use crate::cwf::{extension, subst_ty, terminal, Term};
use crate::dependent::{
    dep_fun_space, id_gamoid, is_natural, mk_dependent_gamoid, sections, DependentGamoid,
};
use crate::error::{Error, Result};
use crate::formers::universe::invertible_morphisms;
use crate::formers::{id_former, universe_gamoid, Registry};
use crate::games::fixture;
use crate::gamoid::{
    enumerate_morphisms, identity_morphism, Gamoid, Identification, Mapping, Object, Provenance,
};
use crate::laws::{Finding, Status};

/// Two strictly different objects joined by an identification.
pub fn eqrefl_witness(g: &Gamoid) -> Option<(Object, Object, Identification)> {
    g.hom_sets()
        .find(|((a, b), h)| a != b && !h.is_empty())
        .map(|((a, b), h)| (a.clone(), b.clone(), h[0].clone()))
}

/// Equality reflection, searched over `corpus` in order.
pub fn check_eqrefl_refuted(corpus: &[Gamoid]) -> Finding {
    let mut searched = 0;
    for g in corpus {
        searched += 1;
        if let Some((a, b, p)) = eqrefl_witness(g) {
            return Finding::new("EqRefl", Status::Refuted)
                .with_witness("gamoid", g.name())
                .with_witness("left", &a)
                .with_witness("right", &b)
                .with_witness("identification", &p)
                .with_count("gamoids searched", searched);
        }
    }
    Finding::new("EqRefl", Status::Holds)
        .with_count("gamoids searched", searched)
        .with_note("no gamoid in the corpus identifies distinct objects")
}

/// A hom-set with two distinct identifications, if any.
pub fn uip_witness(g: &Gamoid) -> Option<(Object, Identification, Identification)> {
    g.hom_sets()
        .find(|(_, h)| h.len() >= 2)
        .map(|((a, _), h)| (a.clone(), h[0].clone(), h[1].clone()))
}

fn fixture_name(p: &Identification) -> String {
    for n in ["cp", "rv"] {
        if let Some(f) = fixture(n).ok().and_then(|f| f.iso()) {
            if p.carrier() == Some(&f) {
                return n.to_string();
            }
        }
    }
    p.to_string()
}

/// UIP on the boolean gamoid: two identifications of `•` with itself, and
/// no identification between them.
pub fn check_uip_refuted() -> Finding {
    let run = || -> Result<Finding> {
        let bpt = named_gamoid("BPT")?;
        let bullet = bpt
            .objects()
            .first()
            .cloned()
            .ok_or_else(|| Error::Typing("empty boolean gamoid".into()))?;
        let h = bpt.hom(&bullet, &bullet);
        let idg = id_gamoid(&bpt, &bullet, &bullet)?;
        let (cp, rv) = match h {
            [x, y] => (x, y),
            _ => {
                return Ok(Finding::new("UIP", Status::Fail).with_count("|hom(•,•)|", h.len()));
            }
        };
        let (ocp, orv) = (Object::Ident(cp.clone()), Object::Ident(rv.clone()));
        let between = idg.hom(&ocp, &orv).len();
        let status = if idg.objects().len() == 2 && idg.arrow_count() == 2 && between == 0 {
            Status::Refuted
        } else {
            Status::Fail
        };
        Ok(Finding::new("UIP", status)
            .with_witness("object", &bullet)
            .with_witness("first", fixture_name(cp))
            .with_witness("second", fixture_name(rv))
            .with_count("|hom(•,•)|", h.len())
            .with_count("|Id objects|", idg.objects().len())
            .with_count("|Id arrows|", idg.arrow_count())
            .with_count("|hom(cp,rv)|", between))
    };
    run().unwrap_or_else(|e| Finding::new("UIP", Status::Fail).with_note(&e.to_string()))
}

/// `Id_B{⟨⟨id, φ⟩, ψ⟩}`: the family `σ ↦ Îd_{Bσ}(φσ, ψσ)` over the base of `b`.
pub fn pointwise_id(b: &DependentGamoid, phi: &Mapping, psi: &Mapping) -> Result<DependentGamoid> {
    let idt = id_former(b)?;
    let fphi = Term::unchecked(b, phi.clone());
    let e1 = extension(&identity_morphism(b.base()), &fphi, b)?;
    let fpsi = Term::unchecked(&subst_ty(&idt.a_plus, &e1)?, psi.clone());
    let e2 = extension(&e1, &fpsi, &idt.a_plus)?;
    subst_ty(&idt.ty, &e2)
}

/// FunExt: a section `τ` of `Id_B{⟨⟨id, φ⟩, ψ⟩}` yields the identification
/// `&{τσ}` from `φ` to `ψ` in `Π̂(A,B)`.
pub fn funext(b: &DependentGamoid, phi: &Mapping, psi: &Mapping, tau: &Mapping) -> Result<Identification> {
    let mut fam = BTreeMap::new();
    for s in b.base().objects() {
        let t = tau.obj(s)?;
        let q = t
            .as_ident()
            .ok_or_else(|| Error::Typing(format!("{t} is not an identification")))?;
        if q.source() != phi.obj(s)? || q.target() != psi.obj(s)? {
            return Err(Error::Typing(format!("τ({s}) does not run from φ({s}) to ψ({s})")));
        }
        fam.insert(s.clone(), q.clone());
    }
    if !is_natural(b, phi, psi, &fam)? {
        return Err(Error::Naturality("the pointwise family".into()));
    }
    Ok(Identification::new(
        Object::Section(phi.clone().into()),
        Object::Section(psi.clone().into()),
        Provenance::Family(fam),
    ))
}

/// `(φ_p)⋆ ; Bp(τσ) ; ψ_p = τσ′` for every `p : σ → σ′`.
pub fn funext_coherent(b: &DependentGamoid, phi: &Mapping, psi: &Mapping, tau: &Mapping) -> Result<bool> {
    for p in b.base().arrows() {
        let f = b.fiber(p.target())?;
        let ts = tau
            .obj(p.source())?
            .as_ident()
            .ok_or_else(|| Error::Typing("τ is not pointwise".into()))?;
        let moved = b.tr_arr(p, ts)?;
        let lhs = f.then(&f.then(&f.inv(phi.arr(p)?)?, &moved)?, psi.arr(p)?)?;
        if Object::Ident(lhs) != *tau.obj(p.target())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// FunExt over every pair of sections of every family given, for every
/// pointwise identification between them.
pub fn check_funext(families: &[DependentGamoid]) -> Finding {
    let mut n = 0;
    for b in families {
        let res = (|| -> Result<Option<String>> {
            let pi = dep_fun_space(b)?;
            let secs = sections(b, None)?;
            for phi in &secs {
                for psi in &secs {
                    let fam = pointwise_id(b, phi, psi)?;
                    for tau in sections(&fam, None)? {
                        n += 1;
                        let q = funext(b, phi, psi, &tau)?;
                        let comps_ok = q
                            .as_family()
                            .is_some_and(|f| f.iter().all(|(s, c)| tau.objects[s] == Object::Ident(c.clone())));
                        if !pi.has_arrow(&q) || !comps_ok || !funext_coherent(b, phi, psi, &tau)? {
                            return Ok(Some(format!("{} at {q}", b.name())));
                        }
                    }
                }
            }
            Ok(None)
        })();
        let fail = match res {
            Ok(None) => continue,
            Ok(Some(w)) => w,
            Err(e) => format!("{}: {e}", b.name()),
        };
        return Finding::new("FunExt", Status::Fail)
            .with_witness("family", fail)
            .with_count("families", families.len())
            .with_count("pointwise families", n);
    }
    let status = if n == 0 { Status::Warn } else { Status::Holds };
    Finding::new("FunExt", status)
        .with_count("families", families.len())
        .with_count("pointwise families", n)
}

/// The family over `N2C` with `0 ↦ BPT`, `1 ↦ BPT2`: isomorphic but strictly
/// different fibers over identified points.
pub fn criterion_two_family() -> Result<DependentGamoid> {
    let n2c = named_gamoid("N2C")?;
    let (bpt, bpt2) = (named_gamoid("BPT")?, named_gamoid("BPT2")?);
    let to = invertible_morphisms(&bpt, &bpt2)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Typing("BPT and BPT2 are not isomorphic".into()))?;
    let back = to.inverse()?;
    let zero = Object::from(fixture("zero")?.strategy().expect("strategy"));
    let mut fibers = BTreeMap::new();
    let mut transport = BTreeMap::new();
    for o in n2c.objects() {
        fibers.insert(o.clone(), if *o == zero { bpt.clone() } else { bpt2.clone() });
    }
    for p in n2c.arrows() {
        let m = match (p.source() == &zero, p.target() == &zero) {
            (true, true) => Mapping::identity_on(&bpt),
            (false, false) => Mapping::identity_on(&bpt2),
            (true, false) => to.clone(),
            (false, true) => back.clone(),
        };
        transport.insert(p.clone(), m.into());
    }
    mk_dependent_gamoid("B", &n2c, fibers, transport)
}

/// Criteria I, II and III, in that order.
pub fn check_criteria() -> Vec<Finding> {
    let mut out = Vec::new();
    let one = |id: &str, r: Result<Finding>| r.unwrap_or_else(|e| Finding::new(id, Status::Fail).with_note(&e.to_string()));
    out.push(one("Criterion I", (|| {
        let n2c = named_gamoid("N2C")?;
        Ok(match eqrefl_witness(&n2c) {
            Some((a, b, p)) => Finding::new("Criterion I", Status::Holds)
                .with_witness("left", &a)
                .with_witness("right", &b)
                .with_witness("identification", &p),
            None => Finding::new("Criterion I", Status::Fail),
        })
    })()));
    out.push(one("Criterion II", (|| {
        let b = criterion_two_family()?;
        let n2c = b.base();
        let ((x, y), h) = n2c
            .hom_sets()
            .find(|((x, y), h)| !h.is_empty() && b.fiber(x).ok() != b.fiber(y).ok())
            .ok_or_else(|| Error::Typing("no identified points with distinct fibers".into()))?;
        Ok(Finding::new("Criterion II", Status::Holds)
            .with_witness("left", x)
            .with_witness("right", y)
            .with_witness("identification", &h[0])
            .with_witness("left fiber", b.fiber(x)?.name())
            .with_witness("right fiber", b.fiber(y)?.name()))
    })()));
    out.push(one("Criterion III", (|| {
        let a = DependentGamoid::constant("N2C", &terminal(), &named_gamoid("N2C")?);
        let pi = dep_fun_space(&a)?;
        let w = eqrefl_witness(&pi);
        Ok(match w {
            Some((t, t2, p)) => Finding::new("Criterion III", Status::Refuted)
                .with_witness("left term", &t)
                .with_witness("right term", &t2)
                .with_witness("identification", &p)
                .with_count("closed terms", pi.objects().len()),
            None => Finding::new("Criterion III", Status::Holds),
        })
    })()));
    out
}

/// Univalence at every level: `hom_U(A,B)` is exactly the set of invertible
/// equality-preserving maps `A → B`.
pub fn check_univalence(reg: &Registry) -> Finding {
    let mut f = Finding::new("UA", Status::Holds);
    let mut pairs = 0;
    for n in 0..=reg.max_level() {
        let res = (|| -> Result<Option<String>> {
            let u = universe_gamoid(reg, n)?;
            let codes: Vec<(&str, &Gamoid)> = reg.codes(n).collect();
            for (ca, a) in &codes {
                for (cb, b) in &codes {
                    pairs += 1;
                    let hom: BTreeSet<Mapping> = u
                        .hom(&Object::code(ca), &Object::code(cb))
                        .iter()
                        .filter_map(|x| x.as_functor().map(|m| (**m).clone()))
                        .collect();
                    let equivs: BTreeSet<Mapping> = enumerate_morphisms(a, b, None)?
                        .into_iter()
                        .filter(|m| m.is_invertible())
                        .map(|m| m.map().as_ref().clone())
                        .collect();
                    if hom != equivs {
                        return Ok(Some(format!("U_{n}: {ca} → {cb}")));
                    }
                    if n == reg.max_level() {
                        f.counts.insert(format!("{ca}→{cb}"), hom.len() as u64);
                    }
                }
            }
            Ok(None)
        })();
        match res {
            Ok(None) => {}
            Ok(Some(w)) => {
                f.status = Status::Fail;
                f.witness.insert("pair".into(), w);
                return f;
            }
            Err(e) => {
                f.status = Status::Fail;
                f.note = Some(e.to_string());
                return f;
            }
        }
    }
    f.counts.insert("pairs".into(), pairs as u64);
    f.with_note("identifications between identifications are trivial, so the equivalence is a bijection of hom-sets")
}

/// The registry used when none is declared: `1`, `BOOLG` and `N2C` at level
/// 0, `BPT` and `BPT2` at level 1.
pub fn default_registry() -> Registry {
    let mut r = Registry::new("U");
    for (lvl, n) in [(0, "1"), (0, "BOOLG"), (0, "N2C"), (1, "BPT"), (1, "BPT2")] {
        r.declare(lvl, n, &named_gamoid(n).expect("builtin gamoid"))
            .expect("distinct codes");
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::fixture_gamoids;

    #[test]
    fn uip_is_refuted_with_cp_and_rv() {
        let f = check_uip_refuted();
        assert_eq!(f.status, Status::Refuted);
        assert_eq!(f.witness["first"], "cp");
        assert_eq!(f.witness["second"], "rv");
        assert_eq!(f.counts["|hom(cp,rv)|"], 0);
    }

    #[test]
    fn uip_holds_in_discrete_gamoids() {
        assert!(uip_witness(&named_gamoid("DBOOL").unwrap()).is_none());
        assert!(uip_witness(&named_gamoid("BPT").unwrap()).is_some());
    }

    #[test]
    fn eqrefl_and_criteria() {
        let f = check_eqrefl_refuted(&fixture_gamoids());
        assert_eq!(f.status, Status::Refuted);
        assert_eq!(f.witness["gamoid"], "N2C");
        assert!(eqrefl_witness(&named_gamoid("DBOOL").unwrap()).is_none());
        // The boolean gamoid alone offers no witness: rv is an endo-identification.
        assert_eq!(check_eqrefl_refuted(&[named_gamoid("BPT").unwrap()]).status, Status::Holds);
        let c = check_criteria();
        let st: Vec<Status> = c.iter().map(|f| f.status).collect();
        assert_eq!(st, [Status::Holds, Status::Holds, Status::Refuted]);
    }

    #[test]
    fn funext_on_identity_is_identity() {
        let b = DependentGamoid::constant("BPT", &named_gamoid("N2C").unwrap(), &named_gamoid("BPT").unwrap());
        let pi = dep_fun_space(&b).unwrap();
        for phi in sections(&b, None).unwrap() {
            let fam = pointwise_id(&b, &phi, &phi).unwrap();
            let phi_o = Object::Section(phi.clone().into());
            let id = pi.id(&phi_o).unwrap();
            let hits = sections(&fam, None)
                .unwrap()
                .into_iter()
                .filter(|t| funext(&b, &phi, &phi, t).unwrap() == id)
                .count();
            assert_eq!(hits, 1);
        }
        assert_eq!(check_funext(&[b]).status, Status::Holds);
    }

    #[test]
    fn univalence_on_default_registry() {
        let f = check_univalence(&default_registry());
        assert_eq!(f.status, Status::Holds, "{f:?}");
        assert_eq!(f.counts["BOOLG→BOOLG"], 2);
        assert_eq!(f.counts["BOOLG→1"], 0);
    }
}
