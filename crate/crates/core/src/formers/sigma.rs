//! Dependent sums.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{checked, eq_law, ok_law, require, restrict};
use crate::cwf::{comprehension, proj_p, subst_tm, subst_ty, weaken, Term};
use crate::dependent::{dep_pair_space, DependentGamoid};
use crate::error::{Error, Result};
use crate::gamoid::{
    check_equality_preserving, compose_morphisms, Gamoid, GamoidMorphism, Identification, Mapping,
    Object,
};
use crate::laws::LawReport;

/// `Σ(A,B)` over `Γ`, with `Pair : (Γ.A).B → Γ.Σ(A,B)`.
#[derive(Clone, Debug)]
pub struct SigmaType {
    pub a: DependentGamoid,
    pub b: DependentGamoid,
    pub ty: DependentGamoid,
    pub pair: GamoidMorphism,
}

fn parts(o: &Object) -> Result<(&Object, &Object)> {
    o.as_pair()
        .ok_or_else(|| Error::Typing(format!("{o} is not a pair")))
}

fn arrow_parts(x: &Identification) -> Result<(&Identification, &Identification)> {
    x.as_pair()
        .ok_or_else(|| Error::Typing(format!("{x} is not a pair")))
}

/// `p & id_{Apσ} : (γ & σ) → (γ′ & Apσ)`
fn forward(a: &DependentGamoid, p: &Identification, s: &Object) -> Result<Identification> {
    let moved = a.tr_obj(p, s)?;
    let id = a.fiber(p.target())?.id(&moved)?;
    Ok(Identification::pair(
        Object::pair(p.source().clone(), s.clone()),
        Object::pair(p.target().clone(), moved),
        p.clone(),
        id,
    ))
}

/// `p^Σ : σ & τ ↦ Apσ & B(p & id)τ`, `s & t ↦ Ap(s) & B(p & id)(t)`.
fn transport(a: &DependentGamoid, b: &DependentGamoid, src: &Gamoid, p: &Identification) -> Result<Mapping> {
    let mut m = Mapping::default();
    for o in src.objects() {
        let (s, t) = parts(o)?;
        let moved = Object::pair(a.tr_obj(p, s)?, b.tr_obj(&forward(a, p, s)?, t)?);
        m.objects.insert(o.clone(), moved);
    }
    for x in src.arrows() {
        let (s, t) = arrow_parts(x)?;
        let s2 = parts(x.target())?.0;
        m.arrows.insert(
            x.clone(),
            Identification::pair(
                m.objects[x.source()].clone(),
                m.objects[x.target()].clone(),
                a.tr_arr(p, s)?,
                b.tr_arr(&forward(a, p, s2)?, t)?,
            ),
        );
    }
    Ok(m)
}

/// Σ-Form and Σ-Intro: fibers `Σ̂(Aγ, B_γ)`, transport `p^Σ`, and the
/// correspondence `Pair`.
pub fn sigma_former(a: &DependentGamoid, b: &DependentGamoid) -> Result<SigmaType> {
    let ga = comprehension(a)?;
    require("the second component must live over Γ.A", *b.base() == ga)?;
    let gamma = a.base();
    let mut fibers = BTreeMap::new();
    for g in gamma.objects() {
        fibers.insert(g.clone(), dep_pair_space(&restrict(a, b, g)?)?);
    }
    let mut maps = BTreeMap::new();
    for p in gamma.arrows() {
        maps.insert(p.clone(), Arc::new(transport(a, b, &fibers[p.source()], p)?));
    }
    let ty = checked(DependentGamoid::unchecked(
        &format!("Σ({},{})", a.name(), b.name()),
        gamma,
        fibers,
        maps,
    ))?;
    let gab = comprehension(b)?;
    let gs = comprehension(&ty)?;
    let mut m = Mapping::default();
    for o in gab.objects() {
        let (gs1, t) = parts(o)?;
        let (g, s) = parts(gs1)?;
        m.objects.insert(
            o.clone(),
            Object::pair(g.clone(), Object::pair(s.clone(), t.clone())),
        );
    }
    for x in gab.arrows() {
        let (pq, t) = arrow_parts(x)?;
        let (p, q) = arrow_parts(pq)?;
        let (src, dst) = (&m.objects[x.source()], &m.objects[x.target()]);
        let inner_src = ty.tr_obj(p, parts(src)?.1)?;
        let inner = Identification::pair(inner_src, parts(dst)?.1.clone(), q.clone(), t.clone());
        m.arrows.insert(
            x.clone(),
            Identification::pair(src.clone(), dst.clone(), p.clone(), inner),
        );
    }
    let pair = GamoidMorphism::new(&gab, &gs, m)?;
    if !pair.is_invertible() {
        return Err(Error::FunctorLaw {
            law: "Pair".into(),
            witness: "the correspondence is not bijective".into(),
        });
    }
    Ok(SigmaType {
        a: a.clone(),
        b: b.clone(),
        ty,
        pair,
    })
}

/// Σ-Elim: `R^Σ(ψ) = ψ • Pair⁻¹` for `P ∈ Ty(Γ.Σ(A,B))`, `ψ ∈ Tm((Γ.A).B, P{Pair})`.
pub fn sigma_elim(sig: &SigmaType, p: &DependentGamoid, psi: &Term) -> Result<Term> {
    require(
        "the motive must live over Γ.Σ(A,B)",
        p.base() == sig.pair.target(),
    )?;
    require(
        "the method must have type P{Pair}",
        *psi.ty() == subst_ty(p, &sig.pair)?,
    )?;
    let back = sig.pair.map().inverse()?;
    let mut m = Mapping::default();
    for (o, o2) in &back.objects {
        m.objects.insert(o.clone(), psi.obj(o2)?.clone());
    }
    for (x, x2) in &back.arrows {
        m.arrows.insert(x.clone(), psi.arr(x2)?.clone());
    }
    Ok(Term::unchecked(p, m))
}

/// Data for the Σ laws: `A ∈ Ty(Γ)`, `B ∈ Ty(Γ.A)`, `φ : Δ → Γ`,
/// `P ∈ Ty(Γ.Σ(A,B))`, `ψ ∈ Tm((Γ.A).B, P{Pair})`.
#[derive(Clone, Debug)]
pub struct SigmaInstance {
    pub a: DependentGamoid,
    pub b: DependentGamoid,
    pub phi: GamoidMorphism,
    pub motive: DependentGamoid,
    pub psi: Term,
}

pub const SIGMA_LAWS: [&str; 5] = ["Σ-Form", "Σ-Comp", "Σ-Subst", "Pair-Subst", "R^Σ-Subst"];

/// Checks Σ-Form (with the correspondence), Σ-Comp and the Σ substitution laws.
pub fn check_sigma(i: &SigmaInstance, ctx: &str) -> LawReport {
    let mut r = LawReport::new();
    for law in SIGMA_LAWS {
        r.touch(law);
    }
    let Some(sig) = ok_law(&mut r, "Σ-Form", sigma_former(&i.a, &i.b), ctx) else {
        return r;
    };
    r.record("Σ-Form", check_equality_preserving(&sig.pair).passed(), || {
        format!("{ctx}: Pair is not equality-preserving")
    });
    let elim = sigma_elim(&sig, &i.motive, &i.psi);
    eq_law(
        &mut r,
        "Σ-Comp",
        elim.clone().and_then(|t| subst_tm(&t, &sig.pair)),
        Ok(i.psi.clone()),
        ctx,
    );
    let plus = weaken(&i.phi, &i.a);
    let sig2 = plus
        .clone()
        .and_then(|f| sigma_former(&subst_ty(&i.a, &i.phi)?, &subst_ty(&i.b, &f)?));
    eq_law(
        &mut r,
        "Σ-Subst",
        subst_ty(&sig.ty, &i.phi),
        sig2.as_ref().map(|s| s.ty.clone()).map_err(Clone::clone),
        ctx,
    );
    eq_law(
        &mut r,
        "Pair-Subst",
        proj_p(&sig.ty)
            .and_then(|p| compose_morphisms(&sig.pair, &p))
            .map(|m| m.map().clone()),
        (|| compose_morphisms(&proj_p(&i.b)?, &proj_p(&i.a)?))().map(|m| m.map().clone()),
        ctx,
    );
    let rhs = (|| {
        let sig2 = sig2?;
        let pp = weaken(&plus?, &i.b)?;
        let star = weaken(&i.phi, &sig.ty)?;
        sigma_elim(&sig2, &subst_ty(&i.motive, &star)?, &subst_tm(&i.psi, &pp)?)
    })();
    let lhs = (|| subst_tm(&elim?, &weaken(&i.phi, &sig.ty)?))();
    eq_law(&mut r, "R^Σ-Subst", lhs, rhs, ctx);
    r
}
