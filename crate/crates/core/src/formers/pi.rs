//! Dependent products.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{along, checked, eq_law, ok_law, require, restrict, vertical};
use crate::cwf::{comprehension, extension, subst_tm, subst_ty, weaken, Term};
use crate::dependent::{dep_fun_space, DependentGamoid};
use crate::error::{Error, Result};
use crate::gamoid::{identity_morphism, Gamoid, GamoidMorphism, Identification, Mapping, Object, Provenance};
use crate::laws::LawReport;

/// `Π(A,B)` over `Γ` together with its parts.
#[derive(Clone, Debug)]
pub struct PiType {
    pub a: DependentGamoid,
    pub b: DependentGamoid,
    pub ty: DependentGamoid,
}

fn section(o: &Object) -> Result<&Arc<Mapping>> {
    o.as_section()
        .ok_or_else(|| Error::Typing(format!("{o} is not a section")))
}

/// `p^Π : Π̂(Aγ, B_γ) → Π̂(Aγ′, B_γ′)`, `τ ↦ B(p & id) • τ • Ap⁻¹`.
fn transport(a: &DependentGamoid, b: &DependentGamoid, src: &Gamoid, p: &Identification) -> Result<Mapping> {
    let pinv = a.base().inv(p)?;
    let ag2 = a.fiber(p.target())?;
    let move_section = |t: &Mapping| -> Result<Mapping> {
        let mut m = Mapping::default();
        for s2 in ag2.objects() {
            let s1 = a.tr_obj(&pinv, s2)?;
            m.objects
                .insert(s2.clone(), b.tr_obj(&along(a, p, s2)?, t.obj(&s1)?)?);
        }
        for s in ag2.arrows() {
            let back = a.tr_arr(&pinv, s)?;
            m.arrows
                .insert(s.clone(), b.tr_arr(&along(a, p, s.target())?, t.arr(&back)?)?);
        }
        Ok(m)
    };
    let mut out = Mapping::default();
    for o in src.objects() {
        out.objects
            .insert(o.clone(), Object::Section(Arc::new(move_section(section(o)?)?)));
    }
    for x in src.arrows() {
        let fam = x
            .as_family()
            .ok_or_else(|| Error::Typing(format!("{x} is not a family")))?;
        let mut moved = BTreeMap::new();
        for s2 in ag2.objects() {
            let q = &fam[&a.tr_obj(&pinv, s2)?];
            moved.insert(s2.clone(), b.tr_arr(&along(a, p, s2)?, q)?);
        }
        out.arrows.insert(
            x.clone(),
            Identification::new(
                out.objects[x.source()].clone(),
                out.objects[x.target()].clone(),
                Provenance::Family(moved),
            ),
        );
    }
    Ok(out)
}

/// Π-Form: fibers `Π̂(Aγ, B_γ)`, transport `p^Π`.
pub fn pi_former(a: &DependentGamoid, b: &DependentGamoid) -> Result<PiType> {
    require(
        "the codomain family must live over Γ.A",
        *b.base() == comprehension(a)?,
    )?;
    let gamma = a.base();
    let mut fibers = BTreeMap::new();
    for g in gamma.objects() {
        let bg = restrict(a, b, g)?;
        fibers.insert(g.clone(), dep_fun_space(&bg)?);
    }
    let mut transport_maps = BTreeMap::new();
    for p in gamma.arrows() {
        let m = transport(a, b, &fibers[p.source()], p)?;
        transport_maps.insert(p.clone(), Arc::new(m));
    }
    let ty = DependentGamoid::unchecked(
        &format!("Π({},{})", a.name(), b.name()),
        gamma,
        fibers,
        transport_maps,
    );
    Ok(PiType {
        a: a.clone(),
        b: b.clone(),
        ty: checked(ty)?,
    })
}

/// Π-Intro: `λ(ι)(γ) = σ ↦ ι(γ & σ)`, `λ(ι)_{p,σ′} = ι_{p & id_σ′}`.
pub fn lambda(pi: &PiType, iota: &Term) -> Result<Term> {
    require("λ expects a term of the codomain family", *iota.ty() == pi.b)?;
    let (a, gamma) = (&pi.a, pi.a.base());
    let mut map = Mapping::default();
    for g in gamma.objects() {
        let ag = a.fiber(g)?;
        let idg = gamma.id(g)?;
        let mut s = Mapping::default();
        for o in ag.objects() {
            s.objects
                .insert(o.clone(), iota.obj(&Object::pair(g.clone(), o.clone()))?.clone());
        }
        for q in ag.arrows() {
            s.arrows
                .insert(q.clone(), iota.arr(&vertical(g, &idg, q))?.clone());
        }
        map.objects.insert(g.clone(), Object::Section(Arc::new(s)));
    }
    for p in gamma.arrows() {
        let mut fam = BTreeMap::new();
        for s2 in a.fiber(p.target())?.objects() {
            fam.insert(s2.clone(), iota.arr(&along(a, p, s2)?)?.clone());
        }
        let src = pi.ty.tr_obj(p, &map.objects[p.source()])?;
        map.arrows.insert(
            p.clone(),
            Identification::new(src, map.objects[p.target()].clone(), Provenance::Family(fam)),
        );
    }
    Term::new(&pi.ty, map)
}

/// `τ̄ = ⟨id_Γ, τ⟩ : Γ → Γ.A`
pub fn bar(tau: &Term) -> Result<GamoidMorphism> {
    extension(&identity_morphism(tau.ty().base()), tau, tau.ty())
}

/// Π-Elim: `App(κ,τ)(γ) = κγ(τγ)`, with arrow part
/// `B(id & τ_p)((κ_p)_{Ap(τγ)}) ; (κγ′)(τ_p)`.
pub fn app(pi: &PiType, kappa: &Term, tau: &Term) -> Result<Term> {
    require("App expects a term of the product", *kappa.ty() == pi.ty)?;
    require("App expects an argument of the domain", *tau.ty() == pi.a)?;
    let (a, b, gamma) = (&pi.a, &pi.b, pi.a.base());
    let ty = subst_ty(b, &bar(tau)?)?;
    let mut map = Mapping::default();
    for g in gamma.objects() {
        let k = section(kappa.obj(g)?)?;
        map.objects.insert(g.clone(), k.obj(tau.obj(g)?)?.clone());
    }
    for p in gamma.arrows() {
        let g2 = p.target();
        let fam = kappa
            .arr(p)?
            .as_family()
            .ok_or_else(|| Error::Typing(format!("κ_{p} is not a family")))?;
        let moved = a.tr_obj(p, tau.obj(p.source())?)?;
        let tp = tau.arr(p)?;
        let e = vertical(g2, &gamma.id(g2)?, tp);
        let first = b.tr_arr(&e, &fam[&moved])?;
        let second = section(kappa.obj(g2)?)?.arr(tp)?;
        let f = b.fiber(&Object::pair(g2.clone(), tau.obj(g2)?.clone()))?;
        map.arrows.insert(p.clone(), f.then(&first, second)?);
    }
    Term::new(&ty, map)
}

/// Data for the Π laws: `A ∈ Ty(Γ)`, `B ∈ Ty(Γ.A)`, `φ : Δ → Γ`,
/// `ι ∈ Tm(Γ.A, B)`, `τ ∈ Tm(Γ, A)`, `κ ∈ Tm(Γ, Π(A,B))`.
#[derive(Clone, Debug)]
pub struct PiInstance {
    pub a: DependentGamoid,
    pub b: DependentGamoid,
    pub phi: GamoidMorphism,
    pub iota: Term,
    pub tau: Term,
    pub kappa: Term,
}

pub const PI_LAWS: [&str; 5] = ["Π-Form", "Π-Comp", "Π-Subst", "λ-Subst", "App-Subst"];

/// Π-Subst and λ-Subst for a given `φ⁺ : Δ.A{φ} → Γ.A`.
pub fn check_pi_subst(pi: &PiType, phi: &GamoidMorphism, plus: &GamoidMorphism, iota: &Term, ctx: &str) -> LawReport {
    let mut r = LawReport::new();
    let pi2 = subst_ty(&pi.a, phi).and_then(|a2| pi_former(&a2, &subst_ty(&pi.b, plus)?));
    eq_law(
        &mut r,
        "Π-Subst",
        subst_ty(&pi.ty, phi),
        pi2.as_ref().map(|p| p.ty.clone()).map_err(Clone::clone),
        ctx,
    );
    eq_law(
        &mut r,
        "λ-Subst",
        lambda(pi, iota).and_then(|l| subst_tm(&l, phi)),
        pi2.and_then(|p| lambda(&p, &subst_tm(iota, plus)?)),
        ctx,
    );
    r
}

/// Checks Π-Form, Π-Comp and the three Π substitution laws.
pub fn check_pi(i: &PiInstance, ctx: &str) -> LawReport {
    let mut r = LawReport::new();
    for law in PI_LAWS {
        r.touch(law);
    }
    let Some(pi) = ok_law(&mut r, "Π-Form", pi_former(&i.a, &i.b), ctx) else {
        return r;
    };
    let beta = lambda(&pi, &i.iota).and_then(|l| app(&pi, &l, &i.tau));
    eq_law(&mut r, "Π-Comp", beta, bar(&i.tau).and_then(|t| subst_tm(&i.iota, &t)), ctx);
    let plus = match weaken(&i.phi, &i.a) {
        Ok(p) => p,
        Err(e) => {
            r.record("Π-Subst", false, || format!("{ctx}: {e}"));
            return r;
        }
    };
    r.merge(check_pi_subst(&pi, &i.phi, &plus, &i.iota, ctx));
    let pi2 = subst_ty(&i.a, &i.phi).and_then(|a2| pi_former(&a2, &subst_ty(&i.b, &plus)?));
    eq_law(
        &mut r,
        "App-Subst",
        app(&pi, &i.kappa, &i.tau).and_then(|t| subst_tm(&t, &i.phi)),
        (|| app(&pi2?, &subst_tm(&i.kappa, &i.phi)?, &subst_tm(&i.tau, &i.phi)?))(),
        ctx,
    );
    r
}
