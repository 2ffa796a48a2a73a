//! Identity types.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{checked, eq_law, ok_law, require};
use crate::cwf::{comprehension, proj_p, subst_tm, subst_ty, weaken, Term};
use crate::dependent::{id_gamoid, DependentGamoid};
use crate::error::{Error, Result};
use crate::gamoid::{
    check_equality_preserving, compose_morphisms, Gamoid, GamoidMorphism, Identification, Mapping,
    Object,
};
use crate::laws::LawReport;

/// `Id_A` over `(Γ.A).A⁺` and its introduction `Refl_A`.
#[derive(Clone, Debug)]
pub struct IdType {
    pub a: DependentGamoid,
    /// `A⁺ = A{p(A)}`
    pub a_plus: DependentGamoid,
    pub ty: DependentGamoid,
    /// `Refl_A : Γ.A → ((Γ.A).A⁺).Id_A`
    pub refl: GamoidMorphism,
}

fn parts(o: &Object) -> Result<(&Object, &Object)> {
    o.as_pair()
        .ok_or_else(|| Error::Typing(format!("{o} is not a pair")))
}

fn arrow_parts(x: &Identification) -> Result<(&Identification, &Identification)> {
    x.as_pair()
        .ok_or_else(|| Error::Typing(format!("{x} is not a pair")))
}

fn ident(o: &Object) -> Result<&Identification> {
    o.as_ident()
        .ok_or_else(|| Error::Typing(format!("{o} is not an identification")))
}

/// Transport of `Id_A` along `(p & q1) & q2`: `α ↦ q1⁻¹ ; Ap(α) ; q2`.
fn transport(a: &DependentGamoid, src: &Gamoid, x: &Identification) -> Result<Mapping> {
    let (pq1, q2) = arrow_parts(x)?;
    let (p, q1) = arrow_parts(pq1)?;
    let f = a.fiber(p.target())?;
    let mut m = Mapping::default();
    for o in src.objects() {
        let alpha = ident(o)?;
        let moved = f.then(&f.then(&f.inv(q1)?, &a.tr_arr(p, alpha)?)?, q2)?;
        m.objects.insert(o.clone(), Object::Ident(moved));
    }
    for r in src.arrows() {
        m.arrows
            .insert(r.clone(), Identification::reflexive(&m.objects[r.source()]));
    }
    Ok(m)
}

/// Id-Form and Id-Intro.
pub fn id_former(a: &DependentGamoid) -> Result<IdType> {
    let p = proj_p(a)?;
    let a_plus = subst_ty(a, &p)?.renamed(&format!("{}⁺", a.name()));
    let base = comprehension(&a_plus)?;
    let mut fibers = BTreeMap::new();
    for o in base.objects() {
        let (gs, s2) = parts(o)?;
        let (g, s1) = parts(gs)?;
        fibers.insert(o.clone(), id_gamoid(a.fiber(g)?, s1, s2)?);
    }
    let mut maps = BTreeMap::new();
    for x in base.arrows() {
        maps.insert(x.clone(), Arc::new(transport(a, &fibers[x.source()], x)?));
    }
    let ty = checked(DependentGamoid::unchecked(
        &format!("Id_{}", a.name()),
        &base,
        fibers,
        maps,
    ))?;
    let ga = comprehension(a)?;
    let w = comprehension(&ty)?;
    let mut m = Mapping::default();
    for o in ga.objects() {
        let (g, s) = parts(o)?;
        let ids = a.fiber(g)?.id(s)?;
        m.objects.insert(
            o.clone(),
            Object::pair(Object::pair(o.clone(), s.clone()), Object::Ident(ids)),
        );
    }
    for x in ga.arrows() {
        let q = arrow_parts(x)?.1;
        let (src, dst) = (&m.objects[x.source()], &m.objects[x.target()]);
        let inner = Identification::pair(parts(src)?.0.clone(), parts(dst)?.0.clone(), x.clone(), q.clone());
        let r = Identification::reflexive(parts(dst)?.1);
        m.arrows
            .insert(x.clone(), Identification::pair(src.clone(), dst.clone(), inner, r));
    }
    let refl = GamoidMorphism::new(&ga, &w, m)?;
    Ok(IdType {
        a: a.clone(),
        a_plus,
        ty,
        refl,
    })
}

/// `((id_γ & id_σ1) & α) & id_α : Refl(γ & σ1) → ((γ & σ1) & σ2) & α`.
fn from_refl(idt: &IdType, w: &Object) -> Result<Identification> {
    let (base_obj, alpha) = parts(w)?;
    let gs1 = parts(base_obj)?.0;
    let s1 = parts(gs1)?.1;
    let ga = idt.a_plus.base();
    let start = Object::pair(gs1.clone(), s1.clone());
    let inner = Identification::pair(start.clone(), base_obj.clone(), ga.id(gs1)?, ident(alpha)?.clone());
    let refl_point = idt.refl.obj(gs1)?.clone();
    Ok(Identification::pair(
        refl_point,
        w.clone(),
        inner,
        Identification::reflexive(alpha),
    ))
}

/// Id-Elim: `R^Id(τ)(((γ & σ1) & σ2) & α) = B^Id_α(τ(γ & σ1))`, and on
/// arrows `((p & q1) & q2) & β ↦ B^Id_α′(τ_{p & q1})`.
pub fn id_elim(idt: &IdType, b: &DependentGamoid, tau: &Term) -> Result<Term> {
    require(
        "the motive must live over ((Γ.A).A⁺).Id_A",
        b.base() == idt.refl.target(),
    )?;
    require(
        "the method must have type B{Refl}",
        *tau.ty() == subst_ty(b, &idt.refl)?,
    )?;
    let w = b.base();
    let mut m = Mapping::default();
    for o in w.objects() {
        let start = parts(parts(o)?.0)?.0;
        m.objects
            .insert(o.clone(), b.tr_obj(&from_refl(idt, o)?, tau.obj(start)?)?);
    }
    for y in w.arrows() {
        let x = arrow_parts(y)?.0;
        let pq1 = arrow_parts(x)?.0;
        m.arrows
            .insert(y.clone(), b.tr_arr(&from_refl(idt, y.target())?, tau.arr(pq1)?)?);
    }
    Ok(Term::unchecked(b, m))
}

/// Data for the Id laws: `A ∈ Ty(Γ)`, `φ : Δ → Γ`,
/// `B ∈ Ty(((Γ.A).A⁺).Id_A)`, `τ ∈ Tm(Γ.A, B{Refl_A})`.
#[derive(Clone, Debug)]
pub struct IdInstance {
    pub a: DependentGamoid,
    pub phi: GamoidMorphism,
    pub motive: DependentGamoid,
    pub tau: Term,
}

pub const ID_LAWS: [&str; 6] = ["Id-Form", "Id-discrete", "Id-Comp", "Id-Subst", "Refl-Subst", "R^Id-Subst"];

/// Checks Id-Form, discreteness of the fibers, Id-Comp and the Id
/// substitution laws.
pub fn check_id(i: &IdInstance, ctx: &str) -> LawReport {
    let mut r = LawReport::new();
    for law in ID_LAWS {
        r.touch(law);
    }
    let Some(idt) = ok_law(&mut r, "Id-Form", id_former(&i.a), ctx) else {
        return r;
    };
    r.record("Id-Form", check_equality_preserving(&idt.refl).passed(), || {
        format!("{ctx}: Refl is not equality-preserving")
    });
    for (o, f) in idt.ty.fibers() {
        let ok = f.hom_sets().all(|((x, y), h)| x == y && h.len() == 1);
        r.record("Id-discrete", ok, || format!("{ctx}: fiber over {o} is not discrete"));
    }
    let elim = id_elim(&idt, &i.motive, &i.tau);
    eq_law(
        &mut r,
        "Id-Comp",
        elim.clone().and_then(|t| subst_tm(&t, &idt.refl)),
        Ok(i.tau.clone()),
        ctx,
    );
    let plus = weaken(&i.phi, &i.a);
    let plus2 = plus.clone().and_then(|f| weaken(&f, &idt.a_plus));
    let idt2 = subst_ty(&i.a, &i.phi).and_then(|a2| id_former(&a2));
    eq_law(
        &mut r,
        "Id-Subst",
        plus2.clone().and_then(|f| subst_ty(&idt.ty, &f)),
        idt2.as_ref().map(|t| t.ty.clone()).map_err(Clone::clone),
        ctx,
    );
    let plus3 = plus2.and_then(|f| weaken(&f, &idt.ty));
    eq_law(
        &mut r,
        "Refl-Subst",
        plus.clone()
            .and_then(|f| compose_morphisms(&f, &idt.refl))
            .map(|m| m.map().clone()),
        (|| compose_morphisms(&idt2.clone()?.refl, &plus3.clone()?))().map(|m| m.map().clone()),
        ctx,
    );
    let lhs = (|| subst_tm(&elim?, &plus3.clone()?))();
    let rhs = (|| {
        let idt2 = idt2?;
        id_elim(&idt2, &subst_ty(&i.motive, &plus3?)?, &subst_tm(&i.tau, &plus?)?)
    })();
    eq_law(&mut r, "R^Id-Subst", lhs, rhs, ctx);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dependent::sections;
    use crate::games::{fixture, SizeGuard, Strategy};
    use crate::gamoid::{canonical, enumerate_morphisms};

    fn st(n: &str) -> Strategy {
        fixture(n).unwrap().strategy().unwrap()
    }

    fn n2c() -> Gamoid {
        let g = fixture("N2").unwrap().game().unwrap();
        canonical("N2C", &g, &[st("zero"), st("one")], &SizeGuard::default()).unwrap()
    }

    fn bpt() -> Gamoid {
        let g = fixture("BOOL").unwrap().game().unwrap();
        canonical("BPT", &g, &[st("bullet")], &SizeGuard::default()).unwrap()
    }

    #[test]
    fn boolean_fiber_has_cp_and_rv() {
        let one = crate::cwf::terminal();
        let a = DependentGamoid::constant("BPT", &one, &bpt());
        let idt = id_former(&a).unwrap();
        let f = idt.ty.fibers().values().next().unwrap();
        assert_eq!(f.objects().len(), 2);
        assert_eq!(f.arrow_count(), 2);
    }

    #[test]
    fn comp_and_substitution() {
        let gamma = n2c();
        let a = DependentGamoid::constant("BPT", &gamma, &bpt());
        let idt = id_former(&a).unwrap();
        let motive = DependentGamoid::constant("N2C", idt.refl.target(), &n2c());
        let br = subst_ty(&motive, &idt.refl).unwrap();
        let tau = Term::new(&br, sections(&br, Some(1)).unwrap().remove(0)).unwrap();
        for phi in enumerate_morphisms(&gamma, &gamma, None).unwrap() {
            let i = IdInstance {
                a: a.clone(),
                phi,
                motive: motive.clone(),
                tau: tau.clone(),
            };
            let r = check_id(&i, "n2c");
            assert!(r.passed(), "{r}");
        }
    }
}
