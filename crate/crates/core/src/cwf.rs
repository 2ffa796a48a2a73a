//! The category-with-families structure: contexts are gamoids, types are
//! dependent gamoids, terms are sections.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::dependent::{check_dependent, check_section, dep_pair_space, DependentGamoid};
use crate::error::{Error, Result};
use crate::games::fixture;
use crate::gamoid::{
    check_equality_preserving, compose_morphisms, discrete, enumerate_morphisms,
    identity_morphism, Gamoid, GamoidMorphism, Identification, Mapping, Object,
};
use crate::laws::LawReport;

/// A term of a type: a section with the fiber-arrow data of every base arrow.
#[derive(Clone)]
pub struct Term {
    ty: DependentGamoid,
    map: Arc<Mapping>,
}

impl PartialEq for Term {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map && self.ty == other.ty
    }
}

impl Eq for Term {}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} : {:?}", self.map, self.ty)
    }
}

impl Term {
    /// Builds a term, checking it is an equality-preserving section.
    pub fn new(ty: &DependentGamoid, map: Mapping) -> Result<Term> {
        let r = check_section(ty, &map);
        match r.first_failure() {
            None => Ok(Term::unchecked(ty, map)),
            Some((law, w)) => Err(Error::FunctorLaw {
                law: law.into(),
                witness: w.into(),
            }),
        }
    }

    pub fn unchecked(ty: &DependentGamoid, map: Mapping) -> Term {
        Term {
            ty: ty.clone(),
            map: Arc::new(map),
        }
    }

    pub fn ty(&self) -> &DependentGamoid {
        &self.ty
    }

    pub fn map(&self) -> &Arc<Mapping> {
        &self.map
    }

    pub fn obj(&self, o: &Object) -> Result<&Object> {
        self.map.obj(o)
    }

    pub fn arr(&self, p: &Identification) -> Result<&Identification> {
        self.map.arr(p)
    }

    /// The term as an object of Π̂(Γ, A).
    pub fn as_object(&self) -> Object {
        Object::Section(self.map.clone())
    }
}

/// The terminal context: the discrete gamoid on the empty game.
pub fn terminal() -> Gamoid {
    let g = fixture("I").and_then(|f| f.game().ok_or_else(|| Error::UnknownFixture("I".into())));
    let s = fixture("i_empty").map(|f| f.strategy().unwrap());
    discrete("1", &g.unwrap(), &[s.unwrap()]).expect("the empty strategy lives on the empty game")
}

/// The unique morphism into the terminal context.
pub fn to_terminal(g: &Gamoid) -> GamoidMorphism {
    let one = terminal();
    let o = one.objects().first().unwrap().clone();
    let id = one.id(&o).unwrap();
    let map = Mapping {
        objects: g.objects().iter().map(|x| (x.clone(), o.clone())).collect(),
        arrows: g.arrows().map(|p| (p.clone(), id.clone())).collect(),
    };
    GamoidMorphism::unchecked(g, &one, map)
}

/// `Γ.A`, the pair space of `A` over `Γ`.
pub fn comprehension(a: &DependentGamoid) -> Result<Gamoid> {
    Ok(dep_pair_space(a)?.renamed(&format!("{}.{}", a.base().name(), a.name())))
}

fn typing(what: &str, a: &Gamoid, b: &Gamoid) -> Result<()> {
    if a != b {
        return Err(Error::Typing(format!(
            "{what}: {} is not {}",
            a.name(),
            b.name()
        )));
    }
    Ok(())
}

/// `A{φ} = A ∘ φ`
pub fn subst_ty(a: &DependentGamoid, phi: &GamoidMorphism) -> Result<DependentGamoid> {
    typing("type substitution", phi.target(), a.base())?;
    let delta = phi.source();
    let fibers = delta
        .objects()
        .iter()
        .map(|d| Ok((d.clone(), a.fiber(phi.obj(d)?)?.clone())))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let transport = delta
        .arrows()
        .map(|p| Ok((p.clone(), a.transport_map(phi.arr(p)?)?.clone())))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(DependentGamoid::unchecked(
        &format!("{}{{{}}}", a.name(), delta.name()),
        delta,
        fibers,
        transport,
    ))
}

/// `τ{φ} = τ • φ`, with `(τ • φ)_p = τ_{φ_p}`.
pub fn subst_tm(t: &Term, phi: &GamoidMorphism) -> Result<Term> {
    let ty = subst_ty(t.ty(), phi)?;
    let delta = phi.source();
    let map = Mapping {
        objects: delta
            .objects()
            .iter()
            .map(|d| Ok((d.clone(), t.obj(phi.obj(d)?)?.clone())))
            .collect::<Result<_>>()?,
        arrows: delta
            .arrows()
            .map(|p| Ok((p.clone(), t.arr(phi.arr(p)?)?.clone())))
            .collect::<Result<_>>()?,
    };
    Ok(Term::unchecked(&ty, map))
}

/// `p(A) : Γ.A → Γ`, `(γ & σ) ↦ γ`, `(p & q) ↦ p`.
pub fn proj_p(a: &DependentGamoid) -> Result<GamoidMorphism> {
    let ext = comprehension(a)?;
    let map = Mapping {
        objects: ext
            .objects()
            .iter()
            .map(|o| (o.clone(), o.as_pair().unwrap().0.clone()))
            .collect(),
        arrows: ext
            .arrows()
            .map(|x| (x.clone(), x.as_pair().unwrap().0.clone()))
            .collect(),
    };
    Ok(GamoidMorphism::unchecked(&ext, a.base(), map))
}

/// `v_A ∈ Tm(Γ.A, A{p(A)})`, `(γ & σ) ↦ σ`, `(p & q) ↦ q`.
pub fn proj_v(a: &DependentGamoid) -> Result<Term> {
    let p = proj_p(a)?;
    let ty = subst_ty(a, &p)?;
    let ext = p.source();
    let map = Mapping {
        objects: ext
            .objects()
            .iter()
            .map(|o| (o.clone(), o.as_pair().unwrap().1.clone()))
            .collect(),
        arrows: ext
            .arrows()
            .map(|x| (x.clone(), x.as_pair().unwrap().1.clone()))
            .collect(),
    };
    Ok(Term::unchecked(&ty, map))
}

/// `⟨φ, κ⟩ : Δ → Γ.A`, `δ ↦ φδ & κδ`, `p ↦ φ_p & κ_p`.
pub fn extension(phi: &GamoidMorphism, kappa: &Term, a: &DependentGamoid) -> Result<GamoidMorphism> {
    let expected = subst_ty(a, phi)?;
    if *kappa.ty() != expected {
        return Err(Error::Typing(format!(
            "the term does not have type {}",
            expected.name()
        )));
    }
    let ext = comprehension(a)?;
    let delta = phi.source();
    let mut map = Mapping::default();
    for d in delta.objects() {
        map.objects
            .insert(d.clone(), Object::pair(phi.obj(d)?.clone(), kappa.obj(d)?.clone()));
    }
    for p in delta.arrows() {
        let src = map.objects[p.source()].clone();
        let dst = map.objects[p.target()].clone();
        map.arrows.insert(
            p.clone(),
            Identification::pair(src, dst, phi.arr(p)?.clone(), kappa.arr(p)?.clone()),
        );
    }
    Ok(GamoidMorphism::unchecked(delta, &ext, map))
}

/// `φ⁺ = ⟨φ ∘ p(A{φ}), v_{A{φ}}⟩ : Δ.A{φ} → Γ.A`
pub fn weaken(phi: &GamoidMorphism, a: &DependentGamoid) -> Result<GamoidMorphism> {
    let a_phi = subst_ty(a, phi)?;
    let p = proj_p(&a_phi)?;
    let v = proj_v(&a_phi)?;
    extension(&compose_morphisms(&p, phi)?, &v, a)
}

/// A substitution instance for the CwF equations: `Θ →ψ Δ →φ Γ`,
/// `A ∈ Ty(Γ)`, `τ ∈ Tm(Γ, A)`, `κ ∈ Tm(Δ, A{φ})`.
#[derive(Clone, Debug)]
pub struct CwfInstance {
    pub a: DependentGamoid,
    pub phi: GamoidMorphism,
    pub psi: GamoidMorphism,
    pub tau: Term,
    pub kappa: Term,
}

/// Law names in the order they are reported.
pub const CWF_LAWS: [&str; 8] = [
    "Ty-Id", "Ty-Comp", "Tm-Id", "Tm-Comp", "Cons-L", "Cons-R", "Cons-Nat", "Cons-Id",
];

fn eq_law<T: PartialEq>(r: &mut LawReport, law: &str, lhs: Result<T>, rhs: Result<T>, ctx: &str) {
    let ok = matches!((&lhs, &rhs), (Ok(x), Ok(y)) if x == y);
    r.record(law, ok, || match (lhs, rhs) {
        (Err(e), _) | (_, Err(e)) => format!("{ctx}: {e}"),
        _ => format!("{ctx}: sides differ"),
    });
}

/// Checks the inputs and the eight equations on one instance.
pub fn check_cwf_instance(i: &CwfInstance, ctx: &str) -> LawReport {
    let mut r = LawReport::new();
    r.touch("well-formed");
    for law in CWF_LAWS {
        r.touch(law);
    }
    let parts = [
        ("A", check_dependent(&i.a)),
        ("φ", check_equality_preserving(&i.phi)),
        ("ψ", check_equality_preserving(&i.psi)),
        ("τ", check_section(i.tau.ty(), i.tau.map())),
        ("κ", check_section(i.kappa.ty(), i.kappa.map())),
    ];
    let bad = parts.iter().find(|(_, rep)| !rep.passed());
    r.record("well-formed", bad.is_none(), || {
        let (what, rep) = bad.expect("a failing part");
        let (law, w) = rep.first_failure().unwrap_or_default();
        format!("{ctx}: {what}: {law}: {w}")
    });
    let gamma = i.a.base();
    let id_g = identity_morphism(gamma);
    let phi_psi = compose_morphisms(&i.psi, &i.phi);
    eq_law(&mut r, "Ty-Id", subst_ty(&i.a, &id_g), Ok(i.a.clone()), ctx);
    eq_law(
        &mut r,
        "Ty-Comp",
        phi_psi.clone().and_then(|f| subst_ty(&i.a, &f)),
        subst_ty(&i.a, &i.phi).and_then(|b| subst_ty(&b, &i.psi)),
        ctx,
    );
    eq_law(&mut r, "Tm-Id", subst_tm(&i.tau, &id_g), Ok(i.tau.clone()), ctx);
    eq_law(
        &mut r,
        "Tm-Comp",
        phi_psi.clone().and_then(|f| subst_tm(&i.tau, &f)),
        subst_tm(&i.tau, &i.phi).and_then(|t| subst_tm(&t, &i.psi)),
        ctx,
    );
    let pair = extension(&i.phi, &i.kappa, &i.a);
    eq_law(
        &mut r,
        "Cons-L",
        pair.clone()
            .and_then(|e| compose_morphisms(&e, &proj_p(&i.a)?))
            .map(|m| m.map().clone()),
        Ok(i.phi.map().clone()),
        ctx,
    );
    eq_law(
        &mut r,
        "Cons-R",
        pair.clone().and_then(|e| subst_tm(&proj_v(&i.a)?, &e)),
        Ok(i.kappa.clone()),
        ctx,
    );
    eq_law(
        &mut r,
        "Cons-Nat",
        pair.and_then(|e| compose_morphisms(&i.psi, &e))
            .map(|m| m.map().clone()),
        phi_psi
            .and_then(|f| extension(&f, &subst_tm(&i.kappa, &i.psi)?, &i.a))
            .map(|m| m.map().clone()),
        ctx,
    );
    eq_law(
        &mut r,
        "Cons-Id",
        proj_p(&i.a)
            .and_then(|p| extension(&p, &proj_v(&i.a)?, &i.a))
            .map(|m| m.map().clone()),
        comprehension(&i.a).map(|g| Arc::new(Mapping::identity_on(&g))),
        ctx,
    );
    r
}

/// Checks the equations on every instance, plus terminality of every context.
pub fn check_cwf_laws(corpus: &[CwfInstance]) -> LawReport {
    let mut r = LawReport::new();
    r.touch("terminal");
    for (k, i) in corpus.iter().enumerate() {
        r.merge(check_cwf_instance(i, &format!("instance {k}")));
        for g in [i.a.base(), i.phi.source(), i.psi.source()] {
            let n = enumerate_morphisms(g, &terminal(), None).map(|v| v.len());
            r.record("terminal", matches!(n, Ok(1)), || {
                format!("{} has {n:?} morphisms into the terminal context", g.name())
            });
        }
    }
    r
}
