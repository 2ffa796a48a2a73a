//! Dependent gamoids and the constructions over them: the dependent union,
//! dependent function and pair spaces, Id-gamoids and the evaluation
//! section.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gamoid::{
    check_equality_preserving, check_groupoid_laws, FunctorSearch, Gamoid, GamoidMorphism, Identification, Law, Mapping,
    Object, Provenance, SearchTarget, Underlying, DiscreteLaw,
};
use crate::laws::LawReport;

struct DepInner {
    name: String,
    base: Gamoid,
    fibers: BTreeMap<Object, Gamoid>,
    transport: BTreeMap<Identification, Arc<Mapping>>,
}

/// A functor from a base gamoid into gamoids: a fiber per object and an
/// invertible transport per arrow.
#[derive(Clone)]
pub struct DependentGamoid(Arc<DepInner>);

impl PartialEq for DependentGamoid {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.base == other.0.base
                && self.0.fibers == other.0.fibers
                && self.0.transport == other.0.transport)
    }
}

impl Eq for DependentGamoid {}

impl fmt::Debug for DependentGamoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.0.name, self.0.base.name())
    }
}

impl DependentGamoid {
    /// Builds a family without checking functoriality.
    pub fn unchecked(
        name: &str,
        base: &Gamoid,
        fibers: BTreeMap<Object, Gamoid>,
        transport: BTreeMap<Identification, Arc<Mapping>>,
    ) -> DependentGamoid {
        DependentGamoid(Arc::new(DepInner {
            name: name.to_string(),
            base: base.clone(),
            fibers,
            transport,
        }))
    }

    /// The family constant at `fiber` with identity transports.
    pub fn constant(name: &str, base: &Gamoid, fiber: &Gamoid) -> DependentGamoid {
        let id = Arc::new(Mapping::identity_on(fiber));
        DependentGamoid::unchecked(
            name,
            base,
            base.objects().iter().map(|o| (o.clone(), fiber.clone())).collect(),
            base.arrows().map(|p| (p.clone(), id.clone())).collect(),
        )
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn renamed(&self, name: &str) -> DependentGamoid {
        DependentGamoid::unchecked(
            name,
            &self.0.base,
            self.0.fibers.clone(),
            self.0.transport.clone(),
        )
    }

    pub fn base(&self) -> &Gamoid {
        &self.0.base
    }

    pub fn fibers(&self) -> &BTreeMap<Object, Gamoid> {
        &self.0.fibers
    }

    pub fn transports(&self) -> &BTreeMap<Identification, Arc<Mapping>> {
        &self.0.transport
    }

    pub fn fiber(&self, o: &Object) -> Result<&Gamoid> {
        self.0.fibers.get(o).ok_or_else(|| Error::NotAMember {
            what: o.to_string(),
            of: format!("the base of {}", self.0.name),
        })
    }

    pub fn transport_map(&self, p: &Identification) -> Result<&Arc<Mapping>> {
        self.0.transport.get(p).ok_or_else(|| Error::NotAMember {
            what: p.to_string(),
            of: format!("the base arrows of {}", self.0.name),
        })
    }

    pub fn transport(&self, p: &Identification) -> Result<GamoidMorphism> {
        Ok(GamoidMorphism::unchecked(
            self.fiber(p.source())?,
            self.fiber(p.target())?,
            (**self.transport_map(p)?).clone(),
        ))
    }

    /// `Bp(τ)`
    pub fn tr_obj(&self, p: &Identification, o: &Object) -> Result<Object> {
        self.transport_map(p)?.obj(o).cloned()
    }

    /// `(Bp)_q`
    pub fn tr_arr(&self, p: &Identification, q: &Identification) -> Result<Identification> {
        self.transport_map(p)?.arr(q).cloned()
    }

    /// Total number of fiber objects.
    pub fn total_objects(&self) -> usize {
        self.0.fibers.values().map(|g| g.objects().len()).sum()
    }
}

/// Checks totality, functoriality and invertibility of the transports.
pub fn check_dependent(b: &DependentGamoid) -> LawReport {
    let mut r = LawReport::new();
    for law in ["totality", "transport functor", "identity", "composition", "inverse"] {
        r.touch(law);
    }
    let base = b.base();
    for o in base.objects() {
        r.record("totality", b.fiber(o).is_ok(), || format!("no fiber over {o}"));
    }
    for p in base.arrows() {
        let Ok(t) = b.transport(p) else {
            r.record("totality", false, || format!("no transport along {p}"));
            continue;
        };
        r.record("totality", true, String::new);
        let fr = check_equality_preserving(&t);
        r.record("transport functor", fr.passed(), || {
            format!("transport along {p}: {}", fr.first_failure().map(|x| x.1).unwrap_or(""))
        });
    }
    for o in base.objects() {
        let ok = base
            .id(o)
            .ok()
            .and_then(|i| b.transport_map(&i).ok().map(|m| m.is_identity()))
            .unwrap_or(false);
        r.record("identity", ok, || format!("transport along id_{o} is not the identity"));
    }
    for p in base.arrows() {
        for q in base.arrows_from(p.target()) {
            let ok = (|| -> Result<bool> {
                let pq = base.then(p, q)?;
                Ok(**b.transport_map(&pq)? == b.transport_map(p)?.then(b.transport_map(q)?)?)
            })()
            .unwrap_or(false);
            r.record("composition", ok, || format!("B({q} ∘ {p}) ≠ B{q} ∘ B{p}"));
        }
        let ok = (|| -> Result<bool> {
            let inv = base.inv(p)?;
            Ok(**b.transport_map(&inv)? == b.transport_map(p)?.inverse()?)
        })()
        .unwrap_or(false);
        r.record("inverse", ok, || format!("B({p}⁻¹) is not the inverse of B{p}"));
    }
    r
}

/// Builds a dependent gamoid, rejecting functor-law violations with a witness.
pub fn mk_dependent_gamoid(
    name: &str,
    base: &Gamoid,
    fibers: BTreeMap<Object, Gamoid>,
    transport: BTreeMap<Identification, Arc<Mapping>>,
) -> Result<DependentGamoid> {
    let b = DependentGamoid::unchecked(name, base, fibers, transport);
    let r = check_dependent(&b);
    match r.first_failure() {
        None => Ok(b),
        Some((law, w)) => Err(Error::FunctorLaw {
            law: law.into(),
            witness: w.into(),
        }),
    }
}

/// Composition of `p & q` identifications:
/// `(p, q) ; (p′, q′) = (p ; p′, (Bp′)_q ; q′)`.
pub struct PairLaw(pub DependentGamoid);

impl Law for PairLaw {
    fn then(&self, x: &Identification, y: &Identification) -> Result<Identification> {
        let b = &self.0;
        let ((p, q), (p2, q2)) = (pair_parts(x)?, pair_parts(y)?);
        let p3 = b.base().then(p, p2)?;
        let q3 = b.fiber(p3.target())?.then(&b.tr_arr(p2, q)?, q2)?;
        Ok(Identification::pair(x.source().clone(), y.target().clone(), p3, q3))
    }

    fn identity(&self, o: &Object) -> Result<Identification> {
        let (s, t) = o
            .as_pair()
            .ok_or_else(|| Error::Typing(format!("{o} is not a pair")))?;
        let b = &self.0;
        Ok(Identification::pair(
            o.clone(),
            o.clone(),
            b.base().id(s)?,
            b.fiber(s)?.id(t)?,
        ))
    }

    fn inverse(&self, x: &Identification) -> Result<Identification> {
        let b = &self.0;
        let (p, q) = pair_parts(x)?;
        let pi = b.base().inv(p)?;
        let qi = b.tr_arr(&pi, &b.fiber(p.target())?.inv(q)?)?;
        Ok(Identification::pair(x.target().clone(), x.source().clone(), pi, qi))
    }
}

fn pair_parts(x: &Identification) -> Result<(&Identification, &Identification)> {
    x.as_pair()
        .ok_or_else(|| Error::Typing(format!("{x} is not a tagged pair")))
}

fn pair_gamoid(name: &str, b: &DependentGamoid) -> Result<Gamoid> {
    let base = b.base();
    let mut objects = std::collections::BTreeSet::new();
    for (s, f) in b.fibers() {
        for t in f.objects() {
            objects.insert(Object::pair(s.clone(), t.clone()));
        }
    }
    let mut arrows = Vec::new();
    for p in base.arrows() {
        let (src, dst) = (b.fiber(p.source())?, b.fiber(p.target())?);
        for t in src.objects() {
            let moved = b.tr_obj(p, t)?;
            for t2 in dst.objects() {
                for q in dst.hom(&moved, t2) {
                    arrows.push(Identification::pair(
                        Object::pair(p.source().clone(), t.clone()),
                        Object::pair(p.target().clone(), t2.clone()),
                        p.clone(),
                        q.clone(),
                    ));
                }
            }
        }
    }
    Ok(Gamoid::from_parts(
        name,
        Underlying::Derived(format!("pairs over {}", b.name())),
        objects,
        arrows,
        Arc::new(PairLaw(b.clone())),
    ))
}

/// The dependent union ⊎B: objects `σ & τ`, morphisms tagged by their base
/// identification, composed as `q′ ∘ (Bp′)_q`.
pub fn dependent_union(b: &DependentGamoid) -> Result<Gamoid> {
    pair_gamoid(&format!("⊎{}", b.name()), b)
}

/// The dependent pair space Σ̂(A,B): composition `(p′ ∘ p) & (q′ ⊙ q)`,
/// inverse `p⁻¹ & q⋆`.
pub fn dep_pair_space(b: &DependentGamoid) -> Result<Gamoid> {
    pair_gamoid(&format!("Σ̂({},{})", b.base().name(), b.name()), b)
}

/// The inverse `q⋆ = (Bp⁻¹)_{q⁻¹}` of a ⊎B morphism.
pub fn du_inverse(b: &DependentGamoid, q: &Identification) -> Result<Identification> {
    PairLaw(b.clone()).inverse(q)
}

/// Sections of a dependent gamoid, used by the function-space search.
pub struct SectionTarget<'a>(pub &'a DependentGamoid);

impl SearchTarget for SectionTarget<'_> {
    fn objects_over(&self, o: &Object) -> Result<Vec<Object>> {
        Ok(self.0.fiber(o)?.objects().iter().cloned().collect())
    }

    fn arrows_over(&self, p: &Identification, a: &Object, b: &Object) -> Result<Vec<Identification>> {
        let moved = self.0.tr_obj(p, a)?;
        Ok(self.0.fiber(p.target())?.hom(&moved, b).to_vec())
    }

    fn contains_over(&self, p: &Identification, a: &Object, b: &Object, fp: &Identification) -> Result<bool> {
        let moved = self.0.tr_obj(p, a)?;
        Ok(fp.source() == &moved && fp.target() == b && self.0.fiber(p.target())?.has_arrow(fp))
    }

    fn then_over(
        &self,
        _: &Identification,
        fp: &Identification,
        q: &Identification,
        fq: &Identification,
    ) -> Result<Identification> {
        self.0.fiber(q.target())?.then(&self.0.tr_arr(q, fp)?, fq)
    }

    fn identity_over(&self, o: &Object, fo: &Object) -> Result<Identification> {
        self.0.fiber(o)?.id(fo)
    }

    fn inverse_over(&self, p: &Identification, fp: &Identification) -> Result<Identification> {
        let pi = self.0.base().inv(p)?;
        self.0.tr_arr(&pi, &self.0.fiber(p.target())?.inv(fp)?)
    }
}

/// Checks that `m` is an equality-preserving section of `b`.
pub fn check_section(b: &DependentGamoid, m: &Mapping) -> LawReport {
    let t = SectionTarget(b);
    let base = b.base();
    let mut r = LawReport::new();
    for law in ["totality", "typing", "identities", "composition"] {
        r.touch(law);
    }
    for o in base.objects() {
        let ok = matches!((m.objects.get(o), b.fiber(o)), (Some(x), Ok(f)) if f.has_object(x));
        r.record("totality", ok, || format!("no fiber image for {o}"));
    }
    for p in base.arrows() {
        let ok = (|| -> Result<bool> {
            t.contains_over(p, m.obj(p.source())?, m.obj(p.target())?, m.arr(p)?)
        })()
        .unwrap_or(false);
        r.record("typing", ok, || format!("image of {p} is not an arrow Bp(τσ) → τσ′"));
    }
    for o in base.objects() {
        let ok = (|| -> Result<bool> {
            Ok(*m.arr(&base.id(o)?)? == t.identity_over(o, m.obj(o)?)?)
        })()
        .unwrap_or(false);
        r.record("identities", ok, || format!("identity on {o} not preserved"));
    }
    for p in base.arrows() {
        for q in base.arrows_from(p.target()) {
            let ok = (|| -> Result<bool> {
                let pq = base.then(p, q)?;
                Ok(*m.arr(&pq)? == t.then_over(p, m.arr(p)?, q, m.arr(q)?)?)
            })()
            .unwrap_or(false);
            r.record("composition", ok, || format!("τ({q} ∘ {p}) ≠ τ{q} ⊙ τ{p}"));
        }
    }
    r
}

/// All equality-preserving sections of `b`.
pub fn sections(b: &DependentGamoid, limit: Option<usize>) -> Result<Vec<Mapping>> {
    let t = SectionTarget(b);
    FunctorSearch::new(b.base(), &t).all(limit)
}

/// Pointwise composition of natural families.
pub struct PiLaw(pub DependentGamoid);

fn family(x: &Identification) -> Result<&BTreeMap<Object, Identification>> {
    x.as_family()
        .ok_or_else(|| Error::Typing(format!("{x} is not a family")))
}

impl Law for PiLaw {
    fn then(&self, x: &Identification, y: &Identification) -> Result<Identification> {
        let (fx, fy) = (family(x)?, family(y)?);
        let mut out = BTreeMap::new();
        for (o, q) in fx {
            let q2 = fy.get(o).ok_or_else(|| Error::Typing(format!("{y} misses {o}")))?;
            out.insert(o.clone(), self.0.fiber(o)?.then(q, q2)?);
        }
        Ok(Identification::new(
            x.source().clone(),
            y.target().clone(),
            Provenance::Family(out),
        ))
    }

    fn identity(&self, o: &Object) -> Result<Identification> {
        let m = o
            .as_section()
            .ok_or_else(|| Error::Typing(format!("{o} is not a section")))?;
        let fam = m
            .objects
            .iter()
            .map(|(s, t)| Ok((s.clone(), self.0.fiber(s)?.id(t)?)))
            .collect::<Result<_>>()?;
        Ok(Identification::new(o.clone(), o.clone(), Provenance::Family(fam)))
    }

    fn inverse(&self, x: &Identification) -> Result<Identification> {
        let fam = family(x)?
            .iter()
            .map(|(s, q)| Ok((s.clone(), self.0.fiber(s)?.inv(q)?)))
            .collect::<Result<_>>()?;
        Ok(Identification::new(
            x.target().clone(),
            x.source().clone(),
            Provenance::Family(fam),
        ))
    }
}

/// Whether a family `q : τ → τ′` is natural: `τ′_p ⊙ q_σ = q_σ′ ⊙ τ_p`.
pub fn is_natural(b: &DependentGamoid, tau: &Mapping, tau2: &Mapping, q: &BTreeMap<Object, Identification>) -> Result<bool> {
    for p in b.base().arrows() {
        let f = b.fiber(p.target())?;
        let lhs = f.then(&b.tr_arr(p, &q[p.source()])?, tau2.arr(p)?)?;
        let rhs = f.then(tau.arr(p)?, &q[p.target()])?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Natural families between two sections.
pub fn natural_families(b: &DependentGamoid, tau: &Mapping, tau2: &Mapping) -> Result<Vec<BTreeMap<Object, Identification>>> {
    let base = b.base();
    let mut acc: Vec<BTreeMap<Object, Identification>> = vec![BTreeMap::new()];
    for comp in base.components() {
        let r = &comp[0];
        let mut part = Vec::new();
        for qr in b.fiber(r)?.hom(tau.obj(r)?, tau2.obj(r)?) {
            let mut fam = BTreeMap::from([(r.clone(), qr.clone())]);
            let mut ok = true;
            for o in &comp[1..] {
                // Naturality along any arrow r → o forces q_o.
                let Some(t) = base.hom(r, o).first() else {
                    ok = false;
                    break;
                };
                let f = b.fiber(o)?;
                let qo = f.then(&f.inv(tau.arr(t)?)?, &f.then(&b.tr_arr(t, qr)?, tau2.arr(t)?)?)?;
                if !f.has_arrow(&qo) {
                    ok = false;
                    break;
                }
                fam.insert(o.clone(), qo);
            }
            if ok {
                part.push(fam);
            }
        }
        let mut next = Vec::new();
        for a in &acc {
            for p in &part {
                let mut m = a.clone();
                m.extend(p.iter().map(|(k, v)| (k.clone(), v.clone())));
                next.push(m);
            }
        }
        acc = next;
    }
    let mut out = Vec::new();
    for fam in acc {
        if is_natural(b, tau, tau2, &fam)? {
            out.push(fam);
        }
    }
    Ok(out)
}

/// The dependent function space Π̂(A,B): objects are equality-preserving
/// sections, morphisms natural families.
pub fn dep_fun_space(b: &DependentGamoid) -> Result<Gamoid> {
    dep_fun_space_from(b, sections(b, None)?)
}

/// Π̂(A,B) restricted to the given sections.
pub fn dep_fun_space_from(b: &DependentGamoid, secs: Vec<Mapping>) -> Result<Gamoid> {
    let secs: Vec<Arc<Mapping>> = secs.into_iter().map(Arc::new).collect();
    let mut arrows = Vec::new();
    for t1 in &secs {
        for t2 in &secs {
            for fam in natural_families(b, t1, t2)? {
                arrows.push(Identification::new(
                    Object::Section(t1.clone()),
                    Object::Section(t2.clone()),
                    Provenance::Family(fam),
                ));
            }
        }
    }
    Ok(Gamoid::from_parts(
        &format!("Π̂({},{})", b.base().name(), b.name()),
        Underlying::Derived(format!("sections of {}", b.name())),
        secs.into_iter().map(Object::Section).collect(),
        arrows,
        Arc::new(PiLaw(b.clone())),
    ))
}

/// `q_p`: the ⊎B identification `τ′_p ⊙ q_σ`, checked against `q_σ′ ⊙ τ_p`.
pub fn transport_apply(b: &DependentGamoid, q: &Identification, p: &Identification) -> Result<Identification> {
    let (Some(tau), Some(tau2)) = (q.source().as_section(), q.target().as_section()) else {
        return Err(Error::Typing(format!("{q} is not a Π̂ morphism")));
    };
    let fam = family(q)?;
    let f = b.fiber(p.target())?;
    let get = |o: &Object| {
        fam.get(o)
            .ok_or_else(|| Error::Typing(format!("{q} has no component at {o}")))
    };
    let via_source = f.then(&b.tr_arr(p, get(p.source())?)?, tau2.arr(p)?)?;
    let via_target = f.then(tau.arr(p)?, get(p.target())?)?;
    if via_source != via_target {
        return Err(Error::Naturality(format!("{q} at {p}")));
    }
    Ok(Identification::pair(
        Object::pair(p.source().clone(), tau.obj(p.source())?.clone()),
        Object::pair(p.target().clone(), tau2.obj(p.target())?.clone()),
        p.clone(),
        via_source,
    ))
}

/// The discrete gamoid on the hom-set `σ1 =_G σ2`.
pub fn id_gamoid(g: &Gamoid, s1: &Object, s2: &Object) -> Result<Gamoid> {
    for s in [s1, s2] {
        if !g.has_object(s) {
            return Err(Error::NotAMember {
                what: s.to_string(),
                of: g.name().to_string(),
            });
        }
    }
    let objects: std::collections::BTreeSet<Object> =
        g.hom(s1, s2).iter().cloned().map(Object::Ident).collect();
    let arrows: Vec<Identification> = objects.iter().map(Identification::reflexive).collect();
    Ok(Gamoid::from_parts(
        &format!("Îd_{}({s1},{s2})", g.name()),
        Underlying::Derived(format!("{s1} ⊸ {s2}")),
        objects,
        arrows,
        Arc::new(DiscreteLaw),
    ))
}

/// The evaluation section of `B{snd}` over `Π̂(A,B) & A`.
pub struct Evaluation {
    /// `Π̂(A,B) & A`
    pub domain: Gamoid,
    /// `(ζ & σ) ↦ Bσ`, `(q & p) ↦ Bp`
    pub family: DependentGamoid,
    pub section: Mapping,
}

/// The product of two gamoids as a pair space over a constant family.
pub fn product(a: &Gamoid, b: &Gamoid) -> Result<Gamoid> {
    dep_pair_space(&DependentGamoid::constant(b.name(), a, b))
}

/// Builds `ev` for `b`: `(ζ & σ) ↦ ζ(σ)` and `(q & p) ↦ q_p`.
pub fn ev_functor(b: &DependentGamoid, pi: &Gamoid) -> Result<Evaluation> {
    let domain = product(pi, b.base())?;
    let mut fibers = BTreeMap::new();
    let mut transport = BTreeMap::new();
    let mut section = Mapping::default();
    for o in domain.objects() {
        let (zeta, s) = o.as_pair().unwrap();
        fibers.insert(o.clone(), b.fiber(s)?.clone());
        let z = zeta
            .as_section()
            .ok_or_else(|| Error::Typing(format!("{zeta} is not a section")))?;
        section.objects.insert(o.clone(), z.obj(s)?.clone());
    }
    for x in domain.arrows() {
        let (q, p) = x.as_pair().unwrap();
        transport.insert(x.clone(), b.transport_map(p)?.clone());
        let qp = transport_apply(b, q, p)?;
        section.arrows.insert(x.clone(), qp.as_pair().unwrap().1.clone());
    }
    let family = DependentGamoid::unchecked(&format!("{}{{snd}}", b.name()), &domain, fibers, transport);
    Ok(Evaluation {
        domain,
        family,
        section,
    })
}

pub const CONSTRUCTION_LAWS: [&str; 7] = ["⊎B", "Σ̂", "Π̂", "q⋆⊙q = id", "q⊙q⋆ = id", "ev section", "Id-gamoid"];

/// Groupoid laws of `⊎B`, `Σ̂` and `Π̂` over `b`, the inverse law of `⊎B`,
/// the section law of `ev`, and groupoid laws of every Id-gamoid of a fiber.
pub fn check_constructions(b: &DependentGamoid) -> LawReport {
    let mut r = LawReport::new();
    for law in CONSTRUCTION_LAWS {
        r.touch(law);
    }
    let name = b.name().to_string();
    let groupoid = |r: &mut LawReport, law: &str, g: Result<Gamoid>| match g {
        Ok(g) => {
            let laws = check_groupoid_laws(&g);
            r.record(law, laws.passed(), || {
                let (l, w) = laws.first_failure().unwrap_or_default();
                format!("{name}: {l}: {w}")
            });
            Some(g)
        }
        Err(e) => {
            r.record(law, false, || format!("{name}: {e}"));
            None
        }
    };
    if let Some(u) = groupoid(&mut r, "⊎B", dependent_union(b)) {
        for q in u.arrows() {
            let (left, right) = (|| -> Result<(bool, bool)> {
                let qs = du_inverse(b, q)?;
                Ok((
                    u.then(q, &qs)? == u.id(q.source())?,
                    u.then(&qs, q)? == u.id(q.target())?,
                ))
            })()
            .unwrap_or((false, false));
            r.record("q⋆⊙q = id", left, || format!("{name}: {q}"));
            r.record("q⊙q⋆ = id", right, || format!("{name}: {q}"));
        }
    }
    groupoid(&mut r, "Σ̂", dep_pair_space(b));
    if let Some(pi) = groupoid(&mut r, "Π̂", dep_fun_space(b)) {
        match ev_functor(b, &pi) {
            Ok(ev) => {
                let s = check_section(&ev.family, &ev.section);
                r.record("ev section", s.passed(), || {
                    let (l, w) = s.first_failure().unwrap_or_default();
                    format!("{name}: {l}: {w}")
                });
            }
            Err(e) => r.record("ev section", false, || format!("{name}: {e}")),
        }
    }
    for (o, f) in b.fibers() {
        for s1 in f.objects() {
            for s2 in f.objects() {
                let ctx = format!("{o}: {s1}, {s2}");
                match id_gamoid(f, s1, s2) {
                    Ok(g) => {
                        let laws = check_groupoid_laws(&g);
                        r.record("Id-gamoid", laws.passed(), || format!("{name} at {ctx}"));
                    }
                    Err(e) => r.record("Id-gamoid", false, || format!("{name} at {ctx}: {e}")),
                }
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::{fixture, SizeGuard, Strategy};
    use crate::gamoid::{canonical, check_groupoid_laws, discrete, enumerate_morphisms};

    fn st(n: &str) -> Strategy {
        fixture(n).unwrap().strategy().unwrap()
    }

    fn bpt() -> Gamoid {
        let g = fixture("BOOL").unwrap().game().unwrap();
        canonical("BPT", &g, &[st("bullet")], &SizeGuard::default()).unwrap()
    }

    fn n2c() -> Gamoid {
        let g = fixture("N2").unwrap().game().unwrap();
        canonical("N2C", &g, &[st("zero"), st("one")], &SizeGuard::default()).unwrap()
    }

    fn rv() -> Identification {
        Identification::base(fixture("rv").unwrap().iso().unwrap())
    }

    /// Base BPT, fiber N2C, rv acting by the swap.
    fn flip() -> DependentGamoid {
        let (base, fib) = (bpt(), n2c());
        let swap = enumerate_morphisms(&fib, &fib, None)
            .unwrap()
            .into_iter()
            .find(|m| m.is_invertible() && !m.map().is_identity())
            .unwrap();
        let mut tr = BTreeMap::new();
        for p in base.arrows() {
            let m = if *p == rv() {
                swap.map().clone()
            } else {
                Arc::new(Mapping::identity_on(&fib))
            };
            tr.insert(p.clone(), m);
        }
        let fibers = base.objects().iter().map(|o| (o.clone(), fib.clone())).collect();
        mk_dependent_gamoid("flip", &base, fibers, tr).unwrap()
    }

    #[test]
    fn constant_family_union_counts() {
        let (a, h) = (bpt(), n2c());
        let b = DependentGamoid::constant("H", &a, &h);
        assert!(check_dependent(&b).passed());
        let u = dependent_union(&b).unwrap();
        let o = a.objects().first().unwrap();
        for t in h.objects() {
            for t2 in h.objects() {
                let n = u
                    .hom(&Object::pair(o.clone(), t.clone()), &Object::pair(o.clone(), t2.clone()))
                    .len();
                assert_eq!(n, a.hom(o, o).len() * h.hom(t, t2).len());
            }
        }
        assert!(check_groupoid_laws(&u).passed());
    }

    #[test]
    fn broken_transport_rejected() {
        let (base, fib) = (bpt(), n2c());
        let swap = enumerate_morphisms(&fib, &fib, None)
            .unwrap()
            .into_iter()
            .find(|m| !m.map().is_identity() && m.is_invertible())
            .unwrap();
        // Sending both cp and rv to the swap breaks transport(id) = id.
        let tr = base.arrows().map(|p| (p.clone(), swap.map().clone())).collect();
        let fibers = base.objects().iter().map(|o| (o.clone(), fib.clone())).collect();
        assert!(matches!(
            mk_dependent_gamoid("bad", &base, fibers, tr),
            Err(Error::FunctorLaw { .. })
        ));
    }

    #[test]
    fn flip_family_constructions() {
        let b = flip();
        let u = dependent_union(&b).unwrap();
        assert!(check_groupoid_laws(&u).passed());
        for q in u.arrows() {
            let qi = du_inverse(&b, q).unwrap();
            assert!(u.then(q, &qi).unwrap() == u.id(q.source()).unwrap());
            assert_eq!(qi.as_pair().unwrap().0, &b.base().inv(q.as_pair().unwrap().0).unwrap());
        }
        let pi = dep_fun_space(&b).unwrap();
        // τ(•) is 0 or 1 and τ_rv is then forced.
        assert_eq!(pi.objects().len(), 2);
        assert!(check_groupoid_laws(&pi).passed());
        let s = dep_pair_space(&b).unwrap();
        assert!(check_groupoid_laws(&s).passed());
    }

    #[test]
    fn pi_over_single_object_discrete_base() {
        let g = fixture("I").unwrap().game().unwrap();
        let t = discrete("T", &g, &[st("i_empty")]).unwrap();
        let b = DependentGamoid::constant("N2C", &t, &n2c());
        let pi = dep_fun_space(&b).unwrap();
        assert_eq!(pi.objects().len(), 2);
        assert_eq!(pi.arrow_count(), n2c().arrow_count());
        assert!(check_groupoid_laws(&pi).passed());
    }

    #[test]
    fn id_gamoid_on_bullet() {
        let g = bpt();
        let o = Object::Strategy(st("bullet"));
        let idg = id_gamoid(&g, &o, &o).unwrap();
        assert_eq!(idg.objects().len(), 2);
        assert_eq!(idg.arrow_count(), 2);
        let cp = Object::Ident(Identification::base(fixture("cp").unwrap().iso().unwrap()));
        assert!(idg.hom(&cp, &Object::Ident(rv())).is_empty());
    }

    #[test]
    fn ev_is_a_section() {
        let b = DependentGamoid::constant("BPT", &n2c(), &bpt());
        let pi = dep_fun_space(&b).unwrap();
        let ev = ev_functor(&b, &pi).unwrap();
        assert!(check_section(&ev.family, &ev.section).passed());
    }
}
