//! Gamoids: finite groupoids of strategies and their identifications.

mod morphism;
mod search;

pub use morphism::{
    check_equality_preserving, compose_morphisms, enumerate_morphisms, identity_morphism,
    GamoidMorphism, Mapping,
};
pub use search::{FunctorSearch, PlainTarget, SearchTarget};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::games::{all_isos, Game, SizeGuard, Strategy, StrategyIso};
use crate::laws::LawReport;

/// An object of a gamoid. Base gamoids hold strategies; derived gamoids hold
/// pairs, sections, reified identifications or universe codes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Object {
    Strategy(Strategy),
    /// `σ & τ` in a dependent union or pair space.
    Pair(Arc<(Object, Object)>),
    /// A section of a dependent gamoid: base object ↦ fiber object and base
    /// arrow ↦ fiber arrow.
    Section(Arc<Mapping>),
    /// An identification viewed as an object of an Id-gamoid.
    Ident(Identification),
    /// A universe code.
    Code(Arc<str>),
}

impl Object {
    pub fn pair(a: Object, b: Object) -> Object {
        Object::Pair(Arc::new((a, b)))
    }

    pub fn code(name: &str) -> Object {
        Object::Code(Arc::from(name))
    }

    pub fn as_pair(&self) -> Option<(&Object, &Object)> {
        match self {
            Object::Pair(p) => Some((&p.0, &p.1)),
            _ => None,
        }
    }

    pub fn as_strategy(&self) -> Option<&Strategy> {
        match self {
            Object::Strategy(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_section(&self) -> Option<&Arc<Mapping>> {
        match self {
            Object::Section(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_ident(&self) -> Option<&Identification> {
        match self {
            Object::Ident(i) => Some(i),
            _ => None,
        }
    }

    pub fn as_code(&self) -> Option<&str> {
        match self {
            Object::Code(c) => Some(c),
            _ => None,
        }
    }
}

impl From<Strategy> for Object {
    fn from(s: Strategy) -> Self {
        Object::Strategy(s)
    }
}

impl fmt::Debug for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Strategy(s) => write!(f, "{s}"),
            Object::Pair(p) => write!(f, "({:?}&{:?})", p.0, p.1),
            Object::Section(m) => write!(f, "{m:?}"),
            Object::Ident(i) => write!(f, "⌜{i:?}⌝"),
            Object::Code(c) => write!(f, "code({c})"),
        }
    }
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// How an identification is built. Composition depends on it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Provenance {
    /// A strategy iso between base objects.
    Base(StrategyIso),
    /// `p & q`: `p` in the base, `q` in the fiber over the target of `p`,
    /// running from the transported source to the target's fiber part.
    Pair(Identification, Identification),
    /// A natural family `&{q_σ}` indexed by base objects.
    Family(BTreeMap<Object, Identification>),
    /// The only identification of a discrete derived object.
    Reflexive,
    /// An invertible equality-preserving map between coded gamoids.
    Functor(Arc<Mapping>),
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct IdentInner {
    source: Object,
    target: Object,
    provenance: Provenance,
}

/// A morphism of a gamoid. Equality ignores the display label.
#[derive(Clone)]
pub struct Identification {
    inner: Arc<IdentInner>,
    label: Arc<str>,
}

impl PartialEq for Identification {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for Identification {}

impl PartialOrd for Identification {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Identification {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        if Arc::ptr_eq(&self.inner, &other.inner) {
            return std::cmp::Ordering::Equal;
        }
        self.inner.cmp(&other.inner)
    }
}

impl fmt::Debug for Identification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

impl fmt::Display for Identification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

impl Identification {
    pub fn new(source: Object, target: Object, provenance: Provenance) -> Identification {
        let label = match &provenance {
            Provenance::Base(iso) => iso.name().to_string(),
            Provenance::Pair(p, q) => format!("({p}&{q})"),
            Provenance::Family(fam) => {
                let parts: Vec<String> = fam.iter().map(|(o, q)| format!("{o}:{q}")).collect();
                format!("{{{}}}", parts.join(","))
            }
            Provenance::Reflexive => format!("id_{source}"),
            Provenance::Functor(_) => format!("{source}≅{target}"),
        };
        Identification {
            inner: Arc::new(IdentInner {
                source,
                target,
                provenance,
            }),
            label: Arc::from(label.as_str()),
        }
    }

    pub fn base(iso: StrategyIso) -> Identification {
        Identification::new(
            Object::Strategy(iso.source().clone()),
            Object::Strategy(iso.target().clone()),
            Provenance::Base(iso),
        )
    }

    pub fn pair(source: Object, target: Object, p: Identification, q: Identification) -> Self {
        Identification::new(source, target, Provenance::Pair(p, q))
    }

    pub fn reflexive(o: &Object) -> Identification {
        Identification::new(o.clone(), o.clone(), Provenance::Reflexive)
    }

    pub fn with_label(&self, label: &str) -> Identification {
        Identification {
            inner: self.inner.clone(),
            label: Arc::from(label),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn source(&self) -> &Object {
        &self.inner.source
    }

    pub fn target(&self) -> &Object {
        &self.inner.target
    }

    pub fn provenance(&self) -> &Provenance {
        &self.inner.provenance
    }

    /// The object the carrier actually starts from. For `p & q` this is the
    /// transported source `σ′ & Bp(τ)`.
    pub fn adjusted_source(&self) -> Object {
        match &self.inner.provenance {
            Provenance::Pair(p, q) => Object::pair(p.target().clone(), q.source().clone()),
            _ => self.inner.source.clone(),
        }
    }

    /// The strategy iso carrying a base identification.
    pub fn carrier(&self) -> Option<&StrategyIso> {
        match &self.inner.provenance {
            Provenance::Base(iso) => Some(iso),
            _ => None,
        }
    }

    pub fn as_pair(&self) -> Option<(&Identification, &Identification)> {
        match &self.inner.provenance {
            Provenance::Pair(p, q) => Some((p, q)),
            _ => None,
        }
    }

    pub fn as_family(&self) -> Option<&BTreeMap<Object, Identification>> {
        match &self.inner.provenance {
            Provenance::Family(f) => Some(f),
            _ => None,
        }
    }

    pub fn as_functor(&self) -> Option<&Arc<Mapping>> {
        match &self.inner.provenance {
            Provenance::Functor(m) => Some(m),
            _ => None,
        }
    }
}

/// Composition structure of a gamoid.
pub trait Law: Send + Sync {
    /// `p` followed by `q`, i.e. `q ∘ p`.
    fn then(&self, p: &Identification, q: &Identification) -> Result<Identification>;
    fn identity(&self, o: &Object) -> Result<Identification>;
    fn inverse(&self, p: &Identification) -> Result<Identification>;
}

fn mismatch(p: &Identification, q: &Identification) -> Error {
    Error::EndpointMismatch(format!(
        "{p} ends at {} but {q} starts at {}",
        p.target(),
        q.source()
    ))
}

/// Composition of strategy isos.
pub struct BaseLaw;

impl Law for BaseLaw {
    fn then(&self, p: &Identification, q: &Identification) -> Result<Identification> {
        match (p.carrier(), q.carrier()) {
            (Some(f), Some(g)) => {
                let h = f.compose(g)?;
                let h = if h.is_identity() {
                    h.renamed(&format!("id_{}", h.source().name()))
                } else {
                    h
                };
                Ok(Identification::base(h))
            }
            _ => Err(mismatch(p, q)),
        }
    }

    fn identity(&self, o: &Object) -> Result<Identification> {
        match o {
            Object::Strategy(s) => Ok(Identification::base(StrategyIso::identity(s))),
            _ => Err(Error::Typing(format!("{o} is not a strategy"))),
        }
    }

    fn inverse(&self, p: &Identification) -> Result<Identification> {
        p.carrier()
            .map(|f| Identification::base(f.invert()))
            .ok_or_else(|| Error::Typing(format!("{p} is not a base identification")))
    }
}

/// Composition in a gamoid whose only arrows are reflexive identities.
pub struct DiscreteLaw;

impl Law for DiscreteLaw {
    fn then(&self, p: &Identification, q: &Identification) -> Result<Identification> {
        if p.target() != q.source() {
            return Err(mismatch(p, q));
        }
        if p.source() != q.target() {
            return Err(Error::Typing(format!("{p} and {q} are not reflexive")));
        }
        Ok(Identification::reflexive(p.source()))
    }

    fn identity(&self, o: &Object) -> Result<Identification> {
        Ok(Identification::reflexive(o))
    }

    fn inverse(&self, p: &Identification) -> Result<Identification> {
        Ok(p.clone())
    }
}

/// What a gamoid's objects live on.
#[derive(Clone, Debug)]
pub enum Underlying {
    Game(Game),
    /// A derived gamoid, described in words; its play-level game is not built.
    Derived(String),
}

type Homs = BTreeMap<(Object, Object), Vec<Identification>>;

struct GamoidInner {
    name: String,
    underlying: Underlying,
    objects: BTreeSet<Object>,
    homs: Homs,
    out: BTreeMap<Object, Vec<Identification>>,
    law: Arc<dyn Law>,
}

/// A finite groupoid. Strict equality compares objects and hom-sets.
#[derive(Clone)]
pub struct Gamoid(Arc<GamoidInner>);

impl PartialEq for Gamoid {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.objects == other.0.objects && self.0.homs == other.0.homs)
    }
}

impl Eq for Gamoid {}

impl PartialOrd for Gamoid {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Gamoid {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return std::cmp::Ordering::Equal;
        }
        (&self.0.objects, &self.0.homs).cmp(&(&other.0.objects, &other.0.homs))
    }
}

impl fmt::Debug for Gamoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Gamoid({}, {} objects, {} arrows)",
            self.0.name,
            self.0.objects.len(),
            self.arrow_count()
        )
    }
}

impl Gamoid {
    /// Builds a gamoid from raw data. Identities are not added.
    pub fn from_parts(
        name: &str,
        underlying: Underlying,
        objects: BTreeSet<Object>,
        arrows: impl IntoIterator<Item = Identification>,
        law: Arc<dyn Law>,
    ) -> Gamoid {
        let mut homs: Homs = BTreeMap::new();
        for a in arrows {
            homs.entry((a.source().clone(), a.target().clone()))
                .or_default()
                .push(a);
        }
        for v in homs.values_mut() {
            v.sort();
            v.dedup();
        }
        let mut out: BTreeMap<Object, Vec<Identification>> = BTreeMap::new();
        for ((a, _), v) in &homs {
            out.entry(a.clone()).or_default().extend(v.iter().cloned());
        }
        Gamoid(Arc::new(GamoidInner {
            name: name.to_string(),
            underlying,
            objects,
            homs,
            out,
            law,
        }))
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn renamed(&self, name: &str) -> Gamoid {
        Gamoid(Arc::new(GamoidInner {
            name: name.to_string(),
            underlying: self.0.underlying.clone(),
            objects: self.0.objects.clone(),
            homs: self.0.homs.clone(),
            out: self.0.out.clone(),
            law: self.0.law.clone(),
        }))
    }

    pub fn underlying(&self) -> &Underlying {
        &self.0.underlying
    }

    pub fn game(&self) -> Option<&Game> {
        match &self.0.underlying {
            Underlying::Game(g) => Some(g),
            Underlying::Derived(_) => None,
        }
    }

    pub fn objects(&self) -> &BTreeSet<Object> {
        &self.0.objects
    }

    pub fn has_object(&self, o: &Object) -> bool {
        self.0.objects.contains(o)
    }

    pub fn hom(&self, a: &Object, b: &Object) -> &[Identification] {
        self.0
            .homs
            .get(&(a.clone(), b.clone()))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn has_arrow(&self, p: &Identification) -> bool {
        self.hom(p.source(), p.target()).binary_search(p).is_ok()
    }

    /// All arrows, grouped by (source, target).
    pub fn arrows(&self) -> impl Iterator<Item = &Identification> {
        self.0.homs.values().flatten()
    }

    /// Nonempty hom-sets.
    pub fn hom_sets(&self) -> impl Iterator<Item = (&(Object, Object), &Vec<Identification>)> {
        self.0.homs.iter()
    }

    /// Arrows leaving `a`.
    pub fn arrows_from(&self, a: &Object) -> &[Identification] {
        self.0.out.get(a).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn arrow_count(&self) -> usize {
        self.0.homs.values().map(Vec::len).sum()
    }

    pub fn law(&self) -> &Arc<dyn Law> {
        &self.0.law
    }

    /// `p` followed by `q`.
    pub fn then(&self, p: &Identification, q: &Identification) -> Result<Identification> {
        if p.target() != q.source() {
            return Err(mismatch(p, q));
        }
        self.0.law.then(p, q)
    }

    pub fn id(&self, o: &Object) -> Result<Identification> {
        self.0.law.identity(o)
    }

    pub fn inv(&self, p: &Identification) -> Result<Identification> {
        self.0.law.inverse(p)
    }

    /// Restores stored labels on a computed arrow.
    pub fn canonical_arrow(&self, p: &Identification) -> Identification {
        let hom = self.hom(p.source(), p.target());
        match hom.binary_search(p) {
            Ok(i) => hom[i].clone(),
            Err(_) => p.clone(),
        }
    }

    /// Connected components, each listed with a root first.
    pub fn components(&self) -> Vec<Vec<Object>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for o in &self.0.objects {
            if seen.contains(o) {
                continue;
            }
            let mut comp = vec![o.clone()];
            seen.insert(o.clone());
            let mut i = 0;
            while i < comp.len() {
                let a = comp[i].clone();
                for b in &self.0.objects {
                    if !seen.contains(b) && !self.hom(&a, b).is_empty() {
                        seen.insert(b.clone());
                        comp.push(b.clone());
                    }
                }
                i += 1;
            }
            out.push(comp);
        }
        out
    }
}

fn check_objects_on(game: &Game, objects: &[Strategy]) -> Result<()> {
    for s in objects {
        if s.game() != game {
            return Err(Error::GameMismatch(format!(
                "{s} is not a strategy on {}",
                game.name()
            )));
        }
    }
    Ok(())
}

/// The gamoid of all strategy isos between the given strategies.
pub fn canonical(name: &str, game: &Game, objects: &[Strategy], guard: &SizeGuard) -> Result<Gamoid> {
    check_objects_on(game, objects)?;
    let mut arrows = Vec::new();
    for a in objects {
        for b in objects {
            arrows.extend(all_isos(a, b, guard)?.into_iter().map(Identification::base));
        }
    }
    Ok(Gamoid::from_parts(
        name,
        Underlying::Game(game.clone()),
        objects.iter().cloned().map(Object::Strategy).collect(),
        arrows,
        Arc::new(BaseLaw),
    ))
}

/// The gamoid whose only identifications are identities.
pub fn discrete(name: &str, game: &Game, objects: &[Strategy]) -> Result<Gamoid> {
    check_objects_on(game, objects)?;
    Ok(Gamoid::from_parts(
        name,
        Underlying::Game(game.clone()),
        objects.iter().cloned().map(Object::Strategy).collect(),
        objects
            .iter()
            .map(|s| Identification::base(StrategyIso::identity(s))),
        Arc::new(BaseLaw),
    ))
}

/// A gamoid with exactly the listed isos as arrows. Identities are not
/// added, so the result may fail the groupoid laws.
pub fn explicit(name: &str, game: &Game, objects: &[Strategy], isos: &[StrategyIso]) -> Result<Gamoid> {
    check_objects_on(game, objects)?;
    let obj: BTreeSet<Object> = objects.iter().cloned().map(Object::Strategy).collect();
    for f in isos {
        for end in [f.source(), f.target()] {
            if !obj.contains(&Object::Strategy(end.clone())) {
                return Err(Error::NotAMember {
                    what: end.name().to_string(),
                    of: name.to_string(),
                });
            }
        }
    }
    Ok(Gamoid::from_parts(
        name,
        Underlying::Game(game.clone()),
        obj,
        isos.iter().cloned().map(Identification::base),
        Arc::new(BaseLaw),
    ))
}

/// Whether `h` is a closed subgroupoid of `g`.
pub fn is_subgamoid(h: &Gamoid, g: &Gamoid) -> bool {
    h.objects().is_subset(g.objects())
        && h.arrows().all(|p| g.has_arrow(p))
        && check_groupoid_laws(h).passed()
}

/// Checks endpoints, identities, closure, unit, associativity and inverses
/// over every composable tuple.
pub fn check_groupoid_laws(g: &Gamoid) -> LawReport {
    let mut r = LawReport::new();
    for law in ["endpoints", "identities", "closure", "unit", "associativity", "inverses"] {
        r.touch(law);
    }
    for ((a, b), hom) in g.hom_sets() {
        for p in hom {
            r.record(
                "endpoints",
                p.source() == a && p.target() == b && g.has_object(a) && g.has_object(b),
                || format!("{p} filed under {a} -> {b}"),
            );
        }
    }
    let mut ids = BTreeMap::new();
    for o in g.objects() {
        let id = g.id(o);
        let ok = matches!(&id, Ok(i) if g.has_arrow(i));
        r.record("identities", ok, || format!("identity on {o} missing"));
        if let Ok(i) = id {
            ids.insert(o.clone(), i);
        }
    }
    for p in g.arrows() {
        if let (Some(ia), Some(ib)) = (ids.get(p.source()), ids.get(p.target())) {
            let ok = g.then(ia, p).ok().as_ref() == Some(p) && g.then(p, ib).ok().as_ref() == Some(p);
            r.record("unit", ok, || format!("unit law fails at {p}"));
        }
        let inv = g.inv(p);
        let ok = match &inv {
            Ok(q) => {
                g.has_arrow(q)
                    && q.source() == p.target()
                    && ids.get(p.source()).is_some_and(|i| g.then(p, q).ok().as_ref() == Some(i))
                    && ids.get(p.target()).is_some_and(|i| g.then(q, p).ok().as_ref() == Some(i))
            }
            Err(_) => false,
        };
        r.record("inverses", ok, || format!("no two-sided inverse for {p}"));
        for q in g.arrows_from(p.target()) {
            let pq = g.then(p, q);
            let ok = matches!(&pq, Ok(c) if g.has_arrow(c));
            r.record("closure", ok, || format!("not closed: {q} ∘ {p}"));
            let Ok(pq) = pq else { continue };
            for s in g.arrows_from(q.target()) {
                let left = g.then(&pq, s);
                let right = g.then(q, s).and_then(|qs| g.then(p, &qs));
                let ok = matches!((&left, &right), (Ok(x), Ok(y)) if x == y);
                r.record("associativity", ok, || {
                    format!("({s} ∘ {q}) ∘ {p} ≠ {s} ∘ ({q} ∘ {p})")
                });
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::{enumerate_strategies, fixture};

    fn st(n: &str) -> Strategy {
        fixture(n).unwrap().strategy().unwrap()
    }

    fn g(n: &str) -> Game {
        fixture(n).unwrap().game().unwrap()
    }

    #[test]
    fn canonical_bullet_has_cp_and_rv() {
        let b = canonical("BPT", &g("BOOL"), &[st("bullet")], &SizeGuard::default()).unwrap();
        let o = Object::Strategy(st("bullet"));
        let hom = b.hom(&o, &o);
        assert_eq!(hom.len(), 2);
        let rv = Identification::base(fixture("rv").unwrap().iso().unwrap());
        let cp = Identification::base(fixture("cp").unwrap().iso().unwrap());
        assert!(hom.contains(&rv) && hom.contains(&cp));
        assert_eq!(b.then(&rv, &rv).unwrap(), cp);
        assert_eq!(b.inv(&rv).unwrap(), rv);
        assert!(check_groupoid_laws(&b).passed());
    }

    #[test]
    fn canonical_n2_and_terminal() {
        let guard = SizeGuard::default();
        let n2 = canonical("N2C", &g("N2"), &[st("zero"), st("one")], &guard).unwrap();
        let (z, o) = (Object::Strategy(st("zero")), Object::Strategy(st("one")));
        assert_eq!(n2.hom(&z, &o).len(), 1);
        let t = canonical("T", &g("I"), &[st("i_empty")], &guard).unwrap();
        assert_eq!(t.arrow_count(), 1);
        assert_eq!(t, discrete("T", &g("I"), &[st("i_empty")]).unwrap());
    }

    #[test]
    fn discrete_gamoids() {
        let all = enumerate_strategies(&g("BOOL"), &SizeGuard::default()).unwrap();
        let d = discrete("D", &g("BOOL"), &all).unwrap();
        assert_eq!(d.arrow_count(), 4);
        assert!(check_groupoid_laws(&d).passed());
        let d2 = discrete("D", &g("N2"), &[st("zero"), st("one")]).unwrap();
        assert!(d2
            .hom(&Object::Strategy(st("zero")), &Object::Strategy(st("one")))
            .is_empty());
    }

    #[test]
    fn subgamoids() {
        let guard = SizeGuard::default();
        let c = canonical("C", &g("BOOL"), &[st("bullet")], &guard).unwrap();
        let d = discrete("D", &g("BOOL"), &[st("bullet")]).unwrap();
        assert!(is_subgamoid(&d, &c));
        assert!(!is_subgamoid(&c, &d));
    }

    #[test]
    fn missing_composite_is_not_closed() {
        let rv = fixture("rv").unwrap().iso().unwrap();
        let h = explicit("H", &g("BOOL"), &[st("bullet")], &[rv]).unwrap();
        let r = check_groupoid_laws(&h);
        assert!(!r.passed());
        assert!(r.entry("closure").unwrap().failure.is_some());
    }

    #[test]
    fn strategies_on_other_games_rejected() {
        assert!(canonical("x", &g("BOOL"), &[st("zero")], &SizeGuard::default()).is_err());
    }
}
