use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::search::{FunctorSearch, PlainTarget};
use super::{Gamoid, Identification, Object};
use crate::error::{Error, Result};
use crate::games::{compose_strategies, copycat, SizeGuard, Strategy};
use crate::laws::LawReport;

/// Finite object and arrow maps.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Mapping {
    pub objects: BTreeMap<Object, Object>,
    pub arrows: BTreeMap<Identification, Identification>,
}

impl fmt::Debug for Mapping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .objects
            .iter()
            .map(|(a, b)| format!("{a}↦{b}"))
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Mapping {
    pub fn identity_on(g: &Gamoid) -> Mapping {
        Mapping {
            objects: g.objects().iter().map(|o| (o.clone(), o.clone())).collect(),
            arrows: g.arrows().map(|p| (p.clone(), p.clone())).collect(),
        }
    }

    pub fn obj(&self, o: &Object) -> Result<&Object> {
        self.objects.get(o).ok_or_else(|| Error::NotAMember {
            what: o.to_string(),
            of: "the object map".into(),
        })
    }

    pub fn arr(&self, p: &Identification) -> Result<&Identification> {
        self.arrows.get(p).ok_or_else(|| Error::NotAMember {
            what: p.to_string(),
            of: "the arrow map".into(),
        })
    }

    /// Union of two maps with disjoint domains.
    pub fn merged(&self, other: &Mapping) -> Mapping {
        let mut m = self.clone();
        m.objects
            .extend(other.objects.iter().map(|(a, b)| (a.clone(), b.clone())));
        m.arrows
            .extend(other.arrows.iter().map(|(a, b)| (a.clone(), b.clone())));
        m
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Mapping) -> Result<Mapping> {
        Ok(Mapping {
            objects: self
                .objects
                .iter()
                .map(|(a, b)| Ok((a.clone(), other.obj(b)?.clone())))
                .collect::<Result<_>>()?,
            arrows: self
                .arrows
                .iter()
                .map(|(a, b)| Ok((a.clone(), other.arr(b)?.clone())))
                .collect::<Result<_>>()?,
        })
    }

    pub fn is_bijective(&self) -> bool {
        let objs: std::collections::BTreeSet<&Object> = self.objects.values().collect();
        let arrs: std::collections::BTreeSet<&Identification> = self.arrows.values().collect();
        objs.len() == self.objects.len() && arrs.len() == self.arrows.len()
    }

    /// The inverse of a bijective mapping.
    pub fn inverse(&self) -> Result<Mapping> {
        if !self.is_bijective() {
            return Err(Error::FunctorLaw {
                law: "invertibility".into(),
                witness: "mapping is not injective".into(),
            });
        }
        Ok(Mapping {
            objects: self.objects.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
            arrows: self.arrows.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.objects.iter().all(|(a, b)| a == b) && self.arrows.iter().all(|(a, b)| a == b)
    }
}

/// An equality-preserving map between gamoids.
#[derive(Clone)]
pub struct GamoidMorphism {
    source: Gamoid,
    target: Gamoid,
    map: Arc<Mapping>,
    realization: Option<Strategy>,
}

impl PartialEq for GamoidMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map
            && match (&self.realization, &other.realization) {
                (Some(a), Some(b)) => a == b,
                _ => true,
            }
    }
}

impl fmt::Debug for GamoidMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} -> {} {:?}",
            self.source.name(),
            self.target.name(),
            self.map
        )
    }
}

impl GamoidMorphism {
    /// Builds a morphism and checks the functor laws.
    pub fn new(source: &Gamoid, target: &Gamoid, map: Mapping) -> Result<GamoidMorphism> {
        let f = GamoidMorphism::unchecked(source, target, map);
        let r = check_equality_preserving(&f);
        match r.first_failure() {
            None => Ok(f),
            Some((law, w)) => Err(Error::FunctorLaw {
                law: law.into(),
                witness: w.into(),
            }),
        }
    }

    pub fn unchecked(source: &Gamoid, target: &Gamoid, map: Mapping) -> GamoidMorphism {
        GamoidMorphism {
            source: source.clone(),
            target: target.clone(),
            map: Arc::new(map),
            realization: None,
        }
    }

    pub fn with_realization(mut self, s: Strategy) -> Self {
        self.realization = Some(s);
        self
    }

    pub fn source(&self) -> &Gamoid {
        &self.source
    }

    pub fn target(&self) -> &Gamoid {
        &self.target
    }

    pub fn map(&self) -> &Arc<Mapping> {
        &self.map
    }

    pub fn realization(&self) -> Option<&Strategy> {
        self.realization.as_ref()
    }

    pub fn obj(&self, o: &Object) -> Result<&Object> {
        self.map.obj(o)
    }

    pub fn arr(&self, p: &Identification) -> Result<&Identification> {
        self.map.arr(p)
    }

    pub fn is_invertible(&self) -> bool {
        self.map.is_bijective()
            && self.map.objects.len() == self.target.objects().len()
            && self.map.arrows.len() == self.target.arrow_count()
    }

    pub fn inverse(&self) -> Result<GamoidMorphism> {
        if !self.is_invertible() {
            return Err(Error::FunctorLaw {
                law: "invertibility".into(),
                witness: format!("{self:?} is not bijective"),
            });
        }
        Ok(GamoidMorphism::unchecked(
            &self.target,
            &self.source,
            self.map.inverse()?,
        ))
    }
}

/// `f` followed by `h`: object and arrow maps compose as functions.
pub fn compose_morphisms(f: &GamoidMorphism, h: &GamoidMorphism) -> Result<GamoidMorphism> {
    if f.target != h.source {
        return Err(Error::EndpointMismatch(format!(
            "{} does not match {}",
            f.target.name(),
            h.source.name()
        )));
    }
    let mut out = GamoidMorphism::unchecked(&f.source, &h.target, f.map.then(&h.map)?);
    if let (Some(a), Some(b)) = (&f.realization, &h.realization) {
        if let Ok(c) = compose_strategies(a, b, &SizeGuard::default()) {
            out.realization = Some(c);
        }
    }
    Ok(out)
}

/// The dereliction: every object and arrow is sent to itself. On gamoids
/// over a game the copy-cat strategy realizes it.
pub fn identity_morphism(g: &Gamoid) -> GamoidMorphism {
    let mut f = GamoidMorphism::unchecked(g, g, Mapping::identity_on(g));
    if let Some(game) = g.game() {
        f.realization = copycat(game, &SizeGuard::default()).ok();
    }
    f
}

/// Totality, endpoint coherence, identities and composition.
pub fn check_equality_preserving(f: &GamoidMorphism) -> LawReport {
    let mut r = LawReport::new();
    let (a, b, m) = (&f.source, &f.target, &f.map);
    for law in ["totality", "endpoints", "identities", "composition"] {
        r.touch(law);
    }
    for o in a.objects() {
        let ok = m.objects.get(o).is_some_and(|x| b.has_object(x));
        r.record("totality", ok, || format!("object {o} has no image"));
    }
    for p in a.arrows() {
        let fp = m.arrows.get(p);
        r.record("totality", fp.is_some_and(|x| b.has_arrow(x)), || {
            format!("arrow {p} has no image in {}", b.name())
        });
        if let (Some(fp), Some(fa), Some(fb)) = (fp, m.objects.get(p.source()), m.objects.get(p.target())) {
            r.record("endpoints", fp.source() == fa && fp.target() == fb, || {
                format!("{p} ↦ {fp} has the wrong endpoints")
            });
        }
    }
    for o in a.objects() {
        let (Ok(id), Some(fo)) = (a.id(o), m.objects.get(o)) else {
            continue;
        };
        let ok = matches!((m.arrows.get(&id), b.id(fo)), (Some(x), Ok(y)) if *x == y);
        r.record("identities", ok, || format!("identity on {o} not preserved"));
    }
    for p in a.arrows() {
        for q in a.arrows_from(p.target()) {
            let ok = (|| -> Option<bool> {
                let pq = a.then(p, q).ok()?;
                let lhs = m.arrows.get(&pq)?;
                let rhs = b.then(m.arrows.get(p)?, m.arrows.get(q)?).ok()?;
                Some(*lhs == rhs)
            })()
            .unwrap_or(false);
            r.record("composition", ok, || format!("composite {q} ∘ {p} not preserved"));
        }
    }
    r
}

/// Every equality-preserving morphism `a → b`, up to `limit`.
pub fn enumerate_morphisms(a: &Gamoid, b: &Gamoid, limit: Option<usize>) -> Result<Vec<GamoidMorphism>> {
    let target = PlainTarget(b);
    Ok(FunctorSearch::new(a, &target)
        .all(limit)?
        .into_iter()
        .map(|m| GamoidMorphism::unchecked(a, b, m))
        .collect())
}
