//! Universes as finite leveled registries of coded gamoids.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, Mutex};

use super::{checked, eq_law, ok_law};
use crate::cwf::Term;
use crate::dependent::DependentGamoid;
use crate::error::{Error, Result};
use crate::gamoid::{
    check_groupoid_laws, enumerate_morphisms, Gamoid, Identification, Law, Mapping, Object,
    Provenance, Underlying,
};
use crate::laws::LawReport;

/// Named gamoids, each introduced at a level. A code of level `n` is also a
/// code at every level above `n`.
#[derive(Clone, Debug)]
pub struct Registry {
    name: String,
    entries: BTreeMap<String, (usize, Gamoid)>,
    cache: Arc<Mutex<BTreeMap<usize, Gamoid>>>,
}

impl Registry {
    pub fn new(name: &str) -> Registry {
        Registry {
            name: name.to_string(),
            entries: BTreeMap::new(),
            cache: Arc::default(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn declare(&mut self, level: usize, code: &str, g: &Gamoid) -> Result<()> {
        if self.entries.contains_key(code) {
            return Err(Error::DuplicateIndex(format!("code {code} in {}", self.name)));
        }
        self.entries.insert(code.to_string(), (level, g.clone()));
        self.cache = Arc::default();
        Ok(())
    }

    pub fn max_level(&self) -> usize {
        self.entries.values().map(|e| e.0).max().unwrap_or(0)
    }

    /// Codes available at level `n`, in name order.
    pub fn codes(&self, n: usize) -> impl Iterator<Item = (&str, &Gamoid)> {
        self.entries
            .iter()
            .filter(move |(_, (l, _))| *l <= n)
            .map(|(c, (_, g))| (c.as_str(), g))
    }

    pub fn level_of(&self, code: &str) -> Option<usize> {
        self.entries.get(code).map(|e| e.0)
    }

    pub fn gamoid_of(&self, code: &str) -> Result<&Gamoid> {
        self.entries
            .get(code)
            .map(|e| &e.1)
            .ok_or_else(|| Error::Unregistered(code.to_string()))
    }

    /// The first code at level `≤ n` whose gamoid is strictly equal to `g`.
    pub fn code_for(&self, g: &Gamoid, n: usize) -> Option<&str> {
        self.codes(n).find(|(_, h)| *h == g).map(|(c, _)| c)
    }
}

/// Composition of universe identifications as functors.
pub struct UniverseLaw(BTreeMap<String, Gamoid>);

fn functor(x: &Identification) -> Result<&Arc<Mapping>> {
    x.as_functor()
        .ok_or_else(|| Error::Typing(format!("{x} is not a coded functor")))
}

impl Law for UniverseLaw {
    fn then(&self, x: &Identification, y: &Identification) -> Result<Identification> {
        let m = functor(x)?.then(functor(y)?)?;
        Ok(Identification::new(
            x.source().clone(),
            y.target().clone(),
            Provenance::Functor(Arc::new(m)),
        ))
    }

    fn identity(&self, o: &Object) -> Result<Identification> {
        let c = o
            .as_code()
            .ok_or_else(|| Error::Typing(format!("{o} is not a code")))?;
        let g = self.0.get(c).ok_or_else(|| Error::Unregistered(c.to_string()))?;
        Ok(Identification::new(
            o.clone(),
            o.clone(),
            Provenance::Functor(Arc::new(Mapping::identity_on(g))),
        ))
    }

    fn inverse(&self, x: &Identification) -> Result<Identification> {
        Ok(Identification::new(
            x.target().clone(),
            x.source().clone(),
            Provenance::Functor(Arc::new(functor(x)?.inverse()?)),
        ))
    }
}

/// The invertible equality-preserving maps `a → b`.
pub fn invertible_morphisms(a: &Gamoid, b: &Gamoid) -> Result<Vec<Mapping>> {
    if a.objects().len() != b.objects().len() || a.arrow_count() != b.arrow_count() {
        return Ok(Vec::new());
    }
    Ok(enumerate_morphisms(a, b, None)?
        .into_iter()
        .filter(|f| f.is_invertible())
        .map(|f| f.map().as_ref().clone())
        .collect())
}

/// `U_n`: codes of level `≤ n`, identified by invertible morphisms.
pub fn universe_gamoid(reg: &Registry, n: usize) -> Result<Gamoid> {
    if let Some(g) = reg.cache.lock().expect("universe cache").get(&n) {
        return Ok(g.clone());
    }
    let codes: Vec<(&str, &Gamoid)> = reg.codes(n).collect();
    let mut arrows = Vec::new();
    for (ca, a) in &codes {
        for (cb, b) in &codes {
            for m in invertible_morphisms(a, b)? {
                arrows.push(Identification::new(
                    Object::code(ca),
                    Object::code(cb),
                    Provenance::Functor(Arc::new(m)),
                ));
            }
        }
    }
    let law = UniverseLaw(
        codes
            .iter()
            .map(|(c, g)| (c.to_string(), (*g).clone()))
            .collect(),
    );
    let g = Gamoid::from_parts(
        &format!("U_{n}"),
        Underlying::Derived(format!("codes of {} at level {n}", reg.name())),
        codes.iter().map(|(c, _)| Object::code(c)).collect(),
        arrows,
        Arc::new(law),
    );
    reg.cache.lock().expect("universe cache").insert(n, g.clone());
    Ok(g)
}

/// U-Form: the constant family at `U_n` over `gamma`.
pub fn universe(reg: &Registry, n: usize, gamma: &Gamoid) -> Result<DependentGamoid> {
    Ok(DependentGamoid::constant(
        &format!("U_{n}"),
        gamma,
        &universe_gamoid(reg, n)?,
    ))
}

/// U-Intro: the code of a family whose fibers are registered at level `≤ n`.
pub fn code_of(reg: &Registry, n: usize, g: &DependentGamoid) -> Result<Term> {
    let u = universe(reg, n, g.base())?;
    let mut m = Mapping::default();
    for (o, f) in g.fibers() {
        let c = reg
            .code_for(f, n)
            .ok_or_else(|| Error::Unregistered(format!("fiber {} over {o}", f.name())))?;
        m.objects.insert(o.clone(), Object::code(c));
    }
    for (p, t) in g.transports() {
        m.arrows.insert(
            p.clone(),
            Identification::new(
                m.objects[p.source()].clone(),
                m.objects[p.target()].clone(),
                Provenance::Functor(t.clone()),
            ),
        );
    }
    Term::new(&u, m)
}

/// U-Elim: the family decoded from a term of a universe.
pub fn el(reg: &Registry, c: &Term) -> Result<DependentGamoid> {
    let base = c.ty().base();
    let mut fibers = BTreeMap::new();
    for o in base.objects() {
        let code = c.obj(o)?;
        let name = code
            .as_code()
            .ok_or_else(|| Error::Typing(format!("{code} is not a code")))?;
        fibers.insert(o.clone(), reg.gamoid_of(name)?.clone());
    }
    let mut transport = BTreeMap::new();
    for p in base.arrows() {
        transport.insert(p.clone(), functor(c.arr(p)?)?.clone());
    }
    checked(DependentGamoid::unchecked("El", base, fibers, transport))
}

/// U-Cumul: each `U_n` is a full subgamoid of `U_{n+1}`.
pub fn check_cumulativity(reg: &Registry) -> LawReport {
    let mut r = LawReport::new();
    r.touch("U-Cumul");
    for n in 0..reg.max_level() {
        let ok = (|| -> Result<bool> {
            let (lo, hi) = (universe_gamoid(reg, n)?, universe_gamoid(reg, n + 1)?);
            let sub: BTreeSet<&Object> = lo.objects().iter().collect();
            Ok(sub.iter().all(|o| hi.has_object(o))
                && sub
                    .iter()
                    .all(|a| sub.iter().all(|b| lo.hom(a, b) == hi.hom(a, b))))
        })()
        .unwrap_or(false);
        r.record("U-Cumul", ok, || format!("U_{n} is not a full subgamoid of U_{}", n + 1));
    }
    r
}

pub const UNIVERSE_LAWS: [&str; 4] = ["U-Form", "U-Intro", "U-Comp", "U-Cumul"];

/// Groupoid laws of every level, codes of the given families and decoding.
pub fn check_universe(reg: &Registry, families: &[DependentGamoid]) -> LawReport {
    let mut r = LawReport::new();
    for law in UNIVERSE_LAWS {
        r.touch(law);
    }
    for n in 0..=reg.max_level() {
        let ctx = format!("U_{n}");
        if let Some(u) = ok_law(&mut r, "U-Form", universe_gamoid(reg, n), &ctx) {
            let laws = check_groupoid_laws(&u);
            r.record("U-Form", laws.passed(), || {
                let (l, w) = laws.first_failure().unwrap_or_default();
                format!("{ctx}: {l}: {w}")
            });
        }
    }
    let top = reg.max_level();
    for (k, g) in families.iter().enumerate() {
        let ctx = format!("family {k} ({})", g.name());
        if let Some(c) = ok_law(&mut r, "U-Intro", code_of(reg, top, g), &ctx) {
            eq_law(&mut r, "U-Comp", el(reg, &c), Ok(g.clone()), &ctx);
        }
    }
    r.merge(check_cumulativity(reg));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cwf::terminal;
    use crate::games::{enumerate_strategies, fixture, SizeGuard, Strategy};
    use crate::gamoid::canonical;

    fn st(n: &str) -> Strategy {
        fixture(n).unwrap().strategy().unwrap()
    }

    fn registry() -> Registry {
        let guard = SizeGuard::default();
        let b = fixture("BOOL").unwrap().game().unwrap();
        let n2 = fixture("N2").unwrap().game().unwrap();
        let boolg = canonical("BOOLG", &b, &enumerate_strategies(&b, &guard).unwrap(), &guard).unwrap();
        let n2c = canonical("N2C", &n2, &[st("zero"), st("one")], &guard).unwrap();
        let bpt = canonical("BPT", &b, &[st("bullet")], &guard).unwrap();
        let mut reg = Registry::new("R");
        reg.declare(0, "BOOLG", &boolg).unwrap();
        reg.declare(0, "N2C", &n2c).unwrap();
        reg.declare(0, "1", &terminal()).unwrap();
        reg.declare(1, "BPT", &bpt).unwrap();
        reg
    }

    #[test]
    fn boolean_automorphisms() {
        let u = universe_gamoid(&registry(), 0).unwrap();
        let c = Object::code("BOOLG");
        assert_eq!(u.hom(&c, &c).len(), 2);
        assert!(u.hom(&c, &Object::code("1")).is_empty());
        assert!(check_groupoid_laws(&u).passed());
    }

    #[test]
    fn codes_decode_and_levels_nest() {
        let reg = registry();
        let n2c = reg.gamoid_of("N2C").unwrap().clone();
        let bpt = reg.gamoid_of("BPT").unwrap().clone();
        let g = DependentGamoid::constant("BPT", &n2c, &bpt);
        let r = check_universe(&reg, std::slice::from_ref(&g));
        assert!(r.passed(), "{r}");
        assert!(matches!(code_of(&reg, 0, &g), Err(Error::Unregistered(_))));
        let mut dup = reg.clone();
        assert!(dup.declare(0, "BPT", &bpt).is_err());
    }
}
