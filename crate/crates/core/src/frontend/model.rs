//! Resolving a parsed model file into games, strategies, gamoids, families,
//! morphisms and registries.
//!
//! Names share one namespace and must be declared before use. Registry
//! declarations are the exception: several declarations with one name add
//! codes to the same registry at their levels.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::syntax::{self, Decl, Homs, ModelFile, PlayDecl, Pointer};
use crate::cwf::terminal;
use crate::dependent::{mk_dependent_gamoid, DependentGamoid};
use crate::error::{Error, Result};
use crate::formers::Registry;
use crate::games::{Game, Kind, Move, MoveId, Occurrence, Play, Polarity, SizeGuard, Strategy, StrategyIso};
use crate::gamoid::{
    canonical, discrete, explicit, Gamoid, GamoidMorphism, Identification, Mapping, Object,
};

/// The resolved contents of a model file, in declaration order.
#[derive(Clone, Debug, Default)]
pub struct Model {
    pub games: Vec<(String, Game)>,
    pub strategies: Vec<(String, Strategy)>,
    pub isos: Vec<(String, StrategyIso)>,
    pub gamoids: Vec<(String, Gamoid)>,
    pub families: Vec<(String, DependentGamoid)>,
    pub morphisms: Vec<(String, GamoidMorphism)>,
    pub registries: Vec<Registry>,
    pub suites: Vec<(String, Vec<String>)>,
}

fn lookup<'a, T>(xs: &'a [(String, T)], name: &str) -> Option<&'a T> {
    xs.iter().find(|(n, _)| n == name).map(|(_, x)| x)
}

fn unknown(decl: &Decl, kind: &str, reference: &str) -> Error {
    Error::Resolution {
        decl: format!("{} `{}`", decl.keyword(), decl.name()),
        kind: kind.to_string(),
        reference: reference.to_string(),
    }
}

impl Model {
    pub fn game(&self, name: &str) -> Option<&Game> {
        lookup(&self.games, name)
    }

    pub fn strategy(&self, name: &str) -> Option<&Strategy> {
        lookup(&self.strategies, name)
    }

    pub fn iso(&self, name: &str) -> Option<&StrategyIso> {
        lookup(&self.isos, name)
    }

    /// A declared gamoid, or the terminal gamoid under `terminal` or `1`.
    pub fn gamoid(&self, name: &str) -> Option<Gamoid> {
        lookup(&self.gamoids, name)
            .cloned()
            .or_else(|| matches!(name, "terminal" | "1").then(terminal))
    }

    pub fn family(&self, name: &str) -> Option<&DependentGamoid> {
        lookup(&self.families, name)
    }

    pub fn morphism(&self, name: &str) -> Option<&GamoidMorphism> {
        lookup(&self.morphisms, name)
    }

    pub fn registry(&self, name: &str) -> Option<&Registry> {
        self.registries.iter().find(|r| r.name() == name)
    }

    pub fn suite(&self, name: &str) -> Option<&Vec<String>> {
        lookup(&self.suites, name)
    }

    fn declared(&self, name: &str) -> bool {
        self.game(name).is_some()
            || self.strategy(name).is_some()
            || self.iso(name).is_some()
            || lookup(&self.gamoids, name).is_some()
            || self.family(name).is_some()
            || self.morphism(name).is_some()
            || self.suite(name).is_some()
            || self.registry(name).is_some()
    }

    /// An object of `g` named by a declared strategy or by its display name.
    fn object_of(&self, decl: &Decl, g: &Gamoid, name: &str) -> Result<Object> {
        if let Some(s) = self.strategy(name) {
            let o = Object::Strategy(s.clone());
            if g.has_object(&o) {
                return Ok(o);
            }
        }
        g.objects()
            .iter()
            .find(|o| o.to_string() == name)
            .cloned()
            .ok_or_else(|| unknown(decl, &format!("object of {}", g.name()), name))
    }

    /// An arrow of `g` named by a declared iso or by its label.
    fn arrow_of(&self, decl: &Decl, g: &Gamoid, name: &str) -> Result<Identification> {
        if let Some(f) = self.iso(name) {
            let p = Identification::base(f.clone());
            if let Some(q) = g.arrows().find(|q| **q == p) {
                return Ok(q.clone());
            }
        }
        g.arrows()
            .find(|p| p.label() == name)
            .cloned()
            .ok_or_else(|| unknown(decl, &format!("arrow of {}", g.name()), name))
    }

    fn need_gamoid(&self, decl: &Decl, name: &str) -> Result<Gamoid> {
        self.gamoid(name).ok_or_else(|| unknown(decl, "gamoid", name))
    }
}

fn plays(decl: &Decl, game: &Game, ps: &[PlayDecl]) -> Result<Vec<Play>> {
    let mut out = Vec::new();
    for p in ps {
        let mut occs: Vec<Occurrence> = Vec::new();
        for o in p {
            let id = MoveId::new(&o.id);
            if game.get_move(&id).is_none() {
                return Err(unknown(decl, &format!("move of {}", game.name()), &o.id));
            }
            let justifier = match o.pointer {
                Pointer::Default => game.default_justifier(&occs, &id),
                Pointer::At(k) => Some(k),
                Pointer::Initial => None,
            };
            occs.push(Occurrence { id, justifier });
        }
        out.push(Play(occs));
    }
    Ok(out)
}

/// Fills in arrow values not given explicitly: identities, inverses of given
/// arrows and composites, until nothing changes.
fn complete<T: Clone>(
    base: &Gamoid,
    mut given: BTreeMap<Identification, T>,
    identity: impl Fn(&Object) -> Result<T>,
    inverse: impl Fn(&T) -> Result<T>,
    then: impl Fn(&T, &T) -> Result<T>,
) -> Result<BTreeMap<Identification, T>> {
    for o in base.objects() {
        let i = base.id(o)?;
        if let std::collections::btree_map::Entry::Vacant(e) = given.entry(i) {
            e.insert(identity(o)?);
        }
    }
    loop {
        let mut grew = false;
        for p in base.arrows() {
            if given.contains_key(p) {
                continue;
            }
            let inv = base.inv(p)?;
            if let Some(t) = given.get(&inv) {
                let t = inverse(t)?;
                given.insert(p.clone(), t);
                grew = true;
                continue;
            }
            let found = base.arrows_from(p.source()).iter().find_map(|q| {
                let r = base.arrows().find(|r| {
                    r.source() == q.target()
                        && base.then(q, r).ok().as_ref() == Some(p)
                        && given.contains_key(q)
                        && given.contains_key(*r)
                })?;
                Some((q.clone(), r.clone()))
            });
            if let Some((q, r)) = found {
                let t = then(&given[&q], &given[&r])?;
                given.insert(p.clone(), t);
                grew = true;
            }
        }
        if !grew {
            return Ok(given);
        }
    }
}

fn missing(base: &Gamoid, given: &BTreeMap<Identification, impl Sized>, what: &str) -> Result<()> {
    match base.arrows().find(|p| !given.contains_key(*p)) {
        Some(p) => Err(Error::Typing(format!("no {what} for arrow {p} of {}", base.name()))),
        None => Ok(()),
    }
}

fn build_decl(m: &mut Model, d: &Decl, guard: &SizeGuard) -> Result<()> {
    let fresh = |m: &Model, name: &str| {
        if m.declared(name) && !matches!(d, Decl::Registry { .. }) {
            Err(Error::DuplicateIndex(name.to_string()))
        } else {
            Ok(())
        }
    };
    fresh(m, d.name())?;
    match d {
        Decl::Game { name, moves, plays: ps } => {
            let mv: Vec<Move> = moves
                .iter()
                .map(|x| Move {
                    id: MoveId::new(&x.id),
                    polarity: match x.polarity {
                        syntax::Polarity::O => Polarity::Opponent,
                        syntax::Polarity::P => Polarity::Proponent,
                    },
                    kind: match x.kind {
                        syntax::Kind::Q => Kind::Question,
                        syntax::Kind::A => Kind::Answer,
                    },
                    enablers: x.enablers.iter().map(|e| MoveId::new(e)).collect(),
                })
                .collect();
            let draft = Game::from_parts(name, mv.clone(), Default::default());
            let maximal = plays(d, &draft, ps)?;
            let g = Game::new(name, mv, maximal)?;
            guard.check_game(&g)?;
            m.games.push((name.clone(), g));
        }
        Decl::Strategy { name, game, plays: ps } => {
            let g = m.game(game).ok_or_else(|| unknown(d, "game", game))?.clone();
            let s = Strategy::from_maximal(name, &g, plays(d, &g, ps)?)?;
            m.strategies.push((name.clone(), s));
        }
        Decl::Iso {
            name,
            source,
            target,
            map,
        } => {
            let s = m.strategy(source).ok_or_else(|| unknown(d, "strategy", source))?;
            let t = m.strategy(target).ok_or_else(|| unknown(d, "strategy", target))?;
            let mm = map
                .iter()
                .map(|(a, b)| (MoveId::new(a), MoveId::new(b)))
                .collect();
            let f = StrategyIso::new(name, s, t, mm)?;
            m.isos.push((name.clone(), f));
        }
        Decl::Gamoid {
            name,
            game,
            objects,
            homs,
        } => {
            let g = m.game(game).ok_or_else(|| unknown(d, "game", game))?;
            let objs = objects
                .iter()
                .map(|o| m.strategy(o).cloned().ok_or_else(|| unknown(d, "strategy", o)))
                .collect::<Result<Vec<_>>>()?;
            let h = match homs {
                Homs::Canonical => canonical(name, g, &objs, guard)?,
                Homs::Discrete => discrete(name, g, &objs)?,
                Homs::Explicit(isos) => {
                    let fs = isos
                        .iter()
                        .map(|f| m.iso(f).cloned().ok_or_else(|| unknown(d, "iso", f)))
                        .collect::<Result<Vec<_>>>()?;
                    explicit(name, g, &objs, &fs)?
                }
            };
            m.gamoids.push((name.clone(), h));
        }
        Decl::Family {
            name,
            base,
            fibers,
            transports,
        } => {
            let b = m.need_gamoid(d, base)?;
            let mut fib = BTreeMap::new();
            for (o, g) in fibers {
                fib.insert(m.object_of(d, &b, o)?, m.need_gamoid(d, g)?);
            }
            if let Some(o) = b.objects().iter().find(|o| !fib.contains_key(*o)) {
                return Err(Error::Typing(format!("family {name}: no fiber over {o}")));
            }
            let mut given = BTreeMap::new();
            for (p, f) in transports {
                let f = m.morphism(f).ok_or_else(|| unknown(d, "morphism", f))?;
                given.insert(m.arrow_of(d, &b, p)?, f.map().as_ref().clone());
            }
            let all = complete(
                &b,
                given,
                |o| Ok(Mapping::identity_on(&fib[o])),
                |t| t.inverse(),
                |s, t| s.then(t),
            )?;
            missing(&b, &all, "transport")?;
            let tr = all.into_iter().map(|(p, t)| (p, Arc::new(t))).collect();
            m.families
                .push((name.clone(), mk_dependent_gamoid(name, &b, fib, tr)?));
        }
        Decl::Morphism {
            name,
            source,
            target,
            objects,
            arrows,
        } => {
            let (s, t) = (m.need_gamoid(d, source)?, m.need_gamoid(d, target)?);
            let mut map = Mapping::default();
            for (a, b) in objects {
                map.objects
                    .insert(m.object_of(d, &s, a)?, m.object_of(d, &t, b)?);
            }
            if let Some(o) = s.objects().iter().find(|o| !map.objects.contains_key(*o)) {
                return Err(Error::Typing(format!("morphism {name}: object {o} is not mapped")));
            }
            let mut given = BTreeMap::new();
            for (p, q) in arrows {
                given.insert(m.arrow_of(d, &s, p)?, m.arrow_of(d, &t, q)?);
            }
            let all = complete(
                &s,
                given,
                |o| t.id(map.obj(o)?),
                |q| t.inv(q),
                |q, r| t.then(q, r),
            )?;
            missing(&s, &all, "image")?;
            map.arrows = all;
            m.morphisms
                .push((name.clone(), GamoidMorphism::new(&s, &t, map)?));
        }
        Decl::Registry { name, level, codes } => {
            let i = match m.registries.iter().position(|r| r.name() == name) {
                Some(i) => i,
                None => {
                    m.registries.push(Registry::new(name));
                    m.registries.len() - 1
                }
            };
            for c in codes {
                let g = m.need_gamoid(d, c)?;
                m.registries[i].declare(*level, c, &g)?;
            }
        }
        Decl::Suite { name, run } => {
            for s in run {
                if !super::SUITES.contains(&s.as_str()) {
                    return Err(Error::UnknownSuite(s.clone()));
                }
            }
            m.suites.push((name.clone(), run.clone()));
        }
    }
    Ok(())
}

/// Resolves every declaration in order.
pub fn build(file: &ModelFile, guard: &SizeGuard) -> Result<Model> {
    let mut m = Model::default();
    for d in &file.decls {
        build_decl(&mut m, d, guard)?;
    }
    Ok(m)
}

/// Parses and resolves model source text.
pub fn load(src: &str, guard: &SizeGuard) -> Result<Model> {
    let file = syntax::parse(src).map_err(Error::Parse)?;
    build(&file, guard)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SRC: &str = "
        game N2 { moves q: O Q, 0: P A <- q, 1: P A <- q; plays q . 0, q . 1; }
        strategy zero on N2 { plays q . 0; }
        strategy one on N2 { plays q . 1; }
        iso swap : zero ~ one { map q -> q, 0 -> 1; }
        gamoid N2C { game N2; objects zero, one; homs canonical; }
        gamoid D { game N2; objects zero, one; homs discrete; }
        morphism flip : N2C -> N2C { objects zero -> one, one -> zero; arrows swap -> \"one~zero#0\"; }
        family F over N2C { fiber zero = N2C; fiber one = N2C; transport swap = flip; }
        registry U level 0 { codes N2C, terminal; }
        registry U level 1 { codes D; }
    ";

    #[test]
    fn resolves_with_completed_transports() {
        let m = load(SRC, &SizeGuard::default()).unwrap();
        let f = m.family("F").unwrap();
        assert_eq!(f.transports().len(), 4);
        let flip = m.morphism("flip").unwrap();
        assert!(flip.is_invertible());
        let u = m.registry("U").unwrap();
        assert_eq!(u.level_of("D"), Some(1));
        assert_eq!(u.level_of("terminal"), Some(0));
    }

    #[test]
    fn forward_references_are_rejected() {
        let src = "strategy s on G { plays; }\ngame G { moves; plays; }";
        match load(src, &SizeGuard::default()) {
            Err(Error::Resolution { kind, reference, .. }) => {
                assert_eq!(kind, "game");
                assert_eq!(reference, "G");
            }
            other => panic!("{other:?}"),
        }
        let dup = "game G { moves; plays; }\ngame G { moves; plays; }";
        assert!(matches!(load(dup, &SizeGuard::default()), Err(Error::DuplicateIndex(_))));
    }

    #[test]
    fn guard_rejects_large_games() {
        let guard = SizeGuard {
            max_moves: 2,
            ..SizeGuard::default()
        };
        assert!(matches!(load(SRC, &guard), Err(Error::SizeGuard { .. })));
    }
}
