//! Finite games, plays and the arena constructions used by every gamoid.
//!
//! A [`Game`] is a finite arena together with an explicit, prefix-closed set of
//! legal plays. Plays carry justifier indices so that pointers survive the
//! implication and pairing constructions.

mod fixtures;
mod iso;
mod strategy;

pub use fixtures::{fixture, fixture_names, Fixture, FixtureSet};
pub use iso::{all_isos, StrategyIso};
pub use strategy::{
    compose_strategies, copycat, enumerate_strategies, hide_left, iso_as_strategy, lift_constant,
    pair_strategies, project_component, Strategy,
};

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Move identifier. Tagged moves use a `tag.` prefix.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MoveId(Arc<str>);

impl MoveId {
    pub fn new(s: &str) -> Self {
        MoveId(Arc::from(s))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn tagged(&self, tag: &str) -> MoveId {
        MoveId(Arc::from(format!("{tag}.{}", self.0).as_str()))
    }

    /// Strips `tag.` if present.
    pub fn untag(&self, tag: &str) -> Option<MoveId> {
        self.0
            .strip_prefix(tag)
            .and_then(|rest| rest.strip_prefix('.'))
            .map(MoveId::new)
    }
}

impl fmt::Debug for MoveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for MoveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for MoveId {
    fn from(s: &str) -> Self {
        MoveId::new(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarity {
    Opponent,
    Proponent,
}

impl Polarity {
    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Opponent => Polarity::Proponent,
            Polarity::Proponent => Polarity::Opponent,
        }
    }

    /// Polarity expected at a 0-based position in an alternating play.
    pub fn at(index: usize) -> Polarity {
        if index.is_multiple_of(2) {
            Polarity::Opponent
        } else {
            Polarity::Proponent
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Question,
    Answer,
}

/// A move of an arena. `enablers` is empty exactly for initial moves.
///
/// Arenas built by implication may enable one move from several initial
/// moves, so the enabler is a set rather than a single token.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Move {
    pub id: MoveId,
    pub polarity: Polarity,
    pub kind: Kind,
    pub enablers: BTreeSet<MoveId>,
}

impl Move {
    pub fn new(id: &str, polarity: Polarity, kind: Kind, enabler: Option<&str>) -> Move {
        Move {
            id: MoveId::new(id),
            polarity,
            kind,
            enablers: enabler.map(MoveId::new).into_iter().collect(),
        }
    }

    pub fn is_initial(&self) -> bool {
        self.enablers.is_empty()
    }

    /// Polarity, kind and whether the move is initial.
    pub fn label(&self) -> (Polarity, Kind, bool) {
        (self.polarity, self.kind, self.is_initial())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Occurrence {
    pub id: MoveId,
    pub justifier: Option<usize>,
}

impl Occurrence {
    pub fn new(id: &str, justifier: Option<usize>) -> Self {
        Occurrence {
            id: MoveId::new(id),
            justifier,
        }
    }
}

/// A justified sequence of move occurrences.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Play(pub Vec<Occurrence>);

impl Play {
    pub fn empty() -> Play {
        Play(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn prefix(&self, n: usize) -> Play {
        Play(self.0[..n].to_vec())
    }

    pub fn pushed(&self, occ: Occurrence) -> Play {
        let mut v = self.0.clone();
        v.push(occ);
        Play(v)
    }

    pub fn last(&self) -> Option<&Occurrence> {
        self.0.last()
    }

    pub fn moves(&self) -> impl Iterator<Item = &MoveId> {
        self.0.iter().map(|o| &o.id)
    }

    pub fn tagged(&self, tag: &str) -> Play {
        Play(
            self.0
                .iter()
                .map(|o| Occurrence {
                    id: o.id.tagged(tag),
                    justifier: o.justifier,
                })
                .collect(),
        )
    }

    /// Keeps occurrences tagged `tag`, strips the tag and re-indexes pointers.
    /// Pointers leaving the kept part become absent.
    pub fn restrict(&self, tag: &str) -> Play {
        let mut index = vec![None; self.len()];
        let mut out = Vec::new();
        for (i, o) in self.0.iter().enumerate() {
            if let Some(id) = o.id.untag(tag) {
                index[i] = Some(out.len());
                out.push(Occurrence {
                    id,
                    justifier: o.justifier.and_then(|j| index[j]),
                });
            }
        }
        Play(out)
    }

    /// Dotted rendering such as `q_tt.tt`. Pointers are shown as `@k` only
    /// when they differ from the default (most recent enabling occurrence).
    pub fn render(&self, game: &Game) -> String {
        if self.is_empty() {
            return "e".to_string();
        }
        let mut parts = Vec::new();
        for (i, o) in self.0.iter().enumerate() {
            let default = game.default_justifier(&self.0[..i], &o.id);
            if o.justifier == default {
                parts.push(o.id.to_string());
            } else {
                match o.justifier {
                    Some(j) => parts.push(format!("{}@{j}", o.id)),
                    None => parts.push(format!("{}@-", o.id)),
                }
            }
        }
        parts.join(" . ")
    }
}

impl fmt::Debug for Play {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|o| match o.justifier {
                Some(j) => format!("{}@{j}", o.id),
                None => o.id.to_string(),
            })
            .collect();
        f.write_str(&parts.join("."))
    }
}

/// How a game was built; composition needs the components of implications.
#[derive(Clone, Debug)]
pub enum Shape {
    Atomic,
    Implication(Game, Game),
    With(Vec<(String, Game)>),
}

#[derive(Debug)]
struct GameInner {
    name: String,
    moves: BTreeMap<MoveId, Move>,
    plays: BTreeSet<Play>,
    shape: Shape,
}

/// A finite game. Cheap to clone. Equality ignores the name and the shape.
#[derive(Clone)]
pub struct Game(Arc<GameInner>);

impl PartialEq for Game {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.moves == other.0.moves && self.0.plays == other.0.plays)
    }
}

impl Eq for Game {}

impl fmt::Debug for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Game({}, {} moves, {} plays)",
            self.0.name,
            self.0.moves.len(),
            self.0.plays.len()
        )
    }
}

impl Game {
    /// Builds a game from raw data without validation.
    pub fn from_parts(name: &str, moves: Vec<Move>, plays: BTreeSet<Play>) -> Game {
        Self::with_shape(name, moves, plays, Shape::Atomic)
    }

    fn with_shape(name: &str, moves: Vec<Move>, plays: BTreeSet<Play>, shape: Shape) -> Game {
        Game(Arc::new(GameInner {
            name: name.to_string(),
            moves: moves.into_iter().map(|m| (m.id.clone(), m)).collect(),
            plays,
            shape,
        }))
    }

    /// Builds a game from maximal plays, closing under prefixes, and validates it.
    pub fn new(name: &str, moves: Vec<Move>, maximal: Vec<Play>) -> Result<Game> {
        let mut plays = BTreeSet::new();
        for p in maximal {
            for n in 0..=p.len() {
                plays.insert(p.prefix(n));
            }
        }
        plays.insert(Play::empty());
        let g = Game::from_parts(name, moves, plays);
        let report = validate_game(&g);
        if report.is_valid() {
            Ok(g)
        } else {
            Err(Error::InvalidGame {
                game: name.to_string(),
                detail: report.violations.join("; "),
            })
        }
    }

    /// The game with no moves and only the empty play.
    pub fn empty(name: &str) -> Game {
        Game::from_parts(name, Vec::new(), [Play::empty()].into_iter().collect())
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn moves(&self) -> &BTreeMap<MoveId, Move> {
        &self.0.moves
    }

    pub fn get_move(&self, id: &MoveId) -> Option<&Move> {
        self.0.moves.get(id)
    }

    pub fn plays(&self) -> &BTreeSet<Play> {
        &self.0.plays
    }

    pub fn is_play(&self, p: &Play) -> bool {
        self.0.plays.contains(p)
    }

    pub fn shape(&self) -> &Shape {
        &self.0.shape
    }

    pub fn renamed(&self, name: &str) -> Game {
        Game(Arc::new(GameInner {
            name: name.to_string(),
            moves: self.0.moves.clone(),
            plays: self.0.plays.clone(),
            shape: self.0.shape.clone(),
        }))
    }

    pub fn max_play_len(&self) -> usize {
        self.0.plays.iter().map(Play::len).max().unwrap_or(0)
    }

    /// Plays extending `p` by exactly one occurrence.
    pub fn extensions<'a>(&'a self, p: &'a Play) -> impl Iterator<Item = &'a Play> + 'a {
        use std::ops::Bound::{Excluded, Unbounded};
        self.0
            .plays
            .range((Excluded(p.clone()), Unbounded))
            .take_while(move |q| q.0.starts_with(&p.0))
            .filter(move |q| q.len() == p.len() + 1)
    }

    /// The most recent earlier occurrence enabling `id`, if any.
    pub fn default_justifier(&self, prefix: &[Occurrence], id: &MoveId) -> Option<usize> {
        let m = self.0.moves.get(id)?;
        if m.is_initial() {
            return None;
        }
        prefix.iter().rposition(|o| m.enablers.contains(&o.id))
    }
}

/// Bounds for exhaustive operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeGuard {
    pub max_moves: usize,
    pub max_play_len: usize,
    pub max_candidates: u128,
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard {
            max_moves: 8,
            max_play_len: 8,
            max_candidates: 100_000,
        }
    }
}

impl SizeGuard {
    pub fn check(&self, what: &str, estimate: u128) -> Result<()> {
        if estimate > self.max_candidates {
            Err(Error::SizeGuard {
                what: what.to_string(),
                estimate,
                bound: self.max_candidates,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_game(&self, g: &Game) -> Result<()> {
        if g.moves().len() > self.max_moves || g.max_play_len() > self.max_play_len {
            return Err(Error::SizeGuard {
                what: format!(
                    "game `{}` ({} moves, plays up to length {})",
                    g.name(),
                    g.moves().len(),
                    g.max_play_len()
                ),
                estimate: g.moves().len() as u128,
                bound: self.max_moves as u128,
            });
        }
        Ok(())
    }
}

/// Violations of the game and play invariants; empty iff the game is valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_game(g: &Game) -> ValidationReport {
    let mut v = Vec::new();
    for m in g.moves().values() {
        if m.is_initial() && (m.polarity != Polarity::Opponent || m.kind != Kind::Question) {
            v.push(format!("initial move {} is not an Opponent question", m.id));
        }
        for e in &m.enablers {
            if !g.moves().contains_key(e) {
                v.push(format!("enabler {e} of {} is not a move", m.id));
            }
        }
    }
    if !g.plays().contains(&Play::empty()) {
        v.push("empty play missing".to_string());
    }
    for p in g.plays() {
        if !p.is_empty() && !g.plays().contains(&p.prefix(p.len() - 1)) {
            v.push(format!("plays not prefix-closed at {p:?}"));
        }
        v.extend(play_violations(g, p));
    }
    ValidationReport { violations: v }
}

fn play_violations(g: &Game, p: &Play) -> Vec<String> {
    let mut v = Vec::new();
    for (i, o) in p.0.iter().enumerate() {
        let Some(m) = g.get_move(&o.id) else {
            v.push(format!("unknown move {} in {p:?}", o.id));
            continue;
        };
        if m.polarity != Polarity::at(i) {
            v.push(format!("alternation violated at {} in {p:?}", o.id));
        }
        match o.justifier {
            None if !m.is_initial() => {
                v.push(format!("non-initial {} lacks a justifier in {p:?}", o.id))
            }
            Some(_) if m.is_initial() => {
                v.push(format!("initial {} has a justifier in {p:?}", o.id))
            }
            Some(j) if j >= i => v.push(format!("justifier of {} points forward in {p:?}", o.id)),
            Some(j) if !m.enablers.contains(&p.0[j].id) => {
                v.push(format!("{} is not enabled by {} in {p:?}", o.id, p.0[j].id))
            }
            _ => {}
        }
    }
    v
}

/// Linear implication A⊸B. Moves are tagged `l.` and `r.`; polarity on the
/// left flips and left-initial moves become enabled by right-initial moves.
pub fn implication(a: &Game, b: &Game, guard: &SizeGuard) -> Result<Game> {
    let mut moves = Vec::new();
    let b_initial: BTreeSet<MoveId> = b
        .moves()
        .values()
        .filter(|m| m.is_initial())
        .map(|m| m.id.tagged("r"))
        .collect();
    for m in a.moves().values() {
        let enablers = if m.is_initial() {
            b_initial.clone()
        } else {
            m.enablers.iter().map(|e| e.tagged("l")).collect()
        };
        moves.push(Move {
            id: m.id.tagged("l"),
            polarity: m.polarity.flip(),
            kind: m.kind,
            enablers,
        });
    }
    for m in b.moves().values() {
        moves.push(Move {
            id: m.id.tagged("r"),
            polarity: m.polarity,
            kind: m.kind,
            enablers: m.enablers.iter().map(|e| e.tagged("r")).collect(),
        });
    }
    if moves.len() > guard.max_moves * 2 {
        return Err(Error::SizeGuard {
            what: format!("implication {}⊸{}", a.name(), b.name()),
            estimate: moves.len() as u128,
            bound: (guard.max_moves * 2) as u128,
        });
    }
    let name = format!("{}⊸{}", a.name(), b.name());
    let mut plays = BTreeSet::new();
    let mut queue = VecDeque::from([Play::empty()]);
    while let Some(p) = queue.pop_front() {
        for m in &moves {
            if m.polarity != Polarity::at(p.len()) {
                continue;
            }
            let justifiers: Vec<Option<usize>> = if m.is_initial() {
                vec![None]
            } else {
                p.0.iter()
                    .enumerate()
                    .filter(|(_, o)| m.enablers.contains(&o.id))
                    .map(|(j, _)| Some(j))
                    .collect()
            };
            for j in justifiers {
                let q = p.pushed(Occurrence {
                    id: m.id.clone(),
                    justifier: j,
                });
                if a.is_play(&q.restrict("l")) && b.is_play(&q.restrict("r")) {
                    queue.push_back(q);
                }
            }
        }
        plays.insert(p);
        guard.check(&format!("plays of {name}"), plays.len() as u128)?;
    }
    Ok(Game::with_shape(
        &name,
        moves,
        plays,
        Shape::Implication(a.clone(), b.clone()),
    ))
}

/// Tagged disjoint union of games; each play stays inside one component.
pub fn with_game(components: &[(String, Game)]) -> Result<Game> {
    let mut seen = BTreeSet::new();
    let mut moves = Vec::new();
    let mut plays = BTreeSet::from([Play::empty()]);
    for (tag, g) in components {
        if !seen.insert(tag.clone()) {
            return Err(Error::DuplicateIndex(tag.clone()));
        }
        for m in g.moves().values() {
            moves.push(Move {
                id: m.id.tagged(tag),
                polarity: m.polarity,
                kind: m.kind,
                enablers: m.enablers.iter().map(|e| e.tagged(tag)).collect(),
            });
        }
        plays.extend(g.plays().iter().map(|p| p.tagged(tag)));
    }
    let name = components
        .iter()
        .map(|(t, g)| format!("{t}:{}", g.name()))
        .collect::<Vec<_>>()
        .join(" & ");
    Ok(Game::with_shape(
        &format!("&{{{name}}}"),
        moves,
        plays,
        Shape::With(components.to_vec()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bool_game() -> Game {
        fixture("BOOL").unwrap().game().unwrap()
    }

    #[test]
    fn bool_and_empty_games_validate() {
        assert!(validate_game(&bool_game()).is_valid());
        assert!(validate_game(&Game::empty("I")).is_valid());
        assert_eq!(bool_game().plays().len(), 5);
    }

    #[test]
    fn wrong_polarity_breaks_alternation() {
        let g = bool_game();
        let moves = g
            .moves()
            .values()
            .map(|m| {
                let mut m = m.clone();
                if m.id.as_str() == "tt" {
                    m.polarity = Polarity::Opponent;
                }
                m
            })
            .collect();
        let bad = Game::from_parts("BOOL", moves, g.plays().clone());
        let r = validate_game(&bad);
        assert!(r.violations.iter().any(|v| v.contains("alternation")));
    }

    #[test]
    fn missing_prefix_reported() {
        let g = bool_game();
        let mut plays = g.plays().clone();
        plays.retain(|p| p.len() != 1);
        let bad = Game::from_parts("x", g.moves().values().cloned().collect(), plays);
        assert!(validate_game(&bad)
            .violations
            .iter()
            .any(|v| v.contains("prefix")));
    }

    #[test]
    fn restrict_reindexes_pointers() {
        let p = Play(vec![
            Occurrence::new("r.q", None),
            Occurrence::new("l.q", Some(0)),
            Occurrence::new("l.a", Some(1)),
            Occurrence::new("r.a", Some(0)),
        ]);
        assert_eq!(
            p.restrict("l"),
            Play(vec![Occurrence::new("q", None), Occurrence::new("a", Some(0))])
        );
        assert_eq!(
            p.restrict("r"),
            Play(vec![Occurrence::new("q", None), Occurrence::new("a", Some(0))])
        );
    }

    #[test]
    fn implication_of_bool_is_valid_and_projects() {
        let g = bool_game();
        let imp = implication(&g, &g, &SizeGuard::default()).unwrap();
        assert!(validate_game(&imp).is_valid(), "{:?}", validate_game(&imp));
        for p in imp.plays() {
            assert!(g.is_play(&p.restrict("l")));
            assert!(g.is_play(&p.restrict("r")));
        }
        // q_tt on the right can be followed by either left question.
        let start = Play(vec![Occurrence::new("r.q_tt", None)]);
        assert_eq!(imp.extensions(&start).count(), 3);
    }

    #[test]
    fn with_game_rejects_duplicates() {
        let g = bool_game();
        let r = with_game(&[("a".into(), g.clone()), ("a".into(), g)]);
        assert_eq!(r.unwrap_err(), Error::DuplicateIndex("a".into()));
    }
}
