use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use super::{implication, with_game, Game, MoveId, Occurrence, Play, Shape, SizeGuard};
use super::iso::StrategyIso;
use crate::error::{Error, Result};

struct StrategyInner {
    name: String,
    game: Game,
    positions: BTreeSet<Play>,
}

/// A deterministic, even-prefix-closed set of positions on a game.
///
/// Equality and ordering compare positions only, so renamed copies are
/// strictly equal.
#[derive(Clone)]
pub struct Strategy(Arc<StrategyInner>);

impl PartialEq for Strategy {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.positions == other.0.positions
    }
}

impl Eq for Strategy {}

impl PartialOrd for Strategy {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Strategy {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return std::cmp::Ordering::Equal;
        }
        self.0.positions.cmp(&other.0.positions)
    }
}

impl std::hash::Hash for Strategy {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.positions.hash(state)
    }
}

impl fmt::Debug for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.name)
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.name)
    }
}

impl Strategy {
    /// Validates and builds a strategy from its full position set.
    pub fn new(name: &str, game: &Game, positions: BTreeSet<Play>) -> Result<Strategy> {
        let s = Strategy::unchecked(name, game, positions);
        let problems = s.violations();
        if problems.is_empty() {
            Ok(s)
        } else {
            Err(Error::InvalidStrategy {
                strategy: name.to_string(),
                detail: problems.join("; "),
            })
        }
    }

    /// Builds a strategy from maximal positions, adding all even prefixes.
    pub fn from_maximal(name: &str, game: &Game, maximal: Vec<Play>) -> Result<Strategy> {
        let mut positions = BTreeSet::from([Play::empty()]);
        for p in maximal {
            for n in (0..=p.len()).step_by(2) {
                positions.insert(p.prefix(n));
            }
        }
        Strategy::new(name, game, positions)
    }

    pub(crate) fn unchecked(name: &str, game: &Game, positions: BTreeSet<Play>) -> Strategy {
        Strategy(Arc::new(StrategyInner {
            name: name.to_string(),
            game: game.clone(),
            positions,
        }))
    }

    /// The strategy with only the empty position.
    pub fn empty(name: &str, game: &Game) -> Strategy {
        Strategy::unchecked(name, game, BTreeSet::from([Play::empty()]))
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn game(&self) -> &Game {
        &self.0.game
    }

    pub fn positions(&self) -> &BTreeSet<Play> {
        &self.0.positions
    }

    pub fn renamed(&self, name: &str) -> Strategy {
        Strategy::unchecked(name, &self.0.game, self.0.positions.clone())
    }

    /// Move ids occurring in some position.
    pub fn occurring_moves(&self) -> BTreeSet<MoveId> {
        self.0
            .positions
            .iter()
            .flat_map(|p| p.moves().cloned())
            .collect()
    }

    /// The response to an odd-length play, if any.
    pub fn respond(&self, odd: &Play) -> Option<Occurrence> {
        use std::ops::Bound::{Excluded, Unbounded};
        self.0
            .positions
            .range((Excluded(odd.clone()), Unbounded))
            .take_while(|q| q.0.starts_with(&odd.0))
            .find(|q| q.len() == odd.len() + 1)
            .and_then(|q| q.last().cloned())
    }

    /// Every violated strategy invariant.
    pub fn violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        let pos = &self.0.positions;
        if !pos.contains(&Play::empty()) {
            v.push("empty position missing".to_string());
        }
        let mut responses: BTreeMap<Play, &Occurrence> = BTreeMap::new();
        for p in pos {
            if p.len() % 2 == 1 {
                v.push(format!("odd-length position {p:?}"));
                continue;
            }
            if !self.0.game.is_play(p) {
                v.push(format!("{p:?} is not a play of the game"));
            }
            if p.len() >= 2 {
                if !pos.contains(&p.prefix(p.len() - 2)) {
                    v.push(format!("{p:?} lacks its even prefix"));
                }
                let odd = p.prefix(p.len() - 1);
                let b = p.last().unwrap();
                if let Some(prev) = responses.insert(odd.clone(), b) {
                    if prev != b {
                        v.push(format!("non-deterministic after {odd:?}"));
                    }
                }
            }
        }
        v
    }
}

fn odd_extensions(g: &Game, p: &Play) -> Vec<Play> {
    g.extensions(p).cloned().collect()
}

/// Number of strategies on the subtree below even play `p`.
fn count_below(g: &Game, p: &Play, cap: u128) -> u128 {
    let mut total: u128 = 1;
    for a in odd_extensions(g, p) {
        let mut choices: u128 = 1;
        for b in g.extensions(&a) {
            choices = choices.saturating_add(count_below(g, b, cap));
        }
        total = total.saturating_mul(choices);
        if total > cap {
            return total;
        }
    }
    total
}

fn strategies_below(g: &Game, p: &Play) -> Vec<Vec<Play>> {
    // Each result lists the positions strictly below p.
    let mut acc: Vec<Vec<Play>> = vec![Vec::new()];
    for a in odd_extensions(g, p) {
        let mut options: Vec<Vec<Play>> = vec![Vec::new()];
        for b in g.extensions(&a) {
            for rest in strategies_below(g, b) {
                let mut o = vec![b.clone()];
                o.extend(rest);
                options.push(o);
            }
        }
        let mut next = Vec::with_capacity(acc.len() * options.len());
        for base in &acc {
            for o in &options {
                let mut v = base.clone();
                v.extend(o.iter().cloned());
                next.push(v);
            }
        }
        acc = next;
    }
    acc
}

/// All strategies on `g`, in a deterministic order. Named `<game>#k`.
pub fn enumerate_strategies(g: &Game, guard: &SizeGuard) -> Result<Vec<Strategy>> {
    guard.check_game(g)?;
    let estimate = count_below(g, &Play::empty(), guard.max_candidates);
    guard.check(&format!("strategies on {}", g.name()), estimate)?;
    let mut out: Vec<Strategy> = strategies_below(g, &Play::empty())
        .into_iter()
        .map(|below| {
            let mut positions = BTreeSet::from([Play::empty()]);
            positions.extend(below);
            Strategy::unchecked("", g, positions)
        })
        .collect();
    out.sort();
    Ok(out
        .into_iter()
        .enumerate()
        .map(|(k, s)| s.renamed(&format!("{}#{k}", g.name())))
        .collect())
}

/// Builds a strategy on an implication by playing `respond` against every
/// Opponent move allowed by the game.
fn by_response<F>(name: &str, game: &Game, respond: F) -> Strategy
where
    F: Fn(&Play) -> Option<Occurrence>,
{
    let mut positions = BTreeSet::from([Play::empty()]);
    let mut stack = vec![Play::empty()];
    while let Some(p) = stack.pop() {
        for a in game.extensions(&p) {
            if let Some(b) = respond(a) {
                let q = a.pushed(b);
                if game.is_play(&q) && positions.insert(q.clone()) {
                    stack.push(q);
                }
            }
        }
    }
    Strategy::unchecked(name, game, positions)
}

fn side(id: &MoveId) -> (&'static str, MoveId) {
    if let Some(m) = id.untag("l") {
        ("l", m)
    } else {
        ("r", id.untag("r").expect("implication move carries a side tag"))
    }
}

/// Copy-cat response with a move relabelling: a right move `m` is copied to
/// the left as `back(m)`, a left move `a` to the right as `fwd(a)`.
fn copy_response(
    odd: &Play,
    fwd: &dyn Fn(&MoveId) -> Option<MoveId>,
    back: &dyn Fn(&MoveId) -> Option<MoveId>,
) -> Option<Occurrence> {
    let i = odd.len() - 1;
    let o = &odd.0[i];
    let (s, m) = side(&o.id);
    let (id, justifier) = match (s, o.justifier) {
        ("r", None) => (back(&m)?.tagged("l"), Some(i)),
        ("r", Some(j)) => (back(&m)?.tagged("l"), Some(j ^ 1)),
        (_, Some(j)) => (fwd(&m)?.tagged("r"), Some(j ^ 1)),
        _ => return None,
    };
    Some(Occurrence { id, justifier })
}

/// The copy-cat strategy on A⊸A.
pub fn copycat(a: &Game, guard: &SizeGuard) -> Result<Strategy> {
    let imp = implication(a, a, guard)?;
    let same = |m: &MoveId| Some(m.clone());
    Ok(by_response(&format!("cp_{}", a.name()), &imp, |odd| {
        copy_response(odd, &same, &same)
    }))
}

/// The play-level realization of an iso on `source.game ⊸ target.game`,
/// restricted to the moves the iso relabels.
pub fn iso_as_strategy(f: &StrategyIso, guard: &SizeGuard) -> Result<Strategy> {
    let imp = implication(f.source().game(), f.target().game(), guard)?;
    let inv = f.invert();
    let fwd = |m: &MoveId| f.map_move(m);
    let back = |m: &MoveId| inv.map_move(m);
    Ok(by_response(&format!("iso_{}", f.name()), &imp, |odd| {
        copy_response(odd, &fwd, &back)
    }))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Part {
    A,
    B,
    C,
}

#[derive(Clone, Debug)]
struct Entry {
    part: Part,
    id: MoveId,
    justifier: Option<usize>,
}

/// Projects an interaction onto the implication between parts `x` and `y`,
/// returning the play and the interaction index of each kept occurrence.
fn project(u: &[Entry], x: Part, y: Part) -> (Play, Vec<usize>) {
    let mut index = vec![None; u.len()];
    let mut kept = Vec::new();
    let mut out = Vec::new();
    for (i, e) in u.iter().enumerate() {
        if e.part != x && e.part != y {
            continue;
        }
        let mut j = e.justifier;
        while let Some(k) = j {
            if index[k].is_some() {
                break;
            }
            j = u[k].justifier;
        }
        index[i] = Some(out.len());
        kept.push(i);
        let tag = if e.part == x { "l" } else { "r" };
        out.push(Occurrence {
            id: e.id.tagged(tag),
            justifier: j.and_then(|k| index[k]),
        });
    }
    (Play(out), kept)
}

fn implication_parts(g: &Game) -> Result<(Game, Game)> {
    match g.shape() {
        Shape::Implication(a, b) => Ok((a.clone(), b.clone())),
        _ => Err(Error::GameMismatch(format!(
            "`{}` is not an implication",
            g.name()
        ))),
    }
}

/// Synchronize-and-hide composition of `s : A⊸B` and `t : B⊸C`.
pub fn compose_strategies(s: &Strategy, t: &Strategy, guard: &SizeGuard) -> Result<Strategy> {
    let (a, b1) = implication_parts(s.game())?;
    let (b2, c) = implication_parts(t.game())?;
    if b1 != b2 {
        return Err(Error::GameMismatch(format!(
            "middle games `{}` and `{}` differ",
            b1.name(),
            b2.name()
        )));
    }
    let game = implication(&a, &c, guard)?;
    let name = format!("{};{}", s.name(), t.name());
    let bound = 2 * (a.max_play_len() + b1.max_play_len() + c.max_play_len()) + 2;
    let mut positions = BTreeSet::from([Play::empty()]);
    let mut stack: Vec<Vec<Entry>> = vec![Vec::new()];
    while let Some(u) = stack.pop() {
        let (pos, ac_index) = project(&u, Part::A, Part::C);
        for a_move in game.extensions(&pos) {
            let occ = a_move.last().unwrap();
            let (sd, id) = side(&occ.id);
            let mut v = u.clone();
            v.push(Entry {
                part: if sd == "l" { Part::A } else { Part::C },
                id,
                justifier: occ.justifier.map(|j| ac_index[j]),
            });
            // Whoever owns the last move hands over to the other strategy.
            let mut t_turn = sd == "r";
            let mut finished = false;
            for _ in 0..bound {
                let (x, y, strat) = if t_turn {
                    (Part::B, Part::C, t)
                } else {
                    (Part::A, Part::B, s)
                };
                let (view, idx) = project(&v, x, y);
                let Some(resp) = strat.respond(&view) else {
                    break;
                };
                let (rs, rid) = side(&resp.id);
                let part = if rs == "l" { x } else { y };
                v.push(Entry {
                    part,
                    id: rid,
                    justifier: resp.justifier.map(|j| idx[j]),
                });
                if part != Part::B {
                    finished = true;
                    break;
                }
                t_turn = !t_turn;
            }
            if finished {
                let (p, _) = project(&v, Part::A, Part::C);
                if game.is_play(&p) && positions.insert(p) {
                    stack.push(v);
                }
            }
        }
    }
    Ok(Strategy::unchecked(&name, &game, positions))
}

/// The strategy on A⊸B that plays `t` and never touches A.
pub fn lift_constant(t: &Strategy, a: &Game, guard: &SizeGuard) -> Result<Strategy> {
    let game = implication(a, t.game(), guard)?;
    let positions = t.positions().iter().map(|p| p.tagged("r")).collect();
    Ok(Strategy::unchecked(
        &format!("≫{}", t.name()),
        &game,
        positions,
    ))
}

/// Restricts a strategy on A⊸B that never moves in A to B.
pub fn hide_left(s: &Strategy) -> Result<Strategy> {
    let (_, b) = implication_parts(s.game())?;
    let mut positions = BTreeSet::new();
    for p in s.positions() {
        if p.moves().any(|m| m.untag("l").is_some()) {
            return Err(Error::GameMismatch(format!(
                "`{}` moves in the hidden component",
                s.name()
            )));
        }
        positions.insert(p.restrict("r"));
    }
    Ok(Strategy::unchecked(s.name(), &b, positions))
}

/// Tagged disjoint union `&{i: σ_i}` of strategies.
pub fn pair_strategies(family: &[(String, Strategy)]) -> Result<Strategy> {
    let games: Vec<(String, Game)> = family
        .iter()
        .map(|(i, s)| (i.clone(), s.game().clone()))
        .collect();
    let game = with_game(&games)?;
    let mut positions = BTreeSet::from([Play::empty()]);
    for (i, s) in family {
        positions.extend(s.positions().iter().map(|p| p.tagged(i)));
    }
    let name = family
        .iter()
        .map(|(i, s)| format!("{i}:{}", s.name()))
        .collect::<Vec<_>>()
        .join(" & ");
    Ok(Strategy::unchecked(&format!("&{{{name}}}"), &game, positions))
}

/// The component of a paired strategy at index `tag`.
pub fn project_component(s: &Strategy, tag: &str) -> Result<Strategy> {
    let Shape::With(components) = s.game().shape() else {
        return Err(Error::GameMismatch(format!(
            "`{}` is not a paired strategy",
            s.name()
        )));
    };
    let Some((_, g)) = components.iter().find(|(t, _)| t == tag) else {
        return Err(Error::NotAMember {
            what: tag.to_string(),
            of: s.name().to_string(),
        });
    };
    let positions = s
        .positions()
        .iter()
        .filter(|p| p.is_empty() || p.0[0].id.untag(tag).is_some())
        .map(|p| p.restrict(tag))
        .collect();
    Ok(Strategy::unchecked(&format!("{}.{tag}", s.name()), g, positions))
}
