use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::{Game, Kind, Move, MoveId, Occurrence, Play, Polarity, Strategy, StrategyIso};
use crate::error::{Error, Result};

/// A named builtin value.
#[derive(Clone, Debug)]
pub enum Fixture {
    Game(Game),
    Strategy(Strategy),
    Iso(StrategyIso),
}

impl Fixture {
    pub fn game(&self) -> Option<Game> {
        match self {
            Fixture::Game(g) => Some(g.clone()),
            _ => None,
        }
    }

    pub fn strategy(&self) -> Option<Strategy> {
        match self {
            Fixture::Strategy(s) => Some(s.clone()),
            _ => None,
        }
    }

    pub fn iso(&self) -> Option<StrategyIso> {
        match self {
            Fixture::Iso(f) => Some(f.clone()),
            _ => None,
        }
    }
}

/// The builtin games, strategies and isos.
pub struct FixtureSet {
    pub bool_game: Game,
    pub n2: Game,
    pub unit: Game,
    pub bool_empty: Strategy,
    pub tt_only: Strategy,
    pub ff_only: Strategy,
    pub bullet: Strategy,
    pub n2_empty: Strategy,
    pub zero: Strategy,
    pub one: Strategy,
    pub i_empty: Strategy,
    pub cp: StrategyIso,
    pub rv: StrategyIso,
    pub n2_swap: StrategyIso,
}

fn play(moves: &[&str]) -> Play {
    // Fixture plays are question/answer pairs, each answer pointing at the
    // question before it.
    Play(
        moves
            .iter()
            .enumerate()
            .map(|(i, m)| Occurrence::new(m, (i % 2 == 1).then(|| i - 1)))
            .collect(),
    )
}

fn map(pairs: &[(&str, &str)]) -> BTreeMap<MoveId, MoveId> {
    pairs
        .iter()
        .map(|(a, b)| (MoveId::new(a), MoveId::new(b)))
        .collect()
}

fn build() -> Result<FixtureSet> {
    use Kind::*;
    use Polarity::*;
    let bool_game = Game::new(
        "BOOL",
        vec![
            Move::new("q_tt", Opponent, Question, None),
            Move::new("tt", Proponent, Answer, Some("q_tt")),
            Move::new("q_ff", Opponent, Question, None),
            Move::new("ff", Proponent, Answer, Some("q_ff")),
        ],
        vec![play(&["q_tt", "tt"]), play(&["q_ff", "ff"])],
    )?;
    let n2 = Game::new(
        "N2",
        vec![
            Move::new("q", Opponent, Question, None),
            Move::new("0", Proponent, Answer, Some("q")),
            Move::new("1", Proponent, Answer, Some("q")),
        ],
        vec![play(&["q", "0"]), play(&["q", "1"])],
    )?;
    let unit = Game::empty("I");
    let bool_empty = Strategy::empty("bool_empty", &bool_game);
    let tt_only = Strategy::from_maximal("tt_only", &bool_game, vec![play(&["q_tt", "tt"])])?;
    let ff_only = Strategy::from_maximal("ff_only", &bool_game, vec![play(&["q_ff", "ff"])])?;
    let bullet = Strategy::from_maximal(
        "bullet",
        &bool_game,
        vec![play(&["q_tt", "tt"]), play(&["q_ff", "ff"])],
    )?;
    let n2_empty = Strategy::empty("n2_empty", &n2);
    let zero = Strategy::from_maximal("zero", &n2, vec![play(&["q", "0"])])?;
    let one = Strategy::from_maximal("one", &n2, vec![play(&["q", "1"])])?;
    let i_empty = Strategy::empty("i_empty", &unit);
    let cp = StrategyIso::new(
        "cp",
        &bullet,
        &bullet,
        map(&[("q_tt", "q_tt"), ("tt", "tt"), ("q_ff", "q_ff"), ("ff", "ff")]),
    )?;
    let rv = StrategyIso::new(
        "rv",
        &bullet,
        &bullet,
        map(&[("q_tt", "q_ff"), ("tt", "ff"), ("q_ff", "q_tt"), ("ff", "tt")]),
    )?;
    let n2_swap = StrategyIso::new("N2-swap", &zero, &one, map(&[("q", "q"), ("0", "1")]))?;
    Ok(FixtureSet {
        bool_game,
        n2,
        unit,
        bool_empty,
        tt_only,
        ff_only,
        bullet,
        n2_empty,
        zero,
        one,
        i_empty,
        cp,
        rv,
        n2_swap,
    })
}

impl FixtureSet {
    pub fn get() -> &'static FixtureSet {
        static SET: OnceLock<FixtureSet> = OnceLock::new();
        SET.get_or_init(|| build().expect("builtin fixtures are valid"))
    }

    fn lookup(&self, name: &str) -> Option<Fixture> {
        Some(match name {
            "BOOL" => Fixture::Game(self.bool_game.clone()),
            "N2" => Fixture::Game(self.n2.clone()),
            "I" => Fixture::Game(self.unit.clone()),
            "bool_empty" => Fixture::Strategy(self.bool_empty.clone()),
            "tt_only" => Fixture::Strategy(self.tt_only.clone()),
            "ff_only" => Fixture::Strategy(self.ff_only.clone()),
            "bullet" => Fixture::Strategy(self.bullet.clone()),
            "n2_empty" => Fixture::Strategy(self.n2_empty.clone()),
            "zero" => Fixture::Strategy(self.zero.clone()),
            "one" => Fixture::Strategy(self.one.clone()),
            "i_empty" => Fixture::Strategy(self.i_empty.clone()),
            "cp" => Fixture::Iso(self.cp.clone()),
            "rv" => Fixture::Iso(self.rv.clone()),
            "N2-swap" => Fixture::Iso(self.n2_swap.clone()),
            _ => return None,
        })
    }
}

/// Names accepted by [`fixture`].
pub fn fixture_names() -> &'static [&'static str] {
    &[
        "BOOL", "N2", "I", "bool_empty", "tt_only", "ff_only", "bullet", "n2_empty", "zero",
        "one", "i_empty", "cp", "rv", "N2-swap",
    ]
}

pub fn fixture(name: &str) -> Result<Fixture> {
    FixtureSet::get()
        .lookup(name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_resolves() {
        for n in fixture_names() {
            assert!(fixture(n).is_ok(), "{n}");
        }
        assert_eq!(
            fixture("nope").unwrap_err(),
            Error::UnknownFixture("nope".into())
        );
    }

    #[test]
    fn bool_plays() {
        let g = fixture("BOOL").unwrap().game().unwrap();
        let expected = [
            vec![],
            vec!["q_tt"],
            vec!["q_tt", "tt"],
            vec!["q_ff"],
            vec!["q_ff", "ff"],
        ];
        assert_eq!(g.plays().len(), 5);
        for e in expected {
            assert!(g.is_play(&play(&e)));
        }
    }

    #[test]
    fn bullet_is_the_total_strategy() {
        let s = fixture("bullet").unwrap().strategy().unwrap();
        assert_eq!(s.positions().len(), 3);
    }
}
