//! Brute-force oracles that share no code with the searches they check.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use gamoid::corpus::named_gamoid;
use gamoid::games::{fixture, Game, Play, Strategy, StrategyIso};
use gamoid::gamoid::{Gamoid, Identification, Object};

pub fn game(n: &str) -> Game {
    fixture(n).unwrap().game().unwrap()
}

pub fn strategy(n: &str) -> Strategy {
    fixture(n).unwrap().strategy().unwrap()
}

pub fn iso(n: &str) -> StrategyIso {
    fixture(n).unwrap().iso().unwrap()
}

pub fn gamoid(n: &str) -> Gamoid {
    named_gamoid(n).unwrap()
}

/// Whether a set of even plays contains the empty play, is closed under
/// even prefixes and answers each odd play at most one way.
pub fn is_strategy_set(plays: &BTreeSet<Play>) -> bool {
    if !plays.contains(&Play::empty()) {
        return false;
    }
    let mut answer = BTreeMap::new();
    for p in plays {
        if p.len() < 2 {
            continue;
        }
        if !plays.contains(&p.prefix(p.len() - 2)) {
            return false;
        }
        let last = p.0[p.len() - 1].clone();
        if let Some(prev) = answer.insert(p.prefix(p.len() - 1), last.clone()) {
            if prev != last {
                return false;
            }
        }
    }
    true
}

/// Every strategy on `g` as a position set, by filtering all subsets of the
/// non-empty even plays.
pub fn brute_strategies(g: &Game) -> BTreeSet<BTreeSet<Play>> {
    let even: Vec<Play> = g
        .plays()
        .iter()
        .filter(|p| !p.is_empty() && p.len() % 2 == 0)
        .cloned()
        .collect();
    assert!(even.len() <= 20, "too many even plays for the oracle");
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << even.len()) {
        let mut s = BTreeSet::from([Play::empty()]);
        for (i, p) in even.iter().enumerate() {
            if mask & (1 << i) != 0 {
                s.insert(p.clone());
            }
        }
        if is_strategy_set(&s) {
            out.insert(s);
        }
    }
    out
}

fn arrow_assignments(
    a: &Gamoid,
    b: &Gamoid,
    objs: &BTreeMap<Object, Object>,
) -> Vec<BTreeMap<Identification, Identification>> {
    let mut acc = vec![BTreeMap::new()];
    for p in a.arrows() {
        let cands = b.hom(&objs[p.source()], &objs[p.target()]);
        let mut next = Vec::new();
        for m in &acc {
            for q in cands {
                let mut m2 = m.clone();
                m2.insert(p.clone(), q.clone());
                next.push(m2);
            }
        }
        acc = next;
    }
    acc
}

/// Counts functors `a → b` (all, and those bijective on objects and arrows)
/// by trying every object map and every arrow choice.
pub fn brute_functors(a: &Gamoid, b: &Gamoid) -> (usize, usize) {
    let xs: Vec<&Object> = a.objects().iter().collect();
    let ys: Vec<&Object> = b.objects().iter().collect();
    let (mut all, mut inv) = (0, 0);
    if ys.is_empty() {
        return (usize::from(xs.is_empty()), usize::from(xs.is_empty()));
    }
    let total = ys.len().pow(xs.len() as u32);
    for code in 0..total {
        let mut c = code;
        let mut objs = BTreeMap::new();
        for x in &xs {
            objs.insert((*x).clone(), ys[c % ys.len()].clone());
            c /= ys.len();
        }
        for arr in arrow_assignments(a, b, &objs) {
            let ids = xs
                .iter()
                .all(|x| arr[&a.id(x).unwrap()] == b.id(&objs[*x]).unwrap());
            let comp = a.arrows().all(|p| {
                a.arrows_from(p.target()).iter().all(|q| {
                    let pq = a.then(p, q).unwrap();
                    arr[&pq] == b.then(&arr[p], &arr[q]).unwrap()
                })
            });
            if ids && comp {
                all += 1;
                let on_objs: BTreeSet<&Object> = objs.values().collect();
                let on_arrs: BTreeSet<&Identification> = arr.values().collect();
                if on_objs.len() == ys.len()
                    && xs.len() == ys.len()
                    && on_arrs.len() == b.arrow_count()
                    && a.arrow_count() == b.arrow_count()
                {
                    inv += 1;
                }
            }
        }
    }
    (all, inv)
}
