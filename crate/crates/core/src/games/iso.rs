use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use super::{Game, MoveId, Occurrence, Play, SizeGuard, Strategy};
use crate::error::{Error, Result};

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct IsoInner {
    source: Strategy,
    target: Strategy,
    move_map: BTreeMap<MoveId, MoveId>,
}

/// A structure-preserving bijection between the moves occurring in two
/// strategies that carries one position set onto the other.
///
/// Equality ignores the name.
#[derive(Clone)]
pub struct StrategyIso {
    inner: Arc<IsoInner>,
    name: Arc<str>,
}

impl PartialEq for StrategyIso {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for StrategyIso {}

impl PartialOrd for StrategyIso {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for StrategyIso {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.inner.cmp(&other.inner)
    }
}

impl std::hash::Hash for StrategyIso {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inner.move_map.hash(state)
    }
}

impl fmt::Debug for StrategyIso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {:?} ~ {:?}",
            self.name, self.inner.source, self.inner.target
        )
    }
}

fn label(g: &Game, m: &MoveId) -> Option<(super::Polarity, super::Kind, bool)> {
    g.get_move(m).map(|mv| mv.label())
}

/// Enablers of `m` restricted to the moves in `within`.
fn enablers_within(g: &Game, m: &MoveId, within: &BTreeSet<MoveId>) -> BTreeSet<MoveId> {
    g.get_move(m)
        .map(|mv| mv.enablers.intersection(within).cloned().collect())
        .unwrap_or_default()
}

fn translate(map: &BTreeMap<MoveId, MoveId>, p: &Play) -> Option<Play> {
    p.0.iter()
        .map(|o| {
            map.get(&o.id).map(|id| Occurrence {
                id: id.clone(),
                justifier: o.justifier,
            })
        })
        .collect::<Option<Vec<_>>>()
        .map(Play)
}

impl StrategyIso {
    pub fn new(
        name: &str,
        source: &Strategy,
        target: &Strategy,
        move_map: BTreeMap<MoveId, MoveId>,
    ) -> Result<StrategyIso> {
        let f = StrategyIso::unchecked(name, source, target, move_map);
        match f.violation() {
            None => Ok(f),
            Some(why) => Err(Error::InvalidIso(format!("{name}: {why}"))),
        }
    }

    fn unchecked(
        name: &str,
        source: &Strategy,
        target: &Strategy,
        move_map: BTreeMap<MoveId, MoveId>,
    ) -> StrategyIso {
        StrategyIso {
            inner: Arc::new(IsoInner {
                source: source.clone(),
                target: target.clone(),
                move_map,
            }),
            name: Arc::from(name),
        }
    }

    fn violation(&self) -> Option<String> {
        let (src, tgt, map) = (&self.inner.source, &self.inner.target, &self.inner.move_map);
        let dom = src.occurring_moves();
        let cod = tgt.occurring_moves();
        if map.keys().cloned().collect::<BTreeSet<_>>() != dom {
            return Some("domain is not the set of occurring source moves".into());
        }
        let image: BTreeSet<MoveId> = map.values().cloned().collect();
        if image != cod || image.len() != map.len() {
            return Some("not a bijection onto the occurring target moves".into());
        }
        for (a, b) in map {
            if label(src.game(), a) != label(tgt.game(), b) {
                return Some(format!("{a} -> {b} changes polarity, kind or initiality"));
            }
            let ea: BTreeSet<MoveId> = enablers_within(src.game(), a, &dom)
                .iter()
                .map(|e| map[e].clone())
                .collect();
            if ea != enablers_within(tgt.game(), b, &cod) {
                return Some(format!("{a} -> {b} breaks the enabling relation"));
            }
        }
        let image: Option<BTreeSet<Play>> =
            src.positions().iter().map(|p| translate(map, p)).collect();
        if image.as_ref() != Some(tgt.positions()) {
            return Some("positions are not carried onto the target".into());
        }
        None
    }

    /// The identity iso on a strategy.
    pub fn identity(s: &Strategy) -> StrategyIso {
        let map = s.occurring_moves().into_iter().map(|m| (m.clone(), m)).collect();
        StrategyIso::unchecked(&format!("id_{}", s.name()), s, s, map)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(&self, name: &str) -> StrategyIso {
        StrategyIso {
            inner: self.inner.clone(),
            name: Arc::from(name),
        }
    }

    pub fn source(&self) -> &Strategy {
        &self.inner.source
    }

    pub fn target(&self) -> &Strategy {
        &self.inner.target
    }

    pub fn move_map(&self) -> &BTreeMap<MoveId, MoveId> {
        &self.inner.move_map
    }

    pub fn map_move(&self, m: &MoveId) -> Option<MoveId> {
        self.inner.move_map.get(m).cloned()
    }

    pub fn is_identity(&self) -> bool {
        self.inner.source == self.inner.target
            && self.inner.move_map.iter().all(|(a, b)| a == b)
    }

    /// `self` followed by `g`.
    pub fn compose(&self, g: &StrategyIso) -> Result<StrategyIso> {
        if self.target() != g.source() {
            return Err(Error::EndpointMismatch(format!(
                "{} ends at {} but {} starts at {}",
                self.name,
                self.target(),
                g.name,
                g.source()
            )));
        }
        let map = self
            .inner
            .move_map
            .iter()
            .map(|(a, b)| (a.clone(), g.inner.move_map[b].clone()))
            .collect();
        Ok(StrategyIso::unchecked(
            &format!("{};{}", self.name, g.name),
            self.source(),
            g.target(),
            map,
        ))
    }

    pub fn invert(&self) -> StrategyIso {
        let map = self
            .inner
            .move_map
            .iter()
            .map(|(a, b)| (b.clone(), a.clone()))
            .collect();
        StrategyIso::unchecked(
            &format!("{}⁻¹", self.name),
            self.target(),
            self.source(),
            map,
        )
    }

    /// Relabels a play; fails on moves outside the domain.
    pub fn apply(&self, p: &Play) -> Result<Play> {
        translate(&self.inner.move_map, p).ok_or_else(|| Error::NotAMember {
            what: format!("{p:?}"),
            of: format!("the domain of {}", self.name),
        })
    }
}

/// Every iso between two strategies, in a deterministic order.
pub fn all_isos(source: &Strategy, target: &Strategy, guard: &SizeGuard) -> Result<Vec<StrategyIso>> {
    let dom: Vec<MoveId> = source.occurring_moves().into_iter().collect();
    let cod: Vec<MoveId> = target.occurring_moves().into_iter().collect();
    if dom.len() != cod.len() || source.positions().len() != target.positions().len() {
        return Ok(Vec::new());
    }
    if dom.len() > guard.max_moves {
        return Err(Error::SizeGuard {
            what: format!("isos {source} ~ {target}"),
            estimate: dom.len() as u128,
            bound: guard.max_moves as u128,
        });
    }
    let mut out = Vec::new();
    let mut map = BTreeMap::new();
    let mut used = vec![false; cod.len()];
    search(source, target, &dom, &cod, 0, &mut map, &mut used, &mut out);
    out.sort();
    Ok(out
        .into_iter()
        .enumerate()
        .map(|(k, f)| {
            let name = if f.is_identity() {
                format!("id_{}", source.name())
            } else {
                format!("{}~{}#{k}", source.name(), target.name())
            };
            f.renamed(&name)
        })
        .collect())
}

#[allow(clippy::too_many_arguments)]
fn search(
    src: &Strategy,
    tgt: &Strategy,
    dom: &[MoveId],
    cod: &[MoveId],
    i: usize,
    map: &mut BTreeMap<MoveId, MoveId>,
    used: &mut Vec<bool>,
    out: &mut Vec<StrategyIso>,
) {
    if i == dom.len() {
        let f = StrategyIso::unchecked("", src, tgt, map.clone());
        if f.violation().is_none() {
            out.push(f);
        }
        return;
    }
    let a = &dom[i];
    for (k, b) in cod.iter().enumerate() {
        if used[k] || label(src.game(), a) != label(tgt.game(), b) {
            continue;
        }
        used[k] = true;
        map.insert(a.clone(), b.clone());
        search(src, tgt, dom, cod, i + 1, map, used, out);
        map.remove(a);
        used[k] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::fixture;

    fn iso(name: &str) -> StrategyIso {
        fixture(name).unwrap().iso().unwrap()
    }

    #[test]
    fn rv_reverses_plays() {
        let p = Play(vec![Occurrence::new("q_tt", None), Occurrence::new("tt", Some(0))]);
        let q = Play(vec![Occurrence::new("q_ff", None), Occurrence::new("ff", Some(0))]);
        assert_eq!(iso("rv").apply(&p).unwrap(), q);
    }

    #[test]
    fn rv_squared_is_cp() {
        assert_eq!(iso("rv").compose(&iso("rv")).unwrap(), iso("cp"));
        assert_eq!(iso("rv").invert(), iso("rv"));
    }

    #[test]
    fn inverse_gives_identity() {
        let f = iso("N2-swap");
        let id = f.compose(&f.invert()).unwrap();
        assert_eq!(id, StrategyIso::identity(f.source()));
        assert!(f.compose(&f).is_err());
    }

    #[test]
    fn isos_on_bullet_and_n2() {
        let g = SizeGuard::default();
        let bullet = fixture("bullet").unwrap().strategy().unwrap();
        assert_eq!(all_isos(&bullet, &bullet, &g).unwrap().len(), 2);
        let zero = fixture("zero").unwrap().strategy().unwrap();
        let one = fixture("one").unwrap().strategy().unwrap();
        let isos = all_isos(&zero, &one, &g).unwrap();
        assert_eq!(isos, vec![iso("N2-swap")]);
    }

    #[test]
    fn label_breaking_map_rejected() {
        let bullet = fixture("bullet").unwrap().strategy().unwrap();
        let map = [("q_tt", "tt"), ("tt", "q_tt"), ("q_ff", "q_ff"), ("ff", "ff")]
            .into_iter()
            .map(|(a, b)| (MoveId::new(a), MoveId::new(b)))
            .collect();
        assert!(StrategyIso::new("bad", &bullet, &bullet, map).is_err());
    }
}
