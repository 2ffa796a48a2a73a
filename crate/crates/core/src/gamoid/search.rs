//! Enumeration of functors out of a finite gamoid.
//!
//! Each connected component is handled through a spanning tree rooted at
//! one object: a functor is determined by the image of the root, a group
//! homomorphism on the root's automorphisms, and the images of the tree
//! arrows. Every other arrow image is derived and checked for membership.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Gamoid, Identification, Mapping, Object};
use crate::error::{Error, Result};

/// Where images may land and how they compose.
///
/// The `*_over` operations receive the source arrows as well as their
/// images, so targets whose composition depends on the source (such as
/// sections of a dependent gamoid) can be searched the same way.
pub trait SearchTarget {
    fn objects_over(&self, o: &Object) -> Result<Vec<Object>>;
    fn arrows_over(&self, p: &Identification, a: &Object, b: &Object) -> Result<Vec<Identification>>;
    fn contains_over(&self, p: &Identification, a: &Object, b: &Object, fp: &Identification) -> Result<bool> {
        Ok(self.arrows_over(p, a, b)?.contains(fp))
    }
    /// The image of `p` followed by `q`.
    fn then_over(
        &self,
        p: &Identification,
        fp: &Identification,
        q: &Identification,
        fq: &Identification,
    ) -> Result<Identification>;
    fn identity_over(&self, o: &Object, fo: &Object) -> Result<Identification>;
    fn inverse_over(&self, p: &Identification, fp: &Identification) -> Result<Identification>;
}

/// Functors into a fixed gamoid.
pub struct PlainTarget<'a>(pub &'a Gamoid);

impl SearchTarget for PlainTarget<'_> {
    fn objects_over(&self, _: &Object) -> Result<Vec<Object>> {
        Ok(self.0.objects().iter().cloned().collect())
    }

    fn arrows_over(&self, _: &Identification, a: &Object, b: &Object) -> Result<Vec<Identification>> {
        Ok(self.0.hom(a, b).to_vec())
    }

    fn contains_over(&self, _: &Identification, _: &Object, _: &Object, fp: &Identification) -> Result<bool> {
        Ok(self.0.has_arrow(fp))
    }

    fn then_over(
        &self,
        _: &Identification,
        fp: &Identification,
        _: &Identification,
        fq: &Identification,
    ) -> Result<Identification> {
        self.0.then(fp, fq)
    }

    fn identity_over(&self, _: &Object, fo: &Object) -> Result<Identification> {
        self.0.id(fo)
    }

    fn inverse_over(&self, _: &Identification, fp: &Identification) -> Result<Identification> {
        self.0.inv(fp)
    }
}

struct ArrowPlan {
    p: Identification,
    a: usize,
    b: usize,
    /// `t_a⁻¹`
    inv_ta: Identification,
    /// `t_a⁻¹ ; g`
    x1: Identification,
    g: usize,
}

struct Plan {
    objects: Vec<Object>,
    tree: Vec<Identification>,
    auts: Vec<Identification>,
    table: Vec<Vec<usize>>,
    arrows: Vec<ArrowPlan>,
}

fn aut_slot(index: &BTreeMap<&Identification, usize>, g: &Identification, source: &Gamoid) -> Result<usize> {
    index.get(g).copied().ok_or_else(|| {
        Error::Typing(format!("{} is not closed under composition at {g}", source.name()))
    })
}

fn plan(source: &Gamoid, comp: &[Object]) -> Result<Plan> {
    let root = comp[0].clone();
    let mut objects = vec![root.clone()];
    let mut tree = vec![source.id(&root)?];
    let mut index = BTreeMap::from([(root.clone(), 0usize)]);
    let mut i = 0;
    while i < objects.len() {
        let a = objects[i].clone();
        let ta = tree[i].clone();
        for p in source.arrows_from(&a) {
            if !index.contains_key(p.target()) {
                index.insert(p.target().clone(), objects.len());
                objects.push(p.target().clone());
                tree.push(source.then(&ta, p)?);
            }
        }
        i += 1;
    }
    let auts: Vec<Identification> = source.hom(&root, &root).to_vec();
    let aut_index: BTreeMap<&Identification, usize> =
        auts.iter().enumerate().map(|(k, g)| (g, k)).collect();
    let mut table = vec![vec![0; auts.len()]; auts.len()];
    for (x, gx) in auts.iter().enumerate() {
        for (y, gy) in auts.iter().enumerate() {
            table[x][y] = aut_slot(&aut_index, &source.then(gx, gy)?, source)?;
        }
    }
    let inverses: Vec<Identification> = tree.iter().map(|t| source.inv(t)).collect::<Result<_>>()?;
    let mut arrows = Vec::new();
    for (ai, a) in objects.iter().enumerate() {
        for p in source.arrows_from(a) {
            let bi = index[p.target()];
            let g = source.then(&source.then(&tree[ai], p)?, &inverses[bi])?;
            let gi = aut_slot(&aut_index, &g, source)?;
            arrows.push(ArrowPlan {
                p: p.clone(),
                a: ai,
                b: bi,
                inv_ta: inverses[ai].clone(),
                x1: source.then(&inverses[ai], &g)?,
                g: gi,
            });
        }
    }
    arrows.sort_by_key(|x| x.a.max(x.b));
    Ok(Plan {
        objects,
        tree,
        auts,
        table,
        arrows,
    })
}

/// Functor enumeration from `source` into a [`SearchTarget`].
pub struct FunctorSearch<'a> {
    source: &'a Gamoid,
    target: &'a dyn SearchTarget,
}

struct State<'p> {
    plan: &'p Plan,
    fo: Vec<Object>,
    ft: Vec<Identification>,
    h: Vec<Identification>,
}

impl<'a> FunctorSearch<'a> {
    pub fn new(source: &'a Gamoid, target: &'a dyn SearchTarget) -> Self {
        FunctorSearch { source, target }
    }

    fn image(&self, st: &State, ap: &ArrowPlan) -> Result<Identification> {
        let t = self.target;
        let inv_fta = t.inverse_over(&st.plan.tree[ap.a], &st.ft[ap.a])?;
        let u = t.then_over(&ap.inv_ta, &inv_fta, &st.plan.auts[ap.g], &st.h[ap.g])?;
        t.then_over(&ap.x1, &u, &st.plan.tree[ap.b], &st.ft[ap.b])
    }

    fn homomorphisms(&self, plan: &Plan, fr: &Object) -> Result<Vec<Vec<Identification>>> {
        let mut cands = Vec::new();
        for g in &plan.auts {
            cands.push(self.target.arrows_over(g, fr, fr)?);
        }
        let mut out = Vec::new();
        let mut cur: Vec<Option<Identification>> = vec![None; plan.auts.len()];
        self.hom_rec(plan, &cands, 0, &mut cur, &mut out)?;
        Ok(out)
    }

    fn hom_rec(
        &self,
        plan: &Plan,
        cands: &[Vec<Identification>],
        i: usize,
        cur: &mut Vec<Option<Identification>>,
        out: &mut Vec<Vec<Identification>>,
    ) -> Result<()> {
        if i == cands.len() {
            out.push(cur.iter().map(|x| x.clone().unwrap()).collect());
            return Ok(());
        }
        for c in &cands[i] {
            cur[i] = Some(c.clone());
            if self.consistent(plan, cur, i)? {
                self.hom_rec(plan, cands, i + 1, cur, out)?;
            }
        }
        cur[i] = None;
        Ok(())
    }

    fn consistent(&self, plan: &Plan, cur: &[Option<Identification>], i: usize) -> Result<bool> {
        for x in 0..=i {
            for y in 0..=i {
                if x != i && y != i && plan.table[x][y] != i {
                    continue;
                }
                let k = plan.table[x][y];
                let (Some(hx), Some(hy), Some(hk)) = (&cur[x], &cur[y], &cur[k]) else {
                    continue;
                };
                let c = self
                    .target
                    .then_over(&plan.auts[x], hx, &plan.auts[y], hy)?;
                if &c != hk {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn component(&self, plan: &Plan) -> Result<Vec<Mapping>> {
        let mut out = Vec::new();
        for fr in self.target.objects_over(&plan.objects[0])? {
            let id = self.target.identity_over(&plan.objects[0], &fr)?;
            for h in self.homomorphisms(plan, &fr)? {
                let mut st = State {
                    plan,
                    fo: vec![fr.clone()],
                    ft: vec![id.clone()],
                    h,
                };
                self.assign(&mut st, 1, &mut out)?;
            }
        }
        Ok(out)
    }

    fn check_upto(&self, st: &State, i: usize) -> Result<bool> {
        for ap in st.plan.arrows.iter().filter(|ap| ap.a.max(ap.b) == i) {
            let fp = self.image(st, ap)?;
            if !self
                .target
                .contains_over(&ap.p, &st.fo[ap.a], &st.fo[ap.b], &fp)?
            {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn assign(&self, st: &mut State, i: usize, out: &mut Vec<Mapping>) -> Result<()> {
        if i == 1 && !self.check_upto(st, 0)? {
            return Ok(());
        }
        if i == st.plan.objects.len() {
            let mut m = Mapping::default();
            for (k, o) in st.plan.objects.iter().enumerate() {
                m.objects.insert(o.clone(), st.fo[k].clone());
            }
            for ap in &st.plan.arrows {
                m.arrows.insert(ap.p.clone(), self.image(st, ap)?);
            }
            out.push(m);
            return Ok(());
        }
        let o = st.plan.objects[i].clone();
        let t = st.plan.tree[i].clone();
        for fo in self.target.objects_over(&o)? {
            for ft in self.target.arrows_over(&t, &st.fo[0], &fo)? {
                st.fo.push(fo.clone());
                st.ft.push(ft);
                if self.check_upto(st, i)? {
                    self.assign(st, i + 1, out)?;
                }
                st.fo.pop();
                st.ft.pop();
            }
        }
        Ok(())
    }

    /// Functors per connected component of the source.
    pub fn per_component(&self) -> Result<Vec<Vec<Mapping>>> {
        self.source
            .components()
            .iter()
            .map(|c| self.component(&plan(self.source, c)?))
            .collect()
    }

    /// Every functor, up to `limit` of them.
    pub fn all(&self, limit: Option<usize>) -> Result<Vec<Mapping>> {
        let parts = self.per_component()?;
        let mut acc = vec![Mapping::default()];
        for part in parts {
            let mut next = Vec::new();
            'outer: for base in &acc {
                for m in &part {
                    next.push(base.merged(m));
                    if limit.is_some_and(|l| next.len() >= l) {
                        break 'outer;
                    }
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    /// The number of functors.
    pub fn count(&self) -> Result<u128> {
        Ok(self
            .per_component()?
            .iter()
            .map(|p| p.len() as u128)
            .product())
    }

    /// Up to `k` distinct functors chosen at random.
    pub fn sample<R: Rng>(&self, rng: &mut R, k: usize) -> Result<Vec<Mapping>> {
        let parts = self.per_component()?;
        let total: u128 = parts.iter().map(|p| p.len() as u128).product();
        if total <= k as u128 {
            return self.all(None);
        }
        let mut out = std::collections::BTreeSet::new();
        let mut tries = 0;
        while out.len() < k && tries < 20 * k {
            tries += 1;
            let mut m = Mapping::default();
            for part in &parts {
                m = m.merged(part.choose(rng).expect("nonempty component list"));
            }
            out.insert(m);
        }
        Ok(out.into_iter().collect())
    }
}
