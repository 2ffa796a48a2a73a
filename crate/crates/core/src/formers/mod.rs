//! Type formers over the CwF: Π, Σ, Id and universes.

pub mod id;
pub mod pi;
pub mod sigma;
pub mod universe;

use std::collections::BTreeMap;

pub use id::{check_id, id_elim, id_former, IdInstance, IdType, ID_LAWS};
pub use pi::{app, check_pi, check_pi_subst, lambda, pi_former, PiInstance, PiType, PI_LAWS};
pub use sigma::{check_sigma, sigma_elim, sigma_former, SigmaInstance, SigmaType, SIGMA_LAWS};
pub use universe::{
    check_cumulativity, check_universe, code_of, el, universe, universe_gamoid, Registry,
    UniverseLaw, UNIVERSE_LAWS,
};

use crate::dependent::{check_dependent, DependentGamoid};
use crate::error::{Error, Result};
use crate::gamoid::{Identification, Object};
use crate::laws::LawReport;

/// `B_γ`: the family over `Aγ` given by `σ ↦ B(γ & σ)`, `s ↦ B(id_γ & s)`.
pub fn restrict(a: &DependentGamoid, b: &DependentGamoid, gamma: &Object) -> Result<DependentGamoid> {
    let ag = a.fiber(gamma)?;
    let idg = a.base().id(gamma)?;
    let fibers = ag
        .objects()
        .iter()
        .map(|s| Ok((s.clone(), b.fiber(&Object::pair(gamma.clone(), s.clone()))?.clone())))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let transport = ag
        .arrows()
        .map(|s| Ok((s.clone(), b.transport_map(&vertical(gamma, &idg, s))?.clone())))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(DependentGamoid::unchecked(
        &format!("{}_{gamma}", b.name()),
        ag,
        fibers,
        transport,
    ))
}

/// `id_γ & s : (γ & σ1) → (γ & σ2)`.
pub(crate) fn vertical(gamma: &Object, idg: &Identification, s: &Identification) -> Identification {
    Identification::pair(
        Object::pair(gamma.clone(), s.source().clone()),
        Object::pair(gamma.clone(), s.target().clone()),
        idg.clone(),
        s.clone(),
    )
}

/// `p & id_{σ′} : (γ & Ap⁻¹σ′) → (γ′ & σ′)`.
pub(crate) fn along(a: &DependentGamoid, p: &Identification, s2: &Object) -> Result<Identification> {
    let pinv = a.base().inv(p)?;
    let s1 = a.tr_obj(&pinv, s2)?;
    let ids = a.fiber(p.target())?.id(s2)?;
    Ok(Identification::pair(
        Object::pair(p.source().clone(), s1),
        Object::pair(p.target().clone(), s2.clone()),
        p.clone(),
        ids,
    ))
}

pub(crate) fn require(what: &str, ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Typing(what.to_string()))
    }
}

pub(crate) fn checked(b: DependentGamoid) -> Result<DependentGamoid> {
    let r = check_dependent(&b);
    match r.first_failure() {
        None => Ok(b),
        Some((law, w)) => Err(Error::FunctorLaw {
            law: format!("{}: {law}", b.name()),
            witness: w.into(),
        }),
    }
}

pub(crate) fn eq_law<T: PartialEq>(r: &mut LawReport, law: &str, lhs: Result<T>, rhs: Result<T>, ctx: &str) {
    let ok = matches!((&lhs, &rhs), (Ok(x), Ok(y)) if x == y);
    r.record(law, ok, || match (lhs, rhs) {
        (Err(e), _) | (_, Err(e)) => format!("{ctx}: {e}"),
        _ => format!("{ctx}: sides differ"),
    });
}

pub(crate) fn ok_law<T>(r: &mut LawReport, law: &str, res: Result<T>, ctx: &str) -> Option<T> {
    match res {
        Ok(x) => {
            r.record(law, true, String::new);
            Some(x)
        }
        Err(e) => {
            r.record(law, false, || format!("{ctx}: {e}"));
            None
        }
    }
}
