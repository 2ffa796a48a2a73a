//! One line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::{brute_functors, gamoid};
use gamoid::corpus::{all_small_families, cwf_corpus, fixture_gamoids, id_corpus, pi_corpus, sigma_corpus};
use gamoid::cwf::{check_cwf_laws, CWF_LAWS};
use gamoid::dependent::{check_constructions, dep_fun_space, ev_functor, sections, CONSTRUCTION_LAWS};
use gamoid::formers::{check_id, check_pi, check_sigma};
use gamoid::gamoid::{check_groupoid_laws, Object};
use gamoid::intensionality::{
    check_criteria, check_eqrefl_refuted, check_uip_refuted, check_univalence, default_registry,
    funext, pointwise_id,
};
use gamoid::laws::{LawReport, Status};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Option<u64>);

fn law_report(r: &LawReport, laws: &[&str]) -> Outcome {
    if !r.passed() {
        let (l, w) = r.first_failure().unwrap_or_default();
        return Err(format!("{l}: {w}"));
    }
    let mut counts = Vec::new();
    for law in laws {
        match r.entry(law) {
            Some(e) if e.instances > 0 => counts.push(format!("{law}={}", e.instances)),
            _ => return Err(format!("{law} has no instances")),
        }
    }
    Ok(counts.join(" "))
}

fn groupoid_laws() -> Outcome {
    let mut r = LawReport::new();
    for g in fixture_gamoids() {
        r.merge(check_groupoid_laws(&g));
    }
    let fams = all_small_families().map_err(|e| e.to_string())?;
    for b in &fams {
        r.merge(check_constructions(b));
    }
    law_report(&r, &CONSTRUCTION_LAWS).map(|s| format!("{} families; {s}", fams.len()))
}

fn cwf_suite() -> Outcome {
    let corpus = cwf_corpus(1).map_err(|e| e.to_string())?;
    if corpus.len() < 50 {
        return Err(format!("only {} instances", corpus.len()));
    }
    law_report(&check_cwf_laws(&corpus), &CWF_LAWS).map(|s| format!("{} instances; {s}", corpus.len()))
}

const FORMER_LAWS: [&str; 12] = [
    "Π-Comp", "Σ-Comp", "Id-Comp", "Π-Subst", "λ-Subst", "App-Subst", "Σ-Subst", "Pair-Subst",
    "R^Σ-Subst", "Id-Subst", "Refl-Subst", "R^Id-Subst",
];

fn former_suite() -> Outcome {
    let e = |x: gamoid::error::Error| x.to_string();
    let mut r = LawReport::new();
    for (k, i) in pi_corpus(1, 6).map_err(e)?.iter().enumerate() {
        r.merge(check_pi(i, &format!("Π {k}")));
    }
    for (k, i) in sigma_corpus(1, 6).map_err(e)?.iter().enumerate() {
        r.merge(check_sigma(i, &format!("Σ {k}")));
    }
    for (k, i) in id_corpus(1, 6).map_err(e)?.iter().enumerate() {
        r.merge(check_id(i, &format!("Id {k}")));
    }
    law_report(&r, &FORMER_LAWS)
}

fn evaluation_lemma() -> Outcome {
    let mut pairs = 0;
    for b in all_small_families().map_err(|e| e.to_string())? {
        let pi = dep_fun_space(&b).map_err(|e| e.to_string())?;
        let ev = ev_functor(&b, &pi).map_err(|e| e.to_string())?;
        let d = &ev.domain;
        for x in d.arrows() {
            for y in d.arrows_from(x.target()) {
                let fiber = ev.family.fiber(y.target()).map_err(|e| e.to_string())?;
                let moved = ev.family.tr_arr(y, &ev.section.arrows[x]).map_err(|e| e.to_string())?;
                let rhs = fiber.then(&moved, &ev.section.arrows[y]).map_err(|e| e.to_string())?;
                let xy = d.then(x, y).map_err(|e| e.to_string())?;
                if ev.section.arrows[&xy] != rhs {
                    return Err(format!("{}: at {x} then {y}", b.name()));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} composable pairs"))
}

fn uip() -> Outcome {
    let f = check_uip_refuted();
    let ok = f.status == Status::Refuted
        && f.counts.get("|hom(•,•)|") == Some(&2)
        && f.counts.get("|hom(cp,rv)|") == Some(&0)
        && f.witness.get("first").map(String::as_str) == Some("cp")
        && f.witness.get("second").map(String::as_str) == Some("rv");
    let s = format!("|hom(•,•)|={:?} |hom(cp,rv)|={:?}", f.counts.get("|hom(•,•)|"), f.counts.get("|hom(cp,rv)|"));
    if ok { Ok(s) } else { Err(s) }
}

fn funext_suite() -> Outcome {
    let mut n = 0;
    let e = |x: gamoid::error::Error| x.to_string();
    for b in all_small_families().map_err(e)? {
        let pi = dep_fun_space(&b).map_err(e)?;
        let secs = sections(&b, None).map_err(e)?;
        for phi in &secs {
            for psi in &secs {
                let fam = pointwise_id(&b, phi, psi).map_err(e)?;
                for tau in sections(&fam, None).map_err(e)? {
                    let q = funext(&b, phi, psi, &tau).map_err(e)?;
                    let comps = q.as_family().ok_or("not a pointwise family")?;
                    let exact = b
                        .base()
                        .objects()
                        .iter()
                        .all(|s| tau.objects[s] == Object::Ident(comps[s].clone()));
                    if !pi.has_arrow(&q) || !exact {
                        return Err(format!("{}: {q}", b.name()));
                    }
                    n += 1;
                }
            }
        }
    }
    if n == 0 {
        return Err("no pointwise families".into());
    }
    Ok(format!("{n} pointwise families"))
}

fn univalence() -> Outcome {
    let reg = default_registry();
    for c in ["1", "BOOLG", "N2C"] {
        if reg.level_of(c).is_none() {
            return Err(format!("registry lacks {c}"));
        }
    }
    let f = check_univalence(&reg);
    if f.status != Status::Holds {
        return Err(format!("{:?}", f.witness));
    }
    let ours = f.counts.get("BOOLG→BOOLG").copied().unwrap_or(u64::MAX) as usize;
    let oracle = brute_functors(&gamoid("BOOLG"), &gamoid("BOOLG")).1;
    if ours != oracle {
        return Err(format!("BOOLG→BOOLG: {ours} vs oracle {oracle}"));
    }
    Ok(format!("{} code pairs; BOOLG→BOOLG = {ours} (oracle {oracle})", f.counts["pairs"]))
}

fn statuses() -> Outcome {
    let mut got = vec![check_eqrefl_refuted(&fixture_gamoids())];
    got.extend(check_criteria());
    let want = [Status::Refuted, Status::Holds, Status::Holds, Status::Refuted];
    let mut line = Vec::new();
    for (f, w) in got.iter().zip(want) {
        if f.status != w || f.witness.is_empty() {
            return Err(format!("{} is {} with {} witness fields", f.id, f.status, f.witness.len()));
        }
        line.push(format!("{}={}", f.id, f.status));
    }
    Ok(line.join(" "))
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_gamoid"))
            .args(["check", "all", "--format", "json", "--seed", "1"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if !a.status.success() {
        return Err(format!("exit {:?}", a.status.code()));
    }
    if a.stdout != b.stdout {
        return Err("reports differ".into());
    }
    Ok(format!("{} bytes, identical", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("groupoid laws", groupoid_laws, Some(60)),
        ("CwF equations", cwf_suite, Some(60)),
        ("former laws", former_suite, Some(120)),
        ("evaluation functor", evaluation_lemma, None),
        ("UIP refuted", uip, Some(1)),
        ("FunExt", funext_suite, None),
        ("univalence", univalence, Some(10)),
        ("EqRefl and criteria", statuses, None),
        ("determinism", determinism, None),
    ];
    let mut failed = 0;
    for (k, (name, run, limit)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let mut out = run();
        let took = t.elapsed();
        if let (Ok(s), Some(l)) = (&out, limit) {
            if took > Duration::from_secs(*l) {
                out = Err(format!("{s}; took {took:.1?}, limit {l} s"));
            }
        }
        let (tag, detail) = match &out {
            Ok(s) => ("PASS", s),
            Err(s) => {
                failed += 1;
                ("FAIL", s)
            }
        };
        println!("criterion {} {tag} {name} ({took:.1?}): {detail}", k + 1);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
