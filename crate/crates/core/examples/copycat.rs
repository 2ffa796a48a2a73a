//! Copycat is the unit of strategy composition on `BOOL ⊸ N2`.
use gamoid::games::{compose_strategies, copycat, enumerate_strategies, fixture, implication, SizeGuard};

fn main() -> gamoid::error::Result<()> {
    let guard = SizeGuard::default();
    let b = fixture("BOOL")?.game().expect("a game");
    let n2 = fixture("N2")?.game().expect("a game");
    let bn = implication(&b, &n2, &guard)?;
    let strategies = enumerate_strategies(&bn, &guard)?;
    println!("{} has {} moves and {} strategies", bn.name(), bn.moves().len(), strategies.len());

    let (cb, cn) = (copycat(&b, &guard)?, copycat(&n2, &guard)?);
    let mut units = 0;
    for s in &strategies {
        if compose_strategies(&cb, s, &guard)? == *s && compose_strategies(s, &cn, &guard)? == *s {
            units += 1;
        }
    }
    println!("cp ; σ = σ = σ ; cp for {units} of {}", strategies.len());
    Ok(())
}
