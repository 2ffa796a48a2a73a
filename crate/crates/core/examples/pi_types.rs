//! Π over a small family: λ, application and the computation rule.
use gamoid::corpus::pi_corpus;
use gamoid::formers::{check_pi, pi_former};

fn main() -> gamoid::error::Result<()> {
    let corpus = pi_corpus(1, 2)?;
    let i = &corpus[corpus.len() / 2];
    let pi = pi_former(&i.a, &i.b)?;
    println!("Γ = {}", i.a.base().name());
    for (g, f) in pi.ty.fibers() {
        println!("  Π(A,B)({g}) has {} sections, {} identifications", f.objects().len(), f.arrow_count());
    }
    for (k, i) in corpus.iter().enumerate() {
        let r = check_pi(i, &format!("instance {k}"));
        if !r.passed() {
            print!("{r}");
            return Ok(());
        }
    }
    println!("{} instances satisfy the Π laws", corpus.len());
    Ok(())
}
