//! Function extensionality on a constant family over `N2C`.
use gamoid::corpus::named_gamoid;
use gamoid::dependent::{dep_fun_space, sections, DependentGamoid};
use gamoid::intensionality::{funext, pointwise_id};

fn main() -> gamoid::error::Result<()> {
    let b = DependentGamoid::constant("BPT", &named_gamoid("N2C")?, &named_gamoid("BPT")?);
    let pi = dep_fun_space(&b)?;
    let secs = sections(&b, None)?;
    println!("Π̂ has {} sections", secs.len());
    for (i, phi) in secs.iter().enumerate() {
        for (j, psi) in secs.iter().enumerate() {
            let fam = pointwise_id(&b, phi, psi)?;
            for tau in sections(&fam, None)? {
                let q = funext(&b, phi, psi, &tau)?;
                println!("  φ{i} ⇒ φ{j}: {q} (in Π̂: {})", pi.has_arrow(&q));
            }
        }
    }
    Ok(())
}
