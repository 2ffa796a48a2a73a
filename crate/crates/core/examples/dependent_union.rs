//! A family over `N2C` whose transport swaps the two identifications of
//! the bullet, and the hom-sets of its dependent union.
use gamoid::corpus::{families_over, named_gamoid, pool};
use gamoid::dependent::{check_constructions, dependent_union};

fn main() -> gamoid::error::Result<()> {
    let base = named_gamoid("N2C")?;
    let fams = families_over(&pool(), &base)?;
    println!("{} families over {} with fibers in the pool", fams.len(), base.name());
    let b = fams
        .iter()
        .find(|b| b.fibers().values().all(|f| f.name() == "BPT"))
        .expect("a BPT-valued family");
    let u = dependent_union(b)?;
    println!("⊎{}: {} objects, {} arrows", b.name(), u.objects().len(), u.arrow_count());
    for ((x, y), h) in u.hom_sets() {
        println!("  |hom({x}, {y})| = {}", h.len());
    }
    print!("{}", check_constructions(b));
    Ok(())
}
