//! The canonical gamoid on the boolean game and its hom-sets.
use gamoid::corpus::named_gamoid;
use gamoid::gamoid::check_groupoid_laws;

fn main() -> gamoid::error::Result<()> {
    let g = named_gamoid("BOOLG")?;
    println!("{}: {} objects, {} identifications", g.name(), g.objects().len(), g.arrow_count());
    for ((a, b), h) in g.hom_sets().filter(|(_, h)| !h.is_empty()) {
        let names: Vec<String> = h.iter().map(|p| p.to_string()).collect();
        println!("  hom({a}, {b}) = {{{}}}", names.join(", "));
    }
    print!("{}", check_groupoid_laws(&g));
    Ok(())
}
