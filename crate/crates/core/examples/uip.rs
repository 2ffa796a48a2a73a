//! UIP fails: the bullet has two identifications with none between them.
use gamoid::intensionality::check_uip_refuted;

fn main() {
    let f = check_uip_refuted();
    println!("{} {}", f.status, f.id);
    for (k, v) in f.witness.iter().map(|(k, v)| (k, v.to_string())).chain(f.counts.iter().map(|(k, v)| (k, v.to_string()))) {
        println!("  {k}: {v}");
    }
}
