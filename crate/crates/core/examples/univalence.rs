//! Identifications between universe codes are the equivalences.
use gamoid::intensionality::{check_univalence, default_registry};

fn main() {
    let f = check_univalence(&default_registry());
    println!("{} {}", f.status, f.id);
    for (pair, n) in f.counts.iter().filter(|(_, n)| **n > 0) {
        println!("  {pair}: {n}");
    }
}
