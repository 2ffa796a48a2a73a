//! The eight CwF equations over a seeded corpus.
use gamoid::corpus::cwf_corpus;
use gamoid::cwf::check_cwf_laws;

fn main() -> gamoid::error::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let corpus = cwf_corpus(seed)?;
    println!("seed {seed}: {} instances", corpus.len());
    print!("{}", check_cwf_laws(&corpus));
    Ok(())
}
