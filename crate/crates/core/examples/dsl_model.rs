//! Load a model and run a suite over it. Without arguments this runs
//! `quick` on the builtin model extended below; otherwise pass a model
//! file and a suite name.
use gamoid::frontend::{load, run_suite, RunOptions, BUILTIN_MODEL};
use gamoid::games::SizeGuard;

const EXTRA: &str = r#"
morphism swap : N2C -> N2C { objects zero -> one, one -> zero; arrows "zero~one#0" -> "one~zero#0"; }
morphism keep : BPT -> BPT { objects bullet -> bullet; arrows "bullet~bullet#1" -> "bullet~bullet#1"; }
family K over N2C { fiber zero = BPT; fiber one = BPT; transport "zero~one#0" = keep; }
suite quick { run gamoid, dependent; }
"#;

fn main() -> gamoid::error::Result<()> {
    let mut args = std::env::args().skip(1);
    let src = match args.next() {
        Some(p) => std::fs::read_to_string(p).expect("readable model"),
        None => format!("{BUILTIN_MODEL}{EXTRA}"),
    };
    let suite = args.next().unwrap_or_else(|| "quick".into());
    let model = load(&src, &SizeGuard::default())?;
    let report = run_suite(&model, &suite, &RunOptions::default())?;
    print!("{}", report.to_text());
    Ok(())
}
