use std::path::PathBuf;
use std::process::{Command, Output};

fn gamoid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gamoid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn model(name: &str, src: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gamoid-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, src).unwrap();
    p
}

#[test]
fn fixtures_prints_the_builtin_model() {
    let o = gamoid(&["fixtures"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), gamoid::frontend::BUILTIN_MODEL);
}

#[test]
fn intensionality_json_names_cp_and_rv() {
    let o = gamoid(&["check", "intensionality", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["version"], 1);
    let uip = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "intensionality/UIP")
        .unwrap();
    assert_eq!(uip["status"], "REFUTED");
    assert_eq!(uip["witness"]["first"], "cp");
    assert_eq!(uip["witness"]["second"], "rv");
    assert!(uip.get("ms").is_none());
}

#[test]
fn json_reports_are_reproducible() {
    let args = ["check", "cwf", "--format", "json", "--seed", "5"];
    let (a, b) = (gamoid(&args), gamoid(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let t = gamoid(&["check", "gamoid", "--format", "json", "--timings"]);
    let v: serde_json::Value = serde_json::from_slice(&t.stdout).unwrap();
    assert!(v["checks"][0]["ms"].is_u64());
}

#[test]
fn exit_codes_distinguish_failures_from_bad_input() {
    let failing = model(
        "rv_only.gm",
        "game BOOL { moves q_tt: O Q, tt: P A <- q_tt, q_ff: O Q, ff: P A <- q_ff; plays q_tt . tt, q_ff . ff; }\n\
         strategy bullet on BOOL { plays q_tt . tt, q_ff . ff; }\n\
         iso rv : bullet ~ bullet { map q_tt -> q_ff, tt -> ff, q_ff -> q_tt, ff -> tt; }\n\
         gamoid R { game BOOL; objects bullet; homs explicit { rv }; }\n",
    );
    let o = gamoid(&["check", "gamoid", "--model", failing.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL     gamoid/identities"));

    let broken = model("broken.gm", "game G { moves x: O; plays; }\n");
    let o = gamoid(&["check", "all", "--model", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1:"));

    assert_eq!(gamoid(&["check", "nonsense"]).status.code(), Some(2));
    let big = gamoid(&["check", "gamoid", "--max-moves", "2"]);
    assert_eq!(big.status.code(), Some(2));
}

#[test]
fn demos_show_their_witnesses() {
    let o = gamoid(&["demo", "univalence"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("BOOLG→BOOLG = 2"));
    assert!(stdout(&gamoid(&["demo", "uip"])).starts_with("REFUTED UIP"));
}
