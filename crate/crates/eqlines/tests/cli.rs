use std::path::PathBuf;
use std::process::{Command, Output};

use eqlines::constructions::witt276;
use eqlines::linalg::AnyMatrix;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqlines")).args(args).output().expect("binary runs")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("eqlines-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn coexistence_values() {
    for (n, v) in [("2", 24), ("3", 72), ("4", 200)] {
        let o = run(&["bound", "coexistence", "--n", n]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout_json(&o)["value"], v);
    }
    assert_eq!(run(&["bound", "coexistence", "--n", "1"]).status.code(), Some(1));
}

#[test]
fn aggregate_bounds() {
    let v = |args: &[&str]| stdout_json(&run(args))["value"].clone();
    assert_eq!(v(&["bound", "k3", "--r", "23"]), 165);
    assert_eq!(v(&["bound", "k5", "--r", "23"]), 272);
    assert_eq!(v(&["bound", "k5", "--r", "300"]), 412);
    assert_eq!(v(&["bound", "relative", "--r", "9", "--alpha", "1/7"]), 10);
    assert_eq!(v(&["bound", "gerzon", "--r", "23"]), 276);
    assert_eq!(v(&["bound", "table2"]), 54);
    assert_eq!(stdout_json(&run(&["bound", "neumann-candidates"]))["count"], 44);
    assert_eq!(run(&["bound", "table2", "--t1111", "40"]).status.code(), Some(2));
}

#[test]
fn table2_is_byte_stable() {
    let pinned = include_str!("../data/table2.txt");
    let a = run(&["reproduce", "table2"]);
    let b = run(&["--jobs", "1", "reproduce", "table2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(String::from_utf8(a.stdout.clone()).unwrap(), pinned);
    assert_eq!(a.stdout, b.stdout);
    let diff: Value = serde_json::from_slice(&a.stderr).unwrap();
    assert_eq!(diff["matches"], true);
    assert_eq!(diff["differences"].as_array().unwrap().len(), 0);
    let grouped = run(&["reproduce", "table2", "--grouped"]);
    assert_eq!(String::from_utf8(grouped.stdout).unwrap().lines().count(), 21);
}

#[test]
fn mstar_reproduction_matches_pinned() {
    let d = scratch("mstar");
    let out = d.join("mstar.txt");
    let o = run(&["reproduce", "mstar", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.ends_with("M*(8) = 14\nM*(9) = 18\nM*(10) = 18\n"));
    assert!(text.contains("\n9 1/7 10 relative_bound -\n"));
    let _ = std::fs::remove_dir_all(&d);
}

#[test]
fn construct_then_verify() {
    let d = scratch("roundtrip");
    let cases: [(&str, &[&str], usize); 5] = [
        ("w.json", &["construct", "witt276"], 23),
        ("p.json", &["construct", "paley", "--q", "17"], 9),
        ("s.json", &["construct", "simplex", "--k", "4", "--alpha", "1/3"], 3),
        ("b.json", &["construct", "block52", "--ell", "3"], 7),
        ("i.json", &["construct", "paley", "--q", "5"], 3),
    ];
    for (name, args, rank) in cases {
        let f = d.join(name);
        let mut a = args.to_vec();
        a.extend(["--out", f.to_str().unwrap()]);
        assert_eq!(run(&a).status.code(), Some(0));
        let o = run(&["verify", f.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        let j = stdout_json(&o);
        assert_eq!(j["ok"], true);
        assert_eq!(j["rank"], rank, "{name}");
    }
    let w = stdout_json(&run(&["verify", d.join("w.json").to_str().unwrap()]));
    assert_eq!((w["lines"].as_u64(), w["base_size"].as_u64()), (Some(276), Some(6)));
    let _ = std::fs::remove_dir_all(&d);
}

#[test]
fn corrupted_gram_is_located() {
    let d = scratch("corrupt");
    let g = match witt276().normalized.gram() {
        AnyMatrix::Q(g) => g,
        AnyMatrix::Quad(_) => unreachable!(),
    };
    let mut j = g.to_json();
    j.rows[17][40] = "1/4".into();
    let f = d.join("gram.json");
    std::fs::write(&f, serde_json::to_string(&j).unwrap()).unwrap();
    let o = run(&["verify", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let v = &stdout_json(&o)["violation"];
    assert_eq!(v["kind"], "angle");
    assert_eq!(v["entry"], serde_json::json!([17, 40]));
    assert_eq!(v["value"], "1/4");

    // the intact Gram matrix verifies
    std::fs::write(&f, serde_json::to_string(&g.to_json()).unwrap()).unwrap();
    let o = run(&["verify", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["rank"], 23);

    // a Seidel entry outside ±1, a wrong declared rank, and a non-PSD system
    let mut s = witt276().normalized.to_json();
    s.seidel[3][5] = 2;
    std::fs::write(&f, serde_json::to_string(&s).unwrap()).unwrap();
    let o = run(&["verify", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout_json(&o)["violation"]["entry"], serde_json::json!([3, 5]));
    let bad_rank = r#"{"alpha": "1/3", "seidel": [[0, 1], [1, 0]], "rank": 1}"#;
    std::fs::write(&f, bad_rank).unwrap();
    assert_eq!(run(&["verify", f.to_str().unwrap()]).status.code(), Some(2));
    let not_psd = r#"{"alpha": "1/2", "seidel": [[0, -1, -1, -1], [-1, 0, -1, -1], [-1, -1, 0, -1], [-1, -1, -1, 0]]}"#;
    std::fs::write(&f, not_psd).unwrap();
    let o = run(&["verify", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout_json(&o)["violation"]["kind"], "not_psd");
    let _ = std::fs::remove_dir_all(&d);
}

#[test]
fn usage_errors_exit_1() {
    let d = scratch("usage");
    let f = d.join("broken.json");
    std::fs::write(&f, "{\n  \"alpha\": \"1/3\",\n  \"seidel\": [[0, 1]\n").unwrap();
    let o = run(&["verify", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
    assert_eq!(run(&["verify", "/nonexistent/file.json"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["saturate", "--rank", "8", "--alpha", "3/2"]).status.code(), Some(1));
    assert_eq!(run(&["--jobs", "0", "bound", "gerzon", "--r", "3"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let _ = std::fs::remove_dir_all(&d);
}

#[test]
fn saturate_and_mstar() {
    let d = scratch("saturate");
    let o = run(&["saturate", "--rank", "8", "--alpha", "1/3", "--all-seeds", "--out", d.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let j = stdout_json(&o);
    assert_eq!((j["classes_scanned"].as_u64(), j["seed_count"].as_u64(), j["value"].as_u64()), (Some(1044), Some(3), Some(14)));
    let mut totals: Vec<u64> = j["seeds"].as_array().unwrap().iter().map(|s| s["total"].as_u64().unwrap()).collect();
    totals.sort_unstable();
    assert_eq!(totals, vec![8, 14, 14]);
    for i in 0..3 {
        let seed: Value = serde_json::from_str(&std::fs::read_to_string(d.join(format!("seed-{i:03}.json"))).unwrap()).unwrap();
        // each realized set verifies on its own
        let f = d.join(format!("realized-{i}.json"));
        std::fs::write(&f, seed["realized"].to_string()).unwrap();
        assert_eq!(run(&["verify", f.to_str().unwrap()]).status.code(), Some(0));
    }
    let m = stdout_json(&run(&["mstar", "--rank", "8"]));
    assert_eq!((m["value"].as_u64(), m["certified"].as_bool()), (Some(14), Some(true)));
    let _ = std::fs::remove_dir_all(&d);
}

#[test]
fn octad_export() {
    let all = run(&["construct", "octads"]);
    let text = String::from_utf8(all.stdout).unwrap();
    assert_eq!(text.lines().count(), 759);
    assert!(text.lines().all(|l| l.split(' ').count() == 8));
    let one = String::from_utf8(run(&["construct", "octads", "--through-1"]).stdout).unwrap();
    assert_eq!(one.lines().count(), 253);
    assert!(one.lines().all(|l| l.starts_with("1 ")));
}
