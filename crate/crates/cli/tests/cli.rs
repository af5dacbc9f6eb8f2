use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use triplex::lts::{catalog, lts_from_lie};
use triplex_cli::loader::{lie_file, lts_file, to_json};
use triplex_cli::{load_system, run_suite, Config, Suite, System};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn triplex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_triplex")).args(args).output().expect("binary runs")
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let p = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn bundled_files_match_catalog() {
    let lts = [
        ("s2.json", catalog::s2()),
        ("sl2_lts.json", catalog::sl2_lts()),
        ("sl3_sym.json", catalog::sl3_sym_lts()),
        ("s2_pair.json", catalog::s2_pair()),
        ("abelian2.json", catalog::abelian(2)),
    ];
    for (file, t) in lts {
        let text = std::fs::read_to_string(data(file)).unwrap();
        assert_eq!(text, to_json(&lts_file(&t)), "{file}");
        match load_system(data(file)).unwrap() {
            System::Lts(loaded) => assert_eq!(loaded, t),
            System::Lie(_) => panic!("{file} should be a triple system"),
        }
    }
    for (file, l) in [("sl2.json", catalog::sl2()), ("sl3.json", catalog::sl3())] {
        let text = std::fs::read_to_string(data(file)).unwrap();
        assert_eq!(text, to_json(&lie_file(&l)), "{file}");
        let loaded = load_system(data(file)).unwrap();
        assert!(matches!(loaded, System::Lie(_)));
        assert!(loaded.to_lts().unwrap().same_constants(&lts_from_lie(&l).unwrap()));
    }
}

#[test]
fn sl2_file_gives_sl2_triple_system() {
    let t = load_system(data("sl2.json")).unwrap().to_lts().unwrap();
    assert!(t.same_constants(&catalog::sl2_lts()));
}

#[test]
fn exit_codes() {
    let s2 = data("s2.json");
    let s2 = s2.to_str().unwrap();
    assert_eq!(code(&triplex(&["check", s2])), 0);
    assert_eq!(code(&triplex(&["verify", s2, "--suite", "nope"])), 2);
    assert_eq!(code(&triplex(&["verify", s2, "-N", "2", "--suite", "s2"])), 3);
    assert_eq!(code(&triplex(&["pbw", s2, "-N", "6", "--max-monomials", "50"])), 3);
    assert_eq!(code(&triplex(&["bogus"])), 2);

    let pair = data("s2_pair.json");
    assert_eq!(code(&triplex(&["verify", pair.to_str().unwrap(), "--suite", "s2"])), 2);

    let zero = scratch("zero.json", r#"{"name":"z","kind":"lts","dim":0,"basis":[],"entries":[]}"#);
    let out = triplex(&["check", zero.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("dim"));

    let bad = scratch(
        "bad.json",
        r#"{"name":"bad","kind":"lts","dim":2,"basis":["a","b"],"entries":[{"args":[0,0,1],"value":{"0":"1"}}]}"#,
    );
    let out = triplex(&["check", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL axioms.alternating"));

    let missing = triplex(&["check", "/nonexistent/system.json"]);
    assert_eq!(code(&missing), 2);
}

#[test]
fn load_errors_carry_line_context() {
    let text = "{\n  \"name\": \"x\",\n  \"kind\": \"lts\",\n  \"dim\": 2,\n  \"basis\": [\"a\", \"b\"],\n  \"entries\": [\n    {\"args\": [0, 1, 5], \"value\": {}}\n  ]\n}\n";
    let p = scratch("range.json", text);
    let err = load_system(&p).unwrap_err().to_string();
    assert!(err.contains("line 7"), "{err}");
    let p = scratch("syntax.json", "{\n  \"name\": \"x\",\n  \"kind\": \"lts\"\n  \"dim\": 2\n}\n");
    let err = load_system(&p).unwrap_err().to_string();
    assert!(err.contains("line 4"), "{err}");
    let p = scratch("extra.json", r#"{"name":"x","kind":"lts","dim":1,"basis":["a"],"entries":[],"extra":1}"#);
    assert!(load_system(&p).is_err());
}

#[test]
fn multiplication_and_ideals() {
    let s2 = data("s2.json");
    let s2 = s2.to_str().unwrap();
    let out = triplex(&["mul", s2, "-N", "3", "e", "f"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "e*f");
    let out = triplex(&["mul", s2, "-N", "3", "e*f", "e"]);
    assert_eq!(code(&out), 0);
    let out = triplex(&["mul", s2, "-N", "3", "e*f*e", "e"]);
    assert_eq!(code(&out), 2);
    let out = triplex(&["mul", s2, "-N", "2", "e^2", "f"]);
    assert_eq!(code(&out), 3);

    let out = triplex(&["ideal", s2, "-N", "6", "--right", "1 + e"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("contains 1 = true"));
    let out = triplex(&["ideal", s2, "-N", "6", "--right", "e", "f^2"]);
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("contains 1 = false") && text.contains("inside augmentation = true"), "{text}");
}

#[test]
fn single_purpose_commands() {
    let s2 = data("s2.json");
    let out = triplex(&["endo", s2.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("closure_dim=4"));
    let out = triplex(&["simple", data("s2_pair.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("verdict=not simple"));
    let out = triplex(&["embed", s2.to_str().unwrap()]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("[0, 4]"));
    let out = triplex(&["pbw", data("sl2_lts.json").to_str().unwrap(), "-N", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], 0);
    assert_eq!(v["records"].as_array().unwrap().len(), 7);
}

#[test]
fn catalog_command_round_trips() {
    let out = triplex(&["catalog", "abelian3"]);
    assert_eq!(code(&out), 0);
    let p = scratch("abelian3.json", &String::from_utf8_lossy(&out.stdout));
    assert_eq!(load_system(&p).unwrap().to_lts().unwrap(), catalog::abelian(3));
    assert_eq!(code(&triplex(&["catalog", "nothing"])), 2);
}

#[test]
fn report_schema() {
    let t = catalog::s2();
    let cfg = Config { max_degree: Some(4), ..Config::default() };
    let rep = run_suite(Suite::Jordan, &t, &cfg).unwrap();
    let v: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["failed", "max_degree", "passed", "records", "seed", "status", "suite", "system"]);
    assert!(rep.to_json().starts_with("{\n  \"suite\": \"jordan\""));
    let rec = &v["records"][0];
    for k in ["id", "params", "identity", "verdict"] {
        assert!(rec.get(k).is_some(), "{k}");
    }
    let ids: Vec<&str> = rep.records.iter().map(|r| r.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn suites_skip_inapplicable_parts() {
    let cfg = Config { max_degree: Some(4), ..Config::default() };
    let rep = run_suite(Suite::All, &catalog::abelian(2), &cfg).unwrap();
    assert!(rep.all_passed());
    assert!(rep.records.iter().all(|r| !r.id.starts_with("s2.") && !r.id.starts_with("mainthm.")));
    let rep = run_suite(Suite::All, &catalog::s2(), &cfg).unwrap();
    assert!(rep.record("s2.n1.product").is_some());
    assert!(rep.record("mainthm.augmentation").is_some());
}
