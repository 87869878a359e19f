//! Snapshot tests of every verb. Set `UPDATE_GOLDEN=1` to rewrite the files
//! under `tests/golden/`.

use serde_json::Value;
use std::path::PathBuf;
use std::process::Command;

const CASES: &[(&str, &[&str])] = &[
    ("chi_s334", &["chi", "S2(3,3,4)"]),
    ("chi_mirror", &["chi", "D(3;4)", "--format", "json"]),
    ("classify_s236", &["classify", "S2(2,3,6)"]),
    ("stab_dihedral", &["stab", "--group", "PO(7)", "--dihedral", "4", "--format", "json"]),
    ("hitchin_s334", &["hitchin", "--group", "PSL(3)", "S2(3,3,4)", "--format", "json"]),
    ("hitchin_g2", &["hitchin", "--group", "G2", "S2(2,3,7)"]),
    ("euclidean_s333", &["euclidean", "--group", "PSL(3)", "S2(3,3,3)", "--format", "json"]),
    ("relative_d33", &["relative", "--group", "PSL(4)", "D2(3,3)", "--format", "tsv"]),
    ("canonical", &["canonical", "--group", "PSL(3)", "--boundary", "S2(2,3,6)", "--boundary", "T2", "--assume-hyperbolic", "--format", "json"]),
    ("fig8_12", &["fig8", "--n", "12", "--format", "json"]),
    ("whitehead_7", &["whitehead", "--n", "7"]),
    ("lawton_coords", &["lawton", "coords", "--a", "1,1,0,0,1,0,0,0,1", "--b", "1,0,0,1,1,0,0,0,1", "--format", "json"]),
    ("lawton_points", &["lawton", "paper-points", "--format", "json"]),
    ("lawton_selftest", &["lawton", "selftest", "--samples", "200", "--seed", "7", "--format", "json"]),
    ("table2", &["table", "2", "--format", "tsv"]),
    ("table3_json", &["table", "3", "--n-max", "14", "--format", "json"]),
    ("table4_text", &["table", "4", "--n-max", "4"]),
    ("table5", &["table", "5", "--n-max", "4", "--format", "tsv"]),
];

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = orbidim::run(std::iter::once("orbidim").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

#[test]
fn golden_outputs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut failures = Vec::new();
    for (name, args) in CASES {
        let (code, out, err) = run(args);
        assert_eq!(code, 0, "{name}: {err}");
        let path = golden_dir().join(format!("{name}.out"));
        if update {
            std::fs::write(&path, &out).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        if expected != out {
            failures.push(format!("{name}\n--- expected\n{expected}--- actual\n{out}"));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn output_is_deterministic() {
    for (_, args) in CASES {
        assert_eq!(run(args), run(args));
    }
}

#[test]
fn selftest_seed_is_respected() {
    let a = json(&["lawton", "selftest", "--samples", "300", "--seed", "1", "--format", "json"]);
    let b = json(&["lawton", "selftest", "--samples", "300", "--seed", "2", "--format", "json"]);
    assert_ne!(a["max_lawton_residual"], b["max_lawton_residual"]);
    assert_eq!(a["passed"], true);
}

#[test]
fn values_match_hand_computations() {
    // chi(S2(3,3,4)) = 2 - 2/3 - 2/3 - 3/4
    assert_eq!(json(&["chi", "S2(3,3,4)", "--format", "json"])["chi"], "-1/12");
    // PSL(3) on S2(3,3,4): -8*2 + 3 * (8 - 2) = 2
    assert_eq!(json(&["hitchin", "--group", "PSL(3)", "S2(3,3,4)", "--format", "json"])["dimension"], 2);
    // fixed points of C4 acting by the principal grading on sl(5): exponents 1..4, one divisible by 4
    // centralizer dimension = sum over exponents d of #{j in -d..=d : 4 | j}
    let expected: u32 = (1..5).map(|d: i32| (-d..=d).filter(|j| j % 4 == 0).count() as u32).sum();
    assert_eq!(json(&["stab", "--group", "PSL(5)", "--cyclic", "4", "--format", "json"])["dimension"], expected);
    let t = json(&["table", "3", "--n-max", "3", "--format", "json"]);
    assert_eq!(t["rows"][0], serde_json::json!([2, 2, 0]));
    assert_eq!(t["rows"][1], serde_json::json!([3, 3, 2]));
}

#[test]
fn exit_codes_in_process() {
    assert_eq!(run(&["chi", "S2(3,"]).0, 2);
    assert_eq!(run(&["hitchin", "--group", "PSL(1)", "S2(2,3,7)"]).0, 1);
    assert_eq!(run(&["hitchin", "--group", "XYZ(3)", "S2(2,3,7)"]).0, 2);
    assert_eq!(run(&["hitchin", "--group", "PSL(3)", "S2(2,3,6)"]).0, 1);
    assert_eq!(run(&["euclidean", "--group", "PSL(3)", "S2(2,3,7)"]).0, 1);
    assert_eq!(run(&["fig8", "--n", "1"]).0, 1);
    assert_eq!(run(&["lawton", "coords", "--a", "2,0,0,0,1,0,0,0,1", "--b", "1,0,0,0,1,0,0,0,1"]).0, 1);
    assert_eq!(run(&["lawton", "coords", "--a", "1,0", "--b", "1,0,0,0,1,0,0,0,1"]).0, 2);
    assert_eq!(run(&["table", "6"]).0, 2);
    assert_eq!(run(&["stab", "--group", "G2"]).0, 2);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("hitchin"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_orbidim");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["chi", "S2(2,3,7)"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "chi: -1/42\nchi_underlying: 2\norbifold: S2(2,3,7)\n");
    let domain = status(&["hitchin", "--group", "PSL(3)", "S2(2,2,2,2)"]);
    assert_eq!(domain.status.code(), Some(1));
    assert!(domain.stdout.is_empty() && !domain.stderr.is_empty());
    assert_eq!(status(&["chi", "Q2(3)"]).status.code(), Some(2));
    assert_eq!(status(&[]).status.code(), Some(2));
}
