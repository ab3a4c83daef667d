//! End-to-end command tests: most drive [`wordrep_cli::run`] in process
//! with capture buffers; the environment-variable behavior is exercised
//! through the real binary so the child process owns its environment.

use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use wordrep_core::catalog::load_builtin;
use wordrep_core::graph::{encode_graph6, Graph};

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("wordrep").chain(args.iter().copied());
    let code = wordrep_cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("stdout is UTF-8"),
        String::from_utf8(err).expect("stderr is UTF-8"),
    )
}

const D1_SPLIT: &str = "\
E: a b c d
K: 1 2 3 4 5 6
a: 1 3 5
b: 1 2
c: 3 4
d: 5 6
";

const D1_MINUS_A_SPLIT: &str = "\
E: b c d
K: 1 2 3 4 5 6
b: 1 2
c: 3 4
d: 5 6
";

const P3_SPLIT: &str = "\
E: a c
K: b
a: b
c: b
";

/// Shared on-disk scene: input files, a mined catalog, and the report
/// directory for the counts command, built once.
struct Scene {
    d1: PathBuf,
    d1_minus_a: PathBuf,
    p3: PathBuf,
    catalog: PathBuf,
    reports: PathBuf,
}

fn scene() -> &'static Scene {
    static SCENE: OnceLock<Scene> = OnceLock::new();
    SCENE.get_or_init(|| {
        let dir =
            std::env::temp_dir().join(format!("wordrep-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).expect("scene dir");
        let write = |name: &str, text: &str| -> PathBuf {
            let path = dir.join(name);
            std::fs::write(&path, text).expect("scene file");
            path
        };
        let d1 = write("d1.split", D1_SPLIT);
        let d1_minus_a = write("d1-minus-a.split", D1_MINUS_A_SPLIT);
        let p3 = write("p3.split", P3_SPLIT);

        let catalog = dir.join("catalog.json");
        let (code, _, err) = run_cli(&[
            "mine",
            "--e-max",
            "4",
            "--k-max",
            "7",
            "--out",
            catalog.to_str().expect("utf-8 path"),
        ]);
        assert_eq!(code, 0, "mining the scene catalog failed: {err}");

        let reports = dir.join("reports");
        std::fs::create_dir_all(&reports).expect("reports dir");
        let runs: [(&str, &[&str]); 4] = [
            ("e3.json", &["--e-max", "3", "--k-max", "6"]),
            ("e4.json", &["--e-max", "4", "--k-max", "7"]),
            ("k4.json", &["--e-max", "10", "--k-max", "4"]),
            ("k5.json", &["--e-max", "25", "--k-max", "5", "--adaptive"]),
        ];
        for (file, flags) in runs {
            let mut args = vec!["mine"];
            args.extend_from_slice(flags);
            args.push("--json");
            let (code, out, err) = run_cli(&args);
            assert_eq!(code, 0, "reference run {file} failed: {err}");
            std::fs::write(reports.join(file), out).expect("report file");
        }
        Scene {
            d1,
            d1_minus_a,
            p3,
            catalog,
            reports,
        }
    })
}

fn path_arg(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}

#[test]
fn check_yes_prints_a_labeling_certificate() {
    let s = scene();
    let (code, out, _) = run_cli(&["check", path_arg(&s.d1_minus_a)]);
    assert_eq!(code, 0);
    assert!(out.starts_with("YES"), "unexpected output: {out}");
    assert!(out.contains("K order"), "missing certificate: {out}");
}

#[test]
fn check_no_names_the_catalog_witness() {
    let s = scene();
    let (code, out, _) = run_cli(&[
        "check",
        path_arg(&s.d1),
        "--catalog",
        path_arg(&s.catalog),
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("witness: D1"), "unexpected output: {out}");
    assert!(out.contains("embedding:"), "missing embedding: {out}");
}

#[test]
fn check_no_without_catalog_states_the_exhausted_search() {
    let s = scene();
    let (code, out, _) = run_cli(&["check", path_arg(&s.d1)]);
    assert_eq!(code, 1);
    assert!(
        out.contains("360 clique orders tried"),
        "missing exhaustion note: {out}"
    );
    assert!(out.contains("no witness catalog loaded"), "{out}");
}

#[test]
fn check_json_output_is_identical_across_runs() {
    let s = scene();
    let args = [
        "check",
        path_arg(&s.d1),
        "--catalog",
        path_arg(&s.catalog),
        "--json",
    ];
    let (code_a, out_a, _) = run_cli(&args);
    let (code_b, out_b, _) = run_cli(&args);
    assert_eq!((code_a, code_b), (1, 1));
    assert_eq!(out_a, out_b, "JSON output is not reproducible");
    let value: serde_json::Value = serde_json::from_str(&out_a).expect("valid JSON");
    assert_eq!(value["answer"], "no");
    assert_eq!(value["witness"]["name"], "D1");
    assert!(value["kOrder"].is_null());
}

#[test]
fn represents_accepts_and_rejects_with_a_reason() {
    let s = scene();
    let (code, out, _) = run_cli(&["represents", "a b a c b", path_arg(&s.p3)]);
    assert_eq!(code, 0);
    assert!(out.starts_with("YES"));

    let (code, out, _) = run_cli(&["represents", "a b c", path_arg(&s.p3)]);
    assert_eq!(code, 1);
    assert!(
        out.contains("alternate but are not adjacent"),
        "missing reason: {out}"
    );

    let (code, _, err) = run_cli(&["represents", "a b q", path_arg(&s.p3)]);
    assert_eq!(code, 2, "unknown vertex name must be an input error");
    assert!(err.contains("q"), "diagnostic does not name the vertex: {err}");
}

#[test]
fn findword_prints_a_word_or_unknown() {
    let s = scene();
    let (code, out, _) = run_cli(&["findword", path_arg(&s.p3)]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "a b a c");

    let (code, out, _) =
        run_cli(&["findword", path_arg(&s.p3), "--max-occ", "1"]);
    assert_eq!(code, 1);
    assert_eq!(out.trim(), "UNKNOWN within cap 1");
}

#[test]
fn malformed_input_is_located_to_the_byte() {
    let s = scene();
    let bad = s.d1.parent().unwrap().join("bad.split");
    std::fs::write(&bad, "E: a\nK: 1 2\na: 1 7\n").unwrap();
    let (code, _, err) = run_cli(&["check", path_arg(&bad)]);
    assert_eq!(code, 2);
    assert!(
        err.contains("bad.split:3:6: unknown clique vertex \"7\""),
        "diagnostic does not name file, line, and byte: {err}"
    );
}

#[test]
fn unknown_flags_exit_with_a_usage_error() {
    let (code, _, err) = run_cli(&["check", "--frobnicate", "x"]);
    assert_eq!(code, 2);
    assert!(err.contains("--frobnicate"), "unhelpful diagnostic: {err}");
}

#[test]
fn graph6_input_is_accepted_and_partitioned() {
    let s = scene();
    let dir = s.d1.parent().unwrap();

    let d1_g6 = dir.join("d1.g6");
    let builtin = load_builtin("D1").unwrap();
    std::fs::write(&d1_g6, format!("{}\n", encode_graph6(&builtin.graph))).unwrap();
    let (code, out, _) =
        run_cli(&["check", path_arg(&d1_g6), "--format", "graph6"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("NO"));

    let c5 = dir.join("c5.g6");
    let cycle =
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
    std::fs::write(&c5, format!("{}\n", encode_graph6(&cycle))).unwrap();
    let (code, _, err) = run_cli(&["check", path_arg(&c5), "--format", "graph6"]);
    assert_eq!(code, 2);
    assert!(err.contains("not a split graph"), "{err}");
}

#[test]
fn mine_json_is_byte_identical_across_worker_counts() {
    let base = ["mine", "--e-max", "3", "--k-max", "6", "--json", "--workers"];
    let mut solo = base.to_vec();
    solo.push("1");
    let mut pooled = base.to_vec();
    pooled.push("3");
    let (code_a, out_a, _) = run_cli(&solo);
    let (code_b, out_b, _) = run_cli(&pooled);
    assert_eq!((code_a, code_b), (0, 0));
    assert_eq!(out_a, out_b, "worker count changed the report bytes");
}

#[test]
fn verify_passes_against_the_mined_catalog() {
    let s = scene();
    let (code, out, _) = run_cli(&[
        "verify",
        "--k-max",
        "5",
        "--catalog",
        path_arg(&s.catalog),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict: verified"), "{out}");

    let (code, _, err) = run_cli(&["verify", "--k-max", "5"]);
    assert_eq!(code, 2, "verify without a catalog must be a usage error");
    assert!(err.contains("WORDREP_CATALOG"), "{err}");
}

#[test]
fn replay_reruns_the_recorded_fixtures() {
    let s = scene();
    let fixtures =
        Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures/proof_cases.json");
    let (code, out, _) = run_cli(&[
        "replay",
        "--fixtures",
        path_arg(&fixtures),
        "--catalog",
        path_arg(&s.catalog),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("all passed"), "{out}");
}

#[test]
fn counts_builds_the_comparison_table() {
    let s = scene();
    let (code, out, _) =
        run_cli(&["counts", "--reports", path_arg(&s.reports)]);
    assert_eq!(code, 0);
    assert!(out.contains("difference: 1"), "{out}");
    assert!(out.contains("difference: 0"), "{out}");

    let empty = s.reports.parent().unwrap().join("empty-reports");
    std::fs::create_dir_all(&empty).unwrap();
    let (code, _, err) = run_cli(&["counts", "--reports", path_arg(&empty)]);
    assert_eq!(code, 2, "missing reference runs must be a dependency error");
    assert!(!err.is_empty());
}

#[test]
fn catalog_list_and_show_cover_builtin_and_mined_entries() {
    let s = scene();
    let (code, out, _) =
        run_cli(&["catalog", "list", "--catalog", path_arg(&s.catalog)]);
    assert_eq!(code, 0);
    for name in ["B1", "B2", "B3", "D1"] {
        assert!(out.contains(&format!("builtin {name} ")), "{out}");
    }
    assert!(out.contains("mined M1 "), "{out}");

    let (code, out, _) = run_cli(&["catalog", "show", "B1"]);
    assert_eq!(code, 0);
    assert!(out.contains("graph6:"), "{out}");
    assert!(out.contains("K: c d e"), "{out}");

    let (code, out, _) =
        run_cli(&["catalog", "show", "M2", "--catalog", path_arg(&s.catalog)]);
    assert_eq!(code, 0);
    assert!(out.contains("origin: mined"), "{out}");

    let (code, _, err) = run_cli(&["catalog", "show", "Z9"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn a_consumer_hanging_up_is_not_diagnosed_as_an_error() {
    struct ClosedPipe;
    impl std::io::Write for ClosedPipe {
        fn write(&mut self, _: &[u8]) -> std::io::Result<usize> {
            Err(std::io::Error::from(std::io::ErrorKind::BrokenPipe))
        }
        fn flush(&mut self) -> std::io::Result<()> {
            Ok(())
        }
    }
    let mut err = Vec::new();
    let argv = ["wordrep", "catalog", "list"].map(String::from);
    let code = wordrep_cli::run(argv, &mut ClosedPipe, &mut err);
    assert_eq!(code, 0);
    assert!(err.is_empty(), "spurious diagnostic: {err:?}");
}

#[test]
fn the_environment_variable_supplies_the_default_catalog() {
    let s = scene();
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_wordrep"))
        .args(["check", path_arg(&s.d1)])
        .env("WORDREP_CATALOG", &s.catalog)
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(1));
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.contains("witness: D1"), "{stdout}");

    let output = std::process::Command::new(env!("CARGO_BIN_EXE_wordrep"))
        .args(["check", path_arg(&s.d1)])
        .env_remove("WORDREP_CATALOG")
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(1));
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.contains("no witness catalog loaded"), "{stdout}");
}
