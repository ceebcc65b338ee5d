use std::path::PathBuf;
use std::process::Command;

use gcenter::catalog::{fixture_project, FIXTURES};
use gcenter::project::{emit_report, parse_project, run_suite, serialize_project, Field, ProjectError};
use gcenter::report::Format;

fn fixture(stem: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{stem}.toml"));
    std::fs::read_to_string(path).unwrap()
}

const KZ2_MOD3: &str = r#"
field = "mod 3"

[hopf.kz2]
basis = ["e", "g"]
mult = [["1", "0", "0", "1"], ["0", "1", "1", "0"]]
unit = ["1", "0"]
comult = [["1", "0"], ["0", "0"], ["0", "0"], ["0", "1"]]
counit = ["1", "1"]
antipode = [["1", "0"], ["0", "1"]]

[automorphism.id]
hopf = "kz2"
map = [["1", "0"], ["0", "1"]]
"#;

#[test]
fn bundled_fixtures_match_the_catalog() {
    for stem in FIXTURES {
        let parsed = parse_project(&fixture(stem)).unwrap();
        assert!(parsed == fixture_project(stem).unwrap(), "{stem}");
        assert_eq!(serialize_project(&parsed), fixture(stem), "{stem}");
    }
}

#[test]
fn sweedler_project_defines_h4_flip_and_z2() {
    let p = parse_project(&fixture("sweedler")).unwrap();
    assert_eq!(p.hopf["H4"].dim(), 4);
    let flip = &p.automorphisms["f_1"];
    assert_eq!(flip.map().get(2, 2).to_string(), "-1");
    assert_eq!(p.actions["sweedler_z2"].data.group().order(), 2);
    assert!(run_suite(&p, "hopf").unwrap().all_pass());
}

#[test]
fn empty_project_is_empty() {
    let p = parse_project("").unwrap();
    assert_eq!(p.field, Field::Rational);
    assert!(p.hopf.is_empty() && p.actions.is_empty() && p.modules.is_empty());
    let r = run_suite(&p, "all").unwrap();
    assert!(r.is_empty());
    assert!(emit_report(&r, Format::Machine).contains("summary total=0 passed=0 failed=0"));
    assert_eq!(r.exit_status(), 0);
}

#[test]
fn undefined_automorphism_is_named_with_its_position() {
    let text = format!("{KZ2_MOD3}\n[action.a]\ngroup = \"Z1\"\nautomorphisms = [\"id\"]\n\n[group.Z1]\nlabels = [\"e\"]\ntable = [[\"e\"]]\n\n[yd.m]\ntwist = \"nope\"\naction = []\ncoaction = []\n");
    match parse_project(&text).unwrap_err() {
        ProjectError::UnresolvedReference { kind, name, line, col } => {
            assert_eq!((kind, name.as_str()), ("automorphism", "nope"));
            assert_eq!(text.lines().nth(line - 1).unwrap(), "twist = \"nope\"");
            assert_eq!(col, 9);
        }
        e => panic!("{e:?}"),
    }
}

#[test]
fn bad_scalars_and_syntax_are_located() {
    let text = KZ2_MOD3.replace("counit = [\"1\", \"1\"]", "counit = [\"1\", \"one\"]");
    match parse_project(&text).unwrap_err() {
        ProjectError::BadScalar { text: t, line, .. } => {
            assert_eq!(t, "one");
            assert!(text.lines().nth(line - 1).unwrap().starts_with("counit"));
        }
        e => panic!("{e:?}"),
    }
    let rational = "[hopf.h]\nbasis = [\"e\"]\nmult = [[\"1 mod 3\"]]\nunit = [\"1\"]\ncomult = [[\"1\"]]\ncounit = [\"1\"]\n";
    assert!(matches!(parse_project(rational), Err(ProjectError::BadScalar { line: 3, .. })));
    assert!(matches!(parse_project("field = \"mod 4\"\n"), Err(ProjectError::Invalid { line: 1, .. })));
    assert!(matches!(parse_project("x = [\n"), Err(ProjectError::Parse { .. })));
    assert!(matches!(parse_project("[hopf.h]\nbogus = 1\n"), Err(ProjectError::Parse { line: 2, .. })));
    assert!(matches!(parse_project("suites = [\"everything\"]\n"), Err(ProjectError::UnknownSuite(_))));
}

#[test]
fn finite_field_projects_round_trip_and_validate() {
    let p = parse_project(KZ2_MOD3).unwrap();
    assert_eq!(p.field, Field::Mod(3));
    assert!(p.hopf["kz2"].unit()[0].modulus() == Some(3));
    let again = parse_project(&serialize_project(&p)).unwrap();
    assert!(again == p);
    let r = run_suite(&p, "hopf").unwrap();
    assert!(r.all_pass() && !r.is_empty(), "{r}");
}

#[test]
fn unknown_suite_is_an_error() {
    let p = parse_project("").unwrap();
    assert_eq!(run_suite(&p, "everything").unwrap_err(), ProjectError::UnknownSuite("everything".into()));
}

#[test]
fn intro_projects_pass_every_suite() {
    for stem in ["intro_s3", "intro_z4"] {
        let r = run_suite(&parse_project(&fixture(stem)).unwrap(), "all").unwrap();
        assert!(r.all_pass(), "{stem}: {:?}", r.failures().collect::<Vec<_>>());
    }
}

#[test]
fn corrupted_project_fails_with_witnesses() {
    let r = run_suite(&parse_project(&fixture("corrupted")).unwrap(), "all").unwrap();
    assert_eq!(r.exit_status(), 1);
    let assoc = r.find("hopf.associativity").unwrap();
    assert_eq!(assoc.witness.as_deref(), Some("(g, x, x)"));
    let text = emit_report(&r, Format::Text);
    assert!(text.contains("witness: (g, x, x)"));
    assert!(r.failures().all(|c| c.witness.is_some()));
}

#[test]
fn twisted_sweedler_reports_the_closed_form_discrepancy() {
    let r = run_suite(&parse_project(&fixture("sweedler_twisted")).unwrap(), "all").unwrap();
    let failed: Vec<_> = r.failures().map(|c| c.id.as_str()).collect();
    assert_eq!(failed, ["center.crossed_printed_form", "center.crossed_printed_form"]);
    assert!(r.verdict("center.crossed_amended_form"));
}

#[test]
fn declared_center_objects_join_the_suites() {
    let p = parse_project(&fixture("z2_on_kz3")).unwrap();
    let (_, entry) = p.modules.iter().next().unwrap();
    assert_eq!(entry.center.as_ref().map(|(_, g)| g.as_str()), Some("1"));
    let r = run_suite(&p, "center").unwrap();
    assert!(r.all_pass());
    assert!(r.checks.iter().any(|c| c.operands.contains("reg_1")));
}

#[test]
fn reports_are_identical_across_thread_counts() {
    let p = parse_project(&fixture("sweedler")).unwrap();
    let run = |threads| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| emit_report(&run_suite(&p, "all").unwrap(), Format::Machine))
    };
    let one = run(1);
    assert_eq!(one, run(4));
    assert_eq!(one, run(1));
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gcenter")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn cli_exit_statuses() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let path = |s: &str| dir.join(format!("{s}.toml")).to_string_lossy().into_owned();
    let (code, out) = cli(&["--project", &path("intro_z4"), "--suite", "action", "--format", "machine"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("status=pass\n"));
    let (code, out) = cli(&["--project", &path("corrupted"), "--suite", "hopf"]);
    assert_eq!(code, 1);
    assert!(out.contains("witness:"));
    assert_eq!(cli(&["--project", &path("intro_z4"), "--suite", "nonsense"]).0, 2);
    assert_eq!(cli(&["--project", "/nonexistent.toml"]).0, 2);
    assert_eq!(cli(&["--suite", "all"]).0, 2);
}
