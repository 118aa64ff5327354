use parhol::catalog::Bounds;
use parhol::cli::{run, HolonomyReport, Outcome, Suite, VerificationSummary, EXIT_OK, EXIT_USAGE};
use parhol::embed::EmbeddingReport;
use parhol::orbit::OrbitReport;

fn parhol(args: &[&str]) -> Outcome {
    run(std::iter::once("parhol").chain(args.iter().copied()))
}

#[test]
fn dim_eiii() {
    let out = parhol(&["dim", "EIII"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "N_1 = 26, dim = 16, codim = 10\n");
}

#[test]
fn dim_higher_degree_reports_bounds() {
    let out = parhol(&["dim", "Quadric(3)", "--deg", "2"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("N_2 = 13, dim = 3, codim = 10\n"), "{}", out.stdout);
    assert!(out.stdout.contains("(equality)"));
}

#[test]
fn holonomy_of_diii6() {
    let out = parhol(&["holonomy", "DIII(6)"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("orbit: first canonical embedding of AIII(2,4)"), "{}", out.stdout);
    // DIII(4) is presented as Quadric(6)
    assert!(out.stdout.contains("normal holonomy: Quadric(6) (unique"), "{}", out.stdout);
}

#[test]
fn holonomy_reports_slice_resolution() {
    let out = parhol(&["holonomy", "DIII(7)", "--json"]);
    assert_eq!(out.code, EXIT_OK);
    let r: HolonomyReport = serde_json::from_str(&out.stdout).unwrap();
    assert!(r.holonomy.needed_slice);
    assert_eq!(r.holonomy.slice_dim, Some(25));
    assert_eq!(r.holonomy.holonomy.to_string(), "DIII(5)");
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["dim", "AIII(0,3)"][..],
        &["dim", "Quadric(4)"],
        &["dim", "Foo(3)"],
        &["dim", "EIII", "--deg", "0"],
        &["holonomy", "CP(3)"],
        &["verify", "nothing"],
        &["verify", "para", "--bounds", "ci=x"],
        &["orbit", "Plucker(3)"],
        &[],
    ] {
        let out = parhol(args);
        assert_eq!(out.code, EXIT_USAGE, "{args:?}: {out:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn help_exits_zero() {
    let out = parhol(&["--help"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("verify"));
}

#[test]
fn verify_para_default_bounds() {
    let out = parhol(&["verify", "para", "--json"]);
    assert_eq!(out.code, EXIT_OK);
    let s: VerificationSummary = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(s.suite, Suite::Para);
    assert!(s.failures.is_empty());
    assert_eq!(s.bounds, Bounds::default());
    assert_eq!(serde_json::to_string_pretty(&s).unwrap() + "\n", out.stdout);
}

#[test]
fn verify_all_small_bounds() {
    let out = parhol(&["verify", "all", "--bounds", "aiii=6,ci=4,diii=7,quadric=6", "--json"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    let all: Vec<VerificationSummary> = serde_json::from_str(&out.stdout).unwrap();
    let names: Vec<&str> = all.iter().map(|s| s.suite.name()).collect();
    assert_eq!(names, ["table2", "table1", "para", "alto", "orbits"]);
    assert!(all.iter().all(|s| s.passed() && s.entries_checked > 0));
}

#[test]
fn text_output_is_deterministic() {
    let a = parhol(&["verify", "table1", "--bounds", "aiii=8,ci=4,diii=7,quadric=6"]);
    let b = parhol(&["verify", "table1", "--bounds", "aiii=8,ci=4,diii=7,quadric=6"]);
    assert_eq!(a, b);
    assert!(a.stdout.starts_with("table1: "));
    assert!(a.stdout.contains("(PASS)"));
}

#[test]
fn catalog_listing() {
    let out = parhol(&["catalog", "--bounds", "aiii=3,ci=3,diii=5,quadric=3"]);
    assert_eq!(out.code, EXIT_OK);
    let first: Vec<&str> = out.stdout.lines().map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(first, ["AIII(1,1)", "AIII(1,2)", "CI(3)", "DIII(5)", "Quadric(3)", "EIII", "EVII"]);
}

#[test]
fn json_reports_roundtrip() {
    let out = parhol(&["dim", "EVII", "--deg", "3", "--json"]);
    let r: EmbeddingReport = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", out.stdout);

    let out = parhol(&["orbit", "Segre(3,3)", "--json"]);
    assert_eq!(out.code, EXIT_OK);
    let r: OrbitReport = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(r.slice.commutant_dim, 1);
    assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", out.stdout);

    let out = parhol(&["holonomy", "EVII", "--json"]);
    let r: HolonomyReport = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(r.holonomy.holonomy.to_string(), "Quadric(10)");
    assert_eq!(serde_json::to_string_pretty(&r).unwrap() + "\n", out.stdout);
}
