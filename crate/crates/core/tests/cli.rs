use media_accountability::cli::run;

const CANON: [&str; 12] = [
    "--sigma", "0.05", "--pi", "0.5", "--q", "0.7", "--k", "0.1", "--s", "1", "--uc", "0.4",
];

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn invoke(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("media-accountability").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn canon(cmd: &[&str], phi: &str) -> Run {
    let mut args = cmd.to_vec();
    args.extend(CANON);
    if !phi.is_empty() {
        args.extend(["--phi", phi]);
    }
    invoke(&args)
}

#[test]
fn classify_reports_each_canonical_regime() {
    for (phi, regime, profile) in [
        ("0.3", "AccountabilityListenBoth", "#17"),
        ("0.6", "NoAccountabilitySelectOnAlt", "#13"),
        ("0.9", "AccountabilityMainstreamOnly", "#19"),
    ] {
        let r = canon(&["classify"], phi);
        assert_eq!(r.code, 0, "{}", r.err);
        assert!(r.out.contains(&format!("regime: {regime}")), "{}", r.out);
        assert!(r.out.contains(profile), "{}", r.out);
        assert!(r.out.contains("phi_e             0.5"), "{}", r.out);
    }
}

#[test]
fn out_of_range_parameter_is_a_usage_error_naming_the_field() {
    let r = invoke(&[
        "classify", "--sigma", "0.05", "--pi", "0.5", "--q", "0.4", "--k", "0.1", "--s", "1",
        "--uc", "0.4", "--phi", "0.3",
    ]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("q"), "{}", r.err);
    assert!(r.out.is_empty());
}

#[test]
fn missing_parameter_and_bad_flags_exit_2() {
    assert_eq!(invoke(&["classify", "--phi", "0.3"]).code, 2);
    assert_eq!(invoke(&["frobnicate"]).code, 2);
    assert_eq!(canon(&["sweep", "--vary", "nope"], "0.3").code, 2);
    assert_eq!(canon(&["sweep", "--steps", "0"], "0.3").code, 2);
    assert_eq!(
        canon(&["simulate", "--n", "0", "--seed", "1"], "0.3").code,
        2
    );
}

#[test]
fn sweep_emits_header_and_one_row_per_step() {
    let r = canon(&["sweep", "--steps", "101"], "0.3");
    assert_eq!(r.code, 0, "{}", r.err);
    let lines: Vec<&str> = r.out.lines().collect();
    assert_eq!(lines.len(), 102);
    assert!(lines[0].starts_with("phi,regime,phi_e,phi_v"));
    assert!(lines[1].starts_with("0,AccountabilityListenBoth,"));
    assert!(lines[101].starts_with("1,AccountabilityMainstreamOnly,"));
    let transitions: Vec<&str> = r
        .err
        .lines()
        .filter(|l| l.starts_with("transition"))
        .collect();
    assert_eq!(transitions.len(), 2, "{}", r.err);
    assert!(transitions[0].contains("(0.49, 0.5]"), "{}", transitions[0]);
    assert!(
        transitions[1].contains("(0.66, 0.67]"),
        "{}",
        transitions[1]
    );
}

#[test]
fn single_step_sweep_has_no_transitions() {
    let r = canon(
        &["sweep", "--steps", "1", "--from", "0.3", "--to", "0.3"],
        "",
    );
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out.lines().count(), 2);
    assert!(!r.err.contains("transition"));
}

#[test]
fn cheap_effort_sweep_has_one_transition() {
    let mut args = vec!["sweep"];
    args.extend(CANON.iter().map(|a| if *a == "0.1" { "0.01" } else { a }));
    let r = invoke(&args);
    assert_eq!(r.code, 0, "{}", r.err);
    let transitions: Vec<&str> = r
        .err
        .lines()
        .filter(|l| l.starts_with("transition"))
        .collect();
    assert_eq!(transitions.len(), 1, "{}", r.err);
    assert!(transitions[0].contains("AccountabilityListenBoth -> AccountabilityMainstreamOnly"));
}

#[test]
fn sweep_over_another_field() {
    let r = canon(
        &[
            "sweep", "--vary", "uc", "--from", "0", "--to", "0.8", "--steps", "9",
        ],
        "0.3",
    );
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.starts_with("uc,regime,"));
    assert_eq!(r.out.lines().count(), 10);
}

#[test]
fn verify_confirms_the_classifier() {
    for phi in ["0", "0.3", "0.6", "0.9", "1"] {
        let r = canon(&["verify", "--expect-classifier"], phi);
        assert_eq!(r.code, 0, "phi {phi}: {}{}", r.out, r.err);
        assert!(r.out.contains("is an equilibrium"), "{}", r.out);
    }
    let r = canon(&["verify"], "0.6");
    assert!(r.out.contains("#13"), "{}", r.out);
}

#[test]
fn simulate_is_deterministic_in_seed() {
    let args = [
        "simulate",
        "--n",
        "20000",
        "--seed",
        "7",
        "--profile",
        "listen",
    ];
    let a = canon(&args, "0.3");
    let b = canon(&args, "0.3");
    assert_eq!(a.code, 0, "{}", a.err);
    assert_eq!(a.out, b.out);
    let c = canon(
        &[
            "simulate",
            "--n",
            "20000",
            "--seed",
            "8",
            "--profile",
            "listen",
        ],
        "0.3",
    );
    assert_ne!(a.out, c.out);
    let lines: Vec<&str> = a.out.lines().collect();
    assert_eq!(
        lines[0],
        "kind,profile,n,seed,p_high_retained,p_low_retained,p_subversive_retained,welfare"
    );
    assert!(lines[1].starts_with("empirical,17,20000,7,"));
    assert!(lines[2].starts_with("theoretical,17,"));
}

#[test]
fn config_file_supplies_parameters_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.cfg");
    std::fs::write(
        &path,
        "# canonical point\nsigma = 0.05\npi = 0.5\nq = 0.7\nk = 0.1\ns = 1\nu_c = 0.4\nphi = 0.3\n",
    )
    .unwrap();
    let cfg = path.to_str().unwrap();
    let r = invoke(&["classify", "--config", cfg]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("AccountabilityListenBoth"));
    let r = invoke(&["classify", "--config", cfg, "--phi", "0.9"]);
    assert!(r.out.contains("AccountabilityMainstreamOnly"), "{}", r.out);

    std::fs::write(&path, "sigma = 0.05\nbogus = 1\n").unwrap();
    assert_eq!(invoke(&["classify", "--config", cfg]).code, 2);
    assert_eq!(
        invoke(&["classify", "--config", "/nonexistent/p.cfg"]).code,
        2
    );
}

#[test]
fn out_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let r = canon(
        &["sweep", "--steps", "11", "--out", path.to_str().unwrap()],
        "0.3",
    );
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written.lines().count(), 12);
}
