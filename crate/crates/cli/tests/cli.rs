use std::process::Command;

use archipi_cli::{run_args, EXIT_NO_BOUND, EXIT_PRECISION, EXIT_USAGE};

fn run(args: &[&str]) -> String {
    let mut full = vec!["archipi"];
    full.extend_from_slice(args);
    run_args(full).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    let mut full = vec!["archipi"];
    full.extend_from_slice(args);
    run_args(full).unwrap_err().code
}

#[test]
fn bounds_text() {
    let out = run(&["bounds", "--doublings", "5", "--digits", "8"]);
    assert!(out.contains("3.14103195") && out.contains("3.14271460"), "{out}");
    let out = run(&["bounds", "--doublings", "1", "--digits", "8"]);
    assert!(out.contains("c_n = 3.00000000") && out.contains("3.46410161"), "{out}");
    let out = run(&["bounds", "--doublings", "13", "--digits", "12"]);
    assert!(
        out.contains("3.141592645034") && out.contains("3.141592670702"),
        "{out}"
    );
}

#[test]
fn bounds_csv_and_json() {
    let csv = run(&["bounds", "--format", "csv"]);
    assert_eq!(
        csv,
        "n,c_lo,c_hi,C_lo,C_hi\n96,3.14103195,3.14103196,3.14271459,3.14271460\n"
    );
    let json: serde_json::Value = serde_json::from_str(&run(&["bounds", "--format", "json"])).unwrap();
    assert_eq!(json["command"], "bounds");
    assert_eq!(json["parameters"]["doublings"], 5);
    assert_eq!(json["results"]["n"], 96);
    assert_eq!(json["results"]["C"]["hi"], "3.14271460");
}

#[test]
fn json_key_order_is_stable() {
    let out = run(&["bounds", "--format", "json"]);
    let keys: Vec<usize> = ["\"command\"", "\"parameters\"", "\"results\""]
        .iter()
        .map(|k| out.find(k).unwrap())
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn table_rows() {
    let out = run(&["table", "--max-doublings", "5", "--digits", "8"]);
    assert_eq!(out.lines().filter(|l| l.starts_with("n = ")).count(), 6);
    assert!(out.contains("48·√(2−√(2+√(2+√3)))/2"));
    for v in [
        "2.59807621",
        "5.19615242",
        "3.10582854",
        "3.21539031",
        "3.13262861",
        "3.15965994",
        "3.13935020",
        "3.14608622",
    ] {
        assert!(out.contains(v), "{v}");
    }
    let single = run(&["table", "--max-doublings", "0"]);
    assert_eq!(single.lines().filter(|l| l.starts_with("n = ")).count(), 1);
    assert!(single.starts_with("n = 3\n"));
}

#[test]
fn cf_value_and_bound() {
    let out = run(&["cf", "--value", "3.14"]);
    assert!(out.contains("[3;7,7]") && out.contains("3/1, 22/7, 157/50"), "{out}");
    let out = run(&["cf", "--from-bound", "lower", "--doublings", "5", "--digits", "8"]);
    assert!(out.contains("[3;7,11,25,1,25,1,27,13]"), "{out}");
    assert!(out.contains("245/78") && out.contains("below c_96"), "{out}");
    let out = run(&["cf", "--value", "3.14159267"]);
    assert!(out.contains("333/106, 355/113"), "{out}");
}

#[test]
fn approx_pairs() {
    assert!(run(&["approx"]).starts_with("245/78 < pi < 22/7\n"));
    assert!(run(&["approx", "--den-cap", "7"]).starts_with("3/1 < pi < 22/7\n"));
    let zu = run(&["approx", "--doublings", "13", "--digits", "8", "--den-cap", "200"]);
    assert!(zu.starts_with("333/106 < pi < 355/113\n"), "{zu}");
}

#[test]
fn series_report() {
    let out = run(&["series", "--series", "leibniz", "--terms", "3", "--digits", "8"]);
    assert_eq!(out.lines().count(), 3);
    assert!(out.contains("3.46666667 (52/15)"), "{out}");
    let all = run(&["series", "--terms", "2"]);
    assert_eq!(all.lines().count(), 10);
    let viete = run(&["series", "--series", "viete", "--terms", "3", "--digits", "6"]);
    for v in ["2.828427", "3.061467", "3.121445"] {
        assert!(viete.contains(v), "{viete}");
    }
}

#[test]
fn fig3_export() {
    let out = run(&["export-fig3", "--max-doublings", "5", "--digits", "8"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,c_n,c_n_hi,C_n,C_n_hi");
    assert_eq!(lines.len(), 1 + 6 + 4);
    assert_eq!(lines[6], "96,3.14103195,3.14103196,3.14271459,3.14271460");
    for (line, label) in lines[7..].iter().zip(["22/7", "223/71", "245/78", "pi_ref"]) {
        assert!(line.starts_with(&format!("{label},")));
    }
    assert!(!out.contains('\r'));
}

#[test]
fn error_codes() {
    assert_eq!(exit_code(&["cf", "--value", "3.1.4"]), EXIT_USAGE);
    assert_eq!(exit_code(&["cf", "--value", "-2"]), EXIT_USAGE);
    assert_eq!(exit_code(&["cf"]), EXIT_USAGE);
    assert_eq!(exit_code(&["cf", "--value", "3", "--from-bound", "lower"]), EXIT_USAGE);
    assert_eq!(exit_code(&["bounds", "--doublings", "x"]), EXIT_USAGE);
    assert_eq!(exit_code(&["series", "--series", "machin"]), EXIT_USAGE);
    assert_eq!(exit_code(&["bounds", "--max-precision", "12"]), EXIT_PRECISION);
    assert_eq!(exit_code(&["table", "--max-doublings", "61"]), EXIT_PRECISION);
    assert_eq!(exit_code(&["approx", "--den-cap", "6"]), EXIT_NO_BOUND);
}

#[test]
fn binary_exit_status_and_streams() {
    let bin = env!("CARGO_BIN_EXE_archipi");
    let ok = Command::new(bin).args(["approx"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), run(&["approx"]));
    let no_bound = Command::new(bin).args(["approx", "--den-cap", "6"]).output().unwrap();
    assert_eq!(no_bound.status.code(), Some(4));
    assert!(no_bound.stdout.is_empty());
    assert!(!no_bound.stderr.is_empty());
    let bad = Command::new(bin).args(["bounds", "--format", "xml"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let limit = Command::new(bin)
        .args(["--max-precision", "5", "bounds"])
        .output()
        .unwrap();
    assert_eq!(limit.status.code(), Some(3));
}

#[test]
fn repeated_runs_are_identical() {
    for args in [
        &["table", "--format", "json"][..],
        &["export-fig3"],
        &["series"],
        &["cf", "--from-bound", "upper"],
    ] {
        assert_eq!(run(args), run(args));
    }
}
