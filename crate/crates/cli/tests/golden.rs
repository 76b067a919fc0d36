//! Golden-report matrix: every shipped invocation must produce byte-identical
//! JSON across runs, with the contracted exit codes. Set `BLESS=1` to
//! regenerate the golden files after an intentional report change.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superw22"))
        .args(args)
        .current_dir(data_dir())
        .output()
        .expect("binary runs")
}

struct Case {
    name: &'static str,
    args: &'static [&'static str],
    exit: i32,
}

const MATRIX: &[Case] = &[
    Case {
        name: "bracket_l2_l3",
        args: &["bracket", "L[2]", "L[3]"],
        exit: 0,
    },
    Case {
        name: "bracket_zero",
        args: &["bracket", "L[2]", "H[1]"],
        exit: 0,
    },
    Case {
        name: "bracket_complex",
        args: &["bracket", "(3/5+4/5i)*G[0]", "G[1]"],
        exit: 0,
    },
    Case {
        name: "jacobi_w4",
        args: &["jacobi", "--window", "4"],
        exit: 0,
    },
    Case {
        name: "skew_w6",
        args: &["skew", "--window", "6"],
        exit: 0,
    },
    Case {
        name: "generators_w6",
        args: &["generators", "--window", "6"],
        exit: 0,
    },
    Case {
        name: "module_aab_w3",
        args: &[
            "module-check",
            "--family",
            "Aab",
            "--a",
            "2/3",
            "--b",
            "5/7",
            "--window",
            "3",
        ],
        exit: 0,
    },
    Case {
        name: "module_aalpha_w3",
        args: &[
            "module-check",
            "--family",
            "Aalpha",
            "--a",
            "1",
            "--window",
            "3",
        ],
        exit: 0,
    },
    Case {
        name: "module_oneside_g_w1",
        args: &[
            "module-check",
            "--family",
            "Aab",
            "--a",
            "2/3",
            "--b",
            "5/7",
            "--a2",
            "2/3",
            "--b2",
            "17/14",
            "--coeffs",
            "oneside_g.coeffs",
            "--window",
            "1",
        ],
        exit: 0,
    },
    Case {
        name: "module_constant_f_fails_w1",
        args: &[
            "module-check",
            "--family",
            "Aab",
            "--a",
            "2/3",
            "--b",
            "5/7",
            "--coeffs",
            "constant_f.coeffs",
            "--window",
            "1",
        ],
        exit: 1,
    },
    Case {
        name: "classify_generic_w6",
        args: &[
            "classify", "--a", "2/3", "--b", "5/7", "--a2", "2/3", "--b2", "17/14", "--window", "6",
        ],
        exit: 0,
    },
    Case {
        name: "involution_plus_w5",
        args: &["involution-check", "--spec", "plus.spec", "--window", "5"],
        exit: 0,
    },
    Case {
        name: "involution_minus_w5",
        args: &["involution-check", "--spec", "minus.spec", "--window", "5"],
        exit: 0,
    },
    Case {
        name: "involution_perturbed_w3",
        args: &[
            "involution-check",
            "--spec",
            "perturbed.spec",
            "--window",
            "3",
        ],
        exit: 1,
    },
    Case {
        name: "unitary_pass_w6",
        args: &[
            "unitary",
            "--spec",
            "unitary.spec",
            "--a",
            "1/3",
            "--b=-1/2+2/5i",
            "--window",
            "6",
        ],
        exit: 0,
    },
    Case {
        name: "unitary_infeasible_w6",
        args: &[
            "unitary",
            "--spec",
            "unitary.spec",
            "--a",
            "1/3",
            "--b",
            "5/7",
            "--window",
            "6",
        ],
        exit: 1,
    },
];

#[test]
fn golden_reports_are_byte_identical() {
    let bless = std::env::var_os("BLESS").is_some();
    let mut failures = Vec::new();
    for case in MATRIX {
        let out = run(case.args);
        let stdout = String::from_utf8(out.stdout).expect("utf-8 report");
        assert_eq!(
            out.status.code(),
            Some(case.exit),
            "{}: wrong exit code; stderr: {}",
            case.name,
            String::from_utf8_lossy(&out.stderr)
        );
        let path = golden_dir().join(format!("{}.json", case.name));
        if bless {
            std::fs::create_dir_all(golden_dir()).unwrap();
            std::fs::write(&path, &stdout).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("{}: missing golden file ({})", case.name, e));
        if stdout != expected {
            failures.push(case.name);
        }
        // Schema round trip: parsing and re-serializing reproduces the bytes.
        let value: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
        assert_eq!(
            format!("{:#}\n", value),
            stdout,
            "{}: JSON round trip",
            case.name
        );
        println!("acceptance 8 case {}: ok", case.name);
    }
    assert!(failures.is_empty(), "golden mismatches: {:?}", failures);
    if !bless {
        println!("acceptance 8 (CLI golden report matrix): pass");
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = &[
        "module-check",
        "--family",
        "Aab",
        "--a",
        "2/3",
        "--b",
        "5/7",
        "--window",
        "3",
    ];
    let first = run(args);
    let second = run(args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn json_flag_writes_the_same_bytes() {
    let dir = std::env::temp_dir().join("superw22-golden-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bracket.json");
    let out = run(&["bracket", "L[2]", "L[3]", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let on_disk = std::fs::read(&path).unwrap();
    assert_eq!(on_disk, out.stdout);
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let out = run(&["bracket", "L[2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["bracket", "L[2", "L[3]"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("error"), "stderr: {}", err);

    let out = run(&["classify", "--a", "x", "--b", "0", "--a2", "0", "--b2", "0"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["involution-check", "--spec", "no-such-file.spec"]);
    assert_eq!(out.status.code(), Some(2));
}
