use std::io::Write;
use std::process::{Command, Output};

use milnor_cli::report::{Report, Status, Value};

fn milnor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_milnor"))
        .args(args)
        .env_remove("MILNOR_BUDGET")
        .env_remove("MILNOR_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Report {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = milnor(&full);
    let text = stdout(&o);
    let report = Report::from_json(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    // lossless round trip
    assert_eq!(report.to_json() + "\n", text);
    report
}

fn text_of(r: &Report, key: &str) -> String {
    r.get(key)
        .unwrap_or_else(|| panic!("missing {key}"))
        .to_string()
}

#[test]
fn link_kervaire_example() {
    let r = json(&["link", "3", "2", "2", "2", "2", "2"]);
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.get("homotopy_sphere"), Some(&Value::Bool(true)));
    assert_eq!(text_of(&r, "sphere_class"), "Kervaire");
}

#[test]
fn link_poincare_sphere_example() {
    let o = milnor(&["link", "2", "3", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for line in [
        "milnor_number: 8",
        "characteristic_polynomial: t^8 + t^7 - t^5 - t^4 - t^3 + t + 1",
        "signature: -8",
        "homology_sphere: true",
        "geometry: spherical",
        "reciprocal_sum: 31/30",
        "casson: -1",
    ] {
        assert!(out.lines().any(|l| l == line), "missing `{line}` in\n{out}");
    }
}

#[test]
fn input_errors_exit_2() {
    for args in [
        vec!["link", "2"],
        vec!["link"],
        vec!["link", "1", "3"],
        vec!["link", "x", "3"],
        vec!["table", "e9"],
        vec!["table", "kervaire", "--n", "4"],
        vec!["curve"],
        vec!["curve", "--terms", "3/0:1"],
        vec!["curve", "--terms", "3/2:1", "--meet", "1 + y"],
        vec!["curve", "--terms", "3/2:1", "--multiplicity", "4"],
        vec!["plumb", "E7"],
        vec!["--json", "--plain", "plumb", "E8"],
    ] {
        let o = milnor(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn error_report_in_json_mode() {
    let o = milnor(&["--json", "link", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let r = Report::from_json(&stdout(&o)).unwrap();
    match r.status {
        Status::Error { exit_code, message } => {
            assert_eq!(exit_code, 2);
            assert!(message.contains("at least two exponents"), "{message}");
        }
        Status::Ok => panic!("expected an error status"),
    }
}

#[test]
fn budget_flag_and_environment() {
    let o = milnor(&["link", "7", "5", "3", "2", "--budget", "47"]);
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_milnor"))
        .args(["link", "7", "5", "3", "2"])
        .env("MILNOR_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    // flag beats environment
    let o = Command::new(env!("CARGO_BIN_EXE_milnor"))
        .args(["link", "7", "5", "3", "2", "--budget", "48"])
        .env("MILNOR_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn json_is_identical_across_worker_counts() {
    let base = milnor(&["--json", "link", "7", "5", "3", "2", "--workers", "1"]);
    for w in ["2", "8"] {
        let o = milnor(&["--json", "link", "7", "5", "3", "2", "--workers", w]);
        assert_eq!(o.stdout, base.stdout, "workers = {w}");
    }
    let env = Command::new(env!("CARGO_BIN_EXE_milnor"))
        .args(["--json", "link", "7", "5", "3", "2"])
        .env("MILNOR_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(env.stdout, base.stdout);
}

#[test]
fn large_polynomials_are_summarized() {
    let r = json(&["link", "7", "5", "3", "2", "--max-degree", "10"]);
    assert!(r.get("spectrum").is_none());
    assert!(text_of(&r, "characteristic_polynomial").starts_with("omitted"));
    assert!(r.get("factorization").is_some());
}

#[test]
fn bp8_table() {
    let r = json(&["table", "bp8"]);
    let Some(Value::List(rows)) = r.get("rows") else {
        panic!("rows")
    };
    assert_eq!(rows.len(), 28);
    let classes: std::collections::BTreeSet<String> = rows
        .iter()
        .map(|row| match row {
            Value::Record(f) => f
                .iter()
                .find(|f| f.key == "class_mod_28")
                .unwrap()
                .value
                .to_string(),
            _ => panic!("record"),
        })
        .collect();
    assert_eq!(classes.len(), 28);
    let wrap = json(&["table", "bp8", "--from", "29", "--to", "29"]);
    let first = json(&["table", "bp8", "--from", "1", "--to", "1"]);
    let class = |r: &Report| match r.get("rows") {
        Some(Value::List(rows)) => match &rows[0] {
            Value::Record(f) => f[3].value.clone(),
            _ => panic!(),
        },
        _ => panic!(),
    };
    assert_eq!(class(&wrap), class(&first));
}

#[test]
fn kervaire_table_alternates() {
    let out = stdout(&milnor(&["table", "kervaire"]));
    let classes: Vec<&str> = out
        .lines()
        .filter_map(|l| l.split("class=").nth(1))
        .collect();
    assert_eq!(
        classes,
        [
            "Kervaire", "Kervaire", "standard", "standard", "Kervaire", "Kervaire", "standard",
            "standard"
        ]
    );
}

#[test]
fn casson_table() {
    let out = stdout(&milnor(&["table", "casson", "--to", "1"]));
    assert!(
        out.contains("exponents=(2,3,5) signature=-8 casson=-1 geometry=spherical"),
        "{out}"
    );
    assert!(
        out.contains("exponents=(2,3,7) signature=-8 casson=-1 geometry=sl2-tilde"),
        "{out}"
    );
}

#[test]
fn curve_examples() {
    let r = json(&["curve", "--terms", "3/2:1"]);
    assert_eq!(text_of(&r, "pairs"), "[(2,3)]");
    assert_eq!(
        r.get("alexander"),
        Some(&Value::Polynomial(vec![
            "1".into(),
            "-1".into(),
            "1".into()
        ]))
    );

    let r = json(&["curve", "--terms", "1:1"]);
    assert_eq!(text_of(&r, "cable"), "unknot");
    assert_eq!(text_of(&r, "alexander"), "1");

    let r = json(&["curve", "--terms", "3/2:1", "--meet", "y"]);
    assert_eq!(text_of(&r, "intersection_multiplicity"), "3");

    let r = json(&["curve", "--terms", "3/2:1", "--meet", "y^2 - 4*x^3"]);
    assert_eq!(text_of(&r, "intersection_multiplicity"), "6");
    let r = json(&["curve", "--terms", "3/2:1", "--meet-terms", "3/2:2"]);
    assert_eq!(text_of(&r, "intersection_multiplicity"), "6");

    let r = json(&["curve", "--terms", "3/2:1", "--meet", "x"]);
    assert_eq!(text_of(&r, "intersection_multiplicity"), "2");

    for same in [
        vec!["curve", "--terms", "3/2:1", "--meet", "y^2 - x^3"],
        vec!["curve", "--terms", "3/2:1", "--meet-terms", "3/2:1"],
    ] {
        let o = milnor(&same);
        assert_eq!(o.status.code(), Some(2), "{same:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("same branch"));
    }
}

#[test]
fn curve_from_quadruple_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# two characteristic exponents\n3 2 1 1\n7 4 1 1").unwrap();
    let path = f.path().to_str().unwrap();
    let r = json(&["curve", "--file", path]);
    assert_eq!(text_of(&r, "pairs"), "[(2,3),(2,7)]");
    assert_eq!(text_of(&r, "cable"), "[(2,3),(2,13)]");
    assert_eq!(text_of(&r, "milnor_number"), "16");
    let o = milnor(&["curve", "--file", "/nonexistent/branch.txt"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn plumb_examples() {
    let r = json(&["plumb", "E8"]);
    assert_eq!(text_of(&r, "determinant"), "1");
    assert_eq!(r.get("homology_sphere"), Some(&Value::Bool(true)));
    assert_eq!(text_of(&r, "signature"), "-8");

    let r = json(&["plumb", "A4"]);
    assert_eq!(text_of(&r, "h1"), "Z/5");
    assert_eq!(text_of(&r, "boundary_euler_characteristic"), "0");
}

#[test]
fn plumb_graph_files() {
    let write = |s: &str| {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(s.as_bytes()).unwrap();
        f
    };
    // resolution graph of (2,3,7): central -1 with arms -2, -3, -7
    let ok = write("v c e=-1\nv a e=-2\nv b e=-3\nv d e=-7\ne c a\ne c b\ne c d\n");
    let r = json(&["plumb", ok.path().to_str().unwrap()]);
    assert_eq!(text_of(&r, "h1"), "0");
    assert_eq!(r.get("negative_definite"), Some(&Value::Bool(true)));

    let cyclic = write("v 1 e=-2\nv 2 e=-2\nv 3 e=-2\ne 1 2\ne 2 3\ne 3 1\n");
    let genus = write("v 1 genus=1 e=-1\n");
    let garbage = write("v 1 e=-2\nedge 1 2\n");
    for f in [&cyclic, &genus, &garbage] {
        let o = milnor(&["plumb", f.path().to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2));
    }
}

#[test]
fn plain_output_is_stable() {
    let a = milnor(&["plumb", "A2"]);
    let b = milnor(&["--plain", "plumb", "A2"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        stdout(&a),
        "vertices: 2\nedges: 1\nmatrix: [[-2, 1], [1, -2]]\ndeterminant: 3\n\
         invariant_factors: [1, 3]\nh1: Z/3\nhomology_sphere: false\nnegative_definite: true\n\
         signature: -2\nboundary_euler_characteristic: 0\n"
    );
}

#[test]
fn help_exits_zero() {
    let o = milnor(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("link"));
}
