use std::process::{Command, Output};

use newton_cond::dump::read_matrix;
use newton_cond::format::{parse_decimal, render_sig};
use newton_cond::report::{checked_report, parse_exact_row, ConditionRecord};
use newton_cond_core::conditioning::inf_norm;
use newton_cond_core::matrices::{build_l, build_l_inverse, build_pascal, MatrixTag};
use newton_cond_core::numerics::ratio;
use proptest::prelude::*;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_newton-cond"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["table1"]).status.code(), Some(0));
    assert_eq!(
        run(&["cond", "--n", "3", "--ell", "abc"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["cond", "--n", "0", "--ell", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["cond", "--n", "3", "--ell", "-1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["growth", "--ell", "0"]).status.code(), Some(2));
    assert_eq!(run(&["perturb", "--eps", "0"]).status.code(), Some(2));
    assert_eq!(run(&["perturb", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(
        run(&["dump", "Q", "--n", "3", "--ell", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["dump", "L", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let err = String::from_utf8(run(&["cond", "--n", "3", "--ell", "1e3"]).stderr).unwrap();
    assert!(err.contains("1e3"));
}

#[test]
fn cond_examples() {
    let text = stdout(&["cond", "--n", "3", "--ell", "1,3"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "n,ell,regime,i_n,norm_L,norm_Linv,kappa_inf,skeel_inv"
    );
    assert!(lines[1].ends_with(",104,27"));
    assert_eq!(lines[2], "3,3,middle,2,16,2,32,27");

    let text = stdout(&["cond", "--n", "2", "--ell", "1/2", "--exact"]);
    let row = parse_exact_row(text.lines().nth(1).unwrap()).unwrap();
    assert_eq!(row.regime, "small");
    let l = ratio(1, 2);
    let brute = inf_norm(&build_l(2, &l).unwrap()) * inf_norm(&build_l_inverse(2, &l).unwrap());
    assert_eq!(row.kappa_inf, brute);

    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "cond", "--n", "3", "--ell", "3", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(json[0]["kappa_inf"], "32");
    assert_eq!(json[0]["i_n"], 2);
}

#[test]
fn decimal_lengths_are_exact() {
    let a = stdout(&["cond", "--n", "4", "--ell", "2.5", "--exact"]);
    let b = stdout(&["cond", "--n", "4", "--ell", "5/2", "--exact"]);
    assert_eq!(a.replace("2.5", "5/2"), b);
}

#[test]
fn table1_parses_back() {
    let text = stdout(&["table1", "--exact"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[1], "3,104,33.5,32,104,67/2,32");
    for line in &lines[1..] {
        let f: Vec<&str> = line.split(',').collect();
        for k in 0..3 {
            let shown = parse_decimal(f[1 + k]).unwrap();
            let exact = parse_decimal(f[4 + k]).unwrap();
            assert_eq!(render_sig(&shown, 5), render_sig(&exact, 5));
        }
    }
    assert!(text.contains("\n19,5.2459e13,6.9906e9,1.4329e9,"));
}

#[test]
fn growth_markers() {
    let text = stdout(&["growth", "--ell", "2,3,8"]);
    assert!(text.contains("\n2,1<l<=2,3.2974,\n"));
    assert!(text.contains("\n3,l>=2,3,optimum\n"));
    assert!(text.contains(",4,lower_crossover\n"));
    assert!(text.contains(",4,pascal_crossover\n"));
    let default = stdout(&["growth"]);
    assert_eq!(default.lines().count(), 1 + 40 + 2);
}

#[test]
fn series_output() {
    let text = stdout(&["series", "--kind", "ratio", "--n", "3,200", "--digits", "8"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,value");
    assert_eq!(lines[1], "3,1.1851852");
    assert!(
        run(&["series", "--kind", "rate", "--n", "3", "--ell", "0"])
            .status
            .code()
            == Some(2)
    );
}

#[test]
fn dump_examples() {
    let text = stdout(&["dump", "pascal", "--n", "4"]);
    assert_eq!(text.lines().next(), Some("# pascal 4 -"));
    assert_eq!(text.lines().nth(5), Some("1,4,6,4,1"));
    let m = read_matrix(&text).unwrap();
    assert_eq!(
        m.matrix,
        build_pascal(4).unwrap().with_tag(MatrixTag::Generic)
    );

    let text = stdout(&["dump", "L", "--n", "3", "--ell", "1"]);
    assert_eq!(text.lines().nth(4), Some("1,1,2/3,2/9"));

    let l3 = stdout(&["dump", "L3", "--n", "3", "--ell", "7"]);
    let l = stdout(&["dump", "L", "--n", "3", "--ell", "3"]);
    assert_eq!(l3.lines().next(), Some("# L3 3 7"));
    assert_eq!(
        l3.lines().skip(1).collect::<Vec<_>>(),
        l.lines().skip(1).collect::<Vec<_>>()
    );
}

#[test]
fn out_flag_writes_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("linv.csv");
    let out = run(&[
        "dump",
        "Linv",
        "--n",
        "5",
        "--ell",
        "3/2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let m = read_matrix(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(m.tag, "Linv");
    assert_eq!(m.length, Some(ratio(3, 2)));
    assert_eq!(
        m.matrix,
        build_l_inverse(5, &ratio(3, 2))
            .unwrap()
            .with_tag(MatrixTag::Generic)
    );
}

#[test]
fn perturb_is_byte_identical_for_a_seed() {
    let args = [
        "perturb", "--n", "12", "--ell", "1", "--trials", "40", "--seed", "7",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = run(&[
        "perturb", "--n", "12", "--ell", "1", "--trials", "40", "--seed", "8",
    ]);
    assert_ne!(a.stdout, c.stdout);
    let json = run(&[
        "perturb", "--n", "12", "--trials", "40", "--seed", "7", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["pipelines"][1]["pipeline"], "rescaled3");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn exact_csv_columns_round_trip(n in 1usize..=30, p in 1i64..200, q in 1i64..20) {
        let l = ratio(p, q);
        let r = checked_report(n, &l).unwrap();
        let row = parse_exact_row(&ConditionRecord::new(&r, 5, true).csv_row()).unwrap();
        prop_assert_eq!(row.ell, l);
        prop_assert_eq!(row.norm_l, r.norm_l);
        prop_assert_eq!(row.norm_linv, r.norm_linv);
        prop_assert_eq!(row.kappa_inf, r.kappa_inf);
        prop_assert_eq!(row.skeel_inv, r.skeel_of_inverse);
    }

    #[test]
    fn dumps_round_trip(n in 1usize..=12, p in 1i64..50, q in 1i64..9) {
        let l = ratio(p, q);
        for kind in ["L", "Linv", "D", "L3"] {
            let m = newton_cond::dump::MatrixKind::build(kind.parse().unwrap(), n, Some(&l)).unwrap();
            let back = read_matrix(&newton_cond::dump::write_matrix(&m, Some(&l))).unwrap();
            prop_assert_eq!(back.matrix, m.with_tag(MatrixTag::Generic));
            prop_assert_eq!(back.length, Some(l.clone()));
        }
    }
}

#[test]
fn single_degree_is_accepted() {
    let text = stdout(&["cond", "--n", "1", "--ell", "1"]);
    assert_eq!(text.lines().nth(1).unwrap().split(',').nth(6), Some("4"));
}
