use std::process::Command as Process;

use kesten_cli::{parse_args, run_with_budget, Command, MomentArgs, SeqArgs, VerifyArgs, VerifyTarget};
use kesten_core::identities::IdentityId;
use kesten_core::moments::MomentMethod;
use kesten_core::sequences::SequenceId;
use kesten_core::Rational;
use serde_json::{json, Value};

fn kesten(args: &[&str], budget: Option<&str>) -> (i32, Value, String) {
    let mut cmd = Process::new(env!("CARGO_BIN_EXE_kesten"));
    cmd.args(args);
    match budget {
        Some(b) => cmd.env("KESTEN_EVAL_BUDGET", b),
        None => cmd.env_remove("KESTEN_EVAL_BUDGET"),
    };
    let out = cmd.output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(stdout.trim()).unwrap_or(Value::Null);
    (out.status.code().unwrap(), json, String::from_utf8(out.stderr).unwrap())
}

fn parse(args: &[&str]) -> Command {
    parse_args(std::iter::once("kesten").chain(args.iter().copied())).unwrap()
}

#[test]
fn parses_the_documented_examples() {
    assert_eq!(
        parse(&["seq", "--name", "catalan", "--count", "5"]),
        Command::Seq(SeqArgs { name: SequenceId::Catalan, count: Some(5), start: None, row: None, col: None })
    );
    assert_eq!(
        parse(&["moment", "--p", "3", "--r", "2", "--m", "2", "--method", "sform"]),
        Command::Moment(MomentArgs {
            p: Rational::from(3),
            r: Rational::from(2),
            m: 2,
            method: MomentMethod::SForm,
            tol: None
        })
    );
    assert_eq!(
        parse(&["verify", "--id", "prop1i", "--m-max", "15"]),
        Command::Verify(VerifyArgs { id: VerifyTarget::One(IdentityId::Prop1i), m_max: Some(15) })
    );
}

#[test]
fn rejects_bad_input_with_status_2() {
    for args in [
        vec!["frobnicate"],
        vec!["seq", "--name", "primes", "--count", "3"],
        vec!["moment", "--p", "3/0", "--r", "2", "--m", "1"],
        vec!["moment", "--p", "x", "--r", "2", "--m", "1"],
        vec!["moment", "--p", "3", "--r", "2", "--m", "1", "--method", "simpson"],
        vec!["moment", "--p", "3", "--r", "2"],
        vec!["verify", "--id", "ex9"],
        vec!["hankel", "--family", "kestenOdd", "--t", "1"],
    ] {
        let (code, json, stderr) = kesten(&args, None);
        assert_eq!(code, 2, "{args:?}");
        assert_eq!(json, Value::Null, "{args:?}");
        assert!(!stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn sequences() {
    assert_eq!(kesten(&["seq", "--name", "catalan", "--count", "5"], None).1, json!(["1", "1", "2", "5", "14"]));
    assert_eq!(
        kesten(&["seq", "--name", "fine", "--count", "7"], None).1,
        json!(["1", "0", "1", "2", "6", "18", "57"])
    );
    assert_eq!(
        kesten(&["seq", "--name", "lucas", "--start", "-2", "--count", "4"], None).1,
        json!(["3", "-1", "2", "1"])
    );
    assert_eq!(kesten(&["seq", "--name", "triangleT", "--row", "3"], None).1, json!(["1", "3", "5", "5"]));
    assert_eq!(kesten(&["seq", "--name", "triangleB", "--row", "3", "--col", "1"], None).1, json!(["5"]));
    let (code, json, _) = kesten(&["seq", "--name", "catalan", "--start", "-1", "--count", "2"], None);
    assert_eq!((code, json["error"].as_str()), (2, Some("index_out_of_range")));
    assert_eq!(kesten(&["seq", "--name", "triangleT", "--count", "3"], None).0, 2);
}

#[test]
fn moment_output_shape() {
    let (code, json, _) = kesten(&["moment", "--p", "3", "--r", "2", "--m", "2", "--method", "closed"], None);
    assert_eq!(code, 0);
    assert_eq!(serde_json::to_string(&json).unwrap(), r#"{"m":2,"method":"closed","value":"15/1"}"#);
}

/// Every exact method gives the same value at (3, 2, m = 3); the series
/// reports a partial sum within its bound and quadrature a float.
#[test]
fn all_methods_agree_at_three_two() {
    let exact = Rational::from(87);
    for method in ["closed", "sform", "tform", "bform", "comment1"] {
        let (code, json, _) = kesten(&["moment", "--p", "3/1", "--r", "2/1", "--m", "3", "--method", method], None);
        assert_eq!(code, 0);
        assert_eq!(json["value"], "87/1", "{method}");
        assert_eq!(json["method"], method);
    }
    let (code, json, _) = kesten(&["moment", "--p", "3", "--r", "2", "--m", "3", "--method", "series"], None);
    assert_eq!(code, 0);
    let value: Rational = json["value"].as_str().unwrap().parse().unwrap();
    let bound: Rational = json["bound"].as_str().unwrap().parse().unwrap();
    assert!(bound < Rational::new(1, 1_000_000_000_000i64).unwrap());
    assert!((value - &exact).abs() <= bound);
    let (code, json, _) = kesten(&["moment", "--p", "3", "--r", "2", "--m", "3", "--method", "quad"], None);
    assert_eq!(code, 0);
    assert_eq!(json["method"], "quad");
    assert!((json["value"].as_f64().unwrap() - 87.0).abs() <= 87e-8);
}

#[test]
fn domain_errors_are_json_with_status_2() {
    let cases: [(&[&str], &str); 5] = [
        (&["moment", "--p", "-1", "--r", "2", "--m", "2", "--method", "sform"], "parameter"),
        (&["moment", "--p", "1", "--r", "2", "--m", "2", "--method", "closed"], "domain"),
        (&["moment", "--p", "4", "--r", "2", "--m", "2", "--method", "series"], "boundary_convergence"),
        (&["moment", "--p", "2", "--r", "2", "--m", "2", "--method", "comment1"], "degenerate_denominator"),
        (&["hankel", "--family", "kestenEven", "--t", "2"], "parameter"),
    ];
    for (args, code) in cases {
        let (status, json, _) = kesten(args, None);
        assert_eq!(status, 2, "{args:?}");
        assert_eq!(json["error"], code, "{args:?}");
        assert!(json["message"].is_string());
    }
}

#[test]
fn evaluation_budget_from_environment() {
    let args = ["moment", "--p", "3", "--r", "2", "--m", "4", "--method", "quad"];
    let (code, json, _) = kesten(&args, Some("10"));
    assert_eq!(code, 2);
    assert_eq!(json["error"], "budget_exceeded");
    assert_eq!(kesten(&args, Some("lots")).0, 2);
    let (code, json, _) = kesten(&args, Some("100000"));
    assert_eq!(code, 0);
    assert!(json["evaluations"].as_u64().unwrap() <= 100_000);
}

#[test]
fn verify_single_and_all() {
    let (code, json, _) = kesten(&["verify", "--id", "fine", "--m-max", "15"], None);
    assert_eq!(code, 0);
    assert_eq!(json["id"], "fine");
    assert_eq!(json["passed"], true);
    let (code, json, _) = kesten(&["verify", "--id", "all", "--m-max", "12"], None);
    assert_eq!(code, 0);
    let ids: Vec<&str> = json.as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["prop1i", "prop1ii", "ex1a", "ex1b", "ex1c", "ex2a", "ex2b", "ex2c", "fine"]);
    assert!(json.as_array().unwrap().iter().all(|r| r["passed"] == true));
    let (code, json, _) = kesten(&["verify", "--id", "ex1a", "--m-max", "0"], None);
    assert_eq!((code, json["error"].as_str()), (2, Some("usage")));
}

#[test]
fn hankel_status_follows_the_report() {
    let (code, json, _) = kesten(&["hankel", "--family", "kestenEven", "--t", "3/4", "--size", "4"], None);
    assert_eq!(code, 0);
    assert_eq!(json["passed"], true);
    let (code, json, _) = kesten(&["hankel", "--family", "truncatedConvex", "--t", "6/5", "--d", "1"], None);
    assert_eq!(code, 1);
    assert_eq!(json["counterexample"]["lhs"]["value"], "-1/5");
}

#[test]
fn library_entry_point_matches_binary() {
    let cmd = parse(&["moment", "--p", "3", "--r", "2", "--m", "2"]);
    let out = run_with_budget(&cmd, 1000);
    assert_eq!(out.code, 0);
    assert_eq!(out.json["value"], "15/1");
}
