use std::process::Command;

fn walgebra(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_walgebra")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn exit_code_matrix() {
    let cases: &[(&[&str], i32)] = &[
        (&["central-charge", "--algebra", "A1", "--kappa", "4/3"], 0),
        (&["conformal-weight", "--algebra", "A2", "--kappa", "3/2", "--weight", "1/3,-1/6"], 0),
        (&["verma-char", "--algebra", "B2", "--kappa", "5/2", "--weight", "0,1/7", "--order", "3"], 0),
        (&["vacuum-char", "--algebra", "G2", "--order", "5"], 0),
        (&["irr-char", "--algebra", "A1", "--kappa", "4/3", "--weight", "-1/3", "--w", "", "--order", "4"], 0),
        (&["integral-weyl", "--algebra", "A1", "--kappa", "3/4", "--weight", "-3/4", "--w", "1 2"], 0),
        (&["kl-poly", "--algebra", "A1", "--kappa", "3/4", "--weight", "-3/4", "--w", "1 2", "--x", "1"], 0),
        (&["check", "--algebra", "A1", "--kappa", "3/4", "--weight", "-3/4"], 0),
        (&["--help"], 0),
        (&[], 1),
        (&["frobnicate", "--algebra", "A1"], 1),
        (&["central-charge", "--algebra", "X9", "--kappa", "1"], 1),
        (&["central-charge", "--algebra", "A1"], 1),
        (&["central-charge", "--algebra", "A1", "--kappa", "1/0"], 1),
        (&["conformal-weight", "--algebra", "A2", "--kappa", "1", "--weight", "1"], 1),
        (&["irr-char", "--algebra", "A1", "--kappa", "4/3", "--weight", "-1/3", "--w", "0"], 1),
        (&["irr-char", "--algebra", "A1", "--kappa", "4/3", "--weight", "-1/3", "--w", "3"], 1),
        (&["irr-char", "--algebra", "A1", "--kappa", "4/3", "--weight", "-1/3", "--reduction", "sideways"], 1),
        (&["integral-weyl", "--algebra", "A1", "--kappa", "3/4", "--weight", "-3/4", "--delta-bound", "0"], 1),
        (&["vacuum-char", "--algebra", "A1", "--kappa", "1"], 1),
        (&["central-charge", "--algebra", "A1", "--kappa", "0"], 2),
        (&["irr-char", "--algebra", "A1", "--kappa", "4/3", "--weight", "0"], 2),
        (&["irr-char", "--algebra", "A1", "--kappa", "-4/3", "--weight", "-1/3"], 2),
        (&["irr-char", "--algebra", "A1", "--kappa", "4/3", "--weight", "-7/3"], 2),
        (&["check", "--algebra", "A1", "--kappa", "0", "--weight", "0"], 2),
    ];
    for (args, code) in cases {
        let (got, out, err) = walgebra(args);
        assert_eq!(got, *code, "{args:?}\nstdout: {out}\nstderr: {err}");
        if *code == 0 {
            assert!(!out.is_empty(), "{args:?}");
        } else {
            assert!(out.is_empty() && err.starts_with("error: "), "{args:?}: {err}");
        }
    }
}

#[test]
fn preconditions_name_the_condition() {
    let (_, _, err) = walgebra(&["irr-char", "--algebra", "A1", "--kappa", "4/3", "--weight", "0"]);
    assert!(err.contains("degenerate"), "{err}");
    let (_, _, err) = walgebra(&["irr-char", "--algebra", "A1", "--kappa", "-4/3", "--weight", "-1/3"]);
    assert!(err.contains("kappa > 0"), "{err}");
    let (_, _, err) = walgebra(&["irr-char", "--algebra", "A1", "--kappa", "4/3", "--weight", "-7/3"]);
    assert!(err.contains("longest"), "{err}");
}

#[test]
fn ising_spin_field_text_and_json() {
    let base = ["irr-char", "--algebra", "A1", "--kappa", "4/3", "--weight", "-1/3", "--w", "", "--reduction", "plus", "--order", "6"];
    let (code, text, _) = walgebra(&base);
    assert_eq!(code, 0);
    assert!(text.contains("c = 1/2\n"));
    assert!(text.contains("Delta = 1/16\n"));
    assert!(text.contains("ch = q^{1/24}(1 + q + q^2 + 2q^3 + 2q^4 + 3q^5 + 4q^6 + …)\n"), "{text}");
    let mut args = base.to_vec();
    args.extend(["--format", "json"]);
    let (code, json, _) = walgebra(&args);
    assert_eq!(code, 0);
    assert!(json.starts_with(
        r#"{"command":"irr-char","algebra":"A1","kappa":"4/3","central_charge":"1/2","delta":"1/16","offset":"1/24","step":"1","coefficients":["1","1","1","2","2","3","4"]"#
    ), "{json}");
}

#[test]
fn minus_reduction_with_positive_level_warns_on_stderr() {
    let (code, out, err) = walgebra(&["irr-char", "--algebra", "A1", "--kappa", "4/3", "--weight", "-4/5", "--reduction", "minus", "--order", "2"]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("ch = "));
    assert!(err.starts_with("warning: "), "{err}");
}

#[test]
fn output_is_deterministic() {
    let args = ["irr-char", "--algebra", "A2", "--kappa", "3/2", "--weight", "-1/2,-1/3", "--order", "5", "--format", "json"];
    let first = walgebra(&args);
    for _ in 0..3 {
        assert_eq!(walgebra(&args), first);
    }
}
