use std::process::{Command, Output};

fn trigsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trigsum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn derive_text_matches_golden_files() {
    for (family, file) in [
        ("Ton", "derive_ton.txt"),
        ("Ten", "derive_ten.txt"),
        ("Uon", "derive_uon.txt"),
        ("Uen", "derive_uen.txt"),
    ] {
        let o = trigsum(&["derive", "--family", family, "--kmax", "5"]);
        assert_eq!(code(&o), 0);
        assert_eq!(stdout(&o), golden(file), "{family}");
    }
}

#[test]
fn derive_single_k() {
    let o = trigsum(&["derive", "--family", "Ton", "--k", "5"]);
    assert_eq!(
        stdout(&o).trim(),
        "Ton_5 = 64*(n+1)*n*(16*n^8 + 64*n^7 + 182*n^6 + 322*n^5 + 493*n^4 + 524*n^3 + 579*n^2 + 360*n + 540)/93555"
    );
    let o = trigsum(&["derive", "--family", "Ten", "--k", "1"]);
    assert_eq!(stdout(&o).trim(), "Ten_1 = 2*n^2");
    let o = trigsum(&["derive", "--family", "Top", "--k", "3"]);
    assert_eq!(stdout(&o).trim(), "Top_3 = 5*(2*n + 1)/32");
}

#[test]
fn derive_json_schema_and_stability() {
    let args = ["derive", "--family", "Uen", "--k", "4", "--format", "json"];
    let a = stdout(&trigsum(&args));
    assert_eq!(a, stdout(&trigsum(&args)));
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["family"], "Uen");
    assert_eq!(v["k"], 4);
    let coeffs = v["coeffs"].as_array().unwrap();
    assert_eq!(coeffs.len(), 9);
    assert_eq!(coeffs[0], "0/1");
    assert_eq!(coeffs[8], "2176/315");
    assert!(v.get("typeset").is_none());
    let at = |key: &str| a.find(&format!("\"{key}\":")).unwrap();
    assert!(at("family") < at("k") && at("k") < at("coeffs") && at("coeffs") < at("display"));

    let t = stdout(&trigsum(&[
        "derive",
        "--family",
        "Ton",
        "--k",
        "1",
        "--format",
        "json",
        "--typeset",
    ]));
    let v: serde_json::Value = serde_json::from_str(&t).unwrap();
    assert_eq!(v["typeset"], "\\frac{2 (n+1) n}{3}");
}

#[test]
fn large_k_needs_the_flag() {
    assert_eq!(
        code(&trigsum(&["derive", "--family", "Ton", "--k", "11"])),
        64
    );
    let o = trigsum(&["derive", "--family", "Ton", "--k", "11", "--allow-large-k"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("Ton_11 = "));
    let o = trigsum(&["derive", "--family", "Ton", "--k", "61", "--allow-large-k"]);
    assert_eq!(code(&o), 64);
}

#[test]
fn verify_exit_codes() {
    let o = trigsum(&["verify", "cos(pi/9)*cos(2*pi/9)*cos(4*pi/9) = 1/8"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "proved (exact, conductor 36)");

    let o = trigsum(&["verify", "sin(pi/6) = 1/3"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("residual 1/6"));

    let heptagon = "cos(pi/7) - cos(2*pi/7) + cos(3*pi/7) - 1/2";
    assert_eq!(code(&trigsum(&["verify", heptagon])), 0);

    let o = trigsum(&["verify", "sin(pi/6) = (1/2"]);
    assert_eq!(code(&o), 65);
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error at column"));

    assert_eq!(code(&trigsum(&["verify", "cot(pi/n)^2 = 1"])), 64);
    assert_eq!(
        code(&trigsum(&["verify", "cot(pi/n)^2 = 1/3", "--param", "n=3"])),
        0
    );
    assert_eq!(code(&trigsum(&["verify", "1 = 1", "--param", "n"])), 64);
    assert_eq!(code(&trigsum(&["verify", "tan(pi/2) = 0"])), 2);
    assert_eq!(code(&trigsum(&["verify", "sqrt(3) = 2*sin(pi/3)"])), 64);
    let o = trigsum(&["verify", "sqrt(3) = 2*sin(pi/3)", "--mode", "numeric"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("confirmed-to-precision"));
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(code(&trigsum(&[])), 64);
    assert_eq!(code(&trigsum(&["frobnicate"])), 64);
    assert_eq!(code(&trigsum(&["derive", "--family", "Ton"])), 64);
    assert_eq!(
        code(&trigsum(&["derive", "--family", "Xyz", "--k", "1"])),
        64
    );
    assert_eq!(code(&trigsum(&["--help"])), 0);
    assert_eq!(code(&trigsum(&["--version"])), 0);
}

#[test]
fn suite_filter_and_json() {
    let o = trigsum(&["suite", "--filter", "bromwich", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let a = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    for r in rows {
        assert_eq!(r["failed"], 0);
        assert!(r["bindings_run"].as_u64().unwrap() > 0);
    }

    let o = trigsum(&["suite", "--filter", "eq08"]);
    assert!(stdout(&o).contains("note:"));
    assert_eq!(code(&trigsum(&["suite", "--filter", "no-such-case"])), 64);

    let list = stdout(&trigsum(&["suite", "--list"]));
    assert!(list.lines().count() > 40);
}

#[test]
fn shevelev_and_franke() {
    let o = trigsum(&["shevelev", "--n", "5", "--p", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("= 36"));
    assert_eq!(code(&trigsum(&["shevelev", "--n", "4", "--p", "1"])), 64);
    assert_eq!(code(&trigsum(&["shevelev", "--n", "3", "--p", "20"])), 64);
    assert_eq!(code(&trigsum(&["franke", "--N", "5"])), 0);
}

#[test]
fn table_writes_json() {
    let dir = std::env::temp_dir().join(format!("trigsum-table-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("t.json");
    let o = trigsum(&[
        "table",
        "--families",
        "Ton,Uep",
        "--kmax",
        "3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[3]["family"], "Uep");
    std::fs::remove_dir_all(dir).unwrap();
}
