use gradalg::cli::run;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("gradalg").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{}", err);
    serde_json::from_str(&out).unwrap()
}

#[test]
fn klein_over_gf3_has_four_classes() {
    let v = json(&["enumerate-galois", "--field", "3^1", "--group", "2x2"]);
    assert_eq!(v["count"], 4);
    let s: Vec<&Value> = v["classes"].as_array().unwrap().iter().map(|c| &c["params"]["s"]).collect();
    assert_eq!(s.len(), 4);
    assert!(v["classes"].as_array().unwrap().iter().all(|c| c["verified"]["galois"] == true));
}

#[test]
fn construct_encodes_minus_one_square() {
    let v = json(&["construct", "--field", "3^1", "--group", "2x2", "--s", "1,0"]);
    assert_eq!(v["matches"], 1);
    let sc = v["algebra"]["algebra"]["structure_constants"].as_array().unwrap();
    let k: Vec<Vec<u64>> = v["params"]["K"]["elements"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect())
        .collect();
    let basis: Vec<Vec<u64>> = v["params"]["K"]["basis"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect())
        .collect();
    // L = F, so basis vector i is X^{k_i}; X_1 squared is 2 = -1 on the unit
    let x1 = k.iter().position(|e| *e == basis[0]).unwrap() as u64;
    let unit = k.iter().position(|e| e.iter().all(|&c| c == 0)).unwrap() as u64;
    let entries: Vec<u64> = sc
        .iter()
        .map(|e| e.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect::<Vec<_>>())
        .filter(|e| e[0] == x1 && e[1] == x1)
        .map(|e| {
            assert_eq!(e[2], unit);
            e[3]
        })
        .collect();
    assert_eq!(entries, vec![2]);
}

#[test]
fn verify_reports_non_galois_without_failing() {
    let dir = std::env::temp_dir().join(format!("gradalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let doc = json(&["construct", "--field", "3^1", "--group", "2", "--emit-algebras"]);
    let mut alg = doc["algebra"].clone();
    alg["action"] = serde_json::json!([[[1, 0], [0, 1]]]);
    let path = dir.join("trivial.json");
    std::fs::write(&path, alg.to_string()).unwrap();
    let v = json(&["verify", "--input", path.to_str().unwrap()]);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["galois"]["failure"], "fixed_subalgebra_too_big");
    assert_eq!(v["criterion"]["verdict"], false);

    let good = dir.join("field.json");
    std::fs::write(&good, doc.to_string()).unwrap();
    assert_eq!(json(&["verify", "--input", good.to_str().unwrap()])["verdict"], true);
    let psi = json(&["invariant", "--input", good.to_str().unwrap()]);
    assert_eq!(psi["n"], 2);
    let (code, _, err) = call(&["invariant", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("\"constraint\""));
}

#[test]
fn graded_division_enumeration() {
    let v = json(&["enumerate-gdr", "--field", "3^1", "--group", "2"]);
    assert_eq!(v["count"], 4);
    let dims: Vec<u64> = v["quintuples"].as_array().unwrap().iter().map(|q| q["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, vec![1, 4, 2, 2]);
    let c = json(&["construct", "--kind", "gdr", "--field", "3^1", "--group", "4", "--support", "(2)", "--center", "(0)"]);
    assert_eq!(c["dim"], 4);
    assert_eq!(c["verified"]["graded_division"], true);
}

#[test]
fn errors_are_tagged() {
    let (code, out, err) = call(&["enumerate-galois", "--field", "4^1", "--group", "2"]);
    assert_eq!((code, out.as_str()), (2, ""));
    let e: Value = serde_json::from_str(&err).unwrap();
    assert_eq!(e["error"], "not_prime");
    assert_eq!(call(&["enumerate-galois", "--field", "3^x", "--group", "2"]).0, 2);
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["construct", "--field", "3^1", "--group", "2x2", "--s", "9,9"]).0, 2);
    assert_eq!(call(&["enumerate-gdr", "--field", "3^1", "--group", "64x64"]).0, 2);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate-gdr", "--field", "3^2", "--group", "4x2", "--dim-cap", "8", "--seed", "3"];
    assert_eq!(call(&args).1, call(&args).1);
}
