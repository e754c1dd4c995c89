use gradalg::acceptance;

#[test]
fn acceptance_criteria() {
    let mut failed = Vec::new();
    for id in 1..=8 {
        let o = acceptance::run(id);
        println!(
            "criterion {} ({}): {} [{} ms] {}",
            o.id,
            o.name,
            if o.pass { "PASS" } else { "FAIL" },
            o.millis,
            o.detail
        );
        if !o.pass {
            failed.push(o.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {:?}", failed);
}
