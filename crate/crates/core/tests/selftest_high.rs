use flagdom_core::verify::selftest;

#[test]
#[ignore = "several seconds; run with --ignored"]
fn selftest_through_rank_eight() {
    let outcomes = selftest(8);
    let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed()).collect();
    for o in &failed {
        eprintln!("{} {}: {:?}", o.suite, o.root_type, &o.violations[..o.violations.len().min(3)]);
    }
    assert!(failed.is_empty());
}
