use repst::verify::{run_suite, Suite, VerifyParams};
use repst::ContentConvention;

#[test]
fn every_suite_passes_with_defaults() {
    for suite in Suite::ALL {
        let r = run_suite(suite, &VerifyParams::default()).unwrap();
        assert!(r.pass, "{}: {:?}", r.suite, r.failures);
        assert!(r.checks > 0);
    }
}

#[test]
fn flipped_contents_fail_the_oracle_at_five() {
    let flipped = VerifyParams {
        min_n: Some(5),
        max_n: Some(5),
        convention: ContentConvention::RowMinusCol,
        ..Default::default()
    };
    let r = run_suite(Suite::Oracle, &flipped).unwrap();
    assert!(!r.pass);
    assert!(r.failures.iter().all(|f| f.check.starts_with("jm-")), "{:?}", r.failures);
    assert!(r.failures_in("jm-eigenvalue").count() > 0);

    let straight = VerifyParams { convention: ContentConvention::ColMinusRow, ..flipped };
    assert!(run_suite(Suite::Oracle, &straight).unwrap().pass);
}

#[test]
fn report_round_trips_through_json() {
    let r = run_suite(Suite::Stirling, &VerifyParams { max_m: Some(3), ..Default::default() }).unwrap();
    let s = serde_json::to_string(&r).unwrap();
    assert_eq!(serde_json::from_str::<repst::verify::SuiteReport>(&s).unwrap(), r);
}
