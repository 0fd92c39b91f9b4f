use chern_core::verify::{applicable, homology_report, run_all, run_suite, Caps, HomologyKind, Instance, SuiteError, SUITES};

#[test]
fn every_lie_suite_passes_on_the_abelian_plane() {
    let inst = Instance::abelian(2);
    let reports = run_all(&inst, &Caps::new(3, 2, 2)).unwrap();
    assert_eq!(reports.len(), SUITES.len() - 1);
    for r in &reports {
        assert!(r.ok(), "{r}");
    }
}

#[test]
fn block_suite_runs_only_with_a_triangular_section() {
    let block = Instance::dual_block(1, vec![]);
    assert!(applicable("lem:jc-ch", &block));
    assert!(!applicable("map:t", &block));
    let r = run_suite("lem:jc-ch", &block, &Caps::new(3, 3, 4)).unwrap();
    assert!(r.ok(), "{r}");
    assert!(matches!(run_suite("map:t", &block, &Caps::new(3, 3, 4)), Err(SuiteError::MissingSection { .. })));
}

#[test]
fn labels_accept_primes_and_theta() {
    let h = Instance::heisenberg();
    let caps = Caps::new(3, 2, 3);
    assert_eq!(run_suite("rem:B′=B″", &h, &caps).unwrap().suite, "rem:B'=B''");
    assert_eq!(run_suite("thm:θ=c", &h, &caps).unwrap().suite, "thm:theta=c");
}

#[test]
fn hochschild_and_negative_cyclic_tables() {
    let dual = Instance::dual_numbers();
    let r = homology_report(HomologyKind::Hochschild, &dual, &Caps::new(4, 3, 2)).unwrap();
    let hh = &r.tables["dim HH_n(A)"];
    assert_eq!(hh[0], "2");
    assert!(hh[1..].iter().all(|d| d == "1"), "{hh:?}");

    let r = homology_report(HomologyKind::HnTruncated, &dual, &Caps::new(3, 2, 2)).unwrap();
    assert!(r.ok(), "{r}");
    assert!(r.tables.keys().any(|k| k.ends_with("P vs P+1")), "{r}");
}
