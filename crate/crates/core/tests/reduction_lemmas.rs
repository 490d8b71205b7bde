use pronormal_core::{verify_reduction_lemmas, ReductionLemma};

#[test]
fn every_reduction_lemma_holds_on_enough_instances() {
    let report = verify_reduction_lemmas(&ReductionLemma::ALL).unwrap();
    for lemma in ReductionLemma::ALL {
        assert!(report.count(lemma) >= 25, "{lemma}: {} instances", report.count(lemma));
    }
    let failures: Vec<_> = report.failures().collect();
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn selection_restricts_the_report() {
    let report = verify_reduction_lemmas(&[ReductionLemma::SeparableDominance]).unwrap();
    assert!(report
        .instances
        .iter()
        .all(|i| i.lemma == ReductionLemma::SeparableDominance));
    assert!(report.count(ReductionLemma::SeparableDominance) > 0);
}
