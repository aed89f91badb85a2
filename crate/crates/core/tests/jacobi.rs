use std::time::{Duration, Instant};

use tn2::algebra::{
    antisymmetry_violations, degree_violations, jacobi_check, DropVirasoroCentral, Presentation,
    PresentationRegistry, TwistedPresentation,
};

#[test]
fn every_preset_satisfies_jacobi_on_window_12() {
    let registry = PresentationRegistry::with_presets();
    let start = Instant::now();
    for name in ["twisted", "twisted-pm", "untwisted-pm", "untwisted-12"] {
        let p = registry.get(name).unwrap();
        let report = jacobi_check(&*p, 12);
        assert!(report.passed(), "{name}: {:?}", report.violations.first());
        assert!(antisymmetry_violations(&*p, 12).is_empty(), "{name}");
        assert!(degree_violations(&*p, 12).is_empty(), "{name}");
    }
    assert!(start.elapsed() < Duration::from_secs(30), "took {:?}", start.elapsed());
}

#[test]
fn dropped_central_term_is_detected() {
    let p = DropVirasoroCentral(TwistedPresentation);
    let report = jacobi_check(&p, 4);
    assert!(!report.passed());
    assert_eq!(p.name(), "corrupted");
}
