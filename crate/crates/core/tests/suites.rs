use cotor::suites::{Outcome, Suite, Workbench};
use cotor::{Nakayama, StarConfig};

#[test]
fn every_suite_passes_on_small_instances() {
    for (m, n) in [(1, 3), (1, 4), (2, 2), (2, 3), (3, 2)] {
        let cat = Nakayama::build(m, n).unwrap();
        let wb = Workbench::new(&cat, StarConfig::default()).unwrap();
        for suite in Suite::ALL {
            let r = wb.run(suite, 7).unwrap();
            assert_eq!(
                r.outcome,
                Outcome::Pass,
                "Λ({m},{n}) {suite}: {:?} {:?}",
                r.violations,
                r.inconclusive
            );
            assert!(
                r.checked > 0 || suite == Suite::ConditionIii,
                "Λ({m},{n}) {suite} checked nothing"
            );
        }
    }
}

#[test]
fn suite_names_round_trip() {
    for s in Suite::ALL {
        assert_eq!(s.name().parse::<Suite>().unwrap(), s);
    }
    assert!("nope".parse::<Suite>().is_err());
}
