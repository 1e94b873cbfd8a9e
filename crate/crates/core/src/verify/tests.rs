use super::*;

fn params() -> Parameters {
    Parameters { dim_cap: 12, ..Parameters::default() }
}

#[test]
fn rigid_iff_partial_silting_passes_over_dual_numbers() {
    let c = run_check("T2.11", "kx2", params()).unwrap();
    assert_eq!(c.verdict, CheckVerdict::Pass);
    assert!(c.inventory_complete);
    assert_eq!(c.atlas_complete, Some(Completeness::Certified));
    assert!(c.cases > 0);
}

#[test]
fn gldim_bound_on_path_algebra_and_dual_numbers() {
    let a2 = run_check("T3.16", "a2", params()).unwrap();
    assert_eq!(a2.verdict, CheckVerdict::Pass);
    assert_eq!(a2.cases, 5);
    let kx2 = run_check("T3.16", "kx2", params()).unwrap();
    assert!(matches!(kx2.verdict, CheckVerdict::OutsideHypothesis { .. }));
}

#[test]
fn semisimple_fixture_passes_everything_applicable() {
    let s = Session::open("field", params()).unwrap();
    let certs = s.run_suite();
    assert_eq!(certs.len(), CHECK_IDS.len());
    for (c, id) in certs.iter().zip(CHECK_IDS) {
        assert_eq!(c.check_id, id);
        match id {
            "T3.16" => assert!(matches!(c.verdict, CheckVerdict::OutsideHypothesis { .. })),
            _ => assert_eq!(c.verdict, CheckVerdict::Pass, "{id}"),
        }
    }
}

#[test]
fn non_gorenstein_fixture_is_outside_every_hypothesis() {
    let s = Session::open("radsq", params()).unwrap();
    for c in s.run_suite() {
        assert!(matches!(c.verdict, CheckVerdict::OutsideHypothesis { .. }), "{}", c.check_id);
        assert_eq!(c.atlas_complete, None);
    }
}

#[test]
fn unknown_check_and_bad_fixtures() {
    assert!(matches!(run_check("X9.9", "kx2", params()), Err(Error::UnknownCheck(_))));
    let dir = std::env::temp_dir().join(format!("gsilt-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.json");
    std::fs::write(&path, "{\"quiver\": {\"vertices\": 2, \"arrows\": [").unwrap();
    let err = run_suite(path.to_str().unwrap(), params()).unwrap_err();
    assert!(matches!(err, Error::FixtureError(_)), "{err:?}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn failures_carry_witnesses() {
    let c = run_check("T3.8", "kx2", params()).unwrap();
    let CheckVerdict::Fail { witness } = &c.verdict else { panic!("{:?}", c.verdict) };
    assert!(witness.complex.is_some());
    assert!(!witness.modules.is_empty());
    assert!(c.verdict.is_fail());
}

#[test]
fn certificates_are_reproducible_and_round_trip() {
    let run = || serde_json::to_string(&run_suite("a2", params()).unwrap()).unwrap();
    let first = run();
    assert_eq!(first, run());
    let back: Vec<Certificate> = serde_json::from_str(&first).unwrap();
    assert_eq!(serde_json::to_string(&back).unwrap(), first);
    assert_eq!(back, run_suite("a2", params()).unwrap());
}

#[test]
fn verdict_labels() {
    assert_eq!(CheckVerdict::Pass.label(), "pass");
    assert_eq!(CheckVerdict::InventoryCappedPass.label(), "inventory_capped_pass");
    let v = serde_json::to_value(CheckVerdict::OutsideHypothesis { reason: "d = 0".into() }).unwrap();
    assert_eq!(v["kind"], "outside_hypothesis");
}
