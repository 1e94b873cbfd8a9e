use gsilt::input::AlgebraSpec;
use gsilt::verify::{CheckVerdict, Parameters, Session};

const A3: &str = r#"{
  "label": "A3",
  "quiver": {
    "vertices": 3,
    "arrows": [{"name": "a", "source": 1, "target": 2}, {"name": "b", "source": 2, "target": 3}],
    "relations": []
  }
}"#;

fn a3() -> Session {
    let alg = AlgebraSpec::parse(A3).unwrap().build(Some(101)).unwrap();
    Session::new("A3", alg, Parameters { prime: 101, ..Parameters::default() })
}

#[test]
fn linear_a3_from_a_user_spec() {
    let s = a3();
    assert_eq!(s.algebra.dim(), 6);
    let atlas = s.atlas().unwrap();
    // hereditary: the Gorenstein-projectives are the projectives
    assert_eq!(atlas.len(), 3);
    assert_eq!(atlas.projective_count, 3);
    let inv = s.inventory().unwrap();
    assert_eq!(inv.len(), 6);
    assert!(inv.complete_up_to_cap);
}

#[test]
fn two_term_silting_complexes_of_a3_are_counted_by_catalan() {
    // two-term silting complexes over linear A_n number C(n + 1)
    let s = a3();
    assert_eq!(s.silting_complexes().unwrap().len(), 14);
    for id in ["T2.11", "T3.16"] {
        assert_eq!(s.run_check(id).unwrap().verdict, CheckVerdict::Pass, "{id}");
    }
}
