mod common;

use common::{ext_orthogonal_to_regular, Enumeration};
use gsilt::input::fixtures;

fn dims(e: &Enumeration) -> Vec<usize> {
    let mut d: Vec<usize> = e.indecomposables.iter().map(|m| m.dim()).collect();
    d.sort_unstable();
    d
}

#[test]
fn truncated_polynomial_rings_have_one_block_per_length() {
    // k[x]/(x^n): the indecomposables are the Jordan blocks of size <= n,
    // and a module of dimension d is a partition of d with parts <= n
    let kx2 = fixtures::load("kx2", Some(7)).unwrap();
    let e = Enumeration::run(&kx2, 5);
    assert_eq!(dims(&e), vec![1, 2]);
    let counts: Vec<usize> = e.classes.iter().skip(1).map(|c| c.len()).collect();
    assert_eq!(counts, vec![1, 2, 2, 3, 3]);

    let kx3 = fixtures::load("kx3", Some(5)).unwrap();
    let e = Enumeration::run(&kx3, 4);
    assert_eq!(dims(&e), vec![1, 2, 3]);
    let counts: Vec<usize> = e.classes.iter().skip(1).map(|c| c.len()).collect();
    assert_eq!(counts, vec![1, 2, 3, 4]);
}

#[test]
fn path_algebra_of_a2_has_three_indecomposables() {
    let a2 = fixtures::load("a2", Some(5)).unwrap();
    let e = Enumeration::run(&a2, 4);
    assert_eq!(dims(&e), vec![1, 1, 2]);
    // (a, b, c) copies of S_1, S_2, P_1 with a + b + 2c = d
    let counts: Vec<usize> = e.classes.iter().skip(1).map(|c| c.len()).collect();
    assert_eq!(counts, vec![2, 4, 6, 9]);
}

#[test]
fn ext_filter_keeps_projectives_over_hereditary_algebras() {
    let a2 = fixtures::load("a2", Some(5)).unwrap();
    let e = Enumeration::run(&a2, 2);
    let kept = e.indecomposables.iter().filter(|m| ext_orthogonal_to_regular(m, 3)).count();
    assert_eq!(kept, 2);
    let kx2 = fixtures::load("kx2", Some(7)).unwrap();
    let e = Enumeration::run(&kx2, 3);
    assert!(e.indecomposables.iter().all(|m| ext_orthogonal_to_regular(m, 3)));
}
