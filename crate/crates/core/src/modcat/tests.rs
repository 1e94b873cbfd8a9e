use super::*;
use crate::input::fixtures;
use crate::kernel::Matrix;

const P: u32 = 1009;

/// Independent oracle: solve `f a_M(b) = a_N(b) f` for every basis element
/// `b` at once, without adapted coordinates or generators.
fn brute_hom_dim(m: &Module, n: &Module) -> usize {
    let (dm, dn) = (m.dim(), n.dim());
    let unknowns = dm * dn;
    if unknowns == 0 {
        return 0;
    }
    let mut rows = Vec::new();
    for b in 0..m.algebra().dim() {
        let am = m.action(b);
        let an = n.action(b);
        for a in 0..dn {
            for c in 0..dm {
                let mut row = vec![0u32; unknowns];
                for k in 0..dm {
                    row[a * dm + k] = (row[a * dm + k] + am.get(k, c)) % P;
                }
                for d in 0..dn {
                    row[d * dm + c] = (row[d * dm + c] + P - an.get(a, d)) % P;
                }
                rows.push(row);
            }
        }
    }
    unknowns - crate::kernel::rank_of(P, unknowns, &rows)
}

/// A one-dimensional module where only the basis element `e` acts (as 1).
fn one_dim(alg: &std::sync::Arc<crate::algebra::Algebra>, e: usize) -> Module {
    let action = (0..alg.dim()).map(|i| Matrix::from_vec(P, 1, 1, vec![u32::from(i == e)])).collect();
    Module::new(alg.clone(), 1, action).unwrap()
}

fn kx2() -> (std::sync::Arc<crate::algebra::Algebra>, Module, Module) {
    let alg = fixtures::load("kx2", None).unwrap();
    let s = one_dim(&alg, 0);
    let a = Module::regular(&alg);
    (alg, s, a)
}

fn a2() -> (std::sync::Arc<crate::algebra::Algebra>, Module, Module, Module, Module) {
    let alg = fixtures::load("a2", None).unwrap();
    let s1 = one_dim(&alg, 0);
    let s2 = one_dim(&alg, 1);
    let ps = indecomposable_projectives(&alg);
    (alg.clone(), s1, s2, ps[0].clone(), ps[1].clone())
}

#[test]
fn hom_dimensions_over_dual_numbers() {
    let (_, s, a) = kx2();
    for (x, y, expected) in [(&a, &a, 2), (&s, &a, 1), (&a, &s, 1), (&s, &s, 1)] {
        assert_eq!(brute_hom_dim(x, y), expected);
        assert_eq!(hom_dim(x, y), expected);
    }
}

#[test]
fn hom_between_simples_of_a2_vanishes() {
    let (_, s1, s2, p1, p2) = a2();
    assert_eq!(hom_dim(&s1, &s2), 0);
    for x in [&s1, &s2, &p1, &p2] {
        for y in [&s1, &s2, &p1, &p2] {
            assert_eq!(hom_dim(x, y), brute_hom_dim(x, y));
        }
    }
}

#[test]
fn hom_contains_identity_and_maps_are_homomorphisms() {
    let (_, _, _, p1, _) = a2();
    let hs = HomSpace::new(&p1, &p1).unwrap();
    assert!(hs.try_coords(&Matrix::identity(P, p1.dim())).is_some());
    for f in hs.basis() {
        assert!(ModuleMap::new(&p1, &p1, f.clone()).is_ok());
    }
}

#[test]
fn multiplication_by_x_has_simple_kernel_image_cokernel() {
    let (alg, s, a) = kx2();
    let x = ModuleMap::new(&a, &a, alg.left_mult(&alg.basis_vector(1))).unwrap();
    let k = x.kernel();
    let i = x.image();
    let c = x.cokernel();
    assert_eq!((k.module.dim(), i.module.dim(), c.module.dim()), (1, 1, 1));
    for m in [&k.module, &i.module, &c.module] {
        assert!(is_isomorphic(m, &s, 1).unwrap());
    }
    assert!(k.inclusion.is_homomorphism() && c.projection.is_homomorphism());
    assert!(x.compose(&k.inclusion).is_zero());
    assert!(c.projection.compose(&x).is_zero());
}

#[test]
fn identity_and_zero_maps() {
    let (_, _, a) = kx2();
    let id = ModuleMap::identity(&a);
    assert_eq!(id.kernel().module.dim(), 0);
    assert_eq!(id.cokernel().module.dim(), 0);
    let z = ModuleMap::zero(&a, &a);
    assert_eq!(z.kernel().module.dim(), 2);
    assert_eq!(z.cokernel().module.dim(), 2);
}

#[test]
fn decomposition_of_sums() {
    let (alg, s, _) = kx2();
    let ss = Module::sum(&alg, &[&s, &s]);
    let d = decompose(&ss, 3).unwrap();
    assert_eq!(d.classes.len(), 1);
    assert_eq!(d.classes[0].1, 2);
    assert!(d.verify(&ss));

    let (alg, _, _, p1, p2) = a2();
    let reg = Module::regular(&alg);
    let d = decompose(&reg, 3).unwrap();
    assert!(d.verify(&reg));
    let mut dims: Vec<usize> = d.classes.iter().map(|c| c.0.dim()).collect();
    dims.sort();
    assert_eq!(dims, vec![1, 2]);
    assert!(d.classes.iter().any(|c| is_isomorphic(&c.0, &p1, 0).unwrap()));
    assert!(d.classes.iter().any(|c| is_isomorphic(&c.0, &p2, 0).unwrap()));
}

#[test]
fn isomorphism_tests() {
    let (_, s1, s2, p1, _) = a2();
    assert!(is_isomorphic(&p1, &p1, 0).unwrap());
    assert!(!is_isomorphic(&s1, &p1, 0).unwrap());
    assert!(!is_isomorphic(&s1, &s2, 0).unwrap());
    // a conjugate is isomorphic
    let t = Matrix::from_rows(P, &[vec![1, 2], vec![3, 4]]);
    assert!(is_isomorphic(&p1, &p1.conjugate(&t), 5).unwrap());
}

#[test]
fn projective_covers_and_syzygies() {
    let (_, s, a) = kx2();
    let c = projective_cover(&s);
    assert_eq!(c.map.source.dim(), 2);
    assert!(is_isomorphic(&syzygy(&s).0, &s, 0).unwrap());
    let (omega, _, cover) = syzygy(&a);
    assert!(omega.is_zero());
    assert!(cover.map.is_iso());

    let (_, s1, _, p1, p2) = a2();
    let (omega, _, cover) = syzygy(&s1);
    assert!(is_isomorphic(&cover.map.source, &p1, 0).unwrap());
    assert!(is_isomorphic(&omega, &p2, 0).unwrap());
}

#[test]
fn duality() {
    let (alg, s, a) = kx2();
    let ds = s.dual();
    assert_eq!(ds.dim(), 1);
    assert!(std::sync::Arc::ptr_eq(ds.dual().algebra(), &alg));
    assert!(is_isomorphic(&ds.dual(), &s, 0).unwrap());
    // k[x]/(x^2) is commutative, so D A is again a module over an equal algebra
    let da = a.dual();
    let reg_op = Module::regular(da.algebra());
    assert!(is_isomorphic(&da, &reg_op, 0).unwrap());
}

#[test]
fn auslander_reiten_translates() {
    let (_, s, a) = kx2();
    let (tr, tau) = transpose_and_tau(&a);
    assert!(tr.is_zero() && tau.is_zero());
    let (_, tau) = transpose_and_tau(&s);
    assert!(is_isomorphic(&tau, &s, 0).unwrap());

    let (_, s1, _, p1, p2) = a2();
    let (_, tau) = transpose_and_tau(&s1);
    assert!(is_isomorphic(&tau, &p2, 0).unwrap());
    assert!(transpose_and_tau(&p1).1.is_zero());
}

#[test]
fn ext_groups() {
    let (_, s, a) = kx2();
    assert_eq!(ext_dim(&s, &s, 1), 1);
    assert_eq!(ext_dim(&s, &s, 3), 1);
    assert_eq!(ext_dim(&a, &s, 1), 0);
    assert_eq!(ext_dim(&s, &s, 0), 1);

    let (_, s1, s2, p1, _) = a2();
    assert_eq!(ext_dim(&s1, &s2, 1), 1);
    assert_eq!(ext_dim(&s2, &s1, 1), 0);
    assert_eq!(ext_dim(&p1, &s2, 1), 0);
    assert_eq!(ext_dim(&s1, &s2, 2), 0);
}

#[test]
fn ext_duality_spot_check() {
    let (_, s1, s2, p1, p2) = a2();
    for m in [&s1, &s2, &p1, &p2] {
        for n in [&s1, &s2, &p1, &p2] {
            assert_eq!(ext_dim(m, n, 1), ext_dim(&n.dual(), &m.dual(), 1));
        }
    }
}

#[test]
fn homological_dimensions() {
    let field = fixtures::load("field", None).unwrap();
    assert_eq!(global_dimension(&field, 5), Bounded::Finite(0));
    let (alg, s1, _, _, _) = a2();
    assert_eq!(global_dimension(&alg, 5), Bounded::Finite(1));
    assert_eq!(projective_dimension(&s1, 5), Bounded::Finite(1));
    let (alg, s, a) = kx2();
    assert_eq!(global_dimension(&alg, 10), Bounded::ExceedsBound);
    assert_eq!(injective_dimension(&a, 3), Bounded::Finite(0));
    assert_eq!(projective_dimension(&s, 4), Bounded::ExceedsBound);
}

#[test]
fn projectives_of_small_algebras() {
    let field = fixtures::load("field", None).unwrap();
    let ps = indecomposable_projectives(&field);
    assert_eq!(ps.len(), 1);
    assert_eq!(ps[0].dim(), 1);
    let (alg, _, _) = kx2();
    let ps = indecomposable_projectives(&alg);
    assert_eq!(ps.iter().map(|m| m.dim()).collect::<Vec<_>>(), vec![2]);
    let (alg, ..) = a2();
    let ps = indecomposable_projectives(&alg);
    assert_eq!(ps.iter().map(|m| m.dim()).collect::<Vec<_>>(), vec![2, 1]);
    let is = indecomposable_injectives(&alg);
    assert_eq!(is.iter().map(|m| m.dim()).collect::<Vec<_>>(), vec![1, 2]);
}

#[test]
fn radical_and_socle_of_regular_module() {
    let (alg, ..) = a2();
    let reg = Module::regular(&alg);
    assert_eq!(reg.radical_basis().cols(), 1);
    assert_eq!(reg.socle_basis().cols(), 2);
}

#[test]
fn non_peirce_matrix_algebra() {
    // M_2(k) from structure constants: one simple of dim 2, P = S
    let n = 4;
    let idx = |r: usize, c: usize| r * 2 + c;
    let mut t = vec![vec![vec![0i64; n]; n]; n];
    for a in 0..2 {
        for b in 0..2 {
            for d in 0..2 {
                t[idx(a, b)][idx(b, d)][idx(a, d)] = 1;
            }
        }
    }
    let alg = crate::algebra::Algebra::from_nested(P, &t, &[1, 0, 0, 1], "M2").unwrap();
    let ss = simples(&alg);
    assert_eq!(ss.len(), 1);
    assert_eq!(ss[0].dim(), 2);
    let reg = Module::regular(&alg);
    let d = decompose(&reg, 9).unwrap();
    assert_eq!(d.classes.len(), 1);
    assert_eq!(d.classes[0].1, 2);
    assert_eq!(global_dimension(&alg, 3), Bounded::Finite(0));
}
