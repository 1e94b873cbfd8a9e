use gsilt::input::fixtures;
use gsilt::kernel::Matrix;
use gsilt::modcat::{decompose, is_isomorphic, Module};
use gsilt::silting::ar_knit;
use proptest::prelude::*;

const P: u32 = 1009;

fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(0..P, r * c).prop_map(move |data| Matrix::from_vec(P, r, c, data))
    })
}

/// Low-rank matrices are where elimination bugs hide.
fn product(max: usize) -> impl Strategy<Value = Matrix> {
    (matrix(max), 1..=max).prop_flat_map(|(a, k)| {
        prop::collection::vec(0..P, a.cols() * k).prop_map(move |data| a.mul(&Matrix::from_vec(P, a.cols(), k, data)))
    })
}

proptest! {
    #[test]
    fn rank_nullity(m in prop_oneof![matrix(9), product(9)]) {
        let ker = m.kernel();
        prop_assert_eq!(m.rank() + ker.len(), m.cols());
        for v in &ker {
            prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn solve_recovers_a_consistent_right_hand_side(m in matrix(8), seed in 0..P) {
        let x: Vec<u32> = (0..m.cols() as u32).map(|i| (seed + 31 * i) % P).collect();
        let rhs = Matrix::column(P, &m.mul_vec(&x));
        let sol = m.solve(&rhs).expect("consistent system");
        prop_assert_eq!(m.mul(&sol), rhs);
    }

    #[test]
    fn inverse_is_two_sided(m in (1..7usize).prop_flat_map(|n| prop::collection::vec(0..P, n * n).prop_map(move |d| Matrix::from_vec(P, n, n, d)))) {
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(m.mul(&inv), Matrix::identity(P, m.rows()));
                prop_assert_eq!(inv.mul(&m), Matrix::identity(P, m.rows()));
            }
            None => prop_assert!(m.rank() < m.rows()),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Random direct sums of indecomposables over k[x]/(x^3) decompose back
    /// into the same multiset.
    #[test]
    fn decomposition_recovers_multiplicities(mults in prop::collection::vec(0..3usize, 3), seed in 0..64u64) {
        prop_assume!(mults.iter().sum::<usize>() > 0);
        let alg = fixtures::load("kx3", None).unwrap();
        let (blocks, closed) = ar_knit(&alg, 16, 0).unwrap();
        prop_assert!(closed);
        prop_assert_eq!(blocks.len(), 3);
        let parts: Vec<&Module> =
            blocks.iter().zip(&mults).flat_map(|(b, &k)| std::iter::repeat_n(b, k)).collect();
        let sum = Module::sum(&alg, &parts);
        let d = decompose(&sum, seed).unwrap();
        prop_assert!(d.verify(&sum));
        let mut found = vec![0; blocks.len()];
        for (piece, k) in &d.classes {
            let i = blocks.iter().position(|b| b.dim() == piece.dim()).unwrap();
            prop_assert!(is_isomorphic(&blocks[i], piece, 0).unwrap());
            found[i] += k;
        }
        prop_assert_eq!(found, mults);
    }
}
