use crate::cmaus::CMAuslanderContext;
use crate::error::Result;
use crate::kernel::{Echelon, Matrix, QuotientCoords};
use crate::modcat::{Module, ModuleMap};

use super::endo::postcompose;
use super::{BContext, HomK, TwoTermComplex};

/// The triangle `E -> G' -> G'' -> E[1]` with `G'' -> E[1]` a right
/// `add c`-approximation, and its image over `B`.
#[derive(Clone, Debug)]
pub struct DeltaReport {
    pub g_second: TwoTermComplex,
    pub g_prime: TwoTermComplex,
    /// `G' -> G''` as the pair `[f1, f0]`.
    pub f: Vec<Matrix>,
    /// `Hom(c, G'[1]) = 0 = Hom(G', c[1])`; for silting `c` this says `G' ∈ add c`.
    pub g_prime_in_add: bool,
    /// `Hom_K(c, f)` as a map of `B`-modules.
    pub q_map: ModuleMap,
    pub q_self_extensions: usize,
}

#[derive(Clone, Debug)]
pub struct LambdaCorrespondence {
    /// `Hom(E, c)`: a two-term complex of projective `Λ`-modules.
    pub p_complex: TwoTermComplex,
    /// `(n, dim Hom_K(c, c[n]), dim Hom_K(P, P[n]))` for `n = -1, 0, 1`.
    pub hom_dims: Vec<(i32, usize, usize)>,
    pub delta: DeltaReport,
}

impl LambdaCorrespondence {
    pub fn hom_dims_agree(&self) -> bool {
        self.hom_dims.iter().all(|&(_, a, b)| a == b)
    }
}

/// `Hom(E, c)` over `Λ` together with the Hom dimensions on both sides.
pub fn projective_image(ctx: &CMAuslanderContext, c: &TwoTermComplex) -> (TwoTermComplex, Vec<(i32, usize, usize)>) {
    let p_complex = TwoTermComplex::from_parts(ctx.e_functor_map(&c.d1), true);
    let hom_dims = [-1, 0, 1]
        .into_iter()
        .map(|n| (n, HomK::new(c, c, n, &[]).dim(), HomK::new(&p_complex, &p_complex, n, &[]).dim()))
        .collect();
    (p_complex, hom_dims)
}

pub fn lambda_correspondence(ctx: &CMAuslanderContext, c: &TwoTermComplex) -> Result<LambdaCorrespondence> {
    let (p_complex, hom_dims) = projective_image(ctx, c);
    let delta = delta_triangle(ctx, c)?;
    Ok(LambdaCorrespondence { p_complex, hom_dims, delta })
}

/// The triangle `E -> G' -> G'' -> E[1]`. `G'' = c^k -> E[1]` stacks lifts of
/// a basis of the top of `Hom_K(c, E[1])` as a `B`-module, which generate it,
/// so the map is a right `add c`-approximation.
pub fn delta_triangle(ctx: &CMAuslanderContext, c: &TwoTermComplex) -> Result<DeltaReport> {
    let e = &ctx.atlas.sum;
    let p = e.prime();
    let alg = e.algebra().clone();
    let bctx = BContext::build(c)?;
    let e_stalk = TwoTermComplex::from_parts(ModuleMap::zero(&Module::zero(&alg), e), true);
    let (hm, approx) = bctx.hom_module(&e_stalk, 1);
    let rad = hm.radical_basis();
    let rad_cols: Vec<Vec<u32>> = (0..rad.cols()).map(|j| (0..rad.rows()).map(|i| rad.get(i, j)).collect()).collect();
    let units: Vec<Vec<u32>> = Matrix::identity(p, hm.dim()).to_rows();
    let top = QuotientCoords::new(p, hm.dim(), &rad_cols, &units);
    let generators: Vec<Vec<Matrix>> = top.representatives().iter().map(|v| approx.combine(v)).collect();
    let k = generators.len();
    let g_second = c.power(k);
    let (x1, x0) = (g_second.g1().clone(), g_second.g0().clone());
    // cocone: X_1 -> X_0 ⊕ E with differential (d ; g)
    let g = if k == 0 {
        Matrix::zeros(p, e.dim(), 0)
    } else {
        let blocks: Vec<&Matrix> = generators.iter().map(|r| &r[0]).collect();
        Matrix::hstack(p, e.dim(), &blocks)
    };
    let (target, _, proj) = Module::direct_sum(&alg, &[&x0, e]);
    let d = Matrix::vstack(p, x1.dim(), &[&g_second.d1.matrix, &g]);
    let g_prime = TwoTermComplex::from_parts(ModuleMap::from_trusted(&x1, &target, d), true);
    let f = vec![Matrix::identity(p, x1.dim()), proj[0].clone()];

    // for silting c, add c = c^⊥>0 ∩ ⊥>0 c, and shifts past 1 vanish
    let g_prime_in_add = HomK::new(c, &g_prime, 1, &[]).dim() == 0 && HomK::new(&g_prime, c, 1, &[]).dim() == 0;

    let (q1, h1) = bctx.hom_module(&g_prime, 0);
    let (q0, h0) = bctx.hom_module(&g_second, 0);
    let mut m = Matrix::zeros(p, q0.dim(), q1.dim());
    for (j, phi) in h1.reps().iter().enumerate() {
        for (i, v) in h0.coords(&postcompose(0, &f, phi)).into_iter().enumerate() {
            m.set(i, j, v);
        }
    }
    let q_map = ModuleMap::from_trusted(&q1, &q0, m);
    let q_self_extensions = if g_prime_in_add {
        lifted_self_extensions(&g_prime, &g_second, &f)
    } else {
        let qc = TwoTermComplex::from_parts(q_map.clone(), true);
        HomK::new(&qc, &qc, 1, &[]).dim()
    };
    Ok(DeltaReport { g_second, g_prime, f, g_prime_in_add, q_map, q_self_extensions })
}

/// `Hom_K(Q, Q[1])` for `Q = Hom(c, f)` with `f : G' -> G''` in `add c`.
/// `Hom(c, -)` is fully faithful on `add c`, so this is `Hom_K(G', G'')`
/// modulo `f ∘ End(G') + End(G'') ∘ f`, computed over `A`.
pub(crate) fn lifted_self_extensions(g_prime: &TwoTermComplex, g_second: &TwoTermComplex, f: &[Matrix]) -> usize {
    let p = g_prime.g0().prime();
    let hom = HomK::new(g_prime, g_second, 0, &[]);
    if hom.dim() == 0 {
        return 0;
    }
    let mut ech = Echelon::new(p, hom.dim());
    for a in HomK::new(g_prime, g_prime, 0, &[]).reps() {
        ech.insert(&hom.coords(&postcompose(0, f, a)));
    }
    for b in HomK::new(g_second, g_second, 0, &[]).reps() {
        ech.insert(&hom.coords(&postcompose(0, b, f)));
    }
    hom.dim() - ech.rank()
}
