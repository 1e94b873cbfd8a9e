//! Projective covers, syzygies, transpose, AR translate, Ext and bounded
//! homological dimensions.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::hom::{hom_dim, HomSpace};
use super::{Module, ModuleMap};
use crate::algebra::Algebra;
use crate::kernel::{Echelon, Matrix};

/// Outcome of a dimension computation cut off at a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Bounded {
    Finite(usize),
    ExceedsBound,
}

impl Bounded {
    pub fn finite(self) -> Option<usize> {
        match self {
            Bounded::Finite(d) => Some(d),
            Bounded::ExceedsBound => None,
        }
    }

    pub fn max(self, other: Bounded) -> Bounded {
        match (self, other) {
            (Bounded::Finite(a), Bounded::Finite(b)) => Bounded::Finite(a.max(b)),
            _ => Bounded::ExceedsBound,
        }
    }
}

impl std::fmt::Display for Bounded {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Bounded::Finite(d) => write!(f, "{d}"),
            Bounded::ExceedsBound => write!(f, "exceeds bound"),
        }
    }
}

/// The idempotents used to build indecomposable projectives `A e`.
fn projective_idempotents(alg: &Arc<Algebra>) -> Vec<Vec<u32>> {
    if alg.peirce().is_some() {
        alg.vertex_idempotents()
    } else {
        alg.structure().expect("primitive idempotents").idempotents.clone()
    }
}

/// `A e` as a submodule of the regular module, with its basis in `A`.
fn projective_at(alg: &Arc<Algebra>, e: &[u32], vertex: Option<usize>) -> (Module, Matrix) {
    let p = alg.prime();
    let regular = Module::regular(alg);
    let basis = match (alg.peirce(), vertex) {
        (Some(pc), Some(v)) => {
            let cols: Vec<usize> = (0..alg.dim()).filter(|&i| pc.block[i].1 == v).collect();
            let mut b = Matrix::zeros(p, alg.dim(), cols.len());
            for (j, &c) in cols.iter().enumerate() {
                b.set(c, j, 1);
            }
            b
        }
        _ => alg.right_mult(e).column_space(),
    };
    regular.submodule(&basis)
}

/// One indecomposable projective `A e` per primitive idempotent.
pub fn indecomposable_projectives(alg: &Arc<Algebra>) -> Vec<Module> {
    let peirce = alg.peirce().is_some();
    projective_idempotents(alg).iter().enumerate().map(|(v, e)| projective_at(alg, e, peirce.then_some(v)).0).collect()
}

/// Indecomposable injectives `D(e A)`, one per primitive idempotent.
pub fn indecomposable_injectives(alg: &Arc<Algebra>) -> Vec<Module> {
    indecomposable_projectives(&alg.opposite()).iter().map(|p| p.dual()).collect()
}

/// Top `M / rad M` with its projection.
pub fn top(m: &Module) -> (Module, Matrix) {
    m.quotient(&m.radical_basis())
}

/// Simple modules, one per iso class of indecomposable projective.
pub fn simples(alg: &Arc<Algebra>) -> Vec<Module> {
    let mut out: Vec<Module> = Vec::new();
    for p in indecomposable_projectives(alg) {
        let s = top(&p).0;
        let dup = out.iter().any(|t| super::is_isomorphic_indecomposable(t, &s));
        if !dup {
            out.push(s);
        }
    }
    out
}

/// A projective cover `P -> M` with the list of idempotent indices used.
#[derive(Clone, Debug)]
pub struct Cover {
    pub map: ModuleMap,
    pub summands: Vec<usize>,
}

/// Minimal projective cover: lift a basis of the top vertex by vertex.
pub fn projective_cover(m: &Module) -> Cover {
    let alg = m.algebra().clone();
    let p = m.prime();
    if m.dim() == 0 {
        let z = Module::zero(&alg);
        return Cover { map: ModuleMap::zero(&z, m), summands: vec![] };
    }
    let peirce = alg.peirce().is_some();
    let idem = projective_idempotents(&alg);
    let rad = m.radical_basis();
    let mut ech = Echelon::new(p, m.dim());
    for j in 0..rad.cols() {
        ech.insert(&(0..m.dim()).map(|i| rad.get(i, j)).collect::<Vec<_>>());
    }
    let mut chosen: Vec<(usize, Vec<u32>)> = Vec::new();
    for (v, e) in idem.iter().enumerate() {
        let space = m.act(e).column_space();
        for j in 0..space.cols() {
            if ech.is_full() {
                break;
            }
            let x: Vec<u32> = (0..m.dim()).map(|i| space.get(i, j)).collect();
            if ech.contains(&x) {
                continue;
            }
            for a in m.actions() {
                ech.insert(&a.mul_vec(&x));
            }
            chosen.push((v, x));
        }
    }
    let mut parts = Vec::new();
    let mut blocks = Vec::new();
    for (v, x) in &chosen {
        let (pm, basis) = projective_at(&alg, &idem[*v], peirce.then_some(*v));
        // basis vector b of A e goes to b . x
        let mut img = Matrix::zeros(p, m.dim(), pm.dim());
        for j in 0..pm.dim() {
            let b: Vec<u32> = (0..alg.dim()).map(|i| basis.get(i, j)).collect();
            let col = m.act(&b).mul_vec(x);
            for (i, c) in col.into_iter().enumerate() {
                img.set(i, j, c);
            }
        }
        parts.push(pm);
        blocks.push(img);
    }
    let refs: Vec<&Module> = parts.iter().collect();
    let cover = Module::sum(&alg, &refs);
    let brefs: Vec<&Matrix> = blocks.iter().collect();
    let map = super::map::hstack_maps(m, &cover, &brefs);
    debug_assert!(map.is_surjective());
    Cover { map, summands: chosen.into_iter().map(|(v, _)| v).collect() }
}

/// Syzygy `Ω M` with its inclusion into the projective cover.
pub fn syzygy(m: &Module) -> (Module, ModuleMap, Cover) {
    let cover = projective_cover(m);
    let k = cover.map.kernel();
    (k.module, k.inclusion, cover)
}

/// Minimal projective resolution truncated after `len` terms.
#[derive(Clone, Debug)]
pub struct Resolution {
    /// `P_0, P_1, ...`
    pub terms: Vec<Module>,
    /// `d_i : P_i -> P_{i-1}` for `i >= 1`; `differentials[0]` is `P_0 -> M`.
    pub differentials: Vec<ModuleMap>,
    /// `Ω^0 M = M, Ω^1 M, ...`, one more than `terms`.
    pub syzygies: Vec<Module>,
}

impl Resolution {
    pub fn new(m: &Module, len: usize) -> Resolution {
        let mut terms = Vec::new();
        let mut differentials = Vec::new();
        let mut syzygies = vec![m.clone()];
        let mut prev_incl: Option<ModuleMap> = None;
        for _ in 0..len {
            let cur = syzygies.last().unwrap().clone();
            if cur.is_zero() {
                break;
            }
            let (omega, incl, cover) = syzygy(&cur);
            let d = match &prev_incl {
                None => cover.map.clone(),
                Some(i) => i.compose(&cover.map),
            };
            terms.push(cover.map.source.clone());
            differentials.push(d);
            syzygies.push(omega);
            prev_incl = Some(incl);
        }
        Resolution { terms, differentials, syzygies }
    }
}

/// `dim Ext^i(M, N)` by dimension shifting along a minimal resolution.
pub fn ext_dim(m: &Module, n: &Module, i: usize) -> usize {
    if i == 0 {
        return hom_dim(m, n);
    }
    let mut cur = m.clone();
    for _ in 0..(i - 1) {
        cur = syzygy(&cur).0;
        if cur.is_zero() {
            return 0;
        }
    }
    ext1_dim(&cur, n)
}

/// `dim Ext^1(M, N) = dim Hom(Ω M, N) - dim Hom(P_0, N) + dim Hom(M, N)`.
pub(crate) fn ext1_dim(m: &Module, n: &Module) -> usize {
    if m.is_zero() || n.is_zero() {
        return 0;
    }
    let (omega, _, cover) = syzygy(m);
    if omega.is_zero() {
        return 0;
    }
    hom_dim(&omega, n) + hom_dim(m, n) - hom_dim(&cover.map.source, n)
}

pub fn projective_dimension(m: &Module, bound: usize) -> Bounded {
    let mut cur = m.clone();
    for d in 0..=bound {
        let omega = syzygy(&cur).0;
        if omega.is_zero() {
            return Bounded::Finite(d);
        }
        cur = omega;
    }
    Bounded::ExceedsBound
}

pub fn injective_dimension(m: &Module, bound: usize) -> Bounded {
    projective_dimension(&m.dual(), bound)
}

/// Global dimension as the maximum projective dimension of the simples.
pub fn global_dimension(alg: &Arc<Algebra>, bound: usize) -> Bounded {
    simples(alg).iter().map(|s| projective_dimension(s, bound)).fold(Bounded::Finite(0), Bounded::max)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimensionKind {
    Projective,
    Injective,
}

/// `bounded_dimension` for a module; see [`global_dimension`] for algebras.
pub fn bounded_dimension(kind: DimensionKind, m: &Module, bound: usize) -> Bounded {
    match kind {
        DimensionKind::Projective => projective_dimension(m, bound),
        DimensionKind::Injective => injective_dimension(m, bound),
    }
}

/// `Hom_A(P, A)` as a left module over the opposite algebra, acting by
/// right multiplication after the map, together with its Hom space.
pub(crate) fn hom_into_regular(p: &Module) -> (Module, HomSpace) {
    let alg = p.algebra().clone();
    let regular = Module::regular(&alg);
    let hs = HomSpace::new(p, &regular).expect("same algebra");
    let op = alg.opposite();
    let action: Vec<Matrix> = (0..alg.dim())
        .map(|i| {
            let r = alg.right_mult(&alg.basis_vector(i));
            hs.induced(&hs, |phi| r.mul(phi))
        })
        .collect();
    (Module::from_trusted(op, hs.dim(), action), hs)
}

/// Classical transpose `Tr M` (over the opposite algebra) and the
/// Auslander-Reiten translate `τ M = D Tr M`.
pub fn transpose_and_tau(m: &Module) -> (Module, Module) {
    let (omega, incl, _) = syzygy(m);
    let op = m.algebra().opposite();
    if omega.is_zero() {
        let z = Module::zero(&op);
        let tau = z.dual();
        return (z, tau);
    }
    let cover1 = projective_cover(&omega);
    let f = incl.compose(&cover1.map);
    let (h0, hs0) = hom_into_regular(&f.target);
    let (h1, hs1) = hom_into_regular(&f.source);
    let hf = hs0.pre(&f.matrix, &hs1);
    let map = ModuleMap::from_trusted(&h0, &h1, hf);
    let tr = map.cokernel().module;
    let tau = tr.dual();
    (tr, tau)
}
