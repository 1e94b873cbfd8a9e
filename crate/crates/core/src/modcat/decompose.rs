//! Krull-Schmidt decomposition and isomorphism tests.
//!
//! A module is indecomposable iff its endomorphism ring is local; otherwise
//! a nontrivial idempotent of the endomorphism ring splits it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hom::hom_basis;
use super::Module;
use crate::algebra::{MatAlgebra, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::kernel::Matrix;

/// An indecomposable summand with split inclusion and projection.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub inclusion: Matrix,
    pub projection: Matrix,
    /// Index into `Decomposition::classes`.
    pub class: usize,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub pieces: Vec<Summand>,
    /// Representative of each isomorphism class and its multiplicity.
    pub classes: Vec<(Module, usize)>,
}

impl Decomposition {
    /// Check that inclusions and projections form a biproduct witness:
    /// `q_i i_j = δ_ij` and `Σ i_k q_k = 1`.
    pub fn verify(&self, m: &Module) -> bool {
        let p = m.prime();
        let mut sum = Matrix::zeros(p, m.dim(), m.dim());
        for (a, s) in self.pieces.iter().enumerate() {
            for (b, t) in self.pieces.iter().enumerate() {
                let c = s.projection.mul(&t.inclusion);
                let expected = if a == b {
                    Matrix::identity(p, s.module.dim())
                } else {
                    Matrix::zeros(p, s.module.dim(), t.module.dim())
                };
                if c != expected {
                    return false;
                }
            }
            sum = sum.add(&s.inclusion.mul(&s.projection));
            let f = super::ModuleMap::from_trusted(&s.module, m, s.inclusion.clone());
            let g = super::ModuleMap::from_trusted(m, &s.module, s.projection.clone());
            if !f.is_homomorphism() || !g.is_homomorphism() {
                return false;
            }
        }
        sum == Matrix::identity(p, m.dim())
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.1).collect()
    }
}

/// True when `End(m)` is local.
pub fn is_indecomposable(m: &Module) -> Result<bool> {
    if m.dim() == 0 {
        return Ok(false);
    }
    let end = hom_basis(m, m);
    if end.len() == 1 {
        return Ok(true);
    }
    MatAlgebra::new(m.prime(), m.dim(), end).is_local()
}

pub fn decompose(m: &Module, seed: u64) -> Result<Decomposition> {
    let p = m.prime();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pieces: Vec<(Module, Matrix, Matrix)> = Vec::new();
    let mut stack = vec![(m.clone(), Matrix::identity(p, m.dim()), Matrix::identity(p, m.dim()))];
    while let Some((n, inc, proj)) = stack.pop() {
        if n.dim() == 0 {
            continue;
        }
        let end = hom_basis(&n, &n);
        if end.len() == 1 {
            pieces.push((n, inc, proj));
            continue;
        }
        let ring = MatAlgebra::new(p, n.dim(), end);
        if ring.is_local()? {
            pieces.push((n, inc, proj));
            continue;
        }
        let one = Matrix::identity(p, n.dim());
        let e = ring.split_idempotent(&one, &mut rng, DEFAULT_BUDGET)?;
        let f = one.sub(&e);
        // push in reverse so the `e` part is processed first
        for idem in [f, e] {
            let basis = idem.column_space();
            let (sub, incl) = n.submodule(&basis);
            let q = super::left_inverse(&incl).mul(&idem);
            stack.push((sub, inc.mul(&incl), q.mul(&proj)));
        }
    }
    let mut classes: Vec<(Module, usize)> = Vec::new();
    let mut out = Vec::new();
    for (module, inclusion, projection) in pieces {
        let class = match classes.iter().position(|(r, _)| is_isomorphic_indecomposable(r, &module)) {
            Some(c) => {
                classes[c].1 += 1;
                c
            }
            None => {
                classes.push((module.clone(), 1));
                classes.len() - 1
            }
        };
        out.push(Summand { module, inclusion, projection, class });
    }
    Ok(Decomposition { pieces: out, classes })
}

/// Isomorphism test for two indecomposable modules.
///
/// Endomorphism rings are local, so `M ≅ N` iff some composite `g f` with
/// `f : M -> N`, `g : N -> M` is invertible; by bilinearity it suffices to
/// try pairs of basis vectors.
pub fn is_isomorphic_indecomposable(m: &Module, n: &Module) -> bool {
    if !m.same_algebra(n) || m.dim() != n.dim() {
        return false;
    }
    if m.dim() == 0 {
        return true;
    }
    if m.dimension_vector() != n.dimension_vector() {
        return false;
    }
    let fs = hom_basis(m, n);
    if fs.is_empty() {
        return false;
    }
    let gs = hom_basis(n, m);
    for f in &fs {
        if f.is_invertible() {
            return true;
        }
        for g in &gs {
            if g.mul(f).is_invertible() {
                return true;
            }
        }
    }
    false
}

/// Whether an invertible module map `m -> n` exists.
///
/// Random combinations of a Hom basis are tried first (an isomorphism is
/// found with high probability when one exists); the deterministic answer
/// then comes from comparing Krull-Schmidt decompositions.
pub fn is_isomorphic(m: &Module, n: &Module, seed: u64) -> Result<bool> {
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    if m.dim() != n.dim() || m.dimension_vector() != n.dimension_vector() {
        return Ok(false);
    }
    if m.dim() == 0 {
        return Ok(true);
    }
    let fs = hom_basis(m, n);
    if fs.len() != hom_basis(m, m).len() || fs.len() != hom_basis(n, n).len() {
        return Ok(false);
    }
    let p = m.prime();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..8 {
        let c: Vec<u32> = (0..fs.len()).map(|_| rng.gen_range(0..p)).collect();
        if Matrix::combination(p, n.dim(), m.dim(), &fs, &c).is_invertible() {
            return Ok(true);
        }
    }
    let dm = decompose(m, seed)?;
    let dn = decompose(n, seed)?;
    if dm.classes.len() != dn.classes.len() {
        return Ok(false);
    }
    let mut used = vec![false; dn.classes.len()];
    for (rm, km) in &dm.classes {
        let hit = dn
            .classes
            .iter()
            .enumerate()
            .find(|(j, (rn, kn))| !used[*j] && kn == km && is_isomorphic_indecomposable(rm, rn));
        match hit {
            Some((j, _)) => used[j] = true,
            None => return Ok(false),
        }
    }
    Ok(true)
}
