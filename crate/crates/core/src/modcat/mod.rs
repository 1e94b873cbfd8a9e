//! The category `mod A`: modules given by action matrices, module maps,
//! Hom spaces, kernels and cokernels, decomposition, projective covers,
//! duality, Auslander-Reiten translation and Ext.
//!
//! Right modules are always represented as left modules over the opposite
//! algebra.

mod decompose;
mod hom;
mod homological;
mod map;

use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::kernel::{CoordSystem, Matrix};

pub use decompose::{
    decompose, is_indecomposable, is_isomorphic, is_isomorphic_indecomposable, Decomposition, Summand,
};
pub use hom::{hom_dim, HomSpace};
pub(crate) use homological::ext1_dim;
pub use homological::{
    bounded_dimension, ext_dim, global_dimension, indecomposable_injectives, indecomposable_projectives,
    injective_dimension, projective_cover, projective_dimension, simples, syzygy, top, transpose_and_tau, Bounded,
    Cover, DimensionKind, Resolution,
};
pub(crate) use map::hstack_maps;
pub use map::{Cokernel, Image, Kernel, ModuleMap};

/// Module coordinates adapted to the vertex idempotents: `basis` is an
/// invertible matrix whose column blocks span `e_v M`.
#[derive(Debug)]
pub(crate) struct Adapted {
    pub basis: Matrix,
    pub inverse: Matrix,
    pub offsets: Vec<usize>,
    /// For every algebra generator, its `(l, r)` block in adapted coordinates.
    pub gen_blocks: Vec<Matrix>,
}

impl Adapted {
    pub fn size(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }
}

#[derive(Clone)]
pub struct Module {
    alg: Arc<Algebra>,
    dim: usize,
    action: Arc<Vec<Matrix>>,
    adapted: Arc<OnceLock<Adapted>>,
}

impl std::fmt::Debug for Module {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Module(dim {} over {})", self.dim, self.alg.label())
    }
}

#[derive(Serialize)]
struct ModuleJson<'a> {
    algebra: &'a str,
    dim: usize,
    action: Vec<Vec<Vec<u32>>>,
}

impl Module {
    /// Validated construction: the unit acts as the identity and the action
    /// is multiplicative on all pairs of basis elements.
    pub fn new(alg: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Result<Module> {
        if action.len() != alg.dim() || action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Invalid("action matrices have the wrong shape".into()));
        }
        let m = Module::from_trusted(alg, dim, action);
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn from_trusted(alg: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Module {
        debug_assert_eq!(action.len(), alg.dim());
        Module { alg, dim, action: Arc::new(action), adapted: Arc::new(OnceLock::new()) }
    }

    pub fn validate(&self) -> Result<()> {
        let p = self.prime();
        if self.act(self.alg.unit()) != Matrix::identity(p, self.dim) {
            return Err(Error::Invalid("unit does not act as the identity".into()));
        }
        for i in 0..self.alg.dim() {
            for j in 0..self.alg.dim() {
                let lhs = self.action[i].mul(&self.action[j]);
                let rhs = self.act(&self.alg.product_of_basis(i, j));
                if lhs != rhs {
                    return Err(Error::Invalid(format!("action is not multiplicative at ({i}, {j})")));
                }
            }
        }
        Ok(())
    }

    pub fn zero(alg: &Arc<Algebra>) -> Module {
        let p = alg.prime();
        Module::from_trusted(alg.clone(), 0, vec![Matrix::zeros(p, 0, 0); alg.dim()])
    }

    /// The regular left module `A_A`.
    pub fn regular(alg: &Arc<Algebra>) -> Module {
        Module::from_trusted(alg.clone(), alg.dim(), alg.left_mults().to_vec())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn prime(&self) -> u32 {
        self.alg.prime()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// Action matrix of the `i`-th basis element.
    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn act(&self, x: &[u32]) -> Matrix {
        Matrix::combination(self.prime(), self.dim, self.dim, &self.action, x)
    }

    pub(crate) fn same_algebra(&self, other: &Module) -> bool {
        Algebra::same(&self.alg, &other.alg)
    }

    pub(crate) fn check_same(&self, other: &Module) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub(crate) fn adapted(&self) -> &Adapted {
        self.adapted.get_or_init(|| {
            let p = self.prime();
            let idem = self.alg.vertex_idempotents();
            let mut cols: Vec<Vec<u32>> = Vec::with_capacity(self.dim);
            let mut offsets = vec![0];
            for e in &idem {
                let pe = self.act(e);
                let space = pe.column_space();
                for j in 0..space.cols() {
                    cols.push((0..self.dim).map(|i| space.get(i, j)).collect());
                }
                offsets.push(cols.len());
            }
            assert_eq!(cols.len(), self.dim, "vertex idempotents do not sum to the identity");
            let basis = crate::kernel::columns_to_matrix(p, self.dim, &cols);
            let inverse = basis.inverse().expect("adapted basis is invertible");
            let gen_blocks = self
                .alg
                .generators()
                .iter()
                .map(|g| {
                    let (l, r) = g.block;
                    let full = inverse.mul(&self.act(&g.element)).mul(&basis);
                    full.block(offsets[l], offsets[r], offsets[l + 1] - offsets[l], offsets[r + 1] - offsets[r])
                })
                .collect();
            Adapted { basis, inverse, offsets, gen_blocks }
        })
    }

    /// Dimension of `e_v M` for every vertex.
    pub fn dimension_vector(&self) -> Vec<usize> {
        let a = self.adapted();
        (0..self.alg.vertex_count()).map(|v| a.size(v)).collect()
    }

    /// Direct sum with the canonical injections and projections.
    pub fn direct_sum(alg: &Arc<Algebra>, parts: &[&Module]) -> (Module, Vec<Matrix>, Vec<Matrix>) {
        let p = alg.prime();
        let dim: usize = parts.iter().map(|m| m.dim).sum();
        let action = (0..alg.dim())
            .map(|i| Matrix::block_diag(p, &parts.iter().map(|m| &m.action[i]).collect::<Vec<_>>()))
            .collect();
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        let mut off = 0;
        for m in parts {
            let mut i = Matrix::zeros(p, dim, m.dim);
            let mut q = Matrix::zeros(p, m.dim, dim);
            for k in 0..m.dim {
                i.set(off + k, k, 1);
                q.set(k, off + k, 1);
            }
            inj.push(i);
            proj.push(q);
            off += m.dim;
        }
        (Module::from_trusted(alg.clone(), dim, action), inj, proj)
    }

    pub fn sum(alg: &Arc<Algebra>, parts: &[&Module]) -> Module {
        Module::direct_sum(alg, parts).0
    }

    /// `M^k`.
    pub fn power(&self, k: usize) -> Module {
        Module::sum(&self.alg, &vec![self; k])
    }

    /// Submodule spanned by the columns of `basis` (an invariant subspace
    /// with independent columns), with its inclusion matrix.
    pub fn submodule(&self, basis: &Matrix) -> (Module, Matrix) {
        let p = self.prime();
        let k = basis.cols();
        let cols: Vec<Vec<u32>> = (0..k).map(|j| (0..self.dim).map(|i| basis.get(i, j)).collect()).collect();
        let cs = CoordSystem::new(p, self.dim, cols);
        let action = self
            .action
            .iter()
            .map(|a| {
                let img = a.mul(basis);
                let mut m = Matrix::zeros(p, k, k);
                for j in 0..k {
                    let col: Vec<u32> = (0..self.dim).map(|i| img.get(i, j)).collect();
                    for (i, c) in cs.coords(&col).into_iter().enumerate() {
                        m.set(i, j, c);
                    }
                }
                m
            })
            .collect();
        (Module::from_trusted(self.alg.clone(), k, action), basis.clone())
    }

    /// Quotient by the invariant subspace spanned by the columns of `sub`,
    /// with the projection matrix.
    pub fn quotient(&self, sub: &Matrix) -> (Module, Matrix) {
        let p = self.prime();
        // rows of q span the annihilator of the column space of `sub`
        let q = if sub.cols() == 0 { Matrix::identity(p, self.dim) } else { sub.cokernel_projection() };
        let k = q.rows();
        let right = right_inverse(&q);
        let action = self.action.iter().map(|a| q.mul(a).mul(&right)).collect();
        (Module::from_trusted(self.alg.clone(), k, action), q)
    }

    /// Transport of structure along an invertible matrix `t`: the module
    /// with action `t a t^{-1}`.
    pub fn conjugate(&self, t: &Matrix) -> Module {
        let inv = t.inverse().expect("conjugating matrix is invertible");
        let action = self.action.iter().map(|a| t.mul(a).mul(&inv)).collect();
        Module::from_trusted(self.alg.clone(), self.dim, action)
    }

    /// Dual module `D M = Hom_k(M, k)` over the opposite algebra.
    pub fn dual(&self) -> Module {
        let op = self.alg.opposite();
        let action = self.action.iter().map(|a| a.transpose()).collect();
        Module::from_trusted(op, self.dim, action)
    }

    /// Radical `rad A * M` as a column basis.
    pub fn radical_basis(&self) -> Matrix {
        let p = self.prime();
        let mut blocks = Vec::new();
        for r in self.alg.radical() {
            blocks.push(self.act(r));
        }
        if blocks.is_empty() {
            return Matrix::zeros(p, self.dim, 0);
        }
        let refs: Vec<&Matrix> = blocks.iter().collect();
        Matrix::hstack(p, self.dim, &refs).column_space()
    }

    /// Socle as a column basis: vectors killed by the radical.
    pub fn socle_basis(&self) -> Matrix {
        let p = self.prime();
        let rad = self.alg.radical();
        if rad.is_empty() {
            return Matrix::identity(p, self.dim);
        }
        let blocks: Vec<Matrix> = rad.iter().map(|r| self.act(r)).collect();
        let refs: Vec<&Matrix> = blocks.iter().collect();
        Matrix::vstack(p, self.dim, &refs).kernel_matrix()
    }

    /// Serializable view used in certificates.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ModuleJson {
            algebra: self.alg.label(),
            dim: self.dim,
            action: self.action.iter().map(|m| m.to_rows()).collect(),
        })
        .expect("module serializes")
    }
}

/// A right inverse `r` of a full-row-rank matrix `q` (so `q r = 1`).
pub(crate) fn right_inverse(q: &Matrix) -> Matrix {
    let p = q.prime();
    let k = q.rows();
    let n = q.cols();
    if k == 0 {
        return Matrix::zeros(p, n, 0);
    }
    let piv = q.rref().pivots;
    let sq = q.select_columns(&piv);
    let inv = sq.inverse().expect("full row rank");
    let mut r = Matrix::zeros(p, n, k);
    for (i, &c) in piv.iter().enumerate() {
        for j in 0..k {
            r.set(c, j, inv.get(i, j));
        }
    }
    r
}

/// A left inverse `l` of a full-column-rank matrix `s` (so `l s = 1`).
pub(crate) fn left_inverse(s: &Matrix) -> Matrix {
    right_inverse(&s.transpose()).transpose()
}

#[cfg(test)]
mod tests;
