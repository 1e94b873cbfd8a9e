//! Finite-dimensional associative unital algebras over `F_p`, given by
//! structure constants.

mod matalg;
mod quiver;

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock, Weak};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::kernel::{is_prime, Echelon, Matrix};

pub use matalg::{span_dim, MatAlgebra};
pub use quiver::{Arrow, QuiverPresentation, Relation};

/// Default trial budget for Las Vegas splitting.
pub const DEFAULT_BUDGET: usize = 64;
/// Default seed for the cached structure computation.
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Peirce data: a set of orthogonal idempotents that are basis elements,
/// and for every basis element `b` the pair `(l, r)` with `b = e_l b e_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Peirce {
    pub idempotents: Vec<usize>,
    pub block: Vec<(usize, usize)>,
}

/// Radical, primitive idempotents and a generating set of an algebra.
#[derive(Clone, Debug)]
pub struct Structure {
    pub radical: Vec<Vec<u32>>,
    pub idempotents: Vec<Vec<u32>>,
    /// Elements spanning the algebra modulo `rad^2` together with the
    /// idempotents (Peirce case) or the unit (general case).
    pub generators: Vec<Vec<u32>>,
}

pub struct Algebra {
    p: u32,
    dim: usize,
    table: Vec<u32>,
    unit: Vec<u32>,
    label: String,
    peirce: Option<Peirce>,
    fingerprint: u64,
    seed: u64,
    left_mults: OnceLock<Vec<Matrix>>,
    radical: OnceLock<Vec<Vec<u32>>>,
    generators: OnceLock<Vec<Generator>>,
    structure: OnceLock<Result<Structure>>,
    op: OnceLock<Arc<Algebra>>,
    op_back: Weak<Algebra>,
}

/// An algebra generator together with its Peirce block `(l, r)`; without
/// Peirce data every generator sits in the single block `(0, 0)`.
#[derive(Clone, Debug)]
pub struct Generator {
    pub element: Vec<u32>,
    pub block: (usize, usize),
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra").field("label", &self.label).field("p", &self.p).field("dim", &self.dim).finish()
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
            && self.p == other.p
            && self.table == other.table
            && self.unit == other.unit
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// Validated construction from a flat table `c[(i*n + j)*n + k]`.
    pub fn from_structure_constants(
        p: u32,
        dim: usize,
        table: Vec<u32>,
        unit: Vec<u32>,
        label: &str,
    ) -> Result<Arc<Self>> {
        let alg = Self::build(p, dim, table, unit, label, None)?;
        alg.validate()?;
        Ok(Arc::new(alg))
    }

    /// Construction from a nested table `c[i][j][k]` of signed integers.
    pub fn from_nested(p: u32, table: &[Vec<Vec<i64>>], unit: &[i64], label: &str) -> Result<Arc<Self>> {
        let n = table.len();
        let mut flat = Vec::with_capacity(n * n * n);
        for row in table {
            if row.len() != n {
                return Err(Error::Invalid("structure constant table is not n x n x n".into()));
            }
            for entry in row {
                if entry.len() != n {
                    return Err(Error::Invalid("structure constant table is not n x n x n".into()));
                }
                flat.extend(entry.iter().map(|&v| crate::kernel::residue(v, p)));
            }
        }
        if unit.len() != n {
            return Err(Error::Invalid("unit has wrong length".into()));
        }
        let unit = unit.iter().map(|&v| crate::kernel::residue(v, p)).collect();
        Self::from_structure_constants(p, n, flat, unit, label)
    }

    /// Construction for internally generated tables that are associative by
    /// construction; unit and associativity are still checked in debug builds.
    pub(crate) fn from_trusted(
        p: u32,
        dim: usize,
        table: Vec<u32>,
        unit: Vec<u32>,
        label: &str,
        peirce: Option<Peirce>,
    ) -> Result<Arc<Self>> {
        let alg = Self::build(p, dim, table, unit, label, peirce)?;
        if cfg!(debug_assertions) && dim <= 24 {
            alg.validate()?;
        } else {
            alg.check_unit()?;
        }
        Ok(Arc::new(alg))
    }

    fn build(p: u32, dim: usize, table: Vec<u32>, unit: Vec<u32>, label: &str, peirce: Option<Peirce>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if (p as usize) <= dim {
            return Err(Error::PrimeTooSmall { prime: p, dim });
        }
        assert_eq!(table.len(), dim * dim * dim);
        assert_eq!(unit.len(), dim);
        let mut h = DefaultHasher::new();
        p.hash(&mut h);
        dim.hash(&mut h);
        table.hash(&mut h);
        unit.hash(&mut h);
        Ok(Algebra {
            p,
            dim,
            table,
            unit,
            label: label.to_string(),
            peirce,
            fingerprint: h.finish(),
            seed: DEFAULT_SEED,
            left_mults: OnceLock::new(),
            radical: OnceLock::new(),
            generators: OnceLock::new(),
            structure: OnceLock::new(),
            op: OnceLock::new(),
            op_back: Weak::new(),
        })
    }

    fn check_unit(&self) -> Result<()> {
        let id = Matrix::identity(self.p, self.dim);
        if self.left_mult(&self.unit) != id || self.right_mult(&self.unit) != id {
            return Err(Error::NoUnit);
        }
        Ok(())
    }

    fn validate(&self) -> Result<()> {
        self.check_unit()?;
        let l = self.left_mults();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let prod = self.product_of_basis(i, j);
                let lhs = self.left_mult(&prod);
                let rhs = l[i].mul(&l[j]);
                if lhs != rhs {
                    // find a concrete failing triple for the report
                    let k = (0..self.dim)
                        .find(|&k| lhs.mul_vec(&self.basis_vector(k)) != rhs.mul_vec(&self.basis_vector(k)))
                        .unwrap_or(0);
                    return Err(Error::NotAssociative(i, j, k));
                }
            }
        }
        Ok(())
    }

    pub fn prime(&self) -> u32 {
        self.p
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn label(&self) -> &str {
        &self.label
    }
    pub fn unit(&self) -> &[u32] {
        &self.unit
    }
    pub fn table(&self) -> &[u32] {
        &self.table
    }
    pub fn peirce(&self) -> Option<&Peirce> {
        self.peirce.as_ref()
    }
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Structure constant `c[i][j][k]`.
    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> u32 {
        self.table[(i * self.dim + j) * self.dim + k]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn product_of_basis(&self, i: usize, j: usize) -> Vec<u32> {
        let n = self.dim;
        self.table[(i * n + j) * n..(i * n + j + 1) * n].to_vec()
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        self.left_mult(x).mul_vec(y)
    }

    /// Matrices of `y -> b_i y` for every basis element.
    pub fn left_mults(&self) -> &[Matrix] {
        self.left_mults.get_or_init(|| {
            let n = self.dim;
            (0..n)
                .map(|i| {
                    let mut m = Matrix::zeros(self.p, n, n);
                    for j in 0..n {
                        for k in 0..n {
                            let v = self.c(i, j, k);
                            if v != 0 {
                                m.set(k, j, v);
                            }
                        }
                    }
                    m
                })
                .collect()
        })
    }

    /// Matrix of `y -> x y`.
    pub fn left_mult(&self, x: &[u32]) -> Matrix {
        Matrix::combination(self.p, self.dim, self.dim, self.left_mults(), x)
    }

    /// Matrix of `y -> y x`.
    pub fn right_mult(&self, x: &[u32]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(self.p, n, n);
        let p = self.p as u64;
        for (j, &xj) in x.iter().enumerate() {
            if xj == 0 {
                continue;
            }
            for i in 0..n {
                for k in 0..n {
                    let v = self.c(i, j, k);
                    if v != 0 {
                        let cur = m.get(k, i) as u64;
                        m.set(k, i, ((cur + xj as u64 * v as u64) % p) as u32);
                    }
                }
            }
        }
        m
    }

    /// The opposite algebra: `c_op[i][j][k] = c[j][i][k]`.
    ///
    /// Cached, and `a.opposite().opposite()` returns `a` itself.
    pub fn opposite(self: &Arc<Self>) -> Arc<Algebra> {
        if let Some(back) = self.op_back.upgrade() {
            return back;
        }
        self.op
            .get_or_init(|| {
                let mut alg = self.opposite_uncached();
                alg.op_back = Arc::downgrade(self);
                Arc::new(alg)
            })
            .clone()
    }

    fn opposite_uncached(&self) -> Algebra {
        let n = self.dim;
        let mut table = vec![0; n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    table[(i * n + j) * n + k] = self.c(j, i, k);
                }
            }
        }
        let label = match self.label.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{}^op", self.label),
        };
        let peirce = self.peirce.as_ref().map(|pc| Peirce {
            idempotents: pc.idempotents.clone(),
            block: pc.block.iter().map(|&(l, r)| (r, l)).collect(),
        });
        let mut alg =
            Self::build(self.p, n, table, self.unit.clone(), &label, peirce).expect("opposite of a valid algebra");
        alg.seed = self.seed;
        alg
    }

    /// True when both handles denote the same algebra.
    pub fn same(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }

    /// Jacobson radical as the radical of the trace form of the regular
    /// representation.
    pub fn radical(&self) -> &[Vec<u32>] {
        self.radical.get_or_init(|| {
            let regular = MatAlgebra::new(self.p, self.dim, self.left_mults().iter().cloned());
            regular
                .radical()
                .expect("p > dim is checked at construction")
                .into_iter()
                .map(|m| m.mul_vec(&self.unit))
                .collect()
        })
    }

    /// Number of Peirce vertices (1 without Peirce data).
    pub fn vertex_count(&self) -> usize {
        self.peirce.as_ref().map_or(1, |pc| pc.idempotents.len())
    }

    /// The vertex idempotents of the Peirce data, or the unit.
    pub fn vertex_idempotents(&self) -> Vec<Vec<u32>> {
        match &self.peirce {
            Some(pc) => pc.idempotents.iter().map(|&e| self.basis_vector(e)).collect(),
            None => vec![self.unit.clone()],
        }
    }

    /// Generators of the algebra modulo the vertex idempotents: basis
    /// vectors spanning `A` modulo `rad^2` plus the idempotents.
    pub fn generators(&self) -> &[Generator] {
        self.generators.get_or_init(|| {
            let p = self.p;
            let n = self.dim;
            let radical = self.radical();
            let mut ech = Echelon::new(p, n);
            for a in radical {
                let la = self.left_mult(a);
                for b in radical {
                    ech.insert(&la.mul_vec(b));
                }
            }
            for e in self.vertex_idempotents() {
                ech.insert(&e);
            }
            let mut out = Vec::new();
            for i in 0..n {
                if ech.is_full() {
                    break;
                }
                let v = self.basis_vector(i);
                if ech.insert(&v) {
                    let block = self.peirce.as_ref().map_or((0, 0), |pc| pc.block[i]);
                    out.push(Generator { element: v, block });
                }
            }
            out
        })
    }

    /// Radical, primitive idempotents and generators, computed once with the
    /// algebra's seed.
    pub fn structure(&self) -> Result<&Structure> {
        self.structure
            .get_or_init(|| self.radical_and_idempotents(self.seed, DEFAULT_BUDGET))
            .as_ref()
            .map_err(|e| e.clone())
    }

    /// Jacobson radical (trace form) and a complete set of primitive
    /// orthogonal idempotents.
    pub fn radical_and_idempotents(&self, seed: u64, budget: usize) -> Result<Structure> {
        let p = self.p;
        let n = self.dim;
        let regular = MatAlgebra::new(p, n, self.left_mults().iter().cloned());
        let radical = self.radical().to_vec();
        let idempotents = match &self.peirce {
            Some(pc) => {
                for &e in &pc.idempotents {
                    let em = self.left_mult(&self.basis_vector(e));
                    if !regular.corner(&em).is_local()? {
                        return Err(Error::Invalid(format!(
                            "Peirce idempotent {e} of {} is not primitive",
                            self.label
                        )));
                    }
                }
                pc.idempotents.iter().map(|&e| self.basis_vector(e)).collect()
            }
            None => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let unit = Matrix::identity(p, n);
                let mut idem: Vec<Vec<u32>> = regular
                    .primitive_idempotents(&unit, &mut rng, budget)?
                    .into_iter()
                    .map(|m| m.mul_vec(&self.unit))
                    .collect();
                idem.sort();
                idem
            }
        };
        let generators = self.generators().iter().map(|g| g.element.clone()).collect();
        Ok(Structure { radical, idempotents, generators })
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical().is_empty()
    }

    /// The quotient `A / rad A` with structure constants on a complement basis.
    pub fn semisimple_quotient(&self) -> Result<Arc<Algebra>> {
        let n = self.dim;
        let p = self.p;
        let cand: Vec<Vec<u32>> = (0..n).map(|i| self.basis_vector(i)).collect();
        let q = crate::kernel::QuotientCoords::new(p, n, self.radical(), &cand);
        let reps = q.representatives().to_vec();
        let d = reps.len();
        let mut table = vec![0; d * d * d];
        for i in 0..d {
            for j in 0..d {
                let c = q.coords(&self.mul(&reps[i], &reps[j]));
                table[(i * d + j) * d..(i * d + j + 1) * d].copy_from_slice(&c);
            }
        }
        let unit = q.coords(&self.unit);
        Algebra::from_structure_constants(p, d, table, unit, &format!("{}/rad", self.label))
    }

    /// Product of two elements interpreted via an explicit left action
    /// (used when modules need the matrix of an algebra element).
    pub fn element_action(&self, action: &[Matrix], x: &[u32]) -> Matrix {
        let d = action.first().map_or(0, |m| m.rows());
        Matrix::combination(self.p, d, d, action, x)
    }

    /// Serializable view.
    pub fn to_json(&self) -> serde_json::Value {
        let n = self.dim;
        let nested: Vec<Vec<Vec<u32>>> =
            (0..n).map(|i| (0..n).map(|j| self.product_of_basis(i, j)).collect()).collect();
        serde_json::json!({
            "label": self.label,
            "prime": self.p,
            "structure_constants": nested,
            "unit": self.unit,
        })
    }
}
