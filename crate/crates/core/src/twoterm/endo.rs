use std::sync::Arc;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::gproj::GprojAtlas;
use crate::kernel::Matrix;
use crate::modcat::{global_dimension, simples, Bounded, Module};

use super::{HomK, TwoTermComplex};

/// `B = End_K(c)^op` on chosen coset representatives, identity first;
/// `b_i * b_j = b_j ∘ b_i`.
#[derive(Clone, Debug)]
pub struct BContext {
    pub b: Arc<Algebra>,
    pub complex: TwoTermComplex,
    pub end: HomK,
}

/// `φ ∘ r` for `φ ∈ Hom_K(c, y[n])` and a chain endomorphism `r = [f1, f0]`.
pub(crate) fn precompose(n: i32, phi: &[Matrix], r: &[Matrix]) -> Vec<Matrix> {
    match n {
        0 => vec![phi[0].mul(&r[0]), phi[1].mul(&r[1])],
        1 => vec![phi[0].mul(&r[0])],
        -1 => vec![phi[0].mul(&r[1])],
        _ => Vec::new(),
    }
}

/// `u ∘ φ` for a chain map `u = [u1, u0] : y -> y'`.
pub(crate) fn postcompose(n: i32, u: &[Matrix], phi: &[Matrix]) -> Vec<Matrix> {
    match n {
        0 => vec![u[0].mul(&phi[0]), u[1].mul(&phi[1])],
        1 => vec![u[1].mul(&phi[0])],
        -1 => vec![u[0].mul(&phi[0])],
        _ => Vec::new(),
    }
}

impl BContext {
    pub fn build(c: &TwoTermComplex) -> Result<BContext> {
        if c.is_zero() {
            return Err(Error::EmptyComplex);
        }
        let p = c.g0().prime();
        let id = vec![Matrix::identity(p, c.g1().dim()), Matrix::identity(p, c.g0().dim())];
        let end = HomK::new(c, c, 0, std::slice::from_ref(&id));
        if end.dim() == 0 || end.is_null(&id) {
            return Err(Error::EmptyComplex);
        }
        let table = structure_constants(&end, end.reps());
        debug_assert!(well_defined(&end, c, &table), "composition depends on the representatives");
        let n = end.dim();
        let mut unit = vec![0; n];
        unit[0] = 1;
        let b = Algebra::from_structure_constants(p, n, table, unit, "B")?;
        Ok(BContext { b, complex: c.clone(), end })
    }

    /// Number of pairwise non-isomorphic indecomposable summands of the
    /// complex in the homotopy category.
    pub fn summand_count(&self) -> Result<usize> {
        self.b.structure()?;
        Ok(simples(&self.b).len())
    }

    /// `Hom_K(c, y[n])` as a left `B`-module; `B` acts by precomposition.
    pub fn hom_module(&self, y: &TwoTermComplex, n: i32) -> (Module, HomK) {
        let h = HomK::new(&self.complex, y, n, &[]);
        let p = self.b.prime();
        let d = h.dim();
        let action = self
            .end
            .reps()
            .iter()
            .map(|r| {
                let mut a = Matrix::zeros(p, d, d);
                for (j, phi) in h.reps().iter().enumerate() {
                    for (i, v) in h.coords(&precompose(n, phi, r)).into_iter().enumerate() {
                        a.set(i, j, v);
                    }
                }
                a
            })
            .collect();
        (Module::from_trusted(self.b.clone(), d, action), h)
    }

    /// `Hom(c, x[shift])` for a module `x`, shift 0 on `T(c)` and 1 on `F(c)`.
    pub fn transport(&self, x: &Module, shift: i32) -> Module {
        self.hom_module(&TwoTermComplex::stalk(x), shift).0
    }
}

fn structure_constants(end: &HomK, reps: &[Vec<Matrix>]) -> Vec<u32> {
    let n = reps.len();
    let mut table = vec![0u32; n * n * n];
    for i in 0..n {
        for j in 0..n {
            let prod = precompose(0, &reps[j], &reps[i]);
            let base = (i * n + j) * n;
            table[base..base + n].copy_from_slice(&end.coords(&prod));
        }
    }
    table
}

/// Recompute the table on representatives shifted by null-homotopic maps.
fn well_defined(end: &HomK, c: &TwoTermComplex, table: &[u32]) -> bool {
    let homotopies = crate::modcat::HomSpace::new(c.g0(), c.g1()).expect("same algebra");
    let Some(h) = homotopies.basis().first() else { return true };
    let null = [h.mul(&c.d1.matrix), c.d1.matrix.mul(h)];
    let shifted: Vec<Vec<Matrix>> = end.reps().iter().map(|r| vec![r[0].add(&null[0]), r[1].add(&null[1])]).collect();
    structure_constants(end, &shifted) == table
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GldimVerdict {
    Holds,
    Violated,
    /// `Gdim A = 0`: the bound is only claimed for positive `d`.
    OutsideHypothesis,
    Undetermined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GldimReport {
    pub gldim_b: Bounded,
    pub gdim_a: Bounded,
    pub verdict: GldimVerdict,
}

/// `gldim B` against `Gdim A + 1`.
pub fn gldim_bound_check(bctx: &BContext, atlas: &GprojAtlas, bound: usize) -> GldimReport {
    let gldim_b = global_dimension(&bctx.b, bound);
    let gdim_a = atlas.gdim(bound);
    let verdict = match (gldim_b, gdim_a) {
        (_, Bounded::Finite(0)) => GldimVerdict::OutsideHypothesis,
        (Bounded::Finite(g), Bounded::Finite(d)) if g <= d + 1 => GldimVerdict::Holds,
        (_, Bounded::Finite(_)) => GldimVerdict::Violated,
        _ => GldimVerdict::Undetermined,
    };
    GldimReport { gldim_b, gdim_a, verdict }
}
