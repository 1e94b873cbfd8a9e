//! Hom spaces as solution spaces of the intertwiner equations.
//!
//! A map `f : M -> N` commutes with the vertex idempotents, so in adapted
//! coordinates it is block diagonal with blocks `f_v : e_v M -> e_v N`.
//! Each generator `g = e_l g e_r` then contributes the equations
//! `f_l G_M = G_N f_r`.

use std::sync::OnceLock;

use super::Module;
use crate::error::Result;
use crate::kernel::{CoordSystem, Echelon, Matrix};

#[derive(Clone, Debug)]
pub struct HomSpace {
    source: Module,
    target: Module,
    basis: Vec<Matrix>,
    coords: OnceLock<CoordSystem>,
}

impl HomSpace {
    pub fn new(source: &Module, target: &Module) -> Result<HomSpace> {
        source.check_same(target)?;
        let basis = hom_basis(source, target);
        Ok(HomSpace { source: source.clone(), target: target.clone(), basis, coords: OnceLock::new() })
    }

    /// Wrap a known basis (independent maps `source -> target`).
    pub(crate) fn from_basis(source: &Module, target: &Module, basis: Vec<Matrix>) -> HomSpace {
        HomSpace { source: source.clone(), target: target.clone(), basis, coords: OnceLock::new() }
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    fn coord_system(&self) -> &CoordSystem {
        self.coords.get_or_init(|| {
            let len = self.source.dim() * self.target.dim();
            CoordSystem::new(self.source.prime(), len, self.basis.iter().map(|m| m.data().to_vec()).collect())
        })
    }

    /// Coordinates of a map lying in this space.
    pub fn coords(&self, f: &Matrix) -> Vec<u32> {
        self.coord_system().coords(f.data())
    }

    pub fn try_coords(&self, f: &Matrix) -> Option<Vec<u32>> {
        self.coord_system().try_coords(f.data())
    }

    pub fn combine(&self, c: &[u32]) -> Matrix {
        Matrix::combination(self.source.prime(), self.target.dim(), self.source.dim(), &self.basis, c)
    }

    /// Matrix (in the bases of `self` and `into`) of a linear operator on
    /// maps sending this space into `into`.
    pub fn induced(&self, into: &HomSpace, op: impl Fn(&Matrix) -> Matrix) -> Matrix {
        let p = self.source.prime();
        let mut m = Matrix::zeros(p, into.dim(), self.dim());
        for (j, b) in self.basis.iter().enumerate() {
            for (i, c) in into.coords(&op(b)).into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    /// `Hom(X, f) : Hom(X, M) -> Hom(X, N)` for `f : M -> N`, with `self = Hom(X, M)`.
    pub fn post(&self, f: &Matrix, into: &HomSpace) -> Matrix {
        self.induced(into, |g| f.mul(g))
    }

    /// `Hom(f, X) : Hom(N, X) -> Hom(M, X)` for `f : M -> N`, with `self = Hom(N, X)`.
    pub fn pre(&self, f: &Matrix, into: &HomSpace) -> Matrix {
        self.induced(into, |g| g.mul(f))
    }
}

pub fn hom_dim(m: &Module, n: &Module) -> usize {
    hom_basis(m, n).len()
}

/// Basis of `Hom_A(m, n)` as `dim n x dim m` matrices.
pub(crate) fn hom_basis(m: &Module, n: &Module) -> Vec<Matrix> {
    let p = m.prime();
    if m.dim() == 0 || n.dim() == 0 {
        return Vec::new();
    }
    let am = m.adapted();
    let an = n.adapted();
    let verts = m.algebra().vertex_count();
    let mut off = vec![0usize];
    for v in 0..verts {
        off.push(off[v] + am.size(v) * an.size(v));
    }
    let unknowns = off[verts];
    if unknowns == 0 {
        return Vec::new();
    }
    let mut ech = Echelon::new(p, unknowns);
    for (gi, g) in m.algebra().generators().iter().enumerate() {
        let (l, r) = g.block;
        let gm = &am.gen_blocks[gi];
        let gn = &an.gen_blocks[gi];
        let (ml, mr) = (am.size(l), am.size(r));
        let (nl, nr) = (an.size(l), an.size(r));
        // f_l: nl x ml, f_r: nr x mr; equation entries (a, c) with a < nl, c < mr
        for a in 0..nl {
            for c in 0..mr {
                let mut row = vec![0u32; unknowns];
                for b in 0..ml {
                    let v = gm.get(b, c);
                    if v != 0 {
                        let k = off[l] + a * ml + b;
                        row[k] = (row[k] + v) % p;
                    }
                }
                for d in 0..nr {
                    let v = gn.get(a, d);
                    if v != 0 {
                        let k = off[r] + d * mr + c;
                        row[k] = (row[k] + p - v) % p;
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    ech.insert(&row);
                }
                if ech.is_full() {
                    return Vec::new();
                }
            }
        }
    }
    let sol = ech.null_space();
    sol.into_iter()
        .map(|x| {
            let mut blocks = Matrix::zeros(p, n.dim(), m.dim());
            for v in 0..verts {
                let (mv, nv) = (am.size(v), an.size(v));
                for a in 0..nv {
                    for b in 0..mv {
                        let val = x[off[v] + a * mv + b];
                        if val != 0 {
                            blocks.set(an.offsets[v] + a, am.offsets[v] + b, val);
                        }
                    }
                }
            }
            an.basis.mul(&blocks).mul(&am.inverse)
        })
        .collect()
}
