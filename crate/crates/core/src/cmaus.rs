//! The Cohen-Macaulay Auslander algebra `Λ = End_A(E)^op`, the functor
//! `Hom_A(E, -)`, the relative transpose and `τ_G`.
//!
//! Basis of `Λ`: the concatenated bases of `Hom(E_i, E_j)`, with the identity
//! first in every `End(E_i)`. A basis map `φ : E_i -> E_j` sits in the
//! Peirce block `(i, j)`, and `φ * ψ = ψ ∘ φ`.

use std::sync::Arc;

use crate::algebra::{Algebra, Peirce};
use crate::error::Result;
use crate::gproj::{GprojAtlas, Presentation};
use crate::kernel::{Echelon, Matrix};
use crate::modcat::{hom_dim, is_isomorphic, projective_cover, transpose_and_tau, HomSpace, Module, ModuleMap};

#[derive(Debug)]
pub struct CMAuslanderContext {
    pub atlas: Arc<GprojAtlas>,
    pub lambda: Arc<Algebra>,
    /// `homs[i][j]` is `Hom(E_i, E_j)` in the basis used by `lambda`.
    homs: Vec<Vec<HomSpace>>,
    /// First `lambda` basis index of the block `(i, j)`.
    offsets: Vec<Vec<usize>>,
    /// For every basis element of `lambda`: `(i, j, k)`.
    index: Vec<(usize, usize, usize)>,
}

/// Per-member Hom spaces with the offsets of each component.
struct Components {
    spaces: Vec<HomSpace>,
    offsets: Vec<usize>,
    dim: usize,
}

impl Components {
    fn new(spaces: Vec<HomSpace>) -> Components {
        let mut offsets = Vec::with_capacity(spaces.len());
        let mut dim = 0;
        for s in &spaces {
            offsets.push(dim);
            dim += s.dim();
        }
        Components { spaces, offsets, dim }
    }
}

impl CMAuslanderContext {
    pub fn build(atlas: Arc<GprojAtlas>) -> Result<CMAuslanderContext> {
        let members = &atlas.members;
        let n = members.len();
        let p = atlas.algebra().prime();
        let homs: Vec<Vec<HomSpace>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let hs = HomSpace::new(&members[i], &members[j])?;
                        Ok(if i == j { identity_first(hs) } else { hs })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let mut offsets = vec![vec![0; n]; n];
        let mut index = Vec::new();
        for i in 0..n {
            for j in 0..n {
                offsets[i][j] = index.len();
                index.extend((0..homs[i][j].dim()).map(|k| (i, j, k)));
            }
        }
        let dim = index.len();
        if (p as usize) <= dim {
            return Err(crate::Error::PrimeTooSmall { prime: p, dim });
        }
        let mut table = vec![0u32; dim * dim * dim];
        for (a, &(i, j, ka)) in index.iter().enumerate() {
            for (b, &(j2, k, kb)) in index.iter().enumerate() {
                if j != j2 {
                    continue;
                }
                let prod = homs[j][k].basis()[kb].mul(&homs[i][j].basis()[ka]);
                let coords = homs[i][k].coords(&prod);
                let base = (a * dim + b) * dim + offsets[i][k];
                table[base..base + coords.len()].copy_from_slice(&coords);
            }
        }
        let mut unit = vec![0u32; dim];
        for i in 0..n {
            unit[offsets[i][i]] = 1;
        }
        let peirce = Peirce {
            idempotents: (0..n).map(|i| offsets[i][i]).collect(),
            block: index.iter().map(|&(i, j, _)| (i, j)).collect(),
        };
        let label = format!("CMA({})", atlas.algebra().label());
        let lambda = Algebra::from_trusted(p, dim, table, unit, &label, Some(peirce))?;
        Ok(CMAuslanderContext { atlas, lambda, homs, offsets, index })
    }

    pub fn hom_basis(&self, i: usize, j: usize) -> &HomSpace {
        &self.homs[i][j]
    }

    /// The map `E_i -> E_j` behind a basis element of `Λ`.
    pub fn basis_map(&self, b: usize) -> (usize, usize, &Matrix) {
        let (i, j, k) = self.index[b];
        (i, j, &self.homs[i][j].basis()[k])
    }

    /// `Λ`-index of the `k`-th basis map of `Hom(E_i, E_j)`.
    pub fn lambda_index(&self, i: usize, j: usize, k: usize) -> usize {
        self.offsets[i][j] + k
    }

    fn covariant(&self, m: &Module) -> Components {
        Components::new(self.atlas.members.iter().map(|e| HomSpace::new(e, m).expect("same algebra")).collect())
    }

    fn contravariant(&self, m: &Module) -> Components {
        Components::new(self.atlas.members.iter().map(|e| HomSpace::new(m, e).expect("same algebra")).collect())
    }

    /// `Hom_A(E, m)` as a left `Λ`-module; `Λ` acts by precomposition.
    pub fn e_functor(&self, m: &Module) -> Module {
        let c = self.covariant(m);
        let p = m.prime();
        let action = self
            .index
            .iter()
            .map(|&(i, j, k)| {
                let mut a = Matrix::zeros(p, c.dim, c.dim);
                let b = &self.homs[i][j].basis()[k];
                if c.spaces[i].dim() > 0 && c.spaces[j].dim() > 0 {
                    a.set_block(c.offsets[i], c.offsets[j], &c.spaces[j].pre(b, &c.spaces[i]));
                }
                a
            })
            .collect();
        Module::from_trusted(self.lambda.clone(), c.dim, action)
    }

    /// `Hom_A(E, f)`.
    pub fn e_functor_map(&self, f: &ModuleMap) -> ModuleMap {
        let cs = self.covariant(&f.source);
        let ct = self.covariant(&f.target);
        let blocks: Vec<Matrix> = cs.spaces.iter().zip(&ct.spaces).map(|(s, t)| s.post(&f.matrix, t)).collect();
        let refs: Vec<&Matrix> = blocks.iter().collect();
        ModuleMap::from_trusted(
            &self.e_functor(&f.source),
            &self.e_functor(&f.target),
            Matrix::block_diag(f.source.prime(), &refs),
        )
    }

    /// `Hom_A(m, E)` as a left `Λ^op`-module; `Λ` acts by postcomposition.
    fn hom_into_e(&self, m: &Module) -> (Module, Components) {
        let c = self.contravariant(m);
        let p = m.prime();
        let action = self
            .index
            .iter()
            .map(|&(i, j, k)| {
                let mut a = Matrix::zeros(p, c.dim, c.dim);
                let b = &self.homs[i][j].basis()[k];
                if c.spaces[i].dim() > 0 && c.spaces[j].dim() > 0 {
                    a.set_block(c.offsets[j], c.offsets[i], &c.spaces[i].post(b, &c.spaces[j]));
                }
                a
            })
            .collect();
        (Module::from_trusted(self.lambda.opposite(), c.dim, action), c)
    }

    /// `Hom(d1, E) : Hom(G_0, E) -> Hom(G_1, E)`.
    fn dual_presentation(&self, pr: &Presentation) -> ModuleMap {
        let (h0, c0) = self.hom_into_e(&pr.g0);
        let (h1, c1) = self.hom_into_e(&pr.g1);
        let blocks: Vec<Matrix> = c0.spaces.iter().zip(&c1.spaces).map(|(s, t)| s.pre(&pr.d1.matrix, t)).collect();
        let refs: Vec<&Matrix> = blocks.iter().collect();
        ModuleMap::from_trusted(&h0, &h1, Matrix::block_diag(pr.g0.prime(), &refs))
    }

    /// `Tr_G m`, a module over `Λ^op`.
    pub fn relative_transpose(&self, m: &Module) -> Result<Module> {
        let pr = self.atlas.min_proper_presentation(m)?;
        Ok(self.dual_presentation(&pr).cokernel().module)
    }

    /// `τ_G m = ker(D(G_1, E) -> D(G_0, E))`, a module over `Λ`.
    pub fn tau_g(&self, m: &Module) -> Result<Module> {
        let pr = self.atlas.min_proper_presentation(m)?;
        let hd = self.dual_presentation(&pr);
        let tau = hd.dual().kernel().module;
        if cfg!(debug_assertions) {
            let other = hd.cokernel().module.dual();
            debug_assert!(is_isomorphic(&tau, &other, 0).unwrap_or(false), "τ_G: kernel and D Tr_G disagree");
        }
        Ok(tau)
    }

    pub fn is_tau_g_rigid(&self, m: &Module) -> Result<bool> {
        let tau = self.tau_g(m)?;
        Ok(tau.is_zero() || hom_dim(&self.e_functor(m), &tau) == 0)
    }

    /// Whether `Hom_A(d1, m)` is onto for the minimal presentation of `m`.
    pub fn presentation_epi_criterion(&self, m: &Module) -> Result<bool> {
        let pr = self.atlas.min_proper_presentation(m)?;
        let h0 = HomSpace::new(&pr.g0, m)?;
        let h1 = HomSpace::new(&pr.g1, m)?;
        if h1.dim() == 0 {
            return Ok(true);
        }
        Ok(h0.pre(&pr.d1.matrix, &h1).rank() == h1.dim())
    }
}

/// Whether a module is τ-rigid: `Hom(M, τM) = 0`.
pub fn is_tau_rigid(m: &Module) -> bool {
    let tau = transpose_and_tau(m).1;
    tau.is_zero() || hom_dim(m, &tau) == 0
}

/// `dim` of `Hom(x, n)` modulo the maps factoring through a projective.
pub fn stable_hom_dim(x: &Module, n: &Module) -> usize {
    let total = hom_dim(x, n);
    if total == 0 {
        return 0;
    }
    let cover = projective_cover(n);
    let through = HomSpace::new(x, &cover.map.source).expect("same algebra");
    let mut ech = Echelon::new(x.prime(), x.dim() * n.dim());
    for h in through.basis() {
        ech.insert(cover.map.matrix.mul(h).data());
    }
    total - ech.rank()
}

/// Re-base an endomorphism space so that the identity is its first element.
fn identity_first(hs: HomSpace) -> HomSpace {
    let p = hs.source().prime();
    let d = hs.source().dim();
    let id = Matrix::identity(p, d);
    let mut ech = Echelon::new(p, d * d);
    let mut basis = vec![id.clone()];
    ech.insert(id.data());
    for b in hs.basis() {
        if ech.insert(b.data()) {
            basis.push(b.clone());
        }
    }
    HomSpace::from_basis(hs.source(), hs.target(), basis)
}
