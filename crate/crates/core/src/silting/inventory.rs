//! A finite stock of indecomposables standing in for `mod A`.

use std::sync::Arc;

use crate::algebra::{Algebra, MatAlgebra};
use crate::error::Result;
use crate::gproj::{cosyzygy, AddCategory, GprojAtlas};
use crate::kernel::{columns_to_matrix, Matrix, QuotientCoords};
use crate::modcat::right_inverse;
use crate::modcat::{
    decompose, indecomposable_injectives, indecomposable_projectives, is_isomorphic_indecomposable, simples, syzygy,
    transpose_and_tau, Cokernel, HomSpace, Module, ModuleMap,
};

/// Closure rounds over translates and extensions.
const ROUNDS: usize = 3;
/// Give up knitting past this many classes.
const KNIT_LIMIT: usize = 2000;

#[derive(Clone, Debug)]
pub struct IndecomposableInventory {
    pub modules: Vec<Module>,
    pub dim_cap: usize,
    /// Set only when the stock is closed under neighbours in the
    /// Auslander-Reiten quiver, see [`closed_under_ar_neighbours`]. The
    /// closure itself is a heuristic and makes no completeness claim.
    pub complete_up_to_cap: bool,
}

struct Stock {
    cap: usize,
    seed: u64,
    modules: Vec<Module>,
    /// Some summand was over the cap.
    dropped: bool,
}

impl Stock {
    /// Add the indecomposable summands of `m` within the cap; returns the
    /// number of new classes.
    fn absorb(&mut self, m: &Module) -> Result<usize> {
        if m.is_zero() {
            return Ok(0);
        }
        let mut added = 0;
        for (piece, _) in decompose(m, self.seed)?.classes {
            if piece.dim() > self.cap {
                self.dropped = true;
                continue;
            }
            let dv = piece.dimension_vector();
            let known = self.modules.iter().any(|x| {
                x.dim() == piece.dim() && x.dimension_vector() == dv && is_isomorphic_indecomposable(x, &piece)
            });
            if !known {
                self.modules.push(piece);
                added += 1;
            }
        }
        Ok(added)
    }
}

impl IndecomposableInventory {
    /// Closure of simples, projectives, injectives and atlas members under
    /// radical, socle quotient, syzygy, cosyzygy, `τ`, `τ⁻` and pushout
    /// extensions, deduplicated up to isomorphism and capped by dimension.
    pub fn build(atlas: &GprojAtlas, dim_cap: usize, seed: u64) -> Result<IndecomposableInventory> {
        let alg = atlas.algebra();
        let (knit, closed) = ar_knit(alg, dim_cap, seed)?;
        if closed {
            return Ok(IndecomposableInventory { modules: knit, dim_cap, complete_up_to_cap: true });
        }
        let mut seeds = simples(alg);
        seeds.extend(indecomposable_projectives(alg));
        seeds.extend(indecomposable_injectives(alg));
        seeds.extend(atlas.members.iter().cloned());
        let modules = module_closure(atlas.projectives(), &seeds, dim_cap, seed)?;
        let complete_up_to_cap = closed_under_ar_neighbours(&modules, seed)?;
        Ok(IndecomposableInventory { modules, dim_cap, complete_up_to_cap })
    }

    /// An inventory from a given list, deduplicated.
    pub fn from_modules(modules: &[Module], dim_cap: usize, seed: u64) -> Result<IndecomposableInventory> {
        let mut stock = Stock { cap: dim_cap, seed, modules: Vec::new(), dropped: false };
        for m in modules {
            stock.absorb(m)?;
        }
        Ok(IndecomposableInventory { modules: stock.modules, dim_cap, complete_up_to_cap: false })
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn index_of(&self, m: &Module) -> Option<usize> {
        self.modules.iter().position(|x| is_isomorphic_indecomposable(x, m))
    }
}

/// Indecomposable summands of `seeds`, closed for a few rounds under the
/// operations listed at [`IndecomposableInventory::build`].
pub fn module_closure(projectives: &AddCategory, seeds: &[Module], dim_cap: usize, seed: u64) -> Result<Vec<Module>> {
    let mut stock = Stock { cap: dim_cap, seed, modules: Vec::new(), dropped: false };
    for m in seeds {
        stock.absorb(m)?;
    }
    let mut frontier = 0;
    for _ in 0..ROUNDS {
        let end = stock.modules.len();
        if frontier == end {
            break;
        }
        for i in frontier..end {
            let x = stock.modules[i].clone();
            for y in derived(projectives, &x) {
                stock.absorb(&y)?;
            }
        }
        // one round of extensions among everything known so far
        let snapshot = stock.modules.clone();
        for (i, x) in snapshot.iter().enumerate() {
            for (j, y) in snapshot.iter().enumerate() {
                if (i < frontier && j < frontier) || x.dim() + y.dim() > dim_cap {
                    continue;
                }
                for mid in extension_middles(x, y) {
                    stock.absorb(&mid)?;
                }
            }
        }
        frontier = end;
    }
    Ok(stock.modules)
}

/// Indecomposables reached from the projectives, simples and injectives by
/// walking the Auslander-Reiten quiver: `τ`, `τ⁻`, almost split middle
/// terms, `rad P` and `I / soc I`. The flag is set when the walk closes
/// inside the cap, which makes the list all of `ind A`.
pub fn ar_knit(alg: &Arc<Algebra>, dim_cap: usize, seed: u64) -> Result<(Vec<Module>, bool)> {
    let mut stock = Stock { cap: dim_cap, seed, modules: Vec::new(), dropped: false };
    for m in indecomposable_projectives(alg).iter().chain(&simples(alg)).chain(&indecomposable_injectives(alg)) {
        stock.absorb(m)?;
    }
    let mut closed = true;
    let mut i = 0;
    while i < stock.modules.len() {
        if stock.modules.len() > KNIT_LIMIT {
            return Ok((stock.modules, false));
        }
        let x = stock.modules[i].clone();
        i += 1;
        let tau = transpose_and_tau(&x).1;
        if tau.is_zero() {
            stock.absorb(&x.submodule(&x.radical_basis()).0)?;
        } else {
            stock.absorb(&tau)?;
        }
        let tau_inv = transpose_and_tau(&x.dual()).1.dual();
        if tau_inv.is_zero() {
            stock.absorb(&x.quotient(&x.socle_basis()).0)?;
            continue;
        }
        stock.absorb(&tau_inv)?;
        match almost_split_middle(&x, &tau_inv)? {
            Some(mid) => {
                stock.absorb(&mid)?;
            }
            None => closed = false,
        }
    }
    Ok((stock.modules, closed && !stock.dropped))
}

/// Whether a finite set of indecomposables containing the projectives is
/// closed under predecessors and successors in the Auslander-Reiten quiver.
/// A finite union of components is the whole quiver (Auslander), so a
/// `true` answer certifies that the set is all of `ind A` up to isomorphism.
///
/// Successors of `X` are the summands of `X / soc X` for injective `X` and
/// of the middle term of the almost split sequence starting at `X`
/// otherwise; predecessors are covered by `rad P` for projective `P` and by
/// `τ X` (whose almost split sequence is checked in turn).
pub fn closed_under_ar_neighbours(modules: &[Module], seed: u64) -> Result<bool> {
    let Some(first) = modules.first() else { return Ok(false) };
    let alg = first.algebra();
    let known = |m: &Module| modules.iter().any(|x| is_isomorphic_indecomposable(x, m));
    let all_known = |m: &Module| -> Result<bool> {
        if m.is_zero() {
            return Ok(true);
        }
        Ok(decompose(m, seed)?.classes.iter().all(|(piece, _)| known(piece)))
    };
    if !indecomposable_projectives(alg).iter().all(known) {
        return Ok(false);
    }
    for x in modules {
        let tau = transpose_and_tau(x).1;
        if tau.is_zero() {
            if !all_known(&x.submodule(&x.radical_basis()).0)? {
                return Ok(false);
            }
        } else if !known(&tau) {
            return Ok(false);
        }
        let tau_inv = transpose_and_tau(&x.dual()).1.dual();
        if tau_inv.is_zero() {
            if !all_known(&x.quotient(&x.socle_basis()).0)? {
                return Ok(false);
            }
            continue;
        }
        if !known(&tau_inv) {
            return Ok(false);
        }
        match almost_split_middle(x, &tau_inv)? {
            Some(mid) if all_known(&mid)? => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Middle term of the almost split sequence `0 -> x -> E -> y -> 0`, with
/// `y = τ⁻ x`. The class spans the socle of `Ext^1(y, x)` as a module over
/// `End(x)`; `None` when that socle is not one-dimensional.
fn almost_split_middle(x: &Module, y: &Module) -> Result<Option<Module>> {
    let p = x.prime();
    let (omega, incl, cover) = syzygy(y);
    let hs = HomSpace::new(&omega, x)?;
    let through = HomSpace::new(&cover.map.source, x)?;
    let sub: Vec<Vec<u32>> = through.basis().iter().map(|g| g.mul(&incl.matrix).into_data()).collect();
    let cands: Vec<Vec<u32>> = hs.basis().iter().map(|h| h.data().to_vec()).collect();
    let len = x.dim() * omega.dim();
    let ext = QuotientCoords::new(p, len, &sub, &cands);
    if ext.dim() == 0 {
        return Ok(None);
    }
    let reps: Vec<Matrix> =
        ext.representatives().iter().map(|r| Matrix::from_vec(p, x.dim(), omega.dim(), r.clone())).collect();
    let end = HomSpace::new(x, x)?;
    let rad = MatAlgebra::new(p, x.dim(), end.basis().to_vec()).radical()?;
    let mut rows = Vec::new();
    for s in &rad {
        let cols: Vec<Vec<u32>> = reps.iter().map(|r| ext.coords(s.mul(r).data())).collect();
        let m = columns_to_matrix(p, ext.dim(), &cols);
        rows.extend(m.to_rows());
    }
    let socle = if rows.is_empty() {
        Matrix::identity(p, ext.dim()).to_rows()
    } else {
        Matrix::from_vec(p, rows.len(), ext.dim(), rows.concat()).kernel()
    };
    if socle.len() != 1 {
        return Ok(None);
    }
    let xi = Matrix::combination(p, x.dim(), omega.dim(), &reps, &socle[0]);
    let sum = Module::sum(x.algebra(), &[&incl.target, x]);
    Ok(Some(pushout(&incl, &xi, &sum).module))
}

fn derived(projectives: &AddCategory, x: &Module) -> Vec<Module> {
    let mut out = Vec::new();
    let rad = x.radical_basis();
    out.push(x.submodule(&rad).0);
    out.push(x.quotient(&x.socle_basis()).0);
    out.push(syzygy(x).0);
    out.push(cosyzygy(projectives, x));
    out.push(transpose_and_tau(x).1);
    // τ⁻ X = Tr D X computed over the opposite algebra
    let dx = x.dual();
    let tau_inv = transpose_and_tau(&dx).1.dual();
    out.push(tau_inv);
    out
}

/// Middle terms of the pushouts of `0 -> Ωx -> P -> x -> 0` along a basis
/// of `Hom(Ωx, y)`.
pub fn extension_middles(x: &Module, y: &Module) -> Vec<Module> {
    extension_sequences(x, y).into_iter().map(|(f, _)| f.target).collect()
}

/// The sequences `0 -> y -> E -> x -> 0` behind [`extension_middles`], as
/// `(y -> E, E -> x)`.
pub fn extension_sequences(x: &Module, y: &Module) -> Vec<(ModuleMap, ModuleMap)> {
    let (omega, incl, cover) = syzygy(x);
    if omega.is_zero() {
        return Vec::new();
    }
    let p = y.prime();
    let sum = Module::sum(x.algebra(), &[&incl.target, y]);
    let pd = incl.target.dim();
    let mut into = Matrix::zeros(p, sum.dim(), y.dim());
    into.set_block(pd, 0, &Matrix::identity(p, y.dim()));
    let mut out = Matrix::zeros(p, x.dim(), sum.dim());
    out.set_block(0, 0, &cover.map.matrix);
    let hs = HomSpace::new(&omega, y).expect("same algebra");
    hs.basis()
        .iter()
        .map(|h| {
            let q = pushout(&incl, h, &sum);
            let f = ModuleMap::from_trusted(y, &q.module, q.projection.matrix.mul(&into));
            let g = ModuleMap::from_trusted(&q.module, x, out.mul(&right_inverse(&q.projection.matrix)));
            (f, g)
        })
        .collect()
}

/// Cokernel of `k -> (i k, -h k)` into `P ⊕ y`.
fn pushout(incl: &ModuleMap, h: &Matrix, sum: &Module) -> Cokernel {
    let p = sum.prime();
    let neg = h.scale(p - 1);
    let m = Matrix::vstack(p, incl.source.dim(), &[&incl.matrix, &neg]);
    ModuleMap::from_trusted(&incl.source, sum, m).cokernel()
}
