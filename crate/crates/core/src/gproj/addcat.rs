//! `add X` for a finite list of pairwise non-isomorphic indecomposables:
//! cached Hom bases, radical morphisms, and minimal approximations.

use std::sync::Arc;

use crate::algebra::{Algebra, MatAlgebra};
use crate::kernel::{Echelon, Matrix};
use crate::modcat::{HomSpace, Module, ModuleMap};

/// A map between `⊕ X_i^{k_i}` and a module, with the indices of the copies.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub map: ModuleMap,
    /// Index into the generating list for every summand copy, in order.
    pub summands: Vec<usize>,
}

#[derive(Debug)]
pub struct AddCategory {
    algebra: Arc<Algebra>,
    modules: Vec<Module>,
    /// `homs[i][j]` is `Hom(X_i, X_j)`.
    homs: Vec<Vec<HomSpace>>,
    /// `rad[i][j]` spans the radical maps `X_i -> X_j`.
    rad: Vec<Vec<Vec<Matrix>>>,
}

impl AddCategory {
    pub fn new(algebra: &Arc<Algebra>, modules: Vec<Module>) -> AddCategory {
        let n = modules.len();
        let homs: Vec<Vec<HomSpace>> = (0..n)
            .map(|i| (0..n).map(|j| HomSpace::new(&modules[i], &modules[j]).expect("same algebra")).collect())
            .collect();
        let rad = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i != j {
                            homs[i][j].basis().to_vec()
                        } else {
                            let ring =
                                MatAlgebra::new(modules[i].prime(), modules[i].dim(), homs[i][i].basis().to_vec());
                            ring.radical().expect("p exceeds module dimension")
                        }
                    })
                    .collect()
            })
            .collect();
        AddCategory { algebra: algebra.clone(), modules, homs, rad }
    }

    pub fn modules(&self) -> &[Module] {
        &self.modules
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn hom(&self, i: usize, j: usize) -> &HomSpace {
        &self.homs[i][j]
    }

    pub fn radical_maps(&self, i: usize, j: usize) -> &[Matrix] {
        &self.rad[i][j]
    }

    /// `⊕ X_{s}` over a list of indices.
    pub fn object(&self, summands: &[usize]) -> Module {
        let parts: Vec<&Module> = summands.iter().map(|&i| &self.modules[i]).collect();
        Module::sum(&self.algebra, &parts)
    }

    /// Right `add X`-approximation `⊕ X_i^{k_i} -> m`.
    ///
    /// The minimal one lifts a basis of `Hom(X_i, m)` modulo the maps that
    /// factor through a radical map into some `X_j`, i.e. the top of the
    /// functor `Hom(-, m)` on `add X`.
    pub fn right_approximation(&self, m: &Module, minimal: bool) -> Approximation {
        let p = m.prime();
        let len = m.dim();
        let homs: Vec<HomSpace> = self.modules.iter().map(|x| HomSpace::new(x, m).expect("same algebra")).collect();
        let mut summands = Vec::new();
        let mut blocks = Vec::new();
        for (i, x) in self.modules.iter().enumerate() {
            let hi = &homs[i];
            if hi.dim() == 0 {
                continue;
            }
            let mut ech = Echelon::new(p, len * x.dim());
            if minimal {
                for (j, hj) in homs.iter().enumerate() {
                    for f in hj.basis() {
                        for g in &self.rad[i][j] {
                            ech.insert(f.mul(g).data());
                        }
                    }
                }
            }
            for f in hi.basis() {
                if !minimal || ech.insert(f.data()) {
                    summands.push(i);
                    blocks.push(f.clone());
                }
            }
        }
        let source = self.object(&summands);
        let refs: Vec<&Matrix> = blocks.iter().collect();
        Approximation { map: crate::modcat::hstack_maps(m, &source, &refs), summands }
    }

    /// Left `add X`-approximation `m -> ⊕ X_i^{k_i}`, dual to the above.
    pub fn left_approximation(&self, m: &Module, minimal: bool) -> Approximation {
        let p = m.prime();
        let homs: Vec<HomSpace> = self.modules.iter().map(|x| HomSpace::new(m, x).expect("same algebra")).collect();
        let mut summands = Vec::new();
        let mut blocks = Vec::new();
        for (i, x) in self.modules.iter().enumerate() {
            let hi = &homs[i];
            if hi.dim() == 0 {
                continue;
            }
            let mut ech = Echelon::new(p, m.dim() * x.dim());
            if minimal {
                for (j, hj) in homs.iter().enumerate() {
                    for f in hj.basis() {
                        for g in &self.rad[j][i] {
                            ech.insert(g.mul(f).data());
                        }
                    }
                }
            }
            for f in hi.basis() {
                if !minimal || ech.insert(f.data()) {
                    summands.push(i);
                    blocks.push(f.clone());
                }
            }
        }
        let target = self.object(&summands);
        let matrix = if blocks.is_empty() {
            Matrix::zeros(p, 0, m.dim())
        } else {
            let refs: Vec<&Matrix> = blocks.iter().collect();
            Matrix::vstack(p, m.dim(), &refs)
        };
        Approximation { map: ModuleMap::from_trusted(m, &target, matrix), summands }
    }

    /// Whether `Hom(X_j, f)` is surjective for every `j`.
    pub fn is_epi_on(&self, f: &ModuleMap) -> bool {
        let p = f.source.prime();
        self.modules.iter().all(|x| {
            let into_target = HomSpace::new(x, &f.target).expect("same algebra");
            if into_target.dim() == 0 {
                return true;
            }
            let into_source = HomSpace::new(x, &f.source).expect("same algebra");
            let mut ech = Echelon::new(p, x.dim() * f.target.dim());
            for g in into_source.basis() {
                ech.insert(f.matrix.mul(g).data());
                if ech.rank() == into_target.dim() {
                    return true;
                }
            }
            ech.rank() == into_target.dim()
        })
    }

    /// Index of the generator isomorphic to `m`, if any.
    pub fn index_of(&self, m: &Module) -> Option<usize> {
        self.modules.iter().position(|x| crate::modcat::is_isomorphic_indecomposable(x, m))
    }
}
