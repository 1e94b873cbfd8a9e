//! Brute-force enumeration of modules by iterated one-point extensions.
//!
//! Every module of dimension `n` has a simple submodule `S` with quotient of
//! dimension `n - 1`, so it is the middle term of some class in
//! `Ext^1(M', S)`. Running over all `M'` of dimension `n - 1`, all simples
//! and every class of `Ext^1` up to scalars reaches every isomorphism class.
//! The counts are exponential in `dim Ext^1`; use a small prime.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use gsilt::algebra::Algebra;
use gsilt::kernel::Matrix;
use gsilt::modcat::{decompose, ext_dim, is_isomorphic_indecomposable, simples, syzygy, HomSpace, Module};

pub struct Enumeration {
    /// Indecomposables found, in order of discovery.
    pub indecomposables: Vec<Module>,
    /// Every isomorphism class, by dimension, as sorted indices into
    /// `indecomposables` together with a representative.
    pub classes: Vec<Vec<(Vec<usize>, Module)>>,
}

/// Coefficient vectors over `F_p` up to scalars, plus zero.
fn projective_points(p: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0; n]];
    for lead in 0..n {
        let free = n - lead - 1;
        let count = (p as usize).pow(free as u32);
        for k in 0..count {
            let mut v = vec![0; n];
            v[lead] = 1;
            let mut r = k;
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = (r % p as usize) as u32;
                r /= p as usize;
            }
            out.push(v);
        }
    }
    out
}

/// Middle term of the pushout of `0 -> Ω -> P -> x -> 0` along `h : Ω -> s`.
fn pushout_middle(alg: &Arc<Algebra>, x: &Module, s: &Module, h: &Matrix) -> Module {
    let (omega, incl, cover) = syzygy(x);
    let p = x.prime();
    let (sum, _, _) = Module::direct_sum(alg, &[&cover.map.source, s]);
    if omega.is_zero() {
        return sum;
    }
    let rel = Matrix::vstack(p, omega.dim(), &[&incl.matrix, &h.scale(p - 1)]);
    sum.quotient(&rel).0
}

impl Enumeration {
    fn key(&mut self, m: &Module) -> Vec<usize> {
        let mut key = Vec::new();
        for (piece, mult) in decompose(m, 0).expect("decomposition").classes {
            let i = match self.indecomposables.iter().position(|x| is_isomorphic_indecomposable(x, &piece)) {
                Some(i) => i,
                None => {
                    self.indecomposables.push(piece);
                    self.indecomposables.len() - 1
                }
            };
            key.extend(std::iter::repeat_n(i, mult));
        }
        key.sort_unstable();
        key
    }

    pub fn run(alg: &Arc<Algebra>, max_dim: usize) -> Enumeration {
        let p = alg.prime();
        let ss = simples(alg);
        let mut e = Enumeration { indecomposables: Vec::new(), classes: vec![Vec::new(); max_dim + 1] };
        for s in &ss {
            let k = e.key(s);
            e.classes[1].push((k, s.clone()));
        }
        for n in 2..=max_dim {
            let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
            let mut found = Vec::new();
            let lower: Vec<Module> = e.classes[n - 1].iter().map(|(_, m)| m.clone()).collect();
            for x in &lower {
                let omega = syzygy(x).0;
                for s in &ss {
                    let hs = HomSpace::new(&omega, s).expect("same algebra");
                    for c in projective_points(p, hs.dim()) {
                        let h = if hs.dim() == 0 {
                            Matrix::zeros(p, s.dim(), omega.dim())
                        } else {
                            Matrix::combination(p, s.dim(), omega.dim(), hs.basis(), &c)
                        };
                        let mid = pushout_middle(alg, x, s, &h);
                        let k = e.key(&mid);
                        if seen.insert(k.clone()) {
                            found.push((k, mid));
                        }
                    }
                }
            }
            e.classes[n] = found;
        }
        e
    }
}

/// `Ext^i(m, A) = 0` for `1 <= i <= bound`.
pub fn ext_orthogonal_to_regular(m: &Module, bound: usize) -> bool {
    let a = Module::regular(m.algebra());
    (1..=bound).all(|i| ext_dim(m, &a, i) == 0)
}
