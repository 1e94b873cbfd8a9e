use crate::kernel::{columns_to_matrix, Matrix, QuotientCoords};
use crate::modcat::{HomSpace, Module};

use super::TwoTermComplex;

/// `Hom_K(x, y[n])` for two-term complexes: a quotient of cycles by
/// null-homotopic maps, with chosen coset representatives.
///
/// Components of a map: `[f1, f0]` for `n = 0`, `[g : x_1 -> y_0]` for
/// `n = 1` and `[g : x_0 -> y_1]` for `n = -1`; nothing otherwise.
#[derive(Clone, Debug)]
pub struct HomK {
    pub shift: i32,
    spaces: Vec<HomSpace>,
    quotient: QuotientCoords,
    reps: Vec<Vec<Matrix>>,
}

fn space(a: &Module, b: &Module) -> HomSpace {
    HomSpace::new(a, b).expect("same algebra")
}

fn vectorize(m: &Matrix) -> Vec<u32> {
    m.data().to_vec()
}

impl HomK {
    /// `prefer` lists cycles to try first as representatives.
    pub fn new(x: &TwoTermComplex, y: &TwoTermComplex, n: i32, prefer: &[Vec<Matrix>]) -> HomK {
        let p = x.g0().prime();
        let (dx, dy) = (&x.d1.matrix, &y.d1.matrix);
        let (spaces, cycles, sub): (Vec<HomSpace>, Vec<Vec<u32>>, Vec<Vec<u32>>) = match n {
            0 => {
                let s1 = space(x.g1(), y.g1());
                let s0 = space(x.g0(), y.g0());
                let (n1, n0) = (s1.dim(), s0.dim());
                let len = y.g0().dim() * x.g1().dim();
                let mut cols = Vec::with_capacity(n1 + n0);
                for a in s1.basis() {
                    cols.push(vectorize(&dy.mul(a).scale(p - 1)));
                }
                for b in s0.basis() {
                    cols.push(vectorize(&b.mul(dx)));
                }
                let cycles = kernel_of(p, len, n1 + n0, &cols);
                let homotopies = space(x.g0(), y.g1())
                    .basis()
                    .iter()
                    .map(|h| {
                        let mut v = s1.coords(&h.mul(dx));
                        v.extend(s0.coords(&dy.mul(h)));
                        v
                    })
                    .collect();
                (vec![s1, s0], cycles, homotopies)
            }
            1 => {
                let s = space(x.g1(), y.g0());
                let cycles = identity_basis(s.dim());
                let mut sub: Vec<Vec<u32>> =
                    space(x.g0(), y.g0()).basis().iter().map(|a| s.coords(&a.mul(dx))).collect();
                sub.extend(space(x.g1(), y.g1()).basis().iter().map(|b| s.coords(&dy.mul(b))));
                (vec![s], cycles, sub)
            }
            -1 => {
                let s = space(x.g0(), y.g1());
                let cols: Vec<Vec<u32>> = s
                    .basis()
                    .iter()
                    .map(|g| {
                        let mut v = vectorize(&dy.mul(g));
                        v.extend(vectorize(&g.mul(dx)));
                        v
                    })
                    .collect();
                let len = y.g0().dim() * x.g0().dim() + y.g1().dim() * x.g1().dim();
                let cycles = kernel_of(p, len, s.dim(), &cols);
                (vec![s], cycles, Vec::new())
            }
            _ => (Vec::new(), Vec::new(), Vec::new()),
        };
        let len: usize = spaces.iter().map(|s| s.dim()).sum();
        let mut candidates: Vec<Vec<u32>> = Vec::new();
        for comps in prefer {
            candidates.push(flatten(&spaces, comps));
        }
        candidates.extend(cycles);
        let quotient = QuotientCoords::new(p, len, &sub, &candidates);
        let reps = quotient.representatives().iter().map(|v| unflatten(&spaces, v)).collect();
        HomK { shift: n, spaces, quotient, reps }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[Vec<Matrix>] {
        &self.reps
    }

    /// Coordinates of a cycle's class.
    pub fn coords(&self, comps: &[Matrix]) -> Vec<u32> {
        self.quotient.coords(&flatten(&self.spaces, comps))
    }

    pub fn is_null(&self, comps: &[Matrix]) -> bool {
        self.coords(comps).iter().all(|&c| c == 0)
    }

    /// The class with the given coordinates, as a representative.
    pub fn combine(&self, c: &[u32]) -> Vec<Matrix> {
        let p = self.spaces.first().map(|s| s.source().prime()).unwrap_or(2);
        (0..self.spaces.len())
            .map(|k| {
                let s = &self.spaces[k];
                let mats: Vec<Matrix> = self.reps.iter().map(|r| r[k].clone()).collect();
                Matrix::combination(p, s.target().dim(), s.source().dim(), &mats, c)
            })
            .collect()
    }
}

fn identity_basis(n: usize) -> Vec<Vec<u32>> {
    (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect()
}

/// Null space of the linear map with the given image columns.
fn kernel_of(p: u32, len: usize, n: usize, cols: &[Vec<u32>]) -> Vec<Vec<u32>> {
    if n == 0 {
        return Vec::new();
    }
    if len == 0 {
        return identity_basis(n);
    }
    columns_to_matrix(p, len, cols).kernel()
}

fn flatten(spaces: &[HomSpace], comps: &[Matrix]) -> Vec<u32> {
    spaces.iter().zip(comps).flat_map(|(s, m)| s.coords(m)).collect()
}

fn unflatten(spaces: &[HomSpace], v: &[u32]) -> Vec<Matrix> {
    let mut off = 0;
    spaces
        .iter()
        .map(|s| {
            let m = s.combine(&v[off..off + s.dim()]);
            off += s.dim();
            m
        })
        .collect()
}
