//! Subalgebras of a full matrix algebra `M_n(F_p)`, given by a basis.
//!
//! Both an abstract algebra (through its left regular representation) and
//! the endomorphism ring of a module are handled here, so idempotent
//! splitting and locality tests are written once.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::kernel::{inv_mod, mul_mod, rank_of, Echelon, Matrix, QuotientCoords};

#[derive(Clone, Debug)]
pub struct MatAlgebra {
    p: u32,
    n: usize,
    basis: Vec<Matrix>,
}

fn flat(m: &Matrix) -> Vec<u32> {
    m.data().to_vec()
}

impl MatAlgebra {
    /// Span of `spanning` (which must be closed under multiplication).
    pub fn new(p: u32, n: usize, spanning: impl IntoIterator<Item = Matrix>) -> Self {
        let mut ech = Echelon::new(p, n * n);
        let mut basis = Vec::new();
        for m in spanning {
            if ech.insert(m.data()) {
                basis.push(m);
            }
        }
        MatAlgebra { p, n, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Matrix {
        let coeffs: Vec<u32> = (0..self.dim()).map(|_| rng.gen_range(0..self.p)).collect();
        Matrix::combination(self.p, self.n, self.n, &self.basis, &coeffs)
    }

    /// The corner `e S e` for an idempotent `e` of this algebra.
    pub fn corner(&self, e: &Matrix) -> MatAlgebra {
        MatAlgebra::new(self.p, self.n, self.basis.iter().map(|b| e.mul(b).mul(e)))
    }

    /// Jacobson radical as the radical of the trace form `(x, y) -> tr(xy)`.
    ///
    /// Requires `p > n`: then a matrix all of whose powers have trace zero
    /// is nilpotent, so the form radical is a nil ideal.
    pub fn radical(&self) -> Result<Vec<Matrix>> {
        if self.p as usize <= self.n && self.n > 1 {
            return Err(Error::PrimeTooSmall { prime: self.p, dim: self.n });
        }
        let k = self.dim();
        let mut gram = Matrix::zeros(self.p, k, k);
        for i in 0..k {
            for j in i..k {
                let t = trace_of_product(&self.basis[i], &self.basis[j]);
                gram.set(i, j, t);
                gram.set(j, i, t);
            }
        }
        let ker = gram.kernel();
        Ok(ker.into_iter().map(|c| Matrix::combination(self.p, self.n, self.n, &self.basis, &c)).collect())
    }

    /// True when the algebra is local: its semisimple quotient is a field.
    ///
    /// The quotient by the trace-form radical is a field exactly when it is
    /// commutative and the Frobenius map `z -> z^p` has a one-dimensional
    /// fixed space on it.
    pub fn is_local(&self) -> Result<bool> {
        if self.dim() == 0 {
            return Ok(false);
        }
        let rad = self.radical()?;
        let rad_flat: Vec<Vec<u32>> = rad.iter().map(flat).collect();
        let basis_flat: Vec<Vec<u32>> = self.basis.iter().map(flat).collect();
        let q = QuotientCoords::new(self.p, self.n * self.n, &rad_flat, &basis_flat);
        let dq = q.dim();
        if dq == 0 {
            return Ok(false);
        }
        if dq == 1 {
            return Ok(true);
        }
        let reps: Vec<Matrix> =
            q.representatives().iter().map(|v| Matrix::from_vec(self.p, self.n, self.n, v.clone())).collect();
        for i in 0..dq {
            for j in (i + 1)..dq {
                let c = reps[i].mul(&reps[j]).sub(&reps[j].mul(&reps[i]));
                if !q.is_in_sub(c.data()) {
                    return Ok(false);
                }
            }
        }
        // Frobenius on the (commutative) quotient
        let mut frob = Matrix::zeros(self.p, dq, dq);
        for (j, r) in reps.iter().enumerate() {
            let c = q.coords(r.pow(self.p as u64).data());
            for (i, &x) in c.iter().enumerate() {
                frob.set(i, j, x);
            }
        }
        let fixed = dq - frob.sub(&Matrix::identity(self.p, dq)).rank();
        Ok(fixed == 1)
    }

    /// Split a non-primitive idempotent `e` as `f + (e - f)`.
    ///
    /// A random element `a` of the corner generates a commutative subalgebra
    /// `F_p[a]`; Frobenius-fixed elements of it are semisimple with
    /// eigenvalues in `F_p`, and a Cantor-Zassenhaus power of such an
    /// element yields an idempotent.
    pub fn split_idempotent(&self, e: &Matrix, rng: &mut ChaCha8Rng, budget: usize) -> Result<Matrix> {
        let p = self.p;
        if p < 3 {
            return Err(Error::RandomnessExhausted(0));
        }
        let corner = self.corner(e);
        for _ in 0..budget {
            let a = corner.random_element(rng);
            let powers = power_basis(e, &a);
            let k = powers.len();
            if k < 2 {
                continue;
            }
            let ks = crate::kernel::CoordSystem::new(p, self.n * self.n, powers.iter().map(flat).collect());
            let mut frob = Matrix::zeros(p, k, k);
            for (j, b) in powers.iter().enumerate() {
                let c = ks.coords(b.pow(p as u64).data());
                for (i, &x) in c.iter().enumerate() {
                    frob.set(i, j, x);
                }
            }
            let fixed = frob.sub(&Matrix::identity(p, k)).kernel();
            if fixed.len() < 2 {
                continue;
            }
            for _ in 0..4 {
                let coeffs: Vec<u32> = (0..fixed.len()).map(|_| rng.gen_range(0..p)).collect();
                let mut v = vec![0u32; k];
                for (f, &c) in fixed.iter().zip(&coeffs) {
                    for (o, &y) in v.iter_mut().zip(f) {
                        *o = (*o + mul_mod(c, y, p)) % p;
                    }
                }
                let x = Matrix::combination(p, self.n, self.n, &powers, &v);
                let shift: u32 = rng.gen_range(0..p);
                let base = x.add(&e.scale(shift));
                let y = base.pow(((p - 1) / 2) as u64);
                let half = inv_mod(2, p);
                let f = y.mul(&y).add(&y).scale(half);
                if !f.is_zero() && &f != e && f.mul(&f) == f {
                    return Ok(f);
                }
            }
        }
        Err(Error::RandomnessExhausted(budget))
    }

    /// A complete set of orthogonal primitive idempotents summing to `unit`.
    pub fn primitive_idempotents(&self, unit: &Matrix, rng: &mut ChaCha8Rng, budget: usize) -> Result<Vec<Matrix>> {
        let mut out = Vec::new();
        let mut queue = vec![unit.clone()];
        while let Some(e) = queue.pop() {
            if e.is_zero() {
                continue;
            }
            if self.corner(&e).is_local()? {
                out.push(e);
                continue;
            }
            let f = self.split_idempotent(&e, rng, budget)?;
            let g = e.sub(&f);
            queue.push(g);
            queue.push(f);
        }
        Ok(out)
    }
}

fn trace_of_product(a: &Matrix, b: &Matrix) -> u32 {
    let n = a.rows();
    let p = a.prime() as u64;
    let mut s = 0u64;
    for i in 0..n {
        for k in 0..n {
            s = (s + a.get(i, k) as u64 * b.get(k, i) as u64) % p;
        }
    }
    s as u32
}

/// `e, a, a^2, ...` up to the first linear dependence.
fn power_basis(e: &Matrix, a: &Matrix) -> Vec<Matrix> {
    let p = e.prime();
    let len = e.rows() * e.cols();
    let mut ech = Echelon::new(p, len);
    let mut out = Vec::new();
    let mut cur = e.clone();
    loop {
        if !ech.insert(cur.data()) {
            break;
        }
        out.push(cur.clone());
        cur = cur.mul(a);
        if out.len() > len {
            break;
        }
    }
    out
}

/// Dimension of the span of a set of matrices.
pub fn span_dim(p: u32, mats: &[Matrix]) -> usize {
    let Some(first) = mats.first() else { return 0 };
    let len = first.rows() * first.cols();
    rank_of(p, len, &mats.iter().map(flat).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn unit_matrix(p: u32, n: usize, r: usize, c: usize) -> Matrix {
        let mut m = Matrix::zeros(p, n, n);
        m.set(r, c, 1);
        m
    }

    #[test]
    fn full_matrix_algebra_splits_into_rank_one_idempotents() {
        let p = 1009;
        let basis: Vec<Matrix> = (0..2).flat_map(|r| (0..2).map(move |c| unit_matrix(p, 2, r, c))).collect();
        let alg = MatAlgebra::new(p, 2, basis);
        assert!(alg.radical().unwrap().is_empty());
        assert!(!alg.is_local().unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let idem = alg.primitive_idempotents(&Matrix::identity(p, 2), &mut rng, 64).unwrap();
        assert_eq!(idem.len(), 2);
        for e in &idem {
            assert_eq!(e.mul(e), *e);
            assert_eq!(e.rank(), 1);
        }
        assert_eq!(idem[0].mul(&idem[1]), Matrix::zeros(p, 2, 2));
    }

    #[test]
    fn dual_numbers_are_local() {
        let p = 1009;
        let x = Matrix::from_rows(p, &[vec![0, 0], vec![1, 0]]);
        let alg = MatAlgebra::new(p, 2, vec![Matrix::identity(p, 2), x]);
        assert!(alg.is_local().unwrap());
        assert_eq!(alg.radical().unwrap().len(), 1);
    }

    #[test]
    fn field_extension_is_local() {
        // F_p[t]/(t^2 - 3) with 3 a non-square mod 7
        let p = 7;
        let t = Matrix::from_rows(p, &[vec![0, 3], vec![1, 0]]);
        let alg = MatAlgebra::new(p, 2, vec![Matrix::identity(p, 2), t]);
        assert!(alg.is_local().unwrap());
        assert!(alg.radical().unwrap().is_empty());
    }
}
