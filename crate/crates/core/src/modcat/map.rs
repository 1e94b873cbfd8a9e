use super::{left_inverse, Module};
use crate::error::{Error, Result};
use crate::kernel::Matrix;

/// A module homomorphism, stored as a `dim target x dim source` matrix.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: Module,
    pub target: Module,
    pub matrix: Matrix,
}

#[derive(Clone, Debug)]
pub struct Kernel {
    pub module: Module,
    pub inclusion: ModuleMap,
}

#[derive(Clone, Debug)]
pub struct Image {
    pub module: Module,
    pub inclusion: ModuleMap,
    /// The corestriction `source -> image`.
    pub corestriction: ModuleMap,
}

#[derive(Clone, Debug)]
pub struct Cokernel {
    pub module: Module,
    pub projection: ModuleMap,
}

impl ModuleMap {
    /// Validated construction.
    pub fn new(source: &Module, target: &Module, matrix: Matrix) -> Result<ModuleMap> {
        source.check_same(target)?;
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::Invalid("map matrix has the wrong shape".into()));
        }
        let f = ModuleMap::from_trusted(source, target, matrix);
        if !f.is_homomorphism() {
            return Err(Error::Invalid("matrix does not intertwine the actions".into()));
        }
        Ok(f)
    }

    pub(crate) fn from_trusted(source: &Module, target: &Module, matrix: Matrix) -> ModuleMap {
        debug_assert_eq!(matrix.rows(), target.dim());
        debug_assert_eq!(matrix.cols(), source.dim());
        ModuleMap { source: source.clone(), target: target.clone(), matrix }
    }

    pub fn identity(m: &Module) -> ModuleMap {
        ModuleMap::from_trusted(m, m, Matrix::identity(m.prime(), m.dim()))
    }

    pub fn zero(source: &Module, target: &Module) -> ModuleMap {
        ModuleMap::from_trusted(source, target, Matrix::zeros(source.prime(), target.dim(), source.dim()))
    }

    pub fn is_homomorphism(&self) -> bool {
        let alg = self.source.algebra();
        alg.generators()
            .iter()
            .map(|g| g.element.clone())
            .chain(alg.vertex_idempotents())
            .all(|x| self.matrix.mul(&self.source.act(&x)) == self.target.act(&x).mul(&self.matrix))
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap::from_trusted(&other.source, &self.target, self.matrix.mul(&other.matrix))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn kernel(&self) -> Kernel {
        let k = self.matrix.kernel_matrix();
        let (module, incl) = self.source.submodule(&k);
        Kernel { inclusion: ModuleMap::from_trusted(&module, &self.source, incl), module }
    }

    pub fn image(&self) -> Image {
        let cs = self.matrix.column_space();
        let (module, incl) = self.target.submodule(&cs);
        let corestriction = left_inverse(&incl).mul(&self.matrix);
        Image {
            inclusion: ModuleMap::from_trusted(&module, &self.target, incl),
            corestriction: ModuleMap::from_trusted(&self.source, &module, corestriction),
            module,
        }
    }

    pub fn cokernel(&self) -> Cokernel {
        let cs = self.matrix.column_space();
        let (module, q) = self.target.quotient(&cs);
        Cokernel { projection: ModuleMap::from_trusted(&self.target, &module, q), module }
    }

    /// Dual map `D N -> D M` over the opposite algebra.
    pub fn dual(&self) -> ModuleMap {
        ModuleMap::from_trusted(&self.target.dual(), &self.source.dual(), self.matrix.transpose())
    }

    /// Solve `self = g ∘ other` for `g`, if `self` factors through `other`
    /// as a linear map; the caller is responsible for module-linearity.
    pub fn factor_through(&self, other: &ModuleMap) -> Option<Matrix> {
        // g * other = self  <=>  other^T g^T = self^T
        other.matrix.transpose().solve(&self.matrix.transpose()).map(|gt| gt.transpose())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "source_dim": self.source.dim(),
            "target_dim": self.target.dim(),
            "matrix": self.matrix.to_rows(),
        })
    }
}

/// Stack maps `X_i -> M` into `⊕ X_i -> M`.
pub(crate) fn hstack_maps(target: &Module, source: &Module, blocks: &[&Matrix]) -> ModuleMap {
    let m = if blocks.is_empty() {
        Matrix::zeros(target.prime(), target.dim(), 0)
    } else {
        Matrix::hstack(target.prime(), target.dim(), blocks)
    };
    ModuleMap::from_trusted(source, target, m)
}
