//! The JSON algebra format and the bundled fixture corpus.
//!
//! Two shapes are accepted:
//!
//! ```json
//! {"quiver": {"vertices": 2, "arrows": [{"name": "a", "source": 1, "target": 2}],
//!             "relations": [[[1, ["a", "b"]], [-1, ["c", "d"]]]]},
//!  "prime": 1009, "label": "..."}
//! {"structure_constants": [[[1]]], "unit": [1], "prime": 1009, "label": "k"}
//! ```
//!
//! Vertices are numbered from 1. A path `["a", "b"]` is the product `a b`:
//! first `b`, then `a`. A relation is a list of `[coeff, path]` terms; a
//! single bare term `[coeff, path]` is accepted as a monomial relation.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Arrow, QuiverPresentation};
use crate::error::{Error, Result};
use crate::kernel::DEFAULT_PRIME;

const DEFAULT_PATH_CAP: usize = 8;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RelationSpec {
    Terms(Vec<(i64, Vec<String>)>),
    Monomial((i64, Vec<String>)),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuiverSpec {
    pub vertices: usize,
    #[serde(default)]
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<RelationSpec>,
    #[serde(default)]
    pub path_length_cap: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraBody {
    Quiver { quiver: QuiverSpec },
    Table { structure_constants: Vec<Vec<Vec<i64>>>, unit: Vec<i64> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraSpec {
    #[serde(default)]
    pub label: Option<String>,
    #[serde(default)]
    pub prime: Option<u32>,
    #[serde(flatten)]
    pub body: AlgebraBody,
}

impl QuiverSpec {
    pub fn presentation(&self) -> Result<QuiverPresentation> {
        let mut arrows = Vec::new();
        for a in &self.arrows {
            if a.source == 0 || a.target == 0 || a.source > self.vertices || a.target > self.vertices {
                return Err(Error::ParseError(format!(
                    "arrow {}: vertices are numbered 1..={}",
                    a.name, self.vertices
                )));
            }
            arrows.push(Arrow { name: a.name.clone(), source: a.source - 1, target: a.target - 1 });
        }
        let relations = self
            .relations
            .iter()
            .map(|r| match r {
                RelationSpec::Terms(t) => t.clone(),
                RelationSpec::Monomial(t) => vec![t.clone()],
            })
            .collect();
        Ok(QuiverPresentation {
            vertices: self.vertices,
            arrows,
            relations,
            path_length_cap: self.path_length_cap.unwrap_or(DEFAULT_PATH_CAP),
        })
    }
}

impl AlgebraSpec {
    pub fn parse(text: &str) -> Result<AlgebraSpec> {
        serde_json::from_str(text).map_err(|e| Error::ParseError(e.to_string()))
    }

    /// Build the algebra; `prime` overrides the file's prime.
    pub fn build(&self, prime: Option<u32>) -> Result<Arc<Algebra>> {
        let p = prime.or(self.prime).unwrap_or(DEFAULT_PRIME);
        let label = self.label.clone().unwrap_or_else(|| "A".into());
        match &self.body {
            AlgebraBody::Quiver { quiver } => quiver.presentation()?.to_algebra(p, &label),
            AlgebraBody::Table { structure_constants, unit } => {
                Algebra::from_nested(p, structure_constants, unit, &label)
            }
        }
    }
}

/// Read and build an algebra file.
pub fn parse_spec(path: &Path, prime: Option<u32>) -> Result<Arc<Algebra>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::ParseError(format!("{}: {e}", path.display())))?;
    AlgebraSpec::parse(&text)?.build(prime)
}

pub mod fixtures {
    //! The bundled corpus: the field, `k[x]/(x^2)`, `k[x]/(x^3)`, the path
    //! algebra of `1 -> 2`, the lower triangular `2 x 2` matrices over
    //! `k[x]/(x^2)`, and the local radical-square-zero algebra on two loops.

    use std::sync::Arc;

    use super::AlgebraSpec;
    use crate::algebra::Algebra;
    use crate::error::{Error, Result};

    pub const NAMES: [&str; 6] = ["field", "kx2", "kx3", "a2", "triangular", "radsq"];

    pub fn source(name: &str) -> Option<&'static str> {
        Some(match name.trim_end_matches(".json") {
            "field" => include_str!("../fixtures/field.json"),
            "kx2" => include_str!("../fixtures/kx2.json"),
            "kx3" => include_str!("../fixtures/kx3.json"),
            "a2" => include_str!("../fixtures/a2.json"),
            "triangular" => include_str!("../fixtures/triangular.json"),
            "radsq" => include_str!("../fixtures/radsq.json"),
            _ => return None,
        })
    }

    pub fn load(name: &str, prime: Option<u32>) -> Result<Arc<Algebra>> {
        let text = source(name).ok_or_else(|| Error::FixtureError(format!("no bundled fixture named {name}")))?;
        AlgebraSpec::parse(text).map_err(|e| Error::FixtureError(format!("{name}: {e}")))?.build(prime)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_fixtures_build() {
        let dims: Vec<usize> = fixtures::NAMES.iter().map(|n| fixtures::load(n, None).unwrap().dim()).collect();
        assert_eq!(dims, vec![1, 2, 3, 3, 6, 3]);
    }

    #[test]
    fn small_prime_is_rejected() {
        let err = fixtures::load("kx3", Some(2)).unwrap_err();
        assert!(matches!(err, Error::PrimeTooSmall { .. }));
    }

    #[test]
    fn monomial_shorthand() {
        let text = r#"{"quiver": {"vertices": 1, "arrows": [{"name": "x", "source": 1, "target": 1}],
                       "relations": [[1, ["x", "x"]]]}, "label": "d"}"#;
        assert_eq!(AlgebraSpec::parse(text).unwrap().build(None).unwrap().dim(), 2);
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(AlgebraSpec::parse("{\"quiver\": 3}"), Err(Error::ParseError(_))));
    }
}
