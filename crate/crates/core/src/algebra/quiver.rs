//! Bound quiver algebras `kQ / I` with admissible relations.
//!
//! Paths are words in multiplication order: `[a, b]` is `a * b`, i.e. first
//! `b` then `a`, so `[a, b]` is composable when `source(a) == target(b)`.
//! Left modules are then representations with `e_v M` at vertex `v`.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Algebra, Peirce};
use crate::error::{Error, Result};
use crate::kernel::{residue, Matrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A linear combination of paths; each path is a list of arrow names in
/// multiplication order.
pub type Relation = Vec<(i64, Vec<String>)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverPresentation {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    pub path_length_cap: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Path {
    Vertex(usize),
    Word(Vec<usize>),
}

impl QuiverPresentation {
    fn word_source(&self, w: &[usize]) -> usize {
        self.arrows[*w.last().unwrap()].source
    }

    fn word_target(&self, w: &[usize]) -> usize {
        self.arrows[w[0]].target
    }

    fn composable(&self, left: &[usize], right: &[usize]) -> bool {
        self.word_source(left) == self.word_target(right)
    }

    /// All words of length `1..=max_len` in canonical order (length, then lex).
    fn words(&self, max_len: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut layer: Vec<Vec<usize>> = (0..self.arrows.len()).map(|a| vec![a]).collect();
        for _ in 0..max_len {
            if layer.is_empty() {
                break;
            }
            layer.sort();
            out.extend(layer.iter().cloned());
            let mut next = Vec::new();
            for w in &layer {
                for a in 0..self.arrows.len() {
                    let mut v = w.clone();
                    v.push(a);
                    if self.composable(w, &[a]) {
                        next.push(v);
                    }
                }
            }
            layer = next;
        }
        out
    }

    fn parse_relation(&self, rel: &Relation, names: &HashMap<&str, usize>) -> Result<Vec<(i64, Vec<usize>)>> {
        let mut terms = Vec::new();
        let mut ends: Option<(usize, usize)> = None;
        for (coeff, word) in rel {
            if word.len() < 2 {
                return Err(Error::BadRelation(format!("term {word:?} has length < 2")));
            }
            let w: Vec<usize> = word
                .iter()
                .map(|n| names.get(n.as_str()).copied().ok_or_else(|| Error::BadRelation(format!("unknown arrow {n}"))))
                .collect::<Result<_>>()?;
            for pair in w.windows(2) {
                if !self.composable(&pair[..1], &pair[1..]) {
                    return Err(Error::BadRelation(format!("term {word:?} is not a path")));
                }
            }
            let e = (self.word_source(&w), self.word_target(&w));
            match ends {
                None => ends = Some(e),
                Some(prev) if prev != e => {
                    return Err(Error::BadRelation("terms with different endpoints".into()));
                }
                _ => {}
            }
            terms.push((*coeff, w));
        }
        if terms.is_empty() {
            return Err(Error::BadRelation("empty relation".into()));
        }
        Ok(terms)
    }

    /// The quotient algebra with basis the standard paths.
    ///
    /// The ideal is spanned inside the space of paths of length at most
    /// `cap + 1` by all products `u r v`; all paths of length `cap + 1`
    /// must lie in it, which then forces every longer path to vanish.
    pub fn to_algebra(&self, p: u32, label: &str) -> Result<Arc<Algebra>> {
        for a in &self.arrows {
            if a.source >= self.vertices || a.target >= self.vertices {
                return Err(Error::Invalid(format!("arrow {} has an endpoint out of range", a.name)));
            }
        }
        let mut names = HashMap::new();
        for (i, a) in self.arrows.iter().enumerate() {
            if names.insert(a.name.as_str(), i).is_some() {
                return Err(Error::Invalid(format!("duplicate arrow name {}", a.name)));
            }
        }
        let rels: Vec<Vec<(i64, Vec<usize>)>> =
            self.relations.iter().map(|r| self.parse_relation(r, &names)).collect::<Result<_>>()?;

        let cap = self.path_length_cap;
        let words = self.words(cap + 1);
        // column order: longest / greatest first so pivots land on them
        let long: Vec<Vec<usize>> = words.iter().filter(|w| w.len() >= 2).cloned().rev().collect();
        let col_of: HashMap<&[usize], usize> = long.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();

        let mut gens: Vec<Vec<u32>> = Vec::new();
        for rel in &rels {
            let (s, t) = (self.word_source(&rel[0].1), self.word_target(&rel[0].1));
            let maxlen = rel.iter().map(|(_, w)| w.len()).max().unwrap();
            let lefts: Vec<Vec<usize>> =
                std::iter::once(vec![]).chain(words.iter().filter(|u| self.word_source(u) == t).cloned()).collect();
            let rights: Vec<Vec<usize>> =
                std::iter::once(vec![]).chain(words.iter().filter(|v| self.word_target(v) == s).cloned()).collect();
            for u in &lefts {
                for v in &rights {
                    if u.len() + v.len() + maxlen > cap + 1 {
                        continue;
                    }
                    let mut row = vec![0u32; long.len()];
                    for (c, w) in rel {
                        let mut full = u.clone();
                        full.extend_from_slice(w);
                        full.extend_from_slice(v);
                        let col = col_of[full.as_slice()];
                        row[col] = (row[col] + residue(*c, p)) % p;
                    }
                    gens.push(row);
                }
            }
        }
        let (reduced, pivots) = if gens.is_empty() || long.is_empty() {
            (Matrix::zeros(p, 0, long.len()), vec![])
        } else {
            let m = crate::kernel::rows_to_matrix(p, long.len(), &gens);
            let r = m.rref();
            (r.reduced, r.pivots)
        };
        let mut is_pivot = vec![false; long.len()];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        // every path of length cap + 1 must itself lie in the ideal
        let pivot_row_of: HashMap<usize, usize> = pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();
        for (i, w) in long.iter().enumerate() {
            if w.len() != cap + 1 {
                continue;
            }
            let Some(&r) = pivot_row_of.get(&i) else {
                return Err(Error::InfiniteDimensional(cap));
            };
            if (0..long.len()).any(|c| c != i && reduced.get(r, c) != 0) {
                return Err(Error::InfiniteDimensional(cap));
            }
        }
        if words.iter().any(|w| w.len() == cap + 1 && w.len() < 2) {
            // a single arrow with cap = 0
            return Err(Error::InfiniteDimensional(cap));
        }

        // basis: vertices, arrows, then surviving longer paths in canonical order
        let mut basis: Vec<Path> = (0..self.vertices).map(Path::Vertex).collect();
        for w in &words {
            if w.len() > cap {
                continue;
            }
            if w.len() == 1 || !is_pivot[col_of[w.as_slice()]] {
                basis.push(Path::Word(w.clone()));
            }
        }
        let n = basis.len();
        let index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();

        let normal_form = |w: &[usize]| -> Vec<u32> {
            let mut v = vec![0u32; n];
            if w.len() > cap + 1 {
                return v;
            }
            if w.len() == 1 {
                v[index[&Path::Word(w.to_vec())]] = 1;
                return v;
            }
            let col = col_of[w];
            match pivot_row_of.get(&col) {
                None => v[index[&Path::Word(w.to_vec())]] = 1,
                Some(&r) => {
                    for (c, lw) in long.iter().enumerate() {
                        let a = reduced.get(r, c);
                        if c != col && a != 0 {
                            let k = index[&Path::Word(lw.clone())];
                            v[k] = (v[k] + p - a) % p;
                        }
                    }
                }
            }
            v
        };

        let endpoints = |b: &Path| -> (usize, usize) {
            match b {
                Path::Vertex(v) => (*v, *v),
                Path::Word(w) => (self.word_target(w), self.word_source(w)),
            }
        };

        let mut table = vec![0u32; n * n * n];
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let prod: Option<Vec<u32>> = match (x, y) {
                    (Path::Vertex(a), Path::Vertex(b)) => (a == b).then(|| {
                        let mut v = vec![0; n];
                        v[i] = 1;
                        v
                    }),
                    (Path::Vertex(a), Path::Word(w)) => (self.word_target(w) == *a).then(|| {
                        let mut v = vec![0; n];
                        v[j] = 1;
                        v
                    }),
                    (Path::Word(w), Path::Vertex(b)) => (self.word_source(w) == *b).then(|| {
                        let mut v = vec![0; n];
                        v[i] = 1;
                        v
                    }),
                    (Path::Word(u), Path::Word(w)) => self.composable(u, w).then(|| {
                        let mut full = u.clone();
                        full.extend_from_slice(w);
                        normal_form(&full)
                    }),
                };
                if let Some(v) = prod {
                    table[(i * n + j) * n..(i * n + j + 1) * n].copy_from_slice(&v);
                }
            }
        }
        let mut unit = vec![0u32; n];
        unit[..self.vertices].fill(1);
        let peirce = Peirce { idempotents: (0..self.vertices).collect(), block: basis.iter().map(endpoints).collect() };
        let alg = Algebra::build(p, n, table, unit, label, Some(peirce))?;
        alg.validate()?;
        Ok(Arc::new(alg))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loop_with(rel_len: usize) -> QuiverPresentation {
        QuiverPresentation {
            vertices: 1,
            arrows: vec![Arrow { name: "x".into(), source: 0, target: 0 }],
            relations: vec![vec![(1, vec!["x".to_string(); rel_len])]],
            path_length_cap: rel_len + 1,
        }
    }

    #[test]
    fn dual_numbers_have_dimension_two() {
        let a = loop_with(2).to_algebra(1009, "k[x]/x^2").unwrap();
        assert_eq!(a.dim(), 2);
        // x * x = 0
        assert!(a.product_of_basis(1, 1).iter().all(|&c| c == 0));
    }

    #[test]
    fn truncated_polynomial_of_degree_three() {
        let a = loop_with(3).to_algebra(1009, "k[x]/x^3").unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.product_of_basis(1, 1), vec![0, 0, 1]);
    }

    #[test]
    fn a2_path_algebra() {
        let q = QuiverPresentation {
            vertices: 2,
            arrows: vec![Arrow { name: "a".into(), source: 0, target: 1 }],
            relations: vec![],
            path_length_cap: 2,
        };
        let a = q.to_algebra(1009, "A2").unwrap();
        assert_eq!(a.dim(), 3);
        // e2 * a = a, a * e1 = a, e1 * a = 0
        assert_eq!(a.product_of_basis(1, 2), vec![0, 0, 1]);
        assert_eq!(a.product_of_basis(2, 0), vec![0, 0, 1]);
        assert_eq!(a.product_of_basis(0, 2), vec![0, 0, 0]);
    }

    #[test]
    fn field_from_single_vertex() {
        let q = QuiverPresentation { vertices: 1, arrows: vec![], relations: vec![], path_length_cap: 0 };
        assert_eq!(q.to_algebra(1009, "k").unwrap().dim(), 1);
    }

    #[test]
    fn free_loop_is_infinite() {
        let q = QuiverPresentation {
            vertices: 1,
            arrows: vec![Arrow { name: "x".into(), source: 0, target: 0 }],
            relations: vec![],
            path_length_cap: 5,
        };
        assert!(matches!(q.to_algebra(1009, "k[x]"), Err(Error::InfiniteDimensional(5))));
    }

    #[test]
    fn non_admissible_relation_is_rejected() {
        let mut q = loop_with(2);
        q.relations = vec![vec![(1, vec!["x".into()])]];
        assert!(matches!(q.to_algebra(1009, "bad"), Err(Error::BadRelation(_))));
    }
}
