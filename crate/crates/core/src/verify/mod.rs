//! The verification harness: a catalog of named checks, each replaying one
//! statement over a fixture and emitting a [`Certificate`].
//!
//! Checks share one [`Session`] per fixture, which builds the atlas, the
//! inventory, `Λ` and the enumerated complexes lazily and at most once.
//! `run_suite` fans the checks out with [`crate::par`] and returns them in
//! catalog order.

mod checks;

use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::cmaus::CMAuslanderContext;
use crate::error::{Error, Result};
use crate::gproj::{ginj_atlas, Completeness, GprojAtlas};
use crate::input::{fixtures, parse_spec};
use crate::kernel::DEFAULT_PRIME;
use crate::modcat::Module;
use crate::par;
use crate::silting::{is_partial_g_silting, IndecomposableInventory, PresentationPair};
use crate::twoterm::{indecomposable_candidates, silting_cliques, TwoTermComplex};

/// Catalog order; `run_suite` returns certificates in this order.
pub const CHECK_IDS: [&str; 18] = [
    "L2.1", "P2.3", "P2.7", "T2.8", "P2.10", "T2.11", "C2.13", "L3.3", "P3.4", "L3.5", "L3.7", "T3.8", "R3.9", "P3.10",
    "T3.11", "T3.12", "P3.13", "T3.16",
];

/// Upper bound on module-side test objects `T` per fixture.
const MAX_PAIRS: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    pub prime: u32,
    pub dim_cap: usize,
    pub seed: u64,
    /// Bound for homological dimensions (Gorenstein certificate, gldim B).
    pub bound: usize,
}

impl Default for Parameters {
    fn default() -> Self {
        Parameters { prime: DEFAULT_PRIME, dim_cap: 16, seed: 0, bound: 6 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub reason: String,
    #[serde(default)]
    pub modules: Vec<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complex: Option<serde_json::Value>,
}

impl WitnessRecord {
    pub fn new(reason: impl Into<String>, modules: &[&Module]) -> WitnessRecord {
        WitnessRecord { reason: reason.into(), modules: modules.iter().map(|m| m.to_json()).collect(), complex: None }
    }

    pub fn with_complex(mut self, c: &TwoTermComplex) -> WitnessRecord {
        self.complex = Some(c.to_json());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CheckVerdict {
    Pass,
    Fail { witness: WitnessRecord },
    OutsideHypothesis { reason: String },
    InventoryCappedPass,
}

impl CheckVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            CheckVerdict::Pass => "pass",
            CheckVerdict::Fail { .. } => "fail",
            CheckVerdict::OutsideHypothesis { .. } => "outside_hypothesis",
            CheckVerdict::InventoryCappedPass => "inventory_capped_pass",
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, CheckVerdict::Fail { .. })
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, CheckVerdict::Pass | CheckVerdict::InventoryCappedPass)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub check_id: String,
    pub fixture: String,
    pub verdict: CheckVerdict,
    pub parameters: Parameters,
    pub inventory_cap: usize,
    pub inventory_size: Option<usize>,
    pub inventory_complete: bool,
    pub atlas_complete: Option<Completeness>,
    /// Number of instances the property was evaluated on.
    pub cases: usize,
    #[serde(default)]
    pub notes: Vec<String>,
}

/// What a single check found, before the session attaches its context.
#[derive(Debug, Default)]
pub(crate) struct Outcome {
    cases: usize,
    failure: Option<WitnessRecord>,
    outside: Option<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn holds(cases: usize) -> Outcome {
        Outcome { cases, ..Outcome::default() }
    }

    fn note(mut self, n: impl Into<String>) -> Outcome {
        self.notes.push(n.into());
        self
    }
}

type Shared<T> = OnceLock<Result<Arc<T>>>;

fn cached<T>(cell: &Shared<T>, f: impl FnOnce() -> Result<T>) -> Result<Arc<T>> {
    cell.get_or_init(|| f().map(Arc::new)).clone()
}

/// A fixture with its lazily built contexts.
pub struct Session {
    pub fixture: String,
    pub params: Parameters,
    pub algebra: Arc<Algebra>,
    atlas: Shared<GprojAtlas>,
    inventory: Shared<IndecomposableInventory>,
    lambda: Shared<CMAuslanderContext>,
    pairs: Shared<Vec<PresentationPair>>,
    candidates: Shared<Vec<TwoTermComplex>>,
    silting: Shared<Vec<TwoTermComplex>>,
    ginj: Shared<Vec<Module>>,
    atlas_status: OnceLock<Option<Completeness>>,
}

/// A bundled fixture name, or a path to an algebra file.
pub fn load_fixture(name: &str, prime: u32) -> Result<(String, Arc<Algebra>)> {
    if fixtures::source(name).is_some() {
        let label = name.trim_end_matches(".json").to_string();
        return Ok((label, fixtures::load(name, Some(prime))?));
    }
    let path = std::path::Path::new(name);
    let alg = parse_spec(path, Some(prime)).map_err(|e| match e {
        Error::ParseError(m) => Error::FixtureError(m),
        other => other,
    })?;
    let label = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| name.to_string());
    Ok((label, alg))
}

impl Session {
    pub fn new(fixture: &str, algebra: Arc<Algebra>, params: Parameters) -> Session {
        Session {
            fixture: fixture.to_string(),
            params,
            algebra,
            atlas: OnceLock::new(),
            inventory: OnceLock::new(),
            lambda: OnceLock::new(),
            pairs: OnceLock::new(),
            candidates: OnceLock::new(),
            silting: OnceLock::new(),
            ginj: OnceLock::new(),
            atlas_status: OnceLock::new(),
        }
    }

    pub fn open(fixture: &str, params: Parameters) -> Result<Session> {
        let (label, alg) = load_fixture(fixture, params.prime)?;
        Ok(Session::new(&label, alg, params))
    }

    pub fn atlas(&self) -> Result<Arc<GprojAtlas>> {
        cached(&self.atlas, || GprojAtlas::build(&self.algebra, self.params.dim_cap, self.params.bound))
    }

    pub fn inventory(&self) -> Result<Arc<IndecomposableInventory>> {
        cached(&self.inventory, || {
            IndecomposableInventory::build(&*self.atlas()?, self.params.dim_cap, self.params.seed)
        })
    }

    pub fn lambda(&self) -> Result<Arc<CMAuslanderContext>> {
        cached(&self.lambda, || CMAuslanderContext::build(self.atlas()?))
    }

    /// The atlas flag, upgraded to certified when a complete inventory has
    /// all its `d`-th syzygy summands in the atlas.
    pub fn atlas_completeness(&self) -> Option<Completeness> {
        *self.atlas_status.get_or_init(|| {
            let atlas = self.atlas().ok()?;
            if atlas.complete == Completeness::Certified {
                return Some(Completeness::Certified);
            }
            let covered = self
                .inventory()
                .ok()
                .filter(|i| i.complete_up_to_cap)
                .is_some_and(|i| atlas.covers(&i.modules).unwrap_or(false));
            Some(if covered { Completeness::Certified } else { atlas.complete })
        })
    }

    pub fn ginj(&self) -> Result<Arc<Vec<Module>>> {
        cached(&self.ginj, || ginj_atlas(&self.algebra, self.params.dim_cap, self.params.bound))
    }

    /// Module-side test objects: the minimal presentation of every inventory
    /// module, then direct sums of distinct partial silting members with at
    /// most `|atlas|` summands that stay partial silting.
    pub fn pairs(&self) -> Result<Arc<Vec<PresentationPair>>> {
        cached(&self.pairs, || {
            let atlas = self.atlas()?;
            let inv = self.inventory()?;
            let singles: Vec<PresentationPair> =
                par::map(&inv.modules, |m| PresentationPair::minimal(&atlas, m)).into_iter().collect::<Result<_>>()?;
            let rigid: Vec<usize> = (0..singles.len()).filter(|&i| is_partial_g_silting(&singles[i])).collect();
            let mut out = singles;
            let mut frontier: Vec<Vec<usize>> = rigid.iter().map(|&i| vec![i]).collect();
            while !frontier.is_empty() && out.len() < MAX_PAIRS {
                let mut next = Vec::new();
                for set in &frontier {
                    if set.len() >= atlas.len() {
                        continue;
                    }
                    let last = *set.last().expect("nonempty");
                    for &j in rigid.iter().filter(|&&j| j > last) {
                        let mut grown = set.clone();
                        grown.push(j);
                        let parts: Vec<&Module> = grown.iter().map(|&k| &inv.modules[k]).collect();
                        let pair = PresentationPair::minimal(&atlas, &Module::sum(&self.algebra, &parts))?;
                        if is_partial_g_silting(&pair) && out.len() < MAX_PAIRS {
                            out.push(pair);
                            next.push(grown);
                        }
                    }
                }
                frontier = next;
            }
            Ok(out)
        })
    }

    /// Indecomposable candidate complexes.
    pub fn candidates(&self) -> Result<Arc<Vec<TwoTermComplex>>> {
        cached(&self.candidates, || indecomposable_candidates(&*self.atlas()?, &*self.inventory()?))
    }

    /// The enumerated basic two-term silting complexes.
    pub fn silting_complexes(&self) -> Result<Arc<Vec<TwoTermComplex>>> {
        cached(&self.silting, || {
            let atlas = self.atlas()?;
            let pieces = self.candidates()?;
            Ok(silting_cliques(&pieces, &atlas)
                .into_iter()
                .map(|cl| {
                    let parts: Vec<&TwoTermComplex> = cl.iter().map(|&i| &pieces[i]).collect();
                    TwoTermComplex::sum(&parts)
                })
                .collect())
        })
    }

    /// Candidates followed by the silting sums.
    pub fn all_complexes(&self) -> Result<Vec<TwoTermComplex>> {
        let mut out = self.candidates()?.as_ref().clone();
        out.extend(self.silting_complexes()?.iter().cloned());
        Ok(out)
    }

    pub fn run_check(&self, check_id: &str) -> Result<Certificate> {
        let f = checks::lookup(check_id).ok_or_else(|| Error::UnknownCheck(check_id.to_string()))?;
        Ok(self.certify(check_id, f(self)))
    }

    /// Every catalog check, in catalog order.
    pub fn run_suite(&self) -> Vec<Certificate> {
        par::map(&CHECK_IDS, |id| self.run_check(id).expect("catalog ids are known"))
    }

    fn certify(&self, check_id: &str, outcome: Result<Outcome>) -> Certificate {
        let atlas = self.atlas().ok();
        let inv = if atlas.is_some() { self.inventory().ok() } else { None };
        let atlas_complete = self.atlas_completeness();
        let complete =
            atlas_complete == Some(Completeness::Certified) && inv.as_ref().is_some_and(|i| i.complete_up_to_cap);
        let (verdict, cases, notes) = match outcome {
            Ok(o) => {
                let v = if let Some(w) = o.failure {
                    CheckVerdict::Fail { witness: w }
                } else if let Some(reason) = o.outside {
                    CheckVerdict::OutsideHypothesis { reason }
                } else if complete {
                    CheckVerdict::Pass
                } else {
                    CheckVerdict::InventoryCappedPass
                };
                (v, o.cases, o.notes)
            }
            Err(e @ (Error::NotCertifiedGorenstein(_) | Error::DimCapExceeded(_))) => {
                (CheckVerdict::OutsideHypothesis { reason: e.to_string() }, 0, Vec::new())
            }
            Err(e) => (
                CheckVerdict::Fail { witness: WitnessRecord::new(format!("construction error: {e}"), &[]) },
                0,
                Vec::new(),
            ),
        };
        Certificate {
            check_id: check_id.to_string(),
            fixture: self.fixture.clone(),
            verdict,
            parameters: self.params,
            inventory_cap: self.params.dim_cap,
            inventory_size: inv.as_ref().map(|i| i.len()),
            inventory_complete: inv.as_ref().is_some_and(|i| i.complete_up_to_cap),
            atlas_complete,
            cases,
            notes,
        }
    }
}

/// One check over a bundled fixture name or an algebra file.
pub fn run_check(check_id: &str, fixture: &str, params: Parameters) -> Result<Certificate> {
    if checks::lookup(check_id).is_none() {
        return Err(Error::UnknownCheck(check_id.to_string()));
    }
    Session::open(fixture, params)?.run_check(check_id)
}

pub fn run_suite(fixture: &str, params: Parameters) -> Result<Vec<Certificate>> {
    Ok(Session::open(fixture, params)?.run_suite())
}

#[cfg(test)]
mod tests;
