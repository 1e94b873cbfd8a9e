use std::fmt::Write as _;

use gsilt::gproj::Completeness;
use gsilt::modcat::Bounded;
use gsilt::verify::{Certificate, CheckVerdict, Parameters};
use serde::{Deserialize, Serialize};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub prime: u32,
    pub fixture: String,
    pub command: String,
    pub parameters: Parameters,
    pub certificates: Vec<Certificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<Body>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Body {
    Analyze(Analysis),
    Atlas(AtlasInfo),
    Rigid(RigidList),
    Silting(Vec<SiltingEntry>),
    Complexes(Vec<ComplexEntry>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Analysis {
    pub algebra_dim: usize,
    pub simples: usize,
    pub gorenstein: GorensteinInfo,
    pub gdim: Option<Bounded>,
    pub atlas: Option<AtlasInfo>,
    pub inventory: Option<InventoryInfo>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GorensteinInfo {
    pub certified: bool,
    pub bound: usize,
    pub idim_left: Option<usize>,
    pub idim_right: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AtlasInfo {
    pub completeness: Completeness,
    pub projective_count: usize,
    pub members: Vec<ModuleInfo>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleInfo {
    pub dim: usize,
    pub dimension_vector: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InventoryInfo {
    pub size: usize,
    pub dim_cap: usize,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RigidList {
    pub inventory: InventoryInfo,
    pub modules: Vec<RigidEntry>,
}

/// A τ_G-rigid inventory module and its minimal proper presentation; the
/// summand lists index the atlas.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RigidEntry {
    pub index: usize,
    pub dimension_vector: Vec<usize>,
    pub g1_summands: Vec<usize>,
    pub g0_summands: Vec<usize>,
}

/// A module-side test object; `summands` index the inventory.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SiltingEntry {
    pub summands: Vec<usize>,
    pub dimension_vector: Vec<usize>,
    pub partial_silting: bool,
    pub silting: bool,
    pub tilting: bool,
    pub star_criterion: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexEntry {
    pub g1: Vec<usize>,
    pub g0: Vec<usize>,
    pub summands: usize,
    pub b_dim: usize,
    pub gldim_b: Bounded,
}

fn bounded(b: &Bounded) -> String {
    match b {
        Bounded::Finite(n) => n.to_string(),
        Bounded::ExceedsBound => "beyond bound".into(),
    }
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn atlas_text(out: &mut String, a: &AtlasInfo) {
    let _ = writeln!(out, "atlas: {} members ({} projective), {}", a.members.len(), a.projective_count, a.completeness);
    for (i, m) in a.members.iter().enumerate() {
        let _ = writeln!(out, "  E{} dim {} {:?}", i, m.dim, m.dimension_vector);
    }
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "gsilt {} | {} | {} | p = {}", self.tool_version, self.command, self.fixture, self.prime);
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error ({}): {}", e.kind, e.message);
        }
        match &self.result {
            Some(Body::Analyze(a)) => {
                let _ = writeln!(out, "dim A = {}, {} simples", a.algebra_dim, a.simples);
                let g = &a.gorenstein;
                match (g.idim_left, g.idim_right) {
                    (Some(l), Some(r)) if g.certified => {
                        let _ = writeln!(out, "Gorenstein: idim_A A = {l}, idim A_A = {r}");
                    }
                    _ => {
                        let _ = writeln!(out, "Gorenstein: not certified within bound {}", g.bound);
                    }
                }
                if let Some(d) = &a.gdim {
                    let _ = writeln!(out, "Gdim A = {}", bounded(d));
                }
                if let Some(at) = &a.atlas {
                    atlas_text(&mut out, at);
                }
                if let Some(inv) = &a.inventory {
                    let _ = writeln!(
                        out,
                        "inventory: {} modules up to dim {}, complete {}",
                        inv.size,
                        inv.dim_cap,
                        yn(inv.complete)
                    );
                }
            }
            Some(Body::Atlas(a)) => atlas_text(&mut out, a),
            Some(Body::Rigid(r)) => {
                let _ = writeln!(out, "{} of {} inventory modules are tau_G-rigid", r.modules.len(), r.inventory.size);
                for m in &r.modules {
                    let _ = writeln!(
                        out,
                        "  M{} {:?}  G1 = {:?} -> G0 = {:?}",
                        m.index, m.dimension_vector, m.g1_summands, m.g0_summands
                    );
                }
            }
            Some(Body::Silting(rows)) => {
                let _ = writeln!(
                    out,
                    "{:<16} {:<14} {:>8} {:>8} {:>8} {:>8}",
                    "summands", "dimvec", "partial", "silting", "tilting", "star"
                );
                for r in rows {
                    let _ = writeln!(
                        out,
                        "{:<16} {:<14} {:>8} {:>8} {:>8} {:>8}",
                        format!("{:?}", r.summands),
                        format!("{:?}", r.dimension_vector),
                        yn(r.partial_silting),
                        yn(r.silting),
                        yn(r.tilting),
                        yn(r.star_criterion)
                    );
                }
            }
            Some(Body::Complexes(rows)) => {
                let _ = writeln!(out, "{} two-term silting complexes", rows.len());
                for r in rows {
                    let _ = writeln!(
                        out,
                        "  {:?} -> {:?}  summands {}  dim B {}  gldim B {}",
                        r.g1,
                        r.g0,
                        r.summands,
                        r.b_dim,
                        bounded(&r.gldim_b)
                    );
                }
            }
            None => {}
        }
        for c in &self.certificates {
            let detail = match &c.verdict {
                CheckVerdict::Fail { witness } => witness.reason.clone(),
                CheckVerdict::OutsideHypothesis { reason } => reason.clone(),
                _ => String::new(),
            };
            let _ = writeln!(out, "{:<6} {:<22} cases {:>4}  {}", c.check_id, c.verdict.label(), c.cases, detail);
            for n in &c.notes {
                let _ = writeln!(out, "         {n}");
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gsilt::verify::run_suite;

    #[test]
    fn typed_round_trip() {
        let params = Parameters { dim_cap: 12, ..Parameters::default() };
        let report = Report {
            tool_version: TOOL_VERSION.into(),
            prime: params.prime,
            fixture: "kx2".into(),
            command: "verify".into(),
            parameters: params,
            certificates: run_suite("kx2", params).unwrap(),
            result: Some(Body::Complexes(vec![ComplexEntry {
                g1: vec![0],
                g0: vec![3],
                summands: 2,
                b_dim: 5,
                gldim_b: Bounded::Finite(2),
            }])),
            error: None,
        };
        let text = serde_json::to_string_pretty(&report).unwrap();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
    }
}
