use gsilt::gproj::Gorenstein;
use gsilt::modcat::{decompose, global_dimension, simples, Module};
use gsilt::silting::{is_g_silting, is_g_tilting, is_partial_g_silting, star_criterion};
use gsilt::twoterm::BContext;
use gsilt::verify::Session;
use gsilt::{Error, Result};

use crate::report::{
    Analysis, AtlasInfo, Body, ComplexEntry, GorensteinInfo, InventoryInfo, ModuleInfo, RigidEntry, RigidList,
    SiltingEntry,
};

fn module_info(m: &Module) -> ModuleInfo {
    ModuleInfo { dim: m.dim(), dimension_vector: m.dimension_vector() }
}

fn atlas_info(s: &Session) -> Result<AtlasInfo> {
    let atlas = s.atlas()?;
    Ok(AtlasInfo {
        completeness: s.atlas_completeness().unwrap_or(atlas.complete),
        projective_count: atlas.projective_count,
        members: atlas.members.iter().map(module_info).collect(),
    })
}

fn inventory_info(s: &Session) -> Result<InventoryInfo> {
    let inv = s.inventory()?;
    Ok(InventoryInfo { size: inv.len(), dim_cap: inv.dim_cap, complete: inv.complete_up_to_cap })
}

/// Gorenstein status first; the rest only when it is certified.
pub fn analyze(s: &Session) -> Result<Body> {
    let alg = &s.algebra;
    let bound = s.params.bound;
    let base = |gorenstein| Analysis {
        algebra_dim: alg.dim(),
        simples: simples(alg).len(),
        gorenstein,
        gdim: None,
        atlas: None,
        inventory: None,
    };
    let gor = match Gorenstein::certify(alg, bound) {
        Ok(g) => g,
        Err(Error::NotCertifiedGorenstein(_)) => {
            let info = GorensteinInfo { certified: false, bound, idim_left: None, idim_right: None };
            return Ok(Body::Analyze(base(info)));
        }
        Err(e) => return Err(e),
    };
    let info =
        GorensteinInfo { certified: true, bound, idim_left: Some(gor.idim_left), idim_right: Some(gor.idim_right) };
    let mut a = base(info);
    a.atlas = Some(atlas_info(s)?);
    a.gdim = Some(s.atlas()?.gdim(bound));
    a.inventory = Some(inventory_info(s)?);
    Ok(Body::Analyze(a))
}

pub fn atlas(s: &Session) -> Result<Body> {
    Ok(Body::Atlas(atlas_info(s)?))
}

pub fn rigid(s: &Session) -> Result<Body> {
    let atlas = s.atlas()?;
    let inv = s.inventory()?;
    let ctx = s.lambda()?;
    let mut modules = Vec::new();
    for (index, m) in inv.modules.iter().enumerate() {
        if !ctx.is_tau_g_rigid(m)? {
            continue;
        }
        let pr = atlas.min_proper_presentation(m)?;
        modules.push(RigidEntry {
            index,
            dimension_vector: m.dimension_vector(),
            g1_summands: pr.g1_summands,
            g0_summands: pr.g0_summands,
        });
    }
    Ok(Body::Rigid(RigidList { inventory: inventory_info(s)?, modules }))
}

pub fn silting(s: &Session) -> Result<Body> {
    let atlas = s.atlas()?;
    let inv = s.inventory()?;
    let pairs = s.pairs()?;
    let mut rows = Vec::with_capacity(pairs.len());
    for pair in pairs.iter() {
        let t = &pair.module;
        let mut summands = Vec::new();
        for (piece, mult) in decompose(t, s.params.seed)?.classes {
            let i = inv.index_of(&piece).ok_or_else(|| Error::Invalid("summand outside the inventory".into()))?;
            summands.extend(std::iter::repeat_n(i, mult));
        }
        summands.sort_unstable();
        rows.push(SiltingEntry {
            summands,
            dimension_vector: t.dimension_vector(),
            partial_silting: is_partial_g_silting(pair),
            silting: is_g_silting(pair, &atlas, &inv).holds,
            tilting: is_g_tilting(pair, &atlas)?.holds,
            star_criterion: star_criterion(pair, &atlas, &inv).holds,
        });
    }
    Ok(Body::Silting(rows))
}

pub fn complexes(s: &Session) -> Result<Body> {
    let mut rows = Vec::new();
    for c in s.silting_complexes()?.iter() {
        let b = BContext::build(c)?;
        rows.push(ComplexEntry {
            g1: c.g1().dimension_vector(),
            g0: c.g0().dimension_vector(),
            summands: b.summand_count()?,
            b_dim: b.b.dim(),
            gldim_b: global_dimension(&b.b, s.params.bound),
        });
    }
    Ok(Body::Complexes(rows))
}
