//! Gorenstein silting and tilting modules: the classes `D_θ`, `Gen_G`,
//! `Pres_G`, `T^{G⊥}`, `T^{⊥0}` and the classifiers built on them.
//!
//! Quantifiers over `mod A` run over an [`IndecomposableInventory`]; all
//! classes involved are closed under finite sums and summands, so
//! indecomposables within the cap decide them up to that cap.

mod inventory;

use serde::Serialize;

use crate::cmaus::{is_tau_rigid, CMAuslanderContext};
use crate::error::{Error, Result};
use crate::gproj::{AddCategory, GprojAtlas};
use crate::modcat::{decompose, hom_dim, HomSpace, Module, ModuleMap};

pub use inventory::{
    ar_knit, closed_under_ar_neighbours, extension_middles, extension_sequences, module_closure,
    IndecomposableInventory,
};

/// A proper Gorenstein-projective presentation `θ : G_1 -> G_0` of `T`.
#[derive(Clone, Debug)]
pub struct PresentationPair {
    pub module: Module,
    pub theta: ModuleMap,
    pub proper: bool,
}

impl PresentationPair {
    /// From the minimal proper presentation of `t`.
    pub fn minimal(atlas: &GprojAtlas, t: &Module) -> Result<PresentationPair> {
        let pr = atlas.min_proper_presentation(t)?;
        Ok(PresentationPair { module: t.clone(), theta: pr.d1, proper: true })
    }

    /// `0 -> T` for a Gorenstein-projective `T`.
    pub fn stalk(atlas: &GprojAtlas, t: &Module) -> Result<PresentationPair> {
        if !atlas.is_gproj(t) {
            return Err(Error::NotGproj);
        }
        let zero = Module::zero(t.algebra());
        Ok(PresentationPair { module: t.clone(), theta: ModuleMap::zero(&zero, t), proper: true })
    }

    /// `θ` with `T = coker θ`; endpoints must be Gorenstein-projective.
    pub fn from_map(atlas: &GprojAtlas, theta: ModuleMap) -> Result<PresentationPair> {
        if !atlas.is_gproj(&theta.source) || !atlas.is_gproj(&theta.target) {
            return Err(Error::NotGproj);
        }
        let c = theta.cokernel();
        let proper = is_proper(atlas, &theta, &c.projection);
        Ok(PresentationPair { module: c.module, theta, proper })
    }

    pub fn g1(&self) -> &Module {
        &self.theta.source
    }

    pub fn g0(&self) -> &Module {
        &self.theta.target
    }
}

/// `Hom(E_j, -)` exactness of `G_1 -> G_0 -> T -> 0`.
fn is_proper(atlas: &GprojAtlas, theta: &ModuleMap, pi: &ModuleMap) -> bool {
    atlas.members.iter().all(|e| {
        let h1 = HomSpace::new(e, &theta.source).expect("same algebra");
        let h0 = HomSpace::new(e, &theta.target).expect("same algebra");
        let ht = HomSpace::new(e, &pi.target).expect("same algebra");
        let img = if h1.dim() == 0 || h0.dim() == 0 { 0 } else { h1.post(&theta.matrix, &h0).rank() };
        let onto = if h0.dim() == 0 || ht.dim() == 0 { 0 } else { h0.post(&pi.matrix, &ht).rank() };
        onto == ht.dim() && img == h0.dim() - onto
    })
}

/// A verdict with an optional counterexample module.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug)]
pub struct Witness {
    pub module: Module,
    pub reason: String,
}

impl Verdict {
    fn pass() -> Verdict {
        Verdict { holds: true, witness: None }
    }

    fn fail(module: &Module, reason: impl Into<String>) -> Verdict {
        Verdict { holds: false, witness: Some(Witness { module: module.clone(), reason: reason.into() }) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClassKind {
    GenG,
    PresG,
    GPerp,
    Perp0,
}

/// `x ∈ D_θ`: `Hom(θ, x) : Hom(G_0, x) -> Hom(G_1, x)` is onto.
pub fn in_d_theta(pair: &PresentationPair, x: &Module) -> bool {
    let h1 = HomSpace::new(pair.g1(), x).expect("same algebra");
    if h1.dim() == 0 {
        return true;
    }
    let h0 = HomSpace::new(pair.g0(), x).expect("same algebra");
    h0.dim() > 0 && h0.pre(&pair.theta.matrix, &h1).rank() == h1.dim()
}

/// The evaluation map `T^{dim Hom(T, x)} -> x`.
pub fn evaluation(t: &Module, x: &Module) -> ModuleMap {
    let hs = HomSpace::new(t, x).expect("same algebra");
    let source = t.power(hs.dim());
    let refs: Vec<_> = hs.basis().iter().collect();
    crate::modcat::hstack_maps(x, &source, &refs)
}

/// Any G-epimorphism from `add T` factors through a right
/// `add T`-approximation, so `x ∈ Gen_G(T)` iff the minimal one (a summand
/// of the evaluation map) is a G-epimorphism.
pub fn in_gen_g_add(atlas: &GprojAtlas, add_t: &AddCategory, x: &Module) -> bool {
    x.is_zero() || atlas.is_g_epi(&add_t.right_approximation(x, true).map)
}

pub fn in_pres_g_add(atlas: &GprojAtlas, add_t: &AddCategory, x: &Module) -> bool {
    if x.is_zero() {
        return true;
    }
    let ap = add_t.right_approximation(x, true);
    atlas.is_g_epi(&ap.map) && in_gen_g_add(atlas, add_t, &ap.map.kernel().module)
}

pub fn in_gen_g(atlas: &GprojAtlas, t: &Module, x: &Module) -> bool {
    in_gen_g_add(atlas, &add_of(t, 0).expect("decomposition"), x)
}

pub fn in_pres_g(atlas: &GprojAtlas, t: &Module, x: &Module) -> bool {
    in_pres_g_add(atlas, &add_of(t, 0).expect("decomposition"), x)
}

pub fn class_membership(atlas: &GprojAtlas, t: &Module, x: &Module, class: ClassKind) -> bool {
    match class {
        ClassKind::GenG => in_gen_g(atlas, t, x),
        ClassKind::PresG => in_pres_g(atlas, t, x),
        ClassKind::GPerp => atlas.gext_dim(t, x, 1) == 0,
        ClassKind::Perp0 => hom_dim(t, x) == 0,
    }
}

/// `T ∈ D_θ`; the closure conditions hold automatically for finitely
/// generated `G_0, G_1`.
pub fn is_partial_g_silting(pair: &PresentationPair) -> bool {
    pair.proper && in_d_theta(pair, &pair.module)
}

/// Partial silting and `Gen_G(T) = D_θ` on the inventory.
pub fn is_g_silting(pair: &PresentationPair, atlas: &GprojAtlas, inv: &IndecomposableInventory) -> Verdict {
    if !is_partial_g_silting(pair) {
        return Verdict::fail(&pair.module, "T is not in D_θ");
    }
    let add_t = match add_of(&pair.module, 0) {
        Ok(a) => a,
        Err(e) => return Verdict::fail(&pair.module, e.to_string()),
    };
    for x in &inv.modules {
        let gen = in_gen_g_add(atlas, &add_t, x);
        let d = in_d_theta(pair, x);
        if gen != d {
            let reason = if d { "in D_θ but not in Gen_G(T)" } else { "in Gen_G(T) but not in D_θ" };
            return Verdict::fail(x, reason);
        }
    }
    Verdict::pass()
}

/// `add` of the indecomposable summands of `t`.
pub fn add_of(t: &Module, seed: u64) -> Result<AddCategory> {
    let classes = decompose(t, seed)?.classes.into_iter().map(|(m, _)| m).collect();
    Ok(AddCategory::new(t.algebra(), classes))
}

/// The left `add T` half of Gorenstein tilting: for every atlas member `P`
/// the minimal left approximation `P -> T_0` is injective with G-exact
/// cokernel sequence and cokernel in `add T`.
fn coresolves_atlas(atlas: &GprojAtlas, add_t: &AddCategory) -> Result<Option<Verdict>> {
    for p in &atlas.members {
        let ap = add_t.left_approximation(p, true);
        if !ap.map.is_injective() {
            return Ok(Some(Verdict::fail(p, "P -> T_0 is not injective")));
        }
        let c = ap.map.cokernel();
        if !atlas.is_g_exact(&ap.map, &c.projection)? {
            return Ok(Some(Verdict::fail(p, "0 -> P -> T_0 -> T_-1 -> 0 is not G-exact")));
        }
        if !c.module.is_zero() {
            for (piece, _) in decompose(&c.module, 0)?.classes {
                if add_t.index_of(&piece).is_none() {
                    return Ok(Some(Verdict::fail(p, "T_-1 is not in add T")));
                }
            }
        }
    }
    Ok(None)
}

/// `Gpd T ≤ 1`, `Gext^1(T, T) = 0` and the coresolution condition.
pub fn is_g_tilting(pair: &PresentationPair, atlas: &GprojAtlas) -> Result<Verdict> {
    let t = &pair.module;
    match atlas.gpd(t, 1).bounded().finite() {
        Some(d) if d <= 1 => {}
        _ => return Ok(Verdict::fail(t, "Gpd T > 1")),
    }
    if atlas.gext_dim(t, t, 1) != 0 {
        return Ok(Verdict::fail(t, "Gext^1(T, T) ≠ 0"));
    }
    let add_t = add_of(t, 0)?;
    Ok(coresolves_atlas(atlas, &add_t)?.unwrap_or_else(Verdict::pass))
}

/// `Gen_G(T) = Pres_G(T) ⊆ T^{G⊥}` on the inventory.
pub fn star_criterion(pair: &PresentationPair, atlas: &GprojAtlas, inv: &IndecomposableInventory) -> Verdict {
    let t = &pair.module;
    let add_t = match add_of(t, 0) {
        Ok(a) => a,
        Err(e) => return Verdict::fail(t, e.to_string()),
    };
    for x in &inv.modules {
        let gen = in_gen_g_add(atlas, &add_t, x);
        if gen != in_pres_g_add(atlas, &add_t, x) {
            return Verdict::fail(x, "Gen_G(T) and Pres_G(T) differ");
        }
        if gen && atlas.gext_dim(t, x, 1) != 0 {
            return Verdict::fail(x, "in Gen_G(T) but Gext^1(T, x) ≠ 0");
        }
    }
    Verdict::pass()
}

/// Partial silting, and every atlas member has a minimal left
/// `add T`-approximation that is a left `D_θ`-approximation with G-exact
/// cokernel sequence in `add T`.
pub fn completion_hypothesis(
    pair: &PresentationPair,
    atlas: &GprojAtlas,
    inv: &IndecomposableInventory,
) -> Result<bool> {
    if !is_partial_g_silting(pair) {
        return Ok(false);
    }
    let add_t = add_of(&pair.module, 0)?;
    if coresolves_atlas(atlas, &add_t)?.is_some() {
        return Ok(false);
    }
    for p in &atlas.members {
        let ap = add_t.left_approximation(p, true);
        for x in inv.modules.iter().filter(|x| in_d_theta(pair, x)) {
            let hp = HomSpace::new(p, x)?;
            if hp.dim() == 0 {
                continue;
            }
            let ht = HomSpace::new(&ap.map.target, x)?;
            if ht.dim() == 0 || ht.pre(&ap.map.matrix, &hp).rank() != hp.dim() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RigidCount {
    pub tau_g_rigid: usize,
    pub tau_rigid_images: usize,
}

/// Inventory members that are `τ_G`-rigid, paired with the number whose
/// image under `Hom(E, -)` is `τ`-rigid over `Λ`.
pub fn count_tau_g_rigid(ctx: &CMAuslanderContext, inv: &IndecomposableInventory) -> Result<RigidCount> {
    let mut c = RigidCount { tau_g_rigid: 0, tau_rigid_images: 0 };
    for m in &inv.modules {
        if ctx.is_tau_g_rigid(m)? {
            c.tau_g_rigid += 1;
        }
        if is_tau_rigid(&ctx.e_functor(m)) {
            c.tau_rigid_images += 1;
        }
    }
    Ok(c)
}
