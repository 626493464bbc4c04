//! Exhaustive, bounded verification of the main theorems.
//!
//! Each `check_*` has a `check_*_with` form that takes the functor under
//! test as a closure, so a corrupted implementation can be substituted and
//! the check shown to fail.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use crate::disk::{enumerate_disk_morphisms, enumerate_disks, phi_inverse_obj, phi_mor, phi_obj, Disk, DiskMor};
use crate::error::{Error, Result};
use crate::globular::{enumerate_cardinals_brute, enumerate_glob_morphisms, GlobCard, GlobMor};
use crate::itree::{
    count_morphisms, enumerate_morphisms, enumerate_morphisms_capped, enumerate_objects, vee, vee_mor, wedge, wedge_mor,
    Flavor, ITreeMor, ITreeObj,
};
use crate::labeled::{
    con_dualize, con_dualize_mor, enumerate_cropped, enumerate_labeled_morphisms, xi, xi_inverse, xi_mor, CroppedTree,
    Direction, LabeledTreeMor,
};
use crate::ograph::{
    count_ograph_morphisms, enumerate_ographs, gamma, gamma_mor, gamma_prime, gamma_prime_mor, upsilon, upsilon_prime,
    OGraph, OGraphMor,
};
use crate::omega::{
    compose_cells, enumerate_cells, free_on_ograph_cells, l_functor, l_inverse, m_source, m_target, psi_mor, psi_obj,
    psi_reconstruct, restrict_cell, Cell, EnrichedCell, GeneratorAction,
};
use crate::ordinal::{interval_maps, ord_maps, vee_map, wedge_map, IntervalMap, OrdMap, Ordinal};

/// Per-pair cap on enumerated morphisms in the tree duality check.
pub const MORPHISM_CAP: u128 = 2000;

/// Enumeration bounds shared by all checks.
///
/// `max_label` bounds interval labels and ordinal objects of iΔ₊; where an
/// ordinal side must match an interval side under duality it is lowered by
/// one. `max_vertices` bounds globular cardinals and, as the largest index
/// `[m]`, the ordinals of the duality check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_degree: usize,
    pub max_dim: usize,
    pub max_height: usize,
    pub max_label: usize,
    pub max_vertices: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_degree: 3,
            max_dim: 3,
            max_height: 3,
            max_label: 2,
            max_vertices: 5,
        }
    }
}

impl Bounds {
    /// Apply `key=value` overrides separated by commas. Keys are `height`,
    /// `degree`, `label`, `vertices`, `dim`, optionally prefixed by `max_`.
    pub fn with_overrides(mut self, spec: &str) -> Result<Bounds> {
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{part}`")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("`{value}` is not a non-negative integer")))?;
            let key = key.trim();
            let slot = match key.strip_prefix("max_").unwrap_or(key) {
                "height" => &mut self.max_height,
                "degree" => &mut self.max_degree,
                "label" => &mut self.max_label,
                "vertices" => &mut self.max_vertices,
                "dim" => &mut self.max_dim,
                other => return Err(Error::Parse(format!("unknown bound `{other}`"))),
            };
            *slot = value;
        }
        Ok(self)
    }
}

impl FromStr for Bounds {
    type Err = Error;
    fn from_str(s: &str) -> Result<Bounds> {
        Bounds::default().with_overrides(s)
    }
}

/// The outcome of one check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub bounds: Bounds,
    pub capped: bool,
    pub counterexample: Option<Value>,
    pub counts: BTreeMap<String, u64>,
    pub pass: bool,
    pub theorem: String,
}

impl Report {
    /// One line of JSON with sorted keys.
    pub fn to_json_line(&self) -> String {
        serde_json::to_value(self).expect("reports serialize").to_string()
    }
}

struct Failure {
    law: String,
    data: Value,
}

type Step = std::result::Result<(), Failure>;

fn ensure(cond: bool, law: &str, data: impl FnOnce() -> Value) -> Step {
    if cond {
        Ok(())
    } else {
        Err(Failure {
            law: law.into(),
            data: data(),
        })
    }
}

fn attempt<T>(r: Result<T>, law: &str) -> std::result::Result<T, Failure> {
    r.map_err(|e| Failure {
        law: law.into(),
        data: json!({ "error": e.to_string() }),
    })
}

fn js<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).unwrap_or(Value::Null)
}

#[derive(Default)]
struct Counts(BTreeMap<String, u64>);

impl Counts {
    fn add(&mut self, key: &str, k: u64) {
        *self.0.entry(key.to_string()).or_default() += k;
    }
    fn bump(&mut self, key: &str) {
        self.add(key, 1);
    }
}

fn finish(theorem: &str, bounds: &Bounds, counts: Counts, capped: bool, outcome: Step) -> Report {
    let (pass, counterexample) = match outcome {
        Ok(()) => (true, None),
        Err(f) => (false, Some(json!({ "law": f.law, "data": f.data }))),
    };
    Report {
        bounds: *bounds,
        capped,
        counterexample,
        counts: counts.0,
        pass,
        theorem: theorem.to_string(),
    }
}

fn ordinal(n: i64) -> Ordinal {
    Ordinal::new(n).expect("bounded ordinals are valid")
}

/// Ordinal/interval duality on maps, the hom-count identity, and
/// contravariant functoriality.
pub fn check_ordinal_duality(b: &Bounds) -> Report {
    check_ordinal_duality_with(b, vee_map, wedge_map)
}

pub fn check_ordinal_duality_with(
    b: &Bounds,
    vee: impl Fn(&IntervalMap) -> OrdMap,
    wedge: impl Fn(&OrdMap) -> IntervalMap,
) -> Report {
    let mut counts = Counts::default();
    let top = b.max_vertices as i64;
    let outcome = (|| {
        for m in 0..=top {
            for n in 0..=top {
                for f in interval_maps(ordinal(m), ordinal(n)) {
                    counts.bump("interval_maps");
                    ensure(wedge(&vee(&f)) == f, "vee then wedge is the identity", || js(&f))?;
                }
            }
        }
        for m in -1..=top {
            for n in -1..=top {
                for g in ord_maps(ordinal(m), ordinal(n)) {
                    counts.bump("ordinal_maps");
                    ensure(vee(&wedge(&g)) == g, "wedge then vee is the identity", || js(&g))?;
                }
            }
        }
        for m in 1..=top {
            for n in 1..=top {
                counts.bump("hom_pairs");
                let i = interval_maps(ordinal(m), ordinal(n)).len();
                let d = ord_maps(ordinal(n - 1), ordinal(m - 1)).len();
                ensure(i == d, "hom-set sizes agree", || json!({ "m": m, "n": n, "interval": i, "ordinal": d }))?;
            }
        }
        let k_top = top - 1;
        for m in 0..=k_top {
            let id = attempt(IntervalMap::identity(ordinal(m)), "identity")?;
            let dual_id = OrdMap::identity(ordinal(m - 1));
            ensure(vee(&id) == dual_id, "vee preserves identities", || json!(m))?;
            for n in 0..=k_top {
                let first = interval_maps(ordinal(m), ordinal(n));
                for k in 0..=k_top {
                    let second = interval_maps(ordinal(n), ordinal(k));
                    for f in &first {
                        for g in &second {
                            counts.bump("interval_composable_pairs");
                            let gf = attempt(g.compose(f), "interval composition")?;
                            let rhs = attempt(vee(f).compose(&vee(g)), "ordinal composition")?;
                            ensure(vee(&gf) == rhs, "vee is contravariant", || json!({ "f": js(f), "g": js(g) }))?;
                        }
                    }
                }
            }
        }
        for m in -1..=k_top {
            for n in -1..=k_top {
                let first = ord_maps(ordinal(m), ordinal(n));
                for k in -1..=k_top {
                    let second = ord_maps(ordinal(n), ordinal(k));
                    for f in &first {
                        for g in &second {
                            counts.bump("ordinal_composable_pairs");
                            let gf = attempt(g.compose(f), "ordinal composition")?;
                            let rhs = attempt(wedge(f).compose(&wedge(g)), "interval composition")?;
                            ensure(wedge(&gf) == rhs, "wedge is contravariant", || json!({ "f": js(f), "g": js(g) }))?;
                        }
                    }
                }
            }
        }
        Ok(())
    })();
    finish("ordinal_duality", b, counts, false, outcome)
}

fn interval_objects(b: &Bounds) -> Vec<ITreeObj> {
    enumerate_objects(Flavor::Interval, b.max_height, b.max_label as i64)
}

fn dual_ordinal_objects(b: &Bounds) -> Vec<ITreeObj> {
    enumerate_objects(Flavor::Ordinal, b.max_height, b.max_label as i64 - 1)
}

/// `∧∨ = Id` and `∨∧ = Id` on objects and on capped hom-sets.
pub fn check_itree_duality(b: &Bounds) -> Report {
    check_itree_duality_with(b, vee, wedge, vee_mor, wedge_mor)
}

pub fn check_itree_duality_with(
    b: &Bounds,
    vee: impl Fn(&ITreeObj) -> Result<ITreeObj>,
    wedge: impl Fn(&ITreeObj) -> Result<ITreeObj>,
    vee_mor: impl Fn(&ITreeMor) -> Result<ITreeMor>,
    wedge_mor: impl Fn(&ITreeMor) -> Result<ITreeMor>,
) -> Report {
    let mut counts = Counts::default();
    let mut capped = false;
    let intervals = interval_objects(b);
    let ordinals = dual_ordinal_objects(b);
    let outcome = (|| {
        let ordinal_set: BTreeSet<&ITreeObj> = ordinals.iter().collect();
        let interval_set: BTreeSet<&ITreeObj> = intervals.iter().collect();
        for h in &intervals {
            counts.bump("interval_objects");
            let k = attempt(vee(h), "vee on objects")?;
            ensure(ordinal_set.contains(&k), "vee lands in the dual bounds", || js(h))?;
            ensure(attempt(wedge(&k), "wedge on objects")? == *h, "wedge after vee", || js(h))?;
        }
        for k in &ordinals {
            counts.bump("ordinal_objects");
            let h = attempt(wedge(k), "wedge on objects")?;
            ensure(interval_set.contains(&h), "wedge lands in the dual bounds", || js(k))?;
            ensure(attempt(vee(&h), "vee on objects")? == *k, "vee after wedge", || js(k))?;
        }
        for (objs, forward, back) in [
            (&intervals, &vee_mor as &dyn Fn(&ITreeMor) -> Result<ITreeMor>, &wedge_mor as &dyn Fn(&ITreeMor) -> Result<ITreeMor>),
            (&ordinals, &wedge_mor, &vee_mor),
        ] {
            for h in objs.iter() {
                for k in objs.iter() {
                    let (ms, cut) = enumerate_morphisms_capped(h, k, MORPHISM_CAP);
                    if cut {
                        capped = true;
                        counts.bump("capped_pairs");
                    }
                    counts.bump("pairs");
                    for f in &ms {
                        counts.bump("morphisms");
                        let d = attempt(forward(f), "dual of a morphism")?;
                        ensure(d.cod() == &attempt(vee_or_wedge(h), "dual object")?, "duality is contravariant", || js(f))?;
                        ensure(attempt(back(&d), "double dual")? == *f, "double dual is the identity", || js(f))?;
                    }
                }
            }
        }
        Ok(())
    })();
    finish("itree_duality", b, counts, capped, outcome)
}

fn vee_or_wedge(h: &ITreeObj) -> Result<ITreeObj> {
    match h.flavor() {
        Flavor::Interval => vee(h),
        Flavor::Ordinal => wedge(h),
    }
}

/// `Φ` is a bijection on hom-sets and a section of `Φ⁻¹` on objects.
pub fn check_phi(b: &Bounds) -> Report {
    check_phi_with(b, phi_obj, phi_mor)
}

pub fn check_phi_with(
    b: &Bounds,
    phi_obj: impl Fn(&Disk) -> ITreeObj,
    phi_mor: impl Fn(&DiskMor) -> ITreeMor,
) -> Report {
    let mut counts = Counts::default();
    let disks = enumerate_disks(b.max_degree, b.max_label);
    let outcome = (|| {
        for d in &disks {
            counts.bump("disks");
            let back = attempt(phi_inverse_obj(&phi_obj(d)), "inverse on objects")?;
            ensure(back == *d, "phi is injective on objects", || js(d))?;
        }
        for a in &disks {
            for c in &disks {
                counts.bump("pairs");
                let (pa, pc) = (phi_obj(a), phi_obj(c));
                let homs = enumerate_disk_morphisms(a, c);
                let mut images = BTreeSet::new();
                for f in &homs {
                    counts.bump("morphisms");
                    let g = phi_mor(f);
                    ensure(g.dom() == &pa && g.cod() == &pc, "phi preserves typing", || js(f))?;
                    ensure(images.insert(g), "phi is faithful", || js(f))?;
                }
                let n = count_morphisms(&pa, &pc);
                ensure(n == homs.len() as u128, "hom-set sizes agree", || {
                    json!({ "dom": js(a), "cod": js(c), "disk": homs.len(), "itree": n.to_string() })
                })?;
            }
        }
        for h in interval_objects(b) {
            counts.bump("objects");
            let d = attempt(phi_inverse_obj(&h), "inverse on objects")?;
            ensure(phi_obj(&d) == h, "phi is surjective on objects", || js(&h))?;
        }
        Ok(())
    })();
    finish("phi", b, counts, false, outcome)
}

/// `ΓΓ′ = Id`, `Γ′Γ = Id`, and `Γ` bijective on hom-sets.
pub fn check_gamma(b: &Bounds) -> Report {
    check_gamma_with(b, gamma, gamma_mor)
}

pub fn check_gamma_with(
    b: &Bounds,
    gamma: impl Fn(&GlobCard) -> OGraph,
    gamma_mor: impl Fn(&GlobMor) -> OGraphMor,
) -> Report {
    let mut counts = Counts::default();
    let objects_bound = b.max_vertices + 1;
    let cards = enumerate_cardinals_brute(objects_bound);
    let graphs = enumerate_ographs(objects_bound);
    let outcome = (|| {
        for c in &cards {
            counts.bump("cardinals");
            ensure(gamma_prime(&gamma(c)) == *c, "gamma' after gamma", || js(c))?;
        }
        for g in &graphs {
            counts.bump("ographs");
            ensure(gamma(&gamma_prime(g)) == *g, "gamma after gamma'", || js(g))?;
        }
        ensure(cards.len() == graphs.len(), "object counts agree", || {
            json!({ "cardinals": cards.len(), "ographs": graphs.len() })
        })?;
        let small: Vec<&GlobCard> = cards.iter().filter(|c| c.vertex_count() <= b.max_vertices).collect();
        for x in &small {
            for y in &small {
                counts.bump("pairs");
                let (gx, gy) = (gamma(x), gamma(y));
                let ms = enumerate_glob_morphisms(x, y);
                let mut images = BTreeSet::new();
                for f in &ms {
                    counts.bump("morphisms");
                    let g = gamma_mor(f);
                    ensure(g.dom() == &gx && g.cod() == &gy, "gamma preserves typing", || js(f))?;
                    ensure(gamma_prime_mor(&g) == *f, "gamma' after gamma on morphisms", || js(f))?;
                    ensure(images.insert(g), "gamma is faithful", || js(f))?;
                }
                let n = count_ograph_morphisms(&gx, &gy);
                ensure(n == ms.len() as u128, "hom-set sizes agree", || {
                    json!({ "dom": js(*x), "cod": js(*y), "cardinal": ms.len(), "ograph": n.to_string() })
                })?;
            }
        }
        Ok(())
    })();
    finish("gamma", b, counts, false, outcome)
}

/// `Υ′Υ = Id` on objects of iΔ₊, and `ΥΥ′ = Id` on ordinal graphs.
pub fn check_upsilon(b: &Bounds) -> Report {
    check_upsilon_with(b, upsilon)
}

pub fn check_upsilon_with(b: &Bounds, upsilon: impl Fn(&ITreeObj) -> Result<OGraph>) -> Report {
    let mut counts = Counts::default();
    let outcome = (|| {
        for h in enumerate_objects(Flavor::Ordinal, b.max_height, b.max_label as i64) {
            counts.bump("objects");
            let g = attempt(upsilon(&h), "upsilon on objects")?;
            ensure(upsilon_prime(&g) == h, "upsilon' after upsilon", || js(&h))?;
        }
        for g in enumerate_ographs(b.max_vertices + 1) {
            counts.bump("ographs");
            let h = upsilon_prime(&g);
            ensure(attempt(upsilon(&h), "upsilon on objects")? == g, "upsilon is surjective", || js(&g))?;
        }
        Ok(())
    })();
    finish("upsilon", b, counts, false, outcome)
}

fn cards_up_to(b: &Bounds) -> Vec<GlobCard> {
    enumerate_cardinals_brute(b.max_vertices)
}

/// Cells of `c`'s base grouped by their `m`-source.
fn by_source(cells: &[Cell], m: usize) -> Result<BTreeMap<Cell, Vec<&Cell>>> {
    let mut idx: BTreeMap<Cell, Vec<&Cell>> = BTreeMap::new();
    for c in cells {
        idx.entry(m_source(c, m)?).or_default().push(c);
    }
    Ok(idx)
}

/// `L : 𝔉X → 𝔉ΓX` is a bijection on cells commuting with `∂` and `∘`.
#[allow(non_snake_case)]
pub fn check_L(b: &Bounds) -> Report {
    check_l_with(b, l_functor)
}

pub fn check_l_with(b: &Bounds, l: impl Fn(&Cell) -> Result<EnrichedCell>) -> Report {
    let mut counts = Counts::default();
    let outcome = (|| {
        for x in cards_up_to(b) {
            counts.bump("cardinals");
            let gx = gamma(&x);
            for n in 0..=b.max_dim {
                let cells = enumerate_cells(&x, n);
                let free: BTreeSet<EnrichedCell> = free_on_ograph_cells(&gx, n).into_iter().collect();
                let mut image = BTreeMap::new();
                for c in &cells {
                    let e = attempt(l(c), "L on cells")?;
                    ensure(free.contains(&e), "L lands in the free ω-category", || js(c))?;
                    ensure(attempt(l_inverse(&x, &e), "inverse of L")? == *c, "L is injective", || js(c))?;
                    image.insert(c.clone(), e);
                }
                let proper = cells.iter().filter(|c| !c.is_degenerate()).count();
                let free_proper = free.iter().filter(|e| !e.is_degenerate()).count();
                counts.add("proper_cells", proper as u64);
                counts.add("degenerate_cells", (cells.len() - proper) as u64);
                ensure(proper == free_proper, "proper cell counts agree", || {
                    json!({ "base": js(&x), "dim": n, "cardinal": proper, "ograph": free_proper })
                })?;
                ensure(cells.len() == free.len(), "degenerate cell counts agree", || {
                    json!({ "base": js(&x), "dim": n, "cardinal": cells.len(), "ograph": free.len() })
                })?;
                for m in 0..n {
                    for c in &cells {
                        counts.bump("boundaries");
                        let e = &image[c];
                        let s = attempt(l(&attempt(m_source(c, m), "source")?), "L on a source")?;
                        let t = attempt(l(&attempt(m_target(c, m), "target")?), "L on a target")?;
                        ensure(s == attempt(e.source(m), "enriched source")?, "L commutes with sources", || js(c))?;
                        ensure(t == attempt(e.target(m), "enriched target")?, "L commutes with targets", || js(c))?;
                    }
                    let idx = attempt(by_source(&cells, m), "sources")?;
                    for a in &cells {
                        let t = attempt(m_target(a, m), "target")?;
                        for &bc in idx.get(&t).map(Vec::as_slice).unwrap_or(&[]) {
                            counts.bump("composites");
                            let comp = attempt(compose_cells(bc, a, m), "composition")?;
                            let lhs = attempt(l(&comp), "L on a composite")?;
                            let rhs = attempt(EnrichedCell::compose(&image[bc], &image[a], m), "enriched composition")?;
                            ensure(lhs == rhs, "L commutes with composition", || {
                                json!({ "beta": js(bc), "alpha": js(a), "m": m })
                            })?;
                        }
                    }
                }
            }
        }
        Ok(())
    })();
    finish("L", b, counts, false, outcome)
}

/// Unit, associativity, globularity and the restriction identities for
/// sources and composites, on every base within the bounds.
pub fn check_omega_laws(b: &Bounds) -> Report {
    check_omega_laws_with(b, compose_cells)
}

pub fn check_omega_laws_with(b: &Bounds, compose: impl Fn(&Cell, &Cell, usize) -> Result<Cell>) -> Report {
    let mut counts = Counts::default();
    let outcome = (|| {
        for x in cards_up_to(b) {
            for n in 1..=b.max_dim {
                let cells = enumerate_cells(&x, n);
                for c in &cells {
                    counts.bump("cells");
                    for m in 0..n {
                        let (s, t) = (attempt(m_source(c, m), "source")?, attempt(m_target(c, m), "target")?);
                        for k in 0..m {
                            counts.bump("globularity");
                            let (sk, tk) = (attempt(m_source(c, k), "source")?, attempt(m_target(c, k), "target")?);
                            for face in [&s, &t] {
                                ensure(attempt(m_source(face, k), "source")? == sk, "globularity of sources", || js(c))?;
                                ensure(attempt(m_target(face, k), "target")? == tk, "globularity of targets", || js(c))?;
                            }
                        }
                        counts.bump("units");
                        let left = attempt(t.identity_at(n), "identity")?;
                        let right = attempt(s.identity_at(n), "identity")?;
                        ensure(attempt(compose(&left, c, m), "left unit")? == *c, "left unit", || js(c))?;
                        ensure(attempt(compose(c, &right, m), "right unit")? == *c, "right unit", || js(c))?;
                        if m >= 1 {
                            for i in 1..c.shape().level_size(0) {
                                counts.bump("dom_sub");
                                let r = attempt(restrict_cell(c, i), "restriction")?;
                                let lhs = attempt(restrict_cell(&s, i), "restriction")?;
                                let rhs = attempt(m_source(&r, m - 1), "source")?;
                                ensure(lhs == rhs, "restriction commutes with sources", || json!({ "cell": js(c), "m": m, "i": i }))?;
                                let lhs = attempt(restrict_cell(&t, i), "restriction")?;
                                let rhs = attempt(m_target(&r, m - 1), "target")?;
                                ensure(lhs == rhs, "restriction commutes with targets", || json!({ "cell": js(c), "m": m, "i": i }))?;
                            }
                        }
                    }
                }
                for m in 0..n {
                    let idx = attempt(by_source(&cells, m), "sources")?;
                    let after = |c: &Cell| -> std::result::Result<&[&Cell], Failure> {
                        let t = attempt(m_target(c, m), "target")?;
                        Ok(idx.get(&t).map(Vec::as_slice).unwrap_or(&[]))
                    };
                    for a in &cells {
                        for &bc in after(a)? {
                            counts.bump("composable_pairs");
                            let ba = attempt(compose(bc, a, m), "composition")?;
                            let pair = || json!({ "beta": js(bc), "alpha": js(a), "m": m });
                            ensure(attempt(m_source(&ba, m), "source")? == attempt(m_source(a, m), "source")?, "source of a composite", pair)?;
                            ensure(attempt(m_target(&ba, m), "target")? == attempt(m_target(bc, m), "target")?, "target of a composite", pair)?;
                            if m >= 1 {
                                for i in 1..ba.shape().level_size(0) {
                                    counts.bump("comp_sub");
                                    let lhs = attempt(restrict_cell(&ba, i), "restriction")?;
                                    let rb = attempt(restrict_cell(bc, i), "restriction")?;
                                    let ra = attempt(restrict_cell(a, i), "restriction")?;
                                    let rhs = attempt(compose(&rb, &ra, m - 1), "composition")?;
                                    ensure(lhs == rhs, "restriction commutes with composition", pair)?;
                                }
                            }
                            for &cc in after(bc)? {
                                counts.bump("composable_triples");
                                let cb = attempt(compose(cc, bc, m), "composition")?;
                                let lhs = attempt(compose(cc, &ba, m), "composition")?;
                                let rhs = attempt(compose(&cb, a, m), "composition")?;
                                ensure(lhs == rhs, "associativity", || {
                                    json!({ "gamma": js(cc), "beta": js(bc), "alpha": js(a), "m": m })
                                })?;
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    })();
    finish("omega_laws", b, counts, false, outcome)
}

/// `Ψ : iΔ₊ → ωCat` is fully faithful on the bounded objects.
pub fn check_psi(b: &Bounds) -> Report {
    check_psi_with(b, psi_mor)
}

pub fn check_psi_with(b: &Bounds, psi_mor: impl Fn(&ITreeMor) -> Result<GeneratorAction>) -> Report {
    let mut counts = Counts::default();
    let objects = enumerate_objects(Flavor::Ordinal, b.max_height, b.max_label as i64);
    let outcome = (|| {
        for h in &objects {
            counts.bump("objects");
            for k in &objects {
                counts.bump("pairs");
                let (ph, pk) = (attempt(psi_obj(h), "psi on objects")?, attempt(psi_obj(k), "psi on objects")?);
                let functors = attempt(enumerate_omega_functors_for(&ph, &pk, b), "functor enumeration")?;
                let functor_set: BTreeSet<&GeneratorAction> = functors.iter().collect();
                let ms = enumerate_morphisms(h, k);
                counts.add("morphisms", ms.len() as u64);
                counts.add("functors", functors.len() as u64);
                ensure(ms.len() == functors.len(), "hom-set sizes agree", || {
                    json!({ "dom": js(h), "cod": js(k), "itree": ms.len(), "functors": functors.len() })
                })?;
                let mut images = BTreeSet::new();
                for g in &ms {
                    let f = attempt(psi_mor(g), "psi on morphisms")?;
                    ensure(functor_set.contains(&f), "psi lands among the functors", || js(g))?;
                    ensure(images.insert(f), "psi is faithful", || js(g))?;
                }
                for f in &functors {
                    let g = attempt(psi_reconstruct(h, k, f), "reconstruction")?;
                    ensure(attempt(psi_mor(&g), "psi on morphisms")? == *f, "psi is full", || js(f))?;
                }
            }
        }
        Ok(())
    })();
    finish("psi", b, counts, false, outcome)
}

fn enumerate_omega_functors_for(
    a: &crate::omega::OmegaCatPresentation,
    c: &crate::omega::OmegaCatPresentation,
    b: &Bounds,
) -> Result<Vec<GeneratorAction>> {
    crate::omega::enumerate_omega_functors(a, c, b.max_height + 1)
}

/// `Ξ_I` and `Ξ_Δ` are bijective on hom-sets and surjective on objects, and
/// `Ξ_Δ ∘ Con = ∨ ∘ Ξ_I`.
pub fn check_xi(b: &Bounds) -> Report {
    check_xi_with(b, xi, xi_mor)
}

pub fn check_xi_with(
    b: &Bounds,
    xi: impl Fn(&CroppedTree) -> ITreeObj,
    xi_mor: impl Fn(&LabeledTreeMor) -> Result<ITreeMor>,
) -> Report {
    let mut counts = Counts::default();
    let outcome = (|| {
        for (flavor, label) in [
            (Flavor::Interval, b.max_label as i64),
            (Flavor::Ordinal, b.max_label as i64 - 1),
        ] {
            let trees = enumerate_cropped(flavor, b.max_degree, label);
            for t in &trees {
                counts.bump("trees");
                let h = xi(t);
                ensure(h.flavor() == flavor, "xi preserves the flavor", || js(t))?;
                ensure(xi_inverse(&h) == *t, "xi is injective on objects", || js(t))?;
            }
            for h in enumerate_objects(flavor, b.max_height, label) {
                counts.bump("objects");
                ensure(xi(&xi_inverse(&h)) == h, "xi is surjective on objects", || js(&h))?;
            }
            for a in &trees {
                for c in &trees {
                    counts.bump("pairs");
                    let ms = enumerate_labeled_morphisms(a, c);
                    let (xa, xc) = (xi(a), xi(c));
                    let (src, tgt) = match Direction::of(flavor) {
                        Direction::Forward => (&xa, &xc),
                        Direction::Op => (&xc, &xa),
                    };
                    let mut images = BTreeSet::new();
                    for m in &ms {
                        counts.bump("morphisms");
                        let g = attempt(xi_mor(m), "xi on morphisms")?;
                        ensure(g.dom() == src && g.cod() == tgt, "xi preserves typing", || js(m))?;
                        ensure(images.insert(g.clone()), "xi is faithful", || js(m))?;
                        if flavor == Flavor::Interval {
                            counts.bump("square_morphisms");
                            let lhs = attempt(xi_mor(&con_dualize_mor(m)), "xi on a dual morphism")?;
                            let rhs = attempt(vee_mor(&g), "vee on morphisms")?;
                            ensure(lhs == rhs, "the duality square commutes on morphisms", || js(m))?;
                        }
                    }
                    let n = count_morphisms(src, tgt);
                    ensure(n == ms.len() as u128, "hom-set sizes agree", || {
                        json!({ "dom": js(a), "cod": js(c), "labeled": ms.len(), "itree": n.to_string() })
                    })?;
                }
            }
            if flavor == Flavor::Interval {
                for t in &trees {
                    counts.bump("square_objects");
                    let d = con_dualize(t);
                    ensure(con_dualize(&d) == *t, "con is an involution", || js(t))?;
                    let rhs = attempt(vee(&xi(t)), "vee on objects")?;
                    ensure(xi(&d) == rhs, "the duality square commutes on objects", || js(t))?;
                }
            }
        }
        Ok(())
    })();
    finish("xi", b, counts, false, outcome)
}

/// Names accepted by [`run_named`], in the order [`run_all`] reports them.
pub const CHECK_NAMES: [&str; 9] = [
    "ordinal_duality",
    "itree_duality",
    "phi",
    "gamma",
    "upsilon",
    "L",
    "psi",
    "xi",
    "omega_laws",
];

fn check_fn(name: &str) -> Option<fn(&Bounds) -> Report> {
    Some(match name {
        "ordinal_duality" => check_ordinal_duality,
        "itree_duality" => check_itree_duality,
        "phi" => check_phi,
        "gamma" => check_gamma,
        "upsilon" => check_upsilon,
        "L" => check_L,
        "psi" => check_psi,
        "xi" => check_xi,
        "omega_laws" => check_omega_laws,
        _ => return None,
    })
}

pub fn run_named(name: &str, b: &Bounds) -> Option<Report> {
    check_fn(name).map(|f| f(b))
}

/// Every check, one thread each, reported in [`CHECK_NAMES`] order.
pub fn run_all(b: &Bounds) -> Vec<Report> {
    std::thread::scope(|s| {
        let handles: Vec<_> = CHECK_NAMES
            .iter()
            .map(|name| {
                let f = check_fn(name).expect("listed check");
                s.spawn(move || f(b))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("check thread")).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_parse() {
        let b: Bounds = "height=3, max_dim=1".parse().unwrap();
        assert_eq!(b.max_height, 3);
        assert_eq!(b.max_dim, 1);
        assert_eq!(b.max_label, Bounds::default().max_label);
        assert!("height".parse::<Bounds>().is_err());
        assert!("colour=2".parse::<Bounds>().is_err());
        assert!("height=-1".parse::<Bounds>().is_err());
    }

    #[test]
    fn height_zero_duality() {
        let b = Bounds {
            max_height: 0,
            ..Bounds::default()
        };
        let r = check_itree_duality(&b);
        assert!(r.pass);
        assert_eq!(r.counts["interval_objects"], 1);
    }

    #[test]
    fn reports_are_deterministic() {
        let b = Bounds {
            max_vertices: 3,
            ..Bounds::default()
        };
        let a: Vec<String> = run_all(&b).iter().map(Report::to_json_line).collect();
        let c: Vec<String> = run_all(&b).iter().map(Report::to_json_line).collect();
        assert_eq!(a, c);
        assert!(a[0].starts_with("{\"bounds\":"));
    }
}
