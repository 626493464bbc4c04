//! The inductive categories iDisk (interval flavor) and iΔ₊ (ordinal flavor)
//! and the mutually inverse duality functors between them.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::ordinal::{
    interval_maps, ord_maps, vee_map, vee_obj, wedge_map, wedge_obj, IntervalMap, OrdMap, Ordinal,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Interval,
    Ordinal,
}

impl Flavor {
    /// Root of the trivial object: `[0]` for intervals, `[-1]` for ordinals.
    pub fn trivial_root(self) -> Ordinal {
        match self {
            Flavor::Interval => Ordinal::POINT,
            Flavor::Ordinal => Ordinal::EMPTY,
        }
    }

    pub fn opposite(self) -> Flavor {
        match self {
            Flavor::Interval => Flavor::Ordinal,
            Flavor::Ordinal => Flavor::Interval,
        }
    }

    /// Number of children of a node with the given root: `|[n]|` for
    /// intervals, `|[n]^∧|` for ordinals.
    pub fn arity(self, root: Ordinal) -> usize {
        match self {
            Flavor::Interval => root.len(),
            Flavor::Ordinal => root.len() + 1,
        }
    }
}

/// An object of iDisk or iΔ₊: trivial, or a root with children that are
/// trivial exactly at the two endpoints.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawObj", into = "RawObj")]
pub struct ITreeObj {
    flavor: Flavor,
    root: Ordinal,
    children: Vec<ITreeObj>,
}

#[derive(Serialize, Deserialize)]
struct RawObj {
    flavor: Flavor,
    root: Ordinal,
    #[serde(default)]
    children: Vec<ITreeObj>,
}

impl TryFrom<RawObj> for ITreeObj {
    type Error = Error;
    fn try_from(r: RawObj) -> Result<Self> {
        if r.children.is_empty() && r.root == r.flavor.trivial_root() {
            Ok(ITreeObj::trivial(r.flavor))
        } else {
            ITreeObj::node(r.flavor, r.root, r.children)
        }
    }
}

impl From<ITreeObj> for RawObj {
    fn from(o: ITreeObj) -> Self {
        RawObj {
            flavor: o.flavor,
            root: o.root,
            children: o.children,
        }
    }
}

impl ITreeObj {
    pub fn trivial(flavor: Flavor) -> Self {
        ITreeObj {
            flavor,
            root: flavor.trivial_root(),
            children: Vec::new(),
        }
    }

    /// A non-trivial object. The root must exceed the trivial root, since a
    /// node over `[0]` (resp. `[-1]`) would have its only child at an endpoint.
    pub fn node(flavor: Flavor, root: Ordinal, children: Vec<ITreeObj>) -> Result<Self> {
        if root <= flavor.trivial_root() {
            return Err(Error::InvalidObject(format!(
                "root {root} of a non-trivial {flavor:?} node must exceed {}",
                flavor.trivial_root()
            )));
        }
        let k = flavor.arity(root);
        if children.len() != k {
            return Err(Error::InvalidObject(format!(
                "root {root} needs {k} children, got {}",
                children.len()
            )));
        }
        for (i, c) in children.iter().enumerate() {
            if c.flavor != flavor {
                return Err(Error::InvalidObject("mixed flavors".into()));
            }
            let end = i == 0 || i + 1 == k;
            if end != c.is_trivial() {
                return Err(Error::InvalidObject(format!(
                    "child {i} must be {}",
                    if end { "trivial" } else { "non-trivial" }
                )));
            }
        }
        Ok(ITreeObj {
            flavor,
            root,
            children,
        })
    }

    /// A node from its interior children only.
    pub fn from_interior(flavor: Flavor, interior: Vec<ITreeObj>) -> Result<Self> {
        let root = match flavor {
            Flavor::Interval => Ordinal::new(interior.len() as i64 + 1)?,
            Flavor::Ordinal => Ordinal::new(interior.len() as i64)?,
        };
        let mut children = vec![ITreeObj::trivial(flavor)];
        children.extend(interior);
        children.push(ITreeObj::trivial(flavor));
        ITreeObj::node(flavor, root, children)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn root(&self) -> Ordinal {
        self.root
    }

    pub fn children(&self) -> &[ITreeObj] {
        &self.children
    }

    pub fn child(&self, i: usize) -> &ITreeObj {
        &self.children[i]
    }

    pub fn is_trivial(&self) -> bool {
        self.children.is_empty()
    }

    pub fn height(&self) -> usize {
        self.children
            .iter()
            .map(|c| c.height() + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(|c| c.node_count()).sum::<usize>()
    }
}

impl fmt::Display for ITreeObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "t");
        }
        write!(f, "{}(", self.root)?;
        for (i, c) in self.children.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A morphism of iDisk or iΔ₊.
///
/// Interval flavor: `root: Root H → Root K` is an interval map and
/// `children[i] : H(i) → K(root(i))`. Ordinal flavor: `root` is monotone and
/// `children[j] : H(root^∧(j)) → K(j)` for `j ∈ (Root K)^∧`. Morphisms into
/// the terminal interval object and out of the initial ordinal object carry
/// no children.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMor", into = "RawMor")]
pub struct ITreeMor {
    dom: ITreeObj,
    cod: ITreeObj,
    root: OrdMap,
    children: Vec<ITreeMor>,
}

#[derive(Serialize, Deserialize)]
struct RawMor {
    dom: ITreeObj,
    cod: ITreeObj,
    root: Vec<usize>,
    #[serde(default)]
    children: Vec<ITreeMor>,
}

impl TryFrom<RawMor> for ITreeMor {
    type Error = Error;
    fn try_from(r: RawMor) -> Result<Self> {
        let root = OrdMap::new(r.dom.root, r.cod.root, r.root)?;
        ITreeMor::new(r.dom, r.cod, root, r.children)
    }
}

impl From<ITreeMor> for RawMor {
    fn from(m: ITreeMor) -> Self {
        RawMor {
            dom: m.dom,
            cod: m.cod,
            root: m.root.images().to_vec(),
            children: m.children,
        }
    }
}

impl ITreeMor {
    pub fn new(dom: ITreeObj, cod: ITreeObj, root: OrdMap, children: Vec<ITreeMor>) -> Result<Self> {
        if dom.flavor != cod.flavor {
            return Err(Error::InvalidMorphism("mixed flavors".into()));
        }
        if root.dom() != dom.root || root.cod() != cod.root {
            return Err(Error::InvalidMorphism(format!(
                "root map {root} does not match {} -> {}",
                dom.root, cod.root
            )));
        }
        if let Some(u) = ITreeMor::unique(&dom, &cod) {
            if !children.is_empty() || u.root != root {
                return Err(Error::InvalidMorphism("not the unique morphism".into()));
            }
            return Ok(u);
        }
        match dom.flavor {
            Flavor::Interval => {
                if dom.is_trivial() {
                    return Err(Error::InvalidMorphism(
                        "no interval morphism from the trivial object to a non-trivial one".into(),
                    ));
                }
                IntervalMap::new(root.clone())?;
                if children.len() != dom.root.len() {
                    return Err(Error::InvalidMorphism("wrong number of children".into()));
                }
                for (i, c) in children.iter().enumerate() {
                    if c.dom != dom.children[i] || c.cod != cod.children[root.apply(i)] {
                        return Err(Error::InvalidMorphism(format!("child {i} is mistyped")));
                    }
                }
            }
            Flavor::Ordinal => {
                if cod.is_trivial() {
                    return Err(Error::InvalidMorphism(
                        "no ordinal morphism from a non-trivial object to the trivial one".into(),
                    ));
                }
                let w = wedge_map(&root);
                if children.len() != cod.root.len() + 1 {
                    return Err(Error::InvalidMorphism("wrong number of children".into()));
                }
                for (j, c) in children.iter().enumerate() {
                    if c.dom != dom.children[w.apply(j)] || c.cod != cod.children[j] {
                        return Err(Error::InvalidMorphism(format!("child {j} is mistyped")));
                    }
                }
            }
        }
        Ok(ITreeMor {
            dom,
            cod,
            root,
            children,
        })
    }

    /// The unique morphism into the terminal interval object or out of the
    /// initial ordinal object, when applicable.
    pub fn unique(dom: &ITreeObj, cod: &ITreeObj) -> Option<ITreeMor> {
        let applies = match dom.flavor {
            Flavor::Interval => cod.is_trivial(),
            Flavor::Ordinal => dom.is_trivial(),
        };
        applies.then(|| {
            let images = match dom.flavor {
                Flavor::Interval => vec![0; dom.root.len()],
                Flavor::Ordinal => Vec::new(),
            };
            ITreeMor {
                dom: dom.clone(),
                cod: cod.clone(),
                root: OrdMap::new(dom.root, cod.root, images).expect("constant map"),
                children: Vec::new(),
            }
        })
    }

    pub fn identity(h: &ITreeObj) -> ITreeMor {
        if let Some(u) = ITreeMor::unique(h, h) {
            return u;
        }
        ITreeMor {
            dom: h.clone(),
            cod: h.clone(),
            root: OrdMap::identity(h.root),
            children: h.children.iter().map(ITreeMor::identity).collect(),
        }
    }

    pub fn flavor(&self) -> Flavor {
        self.dom.flavor
    }

    pub fn dom(&self) -> &ITreeObj {
        &self.dom
    }

    pub fn cod(&self) -> &ITreeObj {
        &self.cod
    }

    pub fn root(&self) -> &OrdMap {
        &self.root
    }

    pub fn children(&self) -> &[ITreeMor] {
        &self.children
    }

    pub fn child(&self, i: usize) -> &ITreeMor {
        &self.children[i]
    }

    /// `g ∘ f` with `g = self`.
    pub fn compose(&self, f: &ITreeMor) -> Result<ITreeMor> {
        if f.cod != self.dom {
            return Err(Error::Mismatch("morphism codomain/domain".into()));
        }
        if let Some(u) = ITreeMor::unique(&f.dom, &self.cod) {
            return Ok(u);
        }
        let root = self.root.compose(&f.root)?;
        let children = match self.flavor() {
            Flavor::Interval => (0..f.children.len())
                .map(|i| self.children[f.root.apply(i)].compose(&f.children[i]))
                .collect::<Result<Vec<_>>>()?,
            Flavor::Ordinal => {
                let w = wedge_map(&self.root);
                (0..self.children.len())
                    .map(|j| self.children[j].compose(&f.children[w.apply(j)]))
                    .collect::<Result<Vec<_>>>()?
            }
        };
        Ok(ITreeMor {
            dom: f.dom.clone(),
            cod: self.cod.clone(),
            root,
            children,
        })
    }
}

impl fmt::Display for ITreeMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.children.is_empty() {
            return write!(f, "!");
        }
        write!(f, "{:?}(", self.root.images())?;
        for (i, c) in self.children.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `∨ : iDisk^op → iΔ₊` on objects.
pub fn vee(h: &ITreeObj) -> Result<ITreeObj> {
    if h.flavor != Flavor::Interval {
        return Err(Error::Mismatch("vee expects an interval object".into()));
    }
    Ok(vee_unchecked(h))
}

fn vee_unchecked(h: &ITreeObj) -> ITreeObj {
    ITreeObj {
        flavor: Flavor::Ordinal,
        root: vee_obj(h.root).expect("interval roots are non-empty"),
        children: h.children.iter().map(vee_unchecked).collect(),
    }
}

/// `∧ : iΔ₊ → iDisk^op` on objects.
pub fn wedge(k: &ITreeObj) -> Result<ITreeObj> {
    if k.flavor != Flavor::Ordinal {
        return Err(Error::Mismatch("wedge expects an ordinal object".into()));
    }
    Ok(wedge_unchecked(k))
}

fn wedge_unchecked(k: &ITreeObj) -> ITreeObj {
    ITreeObj {
        flavor: Flavor::Interval,
        root: wedge_obj(k.root),
        children: k.children.iter().map(wedge_unchecked).collect(),
    }
}

/// `f : H → K` in iDisk gives `f^∨ : K^∨ → H^∨` in iΔ₊.
pub fn vee_mor(f: &ITreeMor) -> Result<ITreeMor> {
    if f.flavor() != Flavor::Interval {
        return Err(Error::Mismatch("vee expects an interval morphism".into()));
    }
    Ok(vee_mor_unchecked(f))
}

fn vee_mor_unchecked(f: &ITreeMor) -> ITreeMor {
    let root = vee_map(&IntervalMap::new(f.root.clone()).expect("root maps are interval maps"));
    ITreeMor {
        dom: vee_unchecked(&f.cod),
        cod: vee_unchecked(&f.dom),
        root,
        children: f.children.iter().map(vee_mor_unchecked).collect(),
    }
}

/// `g : H → K` in iΔ₊ gives `g^∧ : K^∧ → H^∧` in iDisk.
pub fn wedge_mor(g: &ITreeMor) -> Result<ITreeMor> {
    if g.flavor() != Flavor::Ordinal {
        return Err(Error::Mismatch("wedge expects an ordinal morphism".into()));
    }
    Ok(wedge_mor_unchecked(g))
}

fn wedge_mor_unchecked(g: &ITreeMor) -> ITreeMor {
    ITreeMor {
        dom: wedge_unchecked(&g.cod),
        cod: wedge_unchecked(&g.dom),
        root: wedge_map(&g.root).into_underlying(),
        children: g.children.iter().map(wedge_mor_unchecked).collect(),
    }
}

/// All objects of the given flavor with height at most `max_height` and every
/// root index at most `max_root`, sorted.
pub fn enumerate_objects(flavor: Flavor, max_height: usize, max_root: i64) -> Vec<ITreeObj> {
    let mut level = vec![ITreeObj::trivial(flavor)];
    for _ in 0..max_height {
        let nontrivial: Vec<ITreeObj> = level.iter().filter(|o| !o.is_trivial()).cloned().collect();
        let mut next = vec![ITreeObj::trivial(flavor)];
        let lo = flavor.trivial_root().n() + 1;
        for r in lo..=max_root {
            let interior = flavor.arity(Ordinal::new(r).expect("valid")) - 2;
            for combo in product_indices(nontrivial.len(), interior) {
                let kids = combo.iter().map(|&i| nontrivial[i].clone()).collect();
                next.push(ITreeObj::from_interior(flavor, kids).expect("well-formed"));
            }
        }
        level = next;
    }
    level.sort();
    level
}

/// All tuples of length `len` over `0..n`, lexicographically.
pub(crate) fn product_indices(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * n);
        for p in &out {
            for i in 0..n {
                let mut q = p.clone();
                q.push(i);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Cartesian product of lists.
pub(crate) fn cartesian<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for l in lists {
        let mut next = Vec::with_capacity(out.len() * l.len());
        for p in &out {
            for x in l {
                let mut q = p.clone();
                q.push(x.clone());
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Root maps admissible for a flavor.
fn root_maps(flavor: Flavor, m: Ordinal, n: Ordinal) -> Vec<OrdMap> {
    match flavor {
        Flavor::Interval => interval_maps(m, n)
            .into_iter()
            .map(IntervalMap::into_underlying)
            .collect(),
        Flavor::Ordinal => ord_maps(m, n),
    }
}

/// Children types `(dom, cod)` for a root map.
fn child_types<'a>(
    h: &'a ITreeObj,
    k: &'a ITreeObj,
    g: &OrdMap,
) -> Vec<(&'a ITreeObj, &'a ITreeObj)> {
    match h.flavor {
        Flavor::Interval => (0..h.children.len())
            .map(|i| (&h.children[i], &k.children[g.apply(i)]))
            .collect(),
        Flavor::Ordinal => {
            let w = wedge_map(g);
            (0..k.children.len())
                .map(|j| (&h.children[w.apply(j)], &k.children[j]))
                .collect()
        }
    }
}

fn hom_is_empty_or_unique(h: &ITreeObj, k: &ITreeObj) -> Option<u128> {
    if ITreeMor::unique(h, k).is_some() {
        return Some(1);
    }
    let empty = match h.flavor {
        Flavor::Interval => h.is_trivial(),
        Flavor::Ordinal => k.is_trivial(),
    };
    empty.then_some(0)
}

/// `|hom(H, K)|`.
pub fn count_morphisms(h: &ITreeObj, k: &ITreeObj) -> u128 {
    if let Some(c) = hom_is_empty_or_unique(h, k) {
        return c;
    }
    root_maps(h.flavor, h.root, k.root)
        .iter()
        .map(|g| {
            child_types(h, k, g)
                .into_iter()
                .map(|(a, b)| count_morphisms(a, b))
                .product::<u128>()
        })
        .sum()
}

/// All morphisms `H → K`.
pub fn enumerate_morphisms(h: &ITreeObj, k: &ITreeObj) -> Vec<ITreeMor> {
    if let Some(u) = ITreeMor::unique(h, k) {
        return vec![u];
    }
    if hom_is_empty_or_unique(h, k) == Some(0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for g in root_maps(h.flavor, h.root, k.root) {
        let lists: Vec<Vec<ITreeMor>> = child_types(h, k, &g)
            .into_iter()
            .map(|(a, b)| enumerate_morphisms(a, b))
            .collect();
        for children in cartesian(&lists) {
            out.push(ITreeMor {
                dom: h.clone(),
                cod: k.clone(),
                root: g.clone(),
                children,
            });
        }
    }
    out
}

/// Enumerate unless the hom-set exceeds `cap`; the flag reports capping.
pub fn enumerate_morphisms_capped(h: &ITreeObj, k: &ITreeObj, cap: u128) -> (Vec<ITreeMor>, bool) {
    if count_morphisms(h, k) > cap {
        (Vec::new(), true)
    } else {
        (enumerate_morphisms(h, k), false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(fl: Flavor) -> ITreeObj {
        ITreeObj::trivial(fl)
    }

    fn arrow(fl: Flavor) -> ITreeObj {
        ITreeObj::from_interior(fl, vec![]).unwrap()
    }

    #[test]
    fn root_bounds_are_enforced() {
        let iv = Flavor::Interval;
        assert!(ITreeObj::node(iv, Ordinal::POINT, vec![t(iv)]).is_err());
        assert!(ITreeObj::node(iv, Ordinal::new(2).unwrap(), vec![t(iv), t(iv), t(iv)]).is_err());
        let p = arrow(iv);
        assert_eq!(p.root().n(), 1);
        assert_eq!(p.height(), 1);
        assert!(ITreeObj::node(Flavor::Ordinal, Ordinal::EMPTY, vec![t(Flavor::Ordinal)]).is_err());
    }

    #[test]
    fn duality_on_objects() {
        let h = ITreeObj::from_interior(Flavor::Interval, vec![arrow(Flavor::Interval)]).unwrap();
        let v = vee(&h).unwrap();
        assert_eq!(v.root().n(), 1);
        assert_eq!(v.to_string(), "[1](t,[0](t,t),t)");
        assert_eq!(wedge(&v).unwrap(), h);
        assert_eq!(vee(&t(Flavor::Interval)).unwrap(), t(Flavor::Ordinal));
    }

    #[test]
    fn small_counts() {
        let o = Flavor::Ordinal;
        let objs = enumerate_objects(o, 2, 2);
        assert_eq!(objs.len(), 4);
        // three endofunctors of the free arrow
        let h = ITreeObj::from_interior(o, vec![arrow(o)]).unwrap();
        assert_eq!(count_morphisms(&h, &h), 3);
        assert_eq!(enumerate_morphisms(&h, &h).len(), 3);
        assert_eq!(enumerate_objects(Flavor::Interval, 3, 3).len(), 14);
    }

    #[test]
    fn composition_and_identity() {
        let o = Flavor::Ordinal;
        let h = ITreeObj::from_interior(o, vec![arrow(o)]).unwrap();
        let homs = enumerate_morphisms(&h, &h);
        let id = ITreeMor::identity(&h);
        assert!(homs.contains(&id));
        for f in &homs {
            assert_eq!(id.compose(f).unwrap(), *f);
            assert_eq!(f.compose(&id).unwrap(), *f);
        }
    }

    #[test]
    fn serde_round_trip() {
        let h = ITreeObj::from_interior(Flavor::Interval, vec![arrow(Flavor::Interval)]).unwrap();
        let s = serde_json::to_string(&h).unwrap();
        assert_eq!(serde_json::from_str::<ITreeObj>(&s).unwrap(), h);
        let f = ITreeMor::identity(&h);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(serde_json::from_str::<ITreeMor>(&s).unwrap(), f);
    }
}
