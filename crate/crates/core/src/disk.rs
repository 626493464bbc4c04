//! Joyal disks as canonically numbered level trees, their morphisms, and the
//! functor `Φ : Disk₊ → iDisk`.
//!
//! A canonical disk has weakly increasing parent maps, and the interval order
//! on each fiber is the index order.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{Error, Result};
use crate::forest::{LevelTree, TreeMap};
use crate::itree::{cartesian, Flavor, ITreeMor, ITreeObj};
use crate::ordinal::{interval_maps, OrdMap, Ordinal};

/// First violated disk condition.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum DiskViolation {
    #[error("level 0 must have exactly one vertex")]
    NotATree,
    #[error("fiber over vertex {vertex} of level {level} is empty")]
    EmptyFiber { level: usize, vertex: usize },
    #[error("fiber order over vertex {vertex} of level {level} is not a permutation of the fiber")]
    BadFiberOrder { level: usize, vertex: usize },
    #[error("root fiber is a singleton in a disk of positive degree or outside Disk₊")]
    SingularRoot,
    #[error("vertex {vertex} of level {level}: singular={singular} but endpoint={endpoint}")]
    SingularMismatch {
        level: usize,
        vertex: usize,
        singular: bool,
        endpoint: bool,
    },
}

/// Check the disk conditions on a tree with explicit fiber orders
/// (`orders[n][y]` lists the children of `y` in interval order). With
/// `augmented`, degree-0 disks are accepted.
pub fn validate_disk(
    tree: &LevelTree,
    orders: &[Vec<Vec<usize>>],
    augmented: bool,
) -> std::result::Result<(), DiskViolation> {
    if !tree.is_tree() {
        return Err(DiskViolation::NotATree);
    }
    let d = tree.degree();
    for n in 0..d {
        for y in 0..tree.level_size(n) {
            let mut given = orders
                .get(n)
                .and_then(|l| l.get(y))
                .cloned()
                .ok_or(DiskViolation::BadFiberOrder { level: n, vertex: y })?;
            if given.is_empty() {
                return Err(DiskViolation::EmptyFiber { level: n, vertex: y });
            }
            given.sort_unstable();
            if given != tree.children(n, y) {
                return Err(DiskViolation::BadFiberOrder { level: n, vertex: y });
            }
        }
    }
    let fiber_len = |n: usize, y: usize| if n < d { orders[n][y].len() } else { 1 };
    if fiber_len(0, 0) == 1 && !(augmented && d == 0) {
        return Err(DiskViolation::SingularRoot);
    }
    for n in 1..=d {
        let mut endpoint = vec![false; tree.level_size(n)];
        for o in &orders[n - 1] {
            endpoint[o[0]] = true;
            endpoint[*o.last().expect("non-empty")] = true;
        }
        for (x, &e) in endpoint.iter().enumerate() {
            let singular = fiber_len(n, x) == 1;
            if singular != e {
                return Err(DiskViolation::SingularMismatch {
                    level: n,
                    vertex: x,
                    singular,
                    endpoint: e,
                });
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDisk", into = "RawDisk")]
pub struct Disk {
    tree: LevelTree,
}

#[derive(Serialize, Deserialize)]
struct RawDisk {
    levels: Vec<usize>,
    parents: Vec<Vec<usize>>,
    fiber_sizes: Vec<Vec<usize>>,
}

impl TryFrom<RawDisk> for Disk {
    type Error = Error;
    fn try_from(r: RawDisk) -> Result<Self> {
        let d = Disk::from_fiber_sizes(r.fiber_sizes)?;
        let t = LevelTree::new(r.levels, r.parents)?;
        if t != d.tree {
            return Err(Error::InvalidObject(
                "levels/parents disagree with fiber_sizes".into(),
            ));
        }
        Ok(d)
    }
}

impl From<Disk> for RawDisk {
    fn from(d: Disk) -> Self {
        let fiber_sizes = d.fiber_sizes();
        let t: crate::forest::RawLevelTree = d.tree.into();
        RawDisk {
            levels: t.levels,
            parents: t.parents,
            fiber_sizes,
        }
    }
}

impl Disk {
    /// Validate a tree with explicit fiber orders and renumber it canonically.
    pub fn new(tree: &LevelTree, orders: &[Vec<Vec<usize>>]) -> Result<Disk> {
        validate_disk(tree, orders, true).map_err(|v| Error::InvalidObject(v.to_string()))?;
        let d = tree.degree();
        // renumber level by level in fiber order
        let mut fibers: Vec<Vec<usize>> = Vec::new();
        let mut old_of_new: Vec<usize> = vec![0];
        for n in 0..d {
            let mut next = Vec::new();
            let mut fs = Vec::new();
            for &y in &old_of_new {
                fs.push(orders[n][y].len());
                next.extend_from_slice(&orders[n][y]);
            }
            fibers.push(fs);
            old_of_new = next;
        }
        Disk::from_fiber_sizes(fibers)
    }

    /// Build the canonical disk with `fiber_sizes[n][y]` children under
    /// vertex `y` of level `n`, for `n` below the degree.
    pub fn from_fiber_sizes(fiber_sizes: Vec<Vec<usize>>) -> Result<Disk> {
        let mut sizes = vec![1usize];
        let mut parents = Vec::new();
        for (n, fs) in fiber_sizes.iter().enumerate() {
            if fs.len() != sizes[n] {
                return Err(Error::InvalidObject(format!(
                    "level {n} has {} vertices but {} fiber sizes",
                    sizes[n],
                    fs.len()
                )));
            }
            let p: Vec<usize> = fs
                .iter()
                .enumerate()
                .flat_map(|(y, &k)| std::iter::repeat_n(y, k))
                .collect();
            sizes.push(p.len());
            parents.push(p);
        }
        Disk::from_canonical(LevelTree::new(sizes, parents)?)
    }

    /// A tree with monotone parents, read with index order on fibers.
    pub fn from_canonical(tree: LevelTree) -> Result<Disk> {
        if !tree.has_monotone_parents() {
            return Err(Error::InvalidObject("parents must be weakly increasing".into()));
        }
        let orders = index_orders(&tree);
        validate_disk(&tree, &orders, true).map_err(|v| Error::InvalidObject(v.to_string()))?;
        Ok(Disk { tree })
    }

    pub fn trivial() -> Disk {
        Disk {
            tree: LevelTree::chain(),
        }
    }

    pub fn tree(&self) -> &LevelTree {
        &self.tree
    }

    pub fn degree(&self) -> usize {
        self.tree.degree()
    }

    pub fn is_trivial(&self) -> bool {
        self.degree() == 0
    }

    /// Children of `y` at level `n`, in interval order.
    pub fn fiber(&self, n: usize, y: usize) -> Vec<usize> {
        self.tree.children(n, y)
    }

    pub fn fiber_sizes(&self) -> Vec<Vec<usize>> {
        (0..self.degree())
            .map(|n| (0..self.tree.level_size(n)).map(|y| self.fiber(n, y).len()).collect())
            .collect()
    }

    /// Position of `x` (level `n + 1`) inside its fiber.
    pub fn position(&self, n: usize, x: usize) -> usize {
        let p = self.tree.parent(n, x);
        self.fiber(n, p).iter().position(|&v| v == x).expect("x is in its fiber")
    }

    pub fn restrict(&self, n: usize, x: usize) -> Result<Disk> {
        Ok(Disk {
            tree: self.tree.restrict(n, x)?,
        })
    }

    pub fn to_dot(&self) -> String {
        self.tree.to_dot(|n, x| format!("{n}:{x}"))
    }
}

fn index_orders(tree: &LevelTree) -> Vec<Vec<Vec<usize>>> {
    (0..tree.degree())
        .map(|n| (0..tree.level_size(n)).map(|y| tree.children(n, y)).collect())
        .collect()
}

/// A disk morphism: a tree map that is monotone and endpoint-preserving on
/// every fiber.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DiskMor {
    dom: Disk,
    cod: Disk,
    map: TreeMap,
}

impl DiskMor {
    pub fn new(dom: Disk, cod: Disk, maps: Vec<Vec<usize>>) -> Result<DiskMor> {
        let map = TreeMap::new(dom.tree.clone(), cod.tree.clone(), maps)?;
        let depth = dom.degree().max(cod.degree());
        for n in 0..depth {
            for y in 0..dom.tree.level_size(n) {
                let src = dom.fiber(n, y);
                let tgt = cod.fiber(n, map.apply(n, y));
                let images: Vec<usize> = src
                    .iter()
                    .map(|&x| {
                        let fx = map.apply(n + 1, x);
                        tgt.iter().position(|&v| v == fx).expect("map commutes with parents")
                    })
                    .collect();
                let ok = OrdMap::new(
                    Ordinal::new(src.len() as i64 - 1)?,
                    Ordinal::new(tgt.len() as i64 - 1)?,
                    images,
                )
                .map(|m| m.preserves_bottom() && m.preserves_top())
                .unwrap_or(false);
                if !ok {
                    return Err(Error::InvalidMorphism(format!(
                        "fiber over vertex {y} of level {n} is not mapped as an interval"
                    )));
                }
            }
        }
        Ok(DiskMor { dom, cod, map })
    }

    pub fn identity(d: &Disk) -> DiskMor {
        DiskMor {
            dom: d.clone(),
            cod: d.clone(),
            map: TreeMap::identity(&d.tree),
        }
    }

    pub fn dom(&self) -> &Disk {
        &self.dom
    }

    pub fn cod(&self) -> &Disk {
        &self.cod
    }

    pub fn map(&self) -> &TreeMap {
        &self.map
    }

    pub fn compose(&self, f: &DiskMor) -> Result<DiskMor> {
        let m = self.map.compose(&f.map)?;
        DiskMor::new(f.dom.clone(), self.cod.clone(), m.maps().to_vec())
    }

    /// Root fiber map as an interval map on positions.
    fn root_map(&self) -> OrdMap {
        let src = self.dom.fiber(0, 0);
        let tgt = self.cod.fiber(0, 0);
        let images = src
            .iter()
            .map(|&x| {
                let fx = self.map.apply(1, x);
                tgt.iter().position(|&v| v == fx).expect("commutes")
            })
            .collect();
        OrdMap::new(
            Ordinal::new(src.len() as i64 - 1).expect("non-empty"),
            Ordinal::new(tgt.len() as i64 - 1).expect("non-empty"),
            images,
        )
        .expect("validated")
    }

    pub fn restrict(&self, n: usize, x: usize) -> Result<DiskMor> {
        let m = self.map.restrict(n, x)?;
        Ok(DiskMor {
            dom: Disk {
                tree: m.dom().clone(),
            },
            cod: Disk {
                tree: m.cod().clone(),
            },
            map: m,
        })
    }
}

/// `Φ` on objects.
pub fn phi_obj(d: &Disk) -> ITreeObj {
    if d.is_trivial() {
        return ITreeObj::trivial(Flavor::Interval);
    }
    let fiber = d.fiber(0, 0);
    let root = Ordinal::new(fiber.len() as i64 - 1).expect("non-empty fiber");
    let children = fiber
        .iter()
        .map(|&x| phi_obj(&d.restrict(1, x).expect("vertex exists")))
        .collect();
    ITreeObj::node(Flavor::Interval, root, children).expect("disk conditions give an iDisk object")
}

/// `Φ` on morphisms.
pub fn phi_mor(f: &DiskMor) -> ITreeMor {
    let h = phi_obj(&f.dom);
    let k = phi_obj(&f.cod);
    if let Some(u) = ITreeMor::unique(&h, &k) {
        return u;
    }
    let children = f
        .dom
        .fiber(0, 0)
        .iter()
        .map(|&x| phi_mor(&f.restrict(1, x).expect("vertex exists")))
        .collect();
    ITreeMor::new(h, k, f.root_map(), children).expect("Φ preserves typing")
}

/// A section of `Φ` on objects: the suspension of the coproduct of the
/// children's disks.
pub fn phi_inverse_obj(h: &ITreeObj) -> Result<Disk> {
    if h.flavor() != Flavor::Interval {
        return Err(Error::Mismatch("Φ⁻¹ expects an interval object".into()));
    }
    if h.is_trivial() {
        return Ok(Disk::trivial());
    }
    let parts = h
        .children()
        .iter()
        .map(|c| phi_inverse_obj(c).map(|d| d.tree))
        .collect::<Result<Vec<_>>>()?;
    let tree = LevelTree::suspend(&LevelTree::coproduct(&parts));
    Disk::from_canonical(tree)
}

/// All canonical disks of degree ≤ `max_degree` with every fiber of size
/// ≤ `max_fiber`, generated level by level from endpoint data.
pub fn enumerate_disks(max_degree: usize, max_fiber: usize) -> Vec<Disk> {
    let mut out = vec![Disk::trivial()];
    if max_degree == 0 {
        return out;
    }
    // state: fiber sizes so far, and endpoint flags of the current top level
    fn grow(
        level: usize,
        max_degree: usize,
        max_fiber: usize,
        fibers: &mut Vec<Vec<usize>>,
        endpoint: &[bool],
        out: &mut Vec<Disk>,
    ) {
        if endpoint.iter().all(|&e| e) {
            out.push(Disk::from_fiber_sizes(fibers.clone()).expect("generated disks are valid"));
            return;
        }
        if level >= max_degree {
            return;
        }
        let interior_sizes: Vec<usize> = if level + 1 == max_degree { vec![2] } else { (2..=max_fiber).collect() };
        let choices: Vec<Vec<usize>> = endpoint
            .iter()
            .map(|&e| if e { vec![1] } else { interior_sizes.clone() })
            .collect();
        for sizes in cartesian(&choices) {
            let mut next = Vec::new();
            for &k in &sizes {
                for i in 0..k {
                    next.push(i == 0 || i + 1 == k);
                }
            }
            fibers.push(sizes);
            grow(level + 1, max_degree, max_fiber, fibers, &next, out);
            fibers.pop();
        }
    }
    let root_sizes: Vec<usize> = if max_degree == 1 { vec![2] } else { (2..=max_fiber).collect() };
    for k in root_sizes {
        if k > max_fiber {
            continue;
        }
        let endpoint: Vec<bool> = (0..k).map(|i| i == 0 || i + 1 == k).collect();
        grow(1, max_degree, max_fiber, &mut vec![vec![k]], &endpoint, &mut out);
    }
    out.sort();
    out
}

fn fiber_maps(a: &Disk, b: &Disk, n: usize, y: usize, fy: usize) -> Vec<Vec<usize>> {
    let src = a.fiber(n, y);
    let tgt = b.fiber(n, fy);
    let m = Ordinal::new(src.len() as i64 - 1).expect("non-empty");
    let k = Ordinal::new(tgt.len() as i64 - 1).expect("non-empty");
    interval_maps(m, k)
        .into_iter()
        .map(|g| g.underlying().images().iter().map(|&i| tgt[i]).collect())
        .collect()
}

/// All disk morphisms `A → B`, built fiber by fiber.
pub fn enumerate_disk_morphisms(a: &Disk, b: &Disk) -> Vec<DiskMor> {
    let depth = a.degree().max(b.degree());
    let mut out = Vec::new();
    let mut maps: Vec<Vec<usize>> = vec![vec![0]];
    fn go(
        a: &Disk,
        b: &Disk,
        depth: usize,
        maps: &mut Vec<Vec<usize>>,
        out: &mut Vec<DiskMor>,
    ) {
        let n = maps.len() - 1;
        if n == depth {
            out.push(DiskMor {
                dom: a.clone(),
                cod: b.clone(),
                map: TreeMap::new(a.tree.clone(), b.tree.clone(), maps.clone()).expect("built to commute"),
            });
            return;
        }
        let choices: Vec<Vec<Vec<usize>>> = (0..a.tree.level_size(n))
            .map(|y| fiber_maps(a, b, n, y, maps[n][y]))
            .collect();
        for combo in cartesian(&choices) {
            let mut level = vec![0usize; a.tree.level_size(n + 1)];
            for (y, imgs) in combo.iter().enumerate() {
                for (x, &v) in a.fiber(n, y).iter().zip(imgs) {
                    level[*x] = v;
                }
            }
            maps.push(level);
            go(a, b, depth, maps, out);
            maps.pop();
        }
    }
    go(a, b, depth, &mut maps, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_disk() {
        let d = Disk::trivial();
        assert_eq!(phi_obj(&d), ITreeObj::trivial(Flavor::Interval));
        assert_eq!(validate_disk(d.tree(), &[], false), Err(DiskViolation::SingularRoot));
        assert_eq!(validate_disk(d.tree(), &[], true), Ok(()));
    }

    #[test]
    fn two_point_fiber() {
        let d = Disk::from_fiber_sizes(vec![vec![2]]).unwrap();
        assert_eq!(d.degree(), 1);
        assert_eq!(phi_obj(&d).to_string(), "[1](t,t)");
    }

    #[test]
    fn singular_mismatch_is_reported() {
        // interior vertex of a 3-element root fiber with a singleton fiber
        let t = LevelTree::new(vec![1, 3, 3], vec![vec![0, 0, 0], vec![0, 1, 2]]).unwrap();
        let orders = vec![vec![vec![0, 1, 2]]];
        assert_eq!(
            validate_disk(&t, &orders, true),
            Err(DiskViolation::SingularMismatch {
                level: 1,
                vertex: 1,
                singular: true,
                endpoint: false
            })
        );
    }

    #[test]
    fn renumbering_follows_fiber_order() {
        let t = LevelTree::new(vec![1, 3, 4], vec![vec![0, 0, 0], vec![1, 1, 0, 2]]).unwrap();
        let orders = vec![vec![vec![2, 1, 0]], vec![vec![2], vec![0, 1], vec![3]]];
        let d = Disk::new(&t, &orders).unwrap();
        assert_eq!(d.fiber_sizes(), vec![vec![3], vec![1, 2, 1]]);
    }

    #[test]
    fn small_enumeration() {
        assert_eq!(enumerate_disks(2, 3).len(), 3);
        for d in enumerate_disks(3, 3) {
            assert_eq!(phi_inverse_obj(&phi_obj(&d)).unwrap(), d);
        }
    }

    #[test]
    fn identity_morphisms() {
        for d in enumerate_disks(3, 3) {
            let homs = enumerate_disk_morphisms(&d, &d);
            assert!(homs.contains(&DiskMor::identity(&d)));
            assert_eq!(phi_mor(&DiskMor::identity(&d)), ITreeMor::identity(&phi_obj(&d)));
        }
    }
}
