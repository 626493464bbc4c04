//! Finite-degree forests stored as level sets with parent maps.
//!
//! Levels beyond the stored depth are implicit copies of the last level with
//! identity parent maps. Constructors trim trailing bijective levels, so the
//! stored depth always equals the degree.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawLevelTree", into = "RawLevelTree")]
pub struct LevelTree {
    sizes: Vec<usize>,
    parents: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct RawLevelTree {
    pub levels: Vec<usize>,
    pub parents: Vec<Vec<usize>>,
}

impl TryFrom<RawLevelTree> for LevelTree {
    type Error = Error;
    fn try_from(r: RawLevelTree) -> Result<Self> {
        LevelTree::new(r.levels, r.parents)
    }
}

impl From<LevelTree> for RawLevelTree {
    fn from(t: LevelTree) -> Self {
        RawLevelTree {
            levels: t.sizes,
            parents: t.parents,
        }
    }
}

/// Unordered isomorphism invariant of a rooted tree truncated at some depth.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape(pub Vec<Shape>);

fn is_bijection(n_src: usize, n_dst: usize, map: &[usize]) -> bool {
    if n_src != n_dst {
        return false;
    }
    let mut seen = vec![false; n_dst];
    for &v in map {
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// Degree of untrimmed level data: the least `n` such that every parent map
/// at or above level `n` is a bijection.
pub fn raw_degree(sizes: &[usize], parents: &[Vec<usize>]) -> usize {
    let mut d = parents.len();
    while d > 0 && is_bijection(sizes[d], sizes[d - 1], &parents[d - 1]) {
        d -= 1;
    }
    d
}

impl LevelTree {
    /// Validate and trim. `parents[n][x]` is the parent in level `n` of vertex
    /// `x` of level `n + 1`.
    pub fn new(sizes: Vec<usize>, parents: Vec<Vec<usize>>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidTree("at least one level is required".into()));
        }
        if parents.len() + 1 != sizes.len() {
            return Err(Error::InvalidTree(format!(
                "{} levels need {} parent maps, got {}",
                sizes.len(),
                sizes.len() - 1,
                parents.len()
            )));
        }
        for (n, p) in parents.iter().enumerate() {
            if p.len() != sizes[n + 1] {
                return Err(Error::InvalidTree(format!(
                    "parent map {n} has {} entries for {} vertices",
                    p.len(),
                    sizes[n + 1]
                )));
            }
            if let Some(&bad) = p.iter().find(|&&v| v >= sizes[n]) {
                return Err(Error::InvalidTree(format!(
                    "parent {bad} out of range at level {n}"
                )));
            }
        }
        let mut t = LevelTree { sizes, parents };
        t.trim();
        Ok(t)
    }

    fn trim(&mut self) {
        let d = raw_degree(&self.sizes, &self.parents);
        self.sizes.truncate(d + 1);
        self.parents.truncate(d);
    }

    /// The degree-0 tree with one vertex per level.
    pub fn chain() -> Self {
        LevelTree {
            sizes: vec![1],
            parents: vec![],
        }
    }

    pub fn empty_forest() -> Self {
        LevelTree {
            sizes: vec![0],
            parents: vec![],
        }
    }

    pub fn degree(&self) -> usize {
        self.parents.len()
    }

    pub fn is_tree(&self) -> bool {
        self.sizes[0] == 1
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn parent_maps(&self) -> &[Vec<usize>] {
        &self.parents
    }

    /// Size of level `n`, extended past the degree.
    pub fn level_size(&self, n: usize) -> usize {
        self.sizes[n.min(self.degree())]
    }

    /// Parent of vertex `x` of level `n + 1`.
    pub fn parent(&self, n: usize, x: usize) -> usize {
        if n < self.degree() {
            self.parents[n][x]
        } else {
            x
        }
    }

    /// Iterated parent `p_{n,m}` from level `n + m` down to level `n`.
    pub fn ancestor(&self, n: usize, m: usize, mut x: usize) -> usize {
        for k in (n..n + m).rev() {
            x = self.parent(k, x);
        }
        x
    }

    /// Vertices of level `n + 1` over `y` in level `n`, in index order.
    pub fn children(&self, n: usize, y: usize) -> Vec<usize> {
        if n < self.degree() {
            (0..self.sizes[n + 1])
                .filter(|&x| self.parents[n][x] == y)
                .collect()
        } else {
            vec![y]
        }
    }

    /// Total number of stored vertices.
    pub fn vertex_count(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Whether parent maps are weakly increasing, so that every fiber is an
    /// index interval.
    pub fn has_monotone_parents(&self) -> bool {
        self.parents.iter().all(|p| p.windows(2).all(|w| w[0] <= w[1]))
    }

    /// The sub-tree at `x` in level `n`, together with inclusion maps into
    /// `self` for levels `0..=depth` of the result (extended as needed).
    pub fn restrict_with_inclusion(
        &self,
        n: usize,
        x: usize,
        depth: usize,
    ) -> Result<(LevelTree, Vec<Vec<usize>>)> {
        if x >= self.level_size(n) {
            return Err(Error::OutOfRange {
                what: "vertex",
                value: x as i64,
                max: self.level_size(n) as i64 - 1,
            });
        }
        let levels_needed = depth.max(self.degree().saturating_sub(n));
        let mut incl: Vec<Vec<usize>> = vec![vec![x]];
        for k in 0..levels_needed {
            let prev = &incl[k];
            let mut next = Vec::new();
            // keep index order of the ambient level
            let lvl = n + k;
            if lvl < self.degree() {
                let mut pos = vec![usize::MAX; self.sizes[lvl]];
                for (i, &v) in prev.iter().enumerate() {
                    pos[v] = i;
                }
                for (v, &p) in self.parents[lvl].iter().enumerate() {
                    if pos[p] != usize::MAX {
                        next.push(v);
                    }
                }
            } else {
                next = prev.clone();
            }
            incl.push(next);
        }
        let sizes: Vec<usize> = incl.iter().map(|l| l.len()).collect();
        let mut parents = Vec::new();
        for k in 0..levels_needed {
            let lvl = n + k;
            let idx: BTreeMap<usize, usize> =
                incl[k].iter().enumerate().map(|(i, &v)| (v, i)).collect();
            parents.push(
                incl[k + 1]
                    .iter()
                    .map(|&v| idx[&self.parent(lvl, v)])
                    .collect(),
            );
        }
        let tree = LevelTree::new(sizes, parents)?;
        incl.truncate(depth.max(tree.degree()) + 1);
        Ok((tree, incl))
    }

    /// The sub-tree of descendants of `x` in level `n`.
    pub fn restrict(&self, n: usize, x: usize) -> Result<LevelTree> {
        Ok(self.restrict_with_inclusion(n, x, 0)?.0)
    }

    /// Level-wise disjoint union; vertices of earlier summands come first.
    pub fn coproduct(parts: &[LevelTree]) -> LevelTree {
        let depth = parts.iter().map(|t| t.degree()).max().unwrap_or(0);
        let mut sizes = vec![0usize; depth + 1];
        let mut parents = vec![Vec::new(); depth];
        let mut offsets = vec![0usize; depth + 1];
        for t in parts {
            for k in 0..=depth {
                if k < depth {
                    parents[k].extend((0..t.level_size(k + 1)).map(|v| offsets[k] + t.parent(k, v)));
                }
            }
            for k in 0..=depth {
                sizes[k] += t.level_size(k);
                offsets[k] += t.level_size(k);
            }
        }
        let mut out = LevelTree { sizes, parents };
        out.trim();
        out
    }

    /// A new root under every root of the forest.
    pub fn suspend(forest: &LevelTree) -> LevelTree {
        let mut sizes = vec![1];
        sizes.extend_from_slice(&forest.sizes);
        let mut parents = vec![vec![0; forest.sizes[0]]];
        parents.extend(forest.parents.iter().cloned());
        let mut out = LevelTree { sizes, parents };
        out.trim();
        out
    }

    fn shape_at(&self, lvl: usize, x: usize, depth: usize) -> Shape {
        if lvl >= depth {
            return Shape(Vec::new());
        }
        let mut kids: Vec<Shape> = self
            .children(lvl, x)
            .into_iter()
            .map(|c| self.shape_at(lvl + 1, c, depth))
            .collect();
        kids.sort();
        Shape(kids)
    }

    /// Sorted root shapes truncated at `depth`.
    pub fn shape(&self, depth: usize) -> Vec<Shape> {
        let mut roots: Vec<Shape> = (0..self.sizes[0]).map(|r| self.shape_at(0, r, depth)).collect();
        roots.sort();
        roots
    }

    pub fn is_isomorphic(&self, other: &LevelTree) -> bool {
        if self.degree() != other.degree() {
            return false;
        }
        let d = self.degree();
        self.shape(d) == other.shape(d)
    }

    pub fn to_dot(&self, label: impl Fn(usize, usize) -> String) -> String {
        let mut s = String::from("digraph tree {\n  rankdir=BT;\n  node [shape=box];\n");
        for (n, &size) in self.sizes.iter().enumerate() {
            s.push_str("  { rank=same;");
            for x in 0..size {
                s.push_str(&format!(" v{n}_{x};"));
            }
            s.push_str(" }\n");
            for x in 0..size {
                s.push_str(&format!("  v{n}_{x} [label=\"{}\"];\n", label(n, x)));
            }
            for x in 1..size {
                s.push_str(&format!("  v{n}_{} -> v{n}_{x} [style=invis];\n", x - 1));
            }
        }
        for (n, p) in self.parents.iter().enumerate() {
            for (x, &y) in p.iter().enumerate() {
                s.push_str(&format!("  v{}_{x} -> v{n}_{y};\n", n + 1));
            }
        }
        s.push_str("}\n");
        s
    }
}

/// A level-preserving map of forests commuting with parents. `maps[n]` is
/// stored for `n ≤ max(dom.degree, cod.degree)`; deeper levels repeat the
/// last map.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TreeMap {
    dom: LevelTree,
    cod: LevelTree,
    maps: Vec<Vec<usize>>,
}

impl TreeMap {
    pub fn new(dom: LevelTree, cod: LevelTree, mut maps: Vec<Vec<usize>>) -> Result<Self> {
        let depth = dom.degree().max(cod.degree());
        if maps.len() < depth + 1 {
            return Err(Error::InvalidMorphism(format!(
                "need level maps up to level {depth}"
            )));
        }
        for n in depth + 1..maps.len() {
            if maps[n] != maps[depth] {
                return Err(Error::InvalidMorphism(format!(
                    "level {n} differs from level {depth} past the degree"
                )));
            }
        }
        maps.truncate(depth + 1);
        for (n, m) in maps.iter().enumerate() {
            if m.len() != dom.level_size(n) {
                return Err(Error::InvalidMorphism(format!("level {n} map has wrong length")));
            }
            if m.iter().any(|&v| v >= cod.level_size(n)) {
                return Err(Error::InvalidMorphism(format!("level {n} image out of range")));
            }
        }
        for n in 0..depth {
            for x in 0..dom.level_size(n + 1) {
                if cod.parent(n, maps[n + 1][x]) != maps[n][dom.parent(n, x)] {
                    return Err(Error::InvalidMorphism(format!(
                        "does not commute with parents at level {} vertex {x}",
                        n + 1
                    )));
                }
            }
        }
        Ok(TreeMap { dom, cod, maps })
    }

    pub fn identity(t: &LevelTree) -> Self {
        TreeMap {
            dom: t.clone(),
            cod: t.clone(),
            maps: (0..=t.degree()).map(|n| (0..t.level_size(n)).collect()).collect(),
        }
    }

    pub fn dom(&self) -> &LevelTree {
        &self.dom
    }

    pub fn cod(&self) -> &LevelTree {
        &self.cod
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    pub fn apply(&self, n: usize, x: usize) -> usize {
        self.maps[n.min(self.maps.len() - 1)][x]
    }

    /// `g ∘ f` with `g = self`.
    pub fn compose(&self, f: &TreeMap) -> Result<TreeMap> {
        if f.cod != self.dom {
            return Err(Error::Mismatch("tree map codomain/domain".into()));
        }
        let depth = f.dom.degree().max(self.cod.degree()).max(self.dom.degree());
        let maps = (0..=depth)
            .map(|n| {
                (0..f.dom.level_size(n))
                    .map(|x| self.apply(n, f.apply(n, x)))
                    .collect()
            })
            .collect();
        TreeMap::new(f.dom.clone(), self.cod.clone(), maps)
    }

    /// The induced map between the sub-trees at `x` and at its image.
    pub fn restrict(&self, n: usize, x: usize) -> Result<TreeMap> {
        let (d0, _) = self.dom.restrict_with_inclusion(n, x, 0)?;
        let (c0, _) = self.cod.restrict_with_inclusion(n, self.apply(n, x), 0)?;
        let depth = d0.degree().max(c0.degree());
        let (dom, di) = self.dom.restrict_with_inclusion(n, x, depth)?;
        let (cod, ci) = self.cod.restrict_with_inclusion(n, self.apply(n, x), depth)?;
        let maps = (0..=depth)
            .map(|k| {
                let inv: BTreeMap<usize, usize> =
                    ci[k].iter().enumerate().map(|(i, &v)| (v, i)).collect();
                di[k]
                    .iter()
                    .map(|&v| inv[&self.apply(n + k, v)])
                    .collect()
            })
            .collect();
        TreeMap::new(dom, cod, maps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The level structure of the labeled disk example: sizes 1, 3, 6, 9, 10.
    pub(crate) fn figure_tree() -> LevelTree {
        LevelTree::new(
            vec![1, 3, 6, 9, 10],
            vec![
                vec![0, 0, 0],
                vec![0, 1, 1, 1, 1, 2],
                vec![0, 1, 2, 2, 3, 3, 3, 4, 5],
                vec![0, 1, 2, 3, 4, 5, 5, 6, 7, 8],
            ],
        )
        .unwrap()
    }

    #[test]
    fn figure_degree() {
        let t = figure_tree();
        assert_eq!(t.degree(), 4);
        let r = t.restrict(1, 1).unwrap();
        assert_eq!(r.sizes(), &[1, 4, 7, 8]);
        assert_eq!(r.degree(), 3);
    }

    #[test]
    fn trimming() {
        let t = LevelTree::new(vec![1, 2, 2, 2], vec![vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(t.degree(), 1);
        assert_eq!(t.sizes(), &[1, 2]);
        assert_eq!(LevelTree::new(vec![1, 1], vec![vec![0]]).unwrap(), LevelTree::chain());
        assert!(LevelTree::new(vec![1, 2], vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn suspension_and_coproduct() {
        assert_eq!(LevelTree::suspend(&LevelTree::new(vec![1], vec![]).unwrap()), LevelTree::chain());
        let s = LevelTree::suspend(&LevelTree::empty_forest());
        assert_eq!(s.sizes(), &[1, 0]);
        assert_eq!(s.degree(), 1);
        let two = LevelTree::coproduct(&[LevelTree::chain(), LevelTree::chain()]);
        assert_eq!(two.sizes(), &[2]);
        let star = LevelTree::suspend(&two);
        assert_eq!(star.sizes(), &[1, 2]);
        assert_eq!(star.degree(), 1);
    }

    #[test]
    fn restrict_at_root_is_identity() {
        let t = figure_tree();
        assert_eq!(t.restrict(0, 0).unwrap(), t);
    }

    #[test]
    fn isomorphism_ignores_order() {
        let a = LevelTree::new(vec![1, 2, 3], vec![vec![0, 0], vec![0, 1, 1]]).unwrap();
        let b = LevelTree::new(vec![1, 2, 3], vec![vec![0, 0], vec![1, 0, 0]]).unwrap();
        let c = LevelTree::new(vec![1, 2, 3], vec![vec![0, 0], vec![0, 0, 0]]).unwrap();
        assert!(a.is_isomorphic(&b));
        assert!(!a.is_isomorphic(&c));
    }

    #[test]
    fn tree_map_restriction() {
        let t = figure_tree();
        let id = TreeMap::identity(&t);
        let r = id.restrict(1, 1).unwrap();
        assert_eq!(r, TreeMap::identity(&t.restrict(1, 1).unwrap()));
        assert_eq!(id.compose(&id).unwrap(), id);
    }
}
