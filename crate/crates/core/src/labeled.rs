//! Trees labeled in I₊ or Δ₊, the constrained and cropped conditions, the
//! categories tI₊ and tΔ₊, the duality `Con` between them and the
//! equivalences `Ξ_I : tI₊ → iDisk`, `Ξ_Δ : tΔ₊ → iΔ₊`.
//!
//! The fiber over a vertex is ordered by vertex index, and its `k`-th member
//! corresponds to the `k`-th element of `𝒰F(y)`, so `λ` is positional.
//! Labels past the stored depth are the trivial label of the flavor.

use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::forest::{LevelTree, TreeMap};
use crate::itree::{Flavor, ITreeMor, ITreeObj};
use crate::ordinal::{interval_maps, ord_maps, vee_map, vee_obj, wedge_map, wedge_obj, IntervalMap, OrdMap, Ordinal};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawLabeled", into = "RawLabeled")]
pub struct LabeledTree {
    flavor: Flavor,
    tree: LevelTree,
    labels: Vec<Vec<Ordinal>>,
}

#[derive(Serialize, Deserialize)]
struct RawLabeled {
    flavor: Flavor,
    levels: Vec<usize>,
    parents: Vec<Vec<usize>>,
    labels: Vec<Vec<Ordinal>>,
}

impl TryFrom<RawLabeled> for LabeledTree {
    type Error = Error;
    fn try_from(r: RawLabeled) -> Result<Self> {
        LabeledTree::new(r.flavor, LevelTree::new(r.levels, r.parents)?, r.labels)
    }
}

impl From<LabeledTree> for RawLabeled {
    fn from(t: LabeledTree) -> Self {
        RawLabeled {
            flavor: t.flavor,
            levels: t.tree.sizes().to_vec(),
            parents: t.tree.parent_maps().to_vec(),
            labels: t.labels,
        }
    }
}

fn fiber(tree: &LevelTree, n: usize, y: usize) -> Vec<usize> {
    tree.children(n, y)
}

impl LabeledTree {
    /// Labels may extend past the stored depth of the tree only with
    /// trivial values, which are then dropped.
    pub fn new(flavor: Flavor, tree: LevelTree, mut labels: Vec<Vec<Ordinal>>) -> Result<Self> {
        let depth = tree.sizes().len();
        let trivial = flavor.trivial_root();
        if labels.len() < depth {
            return Err(Error::InvalidTree(format!("{depth} label levels required")));
        }
        for (n, l) in labels.iter().enumerate() {
            if l.len() != tree.level_size(n) {
                return Err(Error::InvalidTree(format!("label level {n} has the wrong length")));
            }
            if n >= depth && l.iter().any(|&c| c != trivial) {
                return Err(Error::InvalidTree(format!(
                    "non-trivial label at level {n}, past the degree"
                )));
            }
            if flavor == Flavor::Interval && l.iter().any(|c| c.is_empty()) {
                return Err(Error::InvalidTree("[-1] is not an interval".into()));
            }
        }
        labels.truncate(depth);
        Ok(LabeledTree { flavor, tree, labels })
    }

    /// The degree-0 tree with every label trivial.
    pub fn trivial(flavor: Flavor) -> Self {
        LabeledTree {
            flavor,
            tree: LevelTree::chain(),
            labels: vec![vec![flavor.trivial_root()]],
        }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn tree(&self) -> &LevelTree {
        &self.tree
    }

    pub fn labels(&self) -> &[Vec<Ordinal>] {
        &self.labels
    }

    pub fn degree(&self) -> usize {
        self.tree.degree()
    }

    pub fn label(&self, n: usize, x: usize) -> Ordinal {
        self.labels
            .get(n)
            .map(|l| l[x])
            .unwrap_or(self.flavor.trivial_root())
    }

    pub fn root_label(&self) -> Ordinal {
        self.labels[0][0]
    }

    /// `|𝒰F_n(x)|`.
    pub fn element_count(&self, n: usize, x: usize) -> usize {
        self.flavor.arity(self.label(n, x))
    }

    /// `λ_n x = (p x, ξ)` for `x` in level `n + 1`.
    pub fn lambda(&self, n: usize, x: usize) -> (usize, usize) {
        let y = self.tree.parent(n, x);
        let xi = fiber(&self.tree, n, y)
            .iter()
            .position(|&v| v == x)
            .expect("a vertex lies in its parent's fiber");
        (y, xi)
    }

    /// `(A⟨x⟩, F⟨x⟩)`.
    pub fn restrict(&self, n: usize, x: usize) -> Result<LabeledTree> {
        let (tree, incl) = self.tree.restrict_with_inclusion(n, x, 0)?;
        let labels = incl
            .iter()
            .enumerate()
            .map(|(k, l)| l.iter().map(|&v| self.label(n + k, v)).collect())
            .collect();
        LabeledTree::new(self.flavor, tree, labels)
    }

    /// The suspension of the coproduct of `parts` with root label `c`.
    pub fn suspend(parts: &[LabeledTree], c: Ordinal) -> Result<LabeledTree> {
        let flavor = parts.first().map(|p| p.flavor).unwrap_or(Flavor::Interval);
        if parts.iter().any(|p| p.flavor != flavor || !p.tree.is_tree()) {
            return Err(Error::InvalidTree("suspension needs trees of one flavor".into()));
        }
        let trees: Vec<LevelTree> = parts.iter().map(|p| p.tree.clone()).collect();
        let tree = LevelTree::suspend(&LevelTree::coproduct(&trees));
        let depth = tree.sizes().len();
        let mut labels = vec![vec![c]];
        for n in 1..depth {
            labels.push(parts.iter().flat_map(|p| (0..p.tree.level_size(n - 1)).map(move |v| p.label(n - 1, v))).collect());
        }
        LabeledTree::new(flavor, tree, labels)
    }

    /// Renumber every level breadth-first, keeping fiber order.
    pub fn canonical(&self) -> LabeledTree {
        let depth = self.tree.sizes().len();
        let mut order: Vec<Vec<usize>> = vec![vec![0]];
        for n in 0..depth - 1 {
            let next = order[n].iter().flat_map(|&y| fiber(&self.tree, n, y)).collect();
            order.push(next);
        }
        let mut parents = Vec::new();
        for n in 0..depth - 1 {
            let mut p = Vec::new();
            for (i, &y) in order[n].iter().enumerate() {
                p.extend(std::iter::repeat_n(i, fiber(&self.tree, n, y).len()));
            }
            parents.push(p);
        }
        let sizes = order.iter().map(|l| l.len()).collect();
        let labels = order
            .iter()
            .enumerate()
            .map(|(n, l)| l.iter().map(|&v| self.label(n, v)).collect())
            .collect();
        let tree = LevelTree::new(sizes, parents).expect("renumbered tree");
        LabeledTree::new(self.flavor, tree, labels).expect("renumbered labels")
    }

    pub fn to_dot(&self) -> String {
        self.tree.to_dot(|n, x| self.label(n, x).to_string())
    }
}

/// A failed constrained or cropped condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum LabelViolation {
    #[error("the underlying forest is not a tree")]
    NotATree,
    #[error("vertex ({level},{vertex}) has {children} children, but its label has {elements} elements")]
    FiberSize {
        level: usize,
        vertex: usize,
        children: usize,
        elements: usize,
    },
    #[error("vertex ({level},{vertex}) is an end element with a label of {elements} elements")]
    EndNotSingleton { level: usize, vertex: usize, elements: usize },
    #[error("vertex ({level},{vertex}) is interior but its label is a singleton")]
    SingletonNotEnd { level: usize, vertex: usize },
}

/// The fiber law `|A_{n+1} over y| = |𝒰F_n(y)|` at every vertex.
pub fn validate_constrained(t: &LabeledTree) -> Vec<LabelViolation> {
    let mut out = Vec::new();
    if !t.tree.is_tree() {
        out.push(LabelViolation::NotATree);
        return out;
    }
    for n in 0..t.tree.sizes().len() {
        for y in 0..t.tree.level_size(n) {
            let children = fiber(&t.tree, n, y).len();
            let elements = t.element_count(n, y);
            if children != elements {
                out.push(LabelViolation::FiberSize {
                    level: n,
                    vertex: y,
                    children,
                    elements,
                });
            }
        }
    }
    out
}

/// Constrained, and end elements are exactly the vertices with singleton
/// `𝒰`-labels. A fiber of one vertex makes that vertex an end element.
pub fn validate_cropped(t: &LabeledTree) -> Vec<LabelViolation> {
    let mut out = validate_constrained(t);
    if !out.is_empty() {
        return out;
    }
    for n in 0..t.tree.degree() {
        for x in 0..t.tree.level_size(n + 1) {
            let (y, xi) = t.lambda(n, x);
            let end = xi == 0 || xi + 1 == t.element_count(n, y);
            let elements = t.element_count(n + 1, x);
            if end && elements != 1 {
                out.push(LabelViolation::EndNotSingleton {
                    level: n + 1,
                    vertex: x,
                    elements,
                });
            } else if !end && elements == 1 {
                out.push(LabelViolation::SingletonNotEnd { level: n + 1, vertex: x });
            }
        }
    }
    out
}

fn first_violation(v: Vec<LabelViolation>) -> Result<()> {
    match v.into_iter().next() {
        None => Ok(()),
        Some(e) => Err(Error::InvalidTree(e.to_string())),
    }
}

/// A labeled tree satisfying the constrained condition, canonically
/// numbered.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "LabeledTree", into = "LabeledTree")]
pub struct ConstrainedTree(LabeledTree);

impl TryFrom<LabeledTree> for ConstrainedTree {
    type Error = Error;
    fn try_from(t: LabeledTree) -> Result<Self> {
        first_violation(validate_constrained(&t))?;
        Ok(ConstrainedTree(t.canonical()))
    }
}

impl From<ConstrainedTree> for LabeledTree {
    fn from(t: ConstrainedTree) -> Self {
        t.0
    }
}

impl ConstrainedTree {
    pub fn underlying(&self) -> &LabeledTree {
        &self.0
    }
}

/// An object of tI₊ (interval flavor) or tΔ₊ (ordinal flavor).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "LabeledTree", into = "LabeledTree")]
pub struct CroppedTree(LabeledTree);

impl TryFrom<LabeledTree> for CroppedTree {
    type Error = Error;
    fn try_from(t: LabeledTree) -> Result<Self> {
        CroppedTree::new(t)
    }
}

impl From<CroppedTree> for LabeledTree {
    fn from(t: CroppedTree) -> Self {
        t.0
    }
}

impl CroppedTree {
    pub fn new(t: LabeledTree) -> Result<CroppedTree> {
        first_violation(validate_cropped(&t))?;
        Ok(CroppedTree(t.canonical()))
    }

    pub fn trivial(flavor: Flavor) -> CroppedTree {
        CroppedTree(LabeledTree::trivial(flavor))
    }

    pub fn underlying(&self) -> &LabeledTree {
        &self.0
    }

    pub fn flavor(&self) -> Flavor {
        self.0.flavor
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.root_label() == self.0.flavor.trivial_root()
    }

    pub fn restrict(&self, n: usize, x: usize) -> Result<CroppedTree> {
        Ok(CroppedTree(self.0.restrict(n, x)?))
    }
}

/// Morphisms of tI₊ are forward (`α : F ⇒ G f`); those of tΔ₊ are
/// op-morphisms (`α : G f ⇒ F`) and run from the tree map's codomain to its
/// domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Op,
}

impl Direction {
    pub fn of(flavor: Flavor) -> Direction {
        match flavor {
            Flavor::Interval => Direction::Forward,
            Flavor::Ordinal => Direction::Op,
        }
    }
}

/// A constrained morphism of cropped trees, stored with its tree map
/// `f : dom → cod` and one label map per vertex of `dom`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawLabeledMor", into = "RawLabeledMor")]
pub struct LabeledTreeMor {
    dom: CroppedTree,
    cod: CroppedTree,
    map: TreeMap,
    alphas: Vec<Vec<OrdMap>>,
}

#[derive(Serialize, Deserialize)]
struct RawLabeledMor {
    direction: Direction,
    dom: CroppedTree,
    cod: CroppedTree,
    alphas: Vec<Vec<OrdMap>>,
}

impl TryFrom<RawLabeledMor> for LabeledTreeMor {
    type Error = Error;
    fn try_from(r: RawLabeledMor) -> Result<Self> {
        if r.direction != Direction::of(r.dom.flavor()) {
            return Err(Error::InvalidMorphism("direction does not match the flavor".into()));
        }
        LabeledTreeMor::from_alphas(r.dom, r.cod, r.alphas)
    }
}

impl From<LabeledTreeMor> for RawLabeledMor {
    fn from(m: LabeledTreeMor) -> Self {
        RawLabeledMor {
            direction: m.direction(),
            dom: m.dom,
            cod: m.cod,
            alphas: m.alphas,
        }
    }
}

fn label_levels(a: &CroppedTree, b: &CroppedTree) -> usize {
    a.0.tree.sizes().len().max(b.0.tree.sizes().len())
}

/// Where `λ`-position `xi` of a fiber lands under a label map.
fn transport(direction: Direction, alpha: &OrdMap, xi: usize) -> usize {
    match direction {
        Direction::Forward => alpha.apply(xi),
        Direction::Op => wedge_map(alpha).apply(xi),
    }
}

impl LabeledTreeMor {
    /// Build from label maps; the tree map is forced by the constrained
    /// condition. `alphas[n][y]` is given for every level below the larger
    /// stored depth.
    pub fn from_alphas(dom: CroppedTree, cod: CroppedTree, alphas: Vec<Vec<OrdMap>>) -> Result<Self> {
        if dom.flavor() != cod.flavor() {
            return Err(Error::InvalidMorphism("mixed flavors".into()));
        }
        let dir = Direction::of(dom.flavor());
        let (a, b) = (&dom.0, &cod.0);
        let levels = label_levels(&dom, &cod);
        if alphas.len() != levels {
            return Err(Error::InvalidMorphism(format!("label maps needed for {levels} levels")));
        }
        let mut maps: Vec<Vec<usize>> = vec![vec![0]];
        for n in 0..levels {
            if alphas[n].len() != a.tree.level_size(n) {
                return Err(Error::InvalidMorphism(format!("level {n} label maps have the wrong length")));
            }
            let mut next = vec![0; a.tree.level_size(n + 1)];
            for y in 0..a.tree.level_size(n) {
                let fy = maps[n][y];
                let alpha = &alphas[n][y];
                let (from, to) = match dir {
                    Direction::Forward => (a.label(n, y), b.label(n, fy)),
                    Direction::Op => (b.label(n, fy), a.label(n, y)),
                };
                if alpha.dom() != from || alpha.cod() != to {
                    return Err(Error::InvalidMorphism(format!("label map at ({n},{y}) is mistyped")));
                }
                if dir == Direction::Forward {
                    IntervalMap::new(alpha.clone())?;
                }
                let targets = fiber(&b.tree, n, fy);
                for (xi, x) in fiber(&a.tree, n, y).into_iter().enumerate() {
                    next[x] = targets[transport(dir, alpha, xi)];
                }
            }
            maps.push(next);
        }
        maps.truncate(levels);
        let map = TreeMap::new(a.tree.clone(), b.tree.clone(), maps)?;
        Ok(LabeledTreeMor { dom, cod, map, alphas })
    }

    pub fn identity(t: &CroppedTree) -> LabeledTreeMor {
        let alphas = t.0.labels.iter().map(|l| l.iter().map(|&c| OrdMap::identity(c)).collect()).collect();
        LabeledTreeMor::from_alphas(t.clone(), t.clone(), alphas).expect("identity")
    }

    pub fn direction(&self) -> Direction {
        Direction::of(self.dom.flavor())
    }

    /// Domain of the tree map.
    pub fn dom(&self) -> &CroppedTree {
        &self.dom
    }

    /// Codomain of the tree map.
    pub fn cod(&self) -> &CroppedTree {
        &self.cod
    }

    /// Categorical source: the tree map's domain for forward morphisms, its
    /// codomain for op-morphisms.
    pub fn source(&self) -> &CroppedTree {
        match self.direction() {
            Direction::Forward => &self.dom,
            Direction::Op => &self.cod,
        }
    }

    pub fn target(&self) -> &CroppedTree {
        match self.direction() {
            Direction::Forward => &self.cod,
            Direction::Op => &self.dom,
        }
    }

    pub fn tree_map(&self) -> &TreeMap {
        &self.map
    }

    pub fn alpha(&self, n: usize, y: usize) -> OrdMap {
        match self.alphas.get(n) {
            Some(l) => l[y].clone(),
            None => OrdMap::identity(self.dom.flavor().trivial_root()),
        }
    }

    pub fn alphas(&self) -> &[Vec<OrdMap>] {
        &self.alphas
    }

    /// Composite along tree maps: `self` then `next`, with
    /// `next.dom() == self.cod()`.
    pub fn then(&self, next: &LabeledTreeMor) -> Result<LabeledTreeMor> {
        if next.dom != self.cod {
            return Err(Error::Mismatch("labeled morphism codomain/domain".into()));
        }
        let levels = label_levels(&self.dom, &next.cod).max(self.alphas.len());
        let alphas = (0..levels)
            .map(|n| {
                (0..self.dom.0.tree.level_size(n))
                    .map(|y| {
                        let (a, b) = (self.alpha(n, y), next.alpha(n, self.map.apply(n, y)));
                        match self.direction() {
                            Direction::Forward => b.compose(&a),
                            Direction::Op => a.compose(&b),
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let depth = label_levels(&self.dom, &next.cod);
        LabeledTreeMor::from_alphas(self.dom.clone(), next.cod.clone(), alphas[..depth].to_vec())
    }
}

/// All constrained morphisms with tree maps `a → b`, breadth-first.
pub fn enumerate_labeled_morphisms(a: &CroppedTree, b: &CroppedTree) -> Vec<LabeledTreeMor> {
    if a.flavor() != b.flavor() {
        return Vec::new();
    }
    let dir = Direction::of(a.flavor());
    let levels = label_levels(a, b);
    let vertices: Vec<(usize, usize)> = (0..levels)
        .flat_map(|n| (0..a.0.tree.level_size(n)).map(move |y| (n, y)))
        .collect();
    let mut maps: Vec<Vec<usize>> = (0..=levels).map(|n| vec![usize::MAX; a.0.tree.level_size(n)]).collect();
    maps[0][0] = 0;
    let mut alphas: Vec<Vec<Option<OrdMap>>> = (0..levels).map(|n| vec![None; a.0.tree.level_size(n)]).collect();
    let mut out = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn go(
        k: usize,
        vertices: &[(usize, usize)],
        a: &CroppedTree,
        b: &CroppedTree,
        dir: Direction,
        maps: &mut Vec<Vec<usize>>,
        alphas: &mut Vec<Vec<Option<OrdMap>>>,
        out: &mut Vec<LabeledTreeMor>,
    ) {
        if k == vertices.len() {
            let chosen = alphas
                .iter()
                .map(|l| l.iter().map(|m| m.clone().expect("assigned")).collect())
                .collect();
            out.push(LabeledTreeMor::from_alphas(a.clone(), b.clone(), chosen).expect("constrained by construction"));
            return;
        }
        let (n, y) = vertices[k];
        let fy = maps[n][y];
        let cands: Vec<OrdMap> = match dir {
            Direction::Forward => interval_maps(a.0.label(n, y), b.0.label(n, fy))
                .into_iter()
                .map(IntervalMap::into_underlying)
                .collect(),
            Direction::Op => ord_maps(b.0.label(n, fy), a.0.label(n, y)),
        };
        let kids = fiber(&a.0.tree, n, y);
        let targets = fiber(&b.0.tree, n, fy);
        for alpha in cands {
            for (xi, &x) in kids.iter().enumerate() {
                maps[n + 1][x] = targets[transport(dir, &alpha, xi)];
            }
            alphas[n][y] = Some(alpha);
            go(k + 1, vertices, a, b, dir, maps, alphas, out);
        }
        alphas[n][y] = None;
    }
    go(0, &vertices, a, b, dir, &mut maps, &mut alphas, &mut out);
    out
}

/// `Con` of the ordinal/interval duality: every label dualized, the tree
/// and `λ` unchanged.
pub fn con_dualize(t: &CroppedTree) -> CroppedTree {
    let lt = &t.0;
    let flavor = lt.flavor.opposite();
    let labels = lt
        .labels
        .iter()
        .map(|l| {
            l.iter()
                .map(|&c| match lt.flavor {
                    Flavor::Interval => vee_obj(c).expect("interval labels are non-empty"),
                    Flavor::Ordinal => wedge_obj(c),
                })
                .collect()
        })
        .collect();
    CroppedTree(LabeledTree {
        flavor,
        tree: lt.tree.clone(),
        labels,
    })
}

/// `Con` on morphisms: label maps dualized, direction reversed.
pub fn con_dualize_mor(m: &LabeledTreeMor) -> LabeledTreeMor {
    let alphas = m
        .alphas
        .iter()
        .map(|l| {
            l.iter()
                .map(|a| match m.direction() {
                    Direction::Forward => vee_map(&IntervalMap::new(a.clone()).expect("interval map")),
                    Direction::Op => wedge_map(a).into_underlying(),
                })
                .collect()
        })
        .collect();
    LabeledTreeMor::from_alphas(con_dualize(&m.dom), con_dualize(&m.cod), alphas).expect("dual of a constrained morphism")
}

fn xi_at(t: &LabeledTree, n: usize, y: usize) -> ITreeObj {
    let c = t.label(n, y);
    if c == t.flavor.trivial_root() {
        return ITreeObj::trivial(t.flavor);
    }
    let children = fiber(&t.tree, n, y).into_iter().map(|x| xi_at(t, n + 1, x)).collect();
    ITreeObj::node(t.flavor, c, children).expect("cropped trees give valid objects")
}

/// `Ξ_I` or `Ξ_Δ` on objects, by flavor.
pub fn xi(t: &CroppedTree) -> ITreeObj {
    xi_at(&t.0, 0, 0)
}

pub fn xi_interval(t: &CroppedTree) -> Result<ITreeObj> {
    match t.flavor() {
        Flavor::Interval => Ok(xi(t)),
        Flavor::Ordinal => Err(Error::Mismatch("Ξ_I expects an interval-labeled tree".into())),
    }
}

pub fn xi_ordinal(t: &CroppedTree) -> Result<ITreeObj> {
    match t.flavor() {
        Flavor::Ordinal => Ok(xi(t)),
        Flavor::Interval => Err(Error::Mismatch("Ξ_Δ expects an ordinal-labeled tree".into())),
    }
}

/// `Ξ` on morphisms: the root label map, then the restrictions.
pub fn xi_mor(m: &LabeledTreeMor) -> Result<ITreeMor> {
    fn go(m: &LabeledTreeMor, n: usize, y: usize) -> Result<ITreeMor> {
        let (a, b) = (&m.dom.0, &m.cod.0);
        let fy = m.map.apply(n, y);
        let (ha, hb) = (xi_at(a, n, y), xi_at(b, n, fy));
        let (src, tgt) = match m.direction() {
            Direction::Forward => (ha, hb),
            Direction::Op => (hb, ha),
        };
        if let Some(u) = ITreeMor::unique(&src, &tgt) {
            return Ok(u);
        }
        let children = fiber(&a.tree, n, y)
            .into_iter()
            .map(|x| go(m, n + 1, x))
            .collect::<Result<Vec<_>>>()?;
        ITreeMor::new(src, tgt, m.alpha(n, y), children)
    }
    go(m, 0, 0)
}

/// A section of `Ξ` on objects: the suspension of the trees of the children
/// under the root label, built breadth-first.
pub fn xi_inverse(h: &ITreeObj) -> CroppedTree {
    let flavor = h.flavor();
    let mut sizes = vec![1];
    let mut parents: Vec<Vec<usize>> = Vec::new();
    let mut labels = vec![vec![h.root()]];
    let mut level: Vec<&ITreeObj> = vec![h];
    while level.iter().any(|v| !v.is_trivial()) {
        let mut next = Vec::new();
        let mut p = Vec::new();
        let mut queue: VecDeque<(usize, &ITreeObj)> = level.iter().copied().enumerate().collect();
        while let Some((i, v)) = queue.pop_front() {
            if v.is_trivial() {
                next.push(v);
                p.push(i);
            } else {
                for c in v.children() {
                    next.push(c);
                    p.push(i);
                }
            }
        }
        sizes.push(next.len());
        parents.push(p);
        labels.push(next.iter().map(|v| v.root()).collect());
        level = next;
    }
    let tree = LevelTree::new(sizes, parents).expect("breadth-first levels");
    CroppedTree::new(LabeledTree::new(flavor, tree, labels).expect("labels per level")).expect("cropped by construction")
}

/// Level sizes, parent maps and labels of a tree under construction.
type Partial = (Vec<usize>, Vec<Vec<usize>>, Vec<Vec<Ordinal>>);

/// All cropped trees of degree at most `max_degree` with labels at most
/// `[max_label]`, generated level by level. Singleton labels are forced at
/// end elements and excluded elsewhere.
pub fn enumerate_cropped(flavor: Flavor, max_degree: usize, max_label: i64) -> Vec<CroppedTree> {
    let trivial = flavor.trivial_root().n();
    let interior: Vec<Ordinal> = (trivial + 1..=max_label).map(|k| Ordinal::new(k).expect("valid")).collect();
    let all: Vec<Ordinal> = (trivial..=max_label).map(|k| Ordinal::new(k).expect("valid")).collect();
    let mut out = Vec::new();
    // partial trees with the last level labeled
    let mut frontier: Vec<Partial> =
        all.iter().map(|&c| (vec![1], vec![], vec![vec![c]])).collect();
    for level in 0..=max_degree {
        let mut next = Vec::new();
        for (sizes, parents, labels) in frontier {
            let last = labels.last().expect("non-empty");
            if last.iter().all(|c| c.n() == trivial) {
                let tree = LevelTree::new(sizes, parents).expect("generated");
                out.push(CroppedTree::new(LabeledTree::new(flavor, tree, labels).expect("generated")).expect("cropped"));
                continue;
            }
            if level == max_degree {
                continue;
            }
            let mut p = Vec::new();
            let mut slots: Vec<Vec<Ordinal>> = Vec::new();
            for (y, &c) in last.iter().enumerate() {
                let k = flavor.arity(c);
                for xi in 0..k {
                    p.push(y);
                    let end = xi == 0 || xi + 1 == k;
                    slots.push(if end { vec![flavor.trivial_root()] } else { interior.clone() });
                }
            }
            for choice in crate::itree::cartesian(&slots) {
                let mut s = sizes.clone();
                s.push(p.len());
                let mut ps = parents.clone();
                ps.push(p.clone());
                let mut ls = labels.clone();
                ls.push(choice);
                next.push((s, ps, ls));
            }
        }
        frontier = next;
    }
    out.sort();
    out
}

/// The interval-labeled tree of degree four used as the running example.
pub fn figure_example() -> LabeledTree {
    let o = |k| Ordinal::new(k).expect("valid");
    let tree = LevelTree::new(
        vec![1, 3, 6, 9, 10],
        vec![
            vec![0, 0, 0],
            vec![0, 1, 1, 1, 1, 2],
            vec![0, 1, 2, 2, 3, 3, 3, 4, 5],
            vec![0, 1, 2, 3, 4, 5, 5, 6, 7, 8],
        ],
    )
    .expect("valid tree");
    let labels = vec![
        vec![o(2)],
        vec![o(0), o(3), o(0)],
        vec![o(0), o(0), o(1), o(2), o(0), o(0)],
        vec![o(0), o(0), o(0), o(0), o(0), o(1), o(0), o(0), o(0)],
        vec![o(0); 10],
    ];
    LabeledTree::new(Flavor::Interval, tree, labels).expect("valid labels")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::itree::enumerate_objects;

    fn o(k: i64) -> Ordinal {
        Ordinal::new(k).unwrap()
    }

    fn figure() -> LabeledTree {
        figure_example()
    }

    #[test]
    fn figure_is_cropped() {
        let t = figure();
        assert!(validate_constrained(&t).is_empty());
        assert!(validate_cropped(&t).is_empty());
        let c = CroppedTree::new(t).unwrap();
        assert_eq!(c.degree(), 4);
        let h = xi(&c);
        assert_eq!(h.root(), o(2));
        assert_eq!(h.child(1).root(), o(3));
        assert_eq!(xi_inverse(&h), c);
        let r = c.restrict(1, 1).unwrap();
        assert_eq!(r.underlying().root_label(), o(3));
        assert!(validate_cropped(r.underlying()).is_empty());
    }

    #[test]
    fn mutation_is_reported() {
        let t = figure();
        let mut raw: RawLabeled = t.into();
        // an interior child of the [3] vertex made a singleton
        raw.labels[2][2] = o(0);
        raw.labels[3][3] = o(0);
        let tree = LevelTree::new(raw.levels.clone(), raw.parents.clone()).unwrap();
        let bad = LabeledTree::new(Flavor::Interval, tree, raw.labels).unwrap();
        assert!(!validate_constrained(&bad).is_empty() || !validate_cropped(&bad).is_empty());
    }

    #[test]
    fn duality_on_figure() {
        let c = CroppedTree::new(figure()).unwrap();
        let d = con_dualize(&c);
        assert_eq!(d.underlying().root_label(), o(1));
        assert!(validate_cropped(d.underlying()).is_empty());
        assert_eq!(con_dualize(&d), c);
        assert_eq!(xi(&d), crate::itree::vee(&xi(&c)).unwrap());
    }

    #[test]
    fn trivial_trees() {
        let t = CroppedTree::trivial(Flavor::Interval);
        assert_eq!(con_dualize(&t), CroppedTree::trivial(Flavor::Ordinal));
        assert!(xi(&t).is_trivial());
        let empty = LabeledTree::suspend(&[], o(0)).unwrap();
        assert!(CroppedTree::new(empty).is_err());
        let s = LabeledTree::suspend(&[t.underlying().clone()], o(0)).unwrap();
        assert_eq!(CroppedTree::new(s).unwrap(), t);
    }

    #[test]
    fn enumeration_matches_objects() {
        for fl in [Flavor::Interval, Flavor::Ordinal] {
            let max_label = if fl == Flavor::Interval { 2 } else { 1 };
            let trees = enumerate_cropped(fl, 2, max_label);
            let objs: Vec<ITreeObj> = trees.iter().map(xi).collect();
            let expected = enumerate_objects(fl, 2, max_label);
            let mut a = objs.clone();
            a.sort();
            let mut b = expected;
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn hom_counts_match() {
        let trees = enumerate_cropped(Flavor::Interval, 2, 2);
        for a in &trees {
            for b in &trees {
                let ms = enumerate_labeled_morphisms(a, b);
                assert_eq!(ms.len() as u128, crate::itree::count_morphisms(&xi(a), &xi(b)));
            }
        }
    }
}
