//! Globular sets, the generated order ◁, globular cardinals and their
//! restriction and suspension operations.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A vertex `(level, index)`.
pub type Vtx = (usize, usize);

/// A finite globular set. `src[n][x]` and `tgt[n][x]` are the source and
/// target in level `n` of vertex `x` of level `n + 1`. Trailing empty levels
/// are trimmed; the empty globular set has no levels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGlob", into = "RawGlob")]
pub struct GlobSet {
    sizes: Vec<usize>,
    src: Vec<Vec<usize>>,
    tgt: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawGlob {
    levels: Vec<usize>,
    src: Vec<Vec<usize>>,
    tgt: Vec<Vec<usize>>,
}

impl TryFrom<RawGlob> for GlobSet {
    type Error = Error;
    fn try_from(r: RawGlob) -> Result<Self> {
        GlobSet::new(r.levels, r.src, r.tgt)
    }
}

impl From<GlobSet> for RawGlob {
    fn from(g: GlobSet) -> Self {
        RawGlob {
            levels: g.sizes,
            src: g.src,
            tgt: g.tgt,
        }
    }
}

impl GlobSet {
    pub fn new(mut sizes: Vec<usize>, mut src: Vec<Vec<usize>>, mut tgt: Vec<Vec<usize>>) -> Result<Self> {
        if let Some(first_empty) = sizes.iter().position(|&s| s == 0) {
            if sizes[first_empty..].iter().any(|&s| s != 0) {
                return Err(Error::NotGlobular("a level above an empty level is non-empty".into()));
            }
            sizes.truncate(first_empty);
            src.truncate(first_empty.saturating_sub(1));
            tgt.truncate(first_empty.saturating_sub(1));
        }
        let maps = sizes.len().saturating_sub(1);
        if src.len() != maps || tgt.len() != maps {
            return Err(Error::NotGlobular(format!(
                "{} levels need {maps} source and target maps",
                sizes.len()
            )));
        }
        for n in 0..maps {
            for (name, m) in [("source", &src[n]), ("target", &tgt[n])] {
                if m.len() != sizes[n + 1] {
                    return Err(Error::NotGlobular(format!("{name} map {n} has wrong length")));
                }
                if m.iter().any(|&v| v >= sizes[n]) {
                    return Err(Error::NotGlobular(format!("{name} map {n} out of range")));
                }
            }
        }
        for n in 1..maps {
            for x in 0..sizes[n + 1] {
                let (s, t) = (src[n][x], tgt[n][x]);
                if src[n - 1][s] != src[n - 1][t] || tgt[n - 1][s] != tgt[n - 1][t] {
                    return Err(Error::NotGlobular(format!(
                        "globularity fails at vertex {x} of level {}",
                        n + 1
                    )));
                }
            }
        }
        Ok(GlobSet { sizes, src, tgt })
    }

    pub fn empty() -> Self {
        GlobSet {
            sizes: vec![],
            src: vec![],
            tgt: vec![],
        }
    }

    pub fn point() -> Self {
        GlobSet {
            sizes: vec![1],
            src: vec![],
            tgt: vec![],
        }
    }

    /// Dimension; `-1` for the empty set.
    pub fn dim(&self) -> i64 {
        self.sizes.len() as i64 - 1
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn level_size(&self, n: usize) -> usize {
        self.sizes.get(n).copied().unwrap_or(0)
    }

    pub fn vertex_count(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    /// Source of `x` in level `n + 1`.
    pub fn s(&self, n: usize, x: usize) -> usize {
        self.src[n][x]
    }

    /// Target of `x` in level `n + 1`.
    pub fn t(&self, n: usize, x: usize) -> usize {
        self.tgt[n][x]
    }

    pub fn src_maps(&self) -> &[Vec<usize>] {
        &self.src
    }

    pub fn tgt_maps(&self) -> &[Vec<usize>] {
        &self.tgt
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vtx> + '_ {
        self.sizes
            .iter()
            .enumerate()
            .flat_map(|(n, &k)| (0..k).map(move |x| (n, x)))
    }

    fn flat_index(&self) -> Vec<usize> {
        let mut off = vec![0];
        for &k in &self.sizes {
            off.push(off.last().expect("non-empty") + k);
        }
        off
    }

    /// Edges of the generating relation `≺`, on flattened indices.
    fn prec_edges(&self, off: &[usize]) -> Vec<Vec<usize>> {
        let total = *off.last().expect("non-empty");
        let mut out = vec![Vec::new(); total];
        for n in 0..self.src.len() {
            for x in 0..self.sizes[n + 1] {
                let v = off[n + 1] + x;
                out[off[n] + self.src[n][x]].push(v);
                out[v].push(off[n] + self.tgt[n][x]);
            }
        }
        out
    }

    /// The sub-globular set on kept vertices with levels below `base`
    /// dropped and the rest shifted down. Kept vertices above `base` must
    /// have kept sources and targets. Returns the inclusion maps.
    pub fn sub(&self, keep: &[Vec<bool>], base: usize) -> Result<(GlobSet, Vec<Vec<usize>>)> {
        let mut incl: Vec<Vec<usize>> = Vec::new();
        for n in base..self.sizes.len() {
            incl.push((0..self.sizes[n]).filter(|&x| keep[n][x]).collect());
        }
        while incl.last().is_some_and(|l| l.is_empty()) {
            incl.pop();
        }
        let mut pos: Vec<Vec<usize>> = self.sizes.iter().map(|&k| vec![usize::MAX; k]).collect();
        for (k, l) in incl.iter().enumerate() {
            for (i, &x) in l.iter().enumerate() {
                pos[base + k][x] = i;
            }
        }
        let mut src = Vec::new();
        let mut tgt = Vec::new();
        for k in 1..incl.len() {
            let n = base + k - 1;
            let mut s = Vec::new();
            let mut t = Vec::new();
            for &x in &incl[k] {
                let (a, b) = (pos[n][self.src[n][x]], pos[n][self.tgt[n][x]]);
                if a == usize::MAX || b == usize::MAX {
                    return Err(Error::NotGlobular("kept vertex has a dropped face".into()));
                }
                s.push(a);
                t.push(b);
            }
            src.push(s);
            tgt.push(t);
        }
        let sizes = incl.iter().map(|l| l.len()).collect();
        Ok((GlobSet::new(sizes, src, tgt)?, incl))
    }

    /// Close a vertex set downward under sources and targets.
    pub fn down_closure(&self, keep: &mut [Vec<bool>]) {
        for n in (1..self.sizes.len()).rev() {
            for x in 0..self.sizes[n] {
                if keep[n][x] {
                    keep[n - 1][self.src[n - 1][x]] = true;
                    keep[n - 1][self.tgt[n - 1][x]] = true;
                }
            }
        }
    }

    pub fn no_vertices(&self) -> Vec<Vec<bool>> {
        self.sizes.iter().map(|&k| vec![false; k]).collect()
    }

    /// Number of linear extensions of `≺`, by brute force over permutations.
    /// The set is a cardinal iff this is exactly 1. Intended for small sets.
    pub fn count_linear_extensions(&self) -> usize {
        let off = self.flat_index();
        let total = *off.last().expect("non-empty");
        let edges = self.prec_edges(&off);
        let mut perm: Vec<usize> = (0..total).collect();
        let mut count = 0;
        fn permute(k: usize, perm: &mut Vec<usize>, edges: &[Vec<usize>], count: &mut usize) {
            if k == perm.len() {
                let mut pos = vec![0; perm.len()];
                for (i, &v) in perm.iter().enumerate() {
                    pos[v] = i;
                }
                if edges
                    .iter()
                    .enumerate()
                    .all(|(u, vs)| vs.iter().all(|&v| pos[u] < pos[v]))
                {
                    *count += 1;
                }
                return;
            }
            for i in k..perm.len() {
                perm.swap(k, i);
                permute(k + 1, perm, edges, count);
                perm.swap(k, i);
            }
        }
        permute(0, &mut perm, &edges, &mut count);
        count
    }
}

/// A globular cardinal with canonical naming: within each level, indices
/// follow the linear order ◁.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "GlobSet", into = "GlobSet")]
pub struct GlobCard {
    set: GlobSet,
    order: Vec<Vtx>,
    rank: Vec<Vec<usize>>,
}

impl TryFrom<GlobSet> for GlobCard {
    type Error = Error;
    fn try_from(g: GlobSet) -> Result<Self> {
        let (c, relabel) = linearize(&g)?;
        let identity = relabel
            .iter()
            .all(|l| l.iter().enumerate().all(|(i, &v)| i == v));
        if !identity {
            return Err(Error::NotCardinal("vertices are not canonically numbered".into()));
        }
        Ok(c)
    }
}

impl From<GlobCard> for GlobSet {
    fn from(c: GlobCard) -> GlobSet {
        c.set
    }
}

/// Compute ◁; on success, return the canonically renamed cardinal and the
/// renaming `relabel[n][old] = new`.
pub fn linearize(g: &GlobSet) -> Result<(GlobCard, Vec<Vec<usize>>)> {
    let off = g.flat_index();
    let total = *off.last().expect("non-empty");
    let edges = g.prec_edges(&off);
    let mut indeg = vec![0usize; total];
    for vs in &edges {
        for &v in vs {
            indeg[v] += 1;
        }
    }
    let level_of = |v: usize| -> Vtx {
        let n = off.partition_point(|&o| o <= v) - 1;
        (n, v - off[n])
    };
    let mut ready: Vec<usize> = (0..total).filter(|&v| indeg[v] == 0).collect();
    let mut seq = Vec::with_capacity(total);
    while let Some(v) = ready.pop() {
        if !ready.is_empty() {
            let (a, b) = (level_of(v), level_of(ready[0]));
            return Err(Error::NotCardinal(format!("{a:?} and {b:?} are incomparable")));
        }
        seq.push(v);
        for &w in &edges[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.push(w);
            }
        }
    }
    if seq.len() != total {
        return Err(Error::NotCardinal("the generated relation has a cycle".into()));
    }
    let mut relabel: Vec<Vec<usize>> = g.sizes.iter().map(|&k| vec![0; k]).collect();
    let mut counters = vec![0usize; g.sizes.len()];
    let mut order = Vec::with_capacity(total);
    for &v in &seq {
        let (n, x) = level_of(v);
        relabel[n][x] = counters[n];
        order.push((n, counters[n]));
        counters[n] += 1;
    }
    let mut src = vec![Vec::new(); g.src.len()];
    let mut tgt = vec![Vec::new(); g.tgt.len()];
    for n in 0..g.src.len() {
        src[n] = vec![0; g.sizes[n + 1]];
        tgt[n] = vec![0; g.sizes[n + 1]];
        for x in 0..g.sizes[n + 1] {
            src[n][relabel[n + 1][x]] = relabel[n][g.src[n][x]];
            tgt[n][relabel[n + 1][x]] = relabel[n][g.tgt[n][x]];
        }
    }
    let set = GlobSet {
        sizes: g.sizes.clone(),
        src,
        tgt,
    };
    Ok((GlobCard::from_ordered(set, order), relabel))
}

impl GlobCard {
    fn from_ordered(set: GlobSet, order: Vec<Vtx>) -> GlobCard {
        let mut rank: Vec<Vec<usize>> = set.sizes.iter().map(|&k| vec![0; k]).collect();
        for (i, &(n, x)) in order.iter().enumerate() {
            rank[n][x] = i;
        }
        GlobCard { set, order, rank }
    }

    pub fn new(set: GlobSet) -> Result<GlobCard> {
        Ok(linearize(&set)?.0)
    }

    pub fn empty() -> GlobCard {
        GlobCard::from_ordered(GlobSet::empty(), vec![])
    }

    pub fn point() -> GlobCard {
        GlobCard::from_ordered(GlobSet::point(), vec![(0, 0)])
    }

    /// The `n`-globe.
    pub fn globe(n: usize) -> GlobCard {
        let mut sizes = vec![2; n];
        sizes.push(1);
        let mut src = Vec::new();
        let mut tgt = Vec::new();
        for k in 0..n {
            let len = if k + 1 == n { 1 } else { 2 };
            src.push(vec![0; len]);
            tgt.push(vec![1; len]);
        }
        GlobCard::new(GlobSet::new(sizes, src, tgt).expect("globe")).expect("globe")
    }

    pub fn set(&self) -> &GlobSet {
        &self.set
    }

    pub fn dim(&self) -> i64 {
        self.set.dim()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.set.sizes
    }

    pub fn level_size(&self, n: usize) -> usize {
        self.set.level_size(n)
    }

    pub fn vertex_count(&self) -> usize {
        self.set.vertex_count()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn s(&self, n: usize, x: usize) -> usize {
        self.set.s(n, x)
    }

    pub fn t(&self, n: usize, x: usize) -> usize {
        self.set.t(n, x)
    }

    /// Vertices in ◁ order.
    pub fn order(&self) -> &[Vtx] {
        &self.order
    }

    pub fn rank(&self, v: Vtx) -> usize {
        self.rank[v.0][v.1]
    }

    /// `a ◁ b` (reflexive).
    pub fn le(&self, a: Vtx, b: Vtx) -> bool {
        self.rank(a) <= self.rank(b)
    }

    /// Whether `x` and `y` are consecutive in `subset`.
    pub fn consecutive(&self, subset: &[Vtx], x: Vtx, y: Vtx) -> Result<bool> {
        if !subset.contains(&x) || !subset.contains(&y) {
            return Err(Error::NotConsecutive("vertices must lie in the subset".into()));
        }
        if !self.le(x, y) || x == y {
            return Ok(false);
        }
        Ok(!subset
            .iter()
            .any(|&z| z != x && z != y && self.le(x, z) && self.le(z, y)))
    }

    /// `X⟨y,z⟩` for consecutive `y = (n, i)`, `z = (n, i + 1)`: the vertices
    /// strictly between them above level `n`, shifted down by `n + 1`.
    /// Returns the cardinal and inclusion maps into levels `n + 1 + k`.
    pub fn restrict(&self, n: usize, y: usize, z: usize) -> Result<(GlobCard, Vec<Vec<usize>>)> {
        if z != y + 1 || z >= self.level_size(n) {
            return Err(Error::NotConsecutive(format!("({n},{y}) and ({n},{z})")));
        }
        let (ry, rz) = (self.rank((n, y)), self.rank((n, z)));
        let mut keep = self.set.no_vertices();
        for k in n + 1..self.set.sizes.len() {
            for x in 0..self.set.sizes[k] {
                let r = self.rank((k, x));
                keep[k][x] = ry < r && r < rz;
            }
        }
        // largest subfunctor: drop vertices whose faces (above level n) are dropped
        for k in n + 2..self.set.sizes.len() {
            for x in 0..self.set.sizes[k] {
                if keep[k][x] && (!keep[k - 1][self.s(k - 1, x)] || !keep[k - 1][self.t(k - 1, x)]) {
                    keep[k][x] = false;
                }
            }
        }
        let (sub, incl) = self.set.sub(&keep, n + 1)?;
        let (card, relabel) = linearize(&sub)?;
        Ok((card, compose_incl(&incl, &relabel)))
    }

    /// `Y⟨⟨x,y⟩⟩`: everything below level `n`, the two `n`-vertices, and every
    /// higher vertex whose faces survive. Not a cardinal in general.
    pub fn comp_subfunctor(&self, n: usize, x: usize, y: usize) -> Result<Vec<Vec<bool>>> {
        if x >= self.level_size(n) || y >= self.level_size(n) {
            return Err(Error::OutOfRange {
                what: "vertex",
                value: x.max(y) as i64,
                max: self.level_size(n) as i64 - 1,
            });
        }
        let mut keep = self.set.no_vertices();
        for l in keep.iter_mut().take(n) {
            l.fill(true);
        }
        keep[n][x] = true;
        keep[n][y] = true;
        for k in n + 1..self.set.sizes.len() {
            for v in 0..self.set.sizes[k] {
                keep[k][v] = keep[k - 1][self.s(k - 1, v)] && keep[k - 1][self.t(k - 1, v)];
            }
        }
        Ok(keep)
    }

    /// `Y⟨⟨x,y⟩⟩` as a cardinal with its inclusion, when it is one.
    pub fn comp_subcardinal(&self, n: usize, x: usize, y: usize) -> Result<(GlobCard, Vec<Vec<usize>>)> {
        let keep = self.comp_subfunctor(n, x, y)?;
        let (sub, incl) = self.set.sub(&keep, 0)?;
        let (card, relabel) = linearize(&sub)?;
        Ok((card, compose_incl(&incl, &relabel)))
    }

    /// `n`-vertices of `Y⟨⟨x,y⟩⟩` at level `m`, counted.
    pub fn band_size(&self, n: usize, x: usize, y: usize, m: usize) -> Result<usize> {
        let keep = self.comp_subfunctor(n, x, y)?;
        Ok(keep.get(m).map(|l| l.iter().filter(|&&b| b).count()).unwrap_or(0))
    }

    /// Suspension of a matched set: points `x_0 … x_p` with `parts[i-1]`
    /// placed between `x_{i-1}` and `x_i`. Every part must be non-empty.
    pub fn suspend(p: usize, parts: &[GlobCard]) -> Result<GlobCard> {
        if parts.len() != p {
            return Err(Error::Mismatch(format!("{p} gaps need {p} cardinals")));
        }
        if parts.iter().any(|c| c.is_empty()) {
            return Err(Error::NotCardinal("an empty part leaves two points incomparable".into()));
        }
        let depth = parts.iter().map(|c| c.set.sizes.len()).max().unwrap_or(0);
        let mut sizes = vec![p + 1];
        sizes.extend((0..depth).map(|k| parts.iter().map(|c| c.level_size(k)).sum::<usize>()));
        let mut src = vec![Vec::new(); depth];
        let mut tgt = vec![Vec::new(); depth];
        let mut off = vec![0usize; depth + 1];
        for (i, c) in parts.iter().enumerate() {
            src[0].extend(std::iter::repeat_n(i, c.level_size(0)));
            tgt[0].extend(std::iter::repeat_n(i + 1, c.level_size(0)));
            for k in 1..depth {
                for x in 0..c.level_size(k) {
                    src[k].push(off[k - 1] + c.s(k - 1, x));
                    tgt[k].push(off[k - 1] + c.t(k - 1, x));
                }
            }
            for (k, o) in off.iter_mut().enumerate().take(depth) {
                *o += c.level_size(k);
            }
        }
        GlobCard::new(GlobSet::new(sizes, src, tgt)?)
    }
}

/// `incl[k][new] = old` from `incl[k][i] = old` and `relabel[k][i] = new`.
pub(crate) fn compose_incl(incl: &[Vec<usize>], relabel: &[Vec<usize>]) -> Vec<Vec<usize>> {
    incl.iter()
        .zip(relabel)
        .map(|(l, r)| {
            let mut out = vec![0; l.len()];
            for (i, &old) in l.iter().enumerate() {
                out[r[i]] = old;
            }
            out
        })
        .collect()
}

/// A morphism of globular cardinals (necessarily incremental on each level).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GlobMor {
    dom: GlobCard,
    cod: GlobCard,
    maps: Vec<Vec<usize>>,
}

impl GlobMor {
    pub fn new(dom: GlobCard, cod: GlobCard, maps: Vec<Vec<usize>>) -> Result<GlobMor> {
        if maps.len() != dom.sizes().len() {
            return Err(Error::InvalidMorphism("one map per level of the domain".into()));
        }
        for (n, m) in maps.iter().enumerate() {
            if m.len() != dom.level_size(n) || m.iter().any(|&v| v >= cod.level_size(n)) {
                return Err(Error::InvalidMorphism(format!("level {n} map out of range")));
            }
        }
        for n in 1..maps.len() {
            for x in 0..dom.level_size(n) {
                if cod.s(n - 1, maps[n][x]) != maps[n - 1][dom.s(n - 1, x)]
                    || cod.t(n - 1, maps[n][x]) != maps[n - 1][dom.t(n - 1, x)]
                {
                    return Err(Error::InvalidMorphism(format!(
                        "does not commute with faces at ({n},{x})"
                    )));
                }
            }
        }
        Ok(GlobMor { dom, cod, maps })
    }

    pub fn identity(c: &GlobCard) -> GlobMor {
        GlobMor {
            dom: c.clone(),
            cod: c.clone(),
            maps: c.sizes().iter().map(|&k| (0..k).collect()).collect(),
        }
    }

    pub fn dom(&self) -> &GlobCard {
        &self.dom
    }

    pub fn cod(&self) -> &GlobCard {
        &self.cod
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    pub fn apply(&self, v: Vtx) -> Vtx {
        (v.0, self.maps[v.0][v.1])
    }

    /// Whether every level map is injective with an interval image.
    pub fn is_incremental(&self) -> bool {
        self.maps.iter().all(|m| m.windows(2).all(|w| w[1] == w[0] + 1))
    }

    pub fn compose(&self, f: &GlobMor) -> Result<GlobMor> {
        if f.cod != self.dom {
            return Err(Error::Mismatch("globular morphism codomain/domain".into()));
        }
        let maps = f
            .maps
            .iter()
            .enumerate()
            .map(|(n, m)| m.iter().map(|&x| self.maps[n][x]).collect())
            .collect();
        Ok(GlobMor {
            dom: f.dom.clone(),
            cod: self.cod.clone(),
            maps,
        })
    }

    /// The lifting `f⟨y,z⟩ : X⟨y,z⟩ → Y⟨f y, f z⟩`.
    pub fn restrict(&self, n: usize, y: usize) -> Result<GlobMor> {
        let (xd, xi) = self.dom.restrict(n, y, y + 1)?;
        let fy = self.maps[n][y];
        if self.maps[n][y + 1] != fy + 1 {
            return Err(Error::NotConsecutive("images are not consecutive".into()));
        }
        let (yd, yi) = self.cod.restrict(n, fy, fy + 1)?;
        let maps = xi
            .iter()
            .enumerate()
            .map(|(k, l)| {
                l.iter()
                    .map(|&old| {
                        let img = self.maps[n + 1 + k][old];
                        yi[k].iter().position(|&v| v == img).expect("image lies in the restriction")
                    })
                    .collect()
            })
            .collect();
        GlobMor::new(xd, yd, maps)
    }

    /// The suspension of a matched-set morphism: an incremental `f0` on the
    /// points and one morphism per gap of the domain, landing in `cod_parts`.
    pub fn suspend(f0: &[usize], parts: &[GlobMor], cod_parts: &[GlobCard]) -> Result<GlobMor> {
        if f0.len() != parts.len() + 1 {
            return Err(Error::Mismatch("point map and gap morphisms disagree".into()));
        }
        if f0.windows(2).any(|w| w[1] != w[0] + 1) || f0.last().is_some_and(|&v| v > cod_parts.len()) {
            return Err(Error::InvalidMorphism("point map is not incremental".into()));
        }
        for (i, g) in parts.iter().enumerate() {
            if g.cod != cod_parts[f0[i + 1] - 1] {
                return Err(Error::Mismatch(format!("gap {} lands in the wrong part", i + 1)));
            }
        }
        let dom_parts: Vec<GlobCard> = parts.iter().map(|g| g.dom.clone()).collect();
        let dom = GlobCard::suspend(parts.len(), &dom_parts)?;
        let cod = GlobCard::suspend(cod_parts.len(), cod_parts)?;
        let depth = dom.sizes().len();
        let mut maps = vec![f0.to_vec()];
        for k in 1..depth {
            let mut m = Vec::new();
            for (i, g) in parts.iter().enumerate() {
                let target = f0[i + 1] - 1;
                let off: usize = cod_parts[..target].iter().map(|c| c.level_size(k - 1)).sum();
                for x in 0..g.dom.level_size(k - 1) {
                    m.push(off + g.maps[k - 1][x]);
                }
            }
            maps.push(m);
        }
        GlobMor::new(dom, cod, maps)
    }
}

/// All morphisms `X → Y` by level-wise backtracking.
pub fn enumerate_glob_morphisms(x: &GlobCard, y: &GlobCard) -> Vec<GlobMor> {
    let mut out = Vec::new();
    fn go(x: &GlobCard, y: &GlobCard, maps: &mut Vec<Vec<usize>>, out: &mut Vec<GlobMor>) {
        let n = maps.len();
        if n == x.sizes().len() {
            out.push(GlobMor {
                dom: x.clone(),
                cod: y.clone(),
                maps: maps.clone(),
            });
            return;
        }
        let mut level = Vec::with_capacity(x.level_size(n));
        fn fill(
            x: &GlobCard,
            y: &GlobCard,
            n: usize,
            level: &mut Vec<usize>,
            maps: &mut Vec<Vec<usize>>,
            out: &mut Vec<GlobMor>,
        ) {
            let i = level.len();
            if i == x.level_size(n) {
                maps.push(level.clone());
                go(x, y, maps, out);
                maps.pop();
                return;
            }
            for v in 0..y.level_size(n) {
                if n > 0
                    && (y.s(n - 1, v) != maps[n - 1][x.s(n - 1, i)]
                        || y.t(n - 1, v) != maps[n - 1][x.t(n - 1, i)])
                {
                    continue;
                }
                level.push(v);
                fill(x, y, n, level, maps, out);
                level.pop();
            }
        }
        fill(x, y, n, &mut level, maps, out);
    }
    go(x, y, &mut Vec::new(), &mut out);
    out
}

/// Source and target maps of a partial globular set.
type FaceMaps = (Vec<Vec<usize>>, Vec<Vec<usize>>);

/// All globular sets with at most `max_vertices` vertices and no empty
/// levels, by brute force over face maps.
pub fn enumerate_globular_sets(max_vertices: usize) -> Vec<GlobSet> {
    fn compositions(total: usize) -> Vec<Vec<usize>> {
        if total == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 1..=total {
            for mut rest in compositions(total - first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let mut out = vec![GlobSet::empty()];
    for total in 1..=max_vertices {
        for sizes in compositions(total) {
            let mut acc: Vec<FaceMaps> = vec![(vec![], vec![])];
            for n in 0..sizes.len() - 1 {
                let mut next = Vec::new();
                for (src, tgt) in &acc {
                    let pairs: Vec<(usize, usize)> = (0..sizes[n])
                        .flat_map(|a| (0..sizes[n]).map(move |b| (a, b)))
                        .filter(|&(a, b)| {
                            n == 0 || (src[n - 1][a] == src[n - 1][b] && tgt[n - 1][a] == tgt[n - 1][b])
                        })
                        .collect();
                    for choice in crate::itree::product_indices(pairs.len(), sizes[n + 1]) {
                        let mut s = src.clone();
                        let mut t = tgt.clone();
                        s.push(choice.iter().map(|&c| pairs[c].0).collect());
                        t.push(choice.iter().map(|&c| pairs[c].1).collect());
                        next.push((s, t));
                    }
                }
                acc = next;
            }
            for (s, t) in acc {
                out.push(GlobSet::new(sizes.clone(), s, t).expect("generated globular"));
            }
        }
    }
    out
}

/// All globular cardinals with at most `max_vertices` vertices, up to
/// isomorphism, filtered from [`enumerate_globular_sets`].
pub fn enumerate_cardinals_brute(max_vertices: usize) -> Vec<GlobCard> {
    let set: BTreeSet<GlobCard> = enumerate_globular_sets(max_vertices)
        .iter()
        .filter_map(|g| GlobCard::new(g.clone()).ok())
        .collect();
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn arrow() -> GlobCard {
        GlobCard::globe(1)
    }

    fn chain2() -> GlobCard {
        GlobCard::suspend(2, &[GlobCard::point(), GlobCard::point()]).unwrap()
    }

    #[test]
    fn order_on_arrow() {
        let a = arrow();
        assert_eq!(a.order(), &[(0, 0), (1, 0), (0, 1)]);
        assert!(a.consecutive(&[(0, 0), (0, 1)], (0, 0), (0, 1)).unwrap());
    }

    #[test]
    fn parallel_arrows_are_not_linear() {
        let g = GlobSet::new(vec![2, 2], vec![vec![0, 0]], vec![vec![1, 1]]).unwrap();
        assert!(linearize(&g).is_err());
        assert_eq!(g.count_linear_extensions(), 2);
    }

    #[test]
    fn globularity_is_checked() {
        let bad = GlobSet::new(
            vec![2, 2, 1],
            vec![vec![0, 1], vec![0]],
            vec![vec![1, 0], vec![1]],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn restriction_of_globe() {
        let g = GlobCard::globe(2);
        let (r, incl) = g.restrict(0, 0, 1).unwrap();
        assert_eq!(r, GlobCard::globe(1));
        assert_eq!(incl, vec![vec![0, 1], vec![0]]);
        let (r, _) = arrow().restrict(0, 0, 1).unwrap();
        assert_eq!(r, GlobCard::point());
    }

    #[test]
    fn comp_subfunctor_middle_segment() {
        let c = GlobCard::suspend(3, &[GlobCard::point(), GlobCard::point(), GlobCard::point()]).unwrap();
        let (mid, incl) = c.comp_subcardinal(0, 1, 2).unwrap();
        assert_eq!(mid, arrow());
        assert_eq!(incl, vec![vec![1, 2], vec![1]]);
        let (whole, _) = arrow().comp_subcardinal(0, 0, 1).unwrap();
        assert_eq!(whole, arrow());
    }

    #[test]
    fn suspension_is_canonical() {
        let c = chain2();
        assert_eq!(c.sizes(), &[3, 2]);
        assert_eq!(c.order(), &[(0, 0), (1, 0), (0, 1), (1, 1), (0, 2)]);
        assert!(GlobCard::suspend(1, &[GlobCard::empty()]).is_err());
    }

    #[test]
    fn brute_force_cardinals() {
        let cards = enumerate_cardinals_brute(6);
        let counts: Vec<usize> = (0..=6)
            .map(|k| cards.iter().filter(|c| c.vertex_count() == k).count())
            .collect();
        assert_eq!(counts, vec![1, 1, 0, 1, 0, 2, 0]);
    }

    #[test]
    fn linearize_agrees_with_brute_force() {
        for g in enumerate_globular_sets(5) {
            assert_eq!(linearize(&g).is_ok(), g.count_linear_extensions() == 1, "{g:?}");
        }
    }

    #[test]
    fn morphisms_into_chain() {
        let homs = enumerate_glob_morphisms(&arrow(), &chain2());
        assert_eq!(homs.len(), 2);
        assert!(homs.iter().all(|h| h.is_incremental()));
        let r = homs[1].restrict(0, 0).unwrap();
        assert_eq!(r.dom(), &GlobCard::point());
    }
}
