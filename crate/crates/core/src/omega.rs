//! Free ω-categories. Cells of `𝔉X` over a globular cardinal are canonical
//! injective morphisms `γ : Y → X` with a nominal dimension; cells of the
//! enriched construction on an ordinal graph are nested tuples. `L` compares
//! the two, and `Ψ` sends iΔ₊ into Θ₊.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::globular::{
    compose_incl, enumerate_cardinals_brute, enumerate_glob_morphisms, linearize, GlobCard, GlobMor, GlobSet,
};
use crate::itree::{cartesian, Flavor, ITreeMor, ITreeObj};
use crate::ograph::{gamma, upsilon, OGraph};
use crate::ordinal::{wedge_map, OrdMap};

type Mask = Vec<Vec<bool>>;

/// An `n`-cell of `𝔉X`. Degenerate when `dim` exceeds the shape dimension.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCell", into = "RawCell")]
pub struct Cell {
    map: GlobMor,
    dim: usize,
}

#[derive(Serialize, Deserialize)]
struct RawCell {
    base: GlobCard,
    shape: GlobCard,
    map: Vec<Vec<usize>>,
    dim: usize,
}

impl TryFrom<RawCell> for Cell {
    type Error = Error;
    fn try_from(r: RawCell) -> Result<Self> {
        Cell::new(GlobMor::new(r.shape, r.base, r.map)?, r.dim)
    }
}

impl From<Cell> for RawCell {
    fn from(c: Cell) -> Self {
        RawCell {
            base: c.base().clone(),
            shape: c.shape().clone(),
            map: c.map.maps().to_vec(),
            dim: c.dim,
        }
    }
}

impl Cell {
    pub fn new(map: GlobMor, dim: usize) -> Result<Cell> {
        if map.dom().is_empty() {
            return Err(Error::InvalidCell("cells have non-empty shapes".into()));
        }
        if map.dom().dim() > dim as i64 {
            return Err(Error::InvalidCell(format!(
                "shape of dimension {} cannot be a {dim}-cell",
                map.dom().dim()
            )));
        }
        for m in map.maps() {
            let distinct: BTreeSet<usize> = m.iter().copied().collect();
            if distinct.len() != m.len() {
                return Err(Error::InvalidCell("cell maps are injective".into()));
            }
        }
        Ok(Cell { map, dim })
    }

    /// The cell whose image is the kept sub-cardinal of `base`.
    pub fn from_image(base: &GlobCard, keep: &[Vec<bool>], dim: usize) -> Result<Cell> {
        let (sub, incl) = base.set().sub(keep, 0)?;
        let (card, relabel) = linearize(&sub)?;
        let maps = compose_incl(&incl, &relabel);
        Cell::new(GlobMor::new(card, base.clone(), maps)?, dim)
    }

    pub fn base(&self) -> &GlobCard {
        self.map.cod()
    }

    pub fn shape(&self) -> &GlobCard {
        self.map.dom()
    }

    pub fn map(&self) -> &GlobMor {
        &self.map
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_degenerate(&self) -> bool {
        self.shape().dim() < self.dim as i64
    }

    /// The same data at a higher nominal dimension.
    pub fn identity_at(&self, n: usize) -> Result<Cell> {
        if n < self.dim {
            return Err(Error::InvalidCell(format!("cannot lower a {}-cell to {n}", self.dim)));
        }
        Ok(Cell {
            map: self.map.clone(),
            dim: n,
        })
    }

    pub fn image(&self) -> Mask {
        let mut keep = self.base().set().no_vertices();
        for (n, m) in self.map.maps().iter().enumerate() {
            for &v in m {
                keep[n][v] = true;
            }
        }
        keep
    }

    /// `γ ∘ ι` for the inclusion `ι` of a kept sub-cardinal of the shape.
    fn subcell(&self, keep: &[Vec<bool>], dim: usize) -> Result<Cell> {
        let shape = self.shape();
        let (sub, incl) = shape.set().sub(keep, 0)?;
        let (card, relabel) = linearize(&sub)?;
        let iota = GlobMor::new(card, shape.clone(), compose_incl(&incl, &relabel))?;
        Cell::new(self.map.compose(&iota)?, dim)
    }
}

/// `∂⁻_m Y` or `∂⁺_m Y` as a mask, for `m < dim Y`.
fn boundary_mask(y: &GlobCard, m: usize, minus: bool) -> Result<Mask> {
    let mut keep = y.set().no_vertices();
    if m == 0 {
        let x = if minus { 0 } else { y.level_size(0) - 1 };
        keep[0][x] = true;
        return Ok(keep);
    }
    for l in keep.iter_mut().take(m) {
        l.fill(true);
    }
    for i in 1..y.level_size(m - 1) {
        let band = y.comp_subfunctor(m - 1, i - 1, i)?;
        let mut vs = (0..y.level_size(m)).filter(|&v| band[m][v]);
        let pick = if minus { vs.next() } else { vs.next_back() };
        if let Some(v) = pick {
            keep[m][v] = true;
        }
    }
    Ok(keep)
}

fn boundary(c: &Cell, m: usize, minus: bool) -> Result<Cell> {
    if m >= c.dim {
        return Err(Error::OutOfRange {
            what: "boundary dimension",
            value: m as i64,
            max: c.dim as i64 - 1,
        });
    }
    if m as i64 >= c.shape().dim() {
        return Ok(Cell {
            map: c.map.clone(),
            dim: m,
        });
    }
    c.subcell(&boundary_mask(c.shape(), m, minus)?, m)
}

/// `∂⁻_m c`.
pub fn m_source(c: &Cell, m: usize) -> Result<Cell> {
    boundary(c, m, true)
}

/// `∂⁺_m c`.
pub fn m_target(c: &Cell, m: usize) -> Result<Cell> {
    boundary(c, m, false)
}

/// `β ∘_m α`, computed as the pushout `Z∖∂⁻_m Z + Y` of the shapes and
/// cross-checked against the union of images.
pub fn compose_cells(beta: &Cell, alpha: &Cell, m: usize) -> Result<Cell> {
    if beta.base() != alpha.base() || beta.dim != alpha.dim {
        return Err(Error::NotComposable("cells of different bases or dimensions".into()));
    }
    if m_source(beta, m)? != m_target(alpha, m)? {
        return Err(Error::NotComposable(format!("boundaries disagree at {m}")));
    }
    let (y, z) = (alpha.shape(), beta.shape());
    let face = |c: &GlobCard, minus: bool| {
        if m as i64 >= c.dim() {
            Ok(full_mask(c))
        } else {
            boundary_mask(c, m, minus)
        }
    };
    let (zb, yb) = (face(z, true)?, face(y, false)?);
    let (bz, iz) = z.set().sub(&zb, 0)?;
    let (by, iy) = y.set().sub(&yb, 0)?;
    let (cz, rz) = linearize(&bz)?;
    let (cy, ry) = linearize(&by)?;
    if cz != cy {
        return Err(Error::NotComposable("boundary shapes differ".into()));
    }
    let (iz, iy) = (compose_incl(&iz, &rz), compose_incl(&iy, &ry));

    let levels = y.sizes().len().max(z.sizes().len());
    let mut sizes = vec![0usize; levels];
    let mut zpos: Vec<Vec<usize>> = Vec::with_capacity(levels);
    let mut xmap: Vec<Vec<usize>> = vec![Vec::new(); levels];
    for l in 0..levels {
        let ny = y.level_size(l);
        xmap[l].extend(alpha.map.maps().get(l).into_iter().flatten());
        let mut pos = vec![usize::MAX; z.level_size(l)];
        if let Some(bl) = iz.get(l) {
            for (i, &zv) in bl.iter().enumerate() {
                pos[zv] = iy[l][i];
            }
        }
        let mut next = ny;
        for (zv, p) in pos.iter_mut().enumerate() {
            if *p == usize::MAX {
                *p = next;
                next += 1;
                xmap[l].push(beta.map.maps()[l][zv]);
            }
        }
        sizes[l] = next;
        zpos.push(pos);
    }
    let mut src = Vec::new();
    let mut tgt = Vec::new();
    for l in 1..levels {
        let mut s = vec![0; sizes[l]];
        let mut t = vec![0; sizes[l]];
        for v in 0..y.level_size(l) {
            s[v] = y.s(l - 1, v);
            t[v] = y.t(l - 1, v);
        }
        for v in 0..z.level_size(l) {
            let p = zpos[l][v];
            if p >= y.level_size(l) {
                s[p] = zpos[l - 1][z.s(l - 1, v)];
                t[p] = zpos[l - 1][z.t(l - 1, v)];
            }
        }
        src.push(s);
        tgt.push(t);
    }
    let pushout = GlobSet::new(sizes, src, tgt)?;
    let (card, relabel) =
        linearize(&pushout).map_err(|e| Error::NotComposable(format!("pushout is not a cardinal: {e}")))?;
    let mut maps: Vec<Vec<usize>> = card.sizes().iter().map(|&k| vec![0; k]).collect();
    for (l, r) in relabel.iter().enumerate() {
        for (old, &new) in r.iter().enumerate() {
            maps[l][new] = xmap[l][old];
        }
    }
    let out = Cell::new(GlobMor::new(card, alpha.base().clone(), maps)?, alpha.dim)
        .map_err(|e| Error::NotComposable(format!("induced map: {e}")))?;
    let mut union = alpha.image();
    for (l, row) in beta.image().iter().enumerate() {
        for (v, &b) in row.iter().enumerate() {
            union[l][v] |= b;
        }
    }
    if out.image() != union {
        return Err(Error::NotComposable("pushout image differs from the union".into()));
    }
    Ok(out)
}

fn full_mask(y: &GlobCard) -> Mask {
    y.sizes().iter().map(|&k| vec![true; k]).collect()
}

/// `|Y_0| ≤ 2` for `m = 0`; otherwise every band `Y⟨⟨Pred y, y⟩⟩_m` over
/// consecutive `(m−1)`-vertices has at most two `m`-vertices.
pub fn is_m_indecomposable(c: &Cell, m: usize) -> bool {
    let y = c.shape();
    if m == 0 {
        return y.level_size(0) <= 2;
    }
    (1..y.level_size(m - 1)).all(|i| y.band_size(m - 1, i - 1, i, m).is_ok_and(|k| k <= 2))
}

/// Generating cells: globes at their own dimension.
pub fn is_indecomposable(c: &Cell) -> bool {
    let y = c.shape();
    let n = c.dim;
    if n == 0 {
        return y.level_size(0) == 1;
    }
    if y.level_size(0) != 2 {
        return false;
    }
    (1..=n).all(|m| {
        let want = if m < n { 2 } else { 1 };
        let pairs = y.level_size(m - 1);
        pairs >= 2 && (1..pairs).all(|i| y.band_size(m - 1, i - 1, i, m).is_ok_and(|k| k == want))
    })
}

/// The canonical 0-decomposition `(γ⟨⟨y_{i−1}, y_i⟩⟩)_i`.
pub fn zero_decompose(c: &Cell) -> Result<Vec<Cell>> {
    if c.dim == 0 {
        return Err(Error::InvalidCell("0-cells have no 0-decomposition".into()));
    }
    let p = c.shape().level_size(0);
    if p == 1 {
        return Ok(vec![c.clone()]);
    }
    (1..p)
        .map(|i| c.subcell(&c.shape().comp_subfunctor(0, i - 1, i)?, c.dim))
        .collect()
}

/// `γ⟨y_{i−1}, y_i⟩`: a `(dim − 1)`-cell of `𝔉(X⟨γ y_{i−1}, γ y_i⟩)`.
pub fn restrict_cell(c: &Cell, i: usize) -> Result<Cell> {
    if c.dim == 0 || i == 0 || i >= c.shape().level_size(0) {
        return Err(Error::OutOfRange {
            what: "0-vertex",
            value: i as i64,
            max: c.shape().level_size(0) as i64 - 1,
        });
    }
    Cell::new(c.map.restrict(0, i - 1)?, c.dim - 1)
}

/// All cells of `𝔉X` at nominal dimension `n`, from down-closed subsets.
pub fn enumerate_cells(x: &GlobCard, n: usize) -> Vec<Cell> {
    let mut out = BTreeSet::new();
    if x.is_empty() {
        return Vec::new();
    }
    let levels = x.sizes().len().min(n + 1);
    fn go(x: &GlobCard, l: usize, levels: usize, n: usize, keep: &mut Mask, out: &mut BTreeSet<Cell>) {
        if l == levels {
            if keep[0].iter().any(|&b| b) {
                if let Ok(c) = Cell::from_image(x, keep, n) {
                    out.insert(c);
                }
            }
            return;
        }
        let cands: Vec<usize> = (0..x.level_size(l))
            .filter(|&v| l == 0 || (keep[l - 1][x.s(l - 1, v)] && keep[l - 1][x.t(l - 1, v)]))
            .collect();
        for bits in 0u64..(1u64 << cands.len()) {
            keep[l].fill(false);
            for (i, &v) in cands.iter().enumerate() {
                keep[l][v] = bits >> i & 1 == 1;
            }
            go(x, l + 1, levels, n, keep, out);
        }
        keep[l].fill(false);
    }
    let mut keep = x.set().no_vertices();
    go(x, 0, levels, n, &mut keep, &mut out);
    out.into_iter().collect()
}

/// Oracle for [`enumerate_cells`]: every morphism from every small cardinal
/// of dimension at most `n`.
pub fn enumerate_cells_brute(x: &GlobCard, n: usize) -> Result<Vec<Cell>> {
    let mut out = BTreeSet::new();
    for y in enumerate_cardinals_brute(x.vertex_count()) {
        if y.is_empty() || y.dim() > n as i64 {
            continue;
        }
        for f in enumerate_glob_morphisms(&y, x) {
            out.insert(Cell::new(f, n)?);
        }
    }
    Ok(out.into_iter().collect())
}

/// A cell of the enriched free ω-category on an ordinal graph `G`.
/// `Seq { from, to, items }` carries one `(dim − 1)`-cell of `𝔉G(i−1, i)`
/// for each `i` in `from+1 ..= to`; `from = to` is an identity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EnrichedCell {
    Object(usize),
    Seq {
        dim: usize,
        from: usize,
        to: usize,
        items: Vec<EnrichedCell>,
    },
}

impl EnrichedCell {
    pub fn dim(&self) -> usize {
        match self {
            EnrichedCell::Object(_) => 0,
            EnrichedCell::Seq { dim, .. } => *dim,
        }
    }

    pub fn from(&self) -> usize {
        match self {
            EnrichedCell::Object(x) => *x,
            EnrichedCell::Seq { from, .. } => *from,
        }
    }

    pub fn to(&self) -> usize {
        match self {
            EnrichedCell::Object(x) => *x,
            EnrichedCell::Seq { to, .. } => *to,
        }
    }

    /// Dimension of the underlying non-identity cell.
    pub fn actual_dim(&self) -> usize {
        match self {
            EnrichedCell::Object(_) => 0,
            EnrichedCell::Seq { from, to, items, .. } => {
                if from == to {
                    0
                } else {
                    1 + items.iter().map(|c| c.actual_dim()).max().unwrap_or(0)
                }
            }
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.actual_dim() < self.dim()
    }

    pub fn is_valid_in(&self, g: &OGraph) -> bool {
        match self {
            EnrichedCell::Object(x) => *x < g.object_count(),
            EnrichedCell::Seq { dim, from, to, items } => {
                *dim >= 1
                    && from <= to
                    && *to < g.object_count()
                    && items.len() == to - from
                    && items
                        .iter()
                        .enumerate()
                        .all(|(k, c)| c.dim() + 1 == *dim && c.is_valid_in(&g.edges()[from + k]))
            }
        }
    }

    fn boundary(&self, m: usize, minus: bool) -> Result<EnrichedCell> {
        match self {
            EnrichedCell::Seq { dim, from, to, items } if m < *dim => {
                if m == 0 {
                    return Ok(EnrichedCell::Object(if minus { *from } else { *to }));
                }
                Ok(EnrichedCell::Seq {
                    dim: m,
                    from: *from,
                    to: *to,
                    items: items
                        .iter()
                        .map(|c| c.boundary(m - 1, minus))
                        .collect::<Result<_>>()?,
                })
            }
            _ => Err(Error::OutOfRange {
                what: "boundary dimension",
                value: m as i64,
                max: self.dim() as i64 - 1,
            }),
        }
    }

    pub fn source(&self, m: usize) -> Result<EnrichedCell> {
        self.boundary(m, true)
    }

    pub fn target(&self, m: usize) -> Result<EnrichedCell> {
        self.boundary(m, false)
    }

    /// `beta ∘_m alpha`.
    pub fn compose(beta: &EnrichedCell, alpha: &EnrichedCell, m: usize) -> Result<EnrichedCell> {
        if beta.dim() != alpha.dim() || beta.source(m)? != alpha.target(m)? {
            return Err(Error::NotComposable(format!("enriched cells at {m}")));
        }
        let (
            EnrichedCell::Seq { dim, from, items: ai, .. },
            EnrichedCell::Seq { to, items: bi, .. },
        ) = (alpha, beta)
        else {
            unreachable!("boundaries exist only above dimension 0")
        };
        let items = if m == 0 {
            ai.iter().chain(bi).cloned().collect()
        } else {
            bi.iter()
                .zip(ai)
                .map(|(b, a)| EnrichedCell::compose(b, a, m - 1))
                .collect::<Result<_>>()?
        };
        Ok(EnrichedCell::Seq {
            dim: *dim,
            from: *from,
            to: *to,
            items,
        })
    }

    /// The identity on this cell at nominal dimension `n`.
    pub fn identity_at(&self, n: usize) -> Result<EnrichedCell> {
        if n < self.dim() {
            return Err(Error::InvalidCell(format!("cannot lower a {}-cell to {n}", self.dim())));
        }
        if n == self.dim() {
            return Ok(self.clone());
        }
        Ok(match self {
            EnrichedCell::Object(x) => EnrichedCell::Seq {
                dim: n,
                from: *x,
                to: *x,
                items: vec![],
            },
            EnrichedCell::Seq { from, to, items, .. } => EnrichedCell::Seq {
                dim: n,
                from: *from,
                to: *to,
                items: items.iter().map(|c| c.identity_at(n - 1)).collect::<Result<_>>()?,
            },
        })
    }
}

/// All cells of `𝔉G` at nominal dimension `n`.
pub fn free_on_ograph_cells(g: &OGraph, n: usize) -> Vec<EnrichedCell> {
    let p = g.object_count();
    if n == 0 {
        return (0..p).map(EnrichedCell::Object).collect();
    }
    let sub: Vec<Vec<EnrichedCell>> = g.edges().iter().map(|e| free_on_ograph_cells(e, n - 1)).collect();
    let mut out = Vec::new();
    for h in 0..p {
        for k in h..p {
            for items in cartesian(&sub[h..k]) {
                out.push(EnrichedCell::Seq {
                    dim: n,
                    from: h,
                    to: k,
                    items,
                });
            }
        }
    }
    out
}

/// `|𝔉G_n|` from the product formula.
pub fn count_ograph_cells(g: &OGraph, n: usize) -> u128 {
    let p = g.object_count();
    if n == 0 {
        return p as u128;
    }
    let sub: Vec<u128> = g.edges().iter().map(|e| count_ograph_cells(e, n - 1)).collect();
    (0..p)
        .map(|h| (h..p).map(|k| sub[h..k].iter().product::<u128>()).sum::<u128>())
        .sum()
}

/// `L : 𝔉X → 𝔉ΓX`.
pub fn l_functor(c: &Cell) -> Result<EnrichedCell> {
    let m0 = &c.map.maps()[0];
    if c.dim == 0 {
        return Ok(EnrichedCell::Object(m0[0]));
    }
    let items = (1..m0.len())
        .map(|i| l_functor(&restrict_cell(c, i)?))
        .collect::<Result<_>>()?;
    Ok(EnrichedCell::Seq {
        dim: c.dim,
        from: m0[0],
        to: m0[m0.len() - 1],
        items,
    })
}

/// `L⁻¹`: the cell over `x` whose image is the union of lifted images.
pub fn l_inverse(x: &GlobCard, e: &EnrichedCell) -> Result<Cell> {
    if !e.is_valid_in(&gamma(x)) {
        return Err(Error::InvalidCell("enriched cell is not a cell of ΓX".into()));
    }
    fn mark(x: &GlobCard, to_root: &[Vec<usize>], depth: usize, e: &EnrichedCell, keep: &mut Mask) -> Result<()> {
        match e {
            EnrichedCell::Object(v) => keep[depth][to_root[0][*v]] = true,
            EnrichedCell::Seq { from, to, items, .. } => {
                for j in *from..=*to {
                    keep[depth][to_root[0][j]] = true;
                }
                for (k, item) in items.iter().enumerate() {
                    let i = from + k + 1;
                    let (sub, incl) = x.restrict(0, i - 1, i)?;
                    let lifted: Vec<Vec<usize>> = incl
                        .iter()
                        .enumerate()
                        .map(|(l, row)| row.iter().map(|&v| to_root[l + 1][v]).collect())
                        .collect();
                    mark(&sub, &lifted, depth + 1, item, keep)?;
                }
            }
        }
        Ok(())
    }
    let mut keep = x.set().no_vertices();
    let ids: Vec<Vec<usize>> = x.sizes().iter().map(|&k| (0..k).collect()).collect();
    mark(x, &ids, 0, e, &mut keep)?;
    Cell::from_image(x, &keep, e.dim())
}

/// Generating data of an object of Θ₊.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OmegaCatPresentation {
    Empty,
    Terminal,
    FreeOnGlobCard { card: GlobCard },
    FreeOnOGraph { graph: OGraph },
}

impl OmegaCatPresentation {
    /// The ordinal graph whose enriched free ω-category this presents.
    pub fn graph(&self) -> OGraph {
        match self {
            OmegaCatPresentation::Empty => OGraph::Empty,
            OmegaCatPresentation::Terminal => OGraph::point(),
            OmegaCatPresentation::FreeOnGlobCard { card } => gamma(card),
            OmegaCatPresentation::FreeOnOGraph { graph } => graph.clone(),
        }
    }

    /// Indecomposable proper cells, by dimension then structure.
    pub fn generators(&self) -> Vec<EnrichedCell> {
        let mut gens = ograph_generators(&self.graph());
        gens.sort_by(|a, b| (a.dim(), a).cmp(&(b.dim(), b)));
        gens
    }
}

fn ograph_generators(g: &OGraph) -> Vec<EnrichedCell> {
    let mut out: Vec<EnrichedCell> = (0..g.object_count()).map(EnrichedCell::Object).collect();
    for (k, e) in g.edges().iter().enumerate() {
        for y in ograph_generators(e) {
            out.push(EnrichedCell::Seq {
                dim: y.dim() + 1,
                from: k,
                to: k + 1,
                items: vec![y],
            });
        }
    }
    out
}

enum Split {
    Generator,
    Identity(EnrichedCell),
    Compose(usize, EnrichedCell, EnrichedCell),
}

/// One step of writing a cell in terms of generators, identities and
/// composites.
fn split(c: &EnrichedCell) -> Split {
    let EnrichedCell::Seq { dim, from, to, items } = c else {
        return Split::Generator;
    };
    let (dim, from, to) = (*dim, *from, *to);
    if from == to {
        return Split::Identity(EnrichedCell::Object(from));
    }
    if to - from >= 2 {
        let alpha = EnrichedCell::Seq {
            dim,
            from,
            to: from + 1,
            items: items[..1].to_vec(),
        };
        let beta = EnrichedCell::Seq {
            dim,
            from: from + 1,
            to,
            items: items[1..].to_vec(),
        };
        return Split::Compose(0, beta, alpha);
    }
    let susp = |y: EnrichedCell| EnrichedCell::Seq {
        dim: y.dim() + 1,
        from,
        to,
        items: vec![y],
    };
    match split(&items[0]) {
        Split::Generator => Split::Generator,
        Split::Identity(z) => Split::Identity(susp(z)),
        Split::Compose(m, b, a) => Split::Compose(m + 1, susp(b), susp(a)),
    }
}

/// An ω-functor between free presentations, given by its values on
/// generators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawAction", into = "RawAction")]
pub struct GeneratorAction {
    dom: OmegaCatPresentation,
    cod: OmegaCatPresentation,
    images: BTreeMap<EnrichedCell, EnrichedCell>,
}

#[derive(Serialize, Deserialize)]
struct RawAction {
    dom: OmegaCatPresentation,
    cod: OmegaCatPresentation,
    images: Vec<(EnrichedCell, EnrichedCell)>,
}

impl TryFrom<RawAction> for GeneratorAction {
    type Error = Error;
    fn try_from(r: RawAction) -> Result<Self> {
        GeneratorAction::new(r.dom, r.cod, r.images.into_iter().collect())
    }
}

impl From<GeneratorAction> for RawAction {
    fn from(a: GeneratorAction) -> Self {
        RawAction {
            dom: a.dom,
            cod: a.cod,
            images: a.images.into_iter().collect(),
        }
    }
}

impl GeneratorAction {
    /// Validates that every generator has an image of its dimension and
    /// that boundaries are preserved.
    pub fn new(
        dom: OmegaCatPresentation,
        cod: OmegaCatPresentation,
        images: BTreeMap<EnrichedCell, EnrichedCell>,
    ) -> Result<GeneratorAction> {
        let gens = dom.generators();
        let target = cod.graph();
        if images.len() != gens.len() {
            return Err(Error::InvalidMorphism("one image per generator".into()));
        }
        for g in &gens {
            let img = images
                .get(g)
                .ok_or_else(|| Error::InvalidMorphism("missing generator image".into()))?;
            if img.dim() != g.dim() || !img.is_valid_in(&target) {
                return Err(Error::InvalidMorphism("image has the wrong type".into()));
            }
            if g.dim() > 0 {
                let n = g.dim() - 1;
                if images.get(&g.source(n)?) != Some(&img.source(n)?)
                    || images.get(&g.target(n)?) != Some(&img.target(n)?)
                {
                    return Err(Error::InvalidMorphism("boundaries are not preserved".into()));
                }
            }
        }
        Ok(GeneratorAction { dom, cod, images })
    }

    pub fn identity(p: &OmegaCatPresentation) -> GeneratorAction {
        GeneratorAction {
            dom: p.clone(),
            cod: p.clone(),
            images: p.generators().into_iter().map(|g| (g.clone(), g)).collect(),
        }
    }

    pub fn dom(&self) -> &OmegaCatPresentation {
        &self.dom
    }

    pub fn cod(&self) -> &OmegaCatPresentation {
        &self.cod
    }

    pub fn images(&self) -> &BTreeMap<EnrichedCell, EnrichedCell> {
        &self.images
    }

    /// The functor on an arbitrary cell, extended by the functor laws.
    pub fn apply(&self, c: &EnrichedCell) -> Result<EnrichedCell> {
        match split(c) {
            Split::Generator => self
                .images
                .get(c)
                .cloned()
                .ok_or_else(|| Error::InvalidCell("not a cell of the domain".into())),
            Split::Identity(z) => self.apply(&z)?.identity_at(c.dim()),
            Split::Compose(m, b, a) => EnrichedCell::compose(&self.apply(&b)?, &self.apply(&a)?, m),
        }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &GeneratorAction) -> Result<GeneratorAction> {
        if self.cod.graph() != next.dom.graph() {
            return Err(Error::Mismatch("functor codomain/domain".into()));
        }
        let images = self
            .images
            .iter()
            .map(|(g, v)| Ok((g.clone(), next.apply(v)?)))
            .collect::<Result<_>>()?;
        Ok(GeneratorAction {
            dom: self.dom.clone(),
            cod: next.cod.clone(),
            images,
        })
    }
}

/// All ω-functors `A → B`, by assigning generators in order of dimension.
/// `depth` bounds the generator dimension of `A`.
pub fn enumerate_omega_functors(
    a: &OmegaCatPresentation,
    b: &OmegaCatPresentation,
    depth: usize,
) -> Result<Vec<GeneratorAction>> {
    let gens = a.generators();
    let top = gens.iter().map(|g| g.dim()).max().unwrap_or(0);
    if top > depth {
        return Err(Error::Unsupported(format!(
            "generators of dimension {top} exceed depth {depth}"
        )));
    }
    let target = b.graph();
    let mut by_bounds: Vec<BTreeMap<(EnrichedCell, EnrichedCell), Vec<EnrichedCell>>> = vec![BTreeMap::new()];
    let objects = free_on_ograph_cells(&target, 0);
    for n in 1..=top {
        let mut idx: BTreeMap<_, Vec<EnrichedCell>> = BTreeMap::new();
        for c in free_on_ograph_cells(&target, n) {
            idx.entry((c.source(n - 1)?, c.target(n - 1)?)).or_default().push(c);
        }
        by_bounds.push(idx);
    }
    let mut out = Vec::new();
    let mut images = BTreeMap::new();
    #[allow(clippy::too_many_arguments)]
    fn go(
        k: usize,
        gens: &[EnrichedCell],
        objects: &[EnrichedCell],
        by_bounds: &[BTreeMap<(EnrichedCell, EnrichedCell), Vec<EnrichedCell>>],
        images: &mut BTreeMap<EnrichedCell, EnrichedCell>,
        a: &OmegaCatPresentation,
        b: &OmegaCatPresentation,
        out: &mut Vec<GeneratorAction>,
    ) -> Result<()> {
        if k == gens.len() {
            out.push(GeneratorAction {
                dom: a.clone(),
                cod: b.clone(),
                images: images.clone(),
            });
            return Ok(());
        }
        let g = &gens[k];
        let n = g.dim();
        let cands: &[EnrichedCell] = if n == 0 {
            objects
        } else {
            let key = (images[&g.source(n - 1)?].clone(), images[&g.target(n - 1)?].clone());
            by_bounds[n].get(&key).map(Vec::as_slice).unwrap_or(&[])
        };
        for c in cands {
            images.insert(g.clone(), c.clone());
            go(k + 1, gens, objects, by_bounds, images, a, b, out)?;
        }
        images.remove(g);
        Ok(())
    }
    go(0, &gens, &objects, &by_bounds, &mut images, a, b, &mut out)?;
    Ok(out)
}

/// Morphisms `G → 𝔘(∏_j 𝔉K_j)` of enriched graphs, counted structurally.
/// With a single factor this is the adjunct side of `𝔉 ⊣ 𝔘`.
pub fn count_adjunct_morphisms(g: &OGraph, factors: &[OGraph]) -> u128 {
    if g.object_count() == 0 {
        return 1;
    }
    let ranges: Vec<Vec<usize>> = factors.iter().map(|k| (0..k.object_count()).collect()).collect();
    let tuples = cartesian(&ranges);
    let mut dp = vec![1u128; tuples.len()];
    for e in g.edges() {
        let mut next = vec![0u128; tuples.len()];
        for (a, ta) in tuples.iter().enumerate() {
            if dp[a] == 0 {
                continue;
            }
            for (b, tb) in tuples.iter().enumerate() {
                if ta.iter().zip(tb).any(|(x, y)| x > y) {
                    continue;
                }
                let hom: Vec<OGraph> = factors
                    .iter()
                    .enumerate()
                    .flat_map(|(f, k)| k.edges()[ta[f]..tb[f]].iter().cloned())
                    .collect();
                next[b] += dp[a] * count_adjunct_morphisms(e, &hom);
            }
        }
        dp = next;
    }
    dp.iter().sum()
}

/// `Ψ` on objects: `𝔉 ∘ Υ`, with the trivial object sent to the empty
/// ω-category.
pub fn psi_obj(h: &ITreeObj) -> Result<OmegaCatPresentation> {
    if h.flavor() != Flavor::Ordinal {
        return Err(Error::Mismatch("Ψ expects an ordinal object".into()));
    }
    if h.is_trivial() {
        return Ok(OmegaCatPresentation::Empty);
    }
    Ok(OmegaCatPresentation::FreeOnOGraph { graph: upsilon(h)? })
}

/// `Ψg` on an arbitrary cell of `ΨH`.
pub fn psi_apply(g: &ITreeMor, c: &EnrichedCell) -> Result<EnrichedCell> {
    let root = g.root();
    match c {
        EnrichedCell::Object(x) => Ok(EnrichedCell::Object(root.apply(*x))),
        EnrichedCell::Seq { dim, from, to, items } => {
            let mut out = Vec::new();
            for (k, y) in items.iter().enumerate() {
                let i = from + k + 1;
                for j in root.apply(i - 1) + 1..=root.apply(i) {
                    out.push(psi_apply(g.child(j), y)?);
                }
            }
            Ok(EnrichedCell::Seq {
                dim: *dim,
                from: root.apply(*from),
                to: root.apply(*to),
                items: out,
            })
        }
    }
}

/// `Ψ` on morphisms, as an action on generators.
pub fn psi_mor(g: &ITreeMor) -> Result<GeneratorAction> {
    let dom = psi_obj(g.dom())?;
    let cod = psi_obj(g.cod())?;
    let images = dom
        .generators()
        .into_iter()
        .map(|x| Ok((x.clone(), psi_apply(g, &x)?)))
        .collect::<Result<_>>()?;
    Ok(GeneratorAction { dom, cod, images })
}

/// The morphism `g : H → K` with `Ψg` equal to a given functor, read off
/// from the functor's values on generators.
pub fn psi_reconstruct(h: &ITreeObj, k: &ITreeObj, f: &GeneratorAction) -> Result<ITreeMor> {
    fn go(h: &ITreeObj, k: &ITreeObj, images: &BTreeMap<EnrichedCell, EnrichedCell>) -> Result<ITreeMor> {
        if let Some(u) = ITreeMor::unique(h, k) {
            return Ok(u);
        }
        if k.is_trivial() {
            return Err(Error::InvalidMorphism("no functor into the empty ω-category".into()));
        }
        let object = |x: usize| match images.get(&EnrichedCell::Object(x)) {
            Some(EnrichedCell::Object(y)) => Ok(*y),
            _ => Err(Error::InvalidMorphism(format!("object {x} has no object image"))),
        };
        let root_images = (0..h.root().len()).map(object).collect::<Result<Vec<_>>>()?;
        let root = OrdMap::new(h.root(), k.root(), root_images)?;
        let w = wedge_map(&root);
        let mut children = Vec::new();
        for j in 0..k.children().len() {
            let i = w.apply(j);
            let (hi, kj) = (h.child(i), k.child(j));
            if hi.is_trivial() {
                children.push(ITreeMor::unique(hi, kj).expect("trivial ordinal objects are initial"));
                continue;
            }
            let offset = j - root.apply(i - 1) - 1;
            let mut sub = BTreeMap::new();
            for y in ograph_generators(&upsilon(hi)?) {
                let lifted = EnrichedCell::Seq {
                    dim: y.dim() + 1,
                    from: i - 1,
                    to: i,
                    items: vec![y.clone()],
                };
                match images.get(&lifted) {
                    Some(EnrichedCell::Seq { items, .. }) if offset < items.len() => {
                        sub.insert(y, items[offset].clone());
                    }
                    _ => return Err(Error::InvalidMorphism("generator image has the wrong shape".into())),
                }
            }
            children.push(go(hi, kj, &sub)?);
        }
        ITreeMor::new(h.clone(), k.clone(), root, children)
    }
    go(h, k, &f.images)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain2() -> GlobCard {
        GlobCard::suspend(2, &[GlobCard::point(), GlobCard::point()]).unwrap()
    }

    #[test]
    fn small_cell_counts() {
        assert_eq!(enumerate_cells(&GlobCard::point(), 0).len(), 1);
        assert_eq!(enumerate_cells(&GlobCard::point(), 3).len(), 1);
        let a = GlobCard::globe(1);
        let counts: Vec<usize> = (0..3).map(|n| enumerate_cells(&a, n).len()).collect();
        assert_eq!(counts, vec![2, 3, 3]);
        assert_eq!(enumerate_cells(&chain2(), 1).len(), 6);
    }

    #[test]
    fn cells_match_brute_force() {
        for x in enumerate_cardinals_brute(5) {
            for n in 0..=3 {
                assert_eq!(enumerate_cells(&x, n), enumerate_cells_brute(&x, n).unwrap());
            }
        }
    }

    #[test]
    fn arrow_boundaries() {
        let a = GlobCard::globe(1);
        let f = enumerate_cells(&a, 1).into_iter().find(|c| !c.is_degenerate()).unwrap();
        let s = m_source(&f, 0).unwrap();
        assert_eq!(s.map().maps(), &[vec![0]]);
        assert_eq!(m_target(&f, 0).unwrap().map().maps(), &[vec![1]]);
        assert!(is_indecomposable(&f));
        assert_eq!(l_functor(&f).unwrap(), EnrichedCell::Seq {
            dim: 1,
            from: 0,
            to: 1,
            items: vec![EnrichedCell::Object(0)],
        });
    }

    #[test]
    fn chain_composite_and_decomposition() {
        let x = chain2();
        let ones = enumerate_cells(&x, 1);
        let proper: Vec<&Cell> = ones.iter().filter(|c| !c.is_degenerate()).collect();
        let whole = proper.iter().find(|c| c.shape() == &x).unwrap();
        assert!(!is_m_indecomposable(whole, 0));
        let parts = zero_decompose(whole).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(&compose_cells(&parts[1], &parts[0], 0).unwrap(), *whole);
    }

    #[test]
    fn unit_law_with_degenerate_cell() {
        let x = GlobCard::globe(2);
        for c in enumerate_cells(&x, 2) {
            let id = m_target(&c, 1).unwrap().identity_at(2).unwrap();
            assert_eq!(compose_cells(&id, &c, 1).unwrap(), c);
        }
    }

    #[test]
    fn enriched_counts() {
        let arrow = OGraph::Chain(vec![OGraph::point()]);
        assert_eq!(free_on_ograph_cells(&arrow, 1).len(), 3);
        for n in 0..4 {
            assert_eq!(free_on_ograph_cells(&OGraph::point(), n).len(), 1);
        }
    }

    #[test]
    fn endofunctors_of_an_arrow() {
        let p = OmegaCatPresentation::FreeOnGlobCard { card: GlobCard::globe(1) };
        assert_eq!(enumerate_omega_functors(&p, &p, 3).unwrap().len(), 3);
        let e = OmegaCatPresentation::Empty;
        assert_eq!(enumerate_omega_functors(&e, &p, 0).unwrap().len(), 1);
        assert_eq!(enumerate_omega_functors(&p, &e, 3).unwrap().len(), 0);
    }

    #[test]
    fn cell_json() {
        let c = enumerate_cells(&GlobCard::globe(1), 1).pop().unwrap();
        let v = serde_json::to_value(&c).unwrap();
        assert!(v.get("base").is_some() && v.get("shape").is_some() && v.get("dim").is_some());
        assert_eq!(serde_json::from_value::<Cell>(v).unwrap(), c);
    }
}
