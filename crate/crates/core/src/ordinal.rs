//! Finite ordinals `[n] = {0, …, n}`, monotone maps, interval maps and the
//! duality functors `(−)^∨ : I₊^op → Δ₊` and `(−)^∧ : Δ₊ → I₊^op`.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// The ordinal `[n]`; `[-1]` is the empty ordinal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct Ordinal(i32);

impl Ordinal {
    pub const EMPTY: Ordinal = Ordinal(-1);
    pub const POINT: Ordinal = Ordinal(0);

    pub fn new(n: i64) -> Result<Self> {
        if n < -1 || n > i32::MAX as i64 {
            return Err(Error::InvalidOrdinal(n));
        }
        Ok(Ordinal(n as i32))
    }

    pub fn n(self) -> i64 {
        self.0 as i64
    }

    /// Number of elements, `n + 1`.
    pub fn len(self) -> usize {
        (self.0 + 1) as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == -1
    }

    /// `[n] + [0] = [n + 1]`.
    pub fn succ(self) -> Ordinal {
        Ordinal(self.0 + 1)
    }

    /// Largest element; `None` for `[-1]`.
    pub fn top(self) -> Option<usize> {
        (self.0 >= 0).then_some(self.0 as usize)
    }
}

impl TryFrom<i64> for Ordinal {
    type Error = Error;
    fn try_from(n: i64) -> Result<Self> {
        Ordinal::new(n)
    }
}

impl From<Ordinal> for i64 {
    fn from(o: Ordinal) -> i64 {
        o.n()
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0)
    }
}

/// A monotone map `[m] → [n]` stored by its images.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawOrdMap", into = "RawOrdMap")]
pub struct OrdMap {
    dom: Ordinal,
    cod: Ordinal,
    images: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawOrdMap {
    dom: i64,
    cod: i64,
    images: Vec<usize>,
}

impl TryFrom<RawOrdMap> for OrdMap {
    type Error = Error;
    fn try_from(r: RawOrdMap) -> Result<Self> {
        OrdMap::new(Ordinal::new(r.dom)?, Ordinal::new(r.cod)?, r.images)
    }
}

impl From<OrdMap> for RawOrdMap {
    fn from(f: OrdMap) -> Self {
        RawOrdMap {
            dom: f.dom.n(),
            cod: f.cod.n(),
            images: f.images,
        }
    }
}

impl OrdMap {
    pub fn new(dom: Ordinal, cod: Ordinal, images: Vec<usize>) -> Result<Self> {
        if images.len() != dom.len() {
            return Err(Error::Mismatch(format!(
                "{} images for domain {}",
                images.len(),
                dom
            )));
        }
        for (i, &v) in images.iter().enumerate() {
            if v >= cod.len() {
                return Err(Error::OutOfRange {
                    what: "image",
                    value: v as i64,
                    max: cod.n(),
                });
            }
            if i > 0 && images[i - 1] > v {
                return Err(Error::NotMonotone(i));
            }
        }
        Ok(OrdMap { dom, cod, images })
    }

    pub fn identity(o: Ordinal) -> Self {
        OrdMap {
            dom: o,
            cod: o,
            images: (0..o.len()).collect(),
        }
    }

    pub fn dom(&self) -> Ordinal {
        self.dom
    }

    pub fn cod(&self) -> Ordinal {
        self.cod
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `g ∘ f` with `g = self`.
    pub fn compose(&self, f: &OrdMap) -> Result<OrdMap> {
        if f.cod != self.dom {
            return Err(Error::Mismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.dom, self.cod, f.dom, f.cod
            )));
        }
        Ok(OrdMap {
            dom: f.dom,
            cod: self.cod,
            images: f.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn preserves_top(&self) -> bool {
        match (self.dom.top(), self.cod.top()) {
            (Some(m), Some(n)) => self.images[m] == n,
            (None, _) => self.cod.is_empty(),
            (Some(_), None) => false,
        }
    }

    pub fn preserves_bottom(&self) -> bool {
        match self.images.first() {
            Some(&v) => v == 0,
            None => self.cod.is_empty(),
        }
    }

    /// `γ^ℓ(j) = min{i : j ≤ γ(i)}`.
    pub fn left_adjoint(&self) -> Result<OrdMap> {
        if !self.preserves_top() {
            return Err(Error::NoAdjoint("left", "largest"));
        }
        let images = (0..self.cod.len())
            .map(|j| {
                self.images
                    .iter()
                    .position(|&v| j <= v)
                    .expect("top is preserved")
            })
            .collect();
        Ok(OrdMap {
            dom: self.cod,
            cod: self.dom,
            images,
        })
    }

    /// `γ^r(j) = max{i : γ(i) ≤ j}`.
    pub fn right_adjoint(&self) -> Result<OrdMap> {
        if !self.preserves_bottom() {
            return Err(Error::NoAdjoint("right", "least"));
        }
        let images = (0..self.cod.len())
            .map(|j| {
                self.images
                    .iter()
                    .rposition(|&v| v <= j)
                    .expect("bottom is preserved")
            })
            .collect();
        Ok(OrdMap {
            dom: self.cod,
            cod: self.dom,
            images,
        })
    }

    /// `γ + [0] : [m+1] → [n+1]`, sending the new top to the new top.
    pub fn plus_point(&self) -> OrdMap {
        let mut images = self.images.clone();
        images.push(self.cod.len());
        OrdMap {
            dom: self.dom.succ(),
            cod: self.cod.succ(),
            images,
        }
    }

    /// Minimum and maximum of the image, if any.
    pub fn image_bounds(&self) -> Option<(usize, usize)> {
        Some((*self.images.first()?, *self.images.last()?))
    }
}

impl fmt::Display for OrdMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {} -> {}", self.images, self.dom, self.cod)
    }
}

/// A monotone map between non-empty ordinals preserving both endpoints.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "OrdMap", into = "OrdMap")]
pub struct IntervalMap(OrdMap);

impl TryFrom<OrdMap> for IntervalMap {
    type Error = Error;
    fn try_from(f: OrdMap) -> Result<Self> {
        IntervalMap::new(f)
    }
}

impl From<IntervalMap> for OrdMap {
    fn from(f: IntervalMap) -> OrdMap {
        f.0
    }
}

impl IntervalMap {
    pub fn new(f: OrdMap) -> Result<Self> {
        if f.dom.is_empty() || f.cod.is_empty() {
            return Err(Error::NotInterval("intervals are non-empty".into()));
        }
        if !f.preserves_bottom() || !f.preserves_top() {
            return Err(Error::NotInterval(format!("{f} moves an endpoint")));
        }
        Ok(IntervalMap(f))
    }

    pub fn from_images(m: i64, n: i64, images: Vec<usize>) -> Result<Self> {
        IntervalMap::new(OrdMap::new(Ordinal::new(m)?, Ordinal::new(n)?, images)?)
    }

    pub fn identity(o: Ordinal) -> Result<Self> {
        IntervalMap::new(OrdMap::identity(o))
    }

    pub fn underlying(&self) -> &OrdMap {
        &self.0
    }

    pub fn into_underlying(self) -> OrdMap {
        self.0
    }

    pub fn dom(&self) -> Ordinal {
        self.0.dom
    }

    pub fn cod(&self) -> Ordinal {
        self.0.cod
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0.images[i]
    }

    pub fn compose(&self, f: &IntervalMap) -> Result<IntervalMap> {
        Ok(IntervalMap(self.0.compose(&f.0)?))
    }
}

/// `[m]^∨ = [m − 1]` for an interval `[m]`.
pub fn vee_obj(o: Ordinal) -> Result<Ordinal> {
    if o.is_empty() {
        return Err(Error::NotInterval("[-1] is not an interval".into()));
    }
    Ok(Ordinal(o.0 - 1))
}

/// `[n]^∧ = [n + 1]`.
pub fn wedge_obj(o: Ordinal) -> Ordinal {
    o.succ()
}

/// `f^∨ : [n−1] → [m−1]`, the right adjoint of `f : [m] → [n]` restricted
/// away from the top.
pub fn vee_map(f: &IntervalMap) -> OrdMap {
    let r = f.0.right_adjoint().expect("interval maps preserve bottom");
    let mut images = r.images;
    images.pop();
    OrdMap {
        dom: Ordinal(f.cod().0 - 1),
        cod: Ordinal(f.dom().0 - 1),
        images,
    }
}

/// `g^∧ = (g + [0])^ℓ : [n+1] → [m+1]` for `g : [m] → [n]`.
pub fn wedge_map(g: &OrdMap) -> IntervalMap {
    let l = g.plus_point().left_adjoint().expect("g + [0] preserves top");
    IntervalMap(l)
}

/// The fiber of `g^∧` over `j`, computed from the adjoint.
pub fn wedge_fiber(g: &OrdMap, j: usize) -> Result<Vec<usize>> {
    if j > g.dom.len() {
        return Err(Error::OutOfRange {
            what: "fiber index",
            value: j as i64,
            max: g.dom.len() as i64,
        });
    }
    let w = wedge_map(g);
    Ok((0..w.dom().len()).filter(|&i| w.apply(i) == j).collect())
}

/// The pin: the fiber of `g^∧` over `j` is `{g(j−1)+1, …, g(j)}` with the
/// conventions `g(−1)+1 = 0` and `g(m+1) = n+1`.
pub fn pin_fiber(g: &OrdMap, j: usize) -> Result<Vec<usize>> {
    let m1 = g.dom.len();
    if j > m1 {
        return Err(Error::OutOfRange {
            what: "fiber index",
            value: j as i64,
            max: m1 as i64,
        });
    }
    let lo = if j == 0 { 0 } else { g.images[j - 1] + 1 };
    let hi = if j == m1 { g.cod.len() } else { g.images[j] };
    Ok((lo..=hi).collect())
}

/// Whether `g^∧` sends `i` to an endpoint of `[m+1]`: true iff `i` lies at or
/// below the image of `g` or strictly above it.
pub fn endpoint_outside(g: &OrdMap, i: usize) -> Result<bool> {
    if i > g.cod.len() {
        return Err(Error::OutOfRange {
            what: "element",
            value: i as i64,
            max: g.cod.len() as i64,
        });
    }
    Ok(match g.image_bounds() {
        None => true,
        Some((lo, hi)) => i <= lo || i > hi,
    })
}

/// All monotone maps `[m] → [n]`, in lexicographic order of images.
pub fn ord_maps(m: Ordinal, n: Ordinal) -> Vec<OrdMap> {
    fn go(len: usize, n: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(len, n, v, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    go(m.len(), n.len(), 0, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|images| OrdMap {
            dom: m,
            cod: n,
            images,
        })
        .collect()
}

/// All interval maps `[m] → [n]`, generated from their interior values.
pub fn interval_maps(m: Ordinal, n: Ordinal) -> Vec<IntervalMap> {
    if m.is_empty() || n.is_empty() {
        return Vec::new();
    }
    if m.0 == 0 {
        return if n.0 == 0 {
            vec![IntervalMap(OrdMap::identity(m))]
        } else {
            Vec::new()
        };
    }
    let interior = (m.0 - 1) as usize;
    let top = n.0 as usize;
    let mut out = Vec::new();
    let mut cur = vec![0usize; interior];
    loop {
        let mut images = Vec::with_capacity(m.len());
        images.push(0);
        images.extend_from_slice(&cur);
        images.push(top);
        out.push(IntervalMap(OrdMap {
            dom: m,
            cod: n,
            images,
        }));
        // next weakly increasing sequence in 0..=top
        let mut k = interior;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < top {
                let v = cur[k] + 1;
                for c in cur.iter_mut().skip(k) {
                    *c = v;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn om(m: i64, n: i64, im: &[usize]) -> OrdMap {
        OrdMap::new(Ordinal::new(m).unwrap(), Ordinal::new(n).unwrap(), im.to_vec()).unwrap()
    }

    #[test]
    fn compose_pointwise() {
        let f = om(1, 2, &[0, 2]);
        let g = om(2, 1, &[0, 0, 1]);
        assert_eq!(g.compose(&f).unwrap(), om(1, 1, &[0, 1]));
        let id = OrdMap::identity(Ordinal::new(2).unwrap());
        assert_eq!(id.compose(&f).unwrap(), f);
        assert!(f.compose(&f).is_err());
    }

    #[test]
    fn adjoints() {
        let g = om(1, 2, &[0, 2]);
        assert_eq!(g.left_adjoint().unwrap(), om(2, 1, &[0, 1, 1]));
        let h = om(1, 2, &[0, 1]);
        assert_eq!(
            h.left_adjoint().unwrap_err(),
            Error::NoAdjoint("left", "largest")
        );
        assert_eq!(g.right_adjoint().unwrap(), om(2, 1, &[0, 0, 1]));
    }

    #[test]
    fn duality_examples() {
        let f = IntervalMap::from_images(1, 1, vec![0, 1]).unwrap();
        assert_eq!(vee_map(&f), om(0, 0, &[0]));
        assert_eq!(wedge_map(&om(0, 1, &[0])).underlying(), &om(2, 1, &[0, 1, 1]));
        assert_eq!(wedge_map(&om(0, 2, &[1])).underlying(), &om(3, 1, &[0, 0, 1, 1]));
        let e = OrdMap::new(Ordinal::EMPTY, Ordinal::new(1).unwrap(), vec![]).unwrap();
        assert_eq!(wedge_map(&e).underlying(), &om(2, 0, &[0, 0, 0]));
        assert_eq!(vee_obj(Ordinal::new(3).unwrap()).unwrap().n(), 2);
        assert!(vee_obj(Ordinal::EMPTY).is_err());
    }

    #[test]
    fn pin_examples() {
        let g = om(0, 1, &[0]);
        assert_eq!(pin_fiber(&g, 0).unwrap(), vec![0]);
        assert_eq!(pin_fiber(&g, 1).unwrap(), vec![1, 2]);
        assert!(pin_fiber(&g, 2).is_err());
        let e = OrdMap::new(Ordinal::EMPTY, Ordinal::new(1).unwrap(), vec![]).unwrap();
        assert_eq!(pin_fiber(&e, 0).unwrap(), vec![0, 1, 2]);
        assert!(endpoint_outside(&e, 1).unwrap());
        let g = om(1, 3, &[1, 2]);
        let outside: Vec<bool> = (0..5).map(|i| endpoint_outside(&g, i).unwrap()).collect();
        assert_eq!(outside, vec![true, true, false, true, true]);
    }

    #[test]
    fn interval_validation() {
        assert!(IntervalMap::from_images(1, 2, vec![1, 2]).is_err());
        assert!(IntervalMap::from_images(0, 1, vec![0]).is_err());
        assert!(OrdMap::new(Ordinal::new(1).unwrap(), Ordinal::new(1).unwrap(), vec![1, 0]).is_err());
        assert!(Ordinal::new(-2).is_err());
    }

    #[test]
    fn enumeration_counts() {
        // monotone maps [m] -> [n]: C(m+n+2, m+1)
        let o = |k| Ordinal::new(k).unwrap();
        assert_eq!(ord_maps(o(1), o(2)).len(), 6);
        assert_eq!(ord_maps(o(-1), o(3)).len(), 1);
        assert_eq!(ord_maps(o(0), o(-1)).len(), 0);
        assert_eq!(interval_maps(o(3), o(3)).len(), 10);
        assert_eq!(interval_maps(o(0), o(0)).len(), 1);
    }
}
