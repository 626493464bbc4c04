//! Ordinal graphs: a finite chain of objects with a non-empty ordinal graph
//! on each successor pair. The functors `Γ : GlobCard → OGraph` and
//! `Γ′ : OGraph → GlobCard`, and the object maps `Υ`, `Υ′` to and from iΔ₊.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::globular::{GlobCard, GlobMor};
use crate::itree::{cartesian, Flavor, ITreeObj};
use crate::ordinal::Ordinal;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawOGraph", into = "RawOGraph")]
pub enum OGraph {
    Empty,
    /// `edges[i]` is the edge object between objects `i` and `i + 1`.
    Chain(Vec<OGraph>),
}

#[derive(Serialize, Deserialize)]
struct RawOGraph {
    vertices: usize,
    #[serde(default)]
    edges: Vec<OGraph>,
}

impl TryFrom<RawOGraph> for OGraph {
    type Error = Error;
    fn try_from(r: RawOGraph) -> Result<Self> {
        if r.vertices == 0 {
            if !r.edges.is_empty() {
                return Err(Error::InvalidObject("the empty graph has no edges".into()));
            }
            return Ok(OGraph::Empty);
        }
        OGraph::chain(r.vertices, r.edges)
    }
}

impl From<OGraph> for RawOGraph {
    fn from(g: OGraph) -> Self {
        match g {
            OGraph::Empty => RawOGraph {
                vertices: 0,
                edges: vec![],
            },
            OGraph::Chain(edges) => RawOGraph {
                vertices: edges.len() + 1,
                edges,
            },
        }
    }
}

impl OGraph {
    pub fn chain(vertices: usize, edges: Vec<OGraph>) -> Result<OGraph> {
        if vertices == 0 || edges.len() + 1 != vertices {
            return Err(Error::InvalidObject(format!(
                "{vertices} objects need {} edges, got {}",
                vertices.saturating_sub(1),
                edges.len()
            )));
        }
        if edges.contains(&OGraph::Empty) {
            return Err(Error::InvalidObject("successor edges must be non-empty".into()));
        }
        Ok(OGraph::Chain(edges))
    }

    pub fn point() -> OGraph {
        OGraph::Chain(vec![])
    }

    pub fn object_count(&self) -> usize {
        match self {
            OGraph::Empty => 0,
            OGraph::Chain(e) => e.len() + 1,
        }
    }

    pub fn edges(&self) -> &[OGraph] {
        match self {
            OGraph::Empty => &[],
            OGraph::Chain(e) => e,
        }
    }

    pub fn dim(&self) -> i64 {
        match self {
            OGraph::Empty => -1,
            OGraph::Chain(e) => e.iter().map(|g| g.dim() + 1).max().unwrap_or(0),
        }
    }

    /// Objects at all depths; equals the vertex count of `Γ′G`.
    pub fn total_vertices(&self) -> usize {
        self.object_count() + self.edges().iter().map(|e| e.total_vertices()).sum::<usize>()
    }
}

impl fmt::Display for OGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OGraph::Empty => write!(f, "∅"),
            OGraph::Chain(e) => {
                write!(f, "•")?;
                for g in e {
                    write!(f, "-{{{g}}}-•")?;
                }
                Ok(())
            }
        }
    }
}

/// A morphism of ordinal graphs: an incremental object map and a morphism
/// `edges[i] : G(i, i+1) → H(f i, f i + 1)` for every edge of the domain.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OGraphMor {
    dom: OGraph,
    cod: OGraph,
    objects: Vec<usize>,
    edges: Vec<OGraphMor>,
}

impl OGraphMor {
    pub fn new(dom: OGraph, cod: OGraph, objects: Vec<usize>, edges: Vec<OGraphMor>) -> Result<OGraphMor> {
        if objects.len() != dom.object_count() || edges.len() != dom.edges().len() {
            return Err(Error::InvalidMorphism("object/edge data has the wrong size".into()));
        }
        if objects.iter().any(|&v| v >= cod.object_count()) {
            return Err(Error::InvalidMorphism("object map out of range".into()));
        }
        if objects.windows(2).any(|w| w[1] != w[0] + 1) {
            return Err(Error::InvalidMorphism("object map is not incremental".into()));
        }
        for (i, e) in edges.iter().enumerate() {
            if e.dom != dom.edges()[i] || e.cod != cod.edges()[objects[i]] {
                return Err(Error::InvalidMorphism(format!("edge {i} is mistyped")));
            }
        }
        Ok(OGraphMor {
            dom,
            cod,
            objects,
            edges,
        })
    }

    pub fn identity(g: &OGraph) -> OGraphMor {
        OGraphMor {
            dom: g.clone(),
            cod: g.clone(),
            objects: (0..g.object_count()).collect(),
            edges: g.edges().iter().map(OGraphMor::identity).collect(),
        }
    }

    pub fn dom(&self) -> &OGraph {
        &self.dom
    }

    pub fn cod(&self) -> &OGraph {
        &self.cod
    }

    pub fn objects(&self) -> &[usize] {
        &self.objects
    }

    pub fn edges(&self) -> &[OGraphMor] {
        &self.edges
    }

    pub fn compose(&self, f: &OGraphMor) -> Result<OGraphMor> {
        if f.cod != self.dom {
            return Err(Error::Mismatch("ordinal graph morphism codomain/domain".into()));
        }
        let objects = f.objects.iter().map(|&x| self.objects[x]).collect();
        let edges = f
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| self.edges[f.objects[i]].compose(e))
            .collect::<Result<Vec<_>>>()?;
        Ok(OGraphMor {
            dom: f.dom.clone(),
            cod: self.cod.clone(),
            objects,
            edges,
        })
    }
}

/// `Γ` on objects.
pub fn gamma(x: &GlobCard) -> OGraph {
    if x.is_empty() {
        return OGraph::Empty;
    }
    let p = x.level_size(0) - 1;
    OGraph::Chain(
        (0..p)
            .map(|i| gamma(&x.restrict(0, i, i + 1).expect("consecutive").0))
            .collect(),
    )
}

/// `Γ` on morphisms.
pub fn gamma_mor(f: &GlobMor) -> OGraphMor {
    let dom = gamma(f.dom());
    let cod = gamma(f.cod());
    if f.dom().is_empty() {
        return OGraphMor {
            dom,
            cod,
            objects: vec![],
            edges: vec![],
        };
    }
    let edges = (0..f.dom().level_size(0) - 1)
        .map(|i| gamma_mor(&f.restrict(0, i).expect("incremental")))
        .collect();
    OGraphMor {
        dom,
        cod,
        objects: f.maps()[0].clone(),
        edges,
    }
}

/// `Γ′` on objects.
pub fn gamma_prime(g: &OGraph) -> GlobCard {
    match g {
        OGraph::Empty => GlobCard::empty(),
        OGraph::Chain(e) => {
            let parts: Vec<GlobCard> = e.iter().map(gamma_prime).collect();
            GlobCard::suspend(e.len(), &parts).expect("edges are non-empty")
        }
    }
}

/// `Γ′` on morphisms.
pub fn gamma_prime_mor(f: &OGraphMor) -> GlobMor {
    let cod = gamma_prime(&f.cod);
    if f.dom == OGraph::Empty {
        return GlobMor::new(GlobCard::empty(), cod, vec![]).expect("empty morphism");
    }
    let parts: Vec<GlobMor> = f.edges.iter().map(gamma_prime_mor).collect();
    let cod_parts: Vec<GlobCard> = f.cod.edges().iter().map(gamma_prime).collect();
    GlobMor::suspend(&f.objects, &parts, &cod_parts).expect("suspension of a valid morphism")
}

/// `Υ : Obj iΔ₊ → Obj OGraph`.
pub fn upsilon(h: &ITreeObj) -> Result<OGraph> {
    if h.flavor() != Flavor::Ordinal {
        return Err(Error::Mismatch("Υ expects an ordinal object".into()));
    }
    if h.is_trivial() {
        return Ok(OGraph::Empty);
    }
    let p = h.root().len() - 1;
    let edges = (1..=p).map(|i| upsilon(h.child(i))).collect::<Result<Vec<_>>>()?;
    Ok(OGraph::Chain(edges))
}

/// `Υ′ : Obj OGraph → Obj iΔ₊`.
pub fn upsilon_prime(g: &OGraph) -> ITreeObj {
    match g {
        OGraph::Empty => ITreeObj::trivial(Flavor::Ordinal),
        OGraph::Chain(e) => {
            let kids: Vec<ITreeObj> = e.iter().map(upsilon_prime).collect();
            let obj = ITreeObj::from_interior(Flavor::Ordinal, kids).expect("well-formed");
            debug_assert_eq!(obj.root(), Ordinal::new(e.len() as i64).expect("valid"));
            obj
        }
    }
}

/// All ordinal graphs with at most `max_total` total vertices, including
/// the empty graph, sorted.
pub fn enumerate_ographs(max_total: usize) -> Vec<OGraph> {
    // by_total[k] = non-empty graphs with exactly k total vertices
    let mut by_total: Vec<Vec<OGraph>> = vec![Vec::new(); max_total + 1];
    for k in 1..=max_total {
        let mut found = Vec::new();
        for p in 0..k {
            // p edges with totals summing to k - p - 1, each ≥ 1
            let budget = k - p - 1;
            for split in splits(budget, p) {
                let lists: Vec<Vec<OGraph>> = split.iter().map(|&t| by_total[t].clone()).collect();
                for edges in cartesian(&lists) {
                    found.push(OGraph::Chain(edges));
                }
            }
        }
        by_total[k] = found;
    }
    let mut out: Vec<OGraph> = vec![OGraph::Empty];
    out.extend(by_total.into_iter().flatten());
    out.sort();
    out
}

/// Ordered ways of writing `total` as `parts` positive summands.
fn splits(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for mut rest in splits(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All morphisms `G → H`.
pub fn enumerate_ograph_morphisms(g: &OGraph, h: &OGraph) -> Vec<OGraphMor> {
    let (p, q) = (g.object_count(), h.object_count());
    if p == 0 {
        return vec![OGraphMor {
            dom: g.clone(),
            cod: h.clone(),
            objects: vec![],
            edges: vec![],
        }];
    }
    let mut out = Vec::new();
    for start in 0..q {
        if start + p > q {
            break;
        }
        let lists: Vec<Vec<OGraphMor>> = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, e)| enumerate_ograph_morphisms(e, &h.edges()[start + i]))
            .collect();
        for edges in cartesian(&lists) {
            out.push(OGraphMor {
                dom: g.clone(),
                cod: h.clone(),
                objects: (start..start + p).collect(),
                edges,
            });
        }
    }
    out
}

/// `|OGraph(G, H)|`.
pub fn count_ograph_morphisms(g: &OGraph, h: &OGraph) -> u128 {
    let (p, q) = (g.object_count(), h.object_count());
    if p == 0 {
        return 1;
    }
    (0..q)
        .filter(|&s| s + p <= q)
        .map(|s| {
            g.edges()
                .iter()
                .enumerate()
                .map(|(i, e)| count_ograph_morphisms(e, &h.edges()[s + i]))
                .product::<u128>()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrow_round_trip() {
        let a = GlobCard::globe(1);
        let g = gamma(&a);
        assert_eq!(g, OGraph::Chain(vec![OGraph::point()]));
        assert_eq!(gamma_prime(&g), a);
        assert_eq!(g.dim(), 1);
    }

    #[test]
    fn gamma_inverse_on_cardinals() {
        use crate::globular::{enumerate_cardinals_brute, enumerate_glob_morphisms};
        let cards = enumerate_cardinals_brute(6);
        for c in &cards {
            assert_eq!(gamma_prime(&gamma(c)), *c);
        }
        for a in cards.iter().filter(|c| c.vertex_count() <= 5) {
            for b in cards.iter().filter(|c| c.vertex_count() <= 5) {
                let ms = enumerate_glob_morphisms(a, b);
                assert_eq!(ms.len() as u128, count_ograph_morphisms(&gamma(a), &gamma(b)));
                for f in &ms {
                    assert_eq!(gamma_prime_mor(&gamma_mor(f)), *f);
                }
            }
        }
    }

    #[test]
    fn counts_by_total_vertices() {
        let all = enumerate_ographs(7);
        let counts: Vec<usize> = (0..=7)
            .map(|k| all.iter().filter(|g| g.total_vertices() == k).count())
            .collect();
        assert_eq!(counts, vec![1, 1, 0, 1, 0, 2, 0, 5]);
    }

    #[test]
    fn upsilon_round_trip() {
        for g in enumerate_ographs(7) {
            assert_eq!(upsilon(&upsilon_prime(&g)).unwrap(), g);
        }
        let h = ITreeObj::from_interior(
            Flavor::Ordinal,
            vec![ITreeObj::from_interior(Flavor::Ordinal, vec![]).unwrap()],
        )
        .unwrap();
        assert_eq!(upsilon(&h).unwrap(), OGraph::Chain(vec![OGraph::point()]));
    }

    #[test]
    fn serde_shape() {
        let g = OGraph::Chain(vec![OGraph::point()]);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"vertices":2,"edges":[{"vertices":1,"edges":[]}]}"#);
        assert_eq!(serde_json::from_str::<OGraph>(&s).unwrap(), g);
        assert!(serde_json::from_str::<OGraph>(r#"{"vertices":2,"edges":[{"vertices":0}]}"#).is_err());
    }

    #[test]
    fn morphism_counts() {
        let a = OGraph::Chain(vec![OGraph::point()]);
        let two = OGraph::Chain(vec![OGraph::point(), OGraph::point()]);
        assert_eq!(count_ograph_morphisms(&a, &two), 2);
        assert_eq!(enumerate_ograph_morphisms(&a, &two).len(), 2);
        assert_eq!(count_ograph_morphisms(&OGraph::point(), &two), 3);
    }
}
