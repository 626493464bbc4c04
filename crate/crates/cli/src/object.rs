//! The tagged JSON envelope shared by every verb.

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use thetadisk::disk::Disk;
use thetadisk::forest::LevelTree;
use thetadisk::globular::GlobCard;
use thetadisk::itree::{ITreeMor, ITreeObj};
use thetadisk::labeled::{LabeledTree, LabeledTreeMor};
use thetadisk::ograph::OGraph;
use thetadisk::omega::{Cell, EnrichedCell, GeneratorAction, OmegaCatPresentation};
use thetadisk::ordinal::{IntervalMap, OrdMap, Ordinal};

/// Every object the tool reads or writes, as `{"kind": ..., "value": ...}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Object {
    Ordinal(Ordinal),
    IntervalMap(IntervalMap),
    OrdinalMap(OrdMap),
    Itree(ITreeObj),
    ItreeMorphism(ITreeMor),
    Forest(LevelTree),
    Disk(Disk),
    Cardinal(GlobCard),
    Ograph(OGraph),
    LabeledTree(LabeledTree),
    LabeledMorphism(LabeledTreeMor),
    Cell(Cell),
    EnrichedCell(EnrichedCell),
    OmegaCategory(OmegaCatPresentation),
    Functor(GeneratorAction),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Ordinal(_) => "ordinal",
            Object::IntervalMap(_) => "interval_map",
            Object::OrdinalMap(_) => "ordinal_map",
            Object::Itree(_) => "itree",
            Object::ItreeMorphism(_) => "itree_morphism",
            Object::Forest(_) => "forest",
            Object::Disk(_) => "disk",
            Object::Cardinal(_) => "cardinal",
            Object::Ograph(_) => "ograph",
            Object::LabeledTree(_) => "labeled_tree",
            Object::LabeledMorphism(_) => "labeled_morphism",
            Object::Cell(_) => "cell",
            Object::EnrichedCell(_) => "enriched_cell",
            Object::OmegaCategory(_) => "omega_category",
            Object::Functor(_) => "functor",
        }
    }

    /// Canonical one-line JSON with sorted keys.
    pub fn to_json(&self) -> String {
        serde_json::to_value(self).expect("objects serialize").to_string()
    }

    pub fn parse(text: &str) -> Result<Object> {
        let value: Value = serde_json::from_str(text).context("input is not JSON")?;
        if value.get("kind").and_then(Value::as_str).is_none() {
            bail!("input has no string \"kind\" field");
        }
        serde_json::from_value(value).context("input does not match the schema for its kind")
    }
}

/// Read an input argument: inline JSON, `-` or nothing for stdin, else a
/// path.
pub fn read_input(arg: Option<&str>) -> Result<String> {
    match arg {
        None | Some("-") => std::io::read_to_string(std::io::stdin()).context("reading stdin"),
        Some(s) if s.trim_start().starts_with('{') => Ok(s.to_string()),
        Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {path}")),
    }
}

pub const SCHEMAS: &str = "\
JSON objects are wrapped as {\"kind\": K, \"value\": V} and written with sorted keys.

  ordinal          V = n (an integer >= -1), standing for [n]
                   {\"kind\":\"ordinal\",\"value\":3}
  interval_map     V = {\"dom\":m,\"cod\":n,\"images\":[...]} preserving both endpoints
  ordinal_map      V = {\"dom\":m,\"cod\":n,\"images\":[...]} monotone
  itree            V = {\"flavor\":\"interval\"|\"ordinal\",\"root\":n,\"children\":[itree...]}
                   {\"kind\":\"itree\",\"value\":{\"flavor\":\"interval\",\"root\":1,\"children\":[]}}
  itree_morphism   V = {\"dom\":itree,\"cod\":itree,\"root\":[images],\"children\":[...]}
  forest           V = {\"levels\":[sizes],\"parents\":[[...],...]}
  disk             V = {\"levels\":[...],\"parents\":[...],\"fiber_sizes\":[[...],...]}
  cardinal         V = {\"levels\":[sizes],\"src\":[[...]],\"tgt\":[[...]]}
                   {\"kind\":\"cardinal\",\"value\":{\"levels\":[2,1],\"src\":[[0]],\"tgt\":[[1]]}}
  ograph           V = {\"vertices\":k,\"edges\":[ograph...]} (k-1 edges), or {\"vertices\":0}
  labeled_tree     V = {\"flavor\":...,\"levels\":[...],\"parents\":[...],\"labels\":[[n...],...]}
  labeled_morphism V = {\"direction\":\"forward\"|\"op\",\"dom\":...,\"cod\":...,\"alphas\":[[ordinal_map...]]}
  cell             V = {\"base\":cardinal,\"shape\":cardinal,\"map\":[[...]],\"dim\":n}
  enriched_cell    V = {\"object\":i} or {\"seq\":{\"dim\":n,\"from\":i,\"to\":j,\"items\":[...]}}
  omega_category   V = {\"kind\":\"empty\"|\"terminal\"|\"free_on_glob_card\"|\"free_on_o_graph\",...}
  functor          V = {\"dom\":omega_category,\"cod\":omega_category,\"images\":[[gen,image],...]}

Results: {\"kind\":\"hom_count\",\"value\":N}, {\"kind\":\"cell_counts\",\"value\":[N0,N1,...]},
and verification reports, one JSON object per line.";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordinal_round_trip() {
        let o = Object::parse(r#"{"kind":"ordinal","value":3}"#).unwrap();
        assert_eq!(o.to_json(), r#"{"kind":"ordinal","value":3}"#);
        assert!(Object::parse(r#"{"value":3}"#).is_err());
        assert!(Object::parse(r#"{"kind":"ordinal","value":-2}"#).is_err());
    }
}
