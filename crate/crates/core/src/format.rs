//! JSON and DOT forms of posets, maps, triples and squares.
//!
//! Serialization is canonical: labels sorted lexicographically, covers sorted
//! by label pair, and rank arrays aligned with the sorted labels.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::cylinder::{CylinderError, JoinTriple, SfsSquare};
use crate::poset::{Poset, PosetError, RankFunction, RankedPoset};
use crate::subdivision::{PosetMap, SfsError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("rank array has {got} entries for {expected} labels")]
    RankLength { expected: usize, got: usize },
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Sfs(#[from] SfsError),
    #[error(transparent)]
    Cylinder(#[from] CylinderError),
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct PosetJson {
    pub labels: Vec<String>,
    pub covers: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<Vec<i64>>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct MapJson {
    pub source: PosetJson,
    #[serde(default)]
    pub source_rank: Option<Vec<i64>>,
    pub target: PosetJson,
    #[serde(default)]
    pub target_rank: Option<Vec<i64>>,
    pub image: Vec<(String, String)>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct TripleJson {
    pub poset: PosetJson,
    #[serde(default)]
    pub rank: Option<Vec<i64>>,
    pub q: String,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct SquareJson {
    pub phi1: MapJson,
    pub sigma: MapJson,
    pub sigma_prime: MapJson,
    pub phi2: MapJson,
}

/// Indices of `p` in label order.
fn sorted_order(p: &Poset) -> Vec<usize> {
    let mut order: Vec<usize> = p.elements().collect();
    order.sort_by(|&a, &b| p.label(a).cmp(p.label(b)));
    order
}

fn poset_json(p: &Poset, rank: Option<&RankFunction>) -> PosetJson {
    let order = sorted_order(p);
    let mut covers: Vec<(String, String)> = p
        .covers()
        .iter()
        .map(|&(a, b)| (p.label(a).to_string(), p.label(b).to_string()))
        .collect();
    covers.sort();
    PosetJson {
        labels: order.iter().map(|&i| p.label(i).to_string()).collect(),
        covers,
        rank: rank.map(|r| order.iter().map(|&i| r.get(i)).collect()),
    }
}

pub fn ranked_to_json(b: &RankedPoset) -> PosetJson {
    poset_json(&b.poset, Some(&b.rank))
}

/// Builds the poset; a missing rank falls back to the natural rank.
pub fn ranked_from_json(j: &PosetJson, rank: Option<&[i64]>) -> Result<RankedPoset, FormatError> {
    let p = Poset::from_covers(&j.labels, &j.covers)?;
    match rank.or(j.rank.as_deref()) {
        Some(r) => {
            if r.len() != j.labels.len() {
                return Err(FormatError::RankLength {
                    expected: j.labels.len(),
                    got: r.len(),
                });
            }
            Ok(RankedPoset::new(p, RankFunction::new(r.to_vec()))?)
        }
        None => Ok(RankedPoset::natural(p)?),
    }
}

pub fn map_to_json(m: &PosetMap) -> MapJson {
    let mut image = m.label_pairs();
    image.sort();
    let strip = |b: &RankedPoset| {
        let mut j = ranked_to_json(b);
        let r = j.rank.take();
        (j, r)
    };
    let (source, source_rank) = strip(&m.source);
    let (target, target_rank) = strip(&m.target);
    MapJson {
        source,
        source_rank,
        target,
        target_rank,
        image,
    }
}

pub fn map_from_json(j: &MapJson) -> Result<PosetMap, FormatError> {
    let source = ranked_from_json(&j.source, j.source_rank.as_deref())?;
    let target = ranked_from_json(&j.target, j.target_rank.as_deref())?;
    Ok(PosetMap::from_label_pairs(source, target, &j.image)?)
}

pub fn triple_to_json(t: &JoinTriple) -> TripleJson {
    let mut poset = ranked_to_json(&t.gamma);
    let rank = poset.rank.take();
    TripleJson {
        poset,
        rank,
        q: t.q_label().to_string(),
    }
}

pub fn triple_from_json(j: &TripleJson) -> Result<JoinTriple, FormatError> {
    let gamma = ranked_from_json(&j.poset, j.rank.as_deref())?;
    Ok(JoinTriple::with_label(gamma, &j.q)?)
}

pub fn square_to_json(s: &SfsSquare) -> SquareJson {
    SquareJson {
        phi1: map_to_json(&s.phi1),
        sigma: map_to_json(&s.sigma),
        sigma_prime: map_to_json(&s.sigma_prime),
        phi2: map_to_json(&s.phi2),
    }
}

pub fn square_from_json(j: &SquareJson) -> Result<SfsSquare, FormatError> {
    Ok(SfsSquare::new(
        map_from_json(&j.phi1)?,
        map_from_json(&j.sigma)?,
        map_from_json(&j.sigma_prime)?,
        map_from_json(&j.phi2)?,
    )?)
}

/// Pretty JSON followed by a newline.
pub fn to_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Every JSON document in `text`, in order.
pub fn documents(text: &str) -> Result<Vec<Value>, FormatError> {
    let stream = serde_json::Deserializer::from_str(text).into_iter::<Value>();
    Ok(stream.collect::<Result<Vec<_>, _>>()?)
}

/// What a JSON document encodes, judged by its keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Poset,
    Map,
    Triple,
    Square,
    Unknown,
}

pub fn kind_of(v: &Value) -> Kind {
    let has = |k: &str| v.get(k).is_some();
    if has("phi1") {
        Kind::Square
    } else if has("image") {
        Kind::Map
    } else if has("q") && has("poset") {
        Kind::Triple
    } else if has("labels") {
        Kind::Poset
    } else {
        Kind::Unknown
    }
}

/// Hasse diagram in DOT, bottom to top, one `rank=same` group per rank.
pub fn to_dot(b: &RankedPoset) -> String {
    let p = &b.poset;
    let order = sorted_order(p);
    let mut id = vec![0; p.len()];
    for (k, &i) in order.iter().enumerate() {
        id[i] = k;
    }
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n");
    for &i in &order {
        out.push_str(&format!("  n{} [label={:?}];\n", id[i], p.label(i)));
    }
    let mut ranks: Vec<i64> = b.rank.values().to_vec();
    ranks.sort_unstable();
    ranks.dedup();
    for r in ranks {
        let members: Vec<String> = order
            .iter()
            .filter(|&&i| b.rank_of(i) == r)
            .map(|&i| format!("n{};", id[i]))
            .collect();
        out.push_str(&format!("  {{ rank=same; {} }}\n", members.join(" ")));
    }
    let mut edges: Vec<(usize, usize)> = p.covers().iter().map(|&(a, c)| (id[a], id[c])).collect();
    edges.sort_unstable();
    for (a, c) in edges {
        out.push_str(&format!("  n{a} -> n{c};\n"));
    }
    out.push_str("}\n");
    out
}
