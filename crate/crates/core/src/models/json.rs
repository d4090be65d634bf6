//! JSON model files.
//!
//! ```json
//! {
//!   "worlds": ["w"],
//!   "access": [["w", "w"]],
//!   "tnorm": "L",
//!   "val": { "w": { "p": "7/10" } },
//!   "evid": { "w": [ { "term": "t", "formula": "p", "value": "9/10" } ] },
//!   "default_evid": "1"
//! }
//! ```
//!
//! `default_evid` defaults to 1 and the optional `default_val` to 0.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{FittingModel, ModelError};
use crate::algebra::TNormKind;
use crate::syntax::{parse_term, Formula, ParseError};
use crate::truth::TruthValue;

#[derive(Debug, Error)]
pub enum ModelFileError {
    #[error("invalid model JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("bad formula `{text}`: {source}")]
    Formula { text: String, source: ParseError },
    #[error("bad term `{text}`: {source}")]
    Term { text: String, source: ParseError },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct EvidenceEntry {
    term: String,
    formula: String,
    value: TruthValue,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelFile {
    worlds: Vec<String>,
    #[serde(default)]
    access: Vec<(String, String)>,
    tnorm: TNormKind,
    #[serde(default)]
    val: BTreeMap<String, BTreeMap<String, TruthValue>>,
    #[serde(default)]
    evid: BTreeMap<String, Vec<EvidenceEntry>>,
    #[serde(default = "TruthValue::one")]
    default_evid: TruthValue,
    #[serde(default = "TruthValue::zero", skip_serializing_if = "TruthValue::is_zero")]
    default_val: TruthValue,
}

impl FittingModel {
    pub fn from_json(text: &str) -> Result<Self, ModelFileError> {
        let file: ModelFile = serde_json::from_str(text)?;
        let mut m = FittingModel::new(&file.worlds, file.tnorm)?;
        m.set_default_evid(file.default_evid);
        m.set_default_val(file.default_val);
        for (a, b) in &file.access {
            let (a, b) = (m.world_index(a)?, m.world_index(b)?);
            m.add_access(a, b);
        }
        for (w, table) in file.val {
            let w = m.world_index(&w)?;
            for (p, v) in table {
                m.set_val(w, &p, v);
            }
        }
        for (w, entries) in file.evid {
            let w = m.world_index(&w)?;
            for e in entries {
                let t = parse_term(&e.term).map_err(|source| ModelFileError::Term { text: e.term.clone(), source })?;
                let f: Formula =
                    e.formula.parse().map_err(|source| ModelFileError::Formula { text: e.formula.clone(), source })?;
                m.set_evid(w, &t, &f, e.value);
            }
        }
        Ok(m)
    }

    /// Pretty JSON with entries sorted, so equal models print identically.
    pub fn to_json(&self) -> String {
        let worlds: Vec<String> = self.world_names().map(str::to_string).collect();
        let access = self.access_pairs().map(|(a, b)| (worlds[a].clone(), worlds[b].clone())).collect();
        let mut val = BTreeMap::new();
        let mut evid = BTreeMap::new();
        for (w, name) in worlds.iter().enumerate() {
            let table: BTreeMap<String, TruthValue> =
                self.val_entries(w).map(|(p, v)| (p.to_string(), v.clone())).collect();
            if !table.is_empty() {
                val.insert(name.clone(), table);
            }
            let mut entries: Vec<_> = self.evid_entries(w).collect();
            entries.sort_by(|x, y| x.0.cmp(y.0));
            if !entries.is_empty() {
                let list = entries
                    .into_iter()
                    .map(|((t, f), v)| EvidenceEntry { term: t.to_string(), formula: f.to_string(), value: v.clone() })
                    .collect();
                evid.insert(name.clone(), list);
            }
        }
        let file = ModelFile {
            worlds,
            access,
            tnorm: self.tnorm(),
            val,
            evid,
            default_evid: self.default_evid().clone(),
            default_val: self.default_val().clone(),
        };
        serde_json::to_string_pretty(&file).expect("model files serialize")
    }
}
