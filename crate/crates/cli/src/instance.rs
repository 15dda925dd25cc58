//! The JSON instance format.
//!
//! ```json
//! { "ring": "Z[i]", "matrix": [[1, [1, 1]], [[1, 1], 0]] }
//! ```
//!
//! `ring` is `"Z"`, `"Z[i]"` or `"Z[w]"`. An entry is an integer, a pair `[a, b]`
//! meaning `a + bω` (ω = i, resp. the Eisenstein cube root of unity), or a string
//! such as `"3-2w"`. The optional `torsion_at_empty` lists a chain `d₁, …, dₘ`; the
//! instance then describes `M(A) = R^d / (d₁e_{d−m+1}, …, dₘe_d, columns in A)`.
//! `node_budget` and `torsion_bound` override the default enumeration limits.

use std::path::Path;

use matroid_torsion::{Limits, RMatrix, RealizedMatroid, RingElement, RingKind};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Pair([i64; 2]),
    Text(String),
}

impl Entry {
    pub fn from_element(x: &RingElement) -> Self {
        match (x.re().to_i64(), x.om().to_i64()) {
            (Some(a), Some(0)) => Entry::Int(a),
            (Some(a), Some(b)) => Entry::Pair([a, b]),
            _ => Entry::Text(x.to_string()),
        }
    }

    pub fn to_element(&self, ring: RingKind) -> Result<RingElement, String> {
        match self {
            Entry::Int(a) => Ok(RingElement::from_int(ring, *a)),
            Entry::Pair([a, b]) => {
                RingElement::try_new(ring, BigInt::from(*a), BigInt::from(*b)).map_err(|e| e.to_string())
            }
            Entry::Text(s) => RingElement::parse(ring, s).map_err(|e| e.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    pub ring: String,
    pub matrix: Vec<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsion_at_empty: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub node_budget: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsion_bound: Option<u64>,
}

impl InstanceSpec {
    pub fn from_matrix(m: &RMatrix) -> Self {
        InstanceSpec {
            ring: m.ring().name().to_string(),
            matrix: (0..m.rows()).map(|i| m.row(i).iter().map(Entry::from_element).collect()).collect(),
            torsion_at_empty: None,
            node_budget: None,
            torsion_bound: None,
        }
    }

    /// Parses a document; `path` only labels error messages.
    pub fn parse(text: &str, path: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Syntax {
            path: path.to_string(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        Self::parse(&text, &path.display().to_string())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance serializes")
    }

    pub fn ring_kind(&self) -> Result<RingKind, String> {
        self.ring
            .parse::<RingKind>()
            .map_err(|_| format!("unknown ring {:?}; expected \"Z\", \"Z[i]\" or \"Z[w]\"", self.ring))
    }

    pub fn matrix(&self, ring: RingKind) -> Result<RMatrix, String> {
        let cols = self.matrix.first().map_or(0, Vec::len);
        let mut rows = Vec::with_capacity(self.matrix.len());
        for (i, row) in self.matrix.iter().enumerate() {
            if row.len() != cols {
                return Err(format!("matrix row {} has {} entries, row 1 has {cols}", i + 1, row.len()));
            }
            let parsed = row
                .iter()
                .enumerate()
                .map(|(j, e)| e.to_element(ring).map_err(|why| format!("matrix entry ({}, {}): {why}", i + 1, j + 1)))
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(parsed);
        }
        if rows.is_empty() {
            return Err("matrix has no rows".into());
        }
        RMatrix::from_rows(ring, rows).map_err(|e| e.to_string())
    }

    /// The realized matroid, with `ring_override` replacing the declared ring and
    /// `node_budget` taking precedence over the file's value.
    pub fn to_matroid(
        &self,
        ring_override: Option<RingKind>,
        node_budget: Option<u64>,
        path: &str,
    ) -> Result<RealizedMatroid, CliError> {
        let invalid = |message: String| CliError::Invalid { path: path.to_string(), message };
        let ring = match ring_override {
            Some(r) => r,
            None => self.ring_kind().map_err(invalid)?,
        };
        let matrix = self.matrix(ring).map_err(invalid)?;
        let m = match &self.torsion_at_empty {
            None => RealizedMatroid::realize(&matrix)?,
            Some(chain) => {
                let chain = chain
                    .iter()
                    .map(|e| e.to_element(ring).map_err(|why| invalid(format!("torsion_at_empty: {why}"))))
                    .collect::<Result<Vec<_>, _>>()?;
                RealizedMatroid::with_torsion_at_empty(&matrix, &chain)
                    .map_err(|e| invalid(format!("torsion_at_empty: {e}")))?
            }
        };
        let defaults = Limits::default();
        let limits = Limits {
            node_budget: node_budget.or(self.node_budget).unwrap_or(defaults.node_budget),
            torsion_bound: self.torsion_bound.unwrap_or(defaults.torsion_bound),
            ..defaults
        };
        Ok(m.with_limits(limits)?)
    }
}
