//! Text and JSON forms of allocations, covers and reports. Rationals are
//! always written as `"p/q"` strings (bare integers when `q = 1`).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cover::{CoverCertificate, EdgeVector};
use crate::game::{
    Allocation, AllocationReport, CoalitionViolation, EdgeViolation, GapReport, OddSetViolation,
    StarViolation,
};
use crate::graph::{EdgeId, VertexId, WeightedGraph};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct AllocationFileError {
    pub line: usize,
    pub message: String,
}

fn alloc_err(line: usize, message: impl Into<String>) -> AllocationFileError {
    AllocationFileError {
        line,
        message: message.into(),
    }
}

/// Reads an allocation for `graph`.
///
/// Accepts the line format (`v p/q`, one line per vertex, `#` comments), a
/// JSON array of rational strings, or a JSON allocation report as written by
/// [`AllocationReportJson`].
pub fn parse_allocation(
    graph: &WeightedGraph,
    input: &[u8],
) -> Result<Allocation, AllocationFileError> {
    let text = std::str::from_utf8(input).map_err(|_| alloc_err(0, "input is not valid UTF-8"))?;
    let n = graph.vertex_count();
    let values = match text.trim_start().chars().next() {
        Some('[') => {
            let strings: Vec<String> =
                serde_json::from_str(text).map_err(|e| alloc_err(e.line(), e.to_string()))?;
            strings
                .iter()
                .map(|s| {
                    rational::parse(s).ok_or_else(|| alloc_err(0, format!("bad rational `{s}`")))
                })
                .collect::<Result<Vec<_>, _>>()?
        }
        Some('{') => {
            let report: AllocationReportJson =
                serde_json::from_str(text).map_err(|e| alloc_err(e.line(), e.to_string()))?;
            report.allocation
        }
        _ => parse_allocation_lines(text, n)?,
    };
    if values.len() != n {
        return Err(alloc_err(
            0,
            format!("expected {n} entries, found {}", values.len()),
        ));
    }
    if let Some(v) = values.iter().position(|x| !rational::is_nonnegative(x)) {
        return Err(alloc_err(0, format!("entry for vertex {v} is negative")));
    }
    Ok(Allocation::new(values).expect("checked nonnegative"))
}

fn parse_allocation_lines(text: &str, n: usize) -> Result<Vec<Rational>, AllocationFileError> {
    let mut values: Vec<Option<Rational>> = vec![None; n];
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [v, value] = fields[..] else {
            return Err(alloc_err(line, "expected `v p/q`"));
        };
        let v: usize = v
            .parse()
            .map_err(|_| alloc_err(line, format!("bad vertex `{v}`")))?;
        if v >= n {
            return Err(alloc_err(
                line,
                format!("vertex {v} out of range for {n} vertices"),
            ));
        }
        let value = rational::parse(value)
            .ok_or_else(|| alloc_err(line, format!("bad rational `{value}`")))?;
        if !rational::is_nonnegative(&value) {
            return Err(alloc_err(line, format!("entry for vertex {v} is negative")));
        }
        if values[v].replace(value).is_some() {
            return Err(alloc_err(line, format!("vertex {v} listed twice")));
        }
    }
    values
        .into_iter()
        .enumerate()
        .map(|(v, x)| x.ok_or_else(|| alloc_err(0, format!("vertex {v} missing"))))
        .collect()
}

/// One `v p/q` line per vertex.
pub fn format_allocation(allocation: &Allocation) -> String {
    allocation
        .values()
        .iter()
        .enumerate()
        .map(|(v, x)| format!("{v} {}\n", rational::format(x)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeValueJson {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
    #[serde(with = "rational::as_string")]
    pub value: Rational,
}

pub fn edge_values(graph: &WeightedGraph, x: &EdgeVector) -> Vec<EdgeValueJson> {
    graph
        .edges()
        .iter()
        .zip(x.values())
        .enumerate()
        .map(|(id, (e, value))| EdgeValueJson {
            id,
            u: e.u,
            v: e.v,
            value: value.clone(),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverJson {
    pub kind: String,
    #[serde(with = "rational::as_string")]
    pub weight: Rational,
    pub edges: Vec<EdgeValueJson>,
    /// Dual packing of equal total, when the cover comes with one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<RationalList>,
    /// Closed vertex sequences of the half-valued cycles (canonical covers only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub odd_cycles: Option<Vec<Vec<VertexId>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RationalList(#[serde(with = "rational::vec_as_string")] pub Vec<Rational>);

impl CoverJson {
    pub fn new(graph: &WeightedGraph, cover: &CoverCertificate) -> Self {
        CoverJson {
            kind: cover.kind.as_str().to_string(),
            weight: cover.weight.clone(),
            edges: edge_values(graph, &cover.vector),
            witness: cover
                .witness
                .as_ref()
                .map(|a| RationalList(a.values().to_vec())),
            odd_cycles: None,
        }
    }

    pub fn vector(&self) -> EdgeVector {
        EdgeVector::new(self.edges.iter().map(|e| e.value.clone()).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AllocationReportJson {
    #[serde(with = "rational::vec_as_string")]
    pub allocation: Vec<Rational>,
    pub ell: Option<usize>,
    #[serde(with = "rational::as_string")]
    pub alpha: Rational,
    #[serde(with = "rational::as_string")]
    pub total: Rational,
    #[serde(with = "rational::opt_as_string")]
    pub grand_cost: Option<Rational>,
    #[serde(with = "rational::opt_as_string")]
    pub ratio: Option<Rational>,
}

impl From<&AllocationReport> for AllocationReportJson {
    fn from(r: &AllocationReport) -> Self {
        AllocationReportJson {
            allocation: r.allocation.values().to_vec(),
            ell: r.ell,
            alpha: r.alpha.clone(),
            total: r.total.clone(),
            grand_cost: r.grand_cost.clone(),
            ratio: r.ratio.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapJson {
    pub ell: Option<usize>,
    #[serde(with = "rational::as_string")]
    pub rho: Rational,
    pub cycle: Option<Vec<VertexId>>,
    pub witness_weights: Option<RationalList>,
}

impl From<&GapReport> for GapJson {
    fn from(g: &GapReport) -> Self {
        GapJson {
            ell: g.ell,
            rho: g.rho.clone(),
            cycle: g.cycle.as_ref().map(|c| c.vertices.clone()),
            witness_weights: g.witness_weights.clone().map(RationalList),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CostJson {
    pub coalition: Vec<VertexId>,
    #[serde(with = "rational::as_string")]
    pub cost: Rational,
    /// Edge ids of one cheapest cover.
    pub cover: Vec<EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ViolationJson {
    Edge {
        edge: EdgeId,
        u: VertexId,
        v: VertexId,
        #[serde(with = "rational::as_string")]
        allocated: Rational,
        #[serde(with = "rational::as_string")]
        weight: Rational,
    },
    Star {
        center: VertexId,
        leaves: Vec<VertexId>,
        #[serde(with = "rational::as_string")]
        allocated: Rational,
        #[serde(with = "rational::as_string")]
        star_weight: Rational,
    },
    Coalition {
        members: Vec<VertexId>,
        #[serde(with = "rational::as_string")]
        allocated: Rational,
        #[serde(with = "rational::as_string")]
        cost: Rational,
    },
    OddSet {
        members: Vec<VertexId>,
        #[serde(with = "rational::as_string")]
        covered: Rational,
        #[serde(with = "rational::as_string")]
        required: Rational,
    },
}

impl From<&EdgeViolation> for ViolationJson {
    fn from(v: &EdgeViolation) -> Self {
        ViolationJson::Edge {
            edge: v.edge,
            u: v.u,
            v: v.v,
            allocated: v.allocated.clone(),
            weight: v.weight.clone(),
        }
    }
}

impl From<&StarViolation> for ViolationJson {
    fn from(v: &StarViolation) -> Self {
        ViolationJson::Star {
            center: v.center,
            leaves: v.leaves.clone(),
            allocated: v.allocated.clone(),
            star_weight: v.star_weight.clone(),
        }
    }
}

impl From<&CoalitionViolation> for ViolationJson {
    fn from(v: &CoalitionViolation) -> Self {
        ViolationJson::Coalition {
            members: v.members.clone(),
            allocated: v.allocated.clone(),
            cost: v.cost.clone(),
        }
    }
}

impl From<&OddSetViolation> for ViolationJson {
    fn from(v: &OddSetViolation) -> Self {
        ViolationJson::OddSet {
            members: v.members.clone(),
            covered: v.covered.clone(),
            required: v.required.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub passed: bool,
    pub violation: Option<ViolationJson>,
}

impl CheckJson {
    pub fn from_verdict<'a, W: 'a>(verdict: &'a Result<(), W>) -> Self
    where
        ViolationJson: From<&'a W>,
    {
        match verdict {
            Ok(()) => CheckJson {
                passed: true,
                violation: None,
            },
            Err(w) => CheckJson {
                passed: false,
                violation: Some(w.into()),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub passed: bool,
    pub dual: CheckJson,
    pub stars: CheckJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exhaustive: Option<CheckJson>,
}
