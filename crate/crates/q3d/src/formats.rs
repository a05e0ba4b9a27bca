//! JSON file formats: solutions, optimality certificates, and the cache of
//! solved 2D values.
//!
//! All writers emit pretty-printed JSON with a fixed key order and a
//! trailing newline, so output is byte-stable across runs and platforms.

use crate::board::{BoardSpec, Cell, Placement};
use crate::bounds::Gamma2Cache;
use crate::error::{Error, Result};
use crate::solver::{OptimalityCertificate, SubproblemRecord, SubproblemStatus};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const SOLUTION_FORMAT: &str = "q3d-solution-v1";
pub const CERTIFICATE_FORMAT: &str = "q3d-certificate-v1";
pub const GAMMA2_CACHE_FORMAT: &str = "q2d-cache-v1";

/// Optional claims attached to a solution file.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionClaims {
    /// Claimed domination number of the board (not merely the witness size).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<usize>,
}

impl SolutionClaims {
    pub fn is_empty(&self) -> bool {
        self.gamma.is_none()
    }
}

#[derive(Serialize, Deserialize)]
struct SolutionDto {
    format: String,
    dim: usize,
    n: usize,
    queens: Vec<Vec<i32>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    claims: Option<SolutionClaims>,
}

fn cells_to_rows(p: &Placement) -> Vec<Vec<i32>> {
    p.iter().map(|c| c.coords().to_vec()).collect()
}

fn pretty(value: &impl Serialize) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

/// Render a placement as a `q3d-solution-v1` document.
pub fn solution_to_json(
    spec: &BoardSpec,
    placement: &Placement,
    claims: Option<SolutionClaims>,
) -> String {
    pretty(&SolutionDto {
        format: SOLUTION_FORMAT.to_string(),
        dim: spec.dim(),
        n: spec.side(),
        queens: cells_to_rows(placement),
        claims: claims.filter(|c| !c.is_empty()),
    })
}

/// Parse a `q3d-solution-v1` document and validate it against its own board.
pub fn solution_from_json(text: &str) -> Result<(BoardSpec, Placement, Option<SolutionClaims>)> {
    let dto: SolutionDto =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("solution file: {e}")))?;
    if dto.format != SOLUTION_FORMAT {
        return Err(Error::Parse(format!(
            "expected format {SOLUTION_FORMAT:?}, found {:?}",
            dto.format
        )));
    }
    let spec = BoardSpec::new(dto.dim, dto.n)
        .map_err(|e| Error::Parse(format!("solution file: {e}")))?;
    let mut cells = Vec::with_capacity(dto.queens.len());
    for row in &dto.queens {
        if row.len() != spec.dim() {
            return Err(Error::Parse(format!(
                "queen {row:?} has {} coordinates on a {}-dimensional board",
                row.len(),
                spec.dim()
            )));
        }
        cells.push(Cell::from_coords(row).map_err(|e| Error::Parse(e.to_string()))?);
    }
    let placement = Placement::from_cells(&spec, cells)
        .map_err(|e| Error::Parse(format!("solution file: {e}")))?;
    Ok((spec, placement, dto.claims))
}

#[derive(Serialize, Deserialize)]
struct CertificateDto {
    format: String,
    n: usize,
    k: usize,
    witness: Vec<Vec<i32>>,
    budget: usize,
    symmetry_used: bool,
    subproblems: Vec<SubproblemDto>,
}

#[derive(Serialize, Deserialize)]
struct SubproblemDto {
    first_queen: Vec<i32>,
    status: String,
    nodes: u64,
}

/// Render a certificate as a `q3d-certificate-v1` document. Only complete
/// (all-infeasible) certificates may be written; partial runs are not a
/// proof of anything.
pub fn certificate_to_json(cert: &OptimalityCertificate) -> Result<String> {
    if cert.witness.iter().any(|c| c.dim() != 3) {
        return Err(Error::invalid("certificate files hold 3D boards only"));
    }
    if cert.subproblems.iter().any(|s| s.status != SubproblemStatus::Infeasible) {
        return Err(Error::invalid(
            "refusing to serialize a certificate with non-infeasible subproblems",
        ));
    }
    let mut subproblems: Vec<&SubproblemRecord> = cert.subproblems.iter().collect();
    subproblems.sort_by_key(|s| s.first_queen);
    Ok(pretty(&CertificateDto {
        format: CERTIFICATE_FORMAT.to_string(),
        n: cert.n,
        k: cert.k,
        witness: cells_to_rows(&cert.witness),
        budget: cert.budget,
        symmetry_used: cert.symmetry_used,
        subproblems: subproblems
            .into_iter()
            .map(|s| SubproblemDto {
                first_queen: s.first_queen.coords().to_vec(),
                status: s.status.name().to_string(),
                nodes: s.nodes,
            })
            .collect(),
    }))
}

fn parse_status(s: &str) -> Result<SubproblemStatus> {
    match s {
        "infeasible" => Ok(SubproblemStatus::Infeasible),
        "feasible" => Ok(SubproblemStatus::Feasible),
        "limit" => Ok(SubproblemStatus::Limit),
        other => Err(Error::Parse(format!("unknown subproblem status {other:?}"))),
    }
}

/// Parse a `q3d-certificate-v1` document. Structure only; semantic checks
/// live in [`check_certificate`](crate::verifier::check_certificate).
pub fn certificate_from_json(text: &str) -> Result<OptimalityCertificate> {
    let dto: CertificateDto =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("certificate file: {e}")))?;
    if dto.format != CERTIFICATE_FORMAT {
        return Err(Error::Parse(format!(
            "expected format {CERTIFICATE_FORMAT:?}, found {:?}",
            dto.format
        )));
    }
    let spec = BoardSpec::cube(dto.n)
        .map_err(|e| Error::Parse(format!("certificate file: {e}")))?;
    let mut witness_cells = Vec::with_capacity(dto.witness.len());
    for row in &dto.witness {
        witness_cells.push(Cell::from_coords(row).map_err(|e| Error::Parse(e.to_string()))?);
    }
    let witness = Placement::from_cells(&spec, witness_cells)
        .map_err(|e| Error::Parse(format!("certificate witness: {e}")))?;
    let mut subproblems = Vec::with_capacity(dto.subproblems.len());
    for sub in &dto.subproblems {
        let cell = Cell::from_coords(&sub.first_queen).map_err(|e| Error::Parse(e.to_string()))?;
        if !spec.contains(cell) {
            return Err(Error::Parse(format!("first queen {cell} is off the board")));
        }
        subproblems.push(SubproblemRecord {
            first_queen: cell,
            status: parse_status(&sub.status)?,
            nodes: sub.nodes,
        });
    }
    Ok(OptimalityCertificate {
        n: dto.n,
        k: dto.k,
        witness,
        budget: dto.budget,
        symmetry_used: dto.symmetry_used,
        subproblems,
    })
}

#[derive(Serialize, Deserialize)]
struct Gamma2CacheDto {
    format: String,
    values: BTreeMap<usize, usize>,
}

/// Render a cache of solved 2D values as a `q2d-cache-v1` document.
pub fn gamma2_cache_to_json(cache: &Gamma2Cache) -> String {
    pretty(&Gamma2CacheDto {
        format: GAMMA2_CACHE_FORMAT.to_string(),
        values: cache.values().clone(),
    })
}

/// Parse a `q2d-cache-v1` document.
pub fn gamma2_cache_from_json(text: &str) -> Result<Gamma2Cache> {
    let dto: Gamma2CacheDto =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("cache file: {e}")))?;
    if dto.format != GAMMA2_CACHE_FORMAT {
        return Err(Error::Parse(format!(
            "expected format {GAMMA2_CACHE_FORMAT:?}, found {:?}",
            dto.format
        )));
    }
    let mut cache = Gamma2Cache::new();
    for (n, gamma) in dto.values {
        cache.put(n, gamma);
    }
    Ok(cache)
}
