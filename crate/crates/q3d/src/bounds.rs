//! Lower and upper bounds on the 3D domination number.
//!
//! Three bounds combine into a sandwich:
//!
//! * volume: any closed neighbourhood has at most `13n - 12` cells, so at
//!   least `ceil(n^3 / (13n - 12))` queens are needed;
//! * projection: dropping the z coordinate of a 3D dominating set dominates
//!   the 2D board, so the 3D number is at least the 2D one;
//! * lifting: stacking a minimum 2D dominating set in every layer dominates
//!   the cube, so the 3D number is at most `n` times the 2D one.
//!
//! The 2D value is solved exactly in-repo (never copied from elsewhere); a
//! small JSON cache can persist solved values between runs.

use crate::board::{BoardSpec, Cell, Placement};
use crate::error::{Error, Result};
use crate::solver::{solve_exact, SolveLimits, SolveOptions, SolveStatus};
use std::collections::BTreeMap;
use std::path::Path;

/// `ceil(n^3 / (13n - 12))`, exact in integers.
pub fn volume_lower_bound(n: usize) -> usize {
    assert!(n >= 1);
    let cells = (n as u128).pow(3);
    let max_neighbourhood = 13 * n as u128 - 12;
    cells.div_ceil(max_neighbourhood) as usize
}

/// Exact domination number of the n x n (2D) queen board, solved in-repo.
pub fn gamma2(n: usize, limits: &SolveLimits) -> Result<usize> {
    let spec = BoardSpec::square(n)?;
    let result = solve_exact(&spec, limits, &SolveOptions { use_symmetry: false })?;
    match result.status {
        SolveStatus::Optimal => Ok(result.value.expect("optimal result has a value")),
        _ => Err(Error::ResourceLimit {
            message: format!("2D solve for n={n} stopped before optimality"),
            bounds: Some((result.lower_bound, result.upper_bound)),
        }),
    }
}

/// Project a 3D placement to the 2D board by dropping the z coordinate.
/// If the input dominates the cube, the output dominates the square.
pub fn project(spec: &BoardSpec, s: &Placement) -> Placement {
    assert_eq!(spec.dim(), 3, "projection starts from a 3D board");
    let square = BoardSpec::square(spec.side()).expect("side already validated");
    Placement::from_cells(&square, s.iter().map(|c| Cell::at2(c.x(), c.y())))
        .expect("projected cells stay on the board")
}

/// Stack a 2D placement in every layer of the cube: the lifting construction
/// behind the `n * gamma2` upper bound.
pub fn lift_layers(n: usize, s2: &Placement) -> Result<Placement> {
    let cube = BoardSpec::cube(n)?;
    let mut cells = Vec::with_capacity(s2.len() * n);
    for z in 0..n as i32 {
        for c in s2.iter() {
            cells.push(Cell::at3(c.x(), c.y(), z));
        }
    }
    Placement::from_cells(&cube, cells)
}

/// Where a 2D value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gamma2Source {
    /// Solved by the in-repo exact solver during this call.
    Solved,
    /// Taken from a cache file or supplied by the caller.
    Supplied,
}

impl Gamma2Source {
    pub fn name(&self) -> &'static str {
        match self {
            Gamma2Source::Solved => "solved",
            Gamma2Source::Supplied => "supplied",
        }
    }
}

/// The bound sandwich for one side length.
#[derive(Debug, Clone)]
pub struct BoundsReport {
    pub n: usize,
    pub volume_lb: usize,
    /// `gamma2(n)`: a lower bound by projection.
    pub projection_lb: usize,
    /// `n * gamma2(n)`: an upper bound by lifting.
    pub lifting_ub: usize,
    pub best_lb: usize,
    pub best_ub: usize,
    pub gamma2_source: Gamma2Source,
}

/// Aggregate the three bounds, solving the 2D board under the given limits.
pub fn bounds_report(n: usize, limits: &SolveLimits) -> Result<BoundsReport> {
    let g2 = gamma2(n, limits)?;
    Ok(bounds_report_with_gamma2(n, g2, Gamma2Source::Solved))
}

/// Aggregate the three bounds from an already known 2D value.
pub fn bounds_report_with_gamma2(n: usize, g2: usize, source: Gamma2Source) -> BoundsReport {
    assert!(n >= 1);
    let volume_lb = volume_lower_bound(n);
    let lifting_ub = n * g2;
    BoundsReport {
        n,
        volume_lb,
        projection_lb: g2,
        lifting_ub,
        best_lb: volume_lb.max(g2),
        best_ub: lifting_ub,
        gamma2_source: source,
    }
}

/// As [`bounds_report`], but consults and updates a cache of solved 2D
/// values first.
pub fn bounds_report_cached(
    n: usize,
    limits: &SolveLimits,
    cache: &mut Gamma2Cache,
) -> Result<BoundsReport> {
    if let Some(g2) = cache.get(n) {
        return Ok(bounds_report_with_gamma2(n, g2, Gamma2Source::Supplied));
    }
    let g2 = gamma2(n, limits)?;
    cache.put(n, g2);
    Ok(bounds_report_with_gamma2(n, g2, Gamma2Source::Solved))
}

/// Persisted map of solved 2D domination numbers.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Gamma2Cache {
    values: BTreeMap<usize, usize>,
}

impl Gamma2Cache {
    pub fn new() -> Gamma2Cache {
        Gamma2Cache::default()
    }

    pub fn get(&self, n: usize) -> Option<usize> {
        self.values.get(&n).copied()
    }

    pub fn put(&mut self, n: usize, gamma: usize) {
        self.values.insert(n, gamma);
    }

    pub fn values(&self) -> &BTreeMap<usize, usize> {
        &self.values
    }

    pub fn load(path: &Path) -> Result<Gamma2Cache> {
        let text = std::fs::read_to_string(path)?;
        crate::formats::gamma2_cache_from_json(&text)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, crate::formats::gamma2_cache_to_json(self))?;
        Ok(())
    }
}
