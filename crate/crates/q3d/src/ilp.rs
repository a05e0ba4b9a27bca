//! LP-format export of the domination set-cover model, for replay by any
//! external MILP solver.
//!
//! The model minimizes the number of selected cells subject to one cover row
//! per cell: the sum of the variables in its closed neighbourhood (including
//! the cell itself) must be at least 1. Optional extras: one symmetry row
//! per cell outside the fundamental domain, letting a cell be selected only
//! if some lexicographically earlier cell is too, and a global budget row.
//!
//! Output is plain CPLEX-style LP text with a fixed ordering and formatting,
//! so exports are byte-identical across runs and platforms.

use crate::board::{build_adjacency, BoardSpec, Cell, Placement};
use crate::error::{Error, Result};
use crate::symmetry::FundamentalDomain;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Options for [`export_lp`] / [`build_model`].
#[derive(Debug, Clone, Copy, Default)]
pub struct LpOptions {
    /// Emit first-queen symmetry-breaking rows (3D boards only).
    pub symmetry: bool,
    /// Cap the number of selected cells. Negative values are rejected.
    pub budget: Option<i64>,
}

/// One cover constraint: the variables of `N[v]`, at least one selected.
#[derive(Debug, Clone)]
pub struct CoverRow {
    pub name: String,
    /// Variable indices in ascending (lexicographic) order.
    pub members: Vec<usize>,
}

/// One symmetry constraint: variable `selected` minus the sum of all
/// lexicographically earlier variables is at most 0.
#[derive(Debug, Clone)]
pub struct SymmetryRow {
    pub name: String,
    pub selected: usize,
}

/// The assembled 0/1 model, one binary variable per cell.
#[derive(Debug, Clone)]
pub struct IlpModel {
    pub variable_names: Vec<String>,
    pub cover_rows: Vec<CoverRow>,
    pub symmetry_rows: Vec<SymmetryRow>,
    pub budget: Option<u64>,
}

/// The variable name of a cell: `x_<i>_<j>_<k>` from its coordinates.
pub fn variable_name(cell: Cell) -> String {
    let mut name = String::from("x");
    for c in cell.coords() {
        write!(name, "_{c}").expect("string write");
    }
    name
}

/// Parse a variable name back into a cell of the given board.
pub fn parse_variable_name(spec: &BoardSpec, name: &str) -> Result<Cell> {
    let mut parts = name.split('_');
    if parts.next() != Some("x") {
        return Err(Error::Parse(format!("variable {name:?} does not start with x_")));
    }
    let coords: Vec<i32> = parts
        .map(|p| {
            p.parse::<i32>()
                .map_err(|_| Error::Parse(format!("variable {name:?} has a non-integer coordinate")))
        })
        .collect::<Result<_>>()?;
    if coords.len() != spec.dim() {
        return Err(Error::Parse(format!(
            "variable {name:?} has {} coordinates on a {}-dimensional board",
            coords.len(),
            spec.dim()
        )));
    }
    let cell = Cell::from_coords(&coords)?;
    if !spec.contains(cell) {
        return Err(Error::Parse(format!("variable {name:?} is outside the board")));
    }
    Ok(cell)
}

/// Assemble the model for a board.
pub fn build_model(spec: &BoardSpec, options: &LpOptions) -> Result<IlpModel> {
    let budget = match options.budget {
        Some(b) if b < 0 => {
            return Err(Error::invalid(format!("budget must be non-negative, got {b}")))
        }
        Some(b) => Some(b as u64),
        None => None,
    };
    if options.symmetry && spec.dim() != 3 {
        return Err(Error::invalid("symmetry rows are only defined for 3D boards"));
    }
    let adj = build_adjacency(spec)?;
    let variable_names: Vec<String> = spec.cells().map(variable_name).collect();
    let cover_rows = (0..spec.cell_count())
        .map(|i| CoverRow {
            name: format!("cover{}", &variable_names[i][1..]),
            members: adj.row(i).iter().collect(),
        })
        .collect();
    let symmetry_rows = if options.symmetry {
        let domain = FundamentalDomain::new(spec.side());
        spec.cells()
            .enumerate()
            .filter(|&(_, cell)| !domain.contains(cell))
            .map(|(i, _)| SymmetryRow {
                name: format!("sym{}", &variable_names[i][1..]),
                selected: i,
            })
            .collect()
    } else {
        Vec::new()
    };
    Ok(IlpModel { variable_names, cover_rows, symmetry_rows, budget })
}

impl IlpModel {
    /// Render as LP text: `Minimize` / `Subject To` / `Binary` / `End`,
    /// one row per line, terms in ascending variable order, LF endings.
    pub fn to_lp_text(&self) -> String {
        let mut out = String::new();
        out.push_str("Minimize\n obj:");
        for (i, name) in self.variable_names.iter().enumerate() {
            if i > 0 {
                out.push_str(" +");
            }
            out.push(' ');
            out.push_str(name);
        }
        out.push_str("\nSubject To\n");
        for row in &self.cover_rows {
            out.push(' ');
            out.push_str(&row.name);
            out.push(':');
            for (i, &member) in row.members.iter().enumerate() {
                if i > 0 {
                    out.push_str(" +");
                }
                out.push(' ');
                out.push_str(&self.variable_names[member]);
            }
            out.push_str(" >= 1\n");
        }
        for row in &self.symmetry_rows {
            out.push(' ');
            out.push_str(&row.name);
            out.push_str(": ");
            out.push_str(&self.variable_names[row.selected]);
            for name in &self.variable_names[..row.selected] {
                out.push_str(" - ");
                out.push_str(name);
            }
            out.push_str(" <= 0\n");
        }
        if let Some(budget) = self.budget {
            out.push_str(" budget:");
            for (i, name) in self.variable_names.iter().enumerate() {
                if i > 0 {
                    out.push_str(" +");
                }
                out.push(' ');
                out.push_str(name);
            }
            let _ = writeln!(out, " <= {budget}");
        }
        out.push_str("Binary\n");
        for name in &self.variable_names {
            out.push(' ');
            out.push_str(name);
            out.push('\n');
        }
        out.push_str("End\n");
        out
    }
}

/// Build and render the model in one step.
pub fn export_lp(spec: &BoardSpec, options: &LpOptions) -> Result<String> {
    Ok(build_model(spec, options)?.to_lp_text())
}

/// Parse whitespace-separated `name value` lines into an assignment.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_assignment_text(text: &str) -> Result<Vec<(String, f64)>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (name, value) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(name), Some(value), None) => (name, value),
            _ => {
                return Err(Error::Parse(format!(
                    "line {}: expected `name value`, got {line:?}",
                    lineno + 1
                )))
            }
        };
        let value: f64 = value
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: bad value {value:?}", lineno + 1)))?;
        out.push((name.to_string(), value));
    }
    Ok(out)
}

const BINARY_TOLERANCE: f64 = 1e-6;

/// Turn a variable assignment into a placement: cells whose variable is 1.
/// Variables missing from the assignment count as 0. Unknown names,
/// out-of-range coordinates, duplicates, and non-binary values are errors.
pub fn import_solution(spec: &BoardSpec, assignment: &[(String, f64)]) -> Result<Placement> {
    let mut seen: BTreeMap<String, f64> = BTreeMap::new();
    let mut selected = Vec::new();
    for (name, value) in assignment {
        let cell = parse_variable_name(spec, name)?;
        if seen.insert(name.clone(), *value).is_some() {
            return Err(Error::Parse(format!("variable {name:?} assigned twice")));
        }
        if (value - 1.0).abs() <= BINARY_TOLERANCE {
            selected.push(cell);
        } else if value.abs() > BINARY_TOLERANCE {
            return Err(Error::Parse(format!(
                "variable {name:?} has non-binary value {value}"
            )));
        }
    }
    Placement::from_cells(spec, selected)
}
