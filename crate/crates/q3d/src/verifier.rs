//! Independent domination and certificate checking.
//!
//! Everything here re-derives adjacency from the queen-move definition on
//! coordinate differences. It deliberately shares no code with
//! [`build_adjacency`](crate::board::build_adjacency) or the canonical
//! direction list, so a bug in the line-enumeration path cannot hide from
//! the checker (and vice versa).

use crate::board::{BoardSpec, Cell, Placement};
use crate::error::{Error, Result};
use crate::solver::{OptimalityCertificate, SubproblemStatus};
use crate::symmetry::FundamentalDomain;

/// Is `diff` a legal queen displacement? True when at least one component is
/// nonzero and all nonzero components have the same magnitude: that puts the
/// difference on an axis, planar-diagonal, or space-diagonal line.
pub fn is_queen_offset(diff: &[i32]) -> bool {
    let mut magnitude = None;
    for &d in diff {
        if d != 0 {
            match magnitude {
                None => magnitude = Some(d.abs()),
                Some(m) if m == d.abs() => {}
                Some(_) => return false,
            }
        }
    }
    magnitude.is_some()
}

fn attacks(queen: Cell, target: Cell) -> bool {
    let mut diff = [0i32; 3];
    for i in 0..queen.dim() {
        diff[i] = queen.coords()[i] - target.coords()[i];
    }
    is_queen_offset(&diff[..queen.dim()])
}

/// Result of a domination scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationOutcome {
    pub ok: bool,
    /// Lexicographically first cell that is neither occupied nor attacked.
    pub first_uncovered: Option<Cell>,
    /// Number of cells confirmed dominated (equals `n^dim` exactly when ok).
    pub checked_cells: usize,
}

/// Check that `s` dominates the board, scanning cells in lexicographic order
/// and reporting the first failure.
pub fn is_dominating(spec: &BoardSpec, s: &Placement) -> VerificationOutcome {
    for c in s.iter() {
        assert!(spec.contains(c), "placement cell {c} not on board {spec}");
    }
    let mut checked = 0usize;
    for v in spec.cells() {
        let covered = s.contains(v) || s.iter().any(|q| attacks(q, v));
        if !covered {
            return VerificationOutcome { ok: false, first_uncovered: Some(v), checked_cells: checked };
        }
        checked += 1;
    }
    VerificationOutcome { ok: true, first_uncovered: None, checked_cells: checked }
}

/// Outcome of structural certificate validation. `ok` is true only when
/// every check passed; `failures` lists each violated condition.
#[derive(Debug, Clone, Default)]
pub struct CertificateCheck {
    pub failures: Vec<String>,
}

impl CertificateCheck {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, msg: impl Into<String>) {
        self.failures.push(msg.into());
    }
}

/// Validate an optimality certificate against a board.
///
/// Confirms the witness dominates, has exactly `k` cells, that `budget` is
/// `k - 1`, and that the infeasible subproblems partition the search space:
/// their first-queen cells must be exactly the admissible candidates (the
/// fundamental domain when symmetry was used, every cell otherwise), each
/// exactly once, all with status infeasible. Subproblem search outcomes are
/// taken at face value; this does not re-run any search.
pub fn check_certificate(spec: &BoardSpec, cert: &OptimalityCertificate) -> CertificateCheck {
    let mut check = CertificateCheck::default();
    if cert.n != spec.side() {
        check.fail(format!("certificate is for side {}, board has side {}", cert.n, spec.side()));
    }
    if cert.witness.len() != cert.k {
        check.fail(format!("witness has {} cells, claimed k = {}", cert.witness.len(), cert.k));
    }
    if cert.budget + 1 != cert.k {
        check.fail(format!("budget {} is not k - 1 = {}", cert.budget, cert.k as i64 - 1));
    }
    if cert.witness.iter().any(|c| !spec.contains(c)) {
        check.fail("witness contains off-board cells".to_string());
    } else {
        let outcome = is_dominating(spec, &cert.witness);
        if !outcome.ok {
            check.fail(format!(
                "witness does not dominate: first uncovered cell {}",
                outcome.first_uncovered.expect("failed outcome has a cell")
            ));
        }
    }
    if cert.symmetry_used && spec.dim() != 3 {
        check.fail("symmetry-reduced certificates are only defined for 3D boards".to_string());
    }

    let expected: Vec<Cell> = if cert.symmetry_used && spec.dim() == 3 {
        FundamentalDomain::new(spec.side()).cells()
    } else {
        spec.cells().collect()
    };
    let mut seen: Vec<Cell> = cert.subproblems.iter().map(|s| s.first_queen).collect();
    seen.sort();
    let dup = seen.windows(2).any(|w| w[0] == w[1]);
    if dup {
        check.fail("duplicate first-queen subproblem".to_string());
    }
    if seen != expected {
        check.fail(format!(
            "subproblem first queens do not cover the admissible set: got {}, expected {}",
            seen.len(),
            expected.len()
        ));
    }
    for sub in &cert.subproblems {
        if sub.status != SubproblemStatus::Infeasible {
            check.fail(format!("subproblem {} is not infeasible", sub.first_queen));
        }
    }
    check
}

/// Recount `|N[q] ∩ C|` (the inner core is `{1,..,n-2}^dim`) by scanning all
/// core cells against the queen-move predicate, and compare with `claimed`.
pub fn check_kappa(spec: &BoardSpec, q: Cell, claimed: usize) -> Result<bool> {
    if spec.side() < 4 {
        return Err(Error::unsupported(format!(
            "core recount needs side >= 4, got {}",
            spec.side()
        )));
    }
    assert!(spec.contains(q), "cell {q} not on board {spec}");
    let m = spec.side() as i32 - 2;
    let dim = spec.dim();
    let mut count = 0usize;
    let mut coords = [1i32; 3];
    loop {
        let w = Cell::from_coords(&coords[..dim]).expect("valid arity");
        if w == q || attacks(q, w) {
            count += 1;
        }
        // advance odometer over {1,..,m}^dim
        let mut axis = dim;
        loop {
            if axis == 0 {
                return Ok(count == claimed);
            }
            axis -= 1;
            coords[axis] += 1;
            if coords[axis] <= m {
                break;
            }
            coords[axis] = 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::build_adjacency;

    fn cube(n: usize) -> BoardSpec {
        BoardSpec::cube(n).unwrap()
    }

    fn placement(spec: &BoardSpec, cells: &[(i32, i32, i32)]) -> Placement {
        Placement::from_cells(spec, cells.iter().map(|&(x, y, z)| Cell::at3(x, y, z))).unwrap()
    }

    #[test]
    fn queen_offset_predicate() {
        assert!(is_queen_offset(&[1, 0, 0]));
        assert!(is_queen_offset(&[0, -3, 3]));
        assert!(is_queen_offset(&[2, 2, 2]));
        assert!(is_queen_offset(&[0, 0, 5]));
        assert!(!is_queen_offset(&[0, 0, 0]));
        assert!(!is_queen_offset(&[1, 2, 0]));
        assert!(!is_queen_offset(&[2, 2, 1]));
        // symmetric under negation
        assert_eq!(is_queen_offset(&[-2, 0, 2]), is_queen_offset(&[2, 0, -2]));
    }

    #[test]
    fn known_four_board_placement_dominates() {
        let spec = cube(4);
        let s = placement(&spec, &[(1, 0, 3), (1, 1, 0), (1, 2, 0), (1, 3, 3)]);
        let outcome = is_dominating(&spec, &s);
        assert!(outcome.ok);
        assert_eq!(outcome.checked_cells, 64);
        assert_eq!(outcome.first_uncovered, None);
    }

    #[test]
    fn centre_cell_dominates_three_board() {
        let spec = cube(3);
        let s = placement(&spec, &[(1, 1, 1)]);
        assert!(is_dominating(&spec, &s).ok);
    }

    #[test]
    fn single_corner_queen_fails_at_first_gap() {
        let spec = cube(4);
        let s = placement(&spec, &[(0, 0, 0)]);
        let outcome = is_dominating(&spec, &s);
        assert!(!outcome.ok);
        assert_eq!(outcome.first_uncovered, Some(Cell::at3(0, 1, 2)));
        assert_eq!(outcome.checked_cells, spec.index_of(Cell::at3(0, 1, 2)));
    }

    #[test]
    fn empty_placement_fails_immediately() {
        let spec = cube(2);
        let outcome = is_dominating(&spec, &Placement::empty());
        assert!(!outcome.ok);
        assert_eq!(outcome.first_uncovered, Some(Cell::at3(0, 0, 0)));
        assert_eq!(outcome.checked_cells, 0);
    }

    #[test]
    fn kappa_recount_examples() {
        let spec = cube(5);
        assert!(check_kappa(&spec, Cell::at3(0, 0, 2), 5).unwrap());
        assert!(check_kappa(&spec, Cell::at3(2, 2, 2), 27).unwrap());
        assert!(!check_kappa(&spec, Cell::at3(0, 0, 0), 4).unwrap());
        assert!(check_kappa(&spec, Cell::at3(0, 0, 0), 3).unwrap());
        assert!(matches!(
            check_kappa(&cube(3), Cell::at3(0, 0, 0), 1),
            Err(Error::UnsupportedBoard(_))
        ));
    }

    // Two independent adjacency paths must count the same neighbourhoods.
    #[test]
    fn neighbourhood_sizes_agree_with_adjacency_rows() {
        for n in 1..=6usize {
            let spec = cube(n);
            let adj = build_adjacency(&spec).unwrap();
            for v in spec.cells() {
                let direct = spec
                    .cells()
                    .filter(|&w| w == v || attacks(v, w))
                    .count();
                assert_eq!(adj.neighbourhood(v).len(), direct, "n={n} v={v}");
            }
        }
    }

    #[test]
    fn domination_agrees_with_adjacency_union_small_random() {
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(7);
        for n in 1..=5usize {
            let spec = cube(n);
            let adj = build_adjacency(&spec).unwrap();
            for _ in 0..200 {
                let size = rng.random_range(0..=6usize);
                let cells: Vec<Cell> = (0..size)
                    .map(|_| spec.cell_at(rng.random_range(0..spec.cell_count())))
                    .collect();
                let s = Placement::from_cells(&spec, cells).unwrap();
                let mut covered = crate::board::CellSet::empty(spec.cell_count());
                for i in s.indices(&spec) {
                    covered.union_with(adj.row(i));
                }
                let by_union = covered.len() == spec.cell_count();
                assert_eq!(is_dominating(&spec, &s).ok, by_union);
            }
        }
    }
}
