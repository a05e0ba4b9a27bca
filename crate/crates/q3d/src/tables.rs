//! Known domination numbers of the 3D queen graph, with example optimal
//! placements. Used to cross-check freshly computed results and to seed the
//! n = 7 attempt with its best published upper-bound witness.

use crate::board::{BoardSpec, Cell, Placement};

/// Largest side with a known exact value.
pub const MAX_EXACT_N: usize = 6;

/// Largest side with any table entry.
pub const MAX_KNOWN_N: usize = 7;

/// Best known interval for the open n = 7 case.
pub const N7_KNOWN_INTERVAL: (usize, usize) = (10, 12);

const GAMMA3: [usize; 6] = [1, 1, 1, 4, 6, 8];

const PLACEMENTS: [&[(i32, i32, i32)]; 7] = [
    &[(0, 0, 0)],
    &[(1, 0, 0)],
    &[(1, 1, 1)],
    &[(1, 0, 3), (1, 1, 0), (1, 2, 0), (1, 3, 3)],
    &[(1, 0, 3), (1, 1, 0), (1, 3, 4), (1, 4, 1), (2, 2, 2), (3, 2, 2)],
    &[
        (2, 2, 2), (2, 2, 3), (2, 3, 2), (2, 3, 3),
        (3, 2, 2), (3, 2, 3), (3, 3, 2), (3, 3, 3),
    ],
    &[
        (0, 4, 3), (0, 6, 6), (1, 1, 5), (2, 3, 0), (2, 4, 0), (3, 0, 2),
        (3, 6, 4), (4, 3, 6), (4, 6, 4), (5, 0, 1), (6, 2, 3), (6, 5, 1),
    ],
];

/// The exact domination number of the side-`n` cubic board, when known.
pub fn known_gamma3(n: usize) -> Option<usize> {
    if (1..=MAX_EXACT_N).contains(&n) {
        Some(GAMMA3[n - 1])
    } else {
        None
    }
}

/// A reference placement for side `n`: optimal for `n <= 6`, the best known
/// 12-queen dominating set for `n = 7`.
pub fn known_placement3(n: usize) -> Option<Placement> {
    if !(1..=MAX_KNOWN_N).contains(&n) {
        return None;
    }
    let spec = BoardSpec::cube(n).expect("valid side");
    let cells = PLACEMENTS[n - 1].iter().map(|&(x, y, z)| Cell::at3(x, y, z));
    Some(Placement::from_cells(&spec, cells).expect("table placements are on-board"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::is_dominating;

    #[test]
    fn table_placements_dominate_and_match_sizes() {
        for n in 1..=MAX_KNOWN_N {
            let spec = BoardSpec::cube(n).unwrap();
            let placement = known_placement3(n).unwrap();
            assert!(is_dominating(&spec, &placement).ok, "n={n}");
            if let Some(gamma) = known_gamma3(n) {
                assert_eq!(placement.len(), gamma, "n={n}");
            } else {
                assert_eq!(placement.len(), N7_KNOWN_INTERVAL.1);
            }
        }
        assert_eq!(known_gamma3(7), None);
        assert_eq!(known_placement3(8), None);
    }
}
