//! Board geometry for the d-dimensional queen graph (d = 2 or 3).
//!
//! Cells are points of `{0,..,n-1}^d`. Two distinct cells are adjacent when
//! one is reachable from the other by a queen move: any number of steps along
//! a line whose direction has every nonzero component of equal magnitude.
//! In 3D there are 13 undirected line families (3 axis, 6 face-diagonal,
//! 4 space-diagonal); in 2D there are 4.
//!
//! Cells are indexed in lexicographic coordinate order (`x*n^2 + y*n + z` for
//! 3D), so "lexicographically smallest" and "smallest index" mean the same
//! thing everywhere in this crate.

use crate::error::{Error, Result};
use std::fmt;

/// Dimension and side length of a board. Immutable once constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoardSpec {
    dim: u8,
    n: usize,
}

impl BoardSpec {
    /// A `dim`-dimensional board of side `n`. Only dim 2 and 3 are supported.
    pub fn new(dim: usize, n: usize) -> Result<Self> {
        if dim != 2 && dim != 3 {
            return Err(Error::invalid(format!("dim must be 2 or 3, got {dim}")));
        }
        if n == 0 {
            return Err(Error::invalid("side length must be at least 1"));
        }
        Ok(BoardSpec { dim: dim as u8, n })
    }

    /// The n x n x n board.
    pub fn cube(n: usize) -> Result<Self> {
        Self::new(3, n)
    }

    /// The n x n board.
    pub fn square(n: usize) -> Result<Self> {
        Self::new(2, n)
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn side(&self) -> usize {
        self.n
    }

    /// Total number of cells, `n^dim`.
    pub fn cell_count(&self) -> usize {
        self.n.pow(self.dim as u32)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.dim() == self.dim()
            && cell.coords().iter().all(|&c| c >= 0 && (c as usize) < self.n)
    }

    /// Index of a cell in lexicographic coordinate order.
    pub fn index_of(&self, cell: Cell) -> usize {
        debug_assert!(self.contains(cell));
        cell.coords()
            .iter()
            .fold(0usize, |acc, &c| acc * self.n + c as usize)
    }

    /// Inverse of [`index_of`](Self::index_of).
    pub fn cell_at(&self, index: usize) -> Cell {
        debug_assert!(index < self.cell_count());
        let n = self.n;
        match self.dim {
            2 => Cell::at2((index / n) as i32, (index % n) as i32),
            _ => Cell::at3(
                (index / (n * n)) as i32,
                ((index / n) % n) as i32,
                (index % n) as i32,
            ),
        }
    }

    /// All cells in lexicographic (= index) order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.cell_count()).map(move |i| self.cell_at(i))
    }
}

impl fmt::Display for BoardSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.n, self.dim)
    }
}

/// One lattice cell. Coordinates beyond the dimension are zero and ignored.
///
/// The derived ordering compares coordinates left to right, which matches
/// index order on any one board.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    coords: [i32; 3],
    dim: u8,
}

impl Cell {
    pub fn at3(x: i32, y: i32, z: i32) -> Cell {
        Cell { coords: [x, y, z], dim: 3 }
    }

    pub fn at2(x: i32, y: i32) -> Cell {
        Cell { coords: [x, y, 0], dim: 2 }
    }

    /// Build a cell from a coordinate slice of length 2 or 3.
    pub fn from_coords(coords: &[i32]) -> Result<Cell> {
        match coords {
            [x, y] => Ok(Cell::at2(*x, *y)),
            [x, y, z] => Ok(Cell::at3(*x, *y, *z)),
            _ => Err(Error::invalid(format!(
                "cell needs 2 or 3 coordinates, got {}",
                coords.len()
            ))),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn coords(&self) -> &[i32] {
        &self.coords[..self.dim as usize]
    }

    pub fn x(&self) -> i32 {
        self.coords[0]
    }

    pub fn y(&self) -> i32 {
        self.coords[1]
    }

    /// Third coordinate; zero on 2D cells.
    pub fn z(&self) -> i32 {
        self.coords[2]
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A canonical undirected queen-line direction: components in `{-1,0,1}`,
/// not all zero, first nonzero component positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Direction {
    delta: [i32; 3],
    dim: u8,
}

impl Direction {
    pub fn delta(&self) -> &[i32] {
        &self.delta[..self.dim as usize]
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    /// Number of nonzero components: 1 = axis, 2 = planar diagonal,
    /// 3 = space diagonal.
    pub fn support(&self) -> usize {
        self.delta().iter().filter(|&&d| d != 0).count()
    }

    fn is_canonical(&self) -> bool {
        let delta = self.delta();
        if !delta.iter().all(|d| (-1..=1).contains(d)) {
            return false;
        }
        match delta.iter().find(|&&d| d != 0) {
            Some(&first) => first == 1,
            None => false,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.delta().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// The canonical direction set: 13 for 3D boards, 4 for 2D boards.
///
/// Order is deterministic: axis directions first, then planar diagonals,
/// then space diagonals, each group ordered with the x component leading
/// (so the very first direction is `(1,0,0)`).
pub fn canonical_directions(spec: &BoardSpec) -> Vec<Direction> {
    let dim = spec.dim();
    let mut deltas: Vec<[i32; 3]> = Vec::new();
    let choices: &[i32] = &[-1, 0, 1];
    for &dx in choices {
        for &dy in choices {
            if dim == 2 {
                deltas.push([dx, dy, 0]);
            } else {
                for &dz in choices {
                    deltas.push([dx, dy, dz]);
                }
            }
        }
    }
    let mut dirs: Vec<Direction> = deltas
        .into_iter()
        .map(|delta| Direction { delta, dim: dim as u8 })
        .filter(Direction::is_canonical)
        .collect();
    dirs.sort_by(|a, b| (a.support(), std::cmp::Reverse(a.delta)).cmp(&(b.support(), std::cmp::Reverse(b.delta))));
    dirs
}

/// All cells `c + t*u` (t over all integers) that lie on the board, in
/// increasing `t` order. Always contains `c` itself.
pub fn line_through(spec: &BoardSpec, c: Cell, u: Direction) -> Result<Vec<Cell>> {
    if u.dim() != spec.dim() || !u.is_canonical() {
        return Err(Error::invalid(format!(
            "direction {u} is not canonical for board {spec}"
        )));
    }
    assert!(spec.contains(c), "cell {c} not on board {spec}");

    let step = |cell: Cell, sign: i32| -> Option<Cell> {
        let mut coords = [0i32; 3];
        for i in 0..spec.dim() {
            coords[i] = cell.coords[i] + sign * u.delta[i];
            if coords[i] < 0 || coords[i] as usize >= spec.side() {
                return None;
            }
        }
        Some(Cell { coords, dim: spec.dim() as u8 })
    };

    let mut backwards = Vec::new();
    let mut cur = c;
    while let Some(prev) = step(cur, -1) {
        backwards.push(prev);
        cur = prev;
    }
    let mut line: Vec<Cell> = backwards.into_iter().rev().collect();
    line.push(c);
    cur = c;
    while let Some(next) = step(cur, 1) {
        line.push(next);
        cur = next;
    }
    Ok(line)
}

/// The closed neighbourhood `N[c]`: `c` plus every cell a queen at `c`
/// attacks.
pub fn closed_neighbourhood(spec: &BoardSpec, c: Cell) -> CellSet {
    assert!(spec.contains(c), "cell {c} not on board {spec}");
    let mut set = CellSet::empty(spec.cell_count());
    for u in canonical_directions(spec) {
        for cell in line_through(spec, c, u).expect("canonical direction") {
            set.insert(spec.index_of(cell));
        }
    }
    set
}

/// Dense bitset over the cells of one board.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellSet {
    nbits: usize,
    words: Vec<u64>,
}

impl CellSet {
    pub fn empty(nbits: usize) -> CellSet {
        CellSet { nbits, words: vec![0; nbits.div_ceil(64)] }
    }

    pub fn full(nbits: usize) -> CellSet {
        let mut set = CellSet { nbits, words: vec![!0u64; nbits.div_ceil(64)] };
        set.mask_tail();
        set
    }

    fn mask_tail(&mut self) {
        let rem = self.nbits % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn capacity(&self) -> usize {
        self.nbits
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.nbits);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Population count.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &CellSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &CellSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// Remove every member of `other`.
    pub fn subtract(&mut self, other: &CellSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn complement(&self) -> CellSet {
        let mut out = CellSet {
            nbits: self.nbits,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.mask_tail();
        out
    }

    /// `|self ∩ other|` without materializing the intersection.
    pub fn intersection_count(&self, other: &CellSet) -> usize {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_disjoint(&self, other: &CellSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_superset_of(&self, other: &CellSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| b & !a == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Members in ascending order.
    pub fn iter(&self) -> SetBits<'_> {
        SetBits { words: &self.words, word_index: 0, current: self.words.first().copied().unwrap_or(0) }
    }
}

impl FromIterator<usize> for CellSet {
    /// Collects indices into the smallest set that holds the maximum index;
    /// mostly a test convenience. Prefer `CellSet::empty(n)` + `insert`.
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let indices: Vec<usize> = iter.into_iter().collect();
        let nbits = indices.iter().max().map_or(0, |m| m + 1);
        let mut set = CellSet::empty(nbits);
        for i in indices {
            set.insert(i);
        }
        set
    }
}

/// Iterator over the set bits of a [`CellSet`], ascending.
pub struct SetBits<'a> {
    words: &'a [u64],
    word_index: usize,
    current: u64,
}

impl Iterator for SetBits<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_index += 1;
            if self.word_index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_index * 64 + bit)
    }
}

/// Cap on `n^dim` for adjacency construction; boards above it need an
/// explicit opt-in via [`build_adjacency_with_cap`]. 32^3 rows of 32^3 bits
/// is 128 MiB, a sensible default ceiling.
pub const DEFAULT_ADJACENCY_CELL_CAP: usize = 32 * 32 * 32;

/// Precomputed closed neighbourhoods for every cell of one board, indexed by
/// cell index. Built once, then shared read-only.
#[derive(Debug, Clone)]
pub struct Adjacency {
    spec: BoardSpec,
    rows: Vec<CellSet>,
}

impl Adjacency {
    pub fn spec(&self) -> &BoardSpec {
        &self.spec
    }

    /// Closed neighbourhood of the cell with the given index.
    pub fn row(&self, index: usize) -> &CellSet {
        &self.rows[index]
    }

    pub fn neighbourhood(&self, cell: Cell) -> &CellSet {
        &self.rows[self.spec.index_of(cell)]
    }

    /// Largest closed-neighbourhood size over all cells.
    pub fn max_closed_neighbourhood(&self) -> usize {
        self.rows.iter().map(CellSet::len).max().unwrap_or(0)
    }
}

/// Build the full adjacency relation (closed neighbourhoods) for a board.
pub fn build_adjacency(spec: &BoardSpec) -> Result<Adjacency> {
    build_adjacency_with_cap(spec, DEFAULT_ADJACENCY_CELL_CAP)
}

/// As [`build_adjacency`] but with a caller-chosen cell-count cap.
pub fn build_adjacency_with_cap(spec: &BoardSpec, max_cells: usize) -> Result<Adjacency> {
    let count = spec.cell_count();
    if count > max_cells {
        return Err(Error::ResourceLimit {
            message: format!(
                "board {spec} has {count} cells, above the adjacency cap of {max_cells}"
            ),
            bounds: None,
        });
    }
    let rows = spec
        .cells()
        .map(|c| closed_neighbourhood(spec, c))
        .collect();
    Ok(Adjacency { spec: *spec, rows })
}

/// A sorted, duplicate-free set of cells: a candidate dominating set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Placement {
    cells: Vec<Cell>,
}

impl Placement {
    /// Sorts and deduplicates; rejects off-board cells.
    pub fn from_cells(spec: &BoardSpec, cells: impl IntoIterator<Item = Cell>) -> Result<Placement> {
        let mut cells: Vec<Cell> = cells.into_iter().collect();
        for c in &cells {
            if !spec.contains(*c) {
                return Err(Error::invalid(format!("cell {c} not on board {spec}")));
            }
        }
        cells.sort();
        cells.dedup();
        Ok(Placement { cells })
    }

    pub fn from_indices(spec: &BoardSpec, indices: impl IntoIterator<Item = usize>) -> Placement {
        let mut cells: Vec<Cell> = indices.into_iter().map(|i| spec.cell_at(i)).collect();
        cells.sort();
        cells.dedup();
        Placement { cells }
    }

    pub fn empty() -> Placement {
        Placement { cells: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }

    /// First (lexicographically smallest) cell.
    pub fn first(&self) -> Option<Cell> {
        self.cells.first().copied()
    }

    pub fn indices(&self, spec: &BoardSpec) -> Vec<usize> {
        self.cells.iter().map(|&c| spec.index_of(c)).collect()
    }

    /// Membership bitset on the given board.
    pub fn to_cell_set(&self, spec: &BoardSpec) -> CellSet {
        let mut set = CellSet::empty(spec.cell_count());
        for &c in &self.cells {
            set.insert(spec.index_of(c));
        }
        set
    }
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube(n: usize) -> BoardSpec {
        BoardSpec::cube(n).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(BoardSpec::new(4, 5).is_err());
        assert!(BoardSpec::new(3, 0).is_err());
        assert_eq!(cube(5).cell_count(), 125);
        assert_eq!(BoardSpec::square(5).unwrap().cell_count(), 25);
    }

    #[test]
    fn indexing_matches_lex_order() {
        let spec = cube(4);
        let mut prev = None;
        for (i, cell) in spec.cells().enumerate() {
            assert_eq!(spec.index_of(cell), i);
            assert_eq!(spec.cell_at(i), cell);
            if let Some(p) = prev {
                assert!(p < cell);
            }
            prev = Some(cell);
        }
    }

    #[test]
    fn thirteen_canonical_directions_in_3d() {
        let dirs = canonical_directions(&cube(5));
        assert_eq!(dirs.len(), 13);
        assert_eq!(dirs[0].delta(), &[1, 0, 0]);
        let counts: Vec<usize> = dirs.iter().map(Direction::support).collect();
        assert_eq!(counts.iter().filter(|&&s| s == 1).count(), 3);
        assert_eq!(counts.iter().filter(|&&s| s == 2).count(), 6);
        assert_eq!(counts.iter().filter(|&&s| s == 3).count(), 4);
        assert!(dirs.iter().any(|d| d.delta() == [1, 1, -1]));
        assert!(!dirs.iter().any(|d| d.delta() == [-1, -1, 1]));
    }

    #[test]
    fn four_canonical_directions_in_2d() {
        let dirs = canonical_directions(&BoardSpec::square(5).unwrap());
        assert_eq!(dirs.len(), 4);
        assert_eq!(dirs[0].delta(), &[1, 0]);
    }

    #[test]
    fn line_along_main_diagonal() {
        let spec = cube(4);
        let u = canonical_directions(&spec)
            .into_iter()
            .find(|d| d.delta() == [1, 1, 1])
            .unwrap();
        let line = line_through(&spec, Cell::at3(0, 0, 0), u).unwrap();
        let expect: Vec<Cell> = (0..4).map(|t| Cell::at3(t, t, t)).collect();
        assert_eq!(line, expect);
    }

    #[test]
    fn line_through_face_diagonal_has_five_cells() {
        let spec = cube(5);
        let u = canonical_directions(&spec)
            .into_iter()
            .find(|d| d.delta() == [1, 1, 0])
            .unwrap();
        let line = line_through(&spec, Cell::at3(0, 0, 2), u).unwrap();
        assert_eq!(line.len(), 5);
        assert_eq!(line[0], Cell::at3(0, 0, 2));
        assert_eq!(line[4], Cell::at3(4, 4, 2));
    }

    #[test]
    fn line_on_single_cell_board() {
        let spec = cube(1);
        for u in canonical_directions(&spec) {
            let line = line_through(&spec, Cell::at3(0, 0, 0), u).unwrap();
            assert_eq!(line, vec![Cell::at3(0, 0, 0)]);
        }
    }

    #[test]
    fn non_canonical_direction_rejected() {
        let spec = cube(4);
        let bad = Direction { delta: [-1, 0, 0], dim: 3 };
        assert!(line_through(&spec, Cell::at3(0, 0, 0), bad).is_err());
        let wrong_dim = Direction { delta: [1, 0, 0], dim: 2 };
        assert!(line_through(&spec, Cell::at3(0, 0, 0), wrong_dim).is_err());
    }

    #[test]
    fn lines_through_a_cell_meet_only_there() {
        let spec = cube(5);
        let c = Cell::at3(1, 2, 3);
        let dirs = canonical_directions(&spec);
        for (i, &u) in dirs.iter().enumerate() {
            let a = line_through(&spec, c, u).unwrap();
            // monotone in t means strictly increasing cell order along delta
            for w in a.windows(2) {
                for k in 0..3 {
                    assert_eq!(w[1].coords[k] - w[0].coords[k], u.delta[k]);
                }
            }
            for &v in dirs.iter().skip(i + 1) {
                let b = line_through(&spec, c, v).unwrap();
                let shared: Vec<&Cell> = a.iter().filter(|x| b.contains(x)).collect();
                assert_eq!(shared, vec![&c]);
            }
        }
    }

    #[test]
    fn centre_neighbourhood_size_is_13n_minus_12() {
        let spec = cube(5);
        let nb = closed_neighbourhood(&spec, Cell::at3(2, 2, 2));
        assert_eq!(nb.len(), 13 * 5 - 12);
    }

    #[test]
    fn corner_neighbourhood_size_n4() {
        // only 7 of the 13 directions leave the corner; each contributes 3
        let spec = cube(4);
        let nb = closed_neighbourhood(&spec, Cell::at3(0, 0, 0));
        assert_eq!(nb.len(), 22);
    }

    #[test]
    fn two_board_is_fully_connected() {
        let spec = cube(2);
        for c in spec.cells() {
            assert_eq!(closed_neighbourhood(&spec, c).len(), 8);
        }
    }

    #[test]
    fn adjacency_row_of_centre_covers_whole_3_board() {
        let spec = cube(3);
        let adj = build_adjacency(&spec).unwrap();
        assert_eq!(adj.neighbourhood(Cell::at3(1, 1, 1)).len(), 27);
    }

    #[test]
    fn space_diagonal_adjacent_but_knightish_offset_not() {
        let spec = cube(4);
        let adj = build_adjacency(&spec).unwrap();
        let row = adj.neighbourhood(Cell::at3(0, 0, 0));
        assert!(row.contains(spec.index_of(Cell::at3(2, 2, 2))));
        assert!(!row.contains(spec.index_of(Cell::at3(1, 2, 0))));
    }

    #[test]
    fn adjacency_symmetric_and_reflexive() {
        let spec = cube(5);
        let adj = build_adjacency(&spec).unwrap();
        for i in 0..spec.cell_count() {
            assert!(adj.row(i).contains(i));
            for j in adj.row(i).iter() {
                assert!(adj.row(j).contains(i));
            }
        }
    }

    #[test]
    fn adjacency_cap_guard() {
        let spec = cube(33);
        match build_adjacency(&spec) {
            Err(Error::ResourceLimit { .. }) => {}
            other => panic!("expected resource limit, got {other:?}"),
        }
        assert!(build_adjacency_with_cap(&cube(4), 64).is_ok());
    }

    // The closed-neighbourhood maximum: bounded by 13n-12 everywhere; the
    // bound is attained at the centre for odd n, while even boards top out
    // at 13n-18 (n >= 2), since their anti-diagonals never run full length.
    #[test]
    fn max_neighbourhood_by_parity() {
        for n in 2..=8usize {
            let spec = cube(n);
            let adj = build_adjacency(&spec).unwrap();
            let max = adj.max_closed_neighbourhood();
            assert!(max <= 13 * n - 12);
            if n % 2 == 1 {
                assert_eq!(max, 13 * n - 12, "n={n}");
                let mid = (n as i32 - 1) / 2;
                assert_eq!(adj.neighbourhood(Cell::at3(mid, mid, mid)).len(), max);
            } else {
                assert_eq!(max, 13 * n - 18, "n={n}");
            }
        }
    }

    #[test]
    fn cellset_ops() {
        let mut a = CellSet::empty(130);
        a.insert(0);
        a.insert(64);
        a.insert(129);
        assert_eq!(a.len(), 3);
        assert!(a.contains(64));
        assert_eq!(a.first(), Some(0));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 64, 129]);

        let mut b = CellSet::empty(130);
        b.insert(64);
        b.insert(100);
        assert_eq!(a.intersection_count(&b), 1);

        let mut u = a.clone();
        u.union_with(&b);
        assert_eq!(u.len(), 4);
        u.subtract(&a);
        assert_eq!(u.iter().collect::<Vec<_>>(), vec![100]);

        let c = CellSet::full(130).complement();
        assert!(c.is_empty());
        assert_eq!(CellSet::full(130).len(), 130);
        a.remove(64);
        assert!(!a.contains(64));
    }

    #[test]
    fn placement_sorts_and_dedups() {
        let spec = cube(4);
        let p = Placement::from_cells(
            &spec,
            vec![Cell::at3(3, 3, 3), Cell::at3(0, 0, 0), Cell::at3(3, 3, 3)],
        )
        .unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.first(), Some(Cell::at3(0, 0, 0)));
        assert!(p.contains(Cell::at3(3, 3, 3)));
        assert!(Placement::from_cells(&spec, vec![Cell::at3(4, 0, 0)]).is_err());
        assert_eq!(p.to_string(), "(0,0,0) (3,3,3)");
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;
        use std::collections::BTreeSet;

        proptest! {
            // CellSet against a BTreeSet model
            #[test]
            fn cellset_matches_set_model(ops in proptest::collection::vec((0usize..200, any::<bool>()), 1..120)) {
                let mut set = CellSet::empty(200);
                let mut model = BTreeSet::new();
                for (i, add) in ops {
                    if add {
                        set.insert(i);
                        model.insert(i);
                    } else {
                        set.remove(i);
                        model.remove(&i);
                    }
                }
                prop_assert_eq!(set.len(), model.len());
                prop_assert_eq!(set.iter().collect::<Vec<_>>(), model.iter().copied().collect::<Vec<_>>());
                prop_assert_eq!(set.first(), model.first().copied());
                prop_assert_eq!(set.complement().len(), 200 - model.len());
            }
        }
    }
}
