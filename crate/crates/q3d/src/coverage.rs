//! Inner-core coverage: how many non-boundary cells one queen dominates.
//!
//! For a board of side `n >= 4`, the inner core is `C = {1,..,n-2}^3` with
//! `m = n - 2`. Writing `kappa(q) = |N[q] ∩ C|`, the value stratifies by how
//! deep `q` sits in the boundary:
//!
//! * corner: exactly `m`
//! * edge (non-corner): exactly `2m - 1`
//! * face (non-edge): exactly `5m - 4 - f(a,c)` where `f(a,c) =
//!   |a-c| + |a+c-M|` over the two free coordinates and `M = m - 1`; the
//!   maximum `5m - 4 - ((m-1) mod 2)` is reached at the face centre when one
//!   exists (`m` odd) and at the four nearest lattice points otherwise
//! * interior: at most `13m - 12`, with equality at the board centre
//!
//! So boundary queens always cover strictly fewer core cells than the best
//! interior queen, which is what justifies steering searches toward interior
//! placements first.

use crate::board::{
    canonical_directions, line_through, BoardSpec, Cell, CellSet, Direction,
};
use crate::error::{Error, Result};

/// How many coordinates of a cell lie on the boundary `{0, n-1}`:
/// 3 = corner, 2 = edge, 1 = face, 0 = interior.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PositionType {
    Corner,
    Edge,
    Face,
    Interior,
}

impl PositionType {
    pub const ALL: [PositionType; 4] =
        [PositionType::Corner, PositionType::Edge, PositionType::Face, PositionType::Interior];

    pub fn name(&self) -> &'static str {
        match self {
            PositionType::Corner => "corner",
            PositionType::Edge => "edge",
            PositionType::Face => "face",
            PositionType::Interior => "interior",
        }
    }
}

impl std::fmt::Display for PositionType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Classify a 3D cell by its boundary-coordinate count.
pub fn classify(spec: &BoardSpec, q: Cell) -> PositionType {
    assert_eq!(spec.dim(), 3, "position types are defined on 3D boards");
    assert!(spec.contains(q), "cell {q} not on board {spec}");
    let hi = spec.side() as i32 - 1;
    let boundary = q.coords().iter().filter(|&&c| c == 0 || c == hi).count();
    match boundary {
        3 => PositionType::Corner,
        2 => PositionType::Edge,
        1 => PositionType::Face,
        _ => PositionType::Interior,
    }
}

/// The inner core `{1,..,n-2}^3` of a board with side `n >= 4`.
#[derive(Debug, Clone)]
pub struct CoreGeometry {
    n: usize,
    m: usize,
    eps_m: usize,
    core: CellSet,
}

impl CoreGeometry {
    pub fn new(spec: &BoardSpec) -> Result<CoreGeometry> {
        if spec.dim() != 3 {
            return Err(Error::unsupported("core stratification is defined on 3D boards"));
        }
        if spec.side() < 4 {
            return Err(Error::unsupported(format!(
                "core stratification needs side >= 4, got {}",
                spec.side()
            )));
        }
        let n = spec.side();
        let m = n - 2;
        let mut core = CellSet::empty(spec.cell_count());
        for cell in spec.cells() {
            if cell.coords().iter().all(|&c| c >= 1 && c <= m as i32) {
                core.insert(spec.index_of(cell));
            }
        }
        Ok(CoreGeometry { n, m, eps_m: (m - 1) % 2, core })
    }

    pub fn side(&self) -> usize {
        self.n
    }

    /// Core side length, `n - 2`.
    pub fn m(&self) -> usize {
        self.m
    }

    /// `(m - 1) mod 2`: the parity defect in the face-coverage maximum.
    pub fn eps_m(&self) -> usize {
        self.eps_m
    }

    pub fn cells(&self) -> &CellSet {
        &self.core
    }

    pub fn cell_count(&self) -> usize {
        self.m.pow(3)
    }

    pub fn contains(&self, spec: &BoardSpec, c: Cell) -> bool {
        self.core.contains(spec.index_of(c))
    }
}

/// `f(a,c) = |a-c| + |a+c-M|` for `0 <= a,c <= M`. Always congruent to `M`
/// mod 2, hence at least `M mod 2`.
pub fn parity_f(span: usize, a: usize, c: usize) -> Result<usize> {
    if span < 1 {
        return Err(Error::invalid("span must be at least 1"));
    }
    if a > span || c > span {
        return Err(Error::invalid(format!(
            "offsets must lie in [0, {span}], got a={a}, c={c}"
        )));
    }
    let (a, c, span) = (a as i64, c as i64, span as i64);
    Ok(((a - c).abs() + (a + c - span).abs()) as usize)
}

/// The pairs minimizing [`parity_f`]: the single central pair when `span` is
/// even, the four nearest-to-centre pairs when odd.
pub fn parity_minimizers(span: usize) -> Vec<(usize, usize)> {
    assert!(span >= 1, "span must be at least 1");
    if span % 2 == 0 {
        vec![(span / 2, span / 2)]
    } else {
        let lo = (span - 1) / 2;
        let hi = (span + 1) / 2;
        vec![(lo, lo), (lo, hi), (hi, lo), (hi, hi)]
    }
}

/// Offsets of a face cell from the edges of its face, as used by the face
/// coverage formula: `a + b = c + d = span` with `span = m - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceOffsets {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub span: usize,
}

impl FaceOffsets {
    /// Extract offsets from a face (non-edge) cell. Cells on the far face
    /// are first reflected onto the zero face; the two free coordinates are
    /// taken in increasing axis order.
    pub fn from_face_cell(spec: &BoardSpec, q: Cell) -> Result<FaceOffsets> {
        let core = CoreGeometry::new(spec)?;
        if classify(spec, q) != PositionType::Face {
            return Err(Error::invalid(format!("{q} is not a face cell")));
        }
        let hi = spec.side() as i32 - 1;
        let free: Vec<i64> = q
            .coords()
            .iter()
            .filter(|&&t| t != 0 && t != hi)
            .map(|&t| t as i64)
            .collect();
        debug_assert_eq!(free.len(), 2);
        let m = core.m() as i64;
        let (y, z) = (free[0], free[1]);
        Ok(FaceOffsets {
            a: (y - 1) as usize,
            b: (m - y) as usize,
            c: (z - 1) as usize,
            d: (m - z) as usize,
            span: (m - 1) as usize,
        })
    }

    pub fn f(&self) -> usize {
        parity_f(self.span, self.a, self.c).expect("offsets in range")
    }
}

/// Core coverage of one queen, with the per-direction breakdown.
#[derive(Debug, Clone)]
pub struct CoverageReport {
    pub queen: Cell,
    pub ptype: PositionType,
    pub kappa: usize,
    /// Core cells contributed along each canonical direction, excluding the
    /// queen itself.
    pub per_direction: Vec<(Direction, usize)>,
}

/// Exact `kappa(q) = |N[q] ∩ C|`, computed by walking the queen line in each
/// canonical direction and counting its core cells. Distinct lines through
/// one cell meet only there, so the per-direction counts add up exactly.
pub fn kappa_exact(spec: &BoardSpec, q: Cell) -> Result<CoverageReport> {
    let core = CoreGeometry::new(spec)?;
    assert!(spec.contains(q), "cell {q} not on board {spec}");
    let mut per_direction = Vec::with_capacity(13);
    let mut kappa = usize::from(core.contains(spec, q));
    for u in canonical_directions(spec) {
        let count = line_through(spec, q, u)
            .expect("canonical direction")
            .into_iter()
            .filter(|&w| w != q && core.contains(spec, w))
            .count();
        kappa += count;
        per_direction.push((u, count));
    }
    Ok(CoverageReport { queen: q, ptype: classify(spec, q), kappa, per_direction })
}

/// Closed-form coverage where the stratification gives one, the proved bound
/// where it does not.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KappaValue {
    /// Corner, edge, and face cells have exact closed forms.
    Exact(usize),
    /// Interior cells only carry the `13m - 12` upper bound; the exact value
    /// comes from enumeration.
    InteriorBound { upper: usize, exact: usize },
}

impl KappaValue {
    /// The exact coverage regardless of variant.
    pub fn exact(&self) -> usize {
        match *self {
            KappaValue::Exact(v) => v,
            KappaValue::InteriorBound { exact, .. } => exact,
        }
    }
}

/// Evaluate the stratified coverage formula at one cell.
pub fn kappa_formula(spec: &BoardSpec, q: Cell) -> Result<KappaValue> {
    let core = CoreGeometry::new(spec)?;
    assert!(spec.contains(q), "cell {q} not on board {spec}");
    let m = core.m();
    match classify(spec, q) {
        PositionType::Corner => Ok(KappaValue::Exact(m)),
        PositionType::Edge => Ok(KappaValue::Exact(2 * m - 1)),
        PositionType::Face => {
            let offsets = FaceOffsets::from_face_cell(spec, q)?;
            Ok(KappaValue::Exact(5 * m - 4 - offsets.f()))
        }
        PositionType::Interior => Ok(KappaValue::InteriorBound {
            upper: 13 * m - 12,
            exact: kappa_exact(spec, q)?.kappa,
        }),
    }
}

/// Maximum coverage and its attaining cells for one position type.
#[derive(Debug, Clone)]
pub struct StratumSummary {
    pub ptype: PositionType,
    pub max_kappa: usize,
    pub argmax: Vec<Cell>,
}

/// Per-position-type coverage maxima over a whole board.
#[derive(Debug, Clone)]
pub struct StrataSummary {
    pub n: usize,
    pub m: usize,
    pub strata: [StratumSummary; 4],
}

impl StrataSummary {
    pub fn stratum(&self, ptype: PositionType) -> &StratumSummary {
        self.strata
            .iter()
            .find(|s| s.ptype == ptype)
            .expect("all four types present")
    }

    /// The four maxima in corner, edge, face, interior order.
    pub fn maxima(&self) -> [usize; 4] {
        [
            self.stratum(PositionType::Corner).max_kappa,
            self.stratum(PositionType::Edge).max_kappa,
            self.stratum(PositionType::Face).max_kappa,
            self.stratum(PositionType::Interior).max_kappa,
        ]
    }
}

/// Enumerate coverage over every cell and summarize by position type.
///
/// Also re-checks the separation chain
/// `m < 2m-1 <= 5m-5 <= 5m-4-eps_m < 13m-18 <= interior max`
/// that makes boundary cells strictly worse than the core optimum; a
/// violation would mean the enumeration and the closed forms disagree, so it
/// panics rather than returning.
pub fn strata_summary(spec: &BoardSpec) -> Result<StrataSummary> {
    let core = CoreGeometry::new(spec)?;
    let m = core.m();
    let mut maxima: [Option<StratumSummary>; 4] = [None, None, None, None];
    for q in spec.cells() {
        let report = kappa_exact(spec, q)?;
        let slot = &mut maxima[report.ptype as usize];
        match slot {
            Some(s) if report.kappa > s.max_kappa => {
                s.max_kappa = report.kappa;
                s.argmax = vec![q];
            }
            Some(s) if report.kappa == s.max_kappa => s.argmax.push(q),
            Some(_) => {}
            None => {
                *slot = Some(StratumSummary {
                    ptype: report.ptype,
                    max_kappa: report.kappa,
                    argmax: vec![q],
                })
            }
        }
    }
    let strata = maxima.map(|s| s.expect("every position type occurs when n >= 4"));
    let summary = StrataSummary { n: spec.side(), m, strata };

    if m >= 2 {
        let [corner, edge, face, interior] = summary.maxima();
        assert_eq!(corner, m);
        assert_eq!(edge, 2 * m - 1);
        assert_eq!(face, 5 * m - 4 - core.eps_m());
        assert!(corner < edge, "separation chain broken at corner/edge");
        assert!(edge <= 5 * m - 5, "separation chain broken at edge/face");
        assert!(face < 13 * m - 18, "separation chain broken at face/interior");
        assert!(13 * m - 18 <= interior, "interior maximum below 13m-18");
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::check_kappa;

    fn cube(n: usize) -> BoardSpec {
        BoardSpec::cube(n).unwrap()
    }

    #[test]
    fn parity_f_examples() {
        assert_eq!(parity_f(2, 1, 1).unwrap(), 0);
        assert_eq!(parity_f(3, 1, 2).unwrap(), 1);
        assert_eq!(parity_f(1, 0, 0).unwrap(), 1);
        assert!(parity_f(2, 3, 0).is_err());
        assert!(parity_f(0, 0, 0).is_err());
    }

    #[test]
    fn parity_f_congruence_and_floor() {
        for span in 1..=20usize {
            let minimum = span % 2;
            let mut attained = Vec::new();
            for a in 0..=span {
                for c in 0..=span {
                    let f = parity_f(span, a, c).unwrap();
                    assert_eq!(f % 2, span % 2, "span={span} a={a} c={c}");
                    assert!(f >= minimum);
                    if f == minimum {
                        attained.push((a, c));
                    }
                }
            }
            assert_eq!(attained, parity_minimizers(span), "span={span}");
        }
    }

    #[test]
    fn parity_minimizer_examples() {
        assert_eq!(parity_minimizers(2), vec![(1, 1)]);
        assert_eq!(parity_minimizers(3), vec![(1, 1), (1, 2), (2, 1), (2, 2)]);
        assert_eq!(parity_minimizers(1), vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
    }

    #[test]
    fn classify_examples() {
        let spec = cube(5);
        assert_eq!(classify(&spec, Cell::at3(0, 0, 0)), PositionType::Corner);
        assert_eq!(classify(&spec, Cell::at3(0, 0, 2)), PositionType::Edge);
        assert_eq!(classify(&spec, Cell::at3(0, 2, 2)), PositionType::Face);
        assert_eq!(classify(&spec, Cell::at3(2, 2, 2)), PositionType::Interior);
        assert_eq!(classify(&spec, Cell::at3(4, 4, 0)), PositionType::Corner);
        assert_eq!(classify(&spec, Cell::at3(4, 1, 4)), PositionType::Edge);
    }

    #[test]
    fn kappa_exact_examples() {
        let spec = cube(5);
        assert_eq!(kappa_exact(&spec, Cell::at3(0, 0, 0)).unwrap().kappa, 3);
        assert_eq!(kappa_exact(&spec, Cell::at3(0, 0, 2)).unwrap().kappa, 5);
        assert_eq!(kappa_exact(&spec, Cell::at3(0, 2, 2)).unwrap().kappa, 11);
        assert_eq!(kappa_exact(&spec, Cell::at3(2, 2, 2)).unwrap().kappa, 27);
        assert_eq!(kappa_exact(&cube(6), Cell::at3(2, 2, 2)).unwrap().kappa, 34);
        assert!(matches!(
            kappa_exact(&cube(3), Cell::at3(1, 1, 1)),
            Err(Error::UnsupportedBoard(_))
        ));
    }

    #[test]
    fn per_direction_counts_sum_to_kappa() {
        let spec = cube(6);
        for q in [Cell::at3(0, 0, 0), Cell::at3(0, 3, 2), Cell::at3(2, 3, 1)] {
            let report = kappa_exact(&spec, q).unwrap();
            assert_eq!(report.per_direction.len(), 13);
            let core = CoreGeometry::new(&spec).unwrap();
            let direction_sum: usize = report.per_direction.iter().map(|(_, c)| c).sum();
            let self_term = usize::from(core.contains(&spec, q));
            assert_eq!(report.kappa, direction_sum + self_term);
        }
    }

    #[test]
    fn kappa_formula_examples() {
        let spec5 = cube(5);
        assert_eq!(kappa_formula(&spec5, Cell::at3(0, 0, 2)).unwrap(), KappaValue::Exact(5));
        // n=6 face cell (0,2,2): free coords (2,2), span M=3, f=1
        let spec6 = cube(6);
        assert_eq!(kappa_formula(&spec6, Cell::at3(0, 2, 2)).unwrap(), KappaValue::Exact(15));
        assert_eq!(
            kappa_formula(&spec5, Cell::at3(2, 2, 2)).unwrap(),
            KappaValue::InteriorBound { upper: 27, exact: 27 }
        );
        assert!(kappa_formula(&cube(3), Cell::at3(0, 0, 0)).is_err());
    }

    #[test]
    fn face_offsets_reflect_far_face() {
        let spec = cube(6);
        let near = FaceOffsets::from_face_cell(&spec, Cell::at3(0, 2, 3)).unwrap();
        let far = FaceOffsets::from_face_cell(&spec, Cell::at3(5, 2, 3)).unwrap();
        assert_eq!(near, far);
        assert_eq!(near.a + near.b, near.span);
        assert_eq!(near.c + near.d, near.span);
        assert!(FaceOffsets::from_face_cell(&spec, Cell::at3(0, 0, 2)).is_err());
    }

    #[test]
    fn strata_summary_examples() {
        let s5 = strata_summary(&cube(5)).unwrap();
        assert_eq!(s5.maxima(), [3, 5, 11, 27]);
        assert_eq!(s5.stratum(PositionType::Interior).argmax, vec![Cell::at3(2, 2, 2)]);

        let s4 = strata_summary(&cube(4)).unwrap();
        assert_eq!(s4.stratum(PositionType::Corner).max_kappa, 2);

        let s6 = strata_summary(&cube(6)).unwrap();
        assert_eq!(s6.stratum(PositionType::Face).max_kappa, 15);
        assert_eq!(s6.stratum(PositionType::Interior).max_kappa, 34);
    }

    // Three-way agreement at module scale (the acceptance suite extends the
    // range): formula == enumeration == independent recount.
    #[test]
    fn formula_enumeration_and_recount_agree() {
        for n in 4..=6usize {
            let spec = cube(n);
            for q in spec.cells() {
                let exact = kappa_exact(&spec, q).unwrap().kappa;
                match kappa_formula(&spec, q).unwrap() {
                    KappaValue::Exact(v) => assert_eq!(v, exact, "n={n} q={q}"),
                    KappaValue::InteriorBound { upper, exact: e } => {
                        assert_eq!(e, exact);
                        assert!(exact <= upper);
                    }
                }
                assert!(check_kappa(&spec, q, exact).unwrap());
            }
        }
    }

    #[test]
    fn face_maximum_multiplicity_follows_parity() {
        for n in 4..=9usize {
            let spec = cube(n);
            let m = n - 2;
            let summary = strata_summary(&spec).unwrap();
            let face_max = summary.stratum(PositionType::Face).argmax.len();
            // 6 faces; unique centre per face for odd m, four cells otherwise
            if m % 2 == 1 {
                assert_eq!(face_max, 6, "n={n}");
            } else {
                assert_eq!(face_max, 24, "n={n}");
            }
        }
    }

    #[test]
    fn interior_maximum_attainment_by_parity() {
        for n in [5usize, 7, 9] {
            let m = n - 2;
            let summary = strata_summary(&cube(n)).unwrap();
            assert_eq!(summary.stratum(PositionType::Interior).max_kappa, 13 * m - 12);
            let mid = (n as i32 - 1) / 2;
            assert!(summary
                .stratum(PositionType::Interior)
                .argmax
                .contains(&Cell::at3(mid, mid, mid)));
        }
        for n in [4usize, 6, 8] {
            let m = n - 2;
            let summary = strata_summary(&cube(n)).unwrap();
            assert_eq!(summary.stratum(PositionType::Interior).max_kappa, 13 * m - 18);
        }
    }

    #[test]
    fn separation_chain_holds_through_n12() {
        for n in 4..=12usize {
            // the assertions live inside strata_summary
            strata_summary(&cube(n)).unwrap();
        }
    }
}
