//! The order-48 symmetry group of the cube acting on 3D boards.
//!
//! Each element permutes the three axes and then reflects any subset of them
//! (`t -> n-1-t`). All 48 elements are graph automorphisms of the 3D queen
//! graph, so a dominating set stays dominating under any of them. The
//! fundamental domain `F(n) = {0 <= x <= y <= z <= (n-1)/2}` meets every
//! orbit, which is what makes first-queen symmetry breaking lossless.

use crate::board::{BoardSpec, Cell, Placement};
use crate::error::{Error, Result};

/// An axis permutation followed by per-axis reflections.
///
/// `apply` sends a cell `c` to the cell whose `i`-th coordinate is
/// `c[perm[i]]`, reflected when `flips[i]` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymmetryElement {
    perm: [u8; 3],
    flips: [bool; 3],
}

impl SymmetryElement {
    pub const IDENTITY: SymmetryElement =
        SymmetryElement { perm: [0, 1, 2], flips: [false, false, false] };

    pub fn new(perm: [u8; 3], flips: [bool; 3]) -> Result<Self> {
        let mut seen = [false; 3];
        for &p in &perm {
            if p > 2 || seen[p as usize] {
                return Err(Error::invalid("perm must be a permutation of {0,1,2}"));
            }
            seen[p as usize] = true;
        }
        Ok(SymmetryElement { perm, flips })
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// Image of a cell under this element.
    pub fn apply(&self, spec: &BoardSpec, c: Cell) -> Cell {
        assert_eq!(spec.dim(), 3, "symmetry elements act on 3D boards");
        assert!(spec.contains(c), "cell {c} not on board {spec}");
        let n = spec.side() as i32;
        let mut coords = [0i32; 3];
        for i in 0..3 {
            let t = c.coords()[self.perm[i] as usize];
            coords[i] = if self.flips[i] { n - 1 - t } else { t };
        }
        Cell::at3(coords[0], coords[1], coords[2])
    }

    /// Composition `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &SymmetryElement) -> SymmetryElement {
        let mut perm = [0u8; 3];
        let mut flips = [false; 3];
        for i in 0..3 {
            perm[i] = other.perm[self.perm[i] as usize];
            flips[i] = self.flips[i] ^ other.flips[self.perm[i] as usize];
        }
        SymmetryElement { perm, flips }
    }
}

/// All 48 elements (6 axis permutations x 8 reflection patterns), in a fixed
/// deterministic order starting with the identity.
pub fn all_elements() -> Vec<SymmetryElement> {
    const PERMS: [[u8; 3]; 6] =
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::with_capacity(48);
    for perm in PERMS {
        for bits in 0..8u8 {
            out.push(SymmetryElement {
                perm,
                flips: [bits & 1 != 0, bits & 2 != 0, bits & 4 != 0],
            });
        }
    }
    out
}

/// The orbit `{σ(c) : σ in the group}`, sorted and deduplicated. Its size
/// always divides 48.
pub fn cell_orbit(spec: &BoardSpec, c: Cell) -> Vec<Cell> {
    let mut orbit: Vec<Cell> = all_elements().iter().map(|s| s.apply(spec, c)).collect();
    orbit.sort();
    orbit.dedup();
    orbit
}

/// The lexicographically smallest image of a placement over all 48 group
/// elements, comparing sorted cell sequences. The result is idempotent and
/// its first cell always lies in the fundamental domain.
pub fn canonical_placement(spec: &BoardSpec, s: &Placement) -> Result<Placement> {
    if s.is_empty() {
        return Err(Error::invalid("cannot canonicalize an empty placement"));
    }
    let mut best: Option<Vec<Cell>> = None;
    for sigma in all_elements() {
        let mut image: Vec<Cell> = s.iter().map(|c| sigma.apply(spec, c)).collect();
        image.sort();
        if best.as_ref().map_or(true, |b| image < *b) {
            best = Some(image);
        }
    }
    Placement::from_cells(spec, best.expect("nonempty placement"))
}

/// The fundamental domain `F(n) = {(x,y,z) : 0 <= x <= y <= z <= (n-1)/2}`,
/// with the bound taken as an integer floor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FundamentalDomain {
    n: usize,
}

impl FundamentalDomain {
    pub fn new(n: usize) -> FundamentalDomain {
        FundamentalDomain { n }
    }

    pub fn side(&self) -> usize {
        self.n
    }

    fn cap(&self) -> i32 {
        ((self.n - 1) / 2) as i32
    }

    pub fn contains(&self, c: Cell) -> bool {
        if c.dim() != 3 {
            return false;
        }
        let (x, y, z) = (c.x(), c.y(), c.z());
        0 <= x && x <= y && y <= z && z <= self.cap()
    }

    /// Member cells in lexicographic order.
    pub fn cells(&self) -> Vec<Cell> {
        let cap = self.cap();
        let mut out = Vec::new();
        for x in 0..=cap {
            for y in x..=cap {
                for z in y..=cap {
                    out.push(Cell::at3(x, y, z));
                }
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        let k = self.cap() as usize + 1;
        k * (k + 1) * (k + 2) / 6
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Membership test for `F(n)` on a given board.
pub fn in_fundamental_domain(spec: &BoardSpec, c: Cell) -> bool {
    assert_eq!(spec.dim(), 3, "fundamental domain is defined on 3D boards");
    FundamentalDomain::new(spec.side()).contains(c)
}
