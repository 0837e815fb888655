use crate::config::Region;
use crate::error::{Error, Result};
use crate::geometry::Point3;

/// Index of one cube of the flight zone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub ix: u32,
    pub iy: u32,
    pub iz: u32,
}

impl Cell {
    pub const fn new(ix: u32, iy: u32, iz: u32) -> Self {
        Self { ix, iy, iz }
    }
}

impl std::fmt::Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.ix, self.iy, self.iz)
    }
}

/// One-cube move toward a face of the current cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Action {
    PlusX,
    MinusX,
    PlusY,
    MinusY,
    PlusZ,
    MinusZ,
}

impl Action {
    pub const ALL: [Action; 6] = [
        Action::PlusX,
        Action::MinusX,
        Action::PlusY,
        Action::MinusY,
        Action::PlusZ,
        Action::MinusZ,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Action> {
        Self::ALL.get(i).copied()
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Action::PlusX => "+x",
            Action::MinusX => "-x",
            Action::PlusY => "+y",
            Action::MinusY => "-y",
            Action::PlusZ => "+z",
            Action::MinusZ => "-z",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Action> {
        Self::ALL.iter().copied().find(|a| a.symbol() == s)
    }
}

/// Regular cubic grid over the flight zone. Cell centers sit at
/// `origin + (index + ½)·pitch` on each axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lattice {
    pub origin: Point3,
    pub pitch: f64,
    pub dims: [u32; 3],
}

impl Lattice {
    pub fn new(origin: Point3, pitch: f64, dims: [u32; 3]) -> Result<Self> {
        if !(pitch > 0.0) || !pitch.is_finite() {
            return Err(Error::config("upsilon_m", "lattice pitch must be positive"));
        }
        if dims.contains(&0) {
            return Err(Error::config(
                "upsilon_m",
                "lattice needs at least one cell per axis",
            ));
        }
        Ok(Self {
            origin,
            pitch,
            dims,
        })
    }

    pub fn from_region(region: &Region, pitch: f64) -> Result<Self> {
        let count = |extent: f64| -> Result<u32> {
            let n = extent / pitch;
            let r = n.round();
            if r < 1.0 || (n - r).abs() > 1e-9 * r.max(1.0) {
                return Err(Error::config(
                    "upsilon_m",
                    format!("{pitch} does not evenly divide extent {extent}"),
                ));
            }
            Ok(r as u32)
        };
        Self::new(
            Point3::new(region.x_min, region.y_min, region.h_min),
            pitch,
            [
                count(region.width())?,
                count(region.depth())?,
                count(region.height_span())?,
            ],
        )
    }

    pub fn len(&self) -> usize {
        self.dims.iter().map(|d| *d as usize).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.ix < self.dims[0] && c.iy < self.dims[1] && c.iz < self.dims[2]
    }

    pub fn center(&self, c: Cell) -> Point3 {
        Point3::new(
            self.origin.x + (f64::from(c.ix) + 0.5) * self.pitch,
            self.origin.y + (f64::from(c.iy) + 0.5) * self.pitch,
            self.origin.z + (f64::from(c.iz) + 0.5) * self.pitch,
        )
    }

    /// Cell whose cube contains `p`, clamped onto the lattice.
    pub fn nearest_cell(&self, p: Point3) -> Cell {
        let idx = |v: f64, o: f64, n: u32| -> u32 {
            let i = ((v - o) / self.pitch).floor();
            i.clamp(0.0, f64::from(n - 1)) as u32
        };
        Cell::new(
            idx(p.x, self.origin.x, self.dims[0]),
            idx(p.y, self.origin.y, self.dims[1]),
            idx(p.z, self.origin.z, self.dims[2]),
        )
    }

    /// Middle of the footprint at the lowest flight layer.
    pub fn central_cell(&self) -> Cell {
        Cell::new(self.dims[0] / 2, self.dims[1] / 2, 0)
    }

    /// Every `stride`-th cell on each axis, in lexicographic order.
    pub fn cells_strided(&self, stride: u32) -> Vec<Cell> {
        let stride = stride.max(1);
        let mut out = Vec::new();
        for ix in (0..self.dims[0]).step_by(stride as usize) {
            for iy in (0..self.dims[1]).step_by(stride as usize) {
                for iz in (0..self.dims[2]).step_by(stride as usize) {
                    out.push(Cell::new(ix, iy, iz));
                }
            }
        }
        out
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.cells_strided(1)
    }

    /// Number of candidates [`Lattice::cells_strided`] yields.
    pub fn strided_len(&self, stride: u32) -> usize {
        let stride = stride.max(1);
        self.dims
            .iter()
            .map(|d| d.div_ceil(stride) as usize)
            .product()
    }

    /// Finest stride whose candidate count is at most `budget`.
    pub fn stride_for_budget(&self, budget: usize) -> u32 {
        let mut s = 1;
        while self.strided_len(s) > budget.max(1) {
            s += 1;
        }
        s
    }
}

/// Neighbor of `cell` along `action`; moves that would leave the lattice keep
/// the aerial station where it is.
pub fn apply_action(lattice: &Lattice, cell: Cell, action: Action) -> Cell {
    let step = |v: u32, up: bool, n: u32| -> u32 {
        if up {
            if v + 1 < n {
                v + 1
            } else {
                v
            }
        } else {
            v.saturating_sub(1)
        }
    };
    let [nx, ny, nz] = lattice.dims;
    match action {
        Action::PlusX => Cell {
            ix: step(cell.ix, true, nx),
            ..cell
        },
        Action::MinusX => Cell {
            ix: step(cell.ix, false, nx),
            ..cell
        },
        Action::PlusY => Cell {
            iy: step(cell.iy, true, ny),
            ..cell
        },
        Action::MinusY => Cell {
            iy: step(cell.iy, false, ny),
            ..cell
        },
        Action::PlusZ => Cell {
            iz: step(cell.iz, true, nz),
            ..cell
        },
        Action::MinusZ => Cell {
            iz: step(cell.iz, false, nz),
            ..cell
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::ScenarioConfig;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn cube(n: u32) -> Lattice {
        Lattice::new(Point3::new(0.0, 0.0, 0.0), 10.0, [n, n, n]).unwrap()
    }

    #[test]
    fn full_scale_dimensions() {
        let c = ScenarioConfig::default();
        let l = Lattice::from_region(&c.region, c.upsilon_m).unwrap();
        assert_eq!(l.dims, [400, 400, 50]);
        assert_eq!(l.len(), 8_000_000);
        assert_eq!(
            l.center(Cell::new(0, 0, 0)),
            Point3::new(-1995.0, -1995.0, 30.0)
        );
        assert!(Lattice::from_region(&c.region, 30.0).is_err());
    }

    #[test]
    fn moves_and_clamps() {
        let l = cube(3);
        let c = Cell::new(1, 1, 1);
        assert_eq!(apply_action(&l, c, Action::PlusX), Cell::new(2, 1, 1));
        let edge = Cell::new(2, 0, 1);
        assert_eq!(apply_action(&l, edge, Action::PlusX), edge);
        assert_eq!(apply_action(&l, edge, Action::MinusY), edge);
        let reached: HashSet<Cell> = Action::ALL
            .iter()
            .map(|a| apply_action(&l, c, *a))
            .collect();
        assert_eq!(reached.len(), 6);
        assert!(!reached.contains(&c));
    }

    #[test]
    fn strides() {
        let l = Lattice::new(Point3::default(), 1.0, [5, 5, 2]).unwrap();
        assert_eq!(l.cells().len(), 50);
        assert_eq!(l.strided_len(2), 9);
        assert_eq!(l.cells_strided(2).len(), 9);
        let full = Lattice::new(Point3::default(), 1.0, [400, 400, 50]).unwrap();
        let s = full.stride_for_budget(100_000);
        assert!(full.strided_len(s) <= 100_000);
        assert!(full.strided_len(s - 1) > 100_000);
        let cells = l.cells();
        let mut sorted = cells.clone();
        sorted.sort();
        assert_eq!(cells, sorted);
    }

    #[test]
    fn symbols_round_trip() {
        for a in Action::ALL {
            assert_eq!(Action::from_symbol(a.symbol()), Some(a));
            assert_eq!(Action::from_index(a.index()), Some(a));
        }
    }

    proptest! {
        #[test]
        fn never_leaves(ix in 0u32..4, iy in 0u32..4, iz in 0u32..4, a in 0usize..6) {
            let l = Lattice::new(Point3::default(), 1.0, [4, 4, 4]).unwrap();
            let next = apply_action(&l, Cell::new(ix, iy, iz), Action::from_index(a).unwrap());
            prop_assert!(l.contains(next));
        }

        #[test]
        fn nearest_cell_inverts_center(ix in 0u32..7, iy in 0u32..7, iz in 0u32..7) {
            let l = cube(7);
            let c = Cell::new(ix, iy, iz);
            prop_assert_eq!(l.nearest_cell(l.center(c)), c);
        }
    }
}
