//! Sparse Q-table and its text file format.
//!
//! ```text
//! QTABLE v1
//! lattice <x_min> <y_min> <h_min> <upsilon> <nx> <ny> <nz>
//! ix,iy,iz,action,value,visits
//! ...
//! ```
//!
//! Rows are sorted by cell then action so equal tables give equal files.
//! Floats use the shortest representation that parses back to the same bits.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use super::lattice::{Action, Cell, Lattice};
use crate::error::{Error, Result};
use crate::geometry::Point3;

pub const HEADER: &str = "QTABLE v1";

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct QEntry {
    pub value: f64,
    pub visits: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QTable {
    lattice: Lattice,
    entries: HashMap<(Cell, Action), QEntry>,
}

impl QTable {
    pub fn new(lattice: Lattice) -> Self {
        Self {
            lattice,
            entries: HashMap::new(),
        }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// Number of stored state-action pairs.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Q-value; pairs never written read as zero.
    pub fn get(&self, cell: Cell, action: Action) -> f64 {
        self.entries.get(&(cell, action)).map_or(0.0, |e| e.value)
    }

    pub fn visits(&self, cell: Cell, action: Action) -> u64 {
        self.entries.get(&(cell, action)).map_or(0, |e| e.visits)
    }

    pub fn entry(&self, cell: Cell, action: Action) -> Option<QEntry> {
        self.entries.get(&(cell, action)).copied()
    }

    /// Highest-valued action at `cell`, lowest index on ties.
    pub fn greedy_action(&self, cell: Cell) -> Action {
        let mut best = Action::ALL[0];
        let mut best_v = self.get(cell, best);
        for a in &Action::ALL[1..] {
            let v = self.get(cell, *a);
            if v > best_v {
                best = *a;
                best_v = v;
            }
        }
        best
    }

    pub fn max_value(&self, cell: Cell) -> f64 {
        self.get(cell, self.greedy_action(cell))
    }

    /// Stores a value without touching the visit count.
    pub fn set(&mut self, cell: Cell, action: Action, value: f64) -> Result<()> {
        if !value.is_finite() {
            return Err(Error::State(format!("non-finite Q-value {value}")));
        }
        if !self.lattice.contains(cell) {
            return Err(Error::State(format!("cell {cell} is outside the lattice")));
        }
        self.entries.entry((cell, action)).or_default().value = value;
        Ok(())
    }

    /// Stores a value and counts one visit.
    pub(crate) fn record(&mut self, cell: Cell, action: Action, value: f64) -> Result<()> {
        self.set(cell, action, value)?;
        if let Some(e) = self.entries.get_mut(&(cell, action)) {
            e.visits += 1;
        }
        Ok(())
    }

    /// Entries in file order.
    pub fn sorted_entries(&self) -> Vec<(Cell, Action, QEntry)> {
        let mut rows: Vec<_> = self
            .entries
            .iter()
            .map(|((c, a), e)| (*c, *a, *e))
            .collect();
        rows.sort_by_key(|r| (r.0, r.1));
        rows
    }

    pub fn to_text(&self) -> String {
        let l = &self.lattice;
        let mut out = String::new();
        let _ = writeln!(out, "{HEADER}");
        let _ = writeln!(
            out,
            "lattice {} {} {} {} {} {} {}",
            l.origin.x, l.origin.y, l.origin.z, l.pitch, l.dims[0], l.dims[1], l.dims[2]
        );
        for (c, a, e) in self.sorted_entries() {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                c.ix,
                c.iy,
                c.iz,
                a.symbol(),
                e.value,
                e.visits
            );
        }
        out
    }

    /// Parses a table file. The lattice is taken from the file itself.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let parse_err = |line: usize, reason: String| Error::Parse { line, reason };

        match lines.next() {
            Some((_, h)) if h.trim() == HEADER => {}
            Some((_, h)) if h.trim().starts_with("QTABLE") => {
                return Err(Error::Incompatible(format!(
                    "unsupported Q-table version `{}` (expected `{HEADER}`)",
                    h.trim()
                )))
            }
            _ => return Err(parse_err(1, format!("missing `{HEADER}` header"))),
        }

        let (idx, lat) = lines
            .next()
            .ok_or_else(|| parse_err(2, "missing lattice line".into()))?;
        let fields: Vec<&str> = lat.split_whitespace().collect();
        if fields.len() != 8 || fields[0] != "lattice" {
            return Err(parse_err(
                idx + 1,
                "expected `lattice <x_min> <y_min> <h_min> <upsilon> <nx> <ny> <nz>`".into(),
            ));
        }
        let f = |i: usize| -> Result<f64> {
            fields[i]
                .parse::<f64>()
                .map_err(|e| parse_err(idx + 1, format!("field {i}: {e}")))
        };
        let u = |i: usize| -> Result<u32> {
            fields[i]
                .parse::<u32>()
                .map_err(|e| parse_err(idx + 1, format!("field {i}: {e}")))
        };
        let lattice = Lattice::new(
            Point3::new(f(1)?, f(2)?, f(3)?),
            f(4)?,
            [u(5)?, u(6)?, u(7)?],
        )
        .map_err(|e| parse_err(idx + 1, e.to_string()))?;

        let mut table = QTable::new(lattice);
        for (idx, raw) in lines {
            let line = idx + 1;
            let row = raw.trim();
            if row.is_empty() {
                continue;
            }
            let cols: Vec<&str> = row.split(',').collect();
            if cols.len() != 6 {
                return Err(parse_err(
                    line,
                    format!("expected 6 columns, got {}", cols.len()),
                ));
            }
            let idx_of = |s: &str| {
                s.parse::<u32>()
                    .map_err(|e| parse_err(line, format!("bad index `{s}`: {e}")))
            };
            let cell = Cell::new(idx_of(cols[0])?, idx_of(cols[1])?, idx_of(cols[2])?);
            let action = Action::from_symbol(cols[3])
                .ok_or_else(|| parse_err(line, format!("unknown action `{}`", cols[3])))?;
            let value = cols[4]
                .parse::<f64>()
                .map_err(|e| parse_err(line, format!("bad value `{}`: {e}", cols[4])))?;
            let visits = cols[5]
                .parse::<u64>()
                .map_err(|e| parse_err(line, format!("bad visit count `{}`: {e}", cols[5])))?;
            if !value.is_finite() {
                return Err(parse_err(line, format!("non-finite value `{}`", cols[4])));
            }
            if !table.lattice.contains(cell) {
                return Err(parse_err(line, format!("cell {cell} outside the lattice")));
            }
            if table
                .entries
                .insert((cell, action), QEntry { value, visits })
                .is_some()
            {
                return Err(parse_err(
                    line,
                    format!("duplicate row for {cell} {}", action.symbol()),
                ));
            }
        }
        Ok(table)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_text()).map_err(|e| Error::io(path, e))
    }

    /// Loads a table and refuses it unless its lattice equals `expected`.
    pub fn load(path: impl AsRef<Path>, expected: &Lattice) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let table = Self::from_text(&text)?;
        if table.lattice != *expected {
            return Err(Error::Incompatible(format!(
                "{} was written for lattice origin ({}, {}, {}) pitch {} dims {:?}, \
                 active lattice is origin ({}, {}, {}) pitch {} dims {:?}",
                path.display(),
                table.lattice.origin.x,
                table.lattice.origin.y,
                table.lattice.origin.z,
                table.lattice.pitch,
                table.lattice.dims,
                expected.origin.x,
                expected.origin.y,
                expected.origin.z,
                expected.pitch,
                expected.dims,
            )));
        }
        Ok(table)
    }
}
