//! Orbits `ξ_t = sᵗ ξ₀` and their CSV / ASCII / PGM renderings.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::phasespace::PhaseVector;
use crate::sca::ScaMatrix;

/// Widest ASCII rendering; wider cones fall back to CSV.
pub const ASCII_MAX_COLUMNS: usize = 201;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceRow {
    pub t: usize,
    pub x: i64,
    pub plus: u64,
    pub minus: u64,
}

/// Support rows of every step, plus the column range `[lo, hi]` of the
/// light cone `support(ξ₀) + [−tR, tR]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvolutionTrace {
    pub steps: usize,
    pub radius: u64,
    pub lo: i64,
    pub hi: i64,
    pub rows: Vec<TraceRow>,
}

pub fn evolve(s: &ScaMatrix, xi0: &PhaseVector, steps: usize) -> Result<EvolutionTrace> {
    if s.dim() != 1 {
        return Err(Error::NotOneDimensional(s.dim()));
    }
    let support = xi0.support();
    let (first, last) = match (support.first(), support.last()) {
        (Some(a), Some(b)) => (a[0], b[0]),
        _ => (0, 0),
    };
    let radius = s.radius();
    let reach = radius as i64 * steps as i64;
    let mut trace = EvolutionTrace {
        steps,
        radius,
        lo: first - reach,
        hi: last + reach,
        rows: Vec::new(),
    };
    let mut xi = xi0.clone();
    for t in 0..=steps {
        if t > 0 {
            xi = s.apply(&xi)?;
        }
        for x in xi.support() {
            trace.rows.push(TraceRow {
                t,
                x: x[0],
                plus: xi.plus().coeff(&x).value(),
                minus: xi.minus().coeff(&x).value(),
            });
        }
    }
    debug_assert!(trace.within_light_cone(first, last));
    Ok(trace)
}

impl EvolutionTrace {
    /// Every row at step t lies in `[first − tR, last + tR]`.
    pub fn within_light_cone(&self, first: i64, last: i64) -> bool {
        self.rows.iter().all(|r| {
            let reach = self.radius as i64 * r.t as i64;
            first - reach <= r.x && r.x <= last + reach
        })
    }

    pub fn support_at(&self, t: usize) -> Vec<i64> {
        self.rows.iter().filter(|r| r.t == t).map(|r| r.x).collect()
    }

    pub fn width(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,x,plus,minus\n");
        for r in &self.rows {
            writeln!(out, "{},{},{},{}", r.t, r.x, r.plus, r.minus).expect("string write");
        }
        out
    }

    fn cells(&self) -> Vec<Vec<u8>> {
        let mut grid = vec![vec![0u8; self.width()]; self.steps + 1];
        for r in &self.rows {
            let col = (r.x - self.lo) as usize;
            grid[r.t][col] = match (r.plus != 0, r.minus != 0) {
                (true, true) => 3,
                (true, false) => 1,
                (false, true) => 2,
                (false, false) => 0,
            };
        }
        grid
    }

    /// One line per step, one glyph per site; `None` when too wide.
    pub fn to_ascii(&self) -> Option<String> {
        if self.width() > ASCII_MAX_COLUMNS {
            return None;
        }
        let glyphs = [' ', '+', '-', '*'];
        let mut out = String::new();
        for row in self.cells() {
            out.extend(row.iter().map(|&c| glyphs[c as usize]));
            out.push('\n');
        }
        Some(out)
    }

    /// Binary PGM (P5, maxval 255): absent 0, plus 96, minus 160, both 255.
    pub fn to_pgm(&self) -> Vec<u8> {
        let shades = [0u8, 96, 160, 255];
        let mut out = format!("P5\n{} {}\n255\n", self.width(), self.steps + 1).into_bytes();
        for row in self.cells() {
            out.extend(row.iter().map(|&c| shades[c as usize]));
        }
        out
    }
}
