//! Frieze containers and engines.
//!
//! A frieze is an infinite array indexed by a strip of half-integer points
//! plus a family of dashed lines; this crate stores finite column windows of
//! it and verifies the defining local conditions rather than assuming the
//! glide symmetry and periodicity they imply.

mod cm;
mod heronian;
mod path;

pub use cm::{
    cmfrieze_from_measurements, cmfrieze_from_polygon, coherence_solve, extend, propagate_cm,
    verify_cm, verify_coherence, CMFrieze, CmViolation, CmViolationKind, SolveDir,
};
pub use heronian::{
    frieze_from_polygon, polygon_from_frieze, propagate_heronian, restrict, verify_heronian,
    HViolation, HViolationKind, HeronianFrieze,
};
pub use path::{CMPath, HTraversingPath, PathJson};

use crate::exact::{LineIdx, NodeIdx, Rat};
use crate::Error;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// An inclusive range of frieze columns (first coordinates, integer units).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Self, Error> {
        if lo > hi {
            return Err(Error::MalformedInput(format!("empty window [{lo}, {hi}]")));
        }
        Ok(Window { lo, hi })
    }

    pub fn width(&self) -> i64 {
        self.hi - self.lo + 1
    }

    /// Default window for a frieze of order `n`: `2n + 2` columns from 0.
    pub fn default_for(n: u32) -> Self {
        Window { lo: 0, hi: 2 * n as i64 + 1 }
    }
}

pub(crate) type NodeMap = BTreeMap<NodeIdx, Rat>;
pub(crate) type LineMap = BTreeMap<LineIdx, Rat>;

/// The canonical vertex label in `1..=n` congruent to `m` modulo `n`.
pub(crate) fn wrap_vertex(m: i64, n: u32) -> u32 {
    ((m - 1).rem_euclid(n as i64) + 1) as u32
}

/// Values of the first nonzero row, determined up to the period `n`; every
/// line entry and the rows `1` and `n-1` read off this table.
#[derive(Clone, Debug)]
pub(crate) struct Row1 {
    n: u32,
    by_residue: Vec<Option<Rat>>,
}

impl Row1 {
    pub(crate) fn new(n: u32) -> Self {
        Row1 { n, by_residue: vec![None; n as usize] }
    }

    /// Records `row1(col) = value`, failing on conflicting pins.
    pub(crate) fn pin(&mut self, col: i64, value: &Rat) -> Result<(), Error> {
        let idx = col.rem_euclid(self.n as i64) as usize;
        match &self.by_residue[idx] {
            None => {
                self.by_residue[idx] = Some(value.clone());
                Ok(())
            }
            Some(old) if old == value => Ok(()),
            Some(_) => Err(Error::MalformedInput(format!(
                "conflicting first-row values at column {col} modulo {}",
                self.n
            ))),
        }
    }

    pub(crate) fn complete(&self) -> Result<(), Error> {
        if self.by_residue.iter().any(|v| v.is_none()) {
            return Err(Error::MalformedInput(
                "path data does not determine all first-row values".into(),
            ));
        }
        Ok(())
    }

    pub(crate) fn get(&self, col: i64) -> &Rat {
        self.by_residue[col.rem_euclid(self.n as i64) as usize]
            .as_ref()
            .expect("row1 table incomplete")
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct FriezeJson {
    pub kind: String,
    pub n: u32,
    pub window: (i64, i64),
    pub nodes: BTreeMap<String, Rat>,
    pub lines: BTreeMap<String, Rat>,
}

pub(crate) fn encode_frieze(
    kind: &str,
    n: u32,
    window: Window,
    nodes: &NodeMap,
    lines: &LineMap,
) -> FriezeJson {
    FriezeJson {
        kind: kind.to_string(),
        n,
        window: (window.lo, window.hi),
        nodes: nodes.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        lines: lines.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
    }
}

pub(crate) fn decode_maps(raw: &FriezeJson) -> Result<(Window, NodeMap, LineMap), Error> {
    if raw.n < 4 {
        return Err(Error::OrderTooSmall);
    }
    let window = Window::new(raw.window.0, raw.window.1)?;
    let mut nodes = NodeMap::new();
    for (key, v) in &raw.nodes {
        let idx: NodeIdx = key.parse()?;
        if !idx.in_strip(raw.n) {
            return Err(Error::MalformedInput(format!("node {key} outside the strip")));
        }
        nodes.insert(idx, v.clone());
    }
    let mut lines = LineMap::new();
    for (key, v) in &raw.lines {
        lines.insert(key.parse()?, v.clone());
    }
    Ok((window, nodes, lines))
}

/// Compares stored values under the glide map `(i,j) -> (j, i+n)`; `None`
/// when no pair is testable.
pub(crate) fn glide_holds(n: u32, nodes: &NodeMap) -> Option<bool> {
    let mut tested = false;
    for (idx, v) in nodes {
        let partner = NodeIdx { i2: idx.j2, j2: idx.i2 + 2 * n as i64 };
        if let Some(w) = nodes.get(&partner) {
            tested = true;
            if w != v {
                return Some(false);
            }
        }
    }
    tested.then_some(true)
}

/// Compares stored values under the period map `(i,j) -> (i+n, j+n)` and
/// line translation by `n`; `None` when nothing is testable.
pub(crate) fn period_holds(n: u32, nodes: &NodeMap, lines: &LineMap) -> Option<bool> {
    let mut tested = false;
    for (idx, v) in nodes {
        let partner = NodeIdx { i2: idx.i2 + 2 * n as i64, j2: idx.j2 + 2 * n as i64 };
        if let Some(w) = nodes.get(&partner) {
            tested = true;
            if w != v {
                return Some(false);
            }
        }
    }
    for (idx, v) in lines {
        let partner = LineIdx { orientation: idx.orientation, k: idx.k + n as i64 };
        if let Some(w) = lines.get(&partner) {
            tested = true;
            if w != v {
                return Some(false);
            }
        }
    }
    tested.then_some(true)
}
