//! Heronian friezes: construction from a polygon, verification, the
//! propagation recurrence, and recovery of the polygon.

use super::path::HTraversingPath;
use super::{
    decode_maps, encode_frieze, glide_holds, period_holds, wrap_vertex, FriezeJson, LineMap,
    NodeMap, Row1, Window,
};
use crate::diamonds::{self, HeronianDiamond};
use crate::exact::{LineIdx, NodeIdx, Rat};
use crate::geometry::{heron_h, measure_all, polygon_from_measurements, MeasurementSet, Polygon};
use crate::triangulation::TriCycle;
use crate::{Error, Pos};
use serde::{Deserialize, Serialize};

/// A finite column window of a Heronian frieze: squared distances at integer
/// nodes, signed areas at half-integer nodes, side lengths on the lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeronianFrieze {
    n: u32,
    window: Window,
    nodes: NodeMap,
    lines: LineMap,
}

impl HeronianFrieze {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn node(&self, idx: NodeIdx) -> Option<&Rat> {
        self.nodes.get(&idx)
    }

    /// Integer node `(i, j)`.
    pub fn at(&self, i: i64, j: i64) -> Option<&Rat> {
        self.nodes.get(&NodeIdx::int(i, j))
    }

    pub fn line(&self, idx: LineIdx) -> Option<&Rat> {
        self.lines.get(&idx)
    }

    pub fn nodes(&self) -> impl Iterator<Item = (&NodeIdx, &Rat)> {
        self.nodes.iter()
    }

    pub fn lines(&self) -> impl Iterator<Item = (&LineIdx, &Rat)> {
        self.lines.iter()
    }

    /// Glide symmetry `z_(i,j) = z_(j,i+n)` on every testable stored pair.
    pub fn check_glide(&self) -> Result<bool, Error> {
        glide_holds(self.n, &self.nodes).ok_or(Error::WindowTooNarrow)
    }

    /// Periodicity `z_(i,j) = z_(i+n,j+n)` plus period `n` for the lines.
    pub fn check_period(&self) -> Result<bool, Error> {
        period_holds(self.n, &self.nodes, &self.lines).ok_or(Error::WindowTooNarrow)
    }

    /// True when every stored interior integer entry is nonzero.
    pub fn nonzero_interior(&self) -> bool {
        self.interior_zero().is_none()
    }

    pub(crate) fn interior_zero(&self) -> Option<NodeIdx> {
        let n = self.n as i64;
        self.nodes
            .iter()
            .find(|(idx, v)| {
                idx.is_integer() && (4..=(2 * n - 4)).contains(&idx.row2()) && v.is_zero()
            })
            .map(|(idx, _)| *idx)
    }

    /// The ten entries of the diamond at interior integer node `(i, j)`,
    /// when the window stores all of them.
    pub fn diamond_at(&self, i: i64, j: i64) -> Option<HeronianDiamond> {
        Some(HeronianDiamond::new(
            self.at(i, j + 1)?.clone(),
            self.line(LineIdx::up(i))?.clone(),
            self.at(i + 1, j)?.clone(),
            self.line(LineIdx::down(j))?.clone(),
            self.at(i, j)?.clone(),
            self.at(i + 1, j + 1)?.clone(),
            self.node(NodeIdx { i2: 2 * i + 1, j2: 2 * j })?.clone(),
            self.node(NodeIdx { i2: 2 * i, j2: 2 * j + 1 })?.clone(),
            self.node(NodeIdx { i2: 2 * i + 1, j2: 2 * j + 2 })?.clone(),
            self.node(NodeIdx { i2: 2 * i + 2, j2: 2 * j + 1 })?.clone(),
        ))
    }

    #[doc(hidden)]
    pub fn insert_node_for_tests(&mut self, idx: NodeIdx, v: Rat) {
        self.nodes.insert(idx, v);
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HViolationKind {
    /// A complete diamond window fails one of the seven equations.
    Diamond,
    /// A boundary entry that must vanish does not.
    Boundary,
    /// One of the line identities tying rows 1 and n-1 to the lines fails.
    LineIdentity,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HViolation {
    pub kind: HViolationKind,
    pub node: NodeIdx,
}

/// Checks every stored diamond window, boundary zero, and line identity;
/// an empty report means the window is a valid Heronian frieze fragment.
pub fn verify_heronian(z: &HeronianFrieze) -> Vec<HViolation> {
    let n = z.n as i64;
    let mut out = Vec::new();
    // boundary zeros: rows 0 and n at integer nodes, rows 1/2 and n - 1/2
    // at upper-half nodes
    for (idx, v) in &z.nodes {
        let r = idx.row2();
        let must_vanish = (idx.is_integer() && (r == 0 || r == 2 * n))
            || (idx.j2.rem_euclid(2) == 1 && (r == 1 || r == 2 * n - 1));
        if must_vanish && !v.is_zero() {
            out.push(HViolation { kind: HViolationKind::Boundary, node: *idx });
        }
    }
    // diamond windows
    for (idx, _) in z.nodes.iter().filter(|(idx, _)| idx.is_integer()) {
        let (i, j) = (idx.i2 / 2, idx.j2 / 2);
        let r = j - i;
        if !(1..=n - 1).contains(&r) {
            continue;
        }
        if let Some(d) = z.diamond_at(i, j) {
            if !diamonds::is_heronian(&d) {
                out.push(HViolation { kind: HViolationKind::Diamond, node: *idx });
            }
        }
    }
    // row 1 and row n-1 agree with the dashed lines
    for (idx, v) in z.nodes.iter().filter(|(idx, _)| idx.is_integer()) {
        let (i, j) = (idx.i2 / 2, idx.j2 / 2);
        let mut mismatch = false;
        if j - i == 1 {
            for line in [LineIdx::up(i), LineIdx::down(i)] {
                if let Some(w) = z.line(line) {
                    mismatch |= w != v;
                }
            }
        } else if j - i == n - 1 {
            for line in [LineIdx::up(i - 1), LineIdx::down(i + n - 1)] {
                if let Some(w) = z.line(line) {
                    mismatch |= w != v;
                }
            }
        }
        if mismatch {
            out.push(HViolation { kind: HViolationKind::LineIdentity, node: *idx });
        }
    }
    out.sort_by_key(|v| (v.node, v.kind as u8));
    out
}

/// The Heronian frieze of a polygon over a column window: integer nodes
/// carry `x`, half-integer nodes carry `S`, lines carry the side lengths.
pub fn frieze_from_polygon(p: &Polygon, window: Window) -> Result<HeronianFrieze, Error> {
    let n = p.n();
    if n < 4 {
        return Err(Error::OrderTooSmall);
    }
    let m = measure_all(p);
    let wrap = |t: i64| wrap_vertex(t, n);
    let mut nodes = NodeMap::new();
    for i2 in (2 * window.lo)..=(2 * window.hi) {
        for off in 0..=(2 * n as i64) {
            let j2 = i2 + off;
            let Ok(idx) = NodeIdx::new(i2, j2) else { continue };
            let value = if idx.is_integer() {
                m.x(wrap(i2 / 2), wrap(j2 / 2)).unwrap()
            } else if i2.rem_euclid(2) == 1 {
                let i = (i2 - 1) / 2;
                m.s(wrap(i), wrap(i + 1), wrap(j2 / 2)).unwrap()
            } else {
                let j = (j2 - 1) / 2;
                m.s(wrap(i2 / 2), wrap(j), wrap(j + 1)).unwrap()
            };
            nodes.insert(idx, value);
        }
    }
    let mut lines = LineMap::new();
    for k in window.lo..=(window.hi + n as i64) {
        let side = m.x(wrap(k), wrap(k + 1)).unwrap();
        lines.insert(LineIdx::up(k), side.clone());
        lines.insert(LineIdx::down(k), side);
    }
    Ok(HeronianFrieze { n, window, nodes, lines })
}

/// Pre-fills everything the boundary conditions force: zero rows, the rows
/// `1` and `n-1` read off the period-`n` first-row table, and all lines.
fn prefill(n: u32, window: Window, row1: &Row1) -> (NodeMap, LineMap) {
    let n64 = n as i64;
    let mut nodes = NodeMap::new();
    let zero = Rat::zero();
    for i in window.lo..=window.hi {
        nodes.insert(NodeIdx::int(i, i), zero.clone());
        nodes.insert(NodeIdx::int(i, i + n64), zero.clone());
        nodes.insert(NodeIdx { i2: 2 * i, j2: 2 * i + 1 }, zero.clone());
        nodes.insert(NodeIdx { i2: 2 * i, j2: 2 * i + 2 * n64 - 1 }, zero.clone());
        nodes.insert(NodeIdx::int(i, i + 1), row1.get(i).clone());
        nodes.insert(NodeIdx::int(i, i + n64 - 1), row1.get(i - 1).clone());
        if i < window.hi {
            // upper-half counterparts of the zero rows
            nodes.insert(NodeIdx { i2: 2 * i + 1, j2: 2 * i + 2 }, zero.clone());
            nodes.insert(NodeIdx { i2: 2 * i + 1, j2: 2 * i + 2 * n64 }, zero.clone());
        }
    }
    let mut lines = LineMap::new();
    for k in window.lo..=(window.hi + n64) {
        lines.insert(LineIdx::up(k), row1.get(k).clone());
        lines.insert(LineIdx::down(k), row1.get(k).clone());
    }
    (nodes, lines)
}

fn insert_checked(nodes: &mut NodeMap, idx: NodeIdx, v: Rat) -> Result<bool, Error> {
    match nodes.get(&idx) {
        None => {
            nodes.insert(idx, v);
            Ok(true)
        }
        Some(old) if *old == v => Ok(false),
        Some(_) => Err(Error::HeronViolation(Some(Pos::Node(idx)))),
    }
}

/// Reconstructs the unique Heronian frieze extending the values given on a
/// traversing path, sweeping the diamond recurrences right and left of the
/// path. Aborts with the first vanishing pivot when an interior integer
/// entry is zero.
pub fn propagate_heronian(
    path: &HTraversingPath,
    values: &[Rat],
    window: Window,
) -> Result<HeronianFrieze, Error> {
    let n = path.n();
    let n64 = n as i64;
    if values.len() != path.value_len() {
        return Err(Error::MalformedInput(format!(
            "expected {} values on the path",
            path.value_len()
        )));
    }
    let node_vals = &values[..path.nodes().len()];
    let line_vals = &values[path.nodes().len()..];
    for (idx, v) in path.nodes().iter().zip(node_vals) {
        if idx.i2 / 2 < window.lo || idx.i2 / 2 > window.hi {
            return Err(Error::WindowTooNarrow);
        }
        if idx.is_integer() && v.is_zero() {
            let pos = path.nodes().iter().position(|x| x == idx).unwrap();
            return Err(Error::ZeroPivot(Some(Pos::Path(pos))));
        }
    }
    // Heron equations along the path: each half node against its line and
    // the two neighboring integer nodes.
    for k in 0..line_vals.len() {
        let m = 2 * k + 1;
        let half = node_vals[m].clone();
        let lower = &node_vals[m - 1];
        let upper = &node_vals[m + 1];
        if half.sq() != heron_h(upper, &line_vals[k], lower) {
            return Err(Error::HeronViolation(Some(Pos::Path(m))));
        }
    }
    // first-row pins: path lines plus the two boundary-row endpoints
    let mut row1 = Row1::new(n);
    row1.pin(path.nodes()[0].i2 / 2, &node_vals[0])?;
    let top = path.nodes().last().unwrap();
    row1.pin(top.i2 / 2 - 1, node_vals.last().unwrap())?;
    for (line, v) in path.lines().iter().zip(line_vals) {
        row1.pin(line.k, v)?;
    }
    row1.complete()?;

    let (mut nodes, lines) = prefill(n, window, &row1);
    for (idx, v) in path.nodes().iter().zip(node_vals) {
        insert_checked(&mut nodes, *idx, v.clone()).map_err(|_| {
            let pos = path.nodes().iter().position(|x| x == idx).unwrap();
            Error::HeronViolation(Some(Pos::Path(pos)))
        })?;
    }

    let up = |k: i64| LineIdx::up(k);
    let down = |k: i64| LineIdx::down(k);
    loop {
        let mut progress = false;
        // rightward
        for i in window.lo..window.hi {
            for j in (i + 1)..=(i + n64 - 1) {
                progress |= fire_right(&mut nodes, &lines, n64, i, j, up, down)?;
            }
        }
        // leftward
        for i in (window.lo..window.hi).rev() {
            for j in ((i + 1)..=(i + n64 - 1)).rev() {
                progress |= fire_left(&mut nodes, &lines, n64, i, j, up, down)?;
            }
        }
        if !progress {
            break;
        }
    }

    // every strip node over the window must now be present
    for i2 in (2 * window.lo)..=(2 * window.hi) {
        for off in 0..=(2 * n64) {
            let Ok(idx) = NodeIdx::new(i2, i2 + off) else { continue };
            if !nodes.contains_key(&idx) {
                return Err(Error::Internal("propagation did not cover the window"));
            }
        }
    }
    Ok(HeronianFrieze { n, window, nodes, lines })
}

#[allow(clippy::too_many_arguments)]
fn fire_right(
    nodes: &mut NodeMap,
    lines: &LineMap,
    n: i64,
    i: i64,
    j: i64,
    up: impl Fn(i64) -> LineIdx,
    down: impl Fn(i64) -> LineIdx,
) -> Result<bool, Error> {
    let r = j - i;
    let q_idx = NodeIdx { i2: 2 * i, j2: 2 * j + 1 };
    let p_idx = NodeIdx { i2: 2 * i + 1, j2: 2 * j };
    let r_idx = NodeIdx { i2: 2 * i + 1, j2: 2 * j + 2 };
    let s_idx = NodeIdx { i2: 2 * i + 2, j2: 2 * j + 1 };
    if r == 1 {
        // near the lower boundary the new value is the r = q copy
        if nodes.contains_key(&r_idx) {
            return Ok(false);
        }
        let Some(q) = nodes.get(&q_idx).cloned() else { return Ok(false) };
        return insert_checked(nodes, r_idx, q);
    }
    if r == n - 1 {
        // near the upper boundary the new value is the s = p copy
        if nodes.contains_key(&s_idx) {
            return Ok(false);
        }
        let Some(p) = nodes.get(&p_idx).cloned() else { return Ok(false) };
        return insert_checked(nodes, s_idx, p);
    }
    let f_idx = NodeIdx::int(i + 1, j + 1);
    if nodes.contains_key(&f_idx) && nodes.contains_key(&r_idx) && nodes.contains_key(&s_idx) {
        return Ok(false);
    }
    let (Some(a), Some(c), Some(e), Some(p), Some(q), Some(b), Some(d)) = (
        nodes.get(&NodeIdx::int(i, j + 1)),
        nodes.get(&NodeIdx::int(i + 1, j)),
        nodes.get(&NodeIdx::int(i, j)),
        nodes.get(&p_idx),
        nodes.get(&q_idx),
        lines.get(&up(i)),
        lines.get(&down(j)),
    ) else {
        return Ok(false);
    };
    if e.is_zero() {
        return Err(Error::ZeroPivot(Some(Pos::Node(NodeIdx::int(i, j)))));
    }
    let (f, rr, s) = diamonds::propagate_right(a, b, c, d, e, p, q)
        .map_err(|err| reposition(err, NodeIdx::int(i, j)))?;
    let mut progress = insert_checked(nodes, f_idx, f)?;
    progress |= insert_checked(nodes, r_idx, rr)?;
    progress |= insert_checked(nodes, s_idx, s)?;
    Ok(progress)
}

#[allow(clippy::too_many_arguments)]
fn fire_left(
    nodes: &mut NodeMap,
    lines: &LineMap,
    n: i64,
    i: i64,
    j: i64,
    up: impl Fn(i64) -> LineIdx,
    down: impl Fn(i64) -> LineIdx,
) -> Result<bool, Error> {
    let r = j - i;
    let q_idx = NodeIdx { i2: 2 * i, j2: 2 * j + 1 };
    let p_idx = NodeIdx { i2: 2 * i + 1, j2: 2 * j };
    let r_idx = NodeIdx { i2: 2 * i + 1, j2: 2 * j + 2 };
    let s_idx = NodeIdx { i2: 2 * i + 2, j2: 2 * j + 1 };
    if r == 1 {
        if nodes.contains_key(&q_idx) {
            return Ok(false);
        }
        let Some(rr) = nodes.get(&r_idx).cloned() else { return Ok(false) };
        return insert_checked(nodes, q_idx, rr);
    }
    if r == n - 1 {
        if nodes.contains_key(&p_idx) {
            return Ok(false);
        }
        let Some(s) = nodes.get(&s_idx).cloned() else { return Ok(false) };
        return insert_checked(nodes, p_idx, s);
    }
    let e_idx = NodeIdx::int(i, j);
    if nodes.contains_key(&e_idx) && nodes.contains_key(&p_idx) && nodes.contains_key(&q_idx) {
        return Ok(false);
    }
    let (Some(a), Some(c), Some(f), Some(rr), Some(s), Some(b), Some(d)) = (
        nodes.get(&NodeIdx::int(i, j + 1)),
        nodes.get(&NodeIdx::int(i + 1, j)),
        nodes.get(&NodeIdx::int(i + 1, j + 1)),
        nodes.get(&r_idx),
        nodes.get(&s_idx),
        lines.get(&up(i)),
        lines.get(&down(j)),
    ) else {
        return Ok(false);
    };
    if f.is_zero() {
        return Err(Error::ZeroPivot(Some(Pos::Node(NodeIdx::int(i + 1, j + 1)))));
    }
    let (e, p, q) = diamonds::propagate_left(a, b, c, d, f, rr, s)
        .map_err(|err| reposition(err, NodeIdx::int(i, j)))?;
    let mut progress = insert_checked(nodes, e_idx, e)?;
    progress |= insert_checked(nodes, p_idx, p)?;
    progress |= insert_checked(nodes, q_idx, q)?;
    Ok(progress)
}

fn reposition(err: Error, node: NodeIdx) -> Error {
    match err {
        Error::ZeroPivot(None) => Error::ZeroPivot(Some(Pos::Node(node))),
        Error::HeronViolation(None) => Error::HeronViolation(Some(Pos::Node(node))),
        other => other,
    }
}

/// Drops the half-integer entries; the result of restricting a valid frieze
/// with nonzero interior is a coherent Cayley-Menger frieze.
pub fn restrict(z: &HeronianFrieze) -> Result<super::CMFrieze, Error> {
    if let Some(v) = verify_heronian(z).first() {
        return Err(Error::HeronViolation(Some(Pos::Node(v.node))));
    }
    if let Some(idx) = z.interior_zero() {
        return Err(Error::ZeroPivot(Some(Pos::Node(idx))));
    }
    let nodes = z
        .nodes
        .iter()
        .filter(|(idx, _)| idx.is_integer())
        .map(|(idx, v)| (*idx, v.clone()))
        .collect();
    Ok(super::CMFrieze::from_parts(z.n, z.window, nodes, z.lines.clone()))
}

/// Recovers the polygon whose frieze matches `z` on the window, anchored at
/// `A_1 = (0,0)` with `A_2` on the nonnegative first axis. Needs a window at
/// least `n` columns wide.
pub fn polygon_from_frieze(z: &HeronianFrieze) -> Result<Polygon, Error> {
    let n = z.n;
    let n64 = n as i64;
    if z.window.width() < n64 {
        return Err(Error::WindowTooNarrow);
    }
    if let Some(v) = verify_heronian(z).first() {
        return Err(Error::HeronViolation(Some(Pos::Node(v.node))));
    }
    if let Some(idx) = z.interior_zero() {
        return Err(Error::ZeroPivot(Some(Pos::Node(idx))));
    }
    let lo = z.window.lo;
    // column with a given vertex label
    let col_for = |u: u32| -> i64 {
        let mut c = lo;
        while wrap_vertex(c, n) != u {
            c += 1;
        }
        c
    };
    let mut m = MeasurementSet::new(n);
    for u in 1..=n {
        let i = col_for(u);
        for v in (u + 1)..=n {
            let j = i + (v as i64 - u as i64);
            let val = z
                .at(i, j)
                .ok_or(Error::WindowTooNarrow)?
                .clone();
            m.insert_x(u, v, val);
        }
    }
    let one_col = col_for(1);
    for k in 2..n {
        let j = one_col + k as i64 - 1;
        let val = z
            .node(NodeIdx { i2: 2 * one_col, j2: 2 * j + 1 })
            .ok_or(Error::WindowTooNarrow)?
            .clone();
        m.insert_s(1, k, k + 1, val);
    }
    polygon_from_measurements(&TriCycle::fan(n), &m)
}

impl Serialize for HeronianFrieze {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        encode_frieze("heronian", self.n, self.window, &self.nodes, &self.lines).serialize(s)
    }
}

impl<'de> Deserialize<'de> for HeronianFrieze {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = FriezeJson::deserialize(d)?;
        if raw.kind != "heronian" {
            return Err(serde::de::Error::custom("expected kind \"heronian\""));
        }
        let (window, nodes, lines) = decode_maps(&raw).map_err(serde::de::Error::custom)?;
        Ok(HeronianFrieze { n: raw.n, window, nodes, lines })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn unit_square() -> Polygon {
        Polygon::new(vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(1, 1),
            Point::from_ints(0, 1),
        ])
        .unwrap()
    }

    #[test]
    fn square_frieze_contents() {
        let z = frieze_from_polygon(&unit_square(), Window::new(0, 4).unwrap()).unwrap();
        // interior integer nodes are 1 (adjacent pairs) or 2 (diagonals)
        for (idx, v) in z.nodes() {
            if idx.is_integer() && (2..=6).contains(&idx.row2()) {
                assert!(*v == r("1") || *v == r("2"), "{idx} = {v}");
            }
            if !idx.is_integer() && (3..=5).contains(&idx.row2()) {
                assert!(*v == r("2") || *v == r("-2"), "{idx} = {v}");
            }
        }
        for (_, v) in z.lines() {
            assert_eq!(*v, r("1"));
        }
        assert!(verify_heronian(&z).is_empty());
        assert!(z.check_glide().unwrap());
        assert!(z.check_period().unwrap());
    }

    #[test]
    fn perturbed_frieze_is_rejected() {
        let mut z = frieze_from_polygon(&unit_square(), Window::new(0, 4).unwrap()).unwrap();
        let idx = NodeIdx::int(1, 3);
        let old = z.node(idx).unwrap().clone();
        z.insert_node_for_tests(idx, old + Rat::one());
        let report = verify_heronian(&z);
        assert!(!report.is_empty());
        assert!(report.iter().any(|v| v.kind == HViolationKind::Diamond));
        // the perturbed entry sits in a neighborhood of failing diamonds
        assert!(report
            .iter()
            .all(|v| (v.node.i2 - 2).abs() <= 2 && (v.node.j2 - 6).abs() <= 2));
        assert!(!z.check_glide().unwrap());
    }

    #[test]
    fn propagate_square_roundtrip() {
        let window = Window::new(0, 6).unwrap();
        let z = frieze_from_polygon(&unit_square(), window).unwrap();
        let path = HTraversingPath::column(4, 0).unwrap();
        let mut values: Vec<Rat> = path
            .nodes()
            .iter()
            .map(|idx| z.node(*idx).unwrap().clone())
            .collect();
        values.extend(path.lines().iter().map(|l| z.line(*l).unwrap().clone()));
        let back = propagate_heronian(&path, &values, window).unwrap();
        assert_eq!(back, z);
    }

    #[test]
    fn propagate_rejects_zero_integer_path_value() {
        let path = HTraversingPath::column(4, 0).unwrap();
        let mut values = vec![
            r("1"), r("2"), r("2"), r("2"), r("1"), // nodes
            r("1"), r("1"), // lines
        ];
        values[2] = Rat::zero();
        // fix the Heron equations around the zero is not needed: the zero
        // integer value is rejected first
        let err = propagate_heronian(&path, &values, Window::new(0, 4).unwrap());
        assert_eq!(err, Err(Error::ZeroPivot(Some(Pos::Path(2)))));
    }

    #[test]
    fn propagate_rejects_broken_heron_data() {
        let path = HTraversingPath::column(4, 0).unwrap();
        let values = vec![
            r("1"), r("3"), r("2"), r("2"), r("1"),
            r("1"), r("1"),
        ];
        let err = propagate_heronian(&path, &values, Window::new(0, 4).unwrap());
        assert_eq!(err, Err(Error::HeronViolation(Some(Pos::Path(1)))));
    }

    #[test]
    fn polygon_from_frieze_square() {
        let z = frieze_from_polygon(&unit_square(), Window::new(0, 5).unwrap()).unwrap();
        let p = polygon_from_frieze(&z).unwrap();
        assert_eq!(p, unit_square());
        // a window that does not start at a multiple of n still recovers a
        // congruent polygon
        let z2 = frieze_from_polygon(&unit_square(), Window::new(-3, 3).unwrap()).unwrap();
        let p2 = polygon_from_frieze(&z2).unwrap();
        assert_eq!(measure_all(&p2), measure_all(&unit_square()));
    }

    #[test]
    fn polygon_from_frieze_rejects_zero_interior() {
        // a hexagon with two coincident vertices: all diamond equations
        // hold but one interior squared distance vanishes
        let degenerate = Polygon::new(vec![
            Point::from_ints(1, 0),
            Point::from_ints(1, 1),
            Point::from_ints(2, 1),
            Point::from_ints(1, 1),
            Point::from_ints(0, 1),
            Point::from_ints(0, 0),
        ])
        .unwrap();
        let z = frieze_from_polygon(&degenerate, Window::new(0, 6).unwrap()).unwrap();
        assert!(verify_heronian(&z).is_empty());
        assert!(matches!(
            polygon_from_frieze(&z),
            Err(Error::ZeroPivot(Some(_)))
        ));
    }

    #[test]
    fn frieze_json_roundtrip() {
        let z = frieze_from_polygon(&unit_square(), Window::new(0, 4).unwrap()).unwrap();
        let text = serde_json::to_string(&z).unwrap();
        assert!(text.contains("\"heronian\""));
        let back: HeronianFrieze = serde_json::from_str(&text).unwrap();
        assert_eq!(back, z);
    }
}
