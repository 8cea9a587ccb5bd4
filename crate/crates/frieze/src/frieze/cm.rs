//! Cayley-Menger friezes: squared distances only. Every diamond of six
//! entries has vanishing Cayley-Menger determinant; propagation is driven by
//! the degree-one coherence condition among the partial derivatives of four
//! adjacent diamonds.

use super::path::CMPath;
use super::{
    decode_maps, encode_frieze, glide_holds, period_holds, wrap_vertex, FriezeJson, LineMap,
    NodeMap, Row1, Window,
};
use crate::diamonds::{cm_det, cm_lift, cm_partial, CMDiamond, PartialDir};
use crate::exact::{rat_sqrt, LineIdx, NodeIdx, Rat};
use crate::geometry::{heron_h, measure_all, MeasurementSet, Polygon};
use crate::{Error, Pos};
use serde::{Deserialize, Serialize};

/// A finite column window of a Cayley-Menger frieze: squared distances at
/// integer nodes, side lengths on the lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMFrieze {
    n: u32,
    window: Window,
    nodes: NodeMap,
    lines: LineMap,
}

impl CMFrieze {
    pub(super) fn from_parts(n: u32, window: Window, nodes: NodeMap, lines: LineMap) -> Self {
        CMFrieze { n, window, nodes, lines }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn window(&self) -> Window {
        self.window
    }

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

    pub fn check_glide(&self) -> Result<bool, Error> {
        glide_holds(self.n, &self.nodes).ok_or(Error::WindowTooNarrow)
    }

    pub fn check_period(&self) -> Result<bool, Error> {
        period_holds(self.n, &self.nodes, &self.lines).ok_or(Error::WindowTooNarrow)
    }

    /// The diamond at `(i, j)` with `1 <= j - i <= n - 1`, when stored.
    pub fn diamond_at(&self, i: i64, j: i64) -> Option<CMDiamond> {
        Some(CMDiamond {
            a: self.at(i, j + 1)?.clone(),
            b: self.line(LineIdx::up(i))?.clone(),
            c: self.at(i + 1, j)?.clone(),
            d: self.line(LineIdx::down(j))?.clone(),
            e: self.at(i, j)?.clone(),
            f: self.at(i + 1, j + 1)?.clone(),
        })
    }

    pub fn nonzero_interior(&self) -> bool {
        self.interior_zero().is_none()
    }

    pub(crate) fn interior_zero(&self) -> Option<NodeIdx> {
        let n = self.n as i64;
        self.nodes
            .iter()
            .find(|(idx, v)| (4..=(2 * n - 4)).contains(&idx.row2()) && v.is_zero())
            .map(|(idx, _)| *idx)
    }

    /// Whether the Heron nonvanishing conditions hold at every position the
    /// window can test: the quantities whose square roots are the signed
    /// areas of a Heronian lift.
    pub fn nonzero_heron_quantities(&self) -> bool {
        let n = self.n as i64;
        for (idx, v) in self.nodes.iter() {
            let (i, j) = (idx.i2 / 2, idx.j2 / 2);
            if !(2..=(n - 1)).contains(&(j - i)) {
                continue;
            }
            if let (Some(right), Some(up)) = (self.at(i + 1, j), self.line(LineIdx::up(i))) {
                if heron_h(v, right, up).is_zero() {
                    return false;
                }
            }
            if let (Some(below), Some(down)) = (self.at(i, j - 1), self.line(LineIdx::down(j - 1)))
            {
                if heron_h(below, v, down).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[doc(hidden)]
    pub fn insert_node_for_tests(&mut self, idx: NodeIdx, v: Rat) {
        self.nodes.insert(idx, v);
    }

    #[doc(hidden)]
    pub fn remove_node_for_tests(&mut self, idx: NodeIdx) {
        self.nodes.remove(&idx);
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CmViolationKind {
    /// A complete diamond has nonzero Cayley-Menger determinant.
    Diamond,
    /// A boundary entry that must vanish does not.
    Boundary,
    /// Rows 1 or n-1 disagree with the dashed lines.
    LineIdentity,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CmViolation {
    pub kind: CmViolationKind,
    pub node: NodeIdx,
}

/// Checks the Cayley-Menger diamond condition on every complete window plus
/// the boundary identities.
pub fn verify_cm(z: &CMFrieze) -> Vec<CmViolation> {
    let n = z.n as i64;
    let mut out = Vec::new();
    for (idx, v) in &z.nodes {
        let r = idx.row2();
        if (r == 0 || r == 2 * n) && !v.is_zero() {
            out.push(CmViolation { kind: CmViolationKind::Boundary, node: *idx });
        }
    }
    for (idx, v) in &z.nodes {
        let (i, j) = (idx.i2 / 2, idx.j2 / 2);
        let r = j - i;
        if (1..=(n - 1)).contains(&r) {
            if let Some(d) = z.diamond_at(i, j) {
                if !cm_det(&d).is_zero() {
                    out.push(CmViolation { kind: CmViolationKind::Diamond, node: *idx });
                }
            }
        }
        let mut mismatch = false;
        if r == 1 {
            for line in [LineIdx::up(i), LineIdx::down(i)] {
                if let Some(w) = z.line(line) {
                    mismatch |= w != v;
                }
            }
        } else if r == n - 1 {
            for line in [LineIdx::up(i - 1), LineIdx::down(i + n - 1)] {
                if let Some(w) = z.line(line) {
                    mismatch |= w != v;
                }
            }
        }
        if mismatch {
            out.push(CmViolation { kind: CmViolationKind::LineIdentity, node: *idx });
        }
    }
    out.sort_by_key(|v| (v.node, v.kind as u8));
    out
}

/// Coherence residual at center `(i, j)`:
/// `dM/de(x1) * dM/df(x4) - dM/da(x2) * dM/dc(x3)` over the four diamonds
/// around the center. `None` when the window misses one of the 13 entries.
fn coherence_residual(z: &CMFrieze, i: i64, j: i64) -> Option<Rat> {
    let x1 = z.diamond_at(i - 1, j - 1)?;
    let x2 = z.diamond_at(i - 1, j)?;
    let x3 = z.diamond_at(i, j - 1)?;
    let x4 = z.diamond_at(i, j)?;
    Some(
        &(&cm_partial(PartialDir::Left, &x1) * &cm_partial(PartialDir::Right, &x4))
            - &(&cm_partial(PartialDir::Up, &x2) * &cm_partial(PartialDir::Down, &x3)),
    )
}

/// Evaluates the coherence condition at every window position
/// `2 <= j - i <= n - 2` and reports the integer centers where it fails.
pub fn verify_coherence(z: &CMFrieze) -> Vec<(i64, i64)> {
    let n = z.n as i64;
    let mut out = Vec::new();
    for idx in z.nodes.keys() {
        let (i, j) = (idx.i2 / 2, idx.j2 / 2);
        if !(2..=(n - 2)).contains(&(j - i)) {
            continue;
        }
        if let Some(res) = coherence_residual(z, i, j) {
            if !res.is_zero() {
                out.push((i, j));
            }
        }
    }
    out
}

/// The Cayley-Menger frieze determined by a full set of pairwise squared
/// distances.
pub fn cmfrieze_from_measurements(m: &MeasurementSet, window: Window) -> Result<CMFrieze, Error> {
    let n = m.n();
    if n < 4 {
        return Err(Error::OrderTooSmall);
    }
    let wrap = |t: i64| wrap_vertex(t, n);
    let need = |i: i64, j: i64| -> Result<Rat, Error> {
        m.x(wrap(i), wrap(j)).ok_or_else(|| {
            let (u, v) = (wrap(i).min(wrap(j)), wrap(i).max(wrap(j)));
            Error::MissingSymbol(format!("x:{u}-{v}"))
        })
    };
    let mut nodes = NodeMap::new();
    for i in window.lo..=window.hi {
        for off in 0..=(n as i64) {
            nodes.insert(NodeIdx::int(i, i + off), need(i, i + off)?);
        }
    }
    let mut lines = LineMap::new();
    for k in window.lo..=(window.hi + n as i64) {
        let side = need(k, k + 1)?;
        lines.insert(LineIdx::up(k), side.clone());
        lines.insert(LineIdx::down(k), side);
    }
    Ok(CMFrieze { n, window, nodes, lines })
}

/// The Cayley-Menger frieze of a polygon; coherent by construction.
pub fn cmfrieze_from_polygon(p: &Polygon, window: Window) -> Result<CMFrieze, Error> {
    if p.n() < 4 {
        return Err(Error::OrderTooSmall);
    }
    cmfrieze_from_measurements(&measure_all(p), window)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SolveDir {
    /// Solve for the top-left corner (the `e` slot of the first diamond).
    Left,
    /// Solve for the bottom-right corner (the `f` slot of the fourth).
    Right,
}

fn consistent(pairs: &[(&Rat, &Rat)]) -> Result<(), Error> {
    for (a, b) in pairs {
        if a != b {
            return Err(Error::MalformedInput(
                "coherence diamonds do not share their overlapping entries".into(),
            ));
        }
    }
    Ok(())
}

/// Solves the coherence equation for the one unknown corner of the fourth
/// diamond around a shared node.
///
/// For `Right` the inputs are the upper-left, top and bottom diamonds
/// `(x1, x2, x3)` and the unknown is the `f` slot of the lower-right diamond
/// `x4`; for `Left` the inputs are `(x2, x3, x4)` and the unknown is the `e`
/// slot of `x1`. The equation has degree one in the unknown; the linear
/// coefficient is extracted by evaluating at 0 and 1.
pub fn coherence_solve(
    d1: &CMDiamond,
    d2: &CMDiamond,
    d3: &CMDiamond,
    dir: SolveDir,
) -> Result<Rat, Error> {
    match dir {
        SolveDir::Right => {
            let (x1, x2, x3) = (d1, d2, d3);
            consistent(&[
                (&x1.f, &x2.c),
                (&x1.f, &x3.a),
                (&x1.a, &x2.e),
                (&x1.b, &x2.b),
                (&x1.c, &x3.e),
                (&x1.d, &x3.d),
            ])?;
            let center = &x1.f;
            let h245 = heron_h(&x1.c, &x1.f, &x1.d);
            let h125 = heron_h(&x1.a, &x1.b, &x1.f);
            if center.is_zero() || h245.is_zero() || h125.is_zero() {
                return Err(Error::NonGenericH(None));
            }
            let lhs_left = cm_partial(PartialDir::Left, x1);
            let rhs = &cm_partial(PartialDir::Up, x2) * &cm_partial(PartialDir::Down, x3);
            let x4_at = |t: Rat| CMDiamond {
                a: x2.f.clone(),
                b: x3.b.clone(),
                c: x3.f.clone(),
                d: x2.d.clone(),
                e: x2.c.clone(),
                f: t,
            };
            let residual =
                |t: Rat| &(&lhs_left * &cm_partial(PartialDir::Right, &x4_at(t))) - &rhs;
            solve_linear(residual)
        }
        SolveDir::Left => {
            let (x2, x3, x4) = (d1, d2, d3);
            consistent(&[
                (&x2.c, &x3.a),
                (&x2.c, &x4.e),
                (&x2.f, &x4.a),
                (&x3.f, &x4.c),
                (&x2.d, &x4.d),
                (&x3.b, &x4.b),
            ])?;
            let center = &x2.c;
            let h256 = heron_h(&x2.c, &x2.f, &x2.d);
            let h235 = heron_h(&x3.b, &x3.a, &x3.f);
            if center.is_zero() || h256.is_zero() || h235.is_zero() {
                return Err(Error::NonGenericH(None));
            }
            let rhs = &cm_partial(PartialDir::Up, x2) * &cm_partial(PartialDir::Down, x3);
            let right4 = cm_partial(PartialDir::Right, x4);
            let x1_at = |t: Rat| CMDiamond {
                a: x2.e.clone(),
                b: x2.b.clone(),
                c: x3.e.clone(),
                d: x3.d.clone(),
                e: t,
                f: x2.c.clone(),
            };
            let residual = |t: Rat| &(&cm_partial(PartialDir::Left, &x1_at(t)) * &right4) - &rhs;
            solve_linear(residual)
        }
    }
}

/// Root of the degree-one polynomial `residual`, via values at 0 and 1.
fn solve_linear(residual: impl Fn(Rat) -> Rat) -> Result<Rat, Error> {
    let at0 = residual(Rat::zero());
    let at1 = residual(Rat::one());
    let coeff = &at1 - &at0;
    if coeff.is_zero() {
        return Err(Error::Degenerate);
    }
    let root = (-&at0).checked_div(&coeff)?;
    debug_assert!(residual(root.clone()).is_zero());
    Ok(root)
}

/// Reconstructs the unique coherent Cayley-Menger frieze extending the
/// values on the thickening of a traversing path, sweeping the coherence
/// recurrence away from the path. Values are ordered path nodes, shifted
/// nodes, lines.
pub fn propagate_cm(path: &CMPath, values: &[Rat], window: Window) -> Result<CMFrieze, Error> {
    let n = path.n();
    let n64 = n as i64;
    if values.len() != path.thickened_len() {
        return Err(Error::MalformedInput(format!(
            "expected {} values on the thickened path",
            path.thickened_len()
        )));
    }
    let count = path.nodes().len();
    let node_vals = &values[..count];
    let shift_vals = &values[count..2 * count];
    let line_vals = &values[2 * count..];
    let shifted = path.shifted_nodes();

    for idx in path.nodes().iter().chain(shifted.iter()) {
        if idx.i2 / 2 < window.lo || idx.i2 / 2 > window.hi {
            return Err(Error::WindowTooNarrow);
        }
    }

    // first-row pins
    let mut row1 = Row1::new(n);
    row1.pin(path.nodes()[0].i2 / 2, &node_vals[0])?;
    row1.pin(shifted[0].i2 / 2, &shift_vals[0])?;
    let top = *path.nodes().last().unwrap();
    row1.pin(top.i2 / 2 - 1, node_vals.last().unwrap())?;
    row1.pin(top.i2 / 2, shift_vals.last().unwrap())?;
    for (line, v) in path.lines().iter().zip(line_vals) {
        row1.pin(line.k, v)?;
    }
    row1.complete()?;

    // boundary prefill
    let mut nodes = NodeMap::new();
    let zero = Rat::zero();
    for i in window.lo..=window.hi {
        nodes.insert(NodeIdx::int(i, i), zero.clone());
        nodes.insert(NodeIdx::int(i, i + n64), zero.clone());
        nodes.insert(NodeIdx::int(i, i + 1), row1.get(i).clone());
        nodes.insert(NodeIdx::int(i, i + n64 - 1), row1.get(i - 1).clone());
    }
    let mut lines = LineMap::new();
    for k in window.lo..=(window.hi + n64) {
        lines.insert(LineIdx::up(k), row1.get(k).clone());
        lines.insert(LineIdx::down(k), row1.get(k).clone());
    }
    let insert = |nodes: &mut NodeMap, idx: NodeIdx, v: &Rat| -> Result<(), Error> {
        match nodes.get(&idx) {
            None => {
                nodes.insert(idx, v.clone());
                Ok(())
            }
            Some(old) if old == v => Ok(()),
            Some(_) => Err(Error::MalformedInput(format!(
                "path value at {idx} conflicts with the boundary conditions"
            ))),
        }
    };
    for (idx, v) in path.nodes().iter().zip(node_vals) {
        insert(&mut nodes, *idx, v)?;
    }
    for (idx, v) in shifted.iter().zip(shift_vals) {
        insert(&mut nodes, *idx, v)?;
    }

    // the seed diamonds along the staircase must satisfy the determinant
    let temp = CMFrieze { n, window, nodes: nodes.clone(), lines: lines.clone() };
    for idx in path.nodes().iter().take(count - 1) {
        let (i, j) = (idx.i2 / 2, idx.j2 / 2);
        match temp.diamond_at(i, j) {
            Some(d) if cm_det(&d).is_zero() => {}
            Some(_) => {
                return Err(Error::MalformedInput(format!(
                    "path diamond at {idx} violates the Cayley-Menger equation"
                )))
            }
            None => return Err(Error::Internal("thickened path does not cover its diamonds")),
        }
    }

    loop {
        let mut progress = false;
        // rightward: new corner (i+1, j+1) from center (i, j)
        for i in window.lo..window.hi {
            for off in 2..=(n64 - 2) {
                let j = i + off;
                progress |= solve_center(&mut nodes, &lines, i, j, SolveDir::Right)?;
            }
        }
        // leftward: new corner (i-1, j-1) from center (i, j)
        for i in ((window.lo + 1)..=window.hi).rev() {
            for off in (2..=(n64 - 2)).rev() {
                let j = i + off;
                progress |= solve_center(&mut nodes, &lines, i, j, SolveDir::Left)?;
            }
        }
        if !progress {
            break;
        }
    }

    for i in window.lo..=window.hi {
        for off in 0..=n64 {
            if !nodes.contains_key(&NodeIdx::int(i, i + off)) {
                return Err(Error::Internal("propagation did not cover the window"));
            }
        }
    }
    Ok(CMFrieze { n, window, nodes, lines })
}

/// Fires the coherence solve at center `(i, j)` when exactly the targeted
/// corner is missing and the other 12 entries are known.
fn solve_center(
    nodes: &mut NodeMap,
    lines: &LineMap,
    i: i64,
    j: i64,
    dir: SolveDir,
) -> Result<bool, Error> {
    let target = match dir {
        SolveDir::Right => NodeIdx::int(i + 1, j + 1),
        SolveDir::Left => NodeIdx::int(i - 1, j - 1),
    };
    if nodes.contains_key(&target) {
        return Ok(false);
    }
    let get = |ii: i64, jj: i64| nodes.get(&NodeIdx::int(ii, jj)).cloned();
    let needed: [(i64, i64); 8] = [
        (i - 1, j - 1),
        (i - 1, j),
        (i - 1, j + 1),
        (i, j - 1),
        (i, j),
        (i, j + 1),
        (i + 1, j - 1),
        (i + 1, j),
    ];
    // the eight grid entries other than the two opposite corners, of which
    // one is the target and the other must also be known
    let other_corner = match dir {
        SolveDir::Right => (i - 1, j - 1),
        SolveDir::Left => (i + 1, j + 1),
    };
    let mut known = Vec::new();
    for &(ii, jj) in &needed {
        if (ii, jj) == other_corner || (ii, jj) == (target.i2 / 2, target.j2 / 2) {
            continue;
        }
        match get(ii, jj) {
            Some(v) => known.push(((ii, jj), v)),
            None => return Ok(false),
        }
    }
    let Some(opp) = get(other_corner.0, other_corner.1) else { return Ok(false) };
    let at = |ii: i64, jj: i64| -> Rat {
        if (ii, jj) == other_corner {
            opp.clone()
        } else {
            known
                .iter()
                .find(|((a, b), _)| (*a, *b) == (ii, jj))
                .map(|(_, v)| v.clone())
                .expect("grid entry known")
        }
    };
    let line = |l: LineIdx| lines.get(&l).cloned().expect("lines prefilled");
    let center = at(i, j);
    if center.is_zero() {
        return Err(Error::ZeroPivot(Some(Pos::Node(NodeIdx::int(i, j)))));
    }
    let dia = |ii: i64, jj: i64| CMDiamond {
        a: at(ii, jj + 1),
        b: line(LineIdx::up(ii)),
        c: at(ii + 1, jj),
        d: line(LineIdx::down(jj)),
        e: at(ii, jj),
        f: at(ii + 1, jj + 1),
    };
    let value = match dir {
        SolveDir::Right => {
            let x1 = dia(i - 1, j - 1);
            let x2 = dia(i - 1, j);
            // x3 misses its own f? no: x3 = (i, j-1) has f at (i+1, j): known
            let x3 = dia(i, j - 1);
            coherence_solve(&x1, &x2, &x3, SolveDir::Right)
        }
        SolveDir::Left => {
            let x2 = dia(i - 1, j);
            let x3 = dia(i, j - 1);
            let x4 = dia(i, j);
            coherence_solve(&x2, &x3, &x4, SolveDir::Left)
        }
    }
    .map_err(|err| match err {
        Error::NonGenericH(None) => Error::NonGenericH(Some(Pos::Node(NodeIdx::int(i, j)))),
        other => other,
    })?;
    nodes.insert(target, value);
    Ok(true)
}

/// Lifts a coherent Cayley-Menger frieze to a Heronian frieze restricting to
/// it. The `seed` optionally fixes the signed square roots along the lifted
/// column path; its first entry picks one of the two global signs, the rest
/// must agree with the forced chain. Without a seed the positive square
/// root is taken, failing when it is irrational.
pub fn extend(z: &CMFrieze, seed: Option<&[Rat]>) -> Result<super::HeronianFrieze, Error> {
    let n = z.n;
    let n64 = n as i64;
    if z.window.width() < 2 {
        return Err(Error::WindowTooNarrow);
    }
    if !verify_cm(z).is_empty() || !verify_coherence(z).is_empty() {
        return Err(Error::IncoherentInput);
    }
    if let Some(idx) = z.interior_zero() {
        return Err(Error::ZeroPivot(Some(Pos::Node(idx))));
    }
    let lo = z.window.lo;
    let need = |i: i64, j: i64| -> Result<Rat, Error> {
        z.at(i, j).cloned().ok_or(Error::WindowTooNarrow)
    };

    // Chain the signed square roots up the column at lo: q_1 is free (from
    // the seed or the positive root), and each next diamond's p is the
    // previous diamond's r, so its lift is forced.
    let mut halves: Vec<Rat> = Vec::with_capacity(n as usize - 2);
    let h1 = heron_h(&need(lo, lo + 2)?, &need(lo + 1, lo + 2)?, &need(lo, lo + 1)?);
    let q1 = match seed {
        Some(seed) if !seed.is_empty() => {
            let q = seed[0].clone();
            if q.sq() != h1 {
                return Err(Error::HeronViolation(Some(Pos::Path(0))));
            }
            q
        }
        _ => {
            if h1.is_negative() {
                return Err(Error::NotPerfectSquare);
            }
            rat_sqrt(&h1)?.ok_or(Error::NotPerfectSquare)?
        }
    };
    halves.push(q1.clone());
    // r of the bottom boundary diamond equals its q
    let mut carry_p = q1;
    for k in 2..=(n64 - 2) {
        let x = z.diamond_at(lo, lo + k).ok_or(Error::WindowTooNarrow)?;
        let (lift, _) = cm_lift(&x, &carry_p).map_err(|err| match err {
            Error::NonGenericH(None) => {
                Error::NonGenericH(Some(Pos::Node(NodeIdx::int(lo, lo + k))))
            }
            other => other,
        })?;
        halves.push(lift.q.clone());
        carry_p = lift.r.clone();
    }
    if let Some(seed) = seed {
        for (k, v) in seed.iter().enumerate().skip(1) {
            if k < halves.len() && *v != halves[k] {
                return Err(Error::MalformedInput(format!(
                    "seed value {k} conflicts with the forced sign chain"
                )));
            }
        }
    }

    let path = super::HTraversingPath::column(n, lo)?;
    let mut values = Vec::with_capacity(path.value_len());
    for k in 1..n64 {
        values.push(need(lo, lo + k)?);
        if k <= n64 - 2 {
            values.push(halves[(k - 1) as usize].clone());
        }
    }
    for line in path.lines() {
        values.push(z.line(*line).cloned().ok_or(Error::WindowTooNarrow)?);
    }
    let lifted = super::propagate_heronian(&path, &values, z.window)?;
    // a coherent generic input is exactly the restriction of its lift
    let restricted = super::restrict(&lifted)?;
    if restricted.nodes != z.nodes {
        return Err(Error::IncoherentInput);
    }
    Ok(lifted)
}

impl Serialize for CMFrieze {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        encode_frieze("cm", self.n, self.window, &self.nodes, &self.lines).serialize(s)
    }
}

impl<'de> Deserialize<'de> for CMFrieze {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = FriezeJson::deserialize(d)?;
        if raw.kind != "cm" {
            return Err(serde::de::Error::custom("expected kind \"cm\""));
        }
        let (window, nodes, lines) = decode_maps(&raw).map_err(serde::de::Error::custom)?;
        if let Some(idx) = nodes.keys().find(|idx| !idx.is_integer()) {
            return Err(serde::de::Error::custom(format!(
                "half-integer node {idx} in a Cayley-Menger frieze"
            )));
        }
        Ok(CMFrieze { n: raw.n, window, nodes, lines })
    }
}
