//! Points, polygons and their measurements: squared distances `x_ij` and
//! rescaled signed areas `S_ijk`, triangle recovery, and reconstruction of a
//! polygon from the measurement data of a triangulation.

use crate::exact::{rat_sqrt, two, Rat};
use crate::triangulation::TriCycle;
use crate::Error;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Point {
    pub u: Rat,
    pub v: Rat,
}

impl Point {
    pub fn new(u: Rat, v: Rat) -> Self {
        Point { u, v }
    }

    pub fn from_ints(u: i64, v: i64) -> Self {
        Point::new(Rat::from_int(u), Rat::from_int(v))
    }
}

/// An ordered tuple of at least three labeled vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    pub fn new(vertices: Vec<Point>) -> Result<Self, Error> {
        if vertices.len() < 3 {
            return Err(Error::MalformedInput(
                "polygon needs at least 3 vertices".into(),
            ));
        }
        Ok(Polygon { vertices })
    }

    pub fn n(&self) -> u32 {
        self.vertices.len() as u32
    }

    /// Vertex by 1-based label.
    pub fn vertex(&self, i: u32) -> &Point {
        &self.vertices[(i - 1) as usize]
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }
}

#[derive(Serialize, Deserialize)]
struct PolygonJson {
    vertices: Vec<(Rat, Rat)>,
}

impl Serialize for Polygon {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolygonJson {
            vertices: self
                .vertices
                .iter()
                .map(|p| (p.u.clone(), p.v.clone()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polygon {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PolygonJson::deserialize(d)?;
        Polygon::new(
            raw.vertices
                .into_iter()
                .map(|(u, v)| Point::new(u, v))
                .collect(),
        )
        .map_err(serde::de::Error::custom)
    }
}

/// Squared distance between two points.
pub fn sq_dist(a: &Point, b: &Point) -> Rat {
    let du = &b.u - &a.u;
    let dv = &b.v - &a.v;
    du.sq() + dv.sq()
}

/// Four times the signed area of the oriented triangle `ABC`.
pub fn signed_area4(a: &Point, b: &Point, c: &Point) -> Rat {
    let abu = &b.u - &a.u;
    let abv = &b.v - &a.v;
    let acu = &c.u - &a.u;
    let acv = &c.v - &a.v;
    two() * (&abu * &acv - &abv * &acu)
}

/// The Heron polynomial `-p^2 - q^2 - r^2 + 2pq + 2pr + 2qr`.
pub fn heron_h(p: &Rat, q: &Rat, r: &Rat) -> Rat {
    let t = two();
    -p.sq() - q.sq() - r.sq() + &t * &(p * q) + &t * &(p * r) + &t * &(q * r)
}

/// Places the unique point `C` with `sq_dist(A,C) = q`, `sq_dist(B,C) = r`
/// and `signed_area4(A,B,C) = s`, given `s^2 = H(p,q,r)` for
/// `p = sq_dist(A,B) != 0`.
pub fn recover_point(a: &Point, b: &Point, q: &Rat, r: &Rat, s: &Rat) -> Result<Point, Error> {
    let p = sq_dist(a, b);
    if p.is_zero() {
        return Err(Error::ZeroPivot(None));
    }
    if s.sq() != heron_h(&p, q, r) {
        return Err(Error::HeronViolation(None));
    }
    let uu = &b.u - &a.u;
    let uv = &b.v - &a.v;
    let lin = &(&p + q) - r;
    let denom = two() * &p;
    let vu = &(&(&uu * &lin) - &(&uv * s)) / &denom;
    let vv = &(&(&uv * &lin) + &(&uu * s)) / &denom;
    Ok(Point::new(&a.u + &vu, &a.v + &vv))
}

/// The measurements of a polygon, or a triangulated subset of them.
///
/// `x` is stored on unordered pairs `i < j`; `S` is stored canonically on
/// triples `i < j < k` and its value for any other vertex order is derived
/// by antisymmetry, never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MeasurementSet {
    n: u32,
    x: BTreeMap<(u32, u32), Rat>,
    s: BTreeMap<(u32, u32, u32), Rat>,
}

/// Sorts a triple and returns the parity sign of the sorting permutation.
pub(crate) fn canonical_triple(i: u32, j: u32, k: u32) -> ((u32, u32, u32), i64) {
    let mut t = [(i, 0), (j, 1), (k, 2)];
    t.sort();
    let perm = [t[0].1, t[1].1, t[2].1];
    let sign = match perm {
        [0, 1, 2] | [1, 2, 0] | [2, 0, 1] => 1,
        _ => -1,
    };
    ((t[0].0, t[1].0, t[2].0), sign)
}

impl MeasurementSet {
    pub fn new(n: u32) -> Self {
        MeasurementSet { n, x: BTreeMap::new(), s: BTreeMap::new() }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn insert_x(&mut self, i: u32, j: u32, value: Rat) {
        debug_assert!(i != j);
        let key = if i < j { (i, j) } else { (j, i) };
        self.x.insert(key, value);
    }

    /// Inserts `S_ijk` given in any vertex order.
    pub fn insert_s(&mut self, i: u32, j: u32, k: u32, value: Rat) {
        let (key, sign) = canonical_triple(i, j, k);
        let v = if sign < 0 { -value } else { value };
        self.s.insert(key, v);
    }

    /// `x_ij`; `x_ii = 0` is implicit.
    pub fn x(&self, i: u32, j: u32) -> Option<Rat> {
        if i == j {
            return Some(Rat::zero());
        }
        let key = if i < j { (i, j) } else { (j, i) };
        self.x.get(&key).cloned()
    }

    /// `S_ijk` in the given vertex order, with the antisymmetry sign applied.
    pub fn s(&self, i: u32, j: u32, k: u32) -> Option<Rat> {
        if i == j || j == k || i == k {
            return Some(Rat::zero());
        }
        let (key, sign) = canonical_triple(i, j, k);
        let v = self.s.get(&key)?;
        Some(if sign < 0 { -v } else { v.clone() })
    }

    pub fn x_entries(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.x.iter()
    }

    pub fn s_entries(&self) -> impl Iterator<Item = (&(u32, u32, u32), &Rat)> {
        self.s.iter()
    }
}

#[derive(Serialize, Deserialize)]
struct MeasurementJson {
    n: u32,
    x: BTreeMap<String, Rat>,
    s: BTreeMap<String, Rat>,
}

impl Serialize for MeasurementSet {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        MeasurementJson {
            n: self.n,
            x: self
                .x
                .iter()
                .map(|(&(i, j), v)| (format!("{i}-{j}"), v.clone()))
                .collect(),
            s: self
                .s
                .iter()
                .map(|(&(i, j, k), v)| (format!("{i}-{j}-{k}"), v.clone()))
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for MeasurementSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = MeasurementJson::deserialize(d)?;
        let mut m = MeasurementSet::new(raw.n);
        let parse_parts = |s: &str, want: usize| -> Result<Vec<u32>, String> {
            let parts: Vec<_> = s.split('-').map(|p| p.trim().parse::<u32>()).collect();
            if parts.len() != want || parts.iter().any(|p| p.is_err()) {
                return Err(format!("bad measurement key {s:?}"));
            }
            Ok(parts.into_iter().map(|p| p.unwrap()).collect())
        };
        for (key, v) in raw.x {
            let p = parse_parts(&key, 2).map_err(serde::de::Error::custom)?;
            if p[0] == p[1] || p.iter().any(|&u| u == 0 || u > raw.n) {
                return Err(serde::de::Error::custom(format!("bad pair key {key:?}")));
            }
            m.insert_x(p[0], p[1], v);
        }
        for (key, v) in raw.s {
            let p = parse_parts(&key, 3).map_err(serde::de::Error::custom)?;
            if p[0] >= p[1] || p[1] >= p[2] || p.iter().any(|&u| u == 0 || u > raw.n) {
                return Err(serde::de::Error::custom(format!("bad triple key {key:?}")));
            }
            m.insert_s(p[0], p[1], p[2], v);
        }
        Ok(m)
    }
}

/// All measurements of `P`: `x` over every pair, `S` over every triple.
pub fn measure_all(p: &Polygon) -> MeasurementSet {
    let n = p.n();
    let mut m = MeasurementSet::new(n);
    for i in 1..=n {
        for j in (i + 1)..=n {
            m.insert_x(i, j, sq_dist(p.vertex(i), p.vertex(j)));
            for k in (j + 1)..=n {
                m.insert_s(i, j, k, signed_area4(p.vertex(i), p.vertex(j), p.vertex(k)));
            }
        }
    }
    m
}

/// The restriction of [`measure_all`] to the edges and oriented triangles
/// of the triangulation `g`.
pub fn measure_triangulated(p: &Polygon, g: &TriCycle) -> Result<MeasurementSet, Error> {
    if p.n() != g.n() {
        return Err(Error::OrderMismatch);
    }
    let mut m = MeasurementSet::new(p.n());
    for (i, j) in g.edges() {
        m.insert_x(i, j, sq_dist(p.vertex(i), p.vertex(j)));
    }
    for (i, j, k) in g.triangles() {
        m.insert_s(i, j, k, signed_area4(p.vertex(i), p.vertex(j), p.vertex(k)));
    }
    Ok(m)
}

fn need_x(m: &MeasurementSet, i: u32, j: u32) -> Result<Rat, Error> {
    m.x(i, j).ok_or_else(|| Error::MissingSymbol(format!("x:{}-{}", i.min(j), i.max(j))))
}

fn need_s(m: &MeasurementSet, i: u32, j: u32, k: u32) -> Result<Rat, Error> {
    m.s(i, j, k).ok_or_else(|| Error::MissingSymbol(format!("s:{i}-{j}-{k}")))
}

/// Rebuilds the polygon whose triangulated measurements are `m`, anchored at
/// `A_1 = (0,0)` with `A_2` on the nonnegative first axis.
///
/// Requires the Heron equation on every triangle of `g`, nonzero pivot edges,
/// and a perfect-square anchor side `x_12`.
pub fn polygon_from_measurements(g: &TriCycle, m: &MeasurementSet) -> Result<Polygon, Error> {
    if g.n() != m.n() {
        return Err(Error::OrderMismatch);
    }
    let n = g.n();
    for (i, j, k) in g.triangles() {
        let s = need_s(m, i, j, k)?;
        let h = heron_h(&need_x(m, i, j)?, &need_x(m, j, k)?, &need_x(m, i, k)?);
        if s.sq() != h {
            return Err(Error::HeronViolation(None));
        }
    }

    let x12 = need_x(m, 1, 2)?;
    let side = rat_sqrt(&x12)?.ok_or(Error::NotPerfectSquare)?;
    let mut placed: BTreeMap<u32, Point> = BTreeMap::new();
    placed.insert(1, Point::from_ints(0, 0));
    placed.insert(2, Point::new(side, Rat::zero()));

    // Spread across the dual tree: repeatedly attach the third vertex of a
    // triangle whose other two vertices are already placed.
    let triangles = g.triangles();
    let mut done = vec![false; triangles.len()];
    while placed.len() < n as usize {
        let mut progressed = false;
        for (t, &(i, j, k)) in triangles.iter().enumerate() {
            if done[t] {
                continue;
            }
            let verts = [i, j, k];
            let known: Vec<u32> = verts.iter().copied().filter(|v| placed.contains_key(v)).collect();
            if known.len() == 3 {
                done[t] = true;
                continue;
            }
            if known.len() != 2 {
                continue;
            }
            let (u, v) = (known[0], known[1]);
            let w = verts.iter().copied().find(|t| !placed.contains_key(t)).unwrap();
            let q = need_x(m, u, w)?;
            let r = need_x(m, v, w)?;
            let s = need_s(m, u, v, w)?;
            let a = placed[&u].clone();
            let b = placed[&v].clone();
            let c = recover_point(&a, &b, &q, &r, &s)?;
            placed.insert(w, c);
            done[t] = true;
            progressed = true;
        }
        if !progressed {
            return Err(Error::Internal("triangulation does not connect all vertices"));
        }
    }
    Polygon::new((1..=n).map(|i| placed[&i].clone()).collect())
}

/// Float reconstruction for rendering: no perfect-square requirement, but a
/// `1e-9` self-check against the input measurements.
pub fn polygon_from_measurements_f64(
    g: &TriCycle,
    m: &MeasurementSet,
) -> Result<Vec<(f64, f64)>, Error> {
    if g.n() != m.n() {
        return Err(Error::OrderMismatch);
    }
    let n = g.n();
    let x12 = need_x(m, 1, 2)?.to_f64();
    if x12 < 0.0 {
        return Err(Error::NegativeInput);
    }
    let mut placed: BTreeMap<u32, (f64, f64)> = BTreeMap::new();
    placed.insert(1, (0.0, 0.0));
    placed.insert(2, (x12.sqrt(), 0.0));
    let triangles = g.triangles();
    let mut done = vec![false; triangles.len()];
    while placed.len() < n as usize {
        let mut progressed = false;
        for (t, &(i, j, k)) in triangles.iter().enumerate() {
            if done[t] {
                continue;
            }
            let verts = [i, j, k];
            let known: Vec<u32> = verts.iter().copied().filter(|v| placed.contains_key(v)).collect();
            if known.len() == 3 {
                done[t] = true;
                continue;
            }
            if known.len() != 2 {
                continue;
            }
            let (u, v) = (known[0], known[1]);
            let w = verts.iter().copied().find(|t| !placed.contains_key(t)).unwrap();
            let (au, av) = placed[&u];
            let (bu, bv) = placed[&v];
            let p = (bu - au) * (bu - au) + (bv - av) * (bv - av);
            if p == 0.0 {
                return Err(Error::ZeroPivot(None));
            }
            let q = need_x(m, u, w)?.to_f64();
            let r = need_x(m, v, w)?.to_f64();
            let s = need_s(m, u, v, w)?.to_f64();
            let lin = p + q - r;
            let (uu, uv) = (bu - au, bv - av);
            let cu = au + (uu * lin - uv * s) / (2.0 * p);
            let cv = av + (uv * lin + uu * s) / (2.0 * p);
            placed.insert(w, (cu, cv));
            done[t] = true;
            progressed = true;
        }
        if !progressed {
            return Err(Error::Internal("triangulation does not connect all vertices"));
        }
    }
    let coords: Vec<(f64, f64)> = (1..=n).map(|i| placed[&i]).collect();
    // Self-check every input measurement to 1e-9.
    let close = |got: f64, want: f64| (got - want).abs() <= 1e-9 * want.abs().max(1.0);
    for (&(i, j), v) in m.x_entries() {
        let (au, av) = coords[(i - 1) as usize];
        let (bu, bv) = coords[(j - 1) as usize];
        let d = (bu - au) * (bu - au) + (bv - av) * (bv - av);
        if !close(d, v.to_f64()) {
            return Err(Error::FloatSelfCheck);
        }
    }
    for (&(i, j, k), v) in m.s_entries() {
        let (au, av) = coords[(i - 1) as usize];
        let (bu, bv) = coords[(j - 1) as usize];
        let (cu, cv) = coords[(k - 1) as usize];
        let s = 2.0 * ((bu - au) * (cv - av) - (bv - av) * (cu - au));
        if !close(s, v.to_f64()) {
            return Err(Error::FloatSelfCheck);
        }
    }
    Ok(coords)
}
