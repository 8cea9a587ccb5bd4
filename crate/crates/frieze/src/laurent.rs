//! Sparse multivariate Laurent polynomials over measurement symbols, and the
//! symbolic expansion of an arbitrary measurement of a polygon in terms of
//! the measurement data of a triangulation.
//!
//! Every squared distance and signed area is a Laurent polynomial in the
//! triangulation's measurements whose denominator divides a product of
//! squared diagonal lengths of the triangulation; [`expand`] computes such
//! an expression and [`LaurentPoly::denominator_monomial`] certifies its
//! denominator support. Coefficients carry an inessential power of two
//! coming from the bracket normalization, so they are stored as exact
//! rationals; the subset sums feeding the brackets are integral and checked.

use crate::exact::Rat;
use crate::geometry::{canonical_triple, MeasurementSet};
use crate::triangulation::{spanning_edges, tree_path, tree_path_walk, Relabel, TreeOrder, TriCycle};
use crate::Error;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// A measurement symbol: a squared distance on an unordered pair or a
/// signed area on a canonically ordered triple `i < j < k`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MeasSym {
    X(u32, u32),
    S(u32, u32, u32),
}

impl MeasSym {
    pub fn x(i: u32, j: u32) -> Self {
        debug_assert!(i != j);
        if i < j { MeasSym::X(i, j) } else { MeasSym::X(j, i) }
    }

    /// Canonicalizes `S_ijk`, returning the symbol and the antisymmetry
    /// sign of the reordering.
    pub fn s(i: u32, j: u32, k: u32) -> (Self, i64) {
        let ((a, b, c), sign) = canonical_triple(i, j, k);
        (MeasSym::S(a, b, c), sign)
    }

    fn check(&self, n: u32) -> Result<(), Error> {
        match *self {
            MeasSym::X(i, j) => {
                if i == 0 || j > n || i >= j {
                    return Err(Error::InvalidTarget);
                }
            }
            MeasSym::S(i, j, k) => {
                if i == 0 || k > n || i >= j || j >= k {
                    return Err(Error::InvalidTarget);
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for MeasSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeasSym::X(i, j) => write!(f, "x:{i}-{j}"),
            MeasSym::S(i, j, k) => write!(f, "s:{i}-{j}-{k}"),
        }
    }
}

impl FromStr for MeasSym {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::MalformedInput(format!("bad measurement symbol: {s:?}"));
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        let parts: Vec<u32> = rest
            .split('-')
            .map(|p| p.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        match (kind.trim(), parts.as_slice()) {
            ("x", &[i, j]) if i < j && i > 0 => Ok(MeasSym::X(i, j)),
            ("s", &[i, j, k]) if i < j && j < k && i > 0 => Ok(MeasSym::S(i, j, k)),
            _ => Err(bad()),
        }
    }
}

pub type ExpVec = BTreeMap<MeasSym, i64>;

/// A sparse Laurent polynomial: exponent vectors over [`MeasSym`] mapped to
/// rational coefficients. Coefficients are kept rational internally because
/// intermediate bracket values carry powers of two; integrality of final
/// expansions is asserted, not assumed.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<ExpVec, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = LaurentPoly::zero();
        if !c.is_zero() {
            p.terms.insert(ExpVec::new(), c);
        }
        p
    }

    pub fn one() -> Self {
        LaurentPoly::constant(Rat::one())
    }

    pub fn symbol(sym: MeasSym) -> Self {
        LaurentPoly::sym_pow(sym, 1)
    }

    pub fn sym_pow(sym: MeasSym, e: i64) -> Self {
        let mut p = LaurentPoly::zero();
        let mut ev = ExpVec::new();
        if e != 0 {
            ev.insert(sym, e);
        }
        p.terms.insert(ev, Rat::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &Rat)> {
        self.terms.iter()
    }

    fn add_term(&mut self, ev: ExpVec, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(ev) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += &c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (ev, c) in &other.terms {
            out.add_term(ev.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(ev, c)| (ev.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &Rat) -> LaurentPoly {
        if k.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(ev, c)| (ev.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ev1, c1) in &self.terms {
            for (ev2, c2) in &other.terms {
                let mut ev = ev1.clone();
                for (&sym, &e) in ev2 {
                    let slot = ev.entry(sym).or_insert(0);
                    *slot += e;
                    if *slot == 0 {
                        ev.remove(&sym);
                    }
                }
                out.add_term(ev, c1 * c2);
            }
        }
        out
    }

    /// Multiplies every term by `sym^e`.
    pub fn mul_sym_pow(&self, sym: MeasSym, e: i64) -> LaurentPoly {
        if e == 0 {
            return self.clone();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(ev, c)| {
                    let mut ev = ev.clone();
                    let slot = ev.entry(sym).or_insert(0);
                    *slot += e;
                    if *slot == 0 {
                        ev.remove(&sym);
                    }
                    (ev, c.clone())
                })
                .collect(),
        }
    }

    /// Exact evaluation on a measurement set.
    pub fn evaluate(&self, m: &MeasurementSet) -> Result<Rat, Error> {
        let mut acc = Rat::zero();
        for (ev, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (&sym, &e) in ev {
                let v = match sym {
                    MeasSym::X(i, j) => m.x(i, j),
                    MeasSym::S(i, j, k) => m.s(i, j, k),
                }
                .ok_or_else(|| Error::MissingSymbol(sym.to_string()))?;
                if e < 0 && v.is_zero() {
                    return Err(Error::ZeroPivot(None));
                }
                term *= &v.pow(e)?;
            }
            acc += &term;
        }
        Ok(acc)
    }

    /// For each symbol, the maximal negative exponent across terms: the
    /// monomial denominator of the expression.
    pub fn denominator_monomial(&self) -> BTreeMap<MeasSym, u32> {
        let mut out: BTreeMap<MeasSym, u32> = BTreeMap::new();
        for ev in self.terms.keys() {
            for (&sym, &e) in ev {
                if e < 0 {
                    let need = (-e) as u32;
                    let slot = out.entry(sym).or_insert(0);
                    *slot = (*slot).max(need);
                }
            }
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Renames every symbol through `f`, which also supplies a sign for
    /// signed-area symbols; used to translate between relabeled cycles.
    fn map_symbols(&self, f: impl Fn(MeasSym) -> (MeasSym, i64)) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ev, c) in &self.terms {
            let mut new_ev = ExpVec::new();
            let mut sign = 1i64;
            for (&sym, &e) in ev {
                let (new_sym, s) = f(sym);
                if s < 0 && e.rem_euclid(2) == 1 {
                    sign = -sign;
                }
                let slot = new_ev.entry(new_sym).or_insert(0);
                *slot += e;
                if *slot == 0 {
                    new_ev.remove(&new_sym);
                }
            }
            let coeff = if sign < 0 { -c } else { c.clone() };
            out.add_term(new_ev, coeff);
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: Rat,
    exps: BTreeMap<String, i64>,
}

#[derive(Serialize, Deserialize)]
struct LaurentJson {
    terms: Vec<TermJson>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LaurentJson {
            terms: self
                .terms
                .iter()
                .map(|(ev, c)| TermJson {
                    coeff: c.clone(),
                    exps: ev.iter().map(|(sym, &e)| (sym.to_string(), e)).collect(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = LaurentJson::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for term in raw.terms {
            let mut ev = ExpVec::new();
            for (key, e) in term.exps {
                let sym: MeasSym = key.parse().map_err(serde::de::Error::custom)?;
                if e != 0 {
                    ev.insert(sym, e);
                }
            }
            p.add_term(ev, term.coeff);
        }
        Ok(p)
    }
}

/// An element `re + eps * im` with `eps^2 = -1`; products of
/// `T_m + eps S_m` factors compute the even/odd signed subset sums without
/// enumerating subsets.
#[derive(Clone, Debug)]
pub struct EpsElem {
    pub re: LaurentPoly,
    pub im: LaurentPoly,
}

impl EpsElem {
    pub fn one() -> Self {
        EpsElem { re: LaurentPoly::one(), im: LaurentPoly::zero() }
    }

    pub fn mul(&self, other: &EpsElem) -> EpsElem {
        EpsElem {
            re: self.re.mul(&other.re).sub(&self.im.mul(&other.im)),
            im: self.re.mul(&other.im).add(&self.im.mul(&other.re)),
        }
    }
}

/// The per-edge polynomials of a thin normalized triangulation: for each
/// `2 <= j <= n-1`, `S_j` is the (signed) area symbol of the triangle with
/// sides `D_j, D_{j+1}`, and `T_j` the three-term squared-length expression
/// of twice their inner product.
pub fn st_polys(g: &TriCycle, order: &TreeOrder) -> Result<Vec<(LaurentPoly, LaurentPoly)>, Error> {
    let n = g.n();
    let mut out = Vec::new();
    for j in 2..n as usize {
        let dj = order.edge(j);
        let dj1 = order.edge(j + 1);
        let shared = [dj.0, dj.1]
            .into_iter()
            .find(|v| *v == dj1.0 || *v == dj1.1)
            .ok_or(Error::Internal("consecutive spanning edges share no vertex"))?;
        let u = if dj.0 == shared { dj.1 } else { dj.0 };
        let u2 = if dj1.0 == shared { dj1.1 } else { dj1.0 };
        // v_k points from min(D_k) to max(D_k); orient both factors away
        // from the shared vertex and track the sign.
        let eps_j = if shared == dj.0 { 1 } else { -1 };
        let eps_j1 = if shared == dj1.0 { 1 } else { -1 };
        let orient = eps_j * eps_j1;
        if !g.is_edge(u, u2) {
            return Err(Error::Internal("spanning edges fail to close a triangle"));
        }
        let (sym, sgn) = MeasSym::s(shared, u, u2);
        let s_poly = LaurentPoly::symbol(sym).scale(&Rat::from_int(orient * sgn));
        let t_poly = LaurentPoly::symbol(MeasSym::x(shared, u))
            .add(&LaurentPoly::symbol(MeasSym::x(shared, u2)))
            .sub(&LaurentPoly::symbol(MeasSym::x(u, u2)))
            .scale(&Rat::from_int(orient));
        out.push((s_poly, t_poly));
    }
    Ok(out)
}

/// The even and odd signed subset sums over factors `a..b-1`, computed as
/// the product of `T_m + eps S_m` in the formal extension.
pub fn sigma(
    a: usize,
    b: usize,
    st: &[(LaurentPoly, LaurentPoly)],
) -> Result<(LaurentPoly, LaurentPoly), Error> {
    let n = st.len() + 2;
    if !(2 <= a && a < b && b <= n) {
        return Err(Error::IndexRange);
    }
    let mut acc = EpsElem::one();
    for m in a..b {
        let (s_m, t_m) = &st[m - 2];
        acc = acc.mul(&EpsElem { re: t_m.clone(), im: s_m.clone() });
    }
    // the subset sums are integer polynomials in the measurements; a
    // non-integral result here is an implementation fault
    if !acc.re.is_integral() || !acc.im.is_integral() {
        return Err(Error::NonIntegral);
    }
    Ok((acc.re, acc.im))
}

/// The inner and outer products of spanning edge vectors `v_a, v_b` as
/// Laurent polynomials: `2^(a-b) * Sigma(a,b) * prod x(D_m)^-1` over the
/// strictly intermediate edges, which are always diagonals.
pub fn bracket(
    order: &TreeOrder,
    st: &[(LaurentPoly, LaurentPoly)],
    a: usize,
    b: usize,
) -> Result<(LaurentPoly, LaurentPoly), Error> {
    let n = order.n() as usize;
    if !(2 <= a && a < b && b <= n) {
        return Err(Error::IndexRange);
    }
    let (even, odd) = sigma(a, b, st)?;
    let scale = Rat::from_int(2).pow(a as i64 - b as i64)?;
    let mut angle = even.scale(&scale);
    let mut square = odd.scale(&scale);
    for m in (a + 1)..b {
        let (i, j) = order.edge(m);
        let sym = MeasSym::x(i, j);
        angle = angle.mul_sym_pow(sym, -1);
        square = square.mul_sym_pow(sym, -1);
    }
    Ok((angle, square))
}

fn kappa(c: u32, v: u32) -> i64 {
    if c <= v { 1 } else { -1 }
}

/// `x_jk` over a thin normalized triangulation, as the alternating double
/// sum of inner products along the spanning-tree path from `j` to `k`.
fn xjk_thin(
    order: &TreeOrder,
    st: &[(LaurentPoly, LaurentPoly)],
    j: u32,
    k: u32,
) -> Result<LaurentPoly, Error> {
    let path = tree_path(order, j, k)?;
    let mut acc = LaurentPoly::zero();
    for (pos_a, &ia) in path.iter().enumerate() {
        // diagonal term <v,v> = x(D)
        let (u, v) = order.edge(ia);
        acc = acc.add(&LaurentPoly::symbol(MeasSym::x(u, v)));
        for (off, &ib) in path.iter().enumerate().skip(pos_a + 1) {
            // (a,b) and (b,a) contribute equally
            let sign = if (pos_a + off) % 2 == 0 { 2 } else { -2 };
            let (angle, _) = bracket(order, st, ia, ib)?;
            acc = acc.add(&angle.scale(&Rat::from_int(sign)));
        }
    }
    Ok(acc)
}

/// `S_jkn` over a thin normalized triangulation (third vertex `n`), as the
/// alternating double sum of outer products over the tree paths `j..k` and
/// `k..n`, with the orientation signs of the two path endpoints.
///
/// The paths must be traversed in walk order from `j` and from `k`: the
/// outer product is antisymmetric, so unlike the squared-distance case the
/// direction of traversal matters.
fn sjkn_thin(
    order: &TreeOrder,
    st: &[(LaurentPoly, LaurentPoly)],
    j: u32,
    k: u32,
) -> Result<LaurentPoly, Error> {
    let n = order.n();
    let pjk = tree_path_walk(order, j, k)?;
    let pkn = tree_path_walk(order, k, n)?;
    let mut acc = LaurentPoly::zero();
    for (pos_a, &ia) in pjk.iter().enumerate() {
        for (pos_b, &ib) in pkn.iter().enumerate() {
            if ia == ib {
                continue;
            }
            let mut sign = if (pos_a + pos_b) % 2 == 0 { 1 } else { -1 };
            let (lo, hi) = if ia < ib { (ia, ib) } else { (ib, ia) };
            if ia > ib {
                sign = -sign;
            }
            let (_, square) = bracket(order, st, lo, hi)?;
            acc = acc.add(&square.scale(&Rat::from_int(sign)));
        }
    }
    let scale = 2 * kappa(order.c(), j) * kappa(order.c(), k);
    Ok(acc.scale(&Rat::from_int(scale)))
}

fn translate_back(p: &LaurentPoly, rel: &Relabel) -> LaurentPoly {
    p.map_symbols(|sym| match sym {
        MeasSym::X(i, j) => (MeasSym::x(rel.old(i), rel.old(j)), 1),
        MeasSym::S(i, j, k) => MeasSym::s(rel.old(i), rel.old(j), rel.old(k)),
    })
}

/// Expands `x_ij` over a thin triangulation trimmed with respect to `{i,j}`
/// by rotating to normal form and applying the double-sum formula.
fn expand_trimmed_x(g: &TriCycle, i: u32, j: u32) -> Result<LaurentPoly, Error> {
    let (norm, rot) = g.rotate_to_normal()?;
    let order = spanning_edges(&norm)?;
    let st = st_polys(&norm, &order)?;
    let (ni, nj) = (rot.to_new(i).unwrap(), rot.to_new(j).unwrap());
    let (lo, hi) = if ni < nj { (ni, nj) } else { (nj, ni) };
    let poly = xjk_thin(&order, &st, lo, hi)?;
    Ok(translate_back(&poly, &rot))
}

/// Tries the three sides of the triple; when the triangulation is trimmed
/// with respect to one that is a genuine non-member diagonal, rotates it to
/// `{c, n}` and applies the third-vertex formula.
fn expand_trimmed_s(g: &TriCycle, i: u32, j: u32, k: u32) -> Result<Option<LaurentPoly>, Error> {
    for pair in [(j, k), (i, k), (i, j)] {
        if g.is_side(pair.0, pair.1) || g.has_diagonal(pair.0, pair.1) {
            continue;
        }
        if !g.is_trimmed_diag(pair)? {
            continue;
        }
        let (norm, rot) = g.rotate_to_normal()?;
        let order = spanning_edges(&norm)?;
        let st = st_polys(&norm, &order)?;
        let (ri, rj, rk) = (rot.to_new(i).unwrap(), rot.to_new(j).unwrap(), rot.to_new(k).unwrap());
        let (sym, sgn) = MeasSym::s(ri, rj, rk);
        let MeasSym::S(a, b, c) = sym else { unreachable!() };
        if c != norm.n() {
            // the rotated trimmed diagonal does not carry the triple's
            // largest label; another side must apply
            continue;
        }
        let poly = sjkn_thin(&order, &st, a, b)?.scale(&Rat::from_int(sgn));
        return Ok(Some(translate_back(&poly, &rot)));
    }
    Ok(None)
}

/// Laurent expansion of `target` in the measurements of the triangulation
/// `g`: evaluating the result on the triangulated measurements of any
/// polygon with nonzero diagonal lengths gives the target measurement.
///
/// Coefficients are integers and the denominator divides a product of
/// squared diagonal lengths of `g` crossing the target.
pub fn expand(g: &TriCycle, target: MeasSym) -> Result<LaurentPoly, Error> {
    target.check(g.n())?;
    expand_inner(g, target)
}

fn expand_inner(g: &TriCycle, target: MeasSym) -> Result<LaurentPoly, Error> {
    match target {
        MeasSym::X(i, j) => {
            if g.is_edge(i, j) {
                return Ok(LaurentPoly::symbol(MeasSym::x(i, j)));
            }
            let (sub, rel) = g.trim_diag((i, j))?;
            if sub.n() < g.n() {
                let ti = rel.to_new(i).unwrap();
                let tj = rel.to_new(j).unwrap();
                let poly = expand_inner(&sub, MeasSym::x(ti, tj))?;
                return Ok(translate_back(&poly, &rel));
            }
            expand_trimmed_x(g, i, j)
        }
        MeasSym::S(i, j, k) => {
            if g.is_triangle(i, j, k) {
                return Ok(LaurentPoly::symbol(MeasSym::S(i, j, k)));
            }
            let (sub, rel) = g.trim_tri((i, j, k))?;
            if sub.n() < g.n() {
                let t = (rel.to_new(i).unwrap(), rel.to_new(j).unwrap(), rel.to_new(k).unwrap());
                let (sym, sgn) = MeasSym::s(t.0, t.1, t.2);
                let poly = expand_inner(&sub, sym)?.scale(&Rat::from_int(sgn));
                return Ok(translate_back(&poly, &rel));
            }
            if let Some(poly) = expand_trimmed_s(g, i, j, k)? {
                return Ok(poly);
            }
            // No side of the triple works: split through a vertex l for
            // which none of the three subtriples is trimmed, so that each
            // branch recurses on a strictly smaller trimmed cycle.
            for l in 1..=g.n() {
                if l == i || l == j || l == k {
                    continue;
                }
                let any_trimmed = g.is_trimmed_tri((i, j, l))?
                    || g.is_trimmed_tri((i, k, l))?
                    || g.is_trimmed_tri((j, k, l))?;
                if any_trimmed {
                    continue;
                }
                // S_ijk = S_ijl + S_jkl - S_ikl
                let mut acc = LaurentPoly::zero();
                for (t, coef) in [((i, j, l), 1), ((j, k, l), 1), ((i, k, l), -1)] {
                    let (sym, sgn) = MeasSym::s(t.0, t.1, t.2);
                    let part = expand_inner(g, sym)?;
                    acc = acc.add(&part.scale(&Rat::from_int(coef * sgn)));
                }
                return Ok(acc);
            }
            Err(Error::Internal("no admissible split vertex for signed-area target"))
        }
    }
}

/// Direct closed-form expansion over the fan triangulation at vertex 1.
pub fn fan_expand(n: u32, target: MeasSym) -> Result<LaurentPoly, Error> {
    if n < 3 {
        return Err(Error::InvalidTarget);
    }
    target.check(n)?;
    let poly = match target {
        MeasSym::X(a, b) => {
            if a == 1 || b == a + 1 || (a, b) == (1, n) {
                LaurentPoly::symbol(MeasSym::x(a, b))
            } else {
                let (even, _) = fan_sigma(a as usize, b as usize)?;
                let frac = fan_denominator(a as usize, b as usize, &even);
                LaurentPoly::symbol(MeasSym::x(1, a))
                    .add(&LaurentPoly::symbol(MeasSym::x(1, b)))
                    .sub(&frac)
            }
        }
        MeasSym::S(1, a, b) => {
            if b == a + 1 {
                LaurentPoly::symbol(MeasSym::S(1, a, b))
            } else {
                let (_, odd) = fan_sigma(a as usize, b as usize)?;
                fan_denominator(a as usize, b as usize, &odd)
            }
        }
        MeasSym::S(a, b, c) => {
            // S_abc = S_1ab + S_1bc - S_1ac
            fan_expand(n, MeasSym::S(1, a, b))?
                .add(&fan_expand(n, MeasSym::S(1, b, c))?)
                .sub(&fan_expand(n, MeasSym::S(1, a, c))?)
        }
    };
    Ok(poly)
}

/// Product of `(T_m + eps S_m)` over `m = a..b-1` for the fan, where
/// `S_m = S_{1,m,m+1}` and `T_m = x_{1m} + x_{1,m+1} - x_{m,m+1}`.
fn fan_sigma(a: usize, b: usize) -> Result<(LaurentPoly, LaurentPoly), Error> {
    if !(1 < a && a < b) {
        return Err(Error::IndexRange);
    }
    let mut acc = EpsElem::one();
    for m in a..b {
        let (mu, mv) = (m as u32, m as u32 + 1);
        let t = LaurentPoly::symbol(MeasSym::x(1, mu))
            .add(&LaurentPoly::symbol(MeasSym::x(1, mv)))
            .sub(&LaurentPoly::symbol(MeasSym::x(mu, mv)));
        let s = LaurentPoly::symbol(MeasSym::S(1, mu, mv));
        acc = acc.mul(&EpsElem { re: t, im: s });
    }
    Ok((acc.re, acc.im))
}

/// Divides a fan subset sum by `2^(b-a-1) * prod x_1k` over `a < k < b`.
fn fan_denominator(a: usize, b: usize, sum: &LaurentPoly) -> LaurentPoly {
    let mut out = sum.scale(&Rat::from_int(2).pow(a as i64 + 1 - b as i64).unwrap());
    for k in (a + 1)..b {
        out = out.mul_sym_pow(MeasSym::x(1, k as u32), -1);
    }
    out
}
