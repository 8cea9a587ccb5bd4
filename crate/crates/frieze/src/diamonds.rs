//! Local diamond objects: the 10-tuple carrying both squared distances and
//! signed areas, and the 6-tuple of squared distances tied together by the
//! Cayley-Menger determinant. Propagation, reflection, boundary rules,
//! partial derivatives and the conversions between the two kinds live here.

use crate::exact::{two, Rat};
use crate::geometry::heron_h;
use crate::Error;
use serde::{Deserialize, Serialize};

/// Ten measurements of a quadrilateral arranged on a diamond: `e` left,
/// `f` right, `a` top, `c` bottom, `b`/`d` on the slanted dashed lines and
/// `p,q,r,s` at the side midpoints.
///
/// For the quadrilateral `(A1,A2,A3,A4)` the placement reads
/// `a = x14, b = x12, c = x23, d = x34, e = x13, f = x24` and
/// `p = S123, q = S134, r = S124, s = S234`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HeronianDiamond {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
    pub e: Rat,
    pub f: Rat,
    pub p: Rat,
    pub q: Rat,
    pub r: Rat,
    pub s: Rat,
}

/// Six squared distances of a quadrilateral, same placement as the
/// corresponding fields of [`HeronianDiamond`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CMDiamond {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
    pub e: Rat,
    pub f: Rat,
}

/// Direction names for the six partial derivatives of the Cayley-Menger
/// polynomial, matching the diamond placement of its arguments.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PartialDir {
    /// With respect to `e`.
    Left,
    /// With respect to `f`.
    Right,
    /// With respect to `a`.
    Up,
    /// With respect to `c`.
    Down,
    /// With respect to `b`.
    UpSlant,
    /// With respect to `d`.
    DownSlant,
}

impl HeronianDiamond {
    #[allow(clippy::too_many_arguments)]
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat, e: Rat, f: Rat, p: Rat, q: Rat, r: Rat, s: Rat) -> Self {
        HeronianDiamond { a, b, c, d, e, f, p, q, r, s }
    }

    pub fn restrict(&self) -> CMDiamond {
        CMDiamond {
            a: self.a.clone(),
            b: self.b.clone(),
            c: self.c.clone(),
            d: self.d.clone(),
            e: self.e.clone(),
            f: self.f.clone(),
        }
    }
}

/// Checks all seven defining equations exactly: the four Heron relations,
/// additivity `r + s = p + q`, Bretschneider's formula and the bilinear
/// relation. The redundancy among them is deliberate; inputs are arbitrary.
pub fn is_heronian(t: &HeronianDiamond) -> bool {
    let HeronianDiamond { a, b, c, d, e, f, p, q, r, s } = t;
    if p.sq() != heron_h(b, c, e)
        || q.sq() != heron_h(a, d, e)
        || r.sq() != heron_h(a, f, b)
        || s.sq() != heron_h(c, f, d)
    {
        return false;
    }
    if r + s != p + q {
        return false;
    }
    let g = &(&(a - b) + c) - d;
    if Rat::from_int(4) * &(e * f) != (p + q).sq() + g.sq() {
        return false;
    }
    e * &(r - s) == &(p * &(a - d)) + &(q * &(b - c))
}

/// Completes a diamond to the right: from `(a,b,c,d,e,p,q)` with `e != 0`,
/// the unique `(f,r,s)` making the 10-tuple a diamond.
#[allow(clippy::too_many_arguments)]
pub fn propagate_right(
    a: &Rat,
    b: &Rat,
    c: &Rat,
    d: &Rat,
    e: &Rat,
    p: &Rat,
    q: &Rat,
) -> Result<(Rat, Rat, Rat), Error> {
    if e.is_zero() {
        return Err(Error::ZeroPivot(None));
    }
    if p.sq() != heron_h(b, c, e) || q.sq() != heron_h(a, d, e) {
        return Err(Error::HeronViolation(None));
    }
    let g = &(&(a - b) + c) - d;
    let f = &((p + q).sq() + g.sq()) / &(Rat::from_int(4) * e);
    let e2 = two() * e;
    let r = &(&(p * &(&(e + a) - d)) + &(q * &(&(e - c) + b))) / &e2;
    let s = &(&(p * &(&(e - a) + d)) + &(q * &(&(e + c) - b))) / &e2;
    Ok((f, r, s))
}

/// Completes a diamond to the left: from `(a,b,c,d,f,r,s)` with `f != 0`,
/// the unique `(e,p,q)`. Implemented by reflecting across the vertical axis,
/// propagating right, and reflecting back.
#[allow(clippy::too_many_arguments)]
pub fn propagate_left(
    a: &Rat,
    b: &Rat,
    c: &Rat,
    d: &Rat,
    f: &Rat,
    r: &Rat,
    s: &Rat,
) -> Result<(Rat, Rat, Rat), Error> {
    // vertical reflection swaps b <-> d, e <-> f, p <-> s, q <-> r
    let (e, q, p) = propagate_right(a, d, c, b, f, s, r)?;
    Ok((e, p, q))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axis {
    Horizontal,
    Vertical,
}

/// Reflects a diamond in one of its symmetry axes. Vertical reflection
/// requires `e != 0`.
pub fn reflect(t: &HeronianDiamond, axis: Axis) -> Result<HeronianDiamond, Error> {
    let HeronianDiamond { a, b, c, d, e, f, p, q, r, s } = t.clone();
    match axis {
        Axis::Horizontal => Ok(HeronianDiamond::new(c, d, a, b, e, f, q, p, s, r)),
        Axis::Vertical => {
            if e.is_zero() {
                return Err(Error::ZeroPivot(None));
            }
            Ok(HeronianDiamond::new(a, d, c, b, f, e, s, r, q, p))
        }
    }
}

/// Boundary rule for diamonds with `a = q = r = 0`: `(e,b,p)` determine
/// `(f,d,s) = (b,e,p)`.
pub fn boundary_step_top(e: &Rat, b: &Rat, p: &Rat) -> (Rat, Rat, Rat) {
    (b.clone(), e.clone(), p.clone())
}

/// Boundary rule for diamonds with `c = p = s = 0`: `(d,e,q)` determine
/// `(b,f,r) = (e,d,q)`.
pub fn boundary_step_bottom(d: &Rat, e: &Rat, q: &Rat) -> (Rat, Rat, Rat) {
    (e.clone(), d.clone(), q.clone())
}

/// The Cayley-Menger determinant
/// `det [[0,1,1,1,1],[1,0,b,e,a],[1,b,0,c,f],[1,e,c,0,d],[1,a,f,d,0]]`.
pub fn cm_det(x: &CMDiamond) -> Rat {
    let CMDiamond { a, b, c, d, e, f } = x;
    let one = Rat::one();
    let zero = Rat::zero();
    let m: [[Rat; 5]; 5] = [
        [zero.clone(), one.clone(), one.clone(), one.clone(), one.clone()],
        [one.clone(), zero.clone(), b.clone(), e.clone(), a.clone()],
        [one.clone(), b.clone(), zero.clone(), c.clone(), f.clone()],
        [one.clone(), e.clone(), c.clone(), zero.clone(), d.clone()],
        [one.clone(), a.clone(), f.clone(), d.clone(), zero.clone()],
    ];
    det5(&m)
}

fn det5(m: &[[Rat; 5]; 5]) -> Rat {
    // cofactor expansion along the first row
    let mut acc = Rat::zero();
    for col in 0..5 {
        if m[0][col].is_zero() {
            continue;
        }
        let mut minor = Vec::with_capacity(4);
        for row in 1..5 {
            let mut line = Vec::with_capacity(4);
            for c2 in 0..5 {
                if c2 != col {
                    line.push(m[row][c2].clone());
                }
            }
            minor.push(line);
        }
        let term = &m[0][col] * &det_n(&minor);
        if col % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

fn det_n(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Rat::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rat>> = (1..n)
            .map(|row| {
                (0..n)
                    .filter(|&c2| c2 != col)
                    .map(|c2| m[row][c2].clone())
                    .collect()
            })
            .collect();
        let term = &m[0][col] * &det_n(&minor);
        if col % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// `Q(a,b,c,d,e,f) = (a-d)(c-b) + e(a+b+c+d-e-2f)`; the partial derivative
/// of the Cayley-Menger polynomial with respect to `f` is `2Q`.
pub fn cm_q(a: &Rat, b: &Rat, c: &Rat, d: &Rat, e: &Rat, f: &Rat) -> Rat {
    let sum = &(&(&(a + b) + c) + d) - e;
    &(a - d) * &(c - b) + e * &(&sum - &(two() * f))
}

/// Partial derivative of the Cayley-Menger polynomial in the named
/// direction, evaluated at the diamond. Each direction is `2Q` evaluated at
/// the argument permutation determined by the dihedral symmetry; the
/// permutation tables are validated against derivatives of [`cm_det`] in
/// tests.
pub fn cm_partial(dir: PartialDir, x: &CMDiamond) -> Rat {
    let CMDiamond { a, b, c, d, e, f } = x;
    let q = match dir {
        PartialDir::Right => cm_q(a, b, c, d, e, f),
        PartialDir::Left => cm_q(c, b, a, d, f, e),
        PartialDir::Up => cm_q(f, b, e, d, c, a),
        PartialDir::Down => cm_q(e, b, f, d, a, c),
        PartialDir::UpSlant => cm_q(a, f, c, e, d, b),
        PartialDir::DownSlant => cm_q(a, e, c, f, b, d),
    };
    two() * q
}

/// Restricts a Heronian diamond to its squared-distance 6-tuple, checking
/// the conditions under which the result is a Cayley-Menger diamond:
/// `(e,f) != (0,0)`, or `a = q = r = 0`, or `c = p = s = 0`.
pub fn heronian_to_cm(h: &HeronianDiamond) -> Result<CMDiamond, Error> {
    let ef = !h.e.is_zero() || !h.f.is_zero();
    let top = h.a.is_zero() && h.q.is_zero() && h.r.is_zero();
    let bottom = h.c.is_zero() && h.p.is_zero() && h.s.is_zero();
    if !(ef || top || bottom) {
        return Err(Error::ConditionViolated);
    }
    Ok(h.restrict())
}

/// Lifts a Cayley-Menger diamond to the two Heronian diamonds restricting to
/// it, which differ by a simultaneous sign change of `(p,q,r,s)`.
///
/// The caller supplies the square root `p` with `p^2 = H(b,c,e)`; then
/// `q = -dM/df / (2p)`, `r = dM/dd / (2p)`, `s = dM/da / (2p)`.
pub fn cm_lift(x: &CMDiamond, p: &Rat) -> Result<(HeronianDiamond, HeronianDiamond), Error> {
    if x.e.is_zero() && x.f.is_zero() {
        return Err(Error::ConditionViolated);
    }
    let h_bce = heron_h(&x.b, &x.c, &x.e);
    let prod = &(&h_bce * &heron_h(&x.a, &x.d, &x.e)) * &(&heron_h(&x.a, &x.f, &x.b) * &heron_h(&x.c, &x.f, &x.d));
    if prod.is_zero() {
        return Err(Error::NonGenericH(None));
    }
    if p.sq() != h_bce {
        return Err(Error::HeronViolation(None));
    }
    let p2 = two() * p;
    let q = (-cm_partial(PartialDir::Right, x)).checked_div(&p2)?;
    let r = cm_partial(PartialDir::DownSlant, x).checked_div(&p2)?;
    let s = cm_partial(PartialDir::Up, x).checked_div(&p2)?;
    let plus = HeronianDiamond::new(
        x.a.clone(), x.b.clone(), x.c.clone(), x.d.clone(), x.e.clone(), x.f.clone(),
        p.clone(), q.clone(), r.clone(), s.clone(),
    );
    let minus = HeronianDiamond::new(
        x.a.clone(), x.b.clone(), x.c.clone(), x.d.clone(), x.e.clone(), x.f.clone(),
        -p.clone(), -q, -r, -s,
    );
    Ok((plus, minus))
}

/// [`cm_lift`] with the square root computed by [`crate::rat_sqrt`];
/// errors when `H(b,c,e)` is not a perfect rational square.
pub fn cm_lift_sqrt(x: &CMDiamond) -> Result<(HeronianDiamond, HeronianDiamond), Error> {
    let h = heron_h(&x.b, &x.c, &x.e);
    if h.is_negative() {
        return Err(Error::NotPerfectSquare);
    }
    let p = crate::exact::rat_sqrt(&h)?.ok_or(Error::NotPerfectSquare)?;
    cm_lift(x, &p)
}
