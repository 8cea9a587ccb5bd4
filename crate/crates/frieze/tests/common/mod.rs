//! Shared helpers for the integration and acceptance suites: seeded random
//! rational polygons, exhaustive triangulation enumeration, and fixtures.

#![allow(dead_code)]

use frieze::diamonds::cm_det;
use frieze::frieze::{
    cmfrieze_from_polygon, coherence_solve, verify_coherence, CMFrieze, SolveDir, Window,
};
use frieze::{NodeIdx, Point, Polygon, Rat, TriCycle};
use rand::rngs::StdRng;
use rand::Rng;

pub fn rat(s: &str) -> Rat {
    s.parse().unwrap()
}

/// A random rational with numerator and denominator bounded by `max`.
pub fn random_rat(rng: &mut StdRng, max: i64) -> Rat {
    let num = rng.random_range(-max..=max);
    let den = rng.random_range(1..=max);
    Rat::from_frac(num, den).unwrap()
}

/// A random rational polygon with `n` vertices and coordinate numerators
/// and denominators bounded by `max`.
pub fn random_polygon(rng: &mut StdRng, n: u32, max: i64) -> Polygon {
    let vertices = (0..n)
        .map(|_| Point::new(random_rat(rng, max), random_rat(rng, max)))
        .collect();
    Polygon::new(vertices).unwrap()
}

/// A random polygon whose pairwise squared distances are all nonzero.
pub fn random_generic_polygon(rng: &mut StdRng, n: u32, max: i64) -> Polygon {
    loop {
        let p = random_polygon(rng, n, max);
        let m = frieze::geometry::measure_all(&p);
        if m.x_entries().all(|(_, v)| !v.is_zero()) {
            return p;
        }
    }
}

/// All triangulations of the n-cycle, by recursive splitting along the
/// closing edge; there are Catalan(n - 2) of them.
pub fn all_triangulations(n: u32) -> Vec<TriCycle> {
    fn go(verts: &[u32]) -> Vec<Vec<(u32, u32, u32)>> {
        let m = verts.len();
        if m == 2 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for k in 1..(m - 1) {
            for left in go(&verts[..=k]) {
                for right in go(&verts[k..]) {
                    let mut t = vec![(verts[0], verts[k], verts[m - 1])];
                    t.extend(left.iter().copied());
                    t.extend(right.iter().copied());
                    out.push(t);
                }
            }
        }
        out
    }
    let verts: Vec<u32> = (1..=n).collect();
    go(&verts)
        .into_iter()
        .map(|triangles| {
            let mut diagonals = Vec::new();
            for (a, b, c) in triangles {
                for (u, v) in [(a, b), (b, c), (a, c)] {
                    let d = v - u;
                    let is_side = d == 1 || d == n - 1;
                    if !is_side && !diagonals.contains(&(u, v)) {
                        diagonals.push((u, v));
                    }
                }
            }
            TriCycle::new(n, diagonals).expect("enumerated triangulation is valid")
        })
        .collect()
}

/// A rational hexagon with all sides of squared length 1: the zonogon on
/// three rational unit vectors `u, v, w`, with vertices
/// `0, u, u+v, u+v+w, v+w, w`. Generic enough for the coherence machinery.
pub fn unit_side_hexagon() -> Polygon {
    let u = Point::new(rat("1"), rat("0"));
    let v = Point::new(rat("3/5"), rat("4/5"));
    let w = Point::new(rat("-5/13"), rat("12/13"));
    let add = |a: &Point, b: &Point| Point::new(&a.u + &b.u, &a.v + &b.v);
    let p0 = Point::new(rat("0"), rat("0"));
    let p1 = u.clone();
    let p2 = add(&p1, &v);
    let p3 = add(&p2, &w);
    let p4 = add(&v, &w);
    let p5 = w.clone();
    Polygon::new(vec![p0, p1, p2, p3, p4, p5]).unwrap()
}

/// A non-coherent order-6 Cayley-Menger frieze: every diamond satisfies the
/// determinant equation, the lines are all 1, and the coherence condition
/// fails at exactly one center.
pub fn noncoherent_frieze() -> (CMFrieze, (i64, i64)) {
    let window = Window::new(0, 8).unwrap();
    let z = cmfrieze_from_polygon(&unit_side_hexagon(), window).unwrap();
    assert!(verify_coherence(&z).is_empty());
    let flip_center = (1i64, 4i64);
    let flip_corner = (2i64, 5i64);

    // the other root of the diamond at (1,4) in its f slot
    let d = z.diamond_at(1, 4).unwrap();
    let m_at = |t: &Rat| {
        let mut dd = d.clone();
        dd.f = t.clone();
        cm_det(&dd)
    };
    let m0 = m_at(&Rat::zero());
    let m1 = m_at(&Rat::one());
    let mm1 = m_at(&rat("-1"));
    let half = rat("1/2");
    let beta = &(&m1 - &mm1) * &half;
    let alpha = &(&(&m1 + &mm1) * &half) - &m0;
    assert!(!alpha.is_zero());
    let f_flip = &(-&beta).checked_div(&alpha).unwrap() - &d.f;
    assert!(!f_flip.is_zero() && f_flip != d.f);

    // keep everything up to column 1 plus the boundary rows; refill the
    // interior to the right by coherence solves, seeding the flipped corner
    let mut work = z.clone();
    let n = 6i64;
    for i in 2..=window.hi {
        for off in 2..=(n - 2) {
            work.remove_node_for_tests(NodeIdx::int(i, i + off));
        }
    }
    work.insert_node_for_tests(NodeIdx::int(flip_corner.0, flip_corner.1), f_flip);
    loop {
        let mut progress = false;
        for i in 1..window.hi {
            for off in 2..=(n - 2) {
                let j = i + off;
                if work.at(i + 1, j + 1).is_some() {
                    continue;
                }
                let (Some(x1), Some(x2), Some(x3)) = (
                    work.diamond_at(i - 1, j - 1),
                    work.diamond_at(i - 1, j),
                    work.diamond_at(i, j - 1),
                ) else {
                    continue;
                };
                let value = coherence_solve(&x1, &x2, &x3, SolveDir::Right).unwrap();
                work.insert_node_for_tests(NodeIdx::int(i + 1, j + 1), value);
                progress = true;
            }
        }
        if !progress {
            break;
        }
    }
    (work, flip_center)
}


