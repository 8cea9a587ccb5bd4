//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its timing. All comparisons are exact; runtime budgets are asserted.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use common::{all_triangulations, noncoherent_frieze, random_generic_polygon, random_polygon, rat};
use frieze::diamonds::{cm_det, cm_partial, cm_lift, CMDiamond, PartialDir};
use frieze::frieze::{
    cmfrieze_from_measurements, cmfrieze_from_polygon, extend, frieze_from_polygon, propagate_cm,
    propagate_heronian, restrict, verify_cm, verify_coherence, verify_heronian, CMFrieze, CMPath,
    HTraversingPath, Window,
};
use frieze::geometry::{heron_h, measure_all, measure_triangulated};
use frieze::laurent::{expand, fan_expand, MeasSym};
use frieze::{Error, MeasurementSet, NodeIdx, Rat, TriCycle};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::SeedableRng;
use std::time::{Duration, Instant};

fn assert_budget(name: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    assert!(
        elapsed < budget,
        "{name} exceeded its budget: {elapsed:?} >= {budget:?}"
    );
    println!("PASS {name} ({elapsed:?})");
}

/// Reads traversing-path values off a Heronian frieze.
fn heronian_path_values(z: &frieze::HeronianFrieze, path: &HTraversingPath) -> Vec<Rat> {
    let mut values: Vec<Rat> = path
        .nodes()
        .iter()
        .map(|idx| z.node(*idx).expect("path node stored").clone())
        .collect();
    values.extend(path.lines().iter().map(|l| z.line(*l).expect("line stored").clone()));
    values
}

/// Reads thickened-path values off a Cayley-Menger frieze.
fn cm_path_values(z: &CMFrieze, path: &CMPath) -> Vec<Rat> {
    let mut values: Vec<Rat> = path
        .nodes()
        .iter()
        .map(|idx| z.at(idx.i2 / 2, idx.j2 / 2).expect("path node stored").clone())
        .collect();
    values.extend(
        path.shifted_nodes()
            .iter()
            .map(|idx| z.at(idx.i2 / 2, idx.j2 / 2).expect("shifted node stored").clone()),
    );
    values.extend(path.lines().iter().map(|l| z.line(*l).expect("line stored").clone()));
    values
}

fn is_power_of_five(d: &BigInt) -> bool {
    let five = BigInt::from(5);
    let mut d = d.clone();
    while (&d % &five) == BigInt::from(0) {
        d /= &five;
    }
    d == BigInt::from(1)
}

/// Criterion 1: the order-6 equilateral frieze propagated from its rim data
/// completes, has denominators that are powers of 5, and is glide symmetric.
#[test]
fn criterion_1_order6_frieze_reproduction() {
    let start = Instant::now();
    let path = HTraversingPath::staircase(6, 0).unwrap();
    let rim: Vec<Rat> = ["1", "2", "2", "-2", "5", "2", "2", "2", "1"]
        .iter()
        .map(|s| rat(s))
        .collect();
    // an equilateral frieze: every line carries the lateral parameter 1
    let values = path.equilateral_values(&rim, &Rat::one());
    // at least 2n columns
    let window = Window::new(-6, 12).unwrap();
    let z = propagate_heronian(&path, &values, window).unwrap();
    assert!(verify_heronian(&z).is_empty(), "propagated frieze must verify");
    for (idx, v) in z.nodes() {
        assert!(
            is_power_of_five(v.denom()),
            "entry {idx} = {v} has a denominator that is not a power of 5"
        );
    }
    assert!(z.check_glide().unwrap(), "glide symmetry must hold exactly");
    assert!(z.check_period().unwrap());
    // the frieze comes from a hexagon, and that hexagon re-derives it
    let hexagon = frieze::frieze::polygon_from_frieze(&z).unwrap();
    let rebuilt = frieze_from_polygon(&hexagon, window).unwrap();
    assert_eq!(rebuilt, z, "recovered hexagon reproduces the frieze");
    assert_budget("criterion 1: order-6 frieze reproduction", start, Duration::from_secs(1));
}

/// The squared distances of the nonconvex hexagon whose sides and whose
/// chords from the first vertex all have unit length: the other vertices
/// sit at consecutive sixty-degree positions on a unit circle around it.
fn unit_spoke_hexagon_measurements() -> MeasurementSet {
    let mut m = MeasurementSet::new(6);
    for i in 1..=6u32 {
        for j in (i + 1)..=6 {
            let v = if i == 1 {
                1 // sides 1-2, 1-6 and chords 1-3, 1-4, 1-5
            } else {
                // chord over (j - i) steps of sixty degrees
                match j - i {
                    1 => 1,
                    2 => 3,
                    3 => 4,
                    _ => 3,
                }
            };
            m.insert_x(i, j, Rat::from_int(v));
        }
    }
    m
}

/// Criterion 2: the Cayley-Menger frieze of the hexagon with unit sides and
/// unit spokes has the expected leftmost entries and is coherent.
#[test]
fn criterion_2_unit_spoke_hexagon_cm_frieze() {
    let start = Instant::now();
    let m = unit_spoke_hexagon_measurements();
    let z = cmfrieze_from_measurements(&m, Window::new(0, 13).unwrap()).unwrap();
    // leftmost entries in each row, bottom to top
    let expected = [
        ((4i64, 4i64), "0"),
        ((3, 4), "1"),
        ((3, 5), "3"),
        ((2, 5), "4"),
        ((2, 6), "3"),
        ((1, 6), "1"),
        ((1, 7), "0"),
    ];
    for ((i, j), want) in expected {
        assert_eq!(z.at(i, j).unwrap(), &rat(want), "entry ({i},{j})");
    }
    for (_, v) in z.lines() {
        assert_eq!(v, &Rat::one(), "all line entries are 1");
    }
    assert!(verify_cm(&z).is_empty());
    assert!(verify_coherence(&z).is_empty(), "the geometric frieze is coherent");
    assert_budget("criterion 2: unit-spoke hexagon CM frieze", start, Duration::from_secs(1));
}

fn corpus(seed: u64, count: usize) -> Vec<frieze::Polygon> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let n = 4 + (k as u32) % 9; // n in 4..=12
            random_polygon(&mut rng, n, 100)
        })
        .collect()
}

/// Criterion 3: every random rational polygon yields a valid Heronian
/// frieze with glide symmetry and periodicity, and a coherent CM frieze.
#[test]
fn criterion_3_geometric_frieze_properties() {
    let start = Instant::now();
    let polygons = corpus(101, 200);
    for p in &polygons {
        let window = Window::default_for(p.n());
        let z = frieze_from_polygon(p, window).unwrap();
        assert!(verify_heronian(&z).is_empty());
        assert!(z.check_glide().unwrap());
        assert!(z.check_period().unwrap());
        let cm = cmfrieze_from_polygon(p, window).unwrap();
        assert!(verify_cm(&cm).is_empty());
        assert!(verify_coherence(&cm).is_empty());
    }
    assert_budget(
        "criterion 3: 200 random geometric friezes verify, glide and period",
        start,
        Duration::from_secs(60),
    );
}

/// Criterion 4: propagation from path data reproduces geometric friezes
/// exactly, and extend-after-restrict recovers the Heronian frieze up to
/// one global sign of the signed areas.
#[test]
fn criterion_4_propagation_round_trips() {
    let start = Instant::now();
    let polygons = corpus(202, 200);
    let mut heronian_done = 0;
    let mut cm_done = 0;
    let mut extend_done = 0;
    for p in &polygons {
        let n = p.n();
        let window = Window::default_for(n);
        let z = frieze_from_polygon(p, window).unwrap();
        let sides_nonzero = z
            .nodes()
            .filter(|(idx, _)| idx.is_integer() && idx.row2() == 2)
            .all(|(_, v)| !v.is_zero());
        if !(z.nonzero_interior() && sides_nonzero) {
            continue;
        }
        // alternate between the two path shapes across the corpus
        let path = if heronian_done % 2 == 0 {
            HTraversingPath::column(n, 0).unwrap()
        } else {
            HTraversingPath::staircase(n, n as i64 - 2).unwrap()
        };
        let values = heronian_path_values(&z, &path);
        let back = propagate_heronian(&path, &values, window).unwrap();
        assert_eq!(back, z, "heronian propagation round trip");
        heronian_done += 1;

        let cm = cmfrieze_from_polygon(p, window).unwrap();
        if !cm.nonzero_heron_quantities() {
            continue;
        }
        let cm_path = CMPath::column(n, 0).unwrap();
        let cm_values = cm_path_values(&cm, &cm_path);
        let cm_back = propagate_cm(&cm_path, &cm_values, window).unwrap();
        assert_eq!(cm_back, cm, "coherent propagation round trip");
        cm_done += 1;

        let restricted = restrict(&z).unwrap();
        assert_eq!(restricted, cm, "restriction agrees with the direct construction");
        let lifted = extend(&restricted, None).unwrap();
        // equality up to one global sign change of the half-integer entries
        let mut sign: Option<bool> = None; // Some(true) = flipped
        for (idx, v) in z.nodes() {
            let w = lifted.node(*idx).expect("lift covers the window");
            if idx.is_integer() {
                assert_eq!(w, v, "integer entries agree at {idx}");
            } else if v.is_zero() {
                assert!(w.is_zero());
            } else {
                let flipped = *w == -v;
                assert!(flipped || w == v, "half entry at {idx} differs beyond sign");
                match sign {
                    None => sign = Some(flipped),
                    Some(s) => assert_eq!(s, flipped, "sign flip must be global at {idx}"),
                }
            }
        }
        extend_done += 1;
    }
    assert!(heronian_done >= 150, "corpus too degenerate: {heronian_done}");
    assert!(cm_done >= 150, "{cm_done}");
    assert!(extend_done >= 150, "{extend_done}");
    assert_budget(
        "criterion 4: propagation and extend/restrict round trips",
        start,
        Duration::from_secs(120),
    );
}

fn pairs_cross(d1: (u32, u32), d2: (u32, u32)) -> bool {
    let (i, j) = if d1.0 < d1.1 { d1 } else { (d1.1, d1.0) };
    let (k, l) = if d2.0 < d2.1 { d2 } else { (d2.1, d2.0) };
    (i < k && k < j && j < l) || (k < i && i < l && l < j)
}

fn crossing_diagonals(g: &TriCycle, target: MeasSym) -> Vec<(u32, u32)> {
    g.diagonals()
        .filter(|&d| match target {
            MeasSym::X(i, j) => pairs_cross(d, (i, j)),
            MeasSym::S(i, j, k) => {
                pairs_cross(d, (i, j)) || pairs_cross(d, (i, k)) || pairs_cross(d, (j, k))
            }
        })
        .collect()
}

/// Criterion 5: for every triangulation with n <= 7 and every target, the
/// Laurent expansion evaluates to the measured value on 20 random generic
/// polygons and its denominator is supported on crossing diagonals only;
/// the closed fan formulas agree with the general expansion up to n = 8.
#[test]
fn criterion_5_laurent_certification() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(303);
    for n in 4..=7u32 {
        let polygons: Vec<_> = (0..20).map(|_| random_generic_polygon(&mut rng, n, 60)).collect();
        let measured: Vec<_> = polygons.iter().map(measure_all).collect();
        let mut targets = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                targets.push(MeasSym::X(i, j));
                for k in (j + 1)..=n {
                    targets.push(MeasSym::S(i, j, k));
                }
            }
        }
        for g in all_triangulations(n) {
            let tri_measured: Vec<_> = polygons
                .iter()
                .map(|p| measure_triangulated(p, &g).unwrap())
                .collect();
            for &target in &targets {
                let poly = expand(&g, target).unwrap();
                // denominator certification
                let crossing = crossing_diagonals(&g, target);
                for (sym, exp) in poly.denominator_monomial() {
                    if matches!(target, MeasSym::X(..)) {
                        // the direct trimmed route yields square-free products
                        assert_eq!(exp, 1, "x-target denominators are square-free");
                    }
                    match sym {
                        MeasSym::X(i, j) => assert!(
                            crossing.contains(&(i, j)),
                            "denominator {sym} does not cross {target} in {:?}",
                            g.diagonals().collect::<Vec<_>>()
                        ),
                        MeasSym::S(..) => {
                            panic!("signed area {sym} in a denominator")
                        }
                    }
                }
                // soundness on 20 generic polygons
                for (m, all) in tri_measured.iter().zip(&measured) {
                    let got = poly.evaluate(m).unwrap();
                    let want = match target {
                        MeasSym::X(i, j) => all.x(i, j).unwrap(),
                        MeasSym::S(i, j, k) => all.s(i, j, k).unwrap(),
                    };
                    assert_eq!(got, want, "target {target}");
                }
            }
        }
    }
    // fan agreement through n = 8, structurally
    for n in 4..=8u32 {
        let g = TriCycle::fan(n);
        for i in 1..=n {
            for j in (i + 1)..=n {
                assert_eq!(
                    expand(&g, MeasSym::X(i, j)).unwrap(),
                    fan_expand(n, MeasSym::X(i, j)).unwrap(),
                    "fan x {i}-{j} order {n}"
                );
                for k in (j + 1)..=n {
                    assert_eq!(
                        expand(&g, MeasSym::S(i, j, k)).unwrap(),
                        fan_expand(n, MeasSym::S(i, j, k)).unwrap(),
                        "fan s {i}-{j}-{k} order {n}"
                    );
                }
            }
        }
    }
    assert_budget("criterion 5: Laurent certification", start, Duration::from_secs(300));
}

/// Criterion 6: the determinant-derivative identities, the discriminant
/// factorizations, the six signed-area product formulas, and the coherence
/// product identity, all exactly.
#[test]
fn criterion_6_identity_suite() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(404);

    // (dM/df)^2 = -8 e M + 4 H(b,c,e) H(a,d,e) at 1000 random 6-tuples
    for _ in 0..1000 {
        let x = CMDiamond {
            a: common::random_rat(&mut rng, 50),
            b: common::random_rat(&mut rng, 50),
            c: common::random_rat(&mut rng, 50),
            d: common::random_rat(&mut rng, 50),
            e: common::random_rat(&mut rng, 50),
            f: common::random_rat(&mut rng, 50),
        };
        let lhs = cm_partial(PartialDir::Right, &x).sq();
        let rhs = &(&rat("-8") * &(&x.e * &cm_det(&x)))
            + &(&rat("4") * &(&heron_h(&x.b, &x.c, &x.e) * &heron_h(&x.a, &x.d, &x.e)));
        assert_eq!(lhs, rhs);
    }

    // on 1000 random quadrilaterals: the four squared-partial formulas and
    // the six product formulas in the signed areas
    for _ in 0..1000 {
        let p = random_polygon(&mut rng, 4, 50);
        let m = measure_all(&p);
        let x = CMDiamond {
            a: m.x(1, 4).unwrap(),
            b: m.x(1, 2).unwrap(),
            c: m.x(2, 3).unwrap(),
            d: m.x(3, 4).unwrap(),
            e: m.x(1, 3).unwrap(),
            f: m.x(2, 4).unwrap(),
        };
        assert_eq!(cm_det(&x), Rat::zero(), "coplanar points satisfy the equation");
        let four = rat("4");
        let h = |p: &Rat, q: &Rat, r: &Rat| heron_h(p, q, r);
        assert_eq!(
            cm_partial(PartialDir::Right, &x).sq(),
            &four * &(&h(&x.b, &x.c, &x.e) * &h(&x.a, &x.d, &x.e))
        );
        assert_eq!(
            cm_partial(PartialDir::Up, &x).sq(),
            &four * &(&h(&x.b, &x.c, &x.e) * &h(&x.c, &x.d, &x.f))
        );
        assert_eq!(
            cm_partial(PartialDir::Down, &x).sq(),
            &four * &(&h(&x.a, &x.b, &x.f) * &h(&x.a, &x.d, &x.e))
        );
        assert_eq!(
            cm_partial(PartialDir::Left, &x).sq(),
            &four * &(&h(&x.a, &x.b, &x.f) * &h(&x.c, &x.d, &x.f))
        );
        let s = |i, j, k| m.s(i, j, k).unwrap();
        let m2 = rat("-2");
        let p2 = rat("2");
        assert_eq!(cm_partial(PartialDir::Left, &x), &m2 * &(&s(1, 2, 4) * &s(2, 3, 4)));
        assert_eq!(cm_partial(PartialDir::Right, &x), &m2 * &(&s(1, 2, 3) * &s(1, 3, 4)));
        assert_eq!(cm_partial(PartialDir::UpSlant, &x), &p2 * &(&s(1, 3, 4) * &s(2, 3, 4)));
        assert_eq!(cm_partial(PartialDir::DownSlant, &x), &p2 * &(&s(1, 2, 3) * &s(1, 2, 4)));
        assert_eq!(cm_partial(PartialDir::Up, &x), &p2 * &(&s(1, 2, 3) * &s(2, 3, 4)));
        assert_eq!(cm_partial(PartialDir::Down, &x), &p2 * &(&s(1, 2, 4) * &s(1, 3, 4)));
    }

    // coherence product identity on 200 random 3x3 Heronian windows: both
    // sides equal four times the product of the entries adjacent to the
    // central node
    let mut windows = 0;
    while windows < 200 {
        let p = random_polygon(&mut rng, 6, 50);
        let z = frieze_from_polygon(&p, Window::new(0, 4).unwrap()).unwrap();
        for (i, j) in [(1i64, 3i64), (1, 4), (1, 5)] {
            let (Some(x1), Some(x2), Some(x3), Some(x4)) = (
                z.diamond_at(i - 1, j - 1),
                z.diamond_at(i - 1, j),
                z.diamond_at(i, j - 1),
                z.diamond_at(i, j),
            ) else {
                continue;
            };
            let ok = |d: &frieze::diamonds::HeronianDiamond| {
                !d.e.is_zero()
                    || !d.f.is_zero()
                    || (d.a.is_zero() && d.q.is_zero() && d.r.is_zero())
                    || (d.c.is_zero() && d.p.is_zero() && d.s.is_zero())
            };
            if !(ok(&x1) && ok(&x2) && ok(&x3) && ok(&x4)) {
                continue;
            }
            let lhs = &cm_partial(PartialDir::Left, &x1.restrict())
                * &cm_partial(PartialDir::Right, &x4.restrict());
            let rhs = &cm_partial(PartialDir::Up, &x2.restrict())
                * &cm_partial(PartialDir::Down, &x3.restrict());
            assert_eq!(lhs, rhs, "coherence holds on geometric windows");
            let adjacent = &(&x1.r * &x1.s) * &(&x4.p * &x4.q);
            assert_eq!(lhs, &rat("4") * &adjacent, "product of the adjacent entries");
            windows += 1;
        }
    }
    assert_budget("criterion 6: identity suite", start, Duration::from_secs(60));
}

/// Criterion 7: negative controls.
#[test]
fn criterion_7_negative_controls() {
    let start = Instant::now();

    // a non-coherent frieze with exactly one violated center
    let (bad, center) = noncoherent_frieze();
    assert!(verify_cm(&bad).is_empty(), "all diamonds still satisfy the determinant");
    assert_eq!(verify_coherence(&bad), vec![center], "exactly one violation");
    assert_eq!(extend(&bad, None), Err(Error::IncoherentInput));

    // perturbing one interior entry breaks verification nearby
    let square = frieze::Polygon::new(vec![
        frieze::Point::from_ints(0, 0),
        frieze::Point::from_ints(1, 0),
        frieze::Point::from_ints(1, 1),
        frieze::Point::from_ints(0, 1),
    ])
    .unwrap();
    let mut z = frieze_from_polygon(&square, Window::new(0, 4).unwrap()).unwrap();
    let idx = NodeIdx::int(1, 3);
    let bumped = z.node(idx).unwrap() + &Rat::one();
    z.insert_node_for_tests(idx, bumped);
    assert!(!verify_heronian(&z).is_empty(), "perturbed friezes are rejected");

    // zero integer path value
    let path = HTraversingPath::column(4, 0).unwrap();
    let values: Vec<Rat> = ["1", "2", "0", "2", "1", "1", "1"].iter().map(|s| rat(s)).collect();
    assert!(matches!(
        propagate_heronian(&path, &values, Window::new(0, 4).unwrap()),
        Err(Error::ZeroPivot(_))
    ));

    // zero diagonal in polygon recovery
    let g = TriCycle::new(4, vec![(1, 3)]).unwrap();
    let degenerate = frieze::Polygon::new(vec![
        frieze::Point::from_ints(0, 0),
        frieze::Point::from_ints(0, 0),
        frieze::Point::from_ints(0, 0),
        frieze::Point::from_ints(0, 1),
    ])
    .unwrap();
    let dm = measure_triangulated(&degenerate, &g).unwrap();
    assert_eq!(
        frieze::geometry::polygon_from_measurements(&g, &dm),
        Err(Error::ZeroPivot(None))
    );

    // vanishing Heron quantity gates the lift
    let flat = CMDiamond {
        a: rat("1"),
        b: rat("1"),
        c: rat("1"),
        d: rat("4"),
        e: rat("0"),
        f: rat("1"),
    };
    assert_eq!(cm_lift(&flat, &Rat::one()), Err(Error::NonGenericH(None)));

    // the criterion-2 frieze fails the Heron nonvanishing condition, so
    // coherent propagation from its path data is gated
    let m = unit_spoke_hexagon_measurements();
    let window = Window::new(0, 13).unwrap();
    let z2 = cmfrieze_from_measurements(&m, window).unwrap();
    assert!(!z2.nonzero_heron_quantities());
    let cm_path = CMPath::column(6, 0).unwrap();
    let cm_values = cm_path_values(&z2, &cm_path);
    match propagate_cm(&cm_path, &cm_values, window) {
        Err(Error::NonGenericH(_)) => {}
        other => panic!("expected NonGenericH, got {other:?}"),
    }
    assert_budget("criterion 7: negative controls", start, Duration::from_secs(30));
}
