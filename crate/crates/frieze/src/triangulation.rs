//! Combinatorics of triangulated n-cycles: crossing, trimming, diagonal
//! flips, thinness, and the spanning-tree edge order used by the Laurent
//! expansion formulas.

use crate::Error;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

pub type Pair = (u32, u32);

fn norm_pair(i: u32, j: u32) -> Pair {
    if i < j { (i, j) } else { (j, i) }
}

/// True when `i` and `j` are adjacent on the n-cycle (or equal).
fn cycle_adjacent(i: u32, j: u32, n: u32) -> bool {
    let d = i.abs_diff(j);
    d == 0 || d == 1 || d == n - 1
}

/// Whether the diagonals `{i,j}` and `{k,l}` of the n-cycle cross.
pub fn crosses(d1: Pair, d2: Pair, n: u32) -> Result<bool, Error> {
    for &(a, b) in &[d1, d2] {
        if a == 0 || b == 0 || a > n || b > n || cycle_adjacent(a, b, n) {
            return Err(Error::NotADiagonal);
        }
    }
    let (i, j) = norm_pair(d1.0, d1.1);
    let (k, l) = norm_pair(d2.0, d2.1);
    Ok((i < k && k < j && j < l) || (k < i && i < l && l < j))
}

/// Crossing test without the diagonal precondition: pairs sharing a vertex
/// or lying on the cycle boundary simply do not cross.
pub(crate) fn crosses_loose(d1: Pair, d2: Pair) -> bool {
    let (i, j) = norm_pair(d1.0, d1.1);
    let (k, l) = norm_pair(d2.0, d2.1);
    (i < k && k < j && j < l) || (k < i && i < l && l < j)
}

/// Relabeling map between an original cycle and a trimmed or rotated one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabel {
    /// `old_of_new[v-1]` is the original label of new vertex `v`.
    old_of_new: Vec<u32>,
    new_of_old: BTreeMap<u32, u32>,
}

impl Relabel {
    fn from_kept(kept: &BTreeSet<u32>) -> Self {
        let old_of_new: Vec<u32> = kept.iter().copied().collect();
        let new_of_old = old_of_new
            .iter()
            .enumerate()
            .map(|(idx, &old)| (old, idx as u32 + 1))
            .collect();
        Relabel { old_of_new, new_of_old }
    }

    fn identity(n: u32) -> Self {
        Relabel::from_kept(&(1..=n).collect())
    }

    pub fn old(&self, new: u32) -> u32 {
        self.old_of_new[(new - 1) as usize]
    }

    pub fn to_new(&self, old: u32) -> Option<u32> {
        self.new_of_old.get(&old).copied()
    }

    pub fn new_n(&self) -> u32 {
        self.old_of_new.len() as u32
    }
}

/// A triangulated n-cycle: the distinguished cycle on vertices `1..=n`
/// together with `n-3` pairwise non-crossing diagonals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriCycle {
    n: u32,
    diagonals: BTreeSet<Pair>,
}

impl TriCycle {
    pub fn new(n: u32, diagonals: Vec<Pair>) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::MalformedInput("cycle order must be at least 3".into()));
        }
        let set: BTreeSet<Pair> = diagonals.iter().map(|&(i, j)| norm_pair(i, j)).collect();
        if set.len() != diagonals.len() || set.len() != (n as usize).saturating_sub(3) {
            return Err(Error::MalformedInput(format!(
                "a triangulated {n}-cycle needs {} distinct diagonals",
                n - 3
            )));
        }
        for &(i, j) in &set {
            if i == 0 || j > n || cycle_adjacent(i, j, n) {
                return Err(Error::NotADiagonal);
            }
        }
        let ds: Vec<Pair> = set.iter().copied().collect();
        for a in 0..ds.len() {
            for b in (a + 1)..ds.len() {
                if crosses_loose(ds[a], ds[b]) {
                    return Err(Error::MalformedInput(format!(
                        "diagonals {:?} and {:?} cross",
                        ds[a], ds[b]
                    )));
                }
            }
        }
        Ok(TriCycle { n, diagonals: set })
    }

    /// The fan triangulation with all diagonals incident to vertex 1.
    pub fn fan(n: u32) -> Self {
        TriCycle::new(n, (3..n).map(|k| (1, k)).collect()).expect("fan is valid")
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn diagonals(&self) -> impl Iterator<Item = Pair> + '_ {
        self.diagonals.iter().copied()
    }

    pub fn has_diagonal(&self, i: u32, j: u32) -> bool {
        self.diagonals.contains(&norm_pair(i, j))
    }

    pub fn is_side(&self, i: u32, j: u32) -> bool {
        i != j && i >= 1 && j >= 1 && i <= self.n && j <= self.n && cycle_adjacent(i, j, self.n)
    }

    pub fn is_edge(&self, i: u32, j: u32) -> bool {
        self.is_side(i, j) || self.has_diagonal(i, j)
    }

    /// Sides followed by diagonals.
    pub fn edges(&self) -> Vec<Pair> {
        let mut out: Vec<Pair> = (1..self.n).map(|i| (i, i + 1)).collect();
        out.push((1, self.n));
        out.extend(self.diagonals.iter().copied());
        out
    }

    /// The `n-2` triangles, as sorted triples. In a triangulated cycle these
    /// are exactly the vertex triples whose three pairs are all edges.
    pub fn triangles(&self) -> Vec<(u32, u32, u32)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in (i + 1)..=self.n {
                if !self.is_edge(i, j) {
                    continue;
                }
                for k in (j + 1)..=self.n {
                    if self.is_edge(i, k) && self.is_edge(j, k) {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    pub fn is_triangle(&self, i: u32, j: u32, k: u32) -> bool {
        self.is_edge(i, j) && self.is_edge(j, k) && self.is_edge(i, k)
    }

    fn diagonal_check(&self, d: Pair) -> Result<Pair, Error> {
        let (i, j) = norm_pair(d.0, d.1);
        if i == 0 || j > self.n || cycle_adjacent(i, j, self.n) {
            return Err(Error::NotADiagonal);
        }
        Ok((i, j))
    }

    fn induced_on(&self, kept: BTreeSet<u32>) -> Result<(TriCycle, Relabel), Error> {
        let relabel = Relabel::from_kept(&kept);
        let m = relabel.new_n();
        let mut diagonals = Vec::new();
        for &(i, j) in &self.diagonals {
            let (Some(ni), Some(nj)) = (relabel.to_new(i), relabel.to_new(j)) else {
                continue;
            };
            if !cycle_adjacent(ni, nj, m) {
                diagonals.push(norm_pair(ni, nj));
            }
        }
        let sub = TriCycle::new(m, diagonals)
            .map_err(|_| Error::Internal("trimming did not produce a triangulated cycle"))?;
        Ok((sub, relabel))
    }

    /// Trimming with respect to a diagonal `d` not in the triangulation:
    /// the induced triangulated cycle on the endpoints of `d` and of all
    /// diagonals crossing `d`.
    pub fn trim_diag(&self, d: Pair) -> Result<(TriCycle, Relabel), Error> {
        let d = self.diagonal_check(d)?;
        if self.diagonals.contains(&d) {
            return Err(Error::InTriangulation);
        }
        let mut kept: BTreeSet<u32> = [d.0, d.1].into();
        for &diag in &self.diagonals {
            if crosses_loose(diag, d) {
                kept.insert(diag.0);
                kept.insert(diag.1);
            }
        }
        self.induced_on(kept)
    }

    pub fn is_trimmed_diag(&self, d: Pair) -> Result<bool, Error> {
        Ok(self.trim_diag(d)?.0.n == self.n)
    }

    /// Trimming with respect to a vertex triple: keep the triple and the
    /// endpoints of every diagonal crossing at least one of its three sides.
    pub fn trim_tri(&self, t: (u32, u32, u32)) -> Result<(TriCycle, Relabel), Error> {
        let (i, j, k) = t;
        if i == j || j == k || i == k || [i, j, k].iter().any(|&v| v == 0 || v > self.n) {
            return Err(Error::InvalidTriple);
        }
        let sides = [norm_pair(i, j), norm_pair(i, k), norm_pair(j, k)];
        let mut kept: BTreeSet<u32> = [i, j, k].into();
        for &diag in &self.diagonals {
            if sides.iter().any(|&s| crosses_loose(diag, s)) {
                kept.insert(diag.0);
                kept.insert(diag.1);
            }
        }
        self.induced_on(kept)
    }

    pub fn is_trimmed_tri(&self, t: (u32, u32, u32)) -> Result<bool, Error> {
        Ok(self.trim_tri(t)?.0.n == self.n)
    }

    /// Flips the diagonal `e` to the other diagonal of the quadrilateral
    /// formed by its two adjacent triangles.
    pub fn flip(&self, e: Pair) -> Result<(TriCycle, Pair), Error> {
        let e = self.diagonal_check(e).map_err(|_| Error::NotInTriangulation)?;
        if !self.diagonals.contains(&e) {
            return Err(Error::NotInTriangulation);
        }
        let apexes: Vec<u32> = (1..=self.n)
            .filter(|&w| w != e.0 && w != e.1 && self.is_edge(e.0, w) && self.is_edge(e.1, w))
            .collect();
        if apexes.len() != 2 {
            return Err(Error::Internal("diagonal not in exactly two triangles"));
        }
        let f = norm_pair(apexes[0], apexes[1]);
        let mut diagonals: Vec<Pair> = self
            .diagonals
            .iter()
            .copied()
            .filter(|&d| d != e)
            .collect();
        diagonals.push(f);
        Ok((TriCycle::new(self.n, diagonals)?, f))
    }

    /// Thin: no triangle has all three sides among the diagonals.
    pub fn is_thin(&self) -> bool {
        self.triangles().iter().all(|&(i, j, k)| {
            self.is_side(i, j) || self.is_side(j, k) || self.is_side(i, k)
        })
    }

    /// The unique diagonal a thin triangulation is trimmed with respect to,
    /// joining the only two vertices incident to no diagonal.
    pub fn trimmed_diagonal(&self) -> Result<Pair, Error> {
        if !self.is_thin() {
            return Err(Error::NotThin);
        }
        let free: Vec<u32> = (1..=self.n)
            .filter(|&v| !self.diagonals.iter().any(|&(i, j)| i == v || j == v))
            .collect();
        if free.len() != 2 {
            return Err(Error::NotThin);
        }
        Ok((free[0], free[1]))
    }

    /// Rotates vertex labels so the trimmed diagonal becomes `{c, n}`,
    /// sending its larger endpoint to `n`. Requires a thin triangulation.
    pub fn rotate_to_normal(&self) -> Result<(TriCycle, Relabel), Error> {
        let (_, hi) = self.trimmed_diagonal()?;
        let n = self.n;
        let shift = n - hi;
        // new = ((old + shift - 1) mod n) + 1; Relabel stores old_of_new.
        let mut old_of_new = vec![0u32; n as usize];
        let mut new_of_old = BTreeMap::new();
        for old in 1..=n {
            let new = (old + shift - 1) % n + 1;
            old_of_new[(new - 1) as usize] = old;
            new_of_old.insert(old, new);
        }
        let relabel = Relabel { old_of_new, new_of_old };
        let diagonals: Vec<Pair> = self
            .diagonals
            .iter()
            .map(|&(i, j)| norm_pair(relabel.to_new(i).unwrap(), relabel.to_new(j).unwrap()))
            .collect();
        Ok((TriCycle::new(n, diagonals)?, relabel))
    }

    /// No-op relabeling of this cycle.
    pub fn identity_relabel(&self) -> Relabel {
        Relabel::identity(self.n)
    }
}

#[derive(Serialize, Deserialize)]
struct TriCycleJson {
    n: u32,
    diagonals: Vec<(u32, u32)>,
}

impl Serialize for TriCycle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TriCycleJson { n: self.n, diagonals: self.diagonals.iter().copied().collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TriCycle {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = TriCycleJson::deserialize(d)?;
        TriCycle::new(raw.n, raw.diagonals).map_err(serde::de::Error::custom)
    }
}

/// The ordered spanning-tree edges `D_2, ..., D_n` of a thin triangulation
/// in normal form: `D_2 = {c-1, c}`, `D_n = {1, n}`, consecutive edges two
/// sides of a common triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeOrder {
    n: u32,
    c: u32,
    edges: Vec<Pair>,
}

impl TreeOrder {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The vertex `c` of the trimmed diagonal `{c, n}`.
    pub fn c(&self) -> u32 {
        self.c
    }

    /// `D_j` for `2 <= j <= n`.
    pub fn edge(&self, j: usize) -> Pair {
        self.edges[j - 2]
    }

    pub fn edges(&self) -> &[Pair] {
        &self.edges
    }
}

/// Builds the spanning-tree edge order of a thin triangulation whose trimmed
/// diagonal is `{c, n}`.
pub fn spanning_edges(g: &TriCycle) -> Result<TreeOrder, Error> {
    let n = g.n();
    if n < 4 {
        return Err(Error::NotThin);
    }
    let (lo, hi) = g.trimmed_diagonal()?;
    if hi != n {
        return Err(Error::NotNormalized);
    }
    let c = lo;
    let mut pool: BTreeSet<Pair> = g.diagonals().collect();
    pool.insert(norm_pair(c - 1, c));
    pool.insert((1, n));
    let triangles = g.triangles();
    let mut used = vec![false; triangles.len()];
    let mut edges = vec![norm_pair(c - 1, c)];
    pool.remove(&norm_pair(c - 1, c));
    for _ in 0..(n - 2) {
        let cur = *edges.last().unwrap();
        let in_triangle = |t: (u32, u32, u32), e: Pair| {
            let vs = [t.0, t.1, t.2];
            vs.contains(&e.0) && vs.contains(&e.1)
        };
        let mut next = None;
        for (ti, &t) in triangles.iter().enumerate() {
            if used[ti] || !in_triangle(t, cur) {
                continue;
            }
            let candidates: Vec<Pair> =
                pool.iter().copied().filter(|&e| in_triangle(t, e)).collect();
            if candidates.len() == 1 {
                if next.is_some() {
                    return Err(Error::Internal("ambiguous spanning edge order"));
                }
                next = Some((candidates[0], ti));
            } else if !candidates.is_empty() {
                return Err(Error::Internal("ambiguous spanning edge order"));
            }
        }
        let (e, ti) = next.ok_or(Error::Internal("spanning edge chain broke"))?;
        used[ti] = true;
        pool.remove(&e);
        edges.push(e);
    }
    if *edges.last().unwrap() != (1, n) {
        return Err(Error::Internal("spanning edge chain did not end at {1,n}"));
    }
    Ok(TreeOrder { n, c, edges })
}

/// Sorted indices `j` of the edges `D_j` on the unique tree path between two
/// vertices.
pub fn tree_path(t: &TreeOrder, a: u32, b: u32) -> Result<Vec<usize>, Error> {
    let mut path = tree_path_walk(t, a, b)?;
    path.sort_unstable();
    Ok(path)
}

/// Indices of the edges on the unique tree path, in walk order starting
/// from `a`. The alternating signed sum of the corresponding edge vectors
/// telescopes to the chord vector, up to an orientation sign.
pub fn tree_path_walk(t: &TreeOrder, a: u32, b: u32) -> Result<Vec<usize>, Error> {
    if a == 0 || b == 0 || a > t.n || b > t.n || a == b {
        return Err(Error::InvalidVertex);
    }
    let mut adj: BTreeMap<u32, Vec<(u32, usize)>> = BTreeMap::new();
    for (pos, &(i, j)) in t.edges.iter().enumerate() {
        adj.entry(i).or_default().push((j, pos + 2));
        adj.entry(j).or_default().push((i, pos + 2));
    }
    // BFS from a to b, tracking parents.
    let mut parent: BTreeMap<u32, (u32, usize)> = BTreeMap::new();
    let mut queue = VecDeque::from([a]);
    let mut seen: BTreeSet<u32> = [a].into();
    while let Some(v) = queue.pop_front() {
        if v == b {
            break;
        }
        for &(w, idx) in adj.get(&v).into_iter().flatten() {
            if seen.insert(w) {
                parent.insert(w, (v, idx));
                queue.push_back(w);
            }
        }
    }
    if !seen.contains(&b) {
        return Err(Error::Internal("tree does not span all vertices"));
    }
    let mut path = Vec::new();
    let mut v = b;
    while v != a {
        let (p, idx) = parent[&v];
        path.push(idx);
        v = p;
    }
    path.reverse();
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_examples() {
        assert!(crosses((1, 3), (2, 4), 4).unwrap());
        assert!(!crosses((1, 3), (1, 4), 5).unwrap());
        // nested diagonals do not cross
        assert!(!crosses((2, 6), (3, 5), 8).unwrap());
        assert_eq!(crosses((1, 2), (2, 4), 5), Err(Error::NotADiagonal));
        assert_eq!(crosses((1, 5), (2, 4), 5), Err(Error::NotADiagonal));
    }

    #[test]
    fn tricycle_validation() {
        assert!(TriCycle::new(4, vec![(1, 3)]).is_ok());
        assert!(TriCycle::new(4, vec![]).is_err());
        assert!(TriCycle::new(4, vec![(1, 2)]).is_err());
        assert!(TriCycle::new(6, vec![(1, 3), (2, 4), (1, 4)]).is_err());
        assert!(TriCycle::new(3, vec![]).is_ok());
        let g = TriCycle::new(8, vec![(1, 3), (1, 4), (1, 7), (4, 7), (4, 6)]).unwrap();
        assert_eq!(g.triangles().len(), 6);
    }

    #[test]
    fn trim_octagon() {
        // trimming the octagon by {2,6} keeps vertices 1,2,3,4,6,7
        let g = TriCycle::new(8, vec![(1, 3), (1, 4), (1, 7), (4, 7), (4, 6)]).unwrap();
        let (t, rel) = g.trim_diag((2, 6)).unwrap();
        assert_eq!(t.n(), 6);
        let kept: Vec<u32> = (1..=6).map(|v| rel.old(v)).collect();
        assert_eq!(kept, vec![1, 2, 3, 4, 6, 7]);
        // former diagonals {4,6} and {1,7} become sides of the hexagon
        assert_eq!(t.diagonals().count(), 3);
        assert!(t.has_diagonal(rel.to_new(1).unwrap(), rel.to_new(3).unwrap()));
        assert!(t.has_diagonal(rel.to_new(1).unwrap(), rel.to_new(4).unwrap()));
        assert!(t.has_diagonal(rel.to_new(4).unwrap(), rel.to_new(7).unwrap()));
    }

    #[test]
    fn trim_is_idempotent_and_detects_membership() {
        let g = TriCycle::new(4, vec![(1, 3)]).unwrap();
        let (t, _) = g.trim_diag((2, 4)).unwrap();
        assert_eq!(t, g);
        assert!(g.is_trimmed_diag((2, 4)).unwrap());
        assert_eq!(g.trim_diag((1, 3)), Err(Error::InTriangulation));

        // fan on 6 vertices is already trimmed with respect to {2,6}
        let fan = TriCycle::fan(6);
        assert!(fan.is_trimmed_diag((2, 6)).unwrap());
    }

    #[test]
    fn trim_triple_examples() {
        // fan on 5 vertices, triple (2,4,5) -> whole pentagon
        let fan5 = TriCycle::fan(5);
        let (t, _) = fan5.trim_tri((2, 4, 5)).unwrap();
        assert_eq!(t.n(), 5);
        assert!(fan5.is_trimmed_tri((2, 4, 5)).unwrap());

        // n=4 fan, triple (1,2,3): nothing crosses the sides, keep the triangle
        let g = TriCycle::new(4, vec![(1, 3)]).unwrap();
        let (t, rel) = g.trim_tri((1, 2, 3)).unwrap();
        assert_eq!(t.n(), 3);
        assert_eq!((rel.old(1), rel.old(2), rel.old(3)), (1, 2, 3));

        assert_eq!(g.trim_tri((1, 1, 3)), Err(Error::InvalidTriple));
    }

    #[test]
    fn flips() {
        let g = TriCycle::new(4, vec![(1, 3)]).unwrap();
        let (g2, f) = g.flip((1, 3)).unwrap();
        assert_eq!(f, (2, 4));
        assert!(g2.has_diagonal(2, 4));
        let (g3, f2) = g2.flip((2, 4)).unwrap();
        assert_eq!(f2, (1, 3));
        assert_eq!(g3, g);

        let fan5 = TriCycle::fan(5);
        let (g4, f4) = fan5.flip((1, 3)).unwrap();
        assert_eq!(f4, (2, 4));
        assert!(g4.has_diagonal(1, 4));
        assert_eq!(fan5.flip((2, 5)), Err(Error::NotInTriangulation));
    }

    #[test]
    fn thinness() {
        assert!(TriCycle::fan(6).is_thin());
        assert_eq!(TriCycle::fan(6).trimmed_diagonal().unwrap(), (2, 6));
        let not_thin = TriCycle::new(6, vec![(1, 3), (3, 5), (1, 5)]).unwrap();
        assert!(!not_thin.is_thin());
        assert_eq!(not_thin.trimmed_diagonal(), Err(Error::NotThin));
        assert!(TriCycle::new(4, vec![(1, 3)]).unwrap().is_thin());
        assert!(TriCycle::new(4, vec![(2, 4)]).unwrap().is_thin());
    }

    #[test]
    fn spanning_edges_fan() {
        // fan at 1 in normal form: trimmed diagonal {2,6}... rotate first
        let fan = TriCycle::fan(6);
        let (norm, rel) = fan.rotate_to_normal().unwrap();
        assert_eq!(norm.trimmed_diagonal().unwrap().1, 6);
        let t = spanning_edges(&norm).unwrap();
        assert_eq!(t.edges().len(), 5);
        assert_eq!(t.edge(2), (t.c() - 1, t.c()));
        assert_eq!(t.edge(6), (1, 6));
        // consecutive edges share a triangle
        for j in 2..6 {
            let (a, b) = (t.edge(j), t.edge(j + 1));
            let verts: BTreeSet<u32> = [a.0, a.1, b.0, b.1].into();
            assert_eq!(verts.len(), 3);
            let v: Vec<u32> = verts.into_iter().collect();
            assert!(norm.is_triangle(v[0], v[1], v[2]));
        }
        // rotation bookkeeping stays invertible
        for v in 1..=6 {
            assert_eq!(rel.to_new(rel.old(v)).unwrap(), v);
        }
    }

    #[test]
    fn spanning_edges_snake() {
        let g = TriCycle::new(6, vec![(2, 4), (2, 5), (1, 5)]).unwrap();
        assert_eq!(g.trimmed_diagonal().unwrap(), (3, 6));
        let t = spanning_edges(&g).unwrap();
        assert_eq!(t.edges(), &[(2, 3), (2, 4), (2, 5), (1, 5), (1, 6)]);
        assert_eq!(tree_path(&t, 3, 4).unwrap(), vec![2, 3]);
        assert_eq!(tree_path(&t, 1, 3).unwrap(), vec![2, 4, 5]);
        assert_eq!(tree_path(&t, 1, 6).unwrap(), vec![6]);
        assert_eq!(tree_path(&t, 0, 3), Err(Error::InvalidVertex));
    }

    #[test]
    fn spanning_edges_requires_normal_form() {
        let fan = TriCycle::fan(6); // trimmed diagonal {2,6}: already normal
        assert!(spanning_edges(&fan).is_ok());
        let g = TriCycle::new(6, vec![(2, 4), (2, 6), (4, 6)]).unwrap();
        assert_eq!(spanning_edges(&g), Err(Error::NotThin));
        let shifted = TriCycle::new(5, vec![(2, 4), (2, 5)]).unwrap();
        // trimmed diagonal {1,3}: not of the form {c,n}
        assert_eq!(shifted.trimmed_diagonal().unwrap(), (1, 3));
        assert_eq!(spanning_edges(&shifted), Err(Error::NotNormalized));
    }
}
