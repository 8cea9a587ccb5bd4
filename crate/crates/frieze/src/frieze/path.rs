//! Traversing paths: the staircases of indices whose values determine a
//! generic frieze.

use crate::exact::{LineIdx, NodeIdx};
use crate::Error;
use serde::{Deserialize, Serialize};

fn bad(msg: impl Into<String>) -> Error {
    Error::MalformedInput(msg.into())
}

/// A traversing path for a Heronian frieze of order `n`: `2n-3` interior
/// nodes climbing the strip one half-step at a time from row `1` to row
/// `n-1`, with the `n-2` dashed lines met along the way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HTraversingPath {
    n: u32,
    nodes: Vec<NodeIdx>,
    lines: Vec<LineIdx>,
}

impl HTraversingPath {
    pub fn new(n: u32, nodes: Vec<NodeIdx>, lines: Vec<LineIdx>) -> Result<Self, Error> {
        if n < 4 {
            return Err(Error::OrderTooSmall);
        }
        if nodes.len() != 2 * n as usize - 3 {
            return Err(bad(format!("expected {} path nodes", 2 * n - 3)));
        }
        if lines.len() != n as usize - 2 {
            return Err(bad(format!("expected {} path lines", n - 2)));
        }
        if nodes[0].row2() != 2 {
            return Err(bad("path must start at row 1"));
        }
        if nodes.last().unwrap().row2() != 2 * (n as i64 - 1) {
            return Err(bad("path must end at row n-1"));
        }
        for w in nodes.windows(2) {
            let di = w[1].i2 - w[0].i2;
            let dj = w[1].j2 - w[0].j2;
            if !((di == 0 && dj == 1) || (di == -1 && dj == 0)) {
                return Err(bad("path steps must raise the row by a half"));
            }
        }
        for idx in &nodes {
            if !idx.is_interior(n) {
                return Err(bad("path nodes must be interior"));
            }
        }
        // the k-th line is attached to the k-th half-integer node
        for k in 1..=(n as usize - 2) {
            let half = nodes[2 * k - 1];
            let want = if half.i2.rem_euclid(2) == 1 {
                LineIdx::up((half.i2 - 1) / 2)
            } else {
                LineIdx::down((half.j2 - 1) / 2)
            };
            if lines[k - 1] != want {
                return Err(bad(format!("line {} should be {want}", k - 1)));
            }
        }
        Ok(HTraversingPath { n, nodes, lines })
    }

    /// The pure-up path climbing column `col`: nodes `(col, col+1)` through
    /// `(col, col+n-1)`, lines `down:col+1 .. down:col+n-2`.
    pub fn column(n: u32, col: i64) -> Result<Self, Error> {
        let nodes = (2..=(2 * n as i64 - 2))
            .map(|off| NodeIdx { i2: 2 * col, j2: 2 * col + off })
            .collect();
        let lines = (1..n as i64 - 1).map(|k| LineIdx::down(col + k)).collect();
        HTraversingPath::new(n, nodes, lines)
    }

    /// The staircase alternating full up and full left moves, starting with
    /// an up move from `(col, col + 1)`.
    pub fn staircase(n: u32, col: i64) -> Result<Self, Error> {
        let mut nodes = vec![NodeIdx::int(col, col + 1)];
        let mut lines = Vec::new();
        for step in 0..(n as i64 - 2) {
            let last = *nodes.last().unwrap();
            if step % 2 == 0 {
                // up through (i, j + 1/2)
                nodes.push(NodeIdx { i2: last.i2, j2: last.j2 + 1 });
                nodes.push(NodeIdx { i2: last.i2, j2: last.j2 + 2 });
                lines.push(LineIdx::down(last.j2 / 2));
            } else {
                // left through (i - 1/2, j)
                nodes.push(NodeIdx { i2: last.i2 - 1, j2: last.j2 });
                nodes.push(NodeIdx { i2: last.i2 - 2, j2: last.j2 });
                lines.push(LineIdx::up(last.i2 / 2 - 1));
            }
        }
        HTraversingPath::new(n, nodes, lines)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn nodes(&self) -> &[NodeIdx] {
        &self.nodes
    }

    pub fn lines(&self) -> &[LineIdx] {
        &self.lines
    }

    /// Total number of values the path carries: `3n - 5`.
    pub fn value_len(&self) -> usize {
        self.nodes.len() + self.lines.len()
    }

    /// Value list for an equilateral frieze: the given node values followed
    /// by the lateral parameter `b` on every line.
    pub fn equilateral_values(&self, nodes: &[crate::exact::Rat], b: &crate::exact::Rat) -> Vec<crate::exact::Rat> {
        let mut out = nodes.to_vec();
        out.extend(std::iter::repeat_with(|| b.clone()).take(self.lines.len()));
        out
    }
}

/// A traversing path for a Cayley-Menger frieze: `n-1` integer nodes with
/// `j_k - i_k = k` and the `n-2` lines met along the way. Its thickening
/// adds the nodes shifted by `(1,1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMPath {
    n: u32,
    nodes: Vec<NodeIdx>,
    lines: Vec<LineIdx>,
}

impl CMPath {
    pub fn new(n: u32, nodes: Vec<NodeIdx>, lines: Vec<LineIdx>) -> Result<Self, Error> {
        if n < 4 {
            return Err(Error::OrderTooSmall);
        }
        if nodes.len() != n as usize - 1 {
            return Err(bad(format!("expected {} path nodes", n - 1)));
        }
        if lines.len() != n as usize - 2 {
            return Err(bad(format!("expected {} path lines", n - 2)));
        }
        for (k, idx) in nodes.iter().enumerate() {
            if !idx.is_integer() {
                return Err(bad("path nodes must be integer points"));
            }
            if idx.row2() != 2 * (k as i64 + 1) {
                return Err(bad("node k must lie on row k"));
            }
        }
        for (k, w) in nodes.windows(2).enumerate() {
            let di = w[1].i2 - w[0].i2;
            let dj = w[1].j2 - w[0].j2;
            let want = if di == 0 && dj == 2 {
                // up move
                LineIdx::down(w[0].j2 / 2)
            } else if di == -2 && dj == 0 {
                // left move
                LineIdx::up(w[0].i2 / 2 - 1)
            } else {
                return Err(bad("path steps must raise the row by one"));
            };
            if lines[k] != want {
                return Err(bad(format!("line {k} should be {want}")));
            }
        }
        Ok(CMPath { n, nodes, lines })
    }

    /// The pure-up path climbing column `col`.
    pub fn column(n: u32, col: i64) -> Result<Self, Error> {
        let nodes = (1..n as i64).map(|k| NodeIdx::int(col, col + k)).collect();
        let lines = (1..n as i64 - 1).map(|k| LineIdx::down(col + k)).collect();
        CMPath::new(n, nodes, lines)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn nodes(&self) -> &[NodeIdx] {
        &self.nodes
    }

    pub fn lines(&self) -> &[LineIdx] {
        &self.lines
    }

    /// The path nodes shifted by `(1,1)`.
    pub fn shifted_nodes(&self) -> Vec<NodeIdx> {
        self.nodes
            .iter()
            .map(|idx| NodeIdx { i2: idx.i2 + 2, j2: idx.j2 + 2 })
            .collect()
    }

    /// Total number of values the thickened path carries: `3n - 4`.
    pub fn thickened_len(&self) -> usize {
        2 * self.nodes.len() + self.lines.len()
    }
}

/// JSON form of a path with its values: doubled node coordinates,
/// line names, and the value list.
#[derive(Serialize, Deserialize)]
pub struct PathJson {
    pub nodes: Vec<(i64, i64)>,
    pub lines: Vec<String>,
    pub values: Vec<crate::exact::Rat>,
}

impl PathJson {
    fn parse_nodes(&self) -> Result<Vec<NodeIdx>, Error> {
        self.nodes.iter().map(|&(i2, j2)| NodeIdx::new(i2, j2)).collect()
    }

    fn parse_lines(&self) -> Result<Vec<LineIdx>, Error> {
        self.lines.iter().map(|s| s.parse()).collect()
    }
}

impl HTraversingPath {
    /// Reads a path and its values from the JSON form
    /// `{"nodes": [[i2,j2],...], "lines": ["down:1",...], "values": [...]}`
    /// with node values first, line values last.
    pub fn from_json(n: u32, raw: &PathJson) -> Result<(Self, Vec<crate::exact::Rat>), Error> {
        let path = HTraversingPath::new(n, raw.parse_nodes()?, raw.parse_lines()?)?;
        if raw.values.len() != path.value_len() {
            return Err(bad(format!("expected {} path values", path.value_len())));
        }
        Ok((path, raw.values.clone()))
    }

    pub fn to_json(&self, values: &[crate::exact::Rat]) -> PathJson {
        PathJson {
            nodes: self.nodes.iter().map(|i| (i.i2, i.j2)).collect(),
            lines: self.lines.iter().map(|l| l.to_string()).collect(),
            values: values.to_vec(),
        }
    }
}

impl CMPath {
    /// Reads a path and its thickened values from JSON: node values, then
    /// shifted-node values, then line values.
    pub fn from_json(n: u32, raw: &PathJson) -> Result<(Self, Vec<crate::exact::Rat>), Error> {
        let path = CMPath::new(n, raw.parse_nodes()?, raw.parse_lines()?)?;
        if raw.values.len() != path.thickened_len() {
            return Err(bad(format!("expected {} path values", path.thickened_len())));
        }
        Ok((path, raw.values.clone()))
    }

    pub fn to_json(&self, values: &[crate::exact::Rat]) -> PathJson {
        PathJson {
            nodes: self.nodes.iter().map(|i| (i.i2, i.j2)).collect(),
            lines: self.lines.iter().map(|l| l.to_string()).collect(),
            values: values.to_vec(),
        }
    }
}
