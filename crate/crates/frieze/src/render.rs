//! ASCII rendering of frieze windows.
//!
//! Rows run from `j - i = n` at the top down to `0`; each node sits at a
//! horizontal position proportional to `i + j`, which interleaves the
//! half-integer rows diagonally between the integer rows. Line values are
//! printed inside the border rows at the positions where their dashed lines
//! meet the boundary.

use crate::exact::{LineIdx, NodeIdx, Rat};
use crate::frieze::{CMFrieze, HeronianFrieze};
use std::collections::BTreeMap;

struct Grid {
    /// (row, position) -> token, with row = j2 - i2 and position = i2 + j2.
    cells: BTreeMap<(i64, i64), String>,
    p_min: i64,
    p_max: i64,
    rows: i64,
}

impl Grid {
    fn new(rows: i64) -> Self {
        Grid { cells: BTreeMap::new(), p_min: i64::MAX, p_max: i64::MIN, rows }
    }

    fn put(&mut self, row: i64, pos: i64, token: String) {
        self.p_min = self.p_min.min(pos);
        self.p_max = self.p_max.max(pos);
        self.cells.insert((row, pos), token);
    }

    fn draw(&self) -> String {
        if self.cells.is_empty() {
            return String::new();
        }
        let width = self.cells.values().map(|t| t.len()).max().unwrap_or(1);
        let step = width.div_ceil(2) + 1;
        let mut out = String::new();
        for row in (0..=self.rows).rev() {
            let mut line = String::new();
            for (&(r, pos), token) in &self.cells {
                if r != row {
                    continue;
                }
                let col = (pos - self.p_min) as usize * step;
                if line.len() < col {
                    line.push_str(&" ".repeat(col - line.len()));
                }
                line.push_str(token);
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

fn node_tokens(grid: &mut Grid, nodes: impl Iterator<Item = (NodeIdx, Rat)>) {
    for (idx, v) in nodes {
        grid.put(idx.row2(), idx.i2 + idx.j2, v.to_string());
    }
}

/// Places line values inside the border rows: a `down:k` line meets the
/// bottom row at position `4k + 2`, an `up:k` line meets the top row at
/// position `4k + 2n + 2`. Tokens are clipped to the row's node extent.
fn line_tokens(grid: &mut Grid, n: u32, lines: impl Iterator<Item = (LineIdx, Rat)>) {
    let row_extent = |row: i64| {
        let ps: Vec<i64> = grid
            .cells
            .keys()
            .filter(|&&(r, _)| r == row)
            .map(|&(_, p)| p)
            .collect();
        ps.first().copied().zip(ps.last().copied())
    };
    let bottom = row_extent(0);
    let top = row_extent(2 * n as i64);
    for (idx, v) in lines {
        let (row, pos, extent) = match idx.orientation {
            crate::exact::Orientation::Down => (0, 4 * idx.k + 2, bottom),
            crate::exact::Orientation::Up => {
                (2 * n as i64, 4 * idx.k + 2 + 2 * n as i64, top)
            }
        };
        if let Some((lo, hi)) = extent {
            if pos >= lo && pos <= hi {
                grid.put(row, pos, v.to_string());
            }
        }
    }
}

/// Renders a Heronian frieze window: `2n + 1` rows, signed areas interleaved
/// between the squared-distance rows, line values along the borders.
pub fn render_heronian(z: &HeronianFrieze) -> String {
    let mut grid = Grid::new(2 * z.n() as i64);
    node_tokens(&mut grid, z.nodes().map(|(i, v)| (*i, v.clone())));
    line_tokens(&mut grid, z.n(), z.lines().map(|(l, v)| (*l, v.clone())));
    grid.draw()
}

/// Renders a Cayley-Menger frieze window: `n + 1` node rows.
pub fn render_cm(z: &CMFrieze) -> String {
    let mut grid = Grid::new(2 * z.n() as i64);
    node_tokens(&mut grid, z.nodes().map(|(i, v)| (*i, v.clone())));
    line_tokens(&mut grid, z.n(), z.lines().map(|(l, v)| (*l, v.clone())));
    grid.draw()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frieze::{frieze_from_polygon, Window};
    use crate::geometry::{Point, Polygon};

    #[test]
    fn unit_square_grid_shape() {
        let square = Polygon::new(vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(1, 1),
            Point::from_ints(0, 1),
        ])
        .unwrap();
        let z = frieze_from_polygon(&square, Window::new(0, 4).unwrap()).unwrap();
        let text = render_heronian(&z);
        // 2n + 1 = 9 rows, zero borders
        let rows: Vec<&str> = text.lines().collect();
        assert_eq!(rows.len(), 9);
        assert!(rows[0].split_whitespace().all(|t| t == "0" || t == "1"));
        assert!(rows[8].split_whitespace().all(|t| t == "0" || t == "1"));
        // the middle row holds the diagonal squared lengths
        assert!(rows[4].split_whitespace().all(|t| t == "2"));
    }

    #[test]
    fn empty_window_is_empty_grid() {
        let grid = Grid::new(8);
        assert_eq!(grid.draw(), "");
    }
}
