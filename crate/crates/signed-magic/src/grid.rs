//! Partially filled integer grids and the composition algebra used to tile
//! them out of zero-sum blocks.

use crate::error::{Error, Result};
use crate::intset::IntSet;

/// An `rows x cols` grid whose cells are empty or hold a signed integer.
///
/// Storage is dense row-major with an explicit empty marker; every
/// construction in this crate fills more than half of its cells. A stored 0
/// is legal only when the target entry universe is the odd-count one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialGrid {
    rows: usize,
    cols: usize,
    cells: Vec<Option<i64>>,
}

impl PartialGrid {
    pub fn new(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "grid dimensions must be positive");
        PartialGrid {
            rows,
            cols,
            cells: vec![None; rows * cols],
        }
    }

    /// Builds a fully filled grid from row data.
    pub fn from_rows(data: &[Vec<i64>]) -> Self {
        assert!(!data.is_empty());
        let cols = data[0].len();
        assert!(data.iter().all(|r| r.len() == cols));
        PartialGrid {
            rows: data.len(),
            cols,
            cells: data.iter().flatten().map(|&v| Some(v)).collect(),
        }
    }

    /// Builds a grid from row-major optional cells.
    pub fn from_cells(rows: usize, cols: usize, cells: Vec<Option<i64>>) -> Result<Self> {
        if cells.len() != rows * cols || rows == 0 || cols == 0 {
            return Err(Error::Shape(format!(
                "cell vector of length {} does not fill a {rows}x{cols} grid",
                cells.len()
            )));
        }
        Ok(PartialGrid { rows, cols, cells })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Option<i64> {
        assert!(r < self.rows && c < self.cols, "cell index out of bounds");
        self.cells[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Option<i64>) {
        assert!(r < self.rows && c < self.cols, "cell index out of bounds");
        self.cells[r * self.cols + c] = v;
    }

    pub fn cells(&self) -> &[Option<i64>] {
        &self.cells
    }

    pub fn filled_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_some()).count()
    }

    /// Iterates the filled values in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = i64> + '_ {
        self.cells.iter().filter_map(|c| *c)
    }

    pub fn transpose(&self) -> PartialGrid {
        let mut out = PartialGrid::new(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.cells[c * self.rows + r] = self.cells[r * self.cols + c];
            }
        }
        out
    }

    /// Flips the sign of every filled cell.
    pub fn negated(&self) -> PartialGrid {
        PartialGrid {
            rows: self.rows,
            cols: self.cols,
            cells: self.cells.iter().map(|c| c.map(|v| -v)).collect(),
        }
    }

    pub fn hconcat(&self, right: &PartialGrid) -> Result<PartialGrid> {
        if self.rows != right.rows {
            return Err(Error::Shape(format!(
                "hconcat of {}x{} with {}x{}",
                self.rows, self.cols, right.rows, right.cols
            )));
        }
        let mut out = PartialGrid::new(self.rows, self.cols + right.cols);
        out.place(self, 0, 0)?;
        out.place(right, 0, self.cols)?;
        Ok(out)
    }

    pub fn vconcat(&self, below: &PartialGrid) -> Result<PartialGrid> {
        if self.cols != below.cols {
            return Err(Error::Shape(format!(
                "vconcat of {}x{} with {}x{}",
                self.rows, self.cols, below.rows, below.cols
            )));
        }
        let mut out = PartialGrid::new(self.rows + below.rows, self.cols);
        out.place(self, 0, 0)?;
        out.place(below, self.rows, 0)?;
        Ok(out)
    }

    /// Block-diagonal composition; off-diagonal cells stay empty.
    pub fn block_diag(parts: &[PartialGrid]) -> Result<PartialGrid> {
        if parts.is_empty() {
            return Err(Error::Shape("block_diag of zero grids".into()));
        }
        let rows = parts.iter().map(|g| g.rows).sum();
        let cols = parts.iter().map(|g| g.cols).sum();
        let mut out = PartialGrid::new(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for g in parts {
            out.place(g, r0, c0)?;
            r0 += g.rows;
            c0 += g.cols;
        }
        Ok(out)
    }

    /// Copies the filled cells of `block` into this grid with its top-left
    /// corner at `(at_row, at_col)`.
    ///
    /// The target region must lie inside the grid and every target cell must
    /// be empty; a collision means the layout template is wrong.
    pub fn place(&mut self, block: &PartialGrid, at_row: usize, at_col: usize) -> Result<()> {
        if at_row + block.rows > self.rows || at_col + block.cols > self.cols {
            return Err(Error::Shape(format!(
                "{}x{} block at ({at_row},{at_col}) exceeds {}x{} frame",
                block.rows, block.cols, self.rows, self.cols
            )));
        }
        for r in 0..block.rows {
            for c in 0..block.cols {
                if let Some(v) = block.cells[r * block.cols + c] {
                    let idx = (at_row + r) * self.cols + (at_col + c);
                    if let Some(existing) = self.cells[idx] {
                        return Err(Error::Collision {
                            row: at_row + r,
                            col: at_col + c,
                            existing,
                        });
                    }
                    self.cells[idx] = Some(v);
                }
            }
        }
        Ok(())
    }

    pub fn row_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                if let Some(v) = self.cells[r * self.cols + c] {
                    sums[r] += v;
                }
            }
        }
        sums
    }

    pub fn col_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.cols];
        for r in 0..self.rows {
            for c in 0..self.cols {
                if let Some(v) = self.cells[r * self.cols + c] {
                    sums[c] += v;
                }
            }
        }
        sums
    }

    pub fn row_fill_counts(&self) -> Vec<usize> {
        (0..self.rows)
            .map(|r| (0..self.cols).filter(|&c| self.get(r, c).is_some()).count())
            .collect()
    }

    pub fn col_fill_counts(&self) -> Vec<usize> {
        (0..self.cols)
            .map(|c| (0..self.rows).filter(|&r| self.get(r, c).is_some()).count())
            .collect()
    }
}

/// A list of equally sized grids sharing one entry universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArraySet {
    arrays: Vec<PartialGrid>,
    a: usize,
    b: usize,
}

impl ArraySet {
    /// Wraps a nonempty list of grids, all of the same shape.
    pub fn new(arrays: Vec<PartialGrid>) -> Result<Self> {
        let Some(first) = arrays.first() else {
            return Err(Error::Shape("array set must be nonempty".into()));
        };
        let (a, b) = (first.rows(), first.cols());
        for (i, g) in arrays.iter().enumerate() {
            if g.rows() != a || g.cols() != b {
                return Err(Error::Shape(format!(
                    "array {i} is {}x{}, expected {a}x{b}",
                    g.rows(),
                    g.cols()
                )));
            }
        }
        Ok(ArraySet { arrays, a, b })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn e(&self) -> usize {
        self.arrays.len()
    }

    pub fn arrays(&self) -> &[PartialGrid] {
        &self.arrays
    }

    pub fn into_arrays(self) -> Vec<PartialGrid> {
        self.arrays
    }

    /// Transposes every member (the set property is orientation-free).
    pub fn transposed(&self) -> ArraySet {
        ArraySet {
            arrays: self.arrays.iter().map(|g| g.transpose()).collect(),
            a: self.b,
            b: self.a,
        }
    }

    pub fn total_filled(&self) -> usize {
        self.arrays.iter().map(|g| g.filled_count()).sum()
    }
}

/// The entry universe for a given filled-cell count: `±[1, N/2]` when `N` is
/// even, `{0} ∪ ±[1, (N−1)/2]` when odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Omega {
    filled: u64,
}

/// Universe for `filled_count` filled cells.
pub fn omega_for(filled_count: u64) -> Omega {
    Omega { filled: filled_count }
}

impl Omega {
    pub fn len(&self) -> u64 {
        self.filled
    }

    pub fn is_empty(&self) -> bool {
        self.filled == 0
    }

    pub fn includes_zero(&self) -> bool {
        self.filled % 2 == 1
    }

    /// Largest absolute value in the universe.
    pub fn half(&self) -> i64 {
        (self.filled / 2) as i64
    }

    pub fn contains(&self, v: i64) -> bool {
        if v == 0 {
            self.includes_zero()
        } else {
            v.abs() <= self.half()
        }
    }

    pub fn as_set(&self) -> IntSet {
        let h = self.half();
        let mut elems: Vec<i64> = (-h..=h).collect();
        if !self.includes_zero() {
            elems.retain(|&v| v != 0);
        }
        IntSet::from_sorted_unique(elems)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn two_by_three() -> PartialGrid {
        PartialGrid::from_rows(&[vec![1, -3, 2], vec![-1, 3, -2]])
    }

    #[test]
    fn transpose_swaps_sums() {
        let g = two_by_three();
        assert_eq!(g.row_sums(), vec![0, 0]);
        let t = g.transpose();
        assert_eq!(t.rows(), 3);
        assert_eq!(t.col_sums(), vec![0, 0]);
    }

    #[test]
    fn place_detects_collision() {
        let block = two_by_three();
        let mut frame = PartialGrid::new(2, 4);
        frame.place(&block, 0, 0).unwrap();
        let err = frame.place(&block, 0, 1).unwrap_err();
        assert!(matches!(err, Error::Collision { .. }));
    }

    #[test]
    fn place_fills_equal_frame() {
        let block = two_by_three();
        let mut frame = PartialGrid::new(2, 3);
        frame.place(&block, 0, 0).unwrap();
        assert_eq!(frame, block);
    }

    #[test]
    fn block_diag_keeps_zero_sums() {
        let g = two_by_three();
        let d = PartialGrid::block_diag(&[g.clone(), g.clone()]).unwrap();
        assert_eq!(d.rows(), 4);
        assert_eq!(d.cols(), 6);
        assert!(d.row_sums().iter().all(|&s| s == 0));
        assert!(d.col_sums().iter().all(|&s| s == 0));
        assert_eq!(d.get(0, 3), None);
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_for(70).as_set().max(), Some(35));
        assert!(!omega_for(70).includes_zero());
        let o9 = omega_for(9);
        assert!(o9.includes_zero());
        assert_eq!(o9.half(), 4);
        assert_eq!(o9.len(), 9);
        let o1 = omega_for(1);
        assert_eq!(o1.as_set().as_slice(), &[0]);
    }

    proptest! {
        #[test]
        fn transpose_involution(rows in 1usize..5, cols in 1usize..5, seed in 0u64..1000) {
            let mut g = PartialGrid::new(rows, cols);
            let mut x = seed;
            for r in 0..rows {
                for c in 0..cols {
                    x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if x % 3 == 0 {
                        g.set(r, c, Some((x % 17) as i64 - 8));
                    }
                }
            }
            prop_assert_eq!(g.transpose().transpose(), g.clone());
            prop_assert_eq!(g.negated().negated(), g);
        }

        #[test]
        fn omega_symmetric(k in 1u64..200) {
            let o = omega_for(2 * k);
            let s = o.as_set();
            prop_assert_eq!(s.len() as u64, 2 * k);
            for v in s.iter() {
                prop_assert!(s.contains(-v));
            }
        }
    }
}
