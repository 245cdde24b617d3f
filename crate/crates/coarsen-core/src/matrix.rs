//! Minimal sparse matrix used for the normalized coarse adjacency.

use alloc::vec::Vec;

/// Sparse real matrix in compressed sparse row form; zero entries are
/// omitted. Columns are ascending within each row.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMatrix {
    n_rows: usize,
    n_cols: usize,
    row_offsets: Vec<usize>,
    cols: Vec<u32>,
    vals: Vec<f64>,
}

impl SparseMatrix {
    /// Builds from row-major sorted triplets with unique positions.
    pub fn from_sorted(n_rows: usize, n_cols: usize, entries: Vec<(usize, usize, f64)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| (w[0].0, w[0].1) < (w[1].0, w[1].1)));
        debug_assert!(entries.iter().all(|&(r, c, _)| r < n_rows && c < n_cols));
        let mut row_offsets = alloc::vec![0usize; n_rows + 1];
        for &(r, _, _) in &entries {
            row_offsets[r + 1] += 1;
        }
        for i in 0..n_rows {
            row_offsets[i + 1] += row_offsets[i];
        }
        let mut cols = Vec::with_capacity(entries.len());
        let mut vals = Vec::with_capacity(entries.len());
        for (_, c, v) in entries {
            cols.push(c as u32);
            vals.push(v);
        }
        SparseMatrix { n_rows, n_cols, row_offsets, cols, vals }
    }

    /// Direct CSR construction; offsets must be monotone and columns
    /// ascending within each row. Only shape is checked here; the
    /// per-entry invariants are the producer's responsibility (and are
    /// cross-checked by the matrix-route equivalence suite).
    pub fn from_csr(
        n_rows: usize,
        n_cols: usize,
        row_offsets: Vec<usize>,
        cols: Vec<u32>,
        vals: Vec<f64>,
    ) -> Self {
        let _ = n_cols;
        debug_assert_eq!(row_offsets.len(), n_rows + 1);
        debug_assert_eq!(cols.len(), vals.len());
        debug_assert_eq!(*row_offsets.last().unwrap_or(&0), cols.len());
        SparseMatrix { n_rows, n_cols, row_offsets, cols, vals }
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    /// Number of stored entries.
    pub fn nnz(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        let slice = &self.cols[self.row_offsets[row]..self.row_offsets[row + 1]];
        slice
            .binary_search(&(col as u32))
            .map(|i| self.vals[self.row_offsets[row] + i])
            .unwrap_or(0.0)
    }

    /// Entries of one row, as `(col, value)` pairs.
    pub fn row(&self, row: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let range = self.row_offsets[row]..self.row_offsets[row + 1];
        self.cols[range.clone()]
            .iter()
            .map(|&c| c as usize)
            .zip(self.vals[range].iter().copied())
    }

    /// All entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n_rows).flat_map(move |r| self.row(r).map(move |(c, v)| (r, c, v)))
    }

    /// Dense copy, for small cross-checks.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let mut out = alloc::vec![alloc::vec![0.0; self.n_cols]; self.n_rows];
        for (r, c, v) in self.iter() {
            out[r][c] = v;
        }
        out
    }
}
