use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::rational::{parse_rational, rational_json, Rational};
use crate::error::{Error, Result};

/// Sparse vector keyed by coordinate; never stores zeros.
pub type SparseVector = BTreeMap<usize, Rational>;

/// Row-compressed sparse matrix over the rationals.
///
/// Each row holds `(col, value)` pairs sorted by column with no zero values,
/// so structural equality is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    n_rows: usize,
    n_cols: usize,
    rows: Vec<Vec<(usize, Rational)>>,
}

impl SparseMatrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Self { n_rows, n_cols, rows: vec![Vec::new(); n_rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal((0..n).map(|_| Rational::one()).collect())
    }

    pub fn diagonal(diag: Vec<Rational>) -> Self {
        let n = diag.len();
        let rows = diag
            .into_iter()
            .enumerate()
            .map(|(i, v)| if v.is_zero() { Vec::new() } else { vec![(i, v)] })
            .collect();
        Self { n_rows: n, n_cols: n, rows }
    }

    /// Builds a matrix from `(row, col, value)` triplets. Duplicates are summed
    /// and zeros dropped.
    pub fn from_triplets<I>(n_rows: usize, n_cols: usize, triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut acc: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); n_rows];
        for (r, c, v) in triplets {
            if r >= n_rows || c >= n_cols {
                return Err(Error::IndexOutOfRange(format!(
                    "entry ({r},{c}) in a {n_rows}x{n_cols} matrix"
                )));
            }
            *acc[r].entry(c).or_insert_with(Rational::zero) += v;
        }
        let rows = acc
            .into_iter()
            .map(|row| row.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Ok(Self { n_rows, n_cols, rows })
    }

    /// Matrix whose columns are the given sparse vectors.
    pub fn from_columns(n_rows: usize, columns: &[SparseVector]) -> Result<Self> {
        let triplets = columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(&r, v)| (r, c, v.clone())));
        Self::from_triplets(n_rows, columns.len(), triplets)
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn row(&self, r: usize) -> &[(usize, Rational)] {
        &self.rows[r]
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.rows[r]
            .binary_search_by_key(&c, |(col, _)| *col)
            .map(|i| self.rows[r][i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// Row-major iterator over stored entries.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    /// Overwrites a single entry; a zero value removes it.
    pub fn set(&mut self, r: usize, c: usize, value: Rational) -> Result<()> {
        if r >= self.n_rows || c >= self.n_cols {
            return Err(Error::IndexOutOfRange(format!("({r},{c})")));
        }
        let row = &mut self.rows[r];
        match row.binary_search_by_key(&c, |(col, _)| *col) {
            Ok(i) if value.is_zero() => {
                row.remove(i);
            }
            Ok(i) => row[i].1 = value,
            Err(_) if value.is_zero() => {}
            Err(i) => row.insert(i, (c, value)),
        }
        Ok(())
    }

    pub fn trace(&self) -> Result<Rational> {
        self.require_square()?;
        Ok((0..self.n_rows).fold(Rational::zero(), |acc, i| acc + self.get(i, i)))
    }

    pub fn transpose(&self) -> Self {
        let mut rows = vec![Vec::new(); self.n_cols];
        for (r, c, v) in self.entries() {
            rows[c].push((r, v.clone()));
        }
        Self { n_rows: self.n_cols, n_cols: self.n_rows, rows }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zeros(self.n_rows, self.n_cols);
        }
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|(c, v)| (*c, v * k)).collect())
            .collect();
        Self { n_rows: self.n_rows, n_cols: self.n_cols, rows }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Result<Self> {
        if self.n_rows != other.n_rows || self.n_cols != other.n_cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.n_rows, self.n_cols, other.n_rows, other.n_cols
            )));
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| merge_rows(a, b, negate))
            .collect();
        Ok(Self { n_rows: self.n_rows, n_cols: self.n_cols, rows })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n_cols != other.n_rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.n_rows, self.n_cols, other.n_rows, other.n_cols
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                for (k, a) in row {
                    for (c, b) in &other.rows[*k] {
                        *acc.entry(*c).or_insert_with(Rational::zero) += a * b;
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Ok(Self { n_rows: self.n_rows, n_cols: other.n_cols, rows })
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.n_cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.n_cols
            )));
        }
        Ok(self
            .rows
            .iter()
            .map(|row| row.iter().fold(Rational::zero(), |acc, (c, v)| acc + v * &x[*c]))
            .collect())
    }

    pub fn mul_sparse_vec(&self, x: &SparseVector) -> SparseVector {
        let mut out = SparseVector::new();
        for (r, row) in self.rows.iter().enumerate() {
            let mut acc = Rational::zero();
            for (c, v) in row {
                if let Some(xc) = x.get(c) {
                    acc += v * xc;
                }
            }
            if !acc.is_zero() {
                out.insert(r, acc);
            }
        }
        out
    }

    /// Column `c` as a sparse vector.
    pub fn column(&self, c: usize) -> SparseVector {
        let mut out = SparseVector::new();
        for (r, row) in self.rows.iter().enumerate() {
            if let Ok(i) = row.binary_search_by_key(&c, |(col, _)| *col) {
                out.insert(r, row[i].1.clone());
            }
        }
        out
    }

    /// Connected components of the bipartite row/column incidence graph.
    /// Each component is `(rows, cols)` with both lists sorted; the matrix is
    /// block diagonal with respect to them after permutation. Empty rows and
    /// columns belong to no component.
    pub fn components(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        // Union-find over rows [0, n_rows) and columns [n_rows, n_rows + n_cols).
        let mut parent: Vec<usize> = (0..self.n_rows + self.n_cols).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (r, c, _) in self.entries() {
            let a = find(&mut parent, r);
            let b = find(&mut parent, self.n_rows + c);
            if a != b {
                parent[a] = b;
            }
        }
        let mut groups: BTreeMap<usize, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for r in 0..self.n_rows {
            if !self.rows[r].is_empty() {
                let root = find(&mut parent, r);
                groups.entry(root).or_default().0.push(r);
            }
        }
        let mut used = vec![false; self.n_cols];
        for (_, c, _) in self.entries() {
            used[c] = true;
        }
        for (c, _) in used.iter().enumerate().filter(|(_, u)| **u) {
            let root = find(&mut parent, self.n_rows + c);
            groups.entry(root).or_default().1.push(c);
        }
        let mut out: Vec<_> = groups.into_values().collect();
        out.sort_by_key(|(_, cols)| cols[0]);
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut dense = vec![vec![Rational::zero(); self.n_cols]; self.n_rows];
        for (r, c, v) in self.entries() {
            dense[r][c] = v.clone();
        }
        dense
    }

    pub fn from_dense(dense: &[Vec<Rational>]) -> Result<Self> {
        let n_rows = dense.len();
        let n_cols = dense.first().map_or(0, Vec::len);
        if dense.iter().any(|row| row.len() != n_cols) {
            return Err(Error::DimensionMismatch("ragged dense matrix".into()));
        }
        let triplets = dense
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, v)| (r, c, v.clone())));
        Self::from_triplets(n_rows, n_cols, triplets)
    }

    /// `{"rows":R,"cols":C,"entries":[[r,c,"num/den"],...]}`, row-major.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries()
            .map(|(r, c, v)| json!([r, c, rational_json(v)]))
            .collect();
        json!({ "rows": self.n_rows, "cols": self.n_cols, "entries": entries })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |what: &str| Error::InvalidArgument(format!("sparse matrix JSON: {what}"));
        let n_rows = value["rows"].as_u64().ok_or_else(|| bad("rows"))? as usize;
        let n_cols = value["cols"].as_u64().ok_or_else(|| bad("cols"))? as usize;
        let entries = value["entries"].as_array().ok_or_else(|| bad("entries"))?;
        let mut triplets = Vec::with_capacity(entries.len());
        for e in entries {
            let r = e[0].as_u64().ok_or_else(|| bad("row index"))? as usize;
            let c = e[1].as_u64().ok_or_else(|| bad("col index"))? as usize;
            let v = parse_rational(e[2].as_str().ok_or_else(|| bad("value"))?)?;
            triplets.push((r, c, v));
        }
        Self::from_triplets(n_rows, n_cols, triplets)
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare { rows: self.n_rows, cols: self.n_cols })
        }
    }
}

fn merge_rows(
    a: &[(usize, Rational)],
    b: &[(usize, Rational)],
    negate: bool,
) -> Vec<(usize, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = if negate { -b[j].1.clone() } else { b[j].1.clone() };
            out.push((b[j].0, v));
            j += 1;
        } else {
            let v = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
