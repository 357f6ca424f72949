//! Dense matrices over a prime field, acting on row vectors.

use std::fmt;

use crate::error::{Error, Result};

/// A `rows × cols` matrix with entries in `𝔽p`. A row vector `x` maps to `x·A`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| !p.is_multiple_of(k))
}

fn reduce(p: u32, v: i64) -> u32 {
    v.rem_euclid(p as i64) as u32
}

fn inverse_mod(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2)
    let (mut base, mut exp, mut acc) = (a as u64, p as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

impl Matrix {
    pub fn new(p: u32, rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidMorphism(format!(
                "{rows}×{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix {
            p,
            rows,
            cols,
            data: entries.iter().map(|&v| reduce(p, v)).collect(),
        })
    }

    /// Builds a matrix from rows; `cols` is needed when there are no rows.
    pub fn from_rows(p: u32, cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::InvalidMorphism(format!(
                "row of length {} in a matrix with {cols} columns",
                r.len()
            )));
        }
        let flat: Vec<i64> = rows.iter().flatten().copied().collect();
        Self::new(p, rows.len(), cols, &flat)
    }

    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        Matrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for k in 0..n {
            m.data[k * n + k] = 1;
        }
        m
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        Ok(())
    }

    /// `self · other`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::CompositionMismatch {
                left: format!("{self:?}"),
                right: format!("{other:?}"),
            });
        }
        let p = self.p as u64;
        let mut out = Matrix::zeros(self.p, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let idx = r * other.cols + c;
                    out.data[idx] = ((out.data[idx] as u64 + a * other.get(k, c) as u64) % p) as u32;
                }
            }
        }
        Ok(out)
    }

    fn zip(&self, other: &Matrix, op: impl Fn(u64, u64) -> u64) -> Result<Matrix> {
        self.same_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::NotParallel {
                left: format!("{self:?}"),
                right: format!("{other:?}"),
            });
        }
        let p = self.p as u64;
        Ok(Matrix {
            p: self.p,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| (op(a as u64, b as u64) % p) as u32)
                .collect(),
        })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        let p = self.p as u64;
        self.zip(other, move |a, b| a + p - b)
    }

    pub fn neg(&self) -> Matrix {
        let p = self.p;
        Matrix {
            data: self.data.iter().map(|&v| (p - v) % p).collect(),
            ..self.clone()
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    /// Side-by-side concatenation; all blocks share the row count `rows`.
    pub fn hstack(p: u32, rows: usize, blocks: &[&Matrix]) -> Result<Matrix> {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(p, rows, cols);
        let mut offset = 0;
        for b in blocks {
            b.same_field(&out)?;
            if b.rows != rows {
                return Err(Error::InvalidMorphism(format!(
                    "block with {} rows in a stack of {rows}",
                    b.rows
                )));
            }
            for r in 0..rows {
                for c in 0..b.cols {
                    out.set(r, offset + c, b.get(r, c));
                }
            }
            offset += b.cols;
        }
        Ok(out)
    }

    /// Stacks blocks on top of each other; all share the column count `cols`.
    pub fn vstack(p: u32, cols: usize, blocks: &[&Matrix]) -> Result<Matrix> {
        let mut out = Matrix::zeros(p, 0, cols);
        for b in blocks {
            b.same_field(&out)?;
            if b.cols != cols {
                return Err(Error::InvalidMorphism(format!(
                    "block with {} columns in a stack of {cols}",
                    b.cols
                )));
            }
            out.data.extend_from_slice(&b.data);
            out.rows += b.rows;
        }
        Ok(out)
    }

    /// Columns `start..end`.
    pub fn columns(&self, start: usize, end: usize) -> Matrix {
        let mut out = Matrix::zeros(self.p, self.rows, end - start);
        for r in 0..self.rows {
            for c in start..end {
                out.set(r, c - start, self.get(r, c));
            }
        }
        out
    }

    /// Rows `start..end`.
    pub fn row_block(&self, start: usize, end: usize) -> Matrix {
        Matrix {
            p: self.p,
            rows: end - start,
            cols: self.cols,
            data: self.data[start * self.cols..end * self.cols].to_vec(),
        }
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let p = self.p as u64;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(found) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if found != row {
                for c in 0..m.cols {
                    let tmp = m.get(row, c);
                    m.set(row, c, m.get(found, c));
                    m.set(found, c, tmp);
                }
            }
            let inv = inverse_mod(m.get(row, col), self.p) as u64;
            for c in 0..m.cols {
                m.set(row, c, (m.get(row, c) as u64 * inv % p) as u32);
            }
            for r in 0..m.rows {
                let factor = m.get(r, col) as u64;
                if r == row || factor == 0 {
                    continue;
                }
                for c in 0..m.cols {
                    let v = (m.get(r, c) as u64 + p * p - factor * m.get(row, c) as u64) % p;
                    m.set(r, c, v as u32);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis (as rows, in reduced echelon form) of `{x : x·A = 0}`.
    pub fn nullspace_basis(&self) -> Matrix {
        let (r, pivots) = self.transpose().rref();
        let n = self.rows;
        let mut is_pivot = vec![false; n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; n];
            v[free] = 1;
            for (j, &pc) in pivots.iter().enumerate() {
                v[pc] = (self.p - r.get(j, free)) % self.p;
            }
            basis.extend(v);
        }
        let k = basis.len() / n.max(1);
        let m = Matrix {
            p: self.p,
            rows: k,
            cols: n,
            data: basis,
        };
        m.rref().0.row_block(0, k)
    }

    /// Basis (as rows, in reduced echelon form) of the image `{x·A}`.
    pub fn colspace_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        r.row_block(0, pivots.len())
    }

    /// `X` with `X · self = b`, if one exists. Free coordinates are set to zero.
    pub fn solve_left(&self, b: &Matrix) -> Result<Option<Matrix>> {
        self.same_field(b)?;
        if b.cols != self.cols {
            return Err(Error::NotParallel {
                left: format!("{b:?}"),
                right: format!("{self:?}"),
            });
        }
        let n = self.rows;
        let k = b.rows;
        let aug = Matrix::hstack(self.p, self.cols, &[&self.transpose(), &b.transpose()])?;
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= n) {
            return Ok(None);
        }
        let mut y = Matrix::zeros(self.p, n, k);
        for (j, &pc) in pivots.iter().enumerate() {
            for c in 0..k {
                y.set(pc, c, r.get(j, n + c));
            }
        }
        Ok(Some(y.transpose()))
    }

    /// `s` with `s · self = id`; exists iff the rank equals the column count.
    pub fn solve_right_inverse(&self) -> Option<Matrix> {
        let id = Matrix::identity(self.p, self.cols);
        self.solve_left(&id).ok().flatten()
    }

    /// The canonical quotient `q: cols → cols − rank` with `self · q = 0`.
    ///
    /// Non-pivot coordinates of the reduced form of `self` become the quotient
    /// basis; each pivot coordinate is expressed through them.
    pub fn cokernel(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut q = Matrix::zeros(self.p, self.cols, free.len());
        for (t, &c) in free.iter().enumerate() {
            q.set(c, t, 1);
        }
        for (j, &pc) in pivots.iter().enumerate() {
            for (t, &c) in free.iter().enumerate() {
                q.set(pc, t, (self.p - r.get(j, c)) % self.p);
            }
        }
        q
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}×{} mod {} {:?}", self.rows, self.cols, self.p, self.to_rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u32, cols: usize, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(p, cols, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn primes() {
        let small: Vec<u32> = (0..20).filter(|&p| is_prime(p)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn ranks() {
        assert_eq!(Matrix::identity(2, 3).rank(), 3);
        assert_eq!(m(2, 2, &[&[1, 0], &[0, 0]]).rank(), 1);
        assert_eq!(m(3, 2, &[&[1, 2], &[2, 1]]).rank(), 1);
        assert_eq!(m(5, 2, &[&[1, 2], &[2, 1]]).rank(), 2);
        assert_eq!(Matrix::zeros(2, 0, 3).rank(), 0);
    }

    #[test]
    fn product_is_written_order() {
        let a = m(2, 2, &[&[1, 1]]);
        let b = m(2, 1, &[&[1], &[0]]);
        assert_eq!(a.mul(&b).unwrap(), m(2, 1, &[&[1]]));
        assert!(matches!(
            a.mul(&Matrix::identity(3, 2)),
            Err(Error::ModulusMismatch(2, 3))
        ));
    }

    #[test]
    fn nullspace_is_killed() {
        let a = m(3, 2, &[&[1, 2], &[2, 1], &[0, 1]]);
        let k = a.nullspace_basis();
        assert_eq!(k.rows(), 3 - a.rank());
        assert!(k.mul(&a).unwrap().is_zero());
        assert_eq!(k.rank(), k.rows());
    }

    #[test]
    fn right_inverse_of_rank_one() {
        let f = m(2, 1, &[&[1], &[1]]);
        let s = f.solve_right_inverse().unwrap();
        assert_eq!(s.mul(&f).unwrap(), Matrix::identity(2, 1));
        assert!(m(2, 2, &[&[1, 1], &[1, 1]]).solve_right_inverse().is_none());
    }

    #[test]
    fn cokernel_kills_image() {
        let d = m(3, 3, &[&[1, 2, 0], &[0, 0, 1]]);
        let q = d.cokernel();
        assert_eq!(q.cols(), 1);
        assert!(d.mul(&q).unwrap().is_zero());
        assert_eq!(q.rank(), 1);
    }

    #[test]
    fn solve_left_solutions() {
        let a = m(5, 3, &[&[1, 0, 2], &[0, 1, 1]]);
        let x = m(5, 2, &[&[3, 4], &[1, 1]]);
        let b = x.mul(&a).unwrap();
        assert_eq!(a.solve_left(&b).unwrap().unwrap(), x);
        assert!(a.solve_left(&m(5, 3, &[&[0, 0, 1]])).unwrap().is_none());
    }
}
