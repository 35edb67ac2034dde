//! Dense exact matrices over ℚ(ζ_l).
//!
//! Vectors are rows and operators act on the right, so `v·A` is the image of
//! `v` under `A`. Kernels are accordingly left null spaces.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::cyclofield::{CycNum, Field};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    ctx: Field,
    data: Vec<CycNum>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|c| c.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = CycNum;
    fn index(&self, (i, j): (usize, usize)) -> &CycNum {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut CycNum {
        &mut self.data[i * self.cols + j]
    }
}

impl Mat {
    pub fn zeros(ctx: &Field, rows: usize, cols: usize) -> Self {
        Mat { rows, cols, ctx: ctx.clone(), data: vec![CycNum::zero(ctx); rows * cols] }
    }

    pub fn identity(ctx: &Field, n: usize) -> Self {
        Self::scalar(ctx, n, &CycNum::one(ctx))
    }

    pub fn scalar(ctx: &Field, n: usize, c: &CycNum) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn diag(ctx: &Field, entries: &[CycNum]) -> Self {
        let mut m = Self::zeros(ctx, entries.len(), entries.len());
        for (i, c) in entries.iter().enumerate() {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_rows(ctx: &Field, rows: Vec<Vec<CycNum>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data: Vec<CycNum> = rows.into_iter().flatten().collect();
        if let Some(bad) = data.iter().find(|x| x.ctx().order() != ctx.order()) {
            return Err(Error::FieldMismatch { left: ctx.order(), right: bad.ctx().order() });
        }
        Ok(Mat { rows: r, cols: c, ctx: ctx.clone(), data })
    }

    pub fn ctx(&self) -> &Field {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[CycNum] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<CycNum>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row-major entries, i.e. the matrix viewed as a vector of length rows·cols.
    pub fn entries(&self) -> &[CycNum] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycNum::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    fn check_shape(&self, other: &Self, what: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{what}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other, "add")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.checked_add(b)).collect::<Result<_>>()?;
        Ok(Mat { data, ..self.clone_shape() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other, "sub")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.checked_sub(b)).collect::<Result<_>>()?;
        Ok(Mat { data, ..self.clone_shape() })
    }

    fn clone_shape(&self) -> Self {
        Mat { rows: self.rows, cols: self.cols, ctx: self.ctx.clone(), data: Vec::new() }
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        Mat { data: self.data.iter().map(|a| a * c).collect(), ..self.clone_shape() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "mul: {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.ctx.order() != other.ctx.order() {
            return Err(Error::FieldMismatch { left: self.ctx.order(), right: other.ctx.order() });
        }
        let mut out = Self::zeros(&self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, k: u64) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("pow of a non-square matrix".into()));
        }
        let mut acc = Self::identity(&self.ctx, self.rows);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[CycNum]) -> Result<Vec<CycNum>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!("vector of length {} against {} rows", v.len(), self.rows)));
        }
        let mut out = vec![CycNum::zero(&self.ctx); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let a = &self[(i, j)];
                if !a.is_zero() {
                    *o += &(vi * a);
                }
            }
        }
        Ok(out)
    }

    /// Returns `c` when `self = c·I`.
    pub fn is_scalar(&self) -> Option<CycNum> {
        if !self.is_square() {
            return None;
        }
        let c = if self.rows == 0 { CycNum::zero(&self.ctx) } else { self[(0, 0)].clone() };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = &self[(i, j)];
                if (i == j && *e != c) || (i != j && !e.is_zero()) {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// Basis of the left null space `{v : v·A = 0}`.
    pub fn kernel(&self) -> Vec<Vec<CycNum>> {
        right_kernel(&self.transpose())
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        rref(&mut m).len()
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::zeros(&self.ctx, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = CycNum::one(&self.ctx);
        }
        let pivots = rref(&mut aug);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        let mut inv = Self::zeros(&self.ctx, n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    pub fn determinant_is_nonzero(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

/// Reduces `m` to reduced row echelon form in place, returning pivot columns.
fn rref(m: &mut Mat) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..m.cols {
                let (a, b) = (p * m.cols + j, r * m.cols + j);
                m.data.swap(a, b);
            }
        }
        let inv = m[(r, c)].inv().expect("pivot is nonzero");
        for j in c..m.cols {
            let v = &m[(r, j)] * &inv;
            m[(r, j)] = v;
        }
        for i in 0..m.rows {
            if i == r || m[(i, c)].is_zero() {
                continue;
            }
            let f = m[(i, c)].clone();
            for j in c..m.cols {
                if m[(r, j)].is_zero() {
                    continue;
                }
                let v = &m[(i, j)] - &(&f * &m[(r, j)]);
                m[(i, j)] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{u : A·u = 0}` (column-vector null space).
fn right_kernel(a: &Mat) -> Vec<Vec<CycNum>> {
    let mut m = a.clone();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![CycNum::zero(&m.ctx); m.cols];
            v[f] = CycNum::one(&m.ctx);
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[(r, f)];
            }
            v
        })
        .collect()
}

/// An incrementally maintained echelon basis of a subspace of `K^n`.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    ctx: Field,
    len: usize,
    /// Basis rows, each normalised to 1 at its pivot.
    rows: Vec<(usize, Vec<CycNum>)>,
}

impl SpanBasis {
    pub fn new(ctx: &Field, len: usize) -> Self {
        SpanBasis { ctx: ctx.clone(), len, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    fn reduce(&self, v: &[CycNum]) -> Vec<CycNum> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &(&f * r);
                }
            }
        }
        v
    }

    /// Adds `v` if it is independent of the current span; reports whether it was.
    pub fn insert(&mut self, v: &[CycNum]) -> Result<bool> {
        if v.len() != self.len {
            return Err(Error::DimensionMismatch(format!("vector of length {} in K^{}", v.len(), self.len)));
        }
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = r[p].inv()?;
        for x in r.iter_mut() {
            *x = &*x * &inv;
        }
        // keep other rows reduced at the new pivot
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        self.rows.push((p, r));
        let _ = &self.ctx;
        Ok(true)
    }

    pub fn contains(&self, v: &[CycNum]) -> bool {
        self.reduce(v).iter().all(CycNum::is_zero)
    }
}

/// Dimension of the linear span of square matrices of a common size, each
/// viewed as a vector of length d².
pub fn span_dim(mats: &[Mat]) -> Result<usize> {
    let Some(first) = mats.first() else {
        return Ok(0);
    };
    let mut basis = SpanBasis::new(first.ctx(), first.rows * first.cols);
    for m in mats {
        if !m.is_square() || m.rows != first.rows {
            return Err(Error::DimensionMismatch("span_dim needs square matrices of one size".into()));
        }
        basis.insert(m.entries())?;
    }
    Ok(basis.dim())
}
