//! PI degree and the exponent lattice of the associated quantum affine space.
//!
//! The quasipolynomial algebra with `XY = q²YX`, `XZ = q⁻²ZX`, `YZ = q²ZY`
//! has the skew-symmetric exponent matrix [`weyl_exponent_matrix`]. Its PI
//! degree is computed two ways: by enumerating the image of the induced map
//! `(ℤ/l)³ → (ℤ/l)³` and from the invariant factors of the matrix.

use std::collections::HashSet;

use num_integer::Integer;
use serde::Serialize;

use crate::cyclofield::MAX_ORDER;
use crate::error::{Error, Result};

/// A square integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMat {
    n: usize,
    data: Vec<i64>,
}

impl IntMat {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("IntMat must be square".into()));
        }
        Ok(IntMat { n, data: rows.concat() })
    }

    pub fn zeros(n: usize) -> Self {
        IntMat { n, data: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn is_skew_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == -self.get(j, i)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, (0..n).map(|k| self.get(i, k) * other.get(k, j)).sum());
            }
        }
        out
    }

    /// Determinant by cofactor expansion (the matrices here are tiny).
    pub fn determinant(&self) -> i64 {
        fn det(m: &[i64], n: usize) -> i64 {
            if n == 0 {
                return 1;
            }
            if n == 1 {
                return m[0];
            }
            let mut acc = 0;
            for col in 0..n {
                let minor: Vec<i64> = (1..n)
                    .flat_map(|i| (0..n).filter(move |&j| j != col).map(move |j| (i, j)))
                    .map(|(i, j)| m[i * n + j])
                    .collect();
                let sign = if col % 2 == 0 { 1 } else { -1 };
                acc += sign * m[col] * det(&minor, n - 1);
            }
            acc
        }
        det(&self.data, self.n)
    }

    fn apply_mod(&self, v: &[i64], l: i64) -> Vec<i64> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum::<i64>().rem_euclid(l)).collect()
    }
}

/// The exponent matrix of the associated quasipolynomial algebra, with rows
/// and columns ordered x < y < z.
pub fn weyl_exponent_matrix() -> IntMat {
    IntMat::from_rows(&[vec![0, 1, -1], vec![-1, 0, 1], vec![1, -1, 0]]).expect("3x3")
}

fn check_order(l: i64) -> Result<()> {
    if l < 2 || l > MAX_ORDER as i64 {
        return Err(Error::InvalidOrder(l));
    }
    Ok(())
}

fn residues(n: usize, l: i64) -> impl Iterator<Item = Vec<i64>> {
    let total = (l as usize).pow(n as u32);
    (0..total).map(move |mut idx| {
        let mut v = vec![0; n];
        for slot in v.iter_mut() {
            *slot = (idx % l as usize) as i64;
            idx /= l as usize;
        }
        v
    })
}

/// Kernel of the induced map `(ℤ/l)ⁿ → (ℤ/l)ⁿ`, by enumeration.
pub fn kernel_residues(h: &IntMat, l: i64) -> Result<Vec<Vec<i64>>> {
    check_order(l)?;
    Ok(residues(h.n, l).filter(|v| h.apply_mod(v, l).iter().all(|&c| c == 0)).collect())
}

/// Size of the image of the induced map `(ℤ/l)ⁿ → (ℤ/l)ⁿ`, by enumeration.
pub fn image_size(h: &IntMat, l: i64) -> Result<usize> {
    check_order(l)?;
    let image: HashSet<Vec<i64>> = residues(h.n, l).map(|v| h.apply_mod(&v, l)).collect();
    Ok(image.len())
}

/// PI degree as the square root of the image size.
pub fn pideg_bruteforce(h: &IntMat, l: i64) -> Result<u64> {
    let size = image_size(h, l)? as u64;
    let root = (size as f64).sqrt().round() as u64;
    if root * root != size {
        return Err(Error::Inconsistent(format!("image size {size} is not a perfect square")));
    }
    Ok(root)
}

/// Smith normal form `U·H·V = D` with `U`, `V` unimodular.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMat,
    pub d: IntMat,
    pub v: IntMat,
}

impl Smith {
    /// Nonzero diagonal entries `d₁ | d₂ | …`.
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.d.n).map(|i| self.d.get(i, i)).filter(|&x| x != 0).collect()
    }
}

fn swap_rows(m: &mut IntMat, a: usize, b: usize) {
    for j in 0..m.n {
        m.data.swap(a * m.n + j, b * m.n + j);
    }
}

fn swap_cols(m: &mut IntMat, a: usize, b: usize) {
    for i in 0..m.n {
        m.data.swap(i * m.n + a, i * m.n + b);
    }
}

/// row_a -= k·row_b
fn row_axpy(m: &mut IntMat, a: usize, b: usize, k: i64) {
    for j in 0..m.n {
        let v = m.get(a, j) - k * m.get(b, j);
        m.set(a, j, v);
    }
}

/// col_a -= k·col_b
fn col_axpy(m: &mut IntMat, a: usize, b: usize, k: i64) {
    for i in 0..m.n {
        let v = m.get(i, a) - k * m.get(i, b);
        m.set(i, a, v);
    }
}

/// Smith normal form by integer row and column reduction.
pub fn smith_normal_form(h: &IntMat) -> Smith {
    let n = h.n;
    let mut d = h.clone();
    let mut u = IntMat::identity(n);
    let mut v = IntMat::identity(n);

    for t in 0..n {
        // pivot: smallest nonzero |entry| in the trailing block
        loop {
            let pivot = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| d.get(i, j) != 0)
                .min_by_key(|&(i, j)| d.get(i, j).abs());
            let Some((pi, pj)) = pivot else {
                return finish(u, d, v);
            };
            swap_rows(&mut d, t, pi);
            swap_rows(&mut u, t, pi);
            swap_cols(&mut d, t, pj);
            swap_cols(&mut v, t, pj);

            let p = d.get(t, t);
            let mut clean = true;
            for i in t + 1..n {
                let k = Integer::div_floor(&d.get(i, t), &p);
                if k != 0 {
                    row_axpy(&mut d, i, t, k);
                    row_axpy(&mut u, i, t, k);
                }
                clean &= d.get(i, t) == 0;
            }
            for j in t + 1..n {
                let k = Integer::div_floor(&d.get(t, j), &p);
                if k != 0 {
                    col_axpy(&mut d, j, t, k);
                    col_axpy(&mut v, j, t, k);
                }
                clean &= d.get(t, j) == 0;
            }
            if !clean {
                continue;
            }
            // the pivot must divide the whole trailing block
            let bad = (t + 1..n).flat_map(|i| (t + 1..n).map(move |j| (i, j))).find(|&(i, j)| d.get(i, j) % p != 0);
            match bad {
                Some((i, _)) => {
                    // fold row i into row t and repeat
                    row_axpy(&mut d, t, i, -1);
                    row_axpy(&mut u, t, i, -1);
                }
                None => break,
            }
        }
        if d.get(t, t) < 0 {
            for j in 0..n {
                d.set(t, j, -d.get(t, j));
                u.set(t, j, -u.get(t, j));
            }
        }
    }
    finish(u, d, v)
}

fn finish(u: IntMat, d: IntMat, v: IntMat) -> Smith {
    Smith { u, d, v }
}

/// Invariant factors of `h`. For skew-symmetric input the Smith diagonal
/// comes in equal pairs `h₁, h₁, h₂, h₂, …` and one entry per pair is
/// returned; otherwise every nonzero diagonal entry is returned.
pub fn smith_invariant_factors(h: &IntMat) -> Vec<i64> {
    let diag = smith_normal_form(h).diagonal();
    if h.is_skew_symmetric() {
        debug_assert!(diag.chunks(2).all(|c| c.len() == 2 && c[0] == c[1]));
        diag.iter().step_by(2).copied().collect()
    } else {
        diag
    }
}

/// `∏ m / gcd(hᵢ, m)` over the invariant factors of `h`.
pub fn pideg_invariant_factors(h: &IntMat, m: i64) -> Result<u64> {
    if m < 2 {
        return Err(Error::InvalidOrder(m));
    }
    Ok(pideg_from_factors(&smith_invariant_factors(h), m))
}

pub fn pideg_from_factors(factors: &[i64], m: i64) -> u64 {
    factors.iter().map(|&hi| (m / hi.gcd(&m)) as u64).product()
}

/// Checks that every triple in `[0, bound]³` with `a ≡ b ≡ c (mod l)` is a
/// non-negative combination of `(l,0,0)`, `(0,l,0)`, `(0,0,l)`, `(1,1,1)`.
pub fn semigroup_generators_check(l: i64, bound: i64) -> Result<bool> {
    check_order(l)?;
    if bound < l {
        return Err(Error::Domain(format!("bound {bound} must be at least l = {l}")));
    }
    for a in 0..=bound {
        for b in (0..=bound).filter(|b| (b - a).rem_euclid(l) == 0) {
            for c in (0..=bound).filter(|c| (c - a).rem_euclid(l) == 0) {
                if semigroup_decompose(l, [a, b, c]).is_none() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Finds `(n, i, j, k)` with `v = n(1,1,1) + l(i,j,k)`, all non-negative.
pub fn semigroup_decompose(l: i64, v: [i64; 3]) -> Option<(i64, i64, i64, i64)> {
    let top = v.iter().copied().min()?;
    (0..=top).find_map(|n| {
        let r = [v[0] - n, v[1] - n, v[2] - n];
        r.iter().all(|x| x % l == 0).then(|| (n, r[0] / l, r[1] / l, r[2] / l))
    })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PiReport {
    pub l: i64,
    pub h_image: u64,
    pub pideg_bruteforce: u64,
    pub invariant_factors: Vec<i64>,
    pub pideg_factors: u64,
    pub pideg_claimed: u64,
}

impl PiReport {
    pub fn consistent(&self) -> bool {
        self.pideg_bruteforce == self.pideg_factors && self.pideg_factors == self.pideg_claimed
    }
}

/// Both PI degree computations for A(α, β, γ) with q² of order `l`.
pub fn pi_report(l: i64) -> Result<PiReport> {
    let h = weyl_exponent_matrix();
    Ok(PiReport {
        l,
        h_image: image_size(&h, l)? as u64,
        pideg_bruteforce: pideg_bruteforce(&h, l)?,
        invariant_factors: smith_invariant_factors(&h),
        pideg_factors: pideg_invariant_factors(&h, l)?,
        pideg_claimed: l as u64,
    })
}
