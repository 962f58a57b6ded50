//! Exact/float linear algebra: dense matrices, reduced row echelon form,
//! kernels, inverses, characteristic polynomials, real-spectrum tests, and
//! canonical subspaces.
//!
//! Everything is sized for "desk scale" inputs (dimension ≤ ~20), so the
//! algorithms favour exactness and clarity over asymptotics: Gauss–Jordan
//! elimination, Faddeev–LeVerrier characteristic polynomials, Sturm chains
//! for real-root counting, and Durand–Kerner iteration in float mode.

use crate::error::{Error, Result};
use crate::scalar::{check_uniform_mode, tolerance, Mode, Scalar};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

// ---------------------------------------------------------------------------
// vectors
// ---------------------------------------------------------------------------

/// Zero vector of length `n`.
pub fn vec_zero(n: usize, mode: Mode) -> Vec<Scalar> {
    (0..n).map(|_| Scalar::zero(mode)).collect()
}

/// Standard basis vector `e_i` (0-based) of length `n`.
pub fn vec_unit(n: usize, i: usize, mode: Mode) -> Vec<Scalar> {
    let mut v = vec_zero(n, mode);
    v[i] = Scalar::one(mode);
    v
}

/// Componentwise sum.
pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Componentwise difference.
pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Scalar multiple.
pub fn vec_scale(c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| c * x).collect()
}

/// Negation.
pub fn vec_neg(a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| -x).collect()
}

/// Plain dot product (no metric).
pub fn vec_dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len());
    let mode = if a.is_empty() { Mode::Exact } else { a[0].mode() };
    let mut acc = Scalar::zero(mode);
    for (x, y) in a.iter().zip(b) {
        acc += &(x * y);
    }
    acc
}

/// True if every entry is zero (τ-aware in float mode).
pub fn vec_is_zero(a: &[Scalar]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// τ-aware equality of vectors.
pub fn vec_eq(a: &[Scalar], b: &[Scalar]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x == y)
}

/// Render a vector as a combination of labelled basis vectors, e.g.
/// `"2 e1 - 1/2 e3"`; `"0"` for the zero vector.
pub fn vec_pretty(a: &[Scalar], labels: &[String]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let name = labels
            .get(i)
            .cloned()
            .unwrap_or_else(|| format!("e{}", i + 1));
        parts.push(format!("{c} {name}"));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ").replace("+ -", "- ")
    }
}

// ---------------------------------------------------------------------------
// matrices
// ---------------------------------------------------------------------------

/// Dense row-major matrix of [`Scalar`]s.  The mode is stored explicitly so
/// 0×0 and 0×n matrices (needed for 0-dimensional algebras) stay well-typed.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    mode: Mode,
    data: Vec<Scalar>,
}

impl Matrix {
    /// All-zero matrix.
    pub fn zeros(rows: usize, cols: usize, mode: Mode) -> Self {
        Matrix {
            rows,
            cols,
            mode,
            data: vec_zero(rows * cols, mode),
        }
    }

    /// Identity matrix.
    pub fn identity(n: usize, mode: Mode) -> Self {
        let mut m = Matrix::zeros(n, n, mode);
        for i in 0..n {
            m.set(i, i, Scalar::one(mode));
        }
        m
    }

    /// Build from rows; validates rectangularity and uniform mode.
    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize, mode: Mode) -> Result<Self> {
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a {}-column matrix",
                    r.len(),
                    cols
                )));
            }
            check_uniform_mode(mode, r.iter())?;
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            mode,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Build an n×n matrix from a closure over (row, col).
    pub fn from_fn(rows: usize, cols: usize, mode: Mode, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut m = Matrix::zeros(rows, cols, mode);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert_eq!(v.mode(), self.mode, "mode mismatch in Matrix::set");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.mode, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            mode: self.mode,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            mode: self.mode,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            mode: self.mode,
            data: self.data.iter().map(|a| c * a).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            mode: self.mode,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols, self.mode);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + &(a * other.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix–vector product.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "mul_vec shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero(self.mode);
                for j in 0..self.cols {
                    acc += &(self.get(i, j) * &v[j]);
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut acc = Scalar::zero(self.mode);
        for i in 0..self.rows {
            acc += self.get(i, i);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// τ-aware entrywise equality.
    pub fn approx_eq(&self, other: &Matrix) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a == b)
    }

    /// Commutator `AB − BA`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.matmul(other).sub(&other.matmul(self))
    }

    /// Reduced row echelon form; returns the echelon matrix and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // pick a pivot row: in float mode, the entry of largest magnitude
            // (for stability); in exact mode the first nonzero entry.
            let mut pivot = None;
            match m.mode {
                Mode::Exact => {
                    for i in r..m.rows {
                        if !m.get(i, c).is_zero() {
                            pivot = Some(i);
                            break;
                        }
                    }
                }
                Mode::Float => {
                    let mut best = tolerance();
                    for i in r..m.rows {
                        let a = m.get(i, c).to_f64().abs();
                        if a > best {
                            best = a;
                            pivot = Some(i);
                        }
                    }
                }
            }
            let Some(p) = pivot else { continue };
            if p != r {
                for j in 0..m.cols {
                    let a = m.get(r, j).clone();
                    let b = m.get(p, j).clone();
                    m.set(r, j, b);
                    m.set(p, j, a);
                }
            }
            let inv = m.get(r, c).recip().expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in 0..m.cols {
                        let v = m.get(i, j) - &(&f * m.get(r, j));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        // flush sub-τ residue so float echelon forms are canonical
        if m.mode == Mode::Float {
            for v in m.data.iter_mut() {
                if v.is_zero() {
                    *v = Scalar::zero(Mode::Float);
                }
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space `{x : Ax = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec_zero(self.cols, self.mode);
            v[free] = Scalar::one(self.mode);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free);
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `Ax = b` (free variables set to zero), if consistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Matrix::zeros(self.rows, self.cols + 1, self.mode);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // a pivot in the constant column: inconsistent
        }
        let mut x = vec_zero(self.cols, self.mode);
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Inverse; error if singular.
    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n, self.mode);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one(self.mode));
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::InvalidInput("matrix is singular".into()));
        }
        Ok(Matrix::from_fn(n, n, self.mode, |i, j| r.get(i, n + j).clone()))
    }

    /// Determinant via fraction-free-ish Gaussian elimination with row swaps.
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one(self.mode);
        for c in 0..n {
            let mut pivot = None;
            for i in c..n {
                if !m.get(i, c).is_zero() {
                    pivot = Some(i);
                    break;
                }
            }
            let Some(p) = pivot else {
                return Scalar::zero(self.mode);
            };
            if p != c {
                det = -det;
                for j in 0..n {
                    let a = m.get(c, j).clone();
                    let b = m.get(p, j).clone();
                    m.set(c, j, b);
                    m.set(p, j, a);
                }
            }
            det = &det * m.get(c, c);
            let inv = m.get(c, c).recip().expect("nonzero pivot");
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) * &inv;
                for j in c..n {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Leading principal minors, sizes 1..=n.
    pub fn leading_principal_minors(&self) -> Vec<Scalar> {
        assert_eq!(self.rows, self.cols);
        (1..=self.rows)
            .map(|k| Matrix::from_fn(k, k, self.mode, |i, j| self.get(i, j).clone()).det())
            .collect()
    }

    /// Characteristic polynomial of a square matrix, coefficients ascending:
    /// `p(λ) = c[0] + c[1]λ + … + c[n]λⁿ` with `c[n] = 1`
    /// (Faddeev–LeVerrier recursion, division-free apart from small integers).
    pub fn char_poly(&self) -> Vec<Scalar> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mode = self.mode;
        let mut coeffs = vec_zero(n + 1, mode);
        coeffs[n] = Scalar::one(mode);
        let mut m = Matrix::identity(n, mode);
        for k in 1..=n {
            let am = self.matmul(&m);
            let ck = -(am.trace() / Scalar::from_int(k as i64, mode));
            coeffs[n - k] = ck.clone();
            m = am;
            for i in 0..n {
                let v = m.get(i, i) + &ck;
                m.set(i, i, v);
            }
        }
        coeffs
    }

    /// Signature (p, m, z) of a symmetric matrix: the counts of positive,
    /// negative, and zero entries after congruence diagonalization.
    pub fn signature(&self) -> Result<(usize, usize, usize)> {
        if !self.is_symmetric() {
            return Err(Error::InvalidInput("signature of a non-symmetric matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let sym_swap = |a: &mut Matrix, i: usize, j: usize| {
            for c in 0..n {
                let x = a.get(i, c).clone();
                let y = a.get(j, c).clone();
                a.set(i, c, y);
                a.set(j, c, x);
            }
            for r in 0..n {
                let x = a.get(r, i).clone();
                let y = a.get(r, j).clone();
                a.set(r, i, y);
                a.set(r, j, x);
            }
        };
        let sym_add = |a: &mut Matrix, dst: usize, src: usize, f: &Scalar| {
            for c in 0..n {
                let v = a.get(dst, c) + &(f * a.get(src, c));
                a.set(dst, c, v);
            }
            for r in 0..n {
                let v = a.get(r, dst) + &(f * a.get(r, src));
                a.set(r, dst, v);
            }
        };
        for i in 0..n {
            if a.get(i, i).is_zero() {
                if let Some(j) = (i + 1..n).find(|&j| !a.get(j, j).is_zero()) {
                    sym_swap(&mut a, i, j);
                } else if let Some(j) = (i + 1..n).find(|&j| !a.get(i, j).is_zero()) {
                    let one = Scalar::one(a.mode);
                    sym_add(&mut a, i, j, &one);
                } else {
                    continue; // genuinely isolated zero direction
                }
            }
            let d = a.get(i, i).clone();
            let dinv = d.recip().expect("nonzero diagonal");
            for j in i + 1..n {
                if !a.get(j, i).is_zero() {
                    let f = -(a.get(j, i) * &dinv);
                    sym_add(&mut a, j, i, &f);
                }
            }
        }
        let mut pos = 0;
        let mut neg = 0;
        let mut zero = 0;
        for i in 0..n {
            let d = a.get(i, i);
            if d.is_positive() {
                pos += 1;
            } else if d.is_negative() {
                neg += 1;
            } else {
                zero += 1;
            }
        }
        Ok((pos, neg, zero))
    }

    /// All leading principal minors strictly positive (positive definiteness
    /// for symmetric input).
    pub fn is_positive_definite(&self) -> bool {
        self.is_symmetric() && self.leading_principal_minors().iter().all(|m| m.is_positive())
    }

    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{}", self.get(i, j))).collect();
            out.push_str(&format!("[{}]\n", row.join(", ")));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// polynomials (ascending coefficient vectors)
// ---------------------------------------------------------------------------

fn poly_trim(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_deg(p: &[BigRational]) -> usize {
    p.len() - 1
}

fn poly_derivative(p: &[BigRational]) -> Vec<BigRational> {
    if p.len() <= 1 {
        return vec![BigRational::zero()];
    }
    (1..p.len())
        .map(|i| &p[i] * BigRational::from(BigInt::from(i as i64)))
        .collect()
}

fn poly_divmod(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let dd = poly_deg(den);
    assert!(!den[dd].is_zero(), "division by zero polynomial");
    let mut rem = num.to_vec();
    poly_trim(&mut rem);
    if poly_deg(&rem) < dd || (rem.len() == 1 && rem[0].is_zero()) {
        return (vec![BigRational::zero()], rem);
    }
    let mut quot = vec![BigRational::zero(); poly_deg(&rem) - dd + 1];
    while poly_deg(&rem) >= dd && !(rem.len() == 1 && rem[0].is_zero()) {
        let shift = poly_deg(&rem) - dd;
        let f = &rem[poly_deg(&rem)] / &den[dd];
        quot[shift] = f.clone();
        for i in 0..=dd {
            let idx = shift + i;
            let sub = &f * &den[i];
            rem[idx] = &rem[idx] - sub;
        }
        poly_trim(&mut rem);
        if rem.len() == 1 && rem[0].is_zero() {
            break;
        }
    }
    (quot, rem)
}

fn poly_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    poly_trim(&mut x);
    poly_trim(&mut y);
    while !(y.len() == 1 && y[0].is_zero()) {
        let (_, r) = poly_divmod(&x, &y);
        x = y;
        y = r;
    }
    // monic normalization
    let lead = x[poly_deg(&x)].clone();
    if !lead.is_zero() && !lead.is_one() {
        for c in x.iter_mut() {
            *c = &*c / &lead;
        }
    }
    x
}

fn sign_of(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Count of distinct real roots of `p` over all of ℝ via a Sturm chain
/// evaluated at ±∞ (leading-coefficient signs).
fn sturm_distinct_real_roots(p: &[BigRational]) -> usize {
    let mut chain: Vec<Vec<BigRational>> = Vec::new();
    let mut p0 = p.to_vec();
    poly_trim(&mut p0);
    if poly_deg(&p0) == 0 {
        return 0;
    }
    let p1 = poly_derivative(&p0);
    chain.push(p0);
    chain.push(p1);
    loop {
        let k = chain.len();
        let (_, mut r) = poly_divmod(&chain[k - 2], &chain[k - 1]);
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
        for c in r.iter_mut() {
            *c = -&*c;
        }
        chain.push(r);
    }
    let variations = |at_pos_inf: bool| -> usize {
        let mut signs = Vec::new();
        for q in &chain {
            let d = poly_deg(q);
            let lead = sign_of(&q[d]);
            let s = if at_pos_inf {
                lead
            } else if d % 2 == 0 {
                lead
            } else {
                -lead
            };
            if s != 0 {
                signs.push(s);
            }
        }
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    variations(false) - variations(true)
}

/// Exact test: does `p` (rational coefficients) have only real roots?
/// Decided on the squarefree part: all roots real ⟺ the number of distinct
/// real roots equals the degree of `p / gcd(p, p′)`.
pub fn all_roots_real_exact(coeffs: &[Scalar]) -> Result<bool> {
    let p: Vec<BigRational> = coeffs
        .iter()
        .map(|c| {
            c.as_rational()
                .cloned()
                .ok_or_else(|| Error::ModeMismatch("exact root test on float coefficients".into()))
        })
        .collect::<Result<_>>()?;
    let mut p0 = p.clone();
    poly_trim(&mut p0);
    if poly_deg(&p0) == 0 {
        return Ok(true);
    }
    let g = poly_gcd(&p0, &poly_derivative(&p0));
    let (sf, rem) = poly_divmod(&p0, &g);
    debug_assert!(rem.len() == 1 && rem[0].is_zero());
    let mut sf = sf;
    poly_trim(&mut sf);
    Ok(sturm_distinct_real_roots(&sf) == poly_deg(&sf))
}

/// All roots of `p` as (root, multiplicity), **provided** the polynomial
/// splits over ℚ; otherwise `Err(NeedsFloat)`.  Rational-root search with
/// deflation: candidates are ±(divisors of the constant term)/(divisors of
/// the leading term) after clearing denominators.
pub fn rational_roots_exact(coeffs: &[Scalar]) -> Result<Vec<(Scalar, usize)>> {
    let mut p: Vec<BigRational> = coeffs
        .iter()
        .map(|c| {
            c.as_rational()
                .cloned()
                .ok_or_else(|| Error::ModeMismatch("exact root search on float coefficients".into()))
        })
        .collect::<Result<_>>()?;
    poly_trim(&mut p);
    let mut roots: Vec<(BigRational, usize)> = Vec::new();

    // strip zero roots
    let mut zero_mult = 0usize;
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((BigRational::zero(), zero_mult));
    }

    while poly_deg(&p) > 0 {
        // clear denominators → integer polynomial
        let mut den_lcm = BigInt::one();
        for c in &p {
            den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&den_lcm / c.denom())).collect();
        let a0 = ints[0].magnitude().clone();
        let an = ints[ints.len() - 1].magnitude().clone();
        let mut found = None;
        'search: for pdiv in divisors(&BigInt::from_biguint(num_bigint::Sign::Plus, a0)) {
            for qdiv in divisors(&BigInt::from_biguint(num_bigint::Sign::Plus, an.clone())) {
                for sgn in [1i64, -1] {
                    let cand = BigRational::new(&pdiv * BigInt::from(sgn), qdiv.clone());
                    if poly_eval_rat(&p, &cand).is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        match found {
            None => {
                return Err(Error::NeedsFloat(format!(
                    "characteristic polynomial has an irrational root (residual degree {})",
                    poly_deg(&p)
                )))
            }
            Some(r) => {
                let mut mult = 0usize;
                loop {
                    // synthetic division by (λ − r)
                    let lin = vec![-&r, BigRational::one()];
                    let (q, rem) = poly_divmod(&p, &lin);
                    if rem.len() == 1 && rem[0].is_zero() {
                        p = q;
                        poly_trim(&mut p);
                        mult += 1;
                        if poly_deg(&p) == 0 {
                            break;
                        }
                    } else {
                        break;
                    }
                }
                roots.push((r, mult));
            }
        }
    }
    Ok(roots.into_iter().map(|(r, m)| (Scalar::Exact(r), m)).collect())
}

fn poly_eval_rat(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.magnitude().clone();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut divs = Vec::new();
    let mut i = num_bigint::BigUint::from(1u32);
    loop {
        let isq = &i * &i;
        if isq > n {
            break;
        }
        if (&n % &i).is_zero() {
            divs.push(BigInt::from_biguint(num_bigint::Sign::Plus, i.clone()));
            let j = &n / &i;
            if j != i {
                divs.push(BigInt::from_biguint(num_bigint::Sign::Plus, j));
            }
        }
        i += 1u32;
    }
    divs.sort();
    divs
}

/// Durand–Kerner simultaneous root iteration for float-mode polynomials.
/// Returns all complex roots of the monic normalization.
pub fn durand_kerner(coeffs: &[Scalar]) -> Vec<Complex64> {
    let c: Vec<f64> = coeffs.iter().map(|s| s.to_f64()).collect();
    let deg = c.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    let lead = c[deg];
    let monic: Vec<Complex64> = c.iter().map(|x| Complex64::new(x / lead, 0.0)).collect();
    let eval = |z: Complex64| {
        let mut acc = Complex64::new(0.0, 0.0);
        for k in (0..=deg).rev() {
            acc = acc * z + monic[k];
        }
        acc
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..deg).map(|k| seed.powu(k as u32 + 1)).collect();
    for _ in 0..500 {
        let mut delta: f64 = 0.0;
        let snapshot = roots.clone();
        for i in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for (j, &rj) in snapshot.iter().enumerate() {
                if j != i {
                    denom *= snapshot[i] - rj;
                }
            }
            if denom.norm() < 1e-300 {
                continue;
            }
            let step = eval(snapshot[i]) / denom;
            roots[i] = snapshot[i] - step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 {
            break;
        }
    }
    roots
}

/// Real eigenvalues with eigenspaces.  Exact mode requires the spectrum to be
/// rational (`NeedsFloat` otherwise).  Float mode clusters Durand–Kerner
/// roots and treats |Im| ≤ τ as real; a genuinely complex root is an error
/// for callers that need a real decomposition.
pub fn real_eigen_decomposition(m: &Matrix) -> Result<Vec<(Scalar, Vec<Vec<Scalar>>)>> {
    assert_eq!(m.rows, m.cols);
    let cp = m.char_poly();
    let mode = m.mode();
    let lambdas: Vec<Scalar> = match mode {
        Mode::Exact => rational_roots_exact(&cp)?.into_iter().map(|(r, _)| r).collect(),
        Mode::Float => {
            let roots = durand_kerner(&cp);
            let tau = tolerance();
            for r in &roots {
                if r.im.abs() > tau.max(1e-7) {
                    return Err(Error::InvalidInput(format!(
                        "complex eigenvalue {}+{}i: no real eigen-decomposition",
                        r.re, r.im
                    )));
                }
            }
            // cluster τ-close real parts
            let mut vals: Vec<f64> = roots.iter().map(|r| r.re).collect();
            vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut reps: Vec<f64> = Vec::new();
            for v in vals {
                if reps.last().is_none_or(|r| (v - r).abs() > 1e-6) {
                    reps.push(v);
                }
            }
            reps.into_iter().map(Scalar::from_f64).collect()
        }
    };
    let mut out = Vec::new();
    for lam in lambdas {
        let shifted = m.sub(&Matrix::identity(m.rows, mode).scale(&lam));
        let ker = shifted.kernel();
        if !ker.is_empty() {
            out.push((lam, ker));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// subspaces
// ---------------------------------------------------------------------------

/// A linear subspace of ℝⁿ, stored as the reduced-row-echelon basis of its
/// span so equality of subspaces is literal equality of representations.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    pub ambient_dim: usize,
    mode: Mode,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of the given vectors (any list, dependencies allowed).
    pub fn from_spanning(ambient_dim: usize, mode: Mode, vectors: &[Vec<Scalar>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "spanning vector of wrong length");
        }
        if vectors.is_empty() {
            return Subspace {
                ambient_dim,
                mode,
                basis: Vec::new(),
                pivots: Vec::new(),
            };
        }
        let m = Matrix::from_rows(vectors.to_vec(), ambient_dim, mode).expect("uniform rows");
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i)).collect();
        Subspace {
            ambient_dim,
            mode,
            basis,
            pivots,
        }
    }

    /// The zero subspace.
    pub fn zero(ambient_dim: usize, mode: Mode) -> Self {
        Subspace::from_spanning(ambient_dim, mode, &[])
    }

    /// All of ℝⁿ.
    pub fn full(ambient_dim: usize, mode: Mode) -> Self {
        let vs: Vec<Vec<Scalar>> = (0..ambient_dim).map(|i| vec_unit(ambient_dim, i, mode)).collect();
        Subspace::from_spanning(ambient_dim, mode, &vs)
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Echelon basis rows (canonical).
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating along the echelon basis; zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut w = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let f = w[p].clone();
                for j in 0..self.ambient_dim {
                    w[j] = &w[j] - &(&f * &self.basis[row][j]);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vec_is_zero(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis (`None` if not a member).
    /// Because the basis is reduced, the coordinate on basis row `i` is just
    /// the entry of `v` at that row's pivot column.
    pub fn coords_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Vector with the given echelon-basis coordinates.
    pub fn from_coords(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        let mut v = vec_zero(self.ambient_dim, self.mode);
        for (c, b) in coords.iter().zip(&self.basis) {
            v = vec_add(&v, &vec_scale(c, b));
        }
        v
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    /// Span of the union.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.clone());
        Subspace::from_spanning(self.ambient_dim, self.mode, &vs)
    }

    /// Intersection (kernel method: solve `A s = B t`).
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let da = self.dim();
        let db = other.dim();
        if da == 0 || db == 0 {
            return Subspace::zero(self.ambient_dim, self.mode);
        }
        // columns: coefficients (s, t); rows: ambient coordinates
        let m = Matrix::from_fn(self.ambient_dim, da + db, self.mode, |i, j| {
            if j < da {
                self.basis[j][i].clone()
            } else {
                -&other.basis[j - da][i]
            }
        });
        let vectors: Vec<Vec<Scalar>> = m
            .kernel()
            .into_iter()
            .map(|st| {
                let mut v = vec_zero(self.ambient_dim, self.mode);
                for (j, b) in self.basis.iter().enumerate() {
                    v = vec_add(&v, &vec_scale(&st[j], b));
                }
                v
            })
            .collect();
        Subspace::from_spanning(self.ambient_dim, self.mode, &vectors)
    }

    /// Orthogonal complement with respect to a bilinear form `B`:
    /// `{x : bᵀ B x = 0 for all basis vectors b}`.
    pub fn orthogonal_complement(&self, b: &Matrix) -> Subspace {
        assert_eq!(b.rows, self.ambient_dim);
        assert_eq!(b.cols, self.ambient_dim);
        if self.dim() == 0 {
            return Subspace::full(self.ambient_dim, self.mode);
        }
        let rows: Vec<Vec<Scalar>> = self
            .basis
            .iter()
            .map(|w| b.transpose().mul_vec(w)) // row w
            .collect();
        let m = Matrix::from_rows(rows, self.ambient_dim, self.mode).expect("uniform");
        Subspace::from_spanning(self.ambient_dim, self.mode, &m.kernel())
    }

    /// Pretty set of basis vectors.
    pub fn pretty(&self, labels: &[String]) -> String {
        if self.dim() == 0 {
            return "{0}".to_string();
        }
        let parts: Vec<String> = self.basis.iter().map(|v| vec_pretty(v, labels)).collect();
        format!("span{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v, Mode::Exact)
    }
    fn q(p: i64, d: i64) -> Scalar {
        Scalar::ratio(p, d, Mode::Exact)
    }

    #[test]
    fn rref_solve_kernel_inverse() {
        let a = Matrix::from_rows(
            vec![
                vec![s(1), s(2), s(3)],
                vec![s(2), s(4), s(6)],
                vec![s(1), s(0), s(1)],
            ],
            3,
            Mode::Exact,
        )
        .unwrap();
        assert_eq!(a.rank(), 2);
        let ker = a.kernel();
        assert_eq!(ker.len(), 1);
        for k in &ker {
            assert!(vec_is_zero(&a.mul_vec(k)));
        }
        let b = vec![s(6), s(12), s(2)];
        let x = a.solve(&b).unwrap();
        assert!(vec_eq(&a.mul_vec(&x), &b));
        let inv_target = Matrix::from_rows(
            vec![vec![s(2), s(1)], vec![s(1), s(1)]],
            2,
            Mode::Exact,
        )
        .unwrap();
        let inv = inv_target.inverse().unwrap();
        assert!(inv_target.matmul(&inv).approx_eq(&Matrix::identity(2, Mode::Exact)));
        assert_eq!(inv_target.det(), s(1));
    }

    #[test]
    fn char_poly_of_companion_like_matrix() {
        // [[0,-1],[1,0]] has char poly λ²+1
        let j = Matrix::from_rows(vec![vec![s(0), s(-1)], vec![s(1), s(0)]], 2, Mode::Exact).unwrap();
        let cp = j.char_poly();
        assert_eq!(cp, vec![s(1), s(0), s(1)]);
        assert!(!all_roots_real_exact(&cp).unwrap());
        // [[2,0],[0,3]] → (λ−2)(λ−3)
        let d = Matrix::from_rows(vec![vec![s(2), s(0)], vec![s(0), s(3)]], 2, Mode::Exact).unwrap();
        let roots = rational_roots_exact(&d.char_poly()).unwrap();
        let vals: Vec<i64> = roots
            .iter()
            .map(|(r, m)| {
                assert_eq!(*m, 1);
                r.to_f64() as i64
            })
            .collect();
        assert!(vals.contains(&2) && vals.contains(&3));
        assert!(all_roots_real_exact(&d.char_poly()).unwrap());
    }

    #[test]
    fn rational_roots_with_fractional_root() {
        // (2λ−1)(λ+3) = 2λ²+5λ−3
        let cp = vec![s(-3), s(5), s(2)];
        let roots = rational_roots_exact(&cp).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().any(|(r, _)| *r == q(1, 2)));
        assert!(roots.iter().any(|(r, _)| *r == s(-3)));
    }

    #[test]
    fn sturm_counts_match() {
        // λ³ − λ: roots −1, 0, 1 all real
        assert!(all_roots_real_exact(&[s(0), s(-1), s(0), s(1)]).unwrap());
        // λ² + λ + 1: complex pair
        assert!(!all_roots_real_exact(&[s(1), s(1), s(1)]).unwrap());
        // (λ−1)² multiple root, still all real
        assert!(all_roots_real_exact(&[s(1), s(-2), s(1)]).unwrap());
    }

    #[test]
    fn durand_kerner_finds_roots() {
        // (λ−1)(λ−2)(λ+3) = λ³ − 7λ + 6
        let coeffs = [
            Scalar::from_f64(6.0),
            Scalar::from_f64(-7.0),
            Scalar::from_f64(0.0),
            Scalar::from_f64(1.0),
        ];
        let mut roots: Vec<f64> = durand_kerner(&coeffs).iter().map(|c| c.re).collect();
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((roots[0] + 3.0).abs() < 1e-9);
        assert!((roots[1] - 1.0).abs() < 1e-9);
        assert!((roots[2] - 2.0).abs() < 1e-9);
    }

    #[test]
    fn signature_of_indefinite_form() {
        let m = Matrix::from_rows(
            vec![
                vec![s(0), s(1), s(0)],
                vec![s(1), s(0), s(0)],
                vec![s(0), s(0), s(-2)],
            ],
            3,
            Mode::Exact,
        )
        .unwrap();
        assert_eq!(m.signature().unwrap(), (1, 2, 0));
        let id = Matrix::identity(4, Mode::Exact);
        assert_eq!(id.signature().unwrap(), (4, 0, 0));
        assert!(id.is_positive_definite());
    }

    #[test]
    fn subspace_algebra() {
        let v1 = vec![s(1), s(1), s(0)];
        let v2 = vec![s(0), s(1), s(1)];
        let w = Subspace::from_spanning(3, Mode::Exact, &[v1.clone(), v2.clone()]);
        assert_eq!(w.dim(), 2);
        assert!(w.contains(&vec![s(1), s(2), s(1)]));
        assert!(!w.contains(&vec![s(1), s(0), s(0)]));
        let coords = w.coords_of(&vec![s(1), s(2), s(1)]).unwrap();
        assert!(vec_eq(&w.from_coords(&coords), &vec![s(1), s(2), s(1)]));

        let u = Subspace::from_spanning(3, Mode::Exact, &[vec![s(1), s(0), s(0)], vec![s(0), s(1), s(0)]]);
        let cap = w.intersect(&u);
        assert_eq!(cap.dim(), 1);
        assert!(w.contains(&cap.basis()[0]) && u.contains(&cap.basis()[0]));

        let g = Matrix::identity(3, Mode::Exact);
        let perp = w.orthogonal_complement(&g);
        assert_eq!(perp.dim(), 1);
        assert!(vec_dot(&perp.basis()[0], &v1).is_zero());
        assert!(vec_dot(&perp.basis()[0], &v2).is_zero());
    }

    #[test]
    fn eigen_decomposition_exact() {
        let a = Matrix::from_rows(
            vec![vec![s(2), s(1)], vec![s(0), s(3)]],
            2,
            Mode::Exact,
        )
        .unwrap();
        let eig = real_eigen_decomposition(&a).unwrap();
        assert_eq!(eig.len(), 2);
        for (lam, vecs) in eig {
            for v in vecs {
                let av = a.mul_vec(&v);
                assert!(vec_eq(&av, &vec_scale(&lam, &v)));
            }
        }
    }
}
