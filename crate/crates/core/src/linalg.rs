//! Dense exact linear algebra over ℚ(i).
//!
//! Every subspace is stored by the reduced row-echelon form of a basis, which
//! is unique. Two [`Subspace`] values are therefore equal exactly when their
//! basis matrices agree entry for entry, and this is what the derived
//! `PartialEq` compares.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    /// Builds a matrix from a row-major entry list.
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                context: "matrix entries",
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Same as [`Matrix::from_rows`] with an explicit column count, so that
    /// zero-row matrices keep their width.
    pub fn from_rows_with_cols(cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        assert!(rows.iter().all(|row| row.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn diag(entries: &[Scalar]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    /// The matrix unit `E_{ij}` (zero-based indices).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        m.set(i, j, Scalar::one());
        m
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

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(Scalar::is_real)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Scalar::conj).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(Scalar::zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "matrix-vector size mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// The commutator `AB - BA`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                context: "vstack",
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                context: "hstack",
                expected: self.rows,
                found: other.rows,
            });
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend(self.row(i).iter().cloned());
            data.extend(other.row(i).iter().cloned());
        }
        Ok(Matrix {
            rows: self.rows,
            cols,
            data,
        })
    }

    /// Leading principal `k×k` block.
    pub fn leading_block(&self, k: usize) -> Matrix {
        let mut m = Matrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            let pivot_row: Vec<Scalar> = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    if pivot_row[j].is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&factor * &pivot_row[j]);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref_pivots().1.len()
    }

    /// Exact determinant by elimination with row swaps.
    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = &det * &pivot;
            let inv = pivot.inv().unwrap();
            for i in c + 1..n {
                let factor = m.get(i, c) * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m.get(i, j) - &(&factor * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n))?;
        let (r, pivots) = aug.rref_pivots();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Ok(None);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(Some(inv))
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product size mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.data[i * rhs.cols + j] += &(a * b);
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .row_vecs()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect();
        write!(f, "{rows:?}")
    }
}

/// `rref(m)` as the (matrix, rank) pair.
pub fn rref(m: &Matrix) -> (Matrix, usize) {
    let (r, pivots) = m.rref_pivots();
    (r, pivots.len())
}

/// A linear subspace of `Scalar^n`, held as its reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
            pivots: vec![],
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let (r, pivots) = m.rref_pivots();
        let rank = pivots.len();
        let basis = Matrix::from_rows_with_cols(
            m.cols(),
            (0..rank).map(|i| r.row(i).to_vec()).collect(),
        );
        Subspace {
            ambient_dim: m.cols(),
            basis,
            pivots,
        }
    }

    /// Span of a list of vectors. Panics if a vector has the wrong length.
    pub fn span<V: AsRef<[Scalar]>>(ambient_dim: usize, vectors: &[V]) -> Self {
        let rows = vectors.iter().map(|v| v.as_ref().to_vec()).collect();
        Subspace::row_space(&Matrix::from_rows_with_cols(ambient_dim, rows))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// The canonical basis matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs().map(<[Scalar]>::to_vec).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: usize, context: &'static str) -> Result<()> {
        if self.ambient_dim != other {
            return Err(Error::DimensionMismatch {
                context,
                expected: self.ambient_dim,
                found: other,
            });
        }
        Ok(())
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the subspace. For an echelon basis they are just the pivot entries.
    pub fn coords_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let rebuilt = self.combine(&coords);
        (rebuilt.as_slice() == v).then_some(coords)
    }

    /// `Σ coords[k] · basis[k]`.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.ambient_dim];
        for (k, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.basis.row(k)) {
                if !b.is_zero() {
                    *o += &(c * b);
                }
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.coords_of(v).is_some()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.ambient_dim == self.ambient_dim
            && other.basis.row_vecs().all(|r| self.contains_vector(r))
    }

    /// Linear equations cutting out the subspace: rows `y` with `y·x = 0`
    /// for exactly the members `x`.
    pub fn constraints(&self) -> Matrix {
        kernel(&self.basis).basis.clone()
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient_dim, "subspace intersection")?;
        let stacked = self.constraints().vstack(&other.constraints())?;
        Ok(kernel(&stacked))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient_dim, "subspace sum")?;
        Ok(Subspace::row_space(&self.basis.vstack(&other.basis)?))
    }

    pub fn equals(&self, other: &Subspace) -> bool {
        self == other
    }

    /// Image of the subspace under a linear map given as a matrix acting on
    /// column vectors.
    pub fn image_under(&self, map: &Matrix) -> Subspace {
        let images: Vec<Vec<Scalar>> = self.basis.row_vecs().map(|r| map.mul_vec(r)).collect();
        Subspace::span(map.rows(), &images)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}: {:?})", self.dim(), self.ambient_dim, self.basis)
    }
}

/// `{v : m·v = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let (r, pivots) = m.rref_pivots();
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vec<Scalar>> = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Scalar::zero(); n];
            v[f] = Scalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, f);
            }
            v
        })
        .collect();
    Subspace::span(n, &vectors)
}

/// Solution set of `m·x = b`: the rref particular solution (free variables
/// set to zero) and the kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vec<Scalar>,
    pub kernel: Subspace,
}

pub fn solve_linear(m: &Matrix, b: &[Scalar]) -> Result<Option<Solution>> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch {
            context: "solve_linear right-hand side",
            expected: m.rows(),
            found: b.len(),
        });
    }
    let n = m.cols();
    let rhs = Matrix::from_rows_with_cols(1, b.iter().map(|x| vec![x.clone()]).collect());
    let aug = m.hstack(&rhs)?;
    let (r, pivots) = aug.rref_pivots();
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![Scalar::zero(); n];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = r.get(row, n).clone();
    }
    Ok(Some(Solution {
        particular: x,
        kernel: kernel(m),
    }))
}

/// Monic minimal polynomial, found as the first linear dependency among the
/// powers `I, M, M², …`.
pub fn min_poly(m: &Matrix) -> Result<Polynomial> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Polynomial::monomial(0));
    }
    let mut powers = vec![Matrix::identity(n)];
    loop {
        let next = powers.last().unwrap() * m;
        let k = powers.len();
        // columns are the flattened powers I..M^{k-1}
        let mut a = Matrix::zeros(n * n, k);
        for (j, p) in powers.iter().enumerate() {
            for (i, v) in p.entries().iter().enumerate() {
                a.set(i, j, v.clone());
            }
        }
        let rhs: Vec<Scalar> = next.entries().iter().map(|x| -x).collect();
        if let Some(sol) = solve_linear(&a, &rhs)? {
            let mut coeffs = sol.particular;
            coeffs.push(Scalar::one());
            return Ok(Polynomial::new(coeffs));
        }
        powers.push(next);
        if powers.len() > n + 1 {
            return Err(Error::Internal(
                "minimal polynomial exceeded matrix size".into(),
            ));
        }
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let root = n.sqrt();
    let mut d = BigInt::one();
    while d <= root {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Integer roots of a monic polynomial (rational root test), and whatever is
/// left once they are divided out.
pub fn integer_roots(p: &Polynomial) -> (Vec<i64>, Polynomial) {
    let (zero_mult, mut rest) = p.strip_zero_root();
    let mut roots = Vec::new();
    if zero_mult > 0 {
        roots.push(0);
    }
    if rest.degree().unwrap_or(0) == 0 {
        return (roots, rest);
    }
    let c0 = &rest.coeffs()[0];
    if !c0.is_real() || !c0.re.is_integer() {
        return (roots, rest);
    }
    for d in divisors(&c0.re.to_integer()) {
        for cand in [d.clone(), -d] {
            let Some(lambda) = cand.to_i64() else { continue };
            let root = Scalar::from_int(lambda);
            let mut found = false;
            while rest.degree().unwrap_or(0) > 0 && rest.eval(&root).is_zero() {
                rest = rest.div_rem(&Polynomial::linear(&root)).0;
                found = true;
            }
            if found {
                roots.push(lambda);
            }
        }
    }
    roots.sort_unstable();
    (roots, rest)
}

/// Eigenspaces of `m` for its integer eigenvalues.
///
/// With `require_semisimple` the eigenspaces must fill the whole space. Any
/// eigenvalue that is not an integer yields [`Error::NonIntegralSpectrum`]
/// carrying the residual factor of the minimal polynomial.
pub fn integer_eigenvalues(m: &Matrix, require_semisimple: bool) -> Result<BTreeMap<i64, Subspace>> {
    let p = min_poly(m)?;
    let (roots, residual) = integer_roots(&p);
    if residual.degree().unwrap_or(0) > 0 {
        return Err(Error::NonIntegralSpectrum {
            residual: residual.to_string(),
        });
    }
    let n = m.rows();
    let mut out = BTreeMap::new();
    let mut total = 0;
    for lambda in roots {
        let shifted = m - &Matrix::identity(n).scale(&Scalar::from_int(lambda));
        let space = kernel(&shifted);
        total += space.dim();
        out.insert(lambda, space);
    }
    if require_semisimple && total != n {
        return Err(Error::NotDiagonalizable {
            found: total,
            ambient: n,
        });
    }
    Ok(out)
}

/// Sylvester's criterion: the `k`-th leading principal minor has sign
/// `(-1)^k` for every `k`. The empty matrix is negative definite.
pub fn is_negative_definite(gram: &Matrix) -> Result<bool> {
    if !gram.is_square() {
        return Err(Error::NotSquare {
            rows: gram.rows(),
            cols: gram.cols(),
        });
    }
    let n = gram.rows();
    if !gram.is_real() || *gram != gram.transpose() {
        return Err(Error::NotSymmetricReal);
    }
    // Elimination without pivoting: the leading minors are the running
    // products of the pivots, and a zero pivot means a zero minor.
    let mut a = gram.clone();
    let mut minor = Scalar::one();
    for k in 0..n {
        let pivot = a.get(k, k).clone();
        minor = &minor * &pivot;
        let sign_ok = if k % 2 == 0 {
            minor.re.is_negative()
        } else {
            minor.re.is_positive()
        };
        if !sign_ok {
            return Ok(false);
        }
        let inv = pivot.inv().unwrap();
        for i in k + 1..n {
            let factor = a.get(i, k) * &inv;
            if factor.is_zero() {
                continue;
            }
            for j in k..n {
                let v = a.get(i, j) - &(&factor * a.get(k, j));
                a.set(i, j, v);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn s(re: i64, im: i64) -> Scalar {
        Scalar::gaussian(re, im)
    }

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
        // sparse-ish entries so that rank deficiency actually happens
        let data = (0..rows * cols)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    Scalar::zero()
                } else {
                    s(rng.gen_range(-2..=2), rng.gen_range(-1..=1))
                }
            })
            .collect();
        Matrix::new(rows, cols, data).unwrap()
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(3);
        assert_eq!(rref(&id), (id.clone(), 3));

        let m = Matrix::from_rows(vec![vec![s(1, 0), s(0, 1)], vec![s(0, 1), s(-1, 0)]]);
        let (r, rank) = rref(&m);
        assert_eq!(rank, 1);
        assert_eq!(r, Matrix::from_rows(vec![vec![s(1, 0), s(0, 1)], vec![s(0, 0), s(0, 0)]]));

        let z = Matrix::zeros(2, 3);
        assert_eq!(rref(&z), (z.clone(), 0));
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel(&Matrix::identity(3)).is_zero());
        assert_eq!(kernel(&Matrix::zeros(2, 2)), Subspace::full(2));
        let k = kernel(&Matrix::from_rows(vec![vec![s(1, 0), s(0, 1)]]));
        assert_eq!(k.dim(), 1);
        // span{(-i, 1)} normalised: leading entry 1 gives (1, i)
        assert_eq!(k, Subspace::span(2, &[vec![s(0, -1), s(1, 0)]]));
        assert_eq!(k.basis().row(0), &[s(1, 0), s(0, 1)]);
    }

    #[test]
    fn solve_examples() {
        let b = vec![s(3, 1), s(-2, 0)];
        let sol = solve_linear(&Matrix::identity(2), &b).unwrap().unwrap();
        assert_eq!(sol.particular, b);
        assert!(solve_linear(&Matrix::zeros(2, 2), &b).unwrap().is_none());
        let sol = solve_linear(&Matrix::from_i64(&[&[2]]), &[s(4, 0)]).unwrap().unwrap();
        assert_eq!(sol.particular, vec![s(2, 0)]);
        assert!(solve_linear(&Matrix::identity(2), &[s(1, 0)]).is_err());
    }

    #[test]
    fn subspace_examples() {
        let x = Subspace::span(2, &[vec![s(1, 0), s(0, 0)]]);
        let y = Subspace::span(2, &[vec![s(0, 0), s(1, 0)]]);
        let d = Subspace::span(2, &[vec![s(1, 0), s(1, 0)]]);
        assert_eq!(x.intersect(&x).unwrap(), x);
        assert!(x.intersect(&y).unwrap().is_zero());
        assert_eq!(x.sum(&d).unwrap(), Subspace::full(2));
        assert!(x.intersect(&Subspace::full(3)).is_err());
        assert!(Subspace::full(2).contains(&d));
        assert!(!x.contains(&d));
    }

    #[test]
    fn min_poly_examples() {
        assert_eq!(min_poly(&Matrix::zeros(3, 3)).unwrap(), Polynomial::monomial(1));
        let nil = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(min_poly(&nil).unwrap(), Polynomial::monomial(2));
        let d = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
        assert_eq!(
            min_poly(&d).unwrap(),
            Polynomial::new(vec![s(-1, 0), s(0, 0), s(1, 0)])
        );
        assert!(min_poly(&Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn integer_eigenvalue_examples() {
        let d = Matrix::from_i64(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]);
        let eig = integer_eigenvalues(&d, true).unwrap();
        assert_eq!(eig.keys().copied().collect::<Vec<_>>(), vec![-2, 0, 2]);
        assert_eq!(eig[&2], Subspace::span(3, &[vec![s(1, 0), s(0, 0), s(0, 0)]]));
        assert_eq!(eig[&-2], Subspace::span(3, &[vec![s(0, 0), s(0, 0), s(1, 0)]]));

        let eig = integer_eigenvalues(&Matrix::zeros(4, 4), true).unwrap();
        assert_eq!(eig.len(), 1);
        assert_eq!(eig[&0], Subspace::full(4));

        // rotation by 90 degrees: eigenvalues ±i, not integers
        let rot = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        match integer_eigenvalues(&rot, true) {
            Err(Error::NonIntegralSpectrum { residual }) => assert_eq!(residual, "t^2 + 1"),
            other => panic!("unexpected {other:?}"),
        }
        // Jordan block: integer spectrum but not semisimple
        let jb = Matrix::from_i64(&[&[3, 1], &[0, 3]]);
        assert!(matches!(
            integer_eigenvalues(&jb, true),
            Err(Error::NotDiagonalizable { found: 1, ambient: 2 })
        ));
        assert_eq!(integer_eigenvalues(&jb, false).unwrap()[&3].dim(), 1);
    }

    #[test]
    fn negative_definite_examples() {
        assert!(is_negative_definite(&Matrix::zeros(0, 0)).unwrap());
        assert!(is_negative_definite(&Matrix::from_i64(&[&[-2]])).unwrap());
        assert!(!is_negative_definite(&Matrix::from_i64(&[&[36]])).unwrap());
        assert!(is_negative_definite(&Matrix::from_i64(&[&[-2, 1], &[1, -2]])).unwrap());
        assert!(!is_negative_definite(&Matrix::from_i64(&[&[-1, 2], &[2, -1]])).unwrap());
        assert!(!is_negative_definite(&Matrix::from_i64(&[&[0, 0], &[0, -1]])).unwrap());
        assert!(is_negative_definite(&Matrix::from_i64(&[&[-1, 2], &[0, -1]])).is_err());
        assert!(is_negative_definite(&Matrix::from_rows(vec![vec![s(-1, 1)]])).is_err());
    }

    #[test]
    fn determinant_and_inverse() {
        let m = Matrix::from_i64(&[&[0, 2], &[3, 1]]);
        assert_eq!(m.determinant().unwrap(), s(-6, 0));
        let inv = m.inverse().unwrap().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().unwrap().is_none());
    }

    #[test]
    fn randomized_kernel_rank_and_grassmann() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let rows = rng.gen_range(1..5);
            let cols = rng.gen_range(1..6);
            let m = random_matrix(&mut rng, rows, cols);
            let (r, rank) = rref(&m);
            assert_eq!(rank + kernel(&m).dim(), cols);
            assert_eq!(rref(&r), (r.clone(), rank));
            for v in kernel(&m).basis_vectors() {
                assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
            }

            let a = Subspace::row_space(&random_matrix(&mut rng, 2, 4));
            let b = Subspace::row_space(&random_matrix(&mut rng, 3, 4));
            let sum = a.sum(&b).unwrap();
            let cap = a.intersect(&b).unwrap();
            assert_eq!(a.dim() + b.dim(), sum.dim() + cap.dim());
            assert!(a.contains(&cap) && b.contains(&cap) && sum.contains(&a));

            let sq = random_matrix(&mut rng, 3, 3);
            assert!(min_poly(&sq).unwrap().eval_matrix(&sq).is_zero());
        }
    }
}
