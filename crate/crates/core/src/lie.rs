//! Finite-dimensional Lie algebras given by structure constants, optionally
//! with a faithful matrix realization.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{kernel, min_poly, Matrix, Subspace};
use crate::scalar::{format_scalar, Scalar};

/// An element of a Lie algebra, as coordinates in the algebra's basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    coords: Vec<Scalar>,
}

impl Element {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Element { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Element::new(vec![Scalar::zero(); dim])
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        Element::new(self.coords.iter().map(|c| c * s).collect())
    }

    /// Coordinatewise conjugate.
    pub fn conj(&self) -> Element {
        Element::new(self.coords.iter().map(Scalar::conj).collect())
    }

    pub fn is_real(&self) -> bool {
        self.coords.iter().all(Scalar::is_real)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

impl<'a> Add<&'a Element> for &'a Element {
    type Output = Element;
    fn add(self, rhs: &'a Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element size mismatch");
        Element::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a Element> for &'a Element {
    type Output = Element;
    fn sub(self, rhs: &'a Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element size mismatch");
        Element::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::new(self.coords.iter().map(|c| -c).collect())
    }
}

/// Basis matrices of a faithful matrix representation, with a precomputed
/// way back from matrices to coordinates.
#[derive(Clone)]
pub struct Realization {
    size: usize,
    basis: Vec<Matrix>,
    // entry positions that determine coordinates, and the inverse of the
    // basis restricted to them
    probe: Vec<usize>,
    probe_inverse: Matrix,
}

impl Realization {
    pub fn new(size: usize, basis: Vec<Matrix>) -> Result<Self> {
        for b in &basis {
            if b.rows() != size || b.cols() != size {
                return Err(Error::DimensionMismatch {
                    context: "realization basis matrix",
                    expected: size,
                    found: b.rows().max(b.cols()),
                });
            }
        }
        let dim = basis.len();
        let flat = Matrix::from_rows_with_cols(
            size * size,
            basis.iter().map(|b| b.entries().to_vec()).collect(),
        );
        let (_, probe) = flat.rref_pivots();
        if probe.len() != dim {
            return Err(Error::Structural(
                "realization basis matrices are linearly dependent".into(),
            ));
        }
        // square[k][j] = entry probe[k] of basis matrix j
        let mut square = Matrix::zeros(dim, dim);
        for (k, &p) in probe.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                square.set(k, j, b.entries()[p].clone());
            }
        }
        let probe_inverse = square
            .inverse()?
            .ok_or_else(|| Error::Internal("probe block singular".into()))?;
        Ok(Realization {
            size,
            basis,
            probe,
            probe_inverse,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn to_matrix(&self, coords: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.size, self.size);
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                m = &m + &b.scale(c);
            }
        }
        m
    }

    /// Coordinates of `m`, or `None` if `m` is outside the span.
    pub fn coords_of(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        if m.rows() != self.size || m.cols() != self.size {
            return None;
        }
        let probed: Vec<Scalar> = self.probe.iter().map(|&p| m.entries()[p].clone()).collect();
        let coords = self.probe_inverse.mul_vec(&probed);
        (self.to_matrix(&coords) == *m).then_some(coords)
    }
}

#[derive(Clone)]
pub struct LieAlgebra {
    name: String,
    dim: usize,
    // ad_basis[i] is the matrix of y -> [b_i, y]; its column j holds [b_i, b_j]
    ad_basis: Vec<Matrix>,
    killing_gram: Matrix,
    realization: Option<Realization>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LieAlgebra")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .finish()
    }
}

impl LieAlgebra {
    /// Builds an algebra from `table[i][j]` = coordinates of `[b_i, b_j]`.
    /// No axioms are checked here; see [`verify_structure`].
    pub fn from_structure(name: &str, table: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let dim = table.len();
        let mut ad_basis = Vec::with_capacity(dim);
        for row in &table {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    context: "structure table row",
                    expected: dim,
                    found: row.len(),
                });
            }
            let mut ad = Matrix::zeros(dim, dim);
            for (j, v) in row.iter().enumerate() {
                if v.len() != dim {
                    return Err(Error::DimensionMismatch {
                        context: "structure constant vector",
                        expected: dim,
                        found: v.len(),
                    });
                }
                for (k, c) in v.iter().enumerate() {
                    ad.set(k, j, c.clone());
                }
            }
            ad_basis.push(ad);
        }
        let killing_gram = gram_of_traces(&ad_basis);
        Ok(LieAlgebra {
            name: name.to_string(),
            dim,
            ad_basis,
            killing_gram,
            realization: None,
        })
    }

    /// Builds an algebra spanned by the given matrices, which must be
    /// linearly independent and closed under the commutator.
    pub fn from_matrices(name: &str, size: usize, basis: Vec<Matrix>) -> Result<Self> {
        let real = Realization::new(size, basis)?;
        let dim = real.basis.len();
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let c = real.basis[i].commutator(&real.basis[j]);
                table[i][j] = real.coords_of(&c).ok_or_else(|| {
                    Error::Structural(format!(
                        "{name}: commutator of basis matrices {i} and {j} leaves the span"
                    ))
                })?;
            }
        }
        let mut alg = LieAlgebra::from_structure(name, table)?;
        alg.realization = Some(real);
        Ok(alg)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn realization(&self) -> Option<&Realization> {
        self.realization.as_ref()
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut e = Element::zero(self.dim);
        e.coords[i] = Scalar::from_int(1);
        e
    }

    /// Coordinates of `[b_i, b_j]`.
    pub fn structure_constant(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.ad_basis[i].column(j)
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Result<Element> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "element coordinates",
                expected: self.dim,
                found: coords.len(),
            });
        }
        Ok(Element::new(coords))
    }

    fn check(&self, x: &Element) -> Result<()> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "element of algebra",
                expected: self.dim,
                found: x.dim(),
            });
        }
        Ok(())
    }

    /// Element from a matrix in the realization.
    pub fn from_matrix(&self, m: &Matrix) -> Result<Element> {
        let real = self
            .realization
            .as_ref()
            .ok_or_else(|| Error::Input(format!("{} has no matrix realization", self.name)))?;
        if m.rows() != real.size || m.cols() != real.size {
            return Err(Error::Input(format!(
                "expected a {0}x{0} matrix, got {1}x{2}",
                real.size,
                m.rows(),
                m.cols()
            )));
        }
        real.coords_of(m)
            .map(Element::new)
            .ok_or_else(|| Error::Input(format!("matrix does not lie in {}", self.name)))
    }

    pub fn to_matrix(&self, x: &Element) -> Option<Matrix> {
        self.realization.as_ref().map(|r| r.to_matrix(x.coords()))
    }

    /// Matrix of `y ↦ [x, y]`.
    pub fn ad_matrix(&self, x: &Element) -> Result<Matrix> {
        self.check(x)?;
        let mut ad = Matrix::zeros(self.dim, self.dim);
        for (c, b) in x.coords().iter().zip(&self.ad_basis) {
            if !c.is_zero() {
                ad = &ad + &b.scale(c);
            }
        }
        Ok(ad)
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(y)?;
        Ok(Element::new(self.ad_matrix(x)?.mul_vec(y.coords())))
    }

    pub fn killing_gram(&self) -> &Matrix {
        &self.killing_gram
    }

    /// `tr(ad x · ad y)`, evaluated through the Gram matrix of the basis.
    pub fn killing(&self, x: &Element, y: &Element) -> Result<Scalar> {
        self.check(x)?;
        self.check(y)?;
        let gy = self.killing_gram.mul_vec(y.coords());
        Ok(x.coords()
            .iter()
            .zip(&gy)
            .fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b)))
    }

    /// `tr(ad x · ad y)` computed literally from the two adjoint matrices.
    pub fn killing_by_trace(&self, x: &Element, y: &Element) -> Result<Scalar> {
        Ok((&self.ad_matrix(x)? * &self.ad_matrix(y)?).trace())
    }

    /// `{v ∈ inside : [v, y] = 0 for every y in ys}`.
    pub fn centralizer(&self, inside: &Subspace, ys: &[Element]) -> Result<Subspace> {
        if inside.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "centralizer ambient",
                expected: self.dim,
                found: inside.ambient_dim(),
            });
        }
        let m = inside.dim();
        if m == 0 {
            return Ok(Subspace::zero(self.dim));
        }
        let basis = inside.basis_vectors();
        let mut system = Matrix::zeros(0, m);
        for y in ys {
            // column k holds [u_k, y] = -ad(y) u_k
            let ad_y = self.ad_matrix(y)?;
            let mut block = Matrix::zeros(self.dim, m);
            for (k, u) in basis.iter().enumerate() {
                for (row, v) in ad_y.mul_vec(u).into_iter().enumerate() {
                    block.set(row, k, v);
                }
            }
            system = system.vstack(&block)?;
        }
        let sols = kernel(&system);
        let vectors: Vec<Vec<Scalar>> = sols
            .basis_vectors()
            .iter()
            .map(|s| inside.combine(s))
            .collect();
        Ok(Subspace::span(self.dim, &vectors))
    }

    /// Whether `ad x` is nilpotent. When a realization exists the matrix
    /// itself is checked as well and a disagreement is an internal error.
    pub fn is_nilpotent_element(&self, x: &Element) -> Result<bool> {
        let p = min_poly(&self.ad_matrix(x)?)?;
        let by_ad = p.is_monomial();
        if let Some(m) = self.to_matrix(x) {
            let mut power = m.clone();
            for _ in 1..m.rows() {
                power = &power * &m;
            }
            if power.is_zero() != by_ad {
                return Err(Error::Internal(format!(
                    "{}: adjoint and matrix nilpotency disagree",
                    self.name
                )));
            }
        }
        Ok(by_ad)
    }

    /// Whether `ad x` is diagonalizable, i.e. its minimal polynomial is
    /// squarefree.
    pub fn is_semisimple_element(&self, x: &Element) -> Result<bool> {
        Ok(min_poly(&self.ad_matrix(x)?)?.is_squarefree())
    }

    /// Span of `[a_i, b_j]` over basis vectors of the two subspaces.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        let mut out = Vec::new();
        let bs: Vec<Element> = b.basis_vectors().into_iter().map(Element::new).collect();
        for u in a.basis_vectors() {
            let ad = self.ad_matrix(&Element::new(u))?;
            for v in &bs {
                out.push(ad.mul_vec(v.coords()));
            }
        }
        Ok(Subspace::span(self.dim, &out))
    }

    /// `[u, u]` for a subspace `u`.
    pub fn derived_subspace(&self, u: &Subspace) -> Result<Subspace> {
        self.bracket_subspaces(u, u)
    }

    /// Image of a linear map on coordinates, applied to an element.
    pub fn apply(&self, map: &Matrix, x: &Element) -> Result<Element> {
        self.check(x)?;
        Ok(Element::new(map.mul_vec(x.coords())))
    }
}

impl LieAlgebra {
    /// Text form of an element: its matrix when a realization exists,
    /// otherwise its coordinate vector.
    pub fn render(&self, x: &Element) -> String {
        let rows: Vec<Vec<Scalar>> = match self.to_matrix(x) {
            Some(m) => m.row_vecs().map(<[Scalar]>::to_vec).collect(),
            None => vec![x.coords().to_vec()],
        };
        let body: Vec<String> = rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(format_scalar).collect::<Vec<_>>().join(", ")))
            .collect();
        if self.realization.is_some() {
            format!("[{}]", body.join(", "))
        } else {
            body.join("")
        }
    }
}

fn gram_of_traces(ads: &[Matrix]) -> Matrix {
    let n = ads.len();
    let mut g = Matrix::zeros(n, n);
    // sparse lists of nonzero entries of each ad matrix
    let nz: Vec<Vec<(usize, usize, &Scalar)>> = ads
        .iter()
        .map(|a| {
            let mut v = Vec::new();
            for r in 0..a.rows() {
                for c in 0..a.cols() {
                    let x = a.get(r, c);
                    if !x.is_zero() {
                        v.push((r, c, x));
                    }
                }
            }
            v
        })
        .collect();
    for i in 0..n {
        for j in i..n {
            let mut acc = Scalar::zero();
            for &(k, l, x) in &nz[i] {
                let y = ads[j].get(l, k);
                if !y.is_zero() {
                    acc += &(x * y);
                }
            }
            g.set(i, j, acc.clone());
            g.set(j, i, acc);
        }
    }
    g
}

/// Direct sum `a ⊕ b`, basis of `a` first. Realizations become block
/// diagonal.
pub fn direct_sum(name: &str, a: &LieAlgebra, b: &LieAlgebra) -> Result<LieAlgebra> {
    match (&a.realization, &b.realization) {
        (Some(ra), Some(rb)) => {
            let size = ra.size + rb.size;
            let embed = |m: &Matrix, offset: usize| {
                let mut out = Matrix::zeros(size, size);
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        out.set(offset + i, offset + j, m.get(i, j).clone());
                    }
                }
                out
            };
            let basis = ra
                .basis
                .iter()
                .map(|m| embed(m, 0))
                .chain(rb.basis.iter().map(|m| embed(m, ra.size)))
                .collect();
            LieAlgebra::from_matrices(name, size, basis)
        }
        _ => {
            let n = a.dim + b.dim;
            let mut table = vec![vec![vec![Scalar::zero(); n]; n]; n];
            for i in 0..a.dim {
                for j in 0..a.dim {
                    for (k, c) in a.structure_constant(i, j).into_iter().enumerate() {
                        table[i][j][k] = c;
                    }
                }
            }
            for i in 0..b.dim {
                for j in 0..b.dim {
                    for (k, c) in b.structure_constant(i, j).into_iter().enumerate() {
                        table[a.dim + i][a.dim + j][a.dim + k] = c;
                    }
                }
            }
            LieAlgebra::from_structure(name, table)
        }
    }
}

/// Checks antisymmetry, the Jacobi identity, agreement with the matrix
/// realization, and nondegeneracy of the Killing form. An empty list means
/// every check passed.
pub fn verify_structure(alg: &LieAlgebra) -> Vec<String> {
    let n = alg.dim;
    let mut issues = Vec::new();
    for i in 0..n {
        for j in i..n {
            let a = alg.structure_constant(i, j);
            let b = alg.structure_constant(j, i);
            if a.iter().zip(&b).any(|(x, y)| !(x + y).is_zero()) {
                issues.push(format!("antisymmetry violated at ({i},{j})"));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let bjk: Vec<Vec<Scalar>> = (j + 1..n).map(|k| alg.structure_constant(j, k)).collect();
            for k in j + 1..n {
                let t1 = alg.ad_basis[i].mul_vec(&bjk[k - j - 1]);
                let t2 = alg.ad_basis[j].mul_vec(&alg.structure_constant(k, i));
                let t3 = alg.ad_basis[k].mul_vec(&alg.structure_constant(i, j));
                if t1
                    .iter()
                    .zip(&t2)
                    .zip(&t3)
                    .any(|((a, b), c)| !(&(a + b) + c).is_zero())
                {
                    issues.push(format!("Jacobi identity violated at ({i},{j},{k})"));
                }
            }
        }
    }
    if let Some(real) = &alg.realization {
        for i in 0..n {
            for j in 0..n {
                let c = real.basis[i].commutator(&real.basis[j]);
                if real.to_matrix(&alg.structure_constant(i, j)) != c {
                    issues.push(format!("realization commutator mismatch at ({i},{j})"));
                }
            }
        }
    }
    let rank = alg.killing_gram.rank();
    if rank != n {
        issues.push(format!("Killing form degenerate: rank {rank} < {n}"));
    }
    issues
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_sl, build_so};

    fn s(re: i64, im: i64) -> Scalar {
        Scalar::gaussian(re, im)
    }

    /// sl2 in the basis (e, h, f) from its textbook bracket table.
    fn sl2_table() -> LieAlgebra {
        let z = || vec![s(0, 0); 3];
        let v = |a: i64, b: i64, c: i64| vec![s(a, 0), s(b, 0), s(c, 0)];
        let table = vec![
            vec![z(), v(-2, 0, 0), v(0, 1, 0)],
            vec![v(2, 0, 0), z(), v(0, 0, -2)],
            vec![v(0, -1, 0), v(0, 0, 2), z()],
        ];
        LieAlgebra::from_structure("sl2-table", table).unwrap()
    }

    #[test]
    fn bracket_examples() {
        let g = sl2_table();
        let (e, h, f) = (g.basis_element(0), g.basis_element(1), g.basis_element(2));
        assert!(g.bracket(&e, &e).unwrap().is_zero());
        assert_eq!(g.bracket(&h, &e).unwrap(), e.scale(&s(2, 0)));
        assert_eq!(g.bracket(&e, &f).unwrap(), h);
        assert!(g.bracket(&e, &Element::zero(2)).is_err());
    }

    #[test]
    fn realization_matches_table() {
        let sl2 = build_sl(2).unwrap();
        let e = sl2.from_matrix(&Matrix::from_i64(&[&[0, 1], &[0, 0]])).unwrap();
        let h = sl2.from_matrix(&Matrix::from_i64(&[&[1, 0], &[0, -1]])).unwrap();
        assert_eq!(sl2.bracket(&h, &e).unwrap(), e.scale(&s(2, 0)));
        // P1 fixture: [h1, e1] = 2 e1
        let h1 = sl2
            .from_matrix(&Matrix::from_rows(vec![vec![s(0, 0), s(0, 1)], vec![s(0, -1), s(0, 0)]]))
            .unwrap();
        let half = Scalar::frac(1, 2);
        let e1 = sl2
            .from_matrix(
                &Matrix::from_rows(vec![vec![s(0, 1), s(1, 0)], vec![s(1, 0), s(0, -1)]]).scale(&half),
            )
            .unwrap();
        assert_eq!(sl2.bracket(&h1, &e1).unwrap(), e1.scale(&s(2, 0)));
        assert!(sl2.from_matrix(&Matrix::identity(2)).is_err());
    }

    #[test]
    fn ad_and_killing() {
        let g = sl2_table();
        let h = g.basis_element(1);
        assert!(g.ad_matrix(&Element::zero(3)).unwrap().is_zero());
        let ad_h = g.ad_matrix(&h).unwrap();
        let eig = crate::linalg::integer_eigenvalues(&ad_h, true).unwrap();
        assert_eq!(eig.keys().copied().collect::<Vec<_>>(), vec![-2, 0, 2]);
        assert!(eig.values().all(|s| s.dim() == 1));
        assert_eq!(g.killing(&h, &h).unwrap(), s(8, 0));
        let e = g.basis_element(0);
        assert_eq!(g.killing(&e, &e).unwrap(), s(0, 0));
        assert_eq!(g.killing_by_trace(&h, &h).unwrap(), s(8, 0));
    }

    #[test]
    fn ad_from_constants_equals_ad_from_commutators() {
        let g = build_sl(3).unwrap();
        let real = g.realization().unwrap();
        let x = g.element((0..8).map(|k| s(k - 3, k % 2)).collect()).unwrap();
        let xm = g.to_matrix(&x).unwrap();
        let ad = g.ad_matrix(&x).unwrap();
        for j in 0..8 {
            let expected = real.coords_of(&xm.commutator(&real.basis()[j])).unwrap();
            assert_eq!(ad.column(j), expected);
        }
    }

    #[test]
    fn centralizer_examples() {
        let g = sl2_table();
        let full = Subspace::full(3);
        assert_eq!(g.centralizer(&full, &[Element::zero(3)]).unwrap(), full);
        let e = g.basis_element(0);
        assert_eq!(
            g.centralizer(&full, &[e.clone()]).unwrap(),
            Subspace::span(3, &[e.coords()])
        );
    }

    #[test]
    fn element_types() {
        let sl2 = build_sl(2).unwrap();
        let zero = Element::zero(3);
        assert!(sl2.is_nilpotent_element(&zero).unwrap());
        assert!(sl2.is_semisimple_element(&zero).unwrap());
        let half = Scalar::frac(1, 2);
        let e1 = sl2
            .from_matrix(
                &Matrix::from_rows(vec![vec![s(0, 1), s(1, 0)], vec![s(1, 0), s(0, -1)]]).scale(&half),
            )
            .unwrap();
        assert!(sl2.is_nilpotent_element(&e1).unwrap());
        assert!(!sl2.is_semisimple_element(&e1).unwrap());
        let c1 = sl2.from_matrix(&Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap();
        assert!(!sl2.is_nilpotent_element(&c1).unwrap());
        assert!(sl2.is_semisimple_element(&c1).unwrap());
        let e = sl2.from_matrix(&Matrix::from_i64(&[&[0, 1], &[0, 0]])).unwrap();
        assert!(!sl2.is_semisimple_element(&e).unwrap());
    }

    #[test]
    fn derived_examples() {
        let g = sl2_table();
        let e = g.basis_element(0);
        let line = Subspace::span(3, &[e.coords()]);
        assert!(g.derived_subspace(&line).unwrap().is_zero());
        assert_eq!(g.derived_subspace(&Subspace::full(3)).unwrap(), Subspace::full(3));
        let cartan = build_sl(3).unwrap();
        let diag = Subspace::span(
            8,
            &[
                cartan.from_matrix(&Matrix::from_i64(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]])).unwrap().into_coords(),
                cartan.from_matrix(&Matrix::from_i64(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, -1]])).unwrap().into_coords(),
            ],
        );
        assert!(cartan.derived_subspace(&diag).unwrap().is_zero());
    }

    #[test]
    fn verify_structure_examples() {
        let sl3 = build_sl(3).unwrap();
        assert!(verify_structure(&sl3).is_empty());
        assert_eq!(sl3.killing_gram().rank(), 8);
        let so3 = build_so(3).unwrap();
        assert_eq!(so3.dim(), 3);
        assert!(verify_structure(&so3).is_empty());
        assert!(verify_structure(&sl2_table()).is_empty());
    }

    #[test]
    fn corrupted_constant_breaks_jacobi() {
        let g = build_sl(3).unwrap();
        let n = g.dim();
        let mut table: Vec<Vec<Vec<Scalar>>> = (0..n)
            .map(|i| (0..n).map(|j| g.structure_constant(i, j)).collect())
            .collect();
        // bump one constant, keeping antisymmetry intact
        let bumped = &table[0][1][2] + &s(1, 0);
        table[0][1][2] = bumped.clone();
        table[1][0][2] = -bumped;
        let bad = LieAlgebra::from_structure("bad", table).unwrap();
        let issues = verify_structure(&bad);
        assert!(issues.iter().any(|m| m.starts_with("Jacobi identity violated at (")));
        assert!(!issues.iter().any(|m| m.starts_with("antisymmetry")));
    }

    #[test]
    fn randomized_killing_and_ad_homomorphism() {
        use rand::{Rng, SeedableRng};
        let g = build_sl(3).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let rand_el = |rng: &mut rand_chacha::ChaCha8Rng| {
            Element::new((0..8).map(|_| s(rng.gen_range(-3..=3), rng.gen_range(-1..=1))).collect())
        };
        for _ in 0..10 {
            let (x, y) = (rand_el(&mut rng), rand_el(&mut rng));
            assert_eq!(g.killing(&x, &y).unwrap(), g.killing(&y, &x).unwrap());
            assert_eq!(g.killing(&x, &y).unwrap(), g.killing_by_trace(&x, &y).unwrap());
            let xy = g.bracket(&x, &y).unwrap();
            let (ax, ay) = (g.ad_matrix(&x).unwrap(), g.ad_matrix(&y).unwrap());
            assert_eq!(g.ad_matrix(&xy).unwrap(), ax.commutator(&ay));
            // nonzero: nilpotent and semisimple never both
            if !x.is_zero() {
                assert!(!(g.is_nilpotent_element(&x).unwrap() && g.is_semisimple_element(&x).unwrap()));
            }
        }
    }
}
