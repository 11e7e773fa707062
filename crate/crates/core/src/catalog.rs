//! Concrete symmetric pairs: classical matrix algebras, their involutions,
//! real forms, Cartan subspaces and stored nilpotent representatives.
//!
//! Representatives are data. Their expected flags were derived by hand and
//! are re-derived by the criteria module every time a pair is verified, so
//! a stale fixture shows up as a failed check rather than a silent pass.

use num_traits::One;

use crate::error::{Error, Result};
use crate::lie::{direct_sum, verify_structure, Element, LieAlgebra};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Flags a representative is known to carry. `None` means "not asserted".
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExpectedFlags {
    pub orbit_dim: Option<usize>,
    pub principal: Option<bool>,
    pub minus1: Option<bool>,
    pub noticed: Option<bool>,
    pub even: Option<bool>,
    pub compact: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct Representative {
    pub label: String,
    pub element: Element,
    pub expected: ExpectedFlags,
}

/// A θ-stable real form, declared through a basis of it. Conjugation σ is
/// complex conjugation of coordinates in that basis.
#[derive(Debug, Clone)]
pub struct RealFormData {
    pub name: String,
    pub basis: Vec<Element>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: String,
    pub description: String,
    pub algebra: LieAlgebra,
    /// θ acting on coordinates (columns are images of basis elements).
    pub theta: Matrix,
    pub real_form: Option<RealFormData>,
    pub cartan_basis: Vec<Element>,
    pub representatives: Vec<Representative>,
}

fn s(re: i64, im: i64) -> Scalar {
    Scalar::gaussian(re, im)
}

/// Matrix from Gaussian-integer entries `(re, im)`.
pub fn gaussian_matrix(rows: &[&[(i64, i64)]]) -> Matrix {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&(a, b)| s(a, b)).collect())
            .collect(),
    )
}

fn sl_basis(n: usize) -> Vec<Matrix> {
    let mut basis = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push(Matrix::unit(n, i, j));
            }
        }
    }
    for i in 0..n - 1 {
        basis.push(&Matrix::unit(n, i, i) - &Matrix::unit(n, i + 1, i + 1));
    }
    basis
}

/// `sl_n` with basis `E_ij` (i ≠ j, row-major) followed by
/// `E_ii - E_{i+1,i+1}`.
pub fn build_sl(n: usize) -> Result<LieAlgebra> {
    if !(2..=4).contains(&n) {
        return Err(Error::UnsupportedSize(format!("sl_{n} (supported: 2..=4)")));
    }
    LieAlgebra::from_matrices(&format!("sl{n}"), n, sl_basis(n))
}

/// `so_n` as antisymmetric matrices, basis `E_ij - E_ji` for i < j.
pub fn build_so(n: usize) -> Result<LieAlgebra> {
    if !(3..=4).contains(&n) {
        return Err(Error::UnsupportedSize(format!("so_{n} (supported: 3..=4)")));
    }
    let mut basis = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            basis.push(&Matrix::unit(n, i, j) - &Matrix::unit(n, j, i));
        }
    }
    LieAlgebra::from_matrices(&format!("so{n}"), n, basis)
}

/// `sp_{2n}` as the matrices `[[A, B], [C, -Aᵀ]]` with `B`, `C` symmetric.
pub fn build_sp(two_n: usize) -> Result<LieAlgebra> {
    if two_n % 2 != 0 || !(2..=8).contains(&two_n) {
        return Err(Error::UnsupportedSize(format!("sp_{two_n} (supported: 2, 4, 6, 8)")));
    }
    let n = two_n / 2;
    let mut basis = Vec::new();
    for i in 0..n {
        for j in 0..n {
            // A = E_ij, lower-right block -E_ji
            basis.push(&Matrix::unit(two_n, i, j) - &Matrix::unit(two_n, n + j, n + i));
        }
    }
    for i in 0..n {
        for j in i..n {
            let mut b = Matrix::unit(two_n, i, n + j);
            let mut c = Matrix::unit(two_n, n + i, j);
            if i != j {
                b = &b + &Matrix::unit(two_n, j, n + i);
                c = &c + &Matrix::unit(two_n, n + j, i);
            }
            basis.push(b);
            basis.push(c);
        }
    }
    LieAlgebra::from_matrices(&format!("sp{two_n}"), two_n, basis)
}

fn theta_from_matrix_map(alg: &LieAlgebra, map: impl Fn(&Matrix) -> Matrix) -> Result<Matrix> {
    let real = alg
        .realization()
        .ok_or_else(|| Error::Structural(format!("{} has no realization", alg.name())))?;
    let n = alg.dim();
    let mut theta = Matrix::zeros(n, n);
    for (j, b) in real.basis().iter().enumerate() {
        let image = real.coords_of(&map(b)).ok_or_else(|| {
            Error::Structural(format!("involution does not preserve {}", alg.name()))
        })?;
        for (i, v) in image.into_iter().enumerate() {
            theta.set(i, j, v);
        }
    }
    Ok(theta)
}

/// `X ↦ -Xᵀ`.
pub fn theta_negtranspose(alg: &LieAlgebra) -> Result<Matrix> {
    theta_from_matrix_map(alg, |b| b.transpose().scale(&s(-1, 0)))
}

/// `X ↦ D X D` with `D = diag(I_k, -I_{n-k})`.
pub fn theta_adjoint_block(alg: &LieAlgebra, k: usize) -> Result<Matrix> {
    let n = alg
        .realization()
        .map(|r| r.size())
        .ok_or_else(|| Error::Structural(format!("{} has no realization", alg.name())))?;
    if k == 0 || k >= n {
        return Err(Error::Structural(format!("block size {k} out of range for {n}x{n}")));
    }
    let d = Matrix::diag(
        &(0..n)
            .map(|i| if i < k { Scalar::one() } else { -Scalar::one() })
            .collect::<Vec<_>>(),
    );
    theta_from_matrix_map(alg, |b| &(&d * b) * &d)
}

/// `(y, z) ↦ (z, y)` on `h ⊕ h`, where the first `half` basis vectors span
/// the first summand.
pub fn theta_swap(alg: &LieAlgebra, half: usize) -> Result<Matrix> {
    if alg.dim() != 2 * half {
        return Err(Error::Structural("swap needs an algebra of the form h ⊕ h".into()));
    }
    let mut theta = Matrix::zeros(2 * half, 2 * half);
    for i in 0..half {
        theta.set(i, half + i, Scalar::one());
        theta.set(half + i, i, Scalar::one());
    }
    Ok(theta)
}

/// Invariants of an entry that do not involve the real form: structure
/// checks, θ an involutive automorphism, representatives nilpotent in p,
/// Cartan basis commuting semisimple elements of p.
pub fn validate_entry(entry: &CatalogEntry) -> Vec<String> {
    let mut issues: Vec<String> = verify_structure(&entry.algebra)
        .into_iter()
        .map(|m| format!("{}: {m}", entry.id))
        .collect();
    let alg = &entry.algebra;
    let n = alg.dim();
    let theta = &entry.theta;
    if &(theta * theta) != &Matrix::identity(n) {
        issues.push(format!("{}: theta is not an involution", entry.id));
    }
    for i in 0..n {
        for j in i + 1..n {
            let (bi, bj) = (alg.basis_element(i), alg.basis_element(j));
            let lhs = theta.mul_vec(alg.bracket(&bi, &bj).unwrap().coords());
            let rhs = alg
                .bracket(
                    &Element::new(theta.mul_vec(bi.coords())),
                    &Element::new(theta.mul_vec(bj.coords())),
                )
                .unwrap();
            if lhs != rhs.coords() {
                issues.push(format!("{}: theta is not an automorphism at ({i},{j})", entry.id));
            }
        }
    }
    let in_p = |x: &Element| theta.mul_vec(x.coords()) == (-x).coords();
    for rep in &entry.representatives {
        if !in_p(&rep.element) {
            issues.push(format!("{}: representative {} is not in p", entry.id, rep.label));
        }
        match alg.is_nilpotent_element(&rep.element) {
            Ok(true) => {}
            Ok(false) => issues.push(format!(
                "{}: representative {} is not nilpotent",
                entry.id, rep.label
            )),
            Err(e) => issues.push(format!("{}: {e}", entry.id)),
        }
    }
    for (i, a) in entry.cartan_basis.iter().enumerate() {
        if !in_p(a) {
            issues.push(format!("{}: Cartan basis element {i} is not in p", entry.id));
        }
        if !alg.is_semisimple_element(a).unwrap_or(false) {
            issues.push(format!("{}: Cartan basis element {i} is not semisimple", entry.id));
        }
        for b in &entry.cartan_basis[i + 1..] {
            if !alg.bracket(a, b).map(|c| c.is_zero()).unwrap_or(false) {
                issues.push(format!("{}: Cartan basis elements do not commute", entry.id));
            }
        }
    }
    issues
}

fn el(alg: &LieAlgebra, m: &Matrix) -> Element {
    alg.from_matrix(m).expect("catalog matrix lies in the algebra")
}

fn flags(orbit_dim: usize, principal: bool, minus1: bool, noticed: bool, even: bool) -> ExpectedFlags {
    ExpectedFlags {
        orbit_dim: Some(orbit_dim),
        principal: Some(principal),
        minus1: Some(minus1),
        noticed: Some(noticed),
        even: Some(even),
        compact: None,
    }
}

/// (sl₂, X ↦ -Xᵀ): split real form sl₂(ℝ), k = so₂.
fn sl2_ai() -> Result<CatalogEntry> {
    let alg = build_sl(2)?;
    let theta = theta_negtranspose(&alg)?;
    let half = Scalar::frac(1, 2);
    let e1 = el(&alg, &gaussian_matrix(&[&[(0, 1), (1, 0)], &[(1, 0), (0, -1)]]).scale(&half));
    let c1 = el(&alg, &Matrix::from_i64(&[&[0, 1], &[1, 0]]));
    let real_basis = (0..alg.dim()).map(|i| alg.basis_element(i)).collect();
    Ok(CatalogEntry {
        id: "sl2-AI".into(),
        description: "sl(2,C) with theta(X) = -X^T; real form sl(2,R)".into(),
        theta,
        real_form: Some(RealFormData {
            name: "sl(2,R)".into(),
            basis: real_basis,
        }),
        cartan_basis: vec![c1],
        representatives: vec![Representative {
            label: "principal".into(),
            element: e1,
            expected: ExpectedFlags {
                compact: Some(true),
                ..flags(1, true, true, true, true)
            },
        }],
        algebra: alg,
    })
}

/// (sl₂ ⊕ sl₂, swap): k is the diagonal copy.
fn sl2xsl2_diag() -> Result<CatalogEntry> {
    let sl2 = build_sl(2)?;
    let alg = direct_sum("sl2+sl2", &sl2, &sl2)?;
    let theta = theta_swap(&alg, sl2.dim())?;
    let e = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
    let h = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
    let pair_el = |x: &Matrix, y: &Matrix| {
        let mut m = Matrix::zeros(4, 4);
        for i in 0..2 {
            for j in 0..2 {
                m.set(i, j, x.get(i, j).clone());
                m.set(2 + i, 2 + j, y.get(i, j).clone());
            }
        }
        el(&alg, &m)
    };
    let minus = |m: &Matrix| m.scale(&s(-1, 0));
    Ok(CatalogEntry {
        id: "sl2xsl2-diag".into(),
        description: "sl(2,C) + sl(2,C) with the swap involution".into(),
        cartan_basis: vec![pair_el(&h, &minus(&h))],
        representatives: vec![Representative {
            label: "principal".into(),
            element: pair_el(&e, &minus(&e)),
            expected: flags(2, true, true, true, true),
        }],
        theta,
        real_form: None,
        algebra: alg,
    })
}

/// (sl₃, X ↦ -Xᵀ): split real form sl₃(ℝ), k = so₃.
fn sl3_ai() -> Result<CatalogEntry> {
    let alg = build_sl(3)?;
    let theta = theta_negtranspose(&alg)?;
    let principal = el(
        &alg,
        &gaussian_matrix(&[
            &[(0, 0), (0, 0), (1, 0)],
            &[(0, 0), (0, 0), (0, 1)],
            &[(1, 0), (0, 1), (0, 0)],
        ]),
    );
    let subregular = el(
        &alg,
        &gaussian_matrix(&[
            &[(1, 0), (0, 1), (0, 0)],
            &[(0, 1), (-1, 0), (0, 0)],
            &[(0, 0), (0, 0), (0, 0)],
        ]),
    );
    // the last basis vector dominates the positivity functional; diag(1,0,-1)
    // is positive on the usual positive roots
    let cartan = vec![
        el(&alg, &Matrix::from_i64(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]])),
        el(&alg, &Matrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, -1]])),
    ];
    let real_basis = (0..alg.dim()).map(|i| alg.basis_element(i)).collect();
    Ok(CatalogEntry {
        id: "sl3-AI".into(),
        description: "sl(3,C) with theta(X) = -X^T; real form sl(3,R)".into(),
        theta,
        real_form: Some(RealFormData {
            name: "sl(3,R)".into(),
            basis: real_basis,
        }),
        cartan_basis: cartan,
        representatives: vec![
            Representative {
                label: "principal".into(),
                element: principal,
                expected: ExpectedFlags {
                    compact: Some(true),
                    ..flags(3, true, true, true, true)
                },
            },
            Representative {
                label: "subregular".into(),
                element: subregular,
                expected: ExpectedFlags {
                    compact: Some(false),
                    ..flags(2, false, false, true, false)
                },
            },
        ],
        algebra: alg,
    })
}

/// (sl₂, Ad diag(1, -1)): k is the diagonal torus; real form su(1,1).
fn sl2_aiii() -> Result<CatalogEntry> {
    let alg = build_sl(2)?;
    let theta = theta_adjoint_block(&alg, 1)?;
    let e = el(&alg, &Matrix::from_i64(&[&[0, 1], &[0, 0]]));
    let ef = el(&alg, &Matrix::from_i64(&[&[0, 1], &[1, 0]]));
    // su(1,1): i·h, e + f, i(e - f)
    let real_basis = vec![
        el(&alg, &gaussian_matrix(&[&[(0, 1), (0, 0)], &[(0, 0), (0, -1)]])),
        ef.clone(),
        el(&alg, &gaussian_matrix(&[&[(0, 0), (0, 1)], &[(0, -1), (0, 0)]])),
    ];
    Ok(CatalogEntry {
        id: "sl2-AIII".into(),
        description: "sl(2,C) with theta = Ad diag(1,-1); real form su(1,1)".into(),
        theta,
        real_form: Some(RealFormData {
            name: "su(1,1)".into(),
            basis: real_basis,
        }),
        cartan_basis: vec![ef],
        representatives: vec![Representative {
            label: "principal".into(),
            element: e,
            expected: ExpectedFlags {
                compact: Some(true),
                ..flags(1, true, true, true, true)
            },
        }],
        algebra: alg,
    })
}

/// (sl₃, Ad diag(1, -1, -1)): k = s(gl₁ ⊕ gl₂); real form su(1,2), whose
/// restricted root system is BC₁.
fn sl3_aiii12() -> Result<CatalogEntry> {
    let alg = build_sl(3)?;
    let theta = theta_adjoint_block(&alg, 1)?;
    let u = |i: usize, j: usize| Matrix::unit(3, i, j);
    let iu = |m: Matrix| m.scale(&Scalar::i());
    let real_mats = vec![
        iu(&u(0, 0) - &u(1, 1)),
        iu(&u(1, 1) - &u(2, 2)),
        &u(1, 2) - &u(2, 1),
        iu(&u(1, 2) + &u(2, 1)),
        &u(0, 1) + &u(1, 0),
        iu(&u(0, 1) - &u(1, 0)),
        &u(0, 2) + &u(2, 0),
        iu(&u(0, 2) - &u(2, 0)),
    ];
    let real_basis = real_mats.iter().map(|m| el(&alg, m)).collect();
    Ok(CatalogEntry {
        id: "sl3-AIII12".into(),
        description: "sl(3,C) with theta = Ad diag(1,-1,-1); real form su(1,2)".into(),
        theta,
        real_form: Some(RealFormData {
            name: "su(1,2)".into(),
            basis: real_basis,
        }),
        cartan_basis: vec![el(&alg, &(&u(0, 1) + &u(1, 0)))],
        representatives: vec![Representative {
            label: "principal".into(),
            element: el(&alg, &(&u(0, 1) + &u(2, 0))),
            expected: ExpectedFlags {
                compact: Some(true),
                ..flags(3, true, true, true, true)
            },
        }],
        algebra: alg,
    })
}

/// The built-in catalog, sorted by id.
pub fn catalog_entries() -> Result<Vec<CatalogEntry>> {
    let mut entries = vec![sl2_ai()?, sl2xsl2_diag()?, sl3_ai()?, sl2_aiii()?, sl3_aiii12()?];
    entries.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(entries)
}

pub fn catalog_ids() -> Vec<&'static str> {
    vec!["sl2-AI", "sl2-AIII", "sl2xsl2-diag", "sl3-AI", "sl3-AIII12"]
}

pub fn find_entry(id: &str) -> Result<CatalogEntry> {
    let entry = match id {
        "sl2-AI" => sl2_ai(),
        "sl2xsl2-diag" => sl2xsl2_diag(),
        "sl3-AI" => sl3_ai(),
        "sl2-AIII" => sl2_aiii(),
        "sl3-AIII12" => sl3_aiii12(),
        other => return Err(Error::Input(format!("unknown pair id {other:?}"))),
    }?;
    Ok(entry)
}
