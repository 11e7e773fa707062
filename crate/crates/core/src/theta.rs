//! Structure induced by the involution: the k ⊕ p split, Cartan subspaces,
//! restricted roots, simple systems and the chamber element.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::catalog::CatalogEntry;
use crate::error::{Error, Result};
use crate::lie::{Element, LieAlgebra};
use crate::linalg::{integer_eigenvalues, kernel, solve_linear, Matrix, Subspace};
use crate::scalar::Scalar;

/// A catalog entry together with its ±1 eigenspaces of θ.
#[derive(Debug, Clone)]
pub struct SymmetricPair {
    pub entry: CatalogEntry,
    pub k: Subspace,
    pub p: Subspace,
}

impl SymmetricPair {
    pub fn id(&self) -> &str {
        &self.entry.id
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.entry.algebra
    }

    pub fn dim(&self) -> usize {
        self.entry.algebra.dim()
    }

    pub fn g(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    pub fn theta(&self, x: &Element) -> Element {
        Element::new(self.entry.theta.mul_vec(x.coords()))
    }

    /// `x⁺ = (x + θx)/2`.
    pub fn project_k(&self, x: &Element) -> Element {
        (x + &self.theta(x)).scale(&Scalar::frac(1, 2))
    }

    /// `x⁻ = (x − θx)/2`.
    pub fn project_p(&self, x: &Element) -> Element {
        (x - &self.theta(x)).scale(&Scalar::frac(1, 2))
    }

    pub fn in_k(&self, x: &Element) -> bool {
        self.k.contains_vector(x.coords())
    }

    pub fn in_p(&self, x: &Element) -> bool {
        self.p.contains_vector(x.coords())
    }

    /// `x⁺ = x ∩ k`.
    pub fn plus_part(&self, x: &Subspace) -> Result<Subspace> {
        x.intersect(&self.k)
    }

    /// `x⁻ = x ∩ p`.
    pub fn minus_part(&self, x: &Subspace) -> Result<Subspace> {
        x.intersect(&self.p)
    }

    pub fn killing_gram(&self) -> &Matrix {
        self.entry.algebra.killing_gram()
    }
}

fn elements(space: &Subspace) -> Vec<Element> {
    space.basis_vectors().into_iter().map(Element::new).collect()
}

/// Splits `g = k ⊕ p` and checks the ℤ₂-grading on basis pairs.
pub fn decompose_kp(entry: CatalogEntry) -> Result<SymmetricPair> {
    let n = entry.algebra.dim();
    let id = Matrix::identity(n);
    if &entry.theta * &entry.theta != id {
        return Err(Error::Structural(format!("{}: theta is not an involution", entry.id)));
    }
    let k = kernel(&(&entry.theta - &id));
    let p = kernel(&(&entry.theta + &id));
    if k.dim() + p.dim() != n || !k.intersect(&p)?.is_zero() {
        return Err(Error::Structural(format!("{}: k and p do not split g", entry.id)));
    }
    if p.is_zero() {
        return Err(Error::Structural(format!("{}: p = 0", entry.id)));
    }
    let alg = &entry.algebra;
    let (kb, pb) = (elements(&k), elements(&p));
    let checks: [(&[Element], &[Element], &Subspace, &str); 3] = [
        (&kb, &kb, &k, "[k,k] ⊆ k"),
        (&kb, &pb, &p, "[k,p] ⊆ p"),
        (&pb, &pb, &k, "[p,p] ⊆ k"),
    ];
    for (xs, ys, target, label) in checks {
        for x in xs {
            for y in ys {
                if !target.contains_vector(alg.bracket(x, y)?.coords()) {
                    return Err(Error::Structural(format!("{}: {label} fails", entry.id)));
                }
            }
        }
    }
    Ok(SymmetricPair { entry, k, p })
}

/// A verified Cartan subspace of p.
#[derive(Debug, Clone)]
pub struct CartanSubspaceData {
    pub a: Subspace,
    pub basis: Vec<Element>,
    pub r: usize,
}

/// Checks that the given elements span a Cartan subspace: inside p,
/// abelian, semisimple, and maximal in the sense `p^a = a`.
pub fn verify_cartan_subspace(pair: &SymmetricPair, basis: &[Element]) -> Result<CartanSubspaceData> {
    let alg = pair.algebra();
    for (i, x) in basis.iter().enumerate() {
        if !pair.in_p(x) {
            return Err(Error::Structural(format!("Cartan basis element {i} is not in p")));
        }
        for y in &basis[i + 1..] {
            if !alg.bracket(x, y)?.is_zero() {
                return Err(Error::Structural("not abelian".into()));
            }
        }
        if !alg.is_semisimple_element(x)? {
            return Err(Error::Structural(format!("not toral: basis element {i} is not semisimple")));
        }
    }
    let coords: Vec<&[Scalar]> = basis.iter().map(Element::coords).collect();
    let a = Subspace::span(pair.dim(), &coords);
    if a.dim() != basis.len() {
        return Err(Error::Structural("Cartan basis is linearly dependent".into()));
    }
    let pa = alg.centralizer(&pair.p, basis)?;
    if pa != a {
        let witness = pa
            .basis_vectors()
            .into_iter()
            .find(|v| !a.contains_vector(v))
            .unwrap_or_default();
        return Err(Error::Structural(format!("not maximal: witness {witness:?} in p^a \\ a")));
    }
    Ok(CartanSubspaceData {
        r: a.dim(),
        a,
        basis: basis.to_vec(),
    })
}

/// A restricted root: its values on the Cartan basis and its root space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedRoot {
    pub functional: Vec<i64>,
    pub space: Subspace,
}

impl RestrictedRoot {
    pub fn multiplicity(&self) -> usize {
        self.space.dim()
    }
}

#[derive(Debug, Clone)]
pub struct RestrictedRootData {
    /// Sorted by functional.
    pub roots: Vec<RestrictedRoot>,
    /// `g^a`.
    pub zero_space: Subspace,
    /// Indices into `roots`.
    pub positives: Vec<usize>,
    pub simples: Vec<usize>,
    pub positivity_base: i128,
    pub chamber: Element,
}

impl RestrictedRootData {
    /// A root system is reduced when no root has a root as a proper multiple.
    pub fn is_reduced(&self) -> bool {
        let set: Vec<&Vec<i64>> = self.roots.iter().map(|r| &r.functional).collect();
        !set.iter().any(|a| {
            let double: Vec<i64> = a.iter().map(|x| 2 * x).collect();
            set.contains(&&double)
        })
    }

    pub fn root(&self, functional: &[i64]) -> Option<&RestrictedRoot> {
        self.roots.iter().find(|r| r.functional == functional)
    }
}

/// Coordinates of `m·v` for `v` ranging over the basis of a stable subspace,
/// expressed in that basis.
fn restrict(map: &Matrix, space: &Subspace) -> Result<Matrix> {
    let d = space.dim();
    let mut out = Matrix::zeros(d, d);
    for (j, v) in space.basis_vectors().iter().enumerate() {
        let image = map.mul_vec(v);
        let coords = space
            .coords_of(&image)
            .ok_or_else(|| Error::Internal("subspace not stable under restriction".into()))?;
        for (i, c) in coords.into_iter().enumerate() {
            out.set(i, j, c);
        }
    }
    Ok(out)
}

/// Joint eigenspace decomposition of `g` under `ad a₁, …, ad a_r`.
/// Returns the nonzero roots (sorted) and `g^a`.
pub fn restricted_roots(
    pair: &SymmetricPair,
    cartan: &CartanSubspaceData,
) -> Result<(Vec<RestrictedRoot>, Subspace)> {
    let alg = pair.algebra();
    let mut parts: Vec<(Vec<i64>, Subspace)> = vec![(vec![], pair.g())];
    for (j, a) in cartan.basis.iter().enumerate() {
        let ad = alg.ad_matrix(a)?;
        let mut next = Vec::new();
        for (func, space) in parts {
            let local = restrict(&ad, &space)?;
            let eig = integer_eigenvalues(&local, true).map_err(|e| match e {
                Error::NonIntegralSpectrum { residual } => Error::NonIntegralSpectrum {
                    residual: format!("{residual} (Cartan basis element {j})"),
                },
                other => other,
            })?;
            for (lambda, sub) in eig {
                let vectors: Vec<Vec<Scalar>> =
                    sub.basis_vectors().iter().map(|c| space.combine(c)).collect();
                let mut f = func.clone();
                f.push(lambda);
                next.push((f, Subspace::span(pair.dim(), &vectors)));
            }
        }
        parts = next;
    }
    let r = cartan.r;
    let mut zero_space = Subspace::zero(pair.dim());
    let mut roots = BTreeMap::new();
    for (f, space) in parts {
        if f.iter().all(|&x| x == 0) && f.len() == r {
            zero_space = space;
        } else {
            roots.insert(f, space);
        }
    }
    let total = zero_space.dim() + roots.values().map(Subspace::dim).sum::<usize>();
    if total != pair.dim() {
        return Err(Error::Internal(format!(
            "root decomposition covers {total} of {} dimensions",
            pair.dim()
        )));
    }
    let roots: Vec<RestrictedRoot> = roots
        .into_iter()
        .map(|(functional, space)| RestrictedRoot { functional, space })
        .collect();
    // θ sends the α-space onto the (−α)-space
    for root in &roots {
        let neg: Vec<i64> = root.functional.iter().map(|x| -x).collect();
        let partner = roots
            .iter()
            .find(|r| r.functional == neg)
            .ok_or_else(|| Error::Structural(format!("root {:?} has no negative", root.functional)))?;
        let image = root.space.image_under(&pair.entry.theta);
        if image != partner.space {
            return Err(Error::Structural(format!(
                "theta does not map the {:?}-space onto the {:?}-space",
                root.functional, neg
            )));
        }
    }
    Ok((roots, zero_space))
}

fn positivity(f: &[i64], base: i128) -> i128 {
    f.iter()
        .enumerate()
        .map(|(j, &x)| base.pow(j as u32) * x as i128)
        .sum()
}

/// Positive roots via `ℓ(α) = Σ_j M^j α_j` with `M = 10000`, and the simple
/// roots: positive, indivisible, not a sum of two positive roots.
pub fn simple_system(roots: &[RestrictedRoot], r: usize) -> Result<(Vec<usize>, Vec<usize>, i128)> {
    if roots.is_empty() {
        return Err(Error::Structural("empty root system".into()));
    }
    let mut base: i128 = 10_000;
    let values = loop {
        let values: Vec<i128> = roots.iter().map(|a| positivity(&a.functional, base)).collect();
        let mut sorted = values.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() == values.len() && !values.contains(&0) {
            break values;
        }
        base = base
            .checked_mul(10)
            .filter(|b| *b < 1_000_000_000_000)
            .ok_or_else(|| Error::Structural("positivity functional keeps tying".into()))?;
    };
    let positives: Vec<usize> = (0..roots.len()).filter(|&i| values[i] > 0).collect();
    let is_root = |f: &[i64]| roots.iter().any(|a| a.functional == f);
    let simples: Vec<usize> = positives
        .iter()
        .copied()
        .filter(|&i| {
            let f = &roots[i].functional;
            let divisible = (2..=4).any(|m| {
                f.iter().all(|x| x % m == 0) && is_root(&f.iter().map(|x| x / m).collect::<Vec<_>>())
            });
            let decomposable = positives.iter().any(|&j| {
                let rest: Vec<i64> = f.iter().zip(&roots[j].functional).map(|(a, b)| a - b).collect();
                positives.iter().any(|&k| roots[k].functional == rest)
            });
            !divisible && !decomposable
        })
        .collect();
    if simples.len() != r {
        return Err(Error::Structural(format!(
            "found {} simple roots, expected {r}",
            simples.len()
        )));
    }
    Ok((positives, simples, base))
}

/// The unique `c ∈ a` with `α(c) = 2` for each simple root `α`.
pub fn chamber_element(cartan: &CartanSubspaceData, simples: &[&RestrictedRoot]) -> Result<Element> {
    let r = cartan.r;
    if simples.len() != r {
        return Err(Error::Structural("need exactly r simple roots".into()));
    }
    let mut system = Matrix::zeros(r, r);
    for (i, alpha) in simples.iter().enumerate() {
        for j in 0..r {
            system.set(i, j, Scalar::from_int(alpha.functional[j]));
        }
    }
    let sol = solve_linear(&system, &vec![Scalar::from_int(2); r])?
        .ok_or_else(|| Error::Structural("chamber system inconsistent".into()))?;
    if !sol.kernel.is_zero() {
        return Err(Error::Structural("simple roots do not span the dual of a".into()));
    }
    let dim = cartan.basis[0].dim();
    let mut c = Element::zero(dim);
    for (x, a) in sol.particular.iter().zip(&cartan.basis) {
        if !x.is_zero() {
            c = &c + &a.scale(x);
        }
    }
    Ok(c)
}

/// Restricted roots, simple system and chamber element in one go, with the
/// bookkeeping `Σ_{α>0} mult α = dim p − r` enforced.
pub fn root_data(pair: &SymmetricPair, cartan: &CartanSubspaceData) -> Result<RestrictedRootData> {
    let (roots, zero_space) = restricted_roots(pair, cartan)?;
    let (positives, simples, base) = simple_system(&roots, cartan.r)?;
    let positive_mult: usize = positives.iter().map(|&i| roots[i].multiplicity()).sum();
    if positive_mult != pair.p.dim() - cartan.r {
        return Err(Error::Structural(format!(
            "positive multiplicities sum to {positive_mult}, expected dim p - r = {}",
            pair.p.dim() - cartan.r
        )));
    }
    let simple_refs: Vec<&RestrictedRoot> = simples.iter().map(|&i| &roots[i]).collect();
    let chamber = chamber_element(cartan, &simple_refs)?;
    for alpha in &simple_refs {
        let value = root_value(pair.algebra(), alpha, &chamber)?;
        if value != Scalar::from_int(2) {
            return Err(Error::Internal("chamber element misses alpha(c) = 2".into()));
        }
    }
    Ok(RestrictedRootData {
        roots,
        zero_space,
        positives,
        simples,
        positivity_base: base,
        chamber,
    })
}

/// `α(x)` for `x ∈ a`, read off from `[x, v] = α(x) v` on a root vector.
pub fn root_value(alg: &LieAlgebra, alpha: &RestrictedRoot, x: &Element) -> Result<Scalar> {
    let v = alpha
        .space
        .basis_vectors()
        .into_iter()
        .next()
        .ok_or_else(|| Error::Internal("empty root space".into()))?;
    let image = alg.bracket(x, &Element::new(v.clone()))?;
    let pivot = v.iter().position(|c| !c.is_zero()).unwrap();
    let value = &image.coords()[pivot] / &v[pivot];
    if Element::new(v).scale(&value) != image {
        return Err(Error::Structural("element does not act on the root space by a scalar".into()));
    }
    Ok(value)
}

/// Outcome of comparing the centralizers of `c` with those of `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberCheck {
    pub k_c: Subspace,
    pub k_a: Subspace,
    pub p_c: Subspace,
    pub holds: bool,
}

/// `k^c = k^a` and `p^c = a`.
pub fn verify_chamber_centralizers(
    pair: &SymmetricPair,
    cartan: &CartanSubspaceData,
    c: &Element,
) -> Result<ChamberCheck> {
    let alg = pair.algebra();
    let k_c = alg.centralizer(&pair.k, std::slice::from_ref(c))?;
    let k_a = alg.centralizer(&pair.k, &cartan.basis)?;
    let p_c = alg.centralizer(&pair.p, std::slice::from_ref(c))?;
    let holds = k_c == k_a && p_c == cartan.a;
    Ok(ChamberCheck { k_c, k_a, p_c, holds })
}
