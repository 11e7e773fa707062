//! sl₂-triples through nilpotent elements of p, the grading by `ad h`, the
//! Jacobson–Morozov parabolic and the centralizers that go with them.

use std::collections::BTreeMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::lie::Element;
use crate::linalg::{integer_eigenvalues, solve_linear, Matrix, Subspace};
use crate::sampling::random_element;
use crate::scalar::Scalar;
use crate::theta::SymmetricPair;

/// `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`, with `h ∈ k` and `e, f ∈ p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedTriple {
    pub e: Element,
    pub h: Element,
    pub f: Element,
    pub span: Subspace,
}

impl NormalizedTriple {
    pub fn elements(&self) -> [Element; 3] {
        [self.e.clone(), self.h.clone(), self.f.clone()]
    }
}

/// Problems with a candidate triple, empty when it is a normalized triple.
pub fn triple_defects(pair: &SymmetricPair, e: &Element, h: &Element, f: &Element) -> Result<Vec<String>> {
    let alg = pair.algebra();
    let two = Scalar::from_int(2);
    let mut out = Vec::new();
    if alg.bracket(h, e)? != e.scale(&two) {
        out.push("[h,e] != 2e".to_string());
    }
    if alg.bracket(h, f)? != f.scale(&-&two) {
        out.push("[h,f] != -2f".to_string());
    }
    if alg.bracket(e, f)? != *h {
        out.push("[e,f] != h".to_string());
    }
    if !pair.in_k(h) {
        out.push("h not in k".to_string());
    }
    if !pair.in_p(e) || !pair.in_p(f) {
        out.push("e or f not in p".to_string());
    }
    Ok(out)
}

/// Builds a checked triple from its three members.
pub fn normalized_triple(pair: &SymmetricPair, e: Element, h: Element, f: Element) -> Result<NormalizedTriple> {
    let defects = triple_defects(pair, &e, &h, &f)?;
    if !defects.is_empty() {
        return Err(Error::Internal(format!("triple check failed: {}", defects.join(", "))));
    }
    let span = Subspace::span(pair.dim(), &[e.coords(), h.coords(), f.coords()]);
    if span.dim() != 3 {
        return Err(Error::Internal("triple does not span a 3-dimensional subalgebra".into()));
    }
    Ok(NormalizedTriple { e, h, f, span })
}

/// The unique `f` with `[h,f] = -2f` and `[e,f] = h`, if any.
pub fn solve_for_f(pair: &SymmetricPair, e: &Element, h: &Element) -> Result<Option<Element>> {
    let alg = pair.algebra();
    let n = pair.dim();
    let shifted = &alg.ad_matrix(h)? + &Matrix::identity(n).scale(&Scalar::from_int(2));
    let system = shifted.vstack(&alg.ad_matrix(e)?)?;
    let mut rhs = vec![Scalar::from_int(0); n];
    rhs.extend_from_slice(h.coords());
    Ok(solve_linear(&system, &rhs)?.map(|s| Element::new(s.particular)))
}

/// Completes a nonzero nilpotent `e ∈ p` to a normalized triple.
///
/// `h₀ = [e, y]` with `ad(e)² y = -2e` is averaged into k, then `f` is
/// solved for and averaged into p. All solves take the rref particular
/// solution, so the output is a function of `e` alone.
pub fn complete_normalized_triple(pair: &SymmetricPair, e: &Element) -> Result<NormalizedTriple> {
    let alg = pair.algebra();
    if e.dim() != pair.dim() {
        return Err(Error::Precondition("element has the wrong dimension".into()));
    }
    if e.is_zero() {
        return Err(Error::Precondition("zero element".into()));
    }
    if !pair.in_p(e) {
        return Err(Error::Precondition("element is not in p".into()));
    }
    if !alg.is_nilpotent_element(e)? {
        return Err(Error::Precondition("element is not nilpotent".into()));
    }
    let ad_e = alg.ad_matrix(e)?;
    let rhs: Vec<Scalar> = e.coords().iter().map(|c| c * &Scalar::from_int(-2)).collect();
    let y = solve_linear(&(&ad_e * &ad_e), &rhs)?
        .ok_or_else(|| Error::Internal("no h in the image of ad e with [h,e] = 2e".into()))?;
    let h0 = Element::new(ad_e.mul_vec(&y.particular));
    let h = pair.project_k(&h0);
    let f0 = solve_for_f(pair, e, &h)?
        .ok_or_else(|| Error::Internal("no f completing the triple".into()))?;
    let f = pair.project_p(&f0);
    normalized_triple(pair, e.clone(), h, f)
}

/// Eigenspaces `g_d` of `ad h`, with `g_d⁺ = g_d ∩ k` and `g_d⁻ = g_d ∩ p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HGrading {
    pub ambient_dim: usize,
    pub parts: BTreeMap<i64, Subspace>,
    pub plus: BTreeMap<i64, Subspace>,
    pub minus: BTreeMap<i64, Subspace>,
}

impl HGrading {
    fn lookup(map: &BTreeMap<i64, Subspace>, d: i64) -> usize {
        map.get(&d).map_or(0, Subspace::dim)
    }

    pub fn dim(&self, d: i64) -> usize {
        Self::lookup(&self.parts, d)
    }

    pub fn dim_plus(&self, d: i64) -> usize {
        Self::lookup(&self.plus, d)
    }

    pub fn dim_minus(&self, d: i64) -> usize {
        Self::lookup(&self.minus, d)
    }

    pub fn part(&self, d: i64) -> Subspace {
        self.parts.get(&d).cloned().unwrap_or_else(|| Subspace::zero(self.ambient_dim))
    }

    /// Sum of the parts with degree in the given range.
    pub fn sum_where(&self, keep: impl Fn(i64) -> bool) -> Result<Subspace> {
        let mut out = Subspace::zero(self.ambient_dim);
        for (d, space) in &self.parts {
            if keep(*d) {
                out = out.sum(space)?;
            }
        }
        Ok(out)
    }

    /// `g_d = 0` for every odd `d`.
    pub fn is_even(&self) -> bool {
        self.parts.iter().all(|(d, s)| d % 2 == 0 || s.is_zero())
    }

    /// `Σ_{d≥0} (dim g_d − dim g_{d+2})`, which equals `dim g^e`.
    pub fn centralizer_dim_from_grading(&self) -> usize {
        self.parts
            .keys()
            .filter(|&&d| d >= 0)
            .map(|&d| self.dim(d) - self.dim(d + 2).min(self.dim(d)))
            .sum()
    }

    /// Degrees with a nonzero part, in increasing order.
    pub fn degrees(&self) -> Vec<i64> {
        self.parts.keys().copied().collect()
    }
}

pub fn grading_by_h(pair: &SymmetricPair, h: &Element) -> Result<HGrading> {
    let parts = integer_eigenvalues(&pair.algebra().ad_matrix(h)?, true)?;
    let mut plus = BTreeMap::new();
    let mut minus = BTreeMap::new();
    for (d, space) in &parts {
        let (sp, sm) = (pair.plus_part(space)?, pair.minus_part(space)?);
        if sp.dim() + sm.dim() != space.dim() {
            return Err(Error::Internal(format!("g_{d} is not theta-stable")));
        }
        plus.insert(*d, sp);
        minus.insert(*d, sm);
    }
    Ok(HGrading {
        ambient_dim: pair.dim(),
        parts,
        plus,
        minus,
    })
}

pub fn is_even(grading: &HGrading) -> bool {
    grading.is_even()
}

/// Centralizers of the triple in g, k and p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleCentralizers {
    pub g_s: Subspace,
    pub k_s: Subspace,
    pub p_s: Subspace,
}

pub fn triple_centralizers(pair: &SymmetricPair, triple: &NormalizedTriple) -> Result<TripleCentralizers> {
    let alg = pair.algebra();
    let ys = triple.elements();
    let g_s = alg.centralizer(&pair.g(), &ys)?;
    let k_s = alg.centralizer(&pair.k, &ys)?;
    let p_s = alg.centralizer(&pair.p, &ys)?;
    if k_s.dim() + p_s.dim() != g_s.dim() {
        return Err(Error::Internal("g^s is not the sum of k^s and p^s".into()));
    }
    Ok(TripleCentralizers { g_s, k_s, p_s })
}

/// `q = l ⊕ u` with `l = g₀` and `u` the positive part; `derived = [u,u]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JMParabolic {
    pub q: Subspace,
    pub l: Subspace,
    pub u: Subspace,
    pub derived: Subspace,
}

pub fn jm_parabolic(pair: &SymmetricPair, grading: &HGrading) -> Result<JMParabolic> {
    let l = grading.part(0);
    let u = grading.sum_where(|d| d > 0)?;
    let q = l.sum(&u)?;
    let derived = pair.algebra().derived_subspace(&u)?;
    if !u.contains(&derived) {
        return Err(Error::Internal("u is not a subalgebra".into()));
    }
    if q.dim() != l.dim() + u.dim() {
        return Err(Error::Internal("l and u overlap".into()));
    }
    Ok(JMParabolic { q, l, u, derived })
}

/// Outcome of checking `g^e = g^s ⊕ u_e` with `u_e` a nilpotent ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviCheck {
    pub g_e: Subspace,
    pub u_e: Subspace,
    pub direct_sum: bool,
    pub ideal: bool,
    pub samples_nilpotent: bool,
    pub holds: bool,
}

pub fn levi_instance_check(
    pair: &SymmetricPair,
    triple: &NormalizedTriple,
    grading: &HGrading,
    centralizers: &TripleCentralizers,
    rng: &mut impl Rng,
    samples: usize,
) -> Result<LeviCheck> {
    let alg = pair.algebra();
    let g_e = alg.centralizer(&pair.g(), std::slice::from_ref(&triple.e))?;
    let positive = grading.sum_where(|d| d >= 1)?;
    let u_e = g_e.intersect(&positive)?;
    let g_s = &centralizers.g_s;
    let direct_sum = g_s.dim() + u_e.dim() == g_e.dim()
        && g_s.intersect(&u_e)?.is_zero()
        && g_s.sum(&u_e)? == g_e;
    let ideal = u_e.contains(&alg.bracket_subspaces(&g_e, &u_e)?);
    let mut samples_nilpotent = true;
    if !u_e.is_zero() {
        for _ in 0..samples {
            let x = random_element(&u_e, rng);
            if !alg.is_nilpotent_element(&x)? {
                samples_nilpotent = false;
                break;
            }
        }
    }
    Ok(LeviCheck {
        holds: direct_sum && ideal && samples_nilpotent,
        g_e,
        u_e,
        direct_sum,
        ideal,
        samples_nilpotent,
    })
}
