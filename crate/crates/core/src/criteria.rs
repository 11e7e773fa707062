//! Decision procedures on nilpotent elements of p and the per-pair battery
//! that cross-checks them.

use rand::Rng;
use serde::Serialize;

use crate::catalog::ExpectedFlags;
use crate::error::{Error, Result};
use crate::lie::Element;
use crate::linalg::{kernel, Matrix, Subspace};
use crate::sampling::{check_rng, random_element};
use crate::sl2::{
    complete_normalized_triple, grading_by_h, jm_parabolic, levi_instance_check, triple_centralizers, HGrading,
    NormalizedTriple, TripleCentralizers,
};
use crate::theta::{root_data, verify_cartan_subspace, verify_chamber_centralizers, CartanSubspaceData, SymmetricPair};

/// Number of random elements of p run through the perp identity per pair.
pub const RANDOM_PERP_SAMPLES: usize = 20;

/// `x ∈ p` and `x` nilpotent.
pub fn is_in_np(pair: &SymmetricPair, x: &Element) -> Result<bool> {
    Ok(pair.in_p(x) && pair.algebra().is_nilpotent_element(x)?)
}

/// `dim k − dim k^e`.
pub fn orbit_dimension(pair: &SymmetricPair, e: &Element) -> Result<usize> {
    let k_e = pair.algebra().centralizer(&pair.k, std::slice::from_ref(e))?;
    Ok(pair.k.dim() - k_e.dim())
}

/// Orbit dimension equals `dim p − r`, the dimension of the nilpotent cone.
pub fn is_principal(pair: &SymmetricPair, cartan: &CartanSubspaceData, e: &Element) -> Result<bool> {
    Ok(orbit_dimension(pair, e)? == pair.p.dim() - cartan.r)
}

/// `p^s = 0`.
pub fn minus1_via_centralizer(centralizers: &TripleCentralizers) -> bool {
    centralizers.p_s.is_zero()
}

/// `dim g₀⁻ = dim g₂⁺`.
pub fn minus1_via_grading(grading: &HGrading) -> bool {
    grading.dim_minus(0) == grading.dim_plus(2)
}

/// Dimensions entering the even-case criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EvenCaseDims {
    pub l_minus: usize,
    pub u_plus: usize,
    pub derived_plus: usize,
}

/// For even gradings, `dim l⁻ = dim u⁺ − dim [u,u]⁺`. `None` when the
/// grading has odd parts.
pub fn minus1_via_even(pair: &SymmetricPair, grading: &HGrading) -> Result<Option<(bool, EvenCaseDims)>> {
    if !grading.is_even() {
        return Ok(None);
    }
    let jm = jm_parabolic(pair, grading)?;
    let l_minus = pair.minus_part(&jm.l)?.dim();
    let u_plus = pair.plus_part(&jm.u)?;
    let derived_plus = pair.plus_part(&jm.derived)?;
    if !u_plus.contains(&derived_plus) {
        return Err(Error::Internal("[u,u]+ is not inside u+".into()));
    }
    let dims = EvenCaseDims {
        l_minus,
        u_plus: u_plus.dim(),
        derived_plus: derived_plus.dim(),
    };
    Ok(Some((l_minus == dims.u_plus - dims.derived_plus, dims)))
}

/// `k^s = 0`.
pub fn is_noticed(centralizers: &TripleCentralizers) -> bool {
    centralizers.k_s.is_zero()
}

/// `[k, x]` together with its Killing-orthocomplement in p and `p^x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerpCheck {
    pub bracket: Subspace,
    pub perp: Subspace,
    pub centralizer: Subspace,
    pub holds: bool,
}

/// Checks `[k, x]^⊥ = p^x` inside p.
pub fn perp_identity_check(pair: &SymmetricPair, x: &Element) -> Result<PerpCheck> {
    let alg = pair.algebra();
    let ad_x = alg.ad_matrix(x)?;
    let images: Vec<Vec<_>> = pair.k.basis_vectors().iter().map(|b| ad_x.mul_vec(b)).collect();
    let bracket = Subspace::span(pair.dim(), &images);
    let gram = pair.killing_gram();
    let rows: Vec<Vec<_>> = bracket.basis_vectors().iter().map(|v| gram.mul_vec(v)).collect();
    let conditions = Matrix::from_rows_with_cols(pair.dim(), rows).vstack(&pair.p.constraints())?;
    let perp = kernel(&conditions);
    let centralizer = alg.centralizer(&pair.p, std::slice::from_ref(x))?;
    Ok(PerpCheck {
        holds: perp == centralizer,
        bracket,
        perp,
        centralizer,
    })
}

/// First sampled nonzero semisimple element of `sub`, if any.
pub fn semisimple_witness(
    pair: &SymmetricPair,
    sub: &Subspace,
    rng: &mut impl Rng,
    samples: usize,
) -> Result<Option<Element>> {
    if sub.is_zero() {
        return Ok(None);
    }
    for _ in 0..samples {
        let x = random_element(sub, rng);
        if !x.is_zero() && pair.algebra().is_semisimple_element(&x)? {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Whether every sampled element of `sub` is nilpotent.
pub fn samples_all_nilpotent(
    pair: &SymmetricPair,
    sub: &Subspace,
    rng: &mut impl Rng,
    samples: usize,
) -> Result<bool> {
    if sub.is_zero() {
        return Ok(true);
    }
    for _ in 0..samples {
        if !pair.algebra().is_nilpotent_element(&random_element(sub, rng))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Seed and sample count for the randomized checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleConfig {
    pub seed: u64,
    pub samples: usize,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig { seed: 0, samples: 100 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleText {
    pub e: String,
    pub h: String,
    pub f: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentativeDims {
    pub g0_minus: usize,
    pub g2_plus: usize,
    pub g_s: usize,
    pub k_s: usize,
    pub p_s: usize,
    pub g_e: usize,
    pub u_e: usize,
    pub bracket_k_e: usize,
    pub p_e: usize,
    pub even_case: Option<EvenCaseDims>,
}

/// Everything computed about one nilpotent element of p.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentativeReport {
    pub label: String,
    pub element: String,
    pub in_np: bool,
    pub orbit_dim: usize,
    pub principal: bool,
    pub even: bool,
    pub triple: TripleText,
    pub dims: RepresentativeDims,
    pub minus1_centralizer: bool,
    pub minus1_grading: bool,
    pub minus1_even: Option<bool>,
    pub noticed: bool,
    pub perp_identity: bool,
    pub levi_instance: bool,
    pub p_s_witness: Option<String>,
    pub semisimple_witness: Option<String>,
    pub p_e_samples_nilpotent: Option<bool>,
    pub criteria_agree: bool,
    pub principal_implications: Option<bool>,
    pub expected_flags_match: bool,
    pub failures: Vec<String>,
}

impl RepresentativeReport {
    pub fn minus1(&self) -> bool {
        self.minus1_centralizer
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Full analysis of one element, along with its triple and centralizers.
pub struct ElementAnalysis {
    pub report: RepresentativeReport,
    pub triple: NormalizedTriple,
    pub centralizers: TripleCentralizers,
}

fn check(failures: &mut Vec<String>, ok: bool, what: &str) {
    if !ok {
        failures.push(what.to_string());
    }
}

/// Runs the whole battery on a nonzero element of N(p).
pub fn analyze_element(
    pair: &SymmetricPair,
    cartan: &CartanSubspaceData,
    label: &str,
    e: &Element,
    expected: &ExpectedFlags,
    config: SampleConfig,
) -> Result<ElementAnalysis> {
    let alg = pair.algebra();
    let in_np = is_in_np(pair, e)?;
    if !in_np {
        return Err(Error::Precondition(format!("{label} is not in N(p)")));
    }
    let rng_for = |check: &str| check_rng(config.seed, pair.id(), &format!("{label}/{check}"));
    let orbit_dim = orbit_dimension(pair, e)?;
    let principal = orbit_dim == pair.p.dim() - cartan.r;
    let triple = complete_normalized_triple(pair, e)?;
    let grading = grading_by_h(pair, &triple.h)?;
    let even = grading.is_even();
    let cents = triple_centralizers(pair, &triple)?;
    let minus1_centralizer = minus1_via_centralizer(&cents);
    let minus1_grading = minus1_via_grading(&grading);
    let even_case = minus1_via_even(pair, &grading)?;
    let minus1_even = even_case.map(|(v, _)| v);
    let noticed = is_noticed(&cents);
    let perp = perp_identity_check(pair, e)?;
    let levi = levi_instance_check(pair, &triple, &grading, &cents, &mut rng_for("levi"), config.samples)?;

    let p_s_witness = cents.p_s.basis_vectors().into_iter().next().map(|v| alg.render(&Element::new(v)));
    let semisimple = semisimple_witness(pair, &cents.p_s, &mut rng_for("semisimple-witness"), config.samples)?;
    let p_e_samples_nilpotent = if minus1_centralizer {
        Some(samples_all_nilpotent(pair, &perp.centralizer, &mut rng_for("p-e-nilpotent"), config.samples)?)
    } else {
        None
    };

    let mut failures = Vec::new();
    let mut verdicts = vec![minus1_centralizer, minus1_grading];
    verdicts.extend(minus1_even);
    let criteria_agree = verdicts.iter().all(|&v| v == minus1_centralizer);
    check(&mut failures, criteria_agree, "minus1 criteria disagree");
    let principal_implications = principal.then(|| {
        let a_s_zero = cartan.a.intersect(&cents.g_s).map(|s| s.is_zero()).unwrap_or(false);
        even && minus1_centralizer && minus1_grading && minus1_even == Some(true) && a_s_zero
    });
    check(
        &mut failures,
        principal_implications.unwrap_or(true),
        "principal element is not even and (-1)-distinguished",
    );
    check(&mut failures, perp.holds, "perp identity fails");
    check(&mut failures, levi.holds, "levi instance check fails");
    if !minus1_centralizer {
        check(&mut failures, semisimple.is_some(), "no semisimple witness found in p^s");
    }
    check(
        &mut failures,
        p_e_samples_nilpotent.unwrap_or(true),
        "p^e contains a sampled non-nilpotent element",
    );
    let self_dual_dims = perp.bracket.dim() + perp.centralizer.dim() == pair.p.dim();
    check(&mut failures, self_dual_dims, "dim [k,e] + dim p^e != dim p");
    check(&mut failures, orbit_dim == perp.bracket.dim(), "orbit dimension differs from dim [k,e]");

    let mut mismatches = Vec::new();
    let mut compare = |name: &str, want: Option<bool>, got: bool| {
        if want.is_some_and(|w| w != got) {
            mismatches.push(name.to_string());
        }
    };
    compare("principal", expected.principal, principal);
    compare("minus1", expected.minus1, minus1_centralizer);
    compare("noticed", expected.noticed, noticed);
    compare("even", expected.even, even);
    if expected.orbit_dim.is_some_and(|d| d != orbit_dim) {
        mismatches.push("orbit_dim".to_string());
    }
    let expected_flags_match = mismatches.is_empty();
    if !expected_flags_match {
        failures.push(format!("expected flags differ: {}", mismatches.join(", ")));
    }

    let report = RepresentativeReport {
        label: label.to_string(),
        element: alg.render(e),
        in_np,
        orbit_dim,
        principal,
        even,
        triple: TripleText {
            e: alg.render(&triple.e),
            h: alg.render(&triple.h),
            f: alg.render(&triple.f),
        },
        dims: RepresentativeDims {
            g0_minus: grading.dim_minus(0),
            g2_plus: grading.dim_plus(2),
            g_s: cents.g_s.dim(),
            k_s: cents.k_s.dim(),
            p_s: cents.p_s.dim(),
            g_e: levi.g_e.dim(),
            u_e: levi.u_e.dim(),
            bracket_k_e: perp.bracket.dim(),
            p_e: perp.centralizer.dim(),
            even_case: even_case.map(|(_, d)| d),
        },
        minus1_centralizer,
        minus1_grading,
        minus1_even,
        noticed,
        perp_identity: perp.holds,
        levi_instance: levi.holds,
        p_s_witness,
        semisimple_witness: semisimple.map(|x| alg.render(&x)),
        p_e_samples_nilpotent,
        criteria_agree,
        principal_implications,
        expected_flags_match,
        failures,
    };
    Ok(ElementAnalysis {
        report,
        triple,
        centralizers: cents,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Dims {
    pub g: usize,
    pub k: usize,
    pub p: usize,
    pub r: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootEntry {
    pub functional: Vec<i64>,
    pub multiplicity: usize,
    pub positive: bool,
    pub simple: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSummary {
    pub count: usize,
    pub reduced: bool,
    pub zero_space_dim: usize,
    pub roots: Vec<RootEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChamberReport {
    pub c: String,
    pub k_c_dim: usize,
    pub k_c_equals_k_a: bool,
    pub p_c_equals_a: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampledCheck {
    pub samples: usize,
    pub passed: usize,
}

/// Criteria verdicts for a whole pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriteriaReport {
    pub dims: Dims,
    pub restricted_roots: RootSummary,
    pub chamber: ChamberReport,
    pub representatives: Vec<RepresentativeReport>,
    pub random_perp: SampledCheck,
    pub theorem_null_p: bool,
    pub theorem_equality: bool,
    pub theorem_derived: bool,
    pub failures: Vec<String>,
}

impl CriteriaReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Structural data shared by everything that looks at a pair.
pub struct PairContext {
    pub pair: SymmetricPair,
    pub cartan: CartanSubspaceData,
}

impl PairContext {
    pub fn new(pair: SymmetricPair) -> Result<Self> {
        let cartan = verify_cartan_subspace(&pair, &pair.entry.cartan_basis)?;
        Ok(PairContext { pair, cartan })
    }
}

/// Runs the battery on every stored representative plus the pair-level
/// checks: chamber identities and the perp identity on random elements.
pub fn verify_pair(ctx: &PairContext, config: SampleConfig) -> Result<(CriteriaReport, Vec<ElementAnalysis>)> {
    let pair = &ctx.pair;
    let cartan = &ctx.cartan;
    let alg = pair.algebra();
    let roots = root_data(pair, cartan)?;
    let chamber = verify_chamber_centralizers(pair, cartan, &roots.chamber)?;
    let mut failures = Vec::new();
    check(&mut failures, chamber.k_c == chamber.k_a, "k^c != k^a");
    check(&mut failures, chamber.p_c == cartan.a, "p^c != a");

    let mut analyses = Vec::new();
    for rep in &pair.entry.representatives {
        let analysis = analyze_element(pair, cartan, &rep.label, &rep.element, &rep.expected, config)?;
        for f in &analysis.report.failures {
            failures.push(format!("{}: {f}", rep.label));
        }
        analyses.push(analysis);
    }

    let mut rng = check_rng(config.seed, pair.id(), "random-perp");
    let mut passed = 0;
    for _ in 0..RANDOM_PERP_SAMPLES {
        let x = random_element(&pair.p, &mut rng);
        if perp_identity_check(pair, &x)?.holds {
            passed += 1;
        }
    }
    check(&mut failures, passed == RANDOM_PERP_SAMPLES, "perp identity fails on a random element of p");

    let principal: Vec<&RepresentativeReport> =
        analyses.iter().map(|a| &a.report).filter(|r| r.principal).collect();
    check(&mut failures, !principal.is_empty(), "no principal representative");
    let theorem_null_p = principal.iter().all(|r| r.minus1_centralizer);
    let theorem_equality = principal.iter().all(|r| r.minus1_grading);
    let theorem_derived = principal.iter().all(|r| r.minus1_even == Some(true));

    let report = CriteriaReport {
        dims: Dims {
            g: pair.dim(),
            k: pair.k.dim(),
            p: pair.p.dim(),
            r: cartan.r,
        },
        restricted_roots: RootSummary {
            count: roots.roots.len(),
            reduced: roots.is_reduced(),
            zero_space_dim: roots.zero_space.dim(),
            roots: roots
                .roots
                .iter()
                .enumerate()
                .map(|(i, a)| RootEntry {
                    functional: a.functional.clone(),
                    multiplicity: a.multiplicity(),
                    positive: roots.positives.contains(&i),
                    simple: roots.simples.contains(&i),
                })
                .collect(),
        },
        chamber: ChamberReport {
            c: alg.render(&roots.chamber),
            k_c_dim: chamber.k_c.dim(),
            k_c_equals_k_a: chamber.k_c == chamber.k_a,
            p_c_equals_a: chamber.p_c == cartan.a,
        },
        representatives: analyses.iter().map(|a| a.report.clone()).collect(),
        random_perp: SampledCheck {
            samples: RANDOM_PERP_SAMPLES,
            passed,
        },
        theorem_null_p,
        theorem_equality,
        theorem_derived,
        failures,
    };
    Ok((report, analyses))
}
