//! Acceptance criteria, one line of output each. Every comparison is exact.

use std::process::Command;

use rand::Rng;
use symcheck::catalog::{build_sl, catalog_ids, find_entry};
use symcheck::cayley::{
    cayley_complex_from_real, cayley_real_from_complex, find_cayley_triple, is_compact_element, Convention,
    RealFormContext,
};
use symcheck::criteria::{
    analyze_element, perp_identity_check, semisimple_witness, verify_pair, PairContext, SampleConfig,
};
use symcheck::lie::Element;
use symcheck::linalg::{integer_eigenvalues, kernel, Matrix, Subspace};
use symcheck::report::{cmd_verify, RunConfig};
use symcheck::sampling::{check_rng, random_element};
use symcheck::scalar::Scalar;
use symcheck::sl2::{complete_normalized_triple, grading_by_h, levi_instance_check, triple_centralizers};
use symcheck::theta::{decompose_kp, root_data, verify_chamber_centralizers};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const SEED: u64 = 0;
const SAMPLES: usize = 100;

fn ctx(id: &str) -> PairContext {
    PairContext::new(decompose_kp(find_entry(id).unwrap()).unwrap()).unwrap()
}

fn rep(c: &PairContext, label: &str) -> Element {
    c.pair.entry.representatives.iter().find(|r| r.label == label).unwrap().element.clone()
}

fn el(c: &PairContext, m: &Matrix) -> Element {
    c.pair.algebra().from_matrix(m).unwrap()
}

fn config() -> SampleConfig {
    SampleConfig {
        seed: SEED,
        samples: SAMPLES,
    }
}

fn structural_golden_numbers() -> Outcome {
    let want = [
        ("sl2-AI", (3, 1, 2, 1)),
        ("sl2xsl2-diag", (6, 3, 3, 1)),
        ("sl3-AI", (8, 3, 5, 2)),
        ("sl2-AIII", (3, 1, 2, 1)),
        ("sl3-AIII12", (8, 4, 4, 1)),
    ];
    for (id, dims) in want {
        let c = ctx(id);
        let got = (c.pair.dim(), c.pair.k.dim(), c.pair.p.dim(), c.cartan.r);
        ensure!(got == dims, "{id}: dims {got:?}, want {dims:?}");
    }
    let c = ctx("sl3-AIII12");
    let data = root_data(&c.pair, &c.cartan).map_err(|e| e.to_string())?;
    ensure!(!data.is_reduced(), "sl3-AIII12 root system should be non-reduced");
    let mult = |f: i64| data.root(&[f]).map(|r| r.multiplicity());
    ensure!(mult(1) == Some(2) && mult(2) == Some(1), "multiplicities {:?} {:?}", mult(1), mult(2));
    Ok("dims of all five pairs; BC1 multiplicities {a:2, 2a:1}".into())
}

fn principal_suite() -> Outcome {
    let want = [("sl2-AI", 1), ("sl2xsl2-diag", 2), ("sl3-AI", 3), ("sl2-AIII", 1), ("sl3-AIII12", 3)];
    for (id, orbit) in want {
        let c = ctx(id);
        let e = rep(&c, "principal");
        let a = analyze_element(&c.pair, &c.cartan, "principal", &e, &Default::default(), config())
            .map_err(|e| e.to_string())?;
        let r = a.report;
        ensure!(r.principal, "{id}: not principal");
        ensure!(r.orbit_dim == orbit, "{id}: orbit dim {} want {orbit}", r.orbit_dim);
        ensure!(r.orbit_dim == c.pair.p.dim() - c.cartan.r, "{id}: orbit dim != dim p - r");
        ensure!(r.even, "{id}: principal element not even");
        ensure!(
            r.minus1_centralizer && r.minus1_grading && r.minus1_even == Some(true),
            "{id}: criteria {} {} {:?}",
            r.minus1_centralizer,
            r.minus1_grading,
            r.minus1_even
        );
    }
    Ok("orbit dims 1, 2, 3, 1, 3; all principal reps even and (-1)-distinguished by all three criteria".into())
}

fn equivalence_suite() -> Outcome {
    let mut count = 0;
    for id in catalog_ids() {
        let c = ctx(id);
        for r in &c.pair.entry.representatives {
            let a = analyze_element(&c.pair, &c.cartan, &r.label, &r.element, &r.expected, config())
                .map_err(|e| e.to_string())?;
            ensure!(a.report.criteria_agree, "{id}/{}: criteria disagree", r.label);
            count += 1;
        }
    }
    let c = ctx("sl3-AI");
    let e = rep(&c, "subregular");
    let a = analyze_element(&c.pair, &c.cartan, "subregular", &e, &Default::default(), config())
        .map_err(|e| e.to_string())?;
    ensure!(!a.report.principal && !a.report.minus1_centralizer, "subregular flags wrong");
    let t = el(&c, &Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -2]]));
    ensure!(
        a.centralizers.p_s == Subspace::span(8, &[t.coords()]),
        "p^s is not spanned by diag(1,1,-2)"
    );
    Ok(format!("{count} representatives agree; subregular witness diag(1,1,-2) spans p^s"))
}

fn perp_suite() -> Outcome {
    let mut total = 0;
    for id in catalog_ids() {
        let c = ctx(id);
        for r in &c.pair.entry.representatives {
            let check = perp_identity_check(&c.pair, &r.element).map_err(|e| e.to_string())?;
            ensure!(check.holds, "{id}/{}: perp identity fails", r.label);
            total += 1;
        }
        let mut rng = check_rng(SEED, id, "acceptance-perp");
        for k in 0..20 {
            let x = random_element(&c.pair.p, &mut rng);
            let check = perp_identity_check(&c.pair, &x).map_err(|e| e.to_string())?;
            ensure!(check.holds, "{id}: perp identity fails on random sample {k}");
            total += 1;
        }
    }
    Ok(format!("{total} elements checked"))
}

fn chamber_suite() -> Outcome {
    let want = [
        ("sl2-AI", Some(Matrix::from_i64(&[&[0, 1], &[1, 0]]))),
        ("sl3-AI", Some(Matrix::from_i64(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]))),
        ("sl3-AIII12", Some(Matrix::from_i64(&[&[0, 2, 0], &[2, 0, 0], &[0, 0, 0]]))),
        ("sl2-AIII", None),
        ("sl2xsl2-diag", None),
    ];
    for (id, c_want) in want {
        let c = ctx(id);
        let data = root_data(&c.pair, &c.cartan).map_err(|e| e.to_string())?;
        for &i in &data.simples {
            let value = symcheck::theta::root_value(c.pair.algebra(), &data.roots[i], &data.chamber)
                .map_err(|e| e.to_string())?;
            ensure!(value == Scalar::from_int(2), "{id}: alpha(c) = {value}");
        }
        let check = verify_chamber_centralizers(&c.pair, &c.cartan, &data.chamber).map_err(|e| e.to_string())?;
        ensure!(check.k_c == check.k_a && check.p_c == c.cartan.a, "{id}: centralizer identities fail");
        if let Some(m) = c_want {
            ensure!(c.pair.algebra().to_matrix(&data.chamber) == Some(m), "{id}: wrong chamber element");
        }
    }
    Ok("c = [[0,1],[1,0]], diag(2,0,-2), 2(E12+E21); k^c = k^a and p^c = a on all pairs".into())
}

fn diagonal_reduction() -> Outcome {
    let c = ctx("sl2xsl2-diag");
    let e = rep(&c, "principal");
    let a = analyze_element(&c.pair, &c.cartan, "principal", &e, &Default::default(), config())
        .map_err(|e| e.to_string())?;
    let minus1 = a.report.minus1_centralizer;
    // e_std in sl2 on its own: g_0 and g_2 of the standard h
    let sl2 = build_sl(2).map_err(|e| e.to_string())?;
    let h_std = sl2.from_matrix(&Matrix::from_i64(&[&[1, 0], &[0, -1]])).map_err(|e| e.to_string())?;
    let parts = integer_eigenvalues(&sl2.ad_matrix(&h_std).unwrap(), true).map_err(|e| e.to_string())?;
    let (g0, g2) = (parts[&0].dim(), parts[&2].dim());
    let distinguished = g0 == g2;
    ensure!(minus1 == distinguished, "diagonal verdict {minus1} vs sl2 verdict {distinguished}");
    ensure!((g0, g2) == (1, 1), "sl2 grading dims ({g0}, {g2})");
    ensure!(
        a.report.dims.g0_minus == 1 && a.report.dims.g2_plus == 1,
        "pair grading dims ({}, {})",
        a.report.dims.g0_minus,
        a.report.dims.g2_plus
    );
    Ok("(e,-e) is (-1)-distinguished and e_std is distinguished in sl2 (1 = 1)".into())
}

fn cayley_suite() -> Outcome {
    let mut reps = 0;
    for id in ["sl2-AI", "sl2-AIII", "sl3-AI", "sl3-AIII12"] {
        let c = ctx(id);
        let real = RealFormContext::new(&c.pair, c.pair.entry.real_form.as_ref().unwrap()).map_err(|e| e.to_string())?;
        let (report, analyses) = verify_pair(&c, config()).map_err(|e| e.to_string())?;
        ensure!(report.pass(), "{id}: {:?}", report.failures);
        for a in &analyses {
            let label = &a.report.label;
            let search =
                find_cayley_triple(&real, &c.pair, &rep(&c, label), Convention::Adjusted).map_err(|e| e.to_string())?;
            let rt = cayley_real_from_complex(&real, &c.pair, &search.triple, Convention::Adjusted)
                .map_err(|e| e.to_string())?;
            let back =
                cayley_complex_from_real(&real, &c.pair, &rt, Convention::Adjusted).map_err(|e| e.to_string())?;
            ensure!(back == search.triple, "{id}/{label}: round trip fails");
            let compact = is_compact_element(&real, &c.pair, &rt).map_err(|e| e.to_string())?;
            ensure!(compact.compact == a.report.minus1_centralizer, "{id}/{label}: compact != minus1");
            if id == "sl2-AI" {
                ensure!(rt.e == el(&c, &Matrix::from_i64(&[&[0, 0], &[1, 0]])), "sl2-AI e'");
                ensure!(rt.h == el(&c, &Matrix::from_i64(&[&[-1, 0], &[0, 1]])), "sl2-AI h'");
                ensure!(rt.f == el(&c, &Matrix::from_i64(&[&[0, 1], &[0, 0]])), "sl2-AI f'");
                ensure!(compact.z_basis.is_empty(), "sl2-AI z != 0");
            }
            if id == "sl3-AI" && label == "subregular" {
                ensure!(compact.gram == Matrix::from_i64(&[&[36]]), "z gram {:?}", compact.gram);
                ensure!(!compact.compact, "subregular should not be compact");
            }
            reps += 1;
        }
    }
    let c = ctx("sl2-AI");
    let real = RealFormContext::new(&c.pair, c.pair.entry.real_form.as_ref().unwrap()).unwrap();
    let e1 = rep(&c, "principal");
    // the two lines of N(p) in split sl2 are swapped by conjugation
    for e in [e1.clone(), e1.conj()] {
        match find_cayley_triple(&real, &c.pair, &e, Convention::Paper) {
            Ok(_) => return Err("paper convention unexpectedly satisfiable".into()),
            Err(err) => ensure!(err.to_string().contains("no Cayley representative found"), "{err}"),
        }
    }
    let paper = RunConfig {
        convention: Convention::Paper,
        ..RunConfig::default()
    };
    let report = cmd_verify("verify", vec![find_entry("sl2-AI").unwrap()], &paper);
    ensure!(report.exit_code == 1, "paper run exit {}", report.exit_code);
    ensure!(
        report.failures.iter().any(|f| f.contains("no Cayley representative found")),
        "paper run does not name the reason"
    );
    Ok(format!(
        "{reps} representatives round-trip with compact <=> (-1)-distinguished; paper convention unsatisfiable on both lines of split sl2, exit 1"
    ))
}

fn randomized_invariants() -> Outcome {
    let mut rng = check_rng(SEED, "acceptance", "linear-algebra");
    let small = |rng: &mut rand_chacha::ChaCha8Rng| Scalar::gaussian(rng.gen_range(-5..=5), rng.gen_range(-1..=1));
    for k in 0..SAMPLES {
        let (rows, cols) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let rank_cap = rng.gen_range(1..=cols);
        // low-rank products make the kernel nontrivial often
        let a = Matrix::from_rows((0..rows).map(|_| (0..rank_cap).map(|_| small(&mut rng)).collect()).collect());
        let b = Matrix::from_rows((0..rank_cap).map(|_| (0..cols).map(|_| small(&mut rng)).collect()).collect());
        let m = &a * &b;
        ensure!(m.rank() + kernel(&m).dim() == cols, "kernel-rank identity fails at sample {k}");
        let n = 5;
        let sub = |rng: &mut rand_chacha::ChaCha8Rng| {
            let count = rng.gen_range(0..=3);
            let vs: Vec<Vec<Scalar>> = (0..count).map(|_| (0..n).map(|_| small(rng)).collect()).collect();
            Subspace::span(n, &vs)
        };
        let (u, w) = (sub(&mut rng), sub(&mut rng));
        let sum = u.sum(&w).unwrap().dim();
        let meet = u.intersect(&w).unwrap().dim();
        ensure!(sum + meet == u.dim() + w.dim(), "Grassmann identity fails at sample {k}");
    }
    for id in catalog_ids() {
        let c = ctx(id);
        let alg = c.pair.algebra();
        let g = c.pair.g();
        let mut rng = check_rng(SEED, id, "acceptance-killing");
        for k in 0..SAMPLES {
            let (x, y, z) = (random_element(&g, &mut rng), random_element(&g, &mut rng), random_element(&g, &mut rng));
            let lhs = alg.killing(&alg.bracket(&x, &y).unwrap(), &z).unwrap();
            let rhs = alg.killing(&x, &alg.bracket(&y, &z).unwrap()).unwrap();
            ensure!(lhs == rhs, "{id}: Killing associativity fails at sample {k}");
            let tx = c.pair.theta(&x);
            let ty = c.pair.theta(&y);
            ensure!(
                alg.killing(&tx, &ty).unwrap() == alg.killing(&x, &y).unwrap(),
                "{id}: theta-invariance fails at sample {k}"
            );
        }
        for r in &c.pair.entry.representatives {
            let t = complete_normalized_triple(&c.pair, &r.element).map_err(|e| e.to_string())?;
            let grading = grading_by_h(&c.pair, &t.h).map_err(|e| e.to_string())?;
            for d in grading.degrees() {
                ensure!(grading.dim(d) == grading.dim(-d), "{id}/{}: dim g_{d} != dim g_-{d}", r.label);
                ensure!(
                    grading.dim_plus(d) == grading.dim_plus(-d) && grading.dim_minus(d) == grading.dim_minus(-d),
                    "{id}/{}: refined symmetry fails at {d}",
                    r.label
                );
            }
            let mut rng = check_rng(SEED, id, &format!("{}/acceptance-graded", r.label));
            let degrees = grading.degrees();
            for k in 0..SAMPLES {
                let a = degrees[rng.gen_range(0..degrees.len())];
                let b = degrees[rng.gen_range(0..degrees.len())];
                let x = random_element(&grading.part(a), &mut rng);
                let y = random_element(&grading.part(b), &mut rng);
                let br = alg.bracket(&x, &y).unwrap();
                ensure!(
                    grading.part(a + b).contains_vector(br.coords()),
                    "{id}/{}: [g_{a}, g_{b}] not in g_{} at sample {k}",
                    r.label,
                    a + b
                );
            }
            let cents = triple_centralizers(&c.pair, &t).map_err(|e| e.to_string())?;
            let mut rng = check_rng(SEED, id, &format!("{}/acceptance-levi", r.label));
            let levi = levi_instance_check(&c.pair, &t, &grading, &cents, &mut rng, SAMPLES).map_err(|e| e.to_string())?;
            ensure!(levi.samples_nilpotent, "{id}/{}: non-nilpotent sample in u_e", r.label);
            if !cents.p_s.is_zero() {
                let mut rng = check_rng(SEED, id, &format!("{}/acceptance-witness", r.label));
                let w = semisimple_witness(&c.pair, &cents.p_s, &mut rng, SAMPLES).map_err(|e| e.to_string())?;
                ensure!(w.is_some(), "{id}/{}: no semisimple witness in p^s", r.label);
            }
        }
    }
    Ok(format!("seed {SEED}, {SAMPLES} samples per check"))
}

fn determinism() -> Outcome {
    let run = |parallel: bool| -> Result<Vec<u8>, String> {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_symcheck"));
        cmd.args(["verify", "all", "--format", "json"]);
        if parallel {
            cmd.arg("--parallel");
        }
        let out = cmd.output().map_err(|e| e.to_string())?;
        ensure!(out.status.code() == Some(0), "verify exited with {:?}", out.status.code());
        Ok(out.stdout)
    };
    let a = run(false)?;
    let b = run(false)?;
    let c = run(true)?;
    let d = run(true)?;
    ensure!(a == b, "two sequential runs differ");
    ensure!(c == d, "two parallel runs differ");
    ensure!(a == c, "parallel output differs from sequential output");
    Ok(format!("{} bytes, identical across 4 runs", a.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("structural golden numbers", structural_golden_numbers),
        ("principal implies (-1)-distinguished", principal_suite),
        ("criteria equivalence", equivalence_suite),
        ("perp identity", perp_suite),
        ("chamber element", chamber_suite),
        ("diagonal pair reduction", diagonal_reduction),
        ("cayley and compactness", cayley_suite),
        ("randomized invariants", randomized_invariants),
        ("determinism", determinism),
    ];
    let mut failed = Vec::new();
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", n + 1),
            Err(why) => {
                println!("criterion {}: FAIL {name}: {why}", n + 1);
                failed.push(n + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
