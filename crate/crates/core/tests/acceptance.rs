//! One line per acceptance criterion; exits non-zero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use derivscope::catalog::{
    aff, default_catalog, family_as, heisenberg3, sl2, standard_filiform, with_abelian_factor,
};
use derivscope::derivations::{
    algebra_from_structure_vector, centroid, derivation_space, omega_space, pair_count, pair_index, phi,
    products_admitting,
};
use derivscope::linalg::{int, ratio, unit_vector, zero_vector, Subspace};
use derivscope::verifier::{
    bound_data, check_bounds, check_collapse_separation, check_constancy, check_defining_identity,
    check_deformation, check_isomorphism_invariance, check_perfect_trivial, check_proposition_table,
    check_triple_identity, random_invertible_map, CheckReport,
};
use derivscope::{Algebra, DerivationParams, LinearMap, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ensure_passed(r: &CheckReport) -> Result<(), String> {
    ensure(r.passed(), || format!("{r} {:?}", r.notes))
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn default_t() -> Vec<Rational> {
    vec![int(-2), int(-1), ratio(1, 2), int(2), int(3)]
}

fn lie_catalog() -> Vec<Algebra> {
    default_catalog().into_iter().map(|e| e.algebra).filter(Algebra::is_lie).collect()
}

fn non_perfect_lie_catalog() -> Vec<Algebra> {
    lie_catalog().into_iter().filter(|a| !a.is_perfect()).collect()
}

fn proposition_table() -> Outcome {
    let start = Instant::now();
    for t in [int(-1), int(2), ratio(1, 2), int(3)] {
        let s_values = [int(0), t.clone(), &t + int(1), -t.clone()];
        for s in &s_values {
            let expected = if *s == int(0) {
                6
            } else if *s == t {
                1
            } else {
                0
            };
            let got = phi(&family_as(s.clone()), &t);
            ensure(got == expected, || format!("φ(As({s}), {t}) = {got}, expected {expected}"))?;
        }
        ensure_passed(&check_proposition_table(&t, &s_values))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("16 values exact in {elapsed:?}"))
}

fn infinite_family() -> Outcome {
    let start = Instant::now();
    for m in 1..=3usize {
        for t in [int(2), ratio(1, 2)] {
            let on = phi(&with_abelian_factor(&family_as(t.clone()), m), &t);
            ensure(on == 1 + (m + 2) * m, || format!("φ(As({t}) × K^{m}, {t}) = {on}"))?;
            let s = &t + int(1);
            let off = phi(&with_abelian_factor(&family_as(s.clone()), m), &t);
            ensure(off == (m + 2) * m, || format!("φ(As({s}) × K^{m}, {t}) = {off}"))?;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!("m = 1, 2, 3 at t = 2, 1/2 in {elapsed:?}"))
}

fn dimension_three_values() -> Outcome {
    let aff_k = with_abelian_factor(&aff(), 1);
    for t in default_t() {
        let h = phi(&heisenberg3(), &t);
        ensure(h == 3, || format!("φ(h3, {t}) = {h}"))?;
        let g = phi(&aff_k, &t);
        ensure(g == 2, || format!("φ(aff × K, {t}) = {g}"))?;
    }
    Ok("φ(h3) = 3 and φ(aff × K) = 2 at all five t".into())
}

fn perfect_vanishing() -> Outcome {
    for t in [int(-1), int(2), ratio(1, 2)] {
        let v = phi(&sl2(), &t);
        ensure(v == 0, || format!("φ(sl2, {t}) = {v}"))?;
        ensure_passed(&check_perfect_trivial(&sl2(), &t))?;
    }
    Ok("φ(sl2) = 0 at t = −1, 2, 1/2".into())
}

fn constancy_and_collapse() -> Outcome {
    let algebras = non_perfect_lie_catalog();
    for a in &algebras {
        ensure_passed(&check_constancy(a, &default_t()))?;
    }
    let mut summary = Vec::new();
    let mut failures = Vec::new();
    for n in 1..=2 {
        let r = check_collapse_separation(&with_abelian_factor(&aff(), n));
        summary.push(format!("n = {n}: {}", r.notes.first().cloned().unwrap_or_default()));
        if !r.passed() {
            failures.push(format!("n = {n}: {}", r.witness.map(|w| w.description).unwrap_or_default()));
        }
    }
    ensure(failures.is_empty(), || {
        format!(
            "constancy holds on {} algebras, but the values at t = −1, 0, 1 are not pairwise different: {}",
            algebras.len(),
            failures.join("; ")
        )
    })?;
    Ok(format!("constant on {} algebras; {}", algebras.len(), summary.join(", ")))
}

fn bounds_with_sharpness() -> Outcome {
    let t = int(-1);
    let algebras = non_perfect_lie_catalog();
    for a in &algebras {
        ensure_passed(&check_bounds(a, &t))?;
    }
    for n in 0..=2 {
        let b = bound_data(&with_abelian_factor(&heisenberg3(), n), &t);
        ensure(b.holds() && b.phi == b.upper, || format!("h3 × K^{n}: {b:?}"))?;
    }
    for m in 1..=2 {
        let b = bound_data(&with_abelian_factor(&aff(), m), &t);
        ensure(b.holds() && b.phi == b.omega, || format!("aff × K^{m}: {b:?}"))?;
    }
    Ok(format!("{} algebras; upper sharp on h3 × K^n, lower sharp on aff × K^m", algebras.len()))
}

fn filiform_centroid() -> Outcome {
    for n in 4..=6 {
        let f = standard_filiform(n).map_err(|e| e.to_string())?;
        let omega = omega_space(&f).dim();
        let c = centroid(&f).dim();
        ensure(c == 1 + omega, || format!("filiform({n}): centroid {c}, Ω {omega}"))?;
        for t in [int(2), int(-1)] {
            let p = phi(&f, &t);
            ensure(p == omega, || format!("filiform({n}): φ({t}) = {p}, Ω {omega}"))?;
        }
    }
    Ok("centroid = 1 + Ω = 1 + φ for n = 4, 5, 6".into())
}

fn triple_identity() -> Outcome {
    let algebras = lie_catalog();
    for a in &algebras {
        for t in [int(2), int(-1)] {
            ensure_passed(&check_triple_identity(a, &t))?;
        }
    }
    Ok(format!("{} Lie algebras at t = 2, −1", algebras.len()))
}

fn deformations() -> Outcome {
    let algebras = lie_catalog();
    let s = [int(1), int(2), int(3)];
    for a in &algebras {
        let r = check_deformation(a, &int(2), &s);
        ensure_passed(&r)?;
        ensure(r.notes.iter().any(|n| n.contains("degree ≤ 2")), || format!("{}: no certificate", a.label()))?;
    }
    Ok(format!("{} Lie algebras, certificate recorded", algebras.len()))
}

fn solver_oracle() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut solves = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=3);
        let a = common::random_law(n, &mut rng);
        let random = DerivationParams::from_ints(rng.gen_range(-2..=2), rng.gen_range(-2..=2), rng.gen_range(-2..=2));
        let params = [
            DerivationParams::phi(int(2)),
            DerivationParams::phi(int(-1)),
            DerivationParams::phi(ratio(1, 2)),
            DerivationParams::centroid(),
            DerivationParams::from_ints(0, 1, 0),
            DerivationParams::from_ints(1, 0, 0),
            random,
        ];
        for p in &params {
            let space = derivation_space(&a, p);
            let naive = common::naive_derivation_dim(&a, p);
            ensure(space.dim() == naive, || {
                format!("{a:?} with {p}: solver {}, oracle {naive}", space.dim())
            })?;
            ensure_passed(&check_defining_identity(&a, p, &space))?;
            solves += 1;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(30))?;
    Ok(format!("200 laws, {solves} systems agree in {elapsed:?}"))
}

fn invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let params = [DerivationParams::phi(int(2)), DerivationParams::phi(int(-1)), DerivationParams::centroid()];
    let entries = default_catalog();
    for e in &entries {
        for k in 0..20 {
            let g = random_invertible_map(e.algebra.dim(), &mut rng);
            ensure_passed(&check_isomorphism_invariance(&e.algebra, &g, &params[k % params.len()]))?;
        }
    }
    Ok(format!("20 changes of basis on each of {} algebras", entries.len()))
}

/// Law on ℚ⁴ with `μ(e0,e2) = a e0 + c e1 + b e2 + d e3` and
/// `μ(e0,e3) = μ(e1,e2) = t(a e1 + b e3)`.
fn displayed_law(t: &Rational, [a, b, c, d]: [Rational; 4]) -> Vec<Rational> {
    let n = 4;
    let mut v = zero_vector(pair_count(n) * n);
    let mut put = |i: usize, j: usize, w: [Rational; 4]| {
        for (k, x) in w.into_iter().enumerate() {
            v[pair_index(n, i, j) * n + k] = x;
        }
    };
    put(0, 2, [a.clone(), c, b.clone(), d]);
    let tail = [int(0), t * &a, int(0), t * &b];
    put(0, 3, tail.clone());
    put(1, 2, tail);
    v
}

fn products_admitting_shape() -> Outcome {
    let d = LinearMap::from_images(&[unit_vector(4, 1), zero_vector(4), unit_vector(4, 3), zero_vector(4)])
        .map_err(|e| e.to_string())?;
    for t in [int(2), int(3)] {
        let laws = products_admitting(&d, &DerivationParams::phi(t.clone()));
        ensure(laws.dim() == 4, || format!("t = {t}: dimension {}", laws.dim()))?;
        let family: Vec<_> = (0..4)
            .map(|k| {
                let coeffs = std::array::from_fn(|i| if i == k { int(1) } else { int(0) });
                displayed_law(&t, coeffs)
            })
            .collect();
        let family = Subspace::span(&family, laws.ambient_dim()).map_err(|e| e.to_string())?;
        ensure(family == laws, || format!("t = {t}: solution space differs from the displayed family"))?;
        for v in laws.basis_vectors() {
            let a = algebra_from_structure_vector(4, v).map_err(|e| e.to_string())?;
            let (p03, p12) = (a.basis_product(0, 3), a.basis_product(1, 2));
            ensure(p03 == p12 && p03[0] == int(0) && p03[2] == int(0), || {
                format!("t = {t}: basis law {a:?} breaks the shape")
            })?;
            let p02 = a.basis_product(0, 2);
            ensure(p03[1] == &t * &p02[0] && p03[3] == &t * &p02[2], || {
                format!("t = {t}: basis law {a:?} breaks the t-scaling")
            })?;
            for (i, j) in [(0, 1), (1, 3), (2, 3)] {
                ensure(a.basis_product(i, j) == zero_vector(4), || {
                    format!("t = {t}: basis law {a:?} has μ(e{i}, e{j}) ≠ 0")
                })?;
            }
        }
    }
    Ok("dimension 4 at t = 2, 3; solution space equals the displayed family".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("AC1 proposition table", proposition_table),
        ("AC2 infinite-family formula", infinite_family),
        ("AC3 dimension-three values", dimension_three_values),
        ("AC4 perfect vanishing", perfect_vanishing),
        ("AC5 constancy and collapse", constancy_and_collapse),
        ("AC6 bounds with sharpness", bounds_with_sharpness),
        ("AC7 filiform centroid", filiform_centroid),
        ("AC8 triple identity", triple_identity),
        ("AC9 deformations", deformations),
        ("AC10 solver oracle equivalence", solver_oracle),
        ("AC11 change-of-basis invariance", invariance),
        ("AC12 products admitting D", products_admitting_shape),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, run) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
