use num_traits::{One, Zero};

use super::report::{CheckReport, Witness};
use crate::algebra::Algebra;
use crate::catalog::{family_as, CatalogEntry, InvariantValue};
use crate::derivations::{
    centroid, derivation_space, identity_defect, is_excluded_parameter, omega_space, phi, transport, DerivationError,
    DerivationParams, LinearMap, MapSpace, SpaceKind,
};
use crate::linalg::{int, is_zero_vector, unit_vector, Rational};

fn count(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

fn map_text(d: &LinearMap) -> String {
    let mut s = String::new();
    crate::derivations::write_vector(&mut s, &d.vectorize()).expect("writing to a String");
    s
}

fn lie_precondition(a: &Algebra) -> Option<String> {
    a.jacobi_violation()
        .map(|(i, j, k, _)| format!("not a Lie algebra (Jacobi fails on e_{i}, e_{j}, e_{k})"))
}

fn admissible_precondition(t: &Rational) -> Option<String> {
    is_excluded_parameter(t).then(|| format!("t = {t} is excluded (t must avoid 0 and 1)"))
}

fn sampled_note(t: &Rational) -> String {
    format!("sampled at t = {t}; other t ∉ {{0, 1}} are covered by constancy, not by this computation")
}

/// Every basis map of `space` satisfies the `p`-identity on all ordered
/// basis pairs.
pub fn check_defining_identity(a: &Algebra, p: &DerivationParams, space: &MapSpace) -> CheckReport {
    const NAME: &str = "defining_identity";
    let params = vec![p.alpha.clone(), p.beta.clone(), p.gamma.clone()];
    let subject = a.label();
    if space.algebra_dim() != a.dim() {
        return CheckReport::not_applicable(
            NAME,
            &subject,
            params,
            format!("space acts on dimension {}, algebra has dimension {}", space.algebra_dim(), a.dim()),
        );
    }
    for (idx, d) in space.basis().iter().enumerate() {
        if let Some(defect) = identity_defect(a, p, d) {
            let values = defect.lhs.iter().chain(&defect.rhs).cloned().collect();
            let witness = Witness::new(
                format!(
                    "basis map {idx} (column-major [{}]) fails at {defect}; values are lhs then rhs",
                    map_text(d)
                ),
                vec![defect.i, defect.j],
                values,
            );
            return CheckReport::fail(NAME, &subject, params, witness);
        }
    }
    CheckReport::pass(NAME, &subject, params).note(format!(
        "{} basis maps verified on {} ordered basis pairs",
        space.dim(),
        a.dim() * a.dim()
    ))
}

/// `D(μ(e_i, μ(e_j, e_k))) = 0` for every basis `D` of `D(t,1,0)`.
pub fn check_triple_identity(a: &Algebra, t: &Rational) -> CheckReport {
    const NAME: &str = "triple_identity";
    let subject = a.label();
    let params = vec![t.clone()];
    if let Some(reason) = lie_precondition(a).or_else(|| admissible_precondition(t)) {
        return CheckReport::not_applicable(NAME, &subject, params, reason);
    }
    let n = a.dim();
    let space = derivation_space(a, &DerivationParams::phi(t.clone()));
    let triples: Vec<(usize, usize, usize, Vec<Rational>)> = (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
        .filter_map(|(i, j, k)| {
            let v = a.mul(&unit_vector(n, i), &a.basis_product(j, k));
            (!is_zero_vector(&v)).then_some((i, j, k, v))
        })
        .collect();
    for (idx, d) in space.basis().iter().enumerate() {
        for (i, j, k, v) in &triples {
            let image = d.apply(v);
            if !is_zero_vector(&image) {
                let witness = Witness::new(
                    format!(
                        "basis map {idx} (column-major [{}]) sends μ(e_{i}, μ(e_{j}, e_{k})) to a nonzero vector",
                        map_text(d)
                    ),
                    vec![*i, *j, *k],
                    image,
                );
                return CheckReport::fail(NAME, &subject, params, witness);
            }
        }
    }
    CheckReport::pass(NAME, &subject, params)
        .note(format!(
            "{} basis maps, {} nonzero triple products",
            space.dim(),
            triples.len()
        ))
        .note(sampled_note(t))
}

/// A perfect Lie algebra has no nonzero `(t,1,0)`-derivation.
pub fn check_perfect_trivial(a: &Algebra, t: &Rational) -> CheckReport {
    const NAME: &str = "perfect_trivial";
    let subject = a.label();
    let params = vec![t.clone()];
    let reason = lie_precondition(a)
        .or_else(|| (!a.is_perfect()).then(|| "not perfect".to_string()))
        .or_else(|| admissible_precondition(t));
    if let Some(reason) = reason {
        return CheckReport::not_applicable(NAME, &subject, params, reason);
    }
    let space = derivation_space(a, &DerivationParams::phi(t.clone()));
    match space.basis().first() {
        None => CheckReport::pass(NAME, &subject, params).note(sampled_note(t)),
        Some(d) => CheckReport::fail(
            NAME,
            &subject,
            params,
            Witness::new(
                format!("nonzero (t,1,0)-derivation in a space of dimension {}", space.dim()),
                Vec::new(),
                d.vectorize(),
            ),
        ),
    }
}

/// φ takes one value over `t_set`.
pub fn check_constancy(a: &Algebra, t_set: &[Rational]) -> CheckReport {
    const NAME: &str = "constancy";
    let subject = a.label();
    let params = t_set.to_vec();
    let reason = lie_precondition(a)
        .or_else(|| t_set.is_empty().then(|| "empty t set".to_string()))
        .or_else(|| t_set.iter().find_map(admissible_precondition));
    if let Some(reason) = reason {
        return CheckReport::not_applicable(NAME, &subject, params, reason);
    }
    let values: Vec<usize> = t_set.iter().map(|t| phi(a, t)).collect();
    let first = values[0];
    if let Some(pos) = values.iter().position(|&v| v != first) {
        let witness = Witness::new(
            format!(
                "φ({}) = {first} but φ({}) = {}; values are t, φ(t), t', φ(t')",
                t_set[0], t_set[pos], values[pos]
            ),
            Vec::new(),
            vec![t_set[0].clone(), count(first), t_set[pos].clone(), count(values[pos])],
        );
        return CheckReport::fail(NAME, &subject, params, witness);
    }
    CheckReport::pass(NAME, &subject, params)
        .note(format!("common value {first}"))
        .note(format!(
            "sampled at {} values; equality for every t ∉ {{0, 1}} is the constancy theorem, not this computation",
            t_set.len()
        ))
}

/// The quantities entering the bounds on φ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundData {
    pub phi: usize,
    pub omega: usize,
    /// `dim 𝔤⁽²⁾`
    pub derived: usize,
    /// `dim Z(𝔤) ∩ 𝔤⁽²⁾`
    pub center_in_derived: usize,
    /// `dim 𝔤₂`
    pub lower_central: usize,
    /// `dim Ω + dim 𝔤⁽²⁾ · dim(Z ∩ 𝔤⁽²⁾)`
    pub upper: usize,
    /// `dim Ω + dim(𝔤⁽²⁾/𝔤₂) · dim(Z ∩ 𝔤⁽²⁾)`, present when `𝔤₂` is a
    /// nonzero proper subspace of `𝔤⁽²⁾`.
    pub refined: Option<usize>,
}

impl BoundData {
    pub fn holds(&self) -> bool {
        self.omega <= self.phi && self.phi <= self.upper && self.refined.map_or(true, |r| self.phi <= r)
    }
}

pub fn bound_data(a: &Algebra, t: &Rational) -> BoundData {
    let derived = a.derived_algebra();
    let center_in_derived = a.center().intersect(&derived).expect("same ambient space").dim();
    let lower_central = a.lower_central_second().dim();
    let omega = omega_space(a).dim();
    let refined = (lower_central > 0 && lower_central < derived.dim())
        .then(|| omega + (derived.dim() - lower_central) * center_in_derived);
    BoundData {
        phi: phi(a, t),
        omega,
        derived: derived.dim(),
        center_in_derived,
        lower_central,
        upper: omega + derived.dim() * center_in_derived,
        refined,
    }
}

/// `dim Ω ≤ φ ≤ dim Ω + dim L(𝔤⁽²⁾; Z ∩ 𝔤⁽²⁾)`, plus the refined upper
/// bound through `𝔤₂` when it applies.
pub fn check_bounds(a: &Algebra, t: &Rational) -> CheckReport {
    const NAME: &str = "bounds";
    let subject = a.label();
    let params = vec![t.clone()];
    let reason = lie_precondition(a)
        .or_else(|| a.is_perfect().then(|| "perfect".to_string()))
        .or_else(|| admissible_precondition(t));
    if let Some(reason) = reason {
        return CheckReport::not_applicable(NAME, &subject, params, reason);
    }
    let b = bound_data(a, t);
    let summary = format!(
        "dim Ω = {}, φ = {}, upper = {}, refined = {}",
        b.omega,
        b.phi,
        b.upper,
        b.refined.map_or("n/a".to_string(), |r| r.to_string())
    );
    if !b.holds() {
        let mut values = vec![count(b.omega), count(b.phi), count(b.upper)];
        values.extend(b.refined.map(count));
        return CheckReport::fail(
            NAME,
            &subject,
            params,
            Witness::new(format!("{summary}; values are Ω, φ, upper, refined"), Vec::new(), values),
        );
    }
    let mut report = CheckReport::pass(NAME, &subject, params).note(summary);
    if b.phi == b.omega {
        report = report.note("lower bound attained");
    }
    if b.phi == b.upper {
        report = report.note("upper bound attained");
    }
    if b.refined == Some(b.phi) {
        report = report.note("refined bound attained");
    }
    report.note(sampled_note(t))
}

/// Transport to `s = 1` embeds `D(t,1,0)` into the centroid; with `𝔤₂`
/// nonzero and proper in `𝔤⁽²⁾`, also `φ + 1 ≤ dim centroid`.
pub fn check_centroid_embedding(a: &Algebra, t: &Rational) -> CheckReport {
    const NAME: &str = "centroid_embedding";
    let subject = a.label();
    let params = vec![t.clone()];
    let reason = lie_precondition(a)
        .or_else(|| a.is_perfect().then(|| "perfect".to_string()))
        .or_else(|| admissible_precondition(t));
    if let Some(reason) = reason {
        return CheckReport::not_applicable(NAME, &subject, params, reason);
    }
    let n = a.dim();
    let c = centroid(a);
    let space = derivation_space(a, &DerivationParams::phi(t.clone()));
    let mut moved = Vec::with_capacity(space.dim());
    for (idx, d) in space.basis().iter().enumerate() {
        let image = match transport(a, d, t, &Rational::one()) {
            Ok(m) => m,
            Err(e) => {
                return CheckReport::fail(
                    NAME,
                    &subject,
                    params,
                    Witness::new(format!("transport of basis map {idx} failed: {e}"), vec![idx], d.vectorize()),
                )
            }
        };
        if !c.contains(&image) {
            return CheckReport::fail(
                NAME,
                &subject,
                params,
                Witness::new(
                    format!("transport of basis map {idx} is not in the centroid; values are the transported map"),
                    vec![idx],
                    image.vectorize(),
                ),
            );
        }
        moved.push(image);
    }
    let image_dim = MapSpace::from_maps(SpaceKind::Derivations(DerivationParams::centroid()), n, &moved).dim();
    if image_dim != space.dim() {
        return CheckReport::fail(
            NAME,
            &subject,
            params,
            Witness::new(
                format!("{} basis maps transport to a space of dimension {image_dim}", space.dim()),
                Vec::new(),
                vec![count(space.dim()), count(image_dim)],
            ),
        );
    }
    let derived = a.derived_algebra().dim();
    let lower_central = a.lower_central_second().dim();
    let mut report = CheckReport::pass(NAME, &subject, params.clone())
        .note(format!("φ = {}, dim centroid = {}", space.dim(), c.dim()));
    if lower_central > 0 && lower_central < derived {
        if space.dim() + 1 > c.dim() {
            return CheckReport::fail(
                NAME,
                &subject,
                params,
                Witness::new(
                    format!("φ + 1 = {} exceeds dim centroid = {}", space.dim() + 1, c.dim()),
                    Vec::new(),
                    vec![count(space.dim()), count(c.dim())],
                ),
            );
        }
        report = report.note(if space.dim() + 1 == c.dim() {
            "φ + 1 ≤ dim centroid holds with equality"
        } else {
            "φ + 1 ≤ dim centroid holds"
        });
    }
    report.note(sampled_note(t))
}

/// `dim D(t,1,0)(b × K^m) = dim D(t,1,0)(b) + dim(𝔄/𝔄⁽²⁾)·dim Z(𝔄)` when the
/// center of `𝔄 = b × K^m` is exactly the abelian factor.
pub fn check_direct_sum_lemma(b: &Algebra, m: usize, t: &Rational) -> CheckReport {
    const NAME: &str = "direct_sum_lemma";
    let a = crate::catalog::with_abelian_factor(b, m);
    let subject = a.label();
    let params = vec![t.clone(), count(m)];
    if t.is_zero() {
        return CheckReport::not_applicable(NAME, &subject, params, "t = 0");
    }
    let center = a.center();
    let factor = crate::linalg::Subspace::coordinate(a.dim(), b.dim()..a.dim());
    if center != factor {
        return CheckReport::not_applicable(
            NAME,
            &subject,
            params,
            format!("center has dimension {} and is not the abelian factor K^{m}", center.dim()),
        );
    }
    let p = DerivationParams::phi(t.clone());
    let whole = derivation_space(&a, &p).dim();
    let base = derivation_space(b, &p).dim();
    let quotient = a.dim() - a.derived_algebra().dim();
    let predicted = base + quotient * center.dim();
    let summary = format!("{base} + {quotient}·{} = {predicted}, recomputed {whole}", center.dim());
    if whole != predicted {
        return CheckReport::fail(
            NAME,
            &subject,
            params,
            Witness::new(
                format!("{summary}; values are the recomputed and predicted dimensions"),
                Vec::new(),
                vec![count(whole), count(predicted)],
            ),
        );
    }
    CheckReport::pass(NAME, &subject, params).note(summary)
}

/// φ(𝔄_0, t) = 6, φ(𝔄_t, t) = 1 and φ(𝔄_s, t) = 0 for the other sampled `s`.
pub fn check_proposition_table(t: &Rational, s_values: &[Rational]) -> CheckReport {
    const NAME: &str = "proposition_table";
    let subject = "As";
    let mut params = vec![t.clone()];
    params.extend(s_values.iter().cloned());
    if let Some(reason) = admissible_precondition(t) {
        return CheckReport::not_applicable(NAME, subject, params, reason);
    }
    let mut rows: Vec<(Rational, usize)> = vec![(int(0), 6), (t.clone(), 1)];
    for s in s_values {
        if !rows.iter().any(|(r, _)| r == s) {
            rows.push((s.clone(), 0));
        }
    }
    let mut table = Vec::with_capacity(rows.len());
    for (s, expected) in &rows {
        let actual = phi(&family_as(s.clone()), t);
        if actual != *expected {
            return CheckReport::fail(
                NAME,
                subject,
                params,
                Witness::new(
                    format!("φ(As({s}), {t}) = {actual}, expected {expected}; values are s, actual, expected"),
                    Vec::new(),
                    vec![s.clone(), count(actual), count(*expected)],
                ),
            );
        }
        table.push(format!("s = {s}: {actual}"));
    }
    CheckReport::pass(NAME, subject, params).note(table.join(", "))
}

/// `λ(X, Y) = μ(DX, Y)` is antisymmetric and Lie, and `μ + sλ` is Lie for
/// every sampled `s`, for each basis `D` of `D(t,1,0)`.
pub fn check_deformation(a: &Algebra, t: &Rational, s_samples: &[Rational]) -> CheckReport {
    const NAME: &str = "deformation";
    let subject = a.label();
    let mut params = vec![t.clone()];
    params.extend(s_samples.iter().cloned());
    if let Some(reason) = lie_precondition(a).or_else(|| admissible_precondition(t)) {
        return CheckReport::not_applicable(NAME, &subject, params, reason);
    }
    let space = derivation_space(a, &DerivationParams::phi(t.clone()));
    for (idx, d) in space.basis().iter().enumerate() {
        let lambda = match crate::derivations::deformation_cocycle(a, d, t) {
            Ok(l) => l,
            Err(DerivationError::NotAntisymmetric { i, j }) => {
                return CheckReport::fail(
                    NAME,
                    &subject,
                    params,
                    Witness::new(
                        format!(
                            "λ from basis map {idx} (column-major [{}]) has λ(e_{i}, e_{j}) + λ(e_{j}, e_{i}) ≠ 0",
                            map_text(d)
                        ),
                        vec![i, j],
                        d.vectorize(),
                    ),
                )
            }
            Err(e) => {
                return CheckReport::fail(
                    NAME,
                    &subject,
                    params,
                    Witness::new(format!("basis map {idx}: {e}"), vec![idx], d.vectorize()),
                )
            }
        };
        if let Some((i, j, k, v)) = lambda.jacobi_violation() {
            return CheckReport::fail(
                NAME,
                &subject,
                params,
                Witness::new(
                    format!("(V, λ) from basis map {idx} (column-major [{}]) fails Jacobi", map_text(d)),
                    vec![i, j, k],
                    v,
                ),
            );
        }
        for s in s_samples {
            let deformed = a.deformed_product(&lambda, s).expect("same dimension");
            if let Some((i, j, k, v)) = deformed.jacobi_violation() {
                return CheckReport::fail(
                    NAME,
                    &subject,
                    params,
                    Witness::new(
                        format!(
                            "μ + {s}·λ from basis map {idx} (column-major [{}]) fails Jacobi",
                            map_text(d)
                        ),
                        vec![i, j, k],
                        v,
                    ),
                );
            }
        }
    }
    let mut distinct: Vec<&Rational> = s_samples.iter().filter(|s| !s.is_zero()).collect();
    distinct.sort();
    distinct.dedup();
    let certificate = if distinct.len() >= 2 {
        format!(
            "the Jacobi defect of μ + sλ is a polynomial of degree ≤ 2 in s; it vanishes at s = 0 and at {} further \
             values, so μ + sλ is Lie for every s",
            distinct.len()
        )
    } else {
        "fewer than two nonzero s values: Lie property verified at the sampled s only".to_string()
    };
    CheckReport::pass(NAME, &subject, params)
        .note(format!("{} basis maps", space.dim()))
        .note(certificate)
        .note(sampled_note(t))
}

/// `dim D(p)` is unchanged by the change of basis `g`.
pub fn check_isomorphism_invariance(a: &Algebra, g: &LinearMap, p: &DerivationParams) -> CheckReport {
    const NAME: &str = "isomorphism_invariance";
    let subject = a.label();
    let params = vec![p.alpha.clone(), p.beta.clone(), p.gamma.clone()];
    let moved = match a.change_of_basis(g) {
        Ok(b) => b,
        Err(e) => return CheckReport::not_applicable(NAME, &subject, params, e.to_string()),
    };
    let before = derivation_space(a, p).dim();
    let after = derivation_space(&moved, p).dim();
    if before != after {
        return CheckReport::fail(
            NAME,
            &subject,
            params,
            Witness::new(
                format!("dimension {before} becomes {after} under g; values are g column-major"),
                Vec::new(),
                g.vectorize(),
            ),
        );
    }
    CheckReport::pass(NAME, &subject, params).note(format!("dimension {before} under g = [{}]", map_text(g)))
}

/// Recorded invariants of a catalog entry agree with recomputation.
pub fn check_catalog_expectations(entry: &CatalogEntry) -> CheckReport {
    const NAME: &str = "catalog_expectations";
    let mismatches = entry.mismatches();
    if mismatches.is_empty() {
        return CheckReport::pass(NAME, &entry.name, entry.params.clone())
            .note(format!("{} recorded invariants recomputed", entry.expected.len()));
    }
    let description = mismatches
        .iter()
        .map(|m| format!("{}: expected {}, computed {}", m.invariant, m.expected, m.actual))
        .collect::<Vec<_>>()
        .join("; ");
    let as_value = |v: InvariantValue| match v {
        InvariantValue::Flag(b) => count(b as usize),
        InvariantValue::Count(n) => count(n),
    };
    let values = mismatches
        .iter()
        .flat_map(|m| [as_value(m.expected), as_value(m.actual)])
        .collect();
    CheckReport::fail(
        NAME,
        &entry.name,
        entry.params.clone(),
        Witness::new(
            format!("{description}; values are expected, computed pairs"),
            Vec::new(),
            values,
        ),
    )
}

/// The dimensions of `D(−1,1,0)`, `D(0,1,0)` and `D(1,1,0)` are pairwise
/// different on `a`.
pub fn check_collapse_separation(a: &Algebra) -> CheckReport {
    const NAME: &str = "collapse_separation";
    let subject = a.label();
    let ts = [int(-1), int(0), int(1)];
    if let Some(reason) = lie_precondition(a) {
        return CheckReport::not_applicable(NAME, &subject, ts.to_vec(), reason);
    }
    let values: Vec<usize> = ts.iter().map(|t| phi(a, t)).collect();
    let summary = format!("φ(−1) = {}, φ(0) = {}, φ(1) = {}", values[0], values[1], values[2]);
    for x in 0..3 {
        for y in x + 1..3 {
            if values[x] == values[y] {
                return CheckReport::fail(
                    NAME,
                    &subject,
                    ts.to_vec(),
                    Witness::new(
                        format!("{summary}: t = {} and t = {} agree; values are φ(−1), φ(0), φ(1)", ts[x], ts[y]),
                        Vec::new(),
                        values.iter().map(|&v| count(v)).collect(),
                    ),
                );
            }
        }
    }
    CheckReport::pass(NAME, &subject, ts.to_vec()).note(summary)
}
