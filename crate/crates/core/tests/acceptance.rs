//! Release gate: one check per acceptance criterion, all exact (tolerance zero).
//!
//! Run with `cargo test -p hilbert-chern --test acceptance -- --nocapture` to
//! see the per-criterion PASS/FAIL lines.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use hilbert_chern::characters::character_table;
use hilbert_chern::hilbert::{
    ch_taut_direct, ch_taut_lehn, equivariant_chern_char, equivariant_chern_class,
    series_c_tangent, series_ch_taut, series_ch_tangent, verify_t_equals_b_plus_bdual,
    WeightAssignment,
};
use hilbert_chern::identities::{
    catalan, stirling2, verify_hypergeometric_lemma, verify_partial_sums, verify_pk_identity,
    verify_stirling_lemma,
};
use hilbert_chern::number::{binomial, factorial, from_biguint, int, inv_factorial, rat, sign};
use hilbert_chern::verify::{run_suite, Suite, VerifyConfig};
use hilbert_chern::{partitions_of, Partition, Rational, SymFunc, Truncation};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same(expected: &SymFunc, got: &SymFunc, what: &str) -> Outcome {
    ensure(expected == got, || format!("{what}: expected {expected}, got {got}"))
}

fn single_odd_part(mu: &Partition) -> bool {
    mu.len() == 1 && mu.parts()[0] % 2 == 1
}

// 1. c(T) by localization equals the Catalan exponential, n = 1..8, every k.
fn criterion_chern_class_crosscheck() -> Outcome {
    for n in 1..=8 {
        let weights = WeightAssignment::tangent(n);
        let series = series_c_tangent(Truncation::new(n)).weight_component(n);
        for k in 0..=n {
            let local = equivariant_chern_class(n, k, &weights).map_err(|e| e.to_string())?;
            same(&series.degree_component(k), &local, &format!("n={n} c_{k}"))?;
        }
    }
    Ok(())
}

// 2. ch(T) by localization equals 2 e^{p1} Σ p_{2k+1}/(2k+1)!, same range.
fn criterion_chern_character_crosscheck() -> Outcome {
    for n in 1..=8 {
        let weights = WeightAssignment::tangent(n);
        let series = series_ch_tangent(Truncation::new(n)).weight_component(n);
        for k in 0..=n {
            let local = equivariant_chern_char(n, k, &weights).map_err(|e| e.to_string())?;
            same(&series.degree_component(k), &local, &format!("n={n} ch_{k}"))?;
        }
    }
    Ok(())
}

// 3. Top classes through localization: c_{2k} = (-1)^k C_k p_{2k+1}/(2k+1) and
//    ch_{2k} = 2 p_{2k+1}/(2k+1)! for k ≤ 4; c_{n-1} = ch_{n-1} = 0 for even n ≤ 8.
fn criterion_top_classes() -> Outcome {
    for k in 0..=4 {
        let n = 2 * k + 1;
        let weights = WeightAssignment::tangent(n);
        let c_coeff = sign(k) * from_biguint(&catalan(k)) / int(n as i64);
        let ch_coeff = int(2) * inv_factorial(n);
        let c = equivariant_chern_class(n, n - 1, &weights).map_err(|e| e.to_string())?;
        let ch = equivariant_chern_char(n, n - 1, &weights).map_err(|e| e.to_string())?;
        same(&SymFunc::p(n).scale(&c_coeff), &c, &format!("c_{} on Hilb^{n}", n - 1))?;
        same(&SymFunc::p(n).scale(&ch_coeff), &ch, &format!("ch_{} on Hilb^{n}", n - 1))?;
    }
    for n in (2..=8).step_by(2) {
        let weights = WeightAssignment::tangent(n);
        let c = equivariant_chern_class(n, n - 1, &weights).map_err(|e| e.to_string())?;
        let ch = equivariant_chern_char(n, n - 1, &weights).map_err(|e| e.to_string())?;
        ensure(c.is_zero() && ch.is_zero(), || format!("n={n}: c = {c}, ch = {ch}"))?;
    }
    Ok(())
}

// 4. 𝒟(p1^n/n!) = closed form = weight-n part of e^{p1} Σ (-1)^{k-1} p_k/k!, n ≤ 10.
fn criterion_tautological_triple() -> Outcome {
    let series = series_ch_taut(Truncation::new(10));
    for n in 0..=10 {
        let direct = ch_taut_direct(n);
        same(&direct, &ch_taut_lehn(n), &format!("n={n} operator"))?;
        same(&direct, &series.weight_component(n), &format!("n={n} series"))?;
    }
    Ok(())
}

// 5. ch(T Hilb^n) = ch(B_n) + ch(B_n*) for n ≤ 8.
fn criterion_decomposition() -> Outcome {
    for n in 0..=8 {
        ensure(verify_t_equals_b_plus_bdual(n), || format!("n={n}"))?;
    }
    Ok(())
}

// 6. The lemmas used in the proofs.
fn criterion_identities() -> Outcome {
    for k in 0..=6 {
        ensure(verify_pk_identity(k), || format!("P_k factorization k={k}"))?;
    }
    for k in 0..=5 {
        ensure(verify_hypergeometric_lemma(k), || format!("hypergeometric lemma k={k}"))?;
    }
    for n in 0..=15 {
        ensure(verify_stirling_lemma(n), || format!("Stirling lemma n={n}"))?;
    }
    for k in 1..=7 {
        ensure(verify_partial_sums(k), || format!("partial sums k={k}"))?;
    }
    for n in 0..=12 {
        let s = stirling2(n + 1, n).map_err(|e| e.to_string())?;
        ensure(s == binomial(n + 1, 2), || format!("S({}, {n}) = {s}", n + 1))?;
    }
    Ok(())
}

// 7. Orthonormality and dimensions (n ≤ 8), Σ 1/h² = 1/n! (n ≤ 10), exp/log
//    round trips to weight 8, odd vanishing (n ≤ 8), single-odd-part support
//    of log c(T) and e^{-p1} ch(T) to weight 9.
fn criterion_properties() -> Outcome {
    for n in 0..=8 {
        let table = character_table(n);
        let parts = table.partitions();
        for a in parts {
            for b in parts {
                let inner: Rational = parts
                    .iter()
                    .map(|mu| int(table.value(a, mu) * table.value(b, mu)) / from_biguint(&mu.z_factor()))
                    .sum();
                let expected = if a == b { Rational::one() } else { Rational::zero() };
                ensure(inner == expected, || format!("<χ^{a}, χ^{b}> = {inner}"))?;
            }
            let dim = table.value(a, &Partition::ones(n));
            ensure(BigUint::from(dim as u64) == factorial(n) / a.hook_product(), || {
                format!("dim χ^{a} = {dim}")
            })?;
        }
    }
    for n in 0..=10 {
        let total: Rational = partitions_of(n)
            .iter()
            .map(|l| {
                let h = from_biguint(&l.hook_product());
                (&h * &h).recip()
            })
            .sum();
        ensure(total == inv_factorial(n), || format!("Σ 1/h² at n={n} is {total}"))?;
    }
    let t8 = Truncation::new(8);
    let mut inputs: Vec<SymFunc> = (1..=8)
        .flat_map(partitions_of)
        .map(|mu| SymFunc::monomial(mu, rat(3, 7)))
        .collect();
    inputs.push(SymFunc::p(1) - SymFunc::p(3).scale(&rat(1, 3)) + SymFunc::p(5).scale(&rat(2, 5)));
    inputs.push(SymFunc::p(2).scale(&rat(-5, 2)) + SymFunc::monomial(Partition::from_unsorted(vec![3, 1]), int(4)));
    for f in inputs {
        let back = f.exp_series(t8).and_then(|e| e.log_series(t8)).map_err(|e| e.to_string())?;
        same(&f, &back, "log(exp f)")?;
    }
    for n in 1..=8 {
        let weights = WeightAssignment::tangent(n);
        for k in (1..=n).filter(|k| k % 2 == 1) {
            let c = equivariant_chern_class(n, k, &weights).map_err(|e| e.to_string())?;
            ensure(c.is_zero(), || format!("c_{k} on Hilb^{n} = {c}"))?;
        }
    }
    let t9 = Truncation::new(9);
    let log_c = series_c_tangent(t9).log_series(t9).map_err(|e| e.to_string())?;
    ensure(log_c.terms().all(|(mu, _)| single_odd_part(mu)), || format!("log c(T) = {log_c}"))?;
    let damped = (-SymFunc::p(1))
        .exp_series(t9)
        .map_err(|e| e.to_string())?
        .mul(&series_ch_tangent(t9), t9);
    ensure(damped.terms().all(|(mu, _)| single_odd_part(mu)), || format!("e^(-p1) ch(T) = {damped}"))?;
    Ok(())
}

// 8. `verify all` under 5 minutes; one n = 12 class under 1 minute.
fn criterion_performance() -> Outcome {
    let start = Instant::now();
    let report = run_suite(Suite::All, &VerifyConfig::default());
    let all_elapsed = start.elapsed();
    ensure(report.all_pass(), || {
        let failed: Vec<_> = report.failures().map(|r| r.name.clone()).collect();
        format!("verify all failures: {failed:?}")
    })?;
    ensure(all_elapsed < Duration::from_secs(300), || format!("verify all took {all_elapsed:?}"))?;

    let start = Instant::now();
    let weights = WeightAssignment::tangent(12);
    let c = equivariant_chern_class(12, 6, &weights).map_err(|e| e.to_string())?;
    let single_elapsed = start.elapsed();
    ensure(!c.is_zero(), || "c_6 on Hilb^12 vanished".into())?;
    ensure(single_elapsed < Duration::from_secs(60), || format!("n=12 class took {single_elapsed:?}"))?;
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 chern class: localization = Catalan exponential", criterion_chern_class_crosscheck),
        ("2 chern character: localization = 2e^p1 series", criterion_chern_character_crosscheck),
        ("3 top classes alpha_k, beta_k and even vanishing", criterion_top_classes),
        ("4 tautological character triple agreement", criterion_tautological_triple),
        ("5 decomposition T = B + B*", criterion_decomposition),
        ("6 identity suite", criterion_identities),
        ("7 property suites", criterion_properties),
        ("8 performance", criterion_performance),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(()) => println!("PASS {name}"),
            Err(why) => {
                println!("FAIL {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
