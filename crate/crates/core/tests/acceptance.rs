//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line for
//! each and exits non-zero if any failed.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{sys, weights_by_label_sum, weights_of_degree, weights_up_to_degree};
use thetasum_core::brillnoether::{classify_summands, degree_length_hyp, split_sl, support_dim_hyp};
use thetasum_core::charring::{
    decompose_into_irreducibles, freudenthal_character, multiply, weyl_character_direct, weyl_dimension,
};
use thetasum_core::dominance::{
    brute_force_reduce, dominance_compare, dominance_ideal, reduce_e6, reduce_hyp, reduce_nonhyp,
};
use thetasum_core::lambdaring::{
    adams, congruence_class, factors_through_root_lattice, lambda_power_effective, lambda_power_virtual,
};
use thetasum_core::{CaseSpec, CharElem, RootSystem, RootSystemKind, Weight};

type Outcome = Result<String, String>;

/// (id, name, check, time limit)
type Criterion = (u32, &'static str, fn() -> Outcome, Option<Duration>);

const BUDGET: u64 = 50_000_000;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn e6_dimensions() -> Outcome {
    let e6 = sys(RootSystemKind::E6);
    for (i, expect) in [(1, 27), (6, 27), (2, 78)] {
        let d = weyl_dimension(&e6, e6.fundamental_weight(i).unwrap());
        ensure!(d == BigInt::from(expect), "dim V_w{i} = {d}, expected {expect}");
        let via_char = freudenthal_character(&e6, e6.fundamental_weight(i).unwrap()).unwrap().dimension(&e6);
        ensure!(via_char == d, "character of w{i} has dimension {via_char}");
    }
    Ok("w1 -> 27, w6 -> 27, w2 -> 78".into())
}

fn positivity_matches_dominance(rs: &RootSystem, lambda: &Weight, candidates: &[Weight]) -> Result<usize, String> {
    let ch = freudenthal_character(rs, lambda).map_err(|e| e.to_string())?;
    for mu in candidates {
        let positive = ch.coeff(mu) > BigInt::zero();
        let below = dominance_compare(rs, lambda, mu).unwrap().comparable;
        ensure!(positive == below, "{}: m_{lambda}({mu}) positive = {positive}, mu below = {below}", rs.kind());
    }
    Ok(candidates.len())
}

fn positivity_iff_dominated() -> Outcome {
    let mut checked = 0;
    for kind in [RootSystemKind::SpC(2), RootSystemKind::SpC(3), RootSystemKind::SlA(2)] {
        let rs = sys(kind);
        // candidates reach two degrees past λ so the box strictly contains the ideal
        let pool = weights_up_to_degree(&rs, 8);
        for d in 0..=6 {
            for lambda in weights_of_degree(&rs, d) {
                checked += positivity_matches_dominance(&rs, &lambda, &pool)?;
            }
        }
    }
    let e6 = sys(RootSystemKind::E6);
    let pool = weights_by_label_sum(&e6, 3);
    for i in [1, 2, 6] {
        checked += positivity_matches_dominance(&e6, e6.fundamental_weight(i).unwrap(), &pool)?;
    }
    Ok(format!("{checked} (lambda, mu) pairs"))
}

fn hyp_reduction() -> Outcome {
    let mut tested = 0;
    for n in 1..=6u32 {
        let rs = sys(RootSystemKind::SpC(n));
        for lambda in weights_up_to_degree(&rs, 12) {
            let (d, _) = degree_length_hyp(&lambda);
            let target = (d as usize).min(n as usize);
            let t = reduce_hyp(&rs, &lambda).map_err(|e| format!("{lambda}: {e}"))?;
            t.validate(&rs).map_err(|e| format!("{lambda}: {e}"))?;
            ensure!(dominance_compare(&rs, &lambda, &t.result).unwrap().comparable, "{} not below {lambda}", t.result);
            ensure!(degree_length_hyp(&t.result).1 == target, "C{n} {lambda}: result {} has wrong length", t.result);
            let found = brute_force_reduce(&rs, &lambda, |m| degree_length_hyp(m).1 == target, BUDGET)
                .map_err(|e| e.to_string())?;
            ensure!(found.is_some(), "C{n} {lambda}: brute force finds no weight of length {target}");
            tested += 1;
        }
    }
    Ok(format!("{tested} weights, n <= 6, d <= 12"))
}

fn nonhyp_reduction() -> Outcome {
    let mut tested = 0;
    for n in 1..=5u32 {
        let rs = sys(RootSystemKind::SlA(n));
        let n = n as usize;
        for d in 0..=10 {
            for lambda in weights_of_degree(&rs, d) {
                let t = reduce_nonhyp(&rs, &lambda).map_err(|e| format!("{lambda}: {e}"))?;
                t.validate(&rs).map_err(|e| format!("{lambda}: {e}"))?;
                ensure!(dominance_compare(&rs, &lambda, &t.result).unwrap().comparable, "{} not below {lambda}", t.result);
                let s = split_sl(&rs, &t.result).unwrap();
                let ok = s.length() == (d as usize).min(n) || (s.length() == s.degree() && s.degree() + 1 == n);
                ensure!(ok, "SL{} {lambda}: result {} has l = {}, d = {}", 2 * n, t.result, s.length(), s.degree());
                if n <= 3 && d <= 8 {
                    let disjunction = |m: &Weight| {
                        let s = split_sl(&rs, m).unwrap();
                        s.length() == (d as usize).min(n) || (s.length() == s.degree() && s.degree() + 1 == n)
                    };
                    let found = brute_force_reduce(&rs, &lambda, disjunction, BUDGET).map_err(|e| e.to_string())?;
                    ensure!(found.is_some(), "SL{} {lambda}: brute force finds no witness", 2 * n);
                }
                tested += 1;
            }
        }
    }
    Ok(format!("{tested} weights, n <= 5, d <= 10"))
}

fn e6_reduction() -> Outcome {
    let e6 = sys(RootSystemKind::E6);
    let targets: Vec<Weight> = [1, 2, 6].iter().map(|&i| e6.fundamental_weight(i).unwrap().clone()).collect();
    let mut tested = 0;
    for lambda in weights_by_label_sum(&e6, 5) {
        if lambda.is_zero() {
            continue;
        }
        let t = reduce_e6(&e6, &lambda).map_err(|e| format!("{lambda}: {e}"))?;
        t.validate(&e6).map_err(|e| format!("{lambda}: {e}"))?;
        ensure!(targets.contains(&t.result), "{lambda} reduced to {}", t.result);
        let mut cur = t.start.clone();
        for step in &t.steps {
            let next = e6
                .weight(cur.coords().iter().zip(step.subtracted.coords()).map(|(a, b)| a - b).collect())
                .unwrap();
            ensure!(dominance_compare(&e6, &cur, &next).unwrap().comparable, "step {} at {cur}", step.rule);
            cur = next;
        }
        ensure!(dominance_compare(&e6, &lambda, &t.result).unwrap().comparable, "{} not below {lambda}", t.result);
        tested += 1;
    }
    Ok(format!("{tested} nonzero weights with label sum <= 5"))
}

fn theorem_hyp_dimension() -> Outcome {
    let mut tested = 0;
    for g in 2..=7u32 {
        let rs = sys(RootSystemKind::SpC(g - 1));
        for lambda in weights_up_to_degree(&rs, 12) {
            let (d, _) = degree_length_hyp(&lambda);
            let ideal = dominance_ideal(&rs, &lambda, BUDGET).map_err(|e| e.to_string())?;
            let max_len = ideal.iter().map(|m| degree_length_hyp(m).1).max().unwrap() as u32;
            let expect = (d as u32).min(g - 1);
            ensure!(max_len == expect, "g={g} {lambda}: max length {max_len}, expected {expect}");
            let via_reduction = support_dim_hyp(g, &lambda).map_err(|e| e.to_string())?;
            ensure!(via_reduction == expect, "g={g} {lambda}: support_dim_hyp = {via_reduction}");
            tested += 1;
        }
    }
    Ok(format!("{tested} weights, g <= 7, d <= 12"))
}

fn natural_character(rs: &RootSystem) -> CharElem {
    CharElem::orbit_sum(rs, rs.fundamental_weight(1).unwrap()).unwrap()
}

fn alternating_powers() -> Outcome {
    let mut tested = 0;
    for n in 1..=5u32 {
        let rs = sys(RootSystemKind::SpC(n));
        let v = natural_character(&rs);
        for d in 1..=n {
            let alt = lambda_power_effective(&rs, d, &v).unwrap();
            let irr = decompose_into_irreducibles(&rs, &alt).unwrap();
            let mut expect: Vec<Weight> = (0..=d / 2)
                .map(|i| {
                    let k = (d - 2 * i) as usize;
                    if k == 0 {
                        rs.zero()
                    } else {
                        rs.fundamental_weight(k).unwrap().clone()
                    }
                })
                .collect();
            expect.sort();
            let got: Vec<Weight> = irr.terms().map(|(w, _)| w.clone()).collect();
            ensure!(got == expect, "C{n} Alt^{d}: got {irr}");
            ensure!(irr.terms().all(|(_, c)| c.is_one()), "C{n} Alt^{d}: multiplicities {irr}");
            tested += 1;
        }
    }
    for n in 1..=3u32 {
        let rs = sys(RootSystemKind::SlA(n));
        let v = natural_character(&rs);
        for d in 1..=2 * n - 1 {
            let alt = lambda_power_effective(&rs, d, &v).unwrap();
            let expect = freudenthal_character(&rs, rs.fundamental_weight(d as usize).unwrap()).unwrap();
            ensure!(alt == expect, "SL{} Alt^{d}: {alt} != {expect}", 2 * n);
            tested += 1;
        }
    }
    Ok(format!("{tested} exterior powers"))
}

fn random_effective(rs: &RootSystem, pool: &[Weight], rng: &mut ChaCha8Rng, max_terms: usize) -> CharElem {
    let terms = rng.gen_range(1..=max_terms);
    let picked: Vec<(Weight, i64)> =
        (0..terms).map(|_| (pool[rng.gen_range(0..pool.len())].clone(), rng.gen_range(1..=2))).collect();
    CharElem::from_terms(rs, picked).unwrap()
}

fn small_pool(rs: &RootSystem) -> Vec<Weight> {
    match rs.kind() {
        RootSystemKind::E6 => vec![rs.zero(), rs.fundamental_weight(1).unwrap().clone(), rs.fundamental_weight(6).unwrap().clone()],
        _ => weights_up_to_degree(rs, 2),
    }
}

fn lambda_ring_axioms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let kinds = [
        RootSystemKind::SpC(2),
        RootSystemKind::SpC(3),
        RootSystemKind::SlA(2),
        RootSystemKind::SlA(3),
        RootSystemKind::E6,
    ];
    let mut checks = 0;
    for kind in kinds {
        let rs = sys(kind);
        let pool = small_pool(&rs);
        let one = CharElem::one(&rs);
        let e6 = kind == RootSystemKind::E6;

        for n in 2..=4 {
            ensure!(lambda_power_virtual(&rs, n, &one).unwrap().is_zero(), "{kind}: lambda^{n}(1) != 0");
            ensure!(lambda_power_effective(&rs, n, &one).unwrap().is_zero(), "{kind}: lambda^{n}(1) != 0");
        }

        // virtual = effective on 200 random effective characters
        for _ in 0..200 {
            let x = random_effective(&rs, &pool, &mut rng, 2);
            ensure!(lambda_power_virtual(&rs, 0, &x).unwrap() == one, "{kind}: lambda^0({x}) != 1");
            ensure!(lambda_power_virtual(&rs, 1, &x).unwrap() == x, "{kind}: lambda^1({x}) != x");
            for n in 2..=3 {
                let v = lambda_power_virtual(&rs, n, &x).map_err(|e| e.to_string())?;
                let f = lambda_power_effective(&rs, n, &x).map_err(|e| e.to_string())?;
                ensure!(v == f, "{kind}: lambda^{n}({x}) virtual {v} vs effective {f}");
            }
            checks += 1;
        }

        // addition axiom λ^n(a + b) = Σ λ^i(a) λ^{n-i}(b)
        for _ in 0..if e6 { 3 } else { 10 } {
            let a = random_effective(&rs, &pool, &mut rng, 1);
            let b = random_effective(&rs, &pool, &mut rng, 1);
            let sum = &a + &b;
            for n in 0..=4 {
                let lhs = lambda_power_effective(&rs, n, &sum).unwrap();
                let mut rhs = CharElem::zero(kind);
                for i in 0..=n {
                    let la = lambda_power_effective(&rs, i, &a).unwrap();
                    let lb = lambda_power_effective(&rs, n - i, &b).unwrap();
                    rhs = &rhs + &multiply(&rs, &la, &lb).unwrap();
                }
                ensure!(lhs == rhs, "{kind}: addition axiom fails at n={n} for {a}, {b}");
            }
            checks += 1;
        }

        // Adams operations: ring homomorphisms with Ψ^m Ψ^n = Ψ^{mn}
        for _ in 0..20 {
            let x = random_effective(&rs, &pool, &mut rng, 2);
            let y = &random_effective(&rs, &pool, &mut rng, 2) - &one;
            let xy = multiply(&rs, &x, &y).unwrap();
            for k in 1..=3 {
                let px = adams(&rs, k, &x).unwrap();
                let py = adams(&rs, k, &y).unwrap();
                ensure!(adams(&rs, k, &xy).unwrap() == multiply(&rs, &px, &py).unwrap(), "{kind}: Psi^{k} not multiplicative");
                ensure!(adams(&rs, k, &(&x + &y)).unwrap() == &px + &py, "{kind}: Psi^{k} not additive");
                for m in 1..=3 {
                    ensure!(adams(&rs, m, &px).unwrap() == adams(&rs, m * k, &x).unwrap(), "{kind}: Psi^{m} Psi^{k}");
                }
            }
            checks += 1;
        }
    }
    Ok(format!("{checks} randomized checks over 5 systems"))
}

fn adams_factorization() -> Outcome {
    let mut kinds: Vec<RootSystemKind> = (1..=4).map(RootSystemKind::SpC).collect();
    kinds.extend((1..=3).map(RootSystemKind::SlA));
    kinds.push(RootSystemKind::E6);
    let mut tested = 0;
    for kind in kinds {
        let rs = sys(kind);
        let exp = rs.fundamental_group_exponent();
        let expect_exp = match kind {
            RootSystemKind::SpC(_) => 2,
            RootSystemKind::SlA(n) => 2 * n,
            RootSystemKind::E6 => 3,
        };
        ensure!(exp == expect_exp, "{kind}: exponent {exp}");
        for w in rs.fundamental_weights() {
            let x = freudenthal_character(&rs, w).unwrap();
            ensure!(factors_through_root_lattice(&rs, exp, &x).unwrap(), "{kind}: Psi^{exp} of V_{w} does not factor");
            let outside = congruence_class(&rs, w) != 0;
            if outside {
                ensure!(!factors_through_root_lattice(&rs, 1, &x).unwrap(), "{kind}: Psi^1 of V_{w} factors");
            }
            tested += 1;
        }
    }
    Ok(format!("{tested} fundamental characters"))
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn golden_name(case: &CaseSpec) -> String {
    match case {
        CaseSpec::Hyperelliptic { g } => format!("hyperelliptic_g{g}.json"),
        CaseSpec::NonHyperelliptic { g } => format!("nonhyperelliptic_g{g}.json"),
        CaseSpec::CubicThreefold => "cubic_threefold.json".into(),
    }
}

fn expected_pairs(case: &CaseSpec) -> Vec<String> {
    match case {
        CaseSpec::Hyperelliptic { g } => (1..g - 1).map(|d| format!("W_{d} + W_{}", g - 1 - d)).collect(),
        CaseSpec::NonHyperelliptic { g } => (1..g - 1)
            .flat_map(|d| [format!("W_{d} + W_{}", g - 1 - d), format!("-W_{d} + -W_{}", g - 1 - d)])
            .collect(),
        CaseSpec::CubicThreefold => vec!["S + -S".into(), "-S + S".into()],
    }
}

fn classification_golden() -> Outcome {
    let mut cases: Vec<CaseSpec> = (3..=8).map(|g| CaseSpec::Hyperelliptic { g }).collect();
    cases.extend((4..=8).map(|g| CaseSpec::NonHyperelliptic { g }));
    cases.push(CaseSpec::CubicThreefold);
    for case in &cases {
        let report = classify_summands(case).map_err(|e| e.to_string())?;
        let mut got: Vec<String> = report.pairs.iter().map(|p| format!("{} + {}", p.x, p.y)).collect();
        let mut expect = expected_pairs(case);
        got.sort();
        expect.sort();
        ensure!(got == expect, "{case}: pairs {got:?}, expected {expect:?}");
        ensure!(report.pairs.iter().all(|p| p.up_to_translation()), "{case}: translation marker missing");

        let text = serde_json::to_string_pretty(&report.to_json()).unwrap() + "\n";
        let again = serde_json::to_string_pretty(&classify_summands(case).unwrap().to_json()).unwrap() + "\n";
        ensure!(text == again, "{case}: JSON output is not deterministic");
        let path = golden_dir().join(golden_name(case));
        if std::env::var_os("THETASUM_UPDATE_GOLDEN").is_some() {
            std::fs::write(&path, &text).map_err(|e| e.to_string())?;
        }
        let stored = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        ensure!(stored == text, "{case}: output differs from {}", path.display());
    }
    Ok(format!("{} cases byte-identical to golden files", cases.len()))
}

fn freudenthal_vs_weyl() -> Outcome {
    let mut tested = 0;
    for kind in [RootSystemKind::SpC(2), RootSystemKind::SpC(3), RootSystemKind::SlA(2)] {
        let rs = sys(kind);
        for lambda in weights_up_to_degree(&rs, 6) {
            let f = freudenthal_character(&rs, &lambda).unwrap();
            let w = weyl_character_direct(&rs, &lambda).map_err(|e| e.to_string())?;
            ensure!(f == w, "{kind} {lambda}: Freudenthal {f} vs Weyl {w}");
            ensure!(f.dimension(&rs) == weyl_dimension(&rs, &lambda), "{kind} {lambda}: dimension mismatch");
            tested += 1;
        }
    }
    Ok(format!("{tested} highest weights"))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (1, "E6 dimensions 27/27/78", e6_dimensions, Some(Duration::from_secs(1))),
        (2, "positive multiplicity iff dominated", positivity_iff_dominated, Some(Duration::from_secs(120))),
        (3, "type C length-raising reduction", hyp_reduction, Some(Duration::from_secs(120))),
        (4, "type A length reduction disjunction", nonhyp_reduction, Some(Duration::from_secs(120))),
        (5, "E6 reduction to w1, w2, w6", e6_reduction, Some(Duration::from_secs(60))),
        (6, "max length below lambda is min(d, g-1)", theorem_hyp_dimension, None),
        (7, "alternating powers of the natural representation", alternating_powers, None),
        (8, "lambda-ring axioms and Adams laws", lambda_ring_axioms, None),
        (9, "Adams operations factor through the root lattice", adams_factorization, None),
        (10, "classification golden files", classification_golden, None),
        (11, "Freudenthal equals Weyl character formula", freudenthal_vs_weyl, None),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (id, name, run, limit) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| f == &id.to_string()) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(detail), Some(l)) if elapsed > l => Err(format!("{detail}, but took {elapsed:.2?} > {l:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {id:>2}: {name} ({detail}; {elapsed:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {id:>2}: {name}: {msg} ({elapsed:.2?})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
