//! Batch verification suites. Each suite enumerates its cases up front,
//! checks them in parallel and reports counterexamples sorted, so the
//! output does not depend on scheduling.

use std::time::Instant;

use clap::Args;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use thetasum_core::brillnoether::{classify_summands, degree_length_hyp, split_sl};
use thetasum_core::charring::{decompose_into_irreducibles, freudenthal_character, multiply, weyl_dimension};
use thetasum_core::dominance::{
    brute_force_reduce, dominance_compare, dominant_weights_up_to_degree, dominant_weights_up_to_label_sum,
    reduce_e6, reduce_hyp, reduce_nonhyp,
};
use thetasum_core::lambdaring::{
    adams, congruence_class, factors_through_root_lattice, lambda_power_effective, lambda_power_virtual,
};
use thetasum_core::{CaseSpec, CharElem, Limits, RootSystem, RootSystemKind, Weight};

use crate::commands::{big, trace_json, Output};
use crate::{CommandResult, Failure};

pub const SUITES: [&str; 9] = [
    "c-reduction",
    "a-reduction",
    "e6-reduction",
    "positivity",
    "lambda-axioms",
    "alt-decomp",
    "adams-factor",
    "dims-e6",
    "classify-golden",
];

/// Search budget for the brute force oracles.
const BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, Default, Args)]
pub struct SuiteBounds {
    #[arg(long)]
    pub max_degree: Option<u32>,
    /// Largest rank parameter n (or genus for classify-golden).
    #[arg(long)]
    pub max_n: Option<u32>,
    #[arg(long)]
    pub max_label_sum: Option<u32>,
    /// Random samples per system for lambda-axioms.
    #[arg(long)]
    pub samples: Option<u32>,
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
    /// Worker threads; defaults to rayon's choice.
    #[arg(long)]
    pub threads: Option<usize>,
    /// Restricts the suite to one root system where that makes sense.
    #[arg(skip)]
    pub system: Option<RootSystemKind>,
    #[arg(skip)]
    pub cap: Option<u64>,
}

/// Runs suite `name` and renders the report as JSON on stdout.
pub fn run_verification_suite(name: &str, bounds: &SuiteBounds) -> CommandResult {
    match run(name, bounds) {
        Ok((payload, _)) => {
            let out = serde_json::to_string_pretty(&payload).unwrap();
            CommandResult::ok(payload, out)
        }
        Err(f) => f.into_result(),
    }
}

enum Finding {
    Counter(Value),
    Abort(Failure),
}

impl From<thetasum_core::Error> for Finding {
    fn from(e: thetasum_core::Error) -> Self {
        Finding::Abort(e.into())
    }
}

type Check = Result<(), Finding>;

macro_rules! ensure {
    ($cond:expr, $witness:expr) => {
        if !$cond {
            return Err(Finding::Counter($witness));
        }
    };
}

struct Suite {
    property: &'static str,
    bounds: Value,
    tested: usize,
    counterexamples: Vec<Value>,
}

fn check_all<T, F>(items: &[T], f: F) -> Result<(usize, Vec<Value>), Failure>
where
    T: Sync,
    F: Fn(&T) -> Check + Sync,
{
    let results: Vec<Check> = items.par_iter().map(&f).collect();
    let mut counter = Vec::new();
    for r in results {
        match r {
            Ok(()) => {}
            Err(Finding::Counter(v)) => counter.push(v),
            Err(Finding::Abort(e)) => return Err(e),
        }
    }
    counter.sort_by_key(|v| v.to_string());
    Ok((items.len(), counter))
}

pub(crate) fn run(name: &str, bounds: &SuiteBounds) -> Output {
    let start = Instant::now();
    let go = || -> Result<Suite, Failure> {
        match name {
            "c-reduction" => hyp_reduction(bounds),
            "a-reduction" => nonhyp_reduction(bounds),
            "e6-reduction" => e6_reduction(bounds),
            "positivity" => positivity(bounds),
            "lambda-axioms" => lambda_axioms(bounds),
            "alt-decomp" => alternating_powers(bounds),
            "adams-factor" => adams_factor(bounds),
            "dims-e6" => dims_e6(bounds),
            "classify-golden" => classify_golden(bounds),
            _ => Err(Failure::User(format!(
                "unknown verification suite {name:?} (expected one of {})",
                SUITES.join(", ")
            ))),
        }
    };
    let suite = match bounds.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Failure::User(format!("cannot start {t} threads: {e}")))?
            .install(go)?,
        None => go()?,
    };
    let failures = suite.counterexamples.len();
    let report = json!({
        "suite": name,
        "property": suite.property,
        "bounds": suite.bounds,
        "tested": suite.tested,
        "failures": failures,
        "counterexamples": suite.counterexamples,
        "wall_time_ms": start.elapsed().as_millis() as u64,
    });
    if failures > 0 {
        return Err(Failure::Counterexample(report));
    }
    let text = format!(
        "{name}: {} cases, 0 failures ({} ms)\n  {}",
        suite.tested, report["wall_time_ms"], suite.property
    );
    Ok((report, text))
}

fn build(kind: RootSystemKind, bounds: &SuiteBounds) -> Result<RootSystem, Failure> {
    let rs = RootSystem::build(kind)?;
    Ok(match bounds.cap {
        Some(c) => rs.with_limits(Limits::uniform(c)),
        None => rs,
    })
}

/// Systems `family(n)` for `n ≤ max_n`, or just `--system` when it is of
/// the right family.
fn family(
    bounds: &SuiteBounds,
    default_max: u32,
    is_member: fn(RootSystemKind) -> bool,
    make: fn(u32) -> RootSystemKind,
    what: &str,
) -> Result<Vec<RootSystem>, Failure> {
    let kinds: Vec<RootSystemKind> = match bounds.system {
        Some(k) if is_member(k) => vec![k],
        Some(k) => return Err(Failure::User(format!("system mismatch: this suite runs on {what}, not {k}"))),
        None => (1..=bounds.max_n.unwrap_or(default_max)).map(make).collect(),
    };
    kinds.into_iter().map(|k| build(k, bounds)).collect()
}

fn only_e6(bounds: &SuiteBounds) -> Result<RootSystem, Failure> {
    match bounds.system {
        None | Some(RootSystemKind::E6) => build(RootSystemKind::E6, bounds),
        Some(k) => Err(Failure::User(format!("system mismatch: this suite runs on E6, not {k}"))),
    }
}

fn weights_to(rs: &RootSystem, max_degree: u32) -> Result<Vec<Weight>, Failure> {
    Ok(dominant_weights_up_to_degree(rs, max_degree)?)
}

fn hyp_reduction(bounds: &SuiteBounds) -> Result<Suite, Failure> {
    let max_d = bounds.max_degree.unwrap_or(12);
    let systems = family(bounds, 6, |k| matches!(k, RootSystemKind::SpC(_)), RootSystemKind::SpC, "C_n")?;
    let mut items = Vec::new();
    for rs in &systems {
        for w in weights_to(rs, max_d)? {
            items.push((rs, w));
        }
    }
    let (tested, counterexamples) = check_all(&items, |(rs, lambda)| {
        let n = rs.rank();
        let (d, _) = degree_length_hyp(lambda);
        let target = (d as usize).min(n);
        let t = reduce_hyp(rs, lambda)?;
        let bad = |why: &str| json!({"system": rs.kind().to_string(), "lambda": lambda.coords(), "trace": trace_json(&t), "reason": why});
        ensure!(t.validate(rs).is_ok(), bad("invalid trace"));
        ensure!(dominance_compare(rs, lambda, &t.result)?.comparable, bad("result not below lambda"));
        ensure!(degree_length_hyp(&t.result).1 == target, bad("length differs from min(d, n)"));
        let found = brute_force_reduce(rs, lambda, |m| degree_length_hyp(m).1 == target, BUDGET)?;
        ensure!(found.is_some(), bad("exhaustive search finds no weight of that length"));
        Ok(())
    })?;
    Ok(Suite {
        property: "type C reduction: some dominant mu below lambda has length min(d(lambda), n)",
        bounds: json!({"max_degree": max_d, "systems": names(&systems)}),
        tested,
        counterexamples,
    })
}

fn nonhyp_reduction(bounds: &SuiteBounds) -> Result<Suite, Failure> {
    let max_d = bounds.max_degree.unwrap_or(10);
    let systems = family(bounds, 5, |k| matches!(k, RootSystemKind::SlA(_)), RootSystemKind::SlA, "SL_2n")?;
    let mut items = Vec::new();
    for rs in &systems {
        for w in weights_to(rs, max_d)? {
            items.push((rs, w));
        }
    }
    let (tested, counterexamples) = check_all(&items, |(rs, lambda)| {
        let n = rs.kind().ambient_dim() / 2;
        let d = split_sl(rs, lambda)?.degree();
        let t = reduce_nonhyp(rs, lambda)?;
        let bad = |why: &str| json!({"system": rs.kind().to_string(), "lambda": lambda.coords(), "trace": trace_json(&t), "reason": why});
        ensure!(t.validate(rs).is_ok(), bad("invalid trace"));
        ensure!(dominance_compare(rs, lambda, &t.result)?.comparable, bad("result not below lambda"));
        let s = split_sl(rs, &t.result)?;
        let ok = s.length() == d.min(n) || (s.length() == s.degree() && s.degree() + 1 == n);
        ensure!(ok, bad("length is neither min(d, n) nor d(mu) = n - 1"));
        Ok(())
    })?;
    Ok(Suite {
        property: "type A reduction: l(mu) = min(d(lambda), n) or l(mu) = d(mu) = n - 1",
        bounds: json!({"max_degree": max_d, "systems": names(&systems)}),
        tested,
        counterexamples,
    })
}

fn e6_reduction(bounds: &SuiteBounds) -> Result<Suite, Failure> {
    let max_s = bounds.max_label_sum.unwrap_or(5);
    let e6 = only_e6(bounds)?;
    let targets: Vec<Weight> = [1, 2, 6].iter().map(|&i| e6.fundamental_weight(i).unwrap().clone()).collect();
    let items: Vec<Weight> = dominant_weights_up_to_label_sum(&e6, max_s).into_iter().filter(|w| !w.is_zero()).collect();
    let (tested, counterexamples) = check_all(&items, |lambda| {
        let t = reduce_e6(&e6, lambda)?;
        let bad = |why: String| json!({"lambda": lambda.coords(), "trace": trace_json(&t), "reason": why});
        ensure!(t.validate(&e6).is_ok(), bad("invalid trace".into()));
        ensure!(targets.contains(&t.result), bad(format!("ends at {}", t.result)));
        let mut cur = t.start.clone();
        for step in &t.steps {
            let next = e6.weight(cur.coords().iter().zip(step.subtracted.coords()).map(|(a, b)| a - b).collect())?;
            ensure!(dominance_compare(&e6, &cur, &next)?.comparable, bad(format!("step {} not a descent", step.rule)));
            cur = next;
        }
        Ok(())
    })?;
    Ok(Suite {
        property: "every nonzero dominant E6 weight dominates w1, w2 or w6",
        bounds: json!({"max_label_sum": max_s}),
        tested,
        counterexamples,
    })
}

fn positivity(bounds: &SuiteBounds) -> Result<Suite, Failure> {
    let max_d = bounds.max_degree.unwrap_or(6);
    let max_s = bounds.max_label_sum.unwrap_or(3);
    let kinds = match bounds.system {
        Some(k) => vec![k],
        None => vec![RootSystemKind::SpC(2), RootSystemKind::SpC(3), RootSystemKind::SlA(2), RootSystemKind::E6],
    };
    let systems: Vec<RootSystem> = kinds.into_iter().map(|k| build(k, bounds)).collect::<Result<_, _>>()?;
    // (system, lambda, candidate pool)
    let mut items = Vec::new();
    for (i, rs) in systems.iter().enumerate() {
        if rs.kind() == RootSystemKind::E6 {
            for k in [1, 2, 6] {
                items.push((i, rs.fundamental_weight(k).unwrap().clone()));
            }
        } else {
            for w in weights_to(rs, max_d)? {
                items.push((i, w));
            }
        }
    }
    // candidates run two degrees past the largest lambda so they cover every ideal
    let pools: Vec<Vec<Weight>> = systems
        .iter()
        .map(|rs| match rs.kind() {
            RootSystemKind::E6 => Ok(dominant_weights_up_to_label_sum(rs, max_s)),
            _ => weights_to(rs, max_d + 2),
        })
        .collect::<Result<_, _>>()?;
    let (tested, counterexamples) = check_all(&items, |(i, lambda)| {
        let rs = &systems[*i];
        let ch = freudenthal_character(rs, lambda)?;
        for mu in &pools[*i] {
            let positive = ch.coeff(mu) > BigInt::from(0);
            let below = dominance_compare(rs, lambda, mu)?.comparable;
            ensure!(
                positive == below,
                json!({
                    "system": rs.kind().to_string(),
                    "lambda": lambda.coords(),
                    "mu": mu.coords(),
                    "multiplicity": big(&ch.coeff(mu)),
                    "dominated": below,
                })
            );
        }
        Ok(())
    })?;
    Ok(Suite {
        property: "for dominant lambda, mu: the multiplicity of mu in V_lambda is positive iff mu <= lambda",
        bounds: json!({"max_degree": max_d, "e6_max_label_sum": max_s, "systems": names(&systems)}),
        tested,
        counterexamples,
    })
}

fn random_effective(rs: &RootSystem, pool: &[Weight], rng: &mut ChaCha8Rng, max_terms: usize) -> CharElem {
    let terms = rng.gen_range(1..=max_terms);
    let picked: Vec<(Weight, i64)> =
        (0..terms).map(|_| (pool[rng.gen_range(0..pool.len())].clone(), rng.gen_range(1..=2))).collect();
    CharElem::from_terms(rs, picked).unwrap()
}

enum AxiomCase {
    Virtual(CharElem),
    Addition(CharElem, CharElem),
    Adams(CharElem, CharElem),
}

fn lambda_axioms(bounds: &SuiteBounds) -> Result<Suite, Failure> {
    let samples = bounds.samples.unwrap_or(200) as usize;
    let kinds = match bounds.system {
        Some(k) => vec![k],
        None => vec![
            RootSystemKind::SpC(2),
            RootSystemKind::SpC(3),
            RootSystemKind::SlA(2),
            RootSystemKind::SlA(3),
            RootSystemKind::E6,
        ],
    };
    let systems: Vec<RootSystem> = kinds.into_iter().map(|k| build(k, bounds)).collect::<Result<_, _>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    let mut items = Vec::new();
    for (i, rs) in systems.iter().enumerate() {
        // E6 orbits beyond w1 and w6 make the multiset expansion slow
        let pool = match rs.kind() {
            RootSystemKind::E6 => {
                vec![rs.zero(), rs.fundamental_weight(1).unwrap().clone(), rs.fundamental_weight(6).unwrap().clone()]
            }
            _ => weights_to(rs, 2)?,
        };
        for _ in 0..samples {
            items.push((i, AxiomCase::Virtual(random_effective(rs, &pool, &mut rng, 2))));
        }
        for _ in 0..samples.div_ceil(20) {
            let a = random_effective(rs, &pool, &mut rng, 1);
            let b = random_effective(rs, &pool, &mut rng, 1);
            items.push((i, AxiomCase::Addition(a, b)));
        }
        for _ in 0..samples.div_ceil(10) {
            let x = random_effective(rs, &pool, &mut rng, 2);
            let y = &random_effective(rs, &pool, &mut rng, 2) - &CharElem::one(rs);
            items.push((i, AxiomCase::Adams(x, y)));
        }
    }
    let (mut tested, mut counterexamples) = check_all(&items, |(i, case)| {
        let rs = &systems[*i];
        let kind = rs.kind().to_string();
        let one = CharElem::one(rs);
        match case {
            AxiomCase::Virtual(x) => {
                let fail = |what: &str| json!({"system": kind, "x": x.to_string(), "law": what});
                ensure!(lambda_power_virtual(rs, 0, x)? == one, fail("lambda^0 = 1"));
                ensure!(lambda_power_virtual(rs, 1, x)? == *x, fail("lambda^1 = id"));
                for n in 2..=3 {
                    let v = lambda_power_virtual(rs, n, x)?;
                    ensure!(v == lambda_power_effective(rs, n, x)?, fail(&format!("virtual = effective for n = {n}")));
                }
            }
            AxiomCase::Addition(a, b) => {
                let sum = a + b;
                for n in 0..=4 {
                    let mut rhs = CharElem::zero(rs.kind());
                    for i in 0..=n {
                        let la = lambda_power_effective(rs, i, a)?;
                        let lb = lambda_power_effective(rs, n - i, b)?;
                        rhs = &rhs + &multiply(rs, &la, &lb)?;
                    }
                    ensure!(
                        lambda_power_effective(rs, n, &sum)? == rhs,
                        json!({"system": kind, "a": a.to_string(), "b": b.to_string(), "law": format!("lambda^{n}(a + b)")})
                    );
                }
            }
            AxiomCase::Adams(x, y) => {
                let fail = |what: String| json!({"system": kind, "x": x.to_string(), "y": y.to_string(), "law": what});
                let xy = multiply(rs, x, y)?;
                for k in 1..=3 {
                    let px = adams(rs, k, x)?;
                    let py = adams(rs, k, y)?;
                    ensure!(adams(rs, k, &xy)? == multiply(rs, &px, &py)?, fail(format!("Psi^{k} multiplicative")));
                    ensure!(adams(rs, k, &(x + y))? == &px + &py, fail(format!("Psi^{k} additive")));
                    for m in 1..=3 {
                        ensure!(adams(rs, m, &px)? == adams(rs, m * k, x)?, fail(format!("Psi^{m} Psi^{k} = Psi^{}", m * k)));
                    }
                }
            }
        }
        Ok(())
    })?;
    // λ^n(1) = 0 for n > 1
    for rs in &systems {
        for n in 2..=4 {
            tested += 1;
            if !lambda_power_virtual(rs, n, &CharElem::one(rs))?.is_zero() {
                counterexamples.push(json!({"system": rs.kind().to_string(), "law": format!("lambda^{n}(1) = 0")}));
            }
        }
    }
    Ok(Suite {
        property: "lambda-ring axioms, Adams operations are ring maps with Psi^m Psi^n = Psi^mn, \
                   lambda powers via Newton identities agree with exterior powers",
        bounds: json!({"samples": samples, "seed": bounds.seed, "systems": names(&systems)}),
        tested,
        counterexamples,
    })
}

fn alternating_powers(bounds: &SuiteBounds) -> Result<Suite, Failure> {
    let max_c = bounds.max_n.unwrap_or(5);
    let max_a = bounds.max_n.unwrap_or(3);
    let mut items: Vec<(RootSystem, u32)> = Vec::new();
    for n in 1..=max_c {
        let rs = build(RootSystemKind::SpC(n), bounds)?;
        for d in 1..=n {
            items.push((rs.clone(), d));
        }
    }
    for n in 1..=max_a {
        let rs = build(RootSystemKind::SlA(n), bounds)?;
        for d in 1..2 * n {
            items.push((rs.clone(), d));
        }
    }
    let (tested, counterexamples) = check_all(&items, |(rs, d)| {
        let v = CharElem::orbit_sum(rs, rs.fundamental_weight(1)?)?;
        let alt = lambda_power_effective(rs, *d, &v)?;
        let fund = |k: u32| if k == 0 { rs.zero() } else { rs.fundamental_weight(k as usize).unwrap().clone() };
        let expect = match rs.kind() {
            // Λ^d of the standard representation of Sp_2n is V_d + V_{d-2} + ...
            RootSystemKind::SpC(_) => CharElem::from_terms(rs, (0..=d / 2).map(|i| (fund(d - 2 * i), 1)))?,
            _ => CharElem::from_terms(rs, [(fund(*d), 1)])?,
        };
        let irr = decompose_into_irreducibles(rs, &alt)?;
        let got = CharElem::from_terms(rs, irr.terms().map(|(w, c)| (w.clone(), c.clone())))?;
        ensure!(
            got == expect,
            json!({"system": rs.kind().to_string(), "d": d, "got": irr.to_string(), "expected": expect.to_string()})
        );
        Ok(())
    })?;
    Ok(Suite {
        property: "exterior powers of the standard representation decompose as sums of fundamental representations",
        bounds: json!({"max_n_symplectic": max_c, "max_n_linear": max_a}),
        tested,
        counterexamples,
    })
}

fn adams_factor(bounds: &SuiteBounds) -> Result<Suite, Failure> {
    let kinds: Vec<RootSystemKind> = match bounds.system {
        Some(k) => vec![k],
        None => (1..=4)
            .map(RootSystemKind::SpC)
            .chain((1..=3).map(RootSystemKind::SlA))
            .chain([RootSystemKind::E6])
            .collect(),
    };
    let systems: Vec<RootSystem> = kinds.into_iter().map(|k| build(k, bounds)).collect::<Result<_, _>>()?;
    let items: Vec<(&RootSystem, Weight)> =
        systems.iter().flat_map(|rs| rs.fundamental_weights().iter().map(move |w| (rs, w.clone()))).collect();
    let (tested, counterexamples) = check_all(&items, |(rs, w)| {
        let exp = rs.fundamental_group_exponent();
        let x = freudenthal_character(rs, w)?;
        let bad = |why: String| json!({"system": rs.kind().to_string(), "weight": w.coords(), "reason": why});
        ensure!(factors_through_root_lattice(rs, exp, &x)?, bad(format!("Psi^{exp} leaves the root lattice")));
        if congruence_class(rs, w) != 0 {
            ensure!(!factors_through_root_lattice(rs, 1, &x)?, bad("Psi^1 lands in the root lattice".into()));
        }
        Ok(())
    })?;
    Ok(Suite {
        property: "Psi^e maps every character into the root lattice for e the exponent of the fundamental group",
        bounds: json!({"systems": names(&systems)}),
        tested,
        counterexamples,
    })
}

fn dims_e6(bounds: &SuiteBounds) -> Result<Suite, Failure> {
    let e6 = only_e6(bounds)?;
    let items = [(1usize, 27), (6, 27), (2, 78)];
    let (tested, counterexamples) = check_all(&items, |&(i, expect)| {
        let w = e6.fundamental_weight(i)?;
        let d = weyl_dimension(&e6, w);
        let via_char = freudenthal_character(&e6, w)?.dimension(&e6);
        ensure!(
            d == BigInt::from(expect) && via_char == d,
            json!({"weight": format!("w{i}"), "weyl": big(&d), "character": big(&via_char), "expected": expect})
        );
        Ok(())
    })?;
    Ok(Suite {
        property: "E6 fundamental representations w1, w6, w2 have dimensions 27, 27, 78",
        bounds: json!({}),
        tested,
        counterexamples,
    })
}

fn expected_pairs(case: &CaseSpec) -> Vec<String> {
    match *case {
        CaseSpec::Hyperelliptic { g } => (1..g - 1).map(|d| format!("W_{d} + W_{}", g - 1 - d)).collect(),
        CaseSpec::NonHyperelliptic { g } => (1..g - 1)
            .flat_map(|d| [format!("W_{d} + W_{}", g - 1 - d), format!("-W_{d} + -W_{}", g - 1 - d)])
            .collect(),
        CaseSpec::CubicThreefold => vec!["S + -S".into(), "-S + S".into()],
    }
}

fn classify_golden(bounds: &SuiteBounds) -> Result<Suite, Failure> {
    let max_g = bounds.max_n.unwrap_or(8);
    let mut cases: Vec<CaseSpec> = (3..=max_g).map(|g| CaseSpec::Hyperelliptic { g }).collect();
    cases.extend((4..=max_g).map(|g| CaseSpec::NonHyperelliptic { g }));
    cases.push(CaseSpec::CubicThreefold);
    let (tested, counterexamples) = check_all(&cases, |case| {
        let report = classify_summands(case)?;
        let mut got: Vec<String> = report.pairs.iter().map(|p| format!("{} + {}", p.x, p.y)).collect();
        let mut expect = expected_pairs(case);
        got.sort();
        expect.sort();
        let bad = |why: &str| json!({"case": case.to_json(), "got": got, "expected": expect, "reason": why});
        ensure!(got == expect, bad("pairs differ"));
        ensure!(report.pairs.iter().all(|p| p.up_to_translation()), bad("translation marker missing"));
        let again = classify_summands(case)?.to_json();
        ensure!(again == report.to_json(), bad("output is not deterministic"));
        Ok(())
    })?;
    Ok(Suite {
        property: "theta divisor summands: W_d + W_{g-1-d}, their negatives on nonhyperelliptic curves, S + -S on cubic threefolds",
        bounds: json!({"max_genus": max_g}),
        tested,
        counterexamples,
    })
}

fn names(systems: &[RootSystem]) -> Vec<String> {
    systems.iter().map(|rs| rs.kind().to_string()).collect()
}
