//! The dominance order on weights, the three constructive reductions used
//! to bound support dimensions, and a brute-force search oracle over
//! dominance ideals.

use std::fmt;

use crate::brillnoether::{degree_length_hyp, split_sl};
use crate::error::{Error, Result};
use crate::rootsys::{is_nonneg_integral, DominantWeight, RootSystem, RootSystemKind, Weight};

/// Result of comparing `μ` against `λ`: `μ ⪯ λ` iff `λ - μ` is a
/// non-negative integer combination of simple roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceWitness {
    pub comparable: bool,
    /// Coefficients of `λ - μ` on the simple roots, present iff comparable.
    pub root_coefficients: Option<Vec<u64>>,
}

impl DominanceWitness {
    fn incomparable() -> Self {
        DominanceWitness {
            comparable: false,
            root_coefficients: None,
        }
    }

    fn from_coeffs(c: Vec<i64>) -> Self {
        if c.iter().all(|&x| x >= 0) {
            DominanceWitness {
                comparable: true,
                root_coefficients: Some(c.into_iter().map(|x| x as u64).collect()),
            }
        } else {
            Self::incomparable()
        }
    }
}

pub fn is_dominant(rs: &RootSystem, w: &Weight) -> bool {
    rs.dynkin_labels(w).iter().all(|&a| a >= 0)
}

pub(crate) fn require_dominant(rs: &RootSystem, w: &Weight) -> Result<()> {
    rs.check(w)?;
    if is_dominant(rs, w) {
        Ok(())
    } else {
        Err(Error::NotDominant(w.to_string()))
    }
}

/// Decides `μ ⪯ λ`.
///
/// The test itself is valid for arbitrary weights; callers in this crate
/// only pass dominant ones.
pub fn dominance_compare(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<DominanceWitness> {
    rs.check(lambda)?;
    rs.check(mu)?;
    let x: Vec<i64> = lambda.coords().iter().zip(mu.coords()).map(|(a, b)| a - b).collect();
    let witness = match rs.kind() {
        RootSystemKind::SpC(n) => {
            let n = n as usize;
            let total: i64 = x.iter().sum();
            if total % 2 != 0 {
                DominanceWitness::incomparable()
            } else {
                let mut c: Vec<i64> = x[..n - 1]
                    .iter()
                    .scan(0, |acc, v| {
                        *acc += v;
                        Some(*acc)
                    })
                    .collect();
                c.push(total / 2);
                DominanceWitness::from_coeffs(c)
            }
        }
        RootSystemKind::SlA(n) => {
            let m = 2 * n as i64;
            let total: i64 = x.iter().sum();
            if total % m != 0 {
                DominanceWitness::incomparable()
            } else {
                let t = total / m;
                let c: Vec<i64> = x[..x.len() - 1]
                    .iter()
                    .scan(0, |acc, v| {
                        *acc += v - t;
                        Some(*acc)
                    })
                    .collect();
                DominanceWitness::from_coeffs(c)
            }
        }
        RootSystemKind::E6 => {
            let c = rs.root_coefficients(&rs.weight(x)?);
            if is_nonneg_integral(&c) {
                DominanceWitness {
                    comparable: true,
                    root_coefficients: Some(
                        c.iter()
                            .map(|q| q.to_integer().try_into().expect("small coefficient"))
                            .collect(),
                    ),
                }
            } else {
                DominanceWitness::incomparable()
            }
        }
    };
    Ok(witness)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    /// Non-negative combination of simple roots subtracted at this step.
    pub subtracted: Weight,
    pub rule: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub start: DominantWeight,
    pub steps: Vec<ReductionStep>,
    pub result: DominantWeight,
}

impl ReductionTrace {
    fn new(start: Weight) -> Self {
        ReductionTrace {
            result: start.clone(),
            start,
            steps: Vec::new(),
        }
    }

    fn push(&mut self, rs: &RootSystem, subtracted: Weight, rule: impl Into<String>) -> Result<()> {
        let next = rs.weight(
            self.result
                .coords()
                .iter()
                .zip(subtracted.coords())
                .map(|(a, b)| a - b)
                .collect(),
        )?;
        self.steps.push(ReductionStep {
            subtracted,
            rule: rule.into(),
        });
        self.result = next;
        Ok(())
    }

    /// Re-applies every step to `start`.
    pub fn replay(&self, rs: &RootSystem) -> Result<Weight> {
        let mut w = self.start.coords().to_vec();
        for s in &self.steps {
            for (a, b) in w.iter_mut().zip(s.subtracted.coords()) {
                *a -= b;
            }
        }
        rs.weight(w)
    }

    /// Checks the trace invariants: replay reproduces the result, every
    /// intermediate is dominant, every subtracted element is a non-negative
    /// root combination.
    pub fn validate(&self, rs: &RootSystem) -> Result<()> {
        let mut w = self.start.clone();
        for s in &self.steps {
            let zero = rs.zero();
            if !dominance_compare(rs, &s.subtracted, &zero)?.comparable {
                return Err(Error::Certification(format!(
                    "step '{}' subtracts {} which is not a sum of simple roots",
                    s.rule, s.subtracted
                )));
            }
            w = rs.weight(w.coords().iter().zip(s.subtracted.coords()).map(|(a, b)| a - b).collect())?;
            if !is_dominant(rs, &w) {
                return Err(Error::Certification(format!("step '{}' leaves the dominant chamber at {w}", s.rule)));
            }
        }
        if w != self.result || self.replay(rs)? != self.result {
            return Err(Error::Certification("replay does not reproduce the result".into()));
        }
        Ok(())
    }
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "start  {}", self.start)?;
        for s in &self.steps {
            writeln!(f, "  - {}  [{}]", s.subtracted, s.rule)?;
        }
        write!(f, "result {}", self.result)
    }
}

fn unit_diff(len: usize, plus: usize, minus: usize) -> Vec<i64> {
    let mut v = vec![0; len];
    v[plus] += 1;
    v[minus] -= 1;
    v
}

/// Length-raising reduction in type C_n: produces `μ ⪯ λ` with
/// `ℓ(μ) = min{d(λ), n}` by repeatedly subtracting `e_i - e_k` where `i` is
/// the last part `≥ 2` and `k = ℓ + 1`.
pub fn reduce_hyp(rs: &RootSystem, lambda: &DominantWeight) -> Result<ReductionTrace> {
    let n = match rs.kind() {
        RootSystemKind::SpC(n) => n as usize,
        other => return Err(Error::InvalidParameter(format!("hyperelliptic reduction needs type C, got {other}"))),
    };
    require_dominant(rs, lambda)?;
    let mut trace = ReductionTrace::new(lambda.clone());
    loop {
        let (d, l) = degree_length_hyp(&trace.result);
        if l >= (d as usize).min(n) {
            break;
        }
        let c = trace.result.coords();
        let i = c.iter().rposition(|&x| x >= 2).expect("ℓ < d forces a part ≥ 2");
        let k = l;
        trace.push(
            rs,
            rs.weight(unit_diff(n, i, k))?,
            format!("subtract e_{} - e_{}", i + 1, k + 1),
        )?;
    }
    Ok(trace)
}

/// Reduction in type A_{2n-1} on the `(λ⁺ | -λ⁻)` representative: produces
/// `μ ⪯ λ` with `ℓ(μ) = min{d(λ), n}` or `ℓ(μ) = d(μ) = n - 1`.
///
/// Moves, in priority order when the length is too small: spread inside
/// `λ⁺`, spread inside `λ⁻`, and when `λ⁻` is full the root
/// `e_{n+1} - e_{n+j}`, which shifts the representative by `det` and fills
/// `λ⁺`. When the length is too large the mixed roots `(e_i | -e_k)` are
/// subtracted at the largest entries of both halves.
pub fn reduce_nonhyp(rs: &RootSystem, lambda: &DominantWeight) -> Result<ReductionTrace> {
    let n = match rs.kind() {
        RootSystemKind::SlA(n) => n as usize,
        other => {
            return Err(Error::InvalidParameter(format!(
                "nonhyperelliptic reduction needs type A_(2n-1), got {other}"
            )))
        }
    };
    require_dominant(rs, lambda)?;
    let m = 2 * n;
    let d0 = split_sl(rs, lambda)?.degree();
    let mut trace = ReductionTrace::new(lambda.clone());
    let max_steps = 4 * (d0 + 2) * (n + 2);
    for _ in 0..max_steps {
        let s = split_sl(rs, &trace.result)?;
        let (d, l) = (s.degree(), s.length());
        let plus = &s.plus;
        // β in coordinate order: β_1 = 0 ≤ β_2 ≤ ... ≤ β_n
        let beta: Vec<i64> = trace.result.coords()[n..].iter().map(|x| -x).collect();
        if l > n {
            let top = plus[0];
            let i = plus.iter().rposition(|&x| x == top).unwrap();
            let bottom = beta[n - 1];
            let k = beta.iter().position(|&x| x == bottom).unwrap();
            trace.push(
                rs,
                rs.weight(unit_diff(m, i, n + k))?,
                format!("mixed: subtract (e_{} | -e_{})", i + 1, k + 1),
            )?;
        } else if l < d.min(n) {
            let plus_big = plus.iter().rposition(|&x| x >= 2);
            let beta_big = beta.iter().position(|&x| x >= 2);
            if let (Some(i), true) = (plus_big, s.plus_length() < n) {
                let k = s.plus_length();
                trace.push(
                    rs,
                    rs.weight(unit_diff(m, i, k))?,
                    format!("spread plus: subtract (e_{} - e_{} | 0)", i + 1, k + 1),
                )?;
            } else if let Some(j) = beta_big {
                if s.minus_length() < n - 1 {
                    let k = n - 1 - s.minus_length();
                    trace.push(
                        rs,
                        rs.weight(unit_diff(m, n + k, n + j))?,
                        format!("spread minus: subtract (0 | e_{} - e_{})", k + 1, j + 1),
                    )?;
                } else {
                    trace.push(
                        rs,
                        rs.weight(unit_diff(m, n, n + j))?,
                        format!("wrap: subtract (0 | e_1 - e_{}) and renormalize by det", j + 1),
                    )?;
                }
            } else {
                return Err(Error::Certification(format!(
                    "no length-raising move available at {}",
                    trace.result
                )));
            }
        } else {
            if l == d0.min(n) || (l == d && d + 1 == n) {
                return Ok(trace);
            }
            return Err(Error::Certification(format!(
                "reduction stalled at {} with ℓ = {l}, d = {d}",
                trace.result
            )));
        }
    }
    Err(Error::Certification(format!("reduction of {lambda} did not terminate")))
}

/// A dominance relation `lhs ⪰ rhs` between combinations of E6 fundamental
/// weights.
#[derive(Debug, Clone, Copy)]
pub struct E6Relation {
    pub name: &'static str,
    pub lhs: [i64; 6],
    pub rhs: [i64; 6],
}

const fn fw(i: usize, k: i64) -> [i64; 6] {
    let mut a = [0; 6];
    if i > 0 {
        a[i - 1] = k;
    }
    a
}

/// The relations driving [`reduce_e6`].
pub const E6_RELATIONS: [E6Relation; 9] = [
    E6Relation { name: "w3 >= w6", lhs: fw(3, 1), rhs: fw(6, 1) },
    E6Relation { name: "w4 >= w2", lhs: fw(4, 1), rhs: fw(2, 1) },
    E6Relation { name: "w5 >= w1", lhs: fw(5, 1), rhs: fw(1, 1) },
    E6Relation { name: "w2 >= 0", lhs: fw(2, 1), rhs: fw(0, 0) },
    E6Relation { name: "w1 + w6 >= 0", lhs: [1, 0, 0, 0, 0, 1], rhs: fw(0, 0) },
    E6Relation { name: "2w1 >= w6", lhs: fw(1, 2), rhs: fw(6, 1) },
    E6Relation { name: "3w1 >= w2", lhs: fw(1, 3), rhs: fw(2, 1) },
    E6Relation { name: "2w6 >= w1", lhs: fw(6, 2), rhs: fw(1, 1) },
    E6Relation { name: "3w6 >= w2", lhs: fw(6, 3), rhs: fw(2, 1) },
];

/// Needed only for the residue `ϖ1 + ϖ6`, where stripping the pair would
/// land on zero.
pub const E6_PAIR_TO_ADJOINT: E6Relation = E6Relation {
    name: "w1 + w6 >= w2",
    lhs: [1, 0, 0, 0, 0, 1],
    rhs: fw(2, 1),
};

/// Reduces a nonzero dominant E6 weight to one of `ϖ1, ϖ2, ϖ6` below it.
pub fn reduce_e6(rs: &RootSystem, lambda: &DominantWeight) -> Result<ReductionTrace> {
    if rs.kind() != RootSystemKind::E6 {
        return Err(Error::InvalidParameter(format!("E6 reduction called on {}", rs.kind())));
    }
    require_dominant(rs, lambda)?;
    if lambda.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let mut trace = ReductionTrace::new(lambda.clone());
    let apply = |trace: &mut ReductionTrace, rel: &E6Relation| -> Result<()> {
        let diff: Vec<i64> = rel.lhs.iter().zip(&rel.rhs).map(|(a, b)| a - b).collect();
        let before = trace.result.clone();
        trace.push(rs, rs.weight_from_dynkin(&diff)?, rel.name)?;
        if !dominance_compare(rs, &before, &trace.result)?.comparable {
            return Err(Error::Certification(format!("relation {} failed at {before}", rel.name)));
        }
        Ok(())
    };
    let labels = |t: &ReductionTrace| t.result.coords().to_vec();
    let r = &E6_RELATIONS;

    for (idx, rel) in [(2usize, &r[0]), (3, &r[1]), (4, &r[2])] {
        while labels(&trace)[idx] > 0 {
            apply(&mut trace, rel)?;
        }
    }
    let a = labels(&trace);
    let (b1, b2, b6) = (a[0], a[1], a[5]);
    if b1 == b6 {
        if b2 > 0 {
            for _ in 0..b1 {
                apply(&mut trace, &r[4])?;
            }
            for _ in 1..b2 {
                apply(&mut trace, &r[3])?;
            }
        } else if b1 >= 2 {
            for _ in 2..b1 {
                apply(&mut trace, &r[4])?;
            }
            apply(&mut trace, &r[5])?; // 2w1 + 2w6 -> 3w6
            apply(&mut trace, &r[8])?;
        } else {
            apply(&mut trace, &E6_PAIR_TO_ADJOINT)?;
        }
    } else {
        for _ in 0..b2 {
            apply(&mut trace, &r[3])?;
        }
        for _ in 0..b1.min(b6) {
            apply(&mut trace, &r[4])?;
        }
        let (mut k, double, triple) = if b1 > b6 { (b1 - b6, &r[5], &r[6]) } else { (b6 - b1, &r[7], &r[8]) };
        while k > 3 {
            apply(&mut trace, double)?;
            apply(&mut trace, &r[4])?;
            k -= 3;
        }
        match k {
            2 => apply(&mut trace, double)?,
            3 => apply(&mut trace, triple)?,
            _ => {}
        }
    }
    let targets = [1usize, 2, 6].map(|i| rs.fundamental_weight(i).unwrap().clone());
    if !targets.contains(&trace.result) {
        return Err(Error::Certification(format!("E6 reduction ended at {}", trace.result)));
    }
    Ok(trace)
}

/// All dominant `μ ⪯ λ`, sorted. Candidates come from a bounded box in
/// each kind's coordinates and are filtered through [`dominance_compare`];
/// `budget` bounds the number of candidates examined.
pub fn dominance_ideal(rs: &RootSystem, lambda: &DominantWeight, budget: u64) -> Result<Vec<DominantWeight>> {
    require_dominant(rs, lambda)?;
    let mut visited = 0u64;
    let mut out = Vec::new();
    let mut consider = |coords: Vec<i64>, out: &mut Vec<Weight>| -> Result<()> {
        visited += 1;
        if visited > budget {
            return Err(Error::BudgetExhausted { budget });
        }
        let mu = rs.weight(coords)?;
        if dominance_compare(rs, lambda, &mu)?.comparable {
            out.push(mu);
        }
        Ok(())
    };
    match rs.kind() {
        RootSystemKind::SpC(n) => {
            let n = n as usize;
            let (d, _) = degree_length_hyp(lambda);
            let top = lambda.coords()[0];
            for p in partitions_up_to(d, n, top) {
                if (d - p.iter().sum::<i64>()) % 2 != 0 {
                    continue;
                }
                let mut c = p;
                c.resize(n, 0);
                consider(c, &mut out)?;
            }
        }
        RootSystemKind::SlA(n) => {
            let n = n as usize;
            let d = split_sl(rs, lambda)?.degree() as i64;
            for p in partitions_up_to(d, n, d) {
                let rest = d - p.iter().sum::<i64>();
                for q in partitions_up_to(rest, n - 1, rest) {
                    let mut c = p.clone();
                    c.resize(n, 0);
                    let mut tail: Vec<i64> = q.iter().map(|x| -x).collect();
                    tail.resize(n, 0);
                    tail.reverse();
                    c.extend(tail);
                    consider(c, &mut out)?;
                }
            }
        }
        RootSystemKind::E6 => {
            for labels in norm_ball_labels(rs, lambda, budget)? {
                consider(rs.weight_of_labels(&labels).into_coords(), &mut out)?;
            }
        }
    }
    out.sort();
    Ok(out)
}

/// All dominant weights of type C or A with degree `d(λ) ≤ max_degree`,
/// sorted. Degree is `Σ λ_i` in type C and `d⁺ + d⁻` in type A.
pub fn dominant_weights_up_to_degree(rs: &RootSystem, max_degree: u32) -> Result<Vec<DominantWeight>> {
    let d = max_degree as i64;
    let mut out = Vec::new();
    match rs.kind() {
        RootSystemKind::SpC(n) => {
            for mut p in partitions_up_to(d, n as usize, d) {
                p.resize(n as usize, 0);
                out.push(rs.weight(p)?);
            }
        }
        RootSystemKind::SlA(n) => {
            let n = n as usize;
            for p in partitions_up_to(d, n, d) {
                let rest = d - p.iter().sum::<i64>();
                for q in partitions_up_to(rest, n - 1, rest) {
                    let mut c = p.clone();
                    c.resize(n, 0);
                    let mut tail: Vec<i64> = q.iter().map(|x| -x).collect();
                    tail.resize(n, 0);
                    tail.reverse();
                    c.extend(tail);
                    out.push(rs.weight(c)?);
                }
            }
        }
        RootSystemKind::E6 => {
            return Err(Error::InvalidParameter("degree is only defined for types C and A".into()));
        }
    }
    out.sort();
    Ok(out)
}

/// All dominant weights whose Dynkin labels sum to at most `max_sum`,
/// sorted.
pub fn dominant_weights_up_to_label_sum(rs: &RootSystem, max_sum: u32) -> Vec<DominantWeight> {
    fn rec(i: usize, rem: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=rem {
            cur[i] = v;
            rec(i + 1, rem - v, cur, out);
        }
        cur[i] = 0;
    }
    let mut labels = Vec::new();
    rec(0, max_sum as i64, &mut vec![0; rs.rank()], &mut labels);
    let mut out: Vec<Weight> = labels.iter().map(|l| rs.weight_of_labels(l)).collect();
    out.sort();
    out
}

/// Dominant label vectors `a ≥ 0` with `(a, a) ≤ (λ, λ)`. Every dominant
/// `μ ⪯ λ` lies in this set.
pub(crate) fn norm_ball_labels(rs: &RootSystem, lambda: &Weight, budget: u64) -> Result<Vec<Vec<i64>>> {
    let l = rs.dynkin_labels(lambda);
    let bound = rs.form_labels(&l, &l);
    let r = rs.rank();
    let mut out = Vec::new();
    let mut cur = vec![0i64; r];
    let mut visited = 0u64;
    fn rec(
        rs: &RootSystem,
        i: usize,
        cur: &mut Vec<i64>,
        bound: i64,
        out: &mut Vec<Vec<i64>>,
        visited: &mut u64,
        budget: u64,
    ) -> Result<()> {
        if i == cur.len() {
            out.push(cur.clone());
            return Ok(());
        }
        loop {
            *visited += 1;
            if *visited > budget {
                return Err(Error::BudgetExhausted { budget });
            }
            if rs.form_labels(cur, cur) > bound {
                break;
            }
            rec(rs, i + 1, cur, bound, out, visited, budget)?;
            cur[i] += 1;
        }
        cur[i] = 0;
        Ok(())
    }
    rec(rs, 0, &mut cur, bound, &mut out, &mut visited, budget)?;
    Ok(out)
}

/// Partitions (weakly decreasing, positive parts) of every size `≤ max_size`
/// with at most `max_parts` parts, each `≤ max_part`.
pub(crate) fn partitions_up_to(max_size: i64, max_parts: usize, max_part: i64) -> Vec<Vec<i64>> {
    fn rec(remaining: i64, max_parts: usize, max_part: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        out.push(cur.clone());
        if max_parts == 0 {
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            cur.push(p);
            rec(remaining - p, max_parts - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if max_size >= 0 {
        rec(max_size, max_parts, max_part, &mut Vec::new(), &mut out);
    }
    out
}

/// Exhaustive oracle: some dominant `μ ⪯ λ` satisfying `predicate`, or
/// `None` when the whole ideal was searched without success. Running out of
/// budget is reported as [`Error::BudgetExhausted`].
pub fn brute_force_reduce<F>(
    rs: &RootSystem,
    lambda: &DominantWeight,
    predicate: F,
    budget: u64,
) -> Result<Option<DominantWeight>>
where
    F: Fn(&Weight) -> bool,
{
    Ok(dominance_ideal(rs, lambda, budget)?.into_iter().find(|mu| predicate(mu)))
}
