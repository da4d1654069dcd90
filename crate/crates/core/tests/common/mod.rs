//! Weight enumerators shared by the integration tests. They build weights
//! from partitions directly and do not use the library's own ideal search.
#![allow(dead_code)]

use thetasum_core::{RootSystem, RootSystemKind, Weight};

/// Partitions of exactly `size` with at most `parts` parts.
pub fn partitions(size: i64, parts: usize) -> Vec<Vec<i64>> {
    fn rec(rem: i64, parts: usize, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        if parts == 0 {
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, parts - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, parts, size, &mut Vec::new(), &mut out);
    out
}

fn padded(p: &[i64], n: usize) -> Vec<i64> {
    let mut v = p.to_vec();
    v.resize(n, 0);
    v
}

/// Dominant type C_n weights of degree exactly `d`.
pub fn sp_weights_of_degree(rs: &RootSystem, d: i64) -> Vec<Weight> {
    let n = rs.rank();
    partitions(d, n).iter().map(|p| rs.weight(padded(p, n)).unwrap()).collect()
}

/// Dominant type A_{2n-1} weights `(λ⁺ | -λ⁻)` with `d⁺ + d⁻ = d`.
pub fn sl_weights_of_degree(rs: &RootSystem, d: i64) -> Vec<Weight> {
    let n = match rs.kind() {
        RootSystemKind::SlA(n) => n as usize,
        _ => panic!("type A only"),
    };
    let mut out = Vec::new();
    for dp in 0..=d {
        for p in partitions(dp, n) {
            for q in partitions(d - dp, n - 1) {
                let mut c = padded(&p, n);
                let mut tail: Vec<i64> = padded(&q, n).iter().map(|x| -x).collect();
                tail.reverse();
                c.extend(tail);
                out.push(rs.weight(c).unwrap());
            }
        }
    }
    out
}

pub fn weights_of_degree(rs: &RootSystem, d: i64) -> Vec<Weight> {
    match rs.kind() {
        RootSystemKind::SpC(_) => sp_weights_of_degree(rs, d),
        RootSystemKind::SlA(_) => sl_weights_of_degree(rs, d),
        RootSystemKind::E6 => panic!("no degree for E6"),
    }
}

pub fn weights_up_to_degree(rs: &RootSystem, d: i64) -> Vec<Weight> {
    (0..=d).flat_map(|k| weights_of_degree(rs, k)).collect()
}

/// Dominant weights given by Dynkin label vectors with label sum `≤ s`.
pub fn weights_by_label_sum(rs: &RootSystem, s: i64) -> Vec<Weight> {
    fn rec(i: usize, r: usize, rem: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == r {
            out.push(cur.clone());
            return;
        }
        for v in 0..=rem {
            cur.push(v);
            rec(i + 1, r, rem - v, cur, out);
            cur.pop();
        }
    }
    let mut labels = Vec::new();
    rec(0, rs.rank(), s, &mut Vec::new(), &mut labels);
    labels.iter().map(|l| rs.weight_from_dynkin(l).unwrap()).collect()
}

pub fn sys(kind: RootSystemKind) -> RootSystem {
    RootSystem::build(kind).unwrap()
}
