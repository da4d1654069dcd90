//! λ-ring operations on characters: Adams operations, exterior powers
//! (directly from weight multisets for effective characters, through the
//! Newton identities for virtual ones) and the root-lattice factorization
//! test for Adams operations.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::charring::{multiply, CharElem};
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, RootSystemKind, Weight};
use crate::weyl::orbit_labels;

/// Virtual characters share their representation with [`CharElem`].
pub type VirtualChar = CharElem;

/// `Ψ^n`: scales every orbit key by `n`.
pub fn adams(rs: &RootSystem, n: u32, x: &VirtualChar) -> Result<VirtualChar> {
    if n == 0 {
        return Err(Error::InvalidParameter("Adams operations are indexed from 1".into()));
    }
    let k = n as i64;
    CharElem::from_terms(
        rs,
        x.terms()
            .map(|(w, c)| Ok((rs.weight(w.coords().iter().map(|v| v * k).collect())?, c.clone())))
            .collect::<Result<Vec<_>>>()?,
    )
}

/// Every weight of `x` with multiplicity, keyed by Dynkin labels.
fn weight_multiset(rs: &RootSystem, x: &CharElem) -> Result<Vec<(Vec<i64>, u64)>> {
    let cap = rs.limits().work_cap;
    let mut out = Vec::new();
    for (w, c) in x.terms() {
        if c.is_negative() {
            return Err(Error::NegativeCoefficient(format!("{c} at {w}")));
        }
        let m: u64 = c.try_into().map_err(|_| Error::ResourceCap {
            what: "weight multiplicity",
            needed: u64::MAX,
            cap,
        })?;
        for l in orbit_labels(rs, &rs.dynkin_labels(w))? {
            out.push((l, m));
        }
    }
    Ok(out)
}

fn binomials(m: u64, upto: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for j in 1..=upto.min(m as usize) {
        let prev = row[j - 1].clone();
        row.push(prev * BigInt::from(m - j as u64 + 1) / BigInt::from(j as u64));
    }
    row
}

/// `λ^n(x)` for effective `x`: the `n`-th elementary symmetric function of
/// the weight multiset of `x`, collected by orbits.
pub fn lambda_power_effective(rs: &RootSystem, n: u32, x: &CharElem) -> Result<CharElem> {
    let weights = weight_multiset(rs, x)?;
    let n = n as usize;
    let cap = rs.limits().work_cap;
    let mut work = 0u64;
    // e[k] = k-th elementary symmetric polynomial of the weights seen so far
    let mut e: Vec<HashMap<Vec<i64>, BigInt>> = vec![HashMap::new(); n + 1];
    e[0].insert(vec![0; rs.rank()], BigInt::one());
    for (w, m) in &weights {
        let binom = binomials(*m, n);
        for k in (1..=n).rev() {
            let mut add: Vec<(Vec<i64>, BigInt)> = Vec::new();
            for j in 1..binom.len().min(k + 1) {
                for (key, c) in &e[k - j] {
                    let shifted: Vec<i64> = key.iter().zip(w).map(|(a, b)| a + b * j as i64).collect();
                    add.push((shifted, c * &binom[j]));
                }
            }
            work += add.len() as u64;
            if work > cap {
                return Err(Error::ResourceCap {
                    what: "exterior power expansion",
                    needed: work,
                    cap,
                });
            }
            for (key, c) in add {
                *e[k].entry(key).or_insert_with(BigInt::zero) += c;
            }
        }
    }
    let mut out = CharElem::zero(rs.kind());
    for (key, c) in e.swap_remove(n) {
        if key.iter().all(|&a| a >= 0) && !c.is_zero() {
            out = &out + &CharElem::from_terms(rs, [(rs.weight_from_dynkin(&key)?, c)])?;
        }
    }
    Ok(out)
}

/// Ring operations needed by the Newton identities.
pub trait NewtonRing {
    type Elem: Clone;

    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn scale(&self, a: &Self::Elem, k: i64) -> Self::Elem;
    fn div_exact(&self, a: &Self::Elem, k: i64) -> Result<Self::Elem>;
}

/// The integers, for checking the identities on numbers.
pub struct Integers;

impl NewtonRing for Integers {
    type Elem = BigInt;

    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> Result<BigInt> {
        Ok(a * b)
    }
    fn scale(&self, a: &BigInt, k: i64) -> BigInt {
        a * k
    }
    fn div_exact(&self, a: &BigInt, k: i64) -> Result<BigInt> {
        let (q, r) = a.div_rem(&BigInt::from(k));
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonIntegral(format!("{a} / {k}")))
        }
    }
}

/// The character ring of a root system.
pub struct CharacterRing<'a>(pub &'a RootSystem);

impl NewtonRing for CharacterRing<'_> {
    type Elem = CharElem;

    fn one(&self) -> CharElem {
        CharElem::one(self.0)
    }
    fn add(&self, a: &CharElem, b: &CharElem) -> CharElem {
        a + b
    }
    fn sub(&self, a: &CharElem, b: &CharElem) -> CharElem {
        a - b
    }
    fn mul(&self, a: &CharElem, b: &CharElem) -> Result<CharElem> {
        multiply(self.0, a, b)
    }
    fn scale(&self, a: &CharElem, k: i64) -> CharElem {
        a.scale(&BigInt::from(k))
    }
    fn div_exact(&self, a: &CharElem, k: i64) -> Result<CharElem> {
        a.div_exact(&BigInt::from(k))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NewtonDirection {
    /// `(λ^1, …, λ^n) ↦ (Ψ^1, …, Ψ^n)`.
    LambdaToAdams,
    /// `(Ψ^1, …, Ψ^n) ↦ (λ^1, …, λ^n)`.
    AdamsToLambda,
}

/// Newton's identities between elementary symmetric functions `e_k = λ^k`
/// and power sums `p_k = Ψ^k`:
/// `k e_k = Σ_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i`.
pub fn newton_transforms<R: NewtonRing>(
    ring: &R,
    direction: NewtonDirection,
    values: &[R::Elem],
) -> Result<Vec<R::Elem>> {
    let mut out: Vec<R::Elem> = Vec::with_capacity(values.len());
    for k in 1..=values.len() {
        let next = match direction {
            NewtonDirection::AdamsToLambda => {
                // e_0 = 1, e_k = (1/k) Σ (-1)^{i-1} e_{k-i} p_i
                let mut acc: Option<R::Elem> = None;
                for i in 1..=k {
                    let e = if i == k { ring.one() } else { out[k - i - 1].clone() };
                    let term = ring.mul(&e, &values[i - 1])?;
                    acc = Some(match acc {
                        None => term,
                        Some(a) if i % 2 == 1 => ring.add(&a, &term),
                        Some(a) => ring.sub(&a, &term),
                    });
                }
                ring.div_exact(&acc.unwrap(), k as i64)?
            }
            NewtonDirection::LambdaToAdams => {
                // p_k = Σ_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
                let mut acc = ring.scale(&values[k - 1], if k % 2 == 1 { k as i64 } else { -(k as i64) });
                for i in 1..k {
                    let term = ring.mul(&values[i - 1], &out[k - i - 1])?;
                    acc = if i % 2 == 1 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
                }
                acc
            }
        };
        out.push(next);
    }
    Ok(out)
}

/// `λ^n(x)` for a virtual character, from Adams operations through the
/// Newton identities. Every division is checked to be exact.
pub fn lambda_power_virtual(rs: &RootSystem, n: u32, x: &VirtualChar) -> Result<VirtualChar> {
    if n == 0 {
        return Ok(CharElem::one(rs));
    }
    let psi = (1..=n).map(|i| adams(rs, i, x)).collect::<Result<Vec<_>>>()?;
    let mut lambdas = newton_transforms(&CharacterRing(rs), NewtonDirection::AdamsToLambda, &psi)?;
    Ok(lambdas.pop().unwrap())
}

/// Class of a weight in the cyclic group `X / Q` of weights modulo the root
/// lattice, of order `root_lattice_index`.
pub fn congruence_class(rs: &RootSystem, w: &Weight) -> u32 {
    let c = w.coords();
    let (value, modulus): (i64, i64) = match rs.kind() {
        RootSystemKind::SpC(_) => (c.iter().sum(), 2),
        RootSystemKind::SlA(n) => (c.iter().sum(), 2 * n as i64),
        RootSystemKind::E6 => (c[0] - c[2] + c[4] - c[5], 3),
    };
    value.rem_euclid(modulus) as u32
}

/// Order of `X / Q`.
pub fn root_lattice_index(rs: &RootSystem) -> u32 {
    match rs.kind() {
        RootSystemKind::SpC(_) => 2,
        RootSystemKind::SlA(n) => 2 * n,
        RootSystemKind::E6 => 3,
    }
}

/// Whether every weight of `Ψ^n(x)` lies in the root lattice, i.e. whether
/// `Ψ^n` of `x` factors through the isogeny onto the adjoint torus.
pub fn factors_through_root_lattice(rs: &RootSystem, n: u32, x: &VirtualChar) -> Result<bool> {
    let scaled = adams(rs, n, x)?;
    for (w, _) in scaled.terms() {
        for l in orbit_labels(rs, &rs.dynkin_labels(w))? {
            if congruence_class(rs, &rs.weight_from_dynkin(&l)?) != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
