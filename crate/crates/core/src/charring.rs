//! The character ring `Z[X]^W` in the orbit-sum basis, irreducible
//! characters via Freudenthal's recursion, the Weyl dimension formula,
//! products and decompositions into irreducibles.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::dominance::require_dominant;
use crate::error::{Error, Result};
use crate::rootsys::{DominantWeight, RootSystem, RootSystemKind, Weight};
use crate::weyl::{orbit_labels, orbit_size, project_labels, signed_regular_orbit};

/// A virtual character `Σ c_μ · We_μ` over dominant `μ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharElem {
    kind: RootSystemKind,
    coeffs: BTreeMap<Weight, BigInt>,
}

impl CharElem {
    pub fn zero(kind: RootSystemKind) -> Self {
        CharElem {
            kind,
            coeffs: BTreeMap::new(),
        }
    }

    /// `We_0`, the unit.
    pub fn one(rs: &RootSystem) -> Self {
        Self::zero(rs.kind()).with_term(rs.zero(), BigInt::one())
    }

    pub fn orbit_sum(rs: &RootSystem, lambda: &DominantWeight) -> Result<Self> {
        require_dominant(rs, lambda)?;
        Ok(Self::zero(rs.kind()).with_term(lambda.clone(), BigInt::one()))
    }

    /// Builds an element from `(weight, coefficient)` pairs, summing repeated
    /// weights. Every weight must be dominant.
    pub fn from_terms<I, C>(rs: &RootSystem, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Weight, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero(rs.kind());
        for (w, c) in terms {
            require_dominant(rs, &w)?;
            out.add_term(w, c.into());
        }
        Ok(out)
    }

    fn with_term(mut self, w: Weight, c: BigInt) -> Self {
        self.add_term(w, c);
        self
    }

    pub(crate) fn add_term(&mut self, w: Weight, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn kind(&self) -> RootSystemKind {
        self.kind
    }

    pub fn coeff(&self, w: &Weight) -> BigInt {
        self.coeffs.get(w).cloned().unwrap_or_default()
    }

    /// Terms in increasing order of the dominant weight.
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.kind);
        }
        CharElem {
            kind: self.kind,
            coeffs: self.coeffs.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    /// Divides every coefficient by `k`, failing unless all divisions are
    /// exact.
    pub fn div_exact(&self, k: &BigInt) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (w, c) in &self.coeffs {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return Err(Error::NonIntegral(format!("coefficient {c} of {w} is not divisible by {k}")));
            }
            coeffs.insert(w.clone(), q);
        }
        Ok(CharElem { kind: self.kind, coeffs })
    }

    /// Dimension of the (virtual) representation: `Σ c_μ |Wμ|`.
    pub fn dimension(&self, rs: &RootSystem) -> BigInt {
        self.coeffs
            .iter()
            .map(|(w, c)| c * BigInt::from(orbit_size(rs, &rs.dynkin_labels(w))))
            .sum()
    }

    /// `[{"weight": [...], "coeff": c}, ...]` in key order.
    pub fn to_json(&self) -> Value {
        terms_json(&self.coeffs)
    }

    fn combine(&self, other: &CharElem, sign: i32) -> CharElem {
        assert_eq!(self.kind, other.kind, "characters of different root systems");
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w.clone(), if sign > 0 { c.clone() } else { -c });
        }
        out
    }
}

impl Add for &CharElem {
    type Output = CharElem;

    /// Panics when the operands belong to different root systems.
    fn add(self, rhs: &CharElem) -> CharElem {
        self.combine(rhs, 1)
    }
}

impl Sub for &CharElem {
    type Output = CharElem;

    fn sub(self, rhs: &CharElem) -> CharElem {
        self.combine(rhs, -1)
    }
}

impl Neg for &CharElem {
    type Output = CharElem;

    fn neg(self) -> CharElem {
        self.scale(&BigInt::from(-1))
    }
}

fn fmt_terms(f: &mut fmt::Formatter<'_>, coeffs: &BTreeMap<Weight, BigInt>, sym: &str) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    for (i, (w, c)) in coeffs.iter().rev().enumerate() {
        let sep = match (i, c.is_negative()) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        let a = c.abs();
        if a.is_one() {
            write!(f, "{sep}{sym}{w}")?;
        } else {
            write!(f, "{sep}{a}*{sym}{w}")?;
        }
    }
    Ok(())
}

impl fmt::Display for CharElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.coeffs, "We")
    }
}

pub(crate) fn bigint_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

fn terms_json(coeffs: &BTreeMap<Weight, BigInt>) -> Value {
    Value::Array(
        coeffs
            .iter()
            .map(|(w, c)| json!({"weight": w.coords(), "coeff": bigint_json(c)}))
            .collect(),
    )
}

/// Coefficients on irreducible characters `ch V_λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrDecomposition {
    kind: RootSystemKind,
    coeffs: BTreeMap<Weight, BigInt>,
}

impl IrrDecomposition {
    pub fn kind(&self) -> RootSystemKind {
        self.kind
    }

    pub fn coeff(&self, w: &Weight) -> BigInt {
        self.coeffs.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Back to the orbit basis through Freudenthal characters.
    pub fn to_char(&self, rs: &RootSystem) -> Result<CharElem> {
        let mut out = CharElem::zero(rs.kind());
        for (w, c) in &self.coeffs {
            let ch = freudenthal_character(rs, w)?;
            out = &out + &ch.scale(c);
        }
        Ok(out)
    }

    pub fn dimension(&self, rs: &RootSystem) -> BigInt {
        self.coeffs.iter().map(|(w, c)| c * weyl_dimension(rs, w)).sum()
    }

    pub fn to_json(&self) -> Value {
        terms_json(&self.coeffs)
    }
}

impl fmt::Display for IrrDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.coeffs, "V")
    }
}

fn add_labels(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Dominant weight multiplicities of `V_λ`, keyed by Dynkin labels.
pub(crate) fn freudenthal_labels(rs: &RootSystem, lambda: &[i64]) -> Result<HashMap<Vec<i64>, i64>> {
    let cap = rs.limits().strata_cap;
    let roots = rs.pos_root_labels();

    // dominant weights below λ: the downward closure by positive roots
    // inside the dominant chamber reaches all of them
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(lambda.to_vec());
    let mut stack = vec![lambda.to_vec()];
    while let Some(x) = stack.pop() {
        for b in roots {
            let y: Vec<i64> = x.iter().zip(b).map(|(p, q)| p - q).collect();
            if y.iter().all(|&v| v >= 0) && seen.insert(y.clone()) {
                if seen.len() as u64 > cap {
                    return Err(Error::ResourceCap {
                        what: "dominant weight strata",
                        needed: seen.len() as u64,
                        cap,
                    });
                }
                stack.push(y);
            }
        }
    }
    let depth = |mu: &Vec<i64>| -> i64 {
        let diff: Vec<i64> = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
        rs.scaled_root_coefficients(&diff).iter().sum()
    };
    let mut order: Vec<(i64, Vec<i64>)> = seen.into_iter().map(|m| (depth(&m), m)).collect();
    order.sort();

    let ones = vec![1i64; rs.rank()];
    let top_rho = add_labels(lambda, &ones);
    let top_norm = rs.form_labels(&top_rho, &top_rho) as i128;

    let mut mult: HashMap<Vec<i64>, i64> = HashMap::with_capacity(order.len());
    mult.insert(lambda.to_vec(), 1);
    let mut scratch = vec![0i64; rs.rank()];
    for (_, mu) in order.into_iter().skip(1) {
        let mut sum: i128 = 0;
        for b in roots {
            let mut x = mu.clone();
            loop {
                for (xi, bi) in x.iter_mut().zip(b) {
                    *xi += bi;
                }
                scratch.copy_from_slice(&x);
                project_labels(rs, &mut scratch);
                let m = match mult.get(&scratch) {
                    Some(&m) => m,
                    None => break,
                };
                sum += m as i128 * rs.form_labels(&x, b) as i128;
            }
        }
        let mr = add_labels(&mu, &ones);
        let denom = top_norm - rs.form_labels(&mr, &mr) as i128;
        let num = 2 * sum;
        if denom <= 0 || num % denom != 0 {
            return Err(Error::NonIntegral(format!(
                "Freudenthal recursion at {mu:?} gave {num}/{denom}"
            )));
        }
        let m = num / denom;
        if m > 0 {
            mult.insert(mu, i64::try_from(m).expect("multiplicity fits in i64"));
        }
    }
    Ok(mult)
}

/// `ch V_λ` in the orbit basis: the coefficient of `We_μ` is the weight
/// multiplicity `m_λ(μ)`.
pub fn freudenthal_character(rs: &RootSystem, lambda: &DominantWeight) -> Result<CharElem> {
    require_dominant(rs, lambda)?;
    let mult = freudenthal_labels(rs, &rs.dynkin_labels(lambda))?;
    let mut out = CharElem::zero(rs.kind());
    for (l, m) in mult {
        out.coeffs.insert(rs.weight_of_labels(&l), BigInt::from(m));
    }
    Ok(out)
}

/// `∏_{α>0} (λ+ρ, α) / (ρ, α)`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &DominantWeight) -> BigInt {
    let labels = rs.dynkin_labels(lambda);
    let d = rs.half_norms();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for c in rs.pos_root_coeffs() {
        let mut top = 0i64;
        let mut bottom = 0i64;
        for k in 0..rs.rank() {
            top += c[k] * (labels[k] + 1) * d[k];
            bottom += c[k] * d[k];
        }
        num *= top;
        den *= bottom;
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero(), "Weyl dimension formula must be integral");
    q
}

/// `ch V_λ` from the Weyl character formula: the alternating sum over the
/// orbit of `λ + ρ` divided exactly by the one over the orbit of `ρ`.
/// Needs the whole Weyl group, so it serves as an oracle for small ranks.
pub fn weyl_character_direct(rs: &RootSystem, lambda: &DominantWeight) -> Result<CharElem> {
    require_dominant(rs, lambda)?;
    let r = rs.rank();
    let ones = vec![1i64; r];
    let numerator = signed_regular_orbit(rs, &add_labels(&rs.dynkin_labels(lambda), &ones))?;
    let divisor = signed_regular_orbit(rs, &ones)?;

    let mut rem: BTreeMap<Vec<i64>, i64> = numerator.into_iter().map(|(k, s)| (k, s as i64)).collect();
    // lexicographic order on labels is a monomial order, so leading terms
    // multiply
    let (lead, &lead_sign) = divisor.iter().max_by(|a, b| a.0.cmp(b.0)).unwrap();
    let lead = lead.clone();
    let work_cap = rs.limits().work_cap;
    let mut work = 0u64;
    let mut quotient: HashMap<Vec<i64>, i64> = HashMap::new();
    while let Some((top, &c)) = rem.last_key_value() {
        let shift: Vec<i64> = top.iter().zip(&lead).map(|(a, b)| a - b).collect();
        let q = c * lead_sign as i64;
        for (k, &s) in &divisor {
            let key = add_labels(k, &shift);
            let e = rem.entry(key.clone()).or_insert(0);
            *e -= q * s as i64;
            if *e == 0 {
                rem.remove(&key);
            }
        }
        work += divisor.len() as u64;
        if work > work_cap {
            return Err(Error::ResourceCap {
                what: "Weyl character division work",
                needed: work,
                cap: work_cap,
            });
        }
        quotient.insert(shift, q);
    }
    let mut out = CharElem::zero(rs.kind());
    for (k, q) in quotient {
        if k.iter().all(|&a| a >= 0) {
            out.add_term(rs.weight_of_labels(&k), BigInt::from(q));
        }
    }
    Ok(out)
}

/// Product in the orbit basis.
///
/// For dominant `μ, ν` the coefficient of `We_κ` in `We_μ · We_ν` is the
/// number of pairs `(x, y) ∈ Wμ × Wν` with `x + y = κ`. By `W`-symmetry this
/// equals `|Wν| · #{x ∈ Wμ : x + ν ∈ Wκ} / |Wκ|`, so only one orbit is
/// expanded.
pub fn multiply(rs: &RootSystem, a: &CharElem, b: &CharElem) -> Result<CharElem> {
    for x in [a, b] {
        if x.kind != rs.kind() {
            return Err(Error::SystemMismatch {
                expected: rs.kind(),
                found: x.kind,
            });
        }
    }
    let cap = rs.limits().work_cap;
    let mut work = 0u64;
    let mut orbits: HashMap<Vec<i64>, Vec<Vec<i64>>> = HashMap::new();
    let mut acc: HashMap<Vec<i64>, BigInt> = HashMap::new();
    let mut scratch = vec![0i64; rs.rank()];
    for (mu, cm) in &a.coeffs {
        for (nu, cn) in &b.coeffs {
            let lm = rs.dynkin_labels(mu);
            let ln = rs.dynkin_labels(nu);
            let (expand, fixed) = if orbit_size(rs, &lm) <= orbit_size(rs, &ln) { (lm, ln) } else { (ln, lm) };
            if !orbits.contains_key(&expand) {
                orbits.insert(expand.clone(), orbit_labels(rs, &expand)?);
            }
            let orbit = &orbits[&expand];
            work += orbit.len() as u64;
            if work > cap {
                return Err(Error::ResourceCap {
                    what: "orbit additions in product",
                    needed: work,
                    cap,
                });
            }
            let mut counts: HashMap<Vec<i64>, u64> = HashMap::new();
            for x in orbit {
                for k in 0..scratch.len() {
                    scratch[k] = x[k] + fixed[k];
                }
                project_labels(rs, &mut scratch);
                *counts.entry(scratch.clone()).or_insert(0) += 1;
            }
            let fixed_size = orbit_size(rs, &fixed);
            let c = cm * cn;
            for (kappa, n) in counts {
                let pairs = n * fixed_size;
                let ks = orbit_size(rs, &kappa);
                debug_assert_eq!(pairs % ks, 0);
                *acc.entry(kappa).or_insert_with(BigInt::zero) += &c * BigInt::from(pairs / ks);
            }
        }
    }
    let mut out = CharElem::zero(rs.kind());
    for (k, c) in acc {
        out.add_term(rs.weight_of_labels(&k), c);
    }
    Ok(out)
}

/// Expresses `x` in the basis of irreducible characters by repeatedly
/// stripping the character of a maximal support weight. The weight chosen
/// is the one with largest `|μ + ρ|²` (which is maximal for dominance),
/// ties broken by the larger coordinate vector.
pub fn decompose_into_irreducibles(rs: &RootSystem, x: &CharElem) -> Result<IrrDecomposition> {
    if x.kind != rs.kind() {
        return Err(Error::SystemMismatch {
            expected: rs.kind(),
            found: x.kind,
        });
    }
    let ones = vec![1i64; rs.rank()];
    let mut rem: HashMap<Vec<i64>, BigInt> = x.coeffs.iter().map(|(w, c)| (rs.dynkin_labels(w), c.clone())).collect();
    let mut out = BTreeMap::new();
    let mut cache: HashMap<Vec<i64>, HashMap<Vec<i64>, i64>> = HashMap::new();
    while !rem.is_empty() {
        let top = rem
            .keys()
            .map(|k| {
                let kr = add_labels(k, &ones);
                (rs.form_labels(&kr, &kr), rs.weight_of_labels(k), k.clone())
            })
            .max()
            .unwrap()
            .2;
        let c = rem[&top].clone();
        if !cache.contains_key(&top) {
            cache.insert(top.clone(), freudenthal_labels(rs, &top)?);
        }
        for (mu, m) in &cache[&top] {
            let e = rem.entry(mu.clone()).or_insert_with(BigInt::zero);
            *e -= &c * m;
            if e.is_zero() {
                rem.remove(mu);
            }
        }
        out.insert(rs.weight_of_labels(&top), c);
    }
    Ok(IrrDecomposition {
        kind: rs.kind(),
        coeffs: out,
    })
}

/// Decomposition of `V_λ ⊗ V_μ` into irreducibles.
pub fn tensor_decompose(rs: &RootSystem, lambda: &DominantWeight, mu: &DominantWeight) -> Result<IrrDecomposition> {
    let a = freudenthal_character(rs, lambda)?;
    let b = freudenthal_character(rs, mu)?;
    decompose_into_irreducibles(rs, &multiply(rs, &a, &b)?)
}
