//! Root systems of type C_n, A_{2n-1} and E6 in the coordinates used
//! throughout the crate.
//!
//! Weights are stored in canonical coordinates per kind:
//!
//! - `SpC(n)`: ε-coordinates in Z^n, simple roots `e_i - e_{i+1}` and `2e_n`.
//! - `SlA(n)`: a representative in Z^{2n} modulo `det = (1, ..., 1)`, normalized
//!   so that the maximum of the last `n` entries is zero. For dominant weights
//!   this is the `(λ⁺ | -λ⁻)` form with `λ⁻` having a vanishing entry.
//! - `E6`: Dynkin labels in Bourbaki numbering (α1-α3-α4-α5-α6 with α2 on α4).
//!
//! Internally most algorithms work on Dynkin labels, where a simple
//! reflection is `a ↦ a - a_i · C[i]` and the i-th row of the Cartan matrix
//! is the label vector of the i-th simple root.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootSystemKind {
    /// Symplectic type C_n, rank n.
    SpC(u32),
    /// Special linear type A_{2n-1}, rank 2n-1.
    SlA(u32),
    E6,
}

impl RootSystemKind {
    pub fn rank(&self) -> usize {
        match *self {
            RootSystemKind::SpC(n) => n as usize,
            RootSystemKind::SlA(n) => 2 * n as usize - 1,
            RootSystemKind::E6 => 6,
        }
    }

    /// Length of the canonical coordinate vector.
    pub fn ambient_dim(&self) -> usize {
        match *self {
            RootSystemKind::SpC(n) => n as usize,
            RootSystemKind::SlA(n) => 2 * n as usize,
            RootSystemKind::E6 => 6,
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            RootSystemKind::SpC(0) | RootSystemKind::SlA(0) => Err(Error::InvalidParameter(
                format!("{self:?}: n must be at least 1"),
            )),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for RootSystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RootSystemKind::SpC(n) => write!(f, "C{n}"),
            RootSystemKind::SlA(n) => write!(f, "SL{}", 2 * n),
            RootSystemKind::E6 => write!(f, "E6"),
        }
    }
}

impl FromStr for RootSystemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        let bad = || Error::ParseKind(s.to_string());
        let num = |digits: &str| -> Result<u32> {
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            digits.parse::<u32>().map_err(|_| bad())
        };
        let kind = if t == "E6" {
            RootSystemKind::E6
        } else if let Some(rest) = t.strip_prefix("SL") {
            let m = num(rest)?;
            if m % 2 != 0 {
                return Err(bad());
            }
            RootSystemKind::SlA(m / 2)
        } else if let Some(rest) = t.strip_prefix('A') {
            let r = num(rest)?;
            if r % 2 == 0 {
                return Err(bad());
            }
            RootSystemKind::SlA(r.div_ceil(2))
        } else if let Some(rest) = t.strip_prefix('C') {
            RootSystemKind::SpC(num(rest)?)
        } else {
            return Err(bad());
        };
        kind.validate()?;
        Ok(kind)
    }
}

impl Serialize for RootSystemKind {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RootSystemKind {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A weight in the canonical coordinates of its root system kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    kind: RootSystemKind,
    coords: Vec<i64>,
}

/// Alias used where an operation expects a dominant weight; dominance is
/// checked at the operation boundary.
pub type DominantWeight = Weight;

impl Weight {
    pub fn kind(&self) -> RootSystemKind {
        self.kind
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    Epsilon,
    Dynkin,
    RootBasis,
}

impl Basis {
    pub fn name(&self) -> &'static str {
        match self {
            Basis::Epsilon => "epsilon",
            Basis::Dynkin => "dynkin",
            Basis::RootBasis => "root_basis",
        }
    }
}

impl FromStr for Basis {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "epsilon" | "eps" => Ok(Basis::Epsilon),
            "dynkin" | "fundamental" => Ok(Basis::Dynkin),
            "root" | "root_basis" | "root-basis" => Ok(Basis::RootBasis),
            other => Err(format!("unknown basis {other:?}")),
        }
    }
}

/// Resource caps shared by every enumeration in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximal Weyl orbit size that will be enumerated.
    pub orbit_cap: u64,
    /// Maximal number of elementary additions in a convolution or multiset
    /// expansion.
    pub work_cap: u64,
    /// Maximal number of dominant weight strata in a multiplicity computation.
    pub strata_cap: u64,
    /// Maximal Weyl group order for the alternating-sum character oracle.
    pub weyl_group_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            orbit_cap: 1_000_000,
            work_cap: 100_000_000,
            strata_cap: 1_000_000,
            weyl_group_cap: 100_000,
        }
    }
}

impl Limits {
    /// One knob for all caps.
    pub fn uniform(cap: u64) -> Self {
        Limits {
            orbit_cap: cap,
            work_cap: cap,
            strata_cap: cap,
            weyl_group_cap: cap,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    kind: RootSystemKind,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<BigRational>>,
    simple_roots: Vec<Weight>,
    fundamental_weights: Vec<Weight>,
    positive_roots: Vec<Weight>,
    rho: Weight,
    fundamental_group_exponent: u32,
    /// `(α_i, α_i) / 2` for the invariant form in use.
    half_norms: Vec<i64>,
    /// `exponent · (ϖ_i, ϖ_j)`, integral.
    gram: Vec<Vec<i64>>,
    /// `exponent · C⁻¹`, integral.
    cartan_inv_scaled: Vec<Vec<i64>>,
    pos_root_labels: Vec<Vec<i64>>,
    pos_root_coeffs: Vec<Vec<i64>>,
    limits: Limits,
}

const E6_CARTAN: [[i64; 6]; 6] = [
    [2, 0, -1, 0, 0, 0],
    [0, 2, 0, -1, 0, 0],
    [-1, 0, 2, -1, 0, 0],
    [0, -1, -1, 2, -1, 0],
    [0, 0, 0, -1, 2, -1],
    [0, 0, 0, 0, -1, 2],
];

impl RootSystem {
    pub fn build(kind: RootSystemKind) -> Result<RootSystem> {
        kind.validate()?;
        let rank = kind.rank();

        let (cartan, half_norms) = match kind {
            RootSystemKind::E6 => (
                E6_CARTAN.iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
                vec![1; 6],
            ),
            _ => {
                let raw = ambient_simple_roots(kind);
                let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
                let cartan = (0..rank)
                    .map(|i| {
                        (0..rank)
                            .map(|j| 2 * dot(&raw[i], &raw[j]) / dot(&raw[j], &raw[j]))
                            .collect()
                    })
                    .collect();
                let half_norms = raw.iter().map(|r| dot(r, r) / 2).collect();
                (cartan, half_norms)
            }
        };

        let cartan_inv = invert(&cartan)
            .ok_or_else(|| Error::Certification(format!("{kind}: singular Cartan matrix")))?;
        let exponent = cartan_inv
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let exponent_i64 = exponent.to_i64().expect("small exponent");
        let scale = BigRational::from_integer(exponent.clone());
        let cartan_inv_scaled: Vec<Vec<i64>> = cartan_inv
            .iter()
            .map(|row| row.iter().map(|q| to_i64(&(q * &scale))).collect())
            .collect();
        let gram: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| cartan_inv_scaled[i][j] * half_norms[j]).collect())
            .collect();
        for i in 0..rank {
            for j in 0..rank {
                if gram[i][j] != gram[j][i] || cartan[i][j] * half_norms[j] != cartan[j][i] * half_norms[i] {
                    return Err(Error::Certification(format!("{kind}: form not symmetric")));
                }
            }
        }

        let (pos_root_coeffs, pos_root_labels) = positive_root_closure(&cartan);

        let mut rs = RootSystem {
            kind,
            rank,
            cartan,
            cartan_inv,
            simple_roots: Vec::new(),
            fundamental_weights: Vec::new(),
            positive_roots: Vec::new(),
            rho: Weight { kind, coords: vec![0; kind.ambient_dim()] },
            fundamental_group_exponent: exponent_i64 as u32,
            half_norms,
            gram,
            cartan_inv_scaled,
            pos_root_labels,
            pos_root_coeffs,
            limits: Limits::default(),
        };
        rs.simple_roots = rs.cartan.iter().map(|row| rs.weight_of_labels(row)).collect();
        rs.fundamental_weights = (0..rank)
            .map(|i| {
                let mut e = vec![0; rank];
                e[i] = 1;
                rs.weight_of_labels(&e)
            })
            .collect();
        rs.positive_roots = rs.pos_root_labels.iter().map(|l| rs.weight_of_labels(l)).collect();

        // ρ as the half-sum of positive roots must be the sum of fundamental weights
        let mut twice_rho = vec![0i64; rank];
        for l in &rs.pos_root_labels {
            for (acc, x) in twice_rho.iter_mut().zip(l) {
                *acc += x;
            }
        }
        if twice_rho.iter().any(|&x| x != 2) {
            return Err(Error::Certification(format!(
                "{kind}: half-sum of positive roots has labels {twice_rho:?}/2"
            )));
        }
        rs.rho = rs.weight_of_labels(&vec![1; rank]);
        Ok(rs)
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn kind(&self) -> RootSystemKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_inv(&self) -> &[Vec<BigRational>] {
        &self.cartan_inv
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    /// The i-th simple root, 1-based as in the Dynkin diagram labelling.
    pub fn simple_root(&self, i: usize) -> Result<&Weight> {
        self.check_index(i)?;
        Ok(&self.simple_roots[i - 1])
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental_weights
    }

    /// ϖ_i, 1-based.
    pub fn fundamental_weight(&self, i: usize) -> Result<&Weight> {
        self.check_index(i)?;
        Ok(&self.fundamental_weights[i - 1])
    }

    /// Positive roots ordered by height, then by root coefficients.
    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn highest_root(&self) -> &Weight {
        self.positive_roots.last().expect("rank >= 1")
    }

    /// Exponent of the weight lattice modulo the root lattice.
    pub fn fundamental_group_exponent(&self) -> u32 {
        self.fundamental_group_exponent
    }

    pub fn zero(&self) -> Weight {
        Weight {
            kind: self.kind,
            coords: vec![0; self.kind.ambient_dim()],
        }
    }

    /// Builds a weight from canonical coordinates, normalizing the
    /// representative for `SlA`.
    pub fn weight(&self, coords: Vec<i64>) -> Result<Weight> {
        let expected = self.kind.ambient_dim();
        if coords.len() != expected {
            return Err(Error::WrongLength {
                kind: self.kind,
                expected,
                found: coords.len(),
            });
        }
        Ok(Weight {
            kind: self.kind,
            coords: normalize(self.kind, coords),
        })
    }

    pub fn weight_from_dynkin(&self, labels: &[i64]) -> Result<Weight> {
        if labels.len() != self.rank {
            return Err(Error::WrongLength {
                kind: self.kind,
                expected: self.rank,
                found: labels.len(),
            });
        }
        Ok(self.weight_of_labels(labels))
    }

    /// `Σ coeffs[k] · α_{k+1}`, a weight given on the simple roots.
    pub fn weight_from_root_coefficients(&self, coeffs: &[i64]) -> Result<Weight> {
        if coeffs.len() != self.rank {
            return Err(Error::WrongLength {
                kind: self.kind,
                expected: self.rank,
                found: coeffs.len(),
            });
        }
        let labels: Vec<i64> = (0..self.rank)
            .map(|j| (0..self.rank).map(|k| coeffs[k] * self.cartan[k][j]).sum())
            .collect();
        Ok(self.weight_of_labels(&labels))
    }

    pub fn check(&self, w: &Weight) -> Result<()> {
        if w.kind != self.kind {
            return Err(Error::SystemMismatch {
                expected: self.kind,
                found: w.kind,
            });
        }
        if w.coords.len() != self.kind.ambient_dim() {
            return Err(Error::WrongLength {
                kind: self.kind,
                expected: self.kind.ambient_dim(),
                found: w.coords.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            return Err(Error::IndexOutOfRange { index: i, rank: self.rank });
        }
        Ok(())
    }

    /// Pairings `⟨w, α_i^∨⟩` of a weight against the simple coroots.
    pub fn dynkin_labels(&self, w: &Weight) -> Vec<i64> {
        let c = &w.coords;
        match self.kind {
            RootSystemKind::SpC(n) => {
                let n = n as usize;
                (0..n).map(|i| if i + 1 < n { c[i] - c[i + 1] } else { c[i] }).collect()
            }
            RootSystemKind::SlA(n) => (0..2 * n as usize - 1).map(|i| c[i] - c[i + 1]).collect(),
            RootSystemKind::E6 => c.clone(),
        }
    }

    pub(crate) fn weight_of_labels(&self, labels: &[i64]) -> Weight {
        let coords = match self.kind {
            RootSystemKind::SpC(_) => suffix_sums(labels, labels.len()),
            RootSystemKind::SlA(n) => normalize(self.kind, suffix_sums(labels, 2 * n as usize)),
            RootSystemKind::E6 => labels.to_vec(),
        };
        Weight { kind: self.kind, coords }
    }

    /// Coefficients of a weight on the simple roots, `C⁻ᵀ · labels`.
    pub fn root_coefficients(&self, w: &Weight) -> Vec<BigRational> {
        let e = BigInt::from(self.fundamental_group_exponent);
        self.scaled_root_coefficients(&self.dynkin_labels(w))
            .into_iter()
            .map(|x| BigRational::new(BigInt::from(x), e.clone()))
            .collect()
    }

    /// `exponent · C⁻ᵀ · labels`, an integer vector.
    pub(crate) fn scaled_root_coefficients(&self, labels: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|k| (0..self.rank).map(|i| labels[i] * self.cartan_inv_scaled[i][k]).sum())
            .collect()
    }

    pub fn convert_coordinates(&self, w: &Weight, target: Basis) -> Result<Vec<BigRational>> {
        self.check(w)?;
        let int = |v: Vec<i64>| v.into_iter().map(|x| BigRational::from_integer(x.into())).collect();
        match target {
            Basis::Dynkin => Ok(int(self.dynkin_labels(w))),
            Basis::RootBasis => Ok(self.root_coefficients(w)),
            Basis::Epsilon => match self.kind {
                RootSystemKind::E6 => Err(Error::UndefinedBasis {
                    basis: "epsilon",
                    kind: self.kind,
                }),
                _ => Ok(int(w.coords.clone())),
            },
        }
    }

    /// Inverse of [`RootSystem::convert_coordinates`]; the input must describe
    /// an integral weight.
    pub fn weight_from_basis(&self, basis: Basis, coords: &[BigRational]) -> Result<Weight> {
        let ints: Result<Vec<i64>> = coords
            .iter()
            .map(|q| {
                if q.is_integer() {
                    q.to_integer().to_i64().ok_or_else(|| Error::NonIntegral(q.to_string()))
                } else {
                    Err(Error::NonIntegral(q.to_string()))
                }
            })
            .collect::<Result<_>>();
        match basis {
            Basis::Dynkin => self.weight_from_dynkin(&ints?),
            Basis::Epsilon => match self.kind {
                RootSystemKind::E6 => Err(Error::UndefinedBasis {
                    basis: "epsilon",
                    kind: self.kind,
                }),
                _ => self.weight(ints?),
            },
            Basis::RootBasis => {
                // root coefficients may be fractional; labels are C^T c
                if coords.len() != self.rank {
                    return Err(Error::WrongLength {
                        kind: self.kind,
                        expected: self.rank,
                        found: coords.len(),
                    });
                }
                let labels: Vec<BigRational> = (0..self.rank)
                    .map(|j| {
                        (0..self.rank)
                            .map(|k| &coords[k] * BigRational::from_integer(self.cartan[k][j].into()))
                            .fold(BigRational::zero(), |a, b| a + b)
                    })
                    .collect();
                self.weight_from_basis(Basis::Dynkin, &labels)
            }
        }
    }

    /// Scaled invariant form on Dynkin label vectors. Only ratios are
    /// meaningful.
    pub(crate) fn form_labels(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (&ai, row) in a.iter().zip(&self.gram) {
            if ai == 0 {
                continue;
            }
            s += ai * b.iter().zip(row).map(|(x, g)| x * g).sum::<i64>();
        }
        s
    }

    pub(crate) fn half_norms(&self) -> &[i64] {
        &self.half_norms
    }

    pub(crate) fn pos_root_labels(&self) -> &[Vec<i64>] {
        &self.pos_root_labels
    }

    pub(crate) fn pos_root_coeffs(&self) -> &[Vec<i64>] {
        &self.pos_root_coeffs
    }

    /// Dimension of the adjoint representation, `2 |Φ⁺| + rank`.
    pub fn adjoint_dimension(&self) -> usize {
        2 * self.positive_roots.len() + self.rank
    }
}

fn ambient_simple_roots(kind: RootSystemKind) -> Vec<Vec<i64>> {
    let m = kind.ambient_dim();
    let unit_diff = |i: usize| {
        let mut v = vec![0; m];
        v[i] = 1;
        v[i + 1] = -1;
        v
    };
    match kind {
        RootSystemKind::SpC(n) => {
            let n = n as usize;
            let mut roots: Vec<_> = (0..n - 1).map(unit_diff).collect();
            let mut last = vec![0; n];
            last[n - 1] = 2;
            roots.push(last);
            roots
        }
        RootSystemKind::SlA(n) => (0..2 * n as usize - 1).map(unit_diff).collect(),
        RootSystemKind::E6 => unreachable!("E6 uses a fixed Cartan matrix"),
    }
}

fn normalize(kind: RootSystemKind, mut coords: Vec<i64>) -> Vec<i64> {
    if let RootSystemKind::SlA(n) = kind {
        let n = n as usize;
        let shift = coords[n..].iter().copied().max().unwrap_or(0);
        if shift != 0 {
            coords.iter_mut().for_each(|c| *c -= shift);
        }
    }
    coords
}

/// `out[i] = Σ_{j ≥ i} labels[j]` padded with zeros to length `len`.
fn suffix_sums(labels: &[i64], len: usize) -> Vec<i64> {
    let mut out = vec![0; len];
    let mut acc = 0;
    for i in (0..labels.len()).rev() {
        acc += labels[i];
        out[i] = acc;
    }
    out
}

fn to_i64(q: &BigRational) -> i64 {
    assert!(q.is_integer(), "expected integral value, got {q}");
    q.to_integer().to_i64().expect("fits in i64")
}

/// Exact inverse by Gauss-Jordan elimination.
pub(crate) fn invert(m: &[Vec<i64>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().map(|&x| BigRational::from_integer(x.into())).collect();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Closure of the simple roots under simple reflections, computed in
/// root-coefficient space; returns the positive roots as
/// (root coefficients, Dynkin labels).
fn positive_root_closure(cartan: &[Vec<i64>]) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let r = cartan.len();
    let labels_of = |c: &[i64]| -> Vec<i64> {
        (0..r).map(|j| (0..r).map(|k| c[k] * cartan[k][j]).sum()).collect()
    };
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..r {
        let mut e = vec![0; r];
        e[i] = 1;
        if seen.insert(e.clone()) {
            queue.push_back(e);
        }
    }
    while let Some(beta) = queue.pop_front() {
        let labels = labels_of(&beta);
        for i in 0..r {
            if labels[i] == 0 {
                continue;
            }
            let mut next = beta.clone();
            next[i] -= labels[i];
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut positive: Vec<Vec<i64>> = seen.into_iter().filter(|c| c.iter().all(|&x| x >= 0)).collect();
    positive.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    let labels = positive.iter().map(|c| labels_of(c)).collect();
    (positive, labels)
}

/// Rational vector with every entry integral and non-negative.
pub(crate) fn is_nonneg_integral(v: &[BigRational]) -> bool {
    v.iter().all(|q| q.is_integer() && !q.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn parse_kinds() {
        assert_eq!("C3".parse::<RootSystemKind>().unwrap(), RootSystemKind::SpC(3));
        assert_eq!("SL6".parse::<RootSystemKind>().unwrap(), RootSystemKind::SlA(3));
        assert_eq!("A5".parse::<RootSystemKind>().unwrap(), RootSystemKind::SlA(3));
        assert_eq!("e6".parse::<RootSystemKind>().unwrap(), RootSystemKind::E6);
        for bad in ["A4", "SL5", "C0", "SL0", "E7", "C", "Cx", "B3"] {
            assert!(bad.parse::<RootSystemKind>().is_err(), "{bad}");
        }
        assert_eq!(RootSystemKind::SlA(2).to_string(), "SL4");
        assert_eq!(RootSystemKind::SpC(4).to_string(), "C4");
    }

    #[test]
    fn invalid_parameter_rejected() {
        assert!(matches!(
            RootSystem::build(RootSystemKind::SpC(0)),
            Err(Error::InvalidParameter(_))
        ));
        assert!(RootSystem::build(RootSystemKind::SlA(0)).is_err());
    }

    #[test]
    fn c2_cartan() {
        let rs = RootSystem::build(RootSystemKind::SpC(2)).unwrap();
        assert_eq!(rs.cartan(), &[vec![2, -1], vec![-2, 2]]);
        assert_eq!(rs.fundamental_group_exponent(), 2);
    }

    #[test]
    fn a1_cartan() {
        let rs = RootSystem::build(RootSystemKind::SlA(1)).unwrap();
        assert_eq!(rs.rank(), 1);
        assert_eq!(rs.cartan(), &[vec![2]]);
        assert_eq!(rs.fundamental_group_exponent(), 2);
    }

    #[test]
    fn e6_cartan_inverse_has_denominator_three() {
        let rs = RootSystem::build(RootSystemKind::E6).unwrap();
        // the Bourbaki edges
        for (i, j) in [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)] {
            assert_eq!(rs.cartan()[i - 1][j - 1], -1);
            assert_eq!(rs.cartan()[j - 1][i - 1], -1);
        }
        let denoms: HashSet<BigInt> = rs.cartan_inv().iter().flatten().map(|x| x.denom().clone()).collect();
        assert!(denoms.contains(&BigInt::from(3)));
        assert!(denoms.iter().all(|d| d == &BigInt::from(1) || d == &BigInt::from(3)));
        assert_eq!(rs.fundamental_group_exponent(), 3);
        // ϖ_1 = (4α1 + 3α2 + 5α3 + 6α4 + 4α5 + 2α6)/3
        let row: Vec<BigRational> = rs.cartan_inv()[0].clone();
        let expect: Vec<BigRational> = [4, 3, 5, 6, 4, 2].iter().map(|&x| BigRational::new(x.into(), 3.into())).collect();
        assert_eq!(row, expect);
    }

    #[test]
    fn cartan_times_inverse_is_identity() {
        for kind in all_small_kinds() {
            let rs = RootSystem::build(kind).unwrap();
            let r = rs.rank();
            for i in 0..r {
                for j in 0..r {
                    let s = (0..r)
                        .map(|k| q(rs.cartan()[i][k]) * &rs.cartan_inv()[k][j])
                        .fold(BigRational::zero(), |a, b| a + b);
                    assert_eq!(s, if i == j { q(1) } else { q(0) }, "{kind}");
                }
            }
        }
    }

    #[test]
    fn cartan_rows_are_simple_root_labels() {
        for kind in all_small_kinds() {
            let rs = RootSystem::build(kind).unwrap();
            for (i, alpha) in rs.simple_roots().iter().enumerate() {
                assert_eq!(rs.dynkin_labels(alpha), rs.cartan()[i], "{kind}");
            }
        }
    }

    #[test]
    fn positive_root_counts() {
        for n in 1..=5u32 {
            let c = RootSystem::build(RootSystemKind::SpC(n)).unwrap();
            assert_eq!(c.positive_roots().len() as u32, n * n);
            let a = RootSystem::build(RootSystemKind::SlA(n)).unwrap();
            assert_eq!(a.positive_roots().len() as u32, n * (2 * n - 1));
            assert_eq!(c.fundamental_group_exponent(), 2);
            assert_eq!(a.fundamental_group_exponent(), 2 * n);
        }
        let e6 = RootSystem::build(RootSystemKind::E6).unwrap();
        assert_eq!(e6.positive_roots().len(), 36);
        assert_eq!(e6.adjoint_dimension(), 78);
    }

    #[test]
    fn c2_positive_roots() {
        let rs = RootSystem::build(RootSystemKind::SpC(2)).unwrap();
        let mut got: Vec<Vec<i64>> = rs.positive_roots().iter().map(|w| w.coords().to_vec()).collect();
        got.sort();
        let mut want = vec![vec![1, -1], vec![1, 1], vec![2, 0], vec![0, 2]];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(rs.highest_root().coords(), &[2, 0]);
    }

    #[test]
    fn rho_values() {
        let c2 = RootSystem::build(RootSystemKind::SpC(2)).unwrap();
        assert_eq!(c2.rho().coords(), &[2, 1]);
        let e6 = RootSystem::build(RootSystemKind::E6).unwrap();
        assert_eq!(e6.rho().coords(), &[1, 1, 1, 1, 1, 1]);
        let a1 = RootSystem::build(RootSystemKind::SlA(1)).unwrap();
        assert_eq!(a1.dynkin_labels(a1.rho()), vec![1]);
    }

    #[test]
    fn sl_normalization() {
        let rs = RootSystem::build(RootSystemKind::SlA(2)).unwrap();
        let w = rs.weight(vec![2, 1, 1, 0]).unwrap();
        assert_eq!(w.coords(), &[1, 0, 0, -1]);
        let v = rs.weight(vec![3, 2, 2, 1]).unwrap();
        assert_eq!(v, w);
    }

    #[test]
    fn coordinate_conversions() {
        let c3 = RootSystem::build(RootSystemKind::SpC(3)).unwrap();
        let w2 = c3.weight_from_dynkin(&[0, 1, 0]).unwrap();
        assert_eq!(w2.coords(), &[1, 1, 0]);

        let a3 = RootSystem::build(RootSystemKind::SlA(2)).unwrap();
        let w = a3.weight(vec![1, 0, 0, -1]).unwrap();
        let d = a3.convert_coordinates(&w, Basis::Dynkin).unwrap();
        assert_eq!(d, vec![q(1), q(0), q(1)]);

        let e6 = RootSystem::build(RootSystemKind::E6).unwrap();
        assert!(matches!(
            e6.convert_coordinates(&e6.zero(), Basis::Epsilon),
            Err(Error::UndefinedBasis { .. })
        ));
        for kind in all_small_kinds() {
            let rs = RootSystem::build(kind).unwrap();
            for b in [Basis::Dynkin, Basis::RootBasis] {
                assert!(rs.convert_coordinates(&rs.zero(), b).unwrap().iter().all(|x| x.is_zero()));
            }
        }
    }

    #[test]
    fn root_basis_denominators_divide_exponent() {
        for kind in all_small_kinds() {
            let rs = RootSystem::build(kind).unwrap();
            let e = BigInt::from(rs.fundamental_group_exponent());
            for w in rs.fundamental_weights() {
                for x in rs.convert_coordinates(w, Basis::RootBasis).unwrap() {
                    assert!((&e % x.denom()).is_zero());
                }
            }
        }
    }

    #[test]
    fn convert_round_trip() {
        for kind in all_small_kinds() {
            let rs = RootSystem::build(kind).unwrap();
            let w = rs.weight_from_dynkin(&(0..rs.rank() as i64).map(|i| i % 3 - 1).collect::<Vec<_>>()).unwrap();
            for b in [Basis::Dynkin, Basis::RootBasis, Basis::Epsilon] {
                if let Ok(v) = rs.convert_coordinates(&w, b) {
                    assert_eq!(rs.weight_from_basis(b, &v).unwrap(), w, "{kind} {b:?}");
                }
            }
        }
    }

    pub(crate) fn all_small_kinds() -> Vec<RootSystemKind> {
        vec![
            RootSystemKind::SpC(1),
            RootSystemKind::SpC(2),
            RootSystemKind::SpC(3),
            RootSystemKind::SpC(4),
            RootSystemKind::SlA(1),
            RootSystemKind::SlA(2),
            RootSystemKind::SlA(3),
            RootSystemKind::E6,
        ]
    }
}
