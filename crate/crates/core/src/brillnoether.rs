//! Jacobian-specific layer: degree and length of weights, the `(λ⁺ | -λ⁻)`
//! split in type A, symbolic supports of orbit components, the support
//! dimension bounds and the classifier of theta divisor summands.

use std::fmt;

use serde_json::{json, Value};

use crate::charring::tensor_decompose;
use crate::dominance::{reduce_e6, reduce_hyp, reduce_nonhyp, require_dominant, ReductionTrace};
use crate::error::{Error, Result};
use crate::rootsys::{DominantWeight, RootSystem, RootSystemKind, Weight};
use crate::weyl::dominant_projection;

/// Degree `d = Σ λ_i` and length `ℓ = #{i : λ_i ≠ 0}` of a dominant type C
/// weight viewed as a partition.
pub fn degree_length_hyp(lambda: &Weight) -> (i64, usize) {
    let c = lambda.coords();
    (c.iter().sum(), c.iter().filter(|&&x| x != 0).count())
}

/// The representative `(λ⁺ | -λ⁻)` of a type A weight with `λ⁺, λ⁻ ≥ 0`
/// and some entry of `λ⁻` equal to zero. Both halves are stored in
/// coordinate order, so `plus` decreases and `minus` increases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlSplit {
    pub plus: Vec<i64>,
    pub minus: Vec<i64>,
}

impl SlSplit {
    pub fn plus_degree(&self) -> usize {
        self.plus.iter().sum::<i64>() as usize
    }

    pub fn minus_degree(&self) -> usize {
        self.minus.iter().sum::<i64>() as usize
    }

    pub fn degree(&self) -> usize {
        self.plus_degree() + self.minus_degree()
    }

    pub fn plus_length(&self) -> usize {
        self.plus.iter().filter(|&&x| x != 0).count()
    }

    pub fn minus_length(&self) -> usize {
        self.minus.iter().filter(|&&x| x != 0).count()
    }

    pub fn length(&self) -> usize {
        self.plus_length() + self.minus_length()
    }

    /// `λ⁻` as a partition (decreasing, zeros dropped).
    pub fn minus_partition(&self) -> Vec<i64> {
        self.minus.iter().rev().copied().filter(|&x| x != 0).collect()
    }

    /// `λ⁺` as a partition.
    pub fn plus_partition(&self) -> Vec<i64> {
        self.plus.iter().copied().filter(|&x| x != 0).collect()
    }

    pub fn reassemble(&self, rs: &RootSystem) -> Result<Weight> {
        let mut c = self.plus.clone();
        c.extend(self.minus.iter().map(|x| -x));
        rs.weight(c)
    }
}

pub fn split_sl(rs: &RootSystem, lambda: &Weight) -> Result<SlSplit> {
    let n = match rs.kind() {
        RootSystemKind::SlA(n) => n as usize,
        other => return Err(Error::InvalidParameter(format!("(λ⁺|-λ⁻) split needs type A_(2n-1), got {other}"))),
    };
    require_dominant(rs, lambda)?;
    // canonical coordinates already have max of the last n entries = 0
    let c = lambda.coords();
    Ok(SlSplit {
        plus: c[..n].to_vec(),
        minus: c[n..].iter().map(|x| -x).collect(),
    })
}

/// Young diagram transpose of a weakly decreasing sequence; trailing zeros
/// are dropped.
pub fn transpose_partition(p: &[i64]) -> Vec<i64> {
    let top = p.first().copied().unwrap_or(0).max(0);
    (1..=top).map(|k| p.iter().filter(|&&x| x >= k).count() as i64).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseSpec {
    Hyperelliptic { g: u32 },
    NonHyperelliptic { g: u32 },
    CubicThreefold,
}

impl CaseSpec {
    pub fn new(kind: &str, g: Option<u32>) -> Result<CaseSpec> {
        let need_g = || g.ok_or_else(|| Error::InvalidParameter(format!("case {kind} needs a genus")));
        let case = match kind.to_ascii_lowercase().replace('-', "_").as_str() {
            "hyperelliptic" | "hyp" => CaseSpec::Hyperelliptic { g: need_g()? },
            "nonhyperelliptic" | "non_hyperelliptic" | "nonhyp" => CaseSpec::NonHyperelliptic { g: need_g()? },
            "cubic_threefold" | "threefold" | "cubic" => CaseSpec::CubicThreefold,
            _ => return Err(Error::InvalidParameter(format!("unknown case {kind:?}"))),
        };
        case.validate()?;
        Ok(case)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            CaseSpec::Hyperelliptic { g } | CaseSpec::NonHyperelliptic { g } if *g < 2 => {
                Err(Error::InvalidParameter(format!("genus must be at least 2, got {g}")))
            }
            _ => Ok(()),
        }
    }

    pub fn genus(&self) -> Option<u32> {
        match self {
            CaseSpec::Hyperelliptic { g } | CaseSpec::NonHyperelliptic { g } => Some(*g),
            CaseSpec::CubicThreefold => None,
        }
    }

    pub fn theta_dim(&self) -> u32 {
        match self {
            CaseSpec::Hyperelliptic { g } | CaseSpec::NonHyperelliptic { g } => g - 1,
            CaseSpec::CubicThreefold => 4,
        }
    }

    /// Root system of the Tannakian group of the generating curve or
    /// surface.
    pub fn root_system_kind(&self) -> RootSystemKind {
        match self {
            CaseSpec::Hyperelliptic { g } => RootSystemKind::SpC(g - 1),
            CaseSpec::NonHyperelliptic { g } => RootSystemKind::SlA(g - 1),
            CaseSpec::CubicThreefold => RootSystemKind::E6,
        }
    }

    fn tag(&self) -> &'static str {
        match self {
            CaseSpec::Hyperelliptic { .. } => "hyperelliptic",
            CaseSpec::NonHyperelliptic { .. } => "nonhyperelliptic",
            CaseSpec::CubicThreefold => "cubic_threefold",
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({"kind": self.tag(), "theta_dim": self.theta_dim()});
        if let Some(g) = self.genus() {
            v["g"] = json!(g);
        }
        v
    }

    fn check_system(&self, rs: &RootSystem) -> Result<()> {
        if rs.kind() != self.root_system_kind() {
            return Err(Error::InvalidParameter(format!(
                "case {self} works over {}, got {}",
                self.root_system_kind(),
                rs.kind()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for CaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.genus() {
            Some(g) => write!(f, "{} g={g}", self.tag()),
            None => write!(f, "{}", self.tag()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SupportShape {
    Point,
    /// `W_d`.
    Wd(u32),
    /// `W_plus - W_minus`; `plus = 0` stands for `-W_minus`.
    Diff { plus: u32, minus: u32 },
    /// The Fano surface `S` (`+`) or `-S` (`-`).
    Fano(bool),
    Theta,
    /// Image of `C^n → A` weighted by the entries of `μ`.
    GeneralW(Vec<i64>),
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportExpr {
    pub shape: SupportShape,
    pub dim: Option<u32>,
    pub up_to_translation: bool,
}

impl SupportExpr {
    fn new(shape: SupportShape, dim: Option<u32>) -> Self {
        SupportExpr {
            shape,
            dim,
            up_to_translation: false,
        }
    }

    pub fn point() -> Self {
        Self::new(SupportShape::Point, Some(0))
    }

    pub fn wd(d: u32) -> Self {
        if d == 0 {
            Self::point()
        } else {
            Self::new(SupportShape::Wd(d), Some(d))
        }
    }

    /// `W_a - W_b`, normalized: `W_a - W_0 = W_a`.
    pub fn diff(a: u32, b: u32) -> Self {
        if b == 0 {
            Self::wd(a)
        } else {
            Self::new(SupportShape::Diff { plus: a, minus: b }, Some(a + b))
        }
    }

    pub fn fano(positive: bool) -> Self {
        Self::new(SupportShape::Fano(positive), Some(2))
    }

    pub fn theta(theta_dim: u32) -> Self {
        Self::new(SupportShape::Theta, Some(theta_dim))
    }

    pub fn unknown() -> Self {
        Self::new(SupportShape::Unknown, None)
    }

    pub fn translated(mut self) -> Self {
        self.up_to_translation = true;
        self
    }

    /// Whether the expression names a geometrically nondegenerate
    /// subvariety by construction.
    pub fn is_nondegenerate(&self) -> bool {
        matches!(self.shape, SupportShape::Wd(_) | SupportShape::Diff { .. } | SupportShape::Fano(_))
    }
}

impl fmt::Display for SupportExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.shape {
            SupportShape::Point => write!(f, "pt"),
            SupportShape::Wd(d) => write!(f, "W_{d}"),
            SupportShape::Diff { plus: 0, minus } => write!(f, "-W_{minus}"),
            SupportShape::Diff { plus, minus } => write!(f, "W_{plus} - W_{minus}"),
            SupportShape::Fano(true) => write!(f, "S"),
            SupportShape::Fano(false) => write!(f, "-S"),
            SupportShape::Theta => write!(f, "Theta"),
            SupportShape::GeneralW(mu) => {
                let parts: Vec<String> = mu.iter().map(|x| x.to_string()).collect();
                write!(f, "W({})", parts.join(","))
            }
            SupportShape::Unknown => write!(f, "?"),
        }
    }
}

fn is_zero_one(v: &[i64]) -> bool {
    v.iter().all(|&x| x == 0 || x == 1)
}

/// The support of the component attached to the Weyl orbit of `μ`, where
/// it is known.
pub fn support_of_orbit(case: &CaseSpec, rs: &RootSystem, mu: &DominantWeight) -> Result<SupportExpr> {
    case.check_system(rs)?;
    require_dominant(rs, mu)?;
    let expr = match case {
        CaseSpec::Hyperelliptic { .. } => {
            let (_, l) = degree_length_hyp(mu);
            if is_zero_one(mu.coords()) {
                SupportExpr::wd(l as u32)
            } else {
                SupportExpr::new(SupportShape::GeneralW(mu.coords().to_vec()), Some(l as u32))
            }
        }
        CaseSpec::NonHyperelliptic { g } => {
            let s = split_sl(rs, mu)?;
            let l = s.length() as u32;
            if l >= *g {
                SupportExpr::unknown()
            } else if is_zero_one(&s.plus) && is_zero_one(&s.minus) {
                SupportExpr::diff(s.plus_length() as u32, s.minus_length() as u32)
            } else {
                SupportExpr::new(SupportShape::GeneralW(mu.coords().to_vec()), Some(l))
            }
        }
        CaseSpec::CubicThreefold => match rs.dynkin_labels(mu).as_slice() {
            [0, 0, 0, 0, 0, 0] => SupportExpr::point(),
            [1, 0, 0, 0, 0, 0] => SupportExpr::fano(true),
            [0, 0, 0, 0, 0, 1] => SupportExpr::fano(false),
            [0, 1, 0, 0, 0, 0] => SupportExpr::theta(case.theta_dim()),
            _ => SupportExpr::unknown(),
        },
    };
    Ok(expr)
}

/// Dimension of the support of the sheaf of highest weight `λ` on a
/// hyperelliptic Jacobian of genus `g`, computed as the largest length of a
/// dominant `μ ⪯ λ` and certified against `min{d(λ), g-1}`.
pub fn support_dim_hyp(g: u32, lambda: &DominantWeight) -> Result<u32> {
    let rs = RootSystem::build(CaseSpec::Hyperelliptic { g }.root_system_kind())?;
    let trace = reduce_hyp(&rs, lambda)?;
    trace.validate(&rs)?;
    let (d, _) = degree_length_hyp(lambda);
    let (_, l) = degree_length_hyp(&trace.result);
    let expect = (d as u32).min(g - 1);
    if l as u32 != expect {
        return Err(Error::Certification(format!(
            "maximal length below {lambda} is {l}, expected min(d, g-1) = {expect}"
        )));
    }
    Ok(l as u32)
}

#[derive(Debug, Clone)]
pub struct NonHypBound {
    /// `min{d(λ), g-2}`.
    pub bound: u32,
    pub witness: ReductionTrace,
    /// Set when `d(λ) < g`, where the support is `W_{d⁺} - W_{d⁻}`.
    pub exact_support: Option<SupportExpr>,
}

/// Lower bound `min{d(λ), g-2}` for the support dimension on a
/// nonhyperelliptic Jacobian, witnessed by a dominant `μ ⪯ λ` whose length
/// reaches the bound while staying below `g`.
pub fn support_dim_nonhyp_bound(g: u32, lambda: &DominantWeight) -> Result<NonHypBound> {
    let case = CaseSpec::NonHyperelliptic { g };
    case.validate()?;
    let rs = RootSystem::build(case.root_system_kind())?;
    let split = split_sl(&rs, lambda)?;
    let d = split.degree() as u32;
    let trace = reduce_nonhyp(&rs, lambda)?;
    trace.validate(&rs)?;
    let bound = d.min(g - 2);
    let l = split_sl(&rs, &trace.result)?.length() as u32;
    if l < bound || l >= g {
        return Err(Error::Certification(format!(
            "witness {} has length {l}, outside [{bound}, {g})",
            trace.result
        )));
    }
    let exact_support = (d < g).then(|| SupportExpr::diff(split.plus_degree() as u32, split.minus_degree() as u32));
    Ok(NonHypBound {
        bound,
        witness: trace,
        exact_support,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationPair {
    pub x: SupportExpr,
    pub y: SupportExpr,
    pub provenance: String,
}

impl ClassificationPair {
    pub fn dims(&self) -> (u32, u32) {
        (self.x.dim.unwrap_or(0), self.y.dim.unwrap_or(0))
    }

    pub fn up_to_translation(&self) -> bool {
        self.x.up_to_translation || self.y.up_to_translation
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcludedCandidate {
    pub dims: (u32, u32),
    pub candidate: Option<(String, String)>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub case: CaseSpec,
    pub pairs: Vec<ClassificationPair>,
    pub excluded: Vec<ExcludedCandidate>,
}

impl ClassificationReport {
    pub fn to_json(&self) -> Value {
        let pairs: Vec<Value> = self
            .pairs
            .iter()
            .map(|p| {
                let (a, b) = p.dims();
                json!({
                    "x": p.x.to_string(),
                    "y": p.y.to_string(),
                    "dims": [a, b],
                    "up_to_translation": p.up_to_translation(),
                    "provenance": p.provenance,
                })
            })
            .collect();
        let excluded: Vec<Value> = self
            .excluded
            .iter()
            .map(|e| {
                let mut v = json!({"dims": [e.dims.0, e.dims.1], "reason": e.reason});
                if let Some((x, y)) = &e.candidate {
                    v["x"] = json!(x);
                    v["y"] = json!(y);
                }
                v
            })
            .collect();
        json!({"case": self.case.to_json(), "pairs": pairs, "excluded": excluded})
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (theta divisor of dimension {})", self.case, self.case.theta_dim())?;
        for p in &self.pairs {
            let t = if p.up_to_translation() { "  up to translation" } else { "" };
            writeln!(f, "  Theta = {} + {}{t}", p.x, p.y)?;
        }
        for e in &self.excluded {
            match &e.candidate {
                Some((x, y)) => writeln!(f, "  excluded {} + {}: {}", x, y, e.reason)?,
                None => writeln!(f, "  excluded dims ({}, {}): {}", e.dims.0, e.dims.1, e.reason)?,
            }
        }
        Ok(())
    }
}

const PROV_HYP: &str = "support dimension min(d, g-1) of hyperelliptic Brill-Noether sheaves; \
                        small summands have support W_d";
const PROV_NONHYP: &str = "support dimension >= min(d, g-2) on nonhyperelliptic Jacobians; \
                           supports W_a - W_b filtered by Martens' theorem";
const PROV_CURVE: &str = "curve summand: cited external classification of curve summands of theta divisors";
const PROV_E6: &str = "every nonzero E6 weight dominates w1, w2 or w6; \
                       opposite signs since w2 occurs in V_w1 (x) V_w6";

/// Summands `Θ = X + Y` of positive dimension, up to translation.
pub fn classify_summands(case: &CaseSpec) -> Result<ClassificationReport> {
    case.validate()?;
    let rs = RootSystem::build(case.root_system_kind())?;
    let td = case.theta_dim();
    let mut pairs = Vec::new();
    let mut excluded = Vec::new();
    match case {
        CaseSpec::Hyperelliptic { g } => {
            for d in 1..td {
                let e = td - d;
                // the summand of dimension d comes from a weight of degree d,
                // whose minimal weight (1^d) carries the support W_d
                let x = support_of_orbit(case, &rs, rs.fundamental_weight(d as usize)?)?;
                let y = support_of_orbit(case, &rs, rs.fundamental_weight(e as usize)?)?;
                debug_assert_eq!(support_dim_hyp(*g, rs.fundamental_weight(d as usize)?)?, d);
                pairs.push(ClassificationPair {
                    x: x.translated(),
                    y: y.translated(),
                    provenance: PROV_HYP.into(),
                });
            }
        }
        CaseSpec::NonHyperelliptic { g } => {
            let g = *g;
            for d in 1..td {
                let e = td - d;
                if d == 1 || e == 1 {
                    for sign in [true, false] {
                        let (x, y) = if sign {
                            (SupportExpr::diff(d, 0), SupportExpr::diff(e, 0))
                        } else {
                            (SupportExpr::diff(0, d), SupportExpr::diff(0, e))
                        };
                        pairs.push(ClassificationPair {
                            x: x.translated(),
                            y: y.translated(),
                            provenance: PROV_CURVE.into(),
                        });
                    }
                    continue;
                }
                let mut kept = Vec::new();
                for a in 0..=d {
                    for b in 0..=e {
                        let x = SupportExpr::diff(a, d - a);
                        let y = SupportExpr::diff(b, e - b);
                        let c = a + b;
                        if martens_admits(&rs, g, c)? {
                            kept.push((c, x, y));
                        } else {
                            excluded.push(ExcludedCandidate {
                                dims: (d, e),
                                candidate: Some((x.to_string(), y.to_string())),
                                reason: format!(
                                    "sum is W_{c} - W_{} up to translation, which is not W_{} since 0 < {c} < {}",
                                    g - 1 - c,
                                    g - 1,
                                    g - 1
                                ),
                            });
                        }
                    }
                }
                // positive summands first
                kept.sort_by_key(|(c, _, _)| std::cmp::Reverse(*c));
                for (_, x, y) in kept {
                    pairs.push(ClassificationPair {
                        x: x.translated(),
                        y: y.translated(),
                        provenance: PROV_NONHYP.into(),
                    });
                }
            }
        }
        CaseSpec::CubicThreefold => {
            let min_dim = e6_min_support_dim(&rs)?;
            for d in 1..td {
                let e = td - d;
                if d < min_dim || e < min_dim {
                    excluded.push(ExcludedCandidate {
                        dims: (d, e),
                        candidate: None,
                        reason: format!("every summand has dimension at least {min_dim}"),
                    });
                    continue;
                }
                // dims (2, 2): equality forces both summands to be ±S
                for s1 in [true, false] {
                    for s2 in [true, false] {
                        let x = SupportExpr::fano(s1);
                        let y = SupportExpr::fano(s2);
                        if e6_signs_admitted(&rs, s1, s2)? {
                            pairs.push(ClassificationPair {
                                x: x.translated(),
                                y: y.translated(),
                                provenance: PROV_E6.into(),
                            });
                        } else {
                            excluded.push(ExcludedCandidate {
                                dims: (d, e),
                                candidate: Some((x.to_string(), y.to_string())),
                                reason: "the adjoint weight w2 does not occur in the tensor product".into(),
                            });
                        }
                    }
                }
            }
        }
    }
    for p in &pairs {
        let (a, b) = p.dims();
        if a + b != td || a == 0 || b == 0 || !p.x.is_nondegenerate() || !p.y.is_nondegenerate() {
            return Err(Error::Certification(format!("inconsistent pair {} + {}", p.x, p.y)));
        }
    }
    Ok(ClassificationReport {
        case: *case,
        pairs,
        excluded,
    })
}

/// `W_c - W_{g-1-c} + z = W_{g-1}` needs `c ∈ {0, g-1}`: on the weight
/// side `ϖ_{g-1}` and `ϖ_c + ϖ_{g-1+c}` must lie in one Weyl orbit.
fn martens_admits(rs: &RootSystem, g: u32, c: u32) -> Result<bool> {
    let theta = rs.fundamental_weight((g - 1) as usize)?;
    // ϖ_0 and ϖ_{2n} are both the trivial weight
    let mut labels = vec![0i64; rs.rank()];
    for idx in [c as usize, (g - 1 + c) as usize] {
        if idx > 0 && idx <= rs.rank() {
            labels[idx - 1] += 1;
        }
    }
    let w = rs.weight_from_dynkin(&labels)?;
    let same_orbit = &dominant_projection(rs, &w)?.0 == theta;
    let admitted = c == 0 || c == g - 1;
    if same_orbit != admitted {
        return Err(Error::Certification(format!("orbit test disagrees with Martens' filter at c = {c}")));
    }
    Ok(admitted)
}

/// Minimal support dimension over `ϖ1, ϖ2, ϖ6`, after checking that the
/// small weights reduce to one of them.
fn e6_min_support_dim(rs: &RootSystem) -> Result<u32> {
    let case = CaseSpec::CubicThreefold;
    let mut dims = Vec::new();
    for i in [1usize, 2, 6] {
        let w = rs.fundamental_weight(i)?;
        dims.push(support_of_orbit(&case, rs, w)?.dim.expect("known support"));
    }
    for i in 1..=6 {
        let t = reduce_e6(rs, rs.fundamental_weight(i)?)?;
        t.validate(rs)?;
    }
    Ok(*dims.iter().min().unwrap())
}

/// Signs `±S + ±S` can sum to the theta divisor only if the adjoint weight
/// `ϖ2` occurs in the product of the corresponding 27-dimensional
/// representations.
fn e6_signs_admitted(rs: &RootSystem, s1: bool, s2: bool) -> Result<bool> {
    let omega = |s: bool| rs.fundamental_weight(if s { 1 } else { 6 });
    let t = tensor_decompose(rs, omega(s1)?, omega(s2)?)?;
    Ok(t.coeff(rs.fundamental_weight(2)?) != 0.into())
}
