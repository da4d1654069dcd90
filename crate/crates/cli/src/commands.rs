use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use thetasum_core::brillnoether::{
    classify_summands, support_dim_hyp, support_dim_nonhyp_bound, support_of_orbit,
};
use thetasum_core::charring::{
    decompose_into_irreducibles, freudenthal_character, tensor_decompose, weyl_character_direct, weyl_dimension,
};
use thetasum_core::dominance::{dominance_compare, reduce_e6, reduce_hyp, reduce_nonhyp};
use thetasum_core::lambdaring::{adams, lambda_power_effective, lambda_power_virtual};
use thetasum_core::weyl::{dominant_projection, orbit};
use thetasum_core::{
    Basis, CaseSpec, CharElem, IrrDecomposition, Limits, ReductionTrace, RootSystem, RootSystemKind, SupportExpr,
    Weight,
};

use crate::{suites, CaseArgs, CharInput, CharMethod, Cli, Command, Failure};

pub(crate) type Output = Result<(Value, String), Failure>;

pub(crate) fn run(cli: &Cli) -> Output {
    match &cli.command {
        Command::Orbit(w) => {
            let rs = system(cli, None)?;
            let wt = parse_weight(cli, &rs, &w.weight)?;
            cmd_orbit(&rs, &wt)
        }
        Command::Dominance { weight, other } => {
            let rs = system(cli, None)?;
            let lambda = parse_weight(cli, &rs, &weight.weight)?;
            let mu = parse_weight(cli, &rs, other)?;
            let w = dominance_compare(&rs, &lambda, &mu)?;
            let text = match &w.root_coefficients {
                Some(c) => format!("{mu} <= {lambda}: lambda - mu has simple root coefficients {c:?}"),
                None => format!("{mu} is not below {lambda}"),
            };
            let payload = json!({
                "system": rs.kind().to_string(),
                "lambda": lambda.coords(),
                "mu": mu.coords(),
                "comparable": w.comparable,
                "root_coefficients": w.root_coefficients,
            });
            Ok((payload, text))
        }
        Command::Reduce { case, weight } => {
            let case = parse_case(case)?;
            let rs = system(cli, case)?;
            let lambda = parse_weight(cli, &rs, &weight.weight)?;
            let trace = match rs.kind() {
                RootSystemKind::SpC(_) => reduce_hyp(&rs, &lambda)?,
                RootSystemKind::SlA(_) => reduce_nonhyp(&rs, &lambda)?,
                RootSystemKind::E6 => reduce_e6(&rs, &lambda)?,
            };
            let mut payload = trace_json(&trace);
            payload["system"] = json!(rs.kind().to_string());
            if let Some(c) = case {
                payload["case"] = c.to_json();
            }
            Ok((payload, trace.to_string()))
        }
        Command::Char { weight, method } => {
            let rs = system(cli, None)?;
            let lambda = parse_weight(cli, &rs, &weight.weight)?;
            let ch = match method {
                CharMethod::Freudenthal => freudenthal_character(&rs, &lambda)?,
                CharMethod::Weyl => weyl_character_direct(&rs, &lambda)?,
            };
            let dim = ch.dimension(&rs);
            let payload = json!({
                "system": rs.kind().to_string(),
                "highest_weight": lambda.coords(),
                "character": ch.to_json(),
                "dimension": big(&dim),
            });
            Ok((payload, format!("{ch}\ndimension {dim}")))
        }
        Command::Dim(w) => {
            let rs = system(cli, None)?;
            let lambda = parse_weight(cli, &rs, &w.weight)?;
            if !thetasum_core::dominance::is_dominant(&rs, &lambda) {
                return Err(Failure::User(format!("weight {lambda} is not dominant")));
            }
            let dim = weyl_dimension(&rs, &lambda);
            let payload = json!({
                "system": rs.kind().to_string(),
                "highest_weight": lambda.coords(),
                "dimension": big(&dim),
            });
            Ok((payload, dim.to_string()))
        }
        Command::Tensor { weight, other } => {
            let rs = system(cli, None)?;
            let a = parse_weight(cli, &rs, &weight.weight)?;
            let b = parse_weight(cli, &rs, other)?;
            let irr = tensor_decompose(&rs, &a, &b)?;
            let payload = json!({
                "system": rs.kind().to_string(),
                "factors": [a.coords(), b.coords()],
                "decomposition": irr.to_json(),
                "dimension": big(&irr.dimension(&rs)),
            });
            Ok((payload, irr.to_string()))
        }
        Command::Lambda { n, input, via_adams } => {
            let rs = system(cli, None)?;
            let x = char_input(cli, &rs, input)?;
            let y = if *via_adams {
                lambda_power_virtual(&rs, *n, &x)?
            } else {
                lambda_power_effective(&rs, *n, &x)?
            };
            let irr = decompose_into_irreducibles(&rs, &y)?;
            Ok(char_result(&rs, "lambda", *n, &x, &y, &irr))
        }
        Command::Adams { n, input } => {
            let rs = system(cli, None)?;
            let x = char_input(cli, &rs, input)?;
            let y = adams(&rs, *n, &x)?;
            let irr = decompose_into_irreducibles(&rs, &y)?;
            Ok(char_result(&rs, "adams", *n, &x, &y, &irr))
        }
        Command::Support { case, weight } => {
            let case = parse_case(case)?.ok_or_else(|| Failure::User("support needs --case".into()))?;
            let rs = system(cli, Some(case))?;
            let lambda = parse_weight(cli, &rs, &weight.weight)?;
            cmd_support(&case, &rs, &lambda)
        }
        Command::Classify { case } => {
            let case = parse_case(case)?.ok_or_else(|| Failure::User("classify needs --case".into()))?;
            if let Some(s) = &cli.system {
                let kind: RootSystemKind = s.parse()?;
                check_case_system(&case, kind)?;
            }
            let report = classify_summands(&case)?;
            Ok((report.to_json(), report.to_string().trim_end().to_string()))
        }
        Command::Verify { suite, bounds } => {
            let mut bounds = bounds.clone();
            bounds.system = cli.system.as_deref().map(str::parse).transpose()?;
            bounds.cap = cli.cap;
            suites::run(suite, &bounds)
        }
    }
}

fn cmd_orbit(rs: &RootSystem, w: &Weight) -> Output {
    let (dom, _) = dominant_projection(rs, w)?;
    let o = orbit(rs, &dom)?;
    let mut elems: Vec<&Weight> = o.elements().iter().collect();
    elems.sort();
    let mut text = format!("orbit of {dom}: {} elements", o.size());
    for e in &elems {
        text.push_str(&format!("\n  {e}"));
    }
    let payload = json!({
        "system": rs.kind().to_string(),
        "weight": w.coords(),
        "dominant": dom.coords(),
        "size": o.size(),
        "elements": elems.iter().map(|e| e.coords()).collect::<Vec<_>>(),
    });
    Ok((payload, text))
}

fn cmd_support(case: &CaseSpec, rs: &RootSystem, lambda: &Weight) -> Output {
    let own = support_of_orbit(case, rs, lambda)?;
    let mut payload = json!({
        "case": case.to_json(),
        "weight": lambda.coords(),
        "orbit_support": support_json(&own),
    });
    let mut text = format!("orbit of {lambda}: support {own}");
    match case {
        CaseSpec::Hyperelliptic { g } => {
            let d = support_dim_hyp(*g, lambda)?;
            payload["support_dim"] = json!(d);
            text.push_str(&format!("\nsupport dimension {d}"));
        }
        CaseSpec::NonHyperelliptic { g } => {
            let b = support_dim_nonhyp_bound(*g, lambda)?;
            payload["support_dim_lower_bound"] = json!(b.bound);
            payload["witness"] = trace_json(&b.witness);
            payload["exact_support"] = match &b.exact_support {
                Some(s) => support_json(s),
                None => Value::Null,
            };
            text.push_str(&format!("\nsupport dimension >= {} (witness {})", b.bound, b.witness.result));
            if let Some(s) = &b.exact_support {
                text.push_str(&format!("\nsupport {s}"));
            }
        }
        CaseSpec::CubicThreefold => {}
    }
    Ok((payload, text))
}

fn char_result(rs: &RootSystem, op: &str, n: u32, x: &CharElem, y: &CharElem, irr: &IrrDecomposition) -> (Value, String) {
    let payload = json!({
        "system": rs.kind().to_string(),
        "operation": op,
        "n": n,
        "input": x.to_json(),
        "result": y.to_json(),
        "decomposition": irr.to_json(),
        "dimension": big(&y.dimension(rs)),
    });
    (payload, format!("{y}\n= {irr}"))
}

fn char_input(cli: &Cli, rs: &RootSystem, input: &CharInput) -> Result<CharElem, Failure> {
    let w = parse_weight(cli, rs, &input.weight.weight)?;
    Ok(if input.orbit {
        CharElem::orbit_sum(rs, &w)?
    } else {
        freudenthal_character(rs, &w)?
    })
}

fn support_json(s: &SupportExpr) -> Value {
    json!({
        "expr": s.to_string(),
        "dim": s.dim,
        "up_to_translation": s.up_to_translation,
    })
}

pub(crate) fn trace_json(t: &ReductionTrace) -> Value {
    let steps: Vec<Value> = t
        .steps
        .iter()
        .map(|s| json!({"subtracted": s.subtracted.coords(), "rule": s.rule}))
        .collect();
    json!({"start": t.start.coords(), "steps": steps, "result": t.result.coords()})
}

/// Integers that fit in an `i64` become JSON numbers, larger ones strings.
pub(crate) fn big(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

fn parse_case(args: &CaseArgs) -> Result<Option<CaseSpec>, Failure> {
    match (&args.case, args.genus) {
        (Some(kind), g) => Ok(Some(CaseSpec::new(kind, g)?)),
        (None, Some(_)) => Err(Failure::User("--genus needs --case".into())),
        (None, None) => Ok(None),
    }
}

fn check_case_system(case: &CaseSpec, kind: RootSystemKind) -> Result<(), Failure> {
    if kind != case.root_system_kind() {
        return Err(Failure::User(format!(
            "system mismatch: case {case} works over {}, but --system is {kind}",
            case.root_system_kind()
        )));
    }
    Ok(())
}

/// The root system named by `--system` or implied by the case, with the
/// `--cap` limits applied.
fn system(cli: &Cli, case: Option<CaseSpec>) -> Result<RootSystem, Failure> {
    let named: Option<RootSystemKind> = cli.system.as_deref().map(str::parse).transpose()?;
    let kind = match (named, case) {
        (Some(k), Some(c)) => {
            check_case_system(&c, k)?;
            k
        }
        (Some(k), None) => k,
        (None, Some(c)) => c.root_system_kind(),
        (None, None) => return Err(Failure::User("missing --system".into())),
    };
    let rs = RootSystem::build(kind)?;
    Ok(match cli.cap {
        Some(cap) => rs.with_limits(Limits::uniform(cap)),
        None => rs,
    })
}

fn parse_weight(cli: &Cli, rs: &RootSystem, raw: &str) -> Result<Weight, Failure> {
    let kind = rs.kind();
    let basis = match &cli.basis {
        Some(b) => b.parse::<Basis>().map_err(|e| Failure::User(format!("invalid --basis: {e}")))?,
        None if kind == RootSystemKind::E6 => Basis::Dynkin,
        None => Basis::Epsilon,
    };
    if basis == Basis::Epsilon && kind == RootSystemKind::E6 {
        return Err(Failure::User(
            "basis/system mismatch: epsilon coordinates are not defined for E6, use --basis dynkin".into(),
        ));
    }
    let coords = parse_ints(raw)?;
    let expected = match basis {
        Basis::Epsilon => kind.ambient_dim(),
        Basis::Dynkin | Basis::RootBasis => kind.rank(),
    };
    if coords.len() != expected {
        return Err(Failure::User(format!(
            "malformed weight vector {raw:?}: {kind} in {} coordinates takes {expected} entries, got {}",
            basis.name(),
            coords.len()
        )));
    }
    let w = match basis {
        Basis::Epsilon => rs.weight(coords),
        Basis::Dynkin => rs.weight_from_dynkin(&coords),
        Basis::RootBasis => rs.weight_from_root_coefficients(&coords),
    };
    w.map_err(|e| Failure::User(format!("malformed weight vector {raw:?}: {e}")))
}

fn parse_ints(raw: &str) -> Result<Vec<i64>, Failure> {
    raw.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<i64>()
                .map_err(|_| Failure::User(format!("malformed weight vector {raw:?}: {t:?} is not an integer")))
        })
        .collect()
}
