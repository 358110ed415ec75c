use std::sync::Arc;

use serde_json::{json, Map, Value};
use wbr_core::center::{
    compute_center, evaluation_matrix, idempotents, select_spanning_polys, verify_idempotents,
    CenterError,
};
use wbr_core::diagrams::{enumerate, DiagramError, Wall, DEFAULT_SIZE_CAP};
use wbr_core::qwbr::{
    associativity_failures, classical_limit_check, q_center_dimension, q_jm_family,
    q_supersym_central_check, seed_modes, verify_q_relations_with, CompletionConfig, QError,
    RewriteSystem, MAX_STRANDS,
};
use wbr_core::scalars::{
    parse_rational, DeltaField, DeltaRatFun, QRatFun, QuantumField, Rational, ScalarMode,
};
use wbr_core::wbr_algebra::{verify_relation_suite, AlgebraError, WalledBrauer};
use wbr_core::weights::{
    blocks, blocks_to_json, dot_variant, enumerate_weights, is_semisimple, DeltaSpec,
};

use crate::{CliError, Flags, ModeFlag};

/// A finished report and the names of the checks that failed.
pub struct Report {
    pub value: Value,
    pub failures: Vec<String>,
}

const ASSOCIATIVITY_TRIALS: usize = 1000;

fn size_cap(flags: &Flags) -> Result<usize, CliError> {
    if let Some(cap) = flags.size_cap {
        return Ok(cap);
    }
    match std::env::var("WBR_SIZE_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("WBR_SIZE_CAP is not a number: {v}"))),
        Err(_) => Ok(DEFAULT_SIZE_CAP),
    }
}

fn rational_flag(name: &str, text: &str) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|e| CliError::Usage(format!("--{name}: {e}")))
}

fn classical_mode(flags: &Flags) -> Result<ScalarMode, CliError> {
    let delta = flags.delta.as_deref();
    match (flags.mode, delta) {
        (Some(ModeFlag::GenericQ | ModeFlag::RationalQr), _) => Err(CliError::Usage(
            "quantized modes are only available for qverify".into(),
        )),
        (Some(ModeFlag::GenericDelta), None | Some("generic"))
        | (None | Some(ModeFlag::Rational), Some("generic")) => {
            if flags.mode == Some(ModeFlag::Rational) {
                return Err(CliError::Usage(
                    "--mode rational needs a rational --delta".into(),
                ));
            }
            Ok(ScalarMode::GenericDelta)
        }
        (Some(ModeFlag::GenericDelta), Some(d)) => Err(CliError::Usage(format!(
            "--mode generic-delta conflicts with --delta {d}"
        ))),
        (_, Some(d)) => Ok(ScalarMode::RationalAt(rational_flag("delta", d)?)),
        (_, None) => Err(CliError::Usage(
            "--delta is required (an integer, p/q, or generic)".into(),
        )),
    }
}

fn computation(e: impl std::fmt::Display) -> CliError {
    CliError::Computation(e.to_string())
}

fn from_diagram(e: DiagramError) -> CliError {
    match e {
        DiagramError::SizeLimitExceeded { .. } => CliError::Usage(e.to_string()),
        other => computation(other),
    }
}

fn from_algebra(e: AlgebraError) -> CliError {
    match e {
        AlgebraError::Diagram(d) => from_diagram(d),
        other => computation(other),
    }
}

fn from_center(e: CenterError) -> CliError {
    match e {
        CenterError::Algebra(a) => from_algebra(a),
        other => computation(other),
    }
}

fn from_q(e: QError) -> CliError {
    match e {
        QError::SizeLimitExceeded { .. } => CliError::Usage(e.to_string()),
        QError::Algebra(a) => from_algebra(a),
        other => computation(other),
    }
}

pub fn run(name: &str, flags: &Flags) -> Result<Report, CliError> {
    let wall = Wall::new(flags.r, flags.s);
    let cap = size_cap(flags)?;
    wall.check_cap(cap).map_err(from_diagram)?;
    let (mode, body, failures) = match name {
        "dims" => dims(wall, flags, cap)?,
        "blocks" => {
            let mode = classical_mode(flags)?;
            let spec = DeltaSpec::from_mode(&mode);
            let body = json!({
                "semisimple": is_semisimple(wall, &spec),
                "blocks": blocks_to_json(&blocks(wall, &spec)),
            });
            (mode.to_json(), body, Vec::new())
        }
        "qverify" => qverify(wall, flags)?,
        _ => {
            let mode = classical_mode(flags)?;
            let (body, failures) = match &mode {
                ScalarMode::GenericDelta => classical::<DeltaRatFun>(name, wall, &mode, cap)?,
                _ => classical::<Rational>(name, wall, &mode, cap)?,
            };
            (mode.to_json(), body, failures)
        }
    };
    let mut value = match body {
        Value::Object(map) => map,
        other => Map::from_iter([("result".to_string(), other)]),
    };
    value.insert("schema".into(), json!("wbr-report/1"));
    value.insert("command".into(), json!(name));
    value.insert("wall".into(), json!({"r": wall.r, "s": wall.s}));
    value.insert("mode".into(), mode);
    value.insert("passed".into(), json!(failures.is_empty()));
    value.insert("failures".into(), json!(failures));
    Ok(Report {
        value: Value::Object(value),
        failures,
    })
}

fn dims(wall: Wall, flags: &Flags, cap: usize) -> Result<(Value, Value, Vec<String>), CliError> {
    let diagrams = enumerate(wall, cap).map_err(from_diagram)?.len();
    let expected = wall.dimension();
    let mut body = json!({
        "diagrams": diagrams,
        "expected": expected as u64,
        "weights": enumerate_weights(wall).len(),
    });
    let mut mode = Value::Null;
    if flags.delta.is_some() || flags.mode.is_some() {
        let m = classical_mode(flags)?;
        body["dot_weights"] = json!(dot_variant(wall, &DeltaSpec::from_mode(&m)).len());
        mode = m.to_json();
    }
    let failures = if diagrams as u128 == expected {
        Vec::new()
    } else {
        vec![format!("{diagrams} diagrams, expected {expected}")]
    };
    Ok((mode, body, failures))
}

fn classical<F: DeltaField>(
    name: &str,
    wall: Wall,
    mode: &ScalarMode,
    cap: usize,
) -> Result<(Value, Vec<String>), CliError> {
    let alg = WalledBrauer::<F>::new(wall, mode.clone()).map_err(from_algebra)?;
    let spec = DeltaSpec::from_mode(mode);
    let mut failures = Vec::new();
    let body = match name {
        "center" => {
            let z = compute_center(&alg, cap).map_err(from_center)?;
            let sel = select_spanning_polys::<F>(wall, mode).map_err(from_center)?;
            let mut body = z.to_json();
            body["supersymmetric"] = json!({
                "polys": sel.polys.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "rank": sel.rank,
                "weights": sel.weights,
                "distinct_characters": sel.distinct,
                "warning": sel.warning(),
            });
            body
        }
        "characters" => {
            let sel = select_spanning_polys::<F>(wall, mode).map_err(from_center)?;
            let weights = dot_variant(wall, &spec);
            let m = evaluation_matrix(&sel.polys, &weights, alg.delta());
            let rows: Vec<Vec<String>> = (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect())
                .collect();
            json!({
                "weights": weights.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "polys": sel.polys.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "matrix": rows,
                "rank": sel.rank,
                "distinct_characters": sel.distinct,
                "warning": sel.warning(),
            })
        }
        "idempotents" => {
            let sys = idempotents(&alg).map_err(from_center)?;
            let report = verify_idempotents(&sys).map_err(from_center)?;
            if !report.all_passed() {
                failures.push(format!(
                    "idempotents: {}",
                    report.to_json()["eigen_relations"]
                ));
            }
            json!({
                "paths": sys.paths.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "report": report.to_json(),
            })
        }
        "verify" => {
            let suite = verify_relation_suite(&alg.jm_family()).map_err(from_algebra)?;
            for c in suite.failures() {
                failures.push(format!("{} {:?}", c.relation, c.indices));
            }
            let idem = if is_semisimple(wall, &spec) {
                let sys = idempotents(&alg).map_err(from_center)?;
                let report = verify_idempotents(&sys).map_err(from_center)?;
                if !report.all_passed() {
                    failures.push("idempotents".to_string());
                }
                report.to_json()
            } else {
                json!({"skipped": "not semisimple"})
            };
            json!({"relations": suite.to_json(), "idempotents": idem})
        }
        other => return Err(CliError::Usage(format!("unknown command {other}"))),
    };
    Ok((body, failures))
}

/// A JSON object built up key by key.
type Section = Map<String, Value>;

/// One completed system with every quantized check applied.
fn qsystem<F: QuantumField>(
    wall: Wall,
    mode: &ScalarMode,
    seed: u64,
    failures: &mut Vec<String>,
) -> Result<(Arc<RewriteSystem<F>>, Section), CliError> {
    let sys =
        Arc::new(RewriteSystem::<F>::new(wall, mode, CompletionConfig::default()).map_err(from_q)?);
    let label = mode.to_string();
    let family = q_jm_family(&sys).map_err(from_q)?;
    let relations = verify_q_relations_with(&sys, &family).map_err(from_q)?;
    for c in relations.failures() {
        failures.push(format!("{label}: {} {:?}", c.relation, c.indices));
    }
    let centrality = q_supersym_central_check(&sys, &family, 3).map_err(from_q)?;
    for c in centrality.iter().filter(|c| !c.central) {
        failures.push(format!(
            "{label}: power sum of degree {} is not central",
            c.m
        ));
    }
    let assoc = associativity_failures(&sys, ASSOCIATIVITY_TRIALS, seed).map_err(from_q)?;
    if assoc > 0 {
        failures.push(format!("{label}: {assoc} non-associative triples"));
    }
    let mut out = Map::new();
    out.insert("mode".into(), mode.to_json());
    out.insert("dimension".into(), json!(sys.dimension()));
    out.insert("rules".into(), json!(sys.rule_count()));
    out.insert("relations".into(), relations.to_json());
    out.insert("closed_form_agrees".into(), json!(true));
    out.insert(
        "centrality".into(),
        json!(centrality
            .iter()
            .map(|c| json!({"m": c.m, "central": c.central}))
            .collect::<Vec<_>>()),
    );
    out.insert(
        "associativity".into(),
        json!({"trials": ASSOCIATIVITY_TRIALS, "failures": assoc}),
    );
    if wall.n() <= 4 {
        out.insert(
            "center".into(),
            q_center_dimension(&sys).map_err(from_q)?.to_json(),
        );
    }
    Ok((sys, out))
}

fn qverify(wall: Wall, flags: &Flags) -> Result<(Value, Value, Vec<String>), CliError> {
    if wall.n() > MAX_STRANDS {
        return Err(CliError::Usage(format!(
            "qverify needs r+s <= {MAX_STRANDS}"
        )));
    }
    let mut failures = Vec::new();
    match flags.mode.unwrap_or(ModeFlag::GenericQ) {
        ModeFlag::GenericQ => {
            if flags.q.is_some() || flags.rho.is_some() {
                return Err(CliError::Usage(
                    "--q and --rho belong to --mode rational-qr".into(),
                ));
            }
            let mode = ScalarMode::GenericQ(flags.n.unwrap_or(5));
            let (sys, mut body) = qsystem::<QRatFun>(wall, &mode, flags.seed, &mut failures)?;
            let limit = classical_limit_check(&sys, wall.n() + 2).map_err(from_q)?;
            if let Err(e) = limit.ensure() {
                failures.push(e.to_string());
            }
            body.insert("classical_limit".into(), limit.to_json());
            Ok((mode.to_json(), Value::Object(body), failures))
        }
        ModeFlag::RationalQr => {
            let mut modes = Vec::new();
            match (&flags.q, &flags.rho) {
                (Some(q), Some(rho)) => {
                    let mode =
                        ScalarMode::rational_qr(rational_flag("q", q)?, rational_flag("rho", rho)?)
                            .map_err(|e| CliError::Usage(e.to_string()))?;
                    modes.push(mode);
                }
                (None, None) => {}
                _ => {
                    return Err(CliError::Usage(
                        "--q and --rho must be given together".into(),
                    ))
                }
            }
            // Identities at a specialization count only once they hold at
            // three or more independent points.
            modes.extend(seed_modes(flags.seed, 3));
            let mut points = Vec::new();
            let mut dimension = 0;
            for m in &modes {
                let (sys, body) = qsystem::<Rational>(wall, m, flags.seed, &mut failures)?;
                dimension = sys.dimension();
                points.push(Value::Object(body));
            }
            let mode = json!({"kind": "rational-qr", "points": modes.len()});
            Ok((
                mode,
                json!({"dimension": dimension, "points": points}),
                failures,
            ))
        }
        _ => Err(CliError::Usage(
            "qverify runs in --mode generic-q or rational-qr".into(),
        )),
    }
}
