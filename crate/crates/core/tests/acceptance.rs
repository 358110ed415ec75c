//! Acceptance criteria 1-12, one PASS/FAIL line each.

use std::collections::{BTreeMap, BTreeSet};
use std::error::Error;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use wbr_core::center::{
    center_basis_b22, central_character, compute_center, evaluation_matrix, expand_in_basis,
    gz_dimension, idempotents, select_spanning_polys, supersym_elements,
    symmetric_pair_centralizer_b22, verify_idempotents, SupersymPoly,
};
use wbr_core::diagrams::{enumerate, Wall, DEFAULT_SIZE_CAP};
use wbr_core::qwbr::{
    classical_limit_check, q_center_dimension, q_jm_family, q_supersym_central_check, seed_modes,
    verify_q_relations, CompletionConfig, RewriteSystem,
};
use wbr_core::scalars::{
    determinant, rat, DeltaField, DeltaRatFun, Field, Matrix, QRatFun, Rational, ScalarMode,
};
use wbr_core::wbr_algebra::{
    annihilator_check, elementary_supersym_jm, power_sum_jm, verify_relation_suite, WalledBrauer,
};
use wbr_core::weights::{
    all_paths, blocks, dot_variant, enumerate_weights, is_delta_balanced, is_semisimple, DeltaSpec,
    Partition, Weight,
};

type Outcome = Result<(bool, String), Box<dyn Error>>;

const SEMISIMPLE_INSTANCES: [(usize, usize, i64); 3] = [(1, 1, 3), (2, 1, 5), (2, 2, 6)];

fn rational(r: usize, s: usize, d: Rational) -> WalledBrauer<Rational> {
    WalledBrauer::new(Wall::new(r, s), ScalarMode::RationalAt(d)).unwrap()
}

fn integral(r: usize, s: usize, d: i64) -> WalledBrauer<Rational> {
    rational(r, s, rat(d, 1))
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn relation_suites() -> Outcome {
    let mut instances = 0;
    let mut passed = true;
    let mut run = |ok: bool, n: usize| {
        passed &= ok;
        instances += n;
    };
    for (r, s) in [(2, 1), (2, 2), (3, 2)] {
        let wall = Wall::new(r, s);
        let g = WalledBrauer::<DeltaRatFun>::new(wall, ScalarMode::GenericDelta)?;
        let report = verify_relation_suite(&g.jm_family())?;
        run(report.all_passed(), report.checks.len());
        for d in [rat(0, 1), rat(1, 1), rat(7, 3)] {
            let report = verify_relation_suite(&rational(r, s, d).jm_family())?;
            run(report.all_passed(), report.checks.len());
        }
    }
    Ok((passed, format!("{instances} instances")))
}

fn worked_center() -> Outcome {
    let alg = WalledBrauer::<DeltaRatFun>::new(Wall::new(2, 2), ScalarMode::GenericDelta)?;
    let d = alg.delta().clone();
    let poly = |cs: &[i64]| {
        cs.iter().rev().fold(DeltaRatFun::zero(), |acc, &c| {
            acc.mul(&d).add(&DeltaRatFun::from_int(c))
        })
    };
    let dim = compute_center(&alg, DEFAULT_SIZE_CAP)?.dimension();
    let family = alg.jm_family();
    let polys = [
        SupersymPoly::power_sum(0),
        SupersymPoly::power_sum(1),
        SupersymPoly::elementary(2),
        SupersymPoly::power_sum(2),
        SupersymPoly::elementary(3),
        SupersymPoly::power_sum(3),
    ];
    let elements = supersym_elements(&family, &polys)?;
    // The direct Newton-identity evaluation must agree with the polynomial one.
    let direct = elementary_supersym_jm(&family, 3)? == elements[4]
        && power_sum_jm(&family, 2)? == elements[3];
    // Coefficients as polynomials in delta, constant term first.
    let printed_b: [Vec<Vec<i64>>; 6] = [
        vec![vec![1], vec![], vec![], vec![], vec![], vec![]],
        vec![vec![0, 2], vec![-1], vec![], vec![], vec![], vec![]],
        vec![vec![1, 0, 3], vec![0, -2], vec![-1], vec![], vec![], vec![]],
        vec![
            vec![0, 0, -2],
            vec![0, 1],
            vec![1],
            vec![-1],
            vec![],
            vec![],
        ],
        vec![
            vec![0, 4, 0, 4],
            vec![-1, 0, -3],
            vec![0, -3],
            vec![],
            vec![1],
            vec![],
        ],
        vec![
            vec![0, 3, 0, 2],
            vec![-2, 0, -1],
            vec![0, -2],
            vec![0, 1],
            vec![1],
            vec![1],
        ],
    ];
    let printed_c: [Vec<Vec<i64>>; 5] = [
        vec![
            vec![0, 2],
            vec![1],
            vec![1],
            vec![-1],
            vec![],
            vec![],
            vec![],
            vec![],
            vec![],
            vec![],
        ],
        vec![
            vec![1, 0, 3],
            vec![0, 2],
            vec![0, 3],
            vec![0, -2],
            vec![1],
            vec![1],
            vec![],
            vec![-1],
            vec![],
            vec![],
        ],
        vec![
            vec![0, 0, -2],
            vec![],
            vec![0, -2],
            vec![0, 1],
            vec![],
            vec![],
            vec![-1],
            vec![1],
            vec![],
            vec![],
        ],
        vec![
            vec![0, 4, 0, 4],
            vec![1, 0, 3],
            vec![1, 0, 6],
            vec![-1, 0, -3],
            vec![0, 2],
            vec![0, 3],
            vec![],
            vec![0, -3],
            vec![1],
            vec![],
        ],
        vec![
            vec![0, 3, 0, 2],
            vec![1],
            vec![1, 0, 3],
            vec![-2, 0, -1],
            vec![],
            vec![],
            vec![0, 1],
            vec![0, -2],
            vec![1],
            vec![1],
        ],
    ];
    let basis = center_basis_b22(&alg)?;
    let centralizer = symmetric_pair_centralizer_b22(&alg)?;
    let names = ["p_0", "p_1", "e_2", "p_2", "e_3", "p_3"];
    let mut mismatches = Vec::new();
    let mut columns = Vec::new();
    for ((x, want), name) in elements.iter().zip(&printed_b).zip(names) {
        let got = expand_in_basis(x, &basis)?;
        if got != want.iter().map(|c| poly(c)).collect::<Vec<_>>() {
            mismatches.push(format!(
                "{name} over B: {}",
                got.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
        }
        columns.push(got);
    }
    for ((x, want), name) in elements[1..].iter().zip(&printed_c).zip(&names[1..]) {
        let got = expand_in_basis(x, &centralizer)?;
        if got != want.iter().map(|c| poly(c)).collect::<Vec<_>>() {
            mismatches.push(format!(
                "{name} over C: {}",
                got.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
        }
    }
    let matching = 11 - mismatches.len();
    let det = determinant(&Matrix::from_columns(&columns, 6))?;
    let ok = direct && dim == 6 && matching == 11 && det == DeltaRatFun::from_int(-1);
    let mut detail = format!("dim {dim}, {matching}/11 expansions match, det {det}");
    for m in mismatches {
        detail.push_str(&format!("; {m}"));
    }
    Ok((ok, detail))
}

fn idempotent_suite() -> Outcome {
    let mut ok = true;
    let mut counts = Vec::new();
    for (r, s, d) in SEMISIMPLE_INSTANCES {
        let sys = idempotents(&integral(r, s, d))?;
        let report = verify_idempotents(&sys)?;
        ok &= report.all_passed();
        counts.push(format!("B({r},{s})@{d}: {} paths", report.paths));
    }
    Ok((ok, counts.join(", ")))
}

fn gz_dimensions() -> Outcome {
    let mut ok = true;
    for (r, s, d) in SEMISIMPLE_INSTANCES {
        let alg = integral(r, s, d);
        let paths: usize = all_paths(alg.wall())?.iter().map(|(_, p)| p.len()).sum();
        ok &= gz_dimension(&alg, DEFAULT_SIZE_CAP)? == paths;
    }
    let mut walls = 0;
    for n in 0..=6 {
        for r in 0..=n {
            let squares: usize = all_paths(Wall::new(r, n - r))?
                .iter()
                .map(|(_, p)| p.len() * p.len())
                .sum();
            ok &= squares == factorial(n);
            walls += 1;
        }
    }
    Ok((
        ok,
        format!("3 gz dimensions, {walls} walls with sum of squares = (r+s)!"),
    ))
}

fn spectra() -> Outcome {
    let mut ok = true;
    for (r, s, d) in SEMISIMPLE_INSTANCES {
        let alg = integral(r, s, d);
        let family = alg.jm_family();
        let weights = dot_variant(alg.wall(), &DeltaSpec::at_int(d));
        for k in 1..=2 {
            let mut chars: Vec<Rational> = weights
                .iter()
                .map(|w| central_character(w, &SupersymPoly::power_sum(k), &rat(d, 1)))
                .collect();
            chars.sort();
            chars.dedup();
            ok &= annihilator_check(&power_sum_jm(&family, k)?, &chars)?;
        }
    }
    Ok((ok, "p_1, p_2 on three instances".to_string()))
}

/// Direct search for the box pairings defining balancedness.
fn balanced_by_pairing(a: &Weight, b: &Weight, d: i64) -> bool {
    fn diff(x: &Partition, y: &Partition) -> Vec<i64> {
        let yb: BTreeSet<(usize, usize)> = y.boxes().into_iter().collect();
        x.boxes()
            .into_iter()
            .filter(|c| !yb.contains(c))
            .map(|(i, j)| j as i64 - i as i64)
            .collect()
    }
    fn perfect(left: &[i64], right: &[i64], d: i64) -> bool {
        if left.len() != right.len() {
            return false;
        }
        let Some((&first, rest)) = left.split_first() else {
            return true;
        };
        (0..right.len()).any(|k| {
            let mut remaining = right.to_vec();
            remaining.remove(k);
            first + right[k] == -d && perfect(rest, &remaining, d)
        })
    }
    perfect(&diff(a.left(), b.left()), &diff(a.right(), b.right()), d)
        && perfect(&diff(b.left(), a.left()), &diff(b.right(), a.right()), d)
}

fn separation_and_blocks() -> Outcome {
    let mut ok = true;
    let mut regimes = 0;
    let mut deltas: Vec<DeltaSpec> = vec![DeltaSpec::Generic, DeltaSpec::At(rat(7, 3))];
    deltas.extend((-6..=6).map(DeltaSpec::at_int));
    for n in 0..=5 {
        for r in 0..=n {
            let wall = Wall::new(r, n - r);
            for d in deltas.iter().filter(|d| is_semisimple(wall, d)) {
                let ws = dot_variant(wall, d);
                let fs: BTreeSet<String> = ws
                    .iter()
                    .map(|w| w.content_function(d).to_string())
                    .collect();
                ok &= fs.len() == ws.len();
                regimes += 1;
            }
        }
    }
    let got: BTreeSet<Vec<Rational>> = dot_variant(Wall::new(3, 1), &DeltaSpec::at_int(0))
        .iter()
        .map(|w| w.contents().eval(&rat(0, 1)))
        .collect();
    let printed: BTreeSet<Vec<Rational>> = [
        [0, 1, 2, 0],
        [0, 1, -1, 0],
        [0, -1, -2, 0],
        [0, 1, 0, 0],
        [0, -1, 0, 0],
    ]
    .iter()
    .map(|v| v.iter().map(|&c| rat(c, 1)).collect())
    .collect();
    ok &= got == printed;
    let mut pairs = 0;
    let mut classes = 0;
    for n in 0..=4 {
        for r in 0..=n {
            let wall = Wall::new(r, n - r);
            let ws = enumerate_weights(wall);
            for d in -2..=2 {
                let spec = DeltaSpec::at_int(d);
                for a in &ws {
                    for b in &ws {
                        ok &= is_delta_balanced(a, b, &spec) == balanced_by_pairing(a, b, d);
                        pairs += 1;
                    }
                }
                let mode = ScalarMode::RationalAt(rat(d, 1));
                let sel = select_spanning_polys::<Rational>(wall, &mode)?;
                let dot = dot_variant(wall, &spec);
                let m = evaluation_matrix(&sel.polys, &dot, &rat(d, 1));
                let mut by_column: BTreeMap<Vec<Rational>, Vec<Weight>> = BTreeMap::new();
                for (j, w) in dot.iter().enumerate() {
                    by_column
                        .entry((0..m.rows()).map(|i| m.get(i, j).clone()).collect())
                        .or_default()
                        .push(w.clone());
                }
                let mut got: Vec<Vec<Weight>> = by_column.into_values().collect();
                got.sort();
                let mut want = blocks(wall, &spec);
                want.sort();
                ok &= got == want;
                classes += 1;
            }
        }
    }
    Ok((
        ok,
        format!("{regimes} semisimple regimes, {pairs} pairs, {classes} class comparisons"),
    ))
}

fn nonsemisimple_supersym() -> Outcome {
    let alg = integral(2, 2, 1);
    let spec = DeltaSpec::at_int(1);
    let z = compute_center(&alg, DEFAULT_SIZE_CAP)?;
    let family = alg.jm_family();
    let mut ok = !is_semisimple(alg.wall(), &spec);
    for k in 0..=6 {
        ok &= expand_in_basis(&power_sum_jm(&family, k)?, &z.elements).is_ok();
    }
    let sel = select_spanning_polys::<Rational>(alg.wall(), alg.mode())?;
    Ok((
        ok,
        format!(
            "center dim {}, supersymmetric rank {} of {} weights",
            z.dimension(),
            sel.rank,
            sel.weights
        ),
    ))
}

type QuantizedSystems = (
    Vec<Arc<RewriteSystem<QRatFun>>>,
    Vec<Arc<RewriteSystem<Rational>>>,
);

fn quantized_systems() -> Result<QuantizedSystems, Box<dyn Error>> {
    let walls = [Wall::new(1, 1), Wall::new(2, 1), Wall::new(2, 2)];
    let mut generic = Vec::new();
    let mut special = Vec::new();
    for wall in walls {
        for n in [2, 3, 5] {
            generic.push(Arc::new(RewriteSystem::new(
                wall,
                &ScalarMode::GenericQ(n),
                CompletionConfig::default(),
            )?));
        }
        for mode in seed_modes(2024, 3) {
            special.push(Arc::new(RewriteSystem::new(
                wall,
                &mode,
                CompletionConfig::default(),
            )?));
        }
    }
    Ok((generic, special))
}

fn q_dimensions(
    generic: &[Arc<RewriteSystem<QRatFun>>],
    special: &[Arc<RewriteSystem<Rational>>],
) -> Outcome {
    let mut ok = generic.len() == 9 && special.len() == 9;
    for s in generic {
        ok &= s.dimension() == factorial(s.wall().n()) && s.unresolved_overlaps() == 0;
    }
    for s in special {
        ok &= s.dimension() == factorial(s.wall().n()) && s.unresolved_overlaps() == 0;
    }
    Ok((
        ok,
        format!(
            "{} generic-q and {} rational-qr systems",
            generic.len(),
            special.len()
        ),
    ))
}

fn q_relations_on<F: DeltaField + wbr_core::scalars::QuantumField>(
    systems: &[Arc<RewriteSystem<F>>],
    instances: &mut usize,
) -> Result<bool, Box<dyn Error>> {
    let mut ok = true;
    for sys in systems {
        let report = verify_q_relations(sys)?;
        ok &= report.all_passed();
        *instances += report.checks.len();
        ok &= q_supersym_central_check(sys, &q_jm_family(sys)?, 3)?
            .iter()
            .all(|c| c.central);
    }
    Ok(ok)
}

fn q_relations(
    generic: &[Arc<RewriteSystem<QRatFun>>],
    special: &[Arc<RewriteSystem<Rational>>],
) -> Outcome {
    let mut instances = 0;
    let ok = q_relations_on(generic, &mut instances)? & q_relations_on(special, &mut instances)?;
    Ok((
        ok,
        format!("{instances} instances, centrality m <= 3, closed forms agree"),
    ))
}

fn classical_limit() -> Outcome {
    let sys = Arc::new(RewriteSystem::new(
        Wall::new(2, 1),
        &ScalarMode::GenericQ(3),
        CompletionConfig::default(),
    )?);
    let report = classical_limit_check(&sys, 5)?;
    Ok((
        report.passed(),
        format!(
            "{} words, basis rank {}",
            report.words_checked, report.basis_rank
        ),
    ))
}

fn quantized_center() -> Outcome {
    let sys = Arc::new(RewriteSystem::<QRatFun>::new(
        Wall::new(2, 2),
        &ScalarMode::GenericQ(5),
        CompletionConfig::default(),
    )?);
    let c = q_center_dimension(&sys)?;
    Ok((
        c.dimension == 6 && c.supersym_rank == 6,
        format!(
            "dim {}, supersymmetric rank {}",
            c.dimension, c.supersym_rank
        ),
    ))
}

fn report(number: usize, name: &str, limit: Duration, run: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = run();
    let elapsed = start.elapsed();
    let (ok, detail) = match outcome {
        Ok((ok, detail)) => (ok && elapsed < limit, detail),
        Err(e) => (false, format!("error: {e}")),
    };
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("criterion {number:>2} {verdict}: {name} ({detail}; {elapsed:.2?}, limit {limit:?})");
    ok
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let mut results = vec![
        report(1, "dim B(2,2) = 24 by enumeration", secs(1), || {
            let n = enumerate(Wall::new(2, 2), DEFAULT_SIZE_CAP)?.len();
            Ok((n == 24, format!("{n} diagrams")))
        }),
        report(2, "relation suites", secs(30), relation_suites),
        report(
            3,
            "center of B(2,2) and printed expansions",
            secs(120),
            worked_center,
        ),
        report(4, "path idempotents", secs(300), idempotent_suite),
        report(5, "Gelfand-Zetlin dimensions", secs(120), gz_dimensions),
        report(6, "Jucys-Murphy spectra", secs(60), spectra),
        report(
            7,
            "separation, balancedness and blocks",
            secs(120),
            separation_and_blocks,
        ),
        report(
            8,
            "supersymmetric centrality at B(2,2), delta = 1",
            secs(60),
            nonsemisimple_supersym,
        ),
    ];
    let start = Instant::now();
    match quantized_systems() {
        Ok((generic, special)) => {
            let built = start.elapsed();
            results.push(report(
                9,
                "quantized dimensions",
                secs(600).saturating_sub(built),
                || q_dimensions(&generic, &special),
            ));
            results.push(report(10, "quantized relations", secs(600), || {
                q_relations(&generic, &special)
            }));
        }
        Err(e) => {
            println!("criterion  9 FAIL: quantized dimensions (error: {e})");
            println!("criterion 10 FAIL: quantized relations (no systems)");
            results.extend([false, false]);
        }
    }
    results.push(report(
        11,
        "classical limit of H(2,1) at N = 3",
        secs(60),
        classical_limit,
    ));
    results.push(report(
        12,
        "quantized center of H(2,2) at rho = q^5",
        secs(300),
        quantized_center,
    ));
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
