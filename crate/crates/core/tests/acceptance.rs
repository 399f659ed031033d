//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use quadric_k0::clifford::{reorder_is_odd, CliffordElement, CliffordSpec};
use quadric_k0::field::{Field, FieldProfile, PrimeField, Rationals};
use quadric_k0::form::{DiagonalForm, SignatureForm};
use quadric_k0::geometry::{real_geometry, CaseTag, ChowGroup, EulerClassGroup, GeometryError};
use quadric_k0::linalg::mat_mul;
use quadric_k0::report::{table_text, TableKind};
use quadric_k0::symbolic::{abs_group, clifford_of_signature, closed_form_k0, simple_dim, AlgebraLabel, K0Class};
use quadric_k0::verify::{run_verification, VerifyConfig, VerifySummary};
use quadric_k0::witness::{standard_witnesses, verify_witness_iso, Witness};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn run(id: u32, name: &str, limit: Duration, check: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let o = check();
    let elapsed = start.elapsed();
    let in_time = elapsed <= limit;
    let ok = o.ok && in_time;
    println!(
        "criterion {id:>2} {:<4} {name}: {}; {:.2?} (limit {:?}{})",
        if ok { "PASS" } else { "FAIL" },
        o.detail,
        elapsed,
        limit,
        if in_time { "" } else { ", exceeded" }
    );
    ok
}

// Rows n = 1..8 of the definite table: C(q_n), C(q'_n), d(q_n), d(q'_n),
// with q_n = -Σx² and q'_n = Σx².
const DEFINITE_TABLE: [(&str, &str, u64, u64); 8] = [
    ("C(1)", "K(1)^2", 2, 1),
    ("H(1)", "K(2)", 4, 2),
    ("H(1)^2", "C(2)", 4, 4),
    ("H(2)", "H(2)", 8, 8),
    ("C(4)", "H(2)^2", 8, 8),
    ("K(8)", "H(4)", 8, 16),
    ("K(8)^2", "C(8)", 8, 16),
    ("K(16)", "K(16)", 16, 16),
];

fn criterion_1() -> Outcome {
    let qd = FieldProfile::QuaternionDivision;
    let mut cells = 0;
    let mut bad = Vec::new();
    for (i, (c, cp, d, dp)) in DEFINITE_TABLE.iter().enumerate() {
        let n = i + 1;
        let neg = clifford_of_signature(qd, 0, n);
        let pos = clifford_of_signature(qd, n, 0);
        let got = [
            neg.to_string(),
            pos.to_string(),
            simple_dim(neg).to_string(),
            simple_dim(pos).to_string(),
        ];
        let want = [c.to_string(), cp.to_string(), d.to_string(), dp.to_string()];
        for (g, w) in got.iter().zip(&want) {
            cells += 1;
            if g != w {
                bad.push(format!("n={n}: {g}!={w}"));
            }
        }
    }
    outcome(
        bad.is_empty() && cells == 32,
        format!("{cells} cells, {} mismatches {:?}", bad.len(), bad),
    )
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn cells(text: &str) -> (String, Vec<BTreeMap<String, String>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or_default().to_string();
    let rows = lines
        .map(|l| {
            l.split_whitespace()
                .filter_map(|kv| kv.split_once('='))
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect()
        })
        .collect();
    (header, rows)
}

fn periodic_table(kind: TableKind, profile: FieldProfile, prefix: &str, expected_cells: usize) -> Outcome {
    let mut compared = 0;
    let mut bad = Vec::new();
    for r in 0..=4 {
        let (want_header, want) = cells(&golden(&format!("{prefix}_r{r}.txt")));
        let text = table_text(profile, kind, 0, r).expect("table");
        let (got_header, got) = cells(&text);
        if want_header != got_header {
            bad.push(format!("r={r} header"));
        }
        if want.len() != got.len() {
            bad.push(format!("r={r} rows {}!={}", got.len(), want.len()));
        }
        for (w, g) in want.iter().zip(&got) {
            for (k, v) in w {
                compared += 1;
                if g.get(k) != Some(v) {
                    bad.push(format!("r={r} n={} {k}: {:?}!={v}", w["n"], g.get(k)));
                }
            }
        }
    }
    outcome(
        bad.is_empty() && compared == expected_cells,
        format!("{compared} cells, {} mismatches {:?}", bad.len(), bad),
    )
}

fn criterion_4() -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for profile in FieldProfile::ALL {
        for n in 0..=64 {
            for m in 0..=64 {
                if n + m == 0 {
                    continue;
                }
                cases += 1;
                let a = abs_group(profile, n, m).map(|r| r.class);
                let c = closed_form_k0(profile, n, m);
                if a != c {
                    bad.push(format!("{profile}({n},{m}): {a:?} vs {c:?}"));
                }
            }
        }
    }
    outcome(
        bad.is_empty() && cases == 3 * (65 * 65 - 1),
        format!(
            "{cases} cases, {} mismatches {:?}",
            bad.len(),
            bad.iter().take(5).collect::<Vec<_>>()
        ),
    )
}

fn sweep(primes: &[u64]) -> VerifySummary {
    let config = VerifyConfig {
        primes: primes.iter().map(|p| PrimeField::new(*p).unwrap()).collect(),
        max_rank: 8,
        witnesses: false,
    };
    run_verification(&config).expect("sweep runs")
}

fn oracle_criterion(summary: &VerifySummary, profile: FieldProfile) -> Outcome {
    let wrong_profile = summary.records.iter().filter(|r| r.profile != profile).count();
    let mismatches: Vec<String> = summary
        .records
        .iter()
        .filter(|r| !r.matches())
        .map(|r| r.to_string())
        .collect();
    outcome(
        mismatches.is_empty() && wrong_profile == 0 && summary.records.len() == 3 * 44,
        format!(
            "{} cases (n+m <= 8, 3 primes), {} mismatches {:?}",
            summary.records.len(),
            mismatches.len(),
            mismatches.iter().take(3).collect::<Vec<_>>()
        ),
    )
}

fn criterion_7() -> Outcome {
    let suite = standard_witnesses();
    let required = |w: &Witness| match w {
        Witness::AbsPlus(n) | Witness::AbsMinus(n) => *n <= 6,
        Witness::Hyp(q) => q.rank() <= 6,
        _ => true,
    };
    let scaled_bs: std::collections::BTreeSet<[i64; 2]> = suite
        .iter()
        .filter_map(|w| match w {
            Witness::Scaled { b, .. } => Some(*b),
            _ => None,
        })
        .collect();
    let coverage = suite.iter().all(required)
        && (1..=6).all(|n| suite.contains(&Witness::AbsPlus(n)) && suite.contains(&Witness::AbsMinus(n)))
        && (0..=6).all(|r| (0..=r).all(|m| suite.contains(&Witness::Hyp(SignatureForm::new(r - m, m)))))
        && scaled_bs.len() == 4;
    let mut checked = 0;
    let mut failures = Vec::new();
    for w in &suite {
        let q = verify_witness_iso(w, &Rationals);
        checked += 1;
        if !q.passed() {
            failures.push(q.to_string());
        }
        for p in [5u64, 7] {
            let c = verify_witness_iso(w, &PrimeField::new(p).unwrap());
            checked += 1;
            if !c.passed() {
                failures.push(c.to_string());
            }
        }
    }
    outcome(
        coverage && failures.is_empty(),
        format!(
            "{} witnesses x {{Q, F5, F7}} = {checked} certificates, {} failures {:?}",
            suite.len(),
            failures.len(),
            failures
        ),
    )
}

fn criterion_8(sweeps: &[&VerifySummary]) -> Outcome {
    let total: usize = sweeps.iter().map(|s| s.records.len()).sum();
    let violations: Vec<String> = sweeps
        .iter()
        .flat_map(|s| s.records.iter())
        .filter(|r| !r.violations.is_empty() || r.oracle.is_err())
        .map(|r| r.to_string())
        .collect();
    outcome(
        violations.is_empty() && total > 0,
        format!(
            "{total} oracle cases x 4 checks, {} violations {:?}",
            violations.len(),
            violations.iter().take(3).collect::<Vec<_>>()
        ),
    )
}

fn shifted(label: AlgebraLabel, by: u32) -> AlgebraLabel {
    AlgebraLabel::new(label.base, label.log2size + by, label.split)
}

fn criterion_9() -> Outcome {
    let mut checks = 0;
    let mut bad = Vec::new();
    for (profile, period, shift) in [
        (FieldProfile::QuaternionDivision, 8, 4),
        (FieldProfile::SumTwoSquares, 4, 2),
        (FieldProfile::SqrtMinusOne, 2, 1),
    ] {
        for n in 0..=64 {
            for (p, m, pp, mp) in [(n, 0, n + period, 0), (0, n, 0, n + period)] {
                checks += 1;
                let base = clifford_of_signature(profile, p, m);
                let next = clifford_of_signature(profile, pp, mp);
                if next != shifted(base, shift) {
                    bad.push(format!("{profile} ({p},{m}) -> ({pp},{mp}): {base} -> {next}"));
                }
            }
        }
        for n in 0..=64usize {
            for m in 0..=64usize {
                if n + m == 0 {
                    continue;
                }
                checks += 1;
                let got = abs_group(profile, n, m).unwrap().class;
                // R_{n,n} reduces to the empty core, whose class is the residue-0 value.
                let want = if n > m {
                    abs_group(profile, n - m, 0).unwrap().class
                } else if n < m {
                    abs_group(profile, 0, m - n).unwrap().class
                } else {
                    K0Class::Zero
                };
                if got != want {
                    bad.push(format!("{profile} ({n},{m}): {got} vs {want}"));
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{checks} checks, {} mismatches {:?}",
            bad.len(),
            bad.iter().take(5).collect::<Vec<_>>()
        ),
    )
}

fn criterion_10() -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for n in 0..=16usize {
        for m in 0..=(16 - n) {
            if n + m == 0 {
                continue;
            }
            cases += 1;
            // x_1 = 1 is a real point exactly when there is an x-variable; the
            // real locus is compact exactly when there is no y-variable.
            let has_real_point = n >= 1;
            let compact = m == 0;
            let want = if !has_real_point {
                Ok((CaseTag::NoRealPoints, EulerClassGroup::Zero, ChowGroup::Zero))
            } else if n + m < 3 {
                Err(GeometryError::LowDimension { plus: n, minus: m })
            } else if compact {
                Ok((CaseTag::Sphere, EulerClassGroup::Z, ChowGroup::ZMod2))
            } else {
                Ok((CaseTag::Indefinite, EulerClassGroup::Zero, ChowGroup::Zero))
            };
            let got = real_geometry(n, m).map(|r| (r.case_tag, r.euler_class_group, r.chow_group));
            if got != want {
                bad.push(format!("({n},{m}): {got:?} vs {want:?}"));
            }
        }
    }
    let named = [
        real_geometry(3, 0).map(|r| (r.euler_class_group, r.chow_group)) == Ok((EulerClassGroup::Z, ChowGroup::ZMod2)),
        real_geometry(0, 4).map(|r| (r.euler_class_group, r.chow_group))
            == Ok((EulerClassGroup::Zero, ChowGroup::Zero)),
        real_geometry(2, 2).map(|r| (r.euler_class_group, r.chow_group))
            == Ok((EulerClassGroup::Zero, ChowGroup::Zero)),
    ];
    let guarded = [(2, 0), (1, 1)]
        .iter()
        .all(|&(n, m)| matches!(real_geometry(n, m), Err(GeometryError::LowDimension { .. })));
    outcome(
        bad.is_empty() && named.iter().all(|x| *x) && guarded,
        format!("{cases} forms with n+m <= 16, {} mismatches {:?}", bad.len(), bad),
    )
}

/// Sign of `e_S e_T` by literally counting the transpositions that sort the
/// concatenated index list.
fn naive_reorder_is_odd(s: u32, t: u32) -> bool {
    let mut swaps = 0u32;
    for i in 0..32 {
        if s & (1 << i) != 0 {
            for j in 0..i {
                if t & (1 << j) != 0 {
                    swaps += 1;
                }
            }
        }
    }
    swaps % 2 == 1
}

fn random_element<F: Field>(spec: &CliffordSpec<F>, rng: &mut StdRng) -> CliffordElement<F> {
    let f = spec.field();
    let dense: Vec<F::Elem> = (0..spec.dim()).map(|_| f.from_i64(rng.gen_range(-3..=3))).collect();
    CliffordElement::from_dense(f, &dense)
}

fn engine_checks<F: Field>(spec: &CliffordSpec<F>, rng: &mut StdRng) -> Result<(), String>
where
    F::Elem: PartialEq,
{
    let f = spec.field();
    let dim = spec.dim();
    for _ in 0..10_000 {
        let (x, y, z) = (
            random_element(spec, rng),
            random_element(spec, rng),
            random_element(spec, rng),
        );
        let lhs = spec.mul(&spec.mul(&x, &y), &z).to_dense(f, dim);
        let rhs = spec.mul(&x, &spec.mul(&y, &z)).to_dense(f, dim);
        if lhs != rhs {
            return Err(format!("associativity over {}", f.descriptor()));
        }
    }
    let table = spec.table().map_err(|e| e.to_string())?;
    for _ in 0..1_000 {
        let x = random_element(spec, rng).to_dense(f, dim);
        let y = random_element(spec, rng).to_dense(f, dim);
        let lx = table.left_mul_matrix(&x);
        let ly = table.left_mul_matrix(&y);
        if mat_mul(f, &lx, &ly) != table.left_mul_matrix(&table.mul(&x, &y)) {
            return Err(format!("L_x L_y != L_xy over {}", f.descriptor()));
        }
        if quadric_k0::linalg::mat_vec(f, &lx, table.unit()) != x {
            return Err(format!("L_x 1 != x over {}", f.descriptor()));
        }
    }
    Ok(())
}

fn criterion_11() -> Outcome {
    let mut pairs: u64 = 0;
    let mut sign_bad = 0u64;
    for s in 0u32..(1 << 12) {
        for t in 0u32..(1 << 12) {
            pairs += 1;
            if reorder_is_odd(s, t) != naive_reorder_is_odd(s, t) {
                sign_bad += 1;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let f13 = PrimeField::new(13).unwrap();
    let f7 = PrimeField::new(7).unwrap();
    let specs = [
        engine_checks(
            &CliffordSpec::new(DiagonalForm::from_integers(&f13, &[3, -1, 5, -7, 2]).unwrap()).unwrap(),
            &mut rng,
        ),
        engine_checks(
            &CliffordSpec::new(SignatureForm::new(3, 3).to_diagonal(&f7)).unwrap(),
            &mut rng,
        ),
        engine_checks(
            &CliffordSpec::new(DiagonalForm::from_integers(&Rationals, &[2, -3, 5]).unwrap()).unwrap(),
            &mut rng,
        ),
    ];
    let errors: Vec<String> = specs.into_iter().filter_map(Result::err).collect();
    outcome(
        sign_bad == 0 && pairs == 1 << 24 && errors.is_empty(),
        format!(
            "{pairs} sign pairs ({sign_bad} wrong); 3 specs x (10^4 associativity triples + 10^3 representation pairs), errors {errors:?}"
        ),
    )
}

fn main() {
    let secs = Duration::from_secs;
    let mut ok = Vec::new();
    ok.push(run(1, "definite table n=1..8 under level-inf", secs(1), criterion_1));
    ok.push(run(2, "period-8 table r=0..4 vs golden files", secs(1), || {
        periodic_table(TableKind::Paper8r, FieldProfile::QuaternionDivision, "paper-8r", 280)
    }));
    ok.push(run(3, "period-4 table r=0..4 vs golden files", secs(1), || {
        periodic_table(TableKind::Paper4r, FieldProfile::SumTwoSquares, "paper-4r", 140)
    }));
    ok.push(run(4, "abs_group = closed form, n,m <= 64", secs(5), criterion_4));

    let mut level1 = None;
    ok.push(run(
        5,
        "oracle equivalence, level-1 primes {5,13,17}",
        secs(600),
        || {
            let s = sweep(&[5, 13, 17]);
            let o = oracle_criterion(&s, FieldProfile::SqrtMinusOne);
            level1 = Some(s);
            o
        },
    ));
    let mut level2 = None;
    ok.push(run(
        6,
        "oracle equivalence, level-2 primes {7,11,19}",
        secs(600),
        || {
            let s = sweep(&[7, 11, 19]);
            let o = oracle_criterion(&s, FieldProfile::SumTwoSquares);
            level2 = Some(s);
            o
        },
    ));
    ok.push(run(7, "explicit isomorphism witnesses", secs(120), criterion_7));
    let (l1, l2) = (level1.unwrap_or_default(), level2.unwrap_or_default());
    ok.push(run(8, "structural checks on every oracle case", secs(1), || {
        criterion_8(&[&l1, &l2])
    }));
    ok.push(run(
        9,
        "periodicity and difference dependence, n,m <= 64",
        secs(5),
        criterion_9,
    ));
    ok.push(run(10, "real geometry report, n+m <= 16", secs(1), criterion_10));
    ok.push(run(
        11,
        "engine sign rule, associativity, faithfulness",
        secs(60),
        criterion_11,
    ));

    let passed = ok.iter().filter(|x| **x).count();
    println!("acceptance: {passed}/{} criteria passed", ok.len());
    if passed != ok.len() {
        std::process::exit(1);
    }
}
