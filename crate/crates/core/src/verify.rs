//! Brute-force cross-check of the label calculus: build `C(Q_{n,m})` over
//! `F_p` from structure constants, classify it, and compare with the label
//! predicted for the prime's profile.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::clifford::CliffordSpec;
use crate::field::{is_square, FieldProfile, PrimeField, Rationals};
use crate::form::SignatureForm;
use crate::symbolic::{abs_group, AlgebraLabel, Base, K0Class};
use crate::wedderburn::{classify, OracleError, SimpleFactor, WedderburnReport};
use crate::witness::{standard_witnesses, verify_witness_iso};

pub const DEFAULT_PRIMES: [u64; 6] = [5, 13, 17, 7, 11, 19];
pub const DEFAULT_MAX_RANK: usize = 8;
pub const MAX_RANK_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("max rank {0} exceeds the limit {MAX_RANK_LIMIT}")]
    RankTooLarge(usize),
    #[error("no primes given")]
    NoPrimes,
}

/// What a label says the algebra over `F_p` must be.
pub fn predicted_factors(label: AlgebraLabel) -> Result<Vec<SimpleFactor>, String> {
    let center_degree = match label.base {
        Base::K => 1,
        Base::C => 2,
        Base::H => {
            return Err(format!(
                "{label} has a quaternion division base, impossible over a finite field"
            ))
        }
    };
    let factor = SimpleFactor {
        matrix_size: 1usize << label.log2size,
        center_degree,
    };
    Ok(vec![factor; label.factor_count()])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationRecord {
    pub form: SignatureForm,
    pub prime: u32,
    pub profile: FieldProfile,
    pub label: AlgebraLabel,
    pub class: K0Class,
    pub oracle: Result<WedderburnReport, OracleError>,
    /// Field-by-field disagreements between label and oracle.
    pub diff: Vec<String>,
    /// Structural facts about the oracle report that failed.
    pub violations: Vec<String>,
}

impl VerificationRecord {
    pub fn matches(&self) -> bool {
        self.diff.is_empty()
    }
}

impl fmt::Display for VerificationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CASE plus={} minus={} field=Fp:{} profile={} label={} k0={} oracle=",
            self.form.plus,
            self.form.minus,
            self.prime,
            self.profile.tag(),
            self.label,
            self.class
        )?;
        match &self.oracle {
            Ok(report) => write!(f, "{report}")?,
            Err(_) => f.write_str("error")?,
        }
        if self.matches() {
            f.write_str(" verdict=match")?;
        } else {
            write!(f, " verdict=mismatch diff={}", self.diff.join(";"))?;
        }
        if !self.violations.is_empty() {
            write!(f, " violations={}", self.violations.join(";"))?;
        }
        Ok(())
    }
}

/// Classifies `C(Q_{n,m})` over one prime, caching reports so the `q ⊥ 1`
/// comparison reuses neighbouring cases.
pub struct Oracle {
    field: PrimeField,
    cache: HashMap<SignatureForm, Result<WedderburnReport, OracleError>>,
}

impl Oracle {
    pub fn new(field: PrimeField) -> Self {
        Oracle {
            field,
            cache: HashMap::new(),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn report(&mut self, form: SignatureForm) -> Result<WedderburnReport, OracleError> {
        let field = self.field;
        self.cache
            .entry(form)
            .or_insert_with(|| {
                let spec =
                    CliffordSpec::new(form.to_diagonal(&field)).map_err(|e| OracleError::Internal(e.to_string()))?;
                let table = spec.table().map_err(|e| OracleError::Internal(e.to_string()))?;
                classify(&table)
            })
            .clone()
    }

    /// Compares the oracle with the label for `form` and checks the
    /// structural facts every report must satisfy.
    pub fn verify(&mut self, form: SignatureForm) -> VerificationRecord {
        let profile = self.field.profile();
        let abs = abs_group(profile, form.plus, form.minus);
        let (label, class) = match &abs {
            Ok(r) => (r.label, r.class),
            Err(_) => (AlgebraLabel::GROUND, K0Class::Zero),
        };
        let oracle = self.report(form);
        let mut diff = Vec::new();
        let mut violations = Vec::new();
        if let Err(e) = &abs {
            diff.push(format!("symbolic:{e}"));
        }
        match (&oracle, predicted_factors(label)) {
            (Err(e), _) => diff.push(format!("oracle:{e}")),
            (_, Err(e)) => diff.push(format!("label:{e}")),
            (Ok(report), Ok(predicted)) => {
                let mut got = report.factors.clone();
                got.sort();
                if got.len() != predicted.len() {
                    diff.push(format!("factor_count:{}!={}", predicted.len(), got.len()));
                }
                for (p, g) in predicted.iter().zip(&got) {
                    if p.matrix_size != g.matrix_size {
                        diff.push(format!("matrix_size:{}!={}", p.matrix_size, g.matrix_size));
                    }
                    if p.center_degree != g.center_degree {
                        diff.push(format!("center_degree:{}!={}", p.center_degree, g.center_degree));
                    }
                }
                let label_d = 1usize << crate::symbolic::simple_dim(label).0;
                if let Some(g) = got.first() {
                    if g.simple_module_dim() != label_d {
                        diff.push(format!("simple_module_dim:{}!={}", label_d, g.simple_module_dim()));
                    }
                }
                violations = self.structural_violations(form, report);
            }
        }
        VerificationRecord {
            form,
            prime: self.field.modulus(),
            profile,
            label,
            class,
            oracle,
            diff,
            violations,
        }
    }

    fn structural_violations(&mut self, form: SignatureForm, report: &WedderburnReport) -> Vec<String> {
        let mut out = Vec::new();
        let f = self.field;
        let ds = form.to_diagonal(&f).ds();
        let split = report.factors.len() == 2;
        let expect_split = form.rank() % 2 == 1 && !ds.is_zero() && is_square(ds);
        if split != expect_split {
            out.push(format!("split:{split}!=odd_rank_and_square_ds:{expect_split}"));
        }
        if split && report.factors[0] != report.factors[1] {
            out.push(format!("unequal_factors:{}!={}", report.factors[0], report.factors[1]));
        }
        if report.factors.len() > 2 {
            out.push(format!("factor_count:{}", report.factors.len()));
        }
        let bookkeeping: usize = report.factors.iter().map(|x| x.dim()).sum();
        if bookkeeping != 1 << form.rank() {
            out.push(format!("dimension_sum:{}!={}", bookkeeping, 1usize << form.rank()));
        }
        let d = report.factors.iter().map(|x| x.simple_module_dim()).max().unwrap_or(0);
        match self.report(form.perp_one()) {
            Ok(perp) => {
                let d_perp = perp.factors.iter().map(|x| x.simple_module_dim()).max().unwrap_or(0);
                if d_perp != d && d_perp != 2 * d {
                    out.push(format!("d_ratio:{d_perp}/{d}"));
                }
            }
            Err(e) => out.push(format!("perp_oracle:{e}")),
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub primes: Vec<PrimeField>,
    pub max_rank: usize,
    pub witnesses: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            primes: DEFAULT_PRIMES
                .iter()
                .map(|p| PrimeField::new(*p).expect("prime"))
                .collect(),
            max_rank: DEFAULT_MAX_RANK,
            witnesses: false,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifySummary {
    pub records: Vec<VerificationRecord>,
    /// Rendered witness certificates with their pass flag.
    pub witnesses: Vec<(String, bool)>,
}

impl VerifySummary {
    pub fn mismatches(&self) -> usize {
        self.records.iter().filter(|r| !r.matches()).count()
    }

    pub fn violations(&self) -> usize {
        self.records.iter().filter(|r| !r.violations.is_empty()).count()
    }

    pub fn witness_failures(&self) -> usize {
        self.witnesses.iter().filter(|(_, ok)| !ok).count()
    }

    pub fn all_passed(&self) -> bool {
        self.mismatches() == 0 && self.violations() == 0 && self.witness_failures() == 0
    }

    pub fn summary_line(&self) -> String {
        format!(
            "SUMMARY cases={} mismatches={} violations={} witnesses={} witness_failures={} status={}",
            self.records.len(),
            self.mismatches(),
            self.violations(),
            self.witnesses.len(),
            self.witness_failures(),
            if self.all_passed() { "ok" } else { "FAIL" }
        )
    }
}

/// Every form `Q_{n,m}` with `1 <= n + m <= max_rank`, in `(n, m)` order.
pub fn sweep_forms(max_rank: usize) -> Vec<SignatureForm> {
    (0..=max_rank)
        .flat_map(|n| (0..=max_rank - n).map(move |m| SignatureForm::new(n, m)))
        .filter(|q| q.rank() > 0)
        .collect()
}

/// Runs the sweep; records come out in `(n, m, prime)` order.
pub fn run_verification(config: &VerifyConfig) -> Result<VerifySummary, VerifyError> {
    run_verification_with(config, |_| {})
}

/// As [`run_verification`], calling `on_record` as each record is produced.
pub fn run_verification_with(
    config: &VerifyConfig,
    mut on_record: impl FnMut(&VerificationRecord),
) -> Result<VerifySummary, VerifyError> {
    if config.max_rank > MAX_RANK_LIMIT {
        return Err(VerifyError::RankTooLarge(config.max_rank));
    }
    if config.primes.is_empty() {
        return Err(VerifyError::NoPrimes);
    }
    let mut oracles: Vec<Oracle> = config.primes.iter().map(|p| Oracle::new(*p)).collect();
    let mut summary = VerifySummary::default();
    for form in sweep_forms(config.max_rank) {
        for oracle in oracles.iter_mut() {
            let record = oracle.verify(form);
            on_record(&record);
            summary.records.push(record);
        }
    }
    if config.witnesses {
        for w in standard_witnesses() {
            let cert = verify_witness_iso(&w, &Rationals);
            summary.witnesses.push((cert.to_string(), cert.passed()));
        }
        for p in &config.primes {
            for w in standard_witnesses().into_iter().filter(|w| w.is_defined_over(p)) {
                let cert = verify_witness_iso(&w, p);
                summary.witnesses.push((cert.to_string(), cert.passed()));
            }
        }
    }
    Ok(summary)
}
