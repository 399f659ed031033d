//! Line-oriented `key=value` output for the command-line tool.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::field::{FieldDescriptor, FieldProfile};
use crate::symbolic::{abs_group, clifford_of_signature, closed_form_k0, simple_dim, AbsReport, SymbolicError};

pub const MAX_TABLE_N: usize = 512;
pub const MAX_TABLE_R: usize = 64;
/// Largest `n + m` accepted by [`compute_line`]; sizes are printed in full.
pub const MAX_COMPUTE_RANK: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
    #[error("label calculus gives {computed} but the closed form gives {closed} for Q({plus},{minus})")]
    Disagreement {
        plus: usize,
        minus: usize,
        computed: String,
        closed: String,
    },
    #[error("unknown table kind `{0}` (expected definite-plus, definite-minus, paper-8r or paper-4r)")]
    UnknownKind(String),
    #[error("max-n {0} exceeds {MAX_TABLE_N}")]
    MaxNTooLarge(usize),
    #[error("r {0} exceeds {MAX_TABLE_R}")]
    RTooLarge(usize),
    #[error("n + m exceeds {MAX_COMPUTE_RANK}")]
    RankTooLarge,
}

/// One `K0 ...` line for `Q_{n,m}` over a field of the given kind.
pub fn compute_line(plus: usize, minus: usize, field: &FieldDescriptor) -> Result<String, ReportError> {
    if plus.saturating_add(minus) > MAX_COMPUTE_RANK {
        return Err(ReportError::RankTooLarge);
    }
    let profile = field.profile();
    let r: AbsReport = abs_group(profile, plus, minus)?;
    let closed = closed_form_k0(profile, plus, minus)?;
    if closed != r.class {
        return Err(ReportError::Disagreement {
            plus,
            minus,
            computed: r.class.to_string(),
            closed: closed.to_string(),
        });
    }
    Ok(format!(
        "K0 plus={plus} minus={minus} profile={} algebra={} d={} dperp={} result={closed}",
        profile.tag(),
        r.label,
        r.d,
        r.d_perp
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    /// `C(Q_{n,0})` and `C(Q_{n+1,0})` for `n = 1..max_n`.
    DefinitePlus,
    /// `C(Q_{0,n})` and `C(Q_{1,n})` for `n = 1..max_n`.
    DefiniteMinus,
    /// Rows `8r + n`, `n = 1..8`.
    Paper8r,
    /// Rows `4r + n`, `n = 1..4`.
    Paper4r,
}

impl TableKind {
    fn period(self) -> Option<usize> {
        match self {
            TableKind::Paper8r => Some(8),
            TableKind::Paper4r => Some(4),
            _ => None,
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableKind::DefinitePlus => "definite-plus",
            TableKind::DefiniteMinus => "definite-minus",
            TableKind::Paper8r => "paper-8r",
            TableKind::Paper4r => "paper-4r",
        })
    }
}

impl FromStr for TableKind {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "definite-plus" => Ok(TableKind::DefinitePlus),
            "definite-minus" => Ok(TableKind::DefiniteMinus),
            "paper-8r" => Ok(TableKind::Paper8r),
            "paper-4r" => Ok(TableKind::Paper4r),
            _ => Err(ReportError::UnknownKind(s.to_string())),
        }
    }
}

/// The table as text, one header line then one line per row, each ending in
/// a newline.
///
/// Periodic kinds print, for `k = P r + n`: `C = C(q_k)` with `q_k` negative
/// definite, `Cprime = C(q'_k)` positive definite, `Cperp = C(q_k ⊥ 1)`, and
/// the three simple-module dimensions. `max_n` is ignored for them; `r` is
/// ignored by the definite kinds.
pub fn table_text(profile: FieldProfile, kind: TableKind, max_n: usize, r: usize) -> Result<String, ReportError> {
    let mut out = String::new();
    match kind.period() {
        Some(period) => {
            if r > MAX_TABLE_R {
                return Err(ReportError::RTooLarge(r));
            }
            out.push_str(&format!("TABLE kind={kind} profile={} r={r}\n", profile.tag()));
            for n in 1..=period {
                let k = period * r + n;
                let c = clifford_of_signature(profile, 0, k);
                let cp = clifford_of_signature(profile, k, 0);
                let cperp = clifford_of_signature(profile, 1, k);
                out.push_str(&format!(
                    "n={n} C={c} Cprime={cp} Cperp={cperp} d={} dprime={} dperp={}\n",
                    simple_dim(c),
                    simple_dim(cp),
                    simple_dim(cperp)
                ));
            }
        }
        None => {
            if max_n > MAX_TABLE_N {
                return Err(ReportError::MaxNTooLarge(max_n));
            }
            out.push_str(&format!("TABLE kind={kind} profile={} max_n={max_n}\n", profile.tag()));
            for n in 1..=max_n {
                let (plus, minus) = match kind {
                    TableKind::DefinitePlus => (n, 0),
                    _ => (0, n),
                };
                let a = abs_group(profile, plus, minus)?;
                out.push_str(&format!(
                    "n={n} C={} Cperp={} d={} dperp={} k0={}\n",
                    a.label, a.perp_label, a.d, a.d_perp, a.class
                ));
            }
        }
    }
    Ok(out)
}
