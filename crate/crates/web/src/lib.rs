//! Browser bindings: K̃₀ lookup, periodic tables, and a small brute-force
//! classification over `F_p`.

use quadric_k0::field::{FieldDescriptor, PrimeField};
use quadric_k0::form::SignatureForm;
use quadric_k0::report::{compute_line, table_text, TableKind};
use quadric_k0::verify::Oracle;
use wasm_bindgen::prelude::*;

/// Largest rank classified in the browser (dimension 256).
pub const BROWSER_MAX_RANK: usize = 8;

pub fn compute_text(plus: usize, minus: usize, field: &str) -> Result<String, String> {
    let field: FieldDescriptor = field.parse().map_err(|e| format!("{e}"))?;
    compute_line(plus, minus, &field).map_err(|e| e.to_string())
}

pub fn table_string(field: &str, kind: &str, max_n: usize, r: usize) -> Result<String, String> {
    let field: FieldDescriptor = field.parse().map_err(|e| format!("{e}"))?;
    let kind: TableKind = kind.parse().map_err(|e| format!("{e}"))?;
    table_text(field.profile(), kind, max_n, r).map_err(|e| e.to_string())
}

/// The verification record for `C(Q_{n,m})` over `F_p`.
pub fn classify_text(plus: usize, minus: usize, p: u32) -> Result<String, String> {
    if plus + minus == 0 {
        return Err("need at least one variable".into());
    }
    if plus + minus > BROWSER_MAX_RANK {
        return Err(format!(
            "rank {} is above the browser limit {BROWSER_MAX_RANK}",
            plus + minus
        ));
    }
    let field = PrimeField::new(u64::from(p)).map_err(|e| e.to_string())?;
    Ok(Oracle::new(field).verify(SignatureForm::new(plus, minus)).to_string())
}

#[wasm_bindgen]
pub fn compute(plus: usize, minus: usize, field: &str) -> Result<String, JsValue> {
    compute_text(plus, minus, field).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn table(field: &str, kind: &str, max_n: usize, r: usize) -> Result<String, JsValue> {
    table_string(field, kind, max_n, r).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn classify(plus: usize, minus: usize, p: u32) -> Result<String, JsValue> {
    classify_text(plus, minus, p).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compute_passes_through() {
        assert_eq!(
            compute_text(0, 3, "Fp:7").unwrap(),
            "K0 plus=0 minus=3 profile=level-2 algebra=K(2)^2 d=2 dperp=4 result=Z"
        );
        assert!(compute_text(1, 0, "Fp:8").unwrap_err().contains("not prime"));
    }

    #[test]
    fn table_passes_through() {
        let t = table_string("level-1", "definite-plus", 2, 0).unwrap();
        assert_eq!(t.lines().count(), 3);
        assert!(table_string("Q", "nope", 2, 0).is_err());
    }

    #[test]
    fn classify_small_cases() {
        let line = classify_text(0, 2, 7).unwrap();
        assert!(
            line.contains("oracle=M2(F_p^1)") && line.ends_with("verdict=match"),
            "{line}"
        );
        assert!(classify_text(9, 0, 5).is_err());
        assert!(classify_text(0, 0, 5).is_err());
    }
}
