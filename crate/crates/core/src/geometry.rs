//! Euler class group and Chow group of zero cycles for the real quadric
//! `A = R[x, y]/(Q_{n,m} - 1)`.
//!
//! This is a lookup over known results, not a computation:
//! with no real points both groups vanish; the sphere (`m = 0`, `n >= 3`) has
//! `E(A) = Z`, `CH_0(A) = Z/2`; an indefinite quadric has no compact connected
//! component, so both vanish. Quadrics of dimension below 2 (`n + m < 3`)
//! with real points are refused.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("the form with no variables defines the zero ring")]
    EmptyForm,
    #[error("LOW_DIMENSION: Q({plus},{minus}) has real points but n + m < 3; no Euler class group value is known for rings of dimension < 2")]
    LowDimension { plus: usize, minus: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    NoRealPoints,
    Sphere,
    Indefinite,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::NoRealPoints => "NO_REAL_POINTS",
            CaseTag::Sphere => "SPHERE",
            CaseTag::Indefinite => "INDEFINITE",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EulerClassGroup {
    Z,
    Zero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChowGroup {
    ZMod2,
    Zero,
}

impl fmt::Display for EulerClassGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EulerClassGroup::Z => "Z",
            EulerClassGroup::Zero => "0",
        })
    }
}

impl fmt::Display for ChowGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChowGroup::ZMod2 => "Z/2",
            ChowGroup::Zero => "0",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RealGeometryReport {
    pub plus: usize,
    pub minus: usize,
    pub case_tag: CaseTag,
    pub euler_class_group: EulerClassGroup,
    pub chow_group: ChowGroup,
}

impl fmt::Display for RealGeometryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "REAL plus={} minus={} case={} euler={} chow0={} source=literature",
            self.plus, self.minus, self.case_tag, self.euler_class_group, self.chow_group
        )
    }
}

pub fn real_geometry(plus: usize, minus: usize) -> Result<RealGeometryReport, GeometryError> {
    if plus + minus == 0 {
        return Err(GeometryError::EmptyForm);
    }
    let case_tag = if plus == 0 {
        CaseTag::NoRealPoints
    } else if plus + minus < 3 {
        return Err(GeometryError::LowDimension { plus, minus });
    } else if minus == 0 {
        CaseTag::Sphere
    } else {
        CaseTag::Indefinite
    };
    let (euler_class_group, chow_group) = match case_tag {
        CaseTag::Sphere => (EulerClassGroup::Z, ChowGroup::ZMod2),
        CaseTag::NoRealPoints | CaseTag::Indefinite => (EulerClassGroup::Zero, ChowGroup::Zero),
    };
    Ok(RealGeometryReport {
        plus,
        minus,
        case_tag,
        euler_class_group,
        chow_group,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn the_three_cases() {
        let s = real_geometry(3, 0).unwrap();
        assert_eq!(
            (s.case_tag, s.euler_class_group, s.chow_group),
            (CaseTag::Sphere, EulerClassGroup::Z, ChowGroup::ZMod2)
        );
        let e = real_geometry(0, 4).unwrap();
        assert_eq!(
            (e.case_tag, e.euler_class_group, e.chow_group),
            (CaseTag::NoRealPoints, EulerClassGroup::Zero, ChowGroup::Zero)
        );
        let i = real_geometry(2, 2).unwrap();
        assert_eq!(
            (i.case_tag, i.euler_class_group, i.chow_group),
            (CaseTag::Indefinite, EulerClassGroup::Zero, ChowGroup::Zero)
        );
        assert_eq!(
            s.to_string(),
            "REAL plus=3 minus=0 case=SPHERE euler=Z chow0=Z/2 source=literature"
        );
    }

    #[test]
    fn low_dimension_is_refused() {
        assert_eq!(real_geometry(0, 0), Err(GeometryError::EmptyForm));
        for (p, m) in [(1, 0), (2, 0), (1, 1)] {
            assert_eq!(
                real_geometry(p, m),
                Err(GeometryError::LowDimension { plus: p, minus: m })
            );
        }
        assert_eq!(real_geometry(0, 1).unwrap().case_tag, CaseTag::NoRealPoints);
    }
}
