//! Macdonald's functional equation for reciprocal complexes.
//!
//! With `P̃(Δ,x) = f̃(Δ,-x)` and `Q(x) = P̃(Δ,x) - ½ P̃(∂Δ,x)`,
//!
//! ```text
//! (-1)^d Q(-x) = Q(1+x) + c,   c = 0 for even d,  c = χ̃(Δ) for odd d.
//! ```
//!
//! `Q` has half-integer coefficients, so everything is carried as `2Q`,
//! which equals `f̃(-x) + f̃^int(-x)` because `f^∂ = f - f^int`. Reports
//! compare doubled sides and say so through their `scale`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::complex::Complex;
use crate::enumeration::{f_vector, interior_f_vector, multiplicities, FVector, InteriorFVector};
use crate::error::{Error, Result};
use crate::poly::{sign, IntPoly};

use super::{RelationId, RelationReport};

/// A polynomial with coefficients in `½ℤ`, stored doubled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubledPoly {
    pub doubled: IntPoly,
}

impl DoubledPoly {
    pub fn coeff(&self, i: usize) -> BigRational {
        BigRational::new(self.doubled.coeff(i), BigInt::from(2))
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        (0..=self.doubled.degree_bound()).map(|i| self.coeff(i)).collect()
    }
}

impl fmt::Display for DoubledPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `Q(x)` from face numbers and interior face numbers.
pub fn q_from_counts(f: &FVector, f_int: &InteriorFVector) -> DoubledPoly {
    let r = &f.to_poly() + &f_int.to_poly();
    DoubledPoly {
        doubled: r.negate_arg(),
    }
}

/// `Q(x)` of a reciprocal complex, its boundary being the faces with
/// `m_F = 0` together with `∅`.
pub fn macdonald_q(complex: &Complex) -> Result<DoubledPoly> {
    let table = multiplicities(complex);
    let f_int = interior_f_vector(complex, &table)?;
    Ok(q_from_counts(&f_vector(complex), &f_int))
}

pub fn verify_macdonald(complex: &Complex) -> Result<RelationReport> {
    let table = multiplicities(complex);
    let f_int = interior_f_vector(complex, &table)?;
    Ok(verify_macdonald_counts(&f_vector(complex), &f_int))
}

/// Row `k` compares the `x^k` coefficients of `(-1)^d 2Q(-x)` and
/// `2Q(1+x) + 2c`.
pub fn verify_macdonald_counts(f: &FVector, f_int: &InteriorFVector) -> RelationReport {
    let d = f.d();
    let chi = f.reduced_euler();
    let q = q_from_counts(f, f_int).doubled;
    let lhs = q.negate_arg().scale(&BigInt::from(sign(d as i64)));
    let mut rhs = q.shift_arg(1);
    if d % 2 == 1 {
        let c0 = rhs.coeff(0) + &chi * 2;
        let mut coeffs = rhs.into_coeffs();
        coeffs[0] = c0;
        rhs = IntPoly::from_coeffs(coeffs);
    }
    let mut report = RelationReport::new(RelationId::Macdonald, d, chi).with_scale(2);
    report.compare_polys("coeff", &lhs, &rhs);
    report
}

/// `f^int = f - f^∂` for a hypothetical boundary vector
/// `(f^∂_{-1}, ..., f^∂_{d-1})` with `f^∂_{-1} = 1`.
pub fn interior_from_boundary(f: &FVector, boundary: &[BigInt]) -> Result<InteriorFVector> {
    if boundary.len() != f.d() + 1 {
        return Err(Error::DegreeMismatch {
            expected: f.d() + 1,
            found: boundary.len(),
        });
    }
    if !boundary[0].is_one() {
        return Err(Error::InvalidParameter("boundary vector must start with 1 for the empty face".into()));
    }
    Ok(InteriorFVector::new(
        f.entries()[1..]
            .iter()
            .zip(&boundary[1..])
            .map(|(a, b)| a - b)
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::verify_ds_f_counts;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn cylinder_counts() -> FVector {
        FVector::from_i64s(&[1, 4, 8, 4]).unwrap()
    }

    #[test]
    fn octahedron_q() {
        let f = FVector::from_i64s(&[1, 6, 12, 8]).unwrap();
        let fi = InteriorFVector::from_i64s(&[6, 12, 8]);
        let q = q_from_counts(&f, &fi);
        // 2Q(y) = 1 - 12y + 24y^2 - 16y^3
        assert_eq!(q.doubled, IntPoly::from_i64s(&[1, -12, 24, -16]));
        assert_eq!(q.coeff(0), BigRational::new(1.into(), 2.into()));
        assert!(verify_macdonald_counts(&f, &fi).holds);
    }

    #[test]
    fn true_boundary_counts() {
        let f = cylinder_counts();
        let fi = interior_from_boundary(&f, &ints(&[1, 4, 4, 0])).unwrap();
        assert_eq!(fi, InteriorFVector::from_i64s(&[0, 4, 4]));
        let r = verify_macdonald_counts(&f, &fi);
        assert!(r.holds, "{r}");
        assert_eq!(r.scale, 2);
    }

    #[test]
    fn spurious_boundary_counts() {
        let f = cylinder_counts();
        let fi = interior_from_boundary(&f, &ints(&[1, 5, 7, 2])).unwrap();
        assert_eq!(fi, InteriorFVector::from_i64s(&[-1, 1, 2]));
        assert!(verify_macdonald_counts(&f, &fi).holds);
        let r = verify_ds_f_counts(&f, &fi);
        assert!(!r.holds);
        let k3 = r.row("coeff", &[3]).unwrap();
        assert_eq!((k3.lhs.clone(), k3.rhs.clone()), (BigInt::from(4), BigInt::from(2)));
        for k in 1..=3 {
            assert!(!r.row("coeff", &[k]).unwrap().residual.is_zero());
        }
    }

    #[test]
    fn quadratic_coefficient_is_the_reduced_relation() {
        // In d = 3 the x^2 row reads -r2 = r2 - 3 r3 with r_i = f_{i-1} + f^int_{i-1},
        // i.e. 2 f_1 + 2 f^int_1 = 3 f^int_2 + 3 f_2.
        let f = cylinder_counts();
        let fi = InteriorFVector::from_i64s(&[0, 4, 4]);
        let lhs = f.get(1) * 2 + fi.get(1) * 2;
        let rhs = fi.get(2) * 3 + f.get(2) * 3;
        assert_eq!(lhs, BigInt::from(24));
        assert_eq!(lhs, rhs);
        let row = verify_macdonald_counts(&f, &fi).row("coeff", &[2]).cloned().unwrap();
        let r2 = f.get(1) + fi.get(1);
        let r3 = f.get(2) + fi.get(2);
        assert_eq!(row.lhs, -r2.clone());
        assert_eq!(row.rhs, &r2 - r3 * 3);
        assert!(row.residual.is_zero());
    }

    #[test]
    fn bad_boundary_vectors() {
        let f = cylinder_counts();
        assert!(interior_from_boundary(&f, &ints(&[1, 4, 4])).is_err());
        assert!(interior_from_boundary(&f, &ints(&[0, 4, 4, 0])).is_err());
    }

    #[test]
    fn non_reciprocal_complex_is_rejected() {
        let c = Complex::from_facets(&[[1, 2, 3], [1, 2, 4], [1, 2, 5]]).unwrap();
        assert!(matches!(verify_macdonald(&c), Err(Error::NotReciprocal { .. })));
        assert!(macdonald_q(&c).is_err());
    }
}
