//! Hilbert series of Stanley–Reisner rings as exact rational functions, and
//! the reciprocity `F(1/λ) = (-1)^d F(λ)`-type identities they satisfy.
//!
//! Counting monomials face by face gives
//!
//! ```text
//! F(k[Δ], λ) = Σ_F (λ/(1-λ))^|F| = Σ_F λ^|F| (1-λ)^(d-|F|) / (1-λ)^d = h̃(λ) / (1-λ)^d
//! ```
//!
//! and with colors, `λ_v -> ω_κ(v)`, the numerator becomes the flag
//! polynomial `h̃(ω)` over `Π (1-ω_i)^(a_i)`. Denominators are kept as
//! exponents and never expanded.

use std::fmt;

use num_bigint::BigInt;

use crate::balanced::{colored_multiplicity_poly, flag_h, Coloring};
use crate::complex::Complex;
use crate::enumeration::{f_vector, h_vector, multiplicities, multiplicity_poly};
use crate::poly::{diff, mdelta_expand, IntPoly, MDeltaCoeffs, MPoly};
use crate::relations::{RelationId, RelationReport};

/// `numerator(λ) / (1-λ)^denominator_exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    pub numerator: IntPoly,
    pub denominator_exponent: usize,
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / (1 - t)^{}", self.numerator, self.denominator_exponent)
    }
}

/// `numerator(ω) / Π_i (1-ω_i)^(denominator_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredSeries {
    pub numerator: MPoly,
    pub denominator: Vec<u32>,
}

/// `Σ_F λ^|F| (1-λ)^(d-|F|)`, the numerator obtained by counting monomials.
pub fn face_sum_numerator(complex: &Complex) -> IntPoly {
    let d = complex.d();
    let mut out = IntPoly::zero(d);
    for (k, group) in complex.faces_by_dim().iter().enumerate() {
        let term = &IntPoly::monomial(k, k) * &IntPoly::linear_power(1, -1, (d - k) as u32);
        out = &out + &term.scale(&BigInt::from(group.len()));
    }
    out
}

/// `h̃(λ)/(1-λ)^d`, checked against the monomial count after clearing
/// denominators.
pub fn hilbert_series(complex: &Complex) -> RationalSeries {
    let numerator = h_vector(&f_vector(complex)).to_poly();
    assert_eq!(numerator, face_sum_numerator(complex), "Hilbert numerator mismatch");
    RationalSeries {
        numerator,
        denominator_exponent: complex.d(),
    }
}

/// `Σ_F ω^b(F) (1-ω)^(a-b(F))`, the colored monomial count.
pub fn colored_face_sum_numerator(complex: &Complex, coloring: &Coloring) -> MPoly {
    let a = coloring.a();
    let m = a.len();
    let mut out = MPoly::zero(a);
    for face in complex.faces() {
        let b = coloring.b_of(face);
        let mut term = MPoly::monomial(&b, &b).expect("b <= b");
        for (i, (&ai, &bi)) in a.iter().zip(&b).enumerate() {
            term = &term * &MPoly::linear_power(m, i, 1, -1, ai - bi);
        }
        out = &out + &term;
    }
    out
}

pub fn colored_hilbert_series(complex: &Complex, coloring: &Coloring) -> ColoredSeries {
    let numerator = colored_face_sum_numerator(complex, coloring);
    assert_eq!(
        numerator,
        flag_h(complex, coloring).to_mpoly(),
        "colored Hilbert numerator mismatch"
    );
    ColoredSeries {
        numerator,
        denominator: coloring.a().to_vec(),
    }
}

/// Reciprocity of the Hilbert series followed by `λ = x/(x+1)`:
///
/// * `series k`: `λ^d h̃(1/λ)` against `Σ_F m_F λ^|F| (1-λ)^(d-|F|)`.
/// * `routes k`: the series numerator `N`, pushed through the change of
///   variables as `Σ_j N_j x^j (x+1)^(d-j)` by direct multiplication, against
///   `Σ_i h_i (x+1)^i x^(d-i)` from the δ-basis expansion.
/// * `faces k`: the same against `Σ_F m_F x^|F|`.
pub fn verify_sr_reciprocity(complex: &Complex) -> RelationReport {
    let d = complex.d();
    let table = multiplicities(complex);
    let series = hilbert_series(complex);
    let mut report = RelationReport::new(
        RelationId::SrReciprocity,
        d,
        f_vector(complex).reduced_euler(),
    );

    let reciprocal = series.numerator.reversed();
    let mut face_side = IntPoly::zero(d);
    for (id, face) in complex.faces().iter().enumerate() {
        let k = face.len();
        let term = &IntPoly::monomial(k, k) * &IntPoly::linear_power(1, -1, (d - k) as u32);
        face_side = &face_side + &term.scale(&BigInt::from(table.m(id)));
    }
    report.compare_polys("series", &reciprocal, &face_side);

    let mut sr_route = IntPoly::zero(d);
    for (j, nj) in reciprocal.coeffs().iter().enumerate() {
        let term = &IntPoly::monomial(j, j) * &IntPoly::linear_power(1, 1, (d - j) as u32);
        sr_route = &sr_route + &term.scale(nj);
    }
    let direct = crate::poly::delta_expand(&crate::poly::DeltaCoeffs::new(series.numerator.into_coeffs()));
    report.compare_polys("routes", &sr_route, &direct);
    report.compare_polys("faces", &sr_route, &multiplicity_poly(complex, &table));
    report
}

/// Colored version: the numerator `N(ω) = Σ_b h_b ω^(a-b)` pushed through
/// `ω_i = x_i/(x_i+1)` by direct multiplication, against
/// `Σ_F m_F x^b(F)` (`faces`) and against `Σ_b h_b (x+1)^b x^(a-b)` from the
/// δ-basis expansion (`routes`).
pub fn verify_sr_reciprocity_colored(complex: &Complex, coloring: &Coloring) -> RelationReport {
    let a = coloring.a();
    let m = a.len();
    let table = multiplicities(complex);
    let series = colored_hilbert_series(complex, coloring);
    let mut report = RelationReport::new(
        RelationId::SrReciprocityColored,
        complex.d(),
        f_vector(complex).reduced_euler(),
    );

    let mut sr_route = MPoly::zero(a);
    for (b, hb) in series.numerator.terms() {
        let j = diff(a, b);
        let mut term = MPoly::from_terms(&j, [(j.clone(), hb.clone())]).expect("j <= j");
        for (i, &bi) in b.iter().enumerate() {
            term = &term * &MPoly::linear_power(m, i, 1, 1, bi);
        }
        sr_route = &sr_route + &term;
    }
    let reflected = MDeltaCoeffs::new(a, series.numerator.terms().map(|(b, c)| (diff(a, b), c.clone())))
        .expect("a - b <= a");
    report.compare_mpolys("routes", &sr_route, &mdelta_expand(&reflected));
    report.compare_mpolys("faces", &sr_route, &colored_multiplicity_poly(complex, coloring, &table));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balanced::{validate_balanced, verify_flag_reciprocity};
    use proptest::prelude::*;

    fn octahedron() -> Complex {
        let mut facets = Vec::new();
        for a in [1, 2] {
            for b in [3, 4] {
                for c in [5, 6] {
                    facets.push(vec![a, b, c]);
                }
            }
        }
        Complex::from_facets(&facets).unwrap()
    }

    fn side(r: &RelationReport, label: &str) -> Vec<i64> {
        r.rows
            .iter()
            .filter(|x| x.label == label)
            .map(|x| i64::try_from(&x.lhs).unwrap())
            .collect()
    }

    #[test]
    fn series_examples() {
        let point = Complex::from_facets(&[[1]]).unwrap();
        let s = hilbert_series(&point);
        assert_eq!((s.numerator.clone(), s.denominator_exponent), (IntPoly::from_i64s(&[1, 0]), 1));
        let s = hilbert_series(&octahedron());
        assert_eq!(s.numerator, IntPoly::from_i64s(&[1, 3, 3, 1]));
        assert_eq!(s.denominator_exponent, 3);
        let s = hilbert_series(&Complex::empty());
        assert_eq!((s.numerator, s.denominator_exponent), (IntPoly::from_i64s(&[1]), 0));
    }

    #[test]
    fn reciprocity_routes() {
        let r = verify_sr_reciprocity(&octahedron());
        assert!(r.holds, "{r}");
        assert_eq!(side(&r, "routes"), vec![1, 6, 12, 8]);
        let glued = Complex::from_facets(&[[1, 2, 3], [1, 2, 4], [1, 2, 5]]).unwrap();
        let r = verify_sr_reciprocity(&glued);
        assert!(r.holds);
        assert_eq!(side(&r, "routes"), vec![0, 0, 2, 3]);
        let point = Complex::from_facets(&[[1]]).unwrap();
        let r = verify_sr_reciprocity(&point);
        assert!(r.holds);
        assert_eq!(side(&r, "routes"), vec![0, 1]);
    }

    #[test]
    fn colored_routes() {
        let c = octahedron();
        let k = validate_balanced(&c, &(1..=6).map(|v| (v, (v + 1) / 2)).collect()).unwrap();
        let r = verify_sr_reciprocity_colored(&c, &k);
        assert!(r.holds, "{r}");
        let flag = verify_flag_reciprocity(&c, &k);
        let ours: Vec<_> = r.rows.iter().filter(|x| x.label == "faces").map(|x| (x.index.clone(), x.lhs.clone())).collect();
        let theirs: Vec<_> = flag.rows.iter().filter(|x| x.label == "coeff").map(|x| (x.index.clone(), x.lhs.clone())).collect();
        assert_eq!(ours, theirs);

        let v = Complex::from_facets(&[[1]]).unwrap();
        let k = validate_balanced(&v, &[(1, 1)].into_iter().collect()).unwrap();
        let r = verify_sr_reciprocity_colored(&v, &k);
        assert!(r.holds);
        assert_eq!(r.row("faces", &[1]).unwrap().lhs, BigInt::from(1));
        assert_eq!(r.rows.iter().filter(|x| x.label == "faces").count(), 1);
    }

    fn arb_complex() -> impl Strategy<Value = Complex> {
        (1usize..=8).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::btree_set(1i64..=n as i64, 1..=n), 1..=6)
                .prop_map(|facets| {
                    let facets: Vec<Vec<i64>> = facets.into_iter().map(|s| s.into_iter().collect()).collect();
                    Complex::from_facets(&facets).unwrap()
                })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn routes_agree(c in arb_complex()) {
            prop_assert!(verify_sr_reciprocity(&c).holds);
        }
    }
}
