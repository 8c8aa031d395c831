//! Exact checks of the Dehn–Sommerville type identities for face numbers,
//! and the classification of complexes by their face multiplicities.
//!
//! Each verifier returns a [`RelationReport`] with one row per compared
//! coefficient or scalar relation. Polynomial identities are compared in
//! the monomial basis after expanding the `(x+1)^i x^(d-i)` basis.
//!
//! Most checks have a `*_counts` variant that works on face-number vectors
//! alone, so hypothetical count vectors can be tested without a complex.

pub mod macdonald;
mod report;

pub use macdonald::{macdonald_q, verify_macdonald, verify_macdonald_counts, DoubledPoly};
pub use report::{RelationId, RelationReport, Row};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::enumeration::{
    f_vector, h_vector, interior_f_vector, multiplicities, multiplicity_poly, FVector, HVector,
    InteriorFVector, MultiplicityTable,
};
use crate::error::{Error, Result};
use crate::homology::{is_homology_manifold, FieldSpec};
use crate::poly::{binomial, delta_expand, sign, DeltaCoeffs, IntPoly};

/// A face with its multiplicity, named by external vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceWitness {
    pub face: Vec<u32>,
    #[serde(with = "crate::decimal::small")]
    pub m: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifoldFailure {
    pub face: Vec<u32>,
    /// Reduced Betti numbers of the link, starting at index -1.
    pub betti: Vec<u64>,
}

/// Which multiplicity classes a complex belongs to, with a witness face
/// for every failed class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub reciprocal: bool,
    pub semi_eulerian: bool,
    pub eulerian: bool,
    pub homology_manifold: bool,
    pub field: String,
    pub reciprocal_witness: Option<FaceWitness>,
    pub semi_eulerian_witness: Option<FaceWitness>,
    /// For a semi-Eulerian complex that is not Eulerian this is `∅`.
    pub eulerian_witness: Option<FaceWitness>,
    pub homology_manifold_witness: Option<ManifoldFailure>,
}

pub fn classify(complex: &Complex, field: FieldSpec) -> Classification {
    let table = multiplicities(complex);
    classify_with(complex, &table, field)
}

pub fn classify_with(complex: &Complex, table: &MultiplicityTable, field: FieldSpec) -> Classification {
    let witness = |w: Option<(crate::complex::Face, i64)>| {
        w.map(|(f, m)| FaceWitness {
            face: complex.face_labels(&f),
            m,
        })
    };
    let reciprocal_witness = witness(table.reciprocity_witness(complex));
    let semi_eulerian_witness = witness(table.semi_eulerian_witness(complex));
    let eulerian_witness = match &semi_eulerian_witness {
        Some(w) => Some(w.clone()),
        None if table.m_empty() != 1 => Some(FaceWitness {
            face: Vec::new(),
            m: table.m_empty(),
        }),
        None => None,
    };
    let manifold = is_homology_manifold(complex, field);
    Classification {
        reciprocal: reciprocal_witness.is_none(),
        semi_eulerian: semi_eulerian_witness.is_none(),
        eulerian: eulerian_witness.is_none(),
        homology_manifold: manifold.is_manifold,
        field: field.to_string(),
        reciprocal_witness,
        semi_eulerian_witness,
        eulerian_witness,
        homology_manifold_witness: manifold.witness.map(|w| ManifoldFailure {
            face: complex.face_labels(&w.face),
            betti: w.betti.values().to_vec(),
        }),
    }
}

/// Fails with the first face violating `m_F ∈ {0, 1}`.
pub fn require_reciprocal(complex: &Complex, table: &MultiplicityTable) -> Result<()> {
    match table.reciprocity_witness(complex) {
        Some((face, m)) => Err(Error::NotReciprocal {
            face: complex.face_labels(&face),
            multiplicity: m,
        }),
        None => Ok(()),
    }
}

/// Fails with the first non-empty face with `m_F != 1`.
pub fn require_semi_eulerian(complex: &Complex, table: &MultiplicityTable) -> Result<()> {
    match table.semi_eulerian_witness(complex) {
        Some((face, m)) => Err(Error::NotSemiEulerian {
            face: complex.face_labels(&face),
            multiplicity: m,
        }),
        None => Ok(()),
    }
}

/// `Σ_i h_i x^i (x+1)^(d-i)` against `f̃(x)`.
pub fn verify_fh_tilde(complex: &Complex) -> RelationReport {
    verify_fh_tilde_counts(&f_vector(complex))
}

pub fn verify_fh_tilde_counts(f: &FVector) -> RelationReport {
    let h = h_vector(f);
    let lhs = delta_expand(&DeltaCoeffs::new(h.to_poly().reversed().into_coeffs()));
    let mut report = RelationReport::new(RelationId::FhTilde, f.d(), f.reduced_euler());
    report.compare_polys("coeff", &lhs, &f.to_poly());
    report
}

/// `Σ_i h_i (x+1)^i x^(d-i)` against `Σ_F m_F x^|F|`.
pub fn verify_reciprocity(complex: &Complex) -> RelationReport {
    let table = multiplicities(complex);
    verify_reciprocity_with(complex, &table)
}

pub fn verify_reciprocity_with(complex: &Complex, table: &MultiplicityTable) -> RelationReport {
    let f = f_vector(complex);
    let h = h_vector(&f);
    let lhs = delta_expand(&DeltaCoeffs::new(h.entries().to_vec()));
    let mut report = RelationReport::new(RelationId::Reciprocity, f.d(), f.reduced_euler());
    report.compare_polys("coeff", &lhs, &multiplicity_poly(complex, table));
    report
}

/// Face numbers from interior face numbers, for reciprocal complexes:
///
/// * `coeff k >= 1`: `f_{k-1} = Σ_{i>=k} (-1)^(d-i) C(i,k) f^int_{i-1}`
/// * `coeff 0`: `f_{-1} = Σ_{i>=1} (-1)^(d-i) f^int_{i-1} + (-1)^d m_∅`
/// * `euler`: `χ(Δ) = (-1)^(d-1) χ(Δ^int)`
pub fn verify_ds_f(complex: &Complex) -> Result<RelationReport> {
    let table = multiplicities(complex);
    let f_int = interior_f_vector(complex, &table)?;
    Ok(verify_ds_f_counts(&f_vector(complex), &f_int))
}

pub fn verify_ds_f_counts(f: &FVector, f_int: &InteriorFVector) -> RelationReport {
    let d = f.d();
    assert_eq!(f_int.d(), d, "interior vector length must equal d");
    let fint = |i: usize| f_int.get(i - 1);
    let mut report = RelationReport::new(RelationId::DsF, d, f.reduced_euler());
    let m_empty = report.m_empty.clone();
    let k0: BigInt = (1..=d).map(|i| fint(i) * sign((d - i) as i64)).sum::<BigInt>() + m_empty * sign(d as i64);
    report.push("coeff", vec![0], f.get(-1).clone(), k0);
    for k in 1..=d {
        let rhs = (k..=d)
            .map(|i| fint(i) * binomial(i as u32, k as u32) * sign((d - i) as i64))
            .sum();
        report.push("coeff", vec![k as u32], f.get(k as isize - 1).clone(), rhs);
    }
    report.push("euler", vec![], f.euler(), f_int.euler() * sign(d as i64 - 1));
    report
}

/// Interior face numbers from face numbers, for reciprocal complexes:
/// `f^int_{k-1} = Σ_{i>=k} (-1)^(d-i) C(i,k) f_{i-1}` for `k >= 1`.
pub fn verify_ds_f_inverse(complex: &Complex) -> Result<RelationReport> {
    let table = multiplicities(complex);
    let f_int = interior_f_vector(complex, &table)?;
    Ok(verify_ds_f_inverse_counts(&f_vector(complex), &f_int))
}

pub fn verify_ds_f_inverse_counts(f: &FVector, f_int: &InteriorFVector) -> RelationReport {
    let d = f.d();
    assert_eq!(f_int.d(), d, "interior vector length must equal d");
    let mut report = RelationReport::new(RelationId::DsFInverse, d, f.reduced_euler());
    for k in 1..=d {
        let rhs = (k..=d)
            .map(|i| f.get(i as isize - 1) * binomial(i as u32, k as u32) * sign((d - i) as i64))
            .sum();
        report.push("coeff", vec![k as u32], f_int.get(k - 1).clone(), rhs);
    }
    report
}

/// Interior face numbers predicted by [`verify_ds_f_inverse_counts`].
pub fn predicted_interior(f: &FVector) -> InteriorFVector {
    let d = f.d();
    InteriorFVector::new(
        (1..=d)
            .map(|k| {
                (k..=d)
                    .map(|i| f.get(i as isize - 1) * binomial(i as u32, k as u32) * sign((d - i) as i64))
                    .sum()
            })
            .collect(),
    )
}

/// The h-vector defect against the errors of faces, valid for every
/// complex:
///
/// * `poly`: `Σ_i (h_i - h_{d-i}) (x+1)^i x^(d-i) = Σ_F (m_F - 1) x^|F|`
/// * `scalar i`: `h_{d-i} - h_i = (-1)^i Σ_F C(d-|F|, i) ε_F`
pub fn verify_ds_h(complex: &Complex) -> RelationReport {
    let table = multiplicities(complex);
    verify_ds_h_with(complex, &table)
}

pub fn verify_ds_h_with(complex: &Complex, table: &MultiplicityTable) -> RelationReport {
    let f = f_vector(complex);
    let h = h_vector(&f);
    let d = f.d();
    let mut report = RelationReport::new(RelationId::DsH, d, f.reduced_euler());

    let hp = h.to_poly();
    let lhs = delta_expand(&DeltaCoeffs::new((&hp - &hp.reversed()).into_coeffs()));
    let mut rhs = vec![BigInt::zero(); d + 1];
    // Σ_F ε_F grouped by |F|.
    let mut eps_by_size = vec![BigInt::zero(); d + 1];
    for (id, face) in complex.faces().iter().enumerate() {
        rhs[face.len()] += table.m(id) - 1;
        eps_by_size[face.len()] += table.epsilon(complex, id);
    }
    report.compare_polys("poly", &lhs, &IntPoly::from_coeffs(rhs));

    for i in 0..=d {
        let sum: BigInt = eps_by_size
            .iter()
            .enumerate()
            .map(|(s, e)| e * binomial((d - s) as u32, i as u32))
            .sum();
        report.push("scalar", vec![i as u32], h.get(d - i) - h.get(i), sum * sign(i as i64));
    }
    report
}

/// For semi-Eulerian complexes: `h_{d-i} - h_i = (-1)^i C(d,i) (χ̃ - (-1)^(d-1))`.
/// Eulerian complexes additionally get `palindrome` rows `h_{d-i} = h_i`.
pub fn verify_semi_eulerian_h(complex: &Complex) -> Result<RelationReport> {
    let table = multiplicities(complex);
    require_semi_eulerian(complex, &table)?;
    Ok(verify_semi_eulerian_h_counts(&h_vector(&f_vector(complex)), &f_vector(complex).reduced_euler()))
}

pub fn verify_semi_eulerian_h_counts(h: &HVector, chi_reduced: &BigInt) -> RelationReport {
    let d = h.d();
    let mut report = RelationReport::new(RelationId::SemiEulerianH, d, chi_reduced.clone());
    let defect = chi_reduced - sign(d as i64 - 1);
    for i in 0..=d {
        let rhs = &defect * binomial(d as u32, i as u32) * sign(i as i64);
        report.push("scalar", vec![i as u32], h.get(d - i) - h.get(i), rhs);
    }
    if defect.is_zero() {
        for i in 0..=d {
            report.push("palindrome", vec![i as u32], h.get(d - i).clone(), h.get(i).clone());
        }
    }
    report
}

/// Runs one relation; relations with unmet preconditions return the
/// precondition error.
pub fn verify(complex: &Complex, relation: RelationId) -> Result<RelationReport> {
    match relation {
        RelationId::FhTilde => Ok(verify_fh_tilde(complex)),
        RelationId::Reciprocity => Ok(verify_reciprocity(complex)),
        RelationId::DsF => verify_ds_f(complex),
        RelationId::DsFInverse => verify_ds_f_inverse(complex),
        RelationId::DsH => Ok(verify_ds_h(complex)),
        RelationId::SemiEulerianH => verify_semi_eulerian_h(complex),
        RelationId::Macdonald => verify_macdonald(complex),
        RelationId::SrReciprocity => Ok(crate::stanley_reisner::verify_sr_reciprocity(complex)),
        other => Err(Error::InvalidParameter(format!("relation {other} needs a coloring"))),
    }
}
