//! Face counts and the quantities derived from them: f- and h-vectors,
//! Euler characteristics, face multiplicities `m_F`, errors `ε_F` and
//! interior face counts.
//!
//! The multiplicity of a face is
//!
//! ```text
//! m_F = Σ_{F ⊆ G ∈ Δ} (-1)^(d-|G|) = (-1)^(d-1-|F|) χ̃(lk F)
//! ```
//!
//! and both expressions are implemented independently (see
//! [`MultiplicityMethod`]).

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Face};
use crate::error::{Error, Result};
use crate::poly::{binomial, sign, IntPoly};

/// Face numbers `(f_{-1}, f_0, ..., f_{d-1})` with `f_{-1} = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector(Vec<BigInt>);

impl FVector {
    /// Validates `f_{-1} = 1`, non-negative entries and `f_{d-1} >= 1`.
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.first() != Some(&BigInt::one()) {
            return Err(Error::InvalidParameter("f-vector must start with f_{-1} = 1".into()));
        }
        if entries.iter().any(|x| x < &BigInt::zero()) {
            return Err(Error::InvalidParameter("f-vector entries must be non-negative".into()));
        }
        if entries.last().is_some_and(|x| x.is_zero()) {
            return Err(Error::InvalidParameter("top face number f_{d-1} must be positive".into()));
        }
        Ok(FVector(entries))
    }

    pub fn from_i64s(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// `d`, so the entries are `f_{-1} .. f_{d-1}`.
    pub fn d(&self) -> usize {
        self.0.len() - 1
    }

    /// `f_i` for `-1 <= i <= d-1`.
    pub fn get(&self, i: isize) -> &BigInt {
        &self.0[(i + 1) as usize]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    /// `f̃(x) = Σ_i f_{i-1} x^i`.
    pub fn to_poly(&self) -> IntPoly {
        IntPoly::from_coeffs(self.0.clone())
    }

    /// `χ = Σ_{i>=1} (-1)^(i-1) f_{i-1}`.
    pub fn euler(&self) -> BigInt {
        self.0
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, f)| f * sign(i as i64 - 1))
            .sum()
    }

    /// `χ̃ = χ - 1`.
    pub fn reduced_euler(&self) -> BigInt {
        self.euler() - 1
    }
}

/// `(h_0, ..., h_d)`; entries may be negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector(Vec<BigInt>);

impl HVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        assert!(!entries.is_empty(), "h-vector needs at least h_0");
        HVector(entries)
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        Self::new(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn d(&self) -> usize {
        self.0.len() - 1
    }

    pub fn get(&self, i: usize) -> &BigInt {
        &self.0[i]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    /// `h̃(x) = Σ_i h_i x^i`.
    pub fn to_poly(&self) -> IntPoly {
        IntPoly::from_coeffs(self.0.clone())
    }
}

/// Interior face numbers `(f^int_0, ..., f^int_{d-1})`.
///
/// Counts computed from a reciprocal complex satisfy `0 <= f^int_i <= f_i`;
/// hand-built vectors are not checked, so hypothetical solutions of linear
/// systems can be represented too.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InteriorFVector(Vec<BigInt>);

impl InteriorFVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        InteriorFVector(entries)
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        Self::new(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn d(&self) -> usize {
        self.0.len()
    }

    /// `f^int_i` for `0 <= i <= d-1`.
    pub fn get(&self, i: usize) -> &BigInt {
        &self.0[i]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    /// `f̃^int(x) = Σ_{i>=1} f^int_{i-1} x^i`, with a zero constant term.
    pub fn to_poly(&self) -> IntPoly {
        let mut coeffs = vec![BigInt::zero()];
        coeffs.extend(self.0.iter().cloned());
        IntPoly::from_coeffs(coeffs)
    }

    /// `χ(Δ^int) = Σ_{i>=1} (-1)^(i-1) f^int_{i-1}`.
    pub fn euler(&self) -> BigInt {
        self.0
            .iter()
            .enumerate()
            .map(|(i, f)| f * sign(i as i64))
            .sum()
    }
}

pub fn f_vector(complex: &Complex) -> FVector {
    FVector(
        complex
            .faces_by_dim()
            .iter()
            .map(|group| BigInt::from(group.len()))
            .collect(),
    )
}

/// Coefficients of `Σ_i f_{i-1} x^i (1-x)^(d-i)`:
/// `h_k = Σ_{i<=k} (-1)^(k-i) C(d-i, k-i) f_{i-1}`.
pub fn h_vector(f: &FVector) -> HVector {
    let d = f.d();
    let h = (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| &f.0[i] * binomial((d - i) as u32, (k - i) as u32) * sign((k - i) as i64))
                .sum()
        })
        .collect();
    HVector(h)
}

/// Inverse of [`h_vector`], from `f(x) = h(x+1)`:
/// `f_{k-1} = Σ_{i<=k} C(d-i, k-i) h_i`.
pub fn h_to_f(h: &HVector) -> FVector {
    let d = h.d();
    let f = (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| &h.0[i] * binomial((d - i) as u32, (k - i) as u32))
                .sum()
        })
        .collect();
    FVector(f)
}

pub fn reduced_euler(complex: &Complex) -> BigInt {
    f_vector(complex).reduced_euler()
}

pub fn euler(complex: &Complex) -> BigInt {
    f_vector(complex).euler()
}

/// Which of the two equal expressions for `m_F` to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultiplicityMethod {
    /// `Σ_{F ⊆ G ∈ Δ} (-1)^(d-|G|)`.
    SupersetSum,
    /// `(-1)^(d-1-|F|) χ̃(lk F)`, building the link.
    LinkEuler,
}

pub fn multiplicity(complex: &Complex, face: &Face, method: MultiplicityMethod) -> Result<i64> {
    if !complex.contains(face) {
        return Err(Error::FaceNotInComplex(complex.face_labels(face)));
    }
    let d = complex.d() as i64;
    Ok(match method {
        MultiplicityMethod::SupersetSum => complex.faces()
            [complex.face_id(face).expect("checked")..]
            .iter()
            .filter(|g| face.is_subset(g))
            .map(|g| sign(d - g.len() as i64))
            .sum(),
        MultiplicityMethod::LinkEuler => {
            let chi = link_reduced_euler(complex, face)?;
            sign(d - 1 - face.len() as i64) * chi
        }
    })
}

fn link_reduced_euler(complex: &Complex, face: &Face) -> Result<i64> {
    let link = complex.link(face)?;
    Ok(link
        .faces_by_dim()
        .iter()
        .enumerate()
        .map(|(k, group)| sign(k as i64 - 1) * group.len() as i64)
        .sum())
}

/// `m_F` for every face, indexed like [`Complex::faces`].
///
/// Values are `i64`: `|m_F|` never exceeds the number of faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTable {
    d: usize,
    values: Vec<i64>,
}

impl MultiplicityTable {
    pub fn d(&self) -> usize {
        self.d
    }

    /// Multiplicity of the face with id `id` in the source complex.
    pub fn m(&self, id: usize) -> i64 {
        self.values[id]
    }

    pub fn get(&self, complex: &Complex, face: &Face) -> Option<i64> {
        complex.face_id(face).map(|id| self.values[id])
    }

    /// `m_∅ = (-1)^(d-1) χ̃(Δ)`.
    pub fn m_empty(&self) -> i64 {
        self.values[0]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `ε_F = (-1)^(d-1-|F|) (m_F - 1)` for the face with id `id`.
    pub fn epsilon(&self, complex: &Complex, id: usize) -> i64 {
        let size = complex.faces()[id].len() as i64;
        sign(self.d as i64 - 1 - size) * (self.values[id] - 1)
    }

    /// First non-empty face whose multiplicity is outside `{0, 1}`.
    pub fn reciprocity_witness(&self, complex: &Complex) -> Option<(Face, i64)> {
        self.values
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &m)| m != 0 && m != 1)
            .map(|(id, &m)| (complex.faces()[id].clone(), m))
    }

    /// First non-empty face with `m_F != 1`.
    pub fn semi_eulerian_witness(&self, complex: &Complex) -> Option<(Face, i64)> {
        self.values
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &m)| m != 1)
            .map(|(id, &m)| (complex.faces()[id].clone(), m))
    }
}

/// One descending sweep: each face `G` adds `(-1)^(d-|G|)` to all of its
/// subsets. Costs `Σ_G 2^|G|` hash lookups and builds no links.
pub fn multiplicities(complex: &Complex) -> MultiplicityTable {
    let d = complex.d() as i64;
    let mut values = vec![0i64; complex.num_faces()];
    for g in complex.faces() {
        let s = sign(d - g.len() as i64);
        for sub in g.subsets() {
            values[complex.face_id(&sub).expect("closed under subsets")] += s;
        }
    }
    MultiplicityTable {
        d: complex.d(),
        values,
    }
}

/// `ε_F = (-1)^(d-1-|F|) (m_F - 1)`, with `m_F` from the superset sum.
pub fn epsilon(complex: &Complex, face: &Face) -> Result<i64> {
    let m = multiplicity(complex, face, MultiplicityMethod::SupersetSum)?;
    Ok(sign(complex.d() as i64 - 1 - face.len() as i64) * (m - 1))
}

/// `ε_F = χ̃(lk F) - (-1)^(d-1-|F|)`, from the link directly.
pub fn epsilon_from_link(complex: &Complex, face: &Face) -> Result<i64> {
    let chi = link_reduced_euler(complex, face)?;
    Ok(chi - sign(complex.d() as i64 - 1 - face.len() as i64))
}

/// Counts the non-empty faces with `m_F = 1`, by dimension.
///
/// Requires the complex to be reciprocal; the first face violating
/// `m_F ∈ {0, 1}` is returned as the error witness.
pub fn interior_f_vector(complex: &Complex, table: &MultiplicityTable) -> Result<InteriorFVector> {
    if let Some((face, m)) = table.reciprocity_witness(complex) {
        return Err(Error::NotReciprocal {
            face: complex.face_labels(&face),
            multiplicity: m,
        });
    }
    let mut counts = vec![BigInt::zero(); complex.d()];
    for (id, face) in complex.faces().iter().enumerate().skip(1) {
        if table.m(id) == 1 {
            counts[face.len() - 1] += 1;
        }
    }
    Ok(InteriorFVector(counts))
}

/// `Σ_F m_F x^|F|`, degree bound `d`.
pub fn multiplicity_poly(complex: &Complex, table: &MultiplicityTable) -> IntPoly {
    let mut coeffs = vec![BigInt::zero(); complex.d() + 1];
    for (id, face) in complex.faces().iter().enumerate() {
        coeffs[face.len()] += table.m(id);
    }
    IntPoly::from_coeffs(coeffs)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceMultiplicity {
    pub face: Vec<u32>,
    #[serde(with = "crate::decimal::small")]
    pub m: i64,
}

/// JSON shape `{"f", "h", "m", "chi", "chi_reduced"}`, integers as strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationSummary {
    #[serde(with = "crate::decimal::vec")]
    pub f: Vec<BigInt>,
    #[serde(with = "crate::decimal::vec")]
    pub h: Vec<BigInt>,
    pub m: Vec<FaceMultiplicity>,
    #[serde(with = "crate::decimal")]
    pub chi: BigInt,
    #[serde(with = "crate::decimal")]
    pub chi_reduced: BigInt,
}

pub fn summarize(complex: &Complex) -> EnumerationSummary {
    let f = f_vector(complex);
    let h = h_vector(&f);
    let table = multiplicities(complex);
    let m = complex
        .faces()
        .iter()
        .enumerate()
        .map(|(id, face)| FaceMultiplicity {
            face: complex.face_labels(face),
            m: table.m(id),
        })
        .collect();
    EnumerationSummary {
        chi: f.euler(),
        chi_reduced: f.reduced_euler(),
        f: f.0,
        h: h.0,
        m,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{delta_expand, DeltaCoeffs};
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

    fn glued_triangles() -> Complex {
        Complex::from_facets(&[[1, 2, 3], [1, 2, 4], [1, 2, 5]]).unwrap()
    }

    fn glued_tetrahedra() -> Complex {
        Complex::from_facets(&[[1, 2, 3, 4], [1, 2, 5, 6], [1, 2, 7, 8]]).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    // Oracle: expand Σ f_{i-1} x^i (1-x)^(d-i) by repeated multiplication.
    fn h_oracle(f: &[i64]) -> Vec<i64> {
        let d = f.len() - 1;
        let mut out = vec![0i64; d + 1];
        for (i, &fi) in f.iter().enumerate() {
            let mut p = vec![0i64; i + 1];
            p[i] = 1;
            for _ in 0..d - i {
                let mut q = vec![0i64; p.len() + 1];
                for (k, c) in p.iter().enumerate() {
                    q[k] += c;
                    q[k + 1] -= c;
                }
                p = q;
            }
            for (k, c) in p.iter().enumerate() {
                out[k] += fi * c;
            }
        }
        out
    }

    #[test]
    fn f_vectors() {
        assert_eq!(f_vector(&octahedron()).entries(), ints(&[1, 6, 12, 8]).as_slice());
        assert_eq!(f_vector(&Complex::empty()).entries(), ints(&[1]).as_slice());
        assert_eq!(
            f_vector(&Complex::from_facets(&[[1, 2], [2, 3]]).unwrap()).entries(),
            ints(&[1, 3, 2]).as_slice()
        );
    }

    #[test]
    fn h_vectors_match_symbolic_expansion() {
        assert_eq!(h_oracle(&[1, 6, 12, 8]), vec![1, 3, 3, 1]);
        assert_eq!(h_oracle(&[1, 4, 8, 4]), vec![1, 1, 3, -1]);
        let h = h_vector(&FVector::from_i64s(&[1, 6, 12, 8]).unwrap());
        assert_eq!(h, HVector::from_i64s(&[1, 3, 3, 1]));
        let h = h_vector(&FVector::from_i64s(&[1, 4, 8, 4]).unwrap());
        assert_eq!(h, HVector::from_i64s(&[1, 1, 3, -1]));
        assert_eq!(h_vector(&FVector::from_i64s(&[1]).unwrap()), HVector::from_i64s(&[1]));
        assert_eq!(h_to_f(&h), FVector::from_i64s(&[1, 4, 8, 4]).unwrap());
    }

    #[test]
    fn fvector_validation() {
        assert!(FVector::from_i64s(&[2, 1]).is_err());
        assert!(FVector::from_i64s(&[1, -1, 1]).is_err());
        assert!(FVector::from_i64s(&[1, 4, 0]).is_err());
    }

    #[test]
    fn euler_characteristics() {
        let f = FVector::from_i64s(&[1, 4, 8, 4]).unwrap();
        assert_eq!(f.euler(), BigInt::zero());
        assert_eq!(f.reduced_euler(), BigInt::from(-1));
        assert_eq!(reduced_euler(&octahedron()), BigInt::one());
        assert_eq!(reduced_euler(&Complex::empty()), BigInt::from(-1));
        assert_eq!(euler(&octahedron()), BigInt::from(2));
    }

    #[test]
    fn example_multiplicities() {
        let tri = glued_triangles();
        let edge = tri.face_from_labels(&[1, 2]).unwrap();
        for method in [MultiplicityMethod::SupersetSum, MultiplicityMethod::LinkEuler] {
            assert_eq!(multiplicity(&tri, &edge, method).unwrap(), 2);
        }
        let tet = glued_tetrahedra();
        let edge = tet.face_from_labels(&[1, 2]).unwrap();
        for method in [MultiplicityMethod::SupersetSum, MultiplicityMethod::LinkEuler] {
            assert_eq!(multiplicity(&tet, &edge, method).unwrap(), -2);
        }
        for facet in tet.facets() {
            assert_eq!(multiplicity(&tet, facet, MultiplicityMethod::SupersetSum).unwrap(), 1);
        }
        assert!(multiplicity(&tet, &Face::from_indices([2, 4]), MultiplicityMethod::LinkEuler).is_err());
    }

    #[test]
    fn tables() {
        let oct = octahedron();
        let t = multiplicities(&oct);
        assert!(t.values().iter().all(|&m| m == 1));

        let edge = Complex::from_facets(&[[1, 2]]).unwrap();
        let t = multiplicities(&edge);
        assert_eq!(t.m_empty(), 0);
        assert_eq!(t.get(&edge, &edge.face_from_labels(&[1, 2]).unwrap()), Some(1));
        assert_eq!(t.get(&edge, &edge.face_from_labels(&[1]).unwrap()), Some(0));
        assert_eq!(t.get(&edge, &edge.face_from_labels(&[2]).unwrap()), Some(0));

        let tri = glued_triangles();
        let t = multiplicities(&tri);
        assert_eq!(multiplicity_poly(&tri, &t), IntPoly::from_i64s(&[0, 0, 2, 3]));
    }

    #[test]
    fn errors_of_faces() {
        let tri = glued_triangles();
        let edge = tri.face_from_labels(&[1, 2]).unwrap();
        assert_eq!(epsilon(&tri, &edge).unwrap(), 1);
        assert_eq!(epsilon_from_link(&tri, &edge).unwrap(), 1);
        let oct = octahedron();
        assert_eq!(epsilon(&oct, &Face::empty()).unwrap(), 0);
        for f in oct.faces() {
            assert_eq!(epsilon_from_link(&oct, f).unwrap(), 0);
        }
        let t = multiplicities(&tri);
        assert_eq!(t.epsilon(&tri, tri.face_id(&edge).unwrap()), 1);
    }

    #[test]
    fn interior_counts() {
        let oct = octahedron();
        let t = multiplicities(&oct);
        assert_eq!(interior_f_vector(&oct, &t).unwrap(), InteriorFVector::from_i64s(&[6, 12, 8]));

        let sub = Complex::from_facets(&[[1, 2, 4], [2, 3, 4], [1, 3, 4]]).unwrap();
        let t = multiplicities(&sub);
        assert_eq!(interior_f_vector(&sub, &t).unwrap(), InteriorFVector::from_i64s(&[1, 3, 3]));

        let tri = glued_triangles();
        let t = multiplicities(&tri);
        let err = interior_f_vector(&tri, &t).unwrap_err();
        assert_eq!(
            err,
            Error::NotReciprocal {
                face: vec![1, 2],
                multiplicity: 2
            }
        );
    }

    #[test]
    fn summary_json_round_trip() {
        let s = summarize(&glued_triangles());
        let text = serde_json::to_string(&s).unwrap();
        assert!(text.contains("\"chi_reduced\":\"0\""));
        let back: EnumerationSummary = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
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
        #![proptest_config(ProptestConfig::with_cases(150))]

        #[test]
        fn multiplicity_routes_agree(c in arb_complex()) {
            let t = multiplicities(&c);
            for (id, face) in c.faces().iter().enumerate() {
                let sum = multiplicity(&c, face, MultiplicityMethod::SupersetSum).unwrap();
                let link = multiplicity(&c, face, MultiplicityMethod::LinkEuler).unwrap();
                prop_assert_eq!(sum, link);
                prop_assert_eq!(t.m(id), sum);
                prop_assert_eq!(epsilon(&c, face).unwrap(), epsilon_from_link(&c, face).unwrap());
            }
            let chi = reduced_euler(&c);
            prop_assert_eq!(BigInt::from(t.m_empty()), chi * sign(c.d() as i64 - 1));
        }

        #[test]
        fn h_and_f_are_inverse(c in arb_complex()) {
            let f = f_vector(&c);
            let h = h_vector(&f);
            prop_assert_eq!(h_to_f(&h), f.clone());
            prop_assert_eq!(h_vector(&h_to_f(&h)), h.clone());
            let raw: Vec<i64> = f.entries().iter().map(|x| x.try_into().unwrap()).collect();
            prop_assert_eq!(h.entries().to_vec(), ints(&h_oracle(&raw)));
            let total: BigInt = h.entries().iter().sum();
            prop_assert_eq!(&total, f.get(c.d() as isize - 1));
        }

        #[test]
        fn reciprocity_in_delta_basis(c in arb_complex()) {
            let f = f_vector(&c);
            let h = h_vector(&f);
            let t = multiplicities(&c);
            let lhs = delta_expand(&DeltaCoeffs::new(h.entries().to_vec()));
            prop_assert_eq!(lhs, multiplicity_poly(&c, &t));
            let mut rev = h.entries().to_vec();
            rev.reverse();
            prop_assert_eq!(delta_expand(&DeltaCoeffs::new(rev)), f.to_poly());
        }
    }
}
