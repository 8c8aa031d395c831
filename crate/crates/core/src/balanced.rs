//! Balanced complexes: vertex colorings in which every facet has the same
//! number of vertices of each color, their flag f- and h-vectors, and the
//! multigraded versions of the Dehn–Sommerville identities.
//!
//! For a coloring with `m` colors and type `a` (so `|a| = d`), `b(F)` counts
//! the vertices of each color in `F`, and
//!
//! ```text
//! f̃(x) = Σ_F x^b(F),   h̃(x) = Σ_F x^b(F) (1-x)^(a-b(F)).
//! ```

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Face};
use crate::enumeration::{f_vector, h_vector, multiplicities, MultiplicityTable};
use crate::error::{Error, Result};
use crate::poly::{
    diff, leq, mdelta_expand, multi_binomial, multi_indices, sign, weight, MDeltaCoeffs, MPoly,
};
use crate::relations::{require_semi_eulerian, RelationId, RelationReport};

/// A validated balanced coloring of a specific complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    /// Color (1-based) of each internal vertex index.
    colors: Vec<u32>,
    a: Vec<u32>,
}

impl Coloring {
    /// Number of colors `m`.
    pub fn m(&self) -> usize {
        self.a.len()
    }

    /// The type vector `a`.
    pub fn a(&self) -> &[u32] {
        &self.a
    }

    pub fn is_completely_balanced(&self) -> bool {
        self.a.iter().all(|&x| x == 1)
    }

    /// Color of the vertex with internal index `v`.
    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    /// Color counts of a face; `b(∅) = 0`.
    pub fn b_of(&self, face: &Face) -> Vec<u32> {
        let mut b = vec![0u32; self.m()];
        for v in face.iter() {
            b[self.colors[v] as usize - 1] += 1;
        }
        b
    }

    /// `(vertex id, color)` pairs in vertex order.
    pub fn to_pairs(&self, complex: &Complex) -> Vec<(u32, u32)> {
        complex.labels().iter().copied().zip(self.colors.iter().copied()).collect()
    }
}

/// Checks that `colors` covers every vertex with colors `1..=m` and that
/// every facet has the type of the first facet.
pub fn validate_balanced(complex: &Complex, colors: &BTreeMap<u32, u32>) -> Result<Coloring> {
    let mut per_vertex = Vec::with_capacity(complex.n());
    for &v in complex.labels() {
        let &c = colors.get(&v).ok_or(Error::UncoloredVertex(v))?;
        per_vertex.push(c);
    }
    let m = per_vertex.iter().copied().max().unwrap_or(0) as usize;
    if let Some((i, &c)) = per_vertex.iter().enumerate().find(|(_, &c)| c == 0) {
        return Err(Error::InvalidColor {
            vertex: complex.labels()[i],
            color: c,
            colors: m,
        });
    }
    let mut coloring = Coloring {
        colors: per_vertex,
        a: vec![0; m],
    };
    let facets: Vec<&Face> = complex.facets().iter().filter(|f| !f.is_empty()).collect();
    if let Some(first) = facets.first() {
        coloring.a = coloring.b_of(first);
    }
    for facet in &facets {
        let found = coloring.b_of(facet);
        if found != coloring.a {
            return Err(Error::Unbalanced {
                facet: complex.face_labels(facet),
                found,
                expected: coloring.a.clone(),
            });
        }
    }
    Ok(coloring)
}

/// Like [`validate_balanced`] but with the type given explicitly.
pub fn validate_balanced_with_type(
    complex: &Complex,
    colors: &BTreeMap<u32, u32>,
    a: &[u32],
) -> Result<Coloring> {
    let mut coloring = validate_balanced(complex, colors)?;
    if coloring.a.len() > a.len() {
        let v = complex.labels()[coloring.colors.iter().position(|&c| c as usize > a.len()).unwrap()];
        return Err(Error::InvalidColor {
            vertex: v,
            color: colors[&v],
            colors: a.len(),
        });
    }
    coloring.a.resize(a.len(), 0);
    if coloring.a != a && complex.d() > 0 {
        return Err(Error::Unbalanced {
            facet: complex.face_labels(&complex.facets()[0]),
            found: coloring.a.clone(),
            expected: a.to_vec(),
        });
    }
    coloring.a = a.to_vec();
    Ok(coloring)
}

/// Values on the lattice `{b <= a}`, every key present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagVector {
    a: Vec<u32>,
    values: BTreeMap<Vec<u32>, BigInt>,
}

impl FlagVector {
    fn zeros(a: &[u32]) -> Self {
        FlagVector {
            a: a.to_vec(),
            values: multi_indices(a).map(|b| (b, BigInt::zero())).collect(),
        }
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }

    pub fn get(&self, b: &[u32]) -> &BigInt {
        &self.values[b]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.values.iter()
    }

    pub fn to_mpoly(&self) -> MPoly {
        MPoly::from_terms(&self.a, self.values.clone()).expect("keys are below a")
    }

    /// `b -> value(a - b)`.
    pub fn reflected(&self) -> FlagVector {
        FlagVector {
            a: self.a.clone(),
            values: self
                .values
                .keys()
                .map(|b| (b.clone(), self.values[&diff(&self.a, b)].clone()))
                .collect(),
        }
    }

    fn delta(&self) -> MDeltaCoeffs {
        MDeltaCoeffs::new(&self.a, self.values.clone()).expect("keys are below a")
    }
}

/// `f_b` = number of faces with `b(F) = b`.
pub fn flag_f(complex: &Complex, coloring: &Coloring) -> FlagVector {
    let mut f = FlagVector::zeros(coloring.a());
    for face in complex.faces() {
        *f.values.get_mut(&coloring.b_of(face)).expect("faces lie below a") += 1;
    }
    f
}

/// Flag h-vector by expanding `Σ_b f_b x^b (1-x)^(a-b)` and reading off
/// coefficients.
pub fn flag_h_expanded(f: &FlagVector) -> FlagVector {
    let a = f.a();
    let m = a.len();
    let mut total = MPoly::zero(a);
    for (b, fb) in f.iter() {
        if fb.is_zero() {
            continue;
        }
        let mut term = MPoly::from_terms(b, [(b.clone(), fb.clone())]).expect("b <= b");
        for (i, (&ai, &bi)) in a.iter().zip(b).enumerate() {
            term = &term * &MPoly::linear_power(m, i, 1, -1, ai - bi);
        }
        total = &total + &term;
    }
    let mut h = FlagVector::zeros(a);
    for (key, c) in total.terms() {
        h.values.insert(key.clone(), c.clone());
    }
    h
}

/// Flag h-vector by `h_b = Σ_{c<=b} (-1)^(|b|-|c|) C(a-c, b-c) f_c`.
pub fn flag_h_closed_form(f: &FlagVector) -> FlagVector {
    let a = f.a();
    let mut h = FlagVector::zeros(a);
    for b in multi_indices(a) {
        let value = multi_indices(&b)
            .map(|c| {
                f.get(&c) * multi_binomial(&diff(a, &c), &diff(&b, &c)) * sign((weight(&b) - weight(&c)) as i64)
            })
            .sum();
        h.values.insert(b, value);
    }
    h
}

/// Flag h-vector; both derivations are computed and must agree.
pub fn flag_h(complex: &Complex, coloring: &Coloring) -> FlagVector {
    let f = flag_f(complex, coloring);
    let h = flag_h_closed_form(&f);
    assert_eq!(h, flag_h_expanded(&f), "flag h-vector derivations disagree");
    h
}

fn context(complex: &Complex, relation: RelationId) -> RelationReport {
    RelationReport::new(relation, complex.d(), f_vector(complex).reduced_euler())
}

/// `Σ_F m_F x^b(F)`.
pub fn colored_multiplicity_poly(complex: &Complex, coloring: &Coloring, table: &MultiplicityTable) -> MPoly {
    let mut p = MPoly::zero(coloring.a());
    for (id, face) in complex.faces().iter().enumerate() {
        p.add_term(&coloring.b_of(face), &BigInt::from(table.m(id)))
            .expect("faces lie below a");
    }
    p
}

/// `Σ_b h_b x^b (x+1)^(a-b)` against `f̃(x)`. Also checks that setting every
/// `x_i` to `x` turns the flag polynomials into `f̃` and `h̃`.
pub fn verify_flag_fh_tilde(complex: &Complex, coloring: &Coloring) -> RelationReport {
    let f = flag_f(complex, coloring);
    let h = flag_h(complex, coloring);
    let mut report = context(complex, RelationId::FlagFhTilde);
    report.compare_mpolys("coeff", &mdelta_expand(&h.delta()), &f.to_mpoly());

    let uni_f = f_vector(complex);
    report.compare_polys("specialized-f", &f.to_mpoly().specialize(), &uni_f.to_poly());
    report.compare_polys("specialized-h", &h.to_mpoly().specialize(), &h_vector(&uni_f).to_poly());
    report
}

/// `Σ_b h_b (x+1)^b x^(a-b)` against `Σ_F m_F x^b(F)`. The specialization
/// `x_i -> x` of the right side is compared with `Σ_F m_F x^|F|`.
pub fn verify_flag_reciprocity(complex: &Complex, coloring: &Coloring) -> RelationReport {
    let table = multiplicities(complex);
    let h = flag_h(complex, coloring);
    let rhs = colored_multiplicity_poly(complex, coloring, &table);
    let mut report = context(complex, RelationId::FlagReciprocity);
    report.compare_mpolys("coeff", &mdelta_expand(&h.reflected().delta()), &rhs);
    report.compare_polys(
        "specialized",
        &rhs.specialize(),
        &crate::enumeration::multiplicity_poly(complex, &table),
    );
    report
}

/// Flag h-vector defect against the errors of faces:
///
/// * `poly`: `Σ_b (h_b - h_{a-b}) x^b (x+1)^(a-b) = Σ_F (1 - m_F) x^b(F)`
/// * `scalar b`: `h_b - h_{a-b} = (-1)^(|a|-|b|) Σ_{F: b(F) <= b} C(a-b(F), a-b) ε_F`
pub fn verify_balanced_ds(complex: &Complex, coloring: &Coloring) -> RelationReport {
    let table = multiplicities(complex);
    let a = coloring.a();
    let h = flag_h(complex, coloring);
    let hr = h.reflected();
    let mut report = context(complex, RelationId::BalancedDs);

    let defect = FlagVector {
        a: a.to_vec(),
        values: h
            .iter()
            .map(|(b, v)| (b.clone(), v - hr.get(b)))
            .collect(),
    };
    let mut rhs = MPoly::zero(a);
    let mut eps: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for (id, face) in complex.faces().iter().enumerate() {
        let b = coloring.b_of(face);
        rhs.add_term(&b, &BigInt::from(1 - table.m(id))).expect("faces lie below a");
        *eps.entry(b).or_default() += table.epsilon(complex, id);
    }
    report.compare_mpolys("poly", &mdelta_expand(&defect.delta()), &rhs);

    let wa = weight(a) as i64;
    for (b, lhs) in defect.iter() {
        let sum: BigInt = eps
            .iter()
            .filter(|(bf, _)| leq(bf, b))
            .map(|(bf, e)| e * multi_binomial(&diff(a, bf), &diff(a, b)))
            .sum();
        report.push("scalar", b.clone(), lhs.clone(), sum * sign(wa - weight(b) as i64));
    }
    report
}

/// For semi-Eulerian complexes:
/// `h_{a-b} - h_b = (-1)^|b| (χ̃ - (-1)^(d-1)) C(a,b)`. Eulerian complexes
/// also get `palindrome` rows, and completely balanced ones `binomial` rows
/// asserting `C(a,b) = 1`.
pub fn verify_balanced_semi_eulerian(complex: &Complex, coloring: &Coloring) -> Result<RelationReport> {
    let table = multiplicities(complex);
    require_semi_eulerian(complex, &table)?;
    let a = coloring.a();
    let h = flag_h(complex, coloring);
    let mut report = context(complex, RelationId::BalancedSemiEulerian);
    let defect = &report.chi_reduced - sign(complex.d() as i64 - 1);
    for (b, hb) in h.iter() {
        let hr = h.get(&diff(a, b));
        let rhs = &defect * multi_binomial(a, b) * sign(weight(b) as i64);
        report.push("scalar", b.clone(), hr - hb, rhs);
    }
    if defect.is_zero() {
        for (b, hb) in h.iter() {
            report.push("palindrome", b.clone(), h.get(&diff(a, b)).clone(), hb.clone());
        }
    }
    if coloring.is_completely_balanced() {
        for b in multi_indices(a) {
            report.push("binomial", b.clone(), multi_binomial(a, &b), BigInt::from(1));
        }
    }
    Ok(report)
}

/// Runs one colored relation.
pub fn verify_colored(complex: &Complex, coloring: &Coloring, relation: RelationId) -> Result<RelationReport> {
    match relation {
        RelationId::FlagFhTilde => Ok(verify_flag_fh_tilde(complex, coloring)),
        RelationId::FlagReciprocity => Ok(verify_flag_reciprocity(complex, coloring)),
        RelationId::BalancedDs => Ok(verify_balanced_ds(complex, coloring)),
        RelationId::BalancedSemiEulerian => verify_balanced_semi_eulerian(complex, coloring),
        RelationId::SrReciprocityColored => Ok(crate::stanley_reisner::verify_sr_reciprocity_colored(
            complex, coloring,
        )),
        other => Err(Error::InvalidParameter(format!("relation {other} does not take a coloring"))),
    }
}

/// Parses a `.colors` file: one `vertex color` pair per line, `#` comments.
pub fn parse_colors(text: &str) -> Result<BTreeMap<u32, u32>> {
    let mut out = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: lineno + 1,
            message,
        };
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [v, c] = toks[..] else {
            return Err(err(format!("expected `vertex color`, found {line:?}")));
        };
        let v: u32 = v.parse().map_err(|_| err(format!("bad vertex id {v:?}")))?;
        let c: u32 = c.parse().map_err(|_| err(format!("bad color {c:?}")))?;
        if v == 0 || c == 0 {
            return Err(err("vertex ids and colors start at 1".into()));
        }
        if out.insert(v, c).is_some_and(|old| old != c) {
            return Err(err(format!("vertex {v} colored twice")));
        }
    }
    Ok(out)
}

pub fn write_colors(pairs: &[(u32, u32)]) -> String {
    pairs.iter().map(|(v, c)| format!("{v} {c}\n")).collect()
}

/// JSON entry `{"b": [...], "f": "int", "h": "int"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagEntry {
    pub b: Vec<u32>,
    #[serde(with = "crate::decimal")]
    pub f: BigInt,
    #[serde(with = "crate::decimal")]
    pub h: BigInt,
}

pub fn flag_entries(f: &FlagVector, h: &FlagVector) -> Vec<FlagEntry> {
    f.iter()
        .map(|(b, fb)| FlagEntry {
            b: b.clone(),
            f: fb.clone(),
            h: h.get(b).clone(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::verify_ds_h;
    use proptest::prelude::*;

    fn octahedron() -> (Complex, Coloring) {
        let mut facets = Vec::new();
        for a in [1, 2] {
            for b in [3, 4] {
                for c in [5, 6] {
                    facets.push(vec![a, b, c]);
                }
            }
        }
        let c = Complex::from_facets(&facets).unwrap();
        let colors = (1..=6).map(|v| (v, (v + 1) / 2)).collect();
        let k = validate_balanced(&c, &colors).unwrap();
        (c, k)
    }

    fn colors(pairs: &[(u32, u32)]) -> BTreeMap<u32, u32> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn validation() {
        let (_, k) = octahedron();
        assert_eq!(k.a(), &[1, 1, 1]);
        assert!(k.is_completely_balanced());

        let path = Complex::from_facets(&[[1, 2], [2, 3]]).unwrap();
        let k = validate_balanced(&path, &colors(&[(1, 1), (2, 2), (3, 1)])).unwrap();
        assert_eq!(k.a(), &[1, 1]);
        let err = validate_balanced(&path, &colors(&[(1, 1), (2, 2)])).unwrap_err();
        assert_eq!(err, Error::UncoloredVertex(3));
        let mono = validate_balanced(&path, &colors(&[(1, 1), (2, 1), (3, 1)])).unwrap();
        assert_eq!(mono.a(), &[2]);
        let mixed = Complex::from_facets(&[vec![1, 2], vec![3]]).unwrap();
        let err = validate_balanced(&mixed, &colors(&[(1, 1), (2, 2), (3, 1)])).unwrap_err();
        assert_eq!(err.witness(), Some(&[3u32][..]));
        assert!(validate_balanced_with_type(&path, &colors(&[(1, 1), (2, 2), (3, 1)]), &[1, 1, 0]).is_ok());
        assert!(validate_balanced_with_type(&path, &colors(&[(1, 1), (2, 2), (3, 1)]), &[2, 0]).is_err());
    }

    #[test]
    fn octahedron_flags() {
        let (c, k) = octahedron();
        let f = flag_f(&c, &k);
        for (b, fb) in f.iter() {
            assert_eq!(*fb, BigInt::from(1u32 << weight(b)));
        }
        let h = flag_h(&c, &k);
        assert!(h.iter().all(|(_, v)| *v == BigInt::from(1)));
        let edge = c.face_from_labels(&[1, 3]).unwrap();
        assert_eq!(k.b_of(&edge), vec![1, 1, 0]);
        assert_eq!(k.b_of(&Face::empty()), vec![0, 0, 0]);

        for r in [
            verify_flag_fh_tilde(&c, &k),
            verify_flag_reciprocity(&c, &k),
            verify_balanced_ds(&c, &k),
            verify_balanced_semi_eulerian(&c, &k).unwrap(),
        ] {
            assert!(r.holds, "{r}");
        }
        let r = verify_flag_reciprocity(&c, &k);
        let spec: Vec<BigInt> = r.rows.iter().filter(|x| x.label == "specialized").map(|x| x.lhs.clone()).collect();
        assert_eq!(spec, [1, 6, 12, 8].map(BigInt::from));
    }

    #[test]
    fn single_vertex() {
        let c = Complex::from_facets(&[[1]]).unwrap();
        let k = validate_balanced(&c, &colors(&[(1, 1)])).unwrap();
        let f = flag_f(&c, &k);
        assert_eq!((f.get(&[0]).clone(), f.get(&[1]).clone()), (BigInt::from(1), BigInt::from(1)));
        let h = flag_h(&c, &k);
        assert_eq!((h.get(&[0]).clone(), h.get(&[1]).clone()), (BigInt::from(1), BigInt::zero()));
        let r = verify_flag_reciprocity(&c, &k);
        assert!(r.holds);
        assert_eq!(r.row("coeff", &[1]).unwrap().rhs, BigInt::from(1));
        assert!(r.row("coeff", &[0]).is_none());
        assert!(verify_flag_fh_tilde(&c, &k).holds);
    }

    #[test]
    fn one_color_matches_univariate_errors() {
        let c = Complex::from_facets(&[[1, 2, 3], [1, 2, 4], [1, 2, 5]]).unwrap();
        let k = validate_balanced(&c, &(1..=5).map(|v| (v, 1)).collect()).unwrap();
        assert_eq!(k.a(), &[3]);
        let flag = verify_balanced_ds(&c, &k);
        let uni = verify_ds_h(&c);
        assert!(flag.holds && uni.holds);
        // scalar b in the flag version is scalar i = d - b.
        for b in 0..=3u32 {
            let fr = flag.row("scalar", &[b]).unwrap();
            let ur = uni.row("scalar", &[3 - b]).unwrap();
            assert_eq!(fr.lhs, ur.lhs);
            assert_eq!(fr.rhs, ur.rhs);
        }
    }

    #[test]
    fn path_in_one_color() {
        // a = (2): faces ∅, three vertices, two edges.
        let c = Complex::from_facets(&[[1, 2], [2, 3]]).unwrap();
        let k = validate_balanced(&c, &colors(&[(1, 1), (2, 1), (3, 1)])).unwrap();
        let h = flag_h(&c, &k);
        let vals: Vec<BigInt> = h.iter().map(|(_, v)| v.clone()).collect();
        assert_eq!(vals, [1, 1, 0].map(BigInt::from));
    }

    #[test]
    fn colors_format() {
        let m = parse_colors("# c\n1 1\n2 2\n\n3 1\n").unwrap();
        assert_eq!(m, colors(&[(1, 1), (2, 2), (3, 1)]));
        assert_eq!(write_colors(&[(1, 1), (2, 2)]), "1 1\n2 2\n");
        assert!(matches!(parse_colors("1 1\n2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_colors("1 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_colors("1 1\n1 2\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn flag_json() {
        let (c, k) = octahedron();
        let entries = flag_entries(&flag_f(&c, &k), &flag_h(&c, &k));
        assert_eq!(entries.len(), 8);
        let text = serde_json::to_string(&entries[7]).unwrap();
        assert_eq!(text, r#"{"b":[1,1,1],"f":"8","h":"1"}"#);
    }

    // Oracle: brute force flag h from the face list, one face at a time,
    // with i128 arithmetic.
    fn flag_h_oracle(c: &Complex, k: &Coloring) -> BTreeMap<Vec<u32>, i128> {
        let a = k.a().to_vec();
        let mut out: BTreeMap<Vec<u32>, i128> = multi_indices(&a).map(|b| (b, 0)).collect();
        for face in c.faces() {
            let bf = k.b_of(face);
            // x^bf (1-x)^(a-bf): coefficient at b is Π (-1)^(b_i-bf_i) C(a_i-bf_i, b_i-bf_i).
            for (b, slot) in out.iter_mut() {
                if !leq(&bf, b) {
                    continue;
                }
                let mut t: i128 = 1;
                for i in 0..a.len() {
                    let (n, r) = ((a[i] - bf[i]) as i128, (b[i] - bf[i]) as i128);
                    let mut binom: i128 = 1;
                    for j in 0..r {
                        binom = binom * (n - j) / (j + 1);
                    }
                    t *= binom * if r % 2 == 0 { 1 } else { -1 };
                }
                *slot += t;
            }
        }
        out
    }

    // Random colorings: vertices get colors, facets are drawn as one vertex
    // per slot of a fixed type.
    fn arb_balanced() -> impl Strategy<Value = (Complex, Coloring)> {
        (prop::collection::vec(1u32..=3, 1..=3), 1usize..=5).prop_flat_map(|(a, nf)| {
            let m = a.len();
            // Two or three vertices per color class.
            let per = 3u32;
            let facet = a
                .iter()
                .enumerate()
                .map(|(i, &ai)| {
                    let lo = (i as u32) * per + 1;
                    prop::sample::subsequence((lo..lo + per).collect::<Vec<_>>(), ai.min(per) as usize)
                })
                .collect::<Vec<_>>();
            prop::collection::vec(facet, nf).prop_map(move |facets| {
                let facets: Vec<Vec<u32>> = facets.into_iter().map(|parts| parts.concat()).collect();
                let c = Complex::from_label_facets(&facets).unwrap();
                let colors = c.labels().iter().map(|&v| (v, (v - 1) / per + 1)).collect();
                let k = validate_balanced(&c, &colors).unwrap();
                assert_eq!(k.m(), m);
                (c, k)
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn flag_identities((c, k) in arb_balanced()) {
            let h = flag_h(&c, &k);
            let oracle = flag_h_oracle(&c, &k);
            for (b, v) in h.iter() {
                prop_assert_eq!(i128::try_from(v).unwrap(), oracle[b]);
            }
            prop_assert!(verify_flag_fh_tilde(&c, &k).holds);
            prop_assert!(verify_flag_reciprocity(&c, &k).holds);
            prop_assert!(verify_balanced_ds(&c, &k).holds);
        }
    }
}
