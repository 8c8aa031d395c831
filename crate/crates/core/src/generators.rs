//! Deterministic example complexes, barycentric subdivisions and seeded
//! random complexes.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{Complex, Face};
use crate::error::{Error, Result};

/// A generated complex, with a coloring when the family has a canonical one.
#[derive(Debug, Clone, PartialEq)]
pub struct Generated {
    pub name: String,
    pub complex: Complex,
    pub colors: Option<BTreeMap<u32, u32>>,
}

impl Generated {
    fn plain(name: impl Into<String>, complex: Complex) -> Self {
        Generated {
            name: name.into(),
            complex,
            colors: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// All `d`-subsets of `{1..d+1}`.
    SimplexBoundary(usize),
    /// One vertex from each antipodal pair `(2i-1, 2i)`, `i = 1..d`; pair `i`
    /// gets color `i`.
    CrossPolytopeBoundary(usize),
    /// Six-vertex annulus: two triangles `123` and `456` joined by a band of
    /// six triangles.
    Cylinder,
    /// A triangle coned off at an interior vertex `4`.
    SubdividedTriangle,
    /// `k` triangles sharing the edge `12`.
    GluedTriangles(usize),
    /// `k` tetrahedra sharing the edge `12`.
    GluedTetrahedra(usize),
    /// Two octahedron boundaries sharing a pair of opposite vertices.
    DoubleBanana,
    /// The double banana with the triangle `135` removed.
    DoubleBananaMinusTriangle,
    /// `n` vertices; between 1 and `n` facets, each containing every vertex
    /// independently with probability `density` (and at least one vertex).
    Random { seed: u64, n: usize, density: f64 },
}

pub const FAMILY_NAMES: [&str; 9] = [
    "simplex-boundary",
    "cross-polytope-boundary",
    "cylinder",
    "subdivided-triangle",
    "glued-triangles",
    "glued-tetrahedra",
    "double-banana",
    "double-banana-minus-triangle",
    "random",
];

fn param<T: std::str::FromStr>(params: &[String], i: usize, what: &str) -> Result<T> {
    let raw = params
        .get(i)
        .ok_or_else(|| Error::InvalidParameter(format!("missing parameter {what}")))?;
    raw.parse()
        .map_err(|_| Error::InvalidParameter(format!("bad value {raw:?} for {what}")))
}

impl Family {
    /// `name` is a family id from [`FAMILY_NAMES`]; `params` are its
    /// positional parameters.
    pub fn parse(name: &str, params: &[String]) -> Result<Family> {
        let arity = |n: usize| {
            if params.len() == n {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "{name} takes {n} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let family = match name {
            "simplex-boundary" => {
                arity(1)?;
                Family::SimplexBoundary(param(params, 0, "d")?)
            }
            "cross-polytope-boundary" => {
                arity(1)?;
                Family::CrossPolytopeBoundary(param(params, 0, "d")?)
            }
            "cylinder" => {
                arity(0)?;
                Family::Cylinder
            }
            "subdivided-triangle" => {
                arity(0)?;
                Family::SubdividedTriangle
            }
            "glued-triangles" => {
                arity(1)?;
                Family::GluedTriangles(param(params, 0, "k")?)
            }
            "glued-tetrahedra" => {
                arity(1)?;
                Family::GluedTetrahedra(param(params, 0, "k")?)
            }
            "double-banana" => {
                arity(0)?;
                Family::DoubleBanana
            }
            "double-banana-minus-triangle" => {
                arity(0)?;
                Family::DoubleBananaMinusTriangle
            }
            "random" => {
                arity(3)?;
                Family::Random {
                    seed: param(params, 0, "seed")?,
                    n: param(params, 1, "n")?,
                    density: param(params, 2, "density")?,
                }
            }
            other => return Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        };
        Ok(family)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::SimplexBoundary(d) => write!(f, "simplex-boundary-{d}"),
            Family::CrossPolytopeBoundary(d) => write!(f, "cross-polytope-boundary-{d}"),
            Family::Cylinder => write!(f, "cylinder"),
            Family::SubdividedTriangle => write!(f, "subdivided-triangle"),
            Family::GluedTriangles(k) => write!(f, "glued-triangles-{k}"),
            Family::GluedTetrahedra(k) => write!(f, "glued-tetrahedra-{k}"),
            Family::DoubleBanana => write!(f, "double-banana"),
            Family::DoubleBananaMinusTriangle => write!(f, "double-banana-minus-triangle"),
            Family::Random { seed, n, density } => write!(f, "random-{seed}-{n}-{density}"),
        }
    }
}

pub fn generate(family: &Family) -> Result<Generated> {
    let name = family.to_string();
    let out = match *family {
        Family::SimplexBoundary(d) => Generated::plain(name, simplex_boundary(d)?),
        Family::CrossPolytopeBoundary(d) => {
            let (complex, colors) = cross_polytope_boundary(d)?;
            Generated {
                name,
                complex,
                colors: Some(colors),
            }
        }
        Family::Cylinder => Generated::plain(name, cylinder()),
        Family::SubdividedTriangle => Generated::plain(name, subdivided_triangle()),
        Family::GluedTriangles(k) => Generated::plain(name, glued_triangles(k)?),
        Family::GluedTetrahedra(k) => Generated::plain(name, glued_tetrahedra(k)?),
        Family::DoubleBanana => {
            let (complex, colors) = double_banana();
            Generated {
                name,
                complex,
                colors: Some(colors),
            }
        }
        Family::DoubleBananaMinusTriangle => {
            let (complex, colors) = double_banana_minus_triangle();
            Generated {
                name,
                complex,
                colors: Some(colors),
            }
        }
        Family::Random { seed, n, density } => Generated::plain(name, random(seed, n, density)?),
    };
    Ok(out)
}

fn build(facets: &[Vec<u32>]) -> Complex {
    Complex::from_label_facets(facets).expect("generator output is valid")
}

fn k_subsets(n: u32, k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: u32, n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

pub fn simplex_boundary(d: usize) -> Result<Complex> {
    if d == 0 || d > 24 {
        return Err(Error::InvalidParameter(format!("simplex-boundary needs 1 <= d <= 24, got {d}")));
    }
    Ok(build(&k_subsets(d as u32 + 1, d)))
}

pub fn cross_polytope_boundary(d: usize) -> Result<(Complex, BTreeMap<u32, u32>)> {
    if d == 0 || d > 16 {
        return Err(Error::InvalidParameter(format!(
            "cross-polytope-boundary needs 1 <= d <= 16, got {d}"
        )));
    }
    let facets: Vec<Vec<u32>> = (0u32..1 << d)
        .map(|mask| {
            (0..d as u32)
                .map(|i| 2 * i + 1 + ((mask >> i) & 1))
                .collect()
        })
        .collect();
    let colors = (1..=2 * d as u32).map(|v| (v, v.div_ceil(2))).collect();
    Ok((build(&facets), colors))
}

pub fn cylinder() -> Complex {
    build(&[
        vec![1, 2, 4],
        vec![2, 4, 5],
        vec![2, 3, 5],
        vec![3, 5, 6],
        vec![1, 3, 6],
        vec![1, 4, 6],
    ])
}

pub fn subdivided_triangle() -> Complex {
    build(&[vec![1, 2, 4], vec![2, 3, 4], vec![1, 3, 4]])
}

pub fn glued_triangles(k: usize) -> Result<Complex> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("glued-triangles needs k >= 2, got {k}")));
    }
    Ok(build(&(1..=k as u32).map(|j| vec![1, 2, 2 + j]).collect::<Vec<_>>()))
}

pub fn glued_tetrahedra(k: usize) -> Result<Complex> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("glued-tetrahedra needs k >= 2, got {k}")));
    }
    Ok(build(
        &(1..=k as u32)
            .map(|j| vec![1, 2, 2 * j + 1, 2 * j + 2])
            .collect::<Vec<_>>(),
    ))
}

fn double_banana_facets() -> (Vec<Vec<u32>>, BTreeMap<u32, u32>) {
    let (oct, colors) = cross_polytope_boundary(3).expect("valid");
    let first = oct.facet_labels();
    // Second copy on 7..12, then 7 -> 1 and 8 -> 2; the rest shift down to 7..10.
    let relabel = |v: u32| match v + 6 {
        7 => 1,
        8 => 2,
        w => w - 2,
    };
    let mut facets = first.clone();
    facets.extend(first.iter().map(|f| f.iter().map(|&v| relabel(v)).collect()));
    let mut all_colors = colors.clone();
    for (&v, &c) in &colors {
        all_colors.insert(relabel(v), c);
    }
    (facets, all_colors)
}

pub fn double_banana() -> (Complex, BTreeMap<u32, u32>) {
    let (facets, colors) = double_banana_facets();
    (build(&facets), colors)
}

pub fn double_banana_minus_triangle() -> (Complex, BTreeMap<u32, u32>) {
    let (mut facets, colors) = double_banana_facets();
    facets.retain(|f| f != &[1, 3, 5]);
    (build(&facets), colors)
}

/// Vertices are the non-empty faces (numbered `1..` in face order), facets
/// the maximal chains; each new vertex is colored by the size of its face.
/// The coloring is balanced of type `(1, ..., 1)` exactly when the input is
/// pure.
pub fn barycentric_subdivision(complex: &Complex) -> Result<(Complex, BTreeMap<u32, u32>)> {
    let id_of = |f: &Face| complex.face_id(f).expect("face of the complex") as u32;
    let mut chains: Vec<Vec<u32>> = Vec::new();
    for facet in complex.facets().iter().filter(|f| !f.is_empty()) {
        let verts = facet.to_vec();
        if verts.len() > 8 {
            return Err(Error::InvalidParameter(
                "barycentric subdivision limited to facets of at most 8 vertices".into(),
            ));
        }
        for perm in permutations(&verts) {
            let mut face = Face::empty();
            let chain = perm
                .iter()
                .map(|&v| {
                    face.insert(v);
                    id_of(&face)
                })
                .collect();
            chains.push(chain);
        }
    }
    let colors = (1..complex.num_faces())
        .map(|id| (id as u32, complex.faces()[id].len() as u32))
        .collect();
    let sub = if chains.is_empty() {
        Complex::empty()
    } else {
        Complex::from_label_facets(&chains)?
    };
    Ok((sub, colors))
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

pub fn random(seed: u64, n: usize, density: f64) -> Result<Complex> {
    if n == 0 || n > 32 {
        return Err(Error::InvalidParameter(format!("random needs 1 <= n <= 32, got {n}")));
    }
    if !(density > 0.0 && density <= 1.0) {
        return Err(Error::InvalidParameter(format!("density must lie in (0, 1], got {density}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.gen_range(1..=n);
    let facets: Vec<Vec<u32>> = (0..count)
        .map(|_| {
            let mut f: Vec<u32> = (1..=n as u32).filter(|_| rng.gen_bool(density)).collect();
            if f.is_empty() {
                f.push(rng.gen_range(1..=n as u32));
            }
            f
        })
        .collect();
    Ok(build(&facets))
}

/// `count` facets of exactly `k` vertices out of `n`.
pub fn random_pure(seed: u64, n: usize, k: usize, count: usize) -> Result<Complex> {
    if k == 0 || k > n || n > 32 || count == 0 {
        return Err(Error::InvalidParameter(format!(
            "random_pure needs 1 <= k <= n <= 32 and count >= 1, got n={n} k={k} count={count}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let facets: Vec<Vec<u32>> = (0..count)
        .map(|_| {
            let mut f = rand::seq::index::sample(&mut rng, n, k)
                .into_iter()
                .map(|v| v as u32 + 1)
                .collect::<Vec<_>>();
            f.sort_unstable();
            f
        })
        .collect();
    Ok(build(&facets))
}

/// The named example complexes plus a few subdivisions and seeded random
/// complexes.
pub fn corpus() -> Vec<Generated> {
    let mut out = vec![
        Generated::plain("empty", Complex::empty()),
        Generated::plain("point", build(&[vec![1]])),
        Generated::plain("edge", build(&[vec![1, 2]])),
        Generated::plain("path", build(&[vec![1, 2], vec![2, 3]])),
    ];
    let mut families = Vec::new();
    for d in 1..=5 {
        families.push(Family::SimplexBoundary(d));
        families.push(Family::CrossPolytopeBoundary(d));
    }
    families.extend([
        Family::Cylinder,
        Family::SubdividedTriangle,
        Family::GluedTriangles(2),
        Family::GluedTriangles(3),
        Family::GluedTriangles(4),
        Family::GluedTetrahedra(2),
        Family::GluedTetrahedra(3),
        Family::DoubleBanana,
        Family::DoubleBananaMinusTriangle,
    ]);
    for seed in 0..6 {
        families.push(Family::Random {
            seed,
            n: 7,
            density: 0.45,
        });
    }
    out.extend(families.iter().map(|f| generate(f).expect("corpus parameters are valid")));

    for base in [subdivided_triangle(), cylinder(), glued_triangles(3).expect("valid")] {
        let name = format!("barycentric-{}", out.iter().find(|g| g.complex == base).map_or("?", |g| &g.name));
        let (complex, colors) = barycentric_subdivision(&base).expect("small facets");
        out.push(Generated {
            name,
            complex,
            colors: Some(colors),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balanced::validate_balanced;
    use crate::enumeration::{f_vector, reduced_euler, FVector};
    use num_bigint::BigInt;

    fn fv(c: &Complex) -> Vec<i64> {
        f_vector(c).entries().iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn face_counts() {
        assert_eq!(fv(&cross_polytope_boundary(3).unwrap().0), vec![1, 6, 12, 8]);
        assert_eq!(fv(&simplex_boundary(3).unwrap()), vec![1, 4, 6, 4]);
        assert_eq!(fv(&cylinder()), vec![1, 6, 12, 6]);
        assert_eq!(fv(&subdivided_triangle()), vec![1, 4, 6, 3]);
        assert_eq!(fv(&glued_triangles(3).unwrap()), vec![1, 5, 7, 3]);
        assert_eq!(fv(&glued_tetrahedra(3).unwrap()), vec![1, 8, 16, 12, 3]);
        let (db, _) = double_banana();
        assert_eq!(fv(&db), vec![1, 10, 24, 16]);
        assert_eq!(reduced_euler(&db), BigInt::from(1));
        let (dbm, _) = double_banana_minus_triangle();
        assert_eq!(f_vector(&dbm), FVector::from_i64s(&[1, 10, 24, 15]).unwrap());
    }

    #[test]
    fn colorings_are_balanced() {
        let (c, k) = cross_polytope_boundary(4).unwrap();
        assert_eq!(validate_balanced(&c, &k).unwrap().a(), &[1, 1, 1, 1]);
        let (c, k) = double_banana();
        assert_eq!(validate_balanced(&c, &k).unwrap().a(), &[1, 1, 1]);
        let (c, k) = barycentric_subdivision(&cylinder()).unwrap();
        assert_eq!(c.facets().len(), 36);
        assert_eq!(validate_balanced(&c, &k).unwrap().a(), &[1, 1, 1]);
    }

    #[test]
    fn subdivision_of_non_pure_complex_is_not_balanced() {
        let c = Complex::from_facets(&[vec![1, 2, 3], vec![3, 4]]).unwrap();
        let (sub, k) = barycentric_subdivision(&c).unwrap();
        assert!(validate_balanced(&sub, &k).is_err());
    }

    #[test]
    fn random_is_reproducible() {
        let a = random(42, 8, 0.5).unwrap();
        let b = random(42, 8, 0.5).unwrap();
        assert_eq!(a.to_cplx(), b.to_cplx());
        assert_ne!(random(43, 8, 0.5).unwrap().to_cplx(), a.to_cplx());
        // Frozen output guards against silent changes of the stream.
        assert_eq!(a.facet_labels(), vec![vec![1, 2, 3, 4, 5, 7, 8], vec![2, 4, 5, 6]]);
        assert!(random(1, 0, 0.5).is_err());
        assert!(random(1, 4, 0.0).is_err());
        let p = random_pure(7, 6, 3, 4).unwrap();
        assert!(p.is_pure());
        assert_eq!(p.d(), 3);
    }

    #[test]
    fn parsing_families() {
        let f = Family::parse("glued-triangles", &["3".into()]).unwrap();
        assert_eq!(f, Family::GluedTriangles(3));
        assert!(Family::parse("glued-triangles", &[]).is_err());
        assert!(Family::parse("torus", &[]).is_err());
        assert!(generate(&Family::GluedTriangles(1)).is_err());
        let r = Family::parse("random", &["1".into(), "5".into(), "0.5".into()]).unwrap();
        assert!(generate(&r).is_ok());
        for name in FAMILY_NAMES {
            assert!(Family::parse(name, &[]).is_ok() || Family::parse(name, &["2".into()]).is_ok() || name == "random");
        }
    }

    #[test]
    fn corpus_is_deterministic() {
        let a: Vec<String> = corpus().iter().map(|g| g.complex.to_cplx()).collect();
        let b: Vec<String> = corpus().iter().map(|g| g.complex.to_cplx()).collect();
        assert_eq!(a, b);
        assert!(corpus().iter().any(|g| g.name == "barycentric-cylinder"));
    }
}
