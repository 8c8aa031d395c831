//! Finite abstract simplicial complexes.
//!
//! A [`Complex`] is built from a list of facets and stores its full face
//! lattice, grouped by cardinality, together with a hash index from face to
//! position. Vertex ids are positive integers on the outside; inside, vertex
//! `k` is the `k`-th smallest id, so faces are bit sets over `0..n`.

mod face;
mod io;

use std::collections::{HashMap, HashSet};
use std::fmt;

pub use face::Face;
pub use io::{parse_cplx, write_cplx};

use crate::error::{Error, Result};

/// Default cap on the number of faces (including the empty face).
pub const DEFAULT_MAX_FACES: usize = 1 << 24;

#[derive(Clone)]
pub struct Complex {
    labels: Vec<u32>,
    facets: Vec<Face>,
    faces: Vec<Face>,
    // faces[offsets[k]..offsets[k + 1]] are the faces of cardinality k
    offsets: Vec<usize>,
    index: HashMap<Face, usize>,
}

impl Complex {
    /// The complex `{∅}` of dimension -1.
    pub fn empty() -> Self {
        Self::build(Vec::new(), vec![Face::empty()], usize::MAX).expect("one face")
    }

    /// Downward closure of `facets` with the default face cap.
    ///
    /// Facets contained in other facets are absorbed. Empty lists stand for
    /// the empty face, so `from_facets::<[i64; 0]>(&[])` is `{∅}`.
    pub fn from_facets<F: AsRef<[i64]>>(facets: &[F]) -> Result<Self> {
        Self::from_facets_with_limit(facets, DEFAULT_MAX_FACES)
    }

    pub fn from_facets_with_limit<F: AsRef<[i64]>>(facets: &[F], max_faces: usize) -> Result<Self> {
        let mut labels = Vec::new();
        for f in facets {
            for &v in f.as_ref() {
                if v <= 0 || v > u32::MAX as i64 {
                    return Err(Error::InvalidVertex(v));
                }
                labels.push(v as u32);
            }
        }
        labels.sort_unstable();
        labels.dedup();
        let faces = facets
            .iter()
            .map(|f| {
                Face::from_indices(
                    f.as_ref()
                        .iter()
                        .map(|&v| labels.binary_search(&(v as u32)).expect("collected above")),
                )
            })
            .collect();
        Self::build(labels, faces, max_faces)
    }

    /// Same as [`Complex::from_facets`] for already validated `u32` ids.
    pub fn from_label_facets<F: AsRef<[u32]>>(facets: &[F]) -> Result<Self> {
        let wide: Vec<Vec<i64>> = facets
            .iter()
            .map(|f| f.as_ref().iter().map(|&v| v as i64).collect())
            .collect();
        Self::from_facets(&wide)
    }

    fn build(labels: Vec<u32>, generators: Vec<Face>, max_faces: usize) -> Result<Self> {
        let top = generators.iter().map(Face::len).max().unwrap_or(0);
        let mut levels: Vec<HashSet<Face>> = vec![HashSet::new(); top + 1];
        let mut total = 0usize;
        let too_many = || Error::TooManyFaces { limit: max_faces };

        for g in &generators {
            if g.len() >= 64 {
                return Err(too_many());
            }
            if levels[g.len()].insert(g.clone()) {
                total += 1;
                if total > max_faces {
                    return Err(too_many());
                }
            }
        }
        for size in (1..=top).rev() {
            let (lower, upper) = levels.split_at_mut(size);
            for f in &upper[0] {
                for g in f.facets_of() {
                    if lower[size - 1].insert(g) {
                        total += 1;
                        if total > max_faces {
                            return Err(too_many());
                        }
                    }
                }
            }
        }
        if levels[0].insert(Face::empty()) {
            total += 1;
            if total > max_faces {
                return Err(too_many());
            }
        }

        // A generator is a facet unless some face one size up contains it.
        let mut facets: Vec<Face> = generators
            .into_iter()
            .collect::<HashSet<_>>()
            .into_iter()
            .filter(|f| {
                let Some(up) = levels.get(f.len() + 1) else {
                    return true;
                };
                !(0..labels.len()).any(|v| {
                    if f.contains(v) {
                        return false;
                    }
                    let mut g = f.clone();
                    g.insert(v);
                    up.contains(&g)
                })
            })
            .collect();
        if facets.is_empty() {
            facets.push(Face::empty());
        }
        facets.sort();

        let mut faces = Vec::with_capacity(total);
        let mut offsets = Vec::with_capacity(top + 2);
        for level in levels {
            offsets.push(faces.len());
            let mut level: Vec<Face> = level.into_iter().collect();
            level.sort();
            faces.extend(level);
        }
        offsets.push(faces.len());
        let index = faces.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();

        Ok(Complex {
            labels,
            facets,
            faces,
            offsets,
            index,
        })
    }

    /// `d = 1 + dim(Δ)`, the largest face cardinality.
    pub fn d(&self) -> usize {
        self.offsets.len() - 2
    }

    pub fn dim(&self) -> isize {
        self.d() as isize - 1
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// External vertex ids, indexed by internal vertex index.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// All faces, grouped by cardinality, lexicographic inside a group.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// Faces of cardinality `k` (dimension `k - 1`).
    pub fn faces_of_size(&self, k: usize) -> &[Face] {
        match (self.offsets.get(k), self.offsets.get(k + 1)) {
            (Some(&lo), Some(&hi)) => &self.faces[lo..hi],
            _ => &[],
        }
    }

    /// Faces grouped by dimension; slot 0 holds dimension -1 (the empty face).
    pub fn faces_by_dim(&self) -> Vec<&[Face]> {
        (0..=self.d()).map(|k| self.faces_of_size(k)).collect()
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.index.contains_key(face)
    }

    /// Position of `face` in [`Complex::faces`].
    pub fn face_id(&self, face: &Face) -> Option<usize> {
        self.index.get(face).copied()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().all(|f| f.len() == self.d())
    }

    /// External ids of a face's vertices, increasing.
    pub fn face_labels(&self, face: &Face) -> Vec<u32> {
        face.iter().map(|i| self.labels[i]).collect()
    }

    /// Looks up a face by external ids; fails if it is not in the complex.
    pub fn face_from_labels(&self, ids: &[u32]) -> Result<Face> {
        let mut face = Face::empty();
        for id in ids {
            match self.labels.binary_search(id) {
                Ok(i) => face.insert(i),
                Err(_) => return Err(Error::FaceNotInComplex(sorted(ids))),
            }
        }
        if self.contains(&face) {
            Ok(face)
        } else {
            Err(Error::FaceNotInComplex(sorted(ids)))
        }
    }

    /// Facets as sorted id lists, in lexicographic order.
    pub fn facet_labels(&self) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = self
            .facets
            .iter()
            .filter(|f| !f.is_empty())
            .map(|f| self.face_labels(f))
            .collect();
        out.sort();
        out
    }

    /// `lk(F) = {G ∈ Δ : G ∩ F = ∅, G ∪ F ∈ Δ}`, spanned by `G \ F` over the
    /// facets `G ⊇ F`.
    pub fn link(&self, face: &Face) -> Result<Complex> {
        if !self.contains(face) {
            return Err(Error::FaceNotInComplex(self.face_labels_lossy(face)));
        }
        let gens: Vec<Vec<u32>> = self
            .facets
            .iter()
            .filter(|g| face.is_subset(g))
            .map(|g| self.face_labels(&g.difference(face)))
            .collect();
        let mut labels: Vec<u32> = gens.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        let faces = gens
            .iter()
            .map(|g| Face::from_indices(g.iter().map(|v| labels.binary_search(v).expect("collected"))))
            .collect();
        Self::build(labels, faces, usize::MAX)
    }

    // Faces that are not in the complex may mention indices past `n`.
    fn face_labels_lossy(&self, face: &Face) -> Vec<u32> {
        face.iter()
            .map(|i| self.labels.get(i).copied().unwrap_or(i as u32 + 1))
            .collect()
    }
}

fn sorted(ids: &[u32]) -> Vec<u32> {
    let mut v = ids.to_vec();
    v.sort_unstable();
    v
}

impl PartialEq for Complex {
    /// Same faces on the same external vertex ids.
    fn eq(&self, other: &Self) -> bool {
        self.d() == other.d() && self.facet_labels() == other.facet_labels()
    }
}

impl Eq for Complex {}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Complex")
            .field("d", &self.d())
            .field("n", &self.n())
            .field("facets", &self.facet_labels())
            .finish()
    }
}
