use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// A face as a set of internal (0-based) vertex indices.
///
/// Stored as a bit set; up to 64 vertices live inline in one word and larger
/// vertex sets spill to the heap. Trailing zero words are never kept, so
/// derived equality and hashing agree with set equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Face {
    words: SmallVec<[u64; 1]>,
}

impl Face {
    pub fn empty() -> Self {
        Face::default()
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut f = Face::empty();
        for i in indices {
            f.insert(i);
        }
        f
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, i: usize) {
        let (w, b) = (i / 64, i % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << b;
    }

    pub fn remove(&mut self, i: usize) {
        let (w, b) = (i / 64, i % 64);
        if let Some(word) = self.words.get_mut(w) {
            *word &= !(1 << b);
            self.trim();
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w & (1 << (i % 64)) != 0)
    }

    /// Cardinality `|F|`.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// `dim(F) = |F| - 1`; the empty face has dimension -1.
    pub fn dim(&self) -> isize {
        self.len() as isize - 1
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &Face) -> Face {
        let n = self.words.len().max(other.words.len());
        let words = (0..n)
            .map(|i| self.words.get(i).copied().unwrap_or(0) | other.words.get(i).copied().unwrap_or(0))
            .collect();
        Face { words }
    }

    pub fn difference(&self, other: &Face) -> Face {
        let mut f = Face {
            words: self
                .words
                .iter()
                .enumerate()
                .map(|(i, w)| w & !other.words.get(i).copied().unwrap_or(0))
                .collect(),
        };
        f.trim();
        f
    }

    /// Vertex indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of this face, the face itself and the empty face
    /// included. `2^|F|` items.
    pub fn subsets(&self) -> impl Iterator<Item = Face> + '_ {
        let elems = self.to_vec();
        assert!(elems.len() < 64, "face too large for subset enumeration");
        (0u64..1 << elems.len()).map(move |mask| {
            let mut f = Face::empty();
            let mut m = mask;
            while m != 0 {
                let b = m.trailing_zeros() as usize;
                m &= m - 1;
                f.insert(elems[b]);
            }
            f
        })
    }

    /// Faces obtained by deleting one vertex.
    pub fn facets_of(&self) -> impl Iterator<Item = Face> + '_ {
        self.iter().map(move |v| {
            let mut g = self.clone();
            g.remove(v);
            g
        })
    }
}

impl Ord for Face {
    /// Lexicographic on the increasing vertex lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
