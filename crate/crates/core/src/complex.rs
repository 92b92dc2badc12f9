//! Abstract simplicial complexes stored by their facets.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::vectors::FVector;

/// Largest vertex count a complex may have; faces are bitmasks in a `u64`.
pub const MAX_VERTICES: usize = 64;

/// A face as a set of dense vertex indices.
///
/// Iteration yields indices in ascending order. Ordering between faces is
/// lexicographic on those ascending sequences, so `{0,1} < {0,2} < {1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_mask(mask: u64) -> Self {
        Face(mask)
    }

    /// Builds a face from vertex indices; duplicates are an error.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        let mut mask = 0u64;
        for v in indices {
            if v >= MAX_VERTICES {
                return Err(Error::TooManyVertices(v + 1));
            }
            if mask & (1 << v) != 0 {
                return Err(Error::DuplicateVertexInFacet(v.to_string()));
            }
            mask |= 1 << v;
        }
        Ok(Face(mask))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|σ| - 1`; the empty face has dimension -1.
    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    /// Every subset of this face, the face itself and ∅ included.
    pub fn subfaces(self) -> Subfaces {
        Subfaces {
            full: self.0,
            next: Some(self.0),
        }
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertices().cmp(other.vertices())
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vertices()).finish()
    }
}

/// Ascending vertex indices of a [`Face`].
#[derive(Clone)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Submask enumeration, from the full mask down to zero.
pub struct Subfaces {
    full: u64,
    next: Option<u64>,
}

impl Iterator for Subfaces {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.next?;
        self.next = if cur == 0 { None } else { Some((cur - 1) & self.full) };
        Some(Face(cur))
    }
}

/// Checks the label token rules: nonempty, no whitespace, commas or control
/// characters.
pub fn validate_label(label: &str) -> Result<()> {
    if label.is_empty() || label.chars().any(|c| c.is_whitespace() || c.is_control() || c == ',') {
        return Err(Error::InvalidLabel(label.to_string()));
    }
    Ok(())
}

/// An abstract simplicial complex, kept in canonical form.
///
/// Vertex labels are sorted lexicographically and mapped to the dense indices
/// `0..n`. Every vertex occurs in some facet. Facets form an antichain and are
/// sorted by [`Face`] order, so two complexes are equal exactly when they have
/// the same labelled facets.
///
/// The void complex (no faces at all) is distinct from `{∅}`, the complex
/// whose only face is the empty face.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<Face>,
    void: bool,
}

impl SimplicialComplex {
    pub fn void() -> Self {
        SimplicialComplex {
            labels: Vec::new(),
            facets: Vec::new(),
            void: true,
        }
    }

    /// The complex `{∅}`.
    pub fn empty() -> Self {
        SimplicialComplex {
            labels: Vec::new(),
            facets: vec![Face::EMPTY],
            void: false,
        }
    }

    /// Builds a complex from labelled facets.
    ///
    /// Duplicate facets are merged and facets contained in other facets are
    /// dropped. `[[]]` yields `{∅}` and `[]` yields the void complex.
    pub fn from_facets<F, S>(facets: F) -> Result<Self>
    where
        F: IntoIterator,
        F::Item: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        let mut labels = Vec::new();
        let mut masks = Vec::new();
        for facet in facets {
            let mut mask = 0u64;
            for label in facet {
                let label = label.as_ref();
                validate_label(label)?;
                let next = labels.len();
                let v = *index.entry(label.to_string()).or_insert(next);
                if v == next {
                    if next >= MAX_VERTICES {
                        return Err(Error::TooManyVertices(next + 1));
                    }
                    labels.push(label.to_string());
                }
                if mask & (1 << v) != 0 {
                    return Err(Error::DuplicateVertexInFacet(label.to_string()));
                }
                mask |= 1 << v;
            }
            masks.push(Face(mask));
        }
        if masks.is_empty() {
            return Ok(Self::void());
        }
        Ok(Self::canonical(&labels, masks))
    }

    /// Canonicalizes facets given over an arbitrary label table: reduces to an
    /// antichain, drops unused labels and re-indexes in label order.
    pub(crate) fn canonical(labels: &[String], facets: Vec<Face>) -> Self {
        let mut facets = facets;
        facets.sort_by_key(|f| std::cmp::Reverse(f.len()));
        facets.dedup();
        let mut kept: Vec<Face> = Vec::with_capacity(facets.len());
        for f in facets {
            if !kept.iter().any(|g| f.is_subset_of(*g)) {
                kept.push(f);
            }
        }

        let used = kept.iter().fold(0u64, |acc, f| acc | f.mask());
        let mut order: Vec<usize> = Face(used).vertices().collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut remap = [usize::MAX; MAX_VERTICES];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }
        let mut facets: Vec<Face> = kept
            .into_iter()
            .map(|f| Face(f.vertices().fold(0u64, |acc, v| acc | (1 << remap[v]))))
            .collect();
        facets.sort();
        SimplicialComplex {
            labels: order.into_iter().map(|v| labels[v].clone()).collect(),
            facets,
            void: false,
        }
    }

    pub fn is_void(&self) -> bool {
        self.void
    }

    fn non_void(&self) -> Result<()> {
        if self.void {
            Err(Error::VoidComplex)
        } else {
            Ok(())
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Labels of the vertices of `face`, in index order.
    pub fn face_labels(&self, face: Face) -> Vec<&str> {
        face.vertices().map(|v| self.label(v)).collect()
    }

    /// Renders a face as `{a,b,c}` using vertex labels.
    pub fn describe_face(&self, face: Face) -> String {
        format!("{{{}}}", self.face_labels(face).join(","))
    }

    /// Looks up a face by vertex labels. Unknown labels and non-faces give
    /// [`Error::FaceNotInComplex`].
    pub fn face_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Face> {
        self.non_void()?;
        let describe = || {
            let parts: Vec<&str> = labels.iter().map(|s| s.as_ref()).collect();
            format!("{{{}}}", parts.join(","))
        };
        let mut mask = 0u64;
        for label in labels {
            let v = self
                .index_of(label.as_ref())
                .ok_or_else(|| Error::FaceNotInComplex(describe()))?;
            if mask & (1 << v) != 0 {
                return Err(Error::DuplicateVertexInFacet(label.as_ref().to_string()));
            }
            mask |= 1 << v;
        }
        let face = Face(mask);
        if !self.contains(face) {
            return Err(Error::FaceNotInComplex(describe()));
        }
        Ok(face)
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(*f))
    }

    /// All faces including ∅, sorted by size and then lexicographically.
    pub fn faces(&self) -> Result<Vec<Face>> {
        self.non_void()?;
        let mut seen: HashSet<u64> = HashSet::new();
        for f in &self.facets {
            for s in f.subfaces() {
                seen.insert(s.mask());
            }
        }
        let mut faces: Vec<Face> = seen.into_iter().map(Face).collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(faces)
    }

    pub fn dimension(&self) -> Result<isize> {
        self.non_void()?;
        Ok(self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1))
    }

    pub fn is_pure(&self) -> Result<bool> {
        let dim = self.dimension()?;
        Ok(self.facets.iter().all(|f| f.dim() == dim))
    }

    /// Face counts `(f_{-1}, ..., f_{d-1})` by exhaustive enumeration.
    pub fn f_vector(&self) -> Result<FVector> {
        let faces = self.faces()?;
        let d = (self.dimension()? + 1) as usize;
        let mut counts = vec![0u64; d + 1];
        for f in faces {
            counts[f.len()] += 1;
        }
        FVector::new(counts.into_iter().map(BigInt::from).collect())
    }

    /// `{τ ∈ Δ | τ ∪ σ ∈ Δ, τ ∩ σ = ∅}` over the surviving vertex labels.
    pub fn link(&self, face: Face) -> Result<SimplicialComplex> {
        self.non_void()?;
        if !self.contains(face) {
            return Err(Error::FaceNotInComplex(format!("{face:?}")));
        }
        let parts: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| face.is_subset_of(**f))
            .map(|f| f.difference(face))
            .collect();
        Ok(Self::canonical(&self.labels, parts))
    }

    /// Links of every vertex, in index order.
    pub fn vertex_links(&self) -> Result<Vec<SimplicialComplex>> {
        self.non_void()?;
        (0..self.vertex_count()).map(|v| self.link(Face(1 << v))).collect()
    }

    pub fn euler_characteristics(&self) -> Result<EulerCharacteristics> {
        Ok(EulerCharacteristics::from_f_vector(&self.f_vector()?))
    }

    /// Whether the 1-skeleton is a connected graph. `{∅}` counts as
    /// disconnected (it has no vertices).
    pub fn is_connected(&self) -> Result<bool> {
        self.non_void()?;
        let n = self.vertex_count();
        if n == 0 {
            return Ok(false);
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for f in &self.facets {
            let mut vs = f.vertices();
            if let Some(first) = vs.next() {
                for v in vs {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, v));
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, 0);
        Ok((1..n).all(|v| find(&mut parent, v) == root))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.void {
            return f.write_str("SimplicialComplex(void)");
        }
        let facets: Vec<String> = self.facets.iter().map(|x| self.describe_face(*x)).collect();
        write!(f, "SimplicialComplex[{}]", facets.join(" "))
    }
}

/// Both Euler characteristics of a complex.
///
/// `with_empty` counts the empty face with weight -1, so it equals `-e_0`;
/// `topological` is the ordinary alternating face count `f_0 - f_1 + ...`.
/// They always satisfy `topological = with_empty + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerCharacteristics {
    pub with_empty: BigInt,
    pub topological: BigInt,
}

impl EulerCharacteristics {
    pub fn from_f_vector(f: &FVector) -> Self {
        let mut with_empty = BigInt::from(0);
        let mut topological = BigInt::from(0);
        for (i, fi) in f.entries().iter().enumerate() {
            // entry i is f_{i-1}
            if i % 2 == 0 {
                with_empty -= fi;
            } else {
                with_empty += fi;
            }
            if i >= 1 {
                if (i - 1) % 2 == 0 {
                    topological += fi;
                } else {
                    topological -= fi;
                }
            }
        }
        EulerCharacteristics {
            with_empty,
            topological,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> SimplicialComplex {
        SimplicialComplex::from_facets([vec!["1", "2", "3"], vec!["2", "4"], vec!["3", "4"]]).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn canonical_facets() {
        let c = example();
        assert_eq!(c.labels(), ["1", "2", "3", "4"]);
        let facets: Vec<Vec<usize>> = c.facets().iter().map(|f| f.vertices().collect()).collect();
        assert_eq!(facets, vec![vec![0, 1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn domination_and_duplicates_removed() {
        let c = SimplicialComplex::from_facets([vec!["1", "2"], vec!["1", "2", "3"], vec!["3", "2", "1"]]).unwrap();
        assert_eq!(c.facets().len(), 1);
        assert_eq!(c.facets()[0].len(), 3);
    }

    #[test]
    fn empty_and_void() {
        let e = SimplicialComplex::from_facets([Vec::<&str>::new()]).unwrap();
        assert_eq!(e, SimplicialComplex::empty());
        assert_eq!(e.dimension().unwrap(), -1);
        assert!(e.is_pure().unwrap());
        assert_eq!(e.f_vector().unwrap().entries(), ints(&[1]).as_slice());

        let v = SimplicialComplex::from_facets(Vec::<Vec<&str>>::new()).unwrap();
        assert!(v.is_void());
        assert_eq!(v.f_vector(), Err(Error::VoidComplex));
        assert_eq!(v.dimension(), Err(Error::VoidComplex));
        assert_eq!(v.link(Face::EMPTY), Err(Error::VoidComplex));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            SimplicialComplex::from_facets([vec!["1", "1"]]),
            Err(Error::DuplicateVertexInFacet(_))
        ));
        assert!(matches!(
            SimplicialComplex::from_facets([vec!["a b"]]),
            Err(Error::InvalidLabel(_))
        ));
        assert!(matches!(
            SimplicialComplex::from_facets([vec![""]]),
            Err(Error::InvalidLabel(_))
        ));
    }

    #[test]
    fn labels_sort_lexicographically() {
        let c = SimplicialComplex::from_facets([vec!["b", "10"], vec!["2"]]).unwrap();
        assert_eq!(c.labels(), ["10", "2", "b"]);
    }

    #[test]
    fn f_vector_and_dimension() {
        let c = example();
        assert_eq!(c.f_vector().unwrap().entries(), ints(&[1, 4, 5, 1]).as_slice());
        assert_eq!(c.dimension().unwrap(), 2);
        assert!(!c.is_pure().unwrap());
    }

    #[test]
    fn subfaces_enumerate_power_set() {
        let f = Face::from_indices([0, 2, 5]).unwrap();
        let subs: HashSet<u64> = f.subfaces().map(|s| s.mask()).collect();
        assert_eq!(subs.len(), 8);
        assert!(f.subfaces().all(|s| s.is_subset_of(f)));
    }

    #[test]
    fn link_of_vertex_four() {
        let c = example();
        let v4 = c.face_from_labels(&["4"]).unwrap();
        let lk = c.link(v4).unwrap();
        let expected = SimplicialComplex::from_facets([vec!["2"], vec!["3"]]).unwrap();
        assert_eq!(lk, expected);
        assert_eq!(c.link(Face::EMPTY).unwrap(), c);
    }

    #[test]
    fn link_of_missing_face() {
        let c = example();
        assert!(matches!(
            c.face_from_labels(&["1", "4"]),
            Err(Error::FaceNotInComplex(_))
        ));
        assert!(matches!(c.face_from_labels(&["9"]), Err(Error::FaceNotInComplex(_))));
        let bad = Face::from_indices([0, 3]).unwrap();
        assert!(matches!(c.link(bad), Err(Error::FaceNotInComplex(_))));
    }

    #[test]
    fn link_of_facet_is_empty_complex() {
        let c = example();
        let top = c.face_from_labels(&["1", "2", "3"]).unwrap();
        assert_eq!(c.link(top).unwrap(), SimplicialComplex::empty());
    }

    #[test]
    fn euler_characteristics_examples() {
        let chi = example().euler_characteristics().unwrap();
        assert_eq!(chi.with_empty, BigInt::from(-1));
        assert_eq!(chi.topological, BigInt::from(0));
        let chi = SimplicialComplex::empty().euler_characteristics().unwrap();
        assert_eq!(chi.with_empty, BigInt::from(-1));
        assert_eq!(chi.topological, BigInt::from(0));
    }

    #[test]
    fn connectivity() {
        assert!(example().is_connected().unwrap());
        let two = SimplicialComplex::from_facets([vec!["1"], vec!["2"]]).unwrap();
        assert!(!two.is_connected().unwrap());
        assert!(!SimplicialComplex::empty().is_connected().unwrap());
    }
}
