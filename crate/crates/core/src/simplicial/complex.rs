use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A nonempty set of vertices, at most 64 of them, stored as a bitmask.
///
/// Ordered by dimension and then lexicographically by vertex list.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Simplex(u64);

impl Simplex {
    pub const MAX_VERTICES: usize = 64;

    /// From a strictly increasing vertex list.
    pub fn from_vertices(vertices: &[usize]) -> Result<Simplex> {
        if vertices.is_empty() {
            return Err(Error::InvalidComplex("empty simplex".into()));
        }
        let mut mask = 0u64;
        for (n, &v) in vertices.iter().enumerate() {
            if v >= Self::MAX_VERTICES {
                return Err(Error::InvalidComplex(format!(
                    "vertex {v} exceeds the limit of {} vertices",
                    Self::MAX_VERTICES
                )));
            }
            if n > 0 && vertices[n - 1] >= v {
                return Err(Error::InvalidComplex(format!(
                    "vertex list {vertices:?} is not strictly increasing"
                )));
            }
            mask |= 1 << v;
        }
        Ok(Simplex(mask))
    }

    pub fn from_mask(mask: u64) -> Option<Simplex> {
        (mask != 0).then_some(Simplex(mask))
    }

    /// The standard simplex `{0..=p}`.
    pub fn standard(p: usize) -> Simplex {
        assert!(p < Self::MAX_VERTICES);
        Simplex(if p == 63 { u64::MAX } else { (1u64 << (p + 1)) - 1 })
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn dim(self) -> usize {
        self.0.count_ones() as usize - 1
    }

    pub fn vertices(self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.0.count_ones() as usize);
        let mut m = self.0;
        while m != 0 {
            out.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        out
    }

    /// Codimension-one faces as `(t, face)`, `t` the position of the removed vertex.
    pub fn faces(self) -> impl Iterator<Item = (usize, Simplex)> {
        let vertices = if self.dim() == 0 { Vec::new() } else { self.vertices() };
        vertices
            .into_iter()
            .enumerate()
            .map(move |(t, v)| (t, Simplex(self.0 & !(1u64 << v))))
    }

    pub fn is_face_of(self, other: Simplex) -> bool {
        self.0 & !other.0 == 0
    }

    /// The image of a mask of vertex positions `{0..=dim}` under the vertex listing.
    pub(crate) fn select(self, positions: u64) -> u64 {
        let mut out = 0u64;
        let mut m = self.0;
        let mut pos = 0;
        while m != 0 {
            let low = m & m.wrapping_neg();
            if positions >> pos & 1 == 1 {
                out |= low;
            }
            m ^= low;
            pos += 1;
        }
        out
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim().cmp(&other.dim()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.vertices())
    }
}

impl Serialize for Simplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.vertices().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Simplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vertices = Vec::<usize>::deserialize(d)?;
        Simplex::from_vertices(&vertices).map_err(serde::de::Error::custom)
    }
}

/// A finite simplicial complex on the ordered vertex set `{0..n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    by_dim: Vec<Vec<Simplex>>,
    index: HashMap<Simplex, usize>,
}

#[derive(Serialize, Deserialize)]
struct ComplexRepr {
    vertices: usize,
    simplices: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// The downward closure of the given simplices. Every vertex `0..n` is
    /// included as a 0-simplex.
    pub fn from_simplices(vertex_count: usize, simplices: &[Vec<usize>]) -> Result<Self> {
        if vertex_count > Simplex::MAX_VERTICES {
            return Err(Error::InvalidComplex(format!(
                "{vertex_count} vertices exceed the limit of {}",
                Simplex::MAX_VERTICES
            )));
        }
        let mut all = BTreeSet::new();
        for v in 0..vertex_count {
            all.insert(Simplex(1 << v));
        }
        for s in simplices {
            let top = Simplex::from_vertices(s)?;
            if let Some(&v) = s.last() {
                if v >= vertex_count {
                    return Err(Error::InvalidComplex(format!(
                        "vertex {v} outside 0..{vertex_count}"
                    )));
                }
            }
            // every nonempty submask
            let mut sub = top.0;
            while sub != 0 {
                all.insert(Simplex(sub));
                sub = (sub - 1) & top.0;
            }
        }
        Ok(Self::from_closed(vertex_count, all))
    }

    fn from_closed(vertex_count: usize, all: BTreeSet<Simplex>) -> Self {
        let mut by_dim: Vec<Vec<Simplex>> = Vec::new();
        let mut index = HashMap::new();
        for s in all {
            let d = s.dim();
            if by_dim.len() <= d {
                by_dim.resize(d + 1, Vec::new());
            }
            index.insert(s, by_dim[d].len());
            by_dim[d].push(s);
        }
        SimplicialComplex {
            vertex_count,
            by_dim,
            index,
        }
    }

    /// The full simplex `Δ^p` on vertices `0..=p`.
    pub fn full_simplex(p: usize) -> Result<Self> {
        let vertices: Vec<usize> = (0..=p).collect();
        Self::from_simplices(p + 1, &[vertices])
    }

    /// The 6-vertex triangulation of the real projective plane.
    pub fn projective_plane() -> Self {
        let facets = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 1, 5],
            [1, 2, 4],
            [1, 3, 4],
            [1, 3, 5],
            [2, 3, 5],
            [2, 4, 5],
        ];
        let facets: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
        Self::from_simplices(6, &facets).expect("valid triangulation")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Top dimension; `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.by_dim.len().checked_sub(1)
    }

    /// The `p`-simplices in order.
    pub fn simplices(&self, p: usize) -> &[Simplex] {
        self.by_dim.get(p).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn contains(&self, s: Simplex) -> bool {
        self.index.contains_key(&s)
    }

    /// Position of `s` within [`Self::simplices`] of its dimension.
    pub fn index_of(&self, s: Simplex) -> Option<usize> {
        self.index.get(&s).copied()
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let repr: ComplexRepr = serde_json::from_value(value.clone())
            .map_err(|e| Error::Malformed(format!("complex: {e}")))?;
        Self::from_simplices(repr.vertices, &repr.simplices)
    }

    /// Lists the maximal simplices.
    pub fn to_json(&self) -> serde_json::Value {
        let mut maximal = Vec::new();
        for (d, layer) in self.by_dim.iter().enumerate() {
            let above = self.by_dim.get(d + 1).map(Vec::as_slice).unwrap_or(&[]);
            for &s in layer {
                if !above.iter().any(|&t| s.is_face_of(t)) {
                    maximal.push(s.vertices());
                }
            }
        }
        serde_json::to_value(ComplexRepr {
            vertices: self.vertex_count,
            simplices: maximal,
        })
        .expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_basics() {
        let s = Simplex::from_vertices(&[1, 3, 4]).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.vertices(), vec![1, 3, 4]);
        let faces: Vec<_> = s.faces().map(|(t, f)| (t, f.vertices())).collect();
        assert_eq!(faces, vec![(0, vec![3, 4]), (1, vec![1, 4]), (2, vec![1, 3])]);
        assert_eq!(s.select(0b101), Simplex::from_vertices(&[1, 4]).unwrap().mask());
        assert!(Simplex::from_vertices(&[2, 1]).is_err());
        assert!(Simplex::from_vertices(&[]).is_err());
        assert_eq!(Simplex::standard(2).vertices(), vec![0, 1, 2]);
    }

    #[test]
    fn simplex_order_is_lexicographic() {
        let v = |x: &[usize]| Simplex::from_vertices(x).unwrap();
        assert!(v(&[0, 3]) < v(&[1, 2]));
        assert!(v(&[1, 2]) < v(&[1, 3]));
        assert!(v(&[5]) < v(&[0, 1]));
    }

    #[test]
    fn closure_and_counts() {
        let d3 = SimplicialComplex::full_simplex(3).unwrap();
        let counts: Vec<usize> = (0..=3).map(|p| d3.simplices(p).len()).collect();
        assert_eq!(counts, vec![4, 6, 4, 1]);
        let rp2 = SimplicialComplex::projective_plane();
        let counts: Vec<usize> = (0..=2).map(|p| rp2.simplices(p).len()).collect();
        assert_eq!(counts, vec![6, 15, 10]);
        // every edge lies in exactly two triangles
        for &e in rp2.simplices(1) {
            let n = rp2.simplices(2).iter().filter(|&&t| e.is_face_of(t)).count();
            assert_eq!(n, 2);
        }
    }

    #[test]
    fn json_round_trip() {
        let rp2 = SimplicialComplex::projective_plane();
        let back = SimplicialComplex::from_json(&rp2.to_json()).unwrap();
        assert_eq!(back, rp2);
        let bad = serde_json::json!({"vertices": 2, "simplices": [[0, 2]]});
        assert!(SimplicialComplex::from_json(&bad).is_err());
    }
}
