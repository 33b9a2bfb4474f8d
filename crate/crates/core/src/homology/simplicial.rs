//! Finite simplicial complexes on at most 64 vertices and their reduced homology.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Result;

use super::field::{integer_matrix_rank, FieldChar};

/// A simplicial complex given by its facets (bit masks over the vertices).
///
/// `facets == []` is the void complex with no faces at all; `facets == [0]` is
/// the irrelevant complex `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Keeps only the maximal members of `faces` as facets.
    pub fn from_faces(vertices: usize, faces: impl IntoIterator<Item = u64>) -> Self {
        let mut all: Vec<u64> = faces.into_iter().collect();
        all.sort_by_key(|f| std::cmp::Reverse(f.count_ones()));
        all.dedup();
        let mut facets: Vec<u64> = Vec::new();
        for f in all {
            if !facets.iter().any(|&g| g & f == f) {
                facets.push(f);
            }
        }
        facets.sort_unstable();
        SimplicialComplex { vertices, facets }
    }

    pub fn void(vertices: usize) -> Self {
        SimplicialComplex {
            vertices,
            facets: Vec::new(),
        }
    }

    pub fn irrelevant(vertices: usize) -> Self {
        SimplicialComplex {
            vertices,
            facets: vec![0],
        }
    }

    /// The full simplex on `vertices` vertices.
    pub fn simplex(vertices: usize) -> Self {
        let all = if vertices == 64 { u64::MAX } else { (1u64 << vertices) - 1 };
        SimplicialComplex {
            vertices,
            facets: vec![all],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Every face, grouped by dimension (key `-1` holds the empty face).
    pub fn faces_by_dimension(&self) -> BTreeMap<i64, Vec<u64>> {
        let mut faces = BTreeSet::new();
        for &f in &self.facets {
            // All submasks of f, including 0.
            let mut s = f;
            loop {
                faces.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        let mut by_dim: BTreeMap<i64, Vec<u64>> = BTreeMap::new();
        for s in faces {
            by_dim.entry(s.count_ones() as i64 - 1).or_default().push(s);
        }
        by_dim
    }

    pub fn dimension(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.count_ones() as i64 - 1).max()
    }

    /// `Σ_k (-1)^k f_k` over `k >= -1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces_by_dimension()
            .iter()
            .map(|(&k, fs)| if k.rem_euclid(2) == 0 { fs.len() as i64 } else { -(fs.len() as i64) })
            .sum()
    }
}

/// Ranks of the boundary maps `∂_k : C_k → C_{k-1}` for every `k >= 0`.
fn boundary_ranks(faces: &BTreeMap<i64, Vec<u64>>, ch: FieldChar) -> BTreeMap<i64, usize> {
    let mut ranks = BTreeMap::new();
    for (&k, cols) in faces.range(0..) {
        let rows = &faces[&(k - 1)];
        let index: BTreeMap<u64, usize> = rows.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut matrix = vec![vec![0i64; cols.len()]; rows.len()];
        for (j, &face) in cols.iter().enumerate() {
            let mut sign = 1;
            for v in (0..64).filter(|v| (face >> v) & 1 == 1) {
                matrix[index[&(face & !(1 << v))]][j] = sign;
                sign = -sign;
            }
        }
        ranks.insert(k, integer_matrix_rank(&matrix, ch));
    }
    ranks
}

/// Reduced homology ranks `dim H̃_k(K)` for `-1 <= k <= dim K`.
///
/// The void complex has no nonzero homology and yields an empty map.
pub fn reduced_homology_ranks(complex: &SimplicialComplex, ch: FieldChar) -> Result<BTreeMap<i64, usize>> {
    let ch = FieldChar::new(ch.value())?;
    let faces = complex.faces_by_dimension();
    let ranks = boundary_ranks(&faces, ch);
    Ok(faces
        .iter()
        .map(|(&k, fs)| {
            let out = ranks.get(&k).copied().unwrap_or(0);
            let inc = ranks.get(&(k + 1)).copied().unwrap_or(0);
            (k, fs.len() - out - inc)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldChar {
        FieldChar::RATIONALS
    }

    fn nonzero(m: &BTreeMap<i64, usize>) -> BTreeMap<i64, usize> {
        m.iter().filter(|(_, &r)| r > 0).map(|(&k, &r)| (k, r)).collect()
    }

    #[test]
    fn circle() {
        let k = SimplicialComplex::from_faces(3, [0b011, 0b110, 0b101]);
        assert_eq!(nonzero(&reduced_homology_ranks(&k, q()).unwrap()), BTreeMap::from([(1, 1)]));
    }

    #[test]
    fn simplex_is_acyclic() {
        let k = SimplicialComplex::simplex(4);
        assert!(nonzero(&reduced_homology_ranks(&k, q()).unwrap()).is_empty());
    }

    #[test]
    fn two_points() {
        let k = SimplicialComplex::from_faces(2, [0b01, 0b10]);
        assert_eq!(nonzero(&reduced_homology_ranks(&k, q()).unwrap()), BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn void_and_irrelevant_differ() {
        let void = SimplicialComplex::void(3);
        let irr = SimplicialComplex::irrelevant(3);
        assert!(reduced_homology_ranks(&void, q()).unwrap().is_empty());
        assert_eq!(nonzero(&reduced_homology_ranks(&irr, q()).unwrap()), BTreeMap::from([(-1, 1)]));
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert!(FieldChar::new(6).is_err());
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // Six-vertex triangulation of RP^2.
        let tris = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
            [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
        ];
        let k = SimplicialComplex::from_faces(6, tris.iter().map(|t| t.iter().fold(0u64, |a, v| a | (1 << v))));
        let over_q = nonzero(&reduced_homology_ranks(&k, q()).unwrap());
        let over_f2 = nonzero(&reduced_homology_ranks(&k, FieldChar::new(2).unwrap()).unwrap());
        assert!(over_q.is_empty());
        assert_eq!(over_f2, BTreeMap::from([(1, 1), (2, 1)]));
    }

    #[test]
    fn euler_characteristic_matches_homology() {
        let k = SimplicialComplex::from_faces(5, [0b00111, 0b11100, 0b11000, 0b10001]);
        let h = reduced_homology_ranks(&k, q()).unwrap();
        let alt: i64 = h
            .iter()
            .map(|(&d, &r)| if d.rem_euclid(2) == 0 { r as i64 } else { -(r as i64) })
            .sum();
        assert_eq!(alt, k.reduced_euler_characteristic());
    }
}
