//! Reduced simplicial homology over a prime field or `Q`.
//!
//! Complexes are handled as bit masks over local vertex indices. Homology
//! vectors are indexed by `d + 1` for `H̃_d`, so index 0 is `H̃_{-1}`;
//! positions past the end are zero.

use std::collections::HashSet;

use crate::graph::{bit, mask_indices};
use crate::linalg::{rank, SparseRow};

/// All faces of the complex with the given facets, sorted; includes the
/// empty face unless the complex is void.
pub(crate) fn face_masks(facets: &[u64]) -> Vec<u64> {
    let mut seen: HashSet<u64> = HashSet::new();
    for &f in facets {
        if seen.contains(&f) {
            continue;
        }
        let mut s = f;
        loop {
            seen.insert(s);
            if s == 0 {
                break;
            }
            s = (s - 1) & f;
        }
    }
    let mut v: Vec<u64> = seen.into_iter().collect();
    v.sort_unstable();
    v
}

/// Homology of the complex whose faces are exactly `faces` (closed under
/// subsets, empty face included when nonvoid).
pub(crate) fn homology_of_faces(faces: &[u64], p: u32) -> Vec<u64> {
    if faces.is_empty() {
        return Vec::new();
    }
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    for v in by_size.iter_mut() {
        v.sort_unstable();
    }
    // ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        let rows: Vec<SparseRow> = by_size[s]
            .iter()
            .map(|&f| {
                let mut row: SparseRow = mask_indices(f)
                    .enumerate()
                    .map(|(t, v)| {
                        let col = by_size[s - 1]
                            .binary_search(&(f & !bit(v)))
                            .expect("faces closed under subsets");
                        (col as u32, if t % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                row.sort_unstable_by_key(|e| e.0);
                row
            })
            .collect();
        ranks[s] = rank(&rows, p);
    }
    (0..=top)
        .map(|s| (by_size[s].len() - ranks[s] - ranks[s + 1]) as u64)
        .collect()
}

/// Homology of the complex generated by `facets`.
pub(crate) fn homology_of_facets(facets: &[u64], p: u32) -> Vec<u64> {
    if facets.is_empty() {
        return Vec::new();
    }
    let common = facets.iter().fold(u64::MAX, |a, &f| a & f);
    if common != 0 {
        return Vec::new();
    }
    homology_of_faces(&face_masks(facets), p)
}

/// Faces of the complex on the vertices of `support` whose minimal
/// nonfaces include every mask in `nonfaces`. Gives up once more than `cap`
/// faces have been found.
pub(crate) fn faces_avoiding(support: u64, nonfaces: &[u64], cap: usize) -> Option<Vec<u64>> {
    let verts: Vec<usize> = mask_indices(support).collect();
    let mut out = vec![0u64];
    let mut stack: Vec<(u64, usize)> = vec![(0, 0)];
    while let Some((face, from)) = stack.pop() {
        for (k, &v) in verts.iter().enumerate().skip(from) {
            let g = face | bit(v);
            if nonfaces.iter().any(|&n| n & !g == 0) {
                continue;
            }
            out.push(g);
            if out.len() > cap {
                return None;
            }
            stack.push((g, k + 1));
        }
    }
    out.sort_unstable();
    Some(out)
}

/// Homology of the independence complex of the subgraph induced on `r`.
/// Uses the fold lemma (if `N(u) ⊆ N(w)` then removing `w` preserves the
/// homotopy type), cones over isolated vertices and joins of components.
pub(crate) fn independence_homology(adj: &[u64], mut r: u64, p: u32) -> Vec<u64> {
    'reduce: loop {
        if r == 0 {
            return vec![1];
        }
        for u in mask_indices(r) {
            if adj[u] & r == 0 {
                return Vec::new();
            }
        }
        for u in mask_indices(r) {
            let nu = adj[u] & r;
            for w in mask_indices(r & !bit(u) & !adj[u]) {
                if nu & !adj[w] == 0 {
                    r &= !bit(w);
                    continue 'reduce;
                }
            }
        }
        break;
    }
    let comps = components(adj, r);
    if comps.len() > 1 {
        return comps.into_iter().fold(vec![1], |acc, c| {
            let h = independence_homology(adj, c, p);
            join_homology(&acc, &h)
        });
    }
    homology_of_faces(&independent_sets(adj, r), p)
}

/// Homology of a join, from the homology of its two parts.
pub(crate) fn join_homology(a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    trim(c)
}

pub(crate) fn trim(mut h: Vec<u64>) -> Vec<u64> {
    while h.last() == Some(&0) {
        h.pop();
    }
    h
}

fn components(adj: &[u64], r: u64) -> Vec<u64> {
    let mut left = r;
    let mut out = Vec::new();
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        loop {
            let grown = mask_indices(comp).fold(comp, |m, v| m | (adj[v] & r));
            if grown == comp {
                break;
            }
            comp = grown;
        }
        out.push(comp);
        left &= !comp;
    }
    out
}

/// All independent sets of the subgraph induced on `r`, empty set included.
pub(crate) fn independent_sets(adj: &[u64], r: u64) -> Vec<u64> {
    let verts: Vec<usize> = mask_indices(r).collect();
    let mut out = vec![0u64];
    let mut stack: Vec<(u64, u64, usize)> = vec![(0, 0, 0)];
    while let Some((face, blocked, from)) = stack.pop() {
        for (k, &v) in verts.iter().enumerate().skip(from) {
            if blocked & bit(v) != 0 {
                continue;
            }
            let g = face | bit(v);
            out.push(g);
            stack.push((g, blocked | adj[v], k + 1));
        }
    }
    out.sort_unstable();
    out
}

/// `true` when `h` vanishes in every dimension below `dim`.
pub(crate) fn vanishes_below(h: &[u64], dim: i64) -> bool {
    h.iter().enumerate().all(|(idx, &x)| x == 0 || idx as i64 > dim)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph_adj(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        adj
    }

    #[test]
    fn points_and_circles() {
        assert_eq!(homology_of_facets(&[0b01, 0b10], 0), vec![0, 1]);
        assert_eq!(homology_of_facets(&[0b011, 0b101, 0b110], 0), vec![0, 0, 1]);
        assert_eq!(homology_of_facets(&[0b111], 0), Vec::<u64>::new());
        assert_eq!(homology_of_facets(&[0], 0), vec![1]);
        assert_eq!(homology_of_facets(&[], 0), Vec::<u64>::new());
    }

    #[test]
    fn independence_reductions_match_direct_computation() {
        // C5: independence complex is a circle
        let c5 = graph_adj(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        let direct = trim(homology_of_faces(&independent_sets(&c5, 0b11111), 0));
        assert_eq!(direct, vec![0, 0, 1]);
        assert_eq!(trim(independence_homology(&c5, 0b11111, 0)), direct);
        // two disjoint edges: Ind is a square, a circle
        let m2 = graph_adj(4, &[(0, 1), (2, 3)]);
        assert_eq!(trim(independence_homology(&m2, 0b1111, 0)), vec![0, 0, 1]);
        // path on 4 vertices is contractible
        let p4 = graph_adj(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(trim(independence_homology(&p4, 0b1111, 0)), Vec::<u64>::new());
    }

    #[test]
    fn avoiding_faces() {
        let faces = faces_avoiding(0b111, &[0b011], 100).unwrap();
        assert_eq!(faces, vec![0, 0b001, 0b010, 0b100, 0b101, 0b110]);
        assert!(faces_avoiding(0b111, &[], 3).is_none());
    }
}
