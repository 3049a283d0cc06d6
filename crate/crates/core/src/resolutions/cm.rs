//! Cohen–Macaulay tests: Reisner's criterion, cross-checked against the
//! linear resolution of the Alexander dual (Eagon–Reiner).

use std::collections::HashMap;

use crate::error::{input, Error, Result};
use crate::graph::{bit, mask_indices, Graph};
use crate::homology::{face_masks, homology_of_facets, independence_homology, vanishes_below};
use crate::monomial::cover_ideal;
use crate::simplicial::{maximal_masks, SimplicialComplex};

use super::{has_linear_resolution, FieldSpec, DEFAULT_AMBIENT_CAP};

/// Reisner: `H̃_i(lk F) = 0` for every face `F` (the empty face included)
/// and every `i < dim lk F`.
pub fn reisner_criterion(delta: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    if delta.is_void() {
        return input("Cohen–Macaulayness of the void complex is undefined");
    }
    let facets = delta.facet_masks();
    let mut memo: HashMap<Vec<u64>, bool> = HashMap::new();
    for f in face_masks(&facets) {
        let link = maximal_masks(facets.iter().filter(|&&g| f & !g == 0).map(|&g| g & !f).collect());
        let ok = *memo.entry(link).or_insert_with_key(|link| {
            let dim = link.iter().map(|m| m.count_ones() as i64).max().unwrap_or(0) - 1;
            vanishes_below(&homology_of_facets(link, field.characteristic()), dim)
        });
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both tests of Cohen–Macaulayness. The Eagon–Reiner side is skipped when
/// the complex has more vertices than the Betti engine's ambient cap; a
/// disagreement is an internal error.
pub fn is_cohen_macaulay(delta: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    let reisner = reisner_criterion(delta, field)?;
    if delta.vertices().len() > DEFAULT_AMBIENT_CAP {
        return Ok(reisner);
    }
    let dual_ideal = delta.alexander_dual().stanley_reisner_ideal();
    // the dual of a full simplex is void and has the unit ideal
    let eagon_reiner = dual_ideal.is_unit() || has_linear_resolution(&dual_ideal, field)?;
    if reisner != eagon_reiner {
        return Err(Error::Internal(format!(
            "Reisner criterion says {reisner} but the dual's linear resolution test says {eagon_reiner}"
        )));
    }
    Ok(reisner)
}

/// Reisner's criterion for the independence complex of `g`. Links of faces
/// are independence complexes of `G \ N[F]`, examined through vertex links
/// with memoization on the remaining vertex set.
pub fn graph_reisner_criterion(g: &Graph, field: FieldSpec) -> bool {
    // Cohen–Macaulay complexes are pure
    if !g.is_unmixed() {
        return false;
    }
    let mut memo: HashMap<u64, bool> = HashMap::new();
    link_condition(g.adjacency_masks(), g.all_mask(), field.characteristic(), &mut memo)
}

fn link_condition(adj: &[u64], r: u64, p: u32, memo: &mut HashMap<u64, bool>) -> bool {
    if let Some(&ok) = memo.get(&r) {
        return ok;
    }
    // in a well-covered graph every maximal independent set of G[r] has the
    // same size, so a greedy one gives the dimension of the link
    let mut alpha = 0i64;
    let mut free = r;
    while free != 0 {
        let v = free.trailing_zeros() as usize;
        alpha += 1;
        free &= !bit(v) & !adj[v];
    }
    let ok = vanishes_below(&independence_homology(adj, r, p), alpha - 1)
        && mask_indices(r).all(|v| link_condition(adj, r & !bit(v) & !adj[v], p, memo));
    memo.insert(r, ok);
    ok
}

/// Cohen–Macaulayness of `Δ(G)`, cross-checked against the linear
/// resolution of `J(G)` when `G` has at most the ambient cap of vertices.
pub fn graph_is_cohen_macaulay(g: &Graph, field: FieldSpec) -> Result<bool> {
    let reisner = graph_reisner_criterion(g, field);
    if g.num_vertices() > DEFAULT_AMBIENT_CAP {
        return Ok(reisner);
    }
    let j = cover_ideal(g);
    let eagon_reiner = j.is_unit() || has_linear_resolution(&j, field)?;
    if reisner != eagon_reiner {
        return Err(Error::Internal(format!(
            "Reisner criterion says {reisner} but J(G) linear resolution says {eagon_reiner}"
        )));
    }
    Ok(reisner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::var::Var;

    const Q: FieldSpec = FieldSpec::RATIONALS;

    fn path(n: u32) -> Graph {
        let edges: Vec<(u32, u32)> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::plain(n, &edges).unwrap()
    }

    fn c4() -> Graph {
        Graph::plain(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap()
    }

    #[test]
    fn small_graphs() {
        let d = |g: &Graph| SimplicialComplex::independence_complex(g);
        assert!(!is_cohen_macaulay(&d(&c4()), Q).unwrap());
        assert!(is_cohen_macaulay(&d(&path(4)), Q).unwrap());
        assert!(is_cohen_macaulay(&d(&path(2)), Q).unwrap());
        assert!(!graph_is_cohen_macaulay(&c4(), Q).unwrap());
        assert!(graph_is_cohen_macaulay(&path(4), Q).unwrap());
        // P3 is not unmixed
        assert!(!graph_is_cohen_macaulay(&path(3), Q).unwrap());
        assert!(!is_cohen_macaulay(&d(&path(3)), Q).unwrap());
    }

    #[test]
    fn degenerate_complexes() {
        let vs: Vec<Var> = (1..=3).map(Var::plain).collect();
        assert!(is_cohen_macaulay(&SimplicialComplex::simplex(&vs), Q).unwrap());
        assert!(is_cohen_macaulay(&SimplicialComplex::irrelevant(&vs), Q).unwrap());
        assert!(is_cohen_macaulay(&SimplicialComplex::void(&vs), Q).is_err());
        let edgeless = Graph::plain(2, &[]).unwrap();
        assert!(graph_is_cohen_macaulay(&edgeless, Q).unwrap());
    }

    #[test]
    fn triangle_and_pentagon() {
        let k3 = Graph::plain(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(graph_is_cohen_macaulay(&k3, Q).unwrap());
        // C5 is Cohen–Macaulay: its independence complex is a circle
        let c5 = Graph::plain(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
        assert!(graph_is_cohen_macaulay(&c5, Q).unwrap());
        assert!(is_cohen_macaulay(&SimplicialComplex::independence_complex(&c5), Q).unwrap());
    }
}
