//! Simplicial complexes given by facets: Stanley–Reisner translation,
//! links and deletions, shellability and vertex decomposability.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::graph::{bit, full_mask, mask_indices, Graph, MAX_VERTICES};
use crate::monomial::{minimal_transversals, Monomial, MonomialIdeal};
use crate::search::{find_order, Search};
use crate::var::Var;

/// A complex on an ordered vertex list, stored by its facets.
///
/// The void complex (no faces at all) has no facets; the irrelevant complex
/// `{∅}` has the single empty facet.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    vertices: Vec<Var>,
    facets: Vec<Vec<Var>>,
}

/// Keeps the inclusion-maximal masks, sorted and deduplicated.
pub(crate) fn maximal_masks(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| s & !k == 0) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

impl SimplicialComplex {
    pub fn new(
        vertices: impl IntoIterator<Item = Var>,
        facets: impl IntoIterator<Item = Vec<Var>>,
    ) -> Result<SimplicialComplex> {
        let mut vs: Vec<Var> = vertices.into_iter().collect();
        vs.sort();
        vs.dedup();
        if vs.len() > MAX_VERTICES {
            return Err(Error::Resource(format!(
                "complex has {} vertices, limit is {MAX_VERTICES}",
                vs.len()
            )));
        }
        let mut masks = Vec::new();
        for f in facets {
            let mut m = 0u64;
            for v in f {
                let i = vs
                    .binary_search(&v)
                    .map_err(|_| Error::Input(format!("facet vertex {v} not in vertex list")))?;
                m |= bit(i);
            }
            masks.push(m);
        }
        Ok(SimplicialComplex::from_masks(vs, masks))
    }

    pub(crate) fn from_masks(vertices: Vec<Var>, masks: Vec<u64>) -> SimplicialComplex {
        let mut facets: Vec<Vec<Var>> = maximal_masks(masks)
            .into_iter()
            .map(|m| mask_indices(m).map(|i| vertices[i]).collect())
            .collect();
        facets.sort();
        SimplicialComplex { vertices, facets }
    }

    pub fn void(vertices: &[Var]) -> SimplicialComplex {
        SimplicialComplex::from_masks(vertices.to_vec(), Vec::new())
    }

    pub fn irrelevant(vertices: &[Var]) -> SimplicialComplex {
        SimplicialComplex::from_masks(vertices.to_vec(), vec![0])
    }

    pub fn simplex(vertices: &[Var]) -> SimplicialComplex {
        let m = full_mask(vertices.len());
        SimplicialComplex::from_masks(vertices.to_vec(), vec![m])
    }

    pub fn vertices(&self) -> &[Var] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Vec<Var>] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension, `None` for the void complex.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.len() as i64 - 1).max()
    }

    pub(crate) fn facet_masks(&self) -> Vec<u64> {
        self.facets.iter().map(|f| self.mask(f)).collect()
    }

    fn mask(&self, f: &[Var]) -> u64 {
        f.iter()
            .map(|v| bit(self.vertices.binary_search(v).expect("vertex of the complex")))
            .fold(0, |a, b| a | b)
    }

    fn checked_mask(&self, f: &[Var]) -> Result<u64> {
        f.iter().try_fold(0u64, |m, v| {
            self.vertices
                .binary_search(v)
                .map(|i| m | bit(i))
                .map_err(|_| Error::Input(format!("vertex {v} not in the complex")))
        })
    }

    pub fn contains_face(&self, f: &[Var]) -> bool {
        match self.checked_mask(f) {
            Ok(m) => self.facet_masks().iter().any(|&g| m & !g == 0),
            Err(_) => false,
        }
    }

    /// All faces, each sorted, ordered by size and then lexicographically.
    pub fn faces(&self) -> Vec<Vec<Var>> {
        let mut all: BTreeSet<(usize, Vec<Var>)> = BTreeSet::new();
        for m in crate::homology::face_masks(&self.facet_masks()) {
            let f: Vec<Var> = mask_indices(m).map(|i| self.vertices[i]).collect();
            all.insert((f.len(), f));
        }
        all.into_iter().map(|(_, f)| f).collect()
    }

    /// `Δ(G)`: faces are the independent sets of `G`.
    pub fn independence_complex(g: &Graph) -> SimplicialComplex {
        SimplicialComplex::from_masks(g.vertices().to_vec(), g.maximal_independent_masks())
    }

    /// The complex whose Stanley–Reisner ideal is `i`. The unit ideal gives
    /// the void complex and the zero ideal the full simplex.
    pub fn from_stanley_reisner(i: &MonomialIdeal) -> Result<SimplicialComplex> {
        if !i.is_squarefree() {
            return input("Stanley–Reisner ideals are squarefree");
        }
        let vs = i.ambient();
        if i.is_unit() {
            return Ok(SimplicialComplex::void(vs));
        }
        if i.is_zero() {
            return Ok(SimplicialComplex::simplex(vs));
        }
        let all = full_mask(vs.len());
        let idx = |v: &Var| vs.binary_search(v).unwrap();
        let facets = i
            .minimal_primes()?
            .iter()
            .map(|p| all & !p.iter().fold(0u64, |m, v| m | bit(idx(v))))
            .collect();
        Ok(SimplicialComplex::from_masks(vs.to_vec(), facets))
    }

    /// `I_Δ`, generated by the minimal non-faces.
    pub fn stanley_reisner_ideal(&self) -> MonomialIdeal {
        let all = full_mask(self.vertices.len());
        let complements: Vec<BTreeSet<usize>> = self
            .facet_masks()
            .iter()
            .map(|&f| mask_indices(all & !f).collect())
            .collect();
        let gens: Vec<Monomial> = minimal_transversals(&complements)
            .into_iter()
            .map(|t| Monomial::product(t.into_iter().map(|i| self.vertices[i])))
            .collect();
        MonomialIdeal::minimalize(gens, &self.vertices)
    }

    /// `Δ^∨ = {V \ F : F ∉ Δ}`, obtained by dualizing the Stanley–Reisner ideal.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let i = self.stanley_reisner_ideal();
        if i.is_unit() {
            return SimplicialComplex::simplex(&self.vertices);
        }
        if i.is_zero() {
            return SimplicialComplex::void(&self.vertices);
        }
        let dual = i.alexander_dual().expect("squarefree proper nonzero");
        SimplicialComplex::from_stanley_reisner(&dual).expect("squarefree")
    }

    fn without(&self, m: u64) -> Vec<Var> {
        self.vertices
            .iter()
            .enumerate()
            .filter(|(i, _)| m & bit(*i) == 0)
            .map(|(_, v)| *v)
            .collect()
    }

    fn reindexed(&self, removed: u64, masks: Vec<u64>) -> SimplicialComplex {
        let keep: Vec<usize> = (0..self.vertices.len()).filter(|i| removed & bit(*i) == 0).collect();
        let remap = |m: u64| {
            keep.iter()
                .enumerate()
                .filter(|(_, &old)| m & bit(old) != 0)
                .fold(0u64, |acc, (new, _)| acc | bit(new))
        };
        SimplicialComplex::from_masks(self.without(removed), masks.into_iter().map(remap).collect())
    }

    /// `lk_Δ(F) = {G ⊆ V \ F : G ∪ F ∈ Δ}`.
    pub fn link(&self, f: &[Var]) -> Result<SimplicialComplex> {
        let m = self.checked_mask(f)?;
        let masks: Vec<u64> = self
            .facet_masks()
            .into_iter()
            .filter(|&g| m & !g == 0)
            .map(|g| g & !m)
            .collect();
        if masks.is_empty() {
            return input("link of a set that is not a face");
        }
        Ok(self.reindexed(m, masks))
    }

    /// `del_Δ(F) = {G ⊆ V \ F : G ∈ Δ}`.
    pub fn deletion(&self, f: &[Var]) -> Result<SimplicialComplex> {
        let m = self.checked_mask(f)?;
        let masks: Vec<u64> = self.facet_masks().into_iter().map(|g| g & !m).collect();
        Ok(self.reindexed(m, masks))
    }

    pub fn is_pure(&self) -> bool {
        let sizes: BTreeSet<usize> = self.facets.iter().map(Vec::len).collect();
        sizes.len() <= 1
    }

    /// Searches for a facet order `F_1, ..., F_t` in which each
    /// `<F_1..F_{k-1}> ∩ <F_k>` is pure of dimension `dim F_k - 1`.
    /// Nonpure complexes are tested against the same condition.
    pub fn is_shellable(&self, budget: u64) -> Search<Vec<Vec<Var>>> {
        let facets = self.facet_masks();
        let r = find_order(facets.len(), budget, |placed, k| {
            let fk = facets[k];
            let need = fk.count_ones().saturating_sub(1);
            let meets: Vec<u64> = placed.iter().map(|&j| facets[j] & fk).collect();
            let big: Vec<u64> = meets.iter().copied().filter(|m| m.count_ones() == need).collect();
            meets.iter().all(|&m| big.iter().any(|&b| m & !b == 0))
        });
        r.map(|order| order.into_iter().map(|i| self.facets[i].clone()).collect())
    }

    /// Recursive check: a simplex, or some shedding vertex `x` whose link and
    /// deletion are vertex decomposable.
    pub fn is_vertex_decomposable(&self) -> bool {
        let mut memo = HashMap::new();
        vertex_decomposable(maximal_masks(self.facet_masks()), &mut memo)
    }
}

fn vertex_decomposable(facets: Vec<u64>, memo: &mut HashMap<Vec<u64>, bool>) -> bool {
    match facets.len() {
        0 => return false,
        1 => return true,
        _ => {}
    }
    if let Some(&r) = memo.get(&facets) {
        return r;
    }
    let support = facets.iter().fold(0u64, |a, &f| a | f);
    let mut result = false;
    for x in mask_indices(support) {
        let del = maximal_masks(facets.iter().map(|&f| f & !bit(x)).collect());
        if !del.iter().all(|d| facets.binary_search(d).is_ok()) {
            continue;
        }
        let lk = maximal_masks(
            facets
                .iter()
                .filter(|&&f| f & bit(x) != 0)
                .map(|&f| f & !bit(x))
                .collect(),
        );
        if vertex_decomposable(lk, memo) && vertex_decomposable(del, memo) {
            result = true;
            break;
        }
    }
    memo.insert(facets, result);
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::edge_ideal;
    use crate::search::DEFAULT_BUDGET;

    fn vs(ids: &[u32]) -> Vec<Var> {
        ids.iter().map(|&i| Var::plain(i)).collect()
    }

    fn cx(n: u32, facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::new(vs(&(1..=n).collect::<Vec<_>>()), facets.iter().map(|f| vs(f))).unwrap()
    }

    fn p(n: u32) -> Graph {
        let edges: Vec<(u32, u32)> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::plain(n, &edges).unwrap()
    }

    fn c4() -> Graph {
        Graph::plain(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap()
    }

    fn k3() -> Graph {
        Graph::plain(3, &[(1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn independence_complexes() {
        let d = SimplicialComplex::independence_complex(&k3());
        assert_eq!(d.facets(), &[vs(&[1]), vs(&[2]), vs(&[3])]);
        let d = SimplicialComplex::independence_complex(&c4());
        assert_eq!(d.facets(), &[vs(&[1, 3]), vs(&[2, 4])]);
        let d = SimplicialComplex::independence_complex(&p(4));
        assert_eq!(d.facets(), &[vs(&[1, 3]), vs(&[1, 4]), vs(&[2, 4])]);
    }

    #[test]
    fn stanley_reisner() {
        let d = SimplicialComplex::independence_complex(&c4());
        assert_eq!(d.stanley_reisner_ideal(), edge_ideal(&c4()));
        assert!(SimplicialComplex::simplex(&vs(&[1, 2, 3]))
            .stanley_reisner_ideal()
            .is_zero());
        let irr = SimplicialComplex::irrelevant(&vs(&[1]));
        assert_eq!(irr.stanley_reisner_ideal().to_text(), "x1\n");
        assert!(SimplicialComplex::void(&vs(&[1])).stanley_reisner_ideal().is_unit());
        let back = SimplicialComplex::from_stanley_reisner(&edge_ideal(&p(4))).unwrap();
        assert_eq!(back, SimplicialComplex::independence_complex(&p(4)));
    }

    #[test]
    fn void_and_irrelevant_differ() {
        let v = SimplicialComplex::void(&vs(&[1]));
        let i = SimplicialComplex::irrelevant(&vs(&[1]));
        assert_ne!(v, i);
        assert_eq!(v.dim(), None);
        assert_eq!(i.dim(), Some(-1));
        assert!(i.contains_face(&[]));
        assert!(!v.contains_face(&[]));
    }

    #[test]
    fn links_and_deletions() {
        let d = SimplicialComplex::independence_complex(&p(4));
        let lk = d.link(&vs(&[1])).unwrap();
        assert_eq!(lk.facets(), &[vs(&[3]), vs(&[4])]);
        assert_eq!(lk.vertices(), vs(&[2, 3, 4]).as_slice());
        let same = d.deletion(&[]).unwrap();
        assert_eq!(same, d);
        assert_eq!(d.link(&[]).unwrap(), d);
        assert!(d.link(&vs(&[1, 2])).is_err());
        let del = d.deletion(&vs(&[1])).unwrap();
        assert_eq!(del.facets(), &[vs(&[2, 4]), vs(&[3])]);
    }

    #[test]
    fn purity() {
        assert!(SimplicialComplex::independence_complex(&c4()).is_pure());
        assert!(!SimplicialComplex::independence_complex(&p(3)).is_pure());
        assert!(SimplicialComplex::simplex(&vs(&[1, 2])).is_pure());
    }

    #[test]
    fn shellability() {
        let d = SimplicialComplex::independence_complex(&k3());
        assert!(d.is_shellable(DEFAULT_BUDGET).is_yes());
        let d = SimplicialComplex::independence_complex(&c4());
        assert_eq!(d.is_shellable(DEFAULT_BUDGET), Search::No);
        assert!(SimplicialComplex::simplex(&vs(&[1, 2, 3])).is_shellable(1).is_yes());
        // the boundary of a triangle is shellable in any order
        let tri = cx(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert!(tri.is_shellable(DEFAULT_BUDGET).is_yes());
        // a bowtie (two triangles sharing a vertex) is not
        let bow = cx(5, &[&[1, 2, 3], &[3, 4, 5]]);
        assert_eq!(bow.is_shellable(DEFAULT_BUDGET), Search::No);
    }

    #[test]
    fn vertex_decomposability() {
        assert!(SimplicialComplex::simplex(&vs(&[1, 2, 3])).is_vertex_decomposable());
        assert!(!SimplicialComplex::independence_complex(&c4()).is_vertex_decomposable());
        assert!(SimplicialComplex::independence_complex(&p(4)).is_vertex_decomposable());
        assert!(SimplicialComplex::irrelevant(&[]).is_vertex_decomposable());
    }

    #[test]
    fn duals() {
        let d = SimplicialComplex::independence_complex(&c4());
        assert_eq!(d.alexander_dual().alexander_dual(), d);
        let s = SimplicialComplex::simplex(&vs(&[1, 2]));
        assert!(s.alexander_dual().is_void());
        assert_eq!(SimplicialComplex::void(&vs(&[1, 2])).alexander_dual(), s);
    }
}
