//! Finite simple graphs, their independent sets and covers, the
//! very well-covered structure, and the level construction `G_k`.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::var::Var;

/// Hard ceiling on vertex count; vertex sets are stored as `u64` masks.
pub const MAX_VERTICES: usize = 64;

/// Default vertex bound for [`Graph::canonical_form`].
pub const CANONICAL_FORM_BOUND: usize = 8;

const CANONICAL_FORM_HARD_BOUND: usize = 11;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: Vec<Var>,
    edges: BTreeSet<(Var, Var)>,
    adj: Vec<u64>,
}

pub(crate) fn bit(i: usize) -> u64 {
    1u64 << i
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn mask_indices(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// Vertex-index pairs of a partial matching.
type Matching = [(usize, usize)];

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges, duplicate vertices
    /// and edges with unknown endpoints.
    pub fn new(vertices: impl IntoIterator<Item = Var>, edges: impl IntoIterator<Item = (Var, Var)>) -> Result<Graph> {
        let mut vs: Vec<Var> = vertices.into_iter().collect();
        vs.sort();
        if let Some(w) = vs.windows(2).find(|w| w[0] == w[1]) {
            return input(format!("duplicate vertex {}", w[0]));
        }
        if vs.len() > MAX_VERTICES {
            return Err(Error::Resource(format!(
                "graph has {} vertices, limit is {MAX_VERTICES}",
                vs.len()
            )));
        }
        let mut g = Graph {
            adj: vec![0; vs.len()],
            vertices: vs,
            edges: BTreeSet::new(),
        };
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Level-1 graph on vertices `1..=n`.
    pub fn plain(n: u32, edges: &[(u32, u32)]) -> Result<Graph> {
        Graph::new(
            (1..=n).map(Var::plain),
            edges.iter().map(|&(a, b)| (Var::plain(a), Var::plain(b))),
        )
    }

    fn insert_edge(&mut self, u: Var, v: Var) -> Result<()> {
        if u == v {
            return input(format!("loop at vertex {u}"));
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let ia = self.index_of(a).ok_or_else(|| unknown(a))?;
        let ib = self.index_of(b).ok_or_else(|| unknown(b))?;
        if !self.edges.insert((a, b)) {
            return input(format!("duplicate edge {a} {b}"));
        }
        self.adj[ia] |= bit(ib);
        self.adj[ib] |= bit(ia);
        Ok(())
    }

    pub fn vertices(&self) -> &[Var] {
        &self.vertices
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Var, Var)> + '_ {
        self.edges.iter().copied()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, v: Var) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn has_edge(&self, u: Var, v: Var) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) => self.adj[i] & bit(j) != 0,
            _ => false,
        }
    }

    pub fn neighbors(&self, v: Var) -> Result<Vec<Var>> {
        let i = self.index_of(v).ok_or_else(|| unknown(v))?;
        Ok(self.vars_of(self.adj[i]))
    }

    pub fn degree(&self, v: Var) -> Result<usize> {
        let i = self.index_of(v).ok_or_else(|| unknown(v))?;
        Ok(self.adj[i].count_ones() as usize)
    }

    pub(crate) fn adjacency_masks(&self) -> &[u64] {
        &self.adj
    }

    pub(crate) fn all_mask(&self) -> u64 {
        full_mask(self.vertices.len())
    }

    pub(crate) fn mask_of(&self, vs: &[Var]) -> Result<u64> {
        vs.iter().try_fold(0u64, |m, &v| {
            self.index_of(v).map(|i| m | bit(i)).ok_or_else(|| unknown(v))
        })
    }

    pub(crate) fn vars_of(&self, m: u64) -> Vec<Var> {
        mask_indices(m).map(|i| self.vertices[i]).collect()
    }

    pub fn isolated_vertices(&self) -> Vec<Var> {
        (0..self.vertices.len())
            .filter(|&i| self.adj[i] == 0)
            .map(|i| self.vertices[i])
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut seen = bit(0);
        let mut frontier = bit(0);
        while frontier != 0 {
            let mut next = 0;
            for i in mask_indices(frontier) {
                next |= self.adj[i];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.all_mask()
    }

    /// `N[F]`, the union of closed neighborhoods of the vertices in `f`.
    pub fn closed_neighborhood(&self, f: &[Var]) -> Result<Vec<Var>> {
        let m = self.mask_of(f)?;
        Ok(self.vars_of(self.closed_neighborhood_mask(m)))
    }

    pub(crate) fn closed_neighborhood_mask(&self, m: u64) -> u64 {
        mask_indices(m).fold(m, |acc, i| acc | self.adj[i])
    }

    /// `G \ A`: drops the vertices of `a` and every edge meeting them.
    pub fn delete_vertices(&self, a: &[Var]) -> Result<Graph> {
        let m = self.mask_of(a)?;
        Ok(self.induced_by_mask(!m & self.all_mask()))
    }

    pub(crate) fn induced_by_mask(&self, keep: u64) -> Graph {
        let vertices: Vec<Var> = self.vars_of(keep);
        let edges: Vec<(Var, Var)> = self
            .edges
            .iter()
            .filter(|(u, v)| keep & bit(self.index_of(*u).unwrap()) != 0 && keep & bit(self.index_of(*v).unwrap()) != 0)
            .copied()
            .collect();
        Graph::new(vertices, edges).expect("induced subgraph of a valid graph")
    }

    pub fn induced_subgraph(&self, keep: &[Var]) -> Result<Graph> {
        let m = self.mask_of(keep)?;
        Ok(self.induced_by_mask(m))
    }

    pub(crate) fn maximal_independent_masks(&self) -> Vec<u64> {
        maximal_independent_masks(&self.adj)
    }

    /// All inclusion-maximal independent sets, each sorted, in lexicographic order.
    pub fn maximal_independent_sets(&self) -> Vec<Vec<Var>> {
        let mut out: Vec<Vec<Var>> = self
            .maximal_independent_masks()
            .into_iter()
            .map(|m| self.vars_of(m))
            .collect();
        out.sort();
        out
    }

    /// All minimal vertex covers: complements of maximal independent sets.
    pub fn minimal_vertex_covers(&self) -> Vec<Vec<Var>> {
        let all = self.all_mask();
        let mut out: Vec<Vec<Var>> = self
            .maximal_independent_masks()
            .into_iter()
            .map(|m| self.vars_of(all & !m))
            .collect();
        out.sort();
        out
    }

    pub fn is_unmixed(&self) -> bool {
        let sizes: BTreeSet<u32> = self
            .maximal_independent_masks()
            .iter()
            .map(|m| m.count_ones())
            .collect();
        sizes.len() <= 1
    }

    pub fn is_very_well_covered(&self) -> bool {
        let n = self.vertices.len();
        n.is_multiple_of(2)
            && self
                .maximal_independent_masks()
                .iter()
                .all(|m| m.count_ones() as usize == n / 2)
    }

    /// A proper 2-coloring, if one exists. Within every component the
    /// smallest vertex goes to the first side.
    pub fn bipartition(&self) -> Option<(Vec<Var>, Vec<Var>)> {
        let n = self.vertices.len();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for w in mask_indices(self.adj[u]) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let side = |c: bool| {
            (0..n)
                .filter(|&i| color[i] == Some(c))
                .map(|i| self.vertices[i])
                .collect::<Vec<_>>()
        };
        Some((side(false), side(true)))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Size of a largest induced matching, by exhaustive search over edges.
    pub fn induced_matching_number(&self) -> usize {
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|(u, v)| (self.index_of(*u).unwrap(), self.index_of(*v).unwrap()))
            .collect();
        let mut best = 0;
        self.induced_matching_rec(&edges, 0, 0, 0, &mut best);
        best
    }

    fn induced_matching_rec(&self, edges: &[(usize, usize)], from: usize, blocked: u64, size: usize, best: &mut usize) {
        *best = (*best).max(size);
        let free = (self.all_mask() & !blocked).count_ones() as usize;
        if size + free / 2 <= *best {
            return;
        }
        for e in from..edges.len() {
            let (u, v) = edges[e];
            if blocked & (bit(u) | bit(v)) != 0 {
                continue;
            }
            let nb = blocked | self.adj[u] | self.adj[v] | bit(u) | bit(v);
            self.induced_matching_rec(edges, e + 1, nb, size + 1, best);
        }
    }

    /// `beta'(G)`, the size of a smallest vertex cover.
    pub fn cover_number(&self) -> usize {
        let alpha = self
            .maximal_independent_masks()
            .iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0);
        self.vertices.len() - alpha
    }

    fn require_level_one(&self, what: &str) -> Result<()> {
        match self.vertices.iter().find(|v| v.level != 1) {
            Some(v) => input(format!("{what} needs level-1 vertices, found {v}")),
            None => Ok(()),
        }
    }

    /// The graph `G_k` on vertices `(i, p)`, `1 <= p <= k`, with
    /// `(i, p) ~ (j, q)` whenever `i ~ j` in `G` and `p + q <= k + 1`.
    pub fn build_gk(&self, k: u32) -> Result<Graph> {
        if k < 1 {
            return input("build_gk needs k >= 1");
        }
        self.require_level_one("build_gk")?;
        let vertices = self
            .vertices
            .iter()
            .flat_map(|v| (1..=k).map(move |p| Var::new(v.base, p)));
        let mut edges = Vec::new();
        for &(a, b) in &self.edges {
            for p in 1..=k {
                for q in 1..=(k + 1 - p) {
                    edges.push((Var::new(a.base, p), Var::new(b.base, q)));
                }
            }
        }
        Graph::new(vertices, edges)
    }

    /// Attaches one pendant vertex to every vertex. The pendant of the
    /// `r`-th vertex gets base index `max_base + r`.
    pub fn whisker(&self) -> Result<Graph> {
        self.require_level_one("whisker")?;
        let top = self.vertices.iter().map(|v| v.base).max().unwrap_or(0);
        let pendants: Vec<Var> = (1..=self.vertices.len() as u32).map(|r| Var::plain(top + r)).collect();
        let vertices = self.vertices.iter().copied().chain(pendants.iter().copied());
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(self.vertices.iter().copied().zip(pendants.iter().copied()));
        Graph::new(vertices, edges)
    }

    /// Searches for a relabeling `w_1..w_h, z_1..z_h` satisfying the
    /// structure conditions of very well-covered graphs:
    ///
    /// 1. `{w_i}` is a minimal vertex cover and `{z_i}` a maximal independent set;
    /// 2. `w_i ~ z_i`;
    /// 3. `y_i ~ w_j` and `z_j ~ w_l` imply `y_i ~ w_l` for distinct `i, j, l`
    ///    and `y_i` in `{w_i, z_i}`;
    /// 4. `w_i ~ z_j` implies `w_i !~ w_j`;
    /// 5. (when `require_cm_order`) `w_i ~ z_j` implies `i <= j`.
    ///
    /// Returns the lexicographically least valid pair list.
    pub fn find_vwc_labeling(&self, require_cm_order: bool) -> Result<Option<VwcLabeling>> {
        if let Some(v) = self.isolated_vertices().first() {
            return input(format!("vertex {v} is isolated"));
        }
        let n = self.vertices.len();
        if n % 2 == 1 {
            return Ok(None);
        }
        let h = n / 2;
        let all = self.all_mask();
        let mut best: Option<Vec<(usize, usize)>> = None;
        for ind in self.maximal_independent_masks() {
            if ind.count_ones() as usize != h {
                continue;
            }
            let ws: Vec<usize> = mask_indices(all & !ind).collect();
            let mut pairs = Vec::with_capacity(h);
            self.matchings(&ws, ind, &mut pairs, &mut |pairs| {
                if !self.conditions_hold(pairs) {
                    return;
                }
                let ordered = if require_cm_order {
                    match self.cm_order(pairs) {
                        Some(o) => o,
                        None => return,
                    }
                } else {
                    pairs.to_vec()
                };
                if best.as_ref().is_none_or(|b| self.pair_key(&ordered) < self.pair_key(b)) {
                    best = Some(ordered);
                }
            });
        }
        Ok(best.map(|pairs| VwcLabeling {
            cm_ordered: self.satisfies_cm_order(&pairs),
            pairs: pairs
                .iter()
                .map(|&(w, z)| (self.vertices[w], self.vertices[z]))
                .collect(),
        }))
    }

    fn pair_key(&self, pairs: &[(usize, usize)]) -> Vec<(Var, Var)> {
        pairs
            .iter()
            .map(|&(w, z)| (self.vertices[w], self.vertices[z]))
            .collect()
    }

    fn matchings(&self, ws: &[usize], free: u64, pairs: &mut Vec<(usize, usize)>, visit: &mut dyn FnMut(&Matching)) {
        let Some((&w, rest)) = ws.split_first() else {
            visit(pairs);
            return;
        };
        for z in mask_indices(self.adj[w] & free) {
            pairs.push((w, z));
            self.matchings(rest, free & !bit(z), pairs, visit);
            pairs.pop();
        }
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a] & bit(b) != 0
    }

    fn conditions_hold(&self, pairs: &[(usize, usize)]) -> bool {
        let h = pairs.len();
        for i in 0..h {
            for j in 0..h {
                if self.adjacent(pairs[i].0, pairs[j].1) && self.adjacent(pairs[i].0, pairs[j].0) {
                    return false;
                }
            }
        }
        for i in 0..h {
            for y in [pairs[i].0, pairs[i].1] {
                for j in (0..h).filter(|&j| j != i) {
                    if !self.adjacent(y, pairs[j].0) {
                        continue;
                    }
                    for l in (0..h).filter(|&l| l != i && l != j) {
                        if self.adjacent(pairs[j].1, pairs[l].0) && !self.adjacent(y, pairs[l].0) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn satisfies_cm_order(&self, pairs: &[(usize, usize)]) -> bool {
        (0..pairs.len()).all(|i| (0..i).all(|j| !self.adjacent(pairs[i].0, pairs[j].1)))
    }

    /// Lexicographically least ordering of the pairs with `w_i ~ z_j => i <= j`,
    /// i.e. the greedy smallest-first topological order.
    fn cm_order(&self, pairs: &[(usize, usize)]) -> Option<Vec<(usize, usize)>> {
        let mut remaining: Vec<(usize, usize)> = pairs.to_vec();
        remaining.sort_by_key(|&(w, z)| (self.vertices[w], self.vertices[z]));
        let mut out = Vec::with_capacity(pairs.len());
        while !remaining.is_empty() {
            // pair p may come next if no other remaining pair q has w_q ~ z_p
            let pos = (0..remaining.len())
                .find(|&a| (0..remaining.len()).all(|b| b == a || !self.adjacent(remaining[b].0, remaining[a].1)))?;
            out.push(remaining.remove(pos));
        }
        Some(out)
    }

    /// Canonical encoding under the default vertex bound.
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        self.canonical_form_bounded(CANONICAL_FORM_BOUND)
    }

    pub fn canonical_form_bounded(&self, bound: usize) -> Result<CanonicalForm> {
        Ok(self.canonical_labeling(bound)?.0)
    }

    /// Lexicographically least upper-triangle adjacency string over all
    /// vertex permutations, together with a permutation attaining it
    /// (`perm[position] = original vertex index`).
    pub fn canonical_labeling(&self, bound: usize) -> Result<(CanonicalForm, Vec<usize>)> {
        let n = self.vertices.len();
        let bound = bound.min(CANONICAL_FORM_HARD_BOUND);
        if n > bound {
            return Err(Error::Resource(format!(
                "canonical form limited to {bound} vertices, graph has {n}"
            )));
        }
        let mut search = CanonSearch {
            adj: &self.adj,
            n,
            len: n * n.saturating_sub(1) / 2,
            best: None,
            perm: Vec::with_capacity(n),
        };
        search.run(0, 0, 0);
        let (code, perm) = search.best.unwrap_or((0, Vec::new()));
        Ok((CanonicalForm { order: n, code }, perm))
    }

    /// Relabels to vertices `1..=n` following a canonical permutation.
    pub fn canonical_representative(&self, bound: usize) -> Result<(CanonicalForm, Graph)> {
        let (form, perm) = self.canonical_labeling(bound)?;
        let mut pos = vec![0u32; perm.len()];
        for (p, &v) in perm.iter().enumerate() {
            pos[v] = p as u32 + 1;
        }
        let edges: Vec<(u32, u32)> = self
            .edges
            .iter()
            .map(|(u, v)| (pos[self.index_of(*u).unwrap()], pos[self.index_of(*v).unwrap()]))
            .collect();
        Ok((form, Graph::plain(perm.len() as u32, &edges)?))
    }
}

fn unknown(v: Var) -> Error {
    Error::Input(format!("unknown vertex {v}"))
}

/// Bron–Kerbosch with pivoting on the complement graph.
pub(crate) fn maximal_independent_masks(adj: &[u64]) -> Vec<u64> {
    let n = adj.len();
    let all = full_mask(n);
    let non_adj: Vec<u64> = (0..n).map(|i| all & !adj[i] & !bit(i)).collect();
    let mut out = Vec::new();
    bron_kerbosch(&non_adj, 0, all, 0, &mut out);
    out
}

fn bron_kerbosch(nbr: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = mask_indices(p | x).max_by_key(|&u| (p & nbr[u]).count_ones()).unwrap();
    for v in mask_indices(p & !nbr[pivot]) {
        bron_kerbosch(nbr, r | bit(v), p & nbr[v], x & nbr[v], out);
        p &= !bit(v);
        x |= bit(v);
    }
}

/// Relabeling witness for a very well-covered graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VwcLabeling {
    /// `(w_i, z_i)` for `i = 1..=h`.
    pub pairs: Vec<(Var, Var)>,
    /// Whether `w_i ~ z_j` implies `i <= j` for this ordering.
    pub cm_ordered: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub order: usize,
    /// Upper-triangle bits in column order `(0,1), (0,2), (1,2), (0,3), ...`,
    /// first bit most significant.
    pub code: u64,
}

struct CanonSearch<'a> {
    adj: &'a [u64],
    n: usize,
    len: usize,
    best: Option<(u64, Vec<usize>)>,
    perm: Vec<usize>,
}

impl CanonSearch<'_> {
    fn run(&mut self, placed: u64, prefix: u64, bits: usize) {
        let t = self.perm.len();
        if t == self.n {
            if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                self.best = Some((prefix, self.perm.clone()));
            }
            return;
        }
        let free: Vec<usize> = (0..self.n).filter(|&v| placed & bit(v) == 0).collect();
        let words: Vec<u64> = free
            .iter()
            .map(|&v| self.perm.iter().fold(0u64, |w, &u| (w << 1) | ((self.adj[v] >> u) & 1)))
            .collect();
        let min_word = *words.iter().min().unwrap();
        let next_prefix = (prefix << t) | min_word;
        let next_bits = bits + t;
        if let Some((b, _)) = &self.best {
            let best_prefix = b >> (self.len - next_bits);
            if next_prefix > best_prefix {
                return;
            }
        }
        let mut tried: Vec<usize> = Vec::new();
        for (k, &v) in free.iter().enumerate() {
            if words[k] != min_word {
                continue;
            }
            // twins are exchanged by an automorphism fixing everything placed
            if tried.iter().any(|&u| self.adj[u] & !bit(v) == self.adj[v] & !bit(u)) {
                continue;
            }
            tried.push(v);
            self.perm.push(v);
            self.run(placed | bit(v), next_prefix, next_bits);
            self.perm.pop();
        }
    }
}
