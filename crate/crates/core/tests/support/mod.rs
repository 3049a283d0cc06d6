//! Independent reference computations used only by tests.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use symcover::{Graph, Monomial, MonomialIdeal, Var};

/// Nonzero diagonal of a diagonal form of an integer matrix reached by
/// unimodular row and column operations.
pub fn integer_diagonal(mut m: Vec<Vec<i64>>) -> Vec<i64> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let pivot = (t..rows)
            .flat_map(|r| (t..cols).map(move |c| (r, c)))
            .filter(|&(r, c)| m[r][c] != 0)
            .min_by_key(|&(r, c)| m[r][c].abs());
        let Some((pr, pc)) = pivot else { break };
        m.swap(t, pr);
        for row in m.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let p = m[t][t];
            let mut dirty = false;
            for r in t + 1..rows {
                let q = m[r][t] / p;
                if q != 0 {
                    let pivot_row = m[t].clone();
                    for (x, y) in m[r].iter_mut().zip(pivot_row).skip(t) {
                        *x -= q * y;
                    }
                }
                dirty |= m[r][t] != 0;
            }
            for c in t + 1..cols {
                let q = m[t][c] / p;
                if q != 0 {
                    for row in m.iter_mut().skip(t) {
                        row[c] -= q * row[t];
                    }
                }
                dirty |= m[t][c] != 0;
            }
            if !dirty {
                break;
            }
            // move the smallest remaining entry of row t or column t to the pivot
            let (r, c) = (t..rows)
                .map(|r| (r, t))
                .chain((t..cols).map(|c| (t, c)))
                .filter(|&(r, c)| m[r][c] != 0)
                .min_by_key(|&(r, c)| m[r][c].abs())
                .unwrap();
            m.swap(t, r);
            for row in m.iter_mut() {
                row.swap(t, c);
            }
        }
        diag.push(m[t][t]);
        t += 1;
    }
    diag
}

/// Rank over the prime field of characteristic `p`, or over the rationals for `p = 0`.
pub fn rank_over(diag: &[i64], p: i64) -> usize {
    diag.iter().filter(|&&d| p == 0 || d % p != 0).count()
}

/// Reduced homology ranks of the complex with the given faces (bit masks,
/// closed under subsets), indexed by dimension plus one and trimmed to the
/// top dimension. Empty for the void complex.
pub fn homology_of_faces(faces: &[u64], p: i64) -> Vec<u64> {
    if faces.is_empty() {
        return Vec::new();
    }
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap();
    let by_size: Vec<Vec<u64>> = (0..=top)
        .map(|s| {
            let mut v: Vec<u64> = faces.iter().copied().filter(|f| f.count_ones() as usize == s).collect();
            v.sort();
            v
        })
        .collect();
    // rank of the boundary from faces of size s to faces of size s - 1
    let boundary_rank = |s: usize| -> usize {
        if s == 0 || s > top {
            return 0;
        }
        let lower: BTreeMap<u64, usize> = by_size[s - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut m = vec![vec![0i64; by_size[s].len()]; lower.len()];
        for (c, &f) in by_size[s].iter().enumerate() {
            let mut sign = 1;
            for bit in 0..64 {
                if f >> bit & 1 == 1 {
                    m[lower[&(f & !(1 << bit))]][c] = sign;
                    sign = -sign;
                }
            }
        }
        rank_over(&integer_diagonal(m), p)
    };
    (0..=top)
        .map(|s| (by_size[s].len() - boundary_rank(s) - boundary_rank(s + 1)) as u64)
        .collect()
}

/// Every subset of the given facet masks.
pub fn close_faces(facets: &[u64]) -> Vec<u64> {
    let mut all: Vec<u64> = Vec::new();
    for &f in facets {
        let mut s = f;
        loop {
            all.push(s);
            if s == 0 {
                break;
            }
            s = (s - 1) & f;
        }
    }
    all.sort();
    all.dedup();
    all
}

/// Graded Betti numbers of a squarefree ideal as a sum of reduced homology
/// of induced subcomplexes over all vertex subsets.
pub fn hochster_betti(i: &MonomialIdeal, p: i64) -> BTreeMap<(u32, u32), u64> {
    let vars = i.ambient().to_vec();
    let n = vars.len();
    let mask = |m: &Monomial| -> u64 {
        m.support()
            .map(|v| 1u64 << vars.iter().position(|&w| w == v).unwrap())
            .sum()
    };
    let nonfaces: Vec<u64> = i.generators().iter().map(mask).collect();
    let faces: Vec<u64> = (0..1u64 << n)
        .filter(|&s| nonfaces.iter().all(|&g| g & s != g))
        .collect();
    let mut out = BTreeMap::new();
    for w in 0..1u64 << n {
        let sub: Vec<u64> = faces.iter().copied().filter(|&f| f & w == f).collect();
        let j = w.count_ones();
        for (idx, &h) in homology_of_faces(&sub, p).iter().enumerate() {
            // idx = d + 1 and the entry sits at i = j - d - 2
            let i = j as i64 - idx as i64 - 1;
            if h > 0 && i >= 0 {
                *out.entry((i as u32, j)).or_insert(0) += h;
            }
        }
    }
    out
}

pub fn vars(n: u32) -> Vec<Var> {
    (1..=n).map(Var::plain).collect()
}

/// A random monomial ideal on `x1..xn` with at most `gens` generators of
/// degree 1 to `max_deg`.
pub fn random_ideal(rng: &mut impl Rng, n: u32, gens: usize, max_deg: u32, squarefree: bool) -> MonomialIdeal {
    let count = rng.gen_range(1..=gens);
    let mut out = Vec::new();
    for _ in 0..count {
        let deg = rng.gen_range(1..=max_deg);
        let mut exps: BTreeMap<Var, u32> = BTreeMap::new();
        while exps.values().sum::<u32>() < deg {
            let v = Var::plain(rng.gen_range(1..=n));
            if squarefree && exps.contains_key(&v) {
                if exps.len() as u32 == n {
                    break;
                }
                continue;
            }
            *exps.entry(v).or_insert(0) += 1;
        }
        out.push(Monomial::from_pairs(exps));
    }
    MonomialIdeal::minimalize(out, &vars(n))
}

/// A random graph on `x1..xn` with edge probability `density`.
pub fn random_graph(rng: &mut impl Rng, n: u32, density: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if rng.gen_bool(density) {
                edges.push((a, b));
            }
        }
    }
    Graph::plain(n, &edges).unwrap()
}

/// Membership in the `k`-th symbolic power of the cover ideal: the exponents
/// at the two ends of every edge sum to at least `k`.
pub fn in_symbolic_cover_power(g: &Graph, m: &Monomial, k: u32) -> bool {
    g.edges().all(|(u, v)| m.exponent(u) + m.exponent(v) >= k)
}

/// All monomials in the given variables of total degree at most `d`.
pub fn monomials_up_to(vars: &[Var], d: u32) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for &v in vars {
        let mut next = Vec::new();
        for exps in &out {
            let used: u32 = exps.iter().map(|&(_, e)| e).sum();
            for e in 0..=d - used {
                let mut x: Vec<(Var, u32)> = exps.clone();
                x.push((v, e));
                next.push(x);
            }
        }
        out = next;
    }
    out.into_iter().map(Monomial::from_pairs).collect()
}

/// The 6-vertex triangulation of the real projective plane as the
/// Stanley-Reisner ideal of its ten non-faces.
pub fn projective_plane_ideal() -> MonomialIdeal {
    let gens = [
        "x1*x2*x3", "x1*x2*x5", "x1*x3*x6", "x1*x4*x5", "x1*x4*x6", "x2*x3*x4", "x2*x4*x6", "x2*x5*x6", "x3*x4*x5",
        "x3*x5*x6",
    ];
    MonomialIdeal::minimalize(gens.iter().map(|s| s.parse::<Monomial>().unwrap()), &vars(6))
}

pub fn sturmfels_ideal() -> MonomialIdeal {
    let gens = [
        "x4*x5*x6", "x3*x5*x6", "x3*x4*x6", "x3*x4*x5", "x2*x5*x6", "x2*x3*x4", "x1*x3*x6", "x1*x4*x5",
    ];
    MonomialIdeal::minimalize(gens.iter().map(|s| s.parse::<Monomial>().unwrap()), &vars(6))
}

/// Face masks (over `x1..xn`) of the complex whose non-faces are the
/// supports of the generators of a squarefree ideal.
pub fn stanley_reisner_faces(i: &MonomialIdeal) -> Vec<u64> {
    let n = i.ambient().len();
    let nonfaces: Vec<u64> = i
        .generators()
        .iter()
        .map(|g| g.support().map(|v| 1u64 << (v.base - 1)).sum())
        .collect();
    (0..1u64 << n)
        .filter(|&s| nonfaces.iter().all(|&g| g & s != g))
        .collect()
}
