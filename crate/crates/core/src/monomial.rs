//! Monomials and monomial ideals stored by their minimal generators.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{input, Error, Result};
use crate::graph::Graph;
use crate::var::Var;

/// A monomial `prod x_v^{e_v}`; only positive exponents are stored, sorted by variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Var) -> Monomial {
        Monomial { exps: vec![(v, 1)] }
    }

    /// Collects `(variable, exponent)` pairs, summing repeated variables and
    /// dropping zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Monomial {
        let mut m: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *m.entry(v).or_default() += e;
        }
        Monomial {
            exps: m.into_iter().filter(|&(_, e)| e > 0).collect(),
        }
    }

    /// Squarefree product of the given variables.
    pub fn product(vars: impl IntoIterator<Item = Var>) -> Monomial {
        Monomial::from_pairs(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn exponents(&self) -> &[(Var, u32)] {
        &self.exps
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    pub fn support(&self) -> impl Iterator<Item = Var> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let mut it = other.exps.iter().peekable();
        'outer: for &(v, e) in &self.exps {
            while let Some(&&(w, f)) = it.peek() {
                match w.cmp(&v) {
                    Ordering::Less => {
                        it.next();
                    }
                    Ordering::Equal => {
                        if f < e {
                            return false;
                        }
                        it.next();
                        continue 'outer;
                    }
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    fn merge(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        let mut exps = Vec::with_capacity(a.len() + b.len());
        while i < a.len() || j < b.len() {
            let (v, ea, eb) = match (a.get(i), b.get(j)) {
                (Some(&(v, e)), Some(&(w, g))) => match v.cmp(&w) {
                    Ordering::Less => {
                        i += 1;
                        (v, e, 0)
                    }
                    Ordering::Greater => {
                        j += 1;
                        (w, 0, g)
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (v, e, g)
                    }
                },
                (Some(&(v, e)), None) => {
                    i += 1;
                    (v, e, 0)
                }
                (None, Some(&(w, g))) => {
                    j += 1;
                    (w, 0, g)
                }
                (None, None) => unreachable!(),
            };
            let e = f(ea, eb);
            if e > 0 {
                exps.push((v, e));
            }
        }
        Monomial { exps }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::min)
    }

    /// `self / gcd(self, u)`, the generator of `(self) : u`.
    pub fn colon(&self, u: &Monomial) -> Monomial {
        self.merge(u, |a, b| a.saturating_sub(b))
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&(v, e)| (v, e * k)).collect(),
        }
    }
}

/// Degree first, then lexicographic with larger exponents of smaller
/// variables first: `x1^2 < x1x2 < x2^2 < x1x2x3`.
impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.exps, &other.exps);
            for (&(v, e), &(w, f)) in a.iter().zip(b.iter()) {
                if v != w {
                    // the one containing the smaller variable is larger in lex
                    return v.cmp(&w);
                }
                if e != f {
                    return f.cmp(&e);
                }
            }
            b.len().cmp(&a.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (i, &(v, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Parses `x1^2*x3.2`; `1` is the unit monomial.
    fn from_str(s: &str) -> Result<Monomial> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one());
        }
        let mut pairs = Vec::new();
        for factor in s.split('*') {
            let factor = factor.trim();
            let body = factor
                .strip_prefix('x')
                .ok_or_else(|| Error::Input(format!("factor `{factor}` must start with x")))?;
            let (var, exp) = match body.split_once('^') {
                Some((v, e)) => {
                    let e: u32 = e
                        .parse()
                        .ok()
                        .filter(|&e| e > 0)
                        .ok_or_else(|| Error::Input(format!("bad exponent in `{factor}`")))?;
                    (v, e)
                }
                None => (body, 1),
            };
            pairs.push((var.parse::<Var>()?, exp));
        }
        Ok(Monomial::from_pairs(pairs))
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Monomial, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A monomial ideal in the polynomial ring over `ambient`, stored by its
/// minimal generating set `G(I)` in sorted order. The unit ideal is `[1]`;
/// the zero ideal has no generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    ambient: Vec<Var>,
    generators: Vec<Monomial>,
}

/// Removes duplicates and non-minimal elements, then sorts.
fn minimal_set(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // after sorting, a divisor of g is never later than g
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    /// Minimal generators of the ideal generated by `gens`. The ambient
    /// variable list is extended by any variable occurring in `gens`.
    pub fn minimalize(gens: impl IntoIterator<Item = Monomial>, ambient: &[Var]) -> MonomialIdeal {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        let mut amb: BTreeSet<Var> = ambient.iter().copied().collect();
        amb.extend(gens.iter().flat_map(|g| g.support()));
        MonomialIdeal {
            ambient: amb.into_iter().collect(),
            generators: minimal_set(gens),
        }
    }

    /// The ideal generated by `gens` over exactly the variables occurring in them.
    pub fn generated_by(gens: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
        MonomialIdeal::minimalize(gens, &[])
    }

    pub fn zero(ambient: &[Var]) -> MonomialIdeal {
        MonomialIdeal::minimalize([], ambient)
    }

    pub fn unit(ambient: &[Var]) -> MonomialIdeal {
        MonomialIdeal::minimalize([Monomial::one()], ambient)
    }

    pub fn ambient(&self) -> &[Var] {
        &self.ambient
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.first().is_some_and(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// True when every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    /// Same ideal over a different ambient ring.
    pub fn with_ambient(&self, ambient: &[Var]) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.generators.clone(), ambient)
    }

    /// Variables occurring in some generator.
    pub fn support(&self) -> Vec<Var> {
        let s: BTreeSet<Var> = self.generators.iter().flat_map(|g| g.support()).collect();
        s.into_iter().collect()
    }

    fn same_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ambient != other.ambient {
            return input("ideals live in different rings");
        }
        Ok(())
    }

    /// `I ∩ J` from pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ambient(other)?;
        Ok(self.intersect_unchecked(other))
    }

    fn intersect_unchecked(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.lcm(b)));
        MonomialIdeal::minimalize(gens.collect::<Vec<_>>(), &self.ambient)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ambient(other)?;
        let gens = self.generators.iter().chain(&other.generators).cloned();
        Ok(MonomialIdeal::minimalize(gens.collect::<Vec<_>>(), &self.ambient))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ambient(other)?;
        let gens = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.mul(b)));
        Ok(MonomialIdeal::minimalize(gens.collect::<Vec<_>>(), &self.ambient))
    }

    /// `u · I`.
    pub fn scale(&self, u: &Monomial) -> MonomialIdeal {
        MonomialIdeal::minimalize(
            self.generators.iter().map(|g| g.mul(u)).collect::<Vec<_>>(),
            &self.ambient,
        )
    }

    /// `I^k`, minimalizing after every multiplication.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        if k < 1 {
            return input("power needs k >= 1");
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    fn require_squarefree_proper(&self, what: &str) -> Result<()> {
        if self.is_zero() || self.is_unit() {
            return input(format!("{what} needs a proper nonzero ideal"));
        }
        if !self.is_squarefree() {
            return input(format!("{what} needs a squarefree ideal"));
        }
        Ok(())
    }

    /// Variable sets of the irredundant decomposition into monomial primes:
    /// the minimal transversals of the generator supports.
    pub fn minimal_primes(&self) -> Result<Vec<Vec<Var>>> {
        self.require_squarefree_proper("minimal_primes")?;
        let sets: Vec<BTreeSet<Var>> = self.generators.iter().map(|g| g.support().collect()).collect();
        let mut out: Vec<Vec<Var>> = minimal_transversals(&sets)
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        out.sort();
        Ok(out)
    }

    /// `I^(k)`: the intersection of the `k`-th powers of the minimal primes.
    pub fn symbolic_power(&self, k: u32) -> Result<MonomialIdeal> {
        if k < 1 {
            return input("symbolic_power needs k >= 1");
        }
        let primes = self.minimal_primes()?;
        let mut acc = MonomialIdeal::unit(&self.ambient);
        for p in primes {
            let prime =
                MonomialIdeal::minimalize(p.iter().map(|&v| Monomial::var(v)).collect::<Vec<_>>(), &self.ambient);
            acc = acc.intersect_unchecked(&prime.power(k)?);
        }
        Ok(acc)
    }

    /// `I : u`, generated by `g / gcd(g, u)`.
    pub fn colon(&self, u: &Monomial) -> MonomialIdeal {
        MonomialIdeal::minimalize(
            self.generators.iter().map(|g| g.colon(u)).collect::<Vec<_>>(),
            &self.ambient,
        )
    }

    /// `I ∩ S'` where `S'` drops the variable `v`.
    pub fn restrict(&self, v: Var) -> Result<MonomialIdeal> {
        if !self.ambient.contains(&v) {
            return input(format!("variable x{v} not in the ambient ring"));
        }
        let ambient: Vec<Var> = self.ambient.iter().copied().filter(|&w| w != v).collect();
        Ok(MonomialIdeal {
            generators: self.generators.iter().filter(|g| g.exponent(v) == 0).cloned().collect(),
            ambient,
        })
    }

    /// Alexander dual of a squarefree ideal: products over its minimal primes.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal> {
        let primes = self.minimal_primes()?;
        Ok(MonomialIdeal::minimalize(
            primes.into_iter().map(Monomial::product).collect::<Vec<_>>(),
            &self.ambient,
        ))
    }

    /// Largest degree of a minimal generator.
    pub fn deg_max(&self) -> Result<u32> {
        self.generators
            .iter()
            .map(Monomial::degree)
            .max()
            .ok_or_else(|| Error::Input("deg_max of the zero ideal".into()))
    }

    /// Polarization: `x_i^a` becomes `x_{i,1} ... x_{i,a}`. Returns the
    /// polarized ideal and the level block assigned to each original variable.
    pub fn polarize(&self) -> Result<(MonomialIdeal, BTreeMap<Var, Vec<Var>>)> {
        if let Some(v) = self.ambient.iter().find(|v| v.level != 1) {
            return input(format!("polarize needs level-1 variables, found x{v}"));
        }
        if self.is_zero() || self.is_unit() {
            let map = self.ambient.iter().map(|&v| (v, vec![v])).collect();
            return Ok((self.clone(), map));
        }
        let mut max_exp: BTreeMap<Var, u32> = BTreeMap::new();
        for g in &self.generators {
            for &(v, e) in g.exponents() {
                let m = max_exp.entry(v).or_default();
                *m = (*m).max(e);
            }
        }
        let map: BTreeMap<Var, Vec<Var>> = max_exp
            .iter()
            .map(|(&v, &a)| (v, (1..=a).map(|t| Var::new(v.base, t)).collect()))
            .collect();
        let ambient: Vec<Var> = map.values().flatten().copied().collect();
        let gens = self.generators.iter().map(polarize_monomial).collect::<Vec<_>>();
        Ok((MonomialIdeal::minimalize(gens, &ambient), map))
    }

    /// Reads the ideal text format: one monomial per line, `1` for the unit
    /// ideal, nothing for the zero ideal.
    pub fn parse_text(text: &str) -> Result<MonomialIdeal> {
        let mut gens = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.is_empty() {
                continue;
            }
            let m = t.parse::<Monomial>().map_err(|e| Error::Parse {
                line: ln + 1,
                column: line.find(|c: char| !c.is_whitespace()).unwrap_or(0) + 1,
                message: e.to_string(),
            })?;
            gens.push(m);
        }
        Ok(MonomialIdeal::generated_by(gens))
    }

    pub fn to_text(&self) -> String {
        self.generators.iter().map(|g| format!("{g}\n")).collect()
    }
}

pub(crate) fn polarize_monomial(g: &Monomial) -> Monomial {
    Monomial::product(
        g.exponents()
            .iter()
            .flat_map(|&(v, e)| (1..=e).map(move |t| Var::new(v.base, t))),
    )
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Minimal sets meeting every set of the family (Berge's algorithm).
/// The empty family has the single transversal `∅`; a family containing `∅`
/// has none.
pub(crate) fn minimal_transversals<T: Ord + Copy>(sets: &[BTreeSet<T>]) -> Vec<BTreeSet<T>> {
    let mut current: Vec<BTreeSet<T>> = vec![BTreeSet::new()];
    for s in sets {
        let mut next: Vec<BTreeSet<T>> = Vec::new();
        for t in &current {
            if t.iter().any(|x| s.contains(x)) {
                next.push(t.clone());
            } else {
                for &x in s {
                    let mut u = t.clone();
                    u.insert(x);
                    next.push(u);
                }
            }
        }
        next.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        next.dedup();
        let mut kept: Vec<BTreeSet<T>> = Vec::new();
        for t in next {
            if !kept.iter().any(|k| k.is_subset(&t)) {
                kept.push(t);
            }
        }
        current = kept;
    }
    current
}

/// `I(G)`, generated by `x_u x_v` over the edges.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    MonomialIdeal::minimalize(
        g.edges().map(|(u, v)| Monomial::product([u, v])).collect::<Vec<_>>(),
        g.vertices(),
    )
}

/// `J(G)`, generated by the products over minimal vertex covers.
pub fn cover_ideal(g: &Graph) -> MonomialIdeal {
    MonomialIdeal::minimalize(
        g.minimal_vertex_covers()
            .into_iter()
            .map(Monomial::product)
            .collect::<Vec<_>>(),
        g.vertices(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn ideal(gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::generated_by(gens.iter().map(|s| m(s)))
    }

    fn gens(i: &MonomialIdeal) -> Vec<String> {
        i.generators().iter().map(|g| g.to_string()).collect()
    }

    fn amb(n: u32) -> Vec<Var> {
        (1..=n).map(Var::plain).collect()
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
    fn monomial_arithmetic() {
        let a = m("x1^2*x2");
        let b = m("x2^3*x3");
        assert_eq!(a.lcm(&b), m("x1^2*x2^3*x3"));
        assert_eq!(a.gcd(&b), m("x2"));
        assert_eq!(a.colon(&b), m("x1^2"));
        assert_eq!(a.mul(&b), m("x1^2*x2^4*x3"));
        assert!(m("x1*x2").divides(&a));
        assert!(!m("x3").divides(&a));
        assert!(Monomial::one().divides(&a));
        assert_eq!(m("x1.2^3").exponent(Var::new(1, 2)), 3);
        assert_eq!(m("1").to_string(), "1");
        assert!("y1".parse::<Monomial>().is_err());
        assert!("x1^0".parse::<Monomial>().is_err());
    }

    #[test]
    fn monomial_order() {
        let mut v = vec![m("x2^2"), m("x1*x2*x3"), m("x1*x2"), m("x1^2")];
        v.sort();
        assert_eq!(v, vec![m("x1^2"), m("x1*x2"), m("x2^2"), m("x1*x2*x3")]);
    }

    #[test]
    fn minimalization() {
        assert_eq!(gens(&ideal(&["x1", "x1*x2"])), ["x1"]);
        assert_eq!(gens(&ideal(&["x1*x3", "x2*x4"])), ["x1*x3", "x2*x4"]);
        assert!(ideal(&[]).is_zero());
        assert!(ideal(&["x1", "1"]).is_unit());
    }

    #[test]
    fn edge_and_cover_ideals() {
        assert_eq!(gens(&edge_ideal(&k3())), ["x1*x2", "x1*x3", "x2*x3"]);
        assert!(edge_ideal(&Graph::plain(3, &[]).unwrap()).is_zero());
        assert_eq!(gens(&edge_ideal(&c4())), ["x1*x2", "x1*x4", "x2*x3", "x3*x4"]);
        assert_eq!(gens(&cover_ideal(&c4())), ["x1*x3", "x2*x4"]);
        assert_eq!(gens(&cover_ideal(&k3())), ["x1*x2", "x1*x3", "x2*x3"]);
        assert!(cover_ideal(&Graph::plain(2, &[]).unwrap()).is_unit());
    }

    #[test]
    fn intersections() {
        let a = |s: &[&str]| ideal(s).with_ambient(&amb(4));
        assert_eq!(gens(&a(&["x1"]).intersect(&a(&["x2"])).unwrap()), ["x1*x2"]);
        assert_eq!(
            gens(&a(&["x1", "x2"]).intersect(&a(&["x3", "x4"])).unwrap()),
            ["x1*x3", "x1*x4", "x2*x3", "x2*x4"]
        );
        let i = a(&["x1*x2", "x3^2"]);
        assert_eq!(i.intersect(&MonomialIdeal::unit(&amb(4))).unwrap(), i);
        assert!(i.intersect(&ideal(&["x1"])).is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(gens(&ideal(&["x1", "x2"]).power(2).unwrap()), ["x1^2", "x1*x2", "x2^2"]);
        let i = ideal(&["x1*x3", "x2*x4"]);
        assert_eq!(i.power(1).unwrap(), i);
        assert_eq!(gens(&i.power(2).unwrap()), ["x1^2*x3^2", "x1*x2*x3*x4", "x2^2*x4^2"]);
    }

    #[test]
    fn primes() {
        let sets = |i: &MonomialIdeal| -> Vec<Vec<u32>> {
            i.minimal_primes()
                .unwrap()
                .iter()
                .map(|p| p.iter().map(|v| v.base).collect())
                .collect()
        };
        assert_eq!(sets(&edge_ideal(&k3())), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(
            sets(&ideal(&["x1*x3", "x2*x4"])),
            vec![vec![1, 2], vec![1, 4], vec![2, 3], vec![3, 4]]
        );
        assert_eq!(sets(&ideal(&["x1"])), vec![vec![1]]);
        assert!(ideal(&["x1^2"]).minimal_primes().is_err());
        assert!(MonomialIdeal::unit(&amb(2)).minimal_primes().is_err());
        assert!(MonomialIdeal::zero(&amb(2)).minimal_primes().is_err());
    }

    #[test]
    fn symbolic_powers() {
        let j = cover_ideal(&k3());
        assert_eq!(j.symbolic_power(1).unwrap(), j);
        assert_eq!(
            gens(&j.symbolic_power(2).unwrap()),
            ["x1*x2*x3", "x1^2*x2^2", "x1^2*x3^2", "x2^2*x3^2"]
        );
        let j = cover_ideal(&c4());
        assert_eq!(j.symbolic_power(2).unwrap(), j.power(2).unwrap());
    }

    #[test]
    fn colons_and_restrictions() {
        assert_eq!(gens(&ideal(&["x1*x2"]).colon(&m("x1"))), ["x2"]);
        let i = ideal(&["x1^2", "x1*x2", "x2^2"]);
        assert_eq!(i.colon(&Monomial::one()), i);
        assert_eq!(gens(&i.colon(&m("x1"))), ["x1", "x2"]);

        let r = ideal(&["x1", "x2"]).restrict(Var::plain(1)).unwrap();
        assert_eq!(gens(&r), ["x2"]);
        assert_eq!(r.ambient(), &[Var::plain(2)]);
        let j = cover_ideal(&p(4)).restrict(Var::plain(1)).unwrap();
        assert_eq!(gens(&j), ["x2*x3", "x2*x4"]);
        assert!(MonomialIdeal::unit(&amb(2)).restrict(Var::plain(1)).unwrap().is_unit());
        assert!(ideal(&["x1"]).restrict(Var::plain(5)).is_err());
    }

    #[test]
    fn alexander_duals() {
        assert_eq!(edge_ideal(&c4()).alexander_dual().unwrap(), cover_ideal(&c4()));
        let i = edge_ideal(&p(4));
        assert_eq!(i.alexander_dual().unwrap().alexander_dual().unwrap(), i);
        assert_eq!(gens(&ideal(&["x1"]).alexander_dual().unwrap()), ["x1"]);
    }

    #[test]
    fn polarization() {
        let (pol, map) = ideal(&["x1^2"]).polarize().unwrap();
        assert_eq!(gens(&pol), ["x1*x1.2"]);
        assert_eq!(map[&Var::plain(1)], vec![Var::new(1, 1), Var::new(1, 2)]);
        let (pol, _) = ideal(&["x1^2", "x1*x2", "x2^2"]).polarize().unwrap();
        assert_eq!(gens(&pol), ["x1*x1.2", "x1*x2", "x2*x2.2"]);
        let sq = cover_ideal(&c4());
        assert_eq!(sq.polarize().unwrap().0, sq);
        assert!(pol.polarize().is_err());
        assert!(MonomialIdeal::zero(&amb(2)).polarize().unwrap().0.is_zero());
    }

    #[test]
    fn max_degrees() {
        assert_eq!(cover_ideal(&p(3)).deg_max().unwrap(), 2);
        assert_eq!(cover_ideal(&c4()).deg_max().unwrap(), 2);
        assert_eq!(MonomialIdeal::unit(&amb(1)).deg_max().unwrap(), 0);
        assert!(MonomialIdeal::zero(&amb(1)).deg_max().is_err());
    }

    #[test]
    fn text_format() {
        let i = MonomialIdeal::parse_text("x1^2*x2\nx2^2\n").unwrap();
        assert_eq!(gens(&i), ["x2^2", "x1^2*x2"]);
        assert_eq!(i.to_text(), "x2^2\nx1^2*x2\n");
        assert!(MonomialIdeal::parse_text("1\n").unwrap().is_unit());
        assert!(MonomialIdeal::parse_text("").unwrap().is_zero());
        match MonomialIdeal::parse_text("x1\n  x2^a\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
    }
}
