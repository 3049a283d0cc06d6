//! Graded Betti numbers, regularity, projective dimension and depth, linear
//! resolutions and the Cohen–Macaulay property.

mod betti;
mod cm;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{input, Error, Result};
use crate::homology::homology_of_facets;
use crate::monomial::MonomialIdeal;
use crate::simplicial::SimplicialComplex;

pub use betti::{betti_table, betti_table_squarefree, betti_table_squarefree_with_cap, betti_table_with_cap};
pub use cm::{graph_is_cohen_macaulay, graph_reisner_criterion, is_cohen_macaulay, reisner_criterion};

/// Largest number of (polarized) variables the Betti engine accepts by default.
pub const DEFAULT_AMBIENT_CAP: usize = 20;

/// Coefficient field: the rationals or `GF(p)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    characteristic: u32,
}

fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d: &u32| d.saturating_mul(*d) <= p)
            .all(|d| !p.is_multiple_of(d))
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    /// `0` or a prime.
    pub fn new(characteristic: u32) -> Result<FieldSpec> {
        if characteristic != 0 && !is_prime(characteristic) {
            return input(format!("characteristic {characteristic} is neither 0 nor prime"));
        }
        Ok(FieldSpec { characteristic })
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "0"),
            p => write!(f, "p{p}"),
        }
    }
}

/// Accepts `0`, `p` or `p<p>` for a prime `p`.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FieldSpec> {
        let digits = s.strip_prefix('p').unwrap_or(s);
        let c: u32 = digits
            .parse()
            .map_err(|_| Error::Input(format!("bad field `{s}`, expected 0 or a prime")))?;
        if s.starts_with('p') && c == 0 {
            return input("bad field `p0`");
        }
        FieldSpec::new(c)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Subject {
    /// Betti numbers of `I`.
    Ideal,
    /// Betti numbers of `S/I`.
    Quotient,
}

/// Nonzero graded Betti numbers `β_{i,j}` of `I` or `S/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    subject: Subject,
    ambient_size: usize,
    field: FieldSpec,
    entries: BTreeMap<(u32, u32), u64>,
}

impl BettiTable {
    pub(crate) fn new(
        subject: Subject,
        ambient_size: usize,
        field: FieldSpec,
        mut entries: BTreeMap<(u32, u32), u64>,
    ) -> BettiTable {
        entries.retain(|_, r| *r != 0);
        BettiTable {
            subject,
            ambient_size,
            field,
            entries,
        }
    }

    pub fn subject(&self) -> Subject {
        self.subject
    }

    pub fn ambient_size(&self) -> usize {
        self.ambient_size
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn entries(&self) -> &BTreeMap<(u32, u32), u64> {
        &self.entries
    }

    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The table of `S/I` from the table of `I`: `β_{i,j}(S/I) = β_{i-1,j}(I)`
    /// and `β_{0,0}(S/I) = 1`. A quotient table is returned unchanged.
    pub fn quotient(&self) -> BettiTable {
        if self.subject == Subject::Quotient {
            return self.clone();
        }
        let mut entries: BTreeMap<(u32, u32), u64> = self.entries.iter().map(|(&(i, j), &r)| ((i + 1, j), r)).collect();
        entries.insert((0, 0), 1);
        BettiTable::new(Subject::Quotient, self.ambient_size, self.field, entries)
    }

    /// Checks `β_{i,j}(S/I) = β_{i-1,j}(I)` and `β_{0,0}(S/I) = 1`.
    pub fn is_shift_of(&self, ideal: &BettiTable) -> bool {
        self.subject == Subject::Quotient
            && ideal.subject == Subject::Ideal
            && self.field == ideal.field
            && self.entries == ideal.quotient().entries
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<[u64; 3]> = self
            .entries
            .iter()
            .map(|(&(i, j), &r)| [u64::from(i), u64::from(j), r])
            .collect();
        let mut st = s.serialize_struct("BettiTable", 3)?;
        st.serialize_field("subject", &self.subject)?;
        st.serialize_field("field", &self.field)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

fn nonempty(t: &BettiTable) -> Result<()> {
    if t.is_empty() {
        return input("the Betti table is empty");
    }
    Ok(())
}

/// `max(j - i)` over nonzero entries.
pub fn regularity(t: &BettiTable) -> Result<i64> {
    nonempty(t)?;
    Ok(t.entries
        .keys()
        .map(|&(i, j)| i64::from(j) - i64::from(i))
        .max()
        .unwrap())
}

/// Largest homological degree with a nonzero entry.
pub fn projective_dimension(t: &BettiTable) -> Result<u32> {
    nonempty(t)?;
    Ok(t.entries.keys().map(|&(i, _)| i).max().unwrap())
}

/// `depth(S/I) = n - pd(S/I)`.
pub fn depth_of_quotient(t: &BettiTable) -> Result<i64> {
    if t.subject != Subject::Quotient {
        return input("depth_of_quotient needs a table of S/I");
    }
    Ok(t.ambient_size as i64 - i64::from(projective_dimension(t)?))
}

/// `reg(S/I)`, with `reg(S/0) = 0`; `None` for the unit ideal, whose
/// quotient is the zero module.
pub fn quotient_regularity(i: &MonomialIdeal, field: FieldSpec) -> Result<Option<i64>> {
    quotient_regularity_with_cap(i, field, DEFAULT_AMBIENT_CAP)
}

pub fn quotient_regularity_with_cap(i: &MonomialIdeal, field: FieldSpec, cap: usize) -> Result<Option<i64>> {
    if i.is_unit() {
        return Ok(None);
    }
    if i.is_zero() {
        return Ok(Some(0));
    }
    regularity(&betti_table_with_cap(i, field, cap)?.quotient()).map(Some)
}

/// `reg(I)`, with `reg(S) = 0`; `None` for the zero ideal.
pub fn ideal_regularity(i: &MonomialIdeal, field: FieldSpec) -> Result<Option<i64>> {
    ideal_regularity_with_cap(i, field, DEFAULT_AMBIENT_CAP)
}

pub fn ideal_regularity_with_cap(i: &MonomialIdeal, field: FieldSpec, cap: usize) -> Result<Option<i64>> {
    if i.is_zero() {
        return Ok(None);
    }
    if i.is_unit() {
        return Ok(Some(0));
    }
    regularity(&betti_table_with_cap(i, field, cap)?).map(Some)
}

/// All generators have one degree `d` and every nonzero `β_{i,j}(I)` has
/// `j - i = d`. Mixed generator degrees give `false` without any homology.
pub fn has_linear_resolution(i: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    has_linear_resolution_with_cap(i, field, DEFAULT_AMBIENT_CAP)
}

pub fn has_linear_resolution_with_cap(i: &MonomialIdeal, field: FieldSpec, cap: usize) -> Result<bool> {
    if i.is_zero() || i.is_unit() {
        return input("linear resolution needs a proper nonzero ideal");
    }
    let d = i.generators()[0].degree();
    if i.generators().iter().any(|g| g.degree() != d) {
        return Ok(false);
    }
    let t = betti_table_with_cap(i, field, cap)?;
    Ok(t.entries
        .keys()
        .all(|&(a, b)| i64::from(b) - i64::from(a) == i64::from(d)))
}

/// Ranks of `H̃_d(Δ)` for `d = -1, ..., dim Δ`; empty for the void complex.
pub fn reduced_homology_ranks(delta: &SimplicialComplex, field: FieldSpec) -> Vec<u64> {
    let Some(dim) = delta.dim() else {
        return Vec::new();
    };
    let mut h = homology_of_facets(&delta.facet_masks(), field.characteristic());
    h.resize((dim + 2) as usize, 0);
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::monomial::{cover_ideal, Monomial};
    use crate::var::Var;

    fn ideal(gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::generated_by(gens.iter().map(|s| s.parse::<Monomial>().unwrap()))
    }

    fn vs(ids: &[u32]) -> Vec<Var> {
        ids.iter().map(|&i| Var::plain(i)).collect()
    }

    fn path(n: u32) -> Graph {
        let edges: Vec<(u32, u32)> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::plain(n, &edges).unwrap()
    }

    const Q: FieldSpec = FieldSpec::RATIONALS;

    #[test]
    fn field_specs() {
        assert_eq!("0".parse::<FieldSpec>().unwrap(), Q);
        assert_eq!("2".parse::<FieldSpec>().unwrap().to_string(), "p2");
        assert_eq!("p3".parse::<FieldSpec>().unwrap().characteristic(), 3);
        for bad in ["4", "1", "p0", "x", "", "-2"] {
            assert!(bad.parse::<FieldSpec>().is_err(), "{bad}");
        }
        assert!(FieldSpec::new(65_521).is_ok());
    }

    #[test]
    fn homology_ranks() {
        let pts = SimplicialComplex::new(vs(&[1, 2]), [vs(&[1]), vs(&[2])]).unwrap();
        assert_eq!(reduced_homology_ranks(&pts, Q), vec![0, 1]);
        let tri = SimplicialComplex::new(vs(&[1, 2, 3]), [vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3])]).unwrap();
        assert_eq!(reduced_homology_ranks(&tri, Q), vec![0, 0, 1]);
        assert_eq!(
            reduced_homology_ranks(&SimplicialComplex::simplex(&vs(&[1, 2])), Q),
            vec![0, 0, 0]
        );
        assert_eq!(
            reduced_homology_ranks(&SimplicialComplex::irrelevant(&vs(&[1])), Q),
            vec![1]
        );
        assert!(reduced_homology_ranks(&SimplicialComplex::void(&vs(&[1])), Q).is_empty());
    }

    #[test]
    fn regular_sequence() {
        let t = betti_table_squarefree(&ideal(&["x1*x3", "x2*x4"]), Q).unwrap();
        let want: BTreeMap<(u32, u32), u64> = [((0, 2), 2), ((1, 4), 1)].into();
        assert_eq!(t.entries(), &want);
        let q = t.quotient();
        assert!(q.is_shift_of(&t));
        assert_eq!(regularity(&q).unwrap(), 2);
        assert_eq!(projective_dimension(&q).unwrap(), 2);
        assert_eq!(depth_of_quotient(&q).unwrap(), 2);
        assert!(depth_of_quotient(&t).is_err());
    }

    #[test]
    fn single_variable() {
        let t = betti_table_squarefree(&ideal(&["x1"]), Q).unwrap();
        assert_eq!(t.entries().len(), 1);
        assert_eq!(t.get(0, 1), 1);
        let q = t.quotient();
        assert_eq!(regularity(&q).unwrap(), 0);
        assert_eq!(projective_dimension(&q).unwrap(), 1);
        assert_eq!(depth_of_quotient(&q).unwrap(), 0);
    }

    #[test]
    fn path_cover_ideal_is_linear() {
        let j = cover_ideal(&path(4));
        let t = betti_table_squarefree(&j, Q).unwrap();
        let want: BTreeMap<(u32, u32), u64> = [((0, 2), 3), ((1, 3), 2)].into();
        assert_eq!(t.entries(), &want);
        assert_eq!(regularity(&t.quotient()).unwrap(), 1);
        assert!(has_linear_resolution(&j, Q).unwrap());
    }

    #[test]
    fn non_squarefree_tables() {
        let t = betti_table(&ideal(&["x1^2", "x1*x2", "x2^2"]), Q).unwrap();
        let want: BTreeMap<(u32, u32), u64> = [((0, 2), 3), ((1, 3), 2)].into();
        assert_eq!(t.entries(), &want);
        let t = betti_table(&ideal(&["x1^3"]), Q).unwrap();
        assert_eq!(t.entries().len(), 1);
        assert_eq!(t.get(0, 3), 1);
        assert!(betti_table_squarefree(&ideal(&["x1^3"]), Q).is_err());
        let sq = ideal(&["x1*x2", "x2*x3"]);
        assert_eq!(betti_table(&sq, Q).unwrap(), betti_table_squarefree(&sq, Q).unwrap());
    }

    #[test]
    fn degenerate_ideals() {
        let z = MonomialIdeal::zero(&vs(&[1, 2]));
        assert!(betti_table(&z, Q).unwrap().is_empty());
        assert!(regularity(&betti_table(&z, Q).unwrap()).is_err());
        assert!(betti_table(&MonomialIdeal::unit(&vs(&[1])), Q).is_err());
        assert_eq!(quotient_regularity(&z, Q).unwrap(), Some(0));
        assert_eq!(quotient_regularity(&MonomialIdeal::unit(&[]), Q).unwrap(), None);
        assert_eq!(ideal_regularity(&z, Q).unwrap(), None);
    }

    #[test]
    fn linear_resolution_examples() {
        let c4 = Graph::plain(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert!(!has_linear_resolution(&cover_ideal(&c4), Q).unwrap());
        let k3 = Graph::plain(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(has_linear_resolution(&cover_ideal(&k3), Q).unwrap());
        assert!(!has_linear_resolution(&ideal(&["x1", "x2*x3"]), Q).unwrap());
    }

    #[test]
    fn ambient_cap() {
        let gens: Vec<String> = (1..=11).map(|i| format!("x{}*x{}", 2 * i - 1, 2 * i)).collect();
        let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
        let big = ideal(&refs);
        assert!(matches!(betti_table(&big, Q), Err(Error::Resource(_))));
        assert!(betti_table_with_cap(&big, Q, 22).is_ok());
    }

    #[test]
    fn json_shape() {
        let t = betti_table(&ideal(&["x1*x3", "x2*x4"]), FieldSpec::new(2).unwrap()).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"subject":"ideal","field":"p2","entries":[[0,2,2],[1,4,1]]}"#);
    }
}
