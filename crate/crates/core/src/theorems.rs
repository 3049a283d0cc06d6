//! Checkers that run the structural results on concrete instances and
//! report `verified`, `violated`, `inapplicable` or `resource-exhausted`
//! together with a witness.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{input, Error, Result};
use crate::graph::Graph;
use crate::monomial::{cover_ideal, edge_ideal, Monomial, MonomialIdeal};
use crate::quotients::is_linear_quotient_order;
use crate::resolutions::{
    betti_table_with_cap, depth_of_quotient, graph_is_cohen_macaulay, has_linear_resolution_with_cap,
    is_cohen_macaulay, projective_dimension, quotient_regularity_with_cap, reisner_criterion, FieldSpec,
    DEFAULT_AMBIENT_CAP,
};
use crate::search::{Search, DEFAULT_BUDGET};
use crate::simplicial::SimplicialComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StatementId {
    Sympol,
    GkVwc,
    GkCm,
    MainLinres,
    MainLinquot,
    LinbiFwd,
    LinbiBwd,
    DepthMono,
    RegUpper,
    RegLower,
    LinqPol,
    TeraiDual,
    EagonReiner,
    RestrictLemma,
    ColonPower,
}

impl StatementId {
    pub const ALL: [StatementId; 15] = [
        StatementId::Sympol,
        StatementId::GkVwc,
        StatementId::GkCm,
        StatementId::MainLinres,
        StatementId::MainLinquot,
        StatementId::LinbiFwd,
        StatementId::LinbiBwd,
        StatementId::DepthMono,
        StatementId::RegUpper,
        StatementId::RegLower,
        StatementId::LinqPol,
        StatementId::TeraiDual,
        StatementId::EagonReiner,
        StatementId::RestrictLemma,
        StatementId::ColonPower,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            StatementId::Sympol => "SYMPOL",
            StatementId::GkVwc => "GK_VWC",
            StatementId::GkCm => "GK_CM",
            StatementId::MainLinres => "MAIN_LINRES",
            StatementId::MainLinquot => "MAIN_LINQUOT",
            StatementId::LinbiFwd => "LINBI_FWD",
            StatementId::LinbiBwd => "LINBI_BWD",
            StatementId::DepthMono => "DEPTH_MONO",
            StatementId::RegUpper => "REG_UPPER",
            StatementId::RegLower => "REG_LOWER",
            StatementId::LinqPol => "LINQ_POL",
            StatementId::TeraiDual => "TERAI_DUAL",
            StatementId::EagonReiner => "EAGON_REINER",
            StatementId::RestrictLemma => "RESTRICT_LEMMA",
            StatementId::ColonPower => "COLON_POWER",
        }
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StatementId {
    type Err = Error;

    fn from_str(s: &str) -> Result<StatementId> {
        StatementId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Input(format!("unknown statement `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Violated,
    Inapplicable,
    ResourceExhausted,
}

/// What a report is about.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Subject {
    Graph {
        vertices: Vec<String>,
        edges: Vec<[String; 2]>,
    },
    Ideal {
        generators: Vec<String>,
    },
}

impl Subject {
    pub fn graph(g: &Graph) -> Subject {
        Subject::Graph {
            vertices: g.vertices().iter().map(|v| v.to_string()).collect(),
            edges: g.edges().map(|(u, v)| [u.to_string(), v.to_string()]).collect(),
        }
    }

    pub fn ideal(i: &MonomialIdeal) -> Subject {
        Subject::Ideal {
            generators: i.generators().iter().map(|g| g.to_string()).collect(),
        }
    }
}

/// The instance a statement was checked on. For checks over a range of
/// powers, `k` is the largest power.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    #[serde(flatten)]
    pub subject: Subject,
    pub k: Option<u32>,
    pub field: Option<FieldSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub statement: StatementId,
    pub instance: Instance,
    pub status: Status,
    pub witness: Value,
}

/// Search budget and Betti-engine cap used by the checkers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub search_budget: u64,
    pub ambient_cap: usize,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            search_budget: DEFAULT_BUDGET,
            ambient_cap: DEFAULT_AMBIENT_CAP,
        }
    }
}

type Outcome = (Status, Value);

fn holds(ok: bool) -> Status {
    if ok {
        Status::Verified
    } else {
        Status::Violated
    }
}

fn inapplicable(hypothesis: &str) -> Outcome {
    (Status::Inapplicable, json!({ "failed_hypothesis": hypothesis }))
}

fn gens(i: &MonomialIdeal) -> Vec<String> {
    i.generators().iter().map(|g| g.to_string()).collect()
}

/// Turns resource errors into `n` exhausted outcomes; other errors propagate.
fn settle(r: Result<Vec<Outcome>>, n: usize) -> Result<Vec<Outcome>> {
    match r {
        Err(Error::Resource(reason)) => Ok(vec![(Status::ResourceExhausted, json!({ "reason": reason })); n]),
        other => other,
    }
}

fn reports(ids: &[StatementId], instance: Instance, outcomes: Vec<Outcome>) -> Vec<VerificationReport> {
    ids.iter()
        .zip(outcomes)
        .map(|(&statement, (status, witness))| VerificationReport {
            statement,
            instance: instance.clone(),
            status,
            witness,
        })
        .collect()
}

fn require_edge(g: &Graph, what: &str) -> Result<()> {
    if g.num_edges() == 0 {
        return input(format!("{what} needs a graph with at least one edge"));
    }
    Ok(())
}

/// `(J(G)^(k))^pol = J(G_k)` as generator lists.
pub fn verify_sympol(g: &Graph, k: u32) -> Result<VerificationReport> {
    require_edge(g, "verify_sympol")?;
    let inst = Instance {
        subject: Subject::graph(g),
        k: Some(k),
        field: None,
    };
    let out = settle(
        (|| {
            let (pol, _) = cover_ideal(g).symbolic_power(k)?.polarize()?;
            let gk = cover_ideal(&g.build_gk(k)?);
            let ok = pol.generators() == gk.generators();
            Ok(vec![(
                holds(ok),
                json!({ "polarized": gens(&pol), "gk_cover": gens(&gk) }),
            )])
        })(),
        1,
    )?;
    Ok(reports(&[StatementId::Sympol], inst, out).remove(0))
}

/// `G_k` is very well-covered when `G` is, and Cohen–Macaulay when `G` also is.
/// Reports `GK_VWC` then `GK_CM`.
pub fn verify_gk_structure(g: &Graph, k: u32, field: FieldSpec) -> Result<Vec<VerificationReport>> {
    if let Some(v) = g.isolated_vertices().first() {
        return input(format!(
            "verify_gk_structure needs no isolated vertices, {v} is isolated"
        ));
    }
    let inst = Instance {
        subject: Subject::graph(g),
        k: Some(k),
        field: Some(field),
    };
    let out = settle(
        (|| {
            let gk = g.build_gk(k)?;
            if !g.is_very_well_covered() {
                let (status, mut w) = inapplicable("G is very well-covered");
                w["gk_unmixed"] = json!(gk.is_unmixed());
                return Ok(vec![(status, w.clone()), (status, w)]);
            }
            let gk_vwc = gk.is_very_well_covered();
            let vwc = (
                holds(gk_vwc),
                json!({ "gk_vertices": gk.num_vertices(), "gk_very_well_covered": gk_vwc }),
            );
            let delta = SimplicialComplex::independence_complex(g);
            if !is_cohen_macaulay(&delta, field)? {
                return Ok(vec![vwc, inapplicable("G is Cohen-Macaulay")]);
            }
            let gk_cm = graph_is_cohen_macaulay(&gk, field)?;
            let cm = (
                holds(gk_cm),
                json!({ "gk_vertices": gk.num_vertices(), "gk_cohen_macaulay": gk_cm }),
            );
            Ok(vec![vwc, cm])
        })(),
        2,
    )?;
    Ok(reports(&[StatementId::GkVwc, StatementId::GkCm], inst, out))
}

/// For very well-covered `G` with `J(G)` linear, `J(G)^(k)` has a linear
/// resolution and linear quotients. Reports `MAIN_LINRES` then `MAIN_LINQUOT`.
pub fn verify_main(g: &Graph, k: u32, field: FieldSpec, limits: &Limits) -> Result<Vec<VerificationReport>> {
    let inst = Instance {
        subject: Subject::graph(g),
        k: Some(k),
        field: Some(field),
    };
    let out = settle(
        (|| {
            if g.num_edges() == 0 {
                let h = inapplicable("G has an edge");
                return Ok(vec![h.clone(), h]);
            }
            if !g.is_very_well_covered() {
                let h = inapplicable("G is very well-covered");
                return Ok(vec![h.clone(), h]);
            }
            // the cover ideal is linear exactly when Δ(G) is Cohen–Macaulay;
            // both sides are computed and must agree
            if !graph_is_cohen_macaulay(g, field)? {
                let h = inapplicable("J(G) has a linear resolution");
                return Ok(vec![h.clone(), h]);
            }
            let power = cover_ideal(g).symbolic_power(k)?;
            let linres = has_linear_resolution_with_cap(&power, field, limits.ambient_cap)?;
            let res = (
                holds(linres),
                json!({ "generators": gens(&power), "linear_resolution": linres }),
            );
            let quot = match power.has_linear_quotients(limits.search_budget)? {
                Search::Yes(order) => {
                    let ok = is_linear_quotient_order(&order);
                    let order: Vec<String> = order.iter().map(Monomial::to_string).collect();
                    (holds(ok), json!({ "order": order, "order_revalidated": ok }))
                }
                Search::No => (
                    Status::Violated,
                    json!({ "generators": gens(&power), "linear_quotients": false }),
                ),
                Search::BudgetExhausted => (
                    Status::ResourceExhausted,
                    json!({ "reason": format!("search budget {} exhausted", limits.search_budget) }),
                ),
            };
            Ok(vec![res, quot])
        })(),
        2,
    )?;
    Ok(reports(&[StatementId::MainLinres, StatementId::MainLinquot], inst, out))
}

/// For bipartite `G`: `J(G)` linear iff `J(G)^k` linear. Also checks that the
/// symbolic and ordinary powers coincide. Reports `LINBI_FWD` then `LINBI_BWD`.
pub fn verify_linbi(g: &Graph, k: u32, field: FieldSpec, limits: &Limits) -> Result<Vec<VerificationReport>> {
    if k < 1 {
        return input("verify_linbi needs k >= 1");
    }
    let inst = Instance {
        subject: Subject::graph(g),
        k: Some(k),
        field: Some(field),
    };
    let out = settle(
        (|| {
            if !g.is_bipartite() {
                let h = inapplicable("G is bipartite");
                return Ok(vec![h.clone(), h]);
            }
            if g.num_edges() == 0 {
                let h = inapplicable("G has an edge");
                return Ok(vec![h.clone(), h]);
            }
            let j = cover_ideal(g);
            let power = j.power(k)?;
            let coincide = power == j.symbolic_power(k)?;
            let base = has_linear_resolution_with_cap(&j, field, limits.ambient_cap)?;
            let pow = has_linear_resolution_with_cap(&power, field, limits.ambient_cap)?;
            let w = json!({
                "j_linear": base,
                "power_linear": pow,
                "symbolic_equals_ordinary": coincide,
            });
            Ok(vec![
                (holds(coincide && (!base || pow)), w.clone()),
                (holds(coincide && (!pow || base)), w),
            ])
        })(),
        2,
    )?;
    Ok(reports(&[StatementId::LinbiFwd, StatementId::LinbiBwd], inst, out))
}

/// For very well-covered `G`, `depth S/J(G)^(k)` is non-increasing for
/// `k = 1..=kmax`.
pub fn verify_depth_monotone(g: &Graph, kmax: u32, field: FieldSpec, limits: &Limits) -> Result<VerificationReport> {
    if kmax < 1 {
        return input("verify_depth_monotone needs kmax >= 1");
    }
    let inst = Instance {
        subject: Subject::graph(g),
        k: Some(kmax),
        field: Some(field),
    };
    let out = settle(
        (|| {
            if g.num_edges() == 0 {
                return Ok(vec![inapplicable("G has an edge")]);
            }
            if !g.is_very_well_covered() {
                return Ok(vec![inapplicable("G is very well-covered")]);
            }
            let j = cover_ideal(g);
            let mut depths = Vec::new();
            for k in 1..=kmax {
                let t = betti_table_with_cap(&j.symbolic_power(k)?, field, limits.ambient_cap)?;
                depths.push(depth_of_quotient(&t.quotient())?);
            }
            let ok = depths.windows(2).all(|w| w[0] >= w[1]);
            Ok(vec![(holds(ok), json!({ "depths": depths }))])
        })(),
        1,
    )?;
    Ok(reports(&[StatementId::DepthMono], inst, out).remove(0))
}

/// For bipartite `G` with an edge and `d = deg J(G)`:
/// `k·d − 1 ≤ reg S/J(G)^k ≤ k·d + reg S/J(G) − 1` for `k = 1..=kmax`.
/// Reports `REG_LOWER` then `REG_UPPER`.
pub fn verify_reg_bound(g: &Graph, kmax: u32, field: FieldSpec, limits: &Limits) -> Result<Vec<VerificationReport>> {
    if kmax < 1 {
        return input("verify_reg_bound needs kmax >= 1");
    }
    let inst = Instance {
        subject: Subject::graph(g),
        k: Some(kmax),
        field: Some(field),
    };
    let out = settle(
        (|| {
            if !g.is_bipartite() {
                let h = inapplicable("G is bipartite");
                return Ok(vec![h.clone(), h]);
            }
            if g.num_edges() == 0 {
                let h = inapplicable("G has an edge");
                return Ok(vec![h.clone(), h]);
            }
            let j = cover_ideal(g);
            let d = i64::from(j.deg_max()?);
            let reg = |i: &MonomialIdeal| -> Result<i64> {
                quotient_regularity_with_cap(i, field, limits.ambient_cap)?
                    .ok_or_else(|| Error::Internal("proper ideal with zero quotient".into()))
            };
            let r1 = reg(&j)?;
            let (mut lower_ok, mut upper_ok) = (true, true);
            let mut rows = Vec::new();
            for k in 1..=kmax {
                let power = j.power(k)?;
                if power != j.symbolic_power(k)? {
                    return Err(Error::Internal(format!(
                        "symbolic and ordinary power {k} differ for a bipartite graph"
                    )));
                }
                let rk = reg(&power)?;
                let (lo, hi) = (i64::from(k) * d - 1, i64::from(k) * d + r1 - 1);
                lower_ok &= lo <= rk;
                upper_ok &= rk <= hi;
                rows.push(json!({ "k": k, "reg": rk, "lower": lo, "upper": hi }));
            }
            let w = json!({ "deg": d, "reg_quotient_j": r1, "powers": rows });
            Ok(vec![(holds(lower_ok), w.clone()), (holds(upper_ok), w)])
        })(),
        2,
    )?;
    Ok(reports(&[StatementId::RegLower, StatementId::RegUpper], inst, out))
}

/// `I` has linear quotients iff its polarization does.
pub fn verify_linq_pol(i: &MonomialIdeal, limits: &Limits) -> Result<VerificationReport> {
    if i.is_zero() || i.is_unit() {
        return input("verify_linq_pol needs a proper nonzero ideal");
    }
    let inst = Instance {
        subject: Subject::ideal(i),
        k: None,
        field: None,
    };
    let out = settle(
        (|| {
            let (pol, _) = i.polarize()?;
            let a = i.has_linear_quotients(limits.search_budget)?;
            let b = pol.has_linear_quotients(limits.search_budget)?;
            let show = |s: &Search<Vec<Monomial>>| match s {
                Search::Yes(o) => json!(o.iter().map(Monomial::to_string).collect::<Vec<_>>()),
                Search::No => json!(false),
                Search::BudgetExhausted => json!(null),
            };
            let w = json!({ "order": show(&a), "polarized_order": show(&b) });
            let status = match (a.decided(), b.decided()) {
                (Some(x), Some(y)) => holds(x == y),
                _ => Status::ResourceExhausted,
            };
            Ok(vec![(status, w)])
        })(),
        1,
    )?;
    Ok(reports(&[StatementId::LinqPol], inst, out).remove(0))
}

/// Eagon–Reiner and Terai duality for `J(G)`, the restriction identity for
/// every vertex, and `J² : x_U = J` for each bipartition side `U`. Reports
/// `EAGON_REINER`, `TERAI_DUAL`, `RESTRICT_LEMMA`, `COLON_POWER`.
pub fn verify_duality_suite(g: &Graph, field: FieldSpec, limits: &Limits) -> Result<Vec<VerificationReport>> {
    require_edge(g, "verify_duality_suite")?;
    let inst = Instance {
        subject: Subject::graph(g),
        k: None,
        field: Some(field),
    };
    let j = cover_ideal(g);
    let cap = limits.ambient_cap;
    let eagon = settle(
        (|| {
            let cm = reisner_criterion(&SimplicialComplex::independence_complex(g), field)?;
            let lin = has_linear_resolution_with_cap(&j, field, cap)?;
            Ok(vec![(
                holds(cm == lin),
                json!({ "cohen_macaulay": cm, "linear_resolution": lin }),
            )])
        })(),
        1,
    )?;
    let terai = settle(
        (|| {
            let pd = projective_dimension(&betti_table_with_cap(&j, field, cap)?.quotient())?;
            let reg = quotient_regularity_with_cap(&edge_ideal(g), field, cap)?
                .ok_or_else(|| Error::Internal("edge ideal is the unit ideal".into()))?;
            let ok = i64::from(pd) == reg + 1;
            Ok(vec![(
                holds(ok),
                json!({ "pd_quotient_cover": pd, "reg_quotient_edge": reg }),
            )])
        })(),
        1,
    )?;
    let restrict = settle(restriction_identity(g, &j), 1)?;
    let colon = settle(colon_power(g, &j), 1)?;
    let out = [eagon, terai, restrict, colon].into_iter().flatten().collect();
    Ok(reports(
        &[
            StatementId::EagonReiner,
            StatementId::TeraiDual,
            StatementId::RestrictLemma,
            StatementId::ColonPower,
        ],
        inst,
        out,
    ))
}

/// `J(G) ∩ S' = (∏_{y ∈ N(v)} y) · J(G \ N[v])` in the ring without `v`.
fn restriction_identity(g: &Graph, j: &MonomialIdeal) -> Result<Vec<Outcome>> {
    let mut failures = Vec::new();
    for &v in g.vertices() {
        let lhs = j.restrict(v)?;
        let nbrs = g.neighbors(v)?;
        let closed = g.closed_neighborhood(&[v])?;
        let rest = cover_ideal(&g.delete_vertices(&closed)?);
        let rhs = rest.scale(&Monomial::product(nbrs)).with_ambient(lhs.ambient());
        if lhs != rhs {
            failures.push(json!({ "vertex": v.to_string(), "restriction": gens(&lhs), "expected": gens(&rhs) }));
        }
    }
    let w = json!({ "vertices_checked": g.num_vertices(), "failures": failures });
    Ok(vec![(holds(failures.is_empty()), w)])
}

/// `J² : x_U = J` for both sides `U` of a bipartition, isolated vertices
/// left out of `x_U`.
fn colon_power(g: &Graph, j: &MonomialIdeal) -> Result<Vec<Outcome>> {
    let Some((a, b)) = g.bipartition() else {
        return Ok(vec![inapplicable("G is bipartite")]);
    };
    let isolated = g.isolated_vertices();
    let square = j.power(2)?;
    let mut sides = Vec::new();
    let mut ok = true;
    for side in [a, b] {
        let side: Vec<_> = side.into_iter().filter(|v| !isolated.contains(v)).collect();
        let colon = square.colon(&Monomial::product(side.iter().copied()));
        let equal = &colon == j;
        ok &= equal;
        sides.push(json!({
            "side": side.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "colon_equals_j": equal,
            "colon": gens(&colon),
        }));
    }
    Ok(vec![(holds(ok), json!({ "k": 2, "sides": sides }))])
}
