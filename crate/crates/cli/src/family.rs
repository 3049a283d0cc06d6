//! Enumeration of connected graphs up to isomorphism and the sweep families.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use symcover::resolutions::graph_is_cohen_macaulay;
use symcover::{CanonicalForm, Error, FieldSpec, Graph, Result};

/// Largest vertex count for the families built from all connected graphs.
pub const MAX_ENUMERATED_VERTICES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    AllGraphs,
    Bipartite,
    VeryWellCovered,
    CmVeryWellCovered,
    Whiskered,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::AllGraphs,
        Family::Bipartite,
        Family::VeryWellCovered,
        Family::CmVeryWellCovered,
        Family::Whiskered,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Family::AllGraphs => "all-graphs",
            Family::Bipartite => "bipartite",
            Family::VeryWellCovered => "very-well-covered",
            Family::CmVeryWellCovered => "cm-very-well-covered",
            Family::Whiskered => "whiskered",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::Input(format!("unknown family `{s}`")))
    }
}

/// Canonical representatives (vertices `1..=n`) of the connected graphs on
/// exactly `n` vertices, one per isomorphism class, sorted by canonical code.
/// Each is grown from a connected graph on `n - 1` vertices by a new vertex
/// with a nonempty neighborhood.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATED_VERTICES {
        return Err(Error::Resource(format!(
            "graph enumeration is limited to {MAX_ENUMERATED_VERTICES} vertices"
        )));
    }
    let mut level = match n {
        0 => return Ok(Vec::new()),
        _ => vec![Graph::plain(1, &[])?],
    };
    for m in 2..=n {
        let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
        let mut next: Vec<(CanonicalForm, Graph)> = Vec::new();
        for g in &level {
            let old: Vec<(u32, u32)> = g.edges().map(|(u, v)| (u.base, v.base)).collect();
            for subset in 1u32..(1 << (m - 1)) {
                let mut edges = old.clone();
                edges.extend(
                    (0..m as u32 - 1)
                        .filter(|i| subset >> i & 1 == 1)
                        .map(|i| (i + 1, m as u32)),
                );
                let (form, rep) = Graph::plain(m as u32, &edges)?.canonical_representative(MAX_ENUMERATED_VERTICES)?;
                if seen.insert(form) {
                    next.push((form, rep));
                }
            }
        }
        next.sort_by_key(|(f, _)| *f);
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    Ok(level)
}

/// The members of `family` with at least one edge and at most
/// `max_vertices` vertices, in order of vertex count and then canonical code.
/// Whiskered members come from bases with at least one edge.
pub fn enumerate_family(family: Family, max_vertices: usize, field: FieldSpec) -> Result<Vec<Graph>> {
    let bases = match family {
        Family::Whiskered => max_vertices / 2,
        _ => max_vertices,
    };
    if bases > MAX_ENUMERATED_VERTICES {
        return Err(Error::Input(format!(
            "family {family} supports at most {} vertices",
            match family {
                Family::Whiskered => 2 * MAX_ENUMERATED_VERTICES,
                _ => MAX_ENUMERATED_VERTICES,
            }
        )));
    }
    let mut out = Vec::new();
    for n in 1..=bases {
        for g in connected_graphs(n)? {
            match family {
                _ if g.num_edges() == 0 => {}
                Family::Whiskered => out.push(g.whisker()?),
                Family::AllGraphs => out.push(g),
                Family::Bipartite if g.is_bipartite() => out.push(g),
                Family::VeryWellCovered if g.is_very_well_covered() => out.push(g),
                Family::CmVeryWellCovered if g.is_very_well_covered() && graph_is_cohen_macaulay(&g, field)? => {
                    out.push(g)
                }
                _ => {}
            }
        }
    }
    Ok(out)
}
