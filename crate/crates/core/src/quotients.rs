//! Linear quotients of monomial ideals.

use crate::error::{input, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::search::{find_order, Search};
use crate::var::Var;

impl MonomialIdeal {
    /// Looks for an order `u_1, ..., u_m` of `G(I)` such that every colon
    /// `(u_1, ..., u_{i-1}) : u_i` is generated by variables. Generators are
    /// tried in the stored (degree, then lex) order. A witness order is
    /// returned on success.
    pub fn has_linear_quotients(&self, budget: u64) -> Result<Search<Vec<Monomial>>> {
        if self.is_zero() || self.is_unit() {
            return input("linear quotients need a proper nonzero ideal");
        }
        let gens = self.generators();
        let m = gens.len();
        // quotient[j][i] = u_j : u_i, and its variable when it has degree one
        let quotient: Vec<Vec<Monomial>> = gens
            .iter()
            .map(|uj| gens.iter().map(|ui| uj.colon(ui)).collect())
            .collect();
        let linear: Vec<Vec<Option<Var>>> = quotient
            .iter()
            .map(|row| {
                row.iter()
                    .map(|q| match q.exponents() {
                        [(v, 1)] => Some(*v),
                        _ => None,
                    })
                    .collect()
            })
            .collect();
        let r = find_order(m, budget, |placed, i| {
            let vars: Vec<Var> = placed.iter().filter_map(|&j| linear[j][i]).collect();
            placed
                .iter()
                .all(|&j| vars.iter().any(|&v| quotient[j][i].exponent(v) > 0))
        });
        Ok(r.map(|order| order.into_iter().map(|i| gens[i].clone()).collect()))
    }
}

/// Checks an order against the definition directly: every colon ideal
/// `(u_1, ..., u_{i-1}) : u_i` has only degree-one minimal generators.
pub fn is_linear_quotient_order(order: &[Monomial]) -> bool {
    (1..order.len()).all(|i| {
        let prefix = MonomialIdeal::generated_by(order[..i].iter().cloned());
        prefix.colon(&order[i]).generators().iter().all(|g| g.degree() == 1)
    })
}
