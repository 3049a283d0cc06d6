//! Exhaustive ordering search shared by the linear-quotient and shelling tests.

use std::collections::HashSet;

use serde::Serialize;

/// Node budget used when the caller does not supply one.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Outcome of a bounded exhaustive search. Running out of budget is never
/// reported as `No`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "witness", rename_all = "kebab-case")]
pub enum Search<W> {
    Yes(W),
    No,
    BudgetExhausted,
}

impl<W> Search<W> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Search::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Search::No)
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Search<V> {
        match self {
            Search::Yes(w) => Search::Yes(f(w)),
            Search::No => Search::No,
            Search::BudgetExhausted => Search::BudgetExhausted,
        }
    }

    /// Drops the witness: `Some(true)`, `Some(false)`, or `None` when exhausted.
    pub fn decided(&self) -> Option<bool> {
        match self {
            Search::Yes(_) => Some(true),
            Search::No => Some(false),
            Search::BudgetExhausted => None,
        }
    }
}

/// Finds an ordering of `0..m` in which every item after the first is
/// `appendable` to the set of items placed before it. `appendable` must
/// depend only on that set, not on its order, which lets failed sets be
/// memoized. Items are tried in index order.
pub(crate) fn find_order(m: usize, budget: u64, appendable: impl Fn(&[usize], usize) -> bool) -> Search<Vec<usize>> {
    if m == 0 {
        return Search::Yes(Vec::new());
    }
    let mut st = OrderSearch {
        m,
        budget,
        nodes: 0,
        dead: HashSet::new(),
        placed: Vec::with_capacity(m),
        used: vec![0u64; m.div_ceil(64)],
        appendable,
    };
    match st.extend() {
        Some(true) => Search::Yes(st.placed),
        Some(false) => Search::No,
        None => Search::BudgetExhausted,
    }
}

struct OrderSearch<F> {
    m: usize,
    budget: u64,
    nodes: u64,
    dead: HashSet<Vec<u64>>,
    placed: Vec<usize>,
    used: Vec<u64>,
    appendable: F,
}

impl<F: Fn(&[usize], usize) -> bool> OrderSearch<F> {
    /// `Some(true)` on success with `placed` holding the order, `Some(false)`
    /// when no completion exists, `None` when the budget ran out.
    fn extend(&mut self) -> Option<bool> {
        if self.placed.len() == self.m {
            return Some(true);
        }
        if self.dead.contains(&self.used) {
            return Some(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        for c in 0..self.m {
            if self.used[c / 64] >> (c % 64) & 1 == 1 {
                continue;
            }
            if !self.placed.is_empty() && !(self.appendable)(&self.placed, c) {
                continue;
            }
            self.placed.push(c);
            self.used[c / 64] |= 1 << (c % 64);
            let r = self.extend();
            if r != Some(false) {
                return r;
            }
            self.used[c / 64] &= !(1 << (c % 64));
            self.placed.pop();
        }
        self.dead.insert(self.used.clone());
        Some(false)
    }
}
