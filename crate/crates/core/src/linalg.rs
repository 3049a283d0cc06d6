//! Exact ranks of sparse integer matrices over `Q` or `GF(p)`.
//!
//! Rows are sparse lists of `(column, value)` sorted by column. Rational rank
//! uses fraction-free elimination in `i128` and restarts in arbitrary
//! precision if an intermediate value overflows.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type SparseRow = Vec<(u32, i64)>;

/// Rank over the field of characteristic `p` (`0` for the rationals).
pub(crate) fn rank(rows: &[SparseRow], p: u32) -> usize {
    if p == 0 {
        rank_rational(rows)
    } else {
        rank_mod_p(rows, u64::from(p))
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn rank_mod_p(rows: &[SparseRow], p: u64) -> usize {
    // pivot rows are normalized to leading coefficient 1
    let mut pivots: HashMap<u32, Vec<(u32, u64)>> = HashMap::new();
    for row in rows {
        let mut r: Vec<(u32, u64)> = row
            .iter()
            .map(|&(c, v)| (c, v.rem_euclid(p as i64) as u64))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(lead, a)) = r.first() {
            match pivots.get(&lead) {
                Some(piv) => r = axpy_mod(&r, p - a, piv, p),
                None => {
                    let inv = pow_mod(a, p - 2, p);
                    for e in r.iter_mut() {
                        e.1 = e.1 * inv % p;
                    }
                    pivots.insert(lead, r);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// `x + s·y` modulo `p`.
fn axpy_mod(x: &[(u32, u64)], s: u64, y: &[(u32, u64)], p: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let cx = x.get(i).map_or(u32::MAX, |e| e.0);
        let cy = y.get(j).map_or(u32::MAX, |e| e.0);
        let (c, v) = if cx < cy {
            i += 1;
            (cx, x[i - 1].1)
        } else if cy < cx {
            j += 1;
            (cy, s * y[j - 1].1 % p)
        } else {
            i += 1;
            j += 1;
            (cx, (x[i - 1].1 + s * y[j - 1].1 % p) % p)
        };
        if v != 0 {
            out.push((c, v));
        }
    }
    out
}

/// Integer-like coefficients for fraction-free elimination.
trait Coef: Clone + Sized {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// `a·x − b·y`, or `None` on overflow.
    fn comb(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn is_unit(&self) -> bool;
    fn div_exact(&self, d: &Self) -> Self;
}

impl Coef for i128 {
    fn from_i64(v: i64) -> Self {
        i128::from(v)
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn comb(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_unit(&self) -> bool {
        self.abs() == 1
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

impl Coef for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn comb(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

fn rank_rational(rows: &[SparseRow]) -> usize {
    rank_fraction_free::<i128>(rows)
        .unwrap_or_else(|| rank_fraction_free::<BigInt>(rows).expect("arbitrary precision cannot overflow"))
}

/// `None` if a coefficient left the range of `T`.
fn rank_fraction_free<T: Coef>(rows: &[SparseRow]) -> Option<usize> {
    let mut pivots: HashMap<u32, Vec<(u32, T)>> = HashMap::new();
    for row in rows {
        let mut r: Vec<(u32, T)> = row
            .iter()
            .filter(|e| e.1 != 0)
            .map(|&(c, v)| (c, T::from_i64(v)))
            .collect();
        while let Some((lead, a)) = r.first().cloned() {
            match pivots.get(&lead) {
                Some(piv) => {
                    r = eliminate(&r, &a, piv)?;
                    normalize(&mut r);
                }
                None => {
                    pivots.insert(lead, r);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

/// `piv_lead·x − a·piv`, which cancels the leading entry `a` of `x`.
fn eliminate<T: Coef>(x: &[(u32, T)], a: &T, piv: &[(u32, T)]) -> Option<Vec<(u32, T)>> {
    let b = &piv[0].1;
    let zero = T::from_i64(0);
    let mut out = Vec::with_capacity(x.len() + piv.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < piv.len() {
        let cx = x.get(i).map_or(u32::MAX, |e| e.0);
        let cy = piv.get(j).map_or(u32::MAX, |e| e.0);
        let (c, v) = if cx < cy {
            i += 1;
            (cx, T::comb(b, &x[i - 1].1, a, &zero)?)
        } else if cy < cx {
            j += 1;
            (cy, T::comb(b, &zero, a, &piv[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            (cx, T::comb(b, &x[i - 1].1, a, &piv[j - 1].1)?)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    Some(out)
}

fn normalize<T: Coef>(r: &mut [(u32, T)]) {
    let Some(first) = r.first() else { return };
    let mut g = first.1.clone();
    for e in r.iter().skip(1) {
        if g.is_unit() {
            return;
        }
        g = g.gcd(&e.1);
    }
    if g.is_unit() || g.is_zero() {
        return;
    }
    for e in r.iter_mut() {
        e.1 = e.1.div_exact(&g);
    }
}
