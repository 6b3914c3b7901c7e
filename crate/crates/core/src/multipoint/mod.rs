//! The multipoint tangency calculus.
//!
//! A line meeting a surface of degree `n` in `m = 2k` marked points, with the
//! points coinciding in `k` pairs, is counted by expanding
//! `prod_i (p_{2i-1} + p_{2i} - g)` times an extra line condition, rewriting
//! with the point-on-line and line relations until only terminal monomials
//! remain, and valuing those in `Z[n]`. Dividing by `k!` forgets the order of
//! the pairs.
//!
//! Reduction rules, applied to one monomial at a time:
//!
//! ```text
//! g^2 -> g_p + g_e      g g_p -> g_s     g g_e -> g_s     g g_s -> G
//! g_p g_e -> 0          g_p^2 -> G       g_e^2 -> G
//! p g   -> p^2 + g_e    p g_p -> p^3 + g_s                p g_s -> G + p^3 g
//! p^3 -> 0              codimension > 4 -> 0
//! ```
//!
//! Line relations are applied first. Point relations act on the marker with
//! the largest exponent (lowest index on ties), which keeps `g_e p^2` from
//! ever appearing in codimension 4.

mod count;
mod expression;

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::exactalg::Coefficient;

pub use count::Count;
pub use expression::{MultipointExpression, MultipointMonomial, LINE_CODIM, LINE_SYMBOLS};
use expression::{G, GE, GG, GP, GS};

/// The codimension of a complete tangency problem (lines form a 4-dimensional family).
pub const TARGET_CODIM: u32 = 4;

/// Rewrite steps allowed per reduction.
pub const REDUCTION_BUDGET: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MultipointError {
    #[error("number of pairs must be between 1 and 4, got {0}")]
    InvalidPairs(usize),
    #[error("{pairs} pair(s) need an extra condition of codimension {expected}, got codimension(s) {found:?}")]
    CodimensionMismatch { pairs: usize, expected: u32, found: Vec<u32> },
    #[error("the extra condition may only involve line symbols")]
    ExtraHasMarkers,
    #[error("expressions over {left} and {right} markers cannot be combined")]
    MarkerMismatch { left: usize, right: usize },
    #[error("no valuation for terminal monomial {monomial}")]
    UnsupportedValuation { monomial: String },
    #[error("valuation over {markers} markers needs at least {used}")]
    TooFewMarkers { markers: usize, used: usize },
    #[error("reduction exceeded {0} rewrite steps")]
    BudgetExceeded(usize),
    #[error("{value} is not divisible by {divisor} as an integer-valued polynomial")]
    InexactDivision { value: String, divisor: BigInt },
}

/// Expands `prod_{i=1..k} (p_{2i-1} + p_{2i} - g) * extra` over `2k`
/// markers, without the `1/k!` symmetry factor.
pub fn expand_coincidence(k: usize, extra: &MultipointExpression) -> Result<MultipointExpression, MultipointError> {
    if !(1..=TARGET_CODIM as usize).contains(&k) {
        return Err(MultipointError::InvalidPairs(k));
    }
    let expected = TARGET_CODIM - k as u32;
    let codims = extra.codims();
    if codims.iter().any(|&c| c != expected) {
        return Err(MultipointError::CodimensionMismatch { pairs: k, expected, found: codims });
    }
    let markers = 2 * k;
    let mut embedded = MultipointExpression::zero(markers);
    for (m, c) in extra.iter() {
        if m.points().iter().any(|&e| e > 0) {
            return Err(MultipointError::ExtraHasMarkers);
        }
        embedded.add_term(MultipointMonomial::new(alloc::vec![0; markers], *m.line()), c);
    }
    let g = MultipointExpression::line_symbol(markers, "g").expect("line symbol");
    let mut out = embedded;
    for i in 0..k {
        let a = MultipointExpression::marker(markers, 2 * i + 1).expect("in range");
        let b = MultipointExpression::marker(markers, 2 * i + 2).expect("in range");
        let factor = a.try_add(&b)?.try_sub(&g)?;
        out = factor.try_mul(&out)?;
    }
    Ok(out)
}

/// One rewrite of `m`: `None` if terminal, otherwise its replacement terms
/// (empty when `m` vanishes).
fn rewrite(m: &MultipointMonomial) -> Option<Vec<(i64, MultipointMonomial)>> {
    if m.codim() > TARGET_CODIM || m.points().iter().any(|&e| e >= 3) {
        return Some(Vec::new());
    }
    let l = m.line();
    let swap = |remove: &[usize], add: &[usize]| {
        let mut out = m.clone();
        let line = out.line_mut();
        for &i in remove {
            line[i] -= 1;
        }
        for &i in add {
            line[i] += 1;
        }
        out
    };
    if l[G] >= 2 {
        return Some(alloc::vec![(1, swap(&[G, G], &[GP])), (1, swap(&[G, G], &[GE]))]);
    }
    if l[G] >= 1 {
        for (other, result) in [(GP, GS), (GE, GS), (GS, GG)] {
            if l[other] >= 1 {
                return Some(alloc::vec![(1, swap(&[G, other], &[result]))]);
            }
        }
    }
    if l[GP] >= 1 && l[GE] >= 1 {
        return Some(Vec::new());
    }
    for sym in [GP, GE] {
        if l[sym] >= 2 {
            return Some(alloc::vec![(1, swap(&[sym, sym], &[GG]))]);
        }
    }
    let points = m.points();
    let max = *points.iter().max()?;
    if max == 0 {
        return None;
    }
    let i = points.iter().position(|&e| e == max).expect("max exists");
    let with = |remove: usize, add: Option<usize>, shift: i32| {
        let mut out = swap(&[remove], add.as_slice());
        let p = &mut out.points_mut()[i];
        *p = (*p as i32 + shift) as u32;
        out
    };
    if l[G] == 1 {
        Some(alloc::vec![(1, with(G, None, 1)), (1, with(G, Some(GE), -1))])
    } else if l[GP] == 1 {
        Some(alloc::vec![(1, with(GP, None, 2)), (1, with(GP, Some(GS), -1))])
    } else if l[GS] == 1 {
        Some(alloc::vec![(1, with(GS, Some(GG), -1)), (1, with(GS, Some(G), 2))])
    } else {
        None
    }
}

/// Rewrites to a combination of terminal monomials: pure point monomials,
/// point monomials times `g_e`, and `G`.
pub fn reduce(e: &MultipointExpression) -> Result<MultipointExpression, MultipointError> {
    let mut work = e.clone();
    let mut out = MultipointExpression::zero(e.markers());
    let mut steps = 0usize;
    while let Some((m, c)) = work.pop_first() {
        match rewrite(&m) {
            None => out.add_term(m, &c),
            Some(replacement) => {
                steps += 1;
                if steps > REDUCTION_BUDGET {
                    return Err(MultipointError::BudgetExceeded(REDUCTION_BUDGET));
                }
                for (k, r) in replacement {
                    work.add_term(r, &c.scale(&BigInt::from(k)));
                }
            }
        }
    }
    Ok(out)
}

/// The `Z[n]` value of a terminal codimension-4 monomial when `markers`
/// points are in play.
pub fn terminal_value(m: &MultipointMonomial, markers: usize) -> Result<Coefficient, MultipointError> {
    let mut used: Vec<u32> = m.points().iter().copied().filter(|&e| e > 0).collect();
    if used.contains(&3) || used.iter().any(|&e| e > 3) {
        return Ok(Coefficient::zero());
    }
    if used.len() > markers {
        return Err(MultipointError::TooFewMarkers { markers, used: used.len() });
    }
    used.sort_unstable_by(|a, b| b.cmp(a));
    let line = *m.line();
    let tail = |r: usize| Coefficient::falling_range(r as i64, markers as i64);
    let n = Coefficient::n();
    let n2 = &n * &n;
    let head = match (line, used.as_slice()) {
        ([0, 0, 0, 0, 1], []) => Coefficient::one(),
        ([0, 0, 1, 0, 0], [1, 1]) => n2,
        ([0, 0, 0, 0, 0], [2, 1, 1]) => &n2 * &Coefficient::n_minus(1),
        ([0, 0, 0, 0, 0], [1, 1, 1, 1]) => &n2 * &Coefficient::from_i64s(&[3, -6, 2]),
        _ => return Err(MultipointError::UnsupportedValuation { monomial: alloc::format!("{m}") }),
    };
    Ok(&head * &tail(used.len()))
}

/// Sums coefficient times terminal value over all terms.
pub fn valuate(e: &MultipointExpression, markers: usize) -> Result<Coefficient, MultipointError> {
    let mut total = Coefficient::zero();
    for (m, c) in e.iter() {
        total += &(c * &terminal_value(m, markers)?);
    }
    Ok(total)
}

/// Every stage of a tangency computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tangency {
    pub pairs: usize,
    pub expanded: MultipointExpression,
    pub reduced: MultipointExpression,
    /// The valuation before dividing by `pairs!`.
    pub valuation: Coefficient,
    pub count: Count,
}

pub fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

/// Runs expansion, reduction and valuation on an already expanded
/// expression over `2k` markers.
pub fn tangency_from_expansion(k: usize, expanded: MultipointExpression) -> Result<Tangency, MultipointError> {
    let reduced = reduce(&expanded)?;
    let valuation = valuate(&reduced, expanded.markers())?;
    let count = Count::new(valuation.clone(), factorial(k))?;
    Ok(Tangency { pairs: k, expanded, reduced, valuation, count })
}

pub fn tangency(k: usize, extra: &MultipointExpression) -> Result<Tangency, MultipointError> {
    tangency_from_expansion(k, expand_coincidence(k, extra)?)
}

/// The number of lines tangent to a general surface of degree `n` at `k`
/// points and satisfying `extra`.
pub fn tangency_count(k: usize, extra: &MultipointExpression) -> Result<Count, MultipointError> {
    tangency(k, extra).map(|t| t.count)
}
