use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt::{self, Write};

use num_traits::Signed;

use super::MultipointError;
use crate::exactalg::Coefficient;

/// Line conditions in a fixed order, with their codimensions.
pub const LINE_SYMBOLS: [&str; 5] = ["g", "g_p", "g_e", "g_s", "G"];
pub const LINE_CODIM: [u32; 5] = [1, 2, 2, 3, 4];

pub(crate) const G: usize = 0;
pub(crate) const GP: usize = 1;
pub(crate) const GE: usize = 2;
pub(crate) const GS: usize = 3;
pub(crate) const GG: usize = 4;

type DisplayKey = (u32, Reverse<usize>, Reverse<Vec<u32>>, Reverse<[u32; 5]>);

/// A product of point markers `p1..pm` and line conditions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultipointMonomial {
    points: Vec<u32>,
    line: [u32; 5],
}

impl MultipointMonomial {
    pub fn one(markers: usize) -> Self {
        Self { points: alloc::vec![0; markers], line: [0; 5] }
    }

    pub fn new(points: Vec<u32>, line: [u32; 5]) -> Self {
        Self { points, line }
    }

    /// Marker `index` (zero based) to the first power.
    pub fn marker(markers: usize, index: usize) -> Self {
        let mut m = Self::one(markers);
        m.points[index] = 1;
        m
    }

    pub fn line_symbol(markers: usize, index: usize) -> Self {
        let mut m = Self::one(markers);
        m.line[index] = 1;
        m
    }

    pub fn points(&self) -> &[u32] {
        &self.points
    }

    pub fn line(&self) -> &[u32; 5] {
        &self.line
    }

    pub fn markers(&self) -> usize {
        self.points.len()
    }

    pub(crate) fn points_mut(&mut self) -> &mut Vec<u32> {
        &mut self.points
    }

    pub(crate) fn line_mut(&mut self) -> &mut [u32; 5] {
        &mut self.line
    }

    pub fn line_codim(&self) -> u32 {
        self.line.iter().zip(LINE_CODIM).map(|(e, d)| e * d).sum()
    }

    pub fn codim(&self) -> u32 {
        self.points.iter().sum::<u32>() + self.line_codim()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.points.iter_mut().zip(&other.points) {
            *a += b;
        }
        for (a, b) in out.line.iter_mut().zip(&other.line) {
            *a += b;
        }
        out
    }

    /// Relabels markers so that exponents descend; two monomials related by a
    /// marker permutation have the same canonical form.
    pub fn canonical(&self) -> Self {
        let mut points = self.points.clone();
        points.sort_by_key(|&e| Reverse(e));
        Self { points, line: self.line }
    }

    fn is_one(&self) -> bool {
        self.points.iter().all(|&e| e == 0) && self.line.iter().all(|&e| e == 0)
    }

    fn display_order(&self) -> DisplayKey {
        let distinct = self.points.iter().filter(|&&e| e > 0).count();
        (self.line_codim(), Reverse(distinct), Reverse(self.points.clone()), Reverse(self.line))
    }
}

impl fmt::Display for MultipointMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = LINE_SYMBOLS.iter().map(|s| String::from(*s));
        let points = (1..=self.points.len()).map(|i| alloc::format!("p{i}"));
        let mut first = true;
        for (name, e) in names.chain(points).zip(self.line.iter().chain(&self.points)) {
            if *e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            f.write_str(&name)?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_char('1')?;
        }
        Ok(())
    }
}

/// A formal `Z[n]` combination of multipoint monomials over a fixed number of markers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultipointExpression {
    markers: usize,
    terms: BTreeMap<MultipointMonomial, Coefficient>,
}

impl MultipointExpression {
    pub fn zero(markers: usize) -> Self {
        Self { markers, terms: BTreeMap::new() }
    }

    pub fn one(markers: usize) -> Self {
        Self::monomial(MultipointMonomial::one(markers), Coefficient::one())
    }

    pub fn constant(markers: usize, c: Coefficient) -> Self {
        Self::monomial(MultipointMonomial::one(markers), c)
    }

    pub fn monomial(m: MultipointMonomial, c: Coefficient) -> Self {
        let mut out = Self::zero(m.markers());
        out.add_term(m, &c);
        out
    }

    /// Marker `p{number}`, numbered from 1.
    pub fn marker(markers: usize, number: usize) -> Option<Self> {
        (1..=markers)
            .contains(&number)
            .then(|| Self::monomial(MultipointMonomial::marker(markers, number - 1), Coefficient::one()))
    }

    pub fn line_symbol(markers: usize, name: &str) -> Option<Self> {
        let index = LINE_SYMBOLS.iter().position(|s| *s == name)?;
        Some(Self::monomial(MultipointMonomial::line_symbol(markers, index), Coefficient::one()))
    }

    pub fn markers(&self) -> usize {
        self.markers
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MultipointMonomial, &Coefficient)> {
        self.terms.iter()
    }

    pub fn pop_first(&mut self) -> Option<(MultipointMonomial, Coefficient)> {
        self.terms.pop_first()
    }

    pub fn coefficient(&self, m: &MultipointMonomial) -> Coefficient {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: MultipointMonomial, c: &Coefficient) {
        assert_eq!(m.markers(), self.markers, "marker count mismatch");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Distinct codimensions of the terms, ascending.
    pub fn codims(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.terms.keys().map(MultipointMonomial::codim).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn check(&self, other: &Self) -> Result<(), MultipointError> {
        if self.markers == other.markers {
            Ok(())
        } else {
            Err(MultipointError::MarkerMismatch { left: self.markers, right: other.markers })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, MultipointError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, MultipointError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, MultipointError> {
        self.check(other)?;
        let mut out = Self::zero(self.markers);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.mul(b), &(x * y));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.scale(&Coefficient::constant(-1))
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        let mut out = Self::zero(self.markers);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), &(x * c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.markers), |acc, _| acc.try_mul(self).expect("same markers"))
    }

    /// Renumbers markers: marker `i` becomes marker `perm[i]`.
    pub fn permute_markers(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.markers, "permutation length");
        let mut out = Self::zero(self.markers);
        for (m, c) in &self.terms {
            let mut points = alloc::vec![0; self.markers];
            for (i, &e) in m.points.iter().enumerate() {
                points[perm[i]] = e;
            }
            out.add_term(MultipointMonomial::new(points, m.line), c);
        }
        out
    }

    /// Collects terms that differ only by a relabelling of markers onto one
    /// representative whose exponents descend.
    pub fn symmetrize(&self) -> Self {
        let mut out = Self::zero(self.markers);
        for (m, c) in &self.terms {
            out.add_term(m.canonical(), c);
        }
        out
    }

    /// Terms in display order: line codimension first, then by how many
    /// markers appear.
    pub fn display_terms(&self) -> Vec<(&MultipointMonomial, &Coefficient)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| m.display_order());
        terms
    }
}

impl fmt::Display for MultipointExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_char('0');
        }
        for (i, (m, c)) in self.display_terms().into_iter().enumerate() {
            let negative = c.leading().is_some_and(Signed::is_negative);
            let shown = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_char('-')?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = m.is_one();
            if shown.term_count() <= 1 {
                if !shown.is_one() || unit {
                    write!(f, "{}", shown.to_compact_string())?;
                    if !unit {
                        f.write_char('*')?;
                    }
                }
            } else {
                write!(f, "({})", shown.to_compact_string())?;
                if !unit {
                    f.write_char('*')?;
                }
            }
            if !unit {
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_like_hand_notation() {
        let m = 4;
        let p = |i| MultipointExpression::marker(m, i).unwrap();
        let g = MultipointExpression::line_symbol(m, "g").unwrap();
        let e = p(1).try_mul(&p(2)).unwrap().scale(&Coefficient::constant(16));
        let e = e.try_sub(&g.pow(2).try_mul(&p(1)).unwrap()).unwrap();
        let e = e.try_add(&MultipointExpression::line_symbol(m, "G").unwrap()).unwrap();
        assert_eq!(alloc::format!("{e}"), "16*p1*p2 - g^2*p1 + G");
        assert_eq!(alloc::format!("{}", MultipointExpression::zero(2)), "0");
        assert_eq!(alloc::format!("{}", MultipointExpression::constant(2, Coefficient::n())), "n");
    }

    #[test]
    fn symmetrize_and_permute() {
        let m = 4;
        let p = |i| MultipointExpression::marker(m, i).unwrap();
        let e = p(3).pow(2).try_mul(&p(1)).unwrap().try_add(&p(2).pow(2).try_mul(&p(4)).unwrap()).unwrap();
        let s = e.symmetrize();
        assert_eq!(s.len(), 1);
        assert_eq!(alloc::format!("{s}"), "2*p1^2*p2");
        assert_eq!(e.permute_markers(&[1, 0, 3, 2]).symmetrize(), s);
        assert!(MultipointExpression::marker(m, 5).is_none());
    }
}
