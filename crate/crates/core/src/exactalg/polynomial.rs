use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::{AlgebraError, Coefficient, Monomial, Universe};

/// A sparse polynomial with `Z[n]` coefficients over a fixed [`Universe`].
///
/// No zero coefficient is ever stored, so two polynomials over the same
/// universe are equal iff their term maps are equal.
#[derive(Clone, Debug)]
pub struct Polynomial {
    universe: Arc<Universe>,
    terms: BTreeMap<Monomial, Coefficient>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.same_universe(other) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(universe: &Arc<Universe>) -> Self {
        Self { universe: universe.clone(), terms: BTreeMap::new() }
    }

    pub fn one(universe: &Arc<Universe>) -> Self {
        Self::constant(universe, Coefficient::one())
    }

    pub fn constant(universe: &Arc<Universe>, c: Coefficient) -> Self {
        Self::term(universe, Monomial::one(universe.len()), c)
    }

    pub fn term(universe: &Arc<Universe>, monomial: Monomial, c: Coefficient) -> Self {
        assert_eq!(monomial.len(), universe.len(), "monomial length mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(monomial, c);
        }
        Self { universe: universe.clone(), terms }
    }

    pub fn generator(universe: &Arc<Universe>, name: &str) -> Result<Self, AlgebraError> {
        let index = universe.index_of(name).ok_or_else(|| AlgebraError::UnknownGenerator(name.into()))?;
        Ok(Self::term(universe, Monomial::generator(universe.len(), index, 1), Coefficient::one()))
    }

    /// Builds `sum c_i * m_i` from `(coefficient, exponents)` pairs.
    pub fn from_terms<I>(universe: &Arc<Universe>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Coefficient, Vec<u32>)>,
    {
        let mut p = Self::zero(universe);
        for (c, exps) in terms {
            p.add_term(Monomial::new(exps), &c);
        }
        p
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn same_universe(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.universe, &other.universe) || self.universe == other.universe
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

    pub fn coefficient(&self, monomial: &Monomial) -> Coefficient {
        self.terms.get(monomial).cloned().unwrap_or_default()
    }

    /// Terms in the map's lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Coefficient)> {
        self.terms.iter()
    }

    /// Terms sorted by descending term order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Coefficient)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| self.universe.cmp_terms(b.0, a.0));
        v
    }

    pub fn add_term(&mut self, monomial: Monomial, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(monomial);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Largest weighted degree of a term, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree(&self.universe)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|m| m.degree(&self.universe));
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, degree: u32) -> Self {
        Self {
            universe: self.universe.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree(&self.universe) == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.same_universe(other) {
            Ok(())
        } else {
            Err(AlgebraError::UniverseMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let mut out = Self::zero(&self.universe);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        let mut out = Self::zero(&self.universe);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), &(a * c));
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self { universe: self.universe.clone(), terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.universe), |acc, _| &acc * self)
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn map_coefficients(&self, f: impl Fn(&Coefficient) -> Coefficient) -> Self {
        let mut out = Self::zero(&self.universe);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c));
        }
        out
    }

    /// Re-expresses this polynomial in `target` by sending generator `i` to
    /// the polynomial `images[i]`.
    pub fn substitute(&self, target: &Arc<Universe>, images: &[Polynomial]) -> Result<Self, AlgebraError> {
        if images.len() != self.universe.len() || images.iter().any(|p| p.universe.as_ref() != target.as_ref()) {
            return Err(AlgebraError::UniverseMismatch);
        }
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (e, image) in m.exponents().iter().zip(images) {
                if *e > 0 {
                    t = &t * &image.pow(*e);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    /// # Panics
    /// If the operands live in different universes; use
    /// [`Polynomial::try_add`] to get an error instead.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomials over different universes")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomials over different universes")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomials over different universes")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { universe: self.universe.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Canonical text: terms by descending term order, e.g. `(n^2 - n)*t^3`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.leading().is_some_and(Signed::is_negative);
            let c = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = m.display(&self.universe);
            let grouped = c.term_count() > 1;
            if m.is_one() {
                if grouped {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "{c}")?;
                }
            } else if c.is_one() {
                write!(f, "{mono}")?;
            } else if grouped {
                write!(f, "({c})*{mono}")?;
            } else {
                write!(f, "{c}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn blowup() -> Arc<Universe> {
        Arc::new(Universe::new(&[("eps", 1), ("t", 1)]))
    }

    #[test]
    fn identity_and_cancellation() {
        let u = Arc::new(Universe::new(&[("t1", 1), ("t2", 1), ("eps", 1)]));
        let t1 = Polynomial::generator(&u, "t1").unwrap();
        let t2 = Polynomial::generator(&u, "t2").unwrap();
        let eps = Polynomial::generator(&u, "eps").unwrap();
        assert_eq!(&t1 + &Polynomial::zero(&u), t1);
        let coincidence = &(&t1 + &t2) - &eps;
        assert_eq!(&coincidence + &eps, &t1 + &t2);
    }

    #[test]
    fn coefficient_arithmetic_in_terms() {
        let u = Arc::new(Universe::new(&[("t", 1)]));
        let t3 = Polynomial::term(&u, Monomial::new(vec![3]), Coefficient::one());
        let a = t3.scale(&Coefficient::from_i64s(&[0, -1, 1]));
        let b = t3.scale(&Coefficient::n());
        let sum = &a + &b;
        assert_eq!(sum, t3.scale(&Coefficient::from_i64s(&[0, 0, 1])));
        assert_eq!(a.to_string(), "(n^2 - n)*t^3");
    }

    #[test]
    fn expansion() {
        let u = blowup();
        let t = Polynomial::generator(&u, "t").unwrap();
        let eps = Polynomial::generator(&u, "eps").unwrap();
        let two_t = t.scale(&Coefficient::constant(2));
        let lhs = &(&two_t - &eps) * &(&(&t * &t) - &(&t * &eps));
        let expected = Polynomial::from_terms(
            &u,
            [
                (Coefficient::constant(2), vec![0, 3]),
                (Coefficient::constant(-3), vec![1, 2]),
                (Coefficient::constant(1), vec![2, 1]),
            ],
        );
        assert_eq!(lhs, expected);
    }

    #[test]
    fn universe_mismatch_is_an_error() {
        let a = Polynomial::one(&Arc::new(Universe::new(&[("t", 1)])));
        let b = Polynomial::one(&Arc::new(Universe::new(&[("u", 1)])));
        assert_eq!(a.try_add(&b), Err(AlgebraError::UniverseMismatch));
        assert_eq!(a.try_mul(&b), Err(AlgebraError::UniverseMismatch));
    }

    #[test]
    fn display_orders_by_term_order() {
        let u = Arc::new(Universe::new(&[("c1", 1), ("c2", 2)]));
        let p = Polynomial::from_terms(
            &u,
            [
                (Coefficient::constant(-1), vec![1, 0]),
                (Coefficient::constant(2), vec![0, 2]),
                (Coefficient::constant(1), vec![0, 0]),
            ],
        );
        assert_eq!(p.to_string(), "2*c2^2 - c1 + 1");
    }
}
