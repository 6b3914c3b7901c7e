//! Univariate integer polynomials in the formal parameter `n`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// An element of `Z[n]`, stored densely from the constant term upwards.
///
/// Trailing zero coefficients are never stored, so the zero element is the
/// empty vector and structural equality is ring equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coefficient {
    coeffs: Vec<BigInt>,
}

impl Coefficient {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The formal parameter `n`.
    pub fn n() -> Self {
        Self::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: i64) -> Self {
        Self::from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `n - a`.
    pub fn n_minus(a: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(-a), BigInt::one()])
    }

    /// Builds a coefficient from `[c0, c1, ...]` meaning `c0 + c1*n + ...`.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `(n - lo)(n - lo - 1)...(n - hi + 1)`, the empty product being 1.
    pub fn falling_range(lo: i64, hi: i64) -> Self {
        (lo..hi).fold(Self::one(), |acc, j| &acc * &Self::n_minus(j))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// The constant value, if this coefficient does not involve `n`.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Substitutes an integer for `n`.
    pub fn eval(&self, n: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * n + c)
    }

    pub fn eval_i64(&self, n: i64) -> BigInt {
        self.eval(&BigInt::from(n))
    }

    /// Non-negative gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides every coefficient by `d`, or returns `None` if some
    /// coefficient is not a multiple of `d`.
    pub fn div_exact(&self, d: &BigInt) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::from_coeffs(out))
    }

    /// True when `self(k)` is divisible by `d` for every integer `k`.
    ///
    /// Uses the binomial basis: a polynomial is integer valued after division
    /// by `d` iff all its forward differences at 0 are multiples of `d`.
    pub fn values_divisible_by(&self, d: &BigInt) -> bool {
        let len = self.coeffs.len();
        let mut values: Vec<BigInt> = (0..=len as i64).map(|k| self.eval_i64(k)).collect();
        for _ in 0..=len {
            if !values[0].is_multiple_of(d) {
                return false;
            }
            values = values.windows(2).map(|w| &w[1] - &w[0]).collect();
            if values.is_empty() {
                break;
            }
        }
        true
    }

    /// Divides by `(n - r)`, returning the quotient when the division is exact.
    pub fn div_linear(&self, r: &BigInt) -> Option<Self> {
        let deg = self.degree()?;
        if deg == 0 {
            return None;
        }
        // Synthetic division from the top coefficient down.
        let mut quotient = vec![BigInt::zero(); deg];
        let mut carry = BigInt::zero();
        for i in (0..=deg).rev() {
            let cur = &self.coeffs[i] + &carry;
            if i == 0 {
                return cur.is_zero().then(|| Self::from_coeffs(quotient));
            }
            carry = &cur * r;
            quotient[i - 1] = cur;
        }
        unreachable!()
    }

    /// Integer roots with multiplicity, and the cofactor left after dividing
    /// them all out.
    pub fn integer_roots(&self) -> (Vec<BigInt>, Self) {
        let mut roots = Vec::new();
        let mut rest = self.clone();
        if rest.is_zero() {
            return (roots, rest);
        }
        while rest.coeffs.len() > 1 && rest.coeffs[0].is_zero() {
            roots.push(BigInt::zero());
            rest = Self::from_coeffs(rest.coeffs[1..].to_vec());
        }
        loop {
            if rest.coeffs.len() <= 1 {
                break;
            }
            let constant = rest.coeffs[0].abs();
            let lead = rest.coeffs.last().unwrap().abs();
            let bound = rest.coeffs.iter().map(|c| c.abs().div_ceil(&lead)).max().unwrap() + BigInt::one();
            let bound = bound.min(constant.clone());
            let mut found = None;
            let mut r = BigInt::one();
            while r <= bound {
                if constant.is_multiple_of(&r) {
                    for cand in [r.clone(), -r.clone()] {
                        if rest.eval(&cand).is_zero() {
                            found = Some(cand);
                            break;
                        }
                    }
                }
                if found.is_some() {
                    break;
                }
                r += 1;
            }
            match found {
                Some(root) => {
                    rest = rest.div_linear(&root).expect("root divides");
                    roots.push(root);
                }
                None => break,
            }
        }
        (roots, rest)
    }

    /// Renders without spaces, e.g. `n^3+6*n^2+7*n-30`.
    pub fn to_compact_string(&self) -> String {
        let mut s = String::new();
        self.write_terms(&mut s, false).expect("writing to a String");
        s
    }

    fn write_terms(&self, f: &mut impl fmt::Write, spaced: bool) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = c.abs();
            match (first, negative, spaced) {
                (true, true, _) => f.write_str("-")?,
                (true, false, _) => {}
                (false, true, true) => f.write_str(" - ")?,
                (false, false, true) => f.write_str(" + ")?,
                (false, true, false) => f.write_str("-")?,
                (false, false, false) => f.write_str("+")?,
            }
            first = false;
            match power {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if power == 1 {
                        f.write_str("n")?;
                    } else {
                        write!(f, "n^{power}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f, true)
    }
}

impl From<i64> for Coefficient {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for Coefficient {
    fn from(c: BigInt) -> Self {
        Self::from_bigint(c)
    }
}

impl Add for &Coefficient {
    type Output = Coefficient;

    fn add(self, rhs: &Coefficient) -> Coefficient {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        Coefficient::from_coeffs(
            (0..len).map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero)).collect(),
        )
    }
}

impl Add for Coefficient {
    type Output = Coefficient;

    fn add(self, rhs: Coefficient) -> Coefficient {
        &self + &rhs
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;

    fn neg(self) -> Coefficient {
        Coefficient { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;

    fn neg(self) -> Coefficient {
        -&self
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;

    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self + &(-rhs)
    }
}

impl Sub for Coefficient {
    type Output = Coefficient;

    fn sub(self, rhs: Coefficient) -> Coefficient {
        &self - &rhs
    }
}

impl SubAssign<&Coefficient> for Coefficient {
    fn sub_assign(&mut self, rhs: &Coefficient) {
        *self += &(-rhs);
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;

    fn mul(self, rhs: &Coefficient) -> Coefficient {
        if self.is_zero() || rhs.is_zero() {
            return Coefficient::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Coefficient::from_coeffs(out)
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;

    fn mul(self, rhs: Coefficient) -> Coefficient {
        &self * &rhs
    }
}
