use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::MultipointError;
use crate::exactalg::Coefficient;

/// An integer-valued polynomial in `n`, stored as `numer / denom` with
/// `denom > 0` coprime to the content of `numer`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Count {
    numer: Coefficient,
    denom: BigInt,
}

impl Count {
    /// Fails unless `numer(k)` is divisible by `denom` for every integer `k`.
    pub fn new(numer: Coefficient, denom: BigInt) -> Result<Self, MultipointError> {
        assert!(denom.is_positive(), "denominator must be positive");
        if !numer.values_divisible_by(&denom) {
            return Err(MultipointError::InexactDivision { value: numer.to_compact_string(), divisor: denom });
        }
        let g = numer.content().gcd(&denom);
        let g = if g.is_zero() { denom.clone() } else { g };
        Ok(Self { numer: numer.div_exact(&g).expect("gcd divides"), denom: denom / g })
    }

    pub fn numerator(&self) -> &Coefficient {
        &self.numer
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denom
    }

    /// The polynomial itself when all its coefficients are integers.
    pub fn as_integer_polynomial(&self) -> Option<&Coefficient> {
        self.denom.is_one().then_some(&self.numer)
    }

    pub fn eval(&self, n: &BigInt) -> BigInt {
        self.numer.eval(n) / &self.denom
    }

    pub fn eval_i64(&self, n: i64) -> BigInt {
        self.eval(&BigInt::from(n))
    }

    /// `numer` over `denom` written out, e.g. `(n^4-2*n^3)/2`.
    pub fn to_expanded_string(&self) -> String {
        if self.denom.is_one() {
            self.numer.to_compact_string()
        } else {
            alloc::format!("({})/{}", self.numer.to_compact_string(), self.denom)
        }
    }

    /// A rational prefactor, the linear factors with integer roots, and what
    /// is left, e.g. `(1/2)*n*(n-2)*(n-3)*(n+3)`.
    pub fn to_factored_string(&self) -> String {
        if self.numer.is_zero() {
            return "0".into();
        }
        let (mut roots, rest) = self.numer.integer_roots();
        let content = rest.content();
        let sign = if rest.leading().is_some_and(Signed::is_negative) { -BigInt::one() } else { BigInt::one() };
        let scalar = &content * &sign;
        let rest = rest.div_exact(&scalar).expect("content divides");
        let g = scalar.gcd(&self.denom);
        let (num, den) = (&scalar / &g, &self.denom / &g);

        let mut factors: alloc::vec::Vec<String> = alloc::vec::Vec::new();
        roots.sort_by_key(|r| (r.is_negative(), r.abs()));
        let mut i = 0;
        while i < roots.len() {
            let r = &roots[i];
            let mult = roots[i..].iter().take_while(|x| *x == r).count();
            let base = if r.is_zero() {
                String::from("n")
            } else if r.is_positive() {
                alloc::format!("(n-{r})")
            } else {
                alloc::format!("(n+{})", -r)
            };
            factors.push(if mult > 1 { alloc::format!("{base}^{mult}") } else { base });
            i += mult;
        }
        if !rest.is_one() {
            factors.push(alloc::format!("({})", rest.to_compact_string()));
        }

        let mut s = String::new();
        let prefix = match (den.is_one(), num.abs().is_one()) {
            (true, true) => None,
            (true, false) => Some(alloc::format!("{}", num.abs())),
            (false, _) => Some(alloc::format!("({}/{})", num.abs(), den)),
        };
        if num.is_negative() {
            s.push('-');
        }
        let mut parts = prefix.into_iter().chain(factors);
        if let Some(first) = parts.next() {
            s.push_str(&first);
        } else {
            s.push('1');
        }
        for p in parts {
            s.push('*');
            s.push_str(&p);
        }
        s
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_factored_string())
    }
}
