use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{AlgebraError, Coefficient, Monomial, Polynomial, Universe};

/// Default cap on single rewrite steps per normal-form computation.
pub const DEFAULT_STEP_BUDGET: usize = 1 << 20;

/// A rewrite rule `lhs -> rhs` with `rhs` homogeneous of the same degree and
/// strictly below `lhs` in the term order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Monomial,
    pub rhs: Polynomial,
}

/// Evaluation against the fundamental class: the coefficient of `monomial`
/// in a normal form, times `sign`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalClass {
    pub monomial: Monomial,
    pub sign: i8,
}

/// A presentation of a graded ring as a polynomial ring modulo an ideal,
/// given by an ordered list of rewrite rules.
#[derive(Clone, Debug)]
pub struct Presentation {
    name: String,
    universe: Arc<Universe>,
    rules: Vec<Rule>,
    top_degree: u32,
    fundamental: Option<FundamentalClass>,
    step_budget: usize,
}

impl Presentation {
    /// Validates and builds a presentation. Rules are given as
    /// `(lhs exponents, rhs polynomial)`.
    pub fn new(
        name: &str,
        universe: Arc<Universe>,
        rules: Vec<(Vec<u32>, Polynomial)>,
        top_degree: u32,
        fundamental: Option<(Vec<u32>, i8)>,
    ) -> Result<Self, AlgebraError> {
        let mut checked = Vec::with_capacity(rules.len());
        for (lhs, rhs) in rules {
            let lhs = Monomial::new(lhs);
            if lhs.len() != universe.len() || rhs.universe().as_ref() != universe.as_ref() {
                return Err(AlgebraError::UniverseMismatch);
            }
            let degree = lhs.degree(&universe);
            for (m, _) in rhs.iter() {
                if m.degree(&universe) != degree {
                    return Err(AlgebraError::InhomogeneousRule { lhs: alloc::format!("{}", lhs.display(&universe)) });
                }
                if universe.cmp_terms(m, &lhs) != Ordering::Less {
                    return Err(AlgebraError::RuleNotDecreasing { lhs: alloc::format!("{}", lhs.display(&universe)) });
                }
            }
            checked.push(Rule { lhs, rhs });
        }
        let fundamental = match fundamental {
            Some((exps, sign)) => {
                let monomial = Monomial::new(exps);
                if monomial.len() != universe.len() || monomial.degree(&universe) != top_degree || sign.abs() != 1 {
                    return Err(AlgebraError::BadFundamentalClass);
                }
                Some(FundamentalClass { monomial, sign })
            }
            None => None,
        };
        Ok(Self {
            name: name.into(),
            universe,
            rules: checked,
            top_degree,
            fundamental,
            step_budget: DEFAULT_STEP_BUDGET,
        })
    }

    pub fn with_step_budget(mut self, budget: usize) -> Self {
        self.step_budget = budget;
        self
    }

    /// A copy with one extra rule appended (no validation of consistency;
    /// that is what [`crate::exactalg::check_confluence`] is for).
    pub fn with_extra_rule(&self, lhs: Vec<u32>, rhs: Polynomial) -> Result<Self, AlgebraError> {
        let mut rules: Vec<_> = self.rules.iter().map(|r| (r.lhs.exponents().to_vec(), r.rhs.clone())).collect();
        rules.push((lhs, rhs));
        let fundamental = self.fundamental.as_ref().map(|f| (f.monomial.exponents().to_vec(), f.sign));
        Self::new(&self.name, self.universe.clone(), rules, self.top_degree, fundamental)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    pub fn fundamental_class(&self) -> Option<&FundamentalClass> {
        self.fundamental.as_ref()
    }

    pub fn generator(&self, name: &str) -> Result<Polynomial, AlgebraError> {
        Polynomial::generator(&self.universe, name)
    }

    /// The first rule whose left side divides `m`, with the cofactor.
    pub(crate) fn find_rule(&self, m: &Monomial) -> Option<(usize, Monomial)> {
        self.rules.iter().enumerate().find_map(|(i, r)| r.lhs.cofactor_in(m).map(|q| (i, q)))
    }

    /// One rewrite of monomial `m` by rule `index`, or `None` if it does not apply.
    pub fn rewrite_once(&self, m: &Monomial, index: usize) -> Option<Polynomial> {
        let rule = self.rules.get(index)?;
        let q = rule.lhs.cofactor_in(m)?;
        Some(rule.rhs.mul_monomial(&q))
    }

    /// Reduces `a` to its normal form: the unique fixed point of the rewrite
    /// relation when the system is confluent.
    ///
    /// Terms are processed from the largest down, so every rewrite only adds
    /// strictly smaller terms to the work list.
    pub fn normal_form(&self, a: &Polynomial) -> Result<Polynomial, AlgebraError> {
        if a.universe().as_ref() != self.universe.as_ref() {
            return Err(AlgebraError::UniverseMismatch);
        }
        let mut work: BTreeMap<(u32, Monomial), Coefficient> = BTreeMap::new();
        for (m, c) in a.iter() {
            work.insert((m.degree(&self.universe), m.clone()), c.clone());
        }
        let mut out = Polynomial::zero(&self.universe);
        let mut steps = 0usize;
        while let Some(((_, m), c)) = work.pop_last() {
            match self.find_rule(&m) {
                None => out.add_term(m, &c),
                Some((index, q)) => {
                    steps += 1;
                    if steps > self.step_budget {
                        return Err(AlgebraError::StepBudgetExceeded { budget: self.step_budget });
                    }
                    for (rm, rc) in self.rules[index].rhs.iter() {
                        let m2 = rm.mul(&q);
                        let key = (m2.degree(&self.universe), m2);
                        let slot = work.entry(key.clone()).or_default();
                        *slot += &(rc * &c);
                        if slot.is_zero() {
                            work.remove(&key);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_normal(&self, a: &Polynomial) -> bool {
        a.iter().all(|(m, _)| self.find_rule(m).is_none())
    }

    /// True iff `normal_form(left - right)` is zero.
    pub fn equal_in_ring(&self, left: &Polynomial, right: &Polynomial) -> Result<bool, AlgebraError> {
        Ok(self.normal_form(&left.try_sub(right)?)?.is_zero())
    }

    /// Evaluates against the fundamental class. Terms of degree other than the
    /// top degree contribute nothing.
    pub fn integrate(&self, a: &Polynomial) -> Result<Coefficient, AlgebraError> {
        let fundamental = self.fundamental.as_ref().ok_or(AlgebraError::NoFundamentalClass)?;
        let nf = self.normal_form(a)?;
        let c = nf.coefficient(&fundamental.monomial);
        Ok(if fundamental.sign < 0 { -c } else { c })
    }

    /// Monomials of degree `d` that no rule rewrites: an additive basis of the
    /// degree-`d` piece when the system is confluent.
    pub fn standard_monomials(&self, degree: u32) -> Vec<Monomial> {
        self.universe.monomials_of_degree(degree).into_iter().filter(|m| self.find_rule(m).is_none()).collect()
    }
}
