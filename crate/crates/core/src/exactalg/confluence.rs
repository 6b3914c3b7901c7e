use alloc::string::String;
use alloc::vec::Vec;

use super::{AlgebraError, Polynomial, Presentation};

/// Outcome of [`check_confluence`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConfluenceReport {
    Pass {
        /// Monomials checked that admit at least two single-step rewrites.
        overlaps_checked: usize,
        max_degree: u32,
    },
    /// Two rewrites of one monomial reduce to different normal forms.
    CriticalPair { monomial: String, first_rule: usize, second_rule: usize, first: Polynomial, second: Polynomial },
    /// The integration monomial is itself rewritten, so every top-degree
    /// class integrates to a value the presentation cannot represent.
    FundamentalClassReducible { reduces_to: Polynomial },
}

impl ConfluenceReport {
    pub fn passed(&self) -> bool {
        matches!(self, Self::Pass { .. })
    }
}

/// Checks local confluence of the rewrite system exhaustively.
///
/// Every monomial up to degree `D` is inspected, where `D` is the larger of
/// the top degree and the degree of every pairwise lcm of rule left sides,
/// so every critical pair of the system is covered. For each monomial that
/// admits two or more single-step rewrites, all one-step results are fully
/// reduced and compared.
pub fn check_confluence(p: &Presentation) -> Result<ConfluenceReport, AlgebraError> {
    let universe = p.universe();
    let rules = p.rules();
    let mut max_degree = p.top_degree();
    for (i, a) in rules.iter().enumerate() {
        for b in &rules[i + 1..] {
            max_degree = max_degree.max(a.lhs.lcm(&b.lhs).degree(universe));
        }
    }
    let mut overlaps = 0usize;
    for degree in 0..=max_degree {
        for m in universe.monomials_of_degree(degree) {
            let applicable: Vec<usize> =
                rules.iter().enumerate().filter(|(_, r)| r.lhs.divides(&m)).map(|(i, _)| i).collect();
            if applicable.len() < 2 {
                continue;
            }
            overlaps += 1;
            let mut reduced: Vec<(usize, Polynomial)> = Vec::with_capacity(applicable.len());
            for &i in &applicable {
                let step = p.rewrite_once(&m, i).expect("rule applies");
                reduced.push((i, p.normal_form(&step)?));
            }
            let (first_rule, first) = &reduced[0];
            if let Some((second_rule, second)) = reduced[1..].iter().find(|(_, r)| r != first) {
                return Ok(ConfluenceReport::CriticalPair {
                    monomial: alloc::format!("{}", m.display(universe)),
                    first_rule: *first_rule,
                    second_rule: *second_rule,
                    first: first.clone(),
                    second: second.clone(),
                });
            }
        }
    }
    if let Some(f) = p.fundamental_class() {
        let top = Polynomial::term(universe, f.monomial.clone(), super::Coefficient::one());
        let nf = p.normal_form(&top)?;
        if nf != top {
            return Ok(ConfluenceReport::FundamentalClassReducible { reduces_to: nf });
        }
    }
    Ok(ConfluenceReport::Pass { overlaps_checked: overlaps, max_degree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Coefficient, Monomial};
    use crate::spaces::{make_space, SpaceId};
    use alloc::vec;

    fn term(p: &Presentation, k: i64, exps: &[u32]) -> Polynomial {
        Polynomial::term(p.universe(), Monomial::new(exps.to_vec()), Coefficient::constant(k))
    }

    #[test]
    fn killing_the_point_class_is_caught() {
        let gr = make_space(SpaceId::Gr);
        let p = gr.presentation();
        let broken = p.with_extra_rule(vec![0, 2], Polynomial::zero(p.universe())).unwrap();
        let report = check_confluence(&broken).unwrap();
        assert_eq!(report, ConfluenceReport::FundamentalClassReducible { reduces_to: Polynomial::zero(p.universe()) });
    }

    #[test]
    fn missing_closure_rules_give_a_critical_pair() {
        let gr = make_space(SpaceId::Gr);
        let full = gr.presentation();
        let u = full.universe().clone();
        let partial = Presentation::new(
            "GR-partial",
            u,
            vec![(vec![3, 0], term(full, 2, &[1, 1])), (vec![2, 1], term(full, 1, &[0, 2]))],
            4,
            Some((vec![0, 2], 1)),
        )
        .unwrap();
        let ConfluenceReport::CriticalPair { monomial, first, second, .. } = check_confluence(&partial).unwrap() else {
            panic!("expected a critical pair")
        };
        assert_eq!(monomial, "c1^3*c2");
        assert_eq!(first, term(full, 2, &[1, 2]));
        assert_eq!(second, term(full, 1, &[1, 2]));
    }
}
