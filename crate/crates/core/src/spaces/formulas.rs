use alloc::string::String;
use alloc::vec::Vec;

use super::{make_space, SpaceHandle, SpaceId};
use crate::dsl;

/// A chain of equal classes `sides[0] = sides[1] = ...` in one space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Formula {
    pub id: &'static str,
    pub space: SpaceId,
    pub sides: &'static [&'static str],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaCheck {
    pub id: String,
    pub space: SpaceId,
    pub lhs: String,
    /// Remaining sides joined by ` = `.
    pub rhs: String,
    pub pass: bool,
}

const fn f(id: &'static str, space: SpaceId, sides: &'static [&'static str]) -> Formula {
    Formula { id, space, sides }
}

use SpaceId::{Gr, P3Dual, Ps, P3};

const TABLE: [Formula; 17] = [
    f("1", P3, &["p^2", "p_g"]),
    f("2", P3, &["p^3", "p*p_g"]),
    f("3", P3, &["p*p_g", "P"]),
    f("4", P3, &["p^3", "P"]),
    f("5", P3Dual, &["e^2", "e_g"]),
    f("6", P3Dual, &["e^3", "e*e_g"]),
    f("7", P3Dual, &["e*e_g", "E"]),
    f("8", P3Dual, &["e^3", "E"]),
    f("9", Gr, &["g^2", "g_p + g_e"]),
    f("10", Gr, &["g*g_p", "g_s"]),
    f("11", Gr, &["g*g_e", "g_s"]),
    f("12", Gr, &["g*g_s", "G"]),
    f("13", Gr, &["g^3", "2*g_s"]),
    f("14", Gr, &["g^4", "2*g*g_s", "2*g^2*g_e", "2*g^2*g_p", "2*g_p^2", "2*g_e^2", "2*G"]),
    f("I", Ps, &["p*g", "p_g + g_e", "p^2 + g_e"]),
    f("II", Ps, &["p*g_p", "p^3 + g_s"]),
    f("III", Ps, &["p*g_s", "p^2*g_p", "G + p^3*g", "G + p^2*g_e"]),
];

/// The seventeen numbered identities of the point, plane, line and
/// point-on-line calculi.
pub fn formula_table() -> &'static [Formula] {
    &TABLE
}

fn check(formula: &Formula, space: &SpaceHandle) -> bool {
    let eval = |s: &str| dsl::parse_expression(s).ok().and_then(|e| dsl::evaluate(&e, space).ok());
    let Some(first) = eval(formula.sides[0]) else { return false };
    formula.sides[1..].iter().all(|side| eval(side).is_some_and(|other| first == other))
}

/// Checks every formula, obtaining each space from `space_for`.
pub fn verify_formulas_with(space_for: impl Fn(SpaceId) -> SpaceHandle) -> Vec<FormulaCheck> {
    TABLE
        .iter()
        .map(|formula| FormulaCheck {
            id: formula.id.into(),
            space: formula.space,
            lhs: formula.sides[0].into(),
            rhs: formula.sides[1..].join(" = "),
            pass: check(formula, &space_for(formula.space)),
        })
        .collect()
}

pub fn verify_all_formulas() -> Vec<FormulaCheck> {
    verify_formulas_with(make_space)
}
