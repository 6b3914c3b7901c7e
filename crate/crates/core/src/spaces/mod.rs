//! The cohomology rings of the basic configuration spaces with their Schubert
//! symbol tables.
//!
//! | space    | generators (degree)   | relations                                  | integration      |
//! |----------|-----------------------|--------------------------------------------|------------------|
//! | `P3`     | t (1)                 | t^4 = 0                                    | t^3, sign +1     |
//! | `P3dual` | u (1)                 | u^4 = 0                                    | u^3, sign +1     |
//! | `GR`     | c1 (1), c2 (2)        | c1^3 = 2 c1 c2, c1^2 c2 = c2^2 (+ closure) | c2^2, sign +1    |
//! | `PS`     | s (1), c1 (1), c2 (2) | GR relations, s^2 = s c1 - c2              | s c2^2, sign -1  |
//! | `BLOWUP` | eps (1), t (1)        | t^4 = 0, eps^3 = 4t eps^2 - 6t^2 eps + 4t^3 | Gysin, then P3  |
//!
//! The GR relations are the degree 3 and 4 components of
//! `(1 + c1 + c2)(1 + s1 + s2 + ...) = 1`. The extra rules `c1 c2^2 -> 0`
//! and `c2^3 -> 0` are consequences (degree 5 and 6 vanish) that make the
//! rewrite system confluent; without them `c1^3 c2` has two distinct
//! reductions.
//!
//! PS is the projective bundle of the tautological rank-2 bundle; `s` is the
//! first Chern class of the tautological line subbundle, so the point
//! condition is `p = -s`. The fiber integral of `s` over a fiber line is
//! `-1`, which fixes the sign of the integration monomial.

mod formulas;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::coincidence;
use crate::exactalg::{
    check_confluence, AlgebraError, Coefficient, ConfluenceReport, Polynomial, Presentation, Universe,
};

pub use formulas::{formula_table, verify_all_formulas, verify_formulas_with, Formula, FormulaCheck};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceId {
    P3,
    P3Dual,
    Gr,
    Ps,
    Blowup,
}

impl SpaceId {
    pub const ALL: [SpaceId; 5] = [SpaceId::P3, SpaceId::P3Dual, SpaceId::Gr, SpaceId::Ps, SpaceId::Blowup];

    pub fn as_str(self) -> &'static str {
        match self {
            SpaceId::P3 => "P3",
            SpaceId::P3Dual => "P3dual",
            SpaceId::Gr => "GR",
            SpaceId::Ps => "PS",
            SpaceId::Blowup => "BLOWUP",
        }
    }
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown space `{0}` (expected one of P3, P3dual, G, GR, PS, BLOWUP)")]
pub struct UnknownSpace(pub String);

impl FromStr for SpaceId {
    type Err = UnknownSpace;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "P3" => Ok(SpaceId::P3),
            "P3DUAL" => Ok(SpaceId::P3Dual),
            "G" | "GR" => Ok(SpaceId::Gr),
            "PS" => Ok(SpaceId::Ps),
            "BLOWUP" => Ok(SpaceId::Blowup),
            _ => Err(UnknownSpace(s.into())),
        }
    }
}

/// Symbol name to ring element.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymbolTable {
    entries: BTreeMap<String, Polynomial>,
}

impl SymbolTable {
    pub fn get(&self, name: &str) -> Option<&Polynomial> {
        self.entries.get(name)
    }

    pub fn insert(&mut self, name: &str, value: Polynomial) {
        self.entries.insert(name.into(), value);
    }

    /// Sorted symbol names.
    pub fn names(&self) -> Vec<&str> {
        self.entries.keys().map(String::as_str).collect()
    }
}

/// A space identifier with its presentation and symbol table.
#[derive(Clone, Debug)]
pub struct SpaceHandle {
    id: SpaceId,
    presentation: Presentation,
    symbols: SymbolTable,
}

impl SpaceHandle {
    pub fn id(&self) -> SpaceId {
        self.id
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.presentation.universe()
    }

    pub fn symbols(&self) -> &SymbolTable {
        &self.symbols
    }

    /// A copy whose symbol `name` is bound to `value` instead. Used to check
    /// that a corrupted table is caught by the formula suite.
    pub fn with_symbol(&self, name: &str, value: Polynomial) -> Self {
        let mut out = self.clone();
        out.symbols.insert(name, value);
        out
    }

    pub fn normal_form(&self, a: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.presentation.normal_form(a)
    }

    pub fn confluence(&self) -> Result<ConfluenceReport, AlgebraError> {
        check_confluence(&self.presentation)
    }
}

fn poly(u: &Arc<Universe>, terms: &[(i64, &[u32])]) -> Polynomial {
    Polynomial::from_terms(u, terms.iter().map(|&(c, e)| (Coefficient::constant(c), e.to_vec())))
}

fn projective_space(id: SpaceId, var: &str, names: [&str; 3]) -> SpaceHandle {
    let u = Arc::new(Universe::new(&[(var, 1)]));
    let presentation =
        Presentation::new(id.as_str(), u.clone(), vec![(vec![4], Polynomial::zero(&u))], 3, Some((vec![3], 1)))
            .expect("valid presentation");
    let mut symbols = SymbolTable::default();
    symbols.insert(var, poly(&u, &[(1, &[1])]));
    for (k, name) in names.iter().enumerate() {
        symbols.insert(name, poly(&u, &[(1, &[k as u32 + 1])]));
    }
    SpaceHandle { id, presentation, symbols }
}

/// GR rules over a universe whose last two generators are `c1, c2`, with
/// `lead` zero exponents in front.
fn grassmannian_rules(u: &Arc<Universe>, lead: usize) -> Vec<(Vec<u32>, Polynomial)> {
    let e = |c1: u32, c2: u32| {
        let mut v = vec![0; lead];
        v.extend([c1, c2]);
        v
    };
    vec![
        (e(3, 0), Polynomial::from_terms(u, [(Coefficient::constant(2), e(1, 1))])),
        (e(2, 1), Polynomial::from_terms(u, [(Coefficient::one(), e(0, 2))])),
        (e(1, 2), Polynomial::zero(u)),
        (e(0, 3), Polynomial::zero(u)),
    ]
}

fn insert_line_symbols(symbols: &mut SymbolTable, u: &Arc<Universe>, lead: usize) {
    let e = |c1: u32, c2: u32| {
        let mut v = vec![0; lead];
        v.extend([c1, c2]);
        v
    };
    symbols.insert("c1", poly(u, &[(1, &e(1, 0))]));
    symbols.insert("c2", poly(u, &[(1, &e(0, 1))]));
    symbols.insert("g", poly(u, &[(-1, &e(1, 0))]));
    symbols.insert("g_p", poly(u, &[(1, &e(2, 0)), (-1, &e(0, 1))]));
    symbols.insert("g_e", poly(u, &[(1, &e(0, 1))]));
    symbols.insert("g_s", poly(u, &[(-1, &e(1, 1))]));
    symbols.insert("G", poly(u, &[(1, &e(0, 2))]));
}

fn grassmannian() -> SpaceHandle {
    let u = Arc::new(Universe::new(&[("c1", 1), ("c2", 2)]));
    let presentation = Presentation::new("GR", u.clone(), grassmannian_rules(&u, 0), 4, Some((vec![0, 2], 1)))
        .expect("valid presentation");
    let mut symbols = SymbolTable::default();
    insert_line_symbols(&mut symbols, &u, 0);
    SpaceHandle { id: SpaceId::Gr, presentation, symbols }
}

fn point_on_line() -> SpaceHandle {
    // `s` comes first so that `s^2` leads its relation.
    let u = Arc::new(Universe::new(&[("s", 1), ("c1", 1), ("c2", 2)]));
    let mut rules = vec![(vec![2, 0, 0], poly(&u, &[(1, &[1, 1, 0]), (-1, &[0, 0, 1])]))];
    rules.extend(grassmannian_rules(&u, 1));
    let presentation =
        Presentation::new("PS", u.clone(), rules, 5, Some((vec![1, 0, 2], -1))).expect("valid presentation");
    let mut symbols = SymbolTable::default();
    insert_line_symbols(&mut symbols, &u, 1);
    symbols.insert("s", poly(&u, &[(1, &[1, 0, 0])]));
    symbols.insert("p", poly(&u, &[(-1, &[1, 0, 0])]));
    symbols.insert("p_g", poly(&u, &[(1, &[2, 0, 0])]));
    SpaceHandle { id: SpaceId::Ps, presentation, symbols }
}

fn blowup() -> SpaceHandle {
    let presentation = coincidence::blowup_presentation();
    let u = presentation.universe().clone();
    let mut symbols = SymbolTable::default();
    symbols.insert("eps", poly(&u, &[(1, &[1, 0])]));
    symbols.insert("t", poly(&u, &[(1, &[0, 1])]));
    SpaceHandle { id: SpaceId::Blowup, presentation, symbols }
}

pub fn make_space(id: SpaceId) -> SpaceHandle {
    match id {
        SpaceId::P3 => projective_space(id, "t", ["p", "p_g", "P"]),
        SpaceId::P3Dual => projective_space(id, "u", ["e", "e_g", "E"]),
        SpaceId::Gr => grassmannian(),
        SpaceId::Ps => point_on_line(),
        SpaceId::Blowup => blowup(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown symbol `{name}` in {space}; valid symbols: {}", valid.join(", "))]
pub struct UnknownSymbol {
    pub name: String,
    pub space: SpaceId,
    pub valid: Vec<String>,
}

pub fn symbol(space: &SpaceHandle, name: &str) -> Result<Polynomial, UnknownSymbol> {
    space.symbols.get(name).cloned().ok_or_else(|| UnknownSymbol {
        name: name.into(),
        space: space.id,
        valid: space.symbols.names().into_iter().map(ToString::to_string).collect(),
    })
}

/// True iff `left - right` reduces to zero.
pub fn verify_identity(space: &SpaceHandle, left: &Polynomial, right: &Polynomial) -> Result<bool, AlgebraError> {
    space.presentation.equal_in_ring(left, right)
}

/// The enumerative number of a condition: the integral of its top-degree
/// component. Components of any other degree count zero.
pub fn count(space: &SpaceHandle, expr: &Polynomial) -> Result<Coefficient, AlgebraError> {
    let p = &space.presentation;
    let top = expr.homogeneous_part(p.top_degree());
    match space.id {
        SpaceId::Blowup => {
            let pushed = coincidence::gysin(&top)?;
            make_space(SpaceId::P3).presentation.integrate(&pushed)
        }
        _ => p.integrate(&top),
    }
}
