//! The coincidence calculus on the blow-up of `P3 x P3` along the diagonal.
//!
//! Classes before restriction live over `{t1, t2, eps}`: the hyperplane
//! classes of the two factors and the exceptional divisor. Restricting to the
//! exceptional divisor (the projectivized tangent bundle of `P3`) identifies
//! `t1` and `t2` with a single `t`. On that divisor `eps` satisfies
//!
//! ```text
//! eps^3 = 4 t eps^2 - 6 t^2 eps + 4 t^3
//! ```
//!
//! and the pushforward to `P3` sends `eps^2` to 1 and lower powers of `eps` to
//! zero. Reducing first gives `eps^3 -> 4t` and `eps^4 -> 10 t^2`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::exactalg::{AlgebraError, Coefficient, Polynomial, Presentation, Universe};
use crate::spaces::{make_space, SpaceId};

/// Generators `t1, t2, eps` of the blown-up product, before restriction.
pub fn product_universe() -> Arc<Universe> {
    Arc::new(Universe::new(&[("t1", 1), ("t2", 1), ("eps", 1)]))
}

/// Generators `eps, t` of the exceptional divisor.
pub fn blowup_universe() -> Arc<Universe> {
    Arc::new(Universe::new(&[("eps", 1), ("t", 1)]))
}

/// The number of coincidences of a correspondence of bidegree `(p, q)` on a line.
pub fn chasles_count(p: u64, q: u64) -> u64 {
    p + q
}

fn term(u: &Arc<Universe>, c: Coefficient, exps: &[u32]) -> Polynomial {
    Polynomial::term(u, crate::Monomial::new(exps.to_vec()), c)
}

/// `t1 + t2 - eps`: the pullback of the condition that the line through two
/// points meets a given line.
pub fn coincidence_epsilon() -> Polynomial {
    let u = product_universe();
    &(&term(&u, Coefficient::one(), &[1, 0, 0]) + &term(&u, Coefficient::one(), &[0, 1, 0]))
        - &term(&u, Coefficient::one(), &[0, 0, 1])
}

/// `n^2 t1 t2 - n t1 eps`: the class of the strict transform of `F x F` for a
/// surface `F` of degree `n`.
pub fn residual_class() -> Polynomial {
    let u = product_universe();
    let n = Coefficient::n();
    &term(&u, &n * &n, &[1, 1, 0]) - &term(&u, n, &[1, 0, 1])
}

/// Substitutes an integer for `n` in every coefficient.
pub fn specialize(a: &Polynomial, n: i64) -> Polynomial {
    a.map_coefficients(|c| Coefficient::from_bigint(c.eval_i64(n)))
}

/// Restriction to the exceptional divisor: `t1, t2 -> t`.
pub fn restrict(a: &Polynomial) -> Result<Polynomial, AlgebraError> {
    let target = blowup_universe();
    let t = term(&target, Coefficient::one(), &[0, 1]);
    let eps = term(&target, Coefficient::one(), &[1, 0]);
    if a.universe().as_ref() != product_universe().as_ref() {
        return Err(AlgebraError::UniverseMismatch);
    }
    a.substitute(&target, &[t.clone(), t, eps])
}

pub fn blowup_presentation() -> Presentation {
    let u = blowup_universe();
    let c = |k: i64, e: &[u32]| term(&u, Coefficient::constant(k), e);
    let eps_cubed = &(&c(4, &[2, 1]) - &c(6, &[1, 2])) + &c(4, &[0, 3]);
    Presentation::new("BLOWUP", u.clone(), vec![(vec![0, 4], Polynomial::zero(&u)), (vec![3, 0], eps_cubed)], 5, None)
        .expect("valid presentation")
}

/// Pushforward from the exceptional divisor to `P3`. The input is reduced
/// first; then `t^b eps^2 -> t^b` and every other term vanishes.
pub fn gysin(a: &Polynomial) -> Result<Polynomial, AlgebraError> {
    let nf = blowup_presentation().normal_form(a)?;
    let p3 = make_space(SpaceId::P3);
    let target = p3.universe().clone();
    let mut out = Polynomial::zero(&target);
    for (m, c) in nf.iter() {
        let [e, t] = m.exponents() else { unreachable!("two generators") };
        if *e == 2 {
            out.add_term(crate::Monomial::new(vec![*t]), c);
        }
    }
    Ok(out)
}

/// The factors whose product, restricted and pushed forward, gives the class
/// of the curve of contact points of tangent lines through a fixed point,
/// met with a general plane: `[residual, phi*(g_e), phi*(g)]` over `{eps, t}`.
pub fn curve_class_factors() -> Vec<Polynomial> {
    let restricted = |a: &Polynomial| restrict(a).expect("product universe");
    vec![
        restricted(&residual_class()),
        restricted(&specialize(&residual_class(), 1)),
        restricted(&coincidence_epsilon()),
    ]
}

/// `n^2 - n`, computed as the degree of the restricted product pushed down to `P3`.
pub fn curve_class() -> Coefficient {
    let product = curve_class_factors().iter().fold(Polynomial::one(&blowup_universe()), |acc, f| &acc * f);
    let pushed = gysin(&product).expect("blowup universe");
    make_space(SpaceId::P3).presentation().integrate(&pushed).expect("P3 has a fundamental class")
}
