//! Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
//! any criterion fails.

use std::sync::Arc;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schubert_core::coincidence::{blowup_presentation, chasles_count, curve_class, gysin};
use schubert_core::dsl::{evaluate, parse_expression};
use schubert_core::exactalg::check_confluence;
use schubert_core::multipoint::{
    factorial, tangency, tangency_count, tangency_from_expansion, valuate, Count, MultipointExpression,
};
use schubert_core::oracle::{
    chasles_diagonal_count, count_transversals, four_lines_instance, quadrilateral_instance, random_chasles_instance,
    ruling_instance, ruling_instance_seeded, trial_seed, ChaslesInstance, ChaslesOutcome, Transversals,
};
use schubert_core::spaces::{count, make_space, verify_all_formulas, SpaceHandle, SpaceId};
use schubert_core::{Coefficient, Monomial, Polynomial, Universe};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn value(space: &SpaceHandle, text: &str) -> Polynomial {
    evaluate(&parse_expression(text).expect("valid expression"), space).expect("evaluates")
}

fn c(coeffs: &[i64]) -> Coefficient {
    Coefficient::from_i64s(coeffs)
}

fn product(factors: &[Coefficient]) -> Coefficient {
    factors.iter().fold(Coefficient::one(), |acc, f| &acc * f)
}

fn formula_suite() -> Outcome {
    let checks = verify_all_formulas();
    let failed: Vec<_> = checks.iter().filter(|c| !c.pass).map(|c| c.id.as_str()).collect();
    ensure(checks.len() == 17, format!("expected 17 identities, found {}", checks.len()))?;
    ensure(failed.is_empty(), format!("failing identities: {failed:?}"))?;
    Ok("17/17 identities hold".into())
}

fn grassmannian_structure() -> Outcome {
    let gr = make_space(SpaceId::Gr);
    let ranks: Vec<usize> = (0..=4).map(|d| gr.presentation().standard_monomials(d).len()).collect();
    ensure(ranks == [1, 1, 2, 1, 1], format!("graded ranks {ranks:?}"))?;
    let basis = [value(&gr, "c1^2"), value(&gr, "c2")];
    let pairing: Vec<Vec<BigInt>> = basis
        .iter()
        .map(|a| basis.iter().map(|b| count(&gr, &(a * b)).unwrap().as_constant().expect("integer")).collect())
        .collect();
    let expected: Vec<Vec<BigInt>> = vec![vec![2.into(), 1.into()], vec![1.into(), 1.into()]];
    ensure(pairing == expected, format!("pairing {pairing:?}"))?;
    let det = &pairing[0][0] * &pairing[1][1] - &pairing[0][1] * &pairing[1][0];
    ensure(det == BigInt::from(1), format!("determinant {det}"))?;
    Ok("ranks (1,1,2,1,1), pairing [[2,1],[1,1]], det 1".into())
}

fn four_lines() -> Outcome {
    let gr = make_space(SpaceId::Gr);
    let g4 = count(&gr, &value(&gr, "g^4")).map_err(|e| e.to_string())?;
    ensure(g4 == Coefficient::constant(2), format!("count(g^4) = {g4}"))?;
    let trials = 100;
    let bad: Vec<u64> = (0..trials)
        .map(|i| trial_seed(0, i))
        .filter(|&s| count_transversals(&four_lines_instance(s)).finite_count() != Some(2))
        .collect();
    ensure(bad.is_empty(), format!("non-generic draws at seeds {bad:?}"))?;
    ensure(
        matches!(count_transversals(&ruling_instance()), Transversals::Infinite { .. }),
        "ruling instance is not Infinite",
    )?;
    for seed in 0..10 {
        ensure(
            matches!(count_transversals(&ruling_instance_seeded(seed)), Transversals::Infinite { .. }),
            format!("seeded ruling {seed} is not Infinite"),
        )?;
        let quad = quadrilateral_instance(seed);
        let Transversals::Finite { count: 2, lines, .. } = count_transversals(&quad.sides) else {
            return Err(format!("quadrilateral {seed} is not Finite(2)"));
        };
        ensure(
            quad.diagonals.iter().all(|d| lines.contains(d)) && lines.len() == 2,
            format!("quadrilateral {seed}: transversals are not the diagonals"),
        )?;
    }
    Ok(format!("g^4 = 2; oracle Finite(2) on {trials}/{trials}; ruling Infinite; diagonals recovered"))
}

fn gysin_values() -> Outcome {
    let blowup = make_space(SpaceId::Blowup);
    let p3 = make_space(SpaceId::P3);
    let push = |text: &str| gysin(&value(&blowup, text)).map_err(|e| e.to_string());
    let check = |text: &str, expected: &str| -> Result<(), String> {
        let got = push(text)?;
        ensure(got == value(&p3, expected), format!("gysin({text}) = {got}, expected {expected}"))
    };
    check("eps^2", "1")?;
    check("eps^3", "4*t")?;
    check("eps^4", "10*t^2")?;
    check("eps", "0")?;
    check("t*eps^3", "4*t^2")?;
    check("t^2*eps^2 + 3*t*eps^3", "13*t^2")?;
    check("t*eps^4", "10*t^3")?;
    Ok("eps^2 -> 1, eps^3 -> 4t, eps^4 -> 10t^2, linear over Z[t]".into())
}

fn curve_class_check() -> Outcome {
    let cc = curve_class();
    ensure(cc == c(&[0, -1, 1]), format!("curve class {cc}"))?;
    ensure(cc.eval_i64(2) == 2.into() && cc.eval_i64(3) == 6.into(), "evaluations at 2, 3")?;
    let one = tangency_count(1, &MultipointExpression::line_symbol(0, "g_s").unwrap()).map_err(|e| e.to_string())?;
    ensure(one == Count::new(cc.clone(), 1.into()).unwrap(), format!("tangency_count(1, g_s) = {one}"))?;
    Ok(format!("curve class {} agrees with the one-pair tangency count", cc.to_compact_string()))
}

fn bitangents() -> Outcome {
    let two = tangency_count(2, &MultipointExpression::line_symbol(0, "g_e").unwrap()).map_err(|e| e.to_string())?;
    let closed = Count::new(product(&[c(&[0, 1]), c(&[-2, 1]), c(&[-3, 1]), c(&[3, 1])]), 2.into()).unwrap();
    ensure(two == closed, format!("got {two}"))?;
    ensure(two.eval_i64(3) == 0.into() && two.eval_i64(4) == 28.into(), "evaluations at 3, 4")?;
    Ok(format!("{two}; n=3 -> 0, n=4 -> 28"))
}

fn quadritangents() -> Outcome {
    let t = tangency(4, &MultipointExpression::one(0)).map_err(|e| e.to_string())?;
    let reduced = t.reduced.symmetrize();
    let mut coefficients: Vec<(String, Coefficient)> =
        reduced.display_terms().into_iter().map(|(m, c)| (m.to_string(), c.clone())).collect();
    coefficients.sort_by(|a, b| a.0.cmp(&b.0));
    let expected = [("G", 10), ("g_e*p1*p2", -8), ("p1*p2*p3*p4", 16), ("p1^2*p2*p3", -32)];
    let expected: Vec<(String, Coefficient)> =
        expected.iter().map(|(m, k)| (m.to_string(), Coefficient::constant(*k))).collect();
    ensure(coefficients == expected, format!("reduced form {reduced}"))?;
    let cubic = c(&[-30, 7, 6, 1]);
    let closed =
        Count::new(product(&[c(&[0, 1]), c(&[-4, 1]), c(&[-5, 1]), c(&[-6, 1]), c(&[-7, 1]), cubic]), 12.into())
            .unwrap();
    ensure(t.count == closed, format!("got {}", t.count))?;
    for root in [0, 4, 5, 6, 7] {
        ensure(t.count.eval_i64(root) == 0.into(), format!("no zero at n = {root}"))?;
    }
    Ok(format!("reduced four-pair form {reduced}; count {}", t.count))
}

fn twenty_seven_lines() -> Outcome {
    let p = |i| MultipointExpression::marker(4, i).unwrap();
    let four = p(1).try_mul(&p(2)).and_then(|x| x.try_mul(&p(3))).and_then(|x| x.try_mul(&p(4))).unwrap();
    let v = valuate(&four, 4).map_err(|e| e.to_string())?.eval_i64(3);
    ensure(v == 27.into(), format!("valuation at n = 3 is {v}"))?;
    Ok("p1*p2*p3*p4 over 4 markers at n = 3 is 27".into())
}

fn chasles() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut infinite = 0;
    for trial in 0..50 {
        let (p, q) = (rng.gen_range(0..=4usize), rng.gen_range(0..=4usize));
        let seed = trial_seed(9, trial);
        match chasles_diagonal_count(&random_chasles_instance(p, q, seed)) {
            ChaslesOutcome::Finite(k) => {
                ensure(k == chasles_count(p as u64, q as u64), format!("({p},{q}) seed {seed}: {k}"))?
            }
            ChaslesOutcome::Infinite => infinite += 1,
        }
    }
    ensure(infinite == 0, format!("{infinite} random instances contained the diagonal"))?;
    let one = BigInt::from(1);
    let zero = BigInt::from(0);
    let diagonal = ChaslesInstance { p: 1, q: 1, coeffs: vec![vec![zero.clone(), one.clone()], vec![-one, zero]] };
    ensure(chasles_diagonal_count(&diagonal) == ChaslesOutcome::Infinite, "diagonal is not Infinite")?;
    Ok("p+q on 50/50 seeded instances; the diagonal itself is Infinite".into())
}

fn random_polynomial(rng: &mut ChaCha8Rng, universe: &Arc<Universe>) -> Polynomial {
    let mut p = Polynomial::zero(universe);
    for _ in 0..rng.gen_range(0..=5) {
        let exps: Vec<u32> = (0..universe.len()).map(|_| rng.gen_range(0..=3)).collect();
        let coeffs: Vec<i64> = (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(-5..=5)).collect();
        p.add_term(Monomial::new(exps), &Coefficient::from_i64s(&coeffs));
    }
    p
}

fn robustness() -> Outcome {
    for id in SpaceId::ALL {
        let report = make_space(id).confluence().map_err(|e| e.to_string())?;
        ensure(report.passed(), format!("{id}: {report:?}"))?;
    }
    ensure(check_confluence(&blowup_presentation()).map(|r| r.passed()) == Ok(true), "blowup confluence")?;

    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let cases = 1000;
    for i in 0..cases {
        let space = make_space([SpaceId::P3, SpaceId::P3Dual, SpaceId::Gr, SpaceId::Ps][i % 4]);
        let a = random_polynomial(&mut rng, space.universe());
        let b = random_polynomial(&mut rng, space.universe());
        let na = space.normal_form(&a).map_err(|e| e.to_string())?;
        let nb = space.normal_form(&b).map_err(|e| e.to_string())?;
        ensure(space.normal_form(&na).as_ref() == Ok(&na), format!("idempotence, case {i}"))?;
        ensure(
            space.normal_form(&(&a * &b)) == space.normal_form(&(&na * &nb)),
            format!("multiplicativity, case {i}"),
        )?;
    }

    let problems = [
        (1, MultipointExpression::line_symbol(0, "g_s").unwrap()),
        (2, MultipointExpression::line_symbol(0, "g_e").unwrap()),
        (4, MultipointExpression::one(0)),
    ];
    for (k, extra) in &problems {
        let base = tangency(*k, extra).map_err(|e| e.to_string())?;
        ensure(base.valuation.values_divisible_by(&factorial(*k)), format!("{k}! does not divide"))?;
        for _ in 0..10 {
            let mut perm: Vec<usize> = (0..2 * k).collect();
            for i in (1..perm.len()).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            let permuted =
                tangency_from_expansion(*k, base.expanded.permute_markers(&perm)).map_err(|e| e.to_string())?;
            ensure(permuted.count == base.count, format!("k = {k}, permutation {perm:?}"))?;
        }
    }
    Ok(format!("5 presentations confluent; {cases} normal-form cases; permutation invariance; k! divides"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Formula suite", formula_suite),
        ("Grassmannian structure", grassmannian_structure),
        ("Four lines", four_lines),
        ("Gysin pushforward", gysin_values),
        ("Curve class", curve_class_check),
        ("Bitangents", bitangents),
        ("Quadritangents", quadritangents),
        ("27 lines", twenty_seven_lines),
        ("Chasles", chasles),
        ("Robustness", robustness),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
