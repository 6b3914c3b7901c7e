use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{linalg, PlueckerLine};

/// Random coordinates are drawn from `-COORD_RANGE..=COORD_RANGE`.
pub const COORD_RANGE: i64 = 9;

const MAX_DRAWS: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleKind {
    FourLines,
    FourLinesRuling,
    Chasles,
}

impl OracleKind {
    pub fn as_str(self) -> &'static str {
        match self {
            OracleKind::FourLines => "four-lines",
            OracleKind::FourLinesRuling => "four-lines-ruling",
            OracleKind::Chasles => "chasles",
        }
    }
}

/// The seed of trial `index` in a run seeded with `base` (SplitMix64 finalizer).
pub fn trial_seed(base: u64, index: u64) -> u64 {
    let mut z = base.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn small(rng: &mut ChaCha8Rng) -> BigInt {
    BigInt::from(rng.gen_range(-COORD_RANGE..=COORD_RANGE))
}

pub fn random_point(rng: &mut ChaCha8Rng) -> [BigInt; 4] {
    core::array::from_fn(|_| small(rng))
}

/// The line through two random points, redrawing degenerate pairs.
pub fn random_line_from_rng(rng: &mut ChaCha8Rng) -> PlueckerLine {
    (0..MAX_DRAWS)
        .find_map(|_| PlueckerLine::through(&random_point(rng), &random_point(rng)))
        .expect("a nondegenerate pair of points within the draw budget")
}

pub fn random_line(seed: u64) -> PlueckerLine {
    random_line_from_rng(&mut ChaCha8Rng::seed_from_u64(seed))
}

/// Four pairwise distinct random lines.
pub fn four_lines_instance(seed: u64) -> [PlueckerLine; 4] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lines: Vec<PlueckerLine> = Vec::with_capacity(4);
    for _ in 0..MAX_DRAWS {
        if lines.len() == 4 {
            break;
        }
        let l = random_line_from_rng(&mut rng);
        if !lines.contains(&l) {
            lines.push(l);
        }
    }
    lines.try_into().expect("four distinct lines within the draw budget")
}

fn ruling_line(lambda: &BigInt, transform: &[[BigInt; 4]; 4]) -> PlueckerLine {
    let apply =
        |p: [BigInt; 4]| -> [BigInt; 4] { core::array::from_fn(|i| (0..4).map(|j| &transform[i][j] * &p[j]).sum()) };
    let zero = BigInt::zero;
    let one = || BigInt::from(1);
    let x = apply([lambda.clone(), zero(), one(), zero()]);
    let y = apply([zero(), lambda.clone(), zero(), one()]);
    PlueckerLine::through(&x, &y).expect("invertible transform keeps points distinct")
}

fn identity() -> [[BigInt; 4]; 4] {
    core::array::from_fn(|i| core::array::from_fn(|j| BigInt::from(u8::from(i == j))))
}

/// The lines `x = l z, y = l w` for `l = 0, 1, 2, 3`: one ruling of the
/// quadric `x w = y z`.
pub fn ruling_instance() -> [PlueckerLine; 4] {
    let id = identity();
    core::array::from_fn(|l| ruling_line(&BigInt::from(l), &id))
}

/// Four random lines of one ruling of a random nonsingular quadric: distinct
/// random parameters, then a random invertible change of coordinates.
pub fn ruling_instance_seeded(seed: u64) -> [PlueckerLine; 4] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let transform = (0..MAX_DRAWS)
        .map(|_| -> [[BigInt; 4]; 4] { core::array::from_fn(|_| random_point(&mut rng)) })
        .find(|m| !linalg::determinant(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).is_zero())
        .expect("an invertible matrix within the draw budget");
    let mut lambdas: Vec<BigInt> = Vec::with_capacity(4);
    while lambdas.len() < 4 {
        let l = small(&mut rng);
        if !lambdas.contains(&l) {
            lambdas.push(l);
        }
    }
    core::array::from_fn(|i| ruling_line(&lambdas[i], &transform))
}

/// The sides `PQ, QR, RS, SP` of a skew quadrilateral and its diagonals
/// `PR, QS`, which are the two lines meeting all four sides.
#[derive(Clone, Debug)]
pub struct Quadrilateral {
    pub vertices: [[BigInt; 4]; 4],
    pub sides: [PlueckerLine; 4],
    pub diagonals: [PlueckerLine; 2],
}

pub fn quadrilateral_instance(seed: u64) -> Quadrilateral {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vertices = (0..MAX_DRAWS)
        .map(|_| -> [[BigInt; 4]; 4] { core::array::from_fn(|_| random_point(&mut rng)) })
        .find(|m| !linalg::determinant(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).is_zero())
        .expect("four independent points within the draw budget");
    let line = |i: usize, j: usize| PlueckerLine::through(&vertices[i], &vertices[j]).expect("independent");
    Quadrilateral {
        sides: [line(0, 1), line(1, 2), line(2, 3), line(3, 0)],
        diagonals: [line(0, 2), line(1, 3)],
        vertices,
    }
}

/// A curve of bidegree `(p, q)` on `P1 x P1`:
/// `sum coeffs[i][j] x0^(p-i) x1^i y0^(q-j) y1^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChaslesInstance {
    pub p: usize,
    pub q: usize,
    pub coeffs: Vec<Vec<BigInt>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChaslesOutcome {
    /// Number of coincidences counted with multiplicity.
    Finite(u64),
    /// The curve contains the diagonal.
    Infinite,
}

impl fmt::Display for ChaslesOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChaslesOutcome::Finite(n) => write!(f, "Finite({n})"),
            ChaslesOutcome::Infinite => f.write_str("Infinite"),
        }
    }
}

pub fn random_chasles_instance(p: usize, q: usize, seed: u64) -> ChaslesInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_DRAWS {
        let coeffs: Vec<Vec<BigInt>> = (0..=p).map(|_| (0..=q).map(|_| small(&mut rng)).collect()).collect();
        if coeffs.iter().flatten().any(|c| !c.is_zero()) {
            return ChaslesInstance { p, q, coeffs };
        }
    }
    unreachable!("a nonzero coefficient array within the draw budget")
}

/// Restricts the curve to the diagonal `x = y`, giving a binary form of
/// degree `p + q` whose coefficient of `x0^(p+q-k) x1^k` is the sum of
/// `coeffs[i][j]` over `i + j = k`.
pub fn chasles_diagonal_count(instance: &ChaslesInstance) -> ChaslesOutcome {
    let ChaslesInstance { p, q, coeffs } = instance;
    let mut restricted = alloc::vec![BigInt::zero(); p + q + 1];
    for (i, row) in coeffs.iter().enumerate().take(p + 1) {
        for (j, c) in row.iter().enumerate().take(q + 1) {
            restricted[i + j] += c;
        }
    }
    if restricted.iter().all(Zero::is_zero) {
        ChaslesOutcome::Infinite
    } else {
        ChaslesOutcome::Finite((p + q) as u64)
    }
}
