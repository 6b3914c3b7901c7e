//! Exact verification of line counts in Plücker coordinates.
//!
//! A line through points `x` and `y` of `P3` has coordinates
//! `p_ij = x_i y_j - x_j y_i`, stored in the order
//! `(p01, p02, p03, p23, p31, p12)`. Two lines meet iff
//!
//! ```text
//! a01 b23 + a23 b01 + a02 b31 + a31 b02 + a03 b12 + a12 b03 = 0
//! ```
//!
//! and a 6-vector is a line iff it meets itself, i.e. lies on the Plücker
//! quadric `p01 p23 + p02 p31 + p03 p12 = 0`. Everything is exact.

mod instances;
pub mod linalg;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use instances::{
    chasles_diagonal_count, four_lines_instance, quadrilateral_instance, random_chasles_instance, random_line,
    random_line_from_rng, random_point, ruling_instance, ruling_instance_seeded, trial_seed, ChaslesInstance,
    ChaslesOutcome, OracleKind, Quadrilateral, COORD_RANGE,
};

/// The coordinate pairs `(i, j)` of each slot.
pub const PLUECKER_INDICES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2)];

/// A line of `P3` as an exact Plücker 6-vector. Equality is projective.
#[derive(Clone, Debug)]
pub struct PlueckerLine {
    coords: [BigRational; 6],
}

/// Slot `k` pairs with slot `DUAL[k]` in the incidence form.
const DUAL: [usize; 6] = [3, 4, 5, 0, 1, 2];

fn incidence<T>(a: &[T; 6], b: &[T; 6]) -> T
where
    for<'x> &'x T: core::ops::Mul<&'x T, Output = T>,
    T: core::iter::Sum<T>,
{
    (0..6).map(|k| &a[k] * &b[DUAL[k]]).sum()
}

impl PlueckerLine {
    /// The line spanned by two points, or `None` if they coincide projectively.
    pub fn through(x: &[BigInt; 4], y: &[BigInt; 4]) -> Option<Self> {
        let coords = PLUECKER_INDICES.map(|(i, j)| BigRational::from_integer(&x[i] * &y[j] - &x[j] * &y[i]));
        coords.iter().any(|c| !c.is_zero()).then_some(Self { coords })
    }

    /// Accepts any nonzero 6-vector on the Plücker quadric.
    pub fn from_coords(coords: [BigRational; 6]) -> Option<Self> {
        let line = Self { coords };
        (line.coords.iter().any(|c| !c.is_zero()) && line.quadric().is_zero()).then_some(line)
    }

    pub fn from_integers(coords: [i64; 6]) -> Option<Self> {
        Self::from_coords(coords.map(|c| BigRational::from_integer(c.into())))
    }

    pub fn coords(&self) -> &[BigRational; 6] {
        &self.coords
    }

    /// The quadric value; zero for every valid line.
    pub fn quadric(&self) -> BigRational {
        let two = BigRational::from_integer(2.into());
        incidence(&self.coords, &self.coords) / two
    }

    /// Scaled so the first nonzero coordinate is 1.
    pub fn normalized(&self) -> Self {
        let lead = self.coords.iter().find(|c| !c.is_zero()).expect("nonzero line").clone();
        Self { coords: self.coords.clone().map(|c| c / &lead) }
    }

    /// Scaled to coprime integers with a positive first nonzero entry.
    pub fn primitive_integers(&self) -> [BigInt; 6] {
        let lcm = self.coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self.coords.clone().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer());
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let sign = if ints.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) { -g } else { g };
        ints.map(|x| x / &sign)
    }
}

impl PartialEq for PlueckerLine {
    fn eq(&self, other: &Self) -> bool {
        (0..6).all(|i| (0..6).all(|j| &self.coords[i] * &other.coords[j] == &self.coords[j] * &other.coords[i]))
    }
}

impl Eq for PlueckerLine {}

impl fmt::Display for PlueckerLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ints = self.primitive_integers();
        write!(f, "[{}:{}:{}:{}:{}:{}]", ints[0], ints[1], ints[2], ints[3], ints[4], ints[5])
    }
}

/// True iff the two lines meet (a line meets itself).
pub fn meets(a: &PlueckerLine, b: &PlueckerLine) -> bool {
    incidence(&a.coords, &b.coords).is_zero()
}

/// Outcome of [`count_transversals`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transversals {
    Finite {
        /// Distinct transversal lines.
        count: usize,
        /// Multiplicity of each root of the restricted quadric.
        multiplicities: Vec<u32>,
        /// The transversals themselves when they are rational.
        lines: Vec<PlueckerLine>,
    },
    Infinite {
        diagnostic: String,
    },
}

impl Transversals {
    pub fn finite_count(&self) -> Option<usize> {
        match self {
            Transversals::Finite { count, .. } => Some(*count),
            Transversals::Infinite { .. } => None,
        }
    }
}

impl fmt::Display for Transversals {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Transversals::Finite { count, .. } => write!(f, "Finite({count})"),
            Transversals::Infinite { .. } => f.write_str("Infinite"),
        }
    }
}

fn integer_row(line: &PlueckerLine) -> Vec<BigInt> {
    let ints = line.primitive_integers();
    (0..6).map(|k| ints[DUAL[k]].clone()).collect()
}

fn quadric_int(v: &[BigInt]) -> BigInt {
    &v[0] * &v[3] + &v[1] * &v[4] + &v[2] * &v[5]
}

fn polar_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    (0..6).map(|k| &a[k] * &b[DUAL[k]]).sum()
}

fn combine(l: &BigInt, a: &[BigInt], m: &BigInt, b: &[BigInt]) -> PlueckerLine {
    let coords: [BigRational; 6] = core::array::from_fn(|k| BigRational::from_integer(l * &a[k] + m * &b[k]));
    PlueckerLine::from_coords(coords).expect("root of the restricted quadric is a line")
}

/// Lines meeting all four given lines.
///
/// The four incidence conditions are linear in the six unknowns. A kernel of
/// dimension 2 is a pencil `l A + m B`, on which the Plücker quadric is the
/// binary form `a l^2 + b l m + c m^2` with `a = Q(A)`, `b = <A, B>` and
/// `c = Q(B)`; its roots are the transversals.
pub fn count_transversals(lines: &[PlueckerLine; 4]) -> Transversals {
    let matrix: Vec<Vec<BigInt>> = lines.iter().map(integer_row).collect();
    let reduced = linalg::row_reduce(&matrix);
    let kernel = reduced.kernel();
    if kernel.len() != 2 {
        return Transversals::Infinite {
            diagnostic: format!(
                "incidence equations have rank {}; solution space has projective dimension {}",
                reduced.rank(),
                kernel.len() - 1
            ),
        };
    }
    let (a_vec, b_vec) = (&kernel[0], &kernel[1]);
    let a = quadric_int(a_vec);
    let b = polar_int(a_vec, b_vec);
    let c = quadric_int(b_vec);
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Transversals::Infinite {
            diagnostic: "the Plücker quadric vanishes on the whole solution pencil".into(),
        };
    }
    let disc = &b * &b - BigInt::from(4) * &a * &c;
    let two_a = BigInt::from(2) * &a;
    if disc.is_zero() {
        let line = if a.is_zero() {
            combine(&BigInt::one(), a_vec, &BigInt::zero(), b_vec)
        } else {
            combine(&-&b, a_vec, &two_a, b_vec)
        };
        return Transversals::Finite { count: 1, multiplicities: alloc::vec![2], lines: alloc::vec![line] };
    }
    let mut found = Vec::new();
    if !disc.is_negative() {
        let r = disc.sqrt();
        if &r * &r == disc {
            if a.is_zero() {
                found.push(combine(&BigInt::one(), a_vec, &BigInt::zero(), b_vec));
                found.push(combine(&-&c, a_vec, &b, b_vec));
            } else {
                found.push(combine(&(-&b + &r), a_vec, &two_a, b_vec));
                found.push(combine(&(-&b - &r), a_vec, &two_a, b_vec));
            }
        }
    }
    Transversals::Finite { count: 2, multiplicities: alloc::vec![1, 1], lines: found }
}
