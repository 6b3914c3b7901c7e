use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// The ordered generator set of a graded polynomial ring.
///
/// The declaration order is also the variable order of the graded
/// lexicographic term order: the first generator is the most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Universe {
    names: Vec<String>,
    degrees: Vec<u32>,
}

impl Universe {
    /// # Panics
    /// If the slices differ in length, a degree is zero, or a name repeats.
    pub fn new(generators: &[(&str, u32)]) -> Self {
        let names: Vec<String> = generators.iter().map(|(n, _)| n.to_string()).collect();
        let degrees: Vec<u32> = generators.iter().map(|&(_, d)| d).collect();
        assert!(degrees.iter().all(|&d| d > 0), "generator degrees must be positive");
        for (i, a) in names.iter().enumerate() {
            assert!(!names[..i].contains(a), "duplicate generator {a}");
        }
        Self { names, degrees }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Graded lexicographic comparison.
    pub fn cmp_terms(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.degree(self).cmp(&b.degree(self)).then_with(|| a.exponents().cmp(b.exponents()))
    }

    /// All monomials of weighted degree exactly `degree`, in increasing
    /// lexicographic order of exponent vectors.
    pub fn monomials_of_degree(&self, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current = alloc::vec![0u32; self.len()];
        self.fill(0, degree, &mut current, &mut out);
        out.sort();
        out
    }

    fn fill(&self, index: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if index == self.len() {
            if remaining == 0 {
                out.push(Monomial::new(current.clone()));
            }
            return;
        }
        let d = self.degrees[index];
        for e in 0..=remaining / d {
            current[index] = e;
            self.fill(index + 1, remaining - e * d, current, out);
        }
        current[index] = 0;
    }
}

/// An exponent vector over a [`Universe`].
///
/// The derived `Ord` is plain lexicographic on exponents; the term order of a
/// ring is [`Universe::cmp_terms`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    pub fn one(len: usize) -> Self {
        Self { exps: alloc::vec![0; len] }
    }

    pub fn generator(len: usize, index: usize, power: u32) -> Self {
        let mut m = Self::one(len);
        m.exps[index] = power;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self, universe: &Universe) -> u32 {
        self.exps.iter().zip(universe.degrees()).map(|(e, d)| e * d).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn cofactor_in(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial::new(other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn display<'a>(&'a self, universe: &'a Universe) -> MonomialDisplay<'a> {
        MonomialDisplay { monomial: self, universe }
    }
}

pub struct MonomialDisplay<'a> {
    monomial: &'a Monomial,
    universe: &'a Universe,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, name) in self.monomial.exps.iter().zip(self.universe.names()) {
            if *e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if *e == 1 {
                f.write_str(name)?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}
