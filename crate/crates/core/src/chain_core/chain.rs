use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A basis element of a chain complex: its degree and its position in the
/// ordered basis of that degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub degree: i32,
    pub index: usize,
}

impl Generator {
    pub fn new(degree: i32, index: usize) -> Self {
        Self { degree, index }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}@{}", self.index, self.degree)
    }
}

/// A homogeneous integer combination of generators in canonical form: terms
/// sorted by generator index, no repeated generator, no zero coefficient.
///
/// Zero chains compare equal whatever degree they carry.
#[derive(Clone, Debug)]
pub struct Chain {
    degree: i32,
    terms: Vec<(usize, BigInt)>,
}

impl PartialEq for Chain {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (self.terms.is_empty() || self.degree == other.degree)
    }
}

impl Eq for Chain {}

impl std::hash::Hash for Chain {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        if !self.terms.is_empty() {
            self.degree.hash(state);
        }
        self.terms.hash(state);
    }
}

impl Chain {
    pub fn zero(degree: i32) -> Self {
        Self { degree, terms: Vec::new() }
    }

    pub fn generator(g: Generator) -> Self {
        Self { degree: g.degree, terms: vec![(g.index, BigInt::one())] }
    }

    pub fn term(degree: i32, index: usize, coeff: impl Into<BigInt>) -> Self {
        Self::from_terms(degree, [(index, coeff.into())])
    }

    /// Builds a chain from `(index, coefficient)` pairs in a single degree,
    /// merging duplicates and dropping zeros.
    pub fn from_terms(degree: i32, terms: impl IntoIterator<Item = (usize, BigInt)>) -> Self {
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (index, coeff) in terms {
            *acc.entry(index).or_insert_with(BigInt::zero) += coeff;
        }
        Self::from_map(degree, acc)
    }

    fn from_map(degree: i32, acc: BTreeMap<usize, BigInt>) -> Self {
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Self { degree, terms }
    }

    /// Canonical form of a list of `(coefficient, generator)` terms. All
    /// generators must share one degree; the empty list gives the zero chain of
    /// degree `default_degree`.
    pub fn canonicalize(
        terms: impl IntoIterator<Item = (BigInt, Generator)>,
        default_degree: i32,
    ) -> Result<Self> {
        let mut degree = None;
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (coeff, g) in terms {
            match degree {
                None => degree = Some(g.degree),
                Some(d) if d != g.degree => {
                    return Err(Error::DegreeMismatch { expected: d, found: g.degree })
                }
                _ => {}
            }
            *acc.entry(g.index).or_insert_with(BigInt::zero) += coeff;
        }
        Ok(Self::from_map(degree.unwrap_or(default_degree), acc))
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(usize, BigInt)] {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (Generator, &BigInt)> + '_ {
        let degree = self.degree;
        self.terms.iter().map(move |(i, c)| (Generator::new(degree, *i), c))
    }

    pub fn coefficient(&self, index: usize) -> BigInt {
        self.terms
            .binary_search_by_key(&index, |(i, _)| *i)
            .map(|k| self.terms[k].1.clone())
            .unwrap_or_else(|_| BigInt::zero())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.degree);
        }
        Self {
            degree: self.degree,
            terms: self.terms.iter().map(|(i, c)| (*i, c * k)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            degree: self.degree,
            terms: self.terms.iter().map(|(i, c)| (*i, -c)).collect(),
        }
    }

    /// `self + k * other`. Both chains must live in the same degree unless one
    /// of them is zero.
    pub fn add_scaled(&self, k: &BigInt, other: &Chain) -> Self {
        if other.is_zero() || k.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.scale(k);
        }
        assert_eq!(self.degree, other.degree, "adding chains of different degrees");
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * k));
                        b.next();
                    } else {
                        let s = x + y * k;
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * k));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Self { degree: self.degree, terms: out }
    }

    pub fn add(&self, other: &Chain) -> Self {
        self.add_scaled(&BigInt::one(), other)
    }

    pub fn sub(&self, other: &Chain) -> Self {
        self.add_scaled(&-BigInt::one(), other)
    }

    /// Re-expresses the chain in another degree with generator indices mapped
    /// through `reindex`.
    pub(crate) fn relabel(&self, degree: i32, reindex: impl Fn(usize) -> usize) -> Self {
        Self::from_terms(degree, self.terms.iter().map(|(i, c)| (reindex(*i), c.clone())))
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0@{}", self.degree);
        }
        for (k, (i, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*#{i}")?;
        }
        write!(f, " @{}", self.degree)
    }
}
