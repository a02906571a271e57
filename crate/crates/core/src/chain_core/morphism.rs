use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::chain_core::{same_complex, Chain, ChainComplex, Generator};
use crate::error::{Error, Result};

/// A linear map of degree `k` between two complexes, sending degree `n` to
/// degree `n + k`, stored by its images on the source basis.
///
/// Whether the map commutes with the differentials is recorded as a claim;
/// [`GradedMorphism::chain_map_violations`] checks it. The convention for a
/// degree `k` chain map is `d ∘ φ = (-1)^k φ ∘ d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMorphism {
    source: Arc<ChainComplex>,
    target: Arc<ChainComplex>,
    degree: i32,
    // images[n - source.lo][index]
    images: Vec<Vec<Chain>>,
    chain_map: bool,
}

impl GradedMorphism {
    /// Materializes `rule` on every source generator, checking that each image
    /// is a chain of the target in the right degree.
    pub fn from_fn(
        source: Arc<ChainComplex>,
        target: Arc<ChainComplex>,
        degree: i32,
        chain_map: bool,
        mut rule: impl FnMut(Generator) -> Chain,
    ) -> Result<Self> {
        let mut images = Vec::new();
        for n in source.degrees() {
            let mut level = Vec::with_capacity(source.rank(n));
            for g in source.generators(n) {
                let c = rule(g);
                let c = if c.is_zero() { Chain::zero(n + degree) } else { c };
                if c.degree() != n + degree {
                    return Err(Error::DegreeMismatch { expected: n + degree, found: c.degree() });
                }
                target.check_chain(&c)?;
                level.push(c);
            }
            images.push(level);
        }
        Ok(Self { source, target, degree, images, chain_map })
    }

    pub fn identity(c: &Arc<ChainComplex>) -> Self {
        Self::from_fn(c.clone(), c.clone(), 0, true, Chain::generator).expect("identity is well formed")
    }

    pub fn zero(source: &Arc<ChainComplex>, target: &Arc<ChainComplex>, degree: i32) -> Self {
        Self::from_fn(source.clone(), target.clone(), degree, degree == 0, |g| {
            Chain::zero(g.degree + degree)
        })
        .expect("zero map is well formed")
    }

    pub fn source(&self) -> &Arc<ChainComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<ChainComplex> {
        &self.target
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    /// The recorded chain-map claim.
    pub fn is_chain_map(&self) -> bool {
        self.chain_map
    }

    pub fn with_chain_map_claim(mut self, claim: bool) -> Self {
        self.chain_map = claim;
        self
    }

    /// Image of a single basis element.
    pub fn image(&self, g: Generator) -> Chain {
        match self.source.window() {
            Some((lo, _)) if g.degree >= lo => self
                .images
                .get((g.degree - lo) as usize)
                .and_then(|l| l.get(g.index))
                .cloned()
                .unwrap_or_else(|| Chain::zero(g.degree + self.degree)),
            _ => Chain::zero(g.degree + self.degree),
        }
    }

    /// Linear extension to a chain of the source.
    pub fn apply(&self, c: &Chain) -> Result<Chain> {
        self.source.check_chain(c).map_err(|_| {
            Error::ComplexMismatch(format!("chain {c} is not over the morphism's source"))
        })?;
        Ok(self.apply_unchecked(c))
    }

    pub(crate) fn apply_unchecked(&self, c: &Chain) -> Chain {
        let mut out = Chain::zero(c.degree() + self.degree);
        for (g, k) in c.iter() {
            out = out.add_scaled(k, &self.image(g));
        }
        out
    }

    /// `outer ∘ inner`.
    pub fn compose(outer: &GradedMorphism, inner: &GradedMorphism) -> Result<Self> {
        if !same_complex(&inner.target, &outer.source) {
            return Err(Error::ComplexMismatch(
                "inner target differs from outer source".into(),
            ));
        }
        Self::from_fn(
            inner.source.clone(),
            outer.target.clone(),
            inner.degree + outer.degree,
            inner.chain_map && outer.chain_map,
            |g| outer.apply_unchecked(&inner.image(g)),
        )
    }

    fn check_parallel(&self, other: &GradedMorphism) -> Result<()> {
        if !same_complex(&self.source, &other.source) || !same_complex(&self.target, &other.target) {
            return Err(Error::ComplexMismatch("morphisms are not parallel".into()));
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        Ok(())
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, k: &BigInt, other: &GradedMorphism) -> Result<Self> {
        self.check_parallel(other)?;
        Self::from_fn(
            self.source.clone(),
            self.target.clone(),
            self.degree,
            self.chain_map && other.chain_map,
            |g| self.image(g).add_scaled(k, &other.image(g)),
        )
    }

    pub fn add(&self, other: &GradedMorphism) -> Result<Self> {
        self.add_scaled(&BigInt::one(), other)
    }

    pub fn sub(&self, other: &GradedMorphism) -> Result<Self> {
        self.add_scaled(&-BigInt::one(), other)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_fn(self.source.clone(), self.target.clone(), self.degree, self.chain_map, |g| {
            self.image(g).scale(k)
        })
        .expect("scaling preserves shape")
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigInt::one())
    }

    /// Source generators on which `d ∘ φ = (-1)^k φ ∘ d` fails.
    pub fn chain_map_violations(&self) -> Vec<Generator> {
        let sign = if self.degree.rem_euclid(2) == 0 { BigInt::one() } else { -BigInt::one() };
        self.source
            .all_generators()
            .filter(|g| {
                let lhs = self.target.d(&self.image(*g));
                let rhs = self.apply_unchecked(&self.source.differential(*g)).scale(&sign);
                lhs != rhs
            })
            .collect()
    }

    /// Checks the commutation relation exhaustively, regardless of the claim.
    pub fn commutes_with_differentials(&self) -> bool {
        self.chain_map_violations().is_empty()
    }

    /// Source generators on which the two morphisms differ.
    pub fn differences(&self, other: &GradedMorphism) -> Vec<Generator> {
        self.source
            .all_generators()
            .filter(|g| {
                let (a, b) = (self.image(*g), other.image(*g));
                a != b
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().flatten().all(Chain::is_zero)
    }
}
