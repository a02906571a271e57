use std::fmt;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::chain_core::{same_complex, Chain, ChainComplex, Generator, GradedMorphism};
use crate::error::{Error, Result};

/// How many generators [`Reduction::verify`] inspects.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Complexes with at most this many generators are checked exhaustively.
    pub exhaustive_limit: usize,
    /// Number of generators sampled from larger complexes.
    pub sample_size: usize,
    pub seed: u64,
}

/// Environment variable overriding [`VerifyConfig::exhaustive_limit`].
pub const VERIFY_LIMIT_VAR: &str = "PUSHOUT_VERIFY_LIMIT";

impl Default for VerifyConfig {
    /// 5000 generators exhaustively, or the value of `PUSHOUT_VERIFY_LIMIT`.
    fn default() -> Self {
        let exhaustive_limit = std::env::var(VERIFY_LIMIT_VAR)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(5_000);
        Self { exhaustive_limit, sample_size: 1_000, seed: 0x5eed_0f4e_d0c7 }
    }
}

impl VerifyConfig {
    fn pick(&self, c: &ChainComplex) -> (Vec<Generator>, bool) {
        let all: Vec<Generator> = c.all_generators().collect();
        if all.len() <= self.exhaustive_limit {
            return (all, false);
        }
        let mut rng = StdRng::seed_from_u64(self.seed);
        let mut picked: Vec<Generator> =
            all.choose_multiple(&mut rng, self.sample_size).copied().collect();
        picked.sort();
        (picked, true)
    }
}

/// The reduction equations, plus the chain-map conditions on `f` and `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Equation {
    /// f∘g = id on the small complex
    FG,
    /// g∘f = id − (dh + hd) on the big complex
    GF,
    /// f∘h = 0
    FH,
    /// h∘g = 0
    HG,
    /// h∘h = 0
    HH,
    FChainMap,
    GChainMap,
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Equation::FG => "f∘g = id",
            Equation::GF => "g∘f = id − (dh + hd)",
            Equation::FH => "f∘h = 0",
            Equation::HG => "h∘g = 0",
            Equation::HH => "h∘h = 0",
            Equation::FChainMap => "f is a chain map",
            Equation::GChainMap => "g is a chain map",
        };
        f.write_str(s)
    }
}

/// A failed equation together with the generator exhibiting the failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub equation: Equation,
    pub witness: Generator,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails on {}", self.equation, self.witness)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionReport {
    pub checked_big: usize,
    pub checked_small: usize,
    pub sampled: bool,
    pub violations: Vec<Violation>,
}

impl ReductionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A reduction from a big complex onto a small one: chain maps `f`, `g` and a
/// degree +1 homotopy `h` satisfying
/// `fg = id`, `gf = id − (dh + hd)`, `fh = 0`, `hg = 0`, `hh = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    big: Arc<ChainComplex>,
    small: Arc<ChainComplex>,
    f: GradedMorphism,
    g: GradedMorphism,
    h: GradedMorphism,
}

impl Reduction {
    /// Packs three morphisms, checking only their shape. Use
    /// [`Reduction::verify`] for the equations.
    pub fn new(f: GradedMorphism, g: GradedMorphism, h: GradedMorphism) -> Result<Self> {
        let big = f.source().clone();
        let small = f.target().clone();
        let shape_ok = same_complex(g.source(), &small)
            && same_complex(g.target(), &big)
            && same_complex(h.source(), &big)
            && same_complex(h.target(), &big);
        if !shape_ok {
            return Err(Error::Structure(
                "reduction morphisms do not share a big and a small complex".into(),
            ));
        }
        if f.degree() != 0 || g.degree() != 0 || h.degree() != 1 {
            return Err(Error::Structure(format!(
                "reduction degrees must be (0, 0, 1), got ({}, {}, {})",
                f.degree(),
                g.degree(),
                h.degree()
            )));
        }
        Ok(Self { big, small, f, g, h })
    }

    pub fn identity(c: &Arc<ChainComplex>) -> Self {
        let id = GradedMorphism::identity(c);
        Self::new(id.clone(), id, GradedMorphism::zero(c, c, 1)).expect("identity reduction")
    }

    pub fn big(&self) -> &Arc<ChainComplex> {
        &self.big
    }

    pub fn small(&self) -> &Arc<ChainComplex> {
        &self.small
    }

    pub fn f(&self) -> &GradedMorphism {
        &self.f
    }

    pub fn g(&self) -> &GradedMorphism {
        &self.g
    }

    pub fn h(&self) -> &GradedMorphism {
        &self.h
    }

    pub fn into_parts(self) -> (GradedMorphism, GradedMorphism, GradedMorphism) {
        (self.f, self.g, self.h)
    }

    /// Evaluates every equation on the generators selected by `config`.
    pub fn verify(&self, config: &VerifyConfig) -> ReductionReport {
        let mut violations = Vec::new();
        let (small_gens, small_sampled) = config.pick(&self.small);
        let (big_gens, big_sampled) = config.pick(&self.big);

        for &x in &small_gens {
            let gx = self.g.image(x);
            if self.f.apply_unchecked(&gx) != Chain::generator(x) {
                violations.push(Violation { equation: Equation::FG, witness: x });
            }
            if !self.h.apply_unchecked(&gx).is_zero() {
                violations.push(Violation { equation: Equation::HG, witness: x });
            }
            if self.big.d(&gx) != self.g.apply_unchecked(&self.small.differential(x)) {
                violations.push(Violation { equation: Equation::GChainMap, witness: x });
            }
        }
        for &x in &big_gens {
            let hx = self.h.image(x);
            let dx = self.big.differential(x);
            let homotopy = self.big.d(&hx).add(&self.h.apply_unchecked(&dx));
            let lhs = self.g.apply_unchecked(&self.f.image(x));
            let rhs = Chain::generator(x).sub(&homotopy);
            if lhs != rhs {
                violations.push(Violation { equation: Equation::GF, witness: x });
            }
            if !self.f.apply_unchecked(&hx).is_zero() {
                violations.push(Violation { equation: Equation::FH, witness: x });
            }
            if !self.h.apply_unchecked(&hx).is_zero() {
                violations.push(Violation { equation: Equation::HH, witness: x });
            }
            let fx = self.f.image(x);
            if self.small.d(&fx) != self.f.apply_unchecked(&dx) {
                violations.push(Violation { equation: Equation::FChainMap, witness: x });
            }
        }
        ReductionReport {
            checked_big: big_gens.len(),
            checked_small: small_gens.len(),
            sampled: small_sampled || big_sampled,
            violations,
        }
    }

    pub(crate) fn verified(self, leg: &str, config: &VerifyConfig) -> Result<Self> {
        let report = self.verify(config);
        match report.violations.into_iter().next() {
            None => Ok(self),
            Some(violation) => Err(Error::InvalidReduction { leg: leg.into(), violation }),
        }
    }

    /// Composite of `inner: big ⇒ mid` followed by `outer: mid ⇒ small`.
    pub fn compose(outer: &Reduction, inner: &Reduction) -> Result<Self> {
        if !same_complex(&inner.small, &outer.big) {
            return Err(Error::ComplexMismatch(
                "inner reduction's small complex differs from outer's big complex".into(),
            ));
        }
        let f = GradedMorphism::compose(&outer.f, &inner.f)?;
        let g = GradedMorphism::compose(&inner.g, &outer.g)?;
        let lifted = GradedMorphism::compose(&inner.g, &GradedMorphism::compose(&outer.h, &inner.f)?)?;
        let h = inner.h.add(&lifted)?;
        Self::new(f, g, h)
    }
}

/// Two reductions out of a common big complex: `left ⇐ big ⇒ right`. The right
/// complex is the effective one whose homology is computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyEquivalence {
    lrdct: Reduction,
    rrdct: Reduction,
}

impl HomotopyEquivalence {
    /// Packs two reductions after checking that they share their big complex
    /// and both satisfy the reduction equations.
    pub fn from_reductions(lrdct: Reduction, rrdct: Reduction) -> Result<Self> {
        Self::from_reductions_with(lrdct, rrdct, &VerifyConfig::default())
    }

    pub fn from_reductions_with(lrdct: Reduction, rrdct: Reduction, config: &VerifyConfig) -> Result<Self> {
        if !same_complex(&lrdct.big, &rrdct.big) {
            return Err(Error::Structure("left and right reductions have different big complexes".into()));
        }
        let lrdct = lrdct.verified("left", config)?;
        let rrdct = rrdct.verified("right", config)?;
        Ok(Self { lrdct, rrdct })
    }

    /// Assembles the equivalence from its six morphisms.
    pub fn build(
        lf: GradedMorphism,
        lg: GradedMorphism,
        lh: GradedMorphism,
        rf: GradedMorphism,
        rg: GradedMorphism,
        rh: GradedMorphism,
    ) -> Result<Self> {
        if !same_complex(lf.source(), rf.source()) {
            return Err(Error::Structure("left and right legs have different big complexes".into()));
        }
        Self::from_reductions(Reduction::new(lf, lg, lh)?, Reduction::new(rf, rg, rh)?)
    }

    /// The equivalence `C ⇐ C ⇒ C` with identity maps and zero homotopies.
    pub fn trivial(c: &Arc<ChainComplex>) -> Self {
        let r = Reduction::identity(c);
        Self { lrdct: r.clone(), rrdct: r }
    }

    pub fn lrdct(&self) -> &Reduction {
        &self.lrdct
    }

    pub fn rrdct(&self) -> &Reduction {
        &self.rrdct
    }

    pub fn big(&self) -> &Arc<ChainComplex> {
        &self.lrdct.big
    }

    pub fn left(&self) -> &Arc<ChainComplex> {
        &self.lrdct.small
    }

    pub fn right(&self) -> &Arc<ChainComplex> {
        &self.rrdct.small
    }

    pub fn lf(&self) -> &GradedMorphism {
        &self.lrdct.f
    }

    pub fn lg(&self) -> &GradedMorphism {
        &self.lrdct.g
    }

    pub fn lh(&self) -> &GradedMorphism {
        &self.lrdct.h
    }

    pub fn rf(&self) -> &GradedMorphism {
        &self.rrdct.f
    }

    pub fn rg(&self) -> &GradedMorphism {
        &self.rrdct.g
    }

    pub fn rh(&self) -> &GradedMorphism {
        &self.rrdct.h
    }

    pub fn verify(&self, config: &VerifyConfig) -> (ReductionReport, ReductionReport) {
        (self.lrdct.verify(config), self.rrdct.verify(config))
    }
}
