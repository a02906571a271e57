//! Direct sums, suspensions and cones of complexes, together with the
//! corresponding operations on reductions and equivalences.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::chain_core::{
    same_complex, Chain, ChainComplex, Generator, GradedMorphism, HomotopyEquivalence, LevelSpec,
    Reduction,
};
use crate::error::{Error, Result};

fn window_union(ws: impl IntoIterator<Item = Option<(i32, i32)>>) -> Option<(i32, i32)> {
    ws.into_iter().flatten().reduce(|(a, b), (c, d)| (a.min(c), b.max(d)))
}

/// Which summand a generator of a two-part complex comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    First(Generator),
    Second(Generator),
}

/// `B ⊕ C`, with the basis of each degree listing `B` first, then `C`.
#[derive(Clone, Debug)]
pub struct DirectSum {
    complex: Arc<ChainComplex>,
    left: Arc<ChainComplex>,
    right: Arc<ChainComplex>,
}

impl DirectSum {
    pub fn new(left: &Arc<ChainComplex>, right: &Arc<ChainComplex>) -> Self {
        let mut levels = Vec::new();
        let lo = match window_union([left.window(), right.window()]) {
            None => 0,
            Some((lo, hi)) => {
                for n in lo..=hi {
                    let offset = left.rank(n - 1);
                    let mut spec = LevelSpec::default();
                    for g in left.generators(n) {
                        spec.labels.push(format!("l.{}", left.basis(n)[g.index]));
                        spec.diff.push(left.differential(g));
                    }
                    for g in right.generators(n) {
                        spec.labels.push(format!("r.{}", right.basis(n)[g.index]));
                        spec.diff.push(right.differential(g).relabel(n - 1, |i| i + offset));
                    }
                    levels.push(spec);
                }
                lo
            }
        };
        let complex = ChainComplex::new(lo, levels).expect("direct sum is well formed").into_arc();
        Self { complex, left: left.clone(), right: right.clone() }
    }

    pub fn complex(&self) -> &Arc<ChainComplex> {
        &self.complex
    }

    pub fn left(&self) -> &Arc<ChainComplex> {
        &self.left
    }

    pub fn right(&self) -> &Arc<ChainComplex> {
        &self.right
    }

    pub fn left_generator(&self, g: Generator) -> Generator {
        g
    }

    pub fn right_generator(&self, g: Generator) -> Generator {
        Generator::new(g.degree, g.index + self.left.rank(g.degree))
    }

    pub fn split(&self, g: Generator) -> Part {
        let k = self.left.rank(g.degree);
        if g.index < k {
            Part::First(g)
        } else {
            Part::Second(Generator::new(g.degree, g.index - k))
        }
    }

    /// `(x, y)` for chains `x` over the left summand and `y` over the right one.
    pub fn pair(&self, x: &Chain, y: &Chain) -> Chain {
        let n = if x.is_zero() { y.degree() } else { x.degree() };
        let offset = self.left.rank(n);
        x.add(&y.relabel(n, |i| i + offset))
    }

    /// Components of a chain of the sum.
    pub fn components(&self, c: &Chain) -> (Chain, Chain) {
        let n = c.degree();
        let k = self.left.rank(n);
        let x = Chain::from_terms(n, c.terms().iter().filter(|(i, _)| *i < k).cloned());
        let y = Chain::from_terms(n, c.terms().iter().filter(|(i, _)| *i >= k).map(|(i, v)| (i - k, v.clone())));
        (x, y)
    }

    pub fn inj_left(&self) -> GradedMorphism {
        GradedMorphism::from_fn(self.left.clone(), self.complex.clone(), 0, true, |g| {
            Chain::generator(self.left_generator(g))
        })
        .expect("injection")
    }

    pub fn inj_right(&self) -> GradedMorphism {
        GradedMorphism::from_fn(self.right.clone(), self.complex.clone(), 0, true, |g| {
            Chain::generator(self.right_generator(g))
        })
        .expect("injection")
    }

    pub fn proj_left(&self) -> GradedMorphism {
        GradedMorphism::from_fn(self.complex.clone(), self.left.clone(), 0, true, |g| match self.split(g) {
            Part::First(x) => Chain::generator(x),
            Part::Second(_) => Chain::zero(g.degree),
        })
        .expect("projection")
    }

    pub fn proj_right(&self) -> GradedMorphism {
        GradedMorphism::from_fn(self.complex.clone(), self.right.clone(), 0, true, |g| match self.split(g) {
            Part::First(_) => Chain::zero(g.degree),
            Part::Second(y) => Chain::generator(y),
        })
        .expect("projection")
    }

    /// Block-diagonal morphism `m1 ⊕ m2` from `self` to `target`.
    pub fn block(&self, target: &DirectSum, m1: &GradedMorphism, m2: &GradedMorphism) -> Result<GradedMorphism> {
        let ok = same_complex(m1.source(), &self.left)
            && same_complex(m2.source(), &self.right)
            && same_complex(m1.target(), &target.left)
            && same_complex(m2.target(), &target.right);
        if !ok {
            return Err(Error::ComplexMismatch("block morphism endpoints".into()));
        }
        if m1.degree() != m2.degree() {
            return Err(Error::DegreeMismatch { expected: m1.degree(), found: m2.degree() });
        }
        let k = m1.degree();
        GradedMorphism::from_fn(
            self.complex.clone(),
            target.complex.clone(),
            k,
            m1.is_chain_map() && m2.is_chain_map(),
            |g| match self.split(g) {
                Part::First(x) => target.pair(&m1.image(x), &Chain::zero(g.degree + k)),
                Part::Second(y) => target.pair(&Chain::zero(g.degree + k), &m2.image(y)),
            },
        )
    }
}

pub fn direct_sum(b: &Arc<ChainComplex>, c: &Arc<ChainComplex>) -> DirectSum {
    DirectSum::new(b, c)
}

/// `ΣC`: `(ΣC)_{n+1} = C_n` with differential `-d`.
pub fn suspension(c: &Arc<ChainComplex>) -> Arc<ChainComplex> {
    c.reindexed(1, -1, |s| format!("s.{s}")).into_arc()
}

/// The degree +1 map `C → ΣC` sending each generator to its copy. It is a chain
/// map in the sense `d ∘ s = -s ∘ d`.
pub fn suspension_shift(c: &Arc<ChainComplex>, sc: &Arc<ChainComplex>) -> Result<GradedMorphism> {
    GradedMorphism::from_fn(c.clone(), sc.clone(), 1, true, |g| Chain::term(g.degree + 1, g.index, 1))
}

/// The inverse of [`suspension_shift`], of degree -1.
pub fn desuspension_shift(sc: &Arc<ChainComplex>, c: &Arc<ChainComplex>) -> Result<GradedMorphism> {
    GradedMorphism::from_fn(sc.clone(), c.clone(), -1, true, |g| Chain::term(g.degree - 1, g.index, 1))
}

/// Transports a morphism `m: S → T` to `ΣS → ΣT`, multiplying by `sign`.
fn suspend_morphism(
    m: &GradedMorphism,
    ss: &Arc<ChainComplex>,
    st: &Arc<ChainComplex>,
    sign: i32,
) -> Result<GradedMorphism> {
    let k = BigInt::from(sign);
    GradedMorphism::from_fn(ss.clone(), st.clone(), m.degree(), m.is_chain_map(), |g| {
        let img = m.image(Generator::new(g.degree - 1, g.index)).scale(&k);
        img.relabel(img.degree() + 1, |i| i)
    })
}

/// The two cone conventions.
///
/// `Standard`: `Cone(φ)_n = A_{n-1} ⊕ B_n`, `d(a, b) = (-d a, φ a + d b)`.
///
/// `Desuspended`: `Cone2(φ)_n = A_n ⊕ B_{n+1}`, `d(a, b) = (d a, -φ a - d b)`,
/// the degreewise desuspension of the standard cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeKind {
    Standard,
    Desuspended,
}

impl ConeKind {
    /// Degree in `A` of the `A`-part of cone degree 0.
    fn a_shift(self) -> i32 {
        match self {
            ConeKind::Standard => -1,
            ConeKind::Desuspended => 0,
        }
    }

    fn b_shift(self) -> i32 {
        self.a_shift() + 1
    }

    /// Signs on `d_A`, `φ`, `d_B` in the cone differential.
    fn signs(self) -> (i32, i32, i32) {
        match self {
            ConeKind::Standard => (-1, 1, 1),
            ConeKind::Desuspended => (1, -1, -1),
        }
    }
}

/// The cone of a degree 0 morphism `φ: A → B`; in each degree the basis lists
/// the `A`-part first.
#[derive(Clone, Debug)]
pub struct Cone {
    kind: ConeKind,
    morphism: GradedMorphism,
    complex: Arc<ChainComplex>,
}

impl Cone {
    pub fn new(kind: ConeKind, phi: &GradedMorphism) -> Result<Self> {
        if phi.degree() != 0 {
            return Err(Error::NonzeroDegree(phi.degree()));
        }
        let (a, b) = (phi.source(), phi.target());
        let (sa, sb) = (kind.a_shift(), kind.b_shift());
        let (ea, ephi, eb) = kind.signs();
        let (ea, ephi, eb) = (BigInt::from(ea), BigInt::from(ephi), BigInt::from(eb));
        let shifted = |w: Option<(i32, i32)>, s: i32| w.map(|(lo, hi)| (lo - s, hi - s));
        let mut levels = Vec::new();
        let lo = match window_union([shifted(a.window(), sa), shifted(b.window(), sb)]) {
            None => 0,
            Some((lo, hi)) => {
                for n in lo..=hi {
                    let offset = a.rank(n - 1 + sa);
                    let mut spec = LevelSpec::default();
                    for g in a.generators(n + sa) {
                        spec.labels.push(format!("a.{}", a.basis(g.degree)[g.index]));
                        let da = a.differential(g).scale(&ea).relabel(n - 1, |i| i);
                        let fa = phi.image(g).scale(&ephi).relabel(n - 1, |i| i + offset);
                        spec.diff.push(da.add(&fa));
                    }
                    for g in b.generators(n + sb) {
                        spec.labels.push(format!("b.{}", b.basis(g.degree)[g.index]));
                        spec.diff.push(b.differential(g).scale(&eb).relabel(n - 1, |i| i + offset));
                    }
                    levels.push(spec);
                }
                lo
            }
        };
        let complex = ChainComplex::new(lo, levels)?.into_arc();
        Ok(Self { kind, morphism: phi.clone(), complex })
    }

    pub fn kind(&self) -> ConeKind {
        self.kind
    }

    pub fn complex(&self) -> &Arc<ChainComplex> {
        &self.complex
    }

    pub fn morphism(&self) -> &GradedMorphism {
        &self.morphism
    }

    pub fn source(&self) -> &Arc<ChainComplex> {
        self.morphism.source()
    }

    pub fn target(&self) -> &Arc<ChainComplex> {
        self.morphism.target()
    }

    /// Cone degree holding the `A`-generators of `A`-degree `m`.
    pub fn degree_of_a(&self, m: i32) -> i32 {
        m - self.kind.a_shift()
    }

    pub fn degree_of_b(&self, m: i32) -> i32 {
        m - self.kind.b_shift()
    }

    pub fn split(&self, g: Generator) -> Part {
        let a = self.source();
        let k = a.rank(g.degree + self.kind.a_shift());
        if g.index < k {
            Part::First(Generator::new(g.degree + self.kind.a_shift(), g.index))
        } else {
            Part::Second(Generator::new(g.degree + self.kind.b_shift(), g.index - k))
        }
    }

    /// The cone chain with `A`-part `x` and `B`-part `y`.
    pub fn pair(&self, x: &Chain, y: &Chain) -> Chain {
        let n = if x.is_zero() { self.degree_of_b(y.degree()) } else { self.degree_of_a(x.degree()) };
        let offset = self.source().rank(n + self.kind.a_shift());
        x.relabel(n, |i| i).add(&y.relabel(n, |i| i + offset))
    }

    /// `A`-part and `B`-part of a cone chain.
    pub fn components(&self, c: &Chain) -> (Chain, Chain) {
        let n = c.degree();
        let k = self.source().rank(n + self.kind.a_shift());
        let x = Chain::from_terms(
            n + self.kind.a_shift(),
            c.terms().iter().filter(|(i, _)| *i < k).cloned(),
        );
        let y = Chain::from_terms(
            n + self.kind.b_shift(),
            c.terms().iter().filter(|(i, _)| *i >= k).map(|(i, v)| (i - k, v.clone())),
        );
        (x, y)
    }

    fn a_chain(&self, x: &Chain) -> Chain {
        self.pair(x, &Chain::zero(x.degree() + 1))
    }

    fn b_chain(&self, y: &Chain) -> Chain {
        self.pair(&Chain::zero(y.degree() - 1), y)
    }

    /// `B → Cone`, the inclusion of the `B`-part, as a morphism of degree
    /// `-b_shift`.
    pub fn inj_target(&self) -> Result<GradedMorphism> {
        let k = -self.kind.b_shift();
        GradedMorphism::from_fn(self.target().clone(), self.complex.clone(), k, k == 0, |g| {
            self.b_chain(&Chain::generator(g))
        })
    }

    /// `Cone → A`, the projection onto the `A`-part, of degree `a_shift`.
    pub fn proj_source(&self) -> Result<GradedMorphism> {
        let k = self.kind.a_shift();
        GradedMorphism::from_fn(self.complex.clone(), self.source().clone(), k, k == 0, |g| match self.split(g) {
            Part::First(x) => Chain::generator(x),
            Part::Second(_) => Chain::zero(g.degree + k),
        })
    }
}

/// `Cone(φ)_n = A_{n-1} ⊕ B_n`.
pub fn cone(phi: &GradedMorphism) -> Result<Cone> {
    Cone::new(ConeKind::Standard, phi)
}

/// `Cone2(φ)_n = A_n ⊕ B_{n+1}`.
pub fn cone2(phi: &GradedMorphism) -> Result<Cone> {
    Cone::new(ConeKind::Desuspended, phi)
}

/// Given a chain map `φ': A' → B'` and reductions `A' ⇒ A`, `B' ⇒ B`, the
/// reduction `Cone(φ') ⇒ Cone(f_B φ' g_A)`.
///
/// The cone differential is the direct-sum differential perturbed by the
/// off-diagonal `φ'` term. That perturbation maps the `A`-part to the
/// `B`-part only, so every composite `δ h δ` vanishes and the corrected maps
/// are `F = F₀ − F₀δH₀`, `G = G₀ − H₀δG₀`, `H = H₀ − H₀δH₀`.
pub fn cone_reduction(
    kind: ConeKind,
    phi: &GradedMorphism,
    ra: &Reduction,
    rb: &Reduction,
) -> Result<(Reduction, Cone, Cone)> {
    if !same_complex(phi.source(), ra.big()) || !same_complex(phi.target(), rb.big()) {
        return Err(Error::ComplexMismatch("cone morphism does not match the reductions' big complexes".into()));
    }
    let big = Cone::new(kind, phi)?;
    let small_phi = GradedMorphism::compose(rb.f(), &GradedMorphism::compose(phi, ra.g())?)?;
    let small = Cone::new(kind, &small_phi)?;
    let (ea, ephi, eb) = kind.signs();
    let ea = BigInt::from(ea);
    let eb = BigInt::from(eb);
    let f_corr = BigInt::from(-ephi) * &ea;
    let g_corr = BigInt::from(-ephi) * &eb;
    let h_corr = &f_corr * &eb;

    let f = GradedMorphism::from_fn(big.complex.clone(), small.complex.clone(), 0, true, |g| match big.split(g) {
        Part::First(a) => {
            let corr = rb.f().apply_unchecked(&phi.apply_unchecked(&ra.h().image(a))).scale(&f_corr);
            small.pair(&ra.f().image(a), &corr)
        }
        Part::Second(b) => small.b_chain(&rb.f().image(b)),
    })?;
    let g = GradedMorphism::from_fn(small.complex.clone(), big.complex.clone(), 0, true, |g| match small.split(g) {
        Part::First(a) => {
            let corr = rb.h().apply_unchecked(&phi.apply_unchecked(&ra.g().image(a))).scale(&g_corr);
            big.pair(&ra.g().image(a), &corr)
        }
        Part::Second(b) => big.b_chain(&rb.g().image(b)),
    })?;
    let h = GradedMorphism::from_fn(big.complex.clone(), big.complex.clone(), 1, false, |g| match big.split(g) {
        Part::First(a) => {
            let ha = ra.h().image(a);
            let corr = rb.h().apply_unchecked(&phi.apply_unchecked(&ha)).scale(&h_corr);
            big.pair(&ha.scale(&ea), &corr)
        }
        Part::Second(b) => big.b_chain(&rb.h().image(b).scale(&eb)),
    })?;
    Ok((Reduction::new(f, g, h)?, small, big))
}

/// The contraction `Cone(id_C) ⇒ 0`.
pub fn identity_cone_contraction(kind: ConeKind, c: &Arc<ChainComplex>) -> Result<Reduction> {
    let id = GradedMorphism::identity(c);
    let k = Cone::new(kind, &id)?;
    let zero = ChainComplex::zero().into_arc();
    let sign = BigInt::from(match kind {
        ConeKind::Standard => 1,
        ConeKind::Desuspended => -1,
    });
    let f = GradedMorphism::zero(k.complex(), &zero, 0);
    let g = GradedMorphism::zero(&zero, k.complex(), 0);
    let h = GradedMorphism::from_fn(k.complex.clone(), k.complex.clone(), 1, false, |g| match k.split(g) {
        Part::First(_) => Chain::zero(g.degree + 1),
        Part::Second(b) => k.a_chain(&Chain::generator(b).scale(&sign)),
    })?;
    Reduction::new(f, g, h)
}

/// The equivalence `Cone(φ) ⇐ Cone(φ̂) ⇒ Cone(φ_E)` built from effective
/// homology versions of the endpoints of a chain map `φ: A → B`. Here
/// `φ̂ = lg_B ∘ φ ∘ lf_A` is the lift of `φ` to the big complexes and
/// `φ_E = rf_B ∘ φ̂ ∘ rg_A` its effective counterpart.
pub fn cone_equivalence(
    kind: ConeKind,
    phi: &GradedMorphism,
    eq_a: &HomotopyEquivalence,
    eq_b: &HomotopyEquivalence,
) -> Result<HomotopyEquivalence> {
    if phi.degree() != 0 {
        return Err(Error::NonzeroDegree(phi.degree()));
    }
    if !same_complex(eq_a.left(), phi.source()) || !same_complex(eq_b.left(), phi.target()) {
        return Err(Error::ComplexMismatch(
            "equivalences do not cover the morphism's source and target".into(),
        ));
    }
    if let Some(g) = phi.chain_map_violations().first() {
        return Err(Error::InvalidInput(format!("cone morphism is not a chain map (fails on {g})")));
    }
    let lifted = GradedMorphism::compose(eq_b.lg(), &GradedMorphism::compose(phi, eq_a.lf())?)?;
    let (lrdct, _, _) = cone_reduction(kind, &lifted, eq_a.lrdct(), eq_b.lrdct())?;
    let (rrdct, _, _) = cone_reduction(kind, &lifted, eq_a.rrdct(), eq_b.rrdct())?;
    HomotopyEquivalence::from_reductions(lrdct, rrdct)
}

/// Effective homology of `Cone2(φ)` from effective homology of the endpoints.
pub fn cone_efhm(
    phi: &GradedMorphism,
    eq_a: &HomotopyEquivalence,
    eq_b: &HomotopyEquivalence,
) -> Result<HomotopyEquivalence> {
    cone_equivalence(ConeKind::Desuspended, phi, eq_a, eq_b)
}

pub fn direct_sum_reduction(r1: &Reduction, r2: &Reduction) -> Result<Reduction> {
    let big = DirectSum::new(r1.big(), r2.big());
    let small = DirectSum::new(r1.small(), r2.small());
    let f = big.block(&small, r1.f(), r2.f())?;
    let g = small.block(&big, r1.g(), r2.g())?;
    let h = big.block(&big, r1.h(), r2.h())?;
    Reduction::new(f, g, h)
}

pub fn direct_sum_equivalence(e1: &HomotopyEquivalence, e2: &HomotopyEquivalence) -> Result<HomotopyEquivalence> {
    HomotopyEquivalence::from_reductions(
        direct_sum_reduction(e1.lrdct(), e2.lrdct())?,
        direct_sum_reduction(e1.rrdct(), e2.rrdct())?,
    )
}

/// `ΣB ⇒ ΣS` from `B ⇒ S`; the homotopy changes sign.
pub fn suspension_reduction(r: &Reduction) -> Result<Reduction> {
    let (sb, ss) = (suspension(r.big()), suspension(r.small()));
    Reduction::new(
        suspend_morphism(r.f(), &sb, &ss, 1)?,
        suspend_morphism(r.g(), &ss, &sb, 1)?,
        suspend_morphism(r.h(), &sb, &sb, -1)?,
    )
}

pub fn suspension_equivalence(e: &HomotopyEquivalence) -> Result<HomotopyEquivalence> {
    HomotopyEquivalence::from_reductions(suspension_reduction(e.lrdct())?, suspension_reduction(e.rrdct())?)
}

/// Enlarges the big complex of a reduction by the contractible `Cone(id_K)`.
pub fn pad_reduction(r: &Reduction, k: &Arc<ChainComplex>) -> Result<Reduction> {
    let contraction = identity_cone_contraction(ConeKind::Standard, k)?;
    let big = DirectSum::new(r.big(), contraction.big());
    let (pl, il) = (big.proj_left(), big.inj_left());
    let f = GradedMorphism::compose(r.f(), &pl)?;
    let g = GradedMorphism::compose(&il, r.g())?;
    let h1 = GradedMorphism::compose(&il, &GradedMorphism::compose(r.h(), &pl)?)?;
    let h2 = GradedMorphism::compose(
        &big.inj_right(),
        &GradedMorphism::compose(contraction.h(), &big.proj_right())?,
    )?;
    Reduction::new(f, g, h1.add(&h2)?)
}

/// An equivalence with the same left and right complexes as `e` whose big
/// complex carries an extra contractible summand `Cone(id_K)`.
pub fn pad_equivalence(e: &HomotopyEquivalence, k: &Arc<ChainComplex>) -> Result<HomotopyEquivalence> {
    HomotopyEquivalence::from_reductions(pad_reduction(e.lrdct(), k)?, pad_reduction(e.rrdct(), k)?)
}
