//! Effective homology of a pushout from effective homology of its three
//! inputs, through the short exact sequence `0 → C(Y) ⊕ C(Z) → C(P) → rc → 0`.

use std::sync::Arc;

use crate::chain_core::{
    cone, cone2, cone_efhm, cone_equivalence, direct_sum, direct_sum_equivalence, same_complex, suspension,
    suspension_equivalence, trivial_equivalence, Chain, ChainComplex, Cone, ConeKind, Generator, GradedMorphism,
    HomotopyEquivalence, Part, Reduction,
};
use crate::error::{Error, Result};
use crate::simplicial::{pushout_space, PushoutSpace, SimplicialMorphism};

/// A short exact sequence `0 → C →i B →j A → 0` of chain maps together with
/// graded (not necessarily chain) sections `σ: A → B` and `ρ: B → C` such
/// that `jσ = id`, `ρi = id` and `iρ + σj = id`.
#[derive(Clone, Debug)]
pub struct EffectiveSes {
    a: Arc<ChainComplex>,
    b: Arc<ChainComplex>,
    c: Arc<ChainComplex>,
    i: GradedMorphism,
    j: GradedMorphism,
    sigma: GradedMorphism,
    rho: GradedMorphism,
}

impl EffectiveSes {
    pub fn new(i: GradedMorphism, j: GradedMorphism, sigma: GradedMorphism, rho: GradedMorphism) -> Result<Self> {
        let (c, b, a) = (i.source().clone(), i.target().clone(), j.target().clone());
        let shape_ok = same_complex(j.source(), &b)
            && same_complex(sigma.source(), &a)
            && same_complex(sigma.target(), &b)
            && same_complex(rho.source(), &b)
            && same_complex(rho.target(), &c);
        if !shape_ok {
            return Err(Error::InvalidInput("short exact sequence maps do not fit together".into()));
        }
        if [&i, &j, &sigma, &rho].iter().any(|m| m.degree() != 0) {
            return Err(Error::InvalidInput("short exact sequence maps must have degree 0".into()));
        }
        for (name, m) in [("i", &i), ("j", &j)] {
            if let Some(g) = m.chain_map_violations().first() {
                return Err(Error::InvalidInput(format!("{name} is not a chain map (fails on {g})")));
            }
        }
        let check = |name: &str, lhs: GradedMorphism, rhs: &GradedMorphism| -> Result<()> {
            match lhs.differences(rhs).first() {
                None => Ok(()),
                Some(g) => Err(Error::InvalidInput(format!("{name} fails on {g}"))),
            }
        };
        check("jσ = id", GradedMorphism::compose(&j, &sigma)?, &GradedMorphism::identity(&a))?;
        check("ρi = id", GradedMorphism::compose(&rho, &i)?, &GradedMorphism::identity(&c))?;
        check(
            "iρ + σj = id",
            GradedMorphism::compose(&i, &rho)?.add(&GradedMorphism::compose(&sigma, &j)?)?,
            &GradedMorphism::identity(&b),
        )?;
        Ok(Self { a, b, c, i, j, sigma, rho })
    }

    pub fn a(&self) -> &Arc<ChainComplex> {
        &self.a
    }

    pub fn b(&self) -> &Arc<ChainComplex> {
        &self.b
    }

    pub fn c(&self) -> &Arc<ChainComplex> {
        &self.c
    }

    pub fn i(&self) -> &GradedMorphism {
        &self.i
    }

    pub fn j(&self) -> &GradedMorphism {
        &self.j
    }

    pub fn sigma(&self) -> &GradedMorphism {
        &self.sigma
    }

    pub fn rho(&self) -> &GradedMorphism {
        &self.rho
    }

    /// `t = ρ d σ: A → C`, of degree -1. It vanishes exactly when `σ` is a
    /// chain map.
    pub fn defect(&self) -> GradedMorphism {
        GradedMorphism::from_fn(self.a.clone(), self.c.clone(), -1, false, |g| {
            self.rho.apply_unchecked(&self.b.d(&self.sigma.image(g)))
        })
        .expect("defect has the right shape")
    }
}

/// `0 → C(Y) ⊕ C(Z) → C(P) → rc → 0` for a pushout space. Returns the
/// sequence with `A = rc`, `B = C(P)`, `C = C(Y) ⊕ C(Z)`.
pub fn ses_from_pushout(p: &PushoutSpace) -> Result<EffectiveSes> {
    let cp = p.space().normalized_chain_complex()?;
    let cy = p.f().target().normalized_chain_complex()?;
    let cz = p.g().target().normalized_chain_complex()?;
    let ds = direct_sum(&cy, &cz).complex().clone();
    let rc = p.quotient().complex.clone();
    let glued = |n: i32| ds.rank(n);
    let i = GradedMorphism::from_fn(ds.clone(), cp.clone(), 0, true, Chain::generator)?;
    let rho = GradedMorphism::from_fn(cp.clone(), ds.clone(), 0, false, |g| {
        if g.index < glued(g.degree) {
            Chain::generator(g)
        } else {
            Chain::zero(g.degree)
        }
    })?;
    let sigma = GradedMorphism::from_fn(rc.clone(), cp.clone(), 0, false, |g| {
        Chain::generator(Generator::new(g.degree, g.index + glued(g.degree)))
    })?;
    let j = GradedMorphism::from_fn(cp.clone(), rc.clone(), 0, true, |g| match g.index.checked_sub(glued(g.degree)) {
        Some(k) => Chain::generator(Generator::new(g.degree, k)),
        None => Chain::zero(g.degree),
    })?;
    EffectiveSes::new(i, j, sigma, rho)
}

/// The connecting morphism `χ: A → ΣC`, `χ(a) = s(ρ(d σ a))`, a degree 0
/// chain map into the suspension. Returns `ΣC` alongside.
pub fn connecting_morphism(ses: &EffectiveSes) -> Result<(Arc<ChainComplex>, GradedMorphism)> {
    let sc = suspension(ses.c());
    let t = ses.defect();
    let chi = GradedMorphism::from_fn(ses.a().clone(), sc.clone(), 0, true, |g| {
        let c = t.image(g);
        Chain::from_terms(g.degree, c.terms().iter().cloned())
    })?;
    if let Some(g) = chi.chain_map_violations().first() {
        return Err(Error::Assembly(format!("connecting morphism is not a chain map (fails on {g})")));
    }
    Ok((sc, chi))
}

/// Mutually inverse chain isomorphisms `fw: Cone2(χ) → B` and
/// `bw: B → Cone2(χ)`, with `fw(a, s c) = σ a − i c` and
/// `bw(b) = (j b, −s ρ b)`.
pub fn cone2_comparison(ses: &EffectiveSes, cone: &Cone) -> Result<(GradedMorphism, GradedMorphism)> {
    if cone.kind() != ConeKind::Desuspended || !same_complex(cone.source(), ses.a()) {
        return Err(Error::Assembly("comparison needs the desuspended cone of the connecting morphism".into()));
    }
    let unshift = |c: &Chain| Chain::from_terms(c.degree() - 1, c.terms().iter().cloned());
    let shift = |c: &Chain| Chain::from_terms(c.degree() + 1, c.terms().iter().cloned());
    let fw = GradedMorphism::from_fn(cone.complex().clone(), ses.b().clone(), 0, true, |g| match cone.split(g) {
        Part::First(a) => ses.sigma().image(a),
        Part::Second(sc) => ses.i().apply_unchecked(&unshift(&Chain::generator(sc))).neg(),
    })?;
    let bw = GradedMorphism::from_fn(ses.b().clone(), cone.complex().clone(), 0, true, |g| {
        cone.pair(&ses.j().image(g), &shift(&ses.rho().image(g)).neg())
    })?;
    for (name, m) in [("forward", &fw), ("backward", &bw)] {
        if let Some(g) = m.chain_map_violations().first() {
            return Err(Error::Assembly(format!("{name} comparison is not a chain map (fails on {g})")));
        }
    }
    let round_trips = [
        GradedMorphism::compose(&fw, &bw)?.differences(&GradedMorphism::identity(ses.b())),
        GradedMorphism::compose(&bw, &fw)?.differences(&GradedMorphism::identity(cone.complex())),
    ];
    if let Some(g) = round_trips.iter().flatten().next() {
        return Err(Error::Assembly(format!("comparison maps are not inverse (fails on {g})")));
    }
    Ok((fw, bw))
}

/// The reduction `Cone(i) ⇒ A` of the standard cone of `i: C → B`:
/// `f(c, b) = j b`, `g(a) = (−t a, σ a)`, `h(c, b) = (ρ b, 0)`.
pub fn aibjc_rdct(ses: &EffectiveSes) -> Result<Reduction> {
    let k = cone(ses.i())?;
    let t = ses.defect();
    let f = GradedMorphism::from_fn(k.complex().clone(), ses.a().clone(), 0, true, |g| match k.split(g) {
        Part::First(_) => Chain::zero(g.degree),
        Part::Second(b) => ses.j().image(b),
    })?;
    let g = GradedMorphism::from_fn(ses.a().clone(), k.complex().clone(), 0, true, |a| {
        k.pair(&t.image(a).neg(), &ses.sigma().image(a))
    })?;
    let h = GradedMorphism::from_fn(k.complex().clone(), k.complex().clone(), 1, false, |g| match k.split(g) {
        Part::First(_) => Chain::zero(g.degree + 1),
        Part::Second(b) => k.pair(&ses.rho().image(b), &Chain::zero(g.degree + 1)),
    })?;
    Reduction::new(f, g, h)
}

/// Effective homology of `A` from effective homology of `B` and `C`.
pub fn ses1(ses: &EffectiveSes, eq_b: &HomotopyEquivalence, eq_c: &HomotopyEquivalence) -> Result<HomotopyEquivalence> {
    let cone_eq = cone_equivalence(ConeKind::Standard, ses.i(), eq_c, eq_b)?;
    let lrdct = Reduction::compose(&aibjc_rdct(ses)?, cone_eq.lrdct())?;
    HomotopyEquivalence::from_reductions(lrdct, cone_eq.rrdct().clone())
}

/// Intermediate objects of [`ses2`].
#[derive(Clone, Debug)]
pub struct Ses2Parts {
    pub suspended_c: Arc<ChainComplex>,
    pub chi: GradedMorphism,
    pub cone: Cone,
    pub forward: GradedMorphism,
    pub backward: GradedMorphism,
    pub equivalence: HomotopyEquivalence,
}

/// [`ses2`], keeping every intermediate object.
pub fn ses2_parts(ses: &EffectiveSes, eq_a: &HomotopyEquivalence, eq_c: &HomotopyEquivalence) -> Result<Ses2Parts> {
    let (sc, chi) = connecting_morphism(ses)?;
    let eq_sc = suspension_equivalence(eq_c)?;
    let cone = cone2(&chi)?;
    let (fw, bw) = cone2_comparison(ses, &cone)?;
    let cone_eq = cone_efhm(&chi, eq_a, &eq_sc)?;
    let l = cone_eq.lrdct();
    let lrdct = Reduction::new(
        GradedMorphism::compose(&fw, l.f())?,
        GradedMorphism::compose(l.g(), &bw)?,
        l.h().clone(),
    )?;
    let equivalence = HomotopyEquivalence::from_reductions(lrdct, cone_eq.rrdct().clone())?;
    Ok(Ses2Parts { suspended_c: sc, chi, cone, forward: fw, backward: bw, equivalence })
}

/// Effective homology of `B` from effective homology of `A` and `C`, through
/// `B ≅ Cone2(χ)` for the connecting morphism `χ`.
pub fn ses2(ses: &EffectiveSes, eq_a: &HomotopyEquivalence, eq_c: &HomotopyEquivalence) -> Result<HomotopyEquivalence> {
    Ok(ses2_parts(ses, eq_a, eq_c)?.equivalence)
}

/// The effective homology version of a pushout with its intermediates.
#[derive(Clone, Debug)]
pub struct PushoutEfhm {
    pub space: PushoutSpace,
    /// `C(P) ⇐ … ⇒ effective complex`.
    pub equivalence: HomotopyEquivalence,
    pub rc: Arc<ChainComplex>,
    pub ds: Arc<ChainComplex>,
    pub sds: Arc<ChainComplex>,
    pub chi: GradedMorphism,
    pub cone2_of_chi: Cone,
    pub ses: EffectiveSes,
    pub comparison: (GradedMorphism, GradedMorphism),
}

/// Builds `P` from `f: X → Y` and `g: X → Z` and its effective homology from
/// equivalences over `C(X)`, `C(Y)` and `C(Z)`.
pub fn pushout_efhm(
    f: &SimplicialMorphism,
    g: &SimplicialMorphism,
    eq_x: &HomotopyEquivalence,
    eq_y: &HomotopyEquivalence,
    eq_z: &HomotopyEquivalence,
) -> Result<PushoutEfhm> {
    efhm_of_pushout(pushout_space(f, g)?, eq_x, eq_y, eq_z)
}

/// [`pushout_efhm`] for an already assembled pushout space.
pub fn efhm_of_pushout(
    space: PushoutSpace,
    eq_x: &HomotopyEquivalence,
    eq_y: &HomotopyEquivalence,
    eq_z: &HomotopyEquivalence,
) -> Result<PushoutEfhm> {
    let expect = |name: &str, eq: &HomotopyEquivalence, c: &ChainComplex| {
        if eq.left().as_ref() == c {
            Ok(())
        } else {
            Err(Error::ComplexMismatch(format!("equivalence for {name} is not over its chain complex")))
        }
    };
    expect("X", eq_x, &*space.f().source().normalized_chain_complex()?)?;
    expect("Y", eq_y, &*space.f().target().normalized_chain_complex()?)?;
    expect("Z", eq_z, &*space.g().target().normalized_chain_complex()?)?;
    let ses = ses_from_pushout(&space)?;
    let eq_rc = trivial_equivalence(ses.a());
    let eq_ds = direct_sum_equivalence(eq_y, eq_z)?;
    let parts = ses2_parts(&ses, &eq_rc, &eq_ds)?;
    Ok(PushoutEfhm {
        rc: ses.a().clone(),
        ds: ses.c().clone(),
        sds: parts.suspended_c,
        chi: parts.chi,
        cone2_of_chi: parts.cone,
        comparison: (parts.forward, parts.backward),
        equivalence: parts.equivalence,
        ses,
        space,
    })
}

/// [`efhm_of_pushout`] with the trivial equivalences of finite complexes.
pub fn efhm_of_finite_pushout(space: PushoutSpace) -> Result<PushoutEfhm> {
    let complex = |m: &SimplicialMorphism, source: bool| {
        if source { m.source() } else { m.target() }.normalized_chain_complex()
    };
    let eq_x = trivial_equivalence(&complex(space.f(), true)?);
    let eq_y = trivial_equivalence(&complex(space.f(), false)?);
    let eq_z = trivial_equivalence(&complex(space.g(), false)?);
    efhm_of_pushout(space, &eq_x, &eq_y, &eq_z)
}
