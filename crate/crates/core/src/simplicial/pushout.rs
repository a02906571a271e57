use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::chain_core::{Chain, ChainComplex, LevelSpec};
use crate::error::{Error, Result};
use crate::simplicial::builders::delta;
use crate::simplicial::product::{cartesian_product, Product};
use crate::simplicial::word::{Simplex, SimplexWord};
use crate::simplicial::{SimplexLevel, SimplicialMorphism, SimplicialSet};

/// `X × Δ[1]` with its two end inclusions.
#[derive(Clone, Debug)]
pub struct Cylinder {
    pub product: Product,
    pub bottom: SimplicialMorphism,
    pub top: SimplicialMorphism,
}

impl Cylinder {
    pub fn space(&self) -> &Arc<SimplicialSet> {
        self.product.space()
    }
}

pub fn cylinder(x: &Arc<SimplicialSet>) -> Result<Cylinder> {
    let interval = delta(1).into_arc();
    let product = cartesian_product(x, &interval)?;
    let end = |vertex: usize| {
        SimplicialMorphism::from_fn(x, product.space(), |s| {
            product
                .word_of(&SimplexWord::nondegenerate(s), &SimplexWord::degenerate_vertex(vertex, s.dim))
                .expect("end simplex lies in the product")
        })
    };
    let bottom = end(0)?;
    let top = end(1)?;
    Ok(Cylinder { product, bottom, top })
}

/// `C(X × I) / (C(X × 0) + C(X × 1))` together with the cylinder simplices
/// spanning it.
#[derive(Clone, Debug)]
pub struct CoverQuotient {
    pub complex: Arc<ChainComplex>,
    /// `interior[n][k]` is the cylinder simplex behind generator `k` of degree `n`.
    pub interior: Vec<Vec<Simplex>>,
    pub position: HashMap<Simplex, usize>,
}

pub fn remove_covers(
    cyl: &Arc<SimplicialSet>,
    bottom: &SimplicialMorphism,
    top: &SimplicialMorphism,
) -> Result<CoverQuotient> {
    for (name, m) in [("bottom", bottom), ("top", top)] {
        if !m.is_injective_on_nondegenerate() {
            return Err(Error::InvalidCover(format!("{name} cover is not injective on nondegenerate simplices")));
        }
        if !(Arc::ptr_eq(m.target(), cyl) || m.target().as_ref() == cyl.as_ref()) {
            return Err(Error::InvalidCover(format!("{name} cover does not land in the cylinder")));
        }
    }
    let covered: std::collections::HashSet<Simplex> = [bottom, top]
        .iter()
        .flat_map(|m| m.source().all_simplices().map(|s| m.image(s).base).collect::<Vec<_>>())
        .collect();
    let dims = cyl.top_dim().map_or(0, |t| t + 1);
    let interior: Vec<Vec<Simplex>> =
        (0..dims).map(|d| cyl.simplices(d).filter(|s| !covered.contains(s)).collect()).collect();
    let position: HashMap<Simplex, usize> =
        interior.iter().flat_map(|l| l.iter().enumerate().map(|(k, s)| (*s, k))).collect();
    let levels = interior
        .iter()
        .enumerate()
        .map(|(n, level)| LevelSpec {
            labels: level.iter().map(|s| cyl.label(*s).to_string()).collect(),
            diff: level
                .iter()
                .map(|&s| {
                    let terms = (0..=n).filter(|_| n > 0).filter_map(|i| {
                        let w = cyl.face(i, s).expect("face in range");
                        let k = position.get(&w.base).filter(|_| !w.is_degenerate())?;
                        Some((*k, BigInt::from(if i % 2 == 0 { 1 } else { -1 })))
                    });
                    Chain::from_terms(n as i32 - 1, terms)
                })
                .collect(),
        })
        .collect();
    let complex = ChainComplex::new(0, levels)?.into_arc();
    Ok(CoverQuotient { complex, interior, position })
}

/// `P = (Y ⊔ X × I ⊔ Z) / ((x, 0) ∼ f(x), (x, 1) ∼ g(x))`.
///
/// In every dimension the nondegenerate simplices of `P` are those of `Y`,
/// then those of `Z`, then the cylinder simplices off both covers, each group
/// in its original order. Labels carry the prefixes `y:`, `z:` and `c:`.
#[derive(Clone, Debug)]
pub struct PushoutSpace {
    f: SimplicialMorphism,
    g: SimplicialMorphism,
    space: Arc<SimplicialSet>,
    cylinder: Cylinder,
    quotient: CoverQuotient,
    incl_y: SimplicialMorphism,
    incl_z: SimplicialMorphism,
    incl_cyl: SimplicialMorphism,
}

impl PushoutSpace {
    pub fn f(&self) -> &SimplicialMorphism {
        &self.f
    }

    pub fn g(&self) -> &SimplicialMorphism {
        &self.g
    }

    pub fn space(&self) -> &Arc<SimplicialSet> {
        &self.space
    }

    pub fn cylinder(&self) -> &Cylinder {
        &self.cylinder
    }

    pub fn quotient(&self) -> &CoverQuotient {
        &self.quotient
    }

    pub fn incl_y(&self) -> &SimplicialMorphism {
        &self.incl_y
    }

    pub fn incl_z(&self) -> &SimplicialMorphism {
        &self.incl_z
    }

    pub fn incl_cyl(&self) -> &SimplicialMorphism {
        &self.incl_cyl
    }

    /// Number of simplices of `P` in dimension `n` coming from `Y` or `Z`.
    pub fn glued_count(&self, n: usize) -> usize {
        self.f.target().count(n) + self.g.target().count(n)
    }
}

pub fn pushout_space(f: &SimplicialMorphism, g: &SimplicialMorphism) -> Result<PushoutSpace> {
    let x = f.source();
    if !(Arc::ptr_eq(x, g.source()) || x == g.source()) {
        return Err(Error::InvalidInput("the two morphisms have different sources".into()));
    }
    for (name, m) in [("f", f), ("g", g)] {
        if let Some((s, i)) = m.face_violations().first() {
            return Err(Error::InvalidInput(format!(
                "{name} does not commute with face {i} of {}",
                m.source().label(*s)
            )));
        }
    }
    let (y, z) = (f.target(), g.target());
    let cyl = cylinder(x)?;
    let quotient = remove_covers(cyl.space(), &cyl.bottom, &cyl.top)?;

    let mut ends: HashMap<Simplex, (bool, Simplex)> = HashMap::new();
    for s in x.all_simplices() {
        ends.insert(cyl.bottom.image(s).base, (false, s));
        ends.insert(cyl.top.image(s).base, (true, s));
    }
    let top = [y.top_dim(), z.top_dim(), cyl.space().top_dim()].into_iter().flatten().max();
    let dims = top.map_or(0, |t| t + 1);
    // Z and interior simplices sit after the Y (and Z) simplices of their dimension
    let into_z = |w: &SimplexWord| SimplexWord {
        degeneracies: w.degeneracies.clone(),
        base: Simplex::new(w.base.dim, w.base.index + y.count(w.base.dim)),
    };
    let glue = |w: &SimplexWord| -> SimplexWord {
        match ends.get(&w.base) {
            Some(&(false, s)) => f.image(s).degenerate(&w.degeneracies),
            Some(&(true, s)) => into_z(&g.image(s).degenerate(&w.degeneracies)),
            None => {
                let d = w.base.dim;
                let index = y.count(d) + z.count(d) + quotient.position[&w.base];
                SimplexWord { degeneracies: w.degeneracies.clone(), base: Simplex::new(d, index) }
            }
        }
    };

    let mut levels = Vec::with_capacity(dims);
    for n in 0..dims {
        let mut level = SimplexLevel::default();
        let faces_of = |space: &SimplicialSet, s: Simplex, map: &dyn Fn(&SimplexWord) -> SimplexWord| {
            (0..=n).filter(|_| n > 0).map(|i| map(space.face(i, s).expect("face in range"))).collect::<Vec<_>>()
        };
        for s in y.simplices(n) {
            level.labels.push(format!("y:{}", y.label(s)));
            level.faces.push(faces_of(y, s, &|w| w.clone()));
        }
        for s in z.simplices(n) {
            level.labels.push(format!("z:{}", z.label(s)));
            level.faces.push(faces_of(z, s, &into_z));
        }
        for &s in quotient.interior.get(n).into_iter().flatten() {
            level.labels.push(format!("c:{}", cyl.space().label(s)));
            level.faces.push(faces_of(cyl.space(), s, &glue));
        }
        levels.push(level);
    }
    let space = SimplicialSet::new(levels)?.into_arc();
    let incl_y = SimplicialMorphism::from_fn(y, &space, SimplexWord::nondegenerate)?;
    let incl_z = SimplicialMorphism::from_fn(z, &space, |s| {
        SimplexWord::nondegenerate(Simplex::new(s.dim, s.index + y.count(s.dim)))
    })?;
    let incl_cyl = SimplicialMorphism::from_fn(cyl.space(), &space, |s| glue(&SimplexWord::nondegenerate(s)))?;
    Ok(PushoutSpace { f: f.clone(), g: g.clone(), space, cylinder: cyl, quotient, incl_y, incl_z, incl_cyl })
}
