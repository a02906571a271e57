//! Standard spaces and the pushout instances built from them.

use std::collections::HashMap;
use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::simplicial::product::cartesian_product;
use crate::simplicial::pushout::{pushout_space, PushoutSpace};
use crate::simplicial::word::{Simplex, SimplexWord};
use crate::simplicial::{SimplexLevel, SimplicialMorphism, SimplicialSet};

fn build(levels: Vec<SimplexLevel>) -> SimplicialSet {
    SimplicialSet::new(levels).expect("builder produces a well-formed face table")
}

fn vertex_level(labels: Vec<String>) -> SimplexLevel {
    let faces = vec![Vec::new(); labels.len()];
    SimplexLevel { labels, faces }
}

/// One vertex.
pub fn point() -> SimplicialSet {
    build(vec![vertex_level(vec!["v".into()])])
}

/// The minimal model of `Sⁿ`: a base vertex and one `n`-simplex whose faces
/// all collapse to it. `S⁰` is two vertices.
pub fn sphere(n: usize) -> SimplicialSet {
    if n == 0 {
        return build(vec![vertex_level(vec!["v0".into(), "v1".into()])]);
    }
    let mut levels = vec![vertex_level(vec!["v".into()])];
    for _ in 1..n {
        levels.push(SimplexLevel::default());
    }
    levels.push(SimplexLevel {
        labels: vec!["top".into()],
        faces: vec![vec![SimplexWord::degenerate_vertex(0, n - 1); n + 1]],
    });
    build(levels)
}

/// A cycle of `k ≥ 1` vertices and `k` edges, `e_i` running from `v_i` to
/// `v_{i+1}`.
pub fn circle(k: usize) -> SimplicialSet {
    assert!(k >= 1, "a circle needs at least one vertex");
    let v = |i: usize| SimplexWord::nondegenerate(Simplex::new(0, i % k));
    build(vec![
        vertex_level((0..k).map(|i| format!("v{i}")).collect()),
        SimplexLevel {
            labels: (0..k).map(|i| format!("e{i}")).collect(),
            faces: (0..k).map(|i| vec![v(i + 1), v(i)]).collect(),
        },
    ])
}

/// The standard `n`-simplex; simplices are labelled by their vertex sets.
pub fn delta(n: usize) -> SimplicialSet {
    let subsets: Vec<Vec<Vec<usize>>> =
        (0..=n).map(|d| (0..=n).combinations(d + 1).collect()).collect();
    let index: Vec<HashMap<&Vec<usize>, usize>> =
        subsets.iter().map(|l| l.iter().enumerate().map(|(i, s)| (s, i)).collect()).collect();
    let levels = subsets
        .iter()
        .enumerate()
        .map(|(d, level)| SimplexLevel {
            labels: level.iter().map(|s| format!("<{}>", s.iter().join(","))).collect(),
            faces: level
                .iter()
                .map(|s| {
                    if d == 0 {
                        return Vec::new();
                    }
                    (0..=d)
                        .map(|i| {
                            let mut f = s.clone();
                            f.remove(i);
                            SimplexWord::nondegenerate(Simplex::new(d - 1, index[d - 1][&f]))
                        })
                        .collect()
                })
                .collect(),
        })
        .collect();
    build(levels)
}

/// `circle(k) → circle(1)`, wrapping every edge once around the target.
pub fn degree_map(k: usize) -> SimplicialMorphism {
    let source = circle(k).into_arc();
    let target = circle(1).into_arc();
    SimplicialMorphism::from_fn(&source, &target, |s| SimplexWord::nondegenerate(Simplex::new(s.dim, 0)))
        .expect("degree map commutes with faces")
}

/// Output of [`standard_space`].
#[derive(Clone, Debug)]
pub enum Standard {
    Space(SimplicialSet),
    Morphism(SimplicialMorphism),
}

/// Builds a standard fixture by name: `point`, `empty`, `sphere n`,
/// `circle k`, `delta n` or `degree_map k`.
pub fn standard_space(kind: &str, param: Option<usize>) -> Result<Standard> {
    let need = |what: &str| param.ok_or_else(|| Error::InvalidInput(format!("{kind} needs {what}")));
    let positive = |p: usize| {
        if p == 0 {
            Err(Error::InvalidInput(format!("{kind} needs a positive parameter")))
        } else {
            Ok(p)
        }
    };
    Ok(match kind {
        "point" => Standard::Space(point()),
        "empty" => Standard::Space(SimplicialSet::empty()),
        "sphere" => Standard::Space(sphere(need("a dimension")?)),
        "delta" => Standard::Space(delta(need("a dimension")?)),
        "circle" => Standard::Space(circle(positive(need("a vertex count")?)?)),
        "degree_map" => Standard::Morphism(degree_map(positive(need("a degree")?)?)),
        other => return Err(Error::UnknownSpace(other.to_string())),
    })
}

/// `Y ∨ Z` as the pushout of `Y ← pt → Z` at the given base vertices.
pub fn wedge(y: &Arc<SimplicialSet>, z: &Arc<SimplicialSet>, y0: usize, z0: usize) -> Result<PushoutSpace> {
    let pt = point().into_arc();
    let f = SimplicialMorphism::constant(&pt, y, y0)?;
    let g = SimplicialMorphism::constant(&pt, z, z0)?;
    pushout_space(&f, &g)
}

/// `X ∗ Y` as the pushout of `X ← X × Y → Y` along the projections.
pub fn join(x: &Arc<SimplicialSet>, y: &Arc<SimplicialSet>) -> Result<PushoutSpace> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::DegenerateJoin);
    }
    let product = cartesian_product(x, y)?;
    pushout_space(&product.pr1(), &product.pr2())
}

/// Unreduced suspension: the pushout of `pt ← X → pt`.
pub fn suspension_space(x: &Arc<SimplicialSet>) -> Result<PushoutSpace> {
    let pt = point().into_arc();
    let pt2 = point().into_arc();
    pushout_space(&SimplicialMorphism::constant(x, &pt, 0)?, &SimplicialMorphism::constant(x, &pt2, 0)?)
}

/// Mapping cone of `f: X → Y`: the pushout of `Y ← X → pt`.
pub fn mapping_cone_space(f: &SimplicialMorphism) -> Result<PushoutSpace> {
    let pt = point().into_arc();
    pushout_space(f, &SimplicialMorphism::constant(f.source(), &pt, 0)?)
}
