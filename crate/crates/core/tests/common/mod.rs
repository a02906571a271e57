#![allow(dead_code)]

pub mod criteria;
pub mod oracle;
pub mod random;

use std::sync::Arc;

use pushout::chain_core::{Reduction, VerifyConfig};
use pushout::pipeline::{aibjc_rdct, efhm_of_finite_pushout, ses1, PushoutEfhm};
use pushout::simplicial::builders::{
    circle, degree_map, delta, join, mapping_cone_space, point, sphere, suspension_space, wedge,
};
use pushout::simplicial::{pushout_space, PushoutSpace, SimplexWord, SimplicialMorphism, SimplicialSet};

/// Every pushout instance the end-to-end suites run on.
pub fn corpus() -> Vec<(String, PushoutSpace)> {
    let mut out = Vec::new();
    let arc = |x: SimplicialSet| x.into_arc();

    let empty = arc(SimplicialSet::empty());
    let (y, z) = (arc(circle(2)), arc(sphere(2)));
    let f = SimplicialMorphism::from_fn(&empty, &y, SimplexWord::nondegenerate).unwrap();
    let g = SimplicialMorphism::from_fn(&empty, &z, SimplexWord::nondegenerate).unwrap();
    out.push(("empty source, circle 2 and sphere 2".into(), pushout_space(&f, &g).unwrap()));

    for (name, x) in [("circle 3", arc(circle(3))), ("delta 2", arc(delta(2))), ("sphere 2", arc(sphere(2)))] {
        let id = SimplicialMorphism::identity(&x);
        out.push((format!("identity gluing of {name}"), pushout_space(&id, &id).unwrap()));
    }
    for (name, x) in [
        ("S0", sphere(0)),
        ("S1", sphere(1)),
        ("S2", sphere(2)),
        ("circle 3", circle(3)),
    ] {
        out.push((format!("suspension of {name}"), suspension_space(&arc(x)).unwrap()));
    }
    let s1 = arc(circle(1));
    out.push(("wedge S1 S1".into(), wedge(&s1, &s1, 0, 0).unwrap()));
    out.push(("wedge S1 S2".into(), wedge(&s1, &arc(sphere(2)), 0, 0).unwrap()));
    out.push(("wedge circle 3 and point".into(), wedge(&arc(circle(3)), &arc(point()), 1, 0).unwrap()));
    let s0 = arc(sphere(0));
    out.push(("join S0 S0".into(), join(&s0, &s0).unwrap()));
    out.push(("join S1 S0".into(), join(&s1, &s0).unwrap()));
    out.push(("join S1 S1".into(), join(&s1, &s1).unwrap()));
    for k in 2..=5 {
        out.push((format!("mapping cone of degree {k}"), mapping_cone_space(&degree_map(k)).unwrap()));
    }
    out
}

/// Degrees worth comparing for a space: one below and two above its range.
pub fn window(x: &SimplicialSet) -> std::ops::RangeInclusive<i32> {
    -1..=x.top_dim().map_or(0, |t| t as i32) + 2
}

pub fn exhaustive() -> VerifyConfig {
    VerifyConfig { exhaustive_limit: usize::MAX, ..VerifyConfig::default() }
}

pub fn arc_of(x: SimplicialSet) -> Arc<SimplicialSet> {
    x.into_arc()
}

/// The pipeline output for an instance.
pub fn efhm(p: &PushoutSpace) -> PushoutEfhm {
    efhm_of_finite_pushout(p.clone()).unwrap()
}

/// Every reduction produced while running the pipeline on an instance,
/// labelled.
pub fn reductions_of(e: &PushoutEfhm) -> Vec<(&'static str, Reduction)> {
    let b = pushout::chain_core::trivial_equivalence(e.ses.b());
    let c = pushout::chain_core::trivial_equivalence(e.ses.c());
    let eq_a = ses1(&e.ses, &b, &c).unwrap();
    vec![
        ("pushout left", e.equivalence.lrdct().clone()),
        ("pushout right", e.equivalence.rrdct().clone()),
        ("cone(i) onto rc", aibjc_rdct(&e.ses).unwrap()),
        ("ses1 left", eq_a.lrdct().clone()),
        ("ses1 right", eq_a.rrdct().clone()),
    ]
}
