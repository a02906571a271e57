//! End-to-end homology of the pushout corpus against the direct oracle.

mod common;

use common::{corpus, criteria, efhm, oracle, window};
use pushout::homology::{homology_via_equivalence, AbelianGroup};
use pushout::simplicial::builders::{circle, sphere, suspension_space, wedge};

#[test]
fn pipeline_matches_oracle_on_corpus() {
    criteria::oracle_equivalence().unwrap();
}

#[test]
fn classical_values_hold() {
    criteria::classical_values().unwrap();
}

#[test]
fn oracle_agrees_with_library_snf() {
    criteria::oracle_agrees_with_library().unwrap();
}

#[test]
fn every_corpus_instance_has_a_consistent_equivalence() {
    for (name, p) in corpus() {
        let e = efhm(&p);
        let cp = p.space().normalized_chain_complex().unwrap();
        for n in window(p.space()) {
            assert_eq!(homology_via_equivalence(&e.equivalence, n), oracle::homology(&cp, n), "{name}, H_{n}");
        }
    }
}

#[test]
fn suspension_of_circle_three_is_a_two_sphere() {
    let p = suspension_space(&circle(3).into_arc()).unwrap();
    let e = efhm(&p);
    assert_eq!(homology_via_equivalence(&e.equivalence, 0), AbelianGroup::free(1));
    assert_eq!(homology_via_equivalence(&e.equivalence, 1), AbelianGroup::trivial());
    assert_eq!(homology_via_equivalence(&e.equivalence, 2), AbelianGroup::free(1));
}

#[test]
fn wedge_of_spheres_adds_reduced_homology() {
    let p = wedge(&sphere(2).into_arc(), &sphere(2).into_arc(), 0, 0).unwrap();
    let e = efhm(&p);
    assert_eq!(homology_via_equivalence(&e.equivalence, 0), AbelianGroup::free(1));
    assert_eq!(homology_via_equivalence(&e.equivalence, 2), AbelianGroup::free(2));
}

#[test]
fn euler_characteristic_is_multiplicative_under_products() {
    use pushout::simplicial::builders::{delta, point};
    use pushout::simplicial::cartesian_product;
    let spaces = [point(), sphere(0), sphere(2), circle(3), delta(2)].map(|x| x.into_arc());
    for x in &spaces {
        for y in &spaces {
            let p = cartesian_product(x, y).unwrap();
            let chi = |s: &pushout::simplicial::SimplicialSet| s.normalized_chain_complex().unwrap().euler_characteristic();
            assert_eq!(chi(p.space()), chi(x) * chi(y));
        }
    }
}
