//! The two equivalences attached to an effective short exact sequence.

mod common;

use common::criteria;
use common::random::random_ses;
use pushout::chain_core::trivial_equivalence;
use pushout::homology::{homology_effective, homology_via_equivalence};
use pushout::pipeline::{connecting_morphism, ses1, ses2};
use rand::rngs::StdRng;
use rand::SeedableRng;

#[test]
fn ses1_and_ses2_on_random_sequences() {
    criteria::ses_correctness().unwrap();
}

#[test]
fn connecting_morphism_is_a_chain_map() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..10 {
        let s = random_ses(&mut rng, 3, 2).ses;
        let (_, chi) = connecting_morphism(&s).unwrap();
        assert!(chi.commutes_with_differentials());
    }
}

#[test]
fn trivial_equivalences_recover_each_term() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..5 {
        let s = random_ses(&mut rng, 3, 3).ses;
        let ea = trivial_equivalence(s.a());
        let eb = trivial_equivalence(s.b());
        let ec = trivial_equivalence(s.c());
        let a = ses1(&s, &eb, &ec).unwrap();
        let b = ses2(&s, &ea, &ec).unwrap();
        for n in 0..=3 {
            assert_eq!(homology_via_equivalence(&a, n), homology_effective(s.a(), n));
            assert_eq!(homology_via_equivalence(&b, n), homology_effective(s.b(), n));
        }
    }
}
