use std::collections::HashMap;
use std::sync::Arc;

use itertools::Itertools;

use crate::error::Result;
use crate::simplicial::word::{factor_common, Simplex, SimplexWord};
use crate::simplicial::{SimplexLevel, SimplicialMorphism, SimplicialSet};

/// `X × Y` with its nondegenerate simplices recorded as pairs of words.
#[derive(Clone, Debug)]
pub struct Product {
    space: Arc<SimplicialSet>,
    left: Arc<SimplicialSet>,
    right: Arc<SimplicialSet>,
    pairs: Vec<Vec<(SimplexWord, SimplexWord)>>,
    lookup: HashMap<(SimplexWord, SimplexWord), Simplex>,
}

fn word_from_set(set: &[usize], base: Simplex) -> SimplexWord {
    SimplexWord { degeneracies: set.iter().rev().copied().collect(), base }
}

impl Product {
    /// Nondegenerate `n`-simplices are pairs `(η_I x, η_J y)` of
    /// `n`-dimensional words with `I ∩ J = ∅`.
    pub fn new(left: &Arc<SimplicialSet>, right: &Arc<SimplicialSet>) -> Result<Self> {
        let mut pairs: Vec<Vec<(SimplexWord, SimplexWord)>> = Vec::new();
        let mut lookup = HashMap::new();
        if let (Some(tx), Some(ty)) = (left.top_dim(), right.top_dim()) {
            for n in 0..=tx + ty {
                let mut level = Vec::new();
                for p in (0..=tx.min(n)).rev() {
                    for q in (n - p)..=ty.min(n) {
                        let slots: Vec<usize> = (0..n).collect();
                        for i_set in slots.iter().copied().combinations(n - p) {
                            let rest: Vec<usize> = slots.iter().copied().filter(|k| !i_set.contains(k)).collect();
                            for j_set in rest.into_iter().combinations(n - q) {
                                for x in left.simplices(p) {
                                    for y in right.simplices(q) {
                                        level.push((word_from_set(&i_set, x), word_from_set(&j_set, y)));
                                    }
                                }
                            }
                        }
                    }
                }
                for (k, pair) in level.iter().enumerate() {
                    lookup.insert(pair.clone(), Simplex::new(n, k));
                }
                pairs.push(level);
            }
        }
        let levels = pairs
            .iter()
            .enumerate()
            .map(|(n, level)| {
                let labels = level
                    .iter()
                    .map(|(u, v)| format!("({}, {})", left.word_label(u), right.word_label(v)))
                    .collect();
                let faces = level
                    .iter()
                    .map(|(u, v)| {
                        if n == 0 {
                            return Vec::new();
                        }
                        (0..=n)
                            .map(|i| {
                                let fu = left.canonical_face(i, u).expect("face in range");
                                let fv = right.canonical_face(i, v).expect("face in range");
                                let (k, u2, v2) = factor_common(&fu, &fv);
                                SimplexWord { degeneracies: k, base: lookup[&(u2, v2)] }
                            })
                            .collect()
                    })
                    .collect();
                SimplexLevel { labels, faces }
            })
            .collect();
        let space = SimplicialSet::new(levels)?.into_arc();
        Ok(Self { space, left: left.clone(), right: right.clone(), pairs, lookup })
    }

    pub fn space(&self) -> &Arc<SimplicialSet> {
        &self.space
    }

    pub fn left(&self) -> &Arc<SimplicialSet> {
        &self.left
    }

    pub fn right(&self) -> &Arc<SimplicialSet> {
        &self.right
    }

    pub fn pair(&self, s: Simplex) -> &(SimplexWord, SimplexWord) {
        &self.pairs[s.dim][s.index]
    }

    /// The product word of a pair of words of equal dimension.
    pub fn word_of(&self, u: &SimplexWord, v: &SimplexWord) -> Option<SimplexWord> {
        if u.dim() != v.dim() {
            return None;
        }
        let (k, u2, v2) = factor_common(u, v);
        self.lookup.get(&(u2, v2)).map(|&base| SimplexWord { degeneracies: k, base })
    }

    pub fn pr1(&self) -> SimplicialMorphism {
        SimplicialMorphism::from_fn(&self.space, &self.left, |s| self.pair(s).0.clone()).expect("first projection")
    }

    pub fn pr2(&self) -> SimplicialMorphism {
        SimplicialMorphism::from_fn(&self.space, &self.right, |s| self.pair(s).1.clone()).expect("second projection")
    }
}

pub fn cartesian_product(x: &Arc<SimplicialSet>, y: &Arc<SimplicialSet>) -> Result<Product> {
    Product::new(x, y)
}
