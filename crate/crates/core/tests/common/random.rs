//! Seeded random complexes, split short exact sequences and mutations.

use std::sync::Arc;

use num_bigint::BigInt;
use pushout::chain_core::{Chain, ChainComplex, Generator, GradedMorphism, LevelSpec, Reduction};
use pushout::pipeline::EffectiveSes;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub type IMat = Vec<Vec<i64>>;

pub fn zeros(r: usize, c: usize) -> IMat {
    vec![vec![0; c]; r]
}

pub fn identity(n: usize) -> IMat {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn mul(a: &IMat, b: &IMat, inner: usize, cols: usize) -> IMat {
    let rows = a.len();
    let mut out = zeros(rows, cols);
    for i in 0..rows {
        for k in 0..inner {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..cols {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

/// A random unimodular matrix and its inverse.
pub fn unimodular(rng: &mut StdRng, n: usize) -> (IMat, IMat) {
    let (mut p, mut q) = (identity(n), identity(n));
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            p[0][0] = -1;
            q[0][0] = -1;
        }
        return (p, q);
    }
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let c: i64 = *[-2, -1, 1, 2].choose(rng).unwrap();
        // p ← E p with E = I + c e_ij;  q ← q E⁻¹
        let source = p[j].clone();
        for (x, y) in p[i].iter_mut().zip(source) {
            *x += c * y;
        }
        for row in q.iter_mut() {
            row[j] -= c * row[i];
        }
    }
    (p, q)
}

/// Complex in degrees `0..=top` from differential matrices `d[n]: C_n → C_{n-1}`.
pub fn complex(name: &str, ranks: &[usize], d: &[IMat]) -> Arc<ChainComplex> {
    let levels = ranks
        .iter()
        .enumerate()
        .map(|(n, &r)| LevelSpec {
            labels: (0..r).map(|k| format!("{name}{n}_{k}")).collect(),
            diff: (0..r)
                .map(|k| {
                    let terms = if n == 0 {
                        Vec::new()
                    } else {
                        (0..ranks[n - 1]).filter(|&i| d[n][i][k] != 0).map(|i| (i, BigInt::from(d[n][i][k]))).collect()
                    };
                    Chain::from_terms(n as i32 - 1, terms)
                })
                .collect(),
        })
        .collect();
    ChainComplex::new(0, levels).unwrap().into_arc()
}

/// Random ranks (at most `max_rank` per degree) and differentials with
/// `d² = 0`: a sum of elementary pieces `x ↦ k y` and free generators seen
/// through a random unimodular basis change in every degree.
pub fn random_differentials(rng: &mut StdRng, top: usize, max_rank: usize) -> (Vec<usize>, Vec<IMat>) {
    let ranks: Vec<usize> = (0..=top).map(|_| rng.gen_range(0..=max_rank)).collect();
    let mut d: Vec<IMat> = (0..=top).map(|n| zeros(if n == 0 { 0 } else { ranks[n - 1] }, ranks[n])).collect();
    let mut is_target = vec![vec![false; max_rank]; top + 1];
    for n in (1..=top).rev() {
        let sources: Vec<usize> = (0..ranks[n]).filter(|&k| !is_target[n][k]).collect();
        let pairs = rng.gen_range(0..=sources.len().min(ranks[n - 1]));
        for (t, &s) in sources.iter().take(pairs).enumerate() {
            d[n][t][s] = *[1, 1, 2, 3, 4, 6].choose(rng).unwrap();
            is_target[n - 1][t] = true;
        }
    }
    let bases: Vec<(IMat, IMat)> = ranks.iter().map(|&r| unimodular(rng, r)).collect();
    let d = (0..=top)
        .map(|n| {
            if n == 0 {
                return d[0].clone();
            }
            let left = mul(&bases[n - 1].0, &d[n], ranks[n - 1], ranks[n]);
            mul(&left, &bases[n].1, ranks[n], ranks[n])
        })
        .collect();
    (ranks, d)
}

pub fn random_complex(rng: &mut StdRng, name: &str, top: usize, max_rank: usize) -> Arc<ChainComplex> {
    let (ranks, d) = random_differentials(rng, top, max_rank);
    complex(name, &ranks, &d)
}

/// Degree 0 morphism from per-degree matrices (`m[n]` is `target_n × source_n`).
pub fn morphism(source: &Arc<ChainComplex>, target: &Arc<ChainComplex>, m: &[IMat], chain_map: bool) -> GradedMorphism {
    GradedMorphism::from_fn(source.clone(), target.clone(), 0, chain_map, |g| {
        let n = g.degree as usize;
        Chain::from_terms(
            g.degree,
            (0..target.rank(g.degree))
                .filter(|&i| m[n][i][g.index] != 0)
                .map(|i| (i, BigInt::from(m[n][i][g.index]))),
        )
    })
    .unwrap()
}

/// A split short exact sequence `0 → C → B → A → 0` where `B = A ⊕ C` has
/// the twisted differential `(a, c) ↦ (d a, τ a + d c)` with
/// `τ = d θ − θ d`, rewritten in a random basis of `B`.
pub struct RandomSes {
    pub ses: EffectiveSes,
}

pub fn random_ses(rng: &mut StdRng, top: usize, max_rank: usize) -> RandomSes {
    let (ra, da) = random_differentials(rng, top, max_rank);
    let (rc, dc) = random_differentials(rng, top, max_rank);
    let theta: Vec<IMat> = (0..=top)
        .map(|n| (0..rc[n]).map(|_| (0..ra[n]).map(|_| rng.gen_range(-1..=1)).collect()).collect())
        .collect();
    let rb: Vec<usize> = (0..=top).map(|n| ra[n] + rc[n]).collect();
    // block differential of B in (a, c) coordinates
    let mut db: Vec<IMat> = Vec::new();
    for n in 0..=top {
        if n == 0 {
            db.push(zeros(0, rb[0]));
            continue;
        }
        let mut m = zeros(rb[n - 1], rb[n]);
        let tau_left = mul(&dc[n], &theta[n], rc[n], ra[n]);
        let tau_right = mul(&theta[n - 1], &da[n], ra[n - 1], ra[n]);
        for i in 0..ra[n - 1] {
            for j in 0..ra[n] {
                m[i][j] = da[n][i][j];
            }
        }
        for i in 0..rc[n - 1] {
            for j in 0..ra[n] {
                m[ra[n - 1] + i][j] = tau_left[i][j] - tau_right[i][j];
            }
            for j in 0..rc[n] {
                m[ra[n - 1] + i][ra[n] + j] = dc[n][i][j];
            }
        }
        db.push(m);
    }
    let q: Vec<(IMat, IMat)> = rb.iter().map(|&r| unimodular(rng, r)).collect();
    let db: Vec<IMat> = (0..=top)
        .map(|n| {
            if n == 0 {
                return db[0].clone();
            }
            let left = mul(&q[n - 1].0, &db[n], rb[n - 1], rb[n]);
            mul(&left, &q[n].1, rb[n], rb[n])
        })
        .collect();
    let a = complex("a", &ra, &da);
    let c = complex("c", &rc, &dc);
    let b = complex("b", &rb, &db);
    let columns = |m: &IMat, range: std::ops::Range<usize>| -> IMat {
        m.iter().map(|row| row[range.clone()].to_vec()).collect()
    };
    let rows = |m: &IMat, range: std::ops::Range<usize>| -> IMat { m[range].to_vec() };
    let i: Vec<IMat> = (0..=top).map(|n| columns(&q[n].0, ra[n]..rb[n])).collect();
    let sigma: Vec<IMat> = (0..=top).map(|n| columns(&q[n].0, 0..ra[n])).collect();
    let j: Vec<IMat> = (0..=top).map(|n| rows(&q[n].1, 0..ra[n])).collect();
    let rho: Vec<IMat> = (0..=top).map(|n| rows(&q[n].1, ra[n]..rb[n])).collect();
    let ses = EffectiveSes::new(
        morphism(&c, &b, &i, true),
        morphism(&b, &a, &j, true),
        morphism(&a, &b, &sigma, false),
        morphism(&b, &c, &rho, false),
    )
    .expect("random split sequence satisfies its identities");
    RandomSes { ses }
}

/// Which map of a reduction a mutation touches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Leg {
    F,
    G,
    H,
}

/// Adds `k · target` to the image of `at` under one map of `r`. Returns
/// `None` when the target complex has nothing in the required degree.
pub fn mutate(r: &Reduction, leg: Leg, rng: &mut StdRng) -> Option<(Reduction, String)> {
    let m = match leg {
        Leg::F => r.f(),
        Leg::G => r.g(),
        Leg::H => r.h(),
    };
    let sources: Vec<Generator> = m.source().all_generators().collect();
    let at = *sources.choose(rng)?;
    let deg = at.degree + m.degree();
    let rank = m.target().rank(deg);
    if rank == 0 {
        return None;
    }
    let hit = Generator::new(deg, rng.gen_range(0..rank));
    let k: i64 = *[-2, -1, 1, 2].choose(rng).unwrap();
    let delta = Chain::term(deg, hit.index, k);
    let mutated = GradedMorphism::from_fn(m.source().clone(), m.target().clone(), m.degree(), m.is_chain_map(), |g| {
        if g == at {
            m.image(g).add(&delta)
        } else {
            m.image(g)
        }
    })
    .unwrap();
    let (f, g, h) = (r.f().clone(), r.g().clone(), r.h().clone());
    let out = match leg {
        Leg::F => Reduction::new(mutated, g, h),
        Leg::G => Reduction::new(f, mutated, h),
        Leg::H => Reduction::new(f, g, mutated),
    }
    .unwrap();
    Some((out, format!("{leg:?}({at}) += {k}·{hit}")))
}
