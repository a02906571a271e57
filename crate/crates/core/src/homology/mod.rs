//! Integer homology of effective complexes via Smith normal form.

mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::chain_core::{ChainComplex, HomotopyEquivalence};

pub use snf::{is_divisibility_chain, smith_normal_form, IntMatrix, SmithForm};

/// A finitely generated abelian group `Z^r ⊕ Z/d₁ ⊕ … ⊕ Z/d_k` with
/// `d₁ | d₂ | … | d_k` and every `dᵢ ≥ 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self { free_rank: rank, torsion: Vec::new() }
    }

    /// Canonical form of `Z^r ⊕ ⊕ Z/nᵢ`; orders 0 count as free summands and
    /// orders ±1 are dropped.
    pub fn from_cyclic(free_rank: usize, orders: impl IntoIterator<Item = BigInt>) -> Self {
        let orders: Vec<BigInt> = orders.into_iter().collect();
        let mut m = IntMatrix::zeros(orders.len(), orders.len());
        for (k, d) in orders.iter().enumerate() {
            m.set(k, k, d.clone());
        }
        let form = smith_normal_form(&m);
        let extra_free = form.diagonal.len() - form.rank;
        Self {
            free_rank: free_rank + extra_free,
            torsion: form.nonzero().iter().filter(|d| !d.is_one()).cloned().collect(),
        }
    }

    pub fn cyclic(order: i64) -> Self {
        Self::from_cyclic(0, [BigInt::from(order)])
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> Self {
        Self::from_cyclic(
            self.free_rank + other.free_rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }

    pub fn torsion_orders(&self) -> Vec<i64> {
        self.torsion.iter().map(|d| i64::try_from(d).unwrap_or(i64::MAX)).collect()
    }

    /// One entry per cyclic summand, `Z` first, then `Z/dZ` in divisibility
    /// order.
    pub fn components(&self) -> Vec<String> {
        std::iter::repeat_n("Z".to_string(), self.free_rank)
            .chain(self.torsion.iter().map(|d| format!("Z/{d}Z")))
            .collect()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        f.write_str(&self.components().join(" + "))
    }
}

/// Matrix of `d_n: C_n → C_{n-1}`, columns indexed by the basis of `C_n`.
pub fn differential_matrix(c: &ChainComplex, n: i32) -> IntMatrix {
    let mut m = IntMatrix::zeros(c.rank(n - 1), c.rank(n));
    for g in c.generators(n) {
        for (i, k) in c.differential(g).terms() {
            m.set(*i, g.index, k.clone());
        }
    }
    m
}

/// `H_n(C) = ker d_n / im d_{n+1}`.
pub fn homology_effective(c: &ChainComplex, n: i32) -> AbelianGroup {
    let rank_n = c.rank(n);
    if rank_n == 0 {
        return AbelianGroup::trivial();
    }
    let out = smith_normal_form(&differential_matrix(c, n));
    let inc = smith_normal_form(&differential_matrix(c, n + 1));
    AbelianGroup {
        free_rank: rank_n - out.rank - inc.rank,
        torsion: inc.nonzero().iter().filter(|d| *d > &BigInt::one()).cloned().collect(),
    }
}

/// Homology of the left complex of `eq`, read off its effective right complex.
pub fn homology_via_equivalence(eq: &HomotopyEquivalence, n: i32) -> AbelianGroup {
    homology_effective(eq.right(), n)
}

/// `H_n` for every `n` in an inclusive range.
pub fn homology_range(c: &ChainComplex, lo: i32, hi: i32) -> Vec<(i32, AbelianGroup)> {
    (lo..=hi).map(|n| (n, homology_effective(c, n))).collect()
}

/// `Σ (-1)^n rank H_n` over the window of `c`.
pub fn homology_euler_characteristic(c: &ChainComplex) -> i64 {
    c.degrees()
        .map(|n| {
            let r = homology_effective(c, n).free_rank as i64;
            if n.rem_euclid(2) == 0 { r } else { -r }
        })
        .sum()
}
