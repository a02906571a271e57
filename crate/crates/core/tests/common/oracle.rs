//! Reference computations written independently of the library: invariant
//! factors by Euclidean elimination followed by a gcd/lcm pass, and
//! determinantal divisors from all minors.

use itertools::Itertools;
use pushout::chain_core::ChainComplex;
use pushout::homology::AbelianGroup;

pub type Matrix = Vec<Vec<i128>>;

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Nonzero invariant factors, increasing along the divisibility chain.
pub fn invariant_factors(m: &Matrix) -> Vec<i128> {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        while let Some((pi, pj)) = (t..rows)
            .cartesian_product(t..cols)
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].abs())
        {
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let k = a[i][t] / p;
                let pivot_row = a[t].clone();
                for (x, y) in a[i].iter_mut().zip(pivot_row).skip(t) {
                    *x -= k * y;
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let k = a[t][j] / p;
                for row in a.iter_mut().skip(t) {
                    row[j] -= k * row[t];
                }
                clean &= a[t][j] == 0;
            }
            if clean {
                break;
            }
        }
        if a[t][t] == 0 {
            break;
        }
        diag.push(a[t][t].abs());
    }
    // the diagonal is equivalent to the Smith form; restore divisibility
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = gcd(diag[i], diag[j]);
            let l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

pub fn differential(c: &ChainComplex, n: i32) -> Matrix {
    let mut m = vec![vec![0i128; c.rank(n)]; c.rank(n - 1)];
    for g in c.generators(n) {
        for (i, k) in c.differential(g).terms() {
            m[*i][g.index] = i128::try_from(k).expect("small coefficient");
        }
    }
    m
}

/// `H_n(C)` from first principles.
pub fn homology(c: &ChainComplex, n: i32) -> AbelianGroup {
    let out = invariant_factors(&differential(c, n)).len();
    let inc = invariant_factors(&differential(c, n + 1));
    let free = c.rank(n) - out - inc.len();
    AbelianGroup {
        free_rank: free,
        torsion: inc.into_iter().filter(|&d| d > 1).map(Into::into).collect(),
    }
}

pub fn determinant(m: &Matrix) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .permutations(n)
        .map(|p| {
            let inversions = (0..n).tuple_combinations().filter(|&(i, j)| p[i] > p[j]).count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            sign * (0..n).map(|i| m[i][p[i]]).product::<i128>()
        })
        .sum()
}

/// gcd of all `k × k` minors.
pub fn determinantal_divisor(m: &Matrix, k: usize) -> i128 {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut g = 0;
    for rs in (0..rows).combinations(k) {
        for cs in (0..cols).combinations(k) {
            let minor: Matrix = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
            g = gcd(g, determinant(&minor));
        }
    }
    g
}
