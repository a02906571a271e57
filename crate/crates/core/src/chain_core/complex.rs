use std::sync::Arc;

use crate::chain_core::{Chain, Generator};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Level {
    labels: Vec<String>,
    diff: Vec<Chain>,
}

/// A finitely generated free chain complex over the integers.
///
/// The basis is stored for a contiguous window of degrees; every degree
/// outside the window has an empty basis. Empty degrees at either end of the
/// window are trimmed, so two complexes with the same bases and differentials
/// compare equal regardless of how they were built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    lo: i32,
    levels: Vec<Level>,
}

/// Basis labels and differential images for one degree.
#[derive(Clone, Debug, Default)]
pub struct LevelSpec {
    pub labels: Vec<String>,
    pub diff: Vec<Chain>,
}

impl ChainComplex {
    pub fn zero() -> Self {
        Self { lo: 0, levels: Vec::new() }
    }

    /// Builds a complex whose window starts at `lo`. `levels[k]` describes
    /// degree `lo + k`; each differential image must be a chain of degree one
    /// less over the basis of that degree.
    pub fn new(lo: i32, levels: Vec<LevelSpec>) -> Result<Self> {
        for (k, lv) in levels.iter().enumerate() {
            let n = lo + k as i32;
            if lv.labels.len() != lv.diff.len() {
                return Err(Error::Structure(format!(
                    "degree {n}: {} labels but {} differential images",
                    lv.labels.len(),
                    lv.diff.len()
                )));
            }
            let below = if k == 0 { 0 } else { levels[k - 1].labels.len() };
            for c in &lv.diff {
                if c.is_zero() {
                    continue;
                }
                if c.degree() != n - 1 {
                    return Err(Error::DegreeMismatch { expected: n - 1, found: c.degree() });
                }
                if let Some((i, _)) = c.terms().last() {
                    if *i >= below {
                        return Err(Error::UnknownGenerator(Generator::new(n - 1, *i)));
                    }
                }
            }
        }
        let mut levels: Vec<Level> = levels
            .into_iter()
            .map(|lv| Level {
                diff: lv
                    .diff
                    .into_iter()
                    .map(|c| if c.is_zero() { Chain::zero(0) } else { c })
                    .collect(),
                labels: lv.labels,
            })
            .collect();
        let mut lo = lo;
        let first = levels.iter().position(|l| !l.labels.is_empty());
        match first {
            None => return Ok(Self::zero()),
            Some(k) => {
                levels.drain(..k);
                lo += k as i32;
            }
        }
        while levels.last().is_some_and(|l| l.labels.is_empty()) {
            levels.pop();
        }
        // zero chains are stored with their proper degree
        for (k, lv) in levels.iter_mut().enumerate() {
            let n = lo + k as i32;
            for c in lv.diff.iter_mut() {
                if c.is_zero() {
                    *c = Chain::zero(n - 1);
                }
            }
        }
        Ok(Self { lo, levels })
    }

    pub fn into_arc(self) -> Arc<Self> {
        Arc::new(self)
    }

    /// Inclusive degree window, `None` for the zero complex.
    pub fn window(&self) -> Option<(i32, i32)> {
        if self.levels.is_empty() {
            None
        } else {
            Some((self.lo, self.lo + self.levels.len() as i32 - 1))
        }
    }

    pub fn degrees(&self) -> impl Iterator<Item = i32> {
        let lo = self.lo;
        (0..self.levels.len() as i32).map(move |k| lo + k)
    }

    fn level(&self, n: i32) -> Option<&Level> {
        if n < self.lo {
            return None;
        }
        self.levels.get((n - self.lo) as usize)
    }

    pub fn rank(&self, n: i32) -> usize {
        self.level(n).map_or(0, |l| l.labels.len())
    }

    pub fn total_rank(&self) -> usize {
        self.levels.iter().map(|l| l.labels.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn basis(&self, n: i32) -> &[String] {
        self.level(n).map_or(&[], |l| &l.labels)
    }

    pub fn label(&self, g: Generator) -> Option<&str> {
        self.level(g.degree).and_then(|l| l.labels.get(g.index)).map(String::as_str)
    }

    pub fn contains(&self, g: Generator) -> bool {
        g.index < self.rank(g.degree)
    }

    pub fn generators(&self, n: i32) -> impl Iterator<Item = Generator> {
        (0..self.rank(n)).map(move |i| Generator::new(n, i))
    }

    pub fn all_generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.degrees().flat_map(move |n| self.generators(n))
    }

    /// Differential of a basis element; the zero chain outside the basis.
    pub fn differential(&self, g: Generator) -> Chain {
        self.level(g.degree)
            .and_then(|l| l.diff.get(g.index))
            .cloned()
            .unwrap_or_else(|| Chain::zero(g.degree - 1))
    }

    /// Checks that every term of `c` is a basis element of this complex.
    pub fn check_chain(&self, c: &Chain) -> Result<()> {
        match c.terms().last() {
            Some((i, _)) if *i >= self.rank(c.degree()) => {
                Err(Error::UnknownGenerator(Generator::new(c.degree(), *i)))
            }
            _ => Ok(()),
        }
    }

    /// Linear extension of the differential.
    pub fn d(&self, c: &Chain) -> Chain {
        let mut out = Chain::zero(c.degree() - 1);
        for (g, k) in c.iter() {
            out = out.add_scaled(k, &self.differential(g));
        }
        out
    }

    /// Generators `x` with `d(d(x)) != 0`.
    pub fn d_squared_violations(&self) -> Vec<Generator> {
        self.all_generators()
            .filter(|g| !self.d(&self.differential(*g)).is_zero())
            .collect()
    }

    pub fn is_d_squared_zero(&self) -> bool {
        self.d_squared_violations().is_empty()
    }

    /// Per-degree ranks over the window.
    pub fn ranks(&self) -> Vec<(i32, usize)> {
        self.degrees().map(|n| (n, self.rank(n))).collect()
    }

    /// Alternating sum of ranks.
    pub fn euler_characteristic(&self) -> i64 {
        self.degrees()
            .map(|n| if n.rem_euclid(2) == 0 { self.rank(n) as i64 } else { -(self.rank(n) as i64) })
            .sum()
    }

    /// Same complex under a different degree offset and label map, with the
    /// differential multiplied by `sign`.
    pub(crate) fn reindexed(&self, shift: i32, sign: i32, relabel: impl Fn(&str) -> String) -> Self {
        let levels = self
            .levels
            .iter()
            .map(|l| Level {
                labels: l.labels.iter().map(|s| relabel(s)).collect(),
                diff: l
                    .diff
                    .iter()
                    .map(|c| {
                        let c = if sign < 0 { c.neg() } else { c.clone() };
                        c.relabel(c.degree() + shift, |i| i)
                    })
                    .collect(),
            })
            .collect();
        Self { lo: self.lo + shift, levels }
    }
}

/// True when both handles denote the same complex.
pub fn same_complex(a: &Arc<ChainComplex>, b: &Arc<ChainComplex>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
