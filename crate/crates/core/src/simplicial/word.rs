use std::fmt;

/// A nondegenerate simplex of some simplicial set: its dimension and its
/// position among the nondegenerate simplices of that dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    pub dim: usize,
    pub index: usize,
}

impl Simplex {
    pub fn new(dim: usize, index: usize) -> Self {
        Self { dim, index }
    }
}

/// A possibly degenerate simplex `η_{i_k} … η_{i_1} x` in Eilenberg–Zilber
/// form: `x` nondegenerate and `i_k > … > i_1`. `degeneracies` lists the
/// indices outermost first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexWord {
    pub degeneracies: Vec<usize>,
    pub base: Simplex,
}

impl SimplexWord {
    pub fn nondegenerate(base: Simplex) -> Self {
        Self { degeneracies: Vec::new(), base }
    }

    /// Builds a word from an arbitrary sequence of degeneracy indices
    /// (outermost first), normalizing it.
    pub fn new(degeneracies: Vec<usize>, base: Simplex) -> Self {
        Self { degeneracies: normalize_degeneracies(degeneracies), base }
    }

    /// The fully degenerate word of dimension `dim` on a vertex.
    pub fn degenerate_vertex(vertex: usize, dim: usize) -> Self {
        Self { degeneracies: (0..dim).rev().collect(), base: Simplex::new(0, vertex) }
    }

    pub fn dim(&self) -> usize {
        self.base.dim + self.degeneracies.len()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.degeneracies.is_empty()
    }

    /// `η_{outer…} self`, normalized.
    pub fn degenerate(&self, outer: &[usize]) -> Self {
        let mut seq = outer.to_vec();
        seq.extend_from_slice(&self.degeneracies);
        Self::new(seq, self.base)
    }

    /// Whether the degeneracy indices are admissible for this base dimension:
    /// strictly decreasing, and the `t`-th innermost index at most `p + t - 1`.
    pub fn is_canonical(&self) -> bool {
        let strictly_decreasing = self.degeneracies.windows(2).all(|w| w[0] > w[1]);
        let admissible = self
            .degeneracies
            .iter()
            .rev()
            .enumerate()
            .all(|(t, &i)| i <= self.base.dim + t);
        strictly_decreasing && admissible
    }

    /// Set of degeneracy indices, increasing.
    pub fn degeneracy_set(&self) -> Vec<usize> {
        let mut s = self.degeneracies.clone();
        s.reverse();
        s
    }
}

impl fmt::Display for SimplexWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.degeneracies {
            write!(f, "s{i} ")?;
        }
        write!(f, "x{}[{}]", self.base.index, self.base.dim)
    }
}

/// Normal form of a composite of degeneracies (outermost first) via
/// `η_i η_j = η_{j+1} η_i` for `i ≤ j`.
pub fn normalize_degeneracies(mut seq: Vec<usize>) -> Vec<usize> {
    let mut changed = true;
    while changed {
        changed = false;
        for k in 0..seq.len().saturating_sub(1) {
            let (p, q) = (seq[k], seq[k + 1]);
            if p <= q {
                seq[k] = q + 1;
                seq[k + 1] = p;
                changed = true;
            }
        }
    }
    seq
}

/// Result of pushing `∂_i` through a degeneracy word: either the face
/// cancels against a degeneracy, or it reaches the base with index `face`.
pub(crate) struct FacePush {
    pub degeneracies: Vec<usize>,
    pub face: Option<usize>,
}

/// Applies the commutation rules `∂_i η_j = η_{j-1} ∂_i (i < j)`,
/// `∂_i η_j = id (i ∈ {j, j+1})`, `∂_i η_j = η_j ∂_{i-1} (i > j+1)`.
pub(crate) fn push_face(i: usize, degeneracies: &[usize]) -> FacePush {
    let mut out = Vec::with_capacity(degeneracies.len());
    let mut idx = Some(i);
    for &j in degeneracies {
        match idx {
            None => out.push(j),
            Some(i) if i < j => out.push(j - 1),
            Some(i) if i == j || i == j + 1 => idx = None,
            Some(i) => {
                out.push(j);
                idx = Some(i - 1);
            }
        }
    }
    FacePush { degeneracies: out, face: idx }
}

/// Splits a pair of words of equal dimension as `η_K (u', v')` where `K` is
/// the set of common degeneracy indices. `K` is returned outermost first.
pub(crate) fn factor_common(u: &SimplexWord, v: &SimplexWord) -> (Vec<usize>, SimplexWord, SimplexWord) {
    let (iu, iv) = (u.degeneracy_set(), v.degeneracy_set());
    let common: Vec<usize> = iu.iter().copied().filter(|k| iv.contains(k)).collect();
    if common.is_empty() {
        return (Vec::new(), u.clone(), v.clone());
    }
    let collapse = |set: &[usize]| -> Vec<usize> {
        let mut out: Vec<usize> = set
            .iter()
            .filter(|t| !common.contains(t))
            .map(|&t| t - common.iter().filter(|&&k| k < t).count())
            .collect();
        out.reverse();
        out
    };
    let u2 = SimplexWord { degeneracies: collapse(&iu), base: u.base };
    let v2 = SimplexWord { degeneracies: collapse(&iv), base: v.base };
    let mut k = common;
    k.reverse();
    (k, u2, v2)
}
