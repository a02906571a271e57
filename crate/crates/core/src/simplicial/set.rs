use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::chain_core::{Chain, ChainComplex, LevelSpec};
use crate::error::{Error, Result};
use crate::simplicial::word::{push_face, Simplex, SimplexWord};

/// Nondegenerate simplices of one dimension, with their face words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplexLevel {
    pub labels: Vec<String>,
    /// `faces[k][i]` is `∂_i` of the `k`-th simplex; empty in dimension 0.
    pub faces: Vec<Vec<SimplexWord>>,
}

/// A finite simplicial set given by its nondegenerate simplices up to a top
/// dimension and their face tables. Degenerate simplices are implicit.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplicialSet {
    levels: Vec<SimplexLevel>,
}

/// A failed simplicial identity `∂_i ∂_j s = ∂_{j-1} ∂_i s` (`i < j`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityViolation {
    pub simplex: Simplex,
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for IdentityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "∂{}∂{} ≠ ∂{}∂{} on simplex {} of dimension {}",
            self.i,
            self.j,
            self.j - 1,
            self.i,
            self.simplex.index,
            self.simplex.dim
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplicialReport {
    pub checked: usize,
    pub violations: Vec<IdentityViolation>,
}

impl SimplicialReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl SimplicialSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Checks the shape of the face tables: `n + 1` faces of dimension
    /// `n - 1` per `n`-simplex, each a canonical word over existing simplices.
    /// Trailing empty dimensions are dropped. Simplicial identities are checked
    /// separately by [`SimplicialSet::verify`].
    pub fn new(mut levels: Vec<SimplexLevel>) -> Result<Self> {
        while levels.last().is_some_and(|l| l.labels.is_empty()) {
            levels.pop();
        }
        for (n, lv) in levels.iter().enumerate() {
            if lv.labels.len() != lv.faces.len() {
                return Err(Error::InvalidSimplicial(format!(
                    "dimension {n}: {} labels but {} face lists",
                    lv.labels.len(),
                    lv.faces.len()
                )));
            }
            for (k, faces) in lv.faces.iter().enumerate() {
                let expected = if n == 0 { 0 } else { n + 1 };
                if faces.len() != expected {
                    return Err(Error::InvalidSimplicial(format!(
                        "simplex {} has {} faces, expected {expected}",
                        lv.labels[k],
                        faces.len()
                    )));
                }
                for w in faces {
                    let ok = w.dim() + 1 == n
                        && w.is_canonical()
                        && levels.get(w.base.dim).is_some_and(|l| w.base.index < l.labels.len());
                    if !ok {
                        return Err(Error::InvalidSimplicial(format!(
                            "simplex {} has a malformed face {w}",
                            lv.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(Self { levels })
    }

    pub fn into_arc(self) -> Arc<Self> {
        Arc::new(self)
    }

    /// Highest dimension with a nondegenerate simplex, `None` when empty.
    pub fn top_dim(&self) -> Option<usize> {
        self.levels.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn count(&self, dim: usize) -> usize {
        self.levels.get(dim).map_or(0, |l| l.labels.len())
    }

    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.labels.len()).collect()
    }

    pub fn simplices(&self, dim: usize) -> impl Iterator<Item = Simplex> {
        (0..self.count(dim)).map(move |i| Simplex::new(dim, i))
    }

    pub fn all_simplices(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.levels.len()).flat_map(move |d| self.simplices(d))
    }

    pub fn level(&self, dim: usize) -> Option<&SimplexLevel> {
        self.levels.get(dim)
    }

    pub fn label(&self, s: Simplex) -> &str {
        &self.levels[s.dim].labels[s.index]
    }

    pub fn contains(&self, s: Simplex) -> bool {
        s.index < self.count(s.dim)
    }

    pub fn find(&self, label: &str) -> Option<Simplex> {
        self.levels.iter().enumerate().find_map(|(d, l)| {
            l.labels.iter().position(|x| x == label).map(|i| Simplex::new(d, i))
        })
    }

    /// `∂_i` of a nondegenerate simplex as stored.
    pub fn face(&self, i: usize, s: Simplex) -> Result<&SimplexWord> {
        if s.dim == 0 || i > s.dim {
            return Err(Error::FaceIndex { index: i, dim: s.dim });
        }
        Ok(&self.levels[s.dim].faces[s.index][i])
    }

    /// `∂_i` of a possibly degenerate simplex, in canonical form.
    pub fn canonical_face(&self, i: usize, w: &SimplexWord) -> Result<SimplexWord> {
        let dim = w.dim();
        if dim == 0 || i > dim {
            return Err(Error::FaceIndex { index: i, dim });
        }
        let pushed = push_face(i, &w.degeneracies);
        match pushed.face {
            None => Ok(SimplexWord::new(pushed.degeneracies, w.base)),
            Some(k) => Ok(self.face(k, w.base)?.degenerate(&pushed.degeneracies)),
        }
    }

    /// Human-readable form of a word, e.g. `s1 s0 v`.
    pub fn word_label(&self, w: &SimplexWord) -> String {
        let mut s = String::new();
        for i in &w.degeneracies {
            s.push_str(&format!("s{i} "));
        }
        s.push_str(self.label(w.base));
        s
    }

    /// Parses [`SimplicialSet::word_label`] output.
    pub fn parse_word(&self, text: &str) -> Option<SimplexWord> {
        let text = text.trim();
        if let Some(s) = self.find(text) {
            return Some(SimplexWord::nondegenerate(s));
        }
        let (head, rest) = text.split_once(char::is_whitespace)?;
        let i: usize = head.strip_prefix('s')?.parse().ok()?;
        let inner = self.parse_word(rest)?;
        let mut degs = vec![i];
        degs.extend(inner.degeneracies);
        let w = SimplexWord { degeneracies: degs, base: inner.base };
        w.is_canonical().then_some(w)
    }

    /// Checks `∂_i ∂_j = ∂_{j-1} ∂_i` for all `i < j` on every simplex of
    /// dimension at least 2.
    pub fn verify(&self) -> SimplicialReport {
        let mut report = SimplicialReport::default();
        for s in self.all_simplices().filter(|s| s.dim >= 2) {
            let w = SimplexWord::nondegenerate(s);
            for j in 0..=s.dim {
                for i in 0..j {
                    report.checked += 1;
                    let lhs = self.canonical_face(j, &w).and_then(|x| self.canonical_face(i, &x));
                    let rhs = self.canonical_face(i, &w).and_then(|x| self.canonical_face(j - 1, &x));
                    if lhs.is_err() || lhs != rhs {
                        report.violations.push(IdentityViolation { simplex: s, i, j });
                    }
                }
            }
        }
        report
    }

    /// Equality of face structure, ignoring labels.
    pub fn same_structure(&self, other: &SimplicialSet) -> bool {
        self.levels.len() == other.levels.len()
            && self.levels.iter().zip(&other.levels).all(|(a, b)| a.faces == b.faces)
    }

    /// The normalized chain complex: nondegenerate simplices as basis and
    /// `d s = Σ (-1)^i ∂_i s` with degenerate faces dropped.
    pub fn normalized_chain_complex(&self) -> Result<Arc<ChainComplex>> {
        let report = self.verify();
        if let Some(v) = report.violations.first() {
            return Err(Error::InvalidInput(format!("not a simplicial set: {v}")));
        }
        Ok(self.chain_complex_unchecked())
    }

    pub(crate) fn chain_complex_unchecked(&self) -> Arc<ChainComplex> {
        let levels = self
            .levels
            .iter()
            .enumerate()
            .map(|(n, lv)| LevelSpec {
                labels: lv.labels.clone(),
                diff: lv
                    .faces
                    .iter()
                    .map(|faces| {
                        Chain::from_terms(
                            n as i32 - 1,
                            faces.iter().enumerate().filter(|(_, w)| !w.is_degenerate()).map(|(i, w)| {
                                (w.base.index, BigInt::from(if i % 2 == 0 { 1 } else { -1 }))
                            }),
                        )
                    })
                    .collect(),
            })
            .collect();
        ChainComplex::new(0, levels).expect("normalized complex is well formed").into_arc()
    }
}

/// A dimension-preserving map of simplicial sets, given on nondegenerate
/// simplices and extended to degenerate ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMorphism {
    source: Arc<SimplicialSet>,
    target: Arc<SimplicialSet>,
    images: Vec<Vec<SimplexWord>>,
}

impl SimplicialMorphism {
    /// Checks dimensions and commutation with every face.
    pub fn new(
        source: Arc<SimplicialSet>,
        target: Arc<SimplicialSet>,
        images: Vec<Vec<SimplexWord>>,
    ) -> Result<Self> {
        let m = Self::unchecked(source, target, images)?;
        if let Some((s, i)) = m.face_violations().first() {
            return Err(Error::InvalidMorphism(format!(
                "image of {} does not commute with face {i}",
                m.source.label(*s)
            )));
        }
        Ok(m)
    }

    /// Checks only the shape of the image table.
    pub fn unchecked(
        source: Arc<SimplicialSet>,
        target: Arc<SimplicialSet>,
        images: Vec<Vec<SimplexWord>>,
    ) -> Result<Self> {
        let dims = source.top_dim().map_or(0, |t| t + 1);
        if images.len() != dims {
            return Err(Error::InvalidMorphism(format!(
                "image table covers {} dimensions, source has {dims}",
                images.len()
            )));
        }
        for (d, imgs) in images.iter().enumerate() {
            if imgs.len() != source.count(d) {
                return Err(Error::InvalidMorphism(format!("dimension {d}: wrong number of images")));
            }
            for w in imgs {
                if w.dim() != d || !w.is_canonical() || !target.contains(w.base) {
                    return Err(Error::InvalidMorphism(format!("dimension {d}: malformed image {w}")));
                }
            }
        }
        Ok(Self { source, target, images })
    }

    pub fn from_fn(
        source: &Arc<SimplicialSet>,
        target: &Arc<SimplicialSet>,
        mut rule: impl FnMut(Simplex) -> SimplexWord,
    ) -> Result<Self> {
        let images = (0..source.top_dim().map_or(0, |t| t + 1))
            .map(|d| source.simplices(d).map(&mut rule).collect())
            .collect();
        Self::new(source.clone(), target.clone(), images)
    }

    pub fn identity(x: &Arc<SimplicialSet>) -> Self {
        Self::from_fn(x, x, SimplexWord::nondegenerate).expect("identity morphism")
    }

    /// Every simplex to the degenerate copy of `vertex` in its dimension.
    pub fn constant(source: &Arc<SimplicialSet>, target: &Arc<SimplicialSet>, vertex: usize) -> Result<Self> {
        if vertex >= target.count(0) {
            return Err(Error::InvalidMorphism(format!("target has no vertex {vertex}")));
        }
        Self::from_fn(source, target, |s| SimplexWord::degenerate_vertex(vertex, s.dim))
    }

    pub fn source(&self) -> &Arc<SimplicialSet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SimplicialSet> {
        &self.target
    }

    pub fn image(&self, s: Simplex) -> &SimplexWord {
        &self.images[s.dim][s.index]
    }

    pub fn apply(&self, w: &SimplexWord) -> SimplexWord {
        self.image(w.base).degenerate(&w.degeneracies)
    }

    pub fn compose(outer: &SimplicialMorphism, inner: &SimplicialMorphism) -> Result<Self> {
        if !(Arc::ptr_eq(&inner.target, &outer.source) || inner.target == outer.source) {
            return Err(Error::InvalidMorphism("composition endpoints differ".into()));
        }
        Self::from_fn(&inner.source, &outer.target, |s| outer.apply(inner.image(s)))
    }

    /// Pairs `(s, i)` where `f(∂_i s) ≠ ∂_i f(s)`.
    pub fn face_violations(&self) -> Vec<(Simplex, usize)> {
        let mut out = Vec::new();
        for s in self.source.all_simplices().filter(|s| s.dim > 0) {
            for i in 0..=s.dim {
                let lhs = self.source.face(i, s).map(|w| self.apply(w));
                let rhs = self.target.canonical_face(i, self.image(s));
                if lhs.is_err() || lhs != rhs {
                    out.push((s, i));
                }
            }
        }
        out
    }

    /// Whether distinct nondegenerate simplices go to distinct nondegenerate
    /// simplices.
    pub fn is_injective_on_nondegenerate(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.images.iter().flatten().all(|w| !w.is_degenerate() && seen.insert(w.base))
    }
}
