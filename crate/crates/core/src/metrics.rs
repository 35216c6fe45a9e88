//! Information-theoretic tagset comparison: entropy in bits, conditional
//! entropy over aligned-token joint counts, POS confusion tables, and the
//! lexeme report tables (ambiguous lemmata, closed-class function words).

use std::collections::{BTreeMap, BTreeSet};

use crate::align::TokenAlignment;
use crate::tree::{CgelTree, NodeKind, PosTag};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MetricsError {
    #[error("entropy of an empty distribution is undefined")]
    EmptyDistribution,
}

/// Shannon entropy in bits: H = −Σ p(x) log₂ p(x).
pub fn entropy(counts: impl IntoIterator<Item = u64>) -> Result<f64, MetricsError> {
    let counts: Vec<u64> = counts.into_iter().filter(|&c| c > 0).collect();
    let total: u64 = counts.iter().sum();
    if total == 0 {
        return Err(MetricsError::EmptyDistribution);
    }
    let total = total as f64;
    let mut h = 0.0;
    for c in counts {
        let p = c as f64 / total;
        h -= p * p.log2();
    }
    Ok(h.max(0.0))
}

/// Co-occurrence table over two label sets, the joint behind conditional
/// entropy. Accumulation is commutative, so shards merge in any order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct JointCounts<X: Ord + Clone = String, Y: Ord + Clone = String> {
    pub counts: BTreeMap<(X, Y), u64>,
}

impl<X: Ord + Clone, Y: Ord + Clone> JointCounts<X, Y> {
    pub fn new() -> Self {
        JointCounts {
            counts: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, x: X, y: Y) {
        self.add_n(x, y, 1);
    }

    pub fn add_n(&mut self, x: X, y: Y, n: u64) {
        *self.counts.entry((x, y)).or_insert(0) += n;
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn marginal_x(&self) -> BTreeMap<X, u64> {
        let mut m = BTreeMap::new();
        for ((x, _), c) in &self.counts {
            *m.entry(x.clone()).or_insert(0) += c;
        }
        m
    }

    pub fn marginal_y(&self) -> BTreeMap<Y, u64> {
        let mut m = BTreeMap::new();
        for ((_, y), c) in &self.counts {
            *m.entry(y.clone()).or_insert(0) += c;
        }
        m
    }

    pub fn merge(&mut self, other: &Self) {
        for ((x, y), c) in &other.counts {
            self.add_n(x.clone(), y.clone(), *c);
        }
    }

    /// H(X): entropy of the X marginal.
    pub fn entropy_x(&self) -> Result<f64, MetricsError> {
        entropy(self.marginal_x().into_values())
    }

    /// H(X|Y) = −Σ p(x,y) log₂(p(x,y)/p(y)). Exactly 0 for a diagonal
    /// joint, and never exceeds H(X).
    pub fn conditional_entropy(&self) -> Result<f64, MetricsError> {
        let total = self.total();
        if total == 0 {
            return Err(MetricsError::EmptyDistribution);
        }
        let total = total as f64;
        let marginal_y = self.marginal_y();
        let mut h = 0.0;
        for ((_, y), &c) in &self.counts {
            if c == 0 {
                continue;
            }
            let p_xy = c as f64 / total;
            let ratio = c as f64 / marginal_y[y] as f64;
            h -= p_xy * ratio.log2();
        }
        Ok(h.max(0.0))
    }
}

/// Joint counts of (tree POS, other-side tag) over aligned token pairs.
/// Gaps never align, so they are excluded by construction; a multiword
/// lexeme contributes once per covered token.
pub fn pos_confusion(
    cgel_tags: &[Vec<String>],
    other_tags: &[Vec<String>],
    alignments: &[TokenAlignment],
) -> JointCounts<String, String> {
    let mut joint = JointCounts::new();
    for ((cgel, other), alignment) in cgel_tags.iter().zip(other_tags).zip(alignments) {
        for p in &alignment.pairs {
            joint.add(cgel[p.cgel].clone(), other[p.other].clone());
        }
    }
    joint
}

/// Lemma report tables. Lemmata fall back to the lowercased form.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LexemeTables {
    /// Tag set → lemmata carrying at least two distinct tags and at least
    /// `min_count` total occurrences.
    pub ambiguous: BTreeMap<Vec<PosTag>, Vec<String>>,
    /// Closed-class tag → all lemmata attested with it.
    pub function_words: BTreeMap<PosTag, Vec<String>>,
}

/// The closed classes reported in full.
pub const CLOSED_CLASSES: [PosTag; 6] = [
    PosTag::D,
    PosTag::NPro,
    PosTag::P,
    PosTag::VAux,
    PosTag::Sdr,
    PosTag::Coordinator,
];

pub fn report_lexeme_tables<'t>(
    trees: impl IntoIterator<Item = &'t CgelTree>,
    min_count: u64,
) -> LexemeTables {
    let mut by_lemma: BTreeMap<String, (BTreeSet<PosTag>, u64)> = BTreeMap::new();
    let mut function_words: BTreeMap<PosTag, BTreeSet<String>> = BTreeMap::new();
    for tree in trees {
        for terminal in tree.terminals() {
            if let NodeKind::Lexeme { pos, .. } = &terminal.kind {
                let lemma = terminal.lemma_or_form().unwrap();
                let entry = by_lemma.entry(lemma.clone()).or_default();
                entry.0.insert(*pos);
                entry.1 += 1;
                if CLOSED_CLASSES.contains(pos) {
                    function_words.entry(*pos).or_default().insert(lemma);
                }
            }
        }
    }
    let mut ambiguous: BTreeMap<Vec<PosTag>, Vec<String>> = BTreeMap::new();
    for (lemma, (tags, count)) in &by_lemma {
        if tags.len() >= 2 && *count >= min_count {
            ambiguous
                .entry(tags.iter().copied().collect())
                .or_default()
                .push(lemma.clone());
        }
    }
    LexemeTables {
        ambiguous,
        function_words: function_words
            .into_iter()
            .map(|(k, v)| (k, v.into_iter().collect()))
            .collect(),
    }
}
