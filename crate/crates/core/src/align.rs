//! Monotone token alignment between a tree's lexemes and a tokenized
//! corpus sentence, plus alignment of gaps against PTB empty elements.
//!
//! Token equivalence is exact string match after Unicode NFC; an optional
//! fallback pass re-matches residual tokens case-insensitively. A multiword
//! lexeme ("Pierre Vinken") may cover a contiguous run of other-side
//! tokens, recorded as one pair per covered token. Among maximum matchings
//! the lexicographically smallest pair list is produced.

use unicode_normalization::UnicodeNormalization;

use crate::ptb::{ptb_tokens, EmptyKind, PtbTree};
use crate::tree::CgelTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlignedPair {
    /// Index into the lexeme sequence (0-based; gaps are not counted).
    pub cgel: usize,
    /// Index into the other side's token sequence (0-based).
    pub other: usize,
    /// True when the pair belongs to a multiword lexeme's covered span.
    pub covered_span: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TokenAlignment {
    pub pairs: Vec<AlignedPair>,
    pub unmatched_cgel: Vec<usize>,
    pub unmatched_other: Vec<usize>,
}

impl TokenAlignment {
    /// Distinct lexemes that found a partner.
    pub fn matched_cgel(&self) -> usize {
        let mut n = 0;
        let mut last = usize::MAX;
        for p in &self.pairs {
            if p.cgel != last {
                n += 1;
                last = p.cgel;
            }
        }
        n
    }

    /// Other-side tokens that found a partner.
    pub fn matched_other(&self) -> usize {
        self.pairs.len()
    }

    /// Monotone: other indices strictly increase; lexeme indices never
    /// decrease, repeating only within a covered span.
    pub fn is_monotone(&self) -> bool {
        self.pairs.windows(2).all(|w| {
            w[1].other > w[0].other
                && (w[1].cgel > w[0].cgel || (w[1].cgel == w[0].cgel && w[1].covered_span))
        })
    }

    pub fn contains(&self, cgel: usize, other: usize) -> bool {
        self.pairs.iter().any(|p| p.cgel == cgel && p.other == other)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct AlignmentOptions {
    /// Run a second, case-insensitive pass over residual tokens.
    pub case_fallback: bool,
}

fn nfc(s: &str) -> String {
    s.nfc().collect()
}

/// Aligns a tree's lexemes against a token sequence.
pub fn align_tree_tokens(
    tree: &CgelTree,
    other: &[String],
    options: &AlignmentOptions,
) -> TokenAlignment {
    let forms = tree.lexeme_forms();
    align_tokens(&forms, other, options)
}

/// Aligns two token sequences. `cgel` entries may be multiword.
pub fn align_tokens(
    cgel: &[String],
    other: &[String],
    options: &AlignmentOptions,
) -> TokenAlignment {
    let cgel_words: Vec<Vec<String>> = cgel
        .iter()
        .map(|f| f.split_whitespace().map(nfc).collect())
        .collect();
    let other_norm: Vec<String> = other.iter().map(|t| nfc(t)).collect();

    let exact = |a: &str, b: &str| a == b;
    let mut pairs = align_segment(&cgel_words, &other_norm, 0, cgel.len(), 0, other.len(), &exact);

    if options.case_fallback {
        let ci = |a: &str, b: &str| a.to_lowercase() == b.to_lowercase();
        let mut extra = Vec::new();
        // Rerun the matcher inside each window of residual tokens between
        // consecutive anchor pairs.
        let mut windows: Vec<(usize, usize, usize, usize)> = Vec::new();
        let mut prev_c = 0usize;
        let mut prev_o = 0usize;
        for p in &pairs {
            if p.cgel > prev_c || p.other > prev_o {
                windows.push((prev_c, p.cgel, prev_o, p.other));
            }
            prev_c = prev_c.max(p.cgel + 1);
            prev_o = prev_o.max(p.other + 1);
        }
        if prev_c < cgel.len() || prev_o < other.len() {
            windows.push((prev_c, cgel.len(), prev_o, other.len()));
        }
        for (c0, c1, o0, o1) in windows {
            extra.extend(align_segment(&cgel_words, &other_norm, c0, c1, o0, o1, &ci));
        }
        pairs.extend(extra);
        pairs.sort_by_key(|p| (p.other, p.cgel));
    }

    let mut matched_c = vec![false; cgel.len()];
    let mut matched_o = vec![false; other.len()];
    for p in &pairs {
        matched_c[p.cgel] = true;
        matched_o[p.other] = true;
    }
    TokenAlignment {
        pairs,
        unmatched_cgel: (0..cgel.len()).filter(|&i| !matched_c[i]).collect(),
        unmatched_other: (0..other.len()).filter(|&i| !matched_o[i]).collect(),
    }
}

/// Maximum monotone matching over the window [c0,c1) × [o0,o1), scored by
/// covered other-side tokens, lexicographically smallest among maxima.
fn align_segment(
    cgel_words: &[Vec<String>],
    other: &[String],
    c0: usize,
    c1: usize,
    o0: usize,
    o1: usize,
    eq: &dyn Fn(&str, &str) -> bool,
) -> Vec<AlignedPair> {
    let n = c1 - c0;
    let m = o1 - o0;
    if n == 0 || m == 0 {
        return Vec::new();
    }
    let matches_at = |ci: usize, oj: usize| -> Option<usize> {
        let words = &cgel_words[ci];
        if words.is_empty() || oj + words.len() > o1 {
            return None;
        }
        for (w, word) in words.iter().enumerate() {
            if !eq(word, &other[oj + w]) {
                return None;
            }
        }
        Some(words.len())
    };

    // score[i][j]: best covered count using cgel[c0+i..c1), other[o0+j..o1).
    let mut score = vec![vec![0usize; m + 1]; n + 1];
    for i in (0..n).rev() {
        for j in (0..m).rev() {
            let mut best = score[i + 1][j].max(score[i][j + 1]);
            if let Some(k) = matches_at(c0 + i, o0 + j) {
                best = best.max(k + score[i + 1][j + k]);
            }
            score[i][j] = best;
        }
    }

    // Greedy forward reconstruction of the lexicographically smallest
    // optimal pair list: repeatedly take the smallest feasible (a, b).
    let mut out = Vec::new();
    let mut i = 0usize;
    let mut j = 0usize;
    let mut remaining = score[0][0];
    while remaining > 0 {
        let mut chosen: Option<(usize, usize, usize)> = None;
        'outer: for a in i..n {
            for b in j..m {
                if let Some(k) = matches_at(c0 + a, o0 + b) {
                    if k + score[a + 1][b + k] == remaining {
                        chosen = Some((a, b, k));
                        break 'outer;
                    }
                }
            }
        }
        let (a, b, k) = chosen.expect("optimal score must be realizable");
        for w in 0..k {
            out.push(AlignedPair {
                cgel: c0 + a,
                other: o0 + b + w,
                covered_span: k > 1,
            });
        }
        i = a + 1;
        j = b + k;
        remaining -= k;
    }
    out
}

/// One matched gap↔empty pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapLink {
    /// Index into the tree's gap sequence.
    pub gap: usize,
    /// Index into the PTB empty-element sequence.
    pub empty: usize,
    pub kind: EmptyKind,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GapAlignment {
    pub pairs: Vec<GapLink>,
    pub unmatched_gaps: Vec<usize>,
    pub unmatched_empties: Vec<usize>,
}

/// Matches gaps with empty elements by relative location between tokens:
/// both sides are projected onto the sequence of aligned lexemes, and a gap
/// matches an empty at the same projected position, greedily left to right,
/// each side at most once.
pub fn align_gaps(tree: &CgelTree, ptb: &PtbTree, alignment: &TokenAlignment) -> GapAlignment {
    let gap_positions = tree.gap_positions();
    let (_, empties) = ptb_tokens(ptb);

    // Projection for the tree side: aligned lexemes strictly before the gap.
    let aligned_lexemes: Vec<usize> = {
        let mut v: Vec<usize> = alignment.pairs.iter().map(|p| p.cgel).collect();
        v.dedup();
        v
    };
    let project_gap =
        |p: usize| -> usize { aligned_lexemes.iter().filter(|&&c| c < p).count() };

    // Projection for the PTB side: aligned lexemes whose first covered token
    // precedes the empty's slot.
    let mut first_token_of_lexeme: Vec<(usize, usize)> = Vec::new();
    for p in &alignment.pairs {
        if first_token_of_lexeme.last().map(|(c, _)| *c) != Some(p.cgel) {
            first_token_of_lexeme.push((p.cgel, p.other));
        }
    }
    let project_empty = |q: usize| -> usize {
        first_token_of_lexeme
            .iter()
            .filter(|(_, o)| *o < q)
            .count()
    };

    let gap_projected: Vec<usize> = gap_positions.iter().map(|&p| project_gap(p)).collect();
    let empty_projected: Vec<usize> = empties.iter().map(|e| project_empty(e.position)).collect();

    let mut pairs = Vec::new();
    let mut used_empty = vec![false; empties.len()];
    for (g, &gp) in gap_projected.iter().enumerate() {
        for (e, &ep) in empty_projected.iter().enumerate() {
            if !used_empty[e] && ep == gp {
                used_empty[e] = true;
                pairs.push(GapLink {
                    gap: g,
                    empty: e,
                    kind: empties[e].kind.clone(),
                });
                break;
            }
        }
    }
    let matched_gaps: Vec<usize> = pairs.iter().map(|p| p.gap).collect();
    GapAlignment {
        unmatched_gaps: (0..gap_positions.len())
            .filter(|g| !matched_gaps.contains(g))
            .collect(),
        unmatched_empties: (0..empties.len()).filter(|&e| !used_empty[e]).collect(),
        pairs,
    }
}
