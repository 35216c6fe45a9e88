//! Corpus-level comparison: pairs parallel sentences, induces alignments,
//! and assembles matched fractions, entropies, confusion tables, head
//! agreement, and gap alignment into one report.

use std::collections::BTreeMap;

use crate::align::{align_gaps, align_tree_tokens, AlignmentOptions, TokenAlignment};
use crate::conllu::ConlluSentence;
use crate::heads::{extract_heads, head_agreement, head_agreement_by_deprel};
use crate::metrics::{entropy, JointCounts, MetricsError};
use crate::ptb::{ptb_tokens, PtbTree};
use crate::tree::{census, CgelTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairingMode {
    BySentId,
    ByOrder,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PairingError {
    #[error("sentence counts differ: {left} trees vs {right} parallel sentences")]
    CountMismatch { left: usize, right: usize },
    #[error("unpaired ids: {0:?}")]
    UnpairedIds(Vec<String>),
}

/// Pairs trees with CoNLL-U sentences. By-id pairing requires ids on both
/// sides and reports everything it could not match.
pub fn pair_with_conllu<'a>(
    trees: &'a [CgelTree],
    sentences: &'a [ConlluSentence],
    mode: PairingMode,
) -> Result<Vec<(&'a CgelTree, &'a ConlluSentence)>, PairingError> {
    match mode {
        PairingMode::ByOrder => {
            if trees.len() != sentences.len() {
                return Err(PairingError::CountMismatch {
                    left: trees.len(),
                    right: sentences.len(),
                });
            }
            Ok(trees.iter().zip(sentences.iter()).collect())
        }
        PairingMode::BySentId => {
            let by_id: BTreeMap<&str, &ConlluSentence> = sentences
                .iter()
                .filter_map(|s| s.sent_id().map(|id| (id, s)))
                .collect();
            let mut out = Vec::new();
            let mut unpaired = Vec::new();
            for tree in trees {
                match by_id.get(tree.id.as_str()) {
                    Some(s) => out.push((tree, *s)),
                    None => unpaired.push(tree.id.clone()),
                }
            }
            if !unpaired.is_empty() {
                return Err(PairingError::UnpairedIds(unpaired));
            }
            Ok(out)
        }
    }
}

/// Everything `compare` reports for one corpus of parallel sentences.
#[derive(Debug, Clone)]
pub struct ComparisonReport {
    pub trees: usize,
    pub cgel_tokens: usize,
    pub cgel_gaps: usize,
    pub h_cgel_pos: Option<f64>,

    pub ud_tokens: usize,
    pub ud_matched: usize,
    pub h_given_ud: Option<f64>,
    pub confusion_ud: JointCounts<String, String>,
    pub head_agree: usize,
    pub head_total: usize,
    pub head_by_deprel: BTreeMap<String, (usize, usize)>,

    pub ptb_tokens: usize,
    pub ptb_matched: usize,
    pub h_given_ptb: Option<f64>,
    pub confusion_ptb: JointCounts<String, String>,
    /// empty kind → (matched to a gap, total occurrences).
    pub gaps_by_kind: BTreeMap<String, (usize, usize)>,
    pub unmatched_gaps: usize,
}

impl ComparisonReport {
    pub fn ud_matched_fraction(&self) -> Option<f64> {
        if self.ud_tokens == 0 {
            None
        } else {
            Some(self.ud_matched as f64 / self.ud_tokens as f64)
        }
    }

    pub fn head_agreement_fraction(&self) -> Option<f64> {
        if self.head_total == 0 {
            None
        } else {
            Some(self.head_agree as f64 / self.head_total as f64)
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CompareOptions {
    pub alignment: AlignmentOptions,
    /// Count a root aligned with a root as head agreement.
    pub count_root_match: bool,
}

impl CompareOptions {
    pub fn standard() -> Self {
        CompareOptions {
            alignment: AlignmentOptions::default(),
            count_root_match: true,
        }
    }
}

/// Compares paired trees against UD and (optionally) PTB parallels. The
/// slices must be index-aligned; `ptb` entries are optional per sentence.
pub fn compare_corpus(
    pairs: &[(&CgelTree, &ConlluSentence)],
    ptb: &[Option<&PtbTree>],
    options: &CompareOptions,
) -> Result<ComparisonReport, MetricsError> {
    let trees: Vec<&CgelTree> = pairs.iter().map(|(t, _)| *t).collect();
    let pos_census = census(trees.iter().copied());
    let h_cgel_pos = entropy(pos_census.pos.values().copied()).ok();

    let mut report = ComparisonReport {
        trees: pairs.len(),
        cgel_tokens: pos_census.lexemes as usize,
        cgel_gaps: pos_census.gaps as usize,
        h_cgel_pos,
        ud_tokens: 0,
        ud_matched: 0,
        h_given_ud: None,
        confusion_ud: JointCounts::new(),
        head_agree: 0,
        head_total: 0,
        head_by_deprel: BTreeMap::new(),
        ptb_tokens: 0,
        ptb_matched: 0,
        h_given_ptb: None,
        confusion_ptb: JointCounts::new(),
        gaps_by_kind: BTreeMap::new(),
        unmatched_gaps: 0,
    };

    for (i, (tree, ud)) in pairs.iter().enumerate() {
        let cgel_tags = tree.lexeme_pos_tags();

        // UD side.
        let ud_forms = ud.forms();
        let ud_alignment: TokenAlignment =
            align_tree_tokens(tree, &ud_forms, &options.alignment);
        report.ud_tokens += ud_forms.len();
        report.ud_matched += ud_alignment.matched_other();
        let upos = ud.upos_tags();
        for p in &ud_alignment.pairs {
            report
                .confusion_ud
                .add(cgel_tags[p.cgel].clone(), upos[p.other].clone());
        }
        if let Ok(graph) = extract_heads(tree) {
            let (agree, total) =
                head_agreement(&graph, ud, &ud_alignment, options.count_root_match);
            report.head_agree += agree;
            report.head_total += total;
            head_agreement_by_deprel(
                &graph,
                ud,
                &ud_alignment,
                options.count_root_match,
                &mut report.head_by_deprel,
            );
        }

        // PTB side.
        if let Some(ptb_tree) = ptb.get(i).copied().flatten() {
            let (tokens, empties) = ptb_tokens(ptb_tree);
            let ptb_forms: Vec<String> = tokens.iter().map(|t| t.form.to_string()).collect();
            let ptb_tags: Vec<String> = tokens.iter().map(|t| t.pos.to_string()).collect();
            let ptb_alignment = align_tree_tokens(tree, &ptb_forms, &options.alignment);
            report.ptb_tokens += ptb_forms.len();
            report.ptb_matched += ptb_alignment.matched_other();
            for p in &ptb_alignment.pairs {
                report
                    .confusion_ptb
                    .add(cgel_tags[p.cgel].clone(), ptb_tags[p.other].clone());
            }
            let gap_alignment = align_gaps(tree, ptb_tree, &ptb_alignment);
            for (e, empty) in empties.iter().enumerate() {
                let entry = report
                    .gaps_by_kind
                    .entry(empty.kind.to_string())
                    .or_insert((0, 0));
                entry.1 += 1;
                if gap_alignment.pairs.iter().any(|l| l.empty == e) {
                    entry.0 += 1;
                }
            }
            report.unmatched_gaps += gap_alignment.unmatched_gaps.len();
        }
    }

    report.h_given_ud = report.confusion_ud.conditional_entropy().ok();
    report.h_given_ptb = report.confusion_ptb.conditional_entropy().ok();
    Ok(report)
}
