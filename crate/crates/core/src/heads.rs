//! Per-token dependency heads extracted from a tree: head and fused-head
//! constituents head their sisters, and flat (headless) structures fall
//! back to their first element, matching the UD convention. Gaps carry no
//! dependency node.

use std::collections::BTreeMap;

use crate::align::TokenAlignment;
use crate::conllu::ConlluSentence;
use crate::tree::{CgelNode, CgelTree, NodeKind, NodePath};

/// Heads over the lexeme sequence: `heads[i]` is the 1-based head of token
/// `i + 1`, with 0 for the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepGraph {
    pub heads: Vec<usize>,
}

impl DepGraph {
    /// 1-based index of the root token, if the graph is nonempty.
    pub fn root(&self) -> Option<usize> {
        self.heads.iter().position(|&h| h == 0).map(|i| i + 1)
    }

    pub fn root_count(&self) -> usize {
        self.heads.iter().filter(|&&h| h == 0).count()
    }

    /// True when every chain of heads reaches the root without cycling.
    pub fn is_acyclic(&self) -> bool {
        let n = self.heads.len();
        for start in 1..=n {
            let mut cur = start;
            let mut steps = 0;
            while cur != 0 {
                cur = self.heads[cur - 1];
                steps += 1;
                if steps > n {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeadError {
    #[error("no resolvable lexical head for node at {path}")]
    Unresolvable { path: NodePath },
}

/// Extracts the dependency graph of a tree by the head-percolation rule:
/// each phrase's lexical head is its head (or fused-head) child's lexical
/// head, or the first child's in headless structures; every other child
/// depends on it. Gaps are skipped.
pub fn extract_heads(tree: &CgelTree) -> Result<DepGraph, HeadError> {
    let mut heads = vec![0usize; tree.lexeme_count()];
    let mut counter = 0usize;
    let root_head = resolve(&tree.root, &NodePath::root(), &mut counter, &mut heads)?;
    match root_head {
        Some(idx) => heads[idx - 1] = 0,
        None => {
            return Err(HeadError::Unresolvable {
                path: NodePath::root(),
            })
        }
    }
    Ok(DepGraph { heads })
}

/// Returns the node's lexical head as a 1-based token index (`None` for a
/// gap), assigning heads to all non-head material inside the node.
fn resolve(
    node: &CgelNode,
    path: &NodePath,
    counter: &mut usize,
    heads: &mut Vec<usize>,
) -> Result<Option<usize>, HeadError> {
    match &node.kind {
        NodeKind::Lexeme { .. } => {
            *counter += 1;
            Ok(Some(*counter))
        }
        NodeKind::Gap => Ok(None),
        NodeKind::Phrase { children, .. } => {
            let mut child_heads: Vec<Option<usize>> = Vec::with_capacity(children.len());
            for (i, (_, child)) in children.iter().enumerate() {
                child_heads.push(resolve(child, &path.child(i), counter, heads)?);
            }
            // The designated child: the unique head-bearing one, or the
            // first child in flat structures.
            let designated = children
                .iter()
                .position(|(f, _)| f.bears_head())
                .unwrap_or(0);
            let lexical_head = child_heads[designated].ok_or(HeadError::Unresolvable {
                path: path.clone(),
            })?;
            for (i, child_head) in child_heads.iter().enumerate() {
                if i != designated {
                    if let Some(dependent) = child_head {
                        heads[dependent - 1] = lexical_head;
                    }
                }
            }
            Ok(Some(lexical_head))
        }
    }
}

/// Counts aligned token pairs whose heads also form an aligned pair.
/// Returns (agreeing, total). When `count_root_match` is set (the default
/// elsewhere), a root on both sides counts as agreement.
pub fn head_agreement(
    cgel: &DepGraph,
    ud: &ConlluSentence,
    alignment: &TokenAlignment,
    count_root_match: bool,
) -> (usize, usize) {
    let ud_heads: BTreeMap<usize, usize> = ud.tokens().map(|t| (t.index, t.head)).collect();
    let mut agree = 0usize;
    let mut total = 0usize;
    for p in &alignment.pairs {
        let cgel_head = match cgel.heads.get(p.cgel) {
            Some(h) => *h,
            None => continue,
        };
        let ud_head = match ud_heads.get(&(p.other + 1)) {
            Some(h) => *h,
            None => continue,
        };
        total += 1;
        let agrees = if cgel_head == 0 || ud_head == 0 {
            cgel_head == 0 && ud_head == 0 && count_root_match
        } else {
            alignment.contains(cgel_head - 1, ud_head - 1)
        };
        if agrees {
            agree += 1;
        }
    }
    (agree, total)
}

/// Head agreement broken down by the UD token's deprel.
pub fn head_agreement_by_deprel(
    cgel: &DepGraph,
    ud: &ConlluSentence,
    alignment: &TokenAlignment,
    count_root_match: bool,
    acc: &mut BTreeMap<String, (usize, usize)>,
) {
    let ud_tokens: BTreeMap<usize, (&str, usize)> = ud
        .tokens()
        .map(|t| (t.index, (t.deprel.as_str(), t.head)))
        .collect();
    for p in &alignment.pairs {
        let cgel_head = match cgel.heads.get(p.cgel) {
            Some(h) => *h,
            None => continue,
        };
        let (deprel, ud_head) = match ud_tokens.get(&(p.other + 1)) {
            Some(v) => *v,
            None => continue,
        };
        let agrees = if cgel_head == 0 || ud_head == 0 {
            cgel_head == 0 && ud_head == 0 && count_root_match
        } else {
            alignment.contains(cgel_head - 1, ud_head - 1)
        };
        let entry = acc.entry(deprel.to_string()).or_insert((0, 0));
        entry.1 += 1;
        if agrees {
            entry.0 += 1;
        }
    }
}
