//! Penn-style bracketed tree reader, keeping function tags and numeric
//! indices embedded in labels (`NP-SBJ-1`) and classifying `-NONE-` empty
//! elements (`*T*-1`, `*RNR*-2`, `*PRO*`, `*`, `0`, ...).

use std::fmt;

/// Classification of a `-NONE-` leaf, parsed from its form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EmptyKind {
    /// `*T*`, trace of WH-movement and similar.
    Trace,
    /// `*RNR*`, right node raising.
    RightNodeRaising,
    /// `*PRO*`, null subject of a nonfinite clause.
    Pro,
    /// Bare `*`, NP-trace/controlled null.
    Star,
    /// `0`, null complementizer.
    Zero,
    Other(String),
}

impl EmptyKind {
    pub fn as_str(&self) -> &str {
        match self {
            EmptyKind::Trace => "*T*",
            EmptyKind::RightNodeRaising => "*RNR*",
            EmptyKind::Pro => "*PRO*",
            EmptyKind::Star => "*",
            EmptyKind::Zero => "0",
            EmptyKind::Other(s) => s,
        }
    }
}

impl fmt::Display for EmptyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PtbNode {
    NonTerminal {
        /// Label verbatim, function tags and indices included.
        label: String,
        children: Vec<PtbNode>,
    },
    Leaf {
        pos: String,
        form: String,
    },
    Empty {
        kind: EmptyKind,
        coindex: Option<u32>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PtbTree {
    pub root: PtbNode,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PtbError {
    #[error("line {line}, col {col}: unbalanced bracket")]
    Unbalanced { line: usize, col: usize },
    #[error("line {line}, col {col}: empty tree")]
    EmptyTree { line: usize, col: usize },
    #[error("line {line}, col {col}: bare word `{word}` outside a preterminal")]
    BareWord {
        line: usize,
        col: usize,
        word: String,
    },
}

/// Splits `*T*-1` into kind `*T*` and coindex 1.
fn classify_empty(form: &str) -> (EmptyKind, Option<u32>) {
    let (core, coindex) = match form.rfind('-') {
        Some(i) if i + 1 < form.len() && form[i + 1..].chars().all(|c| c.is_ascii_digit()) => {
            (&form[..i], form[i + 1..].parse::<u32>().ok())
        }
        _ => (form, None),
    };
    let kind = match core {
        "*T*" => EmptyKind::Trace,
        "*RNR*" => EmptyKind::RightNodeRaising,
        "*PRO*" => EmptyKind::Pro,
        "*" => EmptyKind::Star,
        "0" => EmptyKind::Zero,
        other => EmptyKind::Other(other.to_string()),
    };
    (kind, coindex)
}

#[derive(Debug)]
enum SexpToken {
    Open(usize, usize),
    Close(usize, usize),
    Atom(usize, usize, String),
}

fn tokenize(input: &str) -> Vec<SexpToken> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut atom = String::new();
    let mut atom_pos = (1usize, 1usize);
    for c in input.chars() {
        match c {
            '(' | ')' | ' ' | '\t' | '\n' | '\r' => {
                if !atom.is_empty() {
                    out.push(SexpToken::Atom(atom_pos.0, atom_pos.1, std::mem::take(&mut atom)));
                }
                if c == '(' {
                    out.push(SexpToken::Open(line, col));
                } else if c == ')' {
                    out.push(SexpToken::Close(line, col));
                }
            }
            _ => {
                if atom.is_empty() {
                    atom_pos = (line, col);
                }
                atom.push(c);
            }
        }
        if c == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    if !atom.is_empty() {
        out.push(SexpToken::Atom(atom_pos.0, atom_pos.1, atom));
    }
    out
}

/// Intermediate s-expression form.
enum Sexp {
    Atom(usize, usize, String),
    List(usize, usize, Vec<Sexp>),
}

struct SexpParser {
    tokens: Vec<SexpToken>,
    pos: usize,
}

impl SexpParser {
    fn parse_one(&mut self) -> Result<Sexp, PtbError> {
        match self.tokens.get(self.pos) {
            Some(SexpToken::Open(l, c)) => {
                let (l, c) = (*l, *c);
                self.pos += 1;
                let mut items = Vec::new();
                loop {
                    match self.tokens.get(self.pos) {
                        Some(SexpToken::Close(..)) => {
                            self.pos += 1;
                            return Ok(Sexp::List(l, c, items));
                        }
                        Some(_) => items.push(self.parse_one()?),
                        None => return Err(PtbError::Unbalanced { line: l, col: c }),
                    }
                }
            }
            Some(SexpToken::Atom(l, c, s)) => {
                let item = Sexp::Atom(*l, *c, s.clone());
                self.pos += 1;
                Ok(item)
            }
            Some(SexpToken::Close(l, c)) => Err(PtbError::Unbalanced { line: *l, col: *c }),
            None => Err(PtbError::Unbalanced { line: 1, col: 1 }),
        }
    }
}

fn sexp_to_node(sexp: &Sexp) -> Result<PtbNode, PtbError> {
    match sexp {
        Sexp::Atom(l, c, word) => Err(PtbError::BareWord {
            line: *l,
            col: *c,
            word: word.clone(),
        }),
        Sexp::List(l, c, items) => {
            let (label, rest) = match items.split_first() {
                Some((Sexp::Atom(_, _, label), rest)) => (label.clone(), rest),
                _ => return Err(PtbError::EmptyTree { line: *l, col: *c }),
            };
            if rest.is_empty() {
                return Err(PtbError::EmptyTree { line: *l, col: *c });
            }
            // Preterminal: single atom child.
            if let [Sexp::Atom(_, _, form)] = rest {
                if label == "-NONE-" {
                    let (kind, coindex) = classify_empty(form);
                    return Ok(PtbNode::Empty { kind, coindex });
                }
                return Ok(PtbNode::Leaf {
                    pos: label,
                    form: form.clone(),
                });
            }
            let children: Result<Vec<PtbNode>, PtbError> = rest.iter().map(sexp_to_node).collect();
            Ok(PtbNode::NonTerminal {
                label,
                children: children?,
            })
        }
    }
}

/// Reads one or more trees. Each top-level group may optionally be an
/// unlabeled wrapper `( (S ...) )` as in `.mrg` files.
pub fn read_ptb(input: &str) -> Result<Vec<PtbTree>, PtbError> {
    let mut parser = SexpParser {
        tokens: tokenize(input),
        pos: 0,
    };
    let mut trees = Vec::new();
    while parser.pos < parser.tokens.len() {
        let sexp = parser.parse_one()?;
        match &sexp {
            Sexp::List(l, c, items) => {
                if items.is_empty() {
                    return Err(PtbError::EmptyTree { line: *l, col: *c });
                }
                if matches!(items[0], Sexp::List(..)) {
                    // Unlabeled wrapper: every child is a tree.
                    for item in items {
                        trees.push(PtbTree {
                            root: sexp_to_node(item)?,
                        });
                    }
                } else {
                    trees.push(PtbTree {
                        root: sexp_to_node(&sexp)?,
                    });
                }
            }
            Sexp::Atom(l, c, word) => {
                return Err(PtbError::BareWord {
                    line: *l,
                    col: *c,
                    word: word.clone(),
                })
            }
        }
    }
    Ok(trees)
}

/// A surface leaf with its 0-based token index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PtbToken<'t> {
    pub index: usize,
    pub pos: &'t str,
    pub form: &'t str,
}

/// An empty element and its inter-token position: `position = i` means the
/// empty sits between surface token `i-1` and `i` (0 = before the first
/// token, n = after the last).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionedEmpty {
    pub kind: EmptyKind,
    pub coindex: Option<u32>,
    pub position: usize,
}

/// Surface tokens plus empties with inter-token positions, in tree order.
pub fn ptb_tokens(tree: &PtbTree) -> (Vec<PtbToken<'_>>, Vec<PositionedEmpty>) {
    let mut tokens = Vec::new();
    let mut empties = Vec::new();
    walk_tokens(&tree.root, &mut tokens, &mut empties);
    (tokens, empties)
}

fn walk_tokens<'t>(
    node: &'t PtbNode,
    tokens: &mut Vec<PtbToken<'t>>,
    empties: &mut Vec<PositionedEmpty>,
) {
    match node {
        PtbNode::NonTerminal { children, .. } => {
            for child in children {
                walk_tokens(child, tokens, empties);
            }
        }
        PtbNode::Leaf { pos, form } => {
            let index = tokens.len();
            tokens.push(PtbToken { index, pos, form });
        }
        PtbNode::Empty { kind, coindex } => empties.push(PositionedEmpty {
            kind: kind.clone(),
            coindex: *coindex,
            position: tokens.len(),
        }),
    }
}

/// All `-NONE-` leaves of a tree, in order.
pub fn empties(tree: &PtbTree) -> Vec<(EmptyKind, Option<u32>)> {
    ptb_tokens(tree)
        .1
        .into_iter()
        .map(|e| (e.kind, e.coindex))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_with_coindex() {
        let trees = read_ptb("(NP (-NONE- *T*-1))").unwrap();
        assert_eq!(trees.len(), 1);
        match &trees[0].root {
            PtbNode::NonTerminal { label, children } => {
                assert_eq!(label, "NP");
                assert_eq!(
                    children[0],
                    PtbNode::Empty {
                        kind: EmptyKind::Trace,
                        coindex: Some(1)
                    }
                );
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn labels_keep_function_tags() {
        let trees = read_ptb("(S (NP-SBJ (NNP Liz)) (VP (VBD bought)))").unwrap();
        let (tokens, empties) = ptb_tokens(&trees[0]);
        assert_eq!(tokens.len(), 2);
        assert!(empties.is_empty());
        match &trees[0].root {
            PtbNode::NonTerminal { children, .. } => match &children[0] {
                PtbNode::NonTerminal { label, .. } => assert_eq!(label, "NP-SBJ"),
                other => panic!("unexpected {other:?}"),
            },
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn empty_kinds() {
        assert_eq!(classify_empty("*T*-3"), (EmptyKind::Trace, Some(3)));
        assert_eq!(
            classify_empty("*RNR*-2"),
            (EmptyKind::RightNodeRaising, Some(2))
        );
        assert_eq!(classify_empty("*PRO*"), (EmptyKind::Pro, None));
        assert_eq!(classify_empty("*"), (EmptyKind::Star, None));
        assert_eq!(classify_empty("0"), (EmptyKind::Zero, None));
        assert_eq!(
            classify_empty("*ICH*-4"),
            (EmptyKind::Other("*ICH*".to_string()), Some(4))
        );
    }

    #[test]
    fn initial_empty_is_at_position_zero() {
        let trees = read_ptb("(S (-NONE- *T*-1) (NNP Liz))").unwrap();
        let (tokens, empties) = ptb_tokens(&trees[0]);
        assert_eq!(tokens.len(), 1);
        assert_eq!(empties[0].position, 0);
        assert_eq!(empties[0].kind, EmptyKind::Trace);
    }

    #[test]
    fn final_empty_is_at_position_n() {
        let trees = read_ptb("(S (NNP Liz) (VP (VBD left) (-NONE- *)))").unwrap();
        let (tokens, empties) = ptb_tokens(&trees[0]);
        assert_eq!(tokens.len(), 2);
        assert_eq!(empties[0].position, 2);
    }

    #[test]
    fn medial_empty_matches_naive_enumeration() {
        let src = "(S (NP (NNP Liz)) (VP (VBD saw) (NP (-NONE- *T*-1)) (PP (IN at) (NP (NN noon)))))";
        let trees = read_ptb(src).unwrap();
        let (tokens, empties) = ptb_tokens(&trees[0]);
        // Naive check: count leaves before the empty in the flattened text.
        let flat: Vec<&str> = src
            .split_whitespace()
            .filter(|w| w.ends_with(')'))
            .collect();
        let mut surface_before = 0usize;
        for w in &flat {
            let w = w.trim_end_matches(')');
            if w == "*T*-1" {
                break;
            }
            surface_before += 1;
        }
        assert_eq!(empties[0].position, surface_before);
        assert_eq!(tokens.len(), 4);
        // Positions are monotone non-decreasing in traversal order.
        let positions: Vec<usize> = empties.iter().map(|e| e.position).collect();
        let mut sorted = positions.clone();
        sorted.sort();
        assert_eq!(positions, sorted);
    }

    #[test]
    fn wrapped_mrg_trees() {
        let src = "( (S (NNP Liz) (VBD left)) )\n( (S (NNP Al) (VBD stayed)) )";
        let trees = read_ptb(src).unwrap();
        assert_eq!(trees.len(), 2);
    }

    #[test]
    fn unbalanced_and_empty_inputs_error() {
        assert!(matches!(
            read_ptb("(S (NNP Liz)"),
            Err(PtbError::Unbalanced { .. })
        ));
        assert!(matches!(read_ptb("()"), Err(PtbError::EmptyTree { .. })));
        assert!(matches!(
            read_ptb("(S (NNP Liz) extra)"),
            Err(PtbError::BareWord { .. })
        ));
    }
}
