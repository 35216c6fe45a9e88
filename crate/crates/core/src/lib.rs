//! Toolkit for CGEL-formalism syntax trees: an in-memory model with the
//! function hierarchy, a round-tripping reader/writer for the PENMAN-like
//! textual notation, a structural validator, CoNLL-U and Penn-bracket
//! readers, monotone token and gap alignment, and the information-theoretic
//! comparison metrics (tag entropy, conditional entropy, POS confusion,
//! dependency-head extraction and agreement).

pub mod align;
pub mod compare;
pub mod conllu;
pub mod functions;
pub mod heads;
pub mod metrics;
pub mod notation;
pub mod ptb;
pub mod tree;
pub mod validate;

pub use align::{align_gaps, align_tokens, align_tree_tokens, AlignmentOptions, GapAlignment, TokenAlignment};
pub use compare::{compare_corpus, pair_with_conllu, CompareOptions, ComparisonReport, PairingMode};
pub use conllu::{read_conllu, write_conllu, ConlluSentence, ConlluToken};
pub use functions::{FunctionHierarchy, HierarchyNode};
pub use heads::{extract_heads, head_agreement, DepGraph};
pub use metrics::{entropy, pos_confusion, report_lexeme_tables, JointCounts, LexemeTables};
pub use notation::{
    parse_document, parse_document_with, parse_tree, serialize_document, serialize_tree,
    NotationDocument, ParseError, ParserOptions,
};
pub use ptb::{ptb_tokens, read_ptb, EmptyKind, PtbNode, PtbTree};
pub use tree::{
    census, BaseCategory, Census, CgelNode, CgelTree, GrammaticalFunction, NodeKind, NodePath,
    PhrasalCategory, PosTag,
};
pub use validate::{validate, validate_corpus, CorpusReport, RuleId, RuleProfile, Severity, Violation};
