//! The CGEL tree data model: POS tags, phrasal categories, grammatical
//! functions, nodes, and whole trees.
//!
//! Trees are immutable after construction; everything here is a pure
//! accessor, so per-tree processing can be parallelized freely.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// The 11-tag part-of-speech inventory. There is deliberately no
/// punctuation tag: punctuation tokens do not occur in the trees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PosTag {
    N,
    NPro,
    V,
    VAux,
    P,
    D,
    Adj,
    Adv,
    Sdr,
    Coordinator,
    Int,
}

impl PosTag {
    pub const ALL: [PosTag; 11] = [
        PosTag::N,
        PosTag::NPro,
        PosTag::V,
        PosTag::VAux,
        PosTag::P,
        PosTag::D,
        PosTag::Adj,
        PosTag::Adv,
        PosTag::Sdr,
        PosTag::Coordinator,
        PosTag::Int,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            PosTag::N => "N",
            PosTag::NPro => "N_pro",
            PosTag::V => "V",
            PosTag::VAux => "V_aux",
            PosTag::P => "P",
            PosTag::D => "D",
            PosTag::Adj => "Adj",
            PosTag::Adv => "Adv",
            PosTag::Sdr => "Sdr",
            PosTag::Coordinator => "Coordinator",
            PosTag::Int => "Int",
        }
    }

    pub fn parse(s: &str) -> Option<PosTag> {
        Self::ALL.iter().copied().find(|t| t.as_str() == s)
    }

    /// The phrasal category this tag projects, if any. Subordinators and
    /// coordinators project no phrase; they only occur as markers.
    pub fn projects(&self) -> Option<BaseCategory> {
        match self {
            PosTag::N | PosTag::NPro => Some(BaseCategory::Nom),
            PosTag::V | PosTag::VAux => Some(BaseCategory::VP),
            PosTag::P => Some(BaseCategory::PP),
            PosTag::D => Some(BaseCategory::DP),
            PosTag::Adj => Some(BaseCategory::AdjP),
            PosTag::Adv => Some(BaseCategory::AdvP),
            PosTag::Int => Some(BaseCategory::IntP),
            PosTag::Sdr | PosTag::Coordinator => None,
        }
    }
}

impl fmt::Display for PosTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Closed inventory of base phrasal categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BaseCategory {
    NP,
    Nom,
    VP,
    Clause,
    ClauseRel,
    PP,
    DP,
    AdjP,
    AdvP,
    IntP,
    Coordination,
}

impl BaseCategory {
    pub const ALL: [BaseCategory; 11] = [
        BaseCategory::NP,
        BaseCategory::Nom,
        BaseCategory::VP,
        BaseCategory::Clause,
        BaseCategory::ClauseRel,
        BaseCategory::PP,
        BaseCategory::DP,
        BaseCategory::AdjP,
        BaseCategory::AdvP,
        BaseCategory::IntP,
        BaseCategory::Coordination,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            BaseCategory::NP => "NP",
            BaseCategory::Nom => "Nom",
            BaseCategory::VP => "VP",
            BaseCategory::Clause => "Clause",
            BaseCategory::ClauseRel => "Clause_rel",
            BaseCategory::PP => "PP",
            BaseCategory::DP => "DP",
            BaseCategory::AdjP => "AdjP",
            BaseCategory::AdvP => "AdvP",
            BaseCategory::IntP => "IntP",
            BaseCategory::Coordination => "Coordination",
        }
    }

    pub fn parse(s: &str) -> Option<BaseCategory> {
        Self::ALL.iter().copied().find(|c| c.as_str() == s)
    }
}

impl fmt::Display for BaseCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A phrasal category: either one of the base categories or a nonce
/// combination such as `NP+PP`, the headless ad-hoc constituents that show
/// up in gapped coordination and supplement-like verbless constructions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PhrasalCategory {
    Base(BaseCategory),
    Nonce(Vec<BaseCategory>),
}

/// A nonce category needs at least two components.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("nonce category needs at least two components, got {0}")]
pub struct NonceArityError(pub usize);

impl PhrasalCategory {
    pub fn base(c: BaseCategory) -> Self {
        PhrasalCategory::Base(c)
    }

    pub fn nonce(components: Vec<BaseCategory>) -> Result<Self, NonceArityError> {
        if components.len() < 2 {
            return Err(NonceArityError(components.len()));
        }
        Ok(PhrasalCategory::Nonce(components))
    }

    pub fn is_nonce(&self) -> bool {
        matches!(self, PhrasalCategory::Nonce(_))
    }

    pub fn as_base(&self) -> Option<BaseCategory> {
        match self {
            PhrasalCategory::Base(b) => Some(*b),
            PhrasalCategory::Nonce(_) => None,
        }
    }

    /// Parses `NP`, `Clause_rel`, `NP+PP`, ... Returns `None` for anything
    /// outside the inventory.
    pub fn parse(s: &str) -> Option<PhrasalCategory> {
        if let Some(base) = BaseCategory::parse(s) {
            return Some(PhrasalCategory::Base(base));
        }
        if s.contains('+') {
            let parts: Option<Vec<BaseCategory>> = s.split('+').map(BaseCategory::parse).collect();
            let parts = parts?;
            return PhrasalCategory::nonce(parts).ok();
        }
        None
    }
}

impl fmt::Display for PhrasalCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhrasalCategory::Base(b) => f.write_str(b.as_str()),
            PhrasalCategory::Nonce(parts) => {
                let mut first = true;
                for p in parts {
                    if !first {
                        f.write_str("+")?;
                    }
                    f.write_str(p.as_str())?;
                    first = false;
                }
                Ok(())
            }
        }
    }
}

/// Grammatical functions labelling parent→child edges.
///
/// The last three variants are the clause-head subtypes that the treebank
/// retired in favour of plain `Head`. The reader still accepts them so that
/// the validator can report them (rule FUNC-1) instead of choking on legacy
/// material; they are not part of the function hierarchy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GrammaticalFunction {
    Head,
    DetHead,
    ModHead,
    HeadPrenucleus,
    Comp,
    PredComp,
    ExtraposedSubj,
    ExtraposedObj,
    DisplacedSubj,
    Obj,
    ObjDir,
    ObjInd,
    Particle,
    CompInd,
    Prenucleus,
    Postnucleus,
    Subj,
    Marker,
    Det,
    Coordinate,
    Mod,
    Supplement,
    Flat,
    Nucleus,
    Predicate,
    Predicator,
}

impl GrammaticalFunction {
    /// The canonical inventory (retired subtypes excluded).
    pub const CANONICAL: [GrammaticalFunction; 23] = [
        GrammaticalFunction::Head,
        GrammaticalFunction::DetHead,
        GrammaticalFunction::ModHead,
        GrammaticalFunction::HeadPrenucleus,
        GrammaticalFunction::Comp,
        GrammaticalFunction::PredComp,
        GrammaticalFunction::ExtraposedSubj,
        GrammaticalFunction::ExtraposedObj,
        GrammaticalFunction::DisplacedSubj,
        GrammaticalFunction::Obj,
        GrammaticalFunction::ObjDir,
        GrammaticalFunction::ObjInd,
        GrammaticalFunction::Particle,
        GrammaticalFunction::CompInd,
        GrammaticalFunction::Prenucleus,
        GrammaticalFunction::Postnucleus,
        GrammaticalFunction::Subj,
        GrammaticalFunction::Marker,
        GrammaticalFunction::Det,
        GrammaticalFunction::Coordinate,
        GrammaticalFunction::Mod,
        GrammaticalFunction::Supplement,
        GrammaticalFunction::Flat,
    ];

    const RETIRED: [GrammaticalFunction; 3] = [
        GrammaticalFunction::Nucleus,
        GrammaticalFunction::Predicate,
        GrammaticalFunction::Predicator,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            GrammaticalFunction::Head => "Head",
            GrammaticalFunction::DetHead => "Det-Head",
            GrammaticalFunction::ModHead => "Mod-Head",
            GrammaticalFunction::HeadPrenucleus => "Head-Prenucleus",
            GrammaticalFunction::Comp => "Comp",
            GrammaticalFunction::PredComp => "PredComp",
            GrammaticalFunction::ExtraposedSubj => "ExtraposedSubj",
            GrammaticalFunction::ExtraposedObj => "ExtraposedObj",
            GrammaticalFunction::DisplacedSubj => "DisplacedSubj",
            GrammaticalFunction::Obj => "Obj",
            GrammaticalFunction::ObjDir => "Obj-dir",
            GrammaticalFunction::ObjInd => "Obj-ind",
            GrammaticalFunction::Particle => "Particle",
            GrammaticalFunction::CompInd => "Comp-ind",
            GrammaticalFunction::Prenucleus => "Prenucleus",
            GrammaticalFunction::Postnucleus => "Postnucleus",
            GrammaticalFunction::Subj => "Subj",
            GrammaticalFunction::Marker => "Marker",
            GrammaticalFunction::Det => "Det",
            GrammaticalFunction::Coordinate => "Coordinate",
            GrammaticalFunction::Mod => "Mod",
            GrammaticalFunction::Supplement => "Supplement",
            GrammaticalFunction::Flat => "Flat",
            GrammaticalFunction::Nucleus => "Nucleus",
            GrammaticalFunction::Predicate => "Predicate",
            GrammaticalFunction::Predicator => "Predicator",
        }
    }

    pub fn parse(s: &str) -> Option<GrammaticalFunction> {
        Self::CANONICAL
            .iter()
            .chain(Self::RETIRED.iter())
            .copied()
            .find(|f| f.as_str() == s)
    }

    /// The two functions a fused label combines, e.g. Det-Head = Det ⊕ Head.
    pub fn fused_components(&self) -> Option<(GrammaticalFunction, GrammaticalFunction)> {
        match self {
            GrammaticalFunction::DetHead => {
                Some((GrammaticalFunction::Det, GrammaticalFunction::Head))
            }
            GrammaticalFunction::ModHead => {
                Some((GrammaticalFunction::Mod, GrammaticalFunction::Head))
            }
            GrammaticalFunction::HeadPrenucleus => {
                Some((GrammaticalFunction::Head, GrammaticalFunction::Prenucleus))
            }
            _ => None,
        }
    }

    pub fn is_fused(&self) -> bool {
        self.fused_components().is_some()
    }

    /// True for `Head`, the fused `*-Head` variants, and the retired head
    /// subtypes: anything that designates its child as the head of the phrase.
    pub fn bears_head(&self) -> bool {
        matches!(
            self,
            GrammaticalFunction::Head
                | GrammaticalFunction::DetHead
                | GrammaticalFunction::ModHead
                | GrammaticalFunction::HeadPrenucleus
                | GrammaticalFunction::Nucleus
                | GrammaticalFunction::Predicate
                | GrammaticalFunction::Predicator
        )
    }

    pub fn is_retired(&self) -> bool {
        Self::RETIRED.contains(self)
    }
}

impl fmt::Display for GrammaticalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What a node is: an internal phrase, an overt lexeme, or a gap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum NodeKind {
    Phrase {
        category: PhrasalCategory,
        children: Vec<(GrammaticalFunction, CgelNode)>,
    },
    Lexeme {
        pos: PosTag,
        /// Surface form. May contain internal spaces: multi-token names like
        /// "Pierre Vinken" are single lexical items.
        form: String,
        lemma: Option<String>,
        /// Corrected form when the source text is ungrammatical.
        correction: Option<String>,
    },
    Gap,
}

/// One node of a CGEL tree. `coindex` ties a gap to its overt antecedent
/// (both carry the same label).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CgelNode {
    pub kind: NodeKind,
    pub coindex: Option<String>,
}

impl CgelNode {
    pub fn phrase(category: PhrasalCategory, children: Vec<(GrammaticalFunction, CgelNode)>) -> Self {
        CgelNode {
            kind: NodeKind::Phrase { category, children },
            coindex: None,
        }
    }

    pub fn lexeme(pos: PosTag, form: &str) -> Self {
        CgelNode {
            kind: NodeKind::Lexeme {
                pos,
                form: form.to_string(),
                lemma: None,
                correction: None,
            },
            coindex: None,
        }
    }

    pub fn gap() -> Self {
        CgelNode {
            kind: NodeKind::Gap,
            coindex: None,
        }
    }

    pub fn with_coindex(mut self, label: &str) -> Self {
        self.coindex = Some(label.to_string());
        self
    }

    pub fn is_gap(&self) -> bool {
        matches!(self.kind, NodeKind::Gap)
    }

    pub fn is_lexeme(&self) -> bool {
        matches!(self.kind, NodeKind::Lexeme { .. })
    }

    pub fn is_phrase(&self) -> bool {
        matches!(self.kind, NodeKind::Phrase { .. })
    }

    /// Children with their edge functions; empty for terminals.
    pub fn children(&self) -> &[(GrammaticalFunction, CgelNode)] {
        match &self.kind {
            NodeKind::Phrase { children, .. } => children,
            _ => &[],
        }
    }

    pub fn category(&self) -> Option<&PhrasalCategory> {
        match &self.kind {
            NodeKind::Phrase { category, .. } => Some(category),
            _ => None,
        }
    }

    pub fn pos(&self) -> Option<PosTag> {
        match &self.kind {
            NodeKind::Lexeme { pos, .. } => Some(*pos),
            _ => None,
        }
    }

    pub fn form(&self) -> Option<&str> {
        match &self.kind {
            NodeKind::Lexeme { form, .. } => Some(form),
            _ => None,
        }
    }

    /// Lemma with the usual fallback: the lowercased form.
    pub fn lemma_or_form(&self) -> Option<String> {
        match &self.kind {
            NodeKind::Lexeme { form, lemma, .. } => Some(
                lemma
                    .clone()
                    .unwrap_or_else(|| form.to_lowercase()),
            ),
            _ => None,
        }
    }

    /// Whitespace-separated orthographic words of a lexeme form, used when
    /// aligning against tokenized corpora.
    pub fn words(&self) -> Vec<&str> {
        match &self.kind {
            NodeKind::Lexeme { form, .. } => form.split_whitespace().collect(),
            _ => Vec::new(),
        }
    }
}

/// Child-index path from the root to a node. The empty path is the root.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct NodePath(pub Vec<usize>);

impl NodePath {
    pub fn root() -> Self {
        NodePath(Vec::new())
    }

    pub fn child(&self, index: usize) -> Self {
        let mut v = self.0.clone();
        v.push(index);
        NodePath(v)
    }

    /// Follows the path from `root`; `None` if any index is out of range.
    pub fn resolve<'t>(&self, root: &'t CgelNode) -> Option<&'t CgelNode> {
        let mut node = root;
        for &i in &self.0 {
            node = &node.children().get(i)?.1;
        }
        Some(node)
    }
}

impl fmt::Display for NodePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        let mut first = true;
        for i in &self.0 {
            if !first {
                f.write_str(".")?;
            }
            write!(f, "{}", i)?;
            first = false;
        }
        Ok(())
    }
}

/// A rooted tree with its identifier and (optionally) the raw source text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CgelTree {
    pub id: String,
    pub source_text: Option<String>,
    pub root: CgelNode,
}

/// A terminal (lexeme or gap) with its path and in-order position.
#[derive(Debug, Clone, Copy)]
pub struct Terminal<'t> {
    pub node: &'t CgelNode,
    pub path_index: usize,
}

impl CgelTree {
    pub fn new(id: &str, root: CgelNode) -> Self {
        CgelTree {
            id: id.to_string(),
            source_text: None,
            root,
        }
    }

    /// Left-to-right in-order terminal sequence: lexemes and gaps, with gaps
    /// interleaved at their surface positions.
    pub fn terminals(&self) -> Vec<&CgelNode> {
        let mut out = Vec::new();
        collect_terminals(&self.root, &mut out);
        out
    }

    /// Terminals paired with their tree paths.
    pub fn terminals_with_paths(&self) -> Vec<(NodePath, &CgelNode)> {
        let mut out = Vec::new();
        collect_terminals_with_paths(&self.root, &NodePath::root(), &mut out);
        out
    }

    /// Surface forms of the lexeme terminals (gaps skipped).
    pub fn lexeme_forms(&self) -> Vec<String> {
        self.terminals()
            .into_iter()
            .filter_map(|t| t.form().map(str::to_string))
            .collect()
    }

    /// POS display strings of the lexeme terminals, in order.
    pub fn lexeme_pos_tags(&self) -> Vec<String> {
        self.terminals()
            .into_iter()
            .filter_map(|t| t.pos().map(|p| p.as_str().to_string()))
            .collect()
    }

    /// Number of lexeme terminals.
    pub fn lexeme_count(&self) -> usize {
        self.terminals().iter().filter(|t| t.is_lexeme()).count()
    }

    /// Number of gap terminals.
    pub fn gap_count(&self) -> usize {
        self.terminals().iter().filter(|t| t.is_gap()).count()
    }

    /// Inter-lexeme positions of the gaps, in terminal order: a gap at
    /// position `p` sits between the `p`-th and `p+1`-th lexeme (0 = before
    /// the first lexeme).
    pub fn gap_positions(&self) -> Vec<usize> {
        let mut positions = Vec::new();
        let mut lexemes_seen = 0usize;
        for t in self.terminals() {
            match t.kind {
                NodeKind::Lexeme { .. } => lexemes_seen += 1,
                NodeKind::Gap => positions.push(lexemes_seen),
                NodeKind::Phrase { .. } => {}
            }
        }
        positions
    }

    /// Every node paired with its path, pre-order.
    pub fn nodes_with_paths(&self) -> Vec<(NodePath, &CgelNode)> {
        let mut out = Vec::new();
        collect_nodes(&self.root, &NodePath::root(), &mut out);
        out
    }
}

fn collect_terminals<'t>(node: &'t CgelNode, out: &mut Vec<&'t CgelNode>) {
    match &node.kind {
        NodeKind::Phrase { children, .. } => {
            for (_, child) in children {
                collect_terminals(child, out);
            }
        }
        NodeKind::Lexeme { .. } | NodeKind::Gap => out.push(node),
    }
}

fn collect_terminals_with_paths<'t>(
    node: &'t CgelNode,
    path: &NodePath,
    out: &mut Vec<(NodePath, &'t CgelNode)>,
) {
    match &node.kind {
        NodeKind::Phrase { children, .. } => {
            for (i, (_, child)) in children.iter().enumerate() {
                collect_terminals_with_paths(child, &path.child(i), out);
            }
        }
        NodeKind::Lexeme { .. } | NodeKind::Gap => out.push((path.clone(), node)),
    }
}

fn collect_nodes<'t>(node: &'t CgelNode, path: &NodePath, out: &mut Vec<(NodePath, &'t CgelNode)>) {
    out.push((path.clone(), node));
    for (i, (_, child)) in node.children().iter().enumerate() {
        collect_nodes(child, &path.child(i), out);
    }
}

/// Label census over a set of trees. Gaps are counted separately from POS
/// tags. Additive: the census of a concatenation is the sum of the censuses.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Census {
    pub trees: u64,
    pub lexemes: u64,
    pub gaps: u64,
    pub pos: BTreeMap<PosTag, u64>,
    pub categories: BTreeMap<PhrasalCategory, u64>,
    pub functions: BTreeMap<GrammaticalFunction, u64>,
}

impl Census {
    pub fn add_tree(&mut self, tree: &CgelTree) {
        self.trees += 1;
        self.add_node(&tree.root);
    }

    fn add_node(&mut self, node: &CgelNode) {
        match &node.kind {
            NodeKind::Phrase { category, children } => {
                *self.categories.entry(category.clone()).or_insert(0) += 1;
                for (func, child) in children {
                    *self.functions.entry(*func).or_insert(0) += 1;
                    self.add_node(child);
                }
            }
            NodeKind::Lexeme { pos, .. } => {
                self.lexemes += 1;
                *self.pos.entry(*pos).or_insert(0) += 1;
            }
            NodeKind::Gap => self.gaps += 1,
        }
    }

    pub fn merge(&mut self, other: &Census) {
        self.trees += other.trees;
        self.lexemes += other.lexemes;
        self.gaps += other.gaps;
        for (k, v) in &other.pos {
            *self.pos.entry(*k).or_insert(0) += v;
        }
        for (k, v) in &other.categories {
            *self.categories.entry(k.clone()).or_insert(0) += v;
        }
        for (k, v) in &other.functions {
            *self.functions.entry(*k).or_insert(0) += v;
        }
    }
}

/// Counts of POS tags, phrasal categories, grammatical functions, and gaps
/// over a collection of trees.
pub fn census<'t>(trees: impl IntoIterator<Item = &'t CgelTree>) -> Census {
    let mut c = Census::default();
    for t in trees {
        c.add_tree(t);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn liz_nom() -> CgelNode {
        CgelNode::phrase(
            PhrasalCategory::Base(BaseCategory::Nom),
            vec![(GrammaticalFunction::Head, CgelNode::lexeme(PosTag::N, "Liz"))],
        )
    }

    #[test]
    fn singleton_terminals() {
        let tree = CgelTree::new("t", CgelNode::lexeme(PosTag::N, "Liz"));
        assert_eq!(tree.terminals().len(), 1);
        assert_eq!(tree.lexeme_forms(), vec!["Liz"]);
    }

    #[test]
    fn terminals_keep_surface_order() {
        let root = CgelNode::phrase(
            PhrasalCategory::Base(BaseCategory::Clause),
            vec![
                (
                    GrammaticalFunction::Subj,
                    CgelNode::phrase(PhrasalCategory::Base(BaseCategory::NP), vec![(
                        GrammaticalFunction::Head,
                        liz_nom(),
                    )]),
                ),
                (
                    GrammaticalFunction::Head,
                    CgelNode::phrase(
                        PhrasalCategory::Base(BaseCategory::VP),
                        vec![
                            (GrammaticalFunction::Head, CgelNode::lexeme(PosTag::V, "bought")),
                            (GrammaticalFunction::Obj, CgelNode::gap().with_coindex("x")),
                        ],
                    ),
                ),
            ],
        );
        let tree = CgelTree::new("t", root);
        let forms: Vec<_> = tree
            .terminals()
            .iter()
            .map(|t| t.form().unwrap_or("GAP").to_string())
            .collect();
        assert_eq!(forms, vec!["Liz", "bought", "GAP"]);
        assert_eq!(tree.gap_positions(), vec![2]);
        assert_eq!(tree.lexeme_count(), 2);
        assert_eq!(tree.gap_count(), 1);
    }

    #[test]
    fn node_path_resolution() {
        let root = CgelNode::phrase(
            PhrasalCategory::Base(BaseCategory::NP),
            vec![(GrammaticalFunction::Head, liz_nom())],
        );
        let path = NodePath(vec![0, 0]);
        let node = path.resolve(&root).unwrap();
        assert_eq!(node.form(), Some("Liz"));
        assert!(NodePath(vec![0, 3]).resolve(&root).is_none());
        assert_eq!(path.to_string(), "0.0");
        assert_eq!(NodePath::root().to_string(), "root");
    }

    #[test]
    fn nonce_requires_two_components() {
        assert!(PhrasalCategory::nonce(vec![BaseCategory::NP]).is_err());
        let np_pp =
            PhrasalCategory::nonce(vec![BaseCategory::NP, BaseCategory::PP]).unwrap();
        assert_eq!(np_pp.to_string(), "NP+PP");
        assert_eq!(PhrasalCategory::parse("NP+PP"), Some(np_pp));
        assert_eq!(PhrasalCategory::parse("NP+"), None);
        assert_eq!(
            PhrasalCategory::parse("Clause_rel"),
            Some(PhrasalCategory::Base(BaseCategory::ClauseRel))
        );
    }

    #[test]
    fn pos_inventory_is_exactly_eleven() {
        assert_eq!(PosTag::ALL.len(), 11);
        for tag in PosTag::ALL {
            assert_eq!(PosTag::parse(tag.as_str()), Some(tag));
        }
        assert_eq!(PosTag::parse("Punct"), None);
    }

    #[test]
    fn fused_components_recorded() {
        use GrammaticalFunction::*;
        assert_eq!(DetHead.fused_components(), Some((Det, Head)));
        assert_eq!(ModHead.fused_components(), Some((Mod, Head)));
        assert_eq!(HeadPrenucleus.fused_components(), Some((Head, Prenucleus)));
        assert_eq!(Subj.fused_components(), None);
        assert!(DetHead.bears_head());
        assert!(Nucleus.bears_head());
        assert!(Nucleus.is_retired());
        assert!(!Head.is_retired());
    }

    #[test]
    fn census_is_additive() {
        let t1 = CgelTree::new(
            "a",
            CgelNode::phrase(
                PhrasalCategory::Base(BaseCategory::NP),
                vec![(GrammaticalFunction::Head, liz_nom())],
            ),
        );
        let t2 = CgelTree::new("b", CgelNode::lexeme(PosTag::V, "run"));
        let combined = census([&t1, &t2]);
        let mut summed = census([&t1]);
        summed.merge(&census([&t2]));
        assert_eq!(combined, summed);
        assert_eq!(combined.trees, 2);
        assert_eq!(combined.pos[&PosTag::N], 1);
        assert_eq!(combined.pos[&PosTag::V], 1);
    }

    #[test]
    fn census_empty_is_zero() {
        let c = census(std::iter::empty());
        assert_eq!(c.trees, 0);
        assert_eq!(c.lexemes, 0);
        assert_eq!(c.gaps, 0);
        assert!(c.pos.is_empty());
    }
}
