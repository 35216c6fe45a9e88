//! Structural rule catalog. Each check is a named rule producing
//! [`Violation`]s; violations are data, never failures.
//!
//! Rules:
//! - HEAD-1: every phrase has exactly one head child, except coordination,
//!   nonce categories, and Flat-only constructions, which are headless.
//! - PROJ-1: projection chains (N under Nom, Nom heads NP, V heads VP, VP
//!   heads Clause, ...); Sdr and Coordinator project no phrase.
//! - FUNC-1: the retired Nucleus/Predicate/Predicator labels do not occur.
//! - GAP-1: every gap is coindexed with exactly one non-gap constituent in
//!   the same tree.
//! - COORD-1: Coordinate children occur only under Coordination.
//! - COORD-2: a Marker child has a sister bearing Head (nonce constituents
//!   exempt, being headless by design).
//! - COORD-3: a Coordination has at least two Coordinate children (warning
//!   when exactly one).
//! - ATTACH-1 (warning): complements are sisters of lexical heads, modifiers
//!   sisters of Nom/VP-type phrases.
//! - POS-1: no punctuation-only lexemes.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::tree::{
    BaseCategory, CgelNode, CgelTree, GrammaticalFunction, NodeKind, NodePath, PhrasalCategory,
    PosTag,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RuleId {
    Head1,
    Proj1,
    Func1,
    Gap1,
    Coord1,
    Coord2,
    Coord3,
    Attach1,
    Pos1,
}

impl RuleId {
    pub const ALL: [RuleId; 9] = [
        RuleId::Head1,
        RuleId::Proj1,
        RuleId::Func1,
        RuleId::Gap1,
        RuleId::Coord1,
        RuleId::Coord2,
        RuleId::Coord3,
        RuleId::Attach1,
        RuleId::Pos1,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            RuleId::Head1 => "HEAD-1",
            RuleId::Proj1 => "PROJ-1",
            RuleId::Func1 => "FUNC-1",
            RuleId::Gap1 => "GAP-1",
            RuleId::Coord1 => "COORD-1",
            RuleId::Coord2 => "COORD-2",
            RuleId::Coord3 => "COORD-3",
            RuleId::Attach1 => "ATTACH-1",
            RuleId::Pos1 => "POS-1",
        }
    }

    pub fn parse(s: &str) -> Option<RuleId> {
        Self::ALL.iter().copied().find(|r| r.as_str() == s)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Severity::Error => f.write_str("error"),
            Severity::Warning => f.write_str("warning"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: RuleId,
    pub tree_id: String,
    pub path: NodePath,
    pub message: String,
    pub severity: Severity,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}",
            self.tree_id, self.rule, self.severity, self.path, self.message
        )
    }
}

/// Which rules run. The default profile enables everything.
#[derive(Debug, Clone)]
pub struct RuleProfile {
    enabled: BTreeSet<RuleId>,
}

impl Default for RuleProfile {
    fn default() -> Self {
        Self::all()
    }
}

impl RuleProfile {
    pub fn all() -> Self {
        RuleProfile {
            enabled: RuleId::ALL.into_iter().collect(),
        }
    }

    pub fn only(rules: impl IntoIterator<Item = RuleId>) -> Self {
        RuleProfile {
            enabled: rules.into_iter().collect(),
        }
    }

    /// Accepts `all` or a comma-separated rule list (`HEAD-1,GAP-1`).
    pub fn parse(s: &str) -> Option<Self> {
        if s == "all" {
            return Some(Self::all());
        }
        let rules: Option<BTreeSet<RuleId>> =
            s.split(',').map(|p| RuleId::parse(p.trim())).collect();
        rules.map(|enabled| RuleProfile { enabled })
    }

    pub fn is_enabled(&self, rule: RuleId) -> bool {
        self.enabled.contains(&rule)
    }
}

/// Runs every enabled rule over the tree. An empty result means the tree
/// satisfies the profile.
pub fn validate(tree: &CgelTree, profile: &RuleProfile) -> Vec<Violation> {
    let mut ctx = Ctx {
        tree,
        profile,
        out: Vec::new(),
    };
    ctx.walk(&tree.root, &NodePath::root());
    if profile.is_enabled(RuleId::Gap1) {
        ctx.check_gaps();
    }
    ctx.out
        .sort_by(|a, b| (&a.path, a.rule).cmp(&(&b.path, b.rule)));
    ctx.out
}

struct Ctx<'t> {
    tree: &'t CgelTree,
    profile: &'t RuleProfile,
    out: Vec<Violation>,
}

impl<'t> Ctx<'t> {
    fn emit(&mut self, rule: RuleId, path: &NodePath, severity: Severity, message: String) {
        if self.profile.is_enabled(rule) {
            self.out.push(Violation {
                rule,
                tree_id: self.tree.id.clone(),
                path: path.clone(),
                message,
                severity,
            });
        }
    }

    fn walk(&mut self, node: &CgelNode, path: &NodePath) {
        match &node.kind {
            NodeKind::Phrase { category, children } => {
                self.check_phrase(node, category, children, path);
                for (i, (_, child)) in children.iter().enumerate() {
                    self.walk(child, &path.child(i));
                }
            }
            NodeKind::Lexeme { form, .. } => {
                if is_punctuation_only(form) {
                    self.emit(
                        RuleId::Pos1,
                        path,
                        Severity::Error,
                        format!("punctuation-only lexeme `{form}`"),
                    );
                }
            }
            NodeKind::Gap => {}
        }
    }

    fn check_phrase(
        &mut self,
        _node: &CgelNode,
        category: &PhrasalCategory,
        children: &[(GrammaticalFunction, CgelNode)],
        path: &NodePath,
    ) {
        let head_children: Vec<usize> = children
            .iter()
            .enumerate()
            .filter(|(_, (f, _))| f.bears_head())
            .map(|(i, _)| i)
            .collect();
        let headless_licensed = is_headless_licensed(category, children);

        // FUNC-1
        for (i, (f, _)) in children.iter().enumerate() {
            if f.is_retired() {
                self.emit(
                    RuleId::Func1,
                    &path.child(i),
                    Severity::Error,
                    format!("retired head subtype `{f}`; use Head"),
                );
            }
        }

        // HEAD-1
        if !headless_licensed && head_children.len() != 1 {
            self.emit(
                RuleId::Head1,
                path,
                Severity::Error,
                format!(
                    "phrase `{category}` has {} head children, expected exactly 1",
                    head_children.len()
                ),
            );
        }

        // PROJ-1 on the unique head edge.
        if head_children.len() == 1 {
            let head_index = head_children[0];
            let (func, head) = &children[head_index];
            self.check_projection(category, *func, head, &path.child(head_index));
        }

        // PROJ-1 lexeme placement: a projecting lexeme sits under the phrase
        // it projects, whatever its function.
        if !category.is_nonce() {
            for (i, (_, child)) in children.iter().enumerate() {
                if let NodeKind::Lexeme { pos, .. } = &child.kind {
                    if let Some(projected) = pos.projects() {
                        if category != &PhrasalCategory::Base(projected) {
                            self.emit(
                                RuleId::Proj1,
                                &path.child(i),
                                Severity::Error,
                                format!("{pos} lexeme under `{category}`, expected `{projected}`"),
                            );
                        }
                    }
                }
            }
        }

        // COORD-1
        for (i, (f, _)) in children.iter().enumerate() {
            if *f == GrammaticalFunction::Coordinate
                && category != &PhrasalCategory::Base(BaseCategory::Coordination)
            {
                self.emit(
                    RuleId::Coord1,
                    &path.child(i),
                    Severity::Error,
                    format!("Coordinate child under `{category}`; coordinates are daughters of Coordination only"),
                );
            }
        }

        // COORD-2: markers need a head sister. Nonce constituents are
        // headless by design and keep their markers.
        if !category.is_nonce() {
            for (i, (f, _)) in children.iter().enumerate() {
                if *f == GrammaticalFunction::Marker && head_children.is_empty() {
                    self.emit(
                        RuleId::Coord2,
                        &path.child(i),
                        Severity::Error,
                        "Marker child without a Head sister".to_string(),
                    );
                }
            }
        }

        // COORD-3
        if category == &PhrasalCategory::Base(BaseCategory::Coordination) {
            let coordinates = children
                .iter()
                .filter(|(f, _)| *f == GrammaticalFunction::Coordinate)
                .count();
            if coordinates == 0 {
                self.emit(
                    RuleId::Coord3,
                    path,
                    Severity::Error,
                    "Coordination with no Coordinate children".to_string(),
                );
            } else if coordinates == 1 {
                self.emit(
                    RuleId::Coord3,
                    path,
                    Severity::Warning,
                    "Coordination with a single Coordinate child".to_string(),
                );
            }
        }

        // ATTACH-1 (warnings)
        if head_children.len() == 1 {
            let (_, head) = &children[head_children[0]];
            match &head.kind {
                NodeKind::Lexeme { pos, .. }
                    if matches!(pos, PosTag::N | PosTag::NPro | PosTag::V | PosTag::VAux) =>
                {
                    for (i, (f, _)) in children.iter().enumerate() {
                        if *f == GrammaticalFunction::Mod {
                            self.emit(
                                RuleId::Attach1,
                                &path.child(i),
                                Severity::Warning,
                                format!("Mod sister of lexical {pos}; modifiers attach to Nom/VP"),
                            );
                        }
                    }
                }
                NodeKind::Phrase { .. } => {
                    for (i, (f, _)) in children.iter().enumerate() {
                        if *f == GrammaticalFunction::Comp {
                            self.emit(
                                RuleId::Attach1,
                                &path.child(i),
                                Severity::Warning,
                                "Comp sister of a phrase; complements attach to lexical heads"
                                    .to_string(),
                            );
                        }
                    }
                }
                _ => {}
            }
        }
    }

    fn check_projection(
        &mut self,
        parent: &PhrasalCategory,
        func: GrammaticalFunction,
        head: &CgelNode,
        head_path: &NodePath,
    ) {
        if parent.is_nonce() {
            return;
        }
        let parent_base = match parent.as_base() {
            Some(b) => b,
            None => return,
        };
        match &head.kind {
            NodeKind::Gap => {}
            // A projecting lexeme in the wrong phrase is caught by the
            // placement check; here we only reject non-projecting heads.
            NodeKind::Lexeme { pos, .. } => {
                if pos.projects().is_none() {
                    self.emit(
                        RuleId::Proj1,
                        head_path,
                        Severity::Error,
                        format!("{pos} projects no phrase and cannot head `{parent}`"),
                    );
                }
            }
            NodeKind::Phrase { category, .. } => {
                let child_base = match category {
                    // Coordination and nonce constituents are transparent:
                    // they can stand in for any category they coordinate.
                    PhrasalCategory::Base(BaseCategory::Coordination) => return,
                    PhrasalCategory::Nonce(_) => return,
                    PhrasalCategory::Base(b) => *b,
                };
                let ok = if let Some((a, b)) = func.fused_components() {
                    use GrammaticalFunction as F;
                    match (a, b) {
                        // Det-Head: a DP standing as the fused head of a Nom.
                        (F::Det, F::Head) => {
                            child_base == BaseCategory::DP && parent_base == BaseCategory::Nom
                        }
                        // Mod-Head: a modifier phrase fused with the head of a Nom.
                        (F::Mod, F::Head) => {
                            matches!(child_base, BaseCategory::AdjP | BaseCategory::AdvP)
                                && parent_base == BaseCategory::Nom
                        }
                        // Head-Prenucleus: a Nom heading an NP and serving as
                        // prenucleus of the relative it contains.
                        (F::Head, F::Prenucleus) => {
                            child_base == BaseCategory::Nom && parent_base == BaseCategory::NP
                        }
                        _ => false,
                    }
                } else {
                    head_pair_allowed(parent_base, child_base)
                };
                if !ok {
                    self.emit(
                        RuleId::Proj1,
                        head_path,
                        Severity::Error,
                        format!("`{category}` cannot head `{parent}` (function {func})"),
                    );
                }
            }
        }
    }

    fn check_gaps(&mut self) {
        let mut antecedents: std::collections::BTreeMap<&str, usize> = Default::default();
        for (_, node) in self.tree.nodes_with_paths() {
            if let (Some(label), false) = (&node.coindex, node.is_gap()) {
                *antecedents.entry(label.as_str()).or_insert(0) += 1;
            }
        }
        let mut pending = Vec::new();
        for (path, node) in self.tree.nodes_with_paths() {
            if node.is_gap() {
                match &node.coindex {
                    None => pending.push((path, "gap without a coindex".to_string())),
                    Some(label) => match antecedents.get(label.as_str()).copied().unwrap_or(0) {
                        1 => {}
                        0 => pending.push((
                            path,
                            format!("gap coindex `{label}` has no antecedent"),
                        )),
                        n => pending.push((
                            path,
                            format!("gap coindex `{label}` has {n} antecedents, expected 1"),
                        )),
                    },
                }
            }
        }
        for (path, message) in pending {
            self.emit(RuleId::Gap1, &path, Severity::Error, message);
        }
    }
}

/// Coordination, nonce categories, and Flat-only constructions are licensed
/// to be headless.
fn is_headless_licensed(
    category: &PhrasalCategory,
    children: &[(GrammaticalFunction, CgelNode)],
) -> bool {
    if category.is_nonce() {
        return true;
    }
    if category == &PhrasalCategory::Base(BaseCategory::Coordination) {
        return true;
    }
    !children.is_empty()
        && children
            .iter()
            .all(|(f, _)| *f == GrammaticalFunction::Flat)
}

/// Category pairs allowed on a plain Head edge (parent ← head child).
/// Same-category stacking carries outer modifiers and markers.
fn head_pair_allowed(parent: BaseCategory, child: BaseCategory) -> bool {
    use BaseCategory as C;
    matches!(
        (parent, child),
        (C::NP, C::Nom)
            | (C::NP, C::NP)
            | (C::Nom, C::Nom)
            | (C::VP, C::VP)
            | (C::Clause, C::VP)
            | (C::Clause, C::Clause)
            | (C::ClauseRel, C::VP)
            | (C::ClauseRel, C::Clause)
            | (C::ClauseRel, C::ClauseRel)
            | (C::PP, C::PP)
            | (C::DP, C::DP)
            | (C::AdjP, C::AdjP)
            | (C::AdvP, C::AdvP)
            | (C::IntP, C::IntP)
    )
}

/// Sentence punctuation. Symbol lexemes that the corpus attests as real
/// words (`&`, `-`, `/`, `@`) are deliberately not in this set.
fn is_punctuation_only(form: &str) -> bool {
    !form.is_empty()
        && form.chars().all(|c| {
            matches!(
                c,
                '.' | ','
                    | ';'
                    | ':'
                    | '!'
                    | '?'
                    | '"'
                    | '\''
                    | '`'
                    | '('
                    | ')'
                    | '['
                    | ']'
                    | '{'
                    | '}'
                    | '…'
                    | '—'
                    | '–'
                    | '“'
                    | '”'
                    | '‘'
                    | '’'
            )
        })
}

/// Violations over a whole corpus, deterministically ordered by
/// (tree_id, path, rule).
#[derive(Debug, Clone, Default, Serialize)]
pub struct CorpusReport {
    pub violations: Vec<Violation>,
}

impl CorpusReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn errors(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| v.severity == Severity::Error)
    }

    pub fn warnings(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| v.severity == Severity::Warning)
    }

    /// Violations grouped by rule, in rule order.
    pub fn by_rule(&self) -> Vec<(RuleId, Vec<&Violation>)> {
        let mut groups: Vec<(RuleId, Vec<&Violation>)> = Vec::new();
        for rule in RuleId::ALL {
            let vs: Vec<&Violation> =
                self.violations.iter().filter(|v| v.rule == rule).collect();
            if !vs.is_empty() {
                groups.push((rule, vs));
            }
        }
        groups
    }

    /// Line-oriented text form: one violation per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for v in &self.violations {
            s.push_str(&v.to_string());
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> String {
        let items: Vec<serde_json::Value> = self
            .violations
            .iter()
            .map(|v| {
                serde_json::json!({
                    "rule_id": v.rule.as_str(),
                    "tree_id": v.tree_id,
                    "path": v.path.to_string(),
                    "message": v.message,
                    "severity": v.severity.to_string(),
                })
            })
            .collect();
        serde_json::to_string_pretty(&serde_json::Value::Array(items)).unwrap()
    }
}

/// Validates every tree and merges the results deterministically.
pub fn validate_corpus<'t>(
    trees: impl IntoIterator<Item = &'t CgelTree>,
    profile: &RuleProfile,
) -> CorpusReport {
    let mut violations: Vec<Violation> = trees
        .into_iter()
        .flat_map(|t| validate(t, profile))
        .collect();
    violations.sort_by(|a, b| {
        (&a.tree_id, &a.path, a.rule).cmp(&(&b.tree_id, &b.path, b.rule))
    });
    CorpusReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_tree;

    fn rules_of(violations: &[Violation]) -> Vec<RuleId> {
        violations.iter().map(|v| v.rule).collect()
    }

    fn check(src: &str) -> Vec<Violation> {
        let tree = parse_tree(src).unwrap();
        validate(&tree, &RuleProfile::all())
    }

    #[test]
    fn clean_transitive_clause() {
        let vs = check(
            r#"(Clause
                :Subj (NP :Head (Nom :Head (N :t "Liz")))
                :Head (VP
                    :Head (V :t "bought")
                    :Obj (NP :Det (DP :Head (D :t "a")) :Head (Nom :Head (N :t "house")))))"#,
        );
        assert!(vs.is_empty(), "{vs:?}");
    }

    #[test]
    fn two_heads_trigger_exactly_head1() {
        let vs = check(
            r#"(NP
                :Head (Nom :Head (N :t "salt"))
                :Head (Nom :Head (N :t "pepper")))"#,
        );
        assert_eq!(rules_of(&vs), vec![RuleId::Head1]);
    }

    #[test]
    fn wrong_projection_triggers_exactly_proj1() {
        let vs = check(r#"(NP :Head (VP :Head (V :t "run")))"#);
        assert_eq!(rules_of(&vs), vec![RuleId::Proj1]);
    }

    #[test]
    fn lexeme_out_of_projection_is_proj1() {
        // N directly under NP misses the mandatory Nom layer.
        let vs = check(r#"(NP :Head (N :t "Liz"))"#);
        assert_eq!(rules_of(&vs), vec![RuleId::Proj1]);
    }

    #[test]
    fn retired_subtypes_trigger_exactly_func1() {
        let vs = check(
            r#"(Clause
                :Subj (NP :Head (Nom :Head (N :t "Liz")))
                :Predicate (VP :Predicator (V :t "ran")))"#,
        );
        assert_eq!(rules_of(&vs), vec![RuleId::Func1, RuleId::Func1]);
    }

    #[test]
    fn bare_gap_triggers_exactly_gap1() {
        let vs = check(r#"(VP :Head (V :t "bought") :Obj (GAP))"#);
        assert_eq!(rules_of(&vs), vec![RuleId::Gap1]);
    }

    #[test]
    fn coordinate_outside_coordination_is_coord1() {
        let vs = check(
            r#"(NP
                :Head (Nom :Head (N :t "salt"))
                :Coordinate (NP :Head (Nom :Head (N :t "pepper"))))"#,
        );
        assert_eq!(rules_of(&vs), vec![RuleId::Coord1]);
    }

    #[test]
    fn flat_coordination_markers_are_coord2() {
        // Marker and Mods directly under Coordination, the rejected analysis.
        let vs = check(
            r#"(Coordination
                :Coordinate (NP :Det (DP :Head (D :t "the")) :Head (Nom :Head (N :t "guests")))
                :Marker (Coordinator :t "and")
                :Mod (AdvP :Head (Adv :t "indeed"))
                :Coordinate (NP
                    :Det (NP :Head (Nom :Head (N_pro :t "his")))
                    :Head (Nom :Head (N :t "family")))
                :Mod (AdvP :Head (Adv :t "too")))"#,
        );
        assert_eq!(rules_of(&vs), vec![RuleId::Coord2]);
    }

    #[test]
    fn single_coordinate_is_coord3_warning() {
        let vs = check(
            r#"(Coordination
                :Coordinate (NP :Head (Nom :Head (N :t "salt"))))"#,
        );
        assert_eq!(rules_of(&vs), vec![RuleId::Coord3]);
        assert_eq!(vs[0].severity, Severity::Warning);
    }

    #[test]
    fn low_modifier_is_attach1_warning() {
        let vs = check(r#"(Nom :Head (N :t "dog") :Mod (AdjP :Head (Adj :t "big")))"#);
        assert_eq!(rules_of(&vs), vec![RuleId::Attach1]);
        assert_eq!(vs[0].severity, Severity::Warning);
    }

    #[test]
    fn high_complement_is_attach1_warning() {
        let vs = check(
            r#"(Nom
                :Head (Nom :Head (N :t "claim"))
                :Comp (PP :Head (P :t "of")))"#,
        );
        assert_eq!(rules_of(&vs), vec![RuleId::Attach1]);
    }

    #[test]
    fn punctuation_lexeme_is_pos1() {
        let vs = check(r#"(Nom :Head (N :t "."))"#);
        assert_eq!(rules_of(&vs), vec![RuleId::Pos1]);
        // Attested symbol lexemes stay legal.
        let vs = check(r#"(Coordination
            :Coordinate (NP :Head (Nom :Head (N :t "salt")))
            :Coordinate (NP
                :Marker (Coordinator :t "&")
                :Head (NP :Head (Nom :Head (N :t "pepper")))))"#);
        assert!(vs.is_empty(), "{vs:?}");
    }

    #[test]
    fn nonce_coordinate_with_marker_is_clean() {
        let vs = check(
            r#"(Coordination
                :Coordinate (Clause
                    :Subj (NP :Head (Nom :Head (N :t "Liz")))
                    :Head (VP :Head (V :t "left")))
                :Coordinate (NP+AdvP
                    :Marker (Coordinator :t "and")
                    :Subj (NP :Head (Nom :Head (N :t "Al")))
                    :Mod (AdvP :Head (Adv :t "later"))))"#,
        );
        assert!(vs.is_empty(), "{vs:?}");
    }

    #[test]
    fn flat_only_phrase_is_headless_licensed() {
        let vs = check(
            r#"(NP :Head (Nom
                :Flat (N :t "Pierre")
                :Flat (N :t "Vinken")))"#,
        );
        assert!(vs.is_empty(), "{vs:?}");
    }

    #[test]
    fn gap_with_two_antecedents_is_gap1() {
        // Not constructible through the parser (it rejects duplicate
        // antecedents), so build it directly.
        use crate::tree::*;
        let np = |form: &str| {
            CgelNode::phrase(
                PhrasalCategory::Base(BaseCategory::NP),
                vec![(
                    GrammaticalFunction::Head,
                    CgelNode::phrase(
                        PhrasalCategory::Base(BaseCategory::Nom),
                        vec![(GrammaticalFunction::Head, CgelNode::lexeme(PosTag::N, form))],
                    ),
                )],
            )
        };
        let root = CgelNode::phrase(
            PhrasalCategory::Base(BaseCategory::Clause),
            vec![
                (GrammaticalFunction::Subj, np("Liz").with_coindex("x")),
                (
                    GrammaticalFunction::Head,
                    CgelNode::phrase(
                        PhrasalCategory::Base(BaseCategory::VP),
                        vec![
                            (GrammaticalFunction::Head, CgelNode::lexeme(PosTag::V, "saw")),
                            (GrammaticalFunction::Obj, np("Al").with_coindex("x")),
                            (GrammaticalFunction::Comp, CgelNode::gap().with_coindex("x")),
                        ],
                    ),
                ),
            ],
        );
        let tree = CgelTree::new("dup", root);
        let vs = validate(&tree, &RuleProfile::all());
        assert_eq!(rules_of(&vs), vec![RuleId::Gap1]);
    }

    #[test]
    fn profiles_filter_rules() {
        let src = r#"(NP :Head (VP :Head (V :t "run")) :Head (VP :Head (V :t "hide")))"#;
        let tree = parse_tree(src).unwrap();
        let all = validate(&tree, &RuleProfile::all());
        assert!(all.iter().any(|v| v.rule == RuleId::Head1));
        let only_gap = validate(&tree, &RuleProfile::only([RuleId::Gap1]));
        assert!(only_gap.is_empty());
        assert!(RuleProfile::parse("HEAD-1, GAP-1").is_some());
        assert!(RuleProfile::parse("NOPE-9").is_none());
    }

    #[test]
    fn enabling_more_rules_never_removes_violations() {
        let src = r#"(NP
            :Head (VP :Head (V :t "run"))
            :Coordinate (NP :Head (Nom :Head (N :t "x")))
            :Mod (AdjP :Head (Adj :t "."))
        )"#;
        let tree = parse_tree(src).unwrap();
        let mut enabled: Vec<RuleId> = Vec::new();
        let mut seen = 0usize;
        for rule in RuleId::ALL {
            enabled.push(rule);
            let vs = validate(&tree, &RuleProfile::only(enabled.iter().copied()));
            assert!(vs.len() >= seen, "rule {rule} removed violations");
            seen = vs.len();
        }
    }

    #[test]
    fn corpus_report_ordering_and_paths_resolve() {
        let a = parse_tree(r#"(NP :Head (VP :Head (V :t "b")))"#).unwrap();
        let mut a = a;
        a.id = "b-tree".into();
        let b = parse_tree(r#"(VP :Head (V :t "x") :Obj (GAP))"#).unwrap();
        let mut b = b;
        b.id = "a-tree".into();
        let report = validate_corpus([&a, &b], &RuleProfile::all());
        let ids: Vec<&str> = report.violations.iter().map(|v| v.tree_id.as_str()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
        for v in &report.violations {
            let tree = if v.tree_id == "a-tree" { &b } else { &a };
            assert!(v.path.resolve(&tree.root).is_some(), "unresolvable {v}");
        }
        assert!(!report.to_text().is_empty());
        assert!(report.to_json().contains("rule_id"));
    }
}
