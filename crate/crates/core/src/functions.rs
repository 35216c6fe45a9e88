//! The hierarchy of grammatical functions, rooted at "Syntactic Functions",
//! with Head, Dependent, and Fused as the top-level branches. Supports
//! subsumption queries (reflexive and transitive).

use std::collections::BTreeMap;
use std::fmt;

use crate::tree::GrammaticalFunction;

/// A node of the function hierarchy: either a grouping that no edge label
/// uses directly (Internal, Extranuclear, ...) or a concrete function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HierarchyNode {
    /// "Syntactic Functions"
    Root,
    Fused,
    Dependent,
    Internal,
    External,
    Extranuclear,
    Extraposed,
    Adjunct,
    Function(GrammaticalFunction),
}

impl fmt::Display for HierarchyNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HierarchyNode::Root => f.write_str("Syntactic Functions"),
            HierarchyNode::Fused => f.write_str("Fused"),
            HierarchyNode::Dependent => f.write_str("Dependent"),
            HierarchyNode::Internal => f.write_str("Internal"),
            HierarchyNode::External => f.write_str("External"),
            HierarchyNode::Extranuclear => f.write_str("Extranuclear"),
            HierarchyNode::Extraposed => f.write_str("Extraposed"),
            HierarchyNode::Adjunct => f.write_str("Adjunct"),
            HierarchyNode::Function(g) => f.write_str(g.as_str()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HierarchyError {
    #[error("function {0} is not a member of the hierarchy")]
    UnknownFunction(GrammaticalFunction),
}

/// Parent relation over [`HierarchyNode`]s. Acyclic with a single root.
#[derive(Debug, Clone)]
pub struct FunctionHierarchy {
    parent: BTreeMap<HierarchyNode, HierarchyNode>,
}

impl Default for FunctionHierarchy {
    fn default() -> Self {
        Self::standard()
    }
}

impl FunctionHierarchy {
    /// The treebank's hierarchy. `Flat` is not part of the published figure;
    /// it is attached under Dependent alongside the other non-head relations.
    pub fn standard() -> Self {
        use GrammaticalFunction as F;
        use HierarchyNode as H;
        let mut parent = BTreeMap::new();
        let mut edge = |child: H, par: H| {
            parent.insert(child, par);
        };

        edge(H::Fused, H::Root);
        edge(H::Function(F::Head), H::Root);
        edge(H::Dependent, H::Root);

        edge(H::Function(F::DetHead), H::Fused);
        edge(H::Function(F::ModHead), H::Fused);
        edge(H::Function(F::HeadPrenucleus), H::Fused);

        edge(H::Function(F::Comp), H::Dependent);
        edge(H::Function(F::Marker), H::Dependent);
        edge(H::Function(F::Det), H::Dependent);
        edge(H::Function(F::Coordinate), H::Dependent);
        edge(H::Adjunct, H::Dependent);
        edge(H::Function(F::Flat), H::Dependent);

        edge(H::Internal, H::Function(F::Comp));
        edge(H::Function(F::CompInd), H::Function(F::Comp));
        edge(H::External, H::Function(F::Comp));

        edge(H::Function(F::PredComp), H::Internal);
        edge(H::Extraposed, H::Internal);
        edge(H::Function(F::DisplacedSubj), H::Internal);
        edge(H::Function(F::Obj), H::Internal);
        edge(H::Function(F::Particle), H::Internal);

        edge(H::Function(F::ExtraposedSubj), H::Extraposed);
        edge(H::Function(F::ExtraposedObj), H::Extraposed);

        edge(H::Function(F::ObjDir), H::Function(F::Obj));
        edge(H::Function(F::ObjInd), H::Function(F::Obj));

        edge(H::Extranuclear, H::External);
        edge(H::Function(F::Subj), H::External);

        edge(H::Function(F::Prenucleus), H::Extranuclear);
        edge(H::Function(F::Postnucleus), H::Extranuclear);

        edge(H::Function(F::Mod), H::Adjunct);
        edge(H::Function(F::Supplement), H::Adjunct);

        FunctionHierarchy { parent }
    }

    pub fn contains(&self, f: GrammaticalFunction) -> bool {
        self.parent.contains_key(&HierarchyNode::Function(f))
    }

    pub fn parent_of(&self, node: HierarchyNode) -> Option<HierarchyNode> {
        self.parent.get(&node).copied()
    }

    /// Path from the node up to (and including) the root.
    pub fn ancestors(
        &self,
        f: GrammaticalFunction,
    ) -> Result<Vec<HierarchyNode>, HierarchyError> {
        if !self.contains(f) {
            return Err(HierarchyError::UnknownFunction(f));
        }
        let mut chain = vec![HierarchyNode::Function(f)];
        let mut cur = HierarchyNode::Function(f);
        while let Some(p) = self.parent_of(cur) {
            chain.push(p);
            cur = p;
        }
        Ok(chain)
    }

    /// True iff `ancestor` lies on the path from the root to `descendant`
    /// (inclusive, so every function subsumes itself).
    pub fn subsumes(
        &self,
        ancestor: GrammaticalFunction,
        descendant: GrammaticalFunction,
    ) -> Result<bool, HierarchyError> {
        if !self.contains(ancestor) {
            return Err(HierarchyError::UnknownFunction(ancestor));
        }
        let chain = self.ancestors(descendant)?;
        Ok(chain.contains(&HierarchyNode::Function(ancestor)))
    }

    /// The top-level branch (Head, Dependent, or Fused) a function falls
    /// under.
    pub fn top_branch(&self, f: GrammaticalFunction) -> Result<HierarchyNode, HierarchyError> {
        let chain = self.ancestors(f)?;
        // Last element is Root; the one before it is the branch.
        Ok(chain[chain.len().saturating_sub(2)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use GrammaticalFunction as F;

    #[test]
    fn every_canonical_function_has_exactly_one_node() {
        let h = FunctionHierarchy::standard();
        for f in F::CANONICAL {
            assert!(h.contains(f), "{f} missing from hierarchy");
            // Walking up always terminates at the root.
            let chain = h.ancestors(f).unwrap();
            assert_eq!(*chain.last().unwrap(), HierarchyNode::Root);
        }
    }

    #[test]
    fn root_children_are_head_dependent_fused() {
        let h = FunctionHierarchy::standard();
        assert_eq!(h.parent_of(HierarchyNode::Fused), Some(HierarchyNode::Root));
        assert_eq!(
            h.parent_of(HierarchyNode::Dependent),
            Some(HierarchyNode::Root)
        );
        assert_eq!(
            h.parent_of(HierarchyNode::Function(F::Head)),
            Some(HierarchyNode::Root)
        );
        assert_eq!(h.parent_of(HierarchyNode::Root), None);
    }

    #[test]
    fn subsumption_examples() {
        let h = FunctionHierarchy::standard();
        // Subject sits under External under Complement.
        assert!(h.subsumes(F::Comp, F::Subj).unwrap());
        // Reflexivity.
        assert!(h.subsumes(F::Mod, F::Mod).unwrap());
        // Marker and Subject live on different branches.
        assert!(!h.subsumes(F::Marker, F::Subj).unwrap());
        // Transitivity: Comp subsumes Obj subsumes Obj-dir.
        assert!(h.subsumes(F::Obj, F::ObjDir).unwrap());
        assert!(h.subsumes(F::Comp, F::ObjDir).unwrap());
        assert!(h.subsumes(F::Comp, F::Prenucleus).unwrap());
        assert!(!h.subsumes(F::Subj, F::Comp).unwrap());
    }

    #[test]
    fn retired_functions_are_not_members() {
        let h = FunctionHierarchy::standard();
        assert_eq!(
            h.subsumes(F::Head, F::Nucleus),
            Err(HierarchyError::UnknownFunction(F::Nucleus))
        );
        assert!(!h.contains(F::Predicator));
    }

    #[test]
    fn subsumption_is_transitive_everywhere() {
        let h = FunctionHierarchy::standard();
        for a in F::CANONICAL {
            for b in F::CANONICAL {
                for c in F::CANONICAL {
                    if h.subsumes(a, b).unwrap() && h.subsumes(b, c).unwrap() {
                        assert!(h.subsumes(a, c).unwrap(), "{a} ≤ {b} ≤ {c}");
                    }
                }
            }
        }
    }

    #[test]
    fn top_branches() {
        let h = FunctionHierarchy::standard();
        assert_eq!(h.top_branch(F::Subj).unwrap(), HierarchyNode::Dependent);
        assert_eq!(h.top_branch(F::DetHead).unwrap(), HierarchyNode::Fused);
        assert_eq!(
            h.top_branch(F::Head).unwrap(),
            HierarchyNode::Function(F::Head)
        );
    }
}
