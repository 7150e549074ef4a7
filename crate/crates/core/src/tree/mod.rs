//! The tree of circular compositions.
//!
//! Rooted at `(1,1)`, every composition with at least two parts and a single
//! orbit appears exactly once. A node `λ` has
//!
//! * type 1 children `λ` with `λ_t` replaced by `λ_t + |s_t|`, for every `t`;
//! * type 2 children `λ` with `|δ_t|` inserted after position `t`, for the
//!   `t ∈ 0..=r` where `δ_t > λ_{t+1}` or `−δ_t > λ_t`.
//!
//! Here `δ_t = n − 2·Σ_{j≤t} λ_j`, which is the translation parameter the
//! inserted part receives. Restricted to two parts and type 1 edges, the tree
//! is the Raney (Calkin–Wilf) tree of reduced fractions.

mod export;

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

pub use export::{export_tree, to_dot, to_json, to_records, to_text, ExportFormat, NodeRecord};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::recursion::{count_orbits, pivot};

/// `(δ₀, …, δ_r)` with `δ_t = n − 2·Σ_{j≤t} λ_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DeltaVector(Vec<i64>);

impl DeltaVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// `δ_t` for `t ∈ 0..=r`.
    pub fn get(&self, t: usize) -> i64 {
        self.0[t]
    }
}

pub fn delta_vector(c: &Composition) -> DeltaVector {
    let n = c.sum() as i128;
    let mut prefix = 0i128;
    let mut entries = Vec::with_capacity(c.len() + 1);
    entries.push(n as i64);
    for &p in c.parts() {
        prefix += p as i128;
        entries.push((n - 2 * prefix) as i64);
    }
    DeltaVector(entries)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ChildKind {
    Type1,
    Type2,
}

impl ChildKind {
    /// `T1` / `T2`, as used in edge labels.
    pub fn short(self) -> &'static str {
        match self {
            ChildKind::Type1 => "T1",
            ChildKind::Type2 => "T2",
        }
    }
}

/// A child together with the rule that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ChildSpec {
    pub kind: ChildKind,
    /// `1..=r` for type 1, `0..=r` for type 2.
    pub t: usize,
    pub child: Composition,
}

impl ChildSpec {
    /// `T1:t=2`
    pub fn label(&self) -> String {
        format!("{}:t={}", self.kind.short(), self.t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Provenance {
    Root,
    Child {
        parent: Composition,
        kind: ChildKind,
        t: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeNode {
    pub composition: Composition,
    pub depth: usize,
    pub provenance: Provenance,
}

/// Result of [`parent`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ParentOf {
    Root,
    Node(Composition),
}

pub fn root() -> Composition {
    Composition::from_valid(vec![1, 1], 2)
}

fn is_root(c: &Composition) -> bool {
    c.parts() == [1, 1]
}

fn ensure_tree_node(c: &Composition) -> Result<()> {
    if c.len() < 2 {
        return Err(Error::SinglePart);
    }
    if count_orbits(c) != 1 {
        return Err(Error::NotCircular(c.to_string()));
    }
    Ok(())
}

/// Whether inserting `|δ_t|` after position `t` is a type 2 child of `c`.
/// At `t = 0` only the right-hand test exists and at `t = r` only the
/// left-hand one; both hold automatically there.
pub fn type2_admissible(c: &Composition, t: usize) -> bool {
    let delta = delta_vector(c).get(t) as i128;
    let r = c.len();
    (t < r && delta > c.part(t + 1) as i128) || (t >= 1 && -delta > c.part(t) as i128)
}

/// Type 1 children by ascending `t`, then type 2 children by ascending `t`.
pub fn children(c: &Composition) -> Result<Vec<ChildSpec>> {
    ensure_tree_node(c)?;
    child_specs(c).collect()
}

// Children of a node already known to be in the tree, each fallible on its own.
fn child_specs(c: &Composition) -> impl Iterator<Item = Result<ChildSpec>> + '_ {
    let s = c.translation_vector();
    let delta = delta_vector(c);
    let type1 = (1..=c.len()).map(move |t| {
        let grown = c
            .part(t)
            .checked_add(s.get(t).unsigned_abs())
            .ok_or(Error::Overflow("child part"))?;
        Ok(ChildSpec {
            kind: ChildKind::Type1,
            t,
            child: c.with_part(t, grown)?,
        })
    });
    let type2 = (0..=c.len())
        .filter(|&t| type2_admissible(c, t))
        .map(move |t| {
            let part = delta.get(t).unsigned_abs();
            Ok(ChildSpec {
                kind: ChildKind::Type2,
                t,
                child: c.inserting(t, part)?,
            })
        });
    type1.chain(type2)
}

/// The unique parent, read off from the pivot.
///
/// A strict pivot `λ_t > |s_t|` marks a type 1 child: subtract `|s_t|`. An
/// equality pivot `λ_t = |s_t|` marks a type 2 child; on a circular
/// composition it pairs with `t + 1`, and exactly one of the two removals
/// is an admissible insertion in the resulting composition.
pub fn parent(c: &Composition) -> Result<ParentOf> {
    ensure_tree_node(c)?;
    if is_root(c) {
        return Ok(ParentOf::Root);
    }
    let p = pivot(c);
    let lambda = c.part(p.t);
    debug_assert!(
        p.abs_s > 0,
        "circular compositions have no zero translation"
    );
    if lambda > p.abs_s {
        return Ok(ParentOf::Node(c.with_part(p.t, lambda - p.abs_s)?));
    }
    let mut found = None;
    for removed in [p.t, p.t + 1] {
        if removed > c.len()
            || c.part(removed) != c.translation_vector().get(removed).unsigned_abs()
        {
            continue;
        }
        let candidate = c.without_part(removed);
        if type2_admissible(&candidate, removed - 1) {
            assert!(found.is_none(), "two admissible parents for {c:?}");
            found = Some(candidate);
        }
    }
    let parent = found.unwrap_or_else(|| panic!("no admissible parent for circular {c:?}"));
    Ok(ParentOf::Node(parent))
}

/// Like [`parent`], but the root is an error.
pub fn parent_composition(c: &Composition) -> Result<Composition> {
    match parent(c)? {
        ParentOf::Root => Err(Error::NoParent),
        ParentOf::Node(p) => Ok(p),
    }
}

/// `c, parent(c), …, (1,1)`.
pub fn path_to_root(c: &Composition) -> Result<Vec<Composition>> {
    ensure_tree_node(c)?;
    let mut path = vec![c.clone()];
    let mut current = c.clone();
    while let ParentOf::Node(p) = parent(&current)? {
        path.push(p.clone());
        current = p;
    }
    Ok(path)
}

/// Breadth-first walk over every node whose sum is at most `max_sum`.
///
/// Children always have a larger sum than their parent, so a branch is
/// cut as soon as it passes the bound.
#[derive(Debug, Clone)]
pub struct TreeWalk {
    queue: VecDeque<TreeNode>,
    max_sum: u64,
}

pub fn enumerate(max_sum: u64) -> TreeWalk {
    let mut queue = VecDeque::new();
    if max_sum >= 2 {
        queue.push_back(TreeNode {
            composition: root(),
            depth: 0,
            provenance: Provenance::Root,
        });
    }
    TreeWalk { queue, max_sum }
}

impl Iterator for TreeWalk {
    type Item = TreeNode;

    fn next(&mut self) -> Option<TreeNode> {
        let node = self.queue.pop_front()?;
        // A child whose sum overflows is beyond any bound and is skipped.
        for spec in child_specs(&node.composition).flatten() {
            if spec.child.sum() <= self.max_sum {
                self.queue.push_back(TreeNode {
                    composition: spec.child,
                    depth: node.depth + 1,
                    provenance: Provenance::Child {
                        parent: node.composition.clone(),
                        kind: spec.kind,
                        t: spec.t,
                    },
                });
            }
        }
        Some(node)
    }
}

impl fmt::Display for TreeNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#}", self.composition)?;
        if let Provenance::Child { parent, kind, t } = &self.provenance {
            write!(f, " <- {parent:#} {}:t={t}", kind.short())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u64]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn kids(parts: &[u64], kind: ChildKind) -> Vec<Composition> {
        children(&c(parts))
            .unwrap()
            .into_iter()
            .filter(|s| s.kind == kind)
            .map(|s| s.child)
            .collect()
    }

    #[test]
    fn deltas() {
        assert_eq!(delta_vector(&c(&[1, 1, 2, 4])).entries(), &[8, 6, 4, 0, -8]);
        assert_eq!(delta_vector(&c(&[1, 1, 4])).entries(), &[6, 4, 2, -6]);
        assert_eq!(delta_vector(&c(&[1, 1, 2])).entries(), &[4, 2, 0, -4]);
    }

    #[test]
    fn children_of_figure_node() {
        assert_eq!(
            kids(&[1, 1, 2, 4], ChildKind::Type1),
            vec![
                c(&[8, 1, 2, 4]),
                c(&[1, 6, 2, 4]),
                c(&[1, 1, 4, 4]),
                c(&[1, 1, 2, 8])
            ]
        );
        let t2: Vec<_> = children(&c(&[1, 1, 2, 4]))
            .unwrap()
            .into_iter()
            .filter(|s| s.kind == ChildKind::Type2)
            .map(|s| (s.t, s.child))
            .collect();
        assert_eq!(
            t2,
            vec![
                (0, c(&[8, 1, 1, 2, 4])),
                (1, c(&[1, 6, 1, 2, 4])),
                (2, c(&[1, 1, 4, 2, 4])),
                (4, c(&[1, 1, 2, 4, 8])),
            ]
        );
    }

    #[test]
    fn children_of_root() {
        assert_eq!(
            kids(&[1, 1], ChildKind::Type1),
            vec![c(&[2, 1]), c(&[1, 2])]
        );
        assert_eq!(
            kids(&[1, 1], ChildKind::Type2),
            vec![c(&[2, 1, 1]), c(&[1, 1, 2])]
        );
    }

    #[test]
    fn children_need_circular_input() {
        assert_eq!(children(&c(&[2, 2])), Err(Error::NotCircular("2,2".into())));
        assert_eq!(children(&c(&[1])), Err(Error::SinglePart));
    }

    #[test]
    fn parents() {
        assert_eq!(parent(&c(&[1, 1, 2, 4])), Ok(ParentOf::Node(c(&[1, 1, 2]))));
        assert!(!type2_admissible(&c(&[1, 1, 4]), 2));
        assert_eq!(parent(&c(&[1, 1])), Ok(ParentOf::Root));
        assert_eq!(parent_composition(&c(&[1, 1])), Err(Error::NoParent));
        assert_eq!(parent(&c(&[2, 1])), Ok(ParentOf::Node(c(&[1, 1]))));
        assert_eq!(parent(&c(&[4, 6])), Err(Error::NotCircular("4,6".into())));
    }

    #[test]
    fn paths() {
        assert_eq!(path_to_root(&c(&[1, 1])).unwrap(), vec![c(&[1, 1])]);
        assert_eq!(
            path_to_root(&c(&[3, 2])).unwrap(),
            vec![c(&[3, 2]), c(&[1, 2]), c(&[1, 1])]
        );
        let path = path_to_root(&c(&[1, 1, 2, 4])).unwrap();
        assert_eq!(&path[..2], &[c(&[1, 1, 2, 4]), c(&[1, 1, 2])]);
        assert_eq!(path.last(), Some(&c(&[1, 1])));
        assert!(path.iter().all(|p| count_orbits(p) == 1));
    }

    #[test]
    fn small_enumerations() {
        let two: Vec<_> = enumerate(2).map(|n| n.composition).collect();
        assert_eq!(two, vec![c(&[1, 1])]);
        let three: Vec<_> = enumerate(3).map(|n| n.composition).collect();
        assert_eq!(three, vec![c(&[1, 1]), c(&[2, 1]), c(&[1, 2])]);
        assert_eq!(enumerate(1).count(), 0);
    }

    #[test]
    fn node_display() {
        let nodes: Vec<_> = enumerate(3).map(|n| n.to_string()).collect();
        assert_eq!(
            nodes,
            vec!["(1,1)", "(2,1) <- (1,1) T1:t=1", "(1,2) <- (1,1) T1:t=2"]
        );
    }
}
