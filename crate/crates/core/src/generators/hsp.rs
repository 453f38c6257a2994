//! Hitting-set instances and their reduction to a family of trees whose
//! simultaneous dimension is at most `K + 1` exactly when the instance has a
//! hitting set of size at most `K`.

use std::sync::Arc;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphFamily, VertexUniverse};
use crate::resolution::{ConstraintSystem, Source};
use crate::solver::minimum_hitting_set;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingSetInstance {
    elements: Vec<String>,
    /// Element indices, in declaration order.
    sets: Vec<Vec<usize>>,
    budget: usize,
}

impl HittingSetInstance {
    pub fn new(elements: Vec<String>, sets: Vec<Vec<String>>, budget: usize) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidInstance(msg));
        if elements.is_empty() {
            return bad("the ground set is empty".into());
        }
        for (i, e) in elements.iter().enumerate() {
            if e.is_empty() || elements[..i].contains(e) {
                return bad(format!("duplicate or empty element `{e}`"));
            }
        }
        if sets.is_empty() {
            return bad("the collection is empty".into());
        }
        let mut idx_sets = Vec::with_capacity(sets.len());
        for (i, set) in sets.iter().enumerate() {
            if set.is_empty() {
                return bad(format!("set {} is empty", i + 1));
            }
            let mut ids: Vec<usize> = Vec::with_capacity(set.len());
            for label in set {
                let Some(id) = elements.iter().position(|e| e == label) else {
                    return bad(format!("set {} mentions unknown element `{label}`", i + 1));
                };
                if ids.contains(&id) {
                    return bad(format!("set {} repeats `{label}`", i + 1));
                }
                ids.push(id);
            }
            idx_sets.push(ids);
        }
        if budget == 0 || budget > elements.len() {
            return bad(format!("budget {budget} outside 1..={}", elements.len()));
        }
        Ok(HittingSetInstance {
            elements,
            sets: idx_sets,
            budget,
        })
    }

    pub fn from_strs(elements: &[&str], sets: &[&[&str]], budget: usize) -> Result<Self> {
        Self::new(
            elements.iter().map(|s| s.to_string()).collect(),
            sets.iter().map(|s| s.iter().map(|x| x.to_string()).collect()).collect(),
            budget,
        )
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn with_budget(&self, budget: usize) -> Result<Self> {
        if budget == 0 || budget > self.elements.len() {
            return Err(Error::InvalidInstance(format!("budget {budget} outside 1..={}", self.elements.len())));
        }
        Ok(HittingSetInstance {
            budget,
            ..self.clone()
        })
    }

    pub fn constraint_system(&self) -> ConstraintSystem {
        let n = self.elements.len();
        ConstraintSystem::from_sets(
            n,
            self.sets
                .iter()
                .enumerate()
                .map(|(index, s)| (VertexSet::from_ids(n, s.iter().copied()), Source::Set { index })),
        )
    }

    pub fn is_hitting_set(&self, chosen: &VertexSet) -> bool {
        self.sets.iter().all(|s| s.iter().any(|&e| chosen.contains(e)))
    }
}

#[derive(Debug, Clone)]
pub struct HittingSetSolution {
    pub size: usize,
    /// Lexicographically least minimum hitting set, as element indices.
    pub witness: VertexSet,
}

impl HittingSetSolution {
    pub fn labels(&self, inst: &HittingSetInstance) -> Vec<String> {
        self.witness.iter().map(|i| inst.elements()[i].clone()).collect()
    }
}

pub fn solve_hitting_set(inst: &HittingSetInstance) -> HittingSetSolution {
    let sol = minimum_hitting_set(&inst.constraint_system());
    HittingSetSolution {
        size: sol.size,
        witness: sol.witness,
    }
}

#[derive(Debug, Clone)]
pub struct HspReduction {
    pub family: GraphFamily,
    /// `K + 1`.
    pub budget: usize,
    /// Extra vertices appended to every `Q_i` when some `Q_i` would have
    /// fewer than two vertices.
    pub padding: Vec<String>,
}

/// Tree `T_i` per set `C_i` on `S ∪ {u1,u2} ∪ W`: the path `Q_i` over
/// `S - C_i` then `W - {w_i}`, with `u1`, `u2` hanging off its first vertex
/// and both `w_i` and the path over `C_i` (entered at its last element)
/// hanging off its last vertex.
pub fn gen_hsp_reduction(inst: &HittingSetInstance) -> Result<HspReduction> {
    let k = inst.sets().len();
    let s_labels = inst.elements();
    let w_labels: Vec<String> = (1..=k).map(|i| format!("w{i}")).collect();
    let min_q = inst
        .sets()
        .iter()
        .map(|c| s_labels.len() - c.len() + k - 1)
        .min()
        .expect("non-empty collection");
    let padding: Vec<String> = (1..=2usize.saturating_sub(min_q)).map(|i| format!("p{i}")).collect();

    let labels: Vec<String> = s_labels
        .iter()
        .cloned()
        .chain(["u1".to_string(), "u2".to_string()])
        .chain(w_labels.iter().cloned())
        .chain(padding.iter().cloned())
        .collect();
    let universe = Arc::new(
        VertexUniverse::new(labels)
            .map_err(|l| Error::Construction(format!("element label `{l}` clashes with a gadget vertex")))?,
    );
    let id = |label: &str| universe.id(label).expect("label in universe");
    let (u1, u2) = (id("u1"), id("u2"));
    let w: Vec<usize> = w_labels.iter().map(|l| id(l)).collect();
    let pad: Vec<usize> = padding.iter().map(|l| id(l)).collect();

    let mut members = Vec::with_capacity(k);
    for (i, c) in inst.sets().iter().enumerate() {
        let q: Vec<usize> = (0..s_labels.len())
            .filter(|e| !c.contains(e))
            .chain(w.iter().copied().filter(|&x| x != w[i]))
            .chain(pad.iter().copied())
            .collect();
        let mut edges: Vec<(usize, usize)> = q.windows(2).map(|p| (p[0], p[1])).collect();
        edges.extend(c.windows(2).map(|p| (p[0], p[1])));
        let (first, last) = (q[0], *q.last().expect("at least two vertices"));
        edges.push((u1, first));
        edges.push((u2, first));
        edges.push((w[i], last));
        edges.push((*c.last().expect("non-empty set"), last));
        let t = Graph::from_edges(format!("T{}", i + 1), universe.clone(), edges)?;
        debug_assert!(t.is_tree());
        members.push(t);
    }
    Ok(HspReduction {
        family: GraphFamily::new("hsp", members)?,
        budget: inst.budget() + 1,
        padding,
    })
}
