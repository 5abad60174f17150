//! The Ufnarovski graph of a finite monomial antichain.
//!
//! Vertices are the normal words of length `m - 1` (`m` the longest relation)
//! and there is an arrow `u -> v` when `u x = y v` is normal for letters `x`,
//! `y`. Paths of length `k - m + 1` correspond to normal words of length `k`.
//! The algebra grows exponentially iff two distinct cycles meet, and
//! otherwise polynomially with degree the largest number of cycles along a
//! path. Lyndon relations are not required.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use serde::Serialize;

use crate::algebra::{normal_words_with_limits, Antichain, EnumerationLimits};
use crate::atoms::{GrowthVerdict, GrowthWitness};
use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Word};

/// Shape of a strongly connected component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentKind {
    /// A single vertex without a loop.
    Acyclic,
    /// Exactly one simple cycle (possibly a loop).
    Cycle,
    /// More edges than vertices: at least two cycles share a vertex.
    Tangled,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    /// Vertex indices, ascending.
    pub vertices: Vec<usize>,
    pub edge_count: usize,
    pub kind: ComponentKind,
}

/// Graph of normal words of length `m - 1` with letter-shift arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UGraph {
    alphabet: Alphabet,
    m: usize,
    vertices: Vec<Word>,
    /// Sorted successor lists, indexed like `vertices`.
    edges: Vec<Vec<usize>>,
    components: Vec<Component>,
    /// Component index of each vertex.
    component_of: Vec<usize>,
}

pub fn build_graph(antichain: &Antichain) -> Result<UGraph> {
    let m = antichain.max_len();
    if m < 2 {
        return Err(Error::GraphTooSmall);
    }
    let limits = EnumerationLimits {
        max_len: usize::MAX,
        ..EnumerationLimits::default()
    };
    let layer = normal_words_with_limits(antichain, m - 1, limits)?;
    let vertices = layer.by_length[m - 1].clone();
    let g = antichain.alphabet().size();
    let edges: Vec<Vec<usize>> = vertices
        .iter()
        .map(|u| {
            let mut succ = BTreeSet::new();
            for x in 0..g {
                let mut ux = u.clone();
                ux.push(x as Letter);
                if !antichain.ends_with_obstruction(ux.letters()) {
                    let v = Word::from(&ux.letters()[1..]);
                    let j = vertices.binary_search(&v).expect("factors of normal words are normal");
                    succ.insert(j);
                }
            }
            succ.into_iter().collect()
        })
        .collect();
    let (components, component_of) = classify_components(&edges);
    Ok(UGraph {
        alphabet: antichain.alphabet().clone(),
        m,
        vertices,
        edges,
        components,
        component_of,
    })
}

fn classify_components(edges: &[Vec<usize>]) -> (Vec<Component>, Vec<usize>) {
    let mut graph = DiGraph::<(), ()>::with_capacity(edges.len(), 0);
    let nodes: Vec<NodeIndex> = (0..edges.len()).map(|_| graph.add_node(())).collect();
    for (u, succ) in edges.iter().enumerate() {
        for &v in succ {
            graph.add_edge(nodes[u], nodes[v], ());
        }
    }
    // tarjan_scc yields components in reverse topological order
    let sccs = tarjan_scc(&graph);
    let mut component_of = vec![0; edges.len()];
    for (ci, scc) in sccs.iter().enumerate() {
        for n in scc {
            component_of[n.index()] = ci;
        }
    }
    let components = sccs
        .iter()
        .enumerate()
        .map(|(ci, scc)| {
            let mut vertices: Vec<usize> = scc.iter().map(|n| n.index()).collect();
            vertices.sort_unstable();
            let edge_count = vertices
                .iter()
                .map(|&u| edges[u].iter().filter(|&&v| component_of[v] == ci).count())
                .sum();
            let kind = match edge_count {
                0 => ComponentKind::Acyclic,
                e if e == vertices.len() => ComponentKind::Cycle,
                _ => ComponentKind::Tangled,
            };
            Component {
                vertices,
                edge_count,
                kind,
            }
        })
        .collect();
    (components, component_of)
}

impl UGraph {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Longest relation length.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.edges[v]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    /// All arrows `(u, v)` in ascending order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.iter().map(move |&v| (u, v)))
            .collect()
    }

    /// Strongly connected components, sinks of the condensation first.
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Polynomial growth iff no component is tangled; the degree is the
    /// largest number of cycle components met along a path, computed on the
    /// condensation by dynamic programming.
    pub fn growth(&self) -> GrowthVerdict {
        if let Some(c) = self
            .components
            .iter()
            .find(|c| c.kind == ComponentKind::Tangled)
        {
            return GrowthVerdict::Exponential {
                witness: Some(GrowthWitness::IntersectingCycles {
                    vertex: self.alphabet.render(&self.vertices[c.vertices[0]]),
                }),
            };
        }
        // successors in the condensation come earlier in `components`
        let mut best = vec![0usize; self.components.len()];
        for (ci, comp) in self.components.iter().enumerate() {
            let downstream = comp
                .vertices
                .iter()
                .flat_map(|&u| &self.edges[u])
                .map(|&v| self.component_of[v])
                .filter(|&cj| cj != ci)
                .map(|cj| best[cj])
                .max()
                .unwrap_or(0);
            best[ci] = downstream + usize::from(comp.kind == ComponentKind::Cycle);
        }
        GrowthVerdict::Polynomial {
            degree: best.into_iter().max().unwrap_or(0),
        }
    }

    /// The words read along cycle components, one per cycle, as the
    /// rotations starting at the smallest vertex of the cycle.
    pub fn cycle_words(&self) -> Vec<Word> {
        let mut out = Vec::new();
        for comp in self.components.iter().filter(|c| c.kind == ComponentKind::Cycle) {
            let start = comp.vertices[0];
            let mut word = Word::empty();
            let mut v = start;
            loop {
                let next = *self.edges[v]
                    .iter()
                    .find(|&&w| self.component_of[w] == self.component_of[start])
                    .expect("cycle vertex has an in-component successor");
                word.push(*self.vertices[next].letters().last().expect("m >= 2"));
                v = next;
                if v == start {
                    break;
                }
            }
            out.push(word);
        }
        out.sort();
        out
    }

    /// Graphviz rendering with normal words as node labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph ufnarovski {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", self.alphabet.render(v));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  n{u} -> n{v};");
        }
        out.push_str("}\n");
        out
    }

    pub fn adjacency(&self) -> GraphJson {
        GraphJson {
            m: self.m,
            vertices: self.vertices.iter().map(|v| self.alphabet.render(v)).collect(),
            edges: self.edges(),
            components: self.components.clone(),
        }
    }
}

/// JSON adjacency form of a [`UGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphJson {
    pub m: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<(usize, usize)>,
    pub components: Vec<Component>,
}

pub fn growth_from_graph(graph: &UGraph) -> GrowthVerdict {
    graph.growth()
}

pub fn export_dot(graph: &UGraph) -> String {
    graph.to_dot()
}
