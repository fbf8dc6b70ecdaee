//! McKay quivers: tensor multiplicities with the natural representation,
//! the reduced quiver, and DOT emission.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rep::{natural_character, purity_flags, CharTable};

/// The McKay quiver of a group action. `adjacency` holds the full tensor
/// multiplicities a_ij including the trivial vertex and loops; the
/// reduced edge set drops the trivial vertex, loops and multiplicities.
#[derive(Serialize)]
pub struct McKayQuiver {
    pub labels: Vec<String>,
    pub dims: Vec<usize>,
    pub pure: Vec<bool>,
    pub trivial: usize,
    pub adjacency: Vec<Vec<usize>>,
    pub reduced_edges: Vec<(usize, usize)>,
}

/// Canonical representation labels: the trivial character is chi0, the
/// remaining pure rows become chi1, chi2, ... in table order and the
/// binary rows become chit1, chit2, ...
pub fn rep_labels(table: &CharTable, pure: &[bool]) -> Vec<String> {
    let mut labels = vec![String::new(); table.len()];
    let mut pure_count = 0usize;
    let mut binary_count = 0usize;
    for i in 0..table.len() {
        if i == table.trivial_index() {
            labels[i] = "chi0".into();
        } else if pure[i] {
            pure_count += 1;
            labels[i] = format!("chi{pure_count}");
        } else {
            binary_count += 1;
            labels[i] = format!("chit{binary_count}");
        }
    }
    labels
}

/// Build the McKay quiver. Purity flags are computed when the group
/// contains -I (the binary case); otherwise every vertex is pure.
pub fn mckay_quiver(table: &CharTable) -> Result<McKayQuiver> {
    let group = table.group();
    let nat = natural_character(group);
    let k = table.len();
    let mut adjacency = vec![vec![0usize; k]; k];
    for i in 0..k {
        let product = nat.pointwise_mul(table.row(i));
        let m = table.decompose(&product)?;
        for j in 0..k {
            adjacency[i][j] = m[j];
        }
    }
    // the natural character of these actions is real-valued, so the
    // multiplicities are symmetric; fail loudly if not
    for i in 0..k {
        for j in 0..k {
            if adjacency[i][j] != adjacency[j][i] {
                return Err(Error::Invalid(format!(
                    "McKay multiplicities are not symmetric at ({i}, {j})"
                )));
            }
        }
    }
    let pure = match group.minus_identity_index() {
        Some(_) => purity_flags(table)?,
        None => vec![true; k],
    };
    let trivial = table.trivial_index();
    let mut reduced_edges = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            if i != trivial && j != trivial && adjacency[i][j] > 0 {
                reduced_edges.push((i, j));
            }
        }
    }
    Ok(McKayQuiver {
        labels: rep_labels(table, &pure),
        dims: table.dims().to_vec(),
        pure,
        trivial,
        adjacency,
        reduced_edges,
    })
}

impl McKayQuiver {
    /// Vertices of the reduced quiver (everything but the trivial one).
    pub fn reduced_vertices(&self) -> Vec<usize> {
        (0..self.labels.len())
            .filter(|&i| i != self.trivial)
            .collect()
    }

    /// Is the reduced quiver connected?
    pub fn reduced_is_connected(&self) -> bool {
        let verts = self.reduced_vertices();
        if verts.is_empty() {
            return true;
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut stack = vec![verts[0]];
        seen.insert(verts[0]);
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.reduced_edges {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == verts.len()
    }

    /// No reduced edge joins two pure or two binary vertices.
    pub fn reduced_is_purity_bipartite(&self) -> bool {
        self.reduced_edges
            .iter()
            .all(|&(a, b)| self.pure[a] != self.pure[b])
    }

    /// DOT output; binary vertices are filled black, pure vertices open.
    pub fn to_dot(&self, graph_name: &str) -> String {
        let mut out = String::new();
        out.push_str(&format!("graph {graph_name} {{\n"));
        out.push_str("  node [shape=circle fontname=\"Helvetica\"];\n");
        for i in self.reduced_vertices() {
            let style = if self.pure[i] {
                "style=\"\""
            } else {
                "style=filled fillcolor=black fontcolor=white"
            };
            out.push_str(&format!(
                "  {} [label=\"{} ({})\" {}];\n",
                self.labels[i], self.labels[i], self.dims[i], style
            ));
        }
        let mut edges = self.reduced_edges.clone();
        edges.sort();
        for (a, b) in edges {
            out.push_str(&format!("  {} -- {};\n", self.labels[a], self.labels[b]));
        }
        out.push_str("}\n");
        out
    }
}

/// A labeled graph for shape comparisons: vertices carry (dim, purity).
pub struct LabeledGraph {
    pub vertex_labels: Vec<(usize, bool)>,
    pub edges: Vec<(usize, usize)>,
}

impl LabeledGraph {
    pub fn from_reduced_quiver(q: &McKayQuiver) -> LabeledGraph {
        let verts = q.reduced_vertices();
        let lookup: std::collections::BTreeMap<usize, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        LabeledGraph {
            vertex_labels: verts.iter().map(|&v| (q.dims[v], q.pure[v])).collect(),
            edges: q
                .reduced_edges
                .iter()
                .map(|&(a, b)| (lookup[&a], lookup[&b]))
                .collect(),
        }
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.edges
            .iter()
            .any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b))
    }

    /// Graph isomorphism respecting vertex labels, by backtracking.
    /// Intended for quiver-sized graphs (at most nine vertices).
    pub fn isomorphic(&self, other: &LabeledGraph) -> bool {
        let n = self.vertex_labels.len();
        if n != other.vertex_labels.len() || self.edges.len() != other.edges.len() {
            return false;
        }
        let mut assign = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_isomorphism(other, &mut assign, &mut used, 0)
    }

    fn extend_isomorphism(
        &self,
        other: &LabeledGraph,
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
        v: usize,
    ) -> bool {
        let n = self.vertex_labels.len();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || self.vertex_labels[v] != other.vertex_labels[w] {
                continue;
            }
            let consistent = (0..v).all(|u| {
                self.adjacent(u, v) == other.adjacent(assign[u], w)
            });
            if !consistent {
                continue;
            }
            assign[v] = w;
            used[w] = true;
            if self.extend_isomorphism(other, assign, used, v + 1) {
                return true;
            }
            assign[v] = usize::MAX;
            used[w] = false;
        }
        false
    }
}

/// Helper for golden graphs written as label lists plus edge lists.
pub fn expected_graph(labels: &[(usize, bool)], edges: &[(usize, usize)]) -> LabeledGraph {
    LabeledGraph {
        vertex_labels: labels.to_vec(),
        edges: edges.to_vec(),
    }
}

/// Check that the natural character is real-valued (so the multiplicity
/// matrix is symmetric); true for every subgroup of SU(2) or SO(3).
pub fn natural_character_is_real(table: &CharTable) -> bool {
    let nat = natural_character(table.group());
    nat.values.iter().all(|v| v == &v.conj())
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_polyhedral_quotient;
    use crate::group::builtin::{build_binary_polyhedral, GroupKind};

    #[test]
    fn cyclic_four_reduced_quiver_is_a_chain() {
        let g = build_binary_polyhedral(GroupKind::Cyclic, 4, None).unwrap();
        let t = CharTable::compute(&g).unwrap();
        let q = mckay_quiver(&t).unwrap();
        assert!(natural_character_is_real(&t));
        assert_eq!(q.reduced_vertices().len(), 7);
        assert_eq!(q.reduced_edges.len(), 6);
        assert!(q.reduced_is_connected());
        assert!(q.reduced_is_purity_bipartite());
        // chain: exactly two vertices of degree 1, both binary
        let mut degree = vec![0usize; q.labels.len()];
        for &(a, b) in &q.reduced_edges {
            degree[a] += 1;
            degree[b] += 1;
        }
        let ends: Vec<usize> = q
            .reduced_vertices()
            .into_iter()
            .filter(|&v| degree[v] == 1)
            .collect();
        assert_eq!(ends.len(), 2);
        for e in ends {
            assert!(!q.pure[e]);
        }
    }

    #[test]
    fn octahedral_quotient_quiver_shape() {
        let gt = build_binary_polyhedral(GroupKind::Octahedral, 0, None).unwrap();
        let (gq, _) = build_polyhedral_quotient(&gt).unwrap();
        assert_eq!(gq.order(), 24);
        let t = CharTable::compute(&gq).unwrap();
        let q = mckay_quiver(&t).unwrap();
        // the triangle {2, 3, 3} with the 1-dimensional vertex hanging off
        // one of the 3-dimensional ones (chi4 is adjacent to all others)
        let expect = expected_graph(
            &[(1, true), (2, true), (3, true), (3, true)],
            &[(0, 3), (1, 3), (2, 3), (1, 2)],
        );
        let got = LabeledGraph::from_reduced_quiver(&q);
        assert!(got.isomorphic(&expect));
    }

    #[test]
    fn tetrahedral_reduced_quiver_shape() {
        let gt = build_binary_polyhedral(GroupKind::Tetrahedral, 0, None).unwrap();
        let t = CharTable::compute(&gt).unwrap();
        let q = mckay_quiver(&t).unwrap();
        // affine E6 minus the trivial vertex: chain 1-2-3-2-1 with an
        // extra 2 hanging off the middle 3
        let expect = expected_graph(
            &[
                (1, true),
                (2, false),
                (3, true),
                (2, false),
                (1, true),
                (2, false),
            ],
            &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)],
        );
        let got = LabeledGraph::from_reduced_quiver(&q);
        assert!(got.isomorphic(&expect));
        assert!(q.reduced_is_purity_bipartite());
        let dot = q.to_dot("ttilde");
        assert!(dot.contains("fillcolor=black"));
        assert!(dot.contains(" -- "));
    }
}
