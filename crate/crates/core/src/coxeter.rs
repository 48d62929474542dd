//! Coxeter matrices, Coxeter graphs and the associated bilinear form.
//!
//! Vertices are plain indices `0..n`. A pair of distinct vertices carries a
//! label `m(i, j) ∈ {2, 3, …} ∪ {∞}`; only pairs with `m ≥ 3` are edges and
//! only those are stored.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{cyc_real_cos, Cyclotomic, Matrix};
use crate::error::{Error, Result};

/// The order `m(s, s')` of a product of two generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinite,
}

impl Label {
    /// Decodes the file convention where `0` means ∞.
    pub fn from_code(code: u32) -> Self {
        if code == 0 {
            Label::Infinite
        } else {
            Label::Finite(code)
        }
    }

    pub fn code(self) -> u32 {
        match self {
            Label::Finite(m) => m,
            Label::Infinite => 0,
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinite => None,
        }
    }

    /// `-cos(π/m)`, the off-diagonal entry of the bilinear form.
    pub fn neg_cos(self) -> Result<Cyclotomic> {
        cyc_real_cos(self.finite())
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinite => write!(f, "∞"),
        }
    }
}

/// Symmetric matrix of labels with ones on the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    n: usize,
    entries: Vec<Label>,
}

impl CoxeterMatrix {
    /// Builds a matrix from integer rows, with `0` standing for ∞ off the diagonal.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCoxeterMatrix(format!("row {i} has length {}", row.len())));
            }
            for (j, &v) in row.iter().enumerate() {
                if i == j {
                    if v != 1 {
                        return Err(Error::InvalidCoxeterMatrix(format!("diagonal entry ({i},{i}) is {v}")));
                    }
                    entries.push(Label::Finite(1));
                } else {
                    if v == 1 {
                        return Err(Error::InvalidCoxeterMatrix(format!("entry ({i},{j}) is 1")));
                    }
                    if rows[j][i] != v {
                        return Err(Error::InvalidCoxeterMatrix(format!("not symmetric at ({i},{j})")));
                    }
                    entries.push(Label::from_code(v));
                }
            }
        }
        Ok(CoxeterMatrix { n, entries })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Label {
        self.entries[i * self.n + j]
    }

    /// Rows in the integer encoding (∞ as `0`).
    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).code()).collect())
            .collect()
    }
}

/// Labeled simple graph on `0..n`; absent pairs have label 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterGraph {
    n: usize,
    edges: BTreeMap<(usize, usize), Label>,
}

/// A connected component together with the original indices of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub graph: CoxeterGraph,
    /// `vertices[i]` is the index in the parent graph of component vertex `i`.
    pub vertices: Vec<usize>,
}

impl CoxeterGraph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        CoxeterGraph { n, edges: BTreeMap::new() }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize, Label)>) -> Result<Self> {
        let mut g = Self::new(n);
        for (i, j, m) in edges {
            g.set_label(i, j, m)?;
        }
        Ok(g)
    }

    /// Path `0 - 1 - … - (n-1)` with the given edge labels.
    pub fn path(labels: &[u32]) -> Self {
        let mut g = Self::new(labels.len() + 1);
        for (i, &m) in labels.iter().enumerate() {
            g.set_label(i, i + 1, Label::Finite(m)).expect("valid path label");
        }
        g
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Sets `m(i, j)`; label 2 removes the edge.
    pub fn set_label(&mut self, i: usize, j: usize, m: Label) -> Result<()> {
        if i >= self.n || j >= self.n {
            return Err(Error::InvalidGraph(format!("vertex out of range in edge ({i},{j}) for n = {}", self.n)));
        }
        if i == j {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {i}")));
        }
        if let Label::Finite(v) = m {
            if v < 2 {
                return Err(Error::InvalidLabel(v));
            }
        }
        let key = (i.min(j), i.max(j));
        if m == Label::Finite(2) {
            self.edges.remove(&key);
        } else {
            self.edges.insert(key, m);
        }
        Ok(())
    }

    /// `m(i, j)`; the diagonal is reported as 1.
    pub fn label(&self, i: usize, j: usize) -> Label {
        if i == j {
            return Label::Finite(1);
        }
        self.edges.get(&(i.min(j), i.max(j))).copied().unwrap_or(Label::Finite(2))
    }

    /// Edges `(i, j, m)` with `i < j` and `m ≥ 3`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Label)> + '_ {
        self.edges.iter().map(|(&(i, j), &m)| (i, j, m))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges()
            .filter_map(|(i, j, _)| {
                if i == v {
                    Some(j)
                } else if j == v {
                    Some(i)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn from_matrix(m: &CoxeterMatrix) -> Self {
        let mut g = Self::new(m.rank());
        for i in 0..m.rank() {
            for j in i + 1..m.rank() {
                let l = m.get(i, j);
                if l != Label::Finite(2) {
                    g.edges.insert((i, j), l);
                }
            }
        }
        g
    }

    pub fn to_matrix(&self) -> CoxeterMatrix {
        let entries = (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .map(|(i, j)| self.label(i, j))
            .collect();
        CoxeterMatrix { n: self.n, entries }
    }

    /// The bilinear form `B(α_i, α_j) = -cos(π/m(i, j))` with unit diagonal.
    pub fn gram_matrix(&self) -> Matrix<Cyclotomic> {
        let mut g = Matrix::identity(self.n);
        for (i, j, m) in self.edges() {
            let v = m.neg_cos().expect("graph labels are valid");
            g.set(i, j, v.clone());
            g.set(j, i, v);
        }
        g
    }

    /// Induced subgraph on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = Self::new(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                let l = self.label(u, v);
                if l != Label::Finite(2) {
                    g.edges.insert((a, b), l);
                }
            }
        }
        g
    }

    /// Connected components ordered by their smallest vertex; vertices
    /// inside a component keep their relative order.
    pub fn connected_components(&self) -> Vec<Component> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = BTreeSet::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            let vertices: Vec<usize> = comp.into_iter().collect();
            out.push(Component { graph: self.induced(&vertices), vertices });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Removes `remove` (and their edges) and lowers the labels listed in
    /// `lower`, keyed by original vertex pairs. Remaining vertices keep
    /// their relative order.
    pub fn subgraph(&self, remove: &BTreeSet<usize>, lower: &BTreeMap<(usize, usize), Label>) -> Result<Self> {
        if let Some(v) = remove.iter().find(|&&v| v >= self.n) {
            return Err(Error::InvalidSubgraph(format!("unknown vertex {v}")));
        }
        let mut g = self.clone();
        for (&(i, j), &new) in lower {
            if i >= self.n || j >= self.n || i == j {
                return Err(Error::InvalidSubgraph(format!("unknown edge ({i},{j})")));
            }
            let old = self.label(i, j);
            let lowered = match (old, new) {
                (_, Label::Infinite) => false,
                (Label::Infinite, Label::Finite(m)) => m >= 2,
                (Label::Finite(o), Label::Finite(m)) => m >= 2 && m < o,
            };
            if !lowered {
                return Err(Error::InvalidSubgraph(format!(
                    "label of ({i},{j}) cannot go from {old} to {new}"
                )));
            }
            g.set_label(i, j, new)?;
        }
        let keep: Vec<usize> = (0..self.n).filter(|v| !remove.contains(v)).collect();
        Ok(g.induced(&keep))
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut g = Self::new(self.n);
        for (i, j, m) in self.edges() {
            g.set_label(perm[i], perm[j], m).expect("permutation of vertices");
        }
        g
    }

    /// Parses the JSON graph format `{"n": 4, "edges": [[0,1,3],[1,2,3],[2,3,4]]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(text).map_err(|e| {
            Error::InvalidGraph(format!("{} (line {}, column {})", e, e.line(), e.column()))
        })?;
        file.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphFile::from(self)).expect("graph serializes")
    }
}

/// On-disk graph representation. Pairs that are not listed have label 2 and
/// a label of `0` encodes ∞.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[u32; 3]>,
}

impl TryFrom<GraphFile> for CoxeterGraph {
    type Error = Error;

    fn try_from(file: GraphFile) -> Result<Self> {
        let mut g = CoxeterGraph::new(file.n);
        let mut seen = BTreeSet::new();
        for [i, j, m] in file.edges {
            let (i, j) = (i as usize, j as usize);
            if !seen.insert((i.min(j), i.max(j))) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({i},{j})")));
            }
            g.set_label(i, j, Label::from_code(m))?;
        }
        Ok(g)
    }
}

impl From<&CoxeterGraph> for GraphFile {
    fn from(g: &CoxeterGraph) -> Self {
        GraphFile {
            n: g.n,
            edges: g.edges().map(|(i, j, m)| [i as u32, j as u32, m.code()]).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Field, Rational};
    use proptest::prelude::*;

    #[test]
    fn rank_two_matrices() {
        let g = CoxeterGraph::from_matrix(&CoxeterMatrix::from_rows(&[vec![1, 3], vec![3, 1]]).unwrap());
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1, Label::Finite(3))]);
        let g = CoxeterGraph::from_matrix(&CoxeterMatrix::from_rows(&[vec![1, 2], vec![2, 1]]).unwrap());
        assert_eq!(g.rank(), 2);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn symmetric_group_matrix_is_a_path() {
        let n = 5;
        let rows: Vec<Vec<u32>> = (0..n)
            .map(|i: usize| {
                (0..n)
                    .map(|j: usize| match i.abs_diff(j) {
                        0 => 1,
                        1 => 3,
                        _ => 2,
                    })
                    .collect()
            })
            .collect();
        let g = CoxeterGraph::from_matrix(&CoxeterMatrix::from_rows(&rows).unwrap());
        assert_eq!(g, CoxeterGraph::path(&[3, 3, 3, 3]));
        assert_eq!(g.to_matrix().to_rows(), rows);
    }

    #[test]
    fn invalid_matrices() {
        assert!(CoxeterMatrix::from_rows(&[vec![1, 3], vec![4, 1]]).is_err());
        assert!(CoxeterMatrix::from_rows(&[vec![2, 3], vec![3, 1]]).is_err());
        assert!(CoxeterMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).is_err());
        assert!(CoxeterMatrix::from_rows(&[vec![1, 3, 2], vec![3, 1]]).is_err());
    }

    #[test]
    fn gram_matrices() {
        let half = Cyclotomic::from_rational(Rational::new((-1).into(), 2.into()));
        let a2 = CoxeterGraph::path(&[3]).gram_matrix();
        assert_eq!(a2.get(0, 1), &half);
        assert_eq!(a2.get(0, 0), &Cyclotomic::one());
        let b2 = CoxeterGraph::path(&[4]).gram_matrix();
        let expect = &(&Cyclotomic::zeta(8, 1) + &Cyclotomic::zeta(8, -1)) * &half;
        assert_eq!(b2.get(1, 0), &expect);
        let a1t = CoxeterGraph::from_edges(2, [(0, 1, Label::Infinite)]).unwrap().gram_matrix();
        assert_eq!(a1t.get(0, 1), &Cyclotomic::from_int(-1));
    }

    #[test]
    fn components() {
        // A2 on {0, 2}, B2 on {1, 3}
        let g = CoxeterGraph::from_edges(4, [(0, 2, Label::Finite(3)), (1, 3, Label::Finite(4))]).unwrap();
        let cs = g.connected_components();
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0].vertices, vec![0, 2]);
        assert_eq!(cs[0].graph, CoxeterGraph::path(&[3]));
        assert_eq!(cs[1].graph, CoxeterGraph::path(&[4]));
        let cs = CoxeterGraph::new(3).connected_components();
        assert_eq!(cs.len(), 3);
        assert!(cs.iter().all(|c| c.graph.rank() == 1));
        let d4 = CoxeterGraph::from_edges(4, [(0, 2, Label::Finite(3)), (1, 2, Label::Finite(3)), (2, 3, Label::Finite(3))])
            .unwrap();
        assert_eq!(d4.connected_components().len(), 1);
        assert_eq!(d4.connected_components()[0].graph, d4);
    }

    #[test]
    fn subgraph_operations() {
        // B3 with the 4 on edge (0,1): removing vertex 0 leaves A2
        let b3 = CoxeterGraph::path(&[4, 3]);
        let a2 = b3.subgraph(&BTreeSet::from([0]), &BTreeMap::new()).unwrap();
        assert_eq!(a2, CoxeterGraph::path(&[3]));
        // H3 with its 5 lowered to 3 is A3
        let h3 = CoxeterGraph::path(&[5, 3]);
        let a3 = h3.subgraph(&BTreeSet::new(), &BTreeMap::from([((0, 1), Label::Finite(3))])).unwrap();
        assert_eq!(a3, CoxeterGraph::path(&[3, 3]));
        // raising is rejected, as is an unknown vertex
        assert!(h3.subgraph(&BTreeSet::new(), &BTreeMap::from([((0, 1), Label::Finite(6))])).is_err());
        assert!(h3.subgraph(&BTreeSet::from([7]), &BTreeMap::new()).is_err());
        assert!(h3.subgraph(&BTreeSet::new(), &BTreeMap::from([((0, 1), Label::Finite(1))])).is_err());
    }

    #[test]
    fn json_format() {
        let g = CoxeterGraph::from_json(r#"{"n": 4, "edges": [[2,3,4],[0,1,3],[1,2,3]]}"#).unwrap();
        assert_eq!(g, CoxeterGraph::path(&[3, 3, 4]));
        assert_eq!(g.to_json(), r#"{"n":4,"edges":[[0,1,3],[1,2,3],[2,3,4]]}"#);
        let inf = CoxeterGraph::from_json(r#"{"n": 2, "edges": [[0,1,0]]}"#).unwrap();
        assert_eq!(inf.label(1, 0), Label::Infinite);
        for bad in [
            r#"{"n": 2, "edges": [[0,1,3],[1,0,3]]}"#,
            r#"{"n": 2, "edges": [[0,1,1]]}"#,
            r#"{"n": 2, "edges": [[0,2,3]]}"#,
            r#"{"n": 2, "edges": [[0,0,3]]}"#,
            r#"{"n": 2, "edges": [[0,1]]}"#,
            r#"{"n": 2}"#,
        ] {
            assert!(CoxeterGraph::from_json(bad).is_err(), "{bad}");
        }
        let err = CoxeterGraph::from_json("{\"n\": 2,\n \"edges\": [[0,1,3]\n").unwrap_err();
        assert!(err.to_string().contains("line"), "{err}");
    }

    fn arb_graph() -> impl Strategy<Value = CoxeterGraph> {
        (1usize..7).prop_flat_map(|n| {
            prop::collection::vec(prop::sample::select(vec![0u32, 2, 3, 4, 5, 6, 9]), n * (n - 1) / 2).prop_map(
                move |codes| {
                    let mut g = CoxeterGraph::new(n);
                    let mut k = 0;
                    for i in 0..n {
                        for j in i + 1..n {
                            g.set_label(i, j, Label::from_code(codes[k])).unwrap();
                            k += 1;
                        }
                    }
                    g
                },
            )
        })
    }

    proptest! {
        #[test]
        fn matrix_roundtrip(g in arb_graph()) {
            prop_assert_eq!(CoxeterGraph::from_matrix(&g.to_matrix()), g.clone());
            let json = CoxeterGraph::from_json(&g.to_json()).unwrap();
            prop_assert_eq!(json, g);
        }

        #[test]
        fn gram_is_symmetric_with_unit_diagonal(g in arb_graph()) {
            let m = g.gram_matrix();
            for i in 0..g.rank() {
                prop_assert!(m.get(i, i).is_one());
                for j in 0..g.rank() {
                    prop_assert_eq!(m.get(i, j), m.get(j, i));
                }
            }
        }
    }
}
