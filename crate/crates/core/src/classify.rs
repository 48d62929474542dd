//! Recognizing finite Coxeter graphs.
//!
//! A connected Coxeter graph defines a finite group exactly when its
//! bilinear form is positive definite, and those graphs are the Dynkin⁺
//! catalog. [`classify`] matches components against the catalog by shape and
//! then re-checks the answer against the leading principal minors of the
//! Gram matrix; disagreement between the two is reported as an error.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::arith::Cyclotomic;
use crate::coxeter::{CoxeterGraph, Label};
use crate::error::{Error, Result};

/// Name of an irreducible finite Coxeter group.
///
/// `I2(m)` is accepted for any `m ≥ 3` so that every dihedral group can be
/// realized, but [`classify`] only reports the canonical names: `A2` rather
/// than `I2(3)` and `B2` rather than `I2(4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeLabel {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(u32),
}

impl TypeLabel {
    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            TypeLabel::A(n) => n >= 1,
            TypeLabel::B(n) => n >= 2,
            TypeLabel::D(n) => n >= 4,
            TypeLabel::E(n) => (6..=8).contains(&n),
            TypeLabel::F4 => true,
            TypeLabel::H(n) => n == 3 || n == 4,
            TypeLabel::I2(m) => m >= 3,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::InvalidType(format!("{self} is outside the parameter range of its family")))
        }
    }

    /// The name [`classify`] uses for the same graph.
    pub fn canonical(self) -> Self {
        match self {
            TypeLabel::I2(3) => TypeLabel::A(2),
            TypeLabel::I2(4) => TypeLabel::B(2),
            t => t,
        }
    }

    /// Number of Coxeter generators.
    pub fn rank(self) -> usize {
        match self {
            TypeLabel::A(n) | TypeLabel::B(n) | TypeLabel::D(n) | TypeLabel::E(n) | TypeLabel::H(n) => n,
            TypeLabel::F4 => 4,
            TypeLabel::I2(_) => 2,
        }
    }

    /// Whether concrete realizations are available (families A, B, D, I2).
    pub fn is_classical(self) -> bool {
        matches!(self, TypeLabel::A(_) | TypeLabel::B(_) | TypeLabel::D(_) | TypeLabel::I2(_))
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeLabel::A(n) => write!(f, "A{n}"),
            TypeLabel::B(n) => write!(f, "B{n}"),
            TypeLabel::D(n) => write!(f, "D{n}"),
            TypeLabel::E(n) => write!(f, "E{n}"),
            TypeLabel::F4 => write!(f, "F4"),
            TypeLabel::H(n) => write!(f, "H{n}"),
            TypeLabel::I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    /// Accepts `A4`, `B3`, `D4`, `E6`, `F4`, `H3`, `I2(7)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidType(format!("cannot parse {s:?}; expected e.g. A4, B3, D4, I2(7)"));
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("I2(") {
            let m = rest.strip_suffix(')').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            return TypeLabel::I2(m).validate();
        }
        let (family, digits) = s.split_at(s.chars().next().ok_or_else(bad)?.len_utf8());
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let n: usize = digits.parse().map_err(|_| bad())?;
        let t = match family {
            "A" => TypeLabel::A(n),
            "B" => TypeLabel::B(n),
            "D" => TypeLabel::D(n),
            "E" => TypeLabel::E(n),
            "F" if n == 4 => TypeLabel::F4,
            "H" => TypeLabel::H(n),
            _ => return Err(bad()),
        };
        t.validate()
    }
}

/// The catalog graph of `t`.
///
/// Vertex numbering: `A_n`, `H_n`, `F_4` and `B_n` are paths `0 - 1 - …`;
/// `B_n` carries its 4 on the edge `(0, 1)` and `H_n` its 5 on `(0, 1)`.
/// `D_n` has the two short arms `0` and `1` attached to vertex `2`, followed
/// by the path `2 - 3 - … - (n-1)`. `E_n` is the path `0 - … - (n-2)` with
/// vertex `n-1` attached to vertex `2`.
pub fn catalog_graph(t: TypeLabel) -> Result<CoxeterGraph> {
    let t = t.validate()?;
    let three = Label::Finite(3);
    Ok(match t {
        TypeLabel::A(n) => CoxeterGraph::path(&vec![3; n - 1]),
        TypeLabel::B(n) => {
            let mut labels = vec![3; n - 1];
            labels[0] = 4;
            CoxeterGraph::path(&labels)
        }
        TypeLabel::H(n) => {
            let mut labels = vec![3; n - 1];
            labels[0] = 5;
            CoxeterGraph::path(&labels)
        }
        TypeLabel::F4 => CoxeterGraph::path(&[3, 4, 3]),
        TypeLabel::I2(m) => CoxeterGraph::path(&[m]),
        TypeLabel::D(n) => {
            let mut edges = vec![(0, 2, three), (1, 2, three)];
            edges.extend((2..n - 1).map(|i| (i, i + 1, three)));
            CoxeterGraph::from_edges(n, edges)?
        }
        TypeLabel::E(n) => {
            let mut edges: Vec<_> = (0..n - 2).map(|i| (i, i + 1, three)).collect();
            edges.push((2, n - 1, three));
            CoxeterGraph::from_edges(n, edges)?
        }
    })
}

/// Order of the group for the families with concrete realizations.
pub fn coxeter_group_order(t: TypeLabel) -> Result<u128> {
    let t = t.validate()?;
    let overflow = || Error::OrderTooLarge { order: u128::MAX, limit: u128::MAX };
    let factorial = |n: usize| -> Result<u128> {
        (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k)).ok_or_else(overflow)
    };
    let pow2 = |n: usize| -> Result<u128> { 1u128.checked_shl(n as u32).filter(|_| n < 128).ok_or_else(overflow) };
    match t {
        TypeLabel::A(n) => factorial(n + 1),
        TypeLabel::B(n) => pow2(n)?.checked_mul(factorial(n)?).ok_or_else(overflow),
        TypeLabel::D(n) => pow2(n - 1)?.checked_mul(factorial(n)?).ok_or_else(overflow),
        TypeLabel::I2(m) => Ok(2 * m as u128),
        other => Err(Error::UnsupportedType(other.to_string())),
    }
}

/// Outcome of the leading-principal-minor test.
#[derive(Debug, Clone, PartialEq)]
pub struct Definiteness {
    pub positive_definite: bool,
    /// First leading principal minor that is not positive, as `(size, value)`.
    pub witness: Option<(usize, Cyclotomic)>,
    pub minors: Vec<Cyclotomic>,
}

/// Sylvester's criterion on the Gram matrix.
pub fn is_positive_definite(g: &CoxeterGraph) -> Result<Definiteness> {
    let minors = g.gram_matrix().leading_principal_minors()?;
    let mut witness = None;
    for (k, m) in minors.iter().enumerate() {
        let sign = m
            .real_sign()
            .ok_or_else(|| Error::Inconsistent(format!("cannot decide the sign of minor {} = {m}", k + 1)))?;
        if sign != Ordering::Greater {
            witness = Some((k + 1, m.clone()));
            break;
        }
    }
    Ok(Definiteness { positive_definite: witness.is_none(), witness, minors })
}

/// Why a component is not finite.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// The Gram determinant is exactly zero.
    ZeroDeterminant,
    /// Leading principal minor of the given size is not positive.
    NonPositiveMinor { size: usize, value: Cyclotomic },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::ZeroDeterminant => write!(f, "det = 0"),
            Witness::NonPositiveMinor { size, value } => {
                write!(f, "minor {size} = {value} ≈ {:.6}", value.to_f64())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ComponentKind {
    Finite(TypeLabel),
    NotFinite(Witness),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComponentClass {
    /// Vertices of the input graph, increasing.
    pub vertices: Vec<usize>,
    pub kind: ComponentKind,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationResult {
    /// One entry per connected component, ordered by smallest vertex.
    pub components: Vec<ComponentClass>,
}

impl ClassificationResult {
    pub fn is_finite(&self) -> bool {
        self.components.iter().all(|c| matches!(c.kind, ComponentKind::Finite(_)))
    }

    /// Component types, if every component is finite.
    pub fn types(&self) -> Option<Vec<TypeLabel>> {
        self.components
            .iter()
            .map(|c| match c.kind {
                ComponentKind::Finite(t) => Some(t),
                ComponentKind::NotFinite(_) => None,
            })
            .collect()
    }
}

impl fmt::Display for ClassificationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| match &c.kind {
                ComponentKind::Finite(t) => t.to_string(),
                ComponentKind::NotFinite(w) => format!("NotFinite ({w})"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Splits `g` into components and names each one.
pub fn classify(g: &CoxeterGraph) -> Result<ClassificationResult> {
    let mut components = Vec::new();
    for comp in g.connected_components() {
        let structural = match_catalog(&comp.graph);
        let pd = is_positive_definite(&comp.graph)?;
        let kind = match (structural, pd.positive_definite) {
            (Some(t), true) => ComponentKind::Finite(t),
            (None, false) => ComponentKind::NotFinite(not_finite_witness(&comp.graph, &pd)?),
            (Some(t), false) => {
                return Err(Error::Inconsistent(format!(
                    "component {:?} matches {t} but its form is not positive definite",
                    comp.vertices
                )))
            }
            (None, true) => {
                return Err(Error::Inconsistent(format!(
                    "component {:?} is positive definite but matches no catalog graph",
                    comp.vertices
                )))
            }
        };
        components.push(ComponentClass { vertices: comp.vertices, kind });
    }
    Ok(ClassificationResult { components })
}

fn not_finite_witness(g: &CoxeterGraph, pd: &Definiteness) -> Result<Witness> {
    if pd.minors.last().is_some_and(Cyclotomic::is_zero) {
        return Ok(Witness::ZeroDeterminant);
    }
    let negative = pd
        .minors
        .iter()
        .enumerate()
        .find(|(_, m)| m.real_sign() == Some(Ordering::Less));
    match (negative, &pd.witness) {
        (Some((k, m)), _) => Ok(Witness::NonPositiveMinor { size: k + 1, value: m.clone() }),
        (None, Some((k, m))) => Ok(Witness::NonPositiveMinor { size: *k, value: m.clone() }),
        (None, None) => Err(Error::Inconsistent(format!("no witness for non-finite graph {}", g.to_json()))),
    }
}

/// Shape-based recognition of a connected graph.
fn match_catalog(g: &CoxeterGraph) -> Option<TypeLabel> {
    let n = g.rank();
    if g.edges().any(|(_, _, m)| m == Label::Infinite) {
        return None;
    }
    match n {
        0 => return None,
        1 => return Some(TypeLabel::A(1)),
        2 => {
            return match g.label(0, 1) {
                Label::Finite(m) if m >= 3 => Some(TypeLabel::I2(m).canonical()),
                _ => None,
            }
        }
        _ => {}
    }
    if g.edge_count() != n - 1 || !g.is_connected() {
        return None;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    match branch.as_slice() {
        [] => match_path(g),
        [b] if g.degree(*b) == 3 => match_fork(g, *b),
        _ => None,
    }
}

fn match_path(g: &CoxeterGraph) -> Option<TypeLabel> {
    let n = g.rank();
    let start = (0..n).find(|&v| g.degree(v) == 1)?;
    let order = walk(g, start, usize::MAX);
    let labels: Vec<u32> = order.windows(2).map(|w| g.label(w[0], w[1]).finite().unwrap_or(0)).collect();
    let heavy: Vec<usize> = (0..labels.len()).filter(|&i| labels[i] > 3).collect();
    match heavy.as_slice() {
        [] => Some(TypeLabel::A(n)),
        [p] => {
            let at_end = *p == 0 || *p == labels.len() - 1;
            match labels[*p] {
                4 if at_end => Some(TypeLabel::B(n)),
                4 if n == 4 && *p == 1 => Some(TypeLabel::F4),
                5 if at_end && (n == 3 || n == 4) => Some(TypeLabel::H(n)),
                _ => None,
            }
        }
        _ => None,
    }
}

fn match_fork(g: &CoxeterGraph, center: usize) -> Option<TypeLabel> {
    if g.edges().any(|(_, _, m)| m != Label::Finite(3)) {
        return None;
    }
    let mut arms: Vec<usize> = g.neighbors(center).into_iter().map(|v| walk(g, v, center).len()).collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, r] => Some(TypeLabel::D(r + 3)),
        [1, 2, 2] => Some(TypeLabel::E(6)),
        [1, 2, 3] => Some(TypeLabel::E(7)),
        [1, 2, 4] => Some(TypeLabel::E(8)),
        _ => None,
    }
}

/// Vertices along the simple path starting at `start`, not stepping back to `from`.
fn walk(g: &CoxeterGraph, start: usize, from: usize) -> Vec<usize> {
    let mut out = vec![start];
    let (mut prev, mut cur) = (from, start);
    loop {
        let next: Vec<usize> = g.neighbors(cur).into_iter().filter(|&w| w != prev).collect();
        match next.as_slice() {
            [w] if !out.contains(w) => {
                out.push(*w);
                prev = cur;
                cur = *w;
            }
            _ => return out,
        }
    }
}

/// The non-positive-definite counterpart of the catalog: `Ã_1`, `Ã_n`,
/// `B̃_2 = C̃_2`, `B̃_n`, `C̃_n`, `D̃_n`, `Ẽ_6`, `Ẽ_7`, `Ẽ_8`, `F̃_4`, `G̃_2`.
///
/// Each family member with index `n ≤ max_index` is included; the graph of
/// index `n` has `n + 1` vertices. `D̃_n` starts at `n = 4`.
pub fn affine_catalog(max_index: usize) -> Vec<(String, CoxeterGraph)> {
    let three = Label::Finite(3);
    let mut out = Vec::new();
    if max_index >= 1 {
        out.push(("A~1".into(), CoxeterGraph::from_edges(2, [(0, 1, Label::Infinite)]).unwrap()));
    }
    for n in 2..=max_index {
        let mut edges: Vec<_> = (0..n).map(|i| (i, i + 1, three)).collect();
        edges.push((0, n, three));
        out.push((format!("A~{n}"), CoxeterGraph::from_edges(n + 1, edges).unwrap()));
    }
    if max_index >= 2 {
        out.push(("B~2".into(), CoxeterGraph::path(&[4, 4])));
    }
    for n in 3..=max_index {
        // tips 0 and 1 on vertex 2, then the path 2 - … - n with a final 4
        let mut edges = vec![(0, 2, three), (1, 2, three)];
        edges.extend((2..n).map(|i| (i, i + 1, three)));
        edges.last_mut().unwrap().2 = Label::Finite(4);
        out.push((format!("B~{n}"), CoxeterGraph::from_edges(n + 1, edges).unwrap()));
    }
    for n in 3..=max_index {
        let mut labels = vec![3; n];
        labels[0] = 4;
        labels[n - 1] = 4;
        out.push((format!("C~{n}"), CoxeterGraph::path(&labels)));
    }
    if max_index >= 4 {
        out.push((
            "D~4".into(),
            CoxeterGraph::from_edges(5, (1..5).map(|i| (0, i, three))).unwrap(),
        ));
    }
    for n in 5..=max_index {
        // tips 0, 1 on vertex 2; path 2 - … - (n-2); tips n-1, n on n-2
        let mut edges = vec![(0, 2, three), (1, 2, three)];
        edges.extend((2..n - 2).map(|i| (i, i + 1, three)));
        edges.push((n - 2, n - 1, three));
        edges.push((n - 2, n, three));
        out.push((format!("D~{n}"), CoxeterGraph::from_edges(n + 1, edges).unwrap()));
    }
    let star = |arms: &[usize]| -> CoxeterGraph {
        let total = 1 + arms.iter().sum::<usize>();
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in arms {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next, three));
                prev = next;
                next += 1;
            }
        }
        CoxeterGraph::from_edges(total, edges).unwrap()
    };
    for (n, arms) in [(6, [2, 2, 2]), (7, [1, 3, 3]), (8, [1, 2, 5])] {
        if max_index >= n {
            out.push((format!("E~{n}"), star(&arms)));
        }
    }
    if max_index >= 4 {
        out.push(("F~4".into(), CoxeterGraph::path(&[3, 3, 4, 3])));
    }
    if max_index >= 2 {
        out.push(("G~2".into(), CoxeterGraph::path(&[3, 6])));
    }
    out
}
