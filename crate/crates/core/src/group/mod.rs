//! Concrete realizations of `A_n`, `B_n`, `D_n` and `I_2(m)`.
//!
//! Elements act on the left and `(gh)(x) = g(h(x))` throughout.

mod dihedral;
mod geometric;
mod perm;
mod roots;
mod signed;

pub use dihedral::DihedralElement;
pub use geometric::{geometric_rep, GeometricRep};
pub use perm::Permutation;
pub use roots::{compute_base, reflect, root_system, RootSystem, Vector};
pub use signed::SignedPermutation;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::arith::{Cyclotomic, Matrix};
use crate::classify::{catalog_graph, coxeter_group_order, TypeLabel};
use crate::coxeter::Label;
use crate::error::{Error, Result};

/// Default upper bound on the order of groups that are enumerated.
pub const DEFAULT_MAX_ORDER: u128 = 100_000;

/// An element of one of the concrete groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Perm(Permutation),
    Signed(SignedPermutation),
    Dihedral(DihedralElement),
}

impl GroupElement {
    pub fn multiply(&self, rhs: &Self) -> Result<Self> {
        use GroupElement::*;
        match (self, rhs) {
            (Perm(a), Perm(b)) if a.degree() == b.degree() => Ok(Perm(a.compose(b))),
            (Signed(a), Signed(b)) if a.degree() == b.degree() => Ok(Signed(a.compose(b))),
            (Dihedral(a), Dihedral(b)) if a.order_parameter() == b.order_parameter() => {
                Ok(Dihedral(a.compose(b)))
            }
            _ => Err(Error::GroupMismatch),
        }
    }

    pub fn inverse(&self) -> Self {
        match self {
            GroupElement::Perm(p) => GroupElement::Perm(p.inverse()),
            GroupElement::Signed(s) => GroupElement::Signed(s.inverse()),
            GroupElement::Dihedral(d) => GroupElement::Dihedral(d.inverse()),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Perm(p) => p.is_identity(),
            GroupElement::Signed(s) => s.is_identity(),
            GroupElement::Dihedral(d) => d.is_identity(),
        }
    }

    /// Matrix of the natural action: permutation matrices on `R^n`, signed
    /// permutation matrices, and plane rotations/reflections.
    pub fn natural_matrix(&self) -> Matrix<Cyclotomic> {
        match self {
            GroupElement::Perm(p) => SignedPermutation::from_permutation(p.clone()).matrix().to_cyclotomic(),
            GroupElement::Signed(s) => s.matrix().to_cyclotomic(),
            GroupElement::Dihedral(d) => d.matrix(),
        }
    }

    pub fn as_perm(&self) -> Option<&Permutation> {
        match self {
            GroupElement::Perm(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_signed(&self) -> Option<&SignedPermutation> {
        match self {
            GroupElement::Signed(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_dihedral(&self) -> Option<&DihedralElement> {
        match self {
            GroupElement::Dihedral(d) => Some(d),
            _ => None,
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Perm(p) => p.fmt(f),
            GroupElement::Signed(s) => s.fmt(f),
            GroupElement::Dihedral(d) => d.fmt(f),
        }
    }
}

/// Conjugacy classes of a [`FiniteGroup`], indexed `0..k`. Class `0` is
/// the identity; the others are ordered by their first element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassData {
    class_of: Vec<usize>,
    reps: Vec<usize>,
    sizes: Vec<usize>,
}

impl ClassData {
    pub fn count(&self) -> usize {
        self.reps.len()
    }

    pub fn group_order(&self) -> usize {
        self.class_of.len()
    }

    /// Element index of the representative of class `c` (its first element).
    pub fn representative(&self, c: usize) -> usize {
        self.reps[c]
    }

    pub fn representatives(&self) -> &[usize] {
        &self.reps
    }

    pub fn size(&self, c: usize) -> usize {
        self.sizes[c]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }
}

/// A finite group given by an explicit sorted element list and a
/// generating sequence.
#[derive(Debug)]
pub struct FiniteGroup {
    name: String,
    label: Option<TypeLabel>,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    generators: Vec<usize>,
    inverses: Vec<usize>,
    /// Breadth-first spanning tree: `element = parent · generators[g]`.
    tree: Vec<Option<(usize, usize)>>,
    classes: Arc<ClassData>,
}

impl FiniteGroup {
    /// Builds the group from all of its elements and a generating sequence.
    /// Fails if the generators do not generate every listed element or the
    /// list is not closed under products with generators.
    pub fn new(
        name: impl Into<String>,
        label: Option<TypeLabel>,
        mut elements: Vec<GroupElement>,
        generators: &[GroupElement],
    ) -> Result<Self> {
        elements.sort();
        elements.dedup();
        let index: HashMap<GroupElement, usize> =
            elements.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();
        let name = name.into();
        let generators = generators
            .iter()
            .map(|g| index.get(g).copied().ok_or_else(|| Error::NotSubgroup(format!("generator {g} not in {name}"))))
            .collect::<Result<Vec<_>>>()?;
        let identity = elements
            .iter()
            .position(GroupElement::is_identity)
            .ok_or_else(|| Error::NotSubgroup(format!("{name} has no identity")))?;
        if identity != 0 {
            return Err(Error::Inconsistent("identity does not sort first".into()));
        }
        let lookup = |g: &GroupElement| -> Result<usize> {
            index.get(g).copied().ok_or_else(|| Error::NotSubgroup(format!("{name} is not closed: {g}")))
        };
        let inverses = elements.iter().map(|g| lookup(&g.inverse())).collect::<Result<Vec<_>>>()?;

        let mut tree = vec![None; elements.len()];
        let mut reached = vec![false; elements.len()];
        reached[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (gi, &g) in generators.iter().enumerate() {
                let y = lookup(&elements[x].multiply(&elements[g])?)?;
                if !reached[y] {
                    reached[y] = true;
                    tree[y] = Some((x, gi));
                    queue.push_back(y);
                }
            }
        }
        if let Some(miss) = reached.iter().position(|r| !r) {
            return Err(Error::NotSubgroup(format!(
                "generators of {name} do not reach {}",
                elements[miss]
            )));
        }

        let mut group = FiniteGroup {
            name,
            label,
            elements,
            index,
            generators,
            inverses,
            tree,
            classes: Arc::new(ClassData { class_of: vec![], reps: vec![], sizes: vec![] }),
        };
        group.classes = Arc::new(group.compute_classes());
        Ok(group)
    }

    /// Closure of `generators` under multiplication.
    pub fn generated_by(name: impl Into<String>, label: Option<TypeLabel>, generators: &[GroupElement]) -> Result<Self> {
        let first = generators.first().ok_or_else(|| Error::Shape("no generators".into()))?;
        let identity = first.multiply(&first.inverse())?;
        let mut seen: HashSet<GroupElement> = HashSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = x.multiply(g)?;
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        Self::new(name, label, seen.into_iter().collect(), generators)
    }

    /// `S_n` on `0..n`, generated by the adjacent transpositions.
    pub fn symmetric(n: usize) -> Result<Self> {
        let elements = all_permutations(n).into_iter().map(GroupElement::Perm).collect();
        let gens: Vec<_> = (0..n.saturating_sub(1))
            .map(|i| GroupElement::Perm(Permutation::transposition(n, i, i + 1)))
            .collect();
        let label = (n >= 2).then_some(TypeLabel::A(n - 1));
        Self::new(format!("S{n}"), label, elements, &gens)
    }

    /// `B_n` as signed permutations, generated by the sign flip at `0` and
    /// the transpositions `(i-1, i)`.
    pub fn hyperoctahedral(n: usize) -> Result<Self> {
        let mut elements = Vec::new();
        for p in all_permutations(n) {
            for mask in 0..(1u64 << n) {
                let neg = (0..n).map(|i| mask >> i & 1 == 1).collect();
                elements.push(GroupElement::Signed(SignedPermutation::from_parts(neg, p.clone())));
            }
        }
        let mut gens = vec![GroupElement::Signed(SignedPermutation::sign_flip(n, 0))];
        gens.extend((1..n).map(|i| {
            GroupElement::Signed(SignedPermutation::from_permutation(Permutation::transposition(n, i - 1, i)))
        }));
        let label = (n >= 2).then_some(TypeLabel::B(n));
        Self::new(format!("B{n}"), label, elements, &gens)
    }

    /// `D_n`, the even-sign subgroup of `B_n`. Generators follow the
    /// catalog numbering: `x_0 = (e_0 ↦ -e_1, e_1 ↦ -e_0)`, `x_1 = (0,1)`,
    /// then `x_i = (i-1, i)` for `i ≥ 2`; `x_0` and `x_1` both attach to `x_2`.
    pub fn even_signed(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange { value: n, range: "n >= 2" });
        }
        let b = Self::hyperoctahedral(n)?;
        let elements = b
            .elements
            .into_iter()
            .filter(|g| g.as_signed().is_some_and(|s| s.sign_product() == 1))
            .collect();
        let mut neg = vec![false; n];
        neg[0] = true;
        neg[1] = true;
        let mut gens = vec![
            GroupElement::Signed(SignedPermutation::from_parts(neg, Permutation::transposition(n, 0, 1))),
            GroupElement::Signed(SignedPermutation::from_permutation(Permutation::transposition(n, 0, 1))),
        ];
        gens.extend((2..n).map(|i| {
            GroupElement::Signed(SignedPermutation::from_permutation(Permutation::transposition(n, i - 1, i)))
        }));
        let label = (n >= 4).then_some(TypeLabel::D(n));
        Self::new(format!("D{n}"), label, elements, &gens)
    }

    /// The dihedral group of order `2m`, generated by the reflections `s`
    /// and `r s` (their product `r s · s = r` has order `m`).
    pub fn dihedral(m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::OutOfRange { value: m as usize, range: "m >= 2" });
        }
        let s = GroupElement::Dihedral(DihedralElement::reflection(m));
        let rs = GroupElement::Dihedral(DihedralElement::new(m, 1, true));
        let label = (m >= 3).then_some(TypeLabel::I2(m));
        Self::generated_by(format!("I2({m})"), label, &[s, rs])
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn label(&self) -> Option<TypeLabel> {
        self.label
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].multiply(&self.elements[b]).expect("same group");
        self.index[&p]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `x⁻¹ g x`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(x), g), x)
    }

    /// Multiplicative order of element `a`.
    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut p = a;
        while p != 0 {
            p = self.mul(p, a);
            k += 1;
        }
        k
    }

    /// A word in generator positions whose product is element `i`.
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while let Some((parent, g)) = self.tree[i] {
            w.push(g);
            i = parent;
        }
        w.reverse();
        w
    }

    pub fn classes(&self) -> &Arc<ClassData> {
        &self.classes
    }

    fn compute_classes(&self) -> ClassData {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let c = reps.len();
            class_of[start] = c;
            let mut size = 1;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &s in &self.generators {
                    let y = self.conjugate(x, s);
                    if class_of[y] == usize::MAX {
                        class_of[y] = c;
                        size += 1;
                        queue.push_back(y);
                    }
                }
            }
            reps.push(start);
            sizes.push(size);
        }
        ClassData { class_of, reps, sizes }
    }
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    // lexicographic order by image list
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation::new(cur.clone()).expect("permutation"));
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

/// A subgroup `H ≤ G` with its own class data and the inclusion `H → G`.
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    group: Arc<FiniteGroup>,
    embedding: Vec<usize>,
    /// Inverse of `embedding`, indexed by parent element.
    position: Vec<Option<usize>>,
}

impl Subgroup {
    /// Uses `child` (whose elements must all lie in `parent`) as a subgroup.
    pub fn new(parent: Arc<FiniteGroup>, child: Arc<FiniteGroup>) -> Result<Self> {
        let embedding = child
            .elements()
            .iter()
            .map(|g| {
                parent
                    .index_of(g)
                    .ok_or_else(|| Error::NotSubgroup(format!("{g} is not in {}", parent.name())))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut position = vec![None; parent.order()];
        for (h, &g) in embedding.iter().enumerate() {
            position[g] = Some(h);
        }
        Ok(Subgroup { parent, group: child, embedding, position })
    }

    /// The subgroup formed by the given parent elements, which must be
    /// closed under multiplication.
    pub fn from_indices(parent: Arc<FiniteGroup>, name: impl Into<String>, indices: &[usize]) -> Result<Self> {
        let members: HashSet<usize> = indices.iter().copied().collect();
        if !members.contains(&parent.identity()) {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        // greedy generating set in element order; the set is a subgroup
        // exactly when the span of those generators is the set itself
        let mut sorted: Vec<usize> = members.iter().copied().collect();
        sorted.sort_unstable();
        let mut gens: Vec<usize> = Vec::new();
        let mut span: HashSet<usize> = HashSet::from([parent.identity()]);
        for &x in &sorted {
            if span.contains(&x) {
                continue;
            }
            gens.push(x);
            let mut queue: VecDeque<usize> = span.iter().copied().collect();
            while let Some(y) = queue.pop_front() {
                for &g in &gens {
                    let z = parent.mul(y, g);
                    if span.insert(z) {
                        if !members.contains(&z) {
                            return Err(Error::NotSubgroup(format!(
                                "{} · {} leaves the set",
                                parent.element(y),
                                parent.element(g)
                            )));
                        }
                        queue.push_back(z);
                    }
                }
            }
        }
        let elements = sorted.iter().map(|&i| parent.element(i).clone()).collect();
        let gen_elems: Vec<_> = gens.iter().map(|&i| parent.element(i).clone()).collect();
        let child = FiniteGroup::new(name, None, elements, &gen_elems)?;
        Self::new(parent, Arc::new(child))
    }

    /// `H = G`.
    pub fn whole(parent: Arc<FiniteGroup>) -> Self {
        Self::new(parent.clone(), parent).expect("a group contains itself")
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Parent index of subgroup element `h`.
    pub fn embed(&self, h: usize) -> usize {
        self.embedding[h]
    }

    /// Subgroup index of parent element `g`, if `g ∈ H`.
    pub fn locate(&self, g: usize) -> Option<usize> {
        self.position[g]
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.group.order()
    }
}

/// All elements of the concrete group of type `t`, sorted, identity first.
pub fn enumerate_group(t: TypeLabel, max_order: u128) -> Result<Arc<FiniteGroup>> {
    let order = coxeter_group_order(t)?;
    if order > max_order {
        return Err(Error::OrderTooLarge { order, limit: max_order });
    }
    let g = match t {
        TypeLabel::A(n) => FiniteGroup::symmetric(n + 1)?,
        TypeLabel::B(n) => FiniteGroup::hyperoctahedral(n)?,
        TypeLabel::D(n) => FiniteGroup::even_signed(n)?,
        TypeLabel::I2(m) => FiniteGroup::dihedral(m)?,
        other => return Err(Error::UnsupportedType(other.to_string())),
    };
    if g.order() as u128 != order {
        return Err(Error::Inconsistent(format!("{t} enumerated {} elements, expected {order}", g.order())));
    }
    Ok(Arc::new(g))
}

/// `(representative, class size)` for each conjugacy class of `t`.
pub fn conjugacy_classes(t: TypeLabel, max_order: u128) -> Result<Vec<(GroupElement, usize)>> {
    let g = enumerate_group(t, max_order)?;
    let cd = g.classes();
    Ok((0..cd.count())
        .map(|c| (g.element(cd.representative(c)).clone(), cd.size(c)))
        .collect())
}

/// Result of checking the Coxeter relations on the concrete generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationCheck {
    /// `(i, j, m(i, j), order of s_i s_j)` for `i ≤ j`; the diagonal entries
    /// record the generator orders against `1`-fold products, i.e. `s_i² = 1`.
    pub pairs: Vec<(usize, usize, u32, usize)>,
    pub generates: bool,
}

impl PresentationCheck {
    pub fn holds(&self) -> bool {
        self.generates && self.pairs.iter().all(|&(_, _, m, o)| m as usize == o)
    }
}

/// Checks that the order of `s_i s_j` equals the catalog label `m(i, j)` for
/// every pair of concrete generators and that they generate the whole group.
pub fn verify_presentation(t: TypeLabel, max_order: u128) -> Result<PresentationCheck> {
    let g = enumerate_group(t, max_order)?;
    let graph = catalog_graph(t)?;
    let gens = g.generators();
    if gens.len() != graph.rank() {
        return Err(Error::Inconsistent(format!("{} generators for rank {}", gens.len(), graph.rank())));
    }
    let mut pairs = Vec::new();
    for i in 0..gens.len() {
        for j in i..gens.len() {
            let m = match graph.label(i, j) {
                Label::Finite(m) => m,
                Label::Infinite => return Err(Error::Inconsistent("infinite label in a finite catalog graph".into())),
            };
            let order = g.element_order(g.mul(gens[i], gens[j]));
            pairs.push((i, j, m, order));
        }
    }
    // generation is part of FiniteGroup::new; reaching here means the BFS covered the group
    let generates = (0..g.order()).all(|x| x == 0 || !g.word(x).is_empty());
    Ok(PresentationCheck { pairs, generates })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(enumerate_group(TypeLabel::A(2), DEFAULT_MAX_ORDER).unwrap().order(), 6);
        assert_eq!(enumerate_group(TypeLabel::D(4), DEFAULT_MAX_ORDER).unwrap().order(), 192);
        assert_eq!(enumerate_group(TypeLabel::I2(5), DEFAULT_MAX_ORDER).unwrap().order(), 10);
        assert!(matches!(
            enumerate_group(TypeLabel::A(9), DEFAULT_MAX_ORDER),
            Err(Error::OrderTooLarge { order: 3_628_800, .. })
        ));
        assert!(matches!(enumerate_group(TypeLabel::E(6), DEFAULT_MAX_ORDER), Err(Error::UnsupportedType(_))));
    }

    #[test]
    fn d4_is_the_even_part_of_b4() {
        let b4 = enumerate_group(TypeLabel::B(4), DEFAULT_MAX_ORDER).unwrap();
        let even = b4.elements().iter().filter(|g| g.as_signed().unwrap().sign_product() == 1).count();
        assert_eq!(even, 192);
    }

    #[test]
    fn s3_classes() {
        let cls = conjugacy_classes(TypeLabel::A(2), DEFAULT_MAX_ORDER).unwrap();
        let sizes: Vec<usize> = cls.iter().map(|c| c.1).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        let types: Vec<Vec<usize>> = cls.iter().map(|c| c.0.as_perm().unwrap().cycle_type().parts().to_vec()).collect();
        assert_eq!(types, vec![vec![1, 1, 1], vec![2, 1], vec![3]]);
    }

    #[test]
    fn small_class_counts() {
        assert_eq!(conjugacy_classes(TypeLabel::B(2), DEFAULT_MAX_ORDER).unwrap().len(), 5);
        assert_eq!(conjugacy_classes(TypeLabel::I2(4), DEFAULT_MAX_ORDER).unwrap().len(), 5);
        assert_eq!(conjugacy_classes(TypeLabel::I2(5), DEFAULT_MAX_ORDER).unwrap().len(), 4);
    }

    /// Orbits under conjugation by every element, the slow way.
    fn brute_force_class_sizes(g: &FiniteGroup) -> Vec<usize> {
        let mut seen = vec![false; g.order()];
        let mut sizes = Vec::new();
        for a in 0..g.order() {
            if seen[a] {
                continue;
            }
            let orbit: HashSet<usize> = (0..g.order()).map(|x| g.conjugate(a, x)).collect();
            for &o in &orbit {
                seen[o] = true;
            }
            sizes.push(orbit.len());
        }
        sizes
    }

    #[test]
    fn class_equation() {
        for t in [TypeLabel::A(3), TypeLabel::B(3), TypeLabel::D(4), TypeLabel::I2(6), TypeLabel::I2(7)] {
            let g = enumerate_group(t, DEFAULT_MAX_ORDER).unwrap();
            let cd = g.classes();
            assert_eq!(cd.sizes().iter().sum::<usize>(), g.order());
            assert!(cd.sizes().iter().all(|s| g.order().is_multiple_of(*s)));
            assert_eq!(cd.sizes(), brute_force_class_sizes(&g).as_slice(), "{t}");
        }
    }

    #[test]
    fn product_examples() {
        let t = GroupElement::Perm(Permutation::transposition(3, 0, 1));
        assert!(t.multiply(&t).unwrap().is_identity());
        let x = GroupElement::Signed(SignedPermutation::sign_flip(3, 0));
        assert!(x.multiply(&x).unwrap().is_identity());
        let r = GroupElement::Dihedral(DihedralElement::rotation(4));
        let s = GroupElement::Dihedral(DihedralElement::reflection(4));
        let rsrs = r.multiply(&s).unwrap().multiply(&r).unwrap().multiply(&s).unwrap();
        assert!(rsrs.is_identity());
        assert!(matches!(t.multiply(&x), Err(Error::GroupMismatch)));
        let t4 = GroupElement::Perm(Permutation::transposition(4, 0, 1));
        assert!(t.multiply(&t4).is_err());
    }

    #[test]
    fn presentations() {
        for t in [TypeLabel::A(3), TypeLabel::B(3), TypeLabel::D(4), TypeLabel::I2(5), TypeLabel::I2(4)] {
            let check = verify_presentation(t, DEFAULT_MAX_ORDER).unwrap();
            assert!(check.holds(), "{t}: {check:?}");
        }
    }

    #[test]
    fn words_evaluate_to_elements() {
        let g = enumerate_group(TypeLabel::B(3), DEFAULT_MAX_ORDER).unwrap();
        for x in 0..g.order() {
            let p = g.word(x).iter().fold(0, |acc, &gi| g.mul(acc, g.generators()[gi]));
            assert_eq!(p, x);
        }
    }

    #[test]
    fn subgroups() {
        let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
        let t = s3.index_of(&GroupElement::Perm(Permutation::transposition(3, 0, 1))).unwrap();
        let h = Subgroup::from_indices(s3.clone(), "S2", &[0, t]).unwrap();
        assert_eq!(h.index(), 3);
        assert_eq!(h.locate(t), Some(1));
        assert!(Subgroup::from_indices(s3.clone(), "bad", &[0, 1, 2]).is_err());
        assert!(Subgroup::from_indices(s3, "bad", &[1]).is_err());
    }

    #[test]
    fn fixed_space_dimensions() {
        let fixed_dim = |g: &FiniteGroup| {
            let n = g.element(0).natural_matrix().rows();
            let mut rows = Vec::new();
            for &s in g.generators() {
                let m = g.element(s).natural_matrix().sub(&Matrix::identity(n));
                for i in 0..n {
                    rows.push(m.row(i).to_vec());
                }
            }
            n - Matrix::from_rows(rows).unwrap().rank().unwrap()
        };
        for n in 2..=5 {
            assert_eq!(fixed_dim(&FiniteGroup::symmetric(n).unwrap()), 1);
            assert_eq!(fixed_dim(&FiniteGroup::hyperoctahedral(n).unwrap()), 0);
        }
        assert_eq!(fixed_dim(&FiniteGroup::even_signed(4).unwrap()), 0);
    }
}
