//! Partitions, tableaux, Young symmetrizers and the Specht-type modules
//! `V_λ`, which give every irreducible representation of `S_n`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::{Cyclotomic, Matrix, Rational};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElement, Permutation, Subgroup, DEFAULT_MAX_ORDER};
use crate::rep::{character_of, CharacterTable, ClassFunction, GroupAlgebraElement, Representation};

/// `λ_1 ≥ λ_2 ≥ … ≥ λ_k > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Rejects parts that are zero or increasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Shape(format!("{parts:?} is not a partition")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts into decreasing order and drops zeros.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `n = Σ λ_i`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The transposed diagram.
    pub fn conjugate(&self) -> Self {
        let cols = self.parts.first().copied().unwrap_or(0);
        Partition { parts: (0..cols).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect() }
    }

    /// Hook number of every box, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| (0..row).map(|j| (row - j - 1) + (conj.parts[j] - i - 1) + 1).collect())
            .collect()
    }

    /// Parts joined by commas, `-` for the empty partition.
    pub fn comma_form(&self) -> String {
        if self.parts.is_empty() {
            return "-".into();
        }
        self.parts.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    }
}

/// `5+3+1`; the empty partition is `-`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "{}", s.join("+"))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `5+3+1`, `5,3,1`, and `-` or the empty string for `()`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::default());
        }
        let parts = s
            .split(['+', ','])
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Shape(format!("cannot parse partition {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order, `n ≤ 40`.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    if n > 40 {
        return Err(Error::OutOfRange { value: n, range: "n <= 40" });
    }
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            rec(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `h_λ`, the product of all hook numbers.
pub fn hook_product(shape: &Partition) -> BigUint {
    shape.hook_lengths().iter().flatten().map(|&h| BigUint::from(h)).product()
}

/// `n!/h_λ`.
pub fn hook_dimension(shape: &Partition) -> BigUint {
    let factorial: BigUint = (1..=shape.size()).map(BigUint::from).product();
    let h = hook_product(shape);
    assert!((&factorial % &h).is_zero(), "hook product does not divide n!");
    factorial / h
}

/// A filling of a Young diagram with `1..=n`, each used once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Shape(format!("{rows:?} does not use 1..={n} exactly once")));
            }
        }
        Ok(Tableau { shape, rows })
    }

    /// `T_λ(id)`: rows filled left to right, top to bottom.
    pub fn identity(shape: &Partition) -> Self {
        let mut next = 0;
        let rows = shape
            .parts
            .iter()
            .map(|&len| {
                (0..len)
                    .map(|_| {
                        next += 1;
                        next
                    })
                    .collect()
            })
            .collect();
        Tableau { shape: shape.clone(), rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.shape.parts.first().copied().unwrap_or(0);
        (0..width).map(|j| self.rows.iter().filter_map(|r| r.get(j).copied()).collect()).collect()
    }

    /// Permutations preserving every row.
    pub fn row_group(&self) -> YoungGroup {
        YoungGroup::new(self.shape.size(), &self.rows)
    }

    /// Permutations preserving every column.
    pub fn column_group(&self) -> YoungGroup {
        YoungGroup::new(self.shape.size(), &self.columns())
    }
}

/// `S_{B_1} × S_{B_2} × …` for disjoint blocks of points, stored 1-based as
/// in tableaux.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungGroup {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl YoungGroup {
    fn new(n: usize, blocks: &[Vec<usize>]) -> Self {
        let blocks = blocks.iter().filter(|b| b.len() > 1).cloned().collect();
        YoungGroup { n, blocks }
    }

    /// The nontrivial blocks.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn order(&self) -> u128 {
        self.blocks.iter().map(|b| (1..=b.len() as u128).product::<u128>()).product()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        let mut block_of = vec![usize::MAX; self.n];
        for (k, b) in self.blocks.iter().enumerate() {
            for &x in b {
                block_of[x - 1] = k;
            }
        }
        (0..self.n).all(|i| block_of[i] == block_of[p.apply(i)])
    }

    /// Every element, as permutations of `0..n`.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > DEFAULT_MAX_ORDER {
            return Err(Error::OrderTooLarge { order, limit: DEFAULT_MAX_ORDER });
        }
        let mut out = vec![(0..self.n).collect::<Vec<usize>>()];
        for block in &self.blocks {
            let pts: Vec<usize> = block.iter().map(|x| x - 1).collect();
            let mut next = Vec::new();
            for images in &out {
                for arrangement in arrangements(&pts) {
                    let mut im = images.clone();
                    for (&src, &dst) in pts.iter().zip(&arrangement) {
                        im[src] = dst;
                    }
                    next.push(im);
                }
            }
            out = next;
        }
        out.into_iter().map(Permutation::new).collect()
    }

    /// The same group inside `parent`, which must be `S_n` on the same points.
    pub fn to_subgroup(&self, parent: Arc<FiniteGroup>) -> Result<Subgroup> {
        let indices = self
            .elements()?
            .into_iter()
            .map(|p| {
                parent
                    .index_of(&GroupElement::Perm(p))
                    .ok_or_else(|| Error::NotSubgroup(format!("{} does not contain S{}", parent.name(), self.n)))
            })
            .collect::<Result<Vec<_>>>()?;
        Subgroup::from_indices(parent, self.to_string(), &indices)
    }
}

/// `S{1,2,3,4,5} x S{6,7,8}`; the trivial group is `1`.
impl fmt::Display for YoungGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| format!("S{{{}}}", b.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{}", parts.join(" x "))
    }
}

fn arrangements(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut tail in arrangements(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// `R_λ` and `C_λ` of the tableau `T_λ(id)`.
pub fn row_column_groups(shape: &Partition) -> Result<(YoungGroup, YoungGroup)> {
    let t = Tableau::identity(shape);
    let (r, c) = (t.row_group(), t.column_group());
    for g in [&r, &c] {
        if g.order() > DEFAULT_MAX_ORDER {
            return Err(Error::OrderTooLarge { order: g.order(), limit: DEFAULT_MAX_ORDER });
        }
    }
    Ok((r, c))
}

/// `c_λ = a_λ b_λ` with `a_λ = Σ_{σ ∈ R_λ} σ` and `b_λ = Σ_{τ ∈ C_λ} sgn(τ) τ`.
pub fn young_symmetrizer(shape: &Partition) -> Result<GroupAlgebraElement> {
    if shape.size() > 7 {
        return Err(Error::OutOfRange { value: shape.size(), range: "n <= 7" });
    }
    let (r, c) = row_column_groups(shape)?;
    let one = Rational::one();
    let a = GroupAlgebraElement::from_terms(r.elements()?.into_iter().map(|p| (GroupElement::Perm(p), one.clone())));
    let b = GroupAlgebraElement::from_terms(
        c.elements()?
            .into_iter()
            .map(|p| {
                let s = Rational::from_integer(p.sign().into());
                (GroupElement::Perm(p), s)
            }),
    );
    a.mul(&b)
}

/// A subspace of `Q^N` kept as a fully reduced echelon basis of sparse rows.
struct EchelonSpan {
    rows: Vec<(usize, BTreeMap<usize, Rational>)>,
}

impl EchelonSpan {
    /// Adds `v` if it is independent; returns whether it was.
    fn insert(&mut self, mut v: BTreeMap<usize, Rational>) -> bool {
        for (pivot, row) in &self.rows {
            if let Some(c) = v.get(pivot).cloned() {
                for (k, x) in row {
                    let e = v.entry(*k).or_insert_with(Rational::zero);
                    *e -= &c * x;
                    if e.is_zero() {
                        v.remove(k);
                    }
                }
            }
        }
        let Some((&pivot, lead)) = v.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        for x in v.values_mut() {
            *x *= &inv;
        }
        for (_, row) in &mut self.rows {
            if let Some(c) = row.get(&pivot).cloned() {
                for (k, x) in &v {
                    let e = row.entry(*k).or_insert_with(Rational::zero);
                    *e -= &c * x;
                    if e.is_zero() {
                        row.remove(k);
                    }
                }
            }
        }
        self.rows.push((pivot, v));
        true
    }

    /// Coordinates of a vector known to lie in the span.
    fn coordinates(&self, v: &BTreeMap<usize, Rational>) -> Vec<Rational> {
        self.rows.iter().map(|(p, _)| v.get(p).cloned().unwrap_or_else(Rational::zero)).collect()
    }
}

/// `V_λ = span{σ c_λ : σ ∈ S_n}` inside the group algebra of `group = S_n`,
/// with generator matrices in an echelon basis of that span.
pub fn specht_module_in(group: &Arc<FiniteGroup>, shape: &Partition) -> Result<Representation<Rational>> {
    let n = shape.size();
    if n > 6 {
        return Err(Error::OutOfRange { value: n, range: "n <= 6" });
    }
    let degree = group.element(0).as_perm().map(Permutation::degree);
    if degree != Some(n) {
        return Err(Error::GroupMismatch);
    }
    let c = young_symmetrizer(shape)?;
    let c_vec: Vec<(usize, Rational)> = c
        .terms()
        .map(|(g, x)| (group.index_of(g).expect("element of S_n"), x.clone()))
        .collect();
    let translate = |sigma: usize, v: &[(usize, Rational)]| -> BTreeMap<usize, Rational> {
        v.iter().map(|(x, a)| (group.mul(sigma, *x), a.clone())).collect()
    };
    let mut span = EchelonSpan { rows: Vec::new() };
    for sigma in 0..group.order() {
        span.insert(translate(sigma, &c_vec));
    }
    let d = span.rows.len();
    let basis: Vec<Vec<(usize, Rational)>> =
        span.rows.iter().map(|(_, r)| r.iter().map(|(k, x)| (*k, x.clone())).collect()).collect();
    let gens = group
        .generators()
        .iter()
        .map(|&s| {
            let mut m = Matrix::zeros(d, d);
            for (j, b) in basis.iter().enumerate() {
                for (i, x) in span.coordinates(&translate(s, b)).into_iter().enumerate() {
                    m.set(i, j, x);
                }
            }
            m
        })
        .collect();
    Representation::new(group.clone(), gens)
}

pub fn specht_module(shape: &Partition) -> Result<Representation<Rational>> {
    let group = Arc::new(FiniteGroup::symmetric(shape.size())?);
    specht_module_in(&group, shape)
}

/// Characters of all `V_λ`, rows indexed by `partitions_of(n)`.
pub fn symmetric_character_table(n: usize) -> Result<CharacterTable> {
    if n == 0 || n > 6 {
        return Err(Error::OutOfRange { value: n, range: "1 <= n <= 6" });
    }
    let group = Arc::new(FiniteGroup::symmetric(n)?);
    let shapes = partitions_of(n)?;
    let characters = shapes
        .iter()
        .map(|s| character_of(&specht_module_in(&group, s)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(CharacterTable { group, labels: shapes.iter().map(Partition::to_string).collect(), characters })
}

/// `χ_λ` as a function of cycle type, for `λ ⊢ n ≤ 6`. The empty
/// partition gives the trivial character of `S_0`.
pub fn character_by_cycle_type(shape: &Partition) -> Result<HashMap<Partition, Cyclotomic>> {
    if shape.is_empty() {
        return Ok(HashMap::from([(Partition::default(), Cyclotomic::one())]));
    }
    let rep = specht_module(shape)?;
    let chi = character_of(&rep)?;
    let g = rep.group();
    let cd = g.classes();
    Ok((0..cd.count())
        .map(|c| {
            let p = g.element(cd.representative(c)).as_perm().expect("S_n").cycle_type();
            (p, chi.value(c).clone())
        })
        .collect())
}

/// The character `χ_λ` of `S_n` as a class function on `group = S_n`.
pub fn class_function_from_cycle_types(group: &FiniteGroup, values: &HashMap<Partition, Cyclotomic>) -> Result<ClassFunction> {
    let cd = group.classes().clone();
    let vals = cd
        .representatives()
        .iter()
        .map(|&r| {
            let ct = group.element(r).as_perm().ok_or(Error::GroupMismatch)?.cycle_type();
            values.get(&ct).cloned().ok_or(Error::ClassMismatch)
        })
        .collect::<Result<Vec<_>>>()?;
    ClassFunction::new(cd, vals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{inner_product, is_irreducible};
    use proptest::prelude::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    /// Partition numbers from Euler's pentagonal recurrence.
    fn partition_numbers(n: usize) -> Vec<u64> {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n as i64 {
            let mut k = 1i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                p[m as usize] += sign * p[(m - g1) as usize];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= m {
                    p[m as usize] += sign * p[(m - g2) as usize];
                }
                k += 1;
            }
        }
        p.into_iter().map(|x| x as u64).collect()
    }

    #[test]
    fn enumeration() {
        let p3 = partitions_of(3).unwrap();
        assert_eq!(p3, vec![part(&[3]), part(&[2, 1]), part(&[1, 1, 1])]);
        assert_eq!(partitions_of(0).unwrap(), vec![Partition::default()]);
        assert_eq!(partitions_of(4).unwrap().len(), 5);
        let counts = partition_numbers(25);
        for n in 0..=25 {
            assert_eq!(partitions_of(n).unwrap().len() as u64, counts[n], "p({n})");
        }
        assert!(partitions_of(41).is_err());
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(part(&[5, 3, 1]).to_string(), "5+3+1");
        assert_eq!("5+3+1".parse::<Partition>().unwrap(), part(&[5, 3, 1]));
        assert_eq!("2,1".parse::<Partition>().unwrap(), part(&[2, 1]));
        assert!("1+2".parse::<Partition>().is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::default().to_string(), "-");
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
    }

    // independent oracle: f^λ = Σ f^{λ - corner}, f^∅ = 1
    fn branching_dimension(parts: &[usize]) -> u64 {
        if parts.is_empty() {
            return 1;
        }
        let mut total = 0;
        for i in 0..parts.len() {
            if i + 1 == parts.len() || parts[i] > parts[i + 1] {
                let mut q = parts.to_vec();
                q[i] -= 1;
                if q[i] == 0 {
                    q.pop();
                }
                total += branching_dimension(&q);
            }
        }
        total
    }

    #[test]
    fn hooks() {
        let h = part(&[5, 3, 1]).hook_lengths();
        assert_eq!(h, vec![vec![7, 5, 4, 2, 1], vec![4, 2, 1], vec![1]]);
        assert_eq!(hook_product(&part(&[5, 3, 1])), BigUint::from(2240u32));
        assert_eq!(hook_dimension(&part(&[5, 3, 1])), BigUint::from(branching_dimension(&[5, 3, 1])));
        // the tableau 7 6 4 2 1 / 4 3 1 / 2 1 has shape (5,3,2)
        let h = part(&[5, 3, 2]).hook_lengths();
        assert_eq!(h, vec![vec![7, 6, 4, 2, 1], vec![4, 3, 1], vec![2, 1]]);
        assert_eq!(hook_product(&part(&[5, 3, 2])), BigUint::from(8064u32));
        assert_eq!(hook_dimension(&part(&[5, 3, 2])), BigUint::from(450u32));
        assert_eq!(hook_dimension(&part(&[2, 1])), BigUint::from(2u32));
        assert_eq!(hook_dimension(&part(&[7])), BigUint::one());
        for n in 1..=10 {
            for l in partitions_of(n).unwrap() {
                assert_eq!(hook_dimension(&l), BigUint::from(branching_dimension(l.parts())), "{l}");
            }
        }
    }

    #[test]
    fn hook_squares_sum_to_factorial() {
        for n in 1..=12usize {
            let total: BigUint = partitions_of(n).unwrap().iter().map(|l| hook_dimension(l).pow(2)).sum();
            let fact: BigUint = (1..=n).map(BigUint::from).product();
            assert_eq!(total, fact, "n = {n}");
        }
    }

    #[test]
    fn row_and_column_groups() {
        let (r, c) = row_column_groups(&part(&[5, 3, 1])).unwrap();
        assert_eq!(r.to_string(), "S{1,2,3,4,5} x S{6,7,8}");
        assert_eq!(c.to_string(), "S{1,6,9} x S{2,7} x S{3,8}");
        assert_eq!((r.order(), c.order()), (720, 24));
        assert_eq!(c.elements().unwrap().len(), 24);
        let (r, c) = row_column_groups(&part(&[4])).unwrap();
        assert_eq!((r.order(), c.order()), (24, 1));
        let (r, c) = row_column_groups(&part(&[1, 1, 1])).unwrap();
        assert_eq!((r.order(), c.order()), (1, 6));
        assert!(c.contains(&Permutation::from_cycles(3, &[&[0, 2]]).unwrap()));
    }

    #[test]
    fn symmetrizers() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let c3 = young_symmetrizer(&part(&[3])).unwrap();
        assert_eq!(c3.len(), 6);
        assert!(c3.terms().all(|(_, x)| x.is_one()));
        let c111 = young_symmetrizer(&part(&[1, 1, 1])).unwrap();
        for g in s3.elements() {
            let sgn = g.as_perm().unwrap().sign();
            assert_eq!(c111.coeff(g), Rational::from_integer(sgn.into()));
        }
        let c21 = young_symmetrizer(&part(&[2, 1])).unwrap();
        let t12 = GroupElement::Perm(Permutation::transposition(3, 0, 1));
        let t13 = GroupElement::Perm(Permutation::transposition(3, 0, 2));
        let one = Rational::one();
        let expected = GroupAlgebraElement::from_terms([
            (s3.element(0).clone(), one.clone()),
            (t12.clone(), one.clone()),
            (t13.clone(), -one.clone()),
            (t12.multiply(&t13).unwrap(), -one),
        ]);
        assert_eq!(c21, expected);
    }

    #[test]
    fn small_modules() {
        let v21 = specht_module(&part(&[2, 1])).unwrap();
        assert_eq!(v21.dim(), 2);
        let chi = character_of(&v21).unwrap();
        let vals: Vec<i64> = chi.values().iter().map(|v| v.to_f64().round() as i64).collect();
        assert_eq!(vals, vec![2, 0, -1]);
        for n in 1..=5 {
            let triv = character_of(&specht_module(&part(&[n])).unwrap()).unwrap();
            assert!(triv.values().iter().all(|v| v == &Cyclotomic::one()));
            let sgn = specht_module(&part(&vec![1; n])).unwrap();
            assert_eq!(sgn.dim(), 1);
        }
    }

    #[test]
    fn modules_match_hooks_and_are_irreducible() {
        for n in 1..=5 {
            let g = Arc::new(FiniteGroup::symmetric(n).unwrap());
            for shape in partitions_of(n).unwrap() {
                let v = specht_module_in(&g, &shape).unwrap();
                assert_eq!(BigUint::from(v.dim()), hook_dimension(&shape), "{shape}");
                assert!(is_irreducible(&v).unwrap(), "{shape}");
            }
        }
    }

    #[test]
    fn table_is_orthonormal() {
        for n in 2..=5 {
            let t = symmetric_character_table(n).unwrap();
            assert_eq!(t.characters.len(), t.group.classes().count());
            for (i, a) in t.characters.iter().enumerate() {
                for (j, b) in t.characters.iter().enumerate() {
                    let ip = inner_product(a, b).unwrap();
                    assert_eq!(ip, Cyclotomic::from_int((i == j) as i64), "n={n} {i} {j}");
                }
            }
        }
    }

    #[test]
    fn symmetrizer_acts_as_scalar() {
        // c_λ · c_λ = (n!/dim V_λ) c_λ
        for n in 2..=5 {
            for shape in partitions_of(n).unwrap() {
                let c = young_symmetrizer(&shape).unwrap();
                let fact: u64 = (1..=n as u64).product();
                let dim: u64 = hook_dimension(&shape).try_into().unwrap();
                let scalar = Rational::from_integer(((fact / dim) as i64).into());
                assert_eq!(c.mul(&c).unwrap(), c.scale(&scalar), "{shape}");
            }
        }
    }

    proptest! {
        #[test]
        fn display_roundtrip(parts in prop::collection::vec(1usize..9, 0..8)) {
            let p = Partition::from_parts(parts);
            prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p.clone());
            prop_assert_eq!(p.conjugate().conjugate(), p.clone());
            prop_assert_eq!(p.conjugate().size(), p.size());
        }
    }
}
