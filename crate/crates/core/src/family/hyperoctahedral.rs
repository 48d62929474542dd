use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::arith::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElement, Permutation, SignedPermutation, Subgroup};
use crate::rep::{induce_character, CharacterTable, ClassFunction};
use crate::symmetric::{character_by_cycle_type, hook_dimension, partitions_of, Partition};

/// `ψ_a(x) = Π x_i^{a_i}` on `(Z/2)^n`, written additively as `a ∈ {0,1}^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignCharacter {
    a: Vec<u8>,
}

impl SignCharacter {
    pub fn new(a: Vec<u8>) -> Result<Self> {
        if a.iter().any(|&x| x > 1) {
            return Err(Error::Shape(format!("{a:?} is not a 0/1 vector")));
        }
        Ok(SignCharacter { a })
    }

    /// `(0,…,0,1,…,1)` with `ones` trailing ones.
    pub fn representative(n: usize, ones: usize) -> Self {
        SignCharacter { a: (0..n).map(|i| (i >= n - ones) as u8).collect() }
    }

    pub fn coefficients(&self) -> &[u8] {
        &self.a
    }

    pub fn ones(&self) -> usize {
        self.a.iter().filter(|&&x| x == 1).count()
    }

    /// `±1` on the sign part of `x`.
    pub fn value(&self, x: &SignedPermutation) -> i64 {
        let odd = (0..self.a.len()).filter(|&i| self.a[i] == 1 && x.is_negative(i)).count() % 2 == 1;
        if odd {
            -1
        } else {
            1
        }
    }

    /// The character `σ·ψ_a = ψ_{a ∘ σ⁻¹}`.
    fn permuted(&self, sigma: &Permutation) -> Self {
        let inv = sigma.inverse();
        SignCharacter { a: (0..self.a.len()).map(|i| self.a[inv.apply(i)]).collect() }
    }
}

/// `(0,0,1)`.
impl fmt::Display for SignCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.a.iter().map(u8::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Orbits of `S_n` on the sign characters, each with its stabilizer as an
/// explicit subgroup of `S_n`. Representatives have their ones trailing;
/// orbits are listed by number of ones.
pub fn sign_character_orbits(n: usize) -> Result<Vec<(SignCharacter, Subgroup)>> {
    if n == 0 || n > 8 {
        return Err(Error::OutOfRange { value: n, range: "1 <= n <= 8" });
    }
    let sn = Arc::new(FiniteGroup::symmetric(n)?);
    let gens: Vec<Permutation> = sn
        .generators()
        .iter()
        .map(|&g| sn.element(g).as_perm().expect("S_n").clone())
        .collect();
    let mut seen: HashSet<SignCharacter> = HashSet::new();
    let mut orbits: Vec<SignCharacter> = Vec::new();
    for mask in 0..(1u32 << n) {
        let start = SignCharacter { a: (0..n).map(|i| (mask >> i & 1) as u8).collect() };
        if seen.contains(&start) {
            continue;
        }
        let mut orbit = vec![start.clone()];
        seen.insert(start.clone());
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = x.permuted(g);
                if seen.insert(y.clone()) {
                    orbit.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        orbits.push(orbit.into_iter().min().expect("nonempty"));
    }
    orbits.sort_by_key(SignCharacter::ones);
    orbits
        .into_iter()
        .map(|psi| {
            let stab: Vec<usize> = (0..sn.order())
                .filter(|&i| psi.permuted(sn.element(i).as_perm().expect("S_n")) == psi)
                .collect();
            let name = format!("Stab{psi}");
            let h = Subgroup::from_indices(sn.clone(), name, &stab)?;
            Ok((psi, h))
        })
        .collect()
}

/// `(λ, μ) ⊨ n`: `λ ⊢ a` sits on the coordinates where the sign character
/// is 0, `μ ⊢ b` on those where it is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    pub lambda: Partition,
    pub mu: Partition,
}

impl Bipartition {
    pub fn n(&self) -> usize {
        self.lambda.size() + self.mu.size()
    }

    /// `B:(2,1|1)`.
    pub fn label(&self) -> String {
        format!("B:{self}")
    }
}

/// `(2,1|1)`; an empty side is `-`.
impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.lambda.comma_form(), self.mu.comma_form())
    }
}

/// All `(λ, μ) ⊨ n`, by decreasing `|λ|` and then partition order.
pub fn bipartitions(n: usize) -> Result<Vec<Bipartition>> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for lambda in partitions_of(a)? {
            for mu in partitions_of(n - a)? {
                out.push(Bipartition { lambda: lambda.clone(), mu });
            }
        }
    }
    Ok(out)
}

/// `dim U_(λ,μ) = C(n, a) · dim V_λ · dim V_μ`.
pub fn bn_dimension(label: &Bipartition) -> BigUint {
    let (n, a) = (label.n(), label.lambda.size());
    let binom: BigUint = (0..a).fold(BigUint::from(1u32), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1));
    binom * hook_dimension(&label.lambda) * hook_dimension(&label.mu)
}

/// Degrees of all irreducibles of `B_n` for `n ≤ 8`, without characters.
pub fn hyperoctahedral_dimensions(n: usize) -> Result<Vec<(Bipartition, BigUint)>> {
    if n == 0 || n > 8 {
        return Err(Error::OutOfRange { value: n, range: "1 <= n <= 8" });
    }
    Ok(bipartitions(n)?.into_iter().map(|b| {
        let d = bn_dimension(&b);
        (b, d)
    }).collect())
}

#[derive(Debug, Clone)]
pub struct BnIrrep {
    pub label: Bipartition,
    pub character: ClassFunction,
    pub dim: u64,
}

/// `K_a = (Z/2)^n ⋊ (S_a × S_b)`: the elements of `B_n` whose permutation
/// preserves `{0..a}` and `{a..n}`.
pub(crate) fn little_group(bn: &Arc<FiniteGroup>, a: usize) -> Result<Subgroup> {
    let idx: Vec<usize> = (0..bn.order())
        .filter(|&i| {
            let p = bn.element(i).as_signed().expect("B_n").perm();
            (0..a).all(|j| p.apply(j) < a)
        })
        .collect();
    Subgroup::from_indices(bn.clone(), format!("K{a}"), &idx)
}

/// `φ̃(x) = Π_{i ≥ a} x_i`, the extension of the orbit representative with
/// trailing ones to `K_a`.
pub(crate) fn extended_sign(x: &SignedPermutation, a: usize) -> i64 {
    SignCharacter::representative(x.degree(), x.degree() - a).value(x)
}

/// Cycle types of `σ` restricted to `{0..a}` and to `{a..n}`.
pub(crate) fn block_cycle_types(p: &Permutation, a: usize) -> (Partition, Partition) {
    let (low, high): (Vec<_>, Vec<_>) = p.cycles().into_iter().partition(|c| c[0] < a);
    (
        Partition::from_parts(low.iter().map(Vec::len).collect()),
        Partition::from_parts(high.iter().map(Vec::len).collect()),
    )
}

fn check_extension_is_homomorphism(k: &Subgroup, a: usize) -> Result<()> {
    let g = k.group();
    let sign = |i: usize| extended_sign(g.element(i).as_signed().expect("B_n"), a);
    for x in 0..g.order() {
        for &s in g.generators() {
            if sign(g.mul(x, s)) != sign(x) * sign(s) {
                return Err(Error::Inconsistent(format!("extended sign character on K{a} is not multiplicative")));
            }
        }
    }
    Ok(())
}

/// `φ̃ ⊗ (χ_λ × χ_μ)` on `K_a`.
pub(crate) fn little_group_character(
    k: &Subgroup,
    a: usize,
    chi_lambda: &HashMap<Partition, Cyclotomic>,
    chi_mu: &HashMap<Partition, Cyclotomic>,
) -> Result<ClassFunction> {
    let g = k.group();
    let cd = g.classes().clone();
    let values = cd
        .representatives()
        .iter()
        .map(|&r| {
            let x = g.element(r).as_signed().expect("B_n");
            let (t0, t1) = block_cycle_types(x.perm(), a);
            let v0 = chi_lambda.get(&t0).ok_or(Error::ClassMismatch)?;
            let v1 = chi_mu.get(&t1).ok_or(Error::ClassMismatch)?;
            Ok(&(v0 * v1) * &Cyclotomic::from_int(extended_sign(x, a)))
        })
        .collect::<Result<Vec<_>>>()?;
    ClassFunction::new(cd, values)
}

fn cached_character<'a>(
    cache: &'a mut HashMap<Partition, HashMap<Partition, Cyclotomic>>,
    p: &Partition,
) -> Result<&'a HashMap<Partition, Cyclotomic>> {
    if !cache.contains_key(p) {
        cache.insert(p.clone(), character_by_cycle_type(p)?);
    }
    Ok(&cache[p])
}

/// The irreducible characters of `B_n` (`n ≤ 4`) as induced characters
/// `Ind_{K_a}^{B_n} φ̃ ⊗ (χ_λ × χ_μ)`, computed on `group`.
pub fn hyperoctahedral_irreducibles_on(group: &Arc<FiniteGroup>, n: usize) -> Result<Vec<BnIrrep>> {
    if n == 0 || n > 4 {
        return Err(Error::OutOfRange { value: n, range: "1 <= n <= 4" });
    }
    let mut cache = HashMap::new();
    let mut little: HashMap<usize, Subgroup> = HashMap::new();
    let mut out = Vec::new();
    for label in bipartitions(n)? {
        let a = label.lambda.size();
        if let std::collections::hash_map::Entry::Vacant(e) = little.entry(a) {
            let k = little_group(group, a)?;
            check_extension_is_homomorphism(&k, a)?;
            e.insert(k);
        }
        let k = &little[&a];
        let chi_l = cached_character(&mut cache, &label.lambda)?.clone();
        let chi_m = cached_character(&mut cache, &label.mu)?;
        let psi = little_group_character(k, a, &chi_l, chi_m)?;
        let character = induce_character(&psi, k)?;
        let dim = character
            .integer_degree()
            .ok_or_else(|| Error::Inconsistent(format!("degree of {label} is not a natural number")))?;
        if BigUint::from(dim) != bn_dimension(&label) {
            return Err(Error::Inconsistent(format!("{label}: induced degree {dim} disagrees with the dimension law")));
        }
        out.push(BnIrrep { label, character, dim });
    }
    Ok(out)
}

pub fn hyperoctahedral_irreducibles(n: usize) -> Result<Vec<BnIrrep>> {
    let group = Arc::new(FiniteGroup::hyperoctahedral(n)?);
    hyperoctahedral_irreducibles_on(&group, n)
}

pub fn hyperoctahedral_character_table(n: usize) -> Result<CharacterTable> {
    let group = Arc::new(FiniteGroup::hyperoctahedral(n)?);
    let irr = hyperoctahedral_irreducibles_on(&group, n)?;
    Ok(CharacterTable {
        group,
        labels: irr.iter().map(|i| i.label.label()).collect(),
        characters: irr.into_iter().map(|i| i.character).collect(),
    })
}

/// Conjugacy classes of `B_n` matched to bipartitions by signed cycle type.
#[derive(Debug, Clone)]
pub struct BnClassReport {
    /// `(label, representative, class size)` in class order.
    pub classes: Vec<(Bipartition, GroupElement, usize)>,
    pub class_count: usize,
    pub label_count: usize,
}

impl BnClassReport {
    pub fn is_bijective(&self) -> bool {
        let labels: HashSet<&Bipartition> = self.classes.iter().map(|c| &c.0).collect();
        self.class_count == self.label_count && labels.len() == self.class_count
    }
}

/// Pairs the conjugacy classes of `B_n` (`n ≤ 4`) with bipartitions:
/// positive cycles give `λ`, negative cycles give `μ`.
pub fn bn_conjugacy_parametrization(n: usize) -> Result<BnClassReport> {
    if n == 0 || n > 4 {
        return Err(Error::OutOfRange { value: n, range: "1 <= n <= 4" });
    }
    let g = FiniteGroup::hyperoctahedral(n)?;
    let cd = g.classes();
    let classes: Vec<_> = (0..cd.count())
        .map(|c| {
            let rep = g.element(cd.representative(c));
            let (lambda, mu) = rep.as_signed().expect("B_n").signed_cycle_type();
            (Bipartition { lambda, mu }, rep.clone(), cd.size(c))
        })
        .collect();
    let label_count = bipartitions(n)?.len();
    let report = BnClassReport { class_count: classes.len(), classes, label_count };
    if report.class_count != report.label_count {
        return Err(Error::Inconsistent(format!(
            "B{n} has {} classes but {} bipartitions",
            report.class_count, report.label_count
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;
    use crate::rep::{inner_product, restrict_character};

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn orbits() {
        let o3 = sign_character_orbits(3).unwrap();
        let reps: Vec<String> = o3.iter().map(|(p, _)| p.to_string()).collect();
        assert_eq!(reps, vec!["(0,0,0)", "(0,0,1)", "(0,1,1)", "(1,1,1)"]);
        assert_eq!(sign_character_orbits(1).unwrap().len(), 2);
        let o4 = sign_character_orbits(4).unwrap();
        assert_eq!(o4[2].1.group().order(), 4);
        assert_eq!(o4[0].1.group().order(), 24);
    }

    #[test]
    fn class_parametrization() {
        for (n, count) in [(1, 2), (2, 5), (3, 10), (4, 20)] {
            let r = bn_conjugacy_parametrization(n).unwrap();
            assert_eq!(r.class_count, count);
            assert!(r.is_bijective());
        }
    }

    #[test]
    fn b3_spectrum() {
        let irr = hyperoctahedral_irreducibles(3).unwrap();
        let mut dims: Vec<u64> = irr.iter().map(|i| i.dim).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 1, 1, 1, 2, 2, 3, 3, 3, 3]);
        assert_eq!(irr[0].label.label(), "B:(3|-)");
        assert!(irr[0].character.values().iter().all(Field::is_one));
    }

    #[test]
    fn b2_and_orthonormality() {
        for n in 1..=3 {
            let irr = hyperoctahedral_irreducibles(n).unwrap();
            let order: u64 = (1..=n as u64).product::<u64>() << n;
            assert_eq!(irr.iter().map(|i| i.dim * i.dim).sum::<u64>(), order);
            for (i, x) in irr.iter().enumerate() {
                for (j, y) in irr.iter().enumerate() {
                    assert_eq!(
                        inner_product(&x.character, &y.character).unwrap(),
                        Cyclotomic::from_int((i == j) as i64)
                    );
                }
            }
        }
    }

    #[test]
    fn dimension_law_to_eight() {
        for n in 1..=8usize {
            let total: BigUint = hyperoctahedral_dimensions(n).unwrap().iter().map(|(_, d)| d.pow(2)).sum();
            let order: BigUint = (1..=n).map(BigUint::from).product::<BigUint>() << n;
            assert_eq!(total, order, "n = {n}");
        }
    }

    #[test]
    fn frobenius_on_building_blocks() {
        let bn = Arc::new(FiniteGroup::hyperoctahedral(3).unwrap());
        let irr = hyperoctahedral_irreducibles_on(&bn, 3).unwrap();
        let k = little_group(&bn, 2).unwrap();
        let chi_l = character_by_cycle_type(&part(&[2])).unwrap();
        let chi_m = character_by_cycle_type(&part(&[1])).unwrap();
        let psi = little_group_character(&k, 2, &chi_l, &chi_m).unwrap();
        let ind = induce_character(&psi, &k).unwrap();
        for phi in &irr {
            let lhs = inner_product(&ind, &phi.character).unwrap();
            let rhs = inner_product(&psi, &restrict_character(&phi.character, &k).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
