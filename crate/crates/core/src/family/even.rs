use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::arith::{rational_sqrt, Cyclotomic, Field, Matrix, Rational};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Permutation, Subgroup};
use crate::rep::{character_of, inner_product, restrict_character, CharacterTable, ClassFunction, Representation};
use crate::symmetric::{specht_module, Partition};

use super::hyperoctahedral::{extended_sign, hyperoctahedral_irreducibles_on, little_group, Bipartition};

/// Label of an irreducible of `D_n`: the restriction of `U_(λ,μ)` for
/// `λ ≠ μ` (an unordered pair), or one half of the restriction of `U_(λ,λ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DnLabel {
    Pair(Partition, Partition),
    Split(Partition, bool),
}

/// `D:{λ|μ}` and `D:(λ|λ|+)`.
impl fmt::Display for DnLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DnLabel::Pair(l, m) => write!(f, "D:{{{}|{}}}", l.comma_form(), m.comma_form()),
            DnLabel::Split(l, plus) => {
                let s = if *plus { '+' } else { '-' };
                write!(f, "D:({}|{}|{s})", l.comma_form(), l.comma_form())
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct DnIrrep {
    pub label: DnLabel,
    pub character: ClassFunction,
    pub dim: u64,
}

/// Explicit matrices of `U_(λ,μ) = Ind_{K_a}^{B_n} φ̃ ⊗ (V_λ ⊠ V_μ)` in the
/// basis `t_i ⊗ w` over left coset representatives `t_i`.
pub struct InducedModule {
    group: Arc<FiniteGroup>,
    a: usize,
    little: Subgroup,
    cosets: Vec<usize>,
    coset_of: Vec<usize>,
    lambda: Representation<Rational>,
    mu: Representation<Rational>,
    block: usize,
}

impl InducedModule {
    pub fn new(group: Arc<FiniteGroup>, label: &Bipartition) -> Result<Self> {
        let a = label.lambda.size();
        let little = little_group(&group, a)?;
        let mut coset_of = vec![usize::MAX; group.order()];
        let mut cosets = Vec::new();
        for t in 0..group.order() {
            if coset_of[t] != usize::MAX {
                continue;
            }
            for k in 0..little.group().order() {
                coset_of[group.mul(t, little.embed(k))] = cosets.len();
            }
            cosets.push(t);
        }
        let lambda = specht_module(&label.lambda)?;
        let mu = specht_module(&label.mu)?;
        let block = lambda.dim() * mu.dim();
        Ok(InducedModule { group, a, little, cosets, coset_of, lambda, mu, block })
    }

    pub fn dim(&self) -> usize {
        self.cosets.len() * self.block
    }

    /// `φ̃(k) · ρ_λ(σ|_{0..a}) ⊗ ρ_μ(σ|_{a..n})` for `k ∈ K_a` (a parent index).
    fn little_matrix(&self, k: usize) -> Result<Matrix<Rational>> {
        let x = self.group.element(k).as_signed().expect("B_n");
        let images = x.perm().images();
        let low = Permutation::new(images[..self.a].to_vec())?;
        let high = Permutation::new(images[self.a..].iter().map(|i| i - self.a).collect())?;
        let find = |rep: &Representation<Rational>, p: Permutation| -> Result<Matrix<Rational>> {
            let g = rep.group();
            let i = g
                .index_of(&crate::group::GroupElement::Perm(p))
                .ok_or_else(|| Error::Inconsistent("block permutation outside S_a".into()))?;
            rep.image(i)
        };
        let m = find(&self.lambda, low)?.kron(&find(&self.mu, high)?);
        Ok(m.scale(&Rational::from_int(extended_sign(x, self.a))))
    }

    /// Matrix of group element `g`: block `(i, j)` is `ρ_K(t_i⁻¹ g t_j)`
    /// where `g t_j ∈ t_i K`.
    pub fn matrix(&self, g: usize) -> Result<Matrix<Rational>> {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for (j, &t) in self.cosets.iter().enumerate() {
            let gt = self.group.mul(g, t);
            let i = self.coset_of[gt];
            let k = self.group.mul(self.group.inv(self.cosets[i]), gt);
            debug_assert!(self.little.locate(k).is_some());
            let b = self.little_matrix(k)?;
            for r in 0..self.block {
                for c in 0..self.block {
                    m.set(i * self.block + r, j * self.block + c, b.get(r, c).clone());
                }
            }
        }
        Ok(m)
    }

    /// The module as a representation of the whole group.
    pub fn representation(&self) -> Result<Representation<Rational>> {
        let gens = self.group.generators().iter().map(|&g| self.matrix(g)).collect::<Result<Vec<_>>>()?;
        Representation::new(self.group.clone(), gens)
    }
}

/// Splits `Res_{D_n} U_(λ,λ)` through a non-scalar element of its
/// commutant and returns the two constituent characters.
fn split_restriction(module: &InducedModule, dn: &Subgroup) -> Result<(ClassFunction, ClassFunction)> {
    let d = module.dim();
    let gens: Vec<Matrix<Rational>> = dn
        .group()
        .generators()
        .iter()
        .map(|&h| module.matrix(dn.embed(h)))
        .collect::<Result<_>>()?;
    // M X - X M = 0 for every generator; unknown X_{kl} is variable k*d + l
    let mut rows = Vec::new();
    for m in &gens {
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![Rational::zero(); d * d];
                for k in 0..d {
                    row[k * d + j] = row[k * d + j].add(m.get(i, k));
                    row[i * d + k] = row[i * d + k].sub(m.get(k, j));
                }
                rows.push(row);
            }
        }
    }
    let commutant = Matrix::from_rows(rows)?.nullspace();
    if commutant.len() != 2 {
        return Err(Error::Inconsistent(format!("commutant has dimension {}, expected 2", commutant.len())));
    }
    let identity = Matrix::<Rational>::identity(d);
    let y = commutant
        .iter()
        .map(|v| Matrix::from_fn(d, d, |i, j| v[i * d + j].clone()))
        .find(|y| {
            let c = y.get(0, 0).clone();
            *y != identity.scale(&c)
        })
        .ok_or_else(|| Error::Inconsistent("commutant is scalar".into()))?;
    // Y² = c1 Y + c0 I
    let y2 = y.mul(&y)?;
    let system = Matrix::from_fn(d * d, 2, |r, c| {
        let (i, j) = (r / d, r % d);
        if c == 0 {
            y.get(i, j).clone()
        } else {
            identity.get(i, j).clone()
        }
    });
    let rhs: Vec<Rational> = y2.entries().cloned().collect();
    let coeffs = system
        .solve(&rhs)
        .ok_or_else(|| Error::Inconsistent("commutant element has no quadratic minimal polynomial".into()))?;
    let (c1, c0) = (&coeffs[0], &coeffs[1]);
    let disc = c1 * c1 + c0 * Rational::from_int(4);
    let s = rational_sqrt(&disc).ok_or_else(|| Error::Inconsistent(format!("eigenvalues are irrational (discriminant {disc})")))?;
    if s.is_zero() {
        return Err(Error::Inconsistent("commutant element has a repeated eigenvalue".into()));
    }
    let two = Rational::from_int(2);
    let (r1, r2) = ((c1 + &s) / &two, (c1 - &s) / &two);
    let e = y.sub(&identity.scale(&r2)).scale(&(r1 - &r2).recip());
    if e.mul(&e)? != e {
        return Err(Error::Inconsistent("splitting projector is not idempotent".into()));
    }

    let cd = dn.group().classes().clone();
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for &h in cd.representatives() {
        let m = module.matrix(dn.embed(h))?;
        let total = m.trace();
        let p = m.mul(&e)?.trace();
        minus.push(Cyclotomic::from_rational(&total - &p));
        plus.push(Cyclotomic::from_rational(p));
    }
    Ok((ClassFunction::new(cd.clone(), plus)?, ClassFunction::new(cd, minus)?))
}

/// The irreducible characters of `D_n` (`2 ≤ n ≤ 4`) by restriction from
/// `B_n`; restrictions of `U_(λ,λ)` are split explicitly.
pub fn dn_irreducibles(n: usize) -> Result<Vec<DnIrrep>> {
    let (_, _, irr) = dn_irreducibles_with_parent(n)?;
    Ok(irr)
}

pub(crate) fn dn_irreducibles_with_parent(n: usize) -> Result<(Arc<FiniteGroup>, Subgroup, Vec<DnIrrep>)> {
    if !(2..=4).contains(&n) {
        return Err(Error::OutOfRange { value: n, range: "2 <= n <= 4" });
    }
    let bn = Arc::new(FiniteGroup::hyperoctahedral(n)?);
    let dn = Subgroup::new(bn.clone(), Arc::new(FiniteGroup::even_signed(n)?))?;
    let mut out: Vec<DnIrrep> = Vec::new();
    let mut seen: HashMap<(Partition, Partition), usize> = HashMap::new();
    for u in hyperoctahedral_irreducibles_on(&bn, n)? {
        let (l, m) = (u.label.lambda.clone(), u.label.mu.clone());
        let res = restrict_character(&u.character, &dn)?;
        if l != m {
            if let Some(&i) = seen.get(&(m.clone(), l.clone())) {
                if out[i].character != res {
                    return Err(Error::Inconsistent(format!("restrictions of {} and its swap differ", u.label)));
                }
                continue;
            }
            seen.insert((l.clone(), m.clone()), out.len());
            out.push(DnIrrep { label: DnLabel::Pair(l, m), character: res, dim: u.dim });
            continue;
        }
        let module = InducedModule::new(bn.clone(), &u.label)?;
        let rep = module.representation()?;
        if character_of(&rep)? != u.character {
            return Err(Error::Inconsistent(format!("explicit module for {} has the wrong character", u.label)));
        }
        let (plus, minus) = split_restriction(&module, &dn)?;
        if plus.add(&minus)? != res {
            return Err(Error::Inconsistent("split characters do not add up".into()));
        }
        for (sign, chi) in [(true, plus), (false, minus)] {
            let dim = chi
                .integer_degree()
                .ok_or_else(|| Error::Inconsistent("split degree is not a natural number".into()))?;
            if !inner_product(&chi, &chi)?.is_one() {
                return Err(Error::Inconsistent(format!("split half of {} is reducible", u.label)));
            }
            out.push(DnIrrep { label: DnLabel::Split(l.clone(), sign), character: chi, dim });
        }
    }
    Ok((bn, dn, out))
}

pub fn dn_character_table(n: usize) -> Result<CharacterTable> {
    let (_, dn, irr) = dn_irreducibles_with_parent(n)?;
    Ok(CharacterTable {
        group: dn.group().clone(),
        labels: irr.iter().map(|i| i.label.to_string()).collect(),
        characters: irr.into_iter().map(|i| i.character).collect(),
    })
}
