//! Representations of the concrete groups and their characters.

mod algebra;
mod table;

pub use algebra::GroupAlgebraElement;
pub use table::{format_value, CharacterTable};

use std::sync::Arc;

use num_traits::{Signed, ToPrimitive};

use crate::arith::{Cyclotomic, Field, Matrix, Rational};
use crate::classify::catalog_graph;
use crate::coxeter::Label;
use crate::error::{Error, Result};
use crate::group::{ClassData, FiniteGroup, Subgroup};

/// A homomorphism `G → GL_d(F)` given by the images of the generators of
/// `G`; other images are evaluated along words.
#[derive(Debug, Clone)]
pub struct Representation<F: Field> {
    group: Arc<FiniteGroup>,
    dim: usize,
    generators: Vec<Matrix<F>>,
}

impl<F: Field> Representation<F> {
    /// Checks that the matrices are invertible, of one size, and satisfy
    /// the defining relations: the Coxeter relations `(M_s M_t)^{m(s,t)} = 1`
    /// when the group carries a type label, otherwise the multiplication
    /// table on every element.
    pub fn new(group: Arc<FiniteGroup>, generators: Vec<Matrix<F>>) -> Result<Self> {
        if generators.len() != group.generators().len() {
            return Err(Error::Shape(format!(
                "{} matrices for {} generators",
                generators.len(),
                group.generators().len()
            )));
        }
        let dim = match generators.first() {
            Some(m) => m.rows(),
            None => 1,
        };
        if dim == 0 {
            return Err(Error::Shape("representations have degree at least 1".into()));
        }
        for m in &generators {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Shape(format!("expected {dim}×{dim}, got {}×{}", m.rows(), m.cols())));
            }
            m.inverse()?;
        }
        let rep = Representation { group, dim, generators };
        rep.check_relations()?;
        Ok(rep)
    }

    /// The trivial representation of degree 1.
    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let k = group.generators().len();
        Representation { group, dim: 1, generators: vec![Matrix::identity(1); k] }
    }

    /// The left regular representation, `e_x ↦ e_{gx}`.
    pub fn regular(group: Arc<FiniteGroup>) -> Result<Self> {
        let n = group.order();
        let gens = group
            .generators()
            .iter()
            .map(|&g| {
                let mut m = Matrix::zeros(n, n);
                for x in 0..n {
                    m.set(group.mul(g, x), x, F::one());
                }
                m
            })
            .collect();
        Self::new(group, gens)
    }

    fn check_relations(&self) -> Result<()> {
        let g = &self.group;
        if let Some(t) = g.label() {
            let graph = catalog_graph(t)?;
            for i in 0..self.generators.len() {
                for j in i..self.generators.len() {
                    let Label::Finite(m) = graph.label(i, j) else {
                        return Err(Error::Inconsistent("infinite label".into()));
                    };
                    let p = self.generators[i].mul(&self.generators[j])?.pow(m as u64)?;
                    if !p.is_identity() {
                        return Err(Error::RelationFailure(format!(
                            "(M_{i} M_{j})^{m} is not the identity in {}",
                            g.name()
                        )));
                    }
                }
            }
            return Ok(());
        }
        let images = self.images()?;
        for (x, mx) in images.iter().enumerate() {
            for (gi, &s) in g.generators().iter().enumerate() {
                if images[g.mul(x, s)] != mx.mul(&self.generators[gi])? {
                    return Err(Error::RelationFailure(format!(
                        "image of {} · generator {gi} disagrees",
                        g.element(x)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator_matrices(&self) -> &[Matrix<F>] {
        &self.generators
    }

    /// `ρ(g)` for element index `g`.
    pub fn image(&self, g: usize) -> Result<Matrix<F>> {
        let mut m = Matrix::identity(self.dim);
        for s in self.group.word(g) {
            m = m.mul(&self.generators[s])?;
        }
        Ok(m)
    }

    /// `ρ(g)` for every element, in element order.
    pub fn images(&self) -> Result<Vec<Matrix<F>>> {
        (0..self.group.order()).map(|g| self.image(g)).collect()
    }
}

/// `ρ ⊕ ψ`, with block-diagonal matrices.
pub fn direct_sum<F: Field>(rho: &Representation<F>, psi: &Representation<F>) -> Result<Representation<F>> {
    if !Arc::ptr_eq(&rho.group, &psi.group) {
        return Err(Error::GroupMismatch);
    }
    let gens = rho.generators.iter().zip(&psi.generators).map(|(a, b)| a.block_diag(b)).collect();
    Ok(Representation { group: rho.group.clone(), dim: rho.dim + psi.dim, generators: gens })
}

/// A function on the conjugacy classes of a group.
#[derive(Debug, Clone)]
pub struct ClassFunction {
    classes: Arc<ClassData>,
    values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        same_classes(&self.classes, &other.classes) && self.values == other.values
    }
}

fn same_classes(a: &Arc<ClassData>, b: &Arc<ClassData>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl ClassFunction {
    pub fn new(classes: Arc<ClassData>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != classes.count() {
            return Err(Error::Shape(format!("{} values for {} classes", values.len(), classes.count())));
        }
        let values = values.into_iter().map(|v| v.simplify()).collect();
        Ok(ClassFunction { classes, values })
    }

    /// The function with constant value 1.
    pub fn ones(classes: Arc<ClassData>) -> Self {
        let values = vec![Cyclotomic::one(); classes.count()];
        ClassFunction { classes, values }
    }

    pub fn classes(&self) -> &Arc<ClassData> {
        &self.classes
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Value at the identity class.
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    /// The degree as an integer, if it is one.
    pub fn integer_degree(&self) -> Option<u64> {
        as_natural(self.degree())
    }

    fn zip(&self, other: &Self, f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> Result<Self> {
        if !same_classes(&self.classes, &other.classes) {
            return Err(Error::ClassMismatch);
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b).simplify()).collect();
        Ok(ClassFunction { classes: self.classes.clone(), values })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    /// Pointwise product, the character of the tensor product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a * b)
    }

    pub fn conj(&self) -> Self {
        ClassFunction { classes: self.classes.clone(), values: self.values.iter().map(Cyclotomic::conj).collect() }
    }
}

/// `⟨f, g⟩ = (1/|G|) Σ_c |c| f(c) conj(g(c))`.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<Cyclotomic> {
    if !same_classes(&f.classes, &g.classes) {
        return Err(Error::ClassMismatch);
    }
    let sum: Cyclotomic = (0..f.classes.count())
        .map(|c| &(&Cyclotomic::from_int(f.classes.size(c) as i64) * &f.values[c]) * &g.values[c].conj())
        .sum();
    let order = Rational::from_integer((f.classes.group_order() as i64).into());
    Ok((&sum * &Cyclotomic::from_rational(order.recip())).simplify())
}

fn as_natural(x: &Cyclotomic) -> Option<u64> {
    let q = x.as_rational()?;
    if !q.is_integer() || q.is_negative() {
        return None;
    }
    q.to_integer().to_u64()
}

/// `χ_ρ(g) = tr ρ(g)` at one representative per class.
pub fn character_of<F: Field>(rho: &Representation<F>) -> Result<ClassFunction> {
    let cd = rho.group.classes().clone();
    let values = cd
        .representatives()
        .iter()
        .map(|&g| Ok(rho.image(g)?.trace().to_cyclotomic()))
        .collect::<Result<Vec<_>>>()?;
    ClassFunction::new(cd, values)
}

/// `⟨χ_ρ, χ_ρ⟩ = 1`.
pub fn is_irreducible<F: Field>(rho: &Representation<F>) -> Result<bool> {
    let chi = character_of(rho)?;
    Ok(inner_product(&chi, &chi)?.is_one())
}

/// `⟨χ, irr⟩`, which must be a nonnegative integer.
pub fn character_multiplicity(chi: &ClassFunction, irr: &ClassFunction) -> Result<u64> {
    let ip = inner_product(chi, irr)?;
    as_natural(&ip).ok_or_else(|| Error::NonIntegralMultiplicity(ip.to_string()))
}

pub fn multiplicity<F: Field>(rho: &Representation<F>, irr: &ClassFunction) -> Result<u64> {
    character_multiplicity(&character_of(rho)?, irr)
}

/// Multiplicity of every basis character in `chi`; the degrees must add up.
pub fn decompose_character(chi: &ClassFunction, basis: &[ClassFunction]) -> Result<Vec<u64>> {
    let mult = basis.iter().map(|b| character_multiplicity(chi, b)).collect::<Result<Vec<_>>>()?;
    let mut total = Cyclotomic::zero();
    for (m, b) in mult.iter().zip(basis) {
        total = &total + &(&Cyclotomic::from_int(*m as i64) * b.degree());
    }
    if total != *chi.degree() {
        return Err(Error::IncompleteBasis { found: total.to_string(), expected: as_natural(chi.degree()).unwrap_or(0) as usize });
    }
    Ok(mult)
}

/// `(index, multiplicity)` for the constituents of `ρ` in `basis`.
pub fn decompose<F: Field>(rho: &Representation<F>, basis: &[ClassFunction]) -> Result<Vec<(usize, u64)>> {
    let mult = decompose_character(&character_of(rho)?, basis)?;
    Ok(mult.into_iter().enumerate().filter(|(_, m)| *m > 0).collect())
}

/// Multiplicities of the basis characters in `χ · ψ`.
pub fn tensor_decompose(chi: &ClassFunction, psi: &ClassFunction, basis: &[ClassFunction]) -> Result<Vec<u64>> {
    decompose_character(&chi.mul(psi)?, basis)
}

/// `Ind_H^G χ(g) = (1/|H|) Σ_{x ∈ G, x⁻¹gx ∈ H} χ(x⁻¹gx)`, summed over all of `G`.
pub fn induce_character(chi: &ClassFunction, h: &Subgroup) -> Result<ClassFunction> {
    let sub = h.group();
    if !same_classes(&chi.classes, sub.classes()) {
        return Err(Error::ClassMismatch);
    }
    let g = h.parent();
    let hc = sub.classes();
    let gc = g.classes().clone();
    let inv_order = Cyclotomic::from_rational(Rational::new(1.into(), (sub.order() as i64).into()));
    let values = gc
        .representatives()
        .iter()
        .map(|&rep| {
            let mut sum = Cyclotomic::zero();
            for x in 0..g.order() {
                if let Some(y) = h.locate(g.conjugate(rep, x)) {
                    sum = &sum + &chi.values[hc.class_of(y)];
                }
            }
            (&sum * &inv_order).simplify()
        })
        .collect();
    ClassFunction::new(gc, values)
}

/// `Res_H^G χ`: the values of `χ` on the classes of `G` containing each
/// class of `H`.
pub fn restrict_character(chi: &ClassFunction, h: &Subgroup) -> Result<ClassFunction> {
    let g = h.parent();
    if !same_classes(&chi.classes, g.classes()) {
        return Err(Error::ClassMismatch);
    }
    let hc = h.group().classes().clone();
    let values = hc
        .representatives()
        .iter()
        .map(|&rep| chi.values[g.classes().class_of(h.embed(rep))].clone())
        .collect();
    ClassFunction::new(hc, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{GroupElement, Permutation};

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::symmetric(3).unwrap())
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
    }

    fn cf(g: &FiniteGroup, xs: &[i64]) -> ClassFunction {
        ClassFunction::new(g.classes().clone(), xs.iter().map(|&x| Cyclotomic::from_int(x)).collect()).unwrap()
    }

    /// The permutation action on `e_1, e_2, e_3`.
    fn permutation_rep(g: Arc<FiniteGroup>) -> Representation<Rational> {
        Representation::new(g, vec![m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]), m(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]])])
            .unwrap()
    }

    /// The standard representation on `{x : Σx = 0}` with basis `e1-e2, e2-e3`.
    fn standard_rep(g: Arc<FiniteGroup>) -> Representation<Rational> {
        Representation::new(g, vec![m(&[&[-1, 1], &[0, 1]]), m(&[&[1, 0], &[1, -1]])]).unwrap()
    }

    #[test]
    fn s3_characters() {
        let g = s3();
        let triv = character_of(&Representation::<Rational>::trivial(g.clone())).unwrap();
        assert_eq!(triv, cf(&g, &[1, 1, 1]));
        let std = character_of(&standard_rep(g.clone())).unwrap();
        assert_eq!(std, cf(&g, &[2, 0, -1]));
        assert!(inner_product(&std, &std).unwrap().is_one());
        let reg = Representation::<Rational>::regular(g.clone()).unwrap();
        assert_eq!(character_of(&reg).unwrap(), cf(&g, &[6, 0, 0]));
        assert!(!is_irreducible(&reg).unwrap());
        assert_eq!(inner_product(&character_of(&reg).unwrap(), &triv).unwrap(), Cyclotomic::one());
        let perm = permutation_rep(g.clone());
        assert_eq!(character_of(&perm).unwrap(), cf(&g, &[3, 1, 0]));
        assert!(!is_irreducible(&perm).unwrap());
        assert!(is_irreducible(&standard_rep(g.clone())).unwrap());
        let sgn = cf(&g, &[1, -1, 1]);
        assert!(inner_product(&triv, &sgn).unwrap().is_zero());
    }

    #[test]
    fn multiplicities_and_decomposition() {
        let g = s3();
        let basis = [cf(&g, &[1, 1, 1]), cf(&g, &[1, -1, 1]), cf(&g, &[2, 0, -1])];
        let perm = permutation_rep(g.clone());
        assert_eq!(multiplicity(&perm, &basis[0]).unwrap(), 1);
        assert_eq!(multiplicity(&perm, &basis[2]).unwrap(), 1);
        assert_eq!(decompose(&perm, &basis).unwrap(), vec![(0, 1), (2, 1)]);
        let reg = Representation::<Rational>::regular(g.clone()).unwrap();
        assert_eq!(decompose(&reg, &basis).unwrap(), vec![(0, 1), (1, 1), (2, 2)]);
        assert!(matches!(
            decompose(&reg, &basis[..2]),
            Err(Error::IncompleteBasis { expected: 6, .. })
        ));
        let half = cf(&g, &[1, 0, 0]);
        assert!(matches!(character_multiplicity(&half, &basis[0]), Err(Error::NonIntegralMultiplicity(_))));
        assert_eq!(tensor_decompose(&basis[2], &basis[2], &basis).unwrap(), vec![1, 1, 1]);
        assert_eq!(tensor_decompose(&basis[1], &basis[1], &basis).unwrap(), vec![1, 0, 0]);
        assert_eq!(tensor_decompose(&basis[0], &basis[2], &basis).unwrap(), vec![0, 0, 1]);
    }

    #[test]
    fn direct_sums() {
        let g = s3();
        let sgn = Representation::new(g.clone(), vec![m(&[&[-1]]), m(&[&[-1]])]).unwrap();
        let sum = direct_sum(&Representation::trivial(g.clone()), &sgn).unwrap();
        assert_eq!(sum.dim(), 2);
        assert_eq!(character_of(&sum).unwrap(), cf(&g, &[2, 0, 2]));
        let other = Representation::<Rational>::trivial(s3());
        assert!(matches!(direct_sum(&sum, &other), Err(Error::GroupMismatch)));
    }

    #[test]
    fn relation_failures() {
        let g = s3();
        // two commuting involutions violate (s_0 s_1)^3 = 1
        let bad = Representation::new(g.clone(), vec![m(&[&[-1]]), m(&[&[1]])]);
        assert!(matches!(bad, Err(Error::RelationFailure(_))));
        assert!(Representation::new(g.clone(), vec![m(&[&[0]]), m(&[&[1]])]).is_err());
        assert!(Representation::new(g, vec![m(&[&[1]])]).is_err());
    }

    #[test]
    fn induction_and_restriction() {
        let g = s3();
        let t = g.index_of(&GroupElement::Perm(Permutation::transposition(3, 0, 1))).unwrap();
        let h = Subgroup::from_indices(g.clone(), "S2", &[0, t]).unwrap();
        let triv_h = ClassFunction::ones(h.group().classes().clone());
        assert_eq!(induce_character(&triv_h, &h).unwrap(), cf(&g, &[3, 1, 0]));
        let e = Subgroup::from_indices(g.clone(), "1", &[0]).unwrap();
        let triv_e = ClassFunction::ones(e.group().classes().clone());
        assert_eq!(induce_character(&triv_e, &e).unwrap(), cf(&g, &[6, 0, 0]));

        let std = cf(&g, &[2, 0, -1]);
        let res = restrict_character(&std, &h).unwrap();
        assert_eq!(res.values(), &[Cyclotomic::from_int(2), Cyclotomic::zero()]);
        let whole = Subgroup::whole(g.clone());
        assert_eq!(restrict_character(&std, &whole).unwrap(), std);
        assert_eq!(
            restrict_character(&cf(&g, &[1, 1, 1]), &h).unwrap(),
            ClassFunction::ones(h.group().classes().clone())
        );
        assert!(matches!(induce_character(&std, &h), Err(Error::ClassMismatch)));
    }
}
