use std::collections::HashSet;
use std::sync::Arc;

use num_integer::Integer;

use super::{enumerate_group, FiniteGroup};
use crate::arith::{Cyclotomic, Matrix, Rational};
use crate::classify::{catalog_graph, TypeLabel};
use crate::error::{Error, Result};

/// The reflection representation `σ_s(v) = v - 2B(α_s, v)α_s` in the basis
/// of simple roots, evaluated on every element of the concrete group.
#[derive(Debug, Clone)]
pub struct GeometricRep {
    group: Arc<FiniteGroup>,
    gram: Matrix<Cyclotomic>,
    images: Vec<Matrix<Cyclotomic>>,
}

impl GeometricRep {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// The bilinear form `B(α_s, α_t) = -cos(π/m(s, t))`.
    pub fn gram(&self) -> &Matrix<Cyclotomic> {
        &self.gram
    }

    /// Image of group element `i`.
    pub fn matrix(&self, i: usize) -> &Matrix<Cyclotomic> {
        &self.images[i]
    }

    /// Matrix of the reflection in `α` (coordinates in the simple-root basis)
    /// with respect to `B`: `I - 2 α (Bα)ᵀ / B(α, α)`.
    pub fn reflection(&self, alpha: &[Cyclotomic]) -> Result<Matrix<Cyclotomic>> {
        let b_alpha = self.gram.mul_vec(alpha);
        let norm: Cyclotomic = alpha.iter().zip(&b_alpha).map(|(a, b)| a * b).sum();
        let inv = norm.inv().ok_or(Error::ZeroVector)?;
        let two = &Cyclotomic::from_int(2) * &inv;
        let n = alpha.len();
        Ok(Matrix::from_fn(n, n, |i, j| {
            let delta = Cyclotomic::from_int((i == j) as i64);
            (&delta - &(&two * &(&alpha[i] * &b_alpha[j]))).simplify()
        }))
    }
}

fn matrix_key(m: &Matrix<Cyclotomic>, n: u32) -> Vec<Vec<Rational>> {
    m.entries().map(|x| x.lift(n).reduced_coefficients()).collect()
}

/// Builds the geometric representation of `t` and checks that it is a
/// faithful homomorphism on the concrete group.
pub fn geometric_rep(t: TypeLabel, max_order: u128) -> Result<GeometricRep> {
    let t = t.validate()?;
    if !t.is_classical() {
        return Err(Error::UnsupportedType(t.to_string()));
    }
    if t.rank() > 8 {
        return Err(Error::OutOfRange { value: t.rank(), range: "rank <= 8" });
    }
    let group = enumerate_group(t, max_order)?;
    let gram = catalog_graph(t)?.gram_matrix();
    let n = gram.rows();
    let gens: Vec<Matrix<Cyclotomic>> = (0..n)
        .map(|s| {
            Matrix::from_fn(n, n, |i, j| {
                let delta = Cyclotomic::from_int((i == j) as i64);
                if i == s {
                    (&delta - &(&Cyclotomic::from_int(2) * gram.get(s, j))).simplify()
                } else {
                    delta
                }
            })
        })
        .collect();

    let mut images: Vec<Option<Matrix<Cyclotomic>>> = vec![None; group.order()];
    images[0] = Some(Matrix::identity(n));
    let mut order: Vec<usize> = (1..group.order()).collect();
    order.sort_by_key(|&x| group.word(x).len());
    for x in order {
        let (parent, g) = group.tree[x].expect("non-identity");
        let m = images[parent].as_ref().expect("parents come first").mul(&gens[g])?;
        images[x] = Some(m.map(Cyclotomic::simplify));
    }
    let images: Vec<Matrix<Cyclotomic>> = images.into_iter().map(|m| m.expect("all reached")).collect();

    let conductor = images
        .iter()
        .flat_map(|m| m.entries())
        .fold(1u32, |acc, x| acc.lcm(&x.conductor()));
    for (x, mx) in images.iter().enumerate() {
        for (gi, &g) in group.generators().iter().enumerate() {
            let lhs = &images[group.mul(x, g)];
            if matrix_key(lhs, conductor) != matrix_key(&mx.mul(&gens[gi])?, conductor) {
                return Err(Error::RelationFailure(format!(
                    "geometric image of {} · generator {gi} disagrees",
                    group.element(x)
                )));
            }
        }
    }
    let distinct: HashSet<_> = images.iter().map(|m| matrix_key(m, conductor)).collect();
    if distinct.len() != images.len() {
        return Err(Error::RelationFailure(format!("geometric representation of {t} is not faithful")));
    }
    Ok(GeometricRep { group, gram, images })
}
