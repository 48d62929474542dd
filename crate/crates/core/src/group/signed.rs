use std::fmt;

use super::perm::Permutation;
use crate::arith::{Field, Matrix, Rational};
use crate::error::{Error, Result};
use crate::symmetric::Partition;

/// An element `(a, σ)` of `B_n = (Z/2)^n ⋊ S_n`, acting on `R^n` by
/// `x ↦ a ⊙ (σ·x)` where `(σ·x)_i = x_{σ⁻¹(i)}`.
///
/// The product is `(a, σ)(b, τ) = ((a_i b_{σ⁻¹(i)})_i, στ)`; equivalently
/// `e_j ↦ a_{σ(j)} e_{σ(j)}` as a signed permutation matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    perm: Permutation,
    negative: Vec<bool>,
}

impl SignedPermutation {
    /// `signs` must have entries `±1` and the length of `perm`.
    pub fn new(signs: &[i8], perm: Permutation) -> Result<Self> {
        if signs.len() != perm.degree() {
            return Err(Error::Shape(format!("{} signs for a permutation of degree {}", signs.len(), perm.degree())));
        }
        let negative = signs
            .iter()
            .map(|&s| match s {
                1 => Ok(false),
                -1 => Ok(true),
                _ => Err(Error::Shape(format!("sign {s} is not ±1"))),
            })
            .collect::<Result<_>>()?;
        Ok(SignedPermutation { perm, negative })
    }

    pub(crate) fn from_parts(negative: Vec<bool>, perm: Permutation) -> Self {
        debug_assert_eq!(negative.len(), perm.degree());
        SignedPermutation { perm, negative }
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { perm: Permutation::identity(n), negative: vec![false; n] }
    }

    /// Negates coordinate `i`.
    pub fn sign_flip(n: usize, i: usize) -> Self {
        let mut negative = vec![false; n];
        negative[i] = true;
        SignedPermutation { perm: Permutation::identity(n), negative }
    }

    pub fn from_permutation(perm: Permutation) -> Self {
        let n = perm.degree();
        SignedPermutation { perm, negative: vec![false; n] }
    }

    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn signs(&self) -> Vec<i8> {
        self.negative.iter().map(|&b| if b { -1 } else { 1 }).collect()
    }

    pub fn is_negative(&self, i: usize) -> bool {
        self.negative[i]
    }

    /// Product of the signs; `D_n` is the kernel of this map.
    pub fn sign_product(&self) -> i8 {
        if self.negative.iter().filter(|&&b| b).count() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        let sigma_inv = self.perm.inverse();
        let negative = (0..self.degree())
            .map(|i| self.negative[i] ^ rhs.negative[sigma_inv.apply(i)])
            .collect();
        SignedPermutation { perm: self.perm.compose(&rhs.perm), negative }
    }

    pub fn inverse(&self) -> Self {
        // (a, σ)⁻¹ = (σ⁻¹·a, σ⁻¹): coordinate i carries a_{σ(i)}
        let negative = (0..self.degree()).map(|i| self.negative[self.perm.apply(i)]).collect();
        SignedPermutation { perm: self.perm.inverse(), negative }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && !self.negative.iter().any(|&b| b)
    }

    /// Image of the basis vector `e_j`: `(index, negated)`.
    pub fn apply(&self, j: usize) -> (usize, bool) {
        let i = self.perm.apply(j);
        (i, self.negative[i])
    }

    /// The signed permutation matrix with `M[σ(j)][j] = a_{σ(j)}`.
    pub fn matrix(&self) -> Matrix<Rational> {
        let n = self.degree();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let (i, neg) = self.apply(j);
            m.set(i, j, Rational::from_int(if neg { -1 } else { 1 }));
        }
        m
    }

    /// Cycle type split by cycle sign: lengths of cycles whose sign product is
    /// `+1` and of those whose sign product is `-1`.
    pub fn signed_cycle_type(&self) -> (Partition, Partition) {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for c in self.perm.cycles() {
            let odd = c.iter().filter(|&&i| self.negative[i]).count() % 2 == 1;
            if odd {
                neg.push(c.len());
            } else {
                pos.push(c.len());
            }
        }
        (Partition::from_parts(pos), Partition::from_parts(neg))
    }
}

/// `[-1,+1,+1] (1,2)`.
impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let signs: Vec<&str> = self.negative.iter().map(|&b| if b { "-1" } else { "+1" }).collect();
        write!(f, "[{}] {}", signs.join(","), self.perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sign_flip_squares_to_identity() {
        let x = SignedPermutation::new(&[-1, 1, 1], Permutation::identity(3)).unwrap();
        assert!(x.compose(&x).is_identity());
        assert_eq!(x.to_string(), "[-1,+1,+1] ()");
        assert!(SignedPermutation::new(&[2, 1], Permutation::identity(2)).is_err());
        assert!(SignedPermutation::new(&[1], Permutation::identity(2)).is_err());
    }

    fn arb_signed(n: usize) -> impl Strategy<Value = SignedPermutation> {
        (Just((0..n).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n))
            .prop_map(|(p, neg)| SignedPermutation::from_parts(neg, Permutation::new(p).unwrap()))
    }

    proptest! {
        #[test]
        fn product_matches_matrix_product(a in arb_signed(5), b in arb_signed(5)) {
            let lhs = a.compose(&b).matrix();
            let rhs = a.matrix().mul(&b.matrix()).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert!(a.compose(&a.inverse()).is_identity());
            prop_assert!(a.inverse().compose(&a).is_identity());
            prop_assert_eq!(a.compose(&b).sign_product(), a.sign_product() * b.sign_product());
        }
    }

    #[test]
    fn signed_cycles() {
        // e0 -> -e1, e1 -> -e0: one 2-cycle with two negative entries, positive
        let s = SignedPermutation::new(&[-1, -1, 1], Permutation::transposition(3, 0, 1)).unwrap();
        let (pos, neg) = s.signed_cycle_type();
        assert_eq!(pos.parts(), &[2, 1]);
        assert!(neg.parts().is_empty());
        let (pos, neg) = SignedPermutation::sign_flip(3, 2).signed_cycle_type();
        assert_eq!(pos.parts(), &[1, 1]);
        assert_eq!(neg.parts(), &[1]);
    }
}
