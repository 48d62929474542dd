use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::Rational;
use crate::error::Result;
use crate::group::GroupElement;

/// `Σ a_g g` in the rational group algebra, stored sparsely.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupAlgebraElement {
    coeffs: BTreeMap<GroupElement, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `g`.
    pub fn basis(g: GroupElement) -> Self {
        let mut x = Self::zero();
        x.add_term(g, Rational::one());
        x
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (GroupElement, Rational)>) -> Self {
        let mut x = Self::zero();
        for (g, c) in terms {
            x.add_term(g, c);
        }
        x
    }

    pub fn add_term(&mut self, g: GroupElement, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(g.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&g);
        }
    }

    pub fn coeff(&self, g: &GroupElement) -> Rational {
        self.coeffs.get(g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &Rational)> {
        self.coeffs.iter()
    }

    /// Number of nonzero coefficients.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &rhs.coeffs {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(g, x)| (g.clone(), x * c)))
    }

    /// The product, extended bilinearly from the group law. Fails if the
    /// operands mix elements of different groups.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (g, a) in &self.coeffs {
            for (h, b) in &rhs.coeffs {
                out.add_term(g.multiply(h)?, a * b);
            }
        }
        Ok(out)
    }
}

/// `e + (1,2) - (1,3,2) - (1,3)`, terms in element order.
impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (g, c)) in self.coeffs.iter().enumerate() {
            let name = if g.is_identity() { "e".to_string() } else { g.to_string() };
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                _ => write!(f, " {sign} ")?,
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{a}*{name}")?;
            }
        }
        Ok(())
    }
}
