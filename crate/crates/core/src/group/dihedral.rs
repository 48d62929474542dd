use std::fmt;

use crate::arith::{Cyclotomic, Field, Matrix, Rational};

/// `r^k s^f` in the dihedral group of order `2m`, with `r` the rotation by
/// `2π/m` and `s` the reflection in the first coordinate axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElement {
    m: u32,
    reflected: bool,
    rotation: u32,
}

impl DihedralElement {
    pub fn new(m: u32, rotation: i64, reflected: bool) -> Self {
        assert!(m >= 1);
        DihedralElement { m, reflected, rotation: rotation.rem_euclid(m as i64) as u32 }
    }

    pub fn identity(m: u32) -> Self {
        Self::new(m, 0, false)
    }

    pub fn rotation(m: u32) -> Self {
        Self::new(m, 1, false)
    }

    pub fn reflection(m: u32) -> Self {
        Self::new(m, 0, true)
    }

    pub fn order_parameter(&self) -> u32 {
        self.m
    }

    pub fn rotation_index(&self) -> u32 {
        self.rotation
    }

    pub fn is_reflection(&self) -> bool {
        self.reflected
    }

    /// `(r^a s^f)(r^b s^g) = r^{a ± b} s^{f+g}` with `-` exactly when `f = 1`.
    pub fn compose(&self, rhs: &Self) -> Self {
        assert_eq!(self.m, rhs.m);
        let b = rhs.rotation as i64;
        let a = self.rotation as i64;
        let rot = if self.reflected { a - b } else { a + b };
        Self::new(self.m, rot, self.reflected ^ rhs.reflected)
    }

    pub fn inverse(&self) -> Self {
        if self.reflected {
            *self
        } else {
            Self::new(self.m, -(self.rotation as i64), false)
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rotation == 0 && !self.reflected
    }

    /// The 2×2 real matrix of the element acting on the plane.
    pub fn matrix(&self) -> Matrix<Cyclotomic> {
        let n = 2 * self.m;
        let k = 2 * self.rotation as i64;
        let half = Cyclotomic::from_rational(Rational::new(1.into(), 2.into()));
        // cos θ = (ζ + ζ⁻¹)/2 and sin θ = (ζ - ζ⁻¹)/(2i) for ζ = e^{iθ}, θ = 2πk'/m
        let cos = &(&Cyclotomic::zeta(n, k) + &Cyclotomic::zeta(n, -k)) * &half;
        let i = Cyclotomic::zeta(4, 1);
        let sin = &(&(&Cyclotomic::zeta(n, k) - &Cyclotomic::zeta(n, -k)) * &half) * &i.neg();
        let rot = Matrix::from_rows(vec![vec![cos.clone(), sin.neg()], vec![sin, cos]]).unwrap();
        if self.reflected {
            let s = Matrix::from_rows(vec![
                vec![Cyclotomic::one(), Cyclotomic::zero()],
                vec![Cyclotomic::zero(), Cyclotomic::from_int(-1)],
            ])
            .unwrap();
            rot.mul(&s).unwrap()
        } else {
            rot
        }
    }
}

/// `r^k` or `r^k s`.
impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r^{}", self.rotation)?;
        if self.reflected {
            write!(f, " s")?;
        }
        Ok(())
    }
}
