use std::cmp::Ordering;
use std::collections::HashMap;

use num_integer::Integer;

use crate::arith::{Cyclotomic, Matrix, Rational};
use crate::classify::TypeLabel;
use crate::error::{Error, Result};

/// A vector with exact real coordinates.
pub type Vector = Vec<Cyclotomic>;

fn dot(a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `s_α(λ) = λ - 2⟨λ, α⟩/⟨α, α⟩ · α`.
pub fn reflect(alpha: &[Cyclotomic], lambda: &[Cyclotomic]) -> Result<Vector> {
    if alpha.len() != lambda.len() {
        return Err(Error::Shape(format!("vectors of length {} and {}", alpha.len(), lambda.len())));
    }
    let inv = dot(alpha, alpha).inv().ok_or(Error::ZeroVector)?;
    let c = &(&dot(lambda, alpha) * &inv) * &Cyclotomic::from_int(2);
    Ok(lambda.iter().zip(alpha).map(|(l, a)| (l - &(&c * a)).simplify()).collect())
}

type Key = Vec<Vec<Rational>>;

fn common_conductor(vectors: &[Vector]) -> u32 {
    vectors.iter().flatten().fold(1u32, |acc, x| acc.lcm(&x.conductor()))
}

/// Exact, hashable key of a vector whose coordinates lie in `Q(ζ_n)`: each
/// coordinate is lifted to conductor `n` and reduced modulo `Φ_n`.
fn key(v: &[Cyclotomic], n: u32) -> Key {
    v.iter().map(|x| x.lift(n).reduced_coefficients()).collect()
}

/// Orientation of a real number; non-real or undecidable values are errors.
fn sign(x: &Cyclotomic) -> Result<Ordering> {
    x.real_sign().ok_or_else(|| Error::Inconsistent(format!("cannot decide the sign of {x}")))
}

/// A finite root system with all three axioms checked on construction.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: TypeLabel,
    roots: Vec<Vector>,
}

impl RootSystem {
    /// Checks R1 (finite, nonzero, no repeats), R2 (`Φ ∩ ℝα = {±α}`) and
    /// R3 (`s_α(Φ) = Φ`).
    pub fn new(label: TypeLabel, roots: Vec<Vector>) -> Result<Self> {
        let bad = |why: String| Err(Error::Inconsistent(format!("{label} roots: {why}")));
        let Some(dim) = roots.first().map(Vec::len) else {
            return bad("empty".into());
        };
        if roots.iter().any(|r| r.len() != dim) {
            return bad("mixed dimensions".into());
        }
        if roots.iter().any(|r| r.iter().all(Cyclotomic::is_zero)) {
            return bad("zero root".into());
        }
        let n = common_conductor(&roots);
        let keys: Vec<Key> = roots.iter().map(|r| key(r, n)).collect();
        let index: HashMap<&Key, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
        if index.len() != roots.len() {
            return bad("repeated root".into());
        }

        // R2: group roots by direction (scaled so the first nonzero entry is 1)
        let directions: Vec<Vector> = roots
            .iter()
            .map(|r| {
                let lead = r.iter().find(|x| !x.is_zero()).expect("nonzero root");
                let inv = lead.inv().expect("nonzero");
                r.iter().map(|x| (x * &inv).simplify()).collect()
            })
            .collect();
        let mut lines: HashMap<Key, Vec<usize>> = HashMap::new();
        for (i, d) in directions.iter().enumerate() {
            lines.entry(key(d, n)).or_default().push(i);
        }
        for members in lines.values() {
            let ok = members.len() == 2
                && roots[members[0]].iter().zip(&roots[members[1]]).all(|(a, b)| (a + b).is_zero());
            if !ok {
                return bad(format!("line through {:?} meets {} roots", roots[members[0]], members.len()));
            }
        }

        // R3
        for alpha in &roots {
            for beta in &roots {
                if !index.contains_key(&key(&reflect(alpha, beta)?, n)) {
                    return bad(format!("reflection in {alpha:?} moves {beta:?} outside"));
                }
            }
        }
        Ok(RootSystem { label, roots })
    }

    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn roots(&self) -> &[Vector] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.roots[0].len()
    }

    /// Positive with respect to the functional `(1, ε, ε², …)` for small `ε`:
    /// the first nonzero coordinate is positive.
    pub fn is_positive(&self, root: &[Cyclotomic]) -> Result<bool> {
        for x in root {
            match sign(x)? {
                Ordering::Equal => continue,
                o => return Ok(o == Ordering::Greater),
            }
        }
        Err(Error::ZeroVector)
    }

    pub fn positive_roots(&self) -> Result<Vec<Vector>> {
        let mut out = Vec::new();
        for r in &self.roots {
            if self.is_positive(r)? {
                out.push(r.clone());
            }
        }
        Ok(out)
    }
}

fn unit(n: usize, i: usize, sign: i64) -> Vector {
    (0..n).map(|k| Cyclotomic::from_int(if k == i { sign } else { 0 })).collect()
}

fn combo(n: usize, i: usize, si: i64, j: usize, sj: i64) -> Vector {
    let mut v = unit(n, i, si);
    v[j] = Cyclotomic::from_int(sj);
    v
}

/// The standard root system of type `t`.
///
/// `A_n`: `ε_i - ε_j` in `ℝ^{n+1}`; `B_n`: `±ε_i`, `±ε_i ± ε_j`; `D_n`:
/// `±ε_i ± ε_j`; `I_2(m)`: the `2m` unit vectors at angles `πk/m`.
pub fn root_system(t: TypeLabel) -> Result<RootSystem> {
    let t = t.validate()?;
    if t.rank() > 8 {
        return Err(Error::OutOfRange { value: t.rank(), range: "rank <= 8" });
    }
    let roots = match t {
        TypeLabel::A(n) => {
            let d = n + 1;
            let mut v = Vec::new();
            for i in 0..d {
                for j in 0..d {
                    if i != j {
                        v.push(combo(d, i, 1, j, -1));
                    }
                }
            }
            v
        }
        TypeLabel::B(n) | TypeLabel::D(n) => {
            let mut v = Vec::new();
            if matches!(t, TypeLabel::B(_)) {
                for i in 0..n {
                    v.push(unit(n, i, 1));
                    v.push(unit(n, i, -1));
                }
            }
            for i in 0..n {
                for j in i + 1..n {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        v.push(combo(n, i, si, j, sj));
                    }
                }
            }
            v
        }
        TypeLabel::I2(m) => {
            let n = 2 * m;
            let half = Cyclotomic::from_rational(Rational::new(1.into(), 2.into()));
            let minus_i = Cyclotomic::zeta(4, 3);
            (0..n as i64)
                .map(|k| {
                    let (z, zi) = (Cyclotomic::zeta(n, k), Cyclotomic::zeta(n, -k));
                    let cos = &(&z + &zi) * &half;
                    let sin = &(&(&z - &zi) * &half) * &minus_i;
                    vec![cos.simplify(), sin.simplify()]
                })
                .collect()
        }
        other => return Err(Error::UnsupportedType(other.to_string())),
    };
    RootSystem::new(t, roots)
}

/// A base of `Φ`: the positive roots `α` whose reflection makes exactly one
/// positive root (namely `α`) negative. The result is checked to be
/// independent, to span the root span, and to give every root one-signed
/// coefficients.
pub fn compute_base(phi: &RootSystem) -> Result<Vec<Vector>> {
    let positive = phi.positive_roots()?;
    let mut base = Vec::new();
    for alpha in &positive {
        let mut flipped = 0;
        for beta in &positive {
            if !phi.is_positive(&reflect(alpha, beta)?)? {
                flipped += 1;
            }
        }
        if flipped == 1 {
            base.push(alpha.clone());
        }
    }

    let dim = phi.dimension();
    let fail = |why: &str| Err(Error::Inconsistent(format!("base of {}: {why}", phi.label())));
    let columns = Matrix::from_fn(dim, base.len(), |i, j| base[j][i].clone());
    let all = Matrix::from_fn(dim, phi.len(), |i, j| phi.roots()[j][i].clone());
    if columns.rank_by_elimination() != base.len() {
        return fail("not independent");
    }
    if all.rank_by_elimination() != base.len() {
        return fail("does not span");
    }
    for root in phi.roots() {
        let Some(c) = columns.solve(root) else {
            return fail("root outside the span");
        };
        let signs = c.iter().map(sign).collect::<Result<Vec<_>>>()?;
        let nonneg = signs.iter().all(|s| *s != Ordering::Less);
        let nonpos = signs.iter().all(|s| *s != Ordering::Greater);
        if !(nonneg || nonpos) {
            return fail("mixed-sign coefficients");
        }
    }
    Ok(base)
}
