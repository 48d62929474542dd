use std::sync::Arc;

use crate::arith::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::rep::{induce_character, CharacterTable, ClassFunction};

#[derive(Debug, Clone)]
pub struct DihedralIrrep {
    /// `triv`, `sgn`, `eps1`, `eps2` (even `m` only) or `rho_j`.
    pub label: String,
    pub character: ClassFunction,
    pub dim: u64,
}

/// The rotation subgroup `C_m`.
pub fn rotation_subgroup(group: &Arc<FiniteGroup>) -> Result<Subgroup> {
    let idx: Vec<usize> = (0..group.order())
        .filter(|&i| !group.element(i).as_dihedral().expect("dihedral").is_reflection())
        .collect();
    Subgroup::from_indices(group.clone(), "C", &idx)
}

/// `φ_j(r^k) = ζ_m^{jk}` on `C_m`.
pub fn rotation_character(c: &Subgroup, m: u32, j: i64) -> Result<ClassFunction> {
    let g = c.group();
    let cd = g.classes().clone();
    let values = cd
        .representatives()
        .iter()
        .map(|&r| {
            let k = g.element(r).as_dihedral().expect("dihedral").rotation_index() as i64;
            Cyclotomic::zeta(m, j * k)
        })
        .collect();
    ClassFunction::new(cd, values)
}

/// The irreducible characters of `I_2(m)`, `3 ≤ m ≤ 24`, on `group`: the
/// linear characters, then `Ind_{C_m}^{I_2(m)} φ_j` for `1 ≤ j < m/2`.
pub fn dihedral_irreducibles_on(group: &Arc<FiniteGroup>, m: u32) -> Result<Vec<DihedralIrrep>> {
    if !(3..=24).contains(&m) {
        return Err(Error::OutOfRange { value: m as usize, range: "3 <= m <= 24" });
    }
    let cd = group.classes().clone();
    // linear characters are fixed by their values on r and s
    let linear = |label: &str, on_r: i64, on_s: i64| -> Result<DihedralIrrep> {
        let values = cd
            .representatives()
            .iter()
            .map(|&i| {
                let x = group.element(i).as_dihedral().expect("dihedral");
                let v = on_r.pow(x.rotation_index()) * if x.is_reflection() { on_s } else { 1 };
                Cyclotomic::from_int(v)
            })
            .collect();
        Ok(DihedralIrrep { label: label.into(), character: ClassFunction::new(cd.clone(), values)?, dim: 1 })
    };
    let mut out = vec![linear("triv", 1, 1)?, linear("sgn", 1, -1)?];
    if m.is_multiple_of(2) {
        out.push(linear("eps1", -1, 1)?);
        out.push(linear("eps2", -1, -1)?);
    }
    let c = rotation_subgroup(group)?;
    for j in 1..m.div_ceil(2) {
        let character = induce_character(&rotation_character(&c, m, j as i64)?, &c)?;
        out.push(DihedralIrrep { label: format!("rho_{j}"), character, dim: 2 });
    }
    Ok(out)
}

pub fn dihedral_irreducibles(m: u32) -> Result<Vec<DihedralIrrep>> {
    let group = Arc::new(FiniteGroup::dihedral(m)?);
    dihedral_irreducibles_on(&group, m)
}

pub fn dihedral_character_table(m: u32) -> Result<CharacterTable> {
    let group = Arc::new(FiniteGroup::dihedral(m)?);
    let irr = dihedral_irreducibles_on(&group, m)?;
    Ok(CharacterTable {
        group,
        labels: irr.iter().map(|i| i.label.clone()).collect(),
        characters: irr.into_iter().map(|i| i.character).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::inner_product;

    #[test]
    fn dims() {
        let d5: Vec<u64> = dihedral_irreducibles(5).unwrap().iter().map(|i| i.dim).collect();
        assert_eq!(d5, vec![1, 1, 2, 2]);
        let d4: Vec<u64> = dihedral_irreducibles(4).unwrap().iter().map(|i| i.dim).collect();
        assert_eq!(d4, vec![1, 1, 1, 1, 2]);
        assert!(dihedral_irreducibles(2).is_err());
        assert!(dihedral_irreducibles(25).is_err());
    }

    #[test]
    fn two_dimensional_values() {
        for m in [5u32, 6, 9] {
            let g = Arc::new(FiniteGroup::dihedral(m).unwrap());
            let irr = dihedral_irreducibles_on(&g, m).unwrap();
            let cd = g.classes();
            for rep in irr.iter().filter(|i| i.dim == 2) {
                let j: i64 = rep.label.trim_start_matches("rho_").parse().unwrap();
                for c in 0..cd.count() {
                    let x = g.element(cd.representative(c)).as_dihedral().unwrap();
                    let k = x.rotation_index() as i64;
                    let expected = if x.is_reflection() {
                        Cyclotomic::zero()
                    } else {
                        &Cyclotomic::zeta(m, j * k) + &Cyclotomic::zeta(m, -j * k)
                    };
                    assert_eq!(rep.character.value(c), &expected);
                }
            }
        }
    }

    #[test]
    fn complete_and_orthonormal() {
        for m in 3..=24u32 {
            let irr = dihedral_irreducibles(m).unwrap();
            assert_eq!(irr.iter().map(|i| i.dim * i.dim).sum::<u64>(), 2 * m as u64);
            assert_eq!(irr.len(), irr[0].character.classes().count());
            if m <= 12 {
                for (i, x) in irr.iter().enumerate() {
                    for (j, y) in irr.iter().enumerate() {
                        let ip = inner_product(&x.character, &y.character).unwrap();
                        assert_eq!(ip, Cyclotomic::from_int((i == j) as i64), "m={m}");
                    }
                }
            }
        }
    }
}
