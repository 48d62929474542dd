//! Irreducible characters of `B_n` (little-group method), `D_n` (index-two
//! restriction and splitting) and `I_2(m)` (induction from rotations).

mod dihedral;
mod even;
mod hyperoctahedral;

pub use dihedral::{
    dihedral_character_table, dihedral_irreducibles, dihedral_irreducibles_on, rotation_character,
    rotation_subgroup, DihedralIrrep,
};
pub use even::{dn_character_table, dn_irreducibles, DnIrrep, DnLabel, InducedModule};
pub use hyperoctahedral::{
    bipartitions, bn_conjugacy_parametrization, bn_dimension, hyperoctahedral_character_table,
    hyperoctahedral_dimensions, hyperoctahedral_irreducibles, hyperoctahedral_irreducibles_on,
    sign_character_orbits, Bipartition, BnClassReport, BnIrrep, SignCharacter,
};

use crate::classify::TypeLabel;
use crate::error::{Error, Result};
use crate::rep::CharacterTable;
use crate::symmetric::symmetric_character_table;

/// The character table of a supported type: `A_n` for `n ≤ 5`, `B_n` for
/// `n ≤ 4`, `D_4`, and `I_2(m)` for `m ≤ 24`.
pub fn character_table(t: TypeLabel) -> Result<CharacterTable> {
    match t.validate()? {
        TypeLabel::A(n) => symmetric_character_table(n + 1),
        TypeLabel::B(n) => hyperoctahedral_character_table(n),
        TypeLabel::D(n) => dn_character_table(n),
        TypeLabel::I2(m) => dihedral_character_table(m),
        other => Err(Error::UnsupportedType(other.to_string())),
    }
}
