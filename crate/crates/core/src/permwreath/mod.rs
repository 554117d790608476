//! Permutations, symmetric and wreath products, and their irreducible
//! characters.

mod descriptor;
mod finite;
mod irr;
mod perm;
mod top;

pub use descriptor::{Element, GroupDescriptor, WreathSpec};
pub use finite::{ClassPartition, FiniteGroup, DEFAULT_CAP};
pub use irr::{
    block_orbits, canonical_extension_value, canonical_extension_value_with_section, char_value,
    fixed_point_subgroup, irr_labels, stabilizer_of_label, CompiledCharacter, IrrLabel,
};
pub use perm::{all_perms, Perm};
pub use top::{FactorLabel, TopGroup, TopLabel};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("not a permutation: {0:?}")]
    NotABijection(Vec<usize>),
    #[error("permutation degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group has more than {cap} elements")]
    TooLarge { cap: usize },
    #[error("unsupported top group: {0}")]
    UnsupportedTop(String),
    #[error("invalid group descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("element does not belong to the group: {0}")]
    InvalidElement(String),
    #[error("invalid irreducible label: {0}")]
    InvalidLabel(String),
    #[error("top element does not stabilize the label")]
    NotInStabilizer,
    #[error("permutation does not normalize the group")]
    NotNormalizing,
    #[error("cannot parse permutation {0}")]
    Parse(String),
}
