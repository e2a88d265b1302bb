//! Partitions, Chern-number combinations and the reduction of symmetric
//! polynomials in the Chern roots to the Chern-class basis.

pub mod combo;
pub mod lemma;
pub mod partition;
pub mod reduce;

pub use combo::{render_chern_monomial, ChernCombo, ComboError};
pub use lemma::{lemma23_lhs, lemma23_rhs, verify_lemma23, HTerm};
pub use partition::{partitions_of, Partition};
pub use reduce::{
    check_symmetric, elementary, expand_combo, h_component, reduce_dominant, reduce_to_chern,
    ElementaryBasis, ReduceError,
};
