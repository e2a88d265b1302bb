//! Exact computation of Hirzebruch-type genera (χ_y, twisted Â, twisted L)
//! as rational combinations of Chern numbers, with verifiers for the
//! identities relating their expansions around `y = −1` to the Chern numbers
//! `c_n`, `c_1 c_{n−1}`, `c_1² c_{n−2}` and `c_2 c_{n−2}`.

pub mod algebra;
pub mod cli;
pub mod genera;
pub mod manifolds;
pub mod report;
pub mod symmetric;
pub mod verify;
