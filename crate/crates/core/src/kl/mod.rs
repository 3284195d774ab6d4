//! Kazhdan–Lusztig polynomials of symmetric groups and the multiplicity
//! matrices `m_lambda`, `c_lambda` built from them.

mod cache;
mod encode;
mod engine;
mod matrices;
mod perm;
mod poly;

pub use cache::{cache_load, cache_store, read_cache, write_cache, CACHE_FILE_NAME, CACHE_HEADER};
pub use encode::{count_matrix, encode, encode_block};
pub use engine::{KlEngine, KlStats};
pub use matrices::{
    c_stalk_oracle_two_block, m_matrix, m_matrix_direct, m_matrix_for, MultiplicityMatrices,
};
pub use perm::{bruhat_leq, Permutation, MAX_N};
pub use poly::KLPolynomial;
