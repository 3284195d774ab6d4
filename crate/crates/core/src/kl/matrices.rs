use super::encode::{encode, encode_block};
use super::engine::KlEngine;
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::geometry::{build_orbit_space, restrict_to_block, OrbitSpace};
use crate::linalg::IntMatrix;
use crate::multisegment::InfinitesimalParameter;

/// `m` (standard-to-irreducible) and `c = m^t`, indexed in orbit order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityMatrices {
    pub m: IntMatrix,
    pub c: IntMatrix,
}

impl MultiplicityMatrices {
    fn from_c(c: IntMatrix) -> Self {
        MultiplicityMatrices { m: c.transpose(), c }
    }
}

fn c_from_perms(perms: &[Permutation], engine: &KlEngine) -> Result<IntMatrix> {
    let n = perms.len();
    let mut c = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            c[(i, j)] = engine.kl_poly(&perms[i], &perms[j])?.eval_at_one();
        }
    }
    Ok(c)
}

/// `c_{ij} = P_{w(C_i), w(C_j)}(1)`, assembled block by block:
/// the entry for a pair of orbits is the product of the block entries.
pub fn m_matrix(space: &OrbitSpace, engine: &KlEngine) -> Result<MultiplicityMatrices> {
    let blocks = space.lambda().blocks();
    let mut block_c = Vec::new();
    let mut block_index = Vec::new();
    for block in &blocks {
        let local = build_orbit_space(&block.to_lambda(), usize::MAX)?;
        let perms = local
            .orbits()
            .iter()
            .map(|o| encode_block(block, &o.multisegment))
            .collect::<Result<Vec<_>>>()?;
        block_c.push(c_from_perms(&perms, engine)?);
        let idx = space
            .orbits()
            .iter()
            .map(|o| local.require(&restrict_to_block(&o.multisegment, block)))
            .collect::<Result<Vec<_>>>()?;
        block_index.push(idx);
    }
    let n = space.len();
    let mut c = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            c[(i, j)] = block_c
                .iter()
                .zip(&block_index)
                .map(|(bc, idx)| bc[(idx[i], idx[j])])
                .product();
        }
    }
    Ok(MultiplicityMatrices::from_c(c))
}

/// Orbit space and matrices of `lambda` under the point guard.
pub fn m_matrix_for(
    lambda: &InfinitesimalParameter,
    engine: &KlEngine,
    max_points: usize,
) -> Result<(OrbitSpace, MultiplicityMatrices)> {
    let space = build_orbit_space(lambda, max_points)?;
    let mats = m_matrix(&space, engine)?;
    Ok((space, mats))
}

/// Same matrices from one permutation per orbit, encoding all blocks
/// together.
pub fn m_matrix_direct(space: &OrbitSpace, engine: &KlEngine) -> Result<MultiplicityMatrices> {
    let perms = space
        .orbits()
        .iter()
        .map(|o| encode(space.lambda(), &o.multisegment))
        .collect::<Result<Vec<_>>>()?;
    Ok(MultiplicityMatrices::from_c(c_from_perms(&perms, engine)?))
}

fn binomial(n: u64, k: u64) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Stalk Euler characteristic of the IC sheaf of the rank `<= k` locus of
/// `Hom(C^p, C^q)` at a point of rank `s`, read off from the small
/// resolution by Grassmannians: `binomial(min(p, q) - s, k - s)`.
pub fn c_stalk_oracle_two_block(p: u64, q: u64, k: u64, s: u64) -> Result<i64> {
    let r = p.min(q);
    if s > k || k > r {
        return Err(Error::OutOfRange(format!(
            "need s <= k <= min(p, q); got p={p}, q={q}, k={k}, s={s}"
        )));
    }
    Ok(binomial(r - s, k - s))
}
