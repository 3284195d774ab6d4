//! Multisegments as permutations.
//!
//! On a block with exponents `r_0 < ... < r_{k-1}` and multiplicities `e`,
//! an orbit becomes a `k x k` count matrix `A` with `A[i][j]` (for `i <= j`)
//! the number of segments `[r_i, r_j]` and `A[i][i-1]` the number of
//! segments containing both `r_{i-1}` and `r_i`. Row and column sums are `e`,
//! so `A` names a double coset of `S_e \ S_N / S_e`; the orbit is encoded by
//! its longest element. This is order-preserving from closure order to Bruhat
//! order.

use super::perm::{Permutation, MAX_N};
use crate::error::{Error, Result};
use crate::geometry::restrict_to_block;
use crate::multisegment::{support, Block, InfinitesimalParameter, Multisegment};

/// The count matrix of `alpha` on `block`.
pub fn count_matrix(block: &Block, alpha: &Multisegment) -> Result<Vec<Vec<usize>>> {
    let k = block.len();
    let mut a = vec![vec![0usize; k]; k];
    for s in alpha.segments() {
        let (Some(i), Some(j)) = (
            block.index_of(s.line(), s.start()),
            block.index_of(s.line(), s.end()),
        ) else {
            return Err(Error::SupportMismatch(format!("segment {s} leaves its block")));
        };
        a[i][j] += 1;
        for t in i + 1..=j {
            a[t][t - 1] += 1;
        }
    }
    for i in 0..k {
        let row: usize = a[i].iter().sum();
        let col: usize = (0..k).map(|r| a[r][i]).sum();
        if row != block.mults[i] || col != block.mults[i] {
            return Err(Error::SupportMismatch(format!(
                "{alpha} does not have the multiplicities of the block"
            )));
        }
    }
    Ok(a)
}

/// Longest element of the double coset with count matrix `a` and block
/// sizes `e`: entries decrease along every block row and block column.
fn longest_representative(a: &[Vec<usize>], e: &[usize]) -> Result<Permutation> {
    let k = e.len();
    let n: usize = e.iter().sum();
    if n > MAX_N {
        return Err(Error::GuardExceeded {
            what: "permutation size",
            actual: n,
            limit: MAX_N,
        });
    }
    let offset: Vec<usize> = e
        .iter()
        .scan(0, |acc, &x| {
            let o = *acc;
            *acc += x;
            Some(o)
        })
        .collect();
    // Within block row i the rows run through block columns k-1, ..., 0;
    // within block column j the columns run through block rows k-1, ..., 0.
    let mut row_start = vec![vec![0usize; k]; k];
    for i in 0..k {
        let mut r = offset[i];
        for j in (0..k).rev() {
            row_start[i][j] = r;
            r += a[i][j];
        }
    }
    let mut col_start = vec![vec![0usize; k]; k];
    for j in 0..k {
        let mut c = offset[j];
        for i in (0..k).rev() {
            col_start[i][j] = c;
            c += a[i][j];
        }
    }
    let mut images = vec![0usize; n];
    for i in 0..k {
        for j in 0..k {
            let cnt = a[i][j];
            for t in 0..cnt {
                images[row_start[i][j] + t] = col_start[i][j] + cnt - 1 - t;
            }
        }
    }
    Permutation::from_images(&images)
}

/// Encoding of the part of `alpha` lying on `block`.
pub fn encode_block(block: &Block, alpha: &Multisegment) -> Result<Permutation> {
    let a = count_matrix(block, alpha)?;
    longest_representative(&a, &block.mults)
}

/// Encoding of `alpha`, block-diagonally over the blocks of `lambda`.
pub fn encode(lambda: &InfinitesimalParameter, alpha: &Multisegment) -> Result<Permutation> {
    if &support(alpha) != lambda {
        return Err(Error::SupportMismatch(format!(
            "{alpha} is not supported on {lambda}"
        )));
    }
    let mut out = Permutation::identity(0);
    for block in lambda.blocks() {
        let piece = encode_block(&block, &restrict_to_block(alpha, &block))?;
        out = out.concat(&piece).map_err(|_| Error::GuardExceeded {
            what: "permutation size",
            actual: lambda.points(),
            limit: MAX_N,
        })?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::OrbitSpace;
    use crate::kl::perm::bruhat_leq;
    use crate::parse::{parse_lambda, parse_multisegment};

    fn enc(l: &str, m: &str) -> String {
        encode(&parse_lambda(l).unwrap(), &parse_multisegment(m).unwrap())
            .unwrap()
            .to_string()
    }

    #[test]
    fn gl2_and_gl4_encodings() {
        assert_eq!(enc("[-1/2,1/2]", "[1/2]+[-1/2]"), "12");
        assert_eq!(enc("[-1/2,1/2]", "[-1/2,1/2]"), "21");
        let l = "[-1/2,1/2]+[-1/2,1/2]";
        assert_eq!(enc(l, "[1/2]+[1/2]+[-1/2]+[-1/2]"), "2143");
        assert_eq!(enc(l, "[-1/2,1/2]+[1/2]+[-1/2]"), "4231");
        assert_eq!(enc(l, "[-1/2,1/2]+[-1/2,1/2]"), "4321");
    }

    #[test]
    fn count_patterns_for_gl4() {
        let l = parse_lambda("[-1/2,1/2]+[-1/2,1/2]").unwrap();
        let block = &l.blocks()[0];
        let pats: Vec<_> = OrbitSpace::build(&l)
            .unwrap()
            .orbits()
            .iter()
            .map(|o| count_matrix(block, &o.multisegment).unwrap())
            .collect();
        // lower-left entry counts length-two segments
        assert_eq!(pats[0], vec![vec![2, 0], vec![0, 2]]);
        assert_eq!(pats[1], vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(pats[2], vec![vec![0, 2], vec![2, 0]]);
    }

    #[test]
    fn rejects_wrong_support() {
        let l = parse_lambda("[-1/2,1/2]").unwrap();
        assert!(matches!(
            encode(&l, &parse_multisegment("[1/2]").unwrap()),
            Err(Error::SupportMismatch(_))
        ));
    }

    #[test]
    fn encoding_is_an_order_embedding() {
        for l in ["[0,3]+[1,2]+[1]", "[0,2]+[0,2]+[1]", "[0,1]+[0,1]+[1,2]", "[0,4]"] {
            let l = parse_lambda(l).unwrap();
            let space = OrbitSpace::build(&l).unwrap();
            let perms: Vec<_> = space
                .orbits()
                .iter()
                .map(|o| encode(&l, &o.multisegment).unwrap())
                .collect();
            for i in 0..space.len() {
                for j in 0..space.len() {
                    assert_eq!(
                        space.leq(i, j),
                        bruhat_leq(&perms[i], &perms[j]).unwrap(),
                        "{} vs {}",
                        space.orbit(i),
                        space.orbit(j)
                    );
                }
            }
            // distinct orbits get distinct permutations
            let mut sorted = perms.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), perms.len());
        }
    }
}
