//! Exhaustive families used by sweeps and checks.

use crate::arthur::{ArthurComponent, ArthurParameter};
use crate::error::Result;
use crate::multisegment::{HalfInt, InfinitesimalParameter, LineId};

/// Every Arthur parameter of degree `n` on `line` (whose base degree must
/// divide into `n`).
pub fn arthur_parameters(n: u64, line: &LineId) -> Result<Vec<ArthurParameter>> {
    let d = line.base_degree() as u64;
    let mut kinds = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            if a * b * d <= n {
                kinds.push(ArthurComponent::new(line.clone(), a as u32, b as u32)?);
            }
        }
    }
    let mut out = Vec::new();
    fn rec(
        kinds: &[ArthurComponent],
        from: usize,
        left: u64,
        cur: &mut Vec<ArthurComponent>,
        out: &mut Vec<Vec<ArthurComponent>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for k in from..kinds.len() {
            if kinds[k].degree() <= left {
                cur.push(kinds[k].clone());
                rec(kinds, k, left - kinds[k].degree(), cur, out);
                cur.pop();
            }
        }
    }
    let mut raw = Vec::new();
    if n > 0 {
        rec(&kinds, 0, n, &mut Vec::new(), &mut raw);
    }
    for comps in raw {
        out.push(ArthurParameter::new(comps)?);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// All compositions of `n` into positive parts.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The block `{0 ×e_0, 1 ×e_1, ...}` on the default line.
pub fn block_lambda(mults: &[usize]) -> InfinitesimalParameter {
    let mut l = InfinitesimalParameter::default();
    for (i, &e) in mults.iter().enumerate() {
        l.insert(&LineId::default(), HalfInt::from_int(i as i32), e);
    }
    l
}

/// Every single-block infinitesimal parameter with `1..=max_points` points,
/// up to translation.
pub fn connected_lambdas(max_points: usize) -> Vec<InfinitesimalParameter> {
    (1..=max_points)
        .flat_map(compositions)
        .map(|c| block_lambda(&c))
        .collect()
}

/// Sub-multisets of `lambda`, as (part, complement) pairs, both non-empty.
pub fn two_factor_splits(lambda: &InfinitesimalParameter) -> Vec<(InfinitesimalParameter, InfinitesimalParameter)> {
    let entries: Vec<(LineId, HalfInt, usize)> = lambda
        .lines()
        .flat_map(|(l, m)| m.iter().map(move |(&r, &c)| (l.clone(), r, c)))
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; entries.len()];
    loop {
        let mut first = InfinitesimalParameter::default();
        let mut second = InfinitesimalParameter::default();
        for ((l, r, c), &k) in entries.iter().zip(&choice) {
            first.insert(l, *r, k);
            second.insert(l, *r, c - k);
        }
        if !first.is_empty() && !second.is_empty() {
            out.push((first, second));
        }
        // odometer
        let mut i = 0;
        loop {
            if i == entries.len() {
                return out;
            }
            if choice[i] < entries[i].2 {
                choice[i] += 1;
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let line = LineId::default();
        assert_eq!(arthur_parameters(1, &line).unwrap().len(), 1);
        // degree 2: (2,1), (1,2), (1,1)+(1,1)
        assert_eq!(arthur_parameters(2, &line).unwrap().len(), 3);
        assert_eq!(compositions(4).len(), 8);
        assert_eq!(connected_lambdas(3).len(), 1 + 2 + 4);
        let l = block_lambda(&[2, 1]);
        // first factor takes 0, 1 or 2 copies of 0 and 0 or 1 copy of 1
        assert_eq!(two_factor_splits(&l).len(), 3 * 2 - 2);
    }

    #[test]
    fn every_parameter_has_the_right_degree() {
        let line = LineId::default();
        for n in 1..=6 {
            for p in arthur_parameters(n, &line).unwrap() {
                assert_eq!(p.degree(), n);
            }
        }
    }
}
