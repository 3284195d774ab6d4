//! Kazhdan–Lusztig polynomials recomputed from R-polynomials and compared
//! with the engine on every pair of S_4 and S_5.

use std::collections::HashMap;

use vogan_core::kl::{bruhat_leq, KLPolynomial, KlEngine, Permutation};

fn all_perms(n: usize) -> Vec<Permutation> {
    fn rec(v: &mut Vec<usize>, k: usize, out: &mut Vec<Permutation>) {
        if k == v.len() {
            out.push(Permutation::from_images(v).unwrap());
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            rec(v, k + 1, out);
            v.swap(k, i);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..n).collect(), 0, &mut out);
    out
}

type Poly = Vec<i64>;

fn add(a: &mut Poly, b: &Poly, shift: usize, scale: i64) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &c) in b.iter().enumerate() {
        a[i + shift] += scale * c;
    }
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![0; (a.len() + b.len()).saturating_sub(1)];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Deodhar-style recursion on a right descent of `w`.
struct Oracle {
    r: HashMap<(Permutation, Permutation), Poly>,
    p: HashMap<(Permutation, Permutation), Poly>,
}

impl Oracle {
    fn new() -> Self {
        Oracle {
            r: HashMap::new(),
            p: HashMap::new(),
        }
    }

    fn r(&mut self, x: Permutation, w: Permutation) -> Poly {
        if let Some(v) = self.r.get(&(x, w)) {
            return v.clone();
        }
        let out = if !bruhat_leq(&x, &w).unwrap() {
            vec![]
        } else if x == w {
            vec![1]
        } else {
            let s = w.right_descents().trailing_zeros() as usize;
            let ws = w.right_simple(s);
            let xs = x.right_simple(s);
            if xs.length() < x.length() {
                self.r(xs, ws)
            } else {
                // (q - 1) R_{x,ws} + q R_{xs,ws}
                let mut v = Vec::new();
                let a = self.r(x, ws);
                add(&mut v, &a, 1, 1);
                add(&mut v, &a, 0, -1);
                add(&mut v, &self.r(xs, ws), 1, 1);
                v
            }
        };
        self.r.insert((x, w), out.clone());
        out
    }

    /// `q^{l} P(q^{-1}) - P(q) = sum_{x < y <= w} R_{x,y} P_{y,w}`; the
    /// low-degree half of the right side determines `P`.
    fn p(&mut self, x: Permutation, w: Permutation, group: &[Permutation]) -> Poly {
        if let Some(v) = self.p.get(&(x, w)) {
            return v.clone();
        }
        let out = if !bruhat_leq(&x, &w).unwrap() {
            vec![]
        } else if x == w {
            vec![1]
        } else {
            let mut rhs = Vec::new();
            for &y in group {
                if y != x && bruhat_leq(&x, &y).unwrap() && bruhat_leq(&y, &w).unwrap() {
                    let term = mul(&self.r(x, y), &self.p(y, w, group));
                    add(&mut rhs, &term, 0, 1);
                }
            }
            let l = w.length() - x.length();
            let mut p: Poly = rhs.iter().take(l.div_ceil(2)).map(|c| -c).collect();
            while p.last() == Some(&0) {
                p.pop();
            }
            p
        };
        self.p.insert((x, w), out.clone());
        out
    }
}

fn check_group(n: usize) {
    let group = all_perms(n);
    let engine = KlEngine::new();
    let mut oracle = Oracle::new();
    for &w in &group {
        for &x in &group {
            let expected = KLPolynomial::from_coeffs(oracle.p(x, w, &group));
            let got = engine.kl_poly(&x, &w).unwrap();
            assert_eq!(got, expected, "P_{{{x},{w}}}");
        }
    }
}

#[test]
fn engine_matches_r_polynomial_oracle_in_s4() {
    check_group(4);
}

#[test]
fn engine_matches_r_polynomial_oracle_in_s5() {
    check_group(5);
}

#[test]
fn structural_properties_in_s5() {
    let group = all_perms(5);
    let engine = KlEngine::new();
    for &w in &group {
        assert_eq!(engine.kl_poly(&w, &w).unwrap(), KLPolynomial::one());
        for &x in &group {
            let p = engine.kl_poly(&x, &w).unwrap();
            let leq = bruhat_leq(&x, &w).unwrap();
            assert_eq!(!p.is_zero(), leq, "support of P_{{{x},{w}}}");
            if leq {
                assert_eq!(p.coeff(0), 1);
                assert!(p.coeffs().iter().all(|&c| c >= 0));
                if x != w {
                    let d = p.degree().unwrap();
                    assert!(2 * d < w.length() - x.length(), "degree of P_{{{x},{w}}}");
                }
            }
        }
    }
}

#[test]
fn factorization_does_not_change_results_in_s6_sample() {
    let group = all_perms(6);
    let with = KlEngine::new();
    let without = KlEngine::without_factorization();
    let top = group.iter().max_by_key(|p| p.length()).unwrap();
    for x in group.iter().step_by(7) {
        for w in group.iter().step_by(11).chain([top]) {
            assert_eq!(with.kl_poly(x, w).unwrap(), without.kl_poly(x, w).unwrap(), "{x} {w}");
        }
    }
}
