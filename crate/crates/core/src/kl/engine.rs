use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{OnceLock, RwLock};

use super::perm::{leq_unchecked, Permutation};
use super::poly::KLPolynomial;
use crate::error::{Error, Result};

/// Memo counters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct KlStats {
    pub hits: u64,
    pub computed: u64,
    pub entries: usize,
}

/// Memoized Kazhdan–Lusztig polynomials `P_{x,w}` of symmetric groups.
///
/// The memo is keyed by reduced pairs: `x` is pushed up along the left and
/// right descents of `w`, which leaves `P_{x,w}` unchanged. Concurrent
/// callers may duplicate work but always insert identical values.
#[derive(Debug)]
pub struct KlEngine {
    memo: RwLock<HashMap<(Permutation, Permutation), KLPolynomial>>,
    factorize: bool,
    hits: AtomicU64,
    computed: AtomicU64,
}

impl Default for KlEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl KlEngine {
    pub fn new() -> Self {
        KlEngine {
            memo: RwLock::new(HashMap::new()),
            factorize: true,
            hits: AtomicU64::new(0),
            computed: AtomicU64::new(0),
        }
    }

    /// An engine that never splits `(x, w)` into parabolic factors.
    pub fn without_factorization() -> Self {
        KlEngine {
            factorize: false,
            ..Self::new()
        }
    }

    /// Process-wide shared engine.
    pub fn global() -> &'static KlEngine {
        static GLOBAL: OnceLock<KlEngine> = OnceLock::new();
        GLOBAL.get_or_init(KlEngine::new)
    }

    pub fn stats(&self) -> KlStats {
        KlStats {
            hits: self.hits.load(Ordering::Relaxed),
            computed: self.computed.load(Ordering::Relaxed),
            entries: self.memo.read().expect("memo lock").len(),
        }
    }

    pub fn reset_counters(&self) {
        self.hits.store(0, Ordering::Relaxed);
        self.computed.store(0, Ordering::Relaxed);
    }

    /// All memo entries, sorted.
    pub fn snapshot(&self) -> Vec<(Permutation, Permutation, KLPolynomial)> {
        let memo = self.memo.read().expect("memo lock");
        let mut out: Vec<_> = memo
            .iter()
            .map(|((x, w), p)| (*x, *w, p.clone()))
            .collect();
        out.sort_by(|a, b| (a.0.size(), a.0, a.1).cmp(&(b.0.size(), b.0, b.1)));
        out
    }

    pub(crate) fn insert(&self, x: Permutation, w: Permutation, p: KLPolynomial) {
        self.memo.write().expect("memo lock").insert((x, w), p);
    }

    /// `P_{x,w}`.
    pub fn kl_poly(&self, x: &Permutation, w: &Permutation) -> Result<KLPolynomial> {
        if x.size() != w.size() {
            return Err(Error::LengthMismatch(x.size(), w.size()));
        }
        Ok(self.p(*x, *w))
    }

    /// `mu(x, w)`: the coefficient of `q^{(l(w)-l(x)-1)/2}` in `P_{x,w}`.
    pub fn mu(&self, x: &Permutation, w: &Permutation) -> Result<i64> {
        if x.size() != w.size() {
            return Err(Error::LengthMismatch(x.size(), w.size()));
        }
        Ok(self.mu_inner(*x, *w))
    }

    fn mu_inner(&self, z: Permutation, v: Permutation) -> i64 {
        let (lz, lv) = (z.length(), v.length());
        if lz >= lv || (lv - lz) % 2 == 0 {
            return 0;
        }
        self.p(z, v).coeff((lv - lz - 1) / 2)
    }

    fn p(&self, x: Permutation, w: Permutation) -> KLPolynomial {
        if !leq_unchecked(&x, &w) {
            return KLPolynomial::zero();
        }
        let x = reduce(x, &w);
        if x == w || w.length() - x.length() <= 2 {
            return KLPolynomial::one();
        }
        if self.factorize {
            if let Some(t) = common_split(&x, &w) {
                let n = w.size();
                let lo = self.p(x.slice(0, t), w.slice(0, t));
                let hi = self.p(x.slice(t, n), w.slice(t, n));
                return lo.mul(&hi);
            }
        }
        if let Some(p) = self.memo.read().expect("memo lock").get(&(x, w)) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return p.clone();
        }
        let p = self.compute(x, w);
        self.computed.fetch_add(1, Ordering::Relaxed);
        self.memo
            .write()
            .expect("memo lock")
            .entry((x, w))
            .or_insert_with(|| p.clone());
        p
    }

    /// The standard recursion along a right descent `s` of `w`, with `v = ws`.
    /// After reduction `xs < x`, so
    /// `P_{x,w} = P_{xs,v} + q P_{x,v} - Σ mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}`
    /// over `x <= z < v` with `zs < z`.
    fn compute(&self, x: Permutation, w: Permutation) -> KLPolynomial {
        let s = w.right_descents().trailing_zeros() as usize;
        let v = w.right_simple(s);
        let xs = x.right_simple(s);
        debug_assert!(x.get(s) > x.get(s + 1));
        let mut p = self.p(xs, v);
        p.add_assign_shifted(&self.p(x, v), 1, 1);
        let lw = w.length();
        let (dl, dr) = (v.left_descents(), v.right_descents());
        for z in interval_below(&x, &v) {
            if z.get(s) < z.get(s + 1) {
                continue;
            }
            let lz = z.length();
            let gap = v.length() - lz;
            if gap % 2 == 0 {
                continue;
            }
            let mu = if gap == 1 {
                1
            } else {
                if z.left_descents() & dl != dl || z.right_descents() & dr != dr {
                    continue;
                }
                self.mu_inner(z, v)
            };
            if mu != 0 {
                p.add_assign_shifted(&self.p(x, z), (lw - lz) / 2, -mu);
            }
        }
        p
    }
}

/// Push `x` up along descents of `w` until `xs < x` and `sx < x` for every
/// right descent `s` and left descent of `w`.
fn reduce(mut x: Permutation, w: &Permutation) -> Permutation {
    let (dr, dl) = (w.right_descents(), w.left_descents());
    loop {
        let mut changed = false;
        for i in bits(dr) {
            if x.get(i) < x.get(i + 1) {
                x = x.right_simple(i);
                changed = true;
            }
        }
        let inv = x.inverse();
        for i in bits(dl) {
            if inv.get(i) < inv.get(i + 1) {
                x = x.left_simple(i);
                changed = true;
                break;
            }
        }
        if !changed {
            return x;
        }
    }
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| mask & (1 << i) != 0)
}

fn common_split(x: &Permutation, w: &Permutation) -> Option<usize> {
    let n = w.size();
    let (mut mx, mut mw) = (0, 0);
    for t in 0..n.saturating_sub(1) {
        mx = mx.max(x.get(t));
        mw = mw.max(w.get(t));
        if mx == t && mw == t {
            return Some(t + 1);
        }
    }
    None
}

/// Elements `z` with `x <= z < v`.
fn interval_below(x: &Permutation, v: &Permutation) -> Vec<Permutation> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([*v]);
    let mut out = Vec::new();
    let lx = x.length();
    while let Some(y) = queue.pop_front() {
        if y.length() <= lx {
            continue;
        }
        for z in y.lower_covers() {
            if seen.contains(&z) || !leq_unchecked(x, &z) {
                continue;
            }
            seen.insert(z);
            out.push(z);
            queue.push_back(z);
        }
    }
    out
}
