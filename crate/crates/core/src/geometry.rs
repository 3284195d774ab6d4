//! The graded space `V_lambda = ⊕ Hom(E_r, E_{r+1})`, its orbits under
//! `H_lambda = ∏ GL(E_r)`, and restriction to Levi subvarieties.
//!
//! Orbits are named by multisegments. Closure order is rank dominance, and
//! every combinatorial formula here has a brute-force linear-algebra twin.

use std::collections::{BTreeMap, HashMap};

use crate::arthur::ArthurParameter;
use crate::error::{Error, Result};
use crate::linalg::{sparse_rank, IntMatrix};
use crate::multisegment::{canonicalize, support, Block, HalfInt, InfinitesimalParameter, LineId, Multisegment, Segment};

/// Default refusal threshold for the number of points on one line.
pub const DEFAULT_MAX_POINTS: usize = 12;

/// Largest per-line point count accepted by the brute-force stabilizer.
pub const BRUTE_FORCE_MAX_POINTS: usize = 8;

/// Interval `[a, b]` on a line; keys of the rank invariants.
pub type RankKey = (LineId, HalfInt, HalfInt);

/// Sparse rank function of an orbit (zero ranks are omitted).
pub type Ranks = BTreeMap<RankKey, usize>;

pub fn dim_v(lambda: &InfinitesimalParameter) -> u64 {
    lambda
        .blocks()
        .iter()
        .map(|b| b.mults.windows(2).map(|w| (w[0] * w[1]) as u64).sum::<u64>())
        .sum()
}

pub fn dim_h(lambda: &InfinitesimalParameter) -> u64 {
    lambda
        .lines()
        .flat_map(|(_, m)| m.values())
        .map(|&e| (e * e) as u64)
        .sum()
}

/// `dim Hom` between the standard modules of two segments: 1 iff
/// `c <= a <= d <= b` on a common line.
fn hom(d1: &Segment, d2: &Segment) -> u64 {
    let (a, b, c, d) = (d1.start(), d1.end(), d2.start(), d2.end());
    let aligned = d1.line() == d2.line() && a.int_diff(c).is_some();
    u64::from(aligned && c <= a && a <= d && d <= b)
}

/// Dimension of the orbit named by `alpha`.
pub fn orbit_dim(alpha: &Multisegment) -> u64 {
    let segs = alpha.segments();
    let homs: u64 = segs
        .iter()
        .flat_map(|s| segs.iter().map(move |t| hom(s, t)))
        .sum();
    dim_h(&support(alpha)) - homs
}

/// `rank(a, b)` = number of segments containing `[a, b]`.
pub fn rank_invariants(alpha: &Multisegment) -> Ranks {
    let mut ranks = Ranks::new();
    for s in alpha.segments() {
        let pts: Vec<HalfInt> = s.points().collect();
        for i in 0..pts.len() {
            for j in i..pts.len() {
                *ranks.entry((s.line().clone(), pts[i], pts[j])).or_insert(0) += 1;
            }
        }
    }
    ranks
}

/// Whether the orbit of `alpha` lies in the closure of the orbit of `beta`.
pub fn closure_leq(alpha: &Multisegment, beta: &Multisegment) -> Result<bool> {
    let (la, lb) = (support(alpha), support(beta));
    if la != lb {
        return Err(Error::SupportMismatch(format!(
            "{alpha} has support {la}, {beta} has support {lb}"
        )));
    }
    Ok(ranks_leq(&rank_invariants(alpha), &rank_invariants(beta)))
}

fn ranks_leq(ra: &Ranks, rb: &Ranks) -> bool {
    ra.iter().all(|(k, &v)| rb.get(k).copied().unwrap_or(0) >= v)
}

/// Segments of `alpha` lying on the given block.
pub fn restrict_to_block(alpha: &Multisegment, block: &Block) -> Multisegment {
    canonicalize(
        alpha
            .segments()
            .iter()
            .filter(|s| block.index_of(s.line(), s.start()).is_some())
            .cloned(),
    )
}

/// All multisegments supported on a single block, as index-pair lists.
///
/// Points are consumed left to right. Every point of index `i` not covered by
/// an earlier segment starts a new one; for those we choose how many still
/// cover `i+1, i+2, ...`, a non-increasing sequence bounded by what is left.
fn block_orbits(block: &Block) -> Vec<Multisegment> {
    fn starts(i: usize, remaining: &mut [usize], current: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if i == remaining.len() {
            out.push(current.clone());
            return;
        }
        let need = remaining[i];
        remaining[i] = 0;
        extend(i, i, need, remaining, current, out);
        remaining[i] = need;
    }

    // `alive` segments starting at `i` cover `r`; decide how many reach `r+1`.
    fn extend(
        i: usize,
        r: usize,
        alive: usize,
        remaining: &mut [usize],
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        let cap = if r + 1 < remaining.len() { alive.min(remaining[r + 1]) } else { 0 };
        for go_on in 0..=cap {
            let before = current.len();
            current.extend(std::iter::repeat((i, r)).take(alive - go_on));
            if go_on == 0 {
                starts(i + 1, remaining, current, out);
            } else {
                remaining[r + 1] -= go_on;
                extend(i, r + 1, go_on, remaining, current, out);
                remaining[r + 1] += go_on;
            }
            current.truncate(before);
        }
    }

    let mut remaining = block.mults.clone();
    let mut raw = Vec::new();
    starts(0, &mut remaining, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|pairs| {
            canonicalize(pairs.into_iter().map(|(i, j)| {
                Segment::new(block.line.clone(), block.exponent(i), block.exponent(j))
                    .expect("block indices are ordered")
            }))
        })
        .collect()
}

/// One orbit with its dimension and rank invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitInfo {
    pub multisegment: Multisegment,
    pub dim: u64,
    pub ranks: Ranks,
}

/// The orbits of `V_lambda` in the fixed order (dimension ascending, then the
/// canonical listing lexicographically).
#[derive(Debug, Clone)]
pub struct OrbitSpace {
    lambda: InfinitesimalParameter,
    dim_v: u64,
    dim_h: u64,
    orbits: Vec<OrbitInfo>,
    index: HashMap<Multisegment, usize>,
    by_ranks: HashMap<Ranks, usize>,
}

impl OrbitSpace {
    pub fn build(lambda: &InfinitesimalParameter) -> Result<Self> {
        build_orbit_space(lambda, DEFAULT_MAX_POINTS)
    }

    pub fn lambda(&self) -> &InfinitesimalParameter {
        &self.lambda
    }

    pub fn dim_v(&self) -> u64 {
        self.dim_v
    }

    pub fn dim_h(&self) -> u64 {
        self.dim_h
    }

    pub fn orbits(&self) -> &[OrbitInfo] {
        &self.orbits
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn orbit(&self, i: usize) -> &Multisegment {
        &self.orbits[i].multisegment
    }

    pub fn dims(&self) -> Vec<u64> {
        self.orbits.iter().map(|o| o.dim).collect()
    }

    pub fn index_of(&self, alpha: &Multisegment) -> Option<usize> {
        self.index.get(alpha).copied()
    }

    /// Index of `alpha`, or `SupportMismatch` if it is not an orbit here.
    pub fn require(&self, alpha: &Multisegment) -> Result<usize> {
        self.index_of(alpha).ok_or_else(|| {
            Error::SupportMismatch(format!("{alpha} is not an orbit of V for lambda = {}", self.lambda))
        })
    }

    /// Orbit with the given sparse rank function.
    pub fn index_of_ranks(&self, ranks: &Ranks) -> Option<usize> {
        self.by_ranks.get(ranks).copied()
    }

    /// `C_i ⊆ closure(C_j)`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        ranks_leq(&self.orbits[i].ranks, &self.orbits[j].ranks)
    }
}

/// Enumerate all orbits of `V_lambda`, refusing more than `max_points`
/// points on any one line.
pub fn build_orbit_space(lambda: &InfinitesimalParameter, max_points: usize) -> Result<OrbitSpace> {
    let actual = lambda.max_points_per_line();
    if actual > max_points {
        return Err(Error::GuardExceeded {
            what: "points per line",
            actual,
            limit: max_points,
        });
    }
    let mut all = vec![Multisegment::empty()];
    for block in lambda.blocks() {
        let local = block_orbits(&block);
        all = all
            .iter()
            .flat_map(|acc| local.iter().map(move |m| crate::multisegment::concat(acc, m)))
            .collect();
    }
    let mut orbits: Vec<OrbitInfo> = all
        .into_iter()
        .map(|m| OrbitInfo {
            dim: orbit_dim(&m),
            ranks: rank_invariants(&m),
            multisegment: m,
        })
        .collect();
    orbits.sort_by(|x, y| (x.dim, &x.multisegment).cmp(&(y.dim, &y.multisegment)));
    let index = orbits
        .iter()
        .enumerate()
        .map(|(i, o)| (o.multisegment.clone(), i))
        .collect();
    let by_ranks = orbits
        .iter()
        .enumerate()
        .map(|(i, o)| (o.ranks.clone(), i))
        .collect();
    Ok(OrbitSpace {
        dim_v: dim_v(lambda),
        dim_h: dim_h(lambda),
        lambda: lambda.clone(),
        orbits,
        index,
        by_ranks,
    })
}

type Grade = (LineId, HalfInt);

/// An explicit point of `V_lambda`: the maps `E_r -> E_{r+1}` as 0/1
/// matrices placing a chain of basis vectors along each segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMatrixPoint {
    dims: BTreeMap<Grade, usize>,
    maps: BTreeMap<Grade, IntMatrix>,
}

impl GradedMatrixPoint {
    pub fn of(alpha: &Multisegment) -> Self {
        let mut basis: BTreeMap<Grade, Vec<usize>> = BTreeMap::new();
        for (idx, s) in alpha.segments().iter().enumerate() {
            for r in s.points() {
                basis.entry((s.line().clone(), r)).or_default().push(idx);
            }
        }
        let dims: BTreeMap<Grade, usize> = basis.iter().map(|(k, v)| (k.clone(), v.len())).collect();
        let mut maps = BTreeMap::new();
        for ((line, r), src) in &basis {
            let Some(dst) = basis.get(&(line.clone(), r.step(1))) else {
                continue;
            };
            let mut x = IntMatrix::zeros(dst.len(), src.len());
            for (col, idx) in src.iter().enumerate() {
                if let Some(row) = dst.iter().position(|d| d == idx) {
                    x[(row, col)] = 1;
                }
            }
            maps.insert((line.clone(), *r), x);
        }
        GradedMatrixPoint { dims, maps }
    }

    pub fn dim(&self, line: &LineId, r: HalfInt) -> usize {
        self.dims.get(&(line.clone(), r)).copied().unwrap_or(0)
    }

    /// The map `E_r -> E_{r+1}`, if both spaces are non-zero.
    pub fn map(&self, line: &LineId, r: HalfInt) -> Option<&IntMatrix> {
        self.maps.get(&(line.clone(), r))
    }

    pub fn lambda(&self) -> InfinitesimalParameter {
        let mut l = InfinitesimalParameter::default();
        for ((line, r), &e) in &self.dims {
            l.insert(line, *r, e);
        }
        l
    }

    /// Block-diagonal sum, i.e. the image of a Levi point in the big space.
    pub fn direct_sum(&self, other: &GradedMatrixPoint) -> GradedMatrixPoint {
        let mut dims = self.dims.clone();
        for (k, &e) in &other.dims {
            *dims.entry(k.clone()).or_insert(0) += e;
        }
        let mut maps = BTreeMap::new();
        for (line, r) in dims.keys() {
            let next = (line.clone(), r.step(1));
            if !dims.contains_key(&next) {
                continue;
            }
            let piece = |p: &GradedMatrixPoint| {
                p.map(line, *r).cloned().unwrap_or_else(|| {
                    IntMatrix::zeros(p.dim(line, r.step(1)), p.dim(line, *r))
                })
            };
            maps.insert((line.clone(), *r), piece(self).direct_sum(&piece(other)));
        }
        GradedMatrixPoint { dims, maps }
    }

    /// Rank of the composite `E_a -> E_b`.
    pub fn composite_rank(&self, line: &LineId, a: HalfInt, b: HalfInt) -> usize {
        let mut acc = IntMatrix::identity(self.dim(line, a));
        let mut r = a;
        while r < b {
            match self.map(line, r) {
                Some(x) => acc = x.mul(&acc).expect("graded shapes agree"),
                None => return 0,
            }
            r = r.step(1);
        }
        acc.rank()
    }

    /// Ranks of all composites, computed by elimination, in the sparse
    /// format of [`rank_invariants`].
    pub fn rank_signature(&self) -> Ranks {
        let mut out = Ranks::new();
        for block in self.lambda().blocks() {
            for i in 0..block.len() {
                for j in i..block.len() {
                    let (a, b) = (block.exponent(i), block.exponent(j));
                    let rk = self.composite_rank(&block.line, a, b);
                    if rk > 0 {
                        out.insert((block.line.clone(), a, b), rk);
                    }
                }
            }
        }
        out
    }
}

/// `dim {h ∈ ⊕ End(E_g) : h_t A = A h_s for every arrow (s, t, A)}`,
/// by exact elimination.
fn commutant_dim(dims: &BTreeMap<Grade, usize>, arrows: &[(Grade, Grade, &IntMatrix)]) -> usize {
    let mut offset = BTreeMap::new();
    let mut unknowns = 0;
    for (g, &e) in dims {
        offset.insert(g.clone(), unknowns);
        unknowns += e * e;
    }
    let var = |g: &Grade, i: usize, j: usize| offset[g] + i * dims[g] + j;
    let mut rows = Vec::new();
    for (s, t, a) in arrows {
        let (es, et) = (dims[s], dims[t]);
        for i in 0..et {
            for j in 0..es {
                let mut eq = Vec::new();
                // (h_t A)[i][j] = Σ_k h_t[i][k] A[k][j]
                for k in 0..et {
                    if a[(k, j)] != 0 {
                        eq.push((var(t, i, k), a[(k, j)]));
                    }
                }
                // (A h_s)[i][j] = Σ_k A[i][k] h_s[k][j]
                for k in 0..es {
                    if a[(i, k)] != 0 {
                        eq.push((var(s, k, j), -a[(i, k)]));
                    }
                }
                rows.push(eq);
            }
        }
    }
    unknowns - sparse_rank(&rows, unknowns)
}

fn brute_force_guard(lambda: &InfinitesimalParameter) -> Result<()> {
    let actual = lambda.max_points_per_line();
    if actual > BRUTE_FORCE_MAX_POINTS {
        return Err(Error::GuardExceeded {
            what: "points per line for the brute-force stabilizer",
            actual,
            limit: BRUTE_FORCE_MAX_POINTS,
        });
    }
    Ok(())
}

/// Dimension of the stabilizer of an explicit point of the orbit `alpha`,
/// from the linear system `h x = x h`.
pub fn stabilizer_dim_bruteforce(alpha: &Multisegment) -> Result<usize> {
    brute_force_guard(&support(alpha))?;
    let point = GradedMatrixPoint::of(alpha);
    let arrows: Vec<_> = point
        .maps
        .iter()
        .map(|((line, r), x)| ((line.clone(), *r), (line.clone(), r.step(1)), x))
        .collect();
    Ok(commutant_dim(&point.dims, &arrows))
}

/// The orbit of `y_psi` in the dual space, named as a multisegment on the
/// negated grading: the transposed rectangles, reflected.
pub fn dual_orbit_of_arthur(psi: &ArthurParameter) -> Multisegment {
    psi.psi_hat().phi_of().negate()
}

/// The commuting pair `(x_psi, y_psi)` on `⊕ C^a ⊗ C^b`: `x` raises the
/// first weight, `y` lowers the second.
struct ArthurPair {
    dims: BTreeMap<Grade, usize>,
    x: Vec<(Grade, Grade, IntMatrix)>,
    y: Vec<(Grade, Grade, IntMatrix)>,
}

fn arthur_pair(psi: &ArthurParameter) -> ArthurPair {
    // basis vectors (component, p, q) grouped by grade
    let mut basis: BTreeMap<Grade, Vec<(usize, u32, u32)>> = BTreeMap::new();
    for (ci, c) in psi.components().iter().enumerate() {
        for p in 0..c.a() {
            for q in 0..c.b() {
                let twice = -(c.a() as i32 - 1) + 2 * p as i32 - (c.b() as i32 - 1) + 2 * q as i32;
                basis
                    .entry((c.line().clone(), HalfInt::from_twice(twice)))
                    .or_default()
                    .push((ci, p, q));
            }
        }
    }
    let dims = basis.iter().map(|(k, v)| (k.clone(), v.len())).collect();
    let build = |up: bool| {
        let mut arrows = Vec::new();
        for ((line, r), src) in &basis {
            let tgt_grade = (line.clone(), r.step(if up { 1 } else { -1 }));
            let Some(dst) = basis.get(&tgt_grade) else {
                continue;
            };
            let mut m = IntMatrix::zeros(dst.len(), src.len());
            for (col, &(ci, p, q)) in src.iter().enumerate() {
                let image = if up {
                    (ci, p + 1, q)
                } else if q > 0 {
                    (ci, p, q - 1)
                } else {
                    continue;
                };
                if let Some(row) = dst.iter().position(|&v| v == image) {
                    m[(row, col)] = 1;
                }
            }
            arrows.push(((line.clone(), *r), tgt_grade, m));
        }
        arrows
    };
    ArthurPair {
        x: build(true),
        y: build(false),
        dims,
    }
}

/// Dimension of the `H_lambda`-orbit of the pair `(x_psi, y_psi)`; the pair
/// is regular when this equals `dim V_lambda`.
pub fn arthur_pair_orbit_dim(psi: &ArthurParameter) -> Result<u64> {
    let lambda = psi.infinitesimal();
    brute_force_guard(&lambda)?;
    let pair = arthur_pair(psi);
    let arrows: Vec<_> = pair
        .x
        .iter()
        .chain(&pair.y)
        .map(|(s, t, m)| (s.clone(), t.clone(), m))
        .collect();
    let stab = commutant_dim(&pair.dims, &arrows) as u64;
    Ok(dim_h(&lambda) - stab)
}

/// Rank signature of `x_psi`, computed from the explicit matrices.
pub fn arthur_x_ranks(psi: &ArthurParameter) -> Ranks {
    let pair = arthur_pair(psi);
    let point = GradedMatrixPoint {
        dims: pair.dims,
        maps: pair.x.into_iter().map(|(s, _, m)| (s, m)).collect(),
    };
    point.rank_signature()
}

/// All tuples of factor orbits, lexicographic with the first factor most
/// significant.
pub fn product_tuples(factors: &[OrbitSpace]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for f in factors {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..f.len()).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

fn check_levi(lambda: &InfinitesimalParameter, levi_blocks: &[InfinitesimalParameter]) -> Result<()> {
    let joined = levi_blocks
        .iter()
        .fold(InfinitesimalParameter::default(), |acc, l| acc.union(l));
    if &joined != lambda {
        return Err(Error::SupportMismatch(format!(
            "Levi blocks join to {joined}, expected {lambda}"
        )));
    }
    Ok(())
}

/// The orbit of `V_lambda` containing the image of a Levi point, found from
/// the ranks of the block-diagonal matrices.
pub fn saturate(space: &OrbitSpace, tuple: &[&Multisegment]) -> Result<usize> {
    let point = tuple
        .iter()
        .map(|m| GradedMatrixPoint::of(m))
        .reduce(|a, b| a.direct_sum(&b))
        .unwrap_or_else(|| GradedMatrixPoint::of(&Multisegment::empty()));
    let sig = point.rank_signature();
    space.index_of_ranks(&sig).ok_or_else(|| {
        Error::SupportMismatch(format!(
            "a Levi point with ranks {sig:?} does not lie in V for lambda = {}",
            space.lambda()
        ))
    })
}

/// For each product tuple, the index of its saturation in `space`.
pub fn saturation_map(space: &OrbitSpace, factors: &[OrbitSpace]) -> Result<Vec<usize>> {
    let lambdas: Vec<_> = factors.iter().map(|f| f.lambda().clone()).collect();
    check_levi(space.lambda(), &lambdas)?;
    product_tuples(factors)
        .iter()
        .map(|t| {
            let ms: Vec<&Multisegment> = t.iter().zip(factors).map(|(&i, f)| f.orbit(i)).collect();
            saturate(space, &ms)
        })
        .collect()
}

/// Orbits of `V_{lambda_M}` inside `C ∩ V_{lambda_M}`, as tuples of factor
/// multisegments.
pub fn restrict_orbit(
    lambda: &InfinitesimalParameter,
    levi_blocks: &[InfinitesimalParameter],
    c: &Multisegment,
) -> Result<Vec<Vec<Multisegment>>> {
    check_levi(lambda, levi_blocks)?;
    let space = OrbitSpace::build(lambda)?;
    let target = space.require(c)?;
    let factors = levi_blocks
        .iter()
        .map(OrbitSpace::build)
        .collect::<Result<Vec<_>>>()?;
    let sat = saturation_map(&space, &factors)?;
    Ok(product_tuples(&factors)
        .into_iter()
        .zip(sat)
        .filter(|(_, s)| *s == target)
        .map(|(t, _)| t.iter().zip(&factors).map(|(&i, f)| f.orbit(i).clone()).collect())
        .collect())
}
