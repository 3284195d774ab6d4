//! Grothendieck groups on both sides, their pairing, restriction to a Levi
//! and endoscopic lifting.
//!
//! Sheaf-side simple vectors are stored shifted: `ŝ_j = (-1)^{dim C_j} [IC_j]`.
//! In (irreducible, shifted IC) coordinates the pairing is the dot product.

use std::fmt;

use crate::arthur::ArthurParameter;
use crate::error::{Error, Result};
use crate::geometry::{build_orbit_space, product_tuples, saturation_map, OrbitSpace};
use crate::kl::{m_matrix, m_matrix_direct, KlEngine, MultiplicityMatrices};
use crate::linalg::IntMatrix;
use crate::multisegment::{canonicalize, concat, support, InfinitesimalParameter, LineId, Multisegment, Segment};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisTag {
    IrredRep,
    StdRep,
    /// Shifted simple perverse sheaves.
    IcSheaf,
    StdSheaf,
}

impl BasisTag {
    pub fn is_rep_side(self) -> bool {
        matches!(self, BasisTag::IrredRep | BasisTag::StdRep)
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasisTag::IrredRep => "irreducible",
            BasisTag::StdRep => "standard",
            BasisTag::IcSheaf => "IC",
            BasisTag::StdSheaf => "standard sheaf",
        })
    }
}

/// Integer coordinates in one basis of one Grothendieck group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KVector {
    pub space: String,
    pub tag: BasisTag,
    pub coords: Vec<i64>,
}

/// A linear map between Grothendieck groups, as an integer matrix acting on
/// coordinate columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KMatrix {
    pub source: (String, BasisTag),
    pub target: (String, BasisTag),
    pub matrix: IntMatrix,
}

impl KMatrix {
    pub fn apply(&self, v: &KVector) -> Result<KVector> {
        if v.space != self.source.0 {
            return Err(Error::LambdaMismatch {
                left: v.space.clone(),
                right: self.source.0.clone(),
            });
        }
        if v.tag != self.source.1 {
            return Err(Error::SideMismatch {
                from: v.tag.to_string(),
                to: self.source.1.to_string(),
            });
        }
        Ok(KVector {
            space: self.target.0.clone(),
            tag: self.target.1,
            coords: self.matrix.mul_vec(&v.coords)?,
        })
    }
}

/// The Grothendieck groups attached to `V_{lambda_1} x ... x V_{lambda_k}`:
/// the group itself for one factor, a Levi for several.
#[derive(Debug, Clone)]
pub struct KSpace {
    factors: Vec<OrbitSpace>,
    tuples: Vec<Vec<usize>>,
    dims: Vec<u64>,
    m: IntMatrix,
    c: IntMatrix,
    m_inv: IntMatrix,
    c_inv: IntMatrix,
    label: String,
}

impl KSpace {
    pub fn group(lambda: &InfinitesimalParameter, engine: &KlEngine, max_points: usize) -> Result<Self> {
        Self::levi(std::slice::from_ref(lambda), engine, max_points)
    }

    /// Product space; `m` and `c` are Kronecker products of the factors'.
    pub fn levi(lambdas: &[InfinitesimalParameter], engine: &KlEngine, max_points: usize) -> Result<Self> {
        let mut factors = Vec::new();
        let mut m = IntMatrix::identity(1);
        for l in lambdas {
            let space = build_orbit_space(l, max_points)?;
            let mm = m_matrix(&space, engine)?;
            m = m.kron(&mm.m);
            factors.push(space);
        }
        Self::assemble(factors, m)
    }

    fn assemble(factors: Vec<OrbitSpace>, m: IntMatrix) -> Result<Self> {
        let tuples = product_tuples(&factors);
        let dims = tuples
            .iter()
            .map(|t| t.iter().zip(&factors).map(|(&i, f)| f.orbits()[i].dim).sum())
            .collect();
        let c = m.transpose();
        let m_inv = m.inverse()?;
        let c_inv = c.inverse()?;
        let label = factors
            .iter()
            .map(|f| f.lambda().to_string())
            .collect::<Vec<_>>()
            .join(" x ");
        Ok(KSpace {
            factors,
            tuples,
            dims,
            m,
            c,
            m_inv,
            c_inv,
            label,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn factors(&self) -> &[OrbitSpace] {
        &self.factors
    }

    pub fn lambdas(&self) -> Vec<InfinitesimalParameter> {
        self.factors.iter().map(|f| f.lambda().clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    pub fn m(&self) -> &IntMatrix {
        &self.m
    }

    pub fn c(&self) -> &IntMatrix {
        &self.c
    }

    pub fn m_inv(&self) -> &IntMatrix {
        &self.m_inv
    }

    pub fn c_inv(&self) -> &IntMatrix {
        &self.c_inv
    }

    /// Factor multisegments of basis element `i`.
    pub fn tuple(&self, i: usize) -> Vec<&Multisegment> {
        self.tuples[i]
            .iter()
            .zip(&self.factors)
            .map(|(&k, f)| f.orbit(k))
            .collect()
    }

    /// Display name of basis element `i`, factors separated by `|`.
    pub fn tuple_label(&self, i: usize) -> String {
        self.tuple(i)
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
            .join(" | ")
    }

    pub fn index_of_tuple(&self, tuple: &[Multisegment]) -> Result<usize> {
        if tuple.len() != self.factors.len() {
            return Err(Error::SupportMismatch(format!(
                "expected {} factors, got {}",
                self.factors.len(),
                tuple.len()
            )));
        }
        let mut idx = 0;
        for (m, f) in tuple.iter().zip(&self.factors) {
            idx = idx * f.len() + f.require(m)?;
        }
        Ok(idx)
    }

    pub fn unit(&self, tag: BasisTag, i: usize) -> KVector {
        let mut coords = vec![0; self.len()];
        coords[i] = 1;
        KVector {
            space: self.label.clone(),
            tag,
            coords,
        }
    }

    pub fn vector(&self, tag: BasisTag, coords: Vec<i64>) -> Result<KVector> {
        if coords.len() != self.len() {
            return Err(Error::OutOfRange(format!(
                "vector of length {} on a space with {} basis elements",
                coords.len(),
                self.len()
            )));
        }
        Ok(KVector {
            space: self.label.clone(),
            tag,
            coords,
        })
    }

    /// `[IC(1_{C_j})]` without the shift, in shifted coordinates.
    pub fn ic_unshifted(&self, j: usize) -> KVector {
        let mut v = self.unit(BasisTag::IcSheaf, j);
        v.coords[j] = sign(self.dims[j]);
        v
    }

    fn check(&self, v: &KVector) -> Result<()> {
        if v.space != self.label {
            return Err(Error::LambdaMismatch {
                left: v.space.clone(),
                right: self.label.clone(),
            });
        }
        Ok(())
    }

    /// Rewrite `v` in the basis `target` on the same side.
    pub fn change_basis(&self, v: &KVector, target: BasisTag) -> Result<KVector> {
        self.check(v)?;
        use BasisTag::*;
        let matrix = match (v.tag, target) {
            (a, b) if a == b => return Ok(v.clone()),
            (StdRep, IrredRep) => &self.m,
            (IrredRep, StdRep) => &self.m_inv,
            (IcSheaf, StdSheaf) => &self.c,
            (StdSheaf, IcSheaf) => &self.c_inv,
            (a, b) => {
                return Err(Error::SideMismatch {
                    from: a.to_string(),
                    to: b.to_string(),
                })
            }
        };
        Ok(KVector {
            space: v.space.clone(),
            tag: target,
            coords: matrix.mul_vec(&v.coords)?,
        })
    }

    /// `<u, v>` for a representation-side `u` and a sheaf-side `v`.
    pub fn pairing(&self, u: &KVector, v: &KVector) -> Result<i64> {
        self.check(u)?;
        self.check(v)?;
        if !u.tag.is_rep_side() || v.tag.is_rep_side() {
            return Err(Error::SideMismatch {
                from: u.tag.to_string(),
                to: v.tag.to_string(),
            });
        }
        let u = self.change_basis(u, BasisTag::IrredRep)?;
        let v = self.change_basis(v, BasisTag::IcSheaf)?;
        Ok(u.coords.iter().zip(&v.coords).map(|(a, b)| a * b).sum())
    }
}

pub(crate) fn sign(d: u64) -> i64 {
    if d % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The same Levi matrices computed on a single product space: each factor
/// is moved to its own line, the whole space is encoded by one permutation
/// per orbit and KL polynomials are evaluated without any factorization.
/// The result is indexed by factor tuples.
pub fn levi_matrices_direct(lambdas: &[InfinitesimalParameter], max_points: usize) -> Result<MultiplicityMatrices> {
    let joined = lambdas
        .iter()
        .enumerate()
        .map(|(k, l)| relabel(&l.singletons(), k).map(|m| support(&m)))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .fold(InfinitesimalParameter::default(), |acc, l| acc.union(l));
    let space = build_orbit_space(&joined, usize::MAX)?;
    let factors = lambdas
        .iter()
        .map(|l| build_orbit_space(l, max_points))
        .collect::<Result<Vec<_>>>()?;
    let direct = m_matrix_direct(&space, &KlEngine::without_factorization())?;
    let tuples = product_tuples(&factors);
    let mut index = Vec::with_capacity(tuples.len());
    for t in &tuples {
        let mut ms = Multisegment::empty();
        for (k, (&i, f)) in t.iter().zip(&factors).enumerate() {
            ms = concat(&ms, &relabel(f.orbit(i), k)?);
        }
        index.push(space.require(&ms)?);
    }
    let n = tuples.len();
    let mut c = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            c[(i, j)] = direct.c[(index[i], index[j])];
        }
    }
    Ok(MultiplicityMatrices { m: c.transpose(), c })
}

/// Move every segment of `m` to a copy of its line private to factor `k`.
fn relabel(m: &Multisegment, k: usize) -> Result<Multisegment> {
    let segs = m
        .segments()
        .iter()
        .map(|s| {
            let line = LineId::new(&format!("{}_{k}", s.line().label()), s.line().base_degree())?;
            Segment::new(line, s.start(), s.end())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(canonicalize(segs))
}

/// The pair (group, Levi) with the geometric restriction between them.
#[derive(Debug, Clone)]
pub struct Endoscopy {
    pub group: KSpace,
    pub levi: KSpace,
    /// Saturation of each Levi basis tuple, as an orbit index of the group.
    saturation: Vec<usize>,
}

impl Endoscopy {
    pub fn new(
        lambda: &InfinitesimalParameter,
        levi_blocks: &[InfinitesimalParameter],
        engine: &KlEngine,
        max_points: usize,
    ) -> Result<Self> {
        let group = KSpace::group(lambda, engine, max_points)?;
        let levi = KSpace::levi(levi_blocks, engine, max_points)?;
        let saturation = saturation_map(&group.factors[0], &levi.factors)?;
        Ok(Endoscopy {
            group,
            levi,
            saturation,
        })
    }

    fn g_label(&self, tag: BasisTag) -> (String, BasisTag) {
        (self.group.label.clone(), tag)
    }

    fn m_label(&self, tag: BasisTag) -> (String, BasisTag) {
        (self.levi.label.clone(), tag)
    }

    /// Standard sheaves: the column of `C` marks the Levi orbits inside
    /// `C ∩ V_{lambda_M}`.
    pub fn eps_star_std(&self) -> KMatrix {
        let mut e = IntMatrix::zeros(self.levi.len(), self.group.len());
        for (t, &c) in self.saturation.iter().enumerate() {
            e[(t, c)] = 1;
        }
        KMatrix {
            source: self.g_label(BasisTag::StdSheaf),
            target: self.m_label(BasisTag::StdSheaf),
            matrix: e,
        }
    }

    /// Shifted IC sheaves: `c_M^{-1} [eps*]_std c_lambda`.
    pub fn eps_star_simple(&self) -> Result<KMatrix> {
        let m = self
            .levi
            .c_inv
            .mul(&self.eps_star_std().matrix)?
            .mul(&self.group.c)?;
        Ok(KMatrix {
            source: self.g_label(BasisTag::IcSheaf),
            target: self.m_label(BasisTag::IcSheaf),
            matrix: m,
        })
    }

    /// Standard representations: concatenation of multisegments.
    pub fn lift_std(&self) -> Result<KMatrix> {
        let mut l = IntMatrix::zeros(self.group.len(), self.levi.len());
        for t in 0..self.levi.len() {
            let joined = self
                .levi
                .tuple(t)
                .into_iter()
                .fold(Multisegment::empty(), |acc, m| concat(&acc, m));
            l[(self.group.factors[0].require(&joined)?, t)] = 1;
        }
        Ok(KMatrix {
            source: self.m_label(BasisTag::StdRep),
            target: self.g_label(BasisTag::StdRep),
            matrix: l,
        })
    }

    /// `m_lambda · [eps*]_std^t · m_M^{-1}`.
    pub fn lift_sim_by_adjunction(&self) -> Result<IntMatrix> {
        self.group
            .m
            .mul(&self.eps_star_std().matrix.transpose())?
            .mul(&self.levi.m_inv)
    }

    /// `m_lambda · [Lift]_std · m_M^{-1}`.
    pub fn lift_sim_by_concatenation(&self) -> Result<IntMatrix> {
        self.group.m.mul(&self.lift_std()?.matrix)?.mul(&self.levi.m_inv)
    }

    /// Irreducible representations; both routes must agree.
    pub fn lift_sim(&self) -> Result<KMatrix> {
        let a = self.lift_sim_by_adjunction()?;
        let b = self.lift_sim_by_concatenation()?;
        if a != b {
            return Err(Error::InternalInconsistency(format!(
                "lifting matrices disagree:\n{a}vs\n{b}"
            )));
        }
        Ok(KMatrix {
            source: self.m_label(BasisTag::IrredRep),
            target: self.g_label(BasisTag::IrredRep),
            matrix: a,
        })
    }
}

/// `[eps*]` on standard sheaves for `lambda` and a Levi.
pub fn eps_star_std(
    lambda: &InfinitesimalParameter,
    levi_blocks: &[InfinitesimalParameter],
    engine: &KlEngine,
) -> Result<KMatrix> {
    Ok(Endoscopy::new(lambda, levi_blocks, engine, usize::MAX)?.eps_star_std())
}

/// `[eps*]` on shifted simple sheaves.
pub fn eps_star_simple(
    lambda: &InfinitesimalParameter,
    levi_blocks: &[InfinitesimalParameter],
    engine: &KlEngine,
) -> Result<KMatrix> {
    Endoscopy::new(lambda, levi_blocks, engine, usize::MAX)?.eps_star_simple()
}

/// `[Lift]` on standard representations.
pub fn lift_std(
    lambda: &InfinitesimalParameter,
    levi_blocks: &[InfinitesimalParameter],
    engine: &KlEngine,
) -> Result<KMatrix> {
    Endoscopy::new(lambda, levi_blocks, engine, usize::MAX)?.lift_std()
}

/// `[Lift]` on irreducible representations.
pub fn lift_sim(
    lambda: &InfinitesimalParameter,
    levi_blocks: &[InfinitesimalParameter],
    engine: &KlEngine,
) -> Result<KMatrix> {
    Endoscopy::new(lambda, levi_blocks, engine, usize::MAX)?.lift_sim()
}

/// Everything attached to `psi` and a choice of Levi factors.
#[derive(Debug, Clone)]
pub struct ArthurData {
    pub psi: ArthurParameter,
    pub levi: Vec<(u64, ArthurParameter)>,
    pub endoscopy: Endoscopy,
}

impl ArthurData {
    pub fn new(psi: &ArthurParameter, engine: &KlEngine, max_points: usize) -> Result<Self> {
        Self::with_levi(psi, psi.levi_of(), engine, max_points)
    }

    pub fn with_levi(
        psi: &ArthurParameter,
        levi: Vec<(u64, ArthurParameter)>,
        engine: &KlEngine,
        max_points: usize,
    ) -> Result<Self> {
        let blocks: Vec<_> = levi.iter().map(|(_, p)| p.infinitesimal()).collect();
        let endoscopy = Endoscopy::new(&psi.infinitesimal(), &blocks, engine, max_points)?;
        Ok(ArthurData {
            psi: psi.clone(),
            levi,
            endoscopy,
        })
    }

    pub fn group(&self) -> &KSpace {
        &self.endoscopy.group
    }

    /// Orbit index of `C_psi`.
    pub fn psi_index(&self) -> Result<usize> {
        self.group().factors[0].require(&self.psi.pi_of())
    }

    /// `d(psi) = dim C_psi`.
    pub fn d_psi(&self) -> Result<u64> {
        Ok(self.group().dims[self.psi_index()?])
    }

    /// `eta_psi = [pi_psi]`.
    pub fn eta(&self) -> Result<KVector> {
        Ok(self.group().unit(BasisTag::IrredRep, self.psi_index()?))
    }

    /// `[pi_{psi_M}]` on the Levi.
    pub fn eta_levi(&self) -> Result<KVector> {
        let tuple: Vec<Multisegment> = self.levi.iter().map(|(_, p)| p.pi_of()).collect();
        let idx = self.endoscopy.levi.index_of_tuple(&tuple)?;
        Ok(self.endoscopy.levi.unit(BasisTag::IrredRep, idx))
    }

    /// `Lift(eta_{psi_M})`, without comparing to `eta_psi`.
    pub fn eta_evs_levi_route(&self) -> Result<KVector> {
        self.endoscopy.lift_sim()?.apply(&self.eta_levi()?)
    }

    /// `eta^Evs_psi`, computed on the Levi and checked against `eta_psi`.
    pub fn eta_evs(&self) -> Result<KVector> {
        let evs = self.eta_evs_levi_route()?;
        let eta = self.eta()?;
        if evs != eta {
            return Err(Error::InternalInconsistency(format!(
                "eta^Evs {:?} differs from eta {:?} for {}",
                evs.coords, eta.coords, self.psi
            )));
        }
        Ok(evs)
    }

    /// `(-1)^{d(psi)} <eta^Evs_psi, [IC(1_C)]>`.
    pub fn evs_rank(&self, c: &Multisegment) -> Result<i64> {
        let g = self.group();
        let j = g.factors[0].require(c)?;
        let evs = self.eta_evs()?;
        Ok(sign(self.d_psi()?) * g.pairing(&evs, &g.ic_unshifted(j))?)
    }

    /// Orbits with non-zero `evs_rank`.
    pub fn abv_packet(&self) -> Result<Vec<Multisegment>> {
        let space = &self.group().factors[0];
        let mut out = Vec::new();
        for o in space.orbits() {
            if self.evs_rank(&o.multisegment)? != 0 {
                out.push(o.multisegment.clone());
            }
        }
        Ok(out)
    }
}

pub fn eta(psi: &ArthurParameter, engine: &KlEngine) -> Result<KVector> {
    ArthurData::new(psi, engine, usize::MAX)?.eta()
}

pub fn eta_evs(psi: &ArthurParameter, engine: &KlEngine) -> Result<KVector> {
    ArthurData::new(psi, engine, usize::MAX)?.eta_evs()
}

pub fn evs_rank(psi: &ArthurParameter, c: &Multisegment, engine: &KlEngine) -> Result<i64> {
    ArthurData::new(psi, engine, usize::MAX)?.evs_rank(c)
}

pub fn abv_packet(psi: &ArthurParameter, engine: &KlEngine) -> Result<Vec<Multisegment>> {
    ArthurData::new(psi, engine, usize::MAX)?.abv_packet()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_arthur, parse_lambda, parse_multisegment};

    fn lam(s: &str) -> InfinitesimalParameter {
        parse_lambda(s).unwrap()
    }

    fn gl4() -> Endoscopy {
        let half = lam("[-1/2,1/2]");
        Endoscopy::new(
            &lam("[-1/2,1/2]+[-1/2,1/2]"),
            &[half.clone(), half],
            &KlEngine::new(),
            12,
        )
        .unwrap()
    }

    #[test]
    fn gl4_restriction_and_lift() {
        let e = gl4();
        let eps = IntMatrix::from_rows(&[[1, 0, 0], [0, 1, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(e.eps_star_std().matrix, eps);
        assert_eq!(e.eps_star_simple().unwrap().matrix, eps);
        assert_eq!(
            e.lift_sim().unwrap().matrix,
            IntMatrix::from_rows(&[[1, 0, 0, 0], [0, 1, 1, 0], [0, 0, 0, 1]])
        );
        assert_eq!(e.lift_std().unwrap().matrix, eps.transpose());
        assert_eq!(
            e.levi.c().clone(),
            IntMatrix::from_rows(&[[1, 1, 1, 1], [0, 1, 0, 1], [0, 0, 1, 1], [0, 0, 0, 1]])
        );
    }

    #[test]
    fn gl2_to_torus() {
        let z = lam("[-1/2]");
        let h = lam("[1/2]");
        let e = Endoscopy::new(&lam("[-1/2,1/2]"), &[z, h], &KlEngine::new(), 12).unwrap();
        assert_eq!(e.eps_star_std().matrix, IntMatrix::from_rows(&[[1, 0]]));
        assert_eq!(e.eps_star_simple().unwrap().matrix, IntMatrix::from_rows(&[[1, 1]]));
        assert_eq!(e.lift_sim().unwrap().matrix, IntMatrix::from_rows(&[[1], [1]]));
    }

    #[test]
    fn trivial_levi_is_identity() {
        let l = lam("[-1/2,1/2]+[-1/2,1/2]");
        let e = Endoscopy::new(&l, &[l.clone()], &KlEngine::new(), 12).unwrap();
        assert_eq!(e.eps_star_std().matrix, IntMatrix::identity(3));
        assert_eq!(e.eps_star_simple().unwrap().matrix, IntMatrix::identity(3));
        assert_eq!(e.lift_sim().unwrap().matrix, IntMatrix::identity(3));
        assert_eq!(e.lift_std().unwrap().matrix, IntMatrix::identity(3));
    }

    #[test]
    fn pairing_examples() {
        let g = KSpace::group(&lam("[-1/2,1/2]"), &KlEngine::new(), 12).unwrap();
        let pi1 = g.unit(BasisTag::IrredRep, 1);
        assert_eq!(g.pairing(&pi1, &g.ic_unshifted(1)).unwrap(), -1);
        assert_eq!(g.pairing(&pi1, &g.ic_unshifted(0)).unwrap(), 0);
        for i in 0..2 {
            for j in 0..2 {
                let d = g.unit(BasisTag::StdRep, j);
                let s = g.unit(BasisTag::StdSheaf, i);
                assert_eq!(g.pairing(&d, &s).unwrap(), i64::from(i == j));
            }
        }
        assert!(matches!(
            g.pairing(&g.unit(BasisTag::IcSheaf, 0), &pi1),
            Err(Error::SideMismatch { .. })
        ));
        let other = KSpace::group(&lam("[0]"), &KlEngine::new(), 12).unwrap();
        assert!(matches!(
            g.pairing(&other.unit(BasisTag::IrredRep, 0), &g.ic_unshifted(0)),
            Err(Error::LambdaMismatch { .. })
        ));
    }

    #[test]
    fn change_basis_examples() {
        let g = KSpace::group(&lam("[-1/2,1/2]"), &KlEngine::new(), 12).unwrap();
        let d0 = g.change_basis(&g.unit(BasisTag::StdRep, 0), BasisTag::IrredRep).unwrap();
        assert_eq!(d0.coords, vec![1, 1]);
        let d1 = g.change_basis(&g.unit(BasisTag::StdRep, 1), BasisTag::IrredRep).unwrap();
        assert_eq!(d1.coords, vec![0, 1]);
        let same = g.change_basis(&d1, BasisTag::IrredRep).unwrap();
        assert_eq!(same, d1);
        assert!(matches!(
            g.change_basis(&d1, BasisTag::IcSheaf),
            Err(Error::SideMismatch { .. })
        ));
    }

    #[test]
    fn packets() {
        let e = KlEngine::new();
        let psi = parse_arthur("(a=2,b=1)+(a=1,b=2)").unwrap();
        let data = ArthurData::new(&psi, &e, 12).unwrap();
        assert_eq!(data.eta_evs().unwrap().coords, vec![0, 1, 0]);
        assert_eq!(data.d_psi().unwrap(), 3);
        let ranks: Vec<i64> = data
            .group()
            .factors()[0]
            .orbits()
            .iter()
            .map(|o| data.evs_rank(&o.multisegment).unwrap())
            .collect();
        assert_eq!(ranks, vec![0, 1, 0]);
        assert_eq!(
            data.abv_packet().unwrap(),
            vec![parse_multisegment("[-1/2,1/2]+[1/2]+[-1/2]").unwrap()]
        );
        let steinberg = parse_arthur("(a=2,b=1)").unwrap();
        assert_eq!(eta_evs(&steinberg, &e).unwrap().coords, vec![0, 1]);
        let trivial = parse_arthur("(a=1,b=1)").unwrap();
        assert_eq!(abv_packet(&trivial, &e).unwrap(), vec![parse_multisegment("[0]").unwrap()]);
    }

    #[test]
    fn direct_levi_matrices_match_tensor_law() {
        let half = lam("[-1/2,1/2]");
        let direct = levi_matrices_direct(&[half.clone(), half.clone()], 12).unwrap();
        let tensor = KSpace::levi(&[half.clone(), half], &KlEngine::new(), 12).unwrap();
        assert_eq!(&direct.c, tensor.c());
    }
}
