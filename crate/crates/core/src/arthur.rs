//! Arthur parameters of `GL(n)` as multisets of `(line, a, b)` triples.
//!
//! A component `(a, b)` stands for `chi ⊗ Sym^{a-1} ⊗ Sym^{b-1}`: the first
//! `SL(2)` is the Deligne one, the second the Arthur one.

use std::cmp::{Ordering, Reverse};
use std::fmt;

use crate::error::{Error, Result};
use crate::multisegment::{canonicalize, HalfInt, InfinitesimalParameter, LineId, Multisegment, Segment};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArthurComponent {
    line: LineId,
    a: u32,
    b: u32,
}

impl ArthurComponent {
    pub fn new(line: LineId, a: u32, b: u32) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidComponent(format!(
                "(a={a},b={b}): both dimensions must be positive"
            )));
        }
        Ok(ArthurComponent { line, a, b })
    }

    /// Component on the default line.
    pub fn ab(a: u32, b: u32) -> Result<Self> {
        Self::new(LineId::default(), a, b)
    }

    pub fn line(&self) -> &LineId {
        &self.line
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn degree(&self) -> u64 {
        self.line.base_degree() as u64 * self.a as u64 * self.b as u64
    }

    /// The Speh rectangle: `b` segments of length `a`.
    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        let (a, b) = (self.a as i32, self.b as i32);
        (0..b).map(move |j| {
            let center2 = -(b - 1) + 2 * j;
            Segment::new(
                self.line.clone(),
                HalfInt::from_twice(center2 - (a - 1)),
                HalfInt::from_twice(center2 + (a - 1)),
            )
            .expect("rectangle rows are valid segments")
        })
    }

    fn swapped(&self) -> Self {
        ArthurComponent {
            line: self.line.clone(),
            a: self.b,
            b: self.a,
        }
    }

    fn sort_key(&self) -> (&LineId, Reverse<u32>, Reverse<u32>) {
        (&self.line, Reverse(self.a), Reverse(self.b))
    }
}

impl Ord for ArthurComponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for ArthurComponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ArthurComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a={},b={})", self.a, self.b)?;
        if !self.line.is_default() {
            write!(f, "@{}", self.line.label())?;
            if self.line.base_degree() != 1 {
                write!(f, ":{}", self.line.base_degree())?;
            }
        }
        Ok(())
    }
}

/// A non-empty multiset of components, kept sorted by (line, a desc, b desc).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArthurParameter {
    components: Vec<ArthurComponent>,
}

impl ArthurParameter {
    pub fn new(mut components: Vec<ArthurComponent>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyParameter);
        }
        components.sort();
        Ok(ArthurParameter { components })
    }

    /// Parameter on the default line from `(a, b)` pairs.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Result<Self> {
        let comps = pairs
            .iter()
            .map(|&(a, b)| ArthurComponent::ab(a, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(comps)
    }

    pub fn components(&self) -> &[ArthurComponent] {
        &self.components
    }

    pub fn degree(&self) -> u64 {
        self.components.iter().map(ArthurComponent::degree).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    /// The Langlands parameter `phi_psi` as a multisegment.
    pub fn phi_of(&self) -> Multisegment {
        canonicalize(self.components.iter().flat_map(|c| c.segments().collect::<Vec<_>>()))
    }

    /// The multisegment naming `pi_psi`; it coincides with [`Self::phi_of`].
    pub fn pi_of(&self) -> Multisegment {
        self.phi_of()
    }

    /// The multiset `{p + q}` over both `SL(2)` weight strings.
    pub fn infinitesimal(&self) -> InfinitesimalParameter {
        let mut lambda = InfinitesimalParameter::default();
        for c in &self.components {
            let (a, b) = (c.a as i32, c.b as i32);
            for i in 0..a {
                for j in 0..b {
                    let p2 = -(a - 1) + 2 * i;
                    let q2 = -(b - 1) + 2 * j;
                    lambda.insert(&c.line, HalfInt::from_twice(p2 + q2), 1);
                }
            }
        }
        lambda
    }

    /// Swap the two `SL(2)` factors.
    pub fn psi_hat(&self) -> ArthurParameter {
        let mut comps: Vec<_> = self.components.iter().map(ArthurComponent::swapped).collect();
        comps.sort();
        ArthurParameter { components: comps }
    }

    /// The Levi `GL(m_1) x ... x GL(m_k)` cut out by the components, one
    /// factor per component in storage order.
    pub fn levi_of(&self) -> Vec<(u64, ArthurParameter)> {
        self.components
            .iter()
            .map(|c| {
                (
                    c.degree(),
                    ArthurParameter {
                        components: vec![c.clone()],
                    },
                )
            })
            .collect()
    }

    /// Group consecutive components (in storage order) into factors with the
    /// given degrees.
    pub fn levi_grouped(&self, degrees: &[u64]) -> Result<Vec<(u64, ArthurParameter)>> {
        let mut out = Vec::new();
        let mut rest = self.components.as_slice();
        for &m in degrees {
            let mut acc = 0u64;
            let mut take = 0;
            while acc < m && take < rest.len() {
                acc += rest[take].degree();
                take += 1;
            }
            if acc != m || take == 0 {
                return Err(Error::OutOfRange(format!(
                    "Levi degrees {degrees:?} do not group the components of {self}"
                )));
            }
            out.push((m, ArthurParameter::new(rest[..take].to_vec())?));
            rest = &rest[take..];
        }
        if !rest.is_empty() {
            return Err(Error::OutOfRange(format!(
                "Levi degrees {degrees:?} do not exhaust the components of {self}"
            )));
        }
        Ok(out)
    }
}

impl fmt::Display for ArthurParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multisegment::{concat, support};
    use proptest::prelude::*;

    fn psi(pairs: &[(u32, u32)]) -> ArthurParameter {
        ArthurParameter::from_pairs(pairs).unwrap()
    }

    #[test]
    fn phi_of_examples() {
        assert_eq!(psi(&[(2, 1)]).phi_of().to_string(), "[-1/2,1/2]");
        assert_eq!(psi(&[(1, 2)]).phi_of().to_string(), "[1/2]+[-1/2]");
        assert_eq!(psi(&[(1, 1)]).phi_of().to_string(), "[0]");
        assert_eq!(
            psi(&[(2, 1), (1, 2)]).pi_of().to_string(),
            "[-1/2,1/2]+[1/2]+[-1/2]"
        );
    }

    #[test]
    fn infinitesimal_examples() {
        assert_eq!(psi(&[(2, 1)]).infinitesimal().to_string(), "[1/2]+[-1/2]");
        assert_eq!(
            psi(&[(2, 1), (1, 2)]).infinitesimal().to_string(),
            "[1/2]+[1/2]+[-1/2]+[-1/2]"
        );
        assert_eq!(psi(&[(1, 1)]).infinitesimal().to_string(), "[0]");
    }

    #[test]
    fn psi_hat_examples() {
        assert_eq!(psi(&[(2, 1)]).psi_hat(), psi(&[(1, 2)]));
        assert_eq!(psi(&[(3, 3)]).psi_hat(), psi(&[(3, 3)]));
        assert_eq!(psi(&[(2, 1), (1, 2)]).psi_hat(), psi(&[(1, 2), (2, 1)]));
    }

    #[test]
    fn levi_examples() {
        let levi = psi(&[(1, 2), (2, 1)]).levi_of();
        assert_eq!(levi.len(), 2);
        assert_eq!(levi[0], (2, psi(&[(2, 1)])));
        assert_eq!(levi[1], (2, psi(&[(1, 2)])));
        assert_eq!(psi(&[(3, 2)]).levi_of(), vec![(6, psi(&[(3, 2)]))]);
        let levi = psi(&[(1, 1), (1, 1)]).levi_of();
        assert_eq!(levi.iter().map(|l| l.0).collect::<Vec<_>>(), vec![1, 1]);
    }

    #[test]
    fn levi_grouping() {
        let p = psi(&[(2, 1), (1, 2), (1, 1)]);
        let g = p.levi_grouped(&[4, 1]).unwrap();
        assert_eq!(g[0].1, psi(&[(2, 1), (1, 2)]));
        assert!(p.levi_grouped(&[3, 2]).is_err());
        assert!(p.levi_grouped(&[2, 2]).is_err());
    }

    #[test]
    fn rejects_empty_and_zero() {
        assert!(matches!(ArthurParameter::new(vec![]), Err(Error::EmptyParameter)));
        assert!(ArthurComponent::ab(0, 2).is_err());
    }

    fn arb_psi() -> impl Strategy<Value = ArthurParameter> {
        prop::collection::vec((1u32..4, 1u32..4), 1..4)
            .prop_map(|pairs| ArthurParameter::from_pairs(&pairs).unwrap())
    }

    proptest! {
        #[test]
        fn support_of_phi_is_lambda(p in arb_psi()) {
            prop_assert_eq!(support(&p.phi_of()), p.infinitesimal());
            prop_assert_eq!(p.phi_of().degree(), p.degree());
        }

        #[test]
        fn psi_hat_fixes_lambda(p in arb_psi()) {
            prop_assert_eq!(p.psi_hat().infinitesimal(), p.infinitesimal());
            prop_assert_eq!(p.psi_hat().psi_hat(), p.clone());
        }

        #[test]
        fn phi_is_concat_over_levi(p in arb_psi()) {
            let levi = p.levi_of();
            prop_assert_eq!(levi.iter().map(|l| l.0).sum::<u64>(), p.degree());
            let joined = levi
                .iter()
                .fold(Multisegment::empty(), |acc, (_, q)| concat(&acc, &q.phi_of()));
            prop_assert_eq!(joined, p.phi_of());
        }

        #[test]
        fn transpose_rectangle(a in 1u32..5, b in 1u32..5) {
            let p = psi(&[(a, b)]);
            let t = p.psi_hat().phi_of();
            prop_assert_eq!(p.phi_of().len(), b as usize);
            prop_assert_eq!(t.len(), a as usize);
            prop_assert_eq!(t.degree(), p.phi_of().degree());
        }
    }
}
