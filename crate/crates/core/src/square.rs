//! The endoscopy square: four routes to the pairing of `psi`'s packet
//! with every sheaf-side basis vector.
//!
//! * top: `<eta^Evs_psi, F>` on `V_lambda`, with `eta^Evs` from the Levi route.
//! * left: `<eta^Evs_{psi_M}, eps* F>` on the Levi, each factor computed on
//!   its own and tensored.
//! * bottom: `<eta_{psi_M}, eps* F>` on the Levi.
//! * right: `<eta_psi, F>` on `V_lambda`.

use std::fmt;

use crate::arthur::ArthurParameter;
use crate::error::Result;
use crate::kl::KlEngine;
use crate::ktheory::{ArthurData, BasisTag, KVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SheafBasis {
    Ic,
    Std,
}

impl fmt::Display for SheafBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SheafBasis::Ic => "IC",
            SheafBasis::Std => "std",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareRow {
    pub sheaf: String,
    pub basis: SheafBasis,
    pub top: i64,
    pub left: i64,
    pub bottom: i64,
    pub right: i64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareReport {
    pub psi: String,
    pub lambda: String,
    pub rows: Vec<SquareRow>,
}

impl SquareReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

/// `eta^Evs` of the Levi parameter, factor by factor.
fn levi_eta_evs(data: &ArthurData, engine: &KlEngine, max_points: usize) -> Result<Vec<i64>> {
    let mut coords = vec![1i64];
    for (_, factor) in &data.levi {
        let own = ArthurData::new(factor, engine, max_points)?.eta_evs_levi_route()?;
        coords = coords
            .iter()
            .flat_map(|&a| own.coords.iter().map(move |&b| a * b))
            .collect();
    }
    Ok(coords)
}

/// Evaluate all four corners for every IC and standard sheaf of `V_lambda`.
pub fn endoscopy_square_check(
    psi: &ArthurParameter,
    engine: &KlEngine,
    max_points: usize,
) -> Result<SquareReport> {
    let data = ArthurData::new(psi, engine, max_points)?;
    let g = data.group();
    let levi = &data.endoscopy.levi;
    let evs = data.eta_evs_levi_route()?;
    let eta = data.eta()?;
    let evs_m = levi.vector(BasisTag::IrredRep, levi_eta_evs(&data, engine, max_points)?)?;
    let eta_m = data.eta_levi()?;
    let eps_std = data.endoscopy.eps_star_std();
    let eps_sim = data.endoscopy.eps_star_simple()?;
    let space = &g.factors()[0];

    let mut rows = Vec::new();
    for basis in [SheafBasis::Ic, SheafBasis::Std] {
        for j in 0..g.len() {
            let (f, restricted): (KVector, KVector) = match basis {
                SheafBasis::Ic => {
                    let f = g.ic_unshifted(j);
                    let r = eps_sim.apply(&f)?;
                    (f, r)
                }
                SheafBasis::Std => {
                    let f = g.unit(BasisTag::StdSheaf, j);
                    let r = eps_std.apply(&f)?;
                    (f, r)
                }
            };
            let top = g.pairing(&evs, &f)?;
            let left = levi.pairing(&evs_m, &restricted)?;
            let bottom = levi.pairing(&eta_m, &restricted)?;
            let right = g.pairing(&eta, &f)?;
            rows.push(SquareRow {
                sheaf: format!("{basis}({})", space.orbit(j)),
                basis,
                top,
                left,
                bottom,
                right,
                pass: top == left && left == bottom && bottom == right,
            });
        }
    }
    Ok(SquareReport {
        psi: psi.to_string(),
        lambda: psi.infinitesimal().to_string(),
        rows,
    })
}
