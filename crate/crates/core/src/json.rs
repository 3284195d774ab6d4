//! Stable, versioned JSON views of the computed objects.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::geometry::OrbitSpace;
use crate::kl::MultiplicityMatrices;
use crate::ktheory::ArthurData;
use crate::linalg::IntMatrix;
use crate::multisegment::Segment;
use crate::square::SquareReport;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitJson {
    pub multisegment: String,
    pub dim: u64,
    pub ranks: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitSpaceJson {
    pub schema: u32,
    pub lambda: String,
    #[serde(rename = "dimV")]
    pub dim_v: u64,
    pub orbits: Vec<OrbitJson>,
}

impl OrbitSpaceJson {
    pub fn new(space: &OrbitSpace) -> Self {
        OrbitSpaceJson {
            schema: SCHEMA_VERSION,
            lambda: space.lambda().to_string(),
            dim_v: space.dim_v(),
            orbits: space
                .orbits()
                .iter()
                .map(|o| OrbitJson {
                    multisegment: o.multisegment.to_string(),
                    dim: o.dim,
                    ranks: o
                        .ranks
                        .iter()
                        .map(|((line, a, b), &r)| {
                            let seg = Segment::new(line.clone(), *a, *b).expect("rank keys are segments");
                            (seg.to_string(), r)
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatricesJson {
    pub schema: u32,
    pub lambda: String,
    pub orbits: Vec<String>,
    pub dims: Vec<u64>,
    pub m: Vec<Vec<i64>>,
    pub c: Vec<Vec<i64>>,
}

impl MatricesJson {
    pub fn new(space: &OrbitSpace, mats: &MultiplicityMatrices) -> Self {
        MatricesJson {
            schema: SCHEMA_VERSION,
            lambda: space.lambda().to_string(),
            orbits: space.orbits().iter().map(|o| o.multisegment.to_string()).collect(),
            dims: space.dims(),
            m: mats.m.to_rows(),
            c: mats.c.to_rows(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LiftJson {
    pub schema: u32,
    pub psi: String,
    pub levi: Vec<String>,
    pub levi_orbits: Vec<String>,
    pub orbits: Vec<String>,
    pub eps_star_std: Vec<Vec<i64>>,
    pub eps_star_simple: Vec<Vec<i64>>,
    pub lift_std: Vec<Vec<i64>>,
    pub lift_sim: Vec<Vec<i64>>,
}

impl LiftJson {
    pub fn new(data: &ArthurData) -> Result<Self> {
        let e = &data.endoscopy;
        let rows = |m: &IntMatrix| m.to_rows();
        Ok(LiftJson {
            schema: SCHEMA_VERSION,
            psi: data.psi.to_string(),
            levi: data.levi.iter().map(|(_, p)| p.to_string()).collect(),
            levi_orbits: (0..e.levi.len()).map(|i| e.levi.tuple_label(i)).collect(),
            orbits: (0..e.group.len()).map(|i| e.group.tuple_label(i)).collect(),
            eps_star_std: rows(&e.eps_star_std().matrix),
            eps_star_simple: rows(&e.eps_star_simple()?.matrix),
            lift_std: rows(&e.lift_std()?.matrix),
            lift_sim: rows(&e.lift_sim()?.matrix),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PacketJson {
    pub schema: u32,
    pub psi: String,
    pub lambda: String,
    pub pi_psi: String,
    pub d_psi: u64,
    pub eta_evs: Vec<i64>,
    pub abv_packet: Vec<String>,
}

impl PacketJson {
    pub fn new(data: &ArthurData) -> Result<Self> {
        Ok(PacketJson {
            schema: SCHEMA_VERSION,
            psi: data.psi.to_string(),
            lambda: data.psi.infinitesimal().to_string(),
            pi_psi: data.psi.pi_of().to_string(),
            d_psi: data.d_psi()?,
            eta_evs: data.eta_evs()?.coords,
            abv_packet: data.abv_packet()?.iter().map(|m| m.to_string()).collect(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SquareRowJson {
    #[serde(rename = "F")]
    pub sheaf: String,
    pub basis: String,
    pub top: i64,
    pub left: i64,
    pub bottom: i64,
    pub right: i64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportJson {
    pub schema: u32,
    pub psi: String,
    pub lambda: String,
    pub square: Vec<SquareRowJson>,
}

impl ReportJson {
    pub fn new(report: &SquareReport) -> Self {
        ReportJson {
            schema: SCHEMA_VERSION,
            psi: report.psi.clone(),
            lambda: report.lambda.clone(),
            square: report
                .rows
                .iter()
                .map(|r| SquareRowJson {
                    sheaf: r.sheaf.clone(),
                    basis: r.basis.to_string(),
                    top: r.top,
                    left: r.left,
                    bottom: r.bottom,
                    right: r.right,
                    pass: r.pass,
                })
                .collect(),
        }
    }
}
