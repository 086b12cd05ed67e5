use serde::Serialize;

use super::{bk_map, cr_map, tnk_to_wbar, tonks_target, verify_tonks, Diagonal, LevelwiseNerve, Psi, Transpose};
use crate::error::{Error, Result};
use crate::group::Tau;
use crate::sgroup::SimplicialGroup;
use crate::simplicial::check_simplicial_map;
use crate::wbar::Wbar;

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The outcome of one verification job.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Verdict {
    pub map: String,
    pub degrees_checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Verdict {
    pub fn from_result<T>(map: impl Into<String>, degrees_checked: usize, cap: Option<usize>, r: &Result<T>) -> Self {
        let (status, counterexample) = match r {
            Ok(_) => (Status::Pass, None),
            Err(e) => (Status::Fail, Some(e.to_string())),
        };
        Self { map: map.into(), degrees_checked, cap, status, counterexample }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// The maps of the zigzag
/// `N(τ,∫K) ≅ TΨ'N(τ,K) <- dΨ'N(τ,K) -> dN(τ,K) -> W̄(τ,K)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZigzagMap {
    Tonks,
    CegarraRemediosPsi,
    BousfieldKan,
    CegarraRemediosWbar,
}

impl ZigzagMap {
    pub const ALL: [ZigzagMap; 4] =
        [ZigzagMap::Tonks, ZigzagMap::CegarraRemediosPsi, ZigzagMap::BousfieldKan, ZigzagMap::CegarraRemediosWbar];

    pub fn name(self) -> &'static str {
        match self {
            ZigzagMap::Tonks => "tonks",
            ZigzagMap::CegarraRemediosPsi => "cegarra_remedios_psi",
            ZigzagMap::BousfieldKan => "bousfield_kan",
            ZigzagMap::CegarraRemediosWbar => "cegarra_remedios_wbar",
        }
    }
}

/// Verifies one map of the zigzag up to degree `max_l` with ordinals
/// capped at `[cap]`.
pub fn verify_zigzag_map<K: SimplicialGroup>(k: &K, tau: Tau, map: ZigzagMap, max_l: usize, cap: usize) -> Verdict {
    let nerve = LevelwiseNerve::with_tau(k, tau);
    let psi = Psi::new(&nerve, cap);
    match map {
        ZigzagMap::Tonks => {
            let r = verify_tonks(k, tau, max_l, cap);
            Verdict::from_result(map.name(), max_l, Some(cap), &r)
        }
        ZigzagMap::CegarraRemediosPsi => {
            let psi_t = Transpose(&psi);
            let target = tonks_target(k, tau, cap);
            let r = check_simplicial_map(&Diagonal(&psi_t), &target, |l, s| Ok(cr_map(&psi_t, l, s)), max_l);
            Verdict::from_result(map.name(), max_l, Some(cap), &r)
        }
        ZigzagMap::BousfieldKan => {
            let r = check_simplicial_map(&Diagonal(&psi), &Diagonal(&nerve), |l, s| Ok(bk_map(&nerve, l, s)), max_l);
            Verdict::from_result(map.name(), max_l, Some(cap), &r)
        }
        ZigzagMap::CegarraRemediosWbar => {
            let wbar = Wbar::with_tau(k, tau);
            let r = check_simplicial_map(
                &Diagonal(&nerve),
                &wbar,
                |l, x| {
                    let y = tnk_to_wbar(l, &cr_map(&nerve, l, x));
                    match wbar.membership_witness(l, &y) {
                        None => Ok(y),
                        Some(at) => Err(Error::FactorizationFailure(format!("{y:?} fails at l = {at}"))),
                    }
                },
                max_l,
            );
            Verdict::from_result(map.name(), max_l, None, &r)
        }
    }
}

/// Verifies every map of the zigzag.
pub fn verify_zigzag<K: SimplicialGroup>(k: &K, tau: Tau, max_l: usize, cap: usize) -> Vec<Verdict> {
    ZigzagMap::ALL.iter().map(|&m| verify_zigzag_map(k, tau, m, max_l, cap)).collect()
}
