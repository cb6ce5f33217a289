//! The shared derivation pipeline: group, coordinate transition, invariant
//! basis and equivariant maps, computed once and reused.

use crate::equivariants::{derive_equivariants, EquivariantSet};
use crate::error::DeriveError;
use crate::field::{AlgNum, Ext3};
use crate::group::KleinGroup;
use crate::invariants::{derive_invariants, InvariantBasis, SyzygyReport};
use crate::matrix::Mat;
use crate::transition::{build_transition_frame, Transition};
use std::sync::OnceLock;

pub struct Derivation {
    pub group: KleinGroup,
    pub transition: Transition,
    pub invariants: InvariantBasis,
    pub syzygy_report: SyzygyReport,
    pub maps: EquivariantSet,
}

impl Derivation {
    pub fn new() -> Result<Self, DeriveError> {
        let group = KleinGroup::build()?;
        // The C_7 acceptance leaves a twofold frame ambiguity (y2 ↦ −y2);
        // the displayed odd maps resolve it, so retry flipped on a g9
        // mismatch.
        for flip in [false, true] {
            let transition = build_transition_frame(&group, flip)?;
            let (invariants, syzygy_report) = derive_invariants(&transition.conics_y)?;
            let special: Vec<Vec<crate::field::Ext3>> = transition
                .orbits
                .points21
                .iter()
                .map(|p| p.point_y.clone())
                .chain(transition.orbits.points28.iter().map(|p| p.point_y.clone()))
                .collect();
            match derive_equivariants(&invariants, &special) {
                Ok(maps) => {
                    return Ok(Derivation { group, transition, invariants, syzygy_report, maps })
                }
                Err(DeriveError::GoldenMismatch { name: "g9" }) if !flip => continue,
                Err(e) => return Err(e),
            }
        }
        unreachable!("both frames exhausted")
    }

    /// Shared instance for tests and the CLI.
    pub fn shared() -> &'static Derivation {
        static D: OnceLock<Derivation> = OnceLock::new();
        D.get_or_init(|| Derivation::new().expect("derivation pipeline"))
    }

    /// Conjugates an x-coordinate matrix into the y-frame.
    pub fn y_matrix(&self, m: &Mat<AlgNum>) -> Mat<Ext3> {
        let me = Mat::new(
            m.rows,
            m.cols,
            m.data.iter().map(|c| Ext3::from_alg(c.clone())).collect(),
        );
        self.transition.s.mul(&me).mul(&self.transition.s_inv)
    }
}
