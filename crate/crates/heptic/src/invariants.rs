//! Derivation of the basic invariants in y-coordinates: the quartic F from
//! the conic squares, Φ from the Hessian, Ψ from the bordered Hessian, the
//! reflection-line product X from the Jacobian, and the X² relation.

use crate::calculus::{bordered_hessian, hessian_det, jacobian_det};
use crate::decompose::{basis_exponents, decompose_single, InvariantTriple};
use crate::error::DeriveError;
use crate::field::{AlgNum, Coeff};
use crate::poly::{vars_y, Monomial, PolyA, PolyE, VarSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use smallvec::SmallVec;

pub struct InvariantBasis {
    pub f: PolyA,
    pub phi: PolyA,
    pub psi: PolyA,
    pub x: PolyA,
    /// Σ C_k² = lambda_f · F.
    pub lambda_f: AlgNum,
    /// det H(F) = Φ / alpha_phi, etc.
    pub alpha_phi: AlgNum,
    pub alpha_psi: AlgNum,
    pub alpha_x: AlgNum,
    /// X² = Σ coeffs · F^a Φ^b Ψ^c over `basis_exponents(42)`.
    pub syzygy: Vec<AlgNum>,
}

impl InvariantBasis {
    pub fn triple(&self) -> InvariantTriple<'_> {
        InvariantTriple { f: &self.f, phi: &self.phi, psi: &self.psi }
    }

    /// The syzygy as a polynomial in formal variables (F, Ph, Ps).
    pub fn syzygy_poly(&self) -> PolyA {
        let vars = VarSet::new(&["F", "Ph", "Ps"]);
        let mut p = PolyA::zero(&vars);
        for (&(a, b, c), coeff) in basis_exponents(42).iter().zip(&self.syzygy) {
            p.add_term(
                Monomial(SmallVec::from_slice(&[a as u16, b as u16, c as u16])),
                coeff.clone(),
            );
        }
        p
    }
}

fn golden_mismatch(name: &'static str) -> DeriveError {
    DeriveError::GoldenMismatch { name }
}

/// Σ C_k² in y, content-normalized; must land in Q(θ) and equal the display.
pub fn derive_f(conics_y: &[PolyE]) -> Result<(PolyA, AlgNum), DeriveError> {
    let sum = conics_y
        .iter()
        .fold(PolyE::zero(&vars_y()), |acc, c| acc.add(&c.mul(c)));
    let sum = sum
        .to_alg()
        .ok_or_else(|| DeriveError::Other("Σ C² kept a √3 component".into()))?;
    let (f, lambda) = sum.content_normalize()?;
    if f != crate::goldens::invariant_f() {
        return Err(golden_mismatch("F"));
    }
    Ok((f, lambda))
}

/// Content-normalized Hessian determinant of F; cross-checked against Σ C_k³.
pub fn derive_phi(f: &PolyA, conics_y: &[PolyE]) -> Result<(PolyA, AlgNum), DeriveError> {
    let (phi, c_phi) = hessian_det(f).content_normalize()?;
    if phi != crate::goldens::invariant_phi() {
        return Err(golden_mismatch("Phi"));
    }
    let cubes = conics_y
        .iter()
        .fold(PolyE::zero(&vars_y()), |acc, c| acc.add(&c.mul(c).mul(c)));
    let cubes = cubes
        .to_alg()
        .ok_or_else(|| DeriveError::Other("Σ C³ kept a √3 component".into()))?;
    // Σ C³ = λ·Φ: pin λ from one coefficient, then demand global equality.
    let (lead_m, lead_c) = phi.leading().unwrap();
    let lambda = cubes.coeff(lead_m).mul(&lead_c.inv().unwrap());
    if cubes != phi.scale(&lambda) {
        return Err(DeriveError::IdentityFailed { name: "Σ C³ ∝ Φ" });
    }
    Ok((phi, c_phi.inv().unwrap()))
}

/// Content-normalized bordered Hessian of (F, Φ).
pub fn derive_psi(f: &PolyA, phi: &PolyA) -> Result<(PolyA, AlgNum), DeriveError> {
    let (psi, c_psi) = bordered_hessian(f, phi).content_normalize()?;
    if psi != crate::goldens::invariant_psi() {
        return Err(golden_mismatch("Psi"));
    }
    Ok((psi, c_psi.inv().unwrap()))
}

/// Content-normalized Jacobian determinant of (F, Φ, Ψ): the product of the
/// 21 reflection-line forms.
pub fn derive_x(f: &PolyA, phi: &PolyA, psi: &PolyA) -> Result<(PolyA, AlgNum), DeriveError> {
    let (x, c_x) = jacobian_det(f, phi, psi).content_normalize()?;
    if x != crate::goldens::invariant_x() {
        return Err(golden_mismatch("X"));
    }
    Ok((x, c_x.inv().unwrap()))
}

/// Comparison of a derived syzygy term with the printed relation.
pub struct SyzygyTermReport {
    pub exponents: (u32, u32, u32),
    pub derived_numerator: AlgNum,
    pub printed_numerator: Option<AlgNum>,
    pub agrees: bool,
}

pub struct SyzygyReport {
    pub terms: Vec<SyzygyTermReport>,
    /// The printed term that no degree-42 monomial can carry.
    pub flagged_printed_term: String,
    /// Whether the degree-repaired reading (F²ΦΨ²) matches the derivation.
    pub repair_matches: bool,
}

/// Derives X² = P(F, Φ, Ψ) exactly and compares against the printed display,
/// which contains one degree-inconsistent term.
pub fn derive_x2_relation(
    basis: &InvariantTriple,
    x: &PolyA,
) -> Result<(Vec<AlgNum>, SyzygyReport), DeriveError> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a5a);
    let coeffs = decompose_single(basis, 42, |pt| {
        let v = x.eval(pt)?;
        Ok(v.mul(&v))
    }, &mut rng)?;
    // Exact residual: X² − Σ c·F^aΦ^bΨ^c must vanish identically.
    let mut residual = x.mul(x);
    for (&(a, b, c), coeff) in basis_exponents(42).iter().zip(&coeffs) {
        if coeff.is_zero() {
            continue;
        }
        let term = basis.f.pow(a).mul(&basis.phi.pow(b)).mul(&basis.psi.pow(c)).scale(coeff);
        residual = residual.sub(&term);
    }
    if !residual.is_zero() {
        return Err(DeriveError::IdentityFailed { name: "X² syzygy residual" });
    }
    // Printed relation: numerators over 823543 = 7⁷ in (F, Ph, Ps).
    let printed = crate::goldens::syzygy_as_printed();
    let seven7 = AlgNum::from_int(823_543);
    let mut terms = Vec::new();
    let mut repair_matches = false;
    for (&(a, b, c), coeff) in basis_exponents(42).iter().zip(&coeffs) {
        let mono = Monomial(SmallVec::from_slice(&[a as u16, b as u16, c as u16]));
        let mut printed_num = printed.coeff(&mono);
        let derived_num = coeff.mul(&seven7);
        let mut agrees = !printed_num.is_zero() && printed_num == derived_num;
        if (a, b, c) == (2, 1, 2) {
            // The display prints this term as −66 F²ΦΨ (degree 28); the
            // degree-42 repair reads it as F²ΦΨ².
            printed_num = printed.coeff(&Monomial(SmallVec::from_slice(&[2, 1, 1])));
            agrees = printed_num == derived_num;
            repair_matches = agrees;
        }
        terms.push(SyzygyTermReport {
            exponents: (a, b, c),
            derived_numerator: derived_num,
            printed_numerator: (!printed_num.is_zero()).then_some(printed_num),
            agrees,
        });
    }
    let report = SyzygyReport {
        terms,
        flagged_printed_term: "-66 F^2 Φ Ψ (degree 28 ≠ 42; read as F^2 Φ Ψ^2)".to_string(),
        repair_matches,
    };
    Ok((coeffs, report))
}

pub fn derive_invariants(conics_y: &[PolyE]) -> Result<(InvariantBasis, SyzygyReport), DeriveError> {
    let (f, lambda_f) = derive_f(conics_y)?;
    let (phi, alpha_phi) = derive_phi(&f, conics_y)?;
    let (psi, alpha_psi) = derive_psi(&f, &phi)?;
    let (x, alpha_x) = derive_x(&f, &phi, &psi)?;
    let triple = InvariantTriple { f: &f, phi: &phi, psi: &psi };
    let (syzygy, report) = derive_x2_relation(&triple, &x)?;
    Ok((
        InvariantBasis { f, phi, psi, x, lambda_f, alpha_phi, alpha_psi, alpha_x, syzygy },
        report,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivation::Derivation;
    use crate::field::Ext3;
    use crate::matrix::Mat;
    use crate::poly::scalar_rat;

    fn ctx() -> &'static Derivation {
        Derivation::shared()
    }

    #[test]
    fn conic_square_content_is_the_displayed_b1() {
        // Σ C² = (7/48)(θ+5)·F pins the first resolvent coefficient.
        let d = ctx();
        let expect = scalar_rat(7, 48).mul(&AlgNum::of(5, 1));
        assert_eq!(d.invariants.lambda_f, expect);
    }

    #[test]
    fn displayed_coefficients_present() {
        let d = ctx();
        assert_eq!(d.invariants.f.coeff_of(&[4, 0, 0]), AlgNum::from_int(3));
        assert_eq!(d.invariants.phi.coeff_of(&[6, 0, 0]), AlgNum::from_int(26));
        assert_eq!(d.invariants.phi.coeff_of(&[0, 0, 6]), AlgNum::from_int(686));
        assert_eq!(d.invariants.psi.coeff_of(&[14, 0, 0]), AlgNum::from_int(4388));
        assert_eq!(d.invariants.psi.coeff_of(&[0, 14, 0]), AlgNum::from_int(-26244));
    }

    #[test]
    fn x_divisible_by_displayed_low_factors() {
        let d = ctx();
        let y2 = crate::poly::parse_poly("y2", &vars_y()).unwrap();
        let quad = crate::poly::parse_poly("3*y1^2 - y2^2", &vars_y()).unwrap();
        assert!(d.invariants.x.div_exact(&y2).is_ok());
        assert!(d.invariants.x.div_exact(&quad).is_ok());
    }

    #[test]
    fn invariance_under_all_generators() {
        let d = ctx();
        for (name, gy) in &d.transition.generators_y {
            let inv = gy.inverse().unwrap();
            let rows: Vec<Vec<Ext3>> =
                (0..3).map(|r| (0..3).map(|c| inv.at(r, c).clone()).collect()).collect();
            for (label, form) in
                [("F", &d.invariants.f), ("Phi", &d.invariants.phi), ("Psi", &d.invariants.psi)]
            {
                let img = form.to_ext().compose_linear(&rows);
                assert_eq!(img, form.to_ext(), "{label} not fixed by {name}");
            }
        }
    }

    #[test]
    fn x_is_kl1_invariant_and_flips_on_reflections() {
        let d = ctx();
        let x = d.invariants.x.to_ext();
        for (name, gy) in d.transition.generators_y.iter().take(3) {
            let inv = gy.inverse().unwrap();
            let rows: Vec<Vec<Ext3>> =
                (0..3).map(|r| (0..3).map(|c| inv.at(r, c).clone()).collect()).collect();
            assert_eq!(x.compose_linear(&rows), x, "X moved by {name}");
        }
        // A generating reflection: −Z for the first involution.
        let z_idx = d.transition.orbits.points21[0].involution;
        let z = &d.group.elements[z_idx].mat;
        let neg_z_y = {
            let gz = d.y_matrix(z);
            gz.neg()
        };
        let inv = neg_z_y.inverse().unwrap();
        let rows: Vec<Vec<Ext3>> =
            (0..3).map(|r| (0..3).map(|c| inv.at(r, c).clone()).collect()).collect();
        assert_eq!(x.compose_linear(&rows), x.neg(), "X should flip sign on -Z");
    }

    #[test]
    fn syzygy_matches_display_with_one_repair() {
        let d = ctx();
        let report = &d.syzygy_report;
        assert!(report.repair_matches);
        for term in &report.terms {
            assert!(
                term.agrees,
                "syzygy term {:?}: derived {} printed {:?}",
                term.exponents, term.derived_numerator, term.printed_numerator
            );
        }
        // Spot values from the display.
        let f9phi = report.terms.iter().find(|t| t.exponents == (9, 1, 0)).unwrap();
        assert_eq!(f9phi.derived_numerator, AlgNum::from_int(23328));
        let psi3 = report.terms.iter().find(|t| t.exponents == (0, 0, 3)).unwrap();
        assert_eq!(psi3.derived_numerator, AlgNum::from_int(-1));
    }

    #[test]
    fn degrees_are_4_6_14_21() {
        let d = ctx();
        assert_eq!(d.invariants.f.degree(), 4);
        assert_eq!(d.invariants.phi.degree(), 6);
        assert_eq!(d.invariants.psi.degree(), 14);
        assert_eq!(d.invariants.x.degree(), 21);
    }

    #[test]
    fn f_and_psi_vanish_on_56_points() {
        let d = ctx();
        for p in &d.transition.orbits.points56 {
            let fv = d.invariants.f.eval_c64(p);
            let sv = d.invariants.psi.eval_c64(p);
            assert!(fv.norm() < 1e-10, "F at a 56-point: {fv}");
            assert!(sv.norm() < 1e-10, "Ψ at a 56-point: {sv}");
        }
        // And the 24-point orbit lies on {F=0} ∩ {Φ=0}.
        for p in &d.transition.orbits.points24 {
            assert!(d.invariants.f.eval_c64(p).norm() < 1e-9);
            assert!(d.invariants.phi.eval_c64(p).norm() < 1e-8);
        }
        let _ = Mat::<Ext3>::identity(3);
    }
}
