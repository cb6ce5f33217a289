//! Transcribed displays used as comparison targets for the derivations.
//! Kept as data files so derived output and transcription stay separate.

use crate::calculus::Vec3;
use crate::field::AlgNum;
use crate::poly::{parse_poly, vars_k, vars_y, PolyA, VarSet};

fn parse(text: &str, vars: &VarSet) -> PolyA {
    parse_poly(text, vars).expect("golden data parses")
}

pub fn invariant_f() -> PolyA {
    parse(include_str!("../data/invariant_f.txt"), &vars_y())
}

pub fn invariant_phi() -> PolyA {
    parse(include_str!("../data/invariant_phi.txt"), &vars_y())
}

pub fn invariant_psi() -> PolyA {
    parse(include_str!("../data/invariant_psi.txt"), &vars_y())
}

/// The displayed factorization of X: the product of these is the golden X.
pub fn invariant_x_factors() -> Vec<PolyA> {
    include_str!("../data/invariant_x_factors.txt")
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse(l, &vars_y()))
        .collect()
}

pub fn invariant_x() -> PolyA {
    invariant_x_factors()
        .into_iter()
        .reduce(|a, b| a.mul(&b))
        .expect("factor list nonempty")
}

/// The X² relation exactly as printed, as a polynomial in (F, Ph, Ps); the
/// 1/823543 prefactor is applied by the caller. One printed term is
/// degree-inconsistent; see the syzygy derivation report.
pub fn syzygy_as_printed() -> PolyA {
    parse(include_str!("../data/syzygy_x2.txt"), &VarSet::new(&["F", "Ph", "Ps"]))
}

fn map_from(files: [&str; 3]) -> Vec3<AlgNum> {
    let v = vars_y();
    [parse(files[0], &v), parse(files[1], &v), parse(files[2], &v)]
}

pub fn map_g9() -> Vec3<AlgNum> {
    map_from([
        include_str!("../data/map_g9_c1.txt"),
        include_str!("../data/map_g9_c2.txt"),
        include_str!("../data/map_g9_c3.txt"),
    ])
}

pub fn map_g11() -> Vec3<AlgNum> {
    map_from([
        include_str!("../data/map_g11_c1.txt"),
        include_str!("../data/map_g11_c2.txt"),
        include_str!("../data/map_g11_c3.txt"),
    ])
}

pub fn map_h() -> Vec3<AlgNum> {
    map_from([
        include_str!("../data/map_h_c1.txt"),
        include_str!("../data/map_h_c2.txt"),
        include_str!("../data/map_h_c3.txt"),
    ])
}

/// Numerator and denominator of the restricted line map over Q(√7),
/// as polynomials in (z, s) with s standing for √7 (s² reduces to 7).
pub fn h_tilde_raw() -> (PolyA, PolyA) {
    let vars = VarSet::new(&["z", "s"]);
    let mut lines = include_str!("../data/map_h_tilde.txt").lines();
    let num = parse(lines.next().unwrap(), &vars);
    let den = parse(lines.next().unwrap(), &vars);
    (num, den)
}

/// The eight displayed resolvent coefficients b_0..b_7 as polynomials in
/// (K1, K2) over Q(θ).
pub fn resolvent_coeffs() -> Vec<PolyA> {
    include_str!("../data/resolvent_rk.txt")
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse(l, &vars_k()))
        .collect()
}

/// Reference shape of C_7 in y-coordinates: y1² + y2² + (7/8)(1−3θ)y3².
pub fn c7_in_y() -> PolyA {
    parse("y1^2 + y2^2 + 7/8*y3^2 - 21/8*t*y3^2", &vars_y())
}
