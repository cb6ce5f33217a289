//! The equivariant maps: the cross-product maps in degrees 8, 16, 18, the
//! odd maps g9 and g11 obtained by dividing degree-30/32 combinations by X,
//! and the special degree-15 map h that is doubly critical on the 21-lines.

use crate::calculus::{det3_rows, gradient, grad_cross, Vec3};
use crate::error::DeriveError;
use crate::field::{AlgNum, Coeff, Ext3, Root7};
use crate::invariants::InvariantBasis;
use crate::matrix::Mat;
use crate::poly::{vars_y, Monomial, PolyA};
use num_complex::Complex64;

pub struct EquivariantSet {
    /// ∇F × ∇Φ, degree 8.
    pub psi_map: Vec3<AlgNum>,
    /// ∇F × ∇Ψ, degree 16.
    pub phi_map: Vec3<AlgNum>,
    /// ∇Φ × ∇Ψ, degree 18.
    pub f_map: Vec3<AlgNum>,
    pub g9: Vec3<AlgNum>,
    pub g11: Vec3<AlgNum>,
    pub h: Vec3<AlgNum>,
    /// (a1, a2, a3, a4) with h = (a1 F²Φ + a2 Ψ)ε + a3 Φ g9 + a4 F g11.
    pub h_coefficients: [AlgNum; 4],
    pub g9_kernel_dim: usize,
    pub g11_kernel_dim: usize,
    pub h_kernel_dim: usize,
    /// det J(h) = det_jh_scale · X².
    pub det_jh_scale: AlgNum,
    /// Per-component sign of each derived map relative to its printed
    /// display (+1 match, −1 negated component as printed).
    pub display_signs: DisplaySigns,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DisplaySigns {
    pub g9: [i8; 3],
    pub g11: [i8; 3],
    pub h: [i8; 3],
}

pub fn basic_equivariants(inv: &InvariantBasis) -> (Vec3<AlgNum>, Vec3<AlgNum>, Vec3<AlgNum>) {
    let psi_map = grad_cross(&inv.f, &inv.phi);
    let phi_map = grad_cross(&inv.f, &inv.psi);
    let f_map = grad_cross(&inv.phi, &inv.psi);
    (psi_map, phi_map, f_map)
}

fn scale_map(m: &Vec3<AlgNum>, c: &AlgNum) -> Vec3<AlgNum> {
    [m[0].scale(c), m[1].scale(c), m[2].scale(c)]
}

fn add_maps(a: &Vec3<AlgNum>, b: &Vec3<AlgNum>) -> Vec3<AlgNum> {
    [a[0].add(&b[0]), a[1].add(&b[1]), a[2].add(&b[2])]
}

fn mul_map(p: &PolyA, m: &Vec3<AlgNum>) -> Vec3<AlgNum> {
    [p.mul(&m[0]), p.mul(&m[1]), p.mul(&m[2])]
}

/// Solves for the coefficient line making Σ a_k · candidate_k divisible by X
/// componentwise: remainders mod X give a linear system on the a_k. Returns
/// the kernel basis.
fn divisibility_kernel(
    candidates: &[Vec3<AlgNum>],
    x: &PolyA,
) -> Result<Vec<Vec<AlgNum>>, DeriveError> {
    let mut rows: std::collections::BTreeMap<(usize, Monomial), Vec<AlgNum>> =
        std::collections::BTreeMap::new();
    let n = candidates.len();
    for (k, cand) in candidates.iter().enumerate() {
        for (comp, poly) in cand.iter().enumerate() {
            let (_, rem) = poly.div_rem(x)?;
            for (mono, coeff) in rem.terms {
                let row = rows
                    .entry((comp, mono))
                    .or_insert_with(|| vec![AlgNum::zero(); n]);
                row[k] = coeff;
            }
        }
    }
    let data: Vec<AlgNum> = rows.values().flat_map(|r| r.iter().cloned()).collect();
    let mat = Mat::new(rows.len(), n, data);
    Ok(mat.nullspace())
}

/// Pins the kernel combination by full agreement with the display's first
/// component, then records the per-component sign relative to the print.
/// The printed odd maps carry one component with a flipped sign (they fail
/// equivariance as printed); the derivation is the authority and the signs
/// are surfaced in the verify report.
fn pin_to_golden(
    kernel_maps: &[Vec3<AlgNum>],
    golden: &Vec3<AlgNum>,
    name: &'static str,
) -> Result<(Vec3<AlgNum>, [i8; 3]), DeriveError> {
    let n = kernel_maps.len();
    let mut monos: std::collections::BTreeSet<Monomial> =
        golden[0].terms.keys().cloned().collect();
    for m in kernel_maps {
        monos.extend(m[0].terms.keys().cloned());
    }
    let monos: Vec<Monomial> = monos.into_iter().collect();
    let mut a = Mat::zero(monos.len(), n);
    let mut b = Vec::with_capacity(monos.len());
    for (r, mono) in monos.iter().enumerate() {
        for (k, m) in kernel_maps.iter().enumerate() {
            *a.at_mut(r, k) = m[0].coeff(mono);
        }
        b.push(golden[0].coeff(mono));
    }
    let coeffs = a.solve(&b).map_err(|_| DeriveError::GoldenMismatch { name })?;
    let mut out = [PolyA::zero(&vars_y()), PolyA::zero(&vars_y()), PolyA::zero(&vars_y())];
    for (k, m) in kernel_maps.iter().enumerate() {
        out = add_maps(&out, &scale_map(m, &coeffs[k]));
    }
    let mut signs = [0i8; 3];
    for i in 0..3 {
        if out[i] == golden[i] {
            signs[i] = 1;
        } else if out[i] == golden[i].neg() {
            signs[i] = -1;
        } else {
            return Err(DeriveError::GoldenMismatch { name });
        }
    }
    Ok((out, signs))
}

/// g9 from the degree-30 combination (a1 F⁴Φ + a2 FΦ³ + a3 F²Ψ)ψ +
/// (a4 F²Φ + a5 Ψ)φ + (a6 F³ + a7 Φ²)f, made divisible by X.
pub fn derive_g9(
    inv: &InvariantBasis,
    psi_map: &Vec3<AlgNum>,
    phi_map: &Vec3<AlgNum>,
    f_map: &Vec3<AlgNum>,
) -> Result<(Vec3<AlgNum>, usize, [i8; 3]), DeriveError> {
    let f = &inv.f;
    let phi = &inv.phi;
    let psi = &inv.psi;
    let candidates = vec![
        mul_map(&f.pow(4).mul(phi), psi_map),
        mul_map(&f.mul(&phi.pow(3)), psi_map),
        mul_map(&f.pow(2).mul(psi), psi_map),
        mul_map(&f.pow(2).mul(phi), phi_map),
        mul_map(psi, phi_map),
        mul_map(&f.pow(3), f_map),
        mul_map(&phi.pow(2), f_map),
    ];
    let kernel_maps = kernel_quotients(&candidates, &inv.x, 2)?;
    let dim = kernel_maps.len();
    let (map, signs) = pin_to_golden(&kernel_maps, &crate::goldens::map_g9(), "g9")?;
    Ok((map, dim, signs))
}

/// Kernel vectors of the X-divisibility system, each divided through by X.
fn kernel_quotients(
    candidates: &[Vec3<AlgNum>],
    x: &PolyA,
    expected_dim: usize,
) -> Result<Vec<Vec3<AlgNum>>, DeriveError> {
    let kernel = divisibility_kernel(candidates, x)?;
    if kernel.len() != expected_dim {
        return Err(DeriveError::WrongKernelDimension {
            expected: expected_dim,
            got: kernel.len(),
        });
    }
    kernel
        .iter()
        .map(|coeffs| {
            let mut combo =
                [PolyA::zero(&vars_y()), PolyA::zero(&vars_y()), PolyA::zero(&vars_y())];
            for (k, cand) in candidates.iter().enumerate() {
                combo = add_maps(&combo, &scale_map(cand, &coeffs[k]));
            }
            Ok([
                combo[0].div_exact(x)?,
                combo[1].div_exact(x)?,
                combo[2].div_exact(x)?,
            ])
        })
        .collect()
}

/// g11 by the same process in degree 32.
pub fn derive_g11(
    inv: &InvariantBasis,
    psi_map: &Vec3<AlgNum>,
    phi_map: &Vec3<AlgNum>,
    f_map: &Vec3<AlgNum>,
) -> Result<(Vec3<AlgNum>, usize, [i8; 3]), DeriveError> {
    let f = &inv.f;
    let phi = &inv.phi;
    let psi = &inv.psi;
    let candidates = vec![
        mul_map(&f.pow(6), psi_map),
        mul_map(&f.pow(3).mul(&phi.pow(2)), psi_map),
        mul_map(&phi.pow(4), psi_map),
        mul_map(&f.mul(phi).mul(psi), psi_map),
        mul_map(&f.pow(4), phi_map),
        mul_map(&f.mul(&phi.pow(2)), phi_map),
        mul_map(&f.pow(2).mul(phi), f_map),
        mul_map(psi, f_map),
    ];
    let kernel_maps = kernel_quotients(&candidates, &inv.x, 2)?;
    let dim = kernel_maps.len();
    let (map, signs) = pin_to_golden(&kernel_maps, &crate::goldens::map_g11(), "g11")?;
    Ok((map, dim, signs))
}

/// The identity-map family member p·ε.
fn identity_member(p: &PolyA) -> Vec3<AlgNum> {
    let vars = vars_y();
    [
        p.mul(&PolyA::var(&vars, "y1")),
        p.mul(&PolyA::var(&vars, "y2")),
        p.mul(&PolyA::var(&vars, "y3")),
    ]
}

/// h from the degree-15 family (a1 F²Φ + a2 Ψ)ε + a3 Φ g9 + a4 F g11.
/// Superattraction conditions at labeled special points (image parallel to
/// the point, Jacobian columns parallel after crossing with it) accumulate
/// until the family cuts down to a single projective line; the
/// doubly-critical property det J(h) = c·X² is then verified exactly.
pub fn derive_h(
    inv: &InvariantBasis,
    g9: &Vec3<AlgNum>,
    g11: &Vec3<AlgNum>,
    special_points: &[Vec<Ext3>],
) -> Result<(Vec3<AlgNum>, [AlgNum; 4], usize, AlgNum, [i8; 3]), DeriveError> {
    let family: [Vec3<AlgNum>; 4] = [
        identity_member(&inv.f.pow(2).mul(&inv.phi)),
        identity_member(&inv.psi),
        mul_map(&inv.phi, g9),
        mul_map(&inv.f, g11),
    ];
    let family_ext: Vec<[crate::poly::PolyE; 3]> = family
        .iter()
        .map(|m| std::array::from_fn(|i| m[i].to_ext()))
        .collect();
    let cross_rows = |vals: [Ext3; 3], q: &[Ext3]| -> [Ext3; 3] {
        [
            vals[1].mul(&q[2]).sub(&vals[2].mul(&q[1])),
            vals[2].mul(&q[0]).sub(&vals[0].mul(&q[2])),
            vals[0].mul(&q[1]).sub(&vals[1].mul(&q[0])),
        ]
    };
    let mut rows: Vec<Vec<AlgNum>> = Vec::new();
    let mut kernel: Vec<Vec<AlgNum>> = Vec::new();
    let mut converged = false;
    for q in special_points.iter().take(8) {
        // Condition blocks for this point: m(q) × q = 0 and (J·e_j)(q) × q = 0.
        let mut blocks: Vec<[Vec<Ext3>; 4]> = Vec::new();
        let val_block: [Vec<Ext3>; 4] = std::array::from_fn(|k| {
            let m = &family_ext[k];
            let vals: [Ext3; 3] =
                std::array::from_fn(|i| m[i].eval(q).expect("dimension"));
            cross_rows(vals, q).to_vec()
        });
        blocks.push(val_block);
        for j in 0..3 {
            let col_block: [Vec<Ext3>; 4] = std::array::from_fn(|k| {
                let m = &family_ext[k];
                let vals: [Ext3; 3] =
                    std::array::from_fn(|i| m[i].diff_idx(j).eval(q).expect("dimension"));
                cross_rows(vals, q).to_vec()
            });
            blocks.push(col_block);
        }
        for block in blocks {
            for comp in 0..3 {
                // Split the Ext3 condition into its two Q(θ) components.
                let mut row_r = Vec::with_capacity(4);
                let mut row_s = Vec::with_capacity(4);
                for member_vals in &block {
                    row_r.push(member_vals[comp].r.clone());
                    row_s.push(member_vals[comp].s.clone());
                }
                if row_r.iter().any(|v| !v.is_zero()) {
                    rows.push(row_r);
                }
                if row_s.iter().any(|v| !v.is_zero()) {
                    rows.push(row_s);
                }
            }
        }
        let mat = Mat::new(rows.len(), 4, rows.iter().flatten().cloned().collect());
        kernel = mat.nullspace();
        if kernel.len() <= 1 {
            converged = true;
            break;
        }
    }
    if !converged || kernel.len() != 1 {
        return Err(DeriveError::WrongKernelDimension { expected: 1, got: kernel.len() });
    }
    // Normalize to the displayed coefficient vector: a1 = 827/14.
    let k = &kernel[0];
    if k[0].is_zero() {
        return Err(DeriveError::GoldenMismatch { name: "h coefficients" });
    }
    let a1 = crate::poly::scalar_rat(827, 14);
    let scale = a1.mul(&k[0].inv().unwrap());
    let coeffs: [AlgNum; 4] = std::array::from_fn(|i| k[i].mul(&scale));
    let expect = [
        a1.clone(),
        crate::poly::scalar_rat(99, 49),
        crate::poly::scalar_rat(-11, 9_882_516),
        crate::poly::scalar_rat(3, 1_647_086),
    ];
    if coeffs != expect {
        return Err(DeriveError::GoldenMismatch { name: "h coefficients" });
    }
    let mut h = [PolyA::zero(&vars_y()), PolyA::zero(&vars_y()), PolyA::zero(&vars_y())];
    for (member, c) in family.iter().zip(&coeffs) {
        h = add_maps(&h, &scale_map(member, c));
    }
    let golden = crate::goldens::map_h();
    let mut signs = [0i8; 3];
    for i in 0..3 {
        if h[i] == golden[i] {
            signs[i] = 1;
        } else if h[i] == golden[i].neg() {
            signs[i] = -1;
        } else {
            return Err(DeriveError::GoldenMismatch { name: "h" });
        }
    }
    // det J(h) = c · X², exactly.
    let det = det3_rows(&[gradient(&h[0]), gradient(&h[1]), gradient(&h[2])]);
    let x2 = inv.x.mul(&inv.x);
    let (lead_m, lead_c) = x2.leading().unwrap();
    let c = det.coeff(lead_m).mul(&lead_c.inv().unwrap());
    if det != x2.scale(&c) {
        return Err(DeriveError::IdentityFailed { name: "det J(h) = c X²" });
    }
    Ok((h, coeffs, kernel.len(), c, signs))
}

pub fn derive_equivariants(
    inv: &InvariantBasis,
    special_points: &[Vec<Ext3>],
) -> Result<EquivariantSet, DeriveError> {
    let (psi_map, phi_map, f_map) = basic_equivariants(inv);
    let (g9, g9_kernel_dim, g9_signs) = derive_g9(inv, &psi_map, &phi_map, &f_map)?;
    let (g11, g11_kernel_dim, g11_signs) = derive_g11(inv, &psi_map, &phi_map, &f_map)?;
    let (h, h_coefficients, h_kernel_dim, det_jh_scale, h_signs) =
        derive_h(inv, &g9, &g11, special_points)?;
    Ok(EquivariantSet {
        psi_map,
        phi_map,
        f_map,
        g9,
        g11,
        h,
        h_coefficients,
        g9_kernel_dim,
        g11_kernel_dim,
        h_kernel_dim,
        det_jh_scale,
        display_signs: DisplaySigns { g9: g9_signs, g11: g11_signs, h: h_signs },
    })
}

// ---------------------------------------------------------------------------
// The degree-36 combination and its identity with X·h
// ---------------------------------------------------------------------------

/// Invariant coefficients of the displayed degree-36 combination, as formal
/// (a, b, c) exponents of F^aΦ^bΨ^c with integer weights,
/// for the ψ-, φ- and f-parts respectively.
pub const H36_PSI_PART: [((u32, u32, u32), i64); 5] = [
    ((7, 0, 0), -34992),
    ((4, 2, 0), 6696),
    ((1, 4, 0), 1534),
    ((2, 1, 1), 15912),
    ((0, 0, 2), 693),
];
pub const H36_PHI_PART: [((u32, u32, u32), i64); 3] =
    [((5, 0, 0), 5832), ((2, 2, 0), -7290), ((0, 1, 1), -330)];
pub const H36_F_PART: [((u32, u32, u32), i64); 3] =
    [((3, 1, 0), 5796), ((0, 3, 0), -11), ((1, 0, 1), 216)];

fn invariant_combo(inv: &InvariantBasis, terms: &[((u32, u32, u32), i64)]) -> PolyA {
    let mut acc = PolyA::zero(&vars_y());
    for &((a, b, c), w) in terms {
        let t = inv
            .f
            .pow(a)
            .mul(&inv.phi.pow(b))
            .mul(&inv.psi.pow(c))
            .scale(&AlgNum::from_int(w));
        acc = acc.add(&t);
    }
    acc
}

/// Builds the displayed h_36 from ψ, φ, f and verifies h_36 = c·X·h as an
/// exact polynomial identity, returning c.
pub fn h36_identity_check(
    inv: &InvariantBasis,
    maps: &EquivariantSet,
) -> Result<AlgNum, DeriveError> {
    let h36 = add_maps(
        &mul_map(&invariant_combo(inv, &H36_PSI_PART), &maps.psi_map),
        &add_maps(
            &mul_map(&invariant_combo(inv, &H36_PHI_PART), &maps.phi_map),
            &mul_map(&invariant_combo(inv, &H36_F_PART), &maps.f_map),
        ),
    );
    let xh: Vec3<AlgNum> = [
        inv.x.mul(&maps.h[0]),
        inv.x.mul(&maps.h[1]),
        inv.x.mul(&maps.h[2]),
    ];
    let (lead_m, lead_c) = xh[0].leading().unwrap();
    let c = h36[0].coeff(lead_m).mul(&lead_c.inv().unwrap());
    for i in 0..3 {
        if h36[i] != xh[i].scale(&c) {
            return Err(DeriveError::IdentityFailed { name: "h_36 = c·X·h" });
        }
    }
    Ok(c)
}

// ---------------------------------------------------------------------------
// Numeric checks: equivariance, fixed points, superattraction
// ---------------------------------------------------------------------------

pub fn map_eval_c64(m: &Vec3<AlgNum>, p: &[Complex64; 3]) -> [Complex64; 3] {
    [m[0].eval_c64(p), m[1].eval_c64(p), m[2].eval_c64(p)]
}

/// Exact equivariance: m(g y) = g·m(y) as polynomials over Q(θ,√3).
pub fn is_equivariant(m: &Vec3<AlgNum>, g: &Mat<Ext3>) -> bool {
    let rows: Vec<Vec<Ext3>> =
        (0..3).map(|r| (0..3).map(|c| g.at(r, c).clone()).collect()).collect();
    let composed: Vec<crate::poly::PolyE> =
        m.iter().map(|p| p.to_ext().compose_linear(&rows)).collect();
    for i in 0..3 {
        let mut rhs = crate::poly::PolyE::zero(&vars_y());
        for j in 0..3 {
            rhs = rhs.add(&m[j].to_ext().scale(g.at(i, j)));
        }
        if composed[i] != rhs {
            return false;
        }
    }
    true
}

/// Spectral radius of the projective derivative at a fixed point, by central
/// finite differences in the chart normalizing the largest coordinate.
pub fn projective_jacobian_spectral_radius(
    m: &Vec3<AlgNum>,
    q: &[Complex64; 3],
    step: f64,
) -> f64 {
    let k = (0..3).max_by(|&i, &j| q[i].norm().total_cmp(&q[j].norm())).unwrap();
    let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
    let base: [Complex64; 3] = std::array::from_fn(|i| q[i] / q[k]);
    let chart = |p: &[Complex64; 3]| -> [Complex64; 2] {
        [p[others[0]] / p[k], p[others[1]] / p[k]]
    };
    let eval_chart = |u: [Complex64; 2]| -> [Complex64; 2] {
        let mut y = base;
        y[others[0]] += u[0];
        y[others[1]] += u[1];
        chart(&map_eval_c64(m, &y))
    };
    let h = Complex64::new(step, 0.0);
    let mut d = [[Complex64::new(0.0, 0.0); 2]; 2];
    for j in 0..2 {
        let mut up = [Complex64::new(0.0, 0.0); 2];
        up[j] = h;
        let mut dn = [Complex64::new(0.0, 0.0); 2];
        dn[j] = -h;
        let plus = eval_chart(up);
        let minus = eval_chart(dn);
        for i in 0..2 {
            d[i][j] = (plus[i] - minus[i]) / (2.0 * h);
        }
    }
    let tr = d[0][0] + d[1][1];
    let det = d[0][0] * d[1][1] - d[0][1] * d[1][0];
    let disc = (tr * tr - 4.0 * det).sqrt();
    let l1 = (tr + disc) / 2.0;
    let l2 = (tr - disc) / 2.0;
    l1.norm().max(l2.norm())
}

// ---------------------------------------------------------------------------
// The restricted line map
// ---------------------------------------------------------------------------

/// h restricted to a 21-line in the symmetrical line coordinate, as a
/// univariate rational map over Q(√7).
pub struct RestrictedMap {
    /// Coefficients by ascending degree.
    pub num: Vec<Root7>,
    pub den: Vec<Root7>,
}

impl RestrictedMap {
    pub fn from_display() -> Self {
        let (num_raw, den_raw) = crate::goldens::h_tilde_raw();
        let fold = |p: &PolyA| -> Vec<Root7> {
            // vars (z, s); reduce s² = 7 into the coefficient pair.
            let deg = p.terms.keys().map(|m| m.0[0]).max().unwrap_or(0);
            let mut out = vec![Root7::zero(); deg as usize + 1];
            for (m, c) in &p.terms {
                let (z, s) = (m.0[0] as usize, m.0[1]);
                assert!(c.is_rational(), "h̃ coefficients are rational in √7");
                let mut sevens = crate::field::Rat::from(num_bigint::BigInt::from(1));
                for _ in 0..(s / 2) {
                    sevens *= crate::field::rat_int(7);
                }
                let v = c.a.clone() * sevens;
                if s % 2 == 0 {
                    out[z] = out[z].add(&Root7 { a: v, b: crate::field::Rat::from(num_bigint::BigInt::from(0)) });
                } else {
                    out[z] = out[z].add(&Root7 { a: crate::field::rat_int(0), b: v });
                }
            }
            out
        };
        RestrictedMap { num: fold(&num_raw), den: fold(&den_raw) }
    }

    pub fn degree(&self) -> usize {
        self.num.len().max(self.den.len()) - 1
    }

    fn eval_poly(coeffs: &[Root7], z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            acc = acc * z + c.to_f64();
        }
        acc
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        Self::eval_poly(&self.num, z) / Self::eval_poly(&self.den, z)
    }

    /// Derivative of the rational map.
    pub fn deriv(&self, z: Complex64) -> Complex64 {
        let n = Self::eval_poly(&self.num, z);
        let d = Self::eval_poly(&self.den, z);
        let np = Self::eval_poly(&Self::diff(&self.num), z);
        let dp = Self::eval_poly(&Self::diff(&self.den), z);
        (np * d - n * dp) / (d * d)
    }

    fn diff(coeffs: &[Root7]) -> Vec<Root7> {
        coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul(&Root7::from_int(k as i64)))
            .collect()
    }

    /// num′·den − num·den′: its degree counts the critical points with
    /// multiplicity.
    pub fn wronskian(&self) -> Vec<Root7> {
        let np = Self::diff(&self.num);
        let dp = Self::diff(&self.den);
        let mul = |a: &[Root7], b: &[Root7]| -> Vec<Root7> {
            let mut out = vec![Root7::zero(); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] = out[i + j].add(&x.mul(y));
                }
            }
            out
        };
        let mut w = mul(&np, &self.den);
        let nd = mul(&self.num, &dp);
        if nd.len() > w.len() {
            w.resize(nd.len(), Root7::zero());
        }
        for (i, v) in nd.iter().enumerate() {
            w[i] = w[i].sub(v);
        }
        while w.last().is_some_and(Coeff::is_zero) {
            w.pop();
        }
        w
    }

    /// The eight superattracting fixed points in the symmetrical coordinate.
    pub fn special_points() -> [Complex64; 8] {
        use std::f64::consts::FRAC_PI_4;
        let unit = |k: f64| Complex64::from_polar(1.0, k * FRAC_PI_4);
        let s7 = crate::field::SQRT7;
        let r = 2.0_f64.sqrt() / (3.0 - s7);
        let i = 2.0_f64.sqrt() / (3.0 + s7);
        [
            unit(1.0),
            unit(3.0),
            unit(5.0),
            unit(7.0),
            Complex64::new(r, 0.0),
            Complex64::new(0.0, i),
            Complex64::new(-r, 0.0),
            Complex64::new(0.0, -i),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivation::Derivation;
    use crate::transition::chordal_c3;

    fn ctx() -> &'static Derivation {
        Derivation::shared()
    }

    #[test]
    fn basic_equivariant_degrees() {
        let d = ctx();
        assert_eq!(d.maps.psi_map[0].degree(), 8);
        assert_eq!(d.maps.phi_map[0].degree(), 16);
        assert_eq!(d.maps.f_map[0].degree(), 18);
        // ψ at a generic rational point is nonzero.
        let p = crate::poly::int_point(&[1, 2, 3]);
        assert!(d.maps.psi_map.iter().any(|c| !c.eval(&p).unwrap().is_zero()));
    }

    #[test]
    fn derived_maps_match_displays() {
        let d = ctx();
        assert_eq!(d.maps.g9[0].coeff_of(&[9, 0, 0]), AlgNum::from_int(27));
        assert_eq!(d.maps.g11[0].coeff_of(&[11, 0, 0]), AlgNum::from_int(-1334));
        assert_eq!(d.maps.h[0].coeff_of(&[15, 0, 0]), AlgNum::from_int(27 * 816));
        assert_eq!(d.maps.h[2].coeff_of(&[0, 0, 15]), AlgNum::from_int(105_413_504));
        // The derived maps agree with the prints componentwise up to the
        // recorded signs (the printed odd maps each carry one flipped
        // component and fail equivariance as printed).
        let signs = d.maps.display_signs;
        for i in 0..3 {
            let target = if signs.g9[i] == 1 {
                crate::goldens::map_g9()[i].clone()
            } else {
                crate::goldens::map_g9()[i].neg()
            };
            assert_eq!(d.maps.g9[i], target);
        }
        assert!(signs.g9.contains(&1));
        assert!(signs.g11.contains(&1));
        assert!(signs.h.contains(&1));
    }

    #[test]
    fn solution_space_dimensions() {
        // The odd maps are pinned modulo an identity-map multiple (Molien
        // 2t⁹ and 2t¹¹); the degree-15 family cuts down to a single line.
        let d = ctx();
        assert_eq!(d.maps.g9_kernel_dim, 2);
        assert_eq!(d.maps.g11_kernel_dim, 2);
        assert_eq!(d.maps.h_kernel_dim, 1);
    }

    #[test]
    fn h_has_real_coefficients() {
        let d = ctx();
        for comp in &d.maps.h {
            assert!(comp.terms.values().all(|c| c.is_rational()));
        }
    }

    #[test]
    fn equivariance_under_all_generators() {
        let d = ctx();
        use rayon::prelude::*;
        let maps: Vec<(&str, &Vec3<AlgNum>)> = vec![
            ("psi", &d.maps.psi_map),
            ("g9", &d.maps.g9),
            ("h", &d.maps.h),
        ];
        let gens = &d.transition.generators_y;
        let failures: Vec<String> = gens
            .par_iter()
            .flat_map(|(name, g)| {
                maps.iter()
                    .filter(|(_, m)| !is_equivariant(m, g))
                    .map(|(label, _)| format!("{label} under {name}"))
                    .collect::<Vec<_>>()
            })
            .collect();
        assert!(failures.is_empty(), "equivariance failures: {failures:?}");
    }

    #[test]
    fn h36_is_proportional_to_x_times_h() {
        let d = ctx();
        let c = h36_identity_check(&d.invariants, &d.maps).unwrap();
        assert!(!c.is_zero());
        // Spot-check the proportionality at a rational point via cross product.
        let p = crate::poly::int_point(&[2, -1, 3]);
        let h36_at = |i: usize| -> AlgNum {
            let combo = |terms: &[((u32, u32, u32), i64)], m: &Vec3<AlgNum>| -> AlgNum {
                let mut acc = AlgNum::zero();
                for &((a, b, c2), w) in terms {
                    let inv = &d.invariants;
                    let t = inv.f.eval(&p).unwrap();
                    let u = inv.phi.eval(&p).unwrap();
                    let v = inv.psi.eval(&p).unwrap();
                    let mut prod = AlgNum::from_int(w);
                    for _ in 0..a {
                        prod = prod.mul(&t);
                    }
                    for _ in 0..b {
                        prod = prod.mul(&u);
                    }
                    for _ in 0..c2 {
                        prod = prod.mul(&v);
                    }
                    acc = acc.add(&prod.mul(&m[i].eval(&p).unwrap()));
                }
                acc
            };
            combo(&H36_PSI_PART, &d.maps.psi_map)
                .add(&combo(&H36_PHI_PART, &d.maps.phi_map))
                .add(&combo(&H36_F_PART, &d.maps.f_map))
        };
        let xv = d.invariants.x.eval(&p).unwrap();
        let hx: Vec<AlgNum> =
            (0..3).map(|i| d.maps.h[i].eval(&p).unwrap().mul(&xv).mul(&c)).collect();
        for i in 0..3 {
            assert_eq!(h36_at(i), hx[i]);
        }
    }

    #[test]
    fn labeled_points_are_superattracting_fixed_points() {
        let d = ctx();
        for (_, point, label) in d.transition.orbits.labeled_points_y() {
            let q: [Complex64; 3] =
                [point[0].embed(), point[1].embed(), point[2].embed()];
            let img = map_eval_c64(&d.maps.h, &q);
            assert!(
                chordal_c3(&img, &q) < 1e-9,
                "{label} not fixed by h: moved {}",
                chordal_c3(&img, &q)
            );
            let sr = projective_jacobian_spectral_radius(&d.maps.h, &q, 1e-6);
            assert!(sr < 1e-10, "{label} spectral radius {sr}");
        }
    }

    #[test]
    fn h_preserves_21_lines() {
        let d = ctx();
        // Exact division on three lines, numeric on the rest.
        for (k, p21) in d.transition.orbits.points21.iter().enumerate() {
            let line = &p21.line_y;
            let lh = {
                let mut acc = crate::poly::PolyE::zero(&vars_y());
                for i in 0..3 {
                    acc = acc.add(&d.maps.h[i].to_ext().scale(&line[i]));
                }
                acc
            };
            if k < 3 {
                let mut lp = crate::poly::PolyE::zero(&vars_y());
                for i in 0..3 {
                    lp.add_term(Monomial::var(3, i), line[i].clone());
                }
                assert!(lh.div_exact(&lp).is_ok(), "{} line not preserved", p21.label);
            } else {
                // Sample a numeric point on the line and test L(h(y)) ≈ 0.
                let l: [Complex64; 3] =
                    [line[0].embed(), line[1].embed(), line[2].embed()];
                // Solve l·y = 0 with y = (1, t, 0) or (0, 1, t).
                let y = if l[1].norm() > 1e-9 {
                    [Complex64::new(1.0, 0.0), -l[0] / l[1], Complex64::new(0.0, 0.0)]
                } else {
                    [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), -l[1] / l[2]]
                };
                let img = map_eval_c64(&d.maps.h, &y);
                let val: Complex64 = (0..3).map(|i| l[i] * img[i]).sum();
                let scale: f64 = img.iter().map(|c| c.norm()).sum();
                assert!(val.norm() / scale < 1e-8, "{} line drift", p21.label);
            }
        }
    }

    #[test]
    fn restricted_map_fixed_points_and_critical_count() {
        let ht = RestrictedMap::from_display();
        assert_eq!(ht.degree(), 15);
        for z in RestrictedMap::special_points() {
            let img = ht.eval(z);
            assert!((img - z).norm() < 1e-12, "h̃ moves {z}: {img}");
            let dv = ht.deriv(z);
            assert!(dv.norm() < 1e-10, "h̃'({z}) = {dv}");
        }
        // 28 = 2·15 − 2 critical points with multiplicity.
        let w = ht.wronskian();
        assert_eq!(w.len() - 1, 28);
    }
}
