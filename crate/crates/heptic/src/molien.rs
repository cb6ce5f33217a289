//! Extended Molien series for the lifted Klein groups: dimensions of the
//! invariant k-forms by polynomial degree, from the class-sum formula
//! (1/|G|) Σ |C_A| det(I + sA)/det(I − tA) expanded exactly.

use crate::error::DeriveError;
use crate::field::{rat_int, AlgNum, Coeff, Rat};
use crate::group::{char_coeffs, KleinGroup};
use crate::matrix::Mat;
use num_traits::Zero;

/// Coefficient table: `dims[l][k]` is dim Λ^G_{k,l} for exterior degree k ≤ 3
/// and polynomial degree l.
#[derive(Clone, Debug, PartialEq)]
pub struct MolienTable {
    pub dims: Vec<[Rat; 4]>,
}

impl MolienTable {
    pub fn max_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, k: usize, l: usize) -> &Rat {
        &self.dims[l][k]
    }

    /// Degrees with nonzero dimension in exterior degree k.
    pub fn support(&self, k: usize) -> Vec<usize> {
        (0..self.dims.len()).filter(|&l| !self.dims[l][k].is_zero()).collect()
    }
}

/// 1/(1 − c1 t + c2 t² − c3 t³) as a power series.
fn invert_char_series(c: &(AlgNum, AlgNum, AlgNum), max_deg: usize) -> Vec<AlgNum> {
    let mut b = Vec::with_capacity(max_deg + 1);
    b.push(AlgNum::one());
    for n in 1..=max_deg {
        let mut v = c.0.mul(&b[n - 1]);
        if n >= 2 {
            v = v.sub(&c.1.mul(&b[n - 2]));
        }
        if n >= 3 {
            v = v.add(&c.2.mul(&b[n - 3]));
        }
        b.push(v);
    }
    b
}

/// Class-sum Molien series for the group generated by the given class
/// partition (list of classes, each a list of matrices).
pub fn molien_from_classes(
    classes: &[Vec<Mat<AlgNum>>],
    max_deg: usize,
) -> Result<MolienTable, DeriveError> {
    let order: usize = classes.iter().map(Vec::len).sum();
    let mut acc = vec![[AlgNum::zero(), AlgNum::zero(), AlgNum::zero(), AlgNum::zero()];
        max_deg + 1];
    for class in classes {
        let rep = &class[0];
        let size = AlgNum::from_int(class.len() as i64);
        let c = char_coeffs(rep);
        let num = [AlgNum::one(), c.0.clone(), c.1.clone(), c.2.clone()];
        let den = invert_char_series(&c, max_deg);
        for (l, d) in den.iter().enumerate() {
            for k in 0..4 {
                acc[l][k] = acc[l][k].add(&num[k].mul(d).mul(&size));
            }
        }
    }
    let inv_order = AlgNum::from_int(order as i64).inv().unwrap();
    let mut dims = Vec::with_capacity(max_deg + 1);
    for row in acc {
        let mut out = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
        for (k, v) in row.into_iter().enumerate() {
            let v = v.mul(&inv_order);
            if !v.is_rational() {
                return Err(DeriveError::Other(
                    "Molien coefficient has a θ component".into(),
                ));
            }
            out[k] = v.a;
        }
        dims.push(out);
    }
    Ok(dims
        .iter()
        .all(|row| row.iter().all(|v| v.denom() == &num_bigint::BigInt::from(1)))
        .then(|| MolienTable { dims })
        .ok_or_else(|| DeriveError::Other("Molien coefficient not an integer".into()))?)
}

pub fn molien_kl1(group: &KleinGroup, max_deg: usize) -> Result<MolienTable, DeriveError> {
    let classes: Vec<Vec<Mat<AlgNum>>> = group
        .classes
        .iter()
        .map(|c| c.members.iter().map(|&i| group.elements[i].mat.clone()).collect())
        .collect();
    molien_from_classes(&classes, max_deg)
}

pub fn molien_kl2(group: &KleinGroup, max_deg: usize) -> Result<MolienTable, DeriveError> {
    molien_from_classes(&group.kl2_classes(), max_deg)
}

/// Expansion of the displayed closed form
/// (1+st³)(1+st⁵)(1+st¹³)/((1−t⁴)(1−t⁶)(1−t¹⁴)).
pub fn kl2_closed_form(max_deg: usize) -> MolienTable {
    // Numerator s-rows by t-exponent.
    let mut num = vec![[Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()]; max_deg + 1];
    num[0][0] = rat_int(1);
    for e in [3usize, 5, 13] {
        if e <= max_deg {
            num[e][1] = rat_int(1);
        }
    }
    for (a, b) in [(3usize, 5usize), (3, 13), (5, 13)] {
        if a + b <= max_deg {
            num[a + b][2] = rat_int(1);
        }
    }
    if 21 <= max_deg {
        num[21][3] = rat_int(1);
    }
    // Denominator series: partitions into parts {4, 6, 14}.
    let mut den = vec![Rat::zero(); max_deg + 1];
    den[0] = rat_int(1);
    for part in [4usize, 6, 14] {
        for l in part..=max_deg {
            let add = den[l - part].clone();
            den[l] += add;
        }
    }
    let mut dims = vec![[Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()]; max_deg + 1];
    for l in 0..=max_deg {
        for e in 0..=l {
            for k in 0..4 {
                let v = num[e][k].clone() * den[l - e].clone();
                dims[l][k] += v;
            }
        }
    }
    MolienTable { dims }
}

/// Quotient of the Kl1 series by the Kl2 0-form series, per s-degree; the
/// result should be a polynomial (finite support) in each exterior degree.
pub fn kl1_quotient(
    kl1: &MolienTable,
    kl2: &MolienTable,
    max_deg: usize,
) -> MolienTable {
    let b: Vec<Rat> = (0..=max_deg).map(|l| kl2.dims[l][0].clone()).collect();
    assert!(b[0] == rat_int(1));
    let mut dims = vec![[Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()]; max_deg + 1];
    for k in 0..4 {
        for n in 0..=max_deg {
            let mut q = kl1.dims[n][k].clone();
            for j in 1..=n {
                q -= b[j].clone() * dims[n - j][k].clone();
            }
            dims[n][k] = q;
        }
    }
    MolienTable { dims }
}

/// Formats a Molien table row by row for CLI output.
pub fn format_table(t: &MolienTable, label: &str) -> String {
    let mut out = format!("Molien series for {label} (rows: exterior degree k; entries: dim at t^l)\n");
    for k in 0..4 {
        let terms: Vec<String> = (0..t.dims.len())
            .filter(|&l| !t.dims[l][k].is_zero())
            .map(|l| {
                let c = &t.dims[l][k];
                if *c == rat_int(1) {
                    format!("t^{l}")
                } else {
                    format!("{c} t^{l}")
                }
            })
            .collect();
        out.push_str(&format!("  s^{k}: {}\n", terms.join(" + ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    fn group() -> &'static KleinGroup {
        static G: OnceLock<KleinGroup> = OnceLock::new();
        G.get_or_init(|| KleinGroup::build().expect("group builds"))
    }

    #[test]
    fn kl2_series_matches_closed_form_to_degree_30() {
        let g = group();
        let computed = molien_kl2(g, 30).unwrap();
        let closed = kl2_closed_form(30);
        assert_eq!(computed, closed);
    }

    #[test]
    fn kl2_zero_forms_have_displayed_low_degrees() {
        let g = group();
        let t = molien_kl2(g, 12).unwrap();
        let expect: &[(usize, i64)] =
            &[(0, 1), (4, 1), (6, 1), (8, 1), (10, 1), (12, 2)];
        for l in 0..=12 {
            let want = expect
                .iter()
                .find(|(deg, _)| *deg == l)
                .map(|(_, v)| rat_int(*v))
                .unwrap_or_else(|| rat_int(0));
            assert_eq!(t.dims[l][0], want, "degree {l}");
        }
    }

    #[test]
    fn kl1_quotient_exponent_sets() {
        let g = group();
        let kl1 = molien_kl1(g, 30).unwrap();
        let kl2 = molien_kl2(g, 30).unwrap();
        let q = kl1_quotient(&kl1, &kl2, 30);
        assert_eq!(q.support(0), vec![0, 21]);
        assert_eq!(q.support(1), vec![3, 5, 10, 12, 13, 20]);
        assert_eq!(q.support(2), vec![1, 8, 9, 11, 16, 18]);
        assert_eq!(q.support(3), vec![0, 21]);
        // All surviving coefficients are exactly 1.
        for k in 0..4 {
            for l in q.support(k) {
                assert_eq!(q.dims[l][k], rat_int(1));
            }
        }
    }

    #[test]
    fn kl1_zero_forms_gain_the_degree_21_relative_invariant() {
        let g = group();
        let t = molien_kl1(g, 22).unwrap();
        assert_eq!(t.dims[21][0], rat_int(1));
        assert_eq!(t.dims[22][0], rat_int(3));
    }
}
