//! Differential operators on polynomials: gradients, Hessian and Jacobian
//! determinants, the bordered Hessian, and the gradient cross product.
//!
//! Every operator differentiates with respect to a named 3-variable block,
//! which is the first three variables by convention (y or w); trailing
//! variables such as K1, K2 ride along as coefficients.

use crate::field::Coeff;
use crate::poly::Poly;

pub type Vec3<K> = [Poly<K>; 3];

pub fn gradient<K: Coeff>(p: &Poly<K>) -> Vec3<K> {
    [p.diff_idx(0), p.diff_idx(1), p.diff_idx(2)]
}

pub fn cross<K: Coeff>(a: &Vec3<K>, b: &Vec3<K>) -> Vec3<K> {
    [
        a[1].mul(&b[2]).sub(&a[2].mul(&b[1])),
        a[2].mul(&b[0]).sub(&a[0].mul(&b[2])),
        a[0].mul(&b[1]).sub(&a[1].mul(&b[0])),
    ]
}

pub fn dot<K: Coeff>(a: &Vec3<K>, b: &Vec3<K>) -> Poly<K> {
    a[0].mul(&b[0]).add(&a[1].mul(&b[1])).add(&a[2].mul(&b[2]))
}

/// ∇a × ∇b over the leading 3-variable block.
pub fn grad_cross<K: Coeff>(a: &Poly<K>, b: &Poly<K>) -> Vec3<K> {
    cross(&gradient(a), &gradient(b))
}

pub fn hessian<K: Coeff>(p: &Poly<K>) -> [[Poly<K>; 3]; 3] {
    let g = gradient(p);
    std::array::from_fn(|i| std::array::from_fn(|j| g[i].diff_idx(j)))
}

fn det3_of<K: Coeff>(m: &[[Poly<K>; 3]; 3]) -> Poly<K> {
    let c0 = m[1][1].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][1]));
    let c1 = m[1][0].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][0]));
    let c2 = m[1][0].mul(&m[2][1]).sub(&m[1][1].mul(&m[2][0]));
    m[0][0].mul(&c0).sub(&m[0][1].mul(&c1)).add(&m[0][2].mul(&c2))
}

pub fn hessian_det<K: Coeff>(p: &Poly<K>) -> Poly<K> {
    det3_of(&hessian(p))
}

/// det J(a, b, c) with rows ∇a, ∇b, ∇c.
pub fn jacobian_det<K: Coeff>(a: &Poly<K>, b: &Poly<K>, c: &Poly<K>) -> Poly<K> {
    det3_of(&[gradient(a), gradient(b), gradient(c)])
}

/// Bordered-Hessian determinant: H(a) bordered by ∇b with zero corner.
/// Expanding the 4×4 determinant along the border gives −∇bᵀ·adj(H(a))·∇b,
/// the homogeneous degree the construction is used for.
pub fn bordered_hessian<K: Coeff>(a: &Poly<K>, b: &Poly<K>) -> Poly<K> {
    let h = hessian(a);
    let g = gradient(b);
    // adjugate of the symmetric 3×3 Hessian
    let adj: [[Poly<K>; 3]; 3] = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            // cofactor C_ji for the adjugate; rows/cols of the 2x2 minor
            let (r0, r1) = match j {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let (c0, c1) = match i {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let minor = h[r0][c0].mul(&h[r1][c1]).sub(&h[r0][c1].mul(&h[r1][c0]));
            if (i + j) % 2 == 0 {
                minor
            } else {
                minor.neg()
            }
        })
    });
    let v: Vec3<K> = std::array::from_fn(|i| {
        adj[i][0].mul(&g[0]).add(&adj[i][1].mul(&g[1])).add(&adj[i][2].mul(&g[2]))
    });
    dot(&g, &v).neg()
}

/// det of a 3×3 polynomial matrix given by rows.
pub fn det3_rows<K: Coeff>(rows: &[[Poly<K>; 3]; 3]) -> Poly<K> {
    det3_of(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::AlgNum;
    use crate::poly::{parse_poly, vars_y, PolyA};

    fn p(s: &str) -> PolyA {
        parse_poly(s, &vars_y()).unwrap()
    }

    #[test]
    fn hessian_det_of_round_sphere() {
        let q = p("y1^2 + y2^2 + y3^2");
        assert_eq!(hessian_det(&q), p("8"));
    }

    #[test]
    fn grad_cross_of_coordinates() {
        let e3 = grad_cross(&p("y1"), &p("y2"));
        assert!(e3[0].is_zero());
        assert!(e3[1].is_zero());
        assert_eq!(e3[2], p("1"));
    }

    #[test]
    fn jacobian_of_coordinates_is_one() {
        let d = jacobian_det(&p("y1"), &p("y2"), &p("y3"));
        assert_eq!(d, p("1"));
    }

    #[test]
    fn bordered_hessian_quadric() {
        // a = y1^2+y2^2+y3^2: H = 2I, adj = 4I, so B(a,b) = -4|∇b|².
        let a = p("y1^2 + y2^2 + y3^2");
        let b = p("y1^3");
        let got = bordered_hessian(&a, &b);
        assert_eq!(got, p("9*y1^4").scale(&AlgNum::from_int(-4)));
    }
}
