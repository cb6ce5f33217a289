//! The 168-element linear lift of Klein's projective group, built over the
//! octahedral subgroup and the order-4 transformation Q, together with the
//! seven point-conics C_k and seven line-conics that the group permutes.

use crate::error::GroupError;
use crate::field::{rat, AlgNum, Coeff};
use crate::matrix::Mat;
use crate::poly::{vars_x, Monomial, PolyA, VarSet};
use smallvec::SmallVec;
use std::collections::HashMap;

/// The lines of the seven-point projective plane, 1-based labels.
pub const FANO_LINES: [[u8; 3]; 7] =
    [[1, 2, 4], [1, 3, 7], [1, 5, 6], [2, 3, 5], [2, 6, 7], [3, 4, 6], [4, 5, 7]];

pub fn is_fano_line(mut triple: [u8; 3]) -> bool {
    triple.sort_unstable();
    FANO_LINES.contains(&triple)
}

/// The third point on the line through two distinct points.
pub fn fano_third(a: u8, b: u8) -> u8 {
    for line in FANO_LINES {
        if line.contains(&a) && line.contains(&b) {
            return *line.iter().find(|&&p| p != a && p != b).unwrap();
        }
    }
    unreachable!("any two points lie on a line")
}

/// Lines through a given point.
pub fn fano_lines_through(p: u8) -> Vec<[u8; 3]> {
    FANO_LINES.iter().copied().filter(|l| l.contains(&p)).collect()
}

// ---------------------------------------------------------------------------
// Permutations of the seven conic labels
// ---------------------------------------------------------------------------

/// Permutation of {1..7}; `0[k-1]` is the image of label k.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Perm(pub [u8; 7]);

impl Perm {
    pub fn identity() -> Self {
        Perm([1, 2, 3, 4, 5, 6, 7])
    }

    pub fn apply(&self, k: u8) -> u8 {
        self.0[(k - 1) as usize]
    }

    /// `self` then `other` (left-to-right application).
    pub fn then(&self, other: &Perm) -> Perm {
        let mut out = [0u8; 7];
        for k in 1..=7u8 {
            out[(k - 1) as usize] = other.apply(self.apply(k));
        }
        Perm(out)
    }

    pub fn inverse(&self) -> Perm {
        let mut out = [0u8; 7];
        for k in 1..=7u8 {
            out[(self.apply(k) - 1) as usize] = k;
        }
        Perm(out)
    }

    pub fn fixed_points(&self) -> Vec<u8> {
        (1..=7).filter(|&k| self.apply(k) == k).collect()
    }

    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let mut seen = [false; 7];
        let mut out = Vec::new();
        for start in 1..=7u8 {
            if seen[(start - 1) as usize] {
                continue;
            }
            let mut cyc = vec![start];
            seen[(start - 1) as usize] = true;
            let mut k = self.apply(start);
            while k != start {
                seen[(k - 1) as usize] = true;
                cyc.push(k);
                k = self.apply(k);
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    /// Multiset of cycle lengths > 1, sorted.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: String = c.iter().map(|k| k.to_string()).collect();
                format!("({inner})")
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Conics
// ---------------------------------------------------------------------------

/// A quadratic form in three variables kept as its symmetric matrix; this
/// makes composition with a linear map an exact congruence.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Quadric(pub Mat<AlgNum>);

impl Quadric {
    /// From polynomial coefficients (x1², x2², x3², x1x2, x1x3, x2x3).
    pub fn from_coeffs(c: [AlgNum; 6]) -> Self {
        let half = AlgNum::from_rat(rat(1, 2));
        let [c11, c22, c33, c12, c13, c23] = c;
        let h12 = c12.mul(&half);
        let h13 = c13.mul(&half);
        let h23 = c23.mul(&half);
        Quadric(Mat::from_rows3([
            [c11, h12.clone(), h13.clone()],
            [h12, c22, h23.clone()],
            [h13, h23, c33],
        ]))
    }

    /// C ∘ M (substituting x -> Mx) as a congruence.
    pub fn compose(&self, m: &Mat<AlgNum>) -> Quadric {
        Quadric(m.transpose().mul(&self.0).mul(m))
    }

    pub fn add(&self, other: &Quadric) -> Quadric {
        let mut out = self.0.clone();
        for (a, b) in out.data.iter_mut().zip(&other.0.data) {
            *a = a.add(b);
        }
        Quadric(out)
    }

    pub fn scale(&self, c: &AlgNum) -> Quadric {
        Quadric(self.0.scale(c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.data.iter().all(Coeff::is_zero)
    }

    pub fn to_poly(&self, vars: &VarSet) -> PolyA {
        let mut p = PolyA::zero(vars);
        for i in 0..3 {
            for j in 0..3 {
                let mut m = Monomial::zero(vars.len());
                m.0[i] += 1;
                m.0[j] += 1;
                p.add_term(m, self.0.at(i, j).clone());
            }
        }
        p
    }

    pub fn eval(&self, x: &[AlgNum]) -> AlgNum {
        let v = self.0.mul_vec(x);
        x.iter().zip(&v).fold(AlgNum::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
    }
}

/// The seven point-conics and the seven line-conics C_a + C_b + C_c.
#[derive(Clone)]
pub struct ConicSystem {
    pub points: Vec<Quadric>,
    /// Indexed like `FANO_LINES`.
    pub lines: Vec<Quadric>,
}

impl ConicSystem {
    pub fn point_polys(&self, vars: &VarSet) -> Vec<PolyA> {
        self.points.iter().map(|q| q.to_poly(vars)).collect()
    }

    pub fn line_polys(&self, vars: &VarSet) -> Vec<PolyA> {
        self.lines.iter().map(|q| q.to_poly(vars)).collect()
    }
}

fn an(a: i64, b: i64) -> AlgNum {
    AlgNum::of(a, b)
}

fn anq(a: i64, b: i64, den: i64) -> AlgNum {
    AlgNum::new(rat(a, den), rat(b, den))
}

/// The displayed C_1..C_7 in x-coordinates.
pub fn build_conics() -> ConicSystem {
    let z = AlgNum::zero;
    // (1-θ)/4, (-2+θ)/2, (3+θ)/2 recur throughout.
    let d = || anq(1, -1, 4);
    let e = || anq(-2, 1, 2);
    let f = || anq(3, 1, 2);
    let points = vec![
        Quadric::from_coeffs([d(), e(), d(), z(), f(), z()]),
        Quadric::from_coeffs([e(), d(), d(), z(), z(), f().neg()]),
        Quadric::from_coeffs([d(), e(), d(), z(), f().neg(), z()]),
        Quadric::from_coeffs([d(), d(), e(), f().neg(), z(), z()]),
        Quadric::from_coeffs([d(), d(), e(), f(), z(), z()]),
        Quadric::from_coeffs([e(), d(), d(), z(), z(), f()]),
        Quadric::from_coeffs([an(1, 0), an(1, 0), an(1, 0), z(), z(), z()]),
    ];
    let lines = FANO_LINES
        .iter()
        .map(|l| {
            let mut q = points[(l[0] - 1) as usize].clone();
            q = q.add(&points[(l[1] - 1) as usize]);
            q.add(&points[(l[2] - 1) as usize])
        })
        .collect();
    ConicSystem { points, lines }
}

// ---------------------------------------------------------------------------
// Group elements and closure
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct GroupElement {
    pub mat: Mat<AlgNum>,
    pub perm: Perm,
}

impl GroupElement {
    /// Multiplicative order of the matrix.
    pub fn order(&self) -> usize {
        let id = Mat::identity(3);
        let mut p = self.mat.clone();
        for n in 1..=24 {
            if p == id {
                return n;
            }
            p = p.mul(&self.mat);
        }
        panic!("element order exceeds 24, not in a 168-element group")
    }
}

/// Finds the label permutation induced by M on the conics: perm(k) is the j
/// with C_j = C_k ∘ M, so that C_{perm(k)} ∘ M⁻¹ = C_k with no character.
pub fn conic_perm(conics: &ConicSystem, m: &Mat<AlgNum>) -> Result<Perm, GroupError> {
    let mut out = [0u8; 7];
    for k in 0..7 {
        let img = conics.points[k].compose(m);
        let j = conics
            .points
            .iter()
            .position(|c| *c == img)
            .ok_or(GroupError::ConicActionBroken)?;
        out[k] = (j + 1) as u8;
    }
    Ok(Perm(out))
}

fn mat3(entries: [[AlgNum; 3]; 3]) -> Mat<AlgNum> {
    Mat::from_rows3(entries)
}

fn imat(entries: [[i64; 3]; 3]) -> Mat<AlgNum> {
    mat3(entries.map(|row| row.map(|v| AlgNum::from_int(v))))
}

/// The fourteen displayed generators with their labels.
pub fn generator_matrices() -> Vec<(&'static str, Mat<AlgNum>)> {
    let h = |a: i64, b: i64| anq(a, b, 2);
    vec![
        ("E1", imat([[0, 0, 1], [0, -1, 0], [1, 0, 0]])),
        // The E2 display drops a sign: as printed it has det -1 and moves
        // conic 2. The order-2 edge rotation fixing conic 2 is this one.
        ("E2", imat([[-1, 0, 0], [0, 0, -1], [0, -1, 0]])),
        ("E3", imat([[0, 0, -1], [0, -1, 0], [-1, 0, 0]])),
        ("E4", imat([[0, -1, 0], [-1, 0, 0], [0, 0, -1]])),
        ("E5", imat([[0, 1, 0], [1, 0, 0], [0, 0, -1]])),
        ("E6", imat([[-1, 0, 0], [0, 0, 1], [0, 1, 0]])),
        ("F1236", imat([[0, -1, 0], [1, 0, 0], [0, 0, 1]])),
        ("F1435", imat([[1, 0, 0], [0, 0, 1], [0, -1, 0]])),
        ("F2465", imat([[0, 0, -1], [0, 1, 0], [1, 0, 0]])),
        ("V124", imat([[0, 0, 1], [-1, 0, 0], [0, -1, 0]])),
        ("V156", imat([[0, 1, 0], [0, 0, 1], [1, 0, 0]])),
        ("V235", imat([[0, 1, 0], [0, 0, -1], [-1, 0, 0]])),
        ("V346", imat([[0, -1, 0], [0, 0, 1], [-1, 0, 0]])),
        (
            "Q",
            mat3([
                [h(1, 0), h(1, 0), h(0, -1)],
                [h(1, 0), h(1, 0), h(0, 1)],
                [h(1, -1), h(-1, 1), h(0, 0)],
            ]),
        ),
    ]
}

#[derive(Clone, Debug)]
pub struct ConjClass {
    pub members: Vec<usize>,
    pub rep: usize,
    pub cycle_type: Vec<usize>,
}

/// The closed 168-element lift with its conic action and class data.
pub struct KleinGroup {
    pub elements: Vec<GroupElement>,
    /// Generator name -> index into `elements`.
    pub generators: Vec<(String, usize)>,
    pub conics: ConicSystem,
    pub classes: Vec<ConjClass>,
    index: HashMap<Vec<AlgNum>, usize>,
}

const CLOSURE_BOUND: usize = 1000;

impl KleinGroup {
    pub fn build() -> Result<Self, GroupError> {
        let conics = build_conics();
        let gens = generator_matrices();
        let mut elements: Vec<GroupElement> = Vec::new();
        let mut index: HashMap<Vec<AlgNum>, usize> = HashMap::new();
        let mut push = |mat: Mat<AlgNum>,
                        perm: Perm,
                        elements: &mut Vec<GroupElement>,
                        index: &mut HashMap<Vec<AlgNum>, usize>|
         -> usize {
            if let Some(&i) = index.get(&mat.data) {
                return i;
            }
            let i = elements.len();
            index.insert(mat.data.clone(), i);
            elements.push(GroupElement { mat, perm });
            i
        };
        push(Mat::identity(3), Perm::identity(), &mut elements, &mut index);
        let mut generators = Vec::new();
        for (name, mat) in &gens {
            let perm = conic_perm(&conics, mat)?;
            let i = push(mat.clone(), perm, &mut elements, &mut index);
            generators.push((name.to_string(), i));
        }
        // Breadth-first closure under right multiplication by generators.
        let mut frontier: Vec<usize> = (0..elements.len()).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &ei in &frontier {
                for (_, gi) in &generators {
                    let prod = elements[ei].mat.mul(&elements[*gi].mat);
                    if index.contains_key(&prod.data) {
                        continue;
                    }
                    let perm = elements[ei].perm.then(&elements[*gi].perm);
                    let i = push(prod, perm, &mut elements, &mut index);
                    next.push(i);
                    if elements.len() > CLOSURE_BOUND {
                        return Err(GroupError::ClosureBound(CLOSURE_BOUND));
                    }
                }
            }
            frontier = next;
        }
        let classes = conjugacy_classes(&elements, &index);
        Ok(KleinGroup { elements, generators, conics, classes, index })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element_index(&self, mat: &Mat<AlgNum>) -> Option<usize> {
        self.index.get(&mat.data).copied()
    }

    pub fn generator(&self, name: &str) -> &GroupElement {
        let idx = self
            .generators
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, i)| *i)
            .expect("unknown generator");
        &self.elements[idx]
    }

    /// Matrices of Kl2 = Kl1 ∪ −Kl1.
    pub fn kl2_matrices(&self) -> Vec<Mat<AlgNum>> {
        let mut out: Vec<Mat<AlgNum>> = self.elements.iter().map(|e| e.mat.clone()).collect();
        out.extend(self.elements.iter().map(|e| e.mat.neg()));
        out
    }

    /// Elements whose label permutation fixes `label` (an octahedral
    /// stabilizer; 24 elements).
    pub fn stabilizer_of_label(&self, label: u8) -> Vec<usize> {
        (0..self.elements.len())
            .filter(|&i| self.elements[i].perm.apply(label) == label)
            .collect()
    }

    /// Class partition of the 336-element reflection group Kl2.
    pub fn kl2_classes(&self) -> Vec<Vec<Mat<AlgNum>>> {
        let mats = self.kl2_matrices();
        partition_by_conjugacy(&mats)
    }
}

fn conjugacy_classes(
    elements: &[GroupElement],
    index: &HashMap<Vec<AlgNum>, usize>,
) -> Vec<ConjClass> {
    let n = elements.len();
    let inverses: Vec<usize> = (0..n)
        .map(|i| {
            let inv = elements[i].mat.inverse().expect("group element invertible");
            *index.get(&inv.data).expect("inverse stays in the closed group")
        })
        .collect();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for i in 0..n {
        if assigned[i] {
            continue;
        }
        let mut members = Vec::new();
        for h in 0..n {
            let conj = elements[h].mat.mul(&elements[i].mat).mul(&elements[inverses[h]].mat);
            let j = *index.get(&conj.data).expect("conjugate stays in the group");
            if !assigned[j] {
                assigned[j] = true;
                members.push(j);
            }
        }
        members.sort_unstable();
        classes.push(ConjClass { members: members.clone(), rep: i, cycle_type: elements[i].perm.cycle_type() });
    }
    classes.sort_by_key(|c| (c.members.len(), c.cycle_type.clone()));
    classes
}

/// Conjugacy partition of an arbitrary finite matrix set closed under the
/// group operation.
fn partition_by_conjugacy(mats: &[Mat<AlgNum>]) -> Vec<Vec<Mat<AlgNum>>> {
    let index: HashMap<Vec<AlgNum>, usize> =
        mats.iter().enumerate().map(|(i, m)| (m.data.clone(), i)).collect();
    let inverses: Vec<Mat<AlgNum>> = mats.iter().map(|m| m.inverse().unwrap()).collect();
    let mut assigned = vec![false; mats.len()];
    let mut classes = Vec::new();
    for i in 0..mats.len() {
        if assigned[i] {
            continue;
        }
        let mut members = Vec::new();
        for h in 0..mats.len() {
            let conj = mats[h].mul(&mats[i]).mul(&inverses[h]);
            let j = *index.get(&conj.data).expect("conjugate in set");
            if !assigned[j] {
                assigned[j] = true;
                members.push(mats[j].clone());
            }
        }
        classes.push(members);
    }
    classes.sort_by_key(|c| c.len());
    classes
}

/// Trace-derived characteristic data: det(I + sA) = 1 + c1 s + c2 s² + c3 s³.
pub fn char_coeffs(m: &Mat<AlgNum>) -> (AlgNum, AlgNum, AlgNum) {
    let c1 = m.at(0, 0).add(m.at(1, 1)).add(m.at(2, 2));
    let minor = |i: usize, j: usize| -> AlgNum {
        m.at(i, i).mul(m.at(j, j)).sub(&m.at(i, j).mul(m.at(j, i)))
    };
    let c2 = minor(0, 1).add(&minor(0, 2)).add(&minor(1, 2));
    let c3 = m.det();
    (c1, c2, c3)
}

pub fn projective_normalize(v: &[AlgNum]) -> Vec<AlgNum> {
    let last = v.iter().rposition(|c| !c.is_zero()).expect("nonzero vector");
    let inv = v[last].inv().unwrap();
    v.iter().map(|c| c.mul(&inv)).collect()
}

/// Kernel of (M − λI), expected one-dimensional; normalized so the last
/// nonzero coordinate is 1.
pub fn eigenvector_for<K: Coeff>(m: &Mat<K>, lambda: &K) -> Option<Vec<K>> {
    let mut shifted = m.clone();
    for i in 0..3 {
        *shifted.at_mut(i, i) = shifted.at(i, i).sub(lambda);
    }
    let ns = shifted.nullspace();
    if ns.len() != 1 {
        return None;
    }
    let v = &ns[0];
    let last = v.iter().rposition(|c| !c.is_zero())?;
    let inv = v[last].inv().unwrap();
    Some(v.iter().map(|c| c.mul(&inv)).collect())
}

/// Left eigenvector: the linear form ℓ with ℓ(Mx) = λℓ(x).
pub fn left_eigenvector<K: Coeff>(m: &Mat<K>, lambda: &K) -> Option<Vec<K>> {
    eigenvector_for(&m.transpose(), lambda)
}

pub fn linear_form_poly(vars: &VarSet, coeffs: &[AlgNum]) -> PolyA {
    let mut p = PolyA::zero(vars);
    for (i, c) in coeffs.iter().enumerate() {
        p.add_term(Monomial(SmallVec::from_slice(&{
            let mut e = vec![0u16; vars.len()];
            e[i] = 1;
            e
        })), c.clone());
    }
    p
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
    fn conic_sum_vanishes() {
        let c = build_conics();
        let total = c.points.iter().fold(
            Quadric(Mat::zero(3, 3)),
            |acc, q| acc.add(q),
        );
        assert!(total.is_zero());
    }

    #[test]
    fn line_conic_137_matches_display() {
        let c = build_conics();
        let line137 = &c.lines[1]; // FANO_LINES[1] = [1,3,7]
        let expect = Quadric::from_coeffs([
            anq(3, -1, 2),
            an(-1, 1),
            anq(3, -1, 2),
            AlgNum::zero(),
            AlgNum::zero(),
            AlgNum::zero(),
        ]);
        assert_eq!(line137, &expect);
    }

    #[test]
    fn q_has_det_one_and_order_four() {
        let gens = generator_matrices();
        let q = &gens.iter().find(|(n, _)| *n == "Q").unwrap().1;
        assert_eq!(q.det(), AlgNum::one());
        let e = GroupElement { mat: q.clone(), perm: Perm::identity() };
        assert_eq!(e.order(), 4);
    }

    #[test]
    fn all_generators_det_one_with_simple_conic_action() {
        let c = build_conics();
        for (name, m) in generator_matrices() {
            assert_eq!(m.det(), AlgNum::one(), "{name} not in SL3");
            conic_perm(&c, &m).unwrap_or_else(|_| panic!("{name} breaks the conic action"));
        }
    }

    #[test]
    fn e1q_has_order_seven_and_the_displayed_cycle() {
        let g = group();
        let e1 = g.generator("E1");
        let q = g.generator("Q");
        let prod = e1.mat.mul(&q.mat);
        let perm = conic_perm(&g.conics, &prod).unwrap();
        let el = GroupElement { mat: prod, perm };
        assert_eq!(el.order(), 7);
        // The displayed cycle composes the two factor actions right-factor
        // first (Q's action, then E1's).
        let composed = q.perm.then(&e1.perm);
        assert_eq!(composed.cycle_string(), "(1357246)");
        assert_eq!(el.perm, e1.perm.then(&q.perm));
    }

    #[test]
    fn closure_has_order_168() {
        assert_eq!(group().order(), 168);
    }

    #[test]
    fn identity_is_unique_lift_of_identity() {
        // The only element acting trivially on the conics with scalar matrix
        // is the identity itself.
        let g = group();
        let scalars: Vec<_> = g
            .elements
            .iter()
            .filter(|e| {
                let m = &e.mat;
                m.at(0, 1).is_zero()
                    && m.at(0, 2).is_zero()
                    && m.at(1, 0).is_zero()
                    && m.at(1, 2).is_zero()
                    && m.at(2, 0).is_zero()
                    && m.at(2, 1).is_zero()
                    && m.at(0, 0) == m.at(1, 1)
                    && m.at(1, 1) == m.at(2, 2)
            })
            .collect();
        assert_eq!(scalars.len(), 1);
        assert_eq!(scalars[0].mat, Mat::identity(3));
    }

    #[test]
    fn class_sizes_match_table() {
        let g = group();
        let sizes: Vec<usize> = g.classes.iter().map(|c| c.members.len()).collect();
        assert_eq!(sizes, vec![1, 21, 24, 24, 42, 56]);
        // Cycle structures per class.
        for class in &g.classes {
            let expect: Vec<usize> = match class.members.len() {
                1 => vec![],
                21 => vec![2, 2],
                42 => vec![2, 4],
                56 => vec![3, 3],
                24 => vec![7],
                _ => unreachable!(),
            };
            assert_eq!(class.cycle_type, expect);
        }
    }

    #[test]
    fn seven_cycle_classes_are_mutually_inverse() {
        let g = group();
        let sevens: Vec<&ConjClass> =
            g.classes.iter().filter(|c| c.members.len() == 24).collect();
        assert_eq!(sevens.len(), 2);
        let rep = &g.elements[sevens[0].rep].mat;
        let rep_inv = rep.inverse().unwrap();
        let inv_idx = g.element_index(&rep_inv).unwrap();
        assert!(sevens[1].members.contains(&inv_idx));
        assert!(!sevens[0].members.contains(&inv_idx));
    }

    #[test]
    fn perm_map_is_a_homomorphism_onto_transitive_s7_subgroup() {
        let g = group();
        // Spot-check the composition law on all generator pairs.
        for (_, i) in &g.generators {
            for (_, j) in &g.generators {
                let prod = g.elements[*i].mat.mul(&g.elements[*j].mat);
                let k = g.element_index(&prod).unwrap();
                let expect = g.elements[*i].perm.then(&g.elements[*j].perm);
                assert_eq!(g.elements[k].perm, expect);
            }
        }
        // Faithful: 168 distinct permutations, transitive on labels.
        let perms: std::collections::HashSet<_> =
            g.elements.iter().map(|e| e.perm.0).collect();
        assert_eq!(perms.len(), 168);
        for target in 1..=7u8 {
            assert!(g.elements.iter().any(|e| e.perm.apply(1) == target));
        }
    }

    #[test]
    fn full_closure_is_hash_verified() {
        // Product of any two elements is in the group (168² products).
        let g = group();
        for a in &g.elements {
            for b in &g.elements {
                let prod = a.mat.mul(&b.mat);
                assert!(g.element_index(&prod).is_some());
            }
        }
    }

    #[test]
    fn kl2_has_336_elements_and_central_negative_identity() {
        let g = group();
        let mats = g.kl2_matrices();
        let set: std::collections::HashSet<_> = mats.iter().map(|m| m.data.clone()).collect();
        assert_eq!(set.len(), 336);
        let classes = g.kl2_classes();
        let neg_id = Mat::<AlgNum>::identity(3).neg();
        let class_of_neg = classes.iter().find(|c| c.contains(&neg_id)).unwrap();
        assert_eq!(class_of_neg.len(), 1);
    }

    #[test]
    fn c7_fixed_by_e1() {
        let g = group();
        let e1 = g.generator("E1");
        assert_eq!(e1.perm.apply(7), 7);
        let c7 = &g.conics.points[6];
        let inv = e1.mat.inverse().unwrap();
        assert_eq!(&c7.compose(&inv), c7);
    }
}
