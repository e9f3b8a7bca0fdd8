//! Finite groups presented by their full element list, conjugacy class
//! data, and the 2x2 matrix groups SL_2(F_q) / PSL_2(F_q).

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::perm::PermGroup;

/// Order guard for class computations.
pub const CLASS_GUARD: usize = 10_000;

/// Anything that can hand over its multiplication table data.
pub trait FiniteGroup {
    type Elem: Clone + Eq + Ord + Hash + Debug;

    fn elements(&self) -> &[Self::Elem];
    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

/// A 2x2 matrix over F_q, row-major.
pub type Mat2 = [u64; 4];

/// SL_2(F_q), or its quotient PSL_2(F_q) with elements canonicalized to
/// min(g, -g).
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    q: u64,
    projective: bool,
    elems: Vec<Mat2>,
}

impl MatrixGroup {
    pub fn sl2(q: u64) -> Result<Self> {
        Self::build(q, false)
    }

    pub fn psl2(q: u64) -> Result<Self> {
        Self::build(q, true)
    }

    fn build(q: u64, projective: bool) -> Result<Self> {
        if q < 3 || q > 13 {
            return Err(Error::Unsupported(format!("SL2 over F_{q}")));
        }
        let mut elems = Vec::new();
        for a in 0..q {
            for b in 0..q {
                for c in 0..q {
                    for d in 0..q {
                        if (a * d % q + q - b * c % q) % q == 1 {
                            let m = [a, b, c, d];
                            if projective {
                                let canon = canonical_proj(&m, q);
                                if canon == m {
                                    elems.push(m);
                                } else {
                                    // the paired representative covers it
                                }
                            } else {
                                elems.push(m);
                            }
                        }
                    }
                }
            }
        }
        elems.sort();
        let expected = q * (q * q - 1) * if projective { 1 } else { 2 } / 2;
        if elems.len() as u64 != expected {
            return Err(Error::Internal(format!(
                "SL2(F_{q}) enumeration found {} elements, expected {expected}",
                elems.len()
            )));
        }
        if elems.len() > CLASS_GUARD {
            return Err(Error::GroupTooLarge);
        }
        Ok(MatrixGroup {
            q,
            projective,
            elems,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_projective(&self) -> bool {
        self.projective
    }

    /// The central involution -I; only present in the SL_2 form.
    pub fn center_involution(&self) -> Option<Mat2> {
        if self.projective {
            None
        } else {
            Some([self.q - 1, 0, 0, self.q - 1])
        }
    }
}

fn canonical_proj(m: &Mat2, q: u64) -> Mat2 {
    let neg = [
        (q - m[0]) % q,
        (q - m[1]) % q,
        (q - m[2]) % q,
        (q - m[3]) % q,
    ];
    if neg < *m {
        neg
    } else {
        *m
    }
}

impl FiniteGroup for MatrixGroup {
    type Elem = Mat2;

    fn elements(&self) -> &[Mat2] {
        &self.elems
    }

    fn identity(&self) -> Mat2 {
        [1, 0, 0, 1]
    }

    fn mul(&self, a: &Mat2, b: &Mat2) -> Mat2 {
        let q = self.q;
        let m = [
            (a[0] * b[0] + a[1] * b[2]) % q,
            (a[0] * b[1] + a[1] * b[3]) % q,
            (a[2] * b[0] + a[3] * b[2]) % q,
            (a[2] * b[1] + a[3] * b[3]) % q,
        ];
        if self.projective {
            canonical_proj(&m, q)
        } else {
            m
        }
    }

    fn inv(&self, a: &Mat2) -> Mat2 {
        // det = 1: adjugate
        let q = self.q;
        let m = [a[3], (q - a[1]) % q, (q - a[2]) % q, a[0]];
        if self.projective {
            canonical_proj(&m, q)
        } else {
            m
        }
    }
}

impl FiniteGroup for PermGroup {
    type Elem = crate::perm::Perm;

    fn elements(&self) -> &[Self::Elem] {
        PermGroup::elements(self)
    }

    fn identity(&self) -> Self::Elem {
        crate::perm::Perm::identity(self.n())
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.compose(b)
    }

    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        a.inverse()
    }
}

/// Conjugacy classes with power maps, the combinatorial input to the
/// character table.  Classes are sorted by (element order, representative),
/// so the identity class is index 0 and, for SL_2, the central involution
/// class is index 1.
#[derive(Clone, Debug)]
pub struct ClassData {
    pub group_order: usize,
    pub class_count: usize,
    pub sizes: Vec<usize>,
    /// Order of the elements in each class.
    pub element_orders: Vec<u64>,
    /// Index of the class of rep^t, for t in 0..element_order.
    pub power_classes: Vec<Vec<usize>>,
    /// Class of the inverses.
    pub inverse_class: Vec<usize>,
    /// Class of the squares (Frobenius-Schur input).
    pub square_class: Vec<usize>,
    /// lcm of the element orders.
    pub exponent: u64,
    /// a[i][j][k]: number of x in C_i with x^{-1} z_k in C_j, i.e. the
    /// structure constants of the class sums.
    pub structure_constants: Vec<Vec<Vec<u64>>>,
    /// Class index of each element, aligned with the group's element list.
    pub class_of_element: Vec<usize>,
}

pub fn conjugacy_classes<G: FiniteGroup>(group: &G) -> Result<ClassData> {
    let elems = group.elements();
    let n = elems.len();
    if n > CLASS_GUARD {
        return Err(Error::GroupTooLarge);
    }
    let index: HashMap<&G::Elem, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut class_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let cls = reps.len();
        reps.push(i);
        // orbit under conjugation by everything
        for h in elems {
            let conj = group.mul(&group.mul(h, &elems[i]), &group.inv(h));
            let j = index[&conj];
            class_of[j] = cls;
        }
    }
    // canonical order: (element order, representative); elements are sorted,
    // and the first element of each class in the sorted list is minimal
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); reps.len()];
    for (i, &c) in class_of.iter().enumerate() {
        members[c].push(i);
    }
    let order_of = |i: usize| -> u64 {
        let mut x = elems[i].clone();
        let id = group.identity();
        let mut ord = 1u64;
        while x != id {
            x = group.mul(&x, &elems[i]);
            ord += 1;
        }
        ord
    };
    let mut class_order: Vec<usize> = (0..reps.len()).collect();
    let key: Vec<(u64, usize)> = members
        .iter()
        .map(|m| (order_of(m[0]), m[0]))
        .collect();
    class_order.sort_by_key(|&c| key[c]);
    let rank_of: HashMap<usize, usize> = class_order
        .iter()
        .enumerate()
        .map(|(rank, &old)| (old, rank))
        .collect();
    let class_count = reps.len();
    let mut sizes = vec![0usize; class_count];
    let mut rep_elems = vec![0usize; class_count];
    for (old, m) in members.iter().enumerate() {
        let new = rank_of[&old];
        sizes[new] = m.len();
        rep_elems[new] = m[0];
    }
    let class_of_element: Vec<usize> = class_of.iter().map(|&c| rank_of[&c]).collect();
    let element_orders: Vec<u64> = rep_elems.iter().map(|&i| order_of(i)).collect();
    let exponent = element_orders
        .iter()
        .fold(1u64, |acc, &o| num::integer::lcm(acc, o));
    // power maps
    let mut power_classes = Vec::with_capacity(class_count);
    for (c, &rep) in rep_elems.iter().enumerate() {
        let d = element_orders[c];
        let mut powers = Vec::with_capacity(d as usize);
        let mut x = group.identity();
        for _ in 0..d {
            powers.push(class_of_element[index[&x]]);
            x = group.mul(&x, &elems[rep]);
        }
        power_classes.push(powers);
    }
    let inverse_class: Vec<usize> = rep_elems
        .iter()
        .map(|&i| class_of_element[index[&group.inv(&elems[i])]])
        .collect();
    let square_class: Vec<usize> = rep_elems
        .iter()
        .map(|&i| class_of_element[index[&group.mul(&elems[i], &elems[i])]])
        .collect();
    // structure constants a[i][j][k] = #{x in C_i : x^{-1} z_k in C_j}
    let mut structure = vec![vec![vec![0u64; class_count]; class_count]; class_count];
    for (x_idx, &ci) in class_of_element.iter().enumerate() {
        let x_inv = group.inv(&elems[x_idx]);
        for (k, &zk) in rep_elems.iter().enumerate() {
            let y = group.mul(&x_inv, &elems[zk]);
            let cj = class_of_element[index[&y]];
            structure[ci][cj][k] += 1;
        }
    }
    Ok(ClassData {
        group_order: n,
        class_count,
        sizes,
        element_orders,
        power_classes,
        inverse_class,
        square_class,
        exponent,
        structure_constants: structure,
        class_of_element,
    })
}

/// Representatives in canonical class order (needed for output).
pub fn class_representatives<G: FiniteGroup>(group: &G, data: &ClassData) -> Vec<G::Elem> {
    let elems = group.elements();
    let mut reps: Vec<Option<G::Elem>> = vec![None; data.class_count];
    for (i, &c) in data.class_of_element.iter().enumerate() {
        if reps[c].is_none() {
            reps[c] = Some(elems[i].clone());
        }
    }
    reps.into_iter().map(|r| r.unwrap()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::builtin;

    #[test]
    fn sl2_f5_has_nine_classes() {
        let g = MatrixGroup::sl2(5).unwrap();
        assert_eq!(g.elements().len(), 120);
        let data = conjugacy_classes(&g).unwrap();
        assert_eq!(data.class_count, 9);
        assert_eq!(data.sizes.iter().sum::<usize>(), 120);
        assert_eq!(data.sizes[0], 1);
        assert_eq!(data.sizes[1], 1); // the central involution
        assert_eq!(data.element_orders[1], 2);
    }

    #[test]
    fn sl2_f7_has_eleven_classes() {
        let g = MatrixGroup::sl2(7).unwrap();
        assert_eq!(g.elements().len(), 336);
        let data = conjugacy_classes(&g).unwrap();
        assert_eq!(data.class_count, 11);
        assert_eq!(data.exponent, 168);
    }

    #[test]
    fn psl2_f5_is_a5_sized() {
        let g = MatrixGroup::psl2(5).unwrap();
        assert_eq!(g.elements().len(), 60);
        let data = conjugacy_classes(&g).unwrap();
        assert_eq!(data.class_count, 5);
    }

    #[test]
    fn trivial_group_has_one_class() {
        let g = crate::perm::PermGroup::from_generators(1, vec![]).unwrap();
        let data = conjugacy_classes(&g).unwrap();
        assert_eq!(data.class_count, 1);
        assert_eq!(data.exponent, 1);
    }

    #[test]
    fn s3_classes_and_power_maps() {
        let g = builtin("S3").unwrap();
        let data = conjugacy_classes(&g).unwrap();
        assert_eq!(data.class_count, 3);
        assert_eq!(data.sizes, vec![1, 3, 2]);
        // squares of transpositions are the identity
        assert_eq!(data.square_class[1], 0);
        // class sums multiply consistently: column sums are |C_i|
        for i in 0..3 {
            for k in 0..3 {
                let col: u64 = (0..3).map(|j| data.structure_constants[i][j][k]).sum();
                assert_eq!(col, data.sizes[i] as u64);
            }
        }
    }

    #[test]
    fn structure_constants_identity_row() {
        // C_0 = {e}: x = e forces z_k in C_j, so a[0][j][k] = delta_{jk}
        let g = MatrixGroup::sl2(5).unwrap();
        let data = conjugacy_classes(&g).unwrap();
        for j in 0..data.class_count {
            for k in 0..data.class_count {
                let expect = u64::from(j == k);
                assert_eq!(data.structure_constants[0][j][k], expect);
            }
        }
    }
}
