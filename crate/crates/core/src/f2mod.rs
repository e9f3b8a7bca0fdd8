//! F_2 matrices and mod-2 permutation modules.
//!
//! For a permutation group on an odd number n of points, the heart is the
//! sum-zero hyperplane of F_2^n, written in the basis
//! e_0 - e_{n-1}, ..., e_{n-2} - e_{n-1}.  The endomorphism algebra of the
//! module is computed as the kernel of the commutant system over F_2.

use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};

/// Square matrix over F_2; each row is a bitmask (bit j = column j).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct F2Matrix {
    n: usize,
    rows: Vec<u16>,
}

impl F2Matrix {
    pub fn zero(n: usize) -> F2Matrix {
        assert!(n <= 16);
        F2Matrix {
            n,
            rows: vec![0; n],
        }
    }

    pub fn identity(n: usize) -> F2Matrix {
        let mut m = F2Matrix::zero(n);
        for i in 0..n {
            m.rows[i] = 1 << i;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.rows[i] >> j) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        if v {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        debug_assert_eq!(self.n, other.n);
        let mut out = F2Matrix::zero(self.n);
        for i in 0..self.n {
            let mut row = 0u16;
            let mut bits = self.rows[i];
            while bits != 0 {
                let k = bits.trailing_zeros() as usize;
                row ^= other.rows[k];
                bits &= bits - 1;
            }
            out.rows[i] = row;
        }
        out
    }

    pub fn add(&self, other: &F2Matrix) -> F2Matrix {
        debug_assert_eq!(self.n, other.n);
        F2Matrix {
            n: self.n,
            rows: self
                .rows
                .iter()
                .zip(other.rows.iter())
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.n {
            let pivot = (rank..rows.len()).find(|&r| (rows[r] >> col) & 1 == 1);
            if let Some(p) = pivot {
                rows.swap(rank, p);
                for r in 0..rows.len() {
                    if r != rank && (rows[r] >> col) & 1 == 1 {
                        rows[r] ^= rows[rank];
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    pub fn rows_as_bools(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

/// An F_2[G]-module given by one action matrix per generator.
#[derive(Clone, Debug)]
pub struct F2Module {
    dim: usize,
    actions: Vec<F2Matrix>,
}

impl F2Module {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[F2Matrix] {
        &self.actions
    }
}

/// Matrix of a permutation acting on the heart basis
/// v_i = e_i - e_{n-1}: the image of v_i is v_{s(i)} - v_{s(n-1)} with
/// v_{n-1} read as 0.  Columns index basis vectors.
pub fn heart_action(perm: &Perm) -> F2Matrix {
    let n = perm.n();
    let d = n - 1;
    let mut m = F2Matrix::zero(d);
    let drop = perm.apply(n - 1);
    for i in 0..d {
        let img = perm.apply(i);
        if img != n - 1 {
            m.set(img, i, true);
        }
        if drop != n - 1 {
            let cur = m.get(drop, i);
            m.set(drop, i, !cur);
        }
    }
    m
}

/// Full permutation-module matrix on F_2^n (columns map e_i to e_{s(i)}).
pub fn perm_action(perm: &Perm) -> F2Matrix {
    let n = perm.n();
    let mut m = F2Matrix::zero(n);
    for i in 0..n {
        m.set(perm.apply(i), i, true);
    }
    m
}

/// The heart of the permutation module of G over F_2; rejects an even
/// number of points (route even-degree inputs through the odd reduction
/// first).
pub fn heart_module(group: &PermGroup) -> Result<F2Module> {
    let n = group.n();
    if n % 2 == 0 {
        return Err(Error::EvenPointCount(n));
    }
    let actions: Vec<F2Matrix> = group.generators().iter().map(heart_action).collect();
    for a in &actions {
        if !a.is_invertible() {
            return Err(Error::Internal("heart action not invertible".into()));
        }
    }
    Ok(F2Module {
        dim: n - 1,
        actions,
    })
}

/// Faithfulness of the heart: the element-wise matrix map is injective.
pub fn heart_is_faithful(group: &PermGroup) -> Result<bool> {
    if group.n() % 2 == 0 {
        return Err(Error::EvenPointCount(group.n()));
    }
    let mut seen = std::collections::HashSet::new();
    for e in group.elements() {
        if !seen.insert(heart_action(e)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dimension and canonical basis of End_G(M) = {X : A_s X = X A_s for all
/// generator actions A_s}, solved as a linear system over F_2 in the dim^2
/// matrix entries.
pub fn end_ring(module: &F2Module) -> (usize, Vec<F2Matrix>) {
    let d = module.dim;
    let vars = d * d; // X[i][j] at index i*d + j
    debug_assert!(vars <= 128);
    let mut rows: Vec<u128> = Vec::new();
    for a in &module.actions {
        // constraint (A X - X A)[i][j] = 0:
        // sum_k A[i][k] X[k][j] + sum_k X[i][k] A[k][j] = 0
        for i in 0..d {
            for j in 0..d {
                let mut row: u128 = 0;
                for k in 0..d {
                    if a.get(i, k) {
                        row ^= 1 << (k * d + j);
                    }
                    if a.get(k, j) {
                        row ^= 1 << (i * d + k);
                    }
                }
                if row != 0 {
                    rows.push(row);
                }
            }
        }
    }
    let basis_vectors = nullspace(&rows, vars);
    let basis = basis_vectors
        .into_iter()
        .map(|v| {
            let mut m = F2Matrix::zero(d);
            for i in 0..d {
                for j in 0..d {
                    if (v >> (i * d + j)) & 1 == 1 {
                        m.set(i, j, true);
                    }
                }
            }
            m
        })
        .collect::<Vec<_>>();
    (basis.len(), basis)
}

/// Reduced-row-echelon nullspace basis, free variables in ascending order.
fn nullspace(rows: &[u128], vars: usize) -> Vec<u128> {
    // (pivot column, fully reduced row); pivot = lowest set bit
    let mut reduced: Vec<(usize, u128)> = Vec::new();
    for &r0 in rows {
        let mut r = r0;
        for &(pc, pr) in &reduced {
            if (r >> pc) & 1 == 1 {
                r ^= pr;
            }
        }
        if r == 0 {
            continue;
        }
        let pc = r.trailing_zeros() as usize;
        for (_, pr) in reduced.iter_mut() {
            if (*pr >> pc) & 1 == 1 {
                *pr ^= r;
            }
        }
        reduced.push((pc, r));
    }
    let is_pivot = {
        let mut v = vec![false; vars];
        for &(pc, _) in &reduced {
            v[pc] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..vars {
        if is_pivot[free] {
            continue;
        }
        // x_free = 1; each pivot row forces x_pc = bit of the row at `free`
        let mut v: u128 = 1 << free;
        for &(pc, pr) in &reduced {
            if (pr >> free) & 1 == 1 {
                v |= 1 << pc;
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{builtin, PermGroup};

    #[test]
    fn heart_dimension_is_points_minus_one() {
        let a5 = builtin("A5").unwrap();
        let m = heart_module(&a5).unwrap();
        assert_eq!(m.dim(), 4);
        let a7 = builtin("A7").unwrap();
        assert_eq!(heart_module(&a7).unwrap().dim(), 6);
    }

    #[test]
    fn identity_group_acts_trivially() {
        let trivial = PermGroup::from_generators(7, vec![Perm::identity(7)]).unwrap();
        let m = heart_module(&trivial).unwrap();
        assert_eq!(m.dim(), 6);
        for a in m.actions() {
            assert_eq!(*a, F2Matrix::identity(6));
        }
    }

    #[test]
    fn even_point_count_rejected() {
        let psl27 = builtin("PSL2(7)").unwrap(); // acts on 8 points
        assert!(matches!(
            heart_module(&psl27),
            Err(Error::EvenPointCount(8))
        ));
    }

    #[test]
    fn heart_action_is_a_homomorphism_on_a5() {
        let a5 = builtin("A5").unwrap();
        for g in a5.generators() {
            for h in a5.elements() {
                let lhs = heart_action(g).mul(&heart_action(h));
                let rhs = heart_action(&g.compose(h));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn heart_faithful_for_two_transitive_builtins() {
        for name in ["A5", "S5", "A7", "S7", "PSL3(2)", "C5", "C7"] {
            assert!(heart_is_faithful(&builtin(name).unwrap()).unwrap(), "{name}");
        }
    }

    #[test]
    fn end_ring_battery() {
        for (name, dim) in [("A5", 1), ("S5", 1), ("A7", 1), ("S7", 1), ("PSL3(2)", 1)] {
            let g = builtin(name).unwrap();
            let (d, basis) = end_ring(&heart_module(&g).unwrap());
            assert_eq!(d, dim, "{name}");
            assert_eq!(basis.len(), d);
            assert_eq!(basis[0], F2Matrix::identity(g.n() - 1), "{name}");
        }
        let (d, _) = end_ring(&heart_module(&builtin("C5").unwrap()).unwrap());
        assert_eq!(d, 4); // F_16
        let (d, _) = end_ring(&heart_module(&builtin("C7").unwrap()).unwrap());
        assert_eq!(d, 6); // F_8 x F_8
    }

    #[test]
    fn full_module_splits_off_the_all_ones_line() {
        // for odd n the all-ones vector spans a G-stable complement of the
        // heart: check stability and dimension additivity
        let a7 = builtin("A7").unwrap();
        for g in a7.generators() {
            let m = perm_action(g);
            // image of the all-ones vector is all-ones
            let mut img = vec![false; 7];
            for i in 0..7 {
                for j in 0..7 {
                    if m.get(i, j) {
                        img[i] ^= true;
                    }
                }
            }
            assert!(img.iter().all(|&b| b));
        }
        // heart dim + 1 = n
        assert_eq!(heart_module(&a7).unwrap().dim() + 1, 7);
        // all-ones is not in the heart: its coordinate sum is 7 = 1 mod 2
        let ones_sum = 7 % 2;
        assert_eq!(ones_sum, 1);
    }

    #[test]
    fn nullspace_of_empty_system_is_everything() {
        let basis = nullspace(&[], 4);
        assert_eq!(basis.len(), 4);
    }
}
