//! Extension towers F_{q^k} over a base field F_q.
//!
//! Point counting needs arithmetic in extensions of fields that are already
//! extensions of F_p.  Rather than embedding F_q into F_{p^{mk}}, the tower
//! keeps elements as length-k vectors over the base field, modulo the
//! canonical (lexicographically smallest) monic irreducible of degree k over
//! F_q.  Base-field constants embed as degree-zero vectors, so curve
//! coefficients need no translation.

use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::Poly;

pub type ExtElement = SmallVec<[FieldElement; 2]>;

/// F_{q^k} as a k-dimensional algebra over the base [`FieldSpec`].
#[derive(Clone, Debug)]
pub struct Extension {
    base: FieldSpec,
    k: u32,
    size: u64,
    /// Monic modulus over the base, ascending, length k+1; trivial (x) for
    /// k = 1 so that one code path serves both cases.
    modulus: Vec<FieldElement>,
}

impl Extension {
    pub fn new(base: &FieldSpec, k: u32) -> Result<Self> {
        if k == 0 || k > 8 {
            return Err(Error::BadExtensionDegree(k));
        }
        let mut size: u64 = 1;
        for _ in 0..k {
            size = size.checked_mul(base.q()).ok_or(Error::FieldTooLarge)?;
        }
        let modulus = if k == 1 {
            vec![base.zero(), base.one()]
        } else {
            canonical_ext_modulus(base, k)?
        };
        Ok(Extension {
            base: base.clone(),
            k,
            size,
            modulus,
        })
    }

    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    /// Size q^k of the extension.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn zero(&self) -> ExtElement {
        smallvec![self.base.zero(); self.k as usize]
    }

    pub fn one(&self) -> ExtElement {
        self.embed(&self.base.one())
    }

    /// Base-field constant as an extension element.
    pub fn embed(&self, c: &FieldElement) -> ExtElement {
        let mut v = self.zero();
        v[0] = c.clone();
        v
    }

    /// Element with canonical index in [0, q^k): base-q digits, least
    /// significant first.
    pub fn from_index(&self, mut idx: u64) -> ExtElement {
        let q = self.base.q();
        let mut v = self.zero();
        for c in v.iter_mut() {
            *c = self.base.from_index(idx % q);
            idx /= q;
        }
        v
    }

    pub fn index_of(&self, x: &ExtElement) -> u64 {
        let q = self.base.q();
        let mut idx = 0u64;
        for c in x.iter().rev() {
            idx = idx * q + self.base.index_of(c);
        }
        idx
    }

    pub fn is_zero(&self, x: &ExtElement) -> bool {
        x.iter().all(FieldElement::is_zero)
    }

    pub fn add(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        a.iter()
            .zip(b.iter())
            .map(|(x, y)| self.base.add(x, y))
            .collect()
    }

    pub fn mul(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        let k = self.k as usize;
        if k == 1 {
            return smallvec![self.base.mul(&a[0], &b[0])];
        }
        let mut prod: SmallVec<[FieldElement; 4]> = smallvec![self.base.zero(); 2 * k - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                let t = self.base.mul(x, y);
                prod[i + j] = self.base.add(&prod[i + j], &t);
            }
        }
        for d in (k..2 * k - 1).rev() {
            if prod[d].is_zero() {
                continue;
            }
            let c = prod[d].clone();
            prod[d] = self.base.zero();
            for (j, m) in self.modulus.iter().take(k).enumerate() {
                let t = self.base.mul(&c, m);
                prod[d - k + j] = self.base.sub(&prod[d - k + j], &t);
            }
        }
        prod.truncate(k);
        prod.into_iter().collect()
    }

    pub fn pow(&self, a: &ExtElement, mut e: u64) -> ExtElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Evaluates a base-field polynomial at an extension element (Horner).
    pub fn eval_poly(&self, f: &Poly, x: &ExtElement) -> ExtElement {
        debug_assert_eq!(f.spec(), &self.base);
        let mut acc = self.zero();
        for c in f.coeffs().iter().rev() {
            acc = self.mul(&acc, x);
            acc[0] = self.base.add(&acc[0], c);
        }
        acc
    }

    /// Quadratic character table indexed by canonical element index:
    /// +1 for nonzero squares, -1 for nonsquares, 0 at zero.  Built by
    /// marking squares with one multiplication per element.
    pub fn quadratic_character_table(&self) -> Vec<i8> {
        let mut table = vec![-1i8; self.size as usize];
        table[0] = 0;
        for idx in 1..self.size {
            let x = self.from_index(idx);
            let sq = self.mul(&x, &x);
            table[self.index_of(&sq) as usize] = 1;
        }
        table
    }

    /// Euler criterion in the tower, for spot checks against the table.
    pub fn is_square(&self, x: &ExtElement) -> bool {
        if self.is_zero(x) {
            return true;
        }
        self.pow(x, (self.size - 1) / 2) == self.one()
    }
}

/// Lexicographically smallest monic irreducible of degree k over F_q,
/// ordering coefficient tuples by canonical element index.  Irreducibility
/// by trial division against all monic polynomials of degree <= k/2.
fn canonical_ext_modulus(base: &FieldSpec, k: u32) -> Result<Vec<FieldElement>> {
    let k = k as usize;
    let q = base.q();
    let mut digits = vec![0u64; k];
    loop {
        let mut cand: Vec<FieldElement> = digits.iter().map(|&d| base.from_index(d)).collect();
        cand.push(base.one());
        if is_irreducible_over(base, &cand) {
            return Ok(cand);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return Err(Error::Internal(format!(
                    "no irreducible of degree {k} over F_{q}"
                )));
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
        }
    }
}

fn is_irreducible_over(base: &FieldSpec, f: &[FieldElement]) -> bool {
    let n = f.len() - 1;
    if f[0].is_zero() {
        return false;
    }
    let fp = Poly::new(base.clone(), f.to_vec());
    let q = base.q();
    let mut div = vec![base.zero(); n / 2 + 1];
    for d in 1..=n / 2 {
        let count = q.pow(d as u32);
        for idx in 0..count {
            let mut v = idx;
            for c in div.iter_mut().take(d) {
                *c = base.from_index(v % q);
                v /= q;
            }
            div[d] = base.one();
            let g = Poly::new(base.clone(), div[..=d].to_vec());
            if fp.rem(&g).expect("nonzero divisor").is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_one_tower_is_the_base_field() {
        let f9 = FieldSpec::new(3, 2).unwrap();
        let ext = Extension::new(&f9, 1).unwrap();
        assert_eq!(ext.size(), 9);
        for i in 0..9 {
            for j in 0..9 {
                let a = ext.from_index(i);
                let b = ext.from_index(j);
                let prod = ext.mul(&a, &b);
                let expect = f9.mul(&f9.from_index(i), &f9.from_index(j));
                assert_eq!(prod[0], expect);
            }
        }
    }

    #[test]
    fn f81_as_tower_over_f9_has_group_order_80() {
        let f9 = FieldSpec::new(3, 2).unwrap();
        let ext = Extension::new(&f9, 2).unwrap();
        assert_eq!(ext.size(), 81);
        // every nonzero element satisfies x^80 = 1
        for idx in 1..81 {
            let x = ext.from_index(idx);
            assert_eq!(ext.pow(&x, 80), ext.one(), "idx {idx}");
        }
    }

    #[test]
    fn character_table_matches_euler_criterion() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        let ext = Extension::new(&f3, 2).unwrap();
        let table = ext.quadratic_character_table();
        let mut squares = 0;
        for idx in 0..9 {
            let x = ext.from_index(idx);
            let expect = if ext.is_zero(&x) {
                0
            } else if ext.is_square(&x) {
                1
            } else {
                -1
            };
            assert_eq!(table[idx as usize], expect);
            if expect == 1 {
                squares += 1;
            }
        }
        assert_eq!(squares, 4); // (9-1)/2 nonzero squares
    }

    #[test]
    fn eval_agrees_with_base_eval_on_embedded_points() {
        let f9 = FieldSpec::new(3, 2).unwrap();
        let ext = Extension::new(&f9, 2).unwrap();
        let f = Poly::from_ints(&f9, &[1, 2, 0, 1, 0, 1]);
        for i in 0..9 {
            let x = f9.from_index(i);
            let via_ext = ext.eval_poly(&f, &ext.embed(&x));
            assert_eq!(via_ext, ext.embed(&f.eval(&x)));
        }
    }
}
