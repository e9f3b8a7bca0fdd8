//! Cartier–Manin matrices and the genus-2 supersingularity classification.
//!
//! For y^2 = f(x) with odd deg f = 2g + 1, the matrix is
//! `M[i][j] = c_{p*i - j}` (1-based) where `f^{(p-1)/2} = sum c_k x^k`.
//! For genus 2 the three-way verdict is: M = 0 superspecial;
//! M != 0 with M^{(p)} M = 0 supersingular but not superspecial; otherwise
//! not supersingular.  M^{(p)} is the entrywise p-th power, the direction
//! pinned by the determinant identity det(M^{(p)} M) = a1^4 a5^4 at p = 3.

use std::fmt;

use crate::curve::CurveModel;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::Poly;

/// g x g matrix over the base field, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CMMatrix {
    spec: FieldSpec,
    g: usize,
    entries: Vec<FieldElement>,
}

impl CMMatrix {
    pub fn dim(&self) -> usize {
        self.g
    }

    pub fn entry(&self, i: usize, j: usize) -> &FieldElement {
        &self.entries[i * self.g + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldElement::is_zero)
    }

    /// Entrywise p-th power.
    pub fn frobenius_twist(&self) -> CMMatrix {
        CMMatrix {
            spec: self.spec.clone(),
            g: self.g,
            entries: self
                .entries
                .iter()
                .map(|e| self.spec.frobenius(e))
                .collect(),
        }
    }

    pub fn mul(&self, other: &CMMatrix) -> CMMatrix {
        debug_assert_eq!(self.g, other.g);
        let g = self.g;
        let mut entries = vec![self.spec.zero(); g * g];
        for i in 0..g {
            for j in 0..g {
                let mut acc = self.spec.zero();
                for k in 0..g {
                    let t = self.spec.mul(self.entry(i, k), other.entry(k, j));
                    acc = self.spec.add(&acc, &t);
                }
                entries[i * g + j] = acc;
            }
        }
        CMMatrix {
            spec: self.spec.clone(),
            g,
            entries,
        }
    }

    /// Determinant; only needed for g <= 2 but written generally via
    /// cofactor expansion on these tiny sizes.
    pub fn det(&self) -> FieldElement {
        match self.g {
            0 => self.spec.one(),
            1 => self.entry(0, 0).clone(),
            2 => {
                let ad = self.spec.mul(self.entry(0, 0), self.entry(1, 1));
                let bc = self.spec.mul(self.entry(0, 1), self.entry(1, 0));
                self.spec.sub(&ad, &bc)
            }
            g => {
                let mut acc = self.spec.zero();
                for j in 0..g {
                    let minor = self.minor(0, j);
                    let mut t = self.spec.mul(self.entry(0, j), &minor.det());
                    if j % 2 == 1 {
                        t = self.spec.neg(&t);
                    }
                    acc = self.spec.add(&acc, &t);
                }
                acc
            }
        }
    }

    fn minor(&self, row: usize, col: usize) -> CMMatrix {
        let g = self.g;
        let mut entries = Vec::with_capacity((g - 1) * (g - 1));
        for i in 0..g {
            if i == row {
                continue;
            }
            for j in 0..g {
                if j == col {
                    continue;
                }
                entries.push(self.entry(i, j).clone());
            }
        }
        CMMatrix {
            spec: self.spec.clone(),
            g: g - 1,
            entries,
        }
    }

    pub fn rows(&self) -> Vec<Vec<FieldElement>> {
        (0..self.g)
            .map(|i| (0..self.g).map(|j| self.entry(i, j).clone()).collect())
            .collect()
    }
}

impl fmt::Display for CMMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.g {
            if i > 0 {
                writeln!(f)?;
            }
            let row: Vec<String> = (0..self.g)
                .map(|j| self.spec.format_element(self.entry(i, j)))
                .collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Three-way verdict for genus-2 jacobians.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SsClass {
    NotSupersingular,
    SupersingularNotSuperspecial,
    Superspecial,
}

impl SsClass {
    pub fn is_supersingular(self) -> bool {
        !matches!(self, SsClass::NotSupersingular)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SsClass::NotSupersingular => "not_supersingular",
            SsClass::SupersingularNotSuperspecial => "supersingular_not_superspecial",
            SsClass::Superspecial => "superspecial",
        }
    }
}

impl fmt::Display for SsClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Cartier–Manin matrix of an odd-degree model.
pub fn cm_matrix(c: &CurveModel) -> Result<CMMatrix> {
    if c.degree() % 2 == 0 {
        return Err(Error::EvenDegreeModel);
    }
    let spec = c.spec().clone();
    let p = spec.p();
    let fpow = c.f().pow(((p - 1) / 2) as u32);
    Ok(matrix_from_power(&spec, &fpow, c.genus()))
}

fn matrix_from_power(spec: &FieldSpec, fpow: &Poly, g: usize) -> CMMatrix {
    let p = spec.p() as usize;
    let mut entries = Vec::with_capacity(g * g);
    for i in 1..=g {
        for j in 1..=g {
            entries.push(fpow.coeff(p * i - j));
        }
    }
    CMMatrix {
        spec: spec.clone(),
        g,
        entries,
    }
}

/// Classifies a genus-2 jacobian by the matrix criterion.
pub fn classify_ss_g2(c: &CurveModel) -> Result<SsClass> {
    if c.genus() != 2 {
        return Err(Error::WrongGenus {
            expected: 2,
            got: c.genus(),
        });
    }
    let m = cm_matrix(c)?;
    if m.is_zero() {
        return Ok(SsClass::Superspecial);
    }
    if m.frobenius_twist().mul(&m).is_zero() {
        Ok(SsClass::SupersingularNotSuperspecial)
    } else {
        Ok(SsClass::NotSupersingular)
    }
}

/// Self-test of the determinant identity det(M^{(3)} M) = a1^4 a5^4 for
/// f = a5 x^5 + a3 x^3 + a2 x^2 + a1 x at p = 3.  Must always return true.
pub fn det_identity_check(
    spec: &FieldSpec,
    a1: &FieldElement,
    a2: &FieldElement,
    a3: &FieldElement,
    a5: &FieldElement,
) -> Result<bool> {
    if spec.p() != 3 {
        return Err(Error::Unsupported(format!(
            "determinant identity is specific to p = 3, got p = {}",
            spec.p()
        )));
    }
    if a5.is_zero() {
        return Err(Error::BadDegree {
            expected: "a5 != 0",
            got: 0,
        });
    }
    let f = Poly::new(
        spec.clone(),
        vec![
            spec.zero(),
            a1.clone(),
            a2.clone(),
            a3.clone(),
            spec.zero(),
            a5.clone(),
        ],
    );
    // p = 3, so f^{(p-1)/2} = f and no separability is needed
    let m = matrix_from_power(spec, &f, 2);
    let lhs = m.frobenius_twist().mul(&m).det();
    let rhs = spec.mul(&spec.pow(a1, 4), &spec.pow(a5, 4));
    Ok(lhs == rhs)
}

/// Even-to-odd degree reduction at a rational root: for separable f of even
/// degree n with f(alpha) = 0, returns h1(x) = x^{n-1} h(1/x) where
/// h(x) = (f / (x - alpha))(x + alpha).  The curves y^2 = f(x) and
/// y1^2 = h1(x1) are birational via x1 = 1/(x - alpha).
pub fn reduce_even_to_odd(f: &Poly, alpha: &FieldElement) -> Result<Poly> {
    let n = match f.degree() {
        Some(n) if n % 2 == 0 && n >= 4 => n,
        other => {
            return Err(Error::BadDegree {
                expected: "even degree >= 4",
                got: other.map_or(-1, |d| d as i64),
            })
        }
    };
    if !f.is_separable()? {
        return Err(Error::Inseparable);
    }
    let spec = f.spec().clone();
    if !f.eval(alpha).is_zero() {
        return Err(Error::NotARoot(spec.format_element(alpha)));
    }
    let linear = Poly::new(spec.clone(), vec![spec.neg(alpha), spec.one()]);
    let f1 = f.div_exact(&linear)?;
    let h = f1.shift(alpha);
    debug_assert!(!h.coeff(0).is_zero(), "f separable forces f1(alpha) != 0");
    let h1 = h.reversed();
    debug_assert_eq!(h1.degree(), Some(n - 1));
    debug_assert!(h1.is_separable().unwrap_or(false));
    Ok(h1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> FieldSpec {
        FieldSpec::new(3, 1).unwrap()
    }

    fn curve(spec: &FieldSpec, coeffs: &[i64]) -> CurveModel {
        CurveModel::new(Poly::from_ints(spec, coeffs)).unwrap()
    }

    #[test]
    fn matrix_of_the_reference_quintic() {
        let c = curve(&f3(), &[1, 0, 0, 1, 0, 1]); // x^5 + x^3 + 1
        let m = cm_matrix(&c).unwrap();
        let f3 = f3();
        assert_eq!(m.rows(), vec![
            vec![f3.zero(), f3.zero()],
            vec![f3.one(), f3.zero()],
        ]);
    }

    #[test]
    fn matrix_reads_low_coefficients() {
        let c = curve(&f3(), &[1, 1, 1, 0, 0, 1]); // x^5 + x^2 + x + 1
        let m = cm_matrix(&c).unwrap();
        let f3 = f3();
        assert_eq!(m.rows(), vec![
            vec![f3.one(), f3.one()],
            vec![f3.one(), f3.zero()],
        ]);
    }

    #[test]
    fn genus_one_matrix() {
        let c = curve(&f3(), &[0, 1, 0, 1]); // x^3 + x
        let m = cm_matrix(&c).unwrap();
        assert_eq!(m.dim(), 1);
        assert!(m.entry(0, 0).is_zero());
    }

    #[test]
    fn twist_fixes_prime_field_entries() {
        let c = curve(&f3(), &[1, 0, 0, 1, 0, 1]);
        let m = cm_matrix(&c).unwrap();
        assert_eq!(m.frobenius_twist(), m);
    }

    #[test]
    fn twist_cubes_over_f9() {
        let f9 = FieldSpec::new(3, 2).unwrap();
        let t = f9.element(&[0, 1]).unwrap();
        // f = x^5 + t*x^2: entries a2 = t, a1 = 0, a5 = 1
        let f = Poly::new(
            f9.clone(),
            vec![f9.zero(), f9.zero(), t.clone(), f9.zero(), f9.zero(), f9.one()],
        );
        let c = CurveModel::new(f).unwrap();
        let m = cm_matrix(&c).unwrap();
        let tw = m.frobenius_twist();
        assert_eq!(*tw.entry(0, 0), f9.pow(&t, 3));
        assert_eq!(*tw.entry(1, 0), f9.one());
    }

    #[test]
    fn classification_of_reference_curves() {
        assert_eq!(
            classify_ss_g2(&curve(&f3(), &[1, 0, 0, 1, 0, 1])).unwrap(),
            SsClass::SupersingularNotSuperspecial
        );
        assert_eq!(
            classify_ss_g2(&curve(&f3(), &[0, 1, 0, 0, 0, 1])).unwrap(),
            SsClass::NotSupersingular
        );
        let f5 = FieldSpec::new(5, 1).unwrap();
        // y^2 = x^5 - x over F_5: f^2 = x^10 - 2x^6 + x^2 has no
        // coefficients at 4, 3, 9, 8, so M = 0
        assert_eq!(
            classify_ss_g2(&curve(&f5, &[0, -1, 0, 0, 0, 1])).unwrap(),
            SsClass::Superspecial
        );
    }

    #[test]
    fn genus_must_be_two() {
        let c = curve(&f3(), &[0, 1, 0, 1]);
        assert_eq!(
            classify_ss_g2(&c),
            Err(Error::WrongGenus { expected: 2, got: 1 })
        );
    }

    #[test]
    fn det_identity_spot_checks() {
        let f3 = f3();
        let one = f3.one();
        let zero = f3.zero();
        let two = f3.from_u64(2);
        assert!(det_identity_check(&f3, &one, &one, &zero, &one).unwrap());
        assert!(det_identity_check(&f3, &zero, &zero, &zero, &one).unwrap());
        let f9 = FieldSpec::new(3, 2).unwrap();
        let t = f9.element(&[0, 1]).unwrap();
        assert!(det_identity_check(&f9, &zero, &two, &t, &f9.one()).unwrap());
        let f5 = FieldSpec::new(5, 1).unwrap();
        assert!(det_identity_check(&f5, &f5.one(), &f5.one(), &f5.one(), &f5.one()).is_err());
    }

    #[test]
    fn even_reduction_drops_degree_and_stays_separable() {
        let f9 = FieldSpec::new(3, 2).unwrap();
        // g = x^5 + x^3 + 2 has g(1) = 1, so (x - 1) g is separable iff g is
        let g = Poly::from_ints(&f9, &[2, 0, 0, 1, 0, 1]);
        assert!(g.is_separable().unwrap());
        let linear = Poly::from_ints(&f9, &[-1, 1]);
        let f = linear.mul(&g).unwrap();
        assert!(f.is_separable().unwrap());
        let h1 = reduce_even_to_odd(&f, &f9.one()).unwrap();
        assert_eq!(h1.degree(), Some(5));
        assert!(h1.is_separable().unwrap());
        // root at 0 makes the shift trivial: h1 is the reversal of f/x
        let f0 = Poly::from_ints(&f9, &[0, 2, 0, 0, 1, 0, 1]); // x * g
        assert!(f0.is_separable().unwrap());
        let h1 = reduce_even_to_odd(&f0, &f9.zero()).unwrap();
        assert_eq!(h1, g.reversed());
    }

    #[test]
    fn even_reduction_error_paths() {
        let f3 = f3();
        // x^6 - x^2 has a double root at 0
        let bad = Poly::from_ints(&f3, &[0, 0, -1, 0, 0, 0, 1]);
        assert_eq!(
            reduce_even_to_odd(&bad, &f3.zero()),
            Err(Error::Inseparable)
        );
        let odd = Poly::from_ints(&f3, &[1, 0, 0, 1, 0, 1]);
        assert!(matches!(
            reduce_even_to_odd(&odd, &f3.zero()),
            Err(Error::BadDegree { .. })
        ));
        let f = Poly::from_ints(&f3, &[1, 1, 0, 0, 0, 0, 1]); // x^6 + x + 1
        assert!(f.is_separable().unwrap());
        assert!(matches!(
            reduce_even_to_odd(&f, &f3.zero()),
            Err(Error::NotARoot(_))
        ));
    }
}
