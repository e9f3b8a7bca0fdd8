//! Dense univariate polynomials over a [`FieldSpec`].
//!
//! Coefficients ascending, trailing zeros stripped; the zero polynomial has
//! an empty coefficient vector and `degree() == None`.

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    spec: FieldSpec,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(spec: FieldSpec, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Poly { spec, coeffs }
    }

    pub fn zero(spec: &FieldSpec) -> Self {
        Poly {
            spec: spec.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(spec: &FieldSpec) -> Self {
        Poly::new(spec.clone(), vec![spec.one()])
    }

    pub fn constant(spec: &FieldSpec, c: FieldElement) -> Self {
        Poly::new(spec.clone(), vec![c])
    }

    /// x^n with unit coefficient.
    pub fn x_pow(spec: &FieldSpec, n: usize) -> Self {
        let mut coeffs = vec![spec.zero(); n + 1];
        coeffs[n] = spec.one();
        Poly::new(spec.clone(), coeffs)
    }

    /// Convenience constructor from signed integer coefficients, ascending.
    pub fn from_ints(spec: &FieldSpec, coeffs: &[i64]) -> Self {
        let v = coeffs.iter().map(|&c| spec.from_i64(c)).collect();
        Poly::new(spec.clone(), v)
    }

    /// Parses "c0,c1,..." with each coefficient in the element syntax of the
    /// field.
    pub fn parse(spec: &FieldSpec, s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|t| spec.parse_element(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(spec.clone(), coeffs))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    /// Coefficient of x^i, zero when absent.
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.spec.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(|c| *c == self.spec.one())
    }

    fn same_field(&self, other: &Poly) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.spec.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        Ok(Poly::new(self.spec.clone(), coeffs))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.spec.sub(&self.coeff(i), &other.coeff(i)))
            .collect();
        Ok(Poly::new(self.spec.clone(), coeffs))
    }

    pub fn neg(&self) -> Poly {
        let coeffs = self.coeffs.iter().map(|c| self.spec.neg(c)).collect();
        Poly::new(self.spec.clone(), coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.spec));
        }
        let mut coeffs = vec![self.spec.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = self.spec.mul(a, b);
                coeffs[i + j] = self.spec.add(&coeffs[i + j], &t);
            }
        }
        Ok(Poly::new(self.spec.clone(), coeffs))
    }

    pub fn scale(&self, c: &FieldElement) -> Poly {
        let coeffs = self.coeffs.iter().map(|a| self.spec.mul(a, c)).collect();
        Poly::new(self.spec.clone(), coeffs)
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.spec);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same field");
            }
        }
        acc
    }

    /// Euclidean division: (quotient, remainder) with deg r < deg b.
    pub fn divrem(&self, b: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(b)?;
        if b.is_zero() {
            return Err(Error::ZeroPolynomialDivision);
        }
        let db = b.coeffs.len() - 1;
        let lb_inv = self.spec.inv(b.lc().unwrap())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(&self.spec), self.clone()));
        }
        let mut quot = vec![self.spec.zero(); rem.len() - db];
        while rem.len() > db {
            let lead = rem.last().unwrap().clone();
            if !lead.is_zero() {
                let qc = self.spec.mul(&lead, &lb_inv);
                let shift = rem.len() - 1 - db;
                for (i, bc) in b.coeffs.iter().enumerate() {
                    let t = self.spec.mul(&qc, bc);
                    rem[shift + i] = self.spec.sub(&rem[shift + i], &t);
                }
                quot[shift] = qc;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
        }
        Ok((
            Poly::new(self.spec.clone(), quot),
            Poly::new(self.spec.clone(), rem),
        ))
    }

    pub fn rem(&self, b: &Poly) -> Result<Poly> {
        Ok(self.divrem(b)?.1)
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, b: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(b)?;
        if !r.is_zero() {
            return Err(Error::Internal("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Monic gcd; gcd(0, g) is the monic multiple of g.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return Ok(a);
        }
        let inv = self.spec.inv(a.lc().unwrap())?;
        Ok(a.scale(&inv))
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(&self.spec);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.spec.mul(&self.spec.from_u64(i as u64), c))
            .collect();
        Poly::new(self.spec.clone(), coeffs)
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = self.spec.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.spec.mul(&acc, x);
            acc = self.spec.add(&acc, c);
        }
        acc
    }

    /// f(x + c), via Horner over the shifted variable.
    pub fn shift(&self, c: &FieldElement) -> Poly {
        let mut acc = Poly::zero(&self.spec);
        let x_plus_c = Poly::new(
            self.spec.clone(),
            vec![c.clone(), self.spec.one()],
        );
        for coeff in self.coeffs.iter().rev() {
            acc = acc.mul(&x_plus_c).expect("same field");
            acc = acc
                .add(&Poly::constant(&self.spec, coeff.clone()))
                .expect("same field");
        }
        acc
    }

    /// Coefficient reversal: x^deg(f) * f(1/x).  The degree drops when the
    /// constant term is zero.
    pub fn reversed(&self) -> Poly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::new(self.spec.clone(), coeffs)
    }

    /// True iff gcd(f, f') = 1.
    pub fn is_separable(&self) -> Result<bool> {
        match self.degree() {
            None => Err(Error::ZeroPolynomial),
            Some(0) => Err(Error::BadDegree {
                expected: "degree >= 1",
                got: 0,
            }),
            Some(_) => {
                let d = self.derivative();
                if d.is_zero() {
                    return Ok(false);
                }
                Ok(self.gcd(&d)?.degree() == Some(0))
            }
        }
    }

    /// Canonical text form "c0,c1,...".
    pub fn format(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|c| self.spec.format_element(c))
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> FieldSpec {
        FieldSpec::new(3, 1).unwrap()
    }

    #[test]
    fn gcd_shares_root() {
        let f3 = f3();
        let a = Poly::from_ints(&f3, &[-1, 0, 1]); // x^2 - 1
        let b = Poly::from_ints(&f3, &[-1, 1]); // x - 1
        let g = a.gcd(&b).unwrap();
        assert_eq!(g, Poly::from_ints(&f3, &[2, 1])); // x + 2 = x - 1 monic
    }

    #[test]
    fn derivative_kills_cube_exponents() {
        let f3 = f3();
        let f = Poly::from_ints(&f3, &[1, 0, 0, 1, 0, 0, 1]); // x^6 + x^3 + 1
        assert!(f.derivative().is_zero());
    }

    #[test]
    fn eval_fermat() {
        let f3 = f3();
        let f = Poly::from_ints(&f3, &[0, -1, 0, 0, 0, 1]); // x^5 - x
        assert!(f.eval(&f3.from_u64(2)).is_zero());
    }

    #[test]
    fn separability_cases() {
        let f3 = f3();
        assert!(!Poly::from_ints(&f3, &[0, 0, 1]).is_separable().unwrap()); // x^2
        assert!(Poly::from_ints(&f3, &[-1, 0, 1]).is_separable().unwrap()); // x^2 - 1
        assert!(Poly::from_ints(&f3, &[1, 0, 0, 1, 0, 1]).is_separable().unwrap()); // x^5+x^3+1
        assert_eq!(Poly::zero(&f3).is_separable(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn divrem_round_trip() {
        let f3 = f3();
        let a = Poly::from_ints(&f3, &[2, 0, 1, 1, 2]);
        let b = Poly::from_ints(&f3, &[1, 2, 1]);
        let (q, r) = a.divrem(&b).unwrap();
        let back = q.mul(&b).unwrap().add(&r).unwrap();
        assert_eq!(back, a);
        assert!(r.degree() < b.degree());
        assert_eq!(
            a.divrem(&Poly::zero(&f3)),
            Err(Error::ZeroPolynomialDivision)
        );
    }

    #[test]
    fn shift_matches_direct_expansion() {
        let f3 = f3();
        let f = Poly::from_ints(&f3, &[1, 0, 0, 0, 1, 1]); // x^5 + x^4 + 1
        let shifted = f.shift(&f3.from_u64(1)); // f(x+1)
        for i in 0..3 {
            let x = f3.from_u64(i);
            let expect = f.eval(&f3.add(&x, &f3.one()));
            assert_eq!(shifted.eval(&x), expect);
        }
    }

    #[test]
    fn mismatched_fields_error() {
        let f3 = f3();
        let f5 = FieldSpec::new(5, 1).unwrap();
        let a = Poly::from_ints(&f3, &[1, 1]);
        let b = Poly::from_ints(&f5, &[1, 1]);
        assert_eq!(a.add(&b), Err(Error::FieldMismatch));
        assert_eq!(a.mul(&b), Err(Error::FieldMismatch));
    }

    #[test]
    fn parse_and_format() {
        let f3 = f3();
        let f = Poly::parse(&f3, "1,0,0,2,0,1").unwrap();
        assert_eq!(f.degree(), Some(5));
        assert_eq!(f.format(), "1,0,0,2,0,1");
        let f9 = FieldSpec::new(3, 2).unwrap();
        let g = Poly::parse(&f9, "1,0,0,1+2*t,0,1").unwrap();
        assert_eq!(g.format(), "1+0*t,0+0*t,0+0*t,1+2*t,0+0*t,1+0*t");
    }
}
