//! Hyperelliptic models y^2 = f(x) over odd characteristic.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::Poly;

/// A hyperelliptic model y^2 = f(x) with separable f of degree 3..=10;
/// the genus is floor((deg f - 1) / 2).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveModel {
    f: Poly,
    genus: usize,
}

impl CurveModel {
    pub fn new(f: Poly) -> Result<Self> {
        let n = match f.degree() {
            Some(n) if (3..=10).contains(&n) => n,
            other => {
                return Err(Error::BadDegree {
                    expected: "degree in 3..=10",
                    got: other.map_or(-1, |d| d as i64),
                })
            }
        };
        if !f.is_separable()? {
            return Err(Error::Inseparable);
        }
        Ok(CurveModel {
            f,
            genus: (n - 1) / 2,
        })
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn spec(&self) -> &FieldSpec {
        self.f.spec()
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn degree(&self) -> usize {
        self.f.degree().unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_from_degree() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        let c = CurveModel::new(Poly::from_ints(&f3, &[0, 1, 0, 1])).unwrap(); // x^3 + x
        assert_eq!(c.genus(), 1);
        let c = CurveModel::new(Poly::from_ints(&f3, &[1, 0, 0, 1, 0, 1])).unwrap();
        assert_eq!(c.genus(), 2);
    }

    #[test]
    fn rejects_inseparable_and_small_degrees() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        // x^6 + 1 = (x^2 + 1)^3 in characteristic 3
        let r = CurveModel::new(Poly::from_ints(&f3, &[1, 0, 0, 0, 0, 0, 1]));
        assert_eq!(r, Err(Error::Inseparable));
        let r = CurveModel::new(Poly::from_ints(&f3, &[1, 1]));
        assert!(matches!(r, Err(Error::BadDegree { .. })));
    }

    #[test]
    fn superspecial_witness_field_rejects_its_degenerate_neighbour() {
        // x^5 + 1 = (x + 1)^5 over F_5: not a curve model at all
        let f5 = FieldSpec::new(5, 1).unwrap();
        let r = CurveModel::new(Poly::from_ints(&f5, &[1, 0, 0, 0, 0, 1]));
        assert_eq!(r, Err(Error::Inseparable));
    }
}
