//! Exact arithmetic in cyclotomic fields Q(zeta_m).
//!
//! Values are rational-coefficient vectors of length phi(m), reduced modulo
//! the m-th cyclotomic polynomial.  Character values are sums of roots of
//! unity, so the coefficients stay integral in practice, but the rational
//! representation keeps division (orthogonality sums, indicator averages)
//! inside the type.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num::rational::Ratio;
use num::traits::Zero;

use crate::error::{Error, Result};

pub type Rat = Ratio<i64>;

/// The m-th cyclotomic polynomial, ascending integer coefficients, monic of
/// degree phi(m).  Computed by dividing x^m - 1 by Phi_d for proper d | m,
/// and cached process-wide.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&m) {
        return hit.clone();
    }
    let phi = compute_cyclotomic(m);
    let arc = Arc::new(phi);
    cache.lock().unwrap().insert(m, arc.clone());
    arc
}

fn compute_cyclotomic(m: u32) -> Vec<i64> {
    assert!(m >= 1);
    if m == 1 {
        return vec![-1, 1];
    }
    // x^m - 1
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = exact_div_int(&num, &phi_d);
        }
    }
    num
}

/// Exact division of integer polynomials with monic divisor.
fn exact_div_int(f: &[i64], g: &[i64]) -> Vec<i64> {
    let mut rem = f.to_vec();
    let dg = g.len() - 1;
    let mut quot = vec![0i64; rem.len() - dg];
    while rem.len() > dg {
        let lead = *rem.last().unwrap();
        let shift = rem.len() - 1 - dg;
        if lead != 0 {
            quot[shift] = lead;
            for (i, &gc) in g.iter().enumerate() {
                rem[shift + i] -= lead * gc;
            }
        }
        debug_assert_eq!(*rem.last().unwrap(), 0);
        rem.pop();
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "division not exact");
    quot
}

pub fn euler_phi(m: u32) -> u32 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// An element of Q(zeta_m) in the power basis, degree < phi(m).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rat>,
}

impl Cyclotomic {
    pub fn zero(m: u32) -> Self {
        Cyclotomic {
            conductor: m,
            coeffs: vec![Rat::zero(); euler_phi(m) as usize],
        }
    }

    pub fn from_rational(m: u32, r: Rat) -> Self {
        let mut c = Cyclotomic::zero(m);
        c.coeffs[0] = r;
        c
    }

    pub fn from_integer(m: u32, n: i64) -> Self {
        Cyclotomic::from_rational(m, Rat::from_integer(n))
    }

    /// zeta_m^e, reduced.
    pub fn zeta_pow(m: u32, e: u32) -> Self {
        let e = (e % m) as usize;
        let mut raw = vec![Rat::zero(); e + 1];
        raw[e] = Rat::from_integer(1);
        Cyclotomic::reduce(m, raw)
    }

    fn reduce(m: u32, mut raw: Vec<Rat>) -> Self {
        let phi = cyclotomic_polynomial(m);
        let d = phi.len() - 1;
        while raw.len() > d {
            let lead = raw.last().unwrap().clone();
            let top = raw.len() - 1;
            if !lead.is_zero() {
                for (i, &pc) in phi.iter().enumerate().take(d) {
                    raw[top - d + i] -= lead.clone() * Rat::from_integer(pc);
                }
            }
            raw.pop();
        }
        raw.resize(d, Rat::zero());
        Cyclotomic {
            conductor: m,
            coeffs: raw,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.conductor, other.conductor);
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.conductor, other.conductor);
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.conductor, other.conductor);
        let n = self.coeffs.len();
        let mut raw = vec![Rat::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        Cyclotomic::reduce(self.conductor, raw)
    }

    pub fn scale(&self, r: Rat) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| a * r).collect(),
        }
    }

    /// Galois conjugation zeta -> zeta^a; requires gcd(a, m) = 1.
    pub fn galois(&self, a: u32) -> Result<Self> {
        let m = self.conductor;
        if num::integer::gcd(a, m) != 1 {
            return Err(Error::Unsupported(format!(
                "galois exponent {a} not coprime to conductor {m}"
            )));
        }
        let mut raw = vec![Rat::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let target = (i as u64 * a as u64 % m as u64) as usize;
                raw[target] += c;
            }
        }
        Ok(Cyclotomic::reduce(m, raw))
    }

    /// Complex conjugation zeta -> zeta^{-1}.
    pub fn conj(&self) -> Self {
        self.galois(self.conductor - 1)
            .expect("m - 1 is coprime to m")
    }

    /// Rational iff all positive-power coefficients vanish; equivalent to
    /// invariance under every Galois conjugation.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(Rat::is_zero)
    }

    pub fn as_rational(&self) -> Option<Rat> {
        if self.is_rational() {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    /// Exact division by an integer.
    pub fn div_integer(&self, n: i64) -> Self {
        self.scale(Rat::new(1, n))
    }
}

impl fmt::Display for Cyclotomic {
    /// "z_m" notation: rationals print bare, otherwise terms in ascending
    /// powers joined with explicit signs.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let m = self.conductor;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = if c < &Rat::zero() { -c } else { *c };
            let sign = c < &Rat::zero();
            if first {
                if sign {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let unit = mag == Rat::from_integer(1);
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z_{m}")?,
                (1, false) => write!(f, "{mag}*z_{m}")?,
                (_, true) => write!(f, "z_{m}^{i}")?,
                (_, false) => write!(f, "{mag}*z_{m}^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(168).len() - 1, 48);
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(8), 4);
        assert_eq!(euler_phi(60), 16);
        assert_eq!(euler_phi(168), 48);
    }

    #[test]
    fn zeta_powers_cycle() {
        let z = Cyclotomic::zeta_pow(8, 1);
        let z8 = (0..8).fold(Cyclotomic::from_integer(8, 1), |acc, _| acc.mul(&z));
        assert_eq!(z8, Cyclotomic::from_integer(8, 1));
        // zeta_8^4 = -1
        assert_eq!(Cyclotomic::zeta_pow(8, 4), Cyclotomic::from_integer(8, -1));
    }

    #[test]
    fn sqrt2_from_eighth_roots() {
        // zeta_8 + zeta_8^{-1} = sqrt(2): its square is 2, and it is not
        // rational
        let s = Cyclotomic::zeta_pow(8, 1).add(&Cyclotomic::zeta_pow(8, 7));
        assert!(!s.is_rational());
        assert_eq!(s.mul(&s), Cyclotomic::from_integer(8, 2));
    }

    #[test]
    fn sixth_root_sum_is_one() {
        // zeta_6 + zeta_6^{-1} = 1
        let s = Cyclotomic::zeta_pow(6, 1).add(&Cyclotomic::zeta_pow(6, 5));
        assert_eq!(s.as_rational(), Some(Rat::from_integer(1)));
    }

    #[test]
    fn galois_stability_of_rationality() {
        let v = Cyclotomic::zeta_pow(12, 1).add(&Cyclotomic::zeta_pow(12, 11));
        for a in 1..12 {
            if num::integer::gcd(a, 12) != 1 {
                continue;
            }
            let w = v.galois(a).unwrap();
            assert_eq!(v.is_rational(), w.is_rational());
        }
        assert!(v.galois(2).is_err());
    }

    #[test]
    fn conjugation_is_an_involution() {
        let v = Cyclotomic::zeta_pow(20, 3).add(&Cyclotomic::from_integer(20, 2));
        assert_eq!(v.conj().conj(), v);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Cyclotomic::from_integer(8, -3).to_string(), "-3");
        let s = Cyclotomic::zeta_pow(8, 1).add(&Cyclotomic::zeta_pow(8, 7));
        // zeta_8^7 = -zeta_8^3 after reduction
        assert_eq!(s.to_string(), "z_8-z_8^3");
    }
}
