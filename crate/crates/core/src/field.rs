//! Finite fields F_{p^k} for odd p, with a canonical defining modulus.
//!
//! A [`FieldSpec`] owns the arithmetic: elements are coefficient vectors in
//! the power basis of `t` modulo the canonical modulus, and all operations go
//! through the spec (context style).  The canonical modulus of F_{p^k} is the
//! lexicographically smallest monic irreducible of degree `k` over F_p,
//! comparing the coefficient tuple `(c_0, ..., c_{k-1})`.  This pins the
//! representation of every element bit-exactly across runs.

use std::fmt;

use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};

/// Inline storage covers every field this crate sweeps (k <= 4).
pub(crate) type Coeffs = SmallVec<[u64; 4]>;

/// An element of F_{p^k}: `k` residues mod p, ascending basis powers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement {
    coeffs: Coeffs,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered by canonical index: most-significant basis coefficient last.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let n = self.coeffs.len().max(other.coeffs.len());
        for i in (0..n).rev() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            match a.cmp(&b) {
                std::cmp::Ordering::Equal => {}
                ord => return ord,
            }
        }
        std::cmp::Ordering::Equal
    }
}

/// The field F_{p^k}, p an odd prime, k in 1..=8.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldSpec {
    p: u64,
    k: u32,
    q: u64,
    /// Canonical monic irreducible of degree k over F_p, ascending, length
    /// k+1.  Empty for k = 1 (no modulus needed).
    modulus: Vec<u64>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    /// Builds F_{p^k}, searching for the canonical modulus when k > 1.
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if !(1..=8).contains(&k) {
            return Err(Error::BadExtensionDegree(k));
        }
        let mut q: u64 = 1;
        for _ in 0..k {
            q = q.checked_mul(p).ok_or(Error::FieldTooLarge)?;
        }
        let modulus = if k == 1 {
            Vec::new()
        } else {
            canonical_modulus(p, k)
        };
        Ok(FieldSpec { p, k, q, modulus })
    }

    /// Parses "p" or "p^k", also accepting a plain prime power like "9".
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((base, exp)) = s.split_once('^') {
            let p: u64 = base
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad field '{s}'")))?;
            let k: u32 = exp
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad field '{s}'")))?;
            return FieldSpec::new(p, k);
        }
        let q: u64 = s
            .parse()
            .map_err(|_| Error::Parse(format!("bad field '{s}'")))?;
        // factor q as p^k
        if q < 3 {
            return Err(Error::NotOddPrime(q));
        }
        let mut p = q;
        for d in 2..=q {
            if d * d > q {
                break;
            }
            if q % d == 0 {
                p = d;
                break;
            }
        }
        let mut k = 0;
        let mut rest = q;
        while rest > 1 {
            if rest % p != 0 {
                return Err(Error::Parse(format!("'{s}' is not a prime power")));
            }
            rest /= p;
            k += 1;
        }
        FieldSpec::new(p, k)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Field size q = p^k.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// The defining modulus, ascending coefficients; `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u64]> {
        if self.k == 1 {
            None
        } else {
            Some(&self.modulus)
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: smallvec![0; self.k as usize],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_u64(1)
    }

    /// Embeds an integer residue as a constant of the field.
    pub fn from_u64(&self, n: u64) -> FieldElement {
        let mut coeffs: Coeffs = smallvec![0; self.k as usize];
        coeffs[0] = n % self.p;
        FieldElement { coeffs }
    }

    /// Embeds a signed integer (negatives taken mod p).
    pub fn from_i64(&self, n: i64) -> FieldElement {
        let p = self.p as i64;
        self.from_u64(n.rem_euclid(p) as u64)
    }

    /// Element from explicit basis coefficients (length must be <= k).
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.k as usize {
            return Err(Error::FieldMismatch);
        }
        let mut c: Coeffs = smallvec![0; self.k as usize];
        for (i, &v) in coeffs.iter().enumerate() {
            c[i] = v % self.p;
        }
        Ok(FieldElement { coeffs: c })
    }

    /// Canonical index of an element: sum c_i p^i, in [0, q).
    pub fn index_of(&self, x: &FieldElement) -> u64 {
        let mut idx = 0u64;
        for &c in x.coeffs.iter().rev() {
            idx = idx * self.p + c;
        }
        idx
    }

    /// Inverse of [`Self::index_of`].
    pub fn from_index(&self, mut idx: u64) -> FieldElement {
        debug_assert!(idx < self.q);
        let mut coeffs: Coeffs = smallvec![0; self.k as usize];
        for c in coeffs.iter_mut() {
            *c = idx % self.p;
            idx /= self.p;
        }
        FieldElement { coeffs }
    }

    /// All elements in canonical index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(move |i| self.from_index(i))
    }

    fn check(&self, x: &FieldElement) {
        debug_assert_eq!(x.coeffs.len(), self.k as usize, "element from another field");
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        self.check(a);
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        FieldElement { coeffs }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let k = self.k as usize;
        if k == 1 {
            return FieldElement {
                coeffs: smallvec![mulmod(a.coeffs[0], b.coeffs[0], self.p)],
            };
        }
        // schoolbook product, then reduce by the monic modulus
        let mut prod: SmallVec<[u64; 8]> = smallvec![0; 2 * k - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mulmod(x, y, self.p)) % self.p;
            }
        }
        for d in (k..2 * k - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (j, &m) in self.modulus.iter().take(k).enumerate() {
                let idx = d - k + j;
                prod[idx] = (prod[idx] + self.p - mulmod(c, m, self.p) % self.p) % self.p;
            }
        }
        prod.truncate(k);
        FieldElement { coeffs: prod }
    }

    pub fn square(&self, a: &FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.square(&base);
            }
        }
        acc
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q - 2))
    }

    /// The Frobenius x -> x^p.
    pub fn frobenius(&self, a: &FieldElement) -> FieldElement {
        self.pow(a, self.p)
    }

    /// Euler criterion: x^((q-1)/2) = 1 for nonzero squares; 0 counts as a
    /// square.
    pub fn is_square(&self, x: &FieldElement) -> bool {
        if x.is_zero() {
            return true;
        }
        self.pow(x, (self.q - 1) / 2) == self.one()
    }

    /// Canonical text form "c0+c1*t+..."; prime-field elements print as the
    /// bare residue.
    pub fn format_element(&self, x: &FieldElement) -> String {
        if self.k == 1 {
            return x.coeffs[0].to_string();
        }
        let mut parts = Vec::with_capacity(self.k as usize);
        for (i, &c) in x.coeffs.iter().enumerate() {
            match i {
                0 => parts.push(c.to_string()),
                1 => parts.push(format!("{c}*t")),
                _ => parts.push(format!("{c}*t^{i}")),
            }
        }
        parts.join("+")
    }

    /// Parses an element: a bare integer, or a sum of `c`, `c*t`, `c*t^i`
    /// terms.  Lenient about omitted terms; always reduces mod p.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        // normalize a leading '-' so splitting on '+'/'-' keeps signs
        let mut coeffs: Coeffs = smallvec![0; self.k as usize];
        let mut rest = s;
        let mut sign: i64 = 1;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        }
        loop {
            let cut = rest.find(['+', '-']);
            let (term, tail, next_sign) = match cut {
                Some(i) => {
                    let ns = if rest.as_bytes()[i] == b'+' { 1 } else { -1 };
                    (&rest[..i], &rest[i + 1..], ns)
                }
                None => (rest, "", 1),
            };
            let term = term.trim();
            let (coeff_str, power) = match term.split_once('*') {
                Some((c, t)) => {
                    let t = t.trim();
                    let pow = if t == "t" {
                        1usize
                    } else if let Some(e) = t.strip_prefix("t^") {
                        e.trim()
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad term '{term}'")))?
                    } else {
                        return Err(Error::Parse(format!("bad term '{term}'")));
                    };
                    (c.trim(), pow)
                }
                None => {
                    if term == "t" {
                        ("1", 1)
                    } else if let Some(e) = term.strip_prefix("t^") {
                        let pow = e
                            .trim()
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad term '{term}'")))?;
                        ("1", pow)
                    } else {
                        (term, 0usize)
                    }
                }
            };
            let c: i64 = coeff_str
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient '{coeff_str}'")))?;
            if power >= self.k as usize {
                return Err(Error::Parse(format!(
                    "term t^{power} out of range for extension degree {}",
                    self.k
                )));
            }
            let p = self.p as i64;
            coeffs[power] = ((coeffs[power] as i64 + sign * c).rem_euclid(p)) as u64;
            if tail.is_empty() {
                break;
            }
            rest = tail;
            sign = next_sign;
        }
        Ok(FieldElement { coeffs })
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.k)
        }
    }
}

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Lexicographically smallest monic irreducible of degree k over F_p,
/// found by trial division against every monic polynomial of degree <= k/2.
fn canonical_modulus(p: u64, k: u32) -> Vec<u64> {
    let k = k as usize;
    let mut cand = vec![0u64; k + 1];
    cand[k] = 1;
    loop {
        if is_irreducible_fp(&cand, p) {
            return cand;
        }
        // odometer over (c_0, ..., c_{k-1}), last coordinate fastest
        let mut i = k;
        loop {
            debug_assert!(i > 0, "no irreducible of degree {k} over F_{p}");
            i -= 1;
            cand[i] += 1;
            if cand[i] < p {
                break;
            }
            cand[i] = 0;
        }
    }
}

/// Trial-division irreducibility over F_p for small degrees.
fn is_irreducible_fp(f: &[u64], p: u64) -> bool {
    let n = f.len() - 1;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    if f[0] == 0 {
        return false; // divisible by x
    }
    let mut div = vec![0u64; n / 2 + 1];
    for d in 1..=n / 2 {
        // all monic divisors of degree d
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut v = idx;
            for c in div.iter_mut().take(d) {
                *c = v % p;
                v /= p;
            }
            div[d] = 1;
            if divides_fp(&div[..=d], f, p) {
                return false;
            }
        }
    }
    true
}

/// Does monic g divide f over F_p?
fn divides_fp(g: &[u64], f: &[u64], p: u64) -> bool {
    let mut rem: Vec<u64> = f.to_vec();
    while rem.len() >= g.len() {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let shift = rem.len() - g.len();
            for (i, &gc) in g.iter().enumerate() {
                let t = mulmod(lead, gc, p);
                rem[shift + i] = (rem[shift + i] + p - t) % p;
            }
        }
        debug_assert_eq!(*rem.last().unwrap(), 0);
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f9_canonical_modulus_is_t2_plus_1() {
        let f9 = FieldSpec::new(3, 2).unwrap();
        assert_eq!(f9.modulus(), Some(&[1, 0, 1][..]));
        assert_eq!(f9.q(), 9);
    }

    #[test]
    fn f81_modulus_is_irreducible_and_minimal() {
        let f81 = FieldSpec::new(3, 4).unwrap();
        let m = f81.modulus().unwrap();
        assert!(is_irreducible_fp(m, 3));
        // nothing lexicographically smaller is irreducible
        let idx_of = |m: &[u64]| -> u64 {
            m[..4].iter().fold(0u64, |acc, &c| acc * 3 + c)
        };
        let here = idx_of(m);
        for idx in 0..here {
            let mut cand = vec![0u64; 5];
            cand[4] = 1;
            let mut v = idx;
            for i in (0..4).rev() {
                cand[i] = v % 3;
                v /= 3;
            }
            assert!(!is_irreducible_fp(&cand, 3), "smaller candidate {cand:?}");
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FieldSpec::new(2, 1), Err(Error::NotOddPrime(2)));
        assert_eq!(FieldSpec::new(9, 1), Err(Error::NotOddPrime(9)));
        assert_eq!(FieldSpec::new(3, 0), Err(Error::BadExtensionDegree(0)));
        assert_eq!(FieldSpec::new(3, 9), Err(Error::BadExtensionDegree(9)));
    }

    #[test]
    fn parse_field_strings() {
        assert_eq!(FieldSpec::parse("3").unwrap().q(), 3);
        assert_eq!(FieldSpec::parse("9").unwrap(), FieldSpec::new(3, 2).unwrap());
        assert_eq!(FieldSpec::parse("3^4").unwrap().q(), 81);
        assert!(FieldSpec::parse("12").is_err());
    }

    #[test]
    fn minus_one_square_iff_even_extension() {
        for (p, k, expect) in [(3, 1, false), (3, 2, true), (3, 4, true), (5, 1, true), (7, 1, false)] {
            let f = FieldSpec::new(p, k).unwrap();
            let m1 = f.from_i64(-1);
            assert_eq!(f.is_square(&m1), expect, "p={p} k={k}");
        }
    }

    #[test]
    fn zero_is_a_square() {
        let f5 = FieldSpec::new(5, 1).unwrap();
        assert!(f5.is_square(&f5.zero()));
    }

    #[test]
    fn inverse_round_trip_f9() {
        let f9 = FieldSpec::new(3, 2).unwrap();
        for x in f9.elements().skip(1) {
            let inv = f9.inv(&x).unwrap();
            assert_eq!(f9.mul(&x, &inv), f9.one());
        }
        assert_eq!(f9.inv(&f9.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn frobenius_is_additive_and_multiplicative_f9() {
        let f9 = FieldSpec::new(3, 2).unwrap();
        let all: Vec<_> = f9.elements().collect();
        for x in &all {
            for y in &all {
                let lhs = f9.frobenius(&f9.add(x, y));
                let rhs = f9.add(&f9.frobenius(x), &f9.frobenius(y));
                assert_eq!(lhs, rhs);
                let lhs = f9.frobenius(&f9.mul(x, y));
                let rhs = f9.mul(&f9.frobenius(x), &f9.frobenius(y));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn frobenius_additive_sampled_f81() {
        let f81 = FieldSpec::new(3, 4).unwrap();
        // deterministic stride sampling over pairs
        for i in (0..81).step_by(5) {
            for j in (0..81).step_by(7) {
                let x = f81.from_index(i);
                let y = f81.from_index(j);
                let lhs = f81.frobenius(&f81.add(&x, &y));
                let rhs = f81.add(&f81.frobenius(&x), &f81.frobenius(&y));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn index_round_trip() {
        let f81 = FieldSpec::new(3, 4).unwrap();
        for i in 0..81 {
            assert_eq!(f81.index_of(&f81.from_index(i)), i);
        }
    }

    #[test]
    fn element_format_and_parse() {
        let f9 = FieldSpec::new(3, 2).unwrap();
        let x = f9.element(&[2, 1]).unwrap();
        assert_eq!(f9.format_element(&x), "2+1*t");
        assert_eq!(f9.parse_element("2+1*t").unwrap(), x);
        assert_eq!(f9.parse_element("2+t").unwrap(), x);
        assert_eq!(f9.parse_element("-1").unwrap(), f9.from_u64(2));
        let f3 = FieldSpec::new(3, 1).unwrap();
        assert_eq!(f3.format_element(&f3.from_u64(2)), "2");
        assert!(f3.parse_element("t").is_err());
    }

    #[test]
    fn square_multiplicativity_f7() {
        let f7 = FieldSpec::new(7, 1).unwrap();
        for x in f7.elements().skip(1) {
            for y in f7.elements().skip(1) {
                let xy = f7.mul(&x, &y);
                assert_eq!(f7.is_square(&xy), f7.is_square(&x) == f7.is_square(&y));
            }
        }
    }
}
