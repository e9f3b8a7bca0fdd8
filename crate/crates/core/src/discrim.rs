//! Resultants, discriminants and the tests built on them.
//!
//! Convention: `Res(f, g) = lc(f)^{deg g} * prod g(a_i)` over the roots `a_i`
//! of `f`, and the discriminant is normalized by
//! `Res(f, f') = (-1)^{n(n-1)/2} * lc(f) * D`, so monic quintics satisfy
//! `D = Res(f, f')`.

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::Poly;

/// Resultant by the Euclidean remainder sequence, tracking leading
/// coefficients exactly.  Errors on zero input.
pub fn resultant(f: &Poly, g: &Poly) -> Result<FieldElement> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let spec = f.spec().clone();
    if f.spec() != g.spec() {
        return Err(Error::FieldMismatch);
    }
    let mut a = f.clone();
    let mut b = g.clone();
    let mut acc = spec.one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        if da == 0 {
            // Res(c, g) = c^{deg g}
            return Ok(spec.mul(&acc, &spec.pow(a.lc().unwrap(), db as u64)));
        }
        if db == 0 {
            return Ok(spec.mul(&acc, &spec.pow(b.lc().unwrap(), da as u64)));
        }
        if da < db {
            // Res(a, b) = (-1)^{da db} Res(b, a)
            if da * db % 2 == 1 {
                acc = spec.neg(&acc);
            }
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let r = a.rem(&b)?;
        if r.is_zero() {
            return Ok(spec.zero());
        }
        let dr = r.degree().unwrap();
        // Res(a, b) = (-1)^{da db} lc(b)^{da - dr} Res(b, r)
        if da * db % 2 == 1 {
            acc = spec.neg(&acc);
        }
        acc = spec.mul(&acc, &spec.pow(b.lc().unwrap(), (da - dr) as u64));
        a = b;
        b = r;
    }
}

/// Discriminant with the sign fixed so `Res(f, f') = (-1)^{n(n-1)/2} lc(f) D`.
/// When f' vanishes identically every root is multiple and D = 0.
pub fn discriminant(f: &Poly) -> Result<FieldElement> {
    let spec = f.spec().clone();
    let n = match f.degree() {
        Some(n) if n >= 2 => n,
        other => {
            return Err(Error::BadDegree {
                expected: "degree >= 2",
                got: other.map_or(-1, |d| d as i64),
            })
        }
    };
    let fp = f.derivative();
    if fp.is_zero() {
        return Ok(spec.zero());
    }
    let r = resultant(f, &fp)?;
    let lc_inv = spec.inv(f.lc().unwrap())?;
    let d = spec.mul(&r, &lc_inv);
    if n * (n - 1) / 2 % 2 == 1 {
        Ok(spec.neg(&d))
    } else {
        Ok(d)
    }
}

/// Discriminant criterion: the Galois group of a separable polynomial lies
/// in the alternating group iff its discriminant is a square (char != 2).
pub fn galois_in_alternating(f: &Poly) -> Result<bool> {
    if !f.is_separable()? {
        return Err(Error::Inseparable);
    }
    let d = discriminant(f)?;
    Ok(f.spec().is_square(&d))
}

/// Morse test without root extraction: h is Morse iff deg h' = deg h - 1,
/// h' is separable, and the critical-value resolvent Res_x(h'(x), T - h(x))
/// is separable as a polynomial in T.
pub fn is_morse(h: &Poly) -> Result<bool> {
    let n = match h.degree() {
        Some(n) if n >= 2 => n,
        other => {
            return Err(Error::BadDegree {
                expected: "degree >= 2",
                got: other.map_or(-1, |d| d as i64),
            })
        }
    };
    let hp = h.derivative();
    if hp.degree() != Some(n - 1) {
        return Ok(false);
    }
    if !hp.is_separable()? {
        return Ok(false);
    }
    let resolvent = critical_value_resolvent(h, &hp);
    resolvent.is_separable()
}

/// Res_x(h'(x), T - h(x)) as a polynomial in T, by a fraction-free
/// (Bareiss) determinant of the Sylvester matrix over F_q[T].
fn critical_value_resolvent(h: &Poly, hp: &Poly) -> Poly {
    let spec = h.spec();
    let m = hp.degree().unwrap(); // deg of h'
    let n = h.degree().unwrap(); // deg_x of T - h(x)
    let size = m + n;
    let zero = Poly::zero(spec);
    let mut mat = vec![vec![zero.clone(); size]; size];
    // n rows of h' shifts, coefficients descending
    for row in 0..n {
        for (j, c) in hp.coeffs().iter().rev().enumerate() {
            mat[row][row + j] = Poly::constant(spec, c.clone());
        }
    }
    // m rows of (T - h) shifts; coefficient of x^i is -h_i, plus T at x^0
    let mut g_desc: Vec<Poly> = h
        .coeffs()
        .iter()
        .rev()
        .map(|c| Poly::constant(spec, spec.neg(c)))
        .collect();
    let t_term = Poly::new(spec.clone(), vec![spec.zero(), spec.one()]);
    let last = g_desc.len() - 1;
    g_desc[last] = g_desc[last].add(&t_term).expect("same field");
    for row in 0..m {
        for (j, c) in g_desc.iter().enumerate() {
            mat[n + row][row + j] = c.clone();
        }
    }
    bareiss_det(spec, mat)
}

/// Fraction-free determinant over F_q[T]; divisions are exact.
fn bareiss_det(spec: &FieldSpec, mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    let mut sign = false;
    let mut prev = Poly::one(spec);
    for k in 0..n {
        // pivot
        let pivot = (k..n).find(|&r| !m[r][k].is_zero());
        let Some(r) = pivot else {
            return Poly::zero(spec);
        };
        if r != k {
            m.swap(r, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t1 = m[i][j].mul(&m[k][k]).expect("same field");
                let t2 = m[i][k].mul(&m[k][j]).expect("same field");
                let num = t1.sub(&t2).expect("same field");
                m[i][j] = if num.is_zero() {
                    num
                } else {
                    num.div_exact(&prev).expect("Bareiss division is exact")
                };
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

/// Depressed quintic: h(x) = f(x - gamma) with gamma = a4 / (5 a5), so that
/// the x^4 coefficient vanishes while the leading coefficient is preserved.
pub fn depress_quintic(f: &Poly) -> Result<(FieldElement, Poly)> {
    let spec = f.spec().clone();
    if f.degree() != Some(5) {
        return Err(Error::BadDegree {
            expected: "degree 5",
            got: f.degree().map_or(-1, |d| d as i64),
        });
    }
    let five = spec.from_u64(5);
    if five.is_zero() {
        return Err(Error::CharacteristicDivides(5));
    }
    let a5 = f.coeff(5);
    let a4 = f.coeff(4);
    let gamma = spec.mul(&a4, &spec.inv(&spec.mul(&five, &a5))?);
    let h = f.shift(&spec.neg(&gamma));
    debug_assert!(h.coeff(4).is_zero());
    debug_assert_eq!(h.coeff(5), a5);
    Ok((gamma, h))
}

/// Independent oracle used by the test suite: resultant as the determinant
/// of the Sylvester matrix over the base field.
pub fn resultant_sylvester(f: &Poly, g: &Poly) -> Result<FieldElement> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let spec = f.spec().clone();
    let m = f.degree().unwrap();
    let n = g.degree().unwrap();
    if m == 0 {
        return Ok(spec.pow(f.lc().unwrap(), n as u64));
    }
    if n == 0 {
        return Ok(spec.pow(g.lc().unwrap(), m as u64));
    }
    let size = m + n;
    let mut mat = vec![vec![spec.zero(); size]; size];
    for row in 0..n {
        for (j, c) in f.coeffs().iter().rev().enumerate() {
            mat[row][row + j] = c.clone();
        }
    }
    for row in 0..m {
        for (j, c) in g.coeffs().iter().rev().enumerate() {
            mat[n + row][row + j] = c.clone();
        }
    }
    // plain Gaussian elimination over the field
    let mut det = spec.one();
    for k in 0..size {
        let pivot = (k..size).find(|&r| !mat[r][k].is_zero());
        let Some(r) = pivot else {
            return Ok(spec.zero());
        };
        if r != k {
            mat.swap(r, k);
            det = spec.neg(&det);
        }
        let pk = mat[k][k].clone();
        det = spec.mul(&det, &pk);
        let inv = spec.inv(&pk)?;
        for i in k + 1..size {
            if mat[i][k].is_zero() {
                continue;
            }
            let factor = spec.mul(&mat[i][k], &inv);
            for j in k..size {
                let t = spec.mul(&factor, &mat[k][j]);
                mat[i][j] = spec.sub(&mat[i][j], &t);
            }
        }
    }
    Ok(det)
}
