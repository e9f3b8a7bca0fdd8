//! Small dense linear algebra over F_l for the class-matrix eigenvector
//! computation.  Everything is u64 arithmetic modulo a prime below 2^32.

pub fn addm(a: u64, b: u64, l: u64) -> u64 {
    (a + b) % l
}

pub fn subm(a: u64, b: u64, l: u64) -> u64 {
    (a + l - b % l) % l
}

pub fn mulm(a: u64, b: u64, l: u64) -> u64 {
    a * b % l
}

pub fn powm(mut base: u64, mut e: u64, l: u64) -> u64 {
    base %= l;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % l;
        }
        base = base * base % l;
        e >>= 1;
    }
    acc
}

pub fn invm(a: u64, l: u64) -> u64 {
    debug_assert!(a % l != 0);
    powm(a, l - 2, l)
}

/// Row-major square matrix mod l.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMatrix {
    pub n: usize,
    pub l: u64,
    pub data: Vec<u64>,
}

impl ModMatrix {
    pub fn zero(n: usize, l: u64) -> Self {
        ModMatrix {
            n,
            l,
            data: vec![0; n * n],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.n + j] = v % self.l;
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; self.n];
        for i in 0..self.n {
            let mut acc = 0u64;
            for j in 0..self.n {
                acc = (acc + self.get(i, j) * v[j]) % self.l;
            }
            out[i] = acc;
        }
        out
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> u64 {
        let l = self.l;
        let n = self.n;
        let mut m = self.data.clone();
        let mut det = 1u64;
        for k in 0..n {
            let pivot = (k..n).find(|&r| m[r * n + k] != 0);
            let Some(r) = pivot else {
                return 0;
            };
            if r != k {
                for j in 0..n {
                    m.swap(r * n + j, k * n + j);
                }
                det = subm(0, det, l);
            }
            let pk = m[k * n + k];
            det = mulm(det, pk, l);
            let inv = invm(pk, l);
            for i in k + 1..n {
                if m[i * n + k] == 0 {
                    continue;
                }
                let factor = mulm(m[i * n + k], inv, l);
                for j in k..n {
                    let t = mulm(factor, m[k * n + j], l);
                    m[i * n + j] = subm(m[i * n + j], t, l);
                }
            }
        }
        det
    }

    /// Kernel basis (column vectors), via reduced row echelon form.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let l = self.l;
        let n = self.n;
        let mut m = self.data.clone();
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let pivot = (row..n).find(|&r| m[r * n + col] != 0);
            let Some(r) = pivot else { continue };
            if r != row {
                for j in 0..n {
                    m.swap(r * n + j, row * n + j);
                }
            }
            let inv = invm(m[row * n + col], l);
            for j in 0..n {
                m[row * n + j] = mulm(m[row * n + j], inv, l);
            }
            for i in 0..n {
                if i != row && m[i * n + col] != 0 {
                    let factor = m[i * n + col];
                    for j in 0..n {
                        let t = mulm(factor, m[row * n + j], l);
                        m[i * n + j] = subm(m[i * n + j], t, l);
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
            if row == n {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in 0..n {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![0u64; n];
            v[free] = 1;
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = subm(0, m[r * n + free], l);
            }
            basis.push(v);
        }
        basis
    }

    /// Characteristic polynomial coefficients (ascending, monic of degree n)
    /// by interpolation of det(x I - M) at n + 1 points; requires l > n.
    pub fn charpoly(&self) -> Vec<u64> {
        let l = self.l;
        let n = self.n;
        assert!(l > n as u64 + 1);
        let xs: Vec<u64> = (0..=n as u64).collect();
        let ys: Vec<u64> = xs
            .iter()
            .map(|&x| {
                // det(xI - M)
                let mut shifted = ModMatrix::zero(n, l);
                for i in 0..n {
                    for j in 0..n {
                        let v = self.get(i, j);
                        shifted.set(i, j, if i == j { subm(x, v, l) } else { subm(0, v, l) });
                    }
                }
                shifted.det()
            })
            .collect();
        lagrange_interpolate(&xs, &ys, l)
    }
}

/// Lagrange interpolation through (xs[i], ys[i]) mod l.
pub fn lagrange_interpolate(xs: &[u64], ys: &[u64], l: u64) -> Vec<u64> {
    let n = xs.len();
    let mut coeffs = vec![0u64; n];
    for i in 0..n {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut basis = vec![0u64; n];
        basis[0] = 1;
        let mut deg = 0;
        let mut denom = 1u64;
        for j in 0..n {
            if j == i {
                continue;
            }
            // multiply by (x - x_j)
            for k in (0..=deg).rev() {
                let c = basis[k];
                basis[k + 1] = addm(basis[k + 1], c, l);
                basis[k] = mulm(c, subm(0, xs[j], l), l);
            }
            deg += 1;
            denom = mulm(denom, subm(xs[i], xs[j], l), l);
        }
        let scale = mulm(ys[i], invm(denom, l), l);
        for k in 0..n {
            coeffs[k] = addm(coeffs[k], mulm(basis[k], scale, l), l);
        }
    }
    coeffs
}

/// Roots of an ascending-coefficient polynomial mod l, found by scanning;
/// l stays small here (a few hundred).
pub fn roots_mod(poly: &[u64], l: u64) -> Vec<u64> {
    let mut roots = Vec::new();
    for x in 0..l {
        let mut acc = 0u64;
        for &c in poly.iter().rev() {
            acc = (acc * x + c) % l;
        }
        if acc == 0 {
            roots.push(x);
        }
    }
    roots
}
