//! Permutation groups on a small number of points, materialized by closure.
//!
//! Groups are stored as their full element list (BFS closure from the
//! generators under a 10^5 order guard), which keeps transitivity, derived
//! series and endomorphism computations exhaustive and obviously correct at
//! this scale.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};

pub const GROUP_ORDER_GUARD: usize = 100_000;

/// A permutation of {0, ..., n-1}, stored as its image vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if (i as usize) >= n || seen[i as usize] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[i as usize] = true;
        }
        Ok(Perm(images))
    }

    /// Product of cycles like "(0 1 2)(3 4)"; points may be separated by
    /// spaces or commas.
    pub fn from_cycles(n: usize, s: &str) -> Result<Perm> {
        let mut images: Vec<u8> = (0..n as u8).collect();
        let s = s.trim();
        if s.is_empty() {
            return Ok(Perm(images));
        }
        if !s.starts_with('(') {
            return Err(Error::Parse(format!("expected cycle notation, got '{s}'")));
        }
        for cyc in s.split(')') {
            let cyc = cyc.trim();
            if cyc.is_empty() {
                continue;
            }
            let cyc = cyc
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in '{s}'")))?;
            let pts: Vec<usize> = cyc
                .split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point '{t}'")))
                })
                .collect::<Result<_>>()?;
            if pts.iter().any(|&p| p >= n) {
                return Err(Error::InvalidPermutation(format!(
                    "point out of range in '{s}' for n = {n}"
                )));
            }
            for w in 0..pts.len() {
                let from = pts[w];
                let to = pts[(w + 1) % pts.len()];
                images[from] = to as u8;
            }
        }
        Perm::from_images(images)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.0[point] as usize
    }

    /// (self * other)(x) = self(other(x)).
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &img) in self.0.iter().enumerate() {
            inv[img as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &img)| i == img as usize)
    }
}

/// A materialized permutation group.
#[derive(Clone, Debug)]
pub struct PermGroup {
    n: usize,
    generators: Vec<Perm>,
    /// Sorted element list; closure of the generators.
    elements: Vec<Perm>,
}

impl PermGroup {
    pub fn from_generators(n: usize, generators: Vec<Perm>) -> Result<PermGroup> {
        for g in &generators {
            if g.n() != n {
                return Err(Error::InvalidPermutation(format!(
                    "generator on {} points in a group on {n}",
                    g.n()
                )));
            }
        }
        let elements = close(n, &generators)?;
        Ok(PermGroup {
            n,
            generators,
            elements,
        })
    }

    /// Parses either a builtin name or a semicolon-separated list of cycle
    /// products, e.g. "(0 1 2 3 4); (0 1)".
    pub fn parse(input: &str, n_hint: Option<usize>) -> Result<PermGroup> {
        let input = input.trim();
        if input.starts_with('(') {
            let n = match n_hint {
                Some(n) => n,
                None => {
                    // largest point mentioned + 1
                    let max = input
                        .split(|c: char| !c.is_ascii_digit())
                        .filter(|t| !t.is_empty())
                        .map(|t| t.parse::<usize>().unwrap_or(0))
                        .max()
                        .unwrap_or(0);
                    max + 1
                }
            };
            let gens = input
                .split(';')
                .filter(|s| !s.trim().is_empty())
                .map(|s| Perm::from_cycles(n, s))
                .collect::<Result<Vec<_>>>()?;
            PermGroup::from_generators(n, gens)
        } else {
            builtin(input)
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Transitivity on ordered k-tuples of distinct points, k in {1, 2}.
    pub fn is_k_transitive(&self, k: usize) -> Result<bool> {
        if k == 0 || k > 2 {
            return Err(Error::Unsupported(format!("k = {k} (only k = 1, 2)")));
        }
        if k > self.n {
            return Err(Error::Unsupported(format!(
                "k = {k} exceeds the point count {}",
                self.n
            )));
        }
        match k {
            1 => {
                let orbit = self.orbit_of(&[0]);
                Ok(orbit.len() == self.n)
            }
            _ => {
                if self.n < 2 {
                    return Ok(true);
                }
                let orbit = self.orbit_of(&[0, 1]);
                Ok(orbit.len() == self.n * (self.n - 1))
            }
        }
    }

    fn orbit_of(&self, start: &[usize]) -> HashSet<Vec<usize>> {
        let mut orbit = HashSet::new();
        let mut queue = VecDeque::new();
        orbit.insert(start.to_vec());
        queue.push_back(start.to_vec());
        while let Some(t) = queue.pop_front() {
            for g in &self.generators {
                let img: Vec<usize> = t.iter().map(|&p| g.apply(p)).collect();
                if orbit.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        orbit
    }

    /// The commutator subgroup, as the closure of generator commutators
    /// under conjugation by the group generators.
    pub fn derived_subgroup(&self) -> Result<PermGroup> {
        let mut sub_gens: Vec<Perm> = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = a
                    .compose(b)
                    .compose(&a.inverse())
                    .compose(&b.inverse());
                if !c.is_identity() && !sub_gens.contains(&c) {
                    sub_gens.push(c);
                }
            }
        }
        let mut elements = close(self.n, &sub_gens)?;
        loop {
            let mut added = false;
            let snapshot = sub_gens.clone();
            for g in &self.generators {
                let g_inv = g.inverse();
                for h in &snapshot {
                    let conj = g.compose(h).compose(&g_inv);
                    if elements.binary_search(&conj).is_err() {
                        sub_gens.push(conj);
                        elements = close(self.n, &sub_gens)?;
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        Ok(PermGroup {
            n: self.n,
            generators: sub_gens,
            elements,
        })
    }

    pub fn is_perfect(&self) -> Result<bool> {
        Ok(self.derived_subgroup()?.order() == self.order())
    }

    /// Derived series reaches the trivial group.
    pub fn is_solvable(&self) -> Result<bool> {
        let mut current = self.clone();
        loop {
            if current.order() == 1 {
                return Ok(true);
            }
            let next = current.derived_subgroup()?;
            if next.order() == current.order() {
                return Ok(false);
            }
            current = next;
        }
    }
}

fn close(n: usize, generators: &[Perm]) -> Result<Vec<Perm>> {
    let id = Perm::identity(n);
    let mut seen: HashSet<Perm> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::new();
    queue.push_back(id);
    while let Some(e) = queue.pop_front() {
        for g in generators {
            let prod = e.compose(g);
            if !seen.contains(&prod) {
                if seen.len() >= GROUP_ORDER_GUARD {
                    return Err(Error::GroupTooLarge);
                }
                seen.insert(prod.clone());
                queue.push_back(prod);
            }
        }
    }
    let mut elements: Vec<Perm> = seen.into_iter().collect();
    elements.sort();
    Ok(elements)
}

/// Named groups with their standard actions.
///
/// `A<n>` and `S<n>` act on n points, `C<n>` is the n-cycle, `PSL2(q)` acts
/// on the q+1 points of the projective line (q = 5, 7), `PSL3(2)` on the 7
/// points of the projective plane over F_2, and `GL(2,F2)` on the 3 nonzero
/// vectors of F_2^2.
pub fn builtin(name: &str) -> Result<PermGroup> {
    let canon: String = name
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '_')
        .collect::<String>()
        .to_uppercase();
    let expect_order: usize;
    let group = if let Some(num) = canon.strip_prefix('A') {
        let n: usize = parse_n(num, &canon)?;
        if n < 3 {
            return Err(Error::UnknownGroup(name.into()));
        }
        expect_order = factorial(n) / 2;
        let three_cycle = Perm::from_cycles(n, "(0 1 2)")?;
        let big = if n % 2 == 1 {
            full_cycle(n, 0)
        } else {
            full_cycle(n, 1)
        };
        PermGroup::from_generators(n, vec![three_cycle, big])?
    } else if let Some(num) = canon.strip_prefix('S') {
        let n: usize = parse_n(num, &canon)?;
        if n < 2 {
            return Err(Error::UnknownGroup(name.into()));
        }
        expect_order = factorial(n);
        let transposition = Perm::from_cycles(n, "(0 1)")?;
        let cycle = full_cycle(n, 0);
        PermGroup::from_generators(n, vec![transposition, cycle])?
    } else if let Some(num) = canon.strip_prefix('C') {
        let n: usize = parse_n(num, &canon)?;
        expect_order = n;
        PermGroup::from_generators(n, vec![full_cycle(n, 0)])?
    } else if canon == "PSL2(5)" || canon == "PSL2(7)" {
        let q: usize = if canon == "PSL2(5)" { 5 } else { 7 };
        expect_order = q * (q * q - 1) / 2;
        PermGroup::from_generators(q + 1, psl2_generators(q as u64))?
    } else if canon == "PSL3(2)" {
        expect_order = 168;
        // transvection e2 -> e1 + e2 and the coordinate 3-cycle, acting on
        // the nonzero vectors of F_2^3 (point i <-> bit pattern i + 1)
        let transvection = gl_perm(7, |v| {
            let b1 = v & 1;
            let b2 = (v >> 1) & 1;
            let b3 = (v >> 2) & 1;
            (b1 ^ b2) | (b2 << 1) | (b3 << 2)
        });
        let rotate = gl_perm(7, |v| {
            let b1 = v & 1;
            let b2 = (v >> 1) & 1;
            let b3 = (v >> 2) & 1;
            (b3) | (b1 << 1) | (b2 << 2)
        });
        PermGroup::from_generators(7, vec![transvection?, rotate?])?
    } else if canon == "GL(2,F2)" {
        expect_order = 6;
        let shear = gl_perm(3, |v| {
            let b1 = v & 1;
            let b2 = (v >> 1) & 1;
            (b1 ^ b2) | (b2 << 1)
        });
        let swap = gl_perm(3, |v| {
            let b1 = v & 1;
            let b2 = (v >> 1) & 1;
            b2 | (b1 << 1)
        });
        PermGroup::from_generators(3, vec![shear?, swap?])?
    } else {
        return Err(Error::UnknownGroup(name.into()));
    };
    if group.order() != expect_order {
        return Err(Error::Internal(format!(
            "builtin {name}: order {} != expected {expect_order}",
            group.order()
        )));
    }
    Ok(group)
}

fn parse_n(num: &str, canon: &str) -> Result<usize> {
    num.parse()
        .map_err(|_| Error::UnknownGroup(canon.to_string()))
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn full_cycle(n: usize, start: usize) -> Perm {
    let mut images: Vec<u8> = (0..n as u8).collect();
    for i in start..n {
        images[i] = if i + 1 < n { (i + 1) as u8 } else { start as u8 };
    }
    Perm::from_images(images).expect("cycle is a permutation")
}

/// Action of an invertible linear map on nonzero bit vectors; point i
/// corresponds to vector i + 1.
fn gl_perm(n_points: usize, map: impl Fn(usize) -> usize) -> Result<Perm> {
    let images: Vec<u8> = (0..n_points)
        .map(|i| (map(i + 1) - 1) as u8)
        .collect();
    Perm::from_images(images)
}

/// Generators x -> x + 1 and x -> -1/x of PSL2(F_q) on the projective line;
/// points 0..q-1 are the field elements and q is infinity.
fn psl2_generators(q: u64) -> Vec<Perm> {
    let n = (q + 1) as usize;
    let inf = q as usize;
    let mut shift: Vec<u8> = (0..n as u8).collect();
    for x in 0..q {
        shift[x as usize] = ((x + 1) % q) as u8;
    }
    let mut inv_neg: Vec<u8> = (0..n as u8).collect();
    inv_neg[0] = inf as u8;
    inv_neg[inf] = 0;
    for x in 1..q {
        // -1/x mod q
        let xinv = mod_inverse(x, q);
        inv_neg[x as usize] = ((q - xinv) % q) as u8;
    }
    vec![
        Perm::from_images(shift).expect("shift is a permutation"),
        Perm::from_images(inv_neg).expect("inversion is a permutation"),
    ]
}

fn mod_inverse(x: u64, q: u64) -> u64 {
    // q prime, x != 0
    let mut result = 1u64;
    let mut base = x % q;
    let mut e = q - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % q;
        }
        base = base * base % q;
        e >>= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_a_cycle() {
        let g = PermGroup::parse("(0 1 2 3 4)", None).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.n(), 5);
    }

    #[test]
    fn closure_generates_a5() {
        let five = Perm::from_cycles(5, "(0 1 2 3 4)").unwrap();
        let three = Perm::from_cycles(5, "(0 1 2)").unwrap();
        let g = PermGroup::from_generators(5, vec![five, three]).unwrap();
        assert_eq!(g.order(), 60);
    }

    #[test]
    fn builtin_orders() {
        for (name, order) in [
            ("A5", 60),
            ("S5", 120),
            ("C5", 5),
            ("A7", 2520),
            ("S7", 5040),
            ("C7", 7),
            ("PSL2(5)", 60),
            ("PSL2(7)", 168),
            ("PSL3(2)", 168),
            ("GL(2,F2)", 6),
            ("S8", 40320),
        ] {
            assert_eq!(builtin(name).unwrap().order(), order, "{name}");
        }
    }

    #[test]
    fn guard_rejects_s9() {
        assert_eq!(builtin("S9").err(), Some(Error::GroupTooLarge));
    }

    #[test]
    fn transitivity() {
        assert!(builtin("PSL3(2)").unwrap().is_k_transitive(2).unwrap());
        assert!(builtin("PSL2(5)").unwrap().is_k_transitive(2).unwrap());
        assert!(builtin("A5").unwrap().is_k_transitive(2).unwrap());
        assert!(!builtin("C5").unwrap().is_k_transitive(2).unwrap());
        assert!(builtin("C5").unwrap().is_k_transitive(1).unwrap());
    }

    #[test]
    fn perfect_and_solvable() {
        assert!(builtin("A5").unwrap().is_perfect().unwrap());
        assert!(builtin("A7").unwrap().is_perfect().unwrap());
        assert!(builtin("PSL3(2)").unwrap().is_perfect().unwrap());
        assert!(!builtin("S5").unwrap().is_perfect().unwrap());
        assert!(!builtin("C5").unwrap().is_perfect().unwrap());
        assert!(builtin("GL(2,F2)").unwrap().is_solvable().unwrap());
        assert!(!builtin("A5").unwrap().is_solvable().unwrap());
        assert!(builtin("C7").unwrap().is_solvable().unwrap());
        // GL(1, F2) is trivial
        let trivial = PermGroup::from_generators(1, vec![]).unwrap();
        assert!(trivial.is_solvable().unwrap());
        assert!(trivial.is_perfect().unwrap()); // trivially equal to its derived subgroup
    }

    #[test]
    fn derived_series_of_s5() {
        let s5 = builtin("S5").unwrap();
        let d = s5.derived_subgroup().unwrap();
        assert_eq!(d.order(), 60); // A5
        let dd = d.derived_subgroup().unwrap();
        assert_eq!(dd.order(), 60); // A5 is perfect
    }

    #[test]
    fn cycle_parser_round_trip() {
        let p = Perm::from_cycles(7, "(0 1 2 3 4)(5 6)").unwrap();
        assert_eq!(p.apply(4), 0);
        assert_eq!(p.apply(5), 6);
        assert_eq!(p.apply(6), 5);
        assert!(Perm::from_cycles(5, "(0 9)").is_err());
        assert!(PermGroup::parse("(0 1); (1 2)", Some(3)).unwrap().order() == 6);
    }

    #[test]
    fn compose_and_inverse() {
        let p = Perm::from_cycles(9, "(0 2 1)(3 4 7 8 5)").unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        let q = Perm::from_cycles(9, "(1 5)").unwrap();
        // (p * q)(x) = p(q(x))
        assert_eq!(p.compose(&q).apply(1), p.apply(5));
    }
}
