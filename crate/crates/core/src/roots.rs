//! Root systems of the simple Lie algebras that appear along the
//! exceptional series, generated by closing the simple roots under the
//! simple reflections.
//!
//! All systems live in the standard orthonormal models (E8 roots have all
//! integer or all half-integer coordinates), so the ambient bilinear form is
//! the identity and every pairing is an exact rational.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::exact::{dot, int, ratio, DenseMatrix, Rational};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
    G,
    F,
    E,
}

/// A simple Lie algebra type such as `E8` or `G2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlgebraLabel {
    family: Family,
    rank: usize,
}

impl AlgebraLabel {
    pub fn new(family: Family, rank: usize) -> Result<AlgebraLabel> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::D => rank >= 4,
            Family::G => rank == 2,
            Family::F => rank == 4,
            Family::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(AlgebraLabel { family, rank })
        } else {
            Err(Error::InvalidLabel(format!("{family:?}{rank}")))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of roots of the simple algebra of this type.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1),
            Family::B => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::G => 12,
            Family::F => 48,
            Family::E => [72, 126, 240][n - 6],
        }
    }

    /// Dimension of the algebra: roots plus Cartan subalgebra.
    pub fn dimension(&self) -> usize {
        self.root_count() + self.rank
    }
}

impl fmt::Display for AlgebraLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for AlgebraLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<AlgebraLabel> {
        let bad = || Error::InvalidLabel(s.to_string());
        let mut chars = s.trim().chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('D') => Family::D,
            Some('G') => Family::G,
            Some('F') => Family::F,
            Some('E') => Family::E,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        AlgebraLabel::new(family, rank)
    }
}

/// A complete root set with its simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    label: AlgebraLabel,
    ambient_dim: usize,
    simple_roots: Vec<Vec<Rational>>,
    roots: Vec<Vec<Rational>>,
}

fn unit(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::ZERO; dim];
    v[i] = Rational::ONE;
    v
}

fn combo(dim: usize, terms: &[(usize, Rational)]) -> Vec<Rational> {
    let mut v = vec![Rational::ZERO; dim];
    for (i, c) in terms {
        v[*i] += c;
    }
    v
}

/// Simple roots in Bourbaki numbering, with the ambient dimension.
fn simple_roots(label: AlgebraLabel) -> (usize, Vec<Vec<Rational>>) {
    let n = label.rank;
    let one = || int(1);
    let neg = || int(-1);
    let diff = |dim: usize, i: usize, j: usize| combo(dim, &[(i, one()), (j, neg())]);
    match label.family {
        Family::A => (n + 1, (0..n).map(|i| diff(n + 1, i, i + 1)).collect()),
        Family::B => {
            let mut s: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            s.push(unit(n, n - 1));
            (n, s)
        }
        Family::D => {
            let mut s: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            s.push(combo(n, &[(n - 2, one()), (n - 1, one())]));
            (n, s)
        }
        // α1 short, α2 long, inside the plane x+y+z = 0
        Family::G => (3, vec![diff(3, 0, 1), combo(3, &[(0, int(-2)), (1, one()), (2, one())])]),
        Family::F => {
            let h = ratio(1, 2);
            let mh = ratio(-1, 2);
            (4, vec![diff(4, 1, 2), diff(4, 2, 3), unit(4, 3), vec![h.clone(), mh.clone(), mh.clone(), mh]])
        }
        Family::E => {
            let h = ratio(1, 2);
            let mh = ratio(-1, 2);
            let mut a1 = vec![mh; 8];
            a1[0] = h.clone();
            a1[7] = h;
            let mut s = vec![a1, combo(8, &[(0, one()), (1, one())]), diff(8, 1, 0)];
            for i in 2..n - 1 {
                s.push(diff(8, i, i - 1));
            }
            (8, s)
        }
    }
}

/// `2(γ, α)/(α, α)` without membership checks.
fn pairing(gamma: &[Rational], alpha: &[Rational]) -> Rational {
    int(2) * dot(gamma, alpha) / dot(alpha, alpha)
}

fn reflect(v: &[Rational], alpha: &[Rational]) -> Vec<Rational> {
    let c = pairing(v, alpha);
    v.iter().zip(alpha).map(|(x, a)| x - &(&c * a)).collect()
}

/// Integer Cartan matrix `a_ij = 2(α_i, α_j)/(α_j, α_j)` in Bourbaki numbering.
pub fn cartan_matrix(label: AlgebraLabel) -> DenseMatrix {
    let (_, simple) = simple_roots(label);
    DenseMatrix::from_fn(simple.len(), simple.len(), |i, j| pairing(&simple[i], &simple[j]))
}

/// Full root set as the closure of the simple roots under simple reflections.
pub fn generate_roots(label: AlgebraLabel) -> RootSystem {
    let (ambient_dim, simple) = simple_roots(label);
    let mut seen: BTreeSet<Vec<Rational>> = simple.iter().cloned().collect();
    let mut frontier: Vec<Vec<Rational>> = simple.clone();
    while let Some(v) = frontier.pop() {
        for alpha in &simple {
            let w = reflect(&v, alpha);
            if !seen.contains(&w) {
                seen.insert(w.clone());
                frontier.push(w);
            }
        }
    }
    RootSystem { label, ambient_dim, simple_roots: simple, roots: seen.into_iter().collect() }
}

impl RootSystem {
    pub fn label(&self) -> AlgebraLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn simple_roots(&self) -> &[Vec<Rational>] {
        &self.simple_roots
    }

    /// All roots in lexicographic order of coordinates.
    pub fn roots(&self) -> &[Vec<Rational>] {
        &self.roots
    }

    /// Gram matrix of the ambient space (orthonormal model).
    pub fn bilinear(&self) -> DenseMatrix {
        DenseMatrix::identity(self.ambient_dim)
    }

    pub fn inner(&self, a: &[Rational], b: &[Rational]) -> Rational {
        dot(a, b)
    }

    pub fn index_of(&self, v: &[Rational]) -> Option<usize> {
        self.roots.binary_search_by(|r| r.as_slice().cmp(v)).ok()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.index_of(v).is_some()
    }

    /// `2(γ, α)/(α, α)` for roots γ and α.
    pub fn coroot_pairing(&self, gamma: &[Rational], alpha: &[Rational]) -> Result<i64> {
        for v in [gamma, alpha] {
            if !self.contains(v) {
                return Err(Error::NotARoot(self.label.to_string()));
            }
        }
        let p = pairing(gamma, alpha);
        p.to_i64().ok_or_else(|| Error::Precondition(format!("non-integral pairing {p} in {}", self.label)))
    }

    pub fn reflect(&self, v: &[Rational], alpha: &[Rational]) -> Vec<Rational> {
        reflect(v, alpha)
    }

    /// Distinct squared root lengths, ascending.
    pub fn squared_lengths(&self) -> Vec<Rational> {
        let set: BTreeSet<Rational> = self.roots.iter().map(|r| dot(r, r)).collect();
        set.into_iter().collect()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.squared_lengths().len() == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(s: &str) -> AlgebraLabel {
        s.parse().unwrap()
    }

    #[test]
    fn label_validation() {
        assert!("E9".parse::<AlgebraLabel>().is_err());
        assert!("G3".parse::<AlgebraLabel>().is_err());
        assert!("C3".parse::<AlgebraLabel>().is_err());
        assert!("D3".parse::<AlgebraLabel>().is_err());
        assert_eq!(label("e8").to_string(), "E8");
        assert_eq!(label("B3").dimension(), 21);
    }

    #[test]
    fn cartan_a2_and_g2() {
        assert_eq!(cartan_matrix(label("A2")), DenseMatrix::from_i64(&[&[2, -1], &[-1, 2]]));
        assert_eq!(cartan_matrix(label("G2")), DenseMatrix::from_i64(&[&[2, -1], &[-3, 2]]));
    }

    #[test]
    fn cartan_e8_has_seven_bonds() {
        let c = cartan_matrix(label("E8"));
        let mut bonds = 0;
        for i in 0..8 {
            assert_eq!(c[(i, i)], int(2));
            for j in i + 1..8 {
                assert_eq!(c[(i, j)], c[(j, i)]);
                if c[(i, j)] == int(-1) {
                    bonds += 1;
                } else {
                    assert!(c[(i, j)].is_zero());
                }
            }
        }
        assert_eq!(bonds, 7);
    }

    #[test]
    fn root_counts() {
        for (s, n) in [("A2", 6), ("G2", 12), ("B3", 18), ("D4", 24), ("F4", 48), ("E6", 72), ("E7", 126), ("E8", 240)]
        {
            let rs = generate_roots(label(s));
            assert_eq!(rs.roots().len(), n, "{s}");
            assert_eq!(label(s).root_count(), n);
        }
    }

    #[test]
    fn e8_coordinates_are_integral_or_half_integral() {
        let rs = generate_roots(label("E8"));
        for r in rs.roots() {
            let all_int = r.iter().all(Rational::is_integer);
            let all_half = r.iter().all(|x| (x * &int(2)).is_integer() && !x.is_integer());
            assert!(all_int || all_half);
            assert_eq!(dot(r, r), int(2));
        }
    }

    #[test]
    fn pairings() {
        let a2 = generate_roots(label("A2"));
        let s = a2.simple_roots();
        assert_eq!(a2.coroot_pairing(&s[0], &s[0]).unwrap(), 2);
        assert_eq!(a2.coroot_pairing(&s[0], &s[1]).unwrap(), -1);
        let g2 = generate_roots(label("G2"));
        let s = g2.simple_roots();
        // long simple root against the short simple coroot
        assert_eq!(g2.coroot_pairing(&s[1], &s[0]).unwrap(), -3);
        assert!(matches!(g2.coroot_pairing(&[int(1), int(0), int(0)], &s[0]), Err(Error::NotARoot(_))));
    }

    #[test]
    fn length_classes() {
        assert_eq!(generate_roots(label("G2")).squared_lengths(), vec![int(2), int(6)]);
        assert_eq!(generate_roots(label("F4")).squared_lengths().len(), 2);
        assert!(generate_roots(label("E7")).is_simply_laced());
        assert!(generate_roots(label("D4")).is_simply_laced());
    }
}
