//! Real Clifford algebra representations by signed permutation matrices.
//!
//! Gammas are produced by the tensor recursion Cl(m, m) → Cl(m+1, m+1)
//! followed by a short sequence of signature moves:
//!
//! * flip: four generators of equal square are multiplied by their volume
//!   element, which changes all four squares;
//! * collapse: three generators of equal square are replaced by their product;
//! * extend: for an even count, the product of all generators is adjoined;
//! * drop: a generator is forgotten.
//!
//! Flips and collapses keep the product of all generators diagonal, so every
//! even signature reached without a drop has a chirality operator that is
//! block diagonal after a reordering of the basis.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::exact::{MonomialMatrix, Rational};
use crate::{Error, Result};

/// Largest supported representation is `2^MAX_LOG_DIM`.
pub const MAX_LOG_DIM: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    pub p: usize,
    pub q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Signature> {
        if p + q == 0 {
            return Err(Error::Precondition("signature needs at least one generator".into()));
        }
        Ok(Signature { p, q })
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    /// `(p - q) mod 8`.
    pub fn class_index(&self) -> usize {
        (self.p as i64 - self.q as i64).rem_euclid(8) as usize
    }

    /// Real dimension of an irreducible module of the Clifford algebra.
    pub fn minimal_real_dim(&self) -> usize {
        let n = self.n();
        let exp = match self.class_index() {
            0 | 2 => n / 2,
            1 => (n - 1) / 2,
            3 | 5 | 7 => n.div_ceil(2),
            _ => n / 2 + 1,
        };
        1 << exp
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Signature> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (p, q) = t.split_once(',').ok_or_else(|| Error::Parse(format!("signature {s}")))?;
        let parse = |x: &str| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("signature {s}")));
        Signature::new(parse(p)?, parse(q)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    /// Four generators squaring to `-1` become `+1` (or the reverse).
    Flip {
        to_positive: bool,
    },
    /// Three generators squaring to `sign` become one squaring to `-sign`.
    Collapse {
        sign: i8,
    },
    Extend,
    Drop {
        sign: i8,
    },
}

/// Signature reached by `mv` from `(p, q)`, if the move applies.
fn apply_move((p, q): (usize, usize), mv: Move) -> Option<(usize, usize)> {
    match mv {
        Move::Flip { to_positive: true } => (q >= 4).then(|| (p + 4, q - 4)),
        Move::Flip { to_positive: false } => (p >= 4).then(|| (p - 4, q + 4)),
        Move::Collapse { sign: -1 } => (q >= 3).then(|| (p + 1, q - 3)),
        Move::Collapse { .. } => (p >= 3).then(|| (p - 3, q + 1)),
        Move::Extend => ((p + q) % 2 == 0).then(|| if volume_square(p, q) > 0 { (p + 1, q) } else { (p, q + 1) }),
        Move::Drop { sign: 1 } => (p >= 1 && p + q > 1).then(|| (p - 1, q)),
        Move::Drop { .. } => (q >= 1 && p + q > 1).then(|| (p, q - 1)),
    }
}

/// Square of the product of all generators, `(-1)^{n(n-1)/2 + q}`.
pub fn volume_square(p: usize, q: usize) -> i8 {
    let n = p + q;
    if (n * (n.saturating_sub(1)) / 2 + q).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

const CLEAN_MOVES: [Move; 5] = [
    Move::Flip { to_positive: true },
    Move::Flip { to_positive: false },
    Move::Collapse { sign: -1 },
    Move::Collapse { sign: 1 },
    Move::Extend,
];

const DROP_MOVES: [Move; 2] = [Move::Drop { sign: 1 }, Move::Drop { sign: -1 }];

fn bfs(m: usize, target: (usize, usize), with_drops: bool) -> Option<Vec<Move>> {
    let start = (m, m);
    let bound = 2 * m + 1;
    let mut parent: BTreeMap<(usize, usize), ((usize, usize), Move)> = BTreeMap::new();
    let mut queue = VecDeque::from([start]);
    let moves: Vec<Move> = CLEAN_MOVES.iter().chain(if with_drops { &DROP_MOVES[..] } else { &[] }).copied().collect();
    while let Some(s) = queue.pop_front() {
        if s == target {
            let mut path = Vec::new();
            let mut cur = s;
            while cur != start {
                let (prev, mv) = parent[&cur];
                path.push(mv);
                cur = prev;
            }
            path.reverse();
            return Some(path);
        }
        for &mv in &moves {
            if let Some(t) = apply_move(s, mv) {
                if t.0 <= bound && t.1 <= bound && t != start && !parent.contains_key(&t) {
                    parent.insert(t, (s, mv));
                    queue.push_back(t);
                }
            }
        }
    }
    None
}

/// Smallest `m` and move sequence from Cl(m, m) to `sig` with `2^m ≥ min_dim`.
/// Sequences without drops are preferred at each `m`.
pub fn construction_path(sig: Signature, min_dim: usize) -> Option<(usize, Vec<Move>)> {
    let first = (min_dim.max(2) as f64).log2().ceil() as usize;
    (first.max(1)..=MAX_LOG_DIM)
        .find_map(|m| bfs(m, (sig.p, sig.q), false).or_else(|| bfs(m, (sig.p, sig.q), true)).map(|path| (m, path)))
}

/// Gamma matrices of Cl(m, m) as `(matrix, square)`.
fn split_signature_gammas(m: usize) -> Vec<(MonomialMatrix, i8)> {
    let s1 = MonomialMatrix::new(vec![(1, 1), (0, 1)]).expect("σ1");
    let eps = MonomialMatrix::new(vec![(1, -1), (0, 1)]).expect("ε");
    let s3 = MonomialMatrix::new(vec![(0, 1), (1, -1)]).expect("σ3");
    let mut gens = vec![(s1.clone(), 1), (eps.clone(), -1)];
    for _ in 1..m {
        let id = MonomialMatrix::identity(gens[0].0.dim());
        let mut next: Vec<_> = gens.iter().map(|(g, s)| (g.kron(&s3), *s)).collect();
        next.push((id.kron(&s1), 1));
        next.push((id.kron(&eps), -1));
        gens = next;
    }
    gens
}

fn product<'a>(it: impl IntoIterator<Item = &'a MonomialMatrix>, dim: usize) -> MonomialMatrix {
    it.into_iter().fold(MonomialMatrix::identity(dim), |acc, g| acc.mul(g).expect("equal dims"))
}

fn last_with_sign(gens: &[(MonomialMatrix, i8)], sign: i8, count: usize) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..gens.len()).rev().filter(|&i| gens[i].1 == sign).take(count).collect();
    idx.reverse();
    idx
}

fn replay(m: usize, path: &[Move]) -> Vec<(MonomialMatrix, i8)> {
    let mut gens = split_signature_gammas(m);
    let dim = 1 << m;
    for &mv in path {
        match mv {
            Move::Flip { to_positive } => {
                let from = if to_positive { -1 } else { 1 };
                let block = last_with_sign(&gens, from, 4);
                let omega = product(block.iter().map(|&i| &gens[i].0), dim);
                for &i in &block {
                    gens[i] = (gens[i].0.mul(&omega).expect("equal dims"), -from);
                }
            }
            Move::Collapse { sign } => {
                let block = last_with_sign(&gens, sign, 3);
                let prod = product(block.iter().map(|&i| &gens[i].0), dim);
                gens[block[0]] = (prod, -sign);
                gens.remove(block[2]);
                gens.remove(block[1]);
            }
            Move::Extend => {
                let prod = product(gens.iter().map(|(g, _)| g), dim);
                let sq = prod.mul(&prod).expect("equal dims").as_scalar().expect("volume squares to a scalar");
                gens.push((prod, sq));
            }
            Move::Drop { sign } => {
                let i = last_with_sign(&gens, sign, 1)[0];
                gens.remove(i);
            }
        }
    }
    gens
}

/// Gamma matrices for one signature; the first `p` square to `+1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliffordRep {
    sig: Signature,
    dim: usize,
    gammas: Vec<MonomialMatrix>,
    metric: Vec<i8>,
    /// Size of the `+1` chirality block when the basis is chirally ordered.
    chiral_plus: Option<usize>,
}

/// Representation of minimal reachable dimension.
pub fn build_rep(sig: Signature) -> Result<CliffordRep> {
    build_rep_min_dim(sig, 1)
}

/// Representation of dimension at least `min_dim`.
pub fn build_rep_min_dim(sig: Signature, min_dim: usize) -> Result<CliffordRep> {
    let sig = Signature::new(sig.p, sig.q)?;
    let (m, path) = construction_path(sig, min_dim).ok_or_else(|| {
        Error::Construction(format!("{sig} is not reachable with real monomial gammas of dimension ≤ 2^{MAX_LOG_DIM}"))
    })?;
    let gens = replay(m, &path);
    let (pos, neg): (Vec<_>, Vec<_>) = gens.into_iter().partition(|(_, s)| *s > 0);
    let metric: Vec<i8> = pos.iter().chain(&neg).map(|(_, s)| *s).collect();
    let mut gammas: Vec<MonomialMatrix> = pos.into_iter().chain(neg).map(|(g, _)| g).collect();
    let dim = 1 << m;

    let mut chiral_plus = None;
    if sig.n() % 2 == 0 {
        let vol = product(&gammas, dim);
        if vol.is_diagonal() && volume_square(sig.p, sig.q) > 0 {
            let mut perm: Vec<usize> = (0..dim).filter(|&i| vol.get(i, i) > 0).collect();
            chiral_plus = Some(perm.len());
            perm.extend((0..dim).filter(|&i| vol.get(i, i) < 0));
            gammas = gammas.iter().map(|g| g.permute_basis(&perm)).collect();
        }
    }
    let rep = CliffordRep { sig, dim, gammas, metric, chiral_plus };
    rep.verify()?;
    Ok(rep)
}

impl CliffordRep {
    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gammas(&self) -> &[MonomialMatrix] {
        &self.gammas
    }

    pub fn gamma(&self, mu: usize) -> &MonomialMatrix {
        &self.gammas[mu]
    }

    /// Diagonal of the metric: `+1` for the first `p` generators, then `-1`.
    pub fn metric(&self) -> &[i8] {
        &self.metric
    }

    pub fn eta(&self, mu: usize) -> i8 {
        self.metric[mu]
    }

    /// Dimensions of the `+1` and `-1` chiral blocks, which are contiguous.
    pub fn chiral_dims(&self) -> Option<(usize, usize)> {
        self.chiral_plus.map(|n| (n, self.dim - n))
    }

    /// Product of all gammas in order.
    pub fn volume(&self) -> MonomialMatrix {
        product(&self.gammas, self.dim)
    }

    /// Checks `γ_μ γ_ν + γ_ν γ_μ = 2 η_μν I` exactly.
    pub fn verify(&self) -> Result<()> {
        if self.gammas.len() != self.sig.n() {
            return Err(Error::Construction(format!("{} gammas for {}", self.gammas.len(), self.sig)));
        }
        for (mu, g) in self.gammas.iter().enumerate() {
            if g.dim() != self.dim {
                return Err(Error::Construction(format!("γ{mu} has dimension {}", g.dim())));
            }
            if g.mul(g)?.as_scalar() != Some(self.metric[mu]) {
                return Err(Error::Construction(format!("γ{mu}² ≠ {}", self.metric[mu])));
            }
            for nu in mu + 1..self.gammas.len() {
                let h = &self.gammas[nu];
                if h.mul(g)? != g.mul(h)?.neg() {
                    return Err(Error::Construction(format!("γ{mu} and γ{nu} do not anticommute")));
                }
            }
        }
        Ok(())
    }

    /// Sparse listing `mu,row,col,sign` of every nonzero entry.
    pub fn triplets(&self) -> String {
        let mut out = String::from("mu,row,col,sign\n");
        for (mu, g) in self.gammas.iter().enumerate() {
            let mut entries: Vec<(usize, usize, i8)> = g.entries().enumerate().map(|(c, (r, s))| (r, c, s)).collect();
            entries.sort_unstable();
            for (r, c, s) in entries {
                out.push_str(&format!("{mu},{r},{c},{s}\n"));
            }
        }
        out
    }
}

/// Product of all gammas; squares to `+I` exactly when `p - q ≡ 0 mod 4`.
/// In a chirally ordered basis it is `diag(+I, -I)`.
pub fn chirality(rep: &CliffordRep) -> Result<MonomialMatrix> {
    if rep.sig.n() % 2 == 1 {
        return Err(Error::Chirality(format!("{} has an odd number of generators", rep.sig)));
    }
    Ok(rep.volume())
}

/// Charge conjugation: `C γ_μ C⁻¹ = transpose_sign · γ_μᵀ` and `Cᵀ = symmetry · C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BilinearForm {
    pub c: MonomialMatrix,
    pub symmetry: i8,
    pub transpose_sign: i8,
}

impl BilinearForm {
    /// Verifies both defining relations against `rep`.
    pub fn check(&self, rep: &CliffordRep) -> bool {
        let ct = self.c.transpose();
        let sym_ok = match self.symmetry {
            1 => ct == self.c,
            -1 => ct == self.c.neg(),
            _ => false,
        };
        sym_ok
            && rep.gammas.iter().all(|g| {
                let lhs = self.c.mul(g).expect("dims");
                let rhs = g.transpose().mul(&self.c).expect("dims");
                if self.transpose_sign > 0 {
                    lhs == rhs
                } else {
                    lhs == rhs.neg()
                }
            })
    }
}

fn form_from(rep: &CliffordRep, c: MonomialMatrix, t: i8) -> Option<BilinearForm> {
    let symmetry = c.symmetry()?;
    let form = BilinearForm { c, symmetry, transpose_sign: t };
    form.check(rep).then_some(form)
}

/// Products `γ_S` with `γ_S γ_μ γ_S⁻¹ = t · η_μ · γ_μ = t · γ_μᵀ`.
fn gamma_product_candidates(rep: &CliffordRep, t: i8) -> Vec<MonomialMatrix> {
    let mut out = Vec::new();
    for parity in [1i8, -1] {
        // μ ∈ S exactly when parity · t · η_μ = -1
        let set: Vec<usize> = (0..rep.sig.n()).filter(|&mu| parity * t * rep.metric[mu] == -1).collect();
        let actual = if set.len().is_multiple_of(2) { 1 } else { -1 };
        if actual == parity {
            out.push(product(set.iter().map(|&mu| &rep.gammas[mu]), rep.dim));
        }
    }
    out
}

/// Monomial intertwiner with `C e_0 = e_target`, propagated along the gammas.
fn propagate(rep: &CliffordRep, transposes: &[MonomialMatrix], t: i8, target: usize) -> Option<MonomialMatrix> {
    let dim = rep.dim;
    let mut image: Vec<Option<(u32, i8)>> = vec![None; dim];
    let mut used = vec![false; dim];
    let mut next_free = 0usize;
    for seed in 0..dim {
        if image[seed].is_some() {
            continue;
        }
        let start = if seed == 0 {
            target
        } else {
            while next_free < dim && used[next_free] {
                next_free += 1;
            }
            next_free
        };
        if start >= dim || used[start] {
            return None;
        }
        image[seed] = Some((start as u32, 1));
        used[start] = true;
        let mut queue = VecDeque::from([seed]);
        while let Some(j) = queue.pop_front() {
            let (r, c) = image[j].expect("assigned");
            for (g, gt) in rep.gammas.iter().zip(transposes) {
                // C γ e_j = σ C e_k with (k, σ) = γ.col(j); equals t γᵀ C e_j
                let (k, sigma) = g.col(j);
                let (r2, s2) = gt.col(r as usize);
                let want = (r2 as u32, sigma * t * c * s2);
                match image[k] {
                    Some(v) if v != want => return None,
                    Some(_) => {}
                    None => {
                        if used[r2] {
                            return None;
                        }
                        used[r2] = true;
                        image[k] = Some(want);
                        queue.push_back(k);
                    }
                }
            }
        }
    }
    MonomialMatrix::new(image.into_iter().map(|v| v.expect("all assigned")).collect()).ok()
}

/// All monomial charge conjugations for one transpose sign, lazily.
///
/// Products of gammas are tried first; the fallback propagates a candidate
/// image of the first basis vector through the gamma action.
pub fn conjugations(rep: &CliffordRep, transpose_sign: i8) -> impl Iterator<Item = BilinearForm> + '_ {
    let t = transpose_sign;
    let transposes: Vec<MonomialMatrix> = rep.gammas.iter().map(MonomialMatrix::transpose).collect();
    let mut seen: Vec<MonomialMatrix> = Vec::new();
    let mut first = gamma_product_candidates(rep, t).into_iter();
    let mut target = 0usize;
    std::iter::from_fn(move || loop {
        let cand = match first.next() {
            Some(c) => c,
            None => {
                if target >= rep.dim {
                    return None;
                }
                target += 1;
                match propagate(rep, &transposes, t, target - 1) {
                    Some(c) => c,
                    None => continue,
                }
            }
        };
        if seen.iter().any(|s| *s == cand || *s == cand.neg()) {
            continue;
        }
        seen.push(cand.clone());
        if let Some(form) = form_from(rep, cand, t) {
            return Some(form);
        }
    })
}

pub fn conjugation(rep: &CliffordRep, transpose_sign: i8) -> Result<BilinearForm> {
    conjugations(rep, transpose_sign).next().ok_or(Error::NoConjugation {
        p: rep.sig.p,
        q: rep.sig.q,
        sign: transpose_sign,
    })
}

/// Conjugations for both transpose signs, `+1` first, skipping absent ones.
pub fn all_conjugations(rep: &CliffordRep) -> Vec<BilinearForm> {
    [1, -1].into_iter().filter_map(|t| conjugation(rep, t).ok()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpinorClass {
    Majorana,
    #[serde(rename = "Majorana-Weyl")]
    MajoranaWeyl,
    #[serde(rename = "symplectic-Majorana")]
    SymplecticMajorana,
    Dirac,
}

impl fmt::Display for SpinorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpinorClass::Majorana => "Majorana",
            SpinorClass::MajoranaWeyl => "Majorana-Weyl",
            SpinorClass::SymplecticMajorana => "symplectic-Majorana",
            SpinorClass::Dirac => "Dirac",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealityClass {
    pub class: SpinorClass,
    pub chiral: bool,
}

/// Spinor reality from `(p - q) mod 8`, read off the real, complex or
/// quaternionic type of the Clifford algebra.
pub fn reality_class(sig: Signature) -> RealityClass {
    let class = match sig.class_index() {
        0 => SpinorClass::MajoranaWeyl,
        1 | 2 => SpinorClass::Majorana,
        3 | 7 => SpinorClass::Dirac,
        _ => SpinorClass::SymplecticMajorana,
    };
    RealityClass { class, chiral: sig.n().is_multiple_of(2) && sig.class_index() == 0 }
}

/// Increasing multi-indices of length `k` from `0..n`, lexicographic.
pub fn multi_indices(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Antisymmetrized products `γ_[μ1…μk]` in the order of [`multi_indices`].
/// Distinct gammas anticommute, so each is the plain ordered product.
pub fn antisym_gamma(rep: &CliffordRep, k: usize) -> Result<Vec<MonomialMatrix>> {
    if k > rep.sig.n() {
        return Err(Error::Precondition(format!("k = {k} exceeds {} generators", rep.sig.n())));
    }
    Ok(multi_indices(rep.sig.n(), k)
        .iter()
        .map(|idx| product(idx.iter().map(|&mu| &rep.gammas[mu]), rep.dim))
        .collect())
}

/// `η^{μ1μ1} ⋯ η^{μkμk}` for a multi-index.
pub fn raised_sign(rep: &CliffordRep, idx: &[usize]) -> i8 {
    idx.iter().map(|&mu| rep.metric[mu]).product()
}

fn check_len(rep: &CliffordRep, v: &[Rational]) -> Result<()> {
    if v.len() != rep.dim {
        return Err(Error::DimensionMismatch(format!("spinor of length {} for dimension {}", v.len(), rep.dim)));
    }
    Ok(())
}

/// `Σ_I γ^I ψ (ψᵀ C γ_I ψ)` over increasing multi-indices of length `k`.
pub fn fierz_residual(rep: &CliffordRep, c: &BilinearForm, k: usize, psi: &[Rational]) -> Result<Vec<Rational>> {
    fierz_residual_polarized(rep, c, k, [psi, psi, psi]).map(|v| {
        let third = Rational::new(1, 3);
        v.into_iter().map(|x| x * &third).collect()
    })
}

/// Cyclic sum `Σ_I η^I [(ψ1ᵀ C γ_I ψ2) γ_I ψ3 + (ψ2ᵀ C γ_I ψ3) γ_I ψ1 + (ψ3ᵀ C γ_I ψ1) γ_I ψ2]`.
pub fn fierz_residual_polarized(
    rep: &CliffordRep,
    c: &BilinearForm,
    k: usize,
    psi: [&[Rational]; 3],
) -> Result<Vec<Rational>> {
    for v in psi {
        check_len(rep, v)?;
    }
    let mut acc = vec![Rational::ZERO; rep.dim];
    let gammas = antisym_gamma(rep, k)?;
    for (idx, g) in multi_indices(rep.sig.n(), k).iter().zip(&gammas) {
        let sign = Rational::from(raised_sign(rep, idx));
        let images: Vec<Vec<Rational>> = psi.iter().map(|v| g.apply(v)).collect();
        for (a, b, d) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            let coeff = c.c.bilinear(psi[a], &images[b]);
            if coeff.is_zero() {
                continue;
            }
            let coeff = &coeff * &sign;
            for (x, y) in acc.iter_mut().zip(&images[d]) {
                if !y.is_zero() {
                    *x += &coeff * y;
                }
            }
        }
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BilinearSigns {
    pub transpose_sign: i8,
    pub symmetry: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliffordSummary {
    pub p: usize,
    pub q: usize,
    pub dim: usize,
    pub reality_class: SpinorClass,
    pub chiral: bool,
    pub chiral_dims: Option<(usize, usize)>,
    pub bilinears: Vec<BilinearSigns>,
}

pub fn summary(rep: &CliffordRep) -> CliffordSummary {
    let rc = reality_class(rep.sig);
    CliffordSummary {
        p: rep.sig.p,
        q: rep.sig.q,
        dim: rep.dim,
        reality_class: rc.class,
        chiral: rc.chiral,
        chiral_dims: rep.chiral_dims(),
        bilinears: all_conjugations(rep)
            .into_iter()
            .map(|f| BilinearSigns { transpose_sign: f.transpose_sign, symmetry: f.symmetry })
            .collect(),
    }
}
