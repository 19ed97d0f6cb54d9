//! Graded algebras `so(p,q) ⊕ spinors ⊕ scalars` along the four levels of
//! the exceptional series, with brackets built from gamma bilinears.
//!
//! At n = 0 the four levels give f4, e6, e7 and e8. For n ≥ 1 the same
//! bracket ansatz no longer satisfies Jacobi, and [`jacobi_infeasibility`]
//! produces an exact certificate of that.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::clifford::{build_rep, conjugations, BilinearForm, CliffordRep, Signature};
use crate::exact::{solve_linear, verify_certificate, DenseMatrix, MonomialMatrix, Rational, SolveOutcome};
use crate::sample::Sampler;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Der,
    Str0,
    Conf,
    Qconf,
}

impl Level {
    pub const ALL: [Level; 4] = [Level::Der, Level::Str0, Level::Conf, Level::Qconf];

    /// Division algebra dimension of the matching magic-square row.
    pub fn q(&self) -> usize {
        match self {
            Level::Der => 1,
            Level::Str0 => 2,
            Level::Conf => 4,
            Level::Qconf => 8,
        }
    }

    /// Signature of the orthogonal part at step `n`.
    pub fn signature(&self, n: usize) -> Signature {
        let (p, q) = match self {
            Level::Der => (9, 0),
            Level::Str0 => (9, 1),
            Level::Conf => (10, 2),
            Level::Qconf => (12, 4),
        };
        Signature { p: p + 8 * n, q }
    }

    pub fn channels(&self) -> &'static [Channel] {
        use Channel::*;
        match self {
            Level::Der | Level::Qconf => &[SpinorSo],
            Level::Str0 => &[SpinorSo, SpinorScalar],
            Level::Conf => &[SpinorSo, SpinorScalar, PlusPlus, MinusMinus, TransferUp, TransferDown, TopBottom],
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Der => "der",
            Level::Str0 => "str0",
            Level::Conf => "conf",
            Level::Qconf => "qconf",
        })
    }
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Level> {
        match s.to_ascii_lowercase().as_str() {
            "der" => Ok(Level::Der),
            "str0" => Ok(Level::Str0),
            "conf" => Ok(Level::Conf),
            "qconf" => Ok(Level::Qconf),
            _ => Err(Error::Parse(format!("level {s}"))),
        }
    }
}

/// Which chirality carries the spinors; `Primed` swaps the blocks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarization {
    #[default]
    Unprimed,
    Primed,
}

impl FromStr for Polarization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Polarization> {
        match s {
            "unprimed" => Ok(Polarization::Unprimed),
            "primed" => Ok(Polarization::Primed),
            _ => Err(Error::Parse(format!("polarization {s}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Canonical,
    Extended,
}

/// Independent bilinear channels of the bracket.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Channel {
    /// spinor × spinor → so
    SpinorSo,
    /// grade +1 × grade −1 → ℝ·D
    SpinorScalar,
    /// grade +1 × grade +1 → grade +2
    PlusPlus,
    /// grade −1 × grade −1 → grade −2
    MinusMinus,
    /// grade +2 × grade −1 → grade +1
    TransferUp,
    /// grade −2 × grade +1 → grade −1
    TransferDown,
    /// grade +2 × grade −2 → ℝ·D
    TopBottom,
}

impl Channel {
    /// Channels pinned to 1 by rescaling basis vectors.
    pub fn is_normalized(&self) -> bool {
        matches!(self, Channel::SpinorSo | Channel::TransferUp | Channel::TransferDown)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketCoeffs(pub BTreeMap<Channel, Rational>);

impl BracketCoeffs {
    /// Every channel of `level` set to 1.
    pub fn ones(level: Level) -> BracketCoeffs {
        BracketCoeffs(level.channels().iter().map(|&c| (c, Rational::ONE)).collect())
    }

    pub fn get(&self, c: Channel) -> Rational {
        self.0.get(&c).cloned().unwrap_or(Rational::ZERO)
    }

    pub fn set(&mut self, c: Channel, v: Rational) {
        self.0.insert(c, v);
    }
}

fn so_dim(m: usize) -> usize {
    m * (m - 1) / 2
}

/// Total dimension of the level-`n` algebra.
pub fn dimension(level: Level, n: usize) -> usize {
    grade_profile(level, n, Variant::Canonical).expect("canonical").iter().map(|(_, d)| d).sum()
}

/// Grade components `(grade, dim)` in increasing grade.
pub fn grade_profile(level: Level, n: usize, variant: Variant) -> Result<Vec<(i32, usize)>> {
    let sig = level.signature(n);
    let so = so_dim(sig.n());
    let spin = |e: usize| 1usize << (e + 4 * n);
    Ok(match (level, variant) {
        (Level::Der, Variant::Canonical) => vec![(0, so + spin(4))],
        (Level::Str0, Variant::Canonical) => vec![(-1, spin(4)), (0, so + 1), (1, spin(4))],
        (Level::Conf, _) => vec![(-2, 1), (-1, spin(5)), (0, so + 1), (1, spin(5)), (2, 1)],
        (Level::Qconf, Variant::Canonical) => vec![(0, so + spin(7))],
        (Level::Qconf, Variant::Extended) => {
            let e = 14 + 8 * n;
            vec![(-2, e), (-1, spin(6)), (0, so_dim(14 + 8 * n) + 1), (1, spin(6)), (2, e)]
        }
        (l, Variant::Extended) => return Err(Error::Variant(format!("no extended grading for {l}"))),
    })
}

/// Contiguous range of basis indices of the full spinor module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub offset: usize,
    pub len: usize,
}

/// Coordinates of an element; blocks that a level does not use stay empty or zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EPElement {
    /// `m_{μν}` for μ < ν in lexicographic pair order.
    pub so: Vec<Rational>,
    /// Coefficient of the grading generator D.
    pub d: Rational,
    pub top: Rational,
    pub bottom: Rational,
    /// Grade +1 spinor, or the only spinor for der and qconf.
    pub plus: Vec<Rational>,
    pub minus: Vec<Rational>,
}

impl EPElement {
    pub fn is_zero(&self) -> bool {
        self.flatten().iter().all(Rational::is_zero)
    }

    /// All coordinates in the order so, d, top, bottom, plus, minus.
    pub fn flatten(&self) -> Vec<Rational> {
        let mut v = self.so.clone();
        v.push(self.d.clone());
        v.push(self.top.clone());
        v.push(self.bottom.clone());
        v.extend(self.plus.iter().cloned());
        v.extend(self.minus.iter().cloned());
        v
    }

    fn add_assign(&mut self, o: &EPElement) {
        let add = |a: &mut Vec<Rational>, b: &[Rational]| a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        add(&mut self.so, &o.so);
        self.d += &o.d;
        self.top += &o.top;
        self.bottom += &o.bottom;
        add(&mut self.plus, &o.plus);
        add(&mut self.minus, &o.minus);
    }

    pub fn neg(&self) -> EPElement {
        let n = |v: &[Rational]| v.iter().map(|x| -x).collect();
        EPElement {
            so: n(&self.so),
            d: -&self.d,
            top: -&self.top,
            bottom: -&self.bottom,
            plus: n(&self.plus),
            minus: n(&self.minus),
        }
    }
}

/// A level at step `n` with its Clifford data and bracket coefficients.
#[derive(Clone, Debug)]
pub struct EPSpace {
    level: Level,
    n: usize,
    polarization: Polarization,
    rep: CliffordRep,
    form: BilinearForm,
    pairs: Vec<(usize, usize)>,
    /// `γ_μ γ_ν` per pair.
    sigma: Vec<MonomialMatrix>,
    /// `η_μ η_ν` per pair.
    raised: Vec<i8>,
    plus: Block,
    minus: Option<Block>,
    coeffs: BracketCoeffs,
}

fn restriction(c: &MonomialMatrix, rows: Block, cols: Block) -> Option<Option<i8>> {
    // None: C does not pair the blocks; Some(sym): symmetry when rows == cols
    let inside = |r: usize| r >= rows.offset && r < rows.offset + rows.len;
    let hits = (cols.offset..cols.offset + cols.len).filter(|&j| inside(c.col(j).0)).count();
    if hits == 0 {
        return None;
    }
    if rows != cols {
        return Some(None);
    }
    let sym = (cols.offset..cols.offset + cols.len).all(|j| {
        let (r, s) = c.col(j);
        c.get(j, r) == s
    });
    let anti = (cols.offset..cols.offset + cols.len).all(|j| {
        let (r, s) = c.col(j);
        c.get(j, r) == -s
    });
    Some(if sym {
        Some(1)
    } else if anti {
        Some(-1)
    } else {
        None
    })
}

/// Builds the level with the given coefficients, choosing the spinor blocks
/// and a charge conjugation whose restriction has the needed symmetry.
pub fn make_ep(level: Level, n: usize, coeffs: BracketCoeffs) -> Result<EPSpace> {
    make_ep_polarized(level, n, coeffs, Polarization::Unprimed)
}

pub fn make_ep_polarized(level: Level, n: usize, coeffs: BracketCoeffs, polarization: Polarization) -> Result<EPSpace> {
    for c in coeffs.0.keys() {
        if !level.channels().contains(c) {
            return Err(Error::Precondition(format!("channel {c:?} does not exist at level {level}")));
        }
    }
    let sig = level.signature(n);
    let rep = build_rep(sig)?;
    let dim = rep.dim();
    let chiral = |first: bool| -> Result<Block> {
        let (a, b) = rep.chiral_dims().ok_or_else(|| Error::Chirality(format!("{sig} has no real chiral blocks")))?;
        let first = first == (polarization == Polarization::Unprimed);
        Ok(if first { Block { offset: 0, len: a } } else { Block { offset: a, len: b } })
    };
    let (plus, minus) = match level {
        Level::Der => (Block { offset: 0, len: dim }, None),
        Level::Qconf => (chiral(true)?, None),
        Level::Str0 => (chiral(true)?, Some(chiral(false)?)),
        Level::Conf => (chiral(true)?, Some(chiral(true)?)),
    };
    // pairing block and the symmetry its restriction needs
    let (rows, cols, need) = match level {
        Level::Der | Level::Qconf => (plus, plus, Some(1)),
        Level::Str0 => (plus, minus.expect("str0 has two blocks"), None),
        Level::Conf => (plus, plus, Some(-1)),
    };
    let form = [1i8, -1]
        .into_iter()
        .flat_map(|t| conjugations(&rep, t))
        .find(|f| match restriction(&f.c, rows, cols) {
            None => false,
            Some(sym) => need.is_none() || sym == need,
        })
        .ok_or(Error::NoConjugation { p: sig.p, q: sig.q, sign: need.unwrap_or(0) })?;

    let k = sig.n();
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).collect();
    let sigma = pairs.iter().map(|&(a, b)| rep.gamma(a).mul(rep.gamma(b))).collect::<Result<Vec<_>>>()?;
    let raised = pairs.iter().map(|&(a, b)| rep.eta(a) * rep.eta(b)).collect();
    Ok(EPSpace { level, n, polarization, rep, form, pairs, sigma, raised, plus, minus, coeffs })
}

impl EPSpace {
    pub fn level(&self) -> Level {
        self.level
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn polarization(&self) -> Polarization {
        self.polarization
    }

    pub fn rep(&self) -> &CliffordRep {
        &self.rep
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn coeffs(&self) -> &BracketCoeffs {
        &self.coeffs
    }

    pub fn with_coeffs(&self, coeffs: BracketCoeffs) -> EPSpace {
        EPSpace { coeffs, ..self.clone() }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn plus_block(&self) -> Block {
        self.plus
    }

    pub fn minus_block(&self) -> Option<Block> {
        self.minus
    }

    pub fn has_minus(&self) -> bool {
        self.minus.is_some()
    }

    pub fn has_ends(&self) -> bool {
        self.level == Level::Conf
    }

    pub fn has_d(&self) -> bool {
        matches!(self.level, Level::Str0 | Level::Conf)
    }

    pub fn dimension(&self) -> usize {
        self.pairs.len()
            + usize::from(self.has_d())
            + 2 * usize::from(self.has_ends())
            + self.plus.len
            + self.minus.map_or(0, |b| b.len)
    }

    pub fn grade_profile(&self) -> Vec<(i32, usize)> {
        grade_profile(self.level, self.n, Variant::Canonical).expect("canonical")
    }

    pub fn zero(&self) -> EPElement {
        EPElement {
            so: vec![Rational::ZERO; self.pairs.len()],
            d: Rational::ZERO,
            top: Rational::ZERO,
            bottom: Rational::ZERO,
            plus: vec![Rational::ZERO; self.plus.len],
            minus: vec![Rational::ZERO; self.minus.map_or(0, |b| b.len)],
        }
    }

    /// Checks block lengths and that unused scalars vanish.
    pub fn conforms(&self, x: &EPElement) -> Result<()> {
        let z = self.zero();
        let ok = x.so.len() == z.so.len()
            && x.plus.len() == z.plus.len()
            && x.minus.len() == z.minus.len()
            && (self.has_d() || x.d.is_zero())
            && (self.has_ends() || (x.top.is_zero() && x.bottom.is_zero()));
        if ok {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!("element does not fit {} at n = {}", self.level, self.n)))
        }
    }

    pub fn basis_so(&self, pair: usize) -> EPElement {
        let mut x = self.zero();
        x.so[pair] = Rational::ONE;
        x
    }

    pub fn basis_plus(&self, i: usize) -> EPElement {
        let mut x = self.zero();
        x.plus[i] = Rational::ONE;
        x
    }

    pub fn basis_minus(&self, i: usize) -> EPElement {
        let mut x = self.zero();
        x.minus[i] = Rational::ONE;
        x
    }

    pub fn grading_element(&self) -> EPElement {
        let mut x = self.zero();
        x.d = Rational::ONE;
        x
    }

    pub fn top_element(&self) -> EPElement {
        let mut x = self.zero();
        x.top = Rational::ONE;
        x
    }

    pub fn bottom_element(&self) -> EPElement {
        let mut x = self.zero();
        x.bottom = Rational::ONE;
        x
    }

    /// Random spinor parts; with `ends`, random grade ±2 parts as well.
    pub fn random_spinor_element(&self, s: &mut Sampler, ends: bool) -> EPElement {
        let mut x = self.zero();
        x.plus = s.vector(x.plus.len());
        x.minus = s.vector(x.minus.len());
        if ends && self.has_ends() {
            x.top = s.int();
            x.bottom = s.int();
        }
        x
    }

    /// Random element with every block populated.
    pub fn random_element(&self, s: &mut Sampler) -> EPElement {
        let mut x = self.random_spinor_element(s, true);
        x.so = s.vector(x.so.len());
        if self.has_d() {
            x.d = s.int();
        }
        x
    }

    /// Random element with non-integer rational entries.
    pub fn random_rational_element(&self, s: &mut Sampler) -> EPElement {
        let mut x = self.zero();
        x.so = s.ratio_vector(x.so.len());
        x.plus = s.ratio_vector(x.plus.len());
        x.minus = s.ratio_vector(x.minus.len());
        if self.has_d() {
            x.d = s.ratio();
        }
        if self.has_ends() {
            x.top = s.ratio();
            x.bottom = s.ratio();
        }
        x
    }

    fn embed(&self, block: Block, v: &[Rational]) -> Vec<Rational> {
        let mut full = vec![Rational::ZERO; self.rep.dim()];
        full[block.offset..block.offset + block.len].clone_from_slice(v);
        full
    }

    fn extract(&self, block: Block, full: &[Rational]) -> Vec<Rational> {
        full[block.offset..block.offset + block.len].to_vec()
    }

    /// `η_μ η_ν ψᵀ C γ_μ γ_ν φ` per pair, on full-length spinors.
    fn so_bilinear(&self, psi: &[Rational], phi: &[Rational]) -> Vec<Rational> {
        self.sigma
            .iter()
            .zip(&self.raised)
            .map(|(s, &r)| {
                let v = self.form.c.bilinear(psi, &s.apply(phi));
                if r > 0 {
                    v
                } else {
                    -v
                }
            })
            .collect()
    }

    /// Spinor action `Σ m_{μν} ½ γ_μ γ_ν ψ` on a full-length spinor.
    fn act(&self, m: &[Rational], psi: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::ZERO; psi.len()];
        let half = Rational::new(1, 2);
        for (c, s) in m.iter().zip(&self.sigma) {
            if c.is_zero() {
                continue;
            }
            let w = c * &half;
            for (j, x) in psi.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let (r, sg) = s.col(j);
                let t = &w * x;
                if sg > 0 {
                    out[r] += t;
                } else {
                    out[r] -= t;
                }
            }
        }
        out
    }

    fn so_matrix(&self, m: &[Rational]) -> DenseMatrix {
        let k = self.rep.sig().n();
        let mut x = DenseMatrix::zeros(k, k);
        for (c, &(a, b)) in m.iter().zip(&self.pairs) {
            if c.is_zero() {
                continue;
            }
            // E_ab = η_b e_a e_bᵀ − η_a e_b e_aᵀ
            x[(a, b)] += &(c * &Rational::from(self.rep.eta(b)));
            x[(b, a)] -= &(c * &Rational::from(self.rep.eta(a)));
        }
        x
    }

    /// Coordinates of `[X, Y]` in the `E_{μν}` basis.
    pub fn so_commutator(&self, m1: &[Rational], m2: &[Rational]) -> Vec<Rational> {
        if m1.iter().all(Rational::is_zero) || m2.iter().all(Rational::is_zero) {
            return vec![Rational::ZERO; self.pairs.len()];
        }
        let (x, y) = (self.so_matrix(m1), self.so_matrix(m2));
        let z = x.mul(&y).expect("square").sub(&y.mul(&x).expect("square")).expect("square");
        self.pairs.iter().map(|&(a, b)| &z[(a, b)] * &Rational::from(self.rep.eta(b))).collect()
    }

    fn pair_term(&self, coeff: &Rational, psi: &[Rational], phi: &[Rational], acc: &mut [Rational]) {
        if coeff.is_zero() || psi.iter().all(Rational::is_zero) || phi.iter().all(Rational::is_zero) {
            return;
        }
        for (a, v) in acc.iter_mut().zip(self.so_bilinear(psi, phi)) {
            if !v.is_zero() {
                *a += coeff * &v;
            }
        }
    }

    /// The graded bracket; bilinear and antisymmetric channel by channel.
    pub fn bracket(&self, x: &EPElement, y: &EPElement) -> Result<EPElement> {
        self.conforms(x)?;
        self.conforms(y)?;
        let c = |ch| self.coeffs.get(ch);
        let a = c(Channel::SpinorSo);
        let mut out = self.zero();
        out.so = self.so_commutator(&x.so, &y.so);

        let xp = self.embed(self.plus, &x.plus);
        let yp = self.embed(self.plus, &y.plus);
        let (xm, ym) = match self.minus {
            Some(b) => (self.embed(b, &x.minus), self.embed(b, &y.minus)),
            None => (Vec::new(), Vec::new()),
        };

        // plus spinors: so action, grading, transfer from the minus block
        let mut plus = self.act(&x.so, &yp);
        for (o, v) in plus.iter_mut().zip(self.act(&y.so, &xp)) {
            *o -= v;
        }
        let mut plus = self.extract(self.plus, &plus);
        if self.has_d() {
            for ((o, yv), xv) in plus.iter_mut().zip(&y.plus).zip(&x.plus) {
                *o += &(&x.d * yv) - &(&y.d * xv);
            }
        }

        match self.minus {
            None => {
                let mut so = out.so.clone();
                self.pair_term(&a, &xp, &yp, &mut so);
                out.so = so;
            }
            Some(mb) => {
                let b = c(Channel::SpinorScalar);
                let mut so = out.so.clone();
                self.pair_term(&a, &xp, &ym, &mut so);
                self.pair_term(&-&a, &yp, &xm, &mut so);
                out.so = so;
                if !b.is_zero() {
                    let s = self.form.c.bilinear(&xp, &ym) - self.form.c.bilinear(&yp, &xm);
                    out.d += &b * &s;
                }

                let mut minus = self.act(&x.so, &ym);
                for (o, v) in minus.iter_mut().zip(self.act(&y.so, &xm)) {
                    *o -= v;
                }
                let mut minus = self.extract(mb, &minus);
                for ((o, yv), xv) in minus.iter_mut().zip(&y.minus).zip(&x.minus) {
                    *o -= &(&x.d * yv) - &(&y.d * xv);
                }

                if self.has_ends() {
                    let (e, e2) = (c(Channel::PlusPlus), c(Channel::MinusMinus));
                    let (f, f2, g) = (c(Channel::TransferUp), c(Channel::TransferDown), c(Channel::TopBottom));
                    let two = Rational::from_int(2);
                    out.d += &g * &(&(&x.top * &y.bottom) - &(&y.top * &x.bottom));
                    out.top = &e * &self.form.c.bilinear(&xp, &yp) + &two * &(&(&x.d * &y.top) - &(&y.d * &x.top));
                    out.bottom =
                        &e2 * &self.form.c.bilinear(&xm, &ym) - &two * &(&(&x.d * &y.bottom) - &(&y.d * &x.bottom));
                    // both spinor grades share one chirality, so transfer is the identity on coordinates
                    for ((o, ym_), xm_) in plus.iter_mut().zip(&y.minus).zip(&x.minus) {
                        *o += &f * &(&(&x.top * ym_) - &(&y.top * xm_));
                    }
                    for ((o, yp_), xp_) in minus.iter_mut().zip(&y.plus).zip(&x.plus) {
                        *o += &f2 * &(&(&x.bottom * yp_) - &(&y.bottom * xp_));
                    }
                }
                out.minus = minus;
            }
        }
        out.plus = plus;
        Ok(out)
    }

    /// `[[x,y],z] + [[y,z],x] + [[z,x],y]`.
    pub fn jacobiator(&self, x: &EPElement, y: &EPElement, z: &EPElement) -> Result<EPElement> {
        let mut j = self.bracket(&self.bracket(x, y)?, z)?;
        j.add_assign(&self.bracket(&self.bracket(y, z)?, x)?);
        j.add_assign(&self.bracket(&self.bracket(z, x)?, y)?);
        Ok(j)
    }
}

pub type Triple = [EPElement; 3];

/// Linear system in `unknowns` whose solutions zero every jacobiator of `triples`.
/// Other channels keep their values from `base`; normalized unknowns get a row `c = 1`.
pub fn jacobi_system(
    space: &EPSpace,
    base: &BracketCoeffs,
    unknowns: &[Channel],
    triples: &[Triple],
) -> Result<(DenseMatrix, Vec<Rational>)> {
    let with = |vals: &[Rational]| {
        let mut c = base.clone();
        for (ch, v) in unknowns.iter().zip(vals) {
            c.set(*ch, v.clone());
        }
        space.with_coeffs(c)
    };
    let zero_space = with(&vec![Rational::ZERO; unknowns.len()]);
    let unit_spaces: Vec<EPSpace> = (0..unknowns.len())
        .map(|i| {
            let mut v = vec![Rational::ZERO; unknowns.len()];
            v[i] = Rational::ONE;
            with(&v)
        })
        .collect();
    let all_ones = (unknowns.len() > 1).then(|| with(&vec![Rational::ONE; unknowns.len()]));

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs = Vec::new();
    for [x, y, z] in triples {
        let j0 = zero_space.jacobiator(x, y, z)?.flatten();
        let cols: Vec<Vec<Rational>> = unit_spaces
            .iter()
            .map(|s| {
                let ji = s.jacobiator(x, y, z)?.flatten();
                Ok(ji.iter().zip(&j0).map(|(a, b)| a - b).collect())
            })
            .collect::<Result<_>>()?;
        if let Some(s) = &all_ones {
            let j1 = s.jacobiator(x, y, z)?.flatten();
            for (r, v) in j1.iter().enumerate() {
                let lin: Rational = &j0[r] + &cols.iter().map(|c| c[r].clone()).sum::<Rational>();
                if *v != lin {
                    return Err(Error::Calibration("jacobiator is not affine in the unknown channels".into()));
                }
            }
        }
        for r in 0..j0.len() {
            if j0[r].is_zero() && cols.iter().all(|c| c[r].is_zero()) {
                continue;
            }
            rows.push(cols.iter().map(|c| c[r].clone()).collect());
            rhs.push(-&j0[r]);
        }
    }
    for (i, ch) in unknowns.iter().enumerate() {
        if ch.is_normalized() {
            let mut row = vec![Rational::ZERO; unknowns.len()];
            row[i] = Rational::ONE;
            rows.push(row);
            rhs.push(Rational::ONE);
        }
    }
    let a = if rows.is_empty() { DenseMatrix::zeros(0, unknowns.len()) } else { DenseMatrix::from_rows(rows)? };
    Ok((a, rhs))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageReport {
    pub unknowns: Vec<Channel>,
    pub equations: usize,
    pub values: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Calibration {
    pub level: Level,
    pub coeffs: BracketCoeffs,
    pub stages: Vec<StageReport>,
}

/// Seed of the triples that pin the n = 0 coefficients.
pub const CALIBRATION_SEED: u64 = 0;
const CALIBRATION_TRIPLES: usize = 6;

fn random_triples(space: &EPSpace, s: &mut Sampler, count: usize, ends: bool) -> Vec<Triple> {
    (0..count)
        .map(|_| {
            [
                space.random_spinor_element(s, ends),
                space.random_spinor_element(s, ends),
                space.random_spinor_element(s, ends),
            ]
        })
        .collect()
}

fn solve_stage(
    space: &EPSpace,
    coeffs: &mut BracketCoeffs,
    unknowns: &[Channel],
    triples: &[Triple],
) -> Result<StageReport> {
    let (a, b) = jacobi_system(space, coeffs, unknowns, triples)?;
    let sol = solve_linear(&a, &b)?;
    let x = sol
        .solution()
        .ok_or_else(|| Error::Calibration(format!("no coefficients for {unknowns:?} make Jacobi hold")))?
        .to_vec();
    if !sol.nullspace.is_empty() {
        return Err(Error::Calibration(format!(
            "{unknowns:?} underdetermined: nullspace of dimension {}",
            sol.nullspace.len()
        )));
    }
    for (ch, v) in unknowns.iter().zip(&x) {
        coeffs.set(*ch, v.clone());
    }
    Ok(StageReport { unknowns: unknowns.to_vec(), equations: a.rows(), values: x })
}

/// Coefficients making the n = 0 bracket a Lie bracket.
///
/// Rescaling fixes the so-channel and, at the conf level, both transfer
/// channels to 1. The conf level is solved in two linear stages: the
/// `[E₊, E₋]` channel first, then the spinor channels.
pub fn calibrate(level: Level) -> Result<Calibration> {
    calibrate_polarized(level, Polarization::Unprimed)
}

pub fn calibrate_polarized(level: Level, polarization: Polarization) -> Result<Calibration> {
    let space = make_ep_polarized(level, 0, BracketCoeffs::ones(level), polarization)?;
    let mut s = Sampler::new(CALIBRATION_SEED);
    let mut coeffs = BracketCoeffs::default();
    let mut stages = Vec::new();
    use Channel::*;
    match level {
        Level::Der | Level::Qconf => {
            let t = random_triples(&space, &mut s, CALIBRATION_TRIPLES, false);
            stages.push(solve_stage(&space, &mut coeffs, &[SpinorSo], &t)?);
        }
        Level::Str0 => {
            let t = random_triples(&space, &mut s, CALIBRATION_TRIPLES, false);
            stages.push(solve_stage(&space, &mut coeffs, &[SpinorSo, SpinorScalar], &t)?);
        }
        Level::Conf => {
            coeffs.set(TransferUp, Rational::ONE);
            coeffs.set(TransferDown, Rational::ONE);
            let ends: Vec<Triple> = (0..2)
                .map(|_| [space.top_element(), space.bottom_element(), space.random_spinor_element(&mut s, false)])
                .collect();
            stages.push(solve_stage(&space, &mut coeffs, &[TopBottom], &ends)?);
            let t = random_triples(&space, &mut s, CALIBRATION_TRIPLES, true);
            stages.push(solve_stage(&space, &mut coeffs, &[SpinorSo, SpinorScalar, PlusPlus, MinusMinus], &t)?);
        }
    }
    Ok(Calibration { level, coeffs, stages })
}

/// Channels that appear in jacobiators of pure spinor triples.
fn spinor_channels(level: Level) -> &'static [Channel] {
    use Channel::*;
    match level {
        Level::Der | Level::Qconf => &[SpinorSo],
        Level::Str0 => &[SpinorSo, SpinorScalar],
        Level::Conf => &[SpinorSo, SpinorScalar, PlusPlus, MinusMinus],
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Infeasibility {
    /// No coefficients zero all sampled jacobiators; `y` is a sparse left
    /// multiplier with `yᵀA = 0` and `yᵀb ≠ 0`.
    Certificate { y: Vec<(usize, Rational)>, verified: bool },
    /// Coefficients that zero every sampled jacobiator.
    Feasible { coeffs: BracketCoeffs },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InfeasibilityReport {
    pub level: Level,
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub unknowns: Vec<Channel>,
    pub equations: usize,
    pub outcome: Infeasibility,
}

/// Treats the spinor channels as unknowns (so-channel normalized to 1) and
/// asks whether any assignment zeroes the jacobiator on `samples` seeded
/// random spinor triples.
pub fn jacobi_infeasibility(level: Level, n: usize, samples: usize, seed: u64) -> Result<InfeasibilityReport> {
    if n == 0 {
        return Err(Error::Precondition("infeasibility is only meaningful for n ≥ 1".into()));
    }
    let mut base = BracketCoeffs::ones(level);
    let unknowns = spinor_channels(level);
    for ch in unknowns {
        base.0.remove(ch);
    }
    let space = make_ep(level, n, base.clone())?;
    let mut s = Sampler::new(seed);
    let triples = random_triples(&space, &mut s, samples, false);
    let (a, b) = jacobi_system(&space, &base, unknowns, &triples)?;
    let sol = solve_linear(&a, &b)?;
    let outcome = match sol.outcome {
        SolveOutcome::Infeasible(y) => {
            let verified = verify_certificate(&a, &b, &y);
            Infeasibility::Certificate { y, verified }
        }
        SolveOutcome::Solution(x) => {
            let mut coeffs = base;
            for (ch, v) in unknowns.iter().zip(x) {
                coeffs.set(*ch, v);
            }
            Infeasibility::Feasible { coeffs }
        }
    };
    Ok(InfeasibilityReport { level, n, samples, seed, unknowns: unknowns.to_vec(), equations: a.rows(), outcome })
}

/// First basis triple `i < j < k` of the (plus) spinor block with a nonzero
/// jacobiator, scanning at most `limit` triples.
pub fn find_witness(space: &EPSpace, limit: usize) -> Result<Option<[usize; 3]>> {
    let m = space.plus_block().len;
    let mut seen = 0;
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                if seen == limit {
                    return Ok(None);
                }
                seen += 1;
                let jac = space.jacobiator(&space.basis_plus(i), &space.basis_plus(j), &space.basis_plus(k))?;
                if !jac.is_zero() {
                    return Ok(Some([i, j, k]));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum JacobiStatus {
    Holds,
    Violated,
    /// A coefficient assignment zeroed every sample at n ≥ 1.
    FeasibleOnSample,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EpReport {
    pub level: Level,
    pub n: usize,
    pub polarization: Polarization,
    pub dimension: usize,
    pub grade_profile: Vec<(i32, usize)>,
    pub calibration: BracketCoeffs,
    pub jacobi_status: JacobiStatus,
    pub samples: usize,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate_rows: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<[usize; 3]>,
}

/// Witness scans stop after this many basis triples.
pub const WITNESS_LIMIT: usize = 200_000;

/// Calibrates at n = 0, then checks Jacobi on `samples` seeded triples at
/// n = 0 or certifies its failure for n ≥ 1.
pub fn ep_report(level: Level, n: usize, samples: usize, seed: u64, polarization: Polarization) -> Result<EpReport> {
    let cal = calibrate_polarized(level, polarization)?;
    let mut report = EpReport {
        level,
        n,
        polarization,
        dimension: dimension(level, n),
        grade_profile: grade_profile(level, n, Variant::Canonical)?,
        calibration: cal.coeffs.clone(),
        jacobi_status: JacobiStatus::Holds,
        samples,
        seed,
        certificate_rows: None,
        witness: None,
    };
    if n == 0 {
        let space = make_ep_polarized(level, 0, cal.coeffs, polarization)?;
        let mut s = Sampler::new(seed);
        for _ in 0..samples {
            let t = [space.random_element(&mut s), space.random_element(&mut s), space.random_element(&mut s)];
            if !space.jacobiator(&t[0], &t[1], &t[2])?.is_zero() {
                report.jacobi_status = JacobiStatus::Violated;
                break;
            }
        }
        return Ok(report);
    }
    let inf = jacobi_infeasibility(level, n, samples, seed)?;
    match inf.outcome {
        Infeasibility::Certificate { y, .. } => {
            report.jacobi_status = JacobiStatus::Violated;
            report.certificate_rows = Some(y.len());
        }
        Infeasibility::Feasible { .. } => report.jacobi_status = JacobiStatus::FeasibleOnSample,
    }
    if level == Level::Der {
        let space = make_ep_polarized(level, n, cal.coeffs, polarization)?;
        report.witness = find_witness(&space, WITNESS_LIMIT)?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn dimensions() {
        assert_eq!(dimension(Level::Der, 0), 52);
        assert_eq!(dimension(Level::Str0, 0), 78);
        assert_eq!(dimension(Level::Conf, 0), 133);
        assert_eq!(dimension(Level::Qconf, 0), 248);
        assert_eq!(dimension(Level::Der, 1), 392);
    }

    #[test]
    fn extended_profiles() {
        let q = grade_profile(Level::Qconf, 0, Variant::Extended).unwrap();
        assert_eq!(q.iter().map(|x| x.1).collect::<Vec<_>>(), vec![14, 64, 92, 64, 14]);
        let c = grade_profile(Level::Conf, 0, Variant::Extended).unwrap();
        assert_eq!(c.iter().map(|x| x.1).collect::<Vec<_>>(), vec![1, 32, 67, 32, 1]);
        assert!(matches!(grade_profile(Level::Der, 0, Variant::Extended), Err(Error::Variant(_))));
    }

    #[test]
    fn so_commutator_closes() {
        let ep = make_ep(Level::Der, 0, BracketCoeffs::ones(Level::Der)).unwrap();
        let idx = |a, b| ep.pairs().iter().position(|&p| p == (a, b)).unwrap();
        let z = ep.bracket(&ep.basis_so(idx(0, 1)), &ep.basis_so(idx(1, 2))).unwrap();
        let nonzero: Vec<usize> = (0..z.so.len()).filter(|&i| !z.so[i].is_zero()).collect();
        assert_eq!(nonzero, vec![idx(0, 2)]);
        assert_eq!(z.so[idx(0, 2)].abs(), int(1));
    }

    #[test]
    fn der_spinor_bracket_reads_gammas() {
        let ep = make_ep(Level::Der, 0, BracketCoeffs::ones(Level::Der)).unwrap();
        let z = ep.bracket(&ep.basis_plus(0), &ep.basis_plus(1)).unwrap();
        for (v, (a, b)) in z.so.iter().zip(ep.pairs()) {
            let g = ep.rep().gamma(*a).mul(ep.rep().gamma(*b)).unwrap();
            assert_eq!(*v, Rational::from(g.get(0, 1)));
        }
    }

    #[test]
    fn calibration_der_and_str0() {
        let der = calibrate(Level::Der).unwrap();
        assert_eq!(der.coeffs.get(Channel::SpinorSo), int(1));
        let str0 = calibrate(Level::Str0).unwrap();
        assert!(!str0.coeffs.get(Channel::SpinorScalar).is_zero());
    }

    #[test]
    fn antisymmetry_and_mixed_jacobi() {
        for level in Level::ALL {
            let cal = calibrate(level).unwrap();
            let ep = make_ep(level, 0, cal.coeffs).unwrap();
            let mut s = Sampler::new(11);
            let x = ep.random_element(&mut s);
            let y = ep.random_element(&mut s);
            assert_eq!(ep.bracket(&x, &y).unwrap(), ep.bracket(&y, &x).unwrap().neg(), "{level}");
            assert!(ep.bracket(&x, &x).unwrap().is_zero());
            let mut m = ep.zero();
            m.so = s.vector(m.so.len());
            let (p1, p2) = (ep.random_spinor_element(&mut s, true), ep.random_spinor_element(&mut s, true));
            assert!(ep.jacobiator(&m, &p1, &p2).unwrap().is_zero(), "{level}");
        }
    }

    #[test]
    fn n0_jacobi_holds_on_random_triples() {
        for level in Level::ALL {
            let cal = calibrate(level).unwrap();
            let ep = make_ep(level, 0, cal.coeffs).unwrap();
            let mut s = Sampler::new(5);
            for _ in 0..3 {
                let t = [ep.random_element(&mut s), ep.random_element(&mut s), ep.random_element(&mut s)];
                assert!(ep.jacobiator(&t[0], &t[1], &t[2]).unwrap().is_zero(), "{level}");
            }
        }
    }

    #[test]
    fn infeasibility_needs_n_at_least_one() {
        assert!(matches!(jacobi_infeasibility(Level::Der, 0, 5, 7), Err(Error::Precondition(_))));
    }
}
