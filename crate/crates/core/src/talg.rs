//! Special T-algebras `T₃^{q,n}`: three diagonal scalars, a vector of
//! `so(q+8n)` and `fund_q` spinor columns, with the cubic norm built from
//! the Clifford algebra of signature `(q+1+8n, 1)`.
//!
//! At `(q, n) = (8, 0)` the norm is matched against the determinant of a
//! 3×3 octonionic Hermitian matrix through [`TSpace::calibrate_embedding`].

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::clifford::{build_rep, build_rep_min_dim, conjugations, BilinearForm, CliffordRep, Signature};
use crate::exact::{axpy, dot, solve_linear, DenseMatrix, Rational};
use crate::sample::Sampler;
use crate::{Error, Result};

pub fn lightcone_map(r1: &Rational, r2: &Rational) -> (Rational, Rational) {
    let half = Rational::new(1, 2);
    ((r1 + r2) * &half, (r1 - r2) * &half)
}

pub fn lightcone_inverse(x_plus: &Rational, x_minus: &Rational) -> (Rational, Rational) {
    (x_plus + x_minus, x_plus - x_minus)
}

/// One T-algebra element; `psi` holds `fund_q` columns of `spinor_width` entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TElement {
    pub q: usize,
    pub n: usize,
    pub r: [Rational; 3],
    pub v: Vec<Rational>,
    pub psi: Vec<Vec<Rational>>,
}

impl TElement {
    /// Coordinates in the order r, v, psi columns.
    pub fn flatten(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = self.r.to_vec();
        out.extend(self.v.iter().cloned());
        for col in &self.psi {
            out.extend(col.iter().cloned());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.flatten().iter().all(Rational::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> TElement {
        let sc = |v: &[Rational]| v.iter().map(|x| x * s).collect::<Vec<_>>();
        TElement {
            q: self.q,
            n: self.n,
            r: [&self.r[0] * s, &self.r[1] * s, &self.r[2] * s],
            v: sc(&self.v),
            psi: self.psi.iter().map(|c| sc(c)).collect(),
        }
    }
}

/// Exact `|N|` together with `π√|N|`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Entropy {
    pub abs_norm: Rational,
    pub value: f64,
}

/// Linear identification of `J₃(𝕆)` with `T₃^{8,0}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JordanEmbedding {
    /// Scale of the spinor term of the norm.
    pub kappa: Rational,
    /// `v = l1 · A₁`.
    pub l1: DenseMatrix,
    /// `psi = l2 · A₂ + l3 · A₃`.
    pub l2: DenseMatrix,
    pub l3: DenseMatrix,
    /// Dimension of the intertwiner space the map was picked from.
    pub nullspace_dim: usize,
}

#[derive(Clone, Debug)]
pub struct TSpace {
    q: usize,
    n: usize,
    rep: CliffordRep,
    form: BilinearForm,
    offset: usize,
    module_dim: usize,
    /// Clifford index of `x₋`, of each `v` entry, and of `x₊`.
    minus_index: usize,
    v_index: Vec<usize>,
    plus_index: usize,
    embedding: Option<JordanEmbedding>,
}

fn fund_dim(q: usize) -> usize {
    match q {
        2 | 4 => 2,
        _ => 1,
    }
}

impl TSpace {
    pub fn new(q: usize, n: usize) -> Result<TSpace> {
        if ![1, 2, 4, 8].contains(&q) {
            return Err(Error::Precondition(format!("q must be 1, 2, 4 or 8, got {q}")));
        }
        let sig = Signature { p: q + 1 + 8 * n, q: 1 };
        let width = 1usize << (q.div_ceil(2) + 4 * n + usize::from(q == 1));
        let module_dim = fund_dim(q) * width;
        let rep = if q == 1 { build_rep_min_dim(sig, module_dim)? } else { build_rep(sig)? };
        let (offset, len) = match rep.chiral_dims() {
            Some((a, _)) if a == module_dim => (0, a),
            _ => (0, rep.dim()),
        };
        if len != module_dim {
            return Err(Error::Construction(format!(
                "spinor module of {sig} has dimension {len}, expected {module_dim}"
            )));
        }
        let inside = |r: usize| r >= offset && r < offset + len;
        // C γ_μ must be a nonzero symmetric form on the module
        let form = [1i8, -1]
            .into_iter()
            .flat_map(|t| conjugations(&rep, t))
            .find(|f| {
                (0..sig.n()).all(|mu| {
                    let cg = f.c.mul(rep.gamma(mu)).expect("same dim");
                    (offset..offset + len).all(|j| {
                        let (r, s) = cg.col(j);
                        !inside(r) || cg.get(j, r) == s
                    })
                }) && {
                    let cg = f.c.mul(rep.gamma(0)).expect("same dim");
                    (offset..offset + len).any(|j| inside(cg.col(j).0))
                }
            })
            .ok_or(Error::NoConjugation { p: sig.p, q: sig.q, sign: 1 })?;
        let space: Vec<usize> = (0..sig.n()).filter(|&m| rep.eta(m) > 0).collect();
        let plus_index = (0..sig.n()).find(|&m| rep.eta(m) < 0).expect("one timelike generator");
        Ok(TSpace {
            q,
            n,
            form,
            offset,
            module_dim,
            minus_index: space[0],
            v_index: space[1..].to_vec(),
            plus_index,
            rep,
            embedding: None,
        })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vector_dim(&self) -> usize {
        self.q + 8 * self.n
    }

    pub fn spinor_width(&self) -> usize {
        self.module_dim / self.fund_dim()
    }

    pub fn fund_dim(&self) -> usize {
        fund_dim(self.q)
    }

    /// R-symmetry label.
    pub fn r_symmetry(&self) -> &'static str {
        match self.q {
            2 => "so(2)",
            4 => "su(2)",
            _ => "0",
        }
    }

    pub fn dimension(&self) -> usize {
        3 + self.vector_dim() + self.module_dim
    }

    pub fn rep(&self) -> &CliffordRep {
        &self.rep
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn embedding(&self) -> Option<&JordanEmbedding> {
        self.embedding.as_ref()
    }

    pub fn kappa(&self) -> Rational {
        self.embedding.as_ref().map_or(Rational::ONE, |e| e.kappa.clone())
    }

    pub fn zero(&self) -> TElement {
        TElement {
            q: self.q,
            n: self.n,
            r: [Rational::ZERO, Rational::ZERO, Rational::ZERO],
            v: vec![Rational::ZERO; self.vector_dim()],
            psi: vec![vec![Rational::ZERO; self.spinor_width()]; self.fund_dim()],
        }
    }

    pub fn diag(&self, r1: Rational, r2: Rational, r3: Rational) -> TElement {
        TElement { r: [r1, r2, r3], ..self.zero() }
    }

    pub fn random(&self, s: &mut Sampler) -> TElement {
        TElement {
            q: self.q,
            n: self.n,
            r: [s.int(), s.int(), s.int()],
            v: s.vector(self.vector_dim()),
            psi: (0..self.fund_dim()).map(|_| s.vector(self.spinor_width())).collect(),
        }
    }

    /// Element whose flattened coordinates are `coords`.
    pub fn from_flat(&self, coords: &[Rational]) -> Result<TElement> {
        if coords.len() != self.dimension() {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for a space of dimension {}",
                coords.len(),
                self.dimension()
            )));
        }
        let vd = self.vector_dim();
        let w = self.spinor_width();
        Ok(TElement {
            q: self.q,
            n: self.n,
            r: [coords[0].clone(), coords[1].clone(), coords[2].clone()],
            v: coords[3..3 + vd].to_vec(),
            psi: coords[3 + vd..].chunks(w).map(<[Rational]>::to_vec).collect(),
        })
    }

    pub fn conforms(&self, t: &TElement) -> Result<()> {
        let ok = t.q == self.q
            && t.n == self.n
            && t.v.len() == self.vector_dim()
            && t.psi.len() == self.fund_dim()
            && t.psi.iter().all(|c| c.len() == self.spinor_width());
        if ok {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!("element does not fit T(q={}, n={})", self.q, self.n)))
        }
    }

    /// The spinor columns as one full-length vector of the Clifford module.
    fn spinor(&self, t: &TElement) -> Vec<Rational> {
        let mut full = vec![Rational::ZERO; self.rep.dim()];
        for (i, x) in t.psi.iter().flatten().enumerate() {
            full[self.offset + i] = x.clone();
        }
        full
    }

    fn unspinor(&self, full: &[Rational]) -> Vec<Vec<Rational>> {
        full[self.offset..self.offset + self.module_dim].chunks(self.spinor_width()).map(<[Rational]>::to_vec).collect()
    }

    /// `V` in Clifford coordinates, built from `(r₁, r₂, v)` via the lightcone map.
    pub fn vector_coords(&self, t: &TElement) -> Vec<Rational> {
        let (xp, xm) = lightcone_map(&t.r[0], &t.r[1]);
        let mut out = vec![Rational::ZERO; self.rep.sig().n()];
        out[self.plus_index] = xp;
        out[self.minus_index] = xm;
        for (i, x) in self.v_index.iter().zip(&t.v) {
            out[*i] = x.clone();
        }
        out
    }

    fn gamma_of(&self, coords: &[Rational], psi: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::ZERO; psi.len()];
        for (mu, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut out, c, &self.rep.gamma(mu).apply(psi));
            }
        }
        out
    }

    /// `N = r₃(r₁r₂ − |v|²) − κ Ψᵀ C γ(V) Ψ`, normalized so that `N(diag) = r₁r₂r₃`.
    pub fn cubic_norm(&self, t: &TElement) -> Result<Rational> {
        self.conforms(t)?;
        let quad = &t.r[0] * &t.r[1] - dot(&t.v, &t.v);
        let mut n = &t.r[2] * &quad;
        let psi = self.spinor(t);
        if psi.iter().any(|x| !x.is_zero()) {
            let g = self.gamma_of(&self.vector_coords(t), &psi);
            n -= self.kappa() * self.form.c.bilinear(&psi, &g);
        }
        Ok(n)
    }

    /// Exact gradient in flattened coordinates.
    pub fn norm_gradient(&self, t: &TElement) -> Result<Vec<Rational>> {
        self.conforms(t)?;
        let kappa = self.kappa();
        let psi = self.spinor(t);
        // b_μ = Ψᵀ C γ_μ Ψ
        let b: Vec<Rational> =
            (0..self.rep.sig().n()).map(|mu| self.form.c.bilinear(&psi, &self.rep.gamma(mu).apply(&psi))).collect();
        let half = Rational::new(1, 2);
        let (bp, bm) = (&b[self.plus_index], &b[self.minus_index]);
        let mut g = self.zero();
        g.r[0] = &t.r[1] * &t.r[2] - &kappa * &(&(bp + bm) * &half);
        g.r[1] = &t.r[0] * &t.r[2] - &kappa * &(&(bp - bm) * &half);
        g.r[2] = &t.r[0] * &t.r[1] - dot(&t.v, &t.v);
        let two = Rational::from_int(2);
        for (k, i) in self.v_index.iter().enumerate() {
            g.v[k] = -(&two * &(&t.r[2] * &t.v[k])) - &kappa * &b[*i];
        }
        let gv = self.gamma_of(&self.vector_coords(t), &psi);
        // C γ(V) is symmetric on the module, so ∂/∂Ψ = −2κ C γ(V) Ψ
        let cg = self.form.c.apply(&gv);
        let s = -(&two * &kappa);
        g.psi = self.unspinor(&cg.iter().map(|x| x * &s).collect::<Vec<_>>());
        Ok(g.flatten())
    }

    /// 0 for the zero element, else 1 if `∂N = 0`, 2 if `N = 0`, 3 otherwise.
    pub fn rank(&self, t: &TElement) -> Result<u8> {
        if !self.cubic_norm(t)?.is_zero() {
            return Ok(3);
        }
        if self.norm_gradient(t)?.iter().any(|x| !x.is_zero()) {
            return Ok(2);
        }
        Ok(if t.is_zero() { 0 } else { 1 })
    }

    pub fn entropy(&self, t: &TElement) -> Result<Entropy> {
        Ok(entropy_of(&self.cubic_norm(t)?))
    }

    /// Infinitesimal rotation in the `(μ, ν)` plane: `δV = E_{μν}V`,
    /// `δΨ = ½γ_μγ_νΨ`, `δr₃ = 0`.
    pub fn rotate(&self, mu: usize, nu: usize, t: &TElement) -> Result<TElement> {
        self.conforms(t)?;
        let v = self.vector_coords(t);
        let mut dv = vec![Rational::ZERO; v.len()];
        dv[mu] = &v[nu] * &Rational::from(self.rep.eta(nu));
        dv[nu] = -(&v[mu] * &Rational::from(self.rep.eta(mu)));
        let psi = self.spinor(t);
        let sigma = self.rep.gamma(mu).mul(self.rep.gamma(nu))?;
        let dpsi: Vec<Rational> = sigma.apply(&psi).iter().map(|x| x * &Rational::new(1, 2)).collect();
        let (r1, r2) = lightcone_inverse(&dv[self.plus_index], &dv[self.minus_index]);
        Ok(TElement {
            q: self.q,
            n: self.n,
            r: [r1, r2, Rational::ZERO],
            v: self.v_index.iter().map(|&i| dv[i].clone()).collect(),
            psi: self.unspinor(&dpsi),
        })
    }

    /// Symmetric matrix of the quadratic form `ψ ↦ N(base + ψ) − N(base)` on
    /// the spinor module, for `base` without spinor part.
    fn spinor_form(&self, base: &TElement) -> Result<DenseMatrix> {
        let m = self.module_dim;
        let with = |pairs: &[(usize, Rational)]| -> Result<Rational> {
            let mut t = base.clone();
            let w = self.spinor_width();
            for (i, x) in pairs {
                t.psi[i / w][i % w] += x;
            }
            self.cubic_norm(&t)
        };
        let n0 = with(&[])?;
        let diag: Vec<Rational> =
            (0..m).map(|a| with(&[(a, Rational::ONE)]).map(|x| x - &n0)).collect::<Result<_>>()?;
        let mut k = DenseMatrix::zeros(m, m);
        for a in 0..m {
            k[(a, a)] = diag[a].clone();
            for b in a + 1..m {
                let f = with(&[(a, Rational::ONE), (b, Rational::ONE)])? - &n0;
                let v = (f - &diag[a] - &diag[b]) * Rational::new(1, 2);
                k[(a, b)] = v.clone();
                k[(b, a)] = v;
            }
        }
        Ok(k)
    }

    /// Finds the linear map `J₃(𝕆) → T₃^{8,0}` and the spinor scale κ with
    /// `N ∘ embed = det`; stores both in the space.
    pub fn calibrate_embedding(&mut self) -> Result<&JordanEmbedding> {
        if self.q != 8 || self.n != 0 {
            return Err(Error::Precondition("the Jordan embedding exists only for q = 8, n = 0".into()));
        }
        self.embedding = None;
        let mut last = Error::Calibration("no orientation of the vector block admits an embedding".into());
        for reflect in [false, true] {
            let mut l1 = DenseMatrix::identity(8);
            if reflect {
                l1[(7, 7)] = Rational::from_int(-1);
            }
            match self.try_embedding(l1) {
                Ok(e) => {
                    self.embedding = Some(e);
                    let mut s = Sampler::new(0);
                    let mut ok = true;
                    for _ in 0..20 {
                        let j = OctonionHermitian3::random(&mut s);
                        if self.cubic_norm(&self.embed_jordan(&j)?)? != jordan_determinant(&j) {
                            ok = false;
                            break;
                        }
                    }
                    if ok {
                        return Ok(self.embedding.as_ref().expect("just set"));
                    }
                    self.embedding = None;
                    last = Error::Calibration("embedding fails the determinant check".into());
                }
                Err(e) => last = e,
            }
        }
        Err(last)
    }

    fn try_embedding(&self, l1: DenseMatrix) -> Result<JordanEmbedding> {
        let fail = |m: &str| Error::Calibration(m.to_string());
        let unit = TSpace { embedding: None, ..self.clone() };
        let k1 = unit.spinor_form(&unit.diag(Rational::ONE, Rational::ZERO, Rational::ZERO))?;
        let k2 = unit.spinor_form(&unit.diag(Rational::ZERO, Rational::ONE, Rational::ZERO))?;
        let b: Vec<DenseMatrix> = (0..8)
            .map(|i| {
                let mut t = unit.zero();
                for j in 0..8 {
                    t.v[j] = l1[(j, i)].clone();
                }
                unit.spinor_form(&t)
            })
            .collect::<Result<_>>()?;

        let kernel = |k: &DenseMatrix| -> Result<DenseMatrix> {
            let ns = solve_linear(k, &vec![Rational::ZERO; k.rows()])?.nullspace;
            if ns.len() != 8 {
                return Err(fail("lightcone forms do not split the spinor module in half"));
            }
            Ok(DenseMatrix::from_rows(ns)?.transpose())
        };
        // A₂ must not see r₁ and A₃ must not see r₂
        let u2 = kernel(&k1)?;
        let u3 = kernel(&k2)?;
        let restrict =
            |x: &DenseMatrix, m: &DenseMatrix, y: &DenseMatrix| -> Result<DenseMatrix> { x.transpose().mul(m)?.mul(y) };
        let k2r = restrict(&u2, &k2, &u2)?;
        let k1r = restrict(&u3, &k1, &u3)?;
        let br: Vec<DenseMatrix> = b.iter().map(|bi| restrict(&u2, bi, &u3)).collect::<Result<_>>()?;
        let t: Vec<DenseMatrix> = (0..8).map(trilinear_matrix).collect();

        let b0inv = br[0].inverse().ok_or_else(|| fail("singular vector pairing"))?;
        let t0inv = t[0].inverse().expect("T₀ is diagonal");
        // Y R_i = S_i Y with Y = X₂ᵀ, R_i = B_i B₀⁻¹, S_i = T_i T₀⁻¹
        let mut rows = Vec::new();
        for i in 1..8 {
            let r = br[i].mul(&b0inv)?;
            let s = t[i].mul(&t0inv)?;
            for a in 0..8 {
                for c in 0..8 {
                    let mut row = vec![Rational::ZERO; 64];
                    for k in 0..8 {
                        row[a * 8 + k] += &r[(k, c)];
                        row[k * 8 + c] -= &s[(a, k)];
                    }
                    rows.push(row);
                }
            }
        }
        let sys = DenseMatrix::from_rows(rows)?;
        let ns = solve_linear(&sys, &vec![Rational::ZERO; sys.rows()])?.nullspace;
        let y0 = ns.first().ok_or_else(|| fail("no intertwiner for this orientation"))?;
        let y = DenseMatrix::from_fn(8, 8, |a, c| y0[a * 8 + c].clone());
        let gram = y.mul(&k2r)?.mul(&y.transpose())?;
        let lambda2 = gram[(0, 0)].clone();
        if lambda2.is_zero() || gram != DenseMatrix::identity(8).scale(&lambda2) {
            return Err(fail("intertwiner is not conformal for the r₂ form"));
        }
        let kappa = -lambda2.recip();
        let x2 = y.transpose();
        let two_k = &kappa * &Rational::from_int(2);
        let x3 = y.mul(&br[0])?.scale(&two_k).inverse().ok_or_else(|| fail("singular transfer"))?.mul(&t[0])?;
        let check = x3.transpose().mul(&k1r)?.mul(&x3)?.scale(&kappa);
        if check != DenseMatrix::identity(8).scale(&Rational::from_int(-1)) {
            return Err(fail("r₁ form inconsistent with the trilinear term"));
        }
        Ok(JordanEmbedding { kappa, l1, l2: u2.mul(&x2)?, l3: u3.mul(&x3)?, nullspace_dim: ns.len() })
    }

    pub fn embed_jordan(&self, j: &OctonionHermitian3) -> Result<TElement> {
        let e = self
            .embedding
            .as_ref()
            .ok_or_else(|| Error::Precondition("space has no calibrated Jordan embedding".into()))?;
        let a = |o: &Octonion| o.0.to_vec();
        let v = e.l1.mul_vec(&a(&j.a[0]))?;
        let mut psi = e.l2.mul_vec(&a(&j.a[1]))?;
        for (p, x) in psi.iter_mut().zip(e.l3.mul_vec(&a(&j.a[2]))?) {
            *p += x;
        }
        Ok(TElement { q: 8, n: 0, r: j.r.clone(), v, psi: vec![psi] })
    }
}

pub fn make_space(q: usize, n: usize) -> Result<TSpace> {
    TSpace::new(q, n)
}

impl TSpace {
    /// The space with its Jordan embedding calibrated where one exists, so
    /// that at `(8, 0)` the norm is the octonionic determinant.
    pub fn standard(q: usize, n: usize) -> Result<TSpace> {
        let mut s = TSpace::new(q, n)?;
        if q == 8 && n == 0 {
            s.calibrate_embedding()?;
        }
        Ok(s)
    }
}

pub fn entropy_of(norm: &Rational) -> Entropy {
    let abs_norm = norm.abs();
    let value = PI * abs_norm.to_f64().sqrt();
    Entropy { abs_norm, value }
}

/// Fano-plane triples `(i, j, k)` with `e_i e_j = e_k`, read cyclically.
pub const FANO_TRIPLES: [(usize, usize, usize); 7] =
    [(1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (5, 6, 1), (6, 7, 2), (7, 1, 3)];

/// `e_i e_j = sign · e_k` as `(k, sign)`, with `e_0 = 1`.
pub fn cayley(i: usize, j: usize) -> (usize, i8) {
    match (i, j) {
        (0, _) => (j, 1),
        (_, 0) => (i, 1),
        _ if i == j => (0, -1),
        _ => FANO_TRIPLES
            .iter()
            .find_map(|&(a, b, c)| {
                let cyc = [(a, b, c), (b, c, a), (c, a, b)];
                cyc.iter().find_map(|&(x, y, z)| {
                    if (x, y) == (i, j) {
                        Some((z, 1))
                    } else if (y, x) == (i, j) {
                        Some((z, -1))
                    } else {
                        None
                    }
                })
            })
            .expect("every imaginary pair lies on one line"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Octonion(pub [Rational; 8]);

impl Octonion {
    pub fn zero() -> Octonion {
        Octonion(std::array::from_fn(|_| Rational::ZERO))
    }

    pub fn real(x: Rational) -> Octonion {
        let mut o = Octonion::zero();
        o.0[0] = x;
        o
    }

    pub fn unit(i: usize) -> Octonion {
        let mut o = Octonion::zero();
        o.0[i] = Rational::ONE;
        o
    }

    pub fn conj(&self) -> Octonion {
        Octonion(std::array::from_fn(|i| if i == 0 { self.0[0].clone() } else { -&self.0[i] }))
    }

    pub fn norm(&self) -> Rational {
        dot(&self.0, &self.0)
    }

    pub fn re(&self) -> &Rational {
        &self.0[0]
    }

    pub fn mul(&self, other: &Octonion) -> Octonion {
        let mut out = Octonion::zero();
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (k, s) = cayley(i, j);
                let p = a * b;
                if s > 0 {
                    out.0[k] += p;
                } else {
                    out.0[k] -= p;
                }
            }
        }
        out
    }
}

/// `[[r₁, A₁, Ā₂], [Ā₁, r₂, A₃], [A₂, Ā₃, r₃]]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OctonionHermitian3 {
    pub r: [Rational; 3],
    pub a: [Octonion; 3],
}

impl OctonionHermitian3 {
    pub fn diag(r1: Rational, r2: Rational, r3: Rational) -> OctonionHermitian3 {
        OctonionHermitian3 { r: [r1, r2, r3], a: [Octonion::zero(), Octonion::zero(), Octonion::zero()] }
    }

    pub fn random(s: &mut Sampler) -> OctonionHermitian3 {
        let mut oct = || Octonion(std::array::from_fn(|_| s.int()));
        let a = [oct(), oct(), oct()];
        OctonionHermitian3 { r: [s.int(), s.int(), s.int()], a }
    }
}

/// `r₁r₂r₃ − r₁n(A₃) − r₂n(A₂) − r₃n(A₁) + 2Re((A₁A₃)A₂)`.
pub fn jordan_determinant(j: &OctonionHermitian3) -> Rational {
    let [r1, r2, r3] = &j.r;
    let [a1, a2, a3] = &j.a;
    let tri = a1.mul(a3).mul(a2);
    r1 * r2 * r3 - r1 * &a3.norm() - r2 * &a2.norm() - r3 * &a1.norm() + Rational::from_int(2) * tri.re()
}

/// `T_i[k][l] = 2 Re((e_i e_l) e_k)`: the `A₁ = e_i` slice of the determinant.
fn trilinear_matrix(i: usize) -> DenseMatrix {
    DenseMatrix::from_fn(8, 8, |k, l| {
        let (m, s1) = cayley(i, l);
        let (z, s2) = cayley(m, k);
        if z == 0 {
            Rational::from_int(2 * i64::from(s1 * s2))
        } else {
            Rational::ZERO
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn dimensions() {
        for (q, n, d) in [(8, 0, 27), (4, 0, 15), (2, 0, 9), (1, 0, 8), (8, 1, 275)] {
            assert_eq!(TSpace::new(q, n).unwrap().dimension(), d, "q={q} n={n}");
        }
        assert!(matches!(TSpace::new(3, 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn lightcone() {
        assert_eq!(lightcone_map(&int(1), &int(1)), (int(1), int(0)));
        assert_eq!(lightcone_inverse(&int(1), &int(0)), (int(1), int(1)));
    }

    #[test]
    fn diagonal_norms_and_ranks() {
        let s = TSpace::new(8, 0).unwrap();
        assert_eq!(s.cubic_norm(&s.diag(int(2), int(3), int(5))).unwrap(), int(30));
        assert_eq!(s.rank(&s.diag(int(1), int(1), int(1))).unwrap(), 3);
        assert_eq!(s.rank(&s.diag(int(1), int(1), int(0))).unwrap(), 2);
        assert_eq!(s.rank(&s.diag(int(1), int(0), int(0))).unwrap(), 1);
        assert_eq!(s.rank(&s.zero()).unwrap(), 0);
        let g = s.norm_gradient(&s.diag(int(1), int(1), int(0))).unwrap();
        assert_eq!(g[2], int(1));
        assert!(g.iter().enumerate().all(|(i, x)| i == 2 || x.is_zero()));
    }

    #[test]
    fn euler_identity() {
        let mut smp = Sampler::new(3);
        for (q, n) in [(1, 0), (2, 0), (4, 0), (8, 0)] {
            let s = TSpace::new(q, n).unwrap();
            let t = s.random(&mut smp);
            let g = s.norm_gradient(&t).unwrap();
            assert_eq!(dot(&g, &t.flatten()), int(3) * s.cubic_norm(&t).unwrap(), "q={q}");
        }
    }

    #[test]
    fn octonions() {
        let e = Octonion::unit;
        assert_eq!(e(1).mul(&e(2)), e(4));
        assert_eq!(e(2).mul(&e(1)), Octonion(std::array::from_fn(|i| if i == 4 { int(-1) } else { int(0) })));
        let mut s = Sampler::new(1);
        let x = Octonion(std::array::from_fn(|_| s.int()));
        let y = Octonion(std::array::from_fn(|_| s.int()));
        assert_eq!(x.mul(&y).norm(), x.norm() * y.norm());
        let ones = OctonionHermitian3 { r: [int(0), int(0), int(0)], a: [e(0), e(0), e(0)] };
        assert_eq!(jordan_determinant(&ones), int(2));
    }

    #[test]
    fn embedding_matches_determinant() {
        let mut s = TSpace::new(8, 0).unwrap();
        s.calibrate_embedding().unwrap();
        let j = OctonionHermitian3::diag(int(2), int(3), int(4));
        assert_eq!(s.embed_jordan(&j).unwrap(), s.diag(int(2), int(3), int(4)));
        let mut smp = Sampler::new(9);
        for _ in 0..5 {
            let j = OctonionHermitian3::random(&mut smp);
            assert_eq!(s.cubic_norm(&s.embed_jordan(&j).unwrap()).unwrap(), jordan_determinant(&j));
        }
    }
}
