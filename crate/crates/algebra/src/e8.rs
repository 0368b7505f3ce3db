//! The 248-dimensional algebra: generators + two Freudenthal slots + three
//! scalar slots, with the bracket, adjoint maps, trace form, exact
//! exponentials of adjoints with integer spectrum, and the named order-three
//! and order-four transformations lifted to the full space.

use crate::freudenthal::{
    build_p_map, e7_basis, p_cross_q, phi_u1, psi, skew, tau_lambda_sandwich, E7Gen, PMap,
    PMapName, PVector, E7_DIM, P_DIM,
};
use crate::jordan::{vee, JordanC, JORDAN_DIM};
use crate::linalg::{integer_spectrum, spectral_function, SpMat, SpVec, SpectrumError};
use crate::scalar::{root_of_unity, Scalar, ScalarError};
use std::sync::OnceLock;

pub const E8_DIM: usize = 248;
pub const P_OFF: usize = E7_DIM;
pub const Q_OFF: usize = E7_DIM + P_DIM;
pub const R_IDX: usize = 245;
pub const S_IDX: usize = 246;
pub const T_IDX: usize = 247;

/// An element (Phi, P, Q, r, s, t).
#[derive(Clone, Debug)]
pub struct E8Element {
    pub phi: E7Gen,
    pub p: PVector,
    pub q: PVector,
    pub r: Scalar,
    pub s: Scalar,
    pub t: Scalar,
}

impl PartialEq for E8Element {
    fn eq(&self, other: &Self) -> bool {
        self.phi == other.phi
            && self.p == other.p
            && self.q == other.q
            && self.r == other.r
            && self.s == other.s
            && self.t == other.t
    }
}

#[derive(Debug, thiserror::Error)]
pub enum E8Error {
    #[error(transparent)]
    Freudenthal(#[from] crate::freudenthal::FreudenthalError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("element is outside the declared domain of the partial map")]
    OutsideDomain,
    #[error("matrix argument is not special unitary")]
    NotSU2,
}

impl E8Element {
    pub fn zero() -> Self {
        E8Element {
            phi: E7Gen::zero(),
            p: PVector::zero(),
            q: PVector::zero(),
            r: Scalar::zero(),
            s: Scalar::zero(),
            t: Scalar::zero(),
        }
    }

    pub fn new(phi: E7Gen, p: PVector, q: PVector, r: Scalar, s: Scalar, t: Scalar) -> Self {
        E8Element { phi, p, q, r, s, t }
    }

    pub fn from_phi(phi: E7Gen) -> Self {
        let mut out = Self::zero();
        out.phi = phi;
        out
    }

    /// The characteristic element (Phi(-2 E1 v E1, 0, 0, -1), 0, 0, -1, 0, 0).
    pub fn kappa() -> Self {
        let phi6 = vee(&JordanC::e(1), &JordanC::e(1)).scale(&Scalar::int(-2));
        let gen = E7Gen::new_unchecked(phi6, JordanC::zero(), JordanC::zero(), Scalar::int(-1));
        let mut out = Self::zero();
        out.phi = gen;
        out.r = Scalar::int(-1);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.phi.is_zero()
            && self.p.is_zero()
            && self.q.is_zero()
            && self.r.is_zero()
            && self.s.is_zero()
            && self.t.is_zero()
    }

    pub fn add(&self, rhs: &E8Element) -> E8Element {
        E8Element {
            phi: self.phi.add(&rhs.phi),
            p: self.p.add(&rhs.p),
            q: self.q.add(&rhs.q),
            r: &self.r + &rhs.r,
            s: &self.s + &rhs.s,
            t: &self.t + &rhs.t,
        }
    }

    pub fn sub(&self, rhs: &E8Element) -> E8Element {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> E8Element {
        self.scale(&-&Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> E8Element {
        E8Element {
            phi: self.phi.scale(c),
            p: self.p.scale(c),
            q: self.q.scale(c),
            r: &self.r * c,
            s: &self.s * c,
            t: &self.t * c,
        }
    }

    /// Coordinates in the fixed order (133, 56, 56, 1, 1, 1).
    pub fn to_vec(&self) -> SpVec {
        let mut entries = self
            .phi
            .to_coords()
            .expect("generator component lies in the 133-dimensional span")
            .entries;
        for (i, v) in self.p.to_vec().entries {
            entries.push((P_OFF + i, v));
        }
        for (i, v) in self.q.to_vec().entries {
            entries.push((Q_OFF + i, v));
        }
        if !self.r.is_zero() {
            entries.push((R_IDX, self.r.clone()));
        }
        if !self.s.is_zero() {
            entries.push((S_IDX, self.s.clone()));
        }
        if !self.t.is_zero() {
            entries.push((T_IDX, self.t.clone()));
        }
        SpVec::from_entries(entries)
    }

    pub fn from_vec(v: &SpVec) -> E8Element {
        let mut phi_coords = Vec::new();
        let mut p_entries = Vec::new();
        let mut q_entries = Vec::new();
        let mut r = Scalar::zero();
        let mut s = Scalar::zero();
        let mut t = Scalar::zero();
        for (i, val) in &v.entries {
            match *i {
                i if i < P_OFF => phi_coords.push((i, val.clone())),
                i if i < Q_OFF => p_entries.push((i - P_OFF, val.clone())),
                i if i < R_IDX => q_entries.push((i - Q_OFF, val.clone())),
                R_IDX => r = val.clone(),
                S_IDX => s = val.clone(),
                _ => t = val.clone(),
            }
        }
        E8Element {
            phi: E7Gen::from_coords(&SpVec::from_entries(phi_coords)),
            p: PVector::from_vec(&SpVec::from_entries(p_entries)),
            q: PVector::from_vec(&SpVec::from_entries(q_entries)),
            r,
            s,
            t,
        }
    }

    /// Entrywise scalar conjugation of all coordinates.
    pub fn tau(&self) -> E8Element {
        E8Element::from_vec(&self.to_vec().conj())
    }
}

/// The 248 coordinate basis elements, built once.
pub fn e8_basis() -> &'static Vec<E8Element> {
    static BASIS: OnceLock<Vec<E8Element>> = OnceLock::new();
    BASIS.get_or_init(|| {
        let mut out = Vec::with_capacity(E8_DIM);
        for gen in e7_basis() {
            out.push(E8Element::from_phi(gen));
        }
        for j in 0..P_DIM {
            let mut e = E8Element::zero();
            e.p = PVector::from_vec(&SpVec::unit(j));
            out.push(e);
        }
        for j in 0..P_DIM {
            let mut e = E8Element::zero();
            e.q = PVector::from_vec(&SpVec::unit(j));
            out.push(e);
        }
        for idx in [R_IDX, S_IDX, T_IDX] {
            let mut e = E8Element::zero();
            match idx {
                R_IDX => e.r = Scalar::one(),
                S_IDX => e.s = Scalar::one(),
                _ => e.t = Scalar::one(),
            }
            out.push(e);
        }
        out
    })
}

/// The Lie bracket of the 248-dimensional algebra:
///   Phi-part  [Phi1, Phi2] + P1 x Q2 - P2 x Q1
///   P-part    Phi1 P2 - Phi2 P1 + r1 P2 - r2 P1 + s1 Q2 - s2 Q1
///   Q-part    Phi1 Q2 - Phi2 Q1 - r1 Q2 + r2 Q1 + t1 P2 - t2 P1
///   r-part    -(1/8){P1, Q2} + (1/8){P2, Q1} + s1 t2 - s2 t1
///   s-part    (1/4){P1, P2} + 2 r1 s2 - 2 r2 s1
///   t-part    -(1/4){Q1, Q2} - 2 r1 t2 + 2 r2 t1
pub fn bracket(a: &E8Element, b: &E8Element) -> E8Element {
    let eighth = Scalar::ratio(1, 8);
    let quarter = Scalar::ratio(1, 4);
    let two = Scalar::int(2);

    let mut phi = if a.phi.is_zero() || b.phi.is_zero() {
        E7Gen::zero()
    } else {
        a.phi.bracket(&b.phi)
    };
    phi = phi.add(&p_cross_q(&a.p, &b.q));
    phi = phi.sub(&p_cross_q(&b.p, &a.q));

    let mut p = apply_gen(&a.phi, &b.p).sub(&apply_gen(&b.phi, &a.p));
    p = p.add(&b.p.scale(&a.r)).sub(&a.p.scale(&b.r));
    p = p.add(&b.q.scale(&a.s)).sub(&a.q.scale(&b.s));

    let mut q = apply_gen(&a.phi, &b.q).sub(&apply_gen(&b.phi, &a.q));
    q = q.sub(&b.q.scale(&a.r)).add(&a.q.scale(&b.r));
    q = q.add(&b.p.scale(&a.t)).sub(&a.p.scale(&b.t));

    let mut r = &(&skew(&b.p, &a.q) - &skew(&a.p, &b.q)) * &eighth;
    r = &r + &(&(&a.s * &b.t) - &(&b.s * &a.t));

    let mut s = &skew(&a.p, &b.p) * &quarter;
    s = &s + &(&two * &(&(&a.r * &b.s) - &(&b.r * &a.s)));

    let mut t = -&(&skew(&a.q, &b.q) * &quarter);
    t = &t - &(&two * &(&(&a.r * &b.t) - &(&b.r * &a.t)));

    E8Element::new(phi, p, q, r, s, t)
}

fn apply_gen(phi: &E7Gen, p: &PVector) -> PVector {
    if phi.is_zero() || p.is_zero() {
        return PVector::zero();
    }
    phi.apply(p)
}

/// A linear or conjugate-linear endomorphism of the 248-dimensional space.
/// With the flag set the map acts as v |-> M conj(v).
#[derive(Clone, PartialEq, Debug)]
pub struct AlgebraMap {
    pub mat: SpMat,
    pub antilinear: bool,
}

impl AlgebraMap {
    pub fn identity() -> Self {
        AlgebraMap {
            mat: SpMat::identity(E8_DIM),
            antilinear: false,
        }
    }

    pub fn linear(mat: SpMat) -> Self {
        AlgebraMap {
            mat,
            antilinear: false,
        }
    }

    pub fn antilinear(mat: SpMat) -> Self {
        AlgebraMap {
            mat,
            antilinear: true,
        }
    }

    pub fn apply_vec(&self, v: &SpVec) -> SpVec {
        if self.antilinear {
            self.mat.apply(&v.conj())
        } else {
            self.mat.apply(v)
        }
    }

    pub fn apply(&self, r: &E8Element) -> E8Element {
        E8Element::from_vec(&self.apply_vec(&r.to_vec()))
    }

    /// self after rhs: v |-> self(rhs(v)). Antilinear flags compose by parity.
    pub fn compose(&self, rhs: &AlgebraMap) -> AlgebraMap {
        let inner = if self.antilinear {
            rhs.mat.conj()
        } else {
            rhs.mat.clone()
        };
        AlgebraMap {
            mat: self.mat.compose(&inner),
            antilinear: self.antilinear ^ rhs.antilinear,
        }
    }

    pub fn pow(&self, n: u32) -> AlgebraMap {
        let mut out = AlgebraMap::identity();
        for _ in 0..n {
            out = self.compose(&out);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraMap {
        AlgebraMap {
            mat: self.mat.scale(c),
            antilinear: self.antilinear,
        }
    }

    pub fn is_identity(&self) -> bool {
        !self.antilinear && self.mat == SpMat::identity(E8_DIM)
    }

    /// The 496-dimensional real view: coordinates split as
    /// (real parts 0..248, imaginary parts 248..496).
    pub fn to_real_view(&self) -> SpMat {
        let mut out = SpMat::zero(2 * E8_DIM);
        for (j, col) in self.mat.cols.iter().enumerate() {
            for (i, v) in &col.entries {
                let re = v.re_part();
                let im = v.im_part();
                // column j (real input): M e_j contributes (re, im)
                if !re.is_zero() {
                    out.set(*i, j, re.clone());
                }
                if !im.is_zero() {
                    out.set(E8_DIM + *i, j, im.clone());
                }
                // column E8_DIM + j (imaginary input): +/- i M e_j
                let (re_i, im_i) = if self.antilinear {
                    (im.clone(), -&re)
                } else {
                    (-&im, re.clone())
                };
                if !re_i.is_zero() {
                    out.set(*i, E8_DIM + j, re_i);
                }
                if !im_i.is_zero() {
                    out.set(E8_DIM + *i, E8_DIM + j, im_i);
                }
            }
        }
        out
    }
}

/// Matrix of ad(R) = bracket(R, .) over the coordinate basis.
pub fn ad(r: &E8Element) -> AlgebraMap {
    let cols = e8_basis().iter().map(|e| bracket(r, e).to_vec()).collect();
    AlgebraMap::linear(SpMat::from_cols(E8_DIM, cols))
}

/// Trace form tr(ad R1 . ad R2); the invariant bilinear form used by the
/// norm checks (caller applies any normalization constant).
pub fn killing(r1: &E8Element, r2: &E8Element) -> Scalar {
    let a1 = ad(r1);
    let a2 = ad(r2);
    a1.mat.trace_product(&a2.mat)
}

pub fn killing_of_ads(a1: &AlgebraMap, a2: &AlgebraMap) -> Scalar {
    a1.mat.trace_product(&a2.mat)
}

/// exp((2 pi i / n) ad R) for ad R diagonalizable with integer spectrum,
/// evaluated exactly per eigenvalue as a root of unity.
pub fn exp_ad_unit(r: &E8Element, n: u32) -> Result<AlgebraMap, E8Error> {
    let adr = ad(r);
    exp_unit_of(&adr.mat, n)
}

fn exp_unit_of(mat: &SpMat, n: u32) -> Result<AlgebraMap, E8Error> {
    let spectrum = integer_spectrum(mat)?;
    for lam in &spectrum {
        root_of_unity(n, *lam)?;
    }
    let out = spectral_function(mat, &spectrum, |l| root_of_unity(n, l).unwrap())?;
    Ok(AlgebraMap::linear(out))
}

/// Conjugation block: the 133x133 matrix of Phi |-> g Phi g^{-1} over the
/// generator coordinates. Errors if conjugation leaves the generator span.
fn conjugation_block(g: &PMap) -> Result<SpMat, E8Error> {
    let g_inv = g.inverse();
    let mut out = SpMat::zero(E7_DIM);
    for (k, gen) in e7_basis().iter().enumerate() {
        let sandwich = g.compose(gen.mat()).compose(&g_inv);
        let extracted = E7Gen::from_matrix(&sandwich)
            .map_err(|_| crate::freudenthal::FreudenthalError::DoesNotNormalize)?;
        out.cols[k] = extracted.to_coords()?;
    }
    Ok(out)
}

/// Same with the antilinear sandwich (tau lambda) Phi (lambda^{-1} tau);
/// used by the conjugate-linear involution.
fn conjugation_block_tau_lambda() -> Result<SpMat, E8Error> {
    let mut out = SpMat::zero(E7_DIM);
    for (k, gen) in e7_basis().iter().enumerate() {
        let sandwich = tau_lambda_sandwich(gen.mat());
        let extracted = E7Gen::from_matrix(&sandwich)
            .map_err(|_| crate::freudenthal::FreudenthalError::DoesNotNormalize)?;
        out.cols[k] = extracted.to_coords()?;
    }
    Ok(out)
}

fn embed_phi_block(out: &mut SpMat, block: &SpMat) {
    for (j, col) in block.cols.iter().enumerate() {
        for (i, v) in &col.entries {
            out.set(*i, j, v.clone());
        }
    }
}

/// Write `c * block` (56x56) into the P/Q quadrant mapping `src` slot
/// coordinates into `dst` slot coordinates.
fn embed_p_block(out: &mut SpMat, dst: usize, src: usize, block: &PMap, c: &Scalar) {
    for (j, col) in block.cols.iter().enumerate() {
        for (i, v) in &col.entries {
            let val = v * c;
            if !val.is_zero() {
                out.set(dst + i, src + j, val);
            }
        }
    }
}

/// Lift an invertible transformation g of the Freudenthal space:
/// (Phi, P, Q, r, s, t) |-> (g Phi g^{-1}, g P, g Q, r, s, t).
pub fn lift_e7(g: &PMap) -> Result<AlgebraMap, E8Error> {
    let mut mat = SpMat::zero(E8_DIM);
    embed_phi_block(&mut mat, &conjugation_block(g)?);
    let one = Scalar::one();
    embed_p_block(&mut mat, P_OFF, P_OFF, g, &one);
    embed_p_block(&mut mat, Q_OFF, Q_OFF, g, &one);
    mat.set(R_IDX, R_IDX, one.clone());
    mat.set(S_IDX, S_IDX, one.clone());
    mat.set(T_IDX, T_IDX, one);
    Ok(AlgebraMap::linear(mat))
}

/// Names of the fixed transformations of the 248-dimensional space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum E8MapName {
    Omega4,
    Upsilon,
    Kappa3,
    Kappa4,
    Epsilon4,
    Zeta,
    ZetaDelta,
    ZetaDeltaInv,
    TauLambdaOmega,
}

/// A named map: total transformations carry their exact matrix; the
/// degree-two transfers are partial with declared domain and codomain.
pub enum BuiltMap {
    Total(AlgebraMap),
    Partial(PartialMap),
}

impl BuiltMap {
    pub fn total(self) -> AlgebraMap {
        match self {
            BuiltMap::Total(m) => m,
            BuiltMap::Partial(p) => panic!("{:?} is a partial map", p.name),
        }
    }

    pub fn partial(self) -> PartialMap {
        match self {
            BuiltMap::Partial(p) => p,
            BuiltMap::Total(_) => panic!("map is total"),
        }
    }
}

/// Construct one of the named transformations.
pub fn build_e8_map(name: E8MapName) -> Result<BuiltMap, E8Error> {
    let one = Scalar::one();
    let i = Scalar::i();
    let w = Scalar::omega();
    let w2 = &w * &w;
    let map = match name {
        E8MapName::Omega4 => {
            let iota = build_p_map(PMapName::Iota);
            let mut mat = SpMat::zero(E8_DIM);
            embed_phi_block(&mut mat, &conjugation_block(&iota)?);
            let minus = -&one;
            embed_p_block(&mut mat, P_OFF, P_OFF, &iota, &minus);
            embed_p_block(&mut mat, Q_OFF, Q_OFF, &iota, &minus);
            mat.set(R_IDX, R_IDX, one.clone());
            mat.set(S_IDX, S_IDX, one.clone());
            mat.set(T_IDX, T_IDX, one.clone());
            BuiltMap::Total(AlgebraMap::linear(mat))
        }
        E8MapName::Upsilon => {
            // (Phi, -P, -Q, r, s, t)
            let mut mat = SpMat::identity(E8_DIM);
            for j in P_OFF..R_IDX {
                mat.set(j, j, -&one);
            }
            BuiltMap::Total(AlgebraMap::linear(mat))
        }
        E8MapName::Kappa3 => {
            let nu3 = build_p_map(PMapName::Nu3);
            let mut mat = SpMat::zero(E8_DIM);
            embed_phi_block(&mut mat, &conjugation_block(&nu3)?);
            embed_p_block(&mut mat, P_OFF, P_OFF, &nu3, &w2);
            embed_p_block(&mut mat, Q_OFF, Q_OFF, &nu3, &w);
            mat.set(R_IDX, R_IDX, one.clone());
            mat.set(S_IDX, S_IDX, w.clone());
            mat.set(T_IDX, T_IDX, w2.clone());
            BuiltMap::Total(AlgebraMap::linear(mat))
        }
        E8MapName::Kappa4 => {
            let nu4 = build_p_map(PMapName::Nu4);
            let mut mat = SpMat::zero(E8_DIM);
            embed_phi_block(&mut mat, &conjugation_block(&nu4)?);
            embed_p_block(&mut mat, P_OFF, P_OFF, &nu4, &-&i);
            embed_p_block(&mut mat, Q_OFF, Q_OFF, &nu4, &i);
            mat.set(R_IDX, R_IDX, one.clone());
            mat.set(S_IDX, S_IDX, -&one);
            mat.set(T_IDX, T_IDX, -&one);
            BuiltMap::Total(AlgebraMap::linear(mat))
        }
        E8MapName::Epsilon4 => {
            let nu4 = build_p_map(PMapName::Nu4);
            let mut mat = SpMat::zero(E8_DIM);
            embed_phi_block(&mut mat, &conjugation_block(&nu4)?);
            let minus = -&one;
            embed_p_block(&mut mat, P_OFF, P_OFF, &nu4, &minus);
            embed_p_block(&mut mat, Q_OFF, Q_OFF, &nu4, &minus);
            mat.set(R_IDX, R_IDX, one.clone());
            mat.set(S_IDX, S_IDX, one.clone());
            mat.set(T_IDX, T_IDX, one.clone());
            BuiltMap::Total(AlgebraMap::linear(mat))
        }
        E8MapName::Zeta => {
            // (zeta1 Phi zeta1^{-1}, i zeta1 Q, i zeta1 P, -r, t, s)
            let z1 = build_p_map(PMapName::Zeta1);
            let mut mat = SpMat::zero(E8_DIM);
            embed_phi_block(&mut mat, &conjugation_block(&z1)?);
            embed_p_block(&mut mat, P_OFF, Q_OFF, &z1, &i);
            embed_p_block(&mut mat, Q_OFF, P_OFF, &z1, &i);
            mat.set(R_IDX, R_IDX, -&one);
            mat.set(S_IDX, T_IDX, one.clone());
            mat.set(T_IDX, S_IDX, one.clone());
            BuiltMap::Total(AlgebraMap::linear(mat))
        }
        E8MapName::TauLambdaOmega => {
            // (tau lambda Phi lambda^{-1} tau, tau lambda Q, -tau lambda P,
            //  -tau r, -tau t, -tau s), conjugate-linear
            let lam = build_p_map(PMapName::Lambda);
            let mut mat = SpMat::zero(E8_DIM);
            embed_phi_block(&mut mat, &conjugation_block_tau_lambda()?);
            embed_p_block(&mut mat, P_OFF, Q_OFF, &lam, &one);
            embed_p_block(&mut mat, Q_OFF, P_OFF, &lam, &-&one);
            mat.set(R_IDX, R_IDX, -&one);
            mat.set(S_IDX, T_IDX, -&one);
            mat.set(T_IDX, S_IDX, -&one);
            BuiltMap::Total(AlgebraMap::antilinear(mat))
        }
        E8MapName::ZetaDelta | E8MapName::ZetaDeltaInv => BuiltMap::Partial(PartialMap { name }),
    };
    Ok(map)
}

/// A partial map with declared domain inside one graded piece.
pub struct PartialMap {
    pub name: E8MapName,
}

impl PartialMap {
    pub fn apply(&self, r: &E8Element) -> Result<E8Element, E8Error> {
        match self.name {
            E8MapName::ZetaDelta => zeta_delta(r),
            E8MapName::ZetaDeltaInv => zeta_delta_inv(r),
            _ => Err(E8Error::OutsideDomain),
        }
    }
}

/// Coordinates of the minus-two graded piece: (Phi(0, u1 E1, 0, 0),
/// (xi1 E1, eta2 E2 + eta3 E3 + F1(y1), xi, 0), 0, 0, s, 0).
struct GradedMinusTwo {
    u1: Scalar,
    xi1: Scalar,
    eta2: Scalar,
    eta3: Scalar,
    y1: [Scalar; 8],
    xi: Scalar,
    s: Scalar,
}

fn read_minus_two(r: &E8Element) -> Result<GradedMinusTwo, E8Error> {
    let out = GradedMinusTwo {
        u1: r.phi.a.xi[0].clone(),
        xi1: r.p.x.xi[0].clone(),
        eta2: r.p.y.xi[1].clone(),
        eta3: r.p.y.xi[2].clone(),
        y1: r.p.y.x[0].c.clone(),
        xi: r.p.xi.clone(),
        s: r.s.clone(),
    };
    // everything else must vanish
    let mut rebuilt = E8Element::zero();
    rebuilt.phi = E7Gen::new_unchecked(
        SpMat::zero(JORDAN_DIM),
        JordanC::e(1).scale(&out.u1),
        JordanC::zero(),
        Scalar::zero(),
    );
    rebuilt.p = PVector::new(
        JordanC::e(1).scale(&out.xi1),
        {
            let mut y = JordanC::e(2)
                .scale(&out.eta2)
                .add(&JordanC::e(3).scale(&out.eta3));
            y = y.add(&JordanC::f(
                1,
                crate::cayley::OctonionC::from_coords(out.y1.clone()),
            ));
            y
        },
        out.xi.clone(),
        Scalar::zero(),
    );
    rebuilt.s = out.s.clone();
    if rebuilt != *r {
        return Err(E8Error::OutsideDomain);
    }
    Ok(out)
}

/// Coordinates of the plus-two graded piece: (Phi(0, 0, rho1 E1, 0), 0,
/// (xi2 E2 + xi3 E3 + F1(x1), eta1 E1, 0, eta), 0, 0, t).
struct GradedPlusTwo {
    rho1: Scalar,
    xi2: Scalar,
    xi3: Scalar,
    x1: [Scalar; 8],
    eta1: Scalar,
    eta: Scalar,
    t: Scalar,
}

fn read_plus_two(r: &E8Element) -> Result<GradedPlusTwo, E8Error> {
    let out = GradedPlusTwo {
        rho1: r.phi.b.xi[0].clone(),
        xi2: r.q.x.xi[1].clone(),
        xi3: r.q.x.xi[2].clone(),
        x1: r.q.x.x[0].c.clone(),
        eta1: r.q.y.xi[0].clone(),
        eta: r.q.eta.clone(),
        t: r.t.clone(),
    };
    let mut rebuilt = E8Element::zero();
    rebuilt.phi = E7Gen::new_unchecked(
        SpMat::zero(JORDAN_DIM),
        JordanC::zero(),
        JordanC::e(1).scale(&out.rho1),
        Scalar::zero(),
    );
    rebuilt.q = PVector::new(
        {
            let mut x = JordanC::e(2)
                .scale(&out.xi2)
                .add(&JordanC::e(3).scale(&out.xi3));
            x = x.add(&JordanC::f(
                1,
                crate::cayley::OctonionC::from_coords(out.x1.clone()),
            ));
            x
        },
        JordanC::e(1).scale(&out.eta1),
        Scalar::zero(),
        out.eta.clone(),
    );
    rebuilt.t = out.t.clone();
    if rebuilt != *r {
        return Err(E8Error::OutsideDomain);
    }
    Ok(out)
}

/// The degree-two transfer from the minus-two piece to the plus-two piece:
/// (Phi(0, u1 E1, 0, 0), (xi1 E1, eta2 E2 + eta3 E3 + F1(y1), xi, 0),
///  0, 0, s, 0)
///   |-> (Phi(0, 0, -s E1, 0), 0,
///        (-eta3 E2 - eta2 E3 + F1(y1), -xi E1, 0, -xi1), 0, 0, -u1).
pub fn zeta_delta(r: &E8Element) -> Result<E8Element, E8Error> {
    let c = read_minus_two(r)?;
    let mut out = E8Element::zero();
    out.phi = E7Gen::new_unchecked(
        SpMat::zero(JORDAN_DIM),
        JordanC::zero(),
        JordanC::e(1).scale(&-&c.s),
        Scalar::zero(),
    );
    out.q = PVector::new(
        JordanC::e(2)
            .scale(&-&c.eta3)
            .add(&JordanC::e(3).scale(&-&c.eta2))
            .add(&JordanC::f(
                1,
                crate::cayley::OctonionC::from_coords(c.y1.clone()),
            )),
        JordanC::e(1).scale(&-&c.xi),
        Scalar::zero(),
        -&c.xi1,
    );
    out.t = -&c.u1;
    Ok(out)
}

/// Inverse transfer:
/// (Phi(0, 0, rho1 E1, 0), 0, (xi2 E2 + xi3 E3 + F1(x1), eta1 E1, 0, eta),
///  0, 0, t)
///   |-> (Phi(0, -t E1, 0, 0),
///        (-eta E1, -xi3 E2 - xi2 E3 + F1(x1), -eta1, 0), 0, 0, -rho1, 0).
pub fn zeta_delta_inv(r: &E8Element) -> Result<E8Element, E8Error> {
    let c = read_plus_two(r)?;
    let mut out = E8Element::zero();
    out.phi = E7Gen::new_unchecked(
        SpMat::zero(JORDAN_DIM),
        JordanC::e(1).scale(&-&c.t),
        JordanC::zero(),
        Scalar::zero(),
    );
    out.p = PVector::new(
        JordanC::e(1).scale(&-&c.eta),
        JordanC::e(2)
            .scale(&-&c.xi3)
            .add(&JordanC::e(3).scale(&-&c.xi2))
            .add(&JordanC::f(
                1,
                crate::cayley::OctonionC::from_coords(c.x1.clone()),
            )),
        -&c.eta1,
        Scalar::zero(),
    );
    out.s = -&c.rho1;
    Ok(out)
}

/// Embedding of 2x2 special unitary matrices [[a, -tau b], [b, tau a]]:
/// identity on the generator block, and the displayed mixing of the two
/// Freudenthal slots and the three scalar slots.
pub fn phi_su2(m: &[[Scalar; 2]; 2]) -> Result<AlgebraMap, E8Error> {
    let a = m[0][0].clone();
    let b = m[1][0].clone();
    let ta = a.tau();
    let tb = b.tau();
    let su2_ok = {
        let shape = m[0][1] == -&tb && m[1][1] == ta;
        let unit = &(&ta * &a) + &(&tb * &b);
        if a.is_exact() && b.is_exact() && m[0][1].is_exact() && m[1][1].is_exact() {
            shape && unit == Scalar::one()
        } else {
            m[0][1].approx_eq(&-&tb, 1e-9)
                && m[1][1].approx_eq(&ta, 1e-9)
                && unit.approx_eq(&Scalar::one(), 1e-9)
        }
    };
    if !su2_ok {
        return Err(E8Error::NotSU2);
    }
    let mut mat = SpMat::zero(E8_DIM);
    for k in 0..E7_DIM {
        mat.set(k, k, Scalar::one());
    }
    let id56 = SpMat::identity(P_DIM);
    embed_p_block(&mut mat, P_OFF, P_OFF, &id56, &ta);
    embed_p_block(&mut mat, P_OFF, Q_OFF, &id56, &b);
    embed_p_block(&mut mat, Q_OFF, P_OFF, &id56, &-&tb);
    embed_p_block(&mut mat, Q_OFF, Q_OFF, &id56, &a);
    // r' = ((tau a) a - (tau b) b) r + (tau a)(tau b) s + a b t
    mat.set(R_IDX, R_IDX, &(&ta * &a) - &(&tb * &b));
    mat.set(R_IDX, S_IDX, &ta * &tb);
    mat.set(R_IDX, T_IDX, &a * &b);
    // s' = -2 (tau a) b r + (tau a)^2 s - b^2 t
    mat.set(S_IDX, R_IDX, &Scalar::int(-2) * &(&ta * &b));
    mat.set(S_IDX, S_IDX, &ta * &ta);
    mat.set(S_IDX, T_IDX, -&(&b * &b));
    // t' = -2 a (tau b) r - (tau b)^2 s + a^2 t
    // (the r-coefficient is forced by the exponential form of the
    // embedding and by the homomorphism property)
    mat.set(T_IDX, R_IDX, &Scalar::int(-2) * &(&a * &tb));
    mat.set(T_IDX, S_IDX, -&(&tb * &tb));
    mat.set(T_IDX, T_IDX, &a * &a);
    Ok(AlgebraMap::linear(mat))
}

/// The one-parameter family
/// (psi(a) Phi psi(a)^{-1}, a psi(a) P, a^{-1} psi(a) Q, r, a^2 s, a^{-2} t).
pub fn phi_cstar(a: &Scalar) -> Result<AlgebraMap, E8Error> {
    assert!(!a.is_zero(), "phi_cstar requires an invertible scalar");
    let g = psi(a);
    let ai = a.inv();
    let mut mat = SpMat::zero(E8_DIM);
    embed_phi_block(&mut mat, &conjugation_block(&g)?);
    embed_p_block(&mut mat, P_OFF, P_OFF, &g, a);
    embed_p_block(&mut mat, Q_OFF, Q_OFF, &g, &ai);
    mat.set(R_IDX, R_IDX, Scalar::one());
    mat.set(S_IDX, S_IDX, a * a);
    mat.set(T_IDX, T_IDX, &ai * &ai);
    Ok(AlgebraMap::linear(mat))
}

/// The lifted scalar transformation phi_U1(theta) of the Freudenthal space.
pub fn lift_phi_u1(theta: &Scalar) -> Result<AlgebraMap, E8Error> {
    lift_e7(&phi_u1(theta))
}

fn pair_index(i: usize, j: usize) -> usize {
    // upper-triangular flat index, i < j
    i * E8_DIM - i * (i + 1) / 2 + (j - i - 1)
}

/// Structure constants: brackets of all basis pairs (i < j), built once.
pub fn basis_bracket_table() -> &'static Vec<SpVec> {
    static TABLE: OnceLock<Vec<SpVec>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let basis = e8_basis();
        let mut out = Vec::with_capacity(E8_DIM * (E8_DIM - 1) / 2);
        for i in 0..E8_DIM {
            for j in (i + 1)..E8_DIM {
                out.push(bracket(&basis[i], &basis[j]).to_vec());
            }
        }
        out
    })
}

/// Bracket of coordinate vectors, expanded bilinearly over the structure
/// constants.
pub fn bracket_vec(u: &SpVec, v: &SpVec) -> SpVec {
    let table = basis_bracket_table();
    let mut acc = SpVec::zero();
    for (i, a) in &u.entries {
        for (j, b) in &v.entries {
            if i == j {
                continue;
            }
            let (idx, sign_flip) = if i < j {
                (pair_index(*i, *j), false)
            } else {
                (pair_index(*j, *i), true)
            };
            let mut c = a * b;
            if sign_flip {
                c = -&c;
            }
            acc = acc.add_scaled(&table[idx], &c);
        }
    }
    acc
}

/// Adjoint matrix of a coordinate vector via the structure constants.
pub fn ad_vec(u: &SpVec) -> SpMat {
    let mut cols = Vec::with_capacity(E8_DIM);
    for j in 0..E8_DIM {
        cols.push(bracket_vec(u, &SpVec::unit(j)));
    }
    SpMat::from_cols(E8_DIM, cols)
}

/// Trace form on coordinate vectors via the structure constants.
pub fn killing_vec(u: &SpVec, v: &SpVec) -> Scalar {
    ad_vec(u).trace_product(&ad_vec(v))
}

/// Checks m[X, Y] = [mX, mY] over all basis pairs; for conjugate-linear
/// maps this is the automorphism property of the underlying real algebra.
pub fn is_automorphism(m: &AlgebraMap) -> bool {
    automorphism_defect(m).is_none()
}

/// First basis pair where the map fails to preserve the bracket, if any.
pub fn automorphism_defect(m: &AlgebraMap) -> Option<(usize, usize)> {
    let table = basis_bracket_table();
    let images: Vec<SpVec> = (0..E8_DIM).map(|j| m.apply_vec(&SpVec::unit(j))).collect();
    for i in 0..E8_DIM {
        for j in (i + 1)..E8_DIM {
            let br = &table[pair_index(i, j)];
            let lhs = m.apply_vec(br);
            let rhs = bracket_vec(&images[i], &images[j]);
            if lhs != rhs {
                return Some((i, j));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    pub(crate) fn rand_element(rng: &mut StdRng) -> E8Element {
        let mut entries = Vec::new();
        for _ in 0..5 {
            let i = rng.gen_range(0..E8_DIM);
            entries.push((
                i,
                Scalar::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=2)),
            ));
        }
        E8Element::from_vec(&SpVec::from_entries(entries))
    }

    #[test]
    fn bracket_examples() {
        let kappa = E8Element::kappa();
        let mut s_axis = E8Element::zero();
        s_axis.s = Scalar::int(5);
        let br = bracket(&kappa, &s_axis);
        let mut expect = E8Element::zero();
        expect.s = Scalar::int(-10);
        assert_eq!(br, expect);

        // r-axis acts as +1 on the P slot
        let mut r_axis = E8Element::zero();
        r_axis.r = Scalar::one();
        let mut p_elt = E8Element::zero();
        p_elt.p = PVector::new(
            JordanC::e(2),
            JordanC::zero(),
            Scalar::zero(),
            Scalar::zero(),
        );
        assert_eq!(bracket(&r_axis, &p_elt), p_elt);

        let mut rng = StdRng::seed_from_u64(20);
        for _ in 0..10 {
            let x = rand_element(&mut rng);
            assert!(bracket(&x, &x).is_zero());
        }
    }

    #[test]
    fn bracket_vec_matches_bracket() {
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..20 {
            let x = rand_element(&mut rng);
            let y = rand_element(&mut rng);
            assert_eq!(
                bracket_vec(&x.to_vec(), &y.to_vec()),
                bracket(&x, &y).to_vec()
            );
        }
    }

    #[test]
    fn jacobi_on_random_triples() {
        let mut rng = StdRng::seed_from_u64(21);
        for _ in 0..60 {
            let x = rand_element(&mut rng);
            let y = rand_element(&mut rng);
            let z = rand_element(&mut rng);
            let j = bracket(&x, &bracket(&y, &z))
                .add(&bracket(&y, &bracket(&z, &x)))
                .add(&bracket(&z, &bracket(&x, &y)));
            assert!(j.is_zero());
        }
    }

    #[test]
    fn ad_kappa_spectrum() {
        let adk = ad(&E8Element::kappa());
        let spec = integer_spectrum(&adk.mat).unwrap();
        assert_eq!(spec, vec![-2, -1, 0, 1, 2]);
        let e = e8_basis();
        // s-axis sits in the minus-two eigenspace
        let s_col = adk.mat.cols[S_IDX].clone();
        assert_eq!(s_col, e[S_IDX].to_vec().scale(&Scalar::int(-2)));
        // the displayed minus-two pattern in the first Freudenthal slot
        let mut r = E8Element::zero();
        r.p = PVector::new(
            JordanC::e(1).scale(&Scalar::int(3)),
            JordanC::e(2)
                .scale(&Scalar::int(2))
                .add(&JordanC::e(3).scale(&Scalar::int(-1)))
                .add(&JordanC::f(1, crate::cayley::OctonionC::unit(5))),
            Scalar::int(4),
            Scalar::zero(),
        );
        assert_eq!(bracket(&E8Element::kappa(), &r), r.scale(&Scalar::int(-2)));
        // adjoint of zero is the zero map
        assert!(ad(&E8Element::zero()).mat.is_zero());
    }

    #[test]
    fn exp_reproduces_named_maps() {
        let kappa = E8Element::kappa();
        let kappa4 = build_e8_map(E8MapName::Kappa4).unwrap().total();
        assert_eq!(exp_ad_unit(&kappa, 4).unwrap(), kappa4);
        let kappa3 = build_e8_map(E8MapName::Kappa3).unwrap().total();
        assert_eq!(exp_ad_unit(&kappa, 3).unwrap(), kappa3);
    }

    #[test]
    fn omega4_relations() {
        let omega4 = build_e8_map(E8MapName::Omega4).unwrap().total();
        let upsilon = build_e8_map(E8MapName::Upsilon).unwrap().total();
        assert_eq!(omega4.pow(2), upsilon);
        assert!(omega4.pow(4).is_identity());
        // generator with scaling weight nine
        let z9 = E8Element::from_phi(E7Gen::new_unchecked(
            SpMat::zero(JORDAN_DIM),
            JordanC::zero(),
            JordanC::zero(),
            Scalar::int(9),
        ));
        assert_eq!(exp_ad_unit(&z9, 4).unwrap(), omega4);
    }

    #[test]
    fn epsilon4_as_exponential() {
        let eps = build_e8_map(E8MapName::Epsilon4).unwrap().total();
        assert!(eps.pow(4).is_identity());
        let phi6 = vee(&JordanC::e(1), &JordanC::e(1)).scale(&Scalar::int(-2));
        let z = E8Element::from_phi(E7Gen::new_unchecked(
            phi6,
            JordanC::zero(),
            JordanC::zero(),
            Scalar::int(5),
        ));
        assert_eq!(exp_ad_unit(&z, 4).unwrap(), eps);
    }

    #[test]
    fn exp_of_nilpotent_adjoint_is_rejected() {
        // a pure Freudenthal-slot element has nilpotent adjoint, which is
        // not diagonalizable over the integers
        let mut r = E8Element::zero();
        r.p = PVector::new(JordanC::e(1), JordanC::zero(), Scalar::zero(), Scalar::zero());
        assert!(exp_ad_unit(&r, 4).is_err());
    }

    #[test]
    fn non_normalizing_lift_is_rejected() {
        // scaling a single diagonal coordinate does not normalize the
        // generator algebra
        let mut g = SpMat::identity(P_DIM);
        g.set(0, 0, Scalar::int(2));
        assert!(lift_e7(&g).is_err());
    }

    #[test]
    fn zeta_delta_roundtrip() {
        let mut rng = StdRng::seed_from_u64(22);
        for _ in 0..10 {
            // random minus-two element through its seven free coordinates
            let mut r = E8Element::zero();
            r.phi = E7Gen::new_unchecked(
                SpMat::zero(JORDAN_DIM),
                JordanC::e(1).scale(&Scalar::int(rng.gen_range(-3..=3))),
                JordanC::zero(),
                Scalar::zero(),
            );
            r.p = PVector::new(
                JordanC::e(1).scale(&Scalar::int(rng.gen_range(-3..=3))),
                JordanC::e(2)
                    .scale(&Scalar::int(rng.gen_range(-3..=3)))
                    .add(&JordanC::e(3).scale(&Scalar::int(rng.gen_range(-3..=3))))
                    .add(&JordanC::f(
                        1,
                        crate::cayley::OctonionC::unit(rng.gen_range(0..8)),
                    )),
                Scalar::int(rng.gen_range(-3..=3)),
                Scalar::zero(),
            );
            r.s = Scalar::int(rng.gen_range(-3..=3));
            let fwd = zeta_delta(&r).unwrap();
            let back = zeta_delta_inv(&fwd).unwrap();
            assert_eq!(back, r);
        }
        // outside the domain
        let mut bad = E8Element::zero();
        bad.r = Scalar::one();
        assert!(zeta_delta(&bad).is_err());
    }

    #[test]
    fn su2_embedding() {
        let e = [
            [Scalar::one(), Scalar::zero()],
            [Scalar::zero(), Scalar::one()],
        ];
        assert!(phi_su2(&e).unwrap().is_identity());
        let minus_e = [
            [-&Scalar::one(), Scalar::zero()],
            [Scalar::zero(), -&Scalar::one()],
        ];
        let upsilon = build_e8_map(E8MapName::Upsilon).unwrap().total();
        assert_eq!(phi_su2(&minus_e).unwrap(), upsilon);
        // homomorphism on exact points
        let a1 = Scalar::ratio(3, 5);
        let b1 = Scalar::ratio(4, 5);
        let m1 = [[a1.clone(), -&b1.tau()], [b1.clone(), a1.tau()]];
        let a2 = Scalar::ratio(5, 13);
        let b2 = Scalar::ratio(12, 13);
        let m2 = [[a2.clone(), -&b2.tau()], [b2.clone(), a2.tau()]];
        let prod = [
            [
                &(&m1[0][0] * &m2[0][0]) + &(&m1[0][1] * &m2[1][0]),
                &(&m1[0][0] * &m2[0][1]) + &(&m1[0][1] * &m2[1][1]),
            ],
            [
                &(&m1[1][0] * &m2[0][0]) + &(&m1[1][1] * &m2[1][0]),
                &(&m1[1][0] * &m2[0][1]) + &(&m1[1][1] * &m2[1][1]),
            ],
        ];
        assert_eq!(
            phi_su2(&m1).unwrap().compose(&phi_su2(&m2).unwrap()),
            phi_su2(&prod).unwrap()
        );
        // reject a non-unitary matrix
        let bad = [
            [Scalar::int(2), Scalar::zero()],
            [Scalar::zero(), Scalar::ratio(1, 2)],
        ];
        assert!(phi_su2(&bad).is_err());
    }

    #[test]
    fn phi_cstar_values() {
        assert!(phi_cstar(&Scalar::one()).unwrap().is_identity());
        let pi = phi_cstar(&Scalar::i()).unwrap();
        let pmi = phi_cstar(&-&Scalar::i()).unwrap();
        assert!(pi.compose(&pmi).is_identity());
    }

    #[test]
    fn tau_lambda_omega_involution() {
        let tlo = build_e8_map(E8MapName::TauLambdaOmega).unwrap().total();
        assert!(tlo.antilinear);
        assert!(tlo.compose(&tlo).is_identity());
        // conjugation rule on the one-parameter family
        for a in [Scalar::int(2), Scalar::i(), &Scalar::one() + &Scalar::i()] {
            let lhs = tlo.compose(&phi_cstar(&a).unwrap()).compose(&tlo);
            let rhs = phi_cstar(&a.tau().inv()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn scaling_s_only_is_not_automorphism() {
        let mut mat = SpMat::identity(E8_DIM);
        mat.set(S_IDX, S_IDX, Scalar::int(2));
        let m = AlgebraMap::linear(mat);
        // [s-axis, t-axis] = r-axis breaks under scaling s alone
        let basis = e8_basis();
        let br = bracket(&basis[S_IDX], &basis[T_IDX]);
        let lhs = m.apply(&br);
        let rhs = bracket(&m.apply(&basis[S_IDX]), &m.apply(&basis[T_IDX]));
        assert_ne!(lhs, rhs);
    }
}
