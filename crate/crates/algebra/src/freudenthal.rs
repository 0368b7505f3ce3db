//! The 56-dimensional Freudenthal space J + J + C + C, the 133-dimensional
//! Lie algebra of generators Phi(phi, A, B, nu) acting on it, the symplectic
//! form, the Freudenthal cross of two vectors, and the named linear
//! transformations of the space used by the 248-dimensional layer.

use crate::jordan::{endo_transpose, jcross, jinner, vee, E6Basis, E6Endo, JordanC, JORDAN_DIM};
use crate::linalg::{Echelon, SpMat, SpVec};
use crate::scalar::Scalar;
use std::sync::OnceLock;

pub const P_DIM: usize = 56;
pub const E7_DIM: usize = 133;

const Y_OFF: usize = JORDAN_DIM;
const XI_IDX: usize = 2 * JORDAN_DIM;
const ETA_IDX: usize = 2 * JORDAN_DIM + 1;

/// An element (X, Y, xi, eta) of the Freudenthal space.
#[derive(Clone, PartialEq, Debug)]
pub struct PVector {
    pub x: JordanC,
    pub y: JordanC,
    pub xi: Scalar,
    pub eta: Scalar,
}

impl PVector {
    pub fn zero() -> Self {
        PVector {
            x: JordanC::zero(),
            y: JordanC::zero(),
            xi: Scalar::zero(),
            eta: Scalar::zero(),
        }
    }

    pub fn new(x: JordanC, y: JordanC, xi: Scalar, eta: Scalar) -> Self {
        PVector { x, y, xi, eta }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.xi.is_zero() && self.eta.is_zero()
    }

    pub fn add(&self, rhs: &PVector) -> PVector {
        PVector {
            x: self.x.add(&rhs.x),
            y: self.y.add(&rhs.y),
            xi: &self.xi + &rhs.xi,
            eta: &self.eta + &rhs.eta,
        }
    }

    pub fn sub(&self, rhs: &PVector) -> PVector {
        PVector {
            x: self.x.sub(&rhs.x),
            y: self.y.sub(&rhs.y),
            xi: &self.xi - &rhs.xi,
            eta: &self.eta - &rhs.eta,
        }
    }

    pub fn neg(&self) -> PVector {
        self.scale(&-&Scalar::one())
    }

    pub fn scale(&self, s: &Scalar) -> PVector {
        PVector {
            x: self.x.scale(s),
            y: self.y.scale(s),
            xi: &self.xi * s,
            eta: &self.eta * s,
        }
    }

    pub fn tau(&self) -> PVector {
        PVector {
            x: self.x.tau(),
            y: self.y.tau(),
            xi: self.xi.tau(),
            eta: self.eta.tau(),
        }
    }

    pub fn to_vec(&self) -> SpVec {
        let mut entries: Vec<(usize, Scalar)> = self.x.to_vec().entries;
        for (i, v) in self.y.to_vec().entries {
            entries.push((Y_OFF + i, v));
        }
        if !self.xi.is_zero() {
            entries.push((XI_IDX, self.xi.clone()));
        }
        if !self.eta.is_zero() {
            entries.push((ETA_IDX, self.eta.clone()));
        }
        SpVec::from_entries(entries)
    }

    pub fn from_vec(v: &SpVec) -> PVector {
        let mut out = PVector::zero();
        for (i, s) in &v.entries {
            match *i {
                XI_IDX => out.xi = s.clone(),
                ETA_IDX => out.eta = s.clone(),
                i if i < Y_OFF => out.x.set_coord(i, s.clone()),
                i => out.y.set_coord(i - Y_OFF, s.clone()),
            }
        }
        out
    }
}

/// A generator Phi(phi, A, B, nu) of the 133-dimensional algebra acting on
/// the Freudenthal space, together with its cached 56x56 realization:
///
/// Phi(X, Y, xi, eta) = (phi X - (nu/3) X + 2 B x Y + eta A,
///                       2 A x X - tphi Y + (nu/3) Y + xi B,
///                       (A, Y) + nu xi,
///                       (B, X) - nu eta).
#[derive(Clone, Debug)]
pub struct E7Gen {
    pub phi: E6Endo,
    pub a: JordanC,
    pub b: JordanC,
    pub nu: Scalar,
    mat: OnceLock<SpMat>,
}

impl PartialEq for E7Gen {
    fn eq(&self, other: &Self) -> bool {
        // the realization is linear and injective in the components
        self.phi == other.phi && self.a == other.a && self.b == other.b && self.nu == other.nu
    }
}

#[derive(Debug, thiserror::Error)]
pub enum FreudenthalError {
    #[error("phi component is not in the 78-dimensional derivation span")]
    PhiOutsideSpan,
    #[error("matrix is not the realization of any generator")]
    NotAGenerator,
    #[error("map does not normalize the generator algebra")]
    DoesNotNormalize,
    #[error("generator span has rank {0}, expected 133")]
    BadRank(usize),
}

impl E7Gen {
    pub fn zero() -> Self {
        Self::new_unchecked(
            SpMat::zero(JORDAN_DIM),
            JordanC::zero(),
            JordanC::zero(),
            Scalar::zero(),
        )
    }

    /// Construct from components; the realization matrix is built lazily
    /// from the action formula applied to the 56 basis vectors.
    pub fn new_unchecked(phi: E6Endo, a: JordanC, b: JordanC, nu: Scalar) -> Self {
        E7Gen {
            phi,
            a,
            b,
            nu,
            mat: OnceLock::new(),
        }
    }

    /// The cached 56x56 realization.
    pub fn mat(&self) -> &SpMat {
        self.mat.get_or_init(|| self.realization())
    }

    fn realization(&self) -> SpMat {
        let (phi, a, b, nu) = (&self.phi, &self.a, &self.b, &self.nu);
        let tphi = endo_transpose(phi);
        let third = Scalar::ratio(1, 3);
        let nu3 = nu * &third;
        let two = Scalar::int(2);
        let a_zero = a.is_zero();
        let b_zero = b.is_zero();
        let mut mat = SpMat::zero(P_DIM);
        for (j, basis) in JordanC::basis().iter().enumerate() {
            // X-slot basis vector
            let out_x = JordanC::from_vec(&phi.cols[j]).sub(&basis.scale(&nu3));
            let out_y = if a_zero {
                JordanC::zero()
            } else {
                jcross(a, basis).scale(&two)
            };
            let out_eta = if b_zero {
                Scalar::zero()
            } else {
                jinner(b, basis)
            };
            mat.cols[j] = PVector::new(out_x, out_y, Scalar::zero(), out_eta).to_vec();
            // Y-slot basis vector
            let out_x = if b_zero {
                JordanC::zero()
            } else {
                jcross(b, basis).scale(&two)
            };
            let out_y = JordanC::from_vec(&tphi.cols[j])
                .neg()
                .add(&basis.scale(&nu3));
            let out_xi = if a_zero {
                Scalar::zero()
            } else {
                jinner(a, basis)
            };
            mat.cols[Y_OFF + j] = PVector::new(out_x, out_y, out_xi, Scalar::zero()).to_vec();
        }
        mat.cols[XI_IDX] =
            PVector::new(JordanC::zero(), b.clone(), nu.clone(), Scalar::zero()).to_vec();
        mat.cols[ETA_IDX] = PVector::new(a.clone(), JordanC::zero(), Scalar::zero(), -nu).to_vec();
        mat
    }

    /// Checked constructor: requires phi to lie in the derivation span.
    pub fn new(phi: E6Endo, a: JordanC, b: JordanC, nu: Scalar) -> Result<Self, FreudenthalError> {
        if !E6Basis::get().contains(&phi) {
            return Err(FreudenthalError::PhiOutsideSpan);
        }
        Ok(Self::new_unchecked(phi, a, b, nu))
    }

    fn extract(m: &SpMat) -> (E6Endo, JordanC, JordanC, Scalar) {
        let xi_col = PVector::from_vec(&m.cols[XI_IDX]);
        let b = xi_col.y;
        let nu = xi_col.xi;
        let eta_col = PVector::from_vec(&m.cols[ETA_IDX]);
        let a = eta_col.x;
        let third = Scalar::ratio(1, 3);
        let nu3 = &nu * &third;
        let mut phi = SpMat::zero(JORDAN_DIM);
        for (j, basis) in JordanC::basis().iter().enumerate() {
            let col = PVector::from_vec(&m.cols[j]);
            let phi_v = col.x.add(&basis.scale(&nu3));
            phi.cols[j] = phi_v.to_vec();
        }
        (phi, a, b, nu)
    }

    /// Recover (phi, A, B, nu) from a 56x56 matrix known to realize a
    /// generator; the rebuilt realization must reproduce the input exactly.
    pub fn from_matrix(m: &SpMat) -> Result<Self, FreudenthalError> {
        if m.is_zero() {
            return Ok(E7Gen::zero());
        }
        let (phi, a, b, nu) = Self::extract(m);
        let rebuilt = Self::new_unchecked(phi, a, b, nu);
        if rebuilt.mat() != m {
            return Err(FreudenthalError::NotAGenerator);
        }
        Ok(rebuilt)
    }

    /// Extraction without the realization check, for matrices produced by
    /// operations that stay in the generator algebra by construction
    /// (commutators of realizations). Seeds the cache with the input.
    fn from_matrix_trusted(m: SpMat) -> Self {
        let (phi, a, b, nu) = Self::extract(&m);
        let gen = Self::new_unchecked(phi, a, b, nu);
        let _ = gen.mat.set(m);
        gen
    }

    pub fn is_zero(&self) -> bool {
        self.phi.is_zero() && self.a.is_zero() && self.b.is_zero() && self.nu.is_zero()
    }

    /// Apply by the action formula directly (no realization needed).
    pub fn apply(&self, p: &PVector) -> PVector {
        let third = Scalar::ratio(1, 3);
        let nu3 = &self.nu * &third;
        let two = Scalar::int(2);
        let phi_x = JordanC::from_vec(&self.phi.apply(&p.x.to_vec()));
        let tphi_y = JordanC::from_vec(&endo_transpose(&self.phi).apply(&p.y.to_vec()));
        let mut out_x = phi_x.sub(&p.x.scale(&nu3));
        if !self.b.is_zero() {
            out_x = out_x.add(&jcross(&self.b, &p.y).scale(&two));
        }
        if !self.a.is_zero() {
            out_x = out_x.add(&self.a.scale(&p.eta));
        }
        let mut out_y = tphi_y.neg().add(&p.y.scale(&nu3));
        if !self.a.is_zero() {
            out_y = out_y.add(&jcross(&self.a, &p.x).scale(&two));
        }
        if !self.b.is_zero() {
            out_y = out_y.add(&self.b.scale(&p.xi));
        }
        let out_xi = &jinner(&self.a, &p.y) + &(&self.nu * &p.xi);
        let out_eta = &jinner(&self.b, &p.x) - &(&self.nu * &p.eta);
        PVector::new(out_x, out_y, out_xi, out_eta)
    }

    pub fn add(&self, rhs: &E7Gen) -> E7Gen {
        E7Gen::new_unchecked(
            self.phi.add(&rhs.phi),
            self.a.add(&rhs.a),
            self.b.add(&rhs.b),
            &self.nu + &rhs.nu,
        )
    }

    pub fn sub(&self, rhs: &E7Gen) -> E7Gen {
        E7Gen::new_unchecked(
            self.phi.sub(&rhs.phi),
            self.a.sub(&rhs.a),
            self.b.sub(&rhs.b),
            &self.nu - &rhs.nu,
        )
    }

    pub fn scale(&self, s: &Scalar) -> E7Gen {
        E7Gen::new_unchecked(
            self.phi.scale(s),
            self.a.scale(s),
            self.b.scale(s),
            &self.nu * s,
        )
    }

    /// Lie bracket, computed as the commutator of realizations and
    /// re-extracted into components.
    pub fn bracket(&self, rhs: &E7Gen) -> E7Gen {
        let m1 = self.mat();
        let m2 = rhs.mat();
        let comm = m1.compose(m2).sub(&m2.compose(m1));
        E7Gen::from_matrix_trusted(comm)
    }

    /// Coordinates over the 133-dimensional basis:
    /// [phi over the derivation basis | A | B | nu].
    pub fn to_coords(&self) -> Result<SpVec, FreudenthalError> {
        let phi_coords = E6Basis::get()
            .coordinates(&self.phi)
            .map_err(|_| FreudenthalError::PhiOutsideSpan)?;
        let mut entries = phi_coords.entries;
        for (i, v) in self.a.to_vec().entries {
            entries.push((78 + i, v));
        }
        for (i, v) in self.b.to_vec().entries {
            entries.push((78 + JORDAN_DIM + i, v));
        }
        if !self.nu.is_zero() {
            entries.push((132, self.nu.clone()));
        }
        Ok(SpVec::from_entries(entries))
    }

    pub fn from_coords(coords: &SpVec) -> E7Gen {
        let e6 = E6Basis::get();
        let mut phi_coords = Vec::new();
        let mut a = JordanC::zero();
        let mut b = JordanC::zero();
        let mut nu = Scalar::zero();
        for (i, v) in &coords.entries {
            match *i {
                i if i < 78 => phi_coords.push((i, v.clone())),
                i if i < 78 + JORDAN_DIM => a.set_coord(i - 78, v.clone()),
                i if i < 78 + 2 * JORDAN_DIM => b.set_coord(i - 78 - JORDAN_DIM, v.clone()),
                _ => nu = v.clone(),
            }
        }
        let phi = e6.from_coordinates(&SpVec::from_entries(phi_coords));
        E7Gen::new_unchecked(phi, a, b, nu)
    }
}

/// Symplectic form {P, Q} = (X, W) - (Z, Y) + xi omega - zeta eta
/// for P = (X, Y, xi, eta), Q = (Z, W, zeta, omega).
pub fn skew(p: &PVector, q: &PVector) -> Scalar {
    let mut acc = jinner(&p.x, &q.y);
    acc = &acc - &jinner(&q.x, &p.y);
    acc = &acc + &(&p.xi * &q.eta);
    &acc - &(&q.xi * &p.eta)
}

/// Freudenthal cross P x Q, a generator with
/// phi = -(1/2)(X v W + Z v Y), A = -(1/4)(2 Y x W - xi Z - zeta X),
/// B = (1/4)(2 X x Z - eta W - omega Y),
/// nu = (1/8)((X, W) + (Z, Y) - 3(xi omega + zeta eta)).
pub fn p_cross_q(p: &PVector, q: &PVector) -> E7Gen {
    if p.is_zero() || q.is_zero() {
        return E7Gen::zero();
    }
    let half = Scalar::ratio(1, 2);
    let quarter = Scalar::ratio(1, 4);
    let eighth = Scalar::ratio(1, 8);
    let two = Scalar::int(2);
    let phi = vee(&p.x, &q.y).add(&vee(&q.x, &p.y)).scale(&-&half);
    let a = jcross(&p.y, &q.y)
        .scale(&two)
        .sub(&q.x.scale(&p.xi))
        .sub(&p.x.scale(&q.xi))
        .scale(&-&quarter);
    let b = jcross(&p.x, &q.x)
        .scale(&two)
        .sub(&q.y.scale(&p.eta))
        .sub(&p.y.scale(&q.eta))
        .scale(&quarter);
    let inner = &jinner(&p.x, &q.y) + &jinner(&q.x, &p.y);
    let cross_terms = &(&p.xi * &q.eta) + &(&q.xi * &p.eta);
    let nu = &(&inner - &(&Scalar::int(3) * &cross_terms)) * &eighth;
    E7Gen::new_unchecked(phi, a, b, nu)
}

/// A linear transformation of the Freudenthal space.
pub type PMap = SpMat;

/// Names of the fixed transformations of the space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PMapName {
    /// (X, Y, xi, eta) -> (-iX, iY, -i xi, i eta)
    Iota,
    /// order-three twist entering the order-three transformation
    Nu3,
    /// order-four twist entering the order-four transformations
    Nu4,
    /// the half-spin exchange entering the degree-two transfer
    Zeta1,
    /// negates the second and third off-diagonal blocks
    Sigma,
    /// (X, Y, xi, eta) -> (Y, -X, eta, -xi)
    Lambda,
}

fn x_idx(i: usize) -> usize {
    i
}
fn y_idx(i: usize) -> usize {
    Y_OFF + i
}

/// Set a diagonal block: xi1, xi2, xi3, x1, x2, x3 factors for one Jordan
/// block starting at `off`.
fn set_jordan_diag(m: &mut SpMat, off: usize, f: [&Scalar; 6]) {
    for k in 0..3 {
        m.set(off + k, off + k, f[k].clone());
    }
    for blk in 0..3 {
        for l in 0..8 {
            let idx = off + 3 + 8 * blk + l;
            m.set(idx, idx, f[3 + blk].clone());
        }
    }
}

/// Build one of the named transformations as an exact matrix.
pub fn build_p_map(name: PMapName) -> PMap {
    let i = Scalar::i();
    let mi = -&i;
    let one = Scalar::one();
    let mone = -&one;
    let w = Scalar::omega();
    let w2 = &w * &w;
    let mut m = SpMat::zero(P_DIM);
    match name {
        PMapName::Iota => {
            set_jordan_diag(&mut m, 0, [&mi, &mi, &mi, &mi, &mi, &mi]);
            set_jordan_diag(&mut m, Y_OFF, [&i, &i, &i, &i, &i, &i]);
            m.set(XI_IDX, XI_IDX, mi.clone());
            m.set(ETA_IDX, ETA_IDX, i.clone());
        }
        PMapName::Nu4 => {
            set_jordan_diag(&mut m, 0, [&mi, &i, &i, &i, &one, &one]);
            set_jordan_diag(&mut m, Y_OFF, [&i, &mi, &mi, &mi, &one, &one]);
            m.set(XI_IDX, XI_IDX, mi.clone());
            m.set(ETA_IDX, ETA_IDX, i.clone());
        }
        PMapName::Nu3 => {
            set_jordan_diag(&mut m, 0, [&w2, &w, &w, &w, &one, &one]);
            set_jordan_diag(&mut m, Y_OFF, [&w, &w2, &w2, &w2, &one, &one]);
            m.set(XI_IDX, XI_IDX, w2.clone());
            m.set(ETA_IDX, ETA_IDX, w.clone());
        }
        PMapName::Sigma => {
            set_jordan_diag(&mut m, 0, [&one, &one, &one, &one, &mone, &mone]);
            set_jordan_diag(&mut m, Y_OFF, [&one, &one, &one, &one, &mone, &mone]);
            m.set(XI_IDX, XI_IDX, one.clone());
            m.set(ETA_IDX, ETA_IDX, one.clone());
        }
        PMapName::Lambda => {
            for k in 0..JORDAN_DIM {
                m.set(x_idx(k), y_idx(k), one.clone());
                m.set(y_idx(k), x_idx(k), mone.clone());
            }
            m.set(XI_IDX, ETA_IDX, one.clone());
            m.set(ETA_IDX, XI_IDX, mone.clone());
        }
        PMapName::Zeta1 => {
            // new xi1 = i eta, xi2 = i eta3, xi3 = i eta2
            m.set(x_idx(0), ETA_IDX, i.clone());
            m.set(x_idx(1), y_idx(2), i.clone());
            m.set(x_idx(2), y_idx(1), i.clone());
            // new x1 = -i y1, x2 = x2, x3 = x3
            for l in 0..8 {
                m.set(x_idx(3 + l), y_idx(3 + l), mi.clone());
                m.set(x_idx(11 + l), x_idx(11 + l), one.clone());
                m.set(x_idx(19 + l), x_idx(19 + l), one.clone());
            }
            // new eta1 = i xi, eta2 = i xi3, eta3 = i xi2
            m.set(y_idx(0), XI_IDX, i.clone());
            m.set(y_idx(1), x_idx(2), i.clone());
            m.set(y_idx(2), x_idx(1), i.clone());
            // new y1 = -i x1, y2 = y2, y3 = y3
            for l in 0..8 {
                m.set(y_idx(3 + l), x_idx(3 + l), mi.clone());
                m.set(y_idx(11 + l), y_idx(11 + l), one.clone());
                m.set(y_idx(19 + l), y_idx(19 + l), one.clone());
            }
            // new xi = i eta1, new eta = i xi1
            m.set(XI_IDX, y_idx(0), i.clone());
            m.set(ETA_IDX, x_idx(0), i.clone());
        }
    }
    m
}

/// psi(a): diagonal action (a xi1, a^{-1} xi2, a^{-1} xi3, a^{-1} x1, x2, x3;
/// a^{-1} eta1, a eta2, a eta3, a y1, y2, y3; a xi, a^{-1} eta).
pub fn psi(a: &Scalar) -> PMap {
    assert!(!a.is_zero(), "psi requires an invertible scalar");
    let ai = a.inv();
    let one = Scalar::one();
    let mut m = SpMat::zero(P_DIM);
    set_jordan_diag(&mut m, 0, [a, &ai, &ai, &ai, &one, &one]);
    set_jordan_diag(&mut m, Y_OFF, [&ai, a, a, a, &one, &one]);
    m.set(XI_IDX, XI_IDX, a.clone());
    m.set(ETA_IDX, ETA_IDX, ai.clone());
    m
}

/// phi(theta): (theta^{-1} X, theta Y, theta^3 xi, theta^{-3} eta).
pub fn phi_theta(theta: &Scalar) -> PMap {
    assert!(!theta.is_zero(), "phi_theta requires an invertible scalar");
    let ti = theta.inv();
    let t3 = &(theta * theta) * theta;
    let t3i = t3.inv();
    let mut m = SpMat::zero(P_DIM);
    set_jordan_diag(&mut m, 0, [&ti, &ti, &ti, &ti, &ti, &ti]);
    set_jordan_diag(&mut m, Y_OFF, [theta, theta, theta, theta, theta, theta]);
    m.set(XI_IDX, XI_IDX, t3);
    m.set(ETA_IDX, ETA_IDX, t3i);
    m
}

/// phi_U1(theta): (theta xi1, (tau theta) xi2, (tau theta) xi3,
/// (tau theta) x1, x2, x3; (tau theta) eta1, theta eta2, theta eta3,
/// theta y1, y2, y3; theta xi, (tau theta) eta).
pub fn phi_u1(theta: &Scalar) -> PMap {
    assert!(!theta.is_zero(), "phi_u1 requires an invertible scalar");
    let tc = theta.tau();
    let one = Scalar::one();
    let mut m = SpMat::zero(P_DIM);
    set_jordan_diag(&mut m, 0, [theta, &tc, &tc, &tc, &one, &one]);
    set_jordan_diag(&mut m, Y_OFF, [&tc, theta, theta, theta, &one, &one]);
    m.set(XI_IDX, XI_IDX, theta.clone());
    m.set(ETA_IDX, ETA_IDX, tc.clone());
    m
}

/// (tau lambda) m (lambda^{-1} tau): the linear conjugate of m by the
/// antilinear map tau-then-lambda; equals lambda conj(m) lambda^{-1}.
pub fn tau_lambda_sandwich(m: &SpMat) -> SpMat {
    let lam = build_p_map(PMapName::Lambda);
    let lam_inv = lam.scale(&-&Scalar::one());
    lam.compose(&m.conj()).compose(&lam_inv)
}

/// The 133 basis generators: 78 derivation lifts, 27 + 27 Jordan slots,
/// and the scaling generator.
pub struct E7BasisSet {
    pub gens: Vec<E7Gen>,
    ech: Echelon,
}

fn flatten56(m: &SpMat) -> SpVec {
    let mut entries = Vec::new();
    for (j, col) in m.cols.iter().enumerate() {
        for (i, v) in &col.entries {
            entries.push((j * P_DIM + i, v.clone()));
        }
    }
    SpVec::from_entries(entries)
}

impl E7BasisSet {
    fn build() -> Result<E7BasisSet, FreudenthalError> {
        let e6 = E6Basis::get();
        let mut gens = Vec::with_capacity(E7_DIM);
        for op in &e6.ops {
            gens.push(E7Gen::new_unchecked(
                op.clone(),
                JordanC::zero(),
                JordanC::zero(),
                Scalar::zero(),
            ));
        }
        for basis in JordanC::basis() {
            gens.push(E7Gen::new_unchecked(
                SpMat::zero(JORDAN_DIM),
                basis,
                JordanC::zero(),
                Scalar::zero(),
            ));
        }
        for basis in JordanC::basis() {
            gens.push(E7Gen::new_unchecked(
                SpMat::zero(JORDAN_DIM),
                JordanC::zero(),
                basis,
                Scalar::zero(),
            ));
        }
        gens.push(E7Gen::new_unchecked(
            SpMat::zero(JORDAN_DIM),
            JordanC::zero(),
            JordanC::zero(),
            Scalar::one(),
        ));
        let mut ech = Echelon::new();
        for g in &gens {
            ech.insert(&flatten56(g.mat()));
        }
        if ech.rank() != E7_DIM {
            return Err(FreudenthalError::BadRank(ech.rank()));
        }
        Ok(E7BasisSet { gens, ech })
    }

    pub fn get() -> &'static E7BasisSet {
        static BASIS: OnceLock<E7BasisSet> = OnceLock::new();
        BASIS.get_or_init(|| E7BasisSet::build().expect("generator span must have rank 133"))
    }

    pub fn contains_matrix(&self, m: &SpMat) -> bool {
        self.ech.contains(&flatten56(m))
    }
}

/// The 133 basis generators (cloned).
pub fn e7_basis() -> Vec<E7Gen> {
    E7BasisSet::get().gens.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{integer_spectrum, spectral_function};
    use crate::scalar::root_of_unity;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn rand_pvec(rng: &mut StdRng) -> PVector {
        let mut entries = Vec::new();
        for _ in 0..4 {
            let i = rng.gen_range(0..P_DIM);
            entries.push((
                i,
                Scalar::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=2)),
            ));
        }
        PVector::from_vec(&SpVec::from_entries(entries))
    }

    fn kappa_phi() -> E7Gen {
        let phi = vee(&JordanC::e(1), &JordanC::e(1)).scale(&Scalar::int(-2));
        E7Gen::new(phi, JordanC::zero(), JordanC::zero(), Scalar::int(-1)).unwrap()
    }

    #[test]
    fn scaling_generator_action() {
        let g = E7Gen::new(
            SpMat::zero(JORDAN_DIM),
            JordanC::zero(),
            JordanC::zero(),
            Scalar::int(3),
        )
        .unwrap();
        let p = PVector::new(
            JordanC::e(1).add(&JordanC::f(2, crate::cayley::OctonionC::unit(3))),
            JordanC::zero(),
            Scalar::zero(),
            Scalar::zero(),
        );
        assert_eq!(g.apply(&p), p.neg());
        let q = PVector::new(
            JordanC::zero(),
            JordanC::zero(),
            Scalar::int(5),
            Scalar::zero(),
        );
        assert_eq!(g.apply(&q), q.scale(&Scalar::int(3)));
    }

    #[test]
    fn kappa_generator_action_on_e1() {
        let g = kappa_phi();
        let p = PVector::new(
            JordanC::e(1).scale(&Scalar::int(7)),
            JordanC::zero(),
            Scalar::zero(),
            Scalar::zero(),
        );
        assert_eq!(g.apply(&p), p.neg());
    }

    #[test]
    fn skew_examples() {
        let p = PVector::new(
            JordanC::e(1),
            JordanC::zero(),
            Scalar::zero(),
            Scalar::zero(),
        );
        let q = PVector::new(
            JordanC::zero(),
            JordanC::e(1),
            Scalar::zero(),
            Scalar::zero(),
        );
        assert_eq!(skew(&p, &q), Scalar::one());
        assert_eq!(skew(&p, &p), Scalar::zero());
        let r = PVector::new(
            JordanC::zero(),
            JordanC::zero(),
            Scalar::one(),
            Scalar::zero(),
        );
        let s = PVector::new(
            JordanC::zero(),
            JordanC::zero(),
            Scalar::zero(),
            Scalar::one(),
        );
        assert_eq!(skew(&r, &s), Scalar::one());
        let mut rng = StdRng::seed_from_u64(12);
        for _ in 0..20 {
            let a = rand_pvec(&mut rng);
            let b = rand_pvec(&mut rng);
            assert_eq!(skew(&a, &b), -&skew(&b, &a));
        }
    }

    #[test]
    fn cross_examples() {
        let e1 = PVector::new(
            JordanC::e(1),
            JordanC::zero(),
            Scalar::zero(),
            Scalar::zero(),
        );
        assert!(p_cross_q(&e1, &e1).is_zero());
        let xi = PVector::new(
            JordanC::zero(),
            JordanC::zero(),
            Scalar::one(),
            Scalar::zero(),
        );
        let eta = PVector::new(
            JordanC::zero(),
            JordanC::zero(),
            Scalar::zero(),
            Scalar::one(),
        );
        let c = p_cross_q(&xi, &eta);
        assert!(c.phi.is_zero() && c.a.is_zero() && c.b.is_zero());
        assert_eq!(c.nu, Scalar::ratio(-3, 8));
        let ye1 = PVector::new(
            JordanC::zero(),
            JordanC::e(1),
            Scalar::zero(),
            Scalar::zero(),
        );
        let c2 = p_cross_q(&e1, &ye1);
        let expect_phi = vee(&JordanC::e(1), &JordanC::e(1)).scale(&Scalar::ratio(-1, 2));
        assert_eq!(c2.phi, expect_phi);
        assert_eq!(c2.nu, Scalar::ratio(1, 8));
        // symmetry on random pairs
        let mut rng = StdRng::seed_from_u64(13);
        for _ in 0..15 {
            let p = rand_pvec(&mut rng);
            let q = rand_pvec(&mut rng);
            assert_eq!(p_cross_q(&p, &q), p_cross_q(&q, &p));
        }
    }

    #[test]
    fn named_map_relations() {
        let iota = build_p_map(PMapName::Iota);
        let nu3 = build_p_map(PMapName::Nu3);
        let nu4 = build_p_map(PMapName::Nu4);
        let sigma = build_p_map(PMapName::Sigma);
        let lambda = build_p_map(PMapName::Lambda);
        let id = SpMat::identity(P_DIM);
        let minus_id = id.scale(&-&Scalar::one());
        assert_eq!(iota.compose(&iota), minus_id);
        assert_eq!(nu4.compose(&nu4), sigma.scale(&-&Scalar::one()));
        assert_eq!(nu3.compose(&nu3).compose(&nu3), id);
        assert_eq!(nu4.compose(&nu4).compose(&nu4).compose(&nu4), id);
        assert_eq!(sigma.compose(&sigma), id);
        assert_eq!(lambda.compose(&lambda), minus_id);
    }

    #[test]
    fn nu4_display_entries() {
        let nu4 = build_p_map(PMapName::Nu4);
        let p = PVector::new(
            JordanC::e(1).scale(&Scalar::int(2)),
            JordanC::zero(),
            Scalar::zero(),
            Scalar::zero(),
        );
        let out = PVector::from_vec(&nu4.apply(&p.to_vec()));
        assert_eq!(out, p.scale(&-&Scalar::i()));
    }

    #[test]
    fn named_maps_as_exponentials() {
        // iota = exp((2 pi i/4) * scaling generator with nu = 3)
        let scaling = E7Gen::new_unchecked(
            SpMat::zero(JORDAN_DIM),
            JordanC::zero(),
            JordanC::zero(),
            Scalar::int(3),
        );
        let spec = integer_spectrum(scaling.mat()).unwrap();
        let exp =
            spectral_function(scaling.mat(), &spec, |l| root_of_unity(4, l).unwrap()).unwrap();
        assert_eq!(exp, build_p_map(PMapName::Iota));
        // nu4 and nu3 from the kappa generator
        let g = kappa_phi();
        let spec = integer_spectrum(g.mat()).unwrap();
        let exp4 = spectral_function(g.mat(), &spec, |l| root_of_unity(4, l).unwrap()).unwrap();
        assert_eq!(exp4, build_p_map(PMapName::Nu4));
        let exp3 = spectral_function(g.mat(), &spec, |l| root_of_unity(3, l).unwrap()).unwrap();
        assert_eq!(exp3, build_p_map(PMapName::Nu3));
    }

    #[test]
    fn psi_and_phi_theta() {
        let id = SpMat::identity(P_DIM);
        assert_eq!(psi(&Scalar::one()), id);
        assert_eq!(
            psi(&Scalar::int(2)).compose(&psi(&Scalar::int(3))),
            psi(&Scalar::int(6))
        );
        assert_eq!(
            tau_lambda_sandwich(&psi(&Scalar::int(2))),
            psi(&Scalar::ratio(1, 2))
        );
        assert_eq!(phi_theta(&Scalar::one()), id);
        let w = Scalar::omega();
        let w2 = &w * &w;
        assert_eq!(phi_theta(&w).compose(&phi_theta(&w2)), id);
        assert_eq!(phi_theta(&-&Scalar::one()), id.scale(&-&Scalar::one()));
    }

    #[test]
    fn phi_u1_values() {
        let id = SpMat::identity(P_DIM);
        assert_eq!(phi_u1(&Scalar::one()), id);
        assert_eq!(phi_u1(&-&Scalar::i()), build_p_map(PMapName::Nu4));
        let sigma = build_p_map(PMapName::Sigma);
        assert_eq!(phi_u1(&-&Scalar::one()), sigma.scale(&-&Scalar::one()));
    }

    #[test]
    fn basis_rank_and_symplectic_invariance() {
        let basis = E7BasisSet::get();
        assert_eq!(basis.gens.len(), 133);
        let mut rng = StdRng::seed_from_u64(14);
        for g in &basis.gens {
            let p = rand_pvec(&mut rng);
            let q = rand_pvec(&mut rng);
            let lhs = &skew(&g.apply(&p), &q) + &skew(&p, &g.apply(&q));
            assert!(lhs.is_zero());
        }
    }

    #[test]
    fn bracket_closure_sample() {
        let basis = E7BasisSet::get();
        let mut rng = StdRng::seed_from_u64(15);
        for _ in 0..20 {
            let a = &basis.gens[rng.gen_range(0..133)];
            let b = &basis.gens[rng.gen_range(0..133)];
            let c = a.bracket(b);
            assert!(basis.contains_matrix(c.mat()));
            // coordinates round-trip
            let coords = c.to_coords().unwrap();
            let back = E7Gen::from_coords(&coords);
            assert_eq!(back, c);
        }
    }

    #[test]
    fn non_derivation_component_is_rejected() {
        // the identity endomorphism does not derive the cubic form
        let id27 = SpMat::identity(JORDAN_DIM);
        let err = E7Gen::new(id27, JordanC::zero(), JordanC::zero(), Scalar::zero());
        assert!(matches!(err, Err(FreudenthalError::PhiOutsideSpan)));
    }

    #[test]
    fn tau_lambda_formula_on_generators() {
        // tau lambda Phi(phi,A,B,nu) lambda^{-1} tau
        //   = Phi(-tau tphi tau, -tau B, -tau A, -tau nu)
        let mut rng = StdRng::seed_from_u64(16);
        let basis = E7BasisSet::get();
        for _ in 0..12 {
            let g = &basis.gens[rng.gen_range(0..133)];
            let sandwiched = tau_lambda_sandwich(g.mat());
            let got = E7Gen::from_matrix(&sandwiched).unwrap();
            let expect = E7Gen::new_unchecked(
                endo_transpose(&g.phi).conj().scale(&-&Scalar::one()),
                g.b.tau().neg(),
                g.a.tau().neg(),
                -&g.nu.tau(),
            );
            assert_eq!(got, expect);
        }
    }
}
