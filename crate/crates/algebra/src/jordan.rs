//! The complexified exceptional Jordan algebra: 3x3 Hermitian matrices over
//! the complexified octonions, with the symmetrized product, trace forms,
//! the cubic form, the Freudenthal cross, and the `vee` operators whose
//! span is a 78-dimensional Lie algebra of cubic-form derivations.
//!
//! Coordinates: diagonal xi_1, xi_2, xi_3 and off-diagonal octonions
//! x_1 at (2,3), x_2 at (3,1), x_3 at (1,2); 27 in total, ordered
//! [xi_1, xi_2, xi_3, x_1(0..8), x_2(0..8), x_3(0..8)].

use crate::cayley::{oct_conj, oct_inner, oct_mul, oct_norm, OctonionC};
use crate::linalg::{Echelon, SpMat, SpVec};
use crate::scalar::Scalar;
use std::sync::OnceLock;

pub const JORDAN_DIM: usize = 27;

/// An element of the 27-dimensional complexified exceptional Jordan algebra.
#[derive(Clone, PartialEq, Debug)]
pub struct JordanC {
    pub xi: [Scalar; 3],
    pub x: [OctonionC; 3],
}

impl JordanC {
    pub fn zero() -> Self {
        JordanC {
            xi: std::array::from_fn(|_| Scalar::zero()),
            x: std::array::from_fn(|_| OctonionC::zero()),
        }
    }

    pub fn identity() -> Self {
        Self::diag(Scalar::one(), Scalar::one(), Scalar::one())
    }

    pub fn diag(a: Scalar, b: Scalar, c: Scalar) -> Self {
        let mut j = Self::zero();
        j.xi = [a, b, c];
        j
    }

    /// Diagonal idempotent E_k, k in 1..=3.
    pub fn e(k: usize) -> Self {
        let mut j = Self::zero();
        j.xi[k - 1] = Scalar::one();
        j
    }

    /// F_k(x): the element with octonion x in the k-th off-diagonal slot.
    pub fn f(k: usize, x: OctonionC) -> Self {
        let mut j = Self::zero();
        j.x[k - 1] = x;
        j
    }

    pub fn is_zero(&self) -> bool {
        self.xi.iter().all(|v| v.is_zero()) && self.x.iter().all(|v| v.is_zero())
    }

    pub fn add(&self, rhs: &JordanC) -> JordanC {
        JordanC {
            xi: std::array::from_fn(|k| &self.xi[k] + &rhs.xi[k]),
            x: std::array::from_fn(|k| self.x[k].add(&rhs.x[k])),
        }
    }

    pub fn sub(&self, rhs: &JordanC) -> JordanC {
        JordanC {
            xi: std::array::from_fn(|k| &self.xi[k] - &rhs.xi[k]),
            x: std::array::from_fn(|k| self.x[k].sub(&rhs.x[k])),
        }
    }

    pub fn neg(&self) -> JordanC {
        JordanC {
            xi: std::array::from_fn(|k| -&self.xi[k]),
            x: std::array::from_fn(|k| self.x[k].neg()),
        }
    }

    pub fn scale(&self, s: &Scalar) -> JordanC {
        JordanC {
            xi: std::array::from_fn(|k| &self.xi[k] * s),
            x: std::array::from_fn(|k| self.x[k].scale(s)),
        }
    }

    /// Entrywise scalar conjugation.
    pub fn tau(&self) -> JordanC {
        JordanC {
            xi: std::array::from_fn(|k| self.xi[k].tau()),
            x: std::array::from_fn(|k| self.x[k].tau()),
        }
    }

    pub fn trace(&self) -> Scalar {
        &(&self.xi[0] + &self.xi[1]) + &self.xi[2]
    }

    pub fn to_vec(&self) -> SpVec {
        let mut entries = Vec::new();
        for k in 0..3 {
            if !self.xi[k].is_zero() {
                entries.push((k, self.xi[k].clone()));
            }
        }
        for k in 0..3 {
            for l in 0..8 {
                let v = &self.x[k].c[l];
                if !v.is_zero() {
                    entries.push((3 + 8 * k + l, v.clone()));
                }
            }
        }
        SpVec::from_entries(entries)
    }

    pub fn from_vec(v: &SpVec) -> JordanC {
        let mut j = JordanC::zero();
        for (i, s) in &v.entries {
            j.set_coord(*i, s.clone());
        }
        j
    }

    pub fn set_coord(&mut self, i: usize, s: Scalar) {
        if i < 3 {
            self.xi[i] = s;
        } else {
            let k = (i - 3) / 8;
            let l = (i - 3) % 8;
            self.x[k].c[l] = s;
        }
    }

    pub fn coord(&self, i: usize) -> Scalar {
        if i < 3 {
            self.xi[i].clone()
        } else {
            self.x[(i - 3) / 8].c[(i - 3) % 8].clone()
        }
    }

    /// The 27 basis elements in coordinate order.
    pub fn basis() -> Vec<JordanC> {
        let mut out = Vec::with_capacity(JORDAN_DIM);
        for k in 1..=3 {
            out.push(JordanC::e(k));
        }
        for k in 1..=3 {
            for l in 0..8 {
                out.push(JordanC::f(k, OctonionC::unit(l)));
            }
        }
        out
    }
}

/// 3x3 matrix of octonions; intermediate for the symmetrized product.
fn to_matrix(a: &JordanC) -> [[OctonionC; 3]; 3] {
    let one = |s: &Scalar| OctonionC::one().scale(s);
    [
        [one(&a.xi[0]), a.x[2].clone(), oct_conj(&a.x[1])],
        [oct_conj(&a.x[2]), one(&a.xi[1]), a.x[0].clone()],
        [a.x[1].clone(), oct_conj(&a.x[0]), one(&a.xi[2])],
    ]
}

fn mat_mul(a: &[[OctonionC; 3]; 3], b: &[[OctonionC; 3]; 3]) -> [[OctonionC; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut acc = OctonionC::zero();
            for (k, row) in b.iter().enumerate() {
                acc = acc.add(&oct_mul(&a[i][k], &row[j]));
            }
            acc
        })
    })
}

fn from_matrix(m: &[[OctonionC; 3]; 3]) -> JordanC {
    JordanC {
        xi: [
            m[0][0].scalar_part(),
            m[1][1].scalar_part(),
            m[2][2].scalar_part(),
        ],
        x: [m[1][2].clone(), m[2][0].clone(), m[0][1].clone()],
    }
}

/// Jordan product X o Y = (XY + YX)/2, computed on octonion matrices.
pub fn jmul(a: &JordanC, b: &JordanC) -> JordanC {
    if a.is_zero() || b.is_zero() {
        return JordanC::zero();
    }
    let ma = to_matrix(a);
    let mb = to_matrix(b);
    let mut ab = mat_mul(&ma, &mb);
    let ba = mat_mul(&mb, &ma);
    for i in 0..3 {
        for j in 0..3 {
            ab[i][j] = ab[i][j].add(&ba[i][j]).scale(&Scalar::ratio(1, 2));
        }
    }
    from_matrix(&ab)
}

/// Trace form (X, Y) = tr(X o Y).
pub fn jinner(a: &JordanC, b: &JordanC) -> Scalar {
    // closed form of tr(X o Y): diagonal products plus doubled octonion pairings
    let mut acc = Scalar::zero();
    for k in 0..3 {
        acc = &acc + &(&a.xi[k] * &b.xi[k]);
        let p = oct_inner(&a.x[k], &b.x[k]);
        acc = &acc + &(&p + &p);
    }
    acc
}

/// Freudenthal cross:
/// X x Y = X o Y - (1/2)(tr(X) Y + tr(Y) X) + (1/2)(tr(X) tr(Y) - (X, Y)) I.
pub fn jcross(a: &JordanC, b: &JordanC) -> JordanC {
    let half = Scalar::ratio(1, 2);
    let ta = a.trace();
    let tb = b.trace();
    let mut out = jmul(a, b);
    out = out.sub(&b.scale(&(&ta * &half)));
    out = out.sub(&a.scale(&(&tb * &half)));
    let c = &(&(&ta * &tb) - &jinner(a, b)) * &half;
    out.add(&JordanC::identity().scale(&c))
}

/// Cubic form det(X) = xi1 xi2 xi3 - sum_k xi_k N(x_k) + 2 Re(x1 x2 x3).
pub fn jdet(a: &JordanC) -> Scalar {
    let mut acc = &(&a.xi[0] * &a.xi[1]) * &a.xi[2];
    for k in 0..3 {
        acc = &acc - &(&a.xi[k] * &oct_norm(&a.x[k]));
    }
    let triple = oct_mul(&oct_mul(&a.x[0], &a.x[1]), &a.x[2]).scalar_part();
    &acc + &(&triple + &triple)
}

/// An endomorphism of the 27-dimensional Jordan algebra, as a sparse matrix
/// over the fixed coordinate order.
pub type E6Endo = SpMat;

pub fn endo_apply(m: &E6Endo, a: &JordanC) -> JordanC {
    JordanC::from_vec(&m.apply(&a.to_vec()))
}

/// A vee B, the cubic-form derivation
/// (A vee B)(X) = (1/2)(B, X) A + (1/6)(A, B) X - 2 B x (A x X).
pub fn vee(a: &JordanC, b: &JordanC) -> E6Endo {
    let mut m = SpMat::zero(JORDAN_DIM);
    let ab = &jinner(a, b) * &Scalar::ratio(1, 6);
    for (j, basis) in JordanC::basis().iter().enumerate() {
        let mut img = a.scale(&(&jinner(b, basis) * &Scalar::ratio(1, 2)));
        img = img.add(&basis.scale(&ab));
        img = img.sub(&jcross(b, &jcross(a, basis)).scale(&Scalar::int(2)));
        m.cols[j] = img.to_vec();
    }
    m
}

/// Transpose with respect to the trace form: tphi = G^{-1} phi^T G where
/// G = diag(1,1,1, 2,...,2).
pub fn endo_transpose(m: &E6Endo) -> E6Endo {
    let t = m.transpose();
    let mut out = SpMat::zero(JORDAN_DIM);
    let two = Scalar::int(2);
    let half = Scalar::ratio(1, 2);
    for (j, col) in t.cols.iter().enumerate() {
        let gj = if j < 3 { None } else { Some(&two) };
        for (i, v) in &col.entries {
            let mut val = v.clone();
            if let Some(g) = gj {
                val = &val * g;
            }
            if *i >= 3 {
                val = &val * &half;
            }
            out.set(*i, j, val);
        }
    }
    out
}

/// The 78 independent `vee` operators spanning the derivation algebra of
/// the cubic form, kept as the operators of the generating pairs, plus the
/// machinery to coordinatize arbitrary members of their span.
pub struct E6Basis {
    pub ops: Vec<E6Endo>,
    ech: Echelon,
}

#[derive(Debug, thiserror::Error)]
pub enum JordanError {
    #[error("operator span has rank {0}, expected 78")]
    BadRank(usize),
    #[error("operator does not lie in the derivation span")]
    NotInSpan,
}

fn flatten(m: &E6Endo) -> SpVec {
    let mut entries = Vec::new();
    for (j, col) in m.cols.iter().enumerate() {
        for (i, v) in &col.entries {
            entries.push((j * JORDAN_DIM + i, v.clone()));
        }
    }
    SpVec::from_entries(entries)
}

impl E6Basis {
    fn build() -> Result<E6Basis, JordanError> {
        let basis = JordanC::basis();
        let mut ops = Vec::new();
        let mut ech = Echelon::new();
        for a in &basis {
            for b in &basis {
                let op = vee(a, b);
                if ech.insert(&flatten(&op)) {
                    ops.push(op);
                }
                if ops.len() == 78 {
                    break;
                }
            }
            if ops.len() == 78 {
                break;
            }
        }
        // rebuild the echelon from only the retained operators so that
        // coordinates refer to them alone
        let mut ech = Echelon::new();
        for op in &ops {
            ech.insert(&flatten(op));
        }
        if ech.rank() != 78 {
            return Err(JordanError::BadRank(ech.rank()));
        }
        Ok(E6Basis { ops, ech })
    }

    pub fn get() -> &'static E6Basis {
        static BASIS: OnceLock<E6Basis> = OnceLock::new();
        BASIS.get_or_init(|| E6Basis::build().expect("derivation basis must have rank 78"))
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Coordinates of an endomorphism over the basis, if it lies in the span.
    pub fn coordinates(&self, m: &E6Endo) -> Result<SpVec, JordanError> {
        self.ech
            .coordinates(&flatten(m))
            .ok_or(JordanError::NotInSpan)
    }

    pub fn contains(&self, m: &E6Endo) -> bool {
        self.ech.contains(&flatten(m))
    }

    pub fn from_coordinates(&self, coords: &SpVec) -> E6Endo {
        let mut out = SpMat::zero(JORDAN_DIM);
        for (k, c) in &coords.entries {
            out = out.add(&self.ops[*k].scale(c));
        }
        out
    }
}

/// List of the 78 basis operators (cloned).
pub fn e6_basis() -> Vec<E6Endo> {
    E6Basis::get().ops.clone()
}
