//! Linear-algebra solvers over the 248-dimensional algebra: exact fixed
//! subspaces, graded decompositions, the 91-dimensional centralizer
//! subalgebra, the 14-dimensional real form of the minus-two piece with its
//! norm, and a registry of named operator identities checked exactly.

use crate::cayley::OctonionC;
use crate::e8::{
    ad, bracket_vec, build_e8_map, killing_vec, lift_e7, phi_cstar, phi_su2, zeta_delta,
    zeta_delta_inv, AlgebraMap, E8Element, E8Error, E8MapName, E8_DIM,
};
use crate::freudenthal::{build_p_map, phi_theta, phi_u1, E7Gen, PMapName};
use crate::jordan::JordanC;
use crate::linalg::{kernel, Echelon, SpMat, SpVec, SpectrumError};
use crate::scalar::Scalar;
use std::sync::OnceLock;

/// A certified-independent list of vectors spanning a subspace; `real`
/// marks spans taken with real coefficients (fixed sets of conjugate-linear
/// maps), in which case `dim` counts real dimensions.
pub struct Subspace {
    pub ambient: usize,
    pub basis: Vec<SpVec>,
    pub label: String,
    pub real: bool,
    ech: Echelon,
    bracket_closed: OnceLock<bool>,
}

impl Subspace {
    pub fn from_basis(label: &str, ambient: usize, basis: Vec<SpVec>, real: bool) -> Subspace {
        let mut ech = Echelon::new();
        for v in &basis {
            let fresh = ech.insert(v);
            assert!(fresh, "subspace basis must be independent");
        }
        Subspace {
            ambient,
            basis,
            label: label.to_string(),
            real,
            ech,
            bracket_closed: OnceLock::new(),
        }
    }

    /// Whether the span was verified closed under the bracket; unset until
    /// a closure check has run.
    pub fn bracket_closed(&self) -> Option<bool> {
        self.bracket_closed.get().copied()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Membership in the complex span of the basis.
    pub fn contains(&self, v: &SpVec) -> bool {
        self.ech.contains(v)
    }

    pub fn coordinates(&self, v: &SpVec) -> Option<SpVec> {
        self.ech.coordinates(v)
    }

    /// Equality as complex spans, by double containment.
    pub fn equals(&self, other: &Subspace) -> bool {
        self.dim() == other.dim()
            && other.basis.iter().all(|v| self.contains(v))
            && self.basis.iter().all(|v| other.contains(v))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum FixError {
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    E8(#[from] E8Error),
    #[error("map must be linear for complex fixed spaces")]
    MapNotLinear,
    #[error("map must be conjugate-linear for real fixed points")]
    MapNotAntilinear,
    #[error("map does not preserve the subspace")]
    DoesNotPreserve,
    #[error("eigenspace dimensions sum to {0}, not the ambient dimension")]
    NotDiagonalizable(usize),
}

/// Exact lambda-eigenspace of a linear map.
pub fn fixed_subspace(m: &AlgebraMap, lambda: &Scalar) -> Result<Subspace, FixError> {
    if m.antilinear {
        return Err(FixError::MapNotLinear);
    }
    let shifted = m.mat.shift(&-lambda);
    let basis = kernel(&shifted);
    Ok(Subspace::from_basis("eigenspace", m.mat.dim, basis, false))
}

/// One graded piece: the k-eigenspace of ad Z.
pub struct GradedPiece {
    pub k: i64,
    pub space: Subspace,
}

/// Eigenspace decomposition of ad Z for a characteristic element Z, with
/// the containment [g_k, g_l] in g_{k+l} verified on all basis pairs.
pub fn graded_decomposition(z: &E8Element) -> Result<Vec<GradedPiece>, FixError> {
    let adz = ad(z);
    let spectrum = crate::linalg::integer_spectrum(&adz.mat)?;
    let mut pieces = Vec::new();
    let mut total = 0;
    for k in spectrum {
        let space = fixed_subspace(&adz, &Scalar::int(k))?;
        if space.dim() == 0 {
            continue;
        }
        total += space.dim();
        pieces.push(GradedPiece {
            k,
            space: Subspace::from_basis(&format!("grade {}", k), E8_DIM, space.basis, false),
        });
    }
    if total != E8_DIM {
        return Err(FixError::NotDiagonalizable(total));
    }
    // [g_k, g_l] subset g_{k+l}
    for a in &pieces {
        for b in &pieces {
            let target = pieces.iter().find(|p| p.k == a.k + b.k);
            for va in &a.space.basis {
                for vb in &b.space.basis {
                    let br = bracket_vec(va, vb);
                    let ok = match target {
                        Some(t) => t.space.contains(&br),
                        None => br.is_zero(),
                    };
                    if !ok {
                        return Err(FixError::DoesNotPreserve);
                    }
                }
            }
        }
    }
    Ok(pieces)
}

/// Real fixed points of a conjugate-linear involution on a subspace,
/// solved in the doubled real view; returned vectors live in the complex
/// ambient space and span the fixed set over the reals.
pub fn real_fixed_points(m: &AlgebraMap, s: &Subspace) -> Result<Subspace, FixError> {
    if !m.antilinear {
        return Err(FixError::MapNotAntilinear);
    }
    let images: Vec<SpVec> = s.basis.iter().map(|v| m.apply_vec(v)).collect();
    real_solution_space(s, &images, &format!("fixed({})", s.label))
}

/// Common solver: real span of solutions of m(v) = v inside the subspace,
/// where `images` lists m(s_j) for an antilinear m.
fn real_solution_space(s: &Subspace, images: &[SpVec], label: &str) -> Result<Subspace, FixError> {
    let k = s.basis.len();
    // alpha: complex k x k matrix of m over the subspace basis
    let mut alpha = SpMat::zero(k.max(1));
    if alpha.dim < k {
        alpha = SpMat::zero(k);
    }
    for (j, img) in images.iter().enumerate() {
        let coords = s.coordinates(img).ok_or(FixError::DoesNotPreserve)?;
        alpha.cols[j] = coords;
    }
    // real view on basis (s_j, i s_j): m(x + iy) = x + iy becomes
    // [[Re a, Im a], [Im a, -Re a]] [x; y] = [x; y]
    let mut sys = SpMat::zero(2 * k);
    for j in 0..k {
        for (i, v) in &alpha.cols[j].entries {
            let re = v.re_part();
            let im = v.im_part();
            if !re.is_zero() {
                sys.set(*i, j, re.clone());
                sys.set(k + *i, k + j, -&re);
            }
            if !im.is_zero() {
                sys.set(k + *i, j, im.clone());
                sys.set(*i, k + j, im);
            }
        }
    }
    for d in 0..2 * k {
        let v = &sys.get(d, d) - &Scalar::one();
        sys.set(d, d, v);
    }
    let null = kernel(&sys);
    let mut basis = Vec::with_capacity(null.len());
    for n in null {
        let mut acc = SpVec::zero();
        for (idx, c) in &n.entries {
            let (j, coef) = if *idx < k {
                (*idx, c.clone())
            } else {
                (*idx - k, c * &Scalar::i())
            };
            acc = acc.add_scaled(&s.basis[j], &coef);
        }
        basis.push(acc);
    }
    Ok(Subspace::from_basis(label, s.ambient, basis, true))
}

/// Cached total named maps.
pub fn named_map(name: E8MapName) -> &'static AlgebraMap {
    static MAPS: OnceLock<Vec<(E8MapName, AlgebraMap)>> = OnceLock::new();
    let maps = MAPS.get_or_init(|| {
        [
            E8MapName::Omega4,
            E8MapName::Upsilon,
            E8MapName::Kappa3,
            E8MapName::Kappa4,
            E8MapName::Epsilon4,
            E8MapName::Zeta,
            E8MapName::TauLambdaOmega,
        ]
        .into_iter()
        .map(|n| (n, build_e8_map(n).expect("total named map").total()))
        .collect()
    });
    &maps
        .iter()
        .find(|(n, _)| *n == name)
        .expect("total named map")
        .1
}

/// Graded decomposition of ad kappa, cached.
pub fn kappa_grading() -> &'static Vec<GradedPiece> {
    static GRADING: OnceLock<Vec<GradedPiece>> = OnceLock::new();
    GRADING.get_or_init(|| {
        graded_decomposition(&E8Element::kappa()).expect("kappa grading must exist")
    })
}

pub fn graded_piece(k: i64) -> &'static Subspace {
    &kappa_grading()
        .iter()
        .find(|p| p.k == k)
        .expect("graded piece")
        .space
}

/// The 91-dimensional subalgebra: elements R of the zero piece whose
/// adjoint commutes with the degree-two transfer on the minus-two piece.
pub fn g14_subalgebra() -> &'static Subspace {
    static G14: OnceLock<Subspace> = OnceLock::new();
    G14.get_or_init(|| {
        let g0 = graded_piece(0);
        let gm2 = graded_piece(-2);
        let n = g0.dim();
        // rows of the linear system over the g0 coefficients
        let mut rows: Vec<Vec<(usize, Scalar)>> = Vec::new();
        let mut row_index = std::collections::BTreeMap::<usize, usize>::new();
        for (vi, v) in gm2.basis.iter().enumerate() {
            let ev = E8Element::from_vec(v);
            let zv = zeta_delta(&ev)
                .expect("basis of the minus-two piece")
                .to_vec();
            for (j, r0) in g0.basis.iter().enumerate() {
                let br = E8Element::from_vec(&bracket_vec(r0, v));
                let lhs = zeta_delta(&br).expect("bracket stays in the piece");
                let rhs = bracket_vec(r0, &zv);
                let diff = lhs.to_vec().sub(&rhs);
                for (coord, val) in diff.entries {
                    let key = vi * E8_DIM + coord;
                    let next = row_index.len();
                    let ridx = *row_index.entry(key).or_insert(next);
                    if ridx == rows.len() {
                        rows.push(Vec::new());
                    }
                    rows[ridx].push((j, val));
                }
            }
        }
        // assemble a square system (pad to n columns)
        let dim = rows.len().max(n);
        let mut sys = SpMat::zero(dim);
        for (ridx, row) in rows.iter().enumerate() {
            for (j, val) in row {
                let cur = &sys.get(ridx, *j) + val;
                sys.set(ridx, *j, cur);
            }
        }
        let null = kernel(&sys);
        let mut basis = Vec::new();
        for c in null {
            // only the first n coordinates are meaningful
            let mut acc = SpVec::zero();
            for (j, coef) in &c.entries {
                if *j < n {
                    acc = acc.add_scaled(&g0.basis[*j], coef);
                }
            }
            if !acc.is_zero() {
                basis.push(acc);
            }
        }
        Subspace::from_basis("g14", E8_DIM, basis, false)
    })
}

/// Verify the subalgebra is closed under the bracket.
pub fn g14_bracket_closed() -> bool {
    let g14 = g14_subalgebra();
    if let Some(v) = g14.bracket_closed() {
        return v;
    }
    let mut closed = true;
    'outer: for i in 0..g14.basis.len() {
        for j in (i + 1)..g14.basis.len() {
            let br = bracket_vec(&g14.basis[i], &g14.basis[j]);
            if !g14.contains(&br) {
                closed = false;
                break 'outer;
            }
        }
    }
    let _ = g14.bracket_closed.set(closed);
    closed
}

/// Linear functional from the first-order membership condition of the
/// centralizer subalgebra: tau1 + (2/3) nu + 2r, with tau1 read off the
/// diagonal action of the generator component on the first idempotent.
pub fn g14_membership_functional(r: &E8Element) -> Scalar {
    let e1 = JordanC::e(1);
    let phi_e1 = crate::jordan::endo_apply(&r.phi.phi, &e1);
    let tau1 = crate::jordan::jinner(&phi_e1, &e1);
    let two_thirds = Scalar::ratio(2, 3);
    let two = Scalar::int(2);
    &(&tau1 + &(&two_thirds * &r.phi.nu)) + &(&two * &r.r)
}

/// The 14-dimensional real vector space inside the minus-two piece:
/// solutions of (tau lambda omega)(zeta_delta R) = -R.
pub fn v14() -> &'static Subspace {
    static V14: OnceLock<Subspace> = OnceLock::new();
    V14.get_or_init(|| {
        let gm2 = graded_piece(-2);
        let tlo = named_map(E8MapName::TauLambdaOmega);
        let images: Vec<SpVec> = gm2
            .basis
            .iter()
            .map(|v| {
                let ev = E8Element::from_vec(v);
                let z = zeta_delta(&ev).expect("basis of the minus-two piece");
                tlo.apply(&z).neg().to_vec()
            })
            .collect();
        real_solution_space(gm2, &images, "V14").expect("real form of the minus-two piece")
    })
}

/// Components (upsilon1, xi, eta, y) of a minus-two element in the
/// parametrization of the real form.
pub fn v14_components(r: &E8Element) -> (Scalar, Scalar, Scalar, OctonionC) {
    (
        r.phi.a.xi[0].clone(),
        r.p.x.xi[0].clone(),
        r.p.y.xi[1].clone(),
        r.p.y.x[0].clone(),
    )
}

/// The closed-form norm 4 (tau u) u + (tau eta) eta + y ybar + (tau xi) xi.
pub fn v14_norm_display(r: &E8Element) -> Scalar {
    let (u, xi, eta, y) = v14_components(r);
    let mut acc = &Scalar::int(4) * &(&u.tau() * &u);
    acc = &acc + &(&eta.tau() * &eta);
    for c in &y.c {
        acc = &acc + &(&c.tau() * c);
    }
    &acc + &(&xi.tau() * &xi)
}

/// Trace-form norm (1/30) c B8(zeta_delta R, R) with the resolved
/// normalization constant.
pub fn norm_zeta(r: &E8Element) -> Result<Scalar, E8Error> {
    let z = zeta_delta(r)?;
    let raw = killing_vec(&z.to_vec(), &r.to_vec());
    Ok(&(&raw * &Scalar::ratio(1, 30)) * killing_constant())
}

/// One-time empirical resolution of the trace-form normalization against
/// the closed-form norm on the designated oracle vector.
pub fn killing_constant() -> &'static Scalar {
    static C: OnceLock<Scalar> = OnceLock::new();
    C.get_or_init(|| {
        // R = (Phi(0, E1, 0, 0), 0, 0, 0, -1, 0): closed-form norm 4
        let mut r = E8Element::zero();
        r.phi = E7Gen::new_unchecked(
            SpMat::zero(crate::jordan::JORDAN_DIM),
            JordanC::e(1),
            JordanC::zero(),
            Scalar::zero(),
        );
        r.s = Scalar::int(-1);
        let display = v14_norm_display(&r);
        let z = zeta_delta(&r).expect("oracle vector is in the minus-two piece");
        let raw = &killing_vec(&z.to_vec(), &r.to_vec()) * &Scalar::ratio(1, 30);
        &display / &raw
    })
}

/// Outcome of one registered identity check.
pub struct CheckOutcome {
    pub id: &'static str,
    pub pass: bool,
    pub witness: Option<String>,
}

fn outcome(id: &'static str, pass: bool, witness: Option<String>) -> CheckOutcome {
    CheckOutcome { id, pass, witness }
}

fn maps_equal_real(a: &AlgebraMap, b: &AlgebraMap) -> bool {
    a.to_real_view() == b.to_real_view()
}

pub const IDENTITY_IDS: &[&str] = &[
    "lemma8_3_anticommute",
    "lemma8_3_commute_kappa4",
    "lemma8_4_1",
    "lemma8_8_conj",
    "prop8_5_conjugation",
    "thm7_5_kernel_z3",
    "thm7_5_kernel_z2",
    "thm8_2_kernel_z4",
    "thm9_6_kernel_sigma",
    "thm9_6_kernel_upsilon",
    "prop9_3_nu4_sq",
    "prop9_3_phiu1_m1",
];

/// Run one registered identity check; exact equality of composed operators,
/// with a witness coordinate on failure.
pub fn check_identity(id: &str) -> Result<CheckOutcome, E8Error> {
    match id {
        "lemma8_3_anticommute" => {
            let adk = ad(&E8Element::kappa());
            let tlo = named_map(E8MapName::TauLambdaOmega);
            let lhs = adk.compose(tlo);
            let rhs = tlo.compose(&adk).scale(&-&Scalar::one());
            Ok(outcome(
                "lemma8_3_anticommute",
                maps_equal_real(&lhs, &rhs),
                None,
            ))
        }
        "lemma8_3_commute_kappa4" => {
            let k4 = named_map(E8MapName::Kappa4);
            let tlo = named_map(E8MapName::TauLambdaOmega);
            Ok(outcome(
                "lemma8_3_commute_kappa4",
                maps_equal_real(&tlo.compose(k4), &k4.compose(tlo)),
                None,
            ))
        }
        "lemma8_4_1" => {
            let tlo = named_map(E8MapName::TauLambdaOmega);
            for (i, v) in graded_piece(-2).basis.iter().enumerate() {
                let ev = E8Element::from_vec(v);
                let lhs = tlo.apply(&zeta_delta(&ev)?);
                let rhs = zeta_delta_inv(&tlo.apply(&ev))?;
                if lhs != rhs {
                    return Ok(outcome(
                        "lemma8_4_1",
                        false,
                        Some(format!("basis vector {}", i)),
                    ));
                }
            }
            Ok(outcome("lemma8_4_1", true, None))
        }
        "lemma8_8_conj" => {
            let tlo = named_map(E8MapName::TauLambdaOmega);
            for a in [Scalar::int(2), Scalar::i(), &Scalar::one() + &Scalar::i()] {
                let lhs = tlo.compose(&phi_cstar(&a)?).compose(tlo);
                let rhs = phi_cstar(&a.tau().inv())?;
                if !maps_equal_real(&lhs, &rhs) {
                    return Ok(outcome("lemma8_8_conj", false, Some(format!("a = {}", a))));
                }
            }
            Ok(outcome("lemma8_8_conj", true, None))
        }
        "prop8_5_conjugation" => {
            // conjugation by the real-form involution preserves the
            // membership conditions of the centralizer subalgebra
            let tlo = named_map(E8MapName::TauLambdaOmega);
            let g14 = g14_subalgebra();
            for (i, v) in g14.basis.iter().enumerate() {
                let img = tlo.apply_vec(v);
                if !g14.contains(&img) {
                    return Ok(outcome(
                        "prop8_5_conjugation",
                        false,
                        Some(format!("basis vector {}", i)),
                    ));
                }
            }
            Ok(outcome("prop8_5_conjugation", true, None))
        }
        "thm7_5_kernel_z3" => {
            let w = Scalar::omega();
            let w2 = &w * &w;
            let prod = lift_e7(&phi_theta(&w))?.compose(&lift_e7(&phi_theta(&w2))?);
            Ok(outcome("thm7_5_kernel_z3", prod.is_identity(), None))
        }
        "thm7_5_kernel_z2" => {
            let minus_e = [
                [-&Scalar::one(), Scalar::zero()],
                [Scalar::zero(), -&Scalar::one()],
            ];
            let prod = phi_su2(&minus_e)?.compose(&lift_e7(&phi_theta(&-&Scalar::one()))?);
            Ok(outcome("thm7_5_kernel_z2", prod.is_identity(), None))
        }
        "thm8_2_kernel_z4" => {
            let i = Scalar::i();
            let pairs_identity = phi_cstar(&i)?.compose(&phi_cstar(&-&i)?).is_identity()
                && phi_cstar(&-&Scalar::one())?.pow(2).is_identity();
            if !pairs_identity {
                return Ok(outcome(
                    "thm8_2_kernel_z4",
                    false,
                    Some("product is not the identity".into()),
                ));
            }
            // spin membership of the second components: commutation with
            // ad kappa and the transfer condition on the minus-two piece
            let adk = ad(&E8Element::kappa());
            for a in [-&Scalar::one(), i.clone(), -&i] {
                let m = phi_cstar(&a)?;
                if m.compose(&adk) != adk.compose(&m) {
                    return Ok(outcome(
                        "thm8_2_kernel_z4",
                        false,
                        Some(format!("a = {} does not centralize ad kappa", a)),
                    ));
                }
                for v in &graded_piece(-2).basis {
                    let ev = E8Element::from_vec(v);
                    let lhs = zeta_delta(&m.apply(&ev))?;
                    let rhs = m.apply(&zeta_delta(&ev)?);
                    if lhs != rhs {
                        return Ok(outcome(
                            "thm8_2_kernel_z4",
                            false,
                            Some(format!("a = {} fails the transfer condition", a)),
                        ));
                    }
                }
            }
            Ok(outcome("thm8_2_kernel_z4", true, None))
        }
        "thm9_6_kernel_sigma" => {
            let sigma = build_p_map(PMapName::Sigma);
            let minus_sigma = sigma.scale(&-&Scalar::one());
            let prod = lift_e7(&phi_u1(&-&Scalar::one()))?.compose(&lift_e7(&minus_sigma)?);
            Ok(outcome("thm9_6_kernel_sigma", prod.is_identity(), None))
        }
        "thm9_6_kernel_upsilon" => {
            let minus_e = [
                [-&Scalar::one(), Scalar::zero()],
                [Scalar::zero(), -&Scalar::one()],
            ];
            let upsilon = named_map(E8MapName::Upsilon);
            let prod = phi_su2(&minus_e)?.compose(upsilon);
            Ok(outcome("thm9_6_kernel_upsilon", prod.is_identity(), None))
        }
        "prop9_3_nu4_sq" => {
            let nu4 = build_p_map(PMapName::Nu4);
            let sigma = build_p_map(PMapName::Sigma);
            let pass =
                nu4.compose(&nu4) == sigma.scale(&-&Scalar::one()) && nu4 == phi_u1(&-&Scalar::i());
            Ok(outcome("prop9_3_nu4_sq", pass, None))
        }
        "prop9_3_phiu1_m1" => {
            let sigma = build_p_map(PMapName::Sigma);
            let pass = phi_u1(&-&Scalar::one()) == sigma.scale(&-&Scalar::one());
            Ok(outcome("prop9_3_phiu1_m1", pass, None))
        }
        other => panic!("unknown identity id {:?}", other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freudenthal::PVector;

    #[test]
    fn fixed_dimensions() {
        assert_eq!(
            fixed_subspace(named_map(E8MapName::Omega4), &Scalar::one())
                .unwrap()
                .dim(),
            82
        );
        assert_eq!(
            fixed_subspace(named_map(E8MapName::Upsilon), &Scalar::one())
                .unwrap()
                .dim(),
            136
        );
        assert_eq!(
            fixed_subspace(named_map(E8MapName::Epsilon4), &Scalar::one())
                .unwrap()
                .dim(),
            70
        );
    }

    #[test]
    fn kappa_grading_dimensions() {
        let dims: Vec<(i64, usize)> = kappa_grading()
            .iter()
            .map(|p| (p.k, p.space.dim()))
            .collect();
        assert_eq!(dims, vec![(-2, 14), (-1, 64), (0, 92), (1, 64), (2, 14)]);
        // zero piece = fixed space of both finite-order maps
        let f3 = fixed_subspace(named_map(E8MapName::Kappa3), &Scalar::one()).unwrap();
        let f4 = fixed_subspace(named_map(E8MapName::Kappa4), &Scalar::one()).unwrap();
        assert!(f3.equals(&f4));
        assert!(f3.equals(graded_piece(0)));
    }

    #[test]
    fn g14_dimension_and_counterexample() {
        let g14 = g14_subalgebra();
        assert_eq!(g14.dim(), 91);
        for v in &g14.basis {
            let e = E8Element::from_vec(v);
            assert!(g14_membership_functional(&e).is_zero());
        }
        let kappa = E8Element::kappa();
        assert_eq!(g14_membership_functional(&kappa), Scalar::int(-4));
        assert!(!g14.contains(&kappa.to_vec()));
        // a generator with only the second-idempotent slot is a member
        let member = E8Element::from_phi(E7Gen::new_unchecked(
            SpMat::zero(crate::jordan::JORDAN_DIM),
            JordanC::e(2),
            JordanC::zero(),
            Scalar::zero(),
        ));
        assert!(g14.contains(&member.to_vec()));
    }

    #[test]
    fn zero_element_grading_is_trivial() {
        let pieces = graded_decomposition(&E8Element::zero()).unwrap();
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].k, 0);
        assert_eq!(pieces[0].space.dim(), 248);
    }

    #[test]
    fn v14_dimension_and_norms() {
        let v = v14();
        assert_eq!(v.dim(), 14);
        assert_eq!(killing_constant(), &Scalar::one());
        for b in &v.basis {
            let e = E8Element::from_vec(b);
            assert_eq!(norm_zeta(&e).unwrap(), v14_norm_display(&e));
        }
        // the two displayed examples
        let mut r = E8Element::zero();
        r.phi = E7Gen::new_unchecked(
            SpMat::zero(crate::jordan::JORDAN_DIM),
            JordanC::e(1),
            JordanC::zero(),
            Scalar::zero(),
        );
        r.s = Scalar::int(-1);
        assert_eq!(norm_zeta(&r).unwrap(), Scalar::int(4));
        let mut r2 = E8Element::zero();
        r2.p = PVector::new(
            JordanC::e(1),
            JordanC::zero(),
            Scalar::one(),
            Scalar::zero(),
        );
        assert_eq!(norm_zeta(&r2).unwrap(), Scalar::one());
        assert_eq!(norm_zeta(&E8Element::zero()).unwrap(), Scalar::zero());
    }

    #[test]
    fn real_form_dimension() {
        // fixed points of the conjugate-linear involution on the whole space
        let tlo = named_map(E8MapName::TauLambdaOmega);
        let full =
            Subspace::from_basis("e8", E8_DIM, (0..E8_DIM).map(SpVec::unit).collect(), false);
        let fixed = real_fixed_points(tlo, &full).unwrap();
        assert_eq!(fixed.dim(), 248);
        // r-axis line: fixed really by the i-multiple
        let line =
            Subspace::from_basis("r-axis", E8_DIM, vec![SpVec::unit(crate::e8::R_IDX)], false);
        let fixed_line = real_fixed_points(tlo, &line).unwrap();
        assert_eq!(fixed_line.dim(), 1);
        let gen = &fixed_line.basis[0];
        let coef = gen.get(crate::e8::R_IDX);
        assert!(coef.re_part().is_zero() && !coef.im_part().is_zero());
    }

    #[test]
    fn identities_all_pass() {
        for id in IDENTITY_IDS {
            let out = check_identity(id).unwrap();
            assert!(out.pass, "{} failed: {:?}", id, out.witness);
        }
    }
}
