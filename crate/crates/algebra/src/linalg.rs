//! Exact sparse linear algebra over the scalar tower: vectors, matrices,
//! incremental echelon forms, kernels, and exponentials of matrices with
//! known rational spectrum.

use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// Sparse vector: sorted (index, nonzero scalar) pairs.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct SpVec {
    pub entries: Vec<(usize, Scalar)>,
}

impl SpVec {
    pub fn zero() -> Self {
        SpVec {
            entries: Vec::new(),
        }
    }

    pub fn unit(idx: usize) -> Self {
        SpVec {
            entries: vec![(idx, Scalar::one())],
        }
    }

    pub fn from_entries(mut entries: Vec<(usize, Scalar)>) -> Self {
        entries.retain(|(_, v)| !v.is_zero());
        entries.sort_by_key(|(i, _)| *i);
        // merge duplicates
        let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(entries.len());
        for (i, v) in entries {
            match out.last_mut() {
                Some((j, w)) if *j == i => {
                    *w = &*w + &v;
                }
                _ => out.push((i, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SpVec { entries: out }
    }

    pub fn from_dense(vals: &[Scalar]) -> Self {
        SpVec {
            entries: vals
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, idx: usize) -> Scalar {
        match self.entries.binary_search_by_key(&idx, |(i, _)| *i) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn scale(&self, c: &Scalar) -> SpVec {
        if c.is_zero() {
            return SpVec::zero();
        }
        SpVec {
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (*i, v * c))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    /// self + c * other
    pub fn add_scaled(&self, other: &SpVec, c: &Scalar) -> SpVec {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = self.entries.iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, va)), Some((ib, vb))) => {
                    if ia < ib {
                        out.push((*ia, va.clone()));
                        a.next();
                    } else if ib < ia {
                        let v = vb * c;
                        if !v.is_zero() {
                            out.push((*ib, v));
                        }
                        b.next();
                    } else {
                        let v = va + &(vb * c);
                        if !v.is_zero() {
                            out.push((*ia, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((ia, va)), None) => {
                    out.push((*ia, va.clone()));
                    a.next();
                }
                (None, Some((ib, vb))) => {
                    let v = vb * c;
                    if !v.is_zero() {
                        out.push((*ib, v));
                    }
                    b.next();
                }
                (None, None) => break,
            }
        }
        SpVec { entries: out }
    }

    pub fn add(&self, other: &SpVec) -> SpVec {
        self.add_scaled(other, &Scalar::one())
    }

    pub fn sub(&self, other: &SpVec) -> SpVec {
        self.add_scaled(other, &-&Scalar::one())
    }

    pub fn neg(&self) -> SpVec {
        self.scale(&-&Scalar::one())
    }

    pub fn dot(&self, other: &SpVec) -> Scalar {
        let mut acc = Scalar::zero();
        let mut a = self.entries.iter().peekable();
        let mut b = other.entries.iter().peekable();
        while let (Some((ia, va)), Some((ib, vb))) = (a.peek(), b.peek()) {
            if ia < ib {
                a.next();
            } else if ib < ia {
                b.next();
            } else {
                let va: &Scalar = va;
                let vb: &Scalar = vb;
                acc = &acc + &(va * vb);
                a.next();
                b.next();
            }
        }
        acc
    }

    /// Entrywise complex conjugation.
    pub fn conj(&self) -> SpVec {
        SpVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v.tau())).collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .map(|(_, v)| v.abs())
            .fold(0.0, f64::max)
    }
}

/// Sparse matrix stored column-major: column j is the image of basis vector j.
#[derive(Clone, PartialEq, Debug)]
pub struct SpMat {
    pub dim: usize,
    pub cols: Vec<SpVec>,
}

impl SpMat {
    pub fn zero(dim: usize) -> Self {
        SpMat {
            dim,
            cols: vec![SpVec::zero(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        SpMat {
            dim,
            cols: (0..dim).map(SpVec::unit).collect(),
        }
    }

    pub fn from_cols(dim: usize, cols: Vec<SpVec>) -> Self {
        assert_eq!(cols.len(), dim);
        SpMat { dim, cols }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.entries.len()).sum()
    }

    pub fn get(&self, row: usize, col: usize) -> Scalar {
        self.cols[col].get(row)
    }

    pub fn set(&mut self, row: usize, col: usize, v: Scalar) {
        let col = &mut self.cols[col];
        match col.entries.binary_search_by_key(&row, |(i, _)| *i) {
            Ok(pos) => {
                if v.is_zero() {
                    col.entries.remove(pos);
                } else {
                    col.entries[pos].1 = v;
                }
            }
            Err(pos) => {
                if !v.is_zero() {
                    col.entries.insert(pos, (row, v));
                }
            }
        }
    }

    pub fn apply(&self, v: &SpVec) -> SpVec {
        let mut acc = BTreeMap::<usize, Scalar>::new();
        for (j, c) in &v.entries {
            for (i, m) in &self.cols[*j].entries {
                let add = m * c;
                if add.is_zero() {
                    continue;
                }
                match acc.get_mut(i) {
                    Some(slot) => *slot = &*slot + &add,
                    None => {
                        acc.insert(*i, add);
                    }
                }
            }
        }
        SpVec {
            entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn compose(&self, rhs: &SpMat) -> SpMat {
        // self * rhs
        assert_eq!(self.dim, rhs.dim);
        SpMat {
            dim: self.dim,
            cols: rhs.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn add(&self, rhs: &SpMat) -> SpMat {
        assert_eq!(self.dim, rhs.dim);
        SpMat {
            dim: self.dim,
            cols: self
                .cols
                .iter()
                .zip(&rhs.cols)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &SpMat) -> SpMat {
        assert_eq!(self.dim, rhs.dim);
        SpMat {
            dim: self.dim,
            cols: self
                .cols
                .iter()
                .zip(&rhs.cols)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> SpMat {
        SpMat {
            dim: self.dim,
            cols: self.cols.iter().map(|col| col.scale(c)).collect(),
        }
    }

    pub fn shift(&self, c: &Scalar) -> SpMat {
        // self + c * identity
        let mut out = self.clone();
        for j in 0..self.dim {
            let v = &out.get(j, j) + c;
            out.set(j, j, v);
        }
        out
    }

    pub fn transpose(&self) -> SpMat {
        let mut cols = vec![SpVec::zero(); self.dim];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in &col.entries {
                cols[*i].entries.push((j, v.clone()));
            }
        }
        SpMat {
            dim: self.dim,
            cols,
        }
    }

    /// Entrywise conjugation.
    pub fn conj(&self) -> SpMat {
        SpMat {
            dim: self.dim,
            cols: self.cols.iter().map(|c| c.conj()).collect(),
        }
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for (j, col) in self.cols.iter().enumerate() {
            acc = &acc + &col.get(j);
        }
        acc
    }

    /// trace(self * rhs) without forming the product.
    pub fn trace_product(&self, rhs: &SpMat) -> Scalar {
        let mut acc = Scalar::zero();
        for (j, col) in rhs.cols.iter().enumerate() {
            // (self * rhs)_{jj} = sum_k self[j,k] rhs[k,j]
            for (k, v) in &col.entries {
                let m = self.cols[*k].get(j);
                if !m.is_zero() {
                    acc = &acc + &(&m * v);
                }
            }
        }
        acc
    }

    /// Exact inverse by Gauss-Jordan elimination. Panics if singular.
    pub fn inverse(&self) -> SpMat {
        let n = self.dim;
        let mut work: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut row = vec![Scalar::zero(); 2 * n];
                row[n + i] = Scalar::one();
                row
            })
            .collect();
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in &col.entries {
                work[*i][j] = v.clone();
            }
        }
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !work[r][col].is_zero())
                .expect("matrix is singular");
            work.swap(col, pivot);
            let inv = work[col][col].inv();
            for k in col..2 * n {
                work[col][k] = &work[col][k] * &inv;
            }
            for r in 0..n {
                if r == col || work[r][col].is_zero() {
                    continue;
                }
                let f = work[r][col].clone();
                for k in col..2 * n {
                    let sub = &work[col][k] * &f;
                    work[r][k] = &work[r][k] - &sub;
                }
            }
        }
        let mut out = SpMat::zero(n);
        for (i, row) in work.iter().enumerate() {
            for j in 0..n {
                if !row[n + j].is_zero() {
                    out.set(i, j, row[n + j].clone());
                }
            }
        }
        out
    }

    pub fn max_abs_diff(&self, rhs: &SpMat) -> f64 {
        let d = self.sub(rhs);
        d.cols.iter().map(|c| c.max_abs()).fold(0.0, f64::max)
    }
}

/// Incremental exact echelon form. Supports rank queries, membership tests
/// and coordinates of a vector with respect to the inserted generators.
#[derive(Clone, Default)]
pub struct Echelon {
    /// Reduced rows, each paired with its expression in the inserted
    /// generators (combination row).
    rows: Vec<(SpVec, SpVec)>,
    inserted: usize,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &SpVec) -> (SpVec, SpVec) {
        let mut cur = v.clone();
        let mut combo = SpVec::zero();
        loop {
            let lead = match cur.leading() {
                Some((i, _)) => i,
                None => break,
            };
            let hit = self
                .rows
                .iter()
                .find(|(row, _)| row.leading().map(|(i, _)| i) == Some(lead));
            match hit {
                Some((row, rcombo)) => {
                    let factor = -&(&cur.get(lead) / &row.get(lead));
                    cur = cur.add_scaled(row, &factor);
                    combo = combo.add_scaled(rcombo, &factor);
                }
                None => break,
            }
        }
        (cur, combo)
    }

    /// Insert a generator. Returns true if it enlarged the span.
    pub fn insert(&mut self, v: &SpVec) -> bool {
        let gen_idx = self.inserted;
        self.inserted += 1;
        let (red, combo) = self.reduce(v);
        if red.is_zero() {
            return false;
        }
        let combo = combo.add(&SpVec::unit(gen_idx));
        self.rows.push((red, combo));
        self.rows
            .sort_by_key(|(r, _)| r.leading().map(|(i, _)| i).unwrap_or(usize::MAX));
        true
    }

    /// If v lies in the span, return its coordinates over the inserted
    /// generators (indices refer to insertion order, including dependent
    /// generators which never receive weight).
    pub fn coordinates(&self, v: &SpVec) -> Option<SpVec> {
        let (red, combo) = self.reduce(v);
        if red.is_zero() {
            Some(combo.neg())
        } else {
            None
        }
    }

    pub fn contains(&self, v: &SpVec) -> bool {
        self.reduce(v).0.is_zero()
    }
}

/// Exact kernel of a sparse matrix, returned as a basis of sparse vectors.
pub fn kernel(mat: &SpMat) -> Vec<SpVec> {
    // row echelon on the rows of mat
    let n = mat.dim;
    let mut rows: Vec<SpVec> = {
        let t = mat.transpose();
        t.cols.into_iter().filter(|r| !r.is_zero()).collect()
    };
    let mut pivots: Vec<(usize, SpVec)> = Vec::new(); // (pivot column, row)
    while let Some(mut row) = rows.pop() {
        loop {
            let lead = match row.leading() {
                Some((i, _)) => i,
                None => break,
            };
            if let Some((_, prow)) = pivots.iter().find(|(c, _)| *c == lead) {
                let factor = -&(&row.get(lead) / &prow.get(lead));
                row = row.add_scaled(prow, &factor);
            } else {
                // normalize and reduce existing rows by this one
                let inv = row.get(lead).inv();
                row = row.scale(&inv);
                for (_, prow) in pivots.iter_mut() {
                    let c = prow.get(lead);
                    if !c.is_zero() {
                        *prow = prow.add_scaled(&row, &-&c);
                    }
                }
                pivots.push((lead, row));
                break;
            }
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|(c, _)| *c).collect();
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut entries = vec![(free, Scalar::one())];
        for (c, row) in &pivots {
            let v = row.get(free);
            if !v.is_zero() {
                entries.push((*c, -&v));
            }
        }
        basis.push(SpVec::from_entries(entries));
    }
    basis
}

/// Rank of the matrix whose columns are the given vectors.
pub fn rank_of(vectors: &[SpVec]) -> usize {
    let mut ech = Echelon::new();
    for v in vectors {
        ech.insert(v);
    }
    ech.rank()
}

#[derive(Debug, thiserror::Error)]
pub enum SpectrumError {
    #[error("minimal polynomial does not split over the integers")]
    NonSplit,
    #[error("spectrum certificate failed: matrix is not annihilated by the split polynomial")]
    CertificateFailed,
}

/// Distinct integer eigenvalues of a matrix known to be diagonalizable with
/// integer spectrum. Probes with a handful of deterministic vectors and
/// certifies the result against the full matrix.
pub fn integer_spectrum(mat: &SpMat) -> Result<Vec<i64>, SpectrumError> {
    if mat.is_zero() {
        return Ok(vec![0]);
    }
    let n = mat.dim;
    // deterministic probe vector touching all coordinates
    let probe = SpVec::from_entries(
        (0..n)
            .map(|i| (i, Scalar::int((i % 7 + 1) as i64)))
            .collect(),
    );
    let mut krylov: Vec<SpVec> = vec![probe.clone()];
    let mut ech = Echelon::new();
    ech.insert(&probe);
    let mut rel: Option<SpVec> = None;
    for _ in 0..64 {
        let next = mat.apply(krylov.last().unwrap());
        if let Some(coords) = ech.coordinates(&next) {
            // next = sum coords_k krylov_k -> monic annihilating polynomial
            let deg = krylov.len();
            let mut poly = vec![Scalar::zero(); deg + 1];
            poly[deg] = Scalar::one();
            for (k, c) in &coords.entries {
                poly[*k] = -c;
            }
            rel = Some(SpVec::from_dense(&poly));
            break;
        }
        ech.insert(&next);
        krylov.push(next);
    }
    let rel = rel.ok_or(SpectrumError::NonSplit)?;
    let mut poly: Vec<Scalar> = rel.to_dense(krylov.len() + 1);
    // strip integer roots by trial division
    let mut roots = Vec::new();
    let mut deg = poly.len() - 1;
    while deg > 0 {
        let mut found = None;
        for cand in -24i64..=24 {
            if eval_poly(&poly[..=deg], cand).is_zero() {
                found = Some(cand);
                break;
            }
        }
        let root = found.ok_or(SpectrumError::NonSplit)?;
        roots.push(root);
        // synthetic division by (x - root)
        let mut carry = Scalar::zero();
        for k in (0..=deg).rev() {
            let new = &poly[k] + &(&carry * &Scalar::int(root));
            carry = new.clone();
            poly[k] = new;
        }
        // after division, poly[1..=deg] holds the quotient
        for k in 0..deg {
            poly[k] = poly[k + 1].clone();
        }
        poly[deg] = Scalar::zero();
        deg -= 1;
    }
    roots.sort_unstable();
    roots.dedup();
    // The probe may have missed eigenvalues; certify against the whole
    // matrix and widen with small integers until the product annihilates.
    let mut spectrum = roots;
    for widened in [12i64, 24] {
        if annihilates(mat, &spectrum) {
            return Ok(spectrum);
        }
        spectrum = (-widened..=widened).collect();
    }
    if annihilates(mat, &spectrum) {
        return Ok(spectrum);
    }
    Err(SpectrumError::CertificateFailed)
}

fn eval_poly(coeffs: &[Scalar], x: i64) -> Scalar {
    let xs = Scalar::int(x);
    let mut acc = Scalar::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * &xs) + c;
    }
    acc
}

fn annihilates(mat: &SpMat, spectrum: &[i64]) -> bool {
    for j in 0..mat.dim {
        let mut v = SpVec::unit(j);
        for lam in spectrum {
            v = mat.apply(&v).add_scaled(&v, &Scalar::int(-lam));
            if v.is_zero() {
                break;
            }
        }
        if !v.is_zero() {
            return false;
        }
    }
    true
}

/// Exact f(mat) for a diagonalizable matrix with integer spectrum, where
/// f(lambda) is supplied per eigenvalue. Evaluated columnwise as the unique
/// interpolation polynomial through the spectrum (Lagrange form), which
/// also re-certifies diagonalizability on every column.
pub fn spectral_function(
    mat: &SpMat,
    spectrum: &[i64],
    f: impl Fn(i64) -> Scalar,
) -> Result<SpMat, SpectrumError> {
    let m = spectrum.len();
    // interpolation polynomial coefficients: p = sum_lam f(lam) * L_lam
    // where L_lam(x) = prod_{mu != lam} (x - mu)/(lam - mu)
    let mut poly = vec![Scalar::zero(); m];
    for (idx, lam) in spectrum.iter().enumerate() {
        // numerator coefficients of prod_{mu != lam} (x - mu)
        let mut num = vec![Scalar::zero(); m];
        num[0] = Scalar::one();
        let mut deg = 0;
        let mut denom = Scalar::one();
        for (jdx, mu) in spectrum.iter().enumerate() {
            if jdx == idx {
                continue;
            }
            // multiply num by (x - mu)
            for k in (0..=deg).rev() {
                let shifted = num[k].clone();
                num[k + 1] = &num[k + 1] + &shifted;
                num[k] = &num[k] * &Scalar::int(-mu);
            }
            deg += 1;
            denom = &denom * &Scalar::int(lam - mu);
        }
        let w = &f(*lam) / &denom;
        for k in 0..m {
            poly[k] = &poly[k] + &(&num[k] * &w);
        }
    }
    // apply p(mat) columnwise via Krylov vectors; certify the annihilating
    // product on each column as we go
    let mut cols = Vec::with_capacity(mat.dim);
    for j in 0..mat.dim {
        let mut kry = Vec::with_capacity(m);
        kry.push(SpVec::unit(j));
        for _ in 1..m {
            let next = mat.apply(kry.last().unwrap());
            kry.push(next);
        }
        // certificate: prod (mat - lam) e_j == 0
        let top = mat.apply(kry.last().unwrap());
        let mut cert = top;
        // expand prod (x - lam) = x^m + c_{m-1} x^{m-1} + ... + c_0
        let mut ann = vec![Scalar::zero(); m + 1];
        ann[0] = Scalar::one();
        let mut adeg = 0;
        for lam in spectrum {
            for k in (0..=adeg).rev() {
                let shifted = ann[k].clone();
                ann[k + 1] = &ann[k + 1] + &shifted;
                ann[k] = &ann[k] * &Scalar::int(-lam);
            }
            adeg += 1;
        }
        for (k, vec) in kry.iter().enumerate() {
            cert = cert.add_scaled(vec, &ann[k]);
        }
        if !cert.is_zero() {
            return Err(SpectrumError::CertificateFailed);
        }
        let mut col = SpVec::zero();
        for (k, vec) in kry.iter().enumerate() {
            col = col.add_scaled(vec, &poly[k]);
        }
        cols.push(col);
    }
    Ok(SpMat { dim: mat.dim, cols })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat_from_rows(rows: &[&[i64]]) -> SpMat {
        let n = rows.len();
        let mut m = SpMat::zero(n);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if *v != 0 {
                    m.set(i, j, Scalar::int(*v));
                }
            }
        }
        m
    }

    #[test]
    fn kernel_of_projection() {
        // rank-1 projector onto (1,1)
        let m = mat_from_rows(&[&[1, 1], &[0, 0]]);
        let k = kernel(&m);
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).is_zero());
    }

    #[test]
    fn echelon_coordinates_roundtrip() {
        let mut ech = Echelon::new();
        let a = SpVec::from_entries(vec![(0, Scalar::int(1)), (1, Scalar::int(2))]);
        let b = SpVec::from_entries(vec![(1, Scalar::int(1)), (2, Scalar::int(1))]);
        assert!(ech.insert(&a));
        assert!(ech.insert(&b));
        let target = a.add_scaled(&b, &Scalar::int(-3));
        let coords = ech.coordinates(&target).unwrap();
        assert_eq!(coords.get(0), Scalar::int(1));
        assert_eq!(coords.get(1), Scalar::int(-3));
        assert!(ech.coordinates(&SpVec::unit(3)).is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = mat_from_rows(&[&[2, 1, 0], &[0, 1, 3], &[1, 0, 1]]);
        let inv = m.inverse();
        assert_eq!(m.compose(&inv), SpMat::identity(3));
    }

    #[test]
    fn spectrum_and_spectral_function() {
        // diag(2, -1, -1, 0)
        let mut m = SpMat::zero(4);
        m.set(0, 0, Scalar::int(2));
        m.set(1, 1, Scalar::int(-1));
        m.set(2, 2, Scalar::int(-1));
        let spec = integer_spectrum(&m).unwrap();
        assert_eq!(spec, vec![-1, 0, 2]);
        let sq = spectral_function(&m, &spec, |l| Scalar::int(l * l)).unwrap();
        assert_eq!(sq, m.compose(&m));
    }

    #[test]
    fn trace_product_matches_compose() {
        let a = mat_from_rows(&[&[1, 2, 0], &[0, 1, 1], &[3, 0, 1]]);
        let b = mat_from_rows(&[&[0, 1, 1], &[2, 0, 1], &[1, 1, 0]]);
        assert_eq!(a.trace_product(&b), a.compose(&b).trace());
    }
}
