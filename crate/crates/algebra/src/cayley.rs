//! Complexified octonions: eight scalar coordinates over the basis
//! e0 = 1, e1, ..., e7 with the multiplication table produced by
//! Cayley-Dickson doubling of the quaternions, e4 being the doubling unit
//! (so e5 = e1 e4, e6 = e2 e4, e7 = e3 e4). This table is fixed repo-wide;
//! every downstream formula is consistent with it.

use crate::scalar::Scalar;
use std::sync::OnceLock;

/// A complexified octonion.
#[derive(Clone, PartialEq, Debug)]
pub struct OctonionC {
    pub c: [Scalar; 8],
}

/// (sign, basis index) of e_i * e_j.
type MulTable = [[(i8, usize); 8]; 8];

fn quat_mul(i: usize, j: usize) -> (i8, usize) {
    // quaternion basis 1, i, j, k at indices 0..3
    const TAB: [[(i8, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    TAB[i][j]
}

fn quat_conj(i: usize) -> i8 {
    if i == 0 {
        1
    } else {
        -1
    }
}

fn mul_table() -> &'static MulTable {
    static TABLE: OnceLock<MulTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [[(0i8, 0usize); 8]; 8];
        for a in 0..8 {
            for b in 0..8 {
                // octonion pairs (p, q) with e_i = (q_i, 0) for i < 4 and
                // e_{4+i} = (0, q_i); product (p1,q1)(p2,q2) =
                // (p1 p2 - conj(q2) q1, q2 p1 + q1 conj(p2))
                let (ah, ai) = (a / 4, a % 4);
                let (bh, bi) = (b / 4, b % 4);
                t[a][b] = match (ah, bh) {
                    (0, 0) => quat_mul(ai, bi),
                    (0, 1) => {
                        // (q_a, 0)(0, q_b) = (0, q_b q_a)
                        let (s, k) = quat_mul(bi, ai);
                        (s, 4 + k)
                    }
                    (1, 0) => {
                        // (0, q_a)(q_b, 0) = (0, q_a conj(q_b))
                        let (s, k) = quat_mul(ai, bi);
                        (s * quat_conj(bi), 4 + k)
                    }
                    _ => {
                        // (0, q_a)(0, q_b) = (-conj(q_b) q_a, 0)
                        let (s, k) = quat_mul(bi, ai);
                        (-s * quat_conj(bi), k)
                    }
                };
            }
        }
        t
    })
}

impl OctonionC {
    pub fn zero() -> Self {
        OctonionC {
            c: std::array::from_fn(|_| Scalar::zero()),
        }
    }

    pub fn one() -> Self {
        Self::unit(0)
    }

    pub fn unit(k: usize) -> Self {
        let mut o = Self::zero();
        o.c[k] = Scalar::one();
        o
    }

    pub fn from_coords(c: [Scalar; 8]) -> Self {
        OctonionC { c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|v| v.is_zero())
    }

    /// Real (e0) coordinate.
    pub fn scalar_part(&self) -> Scalar {
        self.c[0].clone()
    }

    pub fn add(&self, rhs: &OctonionC) -> OctonionC {
        OctonionC {
            c: std::array::from_fn(|k| &self.c[k] + &rhs.c[k]),
        }
    }

    pub fn sub(&self, rhs: &OctonionC) -> OctonionC {
        OctonionC {
            c: std::array::from_fn(|k| &self.c[k] - &rhs.c[k]),
        }
    }

    pub fn neg(&self) -> OctonionC {
        OctonionC {
            c: std::array::from_fn(|k| -&self.c[k]),
        }
    }

    pub fn scale(&self, s: &Scalar) -> OctonionC {
        OctonionC {
            c: std::array::from_fn(|k| &self.c[k] * s),
        }
    }

    /// Entrywise scalar conjugation tau (not the octonion conjugation).
    pub fn tau(&self) -> OctonionC {
        OctonionC {
            c: std::array::from_fn(|k| self.c[k].tau()),
        }
    }
}

/// Cayley algebra product.
pub fn oct_mul(x: &OctonionC, y: &OctonionC) -> OctonionC {
    let table = mul_table();
    let mut out = OctonionC::zero();
    for (i, a) in x.c.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.c.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let (sign, k) = table[i][j];
            let term = a * b;
            out.c[k] = if sign > 0 {
                &out.c[k] + &term
            } else {
                &out.c[k] - &term
            };
        }
    }
    out
}

/// Octonion conjugation: negates e1..e7, fixes e0.
pub fn oct_conj(x: &OctonionC) -> OctonionC {
    let mut out = x.clone();
    for k in 1..8 {
        out.c[k] = -&out.c[k];
    }
    out
}

/// Symmetric bilinear form (x, y) = sum_k x_k y_k.
pub fn oct_inner(x: &OctonionC, y: &OctonionC) -> Scalar {
    let mut acc = Scalar::zero();
    for k in 0..8 {
        if x.c[k].is_zero() || y.c[k].is_zero() {
            continue;
        }
        acc = &acc + &(&x.c[k] * &y.c[k]);
    }
    acc
}

/// Norm form N(x) = x conj(x), a multiple of e0; returns the scalar.
pub fn oct_norm(x: &OctonionC) -> Scalar {
    oct_inner(x, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    // Frozen multiplication table for this doubling convention, derived
    // once from the quaternion-pair oracle. Row i, column j lists the
    // signed index of e_i e_j (1-based magnitude, 0 means e0).
    const EXPECTED: [[i8; 8]; 8] = [
        [
            axis(0),
            axis(1),
            axis(2),
            axis(3),
            axis(4),
            axis(5),
            axis(6),
            axis(7),
        ],
        [
            axis(1),
            -8,
            axis(3),
            -axis(2),
            axis(5),
            -axis(4),
            -axis(7),
            axis(6),
        ],
        [
            axis(2),
            -axis(3),
            -8,
            axis(1),
            axis(6),
            axis(7),
            -axis(4),
            -axis(5),
        ],
        [
            axis(3),
            axis(2),
            -axis(1),
            -8,
            axis(7),
            -axis(6),
            axis(5),
            -axis(4),
        ],
        [
            axis(4),
            -axis(5),
            -axis(6),
            -axis(7),
            -8,
            axis(1),
            axis(2),
            axis(3),
        ],
        [
            axis(5),
            axis(4),
            -axis(7),
            axis(6),
            -axis(1),
            -8,
            -axis(3),
            axis(2),
        ],
        [
            axis(6),
            axis(7),
            axis(4),
            -axis(5),
            -axis(2),
            axis(3),
            -8,
            -axis(1),
        ],
        [
            axis(7),
            -axis(6),
            axis(5),
            axis(4),
            -axis(3),
            -axis(2),
            axis(1),
            -8,
        ],
    ];

    const fn axis(k: i8) -> i8 {
        k
    }

    fn decode(v: i8) -> (i8, usize) {
        if v == -8 {
            (-1, 0)
        } else if v >= 0 {
            (1, v as usize)
        } else {
            (-1, (-v) as usize)
        }
    }

    #[test]
    fn multiplication_table_is_frozen() {
        for i in 0..8 {
            for j in 0..8 {
                let prod = oct_mul(&OctonionC::unit(i), &OctonionC::unit(j));
                let (sign, k) = decode(EXPECTED[i][j]);
                let mut expect = OctonionC::zero();
                expect.c[k] = if sign > 0 {
                    Scalar::one()
                } else {
                    -&Scalar::one()
                };
                assert_eq!(prod, expect, "e{} * e{}", i, j);
            }
        }
    }

    #[test]
    fn unit_law_and_squares() {
        let mut rng = StdRng::seed_from_u64(3);
        let x = rand_oct(&mut rng);
        assert_eq!(oct_mul(&OctonionC::one(), &x), x);
        assert_eq!(oct_mul(&x, &OctonionC::one()), x);
        assert_eq!(
            oct_mul(&OctonionC::unit(1), &OctonionC::unit(2)),
            OctonionC::unit(3)
        );
        assert_eq!(
            oct_mul(&OctonionC::unit(1), &OctonionC::unit(1)),
            OctonionC::unit(0).neg()
        );
    }

    fn rand_oct(rng: &mut StdRng) -> OctonionC {
        let mut o = OctonionC::zero();
        for _ in 0..3 {
            let k = rng.gen_range(0..8);
            o.c[k] = Scalar::ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        }
        o
    }

    #[test]
    fn alternativity_and_norm_multiplicativity() {
        let mut rng = StdRng::seed_from_u64(4);
        for _ in 0..60 {
            let x = rand_oct(&mut rng);
            let y = rand_oct(&mut rng);
            // (x x) y = x (x y)
            assert_eq!(oct_mul(&oct_mul(&x, &x), &y), oct_mul(&x, &oct_mul(&x, &y)));
            assert_eq!(oct_mul(&y, &oct_mul(&x, &x)), oct_mul(&oct_mul(&y, &x), &x));
            // N(x y) = N(x) N(y)
            assert_eq!(oct_norm(&oct_mul(&x, &y)), &oct_norm(&x) * &oct_norm(&y));
            // conj is an anti-homomorphism
            assert_eq!(
                oct_conj(&oct_mul(&x, &y)),
                oct_mul(&oct_conj(&y), &oct_conj(&x))
            );
        }
    }

    #[test]
    fn inner_product_values() {
        assert_eq!(
            oct_inner(&OctonionC::unit(2), &OctonionC::unit(5)),
            Scalar::zero()
        );
        let v = OctonionC::unit(0)
            .scale(&Scalar::int(3))
            .add(&OctonionC::unit(2).scale(&Scalar::int(4)));
        assert_eq!(oct_inner(&v, &v), Scalar::int(25));
        let iv = OctonionC::unit(1).scale(&Scalar::i());
        assert_eq!(oct_inner(&OctonionC::unit(1), &iv), Scalar::i());
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(oct_conj(&OctonionC::one()), OctonionC::one());
        assert_eq!(oct_conj(&OctonionC::unit(3)), OctonionC::unit(3).neg());
        let v = OctonionC::one().add(&OctonionC::unit(5).scale(&Scalar::int(2)));
        let w = OctonionC::one().sub(&OctonionC::unit(5).scale(&Scalar::int(2)));
        assert_eq!(oct_conj(&v), w);
    }

    #[test]
    fn norm_is_x_times_conj() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..20 {
            let x = rand_oct(&mut rng);
            let n = oct_mul(&x, &oct_conj(&x));
            let mut expect = OctonionC::zero();
            expect.c[0] = oct_norm(&x);
            assert_eq!(n, expect);
        }
    }
}
