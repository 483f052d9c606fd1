//! Seeded sampling of ring elements, matrices and unimodular transforms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::RingMatrix;
use crate::ring::{FpPoly, Ring, RingElement};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integers in `[-bound, bound]`; polynomials of degree at most `bound`.
pub fn random_element<R: Rng + ?Sized>(ring: Ring, bound: u32, rng: &mut R) -> RingElement {
    match ring {
        Ring::Integers => {
            let b = bound as i64;
            ring.from_i64(rng.gen_range(-b..=b))
        }
        Ring::Poly(p) => {
            let coeffs: Vec<u32> = (0..=bound).map(|_| rng.gen_range(0..p)).collect();
            RingElement::Poly(FpPoly::from_reduced(p, coeffs))
        }
    }
}

pub fn random_matrix<R: Rng + ?Sized>(
    ring: Ring,
    rows: usize,
    cols: usize,
    bound: u32,
    rng: &mut R,
) -> RingMatrix {
    let data = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| random_element(ring, bound, rng))
                .collect()
        })
        .collect();
    RingMatrix::from_rows(ring, cols, data).expect("sampled entries share the ring")
}

/// A product of `steps` random transvections, swaps and unit scalings,
/// returned together with its inverse.
pub fn random_unimodular<R: Rng + ?Sized>(
    ring: Ring,
    n: usize,
    steps: usize,
    rng: &mut R,
) -> (RingMatrix, RingMatrix) {
    let mut m = RingMatrix::identity(ring, n);
    let mut inv = RingMatrix::identity(ring, n);
    if n == 0 {
        return (m, inv);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        match rng.gen_range(0..6) {
            0 => {
                let j = rng.gen_range(0..n);
                m.swap_rows(i, j);
                inv.swap_cols(i, j);
            }
            1 => {
                let u = random_unit(ring, rng);
                let u_inv = u.unit_inverse().expect("sampled a unit");
                m.scale_row(i, &u);
                inv.scale_col(i, &u_inv);
            }
            _ if n > 1 => {
                let j = (i + rng.gen_range(1..n)) % n;
                let c = random_element(ring, 2, rng);
                // m <- (I + c e_ij) m, inv <- inv (I - c e_ij)
                m.add_row_multiple(i, j, &c);
                inv.add_col_multiple(j, i, &-&c);
            }
            _ => {}
        }
    }
    (m, inv)
}

fn random_unit<R: Rng + ?Sized>(ring: Ring, rng: &mut R) -> RingElement {
    match ring {
        Ring::Integers => ring.from_i64(if rng.gen_bool(0.5) { 1 } else { -1 }),
        Ring::Poly(p) => ring.from_i64(rng.gen_range(1..p) as i64),
    }
}
