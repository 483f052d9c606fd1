//! Mapping cones of elementary morphisms: the pair (xi, zeta) and the
//! isomorphism test, over all divisor pairs of W = 12 with r = 1.

use hmf::class::{cone_split, is_iso};
use hmf::mf::{cone, elementary_morphism, MatrixFactorization};
use hmf::ring::divisors;
use hmf::smith::smith;
use hmf::Ring;

fn main() -> hmf::Result<()> {
    let w = Ring::Integers.from_i64(12);
    let r = Ring::Integers.one();
    println!(
        "{:>3} {:>3} | {:>3} {:>4} | u-block  | iso",
        "v1", "v2", "xi", "zeta"
    );
    for v1 in divisors(&w)? {
        for v2 in divisors(&w)? {
            let f = elementary_morphism(
                &MatrixFactorization::elementary(&v1, &w)?,
                &MatrixFactorization::elementary(&v2, &w)?,
                &r,
            )?;
            let split = cone_split(&f)?;
            let u: Vec<_> = smith(cone(&f)?.u())
                .invariant_factors
                .iter()
                .map(ToString::to_string)
                .collect();
            println!(
                "{:>3} {:>3} | {:>3} {:>4} | {:<8} | {}",
                v1.to_string(),
                v2.to_string(),
                split.xi.to_string(),
                split.zeta.to_string(),
                u.join(","),
                is_iso(&f)?
            );
        }
    }
    Ok(())
}
