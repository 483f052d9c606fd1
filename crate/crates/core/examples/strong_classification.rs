//! A conjugated sum of elementary factorizations and its recovered
//! normal form, together with the witnessing isomorphism.

use hmf::class::strong_decompose;
use hmf::mf::MatrixFactorization;
use hmf::random::{random_unimodular, rng_from_seed};
use hmf::Ring;

fn main() -> hmf::Result<()> {
    let w = Ring::Integers.from_i64(360);
    let vs: Vec<_> = [12, 5, 4]
        .into_iter()
        .map(|n| Ring::Integers.from_i64(n))
        .collect();
    let base = MatrixFactorization::elementary_sum(&vs, &w)?;

    let mut rng = rng_from_seed(42);
    let (p, _) = random_unimodular(Ring::Integers, 3, 10, &mut rng);
    let (q, _) = random_unimodular(Ring::Integers, 3, 10, &mut rng);
    let (a, _) = base.conjugate(&p, &q)?;
    println!("disguised v =\n{}\n", a.v());

    let sd = strong_decompose(&a)?;
    let factors: Vec<_> = sd.factors.iter().map(ToString::to_string).collect();
    println!("elementary factors: {}", factors.join(", "));
    println!("witness verifies: {}", sd.verify(&a)?);
    println!("witness is a cocycle: {}", sd.isomorphism(&a)?.is_cocycle());
    Ok(())
}
