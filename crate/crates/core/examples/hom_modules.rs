//! Hom modules between primary factorizations of p^n, next to the
//! index formula for the stable category of A_n(p).

use hmf::artinian::mu;
use hmf::class::hmf_hom;
use hmf::mf::MatrixFactorization;
use hmf::Ring;

fn main() -> hmf::Result<()> {
    let p = Ring::Integers.from_i64(3);
    let n = 5;
    let w = p.pow(n);
    for i in 1..n {
        let row: Vec<String> = (1..n)
            .map(|j| {
                let a = MatrixFactorization::elementary(&p.pow(i), &w)?;
                let b = MatrixFactorization::elementary(&p.pow(j), &w)?;
                let (even, odd) = hmf_hom(&a, &b)?;
                Ok(format!("{even} | {odd} (mu={})", mu(n, i, j)?))
            })
            .collect::<hmf::Result<_>>()?;
        println!("i={i}: {}", row.join("   "));
    }
    Ok(())
}
