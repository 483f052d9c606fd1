//! Primary classes in the homotopy category, suspension and localization.

use hmf::class::{critical_decompose, localize_class, primary_decompose, suspend_class};
use hmf::mf::MatrixFactorization;
use hmf::{Ring, RingElement};

fn main() -> hmf::Result<()> {
    let z = |n: i64| Ring::Integers.from_i64(n);
    let w = z(360);
    let cd = critical_decompose(&w)?;
    println!(
        "W = {w}: W0 = {}, critical primes {:?}",
        cd.w0,
        cd.critical
            .iter()
            .map(|(p, n)| format!("{p}^{n}"))
            .collect::<Vec<_>>()
    );

    let a = MatrixFactorization::elementary_sum(&[z(12), z(5), z(4), z(40)], &w)?;
    let class = primary_decompose(&a, &cd)?;
    println!("class:      {class}");
    println!("suspension: {}", suspend_class(&class));
    println!("at 3:       {}", localize_class(&class, &z(3))?);

    let r = Ring::gf_poly(3)?;
    let x = r.x().unwrap();
    let x1: RingElement = &x + &r.one();
    let w = &x.pow(4) * &x1.pow(2);
    let cd = critical_decompose(&w)?;
    let a = MatrixFactorization::elementary_sum(&[x.pow(3), &x * &x1], &w)?;
    println!("\nW = {w}: {}", primary_decompose(&a, &cd)?);
    Ok(())
}
