//! Smith normal form with its certificate, over Z and GF(3)[x].

use hmf::smith::{cokernel_invariants, kernel_basis, smith};
use hmf::{Ring, RingMatrix};

fn main() -> hmf::Result<()> {
    let a = RingMatrix::from_i64(Ring::Integers, &[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])?;
    let s = smith(&a);
    println!("A =\n{a}\n\nD =\n{}\n", s.d);
    println!("U A = D V holds: {}", s.verify(&a).is_ok());
    println!("cokernel: {}", cokernel_invariants(&a));

    let r = Ring::gf_poly(3)?;
    let x = r.x().unwrap();
    let rows = vec![
        vec![x.clone(), &x + &r.one()],
        vec![x.pow(2), &x + &r.from_i64(2)],
    ];
    let b = RingMatrix::from_rows(r, 2, rows)?;
    let s = smith(&b);
    println!(
        "\nover {r}: invariant factors {:?}",
        s.invariant_factors
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    println!("kernel basis:\n{}", kernel_basis(&b));
    Ok(())
}
