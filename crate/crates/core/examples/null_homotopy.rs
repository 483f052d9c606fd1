//! Null-homotopy witnesses and a distinguished triangle.

use hmf::mf::{
    cone_triangle, elementary_morphism, is_null_homotopic, MatrixFactorization, MfMorphism,
};
use hmf::Ring;

fn main() -> hmf::Result<()> {
    let z = |n: i64| Ring::Integers.from_i64(n);
    let w = z(36);
    let e6 = MatrixFactorization::elementary(&z(6), &w)?;
    let e4 = MatrixFactorization::elementary(&z(4), &w)?;

    let id = MfMorphism::identity(&e6);
    println!(
        "id(e_6) null-homotopic: {}",
        is_null_homotopic(&id)?.is_some()
    );
    if let Some(s) = is_null_homotopic(&MfMorphism::identity(&e4))? {
        println!("id(e_4) = d s + s d with s01 = {}, s10 = {}", s.s01, s.s10);
    }

    let f = elementary_morphism(&e6, &MatrixFactorization::elementary(&z(2), &w)?, &z(1))?;
    let t = cone_triangle(&f)?;
    println!(
        "cone of e_6 -> e_2:\nu =\n{}\nv =\n{}",
        t.cone.u(),
        t.cone.v()
    );
    println!("triangle verifies: {}", t.verify()?);
    Ok(())
}
