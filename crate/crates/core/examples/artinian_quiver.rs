//! The Auslander-Reiten quiver of A_n(p) as Graphviz, plus the
//! Serre-duality check on indices.

use hmf::artinian::{ar_quiver, cok_crosscheck, serre_identity, LambdaContext};
use hmf::Ring;

fn main() -> hmf::Result<()> {
    let n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let ctx = LambdaContext::new(&Ring::Integers.from_i64(2), n)?;
    print!("{}", ar_quiver(&ctx, false).to_dot());
    print!("{}", ar_quiver(&ctx, true).to_dot());
    eprintln!("serre identity: {}", serre_identity(n)?);
    eprintln!(
        "hom complex agrees with stable hom: {}",
        cok_crosscheck(&ctx)?
    );
    Ok(())
}
