//! The representation counts r_n against the coefficients of ζ_K(s−1)/ζ_K(s).
//!
//! cargo run --example dirichlet_identity -- [D N]

use heisenberg_zeta::quad_ring::QuadRing;
use heisenberg_zeta::zeta::{check_global_identity, identity_table};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args().skip(1).map(|s| s.parse()).collect::<Result<_, _>>()?;
    let (d, bound) = match args[..] {
        [] => (-1, 30),
        [d, n] => (d, n as usize),
        _ => return Err("expected D N".into()),
    };
    let ring = QuadRing::new(d)?;
    println!("{:>5} {:>8} {:>8}", "n", "r_n", "b_n");
    for row in identity_table(&ring, bound)? {
        println!("{:>5} {:>8} {:>8}", row.n, row.r_n, row.b_n);
    }
    println!("identity holds up to {bound}: {}", check_global_identity(&ring, bound)?);
    Ok(())
}
