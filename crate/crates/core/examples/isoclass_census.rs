//! Twist isoclasses of dimension p^n by stratum, against the closed form.
//!
//! cargo run --example isoclass_census -- [D P N]

use heisenberg_zeta::isoclass::{closed_form_count, enumerate};
use heisenberg_zeta::quad_ring::QuadRing;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args().skip(1).map(|s| s.parse()).collect::<Result<_, _>>()?;
    let (d, p, n) = match args[..] {
        [] => (2, 7, 3),
        [d, p, n] => (d, p as u64, n as u32),
        _ => return Err("expected D P N".into()),
    };
    let ring = QuadRing::new(d)?;
    println!("d = {d}, p = {p} ({}), dimension {}", ring.classify_prime(p)?, p.pow(n));
    let census = enumerate(&ring, p, n)?;
    for s in &census.strata {
        println!(
            "  r = {}, m = {}, {:?}: {} units × {} values of l = {}",
            s.r,
            s.m,
            s.case,
            s.units.len(),
            s.ls.len(),
            s.count()
        );
    }
    println!("enumerated {}, closed form {}", census.count(), closed_form_count(&ring, p, n)?);
    for label in census.labels().take(5) {
        println!("  {label:?}");
    }
    Ok(())
}
