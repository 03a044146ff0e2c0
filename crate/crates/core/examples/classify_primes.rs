//! Splitting type of small primes in several quadratic rings.
//!
//! cargo run --example classify_primes -- [PMAX]

use heisenberg_zeta::arith;
use heisenberg_zeta::quad_ring::QuadRing;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pmax: u64 = std::env::args().nth(1).map_or(Ok(30), |s| s.parse())?;
    let primes = arith::primes_up_to(pmax);
    print!("{:>4}", "d");
    for p in &primes {
        print!("{p:>4}");
    }
    println!();
    for d in [-3, -1, 2, 3, 5, 10, 13] {
        let ring = QuadRing::new(d)?;
        print!("{d:>4}");
        for &p in &primes {
            let class = ring.classify_prime(p)?.to_string();
            print!("{:>4}", &class[..1]);
        }
        println!("   disc {:>3}, ω² = t·ω + n with t = {}, n = {}", ring.discriminant, ring.trace_t, ring.norm_n);
    }
    println!("I = inert, S = split, R = ramified");
    Ok(())
}
