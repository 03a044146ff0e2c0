//! Roots of x² + bx + c modulo p^k by lifting, checked against a full scan.
//!
//! cargo run --example hensel_roots -- [B C P KMAX]

use heisenberg_zeta::congruence::{solve, solve_exhaustive, Congruence, MonicQuadratic};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args().skip(1).map(|s| s.parse()).collect::<Result<_, _>>()?;
    let [b, c, p, kmax] = match args[..] {
        [] => [0, -2, 7, 4],
        [b, c, p, k] => [b, c, p, k],
        _ => return Err("expected B C P KMAX".into()),
    };
    let f = MonicQuadratic::new(b, c);
    for k in 0..=kmax as u32 {
        let congruence = Congruence::new(f, p as u64, k)?;
        let roots = solve(&congruence);
        let agrees = roots == solve_exhaustive(&congruence)?;
        println!("mod {:>6}: {:?}  (scan agrees: {agrees})", roots.modulus, roots.roots);
    }
    Ok(())
}
