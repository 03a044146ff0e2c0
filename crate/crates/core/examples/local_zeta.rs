//! Local factors of the representation zeta function, their series and the
//! functional equation.
//!
//! cargo run --example local_zeta -- [D]

use heisenberg_zeta::isoclass::closed_form_count;
use heisenberg_zeta::quad_ring::QuadRing;
use heisenberg_zeta::zeta::{check_local_identity, functional_equation_exponent, local_factor, series_expand};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d: i64 = std::env::args().nth(1).map_or(Ok(2), |s| s.parse())?;
    let ring = QuadRing::new(d)?;
    for p in [2u64, 3, 5, 7, 11, 13] {
        let class = ring.classify_prime(p)?;
        let factor = local_factor(class);
        let series = series_expand(&factor, p, 5)?;
        let table: Vec<u64> = (0..=5).map(|n| closed_form_count(&ring, p, n)).collect::<Result<_, _>>()?;
        println!("p = {p:>2} {class:<8} {factor}");
        println!(
            "        series {:?}\n        table  {table:?}",
            series.iter().map(ToString::to_string).collect::<Vec<_>>()
        );
        println!(
            "        functional equation exponent {}, equals ζ_K,p(s−1)/ζ_K,p(s): {}",
            functional_equation_exponent(class)?,
            check_local_identity(class)
        );
    }
    Ok(())
}
