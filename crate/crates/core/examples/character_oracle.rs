//! Character table of a finite Heisenberg quotient and the twist-orbit count
//! it gives, next to the closed form.
//!
//! cargo run --release --example character_oracle -- [D P K]

use heisenberg_zeta::oracle::{census, character_table, quotient_group, OracleLimits};
use heisenberg_zeta::quad_ring::QuadRing;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args().skip(1).map(|s| s.parse()).collect::<Result<_, _>>()?;
    let (d, p, k) = match args[..] {
        [] => (2, 3, 1),
        [d, p, k] => (d, p as u64, k as u32),
        _ => return Err("expected D P K".into()),
    };
    let ring = QuadRing::new(d)?;
    let limits = OracleLimits::default();
    let group = quotient_group(&ring, p, k, limits.max_order)?;
    let table = character_table(&group, &limits)?;
    println!(
        "|G| = {}, {} classes, computed over F_{} (exponent {})",
        table.group_order,
        table.classes.count(),
        table.field_char(),
        table.exponent
    );
    let report = census(&ring, p, k, &limits)?;
    for (dim, count) in &report.degree_census {
        println!("degree {dim:>4}: {count:>6} characters in {:>4} twist orbits", report.twist_orbits_by_dim[dim]);
    }
    for c in &report.agree_flags {
        println!(
            "dimension {}^{}: oracle {}, closed form {}, agree {}",
            p, c.n, c.oracle_count, c.closed_form, c.agree
        );
    }
    Ok(())
}
