//! An explicit monomial representative, its relations and irreducibility.
//!
//! cargo run --example build_representation -- [D P N INDEX]

use heisenberg_zeta::isoclass::enumerate;
use heisenberg_zeta::monomial::MonomialMatrix;
use heisenberg_zeta::quad_ring::QuadRing;
use heisenberg_zeta::repbuild::{build, character_norm, twist_invariants, verify_relations};

fn show(name: &str, m: &MonomialMatrix) {
    println!("{name}:");
    let mut grid = vec![vec!["  . ".to_string(); m.dim]; m.dim];
    for c in 0..m.dim {
        grid[m.perm[c] as usize][c] = format!("ζ^{:<2}", m.exps[c]);
    }
    for row in grid {
        println!("  {}", row.join(" "));
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args().skip(1).map(|s| s.parse()).collect::<Result<_, _>>()?;
    let (d, p, n, index) = match args[..] {
        [] => (-1, 5, 1, 1),
        [d, p, n, i] => (d, p as u64, n as u32, i as u64),
        _ => return Err("expected D P N INDEX".into()),
    };
    let ring = QuadRing::new(d)?;
    let census = enumerate(&ring, p, n)?;
    let label = census.label(index).ok_or("index out of range")?;
    let rep = build(&ring, &label)?;
    println!("{label:?}");
    println!("dimension {}, ζ of order {}", rep.dim(), rep.root_order());
    if rep.dim() <= 9 {
        for (name, m) in ["x", "x_d", "y", "y_d"].iter().zip(rep.generators()) {
            show(name, m);
        }
    }
    let (order, norm) = character_norm(&rep)?;
    println!("relations hold: {}", verify_relations(&ring, &rep));
    println!("image order {order}, Σ|tr g|² = {norm:?} (irreducible iff this is [{order}, 0, ...])");
    println!("twist invariants (Λ, Λ_d) exponents: {:?}", twist_invariants(&rep));
    Ok(())
}
