pub mod arith;
pub mod cli;
pub mod congruence;
pub mod error;
pub mod isoclass;
pub mod monomial;
pub mod oracle;
pub mod quad_ring;
pub mod repbuild;
pub mod selftest;
pub mod zeta;
