//! The graded space `C^{2n+1|2m}`, Koszul-signed tensor operators and the
//! operators `P`, `Q`, `R(u)`.

mod context;
pub mod koszul;
mod operator;
mod rmatrix;

pub use context::{bits_to_string, parse_bits, reversed_bits, standard_bits, ParityContext};
pub use koszul::{koszul_product, Factor};
pub use operator::{transpose_sign, GradedOperator, UnitTerm};
pub use rmatrix::{
    build_p, build_q, build_r, check_yang_baxter, proportionality, q_constants, r_pole, super_transpose,
    QConstants,
};
