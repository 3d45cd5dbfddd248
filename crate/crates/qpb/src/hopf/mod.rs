//! Hopf-algebra layer: tensor products, structure maps, convolution, and
//! the bundled quotient maps and sections between the symmetry algebras.

pub mod maps;
pub mod structure;
pub mod tensor;

pub use maps::{
    convolution_unit, convolve, is_convolution_inverse, verify_hopf_map, verify_section, HLinMap,
};
pub use structure::HopfAlgebra;
pub use tensor::Tensor;
