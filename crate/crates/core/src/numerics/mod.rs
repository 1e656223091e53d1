pub mod dd;
pub mod gamma;
pub mod quadrature;
pub mod scalar;
pub mod sum;

pub use gamma::{gamma_complex, gamma_fn, pochhammer};
pub use quadrature::{gauss_jacobi_01, integrate_mu, MuQuadrature, QuadratureRule};
pub use scalar::{FieldKind, Scalar};
pub use sum::{CompensatedSum, NeumaierSum};
