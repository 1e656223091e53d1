pub mod cal_i;
pub mod deriv;
pub mod laurent;
pub mod zeros;

pub use cal_i::{cal_i, dunkl_kernel};
pub use deriv::{cal_i_deriv, cal_i_derivs};
pub use laurent::{deriv_poly_ladder, deriv_polys, LaurentPoly};
pub use zeros::{cal_i_at_izero, mcmahon, zeros_j, zeros_j_with, zeros_s, zeros_s_with, ZeroKind, ZeroTable};
