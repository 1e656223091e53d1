pub mod alpha;
pub mod apostol_euler;
pub mod appell;
pub mod bernoulli;
pub mod bessel;
pub mod calogero;
pub mod error;
pub mod format;
pub mod fourier;
pub mod numerics;
pub mod par;
pub mod series;
pub mod verify;

pub use alpha::DunklParam;
pub use error::{Error, Result};
pub use par::Execution;
