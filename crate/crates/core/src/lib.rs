pub mod complex;
pub mod error;
pub mod exact;
pub mod fpmod;
pub mod freyd;
pub mod linalg;
pub mod matrix;
pub mod report;
pub mod ring;
pub mod sampling;
pub mod serial;
pub mod suites;
pub mod tstructure;

pub use error::{Error, Result};
pub use matrix::IntMatrix;
pub use ring::{Elem, Poly, RingSpec};
