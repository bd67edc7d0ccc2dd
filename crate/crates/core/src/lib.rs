//! Critical dense polymers on the strip: the Temperley-Lieb loop model at
//! loop weight zero, the XX spin chain it maps onto, and the machinery to
//! verify the selection-rule degeneracies of the loop Hamiltonian at finite
//! size.

pub mod error;

pub use error::{Error, Result};
