pub mod error;
pub mod llt;
pub mod macdonald;
pub mod ring;
pub mod shapes;
pub mod shuffle;
pub mod symfun;
pub mod verify;

pub use error::{Error, Result};
