//! Partitions, skew shapes, signed-letter fillings and their standardization.

mod filling;
mod partition;
mod skew;
mod tableau;

pub use filling::{enumerate_fillings, standard_tableaux, Filling, FillingIter, Letter};
pub use partition::{compositions, sub_staircase_iter, Cell, Partition};
pub use skew::{content, diag, SkewShape};
pub use tableau::{
    d_key, d_less, descent_set, maj_tableau, maj_word, standardize, MajFlavor, StdMode,
};

/// `conjugate` as a free function.
pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

/// `flag_strip` as a free function.
pub fn flag_strip(lambda: &Partition, n: usize, m: usize) -> crate::Result<SkewShape> {
    if m == 0 {
        return Err(crate::Error::Input("m must be positive".into()));
    }
    SkewShape::flag_strip(lambda, n)
}

/// `arm_leg` as a free function.
pub fn arm_leg(lambda: &Partition, x: Cell) -> crate::Result<(usize, usize)> {
    lambda.arm_leg(x)
}
