//! Brute-force checks that do not rely on the closed forms.

mod coset_sizes;
mod matrix;
mod mindist;
mod sweep;

pub use coset_sizes::{coset_size_scan, CosetSizeReport};
pub use matrix::{
    check_hermitian_dual_containing_matrix, matrix_from_generator, Echelon, MatrixCode,
    MATRIX_LENGTH_LIMIT,
};
pub use mindist::{
    min_distance_exhaustive, min_distance_parity_search, MinDistance, DEFAULT_BUDGET,
};
pub use sweep::{sweep, sweep_frames, BoundaryRow, SweepReport, SweepRow};
