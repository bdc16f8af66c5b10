pub mod exact;
pub mod reps;
pub mod verdict;
pub mod field;
pub mod speclang;
pub mod umatrix;
pub mod lagrangian;
