pub mod classify;
pub mod forcing;
pub mod graph;
pub mod linalg;
pub mod paths;
pub mod witness;
