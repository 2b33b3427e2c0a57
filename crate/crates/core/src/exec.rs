//! Parallel execution helpers.
