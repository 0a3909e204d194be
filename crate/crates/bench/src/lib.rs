//! Fixed inputs for the kernel benchmarks.

use snakecheck::{ms, Multisegment};

/// A three-segment and a two-segment ladder whose product has five terms.
pub fn small_ladders() -> (Multisegment, Multisegment) {
    (ms(&[(-6, -1), (-2, 3), (-1, 4)]), ms(&[(-4, 1), (0, 2)]))
}

/// Two three-segment ladders whose product has seven terms.
pub fn medium_ladders() -> (Multisegment, Multisegment) {
    (ms(&[(-9, -4), (-8, -2), (-5, 0)]), ms(&[(-10, -3), (-7, -2), (-6, -1)]))
}

/// A staircase ladder of `len` unit-shifted segments of length `width`.
pub fn staircase(len: i64, width: i64, offset: i64) -> Multisegment {
    (0..len)
        .map(|i| snakecheck::seg(offset + i, offset + i + width - 1))
        .collect()
}
