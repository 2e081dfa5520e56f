//! Wire-format types shared between the `kr-strata` binary and its tests.

pub mod record;
