#![cfg_attr(not(feature = "std"), no_std)]
extern crate alloc;
pub fn probe() -> f64 { libm::log2(8.0) }
