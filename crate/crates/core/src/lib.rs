#![no_std]
// matrix code reads better with explicit indices
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod conway;
pub mod corpus;
pub mod diagram;
pub mod error;
pub mod fixtures;
pub mod lescop;
pub mod linkalg;
pub mod periodic;
pub mod poly;
pub mod theorems;

pub use error::{Error, Result};
