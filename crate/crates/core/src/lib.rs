#![no_std]

extern crate alloc;

pub mod exactla;
pub mod gallery;
pub mod gtable;
pub mod repkit;
pub mod supercochain;
