//! File formats and the acceptance suite behind the `weakid` command.

pub mod formats;
pub mod selftest;
