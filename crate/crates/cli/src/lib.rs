// SPDX-License-Identifier: Apache-2.0

//! Rendering and verification helpers behind the `mtz` binary.

pub mod json;
pub mod latex;
pub mod verify;

/// Output format shared by every subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}
