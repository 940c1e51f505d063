//! Offline proposal-level image mixing for object-detection datasets.
//!
//! The crate provides four building blocks:
//!
//! - [`mixer`]: crops pairs of region proposals across a batch of images,
//!   blends them with a Beta-sampled ratio, and pastes the result back.
//!   All ablation variants (single/multi image, GT/pseudo-RoI source,
//!   max-rectified ratio) are expressible through [`mixer::MixConfig`].
//! - [`raster`]: the float image type plus the pixel primitives the mixer
//!   and the robustness corpus need (bilinear resize, crop/paste, noise
//!   injection, Gaussian blur).
//! - [`voc`]: Pascal-VOC-layout dataset reading and writing (XML
//!   annotations, split lists, PNG/JPEG codecs).
//! - [`eval`]: VOC-protocol detection scoring (greedy IoU matching,
//!   per-class average precision, mAP).
//!
//! [`pipeline`] ties these together into deterministic, seedable batch jobs
//! suitable for a CLI front end.

pub mod error;
pub mod eval;
pub mod geometry;
pub mod mixer;
pub mod pipeline;
pub mod raster;
pub mod rng;
pub mod voc;

pub use error::{Error, Result};
