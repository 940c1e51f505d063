//! Crate-wide error type.

use std::path::PathBuf;

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid box ({x_min},{y_min})-({x_max},{y_max}): min must be strictly below max")]
    InvalidBox {
        x_min: i64,
        y_min: i64,
        x_max: i64,
        y_max: i64,
    },

    #[error("box ({x_min},{y_min})-({x_max},{y_max}) extends outside a {width}x{height} image")]
    BoxOutOfBounds {
        x_min: u32,
        y_min: u32,
        x_max: u32,
        y_max: u32,
        width: u32,
        height: u32,
    },

    #[error("image dimensions {width}x{height} are invalid (both must be >= 1)")]
    InvalidDimensions { width: u32, height: u32 },

    #[error("unsupported channel count {channels} (expected 1 or 3)")]
    InvalidChannelCount { channels: u8 },

    #[error("pixel data length {actual} does not match {width}x{height}x{channels} = {expected}")]
    DataLengthMismatch {
        width: u32,
        height: u32,
        channels: u8,
        expected: usize,
        actual: usize,
    },

    #[error("intensity {value} at index {index} is outside [0,1]")]
    IntensityOutOfRange { index: usize, value: f32 },

    #[error("channel counts differ: {left} vs {right}")]
    ChannelMismatch { left: u8, right: u8 },

    #[error("patch is {patch_w}x{patch_h} but the target box is {box_w}x{box_h}")]
    PatchSizeMismatch {
        box_w: u32,
        box_h: u32,
        patch_w: u32,
        patch_h: u32,
    },

    #[error("parameter {name} = {value} is out of range: {requirement}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },

    #[error("unknown mix variant {name:?} (expected one of {valid})")]
    UnknownVariant { name: String, valid: &'static str },

    #[error("batch is empty")]
    EmptyBatch,

    #[error("batch has {images} images but {annotations} annotation lists")]
    AnnotationCountMismatch { images: usize, annotations: usize },

    #[error("malformed XML: {0}")]
    Xml(#[from] roxmltree::Error),

    #[error("annotation is missing required element <{element}>")]
    MissingElement { element: &'static str },

    #[error("annotation element <{element}> has invalid value {value:?}")]
    InvalidElement { element: &'static str, value: String },

    #[error("dataset directory missing: {path}")]
    MissingDirectory { path: PathBuf },

    #[error("split list missing: {path}")]
    MissingSplit { path: PathBuf },

    #[error("split stem {stem:?} has no matching {kind} file under {searched}")]
    MissingEntry {
        stem: String,
        kind: &'static str,
        searched: PathBuf,
    },

    #[error("unsupported image format for {path} (PNG is the only supported output format)")]
    UnsupportedFormat { path: PathBuf },

    #[error("image codec error for {path}: {source}")]
    Codec {
        path: PathBuf,
        source: image::ImageError,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("detection file line {line}: {message}")]
    DetectionParse { line: usize, message: String },

    #[error("output path already exists: {path}")]
    OutputExists { path: PathBuf },

    #[error("report error: {0}")]
    Report(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn codec(path: impl Into<PathBuf>, source: image::ImageError) -> Self {
        Error::Codec {
            path: path.into(),
            source,
        }
    }
}
