use crate::types::{CabinClass, Haul};

/// Errors produced by loading, calibration and evaluation.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Csv {
        path: String,
        #[source]
        source: csv::Error,
    },
    #[error("{path} row {row}, column {field}: {message}")]
    Parse {
        path: String,
        row: u64,
        field: String,
        message: String,
    },
    #[error("{path} row {row}: {message}")]
    Unit {
        path: String,
        row: u64,
        message: String,
    },
    #[error("{path}: {message}")]
    Config { path: String, message: String },
    #[error("referential error: {0}")]
    Referential(String),
    #[error("layout error: {0}")]
    Layout(String),
    #[error("degenerate regression design for {aircraft} {haul}: all passenger counts equal")]
    DegenerateRegression { aircraft: String, haul: Haul },
    #[error("model error: {0}")]
    InvalidModel(String),
    #[error("load factor {0} outside [0, 1]")]
    LoadFactor(f64),
    #[error("area per seat must be positive, got {0}")]
    NonPositiveAreaPerSeat(f64),
    #[error("class {class} has floor area but zero seats")]
    ZeroSeatClass { class: CabinClass },
    #[error("no fare available for {haul} {class}")]
    MissingFare { haul: Haul, class: CabinClass },
    #[error("revised seat count must be positive, got {0}")]
    ZeroRevisedSeats(f64),
    #[error("trip budget must be positive, got {0}")]
    NonPositiveBudget(f64),
    #[error("scenario {scenario}: floor area not conserved ({detail})")]
    Conservation { scenario: String, detail: String },
    #[error("missing result: {0}")]
    MissingResult(String),
}

pub type Result<T> = std::result::Result<T, Error>;
