//! Embedded published reference tables.
//!
//! The reference values ship as a compiled-in CSV so reconciliation runs
//! offline. Each cell carries the printed number and its printed decimal
//! places; tolerance checks absorb print rounding by widening the limit by
//! half a unit in the last printed place.

use crate::{Error, Result};
use std::sync::OnceLock;

/// One published table cell.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceCell {
    pub table: String,
    pub row: String,
    pub col: String,
    pub value: f64,
    /// Printed decimal places (for rounding absorption).
    pub decimals: u32,
}

/// Comparison rule for a table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tolerance {
    /// Relative limit on |computed - published| / |published|.
    Rel(f64),
    /// Absolute limit on |computed - published|.
    Abs(f64),
    /// Relative limit or absolute floor, whichever admits more.
    RelOrAbs(f64, f64),
}

impl Tolerance {
    /// The absolute error limit for one cell. Relative limits are widened
    /// by half a unit in the last printed place, since the published value
    /// itself is a rounded print of the underlying number.
    pub fn limit(self, reference: f64, decimals: u32) -> f64 {
        let half_ulp = 0.5 * 10f64.powi(-(decimals as i32));
        match self {
            Tolerance::Abs(a) => a,
            Tolerance::Rel(r) => r * reference.abs() + half_ulp,
            Tolerance::RelOrAbs(r, a) => (r * reference.abs() + half_ulp).max(a),
        }
    }

    pub fn admits(self, computed: f64, reference: f64, decimals: u32) -> bool {
        (computed - reference).abs() <= self.limit(reference, decimals)
    }
}

/// The comparison rule for each reference table. The 0.5% default absorbs
/// the sources' printed rounding; value tables checked to 0.2% and the
/// seat/weight/percentage-point tables to absolute limits follow the
/// published precision.
pub fn table_tolerance(table: &str) -> Tolerance {
    match table {
        "table1_revenue" | "s4ai" | "s4bi" | "s4ci" | "s5bi" | "s5biii" | "s5cii" => {
            Tolerance::Rel(0.002)
        }
        "table2" => Tolerance::Abs(0.05),
        "table3" => Tolerance::Abs(0.5),
        "s4bii" | "s4di" | "s4ei" | "s4fi" | "s5ai" | "s5bii" | "s5ci" | "results_elasticity" => {
            Tolerance::Abs(0.1)
        }
        "s4cii" => Tolerance::Abs(0.05),
        "s4biii" | "s4dii" | "s4eii" => Tolerance::RelOrAbs(0.005, 2.0),
        _ => Tolerance::Rel(0.005),
    }
}

const REFERENCE_CSV: &str = include_str!("reference_tables.csv");

static CELLS: OnceLock<Vec<ReferenceCell>> = OnceLock::new();

/// All embedded reference cells, in file order.
pub fn cells() -> &'static [ReferenceCell] {
    CELLS.get_or_init(|| parse(REFERENCE_CSV).expect("embedded reference tables parse"))
}

fn parse(text: &str) -> Result<Vec<ReferenceCell>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut out = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|source| Error::Csv {
            path: "reference_tables.csv".into(),
            source,
        })?;
        let field = |i: usize| record.get(i).unwrap_or("").to_string();
        let parse_err = |field: &str, raw: &str| Error::Parse {
            path: "reference_tables.csv".into(),
            row: record.position().map(|p| p.line()).unwrap_or(0),
            field: field.into(),
            message: format!("invalid number {raw:?}"),
        };
        let value_raw = field(3);
        let decimals_raw = field(4);
        out.push(ReferenceCell {
            table: field(0),
            row: field(1),
            col: field(2),
            value: value_raw
                .parse()
                .map_err(|_| parse_err("value", &value_raw))?,
            decimals: decimals_raw
                .parse()
                .map_err(|_| parse_err("decimals", &decimals_raw))?,
        });
    }
    Ok(out)
}
