//! Body-class result tables, deterministic export, and reconciliation of
//! computed values against the embedded published reference tables.

pub mod errata;
pub mod export;
pub mod reconcile;
pub mod reference;

use crate::types::{Body, Haul, BASELINE};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// The metrics reported at body-class level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MetricKind {
    EmissionsPerPax,
    EmissionsPerFlight,
    LifetimeEmissions,
    VariableEmissions,
    RevenuePerFlight,
    LifetimeRevenue,
    TicketPrice,
}

impl MetricKind {
    pub const ALL: [MetricKind; 7] = [
        MetricKind::EmissionsPerPax,
        MetricKind::EmissionsPerFlight,
        MetricKind::LifetimeEmissions,
        MetricKind::VariableEmissions,
        MetricKind::RevenuePerFlight,
        MetricKind::LifetimeRevenue,
        MetricKind::TicketPrice,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MetricKind::EmissionsPerPax => "emissions_per_pax",
            MetricKind::EmissionsPerFlight => "emissions_per_flight",
            MetricKind::LifetimeEmissions => "lifetime_emissions",
            MetricKind::VariableEmissions => "variable_emissions",
            MetricKind::RevenuePerFlight => "revenue_per_flight",
            MetricKind::LifetimeRevenue => "lifetime_revenue",
            MetricKind::TicketPrice => "ticket_price",
        }
    }

    /// Column label for the value field in exports.
    pub fn units(self) -> &'static str {
        match self {
            MetricKind::EmissionsPerPax => "kg_co2_per_pax",
            MetricKind::EmissionsPerFlight
            | MetricKind::LifetimeEmissions
            | MetricKind::VariableEmissions => "kg_co2",
            MetricKind::RevenuePerFlight
            | MetricKind::LifetimeRevenue
            | MetricKind::TicketPrice => "usd",
        }
    }
}

impl std::fmt::Display for MetricKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One metric's body-class values per (body, haul, scenario).
#[derive(Debug, Clone, PartialEq)]
pub struct MetricTable {
    pub metric: MetricKind,
    pub units: String,
    pub rows: BTreeMap<(Body, Haul, String), f64>,
}

impl MetricTable {
    pub fn get(&self, body: Body, haul: Haul, scenario: &str) -> Result<f64> {
        self.rows
            .get(&(body, haul, scenario.to_string()))
            .copied()
            .ok_or_else(|| {
                Error::MissingResult(format!(
                    "{}: no row for {body} {haul} {scenario:?}",
                    self.metric
                ))
            })
    }

    /// Rows in deterministic export order: body, then haul, with baseline
    /// ahead of the other scenarios (alphabetical among those).
    pub fn ordered_rows(&self) -> Vec<(&Body, &Haul, &str, f64)> {
        let mut rows: Vec<_> = self
            .rows
            .iter()
            .map(|((b, h, s), v)| (b, h, s.as_str(), *v))
            .collect();
        rows.sort_by_key(|(b, h, s, _)| (**b, **h, *s != BASELINE, s.to_string()));
        rows
    }
}

/// Absolute and relative change of one metric from baseline to another
/// scenario, per (body, haul).
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaTable {
    pub metric: MetricKind,
    pub scenario: String,
    pub rows: BTreeMap<(Body, Haul), DeltaCell>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeltaCell {
    pub absolute: f64,
    /// Fraction of the baseline value.
    pub relative: f64,
}

/// Average per-aircraft computed results into body-class cells.
///
/// The mean is over results, never over inputs: each aircraft's metric is
/// computed first and the body cell is the unweighted mean. Every aircraft
/// of a body class must have a value for every (haul, scenario) present.
pub fn aggregate_body_class(
    metric: MetricKind,
    per_aircraft: &BTreeMap<(String, Haul, String), f64>,
    body_map: &BTreeMap<String, Body>,
) -> Result<MetricTable> {
    let mut cells: BTreeMap<(Haul, String), ()> = BTreeMap::new();
    for (_, haul, scenario) in per_aircraft.keys() {
        cells.insert((*haul, scenario.clone()), ());
    }
    let mut rows = BTreeMap::new();
    for body in Body::ALL {
        let members: Vec<&String> = body_map
            .iter()
            .filter(|(_, b)| **b == body)
            .map(|(name, _)| name)
            .collect();
        if members.is_empty() {
            continue;
        }
        for (haul, scenario) in cells.keys() {
            let mut sum = 0.0;
            for name in &members {
                let v = per_aircraft
                    .get(&((*name).clone(), *haul, scenario.clone()))
                    .ok_or_else(|| {
                        Error::MissingResult(format!(
                            "{metric}: missing {name} {haul} {scenario:?} for body {body}"
                        ))
                    })?;
                sum += v;
            }
            rows.insert((body, *haul, scenario.clone()), sum / members.len() as f64);
        }
    }
    Ok(MetricTable {
        metric,
        units: metric.units().to_string(),
        rows,
    })
}

/// Scenario change table: absolute = scenario - baseline, relative =
/// absolute / baseline.
pub fn delta_table(table: &MetricTable, scenario: &str) -> Result<DeltaTable> {
    let mut rows = BTreeMap::new();
    for ((body, haul, s), &value) in &table.rows {
        if s != BASELINE {
            continue;
        }
        let revised = table.get(*body, *haul, scenario)?;
        if value == 0.0 {
            return Err(Error::InvalidModel(format!(
                "{}: zero baseline for {body} {haul}, relative change undefined",
                table.metric
            )));
        }
        let absolute = revised - value;
        rows.insert(
            (*body, *haul),
            DeltaCell {
                absolute,
                relative: absolute / value,
            },
        );
    }
    if rows.is_empty() {
        return Err(Error::MissingResult(format!(
            "{}: no baseline rows to diff against {scenario:?}",
            table.metric
        )));
    }
    Ok(DeltaTable {
        metric: table.metric,
        scenario: scenario.to_string(),
        rows,
    })
}
