//! Emissions calibration and evaluation.
//!
//! Per (aircraft, haul) the model fits emissions-per-flight against
//! passenger count by ordinary least squares. The slope divided by the
//! standard passenger+luggage weight gives the emissions factor (kg CO2 per
//! kg of added weight); the intercept minus the baseline configuration's
//! seat emissions gives the empty-aircraft emissions. Per-flight emissions
//! for any configuration are then empty + seating + passenger terms, and
//! lifetime figures multiply by the airframe's maximum flight count.
//!
//! Load factor scales passenger weight only; seats fly regardless of
//! occupancy.

use crate::cabin::{floor_proportions, CabinConfiguration};
use crate::ingest::{AircraftSpecRecord, EmissionsSampleRecord, ModelConstants};
use crate::types::{AllocationStrategy, CabinClass, ClassMap, Haul};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Ordinary least-squares fit of emissions against passengers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegressionFit {
    pub aircraft: String,
    pub haul: Haul,
    /// kg CO2 for a zero-passenger flight in the sampled configuration.
    pub intercept: f64,
    /// kg CO2 per additional passenger.
    pub slope: f64,
    pub residuals: Vec<f64>,
    pub r_squared: f64,
}

/// Calibrated emissions model for one (aircraft, haul).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmissionsModel {
    pub aircraft: String,
    pub haul: Haul,
    /// kg CO2 per kg of onboard weight: slope / (pax + luggage weight).
    pub emissions_factor: f64,
    /// Fixed kg CO2 of flying the bare airframe: intercept stripped of the
    /// reference configuration's seat emissions.
    pub empty_aircraft_emissions: f64,
    pub source_fit: RegressionFit,
    pub reference_config: CabinConfiguration,
}

/// Per-flight emissions split into fixed and weight-driven parts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmissionsBreakdown {
    pub empty: f64,
    pub seating: ClassMap<f64>,
    pub pax: ClassMap<f64>,
    pub total: f64,
    /// total - empty: the part attributable to seats, passengers, luggage.
    pub variable: f64,
    pub load_factor: f64,
}

/// Per-passenger emissions per class; `None` for classes absent from the
/// configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PerPassengerEmissions {
    pub per_class: ClassMap<Option<f64>>,
    pub strategy: AllocationStrategy,
}

/// Fit a line to one (aircraft, haul) sample group.
///
/// For three equally spaced abscissae the OLS slope equals the endpoint
/// slope (y3 - y1) / (x3 - x1).
pub fn fit_linear(samples: &[&EmissionsSampleRecord]) -> Result<RegressionFit> {
    let first = samples.first().ok_or_else(|| {
        Error::InvalidModel("cannot fit a regression to an empty sample group".into())
    })?;
    if let Some(s) = samples
        .iter()
        .find(|s| s.aircraft != first.aircraft || s.haul != first.haul)
    {
        return Err(Error::InvalidModel(format!(
            "mixed sample group: {} {} and {} {}",
            first.aircraft, first.haul, s.aircraft, s.haul
        )));
    }
    let n = samples.len() as f64;
    let xs: Vec<f64> = samples.iter().map(|s| s.passengers as f64).collect();
    let ys: Vec<f64> = samples.iter().map(|s| s.emissions).collect();
    let x_mean = xs.iter().sum::<f64>() / n;
    let y_mean = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - x_mean).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::DegenerateRegression {
            aircraft: first.aircraft.clone(),
            haul: first.haul,
        });
    }
    let sxy: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (x - x_mean) * (y - y_mean))
        .sum();
    let slope = sxy / sxx;
    let intercept = y_mean - slope * x_mean;
    let residuals: Vec<f64> = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| y - (intercept + slope * x))
        .collect();
    let ss_res: f64 = residuals.iter().map(|r| r * r).sum();
    let ss_tot: f64 = ys.iter().map(|y| (y - y_mean).powi(2)).sum();
    let r_squared = if ss_tot == 0.0 {
        1.0
    } else {
        1.0 - ss_res / ss_tot
    };
    Ok(RegressionFit {
        aircraft: first.aircraft.clone(),
        haul: first.haul,
        intercept,
        slope,
        residuals,
        r_squared,
    })
}

/// Derive the emissions factor and empty-aircraft emissions from a fit and
/// the baseline configuration the sampled flights were flown with.
pub fn derive_emissions_model(
    fit: &RegressionFit,
    baseline: &CabinConfiguration,
    k: &ModelConstants,
) -> Result<EmissionsModel> {
    if baseline.aircraft != fit.aircraft {
        return Err(Error::InvalidModel(format!(
            "fit for {} paired with configuration for {}",
            fit.aircraft, baseline.aircraft
        )));
    }
    let emissions_factor = fit.slope / k.pax_weight();
    if emissions_factor <= 0.0 {
        return Err(Error::InvalidModel(format!(
            "{} {}: non-positive emissions factor {emissions_factor}",
            fit.aircraft, fit.haul
        )));
    }
    let seat_emissions: f64 = baseline
        .seats
        .map(|c, &n| n * k.seat_weights.get(c) * emissions_factor)
        .sum();
    let empty_aircraft_emissions = fit.intercept - seat_emissions;
    if empty_aircraft_emissions <= 0.0 {
        return Err(Error::InvalidModel(format!(
            "{} {}: non-positive empty-aircraft emissions {empty_aircraft_emissions}",
            fit.aircraft, fit.haul
        )));
    }
    Ok(EmissionsModel {
        aircraft: fit.aircraft.clone(),
        haul: fit.haul,
        emissions_factor,
        empty_aircraft_emissions,
        source_fit: fit.clone(),
        reference_config: baseline.clone(),
    })
}

/// Seat emissions per class: seats x unit seat weight x emissions factor.
pub fn seating_emissions(
    cfg: &CabinConfiguration,
    model: &EmissionsModel,
    k: &ModelConstants,
) -> ClassMap<f64> {
    cfg.seats
        .map(|c, &n| n * k.seat_weights.get(c) * model.emissions_factor)
}

/// Passenger emissions per class: seats x pax weight x factor, scaled by
/// the load factor (seats are unaffected by occupancy). The load factor
/// multiplies last so halving it halves the result exactly.
pub fn pax_emissions(
    cfg: &CabinConfiguration,
    model: &EmissionsModel,
    k: &ModelConstants,
    load_factor: f64,
) -> Result<ClassMap<f64>> {
    if !(0.0..=1.0).contains(&load_factor) {
        return Err(Error::LoadFactor(load_factor));
    }
    Ok(cfg
        .seats
        .map(|_, &n| (n * k.pax_weight() * model.emissions_factor) * load_factor))
}

/// Aggregate per-flight emissions: empty + seating + passengers.
pub fn emissions_per_flight(
    cfg: &CabinConfiguration,
    model: &EmissionsModel,
    k: &ModelConstants,
    load_factor: f64,
) -> Result<EmissionsBreakdown> {
    let seating = seating_emissions(cfg, model, k);
    let pax = pax_emissions(cfg, model, k, load_factor)?;
    let empty = model.empty_aircraft_emissions;
    let total = empty + seating.sum() + pax.sum();
    Ok(EmissionsBreakdown {
        empty,
        seating,
        pax,
        total,
        variable: total - empty,
        load_factor,
    })
}

/// Per-passenger emissions: the class's own floor share plus a share of the
/// service zones, both over the per-flight total.
///
/// With `AsWritten` the service term is spread over all seats; the
/// diagnostic `ServiceToClassSeats` alternate divides it by the class's own
/// seats. In a single-class configuration both collapse to total / seats.
pub fn emissions_per_passenger(
    cfg: &CabinConfiguration,
    breakdown: &EmissionsBreakdown,
    strategy: AllocationStrategy,
) -> Result<PerPassengerEmissions> {
    let proportions = floor_proportions(cfg);
    let total_seats = cfg.total_seats();
    let mut per_class: ClassMap<Option<f64>> = ClassMap::default();
    for class in CabinClass::ALL {
        let seats = *cfg.seats.get(class);
        let floor = *cfg.class_floor_area.get(class);
        if seats == 0.0 && floor == 0.0 {
            continue;
        }
        if seats == 0.0 {
            return Err(Error::ZeroSeatClass { class });
        }
        let service_denominator = match strategy {
            AllocationStrategy::AsWritten => total_seats,
            AllocationStrategy::ServiceToClassSeats => seats,
        };
        let value = breakdown.total * proportions.classes.get(class) / seats
            + breakdown.total * proportions.service / service_denominator;
        *per_class.get_mut(class) = Some(value);
    }
    Ok(PerPassengerEmissions {
        per_class,
        strategy,
    })
}

/// Maximum lifetime flights: min(cycle limit, hour limit / block hours).
/// Fractional; never floored.
pub fn max_flights(spec: &AircraftSpecRecord, haul: Haul, k: &ModelConstants) -> f64 {
    let by_hours = spec.max_hours / k.block_hours.get(haul);
    spec.max_cycles.min(by_hours)
}

/// Lifetime emissions: per-flight value x flight count. Also applies to
/// variable-only emissions.
pub fn lifetime_emissions(per_flight: f64, flights: f64) -> f64 {
    per_flight * flights
}
