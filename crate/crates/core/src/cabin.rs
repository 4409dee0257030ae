//! Composite aircraft and scenario cabin configurations.
//!
//! A composite aircraft averages the cabin space allocation of every
//! airline operating a type: class floor areas are arithmetic means over
//! all airlines (zero-area classes included as zeros), while per-seat areas
//! average only over airlines that actually offer the class. Seat counts
//! derive from floor space and stay fractional throughout; rounding happens
//! only at presentation.
//!
//! All transforms are pure and freely parallelizable across aircraft and
//! scenarios.

use crate::ingest::{AircraftSpecRecord, AirlineLayoutRecord, ModelConstants};
use crate::types::{CabinClass, ClassMap, Zone, ALL_ECONOMY, BASELINE};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Per-aircraft-type averaged spatial model plus lifespan limits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompositeAircraft {
    pub aircraft: String,
    pub body: crate::types::Body,
    /// Mean floor area per passenger class, sq ft (zeros included).
    pub class_floor_area: ClassMap<f64>,
    /// Mean area per seat, sq ft; 0 for a class no airline offers.
    pub class_area_per_seat: ClassMap<f64>,
    pub service_floor_area: f64,
    /// Mean of service floor over total seats across airlines; reporting
    /// only, the model never divides by it.
    pub service_area_per_seat: f64,
    pub total_floor_area: f64,
    pub max_cycles: f64,
    pub max_hours: f64,
    pub exit_limit: Option<f64>,
}

impl CompositeAircraft {
    pub fn passenger_floor_area(&self) -> f64 {
        self.class_floor_area.sum()
    }
}

/// A scenario's seat counts and floor allocation for one aircraft.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CabinConfiguration {
    pub aircraft: String,
    pub scenario: String,
    pub seats: ClassMap<f64>,
    pub class_floor_area: ClassMap<f64>,
    pub service_floor_area: f64,
}

impl CabinConfiguration {
    pub fn total_seats(&self) -> f64 {
        self.seats.sum()
    }

    pub fn total_floor_area(&self) -> f64 {
        self.class_floor_area.sum() + self.service_floor_area
    }
}

/// Seat and passenger weights for one configuration at 100% load factor.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigurationWeights {
    pub seat_count: ClassMap<f64>,
    /// Seat count x per-class seat unit weight, kg.
    pub seat_weight: ClassMap<f64>,
    /// Seat count x (passenger + luggage) weight, kg.
    pub pax_weight: ClassMap<f64>,
    pub total_seat_count: f64,
    pub total_seat_weight: f64,
    pub total_pax_weight: f64,
}

/// Share of total floor area per zone; sums to 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FloorProportions {
    pub classes: ClassMap<f64>,
    pub service: f64,
}

/// Seats from a floor-space share: `share x total_floor / area_per_seat`.
/// Algebraically the class floor area over its per-seat area.
pub fn derive_seat_count(floor_share: f64, total_floor: f64, area_per_seat: f64) -> Result<f64> {
    if area_per_seat <= 0.0 {
        return Err(Error::NonPositiveAreaPerSeat(area_per_seat));
    }
    Ok(floor_share * total_floor / area_per_seat)
}

/// Average one aircraft type's airline layouts into a composite.
pub fn build_composite(
    layouts: &[&AirlineLayoutRecord],
    spec: &AircraftSpecRecord,
) -> Result<CompositeAircraft> {
    if layouts.is_empty() {
        return Err(Error::Layout(format!(
            "no layouts for aircraft {:?}",
            spec.aircraft
        )));
    }
    if let Some(l) = layouts.iter().find(|l| l.aircraft != spec.aircraft) {
        return Err(Error::Layout(format!(
            "layout for {:?} mixed into composite for {:?}",
            l.aircraft, spec.aircraft
        )));
    }

    let mut airlines: BTreeMap<&str, Vec<&AirlineLayoutRecord>> = BTreeMap::new();
    for l in layouts {
        airlines.entry(l.airline.as_str()).or_default().push(l);
    }
    let n = airlines.len() as f64;

    let mut floor_sum: ClassMap<f64> = ClassMap::default();
    let mut per_seat_sum: ClassMap<f64> = ClassMap::default();
    let mut per_seat_n: ClassMap<f64> = ClassMap::default();
    let mut service_sum = 0.0;
    let mut service_per_seat_sum = 0.0;

    for rows in airlines.values() {
        let mut airline_seats = 0.0;
        let mut service_floor = 0.0;
        for r in rows {
            match r.zone {
                Zone::Cabin(class) => {
                    *floor_sum.get_mut(class) += r.floor_area;
                    if r.floor_area > 0.0 {
                        let aps = r.area_per_seat.ok_or_else(|| {
                            Error::Layout(format!(
                                "{} {}: {} row lacks a per-seat area",
                                r.airline, r.aircraft, class
                            ))
                        })?;
                        *per_seat_sum.get_mut(class) += aps;
                        *per_seat_n.get_mut(class) += 1.0;
                        airline_seats += r.floor_area / aps;
                    }
                }
                Zone::ServiceZone => service_floor = r.floor_area,
            }
        }
        service_sum += service_floor;
        if airline_seats > 0.0 {
            service_per_seat_sum += service_floor / airline_seats;
        }
    }

    let class_floor_area = floor_sum.map(|_, v| v / n);
    let class_area_per_seat = ClassMap::from_fn(|c| {
        let count = *per_seat_n.get(c);
        if count > 0.0 {
            per_seat_sum.get(c) / count
        } else {
            0.0
        }
    });
    let service_floor_area = service_sum / n;
    let total_floor_area = class_floor_area.sum() + service_floor_area;

    Ok(CompositeAircraft {
        aircraft: spec.aircraft.clone(),
        body: spec.body,
        class_floor_area,
        class_area_per_seat,
        service_floor_area,
        service_area_per_seat: service_per_seat_sum / n,
        total_floor_area,
        max_cycles: spec.max_cycles,
        max_hours: spec.max_hours,
        exit_limit: spec.exit_limit,
    })
}

fn seats_for_floor(composite: &CompositeAircraft, class: CabinClass, floor: f64) -> Result<f64> {
    if floor == 0.0 {
        return Ok(0.0);
    }
    let per_seat = *composite.class_area_per_seat.get(class);
    derive_seat_count(
        floor / composite.total_floor_area,
        composite.total_floor_area,
        per_seat,
    )
}

/// The default 3-class layout: every class keeps its averaged floor area.
pub fn baseline_configuration(composite: &CompositeAircraft) -> Result<CabinConfiguration> {
    let seats =
        ClassMap::from_fn(|c| seats_for_floor(composite, c, *composite.class_floor_area.get(c)));
    Ok(CabinConfiguration {
        aircraft: composite.aircraft.clone(),
        scenario: BASELINE.to_string(),
        seats: ClassMap {
            economy: seats.economy?,
            premium_economy: seats.premium_economy?,
            business: seats.business?,
        },
        class_floor_area: composite.class_floor_area,
        service_floor_area: composite.service_floor_area,
    })
}

/// All passenger floor area reassigned to economy at the economy per-seat
/// area; service area unchanged.
pub fn all_economy_configuration(composite: &CompositeAircraft) -> Result<CabinConfiguration> {
    let economy_floor = composite.passenger_floor_area();
    let economy_seats = seats_for_floor(composite, CabinClass::Economy, economy_floor)?;
    Ok(CabinConfiguration {
        aircraft: composite.aircraft.clone(),
        scenario: ALL_ECONOMY.to_string(),
        seats: ClassMap {
            economy: economy_seats,
            premium_economy: 0.0,
            business: 0.0,
        },
        class_floor_area: ClassMap {
            economy: economy_floor,
            premium_economy: 0.0,
            business: 0.0,
        },
        service_floor_area: composite.service_floor_area,
    })
}

/// An arbitrary per-class floor reallocation. Classes missing from
/// `floor_overrides` keep their baseline area; the reallocation must
/// conserve total passenger floor area to 1e-9 relative.
pub fn custom_configuration(
    composite: &CompositeAircraft,
    name: &str,
    floor_overrides: &BTreeMap<CabinClass, f64>,
) -> Result<CabinConfiguration> {
    let class_floor_area = ClassMap::from_fn(|c| {
        floor_overrides
            .get(&c)
            .copied()
            .unwrap_or(*composite.class_floor_area.get(c))
    });
    let want = composite.passenger_floor_area();
    let got = class_floor_area.sum();
    if (got - want).abs() > 1e-9 * want.abs() {
        return Err(Error::Conservation {
            scenario: name.to_string(),
            detail: format!(
                "{}: passenger floor {got} sq ft, composite has {want} sq ft",
                composite.aircraft
            ),
        });
    }
    for (c, &floor) in class_floor_area.iter() {
        if floor < 0.0 {
            return Err(Error::Conservation {
                scenario: name.to_string(),
                detail: format!("{}: negative floor area for {c}", composite.aircraft),
            });
        }
        if floor > 0.0 && *composite.class_area_per_seat.get(c) <= 0.0 {
            return Err(Error::Conservation {
                scenario: name.to_string(),
                detail: format!("{}: no per-seat area known for {c}", composite.aircraft),
            });
        }
    }
    let seats = ClassMap {
        economy: seats_for_floor(composite, CabinClass::Economy, class_floor_area.economy)?,
        premium_economy: seats_for_floor(
            composite,
            CabinClass::PremiumEconomy,
            class_floor_area.premium_economy,
        )?,
        business: seats_for_floor(composite, CabinClass::Business, class_floor_area.business)?,
    };
    Ok(CabinConfiguration {
        aircraft: composite.aircraft.clone(),
        scenario: name.to_string(),
        seats,
        class_floor_area,
        service_floor_area: composite.service_floor_area,
    })
}

/// Per-class and total seat and passenger+luggage weights at 100% load.
pub fn configuration_weights(cfg: &CabinConfiguration, k: &ModelConstants) -> ConfigurationWeights {
    let seat_weight = cfg.seats.map(|c, &n| n * k.seat_weights.get(c));
    let pax_weight = cfg.seats.map(|_, &n| n * k.pax_weight());
    ConfigurationWeights {
        seat_count: cfg.seats,
        total_seat_count: cfg.seats.sum(),
        total_seat_weight: seat_weight.sum(),
        total_pax_weight: pax_weight.sum(),
        seat_weight,
        pax_weight,
    }
}

/// Floor-area shares from unrounded areas; they sum to 1 within 1e-9.
pub fn floor_proportions(cfg: &CabinConfiguration) -> FloorProportions {
    let total = cfg.total_floor_area();
    FloorProportions {
        classes: cfg.class_floor_area.map(|_, &a| a / total),
        service: cfg.service_floor_area / total,
    }
}
