//! Fares, revenue, revenue-neutral repricing, and demand response.
//!
//! Fares are haul- and class-specific but aircraft-agnostic; the summary is
//! an unweighted mean over airlines, routes and observation windows.
//! Revenue is seats x ticket price per class; repricing solves the economy
//! fare that keeps an all-economy configuration's per-flight revenue equal
//! to the baseline's.

use crate::cabin::CabinConfiguration;
use crate::ingest::FareRecord;
use crate::types::{CabinClass, ClassMap, Haul, HaulMap};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Mean airfare per class for one haul.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FareSummary {
    pub haul: Haul,
    /// Mean price per class; `None` when no record covers the class.
    pub prices: ClassMap<Option<f64>>,
    pub sample_count: usize,
}

impl FareSummary {
    pub fn price(&self, class: CabinClass) -> Result<f64> {
        (*self.prices.get(class)).ok_or(Error::MissingFare {
            haul: self.haul,
            class,
        })
    }
}

/// Revenue for one configuration and haul.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RevenueBreakdown {
    pub per_class: ClassMap<f64>,
    pub total: f64,
    /// total x maximum lifetime flights.
    pub lifetime: f64,
}

/// Revenue-neutral economy repricing result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepriceResult {
    pub new_price: f64,
    /// Change against the haul's mean economy fare, USD.
    pub delta_abs: f64,
    /// Change as a fraction of the haul's mean economy fare.
    pub delta_rel: f64,
}

/// Unweighted mean fares per haul and class.
///
/// Errors if a haul present in the records lacks any class, or if a haul
/// has no records at all.
pub fn summarize_fares(fares: &[FareRecord]) -> Result<HaulMap<FareSummary>> {
    let mut sums: HaulMap<ClassMap<(f64, usize)>> = HaulMap::default();
    let mut counts: HaulMap<usize> = HaulMap::default();
    for f in fares {
        let cell = sums.get_mut(f.haul).get_mut(f.class);
        cell.0 += f.price.as_f64();
        cell.1 += 1;
        *counts.get_mut(f.haul) += 1;
    }
    let mut out: HaulMap<FareSummary> = HaulMap::from_fn(|haul| FareSummary {
        haul,
        prices: ClassMap::default(),
        sample_count: *counts.get(haul),
    });
    for haul in Haul::ALL {
        for class in CabinClass::ALL {
            let (sum, n) = *sums.get(haul).get(class);
            if n == 0 {
                return Err(Error::MissingFare { haul, class });
            }
            *out.get_mut(haul).prices.get_mut(class) = Some(sum / n as f64);
        }
    }
    Ok(out)
}

/// Per-flight revenue: seats x price per class, with lifetime revenue
/// attached via the flight count.
pub fn revenue_per_flight(
    cfg: &CabinConfiguration,
    fares: &FareSummary,
    flights: f64,
) -> Result<RevenueBreakdown> {
    let mut per_class = ClassMap::default();
    for class in CabinClass::ALL {
        let seats = *cfg.seats.get(class);
        if seats == 0.0 {
            continue;
        }
        *per_class.get_mut(class) = seats * fares.price(class)?;
    }
    let total = per_class.sum();
    Ok(RevenueBreakdown {
        per_class,
        total,
        lifetime: total * flights,
    })
}

/// Lifetime revenue: per-flight revenue x maximum lifetime flights.
pub fn lifetime_revenue(revenue_per_flight: f64, flights: f64) -> f64 {
    revenue_per_flight * flights
}

/// The economy fare that keeps total revenue constant after the refit:
/// baseline revenue over the revised seat count, with deltas against the
/// haul's mean economy fare.
pub fn revenue_neutral_price(
    baseline_revenue: f64,
    revised_seats: f64,
    economy_fare: f64,
) -> Result<RepriceResult> {
    if revised_seats <= 0.0 {
        return Err(Error::ZeroRevisedSeats(revised_seats));
    }
    let new_price = baseline_revenue / revised_seats;
    let delta_abs = new_price - economy_fare;
    Ok(RepriceResult {
        new_price,
        delta_abs,
        delta_rel: delta_abs / economy_fare,
    })
}

/// Point-elasticity demand response: dQ% = elasticity x dP%.
pub fn elasticity_response(elasticity: f64, price_change: f64) -> f64 {
    elasticity * price_change
}

/// A price change as a share of a per-trip budget.
pub fn budget_share(delta_price: f64, trip_budget: f64) -> Result<f64> {
    if trip_budget <= 0.0 {
        return Err(Error::NonPositiveBudget(trip_budget));
    }
    Ok(delta_price / trip_budget)
}

/// Each class's mean fare as a multiple of the economy fare.
pub fn class_price_multiples(fares: &FareSummary) -> Result<ClassMap<f64>> {
    let economy = fares.price(CabinClass::Economy)?;
    if economy <= 0.0 {
        return Err(Error::MissingFare {
            haul: fares.haul,
            class: CabinClass::Economy,
        });
    }
    Ok(ClassMap {
        economy: 1.0,
        premium_economy: fares.price(CabinClass::PremiumEconomy)? / economy,
        business: fares.price(CabinClass::Business)? / economy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::Usd;

    fn fare(haul: Haul, class: CabinClass, price: &str) -> FareRecord {
        FareRecord {
            airline: "A".into(),
            route: "X-Y".into(),
            haul,
            class,
            price: Usd::parse(price).unwrap(),
            window: "w".into(),
        }
    }

    fn summary(haul: Haul, economy: f64, premium: f64, business: f64) -> FareSummary {
        FareSummary {
            haul,
            prices: ClassMap {
                economy: Some(economy),
                premium_economy: Some(premium),
                business: Some(business),
            },
            sample_count: 1,
        }
    }

    #[test]
    fn mean_of_one_is_that_record() {
        let records = vec![
            fare(Haul::Short, CabinClass::Economy, "100.00"),
            fare(Haul::Short, CabinClass::PremiumEconomy, "150.00"),
            fare(Haul::Short, CabinClass::Business, "300.00"),
            fare(Haul::Long, CabinClass::Economy, "400.00"),
            fare(Haul::Long, CabinClass::PremiumEconomy, "900.00"),
            fare(Haul::Long, CabinClass::Business, "2000.00"),
        ];
        let s = summarize_fares(&records).unwrap();
        assert_eq!(s.short.price(CabinClass::Economy).unwrap(), 100.0);
        assert_eq!(s.long.price(CabinClass::Business).unwrap(), 2000.0);
        assert_eq!(s.short.sample_count, 3);
    }

    #[test]
    fn missing_class_is_an_error() {
        let records = vec![
            fare(Haul::Short, CabinClass::Economy, "100.00"),
            fare(Haul::Short, CabinClass::Business, "300.00"),
        ];
        let err = summarize_fares(&records).unwrap_err();
        assert!(matches!(err, Error::MissingFare { .. }));
    }

    #[test]
    fn revenue_is_seats_times_price() {
        let cfg = CabinConfiguration {
            aircraft: "X".into(),
            scenario: "baseline".into(),
            seats: ClassMap {
                economy: 100.0,
                premium_economy: 10.0,
                business: 5.0,
            },
            class_floor_area: ClassMap::default(),
            service_floor_area: 1.0,
        };
        let s = summary(Haul::Short, 200.0, 300.0, 600.0);
        let r = revenue_per_flight(&cfg, &s, 1000.0).unwrap();
        assert_eq!(r.per_class.economy, 20000.0);
        assert_eq!(r.total, 20000.0 + 3000.0 + 3000.0);
        assert_eq!(r.lifetime, r.total * 1000.0);
        assert_eq!(lifetime_revenue(r.total, 0.0), 0.0);
    }

    #[test]
    fn zero_seat_configuration_has_zero_revenue_even_without_prices() {
        let cfg = CabinConfiguration {
            aircraft: "X".into(),
            scenario: "empty".into(),
            seats: ClassMap::default(),
            class_floor_area: ClassMap::default(),
            service_floor_area: 1.0,
        };
        let s = FareSummary {
            haul: Haul::Short,
            prices: ClassMap::default(),
            sample_count: 0,
        };
        let r = revenue_per_flight(&cfg, &s, 10.0).unwrap();
        assert_eq!(r.total, 0.0);
    }

    #[test]
    fn missing_price_for_present_class_is_an_error() {
        let cfg = CabinConfiguration {
            aircraft: "X".into(),
            scenario: "baseline".into(),
            seats: ClassMap {
                economy: 100.0,
                premium_economy: 10.0,
                business: 0.0,
            },
            class_floor_area: ClassMap::default(),
            service_floor_area: 1.0,
        };
        let s = FareSummary {
            haul: Haul::Short,
            prices: ClassMap {
                economy: Some(200.0),
                premium_economy: None,
                business: None,
            },
            sample_count: 1,
        };
        let err = revenue_per_flight(&cfg, &s, 1.0).unwrap_err();
        assert!(matches!(
            err,
            Error::MissingFare {
                class: CabinClass::PremiumEconomy,
                ..
            }
        ));
    }

    #[test]
    fn reprice_is_an_exact_quotient() {
        let r = revenue_neutral_price(40000.0, 160.0, 221.02).unwrap();
        assert_eq!(r.new_price, 250.0);
        assert!((r.delta_abs - (250.0 - 221.02)).abs() < 1e-12);
        // Neutrality: repriced revenue recovers the baseline.
        assert!((r.new_price * 160.0 - 40000.0).abs() <= 1e-9 * 40000.0);
        assert!(matches!(
            revenue_neutral_price(1.0, 0.0, 1.0),
            Err(Error::ZeroRevisedSeats(_))
        ));
    }

    #[test]
    fn reprice_of_an_already_all_economy_cabin_is_a_fixed_point() {
        let fare = 221.02;
        let seats = 172.23;
        let r = revenue_neutral_price(fare * seats, seats, fare).unwrap();
        assert!(r.delta_abs.abs() < 1e-9);
        assert!(r.delta_rel.abs() < 1e-12);
    }

    #[test]
    fn elasticity_is_a_point_product() {
        let r = elasticity_response(-1.420, 0.0599);
        assert!((r - -0.085058).abs() < 1e-6);
        assert_eq!(elasticity_response(-2.0, 0.0), 0.0);
        let r = elasticity_response(-0.783, 0.0599);
        assert!((r - -0.0469).abs() < 5e-5);
    }

    #[test]
    fn budget_share_matches_published_examples() {
        // 13.24 / 2,743 is ~0.483% (the source prints 0.481%).
        let s = budget_share(13.24, 2743.0).unwrap();
        assert!((s - 0.00483).abs() < 1e-4);
        // 124.31 / 2,743 is ~4.53% (the source prints 4.52%).
        let s = budget_share(124.31, 2743.0).unwrap();
        assert!((s - 0.0453).abs() < 5e-4);
        assert_eq!(budget_share(0.0, 100.0).unwrap(), 0.0);
        assert!(budget_share(1.0, 0.0).is_err());
    }

    #[test]
    fn class_multiples_divide_by_economy() {
        let s = summary(Haul::Long, 510.80, 1162.53, 2757.49);
        let m = class_price_multiples(&s).unwrap();
        assert_eq!(m.economy, 1.0);
        assert!((m.business - 5.40).abs() < 0.01);
        assert!((m.premium_economy - 2.28).abs() < 0.01);
    }
}
