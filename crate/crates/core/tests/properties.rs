//! Property tests for the structural invariants: conservation,
//! homogeneity, partition-of-unity, exact accounting, and regression
//! recovery on synthetic lines.

use cabinlab_core::cabin::{
    all_economy_configuration, baseline_configuration, configuration_weights, derive_seat_count,
    floor_proportions, CompositeAircraft,
};
use cabinlab_core::emissions::{
    derive_emissions_model, emissions_per_flight, fit_linear, RegressionFit,
};
use cabinlab_core::finance::revenue_neutral_price;
use cabinlab_core::ingest::{EmissionsSampleRecord, ModelConstants};
use cabinlab_core::types::{Body, ClassMap, Haul, Usd};
use proptest::prelude::*;

fn composite(floors: [f64; 3], per_seat: [f64; 3], service: f64) -> CompositeAircraft {
    let class_floor_area = ClassMap {
        economy: floors[0],
        premium_economy: floors[1],
        business: floors[2],
    };
    CompositeAircraft {
        aircraft: "X".into(),
        body: Body::Narrow,
        total_floor_area: class_floor_area.sum() + service,
        class_floor_area,
        class_area_per_seat: ClassMap {
            economy: per_seat[0],
            premium_economy: per_seat[1],
            business: per_seat[2],
        },
        service_floor_area: service,
        service_area_per_seat: 1.0,
        max_cycles: 1000.0,
        max_hours: 1000.0,
        exit_limit: None,
    }
}

fn floors() -> impl Strategy<Value = [f64; 3]> {
    [100.0..8000.0, 0.1..2000.0, 0.1..3000.0]
}

fn per_seats() -> impl Strategy<Value = [f64; 3]> {
    [10.0..25.0, 18.0..40.0, 30.0..90.0]
}

proptest! {
    /// Scaling every area by the same factor leaves seat counts unchanged.
    #[test]
    fn seat_derivation_is_homogeneous(
        floor in 10.0..5000.0f64,
        total in 1000.0..20000.0f64,
        per_seat in 5.0..100.0f64,
        scale in 0.01..100.0f64,
    ) {
        prop_assume!(floor < total);
        let base = derive_seat_count(floor / total, total, per_seat).unwrap();
        let scaled = derive_seat_count(
            (floor * scale) / (total * scale),
            total * scale,
            per_seat * scale,
        )
        .unwrap();
        prop_assert!((base - scaled).abs() <= 1e-9 * base.abs());
    }

    /// Passenger + service floor area is conserved by the all-economy
    /// transform, and the proportions of any configuration sum to one.
    #[test]
    fn floor_area_is_conserved(
        floors in floors(),
        per_seat in per_seats(),
        service in 100.0..6000.0f64,
    ) {
        let c = composite(floors, per_seat, service);
        let base = baseline_configuration(&c).unwrap();
        let ae = all_economy_configuration(&c).unwrap();
        prop_assert!((base.total_floor_area() - c.total_floor_area).abs()
            <= 1e-9 * c.total_floor_area);
        prop_assert!((ae.total_floor_area() - c.total_floor_area).abs()
            <= 1e-9 * c.total_floor_area);
        for cfg in [&base, &ae] {
            let p = floor_proportions(cfg);
            prop_assert!((p.classes.sum() + p.service - 1.0).abs() <= 1e-9);
        }
    }

    /// When premium classes use at least as much space per seat as
    /// economy, the all-economy refit never loses seats.
    #[test]
    fn all_economy_never_loses_seats(
        floors in floors(),
        per_seat in per_seats(),
        service in 100.0..6000.0f64,
    ) {
        let c = composite(floors, per_seat, service);
        prop_assume!(per_seat[1] >= per_seat[0] && per_seat[2] >= per_seat[0]);
        let base = baseline_configuration(&c).unwrap();
        let ae = all_economy_configuration(&c).unwrap();
        prop_assert!(ae.seats.economy >= base.total_seats() - 1e-9);
    }

    /// OLS recovers a synthetic exact line to machine precision, and with
    /// three equally spaced abscissae the slope equals the endpoint slope.
    #[test]
    fn regression_recovers_synthetic_lines(
        intercept in 100.0..200000.0f64,
        slope in 0.01..100.0f64,
        step in 1u32..200,
    ) {
        let samples: Vec<EmissionsSampleRecord> = [0, step, 2 * step]
            .iter()
            .map(|&p| EmissionsSampleRecord {
                aircraft: "X".into(),
                haul: Haul::Short,
                passengers: p,
                emissions: intercept + slope * p as f64,
            })
            .collect();
        let fit: RegressionFit = fit_linear(&samples.iter().collect::<Vec<_>>()).unwrap();
        prop_assert!((fit.slope - slope).abs() <= 1e-9 * slope);
        prop_assert!((fit.intercept - intercept).abs() <= 1e-9 * intercept);
        let endpoint = (samples[2].emissions - samples[0].emissions) / (2 * step) as f64;
        prop_assert!((fit.slope - endpoint).abs() <= 1e-12 * endpoint.abs());
    }

    /// total = empty + seating + pax holds exactly for arbitrary
    /// configurations and load factors, and variable = total - empty.
    #[test]
    fn accounting_identity_is_exact(
        floors in floors(),
        per_seat in per_seats(),
        service in 100.0..6000.0f64,
        load_factor in 0.0..=1.0f64,
        slope in 1.0..80.0f64,
        empty_level in 5000.0..120000.0f64,
    ) {
        let k = ModelConstants::default();
        let c = composite(floors, per_seat, service);
        let base = baseline_configuration(&c).unwrap();
        let samples: Vec<EmissionsSampleRecord> = [(0u32, empty_level), (100, empty_level + 100.0 * slope)]
            .iter()
            .map(|&(p, e)| EmissionsSampleRecord {
                aircraft: "X".into(),
                haul: Haul::Short,
                passengers: p,
                emissions: e,
            })
            .collect();
        let fit = fit_linear(&samples.iter().collect::<Vec<_>>()).unwrap();
        prop_assume!(fit.intercept > base.seats.sum() * 140.0 * fit.slope / 75.0);
        let model = derive_emissions_model(&fit, &base, &k).unwrap();
        for cfg in [&base, &all_economy_configuration(&c).unwrap()] {
            let b = emissions_per_flight(cfg, &model, &k, load_factor).unwrap();
            prop_assert_eq!(b.total, b.empty + b.seating.sum() + b.pax.sum());
            prop_assert_eq!(b.variable, b.total - b.empty);
            // Doubling seats doubles total - empty (linearity in weight).
            let mut doubled = cfg.clone();
            doubled.seats = doubled.seats.map(|_, &n| n * 2.0);
            let b2 = emissions_per_flight(&doubled, &model, &k, load_factor).unwrap();
            prop_assert!((b2.variable - 2.0 * b.variable).abs() <= 1e-9 * b.variable.max(1.0));
        }
    }

    /// Repricing is homogeneous in money: scaling revenue and fare by the
    /// same factor scales the new price and leaves the relative delta
    /// unchanged, and the neutrality identity always holds.
    #[test]
    fn repricing_is_homogeneous_and_neutral(
        revenue in 1000.0..500000.0f64,
        seats in 50.0..500.0f64,
        fare in 50.0..3000.0f64,
        scale in 0.1..50.0f64,
    ) {
        let r = revenue_neutral_price(revenue, seats, fare).unwrap();
        prop_assert!((r.new_price * seats - revenue).abs() <= 1e-9 * revenue);
        let scaled = revenue_neutral_price(revenue * scale, seats, fare * scale).unwrap();
        prop_assert!((scaled.new_price - r.new_price * scale).abs()
            <= 1e-9 * scaled.new_price.abs());
        prop_assert!((scaled.delta_rel - r.delta_rel).abs() <= 1e-9);
    }

    /// Weights scale linearly with seats and are class-consistent.
    #[test]
    fn weights_are_linear_in_seats(
        floors in floors(),
        per_seat in per_seats(),
        service in 100.0..6000.0f64,
    ) {
        let k = ModelConstants::default();
        let c = composite(floors, per_seat, service);
        let cfg = baseline_configuration(&c).unwrap();
        let w = configuration_weights(&cfg, &k);
        prop_assert_eq!(w.seat_weight.business, cfg.seats.business * 140.0);
        prop_assert_eq!(w.pax_weight.economy, cfg.seats.economy * 75.0);
        prop_assert!((w.total_pax_weight - cfg.total_seats() * 75.0).abs()
            <= 1e-9 * w.total_pax_weight.max(1.0));
    }

    /// Exact-decimal USD amounts survive a display/parse round trip.
    #[test]
    fn usd_round_trips(cents in -1_000_000_000i64..1_000_000_000) {
        let usd = Usd::from_cents(cents);
        prop_assert_eq!(Usd::parse(&usd.to_string()).unwrap(), usd);
    }
}
