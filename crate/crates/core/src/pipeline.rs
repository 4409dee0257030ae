//! Full model runs: dataset in, per-aircraft results and body-class tables
//! out.
//!
//! Independent (aircraft, haul, scenario) cells are evaluated in a fixed
//! sorted order, so identical inputs and options always produce identical
//! results.

use crate::cabin::{
    all_economy_configuration, baseline_configuration, build_composite, configuration_weights,
    custom_configuration, CabinConfiguration, CompositeAircraft, ConfigurationWeights,
};
use crate::emissions::{
    derive_emissions_model, emissions_per_flight, emissions_per_passenger, fit_linear,
    lifetime_emissions, max_flights, EmissionsBreakdown, EmissionsModel, PerPassengerEmissions,
    RegressionFit,
};
use crate::finance::{
    lifetime_revenue, revenue_neutral_price, revenue_per_flight, summarize_fares, FareSummary,
    RepriceResult, RevenueBreakdown,
};
use crate::ingest::{Dataset, Finding, Severity};
use crate::report::{aggregate_body_class, delta_table, DeltaTable, MetricKind, MetricTable};
use crate::types::{AllocationStrategy, Body, CabinClass, Haul, HaulMap, ALL_ECONOMY, BASELINE};
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::path::Path;

/// One scenario to evaluate.
#[derive(Debug, Clone, PartialEq)]
pub enum ScenarioSpec {
    Baseline,
    AllEconomy,
    /// Arbitrary per-class floor reallocation. Per aircraft, classes missing
    /// from the override map keep their baseline floor area; aircraft
    /// missing entirely keep the full baseline allocation.
    Custom {
        name: String,
        overrides: BTreeMap<String, BTreeMap<CabinClass, f64>>,
    },
}

impl ScenarioSpec {
    pub fn name(&self) -> &str {
        match self {
            ScenarioSpec::Baseline => BASELINE,
            ScenarioSpec::AllEconomy => ALL_ECONOMY,
            ScenarioSpec::Custom { name, .. } => name,
        }
    }

    /// Parse a `--scenario` argument: a known literal or a TOML file path.
    pub fn parse(arg: &str) -> Result<ScenarioSpec> {
        match arg {
            BASELINE => Ok(ScenarioSpec::Baseline),
            ALL_ECONOMY => Ok(ScenarioSpec::AllEconomy),
            path => ScenarioSpec::from_file(Path::new(path)),
        }
    }

    /// Load a custom scenario definition:
    ///
    /// ```toml
    /// name = "biz_to_econ"
    /// ["A320-200"]
    /// economy = 2924.38
    /// business = 0.0
    /// ```
    pub fn from_file(path: &Path) -> Result<ScenarioSpec> {
        let display = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: display.clone(),
            source,
        })?;
        let value: toml::Table = toml::from_str(&text).map_err(|e| Error::Config {
            path: display.clone(),
            message: e.to_string(),
        })?;
        let name = value
            .get("name")
            .and_then(|v| v.as_str())
            .ok_or_else(|| Error::Config {
                path: display.clone(),
                message: "scenario file needs a string `name`".into(),
            })?
            .to_string();
        if name == BASELINE || name == ALL_ECONOMY {
            return Err(Error::Config {
                path: display,
                message: format!("scenario name {name:?} is reserved"),
            });
        }
        let mut overrides = BTreeMap::new();
        for (key, val) in &value {
            if key == "name" {
                continue;
            }
            let table = val.as_table().ok_or_else(|| Error::Config {
                path: display.clone(),
                message: format!("expected a table of class floor areas under {key:?}"),
            })?;
            let mut per_class = BTreeMap::new();
            for (class_key, area) in table {
                let class = CabinClass::parse(class_key).ok_or_else(|| Error::Config {
                    path: display.clone(),
                    message: format!("unknown class {class_key:?} under {key:?}"),
                })?;
                let area = area.as_float().or(area.as_integer().map(|i| i as f64));
                let area = area.ok_or_else(|| Error::Config {
                    path: display.clone(),
                    message: format!("floor area for {key}.{class_key} must be a number"),
                })?;
                per_class.insert(class, area);
            }
            overrides.insert(key.clone(), per_class);
        }
        Ok(ScenarioSpec::Custom { name, overrides })
    }
}

/// Options for one model run.
#[derive(Debug, Clone)]
pub struct RunOptions {
    pub scenarios: Vec<ScenarioSpec>,
    pub allocation: AllocationStrategy,
    pub load_factor: f64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            scenarios: vec![ScenarioSpec::Baseline, ScenarioSpec::AllEconomy],
            allocation: AllocationStrategy::AsWritten,
            load_factor: 1.0,
        }
    }
}

/// Everything computed for one (aircraft, haul, scenario) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct AircraftCell {
    pub breakdown: EmissionsBreakdown,
    pub per_passenger: PerPassengerEmissions,
    pub lifetime_total: f64,
    pub lifetime_variable: f64,
    pub revenue: Option<RevenueBreakdown>,
}

/// All results for one aircraft type.
#[derive(Debug, Clone)]
pub struct AircraftResults {
    pub composite: CompositeAircraft,
    pub flights: HaulMap<f64>,
    pub fits: HaulMap<RegressionFit>,
    pub models: HaulMap<EmissionsModel>,
    /// Configurations in scenario order, baseline first.
    pub configs: Vec<CabinConfiguration>,
    pub weights: Vec<ConfigurationWeights>,
    pub cells: BTreeMap<(Haul, String), AircraftCell>,
}

impl AircraftResults {
    pub fn config(&self, scenario: &str) -> Result<&CabinConfiguration> {
        self.configs
            .iter()
            .find(|c| c.scenario == scenario)
            .ok_or_else(|| {
                Error::MissingResult(format!(
                    "{}: no configuration for scenario {scenario:?}",
                    self.composite.aircraft
                ))
            })
    }

    pub fn cell(&self, haul: Haul, scenario: &str) -> Result<&AircraftCell> {
        self.cells
            .get(&(haul, scenario.to_string()))
            .ok_or_else(|| {
                Error::MissingResult(format!(
                    "{}: no result for {haul} {scenario:?}",
                    self.composite.aircraft
                ))
            })
    }
}

/// Body-class revenue-neutral repricing for the all-economy refit.
///
/// The published repricing is a body-class figure: the composite body
/// aircraft's baseline revenue over its revised (all-economy) seat count.
/// Per-aircraft reprices are kept alongside for transparency; averaging
/// those prices instead is how one of the published narrow-body cells was
/// evidently produced, and the two aggregations differ by cents.
#[derive(Debug, Clone)]
pub struct BodyReprice {
    pub body: Body,
    pub haul: Haul,
    pub baseline_revenue: f64,
    pub revised_seats: f64,
    pub economy_fare: f64,
    pub result: RepriceResult,
    pub per_aircraft: Vec<(String, RepriceResult)>,
}

/// A complete deterministic model run.
#[derive(Debug, Clone)]
pub struct ModelRun {
    pub dataset: Dataset,
    pub scenarios: Vec<String>,
    pub allocation: AllocationStrategy,
    pub load_factor: f64,
    pub aircraft: BTreeMap<String, AircraftResults>,
    pub fares: Option<HaulMap<FareSummary>>,
    pub reprice: BTreeMap<(Body, Haul), BodyReprice>,
    pub tables: BTreeMap<MetricKind, MetricTable>,
    /// Scenario deltas against baseline, per metric and scenario.
    pub deltas: BTreeMap<(MetricKind, String), DeltaTable>,
    pub warnings: Vec<Finding>,
}

impl ModelRun {
    pub fn body_map(&self) -> BTreeMap<String, Body> {
        self.aircraft
            .iter()
            .map(|(name, r)| (name.clone(), r.composite.body))
            .collect()
    }

    pub fn aircraft_of(&self, body: Body) -> Vec<&AircraftResults> {
        self.aircraft
            .values()
            .filter(|r| r.composite.body == body)
            .collect()
    }

    /// Unweighted mean of a per-aircraft value over a body class.
    pub fn body_mean(
        &self,
        body: Body,
        f: impl Fn(&AircraftResults) -> Result<f64>,
    ) -> Result<f64> {
        let results = self.aircraft_of(body);
        if results.is_empty() {
            return Err(Error::MissingResult(format!("no aircraft in body {body}")));
        }
        let mut sum = 0.0;
        for r in &results {
            sum += f(r)?;
        }
        Ok(sum / results.len() as f64)
    }

    pub fn fares(&self) -> Result<&HaulMap<FareSummary>> {
        self.fares
            .as_ref()
            .ok_or_else(|| Error::MissingResult("no fares in dataset".into()))
    }
}

fn resolve_config(
    spec: &ScenarioSpec,
    composite: &CompositeAircraft,
) -> Result<CabinConfiguration> {
    match spec {
        ScenarioSpec::Baseline => baseline_configuration(composite),
        ScenarioSpec::AllEconomy => all_economy_configuration(composite),
        ScenarioSpec::Custom { name, overrides } => {
            let empty = BTreeMap::new();
            let per_class = overrides.get(&composite.aircraft).unwrap_or(&empty);
            custom_configuration(composite, name, per_class)
        }
    }
}

/// Run the whole model over one dataset.
pub fn run_model(dataset: &Dataset, options: &RunOptions) -> Result<ModelRun> {
    if !(0.0..=1.0).contains(&options.load_factor) {
        return Err(Error::LoadFactor(options.load_factor));
    }

    // Baseline always runs: the emissions model is calibrated against it
    // and every delta is relative to it.
    let mut scenarios: Vec<ScenarioSpec> = vec![ScenarioSpec::Baseline];
    for s in &options.scenarios {
        if !scenarios.iter().any(|e| e.name() == s.name()) {
            scenarios.push(s.clone());
        }
    }
    let scenario_names: Vec<String> = scenarios.iter().map(|s| s.name().to_string()).collect();

    let fares = if dataset.fares.is_empty() {
        None
    } else {
        Some(summarize_fares(&dataset.fares)?)
    };

    let mut warnings = Vec::new();
    let mut aircraft = BTreeMap::new();
    let mut names = dataset.aircraft();
    names.sort();

    for name in names {
        let spec = dataset
            .spec(&name)
            .ok_or_else(|| Error::Referential(format!("no spec for aircraft {name:?}")))?;
        let layouts = dataset.layouts_for(&name);
        let composite = build_composite(&layouts, spec)?;

        let mut configs = Vec::new();
        for s in &scenarios {
            let cfg = resolve_config(s, &composite)?;
            if let Some(limit) = composite.exit_limit {
                if cfg.scenario != BASELINE && cfg.total_seats() > limit {
                    warnings.push(Finding {
                        severity: Severity::Warning,
                        location: format!("{name} {}", cfg.scenario),
                        message: format!(
                            "{:.2} seats exceed the certified exit limit of {limit}",
                            cfg.total_seats()
                        ),
                    });
                }
            }
            configs.push(cfg);
        }
        let weights: Vec<ConfigurationWeights> = configs
            .iter()
            .map(|c| configuration_weights(c, &dataset.constants))
            .collect();
        let baseline = configs[0].clone();

        let flights = HaulMap::from_fn(|h| max_flights(spec, h, &dataset.constants));
        let mut fits: HaulMap<Option<RegressionFit>> = HaulMap::default();
        let mut models: HaulMap<Option<EmissionsModel>> = HaulMap::default();
        for haul in Haul::ALL {
            let group: Vec<_> = dataset
                .samples
                .iter()
                .filter(|s| s.aircraft == name && s.haul == haul)
                .collect();
            if group.is_empty() {
                return Err(Error::MissingResult(format!(
                    "no emissions samples for {name} {haul}"
                )));
            }
            let fit = fit_linear(&group)?;
            let model = derive_emissions_model(&fit, &baseline, &dataset.constants)?;
            *fits.get_mut(haul) = Some(fit);
            *models.get_mut(haul) = Some(model);
        }
        let fits = HaulMap {
            short: fits.short.take().unwrap(),
            long: fits.long.take().unwrap(),
        };
        let models = HaulMap {
            short: models.short.take().unwrap(),
            long: models.long.take().unwrap(),
        };

        let mut cells = BTreeMap::new();
        for haul in Haul::ALL {
            let model = models.get(haul);
            let n_flights = *flights.get(haul);
            for cfg in &configs {
                let breakdown =
                    emissions_per_flight(cfg, model, &dataset.constants, options.load_factor)?;
                let per_passenger = emissions_per_passenger(cfg, &breakdown, options.allocation)?;
                let revenue = match &fares {
                    Some(f) => Some(revenue_per_flight(cfg, f.get(haul), n_flights)?),
                    None => None,
                };
                cells.insert(
                    (haul, cfg.scenario.clone()),
                    AircraftCell {
                        lifetime_total: lifetime_emissions(breakdown.total, n_flights),
                        lifetime_variable: lifetime_emissions(breakdown.variable, n_flights),
                        per_passenger,
                        revenue,
                        breakdown,
                    },
                );
            }
        }

        aircraft.insert(
            name.clone(),
            AircraftResults {
                composite,
                flights,
                fits,
                models,
                configs,
                weights,
                cells,
            },
        );
    }

    let mut run = ModelRun {
        dataset: dataset.clone(),
        scenarios: scenario_names,
        allocation: options.allocation,
        load_factor: options.load_factor,
        aircraft,
        fares,
        reprice: BTreeMap::new(),
        tables: BTreeMap::new(),
        deltas: BTreeMap::new(),
        warnings,
    };
    run.reprice = build_reprice(&run)?;
    run.tables = build_tables(&run)?;
    run.deltas = build_deltas(&run)?;
    Ok(run)
}

/// Body-class repricing on the composite body aircraft: mean baseline
/// revenue over mean all-economy seats.
fn build_reprice(run: &ModelRun) -> Result<BTreeMap<(Body, Haul), BodyReprice>> {
    let mut out = BTreeMap::new();
    let (Some(fares), true) = (
        run.fares.as_ref(),
        run.scenarios.iter().any(|s| s == ALL_ECONOMY),
    ) else {
        return Ok(out);
    };
    for body in Body::ALL {
        if run.aircraft_of(body).is_empty() {
            continue;
        }
        for haul in Haul::ALL {
            let economy_fare = fares.get(haul).price(CabinClass::Economy)?;
            let baseline_revenue = run.body_mean(body, |r| {
                Ok(r.cell(haul, BASELINE)?
                    .revenue
                    .as_ref()
                    .expect("fares present")
                    .total)
            })?;
            let revised_seats =
                run.body_mean(body, |r| Ok(r.config(ALL_ECONOMY)?.total_seats()))?;
            let result = revenue_neutral_price(baseline_revenue, revised_seats, economy_fare)?;
            let mut per_aircraft = Vec::new();
            for r in run.aircraft_of(body) {
                let rev = r.cell(haul, BASELINE)?.revenue.as_ref().unwrap().total;
                let seats = r.config(ALL_ECONOMY)?.total_seats();
                per_aircraft.push((
                    r.composite.aircraft.clone(),
                    revenue_neutral_price(rev, seats, economy_fare)?,
                ));
            }
            out.insert(
                (body, haul),
                BodyReprice {
                    body,
                    haul,
                    baseline_revenue,
                    revised_seats,
                    economy_fare,
                    result,
                    per_aircraft,
                },
            );
        }
    }
    Ok(out)
}

type CellValueFn<'a> = &'a dyn Fn(&AircraftResults, Haul, &str) -> Result<Option<f64>>;

fn build_tables(run: &ModelRun) -> Result<BTreeMap<MetricKind, MetricTable>> {
    let body_map = run.body_map();
    let mut tables = BTreeMap::new();

    let collect = |value: CellValueFn| {
        let mut values = BTreeMap::new();
        for (name, r) in &run.aircraft {
            for haul in Haul::ALL {
                for scenario in &run.scenarios {
                    if let Some(v) = value(r, haul, scenario)? {
                        values.insert((name.clone(), haul, scenario.clone()), v);
                    }
                }
            }
        }
        Ok::<_, Error>(values)
    };

    let per_pax = collect(&|r, h, s| {
        let cell = r.cell(h, s)?;
        Ok(cell.per_passenger.per_class.economy)
    })?;
    tables.insert(
        MetricKind::EmissionsPerPax,
        aggregate_body_class(MetricKind::EmissionsPerPax, &per_pax, &body_map)?,
    );

    let per_flight = collect(&|r, h, s| Ok(Some(r.cell(h, s)?.breakdown.total)))?;
    tables.insert(
        MetricKind::EmissionsPerFlight,
        aggregate_body_class(MetricKind::EmissionsPerFlight, &per_flight, &body_map)?,
    );

    let lifetime = collect(&|r, h, s| Ok(Some(r.cell(h, s)?.lifetime_total)))?;
    tables.insert(
        MetricKind::LifetimeEmissions,
        aggregate_body_class(MetricKind::LifetimeEmissions, &lifetime, &body_map)?,
    );

    let variable = collect(&|r, h, s| Ok(Some(r.cell(h, s)?.breakdown.variable)))?;
    tables.insert(
        MetricKind::VariableEmissions,
        aggregate_body_class(MetricKind::VariableEmissions, &variable, &body_map)?,
    );

    if run.fares.is_some() {
        let revenue = collect(&|r, h, s| Ok(r.cell(h, s)?.revenue.as_ref().map(|v| v.total)))?;
        tables.insert(
            MetricKind::RevenuePerFlight,
            aggregate_body_class(MetricKind::RevenuePerFlight, &revenue, &body_map)?,
        );
        let lifetime_rev = collect(&|r, h, s| {
            let cell = r.cell(h, s)?;
            Ok(cell
                .revenue
                .as_ref()
                .map(|v| lifetime_revenue(v.total, *r.flights.get(h))))
        })?;
        tables.insert(
            MetricKind::LifetimeRevenue,
            aggregate_body_class(MetricKind::LifetimeRevenue, &lifetime_rev, &body_map)?,
        );

        // Ticket price is a body-level metric: the baseline row is the mean
        // economy fare, the all-economy row the revenue-neutral reprice of
        // the composite body aircraft.
        if !run.reprice.is_empty() {
            let fares = run.fares()?;
            let mut rows = BTreeMap::new();
            for (&(body, haul), reprice) in &run.reprice {
                rows.insert(
                    (body, haul, BASELINE.to_string()),
                    fares.get(haul).price(CabinClass::Economy)?,
                );
                rows.insert(
                    (body, haul, ALL_ECONOMY.to_string()),
                    reprice.result.new_price,
                );
            }
            tables.insert(
                MetricKind::TicketPrice,
                MetricTable {
                    metric: MetricKind::TicketPrice,
                    units: MetricKind::TicketPrice.units().to_string(),
                    rows,
                },
            );
        }
    }
    Ok(tables)
}

fn build_deltas(run: &ModelRun) -> Result<BTreeMap<(MetricKind, String), DeltaTable>> {
    let mut deltas = BTreeMap::new();
    for (kind, table) in &run.tables {
        for scenario in &run.scenarios {
            if scenario == BASELINE {
                continue;
            }
            if *kind == MetricKind::TicketPrice && scenario != ALL_ECONOMY {
                continue;
            }
            deltas.insert((*kind, scenario.clone()), delta_table(table, scenario)?);
        }
    }
    Ok(deltas)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::{load_dataset, DataPaths};
    use std::path::Path;

    fn shipped() -> Dataset {
        let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
        load_dataset(&DataPaths::from_dir(dir), None).unwrap()
    }

    #[test]
    fn run_produces_eight_fits_and_all_cells() {
        let run = run_model(&shipped(), &RunOptions::default()).unwrap();
        assert_eq!(run.aircraft.len(), 4);
        for r in run.aircraft.values() {
            assert!(r.fits.short.slope > 0.0);
            assert!(r.fits.long.slope > 0.0);
            assert_eq!(r.cells.len(), 4); // 2 hauls x 2 scenarios
        }
        assert_eq!(run.tables.len(), 7);
        assert_eq!(run.reprice.len(), 4);
        assert!(run.warnings.is_empty());
    }

    #[test]
    fn load_factor_must_be_a_fraction() {
        let err = run_model(
            &shipped(),
            &RunOptions {
                load_factor: 1.2,
                ..RunOptions::default()
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::LoadFactor(_)));
    }

    #[test]
    fn half_load_factor_halves_pax_emissions_exactly() {
        let full = run_model(&shipped(), &RunOptions::default()).unwrap();
        let half = run_model(
            &shipped(),
            &RunOptions {
                load_factor: 0.5,
                ..RunOptions::default()
            },
        )
        .unwrap();
        for (name, r) in &full.aircraft {
            let h = &half.aircraft[name];
            for (key, cell) in &r.cells {
                let hc = &h.cells[key];
                assert_eq!(hc.breakdown.pax.sum(), cell.breakdown.pax.sum() * 0.5);
                assert_eq!(hc.breakdown.seating, cell.breakdown.seating);
            }
        }
    }

    #[test]
    fn custom_scenario_conserves_floor_area() {
        let dataset = shipped();
        // Reallocate all business floor to economy on every aircraft.
        let base = run_model(&dataset, &RunOptions::default()).unwrap();
        let mut overrides = BTreeMap::new();
        for (name, r) in &base.aircraft {
            let c = &r.composite;
            let mut per_class = BTreeMap::new();
            per_class.insert(
                CabinClass::Economy,
                c.class_floor_area.economy + c.class_floor_area.business,
            );
            per_class.insert(CabinClass::Business, 0.0);
            overrides.insert(name.clone(), per_class);
        }
        let run = run_model(
            &dataset,
            &RunOptions {
                scenarios: vec![ScenarioSpec::Custom {
                    name: "biz_to_econ".into(),
                    overrides,
                }],
                ..RunOptions::default()
            },
        )
        .unwrap();
        for r in run.aircraft.values() {
            let cfg = r.config("biz_to_econ").unwrap();
            let total = cfg.total_floor_area();
            assert!((total - r.composite.total_floor_area).abs() < 1e-9 * total);
            assert_eq!(cfg.seats.business, 0.0);
            assert!(cfg.seats.premium_economy > 0.0);
        }
        assert!(run
            .tables
            .values()
            .all(|t| t.rows.keys().any(|(_, _, s)| s == "biz_to_econ")));
    }

    #[test]
    fn exit_limit_excess_is_flagged_but_not_blocked() {
        let mut dataset = shipped();
        for spec in &mut dataset.specs {
            if spec.aircraft == "777-200LR" {
                // Below the computed 388.8 all-economy seats.
                spec.exit_limit = Some(350.0);
            }
        }
        let run = run_model(&dataset, &RunOptions::default()).unwrap();
        let flagged: Vec<_> = run
            .warnings
            .iter()
            .filter(|w| w.message.contains("exit limit"))
            .collect();
        assert_eq!(flagged.len(), 1);
        assert!(flagged[0].location.contains("777-200LR"));
        // Computation proceeds regardless.
        assert!(
            run.aircraft["777-200LR"]
                .config(ALL_ECONOMY)
                .unwrap()
                .seats
                .economy
                > 350.0
        );
    }

    #[test]
    fn wide_body_refit_weight_and_emissions_shifts_match_the_published_narrative() {
        // Moving the wide-body composite to all-economy drops seat weight
        // by 3,592 kg and raises passenger+luggage weight; seat emissions
        // fall by ~573 kg and passenger emissions rise by ~986 kg on short
        // haul.
        let run = run_model(&shipped(), &RunOptions::default()).unwrap();
        let mean = |f: &dyn Fn(&AircraftResults) -> f64| {
            run.body_mean(crate::types::Body::Wide, |r| Ok(f(r)))
                .unwrap()
        };
        let weight = |scenario: &'static str,
                      pick: fn(&crate::cabin::ConfigurationWeights) -> f64| {
            mean(&move |r: &AircraftResults| {
                let idx = r
                    .configs
                    .iter()
                    .position(|c| c.scenario == scenario)
                    .unwrap();
                pick(&r.weights[idx])
            })
        };
        let seat_drop = weight(BASELINE, |w| w.total_seat_weight)
            - weight(ALL_ECONOMY, |w| w.total_seat_weight);
        assert!((seat_drop - 3592.0).abs() < 1.0, "{seat_drop}");
        // The published pax-weight rise of 6,181 kg inherits the ledgered
        // weight-table typo; the consistent value is 6,161.25.
        let pax_rise =
            weight(ALL_ECONOMY, |w| w.total_pax_weight) - weight(BASELINE, |w| w.total_pax_weight);
        assert!((pax_rise - 6161.25).abs() < 1.0, "{pax_rise}");

        let seating = |scenario: &'static str| {
            mean(&move |r: &AircraftResults| {
                r.cell(Haul::Short, scenario)
                    .unwrap()
                    .breakdown
                    .seating
                    .sum()
            })
        };
        let seating_drop = seating(BASELINE) - seating(ALL_ECONOMY);
        assert!(
            (seating_drop - 573.0).abs() / 573.0 < 0.01,
            "{seating_drop}"
        );
        let pax = |scenario: &'static str| {
            mean(&move |r: &AircraftResults| {
                r.cell(Haul::Short, scenario).unwrap().breakdown.pax.sum()
            })
        };
        let pax_rise = pax(ALL_ECONOMY) - pax(BASELINE);
        assert!((pax_rise - 986.0).abs() / 986.0 < 0.005, "{pax_rise}");
    }

    #[test]
    fn composite_factor_diagnostic_shows_the_published_rows_transposed() {
        // Mean variable emissions over mean configuration weight: the
        // published per-scenario factor table prints these with the
        // narrow/wide rows swapped (~0.1945 appears as wide short haul).
        let run = run_model(&shipped(), &RunOptions::default()).unwrap();
        let factor = |body: crate::types::Body| {
            let variable = run
                .body_mean(body, |r| {
                    Ok(r.cell(Haul::Short, BASELINE)?.breakdown.variable)
                })
                .unwrap();
            let weight = run
                .body_mean(body, |r| {
                    let w = &r.weights[0];
                    Ok(w.total_seat_weight + w.total_pax_weight)
                })
                .unwrap();
            variable / weight
        };
        let narrow = factor(crate::types::Body::Narrow);
        let wide = factor(crate::types::Body::Wide);
        assert!((narrow - 0.1945).abs() / 0.1945 < 0.005, "{narrow}");
        assert!((wide - 0.1594).abs() / 0.1594 < 0.005, "{wide}");
    }

    #[test]
    fn scenario_parse_accepts_literals() {
        assert_eq!(
            ScenarioSpec::parse("baseline").unwrap(),
            ScenarioSpec::Baseline
        );
        assert_eq!(
            ScenarioSpec::parse("all_economy").unwrap(),
            ScenarioSpec::AllEconomy
        );
        assert!(ScenarioSpec::parse("/nonexistent/file.toml").is_err());
    }

    #[test]
    fn scenario_file_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.toml");
        std::fs::write(
            &path,
            "name = \"tight\"\n[\"A320-200\"]\neconomy = 3000.0\nbusiness = 236.3775\npremium_economy = 0.0\n",
        )
        .unwrap();
        let spec = ScenarioSpec::from_file(&path).unwrap();
        match &spec {
            ScenarioSpec::Custom { name, overrides } => {
                assert_eq!(name, "tight");
                assert_eq!(overrides["A320-200"][&CabinClass::Economy], 3000.0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
