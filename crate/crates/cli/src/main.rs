//! Command-line surface for the cabin-configuration model: one verb per
//! modeling stage, reproducible runs, deterministic outputs.
//!
//! Exit codes: 0 success, 1 validation error or reconciliation mismatch
//! (and any runtime failure), 2 usage error.

use anyhow::{bail, Context, Result};
use cabinlab_core::emissions::max_flights;
use cabinlab_core::finance::{budget_share, class_price_multiples, elasticity_response};
use cabinlab_core::ingest::{load_constants, load_dataset, validate_dataset, DataPaths, Severity};
use cabinlab_core::pipeline::{run_model, ModelRun, RunOptions, ScenarioSpec};
use cabinlab_core::report::reconcile::reconcile;
use cabinlab_core::report::{export, DeltaTable, MetricKind};
use cabinlab_core::types::{format_fixed, AllocationStrategy, Body, Haul, ALL_ECONOMY, BASELINE};
use clap::{Parser, Subcommand};
use serde::Deserialize;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "cabinlab", version)]
#[command(about = "Cabin-configuration emissions and revenue model")]
struct Cli {
    /// Dataset directory (layouts.csv, emissions_samples.csv, fares.csv,
    /// aircraft_specs.csv, optional constants.toml / provenance.toml)
    #[arg(long, global = true)]
    data: Option<PathBuf>,

    /// Constants TOML overriding the dataset's constants.toml
    #[arg(long, global = true)]
    constants: Option<PathBuf>,

    /// Run-config TOML with equivalents for every flag (flags win)
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Scenario to evaluate: "baseline", "all_economy", or a TOML file
    /// (repeatable; baseline is always evaluated)
    #[arg(long = "scenario", global = true)]
    scenarios: Vec<String>,

    /// Per-passenger service-zone allocation strategy
    #[arg(long, global = true, value_parser = parse_allocation)]
    allocation: Option<AllocationStrategy>,

    /// Passenger load factor in [0, 1]
    #[arg(long, global = true)]
    load_factor: Option<f64>,

    /// Output directory for file exports
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// File export format
    #[arg(long, global = true, value_parser = ["csv", "json"])]
    format: Option<String>,

    /// Reconciliation tolerance override (relative)
    #[arg(long, global = true)]
    tolerance: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

fn parse_allocation(s: &str) -> std::result::Result<AllocationStrategy, String> {
    AllocationStrategy::parse(s)
        .ok_or_else(|| format!("expected as-written or service-to-class-seats, got {s:?}"))
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Load the dataset and report validation findings
    Validate,
    /// Print composite aircraft, seats, floor shares and weights
    Composite,
    /// Print the emissions regression and factor tables
    Fit {
        /// Only fit these aircraft (repeatable)
        #[arg(long = "aircraft")]
        aircraft: Vec<String>,
    },
    /// Compute metric tables for the requested scenarios
    Scenario,
    /// Revenue-neutral economy repricing for the all-economy refit
    Reprice,
    /// Demand response and budget share of the repricing deltas
    Elasticity {
        /// Price elasticity of demand (repeatable)
        #[arg(long = "elasticity", allow_hyphen_values = true)]
        elasticities: Vec<f64>,
        /// Per-trip budget for the budget-share figure, USD
        #[arg(long, default_value_t = 2743.0)]
        trip_budget: f64,
    },
    /// Reconcile computed results against the embedded reference tables
    Reconcile,
    /// Write all tables, scenario changes and figure data to --out
    Export,
}

/// Config-file equivalents for the global flags.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    data: Option<PathBuf>,
    constants: Option<PathBuf>,
    scenarios: Option<Vec<String>>,
    allocation: Option<String>,
    load_factor: Option<f64>,
    out: Option<PathBuf>,
    format: Option<String>,
    tolerance: Option<f64>,
}

/// Flags merged over config-file values over defaults.
#[derive(Debug)]
struct Resolved {
    data: PathBuf,
    constants: Option<PathBuf>,
    scenarios: Vec<String>,
    allocation: AllocationStrategy,
    load_factor: f64,
    out: Option<PathBuf>,
    format: String,
    tolerance: Option<f64>,
}

fn resolve(cli: &Cli) -> Result<Resolved> {
    let file = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading config {}", path.display()))?;
            toml::from_str::<FileConfig>(&text)
                .with_context(|| format!("parsing config {}", path.display()))?
        }
        None => FileConfig::default(),
    };
    let allocation = match (&cli.allocation, &file.allocation) {
        (Some(a), _) => *a,
        (None, Some(s)) => {
            AllocationStrategy::parse(s).with_context(|| format!("config allocation {s:?}"))?
        }
        (None, None) => AllocationStrategy::AsWritten,
    };
    let scenarios = if !cli.scenarios.is_empty() {
        cli.scenarios.clone()
    } else {
        file.scenarios
            .unwrap_or_else(|| vec![BASELINE.to_string(), ALL_ECONOMY.to_string()])
    };
    Ok(Resolved {
        data: cli
            .data
            .clone()
            .or(file.data)
            .unwrap_or_else(|| PathBuf::from("data")),
        constants: cli.constants.clone().or(file.constants),
        scenarios,
        allocation,
        load_factor: cli.load_factor.or(file.load_factor).unwrap_or(1.0),
        out: cli.out.clone().or(file.out),
        format: cli
            .format
            .clone()
            .or(file.format)
            .unwrap_or_else(|| "csv".into()),
        tolerance: cli.tolerance.or(file.tolerance),
    })
}

fn load(resolved: &Resolved) -> Result<cabinlab_core::ingest::Dataset> {
    let mut paths = DataPaths::from_dir(&resolved.data);
    if let Some(c) = &resolved.constants {
        paths.constants = Some(c.clone());
    }
    let constants = match &paths.constants {
        Some(p) => Some(load_constants(p)?),
        None => None,
    };
    Ok(load_dataset(&paths, constants)?)
}

fn run(resolved: &Resolved) -> Result<ModelRun> {
    let dataset = load(resolved)?;
    let scenarios = resolved
        .scenarios
        .iter()
        .map(|s| ScenarioSpec::parse(s))
        .collect::<cabinlab_core::Result<Vec<_>>>()?;
    let options = RunOptions {
        scenarios,
        allocation: resolved.allocation,
        load_factor: resolved.load_factor,
    };
    Ok(run_model(&dataset, &options)?)
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<()> {
    std::fs::create_dir_all(dir)
        .with_context(|| format!("creating output directory {}", dir.display()))?;
    let path = dir.join(name);
    std::fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn dispatch(cli: &Cli) -> Result<ExitCode> {
    let resolved = resolve(cli)?;
    match &cli.command {
        Command::Validate => cmd_validate(&resolved),
        Command::Composite => cmd_composite(&resolved),
        Command::Fit { aircraft } => cmd_fit(&resolved, aircraft),
        Command::Scenario => cmd_scenario(&resolved),
        Command::Reprice => cmd_reprice(&resolved),
        Command::Elasticity {
            elasticities,
            trip_budget,
        } => cmd_elasticity(&resolved, elasticities, *trip_budget),
        Command::Reconcile => cmd_reconcile(&resolved),
        Command::Export => cmd_export(&resolved),
    }
}

fn cmd_validate(resolved: &Resolved) -> Result<ExitCode> {
    let dataset = load(resolved)?;
    let findings = validate_dataset(&dataset);
    let mut errors = 0usize;
    for note in &dataset.provenance {
        println!(
            "{:8} {} ({}): {}",
            note.severity, note.file, note.table, note.message
        );
    }
    for f in &findings {
        println!("{:8} {}: {}", f.severity.as_str(), f.location, f.message);
        if f.severity >= Severity::Error {
            errors += 1;
        }
    }
    println!(
        "validated: {} layout rows, {} samples, {} fares, {} specs; {} finding(s)",
        dataset.layouts.len(),
        dataset.samples.len(),
        dataset.fares.len(),
        dataset.specs.len(),
        findings.len()
    );
    Ok(if errors > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_composite(resolved: &Resolved) -> Result<ExitCode> {
    let run = run(resolved)?;
    for (name, r) in &run.aircraft {
        let c = &r.composite;
        println!("{name} ({}-body)", c.body);
        println!(
            "  floor sq ft: economy {} | premium {} | business {} | service {} | total {}",
            format_fixed(c.class_floor_area.economy, 2),
            format_fixed(c.class_floor_area.premium_economy, 2),
            format_fixed(c.class_floor_area.business, 2),
            format_fixed(c.service_floor_area, 2),
            format_fixed(c.total_floor_area, 2),
        );
        println!(
            "  sq ft/seat:  economy {} | premium {} | business {} | service {}",
            format_fixed(c.class_area_per_seat.economy, 2),
            format_fixed(c.class_area_per_seat.premium_economy, 2),
            format_fixed(c.class_area_per_seat.business, 2),
            format_fixed(c.service_area_per_seat, 2),
        );
        println!(
            "  lifespan:    {} cycles | {} hours | flights short {} long {}",
            c.max_cycles,
            c.max_hours,
            format_fixed(
                max_flights(
                    run.dataset.spec(name).unwrap(),
                    Haul::Short,
                    &run.dataset.constants
                ),
                2
            ),
            format_fixed(
                max_flights(
                    run.dataset.spec(name).unwrap(),
                    Haul::Long,
                    &run.dataset.constants
                ),
                2
            ),
        );
        for (cfg, weights) in r.configs.iter().zip(&r.weights) {
            println!(
                "  [{}] seats economy {} | premium {} | business {} (total {})",
                cfg.scenario,
                format_fixed(cfg.seats.economy, 2),
                format_fixed(cfg.seats.premium_economy, 2),
                format_fixed(cfg.seats.business, 2),
                format_fixed(cfg.total_seats(), 2),
            );
            println!(
                "        seat weight {} kg | pax+luggage {} kg",
                format_fixed(weights.total_seat_weight, 2),
                format_fixed(weights.total_pax_weight, 2),
            );
        }
    }
    for w in &run.warnings {
        println!("{:8} {}: {}", w.severity.as_str(), w.location, w.message);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_fit(resolved: &Resolved, filter: &[String]) -> Result<ExitCode> {
    let run = run(resolved)?;
    if let Some(unknown) = filter
        .iter()
        .find(|a| !run.aircraft.contains_key(a.as_str()))
    {
        bail!("no such aircraft {unknown:?} in the dataset");
    }
    println!(
        "{:<12} {:<6} {:>12} {:>10} {:>8} {:>10} {:>14}",
        "aircraft", "haul", "intercept", "slope", "r2", "factor", "empty_kg_co2"
    );
    let mut count = 0;
    for (name, r) in &run.aircraft {
        if !filter.is_empty() && !filter.iter().any(|f| f == name) {
            continue;
        }
        for haul in Haul::ALL {
            let fit = r.fits.get(haul);
            let model = r.models.get(haul);
            println!(
                "{:<12} {:<6} {:>12} {:>10} {:>8} {:>10} {:>14}",
                name,
                haul.as_str(),
                format_fixed(fit.intercept, 2),
                format_fixed(fit.slope, 4),
                format_fixed(fit.r_squared, 5),
                format_fixed(model.emissions_factor, 4),
                format_fixed(model.empty_aircraft_emissions, 2),
            );
            count += 1;
        }
    }
    println!("{count} fit(s)");
    Ok(ExitCode::SUCCESS)
}

fn print_metric_table(table: &cabinlab_core::report::MetricTable) {
    println!("== {} ({}) ==", table.metric, table.units);
    for (body, haul, scenario, value) in table.ordered_rows() {
        println!(
            "  {:<7} {:<6} {:<14} {:>18}",
            body.as_str(),
            haul.as_str(),
            scenario,
            format_fixed(value, 2)
        );
    }
}

fn cmd_scenario(resolved: &Resolved) -> Result<ExitCode> {
    let run = run(resolved)?;
    for table in run.tables.values() {
        print_metric_table(table);
    }
    for ((metric, scenario), delta) in &run.deltas {
        println!("== {metric} change: baseline -> {scenario} ==");
        for ((body, haul), cell) in &delta.rows {
            println!(
                "  {:<7} {:<6} {:>14} ({:>8}%)",
                body.as_str(),
                haul.as_str(),
                format_fixed(cell.absolute, 2),
                format_fixed(cell.relative * 100.0, 2)
            );
        }
    }
    for w in &run.warnings {
        println!("{:8} {}: {}", w.severity.as_str(), w.location, w.message);
    }
    if let Some(out) = &resolved.out {
        write_tables(&run, out, &resolved.format)?;
        println!("tables written to {}", out.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_reprice(resolved: &Resolved) -> Result<ExitCode> {
    let run = run(resolved)?;
    if run.reprice.is_empty() {
        bail!("repricing needs fares and the all_economy scenario");
    }
    println!(
        "{:<7} {:<6} {:>16} {:>12} {:>11} {:>10} {:>8}",
        "body", "haul", "base_revenue", "seats", "new_price", "delta", "delta_%"
    );
    for reprice in run.reprice.values() {
        println!(
            "{:<7} {:<6} {:>16} {:>12} {:>11} {:>10} {:>8}",
            reprice.body.as_str(),
            reprice.haul.as_str(),
            format_fixed(reprice.baseline_revenue, 2),
            format_fixed(reprice.revised_seats, 2),
            format_fixed(reprice.result.new_price, 2),
            format_fixed(reprice.result.delta_abs, 2),
            format_fixed(reprice.result.delta_rel * 100.0, 2),
        );
        for (aircraft, r) in &reprice.per_aircraft {
            println!(
                "  {:<11} {:>40} {:>11} {:>10} {:>8}",
                aircraft,
                "",
                format_fixed(r.new_price, 2),
                format_fixed(r.delta_abs, 2),
                format_fixed(r.delta_rel * 100.0, 2),
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_elasticity(resolved: &Resolved, elasticities: &[f64], trip_budget: f64) -> Result<ExitCode> {
    let run = run(resolved)?;
    if run.reprice.is_empty() {
        bail!("elasticity analysis needs fares and the all_economy scenario");
    }
    let elasticities = if elasticities.is_empty() {
        vec![-1.420, -1.277, -0.783]
    } else {
        elasticities.to_vec()
    };
    let fares = run.fares()?;
    for haul in Haul::ALL {
        let m = class_price_multiples(fares.get(haul))?;
        println!(
            "{haul}: class price multiples premium {}x business {}x",
            format_fixed(m.premium_economy, 2),
            format_fixed(m.business, 2)
        );
    }
    for reprice in run.reprice.values() {
        let share = budget_share(reprice.result.delta_abs, trip_budget)?;
        println!(
            "{} {}: price change {} USD ({}%), {}% of a {} USD trip budget",
            reprice.body.as_str(),
            reprice.haul.as_str(),
            format_fixed(reprice.result.delta_abs, 2),
            format_fixed(reprice.result.delta_rel * 100.0, 2),
            format_fixed(share * 100.0, 3),
            format_fixed(trip_budget, 2),
        );
        for e in &elasticities {
            let response = elasticity_response(*e, reprice.result.delta_rel);
            println!(
                "    elasticity {:>7}: demand change {:>7}%",
                format_fixed(*e, 3),
                format_fixed(response * 100.0, 2)
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_reconcile(resolved: &Resolved) -> Result<ExitCode> {
    let run = run(resolved)?;
    let entries = reconcile(&run, resolved.tolerance)?;
    let text = export::reconciliation_text(&entries);
    print!("{text}");
    if let Some(out) = &resolved.out {
        write_file(
            out,
            "reconciliation.json",
            &export::reconciliation_json(&entries),
        )?;
        write_file(out, "reconciliation.txt", &text)?;
        println!("report written to {}", out.display());
    }
    let mismatches = entries.iter().filter(|e| !e.status.passes()).count();
    Ok(if mismatches > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}

/// Figure-data rows: absolute (and relative) scenario change per
/// (body, haul), one file per published figure.
fn figure_csv(delta: &DeltaTable, units: &str) -> String {
    let mut out = format!("body,haul,delta_{units},delta_{units}_exact,delta_rel_pct\n");
    for ((body, haul), cell) in &delta.rows {
        out.push_str(&format!(
            "{body},{haul},{},{},{}\n",
            format_fixed(cell.absolute, 2),
            cell.absolute,
            format_fixed(cell.relative * 100.0, 2),
        ));
    }
    out
}

fn write_tables(run: &ModelRun, out: &Path, format: &str) -> Result<()> {
    for (kind, table) in &run.tables {
        let (name, contents) = match format {
            "json" => (
                format!("table_{kind}.json"),
                export::metric_table_json(table),
            ),
            _ => (format!("table_{kind}.csv"), export::metric_table_csv(table)),
        };
        write_file(out, &name, &contents)?;
    }
    for ((kind, scenario), delta) in &run.deltas {
        let (name, contents) = match format {
            "json" => (
                format!("delta_{kind}_{scenario}.json"),
                export::delta_table_json(delta),
            ),
            _ => (
                format!("delta_{kind}_{scenario}.csv"),
                export::delta_table_csv(delta),
            ),
        };
        write_file(out, &name, &contents)?;
    }
    Ok(())
}

fn cmd_export(resolved: &Resolved) -> Result<ExitCode> {
    let Some(out) = &resolved.out else {
        eprintln!("error: export needs --out DIR");
        return Ok(ExitCode::from(2));
    };
    let run = run(resolved)?;
    write_tables(&run, out, &resolved.format)?;

    // Figure data: absolute changes from baseline to all-economy.
    if run.scenarios.iter().any(|s| s == ALL_ECONOMY) {
        let figure = |kind: MetricKind| run.deltas.get(&(kind, ALL_ECONOMY.to_string()));
        let figures: [(&str, Option<&DeltaTable>, &str); 7] = [
            (
                "fig2a_per_pax_emissions_delta",
                figure(MetricKind::EmissionsPerPax),
                "kg_co2_per_pax",
            ),
            (
                "fig2b_per_flight_emissions_delta",
                figure(MetricKind::EmissionsPerFlight),
                "kg_co2",
            ),
            (
                "fig2c_lifetime_emissions_delta",
                figure(MetricKind::LifetimeEmissions),
                "kg_co2",
            ),
            (
                "fig3a_variable_emissions_delta",
                figure(MetricKind::VariableEmissions),
                "kg_co2",
            ),
            (
                "fig4a_ticket_price_delta",
                figure(MetricKind::TicketPrice),
                "usd",
            ),
            (
                "fig4b_revenue_delta",
                figure(MetricKind::RevenuePerFlight),
                "usd",
            ),
            (
                "fig4c_lifetime_revenue_delta",
                figure(MetricKind::LifetimeRevenue),
                "usd",
            ),
        ];
        for (name, delta, units) in figures {
            if let Some(delta) = delta {
                write_file(out, &format!("{name}.csv"), &figure_csv(delta, units))?;
            }
        }
        // Lifetime variable emissions are not one of the exported metric
        // tables; build the figure rows directly.
        let mut rows = BTreeMap::new();
        for body in Body::ALL {
            if run.aircraft_of(body).is_empty() {
                continue;
            }
            for haul in Haul::ALL {
                let base =
                    run.body_mean(body, |r| Ok(r.cell(haul, BASELINE)?.lifetime_variable))?;
                let revised =
                    run.body_mean(body, |r| Ok(r.cell(haul, ALL_ECONOMY)?.lifetime_variable))?;
                rows.insert(
                    (body, haul),
                    cabinlab_core::report::DeltaCell {
                        absolute: revised - base,
                        relative: (revised - base) / base,
                    },
                );
            }
        }
        let delta = DeltaTable {
            metric: MetricKind::VariableEmissions,
            scenario: ALL_ECONOMY.to_string(),
            rows,
        };
        write_file(
            out,
            "fig3b_lifetime_variable_emissions_delta.csv",
            &figure_csv(&delta, "kg_co2"),
        )?;
    }
    println!("export written to {}", out.display());
    Ok(ExitCode::SUCCESS)
}
