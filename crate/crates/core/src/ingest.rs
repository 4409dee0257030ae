//! Dataset loading, normalization and validation.
//!
//! Input is plain CSV plus one TOML config for constants. Every record in
//! an input file either lands in the [`Dataset`] or surfaces in a parse
//! diagnostic carrying file, row and column; nothing is dropped silently.
//! Data problems that are suspicions rather than schema violations (e.g. a
//! transposed haul column) are reported by [`validate_dataset`] as findings
//! and never auto-corrected.

use crate::types::{CabinClass, ClassMap, Haul, HaulMap, Usd, Zone};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

/// One airline's allocation of one zone on one aircraft type.
///
/// `area_per_seat` is resolved at load time: taken from the file when
/// present, otherwise derived as `floor_area / seat_count`. Zero-area rows
/// represent classes the airline does not offer and stay in the dataset so
/// composite averaging includes them as zeros.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AirlineLayoutRecord {
    pub airline: String,
    pub aircraft: String,
    pub zone: Zone,
    pub floor_area: f64,
    pub area_per_seat: Option<f64>,
    pub seat_count: Option<f64>,
}

/// Emissions at one load-factor point for one aircraft and haul.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmissionsSampleRecord {
    pub aircraft: String,
    pub haul: Haul,
    pub passengers: u32,
    pub emissions: f64,
}

/// One observed airfare (a rolling average over an observation window).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FareRecord {
    pub airline: String,
    pub route: String,
    pub haul: Haul,
    pub class: CabinClass,
    pub price: Usd,
    pub window: String,
}

/// Airframe body class and lifespan limits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AircraftSpecRecord {
    pub aircraft: String,
    pub body: crate::types::Body,
    pub max_cycles: f64,
    pub max_hours: f64,
    /// Optional certified exit limit; all-economy seat counts above it are
    /// flagged, never blocked.
    pub exit_limit: Option<f64>,
}

/// Model constants with the standard defaults.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelConstants {
    /// Passenger body weight, kg.
    pub pax_body_weight: f64,
    /// Luggage weight per passenger, kg.
    pub luggage_weight: f64,
    /// Seat unit weight per class, kg.
    pub seat_weights: ClassMap<f64>,
    /// Scheduled block time per haul, hours.
    pub block_hours: HaulMap<f64>,
    /// Stage length per haul, nautical miles.
    pub stage_length: HaulMap<f64>,
    /// kg CO2 per kg of kerosene. Documentation only: emissions samples are
    /// ingested already in kg CO2.
    pub kerosene_co2: f64,
}

impl Default for ModelConstants {
    fn default() -> Self {
        ModelConstants {
            pax_body_weight: 65.0,
            luggage_weight: 10.0,
            seat_weights: ClassMap {
                economy: 10.0,
                premium_economy: 20.0,
                business: 140.0,
            },
            block_hours: HaulMap {
                short: 2.0,
                long: 7.0,
            },
            stage_length: HaulMap {
                short: 631.0,
                long: 3002.67,
            },
            kerosene_co2: 3.15,
        }
    }
}

impl ModelConstants {
    /// Combined passenger plus luggage weight, kg.
    pub fn pax_weight(&self) -> f64 {
        self.pax_body_weight + self.luggage_weight
    }
}

/// A provenance note shipped with a dataset; surfaced by `validate`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProvenanceNote {
    pub file: String,
    pub table: String,
    #[serde(default = "default_note_severity")]
    pub severity: String,
    pub message: String,
}

fn default_note_severity() -> String {
    "info".to_string()
}

/// The full validated input bundle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    pub layouts: Vec<AirlineLayoutRecord>,
    pub samples: Vec<EmissionsSampleRecord>,
    pub fares: Vec<FareRecord>,
    pub specs: Vec<AircraftSpecRecord>,
    pub constants: ModelConstants,
    pub provenance: Vec<ProvenanceNote>,
}

impl Dataset {
    pub fn spec(&self, aircraft: &str) -> Option<&AircraftSpecRecord> {
        self.specs.iter().find(|s| s.aircraft == aircraft)
    }

    /// Aircraft present in the layouts, in first-appearance order.
    pub fn aircraft(&self) -> Vec<String> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for l in &self.layouts {
            if seen.insert(l.aircraft.clone()) {
                out.push(l.aircraft.clone());
            }
        }
        out
    }

    pub fn layouts_for(&self, aircraft: &str) -> Vec<&AirlineLayoutRecord> {
        self.layouts
            .iter()
            .filter(|l| l.aircraft == aircraft)
            .collect()
    }
}

/// File locations for one dataset.
#[derive(Debug, Clone)]
pub struct DataPaths {
    pub layouts: PathBuf,
    pub samples: PathBuf,
    pub fares: PathBuf,
    pub specs: PathBuf,
    pub constants: Option<PathBuf>,
    pub provenance: Option<PathBuf>,
}

impl DataPaths {
    /// Standard filenames under one directory. `constants.toml` and
    /// `provenance.toml` are optional.
    pub fn from_dir(dir: impl AsRef<Path>) -> DataPaths {
        let dir = dir.as_ref();
        let opt = |name: &str| {
            let p = dir.join(name);
            p.exists().then_some(p)
        };
        DataPaths {
            layouts: dir.join("layouts.csv"),
            samples: dir.join("emissions_samples.csv"),
            fares: dir.join("fares.csv"),
            specs: dir.join("aircraft_specs.csv"),
            constants: opt("constants.toml"),
            provenance: opt("provenance.toml"),
        }
    }
}

// ---------------------------------------------------------------- loading

struct Rows {
    path: String,
    headers: Vec<String>,
    records: Vec<(u64, csv::StringRecord)>,
}

impl Rows {
    fn read(path: &Path, required: &[&str]) -> Result<Rows> {
        let display = path.display().to_string();
        let mut reader = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_path(path)
            .map_err(|source| Error::Csv {
                path: display.clone(),
                source,
            })?;
        let headers: Vec<String> = reader
            .headers()
            .map_err(|source| Error::Csv {
                path: display.clone(),
                source,
            })?
            .iter()
            .map(|h| h.to_string())
            .collect();
        for col in required {
            if !headers.iter().any(|h| h == col) {
                return Err(Error::Config {
                    path: display,
                    message: format!("missing required column {col:?}"),
                });
            }
        }
        let mut records = Vec::new();
        for rec in reader.records() {
            let rec = rec.map_err(|source| Error::Csv {
                path: display.clone(),
                source,
            })?;
            let line = rec.position().map(|p| p.line()).unwrap_or(0);
            records.push((line, rec));
        }
        Ok(Rows {
            path: display,
            headers,
            records,
        })
    }

    fn field<'a>(&self, rec: &'a csv::StringRecord, col: &str) -> &'a str {
        self.headers
            .iter()
            .position(|h| h == col)
            .and_then(|i| rec.get(i))
            .unwrap_or("")
    }

    fn f64_field(&self, row: u64, rec: &csv::StringRecord, col: &str) -> Result<f64> {
        let raw = self.field(rec, col);
        raw.parse::<f64>().map_err(|_| Error::Parse {
            path: self.path.clone(),
            row,
            field: col.to_string(),
            message: format!("invalid number {raw:?}"),
        })
    }

    fn opt_f64_field(&self, row: u64, rec: &csv::StringRecord, col: &str) -> Result<Option<f64>> {
        if self.field(rec, col).is_empty() {
            return Ok(None);
        }
        self.f64_field(row, rec, col).map(Some)
    }

    fn unit_err(&self, row: u64, message: impl Into<String>) -> Error {
        Error::Unit {
            path: self.path.clone(),
            row,
            message: message.into(),
        }
    }

    fn parse_err(&self, row: u64, field: &str, message: impl Into<String>) -> Error {
        Error::Parse {
            path: self.path.clone(),
            row,
            field: field.to_string(),
            message: message.into(),
        }
    }
}

fn load_layouts(path: &Path) -> Result<Vec<AirlineLayoutRecord>> {
    let rows = Rows::read(path, &["airline", "aircraft", "class", "floor_area_sqft"])?;
    let mut out = Vec::new();
    for (row, rec) in &rows.records {
        let row = *row;
        let zone_raw = rows.field(rec, "class");
        let zone = Zone::parse(zone_raw)
            .ok_or_else(|| rows.parse_err(row, "class", format!("unknown class {zone_raw:?}")))?;
        let floor_area = rows.f64_field(row, rec, "floor_area_sqft")?;
        if floor_area < 0.0 {
            return Err(rows.unit_err(row, format!("floor area must be >= 0, got {floor_area}")));
        }
        if zone == Zone::ServiceZone && floor_area <= 0.0 {
            return Err(rows.unit_err(row, "service zone floor area must be positive"));
        }
        let mut area_per_seat = rows.opt_f64_field(row, rec, "area_per_seat_sqft")?;
        let seat_count = rows.opt_f64_field(row, rec, "seat_count")?;
        if let Some(aps) = area_per_seat {
            if aps <= 0.0 {
                return Err(rows.unit_err(row, format!("area per seat must be > 0, got {aps}")));
            }
        }
        if let Some(n) = seat_count {
            if n < 0.0 {
                return Err(rows.unit_err(row, format!("seat count must be >= 0, got {n}")));
            }
        }
        if let Zone::Cabin(_) = zone {
            if floor_area > 0.0 && area_per_seat.is_none() {
                // Derive from seats when the file omits the ratio.
                match seat_count {
                    Some(n) if n > 0.0 => area_per_seat = Some(floor_area / n),
                    _ => {
                        return Err(rows.unit_err(
                            row,
                            "cabin row with floor area needs area_per_seat_sqft or seat_count",
                        ))
                    }
                }
            }
        }
        out.push(AirlineLayoutRecord {
            airline: rows.field(rec, "airline").to_string(),
            aircraft: rows.field(rec, "aircraft").to_string(),
            zone,
            floor_area,
            area_per_seat,
            seat_count,
        });
    }
    check_layout_groups(&rows.path, &out)?;
    Ok(out)
}

/// Each (airline, aircraft) group must hold exactly one service-zone row,
/// at least one economy row, and no duplicate zones.
fn check_layout_groups(path: &str, layouts: &[AirlineLayoutRecord]) -> Result<()> {
    let mut groups: BTreeMap<(String, String), Vec<&AirlineLayoutRecord>> = BTreeMap::new();
    for l in layouts {
        groups
            .entry((l.airline.clone(), l.aircraft.clone()))
            .or_default()
            .push(l);
    }
    for ((airline, aircraft), rows) in groups {
        let label = format!("{path}: {airline} / {aircraft}");
        let mut zones = BTreeSet::new();
        for r in &rows {
            if !zones.insert(r.zone.as_str()) {
                return Err(Error::Layout(format!(
                    "{label}: duplicate {} row",
                    r.zone.as_str()
                )));
            }
        }
        let service = rows.iter().filter(|r| r.zone == Zone::ServiceZone).count();
        if service != 1 {
            return Err(Error::Layout(format!(
                "{label}: expected exactly one service_zone row, found {service}"
            )));
        }
        if !rows
            .iter()
            .any(|r| r.zone == Zone::Cabin(CabinClass::Economy) && r.floor_area > 0.0)
        {
            return Err(Error::Layout(format!("{label}: no economy row")));
        }
    }
    Ok(())
}

fn load_samples(path: &Path) -> Result<Vec<EmissionsSampleRecord>> {
    let rows = Rows::read(path, &["aircraft", "haul", "passengers", "kg_co2"])?;
    let mut out = Vec::new();
    for (row, rec) in &rows.records {
        let row = *row;
        let haul_raw = rows.field(rec, "haul");
        let haul = Haul::parse(haul_raw)
            .ok_or_else(|| rows.parse_err(row, "haul", format!("unknown haul {haul_raw:?}")))?;
        let passengers = rows.f64_field(row, rec, "passengers")?;
        if passengers < 0.0 || passengers.fract() != 0.0 {
            return Err(rows.unit_err(
                row,
                format!("passengers must be a count >= 0, got {passengers}"),
            ));
        }
        let emissions = rows.f64_field(row, rec, "kg_co2")?;
        if emissions <= 0.0 {
            return Err(rows.unit_err(row, format!("emissions must be > 0, got {emissions}")));
        }
        out.push(EmissionsSampleRecord {
            aircraft: rows.field(rec, "aircraft").to_string(),
            haul,
            passengers: passengers as u32,
            emissions,
        });
    }
    Ok(out)
}

fn load_fares(path: &Path) -> Result<Vec<FareRecord>> {
    let rows = Rows::read(
        path,
        &["airline", "route", "haul", "class", "price_usd", "window"],
    )?;
    let mut out = Vec::new();
    for (row, rec) in &rows.records {
        let row = *row;
        let haul_raw = rows.field(rec, "haul");
        let haul = Haul::parse(haul_raw)
            .ok_or_else(|| rows.parse_err(row, "haul", format!("unknown haul {haul_raw:?}")))?;
        let class_raw = rows.field(rec, "class");
        let class = CabinClass::parse(class_raw).ok_or_else(|| {
            rows.parse_err(
                row,
                "class",
                format!("fare class must be a passenger class, got {class_raw:?}"),
            )
        })?;
        let price_raw = rows.field(rec, "price_usd");
        let price = Usd::parse(price_raw).ok_or_else(|| {
            rows.parse_err(row, "price_usd", format!("invalid price {price_raw:?}"))
        })?;
        if price.cents() <= 0 {
            return Err(rows.unit_err(row, format!("price must be > 0, got {price}")));
        }
        out.push(FareRecord {
            airline: rows.field(rec, "airline").to_string(),
            route: rows.field(rec, "route").to_string(),
            haul,
            class,
            price,
            window: rows.field(rec, "window").to_string(),
        });
    }
    Ok(out)
}

fn load_specs(path: &Path) -> Result<Vec<AircraftSpecRecord>> {
    let rows = Rows::read(path, &["aircraft", "body", "max_cycles", "max_hours"])?;
    let mut out = Vec::new();
    for (row, rec) in &rows.records {
        let row = *row;
        let body_raw = rows.field(rec, "body");
        let body = crate::types::Body::parse(body_raw)
            .ok_or_else(|| rows.parse_err(row, "body", format!("unknown body {body_raw:?}")))?;
        let max_cycles = rows.f64_field(row, rec, "max_cycles")?;
        let max_hours = rows.f64_field(row, rec, "max_hours")?;
        if max_cycles <= 0.0 {
            return Err(rows.unit_err(row, format!("max_cycles must be > 0, got {max_cycles}")));
        }
        if max_hours <= 0.0 {
            return Err(rows.unit_err(row, format!("max_hours must be > 0, got {max_hours}")));
        }
        let exit_limit = if rows.headers.iter().any(|h| h == "exit_limit") {
            rows.opt_f64_field(row, rec, "exit_limit")?
        } else {
            None
        };
        out.push(AircraftSpecRecord {
            aircraft: rows.field(rec, "aircraft").to_string(),
            body,
            max_cycles,
            max_hours,
            exit_limit,
        });
    }
    Ok(out)
}

/// Shape of the constants TOML. Every key optional; omissions fall back to
/// the defaults.
#[derive(Debug, Default, Deserialize)]
struct ConstantsFile {
    pax_body_weight_kg: Option<f64>,
    luggage_weight_kg: Option<f64>,
    kerosene_co2_per_kg_fuel: Option<f64>,
    seat_weight_kg: Option<PartialClassMap>,
    block_hours: Option<PartialHaulMap>,
    stage_length_nm: Option<PartialHaulMap>,
}

#[derive(Debug, Default, Deserialize)]
struct PartialClassMap {
    economy: Option<f64>,
    premium_economy: Option<f64>,
    business: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
struct PartialHaulMap {
    short: Option<f64>,
    long: Option<f64>,
}

/// Load constants from a TOML file on top of the defaults.
pub fn load_constants(path: &Path) -> Result<ModelConstants> {
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: display.clone(),
        source,
    })?;
    let file: ConstantsFile = toml::from_str(&text).map_err(|e| Error::Config {
        path: display.clone(),
        message: e.to_string(),
    })?;
    let mut k = ModelConstants::default();
    if let Some(v) = file.pax_body_weight_kg {
        k.pax_body_weight = v;
    }
    if let Some(v) = file.luggage_weight_kg {
        k.luggage_weight = v;
    }
    if let Some(v) = file.kerosene_co2_per_kg_fuel {
        k.kerosene_co2 = v;
    }
    if let Some(sw) = file.seat_weight_kg {
        if let Some(v) = sw.economy {
            k.seat_weights.economy = v;
        }
        if let Some(v) = sw.premium_economy {
            k.seat_weights.premium_economy = v;
        }
        if let Some(v) = sw.business {
            k.seat_weights.business = v;
        }
    }
    if let Some(b) = file.block_hours {
        if let Some(v) = b.short {
            k.block_hours.short = v;
        }
        if let Some(v) = b.long {
            k.block_hours.long = v;
        }
    }
    if let Some(s) = file.stage_length_nm {
        if let Some(v) = s.short {
            k.stage_length.short = v;
        }
        if let Some(v) = s.long {
            k.stage_length.long = v;
        }
    }
    let positive = [
        ("pax_body_weight_kg", k.pax_body_weight),
        ("luggage_weight_kg", k.luggage_weight),
        ("seat_weight_kg.economy", k.seat_weights.economy),
        (
            "seat_weight_kg.premium_economy",
            k.seat_weights.premium_economy,
        ),
        ("seat_weight_kg.business", k.seat_weights.business),
        ("block_hours.short", k.block_hours.short),
        ("block_hours.long", k.block_hours.long),
        ("stage_length_nm.short", k.stage_length.short),
        ("stage_length_nm.long", k.stage_length.long),
    ];
    for (name, v) in positive {
        if v <= 0.0 {
            return Err(Error::Config {
                path: display,
                message: format!("{name} must be positive, got {v}"),
            });
        }
    }
    Ok(k)
}

#[derive(Debug, Deserialize)]
struct ProvenanceFile {
    #[serde(default)]
    note: Vec<ProvenanceNote>,
}

/// Load all datasets into one validated bundle.
///
/// `constants_override`, when given, replaces the constants loaded from
/// `paths.constants` (or the defaults).
pub fn load_dataset(
    paths: &DataPaths,
    constants_override: Option<ModelConstants>,
) -> Result<Dataset> {
    for (label, p) in [
        ("layouts", &paths.layouts),
        ("emissions samples", &paths.samples),
        ("fares", &paths.fares),
        ("aircraft specs", &paths.specs),
    ] {
        if !p.exists() {
            return Err(Error::Io {
                path: p.display().to_string(),
                source: std::io::Error::new(
                    std::io::ErrorKind::NotFound,
                    format!("{label} file not found"),
                ),
            });
        }
    }
    let layouts = load_layouts(&paths.layouts)?;
    let samples = load_samples(&paths.samples)?;
    let fares = load_fares(&paths.fares)?;
    let specs = load_specs(&paths.specs)?;
    let constants = match constants_override {
        Some(k) => k,
        None => match &paths.constants {
            Some(p) => load_constants(p)?,
            None => ModelConstants::default(),
        },
    };
    let provenance = match &paths.provenance {
        Some(p) => {
            let display = p.display().to_string();
            let text = std::fs::read_to_string(p).map_err(|source| Error::Io {
                path: display.clone(),
                source,
            })?;
            let file: ProvenanceFile = toml::from_str(&text).map_err(|e| Error::Config {
                path: display,
                message: e.to_string(),
            })?;
            file.note
        }
        None => Vec::new(),
    };

    let dataset = Dataset {
        layouts,
        samples,
        fares,
        specs,
        constants,
        provenance,
    };

    // Referential integrity: everything modeled must have a spec.
    let known: BTreeSet<&str> = dataset.specs.iter().map(|s| s.aircraft.as_str()).collect();
    for l in &dataset.layouts {
        if !known.contains(l.aircraft.as_str()) {
            return Err(Error::Referential(format!(
                "layout references unknown aircraft {:?} ({})",
                l.aircraft, l.airline
            )));
        }
    }
    for s in &dataset.samples {
        if !known.contains(s.aircraft.as_str()) {
            return Err(Error::Referential(format!(
                "emissions sample references unknown aircraft {:?}",
                s.aircraft
            )));
        }
    }
    Ok(dataset)
}

// ------------------------------------------------------------- validation

/// Severity of a validation finding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    Info,
    Warning,
    Error,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Info => "info",
            Severity::Warning => "warning",
            Severity::Error => "error",
        }
    }
}

/// One validation finding. Report-only: the dataset is never mutated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Finding {
    pub severity: Severity,
    pub location: String,
    pub message: String,
}

/// Check the dataset for suspicious shapes. Pure: findings only.
///
/// Checks, per (aircraft, haul) sample group: emissions monotone in
/// passengers, and at least three distinct passenger counts including zero.
/// Per aircraft: the haul-consistency heuristic — zero-passenger emissions
/// on long haul must exceed short haul, otherwise the columns look
/// transposed. Fares are checked for the expected class price ordering.
pub fn validate_dataset(dataset: &Dataset) -> Vec<Finding> {
    let mut findings = Vec::new();

    let mut groups: BTreeMap<(String, Haul), Vec<&EmissionsSampleRecord>> = BTreeMap::new();
    for s in &dataset.samples {
        groups
            .entry((s.aircraft.clone(), s.haul))
            .or_default()
            .push(s);
    }

    for ((aircraft, haul), mut samples) in groups.clone() {
        let location = format!("emissions_samples {aircraft} {haul}");
        samples.sort_by_key(|a| a.passengers);
        for pair in samples.windows(2) {
            if pair[1].passengers > pair[0].passengers && pair[1].emissions < pair[0].emissions {
                findings.push(Finding {
                    severity: Severity::Warning,
                    location: location.clone(),
                    message: format!(
                        "emissions not monotone in passengers: {} kg at {} pax but {} kg at {} pax",
                        pair[0].emissions,
                        pair[0].passengers,
                        pair[1].emissions,
                        pair[1].passengers
                    ),
                });
                break;
            }
        }
        let distinct: BTreeSet<u32> = samples.iter().map(|s| s.passengers).collect();
        if distinct.len() < 3 || !distinct.contains(&0) {
            findings.push(Finding {
                severity: Severity::Warning,
                location,
                message: format!(
                    "expected at least 3 distinct passenger counts including 0, found {:?}",
                    distinct
                ),
            });
        }
    }

    // Haul-consistency heuristic over zero-passenger emissions.
    let mut zero_by_aircraft: BTreeMap<String, HaulMap<Option<f64>>> = BTreeMap::new();
    for ((aircraft, haul), samples) in &groups {
        if let Some(z) = samples.iter().find(|s| s.passengers == 0) {
            *zero_by_aircraft
                .entry(aircraft.clone())
                .or_default()
                .get_mut(*haul) = Some(z.emissions);
        }
    }
    for (aircraft, zeros) in zero_by_aircraft {
        if let (Some(short), Some(long)) = (zeros.short, zeros.long) {
            if long <= short {
                findings.push(Finding {
                    severity: Severity::Warning,
                    location: format!("emissions_samples {aircraft}"),
                    message: format!(
                        "suspected short/long column transposition: zero-passenger emissions are \
                         {long} kg on long haul but {short} kg on short haul"
                    ),
                });
            }
        }
    }

    // Shipped-data expectation on fare ordering (a data check, not a law).
    for haul in Haul::ALL {
        let mean = |class: CabinClass| -> Option<f64> {
            let prices: Vec<f64> = dataset
                .fares
                .iter()
                .filter(|f| f.haul == haul && f.class == class)
                .map(|f| f.price.as_f64())
                .collect();
            (!prices.is_empty()).then(|| prices.iter().sum::<f64>() / prices.len() as f64)
        };
        if let (Some(e), Some(p), Some(b)) = (
            mean(CabinClass::Economy),
            mean(CabinClass::PremiumEconomy),
            mean(CabinClass::Business),
        ) {
            if !(b >= p && p >= e) {
                findings.push(Finding {
                    severity: Severity::Warning,
                    location: format!("fares {haul}"),
                    message: format!(
                        "mean prices not ordered business >= premium_economy >= economy \
                         ({b:.2} / {p:.2} / {e:.2})"
                    ),
                });
            }
        }
    }

    findings
}
