//! Shared domain vocabulary: hauls, cabin classes, body classes, exact USD
//! amounts, and small fixed-key maps used throughout the model.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Stage-length category of a flight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Haul {
    Short,
    Long,
}

impl Haul {
    pub const ALL: [Haul; 2] = [Haul::Short, Haul::Long];

    pub fn as_str(self) -> &'static str {
        match self {
            Haul::Short => "short",
            Haul::Long => "long",
        }
    }

    pub fn parse(s: &str) -> Option<Haul> {
        match s {
            "short" => Some(Haul::Short),
            "long" => Some(Haul::Long),
            _ => None,
        }
    }
}

impl fmt::Display for Haul {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Passenger cabin class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CabinClass {
    Economy,
    PremiumEconomy,
    Business,
}

impl CabinClass {
    pub const ALL: [CabinClass; 3] = [
        CabinClass::Economy,
        CabinClass::PremiumEconomy,
        CabinClass::Business,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CabinClass::Economy => "economy",
            CabinClass::PremiumEconomy => "premium_economy",
            CabinClass::Business => "business",
        }
    }

    pub fn parse(s: &str) -> Option<CabinClass> {
        match s {
            "economy" => Some(CabinClass::Economy),
            "premium_economy" => Some(CabinClass::PremiumEconomy),
            "business" => Some(CabinClass::Business),
            _ => None,
        }
    }
}

impl fmt::Display for CabinClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A spatial zone in a cabin layout: a passenger class or the service area
/// (galleys, lavatories, aisles, cockpit).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Zone {
    Cabin(CabinClass),
    ServiceZone,
}

impl Zone {
    pub fn as_str(self) -> &'static str {
        match self {
            Zone::Cabin(c) => c.as_str(),
            Zone::ServiceZone => "service_zone",
        }
    }

    pub fn parse(s: &str) -> Option<Zone> {
        if s == "service_zone" {
            return Some(Zone::ServiceZone);
        }
        CabinClass::parse(s).map(Zone::Cabin)
    }
}

/// Airframe body class. Body-class figures are means of per-aircraft
/// computed results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Body {
    Narrow,
    Wide,
}

impl Body {
    pub const ALL: [Body; 2] = [Body::Narrow, Body::Wide];

    pub fn as_str(self) -> &'static str {
        match self {
            Body::Narrow => "narrow",
            Body::Wide => "wide",
        }
    }

    pub fn parse(s: &str) -> Option<Body> {
        match s {
            "narrow" => Some(Body::Narrow),
            "wide" => Some(Body::Wide),
            _ => None,
        }
    }
}

impl fmt::Display for Body {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How per-passenger emissions share out the service-zone term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AllocationStrategy {
    /// Service term divided by the aircraft's total seats (the stated
    /// formula; default).
    #[default]
    AsWritten,
    /// Diagnostic alternate: service term divided by the class's own seats.
    ServiceToClassSeats,
}

impl AllocationStrategy {
    pub fn as_str(self) -> &'static str {
        match self {
            AllocationStrategy::AsWritten => "as-written",
            AllocationStrategy::ServiceToClassSeats => "service-to-class-seats",
        }
    }

    pub fn parse(s: &str) -> Option<AllocationStrategy> {
        match s {
            "as-written" => Some(AllocationStrategy::AsWritten),
            "service-to-class-seats" => Some(AllocationStrategy::ServiceToClassSeats),
            _ => None,
        }
    }
}

/// Scenario label for the default 3-class layout.
pub const BASELINE: &str = "baseline";
/// Scenario label for the all-economy refit.
pub const ALL_ECONOMY: &str = "all_economy";

/// A value per passenger class. Fixed keys keep iteration order (and hence
/// every export) deterministic.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ClassMap<T> {
    pub economy: T,
    pub premium_economy: T,
    pub business: T,
}

impl<T> ClassMap<T> {
    pub fn from_fn(mut f: impl FnMut(CabinClass) -> T) -> Self {
        ClassMap {
            economy: f(CabinClass::Economy),
            premium_economy: f(CabinClass::PremiumEconomy),
            business: f(CabinClass::Business),
        }
    }

    pub fn get(&self, class: CabinClass) -> &T {
        match class {
            CabinClass::Economy => &self.economy,
            CabinClass::PremiumEconomy => &self.premium_economy,
            CabinClass::Business => &self.business,
        }
    }

    pub fn get_mut(&mut self, class: CabinClass) -> &mut T {
        match class {
            CabinClass::Economy => &mut self.economy,
            CabinClass::PremiumEconomy => &mut self.premium_economy,
            CabinClass::Business => &mut self.business,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (CabinClass, &T)> {
        CabinClass::ALL.iter().map(move |&c| (c, self.get(c)))
    }

    pub fn map<U>(&self, mut f: impl FnMut(CabinClass, &T) -> U) -> ClassMap<U> {
        ClassMap::from_fn(|c| f(c, self.get(c)))
    }
}

impl ClassMap<f64> {
    /// Sum in fixed class order (economy, premium economy, business).
    pub fn sum(&self) -> f64 {
        self.economy + self.premium_economy + self.business
    }
}

/// A value per haul.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct HaulMap<T> {
    pub short: T,
    pub long: T,
}

impl<T> HaulMap<T> {
    pub fn from_fn(mut f: impl FnMut(Haul) -> T) -> Self {
        HaulMap {
            short: f(Haul::Short),
            long: f(Haul::Long),
        }
    }

    pub fn get(&self, haul: Haul) -> &T {
        match haul {
            Haul::Short => &self.short,
            Haul::Long => &self.long,
        }
    }

    pub fn get_mut(&mut self, haul: Haul) -> &mut T {
        match haul {
            Haul::Short => &mut self.short,
            Haul::Long => &mut self.long,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Haul, &T)> {
        Haul::ALL.iter().map(move |&h| (h, self.get(h)))
    }
}

/// An exact USD amount stored as integer cents. Prices are ingested as
/// exact two-decimal values; downstream arithmetic runs in f64.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Usd(i64);

impl Usd {
    pub fn from_cents(cents: i64) -> Usd {
        Usd(cents)
    }

    pub fn cents(self) -> i64 {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 100.0
    }

    /// Parse a plain decimal with at most two fractional digits, exactly.
    pub fn parse(s: &str) -> Option<Usd> {
        let s = s.trim();
        let (sign, digits) = match s.strip_prefix('-') {
            Some(rest) => (-1i64, rest),
            None => (1i64, s),
        };
        let (int_part, frac_part) = match digits.split_once('.') {
            Some((i, f)) => (i, f),
            None => (digits, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        if frac_part.len() > 2 {
            return None;
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return None;
        }
        let int: i64 = if int_part.is_empty() {
            0
        } else {
            int_part.parse().ok()?
        };
        let mut frac: i64 = if frac_part.is_empty() {
            0
        } else {
            frac_part.parse().ok()?
        };
        if frac_part.len() == 1 {
            frac *= 10;
        }
        Some(Usd(sign * (int.checked_mul(100)? + frac)))
    }
}

impl fmt::Display for Usd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.0 < 0 { "-" } else { "" };
        let abs = self.0.abs();
        write!(f, "{}{}.{:02}", sign, abs / 100, abs % 100)
    }
}

impl Serialize for Usd {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Usd {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Usd, D::Error> {
        let s = String::deserialize(d)?;
        Usd::parse(&s).ok_or_else(|| serde::de::Error::custom(format!("invalid USD amount {s:?}")))
    }
}

/// Round half away from zero to `decimals` places; used for presentation.
pub fn round_half_away(value: f64, decimals: u32) -> f64 {
    let scale = 10f64.powi(decimals as i32);
    (value * scale).round() / scale
}

/// Fixed-decimal string with half-away-from-zero rounding, built from
/// integer arithmetic so formatting never re-rounds.
pub fn format_fixed(value: f64, decimals: u32) -> String {
    let scale = 10f64.powi(decimals as i32);
    let scaled = (value * scale).round() as i128;
    let sign = if scaled < 0 { "-" } else { "" };
    let abs = scaled.unsigned_abs();
    let base = 10u128.pow(decimals);
    if decimals == 0 {
        return format!("{sign}{abs}");
    }
    format!(
        "{sign}{}.{:0width$}",
        abs / base,
        abs % base,
        width = decimals as usize
    )
}
