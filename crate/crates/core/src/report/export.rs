//! Deterministic serialization of tables and reconciliation reports.
//!
//! Output is byte-stable: row ordering is fixed, presentation values carry
//! two decimals rounded half away from zero, and every row also carries the
//! full-precision value in a machine-readable column.

use super::reconcile::{EntryStatus, ReconciliationEntry};
use super::{DeltaTable, MetricTable};
use crate::types::format_fixed;
use serde_json::json;

/// CSV for a metric table: `body,haul,scenario,<units>,<units>_exact`.
pub fn metric_table_csv(table: &MetricTable) -> String {
    let mut out = format!("body,haul,scenario,{u},{u}_exact\n", u = table.units);
    for (body, haul, scenario, value) in table.ordered_rows() {
        out.push_str(&format!(
            "{body},{haul},{scenario},{},{}\n",
            format_fixed(value, 2),
            value
        ));
    }
    out
}

/// JSON for a metric table; rows in the same order as the CSV.
pub fn metric_table_json(table: &MetricTable) -> String {
    let rows: Vec<_> = table
        .ordered_rows()
        .into_iter()
        .map(|(body, haul, scenario, value)| {
            json!({
                "body": body,
                "haul": haul,
                "scenario": scenario,
                "value": value,
                "display": format_fixed(value, 2),
            })
        })
        .collect();
    let doc = json!({
        "metric": table.metric.as_str(),
        "units": table.units,
        "rows": rows,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("json");
    s.push('\n');
    s
}

/// CSV for a delta table:
/// `body,haul,delta_abs,delta_abs_exact,delta_rel_pct,delta_rel_pct_exact`.
pub fn delta_table_csv(table: &DeltaTable) -> String {
    let mut out =
        String::from("body,haul,delta_abs,delta_abs_exact,delta_rel_pct,delta_rel_pct_exact\n");
    for ((body, haul), cell) in &table.rows {
        let rel_pct = cell.relative * 100.0;
        out.push_str(&format!(
            "{body},{haul},{},{},{},{}\n",
            format_fixed(cell.absolute, 2),
            cell.absolute,
            format_fixed(rel_pct, 2),
            rel_pct
        ));
    }
    out
}

pub fn delta_table_json(table: &DeltaTable) -> String {
    let rows: Vec<_> = table
        .rows
        .iter()
        .map(|((body, haul), cell)| {
            json!({
                "body": body,
                "haul": haul,
                "delta_abs": cell.absolute,
                "delta_rel": cell.relative,
                "display_abs": format_fixed(cell.absolute, 2),
                "display_rel_pct": format_fixed(cell.relative * 100.0, 2),
            })
        })
        .collect();
    let doc = json!({
        "metric": table.metric.as_str(),
        "scenario": table.scenario,
        "baseline": "baseline",
        "rows": rows,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("json");
    s.push('\n');
    s
}

/// Machine-readable reconciliation report.
pub fn reconciliation_json(entries: &[ReconciliationEntry]) -> String {
    let mut s = serde_json::to_string_pretty(entries).expect("json");
    s.push('\n');
    s
}

/// Human-readable reconciliation summary: status counts, then every entry
/// that is not a plain match.
pub fn reconciliation_text(entries: &[ReconciliationEntry]) -> String {
    let count = |status: EntryStatus| entries.iter().filter(|e| e.status == status).count();
    let mut out = String::new();
    out.push_str(&format!(
        "reconciliation: {} cells | match {} | mismatch {} | known_erratum {} | non_reproducible {}\n",
        entries.len(),
        count(EntryStatus::Match),
        count(EntryStatus::Mismatch),
        count(EntryStatus::KnownErratum),
        count(EntryStatus::NonReproducible),
    ));
    for e in entries {
        if e.status == EntryStatus::Match {
            continue;
        }
        out.push_str(&format!(
            "  [{}] {} {} / {}: published {} computed {} (rel err {})\n",
            e.status.as_str(),
            e.table,
            e.row,
            e.col,
            e.reference_value,
            format_fixed(e.computed_value, 4),
            format_fixed(e.rel_error * 100.0, 3),
        ));
        if let Some(note) = &e.note {
            out.push_str(&format!("      note: {note}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::MetricKind;
    use crate::types::{Body, Haul, ALL_ECONOMY, BASELINE};
    use std::collections::BTreeMap;

    fn sample_table() -> MetricTable {
        let mut rows = BTreeMap::new();
        rows.insert((Body::Narrow, Haul::Short, BASELINE.to_string()), 15942.234);
        rows.insert(
            (Body::Narrow, Haul::Short, ALL_ECONOMY.to_string()),
            15892.415,
        );
        MetricTable {
            metric: MetricKind::EmissionsPerFlight,
            units: MetricKind::EmissionsPerFlight.units().to_string(),
            rows,
        }
    }

    #[test]
    fn csv_has_contracted_header_and_rounding() {
        let csv = metric_table_csv(&sample_table());
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "body,haul,scenario,kg_co2,kg_co2_exact"
        );
        let first = lines.next().unwrap();
        assert!(first.starts_with("narrow,short,baseline,15942.23,"));
    }

    #[test]
    fn export_is_deterministic() {
        let t = sample_table();
        assert_eq!(metric_table_csv(&t), metric_table_csv(&t));
        assert_eq!(metric_table_json(&t), metric_table_json(&t));
    }

    #[test]
    fn delta_csv_carries_percentages() {
        let d = crate::report::delta_table(&sample_table(), ALL_ECONOMY).unwrap();
        let csv = delta_table_csv(&d);
        assert!(csv.starts_with("body,haul,delta_abs,"));
        assert!(csv.contains("narrow,short,-49.82,"));
    }
}
