use std::collections::BTreeMap;
use std::fmt::Write as _;

use hurwitz_core::Triple;
use serde::Serialize;

/// One checked pair: what was realized, what the formula says and the
/// verdict of every requested method.
#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub label: String,
    pub realized: Option<Triple>,
    pub closed_form: Option<Triple>,
    pub verdicts: BTreeMap<String, String>,
    pub ok: bool,
}

impl Row {
    pub fn new(label: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            realized: None,
            closed_form: None,
            verdicts: BTreeMap::new(),
            ok: true,
        }
    }

    pub fn verdict(&mut self, method: &str, passed: bool, detail: impl Into<String>) {
        self.verdicts.insert(method.to_string(), detail.into());
        self.ok &= passed;
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub rows: Vec<Row>,
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn all_ok(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    pub fn to_text(&self) -> String {
        let show = |t: &Option<Triple>| t.map_or("-".to_string(), |t| t.to_string());
        let width = self
            .rows
            .iter()
            .map(|r| r.label.chars().count())
            .max()
            .unwrap_or(0)
            .max(6);
        let mut out = String::new();
        writeln!(
            out,
            "{:width$}  {:16}  {:16}  status",
            "family", "realized", "closed form"
        )
        .unwrap();
        for r in &self.rows {
            let notes: Vec<String> = r
                .verdicts
                .iter()
                .map(|(m, v)| format!("{m}: {v}"))
                .collect();
            writeln!(
                out,
                "{:width$}  {:16}  {:16}  {}",
                r.label,
                show(&r.realized),
                show(&r.closed_form),
                if notes.is_empty() {
                    "ok".to_string()
                } else {
                    notes.join("; ")
                }
            )
            .unwrap();
        }
        let failed = self.rows.iter().filter(|r| !r.ok).count();
        writeln!(
            out,
            "{} rows, {} failed, {:.1} ms",
            self.rows.len(),
            failed,
            self.wall_time_ms
        )
        .unwrap();
        out
    }
}
