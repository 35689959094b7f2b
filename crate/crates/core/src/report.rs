//! Run reports and JSON dumps for completed decompositions.

use crate::engine::Cad;
use crate::lifting::{cell_to_json, Truth};
use crate::polyring::Variable;
use std::fmt::Write as _;

/// Per-run summary: level sizes, solution count, designation, operators,
/// and phase timings.
#[derive(Clone, Debug)]
pub struct Report {
    pub level_counts: Vec<usize>,
    pub total_cells: usize,
    pub solution_cells: usize,
    pub designation: Vec<(usize, String, String)>,
    pub operators: Vec<(usize, &'static str)>,
    pub timings_ms: Vec<(&'static str, u128)>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn from_cad(cad: &Cad) -> Report {
        let level_counts = cad.level_counts();
        let total_cells = level_counts.iter().sum();
        let solution_cells = cad
            .top_cells()
            .iter()
            .filter(|c| c.truth == Truth::True)
            .count();
        let mut designation = Vec::new();
        for k in (1..=cad.nvars()).rev() {
            if let Some(ec) = cad.designation.at_level(k) {
                designation.push((
                    k,
                    ec.poly.to_text(&cad.order),
                    ec.provenance.to_string(),
                ));
            }
        }
        let mut operators = Vec::new();
        for k in (2..=cad.nvars()).rev() {
            operators.push((k, cad.operator_at(k).text()));
        }
        Report {
            level_counts,
            total_cells,
            solution_cells,
            designation,
            operators,
            timings_ms: vec![
                ("designation", cad.times.designation.as_millis()),
                ("projection", cad.times.projection.as_millis()),
                ("lifting", cad.times.lifting.as_millis()),
                ("truth", cad.times.truth.as_millis()),
            ],
            warnings: cad.warnings.clone(),
        }
    }

    pub fn render(&self, stats: bool) -> String {
        let mut out = String::new();
        let counts = self
            .level_counts
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join("/");
        let _ = writeln!(out, "cells: {counts}, solutions: {}", self.solution_cells);
        for (k, poly, prov) in &self.designation {
            let _ = writeln!(out, "designation level {k}: {poly} [{prov}]");
        }
        if stats {
            for (k, op) in &self.operators {
                let _ = writeln!(out, "operator level {k}: {op}");
            }
            for (phase, ms) in &self.timings_ms {
                let _ = writeln!(out, "time {phase}: {ms} ms");
            }
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        out
    }
}

/// Full decomposition as JSON: per level, every cell with index, sample,
/// and truth.
pub fn cad_to_json(cad: &Cad) -> serde_json::Value {
    let vars: Vec<String> = (0..cad.nvars())
        .map(|i| cad.order.name(Variable::from_index(i)).to_string())
        .collect();
    let levels: Vec<serde_json::Value> = cad
        .levels
        .iter()
        .enumerate()
        .map(|(i, cells)| {
            serde_json::json!({
                "level": i + 1,
                "cells": cells
                    .iter()
                    .map(|c| cell_to_json(c, &cad.order))
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    serde_json::json!({
        "vars": vars,
        "levels": levels,
    })
}
