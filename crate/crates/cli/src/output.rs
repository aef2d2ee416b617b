//! JSON rendering. All integers and rationals are decimal strings, so
//! values survive any JSON parser without precision loss.

use serde_json::{json, Value};

use tristrip::{AsymptoticsRow, Int, Method, StripComplex, TileStats};

pub(crate) fn stats_json(complex: &StripComplex, method: Method, stats: &TileStats<Int>) -> Value {
    json!({
        "name": complex.name(),
        "cells": complex.cell_count(),
        "method": method.to_string(),
        "tilings": stats.tilings.to_string(),
        "totalTiles": stats.total_tiles.to_string(),
        "smallTiles": stats.small_tiles.to_string(),
        "largeTiles": stats.large_tiles.to_string(),
    })
}

pub(crate) fn limits_json(rows: &[AsymptoticsRow]) -> Value {
    let rows: Vec<Value> = rows
        .iter()
        .map(|row| {
            json!({
                "n": row.n,
                "phiOverH": row.phi_over_h.to_string(),
                "qOverH": row.q_over_h.to_string(),
                "thetaOverP": row.theta_over_p.to_string(),
                "rOverP": row.r_over_p.to_string(),
                "gapH": row.gap_h.to_string(),
                "gapP": row.gap_p.to_string(),
            })
        })
        .collect();
    json!({ "rows": rows })
}
