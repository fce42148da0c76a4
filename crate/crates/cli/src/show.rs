//! Human-readable renderings. Structure lines start with `;` so the text
//! output of `show` parses back as the same shape.

use std::fmt::Write;

use cellrook::analysis::{Check, CorpusReport};
use cellrook::geometry::{format, Run};
use cellrook::rook;
use cellrook::{Cell, CellCollection};
use serde_json::json;

fn cell_list(cells: &[Cell]) -> String {
    let parts: Vec<String> = cells.iter().map(Cell::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn run_list(runs: &[Run]) -> String {
    let parts: Vec<String> = runs
        .iter()
        .map(|r| {
            let cells: Vec<Cell> = r.cells().collect();
            format!("{}..{}", cells[0], cells[cells.len() - 1])
        })
        .collect();
    parts.join(" ")
}

fn structure(p: &CellCollection) -> Vec<String> {
    let d = p.decomposition();
    let mut lines = vec![
        format!("rank {}, {}x{}", p.rank(), p.width(), p.height()),
        format!("rows: {}", run_list(p.horizontal_runs())),
        format!("columns: {}", run_list(p.vertical_runs())),
        "maximal rectangles:".to_string(),
    ];
    for (i, r) in d.rects.iter().enumerate() {
        lines.push(format!("  B{i} {r}"));
    }
    lines.push("residues:".to_string());
    for res in d.residues.iter().filter(|r| !r.is_empty()) {
        let shape = match res.gluing() {
            Ok(g) => format!("glues to {}x{}", g.width(), g.height()),
            Err(_) => "not a grid".to_string(),
        };
        lines.push(format!("  B{} {} {shape}", res.rect_index, cell_list(&res.cells)));
    }
    let squares: Vec<String> = d
        .stable_squares()
        .iter()
        .filter_map(|s| s.gluing.as_ref().filter(|g| g.is_square()).map(|g| format!("B{}:{}", s.rect_index, g.width())))
        .collect();
    lines.push(format!("stable squares: {}", squares.join(" ")));
    let stability = d.domino_stability(p, Default::default());
    lines.push(format!("domino-stable: {}", stability.stable));
    if let Some(w) = stability.witness {
        lines.push(format!("witness: {w}"));
    }
    lines
}

pub fn text(p: &CellCollection) -> String {
    let mut out = format::to_grid(p);
    for line in structure(p) {
        writeln!(out, "; {line}").expect("write to string");
    }
    out
}

pub fn coords(p: &CellCollection) -> String {
    let mut out = String::new();
    for line in structure(p) {
        writeln!(out, "; {line}").expect("write to string");
    }
    out + &format::to_coords(p)
}

pub fn json(p: &CellCollection) -> String {
    let d = p.decomposition();
    let stability = d.domino_stability(p, Default::default());
    let value = json!({
        "cells": p.cells().iter().map(|c| [c.x, c.y]).collect::<Vec<_>>(),
        "width": p.width(),
        "height": p.height(),
        "rows": p.horizontal_runs().iter().map(|r| json!({"anchor": r.anchor, "length": r.length})).collect::<Vec<_>>(),
        "columns": p.vertical_runs().iter().map(|r| json!({"anchor": r.anchor, "length": r.length})).collect::<Vec<_>>(),
        "maximal_rectangles": d.rects,
        "residues": d.residues,
        "stable_squares": d.stable_squares(),
        "rook_number": rook::rook_number(p),
        "domino_stable": stability.stable,
        "witness": stability.witness,
    });
    value.to_string()
}

pub fn corpus_summary(r: &CorpusReport) -> String {
    let mut out = String::new();
    writeln!(out, "total: {}", r.total).unwrap();
    writeln!(out, "domino-stable: {}", r.domino_stable).unwrap();
    writeln!(out, "palindromic: {}", r.palindromic).unwrap();
    writeln!(out, "non-grid residues: {}", r.non_grid).unwrap();
    for check in Check::ALL {
        let t = r.checks.get(&check).copied().unwrap_or_default();
        writeln!(out, "{check}: pass {} fail {} skipped {}", t.pass, t.fail, t.skipped).unwrap();
    }
    if !r.alignment_disagreements.is_empty() {
        writeln!(out, "alignment disagreements: {}", r.alignment_disagreements.len()).unwrap();
        for grid in &r.alignment_disagreements {
            out.push_str(grid);
            out.push('\n');
        }
    }
    for f in &r.failures {
        writeln!(out, "failure: {}", f.to_json_line()).unwrap();
    }
    writeln!(out, "failures: {}", r.failures.len()).unwrap();
    out
}
