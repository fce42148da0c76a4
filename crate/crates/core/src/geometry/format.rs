//! Text, coordinate and JSON encodings of a collection of cells.
//!
//! Grid text lists the top row first, `#` for a cell and `.` for a gap;
//! trailing dots may be omitted. Blank lines and lines starting with `;` are
//! ignored in the grid and coordinate formats.

use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Cell, CellCollection};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeFormat {
    Grid,
    Coords,
    Json,
}

impl FromStr for ShapeFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "grid" | "text" => Ok(ShapeFormat::Grid),
            "coords" | "coordinates" => Ok(ShapeFormat::Coords),
            "json" => Ok(ShapeFormat::Json),
            other => Err(format!("unknown shape format `{other}` (expected grid|coords|json)")),
        }
    }
}

impl ShapeFormat {
    pub fn from_extension(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()? {
            "txt" | "grid" | "shape" => Some(ShapeFormat::Grid),
            "xy" | "coords" => Some(ShapeFormat::Coords),
            "json" => Some(ShapeFormat::Json),
            _ => None,
        }
    }

    /// Guess from the first significant character.
    pub fn detect(text: &str) -> Option<Self> {
        let first = significant_lines(text).next()?.1.trim_start().chars().next()?;
        match first {
            '#' | '.' => Some(ShapeFormat::Grid),
            '{' => Some(ShapeFormat::Json),
            c if c.is_ascii_digit() || c == '-' || c == '+' => Some(ShapeFormat::Coords),
            _ => None,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonShape {
    cells: Vec<[i32; 2]>,
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with(';'))
}

/// Parse a shape, detecting the format when `format` is `None`.
pub fn parse(text: &str, format: Option<ShapeFormat>) -> Result<CellCollection> {
    let format = match format {
        Some(f) => f,
        None => ShapeFormat::detect(text).ok_or_else(|| Error::Parse {
            line: 1,
            message: "cannot detect shape format (expected `#`/`.` grid, coordinates or JSON)".into(),
        })?,
    };
    match format {
        ShapeFormat::Grid => parse_grid(text),
        ShapeFormat::Coords => parse_coords(text),
        ShapeFormat::Json => parse_json(text),
    }
}

pub fn parse_grid(text: &str) -> Result<CellCollection> {
    let lines: Vec<(usize, &str)> = significant_lines(text).collect();
    let height = lines.len() as i32;
    let mut cells = Vec::new();
    for (row, (line_no, line)) in lines.iter().enumerate() {
        let y = height - row as i32;
        for (col, ch) in line.chars().enumerate() {
            match ch {
                '#' => cells.push(Cell::new(col as i32 + 1, y)),
                '.' => {}
                other => {
                    return Err(Error::Parse {
                        line: *line_no,
                        message: format!("unexpected character `{other}` in grid"),
                    })
                }
            }
        }
    }
    CellCollection::new(cells)
}

pub fn parse_coords(text: &str) -> Result<CellCollection> {
    let mut cells = Vec::new();
    for (line_no, line) in significant_lines(text) {
        let fields: Vec<&str> =
            line.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()).collect();
        let [x, y] = fields[..] else {
            return Err(Error::Parse { line: line_no, message: format!("expected `x y`, got `{line}`") });
        };
        let num = |s: &str| {
            s.parse::<i32>()
                .map_err(|e| Error::Parse { line: line_no, message: format!("bad coordinate `{s}`: {e}") })
        };
        cells.push(Cell::new(num(x)?, num(y)?));
    }
    CellCollection::new(cells)
}

pub fn parse_json(text: &str) -> Result<CellCollection> {
    let shape: JsonShape = serde_json::from_str(text)
        .map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })?;
    CellCollection::new(shape.cells.into_iter().map(|[x, y]| Cell::new(x, y)))
}

/// Full-width grid rows, top row first, one per line.
pub fn to_grid(p: &CellCollection) -> String {
    let mut out = String::with_capacity((p.width() as usize + 1) * p.height() as usize);
    for y in (1..=p.height() as i32).rev() {
        for x in 1..=p.width() as i32 {
            out.push(if p.contains(Cell::new(x, y)) { '#' } else { '.' });
        }
        out.push('\n');
    }
    out
}

pub fn to_coords(p: &CellCollection) -> String {
    p.cells().iter().map(|c| format!("{} {}\n", c.x, c.y)).collect()
}

pub fn to_json(p: &CellCollection) -> String {
    let shape = JsonShape { cells: p.cells().iter().map(|c| [c.x, c.y]).collect() };
    serde_json::to_string(&shape).expect("shape serializes")
}

pub fn write(p: &CellCollection, format: ShapeFormat) -> String {
    match format {
        ShapeFormat::Grid => to_grid(p),
        ShapeFormat::Coords => to_coords(p),
        ShapeFormat::Json => to_json(p) + "\n",
    }
}
