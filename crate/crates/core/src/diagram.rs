//! Dot-diagram rendering of weighted overpartitions.
//!
//! Each part becomes one row: a filled marker per unit of the value, then
//! `w = i - length + 1` hollow markers when the part is overlined. A zero
//! part is marked with the empty-set glyph, so an overlined zero shows the
//! glyph followed by its weight row. When `j` is supplied, the companion
//! rectangle with `j - length` rows of width `i - length` is drawn beside
//! the diagram.

use crate::error::{Error, Result};
use crate::partition::Overpartition;

/// The three markers used in a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Glyphs {
    pub unit: char,
    pub hollow: char,
    pub empty: char,
}

impl Glyphs {
    /// ASCII markers: `*` units, `o` weight dots, `@` for the zero part.
    pub fn ascii() -> Self {
        Glyphs {
            unit: '*',
            hollow: 'o',
            empty: '@',
        }
    }

    /// Unicode markers: `●` units, `○` weight dots, `∅` for the zero part.
    pub fn unicode() -> Self {
        Glyphs {
            unit: '●',
            hollow: '○',
            empty: '∅',
        }
    }
}

fn part_row(value: u64, overlined: bool, weight: u64, glyphs: Glyphs) -> String {
    let mut row = String::new();
    if value == 0 {
        row.push(glyphs.empty);
    } else {
        for _ in 0..value {
            row.push(glyphs.unit);
        }
    }
    if overlined {
        for _ in 0..weight {
            row.push(glyphs.hollow);
        }
    }
    row
}

/// Renders the diagram of `lambda` with overline weight `i - length + 1`.
///
/// With `j` supplied the companion rectangle is rendered beside the diagram
/// (requires `length <= j <= i`); the empty overpartition alone yields the
/// empty string.
pub fn render(lambda: &Overpartition, i: u64, j: Option<u64>, glyphs: Glyphs) -> Result<String> {
    let length = lambda.len() as u64;
    if length > i {
        return Err(Error::ParameterRange(format!(
            "diagram weight needs length <= i, got length={length}, i={i}"
        )));
    }
    let weight = i - length + 1;
    let rows: Vec<String> = lambda
        .parts()
        .iter()
        .map(|part| part_row(part.value, part.overlined, weight, glyphs))
        .collect();

    let companion: Vec<String> = match j {
        None => Vec::new(),
        Some(j) => {
            if j > i || length > j {
                return Err(Error::ParameterRange(format!(
                    "companion rectangle needs length <= j <= i, got length={length}, j={j}, i={i}"
                )));
            }
            let width = (i - length) as usize;
            let row: String = std::iter::repeat_n(glyphs.unit, width).collect();
            (0..(j - length)).map(|_| row.clone()).collect()
        }
    };

    if companion.is_empty() {
        return Ok(rows.join("\n"));
    }
    let left_width = rows
        .iter()
        .map(|row| row.chars().count())
        .max()
        .unwrap_or(0);
    let mut lines = Vec::with_capacity(rows.len().max(companion.len()));
    for index in 0..rows.len().max(companion.len()) {
        let left = rows.get(index).map(String::as_str).unwrap_or("");
        let right = companion.get(index).map(String::as_str).unwrap_or("");
        let padding = left_width - left.chars().count();
        let mut line = String::from(left);
        for _ in 0..padding {
            line.push(' ');
        }
        line.push_str("   ");
        line.push_str(right);
        lines.push(line.trim_end().to_string());
    }
    Ok(lines.join("\n"))
}
