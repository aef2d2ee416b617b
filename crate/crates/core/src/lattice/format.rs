//! Line-oriented text format for custom complexes.
//!
//! ```text
//! # optional comment, '#' starts a comment anywhere on a line
//! name my_strip
//! row0 0..4        # inclusive interval, or `row0 empty`
//! row1 0..3
//! add 1,7          # extra cell (row,index)
//! del 0,2          # removed after intervals and adds
//! ```
//!
//! Both row lines are optional and default to empty. `del` lines apply
//! after all intervals and `add`s, whatever their position in the file.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

use super::{StripComplex, TriCell};

fn parse_index(tok: &str, line: usize, what: &str) -> Result<u32> {
    let v: i64 = tok
        .trim()
        .parse()
        .map_err(|_| Error::parse(line, format!("bad {what} '{tok}'")))?;
    if v < 0 {
        return Err(Error::parse(line, format!("negative {what} {v}")));
    }
    u32::try_from(v).map_err(|_| Error::parse(line, format!("{what} {v} out of range")))
}

fn parse_cell(arg: &str, line: usize) -> Result<TriCell> {
    let (row_tok, idx_tok) = arg
        .split_once(',')
        .ok_or_else(|| Error::parse(line, format!("expected <row>,<index>, got '{arg}'")))?;
    let row = parse_index(row_tok, line, "row")?;
    if row > 1 {
        return Err(Error::parse(line, format!("row must be 0 or 1, got {row}")));
    }
    let index = parse_index(idx_tok, line, "index")?;
    Ok(TriCell::new(row as u8, index))
}

fn parse_interval(arg: &str, line: usize) -> Result<Option<(u32, u32)>> {
    if arg == "empty" {
        return Ok(None);
    }
    let (a_tok, b_tok) = arg
        .split_once("..")
        .ok_or_else(|| Error::parse(line, format!("expected <a>..<b> or 'empty', got '{arg}'")))?;
    let a = parse_index(a_tok, line, "interval start")?;
    let b = parse_index(b_tok, line, "interval end")?;
    if a > b {
        return Err(Error::parse(line, format!("reversed interval {a}..{b}")));
    }
    Ok(Some((a, b)))
}

pub fn parse_complex(text: &str) -> Result<StripComplex> {
    let mut name = String::new();
    let mut rows: [Option<Option<(u32, u32)>>; 2] = [None, None];
    let mut adds: Vec<(usize, TriCell)> = Vec::new();
    let mut dels: Vec<TriCell> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (directive, arg) = match content.split_once(char::is_whitespace) {
            Some((d, a)) => (d, a.trim()),
            None => (content, ""),
        };
        match directive {
            "name" => {
                if arg.is_empty() || arg.split_whitespace().count() != 1 {
                    return Err(Error::parse(line, "name takes one token"));
                }
                name = arg.to_string();
            }
            "row0" | "row1" => {
                let r = if directive == "row0" { 0 } else { 1 };
                if rows[r].is_some() {
                    return Err(Error::parse(line, format!("duplicate {directive} line")));
                }
                rows[r] = Some(parse_interval(arg, line)?);
            }
            "add" => adds.push((line, parse_cell(arg, line)?)),
            "del" => dels.push(parse_cell(arg, line)?),
            other => {
                return Err(Error::parse(line, format!("unknown directive '{other}'")));
            }
        }
    }

    let mut cells = BTreeSet::new();
    for (r, row) in rows.iter().enumerate() {
        if let Some(Some((a, b))) = row {
            for i in *a..=*b {
                cells.insert(TriCell::new(r as u8, i));
            }
        }
    }
    for (line, cell) in adds {
        if !cells.insert(cell) {
            return Err(Error::parse(
                line,
                format!("duplicate cell ({},{})", cell.row(), cell.index()),
            ));
        }
    }
    for cell in dels {
        cells.remove(&cell);
    }
    Ok(StripComplex::new(name, cells))
}

/// Canonical text form: per-row covering interval plus `del` lines for
/// the gaps. `parse(serialize(c)) == c` for every complex.
pub fn serialize_complex(complex: &StripComplex) -> String {
    let mut out = String::new();
    if !complex.name().is_empty() {
        out.push_str(&format!("name {}\n", complex.name()));
    }
    let mut dels: Vec<TriCell> = Vec::new();
    for row in 0..2u8 {
        let indices: Vec<u32> = complex
            .cells()
            .iter()
            .filter(|c| c.row() == row)
            .map(|c| c.index())
            .collect();
        match (indices.iter().min(), indices.iter().max()) {
            (Some(&a), Some(&b)) => {
                out.push_str(&format!("row{row} {a}..{b}\n"));
                for i in a..=b {
                    if !indices.contains(&i) {
                        dels.push(TriCell::new(row, i));
                    }
                }
            }
            _ => out.push_str(&format!("row{row} empty\n")),
        }
    }
    dels.sort_by_key(|c| (c.row(), c.index()));
    for c in dels {
        out.push_str(&format!("del {},{}\n", c.row(), c.index()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_family, FamilyId};

    #[test]
    fn interval_form_builds_h2() {
        let c = parse_complex("name h2\nrow0 0..2\nrow1 0..2").unwrap();
        assert_eq!(c.cells(), build_family(FamilyId::H, 2).unwrap().cells());
        assert_eq!(c.name(), "h2");
    }

    #[test]
    fn del_builds_p2() {
        let c = parse_complex("row0 0..2\nrow1 0..2\ndel 1,2").unwrap();
        assert_eq!(c.cells(), build_family(FamilyId::P, 2).unwrap().cells());
    }

    #[test]
    fn add_makes_disconnected_complexes() {
        let c = parse_complex("row0 0..1\nadd 1,5").unwrap();
        assert_eq!(c.cell_count(), 3);
        assert!(c.placements().is_empty());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_complex("row0 0..2\nrow1 0..2\nadd 0,1").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                message: "duplicate cell (0,1)".into()
            }
        );
        assert!(matches!(
            parse_complex("row0 -1..2"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_complex("row0 0..2\nrow0 0..4"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_complex("rows 0..2"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let c = parse_complex("# full strip\nrow0 0..2  # bottom\n\nrow1 0..2\n").unwrap();
        assert_eq!(c.cell_count(), 6);
    }

    #[test]
    fn round_trips_on_builtins() {
        for fam in FamilyId::ALL {
            for n in 1..=8 {
                let c = build_family(fam, n).unwrap();
                let text = serialize_complex(&c);
                assert_eq!(parse_complex(&text).unwrap(), c, "{fam}_{n}\n{text}");
            }
        }
    }

    #[test]
    fn serialize_is_canonical() {
        // Whatever mix of add/del produced the cells, output is interval+del.
        let a = parse_complex("row0 0..4\ndel 0,2").unwrap();
        let b = parse_complex("row0 0..1\nadd 0,3\nadd 0,4").unwrap();
        assert_eq!(a.cells(), b.cells());
        assert_eq!(serialize_complex(&a), serialize_complex(&b));
        assert_eq!(serialize_complex(&a), "row0 0..4\nrow1 empty\ndel 0,2\n");
    }
}
