//! Plain-text algebra files.
//!
//! A file holds one algebra:
//!
//! ```text
//! # optional comments
//! elements: 0 a b 1
//! top: 1
//! meet:
//! 0 0 0 0
//! 0 a 0 a
//! 0 0 b b
//! 0 a b 1
//! sim:
//! ...
//! bsim:
//! ...
//! ```
//!
//! Element names are arbitrary non-whitespace tokens not containing `#`.
//! Everything from a `#` to the end of the line is a comment. Table cells
//! are element names; row `i`, column `j` of a table holds `T(i, j)`.
//!
//! Parsing is purely structural; axiom checking is a separate step.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::algebra::FiniteEqAlgebra;
use crate::error::{Error, Result};
use crate::translate::FiniteBckAlgebra;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// A non-comment token and the 1-based line it came from.
struct Tok<'a> {
    line: usize,
    text: &'a str,
}

fn tokenize(text: &str) -> Vec<Tok<'_>> {
    let mut toks = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        for word in body.split_whitespace() {
            toks.push(Tok { line: idx + 1, text: word });
        }
    }
    toks
}

const BLOCKS: [&str; 5] = ["elements:", "top:", "meet:", "sim:", "bsim:"];

/// Parse one algebra file. Reports the first problem with its line number.
pub fn parse_algebra(text: &str) -> Result<FiniteEqAlgebra> {
    let toks = tokenize(text);
    let mut pos = 0usize;

    let expect_label = |pos: &mut usize, label: &str| -> Result<()> {
        match toks.get(*pos) {
            Some(t) if t.text == label => {
                *pos += 1;
                Ok(())
            }
            Some(t) => Err(parse_err(
                t.line,
                format!("expected `{label}`, found `{}`", t.text),
            )),
            None => Err(parse_err(
                toks.last().map_or(1, |t| t.line),
                format!("missing `{label}` block"),
            )),
        }
    };

    expect_label(&mut pos, "elements:")?;
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<&str, usize> = HashMap::new();
    while let Some(t) = toks.get(pos) {
        if BLOCKS.contains(&t.text) {
            break;
        }
        if index.insert(t.text, names.len()).is_some() {
            return Err(parse_err(t.line, format!("duplicate element name `{}`", t.text)));
        }
        names.push(t.text.to_string());
        pos += 1;
    }
    if names.is_empty() {
        return Err(parse_err(1, "`elements:` declares no names"));
    }
    let n = names.len();

    expect_label(&mut pos, "top:")?;
    let top = match toks.get(pos) {
        Some(t) => *index
            .get(t.text)
            .ok_or_else(|| parse_err(t.line, format!("unknown top element `{}`", t.text)))?,
        None => return Err(parse_err(toks.last().map_or(1, |t| t.line), "missing top element")),
    };
    pos += 1;

    let parse_table = |pos: &mut usize, label: &str| -> Result<Vec<Vec<usize>>> {
        expect_label(pos, label)?;
        let mut table = Vec::with_capacity(n);
        for row in 0..n {
            let mut cells = Vec::with_capacity(n);
            let mut row_line = None;
            for col in 0..n {
                let t = toks.get(*pos).ok_or_else(|| {
                    parse_err(
                        toks.last().map_or(1, |t| t.line),
                        format!("`{label}` table ends inside row {row}"),
                    )
                })?;
                if BLOCKS.contains(&t.text) || t.line != *row_line.get_or_insert(t.line) {
                    return Err(parse_err(
                        row_line.unwrap_or(t.line),
                        format!(
                            "`{label}` row {row} has {col} cells, expected {n}"
                        ),
                    ));
                }
                let v = *index.get(t.text).ok_or_else(|| {
                    parse_err(t.line, format!("unknown element `{}` in `{label}` table", t.text))
                })?;
                cells.push(v);
                *pos += 1;
            }
            // A row longer than n would shift every later cell; catch it here.
            if let (Some(t), Some(line)) = (toks.get(*pos), row_line) {
                if t.line == line && row + 1 < n {
                    return Err(parse_err(
                        line,
                        format!("`{label}` row {row} has more than {n} cells"),
                    ));
                }
            }
            table.push(cells);
        }
        Ok(table)
    };

    let meet = parse_table(&mut pos, "meet:")?;
    let sim = parse_table(&mut pos, "sim:")?;
    let bsim = parse_table(&mut pos, "bsim:")?;

    if let Some(t) = toks.get(pos) {
        return Err(parse_err(t.line, format!("unexpected trailing token `{}`", t.text)));
    }

    let alg = FiniteEqAlgebra { n, names, top, meet, sim, bsim };
    alg.check_structure()?;
    Ok(alg)
}

fn render_table(out: &mut String, label: &str, names: &[String], table: &[Vec<usize>]) {
    let width = names.iter().map(|s| s.len()).max().unwrap_or(1);
    let _ = writeln!(out, "{label}:");
    for row in table {
        let line: Vec<String> =
            row.iter().map(|&v| format!("{:width$}", names[v])).collect();
        let _ = writeln!(out, "{}", line.join(" ").trim_end());
    }
}

/// Serialize an algebra in the file format accepted by [`parse_algebra`].
pub fn serialize_algebra(alg: &FiniteEqAlgebra) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "elements: {}", alg.names.join(" "));
    let _ = writeln!(out, "top: {}", alg.names[alg.top]);
    render_table(&mut out, "meet", &alg.names, &alg.meet);
    render_table(&mut out, "sim", &alg.names, &alg.sim);
    render_table(&mut out, "bsim", &alg.names, &alg.bsim);
    out
}

/// Serialize a BCK structure for display; the `arrow:`/`squig:` blocks replace
/// `sim:`/`bsim:`, so the output is not an algebra file.
pub fn serialize_bck(b: &FiniteBckAlgebra) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "elements: {}", b.names.join(" "));
    let _ = writeln!(out, "top: {}", b.names[b.top]);
    render_table(&mut out, "meet", &b.names, &b.meet);
    render_table(&mut out, "arrow", &b.names, &b.arrow);
    render_table(&mut out, "squig", &b.names, &b.squig);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::chain;
    use crate::algebra::fixtures::{diamond, point};
    use proptest::prelude::*;

    #[test]
    fn parses_diamond_fixture_text() {
        let text = "\
# four-element fixture
elements: 0 a b 1
top: 1
meet:
0 0 0 0
0 a 0 a
0 0 b b
0 a b 1
sim:
1 b a 0
1 1 a a
1 b 1 b
1 1 1 1
bsim:
1 1 1 1
b 1 b 1
a a 1 1
0 a b 1
";
        let alg = parse_algebra(text).unwrap();
        assert_eq!(alg, diamond());
        assert_eq!(alg.sim(0, 1), 2, "sim(0, a) = b");
    }

    #[test]
    fn parses_one_element_file() {
        let alg = parse_algebra("elements: 1\ntop: 1\nmeet:\n1\nsim:\n1\nbsim:\n1\n").unwrap();
        assert_eq!(alg, point());
    }

    #[test]
    fn ragged_row_is_reported_with_line() {
        let text = "\
elements: 0 a b 1
top: 1
meet:
0 0 0 0
0 a 0 a
0 0 b b
0 a b 1
sim:
1 b a
1 1 a a
1 b 1 b
1 1 1 1
bsim:
1 1 1 1
b 1 b 1
a a 1 1
0 a b 1
";
        match parse_algebra(text) {
            Err(crate::error::Error::Parse { line, msg }) => {
                assert_eq!(line, 9);
                assert!(msg.contains("row 0"), "{msg}");
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_names_unknown_cells_and_missing_blocks() {
        assert!(matches!(
            parse_algebra("elements: x x\ntop: x"),
            Err(crate::error::Error::Parse { line: 1, .. })
        ));
        let missing = parse_algebra("elements: 1\ntop: 1\nmeet:\n1\nsim:\n1\n");
        assert!(matches!(missing, Err(crate::error::Error::Parse { .. })));
        let unknown = parse_algebra("elements: 1\ntop: 1\nmeet:\nq\nsim:\n1\nbsim:\n1\n");
        match unknown {
            Err(crate::error::Error::Parse { line, msg }) => {
                assert_eq!(line, 4);
                assert!(msg.contains("unknown element `q`"), "{msg}");
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn comments_and_blank_lines_are_ignored()  {
        let text = "# header\n\nelements: 1 # trailing\n\ntop: 1\nmeet:\n1\nsim:\n1\nbsim:\n1\n";
        assert_eq!(parse_algebra(text).unwrap(), point());
    }

    #[test]
    fn round_trips_fixtures() {
        for alg in [diamond(), point(), chain(5)] {
            assert_eq!(parse_algebra(&serialize_algebra(&alg)).unwrap(), alg);
        }
    }

    proptest! {
        // Round-trip on arbitrary well-shaped tables: the format carries raw
        // table data, valid algebra or not.
        #[test]
        fn round_trips_arbitrary_tables(n in 1usize..6, seed in any::<u64>()) {
            let mut state = seed | 1;
            let mut next = move |m: usize| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 33) as usize % m
            };
            let table = |next: &mut dyn FnMut(usize) -> usize| {
                (0..n).map(|_| (0..n).map(|_| next(n)).collect()).collect::<Vec<Vec<usize>>>()
            };
            let alg = FiniteEqAlgebra {
                n,
                names: (0..n).map(|i| format!("e{i}")).collect(),
                top: next(n),
                meet: table(&mut next),
                sim: table(&mut next),
                bsim: table(&mut next),
            };
            prop_assert_eq!(parse_algebra(&serialize_algebra(&alg)).unwrap(), alg);
        }
    }
}
