//! The `.alg` text format: a bit-exact, diffable Cayley-table notation.
//!
//! ```text
//! kind effect
//! size 3
//! labels 0 a 1
//! table plus
//! 0 a 1
//! a 1 .
//! 1 . .
//! map comp
//! 1 a 0
//! const zero 0
//! const one 1
//! ```
//!
//! Tokens are whitespace-separated; `.` is the sole undefined marker and
//! is only legal inside partial tables (`plus`, `odot`). Blocks per kind:
//! effect → `plus`, `comp`; pseudoeffect → `plus`, `bar`, `tilde`;
//! cqrl → `join`, `meet`, `odot`, `arrow`; qrl additionally `leadsto`;
//! every kind ends with `const zero` and `const one`.
//!
//! Parsing is structural only (shapes, labels, required blocks); axiom
//! checking is a separate step. [`serialize_algebra`] emits the canonical
//! form (single spaces, blocks in the fixed order above, every line
//! newline-terminated) and `parse ∘ serialize` is the identity.

use std::fmt;

use crate::effect::EffectAlgebra;
use crate::finite::{
    Carrier, PartialBinaryTable, TotalBinaryTable, UnaryTable, UNDEFINED_TOKEN,
};
use crate::model::Algebra;
use crate::pseudoeffect::PseudoeffectAlgebra;
use crate::quasires::{lattice_tables_from_raw, CommQResLattice, QResLattice};

/// A line-addressed parse diagnostic (1-based line numbers).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

struct Lines<'a> {
    /// (1-based line number, tokens) for every non-blank line.
    items: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
            .filter(|(_, toks)| !toks.is_empty())
            .collect();
        Lines { items, pos: 0 }
    }

    fn next(&mut self) -> Option<&(usize, Vec<&'a str>)> {
        let item = self.items.get(self.pos);
        if item.is_some() {
            self.pos += 1;
        }
        item
    }

    fn last_line(&self) -> usize {
        self.items.last().map(|(l, _)| *l).unwrap_or(0)
    }
}

fn expect_keyword<'a>(
    lines: &mut Lines<'a>,
    keyword: &str,
) -> Result<(usize, Vec<&'a str>), ParseError> {
    match lines.next() {
        Some((line, toks)) if toks[0] == keyword => Ok((*line, toks.clone())),
        Some((line, toks)) => Err(err(*line, format!("expected `{keyword}`, found `{}`", toks[0]))),
        None => Err(err(lines.last_line() + 1, format!("expected `{keyword}`, found end of file"))),
    }
}

fn parse_element(tok: &str, carrier: &Carrier, line: usize) -> Result<usize, ParseError> {
    carrier
        .index_of(tok)
        .ok_or_else(|| err(line, format!("unknown label `{tok}`")))
}

fn parse_row(
    toks: &[&str],
    carrier: &Carrier,
    line: usize,
    partial: bool,
    block: &str,
    row: usize,
) -> Result<Vec<Option<usize>>, ParseError> {
    let n = carrier.size();
    if toks.len() != n {
        return Err(err(
            line,
            format!("row {row} of table `{block}` has {} tokens, expected {n}", toks.len()),
        ));
    }
    toks.iter()
        .map(|t| {
            if *t == UNDEFINED_TOKEN {
                if partial {
                    Ok(None)
                } else {
                    Err(err(line, format!("`.` is not allowed in total table `{block}`")))
                }
            } else {
                parse_element(t, carrier, line).map(Some)
            }
        })
        .collect()
}

fn parse_table_block(
    lines: &mut Lines<'_>,
    carrier: &Carrier,
    name: &str,
    partial: bool,
) -> Result<Vec<Vec<Option<usize>>>, ParseError> {
    let (line, toks) = expect_keyword(lines, "table")?;
    if toks.len() != 2 {
        return Err(err(line, "`table` takes exactly one name".to_string()));
    }
    if toks[1] != name {
        return Err(err(line, format!("expected `table {name}`, found `table {}`", toks[1])));
    }
    let n = carrier.size();
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let Some((rline, rtoks)) = lines.next().map(|(l, t)| (*l, t.clone())) else {
            return Err(err(lines.last_line() + 1, format!("table `{name}` is missing row {r}")));
        };
        rows.push(parse_row(&rtoks, carrier, rline, partial, name, r)?);
    }
    Ok(rows)
}

fn parse_partial_table(
    lines: &mut Lines<'_>,
    carrier: &Carrier,
    name: &str,
) -> Result<PartialBinaryTable, ParseError> {
    let rows = parse_table_block(lines, carrier, name, true)?;
    Ok(PartialBinaryTable::from_rows(rows).expect("row shape checked"))
}

fn parse_total_table(
    lines: &mut Lines<'_>,
    carrier: &Carrier,
    name: &str,
) -> Result<TotalBinaryTable, ParseError> {
    let rows = parse_table_block(lines, carrier, name, false)?;
    let filled: Vec<Vec<usize>> =
        rows.iter().map(|r| r.iter().map(|c| c.unwrap()).collect()).collect();
    Ok(TotalBinaryTable::from_rows(filled).expect("row shape checked"))
}

fn parse_map(
    lines: &mut Lines<'_>,
    carrier: &Carrier,
    name: &str,
) -> Result<UnaryTable, ParseError> {
    let (line, toks) = expect_keyword(lines, "map")?;
    if toks.len() != 2 || toks[1] != name {
        return Err(err(line, format!("expected `map {name}`")));
    }
    let Some((vline, vtoks)) = lines.next().map(|(l, t)| (*l, t.clone())) else {
        return Err(err(lines.last_line() + 1, format!("map `{name}` is missing its value row")));
    };
    if vtoks.len() != carrier.size() {
        return Err(err(
            vline,
            format!("map `{name}` has {} tokens, expected {}", vtoks.len(), carrier.size()),
        ));
    }
    let vals: Vec<usize> = vtoks
        .iter()
        .map(|t| parse_element(t, carrier, vline))
        .collect::<Result<_, _>>()?;
    Ok(UnaryTable::new(vals).expect("indices checked"))
}

fn parse_const(
    lines: &mut Lines<'_>,
    carrier: &Carrier,
    name: &str,
) -> Result<usize, ParseError> {
    let (line, toks) = expect_keyword(lines, "const")?;
    if toks.len() != 3 || toks[1] != name {
        return Err(err(line, format!("expected `const {name} <label>`")));
    }
    parse_element(toks[2], carrier, line)
}

/// Parse the text format into an algebra candidate. Structural validation
/// only; run the axiom checkers afterwards.
pub fn parse_algebra(text: &str) -> Result<Algebra, ParseError> {
    let mut lines = Lines::new(text);

    let (kline, ktoks) = expect_keyword(&mut lines, "kind")?;
    if ktoks.len() != 2 {
        return Err(err(kline, "`kind` takes exactly one token"));
    }
    let kind = ktoks[1].to_string();

    let (sline, stoks) = expect_keyword(&mut lines, "size")?;
    let n: usize = stoks
        .get(1)
        .and_then(|t| t.parse().ok())
        .filter(|&n| n >= 2)
        .ok_or_else(|| err(sline, "`size` must be an integer >= 2"))?;

    let (lline, ltoks) = expect_keyword(&mut lines, "labels")?;
    if ltoks.len() != n + 1 {
        return Err(err(lline, format!("expected {n} labels, found {}", ltoks.len() - 1)));
    }
    let carrier = Carrier::new(ltoks[1..].iter().map(|s| s.to_string()).collect())
        .map_err(|e| err(lline, e.to_string()))?;

    let algebra = match kind.as_str() {
        "effect" => {
            let plus = parse_partial_table(&mut lines, &carrier, "plus")?;
            let comp = parse_map(&mut lines, &carrier, "comp")?;
            let zero = parse_const(&mut lines, &carrier, "zero")?;
            let one = parse_const(&mut lines, &carrier, "one")?;
            Algebra::Effect(EffectAlgebra { carrier, plus, comp, zero, one })
        }
        "pseudoeffect" => {
            let plus = parse_partial_table(&mut lines, &carrier, "plus")?;
            let barmap = parse_map(&mut lines, &carrier, "bar")?;
            let tildemap = parse_map(&mut lines, &carrier, "tilde")?;
            let zero = parse_const(&mut lines, &carrier, "zero")?;
            let one = parse_const(&mut lines, &carrier, "one")?;
            Algebra::Pseudo(PseudoeffectAlgebra { carrier, plus, barmap, tildemap, zero, one })
        }
        "cqrl" => {
            let join = parse_total_table(&mut lines, &carrier, "join")?;
            let meet = parse_total_table(&mut lines, &carrier, "meet")?;
            let odot = parse_partial_table(&mut lines, &carrier, "odot")?;
            let arrow = parse_total_table(&mut lines, &carrier, "arrow")?;
            let zero = parse_const(&mut lines, &carrier, "zero")?;
            let one = parse_const(&mut lines, &carrier, "one")?;
            let lattice = lattice_tables_from_raw(join, meet, zero, one);
            Algebra::Cqrl(CommQResLattice { carrier, lattice, odot, arrow, zero, one })
        }
        "qrl" => {
            let join = parse_total_table(&mut lines, &carrier, "join")?;
            let meet = parse_total_table(&mut lines, &carrier, "meet")?;
            let odot = parse_partial_table(&mut lines, &carrier, "odot")?;
            let arrow = parse_total_table(&mut lines, &carrier, "arrow")?;
            let leadsto = parse_total_table(&mut lines, &carrier, "leadsto")?;
            let zero = parse_const(&mut lines, &carrier, "zero")?;
            let one = parse_const(&mut lines, &carrier, "one")?;
            let lattice = lattice_tables_from_raw(join, meet, zero, one);
            Algebra::Qrl(QResLattice { carrier, lattice, odot, arrow, leadsto, zero, one })
        }
        other => return Err(err(kline, format!("unknown kind `{other}`"))),
    };

    if let Some((line, toks)) = lines.next() {
        return Err(err(*line, format!("unexpected trailing content starting with `{}`", toks[0])));
    }
    Ok(algebra)
}

struct Out {
    buf: String,
}

impl Out {
    fn line(&mut self, args: fmt::Arguments<'_>) {
        use fmt::Write;
        writeln!(self.buf, "{args}").unwrap();
    }

    fn partial_table(&mut self, name: &str, t: &PartialBinaryTable, c: &Carrier) {
        self.line(format_args!("table {name}"));
        for x in 0..t.size() {
            let row: Vec<&str> = (0..t.size())
                .map(|y| t.get(x, y).map(|v| c.label(v)).unwrap_or(UNDEFINED_TOKEN))
                .collect();
            self.line(format_args!("{}", row.join(" ")));
        }
    }

    fn total_table(&mut self, name: &str, t: &TotalBinaryTable, c: &Carrier) {
        self.line(format_args!("table {name}"));
        for x in 0..t.size() {
            let row: Vec<&str> = (0..t.size()).map(|y| c.label(t.get(x, y))).collect();
            self.line(format_args!("{}", row.join(" ")));
        }
    }

    fn map(&mut self, name: &str, m: &UnaryTable, c: &Carrier) {
        self.line(format_args!("map {name}"));
        let row: Vec<&str> = m.values().iter().map(|&v| c.label(v)).collect();
        self.line(format_args!("{}", row.join(" ")));
    }
}

/// Canonical serialization; `parse_algebra(serialize_algebra(a)) == Ok(a)`
/// for every shape-valid algebra.
pub fn serialize_algebra(a: &Algebra) -> String {
    let c = a.carrier();
    let mut out = Out { buf: String::new() };
    out.line(format_args!("kind {}", a.kind_token()));
    out.line(format_args!("size {}", a.size()));
    out.line(format_args!("labels {}", c.labels().join(" ")));
    match a {
        Algebra::Effect(e) => {
            out.partial_table("plus", &e.plus, c);
            out.map("comp", &e.comp, c);
            out.line(format_args!("const zero {}", c.label(e.zero)));
            out.line(format_args!("const one {}", c.label(e.one)));
        }
        Algebra::Pseudo(p) => {
            out.partial_table("plus", &p.plus, c);
            out.map("bar", &p.barmap, c);
            out.map("tilde", &p.tildemap, c);
            out.line(format_args!("const zero {}", c.label(p.zero)));
            out.line(format_args!("const one {}", c.label(p.one)));
        }
        Algebra::Cqrl(q) => {
            out.total_table("join", &q.lattice.join, c);
            out.total_table("meet", &q.lattice.meet, c);
            out.partial_table("odot", &q.odot, c);
            out.total_table("arrow", &q.arrow, c);
            out.line(format_args!("const zero {}", c.label(q.zero)));
            out.line(format_args!("const one {}", c.label(q.one)));
        }
        Algebra::Qrl(q) => {
            out.total_table("join", &q.lattice.join, c);
            out.total_table("meet", &q.lattice.meet, c);
            out.partial_table("odot", &q.odot, c);
            out.total_table("arrow", &q.arrow, c);
            out.total_table("leadsto", &q.leadsto, c);
            out.line(format_args!("const zero {}", c.label(q.zero)));
            out.line(format_args!("const one {}", c.label(q.one)));
        }
    }
    out.buf
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::effect::detect_lattice_effect;
    use crate::enumerate::{catalog, catalog_effect};
    use crate::transform::cqrl_of_effect;

    #[test]
    fn minimal_effect_file_parses() {
        let text = "kind effect\nsize 2\nlabels 0 1\ntable plus\n0 1\n1 .\nmap comp\n1 0\nconst zero 0\nconst one 1\n";
        let a = parse_algebra(text).unwrap();
        assert_eq!(a, Algebra::Effect(catalog_effect("bool2")));
    }

    #[test]
    fn roundtrip_over_the_whole_catalog() {
        for entry in catalog() {
            let text = serialize_algebra(&entry.algebra);
            let back = parse_algebra(&text).unwrap_or_else(|e| {
                panic!("{}: {e}\n{text}", entry.name);
            });
            assert_eq!(back, entry.algebra, "{}", entry.name);
            // serialize is canonical: a second pass is byte-identical
            assert_eq!(serialize_algebra(&back), text, "{}", entry.name);
        }
    }

    #[test]
    fn cqrl_roundtrip_keeps_the_derived_order() {
        let le = detect_lattice_effect(&catalog_effect("diamond")).unwrap();
        let c = cqrl_of_effect(&le).unwrap();
        let text = serialize_algebra(&Algebra::Cqrl(c.clone()));
        let back = parse_algebra(&text).unwrap();
        assert_eq!(back, Algebra::Cqrl(c));
    }

    #[test]
    fn short_row_is_reported_with_its_line() {
        let text = "kind effect\nsize 3\nlabels 0 a 1\ntable plus\n0 a 1\na 1\n1 . .\nmap comp\n1 a 0\nconst zero 0\nconst one 1\n";
        let e = parse_algebra(text).unwrap_err();
        assert_eq!(e.line, 6);
        assert!(e.message.contains("row 1"), "{e}");
    }

    #[test]
    fn unknown_label_and_kind_diagnostics() {
        let bad_kind = "kind ring\nsize 2\nlabels 0 1\n";
        let e = parse_algebra(bad_kind).unwrap_err();
        assert_eq!(e.line, 1);
        assert!(e.message.contains("unknown kind"));

        let bad_label = "kind effect\nsize 2\nlabels 0 1\ntable plus\n0 q\n1 .\nmap comp\n1 0\nconst zero 0\nconst one 1\n";
        let e = parse_algebra(bad_label).unwrap_err();
        assert_eq!(e.line, 5);
        assert!(e.message.contains("unknown label `q`"));
    }

    #[test]
    fn duplicate_block_is_rejected() {
        let text = "kind effect\nsize 2\nlabels 0 1\ntable plus\n0 1\n1 .\ntable plus\n0 1\n1 .\nmap comp\n1 0\nconst zero 0\nconst one 1\n";
        let e = parse_algebra(text).unwrap_err();
        assert_eq!(e.line, 7);
    }

    #[test]
    fn dot_is_rejected_in_total_tables() {
        let le = detect_lattice_effect(&catalog_effect("mv3")).unwrap();
        let c = cqrl_of_effect(&le).unwrap();
        // arrow row for 0 in the MV3 image is `1 1 1`
        let text = serialize_algebra(&Algebra::Cqrl(c)).replace("table arrow\n1 1 1", "table arrow\n. 1 1");
        let e = parse_algebra(&text).unwrap_err();
        assert!(e.message.contains("not allowed in total table"), "{e}");
    }
}
