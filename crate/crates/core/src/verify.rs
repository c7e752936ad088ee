//! Cell-by-cell comparison of census results against stored reference tables.
//!
//! The golden copies live in `data/` as tab-separated text, `.` marking an
//! empty (zero) cell. They are transcribed data, never recomputed.

use std::fmt;
use std::str::FromStr;

use crate::census::{ernst_sumners, CensusTable};

const TABLE1: &str = include_str!("../data/table1.tsv");
const TABLE2: &str = include_str!("../data/table2.tsv");
const TABLE3: &str = include_str!("../data/table3.tsv");
const TABLE4: &str = include_str!("../data/table4.tsv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TableId {
    /// `TK*_c`, `ATK_c`, `TK_c` for `3 <= c <= 16`.
    CrossingCounts = 1,
    /// `TK^{m,n}` and `TK^m`.
    CellSizes = 2,
    /// `TK_c^{m,n}`.
    CrossTab = 3,
    /// `TK_c^m` and `TK_c`, restricted to `c <= 16`.
    Marginals = 4,
}

impl TableId {
    pub const ALL: [TableId; 4] = [
        TableId::CrossingCounts,
        TableId::CellSizes,
        TableId::CrossTab,
        TableId::Marginals,
    ];

    pub fn number(self) -> u8 {
        self as u8
    }

    fn source(self) -> &'static str {
        match self {
            TableId::CrossingCounts => TABLE1,
            TableId::CellSizes => TABLE2,
            TableId::CrossTab => TABLE3,
            TableId::Marginals => TABLE4,
        }
    }
}

impl FromStr for TableId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "1" => Ok(TableId::CrossingCounts),
            "2" => Ok(TableId::CellSizes),
            "3" => Ok(TableId::CrossTab),
            "4" => Ok(TableId::Marginals),
            other => Err(format!("no table {other:?}; expected 1, 2, 3 or 4")),
        }
    }
}

/// A parsed golden table: a header row of column labels, then labelled rows.
#[derive(Debug, Clone)]
pub struct GoldenTable {
    pub columns: Vec<String>,
    pub rows: Vec<(String, Vec<u64>)>,
}

impl GoldenTable {
    pub fn load(id: TableId) -> GoldenTable {
        parse_table(id.source()).unwrap_or_else(|e| panic!("embedded table {} is malformed: {e}", id.number()))
    }

    pub fn cell(&self, row: &str, column: &str) -> Option<u64> {
        let col = self.columns.iter().position(|c| c == column)?;
        let (_, values) = self.rows.iter().find(|(label, _)| label == row)?;
        values.get(col).copied()
    }
}

fn parse_table(text: &str) -> Result<GoldenTable, String> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or("missing header")?;
    let columns: Vec<String> = header.split('\t').skip(1).map(str::to_owned).collect();
    let mut rows = Vec::new();
    for line in lines {
        let mut fields = line.split('\t');
        let label = fields.next().ok_or("empty row")?.to_owned();
        let values = fields
            .map(|f| match f.trim() {
                "." => Ok(0),
                v => v.parse::<u64>().map_err(|e| format!("{label}: {v:?}: {e}")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if values.len() != columns.len() {
            return Err(format!("row {label} has {} cells, expected {}", values.len(), columns.len()));
        }
        rows.push((label, values));
    }
    Ok(GoldenTable { columns, rows })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub row: String,
    pub column: String,
    pub expected: u64,
    pub observed: u64,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "row {} column {}: expected {}, observed {}",
            self.row, self.column, self.expected, self.observed
        )
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub table: TableId,
    pub cells_checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "table {}: {status} ({} cells checked, {} mismatches)",
            self.table.number(),
            self.cells_checked,
            self.mismatches.len()
        )?;
        for m in &self.mismatches {
            writeln!(f, "  {m}")?;
        }
        Ok(())
    }
}

struct Checker {
    report: VerifyReport,
}

impl Checker {
    fn check(&mut self, row: &str, column: &str, expected: u64, observed: u64) {
        self.report.cells_checked += 1;
        if expected != observed {
            self.report.mismatches.push(Mismatch {
                row: row.to_owned(),
                column: column.to_owned(),
                expected,
                observed,
            });
        }
    }
}

fn parse_label(label: &str) -> u32 {
    label
        .parse()
        .unwrap_or_else(|_| panic!("embedded table has a non-numeric label {label:?}"))
}

/// Compares `table` against golden table `id`. Tables 2–4 need a census over
/// the full grid of cells with `m <= 28`; table 1 also checks the closed
/// forms.
pub fn verify(id: TableId, table: &CensusTable) -> VerifyReport {
    let golden = GoldenTable::load(id);
    let mut checker = Checker {
        report: VerifyReport {
            table: id,
            cells_checked: 0,
            mismatches: Vec::new(),
        },
    };
    let ck = &mut checker;
    match id {
        TableId::CrossingCounts => verify_crossing_counts(&golden, table, ck),
        TableId::CellSizes => verify_cell_sizes(&golden, table, ck),
        TableId::CrossTab => verify_cross_tab(&golden, table, ck),
        TableId::Marginals => verify_marginals(&golden, table, ck),
    }
    checker.report
}

fn verify_crossing_counts(golden: &GoldenTable, table: &CensusTable, ck: &mut Checker) {
    for (row, values) in &golden.rows {
        let mut closed_total = 0;
        let mut observed_total = 0;
        for (column, &expected) in golden.columns.iter().zip(values) {
            if column == "total" {
                ck.check(row, "total (closed form)", expected, closed_total);
                ck.check(row, "total (census)", expected, observed_total);
                continue;
            }
            let c = parse_label(column);
            let closed = ernst_sumners(c).expect("table columns start at 3");
            let tk = table.by_crossings(c);
            let atk = table.achiral_by_crossings(c);
            let (closed_value, observed) = match row.as_str() {
                "TKstar" => (closed.tk_star, 2 * tk - atk),
                "ATK" => (closed.atk, atk),
                "TK" => (closed.tk, tk),
                other => panic!("unexpected row {other} in table 1"),
            };
            closed_total += closed_value;
            observed_total += observed;
            ck.check(row, &format!("{column} (closed form)"), expected, closed_value);
            ck.check(row, &format!("{column} (census)"), expected, observed);
        }
    }
}

fn verify_cell_sizes(golden: &GoldenTable, table: &CensusTable, ck: &mut Checker) {
    let ns: Vec<Option<u32>> = golden.columns.iter().map(|c| c.parse().ok()).collect();
    let mut column_totals = vec![0u64; ns.len()];
    for (row, values) in &golden.rows {
        if row == "total" {
            for ((column, &expected), &observed) in golden.columns.iter().zip(values).zip(&column_totals) {
                ck.check(row, column, expected, observed);
            }
            continue;
        }
        let m = parse_label(row);
        let mut row_total = 0;
        for (j, (column, &expected)) in golden.columns.iter().zip(values).enumerate() {
            let observed = match ns[j] {
                Some(n) => table.cell_total(m, n),
                None => row_total,
            };
            if ns[j].is_some() {
                row_total += observed;
            }
            column_totals[j] += observed;
            ck.check(row, column, expected, observed);
        }
    }
}

fn verify_cross_tab(golden: &GoldenTable, table: &CensusTable, ck: &mut Checker) {
    let cs: Vec<u32> = golden.columns.iter().map(|c| parse_label(c)).collect();
    let mut column_totals = vec![0u64; cs.len()];
    for (row, values) in &golden.rows {
        if row == "totals" {
            for ((column, &expected), &observed) in golden.columns.iter().zip(values).zip(&column_totals) {
                ck.check(row, column, expected, observed);
            }
            continue;
        }
        let (m, n) = row
            .split_once(',')
            .map(|(m, n)| (parse_label(m), parse_label(n)))
            .expect("cross-tab rows are labelled m,n");
        for (j, (column, &expected)) in golden.columns.iter().zip(values).enumerate() {
            let observed = table.count(m, n, cs[j]);
            column_totals[j] += observed;
            ck.check(row, column, expected, observed);
        }
    }
}

fn verify_marginals(golden: &GoldenTable, table: &CensusTable, ck: &mut Checker) {
    let cs: Vec<Option<u32>> = golden.columns.iter().map(|c| c.parse().ok()).collect();
    let mut column_totals = vec![0u64; cs.len()];
    for (row, values) in &golden.rows {
        if row == "TKc" {
            for ((column, &expected), &observed) in golden.columns.iter().zip(values).zip(&column_totals) {
                ck.check(row, column, expected, observed);
            }
            continue;
        }
        let m = parse_label(row);
        let mut row_total = 0;
        for (j, (column, &expected)) in golden.columns.iter().zip(values).enumerate() {
            let observed = match cs[j] {
                Some(c) => table.by_size(m, c),
                None => row_total,
            };
            if cs[j].is_some() {
                row_total += observed;
            }
            column_totals[j] += observed;
            ck.check(row, column, expected, observed);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_tables_parse() {
        for id in TableId::ALL {
            let t = GoldenTable::load(id);
            assert!(!t.rows.is_empty());
        }
        assert_eq!(GoldenTable::load(TableId::CellSizes).cell("total", "TKm"), Some(598_964));
        assert_eq!(GoldenTable::load(TableId::CrossTab).cell("totals", "28"), Some(2080));
        assert_eq!(GoldenTable::load(TableId::Marginals).cell("18", "total"), Some(1320));
        assert_eq!(GoldenTable::load(TableId::CrossingCounts).cell("TK", "total"), Some(5546));
    }

    #[test]
    fn golden_tables_are_internally_consistent() {
        // row sums of the cross-tab reproduce table 2
        let t2 = GoldenTable::load(TableId::CellSizes);
        let t3 = GoldenTable::load(TableId::CrossTab);
        for (label, values) in &t3.rows {
            if let Some((m, n)) = label.split_once(',') {
                assert_eq!(Some(values.iter().sum::<u64>()), t2.cell(m, n), "{label}");
            }
        }
    }

    #[test]
    fn empty_census_fails() {
        let report = verify(TableId::CellSizes, &CensusTable::new());
        assert!(!report.passed());
        assert!(report.to_string().contains("FAIL"));
    }

    #[test]
    fn parse_errors() {
        assert!(parse_table("h\ta\tb\nx\t1\n").is_err());
        assert!(parse_table("h\ta\nx\tz\n").is_err());
        assert!(parse_table("").is_err());
        assert!("5".parse::<TableId>().is_err());
    }
}
