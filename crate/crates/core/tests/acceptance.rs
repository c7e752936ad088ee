//! End-to-end acceptance checks. Run with `--nocapture` to see one status
//! line per criterion.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rayon::prelude::*;
use twobridge::census::find_duplicate_keys;
use twobridge::verify::GoldenTable;
use twobridge::{
    dt_from_presentation, dt_via_traversal, enumerate_umn, equal_knots, ernst_sumners, knot_class,
    run_census, table_grid, verify, Census, CensusOptions, ConwaySequence, DtCode, Scope, TableId,
    TwoBridgeClass, UmnSpec,
};

const TABLE5: &str = include_str!("fixtures/table5.tsv");

fn report(criterion: u32, title: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("[PASS] criterion {criterion}: {title}");
    } else {
        println!("[FAIL] criterion {criterion}: {title}");
        for f in failures.iter().take(20) {
            println!("       {f}");
        }
        panic!("criterion {criterion} failed with {} problems", failures.len());
    }
}

fn check<T: PartialEq + std::fmt::Debug>(failures: &mut Vec<String>, what: &str, expected: T, observed: T) {
    if expected != observed {
        failures.push(format!("{what}: expected {expected:?}, observed {observed:?}"));
    }
}

/// Every cell with m <= 28, tallied over all crossing numbers.
fn grid_census() -> &'static Census {
    static CELL: OnceLock<Census> = OnceLock::new();
    CELL.get_or_init(|| {
        run_census(CensusOptions {
            max_crossings: 16,
            scope: Scope::Grid,
            records: false,
        })
        .expect("grid census")
    })
}

/// Knots with at most 16 crossings, with records.
fn knot_census() -> &'static Census {
    static CELL: OnceLock<Census> = OnceLock::new();
    CELL.get_or_init(|| run_census(CensusOptions::new(16)).expect("census"))
}

fn grid_presentations() -> impl ParallelIterator<Item = ConwaySequence> {
    table_grid(28).into_par_iter().flat_map_iter(enumerate_umn)
}

fn class(alpha: i64, beta: i64) -> TwoBridgeClass {
    TwoBridgeClass::from_slope(alpha, beta).unwrap()
}

fn verify_failures(id: TableId) -> Vec<String> {
    let report = verify(id, &grid_census().table);
    report.mismatches.iter().map(ToString::to_string).collect()
}

#[test]
fn criterion_1_closed_forms() {
    let mut failures = verify_failures(TableId::CrossingCounts);
    let (mut star, mut achiral, mut tk) = (0, 0, 0);
    for c in 3..=16 {
        let k = ernst_sumners(c).unwrap();
        star += k.tk_star;
        achiral += k.atk;
        tk += k.tk;
    }
    check(&mut failures, "totals", (11007, 85, 5546), (star, achiral, tk));
    report(1, "closed-form counts reproduce table 1", &failures);
}

#[test]
fn criterion_2_enumeration_counts() {
    let mut failures = verify_failures(TableId::CellSizes);
    check(&mut failures, "grand total", 598_964, grid_census().table.total());
    let streamed: u64 = table_grid(28)
        .into_par_iter()
        .map(|spec| enumerate_umn(spec).count() as u64)
        .sum();
    check(&mut failures, "streamed total", 598_964, streamed);
    check(&mut failures, "U^{28,14}", 4160, grid_census().table.cell_total(28, 14));
    report(2, "cell sizes match table 2", &failures);
}

#[test]
fn criterion_3_cross_tab() {
    let mut failures = verify_failures(TableId::CrossTab);
    let t = &grid_census().table;
    let column = |c| (4..=28).step_by(2).flat_map(|m| (2..=14).step_by(2).map(move |n| (m, n))).map(|(m, n)| t.count(m, n, c)).sum::<u64>();
    check(&mut failures, "totals at c=17", 5496, column(17));
    check(&mut failures, "totals at c=28", 2080, column(28));
    let row: Vec<u64> = (7..=12).map(|c| t.count(12, 6, c)).collect();
    check(&mut failures, "row 12,6", vec![1, 3, 6, 6, 3, 1], row);
    let golden = GoldenTable::load(TableId::CrossTab);
    check(&mut failures, "golden totals at c=28", Some(2080), golden.cell("totals", "28"));
    report(3, "crossing numbers match table 3 up to c = 28", &failures);
}

#[test]
fn criterion_4_marginals() {
    let mut failures = verify_failures(TableId::Marginals);
    let expected = [1, 1, 2, 3, 7, 12, 24, 45, 91, 176, 352, 693, 1387, 2752];
    for (table, name) in [(&grid_census().table, "grid"), (&knot_census().table, "census")] {
        let observed: Vec<u64> = (3..=16).map(|c| table.by_crossings(c)).collect();
        check(&mut failures, &format!("TK_c row ({name})"), expected.to_vec(), observed);
    }
    check(&mut failures, "records", 5546, knot_census().records.len());
    check(&mut failures, "row 18 total", 1320, (3..=16).map(|c| grid_census().table.by_size(18, c)).sum::<u64>());
    report(4, "marginals match table 4", &failures);
}

#[test]
fn criterion_5_dt_codes() {
    let mut failures = Vec::new();
    let mut rows = 0;
    for line in TABLE5.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        rows += 1;
        let fields: Vec<&str> = line.split('\t').collect();
        let (knot, m, n, seq, dt) = (fields[0], fields[1], fields[2], fields[3], fields[4]);
        let p: ConwaySequence = seq.parse().unwrap();
        let spec = UmnSpec::new(m.parse().unwrap(), n.parse().unwrap()).unwrap();
        let expected: DtCode = dt.parse().unwrap();
        check(&mut failures, &format!("{knot} closed form"), Ok(expected.clone()), dt_from_presentation(&p));
        check(&mut failures, &format!("{knot} traversal"), Ok(expected), dt_via_traversal(&p));
        if !enumerate_umn(spec).any(|q| q == p) {
            failures.push(format!("{knot}: {seq} is not a representative of U{spec}"));
        }
        let crossings: u32 = knot[..knot.find('A').unwrap()].parse().unwrap();
        check(&mut failures, &format!("{knot} crossing number"), crossings, knot_class(&p).unwrap().crossing_number());
    }
    check(&mut failures, "table 5 rows", 26, rows);

    let disagreements: Vec<String> = table_grid(28)
        .into_par_iter()
        .flat_map_iter(enumerate_umn)
        .filter_map(|p| {
            let formula = dt_from_presentation(&p);
            let walk = dt_via_traversal(&p);
            (formula.is_err() || formula != walk).then(|| format!("{p}: {formula:?} vs {walk:?}"))
        })
        .collect();
    failures.extend(disagreements);
    report(5, "DT codes match table 5 and the traversal oracle", &failures);
}

#[test]
fn criterion_6_achirality() {
    let mut failures = Vec::new();
    let mut by_c = BTreeMap::new();
    for r in &knot_census().records {
        if r.a.is_palindromic() {
            *by_c.entry(r.c).or_insert(0u64) += 1;
        }
    }
    let expected: BTreeMap<u32, u64> = [(4, 1), (6, 1), (8, 3), (10, 5), (12, 11), (14, 21), (16, 43)].into();
    check(&mut failures, "palindromic total", 85, by_c.values().sum::<u64>());
    check(&mut failures, "palindromic by crossing number", expected, by_c);
    for c in (4..=16).step_by(2) {
        check(&mut failures, &format!("ATK_{c}"), ernst_sumners(c).unwrap().atk, knot_census().table.achiral_by_crossings(c));
    }
    let broken: Vec<String> = grid_presentations()
        .filter_map(|p| {
            let s = p.slope().unwrap();
            let (alpha, beta) = (s.alpha() as i128, s.beta() as i128);
            let squares = (beta * beta + 1).rem_euclid(alpha) == 0;
            (squares != p.is_palindromic()).then(|| format!("{p}: palindromic {} but S({alpha},{beta})", p.is_palindromic()))
        })
        .collect();
    failures.extend(broken);
    report(6, "achiral knots are exactly the palindromes", &failures);
}

#[test]
fn criterion_7_zigzag() {
    let mut failures = Vec::new();
    let t = &grid_census().table;
    for spec in table_grid(28) {
        let (m, n) = (spec.m(), spec.n());
        for c in 1..=30 {
            let nonzero = t.count(m, n, c) > 0;
            if nonzero != (m - n < c && c <= m) {
                failures.push(format!("({m}, {n}) at c={c}: count {}", t.count(m, n, c)));
            }
        }
    }
    report(7, "TK_c^{m,n} is nonzero exactly on m - n + 1 <= c <= m", &failures);
}

#[test]
fn criterion_8_unique_keys() {
    let duplicates = find_duplicate_keys(&table_grid(28)).unwrap();
    let failures: Vec<String> = duplicates
        .iter()
        .map(|(key, a, b)| format!("{a} and {b} share S({}, {})", key.alpha, key.orbit))
        .collect();
    report(8, "no two representatives share a census key", &failures);
}

#[test]
fn criterion_9_spot_equalities() {
    let mut failures = Vec::new();
    check(&mut failures, "S(5,3) = S(5,2)", true, equal_knots(&class(5, 3), &class(5, 2), true));
    check(&mut failures, "S(7,2) = S(7,5) up to mirror", true, equal_knots(&class(7, 2), &class(7, 5), false));
    check(&mut failures, "S(7,2) != S(7,5) as oriented", false, equal_knots(&class(7, 2), &class(7, 5), true));
    check(&mut failures, "S(7,2) chiral", false, class(7, 2).is_achiral());
    let even_alpha: Vec<String> = grid_presentations()
        .filter_map(|p| {
            let alpha = p.slope().unwrap().alpha();
            (alpha % 2 == 0).then(|| format!("{p}: alpha = {alpha}"))
        })
        .collect();
    failures.extend(even_alpha);
    report(9, "spot equalities and odd alpha", &failures);
}
