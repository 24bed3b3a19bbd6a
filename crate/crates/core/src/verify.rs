//! Cross-check suites wiring the three computation routes against each
//! other: worked examples, recursions vs enumeration, series vs enumeration,
//! the bipartite Col/Snort equality, and frozen count sequences.

use std::collections::BTreeMap;
use std::fmt::Display;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::board::Board;
use crate::enumerate::{brute_force_profile, independent_set_profile, DEFAULT_VERTEX_LIMIT};
use crate::formulas;
use crate::poly::Profile;
use crate::rules::{GameId, GameRules};
use crate::series::{builtin_gf, SeriesFamily};

/// Outcome of a single named check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Empty when passed; otherwise describes the first counterexample.
    pub detail: String,
}

impl Check {
    fn eq<T: PartialEq + Display>(name: impl Into<String>, expected: T, actual: T) -> Self {
        let passed = expected == actual;
        Check {
            name: name.into(),
            passed,
            detail: if passed {
                String::new()
            } else {
                format!("expected {expected}, got {actual}")
            },
        }
    }

    fn all(name: impl Into<String>, first_failure: Option<String>) -> Self {
        Check {
            name: name.into(),
            passed: first_failure.is_none(),
            detail: first_failure.unwrap_or_default(),
        }
    }
}

fn brute(board: &Board, id: GameId) -> Profile {
    brute_force_profile(board, &GameRules::named(id), DEFAULT_VERTEX_LIMIT)
        .expect("verification boards are under the size limit")
}

fn fmt_counts(counts: &[BigUint]) -> String {
    counts
        .iter()
        .map(BigUint::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// Reproduces each worked example and initial-terms table from every route
/// that produces it.
pub fn suite_examples() -> Vec<Check> {
    let mut checks = Vec::new();

    let cis_p4 = brute(&Board::path(4), GameId::Cis);
    checks.push(Check::eq(
        "cis P4: profile",
        "1 + 4x + 4y + 3x^2 + 6xy + 3y^2".to_string(),
        cis_p4.to_string(),
    ));
    checks.push(Check::eq(
        "cis P4: univariate",
        "1, 8, 12".to_string(),
        fmt_counts(&cis_p4.univariate_collapse()),
    ));
    checks.push(Check::eq(
        "cis P4: total",
        BigUint::from(21u32),
        cis_p4.total(),
    ));
    checks.push(Check::eq(
        "cis P4: alternating part",
        "1 + 4x + 4y + 6xy".to_string(),
        cis_p4.alternating_part().to_string(),
    ));

    let c4 = Board::cycle(4).expect("C4 exists");
    let col_c4_expected = "1 + 4x + 4y + 2x^2 + 12xy + 2y^2 + 4x^2y + 4xy^2 + 2x^2y^2";
    checks.push(Check::eq(
        "col C4: profile (brute force)",
        col_c4_expected.to_string(),
        brute(&c4, GameId::Col).to_string(),
    ));
    let via_sets =
        independent_set_profile(&c4, &GameRules::named(GameId::Col), 24).expect("C4 is small");
    checks.push(Check::eq(
        "col C4: profile (independent sets)",
        col_c4_expected.to_string(),
        via_sets.to_string(),
    ));
    checks.push(Check::eq(
        "col C4: total",
        BigUint::from(35u32),
        via_sets.total(),
    ));
    checks.push(Check::eq(
        "snort C4: profile",
        "1 + 4x + 4y + 6x^2 + 4xy + 6y^2 + 4x^3 + 4y^3 + x^4 + y^4".to_string(),
        brute(&c4, GameId::Snort).to_string(),
    ));

    // EnSnort(2) initial profiles, from the series route.
    let ensnort_expected = [
        "1",
        "1 + x + y",
        "1 + 2x + 2y + x^2 + y^2",
        "1 + 3x + 3y + 3x^2 + 3y^2 + x^3 + y^3",
    ];
    match builtin_gf(SeriesFamily::EnSnort(2)).expand(3) {
        Ok(profiles) => {
            for (n, expected) in ensnort_expected.iter().enumerate() {
                checks.push(Check::eq(
                    format!("ensnort:2 P{n}: series profile"),
                    expected.to_string(),
                    profiles[n].to_string(),
                ));
            }
        }
        Err(e) => checks.push(Check::all(
            "ensnort:2 initial profiles",
            Some(format!("expansion failed: {e}")),
        )),
    }

    // Cis2 initial profiles, from both the recursion and the series route.
    let cis2_expected = [
        "1",
        "1 + x + y",
        "1 + 2x + 2y + x^2 + 2xy + y^2",
        "1 + 3x + 3y + 2x^2 + 4xy + 2y^2",
    ];
    for (n, expected) in cis2_expected.iter().enumerate() {
        checks.push(Check::eq(
            format!("cis2 P{n}: recursion profile"),
            expected.to_string(),
            formulas::cis2_path_profile(n).to_string(),
        ));
    }
    match builtin_gf(SeriesFamily::Cis2Path).expand(3) {
        Ok(profiles) => {
            for (n, expected) in cis2_expected.iter().enumerate() {
                checks.push(Check::eq(
                    format!("cis2 P{n}: series profile"),
                    expected.to_string(),
                    profiles[n].to_string(),
                ));
            }
        }
        Err(e) => checks.push(Check::all(
            "cis2 initial profiles",
            Some(format!("expansion failed: {e}")),
        )),
    }

    checks
}

/// Compares every recursion and closed form against brute-force enumeration
/// on boards up to `size` vertices (one more for Snort cycles).
pub fn suite_recursions(size: usize) -> Vec<Check> {
    let size = size.min(DEFAULT_VERTEX_LIMIT);
    let mut checks = Vec::new();

    for k in 1..=3u32 {
        let failure = (0..=size).find_map(|n| {
            let got = formulas::encis_path_profile(k, n);
            let want = brute(&Board::path(n), GameId::EnCis(k));
            (got != want).then(|| format!("P{n}: recursion {got}, enumeration {want}"))
        });
        checks.push(Check::all(
            format!("encis:{k} path profiles vs brute force (n <= {size})"),
            failure,
        ));
    }

    let failure = (0..=size).find_map(|n| {
        let got = formulas::cis2_path_profile(n);
        let want = brute(&Board::path(n), GameId::Cis2);
        (got != want).then(|| format!("P{n}: recursion {got}, enumeration {want}"))
    });
    checks.push(Check::all(
        format!("cis2 path profiles vs brute force (n <= {size})"),
        failure,
    ));

    let failure = (3..=size).find_map(|n| {
        let got = formulas::cis_cycle_profile(n).expect("n >= 3");
        let want = brute(&Board::cycle(n).expect("n >= 3"), GameId::Cis);
        (got != want).then(|| format!("C{n}: recursion {got}, enumeration {want}"))
    });
    checks.push(Check::all(
        format!("cis cycle profiles vs brute force (n <= {size})"),
        failure,
    ));

    let failure = (3..=size).find_map(|n| match formulas::cis_cycle_count(n) {
        Ok(count) => {
            let want = brute(&Board::cycle(n).expect("n >= 3"), GameId::Cis).total();
            (count != want).then(|| format!("C{n}: closed form {count}, enumeration {want}"))
        }
        Err(e) => Some(format!("C{n}: {e}")),
    });
    checks.push(Check::all(
        format!("cis cycle counts 2^n + (-1)^n vs brute force (n <= {size})"),
        failure,
    ));

    let failure = (0..=size).find_map(|n| {
        let got = formulas::col_path_count(n);
        let want = brute(&Board::path(n), GameId::Col).total();
        (got != want).then(|| format!("P{n}: recurrence {got}, enumeration {want}"))
    });
    checks.push(Check::all(
        format!("col path counts vs brute force (n <= {size})"),
        failure,
    ));

    let failure = (0..=size).find_map(|n| {
        let got = formulas::snort_path_count(n);
        let want = brute(&Board::path(n), GameId::Snort).total();
        (got != want).then(|| format!("P{n}: recurrence {got}, enumeration {want}"))
    });
    checks.push(Check::all(
        format!("snort path counts vs brute force (n <= {size})"),
        failure,
    ));

    let failure = (3..=size).find_map(|n| {
        let got = formulas::col_cycle_count(n).expect("n >= 3");
        let want = brute(&Board::cycle(n).expect("n >= 3"), GameId::Col).total();
        (got != want).then(|| format!("C{n}: recursion {got}, enumeration {want}"))
    });
    checks.push(Check::all(
        format!("col cycle counts vs brute force (n <= {size})"),
        failure,
    ));

    let snort_max = (size + 1).min(DEFAULT_VERTEX_LIMIT);
    let failure = (3..=snort_max).find_map(|n| {
        let got = formulas::snort_cycle_count(n).expect("n >= 3");
        let want = brute(&Board::cycle(n).expect("n >= 3"), GameId::Snort).total();
        (got != want).then(|| format!("C{n}: recursion {got}, enumeration {want}"))
    });
    checks.push(Check::all(
        format!("snort cycle counts vs brute force (n <= {snort_max})"),
        failure,
    ));

    let failure = (0..size).find_map(|leaves| {
        [GameId::Col, GameId::Snort, GameId::Cis]
            .into_iter()
            .find_map(|id| {
                let got = formulas::star_count(id, leaves).expect("supported game");
                let want = brute(&Board::star(leaves), id).total();
                (got != want).then(|| {
                    format!("{id}, {leaves} leaves: closed form {got}, enumeration {want}")
                })
            })
    });
    checks.push(Check::all(
        format!("star counts vs brute force (< {size} leaves)"),
        failure,
    ));

    let mut kmn_failure = None;
    'outer: for m in 1..size {
        for n in 1..=(size - m) {
            let board = Board::complete_bipartite(m, n).expect("parts nonempty");
            let want_cis = brute(&board, GameId::Cis).total();
            let got_cis = formulas::cis_kmn_count(m, n);
            if got_cis != want_cis {
                kmn_failure = Some(format!(
                    "cis K{{{m},{n}}}: closed form {got_cis}, enumeration {want_cis}"
                ));
                break 'outer;
            }
            let got = formulas::colsnort_kmn_count(m, n);
            for id in [GameId::Col, GameId::Snort] {
                let want = brute(&board, id).total();
                if got != want {
                    kmn_failure = Some(format!(
                        "{id} K{{{m},{n}}}: oracle {got}, enumeration {want}"
                    ));
                    break 'outer;
                }
            }
        }
    }
    checks.push(Check::all(
        format!("complete bipartite counts vs brute force (m + n <= {size})"),
        kmn_failure,
    ));

    let conjecture = formulas::conjecture_check(6, 40, &BTreeMap::new())
        .expect("built-in constants cover m <= 6");
    let failure = conjecture.iter().find(|cell| !cell.matches).map(|cell| {
        format!(
            "K{{{},{}}}: conjectured {}, oracle {}",
            cell.m, cell.n, cell.conjectured, cell.oracle
        )
    });
    checks.push(Check::all(
        "conjectured recursion vs oracle (m <= 6, n <= 40)",
        failure,
    ));

    checks
}

/// Expands every builtin generating function and compares each coefficient
/// with brute-force enumeration on the corresponding board.
pub fn suite_series(size: usize) -> Vec<Check> {
    let size = size.min(DEFAULT_VERTEX_LIMIT);
    let mut checks = Vec::new();

    let path_families: Vec<(SeriesFamily, GameId, usize)> = vec![
        (SeriesFamily::ColPath, GameId::Col, size),
        (SeriesFamily::SnortPath, GameId::Snort, size),
        (SeriesFamily::CisPath, GameId::Cis, size),
        (SeriesFamily::Cis2Path, GameId::Cis2, size),
        (SeriesFamily::EnCis(1), GameId::EnCis(1), size),
        (SeriesFamily::EnCis(2), GameId::EnCis(2), size),
        (SeriesFamily::EnCis(3), GameId::EnCis(3), size),
        (SeriesFamily::EnSnort(1), GameId::EnSnort(1), size),
        (SeriesFamily::EnSnort(2), GameId::EnSnort(2), size),
        (SeriesFamily::EnSnort(3), GameId::EnSnort(3), size.min(10)),
    ];
    for (family, id, max_n) in path_families {
        let check = match builtin_gf(family).expand(max_n) {
            Ok(profiles) => {
                let failure = (0..=max_n).find_map(|n| {
                    let want = brute(&Board::path(n), id);
                    (profiles[n] != want)
                        .then(|| format!("P{n}: series {}, enumeration {want}", profiles[n]))
                });
                Check::all(
                    format!("{family} series vs brute force (n <= {max_n})"),
                    failure,
                )
            }
            Err(e) => Check::all(
                format!("{family} series vs brute force (n <= {max_n})"),
                Some(format!("expansion failed: {e}")),
            ),
        };
        checks.push(check);
    }

    let check = match builtin_gf(SeriesFamily::CisCycle).expand(size.max(3)) {
        Ok(profiles) => {
            let failure = (3..=size.max(3)).find_map(|n| {
                let want = brute(&Board::cycle(n).expect("n >= 3"), GameId::Cis);
                (profiles[n] != want)
                    .then(|| format!("C{n}: series {}, enumeration {want}", profiles[n]))
            });
            Check::all(
                format!("cis_cycle series vs brute force (n <= {size})"),
                failure,
            )
        }
        Err(e) => Check::all(
            format!("cis_cycle series vs brute force (n <= {size})"),
            Some(format!("expansion failed: {e}")),
        ),
    };
    checks.push(check);

    checks
}

/// Deterministic random bipartite board: vertices are split in two sides and
/// each cross pair becomes an edge with probability 1/2.
pub fn random_bipartite_board(n: usize, seed: u64) -> Board {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut side = vec![false; n];
    for s in side.iter_mut() {
        *s = rng.gen_bool(0.5);
    }
    // Keep both sides nonempty when possible so the boards are not all
    // edgeless.
    if n >= 2 && side.iter().all(|&s| s == side[0]) {
        side[0] = !side[0];
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Board::from_edge_list(n, &edges).expect("generated edges are valid")
}

/// On bipartite boards, Col and Snort have the same univariate profile. This
/// suite checks that on the structured bipartite families and on randomized
/// bipartite boards with fixed seeds.
pub fn suite_doppelganger(size: usize) -> Vec<Check> {
    let size = size.min(DEFAULT_VERTEX_LIMIT);
    let mut boards: Vec<(String, Board)> = Vec::new();
    for n in 0..=size {
        boards.push((format!("P{n}"), Board::path(n)));
    }
    for n in (4..=size).step_by(2) {
        boards.push((format!("C{n}"), Board::cycle(n).expect("n >= 4")));
    }
    for leaves in 0..size {
        boards.push((format!("star:{leaves}"), Board::star(leaves)));
    }
    for m in 1..size {
        for n in m..=(size - m) {
            boards.push((
                format!("K{{{m},{n}}}"),
                Board::complete_bipartite(m, n).expect("parts nonempty"),
            ));
        }
    }
    let structured_failure = boards.iter().find_map(|(name, board)| {
        let col = brute(board, GameId::Col).univariate_collapse();
        let snort = brute(board, GameId::Snort).univariate_collapse();
        (col != snort).then(|| {
            format!(
                "{name}: col {}, snort {}",
                fmt_counts(&col),
                fmt_counts(&snort)
            )
        })
    });

    let mut checks = vec![Check::all(
        format!("col = snort univariate on structured bipartite boards (<= {size} vertices)"),
        structured_failure,
    )];

    let random_failure = (0..50u64).find_map(|seed| {
        let n = 4 + (seed as usize) % 7; // 4..=10 vertices
        let board = random_bipartite_board(n, seed);
        let col = brute(&board, GameId::Col).univariate_collapse();
        let snort = brute(&board, GameId::Snort).univariate_collapse();
        (col != snort).then(|| {
            format!(
                "seed {seed} ({n} vertices, edges {:?}): col {}, snort {}",
                board.edges(),
                fmt_counts(&col),
                fmt_counts(&snort)
            )
        })
    });
    checks.push(Check::all(
        "col = snort univariate on 50 random bipartite boards (4..=10 vertices)",
        random_failure,
    ));

    checks
}

/// Col cycle counts for n = 3..=12 and Snort cycle counts for n = 3..=13,
/// frozen from brute-force enumeration. The recursion route must keep
/// reproducing them.
const COL_CYCLE_COUNTS: [u64; 10] = [13, 35, 81, 199, 477, 1155, 2785, 6727, 16237, 39203];
const SNORT_CYCLE_COUNTS: [u64; 11] = [15, 35, 83, 199, 479, 1155, 2787, 6727, 16239, 39203, 94643];

/// Compares the cycle-count recursions against the frozen prefixes.
pub fn suite_oeis() -> Vec<Check> {
    let col_failure = COL_CYCLE_COUNTS.iter().enumerate().find_map(|(i, &want)| {
        let n = i + 3;
        let got = formulas::col_cycle_count(n).expect("n >= 3");
        (got != BigUint::from(want)).then(|| format!("C{n}: recursion {got}, stored {want}"))
    });
    let snort_failure = SNORT_CYCLE_COUNTS
        .iter()
        .enumerate()
        .find_map(|(i, &want)| {
            let n = i + 3;
            let got = formulas::snort_cycle_count(n).expect("n >= 3");
            (got != BigUint::from(want)).then(|| format!("C{n}: recursion {got}, stored {want}"))
        });
    vec![
        Check::all(
            "col cycle counts match stored prefix (n = 3..=12)",
            col_failure,
        ),
        Check::all(
            "snort cycle counts match stored prefix (n = 3..=13)",
            snort_failure,
        ),
    ]
}

/// Named suite lookup used by the command line. Each suite has its own
/// default size bound; an explicit `size` overrides it.
pub fn run_suite(name: &str, size: Option<usize>) -> Result<Vec<Check>, String> {
    match name {
        "examples" => Ok(suite_examples()),
        "recursions" => Ok(suite_recursions(size.unwrap_or(12))),
        "series" => Ok(suite_series(size.unwrap_or(12))),
        "doppelganger" => Ok(suite_doppelganger(size.unwrap_or(10))),
        "oeis" => Ok(suite_oeis()),
        "all" => {
            let mut checks = suite_examples();
            checks.extend(suite_recursions(size.unwrap_or(12)));
            checks.extend(suite_series(size.unwrap_or(12)));
            checks.extend(suite_doppelganger(size.unwrap_or(10)));
            checks.extend(suite_oeis());
            Ok(checks)
        }
        other => Err(format!(
            "unknown suite `{other}` (expected examples, recursions, series, doppelganger, oeis, or all)"
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_all_pass(checks: &[Check]) {
        for check in checks {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
    }

    #[test]
    fn examples_suite_passes() {
        assert_all_pass(&suite_examples());
    }

    #[test]
    fn oeis_suite_passes() {
        assert_all_pass(&suite_oeis());
    }

    #[test]
    fn doppelganger_suite_passes_small() {
        assert_all_pass(&suite_doppelganger(8));
    }

    #[test]
    fn recursion_and_series_suites_pass_small() {
        assert_all_pass(&suite_recursions(8));
        assert_all_pass(&suite_series(8));
    }

    #[test]
    fn random_bipartite_boards_are_bipartite_and_deterministic() {
        for seed in 0..20 {
            let b1 = random_bipartite_board(9, seed);
            let b2 = random_bipartite_board(9, seed);
            assert_eq!(b1, b2);
            assert!(b1.is_bipartite());
        }
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nope", None).is_err());
    }

    #[test]
    fn all_suite_composes_every_group() {
        let all = run_suite("all", Some(6)).unwrap();
        let individual = suite_examples().len()
            + suite_recursions(6).len()
            + suite_series(6).len()
            + suite_doppelganger(6).len()
            + suite_oeis().len();
        assert_eq!(all.len(), individual);
        assert_all_pass(&all);
    }

    #[test]
    fn failing_checks_carry_counterexamples() {
        let check = Check::eq("demo", 7, 9);
        assert!(!check.passed);
        assert_eq!(check.detail, "expected 7, got 9");
        let check = Check::all("demo", Some("C5: recursion 80, enumeration 81".into()));
        assert!(!check.passed);
        assert!(check.detail.contains("C5"));
        assert!(Check::all("demo", None).passed);
    }
}
