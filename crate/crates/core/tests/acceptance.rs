//! Acceptance suite: one test per criterion, each printing a pass line once
//! its exact checks hold. Every comparison here is exact integer equality.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dgprof::board::Board;
use dgprof::enumerate::{brute_force_profile, independent_set_profile, DEFAULT_VERTEX_LIMIT};
use dgprof::formulas;
use dgprof::poly::{Profile, TriPoly};
use dgprof::rules::{GameId, GameRules};
use dgprof::series::{builtin_gf, regex_to_series, Regex, SeriesFamily};
use dgprof::verify;

fn brute(board: &Board, id: GameId) -> Profile {
    brute_force_profile(board, &GameRules::named(id), DEFAULT_VERTEX_LIMIT)
        .expect("acceptance boards fit the enumeration limit")
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

#[test]
fn criterion_1_worked_examples() {
    let cis_p4 = brute(&Board::path(4), GameId::Cis);
    assert_eq!(cis_p4.to_string(), "1 + 4x + 4y + 3x^2 + 6xy + 3y^2");
    assert_eq!(cis_p4.total(), big(21));
    assert_eq!(cis_p4.alternating_part().to_string(), "1 + 4x + 4y + 6xy");
    assert_eq!(cis_p4.alternating_part().total(), big(15));

    let c4 = Board::cycle(4).unwrap();
    let col_c4 = brute(&c4, GameId::Col);
    assert_eq!(
        col_c4.to_string(),
        "1 + 4x + 4y + 2x^2 + 12xy + 2y^2 + 4x^2y + 4xy^2 + 2x^2y^2"
    );
    assert_eq!(col_c4.total(), big(35));
    let via_sets = independent_set_profile(&c4, &GameRules::named(GameId::Col), 24).unwrap();
    assert_eq!(via_sets, col_c4);

    let snort_c4 = brute(&c4, GameId::Snort);
    assert_eq!(
        snort_c4.to_string(),
        "1 + 4x + 4y + 6x^2 + 4xy + 6y^2 + 4x^3 + 4y^3 + x^4 + y^4"
    );

    println!("criterion 1: PASS - worked examples reproduced bit-exactly");
}

/// Position counts on K_{m,n} for Col and Snort, frozen over the full
/// staircase of published values (rows m = 0..=13).
const KMN_TABLE: [&[u64]; 14] = [
    &[
        1, 3, 9, 27, 81, 243, 729, 2187, 6561, 19683, 59049, 177147, 531441, 1594323,
    ],
    &[
        3, 7, 17, 43, 113, 307, 857, 2443, 7073, 20707, 61097, 181243, 539633,
    ],
    &[
        9, 17, 35, 77, 179, 437, 1115, 2957, 8099, 22757, 65195, 189437,
    ],
    &[27, 43, 77, 151, 317, 703, 1637, 3991, 10157, 26863, 73397],
    &[81, 113, 179, 317, 611, 1253, 2699, 6077, 14291],
    &[243, 307, 437, 703, 1253, 2407, 4877, 10303],
    &[729, 857, 1115, 1637, 2699, 4877, 9395],
    &[2187, 2443, 2957, 3991, 6077, 10303],
    &[6561, 7073, 8099, 10157, 14291],
    &[19683, 20707, 22757, 26863],
    &[59049, 61097, 65195, 73397],
    &[177147, 181243, 189437],
    &[531441, 539633],
    &[1594323],
];

#[test]
fn criterion_2_tables() {
    // EnSnort(2) initial profiles, series route.
    let ensnort = builtin_gf(SeriesFamily::EnSnort(2)).expand(3).unwrap();
    let ensnort_expected = [
        ("1", "1", 1u64),
        ("1 + x + y", "1 + 2x", 3),
        ("1 + 2x + 2y + x^2 + y^2", "1 + 4x + 2x^2", 7),
        (
            "1 + 3x + 3y + 3x^2 + 3y^2 + x^3 + y^3",
            "1 + 6x + 6x^2 + 2x^3",
            15,
        ),
    ];
    for (n, (profile, univariate, total)) in ensnort_expected.iter().enumerate() {
        assert_eq!(ensnort[n].to_string(), *profile, "ensnort:2 P{n}");
        assert_eq!(
            univariate_text(&ensnort[n]),
            *univariate,
            "ensnort:2 P{n} univariate"
        );
        assert_eq!(ensnort[n].total(), big(*total), "ensnort:2 P{n} total");
        assert_eq!(
            ensnort[n],
            brute(&Board::path(n), GameId::EnSnort(2)),
            "ensnort:2 P{n} brute force"
        );
    }

    // Cis2 initial profiles from both the recursion and the series route.
    let cis2_series = builtin_gf(SeriesFamily::Cis2Path).expand(3).unwrap();
    // The n = 2 univariate entry is the collapse of the bivariate profile
    // (1 + 4x + 4x^2, totalling 9): all four two-piece placements on P_2
    // are legal when only distance 2 is forbidden.
    let cis2_expected = [
        ("1", "1", 1u64),
        ("1 + x + y", "1 + 2x", 3),
        ("1 + 2x + 2y + x^2 + 2xy + y^2", "1 + 4x + 4x^2", 9),
        ("1 + 3x + 3y + 2x^2 + 4xy + 2y^2", "1 + 6x + 8x^2", 15),
    ];
    for (n, (profile, univariate, total)) in cis2_expected.iter().enumerate() {
        let recursion = formulas::cis2_path_profile(n);
        assert_eq!(recursion.to_string(), *profile, "cis2 P{n} recursion");
        assert_eq!(cis2_series[n], recursion, "cis2 P{n} series route");
        assert_eq!(
            recursion,
            brute(&Board::path(n), GameId::Cis2),
            "cis2 P{n} brute force"
        );
        assert_eq!(univariate_text(&recursion), *univariate);
        assert_eq!(recursion.total(), big(*total));
    }

    // The complete bipartite table over its entire filled region.
    for (m, row) in KMN_TABLE.iter().enumerate() {
        for (n, &value) in row.iter().enumerate() {
            assert_eq!(
                formulas::colsnort_kmn_count(m, n),
                big(value),
                "K{{{m},{n}}}"
            );
        }
    }
    assert_eq!(formulas::colsnort_kmn_count(2, 3), big(77));
    assert_eq!(formulas::colsnort_kmn_count(3, 3), big(151));
    assert_eq!(formulas::colsnort_kmn_count(4, 4), big(611));
    assert_eq!(formulas::colsnort_kmn_count(6, 6), big(9395));

    println!("criterion 2: PASS - initial-term tables and the K_{{m,n}} table reproduced");
}

fn univariate_text(p: &Profile) -> String {
    let counts = p.univariate_collapse();
    let mut out = String::new();
    for (i, c) in counts.iter().enumerate() {
        if c == &BigUint::from(0u32) {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        let coeff = if c.is_one() && i > 0 {
            String::new()
        } else {
            c.to_string()
        };
        match i {
            0 => out.push_str(&c.to_string()),
            1 => out.push_str(&format!("{coeff}x")),
            p => out.push_str(&format!("{coeff}x^{p}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[test]
fn criterion_3_three_route_agreement() {
    // Bivariate profile routes on paths.
    let profile_cases: Vec<(GameId, SeriesFamily, Option<fn(usize) -> Profile>)> = vec![
        (GameId::Col, SeriesFamily::ColPath, None),
        (GameId::Snort, SeriesFamily::SnortPath, None),
        (
            GameId::Cis,
            SeriesFamily::CisPath,
            Some(|n| formulas::cis_path_profile(n)),
        ),
        (
            GameId::Cis2,
            SeriesFamily::Cis2Path,
            Some(|n| formulas::cis2_path_profile(n)),
        ),
        (
            GameId::EnCis(1),
            SeriesFamily::EnCis(1),
            Some(|n| formulas::encis_path_profile(1, n)),
        ),
        (
            GameId::EnCis(2),
            SeriesFamily::EnCis(2),
            Some(|n| formulas::encis_path_profile(2, n)),
        ),
        (
            GameId::EnCis(3),
            SeriesFamily::EnCis(3),
            Some(|n| formulas::encis_path_profile(3, n)),
        ),
        (GameId::EnSnort(1), SeriesFamily::EnSnort(1), None),
        (GameId::EnSnort(2), SeriesFamily::EnSnort(2), None),
        (GameId::EnSnort(3), SeriesFamily::EnSnort(3), None),
    ];
    for (id, family, recursion) in profile_cases {
        let series = builtin_gf(family).expand(12).unwrap();
        for n in 0..=12usize {
            let enumerated = brute(&Board::path(n), id);
            assert_eq!(series[n], enumerated, "{id} on P{n}: series vs brute force");
            if let Some(recursion) = recursion {
                assert_eq!(
                    recursion(n),
                    enumerated,
                    "{id} on P{n}: recursion vs brute force"
                );
            }
        }
    }

    // Count routes for Col and Snort on paths.
    for n in 0..=12usize {
        assert_eq!(
            formulas::col_path_count(n),
            brute(&Board::path(n), GameId::Col).total()
        );
        assert_eq!(
            formulas::snort_path_count(n),
            brute(&Board::path(n), GameId::Snort).total()
        );
    }

    // Cis on cycles: all three routes, full bivariate profiles.
    let cycle_series = builtin_gf(SeriesFamily::CisCycle).expand(12).unwrap();
    for n in 3..=12usize {
        let enumerated = brute(&Board::cycle(n).unwrap(), GameId::Cis);
        assert_eq!(formulas::cis_cycle_profile(n).unwrap(), enumerated);
        assert_eq!(cycle_series[n], enumerated);
    }

    println!("criterion 3: PASS - brute force, recursions, and series agree through size 12");
}

#[test]
fn criterion_4_closed_forms_at_scale() {
    // cis_cycle_count internally asserts closed form == recursion route.
    for n in 3..=30usize {
        let count = formulas::cis_cycle_count(n).expect("closed form and recursion agree");
        let expected = if n % 2 == 0 {
            (BigUint::one() << n) + BigUint::one()
        } else {
            (BigUint::one() << n) - BigUint::one()
        };
        assert_eq!(count, expected);
    }
    for n in 3..=14usize {
        assert_eq!(
            formulas::cis_cycle_count(n).unwrap(),
            brute(&Board::cycle(n).unwrap(), GameId::Cis).total(),
            "cis C{n} vs brute force"
        );
    }

    for leaves in 0..=11usize {
        for id in [GameId::Col, GameId::Snort, GameId::Cis] {
            assert_eq!(
                formulas::star_count(id, leaves).unwrap(),
                brute(&Board::star(leaves), id).total(),
                "{id} star {leaves}"
            );
        }
    }

    for m in 1..=11usize {
        for n in 1..=(12 - m) {
            assert_eq!(
                formulas::cis_kmn_count(m, n),
                brute(&Board::complete_bipartite(m, n).unwrap(), GameId::Cis).total(),
                "cis K{{{m},{n}}}"
            );
        }
    }

    println!("criterion 4: PASS - closed forms hold at scale and match brute force");
}

#[test]
fn criterion_5_cycle_recursions() {
    for n in 3..=12usize {
        assert_eq!(
            formulas::col_cycle_count(n).unwrap(),
            brute(&Board::cycle(n).unwrap(), GameId::Col).total(),
            "col C{n}"
        );
    }
    for n in 3..=13usize {
        assert_eq!(
            formulas::snort_cycle_count(n).unwrap(),
            brute(&Board::cycle(n).unwrap(), GameId::Snort).total(),
            "snort C{n}"
        );
    }

    // The resolved recursion variants are documented with their brute-force
    // evidence at the repository root.
    let doc = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../VERIFICATION.md"
    ))
    .expect("VERIFICATION.md documents the resolved recursion variants");
    for needle in ["477", "2^n + (-1)^n", "cycle"] {
        assert!(
            doc.contains(needle),
            "VERIFICATION.md should mention `{needle}`"
        );
    }

    println!("criterion 5: PASS - cycle recursions match brute force (col <= 12, snort <= 13)");
}

#[test]
fn criterion_6_doppelganger() {
    // Structured bipartite families.
    let mut boards: Vec<Board> = Vec::new();
    for n in 0..=10 {
        boards.push(Board::path(n));
    }
    for n in (4..=10).step_by(2) {
        boards.push(Board::cycle(n).unwrap());
    }
    for leaves in 0..=9 {
        boards.push(Board::star(leaves));
    }
    for m in 1..=5 {
        for n in m..=(10 - m) {
            boards.push(Board::complete_bipartite(m, n).unwrap());
        }
    }
    for board in &boards {
        assert!(board.is_bipartite());
        assert_eq!(
            brute(board, GameId::Col).univariate_collapse(),
            brute(board, GameId::Snort).univariate_collapse(),
            "structured board {board}"
        );
    }

    // 50 randomized bipartite boards with at most 10 vertices.
    for seed in 0..50u64 {
        let n = 4 + (seed as usize) % 7;
        let board = verify::random_bipartite_board(n, seed);
        assert!(board.is_bipartite());
        assert_eq!(
            brute(&board, GameId::Col).univariate_collapse(),
            brute(&board, GameId::Snort).univariate_collapse(),
            "random board seed {seed}"
        );
    }

    println!("criterion 6: PASS - col and snort univariate profiles agree on bipartite boards");
}

#[test]
fn criterion_7_conjecture_harness() {
    let report = formulas::conjecture_check(6, 40, &BTreeMap::new()).unwrap();
    // Completeness: one cell for each (m, n) in 2..=6 x 2..=40.
    assert_eq!(report.len(), 5 * 39);

    // Within the published table range the conjecture must reproduce the
    // frozen values.
    for cell in &report {
        if let Some(&value) = KMN_TABLE
            .get(cell.m)
            .and_then(|row: &&[u64]| row.get(cell.n))
        {
            assert_eq!(
                cell.oracle,
                big(value),
                "oracle at ({}, {})",
                cell.m,
                cell.n
            );
        }
    }

    // Mismatches beyond the published data are reported, not failed.
    let mismatches: Vec<_> = report.iter().filter(|c| !c.matches).collect();
    for cell in &mismatches {
        println!(
            "criterion 7: conjecture mismatch at ({}, {}): conjectured {}, oracle {}",
            cell.m, cell.n, cell.conjectured, cell.oracle
        );
    }
    println!(
        "criterion 7: PASS - conjecture harness ran on m <= 6, n <= 40; {} mismatches reported",
        mismatches.len()
    );
}

fn random_profile(rng: &mut ChaCha8Rng) -> Profile {
    let terms = rng.gen_range(0..6);
    Profile::from_terms((0..terms).map(|_| {
        (
            rng.gen_range(0..4u32),
            rng.gen_range(0..4u32),
            BigUint::from(rng.gen_range(0..8u64)),
        )
    }))
}

fn random_tripoly(rng: &mut ChaCha8Rng) -> TriPoly {
    let terms = rng.gen_range(0..5);
    let mut p = TriPoly::zero();
    for _ in 0..terms {
        p = p.add(&TriPoly::term(
            rng.gen_range(0..3u32),
            rng.gen_range(0..3u32),
            rng.gen_range(0..3u32),
            num_bigint::BigInt::from(rng.gen_range(-6i64..=6)),
        ));
    }
    p
}

fn random_regex(rng: &mut ChaCha8Rng, depth: usize) -> Regex {
    use dgprof::rules::CellState::{Blue, Empty, Red};
    if depth == 0 {
        return match rng.gen_range(0..4) {
            0 => Regex::Atom(Empty),
            1 => Regex::Atom(Blue),
            2 => Regex::Atom(Red),
            _ => Regex::Epsilon,
        };
    }
    match rng.gen_range(0..4) {
        0 => Regex::concat((0..rng.gen_range(1..4)).map(|_| random_regex(rng, depth - 1))),
        1 => Regex::alt((0..rng.gen_range(1..4)).map(|_| random_regex(rng, depth - 1))),
        2 => {
            // Stars only around expressions that cannot match the empty
            // string, so the compiled series stays invertible.
            let inner = random_regex(rng, depth - 1);
            if inner.accepts_epsilon() {
                Regex::star(Regex::concat([Regex::Atom(Empty), inner]))
            } else {
                Regex::star(inner)
            }
        }
        _ => {
            let min = rng.gen_range(0..3u32);
            Regex::repeat(
                random_regex(rng, depth - 1),
                min,
                min + rng.gen_range(0..3u32),
            )
        }
    }
}

fn random_board(rng: &mut ChaCha8Rng, n: usize) -> Board {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.4) {
                edges.push((u, v));
            }
        }
    }
    Board::from_edge_list(n, &edges).unwrap()
}

#[test]
fn criterion_8_property_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_817);

    // Ring axioms on random profiles and signed polynomials.
    for _ in 0..200 {
        let (a, b, c) = (
            random_profile(&mut rng),
            random_profile(&mut rng),
            random_profile(&mut rng),
        );
        assert_eq!(a.add(&b), b.add(&a));
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        assert_eq!(a.mul(&Profile::one()), a);
        // evaluate(1,1) equals the univariate total.
        let total: BigUint = a.univariate_collapse().iter().sum();
        assert_eq!(a.total(), total);

        let (ta, tb, tc) = (
            random_tripoly(&mut rng),
            random_tripoly(&mut rng),
            random_tripoly(&mut rng),
        );
        assert_eq!(ta.add(&tb), tb.add(&ta));
        assert_eq!(ta.mul(&tb), tb.mul(&ta));
        assert_eq!(ta.mul(&tb.add(&tc)), ta.mul(&tb).add(&ta.mul(&tc)));
        assert!(ta.sub(&ta).is_zero());
    }

    // Symmetry, nonnegativity (by construction of Profile), and downward
    // closure of brute-force profiles on random boards.
    let games = [
        GameId::Col,
        GameId::Snort,
        GameId::Cis,
        GameId::Cis2,
        GameId::EnCis(2),
        GameId::EnSnort(2),
        GameId::EnCol(2),
    ];
    for round in 0..30 {
        let n = 3 + (round % 6);
        let board = random_board(&mut rng, n);
        let id = games[round % games.len()];
        let p = brute(&board, id);
        assert_eq!(p, p.color_swap(), "x<->y symmetry on {board}");
        assert!(p.total() >= BigUint::one());
        for (b, r, _) in p.terms() {
            if b > 0 {
                assert!(
                    p.coefficient(b - 1, r) > BigUint::from(0u32),
                    "downward closure in blue on {board}"
                );
            }
            if r > 0 {
                assert!(
                    p.coefficient(b, r - 1) > BigUint::from(0u32),
                    "downward closure in red on {board}"
                );
            }
        }
    }

    // Regex compiler homomorphism: concatenation expands to convolution and
    // alternation to sums, exactly.
    let mut checked = 0;
    while checked < 40 {
        let a = random_regex(&mut rng, 2);
        let b = random_regex(&mut rng, 2);
        let (Ok(sa), Ok(sb)) = (regex_to_series(&a), regex_to_series(&b)) else {
            continue;
        };
        checked += 1;
        let ea = sa.expand(8).unwrap();
        let eb = sb.expand(8).unwrap();
        let concat = regex_to_series(&Regex::concat([a.clone(), b.clone()]))
            .unwrap()
            .expand(8)
            .unwrap();
        let alt = regex_to_series(&Regex::alt([a, b]))
            .unwrap()
            .expand(8)
            .unwrap();
        for n in 0..=8usize {
            let mut conv = Profile::zero();
            for i in 0..=n {
                conv = conv.add(&ea[i].mul(&eb[n - i]));
            }
            assert_eq!(conv, concat[n], "concat homomorphism at order {n}");
            assert_eq!(ea[n].add(&eb[n]), alt[n], "alt homomorphism at order {n}");
        }
    }

    println!("criterion 8: PASS - property suites hold on fixed-seed randomized inputs");
}
