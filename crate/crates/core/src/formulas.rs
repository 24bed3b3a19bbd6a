//! Recursions and closed forms for profiles and position counts on paths,
//! cycles, stars, and complete bipartite boards, plus the falsification
//! harness for the conjectured complete-bipartite recursion.
//!
//! Everything here is validated against brute-force enumeration; see
//! VERIFICATION.md at the repository root for how the recursion variants
//! were pinned down.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use thiserror::Error;

use crate::board::Board;
use crate::enumerate::{brute_force_profile, DEFAULT_VERTEX_LIMIT};
use crate::poly::Profile;
use crate::rules::{GameId, GameRules};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("no closed form for game `{0}` here")]
    UnsupportedGame(String),
    #[error("no conjecture constant for m = {0}; supply it explicitly")]
    MissingConstant(usize),
    #[error("closed form {closed_form} and recursion {recursion} diverge at n = {n}")]
    ClosedFormMismatch {
        n: usize,
        closed_form: BigUint,
        recursion: BigUint,
    },
}

fn x_plus_y() -> Profile {
    Profile::term(1, 0, 1u32).add(&Profile::term(0, 1, 1u32))
}

/// `1 + n x + n y`: the profile of a board where no two pieces fit.
fn singles_only(n: usize) -> Profile {
    let mut p = Profile::one();
    if n > 0 {
        p.add_term(1, 0, BigUint::from(n));
        p.add_term(0, 1, BigUint::from(n));
    }
    p
}

/// Profile of EnCis(k) on the path P_n. For n <= k no two pieces fit, so the
/// profile is 1 + nx + ny; beyond that, conditioning on the leftmost vertex
/// gives P(n) = P(n-1) + (x+y) P(n-k-1).
pub fn encis_path_profile(k: u32, n: usize) -> Profile {
    assert!(k >= 1, "EnCis parameter must be >= 1");
    let k = k as usize;
    let mut table: Vec<Profile> = Vec::with_capacity(n + 1);
    let xy = x_plus_y();
    for i in 0..=n {
        let p = if i <= k {
            singles_only(i)
        } else {
            table[i - 1].add(&xy.mul(&table[i - k - 1]))
        };
        table.push(p);
    }
    table.pop().expect("table has n+1 entries")
}

/// Profile of Cis (= EnCis(1)) on P_n.
pub fn cis_path_profile(n: usize) -> Profile {
    encis_path_profile(1, n)
}

fn cis2_base(n: usize) -> Profile {
    // Profiles of Cis2 on P_0..P_3, where the recursion does not yet apply.
    let b = |v: &[(u32, u32, u64)]| {
        Profile::from_terms(v.iter().map(|&(b, r, c)| (b, r, BigUint::from(c))))
    };
    match n {
        0 => Profile::one(),
        1 => b(&[(0, 0, 1), (1, 0, 1), (0, 1, 1)]),
        2 => b(&[
            (0, 0, 1),
            (1, 0, 2),
            (0, 1, 2),
            (2, 0, 1),
            (0, 2, 1),
            (1, 1, 2),
        ]),
        3 => b(&[
            (0, 0, 1),
            (1, 0, 3),
            (0, 1, 3),
            (2, 0, 2),
            (0, 2, 2),
            (1, 1, 4),
        ]),
        _ => unreachable!("base cases stop at n = 3"),
    }
}

/// Profile of Cis2 (forbidden distance exactly 2, either color) on P_n.
/// Conditioning on the leftmost vertex: empty, colored-then-two-empty, or
/// two colored then two empty, giving
/// P(n) = P(n-1) + (x+y) P(n-3) + (x+y)^2 P(n-4) for n >= 4.
pub fn cis2_path_profile(n: usize) -> Profile {
    if n <= 3 {
        return cis2_base(n);
    }
    let xy = x_plus_y();
    let xy2 = xy.mul(&xy);
    let mut table: Vec<Profile> = (0..=3).map(cis2_base).collect();
    for i in 4..=n {
        let p = table[i - 1]
            .add(&xy.mul(&table[i - 3]))
            .add(&xy2.mul(&table[i - 4]));
        table.push(p);
    }
    table.pop().expect("table has n+1 entries")
}

/// Profile of Cis on the cycle C_n: fixing one vertex, it is either empty
/// (any position on P_{n-1}) or colored with both neighbors forced empty
/// (any position on P_{n-3}), so P(C_n) = P(P_{n-1}) + (x+y) P(P_{n-3}).
pub fn cis_cycle_profile(n: usize) -> Result<Profile, FormulaError> {
    if n < 3 {
        return Err(FormulaError::CycleTooSmall(n));
    }
    Ok(cis_path_profile(n - 1).add(&x_plus_y().mul(&cis_path_profile(n - 3))))
}

/// Number of Cis positions on C_n: the closed form 2^n + (-1)^n, checked
/// against the recursion route before being returned.
pub fn cis_cycle_count(n: usize) -> Result<BigUint, FormulaError> {
    let closed_form = if n.is_multiple_of(2) {
        (BigUint::one() << n) + BigUint::one()
    } else {
        (BigUint::one() << n) - BigUint::one()
    };
    let recursion = cis_cycle_profile(n)?.total();
    if closed_form != recursion {
        return Err(FormulaError::ClosedFormMismatch {
            n,
            closed_form,
            recursion,
        });
    }
    Ok(closed_form)
}

/// Number of Col positions on P_n. The path generating function at
/// x = y = 1 is (1 + 2t + t^2) / (1 - t - 3t^2 - t^3), so counts satisfy
/// a(n) = a(n-1) + 3 a(n-2) + a(n-3) past the seeds 1, 3, 7.
pub fn col_path_count(n: usize) -> BigUint {
    let mut seeds = [
        BigUint::from(1u32),
        BigUint::from(3u32),
        BigUint::from(7u32),
    ];
    if n < 3 {
        return seeds[n].clone();
    }
    for _ in 3..=n {
        let next = &seeds[2] + BigUint::from(3u32) * &seeds[1] + &seeds[0];
        seeds.rotate_left(1);
        seeds[2] = next;
    }
    seeds[2].clone()
}

/// Number of Snort positions on P_n. The path generating function at
/// x = y = 1 reduces to (1 + t) / (1 - 2t - t^2), so counts satisfy
/// a(n) = 2 a(n-1) + a(n-2) past the seeds 1, 3.
pub fn snort_path_count(n: usize) -> BigUint {
    let mut seeds = [BigUint::from(1u32), BigUint::from(3u32)];
    if n < 2 {
        return seeds[n].clone();
    }
    for _ in 2..=n {
        let next = BigUint::from(2u32) * &seeds[1] + &seeds[0];
        seeds.rotate_left(1);
        seeds[1] = next;
    }
    seeds[1].clone()
}

fn cycle_bases(id: GameId) -> &'static (BigUint, BigUint) {
    // The cycle recursion needs C_3 and C_4 to start; those are enumerated
    // once and cached.
    static COL: OnceLock<(BigUint, BigUint)> = OnceLock::new();
    static SNORT: OnceLock<(BigUint, BigUint)> = OnceLock::new();
    let cell = match id {
        GameId::Col => &COL,
        GameId::Snort => &SNORT,
        _ => unreachable!("cycle bases only exist for Col and Snort"),
    };
    cell.get_or_init(|| {
        let rules = GameRules::named(id);
        let count = |n: usize| {
            brute_force_profile(&Board::cycle(n).unwrap(), &rules, DEFAULT_VERTEX_LIMIT)
                .expect("tiny cycle is under the limit")
                .total()
        };
        (count(3), count(4))
    })
}

fn cycle_count(
    id: GameId,
    path_count: fn(usize) -> BigUint,
    n: usize,
) -> Result<BigUint, FormulaError> {
    if n < 3 {
        return Err(FormulaError::CycleTooSmall(n));
    }
    let (c3, c4) = cycle_bases(id).clone();
    if n == 3 {
        return Ok(c3);
    }
    // C(n) = P(n-1) + 3 P(n-3) + 2 P(n-4) + C(n-2): the fixed vertex is
    // empty, or colored with both neighbors empty, both colored, or exactly
    // one colored.
    let mut prev2 = c3; // C(i-2)
    let mut prev1 = c4; // C(i-1)
    for i in 5..=n {
        let next = path_count(i - 1)
            + BigUint::from(3u32) * path_count(i - 3)
            + BigUint::from(2u32) * path_count(i - 4)
            + &prev2;
        prev2 = std::mem::replace(&mut prev1, next);
    }
    Ok(prev1)
}

/// Number of Col positions on C_n via the cycle recursion.
pub fn col_cycle_count(n: usize) -> Result<BigUint, FormulaError> {
    cycle_count(GameId::Col, col_path_count, n)
}

/// Number of Snort positions on C_n via the cycle recursion.
pub fn snort_cycle_count(n: usize) -> Result<BigUint, FormulaError> {
    cycle_count(GameId::Snort, snort_path_count, n)
}

/// Number of positions on the star K_{1,n}: the center's state determines
/// the leaves' freedom. Col and Snort give 2^{n+1} + 3^n; Cis gives 2 + 3^n.
pub fn star_count(id: GameId, leaves: usize) -> Result<BigUint, FormulaError> {
    let three_n = BigUint::from(3u32).pow(leaves as u32);
    match id {
        GameId::Col | GameId::Snort => Ok((BigUint::one() << (leaves + 1)) + three_n),
        GameId::Cis => Ok(BigUint::from(2u32) + three_n),
        other => Err(FormulaError::UnsupportedGame(other.to_string())),
    }
}

/// Number of Cis positions on K_{m,n}: once any vertex is colored, only its
/// own part stays playable, so the count is 3^m + 3^n - 1.
pub fn cis_kmn_count(m: usize, n: usize) -> BigUint {
    assert!(m >= 1 && n >= 1, "parts must be nonempty");
    BigUint::from(3u32).pow(m as u32) + BigUint::from(3u32).pow(n as u32) - BigUint::one()
}

/// Number of Col (equivalently Snort) positions on K_{m,n}, by classifying
/// the left part by the set of colors it uses: with no color the right side
/// is free (3^n), with one color the right side avoids it (2^n each, twice),
/// and with both colors the right side must stay empty. A part of size 0 is
/// an edgeless side. The count is symmetric in m and n.
pub fn colsnort_kmn_count(m: usize, n: usize) -> BigUint {
    let two_m = BigUint::one() << m;
    let one_color = &two_m - BigUint::one(); // only blue (or only red)
    let both_colors = BigUint::from(3u32).pow(m as u32) + BigUint::one() - (&two_m << 1);
    BigUint::from(3u32).pow(n as u32)
        + BigUint::from(2u32) * one_color * (BigUint::one() << n)
        + both_colors
}

/// The profile formula covering this game and board family, when one
/// exists: EnCis(k) (hence Cis) and Cis2 on paths, Cis on cycles.
pub fn formula_profile(game: GameId, board: &Board) -> Option<Profile> {
    use crate::board::BoardFamily;
    let n = board.vertex_count();
    match (game, board.family()?) {
        (GameId::Cis, BoardFamily::Path) => Some(cis_path_profile(n)),
        (GameId::EnCis(k), BoardFamily::Path) => Some(encis_path_profile(k, n)),
        (GameId::Cis2, BoardFamily::Path) => Some(cis2_path_profile(n)),
        (GameId::Cis, BoardFamily::Cycle) => {
            Some(cis_cycle_profile(n).expect("cycle boards have n >= 3"))
        }
        _ => None,
    }
}

/// Profile through the cheapest route: a formula when one applies, else
/// brute force under `limit`.
pub fn auto_profile(
    game: GameId,
    board: &Board,
    limit: usize,
) -> Result<Profile, crate::enumerate::EnumerateError> {
    match formula_profile(game, board) {
        Some(p) => Ok(p),
        None => brute_force_profile(board, &GameRules::named(game), limit),
    }
}

/// Built-in additive constants for the conjectured complete-bipartite
/// recursion, for m = 2..=6.
pub fn builtin_conjecture_constants() -> BTreeMap<usize, BigUint> {
    [4u32, 24, 100, 360, 1204]
        .into_iter()
        .enumerate()
        .map(|(i, c)| (i + 2, BigUint::from(c)))
        .collect()
}

/// One cell of a conjecture report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureCell {
    pub m: usize,
    pub n: usize,
    pub oracle: BigUint,
    pub conjectured: BigInt,
    pub matches: bool,
}

/// Tests the conjectured recursion
/// `P(m, n) = 5 P(m, n-1) - 6 P(m, n-2) + c_m`
/// against the product-structure count for every cell with 2 <= m <= m_max
/// and 2 <= n <= n_max. Columns n = 0 and n = 1 are seeded from the closed
/// forms 3^m and 2^{m+1} + 3^m. A mismatch is a report outcome, not an
/// error; the only error is a missing c_m.
pub fn conjecture_check(
    m_max: usize,
    n_max: usize,
    extra_constants: &BTreeMap<usize, BigUint>,
) -> Result<Vec<ConjectureCell>, FormulaError> {
    let mut constants = builtin_conjecture_constants();
    constants.extend(extra_constants.iter().map(|(&m, c)| (m, c.clone())));
    let mut report = Vec::new();
    for m in 2..=m_max {
        let c_m: BigInt = constants
            .get(&m)
            .ok_or(FormulaError::MissingConstant(m))?
            .clone()
            .into();
        let mut prev2 = BigInt::from(BigUint::from(3u32).pow(m as u32));
        let mut prev1 = BigInt::from(star_count(GameId::Col, m).expect("col star count"));
        for n in 2..=n_max {
            let conjectured = BigInt::from(5) * &prev1 - BigInt::from(6) * &prev2 + &c_m;
            let oracle = colsnort_kmn_count(m, n);
            let matches = conjectured == BigInt::from(oracle.clone());
            report.push(ConjectureCell {
                m,
                n,
                oracle,
                conjectured: conjectured.clone(),
                matches,
            });
            prev2 = std::mem::replace(&mut prev1, conjectured);
        }
    }
    Ok(report)
}
