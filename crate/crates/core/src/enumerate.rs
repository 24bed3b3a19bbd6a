//! Ground-truth brute-force enumeration of positions on arbitrary boards.
//!
//! Every recursion, closed form, and generating function in this crate is
//! checked against [`brute_force_profile`], which enumerates positions by
//! backtracking with pruning. [`independent_set_profile`] computes the same
//! profile along an independent route, by enumerating independent sets of
//! the auxiliary board.

use num_bigint::BigUint;
use thiserror::Error;

use crate::board::Board;
use crate::poly::Profile;
use crate::rules::{auxiliary_board, CellState, GameRules};

/// Default cap on board size. 3^24 bounds the worst-case search; pruning
/// makes the named games far cheaper in practice.
pub const DEFAULT_VERTEX_LIMIT: usize = 24;

/// Boards at or below this size are enumerated on the calling thread.
const PARALLEL_THRESHOLD: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error(
        "board has {n} vertices, over the enumeration limit {limit} (raise the limit to force)"
    )]
    BoardTooLarge { n: usize, limit: usize },
}

/// Dense (blue, red) count grid; converted to a sparse profile at the end.
/// u128 keeps exact counts for any board small enough to enumerate at all.
struct CountGrid {
    n: usize,
    counts: Vec<u128>,
}

impl CountGrid {
    fn new(n: usize) -> Self {
        Self {
            n,
            counts: vec![0u128; (n + 1) * (n + 1)],
        }
    }

    fn bump(&mut self, blue: usize, red: usize) {
        self.counts[blue * (self.n + 1) + red] += 1;
    }

    fn merge(&mut self, other: &CountGrid) {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }

    fn into_profile(self) -> Profile {
        let mut p = Profile::zero();
        for blue in 0..=self.n {
            for red in 0..=self.n {
                let c = self.counts[blue * (self.n + 1) + red];
                if c != 0 {
                    p.add_term(blue as u32, red as u32, BigUint::from(c));
                }
            }
        }
        p
    }
}

/// For each vertex, the earlier vertices it can conflict with and whether
/// each distance is forbidden for same/different colors. Pairs beyond the
/// largest forbidden distance are dropped up front.
struct ConflictTables {
    relevant: Vec<Vec<(usize, bool, bool)>>,
}

impl ConflictTables {
    fn build(board: &Board, rules: &GameRules) -> Self {
        let n = board.vertex_count();
        let dm = board.distances();
        let max_d = rules.max_forbidden_distance();
        let mut relevant = vec![Vec::new(); n];
        for (v, row) in relevant.iter_mut().enumerate() {
            for u in 0..v {
                let d = dm.get(u, v);
                if d == 0 || d > max_d {
                    continue;
                }
                let same = rules.conflicts(true, d);
                let diff = rules.conflicts(false, d);
                if same || diff {
                    row.push((u, same, diff));
                }
            }
        }
        Self { relevant }
    }

    /// Whether coloring `v` with `state` clashes with any earlier choice.
    fn clashes(&self, v: usize, state: CellState, assigned: &[CellState]) -> bool {
        self.relevant[v]
            .iter()
            .any(|&(u, same, diff)| match assigned[u] {
                CellState::Empty => false,
                earlier => {
                    if earlier == state {
                        same
                    } else {
                        diff
                    }
                }
            })
    }
}

fn search(
    tables: &ConflictTables,
    assigned: &mut Vec<CellState>,
    blue: usize,
    red: usize,
    n: usize,
    grid: &mut CountGrid,
) {
    let v = assigned.len();
    if v == n {
        grid.bump(blue, red);
        return;
    }
    assigned.push(CellState::Empty);
    search(tables, assigned, blue, red, n, grid);
    assigned.pop();

    for (state, db, dr) in [(CellState::Blue, 1, 0), (CellState::Red, 0, 1)] {
        if !tables.clashes(v, state, assigned) {
            assigned.push(state);
            search(tables, assigned, blue + db, red + dr, n, grid);
            assigned.pop();
        }
    }
}

/// Exact polynomial profile by backtracking over vertices in id order,
/// pruning as soon as a partial assignment violates the rules. Positions of
/// distance games are hereditary (removing a piece keeps a position legal),
/// so pruning never misses a completion.
pub fn brute_force_profile(
    board: &Board,
    rules: &GameRules,
    limit: usize,
) -> Result<Profile, EnumerateError> {
    let n = board.vertex_count();
    if n > limit {
        return Err(EnumerateError::BoardTooLarge { n, limit });
    }
    let tables = ConflictTables::build(board, rules);

    if n <= PARALLEL_THRESHOLD {
        let mut grid = CountGrid::new(n);
        search(&tables, &mut Vec::with_capacity(n), 0, 0, n, &mut grid);
        return Ok(grid.into_profile());
    }

    // Shard on the first vertex's three states; the shards are independent
    // and merge by addition, so the result is schedule-independent.
    let shards = std::thread::scope(|scope| {
        let handles: Vec<_> = [CellState::Empty, CellState::Blue, CellState::Red]
            .into_iter()
            .map(|first| {
                let tables = &tables;
                scope.spawn(move || {
                    let mut grid = CountGrid::new(n);
                    let mut assigned = Vec::with_capacity(n);
                    assigned.push(first);
                    let (blue, red) = match first {
                        CellState::Empty => (0, 0),
                        CellState::Blue => (1, 0),
                        CellState::Red => (0, 1),
                    };
                    search(tables, &mut assigned, blue, red, n, &mut grid);
                    grid
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search shard panicked"))
            .collect::<Vec<_>>()
    });
    let mut grid = CountGrid::new(n);
    for shard in &shards {
        grid.merge(shard);
    }
    Ok(grid.into_profile())
}

/// Profile computed by enumerating independent sets of the auxiliary board:
/// choosing Left's copy of a vertex contributes x, Right's copy y. This is
/// an independent route to the same polynomial as [`brute_force_profile`].
pub fn independent_set_profile(
    board: &Board,
    rules: &GameRules,
    limit: usize,
) -> Result<Profile, EnumerateError> {
    let n = board.vertex_count();
    if n > limit {
        return Err(EnumerateError::BoardTooLarge { n, limit });
    }
    let aux = auxiliary_board(board, rules);
    let mut grid = CountGrid::new(n);
    let mut chosen = vec![false; aux.vertex_count()];

    fn rec(
        aux: &Board,
        n: usize,
        v: usize,
        chosen: &mut Vec<bool>,
        blue: usize,
        red: usize,
        grid: &mut CountGrid,
    ) {
        if v == aux.vertex_count() {
            grid.bump(blue, red);
            return;
        }
        rec(aux, n, v + 1, chosen, blue, red, grid);
        let blocked = aux.neighbors(v).iter().any(|&u| u < v && chosen[u]);
        if !blocked {
            chosen[v] = true;
            let (db, dr) = if v < n { (1, 0) } else { (0, 1) };
            rec(aux, n, v + 1, chosen, blue + db, red + dr, grid);
            chosen[v] = false;
        }
    }

    rec(&aux, n, 0, &mut chosen, 0, 0, &mut grid);
    Ok(grid.into_profile())
}

/// Total number of legal positions (the profile at x = y = 1).
pub fn count_positions(board: &Board, rules: &GameRules) -> Result<BigUint, EnumerateError> {
    Ok(brute_force_profile(board, rules, DEFAULT_VERTEX_LIMIT)?.total())
}

/// Exact pair (number of positions reachable in strictly alternating play,
/// total number of positions).
pub fn alternating_ratio(
    board: &Board,
    rules: &GameRules,
) -> Result<(BigUint, BigUint), EnumerateError> {
    let p = brute_force_profile(board, rules, DEFAULT_VERTEX_LIMIT)?;
    Ok((p.alternating_part().total(), p.total()))
}
