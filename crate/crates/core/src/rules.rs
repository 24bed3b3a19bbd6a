//! Rule sets for distance games, position legality, and the auxiliary board
//! whose independent sets are exactly the legal positions.
//!
//! A distance game is identified by two sets of positive integers: placing a
//! piece is illegal at any distance in `S` from a same-colored piece, and at
//! any distance in `D` from an opposite-colored piece.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::board::{Board, DistanceMatrix, INFINITE_DISTANCE};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RulesError {
    #[error("unknown game `{0}`")]
    UnknownGame(String),
    #[error("game `{0}` requires a parameter k >= 1")]
    MissingParameter(String),
    #[error("game `{0}` does not take a parameter")]
    UnexpectedParameter(String),
    #[error("invalid parameter for game `{0}`: {1}")]
    InvalidParameter(String, String),
    #[error("position has {got} cells but the board has {expected} vertices")]
    SizeMismatch { expected: usize, got: usize },
}

/// State of one board vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellState {
    Empty,
    Blue,
    Red,
}

/// A full assignment of cell states to the board's vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Position(pub Vec<CellState>);

impl Position {
    /// The all-empty position on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Position(vec![CellState::Empty; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the zero-vertex position (not for an uncolored board; see
    /// [`Position::empty`]).
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Swaps blue and red everywhere.
    pub fn color_swap(&self) -> Self {
        Position(
            self.0
                .iter()
                .map(|s| match s {
                    CellState::Blue => CellState::Red,
                    CellState::Red => CellState::Blue,
                    CellState::Empty => CellState::Empty,
                })
                .collect(),
        )
    }
}

/// Identifier for a named game, as accepted by the command line:
/// `col`, `snort`, `cis`, `cis2`, `encol:k`, `ensnort:k`, `encis:k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GameId {
    Col,
    Snort,
    Cis,
    Cis2,
    EnCol(u32),
    EnSnort(u32),
    EnCis(u32),
}

impl GameId {
    /// Resolves a game name plus optional parameter. The parameter is
    /// required for the `en*` families and rejected everywhere else.
    pub fn new(name: &str, k: Option<u32>) -> Result<Self, RulesError> {
        let reject_k = |id: GameId| match k {
            None => Ok(id),
            Some(_) => Err(RulesError::UnexpectedParameter(name.to_string())),
        };
        let require_k = || match k {
            Some(k) if k >= 1 => Ok(k),
            Some(k) => Err(RulesError::InvalidParameter(
                name.to_string(),
                format!("k must be >= 1, got {k}"),
            )),
            None => Err(RulesError::MissingParameter(name.to_string())),
        };
        match name.to_ascii_lowercase().as_str() {
            "col" => reject_k(GameId::Col),
            "snort" => reject_k(GameId::Snort),
            "cis" => reject_k(GameId::Cis),
            "cis2" => reject_k(GameId::Cis2),
            "encol" => Ok(GameId::EnCol(require_k()?)),
            "ensnort" => Ok(GameId::EnSnort(require_k()?)),
            "encis" => Ok(GameId::EnCis(require_k()?)),
            _ => Err(RulesError::UnknownGame(name.to_string())),
        }
    }
}

impl FromStr for GameId {
    type Err = RulesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once(':') {
            None => GameId::new(s, None),
            Some((name, k)) => {
                let k: u32 = k.parse().map_err(|_| {
                    RulesError::InvalidParameter(name.to_string(), format!("bad k `{k}`"))
                })?;
                GameId::new(name, Some(k))
            }
        }
    }
}

impl fmt::Display for GameId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameId::Col => write!(f, "col"),
            GameId::Snort => write!(f, "snort"),
            GameId::Cis => write!(f, "cis"),
            GameId::Cis2 => write!(f, "cis2"),
            GameId::EnCol(k) => write!(f, "encol:{k}"),
            GameId::EnSnort(k) => write!(f, "ensnort:{k}"),
            GameId::EnCis(k) => write!(f, "encis:{k}"),
        }
    }
}

/// A distance-game rule set: the two forbidden-distance sets plus a display
/// name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameRules {
    same_color_forbidden: BTreeSet<u32>,
    diff_color_forbidden: BTreeSet<u32>,
    display_name: String,
}

impl GameRules {
    /// Builds a rule set from arbitrary forbidden-distance sets. Zero
    /// distances are meaningless (two pieces never share a vertex) and are
    /// dropped.
    pub fn new(
        same_color_forbidden: impl IntoIterator<Item = u32>,
        diff_color_forbidden: impl IntoIterator<Item = u32>,
        display_name: impl Into<String>,
    ) -> Self {
        Self {
            same_color_forbidden: same_color_forbidden
                .into_iter()
                .filter(|&d| d > 0)
                .collect(),
            diff_color_forbidden: diff_color_forbidden
                .into_iter()
                .filter(|&d| d > 0)
                .collect(),
            display_name: display_name.into(),
        }
    }

    /// The rule set of a named game.
    pub fn named(id: GameId) -> Self {
        match id {
            GameId::Col => Self::new([1], [], "Col"),
            GameId::Snort => Self::new([], [1], "Snort"),
            GameId::Cis => Self::new([1], [1], "Cis"),
            GameId::Cis2 => Self::new([2], [2], "Cis2"),
            GameId::EnCol(k) => Self::new(1..=k, [], format!("EnCol({k})")),
            GameId::EnSnort(k) => Self::new([], 1..=k, format!("EnSnort({k})")),
            GameId::EnCis(k) => Self::new(1..=k, 1..=k, format!("EnCis({k})")),
        }
    }

    pub fn same_color_forbidden(&self) -> &BTreeSet<u32> {
        &self.same_color_forbidden
    }

    pub fn diff_color_forbidden(&self) -> &BTreeSet<u32> {
        &self.diff_color_forbidden
    }

    pub fn display_name(&self) -> &str {
        &self.display_name
    }

    /// Largest forbidden distance across both sets; 0 when both are empty.
    pub fn max_forbidden_distance(&self) -> u32 {
        let a = self.same_color_forbidden.iter().next_back().copied();
        let b = self.diff_color_forbidden.iter().next_back().copied();
        a.unwrap_or(0).max(b.unwrap_or(0))
    }

    /// Whether two pieces at graph distance `d` conflict. Infinite distance
    /// (disconnected boards) never violates the finite rule sets.
    pub fn conflicts(&self, same_color: bool, d: u32) -> bool {
        if d == INFINITE_DISTANCE {
            return false;
        }
        if same_color {
            self.same_color_forbidden.contains(&d)
        } else {
            self.diff_color_forbidden.contains(&d)
        }
    }
}

/// Whether `p` is a legal position of the game on `board`: no colored pair
/// may sit at a forbidden distance. The all-empty position is always legal.
pub fn is_legal_position(
    board: &Board,
    dm: &DistanceMatrix,
    rules: &GameRules,
    p: &Position,
) -> Result<bool, RulesError> {
    if p.len() != board.vertex_count() {
        return Err(RulesError::SizeMismatch {
            expected: board.vertex_count(),
            got: p.len(),
        });
    }
    let colored: Vec<(usize, CellState)> =
        p.0.iter()
            .enumerate()
            .filter(|(_, s)| !matches!(s, CellState::Empty))
            .map(|(v, &s)| (v, s))
            .collect();
    for (i, &(u, su)) in colored.iter().enumerate() {
        for &(v, sv) in &colored[i + 1..] {
            if rules.conflicts(su == sv, dm.get(u, v)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Builds the auxiliary board of the game on `board`: one vertex per
/// (board vertex, player) pair, with an edge wherever the two placements
/// conflict. Left's copy of board vertex `v` is aux vertex `v`, Right's copy
/// is `n + v`. Both players coloring the same vertex is impossible, so the
/// rungs `(v, n + v)` are always edges. Legal positions correspond exactly
/// to independent sets of the result.
pub fn auxiliary_board(board: &Board, rules: &GameRules) -> Board {
    let n = board.vertex_count();
    let dm = board.distances();
    let mut edges = Vec::new();
    for v in 0..n {
        edges.push((v, n + v));
    }
    for u in 0..n {
        for v in u + 1..n {
            let d = dm.get(u, v);
            if rules.conflicts(true, d) {
                edges.push((u, v));
                edges.push((n + u, n + v));
            }
            if rules.conflicts(false, d) {
                edges.push((u, n + v));
                edges.push((v, n + u));
            }
        }
    }
    Board::from_edge_list(2 * n, &edges).expect("auxiliary edges are in range and loop-free")
}
