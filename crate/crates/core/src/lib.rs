//! Exact enumeration of distance-game positions on finite graphs.
//!
//! Distance games (Col, Snort, Cis and their generalizations) are placement
//! games on graphs where legality depends only on graph distances to earlier
//! pieces. This crate computes their polynomial profiles — the bivariate
//! counting polynomials over blue and red piece counts — by three mutually
//! cross-checking routes:
//!
//! * brute-force enumeration on arbitrary boards ([`enumerate`]),
//! * recursions and closed forms for paths, cycles, stars, and complete
//!   bipartite boards ([`formulas`]),
//! * rational generating functions compiled from regular expressions over
//!   the cell alphabet, expanded exactly ([`series`]).
//!
//! The [`verify`] module bundles the cross-check suites, including a
//! falsification harness for a conjectured recursion on complete bipartite
//! boards.
//!
//! ```
//! use dgprof::board::Board;
//! use dgprof::enumerate::{brute_force_profile, DEFAULT_VERTEX_LIMIT};
//! use dgprof::rules::{GameId, GameRules};
//!
//! let rules = GameRules::named(GameId::Cis);
//! let profile = brute_force_profile(&Board::path(4), &rules, DEFAULT_VERTEX_LIMIT)?;
//! assert_eq!(profile.to_string(), "1 + 4x + 4y + 3x^2 + 6xy + 3y^2");
//! assert_eq!(profile.total().to_string(), "21");
//! # Ok::<(), dgprof::enumerate::EnumerateError>(())
//! ```
//!
//! The same polynomial falls out of a regular expression for the legal
//! strings, compiled to a rational series and expanded:
//!
//! ```
//! use dgprof::series::{regex_to_series, Regex};
//!
//! let legal = Regex::parse("E*((B|R)EE*)*(B|R|)")?;
//! let profiles = regex_to_series(&legal)?.expand(4)?;
//! assert_eq!(profiles[4].to_string(), "1 + 4x + 4y + 3x^2 + 6xy + 3y^2");
//! # Ok::<(), dgprof::series::SeriesError>(())
//! ```

pub mod board;
pub mod enumerate;
pub mod formulas;
pub mod poly;
pub mod rules;
pub mod series;
pub mod verify;
