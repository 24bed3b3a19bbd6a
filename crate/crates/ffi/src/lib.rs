//! C ABI for the distance-game enumeration engine.
//!
//! Boards, rule sets, and profiles are opaque handles created and destroyed
//! through paired `_new`/`_free` calls; every fallible function returns a
//! [`DgpStatus`] and writes its result through an out pointer. Strings
//! returned through out pointers are NUL-terminated, UTF-8, and must be
//! released with [`dgp_string_free`]. The generated header lives in
//! `include/dgprof.h`.

use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;

use libc::c_char;

use dgprof::board::Board;
use dgprof::enumerate::{brute_force_profile, DEFAULT_VERTEX_LIMIT};
use dgprof::formulas::auto_profile;
use dgprof::poly::Profile;
use dgprof::rules::{GameId, GameRules};
use dgprof::series::{builtin_gf, regex_to_series, RationalSeries, Regex, SeriesFamily};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DgpStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was NULL.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// A game id, board spec, family, or regex failed to parse.
    ParseError = 3,
    /// The board exceeds the enumeration size limit.
    LimitExceeded = 4,
    /// Arguments were structurally valid but unusable (e.g. a two-vertex
    /// cycle or a star over an epsilon-accepting regex).
    InvalidArgument = 5,
    /// An internal invariant failed; this is a bug.
    InternalError = 6,
}

/// Opaque board handle.
pub struct DgpBoard {
    inner: Board,
}

/// Opaque rule-set handle.
pub struct DgpRules {
    rules: GameRules,
}

/// Opaque profile handle.
pub struct DgpProfile {
    inner: Profile,
}

fn guarded(body: impl FnOnce() -> DgpStatus) -> DgpStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(DgpStatus::InternalError)
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, DgpStatus> {
    if ptr.is_null() {
        return Err(DgpStatus::NullPointer);
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| DgpStatus::InvalidUtf8)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> DgpStatus {
    if out.is_null() {
        return DgpStatus::NullPointer;
    }
    out.write(value);
    DgpStatus::Ok
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> DgpStatus {
    match CString::new(s) {
        Ok(cs) => write_out(out, cs.into_raw()),
        Err(_) => DgpStatus::InternalError,
    }
}

unsafe fn deref<'a, T>(ptr: *const T) -> Result<&'a T, DgpStatus> {
    ptr.as_ref().ok_or(DgpStatus::NullPointer)
}

// ---------------------------------------------------------------------------
// Boards
// ---------------------------------------------------------------------------

/// Creates the path P_n.
///
/// # Safety
/// `out` must be valid for a single write.
#[no_mangle]
pub unsafe extern "C" fn dgp_board_new_path(n: usize, out: *mut *mut DgpBoard) -> DgpStatus {
    guarded(|| {
        write_out(
            out,
            Box::into_raw(Box::new(DgpBoard {
                inner: Board::path(n),
            })),
        )
    })
}

/// Creates the cycle C_n (n >= 3).
///
/// # Safety
/// `out` must be valid for a single write.
#[no_mangle]
pub unsafe extern "C" fn dgp_board_new_cycle(n: usize, out: *mut *mut DgpBoard) -> DgpStatus {
    guarded(|| match Board::cycle(n) {
        Ok(board) => write_out(out, Box::into_raw(Box::new(DgpBoard { inner: board }))),
        Err(_) => DgpStatus::InvalidArgument,
    })
}

/// Creates the star with `leaves` outer vertices (vertex 0 is the center).
///
/// # Safety
/// `out` must be valid for a single write.
#[no_mangle]
pub unsafe extern "C" fn dgp_board_new_star(leaves: usize, out: *mut *mut DgpBoard) -> DgpStatus {
    guarded(|| {
        write_out(
            out,
            Box::into_raw(Box::new(DgpBoard {
                inner: Board::star(leaves),
            })),
        )
    })
}

/// Creates the complete bipartite board K_{m,n} (m, n >= 1).
///
/// # Safety
/// `out` must be valid for a single write.
#[no_mangle]
pub unsafe extern "C" fn dgp_board_new_complete_bipartite(
    m: usize,
    n: usize,
    out: *mut *mut DgpBoard,
) -> DgpStatus {
    guarded(|| match Board::complete_bipartite(m, n) {
        Ok(board) => write_out(out, Box::into_raw(Box::new(DgpBoard { inner: board }))),
        Err(_) => DgpStatus::InvalidArgument,
    })
}

/// Creates a board from `edge_count` edges given as flattened endpoint
/// pairs u0, v0, u1, v1, ...; duplicate edges collapse, self-loops are
/// rejected.
///
/// # Safety
/// `endpoints` must point to `2 * edge_count` readable values (or be NULL
/// when `edge_count` is 0); `out` must be valid for a single write.
#[no_mangle]
pub unsafe extern "C" fn dgp_board_from_edges(
    n: usize,
    endpoints: *const usize,
    edge_count: usize,
    out: *mut *mut DgpBoard,
) -> DgpStatus {
    guarded(|| {
        if endpoints.is_null() && edge_count > 0 {
            return DgpStatus::NullPointer;
        }
        let mut edges = Vec::with_capacity(edge_count);
        for i in 0..edge_count {
            let u = endpoints.add(2 * i).read();
            let v = endpoints.add(2 * i + 1).read();
            edges.push((u, v));
        }
        match Board::from_edge_list(n, &edges) {
            Ok(board) => write_out(out, Box::into_raw(Box::new(DgpBoard { inner: board }))),
            Err(_) => DgpStatus::InvalidArgument,
        }
    })
}

/// Creates a board from a spec string: `path:N`, `cycle:N`, `star:N`,
/// `kbip:M,N`, or `file:PATH`.
///
/// # Safety
/// `spec` must be a valid NUL-terminated string; `out` must be valid for a
/// single write.
#[no_mangle]
pub unsafe extern "C" fn dgp_board_parse_spec(
    spec: *const c_char,
    out: *mut *mut DgpBoard,
) -> DgpStatus {
    guarded(|| {
        let spec = match read_str(spec) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match Board::from_spec(spec) {
            Ok(board) => write_out(out, Box::into_raw(Box::new(DgpBoard { inner: board }))),
            Err(_) => DgpStatus::ParseError,
        }
    })
}

/// Writes the number of vertices.
///
/// # Safety
/// `board` must be a live handle; `out` must be valid for a single write.
#[no_mangle]
pub unsafe extern "C" fn dgp_board_vertex_count(
    board: *const DgpBoard,
    out: *mut usize,
) -> DgpStatus {
    guarded(|| match deref(board) {
        Ok(b) => write_out(out, b.inner.vertex_count()),
        Err(status) => status,
    })
}

/// Writes the number of edges.
///
/// # Safety
/// `board` must be a live handle; `out` must be valid for a single write.
#[no_mangle]
pub unsafe extern "C" fn dgp_board_edge_count(
    board: *const DgpBoard,
    out: *mut usize,
) -> DgpStatus {
    guarded(|| match deref(board) {
        Ok(b) => write_out(out, b.inner.edge_count()),
        Err(status) => status,
    })
}

/// Writes whether the board is bipartite.
///
/// # Safety
/// `board` must be a live handle; `out` must be valid for a single write.
#[no_mangle]
pub unsafe extern "C" fn dgp_board_is_bipartite(
    board: *const DgpBoard,
    out: *mut bool,
) -> DgpStatus {
    guarded(|| match deref(board) {
        Ok(b) => write_out(out, b.inner.is_bipartite()),
        Err(status) => status,
    })
}

/// Releases a board handle. NULL is a no-op.
///
/// # Safety
/// `board` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dgp_board_free(board: *mut DgpBoard) {
    if !board.is_null() {
        drop(Box::from_raw(board));
    }
}

// ---------------------------------------------------------------------------
// Rules
// ---------------------------------------------------------------------------

/// Parses a game id (`col`, `snort`, `cis`, `cis2`, `encol:k`, `ensnort:k`,
/// `encis:k`) into a rule-set handle.
///
/// # Safety
/// `id` must be a valid NUL-terminated string; `out` must be valid for a
/// single write.
#[no_mangle]
pub unsafe extern "C" fn dgp_rules_parse(id: *const c_char, out: *mut *mut DgpRules) -> DgpStatus {
    guarded(|| {
        let id = match read_str(id) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match GameId::from_str(id) {
            Ok(game) => write_out(
                out,
                Box::into_raw(Box::new(DgpRules {
                    rules: GameRules::named(game),
                })),
            ),
            Err(_) => DgpStatus::ParseError,
        }
    })
}

/// Writes the display name of the rule set (e.g. "EnCis(2)").
///
/// # Safety
/// `rules` must be a live handle; `out` receives a string to free with
/// [`dgp_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dgp_rules_display_name(
    rules: *const DgpRules,
    out: *mut *mut c_char,
) -> DgpStatus {
    guarded(|| match deref(rules) {
        Ok(r) => write_string(out, r.rules.display_name().to_string()),
        Err(status) => status,
    })
}

/// Releases a rule-set handle. NULL is a no-op.
///
/// # Safety
/// `rules` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dgp_rules_free(rules: *mut DgpRules) {
    if !rules.is_null() {
        drop(Box::from_raw(rules));
    }
}

// ---------------------------------------------------------------------------
// Profiles
// ---------------------------------------------------------------------------

/// Computes the profile of the game on the board by brute-force
/// enumeration. `limit` caps the board size; pass 0 for the default cap.
///
/// # Safety
/// `board` and `rules` must be live handles; `out` must be valid for a
/// single write.
#[no_mangle]
pub unsafe extern "C" fn dgp_profile_brute_force(
    board: *const DgpBoard,
    rules: *const DgpRules,
    limit: usize,
    out: *mut *mut DgpProfile,
) -> DgpStatus {
    guarded(|| {
        let (board, rules) = match (deref(board), deref(rules)) {
            (Ok(b), Ok(r)) => (b, r),
            (Err(status), _) | (_, Err(status)) => return status,
        };
        let limit = if limit == 0 {
            DEFAULT_VERTEX_LIMIT
        } else {
            limit
        };
        match brute_force_profile(&board.inner, &rules.rules, limit) {
            Ok(profile) => write_out(out, Box::into_raw(Box::new(DgpProfile { inner: profile }))),
            Err(_) => DgpStatus::LimitExceeded,
        }
    })
}

/// Computes the profile of `game` on `board_spec` through the cheapest
/// route: a closed-form recursion when one applies, else brute force under
/// the default size limit.
///
/// # Safety
/// `game` and `board_spec` must be valid NUL-terminated strings; `out` must
/// be valid for a single write.
#[no_mangle]
pub unsafe extern "C" fn dgp_profile_compute(
    game: *const c_char,
    board_spec: *const c_char,
    out: *mut *mut DgpProfile,
) -> DgpStatus {
    guarded(|| {
        let (game, spec) = match (read_str(game), read_str(board_spec)) {
            (Ok(g), Ok(s)) => (g, s),
            (Err(status), _) | (_, Err(status)) => return status,
        };
        let game = match GameId::from_str(game) {
            Ok(g) => g,
            Err(_) => return DgpStatus::ParseError,
        };
        let board = match Board::from_spec(spec) {
            Ok(b) => b,
            Err(_) => return DgpStatus::ParseError,
        };
        match auto_profile(game, &board, DEFAULT_VERTEX_LIMIT) {
            Ok(profile) => write_out(out, Box::into_raw(Box::new(DgpProfile { inner: profile }))),
            Err(_) => DgpStatus::LimitExceeded,
        }
    })
}

/// Restricts a profile to alternating play (blue and red counts differing
/// by at most one) as a new handle.
///
/// # Safety
/// `profile` must be a live handle; `out` must be valid for a single write.
#[no_mangle]
pub unsafe extern "C" fn dgp_profile_alternating_part(
    profile: *const DgpProfile,
    out: *mut *mut DgpProfile,
) -> DgpStatus {
    guarded(|| match deref(profile) {
        Ok(p) => write_out(
            out,
            Box::into_raw(Box::new(DgpProfile {
                inner: p.inner.alternating_part(),
            })),
        ),
        Err(status) => status,
    })
}

/// Writes the total position count as a decimal string.
///
/// # Safety
/// `profile` must be a live handle; `out` receives a string to free with
/// [`dgp_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dgp_profile_total(
    profile: *const DgpProfile,
    out: *mut *mut c_char,
) -> DgpStatus {
    guarded(|| match deref(profile) {
        Ok(p) => write_string(out, p.inner.total().to_string()),
        Err(status) => status,
    })
}

/// Writes the coefficient of x^blue y^red as a decimal string ("0" when the
/// term is absent).
///
/// # Safety
/// `profile` must be a live handle; `out` receives a string to free with
/// [`dgp_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dgp_profile_coefficient(
    profile: *const DgpProfile,
    blue: u32,
    red: u32,
    out: *mut *mut c_char,
) -> DgpStatus {
    guarded(|| match deref(profile) {
        Ok(p) => write_string(out, p.inner.coefficient(blue, red).to_string()),
        Err(status) => status,
    })
}

/// Writes the number of stored (nonzero) terms.
///
/// # Safety
/// `profile` must be a live handle; `out` must be valid for a single write.
#[no_mangle]
pub unsafe extern "C" fn dgp_profile_term_count(
    profile: *const DgpProfile,
    out: *mut usize,
) -> DgpStatus {
    guarded(|| match deref(profile) {
        Ok(p) => write_out(out, p.inner.num_terms()),
        Err(status) => status,
    })
}

/// Writes the canonical text form, e.g.
/// "1 + 4x + 4y + 3x^2 + 6xy + 3y^2".
///
/// # Safety
/// `profile` must be a live handle; `out` receives a string to free with
/// [`dgp_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dgp_profile_text(
    profile: *const DgpProfile,
    out: *mut *mut c_char,
) -> DgpStatus {
    guarded(|| match deref(profile) {
        Ok(p) => write_string(out, p.inner.to_string()),
        Err(status) => status,
    })
}

/// Writes the profile as a JSON term list:
/// `[{"blue":0,"red":0,"count":"1"}, ...]`.
///
/// # Safety
/// `profile` must be a live handle; `out` receives a string to free with
/// [`dgp_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dgp_profile_json(
    profile: *const DgpProfile,
    out: *mut *mut c_char,
) -> DgpStatus {
    guarded(|| match deref(profile) {
        Ok(p) => match serde_json::to_string(&p.inner) {
            Ok(json) => write_string(out, json),
            Err(_) => DgpStatus::InternalError,
        },
        Err(status) => status,
    })
}

/// Writes the univariate collapse (counts by total piece count) as a JSON
/// array of decimal strings, e.g. `["1","8","12"]`.
///
/// # Safety
/// `profile` must be a live handle; `out` receives a string to free with
/// [`dgp_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dgp_profile_univariate_json(
    profile: *const DgpProfile,
    out: *mut *mut c_char,
) -> DgpStatus {
    guarded(|| match deref(profile) {
        Ok(p) => {
            let counts: Vec<String> = p
                .inner
                .univariate_collapse()
                .iter()
                .map(|c| c.to_string())
                .collect();
            match serde_json::to_string(&counts) {
                Ok(json) => write_string(out, json),
                Err(_) => DgpStatus::InternalError,
            }
        }
        Err(status) => status,
    })
}

/// Releases a profile handle. NULL is a no-op.
///
/// # Safety
/// `profile` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dgp_profile_free(profile: *mut DgpProfile) {
    if !profile.is_null() {
        drop(Box::from_raw(profile));
    }
}

// ---------------------------------------------------------------------------
// Series
// ---------------------------------------------------------------------------

fn parse_series(spec: &str) -> Result<RationalSeries, DgpStatus> {
    if let Some(expr) = spec.strip_prefix("regex:") {
        let regex = Regex::parse(expr).map_err(|_| DgpStatus::ParseError)?;
        return regex_to_series(&regex).map_err(|_| DgpStatus::InvalidArgument);
    }
    SeriesFamily::from_str(spec)
        .map(builtin_gf)
        .map_err(|_| DgpStatus::ParseError)
}

/// Expands a builtin generating function (`cis_path`, `encis:2`, ... or
/// `regex:EXPR`) to the given order and writes a JSON array with one term
/// list per order.
///
/// # Safety
/// `family` must be a valid NUL-terminated string; `out` receives a string
/// to free with [`dgp_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dgp_series_expand_json(
    family: *const c_char,
    order: usize,
    out: *mut *mut c_char,
) -> DgpStatus {
    guarded(|| {
        let family = match read_str(family) {
            Ok(f) => f,
            Err(status) => return status,
        };
        let series = match parse_series(family) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match series.expand(order) {
            Ok(profiles) => match serde_json::to_string(&profiles) {
                Ok(json) => write_string(out, json),
                Err(_) => DgpStatus::InternalError,
            },
            Err(_) => DgpStatus::InvalidArgument,
        }
    })
}

/// Expands a builtin generating function at x = y = 1 and writes a JSON
/// array of decimal position counts, one per order.
///
/// # Safety
/// `family` must be a valid NUL-terminated string; `out` receives a string
/// to free with [`dgp_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dgp_series_counts_json(
    family: *const c_char,
    order: usize,
    out: *mut *mut c_char,
) -> DgpStatus {
    guarded(|| {
        let family = match read_str(family) {
            Ok(f) => f,
            Err(status) => return status,
        };
        let series = match parse_series(family) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match series.expand_counts(order) {
            Ok(counts) => {
                let counts: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
                match serde_json::to_string(&counts) {
                    Ok(json) => write_string(out, json),
                    Err(_) => DgpStatus::InternalError,
                }
            }
            Err(_) => DgpStatus::InvalidArgument,
        }
    })
}

/// Releases a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dgp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
