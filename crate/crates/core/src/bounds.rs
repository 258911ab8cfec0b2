//! Closed-form size of a minimum connected dominating set on an m-by-n grid,
//! together with independently published reference values and bounds used for
//! cross-checking: exact sizes for narrow grids and a general lower/upper
//! bound pair.

use thiserror::Error;

/// Errors raised by the closed-form functions.
#[derive(Debug, Error)]
pub enum BoundsError {
    /// The general formula covers grids with both sides at least 4.
    #[error("formula requires m >= 4 and n >= 4, got {m}x{n}")]
    DomainTooSmall { m: u32, n: u32 },
    /// The narrow-grid table covers m in 2..=4 with n >= m.
    #[error("no tabulated size for {m}x{n}: need m in 2..=4 and n >= m")]
    UnsupportedSmallCase { m: u32, n: u32 },
}

fn check_domain(m: u32, n: u32) -> Result<(), BoundsError> {
    if m < 4 || n < 4 {
        Err(BoundsError::DomainTooSmall { m, n })
    } else {
        Ok(())
    }
}

/// Residue product `(m mod 3) * (n mod 3)`, one of 0, 1, 2, 4.
pub fn a_prime(m: u32, n: u32) -> Result<u32, BoundsError> {
    check_domain(m, n)?;
    Ok((m % 3) * (n % 3))
}

/// Number of vertices a minimum solution keeps outside its regular core,
/// determined by the residue product: 4 maps to 3, and 0, 1, 2 map to
/// themselves.
pub fn r_bar_prime(m: u32, n: u32) -> Result<u32, BoundsError> {
    let a = a_prime(m, n)?;
    Ok(match a {
        4 => 3,
        other => other,
    })
}

/// Number of connecting vertices a minimum solution needs on top of its
/// dominating core.
pub fn c_prime(m: u32, n: u32) -> Result<u32, BoundsError> {
    check_domain(m, n)?;
    Ok(match (m % 3 == 0, n % 3 == 0) {
        (true, true) => m.min(n) / 3,
        (true, false) => m / 3,
        (false, true) => n / 3,
        (false, false) => m / 3 + n / 3 - 1,
    })
}

/// Full breakdown of the closed form for grids with `m, n >= 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaBreakdown {
    pub a_prime: u32,
    pub r_bar_prime: u32,
    pub c_prime: u32,
    pub gamma: u32,
}

/// Minimum connected dominating set size `(m*n - a')/3 + r-bar' + c'` for
/// grids with both sides at least 4, returned with its three components.
///
/// # Examples
///
/// ```
/// use cds_grid::gamma_formula;
/// assert_eq!(gamma_formula(4, 4).unwrap().gamma, 7);
/// assert_eq!(gamma_formula(6, 6).unwrap().gamma, 14);
/// ```
pub fn gamma_formula(m: u32, n: u32) -> Result<GammaBreakdown, BoundsError> {
    let a = a_prime(m, n)?;
    let r = r_bar_prime(m, n)?;
    let c = c_prime(m, n)?;
    let product = m * n - a;
    debug_assert_eq!(product % 3, 0);
    Ok(GammaBreakdown { a_prime: a, r_bar_prime: r, c_prime: c, gamma: product / 3 + r + c })
}

/// Exact minimum sizes for narrow grids (2, 3, or 4 rows), from published
/// case analyses: `2x2` and `2x3` need 2 vertices, `2xn` needs `n` for
/// `n >= 4`, `3xn` needs `n`, and `4xn` needs `2n - floor(n/3)`.
pub fn known_small_gamma(m: u32, n: u32) -> Result<u32, BoundsError> {
    if n < m {
        return Err(BoundsError::UnsupportedSmallCase { m, n });
    }
    match m {
        2 => Ok(if n <= 3 { 2 } else { n }),
        3 => Ok(n),
        4 => Ok(2 * n - n / 3),
        _ => Err(BoundsError::UnsupportedSmallCase { m, n }),
    }
}

/// General sandwich bounds for grids with both sides at least 4: the lower
/// bound `m*n - floor(2*m*n/3)` and the upper bound given by the better of
/// the two boustrophedon orientations.
pub fn fujie_bounds(m: u32, n: u32) -> Result<(u32, u32), BoundsError> {
    check_domain(m, n)?;
    let lower = m * n - 2 * m * n / 3;
    let by_rows = 2 * m + n - 4 + (n - 4) / 3 * (m - 2);
    let by_cols = 2 * n + m - 4 + (m - 4) / 3 * (n - 2);
    Ok((lower, by_rows.min(by_cols)))
}

/// Lower bound `ceil((3*m*n + 2*min(m, n)) / 9)`, valid for all grids with
/// `m, n >= 1`. Evaluated in exact integer arithmetic.
pub fn sn_lower_bound(m: u32, n: u32) -> u32 {
    let numerator = 3 * u64::from(m) * u64::from(n) + 2 * u64::from(m.min(n));
    numerator.div_ceil(9) as u32
}
