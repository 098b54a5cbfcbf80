//! Cost limits for the exhaustive computations.

use crate::error::{Error, Result};

/// Name of the CLI flag that lifts the default limits.
pub const EXPENSIVE_FLAG: &str = "--allow-expensive";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Budget {
    pub allow_expensive: bool,
}

impl Budget {
    pub const DEFAULT: Budget = Budget {
        allow_expensive: false,
    };
    pub const EXPENSIVE: Budget = Budget {
        allow_expensive: true,
    };

    /// Refuses `m` above `default_max` (or `expensive_max` when opted in).
    pub(crate) fn check(
        self,
        what: &'static str,
        m: u32,
        default_max: u32,
        expensive_max: u32,
        cost: impl Fn(u32) -> u128,
    ) -> Result<()> {
        let max = if self.allow_expensive {
            expensive_max
        } else {
            default_max
        };
        if m <= max {
            return Ok(());
        }
        Err(Error::BudgetExceeded {
            what,
            m,
            cost: cost(m),
            limit: cost(max),
            flag: if self.allow_expensive || m > expensive_max {
                "a smaller m (hard limit)"
            } else {
                EXPENSIVE_FLAG
            },
        })
    }
}

/// Trace evaluations for the full `(a, b, c)` dual enumeration: `q^3 (q - 1)`.
pub fn dual_enumeration_cost(m: u32) -> u128 {
    let q = 1u128 << m;
    q * q * q * (q - 1)
}

/// `(x, y)` pairs visited by the X-point search: `q^2`.
pub fn x_points_cost(m: u32) -> u128 {
    1u128 << (2 * m)
}
