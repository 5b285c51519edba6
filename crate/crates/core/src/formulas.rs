//! Closed-form minimum sizes of k-connected locally nonforesty graphs.
//!
//! Everything here is exact integer or rational arithmetic.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Smallest order covered by the formulas for `k <= 4`.
pub const MIN_ORDER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    Connected,
    TwoConnected,
    FourConnected,
    /// `k >= 5`: the degree bound `⌈kn/2⌉` is attained.
    Trivial,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Connected => "connected",
            Regime::TwoConnected => "two_connected",
            Regime::FourConnected => "four_connected",
            Regime::Trivial => "trivial",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeFormulaResult {
    pub k: usize,
    pub n: usize,
    pub value: usize,
    pub regime: Regime,
}

fn check_order(n: usize) -> Result<()> {
    if n < MIN_ORDER {
        Err(Error::OrderOutOfDomain { n, min: MIN_ORDER, max: usize::MAX })
    } else {
        Ok(())
    }
}

/// Minimum size of a 4-connected locally nonforesty graph of order `n >= 8`.
pub fn h(n: usize) -> Result<usize> {
    check_order(n)?;
    Ok(if n.is_multiple_of(4) { 2 * n } else { 2 * n + 1 })
}

/// Minimum size of a 2-connected locally nonforesty graph of order `n >= 8`.
pub fn g(n: usize) -> Result<usize> {
    check_order(n)?;
    let value = match n % 4 {
        0 | 3 => 2 * n - n / 4,
        _ => 2 * n + 1 - n / 4,
    };
    debug_assert_eq!(value, g_by_residue(n));
    Ok(value)
}

/// `g` written through `n = 4q + r`: `7q + 2r`, plus one when `r` is 1 or 2.
pub fn g_by_residue(n: usize) -> usize {
    let (q, r) = (n / 4, n % 4);
    match r {
        0 | 3 => 7 * q + 2 * r,
        _ => 7 * q + 2 * r + 1,
    }
}

/// Minimum size of a connected locally nonforesty graph of order `n >= 8`.
pub fn p(n: usize) -> Result<usize> {
    check_order(n)?;
    let value = match n % 4 {
        0 | 3 => 2 * n - 1 - n / 4,
        _ => 2 * n - n / 4,
    };
    debug_assert_eq!(value, p_by_residue(n));
    Ok(value)
}

/// `p(n) = g(n) - 1` in residue form.
pub fn p_by_residue(n: usize) -> usize {
    g_by_residue(n) - 1
}

/// `f(k, n)` for `k` in `{1, 2, 4}` and `k >= 5`.
pub fn f(k: usize, n: usize) -> Result<SizeFormulaResult> {
    let (value, regime) = match k {
        0 => return Err(Error::UnsupportedK(0)),
        1 => (p(n)?, Regime::Connected),
        2 => (g(n)?, Regime::TwoConnected),
        3 => return Err(Error::UnsupportedK3),
        4 => (h(n)?, Regime::FourConnected),
        _ => {
            if n <= k {
                return Err(Error::OrderOutOfDomain { n, min: k + 1, max: usize::MAX });
            }
            ((k * n).div_ceil(2), Regime::Trivial)
        }
    };
    Ok(SizeFormulaResult { k, n, value, regime })
}

/// `7(n - 1) / 3`, the conjectured lower bound for 3-connected locally
/// nonforesty graphs.
pub fn conjecture1_bound(n: usize) -> Ratio<u64> {
    Ratio::new(7 * n.saturating_sub(1) as u64, 3)
}

/// `3 e(G) >= 7 (|G| - 1)`.
pub fn conjecture1_satisfied(g: &Graph) -> bool {
    3 * g.size() >= 7 * g.order().saturating_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        assert_eq!((h(8), h(9), h(12)), (Ok(16), Ok(19), Ok(24)));
        assert_eq!((g(8), g(9), g(11)), (Ok(14), Ok(17), Ok(20)));
        assert_eq!((p(8), p(9), p(11)), (Ok(13), Ok(16), Ok(19)));
        assert_eq!(f(5, 9).unwrap().value, 23);
        assert_eq!(f(2, 8).unwrap().value, 14);
        assert_eq!(f(1, 12).unwrap().value, 20);
        assert_eq!(f(4, 12).unwrap().regime, Regime::FourConnected);
        assert_eq!(f(6, 10).unwrap().value, 30);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(h(7), Err(Error::OrderOutOfDomain { n: 7, .. })));
        assert!(g(0).is_err() && p(7).is_err());
        assert_eq!(f(3, 10), Err(Error::UnsupportedK3));
        assert_eq!(f(0, 10), Err(Error::UnsupportedK(0)));
        assert!(f(5, 5).is_err());
        assert!(f(5, 6).is_ok());
        assert!(f(1, 7).is_err());
    }

    #[test]
    fn residue_forms_agree() {
        for n in 8..=10_000 {
            assert_eq!(g(n).unwrap(), g_by_residue(n), "g at {n}");
            assert_eq!(p(n).unwrap(), p_by_residue(n), "p at {n}");
        }
    }

    #[test]
    fn sandwich_and_degree_bound() {
        for n in 8..=10_000 {
            let (pn, gn, hn) = (p(n).unwrap(), g(n).unwrap(), h(n).unwrap());
            assert!(pn <= gn && gn <= hn);
            for k in [1, 2, 4] {
                let v = f(k, n).unwrap().value;
                assert!(v >= (k * n).div_ceil(2));
            }
            assert_eq!(hn == 2 * n, n % 4 == 0);
        }
    }

    #[test]
    fn conjecture_bound_is_exact() {
        assert_eq!(conjecture1_bound(12), Ratio::new(77, 3));
        assert_eq!(conjecture1_bound(1), Ratio::from_integer(0));
        assert!(conjecture1_satisfied(&Graph::empty(1).unwrap()));
        assert!(conjecture1_satisfied(&Graph::complete(5).unwrap()));
        for n in (8..=10_000).step_by(4) {
            let hn = h(n).unwrap() as u64;
            assert!(Ratio::from_integer(hn) < conjecture1_bound(n));
        }
    }
}
