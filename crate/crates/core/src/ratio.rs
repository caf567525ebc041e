//! Exact nonnegative rationals for dispatch thresholds.
//!
//! Every threshold comparison in the dispatch operations is carried out in
//! integer arithmetic so decisions are reproducible at the boundary.

use crate::Error;
use num_bigint::BigUint;
use std::fmt;
use std::str::FromStr;

/// Nonnegative rational, always kept in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den).max(1);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    pub fn is_positive(&self) -> bool {
        self.num > 0
    }

    /// 0 < eps < 1
    pub fn in_open_unit(&self) -> bool {
        self.num > 0 && self.num < self.den
    }

    /// 0 < eps < 1/2
    pub fn below_half(&self) -> bool {
        self.num > 0 && 2 * self.num < self.den
    }

    /// x <= n * (1 + eps), exactly.
    pub fn le_one_plus_eps_times(&self, x: u64, n: u64) -> bool {
        (x as u128) * (self.den as u128) <= (n as u128) * ((self.den + self.num) as u128)
    }

    /// x >= eps * n, exactly.
    pub fn ge_eps_times(&self, x: u64, n: u64) -> bool {
        (x as u128) * (self.den as u128) >= (self.num as u128) * (n as u128)
    }

    /// x >= n^(1 - eps), exactly, for eps = p/q in (0, 1):
    /// equivalent to x^q >= n^(q - p). x = 0 qualifies only when n = 0.
    pub fn ge_pow_one_minus_eps(&self, x: u64, n: u64) -> bool {
        debug_assert!(self.in_open_unit());
        let q = self.den as u32;
        let qp = (self.den - self.num) as u32;
        BigUint::from(x).pow(q) >= BigUint::from(n).pow(qp)
    }

    /// Approximate value, for reporting only.
    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Ratio {
    type Err = Error;

    /// Accepts "p/q", a decimal like "0.25", or an integer.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::BadInput(format!("cannot parse '{s}' as a rational"));
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let num: u64 = p.trim().parse().map_err(|_| bad())?;
            let den: u64 = q.trim().parse().map_err(|_| bad())?;
            if den == 0 {
                return Err(bad());
            }
            return Ok(Ratio::new(num, den));
        }
        if let Some((int, frac)) = s.split_once('.') {
            let int_part: u64 = if int.is_empty() {
                0
            } else {
                int.parse().map_err(|_| bad())?
            };
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            if frac.len() > 18 {
                return Err(bad());
            }
            let scale = 10u64.pow(frac.len() as u32);
            let frac_part: u64 = frac.parse().map_err(|_| bad())?;
            return Ok(Ratio::new(int_part * scale + frac_part, scale));
        }
        let num: u64 = s.parse().map_err(|_| bad())?;
        Ok(Ratio::new(num, 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!("1/2".parse::<Ratio>().unwrap(), Ratio::new(1, 2));
        assert_eq!("0.25".parse::<Ratio>().unwrap(), Ratio::new(1, 4));
        assert_eq!("1".parse::<Ratio>().unwrap(), Ratio::new(1, 1));
        assert_eq!("2/4".parse::<Ratio>().unwrap(), Ratio::new(1, 2));
        assert!("x".parse::<Ratio>().is_err());
        assert!("1/0".parse::<Ratio>().is_err());
    }

    #[test]
    fn threshold_comparisons_exact_at_boundary() {
        let half = Ratio::new(1, 2);
        // 9 <= 6 * 1.5 exactly
        assert!(half.le_one_plus_eps_times(9, 6));
        assert!(!half.le_one_plus_eps_times(10, 6));
        // 3 >= 0.5 * 6 exactly
        assert!(half.ge_eps_times(3, 6));
        assert!(!half.ge_eps_times(2, 6));
        // x >= 16^(1/2) = 4 exactly
        assert!(half.ge_pow_one_minus_eps(4, 16));
        assert!(!half.ge_pow_one_minus_eps(3, 16));
        // 2 >= 6^0.7 ~ 3.51 is false; 3 >= 6^0.5 ~ 2.45 is true
        assert!(!Ratio::new(3, 10).ge_pow_one_minus_eps(2, 6));
        assert!(half.ge_pow_one_minus_eps(3, 6));
    }

    #[test]
    fn range_checks() {
        assert!(Ratio::new(1, 4).below_half());
        assert!(!Ratio::new(1, 2).below_half());
        assert!(Ratio::new(99, 100).in_open_unit());
        assert!(!Ratio::new(1, 1).in_open_unit());
        assert!(!Ratio::new(0, 1).is_positive());
    }
}
