//! Executable complexity bookkeeping: growth tables for the number and
//! degree of projection polynomials, dominant-term cell-count bounds, and
//! the degree exponent under basis preprocessing. All arithmetic is exact.

use crate::polyring::{Int, Rat};
use num_traits::One;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Flavor {
    /// Sign-invariant projection throughout.
    POnly,
    /// Reduced (constraint) projection for the first `l` levels, then the
    /// sign-invariant operator.
    EcThenP,
    /// As above, with constraints derived from a lexicographic basis, so
    /// the constraint degree column grows polynomially per level.
    GbEcThenP,
}

impl Flavor {
    pub fn text(self) -> &'static str {
        match self {
            Flavor::POnly => "P_only",
            Flavor::EcThenP => "EC_then_P",
            Flavor::GbEcThenP => "GB_EC_then_P",
        }
    }
}

/// One row of a growth table: at `level` variables remaining, at most
/// `count` polynomial groups of degree at most `degree` (and, for the
/// basis flavor, the separately tracked constraint degree).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthRow {
    pub level: usize,
    pub count: Int,
    pub degree: Int,
    pub ec_degree: Option<Int>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsError(pub String);

impl fmt::Display for BoundsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bounds: {}", self.0)
    }
}

impl std::error::Error for BoundsError {}

fn pow_int(base: &Int, e: u64) -> Int {
    let mut acc = Int::one();
    let mut b = base.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

fn two_pow(e: u64) -> Int {
    Int::one() << e
}

/// Growth table rows from `n` variables down to 1.
///
/// Plain flavor: at `n - r` variables the set has at most
/// `2^(2^(r-1)) m^(2^r)` groups of degree `2^(2^r - 1) d^(2^r)`.
///
/// Constraint flavor: the first `l` projections multiply counts by 3 and
/// square-double degrees; the remainder squares as in the plain flavor.
///
/// Basis flavor: counts as in the constraint flavor; the constraint degree
/// column is `(s+1)^(s+1) d^(s+1)` at `n - s` while other polynomials stay
/// at `d^(s(s+1)/2 + 1)`; below the constrained range the columns merge to
/// `d^(2^(r-1) l(l+1) + 2^r)`.
pub fn growth_table(
    n: usize,
    m: u64,
    d: u64,
    l: usize,
    flavor: Flavor,
) -> Result<Vec<GrowthRow>, BoundsError> {
    if n < 1 {
        return Err(BoundsError("need n >= 1".into()));
    }
    if m < 1 || d < 1 {
        return Err(BoundsError("need m, d >= 1".into()));
    }
    match flavor {
        Flavor::POnly => {
            if l != 0 {
                return Err(BoundsError("plain flavor takes l = 0".into()));
            }
        }
        _ => {
            if l < 1 || l > n.min(m as usize) {
                return Err(BoundsError("need 1 <= l <= min(m, n)".into()));
            }
        }
    }
    let m_int = Int::from(m);
    let d_int = Int::from(d);
    let mut rows = Vec::new();
    for r in 0..n {
        let level = n - r;
        let row = match flavor {
            Flavor::POnly => {
                if r == 0 {
                    GrowthRow {
                        level,
                        count: m_int.clone(),
                        degree: d_int.clone(),
                        ec_degree: None,
                    }
                } else {
                    let r = r as u64;
                    GrowthRow {
                        level,
                        count: two_pow(1 << (r - 1)) * pow_int(&m_int, 1 << r),
                        degree: two_pow((1 << r) - 1) * pow_int(&d_int, 1 << r),
                        ec_degree: None,
                    }
                }
            }
            Flavor::EcThenP => ec_row(level, r, n, l, &m_int, &d_int),
            Flavor::GbEcThenP => {
                let base = ec_row(level, r, n, l, &m_int, &d_int);
                let s = r as u64;
                if r <= l {
                    GrowthRow {
                        degree: pow_int(&d_int, s * (s + 1) / 2 + 1),
                        ec_degree: Some(
                            pow_int(&Int::from(s + 1), s + 1) * pow_int(&d_int, s + 1),
                        ),
                        ..base
                    }
                } else {
                    let rr = (r - l) as u64;
                    let ll = l as u64;
                    GrowthRow {
                        degree: pow_int(
                            &d_int,
                            (1u64 << (rr - 1)) * ll * (ll + 1) + (1u64 << rr),
                        ),
                        ec_degree: None,
                        ..base
                    }
                }
            }
        };
        rows.push(row);
    }
    Ok(rows)
}

/// Row of the constraint-reduced table: counts multiply by 3 through the
/// constrained range, then square; degrees square-double throughout.
fn ec_row(level: usize, r: usize, _n: usize, l: usize, m: &Int, d: &Int) -> GrowthRow {
    let degree = two_pow((1u64 << r) - 1) * pow_int(d, 1 << r);
    let count = if r <= l {
        pow_int(&Int::from(3), r as u64) * m.clone()
    } else {
        let rr = (r - l) as u64;
        pow_int(&Int::from(3), (1u64 << rr) * l as u64) * pow_int(m, 1 << rr)
    };
    GrowthRow {
        level,
        count,
        degree,
        ec_degree: None,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DominantTerm {
    /// Sign-invariant bound: `(2d)^(2^n - 1) m^(2^n - 1) 2^(2^(n-1) - 1)`.
    Eq8,
    /// Reduced projection only:
    /// `(2d)^(2^n - 1) m^(2^(n-l) + l - 1) 3^(l 2^(n-l) + l(l-3)/2)`.
    Eq10,
    /// Reduced projection and lifting:
    /// `(2d)^(2^n - 1) m^(2^(n-l) - 2) 2^(-l) 3^(l 2^(n-l) - 2l)`.
    Eq11,
}

fn rat_pow_signed(base: u64, e: i64) -> Rat {
    let b = Int::from(base);
    if e >= 0 {
        Rat::from_integer(pow_int(&b, e as u64))
    } else {
        Rat::new(Int::one(), pow_int(&b, (-e) as u64))
    }
}

/// Exact evaluation of the cited dominant terms.
pub fn dominant_term(
    n: usize,
    m: u64,
    d: u64,
    l: usize,
    which: DominantTerm,
) -> Result<Rat, BoundsError> {
    if n < 1 || m < 1 || d < 1 {
        return Err(BoundsError("need n, m, d >= 1".into()));
    }
    if which != DominantTerm::Eq8 && (l < 1 || l > n.min(m as usize)) {
        return Err(BoundsError("need 1 <= l <= min(m, n)".into()));
    }
    let pow2n = 1u64 << n;
    let two_d = Int::from(2 * d);
    let lead = Rat::from_integer(pow_int(&two_d, pow2n - 1));
    let m_int = Int::from(m);
    Ok(match which {
        DominantTerm::Eq8 => {
            let mm = Rat::from_integer(pow_int(&m_int, pow2n - 1));
            let tail = Rat::from_integer(two_pow((1u64 << (n - 1)) - 1));
            lead * mm * tail
        }
        DominantTerm::Eq10 => {
            let ll = l as i64;
            let pw = 1i64 << (n - l);
            let mm = Rat::from_integer(pow_int(&m_int, (pw + ll - 1) as u64));
            let e3 = ll * pw + ll * (ll - 3) / 2;
            lead * mm * rat_pow_signed(3, e3)
        }
        DominantTerm::Eq11 => {
            let ll = l as i64;
            let pw = 1i64 << (n - l);
            let me = pw - 2;
            let mm = if me >= 0 {
                Rat::from_integer(pow_int(&m_int, me as u64))
            } else {
                Rat::new(Int::one(), pow_int(&m_int, (-me) as u64))
            };
            lead * mm * rat_pow_signed(2, -ll) * rat_pow_signed(3, ll * pw - 2 * ll)
        }
    })
}

/// The degree exponent under basis preprocessing:
/// `2^(n-l) (l^2 + l + 2)/2 - (l^2 + l)/2 - 2`.
pub fn gb_degree_exponent(n: usize, l: usize) -> Result<Int, BoundsError> {
    if !(1 <= l && l < n) {
        return Err(BoundsError("need 1 <= l < n".into()));
    }
    let ll = Int::from(l as u64);
    let sq = &ll * &ll;
    let half1 = (&sq + &ll + Int::from(2)) / Int::from(2);
    let half2 = (&sq + &ll) / Int::from(2);
    Ok(two_pow((n - l) as u64) * half1 - half2 - Int::from(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(x: i64) -> Int {
        Int::from(x)
    }

    #[test]
    fn plain_rows_match_closed_forms() {
        let rows = growth_table(5, 3, 2, 0, Flavor::POnly).unwrap();
        assert_eq!(rows[0].count, int(3));
        assert_eq!(rows[0].degree, int(2));
        // One projection: 2m^2 and 2d^2.
        assert_eq!(rows[1].count, int(2 * 9));
        assert_eq!(rows[1].degree, int(2 * 4));
        // Two projections: 4m^4 and 8d^4.
        assert_eq!(rows[2].count, int(4 * 81));
        assert_eq!(rows[2].degree, int(8 * 16));
    }

    #[test]
    fn ec_rows_multiply_by_three() {
        let rows = growth_table(5, 3, 2, 2, Flavor::EcThenP).unwrap();
        assert_eq!(rows[1].count, int(9));
        assert_eq!(rows[2].count, int(27));
        assert_eq!(rows[1].degree, int(8));
        assert_eq!(rows[2].degree, int(128));
        // Below the constrained range: 3^(2l) m^2 at the first merged row.
        assert_eq!(rows[3].count, int(81 * 9));
    }

    #[test]
    fn gb_degree_columns() {
        let rows = growth_table(6, 4, 2, 3, Flavor::GbEcThenP).unwrap();
        // Constraint degrees 4d^2, 27d^3, 256d^4.
        assert_eq!(rows[1].ec_degree, Some(int(4 * 4)));
        assert_eq!(rows[2].ec_degree, Some(int(27 * 8)));
        assert_eq!(rows[3].ec_degree, Some(int(256 * 16)));
        // Other-polynomial degrees d, d^2, d^4, d^7.
        assert_eq!(rows[0].degree, int(2));
        assert_eq!(rows[1].degree, int(4));
        assert_eq!(rows[2].degree, int(16));
        assert_eq!(rows[3].degree, int(128));
    }

    #[test]
    fn dominant_term_examples() {
        // n=2, m=1, d=1: 2^3 * 1 * 2 = 16.
        let v = dominant_term(2, 1, 1, 0, DominantTerm::Eq8).unwrap();
        assert_eq!(v, Rat::from_integer(int(16)));
        // n=2, m=2, d=2, l=1: 4^3 * 2^0 * 2^-1 * 3^0 = 32.
        let v = dominant_term(2, 2, 2, 1, DominantTerm::Eq11).unwrap();
        assert_eq!(v, Rat::from_integer(int(32)));
        // n=3, m=2, d=2, l=1: 4^7 * 2^4 * 3^3.
        let v = dominant_term(3, 2, 2, 1, DominantTerm::Eq10).unwrap();
        let expect = Rat::from_integer(pow_int(&int(4), 7) * int(16) * int(27));
        assert_eq!(v, expect);
    }

    #[test]
    fn gb_exponent_examples() {
        assert_eq!(gb_degree_exponent(3, 1).unwrap(), int(5));
        assert_eq!(gb_degree_exponent(2, 1).unwrap(), int(1));
        assert_eq!(gb_degree_exponent(4, 2).unwrap(), int(11));
    }

    #[test]
    fn reduced_bound_beats_plain() {
        for n in 2..=8usize {
            for m in 2..=5 {
                for d in 2..=5 {
                    for l in 1..=3usize {
                        if l >= n || l > m as usize {
                            continue;
                        }
                        let a = dominant_term(n, m, d, l, DominantTerm::Eq11).unwrap();
                        let b = dominant_term(n, m, d, 0, DominantTerm::Eq8).unwrap();
                        assert!(a < b, "n={n} m={m} d={d} l={l}");
                    }
                }
            }
        }
    }
}
