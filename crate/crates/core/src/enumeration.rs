//! Exact counts of `|Cong(P^Φ_{n,d})|`: closed forms, the recursion over the columns of
//! `Cong(P^Φ_{n,0})`, the `a(k,d)` array, and coefficient extraction from the rational
//! generating function.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::finite::{build_lattice, label_d0, D0Label};
use crate::partition::NormalSubgroup;

/// An exact count.
pub type BigCount = BigUint;

/// Largest `n` or `d` for generating-function expansion.
pub const GF_BUDGET: usize = 40;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMethod {
    Closed,
    Recursion,
    Gf,
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

/// Binomial coefficient with `C(s, t) = 0` for `t > s`.
pub fn binomial(s: usize, t: usize) -> BigUint {
    if t > s {
        return BigUint::zero();
    }
    let t = t.min(s - t);
    (0..t).fold(BigUint::one(), |acc, i| acc * big((s - i) as u64) / big(i as u64 + 1))
}

/// Evaluates `Σ c_i d^i / den` for a polynomial that is integral on the naturals.
fn poly(d: usize, coeffs: &[i64], den: i64) -> BigUint {
    let x = BigInt::from(d);
    let num = coeffs.iter().rev().fold(BigInt::zero(), |acc, &c| acc * &x + BigInt::from(c));
    let (q, r) = num.div_rem(&BigInt::from(den));
    debug_assert!(r.is_zero());
    q.to_biguint().expect("counting polynomials are nonnegative on the naturals")
}

/// `|Cong(P^Φ_{n,d})|` from the closed formulas.
pub fn count_closed(n: usize, d: usize) -> BigUint {
    match n {
        0 => big(d as u64 + 2),
        1 => poly(d, &[6, 5, 3], 2),
        2 => poly(d, &[216, 398, 299, 106, 13], 24),
        3 => poly(d, &[60480, 127128, 115318, 58597, 17920, 3262, 322, 13], 5040),
        _ => {
            let c = |s: usize, t: usize| binomial(s, t);
            let m = 3 * n;
            c(m + d - 4, m - 5) + big(8) * c(m + d - 1, m - 1) + big(2) * c(m + d - 2, m - 1) + big(5) * c(m + d - 3, m - 1)
                - big(2) * c(m + d - 4, m - 1)
        }
    }
}

/// The array with `a(0,d) = (13d³+60d²+83d+48)/6`, `a(k,0) = k+8` and
/// `a(k,d) = a(k−1,d) + a(k,d−1)`.
pub fn a_array(k: usize, d: usize) -> BigUint {
    let mut row: Vec<BigUint> = (0..=d).map(|j| poly(j, &[48, 83, 60, 13], 6)).collect();
    for i in 1..=k {
        row[0] = big(i as u64 + 8);
        for j in 1..=d {
            row[j] = &row[j] + &row[j - 1];
        }
    }
    row.swap_remove(d)
}

/// The `k` with `|Cong(P^Φ_{n,d})| = a(k, d)`, for `n ≥ 2`.
pub fn k_of(n: usize) -> Option<usize> {
    match n {
        0 | 1 => None,
        2 => Some(1),
        3 => Some(4),
        _ => Some(3 * n - 4),
    }
}

fn special_count(label: D0Label, d: usize) -> Option<BigUint> {
    let s2 = NormalSubgroup::full(2);
    Some(match label {
        D0Label::Delta => BigUint::one(),
        D0Label::Rees(0) | D0Label::MuDown | D0Label::MuUp => big(d as u64 + 1),
        D0Label::Mu => big(6 * d as u64),
        D0Label::MuS2 => poly(d, &[0, 5, 2], 1),
        D0Label::Rees(1) => poly(d, &[4, -1, 9], 2),
        D0Label::ReesN(g) if g == s2 => poly(d, &[12, 2, 21, 13], 6),
        _ => return None,
    })
}

/// `|Cong(P^Φ_{n,d})|` by the recursion on the final column, with intervals taken from the
/// computed lattice `Cong(P^Φ_{n,0})`.
pub fn count_recursion(n: usize, d: usize) -> Result<BigUint> {
    match n {
        0 => return Ok(big(d as u64 + 2)),
        1 => return Ok(poly(d, &[6, 5, 3], 2)),
        _ => {}
    }
    let l = build_lattice(n, 0)?;
    let labels = l
        .matrices
        .iter()
        .map(|m| label_d0(m).ok_or_else(|| Error::Invalid(format!("unnamed congruence {}", m.label()))))
        .collect::<Result<Vec<_>>>()?;
    let mut c: Vec<BigUint> = vec![BigUint::one(); labels.len()];
    for dd in 1..=d {
        let next = (0..labels.len())
            .map(|s| {
                special_count(labels[s], dd).unwrap_or_else(|| (0..labels.len()).filter(|&t| l.leq[t][s]).map(|t| &c[t]).sum())
            })
            .collect();
        c = next;
    }
    Ok(c.iter().sum())
}

/// Numerator of the generating function, `[power of y][power of x]`.
const GF_NUMERATOR: [[i64; 6]; 12] = [
    [-2, 1, -5, 3, -1, 1],
    [21, -7, 31, -15, -4, 4],
    [-100, 21, -76, 19, -8, 8],
    [285, -34, 87, 31, -1, 1],
    [-540, 27, -31, -122, 1, -1],
    [714, 7, -32, 151, 0, 0],
    [-672, -49, 45, -80, 0, 0],
    [450, 69, -34, 1, 0, 0],
    [-210, -56, 28, 19, 0, 0],
    [65, 28, -19, -8, 0, 0],
    [-12, -8, 7, 1, 0, 0],
    [1, 1, -1, 0, 0, 0],
];

/// Bivariate integer polynomial as `[power of x][power of y]`.
type Poly2 = Vec<Vec<BigInt>>;

fn poly_mul(a: &Poly2, b: &Poly2) -> Poly2 {
    let (ax, ay) = (a.len(), a[0].len());
    let (bx, by) = (b.len(), b[0].len());
    let mut out = vec![vec![BigInt::zero(); ay + by - 1]; ax + bx - 1];
    for i in 0..ax {
        for j in 0..ay {
            if a[i][j].is_zero() {
                continue;
            }
            for k in 0..bx {
                for l in 0..by {
                    out[i + k][j + l] += &a[i][j] * &b[k][l];
                }
            }
        }
    }
    out
}

fn from_rows(rows: &[&[i64]]) -> Poly2 {
    rows.iter().map(|r| r.iter().map(|&c| BigInt::from(c)).collect()).collect()
}

/// Denominator `(y−1)⁹ (x−1) (y³−3y²+x+3y−1)`.
fn gf_denominator() -> Poly2 {
    let y_minus_1 = from_rows(&[&[-1, 1]]);
    let x_minus_1 = from_rows(&[&[-1], &[1]]);
    let cubic = from_rows(&[&[-1, 3, -3, 1], &[1, 0, 0, 0]]);
    let mut den = poly_mul(&x_minus_1, &cubic);
    for _ in 0..9 {
        den = poly_mul(&den, &y_minus_1);
    }
    den
}

/// The series coefficients `c[x][y]` of the generating function for `x ≤ nmax`, `y ≤ dmax`.
pub fn gf_coefficients(nmax: usize, dmax: usize) -> Result<Vec<Vec<BigInt>>> {
    if nmax > GF_BUDGET || dmax > GF_BUDGET {
        return Err(Error::CapExceeded { what: "series order", size: nmax.max(dmax) as u128, cap: GF_BUDGET as u128 });
    }
    let den = gf_denominator();
    let d00 = den[0][0].clone();
    let num = |a: usize, b: usize| -> BigInt {
        if b < GF_NUMERATOR.len() && a < GF_NUMERATOR[b].len() {
            BigInt::from(GF_NUMERATOR[b][a])
        } else {
            BigInt::zero()
        }
    };
    let mut c = vec![vec![BigInt::zero(); dmax + 1]; nmax + 1];
    for a in 0..=nmax {
        for b in 0..=dmax {
            let mut acc = num(a, b);
            for (i, row) in den.iter().enumerate().take(a + 1) {
                for (j, coef) in row.iter().enumerate().take(b + 1) {
                    if (i, j) != (0, 0) && !coef.is_zero() {
                        acc -= coef * &c[a - i][b - j];
                    }
                }
            }
            let (q, r) = acc.div_rem(&d00);
            if !r.is_zero() {
                return Err(Error::Invalid(format!("series coefficient at x^{a} y^{b} is not integral")));
            }
            c[a][b] = q;
        }
    }
    Ok(c)
}

/// `|Cong(P^Φ_{n,d})|` as the coefficient of `x^n y^d` in the generating function.
pub fn count_gf(n: usize, d: usize) -> Result<BigUint> {
    let c = gf_coefficients(n, d)?;
    c[n][d].to_biguint().ok_or_else(|| Error::Invalid(format!("negative coefficient at x^{n} y^{d}")))
}

/// `|Cong(P^Φ_{n,d})|` by the chosen method.
pub fn count(n: usize, d: usize, method: CountMethod) -> Result<BigUint> {
    match method {
        CountMethod::Closed => Ok(count_closed(n, d)),
        CountMethod::Recursion => count_recursion(n, d),
        CountMethod::Gf => count_gf(n, d),
    }
}

/// Grid of closed-form counts, rows `n = 0..=nmax`, columns `d = 0..=dmax`.
pub fn table(nmax: usize, dmax: usize) -> Vec<Vec<BigUint>> {
    (0..=nmax).map(|n| (0..=dmax).map(|d| count_closed(n, d)).collect()).collect()
}

/// The grid as CSV with header `n,d=0,d=1,…`.
pub fn table_csv(grid: &[Vec<BigUint>]) -> String {
    let width = grid.first().map_or(0, Vec::len);
    let mut out = String::from("n");
    for d in 0..width {
        out.push_str(&format!(",d={d}"));
    }
    out.push('\n');
    for (n, row) in grid.iter().enumerate() {
        out.push_str(&n.to_string());
        for v in row {
            out.push_str(&format!(",{v}"));
        }
        out.push('\n');
    }
    out
}
