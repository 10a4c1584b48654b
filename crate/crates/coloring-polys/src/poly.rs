//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored in ascending order of the exponent with trailing
//! zeros trimmed, so the zero polynomial is the empty vector. The human
//! display form writes descending powers of `k` ("1/2k^2 - 1/2k") and is
//! losslessly parseable back via `FromStr`.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyParseError {
    #[error("empty polynomial text")]
    Empty,
    #[error("invalid polynomial term {0:?}")]
    InvalidTerm(String),
}

/// A polynomial in one variable over the rationals.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn zero() -> RationalPoly {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn one() -> RationalPoly {
        RationalPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> RationalPoly {
        RationalPoly::from_coeffs(vec![c])
    }

    /// The monomial `c · k^deg`.
    pub fn monomial(deg: usize, c: BigRational) -> RationalPoly {
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        RationalPoly::from_coeffs(coeffs)
    }

    /// The variable `k` itself.
    pub fn x() -> RationalPoly {
        RationalPoly::monomial(1, BigRational::one())
    }

    /// Build from ascending coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> RationalPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    /// Convenience constructor from integer coefficients, ascending.
    pub fn from_ints(coeffs: &[i64]) -> RationalPoly {
        RationalPoly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `k^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Ascending coefficient slice with trailing zeros trimmed.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact evaluation at an integer point.
    pub fn eval_int(&self, k: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(k)))
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, c: &BigRational) -> RationalPoly {
        if c.is_zero() {
            return RationalPoly::zero();
        }
        RationalPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Ascending coefficients as normalized "numerator/denominator" strings,
    /// including interior zeros ("0/1"); empty for the zero polynomial is
    /// avoided by emitting a single "0/1".
    pub fn to_coeff_strings(&self) -> Vec<String> {
        if self.is_zero() {
            return vec!["0/1".to_string()];
        }
        self.coeffs
            .iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect()
    }

    /// Inverse of `to_coeff_strings`.
    pub fn from_coeff_strings(strings: &[String]) -> Result<RationalPoly, PolyParseError> {
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in strings {
            let c = BigRational::from_str(s)
                .map_err(|_| PolyParseError::InvalidTerm(s.clone()))?;
            coeffs.push(c);
        }
        Ok(RationalPoly::from_coeffs(coeffs))
    }
}

/// The falling factorial `k(k−1)⋯(k−r+1)` with `r` factors.
pub fn falling_factorial(r: usize) -> RationalPoly {
    let mut p = RationalPoly::one();
    for i in 0..r {
        let factor = RationalPoly::from_coeffs(vec![
            BigRational::from_integer(BigInt::from(-(i as i64))),
            BigRational::one(),
        ]);
        p = &p * &factor;
    }
    p
}

// ---------------------------------------------------------------------------
// ring operations

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        RationalPoly::from_coeffs(out)
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        RationalPoly::from_coeffs(out)
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        RationalPoly::from_coeffs(out)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for RationalPoly {
            type Output = RationalPoly;
            fn $method(self, rhs: RationalPoly) -> RationalPoly {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&RationalPoly> for RationalPoly {
            type Output = RationalPoly;
            fn $method(self, rhs: &RationalPoly) -> RationalPoly {
                $trait::$method(&self, rhs)
            }
        }
    )*};
}
forward_owned_ops!(Add::add, Sub::sub, Mul::mul);

// ---------------------------------------------------------------------------
// human-readable form

impl fmt::Display for RationalPoly {
    /// Descending powers of `k`; coefficients of magnitude 1 on non-constant
    /// terms are elided, rationals print as `num/den`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                if mag.denom().is_one() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "{}/{}", mag.numer(), mag.denom())?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "k")?,
                _ => write!(f, "k^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPoly({self})")
    }
}

impl FromStr for RationalPoly {
    type Err = PolyParseError;

    fn from_str(s: &str) -> Result<RationalPoly, PolyParseError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(PolyParseError::Empty);
        }
        // split into signed terms; signs only occur between terms
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (idx, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && idx > 0 {
                if current.is_empty() {
                    return Err(PolyParseError::InvalidTerm(compact.clone()));
                }
                terms.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            } else if ch == '-' {
                negative = true;
            } else if ch == '+' {
                // leading plus, ignore
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            return Err(PolyParseError::InvalidTerm(compact.clone()));
        }
        terms.push((negative, current));

        let mut acc = RationalPoly::zero();
        for (neg, term) in terms {
            let (coeff_text, exp) = match term.find('k') {
                None => (term.as_str(), 0usize),
                Some(pos) => {
                    let after = &term[pos + 1..];
                    let exp = if after.is_empty() {
                        1
                    } else if let Some(digits) = after.strip_prefix('^') {
                        digits
                            .parse::<usize>()
                            .map_err(|_| PolyParseError::InvalidTerm(term.clone()))?
                    } else {
                        return Err(PolyParseError::InvalidTerm(term.clone()));
                    };
                    (&term[..pos], exp)
                }
            };
            let mut coeff = if coeff_text.is_empty() {
                if exp == 0 {
                    return Err(PolyParseError::InvalidTerm(term.clone()));
                }
                BigRational::one()
            } else {
                BigRational::from_str(coeff_text)
                    .map_err(|_| PolyParseError::InvalidTerm(term.clone()))?
            };
            if neg {
                coeff = -coeff;
            }
            acc = &acc + &RationalPoly::monomial(exp, coeff);
        }
        Ok(acc)
    }
}
