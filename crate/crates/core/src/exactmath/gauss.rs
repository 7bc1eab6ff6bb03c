use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::{ParseExactError, Rational};

/// Element `a + b*i` of the field generated by a primitive 4th root of
/// unity over the rationals.
///
/// Serializes as `"a/b+c/d*i"` (components follow the [`Rational`]
/// format, `+1*i`/`-1*i` abbreviate to `+i`/`-i`, and a zero part is
/// dropped). The order of the group generated by `i` is fixed at 4;
/// other cyclotomic fields are out of scope.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRational {
    re: Rational,
    im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn integer(n: i64) -> Self {
        Self::from_rational(Rational::integer(n))
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// The generator i.
    pub fn i() -> Self {
        GaussRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    /// `i^k` (period 4 in `k`).
    pub fn i_pow(k: u32) -> Self {
        match k % 4 {
            0 => Self::one(),
            1 => Self::i(),
            2 => -Self::one(),
            _ => -Self::i(),
        }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// Field norm `a^2 + b^2` (a nonnegative rational, zero only at zero).
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        let n = self.norm();
        let inv = n.recip()?;
        Some(GaussRational {
            re: &self.re * &inv,
            im: -&self.im * &inv,
        })
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let mut shown_re = false;
        if !self.re.is_zero() {
            write!(f, "{}", self.re)?;
            shown_re = true;
        }
        let abs = self.im.abs();
        let sign = if self.im.is_negative() {
            "-"
        } else if shown_re {
            "+"
        } else {
            ""
        };
        if abs == Rational::one() {
            write!(f, "{}i", sign)
        } else {
            write!(f, "{}{}*i", sign, abs)
        }
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for GaussRational {
    type Err = ParseExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ParseExactError(s.to_string());
        if s.is_empty() {
            return Err(bad());
        }
        // Split at the last top-level '+' or '-' (not the leading sign):
        // components are rational literals, so any interior sign starts
        // the imaginary term.
        let split = s
            .char_indices()
            .filter(|&(idx, c)| idx > 0 && (c == '+' || c == '-'))
            .map(|(idx, _)| idx)
            .last();
        let (re_str, im_str) = match split {
            Some(idx) if s.ends_with('i') => (&s[..idx], &s[idx..]),
            _ if s.ends_with('i') => ("", s),
            _ => (s, ""),
        };
        let re = if re_str.is_empty() {
            Rational::zero()
        } else {
            re_str.parse().map_err(|_| bad())?
        };
        let im = if im_str.is_empty() {
            Rational::zero()
        } else {
            let body = &im_str[..im_str.len() - 1];
            match body {
                "" | "+" => Rational::one(),
                "-" => -Rational::one(),
                _ => {
                    let body = body.strip_suffix('*').ok_or_else(bad)?;
                    body.parse().map_err(|_| bad())?
                }
            }
        };
        Ok(GaussRational { re, im })
    }
}

impl Serialize for GaussRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl From<Rational> for GaussRational {
    fn from(re: Rational) -> Self {
        GaussRational::from_rational(re)
    }
}

impl From<i64> for GaussRational {
    fn from(n: i64) -> Self {
        GaussRational::integer(n)
    }
}

impl Add for GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: GaussRational) -> GaussRational {
        GaussRational {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: GaussRational) -> GaussRational {
        GaussRational {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: GaussRational) -> GaussRational {
        GaussRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for GaussRational {
    type Output = GaussRational;
    /// Panics when dividing by zero, like integer division.
    fn div(self, rhs: GaussRational) -> GaussRational {
        self * rhs.recip().expect("division by zero GaussRational")
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

macro_rules! gauss_ref_binop {
    ($Op:ident, $method:ident) => {
        impl $Op<&GaussRational> for GaussRational {
            type Output = GaussRational;
            fn $method(self, rhs: &GaussRational) -> GaussRational {
                self.$method(rhs.clone())
            }
        }
        impl $Op<GaussRational> for &GaussRational {
            type Output = GaussRational;
            fn $method(self, rhs: GaussRational) -> GaussRational {
                self.clone().$method(rhs)
            }
        }
        impl $Op<&GaussRational> for &GaussRational {
            type Output = GaussRational;
            fn $method(self, rhs: &GaussRational) -> GaussRational {
                self.clone().$method(rhs.clone())
            }
        }
    };
}

gauss_ref_binop!(Add, add);
gauss_ref_binop!(Sub, sub);
gauss_ref_binop!(Mul, mul);
gauss_ref_binop!(Div, div);

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        -self.clone()
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        GaussRational::zero()
    }
    fn is_zero(&self) -> bool {
        GaussRational::is_zero(self)
    }
}

impl One for GaussRational {
    fn one() -> Self {
        GaussRational::one()
    }
}
