use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactError, GaussRational, Rational};

/// Coefficient bound for [`UniPoly`]: an exact field with by-value ops.
pub trait FieldScalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
}

impl<T> FieldScalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + Div<Output = T>
{
}

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `x^i`.
///
/// Canonical form: the vector is empty for the zero polynomial, and the
/// last element is nonzero otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct UniPoly<T: FieldScalar> {
    coeffs: Vec<T>,
}

pub type RatPoly = UniPoly<Rational>;
pub type GaussPoly = UniPoly<GaussRational>;

impl<T: FieldScalar> UniPoly<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: T, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                let mut k = T::zero();
                for _ in 0..i {
                    k = k + T::one();
                }
                k * c.clone()
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Quotient and remainder; errors when dividing by zero.
    pub fn divrem(&self, rhs: &Self) -> Result<(Self, Self), ExactError> {
        let d_rhs = rhs.degree().ok_or(ExactError::ZeroPolynomial)?;
        let lead = rhs.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![T::zero(); self.coeffs.len().saturating_sub(d_rhs)];
        while rem.len() > d_rhs {
            let k = rem.len() - 1 - d_rhs;
            let factor = rem.last().unwrap().clone() / lead.clone();
            if !factor.is_zero() {
                for (i, c) in rhs.coeffs.iter().enumerate() {
                    rem[k + i] = rem[k + i].clone() - factor.clone() * c.clone();
                }
                quo[k] = factor;
            }
            rem.pop();
        }
        Ok((Self::from_coeffs(quo), Self::from_coeffs(rem)))
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.into_monic()
    }

    fn into_monic(self) -> Self {
        match self.leading() {
            None => self,
            Some(l) => {
                let l = l.clone();
                Self::from_coeffs(
                    self.coeffs
                        .into_iter()
                        .map(|c| c / l.clone())
                        .collect(),
                )
            }
        }
    }

    /// True iff the polynomial has no repeated roots over the algebraic
    /// closure, i.e. `gcd(p, p')` is a nonzero constant.
    pub fn squarefree(&self) -> Result<bool, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        Ok(g.degree() == Some(0) || (g.is_zero() && self.degree() == Some(0)))
    }
}

impl<T: FieldScalar> Add for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn add(self, rhs: &UniPoly<T>) -> UniPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: FieldScalar> Sub for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn sub(self, rhs: &UniPoly<T>) -> UniPoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: FieldScalar> Mul for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn mul(self, rhs: &UniPoly<T>) -> UniPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl<T: FieldScalar> Neg for &UniPoly<T> {
    type Output = UniPoly<T>;
    fn neg(self) -> UniPoly<T> {
        UniPoly::from_coeffs(self.coeffs.iter().cloned().map(|c| -c).collect())
    }
}

// ---------------------------------------------------------------------
// Root finding over the Gaussian rationals.
// ---------------------------------------------------------------------

/// Gaussian integer used internally for the rational root theorem.
#[derive(Clone, PartialEq, Eq)]
struct Gi(BigInt, BigInt);

impl Gi {
    fn norm(&self) -> BigInt {
        &self.0 * &self.0 + &self.1 * &self.1
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero() && self.1.is_zero()
    }

    /// Whether `self` divides `g` in Z[i].
    fn divides(&self, g: &Gi) -> bool {
        let n = self.norm();
        if n.is_zero() {
            return g.is_zero();
        }
        // g * conj(self) componentwise divisible by norm(self).
        let re = &g.0 * &self.0 + &g.1 * &self.1;
        let im = &g.1 * &self.0 - &g.0 * &self.1;
        (&re % &n).is_zero() && (&im % &n).is_zero()
    }
}

/// All divisors of `g` in Z[i] with nonnegative components, up to units.
fn gauss_divisors(g: &Gi) -> Vec<Gi> {
    let n = g.norm();
    debug_assert!(!n.is_zero());
    let mut norm_divisors = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            norm_divisors.push(d.clone());
            let other = &n / &d;
            if other != d {
                norm_divisors.push(other);
            }
        }
        d += 1;
    }
    let mut out = Vec::new();
    for nd in norm_divisors {
        let mut x = BigInt::zero();
        while &x * &x <= nd {
            let rest = &nd - &x * &x;
            let y = rest.sqrt();
            if &y * &y == rest {
                let cand = Gi(x.clone(), y);
                if cand.divides(g) {
                    out.push(cand);
                }
            }
            x += 1;
        }
    }
    out
}

/// Clears denominators, returning the coefficients as Gaussian integers.
fn clear_denominators(p: &GaussPoly) -> Vec<Gi> {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.re().denom());
        lcm = lcm.lcm(c.im().denom());
    }
    let scale = Rational::integer(lcm);
    p.coeffs()
        .iter()
        .map(|c| {
            let re = c.re() * &scale;
            let im = c.im() * &scale;
            debug_assert!(re.is_integer() && im.is_integer());
            Gi(re.numer().clone(), im.numer().clone())
        })
        .collect()
}

/// All roots of `p` in the Gaussian rationals, with multiplicities, in
/// order of discovery.
///
/// Complete by the rational root theorem over Z[i]: if fewer than
/// `deg p` roots exist in the field, the leftover factor is genuinely
/// irreducible over Q(i) and `IrreducibleFactor` is returned. Exactness
/// is the contract; nothing is ever approximated.
pub fn gauss_roots(p: &GaussPoly) -> Result<Vec<(GaussRational, usize)>, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let mut found: Vec<(GaussRational, usize)> = Vec::new();
    let mut record = |root: GaussRational| match found.iter_mut().find(|(r, _)| *r == root) {
        Some((_, m)) => *m += 1,
        None => found.push((root, 1)),
    };
    let mut cur = p.clone();
    // Strip roots at zero.
    while !cur.is_zero() && cur.coeff(0).is_zero() {
        record(GaussRational::zero());
        cur = UniPoly::from_coeffs(cur.coeffs()[1..].to_vec());
    }
    'outer: while cur.degree().map_or(false, |d| d >= 1) {
        if cur.degree() == Some(1) {
            let root = -cur.coeff(0) / cur.coeff(1);
            record(root);
            break;
        }
        let ints = clear_denominators(&cur);
        let c0 = &ints[0];
        let cd = ints.last().unwrap();
        let units = [
            GaussRational::one(),
            GaussRational::i(),
            -GaussRational::one(),
            -GaussRational::i(),
        ];
        for num in gauss_divisors(c0) {
            for den in gauss_divisors(cd) {
                let num_q = GaussRational::new(
                    Rational::integer(num.0.clone()),
                    Rational::integer(num.1.clone()),
                );
                let den_q = GaussRational::new(
                    Rational::integer(den.0.clone()),
                    Rational::integer(den.1.clone()),
                );
                let base = num_q / den_q;
                for u in &units {
                    let cand = &base * u;
                    if cur.eval(&cand).is_zero() {
                        record(cand.clone());
                        cur = deflate(&cur, &cand);
                        continue 'outer;
                    }
                }
            }
        }
        return Err(ExactError::IrreducibleFactor(cur.degree().unwrap()));
    }
    Ok(found)
}

/// Divides by `(x - root)`; `root` must be a root.
fn deflate(p: &GaussPoly, root: &GaussRational) -> GaussPoly {
    let d = p.degree().expect("nonzero polynomial");
    let mut out = vec![GaussRational::zero(); d];
    let mut carry = GaussRational::zero();
    for i in (0..=d).rev() {
        let v = p.coeff(i) + carry.clone();
        if i == 0 {
            debug_assert!(v.is_zero(), "deflation by a non-root");
        } else {
            carry = &v * root;
            out[i - 1] = v;
        }
    }
    UniPoly::from_coeffs(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(coeffs: &[i64]) -> RatPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| Rational::integer(c)).collect())
    }

    fn gp(coeffs: &[(i64, i64)]) -> GaussPoly {
        UniPoly::from_coeffs(
            coeffs
                .iter()
                .map(|&(re, im)| {
                    GaussRational::new(Rational::integer(re), Rational::integer(im))
                })
                .collect(),
        )
    }

    #[test]
    fn canonical_form_strips_zeros() {
        let p = rp(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(rp(&[]).is_zero());
        assert!(rp(&[0, 0]).is_zero());
    }

    #[test]
    fn divrem_reconstructs() {
        let p = rp(&[2, 0, -3, 1]);
        let d = rp(&[-1, 1]);
        let (q, r) = p.divrem(&d).unwrap();
        assert_eq!(&(&q * &d) + &r, p);
    }

    #[test]
    fn squarefree_basic_cases() {
        // y^2 + 1: distinct roots +-i.
        assert!(rp(&[1, 0, 1]).squarefree().unwrap());
        // y^4: repeated root 0.
        assert!(!rp(&[0, 0, 0, 0, 1]).squarefree().unwrap());
        // y^4 + y^2 = y^2 (y^2 + 1): gcd with derivative has positive degree.
        let p = rp(&[0, 0, 1, 0, 1]);
        assert_eq!(p.gcd(&p.derivative()).degree(), Some(1));
        assert!(!p.squarefree().unwrap());
        assert_eq!(rp(&[]).squarefree(), Err(ExactError::ZeroPolynomial));
    }

    #[test]
    fn gauss_roots_splits_quadratics() {
        // w^2 + 1 = (w - i)(w + i).
        let roots = gauss_roots(&gp(&[(1, 0), (0, 0), (1, 0)])).unwrap();
        let set: Vec<_> = roots.iter().map(|(r, m)| (r.clone(), *m)).collect();
        assert_eq!(set.len(), 2);
        assert!(set.contains(&(GaussRational::i(), 1)));
        assert!(set.contains(&(-GaussRational::i(), 1)));

        // w^2 - 1 over Q(i).
        let roots = gauss_roots(&gp(&[(-1, 0), (0, 0), (1, 0)])).unwrap();
        assert!(roots.contains(&(GaussRational::one(), 1)));
        assert!(roots.contains(&(-GaussRational::one(), 1)));
    }

    #[test]
    fn gauss_roots_reports_multiplicity() {
        // (w - 1)^2 (w + i) = w^3 + (i - 2) w^2 + (1 - 2i) w + i.
        let one = GaussRational::one();
        let i = GaussRational::i();
        let factor1 = UniPoly::from_coeffs(vec![-one.clone(), one.clone()]);
        let factor2 = UniPoly::from_coeffs(vec![i.clone(), one.clone()]);
        let p = &(&factor1 * &factor1) * &factor2;
        let roots = gauss_roots(&p).unwrap();
        assert!(roots.contains(&(GaussRational::one(), 2)));
        assert!(roots.contains(&(-GaussRational::i(), 1)));
    }

    #[test]
    fn gauss_roots_detects_irreducible() {
        // w^2 - 2 has no roots in Q(i).
        assert_eq!(
            gauss_roots(&gp(&[(-2, 0), (0, 0), (1, 0)])),
            Err(ExactError::IrreducibleFactor(2))
        );
        // w^2 - i: sqrt(i) is not Gaussian rational.
        assert_eq!(
            gauss_roots(&gp(&[(0, -1), (0, 0), (1, 0)])),
            Err(ExactError::IrreducibleFactor(2))
        );
    }

    #[test]
    fn gauss_roots_with_denominators() {
        // (w - 1/2)(w - i/3)
        let half = GaussRational::new(Rational::new(1, 2), Rational::zero());
        let third_i = GaussRational::new(Rational::zero(), Rational::new(1, 3));
        let p = &UniPoly::from_coeffs(vec![-half.clone(), GaussRational::one()])
            * &UniPoly::from_coeffs(vec![-third_i.clone(), GaussRational::one()]);
        let roots = gauss_roots(&p).unwrap();
        assert!(roots.contains(&(half, 1)));
        assert!(roots.contains(&(third_i, 1)));
    }
}
