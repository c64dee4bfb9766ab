//! Exact integer polynomials and the exact spectral invariants built on
//! them: characteristic polynomials, inertia, ranks and trace powers.
//!
//! Everything here is big-integer arithmetic; no floating point enters any
//! code path. Characteristic polynomials come from the Faddeev–LeVerrier
//! recurrence, whose interior divisions are exact for integer matrices.
//! Eigenvalue sign counts come from Descartes' rule of signs, which is exact
//! (not merely a bound) because adjacency matrices are symmetric and
//! therefore have all-real spectra.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Dense integer polynomial. `coeffs[k]` is the coefficient of `x^k`; the
/// top coefficient is nonzero, and the zero polynomial is the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Builds from low-to-high coefficients, trimming leading zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial `c·x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPolynomial { coeffs }
    }

    /// The linear factor `x - root`.
    pub fn x_minus(root: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(-root), BigInt::one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division: errors unless `divisor` divides `self` over ℤ.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (dn, dd) = (self.degree().unwrap(), divisor.degree().unwrap());
        if dn < dd {
            return Err(Error::InexactDivision(format!(
                "degree {dn} < divisor degree {dd}"
            )));
        }
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            if (top % lead) != BigInt::zero() {
                return Err(Error::InexactDivision(format!(
                    "coefficient {top} not divisible by leading {lead}"
                )));
            }
            let q = top / lead;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let sub = d * &q;
                rem[k + i] -= sub;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision("nonzero remainder".into()));
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Splits off the `x^z` factor: returns `(reduced, z)` with
    /// `reduced(0) != 0` and `x^z · reduced == self`. Errors on zero input.
    pub fn strip_zero_roots(&self) -> Result<(Self, usize)> {
        if self.is_zero() {
            return Err(Error::InvalidParameter(
                "zero polynomial has no well-defined root multiplicity".into(),
            ));
        }
        let z = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero polynomial");
        Ok((Self::from_coeffs(self.coeffs[z..].to_vec()), z))
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        IntPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// `p(x²)` as a polynomial in `x`.
    pub fn compose_x_squared(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); 2 * self.coeffs.len() - 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * k] = c.clone();
        }
        IntPolynomial { coeffs }
    }

    /// Number of sign changes in the coefficient sequence (zeros skipped).
    /// By Descartes' rule this equals the positive-root count, with
    /// multiplicity, whenever all roots are real.
    pub fn sign_changes(&self) -> usize {
        let mut changes = 0;
        let mut last = 0i8;
        for c in &self.coeffs {
            let s = match c.sign() {
                num_bigint::Sign::Plus => 1,
                num_bigint::Sign::Minus => -1,
                num_bigint::Sign::NoSign => 0,
            };
            if s != 0 {
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
        }
        changes
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = gcd_int(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Polynomial gcd over ℤ via the primitive pseudo-remainder sequence,
    /// normalized to positive leading coefficient.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.primitive_part().scale(&b.content().abs());
        }
        if b.is_zero() {
            return a.primitive_part().scale(&a.content().abs());
        }
        let content = gcd_int(&a.content(), &b.content());
        let (mut p, mut q) = (a.primitive_part(), b.primitive_part());
        if p.degree() < q.degree() {
            std::mem::swap(&mut p, &mut q);
        }
        while !q.is_zero() {
            let r = pseudo_rem(&p, &q).primitive_part();
            p = q;
            q = r;
        }
        p.primitive_part().scale(&content)
    }

    /// Number of distinct complex roots: `deg p - deg gcd(p, p')`. For the
    /// all-real-roots polynomials this crate produces, this is the number of
    /// distinct eigenvalues.
    pub fn distinct_root_count(&self) -> Result<usize> {
        let deg = self.degree().ok_or_else(|| {
            Error::InvalidParameter("zero polynomial has no root structure".into())
        })?;
        if deg == 0 {
            return Ok(0);
        }
        let g = Self::gcd(self, &self.derivative());
        Ok(deg - g.degree().unwrap_or(0))
    }
}

/// Scalar multiple of `p mod q` computed without fractions: each round
/// replaces `rem` by `lc(q)·rem - top·x^{Δ}·q`, which cancels the leading
/// term exactly. Only used inside the primitive-PRS gcd, where scalar
/// factors are stripped again anyway.
fn pseudo_rem(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    let dq = q.degree().unwrap();
    let lead = q.leading().unwrap().clone();
    let mut rem = p.clone();
    while let Some(dr) = rem.degree() {
        if dr < dq {
            break;
        }
        let top = rem.leading().unwrap().clone();
        let shift = IntPolynomial::monomial(top, dr - dq);
        rem = rem.scale(&lead).sub(&shift.mul(q));
        debug_assert!(rem.degree().map_or(true, |d| d < dr));
    }
    rem
}

fn gcd_int(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
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
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            coeffs: Vec<String>,
        }
        Wire {
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            coeffs: Vec<String>,
        }
        let wire = Wire::deserialize(deserializer)?;
        let coeffs = wire
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::from_coeffs(coeffs))
    }
}

/// Exact eigenvalue sign counts `(positive, zero, negative)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
}

impl Inertia {
    pub fn total(&self) -> usize {
        self.positive + self.zero + self.negative
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.positive, self.zero, self.negative)
    }
}

// ---------------------------------------------------------------------------
// dense big-integer matrices (internal)
// ---------------------------------------------------------------------------

#[derive(Clone)]
struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    fn adjacency(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut m = Self::zeros(n);
        for u in 0..n {
            for v in g.neighbors(u) {
                m.data[u * n + v] = BigInt::one();
            }
        }
        m
    }

    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.data[k * n + j];
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    fn trace(&self) -> BigInt {
        (0..self.n).map(|i| &self.data[i * self.n + i]).sum()
    }

    fn add_scalar_diag(&mut self, c: &BigInt) {
        for i in 0..self.n {
            self.data[i * self.n + i] += c;
        }
    }
}

// ---------------------------------------------------------------------------
// exact spectral invariants
// ---------------------------------------------------------------------------

/// Characteristic polynomial `det(xI - A)` of the adjacency matrix, exact
/// over ℤ via Faddeev–LeVerrier. Monic of degree `n`.
pub fn char_poly(g: &Graph) -> IntPolynomial {
    char_poly_of_matrix(&IntMatrix::adjacency(g))
}

/// Characteristic polynomial of `A²`; its nonzero roots are the squared
/// nonzero singular values of the graph, with multiplicity.
pub fn squared_char_poly(g: &Graph) -> IntPolynomial {
    let a = IntMatrix::adjacency(g);
    char_poly_of_matrix(&a.mul(&a))
}

fn char_poly_of_matrix(a: &IntMatrix) -> IntPolynomial {
    let n = a.n;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = IntMatrix::zeros(n);
    for k in 1..=n {
        m = a.mul(&m);
        let c_prev = coeffs[n - k + 1].clone();
        m.add_scalar_diag(&c_prev);
        let t = a.mul(&m).trace();
        let k_big = BigInt::from(k);
        debug_assert!((&t % &k_big).is_zero(), "Faddeev-LeVerrier division must be exact");
        coeffs[n - k] = -(t / k_big);
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// `trace(A^k)`: the exact number of closed walks of length `k`.
pub fn trace_power(g: &Graph, k: usize) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::InvalidParameter("trace power needs k >= 1".into()));
    }
    let a = IntMatrix::adjacency(g);
    let mut p = a.clone();
    for _ in 1..k {
        p = p.mul(&a);
    }
    Ok(p.trace())
}

/// `[trace(A²), trace(A⁴), ..., trace(A^{2K})]` in one pass over powers of
/// `A²` — the exact even closed-walk counts.
pub fn even_trace_powers(g: &Graph, k_max: usize) -> Vec<BigInt> {
    let a = IntMatrix::adjacency(g);
    let sq = a.mul(&a);
    let mut out = Vec::with_capacity(k_max);
    let mut p = sq.clone();
    for k in 1..=k_max {
        out.push(p.trace());
        if k < k_max {
            p = p.mul(&sq);
        }
    }
    out
}

/// Exact inertia of the adjacency spectrum, by Descartes' rule of signs on
/// the zero-stripped characteristic polynomial and its reflection.
pub fn inertia(g: &Graph) -> Inertia {
    poly_inertia(&char_poly(g)).expect("characteristic polynomial is nonzero")
}

/// Sign counts of the roots of a polynomial with all-real roots. Exact for
/// any factor of a characteristic polynomial of a symmetric matrix.
pub fn poly_inertia(p: &IntPolynomial) -> Result<Inertia> {
    let (reduced, zero) = p.strip_zero_roots()?;
    Ok(Inertia {
        positive: reduced.sign_changes(),
        zero,
        negative: reduced.reflect().sign_changes(),
    })
}

/// `(rank, nullity)` of the adjacency matrix: rank is the nonzero-eigenvalue
/// count, nullity the zero multiplicity.
pub fn rank_nullity(g: &Graph) -> (usize, usize) {
    let i = inertia(g);
    (i.positive + i.negative, i.zero)
}
