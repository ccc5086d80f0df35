//! Distance scalars.
//!
//! Every algorithm in the crate is generic over the distance type. Floats
//! compare with a relative tolerance so that Lp distances which are equal in
//! exact arithmetic are treated as equal; rationals compare exactly.

use std::fmt::{Debug, Display};

use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// Exponent of an Lp norm, `p ∈ {1, 2, …, ∞}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LpNorm {
    Finite(u32),
    Infinity,
}

impl LpNorm {
    /// `1/p`, with `1/∞ = 0`.
    pub fn reciprocal(self) -> f64 {
        match self {
            LpNorm::Finite(p) => 1.0 / f64::from(p),
            LpNorm::Infinity => 0.0,
        }
    }
}

impl Display for LpNorm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LpNorm::Finite(p) => write!(f, "{p}"),
            LpNorm::Infinity => write!(f, "inf"),
        }
    }
}

/// A nonnegative distance value.
pub trait Scalar:
    Num + Signed + PartialOrd + Copy + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// Tolerant equality: `|a−b| ≤ ε·max(1,|a|,|b|)` for floats, exact otherwise.
    fn approx_eq(self, other: Self) -> bool;

    /// Rounds `self / width` down to an integer. `width` must be positive.
    fn floor_div(self, width: Self) -> i64;

    /// `p`-th root of a nonnegative value.
    fn root(self, p: u32) -> Self;

    fn approx_le(self, other: Self) -> bool {
        self <= other || self.approx_eq(other)
    }

    /// Strictly greater, beyond tolerance.
    fn approx_gt(self, other: Self) -> bool {
        !self.approx_le(other)
    }

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable as scalar")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Lp norm of a difference vector.
    fn lp_norm<I: IntoIterator<Item = Self>>(diffs: I, p: LpNorm) -> Self {
        match p {
            LpNorm::Infinity => diffs.into_iter().fold(Self::zero(), |acc, x| acc.max_of(x.abs())),
            LpNorm::Finite(1) => diffs.into_iter().fold(Self::zero(), |acc, x| acc + x.abs()),
            LpNorm::Finite(p) => {
                let sum = diffs.into_iter().fold(Self::zero(), |acc, x| {
                    let a = x.abs();
                    let mut pow = Self::one();
                    for _ in 0..p {
                        pow = pow * a;
                    }
                    acc + pow
                });
                sum.root(p)
            }
        }
    }
}

macro_rules! impl_float_scalar {
    ($t:ty, $eps:expr) => {
        impl Scalar for $t {
            fn approx_eq(self, other: Self) -> bool {
                let scale = 1.0_f64.max(f64::from(self).abs()).max(f64::from(other).abs());
                (f64::from(self) - f64::from(other)).abs() <= $eps * scale
            }

            fn floor_div(self, width: Self) -> i64 {
                let q = self / width;
                let f = q.floor();
                // a quotient sitting on a cell boundary within tolerance belongs to the upper cell
                if (f + 1.0).approx_eq(q) {
                    f as i64 + 1
                } else {
                    f as i64
                }
            }

            fn root(self, p: u32) -> Self {
                match p {
                    1 => self,
                    2 => self.sqrt(),
                    _ => self.powf(1.0 / p as $t),
                }
            }
        }
    };
}

impl_float_scalar!(f64, 1e-9);
impl_float_scalar!(f32, 1e-5);

impl Scalar for Ratio<i64> {
    fn approx_eq(self, other: Self) -> bool {
        self == other
    }

    fn floor_div(self, width: Self) -> i64 {
        (self / width).floor().to_integer()
    }

    /// Exact when numerator and denominator are perfect powers, otherwise rounded
    /// to a multiple of `2^-ROOT_BITS` so that later sums and products stay in range.
    fn root(self, p: u32) -> Self {
        if p == 1 {
            return self;
        }
        if let (Some(n), Some(d)) = (int_root(*self.numer(), p), int_root(*self.denom(), p)) {
            return Ratio::new(n, d);
        }
        let scale = (1_i64 << ROOT_BITS) as f64;
        let approx = self.to_f64_lossy().powf(1.0 / f64::from(p));
        Ratio::new((approx * scale).round() as i64, 1 << ROOT_BITS)
    }
}

const ROOT_BITS: u32 = 20;

/// The exact integer `p`-th root of a nonnegative `x`, if there is one.
fn int_root(x: i64, p: u32) -> Option<i64> {
    if x < 0 {
        return None;
    }
    let guess = (x as f64).powf(1.0 / f64::from(p)).round() as i64;
    (guess.saturating_sub(1)..=guess + 1).find(|&g| g >= 0 && g.checked_pow(p) == Some(x))
}
