//! Thin high-precision layer over astro-float, fixed at 256 mantissa bits
//! (about 77 decimal digits) so sums of terms like 1/log F_n stay far from
//! the noise floor of any comparison made at 50 digits.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};

pub const PREC: usize = 256;
const RM: RoundingMode = RoundingMode::ToEven;

/// Shared constants cache plus convenience constructors.
pub struct Hp {
    cc: Consts,
}

impl Hp {
    pub fn new() -> Self {
        Hp {
            cc: Consts::new().expect("constants cache"),
        }
    }

    pub fn from_u64(&self, v: u64) -> BigFloat {
        BigFloat::from_u64(v, PREC)
    }

    pub fn from_f64(&self, v: f64) -> BigFloat {
        BigFloat::from_f64(v, PREC)
    }

    /// Exact power of two 2^e.
    pub fn pow2(&self, e: i32) -> BigFloat {
        let mut x = BigFloat::from_u64(1, PREC);
        x.set_exponent(e + 1); // 1 = 0.5 * 2^1
        x
    }

    pub fn ln(&mut self, x: &BigFloat) -> BigFloat {
        x.ln(PREC, RM, &mut self.cc)
    }

    pub fn exp(&mut self, x: &BigFloat) -> BigFloat {
        x.exp(PREC, RM, &mut self.cc)
    }

    pub fn ln2(&mut self) -> BigFloat {
        self.ln(&self.from_u64(2))
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, PREC, RM)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, PREC, RM)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, PREC, RM)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, PREC, RM)
    }

    /// ln(F_n) = ln(2^(2^n) + 1). Exact construction up to n = 7; beyond
    /// that the +1 is below the 256-bit noise floor of 2^n ln 2, so the
    /// logarithm reduces to 2^n ln 2.
    pub fn ln_fermat(&mut self, n: u32) -> BigFloat {
        if n <= 7 {
            let f = self.add(&self.pow2(1 << n), &self.from_u64(1));
            self.ln(&f)
        } else {
            let ln2 = self.ln2();
            self.mul(&self.pow2(n as i32), &ln2)
        }
    }

    /// Decimal rendering at full precision.
    pub fn decimal(&mut self, x: &BigFloat) -> String {
        x.format(Radix::Dec, RM, &mut self.cc)
            .unwrap_or_else(|_| "NaN".to_string())
    }

    pub fn to_f64(&mut self, x: &BigFloat) -> f64 {
        self.decimal(x).parse().unwrap_or(f64::NAN)
    }

    pub fn lt(&self, a: &BigFloat, b: &BigFloat) -> bool {
        matches!(a.cmp(b), Some(c) if c < 0)
    }
}

impl Default for Hp {
    fn default() -> Self {
        Self::new()
    }
}
