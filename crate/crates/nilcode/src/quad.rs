use crate::NilError;
use std::cmp::Ordering;

/// A quadratic irrational `alpha = (p + q*sqrt(d))/r` in `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlphaSpec {
    pub p: i64,
    pub q: i64,
    pub d: i64,
    pub r: i64,
}

impl AlphaSpec {
    /// `(sqrt(5) - 1) / 2`, the default.
    pub fn golden() -> Self {
        AlphaSpec { p: -1, q: 1, d: 5, r: 2 }
    }

    pub fn validate(&self) -> Result<(), NilError> {
        if self.q == 0 {
            return Err(NilError::BadAlpha("q = 0 makes alpha rational".into()));
        }
        if self.r <= 0 {
            return Err(NilError::BadAlpha("need r > 0".into()));
        }
        if self.d < 2 {
            return Err(NilError::BadAlpha("need d >= 2".into()));
        }
        let s = (self.d as f64).sqrt() as i64;
        for cand in [s - 1, s, s + 1] {
            if cand >= 0 && cand * cand == self.d {
                return Err(NilError::BadAlpha(format!("{} is a perfect square", self.d)));
            }
        }
        // 0 < alpha < 1.
        if self.sign_linear(0, 1) <= 0 || self.sign_linear(-1, 1) >= 0 {
            return Err(NilError::BadAlpha("alpha must lie in (0, 1)".into()));
        }
        Ok(())
    }

    /// Exact sign of `u + v * alpha`.
    pub fn sign_linear(&self, u: i128, v: i128) -> i8 {
        // u + v(p + q sqrt(d))/r has the sign of s + t*sqrt(d) with
        // s = u*r + v*p, t = v*q (r > 0).
        let s = u
            .checked_mul(self.r as i128)
            .and_then(|x| x.checked_add(v.checked_mul(self.p as i128).expect("quad overflow")))
            .expect("quad overflow");
        let t = v.checked_mul(self.q as i128).expect("quad overflow");
        sign_s_plus_t_sqrt(s, t, self.d as i128)
    }

    pub fn to_f64(&self) -> f64 {
        (self.p as f64 + self.q as f64 * (self.d as f64).sqrt()) / self.r as f64
    }
}

fn sign_s_plus_t_sqrt(s: i128, t: i128, d: i128) -> i8 {
    match (s.signum(), t.signum()) {
        (0, 0) => 0,
        (ss, 0) => ss as i8,
        (0, ts) => ts as i8,
        (1, 1) => 1,
        (-1, -1) => -1,
        (1, -1) => {
            // s > 0 > t: sign of s^2 - t^2 d.
            cmp_squares(s, t, d)
        }
        (-1, 1) => -cmp_squares(s, t, d),
        _ => unreachable!(),
    }
}

/// Sign of `s^2 - t^2 * d` (for mixed-sign comparisons).
fn cmp_squares(s: i128, t: i128, d: i128) -> i8 {
    let s2 = s.checked_mul(s).expect("quad overflow");
    let t2d = t.checked_mul(t).and_then(|x| x.checked_mul(d)).expect("quad overflow");
    match s2.cmp(&t2d) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// `(a + b*alpha) / c` with `c > 0`, gcd-reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quad {
    pub a: i128,
    pub b: i128,
    pub c: i128,
}

impl Quad {
    pub fn new(a: i128, b: i128, c: i128) -> Quad {
        assert!(c != 0, "zero denominator");
        let (a, b, c) = if c < 0 { (-a, -b, -c) } else { (a, b, c) };
        let g = gcd(gcd(a.unsigned_abs(), b.unsigned_abs()), c.unsigned_abs()).max(1) as i128;
        Quad { a: a / g, b: b / g, c: c / g }
    }

    pub fn zero() -> Quad {
        Quad { a: 0, b: 0, c: 1 }
    }

    pub fn from_int(n: i128) -> Quad {
        Quad { a: n, b: 0, c: 1 }
    }

    pub fn from_ratio(num: i128, den: i128) -> Quad {
        Quad::new(num, 0, den)
    }

    /// `k * alpha / den`.
    pub fn alpha_times(k: i128, den: i128) -> Quad {
        Quad::new(0, k, den)
    }

    pub fn add(&self, other: &Quad) -> Quad {
        Quad::new(
            self.a
                .checked_mul(other.c)
                .and_then(|x| x.checked_add(other.a.checked_mul(self.c).expect("quad overflow")))
                .expect("quad overflow"),
            self.b
                .checked_mul(other.c)
                .and_then(|x| x.checked_add(other.b.checked_mul(self.c).expect("quad overflow")))
                .expect("quad overflow"),
            self.c.checked_mul(other.c).expect("quad overflow"),
        )
    }

    pub fn sub(&self, other: &Quad) -> Quad {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Quad {
        Quad { a: -self.a, b: -self.b, c: self.c }
    }

    pub fn scale(&self, k: i128) -> Quad {
        Quad::new(
            self.a.checked_mul(k).expect("quad overflow"),
            self.b.checked_mul(k).expect("quad overflow"),
            self.c,
        )
    }

    pub fn div_int(&self, k: i128) -> Quad {
        Quad::new(self.a, self.b, self.c.checked_mul(k).expect("quad overflow"))
    }

    pub fn sign(&self, alpha: &AlphaSpec) -> i8 {
        alpha.sign_linear(self.a, self.b)
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn cmp_with(&self, other: &Quad, alpha: &AlphaSpec) -> Ordering {
        match self.sub(other).sign(alpha) {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }

    /// Exact floor, via a float estimate corrected by exact sign tests.
    pub fn floor(&self, alpha: &AlphaSpec) -> i128 {
        let approx = (self.a as f64 + self.b as f64 * alpha.to_f64()) / self.c as f64;
        let mut g = approx.floor() as i128;
        // self - g >= 0 must hold; fix up in both directions.
        while alpha.sign_linear(self.a - g.checked_mul(self.c).expect("quad overflow"), self.b) < 0
        {
            g -= 1;
        }
        while alpha.sign_linear(self.a - (g + 1).checked_mul(self.c).expect("quad overflow"), self.b)
            >= 0
        {
            g += 1;
        }
        g
    }

    /// Fractional part in `[0, 1)`.
    pub fn mod_one(&self, alpha: &AlphaSpec) -> Quad {
        let f = self.floor(alpha);
        Quad::new(
            self.a - f.checked_mul(self.c).expect("quad overflow"),
            self.b,
            self.c,
        )
    }

    pub fn to_f64(&self, alpha: &AlphaSpec) -> f64 {
        (self.a as f64 + self.b as f64 * alpha.to_f64()) / self.c as f64
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_is_valid_and_in_unit_interval() {
        let alpha = AlphaSpec::golden();
        alpha.validate().unwrap();
        assert_eq!(Quad::alpha_times(1, 1).sign(&alpha), 1);
        assert_eq!(Quad::alpha_times(1, 1).sub(&Quad::from_int(1)).sign(&alpha), -1);
    }

    #[test]
    fn golden_satisfies_its_minimal_polynomial() {
        // alpha^2 = 1 - alpha for the golden alpha: check sign of
        // (1 - alpha) - alpha^2 via the known expansion (3 - sqrt5)/2.
        let alpha = AlphaSpec::golden();
        // 1 - 2alpha has sign of 1 - 2*0.618 < 0.
        assert_eq!(alpha.sign_linear(1, -2), -1);
        assert_eq!(alpha.sign_linear(2, -3), 1); // 2 - 3*0.618 = 0.146 > 0
    }

    #[test]
    fn floor_and_mod() {
        let alpha = AlphaSpec::golden();
        let x = Quad::alpha_times(3, 1); // 3 alpha ~ 1.854
        assert_eq!(x.floor(&alpha), 1);
        let m = x.mod_one(&alpha);
        assert_eq!(m, Quad::new(-1, 3, 1));
        assert_eq!(m.sign(&alpha), 1);
        assert_eq!(m.sub(&Quad::from_int(1)).sign(&alpha), -1);
        assert_eq!(Quad::from_int(-1).floor(&alpha), -1);
        assert_eq!(Quad::from_ratio(-1, 2).floor(&alpha), -1);
        assert_eq!(Quad::from_ratio(7, 2).floor(&alpha), 3);
    }

    #[test]
    fn arithmetic_normalizes() {
        let x = Quad::new(2, 4, 6);
        assert_eq!(x, Quad { a: 1, b: 2, c: 3 });
        let y = Quad::new(-1, 0, -2);
        assert_eq!(y, Quad { a: 1, b: 0, c: 2 });
        assert_eq!(x.add(&x), Quad { a: 2, b: 4, c: 3 });
        assert_eq!(x.sub(&x), Quad::zero());
    }

    #[test]
    fn rejects_bad_alphas() {
        assert!(AlphaSpec { p: 0, q: 0, d: 5, r: 1 }.validate().is_err());
        assert!(AlphaSpec { p: 0, q: 1, d: 4, r: 2 }.validate().is_err());
        assert!(AlphaSpec { p: 3, q: 1, d: 5, r: 2 }.validate().is_err()); // > 1
    }

    /// High-precision interval oracle: every sign decision agrees with a
    /// 200-bit evaluation.
    #[test]
    fn signs_agree_with_interval_oracle() {
        use num_bigint::BigInt;
        use num_integer::Roots;
        let alpha = AlphaSpec::golden();
        let bits = 200u32;
        let scale = BigInt::from(1) << bits;
        // floor(sqrt(5) * 2^bits) brackets sqrt(5).
        let sq_lo = (BigInt::from(5) * (&scale) * (&scale)).sqrt();
        let sq_hi = &sq_lo + 1;
        let alpha_lo = (BigInt::from(alpha.p as i64) * (&scale) + &sq_lo * alpha.q)
            / BigInt::from(alpha.r as i64);
        let alpha_hi = (BigInt::from(alpha.p as i64) * (&scale) + &sq_hi * alpha.q)
            / BigInt::from(alpha.r as i64)
            + 1;
        let mut state = 0x853c49e6748fea9bu64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 20) as i64 % 1_000_000 - 500_000
        };
        for _ in 0..500 {
            let (u, v) = (next() as i128, next() as i128);
            let lo = BigInt::from(u) * (&scale) + BigInt::from(v) * if v >= 0 { &alpha_lo } else { &alpha_hi };
            let hi = BigInt::from(u) * (&scale) + BigInt::from(v) * if v >= 0 { &alpha_hi } else { &alpha_lo };
            let expected = if lo > BigInt::from(0) {
                1
            } else if hi < BigInt::from(0) {
                -1
            } else if u == 0 && v == 0 {
                0
            } else {
                continue; // interval straddles zero; widen precision if hit
            };
            assert_eq!(alpha.sign_linear(u, v), expected, "u={u} v={v}");
        }
    }
}
