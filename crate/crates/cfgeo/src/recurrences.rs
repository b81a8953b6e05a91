//! Size recurrences for the gadget families, and the closed form of the
//! majorant sequence Ḡ_n.
//!
//! Everything is exact. The closed form
//!
//! ```text
//! Ḡ_n = n!/(13·2^(n+1)) · ((5√13−13)(3+√13)^n − (13+5√13)(3−√13)^n)
//! ```
//!
//! is evaluated in ℚ[√13] (pairs a + b√13 with rational a, b); the √13
//! component cancels identically, so the result is an exact rational.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::geometry::{rational_int, Rational};

fn big(n: usize) -> BigUint {
    BigUint::from(n)
}

/// |G_1| = 1, |G_2| = 4, |G_n| = n + 2n·|G_{n−1}| + n(n−1)·|G_{n−2}|.
pub fn recurrence_gn(n: usize) -> BigUint {
    assert!(n >= 1, "defined for n >= 1");
    match n {
        1 => big(1),
        2 => big(4),
        _ => big(n) + big(2 * n) * recurrence_gn(n - 1) + big(n * (n - 1)) * recurrence_gn(n - 2),
    }
}

/// The size recurrence |D_1| = 1, |D_k| = 2^(k−1) + (2^(k−1)(2^(k−1)+1)/2)·|D_{k−1}|,
/// which counts one gadget copy per chain interval.
pub fn recurrence_dk_one_copy(k: usize) -> BigUint {
    assert!(k >= 1, "defined for k >= 1");
    if k == 1 {
        return big(1);
    }
    let m = BigUint::from(2u32).pow((k - 1) as u32);
    let intervals = &m * (&m + big(1)) / big(2);
    m + intervals * recurrence_dk_one_copy(k - 1)
}

/// Size of the generated D_k, which places *two* disjoint copies per chain
/// interval: |D_1| = 1, |D_k| = 2^(k−1) + 2^(k−1)(2^(k−1)+1)·|D_{k−1}|.
/// Differs from [`recurrence_dk_one_copy`] by the per-interval copy count.
pub fn gen_dk_size(k: usize) -> BigUint {
    assert!(k >= 1, "defined for k >= 1");
    if k == 1 {
        return big(1);
    }
    let m = BigUint::from(2u32).pow((k - 1) as u32);
    let two_copies = &m * (&m + big(1));
    m + two_copies * gen_dk_size(k - 1)
}

/// Ḡ_1 = 1, Ḡ_2 = 4, Ḡ_n = 3n·Ḡ_{n−1} + n(n−1)·Ḡ_{n−2}; Ḡ_n ≥ |G_n|.
pub fn gbar_recurrence(n: usize) -> BigUint {
    assert!(n >= 1, "defined for n >= 1");
    match n {
        1 => big(1),
        2 => big(4),
        _ => big(3 * n) * gbar_recurrence(n - 1) + big(n * (n - 1)) * gbar_recurrence(n - 2),
    }
}

/// Element of ℚ[√13]: `a + b·√13`.
#[derive(Clone, Debug, PartialEq)]
struct Q13 {
    a: Rational,
    b: Rational,
}

impl Q13 {
    fn rational(a: Rational) -> Q13 {
        Q13 {
            a,
            b: Rational::zero(),
        }
    }

    fn sqrt13_times(b: Rational) -> Q13 {
        Q13 {
            a: Rational::zero(),
            b,
        }
    }

    fn add(&self, other: &Q13) -> Q13 {
        Q13 {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
        }
    }

    fn sub(&self, other: &Q13) -> Q13 {
        Q13 {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
        }
    }

    fn mul(&self, other: &Q13) -> Q13 {
        Q13 {
            a: &self.a * &other.a + rational_int(13) * &self.b * &other.b,
            b: &self.a * &other.b + &self.b * &other.a,
        }
    }

    fn pow(&self, mut n: usize) -> Q13 {
        let mut result = Q13::rational(Rational::one());
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        result
    }
}

/// Exact value of the closed form for Ḡ_n. The irrational components cancel,
/// leaving a rational number (an integer for every n ≥ 1).
pub fn gbar_closed_form(n: usize) -> Rational {
    assert!(n >= 1, "defined for n >= 1");
    let sqrt13 = Q13::sqrt13_times(Rational::one());
    let three = Q13::rational(rational_int(3));
    let thirteen = Q13::rational(rational_int(13));
    let five_sqrt13 = Q13::sqrt13_times(rational_int(5));

    let first = five_sqrt13.sub(&thirteen).mul(&three.add(&sqrt13).pow(n));
    let second = thirteen.add(&five_sqrt13).mul(&three.sub(&sqrt13).pow(n));
    let bracket = first.sub(&second);
    assert!(
        bracket.b.is_zero(),
        "the √13 components of the closed form must cancel"
    );

    let mut factorial = Rational::one();
    for i in 2..=n {
        factorial *= rational_int(i as i64);
    }
    let denominator =
        rational_int(13) * Rational::from_integer(num_bigint::BigInt::from(2).pow((n + 1) as u32));
    factorial * bracket.a / denominator
}

/// Float view of the closed form, for display.
pub fn gbar_closed_form_f64(n: usize) -> f64 {
    gbar_closed_form(n)
        .to_f64()
        .expect("fits in f64 at desk scale")
}

/// usize view of an exact recurrence value; panics if it does not fit.
pub fn to_usize(value: &BigUint) -> usize {
    value.to_usize().expect("value fits in usize")
}
