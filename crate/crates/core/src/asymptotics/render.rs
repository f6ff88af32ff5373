use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// `x` rounded half-to-even at `digits` decimals.
pub fn render_decimal(x: &BigRational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = x.abs() * BigRational::from_integer(scale.clone());
    let floor = scaled.floor().to_integer();
    let rem = &scaled - BigRational::from_integer(floor.clone());
    let half = BigRational::new(1.into(), 2.into());
    let rounded = if rem > half || (rem == half && floor.is_odd()) {
        floor + 1
    } else {
        floor
    };
    let (int, frac) = rounded.div_rem(&scale);
    let sign = if x.is_negative() && !(int.is_zero() && frac.is_zero()) { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac:0>digits$}")
    }
}

/// The common rendering of every point of `[lo, hi]`, if they all agree.
pub fn render_enclosure(lo: &BigRational, hi: &BigRational, digits: usize) -> Option<String> {
    let a = render_decimal(lo, digits);
    (a == render_decimal(hi, digits)).then_some(a)
}
