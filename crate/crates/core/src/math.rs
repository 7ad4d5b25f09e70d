//! Exact integer helpers shared by the count formulas.

/// Binomial coefficient `C(x, r)`, zero whenever `x < r` (including negative `x`).
pub fn choose(x: i128, r: u32) -> i128 {
    if x < r as i128 {
        return 0;
    }
    let mut acc: i128 = 1;
    for t in 0..r as i128 {
        // acc * (x - t) is divisible by t + 1 at every step.
        acc = acc * (x - t) / (t + 1);
    }
    acc
}

/// `num / den`, panicking if the division leaves a remainder. Every division
/// inside a count formula is exact on a simple graph; a remainder means a bug.
#[track_caller]
pub fn exact_div(num: i128, den: i128, what: &str) -> i128 {
    assert!(num % den == 0, "{what}: {num} is not divisible by {den}");
    num / den
}
