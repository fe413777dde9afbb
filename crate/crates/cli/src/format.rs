//! Deterministic number printing.

/// `%g`-style rendering with `digits` significant digits: fixed notation
/// for decimal exponents in [−4, digits), scientific otherwise, trailing
/// zeros trimmed. Negative zero prints as `0`.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let d = digits.clamp(1, 17);
    let sci = format!("{:.*e}", d - 1, x);
    let (mant, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= d as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mant), exp.abs())
    } else {
        let decimals = (d as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Rounds to the precision implied by a printed literal: its decimal
/// places in fixed notation, its mantissa digits in scientific notation.
pub fn round_like(x: f64, printed: &str) -> f64 {
    let lower = printed.trim().to_ascii_lowercase();
    if let Some((mant, _)) = lower.split_once('e') {
        let sig = mant.chars().filter(char::is_ascii_digit).count().max(1);
        let s = format!("{:.*e}", sig - 1, x);
        return s.parse().unwrap_or(x);
    }
    let decimals = lower.split_once('.').map_or(0, |(_, frac)| frac.len());
    format!("{x:.decimals$}").parse().unwrap_or(x)
}
