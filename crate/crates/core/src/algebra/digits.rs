//! Canonical digit strings for beta-expansions of 1.

use num_bigint::BigUint;
use num_traits::Zero;
use std::fmt;
use std::str::FromStr;

/// An eventually periodic digit string `a_1 .. a_k (a_{k+1} .. a_{k+l})^w`.
///
/// An empty period means a finite (simple) expansion. Construction
/// canonicalizes: an all-zero period becomes empty, the period is reduced to
/// its primitive length, the preperiod never ends with a cyclic copy of the
/// period, and simple expansions carry no trailing zeros. Two digit strings
/// compare equal iff they denote the same infinite digit sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitString {
    preperiod: Vec<BigUint>,
    period: Vec<BigUint>,
}

impl DigitString {
    pub fn new(preperiod: Vec<BigUint>, period: Vec<BigUint>) -> Self {
        let mut d = DigitString { preperiod, period };
        d.canonicalize();
        d
    }

    /// A finite (simple) expansion.
    pub fn simple(digits: Vec<BigUint>) -> Self {
        Self::new(digits, Vec::new())
    }

    pub fn from_u64(preperiod: &[u64], period: &[u64]) -> Self {
        Self::new(
            preperiod.iter().map(|&d| BigUint::from(d)).collect(),
            period.iter().map(|&d| BigUint::from(d)).collect(),
        )
    }

    pub fn preperiod(&self) -> &[BigUint] {
        &self.preperiod
    }

    pub fn period(&self) -> &[BigUint] {
        &self.period
    }

    /// True for finite expansions (empty period).
    pub fn is_simple(&self) -> bool {
        self.period.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.preperiod.is_empty() && self.period.is_empty()
    }

    /// Digit at position `i` (0-based) of the infinite sequence; `None`
    /// past the end of a simple expansion means the digit is 0.
    pub fn digit(&self, i: usize) -> BigUint {
        if i < self.preperiod.len() {
            self.preperiod[i].clone()
        } else if self.period.is_empty() {
            BigUint::zero()
        } else {
            self.period[(i - self.preperiod.len()) % self.period.len()].clone()
        }
    }

    /// Largest digit appearing anywhere.
    pub fn max_digit(&self) -> BigUint {
        self.preperiod
            .iter()
            .chain(self.period.iter())
            .cloned()
            .max()
            .unwrap_or_else(BigUint::zero)
    }

    fn canonicalize(&mut self) {
        if self.period.iter().all(|d| d.is_zero()) {
            self.period.clear();
        }
        if !self.period.is_empty() {
            self.period = primitive_period(&self.period);
            // absorb: a_1..a_{k-1} (rot) covers the same sequence whenever
            // the preperiod ends with the period's last digit
            while let (Some(last_pre), Some(last_per)) =
                (self.preperiod.last(), self.period.last())
            {
                if last_pre != last_per {
                    break;
                }
                self.preperiod.pop();
                self.period.rotate_right(1);
            }
        } else {
            while self.preperiod.last().is_some_and(|d| d.is_zero()) {
                self.preperiod.pop();
            }
        }
    }
}

fn primitive_period(period: &[BigUint]) -> Vec<BigUint> {
    let n = period.len();
    for len in 1..=n / 2 {
        if n % len != 0 {
            continue;
        }
        if period.chunks(len).all(|chunk| chunk == &period[..len]) {
            return period[..len].to_vec();
        }
    }
    period.to_vec()
}

impl fmt::Display for DigitString {
    /// Space-separated digits, the period parenthesized with a trailing
    /// `^w`: `1 0 1 (0 0 1 0 1 0 0 1 0 1 0 0)^w`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for d in &self.preperiod {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{d}")?;
            first = false;
        }
        if !self.period.is_empty() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "(")?;
            for (i, d) in self.period.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{d}")?;
            }
            write!(f, ")^w")?;
        }
        Ok(())
    }
}

/// Error from parsing digit-string text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDigitsError(pub String);

impl fmt::Display for ParseDigitsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse digit string: {}", self.0)
    }
}

impl std::error::Error for ParseDigitsError {}

impl FromStr for DigitString {
    type Err = ParseDigitsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (pre_part, per_part) = match s.find('(') {
            Some(open) => {
                let close = s
                    .rfind(')')
                    .ok_or_else(|| ParseDigitsError(format!("unbalanced parens in {s:?}")))?;
                let tail = s[close + 1..].trim();
                if !(tail == "^w" || tail == "^ω" || tail.is_empty()) {
                    return Err(ParseDigitsError(format!("unexpected trailing {tail:?}")));
                }
                (&s[..open], &s[open + 1..close])
            }
            None => (s, ""),
        };
        let parse_digits = |t: &str| -> Result<Vec<BigUint>, ParseDigitsError> {
            t.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|w| !w.is_empty())
                .map(|w| {
                    BigUint::from_str(w)
                        .map_err(|_| ParseDigitsError(format!("bad digit {w:?}")))
                })
                .collect()
        };
        Ok(DigitString::new(parse_digits(pre_part)?, parse_digits(per_part)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        // all-zero period collapses to a simple expansion
        let d = DigitString::from_u64(&[1, 0, 0, 0, 0, 1], &[0]);
        assert!(d.is_simple());
        assert_eq!(d.to_string(), "1 0 0 0 0 1");

        // period reduced to primitive length
        let d = DigitString::from_u64(&[5], &[1, 0, 1, 0]);
        assert_eq!(d.period().len(), 2);
        assert_eq!(d.to_string(), "5 (1 0)^w");

        // preperiod never ends with a cyclic copy of the period
        let d = DigitString::from_u64(&[1, 0, 1], &[0, 1]);
        assert_eq!(d, DigitString::from_u64(&[1], &[0, 1]));

        // trailing zeros trimmed from simple expansions
        let d = DigitString::from_u64(&[2, 1, 0, 0], &[]);
        assert_eq!(d.to_string(), "2 1");
    }

    #[test]
    fn absorption_into_pure_period() {
        // 2 (0 2)^w is the sequence 2 0 2 0 ... = (2 0)^w
        let d = DigitString::from_u64(&[2], &[0, 2]);
        assert_eq!(d.preperiod().len(), 0);
        assert_eq!(d.to_string(), "(2 0)^w");
    }

    #[test]
    fn display_parse_round_trip() {
        for s in ["1 1", "5 (1 0)^w", "1 0 1 (0 0 1 0 1 0 0 1 0 1 0 0)^w", "(2 0)^w", "3"] {
            let d: DigitString = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
            assert_eq!(s.parse::<DigitString>().unwrap(), d);
        }
    }

    #[test]
    fn digit_indexing() {
        let d = DigitString::from_u64(&[1, 0, 1], &[0, 0, 1]);
        let seq: Vec<u64> = (0..9)
            .map(|i| u64::try_from(d.digit(i)).unwrap())
            .collect();
        assert_eq!(seq, vec![1, 0, 1, 0, 0, 1, 0, 0, 1]);
        let s = DigitString::from_u64(&[2, 1], &[]);
        assert!(s.digit(5).is_zero());
    }
}
