//! Parsing for the textual weight patterns used by the verdict data:
//! `two_lambda` keys (integers mixed with per-coordinate letters) and
//! spin-LKT claims (`LKT`, `2lambda`, or a bracketed affine template).

use spinsieve_core::rat;
use spinsieve_core::root::Weight;
use spinsieve_core::sieve::AffineWeight;
use spinsieve_core::Rat;

/// Position `i` is addressed by letter `a + i` in patterns and templates.
pub const LETTERS: [char; 8] = ['a', 'b', 'c', 'd', 'e', 'f', 'g', 'h'];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum KeyEntry {
    /// `2 * lambda_i` on a fixed coordinate.
    Fixed(i64),
    /// Coordinate varying along a string.
    Free,
}

/// A `two_lambda` key: integers on fixed coordinates, letters on free ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoLambdaKey(pub Vec<KeyEntry>);

impl TwoLambdaKey {
    pub fn parse(text: &str) -> Result<TwoLambdaKey, String> {
        let mut entries = Vec::new();
        for (i, tok) in text.split(',').enumerate() {
            let tok = tok.trim();
            if tok.len() == 1 && LETTERS.get(i) == Some(&tok.chars().next().unwrap()) {
                entries.push(KeyEntry::Free);
            } else if let Ok(n) = tok.parse::<i64>() {
                entries.push(KeyEntry::Fixed(n));
            } else {
                return Err(format!("bad two_lambda entry {tok:?} at position {i}"));
            }
        }
        if entries.is_empty() {
            return Err("empty two_lambda key".into());
        }
        Ok(TwoLambdaKey(entries))
    }

    pub fn is_concrete(&self) -> bool {
        self.0.iter().all(|e| matches!(e, KeyEntry::Fixed(_)))
    }

    /// Matches a concrete `lambda` (scattered candidate) exactly.
    pub fn matches_lambda(&self, lambda: &Weight) -> bool {
        self.is_concrete()
            && self.0.len() == lambda.rank()
            && self
                .0
                .iter()
                .zip(&lambda.0)
                .all(|(e, x)| matches!(e, KeyEntry::Fixed(n) if rat(*n, 2) == *x))
    }

    /// Matches a string's base pattern: fixed entries agree, free entries
    /// line up with the string's free coordinates.
    pub fn matches_base(&self, base: &[Option<Rat>]) -> bool {
        self.0.len() == base.len()
            && self.0.iter().zip(base).all(|(e, b)| match (e, b) {
                (KeyEntry::Free, None) => true,
                (KeyEntry::Fixed(n), Some(x)) => rat(*n, 2) == *x,
                _ => false,
            })
    }
}

impl core::fmt::Display for TwoLambdaKey {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match e {
                KeyEntry::Fixed(n) => write!(f, "{n}")?,
                KeyEntry::Free => write!(f, "{}", LETTERS[i])?,
            }
        }
        Ok(())
    }
}

/// A spin-LKT claim attached to a verdict record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpinClaim {
    /// The lowest K-type `{lambda + s lambda}` itself.
    Lkt,
    /// The K-type with highest weight `2 lambda`.
    TwoLambda,
    /// An explicit weight or affine template, e.g. `[2a+1,2,0,2d+1]`:
    /// coordinate `i` is `const + coeff * lambda_i`.
    Template(AffineWeight),
}

impl SpinClaim {
    pub fn parse(text: &str) -> Result<SpinClaim, String> {
        match text {
            "LKT" => return Ok(SpinClaim::Lkt),
            "2lambda" => return Ok(SpinClaim::TwoLambda),
            _ => {}
        }
        let inner = text
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| format!("bad spin_lkt {text:?}"))?;
        let mut constant = Vec::new();
        let mut coeffs = Vec::new();
        for (i, tok) in inner.split(',').enumerate() {
            let (coeff, cst) = parse_affine_entry(tok.trim(), i)?;
            coeffs.push(Rat::from_integer(coeff));
            constant.push(Rat::from_integer(cst));
        }
        Ok(SpinClaim::Template(AffineWeight {
            constant: Weight(constant),
            coeffs,
        }))
    }
}

impl core::fmt::Display for SpinClaim {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SpinClaim::Lkt => write!(f, "LKT"),
            SpinClaim::TwoLambda => write!(f, "2lambda"),
            SpinClaim::Template(t) => {
                write!(f, "[")?;
                for i in 0..t.constant.rank() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    let c = t.coeffs[i];
                    let k = t.constant.0[i];
                    if !c.is_integer() || !k.is_integer() {
                        return Err(core::fmt::Error);
                    }
                    if c != Rat::from_integer(0) {
                        write!(f, "{}{}", c.numer(), LETTERS[i])?;
                        if k != Rat::from_integer(0) {
                            write!(f, "+{}", k.numer())?;
                        }
                    } else {
                        write!(f, "{}", k.numer())?;
                    }
                }
                write!(f, "]")
            }
        }
    }
}

/// Parses one template entry such as `2c+1`, `2a`, `7`, or `0` into
/// `(coefficient, constant)`. The letter, if present, must be the one
/// belonging to position `i`.
fn parse_affine_entry(tok: &str, i: usize) -> Result<(i64, i64), String> {
    let letter = *LETTERS
        .get(i)
        .ok_or_else(|| format!("position {i} out of range"))?;
    match tok.find(letter) {
        None => tok
            .parse::<i64>()
            .map(|n| (0, n))
            .map_err(|_| format!("bad template entry {tok:?}")),
        Some(pos) => {
            let coeff_txt = &tok[..pos];
            let coeff = if coeff_txt.is_empty() {
                1
            } else {
                coeff_txt
                    .parse::<i64>()
                    .map_err(|_| format!("bad coefficient in {tok:?}"))?
            };
            let rest = &tok[pos + 1..];
            let cst = if rest.is_empty() {
                0
            } else {
                rest.strip_prefix('+')
                    .and_then(|r| r.parse::<i64>().ok())
                    .ok_or_else(|| format!("bad constant in {tok:?}"))?
            };
            Ok((coeff, cst))
        }
    }
}
