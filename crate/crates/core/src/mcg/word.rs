use std::fmt;

use super::McgError;

/// A Dehn twist: `exp = 1` is right-handed, `exp = -1` left-handed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub curve: String,
    pub exp: i8,
}

impl Letter {
    pub fn new(curve: impl Into<String>, exp: i8) -> Self {
        assert!(exp == 1 || exp == -1);
        Letter {
            curve: curve.into(),
            exp,
        }
    }

    pub fn inverse(&self) -> Self {
        Letter {
            curve: self.curve.clone(),
            exp: -self.exp,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 1 {
            f.write_str(&self.curve)
        } else {
            write!(f, "{}^-1", self.curve)
        }
    }
}

/// Product of Dehn twists, written left to right; the rightmost twist acts
/// first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistWord {
    letters: Vec<Letter>,
}

impl TwistWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        TwistWord { letters }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parse(text: &str) -> Result<Self, McgError> {
        let tokens = tokenize(text)?;
        let mut pos = 0;
        let letters = parse_sequence(&tokens, &mut pos, false)?;
        Ok(TwistWord { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        TwistWord {
            letters: self.letters.iter().rev().map(Letter::inverse).collect(),
        }
    }

    pub fn concat(&self, other: &TwistWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        TwistWord { letters }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend(base.letters.iter().cloned());
        }
        TwistWord { letters }
    }

    pub fn curve_names(&self) -> impl Iterator<Item = &str> {
        self.letters.iter().map(|l| l.curve.as_str())
    }
}

impl From<Vec<Letter>> for TwistWord {
    fn from(letters: Vec<Letter>) -> Self {
        TwistWord { letters }
    }
}

/// Renders runs of equal letters as powers, e.g. `alpha3^2 beta`.
impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = &self.letters[i];
            let mut j = i + 1;
            while j < self.letters.len() && self.letters[j] == *l {
                j += 1;
            }
            let power = (j - i) as i64 * l.exp as i64;
            parts.push(if power == 1 {
                l.curve.clone()
            } else {
                format!("{}^{}", l.curve, power)
            });
            i = j;
        }
        f.write_str(&parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Name(String),
    Open,
    Close,
    Power(i64),
}

fn tokenize(text: &str) -> Result<Vec<Token>, McgError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() || c == '*' || c == '.' {
            i += 1;
        } else if c == '(' {
            out.push(Token::Open);
            i += 1;
        } else if c == ')' {
            out.push(Token::Close);
            i += 1;
        } else if c == '^' {
            i += 1;
            let start = i;
            if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                i += 1;
            }
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let k = s
                .parse::<i64>()
                .map_err(|_| McgError::Word(format!("bad exponent `^{s}`")))?;
            if k.unsigned_abs() > 10_000 {
                return Err(McgError::Word(format!("exponent {k} too large")));
            }
            out.push(Token::Power(k));
        } else if c.is_alphanumeric() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Name(chars[start..i].iter().collect()));
        } else {
            return Err(McgError::Word(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

fn parse_sequence(
    tokens: &[Token],
    pos: &mut usize,
    nested: bool,
) -> Result<Vec<Letter>, McgError> {
    let mut letters = Vec::new();
    while *pos < tokens.len() {
        let atom: Vec<Letter> = match &tokens[*pos] {
            Token::Name(n) => {
                *pos += 1;
                if n == "1" {
                    Vec::new()
                } else {
                    vec![Letter::new(n.clone(), 1)]
                }
            }
            Token::Open => {
                *pos += 1;
                let inner = parse_sequence(tokens, pos, true)?;
                if tokens.get(*pos) != Some(&Token::Close) {
                    return Err(McgError::Word("unbalanced `(`".into()));
                }
                *pos += 1;
                inner
            }
            Token::Close => {
                if nested {
                    return Ok(letters);
                }
                return Err(McgError::Word("unbalanced `)`".into()));
            }
            Token::Power(_) => return Err(McgError::Word("exponent without a base".into())),
        };
        let k = match tokens.get(*pos) {
            Some(Token::Power(k)) => {
                *pos += 1;
                *k
            }
            _ => 1,
        };
        letters.extend(TwistWord::new(atom).pow(k).letters);
    }
    if nested {
        return Err(McgError::Word("unbalanced `(`".into()));
    }
    Ok(letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(w: &TwistWord) -> Vec<String> {
        w.letters().iter().map(|l| l.to_string()).collect()
    }

    #[test]
    fn parsing() {
        let w = TwistWord::parse("alpha2 gamma^2 beta^-1").unwrap();
        assert_eq!(names(&w), ["alpha2", "gamma", "gamma", "beta^-1"]);
        let w = TwistWord::parse("(a b)^2 c").unwrap();
        assert_eq!(names(&w), ["a", "b", "a", "b", "c"]);
        let w = TwistWord::parse("(a b^2)^-1").unwrap();
        assert_eq!(names(&w), ["b^-1", "b^-1", "a^-1"]);
        let w = TwistWord::parse("((a)^2 b)^2").unwrap();
        assert_eq!(w.len(), 6);
        assert!(TwistWord::parse("beta^0").unwrap().is_empty());
        assert!(TwistWord::parse("1").unwrap().is_empty());
        assert!(TwistWord::parse("(a b").is_err());
        assert!(TwistWord::parse("a b)").is_err());
        assert!(TwistWord::parse("^2").is_err());
        assert!(TwistWord::parse("a^x").is_err());
        assert!(TwistWord::parse("a $").is_err());
    }

    #[test]
    fn display_groups_powers() {
        let w = TwistWord::parse("alpha3 alpha3 beta delta1^-1 delta1^-1").unwrap();
        assert_eq!(w.to_string(), "alpha3^2 beta delta1^-2");
        assert_eq!(TwistWord::parse(&w.to_string()).unwrap(), w);
        assert_eq!(TwistWord::empty().to_string(), "1");
    }

    #[test]
    fn inverse_and_pow() {
        let w = TwistWord::parse("a b^-1").unwrap();
        assert_eq!(w.inverse(), TwistWord::parse("b a^-1").unwrap());
        assert_eq!(w.pow(-2), TwistWord::parse("b a^-1 b a^-1").unwrap());
        assert_eq!(w.concat(&w.inverse()).len(), 4);
    }
}
