//! Functor names: `ab`, `T^n`, `Lambda^n`, `Gamma^n`, `S^n`, `Pa^n`.

use std::fmt;

use polyext_core::{FunctorDescriptor, FunctorKind};

/// Where a functor name stopped making sense, and what would have fit there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub input: String,
    /// Character offset into `input`.
    pub position: usize,
    pub expected: Vec<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let found = self
            .input
            .chars()
            .nth(self.position)
            .map_or_else(|| "end of input".to_string(), |c| format!("{c:?}"));
        write!(
            f,
            "cannot parse functor {:?}: at position {} expected {}, found {}",
            self.input,
            self.position,
            self.expected.join(" or "),
            found
        )
    }
}

impl std::error::Error for ParseError {}

const KEYWORDS: [(&str, FunctorKind); 5] = [
    ("t", FunctorKind::Tensor),
    ("lambda", FunctorKind::Exterior),
    ("gamma", FunctorKind::Divided),
    ("s", FunctorKind::Symmetric),
    ("pa", FunctorKind::Passi),
];

const KEYWORD_NAMES: [&str; 6] = ["\"ab\"", "\"T\"", "\"Lambda\"", "\"Gamma\"", "\"S\"", "\"Pa\""];

/// Keywords are case-insensitive; the arity is a decimal number, at least 1 for `Pa`.
pub fn parse_functor(text: &str) -> Result<FunctorDescriptor, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let fail = |position: usize, expected: Vec<&'static str>| ParseError {
        input: text.to_string(),
        position,
        expected,
    };
    let word_len = chars.iter().take_while(|c| c.is_ascii_alphabetic()).count();
    let word: String = chars[..word_len].iter().collect::<String>().to_ascii_lowercase();
    if word == "ab" {
        return if chars.len() == 2 {
            Ok(FunctorDescriptor::ab())
        } else {
            Err(fail(2, vec!["end of input"]))
        };
    }
    let kind = KEYWORDS
        .iter()
        .find(|(k, _)| *k == word)
        .map(|(_, kind)| *kind)
        .ok_or_else(|| fail(0, KEYWORD_NAMES.to_vec()))?;
    if chars.get(word_len) != Some(&'^') {
        return Err(fail(word_len, vec!["\"^\""]));
    }
    let start = word_len + 1;
    let digits = chars[start..].iter().take_while(|c| c.is_ascii_digit()).count();
    if digits == 0 {
        return Err(fail(start, vec!["a decimal arity"]));
    }
    if start + digits != chars.len() {
        return Err(fail(start + digits, vec!["a decimal digit", "end of input"]));
    }
    let number: String = chars[start..].iter().collect();
    let arity: usize = number
        .parse()
        .map_err(|_| fail(start, vec!["an arity that fits in a machine word"]))?;
    FunctorDescriptor::new(kind, arity).map_err(|_| fail(start, vec!["an arity of at least 1"]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepted_forms() {
        assert_eq!(parse_functor("ab").unwrap(), FunctorDescriptor::tensor(1));
        assert_eq!(parse_functor("AB").unwrap(), FunctorDescriptor::tensor(1));
        assert_eq!(parse_functor("Lambda^2").unwrap(), FunctorDescriptor::exterior(2));
        assert_eq!(parse_functor("gamma^10").unwrap(), FunctorDescriptor::divided(10));
        assert_eq!(parse_functor("T^0").unwrap(), FunctorDescriptor::tensor(0));
        assert_eq!(parse_functor("pa^3").unwrap(), FunctorDescriptor::passi(3));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_functor("Pa^0").unwrap_err();
        assert_eq!(e.position, 3);
        let e = parse_functor("X^2").unwrap_err();
        assert_eq!(e.position, 0);
        assert_eq!(e.expected.len(), 6);
        assert_eq!(parse_functor("S2").unwrap_err().position, 1);
        assert_eq!(parse_functor("S^").unwrap_err().position, 2);
        assert_eq!(parse_functor("S^2x").unwrap_err().position, 3);
        assert_eq!(parse_functor("ab^2").unwrap_err().position, 2);
        assert_eq!(parse_functor("").unwrap_err().position, 0);
        assert!(parse_functor("T^99999999999999999999999").is_err());
        assert!(parse_functor("Λ^2").is_err());
    }
}
