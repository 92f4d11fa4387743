//! Sequence files: one decimal integer per line, `#` comments and blank lines ignored.

use std::fmt;
use std::io::Read;
use std::path::Path;

use cobweb::FSequence;
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

fn at(line: usize, message: &str) -> InputError {
    InputError {
        line: Some(line),
        message: message.to_owned(),
    }
}

/// Parses sequence-file text. Line numbers in errors are physical (1-based).
pub fn parse_sequence(text: &str) -> Result<FSequence, InputError> {
    let mut values = Vec::new();
    for (i, raw) in text.split('\n').enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw).trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let digits = line.strip_prefix('-').unwrap_or(line);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(at(i + 1, "not an integer"));
        }
        let value: BigInt = line.parse().map_err(|_| at(i + 1, "not an integer"))?;
        if value <= BigInt::from(0) {
            return Err(at(i + 1, "term must be a positive integer"));
        }
        values.push(value);
    }
    Ok(FSequence::new(values).expect("terms checked positive"))
}

/// Reads a sequence file, or stdin for `-`.
pub fn read_sequence(path: &Path) -> Result<FSequence, InputError> {
    let mut text = String::new();
    let read = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| InputError {
        line: None,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_sequence(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lines_comments_and_crlf() {
        let s = parse_sequence("# header\n1\r\n\n2\n  3 \n# trailing\n4").unwrap();
        assert_eq!(s, FSequence::new([1, 2, 3, 4]).unwrap());
        assert!(parse_sequence("").unwrap().is_empty());
        assert!(parse_sequence("# only\n\n").unwrap().is_empty());
        let big = "123456789012345678901234567890";
        assert_eq!(parse_sequence(big).unwrap().terms()[0].to_string(), big);
    }

    #[test]
    fn reports_line_numbers() {
        assert_eq!(
            parse_sequence("abc").unwrap_err().to_string(),
            "line 1: not an integer"
        );
        assert_eq!(parse_sequence("1\n\n2.5").unwrap_err().line, Some(3));
        assert_eq!(parse_sequence("1\n+2").unwrap_err().line, Some(2));
        assert_eq!(parse_sequence("1,2").unwrap_err().line, Some(1));
        assert_eq!(
            parse_sequence("1\n0").unwrap_err().to_string(),
            "line 2: term must be a positive integer"
        );
        assert_eq!(parse_sequence("-3").unwrap_err().line, Some(1));
        assert_eq!(parse_sequence("-").unwrap_err().message, "not an integer");
    }
}
