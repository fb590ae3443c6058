use super::ExprError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Number,
    Identifier,
    Operator,
    Paren,
    Comma,
}

/// A lexeme together with its kind and the 0-based character offset where it starts.
#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    pub position: usize,
}

impl Token {
    pub(crate) fn is(&self, kind: TokenKind, lexeme: &str) -> bool {
        self.kind == kind && self.lexeme == lexeme
    }

    pub(crate) fn end(&self) -> usize {
        self.position + self.lexeme.chars().count()
    }
}

/// Splits `source` into tokens. Whitespace is skipped; any character outside the
/// grammar is a [`ExprError::Lex`].
pub fn tokenize(source: &str) -> Result<Vec<Token>, ExprError> {
    let chars: Vec<char> = source.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;

    while i < chars.len() {
        let c = chars[i];
        let start = i;

        if c.is_whitespace() {
            i += 1;
            continue;
        }

        let kind = if c.is_ascii_digit() || (c == '.' && next_is_digit(&chars, i + 1)) {
            i = scan_number(&chars, i);
            TokenKind::Number
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            TokenKind::Identifier
        } else {
            i += 1;
            match c {
                '+' | '-' | '*' | '/' | '^' => TokenKind::Operator,
                '(' | ')' => TokenKind::Paren,
                ',' => TokenKind::Comma,
                _ => {
                    return Err(ExprError::Lex {
                        position: start,
                        character: c,
                    })
                }
            }
        };

        let lexeme: String = chars[start..i].iter().collect();
        if kind == TokenKind::Number {
            match lexeme.parse::<f64>() {
                Ok(v) if v.is_finite() => {}
                _ => {
                    return Err(ExprError::BadNumber {
                        position: start,
                        lexeme,
                    })
                }
            }
        }
        tokens.push(Token {
            kind,
            lexeme,
            position: start,
        });
    }

    Ok(tokens)
}

fn next_is_digit(chars: &[char], i: usize) -> bool {
    chars.get(i).is_some_and(|c| c.is_ascii_digit())
}

fn scan_number(chars: &[char], mut i: usize) -> usize {
    while next_is_digit(chars, i) {
        i += 1;
    }
    if chars.get(i) == Some(&'.') {
        i += 1;
        while next_is_digit(chars, i) {
            i += 1;
        }
    }
    // Only take an exponent when digits follow, so "2e" stays a number and an identifier.
    if matches!(chars.get(i), Some('e') | Some('E')) {
        let mut j = i + 1;
        if matches!(chars.get(j), Some('+') | Some('-')) {
            j += 1;
        }
        if next_is_digit(chars, j) {
            i = j;
            while next_is_digit(chars, i) {
                i += 1;
            }
        }
    }
    i
}
