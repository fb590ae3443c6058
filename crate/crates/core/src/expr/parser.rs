use super::lexer::{Token, TokenKind};
use super::{BinaryOp, Expr, ExprError, Func};

/// Builds an expression tree from a token stream produced by [`super::tokenize`].
/// The whole stream must be consumed.
pub fn parse(tokens: &[Token]) -> Result<Expr, ExprError> {
    let mut p = Parser { tokens, pos: 0 };
    let e = p.expr()?;
    if p.pos < tokens.len() {
        return Err(p.error("end of input"));
    }
    Ok(e)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn offset(&self) -> usize {
        match self.peek() {
            Some(tok) => tok.position,
            None => self.tokens.last().map_or(0, Token::end),
        }
    }

    fn error(&self, expected: &str) -> ExprError {
        ExprError::Parse {
            position: self.offset(),
            expected: expected.to_string(),
        }
    }

    fn eat(&mut self, kind: TokenKind, lexeme: &str) -> bool {
        if self.peek().is_some_and(|t| t.is(kind, lexeme)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: TokenKind, lexeme: &str) -> Result<(), ExprError> {
        if self.eat(kind, lexeme) {
            Ok(())
        } else {
            Err(self.error(&format!("'{lexeme}'")))
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            let op = if self.eat(TokenKind::Operator, "+") {
                BinaryOp::Add
            } else if self.eat(TokenKind::Operator, "-") {
                BinaryOp::Sub
            } else {
                return Ok(lhs);
            };
            lhs = Expr::binary(op, lhs, self.term()?);
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            let op = if self.eat(TokenKind::Operator, "*") {
                BinaryOp::Mul
            } else if self.eat(TokenKind::Operator, "/") {
                BinaryOp::Div
            } else {
                return Ok(lhs);
            };
            lhs = Expr::binary(op, lhs, self.unary()?);
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.eat(TokenKind::Operator, "-") {
            Ok(Expr::neg(self.unary()?))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        let caret = self.offset();
        if !self.eat(TokenKind::Operator, "^") {
            return Ok(base);
        }
        let exponent = self.unary()?;
        if exponent.depends_on_t() {
            return Err(ExprError::Parse {
                position: caret,
                expected: "an exponent that does not depend on t".to_string(),
            });
        }
        Ok(Expr::binary(BinaryOp::Pow, base, exponent))
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let Some(tok) = self.peek().cloned() else {
            return Err(self.error("a number, 't', a function or '('"));
        };
        match tok.kind {
            TokenKind::Number => {
                self.pos += 1;
                // The lexer only emits finite literals.
                let v: f64 = tok.lexeme.parse().map_err(|_| ExprError::BadNumber {
                    position: tok.position,
                    lexeme: tok.lexeme.clone(),
                })?;
                Ok(Expr::Const(v))
            }
            TokenKind::Identifier if tok.lexeme == "t" => {
                self.pos += 1;
                Ok(Expr::Var)
            }
            TokenKind::Identifier => {
                let Some(func) = Func::from_name(&tok.lexeme) else {
                    return Err(self.error("'t' or a builtin function name"));
                };
                self.pos += 1;
                self.expect(TokenKind::Paren, "(")?;
                let arg = self.expr()?;
                self.expect(TokenKind::Paren, ")")?;
                Ok(Expr::call(func, arg))
            }
            TokenKind::Paren if tok.lexeme == "(" => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(TokenKind::Paren, ")")?;
                Ok(inner)
            }
            _ => Err(self.error("a number, 't', a function or '('")),
        }
    }
}
