use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    Eof,
}

#[derive(Debug, Clone)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

const SYMBOLS: &str = "+-*/^(){},;=:";

/// Split `src` into tokens. `#` starts a comment running to the end of the line.
pub fn lex(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut col) = (1usize, 1usize);
    while let Some(&c) = chars.peek() {
        let (l0, c0) = (line, col);
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            chars.next();
            col += 1;
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                chars.next();
                col += 1;
            }
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                col += 1;
            }
            out.push(Token { tok: Tok::Int(s.parse().unwrap()), line: l0, col: c0 });
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
                col += 1;
            }
            out.push(Token { tok: Tok::Ident(s), line: l0, col: c0 });
        } else if SYMBOLS.contains(c) {
            chars.next();
            col += 1;
            out.push(Token { tok: Tok::Sym(c), line: l0, col: c0 });
        } else {
            return Err(Error::Syntax { line, col, msg: format!("unexpected character `{c}`") });
        }
    }
    out.push(Token { tok: Tok::Eof, line, col });
    Ok(out)
}

/// Cursor over a token vector.
pub struct Tokens {
    toks: Vec<Token>,
    pos: usize,
}

impl Tokens {
    pub fn new(toks: Vec<Token>) -> Tokens {
        Tokens { toks, pos: 0 }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    /// Rewind or advance to a position previously returned by [`Tokens::pos`].
    pub fn seek(&mut self, pos: usize) {
        self.pos = pos.min(self.toks.len() - 1);
    }

    pub fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    pub fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    /// Line of the most recently consumed token.
    pub fn prev_line(&self) -> usize {
        self.toks[self.pos.saturating_sub(1)].line
    }

    pub fn advance(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    pub fn at_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    pub fn eat_sym(&mut self, c: char) -> bool {
        if self.at_sym(c) {
            self.advance();
            true
        } else {
            false
        }
    }

    pub fn at_eof(&self) -> bool {
        self.peek().tok == Tok::Eof
    }

    pub fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        let t = self.peek();
        Err(Error::Syntax { line: t.line, col: t.col, msg: msg.into() })
    }

    pub fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            self.error(format!("expected `{c}`, found {}", describe(&self.peek().tok)))
        }
    }

    pub fn expect_ident(&mut self) -> Result<(String, usize, usize)> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Ident(s) => {
                self.advance();
                Ok((s, t.line, t.col))
            }
            other => self.error(format!("expected a name, found {}", describe(&other))),
        }
    }

    pub fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        match &self.peek().tok {
            Tok::Ident(s) if s == kw => {
                self.advance();
                Ok(())
            }
            other => self.error(format!("expected `{kw}`, found {}", describe(other))),
        }
    }

    pub fn expect_int(&mut self) -> Result<BigInt> {
        match self.peek().tok.clone() {
            Tok::Int(n) => {
                self.advance();
                Ok(n)
            }
            other => self.error(format!("expected an integer, found {}", describe(&other))),
        }
    }
}

pub fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(n) => format!("`{n}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::Eof => "end of input".into(),
    }
}
