use super::DslError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(i64),
    Str(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Semi,
    Eq,
    Caret,
    Slash,
    Minus,
    Plus,
    Star,
    Pipe,
    Cross,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Str(s) => format!("{s:?}"),
            Tok::Eof => "end of input".into(),
            other => format!("`{}`", other.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::Comma => ",",
            Tok::Semi => ";",
            Tok::Eq => "=",
            Tok::Caret => "^",
            Tok::Slash => "/",
            Tok::Minus => "-",
            Tok::Plus => "+",
            Tok::Star => "*",
            Tok::Pipe => "|",
            Tok::Cross => "×",
            _ => "?",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

pub fn lex(src: &str) -> Result<Vec<Spanned>, DslError> {
    let mut out = Vec::new();
    let mut it = src.chars().peekable();
    let (mut line, mut col) = (1usize, 1usize);
    while let Some(&c) = it.peek() {
        let (l0, c0) = (line, col);
        let mut bump = |it: &mut std::iter::Peekable<std::str::Chars>| {
            let ch = it.next();
            if ch == Some('\n') {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            ch
        };
        if c.is_whitespace() {
            bump(&mut it);
            continue;
        }
        if c == '#' {
            while let Some(&d) = it.peek() {
                if d == '\n' {
                    break;
                }
                bump(&mut it);
            }
            continue;
        }
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = it.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    s.push(d);
                    bump(&mut it);
                } else {
                    break;
                }
            }
            Tok::Ident(s)
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = it.peek() {
                if d.is_ascii_digit() {
                    s.push(d);
                    bump(&mut it);
                } else {
                    break;
                }
            }
            let n = s.parse::<i64>().map_err(|_| DslError::at(l0, c0, format!("integer literal {s} is too large")))?;
            if n > 1 << 40 {
                return Err(DslError::at(l0, c0, format!("integer literal {s} is too large")));
            }
            Tok::Int(n)
        } else if c == '"' {
            bump(&mut it);
            let mut s = String::new();
            loop {
                match bump(&mut it) {
                    Some('"') => break,
                    Some('\n') | None => return Err(DslError::at(l0, c0, "unterminated string")),
                    Some(d) => s.push(d),
                }
            }
            Tok::Str(s)
        } else {
            bump(&mut it);
            match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                ',' => Tok::Comma,
                ';' => Tok::Semi,
                '=' => Tok::Eq,
                '^' => Tok::Caret,
                '/' => Tok::Slash,
                '-' => Tok::Minus,
                '+' => Tok::Plus,
                '*' => Tok::Star,
                '|' => Tok::Pipe,
                '×' => Tok::Cross,
                other => return Err(DslError::at(l0, c0, format!("unexpected character {other:?}"))),
            }
        };
        out.push(Spanned { tok, line: l0, col: c0 });
    }
    out.push(Spanned { tok: Tok::Eof, line, col });
    Ok(out)
}
