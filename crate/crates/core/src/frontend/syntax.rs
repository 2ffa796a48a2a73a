//! Model files: tokens, declarations, parsing and printing.
//!
//! Keywords are contextual, so any name may be used for a declaration.
//! Names that are not plain identifiers are written as double-quoted
//! strings; `#` starts a comment when it begins a token.

use std::fmt;

/// A parse failure at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub col: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)?;
        if !self.expected.is_empty() {
            write!(f, "; expected {}", self.expected.join(" or "))?;
        }
        Ok(())
    }
}

impl std::error::Error for Diagnostic {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Polarity {
    O,
    P,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Kind {
    Q,
    A,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveDecl {
    pub id: String,
    pub polarity: Polarity,
    pub kind: Kind,
    pub enablers: Vec<String>,
}

/// The pointer of an occurrence. `Default` points at the most recent
/// enabling occurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pointer {
    Default,
    At(usize),
    Initial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OccDecl {
    pub id: String,
    pub pointer: Pointer,
}

pub type PlayDecl = Vec<OccDecl>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Homs {
    Canonical,
    Discrete,
    Explicit(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decl {
    Game {
        name: String,
        moves: Vec<MoveDecl>,
        plays: Vec<PlayDecl>,
    },
    Strategy {
        name: String,
        game: String,
        plays: Vec<PlayDecl>,
    },
    Iso {
        name: String,
        source: String,
        target: String,
        map: Vec<(String, String)>,
    },
    Gamoid {
        name: String,
        game: String,
        objects: Vec<String>,
        homs: Homs,
    },
    Family {
        name: String,
        base: String,
        fibers: Vec<(String, String)>,
        transports: Vec<(String, String)>,
    },
    Morphism {
        name: String,
        source: String,
        target: String,
        objects: Vec<(String, String)>,
        arrows: Vec<(String, String)>,
    },
    Registry {
        name: String,
        level: usize,
        codes: Vec<String>,
    },
    Suite {
        name: String,
        run: Vec<String>,
    },
}

impl Decl {
    pub fn name(&self) -> &str {
        match self {
            Decl::Game { name, .. }
            | Decl::Strategy { name, .. }
            | Decl::Iso { name, .. }
            | Decl::Gamoid { name, .. }
            | Decl::Family { name, .. }
            | Decl::Morphism { name, .. }
            | Decl::Registry { name, .. }
            | Decl::Suite { name, .. } => name,
        }
    }

    pub fn keyword(&self) -> &'static str {
        match self {
            Decl::Game { .. } => "game",
            Decl::Strategy { .. } => "strategy",
            Decl::Iso { .. } => "iso",
            Decl::Gamoid { .. } => "gamoid",
            Decl::Family { .. } => "family",
            Decl::Morphism { .. } => "morphism",
            Decl::Registry { .. } => "registry",
            Decl::Suite { .. } => "suite",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModelFile {
    pub decls: Vec<Decl>,
}

pub const DECL_KEYWORDS: [&str; 8] = [
    "game", "strategy", "iso", "gamoid", "family", "morphism", "registry", "suite",
];

// ---------------------------------------------------------------- lexing

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Str(String),
    LBrace,
    RBrace,
    Semi,
    Colon,
    Comma,
    Dot,
    At,
    Arrow,
    LArrow,
    Tilde,
    Equals,
    Pipe,
    Dash,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Str(s) => format!("{s:?}"),
            Tok::Eof => "end of input".into(),
            t => format!("`{}`", t.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::Semi => ";",
            Tok::Colon => ":",
            Tok::Comma => ",",
            Tok::Dot => ".",
            Tok::At => "@",
            Tok::Arrow => "->",
            Tok::LArrow => "<-",
            Tok::Tilde => "~",
            Tok::Equals => "=",
            Tok::Pipe => "|",
            Tok::Dash => "-",
            _ => "",
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn ident_start(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

fn ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

/// Whether `s` can be written without quotes.
pub fn is_plain_name(s: &str) -> bool {
    let mut cs = s.chars().peekable();
    match cs.next() {
        Some(c) if ident_start(c) => {}
        _ => return false,
    }
    while let Some(c) = cs.next() {
        if c == '-' {
            match cs.peek() {
                Some(&n) if ident_continue(n) => {}
                _ => return false,
            }
        } else if !ident_continue(c) {
            return false;
        }
    }
    true
}

fn lex(src: &str) -> Result<Vec<Token>, Diagnostic> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let err = |line, col, message: String| Diagnostic {
        line,
        col,
        message,
        expected: Vec::new(),
    };
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        let step = |n: usize, i: &mut usize, col: &mut usize| {
            *i += n;
            *col += n;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => step(1, &mut i, &mut col),
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '"' => {
                let mut s = String::new();
                i += 1;
                col += 1;
                loop {
                    match chars.get(i) {
                        None => return Err(err(l0, c0, "unterminated string".into())),
                        Some('"') => {
                            i += 1;
                            col += 1;
                            break;
                        }
                        Some('\\') => match chars.get(i + 1) {
                            Some(&e @ ('"' | '\\')) => {
                                s.push(e);
                                i += 2;
                                col += 2;
                            }
                            _ => return Err(err(line, col, "invalid escape in string".into())),
                        },
                        Some('\n') => {
                            s.push('\n');
                            i += 1;
                            line += 1;
                            col = 1;
                        }
                        Some(&ch) => {
                            s.push(ch);
                            i += 1;
                            col += 1;
                        }
                    }
                }
                out.push(Token {
                    tok: Tok::Str(s),
                    line: l0,
                    col: c0,
                });
            }
            c if ident_start(c) => {
                let mut s = String::new();
                while i < chars.len() {
                    let ch = chars[i];
                    let dash = ch == '-' && chars.get(i + 1).is_some_and(|&n| ident_continue(n));
                    if ident_continue(ch) || dash {
                        s.push(ch);
                        i += 1;
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push(Token {
                    tok: Tok::Ident(s),
                    line: l0,
                    col: c0,
                });
            }
            _ => {
                let two: String = chars[i..chars.len().min(i + 2)].iter().collect();
                let (tok, n) = match (two.as_str(), c) {
                    ("->", _) => (Tok::Arrow, 2),
                    ("<-", _) => (Tok::LArrow, 2),
                    (_, '{') => (Tok::LBrace, 1),
                    (_, '}') => (Tok::RBrace, 1),
                    (_, ';') => (Tok::Semi, 1),
                    (_, ':') => (Tok::Colon, 1),
                    (_, ',') => (Tok::Comma, 1),
                    (_, '.') => (Tok::Dot, 1),
                    (_, '@') => (Tok::At, 1),
                    (_, '~') => (Tok::Tilde, 1),
                    (_, '=') => (Tok::Equals, 1),
                    (_, '|') => (Tok::Pipe, 1),
                    (_, '-') => (Tok::Dash, 1),
                    _ => return Err(err(l0, c0, format!("unexpected character {c:?}"))),
                };
                step(n, &mut i, &mut col);
                out.push(Token { tok, line: l0, col: c0 });
            }
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        col,
    });
    Ok(out)
}

// ---------------------------------------------------------------- parsing

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

type PResult<T> = Result<T, Diagnostic>;

const NAME: &str = "a name";

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> PResult<T> {
        let t = self.peek();
        Err(Diagnostic {
            line: t.line,
            col: t.col,
            message: format!("unexpected {}", t.tok.describe()),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn at(&self, tok: &Tok) -> bool {
        self.peek().tok == *tok
    }

    fn eat(&mut self, tok: Tok) -> bool {
        if self.at(&tok) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> PResult<()> {
        if self.eat(tok.clone()) {
            Ok(())
        } else {
            self.fail(&[&format!("`{}`", tok.symbol())])
        }
    }

    fn at_keyword(&self, kw: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == kw)
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        if self.at_keyword(kw) {
            self.bump();
            Ok(())
        } else {
            self.fail(&[&format!("`{kw}`")])
        }
    }

    fn at_name(&self) -> bool {
        matches!(self.peek().tok, Tok::Ident(_) | Tok::Str(_))
    }

    fn name(&mut self) -> PResult<String> {
        match &self.peek().tok {
            Tok::Ident(s) | Tok::Str(s) => {
                let s = s.clone();
                self.bump();
                Ok(s)
            }
            _ => self.fail(&[NAME]),
        }
    }

    fn number(&mut self) -> PResult<usize> {
        match &self.peek().tok {
            Tok::Ident(s) if s.chars().all(|c| c.is_ascii_digit()) => match s.parse() {
                Ok(n) => {
                    self.bump();
                    Ok(n)
                }
                Err(_) => self.fail(&["a number"]),
            },
            _ => self.fail(&["a number"]),
        }
    }

    /// A possibly empty comma-separated list ending at `;` or `}`.
    fn list<T>(&mut self, item: impl Fn(&mut Self) -> PResult<T>, end: Tok) -> PResult<Vec<T>> {
        let mut out = Vec::new();
        if self.at(&end) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat(Tok::Comma) {
                continue;
            }
            if self.at(&end) {
                return Ok(out);
            }
            return self.fail(&["`,`", &format!("`{}`", end.symbol())]);
        }
    }

    fn names(&mut self) -> PResult<Vec<String>> {
        self.list(|p| p.name(), Tok::Semi)
    }

    fn pair(&mut self) -> PResult<(String, String)> {
        let a = self.name()?;
        self.expect(Tok::Arrow)?;
        Ok((a, self.name()?))
    }

    fn clause<T>(&mut self, kw: &str, body: impl FnOnce(&mut Self) -> PResult<T>) -> PResult<T> {
        self.keyword(kw)?;
        let v = body(self)?;
        self.expect(Tok::Semi)?;
        Ok(v)
    }

    fn occurrence(&mut self) -> PResult<OccDecl> {
        let id = self.name()?;
        let pointer = if self.eat(Tok::At) {
            if self.eat(Tok::Dash) {
                Pointer::Initial
            } else {
                Pointer::At(self.number()?)
            }
        } else {
            Pointer::Default
        };
        Ok(OccDecl { id, pointer })
    }

    fn play(&mut self) -> PResult<PlayDecl> {
        let mut out = vec![self.occurrence()?];
        while self.eat(Tok::Dot) {
            out.push(self.occurrence()?);
        }
        Ok(out)
    }

    fn plays(&mut self) -> PResult<Vec<PlayDecl>> {
        self.clause("plays", |p| p.list(|p| p.play(), Tok::Semi))
    }

    fn move_decl(&mut self) -> PResult<MoveDecl> {
        let id = self.name()?;
        self.expect(Tok::Colon)?;
        let polarity = match &self.peek().tok {
            Tok::Ident(s) if s == "O" => Polarity::O,
            Tok::Ident(s) if s == "P" => Polarity::P,
            _ => return self.fail(&["`O`", "`P`"]),
        };
        self.bump();
        let kind = match &self.peek().tok {
            Tok::Ident(s) if s == "Q" => Kind::Q,
            Tok::Ident(s) if s == "A" => Kind::A,
            _ => return self.fail(&["`Q`", "`A`"]),
        };
        self.bump();
        let mut enablers = Vec::new();
        if self.eat(Tok::LArrow) {
            enablers.push(self.name()?);
            while self.eat(Tok::Pipe) {
                enablers.push(self.name()?);
            }
        }
        Ok(MoveDecl {
            id,
            polarity,
            kind,
            enablers,
        })
    }

    fn homs(&mut self) -> PResult<Homs> {
        let h = match &self.peek().tok {
            Tok::Ident(s) if s == "canonical" => Homs::Canonical,
            Tok::Ident(s) if s == "discrete" => Homs::Discrete,
            Tok::Ident(s) if s == "explicit" => {
                self.bump();
                self.expect(Tok::LBrace)?;
                let isos = self.list(|p| p.name(), Tok::RBrace)?;
                self.expect(Tok::RBrace)?;
                return Ok(Homs::Explicit(isos));
            }
            _ => return self.fail(&["`canonical`", "`discrete`", "`explicit`"]),
        };
        self.bump();
        Ok(h)
    }

    fn decl(&mut self) -> PResult<Decl> {
        let kw = match &self.peek().tok {
            Tok::Ident(s) if DECL_KEYWORDS.contains(&s.as_str()) => s.clone(),
            _ => {
                let expected: Vec<String> = DECL_KEYWORDS.iter().map(|k| format!("`{k}`")).collect();
                let e: Vec<&str> = expected.iter().map(String::as_str).collect();
                return self.fail(&e);
            }
        };
        self.bump();
        let name = self.name()?;
        let d = match kw.as_str() {
            "game" => {
                self.expect(Tok::LBrace)?;
                let moves = self.clause("moves", |p| p.list(|p| p.move_decl(), Tok::Semi))?;
                let plays = self.plays()?;
                Decl::Game { name, moves, plays }
            }
            "strategy" => {
                self.keyword("on")?;
                let game = self.name()?;
                self.expect(Tok::LBrace)?;
                let plays = self.plays()?;
                Decl::Strategy { name, game, plays }
            }
            "iso" => {
                self.expect(Tok::Colon)?;
                let source = self.name()?;
                self.expect(Tok::Tilde)?;
                let target = self.name()?;
                self.expect(Tok::LBrace)?;
                let map = self.clause("map", |p| p.list(|p| p.pair(), Tok::Semi))?;
                Decl::Iso {
                    name,
                    source,
                    target,
                    map,
                }
            }
            "gamoid" => {
                self.expect(Tok::LBrace)?;
                let game = self.clause("game", |p| p.name())?;
                let objects = self.clause("objects", |p| p.names())?;
                let homs = self.clause("homs", |p| p.homs())?;
                Decl::Gamoid {
                    name,
                    game,
                    objects,
                    homs,
                }
            }
            "family" => {
                self.keyword("over")?;
                let base = self.name()?;
                self.expect(Tok::LBrace)?;
                let (mut fibers, mut transports) = (Vec::new(), Vec::new());
                loop {
                    let target = if self.at_keyword("fiber") {
                        &mut fibers
                    } else if self.at_keyword("transport") {
                        &mut transports
                    } else if self.at(&Tok::RBrace) {
                        break;
                    } else {
                        return self.fail(&["`fiber`", "`transport`", "`}`"]);
                    };
                    self.bump();
                    let a = self.name()?;
                    self.expect(Tok::Equals)?;
                    let b = self.name()?;
                    self.expect(Tok::Semi)?;
                    target.push((a, b));
                }
                Decl::Family {
                    name,
                    base,
                    fibers,
                    transports,
                }
            }
            "morphism" => {
                self.expect(Tok::Colon)?;
                let source = self.name()?;
                self.expect(Tok::Arrow)?;
                let target = self.name()?;
                self.expect(Tok::LBrace)?;
                let objects = self.clause("objects", |p| p.list(|p| p.pair(), Tok::Semi))?;
                let arrows = self.clause("arrows", |p| p.list(|p| p.pair(), Tok::Semi))?;
                Decl::Morphism {
                    name,
                    source,
                    target,
                    objects,
                    arrows,
                }
            }
            "registry" => {
                self.keyword("level")?;
                let level = self.number()?;
                self.expect(Tok::LBrace)?;
                let codes = self.clause("codes", |p| p.names())?;
                Decl::Registry { name, level, codes }
            }
            _ => {
                self.expect(Tok::LBrace)?;
                let run = self.clause("run", |p| p.names())?;
                Decl::Suite { name, run }
            }
        };
        self.expect(Tok::RBrace)?;
        Ok(d)
    }
}

/// Parses a model file. Never panics; every failure is a located
/// diagnostic listing what would have been accepted.
pub fn parse(src: &str) -> Result<ModelFile, Diagnostic> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let mut decls = Vec::new();
    while !p.at(&Tok::Eof) {
        if !p.at_name() {
            let expected: Vec<String> = DECL_KEYWORDS.iter().map(|k| format!("`{k}`")).collect();
            let e: Vec<&str> = expected.iter().map(String::as_str).collect();
            return p.fail(&e);
        }
        decls.push(p.decl()?);
    }
    Ok(ModelFile { decls })
}

// ---------------------------------------------------------------- printing

fn name(s: &str) -> String {
    if is_plain_name(s) {
        s.to_string()
    } else {
        let mut out = String::from("\"");
        for c in s.chars() {
            if c == '"' || c == '\\' {
                out.push('\\');
            }
            out.push(c);
        }
        out.push('"');
        out
    }
}

fn names(xs: &[String]) -> String {
    xs.iter().map(|x| name(x)).collect::<Vec<_>>().join(", ")
}

fn pairs(xs: &[(String, String)]) -> String {
    xs.iter()
        .map(|(a, b)| format!("{} -> {}", name(a), name(b)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn play(p: &PlayDecl) -> String {
    p.iter()
        .map(|o| match o.pointer {
            Pointer::Default => name(&o.id),
            Pointer::At(k) => format!("{}@{k}", name(&o.id)),
            Pointer::Initial => format!("{}@-", name(&o.id)),
        })
        .collect::<Vec<_>>()
        .join(" . ")
}

fn plays(ps: &[PlayDecl]) -> String {
    ps.iter().map(play).collect::<Vec<_>>().join(", ")
}

fn clause(kw: &str, body: &str) -> String {
    if body.is_empty() {
        format!("{kw};")
    } else {
        format!("{kw} {body};")
    }
}

impl fmt::Display for Decl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decl::Game { name: n, moves, plays: ps } => {
                let ms: Vec<String> = moves
                    .iter()
                    .map(|m| {
                        let pol = match m.polarity {
                            Polarity::O => "O",
                            Polarity::P => "P",
                        };
                        let kind = match m.kind {
                            Kind::Q => "Q",
                            Kind::A => "A",
                        };
                        let mut s = format!("{}: {pol} {kind}", name(&m.id));
                        if !m.enablers.is_empty() {
                            let es: Vec<String> = m.enablers.iter().map(|e| name(e)).collect();
                            s.push_str(&format!(" <- {}", es.join(" | ")));
                        }
                        s
                    })
                    .collect();
                writeln!(f, "game {} {{", name(n))?;
                writeln!(f, "  {}", clause("moves", &ms.join(", ")))?;
                writeln!(f, "  {}", clause("plays", &plays(ps)))?;
                write!(f, "}}")
            }
            Decl::Strategy { name: n, game, plays: ps } => write!(
                f,
                "strategy {} on {} {{ {} }}",
                name(n),
                name(game),
                clause("plays", &plays(ps))
            ),
            Decl::Iso {
                name: n,
                source,
                target,
                map,
            } => write!(
                f,
                "iso {} : {} ~ {} {{ {} }}",
                name(n),
                name(source),
                name(target),
                clause("map", &pairs(map))
            ),
            Decl::Gamoid {
                name: n,
                game,
                objects,
                homs,
            } => {
                let h = match homs {
                    Homs::Canonical => "canonical".to_string(),
                    Homs::Discrete => "discrete".to_string(),
                    Homs::Explicit(xs) if xs.is_empty() => "explicit { }".to_string(),
                    Homs::Explicit(xs) => format!("explicit {{ {} }}", names(xs)),
                };
                write!(
                    f,
                    "gamoid {} {{ game {}; {} homs {h}; }}",
                    name(n),
                    name(game),
                    clause("objects", &names(objects))
                )
            }
            Decl::Family {
                name: n,
                base,
                fibers,
                transports,
            } => {
                writeln!(f, "family {} over {} {{", name(n), name(base))?;
                for (o, g) in fibers {
                    writeln!(f, "  fiber {} = {};", name(o), name(g))?;
                }
                for (p, m) in transports {
                    writeln!(f, "  transport {} = {};", name(p), name(m))?;
                }
                write!(f, "}}")
            }
            Decl::Morphism {
                name: n,
                source,
                target,
                objects,
                arrows,
            } => {
                writeln!(f, "morphism {} : {} -> {} {{", name(n), name(source), name(target))?;
                writeln!(f, "  {}", clause("objects", &pairs(objects)))?;
                writeln!(f, "  {}", clause("arrows", &pairs(arrows)))?;
                write!(f, "}}")
            }
            Decl::Registry { name: n, level, codes } => write!(
                f,
                "registry {} level {level} {{ {} }}",
                name(n),
                clause("codes", &names(codes))
            ),
            Decl::Suite { name: n, run } => {
                write!(f, "suite {} {{ {} }}", name(n), clause("run", &names(run)))
            }
        }
    }
}

impl fmt::Display for ModelFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.decls.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            writeln!(f, "{d}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagnostics_are_located() {
        let e = parse("game G {\n  moves q: X Q;\n}").unwrap_err();
        assert_eq!((e.line, e.col), (2, 12));
        assert_eq!(e.expected, vec!["`O`", "`P`"]);
        let e = parse("gamoid G { game B objects; }").unwrap_err();
        assert_eq!((e.line, e.col), (1, 19));
        assert_eq!(e.expected, vec!["`;`"]);
    }

    #[test]
    fn quoted_names_and_pointers() {
        let src = "family F over N { transport \"a~b#1\" = f; fiber zero = B; }\n\
                   game G { moves q: O Q, a: P A <- q | r, r: O Q; plays q . a@-, r . a@0; }";
        let m = parse(src).unwrap();
        let again = parse(&m.to_string()).unwrap();
        assert_eq!(m, again);
        match &m.decls[1] {
            Decl::Game { plays, .. } => {
                assert_eq!(plays[0][1].pointer, Pointer::Initial);
                assert_eq!(plays[1][1].pointer, Pointer::At(0));
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn comments_and_dashes() {
        let m = parse("# header\nsuite s-1 { run cwf, pi; } # trailing").unwrap();
        assert_eq!(m.decls[0].name(), "s-1");
        assert!(!is_plain_name("a-"));
        assert!(!is_plain_name("a~b"));
        assert!(is_plain_name("N2-swap"));
    }
}
