//! Reader for the subset of GML used by the common network-science datasets:
//! a top-level `graph [ ... ]` block holding `node [ id .. ]` and
//! `edge [ source .. target .. ]` entries. Keys the reader does not know are
//! skipped, whatever their value type.

use std::collections::HashMap;

use super::{Graph, GraphBuilder};
use crate::error::{Error, Position, Result};

#[derive(Debug, Clone, PartialEq)]
enum Value {
    Int(i64),
    Real(f64),
    Str(String),
    List(Vec<Entry>),
}

#[derive(Debug, Clone, PartialEq)]
struct Entry {
    key: String,
    value: Value,
    pos: Position,
}

struct Lexer<'a> {
    src: &'a str,
    offset: usize,
    line: usize,
    column: usize,
}

#[derive(Debug, PartialEq)]
enum Token {
    Open,
    Close,
    Key(String),
    Int(i64),
    Real(f64),
    Str(String),
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            src,
            offset: 0,
            line: 1,
            column: 1,
        }
    }

    fn pos(&self) -> Position {
        Position {
            line: self.line,
            column: self.column,
        }
    }

    fn peek_char(&self) -> Option<char> {
        self.src[self.offset..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek_char()?;
        self.offset += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek_char() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while let Some(c) = self.bump() {
                    if c == '\n' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    fn next_token(&mut self) -> Result<Option<(Token, Position)>> {
        self.skip_trivia();
        let pos = self.pos();
        let Some(c) = self.peek_char() else {
            return Ok(None);
        };
        let token = match c {
            '[' => {
                self.bump();
                Token::Open
            }
            ']' => {
                self.bump();
                Token::Close
            }
            '"' => {
                self.bump();
                let start = self.offset;
                loop {
                    match self.bump() {
                        Some('"') => break,
                        Some(_) => {}
                        None => {
                            return Err(Error::Syntax {
                                pos,
                                message: "unterminated string".into(),
                            })
                        }
                    }
                }
                Token::Str(self.src[start..self.offset - 1].to_string())
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.offset;
                while matches!(self.peek_char(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
                    self.bump();
                }
                Token::Key(self.src[start..self.offset].to_string())
            }
            c if c.is_ascii_digit() || c == '-' || c == '+' || c == '.' => {
                let start = self.offset;
                while matches!(self.peek_char(), Some(c) if c.is_ascii_alphanumeric() || matches!(c, '-' | '+' | '.'))
                {
                    self.bump();
                }
                let text = &self.src[start..self.offset];
                if let Ok(v) = text.parse::<i64>() {
                    Token::Int(v)
                } else if let Ok(v) = text.parse::<f64>() {
                    Token::Real(v)
                } else {
                    return Err(Error::Syntax {
                        pos,
                        message: format!("malformed number `{text}`"),
                    });
                }
            }
            other => {
                return Err(Error::Syntax {
                    pos,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        Ok(Some((token, pos)))
    }
}

/// Parses `key value` pairs until end of input (`nested == false`) or the
/// closing bracket of the enclosing list.
fn parse_list(lexer: &mut Lexer<'_>, nested: bool) -> Result<Vec<Entry>> {
    let mut entries = Vec::new();
    loop {
        let Some((token, pos)) = lexer.next_token()? else {
            if nested {
                return Err(Error::Syntax {
                    pos: lexer.pos(),
                    message: "unexpected end of input, expected `]`".into(),
                });
            }
            return Ok(entries);
        };
        let key = match token {
            Token::Key(k) => k,
            Token::Close if nested => return Ok(entries),
            other => {
                return Err(Error::Syntax {
                    pos,
                    message: format!("expected a key, found {}", describe(&other)),
                })
            }
        };
        let Some((token, value_pos)) = lexer.next_token()? else {
            return Err(Error::Syntax {
                pos: lexer.pos(),
                message: format!("missing value for key `{key}`"),
            });
        };
        let value = match token {
            Token::Int(v) => Value::Int(v),
            Token::Real(v) => Value::Real(v),
            Token::Str(s) => Value::Str(s),
            Token::Open => Value::List(parse_list(lexer, true)?),
            other => {
                return Err(Error::Syntax {
                    pos: value_pos,
                    message: format!("expected a value for `{key}`, found {}", describe(&other)),
                })
            }
        };
        entries.push(Entry { key, value, pos });
    }
}

fn describe(token: &Token) -> String {
    match token {
        Token::Open => "`[`".into(),
        Token::Close => "`]`".into(),
        Token::Key(k) => format!("key `{k}`"),
        Token::Int(v) => format!("integer {v}"),
        Token::Real(v) => format!("number {v}"),
        Token::Str(_) => "a string".into(),
    }
}

fn int_field(entries: &[Entry], key: &str, owner: &Entry) -> Result<i64> {
    match entries.iter().find(|e| e.key == key) {
        Some(Entry {
            value: Value::Int(v),
            ..
        }) => Ok(*v),
        Some(e) => Err(Error::Syntax {
            pos: e.pos,
            message: format!("`{key}` must be an integer"),
        }),
        None => Err(Error::Syntax {
            pos: owner.pos,
            message: format!("`{}` entry without `{key}`", owner.key),
        }),
    }
}

/// Parses GML text into a [`Graph`]. Nodes are numbered in file order.
pub fn parse_gml(text: &str) -> Result<Graph> {
    let mut lexer = Lexer::new(text);
    let top = parse_list(&mut lexer, false)?;

    let mut graphs = top.iter().filter(|e| e.key == "graph");
    let graph_entry = graphs.next().ok_or(Error::Syntax {
        pos: Position { line: 1, column: 1 },
        message: "no `graph [ ... ]` block".into(),
    })?;
    if let Some(extra) = graphs.next() {
        return Err(Error::Syntax {
            pos: extra.pos,
            message: "more than one `graph` block".into(),
        });
    }
    let Value::List(body) = &graph_entry.value else {
        return Err(Error::Syntax {
            pos: graph_entry.pos,
            message: "`graph` must be followed by `[`".into(),
        });
    };

    for entry in body.iter().filter(|e| e.key == "directed") {
        match entry.value {
            Value::Int(0) => {}
            Value::Int(_) => return Err(Error::Directed { pos: entry.pos }),
            _ => {
                return Err(Error::Syntax {
                    pos: entry.pos,
                    message: "`directed` must be 0 or 1".into(),
                })
            }
        }
    }

    let mut ids = Vec::new();
    let mut index = HashMap::new();
    for entry in body.iter().filter(|e| e.key == "node") {
        let Value::List(fields) = &entry.value else {
            return Err(Error::Syntax {
                pos: entry.pos,
                message: "`node` must be followed by `[`".into(),
            });
        };
        let id = int_field(fields, "id", entry)?;
        if index.insert(id, ids.len()).is_some() {
            return Err(Error::DuplicateNode { id, pos: entry.pos });
        }
        ids.push(id);
    }

    let mut builder = GraphBuilder::new(ids);
    for entry in body.iter().filter(|e| e.key == "edge") {
        let Value::List(fields) = &entry.value else {
            return Err(Error::Syntax {
                pos: entry.pos,
                message: "`edge` must be followed by `[`".into(),
            });
        };
        let mut ends = [0usize; 2];
        for (slot, key) in ends.iter_mut().zip(["source", "target"]) {
            let id = int_field(fields, key, entry)?;
            *slot = *index
                .get(&id)
                .ok_or(Error::UndeclaredNode { id, pos: entry.pos })?;
        }
        if fields.iter().any(|f| f.key == "value" || f.key == "weight") {
            builder.warnings.ignored_weights += 1;
        }
        builder.add_edge(ends[0], ends[1], entry.pos)?;
    }
    builder.finish()
}
