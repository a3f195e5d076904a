//! Session-language parser.
//!
//! Statements end with `;`; `#` starts a comment running to end of line.
//!
//! ```text
//! ring NAME = (QQ | ZZ/p)[v1,...,vn];
//! ideal NAME = p1, ..., pk;
//! matrix NAME = [[p11,...],[...]];
//! poly NAME = p;
//! [ideal NAME =] COMMAND arg ...;
//! ```

use kittab_core::{Error, Result};

pub const COMMANDS: &[&str] = &[
    "gb",
    "colon",
    "intersect",
    "dim",
    "kitt",
    "generic_kitt",
    "generic_residual",
    "specialize",
    "residual_check",
    "verify_specialization",
    "verify_deformation",
    "height_report",
    "g_condition",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arg {
    Ident(String),
    Num(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Ring {
        name: String,
        field: FieldSpec,
        vars: Vec<String>,
    },
    IdealDecl {
        name: String,
        gens: Vec<String>,
    },
    MatrixDecl {
        name: String,
        rows: Vec<Vec<String>>,
    },
    PolyDecl {
        name: String,
        expr: String,
    },
    Command {
        bind: Option<String>,
        name: String,
        args: Vec<Arg>,
    },
}

#[derive(Clone, Debug)]
pub struct Session {
    pub statements: Vec<(usize, Stmt)>, // (line, statement)
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col: 1,
        msg: msg.into(),
    }
}

fn strip_comments(text: &str) -> String {
    text.lines()
        .map(|l| match l.find('#') {
            Some(i) => &l[..i],
            None => l,
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Split on `;`, remembering the starting line of each statement.
fn split_statements(text: &str) -> Result<Vec<(usize, String)>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut line = 1usize;
    let mut start_line = 1usize;
    for c in text.chars() {
        match c {
            ';' => {
                let s = cur.trim().to_string();
                if !s.is_empty() {
                    out.push((start_line, s));
                }
                cur.clear();
                start_line = line;
            }
            '\n' => {
                line += 1;
                if cur.trim().is_empty() {
                    start_line = line;
                }
                cur.push(c);
            }
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        return Err(err(start_line, "statement missing terminating `;`"));
    }
    Ok(out)
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Split on top-level commas (commas outside any brackets).
fn split_commas(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '[' | '(' => {
                depth += 1;
                cur.push(c);
            }
            ']' | ')' => {
                depth -= 1;
                cur.push(c);
            }
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
            }
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() || !out.is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

fn parse_ring(line: usize, rhs: &str) -> Result<(FieldSpec, Vec<String>)> {
    let rhs = rhs.trim();
    let open = rhs
        .find('[')
        .ok_or_else(|| err(line, "ring declaration needs a variable list"))?;
    let close = rhs
        .rfind(']')
        .ok_or_else(|| err(line, "unclosed variable list"))?;
    let field_part = rhs[..open].trim();
    let field = if field_part == "QQ" {
        FieldSpec::Rational
    } else if let Some(p) = field_part.strip_prefix("ZZ/") {
        let p: u32 = p
            .trim()
            .parse()
            .map_err(|_| err(line, "invalid prime modulus"))?;
        FieldSpec::Prime(p)
    } else {
        return Err(err(line, format!("unknown coefficient field `{}`", field_part)));
    };
    let vars: Vec<String> = split_commas(&rhs[open + 1..close])
        .into_iter()
        .map(|v| v.trim().to_string())
        .collect();
    if vars.is_empty() || vars.iter().any(|v| !is_ident(v)) {
        return Err(err(line, "invalid variable list"));
    }
    Ok((field, vars))
}

fn parse_matrix_rows(line: usize, rhs: &str) -> Result<Vec<Vec<String>>> {
    let rhs = rhs.trim();
    if !rhs.starts_with('[') || !rhs.ends_with(']') {
        return Err(err(line, "matrix literal must be [[...],[...]]"));
    }
    let inner = &rhs[1..rhs.len() - 1];
    let mut rows = Vec::new();
    for row in split_commas(inner) {
        let row = row.trim();
        if !row.starts_with('[') || !row.ends_with(']') {
            return Err(err(line, "matrix row must be [...]"));
        }
        let entries: Vec<String> = split_commas(&row[1..row.len() - 1])
            .into_iter()
            .map(|e| e.trim().to_string())
            .collect();
        if entries.is_empty() {
            return Err(err(line, "empty matrix row"));
        }
        rows.push(entries);
    }
    if rows.is_empty() {
        return Err(err(line, "empty matrix literal"));
    }
    let w = rows[0].len();
    if rows.iter().any(|r| r.len() != w) {
        return Err(err(line, "ragged matrix rows"));
    }
    Ok(rows)
}

fn parse_command(line: usize, bind: Option<String>, text: &str) -> Result<Stmt> {
    let mut words = text.split_whitespace();
    let name = words.next().unwrap().to_string();
    if !COMMANDS.contains(&name.as_str()) {
        return Err(err(line, format!("unknown command `{}`", name)));
    }
    let mut args = Vec::new();
    for w in words {
        if w.chars().all(|c| c.is_ascii_digit()) {
            args.push(Arg::Num(w.parse().map_err(|_| err(line, "number too large"))?));
        } else if is_ident(w) {
            args.push(Arg::Ident(w.to_string()));
        } else {
            return Err(err(line, format!("invalid command argument `{}`", w)));
        }
    }
    Ok(Stmt::Command { bind, name, args })
}

pub fn parse_session(text: &str) -> Result<Session> {
    let clean = strip_comments(text);
    let mut statements = Vec::new();
    let mut saw_ring = false;
    for (line, stmt) in split_statements(&clean)? {
        let first = stmt.split_whitespace().next().unwrap_or("");
        let parsed = match first {
            "ring" => {
                if saw_ring {
                    return Err(err(line, "only one ring declaration per session"));
                }
                saw_ring = true;
                let rest = stmt["ring".len()..].trim();
                let eq = rest
                    .find('=')
                    .ok_or_else(|| err(line, "ring declaration needs `=`"))?;
                let name = rest[..eq].trim().to_string();
                if !is_ident(&name) {
                    return Err(err(line, "invalid ring name"));
                }
                let (field, vars) = parse_ring(line, &rest[eq + 1..])?;
                Stmt::Ring { name, field, vars }
            }
            "ideal" => {
                let rest = stmt["ideal".len()..].trim();
                let eq = rest
                    .find('=')
                    .ok_or_else(|| err(line, "ideal declaration needs `=`"))?;
                let name = rest[..eq].trim().to_string();
                if !is_ident(&name) {
                    return Err(err(line, "invalid ideal name"));
                }
                let rhs = rest[eq + 1..].trim();
                let head = rhs.split_whitespace().next().unwrap_or("");
                if COMMANDS.contains(&head) {
                    parse_command(line, Some(name), rhs)?
                } else {
                    let gens = split_commas(rhs);
                    if gens.is_empty() {
                        return Err(err(line, "ideal declaration needs generators"));
                    }
                    Stmt::IdealDecl { name, gens }
                }
            }
            "matrix" => {
                let rest = stmt["matrix".len()..].trim();
                let eq = rest
                    .find('=')
                    .ok_or_else(|| err(line, "matrix declaration needs `=`"))?;
                let name = rest[..eq].trim().to_string();
                if !is_ident(&name) {
                    return Err(err(line, "invalid matrix name"));
                }
                let rows = parse_matrix_rows(line, &rest[eq + 1..])?;
                Stmt::MatrixDecl { name, rows }
            }
            "poly" => {
                let rest = stmt["poly".len()..].trim();
                let eq = rest
                    .find('=')
                    .ok_or_else(|| err(line, "poly declaration needs `=`"))?;
                let name = rest[..eq].trim().to_string();
                if !is_ident(&name) {
                    return Err(err(line, "invalid poly name"));
                }
                Stmt::PolyDecl {
                    name,
                    expr: rest[eq + 1..].trim().to_string(),
                }
            }
            "" => continue,
            _ => parse_command(line, None, &stmt)?,
        };
        statements.push((line, parsed));
    }
    Ok(Session { statements })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_node_session() {
        let s = parse_session("ring R = QQ[x,y]; ideal I = x^2+y, x^5; generic_kitt 2 I;").unwrap();
        assert_eq!(s.statements.len(), 3);
        match &s.statements[2].1 {
            Stmt::Command { bind, name, args } => {
                assert!(bind.is_none());
                assert_eq!(name, "generic_kitt");
                assert_eq!(args, &vec![Arg::Num(2), Arg::Ident("I".into())]);
            }
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn prime_field_ring() {
        let s = parse_session("ring R = ZZ/32003[x0,x1,x2,x3];").unwrap();
        match &s.statements[0].1 {
            Stmt::Ring { field, vars, .. } => {
                assert_eq!(*field, FieldSpec::Prime(32003));
                assert_eq!(vars.len(), 4);
            }
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn matrix_and_binding() {
        let s = parse_session(
            "ring R = QQ[x,y]; matrix M = [[x,0],[0,y]]; ideal K = kitt a I;",
        )
        .unwrap();
        match &s.statements[1].1 {
            Stmt::MatrixDecl { rows, .. } => assert_eq!(rows.len(), 2),
            other => panic!("unexpected {:?}", other),
        }
        match &s.statements[2].1 {
            Stmt::Command { bind, .. } => assert_eq!(bind.as_deref(), Some("K")),
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn comments_and_errors() {
        assert!(parse_session("# only a comment\n").unwrap().statements.is_empty());
        assert!(parse_session("gb I").is_err()); // missing semicolon
        assert!(parse_session("frobnicate I;").is_err());
        assert!(parse_session("ring R = QQ[x]; ring T = QQ[y];").is_err());
    }
}
