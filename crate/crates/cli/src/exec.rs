//! Session executor: binds declarations, dispatches commands, renders
//! deterministic text and JSON output.

use crate::session::{Arg, FieldSpec, Session, Stmt};
use kittab_core::generic::{
    generic_kitt, generic_residual, height_report, verify_deformation, verify_specialization,
};
use kittab_core::ideal::Ideal;
use kittab_core::kitt::{g_condition, kitt_ideal, residual_check, KittInput};
use kittab_core::text::parse_poly;
use kittab_core::{
    Error, Field, GenericExtension, MonomialOrder, PolyMatrix, PolyRing, Polynomial, Result,
    RingRef, VerificationReport,
};
use std::collections::HashMap;
use std::time::Instant;

#[derive(Clone, Debug)]
enum Value {
    Ideal(Ideal),
    Generic(Ideal, GenericExtension),
    Matrix(PolyMatrix),
    Poly(Polynomial),
}

#[derive(Clone, Debug)]
pub enum Payload {
    Gens(Vec<String>),
    Report(VerificationReport),
    Dim { dim: i64, height: String },
    Bool(bool),
}

#[derive(Clone, Debug)]
pub struct CommandOutput {
    pub command: String,
    pub inputs: Vec<String>,
    pub payload: Payload,
    pub millis: u128,
}

struct Env {
    ring: Option<RingRef>,
    vars: HashMap<String, Value>,
}

impl Env {
    fn ring(&self, line: usize) -> Result<&RingRef> {
        self.ring.as_ref().ok_or_else(|| Error::Parse {
            line,
            col: 1,
            msg: "no ring declared".into(),
        })
    }

    fn lookup(&self, name: &str) -> Result<&Value> {
        self.vars
            .get(name)
            .ok_or_else(|| Error::precondition(format!("unknown identifier `{}`", name)))
    }

    fn ideal(&self, name: &str) -> Result<Ideal> {
        match self.lookup(name)? {
            Value::Ideal(i) => Ok(i.clone()),
            Value::Generic(i, _) => Ok(i.clone()),
            // a named polynomial doubles as its principal ideal
            Value::Poly(p) => Ok(Ideal::new(p.ring(), vec![p.clone()])),
            _ => Err(Error::precondition(format!("`{}` is not an ideal", name))),
        }
    }

    fn generic(&self, name: &str) -> Result<(&Ideal, &GenericExtension)> {
        match self.lookup(name)? {
            Value::Generic(i, e) => Ok((i, e)),
            _ => Err(Error::precondition(format!(
                "`{}` is not a generic-extension ideal",
                name
            ))),
        }
    }

    fn matrix(&self, name: &str) -> Result<&PolyMatrix> {
        match self.lookup(name)? {
            Value::Matrix(m) => Ok(m),
            _ => Err(Error::precondition(format!("`{}` is not a matrix", name))),
        }
    }
}

fn arg_ident<'a>(args: &'a [Arg], i: usize, cmd: &str) -> Result<&'a str> {
    match args.get(i) {
        Some(Arg::Ident(s)) => Ok(s),
        _ => Err(Error::precondition(format!(
            "`{}` expects an identifier at position {}",
            cmd,
            i + 1
        ))),
    }
}

fn arg_num(args: &[Arg], i: usize, cmd: &str) -> Result<usize> {
    match args.get(i) {
        Some(Arg::Num(n)) => Ok(*n as usize),
        _ => Err(Error::precondition(format!(
            "`{}` expects a number at position {}",
            cmd,
            i + 1
        ))),
    }
}

fn arity(args: &[Arg], n: usize, cmd: &str) -> Result<()> {
    if args.len() != n {
        return Err(Error::precondition(format!(
            "`{}` expects {} arguments, got {}",
            cmd,
            n,
            args.len()
        )));
    }
    Ok(())
}

fn gens_strings(gens: &[Polynomial]) -> Vec<String> {
    gens.iter().map(|g| g.to_string()).collect()
}

fn kitt_input_from(env: &Env, a_name: &str, i_name: &str, m: Option<&str>) -> Result<KittInput> {
    let a = env.ideal(a_name)?.gens().to_vec();
    let f = env.ideal(i_name)?.gens().to_vec();
    match m {
        Some(m_name) => {
            let phi = env.matrix(m_name)?.clone();
            KittInput::new(f, a, phi)
        }
        None => KittInput::lift(f, a),
    }
}

fn echo_args(args: &[Arg]) -> Vec<String> {
    args.iter()
        .map(|a| match a {
            Arg::Ident(s) => s.clone(),
            Arg::Num(n) => n.to_string(),
        })
        .collect()
}

pub fn run_session(session: &Session) -> Result<Vec<CommandOutput>> {
    let mut env = Env {
        ring: None,
        vars: HashMap::new(),
    };
    let mut outputs = Vec::new();
    for (line, stmt) in &session.statements {
        match stmt {
            Stmt::Ring { field, vars, .. } => {
                let field = match field {
                    FieldSpec::Rational => Field::Rational,
                    FieldSpec::Prime(p) => Field::Prime(*p),
                };
                env.ring = Some(PolyRing::new(
                    field,
                    vars.clone(),
                    MonomialOrder::GrevLex,
                )?);
            }
            Stmt::IdealDecl { name, gens } => {
                let ring = env.ring(*line)?.clone();
                let polys = gens
                    .iter()
                    .map(|g| parse_poly(&ring, g))
                    .collect::<Result<Vec<_>>>()?;
                env.vars.insert(name.clone(), Value::Ideal(Ideal::new(&ring, polys)));
            }
            Stmt::MatrixDecl { name, rows } => {
                let ring = env.ring(*line)?.clone();
                let r = rows.len();
                let c = rows[0].len();
                let mut entries = Vec::with_capacity(r * c);
                for row in rows {
                    for e in row {
                        entries.push(parse_poly(&ring, e)?);
                    }
                }
                env.vars
                    .insert(name.clone(), Value::Matrix(PolyMatrix::new(&ring, r, c, entries)?));
            }
            Stmt::PolyDecl { name, expr } => {
                let ring = env.ring(*line)?.clone();
                env.vars
                    .insert(name.clone(), Value::Poly(parse_poly(&ring, expr)?));
            }
            Stmt::Command { bind, name, args } => {
                env.ring(*line)?;
                let start = Instant::now();
                let (payload, bound) = run_command(&env, name, args)?;
                let millis = start.elapsed().as_millis();
                if let (Some(b), Some(v)) = (bind, bound) {
                    env.vars.insert(b.clone(), v);
                } else if bind.is_some() {
                    return Err(Error::precondition(format!(
                        "command `{}` does not produce a bindable ideal",
                        name
                    )));
                }
                outputs.push(CommandOutput {
                    command: name.clone(),
                    inputs: echo_args(args),
                    payload,
                    millis,
                });
            }
        }
    }
    Ok(outputs)
}

fn run_command(env: &Env, name: &str, args: &[Arg]) -> Result<(Payload, Option<Value>)> {
    match name {
        "gb" => {
            arity(args, 1, name)?;
            let i = env.ideal(arg_ident(args, 0, name)?)?;
            let gb = i.groebner_basis().to_vec();
            let out = Ideal::new(i.ring(), gb.clone());
            Ok((Payload::Gens(gens_strings(&gb)), Some(Value::Ideal(out))))
        }
        "colon" => {
            arity(args, 2, name)?;
            let a = env.ideal(arg_ident(args, 0, name)?)?;
            let b = env.ideal(arg_ident(args, 1, name)?)?;
            let q = a.colon(&b)?;
            Ok((
                Payload::Gens(gens_strings(q.gens())),
                Some(Value::Ideal(q)),
            ))
        }
        "intersect" => {
            arity(args, 2, name)?;
            let a = env.ideal(arg_ident(args, 0, name)?)?;
            let b = env.ideal(arg_ident(args, 1, name)?)?;
            let q = a.intersect(&b)?;
            Ok((
                Payload::Gens(gens_strings(q.gens())),
                Some(Value::Ideal(q)),
            ))
        }
        "dim" => {
            arity(args, 1, name)?;
            let i = env.ideal(arg_ident(args, 0, name)?)?;
            let d = i.dimension();
            let height = match d.height {
                kittab_core::Height::Finite(h) => h.to_string(),
                kittab_core::Height::Infinite => "infinite".to_string(),
            };
            Ok((Payload::Dim { dim: d.dim, height }, None))
        }
        "kitt" => {
            if args.len() != 2 && args.len() != 3 {
                return Err(Error::precondition("`kitt` expects: kitt a I [Phi]"));
            }
            let a = arg_ident(args, 0, name)?;
            let i = arg_ident(args, 1, name)?;
            let m = if args.len() == 3 {
                Some(arg_ident(args, 2, name)?)
            } else {
                None
            };
            let input = kitt_input_from(env, a, i, m)?;
            let result = kitt_ideal(&input)?;
            Ok((
                Payload::Gens(gens_strings(result.ideal.gens())),
                Some(Value::Ideal(result.ideal)),
            ))
        }
        "generic_kitt" => {
            arity(args, 2, name)?;
            let s = arg_num(args, 0, name)?;
            let i = env.ideal(arg_ident(args, 1, name)?)?;
            let (ext, result) = generic_kitt(i.gens(), s)?;
            Ok((
                Payload::Gens(gens_strings(result.ideal.gens())),
                Some(Value::Generic(result.ideal, ext)),
            ))
        }
        "generic_residual" => {
            arity(args, 2, name)?;
            let s = arg_num(args, 0, name)?;
            let i = env.ideal(arg_ident(args, 1, name)?)?;
            let (ext, res) = generic_residual(i.gens(), s)?;
            Ok((
                Payload::Gens(gens_strings(res.gens())),
                Some(Value::Generic(res, ext)),
            ))
        }
        "specialize" => {
            arity(args, 2, name)?;
            let (k, ext) = env.generic(arg_ident(args, 0, name)?)?;
            let phi = env.matrix(arg_ident(args, 1, name)?)?;
            let spec = ext.specialize_ideal(k, phi)?;
            Ok((
                Payload::Gens(gens_strings(spec.gens())),
                Some(Value::Ideal(spec)),
            ))
        }
        "residual_check" => {
            arity(args, 3, name)?;
            let a = env.ideal(arg_ident(args, 0, name)?)?;
            let i = env.ideal(arg_ident(args, 1, name)?)?;
            let s = arg_num(args, 2, name)?;
            Ok((Payload::Report(residual_check(&a, &i, s)?), None))
        }
        "verify_specialization" => {
            if args.len() != 2 && args.len() != 3 {
                return Err(Error::precondition(
                    "`verify_specialization` expects: verify_specialization a I [Phi]",
                ));
            }
            let a = arg_ident(args, 0, name)?;
            let i = arg_ident(args, 1, name)?;
            let m = if args.len() == 3 {
                Some(arg_ident(args, 2, name)?)
            } else {
                None
            };
            let input = kitt_input_from(env, a, i, m)?;
            Ok((Payload::Report(verify_specialization(&input)?), None))
        }
        "verify_deformation" => {
            arity(args, 3, name)?;
            let a = env.ideal(arg_ident(args, 0, name)?)?;
            let i = env.ideal(arg_ident(args, 1, name)?)?;
            let s = arg_num(args, 2, name)?;
            Ok((Payload::Report(verify_deformation(&a, &i, s)?), None))
        }
        "height_report" => {
            arity(args, 3, name)?;
            let a = env.ideal(arg_ident(args, 0, name)?)?;
            let i = env.ideal(arg_ident(args, 1, name)?)?;
            let s = arg_num(args, 2, name)?;
            Ok((
                Payload::Report(height_report(i.gens(), a.gens(), s)?),
                None,
            ))
        }
        "g_condition" => {
            arity(args, 2, name)?;
            let i = env.ideal(arg_ident(args, 0, name)?)?;
            let s = arg_num(args, 1, name)?;
            Ok((Payload::Bool(g_condition(&i, s)?), None))
        }
        other => Err(Error::precondition(format!("unknown command `{}`", other))),
    }
}

/// Deterministic text rendering; timings deliberately excluded.
pub fn render_text(outputs: &[CommandOutput]) -> String {
    let mut out = String::new();
    for o in outputs {
        out.push_str(&format!("> {} {}\n", o.command, o.inputs.join(" ")));
        match &o.payload {
            Payload::Gens(gens) => {
                if gens.is_empty() {
                    out.push_str("0\n");
                } else {
                    for g in gens {
                        out.push_str(g);
                        out.push('\n');
                    }
                }
            }
            Payload::Report(r) => {
                out.push_str(&r.to_string());
                out.push('\n');
            }
            Payload::Dim { dim, height } => {
                out.push_str(&format!("dim = {}\nheight = {}\n", dim, height));
            }
            Payload::Bool(b) => {
                out.push_str(&format!("{}\n", b));
            }
        }
        out.push('\n');
    }
    out
}

fn report_json(r: &VerificationReport) -> serde_json::Value {
    serde_json::json!({
        "title": r.title,
        "checks": r.checks.iter().map(|c| serde_json::json!({
            "name": c.name,
            "verdict": c.verdict.to_string(),
            "witness": c.witness,
        })).collect::<Vec<_>>(),
        "notes": r.notes,
        "passed": r.passed(),
    })
}

/// One JSON object per command, newline-separated.
pub fn render_json(outputs: &[CommandOutput]) -> String {
    let mut lines = Vec::new();
    for o in outputs {
        let mut obj = serde_json::json!({
            "command": o.command,
            "inputs": o.inputs,
            "millis": o.millis as u64,
        });
        let map = obj.as_object_mut().unwrap();
        match &o.payload {
            Payload::Gens(gens) => {
                map.insert("generators".into(), serde_json::json!(gens));
            }
            Payload::Report(r) => {
                map.insert("report".into(), report_json(r));
            }
            Payload::Dim { dim, height } => {
                map.insert(
                    "report".into(),
                    serde_json::json!({"dim": dim, "height": height}),
                );
            }
            Payload::Bool(b) => {
                map.insert("report".into(), serde_json::json!({"value": b}));
            }
        }
        lines.push(serde_json::to_string(&obj).unwrap());
    }
    lines.join("\n") + if lines.is_empty() { "" } else { "\n" }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::session::parse_session;

    fn run_text(src: &str) -> String {
        let session = parse_session(src).unwrap();
        render_text(&run_session(&session).unwrap())
    }

    #[test]
    fn gb_session() {
        let out = run_text("ring R = QQ[x,y]; ideal I = x^2 - y, y; gb I;");
        assert!(out.contains("> gb I"));
        assert!(out.contains("y"));
        assert!(out.contains("x^2"));
    }

    #[test]
    fn generic_kitt_session_output() {
        let out = run_text("ring R = QQ[x,y]; ideal I = x^2+y, x^5; generic_kitt 2 I;");
        assert!(out.contains("U12*U21") || out.contains("U11*U22"));
    }

    #[test]
    fn no_ring_error() {
        let session = parse_session("ideal I = x;").unwrap();
        assert!(run_session(&session).is_err());
    }

    #[test]
    fn binding_and_specialize() {
        let out = run_text(
            "ring R = QQ[x,y]; ideal I = x, y; \
             ideal K = generic_kitt 2 I; matrix M = [[x,0],[0,y]]; \
             specialize K M; dim I;",
        );
        assert!(out.contains("> specialize K M"));
        assert!(out.contains("dim = 0"));
    }

    #[test]
    fn kitt_precondition_failure() {
        let session =
            parse_session("ring R = QQ[x,y]; ideal a = x^2 + 1; ideal I = x, y; kitt a I;")
                .unwrap();
        assert!(run_session(&session).is_err());
    }

    #[test]
    fn verify_deformation_session() {
        let out = run_text(
            "ring R = QQ[x,y]; ideal a = x^2, y^2; ideal I = x, y; verify_deformation a I 2;",
        );
        assert!(out.contains("overall: pass"));
    }

    #[test]
    fn json_mode_shapes() {
        let session = parse_session("ring R = QQ[x]; ideal I = x; gb I; dim I;").unwrap();
        let json = render_json(&run_session(&session).unwrap());
        let lines: Vec<&str> = json.trim().lines().collect();
        assert_eq!(lines.len(), 2);
        let first: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
        assert_eq!(first["command"], "gb");
        assert!(first["generators"].is_array());
        let second: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
        assert!(second["report"]["dim"].is_number());
    }

    #[test]
    fn determinism() {
        let src = "ring R = QQ[x,y]; ideal I = x^2+y, x^5; generic_kitt 2 I; \
                   ideal a = x^3 + x*y, x^5*y; kitt a I;";
        assert_eq!(run_text(src), run_text(src));
    }
}
