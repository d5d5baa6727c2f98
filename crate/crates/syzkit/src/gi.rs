//! The `.gi` ideal file format: line-oriented UTF-8 with `field`,
//! `vars`, optional `param t` and `gen` lines. Parsing is total: every
//! input is either accepted or rejected with a line number.

use crate::error::{Error, Result};
use crate::family::ParametricIdeal;
use crate::ideal::GradedIdeal;
use crate::parse::{parse_parametric, ParametricPoly};
use crate::poly::RingContext;
use crate::scalar::FieldSpec;

/// A parsed `.gi` file.
#[derive(Debug, Clone)]
pub struct IdealFile {
    pub context: RingContext,
    pub has_param: bool,
    pub generators: Vec<ParametricPoly>,
}

impl IdealFile {
    /// Interpret as a plain graded ideal; rejects files that use the
    /// parameter.
    pub fn into_ideal(self) -> Result<GradedIdeal> {
        if self.generators.iter().any(|g| g.uses_parameter()) {
            return Err(Error::FileFormat {
                line: None,
                msg: "file uses the parameter t; load it as a family".to_string(),
            });
        }
        let zero = crate::scalar::FieldElement::zero(self.context.field);
        let gens = self
            .generators
            .iter()
            .map(|g| g.evaluate(&zero))
            .collect::<Result<Vec<_>>>()?;
        GradedIdeal::new(self.context, gens)
    }

    pub fn into_family(self) -> Result<ParametricIdeal> {
        if !self.has_param {
            return Err(Error::FileFormat {
                line: None,
                msg: "family files need a 'param t' line".to_string(),
            });
        }
        Ok(ParametricIdeal { context: self.context, generators: self.generators })
    }
}

pub fn parse_gi(text: &str) -> Result<IdealFile> {
    let mut field: Option<FieldSpec> = None;
    let mut vars: Option<usize> = None;
    let mut has_param = false;
    let mut gen_lines: Vec<(usize, String)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::FileFormat { line: Some(lineno), msg: msg.to_string() };
        let (keyword, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        match keyword {
            "field" => {
                if field.is_some() {
                    return Err(err("duplicate field line"));
                }
                field = Some(parse_field(rest, lineno)?);
            }
            "vars" => {
                if vars.is_some() {
                    return Err(err("duplicate vars line"));
                }
                let n: usize = rest.parse().map_err(|_| err("vars takes an integer"))?;
                if n < 2 {
                    return Err(err("need at least 2 variables"));
                }
                vars = Some(n);
            }
            "param" => {
                if rest != "t" {
                    return Err(err("only a single parameter 't' is supported"));
                }
                if has_param {
                    return Err(err("duplicate param line"));
                }
                has_param = true;
            }
            "gen" => {
                if rest.is_empty() {
                    return Err(err("empty generator"));
                }
                gen_lines.push((lineno, rest.to_string()));
            }
            other => {
                return Err(err(&format!("unknown directive '{other}'")));
            }
        }
    }

    let field = field.ok_or(Error::FileFormat { line: None, msg: "missing field line".into() })?;
    let vars = vars.ok_or(Error::FileFormat { line: None, msg: "missing vars line".into() })?;
    let context = RingContext::new(vars, field);
    let mut generators = Vec::with_capacity(gen_lines.len());
    for (lineno, text) in gen_lines {
        if !has_param && text.contains('t') {
            return Err(Error::FileFormat {
                line: Some(lineno),
                msg: "parameter 't' used without a 'param t' line".to_string(),
            });
        }
        let g = parse_parametric(&text, context).map_err(|e| Error::FileFormat {
            line: Some(lineno),
            msg: e.to_string(),
        })?;
        generators.push(g);
    }
    Ok(IdealFile { context, has_param, generators })
}

fn parse_field(text: &str, lineno: usize) -> Result<FieldSpec> {
    let err = |msg: &str| Error::FileFormat { line: Some(lineno), msg: msg.to_string() };
    match text {
        "Q" => Ok(FieldSpec::Rationals),
        _ => {
            let p = text
                .strip_prefix("F ")
                .or_else(|| text.strip_prefix("F"))
                .ok_or_else(|| err("field must be 'Q' or 'F <prime>'"))?;
            let p: u64 = p.trim().parse().map_err(|_| err("bad prime"))?;
            FieldSpec::prime_field(p).map_err(|_| err(&format!("{p} is not an odd prime")))
        }
    }
}

/// Render a graded ideal as a `.gi` file.
pub fn write_gi(ideal: &GradedIdeal, header_comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = header_comment {
        for line in c.lines() {
            out.push_str(&format!("# {line}\n"));
        }
    }
    let ctx = ideal.context();
    match ctx.field {
        FieldSpec::Rationals => out.push_str("field Q\n"),
        FieldSpec::PrimeField(p) => out.push_str(&format!("field F {p}\n")),
    }
    out.push_str(&format!("vars {}\n", ctx.num_vars));
    for g in ideal.generators() {
        out.push_str(&format!("gen {g}\n"));
    }
    out
}
