//! Text and JSON forms of monomial ideals.
//!
//! Text form:
//!
//! ```text
//! vars: x1 x2 x3 x4
//! gens: x1^2*x2, x3*x4
//! ```
//!
//! JSON form: `{"n":4,"gens":[[2,1,0,0],[0,0,1,1]]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Exp, ExponentVector};

/// Variable names used when reading and printing ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarNames(Vec<String>);

impl VarNames {
    /// `x1, ..., xn`.
    pub fn standard(n: usize) -> Self {
        VarNames((1..=n).map(|k| format!("x{k}")).collect())
    }

    pub fn new(names: Vec<String>) -> Result<Self> {
        for (a, name) in names.iter().enumerate() {
            let mut chars = name.chars();
            let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::input(format!("invalid variable name {name:?}")));
            }
            if names[..a].contains(name) {
                return Err(Error::input(format!("duplicate variable name {name:?}")));
            }
        }
        Ok(VarNames(names))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, k: usize) -> &str {
        &self.0[k]
    }

    fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    pub fn render_monomial(&self, u: &ExponentVector) -> String {
        let factors: Vec<String> = u
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| {
                if e == 1 {
                    self.0[k].clone()
                } else {
                    format!("{}^{e}", self.0[k])
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }

    pub fn parse_monomial(&self, text: &str) -> Result<ExponentVector> {
        let text = text.trim();
        let mut exps = vec![0 as Exp; self.len()];
        if text == "1" {
            return Ok(ExponentVector::new(exps));
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((name, exp)) => (name.trim(), parse_exponent(exp.trim(), factor)?),
                None => (factor, 1),
            };
            let k = self
                .index_of(name)
                .ok_or_else(|| Error::input(format!("unknown variable {name:?} in {text:?}")))?;
            exps[k] = exps[k]
                .checked_add(exp)
                .ok_or(Error::Overflow("monomial parsing"))?;
        }
        Ok(ExponentVector::new(exps))
    }
}

fn parse_exponent(s: &str, factor: &str) -> Result<Exp> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::input(format!(
            "exponent in {factor:?} must be a nonnegative integer"
        )));
    }
    s.parse::<Exp>()
        .map_err(|_| Error::input(format!("exponent in {factor:?} is out of range")))
}

/// An ideal together with the variable names it was written in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedIdeal {
    pub vars: VarNames,
    pub ideal: MonomialIdeal,
}

impl NamedIdeal {
    pub fn standard(ideal: MonomialIdeal) -> Self {
        NamedIdeal { vars: VarNames::standard(ideal.n()), ideal }
    }

    /// Same variable names, different ideal.
    pub fn with(&self, ideal: MonomialIdeal) -> Self {
        NamedIdeal { vars: self.vars.clone(), ideal }
    }

    pub fn to_text(&self) -> String {
        let gens: Vec<String> = self
            .ideal
            .gens()
            .iter()
            .map(|g| self.vars.render_monomial(g))
            .collect();
        format!(
            "vars: {}\ngens: {}\n",
            (0..self.vars.len()).map(|k| self.vars.name(k)).collect::<Vec<_>>().join(" "),
            gens.join(", ")
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&IdealJson::from(&self.ideal)).expect("ideal JSON serializes")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealJson {
    n: usize,
    gens: Vec<Vec<Exp>>,
}

impl From<&MonomialIdeal> for IdealJson {
    fn from(i: &MonomialIdeal) -> Self {
        IdealJson {
            n: i.n(),
            gens: i.gens().iter().map(|g| g.coords().to_vec()).collect(),
        }
    }
}

pub fn ideal_to_json_value(i: &MonomialIdeal) -> serde_json::Value {
    serde_json::to_value(IdealJson::from(i)).expect("ideal JSON serializes")
}

/// Parse the text form.
pub fn parse_text(input: &str) -> Result<NamedIdeal> {
    let mut vars: Option<VarNames> = None;
    let mut gens_line: Option<&str> = None;
    for line in input.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars:") {
            if vars.is_some() {
                return Err(Error::input("duplicate `vars:` line"));
            }
            vars = Some(VarNames::new(rest.split_whitespace().map(str::to_string).collect())?);
        } else if let Some(rest) = line.strip_prefix("gens:") {
            if vars.is_none() {
                return Err(Error::input("`gens:` must follow a `vars:` line"));
            }
            if gens_line.is_some() {
                return Err(Error::input("duplicate `gens:` line"));
            }
            gens_line = Some(rest);
        } else {
            return Err(Error::input(format!("unrecognized line {line:?}")));
        }
    }
    let vars = vars.ok_or_else(|| Error::input("missing `vars:` line"))?;
    let gens_line = gens_line.ok_or_else(|| Error::input("missing `gens:` line"))?;
    let raw = if gens_line.trim().is_empty() {
        Vec::new()
    } else {
        gens_line
            .split(',')
            .map(|m| vars.parse_monomial(m))
            .collect::<Result<Vec<_>>>()?
    };
    let ideal = MonomialIdeal::minimalize(raw, vars.len())?;
    Ok(NamedIdeal { vars, ideal })
}

/// Parse the JSON form.
pub fn parse_json(input: &str) -> Result<NamedIdeal> {
    let raw: IdealJson =
        serde_json::from_str(input).map_err(|e| Error::input(format!("bad ideal JSON: {e}")))?;
    let ideal = MonomialIdeal::minimalize(raw.gens.into_iter().map(ExponentVector::new), raw.n)?;
    Ok(NamedIdeal::standard(ideal))
}

/// Parse either form, choosing JSON when the input starts with `{`.
pub fn parse_ideal(input: &str) -> Result<NamedIdeal> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let parsed = parse_text("vars: x1 x2 x3 x4\ngens: x1^2*x2, x3*x4\n").unwrap();
        assert_eq!(
            parsed.ideal,
            MonomialIdeal::from_vecs(4, &[&[2, 1, 0, 0], &[0, 0, 1, 1]]).unwrap()
        );
        assert_eq!(parsed.to_text(), "vars: x1 x2 x3 x4\ngens: x3*x4, x1^2*x2\n");
        assert_eq!(parse_text(&parsed.to_text()).unwrap(), parsed);
    }

    #[test]
    fn custom_names_and_degenerate_ideals() {
        let p = parse_text("# comment\nvars: x y z\ngens: y*x, x*x\n").unwrap();
        assert_eq!(p.to_text(), "vars: x y z\ngens: x^2, x*y\n");
        assert!(parse_text("vars: a b\ngens:\n").unwrap().ideal.is_zero());
        assert!(parse_text("vars: a b\ngens: 1\n").unwrap().ideal.is_unit());
    }

    #[test]
    fn json_form() {
        let p = parse_ideal(r#"{"n":4,"gens":[[2,1,0,0],[0,0,1,1]]}"#).unwrap();
        assert_eq!(p.to_json(), r#"{"n":4,"gens":[[0,0,1,1],[2,1,0,0]]}"#);
        assert!(parse_json(r#"{"n":2,"gens":[[1,-1]]}"#).is_err());
        assert!(parse_json(r#"{"n":2,"gens":[[1,1.5]]}"#).is_err());
        assert!(parse_json(r#"{"n":2,"gens":[[1,1,1]]}"#).is_err());
    }

    #[test]
    fn rejects_bad_exponents_and_names() {
        for bad in [
            "vars: x y\ngens: x^-1\n",
            "vars: x y\ngens: x^1.5\n",
            "vars: x y\ngens: x^1/2\n",
            "vars: x y\ngens: x^\n",
            "vars: x y\ngens: w\n",
            "vars: x x\ngens: x\n",
            "gens: x\n",
            "vars: x y\n",
        ] {
            assert!(matches!(parse_text(bad), Err(Error::Input(_))), "{bad:?}");
        }
    }
}
