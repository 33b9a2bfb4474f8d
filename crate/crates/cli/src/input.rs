//! Loading ideals and clutters from fixtures and files.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::Value;
use sqfree_core::clutter::Clutter;
use sqfree_core::{fixtures, Monomial, MonomialIdeal};

#[derive(Clone, Debug)]
pub enum Input {
    Ideal(MonomialIdeal),
    Clutter(Clutter),
}

impl Input {
    pub fn into_ideal(self) -> MonomialIdeal {
        match self {
            Input::Ideal(i) => i,
            Input::Clutter(c) => c.to_ideal(),
        }
    }

    pub fn into_clutter(self) -> Result<Clutter> {
        Ok(match self {
            Input::Clutter(c) => c,
            Input::Ideal(i) => Clutter::from_ideal(&i)?,
        })
    }
}

/// Infers the variable count from the largest `x<k>` in the text.
fn parse_text(text: &str) -> Result<MonomialIdeal> {
    let text = text.trim().trim_start_matches('(').trim_end_matches(')');
    let vars = text
        .split(',')
        .map(|m| m.trim().parse::<Monomial>().map(|m| m.vars()))
        .collect::<std::result::Result<Vec<_>, _>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    if vars == 0 {
        bail!("cannot infer the number of variables from `{text}`");
    }
    Ok(MonomialIdeal::parse(text, vars)?)
}

/// JSON `{"vars", "generators"}` (ideal), JSON `{"vertices", "edges"}`
/// (clutter), or a comma-separated generator list such as `x1*x2, x2*x3`.
pub fn parse(text: &str) -> Result<Input> {
    match serde_json::from_str::<Value>(text) {
        Ok(value) if value.get("edges").is_some() => Ok(Input::Clutter(serde_json::from_value(value)?)),
        Ok(value) if value.get("generators").is_some() => Ok(Input::Ideal(serde_json::from_value(value)?)),
        Ok(_) => bail!("JSON input needs either `generators` or `edges`"),
        Err(_) => Ok(Input::Ideal(parse_text(text)?)),
    }
}

pub fn load(fixture: Option<&str>, file: Option<&Path>) -> Result<Input> {
    match (fixture, file) {
        (Some(name), None) => Ok(Input::Ideal(fixtures::named(name)?)),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            parse(&text).with_context(|| format!("parsing {}", path.display()))
        }
        (Some(_), Some(_)) => bail!("give either --fixture or an input file, not both"),
        (None, None) => bail!("no input: give --fixture NAME or an input file"),
    }
}
