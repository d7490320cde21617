//! Polynomial JSON: `{"vars": [...], "terms": [{"exp": [...], "coeff": "n/d"}]}`
//! with terms in graded-lex descending order.

use serde::{Deserialize, Serialize};

use super::multi::MultiPoly;
use super::rational::{format_rational, parse_rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn from_poly(p: &MultiPoly, vars: &[&str]) -> Result<Self> {
        if vars.len() != p.nvars() {
            return Err(Error::Arity(p.nvars(), vars.len()));
        }
        Ok(PolyJson {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: p
                .terms()
                .map(|(m, c)| TermJson { exp: m.exps().to_vec(), coeff: format_rational(c) })
                .collect(),
        })
    }

    pub fn to_poly(&self) -> Result<MultiPoly> {
        let n = self.vars.len();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.exp.len() != n {
                return Err(Error::Arity(n, t.exp.len()));
            }
            terms.push((t.exp.clone(), parse_rational(&t.coeff)?));
        }
        MultiPoly::from_terms(n, terms)
    }
}

pub fn poly_to_json_string(p: &MultiPoly, vars: &[&str]) -> Result<String> {
    serde_json::to_string_pretty(&PolyJson::from_poly(p, vars)?).map_err(|e| Error::Parse(e.to_string()))
}

pub fn poly_from_json_str(s: &str) -> Result<(MultiPoly, Vec<String>)> {
    let pj: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    Ok((pj.to_poly()?, pj.vars))
}
